# Copyright 2026 The qperturb Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Python bindings for the qperturb C++ library."""

from ._core import (
    Graph,
    QperturbError,
    aut_order,
    binary_tree,
    char_poly,
    circuit_shape,
    complete,
    dataset,
    eigenvalues,
    erdos_renyi,
    expectation,
    maxcut,
    optimize,
    perturb,
    rary_tree,
    random_regular,
    run_experiment,
    spectral_radius,
)

__all__ = [
    "Graph",
    "QperturbError",
    "aut_order",
    "binary_tree",
    "char_poly",
    "circuit_shape",
    "complete",
    "dataset",
    "eigenvalues",
    "erdos_renyi",
    "expectation",
    "maxcut",
    "optimize",
    "perturb",
    "rary_tree",
    "random_regular",
    "run_experiment",
    "spectral_radius",
]
