# Copyright 2026 The ctxmeasure Authors
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
"""Exact contextuality measures for finite measurement systems."""

from ctxmeasure._core import (
    Error,
    System,
    cyclic2_min_partial,
    delta0_cbd,
    delta0_present,
    disjoint_system,
    dump_lp,
    epr_model,
    measure,
    measure_fixed_model,
    median_binary,
    parse_system,
    parse_system_text,
    prbox_system,
    problem_sizes,
    selftest,
    solve_lp_text,
    write_system,
)

__all__ = [
    "Error",
    "System",
    "cyclic2_min_partial",
    "delta0_cbd",
    "delta0_present",
    "disjoint_system",
    "dump_lp",
    "epr_model",
    "measure",
    "measure_fixed_model",
    "median_binary",
    "parse_system",
    "parse_system_text",
    "prbox_system",
    "problem_sizes",
    "selftest",
    "solve_lp_text",
    "write_system",
]
