# Copyright 2026 The kummerlab Authors
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
"""Symbol algebras of prime degree, Kummer elements and weight-1 chains."""

import json

from ._kummerlab import (
    Algebra,
    Elem,
    KummerError,
    __version__,
    cli,
    connect,
    decompose,
    labels,
    suite_names,
    verify_chain,
)
from ._kummerlab import run_suite_json as _run_suite_json


def run_suite(name, p=5, q=11, alpha=2, beta=3, trials=None, seed=0):
    """Runs one harness suite and returns its report as a dict."""
    return json.loads(_run_suite_json(name, p, q, alpha, beta, trials, seed))


__all__ = [
    "Algebra",
    "Elem",
    "KummerError",
    "__version__",
    "cli",
    "connect",
    "decompose",
    "labels",
    "run_suite",
    "suite_names",
    "verify_chain",
]
