# Copyright 2026 The Crosscov Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Cross-coverage test suite augmentation for small equivalent programs."""

import json

from . import _core
from ._core import (
    Error,
    Program,
    SourceError,
    execute,
    inject,
    parse,
    percent,
    pretty_print,
)


def load_corpus(root, probe_budget=200):
    """Groups, members and probe flags of a corpus directory."""
    return _core.load_corpus(str(root), probe_budget)


def run_rq1(corpus, seed=1, jobs=1):
    """Coverage gain report for a corpus directory, as a dict."""
    return json.loads(_core.run_rq1_json(str(corpus), seed, jobs))


def run_rq2(corpus, seed=1, jobs=1):
    """Missing-functionality detection report, as a dict."""
    return json.loads(_core.run_rq2_json(str(corpus), seed, jobs))

__all__ = [
    "Error",
    "Program",
    "SourceError",
    "execute",
    "inject",
    "load_corpus",
    "parse",
    "percent",
    "pretty_print",
    "run_rq1",
    "run_rq2",
]
