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

import os
import pathlib

import pytest

import crosscov

ROOT = pathlib.Path(os.environ.get("CROSSCOV_SOURCE_DIR", pathlib.Path(__file__).parents[2]))
ABS = "fn abs(x:int)->int { if (x<0) { return -x; } return x; }"


def test_parse_and_print():
    p = crosscov.parse(ABS)
    assert p.statement_count == 3
    assert p.decision_count == 1
    assert p.signature == "(int) -> int"
    q = crosscov.parse(crosscov.pretty_print(p))
    assert crosscov.pretty_print(q) == crosscov.pretty_print(p)


def test_source_errors():
    with pytest.raises(crosscov.SourceError):
        crosscov.parse("fn g(x:int)->int { return x + }")
    with pytest.raises(crosscov.Error):
        crosscov.parse("fn f()->int { }")


def test_execute():
    p = crosscov.parse(ABS)
    r = crosscov.execute(p, [-5])
    assert r["outcome"] == "value(5)"
    assert r["statements"] == [0, 1]
    assert r["arms"] == [0]
    assert crosscov.execute(p, [3])["arms"] == [1]
    with pytest.raises(crosscov.Error):
        crosscov.execute(p, [True])


def test_inject():
    m = crosscov.inject(crosscov.parse(ABS), "abs")
    assert m["operator"] == "drop_then_arm"
    mutant = crosscov.parse(m["mutant"])
    assert crosscov.execute(mutant, [-1])["outcome"] == "value(-1)"
    assert crosscov.inject(crosscov.parse("fn f(x:int)->int { return x; }")) is None


def test_corpus_and_reports():
    corpus = crosscov.load_corpus(ROOT / "corpus")
    assert len(corpus["groups"]) >= 8
    assert not corpus["errors"]
    rq1 = crosscov.run_rq1(ROOT / "corpus")
    assert rq1["kind"] == "rq1"
    golden = (ROOT / "tests" / "golden" / "rq1.json").read_text()
    assert crosscov._core.run_rq1_json(str(ROOT / "corpus")) == golden
    rq2 = crosscov.run_rq2(ROOT / "corpus", jobs=2)
    assert rq2["counts"]["exactness_violations"] == 0


def test_percent():
    assert crosscov.percent(292, 336) == "86.90%"
