import pytest
from hypothesis import given, settings

from orthoposets import properties
from orthoposets.constructions import build_pnk, load_fixture
from orthoposets.poset import build_from_covers
from orthoposets.properties import PropertyResult, classify, corpus, property_names, run_corpus, run_suite
from strategies import families


@pytest.fixture(scope="module")
def corpus_results():
    return run_corpus()


def test_corpus_has_no_failures(corpus_results):
    failed = [(name, r.line()) for name, rs in corpus_results.items() for r in rs if r.status == "fail"]
    assert failed == []
    passed = sum(r.status == "pass" for rs in corpus_results.values() for r in rs)
    assert passed > 400


def test_every_property_runs_somewhere(corpus_results):
    ran = {r.name for rs in corpus_results.values() for r in rs if r.status == "pass"}
    assert set(property_names()) <= ran


def test_names_are_unique():
    names = property_names()
    assert len(names) == len(set(names))


def test_classify():
    assert classify(load_fixture("fig7")) == {"poset", "orthoposet"}
    assert "orthogonal" in classify(load_fixture("fig1"))
    assert "ortholattice" in classify(build_pnk(2, 1))
    assert "orthomodular" not in classify(load_fixture("fig1"))
    assert "orthomodular" in classify(load_fixture("example3"))
    assert "ortholattice" not in classify(load_fixture("example3"))
    tags = classify(build_pnk(4, 2))
    assert {"family", "pnk", "orthomodular"} <= tags
    chain = build_from_covers(["0", "1"], [("0", "1")])
    assert classify(chain) == {"poset"}


def test_gating_reports_skips():
    chain = build_from_covers(["0", "p", "1"], [("0", "p"), ("p", "1")])
    results = run_suite(chain)
    assert all(r.status in ("pass", "skip") for r in results)
    skipped = [r for r in results if r.status == "skip"]
    assert skipped and all(r.detail.startswith("needs ") for r in skipped)
    fig7 = {r.name: r for r in run_suite(load_fixture("fig7"))}
    needs_om = [name for name, needs, _ in properties._REGISTRY if needs == "orthomodular"]
    assert needs_om and all(fig7[n].status == "skip" for n in needs_om)


def test_only_filter():
    name = property_names()[0]
    assert [r.name for r in run_suite(load_fixture("o6"), only=[name])] == [name]


def test_result_line():
    assert PropertyResult("x", "fail", "at (a, b)").line() == "FAIL  x  at (a, b)"
    assert PropertyResult("x", "pass").line() == "PASS  x"


def test_corpus_contents():
    c = corpus()
    assert {"fig1", "o6", "fig6", "fig7", "example3", "pnk62", "balanced"} <= set(c)


@settings(max_examples=25, deadline=None)
@given(families(max_ground=4))
def test_suite_on_random_families(F):
    failed = [r.line() for r in run_suite(F) if r.status == "fail"]
    assert failed == []
