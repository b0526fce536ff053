import pytest

from conftest import fixture_pair, key, keys, naive_of
from orthoposets.commutation import (
    CVerdict,
    arrow,
    c_relation,
    check_condition_1,
    commutator_d,
    delta,
    delta_rows,
    factorize,
    is_central,
    relation_matrix,
)
from orthoposets.constructions import FIXTURES, build_pnk, direct_product, load_fixture
from orthoposets.errors import NotCentral, NotOrthogonal, NotOrthomodular
from orthoposets.ortho import OrthoPoset
from orthoposets.poset import build_from_covers, order_isomorphism


def bool4():
    P = build_from_covers(["0", "p", "q", "1"], [("0", "p"), ("0", "q"), ("p", "1"), ("q", "1")])
    return OrthoPoset.of(P, [3, 2, 1, 0])


def test_delta_examples():
    for name in FIXTURES:
        P = load_fixture(name)
        assert all(delta(P, x, P.bottom) and delta(P, x, P.inv[x]) and delta(P, P.top, x)
                   for x in range(P.size))
    F = build_pnk(8, 2)
    D, E = F.element("1,2,3,4,5,6"), F.element("4,5,6,7")
    assert delta(F, D, E) and not delta(F, E, D)
    o6 = load_fixture("o6")
    assert not delta(o6, o6.idx("b"), o6.idx("a"))


@pytest.mark.parametrize("name", FIXTURES)
def test_relations_against_oracle(name):
    P, naive = fixture_pair(name)
    for x in range(P.size):
        for y in range(P.size):
            lx, ly = P.labels[x], P.labels[y]
            assert delta(P, x, y) == naive.delta(lx, ly)
            assert c_relation(P, x, y).value == naive.c_rel(lx, ly)
            assert keys(P, commutator_d(P, x, y).elements) == naive.d(lx, ly)


@pytest.mark.parametrize("name", ["o6", "fig1"])
def test_arrow_against_oracle(name):
    P, naive = fixture_pair(name)
    for x in range(P.size):
        for y in range(P.size):
            w = arrow(P, x, y)
            assert (w is not None) == naive.arrow(P.labels[x], P.labels[y])
            if w is not None:
                c, d, e = w
                assert P.perp(c, d) and P.perp(d, e) and P.perp(e, c)
                assert P.join(c, d) == x and P.join(d, e) == y


def test_arrow_pnk_fast_path_against_oracle():
    F = build_pnk(4, 2)
    naive = naive_of(F)
    for x in range(F.size):
        for y in range(F.size):
            assert (arrow(F, x, y) is not None) == naive.arrow(key(F, x), key(F, y))


def test_arrow_examples():
    P = load_fixture("fig1")
    for a in range(P.size):
        assert arrow(P, a, a) == (P.bottom, a, P.bottom)
    F = build_pnk(6, 2)
    assert arrow(F, F.element("1,2"), F.element("3,4")) is not None
    assert arrow(F, F.element("1,2"), F.element("2,3")) is None
    with pytest.raises(NotOrthogonal):
        arrow(load_fixture("fig7"), 1, 2)


def test_c_relation_examples():
    o6 = load_fixture("o6")
    a, b = o6.idx("a"), o6.idx("b")
    assert c_relation(o6, a, b) is CVerdict.HOLDS
    assert c_relation(o6, b, a) is CVerdict.FAILS
    for x in range(o6.size):
        assert c_relation(o6, x, x) is CVerdict.HOLDS
    F = build_pnk(6, 2)
    assert c_relation(F, F.element("1,2"), F.element("1,3")) is CVerdict.FAILS
    assert c_relation(load_fixture("fig6"), 1, 4) in tuple(CVerdict)


def test_commutator_examples():
    P = load_fixture("fig1")
    for a in range(P.size):
        for b in (P.bottom, a, P.inv[a], P.top):
            assert commutator_d(P, a, b).is_top_only(P)
    d = commutator_d(P, P.idx("a"), P.idx("b"))
    assert set(P.labels_of(d.elements)) == {"a'", "b'", "1"}
    assert d.format(P) == "d(a,b) = min{ b' a' }"
    F = build_pnk(12, 2)
    D, E = F.element("1,2,3,4,5,6"), F.element("4,5,6,7,8,9")
    assert commutator_d(F, D, E).is_top_only(F)
    assert arrow(F, D, E) is None


def test_relation_matrices():
    fig7 = load_fixture("fig7")
    assert relation_matrix(fig7, "delta").all_true()
    o6 = load_fixture("o6")
    dm, cm = relation_matrix(o6, "delta"), relation_matrix(o6, "c")
    assert all(dm[a, b] == (cm[a, b] is CVerdict.HOLDS) for a in range(6) for b in range(6))
    for name in FIXTURES:
        P = load_fixture(name)
        m = relation_matrix(P, "delta")
        assert all(m[x, P.bottom] and m[P.top, x] for x in range(P.size))
    am = relation_matrix(load_fixture("fig1"), "arrow")
    assert all(am[x, y] == am[y, x] for x in range(10) for y in range(10))
    with pytest.raises(NotOrthogonal):
        relation_matrix(fig7, "arrow")
    with pytest.raises(ValueError):
        relation_matrix(fig7, "nope")
    tsv = relation_matrix(o6, "c").to_tsv().splitlines()
    assert tsv[0] == "\t0\ta\tb'\tb\ta'\t1"
    assert len(tsv) == 7


def test_delta_rows_memoized():
    P = load_fixture("example3")
    assert delta_rows(P) is delta_rows(P)
    e, h = P.idx("e"), P.idx("h")
    assert not (delta_rows(P)[e] >> h) & 1


def test_central_elements():
    for name in FIXTURES:
        P = load_fixture(name)
        assert is_central(P, P.bottom)[0] and is_central(P, P.top)[0]
    Q = direct_product(bool4(), bool4())
    c = Q.idx("(1,0)")
    assert is_central(Q, c) == (True, None)
    assert check_condition_1(Q, c) == (True, None)
    F = build_pnk(4, 2)
    ok, x = is_central(F, F.element("1,2"))
    assert not ok and x is not None
    with pytest.raises(NotCentral):
        check_condition_1(F, F.element("1,2"))
    with pytest.raises(NotCentral):
        factorize(F, F.element("1,2"))


def test_factorize():
    Q = direct_product(bool4(), bool4())
    f = factorize(Q, Q.idx("(1,0)"))
    assert f.isomorphism
    assert order_isomorphism(f.lower, bool4()) is not None
    assert order_isomorphism(f.upper, bool4()) is not None
    assert len(set(f.mapping)) == Q.size
    P = load_fixture("example3")
    g = factorize(P, P.top)
    assert g.isomorphism and g.upper.size == 1
    assert order_isomorphism(g.lower, P) is not None
    # intervals only carry an orthomodular structure over an orthomodular ambient
    fig1 = load_fixture("fig1")
    with pytest.raises(NotOrthomodular):
        factorize(fig1, fig1.top)


def test_remark_properties_on_product():
    Q = direct_product(bool4(), bool4())
    c0 = Q.idx("(1,0)")
    for x in range(Q.size):
        assert delta(Q, x, c0)
        for y in range(Q.size):
            m = Q.meet(x, y)
            xl, yl = Q.labels[x][1:-1].split(","), Q.labels[y][1:-1].split(",")
            B = bool4()
            comp = (B.labels[B.meet(B.idx(xl[0]), B.idx(yl[0]))],
                    B.labels[B.meet(B.idx(xl[1]), B.idx(yl[1]))])
            assert Q.labels[m] == f"({comp[0]},{comp[1]})"
