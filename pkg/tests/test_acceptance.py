"""Acceptance criteria, one test each.

Every test records a single ``criterion N: PASS|FAIL`` line, shown in the
pytest summary. Run ``python3 tests/test_acceptance.py`` for the same lines
without pytest.
"""

import contextlib
import io
import sys
from itertools import combinations
from math import comb

from conftest import ACCEPTANCE_LINES
from orthoposets import cli, config, properties
from orthoposets.axioms import (
    OM_METHODS,
    check_boolean,
    check_lattice,
    check_modular,
    check_orthomodular,
    find_o6,
    modular_violation,
    replay,
)
from orthoposets.blocks import (
    boolean_block_decomposition,
    delta_blocks,
    is_maximal_sub_ortholattice,
    is_sub_ortholattice,
    maximal_boolean_subalgebras,
    maximal_sub_ortholattices,
)
from orthoposets.commutation import (
    arrow,
    c_relation,
    CVerdict,
    check_condition_1,
    commutator_d,
    delta,
    factorize,
    is_central,
    relation_matrix,
)
from orthoposets.constructions import (
    build_balanced,
    build_pnk,
    direct_product,
    example3_from_family,
    fixture_text,
    interval_orthoposet,
    load_fixture,
    ortho_closure,
    star_sublattice,
)
from orthoposets.formats import write_orthoposet
from orthoposets.ortho import OrthoPoset, check_orthogonal, check_orthoposet
from orthoposets.poset import bits, build_from_covers, mask_of, order_isomorphism

B = {
    1: "empty a e i a' e' i' N",
    2: "empty a f h a' f' h' N",
    3: "empty b d i b' d' i' N",
    4: "empty b f g b' f' g' N",
    5: "empty c d h c' d' h' N",
    6: "empty c e g c' e' g' N",
}
# P_a = B1 ∪ B2, ..., P_i = B1 ∪ B3
UNIONS = {"a": (1, 2), "b": (3, 4), "c": (5, 6), "d": (3, 5), "e": (1, 6),
          "f": (2, 4), "g": (4, 6), "h": (2, 5), "i": (1, 3)}


def criterion(n: int, title: str, run):
    """Evaluate ``run() -> [(check, ok)]`` and record one line for criterion n."""
    try:
        checks = run()
        bad = [name for name, ok in checks if not ok]
    except Exception as exc:  # a crash is a failed criterion too
        bad = [f"raised {type(exc).__name__}: {exc}"]
    status = "FAIL" if bad else "PASS"
    line = f"criterion {n:>2}: {status}  {title}"
    if bad:
        line += "  [" + "; ".join(bad) + "]"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert not bad, line


def bmask(P, i):
    return P.mask(B[i].split())


def bool4():
    P = build_from_covers(["0", "p", "q", "1"], [("0", "p"), ("0", "q"), ("p", "1"), ("q", "1")])
    return OrthoPoset.of(P, [3, 2, 1, 0])


# -- 1 ----------------------------------------------------------------------

def _c1():
    P = load_fixture("fig1")
    a, dp, ap = (P.idx(s) for s in ("a", "d'", "a'"))
    om = check_orthomodular(P)
    v = om.failures()[0] if not om.passed else None
    blocks = delta_blocks(P)
    shapes = all(b.size == 4 and P.bottom in b.members() and P.top in b.members()
                 and any(P.inv[x] in b.members() for x in b.members() if x not in (P.bottom, P.top))
                 for b in blocks)
    return [
        ("orthoposet", check_orthoposet(P, P.inv).passed),
        ("orthogonal", check_orthogonal(P).passed),
        ("orthomodular fails", not om.passed),
        ("witness replays", v is not None and replay(P, "orthomodular", v.witness)),
        ("witness is (a, d')", v is not None and v.witness == (a, dp)),
        ("a ≤ d' and a ∨ (d' ∧ a') = a ≠ d'",
         P.leq(a, dp) and P.join(a, P.meet(dp, ap)) == a != dp),
        ("O6 copy found", find_o6(P) != []),
        ("exactly 4 blocks {0,x,x',1}", len(blocks) == 4 and shapes),
    ]


def test_criterion_01_fig1():
    criterion(1, "fig1: orthogonal, not orthomodular (a, d'), O6 present, four Δ-blocks", _c1)


# -- 2 ----------------------------------------------------------------------

def _c2():
    P = load_fixture("o6")
    report = check_orthomodular(P, "all")  # raises if the routes disagree
    dm, cm = relation_matrix(P, "delta"), relation_matrix(P, "c")
    equal = all(dm[x, y] == (cm[x, y] is CVerdict.HOLDS)
                and (c_relation(P, x, y) is not CVerdict.UNDEFINED)
                for x in range(P.size) for y in range(P.size))
    return [
        ("five methods present", len(report.verdicts) == len(OM_METHODS) == 5),
        ("all five fail", not any(v.passed for v in report.verdicts)),
        ("Δ matrix equals C matrix", equal),
    ]


def test_criterion_02_o6():
    criterion(2, "o6: five orthomodularity routes agree on fail; Δ = C pointwise", _c2)


# -- 3 ----------------------------------------------------------------------

def _c3():
    F = build_pnk(6, 2)
    k, M, full = 2, F.members, (1 << 6) - 1
    ok = {name: True for name in ("perp", "arrow", "UL small", "UL large", "Δ", "d", "|A|=k")}
    for x in range(F.size):
        A = M[x]
        for y in range(F.size):
            Bm = M[y]
            ab, abp, apb, apbp = A & Bm, A & ~Bm & full, ~A & Bm & full, ~A & ~Bm & full
            ok["perp"] &= F.perp(x, y) == (ab == 0)
            has_arrow = arrow(F, x, y) is not None
            ok["arrow"] &= has_arrow == (ab in F.member_index)
            ul = F.upper_cone(F.lower_cone((1 << x) | (1 << y)))
            if ab.bit_count() < k:
                ok["UL small"] &= ul == F.full
            else:
                ok["UL large"] &= ul == mask_of(i for i, C in enumerate(M) if C & ab == ab)
            if ab.bit_count() >= k and abp.bit_count() >= k:
                ok["Δ"] &= delta(F, x, y)
            if min(s.bit_count() for s in (ab, abp, apb, apbp)) >= k:
                ok["d"] &= commutator_d(F, x, y).is_top_only(F)
            if A.bit_count() == k:
                ok["|A|=k"] &= delta(F, x, y) == has_arrow
    return [
        ("32 members", F.size == 32),
        ("orthomodular", check_orthomodular(F).passed),
        ("not a lattice", not F.is_lattice()),
        ("A ⊥ B iff disjoint", ok["perp"]),
        ("A ↔ B iff A ∩ B is a member", ok["arrow"]),
        ("UL(A,B) = P when |A∩B| < k", ok["UL small"]),
        ("UL(A,B) = supersets of A∩B otherwise", ok["UL large"]),
        ("Δ from large intersections", ok["Δ"]),
        ("d(A,B) = {N} from four large intersections", ok["d"]),
        ("Δ iff ↔ when |A| = k", ok["|A|=k"]),
    ]


def test_criterion_03_pnk62():
    criterion(3, "P_{6,2}: 32 members, orthomodular, not a lattice, pairwise laws exhaustive", _c3)


# -- 4 ----------------------------------------------------------------------

def _c4():
    out = []
    for n in range(1, 13):
        for k in range(1, n + 1):
            if n % k == 0:
                expected = k == 1 or n // k <= 2
                out.append((f"P_{{{n},{k}}}", build_pnk(n, k).is_lattice() == expected))
    return out


def test_criterion_04_lattice_grid():
    criterion(4, "P_nk is a lattice iff k = 1 or n/k ≤ 2, all k | n, n ≤ 12", _c4)


# -- 5 ----------------------------------------------------------------------

def _c5():
    F8 = build_pnk(8, 2)
    D, E = F8.element("1,2,3,4,5,6"), F8.element("4,5,6,7")
    F12 = build_pnk(12, 2)
    D2, E2 = F12.element("1,2,3,4,5,6"), F12.element("4,5,6,7,8,9")
    return [
        ("n=8: D Δ E", delta(F8, D, E)),
        ("n=8: not E Δ D", not delta(F8, E, D)),
        ("n=12: not D ↔ E", arrow(F12, D2, E2) is None),
        ("n=12: d(D,E) = {N}", commutator_d(F12, D2, E2).elements == 1 << F12.top),
    ]


def test_criterion_05_asymmetry():
    criterion(5, "P_{8,2} asymmetric Δ; P_{12,2} non-commuting pair with d = {N}", _c5)


# -- 6 ----------------------------------------------------------------------

def _c6():
    P = build_balanced({1, 2, 3}, {4, 5, 6})
    F = build_pnk(6, 2)
    seed = mask_of(F.element(s) for s in ("1,4", "1,5", "1,2,4,5", "1,3,4,5"))
    closed = ortho_closure(F, seed)
    x, y = P.element("1,4"), P.element("1,5")
    ex3 = load_fixture("example3")
    a, bp, ip = (ex3.idx(s) for s in ("a", "b'", "i'"))
    return [
        ("20 members", P.size == 20),
        ("equals the closure of the seed in P_{6,2}",
         {F.members[i] for i in bits(closed)} == set(P.members)),
        ("orthomodular", check_orthomodular(P).passed),
        ("not a lattice", not check_lattice(P).passed and not P.is_lattice()),
        ("({1,4},{1,5}) has no join", P.join(x, y) is None and replay(P, "lattice", (x, y))),
        ("example3 fixture is this family relabeled",
         write_orthoposet(example3_from_family()) == fixture_text("example3")
         and order_isomorphism(ex3, P) is not None),
        ("not modular", not check_modular(ex3).passed),
        ("(a, b', i') violates modularity", modular_violation(ex3, a, bp, ip)),
    ]


def test_criterion_06_balanced():
    criterion(6, "balanced family: 20 members, closure of the seed, OMP, not a lattice", _c6)


# -- 7 ----------------------------------------------------------------------

def _c7():
    P = load_fixture("example3")
    expected_b = {bmask(P, i) for i in B}
    boolean = maximal_boolean_subalgebras(P)
    subs = maximal_sub_ortholattices(P)
    twelve = {s.elements for s in subs if s.size == 12}
    expected_12 = {bmask(P, i) | bmask(P, j) for i, j in UNIONS.values()}
    dec = boolean_block_decomposition(P, bmask(P, 1) | bmask(P, 2))
    return [
        ("Boolean subalgebras are B1..B6",
         boolean.complete and {s.elements for s in boolean} == expected_b and len(boolean) == 6),
        ("nine 12-element maximal sub-ortholattices", subs.complete and len(twelve) == 9),
        ("they are the unions P_a .. P_i", twelve == expected_12),
        ("decomposition of P_a is {B1, B2}",
         {b.elements for b in dec.blocks} == {bmask(P, 1), bmask(P, 2)}),
        ("center is {empty, a, a', N}", dec.center == P.mask(["empty", "a", "a'", "N"])),
        ("not e Δ h", not delta(P, P.idx("e"), P.idx("h"))),
    ]


def test_criterion_07_example3_substructures():
    criterion(7, "example3: B1..B6, the nine 12-element unions, P_a = B1 ∪ B2, not e Δ h", _c7)


# -- 8 ----------------------------------------------------------------------

def _c8():
    F = build_pnk(6, 2)
    full = (1 << 6) - 1
    out, seen = [], set()
    for pts in combinations(range(1, 7), 2):
        A = mask_of(p - 1 for p in pts)
        star = star_sublattice(F, A)
        S = star.elements
        seen.add(S)
        dec = boolean_block_decomposition(F, S)
        center = F.mask(["empty", F.labels[F.member_index[A]],
                         F.labels[F.member_index[full ^ A]], F.labels[F.top]])
        pairwise = all(b1.elements & b2.elements == center
                       for b1, b2 in combinations(dec.blocks, 2))
        name = ",".join(map(str, pts))
        out += [
            (f"|P_{{{name}}}| = 16", S.bit_count() == 16 == 4 + 2 * comb(4, 2)),
            (f"P_{{{name}}} sub-ortholattice", bool(is_sub_ortholattice(F, S))),
            (f"P_{{{name}}} maximal", bool(is_maximal_sub_ortholattice(F, S))),
            (f"P_{{{name}}} has 3 eight-element Boolean blocks",
             dec.complete and len(dec.blocks) == 3 and all(b.size == 8 for b in dec.blocks)),
            (f"P_{{{name}}} blocks meet in {{∅,A,A',N}}", pairwise),
        ]
    out.append(("15 distinct stars", len(seen) == 15))
    return out


def test_criterion_08_stars():
    criterion(8, "P_{6,2}: all 15 stars P_A have 16 elements, are maximal, split into 3 blocks", _c8)


# -- 9 ----------------------------------------------------------------------

def _identity_everywhere(P) -> bool:
    for a in range(P.size):
        for b in bits(P.up[a]):
            for x in bits(P.up[a] & P.down[b]):
                xp = P.inv[x]
                j, m = P.join(xp, a), P.meet(xp, b)
                lhs = None if j is None else P.meet(j, b)
                rhs = None if m is None else P.join(m, a)
                if lhs is None or lhs != rhs:
                    return False
            interval_orthoposet(P, a, b)  # raises if the interval is not an OMP
    return True


def _c9():
    ex3 = load_fixture("example3")
    Q = interval_orthoposet(ex3, ex3.idx("empty"), ex3.idx("i'"))
    plus = {Q.labels[x]: Q.labels[Q.inv[x]] for x in range(Q.size)}
    out = [("complement table a⁺=e, b⁺=d, d⁺=b, e⁺=a",
            Q.size == 6 and (plus["a"], plus["b"], plus["d"], plus["e"]) == ("e", "d", "b", "a")
            and plus["empty"] == "i'")]
    om = {name: P for name, P in properties.corpus().items()
          if "orthomodular" in properties.classify(P)}
    for name, P in sorted(om.items()):
        out.append((f"identity on every interval of {name}", _identity_everywhere(P)))
    return out


def test_criterion_09_intervals():
    criterion(9, "interval [empty, i'] of example3; (x'∨a)∧b = (x'∧b)∨a on all intervals", _c9)


# -- 10 ---------------------------------------------------------------------

def _c10():
    b4 = bool4()
    Q = direct_product(b4, b4)
    c = Q.idx("(1,0)")
    f = factorize(Q, c)
    c0 = Q.idx("(1,0)")
    remark_delta = all(delta(Q, x, c0) for x in range(Q.size))
    meets = True
    for x in range(Q.size):
        for y in range(Q.size):
            i1, j1 = divmod(x, b4.size)
            i2, j2 = divmod(y, b4.size)
            meets &= Q.meet(x, y) == b4.meet(i1, i2) * b4.size + b4.meet(j1, j2)
    return [
        ("(1,0) is central", is_central(Q, c)[0]),
        ("condition (1) holds", check_condition_1(Q, c)[0]),
        ("factorization is an isomorphism", f.isomorphism),
        ("lower factor ≅ 2²", order_isomorphism(f.lower, b4) is not None),
        ("upper factor ≅ 2²", order_isomorphism(f.upper, b4) is not None),
        ("(x,y) Δ (c,0) throughout", remark_delta),
        ("meets are componentwise", meets),
    ]


def test_criterion_10_factorization():
    criterion(10, "2² × 2² with c = (1,0): central, factorizes into the two factors", _c10)


# -- 11 ---------------------------------------------------------------------

def _c11():
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = cli.main(["verify", "--all-fixtures"])
    lines = buf.getvalue().splitlines()
    failed = [line for line in lines if "\tFAIL" in line]
    return [
        ("verify --all-fixtures exits 0", code == 0),
        ("no failing property", failed == []),
        ("summary reports 0 failed", bool(lines) and lines[-1].startswith("0 failed of ")),
    ]


def test_criterion_11_property_suite():
    criterion(11, "verify --all-fixtures: every property passes on the bundled corpus", _c11)


# -- 12 ---------------------------------------------------------------------

def _c12():
    f6 = load_fixture("fig6")
    f7 = load_fixture("fig7")
    a, d = f6.idx("a"), f6.idx("d")
    blocks = delta_blocks(f7)
    return [
        ("fig6 Boolean", check_boolean(f6).passed),
        ("fig6 not orthogonal", not check_orthogonal(f6).passed),
        ("fig6: a ⊥ d without a join", f6.perp(a, d) and f6.join(a, d) is None
         and replay(f6, "orthogonal", (a, d))),
        ("fig7 Boolean", check_boolean(f7).passed),
        ("fig7 not a lattice", not f7.is_lattice()),
        ("fig7 Δ matrix all true", relation_matrix(f7, "delta").all_true()),
        ("fig7 single Δ-block", [b.elements for b in blocks] == [f7.full]),
    ]


def test_criterion_12_fig6_fig7():
    criterion(12, "fig6 Boolean but not orthogonal (a, d); fig7 Boolean, not a lattice, one block", _c12)


if __name__ == "__main__":
    config.set_verification(True)
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_criterion_")]
    failures = 0
    for t in tests:
        try:
            t()
        except AssertionError:
            failures += 1
    print(f"{len(tests) - failures} of {len(tests)} criteria pass")
    sys.exit(1 if failures else 0)
