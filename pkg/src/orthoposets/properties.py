"""Executable property suite.

Each property is a function ``(P, ctx) -> None | str`` returning a failure
description, or None on success. Properties declare the weakest structure
they need (poset < orthoposet < orthogonal < orthomodular, plus the extra
tags ``ortholattice``, ``family`` and ``pnk``). ``run_suite`` reports a
property as skipped when the structure does not reach that level, so no
hypothesis is ever assumed silently.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import axioms, blocks, commutation, config
from .commutation import CVerdict, arrow, c_relation, commutator_d, delta, delta_rows
from .constructions import (
    build_balanced,
    build_pnk,
    direct_product,
    example3_from_family,
    interval_orthoposet,
    load_fixture,
    ortho_closure,
    star_sublattice,
)
from .errors import OrthoposetError
from .formats import read_structure, write_structure
from .ortho import OrthoPoset, check_orthoposet
from .poset import FinitePoset, bits, build_from_covers, mask_of

LEVELS = ("poset", "orthoposet", "orthogonal", "orthomodular")
SUBSET_LIMIT = 10  # all subsets are enumerated up to this many elements


@dataclass(frozen=True)
class PropertyResult:
    name: str
    status: str       # pass | fail | skip
    detail: str = ""

    def line(self) -> str:
        out = f"{self.status.upper():<4}  {self.name}"
        return out + (f"  {self.detail}" if self.detail else "")


_REGISTRY: list[tuple[str, str, object]] = []


def prop(name: str, needs: str = "poset"):
    def deco(fn):
        _REGISTRY.append((name, needs, fn))
        return fn
    return deco


def property_names() -> list[str]:
    return [name for name, _, _ in _REGISTRY]


def classify(P: FinitePoset) -> set[str]:
    """Tags the structure provably carries."""
    tags = {"poset"}
    if not isinstance(P, OrthoPoset):
        return tags
    if P.bottom is None or P.top is None or not check_orthoposet(P, P.inv).passed:
        return tags
    tags.add("orthoposet")
    if P.is_lattice():
        tags.add("ortholattice")
    if P.is_orthogonal:
        tags.add("orthogonal")
        if axioms.is_orthomodular(P):
            tags.add("orthomodular")
    if hasattr(P, "members"):
        tags.add("family")
        if P.pnk_divisor is not None:
            tags.add("pnk")
    return tags


def run_suite(P: FinitePoset, only: list[str] | None = None) -> list[PropertyResult]:
    tags = classify(P)
    ctx: dict = {}
    out = []
    for name, needs, fn in _REGISTRY:
        if only is not None and name not in only:
            continue
        if needs not in tags:
            out.append(PropertyResult(name, "skip", f"needs {needs}"))
            continue
        try:
            detail = fn(P, ctx)
        except OrthoposetError as exc:
            detail = f"raised {type(exc).__name__}: {exc}"
        out.append(PropertyResult(name, "pass" if detail is None else "fail", detail or ""))
    return out


def _lab(P, *xs) -> str:
    return "(" + ", ".join(P.labels[x] for x in xs) + ")"


def _first(P, gen):
    """First tuple produced by ``gen`` rendered with labels, or None."""
    for w in gen:
        return _lab(P, *w)
    return None


def _pairs(P):
    m = P.size
    return ((a, b) for a in range(m) for b in range(m))


def _test_sets(P):
    m = P.size
    if m <= SUBSET_LIMIT:
        yield from range(1 << m)
        return
    yield 0
    for a in range(m):
        yield 1 << a
    for a, b in combinations(range(m), 2):
        yield (1 << a) | (1 << b)


def _blocks(P, ctx):
    if "blocks" not in ctx:
        ctx["blocks"] = blocks.delta_blocks(P)
    return ctx["blocks"]


# -- poset laws -------------------------------------------------------------

@prop("cones-galois")
def _cones_galois(P, ctx):
    L, U = P.lower_cone, P.upper_cone
    for A in _test_sets(P):
        la, ua = L(A), U(A)
        if not P.is_down_closed(la) or not P.is_up_closed(ua):
            return f"cone of {P.labels_of(A)} not closed"
        if A & ~U(la) or A & ~L(ua):
            return f"A not inside UL(A) or LU(A) for {P.labels_of(A)}"
        if L(U(la)) != la or U(L(ua)) != ua:
            return f"LUL or ULU differs for {P.labels_of(A)}"
        for x in range(P.size):
            B = A | (1 << x)
            if L(B) & ~la or U(B) & ~ua:
                return f"cones not antitone at {P.labels_of(A)} + {P.labels[x]}"
    return None


@prop("join-cone")
def _join_cone(P, ctx):
    for x, y in _pairs(P):
        j = P.join(x, y)
        if j is not None and P.up[x] & P.up[y] != P.up[j]:
            return f"U(x,y) != U(x v y) at {_lab(P, x, y)}"
        m = P.meet(x, y)
        if m is not None and P.down[x] & P.down[y] != P.down[m]:
            return f"L(x,y) != L(x ^ y) at {_lab(P, x, y)}"
    return None


@prop("covers-roundtrip")
def _covers_roundtrip(P, ctx):
    labels = P.labels
    Q = build_from_covers(labels, [(labels[x], labels[y]) for x, y in P.covers()])
    return None if Q.up == P.up else "rebuilding from covers changes the order"


@prop("format-roundtrip", "orthoposet")
def _format_roundtrip(P, ctx):
    text = write_structure(P)
    again = write_structure(read_structure(text))
    return None if again == text else "write(read(write(P))) differs from write(P)"


# -- axiom ladder -----------------------------------------------------------

@prop("om-methods-agree", "orthogonal")
def _om_agree(P, ctx):
    report = axioms.check_orthomodular(P, "all")
    verdicts = {v.passed for v in report.verdicts}
    return None if len(verdicts) == 1 else "orthomodularity methods disagree"


@prop("modular-orthogonal-is-orthomodular", "orthogonal")
def _modular_om(P, ctx):
    if axioms.check_modular(P).passed and not axioms.is_orthomodular(P):
        return "modular and orthogonal but not orthomodular"
    return None


@prop("distributive-is-modular")
def _dist_modular(P, ctx):
    if axioms.check_distributive(P).passed and not axioms.check_modular(P).passed:
        return "distributive but not modular"
    return None


@prop("all-delta-excludes-o6", "orthoposet")
def _all_delta_o6(P, ctx):
    rows = delta_rows(P)
    if all(r == P.full for r in rows):
        occ = axioms.find_o6(P)
        if occ:
            return f"Δ holds everywhere but O6 at {_lab(P, *occ[0])}"
    return None


@prop("witness-replay", "orthoposet")
def _witness_replay(P, ctx):
    for v in axioms.axiom_ladder(P).failures():
        if not axioms.replay(P, v.axiom, v.witness):
            return f"witness for {v.axiom} does not replay: {v.labels}"
    return None


# -- Δ, d and C on orthoposets ----------------------------------------------

@prop("below-implies-delta", "orthoposet")
def _below_delta(P, ctx):
    return _first(P, ((x, y) for x, y in _pairs(P) if P.leq(x, y) and not delta(P, x, y)))


@prop("delta-with-bounds-and-complement", "orthoposet")
def _delta_bounds(P, ctx):
    inv, z, t = P.inv, P.bottom, P.top
    return _first(P, ((a,) for a in range(P.size)
                      if not (delta(P, a, z) and delta(P, a, inv[a]) and delta(P, t, a))))


@prop("delta-prime-invariant", "orthoposet")
def _delta_prime(P, ctx):
    inv = P.inv
    return _first(P, ((a, b) for a, b in _pairs(P) if delta(P, a, b) != delta(P, a, inv[b])))


@prop("commutator-aliases", "orthoposet")
def _d_aliases(P, ctx):
    inv = P.inv
    for a, b in _pairs(P):
        ref = commutation._d_mask(P, a, b)
        for x, y in ((b, a), (a, inv[b]), (inv[a], b), (inv[a], inv[b])):
            if commutation._d_mask(P, x, y) != ref:
                return f"d{_lab(P, a, b)} != d{_lab(P, x, y)}"
    return None


@prop("delta-both-gives-trivial-commutator", "orthoposet")
def _delta_d(P, ctx):
    inv = P.inv
    for a, b in _pairs(P):
        if delta(P, a, b) and delta(P, inv[a], b) and not commutator_d(P, a, b).is_top_only(P):
            return f"d{_lab(P, a, b)} != {{1}}"
    return None


@prop("trivial-commutators", "orthoposet")
def _d_trivial(P, ctx):
    for a in range(P.size):
        for b in (P.bottom, a, P.inv[a], P.top):
            if not commutator_d(P, a, b).is_top_only(P):
                return f"d{_lab(P, a, b)} != {{1}}"
    return None


@prop("distributive-triple-gives-delta", "orthoposet")
def _dist_triple(P, ctx):
    for a, b in _pairs(P):
        S = (1 << a) | (1 << b) | (1 << P.inv[b])
        if axioms.check_distributive(P.induced_subposet(S)).passed and not delta(P, a, b):
            return f"{{a,b,b'}} distributive but not a Δ b at {_lab(P, a, b)}"
    return None


@prop("delta-iff-c", "ortholattice")
def _delta_c(P, ctx):
    return _first(P, ((a, b) for a, b in _pairs(P)
                      if delta(P, a, b) != (c_relation(P, a, b) == CVerdict.HOLDS)))


# -- Δ-blocks ---------------------------------------------------------------

@prop("delta-blocks-verified", "orthoposet")
def _blocks_verified(P, ctx):
    for B in _blocks(P, ctx):
        if not blocks.is_delta_block(P, B.elements):
            return f"{B.format(P)} fails is_delta_block"
        if not (B.elements >> P.bottom) & 1 or not (B.elements >> P.top) & 1:
            return f"{B.format(P)} misses a bound"
    return None


@prop("block-commutators-trivial", "orthoposet")
def _block_d(P, ctx):
    for B in _blocks(P, ctx):
        for a in bits(B.elements):
            for b in bits(B.elements):
                if not commutator_d(P, a, b).is_top_only(P):
                    return f"d{_lab(P, a, b)} != {{1}} inside {B.format(P)}"
    return None


def _ambient_om_violation(P, S):
    """x <= y in S with x ∨ (y ∧ x') undefined or different from y (operations of P)."""
    inv = P.inv
    for x in bits(S):
        for y in bits(S & P.up[x]):
            m = P.meet(y, inv[x])
            j = None if m is None else P.join(x, m)
            if j != y:
                return (x, y)
    return None


@prop("delta-blocks-orthomodular", "orthogonal")
def _blocks_om(P, ctx):
    for B in _blocks(P, ctx):
        w = _ambient_om_violation(P, B.elements)
        if w is not None:
            return f"orthomodular law fails at {_lab(P, *w)} in {B.format(P)}"
        Q = P.restrict(B.elements)
        if not Q.is_orthogonal or not axioms.is_orthomodular(Q):
            return f"induced {B.format(P)} is not orthomodular"
    return None


@prop("delta-blocks-weakly-boolean", "orthomodular")
def _blocks_wb(P, ctx):
    for B in _blocks(P, ctx):
        if not axioms.check_weakly_boolean(P.restrict(B.elements)).passed:
            return f"{B.format(P)} is not weakly Boolean"
    return None


@prop("delta-blocks-boolean", "orthomodular")
def _blocks_boolean(P, ctx):
    for B in _blocks(P, ctx):
        S = B.elements
        Q = P.restrict(S)
        if not axioms.check_maximality_property(Q).passed:
            return f"{B.format(P)} lacks the property of maximality"
        if not axioms.check_boolean(Q).passed:
            return f"{B.format(P)} is not Boolean"
        if not blocks.is_sub_ortholattice(P, S):
            return f"{B.format(P)} is not a sub-ortholattice"
        found = blocks.is_boolean_subalgebra(P, S)
        if not found:
            return f"{B.format(P)} is not a Boolean subalgebra: {found.reason}"
    return None


@prop("boolean-subalgebras-inside-blocks", "orthoposet")
def _boolean_in_blocks(P, ctx):
    result = blocks.maximal_boolean_subalgebras(P)
    if not result.complete:
        return "Boolean subalgebra search incomplete"
    rows = delta_rows(P)
    block_sets = [B.elements for B in _blocks(P, ctx)]
    for A in result:
        S = A.elements
        if any(rows[x] & S != S for x in bits(S)):
            return f"Δ fails inside {A.format(P)}"
        if not any(S & B == S for B in block_sets):
            return f"{A.format(P)} lies in no Δ-block"
    return None


@prop("sub-ortholattices-in-blocks-distributive", "orthoposet")
def _sol_in_blocks(P, ctx):
    base = (1 << P.bottom) | (1 << P.top)
    for B in _blocks(P, ctx):
        orbits = [o for o in P.orbits() if o & B.elements == o and o != base]
        if len(orbits) > 12:
            return f"{B.format(P)} has too many orbits to enumerate"
        for r in range(len(orbits) + 1):
            for combo in combinations(orbits, r):
                S = base | sum(combo)
                if blocks.is_sub_ortholattice(P, S):
                    if not axioms.check_distributive(P.restrict(S)).passed:
                        return f"sub-ortholattice {P.labels_of(S)} in a Δ-block is not distributive"
    return None


# -- orthomodular lemmas ----------------------------------------------------

@prop("below-implies-arrow", "orthomodular")
def _below_arrow(P, ctx):
    return _first(P, ((a, b) for a, b in _pairs(P) if P.leq(a, b) and arrow(P, a, b) is None))


@prop("arrow-symmetric-prime-invariant", "orthomodular")
def _arrow_sym(P, ctx):
    inv = P.inv
    for a, b in _pairs(P):
        if arrow(P, a, b) is None:
            continue
        for x, y in ((b, a), (a, inv[b]), (inv[a], b), (inv[a], inv[b])):
            if arrow(P, x, y) is None:
                return f"a ↔ b but not {_lab(P, x, y)}"
    return None


@prop("arrow-decomposes", "orthomodular")
def _arrow_decomp(P, ctx):
    inv = P.inv
    for a, b in _pairs(P):
        if arrow(P, a, b) is None:
            continue
        ab, abp, apb = P.meet(a, b), P.meet(a, inv[b]), P.meet(inv[a], b)
        if None in (P.join(a, b), ab, abp, apb, P.meet(inv[a], inv[b])):
            return f"a ↔ b but an operation is undefined at {_lab(P, a, b)}"
        j1 = P.join(ab, abp)
        j2 = P.join(ab, apb)
        j3 = None if j1 is None else P.join(j1, apb)
        if j1 != a or j2 != b or j3 != P.join(a, b):
            return f"decomposition identities fail at {_lab(P, a, b)}"
    return None


@prop("arrow-implies-delta", "orthomodular")
def _arrow_delta(P, ctx):
    for a, b in _pairs(P):
        if arrow(P, a, b) is not None or P.leq(a, b):
            if not (delta(P, a, b) and delta(P, b, a) and commutator_d(P, a, b).is_top_only(P)):
                return f"a ↔ b (or a <= b) without Δ both ways and d = {{1}} at {_lab(P, a, b)}"
    return None


@prop("commuting-join", "orthomodular")
def _commuting_join(P, ctx):
    inv = P.inv
    for a, b in _pairs(P):
        j = P.join(a, b)
        if c_relation(P, a, b) != CVerdict.HOLDS or j is None:
            continue
        abp = P.meet(a, inv[b])
        if P.join(abp, b) != j:
            return f"a v b != (a ^ b') v b at {_lab(P, a, b)}"
        ba, bap = P.meet(b, a), P.meet(b, inv[a])
        if ba is None or bap is None or P.join(ba, bap) is None or P.join(a, inv[b]) is None:
            continue
        if c_relation(P, b, a) != CVerdict.HOLDS:
            return f"b C a fails at {_lab(P, a, b)}"
        if P.join(a, bap) != j:
            return f"a v b != a v (b ^ a') at {_lab(P, a, b)}"
    return None


@prop("delta-upper-cone", "orthomodular")
def _delta_upper(P, ctx):
    inv = P.inv
    for a, b in _pairs(P):
        if delta(P, a, b):
            rhs = P.upper_cone(P.down[a] & P.down[inv[b]]) & P.up[b]
            if P.up[a] & P.up[b] != rhs:
                return f"U(a,b) != U(L(a,b'),b) at {_lab(P, a, b)}"
    return None


@prop("interval-identity", "orthomodular")
def _intervals(P, ctx):
    for a in range(P.size):
        for b in bits(P.up[a]):
            interval_orthoposet(P, a, b)
    return None


@prop("central-factorization", "orthomodular")
def _central(P, ctx):
    for c in range(P.size):
        if not commutation.is_central(P, c)[0]:
            continue
        f = commutation.factorize(P, c)
        if f.isomorphism and len(set(f.mapping)) != f.product.size:
            return f"condition (1) holds at {P.labels[c]} but f is not onto"
    return None


# -- subset families --------------------------------------------------------

@prop("orthogonal-iff-disjoint", "family")
def _perp_disjoint(P, ctx):
    M = P.members
    return _first(P, ((a, b) for a, b in _pairs(P) if P.perp(a, b) != (M[a] & M[b] == 0)))


@prop("pnk-arrow-iff-divisible", "pnk")
def _pnk_arrow(P, ctx):
    k, M = P.pnk_divisor, P.members
    return _first(P, ((a, b) for a, b in _pairs(P)
                      if (commutation._arrow_search(P, a, b) is not None)
                      != ((M[a] & M[b]).bit_count() % k == 0)))


@prop("pnk-lower-upper", "pnk")
def _pnk_ul(P, ctx):
    k, M = P.pnk_divisor, P.members
    for a, b in _pairs(P):
        ul = P.upper_cone(P.down[a] & P.down[b])
        common = M[a] & M[b]
        if common.bit_count() < k:
            expect = P.full
        else:
            expect = mask_of(i for i, C in enumerate(M) if C & common == common)
        if ul != expect:
            return f"UL(A,B) wrong at {_lab(P, a, b)}"
    return None


@prop("pnk-cardinality-delta", "pnk")
def _pnk_card(P, ctx):
    k, M, full = P.pnk_divisor, P.members, (1 << P.ground) - 1
    for a, b in _pairs(P):
        A, B = M[a], M[b]
        big = [(x & y).bit_count() >= k for x, y in
               ((A, B), (A, full ^ B), (full ^ A, B), (full ^ A, full ^ B))]
        if big[0] and big[1] and not delta(P, a, b):
            return f"cardinalities force Δ but it fails at {_lab(P, a, b)}"
        if all(big) and not commutator_d(P, a, b).is_top_only(P):
            return f"cardinalities force d = {{N}} but it fails at {_lab(P, a, b)}"
    return None


@prop("pnk-k-sets-delta-iff-arrow", "pnk")
def _pnk_ksets(P, ctx):
    k, M = P.pnk_divisor, P.members
    return _first(P, ((a, b) for a, b in _pairs(P) if M[a].bit_count() == k
                      and delta(P, a, b) != (arrow(P, a, b) is not None)))


@prop("pnk-lattice-iff", "pnk")
def _pnk_lattice(P, ctx):
    k, n = P.pnk_divisor, P.ground
    return None if P.is_lattice() == (k == 1 or n // k <= 2) else "lattice criterion fails"


@prop("pnk-asymmetric-delta", "pnk")
def _pnk_asym(P, ctx):
    k, n = P.pnk_divisor, P.ground
    if not (n >= 4 * k and k > 1):
        return None
    D, E = P.element(range(1, 3 * k + 1)), P.element(range(2 * k, 4 * k))
    return None if delta(P, D, E) and not delta(P, E, D) else "D Δ E and not E Δ D fails"


@prop("pnk-noncommuting-trivial-d", "pnk")
def _pnk_nc(P, ctx):
    k, n = P.pnk_divisor, P.ground
    if not (n >= 6 * k and k > 1):
        return None
    D, E = P.element(range(1, 3 * k + 1)), P.element(range(2 * k, 5 * k))
    if arrow(P, D, E) is None and commutator_d(P, D, E).is_top_only(P):
        return None
    return "expected D not ↔ E with d(D,E) = {N}"


def _partitions(points: list[int], k: int):
    if not points:
        yield []
        return
    first, rest = points[0], points[1:]
    for others in combinations(rest, k - 1):
        block = (first, *others)
        left = [p for p in rest if p not in others]
        for tail in _partitions(left, k):
            yield [block, *tail]


@prop("pnk-partition-subalgebras", "pnk")
def _pnk_partitions(P, ctx):
    k, n = P.pnk_divisor, P.ground
    if n > 8:
        return None
    for part in _partitions(list(range(1, n + 1)), k):
        masks = [mask_of(p - 1 for p in blk) for blk in part]
        S = 0
        for r in range(len(masks) + 1):
            for combo in combinations(masks, r):
                S |= 1 << P.member_index[sum(combo)]
        if S.bit_count() != 1 << len(masks):
            return f"partition {part} gives {S.bit_count()} unions"
        found = blocks.is_maximal_boolean_subalgebra(P, S)
        if not found:
            return f"partition {part}: {found.reason}"
        Q = P.restrict(S)
        if Q.up != _powerset_order(len(masks), Q, P, masks):
            return f"partition {part} is not ordered like a powerset"
    return None


def _powerset_order(t, Q, P, masks):
    # index i of Q -> bitset over the t blocks it contains
    code = []
    for old in Q.origin:
        C = P.members[old]
        code.append(sum(1 << i for i, m in enumerate(masks) if C & m))
    return tuple(mask_of(j for j in range(Q.size) if code[i] & ~code[j] == 0)
                 for i in range(Q.size))


@prop("closure-operator", "orthoposet")
def _closure_laws(P, ctx):
    seeds = [0] + [1 << a for a in range(P.size)]
    seeds += [(1 << a) | (1 << b) for a, b in combinations(range(P.size), 2)][:400]
    closed = {s: ortho_closure(P, s) for s in seeds}
    for s, c in closed.items():
        if s & ~c:
            return f"not extensive at {P.labels_of(s)}"
        if ortho_closure(P, c) != c:
            return f"not idempotent at {P.labels_of(s)}"
    for s in seeds:
        for t in seeds:
            if s & ~t == 0 and closed[s] & ~closed[t]:
                return f"not monotone at {P.labels_of(s)} ⊆ {P.labels_of(t)}"
    return None


@prop("star-sublattices", "pnk")
def _stars(P, ctx):
    k, n = P.pnk_divisor, P.ground
    if n != 3 * k or k < 2 or P.size > 64:
        return None
    from math import comb
    seen = set()
    for A in combinations(range(1, n + 1), k):
        S = star_sublattice(P, A).elements
        if S.bit_count() != 4 + 2 * comb(2 * k, k):
            return f"|P_A| = {S.bit_count()} for A = {A}"
        if not blocks.is_sub_ortholattice(P, S) or not blocks.is_maximal_sub_ortholattice(P, S):
            return f"P_A is not a maximal sub-ortholattice for A = {A}"
        dec = blocks.boolean_block_decomposition(P, S)
        a = P.element(A)
        center = (1 << P.bottom) | (1 << a) | (1 << P.inv[a]) | (1 << P.top)
        if len(dec.blocks) != comb(2 * k, k) // 2 or dec.center != center:
            return f"decomposition of P_A wrong for A = {A}"
        if any(b.size != 8 for b in dec.blocks):
            return f"non-8-element block in P_A for A = {A}"
        if any(x.elements & y.elements != center for x, y in combinations(dec.blocks, 2)):
            return f"blocks of P_A meet outside the center for A = {A}"
        seen.add(S)
    return None if len(seen) == comb(n, k) else "star sublattices not pairwise distinct"


# -- corpus -----------------------------------------------------------------

def _two_chain() -> OrthoPoset:
    return OrthoPoset(["0", "1"], [0b11, 0b10], [1, 0])


def _bool4() -> OrthoPoset:
    P = build_from_covers(["0", "p", "q", "1"], [("0", "p"), ("0", "q"), ("p", "1"), ("q", "1")])
    return OrthoPoset.of(P, [3, 2, 1, 0])


def corpus() -> dict[str, FinitePoset]:
    """Every structure the bundled certificate runs on."""
    ex3 = load_fixture("example3")
    out = {name: load_fixture(name) for name in ("fig1", "o6", "fig6", "fig7", "example3")}
    out.update({
        "chain2": _two_chain(),
        "powerset2": build_pnk(2, 1),
        "pnk31": build_pnk(3, 1),
        "pnk42": build_pnk(4, 2),
        "pnk62": build_pnk(6, 2),
        "balanced": build_balanced({1, 2, 3}, {4, 5, 6}),
        "bool4xbool4": direct_product(_bool4(), _bool4()),
        "o6xchain2": direct_product(load_fixture("o6"), _two_chain()),
        "interval-empty-i'": interval_orthoposet(ex3, ex3.idx("empty"), ex3.idx("i'")),
    })
    return out


def fixture_consistency() -> list[PropertyResult]:
    """Bundled example3 file equals the relabeled balanced family."""
    from .formats import write_orthoposet
    from .constructions import fixture_text
    same = write_orthoposet(example3_from_family()) == fixture_text("example3")
    return [PropertyResult("example3-fixture-regenerates", "pass" if same else "fail")]


def run_corpus(names: list[str] | None = None) -> dict[str, list[PropertyResult]]:
    results = {}
    with config.verification(True):
        for name, P in corpus().items():
            if names is None or name in names:
                results[name] = run_suite(P)
        if names is None:
            results["fixtures"] = fixture_consistency()
    return results
