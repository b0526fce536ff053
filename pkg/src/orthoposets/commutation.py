"""The relations Δ, ↔, C, the generalized commutator d, and central elements."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from . import config
from .errors import (
    EmbeddingCheckFailed,
    InternalInconsistency,
    NotCentral,
    NotOrthogonal,
)
from .ortho import OrthoPoset
from .poset import bits


# -- Δ ----------------------------------------------------------------------

def delta(P: OrthoPoset, a: int, b: int) -> bool:
    """a Δ b  iff  U(a) = U(L(a,b), L(a,b'))."""
    da = P.down[a]
    lower = (da & P.down[b]) | (da & P.down[P.inv[b]])
    result = P.upper_cone(lower) == P.up[a]
    if config.VERIFY:
        primed = _delta_primed(P, a, b)
        if primed != result:
            raise InternalInconsistency(
                f"Δ and its primed form disagree on ({P.labels[a]}, {P.labels[b]})")
    return result


def _delta_primed(P: OrthoPoset, a: int, b: int) -> bool:
    # L(a') = L(U(a',b), U(a',b'))
    ua = P.up[P.inv[a]]
    upper = (ua & P.up[b]) | (ua & P.up[P.inv[b]])
    return P.lower_cone(upper) == P.down[P.inv[a]]


def delta_rows(P: OrthoPoset) -> tuple[int, ...]:
    """rows[a] is the bitset of all b with a Δ b (memoized on P)."""
    rows = P._memo.get("delta")
    if rows is None:
        rows = tuple(
            sum(1 << b for b in range(P.size) if delta(P, a, b))
            for a in range(P.size))
        P._memo["delta"] = rows
    return rows


# -- ↔ ----------------------------------------------------------------------

def arrow(P: OrthoPoset, a: int, b: int) -> tuple[int, int, int] | None:
    """Witness (c, d, e) for a ↔ b, or None when a ↔ b fails.

    c ⊥ d ⊥ e ⊥ c with a = c ∨ d and b = d ∨ e. The search runs d, then c,
    then e in ascending index order and returns the first witness.
    """
    if not P.is_orthogonal:
        raise NotOrthogonal("↔ is only defined here for orthogonal posets")
    k = getattr(P, "pnk_divisor", None)
    if k is not None and not config.VERIFY:
        if (P.members[a] & P.members[b]).bit_count() % k:
            return None
        return _pnk_arrow_witness(P, a, b)
    found = _arrow_search(P, a, b)
    if k is not None:
        fast = (P.members[a] & P.members[b]).bit_count() % k == 0
        if fast != (found is not None):
            raise InternalInconsistency(
                f"↔ fast path disagrees with search on ({P.labels[a]}, {P.labels[b]})")
    return found


def _arrow_search(P: OrthoPoset, a: int, b: int):
    inv, down = P.inv, P.down
    for d in bits(down[a] & down[b]):
        below_dp = down[inv[d]]
        cs = [c for c in bits(down[a] & below_dp) if P.join(c, d) == a]
        if not cs:
            continue
        es = [e for e in bits(down[b] & below_dp) if P.join(d, e) == b]
        for c in cs:
            for e in es:
                if P.leq(c, inv[e]):
                    return (c, d, e)
    return None


def _pnk_arrow_witness(P, a, b):
    # In P_nk the witness is forced: d = A∩B, c = A∖B, e = B∖A.
    A, B = P.members[a], P.members[b]
    pos = P.member_index
    return (pos[A & ~B], pos[A & B], pos[B & ~A])


# -- C ----------------------------------------------------------------------

class CVerdict(Enum):
    HOLDS = "holds"
    FAILS = "fails"
    UNDEFINED = "undefined"

    def __str__(self):
        return self.value


def c_relation(P: OrthoPoset, a: int, b: int) -> CVerdict:
    """a C b  iff  a = (a ∧ b) ∨ (a ∧ b'); undefined when a term is missing."""
    m1 = P.meet(a, b)
    m2 = P.meet(a, P.inv[b])
    if m1 is None or m2 is None:
        return CVerdict.UNDEFINED
    j = P.join(m1, m2)
    if j is None:
        return CVerdict.UNDEFINED
    return CVerdict.HOLDS if j == a else CVerdict.FAILS


# -- d ----------------------------------------------------------------------

@dataclass(frozen=True)
class CommutatorSet:
    pair: tuple[int, int]
    elements: int
    minimal: int

    def is_top_only(self, P: OrthoPoset) -> bool:
        return self.elements == 1 << P.top

    def format(self, P: OrthoPoset) -> str:
        # subset labels such as 1,4 carry commas, so brace them
        def lab(s):
            return f"{{{s}}}" if "," in s else s
        a, b = self.pair
        mins = " ".join(lab(s) for s in P.labels_of(self.minimal))
        return f"d({lab(P.labels[a])},{lab(P.labels[b])}) = min{{ {mins} }}"


def _d_mask(P: OrthoPoset, a: int, b: int) -> int:
    inv, down = P.inv, P.down
    da, dna = down[a], down[inv[a]]
    db, dnb = down[b], down[inv[b]]
    return P.upper_cone((da & db) | (da & dnb) | (dna & db) | (dna & dnb))


def commutator_d(P: OrthoPoset, a: int, b: int) -> CommutatorSet:
    """d(a,b) = U(L(a,b), L(a,b'), L(a',b), L(a',b'))."""
    mask = _d_mask(P, a, b)
    if config.VERIFY:
        inv = P.inv
        for x, y in ((b, a), (a, inv[b]), (inv[a], b), (inv[a], inv[b])):
            if _d_mask(P, x, y) != mask:
                raise InternalInconsistency(
                    f"d({P.labels[a]},{P.labels[b]}) differs from d({P.labels[x]},{P.labels[y]})")
    return CommutatorSet((a, b), mask, P.minimal_elements(mask))


# -- batch form -------------------------------------------------------------

@dataclass(frozen=True)
class RelationMatrix:
    kind: str
    labels: tuple[str, ...]
    table: tuple[tuple, ...]

    def __getitem__(self, ab):
        a, b = ab
        return self.table[a][b]

    def all_true(self) -> bool:
        return all(v is True or v == CVerdict.HOLDS for row in self.table for v in row)

    def to_tsv(self) -> str:
        def cell(v):
            if isinstance(v, CVerdict):
                return {"holds": "1", "fails": "0", "undefined": "u"}[v.value]
            return "1" if v else "0"
        lines = ["\t" + "\t".join(self.labels)]
        for lab, row in zip(self.labels, self.table):
            lines.append(lab + "\t" + "\t".join(cell(v) for v in row))
        return "\n".join(lines) + "\n"


def relation_matrix(P: OrthoPoset, kind: str) -> RelationMatrix:
    m = P.size
    if kind == "delta":
        rows = delta_rows(P)
        table = tuple(tuple(bool((rows[a] >> b) & 1) for b in range(m)) for a in range(m))
    elif kind == "arrow":
        if not P.is_orthogonal:
            raise NotOrthogonal("↔ matrix requires an orthogonal poset")
        table = tuple(tuple(arrow(P, a, b) is not None for b in range(m)) for a in range(m))
    elif kind in ("c", "c-relation"):
        kind = "c-relation"
        table = tuple(tuple(c_relation(P, a, b) for b in range(m)) for a in range(m))
    else:
        raise ValueError(f"unknown relation kind {kind!r}")
    return RelationMatrix(kind, P.labels, table)


# -- central elements and factorization -------------------------------------

def is_central(P: OrthoPoset, c: int) -> tuple[bool, int | None]:
    """(True, None) if c is central, else (False, first failing x)."""
    cp = P.inv[c]
    for x in range(P.size):
        if not delta(P, x, c) or P.meet(x, c) is None or P.meet(x, cp) is None:
            return False, x
    return True, None


def check_condition_1(P: OrthoPoset, c: int) -> tuple[bool, tuple[int, int] | None]:
    """For all x <= c, y <= c': x ∨ y exists, (x∨y) ∧ c = x and (x∨y) ∧ c' = y."""
    ok, _ = is_central(P, c)
    if not ok:
        raise NotCentral(P.labels[c])
    cp = P.inv[c]
    for x in bits(P.down[c]):
        for y in bits(P.down[cp]):
            j = P.join(x, y)
            if j is None or P.meet(j, c) != x or P.meet(j, cp) != y:
                return False, (x, y)
    return True, None


@dataclass
class Factorization:
    lower: OrthoPoset          # [0, c]
    upper: OrthoPoset          # [0, c']
    product: OrthoPoset        # lower × upper
    mapping: tuple[int, ...]   # element of P -> element of product
    isomorphism: bool


def factorize(P: OrthoPoset, c: int) -> Factorization:
    """Embed P into [0,c] × [0,c'] via x -> (x ∧ c, x ∧ c')."""
    from .constructions import direct_product, interval_orthoposet

    ok, _ = is_central(P, c)
    if not ok:
        raise NotCentral(P.labels[c])
    cp = P.inv[c]
    lower = interval_orthoposet(P, P.bottom, c)
    upper = interval_orthoposet(P, P.bottom, cp)
    prod = direct_product(lower, upper)
    lpos = {old: new for new, old in enumerate(lower.origin)}
    upos = {old: new for new, old in enumerate(upper.origin)}
    n_up = upper.size
    f = []
    for x in range(P.size):
        f.append(lpos[P.meet(x, c)] * n_up + upos[P.meet(x, cp)])
    # order embedding (hence injective) and compatibility with the involutions
    for x in range(P.size):
        for y in range(P.size):
            if P.leq(x, y) != prod.leq(f[x], f[y]):
                raise EmbeddingCheckFailed(f"order not reflected at ({P.labels[x]}, {P.labels[y]})")
        if f[P.inv[x]] != prod.inv[f[x]]:
            raise EmbeddingCheckFailed(f"f(x') != f(x)' at {P.labels[x]}")
    iso, _ = check_condition_1(P, c)
    if iso:
        fmap = {v: x for x, v in enumerate(f)}
        for i, x in enumerate(lower.origin):
            for j, y in enumerate(upper.origin):
                g = P.join(x, y)
                if fmap.get(i * n_up + j) != g:
                    raise EmbeddingCheckFailed("g(x,y) = x ∨ y is not inverse to f")
        if len(fmap) != prod.size:
            raise EmbeddingCheckFailed("f is not onto although condition (1) holds")
    return Factorization(lower, upper, prod, tuple(f), iso)
