"""Δ-blocks, maximal Boolean subalgebras and maximal sub-ortholattices.

All searches work on involution orbits {x, x'}: every structure here is a
union of orbits, so an orbit set is encoded as a bitset over ``P.orbits()``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from . import config
from .axioms import check_boolean, is_orthomodular
from .commutation import delta, delta_rows
from .errors import InternalInconsistency, NotClosedUnderInvolution, NotSublattice
from .ortho import OrthoPoset
from .poset import bits

DEFAULT_BUDGET = 10**7


def join_labels(labels) -> str:
    """Comma-joined, or ';'-joined when a label (such as 1,4) has a comma."""
    labels = list(labels)
    return (";" if any("," in lab for lab in labels) else ",").join(labels)


def split_labels(text: str) -> list[str]:
    sep = ";" if ";" in text else ","
    return [t.strip() for t in text.split(sep) if t.strip()]


@dataclass(frozen=True)
class SubStructure:
    elements: int
    kind: str
    maximal: bool
    certificate: object = None

    @property
    def size(self) -> int:
        return self.elements.bit_count()

    def members(self) -> tuple[int, ...]:
        return tuple(bits(self.elements))

    def sort_key(self):
        return (self.size, self.members())

    def labels(self, P) -> list[str]:
        return P.labels_of(self.elements)

    def format(self, P) -> str:
        return f"{self.kind}\t{self.size}\t{{{join_labels(self.labels(P))}}}"


@dataclass(frozen=True)
class Finding:
    """Outcome of a membership test; ``witness`` explains a failure."""
    ok: bool
    reason: str = ""
    witness: tuple = ()

    def __bool__(self):
        return self.ok


@dataclass
class SearchResult:
    structures: list[SubStructure] = field(default_factory=list)
    complete: bool = True
    nodes: int = 0

    def __iter__(self):
        return iter(self.structures)

    def __len__(self):
        return len(self.structures)

    def __getitem__(self, i):
        return self.structures[i]

    def element_sets(self) -> list[int]:
        return [s.elements for s in self.structures]


def _canonical(structs):
    return sorted(structs, key=SubStructure.sort_key)


def _orbit_masks(P: OrthoPoset, S: int) -> list[int]:
    return [o for o in P.orbits() if o & S == o]


# -- Δ-blocks ---------------------------------------------------------------

def _delta_closed(rows, S: int) -> tuple[int, int] | None:
    for x in bits(S):
        miss = S & ~rows[x]
        if miss:
            return (x, (miss & -miss).bit_length() - 1)
    return None


def _orbit_compatible(rows, o1: int, o2: int) -> bool:
    both = o1 | o2
    return all(rows[u] & both == both for u in bits(both))


def _orbit_compatible_generators(P: OrthoPoset, o1: int, o2: int) -> bool:
    # x Δ y, x' Δ y, y Δ x, y' Δ x; the primed partners follow from a Δ b ⇔ a Δ b'.
    x = (o1 & -o1).bit_length() - 1
    y = (o2 & -o2).bit_length() - 1
    inv = P.inv
    return (delta(P, x, y) and delta(P, inv[x], y)
            and delta(P, y, x) and delta(P, inv[y], x))


def is_delta_block(P: OrthoPoset, S: int) -> Finding:
    """S is involution-closed, Δ holds on all ordered pairs, and S is maximal."""
    if not P.is_involution_closed(S):
        x = next(i for i in bits(S) if not (S >> P.inv[i]) & 1)
        return Finding(False, "not involution-closed", (x,))
    rows = delta_rows(P)
    bad = _delta_closed(rows, S)
    if bad is not None:
        return Finding(False, "delta fails", bad)
    for o in P.orbits():
        if o & S:
            continue
        if _delta_closed(rows, S | o) is None:
            return Finding(False, "not maximal", tuple(bits(o)))
    return Finding(True)


def _bron_kerbosch(adj, R, Pset, X, out):
    if not Pset and not X:
        out.append(R)
        return
    union = Pset | X
    pivot = max(bits(union), key=lambda u: (adj[u] & Pset).bit_count())
    for v in bits(Pset & ~adj[pivot]):
        _bron_kerbosch(adj, R | (1 << v), Pset & adj[v], X & adj[v], out)
        Pset &= ~(1 << v)
        X |= 1 << v


def delta_blocks(P: OrthoPoset) -> list[SubStructure]:
    """All Δ-blocks: maximal cliques of the orbit compatibility graph."""
    rows = delta_rows(P)
    orbits = P.orbits()
    good = [i for i, o in enumerate(orbits) if _delta_closed(rows, o) is None]
    adj = [0] * len(orbits)
    for i, j in combinations(good, 2):
        ok = _orbit_compatible(rows, orbits[i], orbits[j])
        if config.VERIFY and ok != _orbit_compatible_generators(P, orbits[i], orbits[j]):
            raise InternalInconsistency("orbit compatibility disagrees with its four generators")
        if ok:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    cliques = []
    start = sum(1 << i for i in good)
    if start:
        _bron_kerbosch(adj, 0, start, 0, cliques)
    else:
        cliques.append(0)
    out = []
    for c in cliques:
        S = 0
        for i in bits(c):
            S |= orbits[i]
        check = is_delta_block(P, S)
        if not check:
            raise InternalInconsistency(f"clique is not a Δ-block: {check.reason}")
        out.append(SubStructure(S, "delta-block", True))
    return _canonical(out)


# -- Boolean subalgebras ----------------------------------------------------

def _close_boolean(P: OrthoPoset, S: int) -> int | None:
    """Least superset closed under ' and ambient joins; None if a join is missing."""
    inv = P.inv
    while True:
        new = S
        for x in bits(S):
            new |= 1 << inv[x]
        for x in bits(new):
            for y in bits(new >> (x + 1) << (x + 1)):
                j = P.join(x, y)
                if j is None:
                    return None
                new |= 1 << j
        if new == S:
            return S
        S = new


def _distributive_sublattice(P: OrthoPoset, S: int) -> tuple[int, int, int] | None:
    """First triple with x ∧ (y ∨ z) != (x ∧ y) ∨ (x ∧ z) in a sublattice S."""
    els = list(bits(S))
    for x in els:
        for y in els:
            xy = P.meet(x, y)
            for z in els:
                if z <= y:
                    continue
                lhs = P.meet(x, P.join(y, z))
                rhs = P.join(xy, P.meet(x, z))
                if lhs != rhs:
                    return (x, y, z)
    return None


def is_boolean_subalgebra(P: OrthoPoset, S: int) -> Finding:
    """S holds 0 and 1, is closed under ' and ambient joins/meets, and is distributive."""
    if not (S >> P.bottom) & 1 or not (S >> P.top) & 1:
        return Finding(False, "missing bounds")
    if not P.is_involution_closed(S):
        return Finding(False, "not involution-closed")
    for x in bits(S):
        for y in bits(S):
            j, m = P.join(x, y), P.meet(x, y)
            if j is None or m is None or not (S >> j) & 1 or not (S >> m) & 1:
                return Finding(False, "not closed under joins and meets", (x, y))
    bad = _distributive_sublattice(P, S)
    if bad is not None:
        return Finding(False, "not distributive", bad)
    return Finding(True)


def is_maximal_boolean_subalgebra(P: OrthoPoset, S: int) -> Finding:
    """S is a Boolean subalgebra and no orbit can be added.

    Any Boolean subalgebra holding S and an orbit o holds the closure of
    S ∪ o, so it is enough to test that closure for each missing orbit.
    """
    found = is_boolean_subalgebra(P, S)
    if not found:
        return found
    for o in P.orbits():
        if o & S:
            continue
        T = _close_boolean(P, S | o)
        if T is not None and _distributive_sublattice(P, T) is None:
            return Finding(False, "not maximal", tuple(bits(o)))
    return Finding(True)


def maximal_boolean_subalgebras(P: OrthoPoset, budget: int = DEFAULT_BUDGET) -> SearchResult:
    """Every maximal Boolean subalgebra, by DFS over orbit-generated closures."""
    base = _close_boolean(P, (1 << P.bottom) | (1 << P.top))
    orbits = P.orbits()
    result = SearchResult()
    if base is None or _distributive_sublattice(P, base) is not None:
        return result
    seen = {base}
    stack = [base]
    maxima = set()
    while stack:
        S = stack.pop()
        extended = False
        for o in orbits:
            if o & S:
                continue
            result.nodes += 1
            if result.nodes > budget:
                result.complete = False
                stack.clear()
                break
            T = _close_boolean(P, S | o)
            if T is None or _distributive_sublattice(P, T) is not None:
                continue
            extended = True
            if T not in seen:
                seen.add(T)
                stack.append(T)
        if not extended and result.complete:
            maxima.add(S)
    out = []
    for S in maxima:
        if config.VERIFY:
            if not is_boolean_subalgebra(P, S):
                raise InternalInconsistency("search produced a non-Boolean subalgebra")
            if not check_boolean(P.restrict(S)).passed:
                raise InternalInconsistency("Boolean subalgebra fails the cone-form check")
        out.append(SubStructure(S, "boolean-subalgebra", True))
    result.structures = _canonical(out)
    return result


# -- sub-ortholattices ------------------------------------------------------

def _induced_lattice_witness(P: OrthoPoset, S: int) -> tuple[int, int] | None:
    """First pair without an induced join, or whose ambient join exists and differs.

    Joins suffice: S is involution-closed, so meets follow by De Morgan.
    """
    up = P.up
    els = list(bits(S))
    for i, x in enumerate(els):
        ux = up[x] & S
        for y in els[i + 1:]:
            j = P.least(ux & up[y])
            if j is None:
                return (x, y)
            amb = P.join(x, y)
            if amb is not None and amb != j:
                return (x, y)
    return None


def is_sub_ortholattice(P: OrthoPoset, S: int) -> Finding:
    """Lattice in the induced order and orthomodular as a structure of its own.

    Induced joins may exist where P has none, but a join that P does have
    must be the induced one.
    """
    if not (S >> P.bottom) & 1 or not (S >> P.top) & 1:
        return Finding(False, "missing bounds")
    if not P.is_involution_closed(S):
        raise NotClosedUnderInvolution(",".join(P.labels_of(S)))
    bad = _induced_lattice_witness(P, S)
    if bad is not None:
        return Finding(False, "not a lattice in the induced order", bad)
    Q = P.restrict(S)
    if not is_orthomodular(Q):
        return Finding(False, "not orthomodular")
    return Finding(True)


def _supersets(P: OrthoPoset, S: int):
    rest = [o for o in P.orbits() if not o & S]
    for r in range(1, len(rest) + 1):
        for combo in combinations(rest, r):
            yield S | sum(combo)


def is_maximal_sub_ortholattice(P: OrthoPoset, S: int, budget: int = DEFAULT_BUDGET) -> Finding:
    """No involution-closed strict superset of S is a sub-ortholattice."""
    for n, T in enumerate(_supersets(P, S)):
        if n >= budget:
            return Finding(False, "budget exhausted")
        if _induced_lattice_witness(P, T) is None and is_orthomodular(P.restrict(T)):
            return Finding(False, "extends", tuple(bits(T & ~S)))
    return Finding(True)


def maximal_sub_ortholattices(P: OrthoPoset, budget: int = DEFAULT_BUDGET) -> SearchResult:
    """Every maximal sub-ortholattice, scanning orbit sets by decreasing size.

    A candidate contained in an already found maximum is skipped. Anything
    found before the budget runs out is genuinely maximal, since every
    strictly larger candidate was examined first.
    """
    orbits = P.orbits()
    base = (1 << P.bottom) | (1 << P.top)
    rest = [o for o in orbits if o != base]
    result = SearchResult()
    found = []
    for r in range(len(rest), -1, -1):
        for combo in combinations(rest, r):
            S = base | sum(combo)
            if any(S & F == S for F in found):
                continue
            result.nodes += 1
            if result.nodes > budget:
                result.complete = False
                result.structures = _canonical(
                    SubStructure(F, "sub-ortholattice", True) for F in found)
                return result
            if _induced_lattice_witness(P, S) is None and is_orthomodular(P.restrict(S)):
                found.append(S)
    if config.VERIFY:
        for F in found:
            if not is_sub_ortholattice(P, F):
                raise InternalInconsistency("search produced a non-sub-ortholattice")
    result.structures = _canonical(SubStructure(F, "sub-ortholattice", True) for F in found)
    return result


# -- decomposition into Boolean blocks --------------------------------------

@dataclass
class Decomposition:
    blocks: list[SubStructure]
    center: int
    complete: bool = True


def boolean_block_decomposition(P: OrthoPoset, S, budget: int = DEFAULT_BUDGET) -> Decomposition:
    """Maximal Boolean subalgebras of the sub-ortholattice S and their intersection."""
    mask = S.elements if isinstance(S, SubStructure) else S
    if not P.is_involution_closed(mask) or not is_sub_ortholattice(P, mask):
        raise NotSublattice(",".join(P.labels_of(mask)))
    Q = P.restrict(mask)
    found = maximal_boolean_subalgebras(Q, budget)
    blocks = _canonical(SubStructure(Q.lift(b.elements), "boolean-subalgebra", True)
                        for b in found)
    center = mask
    for b in blocks:
        center &= b.elements
    return Decomposition(blocks, center, found.complete)
