"""Builders: subset families, P_nk, balanced families, intervals, products,
star sublattices, orthogonal closures and the bundled fixtures."""

from __future__ import annotations

from importlib import resources
from itertools import combinations
from math import comb

import numpy as np

from . import config
from .errors import (
    BadDivisor,
    BadParameters,
    BadPartition,
    IdentityViolation,
    InternalInconsistency,
    NotComparable,
    NotOrthomodular,
    SizeExceeded,
    UnknownFixture,
)
from .formats import parse_subset, read_orthoposet, subset_label
from .ortho import OrthoPoset, check_orthoposet
from .poset import MAX_ELEMENTS, FinitePoset, bits, mask_of

MAX_GROUND = 24
FIXTURES = ("fig1", "o6", "fig6", "fig7", "example3")
_CHUNK = 256


def _rows_to_ints(matrix: np.ndarray) -> list[int]:
    packed = np.packbits(matrix, axis=1, bitorder="little")
    return [int.from_bytes(row.tobytes(), "little") for row in packed]


class SubsetFamily(OrthoPoset):
    """A complement-closed family of subsets of {1..n} ordered by inclusion.

    ``members[i]`` is the subset for element i as an n-bit int (bit p-1 for
    point p), sorted by cardinality and then numeric value.
    """

    def __init__(self, n: int, members, *, pnk_divisor: int | None = None):
        if not 1 <= n <= MAX_GROUND:
            raise SizeExceeded(f"ground size {n} outside 1..{MAX_GROUND}")
        full = (1 << n) - 1
        members = sorted(set(members), key=lambda s: (s.bit_count(), s))
        if len(members) > MAX_ELEMENTS:
            raise SizeExceeded(f"{len(members)} members exceeds the cap of {MAX_ELEMENTS}")
        if any(s < 0 or s & ~full for s in members):
            raise BadParameters(f"member outside the ground set 1..{n}")
        pos = {s: i for i, s in enumerate(members)}
        if 0 not in pos or full not in pos:
            raise BadParameters("a subset family must contain the empty set and the ground set")
        missing = [s for s in members if full ^ s not in pos]
        if missing:
            raise BadParameters(f"not closed under complement: {subset_label(missing[0])}")
        self.ground = n
        self.members = tuple(members)
        self.member_index = pos
        self.pnk_divisor = pnk_divisor
        self._arr = np.array(members, dtype=np.int64)
        arr = self._arr
        leq = (arr[:, None] & ~arr[None, :]) == 0
        inv = [pos[full ^ s] for s in members]
        super().__init__([subset_label(s) for s in members], _rows_to_ints(leq), inv, check=False)
        # x ⊥ y iff x ⊆ y' must coincide with disjointness
        perp = leq[:, inv]
        disjoint = (arr[:, None] & arr[None, :]) == 0
        if not np.array_equal(perp, disjoint):
            raise InternalInconsistency("orthogonality differs from disjointness")
        if config.VERIFY and self.size <= 512:
            report = check_orthoposet(self, self.inv)
            if not report.passed:
                raise InternalInconsistency("subset family failed the orthoposet axioms")
            generic = FinitePoset(self.labels, self.up, check=True)
            if generic.down != self.down:
                raise InternalInconsistency("bitset and generic order relations differ")

    def __repr__(self):
        return f"SubsetFamily(n={self.ground}, members={self.size})"

    def element(self, subset) -> int:
        """Element index of a subset given as label, mask or iterable of points."""
        if isinstance(subset, str):
            mask = parse_subset(subset, self.ground)
        elif isinstance(subset, int):
            mask = subset
        else:
            mask = mask_of(p - 1 for p in subset)
        try:
            return self.member_index[mask]
        except KeyError:
            raise BadParameters(f"{subset_label(mask)} is not a member") from None

    def _orthogonal_fast(self):
        # Only disjoint pairs whose union is not a member can lack a join.
        arr = self._arr
        for lo in range(0, self.size, _CHUNK):
            rows = arr[lo:lo + _CHUNK]
            disjoint = (rows[:, None] & arr[None, :]) == 0
            missing = ~np.isin(rows[:, None] | arr[None, :], arr)
            for i, j in np.argwhere(disjoint & missing):
                x, y = lo + int(i), int(j)
                if self.join(x, y) is None:
                    return (x, y)
        return None

    def _lattice_fast(self):
        # The join of x, y exists iff the intersection of all members
        # containing x ∪ y is itself a member. Meets follow from the bottom.
        arr = self._arr
        full = (1 << self.ground) - 1
        unions = np.unique(arr[:, None] | arr[None, :])
        bad = []
        for lo in range(0, len(unions), _CHUNK):
            u = unions[lo:lo + _CHUNK]
            above = (u[:, None] & ~arr[None, :]) == 0
            inter = np.bitwise_and.reduce(np.where(above, arr[None, :], full), axis=1)
            bad.append(u[~np.isin(inter, arr)])
        bad = np.concatenate(bad)
        witness = None
        if len(bad):
            for lo in range(0, self.size, _CHUNK):
                rows = arr[lo:lo + _CHUNK]
                hit = np.isin(rows[:, None] | arr[None, :], bad)
                hit &= np.arange(self.size)[None, :] > np.arange(lo, lo + len(rows))[:, None]
                found = np.argwhere(hit)
                if len(found):
                    witness = (lo + int(found[0][0]), int(found[0][1]))
                    break
        if config.VERIFY and self.size <= 256:
            from .poset import lattice_witness
            plain = FinitePoset(self.labels, self.up, check=False)
            if (lattice_witness(plain) is None) != (witness is None):
                raise InternalInconsistency("lattice fast path disagrees with the generic check")
        return witness


def build_pnk(n: int, k: int) -> SubsetFamily:
    """P_nk: subsets of {1..n} whose cardinality is divisible by k."""
    if k < 1 or n < 1 or n % k:
        raise BadDivisor(f"k={k} does not divide n={n}")
    if n > MAX_GROUND:
        raise SizeExceeded(f"ground size {n} exceeds {MAX_GROUND}")
    count = sum(comb(n, j) for j in range(0, n + 1, k))
    if count > MAX_ELEMENTS:
        raise SizeExceeded(f"P_{n},{k} has {count} members, cap is {MAX_ELEMENTS}")
    members = [mask_of(c) for j in range(0, n + 1, k) for c in combinations(range(n), j)]
    F = SubsetFamily(n, members, pnk_divisor=k)
    if config.VERIFY and F.size <= 512:
        from .axioms import check_orthomodular
        if not check_orthomodular(F).passed:
            raise InternalInconsistency(f"P_{n},{k} failed the orthomodular check")
    return F


def build_balanced(x_block, y_block) -> SubsetFamily:
    """Subsets A with |A ∩ X| = |A ∩ Y| for a partition {X, Y} of {1..n}."""
    X, Y = set(x_block), set(y_block)
    n = len(X) + len(Y)
    if not X or X & Y or X | Y != set(range(1, n + 1)) or len(X) != len(Y):
        raise BadPartition("blocks must be equal-size halves partitioning {1..n}")
    if n > MAX_GROUND:
        raise SizeExceeded(f"ground size {n} exceeds {MAX_GROUND}")
    xm, ym = mask_of(p - 1 for p in X), mask_of(p - 1 for p in Y)
    members = []
    for j in range(len(X) + 1):
        for cx in combinations(sorted(X), j):
            for cy in combinations(sorted(Y), j):
                members.append(mask_of(p - 1 for p in cx + cy))
    F = SubsetFamily(n, members)
    assert all((s & xm).bit_count() == (s & ym).bit_count() for s in F.members)
    return F


def interval_orthoposet(P: OrthoPoset, a: int, b: int) -> OrthoPoset:
    """[a, b] with x⁺ = (x' ∨ a) ∧ b."""
    from .axioms import check_orthomodular, is_orthomodular

    if not P.leq(a, b):
        raise NotComparable(f"{P.labels[a]} is not below {P.labels[b]}")
    if not is_orthomodular(P):
        raise NotOrthomodular("interval orthoposets need an orthomodular ambient")
    mask = P.up[a] & P.down[b]
    sub = P.induced_subposet(mask)
    pos = {old: new for new, old in enumerate(sub.origin)}
    inv = []
    for x in sub.origin:
        xp = P.inv[x]
        j = P.join(xp, a)
        lhs = None if j is None else P.meet(j, b)
        m = P.meet(xp, b)
        rhs = None if m is None else P.join(m, a)
        if lhs is None or lhs != rhs:
            raise IdentityViolation(f"(x'∨a)∧b != (x'∧b)∨a at x={P.labels[x]}")
        inv.append(pos[lhs])
    out = OrthoPoset(sub.labels, sub.up, inv)
    out.origin = sub.origin
    if not check_orthomodular(out).passed:
        raise InternalInconsistency(
            f"interval [{P.labels[a]}, {P.labels[b]}] is not orthomodular")
    return out


def direct_product(P: OrthoPoset, Q: OrthoPoset) -> OrthoPoset:
    """Componentwise order and involution; element (i, j) has index i*|Q| + j."""
    nq = Q.size
    m = P.size * nq
    if m > MAX_ELEMENTS:
        raise SizeExceeded(f"product has {m} elements, cap is {MAX_ELEMENTS}")
    labels, up, inv = [], [], []
    for i in range(P.size):
        for j in range(nq):
            labels.append(f"({P.labels[i]},{Q.labels[j]})")
            up.append(sum(Q.up[j] << (u * nq) for u in bits(P.up[i])))
            inv.append(P.inv[i] * nq + Q.inv[j])
    return OrthoPoset(labels, up, inv, check=config.VERIFY or m <= 1024)


def _as_mask(family: SubsetFamily, A) -> int:
    if isinstance(A, str):
        return parse_subset(A, family.ground)
    if isinstance(A, int):
        return A
    return mask_of(p - 1 for p in A)


def star_sublattice(family: SubsetFamily, A):
    """P_A = {C : C ⊇ A or C ⊆ A'} as a sub-ortholattice candidate."""
    from .blocks import SubStructure, is_maximal_sub_ortholattice, is_sub_ortholattice

    mask = _as_mask(family, A)
    full = (1 << family.ground) - 1
    if mask not in family.member_index or mask in (0, full):
        raise BadParameters(f"{subset_label(mask)} must be a proper nonempty member")
    k = family.pnk_divisor
    theorem_case = k is not None and family.ground == 3 * k
    if k is not None and not theorem_case:
        raise BadParameters("star sublattices of P_nk need n = 3k")
    if theorem_case and mask.bit_count() != k:
        raise BadParameters(f"A must have exactly k={k} points")
    comp = full ^ mask
    elements = mask_of(i for i, C in enumerate(family.members)
                       if C & mask == mask or C & ~comp == 0)
    cert = {"atom": family.member_index[mask]}
    if config.VERIFY:
        found = is_sub_ortholattice(family, elements)
        if not found:
            raise InternalInconsistency(f"P_A is not a sub-ortholattice: {found.reason}")
        found = is_maximal_sub_ortholattice(family, elements)
        if not found:
            raise InternalInconsistency(f"P_A is not maximal: {found.reason}")
        if theorem_case and elements.bit_count() != 4 + 2 * comb(2 * k, k):
            raise InternalInconsistency("|P_A| differs from 4 + 2·C(2k,k)")
    return SubStructure(elements, "sub-ortholattice", config.VERIFY, cert)


def ortho_closure(P: OrthoPoset, seed: int) -> int:
    """Least superset of seed ∪ {0,1} closed under ' and joins of orthogonal pairs."""
    S = seed | (1 << P.bottom) | (1 << P.top)
    inv = P.inv
    while True:
        new = S | P.prime(S)
        for x in bits(new):
            for y in bits(new & P.down[inv[x]]):
                j = P.join(x, y)
                if j is not None:
                    new |= 1 << j
        if new == S:
            return S
        S = new


def load_fixture(name: str) -> OrthoPoset:
    if name not in FIXTURES:
        raise UnknownFixture(f"{name!r}; known: {', '.join(FIXTURES)}")
    return read_orthoposet(fixture_text(name))


def fixture_text(name: str) -> str:
    if name not in FIXTURES:
        raise UnknownFixture(name)
    return resources.files("orthoposets.fixtures").joinpath(f"{name}.opo").read_text(encoding="utf-8")


# Element names of the balanced 20-element family on {1..6}.
EXAMPLE3_LETTERS = {
    "a": (1, 4), "b": (1, 5), "c": (1, 6),
    "d": (2, 4), "e": (2, 5), "f": (2, 6),
    "g": (3, 4), "h": (3, 5), "i": (3, 6),
}


def example3_from_family() -> OrthoPoset:
    """The balanced family on X={1,2,3}, Y={4,5,6} relabeled with letters.

    Order: empty, a..i, i'..a', N. This regenerates the ``example3`` fixture.
    """
    F = build_balanced({1, 2, 3}, {4, 5, 6})
    full = (1 << 6) - 1
    names = {0: "empty", full: "N"}
    for letter, pts in EXAMPLE3_LETTERS.items():
        s = mask_of(p - 1 for p in pts)
        names[s] = letter
        names[full ^ s] = letter + "'"
    letters = "abcdefghi"
    order = ["empty", *letters, *(x + "'" for x in reversed(letters)), "N"]
    by_name = {names[s]: i for i, s in enumerate(F.members)}
    perm = [by_name[nm] for nm in order]
    pos = {old: new for new, old in enumerate(perm)}
    up = [mask_of(pos[j] for j in bits(F.up[old])) for old in perm]
    inv = [pos[F.inv[old]] for old in perm]
    out = OrthoPoset(order, up, inv)
    out.origin = tuple(perm)
    return out
