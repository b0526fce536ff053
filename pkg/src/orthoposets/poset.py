"""Finite posets stored as per-element cone bitsets.

Element sets are plain Python ints used as bitsets over the element indices
0..m-1 (bit i set iff element i is a member). Every definition built on the
cone operators L and U then reduces to a handful of big-int ANDs.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator, Sequence

from .errors import (
    CycleDetected,
    DuplicateLabel,
    EmptySubset,
    NotAPartialOrder,
    SizeExceeded,
    UnknownLabel,
)

MAX_ELEMENTS = 4096


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def popcount(mask: int) -> int:
    return mask.bit_count()


class FinitePoset:
    """Immutable finite poset with cached down- and up-cones.

    ``up[i]`` is the bitset of all j with i <= j and ``down[i]`` the bitset of
    all j with j <= i. ``bottom``/``top`` are element indices or None.
    """

    def __init__(self, labels: Sequence[str], up: Sequence[int], *, check: bool = True):
        labels = tuple(labels)
        m = len(labels)
        if m == 0:
            raise EmptySubset("a poset needs at least one element")
        if m > MAX_ELEMENTS and check:
            raise SizeExceeded(f"{m} elements exceeds the cap of {MAX_ELEMENTS}")
        index = {}
        for i, lab in enumerate(labels):
            if lab in index:
                raise DuplicateLabel(lab)
            index[lab] = i
        if len(up) != m:
            raise ValueError("one up-cone per label required")
        down = [0] * m
        for i, u in enumerate(up):
            for j in bits(u):
                down[j] |= 1 << i
        self.labels = labels
        self.index = index
        self.size = m
        self.full = (1 << m) - 1
        self.up = tuple(up)
        self.down = tuple(down)
        if check:
            self._check_order()
        self.bottom = self._find_extreme(self.up)
        self.top = self._find_extreme(self.down)
        # Index order is a linear extension iff nothing below i has a larger index.
        self._linear = all(d >> (i + 1) == 0 for i, d in enumerate(self.down))
        self._topo = None if self._linear else _topological_order(self.up)
        self._memo = {}

    def _check_order(self):
        for i, u in enumerate(self.up):
            if not (u >> i) & 1:
                raise NotAPartialOrder(f"not reflexive at {self.labels[i]!r}")
            if u >> self.size:
                raise NotAPartialOrder("cone references a non-element")
            for j in bits(u):
                if j != i and (self.up[j] >> i) & 1:
                    raise NotAPartialOrder(
                        f"not antisymmetric: {self.labels[i]!r}, {self.labels[j]!r}")
                if self.up[j] & ~u:
                    raise NotAPartialOrder(f"not transitive through {self.labels[j]!r}")

    def _find_extreme(self, cones):
        for i, c in enumerate(cones):
            if c == self.full:
                return i
        return None

    @classmethod
    def from_covers(cls, labels: Sequence[str], covers: Iterable[tuple[str, str]]) -> "FinitePoset":
        return build_from_covers(labels, covers)

    def __len__(self):
        return self.size

    def __repr__(self):
        return f"{type(self).__name__}({self.size} elements)"

    def __eq__(self, other):
        return (isinstance(other, FinitePoset) and type(self) is type(other)
                and self.labels == other.labels and self.up == other.up
                and getattr(self, "inv", None) == getattr(other, "inv", None))

    def __hash__(self):
        return hash((self.labels, self.up))

    # -- element helpers -------------------------------------------------

    def idx(self, label: str) -> int:
        try:
            return self.index[label]
        except KeyError:
            raise UnknownLabel(label) from None

    def mask(self, labels: Iterable[str]) -> int:
        return mask_of(self.idx(lab) for lab in labels)

    def labels_of(self, mask: int) -> list[str]:
        return [self.labels[i] for i in bits(mask)]

    def leq(self, x: int, y: int) -> bool:
        return bool((self.up[x] >> y) & 1)

    def comparable(self, x: int, y: int) -> bool:
        return self.leq(x, y) or self.leq(y, x)

    # -- cone operators --------------------------------------------------

    def lower_cone(self, mask: int) -> int:
        """L(A): elements below every member of A. L(empty) is everything."""
        out = self.full
        down = self.down
        while mask and out:
            low = mask & -mask
            out &= down[low.bit_length() - 1]
            mask ^= low
        return out

    def upper_cone(self, mask: int) -> int:
        """U(A): elements above every member of A. U(empty) is everything."""
        out = self.full
        up = self.up
        while mask and out:
            low = mask & -mask
            out &= up[low.bit_length() - 1]
            mask ^= low
        return out

    def is_down_closed(self, mask: int) -> bool:
        return all(self.down[i] & ~mask == 0 for i in bits(mask))

    def is_up_closed(self, mask: int) -> bool:
        return all(self.up[i] & ~mask == 0 for i in bits(mask))

    def _least_candidate(self, mask: int) -> int:
        """Some element of the nonempty ``mask`` that is minimal in it."""
        if self._linear:
            return (mask & -mask).bit_length() - 1
        for i in self._topo:
            if (mask >> i) & 1:
                return i
        raise ValueError("empty mask")

    def _greatest_candidate(self, mask: int) -> int:
        if self._linear:
            return mask.bit_length() - 1
        for i in reversed(self._topo):
            if (mask >> i) & 1:
                return i
        raise ValueError("empty mask")

    def least(self, mask: int) -> int | None:
        """The least element of ``mask`` under the induced order, if any."""
        if not mask:
            return None
        z = self._least_candidate(mask)
        return z if self.up[z] & mask == mask else None

    def greatest(self, mask: int) -> int | None:
        if not mask:
            return None
        z = self._greatest_candidate(mask)
        return z if self.down[z] & mask == mask else None

    def join(self, x: int, y: int) -> int | None:
        """Least upper bound of x and y, or None when undefined."""
        return self.least(self.up[x] & self.up[y])

    def meet(self, x: int, y: int) -> int | None:
        return self.greatest(self.down[x] & self.down[y])

    def join_set(self, mask: int) -> int | None:
        return self.least(self.upper_cone(mask))

    def meet_set(self, mask: int) -> int | None:
        return self.greatest(self.lower_cone(mask))

    def maximal_elements(self, mask: int) -> int:
        """Members of ``mask`` with no strictly greater member."""
        out = 0
        for i in bits(mask):
            if self.up[i] & mask == 1 << i:
                out |= 1 << i
        return out

    def minimal_elements(self, mask: int) -> int:
        out = 0
        for i in bits(mask):
            if self.down[i] & mask == 1 << i:
                out |= 1 << i
        return out

    # -- derived structure -----------------------------------------------

    def covers(self) -> list[tuple[int, int]]:
        """Cover pairs (x, y), y covering x, sorted by index."""
        out = []
        for x in range(self.size):
            strict = self.up[x] & ~(1 << x)
            for y in bits(self.minimal_elements(strict)):
                out.append((x, y))
        return out

    def heights(self) -> list[int]:
        """Length of the longest chain ending at each element."""
        order = range(self.size) if self._linear else self._topo
        h = [0] * self.size
        for i in order:
            below = self.down[i] & ~(1 << i)
            if below:
                h[i] = 1 + max(h[j] for j in bits(below))
        return h

    def induced_subposet(self, mask: int) -> "FinitePoset":
        """Poset on ``mask`` with the restricted order; ``origin`` maps back."""
        if not mask:
            raise EmptySubset("induced subposet of the empty set")
        members = list(bits(mask))
        pos = {old: new for new, old in enumerate(members)}
        up = []
        for old in members:
            up.append(mask_of(pos[j] for j in bits(self.up[old] & mask)))
        sub = FinitePoset([self.labels[i] for i in members], up, check=False)
        sub.origin = tuple(members)
        return sub

    def lift(self, mask: int) -> int:
        """Map a bitset over this (induced) poset back to the parent indices."""
        origin = getattr(self, "origin", None)
        if origin is None:
            return mask
        return mask_of(origin[i] for i in bits(mask))

    def is_lattice(self) -> bool:
        return lattice_witness(self) is None


def lattice_witness(P: FinitePoset) -> tuple[int, int] | None:
    """First pair (by index) lacking a join or meet, or None for a lattice."""
    fast = getattr(P, "_lattice_fast", None)
    if fast is not None:
        return fast()
    # With a bottom, all binary joins already force all meets (and dually).
    want_join = P.bottom is not None or P.top is None
    want_meet = P.bottom is None
    for x in range(P.size):
        ux, dx = P.up[x], P.down[x]
        for y in range(x + 1, P.size):
            if (ux >> y) & 1 or (dx >> y) & 1:
                continue
            if want_join and P.least(ux & P.up[y]) is None:
                return (x, y)
            if want_meet and P.greatest(dx & P.down[y]) is None:
                return (x, y)
    return None


def _topological_order(up: Sequence[int]) -> list[int]:
    m = len(up)
    indeg = [0] * m
    for i, u in enumerate(up):
        for j in bits(u & ~(1 << i)):
            indeg[j] += 1
    queue = deque(i for i in range(m) if indeg[i] == 0)
    order = []
    while queue:
        i = queue.popleft()
        order.append(i)
        for j in bits(up[i] & ~(1 << i)):
            indeg[j] -= 1
            if indeg[j] == 0:
                queue.append(j)
    return order


def build_from_covers(labels: Sequence[str], covers: Iterable[tuple[str, str]]) -> FinitePoset:
    """Poset whose order is the reflexive-transitive closure of ``covers``."""
    labels = list(labels)
    if len(labels) > MAX_ELEMENTS:
        raise SizeExceeded(f"{len(labels)} elements exceeds the cap of {MAX_ELEMENTS}")
    index = {}
    for i, lab in enumerate(labels):
        if lab in index:
            raise DuplicateLabel(lab)
        index[lab] = i
    m = len(labels)
    succ = [[] for _ in range(m)]
    indeg = [0] * m
    for x, y in covers:
        if x not in index:
            raise UnknownLabel(x)
        if y not in index:
            raise UnknownLabel(y)
        i, j = index[x], index[y]
        succ[i].append(j)
        indeg[j] += 1
    queue = deque(i for i in range(m) if indeg[i] == 0)
    order = []
    while queue:
        i = queue.popleft()
        order.append(i)
        for j in succ[i]:
            indeg[j] -= 1
            if indeg[j] == 0:
                queue.append(j)
    if len(order) != m:
        stuck = [labels[i] for i in range(m) if indeg[i] > 0]
        raise CycleDetected("cover relation has a cycle through " + ", ".join(stuck))
    up = [1 << i for i in range(m)]
    for i in reversed(order):
        for j in succ[i]:
            up[i] |= up[j]
    return FinitePoset(labels, up, check=False)


def order_isomorphism(P: FinitePoset, Q: FinitePoset) -> tuple[int, ...] | None:
    """A map f with x <= y iff f(x) <= f(y), as a tuple over P's indices, or None.

    Plain backtracking pruned by cone sizes; meant for small posets.
    """
    if P.size != Q.size:
        return None
    sig_p = [(P.up[i].bit_count(), P.down[i].bit_count()) for i in range(P.size)]
    sig_q = [(Q.up[j].bit_count(), Q.down[j].bit_count()) for j in range(Q.size)]
    if sorted(sig_p) != sorted(sig_q):
        return None
    order = range(P.size) if P._linear else P._topo
    order = list(order)
    f = [None] * P.size
    used = 0

    def extend(k):
        nonlocal used
        if k == len(order):
            return True
        x = order[k]
        for y in range(Q.size):
            if (used >> y) & 1 or sig_q[y] != sig_p[x]:
                continue
            ok = True
            for z in order[:k]:
                if P.leq(z, x) != Q.leq(f[z], y) or P.leq(x, z) != Q.leq(y, f[z]):
                    ok = False
                    break
            if ok:
                f[x] = y
                used |= 1 << y
                if extend(k + 1):
                    return True
                used &= ~(1 << y)
        f[x] = None
        return False

    return tuple(f) if extend(0) else None
