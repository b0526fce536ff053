"""Orthoposets: bounded posets with an antitone involution that complements.

Also holds the report type shared by every axiom check, and the two checks
(orthoposet, orthogonal) that the remaining machinery depends on.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

from .errors import NotAnOrthoposet, NotBounded, NotClosedUnderInvolution
from .poset import FinitePoset, bits, mask_of


@dataclass(frozen=True)
class Verdict:
    axiom: str
    passed: bool
    witness: tuple[int, ...] = ()
    labels: tuple[str, ...] = ()
    equation: str = ""


@dataclass
class AxiomReport:
    verdicts: list[Verdict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(v.passed for v in self.verdicts)

    def failures(self) -> list[Verdict]:
        return [v for v in self.verdicts if not v.passed]

    def __getitem__(self, axiom: str) -> Verdict:
        for v in self.verdicts:
            if v.axiom == axiom:
                return v
        raise KeyError(axiom)

    def __contains__(self, axiom: str) -> bool:
        return any(v.axiom == axiom for v in self.verdicts)

    def extend(self, other: "AxiomReport") -> "AxiomReport":
        self.verdicts.extend(other.verdicts)
        return self

    def to_tsv(self) -> str:
        lines = []
        for v in self.verdicts:
            lines.append(f"{v.axiom}\t{'pass' if v.passed else 'fail'}\t{','.join(v.labels)}")
        return "\n".join(lines) + "\n"

    def to_text(self) -> str:
        width = max((len(v.axiom) for v in self.verdicts), default=0)
        lines = []
        for v in self.verdicts:
            line = f"{v.axiom:<{width}}  {'pass' if v.passed else 'FAIL'}"
            if not v.passed and v.labels:
                line += f"  witness ({', '.join(v.labels)})"
            if not v.passed and v.equation:
                line += f"  {v.equation}"
            lines.append(line)
        return "\n".join(lines) + "\n"


def verdict(P: FinitePoset, axiom: str, witness=None, equation: str = "") -> Verdict:
    if witness is None:
        return Verdict(axiom, True)
    witness = tuple(witness)
    return Verdict(axiom, False, witness, tuple(P.labels[i] for i in witness), equation)


class OrthoPoset(FinitePoset):
    """A bounded poset together with an involution permutation ``inv``.

    The constructor runs the orthoposet checks unless ``check=False`` and
    raises ``NotAnOrthoposet`` carrying the failing report.
    """

    def __init__(self, labels: Sequence[str], up: Sequence[int], inv: Sequence[int], *, check: bool = True):
        super().__init__(labels, up, check=check)
        self.inv = tuple(inv)
        if check:
            report = check_orthoposet(self, self.inv)
            if not report.passed:
                raise NotAnOrthoposet(report)

    @classmethod
    def of(cls, P: FinitePoset, involution: Sequence[int]) -> "OrthoPoset":
        out = cls(P.labels, P.up, involution, check=False)
        report = check_orthoposet(out, out.inv)
        if not report.passed:
            raise NotAnOrthoposet(report)
        return out

    def prime(self, mask: int) -> int:
        """Image of an element set under the involution."""
        inv = self.inv
        return mask_of(inv[i] for i in bits(mask))

    def orbits(self) -> list[int]:
        """Involution orbits {x, x'} as bitsets, ordered by least member."""
        seen = 0
        out = []
        for i in range(self.size):
            if not (seen >> i) & 1:
                o = (1 << i) | (1 << self.inv[i])
                seen |= o
                out.append(o)
        return out

    def is_involution_closed(self, mask: int) -> bool:
        return self.prime(mask) == mask

    def perp(self, x: int, y: int) -> bool:
        return self.leq(x, self.inv[y])

    def restrict(self, mask: int) -> "OrthoPoset":
        """Induced orthoposet on an involution-closed set holding 0 and 1."""
        if not self.is_involution_closed(mask):
            raise NotClosedUnderInvolution(",".join(self.labels_of(mask)))
        sub = self.induced_subposet(mask)
        pos = {old: new for new, old in enumerate(sub.origin)}
        inv = [pos[self.inv[old]] for old in sub.origin]
        out = OrthoPoset(sub.labels, sub.up, inv, check=False)
        out.origin = sub.origin
        return out

    @cached_property
    def orthogonal_witness(self) -> tuple[int, int] | None:
        return _orthogonal_witness(self)

    @property
    def is_orthogonal(self) -> bool:
        return self.orthogonal_witness is None


def check_orthoposet(P: FinitePoset, involution: Sequence[int]) -> AxiomReport:
    """Involutive, antitone and complementation verdicts for ``involution``."""
    if P.bottom is None or P.top is None:
        raise NotBounded("an orthoposet needs a bottom and a top")
    inv = tuple(involution)
    m = P.size
    if sorted(inv) != list(range(m)):
        raise ValueError("involution must be a permutation of the element indices")
    report = AxiomReport()
    bad = next((x for x in range(m) if inv[inv[x]] != x), None)
    report.verdicts.append(verdict(P, "involutive", None if bad is None else (bad,), "x'' != x"))
    bad = None
    for x in range(m):
        for y in bits(P.up[x]):
            if not P.leq(inv[y], inv[x]):
                bad = (x, y)
                break
        if bad:
            break
    report.verdicts.append(verdict(P, "antitone", bad, "x <= y but not y' <= x'"))
    bad = None
    bot, top = 1 << P.bottom, 1 << P.top
    for x in range(m):
        if P.up[x] & P.up[inv[x]] != top or P.down[x] & P.down[inv[x]] != bot:
            bad = (x,)
            break
    report.verdicts.append(verdict(P, "complementation", bad, "x v x' != 1 or x ^ x' != 0"))
    return report


def _orthogonal_witness(P: OrthoPoset):
    fast = getattr(P, "_orthogonal_fast", None)
    if fast is not None:
        return fast()
    inv = P.inv
    for x in range(P.size):
        for y in bits(P.down[inv[x]]):
            if P.join(x, y) is None:
                return (x, y)
    return None


def check_orthogonal(P: OrthoPoset) -> AxiomReport:
    """Pass iff every orthogonal pair x <= y' has a join."""
    return AxiomReport([verdict(P, "orthogonal", P.orthogonal_witness,
                                "x _|_ y but x v y undefined")])


def orthogonal_violation(P: OrthoPoset, x: int, y: int) -> bool:
    return P.perp(x, y) and P.join(x, y) is None
