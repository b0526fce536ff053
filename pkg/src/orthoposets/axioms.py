"""Axiom ladder: orthomodular, modular, distributive, Boolean, weakly Boolean.

Every check scans exhaustively in index order and reports the
lexicographically least witness. Each failing tuple can be replayed with
``replay``, which re-evaluates the defining condition on that tuple alone.
"""

from __future__ import annotations

from .commutation import delta
from .errors import InternalInconsistency, NotOrthogonal
from .ortho import (
    AxiomReport,
    OrthoPoset,
    Verdict,
    check_orthogonal,
    check_orthoposet,
    orthogonal_violation,
    verdict,
)
from .poset import FinitePoset, bits, lattice_witness

OM_METHODS = ("direct-law", "dual-law", "unique-complement", "o6-free", "delta-criterion")


# -- orthomodularity --------------------------------------------------------

def direct_law_violation(P: OrthoPoset, x: int, y: int) -> bool:
    """x <= y but x ∨ (x ∨ y')' != y (an undefined join counts as a violation)."""
    if not P.leq(x, y):
        return False
    inv = P.inv
    j = P.join(x, inv[y])
    if j is None:
        return True
    return P.join(x, inv[j]) != y


def dual_law_violation(P: OrthoPoset, x: int, y: int) -> bool:
    """x <= y but (y' ∨ (x ∨ y')')' != x."""
    if not P.leq(x, y):
        return False
    inv = P.inv
    j = P.join(x, inv[y])
    if j is None:
        return True
    k = P.join(inv[y], inv[j])
    return k is None or inv[k] != x


def unique_complement_violation(P: OrthoPoset, x: int, y: int) -> bool:
    """x <= y and y ∧ x' = 0 but x != y."""
    return x != y and P.leq(x, y) and P.meet(y, P.inv[x]) == P.bottom


def delta_criterion_violation(P: OrthoPoset, x: int, y: int) -> bool:
    """x <= y but not y Δ x."""
    return P.leq(x, y) and not delta(P, y, x)


_PAIR_LAWS = {
    "direct-law": (direct_law_violation, "x <= y but x v (x v y')' != y"),
    "dual-law": (dual_law_violation, "x <= y but (y' v (x v y')')' != x"),
    "unique-complement": (unique_complement_violation, "x <= y, y ^ x' = 0, x != y"),
    "delta-criterion": (delta_criterion_violation, "x <= y but not y Δ x"),
}


def _first_pair(P: OrthoPoset, test):
    for x in range(P.size):
        for y in bits(P.up[x]):
            if test(P, x, y):
                return (x, y)
    return None


def check_orthomodular(P: OrthoPoset, method: str = "direct-law") -> AxiomReport:
    """Orthomodularity of an orthogonal poset by one of five equivalent routes.

    ``method="all"`` runs every route and raises ``InternalInconsistency`` if
    their verdicts differ.
    """
    if not P.is_orthogonal:
        raise NotOrthogonal("orthomodularity is checked on orthogonal posets only")
    methods = OM_METHODS if method == "all" else (method,)
    report = AxiomReport()
    for meth in methods:
        if meth == "o6-free":
            occ = find_o6(P)
            report.verdicts.append(verdict(P, "orthomodular[o6-free]", occ[0] if occ else None,
                                           "contains an orthogonal copy of O6"))
        elif meth in _PAIR_LAWS:
            test, eq = _PAIR_LAWS[meth]
            report.verdicts.append(verdict(P, f"orthomodular[{meth}]", _first_pair(P, test), eq))
        else:
            raise ValueError(f"unknown orthomodularity method {meth!r}")
    if len({v.passed for v in report.verdicts}) > 1:
        raise InternalInconsistency(
            "orthomodularity routes disagree: "
            + ", ".join(f"{v.axiom}={v.passed}" for v in report.verdicts))
    return report


def is_orthomodular(P: OrthoPoset) -> bool:
    if not P.is_orthogonal:
        return False
    cached = P._memo.get("orthomodular")
    if cached is None:
        cached = check_orthomodular(P).passed
        P._memo["orthomodular"] = cached
    return cached


# -- O6 ---------------------------------------------------------------------

# O6 in the role order (0, x, y, y', x', 1): pairs (i, j) with role i <= role j.
_O6_LEQ = frozenset(
    [(i, i) for i in range(6)]
    + [(0, j) for j in range(6)] + [(i, 5) for i in range(6)]
    + [(1, 2), (3, 4)])


def o6_occurrence(P: OrthoPoset, x: int, y: int, orthogonal: bool = True) -> tuple[int, ...] | None:
    """The tuple (0, x, y, y', x', 1) if it spans an orthogonal copy of O6.

    Besides the induced order, the copy must keep its orthogonal joins:
    x ⊥ y' inside the copy, so x ∨ y' has to be 1 in P as well.
    """
    inv = P.inv
    roles = (P.bottom, x, y, inv[y], inv[x], P.top)
    if len(set(roles)) != 6:
        return None
    for i in range(6):
        for j in range(6):
            if P.leq(roles[i], roles[j]) != ((i, j) in _O6_LEQ):
                return None
    if orthogonal and P.join(x, inv[y]) != P.top:
        return None
    return roles


def find_o6(P: OrthoPoset, orthogonal: bool = True) -> list[tuple[int, ...]]:
    """All orthogonal copies of O6, one canonical 6-tuple per element set.

    With ``orthogonal=False`` the join condition is dropped and every induced,
    involution-closed copy is reported.
    """
    seen = set()
    out = []
    for x in range(P.size):
        for y in bits(P.up[x] & ~(1 << x)):
            occ = o6_occurrence(P, x, y, orthogonal)
            if occ is None:
                continue
            key = frozenset(occ)
            if key not in seen:
                seen.add(key)
                out.append(occ)
    return out


# -- lattice, modularity, distributivity ------------------------------------

def check_lattice(P: FinitePoset) -> AxiomReport:
    return AxiomReport([verdict(P, "lattice", lattice_witness(P), "x v y or x ^ y undefined")])


def modular_violation(P: FinitePoset, a: int, b: int, c: int) -> bool:
    """a <= c but L(U(a,b), c) != LU(a, L(b,c))."""
    if not P.leq(a, c):
        return False
    lhs = P.lower_cone(P.up[a] & P.up[b]) & P.down[c]
    rhs = P.lower_cone(P.up[a] & P.upper_cone(P.down[b] & P.down[c]))
    return lhs != rhs


def modular_dual_violation(P: FinitePoset, a: int, b: int, c: int) -> bool:
    """a <= c but U(a, L(b,c)) != UL(U(a,b), c)."""
    if not P.leq(a, c):
        return False
    lhs = P.up[a] & P.upper_cone(P.down[b] & P.down[c])
    rhs = P.upper_cone(P.lower_cone(P.up[a] & P.up[b]) & P.down[c])
    return lhs != rhs


def check_modular(P: FinitePoset) -> AxiomReport:
    """Modularity in its cone form, cross-checked triple by triple with its dual."""
    first = None
    for a in range(P.size):
        for b in range(P.size):
            for c in bits(P.up[a]):
                v1 = modular_violation(P, a, b, c)
                if v1 != modular_dual_violation(P, a, b, c):
                    raise InternalInconsistency(
                        f"modular forms disagree at {P.labels[a]}, {P.labels[b]}, {P.labels[c]}")
                if v1 and first is None:
                    first = (a, b, c)
    return AxiomReport([
        verdict(P, "modular", first, "a <= c but L(U(a,b),c) != LU(a,L(b,c))")])


def _dist_forms(P: FinitePoset, x: int, y: int, z: int) -> tuple[bool, bool, bool, bool]:
    up, down = P.up, P.down
    L, U = P.lower_cone, P.upper_cone
    uxy = up[x] & up[y]
    lxz, lyz = down[x] & down[z], down[y] & down[z]
    lxy = down[x] & down[y]
    uxz, uyz = up[x] & up[z], up[y] & up[z]
    f1 = L(uxy) & down[z] == L(U(lxz | lyz))
    f2 = U(lxz | lyz) == U(L(uxy) & down[z])
    f3 = U(lxy) & up[z] == U(L(uxz | uyz))
    f4 = L(uxz | uyz) == L(U(lxy) & up[z])
    return f1, f2, f3, f4


DISTRIBUTIVE_FORMS = (
    "L(U(x,y),z) = LU(L(x,z),L(y,z))",
    "U(L(x,z),L(y,z)) = UL(U(x,y),z)",
    "U(L(x,y),z) = UL(U(x,z),U(y,z))",
    "L(U(x,z),U(y,z)) = LU(L(x,y),z)",
)


def distributive_violation(P: FinitePoset, x: int, y: int, z: int, form: int = 1) -> bool:
    return not _dist_forms(P, x, y, z)[form - 1]


def check_distributive(P: FinitePoset) -> AxiomReport:
    """The distributive identity in all four cone forms.

    Forms 1/2 and 3/4 are Galois duals of each other and must agree on every
    triple; across the two pairs only the global verdicts must agree.
    """
    firsts = [None, None, None, None]
    m = P.size
    for x in range(m):
        for y in range(m):
            for z in range(m):
                f = _dist_forms(P, x, y, z)
                if f[0] != f[1] or f[2] != f[3]:
                    raise InternalInconsistency(
                        f"distributive dual forms disagree at {P.labels[x]}, {P.labels[y]}, {P.labels[z]}")
                for k in range(4):
                    if not f[k] and firsts[k] is None:
                        firsts[k] = (x, y, z)
    if len({w is None for w in firsts}) > 1:
        raise InternalInconsistency("distributive forms disagree globally")
    return AxiomReport([
        verdict(P, "distributive" if k == 0 else f"distributive[{k + 1}]", firsts[k],
                DISTRIBUTIVE_FORMS[k])
        for k in range(4)])


def check_boolean(P: OrthoPoset) -> AxiomReport:
    """A complemented poset is Boolean iff it is distributive."""
    dist = check_distributive(P)
    v = dist.verdicts[0]
    return AxiomReport([verdict(P, "boolean", v.witness if not v.passed else None, v.equation)])


def weakly_boolean_violation(P: OrthoPoset, x: int, y: int) -> bool:
    """L(x,y) = L(x,y') = {0} with x != 0."""
    bot = 1 << P.bottom
    return (x != P.bottom and P.down[x] & P.down[y] == bot
            and P.down[x] & P.down[P.inv[y]] == bot)


def check_weakly_boolean(P: OrthoPoset) -> AxiomReport:
    first = None
    for x in range(P.size):
        for y in range(P.size):
            if weakly_boolean_violation(P, x, y):
                first = (x, y)
                break
        if first:
            break
    return AxiomReport([verdict(P, "weakly-boolean", first, "x ^ y = x ^ y' = 0 but x != 0")])


def check_maximality_property(P: FinitePoset) -> AxiomReport:
    """Every L(x,y) has a maximal element (automatic for finite posets)."""
    first = None
    for x in range(P.size):
        for y in range(P.size):
            if not P.maximal_elements(P.down[x] & P.down[y]):
                first = (x, y)
                break
        if first:
            break
    return AxiomReport([verdict(P, "maximality", first, "L(x,y) has no maximal element")])


# -- ladder and replay ------------------------------------------------------

def axiom_ladder(P: OrthoPoset) -> AxiomReport:
    """Full report: orthoposet axioms up to Boolean and weakly Boolean."""
    report = check_orthoposet(P, P.inv)
    report.extend(check_orthogonal(P))
    if P.is_orthogonal:
        om = check_orthomodular(P, "all")
        direct = om["orthomodular[direct-law]"]
        report.verdicts.append(Verdict("orthomodular", direct.passed, direct.witness,
                                       direct.labels, direct.equation))
        report.extend(om)
    else:
        report.verdicts.append(verdict(P, "orthomodular", P.orthogonal_witness,
                                       "not orthogonal, hence not orthomodular"))
    report.extend(check_lattice(P))
    report.extend(check_modular(P))
    dist = check_distributive(P)
    report.verdicts.append(dist.verdicts[0])
    report.extend(check_boolean(P))
    report.extend(check_weakly_boolean(P))
    report.extend(check_maximality_property(P))
    return report


def replay(P: OrthoPoset, axiom: str, witness: tuple[int, ...]) -> bool:
    """True iff ``witness`` is a genuine violation of ``axiom`` in P."""
    inv = P.inv
    if axiom == "involutive":
        (x,) = witness
        return inv[inv[x]] != x
    if axiom == "antitone":
        x, y = witness
        return P.leq(x, y) and not P.leq(inv[y], inv[x])
    if axiom == "complementation":
        (x,) = witness
        return P.join(x, inv[x]) != P.top or P.meet(x, inv[x]) != P.bottom
    if axiom == "orthogonal":
        return orthogonal_violation(P, *witness)
    if axiom in ("orthomodular", "orthomodular[direct-law]"):
        if not P.is_orthogonal and axiom == "orthomodular":
            return orthogonal_violation(P, *witness)
        return direct_law_violation(P, *witness)
    if axiom.startswith("orthomodular["):
        meth = axiom[len("orthomodular["):-1]
        if meth == "o6-free":
            return o6_occurrence(P, witness[1], witness[2]) == tuple(witness)
        return _PAIR_LAWS[meth][0](P, *witness)
    if axiom == "lattice":
        x, y = witness
        return P.join(x, y) is None or P.meet(x, y) is None
    if axiom == "modular":
        return modular_violation(P, *witness)
    if axiom in ("distributive", "boolean"):
        return distributive_violation(P, *witness, form=1)
    if axiom.startswith("distributive["):
        return distributive_violation(P, *witness, form=int(axiom[-2]))
    if axiom == "weakly-boolean":
        return weakly_boolean_violation(P, *witness)
    if axiom == "maximality":
        x, y = witness
        return not P.maximal_elements(P.down[x] & P.down[y])
    raise KeyError(axiom)
