"""Plain-text formats ``orthoposet v1`` and ``subsetfamily v1``.

orthoposet v1::

    orthoposet v1
    element 0
    element a
    element 1
    cover 0 a
    cover a 1
    involution 0 1
    involution a a

subsetfamily v1::

    subsetfamily v1
    ground 2
    member empty
    member 1,2

``#`` starts a comment. Writers emit elements in index order, covers sorted
by index pair and one involution line per orbit, so write(read(text)) is
byte-identical for any text that a writer produced.
"""

from __future__ import annotations

import re
from pathlib import Path

from .errors import OrthoposetError, ParseError
from .ortho import OrthoPoset
from .poset import FinitePoset, build_from_covers

# Widened from [A-Za-z0-9_']+ so product labels "(p,q)" and subset labels "1,4" fit.
TOKEN = re.compile(r"[A-Za-z0-9_'(),]+\Z")

ORTHOPOSET_HEADER = "orthoposet v1"
FAMILY_HEADER = "subsetfamily v1"


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line.split()


def write_orthoposet(P: FinitePoset) -> str:
    out = [ORTHOPOSET_HEADER]
    for lab in P.labels:
        out.append(f"element {lab}")
    for x, y in P.covers():
        out.append(f"cover {P.labels[x]} {P.labels[y]}")
    inv = getattr(P, "inv", None)
    if inv is not None:
        for x in range(P.size):
            if x <= inv[x]:
                out.append(f"involution {P.labels[x]} {P.labels[inv[x]]}")
    return "\n".join(out) + "\n"


def read_orthoposet(text: str, strict: bool = True) -> FinitePoset:
    """Parse ``orthoposet v1``; with ``strict=False`` the involution is kept
    even when the orthoposet axioms fail, so a checker can report them."""
    lines = list(_lines(text))
    if not lines or " ".join(lines[0][1]) != ORTHOPOSET_HEADER:
        raise ParseError(f"expected header {ORTHOPOSET_HEADER!r}", lines[0][0] if lines else 1)
    labels, covers, pairs = [], [], []
    for no, toks in lines[1:]:
        kind, args = toks[0], toks[1:]
        arity = {"element": 1, "cover": 2, "involution": 2}.get(kind)
        if arity is None:
            raise ParseError(f"unknown directive {kind!r}", no)
        if len(args) != arity:
            raise ParseError(f"{kind} takes {arity} token(s)", no)
        for t in args:
            if not TOKEN.match(t):
                raise ParseError(f"bad token {t!r}", no)
        if kind == "element":
            labels.append(args[0])
        elif kind == "cover":
            covers.append((no, args[0], args[1]))
        else:
            pairs.append((no, args[0], args[1]))
    known = set(labels)
    for no, x, y in covers + pairs:
        for t in (x, y):
            if t not in known:
                raise ParseError(f"unknown label {t!r}", no)
    try:
        P = build_from_covers(labels, [(x, y) for _, x, y in covers])
    except OrthoposetError as exc:
        raise ParseError(str(exc)) from exc
    if not pairs:
        return P
    inv = [None] * P.size
    for no, x, y in pairs:
        i, j = P.index[x], P.index[y]
        if inv[i] is not None or inv[j] is not None:
            raise ParseError(f"element paired twice in involution {x} {y}", no)
        inv[i], inv[j] = j, i
    missing = [P.labels[i] for i, v in enumerate(inv) if v is None]
    if missing:
        raise ParseError("involution leaves unpaired: " + ", ".join(missing))
    if not strict:
        return OrthoPoset(P.labels, P.up, inv, check=False)
    try:
        return OrthoPoset.of(P, inv)
    except OrthoposetError as exc:
        raise ParseError(str(exc)) from exc


def subset_label(mask: int) -> str:
    if not mask:
        return "empty"
    pts = []
    i = 0
    while mask:
        if mask & 1:
            pts.append(str(i + 1))
        mask >>= 1
        i += 1
    return ",".join(pts)


def parse_subset(token: str, n: int | None = None) -> int:
    if token == "empty":
        return 0
    mask = 0
    for part in token.split(","):
        if not part.isdigit():
            raise ValueError(f"bad ground point {part!r} in {token!r}")
        p = int(part)
        if p < 1 or (n is not None and p > n):
            raise ValueError(f"ground point {p} outside 1..{n}")
        mask |= 1 << (p - 1)
    return mask


def write_family(F) -> str:
    out = [FAMILY_HEADER, f"ground {F.ground}"]
    out.extend(f"member {subset_label(s)}" for s in F.members)
    return "\n".join(out) + "\n"


def read_family(text: str):
    from .constructions import SubsetFamily

    lines = list(_lines(text))
    if not lines or " ".join(lines[0][1]) != FAMILY_HEADER:
        raise ParseError(f"expected header {FAMILY_HEADER!r}", lines[0][0] if lines else 1)
    n = None
    members = []
    for no, toks in lines[1:]:
        kind = toks[0]
        if kind == "ground":
            if len(toks) != 2 or not toks[1].isdigit() or n is not None:
                raise ParseError("expected a single 'ground <n>'", no)
            n = int(toks[1])
        elif kind == "member":
            if n is None:
                raise ParseError("'member' before 'ground'", no)
            if len(toks) != 2:
                raise ParseError("member takes one token", no)
            try:
                members.append(parse_subset(toks[1], n))
            except ValueError as exc:
                raise ParseError(str(exc), no) from exc
        else:
            raise ParseError(f"unknown directive {kind!r}", no)
    if n is None:
        raise ParseError("missing 'ground' line")
    if len(set(members)) != len(members):
        raise ParseError("duplicate member")
    try:
        return SubsetFamily(n, members)
    except OrthoposetError as exc:
        raise ParseError(str(exc)) from exc


def read_structure(text: str, as_: str | None = None, strict: bool = True) -> FinitePoset:
    """Parse either format, chosen by the header line unless ``as_`` is given."""
    if as_ is None:
        first = next(_lines(text), (1, []))[1]
        as_ = "subsetfamily" if " ".join(first) == FAMILY_HEADER else "orthoposet"
    if as_ == "subsetfamily":
        return read_family(text)
    if as_ == "orthoposet":
        return read_orthoposet(text, strict)
    raise ValueError(f"unknown format {as_!r}")


def write_structure(P: FinitePoset) -> str:
    if hasattr(P, "ground"):
        return write_family(P)
    return write_orthoposet(P)


def load(path) -> FinitePoset:
    return read_structure(Path(path).read_text(encoding="utf-8"))
