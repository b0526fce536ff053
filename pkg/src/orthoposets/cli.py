"""Command-line front end.

Exit codes: 0 success, 1 property or axiom failure, 2 input error,
3 enumeration stopped at the search budget.
"""

from __future__ import annotations

import argparse
import contextlib
import io
import re
import sys
from pathlib import Path

from . import axioms, blocks, config, constructions, properties
from .commutation import arrow, c_relation, commutator_d, delta, relation_matrix
from .errors import (
    BadDivisor,
    BadParameters,
    BadPartition,
    NotComparable,
    OrthoposetError,
    ParseError,
    SizeExceeded,
    UnknownFixture,
    UnknownLabel,
)
from .formats import read_structure, write_family, write_orthoposet
from .ortho import OrthoPoset, check_orthoposet
from .poset import bits, mask_of

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_INCOMPLETE = 0, 1, 2, 3

INPUT_ERRORS = (ParseError, UnknownLabel, UnknownFixture, BadParameters, BadDivisor,
                BadPartition, NotComparable, SizeExceeded)

_PNK_NAME = re.compile(r"(?:pnk(\d)(\d)|pnk_?(\d+)_(\d+)|p(\d+)_(\d+))\Z")


class InputError(Exception):
    pass


def resolve(name: str, as_: str | None = None, strict: bool = True):
    """A file path, a fixture name, ``balanced`` or a P_nk name (pnk62, p12_2)."""
    path = Path(name)
    if path.is_file():
        return read_structure(path.read_text(encoding="utf-8"), as_, strict)
    if name in constructions.FIXTURES:
        if as_ is not None:
            return read_structure(constructions.fixture_text(name), as_, strict)
        return constructions.load_fixture(name)
    if name == "balanced":
        return constructions.build_balanced({1, 2, 3}, {4, 5, 6})
    m = _PNK_NAME.match(name)
    if m:
        n, k = (int(g) for g in m.groups() if g is not None)
        return constructions.build_pnk(n, k)
    raise InputError(f"no such file or structure: {name}")


def element(P, label: str) -> int:
    if hasattr(P, "member_index"):
        try:
            return P.element(label)
        except ValueError as exc:
            raise UnknownLabel(label) from exc
    return P.idx(label)


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _points(spec: str) -> set[int]:
    return {int(p) for p in spec.split(",") if p}


# -- check ------------------------------------------------------------------

def cmd_check(args) -> int:
    P = resolve(args.file, args.as_, strict=False)
    if not isinstance(P, OrthoPoset):
        print("orthoposet  FAIL  no involution given")
        return EXIT_FAIL
    base = check_orthoposet(P, P.inv)
    report = base if not base.passed else axioms.axiom_ladder(P)
    sys.stdout.write(report.to_tsv() if args.report == "tsv" else report.to_text())
    if not base.passed:
        return EXIT_FAIL
    if args.strict == "omp" and not report["orthomodular"].passed:
        return EXIT_FAIL
    return EXIT_OK


# -- construct --------------------------------------------------------------

def _need(args, *names):
    for n in names:
        if getattr(args, n) in (None, []):
            raise InputError(f"construct {args.kind} needs --{n.replace('_', '-')}")


def cmd_construct(args) -> int:
    kind = args.kind
    if kind == "pnk":
        _need(args, "n", "k")
        text = write_family(constructions.build_pnk(args.n, args.k))
    elif kind == "balanced":
        x = _points(args.x or "1,2,3")
        y = _points(args.y or "4,5,6")
        text = write_family(constructions.build_balanced(x, y))
    elif kind in constructions.FIXTURES:
        text = constructions.fixture_text(kind)
    elif kind == "product":
        if not args.inp or len(args.inp) != 2:
            raise InputError("construct product needs --in twice")
        P, Q = (resolve(n) for n in args.inp)
        text = write_orthoposet(constructions.direct_product(P, Q))
    elif kind == "interval":
        _need(args, "inp", "from_", "to")
        P = resolve(args.inp[0])
        a, b = element(P, args.from_), element(P, args.to)
        text = write_orthoposet(constructions.interval_orthoposet(P, a, b))
    elif kind == "closure":
        _need(args, "inp", "seed")
        P = resolve(args.inp[0])
        seed = mask_of(element(P, t.strip()) for t in args.seed.split(";") if t.strip())
        S = constructions.ortho_closure(P, seed)
        text = _write_subset(P, S)
    elif kind == "star":
        _need(args, "inp", "atom")
        F = resolve(args.inp[0])
        if not hasattr(F, "member_index"):
            raise InputError("construct star needs a subset family")
        text = _write_subset(F, constructions.star_sublattice(F, args.atom).elements)
    else:  # pragma: no cover - argparse restricts choices
        raise InputError(f"unknown kind {kind}")
    _emit(text, args.output)
    return EXIT_OK


def _write_subset(P, S: int) -> str:
    if hasattr(P, "member_index"):
        return write_family(constructions.SubsetFamily(P.ground, [P.members[i] for i in bits(S)]))
    return write_orthoposet(P.restrict(S))


# -- relations --------------------------------------------------------------

def _b(v: bool) -> str:
    return "true" if v else "false"


def cmd_relations(args) -> int:
    P = resolve(args.file, args.as_)
    if not isinstance(P, OrthoPoset):
        raise InputError("relations need an orthoposet")
    if args.matrix:
        sys.stdout.write(relation_matrix(P, args.matrix).to_tsv())
        return EXIT_OK
    x, y = (element(P, t) for t in args.pair)
    # subset labels carry commas, so brace them
    fam = hasattr(P, "member_index")
    lx, ly = (f"{{{P.labels[i]}}}" if fam else P.labels[i] for i in (x, y))
    out = [f"delta({lx},{ly})\t{_b(delta(P, x, y))}",
           f"delta({ly},{lx})\t{_b(delta(P, y, x))}"]
    if P.is_orthogonal:
        out.append(f"arrow({lx},{ly})\t{_b(arrow(P, x, y) is not None)}")
    else:
        out.append(f"arrow({lx},{ly})\tn/a")
    out.append(f"C({lx},{ly})\t{c_relation(P, x, y)}")
    out.append(f"C({ly},{lx})\t{c_relation(P, y, x)}")
    out.append(commutator_d(P, x, y).format(P))
    print("\n".join(out))
    return EXIT_OK


# -- blocks -----------------------------------------------------------------

_CHECKERS = {
    "delta": blocks.is_delta_block,
    "boolean": blocks.is_maximal_boolean_subalgebra,
    "sublattice": blocks.is_maximal_sub_ortholattice,
}


def _read_sets(P, path: str) -> list[int]:
    """One set per line, in the block-list format or as bare labels.

    Labels are comma-separated, or ';'-separated when they are subset labels.
    """
    out = []
    for no, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "{" in line:
            line = line[line.index("{") + 1:line.rindex("}")]
        try:
            out.append(mask_of(element(P, t) for t in blocks.split_labels(line)))
        except UnknownLabel as exc:
            raise ParseError(f"unknown label {exc}", no) from exc
    return out


def cmd_blocks(args) -> int:
    P = resolve(args.file, args.as_)
    if not isinstance(P, OrthoPoset):
        raise InputError("blocks need an orthoposet")
    if args.verify:
        check = _CHECKERS[args.kind]
        status = EXIT_OK
        for S in _read_sets(P, args.verify):
            found = check(P, S)
            labels = blocks.join_labels(P.labels_of(S))
            if found:
                print(f"ok\t{{{labels}}}")
            else:
                status = EXIT_FAIL
                print(f"fail\t{found.reason}\t{{{labels}}}")
        return status
    if args.kind == "delta":
        found, complete = blocks.delta_blocks(P), True
    elif args.kind == "boolean":
        res = blocks.maximal_boolean_subalgebras(P, args.budget)
        found, complete = res.structures, res.complete
    else:
        res = blocks.maximal_sub_ortholattices(P, args.budget)
        found, complete = res.structures, res.complete
    for S in found:
        print(S.format(P))
    if not complete:
        print("incomplete: search budget exhausted", file=sys.stderr)
        return EXIT_INCOMPLETE
    return EXIT_OK


# -- export-dot -------------------------------------------------------------

def _q(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(P, name: str = "P") -> str:
    heights = P.heights()
    out = [f"digraph {_q(name)} {{", "  rankdir=BT;", "  node [shape=plaintext];"]
    for i, lab in enumerate(P.labels):
        out.append(f"  n{i} [label={_q(lab)}];")
    for h in range(max(heights, default=-1) + 1):
        row = " ".join(f"n{i};" for i in range(P.size) if heights[i] == h)
        out.append(f"  {{ rank=same; {row} }}")
    for x, y in P.covers():
        out.append(f"  n{x} -> n{y};")
    out.append("}")
    return "\n".join(out) + "\n"


def cmd_export_dot(args) -> int:
    P = resolve(args.file, args.as_)
    _emit(to_dot(P, Path(args.file).stem), args.output)
    return EXIT_OK


# -- verify -----------------------------------------------------------------

def cmd_verify(args) -> int:
    if args.all_fixtures:
        results = properties.run_corpus()
    elif args.file:
        P = resolve(args.file, args.as_)
        with config.verification(True):
            results = {args.file: properties.run_suite(P)}
    else:
        raise InputError("verify needs a file or --all-fixtures")
    failed = 0
    for name, rs in results.items():
        for r in rs:
            if r.status == "fail":
                failed += 1
            if r.status != "skip" or args.show_skipped:
                print(f"{name}\t{r.line()}")
    total = sum(len(rs) for rs in results.values())
    print(f"{failed} failed of {total} checks on {len(results)} structure(s)")
    return EXIT_FAIL if failed else EXIT_OK


# -- entry point ------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="orthoposets", description="Analyze finite orthoposets.")
    sub = ap.add_subparsers(dest="command", required=True)

    def structure(p, nargs=None):
        p.add_argument("file", nargs=nargs, help="file path, fixture name, balanced, or pnk62 / p12_2")
        p.add_argument("--as", dest="as_", choices=("orthoposet", "subsetfamily"),
                       help="override format detection")

    p = sub.add_parser("check", help="print the axiom ladder")
    structure(p)
    p.add_argument("--report", choices=("text", "tsv"), default="text")
    p.add_argument("--strict", choices=("omp",), help="omp: exit 0 only if orthomodular")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("construct", help="write a structure")
    p.add_argument("kind", choices=("pnk", "balanced", *constructions.FIXTURES,
                                    "product", "interval", "closure", "star"))
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--x", help="first block for balanced, e.g. 1,2,3")
    p.add_argument("--y", help="second block for balanced, e.g. 4,5,6")
    p.add_argument("--in", dest="inp", action="append", help="input structure (twice for product)")
    p.add_argument("--from", dest="from_")
    p.add_argument("--to")
    p.add_argument("--seed", help="labels separated by ';', e.g. 1,4;1,5")
    p.add_argument("--atom", help="the subset A of a star sublattice, e.g. 1,2")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("relations", help="commutation relations")
    structure(p)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--pair", nargs=2, metavar=("X", "Y"))
    g.add_argument("--matrix", choices=("delta", "arrow", "c"))
    p.set_defaults(func=cmd_relations)

    p = sub.add_parser("blocks", help="enumerate or verify blocks")
    structure(p)
    p.add_argument("--kind", choices=("delta", "boolean", "sublattice"), default="delta")
    p.add_argument("--verify", "--sets", dest="verify", metavar="SETSFILE")
    p.add_argument("--budget", type=int, default=blocks.DEFAULT_BUDGET)
    p.set_defaults(func=cmd_blocks)

    p = sub.add_parser("export-dot", help="Hasse diagram in DOT")
    structure(p)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_export_dot)

    p = sub.add_parser("verify", help="run the property suite")
    structure(p, nargs="?")
    p.add_argument("--all-fixtures", action="store_true")
    p.add_argument("--show-skipped", action="store_true")
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    buf = io.StringIO()
    try:
        # buffered so each command's output appears in one piece
        with contextlib.redirect_stdout(buf):
            return args.func(args)
    except (InputError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except INPUT_ERRORS as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OrthoposetError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    finally:
        sys.stdout.write(buf.getvalue())
        sys.stdout.flush()


if __name__ == "__main__":
    sys.exit(main())
