"""Command line front end: ``lexpmv <command> SPEC [options]``.

Exit status: 0 when every check passes, 1 when a counterexample was found,
2 when nothing could be decided or the input was malformed.
"""
from __future__ import annotations

import argparse
import sys
from typing import Callable, Optional, Sequence

from .effect import check_oplus_agreement, check_pe_axioms, check_rdp2
from .gamma import PmvAlgebra, check_axioms, symmetry_witness
from .groups import UnsupportedError
from .ideals import (ProperIdealError, check_quotient, classify_ideal, is_ideal, is_normal,
                     is_prime, is_strict, tail_ideal)
from .parsing import ParseError, parse_spec
from .report import FAIL, PASS, Report
from .representation import (DecompositionError, build_decomposition, check_isomorphism,
                             check_theorem_3_2, linear_map, represent)
from .terms import check_identity

EXIT = {PASS: 0, FAIL: 1}


def exit_code(rep: Report) -> int:
    return EXIT.get(rep.verdict, 2)


class Misuse(Exception):
    pass


def _read(text: str) -> str:
    return sys.stdin.read().strip() if text == "-" else text


def _algebra(text: str) -> PmvAlgebra:
    return parse_spec(_read(text)).algebra


def _depths(m: PmvAlgebra, ideal: Optional[str]) -> list[int]:
    if ideal is None:
        out = []
        for j in range(1, m.dim):
            try:
                tail_ideal(m, j)
                out.append(j)
            except (UnsupportedError, ValueError):
                pass
        if not out:
            raise Misuse(f"{m.expr} has no tail ideals")
        return out
    kind, _, depth = ideal.partition(":")
    if kind != "tail" or not depth.isdigit():
        raise Misuse(f"--ideal expects tail:J, got {ideal!r}")
    return [int(depth)]


def _matrix(text: str):
    try:
        return [[int(v) for v in row.split(",")] for row in text.split(";")]
    except ValueError:
        raise Misuse(f"bad matrix {text!r}; use rows like '1,0;1,1'") from None


# --- commands ----------------------------------------------------------------------

def cmd_axioms(a) -> Report:
    m = _algebra(a.spec)
    rep = Report("axioms", data={"algebra": str(m)})
    with rep.timed():
        rep.merge(check_axioms(m, a.bound))
        rep.merge(check_pe_axioms(m, a.bound), "effect:")
        rep.merge(check_oplus_agreement(m, a.bound), "effect:")
        if a.rdp2:
            rep.merge(check_rdp2(m, a.rdp2_bound), "effect:")
        sym = symmetry_witness(m, a.bound)
        rep.data["unit_central"] = sym.unit_central
        if sym.witness is not None:
            rep.data["asymmetry"] = list(sym.witness)
    return rep


def cmd_ideals(a) -> Report:
    m = _algebra(a.spec)
    rep = Report("ideals", data={"algebra": str(m)})
    with rep.timed():
        for j in _depths(m, a.ideal):
            i = tail_ideal(m, j)
            for f in (is_ideal, is_normal, is_strict, is_prime, check_quotient):
                r = f(i, a.bound)
                rep.merge(r, f"tail:{j}:{r.command}:")
    return rep


def cmd_classify(a) -> Report:
    m = _algebra(a.spec)
    rep = Report("classify", data={"algebra": str(m)})
    with rep.timed():
        labels = {}
        for j in _depths(m, a.ideal):
            c = classify_ideal(tail_ideal(m, j), a.search, a.bound)
            labels[f"tail:{j}"] = c.label
            rep.merge(c.report, f"tail:{j}:")
            if c.offset is not None:
                rep.data[f"tail:{j}:b"] = list(c.offset[j:])
        rep.data["labels"] = labels
        if len(labels) == 1:
            rep.data["label"] = next(iter(labels.values()))
    return rep


def cmd_decompose(a) -> Report:
    m = _algebra(a.spec)
    rep = Report("decompose", data={"algebra": str(m)})
    with rep.timed():
        for j in _depths(m, a.ideal):
            try:
                d = build_decomposition(m, j, a.bound)
            except DecompositionError as e:
                rep.merge(e.report, f"tail:{j}:")
                continue
            rep.merge(d.report, f"tail:{j}:")
            rep.merge(check_theorem_3_2(d, a.bound, search=min(a.search, 3)), f"tail:{j}:")
            rep.data[f"tail:{j}:index"] = str(d.index)
    return rep


def cmd_represent(a) -> Report:
    m = _algebra(a.spec)
    rep = Report("represent", data={"algebra": str(m)})
    with rep.timed():
        for j in _depths(m, a.ideal):
            key = f"tail:{j}"
            try:
                r = represent(m, j, a.search, a.bound)
            except UnsupportedError as e:
                rep.unsupported(f"{key}:family", str(e), {"search": a.search})
                continue
            except DecompositionError as e:
                rep.merge(e.report, f"{key}:")
                continue
            rep.merge(r.report, f"{key}:")
            info = r.to_dict()
            rep.data[key] = {"family": "strong" if r.strong else "weak",
                             "target": info["target"], "b": info["b"],
                             "section": info["section"]}
    return rep


def cmd_identity(a) -> Report:
    m = _algebra(a.spec)
    return check_identity(m, _read(a.identity), bound=a.bound)


def cmd_isocheck(a) -> Report:
    if a.spec == "-" and a.target == "-":
        raise Misuse("only one spec may come from stdin")
    m1, m2 = _algebra(a.spec), _algebra(a.target)
    a_ = _matrix(a.matrix)
    if len(a_) != m2.dim or any(len(r) != m1.dim for r in a_):
        raise Misuse(f"matrix must be {m2.dim}x{m1.dim}")
    return check_isomorphism(m1, m2, linear_map(a_), a.bound)


COMMANDS: dict[str, Callable] = {
    "axioms": cmd_axioms, "ideals": cmd_ideals, "classify": cmd_classify,
    "decompose": cmd_decompose, "represent": cmd_represent, "identity": cmd_identity,
    "isocheck": cmd_isocheck,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lexpmv", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, ideal=False, search=False):
        sp.add_argument("spec", help='e.g. "Gamma(Z lex Z, (2,1))", or - for stdin')
        sp.add_argument("--bound", type=int, default=3, help="window bound (default 3)")
        sp.add_argument("--format", choices=("text", "json"), default="text")
        if ideal:
            sp.add_argument("--ideal", help="tail:J (default: every tail depth)")
        if search:
            sp.add_argument("--search", type=int, default=5,
                            help="entry bound for section matrices (default 5)")
        return sp

    ax = common(sub.add_parser("axioms", help="pseudo MV and pseudo effect axioms"))
    ax.add_argument("--rdp2", action="store_true", help="also check RDP2 (slow)")
    ax.add_argument("--rdp2-bound", type=int, default=2)
    common(sub.add_parser("ideals", help="ideal, normal, strict, prime, quotient"), ideal=True)
    common(sub.add_parser("classify", help="lexicographic classification"), True, True)
    common(sub.add_parser("decompose", help="slice decomposition suite"), True, True)
    common(sub.add_parser("represent", help="x -> (t, x - c_t)"), True, True)
    idt = common(sub.add_parser("identity", help="check an equation on the window"))
    idt.add_argument("identity", help='e.g. "2.x^2 = (2.x)^2"')
    iso = common(sub.add_parser("isocheck", help="check a linear map is an isomorphism"))
    iso.add_argument("target", help="second algebra spec")
    iso.add_argument("--matrix", required=True, help="integer matrix, rows split by ';'")
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code == 0 else 2
    try:
        rep = COMMANDS[args.command](args)
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return 2
    except (Misuse, ProperIdealError, UnsupportedError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    print(rep.to_json(indent=2) if args.format == "json" else rep.to_text())
    return exit_code(rep)


if __name__ == "__main__":
    sys.exit(main())
