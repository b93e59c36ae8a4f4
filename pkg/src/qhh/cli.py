"""Command-line entry point ``qhh``.

Exit codes: 0 success, 1 invalid input (including bad arguments),
2 infinite-dimensional algebra, 3 internal cross-check failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path as FsPath

from .alt import neat_classes
from .basis import build_automaton, enumerate_basis
from .circuits import classify
from .errors import InfiniteDimensional, QHHError, ValidationError
from .fields import CharSpec
from .hh1 import circuit_contribution, dim_hh1, hh1_vanishes
from .presentation import (
    connected_components,
    parse_presentation,
    serialize_presentation,
    validate,
)
from .report import Analysis, serialize_report


class _Parser(argparse.ArgumentParser):
    # usage errors share the exit code of invalid input; 2 means infinite-dimensional
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _char(text: str) -> CharSpec:
    try:
        return CharSpec.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _chars(text: str) -> list[CharSpec]:
    return [_char(t) for t in text.split(",") if t.strip()]


def _load(path: str):
    try:
        text = FsPath(path).read_text()
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc.strerror}") from None
    return validate(parse_presentation(text))


def _components_with_basis(p):
    out = []
    for comp in connected_components(p):
        out.append((comp, enumerate_basis(comp)))
    return out


def cmd_validate(args, out):
    p = _load(args.file)
    comps = connected_components(p)
    cyc = [build_automaton(c).find_cycle() for c in comps]
    print(f"{p.name}: valid, {len(p.vertices)} vertices, {len(p.arrows)} arrows, "
          f"{len(p.relations)} relations, {len(comps)} component(s)", file=out)
    for c, cy in zip(comps, cyc):
        if cy is not None:
            raise InfiniteDimensional(
                f"{c.name} is infinite-dimensional: the cycle {' '.join(reversed(cy))} avoids Z",
                cy,
            )
    print("finite-dimensional", file=out)
    return 0


def cmd_basis(args, out):
    p = _load(args.file)
    for comp, b in _components_with_basis(p):
        print(f"{comp.name}: dim = {len(b)}, longest path = {b.max_length}", file=out)
        if args.list:
            for path in b.paths:
                print(f"  {path}", file=out)
    return 0


def cmd_invariants(args, out):
    p = _load(args.file)
    chars = args.chars or ([args.char] if args.char is not None else None)
    if not chars:
        raise ValidationError("--char (or --chars) is required")
    an = Analysis(p)
    reports = [an.report(ch, with_oracle=args.oracle) for ch in chars]
    if args.json:
        objs = [r.to_json_obj() for r in reports]
        json.dump(objs[0] if len(objs) == 1 else objs, out, indent=2)
        out.write("\n")
    else:
        for r in reports:
            out.write(serialize_report(r, "text").decode())
    return 0


def cmd_check(args, out):
    p = _load(args.file)
    an = Analysis(p)
    ok = True
    for ch in args.chars:
        r = an.report(ch, with_oracle=True, strict=False)
        for i, c in enumerate(r.components):
            for k, (f, o) in c.checks.items():
                if f != o:
                    ok = False
                    print(f"char {ch} [{i}] {k}: formula={f} oracle={o}", file=out)
        print(f"char {ch}: {'agree' if r.oracle_agreement else 'MISMATCH'}", file=out)
    return 0 if ok else 3


def cmd_circuits(args, out):
    p = _load(args.file)
    for comp, b in _components_with_basis(p):
        census = classify(comp, b)
        print(f"{comp.name}: s = {census.s}, e = {census.e}, |W| = {census.w}", file=out)
        print(f"  {'circuit':24} len per mult strong useful effic |Q0.B| |Q1.B| |Z.B|  w", file=out)
        for c in census.sorted_circuits():
            print(
                f"  {str(c.key):24} {c.length:3} {c.period:3} {c.multiplicity:4} "
                f"{'y' if c.strong else '-':>6} {'y' if c.useful else '-':>6} "
                f"{'y' if c.efficient else '-':>5} {len(c.q0_pairs):6} {len(c.q1_pairs):6} "
                f"{len(c.z_pairs):5} {c.w:2}",
                file=out,
            )
    return 0


def cmd_neat(args, out):
    p = _load(args.file)
    for comp, b in _components_with_basis(p):
        table = neat_classes(b)
        print(f"{comp.name}: r = {table.r}, sym = {table.sym}", file=out)
        for c in table.neat_classes:
            flag = "symmetric" if c.symmetric else f"flip -> #{c.flip}"
            print(f"  #{c.id} ({c.representative.left}, {c.representative.right}) "
                  f"size {len(c.members)} on {c.circuit}  {flag}", file=out)
    return 0


def cmd_explain(args, out):
    p = _load(args.file)
    ch = args.char
    for comp, b in _components_with_basis(p):
        census = classify(comp, b)
        res = dim_hh1(census, ch)
        print(f"{comp.name}, characteristic {ch}: dim HH_1 = {res.dimension}", file=out)
        print(f"  s + sum w_C - e' = {res.via_w}", file=out)
        print(f"  |Q1.B| - |Q0.B| + |Q0| - e' + s = {census.q1_b} - {census.q0_b} + "
              f"{census.n_vertices} - {census.e_p_prime(ch)} + {census.s} = {res.via_pair_counts}", file=out)
        for c in census.sorted_circuits():
            k = circuit_contribution(c, ch)
            if c.trivial or not (c.strong or c.efficient):
                continue
            kind = "strong" if c.strong else ("efficient p'" if c.is_p_prime(ch) else "efficient")
            print(f"  {str(c.key):24} {kind:13} w = {c.w}  contributes {k}", file=out)
        vanishes, why = hh1_vanishes(census, ch)
        if vanishes:
            print("  HH_1 vanishes", file=out)
        else:
            extra = f" ({why.count})" if why.count is not None else ""
            print(f"  HH_1 does not vanish: {why.circuit}: {why.reason}{extra}", file=out)
    return 0


def cmd_gen(args, out):
    from .generator import GenConfig, generate

    cfg = GenConfig(
        max_vertices=args.max_vertices,
        max_arrows=args.max_arrows,
        max_relation_length=args.max_relation_length,
        seed=args.seed,
    )
    dest = FsPath(args.out) if args.out else None
    if dest:
        dest.mkdir(parents=True, exist_ok=True)
    for p in generate(cfg, args.count):
        text = serialize_presentation(p)
        if dest:
            (dest / f"{p.name}.qp").write_text(text)
        else:
            out.write(text + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="qhh", description="Hochschild invariants of monomial algebras")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("validate", help="parse, validate and check finiteness")
    s.add_argument("file")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("basis", help="dimension and (optionally) the path basis")
    s.add_argument("file")
    s.add_argument("--list", action="store_true")
    s.set_defaults(func=cmd_basis)

    s = sub.add_parser("invariants", help="the HH^1(TA) decomposition")
    s.add_argument("file")
    s.add_argument("--char", type=_char)
    s.add_argument("--chars", type=_chars, help="comma-separated list, one report each")
    s.add_argument("--oracle", action="store_true", help="recompute by linear algebra and compare")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_invariants)

    s = sub.add_parser("check", help="formula versus linear algebra only")
    s.add_argument("file")
    s.add_argument("--chars", type=_chars, default=_chars("0,2,3,5"))
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("circuits", help="circuit census")
    s.add_argument("file")
    s.set_defaults(func=cmd_circuits)

    s = sub.add_parser("neat", help="neat classes and the flip")
    s.add_argument("file")
    s.set_defaults(func=cmd_neat)

    s = sub.add_parser("explain", help="per-circuit breakdown of dim HH_1")
    s.add_argument("file")
    s.add_argument("--char", type=_char, required=True)
    s.set_defaults(func=cmd_explain)

    s = sub.add_parser("gen", help="emit random finite-dimensional presentations")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--count", type=int, default=10)
    s.add_argument("--out", help="directory; stdout when omitted")
    s.add_argument("--max-vertices", type=int, default=4)
    s.add_argument("--max-arrows", type=int, default=6)
    s.add_argument("--max-relation-length", type=int, default=4)
    s.set_defaults(func=cmd_gen)
    return ap


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except QHHError as exc:
        print(f"qhh: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
