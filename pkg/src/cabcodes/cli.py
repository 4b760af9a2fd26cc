"""Command-line front end.

Exit codes: 0 success, 1 usage (including a missing Groebner basis),
2 data or parse error, 3 mathematical domain error.
"""

from __future__ import annotations

import argparse
import os
import random
import re
import sys

from . import bench
from .codec import (
    encode,
    encode_naive,
    new_code,
    precompute,
    random_message,
    unencode,
)
from .curve import CabCurve, hasse_weil, hermitian, hermitian_like, norm_trace, rational_points
from .errors import CabError, CodeError, NotACodewordError
from .fileio import (
    format_code,
    format_curve,
    format_gb,
    format_points,
    format_vectors,
    parse_points,
    read_code,
    read_curve,
    read_vectors,
)
from .geometry import PointSet

BUILTIN_HELP = "hermitian_q<q>, normtrace_q<q>_r<r>, hermitianlike_q<q>_r<r>_e<e>"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def builtin_curve(name: str):
    """(curve, points, semi-grid subset or None) for a builtin name, else None."""
    m = re.fullmatch(r"hermitian_q(\d+)", name)
    if m:
        C, P = hermitian(int(m[1]))
        return C, P, None
    m = re.fullmatch(r"normtrace_q(\d+)_r(\d+)", name)
    if m:
        C, P = norm_trace(int(m[1]), int(m[2]))
        return C, P, None
    m = re.fullmatch(r"hermitianlike_q(\d+)_r(\d+)_e(\d+)", name)
    if m:
        return hermitian_like(int(m[1]), int(m[2]), int(m[3]))
    return None


def load_curve(src: str) -> tuple[CabCurve, PointSet, PointSet | None]:
    if os.path.exists(src):
        C = read_curve(src)
        return C, rational_points(C), None
    try:
        found = builtin_curve(src)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if found is None:
        raise UsageError(f"{src!r} is neither a curve file nor a builtin curve ({BUILTIN_HELP})")
    return found


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _flag(v: bool) -> str:
    return "true" if v else "false"


# -- curve ---------------------------------------------------------------------------


def cmd_curve(args) -> int:
    C, P, S = load_curve(args.source)
    if args.action == "validate":
        print(f"valid C_ab curve: a={C.a} b={C.b} g={C.genus} HW={hasse_weil(C)}")
    elif args.action == "points":
        _emit(format_points(S if args.semigrid and S is not None else P), args.out)
    elif args.action == "info":
        semi, nu = P.is_semi_grid()
        lines = [
            f"field=GF({C.field.q})",
            f"n={P.n}",
            f"a={C.a}",
            f"b={C.b}",
            f"g={C.genus}",
            f"HW={hasse_weil(C)}",
            f"n_x={P.n_x}",
            f"nu_y={nu}",
            f"semi-grid={_flag(semi)}",
        ]
        if S is not None:
            lines.append(f"semi-grid-subset={S.n}")
        print("\n".join(lines))
    elif args.action == "export":
        _emit(format_curve(C), args.out)
    return 0


# -- code ----------------------------------------------------------------------------


def cmd_code(args) -> int:
    if args.action == "new":
        C, P, S = load_curve(args.curve)
        if args.points == "semigrid":
            if S is None:
                raise UsageError("this curve has no builtin semi-grid subset")
            P = S
        elif args.points:
            with open(args.points) as fh:
                P = parse_points(fh.read(), C.field, args.points)
        code = new_code(C, P, args.m)
        _emit(format_code(code), args.out)
        print(
            f"n={code.n} k={code.k} m={code.m} g={code.genus} "
            f"maximal_semigrid={_flag(code.maximal_semigrid)}",
            file=sys.stderr if not args.out else sys.stdout,
        )
        return 0
    # precompute
    code = read_code(args.code, load_gb=False)
    G = precompute(code)
    gb_out = args.gb_out or args.code + ".gb"
    with open(gb_out, "w") as fh:
        fh.write(format_gb(G))
    rel = os.path.relpath(os.path.abspath(gb_out), os.path.dirname(os.path.abspath(args.code)))
    with open(args.code, "w") as fh:
        fh.write(format_code(code, gb_path=rel))
    print(f"t={G.t} leading={' '.join(repr(m) for m in G.leading)} written={gb_out}")
    return 0


# -- encode / unencode ------------------------------------------------------------------


def cmd_encode(args) -> int:
    code = read_code(args.code)
    msgs = read_vectors(args.input, code.k, code.field.q)
    out = []
    for line, msg in enumerate(msgs, 1):
        cw = encode(code, msg)
        if args.oracle and cw != encode_naive(code, msg):
            raise CabError(f"vector {line}: fast encoding disagrees with naive evaluation")
        out.append(cw)
    _emit(format_vectors(out), args.out)
    return 0


def cmd_unencode(args) -> int:
    code = read_code(args.code)
    cws = read_vectors(args.input, code.n, code.field.q)
    out = []
    for line, cw in enumerate(cws, 1):
        try:
            msg = unencode(code, cw, force_general=args.force_general)
        except (CodeError, NotACodewordError) as exc:
            raise type(exc)(f"vector {line}: {exc}") from None
        if args.oracle and encode_naive(code, msg) != cw:
            raise CabError(f"vector {line}: re-encoding the message does not give the input")
        out.append(msg)
    _emit(format_vectors(out), args.out)
    return 0


def cmd_messages(args) -> int:
    code = read_code(args.code, load_gb=False)
    rng = random.Random(args.seed)
    _emit(format_vectors(random_message(code, rng) for _ in range(args.count)), args.out)
    return 0


# -- bench / selftest -------------------------------------------------------------------


def cmd_bench(args) -> int:
    sizes = [int(s) for s in args.sizes.split(",")]
    rows = bench.sweep(
        args.family,
        sizes,
        repeats=args.repeats,
        naive=not args.no_naive,
        general_max_n=args.general_max_n,
        seed=args.seed,
    )
    if args.out:
        with open(args.out, "w", newline="") as fh:
            bench.write_csv(rows, fh)
        summary = sys.stdout
    else:
        bench.write_csv(rows, sys.stdout)
        summary = sys.stderr
    for (op, path), s in sorted(bench.slopes(rows).items()):
        print(f"slope {op}/{path} = {s:.3f}", file=summary)
    return 0


def selftest(seed: int = 0, count: int = 20, log=print) -> bool:
    """Oracle cross-checks on small codes; returns True when all pass."""
    rng = random.Random(seed)
    ok = True
    configs = []
    C, P = hermitian(2)
    configs += [("hermitian_q2", C, P, m) for m in (4, 9)]
    configs.append(("hermitian_q2[6 points]", C, P.take([0, 1, 2, 4, 6, 7]), 3))
    C, P = hermitian(3)
    configs += [("hermitian_q3", C, P, m) for m in (14, 32)]
    C, P = norm_trace(2, 3)
    configs.append(("normtrace_q2_r3", C, P, 15))
    C, _, S = hermitian_like(3, 2, 2)
    configs.append(("hermitianlike_q3_r2_e2[semi-grid]", C, S, 6))
    for name, C, P, m in configs:
        code = new_code(C, P, m)
        precompute(code)
        bad = 0
        for _ in range(count):
            msg = random_message(code, rng)
            cw = encode(code, msg)
            if cw != encode_naive(code, msg):
                bad += 1
            elif unencode(code, cw) != msg or unencode(code, cw, force_general=True) != msg:
                bad += 1
        ok &= not bad
        log(f"{'PASS' if not bad else 'FAIL'} {name} m={m} n={code.n} k={code.k} ({count - bad}/{count})")
    return ok


def cmd_selftest(args) -> int:
    return 0 if selftest(args.seed, args.count) else 3


# -- wiring --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="cabcodes", description="Encode and unencode one-point codes on C_ab curves.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("curve", help="curve tooling")
    c.add_argument("action", choices=["validate", "points", "info", "export"])
    c.add_argument("source", help=f"curve file or builtin name ({BUILTIN_HELP})")
    c.add_argument("--out", help="output file (default stdout)")
    c.add_argument("--semigrid", action="store_true", help="points: emit the builtin semi-grid subset")
    c.set_defaults(func=cmd_curve)

    k = sub.add_parser("code", help="create a code or precompute its Groebner basis")
    ksub = k.add_subparsers(dest="action", required=True, parser_class=_Parser)
    kn = ksub.add_parser("new")
    kn.add_argument("--curve", required=True, help="curve file or builtin name")
    kn.add_argument("--points", help="points file, or 'semigrid' for a builtin subset")
    kn.add_argument("--m", type=int, required=True, help="order of the code")
    kn.add_argument("--out", help="code file to write (default stdout)")
    kp = ksub.add_parser("precompute")
    kp.add_argument("code")
    kp.add_argument("--gb-out", help="basis file (default <code>.gb)")
    k.set_defaults(func=cmd_code)

    e = sub.add_parser("encode", help="encode messages, one per line")
    e.add_argument("code")
    e.add_argument("input")
    e.add_argument("--out")
    e.add_argument("--oracle", action="store_true", help="cross-check against naive evaluation")
    e.set_defaults(func=cmd_encode)

    u = sub.add_parser("unencode", help="recover messages from codewords, one per line")
    u.add_argument("code")
    u.add_argument("input")
    u.add_argument("--out")
    u.add_argument("--force-general", action="store_true", help="skip the semi-grid fast path")
    u.add_argument("--oracle", action="store_true", help="re-encode naively and compare")
    u.set_defaults(func=cmd_unencode)

    g = sub.add_parser("messages", help="write random messages for a code")
    g.add_argument("code")
    g.add_argument("--count", type=int, default=10)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out")
    g.set_defaults(func=cmd_messages)

    b = sub.add_parser("bench", help="timing sweep, CSV output")
    b.add_argument("--family", choices=["hermitian", "normtrace"], default="hermitian")
    b.add_argument("--sizes", default="4,8,16", help="q values (hermitian) or r values (normtrace, q=2)")
    b.add_argument("--repeats", type=int, default=5)
    b.add_argument("--no-naive", action="store_true")
    b.add_argument("--general-max-n", type=int, default=64)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--out")
    b.set_defaults(func=cmd_bench)

    s = sub.add_parser("selftest", help="oracle cross-checks on small codes")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--count", type=int, default=20)
    s.set_defaults(func=cmd_selftest)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return 1
    except CabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
