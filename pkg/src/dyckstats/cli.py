"""Command-line front end.

Subcommands: table (statistic distributions), map (path bijections), tree
(preorder outline), decompose (standard form JSON), series (generating
function triangles), verify (exhaustive and series checks), render (ASCII
staircase).  Exit codes: 0 success/pass, 1 usage or input error, 2
verification failure, 3 internal assertion failure.
"""

from __future__ import annotations

import argparse
import random
import sys
from itertools import combinations
from typing import Callable

from .bijection import (
    regraft_path,
    regraft_path_inverse,
)
from .errors import DyckstatsError, InternalError
from .involution import (
    SegmentKind,
    decompose_standard,
    reflect_blocks,
    residue_class,
    residue_shift,
    segment_residue_counts,
)
from .paths import (
    DYCK_ENUMERATION_CAP,
    DyckPath,
    UP,
    distribution,
    enumerate_dyck,
    exterior_pairs,
    narayana,
    parse_path,
    sary_distribution,
    up_steps_at_residue,
)
from .series import (
    check_conjectured_identity,
    check_residue_shift_identity,
    check_sary_duality,
    check_zero_residue_quadratic,
    residue_gf,
    residue_gf_brute,
    sary_equation_residual,
    sary_gf,
)
from .trees import path_to_tree

_CHECKS = (
    "thm-main",
    "cf-vs-brute",
    "pi-transport",
    "omega-involution",
    "psi-classes",
    "narayana",
    "sary-duality",
    "quadratic-g03",
    "conjecture-1",
    "conjecture-2",
)

_STATS = {
    "exterior-pairs": "exterior_pairs",
    "pyramid-weight": "pyramid_weight",
    "up-residue": "up_residue",
    "height": "height",
}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # route argparse failures to exit code 1
        raise _UsageError(message)


def _add_path_arg(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--path", required=True, help="path word over U/D")
    sub.add_argument(
        "--paren", action="store_true", help="also accept ( and ) as step aliases"
    )


def _parse_word(args: argparse.Namespace) -> DyckPath:
    word = args.path
    if not getattr(args, "paren", False) and any(ch in "()" for ch in word):
        raise _UsageError("parenthesis aliases need --paren")
    return parse_path(word)


def _parse_residues(text: str) -> frozenset[int]:
    try:
        return frozenset(int(part) for part in text.split(",") if part != "")
    except ValueError:
        raise _UsageError(f"bad residue list {text!r}; expected e.g. 0 or 0,2") from None


def build_parser() -> _Parser:
    parser = _Parser(prog="dyckstats", description=__doc__)
    subs = parser.add_subparsers(dest="command", required=True)

    table = subs.add_parser("table", help="distribution of a statistic over C_n")
    table.add_argument("--n", type=int, required=True)
    table.add_argument("--stat", choices=sorted(_STATS), required=True)
    table.add_argument("--m", type=int)
    table.add_argument("--residues", type=str)
    table.add_argument("--format", choices=("text", "csv", "json"), default="text")
    table.add_argument("--unsafe-cap", action="store_true", help="lift the enumeration cap")
    table.add_argument("--out")
    table.set_defaults(func=_cmd_table)

    mp = subs.add_parser("map", help="apply a path bijection")
    mp.add_argument(
        "--bijection", choices=("pi", "pi-inverse", "omega", "psi"), required=True
    )
    mp.add_argument("--m", type=int, default=3)
    mp.add_argument("--trace", action="store_true")
    _add_path_arg(mp)
    mp.add_argument("--out")
    mp.set_defaults(func=_cmd_map)

    tree = subs.add_parser("tree", help="preorder tree outline of a path")
    _add_path_arg(tree)
    tree.add_argument("--out")
    tree.set_defaults(func=_cmd_tree)

    dec = subs.add_parser("decompose", help="standard form of a path as JSON")
    dec.add_argument("--m", type=int, required=True)
    _add_path_arg(dec)
    dec.add_argument("--out")
    dec.set_defaults(func=_cmd_decompose)

    ser = subs.add_parser("series", help="generating-function coefficient triangle")
    ser.add_argument("--m", type=int)
    ser.add_argument("--residues", type=str)
    ser.add_argument("--sary", type=int)
    ser.add_argument("--which", choices=("P", "E"))
    ser.add_argument("--order", type=int, required=True)
    ser.add_argument("--format", choices=("text", "json"), default="text")
    ser.add_argument("--out")
    ser.set_defaults(func=_cmd_series)

    ver = subs.add_parser("verify", help="run a verification suite")
    ver.add_argument("--check", choices=_CHECKS, required=True)
    ver.add_argument("--m", type=int)
    ver.add_argument("--max-n", type=int)
    ver.add_argument("--order", type=int)
    ver.add_argument("--out")
    ver.set_defaults(func=_cmd_verify)

    ren = subs.add_parser("render", help="ASCII staircase of a path")
    _add_path_arg(ren)
    ren.add_argument("--out")
    ren.set_defaults(func=_cmd_render)

    return parser


# ---------------------------------------------------------------- handlers


def _cmd_table(args) -> tuple[str, int]:
    cap = None if args.unsafe_cap else DYCK_ENUMERATION_CAP
    stat = _STATS[args.stat]
    kwargs = {}
    if stat == "up_residue":
        if args.m is None or args.residues is None:
            raise _UsageError("--stat up-residue needs --m and --residues")
        kwargs = {"m": args.m, "residues": _parse_residues(args.residues)}
    tbl = distribution(args.n, stat, cap=cap, **kwargs)
    if args.format == "text":
        return tbl.text(), 0
    if args.format == "csv":
        return tbl.to_csv(), 0
    return tbl.to_json(), 0


def _format_standard_form(path: DyckPath, m: int) -> list[str]:
    lines = []
    for seg in decompose_standard(path, m).segments:
        at = "" if seg.line is None else f" L{seg.line}"
        lines.append(f"{seg.kind.value}{at}: {seg.word()}")
    return lines


def _cmd_map(args) -> tuple[str, int]:
    path = _parse_word(args)
    lines: list[str] = []
    if args.bijection in ("pi", "pi-inverse"):
        trace: list | None = [] if args.trace else None
        fn = regraft_path if args.bijection == "pi" else regraft_path_inverse
        image = fn(path, trace)
        if trace is not None:
            lines.extend(f"{'  ' * depth}{case.value}" for depth, case in trace)
    elif args.bijection == "omega":
        if args.trace and path.height() >= args.m - 1:
            lines.extend(_format_standard_form(path, args.m))
        image = reflect_blocks(path, args.m)
    else:
        if args.trace and path.height() >= args.m - 1:
            lines.extend(_format_standard_form(path, args.m))
        image = residue_shift(path, args.m)
    lines.append(image.word())
    return "\n".join(lines), 0


def _cmd_tree(args) -> tuple[str, int]:
    return path_to_tree(_parse_word(args)).outline(), 0


def _cmd_decompose(args) -> tuple[str, int]:
    return decompose_standard(_parse_word(args), args.m).to_json(), 0


def _cmd_series(args) -> tuple[str, int]:
    if args.sary is not None:
        if args.which is None:
            raise _UsageError("--sary needs --which P|E")
        series = sary_gf(args.sary, args.which, args.order)
    else:
        if args.m is None or args.residues is None:
            raise _UsageError("series needs either --sary/--which or --m/--residues")
        series = residue_gf(args.m, _parse_residues(args.residues), args.order)
    if args.format == "json":
        return series.to_json(), 0
    return series.triangle_text(), 0


def _staircase(path: DyckPath) -> str:
    if len(path) == 0:
        return ""
    altitude = 0
    cells: list[tuple[int, int, str]] = []
    top = 0
    for i, s in enumerate(path.steps):
        if s is UP:
            cells.append((altitude, i, "/"))
            altitude += 1
            top = max(top, altitude)
        else:
            altitude -= 1
            cells.append((altitude, i, "\\"))
    grid = [[" "] * len(path) for _ in range(top)]
    for row, col, ch in cells:
        grid[row][col] = ch
    return "\n".join("".join(grid[r]).rstrip() for r in range(top - 1, -1, -1))


def _cmd_render(args) -> tuple[str, int]:
    return _staircase(_parse_word(args)), 0


# ---------------------------------------------------------------- verify


_EXPECTED_CENSUS = {
    SegmentKind.ABOVE_BLOCK: (1, 0),
    SegmentKind.UNDER_BLOCK: (0, 1),
    SegmentKind.UPWARD_LINK: (1, 1),
    SegmentKind.DOWNWARD_LINK: (0, 0),
    SegmentKind.INITIAL: (0, 1),
    SegmentKind.TERMINAL: (0, 0),
}


def _verify_pi_transport(max_n: int) -> tuple[bool, list[str]]:
    lines = []
    for n in range(max_n + 1):
        seen: set[DyckPath] = set()
        for p in enumerate_dyck(n):
            q = regraft_path(p)
            marked = up_steps_at_residue(q, 3, {0})
            if marked != exterior_pairs(p):
                return False, [
                    f"counterexample {p.word()}: exterior pairs "
                    f"{exterior_pairs(p)} but image {q.word()} has {marked} "
                    "up steps at height 0 mod 3"
                ]
            if q in seen:
                return False, [f"not injective: image {q.word()} repeats at n={n}"]
            seen.add(q)
        lines.append(f"n={n}: {len(seen)} paths, statistic transported, injective")
    return True, lines


def _verify_omega(ms: list[int], max_n: int) -> tuple[bool, list[str]]:
    lines = []
    for m in ms:
        checked = 0
        for n in range(max_n + 1):
            for p in enumerate_dyck(n):
                q = reflect_blocks(p, m)
                if reflect_blocks(q, m) != p:
                    return False, [f"not an involution at m={m}: {p.word()}"]
                if p.height() < m - 1:
                    if q != p:
                        return False, [f"low path moved at m={m}: {p.word()}"]
                    continue
                j, k = residue_class(p, m)
                if residue_class(q, m) != (k + 1, j - 1):
                    return False, [
                        f"class transport failed at m={m}: {p.word()} has "
                        f"(j,k)=({j},{k}) but image {q.word()} has "
                        f"{residue_class(q, m)}"
                    ]
                for seg in decompose_standard(p, m).segments:
                    if segment_residue_counts(seg, m) != _EXPECTED_CENSUS[seg.kind]:
                        return False, [
                            f"segment census failed at m={m}, path {p.word()}, "
                            f"segment {seg.kind.value} {seg.word()}"
                        ]
                checked += 1
        lines.append(f"m={m}: involution, class transport and censuses on n<={max_n}")
    return True, lines


def _verify_psi(ms: list[int], max_n: int) -> tuple[bool, list[str]]:
    lines = []
    for m in ms:
        for n in range(max_n + 1):
            by_zero: dict[int, set[DyckPath]] = {}
            eligible = []
            for p in enumerate_dyck(n):
                j, k = residue_class(p, m)
                by_zero.setdefault(k, set()).add(p)
                if p.height() >= m - 1:
                    eligible.append((p, j, k))
            images: dict[int, set[DyckPath]] = {}
            for p, j, k in eligible:
                q = residue_shift(p, m)
                if residue_class(q, m) != (k + 1, j - 1):
                    return False, [
                        f"class shift failed at m={m}: {p.word()} -> {q.word()}"
                    ]
                images.setdefault(j, set()).add(q)
            for j, img in sorted(images.items()):
                # Paths with j marked-top ups must map exactly onto those with
                # j-1 marked-zero ups and at least one marked-top up (for
                # j >= 2 the second condition is automatic).
                target = {
                    p
                    for p in by_zero.get(j - 1, set())
                    if residue_class(p, m).j >= 1
                }
                if img != target:
                    return False, [f"image mismatch at m={m}, n={n}, j={j}"]
        lines.append(f"m={m}: class shifts verified for n<={max_n}")
    return True, lines


def _verify_narayana(max_n: int) -> tuple[bool, list[str]]:
    for n in range(1, max_n + 1):
        table = distribution(n, "up_residue", m=2, residues={0})
        expected = {k: narayana(n, k) for k in range(n) if narayana(n, k)}
        if table.counts != expected:
            return False, [f"even-height distribution differs at n={n}"]
        for k in range(n):
            if narayana(n, k) != narayana(n, n - 1 - k):
                return False, [f"symmetry fails at n={n}, k={k}"]
    return True, [f"even-height up-step counts match the triangle for n<={max_n}"]


def _verify_cf_vs_brute(ms: list[int], order: int) -> tuple[bool, list[str]]:
    rng = random.Random(73)
    lines = []
    for m in ms:
        specs = [{c} for c in range(m)]
        pool = [
            set(combo)
            for size in range(2, m + 1)
            for combo in combinations(range(m), size)
        ]
        rng.shuffle(pool)
        specs.extend(pool[:5])
        for residues in specs:
            if residue_gf(m, residues, order) != residue_gf_brute(m, residues, order):
                return False, [f"mismatch at m={m}, residues={sorted(residues)}"]
        lines.append(f"m={m}: {len(specs)} residue sets agree with enumeration")
    return True, lines


def _verify_thm_main(ms: list[int], order: int) -> tuple[bool, list[str]]:
    lines = []
    for m in ms:
        if not check_residue_shift_identity(m, order):
            return False, [f"identity fails at m={m}, order={order}"]
        lines.append(f"m={m}: identity holds to order {order}")
    return True, lines


def _verify_sary(order: int, max_n: int) -> tuple[bool, list[str]]:
    lines = []
    for s in (1, 2, 3):
        for which in ("P", "E"):
            g = sary_gf(s, which, order)
            if not sary_equation_residual(s, which, g).is_zero:
                return False, [f"equation residual nonzero for s={s}, {which}"]
        if not check_sary_duality(s, order):
            return False, [f"duality fails for s={s}"]
        stat = {"P": "sary_pyramid_weight", "E": "sary_exterior_down_steps"}
        limit = min(max_n, order)
        for which in ("P", "E"):
            g = sary_gf(s, which, order)
            for n in range(limit + 1):
                counts = sary_distribution(s, n, stat[which]).counts
                row = {k: c for k, c in enumerate(g.rows[n]) if c}
                if counts != row:
                    return False, [f"census mismatch s={s} {which} n={n}"]
        lines.append(f"s={s}: equations, duality and censuses (n<={limit}) agree")
    return True, lines


def _cmd_verify(args) -> tuple[str, int]:
    check = args.check
    order = args.order
    max_n = args.max_n
    ms = [args.m] if args.m is not None else None
    if check == "pi-transport":
        ok, lines = _verify_pi_transport(9 if max_n is None else max_n)
    elif check == "omega-involution":
        ok, lines = _verify_omega(ms or [2, 3, 4, 5], 8 if max_n is None else max_n)
    elif check == "psi-classes":
        ok, lines = _verify_psi(ms or [2, 3, 4], 8 if max_n is None else max_n)
    elif check == "narayana":
        ok, lines = _verify_narayana(10 if max_n is None else max_n)
    elif check == "cf-vs-brute":
        ok, lines = _verify_cf_vs_brute(ms or [2, 3, 4, 5], 10 if order is None else order)
    elif check == "thm-main":
        ok, lines = _verify_thm_main(ms or [2, 3, 4, 5, 6], 14 if order is None else order)
    elif check == "quadratic-g03":
        ok = check_zero_residue_quadratic(12 if order is None else order)
        lines = ["quadratic relation holds" if ok else "quadratic relation fails"]
    elif check == "sary-duality":
        ok, lines = _verify_sary(10 if order is None else order, 5 if max_n is None else max_n)
    else:
        part = 1 if check == "conjecture-1" else 2
        default_ms = [4, 5, 6] if part == 1 else [6, 7]
        ok = True
        lines = []
        for m in ms or default_ms:
            report = check_conjectured_identity(part, m, 12 if order is None else order)
            lines.extend(report.lines())
            ok = ok and report.agrees
    lines.append(f"{check}: {'PASS' if ok else 'FAIL'}")
    return "\n".join(lines), 0 if ok else 2


# ---------------------------------------------------------------- entry


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def main(argv: list[str] | None = None) -> int:
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:  # --help
        return 0 if not exc.code else 1
    func: Callable = args.func
    try:
        text, code = func(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except (InternalError, AssertionError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3
    except DyckstatsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    _emit(text, getattr(args, "out", None))
    return code


if __name__ == "__main__":
    sys.exit(main())
