"""Command-line front end.

Matroids are given by a compound spec string:

    atom  := u:<r>,<n> | bases:<path> | graph:<path>
    term  := tr( expr ) | ext( expr ) | atom
    expr  := term { + term }

Prefix operators bind tighter than the infix sum.  Exit codes: 0 success,
2 usage/parse error, 3 domain error (loops where disallowed, caps, bad
construction), 4 theorem-check failure, 5 conjecture counterexample.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from .algebra import taylor_prefix
from .checks import (
    CONJECTURE_CHECK_NAMES,
    FAILS,
    CheckReport,
    build_catalog,
    run_all_checks,
    summarize,
)
from .files import FileFormatError, load_bases, load_graphic_matroid
from .lattice import FlagCapExceeded, LoopsError, lattice_of
from .matroid import Matroid, iter_bits, uniform
from .zeta import compute_upsilon, compute_zeta

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_THEOREM_FAILURE = 4
EXIT_COUNTEREXAMPLE = 5


class SpecParseError(ValueError):
    """Malformed matroid spec, with the offending position."""

    def __init__(self, message: str, pos: int) -> None:
        super().__init__(f"at position {pos}: {message}")
        self.pos = pos


_UNIFORM_RE = re.compile(r"u:(\d+),(\d+)")
_PREFIX_RE = re.compile(r"(tr|ext)\s*\(")
_FILE_RE = re.compile(r"(bases|graph):([^+()\s]+)")


class _SpecParser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.pos = 0

    def _skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def parse(self) -> Matroid:
        m = self._expr()
        self._skip_ws()
        if self.pos != len(self.text):
            raise SpecParseError("unexpected trailing input", self.pos)
        return m

    def _expr(self) -> Matroid:
        out = self._term()
        while True:
            self._skip_ws()
            if self.pos < len(self.text) and self.text[self.pos] == "+":
                self.pos += 1
                out = out.direct_sum(self._term())
            else:
                return out

    def _term(self) -> Matroid:
        self._skip_ws()
        prefix = _PREFIX_RE.match(self.text, self.pos)
        if prefix:
            op = prefix.group(1)
            self.pos = prefix.end()
            inner = self._expr()
            self._skip_ws()
            if self.pos >= len(self.text) or self.text[self.pos] != ")":
                raise SpecParseError(f"missing ')' after {op}(...", self.pos)
            self.pos += 1
            return inner.truncation() if op == "tr" else inner.free_extension()
        return self._atom()

    def _atom(self) -> Matroid:
        self._skip_ws()
        u = _UNIFORM_RE.match(self.text, self.pos)
        if u:
            self.pos = u.end()
            return uniform(int(u.group(1)), int(u.group(2)))
        f = _FILE_RE.match(self.text, self.pos)
        if f:
            self.pos = f.end()
            path = Path(f.group(2))
            if not path.exists():
                raise SpecParseError(f"no such file: {path}", f.start(2))
            if f.group(1) == "bases":
                return load_bases(path)
            return load_graphic_matroid(path)
        raise SpecParseError(
            "expected u:<r>,<n>, bases:<path>, graph:<path>, tr(...) or ext(...)",
            self.pos,
        )


def parse_matroid_spec(text: str) -> Matroid:
    return _SpecParser(text).parse()


# ---------------------------------------------------------------------------
# Commands


def _emit_json(payload: dict) -> None:
    print(json.dumps(payload, sort_keys=True, separators=(", ", ": ")))


def _cmd_zeta(args) -> int:
    m = parse_matroid_spec(args.spec)
    if not m.is_loopless():
        print("note: matroid has loops; its zeta value is 0", file=sys.stderr)
    if args.verify:
        by_flags = compute_zeta(m, "flags", max_flags=args.max_flags)
        by_rec = compute_zeta(m, "recurrence")
        if by_flags.zeta != by_rec.zeta:
            print("verification failed: flag sum and recurrence disagree", file=sys.stderr)
            return 1
        result = by_rec
    else:
        result = compute_zeta(m, args.algorithm, max_flags=args.max_flags)
    if args.format == "json":
        _emit_json({"algorithm": result.algorithm, **result.zeta.to_json()})
    else:
        print(f"Z(s) = {result.zeta.to_text('s')}")
    return EXIT_OK


def _cmd_upsilon(args) -> int:
    m = parse_matroid_spec(args.spec)
    if args.verify:
        values = [
            compute_upsilon(m, "mobius"),
            compute_upsilon(m, "recurrence"),
            compute_upsilon(m, "flags", max_flags=args.max_flags),
        ]
        if len({v.upsilon for v in values}) != 1:
            print("verification failed: upsilon algorithms disagree", file=sys.stderr)
            return 1
        result = values[1]
    else:
        result = compute_upsilon(m, args.algorithm, max_flags=args.max_flags)
    if args.format == "json":
        _emit_json({"algorithm": result.algorithm, **result.upsilon.to_json()})
    else:
        print(f"Y(s) = {result.upsilon.to_text('s')}")
    return EXIT_OK


def _cmd_taylor(args) -> int:
    m = parse_matroid_spec(args.spec)
    prefix = taylor_prefix(compute_zeta(m).zeta, args.order)
    if args.format == "json":
        _emit_json({"taylor": prefix.to_strings()})
    else:
        for k, c in enumerate(prefix):
            print(f"a_{k} = {c}")
    return EXIT_OK


def _cmd_girth(args) -> int:
    m = parse_matroid_spec(args.spec)
    g = m.girth()
    if args.format == "json":
        _emit_json({"girth": g})
    else:
        print(f"girth = {g}")
    return EXIT_OK


def _cmd_lattice(args) -> int:
    m = parse_matroid_spec(args.spec)
    lat = lattice_of(m)
    if args.format == "json":
        flats = [
            {
                "rank": r,
                "elements": sorted(iter_bits(f)),
                "mobius": lat.mobius_to_top(f),
            }
            for r in range(m.rank + 1)
            for f in lat.flats_by_rank(r)
        ]
        _emit_json({"flats": flats})
    else:
        for r in range(m.rank + 1):
            for f in lat.flats_by_rank(r):
                elems = "{" + ",".join(str(e) for e in iter_bits(f)) + "}"
                print(f"rank {r}: {elems} mu = {lat.mobius_to_top(f)}")
    return EXIT_OK


def _cmd_check(args) -> int:
    suites = ("theorems", "conjectures") if args.suite == "all" else (args.suite,)
    catalog = build_catalog(args.max_ground)
    reports = run_all_checks(
        catalog,
        suites=suites,
        kmax=args.kmax,
        kderivative_kmax=args.kderivative_kmax,
        jobs=args.jobs,
    )
    if args.format == "json":
        for report in reports:
            print(json.dumps(report.to_json(), sort_keys=True, separators=(", ", ": ")))
    else:
        for report in reports:
            suffix = f"  ({report.reason})" if report.reason else ""
            print(f"{report.status:<8} {report.check:<24} {report.entry}{suffix}")
        counts = summarize(reports)
        print(
            f"summary: entries={len(catalog)} holds={counts['holds']} "
            f"fails={counts['fails']} skipped={counts['skipped']}"
        )
    return _check_exit_code(reports, args.out)


def _check_exit_code(reports: list[CheckReport], witness_dir: str | None = None) -> int:
    theorem_failures = [
        r for r in reports if r.status == FAILS and r.check not in CONJECTURE_CHECK_NAMES
    ]
    counterexamples = [
        r for r in reports if r.status == FAILS and r.check in CONJECTURE_CHECK_NAMES
    ]
    if counterexamples and witness_dir:
        out = Path(witness_dir)
        out.mkdir(parents=True, exist_ok=True)
        for r in counterexamples:
            safe = re.sub(r"[^A-Za-z0-9_.+-]", "_", f"{r.check}__{r.entry}")
            (out / f"{safe}.json").write_text(
                json.dumps(r.to_json(), sort_keys=True, indent=2) + "\n",
                encoding="utf-8",
            )
    if theorem_failures:
        return EXIT_THEOREM_FAILURE
    if counterexamples:
        return EXIT_COUNTEREXAMPLE
    return EXIT_OK


# ---------------------------------------------------------------------------
# Parser assembly


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="matzeta",
        description="Exact topological zeta functions of matroids.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, *, algorithms=None) -> None:
        p.add_argument("spec", help="matroid spec, e.g. 'u:2,3', 'tr(u:3,4)+ext(u:1,2)'")
        p.add_argument("--format", choices=("text", "json"), default="text")
        if algorithms:
            p.add_argument("--algorithm", choices=algorithms, default="auto")
            p.add_argument(
                "--verify",
                action="store_true",
                help="compute by every algorithm and require exact agreement",
            )
            p.add_argument("--max-flags", type=int, default=None, dest="max_flags")

    p_zeta = sub.add_parser("zeta", help="topological zeta function")
    add_common(p_zeta, algorithms=("flags", "recurrence", "auto"))
    p_zeta.set_defaults(fn=_cmd_zeta)

    p_ups = sub.add_parser("upsilon", help="Mobius inversion of the zeta function")
    add_common(p_ups, algorithms=("mobius", "recurrence", "flags", "auto"))
    p_ups.set_defaults(fn=_cmd_upsilon)

    p_taylor = sub.add_parser("taylor", help="expansion coefficients of zeta at 0")
    add_common(p_taylor)
    p_taylor.add_argument("-k", "--order", type=int, default=4)
    p_taylor.set_defaults(fn=_cmd_taylor)

    p_girth = sub.add_parser("girth", help="smallest circuit size")
    add_common(p_girth)
    p_girth.set_defaults(fn=_cmd_girth)

    p_lat = sub.add_parser("lattice", help="flats by rank with Mobius values")
    add_common(p_lat)
    p_lat.set_defaults(fn=_cmd_lattice)

    p_check = sub.add_parser("check", help="run the verification suites on the catalog")
    p_check.add_argument("suite", choices=("theorems", "conjectures", "all"))
    p_check.add_argument("--max-ground", type=int, default=7, dest="max_ground")
    p_check.add_argument("--kmax", type=int, default=4)
    p_check.add_argument(
        "--kderivative-kmax", type=int, default=3, dest="kderivative_kmax"
    )
    p_check.add_argument("--jobs", type=int, default=1)
    p_check.add_argument("--format", choices=("text", "json"), default="text")
    p_check.add_argument("--out", default=None, help="directory for counterexample witnesses")
    p_check.set_defaults(fn=_cmd_check)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.fn(args)
    except (SpecParseError, FileFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (LoopsError, FlagCapExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
