"""Command-line front end.

Usage::

    rmatch count --r 2 --tree path7.txt
    rmatch path-series --r 3 --n-max 40 --format csv
    rmatch table --r-min 2 --r-max 11 --format csv
    rmatch search --r 2 --n 12 --format json
    rmatch verify oracle

Reports go to stdout and errors to stderr. Exit status is 0 on success, 1 on
bad input and 2 when an internal invariant fails (including a failed
``verify`` suite).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from importlib import resources
from dataclasses import dataclass, fields

from . import asymptotics as asy
from .counting import TreeTooLargeError, brute_force_count, count_r_matchings
from .extremal import (PROBE_RADII, SearchReport, default_threads, probe_problem_4_4,
                       search_extremal, spider_counts, spider_vs_path,
                       transform_leaf_reduction)
from .paths import path_count, path_count_series, series_to_csv
from .trees import (DEFAULT_ENUMERATION_LIMIT, EnumerationLimitError, TreeError,
                    format_tree, read_tree)
from .verification import SUITES, run_suite

__all__ = ["RunConfig", "InputError", "InvariantError", "run", "main", "COMMANDS",
           "load_schema"]

COMMANDS = ("count", "path-series", "constants", "table", "spider", "search",
            "probe-4-4", "bounds", "transform", "verify")
FORMATS = ("text", "json", "csv")


class InputError(Exception):
    """Bad flags, unreadable files, or limits exceeded (exit status 1)."""


class InvariantError(Exception):
    """A computed result broke a guaranteed property (exit status 2)."""


@dataclass
class RunConfig:
    command: str
    r: int | None = None
    n: int | None = None
    n_max: int | None = None
    a: int | None = None
    b: int | None = None
    b_max: int | None = None
    r_min: int | None = None
    r_max: int | None = None
    n_probe: int = 300
    tol: float = asy.DEFAULT_TOL
    tree: str | None = None
    suite: str | None = None
    format: str = "text"
    threads: int | None = None
    limit: int = DEFAULT_ENUMERATION_LIMIT
    brute_force: bool = False
    keep_counts: bool = False

    def validate(self) -> None:
        if self.command not in COMMANDS:
            raise InputError(f"unknown subcommand {self.command!r}")
        if self.format not in FORMATS:
            raise InputError(f"format must be one of {', '.join(FORMATS)}")
        if self.r is not None and self.r < 1:
            raise InputError("r must be ≥ 1")
        for name in ("n", "n_max", "a", "b", "b_max", "threads", "limit"):
            v = getattr(self, name)
            if v is not None and v < 1 and not (name == "n_max" and v == 0):
                raise InputError(f"{name.replace('_', '-')} must be ≥ 1")
        if not self.tol > 0:
            raise InputError("tol must be > 0")
        needs = {
            "count": ("r", "tree"), "path-series": ("r", "n_max"), "constants": ("r",),
            "table": (), "spider": ("r", "a"), "search": ("r", "n"),
            "probe-4-4": ("r", "n_max"), "bounds": ("r", "n"), "transform": ("r", "tree"),
            "verify": ("suite",),
        }[self.command]
        for name in needs:
            if getattr(self, name) is None:
                raise InputError(f"{self.command} needs --{name.replace('_', '-')}")
        if self.command in ("constants", "bounds") and self.r < 2:
            raise InputError("r must be ≥ 2 for this subcommand")
        if self.command == "spider" and (self.b is None) == (self.b_max is None):
            raise InputError("spider needs exactly one of --b or --b-max")
        if self.command == "probe-4-4" and self.r not in PROBE_RADII:
            raise InputError(f"probe-4-4 needs r in {{{', '.join(map(str, PROBE_RADII))}}}")
        if self.command in ("search", "probe-4-4"):
            top = self.n if self.command == "search" else self.n_max
            if top > self.limit:
                raise InputError(f"n={top} exceeds the enumeration limit {self.limit}")
        if self.command == "verify" and self.suite not in SUITES:
            raise InputError(f"unknown suite {self.suite!r}; choose from {', '.join(SUITES)}")


def load_schema(command: str) -> dict:
    """JSON Schema for the ``--format json`` output of ``command``."""
    if command not in COMMANDS:
        raise KeyError(command)
    res = resources.files("rmatch") / "schemas" / f"{command}.schema.json"
    return json.loads(res.read_text())


# --------------------------------------------------------------------------
# rendering helpers
# --------------------------------------------------------------------------

def _num(x):
    if isinstance(x, float):
        if math.isinf(x):
            return "inf"
        return float(f"{x:.10g}")
    return x


def _json(obj) -> str:
    def clean(o):
        if isinstance(o, dict):
            return {k: clean(v) for k, v in o.items()}
        if isinstance(o, list):
            return [clean(v) for v in o]
        return _num(o)
    return json.dumps(clean(obj), indent=2) + "\n"


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([_num(v) if isinstance(v, float) else v for v in row])
    return buf.getvalue()


def _kv_text(d: dict) -> str:
    return "".join(f"{k}: {_num(v)}\n" for k, v in d.items())


SUMMARY_COLUMNS = ("n", "r", "max", "min", "path_count", "path_is_max", "trees_examined")


def _summary_row(rep: SearchReport) -> list:
    return [rep.n, rep.r, rep.max_count, rep.min_count, rep.path_count,
            str(rep.path_is_max).lower(), rep.trees_examined]


def _report_text(rep: SearchReport) -> str:
    return (f"n={rep.n} r={rep.r} trees={rep.trees_examined}\n"
            f"  max {rep.max_count} at {' | '.join(rep.argmax_codes)}\n"
            f"  min {rep.min_count} at {' | '.join(rep.argmin_codes)}\n"
            f"  path {rep.path_count} ({'maximum' if rep.path_is_max else 'not maximum'})\n")


def _check_report(rep: SearchReport) -> None:
    if rep.min_count < rep.n or rep.path_count > rep.max_count or not rep.argmax_codes:
        raise InvariantError(f"search report for n={rep.n}, r={rep.r} is inconsistent")


def _load_tree(name: str):
    try:
        return read_tree(name)
    except OSError as exc:
        raise InputError(f"cannot read tree file {name!r}: {exc.strerror or exc}") from None
    except TreeError as exc:
        raise InputError(f"invalid tree in {name!r}: {exc}") from None


# --------------------------------------------------------------------------
# subcommands
# --------------------------------------------------------------------------

def _count(cfg: RunConfig) -> str:
    t = _load_tree(cfg.tree)
    if cfg.brute_force:
        try:
            c = brute_force_count(t, cfg.r)
        except TreeTooLargeError as exc:
            raise InputError(str(exc)) from None
    else:
        try:
            c = count_r_matchings(t, cfg.r, check_root=True)
        except AssertionError as exc:
            raise InvariantError(str(exc)) from None
    if c < t.n:
        raise InvariantError(f"count {c} is below the floor n={t.n}")
    d = {"n": t.n, "r": cfg.r, "count": c}
    if cfg.format == "json":
        return _json(d)
    if cfg.format == "csv":
        return _csv(("n", "r", "count"), [(t.n, cfg.r, c)])
    return f"{c}\n"


def _path_series(cfg: RunConfig) -> str:
    series = path_count_series(cfg.r, cfg.n_max)
    if cfg.format == "json":
        return _json({"r": cfg.r, "values": list(series.values)})
    if cfg.format == "csv":
        return series_to_csv(series)
    return "".join(f"{n} {v}\n" for n, v in enumerate(series.values))


def _constants(cfg: RunConfig) -> str:
    rec = asy.table_row(cfg.r, cfg.n_probe, tol=cfg.tol)
    gc = asy.growth_constant(cfg.r, cfg.n_probe)
    if abs(rec.alpha - asy.alpha_power_form(cfg.r, rec.s)) > 1e-10:
        raise InvariantError("the two expressions for alpha disagree")
    d = rec.as_dict()
    d.update({"n_probe": cfg.n_probe, "c_match": gc.matches})
    if cfg.format == "json":
        return _json(d)
    if cfg.format == "csv":
        return _csv(tuple(d), [[v if v is not None else "" for v in d.values()]])
    return _kv_text({**rec.as_dict()}) + gc.report() + "\n"


def _table(cfg: RunConfig) -> str:
    r_min = cfg.r_min if cfg.r_min is not None else 2
    r_max = cfg.r_max if cfg.r_max is not None else 11
    if not 2 <= r_min <= r_max:
        raise InputError("need 2 ≤ r-min ≤ r-max")
    rows = asy.table(r_min, r_max, tol=cfg.tol)
    if cfg.format == "json":
        return asy.table_to_json(rows) + "\n"
    if cfg.format == "csv":
        return asy.table_to_csv(rows)
    return asy.table_to_text(rows)


def _spider(cfg: RunConfig) -> str:
    r, a = cfg.r, cfg.a
    if cfg.b is not None:
        b = cfg.b
        c = spider_counts(r, a, b)[-1]
        pc = path_count(r, a * b + 1)
        d = {"r": r, "a": a, "b": b, "n": a * b + 1, "count": c, "path_count": pc,
             "beats_path": c > pc, "growth_estimate": math.exp(math.log(c) / (a * b)),
             "leg_growth": asy.leg_growth(r, a) if a >= math.ceil(r / 2) else None}
        if cfg.format == "json":
            return _json(d)
        if cfg.format == "csv":
            return _csv(tuple(d), [["" if v is None else v for v in d.values()]])
        return _kv_text(d)
    witness = spider_vs_path(r, a, cfg.b_max)
    d = {"r": r, "a": a, "b_max": cfg.b_max, "witness": witness}
    if cfg.format == "json":
        return _json(d)
    if cfg.format == "csv":
        return _csv(tuple(d), [["" if v is None else v for v in d.values()]])
    if witness is None:
        return f"no b <= {cfg.b_max} with s_{r}(T_{{{a},b}}) > s_{r}(P_{{{a}b+1}})\n"
    return f"b={witness}: s_{r}(T_{{{a},{witness}}}) > s_{r}(P_{a * witness + 1})\n"


def _threads(cfg: RunConfig) -> int:
    return cfg.threads if cfg.threads is not None else default_threads()


def _search(cfg: RunConfig) -> str:
    rep = search_extremal(cfg.r, cfg.n, threads=_threads(cfg), limit=cfg.limit,
                          keep_counts=cfg.keep_counts)
    _check_report(rep)
    if cfg.format == "json":
        return _json(rep.as_dict(with_counts=cfg.keep_counts))
    if cfg.format == "csv":
        return _csv(SUMMARY_COLUMNS, [_summary_row(rep)])
    return _report_text(rep)


def _probe(cfg: RunConfig) -> str:
    reports = probe_problem_4_4(cfg.r, cfg.n_max, threads=_threads(cfg), limit=cfg.limit)
    for rep in reports:
        _check_report(rep)
    if cfg.format == "json":
        return _json({"r": cfg.r, "n_max": cfg.n_max,
                      "reports": [rep.as_dict() for rep in reports]})
    if cfg.format == "csv":
        return _csv(SUMMARY_COLUMNS, [_summary_row(rep) for rep in reports])
    return "".join(_report_text(rep) for rep in reports)


def _bounds(cfg: RunConfig) -> str:
    d = {"r": cfg.r, "n": cfg.n,
         "upper": asy.upper_bound(cfg.r, cfg.n), "lower": asy.lower_bound(cfg.r, cfg.n),
         "log_upper": asy.log_upper_bound(cfg.r, cfg.n),
         "log_lower": asy.log_lower_bound(cfg.r, cfg.n)}
    if cfg.format == "json":
        return _json(d)
    if cfg.format == "csv":
        return _csv(tuple(d), [list(d.values())])
    return _kv_text(d)


def _transform(cfg: RunConfig) -> str:
    t = _load_tree(cfg.tree)
    out = transform_leaf_reduction(t, cfg.r)
    if out and (out.output_count < out.input_count
                or out.strict and out.output_count <= out.input_count):
        raise InvariantError("rewired tree lost r-matchings")
    d = out.as_dict()
    if cfg.format == "json":
        return _json(d)
    if cfg.format == "csv":
        cols = ("applicable", "input_code", "output_code", "input_count",
                "output_count", "strict", "reason")
        return _csv(cols, [[str(d.get(c, "")).lower() if isinstance(d.get(c), bool)
                            else d.get(c, "") for c in cols]])
    if not out:
        return f"not applicable: {out.reason}\n"
    return (f"{out.input_count} -> {out.output_count}"
            f"{' (strict)' if out.strict else ''}\n" + format_tree(out.tree))


def _verify(cfg: RunConfig) -> tuple[int, str]:
    checks = run_suite(cfg.suite)
    ok = all(c.passed for c in checks)
    if cfg.format == "json":
        text = _json({"suite": cfg.suite, "passed": ok,
                      "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail}
                                 for c in checks]})
    elif cfg.format == "csv":
        text = _csv(("name", "passed", "detail"),
                    [(c.name, str(c.passed).lower(), c.detail) for c in checks])
    else:
        text = "".join(c.line() + "\n" for c in checks)
        text += f"{cfg.suite}: {'pass' if ok else 'FAIL'} ({sum(c.passed for c in checks)}/{len(checks)})\n"
    return (0 if ok else 2), text


_HANDLERS = {
    "count": _count, "path-series": _path_series, "constants": _constants,
    "table": _table, "spider": _spider, "search": _search, "probe-4-4": _probe,
    "bounds": _bounds, "transform": _transform,
}


def run(cfg: RunConfig) -> tuple[int, str]:
    """Execute one subcommand; returns ``(exit_status, report_text)``.

    Raises :class:`InputError` or :class:`InvariantError` on failure.
    """
    cfg.validate()
    try:
        if cfg.command == "verify":
            return _verify(cfg)
        return 0, _HANDLERS[cfg.command](cfg)
    except EnumerationLimitError as exc:
        raise InputError(str(exc)) from None


# --------------------------------------------------------------------------
# argument parsing
# --------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=FORMATS, default="text")
    p.add_argument("--threads", type=int, default=None,
                   help="worker processes (default: $RMATCH_THREADS or all cores)")
    p.add_argument("--limit", type=int, default=DEFAULT_ENUMERATION_LIMIT,
                   help="largest n the tree enumeration accepts")
    p.add_argument("--tol", type=float, default=asy.DEFAULT_TOL)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rmatch", description="Count and compare r-matchings in trees.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("count", help="count r-matchings of a tree file")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--tree", required=True)
    p.add_argument("--brute-force", action="store_true")
    _add_common(p)

    p = sub.add_parser("path-series", help="s_r(P_n) for n = 0..n-max")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    _add_common(p)

    p = sub.add_parser("constants", help="s, alpha, beta, leg length and C_r for one r")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n-probe", type=int, default=300)
    _add_common(p)

    p = sub.add_parser("table", help="constants for a range of r")
    p.add_argument("--r-min", type=int, default=2)
    p.add_argument("--r-max", type=int, default=11)
    _add_common(p)

    p = sub.add_parser("spider", help="spider counts or the first spider beating the path")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--b", type=int)
    g.add_argument("--b-max", type=int)
    _add_common(p)

    p = sub.add_parser("search", help="exhaustive max/min over all trees on n vertices")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--keep-counts", action="store_true")
    _add_common(p)

    p = sub.add_parser("probe-4-4", help="is the path maximal for r in {3,4,5,7,9}?")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    _add_common(p)

    p = sub.add_parser("bounds", help="upper and lower bounds on the maximum count")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    _add_common(p)

    p = sub.add_parser("transform", help="apply the leaf-reduction rewiring")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--tree", required=True)
    _add_common(p)

    p = sub.add_parser("verify", help="run a named invariant suite")
    p.add_argument("suite", help=", ".join(SUITES))
    _add_common(p)
    return parser


def config_from_args(argv: list[str] | None = None) -> RunConfig:
    ns = build_parser().parse_args(argv)
    names = {f.name for f in fields(RunConfig)}
    return RunConfig(**{k: v for k, v in vars(ns).items() if k in names})


def main(argv: list[str] | None = None) -> int:
    try:
        status, text = run(config_from_args(argv))
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except InvariantError as exc:
        print(f"invariant violated: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
