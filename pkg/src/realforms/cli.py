"""Command-line front end: ``realforms <command> ...``.

Exit codes: 0 success, 1 a verification failed, 2 bad input (parse or usage).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import __version__
from .automorphisms import automorphism_group, involution_class_reps
from .cache import AutCache
from .cohomology import comparison_map, h1, mass_report, stable_sylow2, sylow_mass_report
from .groups import GroupError, conjugacy_classes
from .invariants import m_invariant, plane_curve_bound
from .parser import ParseError, build_group
from .verify import CASES, run_cases, summarize

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class RunReport:
    command: list[str]
    results: dict
    ok: bool = True
    timing: dict = field(default_factory=dict)

    def to_json(self) -> str:
        return json.dumps(
            {"command": self.command, "ok": self.ok, "results": self.results, "timing": self.timing},
            indent=2,
        )

    @classmethod
    def from_json(cls, text: str) -> RunReport:
        d = json.loads(text)
        return cls(d["command"], d["results"], d["ok"], d["timing"])


def _frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


# ---------------------------------------------------------------------------
# commands


def _actions(G, cache, which: str):
    reps = involution_class_reps(automorphism_group(G, cache=cache))
    if which == "all":
        return reps
    try:
        k = int(which)
    except ValueError:
        raise UsageError(f"--involution must be 'all' or a class index, got {which!r}") from None
    if not 0 <= k < len(reps):
        raise UsageError(f"involution class index {k} out of range 0..{len(reps) - 1}")
    return [reps[k]]


def cmd_info(args, cache) -> dict:
    G = build_group(args.spec)
    orders = G.element_orders()
    return {
        "group": G.label,
        "order": G.order,
        "abelian": G.is_abelian(),
        "center_order": len(G.center()),
        "conjugacy_classes": len(conjugacy_classes(G)),
        "generators": len(G.generators),
        "cayley_hash": G.cayley_hash(),
        "element_orders": [{"order": int(k), "count": int((orders == k).sum())} for k in sorted(set(orders.tolist()))],
    }


def cmd_aut(args, cache) -> dict:
    G = build_group(args.spec)
    A = automorphism_group(G, cache=cache)
    inner = A.inner()
    return {
        "group": G.label,
        "order": G.order,
        "aut_order": A.order,
        "inner_order": inner.order,
        "involution_classes": [
            {
                "index": r.class_index,
                "name": r.name,
                "class_size": r.class_size,
                "fixed_points": len(r.fixed_points()),
                "inner": A.id_of(r.image) in inner,
            }
            for r in involution_class_reps(A)
        ],
    }


def cmd_h1(args, cache) -> dict:
    G = build_group(args.spec)
    out = []
    for phi in _actions(G, cache, args.involution):
        s = h1(G, phi)
        out.append(
            {
                "involution": phi.class_index,
                "h1_size": s.h1_size,
                "z1_size": s.z1_size,
                "mass": _frac(s.mass),
                "classes": [
                    {"representative": c.representative, "orbit_size": c.orbit_size, "stabilizer_order": c.stabilizer_order}
                    for c in s.classes
                ],
            }
        )
    return {"group": G.label, "order": G.order, "actions": out}


def cmd_m(args, cache) -> dict:
    G = build_group(args.spec)
    r = m_invariant(G, cache)
    return {
        "group": G.label,
        "order": G.order,
        "m_value": r.m_value,
        "witness": r.witness.label,
        "method": r.method,
        "entries": [{"label": e.label, "h1_size": e.h1_size, "class_size": e.class_size} for e in r.entries],
    }


def cmd_mass(args, cache) -> dict:
    G = build_group(args.spec)
    (phi,) = _actions(G, cache, args.involution)
    r = mass_report(G, phi)
    return {
        "group": G.label,
        "involution": phi.class_index,
        "sum_inverse_stabilizers": _frac(r.total),
        "z1_over_order": _frac(r.ratio),
        "equality_case": r.equality_case,
        "abelian_inversion": r.abelian_inversion,
        "consistent": r.consistent,
    }


def cmd_sylow_reduce(args, cache) -> dict:
    G = build_group(args.spec)
    (phi,) = _actions(G, cache, args.involution)
    full = h1(G, phi)
    red = stable_sylow2(G, phi)
    cm = comparison_map(G, phi, red, full)
    sm = sylow_mass_report(red)
    return {
        "group": G.label,
        "involution": phi.class_index,
        "sylow_order": red.subgroup.order,
        "sylow_members": list(red.subgroup.members),
        "h1_size": full.h1_size,
        "sylow_h1_size": red.summary.h1_size,
        "surjective": cm.surjective,
        "mapping": list(cm.mapping),
        "fibres": list(cm.fibres),
        "sylow_mass": _frac(sm.total),
        "sylow_mass_consistent": sm.consistent,
    }


def cmd_curve_bound(args, cache) -> dict:
    r = plane_curve_bound(args.degree)
    return {"degree": r.degree, "bound": r.bound, "residue": r.residue}


def cmd_verify(args, cache) -> dict:
    names = args.case or None
    checks = run_cases(names, cache)
    summary = summarize(checks)
    return {
        "checks": [c.as_dict() for c in checks],
        "summary": [{"case": k, "passed": p, "total": t} for k, (p, t) in summary.items()],
        "all_passed": all(c.passed for c in checks),
    }


COMMANDS = {
    "info": cmd_info,
    "aut": cmd_aut,
    "h1": cmd_h1,
    "m": cmd_m,
    "mass": cmd_mass,
    "sylow-reduce": cmd_sylow_reduce,
    "curve-bound": cmd_curve_bound,
    "verify-paper": cmd_verify,
}


def _global_flags(suppress: bool) -> argparse.ArgumentParser:
    # flags are accepted before or after the command; the subcommand copy
    # must not overwrite a value given up front
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "json"), default=d("table"))
    common.add_argument("--cache-dir", default=d(None), help="directory for cached automorphism groups")
    common.add_argument("--seedless", action="store_true", default=d(False), help="ignore the cache entirely")
    return common


def build_arg_parser() -> argparse.ArgumentParser:
    common = _global_flags(suppress=True)
    p = argparse.ArgumentParser(
        prog="realforms", description="Galois cohomology of finite groups and real-form counts.", parents=[_global_flags(False)]
    )
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)
    for name in ("info", "aut", "m"):
        sub.add_parser(name, parents=[common]).add_argument("spec")
    sp = sub.add_parser("h1", parents=[common])
    sp.add_argument("spec")
    sp.add_argument("--involution", default="all")
    for name in ("mass", "sylow-reduce"):
        sp = sub.add_parser(name, parents=[common])
        sp.add_argument("spec")
        sp.add_argument("--involution", required=True)
    sp = sub.add_parser("curve-bound", parents=[common])
    sp.add_argument("degree", type=int)
    sp = sub.add_parser("verify-paper", parents=[common])
    sp.add_argument("--case", action="append", choices=list(CASES))
    return p


# ---------------------------------------------------------------------------
# rendering


def _cell(v) -> str:
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, list):
        return "[" + ", ".join(_cell(x) for x in v) + "]"
    return str(v)


def _table(rows: list[dict]) -> list[str]:
    cols = []
    for r in rows:
        for k in r:
            if k not in cols:
                cols.append(k)
    cells = [[_cell(r.get(c, "")) for c in cols] for r in rows]
    widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(cols)]
    line = lambda vals: "  ".join(v.ljust(w) for v, w in zip(vals, widths)).rstrip()  # noqa: E731
    return [line(cols), line(["-" * w for w in widths])] + [line(r) for r in cells]


def render_table(results: dict, indent: str = "") -> str:
    out = []
    for k, v in results.items():
        if isinstance(v, list) and v and isinstance(v[0], dict):
            out.append(f"{indent}{k}:")
            flat = [{kk: vv for kk, vv in row.items() if not isinstance(vv, list) or not vv or not isinstance(vv[0], dict)} for row in v]
            out += [indent + "  " + s for s in _table(flat)]
            for row in v:
                for kk, vv in row.items():
                    if isinstance(vv, list) and vv and isinstance(vv[0], dict):
                        head = ", ".join(f"{a}={_cell(b)}" for a, b in row.items() if not isinstance(b, list))
                        out.append(f"{indent}  {kk} ({head}):")
                        out += [indent + "    " + s for s in _table(vv)]
        else:
            out.append(f"{indent}{k}: {_cell(v)}")
    return "\n".join(out)


def render_verify_table(results: dict) -> str:
    out = []
    for c in results["checks"]:
        mark = "PASS" if c["passed"] else "FAIL"
        out.append(f"[{mark}] {c['case']}: {c['name']} | expected {c['expected']} | computed {c['computed']} | {c['tag']}")
    out.append("")
    for s in results["summary"]:
        out.append(f"{s['case']}: {s['passed']}/{s['total']} passed")
    out.append(f"all_passed: {_cell(results['all_passed'])}")
    return "\n".join(out)


# ---------------------------------------------------------------------------


def run_command(argv: list[str]) -> tuple[int, RunReport | None, str]:
    """Parse and run; returns (exit code, report, rendered text)."""
    parser = build_arg_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return (EXIT_USAGE if exc.code else EXIT_OK), None, ""
    cache = None
    if args.cache_dir and not args.seedless:
        cache = AutCache(args.cache_dir)
    start = time.perf_counter()
    try:
        results = COMMANDS[args.command](args, cache)
    except ParseError as exc:
        return EXIT_USAGE, None, f"parse error: {exc}"
    except (UsageError, GroupError, KeyError) as exc:
        return EXIT_USAGE, None, f"error: {exc}"
    ok = results.get("all_passed", True) and results.get("consistent", True) and results.get("sylow_mass_consistent", True)
    timing = {"elapsed_seconds": round(time.perf_counter() - start, 3)}
    if cache is not None:
        timing.update(cache_hits=cache.hits, cache_misses=cache.misses)
    report = RunReport(list(argv), results, bool(ok), timing)
    if args.format == "json":
        text = report.to_json()
    elif args.command == "verify-paper":
        text = render_verify_table(results)
    else:
        text = render_table(results)
    return (EXIT_OK if ok else EXIT_FAILED), report, text


def main(argv=None) -> int:
    code, _, text = run_command(list(sys.argv[1:] if argv is None else argv))
    if text:
        stream = sys.stdout if code != EXIT_USAGE else sys.stderr
        print(text, file=stream)
    return code


if __name__ == "__main__":
    sys.exit(main())
