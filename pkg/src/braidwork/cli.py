"""Command-line interface.

Subcommands:

    verify      run the symbolic verification suites
    orbit       enumerate a Hurwitz orbit and report its size
    transversal emit an orbit's positive Schreier transversal
    monodromy   track a parameter loop and report the resulting braid
    admissible  decide admissibility of an arc between branch points
    report      run every catalogued pipeline

All inputs and outputs are the JSON formats defined by the owning
modules; complex scalars in JSON are numbers or [re, im] pairs.  Exit
code is 0 exactly when no result failed.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import arcs, bifurcation, catalog, geometry
from .certificates import Certificate
from .families import (
    DEFAULT_COLLISION_TOL,
    DegenerateConfigurationError,
    WeierstrassFamily,
    branch_points,
    catalogue_family,
)
from .catalog import CheckResult
from .groups import artin_from_word, perm_from_name
from .hurwitz import DEFAULT_ORBIT_CAP, OrbitCapExceeded, orbit
from .tracking import ParameterLoop, TrackOptions, TrackingError, loop_to_braid, track_loop
from .garside import equal
from .words import BraidWord


def _complex_from_json(value) -> complex:
    if isinstance(value, (list, tuple)):
        return complex(value[0], value[1])
    return complex(value)


def _loop_from_spec(spec: dict) -> ParameterLoop:
    kind = spec.get("kind", "polyline")
    if kind == "circle":
        fixed = {k: _complex_from_json(v) for k, v in spec.get("fixed", {}).items()}
        return ParameterLoop.circle(
            spec["param"],
            _complex_from_json(spec.get("center", 0)),
            float(spec["radius"]),
            int(spec.get("turns", 1)),
            fixed,
        )
    if kind == "polyline":
        points = [
            {k: _complex_from_json(v) for k, v in pt.items()}
            for pt in spec["points"]
        ]
        return ParameterLoop.polyline(points)
    raise ValueError(f"unknown loop kind {kind!r}")


def _family_from_args(args) -> WeierstrassFamily:
    if args.family_file:
        with open(args.family_file) as fh:
            return WeierstrassFamily.from_json(json.load(fh))
    return catalogue_family(args.family, getattr(args, "k", 1) or 1)


def _emit(cert: Certificate, args) -> int:
    if args.format == "json":
        payload = json.dumps(cert.to_json(), indent=2, sort_keys=True)
    else:
        payload = cert.render_text()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(payload + "\n")
    else:
        print(payload)
    return cert.exit_code


def _timed(fn):
    start = time.perf_counter()
    out = fn()
    elapsed = (time.perf_counter() - start) * 1000
    return out, elapsed


def _verify_results(scope: str, ledger_path: str | None = None) -> list[tuple[CheckResult, float | None]]:
    rows: list[tuple[CheckResult, float | None]] = []
    if scope in ("identities", "all"):
        if ledger_path:
            with open(ledger_path) as fh:
                records = catalog.ledger_from_json(json.load(fh))
            results, ms = _timed(lambda: catalog.verify_identities(records))
        else:
            results, ms = _timed(catalog.verify_identities)
        per = ms / max(1, len(results))
        rows += [(r, per) for r in results]
        results, ms = _timed(catalog.catalog_self_check)
        per = ms / max(1, len(results))
        rows += [(r, per) for r in results]
    if scope in ("stabilizers", "all"):
        results, ms = _timed(catalog.verify_stabilizer_tables)
        per = ms / max(1, len(results))
        rows += [(r, per) for r in results]
    if scope in ("theorem", "all"):
        results, ms = _timed(catalog.verify_theorem_rows)
        per = ms / max(1, len(results))
        rows += [(r, per) for r in results]
    if scope in ("conclass", "all"):
        report, ms = _timed(catalog.half_twist_classification)
        per = ms / max(1, len(report.results))
        rows += [(r, per) for r in report.results]
    return rows


def cmd_verify(args) -> int:
    if args.dump_ledger:
        with open(args.dump_ledger, "w") as fh:
            json.dump(catalog.ledger_to_json(), fh, indent=2)
        print(f"ledger written to {args.dump_ledger}")
        return 0
    rows = _verify_results(args.scope, args.ledger)
    inputs = {"scope": args.scope}
    if args.ledger:
        inputs["ledger"] = args.ledger
    cert = Certificate.build(f"verify {args.scope}", inputs, rows)
    return _emit(cert, args)


def _parse_base(text: str, coefficient: str, n: int):
    if not text:
        if coefficient == "s3":
            return catalog.coxeter_system(n)
        return catalog.artin_system(n)
    entries = [tok.strip() for tok in text.split(",")]
    if len(entries) != n:
        raise ValueError(f"base tuple must have {n} entries")
    if coefficient == "s3":
        return tuple(perm_from_name(tok) for tok in entries)
    return tuple(artin_from_word(tok) for tok in entries)


def cmd_orbit(args, emit_transversal: bool = False) -> int:
    coefficient = args.coefficient
    if coefficient == "s3" and not 2 <= args.n <= 8:
        raise ValueError("orbit enumeration over s3 supports 2 <= n <= 8")
    if coefficient == "br3" and args.cap is None:
        raise ValueError("a --cap is required for br3 orbits")
    cap = args.cap if args.cap is not None else DEFAULT_ORBIT_CAP
    base = _parse_base(args.base, coefficient, args.n)
    inputs = {
        "n": args.n,
        "coefficient": coefficient,
        "cap": cap,
        "base": [g.render() for g in base],
    }
    start = time.perf_counter()
    try:
        table = orbit(base, cap)
        ms = (time.perf_counter() - start) * 1000
        witness = {"orbit_size": len(table)}
        if emit_transversal:
            witness["transversal"] = table.to_json(lambda g: g.render())
        result = CheckResult(
            f"orbit/{coefficient}@n{args.n}", "orbit-enumeration", "verified", witness
        )
    except OrbitCapExceeded as exc:
        ms = (time.perf_counter() - start) * 1000
        result = CheckResult(
            f"orbit/{coefficient}@n{args.n}", "orbit-enumeration", "degenerate",
            {"error": str(exc), "cap": cap},
        )
    command = "transversal" if emit_transversal else "orbit"
    cert = Certificate.build(command, inputs, [(result, ms)])
    return _emit(cert, args)


def cmd_monodromy(args) -> int:
    family = _family_from_args(args)
    if args.loop_file:
        with open(args.loop_file) as fh:
            spec = json.load(fh)
    else:
        spec = json.loads(args.loop)
    loop = _loop_from_spec(spec)
    options = TrackOptions(collision_tol=args.tolerance)
    inputs = {"family": family.to_json(), "loop": loop.to_json()}
    start = time.perf_counter()
    try:
        trace = track_loop(family, loop, options)
        word = loop_to_braid(trace)
        ms = (time.perf_counter() - start) * 1000
        witness = {"trace": trace.to_json()}
        if args.expect:
            expected = BraidWord.from_json(json.loads(args.expect))
            ok = equal(word, expected)
            witness["expected"] = expected.to_json()
            status = "verified" if ok else "failed"
        else:
            status = "verified"
        result = CheckResult("monodromy/loop", "loop-tracking", status, witness)
    except (TrackingError, DegenerateConfigurationError) as exc:
        ms = (time.perf_counter() - start) * 1000
        result = CheckResult(
            "monodromy/loop", "loop-tracking", "degenerate", {"error": str(exc)}
        )
    cert = Certificate.build("monodromy", inputs, [(result, ms)])
    return _emit(cert, args)


def _arc_from_spec(text: str, family, params) -> list[complex]:
    if ":" in text and not text.strip().startswith("["):
        lo, hi = (int(tok) for tok in text.split(":"))
        cfg = branch_points(family, params)
        return arcs.chord(cfg.point(lo), cfg.point(hi))
    return [_complex_from_json(v) for v in json.loads(text)]


def cmd_admissible(args) -> int:
    family = _family_from_args(args)
    params = {
        k: _complex_from_json(v) for k, v in json.loads(args.params or "{}").items()
    }
    arc = _arc_from_spec(args.arc, family, params)
    options = TrackOptions(collision_tol=args.tolerance)
    inputs = {
        "family": family.to_json(),
        "params": {k: [v.real, v.imag] for k, v in params.items()},
        "arc": [[z.real, z.imag] for z in arc],
    }
    start = time.perf_counter()
    try:
        report = arcs.admissible(family, params, arc, options)
        ms = (time.perf_counter() - start) * 1000
        result = CheckResult(
            "admissible/arc", "arc-admissibility", "verified", report.to_json()
        )
    except (arcs.ArcError, TrackingError, DegenerateConfigurationError) as exc:
        ms = (time.perf_counter() - start) * 1000
        result = CheckResult(
            "admissible/arc", "arc-admissibility", "degenerate", {"error": str(exc)}
        )
    cert = Certificate.build("admissible", inputs, [(result, ms)])
    return _emit(cert, args)


def cmd_report(args) -> int:
    rows = _verify_results("all")

    def add(fn, *fargs):
        out, ms = _timed(lambda: fn(*fargs))
        results = out.results if hasattr(out, "results") else out
        per = ms / max(1, len(results))
        rows.extend((r, per) for r in results)

    for k in (2, 3):
        add(geometry.ray_confinement, k)
        add(geometry.circle_confinement, k)
        add(geometry.double_root_uniqueness, k)
        add(geometry.cusp_exponent, k)
    add(_anchor_checks)
    for k in (1, 2, 3):
        add(bifurcation.bifurcation_generators, k)
    add(bifurcation.full_braid_monodromy_check, 3)
    add(_admissibility_checks)
    cert = Certificate.build("report", {}, rows)
    return _emit(cert, args)


def _anchor_checks() -> list[CheckResult]:
    loop = ParameterLoop.circle("lam", 0.0, 1.0)
    out = []
    for fam_id, expected in (("cusp", (1, 1, 1)), ("tangency", (1,))):
        family = catalogue_family(fam_id)
        word = loop_to_braid(track_loop(family, loop))
        ok = equal(word, BraidWord(2, expected))
        out.append(
            CheckResult(f"monodromy/anchor-{fam_id}", "loop-tracking",
                        "verified" if ok else "failed",
                        {"word": word.to_json()})
        )
    return out


def _admissibility_checks() -> list[CheckResult]:
    out = []
    for k in (2, 3):
        family = catalogue_family("base", k)
        cfg = branch_points(family, {})
        rep13 = arcs.admissible(family, {}, arcs.chord(cfg.point(1), cfg.point(3)))
        rep12 = arcs.admissible(family, {}, arcs.chord(cfg.point(1), cfg.point(2)))
        out.append(CheckResult(
            f"admissible/chord-x1-x3@k{k}", "arc-admissibility",
            "verified" if rep13.artin else "failed", rep13.to_json()))
        out.append(CheckResult(
            f"admissible/chord-x1-x2@k{k}", "arc-admissibility",
            "verified" if not rep12.coxeter else "failed", rep12.to_json()))
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="braidwork",
        description="braid word problem, Hurwitz orbits and numerical "
                    "bifurcation braid monodromy",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--out", default=None, help="write the certificate to a file")
        p.add_argument("--format", choices=("json", "text"), default="text")
        p.add_argument("--tolerance", type=float, default=DEFAULT_COLLISION_TOL,
                       help="collision tolerance for numerical pipelines")
        p.add_argument("--cap", type=int, default=None,
                       help="orbit state cap (required for br3 orbits)")

    p = sub.add_parser("verify", help="run the symbolic verification suites")
    p.add_argument("scope", choices=("identities", "stabilizers", "theorem",
                                     "conclass", "all"))
    p.add_argument("--ledger", default=None,
                   help="verify an external identity ledger (JSON) instead "
                        "of the built-in one")
    p.add_argument("--dump-ledger", default=None,
                   help="write the built-in identity ledger to a file and exit")
    common(p)
    p.set_defaults(fn=cmd_verify)

    for name, helptext, transversal in (
        ("orbit", "enumerate a Hurwitz orbit", False),
        ("transversal", "emit an orbit transversal", True),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--coefficient", choices=("s3", "br3"), default="s3")
        p.add_argument("--base", default="",
                       help="comma-separated entries, e.g. 's,t,s' or 'a,b,a'")
        common(p)
        p.set_defaults(fn=lambda a, t=transversal: cmd_orbit(a, t))

    p = sub.add_parser("monodromy", help="track a parameter loop to a braid")
    p.add_argument("--family", default="cusp",
                   help="catalogue family id (cusp, tangency, base, ray, ...)")
    p.add_argument("--family-file", default=None, help="JSON family spec file")
    p.add_argument("--k", type=int, default=1, help="x-degree for k-indexed families")
    p.add_argument("--loop", default=None, help="inline JSON loop spec")
    p.add_argument("--loop-file", default=None, help="JSON loop spec file")
    p.add_argument("--expect", default=None, help="expected braid word JSON")
    common(p)
    p.set_defaults(fn=cmd_monodromy)

    p = sub.add_parser("admissible", help="decide admissibility of an arc")
    p.add_argument("--family", default="base")
    p.add_argument("--family-file", default=None)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--params", default=None, help="JSON parameter values")
    p.add_argument("--arc", required=True,
                   help="'i:j' for the chord between branch points i and j, "
                        "or a JSON list of [re, im] vertices")
    common(p)
    p.set_defaults(fn=cmd_admissible)

    p = sub.add_parser("report", help="run every catalogued pipeline")
    common(p)
    p.set_defaults(fn=cmd_report)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "monodromy" and args.loop is None and args.loop_file is None:
        args.loop = json.dumps(
            {"kind": "circle", "param": "lam", "center": 0, "radius": 1.0}
        )
    try:
        return args.fn(args)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
