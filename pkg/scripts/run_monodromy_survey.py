#!/usr/bin/env python3
"""Survey the numerical pipelines: monodromy anchors, geometry checks,
generator realization for the catalogued x-degrees, and chord
admissibility.  Writes certificates/monodromy-survey.json."""

import json
import pathlib
import sys
import time

from braidwork import bifurcation, geometry
from braidwork.arcs import admissible, chord
from braidwork.catalog import CheckResult
from braidwork.certificates import Certificate
from braidwork.families import branch_points, catalogue_family
from braidwork.garside import equal
from braidwork.tracking import ParameterLoop, loop_to_braid, track_loop
from braidwork.words import BraidWord

OUT = pathlib.Path("certificates")


def collect() -> list[tuple[CheckResult, float]]:
    rows = []

    def push(results):
        elapsed = (time.perf_counter() - push.t0) * 1000
        for r in results:
            rows.append((r, elapsed / max(1, len(results))))
        push.t0 = time.perf_counter()

    push.t0 = time.perf_counter()

    loop = ParameterLoop.circle("lam", 0.0, 1.0)
    for family_id, expected in (("cusp", (1, 1, 1)), ("tangency", (1,))):
        family = catalogue_family(family_id)
        braid = loop_to_braid(track_loop(family, loop))
        ok = equal(braid, BraidWord(2, expected))
        push([CheckResult(f"survey/anchor-{family_id}", "loop-tracking",
                          "verified" if ok else "failed",
                          {"word": braid.to_json()})])

    for k in (2, 3):
        push(geometry.ray_confinement(k).results)
        push(geometry.circle_confinement(k).results)
        push(geometry.double_root_uniqueness(k).results)
        push(geometry.cusp_exponent(k).results)

    for k in (1, 2, 3):
        report = bifurcation.bifurcation_generators(k)
        push(report.results)
        print(f"k={k} loop outcomes:",
              {o.loop_id: o.matched for o in report.outcomes})
    push(bifurcation.full_braid_monodromy_check(3))

    for k in (2, 3):
        family = catalogue_family("base", k)
        cfg = branch_points(family, {})
        rep13 = admissible(family, {}, chord(cfg.point(1), cfg.point(3)))
        rep12 = admissible(family, {}, chord(cfg.point(1), cfg.point(2)))
        push([
            CheckResult(f"survey/chord-x1-x3@k{k}", "arc-admissibility",
                        "verified" if rep13.artin else "failed", rep13.to_json()),
            CheckResult(f"survey/chord-x1-x2@k{k}", "arc-admissibility",
                        "verified" if not rep12.coxeter else "failed",
                        rep12.to_json()),
        ])
    return rows


def run() -> int:
    OUT.mkdir(exist_ok=True)
    cert = Certificate.build("monodromy-survey", {}, collect())
    path = OUT / "monodromy-survey.json"
    path.write_text(json.dumps(cert.to_json(), indent=2, sort_keys=True) + "\n")
    print(cert.render_text())
    return cert.exit_code


if __name__ == "__main__":
    sys.exit(run())
