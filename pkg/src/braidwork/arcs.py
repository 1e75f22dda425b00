"""Admissibility of arcs between branch points.

An arc between two branch points is tested by computing the fiber
monodromy of small positive loops around each endpoint, both based at the
midpoint of the arc and approached along the arc itself.  The arc is
permutation-admissible when the two endpoint monodromies give the same
transposition of fiber sheets, and braid-admissible when they give the
same fiber braid; braid admissibility implies permutation admissibility.
"""

from __future__ import annotations

import dataclasses
import math
from typing import Sequence

import numpy as np

from .families import BranchConfiguration, WeierstrassFamily, branch_points
from .garside import equal
from .tracking import TrackOptions, circle_path, fiber_monodromy
from .words import BraidWord


class ArcError(ValueError):
    """The arc violates an admissibility precondition."""


@dataclasses.dataclass(frozen=True)
class AdmissibilityReport:
    coxeter: bool
    artin: bool
    start_label: int
    end_label: int
    start_matching: tuple[int, ...]
    end_matching: tuple[int, ...]
    start_word: BraidWord
    end_word: BraidWord

    def to_json(self) -> dict:
        return {
            "coxeter": self.coxeter,
            "artin": self.artin,
            "endpoints": [self.start_label, self.end_label],
            "start_matching": list(self.start_matching),
            "end_matching": list(self.end_matching),
            "start_word": self.start_word.to_json(),
            "end_word": self.end_word.to_json(),
        }


def _cumulative(vertices: list[complex]) -> list[float]:
    acc = [0.0]
    for a, b in zip(vertices, vertices[1:]):
        acc.append(acc[-1] + abs(b - a))
    return acc


def _point_at(vertices: list[complex], lengths: list[float], s: float) -> complex:
    target = s * lengths[-1]
    for k in range(len(vertices) - 1):
        if lengths[k + 1] >= target - 1e-15:
            seg = lengths[k + 1] - lengths[k]
            frac = 0.0 if seg == 0 else (target - lengths[k]) / seg
            return vertices[k] + frac * (vertices[k + 1] - vertices[k])
    return vertices[-1]


def _resample(vertices: list[complex], lengths: list[float],
              s0: float, s1: float, count: int = 24) -> list[complex]:
    return [
        _point_at(vertices, lengths, s0 + (s1 - s0) * j / count)
        for j in range(count + 1)
    ]


def _exit_parameter(vertices, lengths, center: complex, radius: float,
                    from_start: bool) -> float:
    """Arc-length parameter where the arc first leaves the circle around
    an endpoint, walking inwards from that endpoint."""
    samples = 512
    span = [j / samples for j in range(samples + 1)]
    if not from_start:
        span = span[::-1]
    for s in span:
        if abs(_point_at(vertices, lengths, s) - center) >= radius:
            return s
    raise ArcError("arc never leaves the endpoint circle")


def chord(a: complex, b: complex, samples: int = 16) -> list[complex]:
    return [a + (b - a) * j / samples for j in range(samples + 1)]


def admissible(
    family: WeierstrassFamily,
    t: dict[str, complex],
    arc: Sequence[complex],
    options: TrackOptions = TrackOptions(),
    radius_factor: float = 0.2,
) -> AdmissibilityReport:
    """Decide permutation- and braid-admissibility of an embedded arc
    whose endpoints are branch points of the family at parameter t."""
    vertices = [complex(z) for z in arc]
    if len(vertices) < 2:
        raise ArcError("arc needs at least two vertices")
    cfg = branch_points(family, t, options.collision_tol, options.residual_tol)
    gap = cfg.min_gap()

    def nearest_label(z: complex) -> int:
        dists = [abs(z - p) for p in cfg.points]
        label = int(np.argmin(dists)) + 1
        if dists[label - 1] > 0.05 * gap:
            raise ArcError(f"arc endpoint {z} is not a branch point")
        return label

    label_a = nearest_label(vertices[0])
    label_b = nearest_label(vertices[-1])
    if label_a == label_b:
        raise ArcError("arc endpoints coincide")
    point_a, point_b = cfg.point(label_a), cfg.point(label_b)

    lengths = _cumulative(vertices)
    if lengths[-1] == 0:
        raise ArcError("arc has zero length")

    # interior must stay clear of the branch set away from its endpoints
    for j in range(257):
        s = j / 256
        z = _point_at(vertices, lengths, s)
        for label, p in enumerate(cfg.points, start=1):
            d = abs(z - p)
            if label == label_a:
                allowed = d > 0.45 * gap or s < 0.5
            elif label == label_b:
                allowed = d > 0.45 * gap or s > 0.5
            else:
                allowed = d > 0.2 * gap
            if not allowed:
                raise ArcError(
                    f"arc interior passes within {d:.3g} of branch point x_{label}"
                )

    r_a = radius_factor * min(gap, abs(point_a - vertices[-1]))
    r_b = radius_factor * min(gap, abs(point_b - vertices[0]))
    s_a = _exit_parameter(vertices, lengths, point_a, r_a, from_start=True)
    s_b = _exit_parameter(vertices, lengths, point_b, r_b, from_start=False)
    if not s_a < 0.5 < s_b:
        raise ArcError("endpoint circles overlap the arc midpoint")

    entry_a = _point_at(vertices, lengths, s_a)
    entry_b = _point_at(vertices, lengths, s_b)

    def endpoint_loop(entry: complex, s_entry: float, center: complex,
                      radius: float) -> list[complex]:
        approach = _resample(vertices, lengths, 0.5, s_entry)
        angle = math.atan2((entry - center).imag, (entry - center).real)
        circle = circle_path(center, radius, angle, 1.0, 48)
        return approach + circle[1:] + approach[::-1][1:]

    loop_a = endpoint_loop(entry_a, s_a, point_a, r_a)
    loop_b = endpoint_loop(entry_b, s_b, point_b, r_b)

    matching_a, word_a = fiber_monodromy(family, t, loop_a, options)
    matching_b, word_b = fiber_monodromy(family, t, loop_b, options)

    coxeter = matching_a == matching_b
    artin = coxeter and equal(word_a, word_b)
    return AdmissibilityReport(
        coxeter=coxeter,
        artin=artin,
        start_label=label_a,
        end_label=label_b,
        start_matching=matching_a,
        end_matching=matching_b,
        start_word=word_a,
        end_word=word_b,
    )
