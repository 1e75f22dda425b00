"""Numerical braid monodromy: root tracking and crossing bookkeeping.

A trace follows the roots of a polynomial whose coefficients vary along a
path, with adaptive step halving.  A step is accepted only when every
root's Newton correction converges, no root moves more than a quarter of
the smallest pairwise gap, the predicted-to-corrected matching is
unambiguous, and the rank order changes by at most disjoint adjacent
swaps.  Failures halve the step; underflow raises with the offending
parameter region.

Strands are ordered by the real part of the rotated coordinate
z * exp(-i * angle), imaginary part breaking ties.  A crossing of
adjacent ranks emits the generator with positive sign when the strand
moving up in rank passes with the smaller imaginary part, which makes a
counterclockwise half turn of two points the positive generator.  If two
tracked points stay vertically aligned within tolerance over a whole
step, the whole trace is recomputed with the projection rotated by a
fixed small angle (recorded on the trace).

Each trace runs on one worker; independent traces share no state and can
run concurrently.
"""

from __future__ import annotations

import dataclasses
import math
from typing import Callable, Iterable, Sequence

import numpy as np
from numpy.polynomial import polynomial as npoly

from .families import (
    DEFAULT_COLLISION_TOL,
    DEFAULT_RESIDUAL_TOL,
    DegenerateConfigurationError,
    WeierstrassFamily,
    min_pairwise_distance,
    refine_roots,
    solve_roots,
)
from .words import BraidWord


class TrackingError(RuntimeError):
    """Continuation failed; the message names the parameter region."""


@dataclasses.dataclass(frozen=True)
class TrackOptions:
    collision_tol: float = DEFAULT_COLLISION_TOL
    residual_tol: float = DEFAULT_RESIDUAL_TOL
    initial_step: float = 1 / 32
    min_step: float = 1e-12
    max_step: float = 1 / 16
    projection_angle: float = 0.0
    rotation_step: float = 0.0737
    max_rotations: int = 8
    max_steps: int = 500_000


@dataclasses.dataclass(frozen=True)
class Crossing:
    index: int  # 1-based adjacent-rank generator index
    sign: int
    time: float


@dataclasses.dataclass(frozen=True)
class BraidTrace:
    strand_count: int
    crossings: tuple[Crossing, ...]
    final_matching: tuple[int, ...]  # start rank -> end rank, 0-based
    projection_angle: float
    rotations: int
    start_points: tuple[complex, ...]  # in start-rank order
    end_points: tuple[complex, ...]  # end_points[j] is where strand j stopped

    def to_json(self) -> dict:
        return {
            "strand_count": self.strand_count,
            "crossings": [[c.index, c.sign, c.time] for c in self.crossings],
            "final_matching": list(self.final_matching),
            "projection_angle": self.projection_angle,
            "word": loop_to_braid(self).to_json(),
        }


def loop_to_braid(trace: BraidTrace) -> BraidWord:
    """The braid word read off a trace: crossings in time order."""
    return BraidWord(
        trace.strand_count,
        tuple(c.sign * c.index for c in trace.crossings),
    )


class _Restart(Exception):
    pass


def _rank_order(points: np.ndarray, angle: float) -> list[int]:
    rotated = points * np.exp(-1j * angle)
    return sorted(range(len(points)), key=lambda j: (rotated[j].real, rotated[j].imag))


def _track_once(
    coeff_fn: Callable[[float], np.ndarray],
    options: TrackOptions,
    angle: float,
) -> tuple[list[Crossing], np.ndarray, np.ndarray, list[int]]:
    rot = np.exp(-1j * angle)
    c0 = np.asarray(coeff_fn(0.0), dtype=complex)
    roots = solve_roots(c0, options.residual_tol)
    order = _rank_order(roots, angle)
    roots = roots[order]  # strand j = start rank j
    m = len(roots)
    if min_pairwise_distance(roots) < options.collision_tol:
        raise DegenerateConfigurationError("start configuration is degenerate")

    def aligned(points: np.ndarray) -> bool:
        scale = max(1.0, float(np.abs(points).max()))
        rotated = points * rot
        order = sorted(range(len(points)), key=lambda j: (rotated[j].real, rotated[j].imag))
        return any(
            abs(rotated[a].real - rotated[b].real) < 1e-7 * scale
            for a, b in zip(order, order[1:])
        )

    ranks = list(range(m))  # ranks[r] = strand currently at rank r
    if aligned(roots):
        raise _Restart()

    crossings: list[Crossing] = []
    s = 0.0
    h = options.initial_step
    steps = 0
    start = roots.copy()

    while s < 1.0 - 1e-15:
        steps += 1
        if steps > options.max_steps:
            raise TrackingError(f"step budget exhausted near parameter time {s:.6f}")
        h = min(h, 1.0 - s)
        trial = s + h

        def reject():
            nonlocal h
            h /= 2
            if h < options.min_step:
                raise TrackingError(
                    f"step underflow near parameter time {s:.6f}: "
                    "the path runs too close to a degeneration"
                )

        coeffs = np.asarray(coeff_fn(trial), dtype=complex)
        if len(coeffs) - 1 != m or abs(coeffs[-1]) < 1e-13 * np.abs(coeffs).max():
            raise TrackingError(
                f"branch polynomial degree dropped near parameter time {trial:.6f}"
            )
        try:
            new_roots = refine_roots(coeffs, roots, options.residual_tol)
        except DegenerateConfigurationError:
            reject()
            continue

        moves = np.abs(new_roots - roots)
        gap = min_pairwise_distance(roots)
        if moves.max() > gap / 4:
            reject()
            continue
        # matching ambiguity: each corrected root must be clearly nearest
        # to its own prediction
        dist = np.abs(roots[:, None] - new_roots[None, :])
        off = dist + np.diag([math.inf] * m)
        if np.any(np.diag(dist) > 0.5 * off.min(axis=1)):
            reject()
            continue
        if min_pairwise_distance(new_roots) < options.collision_tol:
            reject()
            continue

        new_order = _rank_order(new_roots, angle)
        if new_order != ranks:
            swaps = _adjacent_swaps(ranks, new_order)
            if swaps is None:
                reject()
                continue
            for r in swaps:
                strand_low, strand_high = ranks[r], ranks[r + 1]
                crossings.append(
                    _emit(r, strand_low, strand_high, roots, new_roots, rot, s, h)
                )
                ranks[r], ranks[r + 1] = ranks[r + 1], ranks[r]
        elif aligned(new_roots) and aligned(roots):
            raise _Restart()

        roots = new_roots
        s = trial
        h = min(h * 1.5, options.max_step)

    return crossings, start, roots, ranks


def _adjacent_swaps(old: list[int], new: list[int]) -> list[int] | None:
    """If new rank order differs from old by disjoint adjacent swaps,
    return the swap positions ascending, else None."""
    m = len(old)
    swaps = []
    r = 0
    while r < m:
        if old[r] == new[r]:
            r += 1
            continue
        if r + 1 < m and old[r] == new[r + 1] and old[r + 1] == new[r]:
            swaps.append(r)
            r += 2
            continue
        return None
    return swaps


def _emit(
    r: int,
    strand_low: int,
    strand_high: int,
    roots: np.ndarray,
    new_roots: np.ndarray,
    rot: complex,
    s: float,
    h: float,
) -> Crossing:
    a0, a1 = roots[strand_low] * rot, new_roots[strand_low] * rot
    b0, b1 = roots[strand_high] * rot, new_roots[strand_high] * rot
    d0 = b0.real - a0.real
    d1 = b1.real - a1.real
    denom = d0 - d1
    frac = 0.5 if abs(denom) < 1e-300 else min(max(d0 / denom, 0.0), 1.0)
    ya = a0.imag + frac * (a1.imag - a0.imag)
    yb = b0.imag + frac * (b1.imag - b0.imag)
    # strand_low moves up in rank; below the other strand means positive
    sign = 1 if ya < yb else -1
    return Crossing(index=r + 1, sign=sign, time=s + frac * h)


def track_coefficients(
    coeff_fn: Callable[[float], np.ndarray],
    options: TrackOptions = TrackOptions(),
) -> BraidTrace:
    """Track the root set of coeff_fn(s) for s in [0, 1]."""
    angle = options.projection_angle
    rotations = 0
    while True:
        try:
            crossings, start, end, ranks = _track_once(coeff_fn, options, angle)
            break
        except _Restart:
            rotations += 1
            if rotations > options.max_rotations:
                raise TrackingError(
                    "projection rotation limit exceeded; points remain aligned"
                )
            angle += options.rotation_step

    m = len(start)
    end_rank_order = _rank_order(end, angle)
    end_rank = [0] * m
    for rank, strand in enumerate(end_rank_order):
        end_rank[strand] = rank
    return BraidTrace(
        strand_count=m,
        crossings=tuple(crossings),
        final_matching=tuple(end_rank),
        projection_angle=angle,
        rotations=rotations,
        start_points=tuple(start),
        end_points=tuple(end),
    )


# ---------------------------------------------------------------------------
# Parameter loops and x-paths


@dataclasses.dataclass(frozen=True)
class ParameterLoop:
    """A piecewise-linear closed path in parameter space."""

    points: tuple[dict[str, complex], ...]

    def __post_init__(self):
        if len(self.points) < 2:
            raise ValueError("a loop needs at least two vertices")
        if self.points[0] != self.points[-1]:
            raise ValueError("loop is not closed: first and last vertices differ")

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(self.points[0].keys())

    def at(self, s: float) -> dict[str, complex]:
        return _interp_path(self.points, s)

    @staticmethod
    def circle(
        param: str,
        center: complex,
        radius: float,
        turns: int = 1,
        fixed: dict[str, complex] | None = None,
        samples_per_turn: int = 48,
        start_angle: float = 0.0,
    ) -> "ParameterLoop":
        fixed = dict(fixed or {})
        count = samples_per_turn * abs(turns)
        pts = []
        for j in range(count + 1):
            theta = start_angle + 2 * math.pi * turns * j / count
            value = center + radius * complex(math.cos(theta), math.sin(theta))
            pts.append({**fixed, param: value})
        pts[-1] = pts[0]
        return ParameterLoop(tuple(pts))

    @staticmethod
    def polyline(points: Sequence[dict[str, complex]]) -> "ParameterLoop":
        return ParameterLoop(tuple(dict(p) for p in points))

    def to_json(self) -> list[dict]:
        return [
            {name: [v.real, v.imag] for name, v in pt.items()}
            for pt in [
                {k: complex(v) for k, v in point.items()} for point in self.points
            ]
        ]


def _interp_path(points: Sequence, s: float):
    s = min(max(s, 0.0), 1.0)
    segments = len(points) - 1
    pos = s * segments
    idx = min(int(pos), segments - 1)
    frac = pos - idx
    p0, p1 = points[idx], points[idx + 1]
    if isinstance(p0, dict):
        return {
            name: complex(p0[name]) * (1 - frac) + complex(p1[name]) * frac
            for name in p0
        }
    return complex(p0) * (1 - frac) + complex(p1) * frac


def validate_loop(
    family: WeierstrassFamily,
    loop: ParameterLoop,
    collision_tol: float = DEFAULT_COLLISION_TOL,
) -> None:
    """Check every vertex stays clear of the degeneration locus (branch
    points pairwise separated beyond the collision tolerance)."""
    from .families import branch_points

    for point in loop.points:
        branch_points(family, point, collision_tol)


def track_loop(
    family: WeierstrassFamily,
    loop: ParameterLoop,
    options: TrackOptions = TrackOptions(),
) -> BraidTrace:
    """Track the branch points of the family along a closed parameter loop."""
    validate_loop(family, loop, options.collision_tol)

    def coeff_fn(s: float) -> np.ndarray:
        return family.branch_coeffs(loop.at(s))

    return track_coefficients(coeff_fn, options)


def track_x_path(
    family: WeierstrassFamily,
    t: dict[str, complex],
    path: Sequence[complex],
    options: TrackOptions = TrackOptions(),
) -> BraidTrace:
    """Track the fiber roots in y along a path in the x-plane."""
    vertices = [complex(z) for z in path]
    if len(vertices) < 2:
        raise ValueError("a path needs at least two vertices")

    def coeff_fn(s: float) -> np.ndarray:
        return family.fiber_coeffs(_interp_path(vertices, s), t)

    return track_coefficients(coeff_fn, options)


def fiber_monodromy(
    family: WeierstrassFamily,
    t: dict[str, complex],
    path: Sequence[complex],
    options: TrackOptions = TrackOptions(),
) -> tuple[tuple[int, ...], BraidWord]:
    """Endpoint matching and fiber braid word along an x-plane path."""
    trace = track_x_path(family, t, path, options)
    return trace.final_matching, loop_to_braid(trace)


# ---------------------------------------------------------------------------
# Geometric bases of loops around branch points


def circle_path(
    center: complex, radius: float, start_angle: float, turns: float = 1.0,
    samples: int = 32,
) -> list[complex]:
    pts = []
    count = max(8, int(samples * abs(turns)))
    for j in range(count + 1):
        theta = start_angle + 2 * math.pi * turns * j / count
        pts.append(center + radius * complex(math.cos(theta), math.sin(theta)))
    return pts


def loop_around(
    target: complex,
    base: complex,
    radius: float,
    samples: int = 32,
) -> list[complex]:
    """Radial approach from base, a positive circle around target, return."""
    direction = target - base
    dist = abs(direction)
    if dist <= radius:
        raise ValueError("base point sits inside the requested circle")
    entry = target - radius * direction / dist
    start_angle = math.atan2((entry - target).imag, (entry - target).real)
    approach_steps = max(2, int(8 * dist / max(radius, 1e-9)) // 4)
    approach = [
        base + (entry - base) * j / approach_steps for j in range(approach_steps + 1)
    ]
    circle = circle_path(target, radius, start_angle, 1.0, samples)
    return approach + circle[1:] + approach[::-1][1:]


def star_basis(
    points: Sequence[complex],
    base: complex | None = None,
    radius_factor: float = 0.2,
) -> list[list[complex]]:
    """Disjoint positive loops around each point, ordered so that their
    product is the boundary class of a large disc.

    The default base sits at a small positive offset into the sector
    between the rays of the last and the first point.
    """
    pts = [complex(z) for z in points]
    if base is None:
        if len(pts) == 1:
            base = pts[0] - 0.5 * max(1.0, abs(pts[0]))
        else:
            a_first = math.atan2(pts[0].imag, pts[0].real) % (2 * math.pi)
            a_last = math.atan2(pts[-1].imag, pts[-1].real) % (2 * math.pi)
            if a_last <= a_first:
                a_last += 2 * math.pi
            # halfway through the empty sector from the last ray around to
            # the first ray
            mid = (a_last + a_first + 2 * math.pi) / 2
            scale = min(abs(z) for z in pts)
            base = 0.15 * scale * complex(math.cos(mid), math.sin(mid))
    if any(abs(z - base) < 1e-12 for z in pts):
        raise ValueError("base point collides with a configuration point")
    loops = []
    for z in pts:
        others = [abs(z - w) for w in pts if w != z]
        reach = min(others) if others else 2 * abs(z - base)
        radius = radius_factor * min(reach, abs(z - base))
        loops.append(loop_around(z, base, radius))
    return loops
