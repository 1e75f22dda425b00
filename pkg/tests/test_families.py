import math

import numpy as np
import pytest

from braidwork.families import (
    BranchConfiguration,
    DegenerateConfigurationError,
    WeierstrassFamily,
    branch_points,
    catalogue_family,
    label_points,
    min_pairwise_distance,
    solve_roots,
)


def test_base_family_branch_points_are_roots_of_unity():
    for k in (2, 3):
        cfg = branch_points(catalogue_family("base", k), {})
        assert len(cfg) == 2 * k
        expected = [np.exp(1j * math.pi * m / k) for m in range(2 * k)]
        for label, want in enumerate(expected, start=1):
            assert abs(cfg.point(label) - want) < 1e-12


def test_tangency_and_cusp_branch_points():
    cfg = branch_points(catalogue_family("tangency"), {"lam": 1.0})
    assert sorted(z.real for z in cfg.points) == pytest.approx([-1.0, 1.0])
    cfg = branch_points(catalogue_family("cusp"), {"lam": 1.0})
    assert sorted(z.real for z in cfg.points) == pytest.approx([-1.0, 1.0])


def test_labeling_starts_nearest_one_and_runs_by_argument():
    pts = label_points([-1j, 1j, -1.0, 1.0])
    assert pts[0] == 1.0
    assert pts[1] == 1j
    assert pts[2] == -1.0
    assert pts[3] == -1j


def test_degenerate_configuration_is_flagged():
    with pytest.raises(DegenerateConfigurationError):
        branch_points(catalogue_family("tangency"), {"lam": 0.0})
    with pytest.raises(DegenerateConfigurationError):
        branch_points(catalogue_family("tangency"), {"lam": 1e-20})


def test_missing_parameter_is_an_error():
    with pytest.raises(ValueError):
        branch_points(catalogue_family("cusp"), {})


def test_refinement_residuals_are_tiny():
    family = catalogue_family("ray", 3)
    coeffs = family.branch_coeffs({"lam": 0.3, "mu": 0.1 + 0.05j})
    roots = solve_roots(coeffs)
    vals = np.polynomial.polynomial.polyval(roots, coeffs)
    scale = np.polynomial.polynomial.polyval(np.abs(roots), np.abs(coeffs))
    assert np.all(np.abs(vals) / scale < 1e-12)


def test_family_json_round_trip():
    family = catalogue_family("ray", 2)
    data = family.to_json()
    rebuilt = WeierstrassFamily.from_json(data)
    t = {"lam": 0.25, "mu": 0.1j}
    assert np.allclose(rebuilt.branch_coeffs(t), family.branch_coeffs(t))
    by_id = WeierstrassFamily.from_json({"catalogue_id": "ray", "k": 2})
    assert np.allclose(by_id.branch_coeffs(t), family.branch_coeffs(t))


def test_custom_family_with_complex_entries():
    family = WeierstrassFamily(
        y_degree=2, params=("c",), q_coeffs=([0, 1], "c", 1)
    )
    coeffs = family.q_coeffs if hasattr(family, "q_coeffs") else None
    arr = family.q_array({"c": 2.0})
    assert arr[0] == 1j and arr[1] == 2.0 and arr[2] == 1.0


def test_fiber_coefficients():
    family = catalogue_family("base", 2)
    coeffs = family.fiber_coeffs(0.0, {})
    roots = sorted(np.polynomial.polynomial.polyroots(coeffs).real)
    assert roots == pytest.approx([-math.sqrt(3), 0.0, math.sqrt(3)])


def test_min_pairwise_distance():
    assert min_pairwise_distance(np.array([0.0, 3.0, 1.0])) == 1.0
    assert math.isinf(min_pairwise_distance(np.array([1.0])))
