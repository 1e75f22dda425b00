import pytest

from braidwork.bifurcation import (
    _ray_critical,
    bifurcation_generators,
    full_braid_monodromy_check,
)
from braidwork.words import permutation_image


def test_ray_critical_values_k2():
    odd = _ray_critical(2, 1.9)
    assert sorted(round(m.imag, 6) for m in odd) == [
        -round(1.9**0.5, 6), round(1.9**0.5, 6)]
    even = _ray_critical(2, -0.1)
    assert sorted(round(m.real, 6) for m in even) == [
        -round(0.1**0.5, 6), round(0.1**0.5, 6)]


def test_single_cusp_realizes_the_triple_twist():
    report = bifurcation_generators(1)
    assert report.passed
    assert report.outcomes[0].matched == "e_12"


def test_degree_four_generators():
    report = bifurcation_generators(2)
    assert report.passed
    matched = {o.matched for o in report.outcomes}
    assert {"e_12", "e_13", "e_24"} <= matched


def test_degree_four_loops_give_transpositions():
    report = bifurcation_generators(2)
    for outcome in report.outcomes:
        perm = permutation_image(outcome.braid)
        moved = [i for i, x in enumerate(perm) if x != i]
        assert len(moved) == 2


def test_full_braid_monodromy_degree_two():
    results = full_braid_monodromy_check(3)
    assert all(r.passed for r in results)
    assert results[0].witness["closure_size"] == 6


def test_unsupported_degree_is_rejected():
    with pytest.raises(ValueError):
        bifurcation_generators(5)
