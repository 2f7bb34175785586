"""Tests for variety specs, point counting and the enumeration oracles."""

import pytest

from wittzeta.errors import BudgetError, InconsistentCountsError, PrecisionError, SpecError
from wittzeta.varieties import (
    AffineSpace,
    CountsSpec,
    EllipticCurve,
    EquationsSpec,
    PointCounts,
    ProductSpec,
    ProjectiveSpace,
    base_change,
    brute_sym_count,
    closed_point_counts,
    elliptic_trace,
    point_count_by_enumeration,
    point_counts,
    spec_field_size,
)

E = EllipticCurve(5, 1, 0)
CUBIC = EquationsSpec.from_strings(2, ("x", "y"), ("y^2 + y - x^3 - x",))


# --- spec validation ---


def test_elliptic_rejects_singular_and_bad_primes():
    with pytest.raises(SpecError):
        EllipticCurve(5, 0, 0)  # discriminant 0
    with pytest.raises(SpecError):
        EllipticCurve(4, 1, 1)  # not prime
    with pytest.raises(SpecError):
        EllipticCurve(3, 1, 1)  # p > 3 required


def test_product_requires_common_base_field():
    with pytest.raises(SpecError):
        ProductSpec((AffineSpace(1, 2), AffineSpace(1, 3)))
    with pytest.raises(SpecError):
        ProductSpec(())
    assert ProductSpec((E, E)).q == 5


def test_counts_spec_validation():
    with pytest.raises(SpecError):
        CountsSpec(2, ())
    with pytest.raises(SpecError):
        CountsSpec(2, (1, -1))
    with pytest.raises(SpecError):
        CountsSpec(6, (1,))


def test_equations_spec_validation():
    with pytest.raises(SpecError):
        EquationsSpec.from_strings(4, ("x",), ())
    with pytest.raises(SpecError):
        EquationsSpec.from_strings(2, ("x", "x"), ())
    with pytest.raises(SpecError):
        EquationsSpec.from_strings(2, (), ())
    cubic = EquationsSpec.from_strings(2, ("x", "y"), ("y^2 + y - x^3 - x",))
    with pytest.raises(SpecError):
        EquationsSpec(3, ("x",), cubic.polys)  # arity mismatch


def test_space_dimension_validation():
    with pytest.raises(SpecError):
        AffineSpace(-1, 2)
    with pytest.raises(SpecError):
        ProjectiveSpace(2, 6)


def test_spec_field_size():
    assert spec_field_size(AffineSpace(2, 9)) == 9
    assert spec_field_size(E) == 5
    assert spec_field_size(CUBIC) == 2
    with pytest.raises(SpecError):
        spec_field_size("nope")


def test_point_counts_type_validation():
    with pytest.raises(InconsistentCountsError):
        PointCounts(2, (1, -2))
    counts = PointCounts(2, (3, 5))
    assert counts.range == 2
    assert counts.count(2) == 5
    with pytest.raises(PrecisionError):
        counts.count(3)


# --- closed-form and recursive counting ---


def test_affine_space_counts():
    assert point_counts(AffineSpace(1, 2), 3).counts == (2, 4, 8)
    assert point_counts(AffineSpace(2, 9), 2).counts == (81, 6561)
    assert point_counts(AffineSpace(0, 3), 2).counts == (1, 1)


def test_projective_space_counts():
    assert point_counts(ProjectiveSpace(2, 2), 2).counts == (7, 21)
    assert point_counts(ProjectiveSpace(1, 3), 3).counts == (4, 10, 28)
    assert point_counts(ProjectiveSpace(0, 5), 2).counts == (1, 1)


def test_elliptic_counts_by_trace_recursion():
    assert elliptic_trace(E) == 2
    assert point_counts(E, 4).counts == (4, 32, 148, 640)


def test_product_counts_multiply_pointwise():
    square = point_counts(ProductSpec((E, E)), 3)
    single = point_counts(E, 3)
    assert square.counts == tuple(n * n for n in single.counts)
    assert square.q == 5


def test_counts_spec_passthrough_and_range_guard():
    spec = CountsSpec(2, (3, 5, 9))
    assert point_counts(spec, 2).counts == (3, 5)
    with pytest.raises(PrecisionError):
        point_counts(spec, 4)


def test_equations_counts_by_enumeration():
    # the affine cubic is supersingular: no new points appear over F_4
    assert point_counts(CUBIC, 2).counts == (4, 4)
    line = EquationsSpec.from_strings(2, ("x",), ())
    assert point_counts(line, 3).counts == (2, 4, 8)


def test_point_counts_rejects_empty_range():
    with pytest.raises(ValueError):
        point_counts(E, 0)


def test_elliptic_trace_budget():
    with pytest.raises(BudgetError) as info:
        elliptic_trace(E, budget=5)
    assert info.value.required == 10


def test_weil_bound_validator_never_fires_on_nonsingular_curves():
    for p in (5, 7, 11, 13, 17, 19, 23, 29, 31):
        for a in range(p):
            for b in range(p):
                if (4 * a**3 + 27 * b**2) % p == 0:
                    continue
                counts = point_counts(EllipticCurve(p, a, b), 6)
                assert all(n >= 0 for n in counts.counts)


# --- base change ---


def test_base_change_subsamples():
    counts = point_counts(ProjectiveSpace(1, 2), 4)
    shifted = base_change(counts, 2)
    assert shifted.q == 4
    assert shifted.counts == (5, 17)
    assert shifted.counts == point_counts(ProjectiveSpace(1, 4), 2).counts


def test_base_change_identity_and_range_guard():
    counts = point_counts(E, 4)
    assert base_change(counts, 1) == counts
    with pytest.raises(PrecisionError):
        base_change(PointCounts(2, (3,)), 2)


def test_base_change_matches_extension_field_enumeration():
    assert base_change(point_counts(E, 2), 2).count(1) == 32
    assert point_count_by_enumeration(E, 2) == 32


# --- brute-force enumeration oracles ---


def test_enumeration_matches_trace_recursion():
    expected = point_counts(E, 4).counts
    for r in (1, 2, 3, 4):
        assert point_count_by_enumeration(E, r) == expected[r - 1]


def test_enumeration_matches_equation_counts():
    expected = point_counts(CUBIC, 2).counts
    for r in (1, 2):
        assert point_count_by_enumeration(CUBIC, r) == expected[r - 1]


def test_enumeration_rejects_closed_form_specs():
    with pytest.raises(SpecError):
        point_count_by_enumeration(AffineSpace(1, 2), 1)


def test_closed_point_counts_affine_line():
    # monic irreducible polynomial counts over F_2: degrees 1, 2, 3
    line = EquationsSpec.from_strings(2, ("x",), ())
    assert closed_point_counts(line, 1, 3) == (2, 1, 2)


def test_closed_point_counts_elliptic():
    # degree-d closed points: (N_d - sum of lower orbits)/d off the table (4, 32, 148)
    assert closed_point_counts(E, 1, 3) == (4, 14, 48)
    assert closed_point_counts(E, 2, 2) == (32, 304)


def test_brute_sym_count_small_powers():
    assert brute_sym_count(E, 0, 1) == 1
    assert brute_sym_count(E, 1, 1) == 4
    assert brute_sym_count(E, 2, 1) == 24
    assert brute_sym_count(E, 2, 2) == 832
    assert brute_sym_count(CUBIC, 1, 2) == 4


def test_brute_sym_count_closed_formula_degree_two():
    # multisets of total degree 2: pairs of degree-1 points plus degree-2 points
    n1, n2 = point_counts(E, 2).counts
    assert brute_sym_count(E, 2, 1) == n1 * (n1 + 1) // 2 + (n2 - n1) // 2


def test_brute_sym_count_budget():
    with pytest.raises(BudgetError):
        brute_sym_count(E, 3, 2, budget=100)
    with pytest.raises(ValueError):
        brute_sym_count(E, -1, 1)
