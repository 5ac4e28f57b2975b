import pytest

from frobstrat.gfield import (
    FieldSpec,
    ProjectivePoint,
    field_inverse,
    field_make,
    projective_plane,
)

# every field with q <= 9, for the exhaustive axiom sweeps
SMALL_FIELDS = [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)]


def test_prime_field_construction(f3):
    assert (f3.p, f3.m, f3.q) == (3, 1, 3)
    assert f3.modulus is None
    assert len(f3.elements) == 3


def test_gf9_default_modulus_is_lex_smallest(f9):
    # oracle: x^2 + 1 has no root over GF(3) because the squares are {0, 1}
    squares = {(a * a) % 3 for a in range(3)}
    assert (-1) % 3 not in squares
    assert f9.modulus == (1, 0, 1)
    assert f9.q == 9


def test_explicit_modulus_accepted():
    spec = field_make(3, 2, [1, 0, 1])
    assert spec == field_make(3, 2)


def test_rejects_non_prime_characteristic():
    with pytest.raises(ValueError):
        field_make(4)
    with pytest.raises(ValueError):
        field_make(1)


def test_rejects_bad_degree():
    with pytest.raises(ValueError):
        field_make(3, 0)


def test_rejects_reducible_modulus():
    # x^2 + 2 = (x - 1)(x + 1) over GF(3)
    with pytest.raises(ValueError):
        field_make(3, 2, [2, 0, 1])
    with pytest.raises(ValueError):
        field_make(3, 2, [0, 0, 1])


def test_rejects_wrong_modulus_degree():
    with pytest.raises(ValueError):
        field_make(3, 2, [1, 1])


def test_inverse_examples(f3, f9):
    two = f3.element(2)
    assert field_inverse(two) == two                      # 2*2 = 4 = 1
    x = f9.element([0, 1])
    assert field_inverse(x) == f9.element([0, 2])         # x*2x = 2x^2 = -2 = 1
    assert x * field_inverse(x) == f9.one
    assert field_inverse(f9.one) == f9.one


def test_inverse_of_zero_raises(f3):
    with pytest.raises(ZeroDivisionError):
        field_inverse(f3.zero)


@pytest.mark.parametrize("p,m", SMALL_FIELDS)
def test_field_axioms_exhaustive(p, m):
    spec = field_make(p, m)
    elems = spec.elements
    for a in elems:
        if a:
            assert a * a.inverse() == spec.one
        for b in elems:
            assert a + b == b + a
            assert a * b == b * a
            for c in elems:
                assert (a + b) + c == a + (b + c)
                assert (a * b) * c == a * (b * c)
                assert a * (b + c) == a * b + a * c


@pytest.mark.parametrize("p,m", SMALL_FIELDS)
def test_frobenius_identity_exhaustive(p, m):
    spec = field_make(p, m)
    for a in spec.elements:
        for b in spec.elements:
            assert (a + b) ** p == a ** p + b ** p


@pytest.mark.parametrize("p,m,expected", [(3, 1, 13), (3, 2, 91), (2, 1, 7)])
def test_projective_plane_count(p, m, expected):
    spec = field_make(p, m)
    pts = projective_plane(spec)
    assert len(pts) == expected == spec.q ** 2 + spec.q + 1


@pytest.mark.parametrize("p,m", [(2, 1), (3, 1), (3, 2)])
def test_projective_plane_complete_without_duplicates(p, m):
    spec = field_make(p, m)
    pts = projective_plane(spec)
    assert len(set(pts)) == len(pts)
    # oracle: every nonzero coordinate triple normalizes to a listed point
    listed = set(pts)
    for a in spec.elements:
        for b in spec.elements:
            for c in spec.elements:
                if a or b or c:
                    assert ProjectivePoint((a, b, c)) in listed


def test_projective_normalization_is_canonical(f3):
    scaled = ProjectivePoint.of(f3, (2, 0, 1))
    assert scaled == ProjectivePoint.of(f3, (1, 0, 2))
    assert scaled.to_lists() == [[1], [0], [2]]


def test_projective_point_rejects_zero(f3):
    with pytest.raises(ValueError):
        ProjectivePoint.of(f3, (0, 0, 0))


def test_mixed_field_arithmetic_is_an_error(f3, f9):
    with pytest.raises(ValueError):
        f3.element(1) + f9.element(1)
    other = field_make(3, 2, [2, 1, 1])  # x^2 + x + 2, also irreducible
    with pytest.raises(ValueError):
        f9.element([0, 1]) * other.element([0, 1])


def test_equal_specs_interoperate(f9):
    twin = field_make(3, 2, [1, 0, 1])
    assert twin == f9
    assert twin.element([0, 1]) + f9.element([0, 2]) == f9.zero


def test_serialization_roundtrip(f9):
    e = f9.element([2, 1])
    assert e.to_coeffs() == [2, 1]
    assert f9.element(e.to_coeffs()) == e
    pt = ProjectivePoint.of(f9, ([0, 1], 2, 1))
    assert ProjectivePoint.of(f9, pt.to_lists()) == pt


def test_integer_operands_lift(f3):
    assert f3.element(1) + 2 == f3.zero
    assert 2 * f3.element(2) == f3.one
    assert f3.element(1) - 2 == f3.element(2)


def test_spec_repr_mentions_size(f3, f9):
    assert "GF(3)" in repr(f3)
    assert "3^2" in repr(f9)
