import pytest
from hypothesis import given, settings, strategies as st

from triquad.matrix import UpperTriangular, is_solution
from triquad.quad import (
    QuadraticError,
    QuadraticSpec,
    idempotent_spec,
    involution_spec,
    other_root,
    parse_roots,
    quad_from_roots,
    roots_of_coeffs,
)
from triquad.ring import FiniteRing, RingError


def Z(m):
    return FiniteRing("zmod", m)


def int_pairs(m, r, s):
    """Plain-integer scan for unordered {a, b}, a != b, a+b=r, ab=s, (a-b) a unit mod m."""
    out = []
    for a in range(m):
        for b in range(a + 1, m):
            if (a + b) % m == r and a * b % m == s and any((a - b) * y % m == 1 for y in range(m)):
                out.append((a, b))
    return out


def test_from_roots_zmod6():
    R = Z(6)
    spec = quad_from_roots(R, R.element(3), R.element(4))
    assert spec.r == R.element(1) and spec.s == R.element(0)
    assert spec.diff_inverse == R.element(5)
    assert not spec.diff_right_zero_divisor


def test_zero_divisor_difference_rejected():
    R = Z(6)
    with pytest.raises(QuadraticError) as err:
        quad_from_roots(R, R.element(0), R.element(3))
    assert err.value.reason == "difference-not-unit"


def test_equal_roots_rejected():
    R = Z(7)
    with pytest.raises(QuadraticError) as err:
        quad_from_roots(R, R.element(2), R.element(2))
    assert err.value.reason == "equal-roots"


def test_gaussian_i_minus_i():
    G = FiniteRing("gaussian", 5)
    spec = quad_from_roots(G, G.element([0, 1]), G.element([0, 4]))
    assert spec.r == G.zero and spec.s == G.one


def test_non_commuting_roots_rejected():
    H = FiniteRing("quaternion", 3)
    with pytest.raises(QuadraticError) as err:
        quad_from_roots(H, H.element([0, 1, 0, 0]), H.element([0, 0, 1, 0]))
    assert err.value.reason == "non-commuting-roots"


def test_non_central_commuting_roots_rejected():
    H = FiniteRing("quaternion", 3)
    i, minus_i, j = H.element([0, 1, 0, 0]), H.element([0, 2, 0, 0]), H.element([0, 0, 1, 0])
    assert i * minus_i == minus_i * i
    with pytest.raises(QuadraticError) as err:
        quad_from_roots(H, i, minus_i)
    assert err.value.reason == "non-central-roots"
    # why: diag(i, -i) with a free (1,2) entry j is not a solution of x^2 + 1
    bypass = QuadraticSpec(H, i, minus_i, H.zero, H.one, H.inverse(i - minus_i), False)
    assert not is_solution(UpperTriangular(H, [[i, j], [minus_i]]), bypass)


@pytest.mark.parametrize(
    "m,r,s,expected",
    [(6, 1, 0, [(0, 1), (3, 4)]), (2, 0, 1, []), (5, 0, 4, [(1, 4)]), (7, 0, 6, [(1, 6)])],
)
def test_roots_of_coeffs(m, r, s, expected):
    assert int_pairs(m, r, s) == expected
    R = Z(m)
    got = roots_of_coeffs(R, R.element(r), R.element(s))
    assert [(a.coords[0], b.coords[0]) for a, b in got] == expected


@given(st.sampled_from([2, 3, 4, 5, 6, 8, 9, 10, 12]), st.data())
@settings(max_examples=60)
def test_roots_of_coeffs_matches_int_scan(m, data):
    r = data.draw(st.integers(0, m - 1))
    s = data.draw(st.integers(0, m - 1))
    R = Z(m)
    got = roots_of_coeffs(R, R.element(r), R.element(s))
    assert [(a.coords[0], b.coords[0]) for a, b in got] == int_pairs(m, r, s)


@pytest.mark.parametrize("desc", ["zmod:2", "zmod:6", "gaussian:3", "quaternion:3"])
def test_idempotent_spec(desc):
    R = FiniteRing.from_descriptor(desc)
    spec = idempotent_spec(R)
    assert spec.roots == (R.zero, R.one)
    assert spec.r == R.one and spec.s == R.zero


def test_involution_spec():
    R = Z(5)
    spec = involution_spec(R)
    assert spec.roots == (R.element(1), R.element(4))
    assert spec.r == R.zero and spec.s == R.element(4)
    for m in (2, 6):
        with pytest.raises(QuadraticError) as err:
            involution_spec(Z(m))
        assert err.value.reason == "characteristic-two"


def test_other_root():
    R = Z(2)
    spec = idempotent_spec(R)
    assert other_root(spec, R.zero) == R.one
    spec5 = involution_spec(Z(5))
    assert other_root(spec5, Z(5).element(4)) == Z(5).element(1)
    spec6 = quad_from_roots(Z(6), Z(6).element(3), Z(6).element(4))
    with pytest.raises(QuadraticError):
        other_root(spec6, Z(6).element(2))


@pytest.mark.parametrize(
    "desc", ["zmod:5", "zmod:6", "zmod:9", "gaussian:3", "gaussian:5", "quaternion:3"]
)
def test_spec_properties_for_all_admissible_pairs(desc):
    R = FiniteRing.from_descriptor(desc)
    els = R.all_elements()
    scalars = [R.element(c) for c in range(R.modulus)]
    for a in scalars if R.kind == "quaternion" else els:
        for b in scalars if R.kind == "quaternion" else els:
            try:
                spec = quad_from_roots(R, a, b)
            except QuadraticError:
                continue
            for x in spec.roots:
                assert (x * x - spec.r * x + spec.s).is_zero()
                y = other_root(spec, x)
                assert other_root(spec, y) == x
                assert x + y == spec.r
                assert x - y in (a - b, b - a)
                assert R.inverse(x - y) is not None
            pairs = roots_of_coeffs(R, spec.r, spec.s)
            assert tuple(sorted((a, b))) in [tuple(sorted(p)) for p in pairs]


def test_parse_roots():
    assert parse_roots(Z(6), "3,4") == (Z(6).element(3), Z(6).element(4))
    G = FiniteRing("gaussian", 3)
    assert parse_roots(G, "[2,1],[0,1]") == (G.element([2, 1]), G.element([0, 1]))
    with pytest.raises(RingError):
        parse_roots(G, "1,2")
    with pytest.raises(RingError):
        parse_roots(Z(6), "3,9")
