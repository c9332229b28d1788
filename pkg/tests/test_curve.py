"""Curve models: construction, the group law, enumeration, serialization."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ectorsion import (
    BinaryField,
    Char2Curve,
    CubicCurve,
    FieldTooLarge,
    InvalidParams,
    OffCurve,
    Point,
    PrimeField,
    QuadraticPoly,
    Rationals,
    SingularCurve,
    curve_from_json,
    point_from_json,
    point_to_json,
)

import oracles


def pt(curve, x, y):
    return Point(curve.field(x), curve.field(y))


def as_tuple(P):
    """Package point -> oracle tuple."""
    return None if P.is_infinity else (P.x.value, P.y.value)


# ---------------------------------------------------------------------------
# construction and validation
# ---------------------------------------------------------------------------

def test_singular_cubics_are_rejected():
    Q = Rationals()
    with pytest.raises(SingularCurve):
        CubicCurve(Q, -1, 3, 2)  # (x+1)(x^2+3x+2) = (x+1)^2 (x+2)
    with pytest.raises(SingularCurve):
        CubicCurve(Q, 1, 2, 1)  # x^2+2x+1 = (x+1)^2
    with pytest.raises(InvalidParams):
        CubicCurve(BinaryField(3), 0, 1, 1)  # wrong characteristic
    # fine: (x-1)(x^2+1)
    CubicCurve(Q, 1, 0, 1)


def test_char2_curve_validation():
    F = BinaryField(3)
    with pytest.raises(SingularCurve):
        Char2Curve(F, F(1), F(0))
    with pytest.raises(InvalidParams):
        Char2Curve(PrimeField(7), 1, 1)
    E = Char2Curve(F, F(0), F(1))
    assert E.j_invariant() == F(1)
    assert Char2Curve(F, 0, 5).j_invariant() == F(5).inverse()


def test_cubic_accessors():
    F = PrimeField(11)
    E = CubicCurve(F, -1, 2, 3)
    A, B, C = E.coefficients()
    # (x+1)(x^2+2x+3) = x^3 + 3x^2 + 5x + 3
    assert (A, B, C) == (F(3), F(5), F(3))
    assert E.w3 == pt(E, -1, 0)
    assert E.rhs(F(1)) == F(2 * 6)  # (1+1)(1+2+3) = 12 = 1
    assert E.contains(Point.infinity())
    g = QuadraticPoly(F, F(2), F(3))
    assert CubicCurve.from_g(F, F(-1), g) == E


def test_from_weierstrass():
    Q = Rationals()
    E = CubicCurve.from_weierstrass(Q, 0, -1, 0)  # y^2 = x^3 - x
    A, B, C = E.coefficients()
    assert (A, B, C) == (Q(0), Q(-1), Q(0))
    assert E.rhs(E.alpha) == 0
    with pytest.raises(InvalidParams):
        CubicCurve.from_weierstrass(Q, 0, 0, -2)  # x^3 - 2 has no rational root
    F = PrimeField(7)
    E2 = CubicCurve.from_weierstrass(F, 1, 3, 2)
    assert E2.coefficients() == (F(1), F(3), F(2))


# ---------------------------------------------------------------------------
# group law against the oracle
# ---------------------------------------------------------------------------

ORACLE_CURVES = [(5, 4, 1, 0), (7, 1, 3, 2), (11, 0, 1, 0), (13, 2, 5, 0), (31, 7, 11, 0)]


@pytest.mark.parametrize("p,A,B,C", ORACLE_CURVES)
def test_cubic_add_matches_oracle(p, A, B, C):
    F = PrimeField(p)
    E = CubicCurve.from_weierstrass(F, A, B, C)
    assert E.coefficients() == (F(A), F(B), F(C))
    pts = E.full_group()
    assert sorted(as_tuple(P) for P in pts[1:]) == sorted(oracles.fp_cubic_points(p, A, B, C))
    rng = random.Random(p)
    for _ in range(80):
        P, Q = rng.choice(pts), rng.choice(pts)
        got = E.add(P, Q)
        want = oracles.fp_cubic_add(p, A, B, C, as_tuple(P), as_tuple(Q))
        assert as_tuple(got) == want
    for P in pts[1:][:10]:
        assert E.order_of(P) == oracles.fp_cubic_order(p, A, B, C, as_tuple(P))
        assert as_tuple(E.negate(P)) == oracles.fp_cubic_neg(p, as_tuple(P))
        want7 = as_tuple(P)
        for _ in range(6):
            want7 = oracles.fp_cubic_add(p, A, B, C, want7, as_tuple(P))
        assert as_tuple(E.scalar_mul(7, P)) == want7


def test_cubic_add_matches_oracle_over_q():
    # y^2 = (x+1)(x^2 + 8x + 4): contains (0, 2), a generic-looking point
    Q = Rationals()
    E = CubicCurve(Q, -1, 8, 4)
    A, B, C = (c.value for c in E.coefficients())
    P = pt(E, 0, 2)
    acc_pkg = P
    acc_orc = (Fraction(0), Fraction(2))
    for _ in range(6):
        acc_pkg = E.add(acc_pkg, P)
        acc_orc = oracles.qq_cubic_add(A, B, C, acc_orc, (Fraction(0), Fraction(2)))
        if acc_pkg.is_infinity:
            assert acc_orc is None
            break
        assert (acc_pkg.x.value, acc_pkg.y.value) == acc_orc


@settings(max_examples=40, deadline=None)
@given(
    p=st.sampled_from([5, 7, 11, 13]),
    seed=st.integers(0, 10**6),
)
def test_group_axioms_on_random_points(p, seed):
    rng = random.Random(seed)
    F = PrimeField(p)
    for _ in range(20):
        alpha, pp, qq = rng.randrange(p), rng.randrange(p), rng.randrange(p)
        try:
            E = CubicCurve(F, alpha, pp, qq)
            break
        except SingularCurve:
            continue
    else:
        return
    pts = E.full_group()
    P, Q, R = (rng.choice(pts) for _ in range(3))
    assert E.add(P, Q) == E.add(Q, P)
    assert E.add(E.add(P, Q), R) == E.add(P, E.add(Q, R))
    assert E.add(P, E.negate(P)).is_infinity
    assert E.add(P, Point.infinity()) == P
    n = rng.randrange(-6, 18)
    want = Point.infinity()
    step = P if n >= 0 else E.negate(P)
    for _ in range(abs(n)):
        want = E.add(want, step)
    assert E.scalar_mul(n, P) == want


def test_order_of_infinity_and_cap():
    F = PrimeField(11)
    E = CubicCurve.from_weierstrass(F, 0, 1, 0)
    assert E.order_of(Point.infinity()) == 1
    P = E.full_group()[1]
    n = E.order_of(P)
    assert n is not None and n > 1 and E.scalar_mul(n, P).is_infinity
    assert E.order_of(P, cap=n) == n
    assert E.order_of(P, cap=n - 1) is None


def test_off_curve_is_rejected():
    F = PrimeField(11)
    E = CubicCurve.from_weierstrass(F, 0, 1, 0)
    with pytest.raises(OffCurve):
        E.add(pt(E, 1, 1), Point.infinity())
    with pytest.raises(OffCurve):
        E.order_of(Point(PrimeField(7)(1), PrimeField(7)(1)))
    with pytest.raises(OffCurve):
        E.add((1, 2), (1, 2))  # not Point objects at all


# ---------------------------------------------------------------------------
# torsion structure and enumeration
# ---------------------------------------------------------------------------

def test_two_torsion_counts():
    F = PrimeField(7)
    E1 = CubicCurve(F, 0, 0, 1)  # x^2+1 irreducible mod 7 (-1 is a non-square)
    assert E1.two_torsion() == [E1.w3]
    E3 = CubicCurve(F, 0, 0, -1)  # x^2-1 = (x-1)(x+1)
    tt = E3.two_torsion()
    assert len(tt) == 3 and all(P.y == 0 for P in tt)
    assert {as_tuple(P)[0] for P in tt} == {0, 1, 6}
    for P in tt:
        assert E3.add(P, P).is_infinity


def test_w3_self_addition_is_infinity():
    F = PrimeField(13)
    E = CubicCurve(F, 2, 1, 5)
    assert E.add(E.w3, E.w3).is_infinity
    assert E.order_of(E.w3) == 2


def test_full_group_limits():
    with pytest.raises(FieldTooLarge):
        CubicCurve(Rationals(), 0, 1, 3).full_group()
    with pytest.raises(FieldTooLarge):
        Char2Curve(BinaryField(17), 0, 1).full_group()
    F = PrimeField(5)
    E = CubicCurve(F, 0, 4, 1)
    pts = E.full_group()
    assert pts[0].is_infinity
    assert len(pts) == len(set(pts))
    q = 5
    assert abs(len(pts) - (q + 1)) <= 2 * oracles.small_primes(2, 3)[0]  # Hasse, loosely


@pytest.mark.parametrize("p", [5, 7, 11, 13, 17, 19, 23])
def test_group_size_in_hasse_interval_and_orders_divide(p):
    F = PrimeField(p)
    rng = random.Random(p)
    for _ in range(5):
        try:
            E = CubicCurve(F, rng.randrange(p), rng.randrange(p), rng.randrange(p))
        except SingularCurve:
            continue
        pts = E.full_group()
        N = len(pts)
        assert (p + 1 - N) ** 2 <= 4 * p
        for P in rng.sample(pts, min(6, len(pts))):
            assert N % E.order_of(P) == 0


def test_translate_x_known_example_and_homomorphism():
    F = PrimeField(11)
    E = CubicCurve(F, -1, 2, 3)
    E2, fwd = E.translate_x(F(1))
    assert E2.alpha == F(-2)
    assert E2.g.p == F(4) and E2.g.q == F(6)
    # fwd must be a group isomorphism preserving orders
    for P in E.full_group():
        Q = fwd(P)
        assert E2.contains(Q)
        assert E2.order_of(Q) == E.order_of(P)
    P1, P2 = E.full_group()[1:3]
    assert fwd(E.add(P1, P2)) == E2.add(fwd(P1), fwd(P2))


def test_j_invariant_matches_long_form_formula():
    for field, alpha, pp, qq in [
        (PrimeField(11), -1, 2, 3),
        (PrimeField(13), 0, 1, 5),
        (Rationals(), 2, 0, 1),
    ]:
        E = CubicCurve(field, alpha, pp, qq)
        A, B, C = E.coefficients()
        assert E.j_invariant() == oracles.j_long_weierstrass(
            field(0), A, field(0), B, C)


# ---------------------------------------------------------------------------
# characteristic-2 model
# ---------------------------------------------------------------------------

CHAR2_CASES = [(2, 0, 1), (2, 2, 2), (3, 1, 5), (3, 0, 7), (4, 6, 9)]


@pytest.mark.parametrize("k,a2,a6", CHAR2_CASES)
def test_char2_group_law_matches_oracle(k, a2, a6):
    F = BinaryField(k)
    E = Char2Curve(F, F(a2), F(a6))
    mod = F.modulus
    pts = E.full_group()
    want_affine = oracles.char2_points(k, mod, a2, a6)
    assert sorted(as_tuple(P) for P in pts[1:]) == sorted(want_affine)
    everything = [None] + want_affine
    for P in everything:
        for Q in everything:
            got = E.add(
                Point.infinity() if P is None else Point(F(P[0]), F(P[1])),
                Point.infinity() if Q is None else Point(F(Q[0]), F(Q[1])),
            )
            assert as_tuple(got) == oracles.char2_add(k, mod, a2, a6, P, Q)


def test_char2_negation_and_w3():
    F = BinaryField(4)
    E = Char2Curve(F, F(3), F(9))
    for P in E.full_group():
        N = E.negate(P)
        assert E.contains(N)
        assert E.add(P, N).is_infinity
        if not P.is_infinity:
            assert N == Point(P.x, P.x + P.y)
    w = E.w3
    assert w.x == 0 and w.y * w.y == F(9)
    assert E.order_of(w) == 2
    assert E.has_order2()


def test_char2_order_matches_oracle():
    F = BinaryField(3)
    E = Char2Curve(F, F(1), F(5))
    for P in E.full_group()[1:]:
        assert E.order_of(P) == oracles.char2_order(3, F.modulus, 1, 5, as_tuple(P))


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

def test_point_json_roundtrip():
    F = PrimeField(11)
    E = CubicCurve(F, -1, 2, 3)
    P = E.full_group()[1]
    assert point_from_json(F, point_to_json(P)) == P
    assert point_to_json(Point.infinity()) == "infinity"
    assert point_from_json(F, "infinity").is_infinity
    with pytest.raises(InvalidParams):
        point_from_json(F, {"x": "1"})
    with pytest.raises(InvalidParams):
        point_from_json(F, {"x": "1", "y": "2", "z": "3"})
    # rationals serialize as num/den strings
    Q = Rationals()
    P2 = Point(Q(Fraction(1, 2)), Q(Fraction(-3, 4)))
    js = point_to_json(P2)
    assert js == {"x": "1/2", "y": "-3/4"}
    assert point_from_json(Q, js) == P2


def test_curve_json_roundtrip():
    F = PrimeField(11)
    E = CubicCurve(F, -1, 2, 3)
    js = E.to_json_dict()
    assert js["model"] == "cubic"
    assert js["field"] == "Fp:11"
    assert curve_from_json(js) == E
    assert curve_from_json({"alpha": -1, "p": 2, "q": 3}, field=F) == E

    B = BinaryField(3)
    E2 = Char2Curve(B, B(1), B(5))
    js2 = E2.to_json_dict()
    assert js2["model"] == "char2"
    assert curve_from_json(js2) == E2
    assert curve_from_json({"a2": 1, "a6": 5}, field=B) == E2
    with pytest.raises(InvalidParams):
        curve_from_json({"alpha": 0, "p": 1}, field=F)
    with pytest.raises(InvalidParams):
        curve_from_json({"p": 1, "q": 1})  # no field anywhere


def test_point_class_invariants():
    F = PrimeField(5)
    with pytest.raises(InvalidParams):
        Point(F(1), None)
    assert Point.infinity().is_infinity
    assert Point(F(1), F(2)) == Point(F(1), F(2))
    assert len({Point(F(1), F(2)), Point(F(1), F(2))}) == 1
