import random
from fractions import Fraction

import pytest

from rankcrit.polyring import (
    QQ,
    ZZ,
    Polynomial,
    ResidueRing,
    RingMismatchError,
    reduce_mod,
)


def P(ring, *coeffs):
    return Polynomial.from_coeffs(ring, coeffs)


def rand_poly(rng, ring, max_deg=8, bound=10 ** 6):
    coeffs = [rng.randint(-bound, bound) for _ in range(rng.randint(0, max_deg + 1))]
    return Polynomial.from_coeffs(ring, coeffs)


class TestAdd:
    def test_identity(self):
        p = P(ZZ, 3, 2)
        assert p + Polynomial.zero(ZZ) == p

    def test_inverse(self):
        p = P(ZZ, 3, 2)
        assert (p + (-p)).is_zero

    def test_table_row(self):
        # (-6t^2 - 18t - 9) + 6t^2 = -18t - 9
        got = P(ZZ, -9, -18, -6) + P(ZZ, 0, 0, 6)
        assert got == P(ZZ, -9, -18)

    def test_ring_mismatch(self):
        with pytest.raises(RingMismatchError):
            P(ZZ, 1) + P(QQ, 1)


class TestMul:
    def test_monic_quadratic(self):
        assert P(ZZ, 1, 1) * P(ZZ, 2, 1) == P(ZZ, 2, 3, 1)

    def test_identity(self):
        p = P(ZZ, 3, 2)
        assert p * P(ZZ, 1) == p

    def test_square(self):
        assert P(ZZ, 3, 2) * P(ZZ, 3, 2) == P(ZZ, 9, 12, 4)

    def test_degree_adds(self):
        rng = random.Random(1)
        for _ in range(50):
            a, b = rand_poly(rng, ZZ), rand_poly(rng, ZZ)
            if a.is_zero or b.is_zero:
                assert (a * b).is_zero
            else:
                assert (a * b).degree == a.degree + b.degree

    def test_ring_mismatch(self):
        with pytest.raises(RingMismatchError):
            P(ZZ, 1) * P(ResidueRing(5), 1)


class TestDerivative:
    def test_linear(self):
        assert P(ZZ, 3, 2).derivative() == P(ZZ, 2)

    def test_quadratic(self):
        assert P(ZZ, 0, 0, -3).derivative() == P(ZZ, 0, -6)

    def test_constant(self):
        assert P(ZZ, 1).derivative().is_zero

    def test_degree_drop(self):
        rng = random.Random(2)
        for _ in range(50):
            a = rand_poly(rng, ZZ)
            if a.degree >= 1:
                assert a.derivative().degree == a.degree - 1


class TestEval:
    def test_constant_term_row2(self):
        assert P(ZZ, -9, -18, -6)(0) == -9

    def test_zero_constant(self):
        assert P(ZZ, 0, 2, 0, 0, 9)(0) == 0

    def test_at_one(self):
        assert P(ZZ, 3, 2)(1) == 5

    def test_ring_mismatch(self):
        with pytest.raises(TypeError):
            P(ZZ, 1, 1)(Fraction(1, 2))


class TestReduceMod:
    def test_coefficientwise(self):
        assert reduce_mod(P(ZZ, -9, -18, -6), 5) == P(ResidueRing(5), 1, 2, 4)

    def test_large_constant(self):
        assert reduce_mod(P(ZZ, 80919), 17) == P(ResidueRing(17), 16)

    def test_zero(self):
        assert reduce_mod(Polynomial.zero(ZZ), 7).is_zero

    def test_rejects_even_modulus(self):
        with pytest.raises(ValueError):
            reduce_mod(P(ZZ, 1), 2)

    def test_rejects_composite(self):
        with pytest.raises(ValueError):
            reduce_mod(P(ZZ, 1), 9)


class TestRationals:
    def test_half(self):
        p = Polynomial.constant(QQ, Fraction(1, 2))
        assert p(0) == Fraction(1, 2)
        assert (p + p)(0) == 1

    def test_residue_half(self):
        ring = ResidueRing(19)
        assert ring.mul(ring.half(), 2) == 1

    def test_zz_has_no_half(self):
        with pytest.raises(ValueError):
            ZZ.half()


class TestRender:
    def test_row2(self):
        assert str(P(ZZ, -9, -18, -6)) == "-6*t^2 - 18*t - 9"

    def test_zero(self):
        assert str(Polynomial.zero(ZZ)) == "0"

    def test_unit_coefficients(self):
        assert str(P(ZZ, 0, -1, 1)) == "t^2 - t"

    def test_fraction(self):
        assert str(Polynomial.constant(QQ, Fraction(1, 2))) == "1/2"


def _random_case_rings(rng):
    ring = rng.choice([ZZ, QQ, ResidueRing(5), ResidueRing(97)])
    return ring


class TestRingAxioms:
    """Randomized associativity / commutativity / distributivity / Leibniz."""

    def test_axioms(self):
        rng = random.Random(12345)
        for _ in range(800):
            ring = _random_case_rings(rng)
            a, b, c = (rand_poly(rng, ring) for _ in range(3))
            assert (a + b) + c == a + (b + c)
            assert a + b == b + a
            assert a * b == b * a
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c

    def test_leibniz(self):
        rng = random.Random(999)
        for _ in range(500):
            ring = _random_case_rings(rng)
            a, b = rand_poly(rng, ring), rand_poly(rng, ring)
            assert (a * b).derivative() == a.derivative() * b + a * b.derivative()

    def test_reduction_homomorphism(self):
        rng = random.Random(77)
        for p in (3, 5, 17, 97):
            for _ in range(150):
                a, b, c = (rand_poly(rng, ZZ) for _ in range(3))
                lhs = reduce_mod(a * b + c, p)
                rhs = reduce_mod(a, p) * reduce_mod(b, p) + reduce_mod(c, p)
                assert lhs == rhs

    def test_eval_commutes_with_reduction_at_zero(self):
        rng = random.Random(31)
        for p in (3, 5, 17, 97):
            for _ in range(100):
                a = rand_poly(rng, ZZ)
                assert reduce_mod(a, p)(0) == a(0) % p
