"""Tests for GF(2^m) arithmetic, roots of unity and the GF(4)/GF(16) subfields."""
import random

import pytest

from gf2.field import FieldElement, build_field, primitive_nth_root, subfield_eta, subfield_mu
from gf2.poly import BitPolynomial
from utils.errors import DegreeOutOfRange, DivisionByZero, MixedFields, NoSubfield, OrderUnavailable


@pytest.fixture
def gf16():
    return build_field(4)


class TestBuildField:
    def test_moduli(self):
        assert build_field(1).modulus == BitPolynomial(0b10)
        assert build_field(2).modulus == BitPolynomial(0b111)
        assert build_field(4).modulus == BitPolynomial(0b10011)

    @pytest.mark.parametrize("m", [0, 129])
    def test_degree_range(self, m):
        with pytest.raises(DegreeOutOfRange):
            build_field(m)

    def test_largest_field(self):
        spec = build_field(128)
        assert spec.modulus.degree == 128


class TestArithmetic:
    def test_characteristic_two(self, gf16):
        for v in range(16):
            a = gf16.element(v)
            assert not (a + a)

    def test_group_order(self, gf16):
        for v in range(1, 16):
            assert (gf16.element(v) ** 15).is_one()

    def test_reduction(self, gf16):
        z = gf16.element(0b10)
        assert z * (z ** 3) == gf16.element(0b11)

    def test_inverse(self, gf16):
        for v in range(1, 16):
            a = gf16.element(v)
            assert (a * a.inverse()).is_one()
            assert (a / a).is_one()

    def test_zero_has_no_inverse(self, gf16):
        with pytest.raises(DivisionByZero):
            gf16.zero.inverse()

    def test_mixed_fields(self, gf16):
        with pytest.raises(MixedFields):
            gf16.one + build_field(8).one

    def test_frobenius_is_additive(self):
        spec = build_field(40)
        rng = random.Random(3)
        for _ in range(25):
            a, b = spec.element(rng.getrandbits(40)), spec.element(rng.getrandbits(40))
            assert (a + b).square() == a.square() + b.square()
            assert (a * b).frobenius(3) == a.frobenius(3) * b.frobenius(3)


class TestRootsOfUnity:
    def test_order_17_in_gf256(self):
        x = primitive_nth_root(build_field(8), 17)
        assert (x ** 17).is_one() and not x.is_one()

    def test_trivial_root(self, gf16):
        assert primitive_nth_root(gf16, 1) == gf16.one

    def test_order_5(self, gf16):
        x = primitive_nth_root(gf16, 5)
        assert (x ** 5).is_one() and not x.is_one()

    def test_unavailable(self, gf16):
        with pytest.raises(OrderUnavailable):
            primitive_nth_root(gf16, 7)

    def test_composite_order(self):
        spec = build_field(40)
        alpha = primitive_nth_root(spec, 697)
        assert (alpha ** 697).is_one()
        assert not (alpha ** 41).is_one() and not (alpha ** 17).is_one()


class TestSubfields:
    def test_mu_gf4(self):
        assert subfield_mu(build_field(2)).value == 0b10

    def test_mu_gf16(self, gf16):
        mu = subfield_mu(gf16)
        assert mu.value == 0b110
        other = mu + gf16.one
        assert not (other * other + other + gf16.one)

    def test_mu_needs_even_degree(self):
        with pytest.raises(NoSubfield):
            subfield_mu(build_field(3))

    @pytest.mark.parametrize("m", [4, 8, 20])
    def test_eta(self, m):
        spec = build_field(m)
        mu = subfield_mu(spec)
        eta = subfield_eta(spec, mu)
        assert eta * eta + eta == mu
        assert not (eta ** 4 + eta + spec.one)
        assert eta.in_subfield(4)

    def test_eta_needs_degree_multiple_of_four(self):
        with pytest.raises(NoSubfield):
            subfield_eta(build_field(6))

    def test_element_repr(self, gf16):
        assert isinstance(gf16.element(0b10011), FieldElement)
        assert gf16.element(0b10011).value == 0
