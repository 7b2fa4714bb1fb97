from fractions import Fraction

import pytest
from hypothesis import given, strategies as st
from mpmath import iv

from mixedbraid import kernels
from mixedbraid.cyclotomic import CycNum, eval_complex, imag_unit, real_sign, root_of_unity

from .strategies import cycnums, same_conductor_pairs

z3 = root_of_unity(3, 1)
z5 = root_of_unity(5, 1)


class TestRootOfUnity:
    def test_fourth_root_squared(self):
        assert root_of_unity(4, 2) == CycNum.rational(-1)

    def test_cube_root_cubed(self):
        assert root_of_unity(3, 3) == CycNum.rational(1)

    def test_conductor_normalization(self):
        assert root_of_unity(12, 4) == root_of_unity(3, 1)

    def test_exponent_reduced_mod_M(self):
        assert root_of_unity(7, -1) == root_of_unity(7, 6)

    def test_zero_conductor_rejected(self):
        with pytest.raises(ValueError):
            root_of_unity(0, 1)


class TestFieldOperations:
    def test_norm_of_one_minus_zeta3(self):
        assert (1 - z3) * (1 - z3**2) == CycNum.rational(3)

    def test_inverse_of_one_minus_zeta3(self):
        assert (1 - z3).inv() == (1 - z3**2) / 3

    def test_additive_inverse(self):
        x = 3 * z5 - Fraction(1, 2) * z5**3
        assert (x + (-x)).is_zero()

    def test_inverse_of_zero(self):
        with pytest.raises(ZeroDivisionError):
            CycNum.rational(0).inv()

    def test_mixed_conductors_promote_to_lcm(self):
        s = z3 + z5
        assert s.conductor == 15
        assert s - z5 == z3

    def test_vanishing_sum_of_roots(self):
        assert sum((root_of_unity(6, k) for k in range(6)), CycNum.rational(0)).is_zero()


class TestConjugation:
    def test_conj_zeta5(self):
        assert z5.conj() == root_of_unity(5, 4)

    def test_rationals_fixed(self):
        assert CycNum.rational(2).conj() == CycNum.rational(2)

    def test_real_element_fixed(self):
        x = imag_unit() * (1 + z3) / (1 - z3)
        assert x.conj() == x


class TestEvalComplex:
    def test_i(self):
        box = eval_complex(root_of_unity(4, 1), 53)
        assert box.contains(1j)

    def test_one_minus_zeta3(self):
        box = eval_complex(1 - z3, 64)
        assert abs(box.center - complex(1.5, -(3**0.5) / 2)) < 1e-15
        assert box.width < 1e-15

    def test_zero_exact(self):
        box = eval_complex(CycNum.rational(0), 53)
        assert (box.re_lo, box.re_hi, box.im_lo, box.im_hi) == (0, 0, 0, 0)

    def test_width_shrinks(self):
        x = z5 + 2 * z3
        assert eval_complex(x, 200).width < eval_complex(x, 40).width

    def test_low_precision_rejected(self):
        with pytest.raises(ValueError):
            eval_complex(z3, 16)


class TestRealSign:
    def test_negative_real_element(self):
        assert real_sign(imag_unit() * (1 + z3) / (1 - z3)) == -1

    def test_zero(self):
        assert real_sign(CycNum.rational(0)) == 0

    def test_positive_rational(self):
        assert real_sign(CycNum.rational(3)) == 1

    def test_non_real_rejected(self):
        with pytest.raises(ValueError):
            real_sign(z3)

    def test_tiny_real_difference(self):
        # 2 cos(2 pi / 7) differs from a nearby rational by far less than 1e-3
        c = root_of_unity(7, 1) + root_of_unity(7, 6)
        assert real_sign(c - Fraction(12470, 10000)) == -1
        assert real_sign(c - Fraction(12469, 10000)) == 1


class TestText:
    def test_round_trip(self):
        x = Fraction(3, 4) - 2 * z5**2 + z5
        assert CycNum.from_text(x.to_text()) == x


# --- properties -------------------------------------------------------------


@given(same_conductor_pairs(), cycnums(bound=3))
def test_ring_axioms(pair, c):
    a, b = pair
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)


@given(cycnums(bound=4))
def test_inverse_is_two_sided(x):
    if x.is_zero():
        return
    y = x.inv()
    assert x * y == CycNum.rational(1)
    assert y * x == CycNum.rational(1)


@given(same_conductor_pairs())
def test_conj_is_automorphism(pair):
    a, b = pair
    assert (a * b).conj() == a.conj() * b.conj()
    assert (a + b).conj() == a.conj() + b.conj()
    assert a.conj().conj() == a


@given(cycnums())
def test_conj_matches_complex_conjugation(x):
    z = eval_complex(x, 80).center
    assert abs(eval_complex(x.conj(), 80).center - z.conjugate()) < 1e-9


@given(same_conductor_pairs(bound=3))
def test_product_enclosure(pair):
    a, b = pair
    ba, bb, bp = (eval_complex(v, 60) for v in (a, b, a * b))
    ra = iv.mpf([ba.re_lo, ba.re_hi])
    ia = iv.mpf([ba.im_lo, ba.im_hi])
    rb = iv.mpf([bb.re_lo, bb.re_hi])
    ib = iv.mpf([bb.im_lo, bb.im_hi])
    re = ra * rb - ia * ib
    im = ra * ib + ia * rb
    assert re.a <= bp.re_lo and bp.re_hi <= re.b
    assert im.a <= bp.im_lo and bp.im_hi <= im.b


@given(cycnums())
def test_real_sign_of_norm(x):
    n = x * x.conj()
    assert real_sign(n) == (0 if x.is_zero() else 1)


@given(same_conductor_pairs(bound=40))
def test_compiled_and_pure_kernels_agree(pair):
    a, b = pair
    M = a.conductor
    scale = 720
    va = [int(c * scale) for c in a.coeffs]
    vb = [int(c * scale) for c in b.coeffs]
    va, vb = kernels.reduce(va, M), kernels.reduce(vb, M)
    assert kernels.mul(va, vb, M) == kernels.mul(va, vb, M, pure=True)
    assert kernels.lincomb(va, 3, vb, -7) == kernels.lincomb(va, 3, vb, -7, pure=True)
    assert kernels.permute_reduce(va, M - 1, M) == kernels.permute_reduce(va, M - 1, M, pure=True)


def test_kernel_overflow_falls_back():
    M = 15
    big = kernels.reduce([10**30] + [0] * (M - 1), M)
    one = kernels.reduce([1] + [0] * (M - 1), M)
    assert kernels.mul(big, one, M) == kernels.mul(big, one, M, pure=True)


@given(st.integers(1, 40), st.integers(-80, 80), st.integers(-80, 80))
def test_roots_multiply(M, a, b):
    assert root_of_unity(M, a) * root_of_unity(M, b) == root_of_unity(M, a + b)
