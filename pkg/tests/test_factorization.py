"""Factorization enumeration, complementary pairs, genericity, labels."""

from fractions import Fraction

import pytest
from hypothesis import given, settings

from quatlink import (
    NonGenericError,
    RealPoly,
    UnsupportedError,
    all_factorizations,
    check_generic,
    complementary,
    complementary_pairs,
    factor_from_divisor,
    label_factorizations,
    monic_linear,
    parse_poly,
    quadratic_divisors,
    real_roots,
)

from conftest import (
    HAMILTON,
    HAMILTON_TWO_FACTORS,
    SPLIT,
    SPLIT_SIX_FACTORS,
    expand_pair,
    hq,
    split_quaternions,
    sq,
)


class TestCheckGeneric:
    def test_split_example_is_generic(self, split_six):
        report = check_generic(split_six)
        assert report.coefficients_independent
        assert report.invertible_leading_remainders
        assert report.norm_square_free
        assert report.verdict

    def test_dependent_coefficients(self):
        report = check_generic(parse_poly("t^2 + 1", SPLIT))
        assert not report.coefficients_independent
        assert not report.verdict

    def test_square_norm(self):
        poly = expand_pair(hq(0, 1, 0, 0), hq(0, 1, 0, 0))  # (t - i)^2
        assert poly.norm_polynomial() == RealPoly((1, 0, 1)) * RealPoly((1, 0, 1))
        report = check_generic(poly)
        assert not report.norm_square_free
        assert not report.verdict

    def test_wrong_shape_rejected(self):
        with pytest.raises(UnsupportedError):
            check_generic(parse_poly("t^3 + t", SPLIT))
        with pytest.raises(UnsupportedError):
            check_generic(parse_poly("2t^2 + t", SPLIT))


class TestFactorFromDivisor:
    def test_rational_roots_divisor(self, split_six):
        f = factor_from_divisor(split_six, RealPoly((0, -2, 1)))  # t(t-2)
        assert f.h2 == sq(1, 0, Fraction(-3, 5), Fraction(4, 5))
        assert f.h1 == sq(1, 0, Fraction(8, 5), Fraction(6, 5))

    def test_second_divisor(self, split_six):
        f = factor_from_divisor(split_six, RealPoly((-3, -2, 1)))  # (t+1)(t-3)
        assert f.h2 == sq(1, 0, 0, 2)
        assert f.h1 == sq(1, 0, 1, 0)

    def test_hamilton_divisor(self, hamilton_two):
        f = factor_from_divisor(hamilton_two, RealPoly((5, -2, 1)))
        assert f.h2 == hq(1, 0, 0, 2)
        assert f.h1 == hq(1, 0, 1, 0)
        assert f.h2.norm() == 5

    def test_divisor_is_right_norm_quadratic(self, split_six):
        f = factor_from_divisor(split_six, RealPoly((0, -2, 1)))
        expected = monic_linear(f.h2).norm_polynomial()
        assert f.divisor == expected

    def test_non_linear_remainder_rejected(self):
        poly = parse_poly("t^2 + 1", SPLIT)
        with pytest.raises(NonGenericError):
            factor_from_divisor(poly, RealPoly((1, 0, 1)))  # C - M == 0


class TestAllFactorizations:
    def test_split_example_exactly_six(self, split_six):
        fs = all_factorizations(split_six)
        assert len(fs) == 6
        found = {(f.h1, f.h2) for f in fs}
        assert found == set(SPLIT_SIX_FACTORS)
        for f in fs:
            assert f.expand() == split_six

    def test_hamilton_example_exactly_two(self, hamilton_two):
        fs = all_factorizations(hamilton_two)
        assert len(fs) == 2
        assert {(f.h1, f.h2) for f in fs} == set(HAMILTON_TWO_FACTORS)

    def test_two_when_norm_has_complex_pair(self):
        for sig, mk in ((SPLIT, sq), (HAMILTON, hq)):
            poly = expand_pair(mk(0, 1, 0, 0), mk(0, 0, 0, 2))  # (t-i)(t-2k)
            fs = all_factorizations(poly)
            assert len(fs) == 2
            assert any((f.h1, f.h2) == (mk(0, 1, 0, 0), mk(0, 0, 0, 2)) for f in fs)

    def test_non_generic_raises_with_report(self):
        with pytest.raises(NonGenericError) as err:
            all_factorizations(parse_poly("t^2 + 1", SPLIT))
        assert err.value.report is not None
        assert not err.value.report.verdict

    def test_deterministic_order(self, split_six):
        first = [(str(f.h1), str(f.h2)) for f in all_factorizations(split_six)]
        second = [(str(f.h1), str(f.h2)) for f in all_factorizations(split_six)]
        assert first == second
        divisors = [f.divisor.coeffs for f in all_factorizations(split_six)]
        keys = [(float(c[1]), float(c[0])) for c in divisors]
        assert keys == sorted(keys)


class TestComplementary:
    def test_split_reference_pair(self, split_six):
        f = factor_from_divisor(split_six, RealPoly((-3, -2, 1)))  # (1+j, 1+2k)
        g = complementary(f, split_six)
        assert g.h1 == sq(1, 0, Fraction(8, 5), Fraction(6, 5))
        assert g.h2 == sq(1, 0, Fraction(-3, 5), Fraction(4, 5))
        assert g.expand() == split_six

    def test_hamilton_vector_pair(self):
        poly = expand_pair(hq(0, 1, 0, 0), hq(0, 0, 0, 2))
        f = next(
            f for f in all_factorizations(poly) if (f.h1, f.h2) == (hq(0, 1, 0, 0), hq(0, 0, 0, 2))
        )
        g = complementary(f, poly)
        assert g.h1 == hq(0, Fraction(8, 5), 0, Fraction(6, 5))
        assert g.h2 == hq(0, Fraction(-3, 5), 0, Fraction(4, 5))
        # symmetric functions agree with the original pair
        assert g.h1 + g.h2 == f.h1 + f.h2
        assert g.h1 * g.h2 == f.h1 * f.h2

    def test_involution_on_all_six(self, split_six):
        for f in all_factorizations(split_six):
            g = complementary(complementary(f, split_six), split_six)
            assert (g.h1, g.h2) == (f.h1, f.h2)

    def test_definition_product(self, split_six):
        norm = split_six.norm_polynomial()
        for f in all_factorizations(split_six):
            g = complementary(f, split_six)
            left = monic_linear(f.h1).norm_polynomial()
            right = monic_linear(g.h1).norm_polynomial()
            assert left * right == norm

    def test_divisors_relatively_prime(self, split_six):
        for f in all_factorizations(split_six):
            g = complementary(f, split_six)
            assert f.divisor.gcd(g.divisor).degree == 0

    def test_null_difference_rejected(self, split_six):
        # conj(h2) - h1 = i + j is a zero divisor: no complementary factorization
        from quatlink import Factorization, norm_quadratic

        h1 = sq(0, 1, 0, 0)
        h2 = sq(0, -2, -1, 0)
        bad = Factorization(h1=h1, h2=h2, divisor=norm_quadratic(h2))
        assert (h2.conjugate() - h1).norm() == 0
        with pytest.raises(NonGenericError):
            complementary(bad, split_six)


class TestLabels:
    def test_first_factorization_label(self, split_six):
        fs = all_factorizations(split_six)
        by_pair = {(f.h1, f.h2): f for f in fs}
        favorite = by_pair[(sq(1, 0, 1, 0), sq(1, 0, 0, 2))]
        assert favorite.label == frozenset({1, 4})

    def test_complementary_label_disjoint(self, split_six):
        fs = all_factorizations(split_six)
        for f in fs:
            g = complementary(f, split_six)
            assert g.label == frozenset({1, 2, 3, 4}) - f.label

    def test_all_six_two_subsets(self, split_six):
        fs = all_factorizations(split_six)
        labels = {tuple(sorted(f.label)) for f in fs}
        assert labels == {(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)}

    def test_label_factorizations_matches_divisors(self, split_six):
        fs = [f.__class__(f.h1, f.h2, f.divisor, None, f.exact) for f in all_factorizations(split_six)]
        roots = real_roots(split_six.norm_polynomial()).roots
        labeled = label_factorizations(fs, roots)
        for f in labeled:
            i, j = sorted(f.label)
            assert f.divisor == RealPoly.from_roots([roots[i - 1], roots[j - 1]])

    def test_absent_with_fewer_roots(self, hamilton_two):
        fs = all_factorizations(hamilton_two)
        assert all(f.label is None for f in fs)
        assert label_factorizations(fs, ()) == fs

    def test_pairs_by_divisor_product(self, hamilton_two):
        fs = all_factorizations(hamilton_two)
        pairs = complementary_pairs(fs, hamilton_two.norm_polynomial())
        assert pairs == [(0, 1)]

    def test_linked_pairs_share_exactly_one_index(self, split_six):
        fs = all_factorizations(split_six)
        for a in fs:
            for b in fs:
                if a is b:
                    continue
                shared = a.label & b.label
                assert len(shared) in (0, 1)
                assert a.linked_with(b) == bool(shared)


class TestCountLaw:
    @settings(max_examples=40, deadline=None)
    @given(split_quaternions, split_quaternions)
    def test_split_count_matches_root_structure(self, h1, h2):
        poly = expand_pair(h1, h2)
        try:
            fs = all_factorizations(poly)
        except NonGenericError:
            return
        n_real = len(real_roots(poly.norm_polynomial()).roots)
        assert len(fs) == (6 if n_real == 4 else 2)
        for f in fs:
            if f.exact:
                assert f.expand() == poly

    def test_divisor_enumeration_shapes(self, split_six, hamilton_two):
        divisors, _ = quadratic_divisors(split_six.norm_polynomial())
        assert len(divisors) == 6
        divisors, _ = quadratic_divisors(hamilton_two.norm_polynomial())
        assert len(divisors) == 2
