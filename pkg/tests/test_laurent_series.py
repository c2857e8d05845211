"""Truncated Laurent series: precision rules, residues, change of prime,
the logarithmic-derivative operator and reduction modulo wp-values."""

import itertools
import random

import pytest

from ffcft.errors import ParseError, PrecisionError
from ffcft.finite_field import field, frobenius_power, trace_to
from ffcft.laurent_series import (INF, LaurentSeries, WpStatus, derivative,
                                  format_series, log_derivative_order,
                                  parse_series, recompose_in_prime,
                                  reduce_mod_wp, residue, substitute, wp)

F2 = field(2, 1)
F3 = field(3, 1)
F4 = field(2, 2)


def t(spec, k=1, c=None):
    return LaurentSeries.t_power(spec, k, c)


def rand_series(rng, spec, lo=-3, terms=5, prec=None):
    shift = rng.randrange(lo, 2)
    coeffs = [rng.choice(list(spec.elements())) for _ in range(terms)]
    return LaurentSeries(spec, shift, coeffs, prec)


class TestArithmeticAndPrecision:
    def test_normalisation(self):
        s = LaurentSeries(F2, 0, [F2.zero, F2.one, F2.zero], INF)
        assert s.shift == 1 and s.coeffs == (F2.one,)
        z = LaurentSeries(F2, 3, [], 5)
        assert z.known_zero and z.prec == 5 and not z.is_exact_zero

    def test_add_precision_is_min(self):
        a = LaurentSeries(F2, 0, [F2.one], 3)
        b = LaurentSeries(F2, 0, [F2.one], 5)
        assert (a + b).prec == 3

    def test_mul_precision_rule(self):
        # unknown tail of one factor meets the valuation of the other
        a = LaurentSeries(F2, 1, [F2.one, F2.one], 4)
        b = LaurentSeries(F2, -2, [F2.one], 2)
        assert (a * b).prec == min(1 + 2, -2 + 4)

    def test_mul_with_exact(self):
        a = LaurentSeries(F2, 0, [F2.one, F2.one], 3)
        assert (a * t(F2, 2)).prec == 5

    def test_pth_power_dilates_precision(self):
        a = LaurentSeries(F3, 1, [F3.one, F3.element(2)], 3)
        cube = a.pth_power()
        assert cube.prec == 9
        assert cube.coefficient(3) == F3.one
        assert cube.coefficient(6) == frobenius_power(F3.element(2), 1)
        assert not cube.coefficient(4)

    def test_invert_requires_precision_for_exact(self):
        u = LaurentSeries(F2, 0, [F2.one, F2.one], INF)
        with pytest.raises(ValueError):
            u.invert()
        inv = u.invert(4)
        assert (u * inv).coefficient(0) == F2.one
        assert all(not (u * inv).coefficient(i) for i in range(1, 3))

    def test_invert_exact_monomial_is_exact(self):
        m = t(F3, -2, F3.element(2))
        inv = m.invert()
        assert inv.is_exact and (m * inv) == LaurentSeries.one(F3)

    def test_division_roundtrip_truncated(self):
        rng = random.Random(3)
        for _ in range(25):
            x = rand_series(rng, F4, prec=4)
            if x.known_zero:
                continue
            y = (x / x)
            assert y.coefficient(0) == F4.one

    def test_zero_division(self):
        with pytest.raises(ZeroDivisionError):
            LaurentSeries.zero(F2).invert()
        with pytest.raises(PrecisionError):
            LaurentSeries.zero(F2, 3).invert()

    def test_valuation_errors(self):
        with pytest.raises(ValueError):
            LaurentSeries.zero(F2).valuation()
        with pytest.raises(PrecisionError):
            LaurentSeries.zero(F2, 2).valuation()

    def test_coefficient_precision_guard(self):
        a = LaurentSeries(F2, 0, [F2.one], 2)
        assert not a.coefficient(1)
        with pytest.raises(PrecisionError):
            a.coefficient(2)

    def test_hypothesis_style_ring_laws(self):
        rng = random.Random(9)
        for _ in range(60):
            a = rand_series(rng, F4, prec=rng.choice([None, 4]))
            b = rand_series(rng, F4, prec=rng.choice([None, 5]))
            c = rand_series(rng, F4)
            lhs = (a + b) * c
            rhs = a * c + b * c
            hi = min(x for x in (lhs.prec, rhs.prec, 6) if x is not None)
            lo = min(lhs.shift, rhs.shift)
            for i in range(lo, hi):
                assert lhs.coefficient(i) == rhs.coefficient(i)


class TestDerivative:
    def test_spec_examples(self):
        assert (t(F2) * t(F2)).derivative().is_exact_zero
        assert LaurentSeries.constant(F4.gen).derivative().is_exact_zero
        assert t(F2, -1).derivative() == t(F2, -2)

    def test_precision_drop(self):
        a = LaurentSeries(F3, 0, [F3.one, F3.one], 4)
        assert a.derivative().prec == 3

    def test_leibniz(self):
        rng = random.Random(1)
        for _ in range(40):
            x = rand_series(rng, F3)
            y = rand_series(rng, F3)
            lhs = (x * y).derivative()
            rhs = x.derivative() * y + x * y.derivative()
            assert lhs == rhs

    def test_dp_is_zero(self):
        rng = random.Random(2)
        for spec in (F2, F3, field(5, 1), F4):
            for _ in range(20):
                z = rand_series(rng, spec)
                for _ in range(spec.p):
                    z = z.derivative()
                assert z.is_exact_zero


class TestResidue:
    def test_spec_examples(self):
        assert residue(t(F2, -1), t(F2)) == F2.one
        assert residue(t(F2, -2), t(F2) ** 3) == F2.zero
        x = LaurentSeries.from_terms(F3, {-1: 1, 0: 1})
        assert residue(x, t(F3, 2)) == F3.zero

    def test_exact_differentials_have_no_residue(self):
        rng = random.Random(4)
        one = LaurentSeries.one(F4)
        for _ in range(30):
            y = rand_series(rng, F4)
            assert residue(one, y) == F4.zero

    def test_alternating_instance(self):
        # res(x dx) = 0 in odd characteristic for these shapes
        x = LaurentSeries.from_terms(F3, {-1: 1, 2: 2})
        assert residue(x, x) == F3.zero

    def test_insufficient_precision(self):
        x = LaurentSeries(F2, -3, [F2.one], -1)
        with pytest.raises(PrecisionError):
            residue(x, t(F2))


class TestRecompose:
    def test_identity_prime(self):
        x = LaurentSeries.from_terms(F4, {-2: F4.gen, 1: 1})
        assert recompose_in_prime(x, t(F4)) is x

    def test_scalar_prime(self):
        c = F3.element(2)
        out = recompose_in_prime(t(F3), t(F3, 1, c), rel_prec=5)
        assert out.coefficient(1) == c.inverse()
        assert all(not out.coefficient(i) for i in range(2, 4))

    def test_residue_invariance_spec_example(self):
        u = LaurentSeries.from_terms(F2, {1: 1, 2: 1})
        xt = recompose_in_prime(t(F2, -1), u, rel_prec=8)
        yt = recompose_in_prime(t(F2, 1), u, rel_prec=8)
        assert residue(xt, yt) == F2.one

    @pytest.mark.parametrize("spec", [F2, F3, F4])
    def test_residue_invariance_random(self, spec):
        rng = random.Random(spec.q)
        for _ in range(50):
            x = rand_series(rng, spec, lo=-2, terms=4)
            y = rand_series(rng, spec, lo=-2, terms=4)
            if x.known_zero or y.known_zero:
                continue
            direct = residue(x, y)
            # a random new prime element: valuation 1, unit leading term
            units = [c for c in spec.elements() if c]
            u = LaurentSeries(spec, 1,
                              [rng.choice(units)]
                              + [rng.choice(list(spec.elements())) for _ in range(3)],
                              INF)
            xt = recompose_in_prime(x, u, rel_prec=14)
            yt = recompose_in_prime(y, u, rel_prec=14)
            assert residue(xt, yt) == direct

    def test_roundtrip_through_reversion(self):
        rng = random.Random(17)
        for _ in range(20):
            x = rand_series(rng, F3, lo=-2, terms=4)
            if x.known_zero:
                continue
            u = LaurentSeries(F3, 1, [F3.one, rng.choice(list(F3.elements()))], INF)
            xt = recompose_in_prime(x, u, rel_prec=12)
            # substituting u back must reproduce x on the overlap
            back = substitute(xt, u, rel_prec=12)
            hi = back.prec if back.prec is not INF else x.shift + 4
            for i in range(x.shift, min(hi, x.shift + 4)):
                assert back.coefficient(i) == x.coefficient(i)

    def test_rejects_non_prime(self):
        with pytest.raises(ValueError):
            recompose_in_prime(t(F2), t(F2, 2), rel_prec=4)


class TestLogDerivativeOrder:
    def test_spec_examples(self):
        assert log_derivative_order(LaurentSeries.zero(F2)) == 1
        assert log_derivative_order(t(F2, -1)) == 2
        for spec in (F2, F3, field(5, 1)):
            assert log_derivative_order(LaurentSeries.one(spec)) is None

    @pytest.mark.parametrize("spec", [F2, F3, field(5, 1)])
    def test_monomials_and_polynomials_both_directions(self, spec):
        p = spec.p
        rng = random.Random(p)
        cases = [t(spec, m) for m in range(1, 2 * p + 1)]
        for _ in range(20):
            y = rand_series(rng, spec, lo=0, terms=4)
            if not y.known_zero:
                cases.append(y)
        for y in cases:
            expect = None
            z = y
            for k in range(1, p + 1):
                z = z.derivative()
                if z.is_exact_zero:
                    expect = k
                    break
            assert expect is not None  # D^p = 0
            x = y.derivative() * y.invert(3 * p + 6)
            assert log_derivative_order(x) == expect

    def test_additivity_of_log_derivative(self):
        rng = random.Random(23)
        for _ in range(25):
            x = rand_series(rng, F3, lo=-1, terms=3)
            y = rand_series(rng, F3, lo=-1, terms=3)
            if x.known_zero or y.known_zero:
                continue
            rel = 12
            dx = x.derivative() * x.invert(rel)
            dy = y.derivative() * y.invert(rel)
            dxy = (x * y).derivative() * (x * y).invert(rel)
            diff = dxy - dx - dy
            assert diff.known_zero

    def test_insufficient_precision(self):
        x = LaurentSeries(F3, -1, [F3.one], 0)
        with pytest.raises(PrecisionError):
            log_derivative_order(x)


def brute_force_wp_solvable(x):
    """Independent coefficient-wise decision of x in wp(K_P) for an exact
    Laurent polynomial x.

    A solution w must have valuation v/p, its deep pole part is forced by
    p-th roots, the rest of the pole part is a rigid descending recursion
    (with consistency constraints where the two overlap), the constant
    seed comes from the residue equation, and the positive part always
    extends."""
    spec = x.field
    p = spec.p
    if x.known_zero:
        return True
    v = x.valuation()
    if v >= 0:
        u = 0
    else:
        if v % p:
            return False
        u = v // p
    w = {}
    for k in range(v, u):
        if k % p == 0:
            w[k // p] = frobenius_power(x.coefficient(k), spec.n - 1)
        elif x.coefficient(k):
            return False
    for k in range(-1, u - 1, -1):
        r = spec.zero
        if k % p == 0:
            r = frobenius_power(w.get(k // p, spec.zero), 1)
        r = r - x.coefficient(k)
        if k in w and w[k] != r:
            return False
        w[k] = r
    return any(seed ** p - seed == x.coefficient(0)
               for seed in spec.elements())


class TestReduceModWp:
    def test_spec_examples(self):
        red = reduce_mod_wp(t(F2))
        assert red.status == WpStatus.IN_WP
        for k in (1, 2, 4):
            assert red.witness.coefficient(k) == F2.one
        red = reduce_mod_wp(LaurentSeries.one(F2))
        assert red.status == WpStatus.UNIT_OBSTRUCTION
        assert red.reduced == LaurentSeries.one(F2)
        red = reduce_mod_wp(t(F2, -2))
        assert red.status == WpStatus.POLE_OBSTRUCTION
        assert red.reduced == t(F2, -1)

    def test_witness_certifies_the_reduction(self):
        rng = random.Random(31)
        for spec in (F2, F3, F4):
            for _ in range(40):
                x = rand_series(rng, spec, lo=-4, terms=5)
                red = reduce_mod_wp(x, work_prec=8)
                diff = x - wp(red.witness) - red.reduced
                assert diff.known_zero

    @pytest.mark.parametrize("spec", [F2, F4, field(2, 4), F3])
    def test_in_wp_matches_brute_force(self, spec):
        # exhaustive over small windows: integral plus pole shapes
        elems = list(spec.elements())
        repeat = {2: 5, 3: 4, 4: 3, 16: 2}[spec.q]
        for coeffs in itertools.product(elems, repeat=repeat):
            for shift in (0, -spec.p, -2 * spec.p + 1):
                x = LaurentSeries(spec, shift, coeffs, INF)
                got = reduce_mod_wp(x, work_prec=12).status == WpStatus.IN_WP
                want = brute_force_wp_solvable(x)
                assert got == want, (x,)

    def test_wp_values_reduce_to_zero(self):
        rng = random.Random(37)
        for _ in range(30):
            z = rand_series(rng, F3, lo=-2, terms=4)
            red = reduce_mod_wp(wp(z), work_prec=10)
            assert red.status == WpStatus.IN_WP

    def test_pole_obstruction_decided_without_constant_term(self):
        # pole order prime to p settles the status before the constant
        # term is ever needed
        x = LaurentSeries(F2, -1, [F2.one], 0)
        assert reduce_mod_wp(x).status == WpStatus.POLE_OBSTRUCTION

    def test_insufficient_precision(self):
        # after clearing the order-2 pole nothing else is determined
        x = LaurentSeries(F2, -2, [F2.one], -1)
        with pytest.raises(PrecisionError):
            reduce_mod_wp(x)


class TestTextFormat:
    def test_spec_example(self):
        s = parse_series("t^-2 + 1 + g*t^3 + O(t^5)", F4)
        assert s.shift == -2 and s.prec == 5
        assert format_series(s) == "t^-2 + 1 + g*t^3 + O(t^5)"

    def test_roundtrip_random(self):
        rng = random.Random(41)
        for spec in (F2, F4, field(3, 2)):
            for _ in range(30):
                x = rand_series(rng, spec, prec=rng.choice([None, 4]))
                assert parse_series(format_series(x), spec) == x

    def test_errors(self):
        with pytest.raises(ParseError):
            parse_series("t^", F2)
        with pytest.raises(ParseError):
            parse_series("1 + O(t^2) + O(t^3)", F2)
        with pytest.raises(ParseError):
            parse_series("", F2)
