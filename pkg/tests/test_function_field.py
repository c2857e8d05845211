"""The global field GF(q)(T): valuations, divisors, place enumeration,
local expansions and Riemann-Roch bases on the projective line."""

import random

import pytest

from ffcft.errors import ParseError
from ffcft.finite_field import field, embed
from ffcft.function_field import (Divisor, Place, Poly, RationalFunction,
                                  divisor_of, dt_over_dtP, factor,
                                  format_poly, format_rational,
                                  is_irreducible, local_expand,
                                  local_expand_root, monic_irreducibles,
                                  parse_place, parse_poly, parse_rational,
                                  place_lift, place_root,
                                  places_up_to_degree, residue_value,
                                  riemann_roch_basis, valuation_at)
from ffcft.laurent_series import LaurentSeries

F2 = field(2, 1)
F3 = field(3, 1)
F4 = field(2, 2)


def rand_rational(rng, spec, deg):
    elems = list(spec.elements())
    while True:
        num = Poly(spec, [rng.choice(elems) for _ in range(rng.randrange(1, deg + 2))])
        den = Poly(spec, [rng.choice(elems) for _ in range(rng.randrange(1, deg + 2))])
        if num.is_zero or den.is_zero:
            continue
        return RationalFunction(num, den)


class TestPolynomials:
    def test_divmod_and_gcd(self):
        rng = random.Random(1)
        for _ in range(40):
            a = rand_rational(rng, F3, 4).num
            b = rand_rational(rng, F3, 3).num
            q, r = divmod(a, b)
            assert q * b + r == a
            assert r.is_zero or r.degree < b.degree
            g = a.gcd(b)
            assert (a % g).is_zero and (b % g).is_zero

    def test_factor_reassembles(self):
        rng = random.Random(2)
        for spec in (F2, F3, F4):
            for _ in range(20):
                f = rand_rational(rng, spec, 5).num
                fac = factor(f)
                prod = Poly.constant(f.leading)
                for g, m in fac.items():
                    assert is_irreducible(g) and g.is_monic
                    prod = prod * g ** m
                assert prod == f

    def test_derivative_leibniz(self):
        rng = random.Random(3)
        for _ in range(30):
            a = rand_rational(rng, F3, 4).num
            b = rand_rational(rng, F3, 4).num
            assert (a * b).derivative() == a.derivative() * b + a * b.derivative()


class TestValuation:
    def test_spec_examples(self):
        T = Poly.T(F2)
        x = RationalFunction(T * T, T + 1)
        assert valuation_at(x, Place.finite(T)) == 2
        assert valuation_at(x, Place.infinity(F2)) == -1
        c = RationalFunction.constant(F4.gen)
        for P in places_up_to_degree(F4, 2):
            assert valuation_at(c, P) == 0

    def test_multiplicative(self):
        rng = random.Random(4)
        P = Place.finite(parse_poly("T^2+T+1", F2))
        for _ in range(30):
            x, y = rand_rational(rng, F2, 4), rand_rational(rng, F2, 4)
            assert valuation_at(x * y, P) == valuation_at(x, P) + valuation_at(y, P)

    def test_ultrametric(self):
        rng = random.Random(5)
        for _ in range(60):
            x, y = rand_rational(rng, F3, 3), rand_rational(rng, F3, 3)
            if (x + y).is_zero:
                continue
            P = Place.finite(Poly.T(F3))
            vx, vy = valuation_at(x, P), valuation_at(y, P)
            v = valuation_at(x + y, P)
            assert v >= min(vx, vy)
            if vx != vy:
                assert v == min(vx, vy)

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            valuation_at(RationalFunction.zero(F2), Place.infinity(F2))


class TestDivisors:
    def test_spec_examples(self):
        T = Poly.T(F2)
        d = divisor_of(RationalFunction(T, T + Poly.one(F2)))
        assert d.coefficient(Place.finite(T)) == 1
        assert d.coefficient(Place.finite(T + Poly.one(F2))) == -1
        assert d.degree == 0
        assert not divisor_of(RationalFunction.one(F2))
        f = parse_poly("T^2+T+1", F2)
        d2 = divisor_of(RationalFunction(f))
        assert d2.coefficient(Place.finite(f)) == 1
        assert d2.coefficient(Place.infinity(F2)) == -2

    def test_homomorphism(self):
        rng = random.Random(6)
        for _ in range(25):
            x, y = rand_rational(rng, F4, 3), rand_rational(rng, F4, 3)
            if (x * y).is_zero:
                continue
            assert divisor_of(x * y) == divisor_of(x) + divisor_of(y)

    def test_product_formula_random(self):
        rng = random.Random(7)
        for spec in (F2, F3, F4):
            for _ in range(60):
                assert divisor_of(rand_rational(rng, spec, 6)).degree == 0


def necklace_count(q, d):
    def mu(m):
        out, k = 1, 2
        while k * k <= m:
            if m % k == 0:
                m //= k
                if m % k == 0:
                    return 0
                out = -out
            k += 1
        if m > 1:
            out = -out
        return out
    return sum(mu(d // e) * q ** e for e in range(1, d + 1) if d % e == 0) // d


class TestPlaces:
    def test_spec_examples(self):
        pl = places_up_to_degree(F2, 1)
        assert [str(P) for P in pl] == ["inf", "T", "T+1"]
        pl2 = places_up_to_degree(F2, 2)
        assert [str(P) for P in pl2] == ["inf", "T", "T+1", "T^2+T+1"]
        assert len(places_up_to_degree(F3, 1)) == 4

    @pytest.mark.parametrize("q,spec", [(2, F2), (3, F3), (4, F4)])
    def test_counts_match_necklace_formula(self, q, spec):
        for d in range(1, 5):
            assert len(monic_irreducibles(spec, d)) == necklace_count(q, d)

    def test_ordering_is_infinity_then_degree_lex(self):
        pl = places_up_to_degree(F3, 2)
        assert pl[0].is_infinite
        degs = [P.degree for P in pl[1:]]
        assert degs == sorted(degs)

    def test_residue_field_and_root(self):
        f = parse_poly("T^2+T+1", F2)
        P = Place.finite(f)
        assert P.residue_field() == F4
        alpha = place_root(P)
        assert not f.evaluate(alpha)


class TestLocalExpansion:
    def test_spec_examples(self):
        T = Poly.T(F2)
        PT = Place.finite(T)
        e = local_expand(parse_rational("1/(1+T)", F2), PT, 4)
        assert [e.coefficient(i) for i in range(4)] == [F2.one] * 4
        assert e.prec == 4
        assert local_expand(RationalFunction(T), PT, 7) == LaurentSeries.t_power(F2, 1)
        assert local_expand(RationalFunction(T), Place.infinity(F2), 3) == \
            LaurentSeries.t_power(F2, -1)

    def test_valuation_agrees(self):
        rng = random.Random(8)
        for spec in (F2, F3):
            for P in places_up_to_degree(spec, 2):
                for _ in range(10):
                    x = rand_rational(rng, spec, 3)
                    assert local_expand(x, P, 3).valuation() == valuation_at(x, P)
                    assert local_expand_root(x, P, 3).valuation() == valuation_at(x, P)

    def test_product_with_inverse(self):
        rng = random.Random(9)
        for P in places_up_to_degree(F2, 3)[1:]:
            for _ in range(8):
                x = rand_rational(rng, F2, 3)
                prod = local_expand(x, P, 5) * local_expand(1 / x, P, 5)
                assert prod.coefficient(0) == P.residue_field().one
                for i in range(1, 3):
                    assert not prod.coefficient(i)

    def test_canonical_expansion_reassembles(self):
        # independent check: lift the coefficients back to polynomials and
        # compare with x modulo f^N (catches wrong Laurent coefficients at
        # higher-degree places)
        rng = random.Random(10)
        for spec in (F2, F3):
            f = monic_irreducibles(spec, 2)[0]
            P = Place.finite(f)
            for _ in range(10):
                x = rand_rational(rng, spec, 4)
                N = 4
                e = local_expand(x, P, N)
                v = e.valuation()
                acc = RationalFunction.zero(spec)
                fp = RationalFunction(f)
                for i in range(v, v + N):
                    acc = acc + RationalFunction(place_lift(e.coefficient(i), P)) * fp ** i
                diff = x - acc
                if not diff.is_zero:
                    assert valuation_at(diff, P) >= v + N

    def test_root_expansion_constant_term_is_the_value(self):
        rng = random.Random(11)
        P = Place.finite(parse_poly("T^2+T+1", F2))
        for _ in range(15):
            x = rand_rational(rng, F2, 3)
            if valuation_at(x, P) != 0:
                continue
            assert local_expand_root(x, P, 2).coefficient(0) == residue_value(x, P)

    def test_exactness_detection(self):
        T = Poly.T(F3)
        e = local_expand(RationalFunction(T ** 3 + T), Place.finite(T), 9)
        assert e.is_exact
        e2 = local_expand(RationalFunction(Poly.one(F3), T), Place.infinity(F3), 3)
        assert e2.is_exact and e2 == LaurentSeries.t_power(F3, 1)

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            local_expand(RationalFunction.zero(F2), Place.infinity(F2), 3)


class TestDtOverDtP:
    def test_spec_examples(self):
        assert dt_over_dtP(Place.finite(Poly.T(F2)), 4) == LaurentSeries.one(F2)
        di = dt_over_dtP(Place.infinity(F2))
        assert di == LaurentSeries.t_power(F2, -2, -F2.one)
        P = Place.finite(parse_poly("T^2+T+1", F2))
        d3 = dt_over_dtP(P, 3)
        assert d3.coefficient(0) == P.residue_field().one

    def test_unit_at_finite_places(self):
        for spec in (F2, F3):
            for P in places_up_to_degree(spec, 3)[1:]:
                assert dt_over_dtP(P, 2).valuation() == 0


class TestRiemannRoch:
    def test_spec_examples(self):
        D = Divisor({Place.infinity(F2): 2})
        basis = riemann_roch_basis(D)
        assert [format_rational(b) for b in basis] == ["1", "T", "T^2"]
        assert [format_rational(b) for b in riemann_roch_basis(Divisor({}), F2)] == ["1"]
        DT = Divisor({Place.finite(Poly.T(F2)): 1})
        assert len(riemann_roch_basis(DT)) == 2

    def test_dimension_formula(self):
        rng = random.Random(12)
        places = places_up_to_degree(F3, 2)
        for _ in range(25):
            data = {P: rng.randrange(-2, 3) for P in rng.sample(places, 2)}
            D = Divisor(data)
            dim = len(riemann_roch_basis(D, F3))
            assert dim == max(0, D.degree + 1)

    def test_members_satisfy_the_constraint(self):
        rng = random.Random(13)
        places = places_up_to_degree(F2, 2)
        for _ in range(20):
            data = {P: rng.randrange(-1, 3) for P in rng.sample(places, 2)}
            D = Divisor(data)
            for b in riemann_roch_basis(D, F2):
                assert (divisor_of(b) + D).is_effective()

    def test_degree_zero_divisors_are_principal(self):
        # class number one: the one-dimensional space certifies it
        rng = random.Random(14)
        places = places_up_to_degree(F3, 3)
        for _ in range(20):
            chosen = rng.sample(places, 3)
            coeffs = [rng.choice([-2, -1, 1, 2]) for _ in chosen]
            total = sum(c * P.degree for c, P in zip(coeffs, chosen))
            data = dict(zip(chosen, coeffs))
            Pinf = Place.infinity(F3)
            data[Pinf] = data.get(Pinf, 0) - total
            D = Divisor(data)
            if not D:
                continue
            basis = riemann_roch_basis(D, F3)
            assert len(basis) == 1
            assert divisor_of(basis[0]) == -1 * D


class TestTextFormats:
    def test_rational_roundtrip(self):
        rng = random.Random(15)
        for spec in (F2, F4, F3):
            for _ in range(25):
                x = rand_rational(rng, spec, 4)
                assert parse_rational(format_rational(x), spec) == x

    def test_spec_examples(self):
        x = parse_rational("(T^2+T+1)/(T+1)", F2)
        assert format_rational(x) == "(T^2+T+1)/(T+1)"
        assert parse_place("inf", F2).is_infinite
        assert parse_place("T^2+T+1", F2) == Place.finite(parse_poly("T^2+T+1", F2))
        assert format_poly(parse_poly("g*T^2+1", F4)) == "g*T^2+1"

    def test_errors(self):
        with pytest.raises(ParseError):
            parse_place("T^2+1", F2)  # (T+1)^2: not irreducible
        with pytest.raises(ParseError):
            parse_rational("T//T", F2)
        with pytest.raises(ParseError):
            parse_rational("1/0", F2)
        with pytest.raises(ParseError):
            parse_poly("T^-1", F2)
