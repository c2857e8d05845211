"""Field tower arithmetic: table integrity, Frobenius, traces, the
Artin-Schreier solver and the canonical embeddings."""

import random

import pytest

from ffcft.finite_field import (artin_schreier_solve, embed, field,
                                field_of_order, format_element,
                                frobenius_power, norm_to, parse_element,
                                parse_field, trace_to, unembed)
from ffcft.errors import ParseError
from ffcft.tower_table import TOWER_POLY

F2 = field(2, 1)
F4 = field(2, 2)


def _prime_factors(m):
    out = set()
    d = 2
    while d * d <= m:
        while m % d == 0:
            out.add(d)
            m //= d
        d += 1
    if m > 1:
        out.add(m)
    return out


def _cyclotomic_factors(p, n):
    """Prime factors of p^n - 1 via the cyclotomic factor split, which
    keeps trial division cheap even for the largest table entries."""
    out = set()
    vals = {}
    for d in range(1, n + 1):
        if n % d:
            continue
        v = p ** d - 1
        for e in range(1, d):
            if d % e == 0:
                v //= vals[e]
        vals[d] = v
        out |= _prime_factors(v)
    return out


class TestTowerTable:
    def test_entries_cover_the_advertised_range(self):
        for p in (2, 3, 5, 7, 11, 13):
            for n in range(1, 13):
                assert (p, n) in TOWER_POLY
                f = TOWER_POLY[(p, n)]
                assert len(f) == n + 1 and f[-1] == 1

    @pytest.mark.parametrize("p,n", sorted(TOWER_POLY))
    def test_generator_is_primitive(self, p, n):
        spec = field(p, n)
        g = spec.gen
        order = spec.q - 1
        if order == 1:
            return
        for ell in _cyclotomic_factors(p, n):
            assert g ** (order // ell) != spec.one, (p, n, ell)

    @pytest.mark.parametrize("p,n", sorted(TOWER_POLY))
    def test_defining_polynomial_kills_the_generator(self, p, n):
        spec = field(p, n)
        acc = spec.zero
        power = spec.one
        for c in spec.poly:
            acc = acc + spec.element(c) * power
            power = power * spec.gen
        assert not acc

    @pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13])
    def test_tower_compatibility(self, p):
        # the canonical power of the big generator must be a root of the
        # small defining polynomial, for every divisor pair
        for n in range(1, 13):
            big = field(p, n)
            for m in range(1, n):
                if n % m:
                    continue
                eta = big.gen ** ((big.q - 1) // (p ** m - 1))
                acc = big.zero
                power = big.one
                for c in TOWER_POLY[(p, m)]:
                    acc = acc + big.element(c) * power
                    power = power * eta
                assert not acc, (p, m, n)


class TestArithmetic:
    def test_field_of_order_rejects_non_prime_powers(self):
        with pytest.raises(ValueError):
            field_of_order(6)
        with pytest.raises(ValueError):
            field_of_order(12)

    def test_axioms_exhaustive_gf8(self):
        F8 = field(2, 3)
        els = list(F8.elements())
        assert len(set(els)) == 8
        for a in els:
            for b in els:
                assert a + b == b + a
                assert a * b == b * a
                if b:
                    assert (a / b) * b == a
        for a in els:
            for b in els:
                for c in els:
                    assert a * (b + c) == a * b + a * c

    def test_inverse_sweep(self):
        for spec in (field(3, 2), field(5, 2), field(2, 6)):
            for a in spec.elements():
                if a:
                    assert a * a.inverse() == spec.one

    def test_pow_negative(self):
        g = F4.gen
        assert g ** -1 == g.inverse()
        assert g ** -3 == (g ** 3).inverse()


class TestFrobenius:
    def test_square_of_generator(self):
        g = F4.gen
        # oracle: direct multiplication
        assert frobenius_power(g, 1) == g * g
        assert g * g == g + 1  # g^2 + g + 1 = 0

    def test_order_divides_n(self):
        for spec in (F4, field(2, 6), field(3, 3), field(5, 2)):
            for a in list(spec.elements())[:20]:
                assert frobenius_power(a, spec.n) == a

    def test_zero_fixed(self):
        assert frobenius_power(F4.zero, 3) == F4.zero

    def test_negative_power_inverts(self):
        spec = field(3, 4)
        rng = random.Random(5)
        els = list(spec.elements())
        for _ in range(25):
            a = rng.choice(els)
            assert frobenius_power(frobenius_power(a, -1), 1) == a

    def test_is_additive_and_multiplicative_exhaustive(self):
        spec = field(2, 4)
        els = list(spec.elements())
        for a in els:
            for b in els:
                assert frobenius_power(a + b, 1) == frobenius_power(a, 1) + frobenius_power(b, 1)
                assert frobenius_power(a * b, 1) == frobenius_power(a, 1) * frobenius_power(b, 1)

    def test_fixes_exactly_the_prime_field(self):
        for spec in (field(2, 4), field(3, 2), field(5, 2)):
            fixed = [a for a in spec.elements() if frobenius_power(a, 1) == a]
            assert len(fixed) == spec.p


class TestTrace:
    def test_spec_examples(self):
        g = F4.gen
        assert trace_to(g, F2) == F2.one  # g + g^2 = 1
        assert trace_to(F4.one, F2) == F2.zero  # 1 + 1
        a = field(3, 2).gen
        assert trace_to(a, field(3, 2)) == a  # trace over itself

    def test_additive_and_onto(self):
        for spec, sub in [(field(2, 4), F2), (field(3, 2), field(3, 1)),
                          (field(2, 6), field(2, 2))]:
            els = list(spec.elements())
            rng = random.Random(7)
            for _ in range(30):
                a, b = rng.choice(els), rng.choice(els)
                assert trace_to(a + b, sub) == trace_to(a, sub) + trace_to(b, sub)
            image = {trace_to(a, sub) for a in els}
            assert image == set(sub.elements())

    def test_transitivity(self):
        F16 = field(2, 4)
        for a in F16.elements():
            assert trace_to(trace_to(a, F4), F2) == trace_to(a, F2)

    def test_degree_error(self):
        with pytest.raises(ValueError):
            trace_to(F4.gen, field(2, 3))

    def test_norm_matches_product_of_conjugates(self):
        F9 = field(3, 2)
        for a in F9.elements():
            if a:
                assert norm_to(a, field(3, 1)) == unembed(
                    a * frobenius_power(a, 1), field(3, 1))


class TestArtinSchreierSolve:
    def test_spec_examples(self):
        assert artin_schreier_solve(F2.one) is None  # Tr(1) = 1
        assert artin_schreier_solve(F4.zero) == F4.zero
        z = artin_schreier_solve(F4.one)
        assert z == F4.gen  # g^2 + g = 1 and g is lex-least

    @pytest.mark.parametrize("spec", [field(2, 3), field(2, 6), field(3, 2),
                                      field(5, 2), field(2, 12)])
    def test_solvable_iff_trace_zero(self, spec):
        prime = field(spec.p, 1)
        els = list(spec.elements())
        if spec.q > 1024:
            els = els[:500] + els[-500:]
        image = {(z ** spec.p - z) for z in els}
        for a in els:
            z = artin_schreier_solve(a)
            if trace_to(a, prime) == prime.zero:
                assert z is not None and z ** spec.p - z == a
            else:
                assert z is None
        for w in image:
            assert trace_to(w, prime) == prime.zero

    def test_lexicographic_tie_break(self):
        spec = field(3, 2)
        for a in spec.elements():
            z = artin_schreier_solve(a)
            if z is None:
                continue
            others = [z + spec.element(c) for c in range(spec.p)]
            assert z.coeffs == min(o.coeffs for o in others)


class TestEmbed:
    def test_spec_examples(self):
        F16 = field(2, 4)
        assert embed(F2.one, F4) == F4.one
        e = embed(F4.gen, F16)
        # oracle: the image must be a root of X^2 + X + 1
        assert not (e * e + e + F16.one)
        a = field(3, 2).gen
        assert embed(a, field(3, 2)) == a

    def test_tower_transitivity(self):
        F16, F256 = field(2, 4), field(2, 8)
        for a in F16.elements():
            assert embed(embed(a, F256), F256) == embed(a, F256)
        for a in F4.elements():
            assert embed(embed(a, F16), F256) == embed(a, F256)

    def test_ring_homomorphism(self):
        rng = random.Random(11)
        F27 = field(3, 3)
        F3e = field(3, 1)
        els = list(F3e.elements())
        for _ in range(20):
            a, b = rng.choice(els), rng.choice(els)
            assert embed(a + b, F27) == embed(a, F27) + embed(b, F27)
            assert embed(a * b, F27) == embed(a, F27) * embed(b, F27)

    def test_commutes_with_frobenius(self):
        F64 = field(2, 6)
        for a in F4.elements():
            assert embed(frobenius_power(a, 1), F64) == frobenius_power(embed(a, F64), 1)

    def test_unembed_roundtrip_and_rejection(self):
        F16 = field(2, 4)
        for a in F4.elements():
            assert unembed(embed(a, F16), F4) == a
        outside = next(a for a in F16.elements()
                       if frobenius_power(a, 2) != a)
        with pytest.raises(ValueError):
            unembed(outside, F4)

    def test_degree_error(self):
        with pytest.raises(ValueError):
            embed(F4.gen, field(2, 3))


class TestTextFormat:
    def test_roundtrip_exhaustive_small(self):
        for spec in (F2, F4, field(3, 2), field(2, 4), field(5, 1)):
            for a in spec.elements():
                assert parse_element(format_element(a), spec) == a

    def test_examples(self):
        assert parse_field("GF(4)") == F4
        assert format_element(F4.gen ** 2) == "g+1"
        assert parse_element("g^2+g+1", F4) == F4.zero
        assert parse_element("2*g+1", field(3, 2)).coeffs == (1, 2)

    def test_errors(self):
        with pytest.raises(ParseError):
            parse_field("GF(6)")
        with pytest.raises(ParseError):
            parse_element("h+1", F4)
        with pytest.raises(ParseError):
            parse_element("g", F2)
        with pytest.raises(ParseError):
            parse_element("", F4)
