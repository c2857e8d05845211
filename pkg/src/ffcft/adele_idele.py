"""Ideles and adeles of GF(q)(T), norms from constant-field extensions,
and the residue functional on adeles.

An idele is stored as a global rational factor times finitely many local
corrections; principal ideles are therefore exact.  Downstream statements
about idele classes are always evaluated through characters (degree, the
pairings, the symbols), never by deciding equality in the class group, so
this representation loses nothing.  The fixed infinite-order factor of the
class group is generated by the prime T at the place (T).
"""

from __future__ import annotations

import functools
import json
from math import gcd

from .errors import ParseError
from .finite_field import (ExtFieldElem, FieldSpec, embed, field,
                           frobenius_power, trace_to, unembed)
from .function_field import (Place, Poly, RationalFunction, divisor_of,
                             format_rational, local_expand, local_expand_root,
                             parse_place, parse_rational, place_root,
                             root_prime_series, valuation_at)
from .laurent_series import (INF, LaurentSeries, format_series, parse_series,
                             recompose_in_prime, substitute)


def _is_series(v):
    return isinstance(v, LaurentSeries)


def _expander(prime: str):
    if prime == "canonical":
        return local_expand
    if prime == "root":
        return local_expand_root
    raise ValueError("prime must be 'canonical' or 'root'")


def _series_in_prime(series: LaurentSeries, P: Place, prime: str) -> LaurentSeries:
    """A series correction is stored in the canonical prime; rewrite it in
    the root prime when asked (they coincide at degree-1 places and at
    infinity)."""
    if prime == "canonical" or P.is_infinite or P.degree == 1:
        return series
    return substitute(series, root_prime_series(P))


class Idele:
    """An idele: rational_part * corrections, componentwise.

    The component at P is rational_part * corrections.get(P, 1); correction
    values are nonzero rational functions (exact) or Laurent series over
    the residue field of their place (truncated)."""

    def __init__(self, spec: FieldSpec, rational_part: RationalFunction | None = None,
                 corrections: dict | None = None):
        self.field = spec
        self.rational_part = (RationalFunction.one(spec)
                              if rational_part is None else rational_part)
        if self.rational_part.is_zero:
            raise ValueError("idele components must be nonzero")
        if self.rational_part.field != spec:
            raise ValueError("rational part over the wrong field")
        corr = {}
        for P, v in (corrections or {}).items():
            if P.field != spec:
                raise ValueError(f"correction at a place of the wrong field: {P}")
            if _is_series(v):
                if v.field != P.residue_field():
                    raise ValueError(
                        f"series correction at {P} must live over {P.residue_field()!r}")
                if v.known_zero:
                    raise ValueError("idele components must be nonzero")
                corr[P] = v
            else:
                if isinstance(v, Poly):
                    v = RationalFunction(v)
                if v.is_zero:
                    raise ValueError("idele components must be nonzero")
                if v.field != spec:
                    raise ValueError("correction over the wrong field")
                if v != RationalFunction.one(spec):
                    corr[P] = v
        self.corrections = corr

    # -- constructors ---------------------------------------------------

    @staticmethod
    def one(spec):
        return Idele(spec)

    @staticmethod
    def principal(x: RationalFunction):
        return Idele(x.field, x)

    @staticmethod
    def local(P: Place, value):
        """The idele [value]_P: value at P, 1 everywhere else."""
        return Idele(P.field, None, {P: value})

    @staticmethod
    def prime_at(P: Place):
        """[t_P]_P for the canonical prime element of P."""
        if P.is_infinite:
            t = RationalFunction(Poly.one(P.field), Poly.T(P.field))
        else:
            t = RationalFunction(P.poly)
        return Idele.local(P, t)

    # -- structure ------------------------------------------------------

    def support(self):
        places = set(self.corrections)
        if self.rational_part != RationalFunction.one(self.field):
            places.update(divisor_of(self.rational_part).support())
        return sorted(places, key=Place.sort_key)

    def valuation_at(self, P: Place) -> int:
        v = 0
        if not self.rational_part.is_zero:
            v += valuation_at(self.rational_part, P)
        c = self.corrections.get(P)
        if c is not None:
            v += c.valuation() if _is_series(c) else valuation_at(c, P)
        return v

    def local_series(self, P: Place, abs_prec: int = 8,
                     prime: str = "canonical") -> LaurentSeries:
        """The component at P expanded in the requested prime element.

        Exact inputs come out known at least through t^(abs_prec - 1);
        truncated series corrections contribute their own knowledge."""
        expand = _expander(prime)
        v_rat = valuation_at(self.rational_part, P)
        c = self.corrections.get(P)
        if c is None:
            return expand(self.rational_part, P, max(1, abs_prec - v_rat))
        if _is_series(c):
            cs = _series_in_prime(c, P, prime)
            v_c = c.valuation()
            cap = (cs.prec - v_c) if cs.prec is not INF else abs_prec - v_rat - v_c
            rel = max(1, abs_prec - v_rat - v_c, cap)
        else:
            v_c = valuation_at(c, P)
            rel = max(1, abs_prec - v_rat - v_c)
            cs = expand(c, P, rel)
        return expand(self.rational_part, P, max(1, rel)) * cs

    def __mul__(self, other: "Idele") -> "Idele":
        if not isinstance(other, Idele):
            return NotImplemented
        if other.field != self.field:
            raise ValueError("mixed base fields")
        corr = dict(self.corrections)
        for P, v in other.corrections.items():
            if P not in corr:
                corr[P] = v
            else:
                corr[P] = _mul_local(corr[P], v, P)
        return Idele(self.field, self.rational_part * other.rational_part, corr)

    def __pow__(self, k: int) -> "Idele":
        corr = {}
        for P, v in self.corrections.items():
            corr[P] = v ** k if _is_series(v) else v ** k
        return Idele(self.field, self.rational_part ** k, corr)

    def __eq__(self, other):
        return (isinstance(other, Idele) and self.field == other.field
                and self.rational_part == other.rational_part
                and self.corrections == other.corrections)

    def __repr__(self):
        return format_idele(self)


def _mul_local(a, b, P: Place):
    """Multiply two local correction values at P."""
    if _is_series(a) or _is_series(b):
        sa = a if _is_series(a) else local_expand(a, P, _match_prec(b))
        sb = b if _is_series(b) else local_expand(b, P, _match_prec(a))
        return sa * sb
    return a * b


def _match_prec(series, default=8):
    if _is_series(series) and series.prec is not INF:
        return max(1, series.prec - series.shift)
    return default


class Adele:
    """An adele: rational_part + corrections, componentwise additive."""

    def __init__(self, spec: FieldSpec, rational_part: RationalFunction | None = None,
                 corrections: dict | None = None):
        self.field = spec
        self.rational_part = (RationalFunction.zero(spec)
                              if rational_part is None else rational_part)
        if self.rational_part.field != spec:
            raise ValueError("rational part over the wrong field")
        corr = {}
        for P, v in (corrections or {}).items():
            if P.field != spec:
                raise ValueError(f"correction at a place of the wrong field: {P}")
            if _is_series(v):
                if v.field != P.residue_field():
                    raise ValueError(
                        f"series correction at {P} must live over {P.residue_field()!r}")
                corr[P] = v
            else:
                if isinstance(v, Poly):
                    v = RationalFunction(v)
                if v.field != spec:
                    raise ValueError("correction over the wrong field")
                if not v.is_zero:
                    corr[P] = v
        self.corrections = corr

    @staticmethod
    def principal(x: RationalFunction):
        return Adele(x.field, x)

    @staticmethod
    def local(P: Place, value):
        return Adele(P.field, None, {P: value})

    def local_series(self, P: Place, abs_prec: int = 8,
                     prime: str = "canonical") -> LaurentSeries:
        expand = _expander(prime)
        c = self.corrections.get(P)
        parts = []
        if not self.rational_part.is_zero:
            v = valuation_at(self.rational_part, P)
            parts.append(expand(self.rational_part, P, max(1, abs_prec - v)))
        if c is not None:
            if _is_series(c):
                parts.append(_series_in_prime(c, P, prime))
            else:
                v = valuation_at(c, P)
                parts.append(expand(c, P, max(1, abs_prec - v)))
        if not parts:
            return LaurentSeries.zero(P.residue_field())
        out = parts[0]
        for s in parts[1:]:
            out = out + s
        return out

    def __add__(self, other):
        if not isinstance(other, Adele):
            return NotImplemented
        if other.field != self.field:
            raise ValueError("mixed base fields")
        corr = dict(self.corrections)
        for P, v in other.corrections.items():
            if P not in corr:
                corr[P] = v
            elif _is_series(corr[P]) or _is_series(v):
                a, b = corr[P], v
                sa = a if _is_series(a) else local_expand(a, P, _match_prec(b))
                sb = b if _is_series(b) else local_expand(b, P, _match_prec(a))
                corr[P] = sa + sb
            else:
                corr[P] = corr[P] + v
        return Adele(self.field, self.rational_part + other.rational_part, corr)

    def scale(self, x: RationalFunction) -> "Adele":
        """The adele x * alpha (multiplication by a global element)."""
        corr = {}
        for P, v in self.corrections.items():
            if _is_series(v):
                corr[P] = v * local_expand(x, P, _match_prec(v))
            else:
                corr[P] = v * x
        return Adele(self.field, self.rational_part * x, corr)

    def __repr__(self):
        return format_adele(self)


# ----------------------------------------------------------------------
# operations
# ----------------------------------------------------------------------

def idele_degree(alpha: Idele) -> int:
    """deg(alpha) = sum over P of Deg(P) v_P(alpha_P); the idelic norm is
    q to this exponent, so the kernel of the norm is degree 0."""
    return sum(P.degree * alpha.valuation_at(P) for P in alpha.support())


def gamma_generator(spec: FieldSpec) -> Idele:
    """The fixed generator [T]_(T) of the infinite factor of the class group."""
    return Idele.prime_at(Place.finite(Poly.T(spec)))


def decompose_C0_Gamma(alpha: Idele) -> tuple:
    """Write alpha = beta * gamma^m with deg(beta) = 0, gamma = [T]_(T)."""
    m = idele_degree(alpha)
    beta = alpha * (gamma_generator(alpha.field) ** (-m))
    return beta, m


def place_below(P_up: Place, base: FieldSpec) -> Place:
    """The place of the base rational function field under an upstairs place."""
    if P_up.field == base:
        return P_up
    if not base.is_subfield_of(P_up.field):
        raise ValueError("base is not a subfield of the upstairs constant field")
    if P_up.is_infinite:
        return Place.infinity(base)
    rho = place_root(P_up)
    big = rho.spec
    # orbit of rho under the base-field Frobenius
    orbit = []
    cur = rho
    while cur not in orbit:
        orbit.append(cur)
        cur = frobenius_power(cur, base.n)
    f = Poly.one(big)
    T = Poly.T(big)
    for r in orbit:
        f = f * (T - Poly.constant(r))
    down = f.map_coeffs(lambda c: unembed(c, base), base)
    return Place.finite(down)


def constant_ext_places_above(P: Place, n: int) -> list:
    """Places of GF(q^n)(T) above P with their residue degrees.

    Constant-field extensions are unramified everywhere: over a place of
    degree d there are gcd(n, d) places, each of residue degree
    n/gcd(n, d)."""
    if n < 1:
        raise ValueError("extension degree must be positive")
    base = P.field
    up = field(base.p, base.n * n)
    if P.is_infinite:
        return [(Place.infinity(up), n)]
    d = P.degree
    g = gcd(n, d)
    f_res = n // g
    lcm_deg = base.n * (n * d // g)
    big = field(base.p, lcm_deg)
    alpha = embed(place_root(P), big)
    roots = [alpha]
    for _ in range(d - 1):
        roots.append(frobenius_power(roots[-1], base.n))
    T = Poly.T(big)
    out = []
    for j in range(g):
        fac = Poly.one(big)
        i = j
        seen = 0
        while seen < d // g:
            fac = fac * (T - Poly.constant(roots[i % d]))
            i += n
            seen += 1
        fac_up = fac.map_coeffs(lambda c: unembed(c, up), up)
        out.append((Place.finite(fac_up), f_res))
    out.sort(key=lambda pf: pf[0].sort_key())
    return out


def _conjugate_series(s: LaurentSeries, steps: int) -> LaurentSeries:
    """Apply the (p^steps)-power Frobenius to every coefficient."""
    return LaurentSeries(s.field, s.shift,
                         [frobenius_power(c, steps) for c in s.coeffs], s.prec)


def _series_project(s: LaurentSeries, sub: FieldSpec) -> LaurentSeries:
    """Move a series into a smaller coefficient field (all coefficients
    must already lie in it)."""
    return LaurentSeries(sub, s.shift, [unembed(c, sub) for c in s.coeffs],
                         s.prec)


def _to_down_prime(series: LaurentSeries, P_up: Place, P_down: Place,
                   rel_prec: int) -> LaurentSeries:
    """Rewrite a series at an upstairs place in the downstairs prime.

    Unramified, so the downstairs prime still has valuation 1 upstairs; at
    infinity the primes coincide."""
    if P_up.is_infinite:
        return series
    up = P_up.field
    rel = max(rel_prec, _match_prec(series)) + 2
    t_down = local_expand(
        RationalFunction(P_down.poly.map_coeffs(lambda c: embed(c, up), up)),
        P_up, rel)
    return recompose_in_prime(series, t_down, rel_prec=rel)


def _local_norm(value, P_up: Place, P_down: Place, base: FieldSpec,
                rel_prec: int):
    """Norm of a local value at P_up down to the completion at P_down.

    The extension is unramified; its Galois group is generated by the
    local Frobenius, which fixes the downstairs prime and raises residue
    coefficients to the power q_P = q^deg(P).  The norm is the product of
    the conjugates.  Rational values stay exact when the result has
    coefficients in the base field; otherwise the series route is used."""
    up = P_up.field
    d = P_down.degree
    f_res = (up.n * P_up.degree) // (base.n * d)
    if not _is_series(value):
        conj = value
        acc = value
        for _ in range(f_res - 1):
            conj = conj.map_coeffs(lambda c: frobenius_power(c, base.n * d))
            acc = acc * conj
        try:
            return acc.map_coeffs(lambda c: unembed(c, base), base)
        except ValueError:
            # norm has constant-field coefficients strictly between base
            # and the residue field: deliver it as a local series
            series = _to_down_prime(local_expand(acc, P_up, rel_prec + 2),
                                    P_up, P_down, rel_prec)
            return _series_project(series, P_down.residue_field())
    series = _to_down_prime(value, P_up, P_down, rel_prec)
    acc = series
    conj = series
    for _ in range(f_res - 1):
        conj = _conjugate_series(conj, base.n * d)
        acc = acc * conj
    return _series_project(acc, P_down.residue_field())


def norm_from_constant_ext(alpha: Idele, n: int, rel_prec: int = 8) -> Idele:
    """The idele norm from GF(q^n)(T) down to GF(q)(T), componentwise.

    The component at P is the product of the local norms over the places
    above P; the global rational part maps to its full field norm."""
    up = alpha.field
    if up.n % n:
        raise ValueError(f"{up!r} is not a degree-{n} constant extension")
    base = field(up.p, up.n // n)
    # field norm of the rational part
    y = alpha.rational_part
    acc = y
    conj = y
    for _ in range(n - 1):
        conj = conj.map_coeffs(lambda c: frobenius_power(c, base.n))
        acc = acc * conj
    rat_norm = acc.map_coeffs(lambda c: unembed(c, base), base)
    # local norms of the corrections, grouped by the place below
    corr: dict = {}
    for P_up, v in alpha.corrections.items():
        P_down = place_below(P_up, base)
        nv = _local_norm(v, P_up, P_down, base, rel_prec)
        if P_down in corr:
            corr[P_down] = _mul_local(corr[P_down], nv, P_down)
        else:
            corr[P_down] = nv
    return Idele(base, rat_norm, corr)


def lambda_functional(alpha: Adele) -> tuple:
    """(lambda(alpha), f(alpha)): the residue functional against dT.

    lambda(alpha) = sum over P of Tr_P(res_P(alpha_P dT)) in the constant
    field; f(alpha) is its absolute trace in GF(p), returned as an int.
    Only poles of components and the place at infinity (where dT/dt has a
    pole) can contribute."""
    spec = alpha.field
    places = set(alpha.corrections)
    if not alpha.rational_part.is_zero:
        places.update(divisor_of(alpha.rational_part).support())
    places.add(Place.infinity(spec))
    lam = spec.zero
    for P in sorted(places, key=Place.sort_key):
        # in the root prime u = T - alpha, dT/du = 1; at infinity
        # dT/d(1/T) = -t^(-2)
        if P.is_infinite:
            comp = alpha.local_series(P, abs_prec=3)
            res = (comp * LaurentSeries.t_power(spec, -2, -spec.one)
                   ).coefficient(-1)
        else:
            comp = alpha.local_series(P, abs_prec=1, prime="root")
            res = comp.coefficient(-1)
        lam = lam + trace_to(res, spec)
    prime = field(spec.p, 1)
    f_val = trace_to(lam, prime).coeffs[0]
    return lam, f_val


# ----------------------------------------------------------------------
# JSON format
# ----------------------------------------------------------------------

def _value_to_text(v):
    return format_series(v) if _is_series(v) else format_rational(v)


def _value_from_text(text: str, P: Place):
    if "t" in text or "O(" in text:
        return parse_series(text, P.residue_field())
    return parse_rational(text, P.field)


def format_idele(alpha: Idele) -> str:
    data = {"q": alpha.field.q,
            "rational_part": format_rational(alpha.rational_part),
            "corrections": {str(P): _value_to_text(v)
                            for P, v in sorted(alpha.corrections.items(),
                                               key=lambda kv: kv[0].sort_key())}}
    return json.dumps(data)


def parse_idele(text: str, spec: FieldSpec | None = None) -> Idele:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"bad idele JSON: {e}") from None
    if "q" in data:
        from .finite_field import field_of_order
        sp = field_of_order(int(data["q"]))
        if spec is not None and sp != spec:
            raise ParseError(f"idele is over GF({data['q']}), expected {spec!r}")
        spec = sp
    if spec is None:
        raise ParseError("idele JSON needs a base field q")
    rat = parse_rational(str(data.get("rational_part", "1")), spec)
    corr = {}
    for ptext, vtext in data.get("corrections", {}).items():
        P = parse_place(ptext, spec)
        corr[P] = _value_from_text(str(vtext), P)
    try:
        return Idele(spec, rat, corr)
    except ValueError as e:
        raise ParseError(str(e)) from None


def format_adele(alpha: Adele) -> str:
    data = {"q": alpha.field.q,
            "rational_part": format_rational(alpha.rational_part),
            "corrections": {str(P): _value_to_text(v)
                            for P, v in sorted(alpha.corrections.items(),
                                               key=lambda kv: kv[0].sort_key())}}
    return json.dumps(data)


def parse_adele(text: str, spec: FieldSpec | None = None) -> Adele:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"bad adele JSON: {e}") from None
    if "q" in data:
        from .finite_field import field_of_order
        sp = field_of_order(int(data["q"]))
        if spec is not None and sp != spec:
            raise ParseError(f"adele is over GF({data['q']}), expected {spec!r}")
        spec = sp
    if spec is None:
        raise ParseError("adele JSON needs a base field q")
    rat = parse_rational(str(data.get("rational_part", "0")), spec)
    corr = {}
    for ptext, vtext in data.get("corrections", {}).items():
        P = parse_place(ptext, spec)
        corr[P] = _value_from_text(str(vtext), P)
    try:
        return Adele(spec, rat, corr)
    except ValueError as e:
        raise ParseError(str(e)) from None
