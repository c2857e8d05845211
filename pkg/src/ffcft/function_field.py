"""The rational function field K = GF(q)(T) and its places.

Places are the monic irreducible polynomials over GF(q) plus the place at
infinity; the canonical prime elements are f itself at a finite place (f)
and 1/T at infinity.  T doubles as the global separating element, so dT is
the reference differential for residues.  Everything here is exact.
"""

from __future__ import annotations

import functools
import itertools
import re
from dataclasses import dataclass

from .errors import ParseError
from .finite_field import (ExtFieldElem, FieldSpec, embed, field,
                           format_element, frobenius_power, parse_element,
                           unembed, _solve_mod_p)
from .laurent_series import INF, LaurentSeries, recompose_in_prime


class Poly:
    """Univariate polynomial in T over a FieldSpec (ascending coefficients)."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field_spec: FieldSpec, coeffs):
        cs = [field_spec.element(c) if isinstance(c, int) else c for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.field = field_spec
        self.coeffs = tuple(cs)

    @staticmethod
    def zero(field_spec):
        return Poly(field_spec, ())

    @staticmethod
    def one(field_spec):
        return Poly(field_spec, (1,))

    @staticmethod
    def T(field_spec):
        return Poly(field_spec, (0, 1))

    @staticmethod
    def constant(c: ExtFieldElem):
        return Poly(c.spec, (c,))

    @property
    def degree(self):
        """Degree, with deg 0 = -1 by convention."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self):
        return not self.coeffs

    @property
    def leading(self):
        return self.coeffs[-1]

    @property
    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def coefficient(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.field.zero

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.field, [self.coefficient(i) + other.coefficient(i)
                                 for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.field, [-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return Poly.zero(self.field)
        out = [self.field.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] = out[i + j] + a * b
        return Poly(self.field, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        r = Poly.one(self.field)
        b = self
        while k:
            if k & 1:
                r = r * b
            b = b * b
            k >>= 1
        return r

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.field != self.field:
                raise ValueError("mixed base fields")
            return other
        if isinstance(other, (int, ExtFieldElem)):
            return Poly(self.field, (other,))
        return None

    def __divmod__(self, other):
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        inv = other.leading.inverse()
        quot = [self.field.zero] * max(0, len(rem) - db)
        while len(rem) - 1 >= db:
            while rem and not rem[-1]:
                rem.pop()
            if len(rem) - 1 < db:
                break
            c = rem[-1] * inv
            k = len(rem) - 1 - db
            quot[k] = c
            for j in range(db + 1):
                rem[k + j] = rem[k + j] - c * other.coeffs[j]
            rem.pop()
        return Poly(self.field, quot), Poly(self.field, rem)

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __eq__(self, other):
        if isinstance(other, int):
            other = Poly(self.field, (other,))
        return (isinstance(other, Poly) and self.field == other.field
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.field.q, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def monic(self):
        if self.is_zero or self.is_monic:
            return self
        inv = self.leading.inverse()
        return Poly(self.field, [c * inv for c in self.coeffs])

    def gcd(self, other):
        a, b = self, other
        while not b.is_zero:
            a, b = b, a % b
        return a.monic()

    def derivative(self):
        p = self.field.p
        return Poly(self.field, [c * (i % p)
                                 for i, c in enumerate(self.coeffs)][1:])

    def evaluate(self, x: ExtFieldElem):
        """Evaluate at x, embedding coefficients into x's field if needed."""
        acc = x.spec.zero
        for c in reversed(self.coeffs):
            acc = acc * x + embed(c, x.spec)
        return acc

    def map_coeffs(self, fn, new_field=None):
        return Poly(new_field or self.field, [fn(c) for c in self.coeffs])

    def multiplicity_of(self, f: "Poly") -> int:
        """Largest k with f^k dividing self (self nonzero, f nonconstant)."""
        if self.is_zero:
            raise ValueError("zero polynomial")
        if f.degree < 1:
            raise ValueError("multiplicity of a constant")
        k = 0
        cur = self
        while True:
            q, r = divmod(cur, f)
            if not r.is_zero:
                return k
            cur = q
            k += 1

    def __repr__(self):
        return format_poly(self)


# ----------------------------------------------------------------------
# irreducibles, factorization
# ----------------------------------------------------------------------

@functools.lru_cache(maxsize=None)
def monic_polys(spec: FieldSpec, degree: int) -> tuple:
    """All monic polynomials of exact degree, lex-ordered by coefficients."""
    elems = list(spec.elements())
    out = []
    for tail in itertools.product(elems, repeat=degree):
        out.append(Poly(spec, list(tail) + [spec.one]))
    return tuple(out)


@functools.lru_cache(maxsize=None)
def monic_irreducibles(spec: FieldSpec, degree: int) -> tuple:
    """All monic irreducibles of exact degree (trial division sieve)."""
    lower = [f for d in range(1, degree // 2 + 1) for f in monic_irreducibles(spec, d)]
    out = []
    for f in monic_polys(spec, degree):
        if degree == 1 or all((f % g).coeffs for g in lower):
            out.append(f)
    return tuple(out)


def is_irreducible(f: Poly) -> bool:
    if f.degree < 1:
        return False
    g = f.monic()
    return all((g % h).coeffs
               for d in range(1, f.degree // 2 + 1)
               for h in monic_irreducibles(f.field, d))


def factor(f: Poly) -> dict:
    """Monic irreducible factorization {factor: multiplicity} by trial division."""
    if f.is_zero:
        raise ValueError("cannot factor 0")
    out = {}
    cur = f.monic()
    d = 1
    while cur.degree >= 1:
        if d > cur.degree // 2:
            out[cur] = out.get(cur, 0) + 1
            break
        for g in monic_irreducibles(f.field, d):
            m = 0
            while True:
                q, r = divmod(cur, g)
                if not r.is_zero:
                    break
                cur = q
                m += 1
            if m:
                out[g] = m
        d += 1
    return out


# ----------------------------------------------------------------------
# places and divisors
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class Place:
    """A place of GF(q)(T): a monic irreducible polynomial, or infinity."""

    field: FieldSpec
    poly: Poly | None  # None means the place at infinity

    @staticmethod
    def finite(poly: Poly) -> "Place":
        if not poly.is_monic or not is_irreducible(poly):
            raise ValueError(f"{poly!r} is not monic irreducible")
        return Place(poly.field, poly)

    @staticmethod
    def infinity(spec: FieldSpec) -> "Place":
        return Place(spec, None)

    @property
    def is_infinite(self):
        return self.poly is None

    @property
    def degree(self) -> int:
        return 1 if self.poly is None else self.poly.degree

    def residue_field(self) -> FieldSpec:
        base = self.field
        return field(base.p, base.n * self.degree)

    def sort_key(self):
        if self.poly is None:
            return (0, 0, ())
        return (1, self.poly.degree,
                tuple(c.coeffs for c in self.poly.coeffs))

    def __str__(self):
        return "inf" if self.poly is None else format_poly(self.poly)

    def __repr__(self):
        return f"Place({self})"


class Divisor:
    """Finite formal sum of places with integer coefficients."""

    def __init__(self, data: dict | None = None):
        self._d = {P: n for P, n in (data or {}).items() if n}

    def coefficient(self, P: Place) -> int:
        return self._d.get(P, 0)

    def support(self):
        return sorted(self._d, key=Place.sort_key)

    def items(self):
        return [(P, self._d[P]) for P in self.support()]

    @property
    def degree(self) -> int:
        return sum(n * P.degree for P, n in self._d.items())

    def __add__(self, other):
        out = dict(self._d)
        for P, n in other._d.items():
            out[P] = out.get(P, 0) + n
        return Divisor(out)

    def __neg__(self):
        return Divisor({P: -n for P, n in self._d.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, k: int):
        return Divisor({P: k * n for P, n in self._d.items()})

    def __eq__(self, other):
        return isinstance(other, Divisor) and self._d == other._d

    def __hash__(self):
        return hash(frozenset(self._d.items()))

    def __bool__(self):
        return bool(self._d)

    def is_effective(self):
        return all(n >= 0 for n in self._d.values())

    def __repr__(self):
        if not self._d:
            return "0"
        bits = []
        for P, n in self.items():
            bits.append(f"{n}*({P})")
        return " + ".join(bits).replace("+ -", "- ")


# ----------------------------------------------------------------------
# rational functions
# ----------------------------------------------------------------------

class RationalFunction:
    """num/den over GF(q), in lowest terms with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly | None = None):
        if den is None:
            den = Poly.one(num.field)
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        g = num.gcd(den)
        if g.degree >= 1:
            num, den = num // g, den // g
        lead = den.leading.inverse()
        if den.leading != 1:
            num = num * Poly.constant(lead)
            den = den * Poly.constant(lead)
        self.num = num
        self.den = den

    @staticmethod
    def from_poly(f: Poly):
        return RationalFunction(f)

    @staticmethod
    def constant(c):
        return RationalFunction(Poly.constant(c))

    @staticmethod
    def T(spec):
        return RationalFunction(Poly.T(spec))

    @staticmethod
    def one(spec):
        return RationalFunction(Poly.one(spec))

    @staticmethod
    def zero(spec):
        return RationalFunction(Poly.zero(spec))

    @property
    def field(self):
        return self.num.field

    @property
    def is_zero(self):
        return self.num.is_zero

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RationalFunction(self.num * other.den + other.num * self.den,
                                self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("division by the zero function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, k: int):
        if k < 0:
            return RationalFunction(self.den, self.num) ** (-k)
        return RationalFunction(self.num ** k, self.den ** k)

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            if other.field != self.field:
                raise ValueError("mixed base fields")
            return other
        if isinstance(other, Poly):
            return RationalFunction(other)
        if isinstance(other, (int, ExtFieldElem)):
            return RationalFunction(Poly(self.field, (other,)))
        return None

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return not self.is_zero

    def derivative(self):
        """d/dT by the quotient rule."""
        return RationalFunction(
            self.num.derivative() * self.den - self.num * self.den.derivative(),
            self.den * self.den)

    def map_coeffs(self, fn, new_field=None):
        return RationalFunction(self.num.map_coeffs(fn, new_field),
                                self.den.map_coeffs(fn, new_field))

    def __repr__(self):
        return format_rational(self)


# ----------------------------------------------------------------------
# operations
# ----------------------------------------------------------------------

def valuation_at(x: RationalFunction, P: Place) -> int:
    """The normalized valuation v_P(x); x must be nonzero."""
    if x.is_zero:
        raise ValueError("the zero function has no valuation")
    if P.field != x.field:
        raise ValueError("place belongs to a different base field")
    if P.is_infinite:
        return x.den.degree - x.num.degree
    return x.num.multiplicity_of(P.poly) - x.den.multiplicity_of(P.poly)


def divisor_of(x: RationalFunction) -> Divisor:
    """The principal divisor (x) = sum of v_P(x) P; always of degree 0."""
    if x.is_zero:
        raise ValueError("the zero function has no divisor")
    data = {}
    for f, m in factor(x.num).items():
        if f.degree >= 1:
            data[Place.finite(f)] = m
    for f, m in factor(x.den).items():
        if f.degree >= 1:
            data[Place.finite(f)] = data.get(Place.finite(f), 0) - m
    v_inf = x.den.degree - x.num.degree
    if v_inf:
        data[Place.infinity(x.field)] = v_inf
    return Divisor(data)


def places_up_to_degree(spec: FieldSpec, d: int) -> list:
    """Infinity plus all finite places of degree <= d, in canonical order."""
    out = [Place.infinity(spec)]
    for k in range(1, d + 1):
        out.extend(Place.finite(f) for f in monic_irreducibles(spec, k))
    return sorted(out, key=Place.sort_key)


@functools.lru_cache(maxsize=None)
def place_root(P: Place) -> ExtFieldElem:
    """The canonical root of P's polynomial in its residue field.

    Chosen as the lexicographically least root; identifies GF(q)[T]/(f)
    with the residue field.
    """
    if P.is_infinite:
        raise ValueError("infinity has no polynomial root")
    if P.degree == 1:
        return -P.poly.coefficient(0)
    R = P.residue_field()
    for a in R.elements():
        if not P.poly.evaluate(a):
            return a
    raise AssertionError(f"no root of {P.poly!r} in {R!r}")


def residue_value(x: RationalFunction, P: Place) -> ExtFieldElem:
    """The image of x in the residue field at P (x integral at P)."""
    if P.is_infinite:
        if valuation_at(x, P) < 0:
            raise ValueError("x has a pole at infinity")
        if x.num.degree < x.den.degree:
            return x.field.zero
        return x.num.leading / x.den.leading
    alpha = place_root(P)
    nv = (x.num % P.poly).evaluate(alpha)
    dv = (x.den % P.poly).evaluate(alpha)
    if not dv:
        raise ValueError(f"x has a pole at {P}")
    return nv / dv


def place_lift(c: ExtFieldElem, P: Place) -> Poly:
    """A polynomial of degree < deg(P) over the base field whose value at
    the canonical root equals c (the inverse of residue_value on
    polynomials).  At infinity the residue field is the base field and the
    lift is the constant itself."""
    base = P.field
    if P.is_infinite:
        return Poly.constant(unembed(c, base))
    R = P.residue_field()
    alpha = place_root(P)
    d = P.degree
    # unknowns: d coefficients over GF(q) = r-dim over GF(p)
    r = base.n
    cols = []
    for j in range(d):
        aj = alpha ** j
        for i in range(r):
            e = embed(base.element([0] * i + [1]), R)
            cols.append(list((aj * e).coeffs))
    sol = _solve_mod_p(cols, list(embed(c, R).coeffs), base.p)
    if sol is None:
        raise AssertionError("lift must exist: alpha generates the residue field")
    coeffs = []
    for j in range(d):
        coeffs.append(base.element(sol[j * r:(j + 1) * r]))
    return Poly(base, coeffs)


def local_expand(x: RationalFunction, P: Place, rel_prec: int) -> LaurentSeries:
    """Laurent expansion of x at P in the canonical prime, rel_prec digits.

    The prime is f at a finite place (f) and 1/T at infinity; coefficients
    are constants in the residue field.  At degree-1 places (where the
    residue constants are the base-field scalars themselves) an f-adic
    digit algorithm applies directly; at higher degree the expansion is
    computed in the root prime T - alpha and rewritten in powers of f.
    When the expansion terminates inside the window the result is exact.
    """
    if x.is_zero:
        raise ValueError("cannot expand the zero function")
    if rel_prec < 1:
        raise ValueError("need at least one digit")
    if P.is_infinite:
        return _expand_at_infinity(x, rel_prec)
    if P.degree == 1:
        return _expand_by_digits(x, P, rel_prec)
    root_series = local_expand_root(x, P, rel_prec + 4)
    v = root_series.valuation()
    f_u = root_prime_series(P)
    out = recompose_in_prime(root_series, f_u, rel_prec=rel_prec + 2)
    out = out.truncate(v + rel_prec)
    if out.prec is not INF and out.prec < v + rel_prec:
        raise AssertionError("canonical expansion lost precision")
    return out


def local_expand_root(x: RationalFunction, P: Place,
                      rel_prec: int) -> LaurentSeries:
    """Laurent expansion of x at P in the root prime u = T - alpha.

    alpha is the canonical root of P's polynomial, so the coefficients are
    honest residue-field constants and dT/du = 1; residues of differentials
    computed in this prime agree with the canonical-prime ones.  At
    infinity the canonical prime 1/T is used."""
    if x.is_zero:
        raise ValueError("cannot expand the zero function")
    if P.is_infinite:
        return _expand_at_infinity(x, rel_prec)
    f = P.poly
    a = x.num.multiplicity_of(f)
    b = x.den.multiplicity_of(f)
    v = a - b
    alpha = place_root(P)
    nu = _shifted_series(x.num // f ** a, alpha)
    du = _shifted_series(x.den // f ** b, alpha)
    acc = nu * du.invert(rel_prec + 1)
    if v:
        f_u = _shifted_series(f, alpha)
        pw = f_u ** abs(v)
        acc = acc * (pw if v > 0 else pw.invert(rel_prec + 1))
    return acc.truncate(v + rel_prec) if acc.prec is not INF else acc


def _expand_by_digits(x: RationalFunction, P: Place,
                      rel_prec: int) -> LaurentSeries:
    f = P.poly
    a = x.num.multiplicity_of(f)
    b = x.den.multiplicity_of(f)
    v = a - b
    n0 = x.num // f ** a
    d0 = x.den // f ** b
    R = P.residue_field()
    alpha = place_root(P)
    N = rel_prec
    fN = f ** N
    digits = []
    exact = d0.degree == 0  # division terminates: u is the full numerator
    if exact:
        u = n0 * Poly.constant(d0.coefficient(0).inverse())
        if u.degree >= fN.degree:
            exact = False
            u = u % fN
    else:
        u = (n0 * _inverse_mod(d0, fN)) % fN
    for _ in range(N):
        rem = u % f
        digits.append(rem.evaluate(alpha))
        u = (u - rem) // f
        if u.is_zero:
            break
    if exact and u.is_zero:
        return LaurentSeries(R, v, digits, INF)
    return LaurentSeries(R, v, digits + [R.zero] * (N - len(digits)), v + N)


@functools.lru_cache(maxsize=None)
def root_prime_series(P: Place) -> LaurentSeries:
    """The canonical prime f written in the root prime: f(alpha + u) as an
    exact polynomial series in u, with valuation 1."""
    if P.is_infinite:
        raise ValueError("infinity has no root prime")
    return _shifted_series(P.poly, place_root(P))


def _shifted_series(g: Poly, alpha: ExtFieldElem) -> LaurentSeries:
    """g(alpha + u) as an exact series in u over alpha's field.

    Computed by repeated synthetic division by (T - alpha), which works in
    any characteristic."""
    R = alpha.spec
    cur = g.map_coeffs(lambda c: embed(c, R), R)
    lin = Poly(R, [-alpha, R.one])
    out = []
    while not cur.is_zero:
        cur, rem = divmod(cur, lin)
        out.append(rem.coefficient(0))
    return LaurentSeries(R, 0, out, INF)


def _inverse_mod(a: Poly, m: Poly) -> Poly:
    """Inverse of a modulo m (gcd(a, m) = 1) by extended Euclid."""
    r0, r1 = m, a % m
    s0, s1 = Poly.zero(a.field), Poly.one(a.field)
    while not r1.is_zero:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
    if r0.degree != 0:
        raise ValueError("not invertible")
    return (s0 * Poly.constant(r0.coefficient(0).inverse())) % m


def _expand_at_infinity(x: RationalFunction, rel_prec: int) -> LaurentSeries:
    spec = x.field
    v = x.den.degree - x.num.degree
    rn = Poly(spec, list(reversed(x.num.coeffs)))
    rd = Poly(spec, list(reversed(x.den.coeffs)))
    # x(1/t) = rn(t) t^(-deg num) / (rd(t) t^(-deg den)) = t^v rn/rd
    if rd.degree == 0:
        c = rd.coefficient(0).inverse()
        coeffs = [cc * c for cc in rn.coeffs]
        return LaurentSeries(spec, v, coeffs, INF)
    N = rel_prec
    inv = _series_inverse_poly(rd, N)
    prod = (rn * inv)
    coeffs = [prod.coefficient(i) for i in range(N)]
    return LaurentSeries(spec, v, coeffs, v + N)


def _series_inverse_poly(d: Poly, N: int) -> Poly:
    """Power-series inverse of d (nonzero constant term) to N terms."""
    c0 = d.coefficient(0).inverse()
    out = [c0]
    for k in range(1, N):
        s = d.field.zero
        for j in range(1, min(k, d.degree) + 1):
            s = s + d.coefficient(j) * out[k - j]
        out.append(-s * c0)
    return Poly(d.field, out)


def dt_over_dtP(P: Place, rel_prec: int = 8) -> LaurentSeries:
    """The local series of dT/dt_P at P.

    At a finite place (f) this is 1/f'(T) (a unit: f is separable and
    coprime to f'); at infinity dT/d(1/T) = -T^2 = -t^(-2)."""
    if P.is_infinite:
        spec = P.field
        return LaurentSeries.t_power(spec, -2, -spec.one)
    fprime = P.poly.derivative()
    return local_expand(RationalFunction(Poly.one(P.field), fprime), P, rel_prec)


def riemann_roch_basis(D: Divisor, spec: FieldSpec | None = None) -> list:
    """Basis of L(D) = {x : (x) + D >= 0}, dimension deg(D)+1 on P^1.

    The basis is r T^j / h where h collects the positive part of D on
    finite places and r the negative part; the empty divisor needs an
    explicit field."""
    support = D.support()
    if spec is None:
        if not support:
            raise ValueError("empty divisor needs an explicit field")
        spec = support[0].field
    if D.degree < 0:
        return []
    h = Poly.one(spec)
    r = Poly.one(spec)
    n_inf = 0
    for P, n in D.items():
        if P.is_infinite:
            n_inf = n
        elif n > 0:
            h = h * P.poly ** n
        else:
            r = r * P.poly ** (-n)
    top = h.degree + n_inf - r.degree
    T = Poly.T(spec)
    return [RationalFunction(r * T ** j, h) for j in range(top + 1)]


# ----------------------------------------------------------------------
# text formats: `(T^2+1)/(T+1)`, place `inf` or a monic polynomial
# ----------------------------------------------------------------------

def format_poly(f: Poly) -> str:
    if f.is_zero:
        return "0"
    parts = []
    for k in range(f.degree, -1, -1):
        c = f.coefficient(k)
        if not c:
            continue
        cs = format_element(c)
        multi = "+" in cs
        if k == 0:
            parts.append(f"({cs})" if multi else cs)
        else:
            tp = "T" if k == 1 else f"T^{k}"
            if c == 1:
                parts.append(tp)
            else:
                parts.append((f"({cs})" if multi else cs) + "*" + tp)
    return "+".join(parts)


def parse_poly(text: str, spec: FieldSpec) -> Poly:
    s = text.replace(" ", "")
    if not s:
        raise ParseError("empty polynomial")
    if s == "0":
        return Poly.zero(spec)
    chunks = []
    sign = 1
    i = 0
    if s[0] in "+-":
        sign = -1 if s[0] == "-" else 1
        i = 1
    depth = 0
    cur = ""
    for ch in s[i:]:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch in "+-" and depth == 0:
            chunks.append((sign, cur))
            sign = -1 if ch == "-" else 1
            cur = ""
        else:
            cur += ch
    chunks.append((sign, cur))
    terms = {}
    for sgn, chunk in chunks:
        if not chunk:
            raise ParseError(f"bad polynomial: {text!r}")
        if "T" in chunk:
            ci = chunk.index("T")
            coeff_part = chunk[:ci].rstrip("*")
            m = re.match(r"^T(?:\^(\d+))?$", chunk[ci:])
            if not m:
                raise ParseError(f"bad term {chunk!r}")
            exp = int(m.group(1)) if m.group(1) else 1
        else:
            coeff_part = chunk
            exp = 0
        if coeff_part.startswith("(") and coeff_part.endswith(")"):
            coeff_part = coeff_part[1:-1]
        c = spec.one if not coeff_part else parse_element(coeff_part, spec)
        if sgn == -1:
            c = -c
        terms[exp] = terms.get(exp, spec.zero) + c
    top = max(terms)
    return Poly(spec, [terms.get(i, spec.zero) for i in range(top + 1)])


def format_rational(x: RationalFunction) -> str:
    ns = format_poly(x.num)
    if x.den.degree == 0 and x.den.coefficient(0) == 1:
        return ns
    if "+" in ns or "-" in ns[1:]:
        ns = f"({ns})"
    ds = format_poly(x.den)
    if "+" in ds or "-" in ds[1:]:
        ds = f"({ds})"
    return f"{ns}/{ds}"


def parse_rational(text: str, spec: FieldSpec) -> RationalFunction:
    s = text.replace(" ", "")
    if not s:
        raise ParseError("empty rational function")
    # split at a top-level /
    depth = 0
    slash = None
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "/" and depth == 0:
            if slash is not None:
                raise ParseError("more than one top-level /")
            slash = i
    def _part(txt):
        if txt.startswith("(") and txt.endswith(")") and _balanced(txt[1:-1]):
            txt = txt[1:-1]
        return parse_poly(txt, spec)
    if slash is None:
        return RationalFunction(_part(s))
    num = _part(s[:slash])
    den = _part(s[slash + 1:])
    if den.is_zero:
        raise ParseError("zero denominator")
    return RationalFunction(num, den)


def _balanced(s: str) -> bool:
    depth = 0
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if depth < 0:
            return False
    return depth == 0


def parse_place(text: str, spec: FieldSpec) -> Place:
    s = text.strip()
    if s == "inf":
        return Place.infinity(spec)
    f = parse_poly(s, spec)
    try:
        return Place.finite(f)
    except ValueError as e:
        raise ParseError(str(e)) from None
