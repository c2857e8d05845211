"""Truncated Laurent series over a finite field: the local fields GF(q)((t)).

A series stores the coefficients it knows, from its leading exponent up to
(but not including) `prec`; `prec = None` means the series is exact (every
unlisted coefficient is zero, i.e. a Laurent polynomial).  Arithmetic
propagates the provable precision:

    add:        min of the precisions
    mul:        min(v(x) + prec(y), v(y) + prec(x))
    derivative: prec - 1
    p-th power: p * prec  (char-p Frobenius: indices dilate, coefficients
                are raised to the p, nothing mixes)
    inverse:    same relative precision as the input

A series all of whose known coefficients vanish is either the exact zero or
a residue class O(t^prec); asking such a series for its valuation raises
(PrecisionError in the truncated case).  Exactness is recovered in practice
because the global modules expand rational functions on demand.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass

from .errors import ParseError, PrecisionError
from .finite_field import (ExtFieldElem, FieldSpec, artin_schreier_solve,
                           field, format_element, frobenius_power,
                           parse_element, trace_to)

INF = None  # precision marker for exact series


class LaurentSeries:
    """Immutable truncated Laurent series over a FieldSpec."""

    __slots__ = ("field", "shift", "coeffs", "prec")

    def __init__(self, field_spec: FieldSpec, shift: int, coeffs, prec=INF):
        cs = list(coeffs)
        # normalise: strip leading zeros; drop coefficients beyond prec;
        # strip trailing zeros (coefficient() restores them inside prec)
        while cs and not cs[0]:
            cs.pop(0)
            shift += 1
        if prec is not INF:
            cs = cs[:max(0, prec - shift)]
        while cs and not cs[-1]:
            cs.pop()
        if not cs:
            shift = prec if prec is not INF else 0
        self.field = field_spec
        self.shift = shift
        self.coeffs = tuple(cs)
        self.prec = prec

    # -- constructors ---------------------------------------------------

    @staticmethod
    def zero(field_spec, prec=INF):
        return LaurentSeries(field_spec, 0, (), prec)

    @staticmethod
    def one(field_spec):
        return LaurentSeries(field_spec, 0, (field_spec.one,))

    @staticmethod
    def t_power(field_spec, k, coeff=None):
        c = field_spec.one if coeff is None else coeff
        return LaurentSeries(field_spec, k, (c,))

    @staticmethod
    def constant(c: ExtFieldElem):
        return LaurentSeries(c.spec, 0, (c,))

    @staticmethod
    def from_terms(field_spec, terms: dict, prec=INF):
        """Series from {exponent: coefficient}."""
        if not terms:
            return LaurentSeries.zero(field_spec, prec)
        lo = min(terms)
        hi = max(terms)
        cs = [terms.get(i, field_spec.zero) for i in range(lo, hi + 1)]
        cs = [field_spec.element(c) if isinstance(c, int) else c for c in cs]
        return LaurentSeries(field_spec, lo, cs, prec)

    # -- structure ------------------------------------------------------

    @property
    def is_exact(self):
        return self.prec is INF

    @property
    def is_exact_zero(self):
        return self.prec is INF and not self.coeffs

    @property
    def known_zero(self):
        """No known nonzero coefficient (exact zero or an O(t^N) class)."""
        return not self.coeffs

    def valuation(self) -> int:
        if self.coeffs:
            return self.shift
        if self.is_exact_zero:
            raise ValueError("the zero series has no valuation")
        raise PrecisionError(
            f"valuation undetermined: series is O(t^{self.prec})")

    def coefficient(self, i: int) -> ExtFieldElem:
        """Coefficient of t^i; PrecisionError when i is beyond knowledge."""
        if self.prec is not INF and i >= self.prec:
            raise PrecisionError(f"coefficient of t^{i} unknown at O(t^{self.prec})")
        if i < self.shift or i >= self.shift + len(self.coeffs):
            return self.field.zero
        return self.coeffs[i - self.shift]

    def truncate(self, new_prec: int) -> "LaurentSeries":
        if self.prec is not INF and self.prec <= new_prec:
            return self
        return LaurentSeries(self.field, self.shift, self.coeffs, new_prec)

    def terms(self):
        for i, c in enumerate(self.coeffs):
            if c:
                yield self.shift + i, c

    # -- ring operations --------------------------------------------------

    def _prec_min(self, other):
        if self.prec is INF:
            return other.prec
        if other.prec is INF:
            return self.prec
        return min(self.prec, other.prec)

    def __add__(self, other):
        if isinstance(other, (int, ExtFieldElem)):
            other = LaurentSeries.constant(self._as_elem(other))
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        self._check_field(other)
        prec = self._prec_min(other)
        if self.known_zero and self.is_exact:
            return other.truncate(prec) if prec is not INF else other
        if other.known_zero and other.is_exact:
            return self.truncate(prec) if prec is not INF else self
        lo = min(self.shift, other.shift)
        hi = max(self.shift + len(self.coeffs), other.shift + len(other.coeffs))
        if prec is not INF:
            hi = min(hi, prec)
        cs = [self.coefficient_raw(i) + other.coefficient_raw(i)
              for i in range(lo, hi)]
        return LaurentSeries(self.field, lo, cs, prec)

    __radd__ = __add__

    def coefficient_raw(self, i):
        # like coefficient() but without the precision guard (internal)
        if i < self.shift or i >= self.shift + len(self.coeffs):
            return self.field.zero
        return self.coeffs[i - self.shift]

    def _as_elem(self, v):
        return self.field.element(v) if isinstance(v, int) else v

    def _check_field(self, other):
        if other.field != self.field:
            raise ValueError("mixed coefficient fields")

    def __neg__(self):
        return LaurentSeries(self.field, self.shift,
                             [-c for c in self.coeffs], self.prec)

    def __sub__(self, other):
        if isinstance(other, (int, ExtFieldElem)):
            other = LaurentSeries.constant(self._as_elem(other))
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, ExtFieldElem)):
            other = LaurentSeries.constant(self._as_elem(other))
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        self._check_field(other)
        # precision: unknown tail of one factor meets the leading term of
        # the other at index v(other) + prec(self), and vice versa
        if self.is_exact_zero or other.is_exact_zero:
            return LaurentSeries.zero(self.field)
        cands = []
        if self.prec is not INF:
            cands.append(other.shift + self.prec)
        if other.prec is not INF:
            cands.append(self.shift + other.prec)
        prec = min(cands) if cands else INF
        if not self.coeffs or not other.coeffs:
            return LaurentSeries.zero(self.field, prec)
        lo = self.shift + other.shift
        n_out = len(self.coeffs) + len(other.coeffs) - 1
        if prec is not INF:
            n_out = min(n_out, prec - lo)
        out = [self.field.zero] * n_out
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            jmax = min(len(other.coeffs), n_out - i)
            for j in range(jmax):
                b = other.coeffs[j]
                if b:
                    out[i + j] = out[i + j] + a * b
        return LaurentSeries(self.field, lo, out, prec)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k == 0:
            return LaurentSeries.one(self.field)
        if k < 0:
            return self.invert() ** (-k)
        b = self
        r = None
        while k:
            if k & 1:
                r = b if r is None else r * b
            k >>= 1
            if k:
                b = b * b
        return r

    def pth_power(self) -> "LaurentSeries":
        """x^p via the coefficientwise Frobenius; precision dilates to p*prec."""
        p = self.field.p
        prec = INF if self.prec is INF else p * self.prec
        if not self.coeffs:
            return LaurentSeries.zero(self.field, prec)
        lo = p * self.shift
        out = [self.field.zero] * (p * (len(self.coeffs) - 1) + 1)
        for i, c in enumerate(self.coeffs):
            if c:
                out[p * i] = frobenius_power(c, 1)
        return LaurentSeries(self.field, lo, out, prec)

    def invert(self, rel_prec: int | None = None) -> "LaurentSeries":
        """1/x.  For an exact non-monomial x a relative precision is required."""
        if self.known_zero:
            if self.is_exact_zero:
                raise ZeroDivisionError("inverse of the zero series")
            raise PrecisionError("cannot invert a series with no known leading term")
        v = self.shift
        rel_have = INF if self.prec is INF else self.prec - v
        if len(self.coeffs) == 1 and self.prec is INF:
            # exact monomial: exact inverse
            return LaurentSeries(self.field, -v, (self.coeffs[0].inverse(),))
        if rel_have is INF and rel_prec is None:
            raise ValueError("inverse of an exact series needs a precision")
        rel = rel_prec if rel_have is INF else (
            rel_have if rel_prec is None else min(rel_prec, rel_have))
        c0 = self.coeffs[0]
        c0i = c0.inverse()
        # u = x / (c0 t^v) is 1 + higher; invert by the standard recursion
        u = [self.coefficient_raw(v + i) * c0i for i in range(rel)]
        inv = [self.field.zero] * rel
        inv[0] = self.field.one
        for k in range(1, rel):
            s = self.field.zero
            for j in range(1, k + 1):
                if u[j]:
                    s = s + u[j] * inv[k - j]
            inv[k] = -s
        return LaurentSeries(self.field, -v, [c * c0i for c in inv], -v + rel)

    def divide(self, other: "LaurentSeries", rel_prec: int | None = None):
        return self * other.invert(rel_prec)

    def __truediv__(self, other):
        if isinstance(other, (int, ExtFieldElem)):
            other = LaurentSeries.constant(self._as_elem(other))
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return self.divide(other)

    def __eq__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return (self.field == other.field and self.shift == other.shift
                and self.coeffs == other.coeffs and self.prec == other.prec)

    def __hash__(self):
        return hash((self.field.q, self.shift, self.coeffs, self.prec))

    def __bool__(self):
        return bool(self.coeffs)

    def derivative(self) -> "LaurentSeries":
        """Termwise derivative d/dt; output precision drops by one."""
        prec = INF if self.prec is INF else self.prec - 1
        out = []
        p = self.field.p
        for idx, c in enumerate(self.coeffs):
            i = self.shift + idx
            out.append(c * (i % p))
        return LaurentSeries(self.field, self.shift - 1, out, prec)

    def __repr__(self):
        return format_series(self)


# ----------------------------------------------------------------------
# module-level operations
# ----------------------------------------------------------------------

def derivative(x: LaurentSeries) -> LaurentSeries:
    return x.derivative()


def residue(x: LaurentSeries, y: LaurentSeries) -> ExtFieldElem:
    """res(x dy): the t^(-1) coefficient of x * dy/dt.

    Raises PrecisionError when that coefficient is not determined.
    """
    w = x * y.derivative()
    return w.coefficient(-1)


def substitute(x: LaurentSeries, s: LaurentSeries,
               rel_prec: int | None = None) -> LaurentSeries:
    """x(s(w)) for a substitution series s of valuation 1 (no reversion)."""
    if s.known_zero or s.valuation() != 1:
        raise ValueError("substitution series must have valuation 1")
    if x.is_exact_zero:
        return x
    caps = []
    if x.prec is not INF:
        caps.append(x.prec)
    if s.prec is not INF:
        caps.append(s.prec)
    if rel_prec is not None:
        caps.append(x.shift + rel_prec)
    if not caps:
        raise ValueError("substitution into exact series needs a precision")
    W = max(3, min(caps)) + 2 * max(0, -x.shift) + 2
    return _compose(x, s.truncate(W) if s.prec is INF else s, W)


def recompose_in_prime(x: LaurentSeries, u: LaurentSeries,
                       rel_prec: int | None = None) -> LaurentSeries:
    """Rewrite x as a series in the new prime element u (valuation 1).

    Computes the compositional inverse s of u (u(s(w)) = w) and returns
    x(s(w)); the result is the series of x in powers of u to the maximal
    provable precision.  When everything in sight is exact a relative
    precision must be supplied, except for the trivial case u = t.
    """
    if u.known_zero or u.valuation() != 1:
        raise ValueError("new prime element must have valuation 1")
    if u.is_exact and len(u.coeffs) == 1 and u.coeffs[0] == u.field.one:
        return x  # u = t
    if x.field != u.field:
        raise ValueError("mixed coefficient fields")
    if x.is_exact_zero:
        return x
    # absolute precision caps; the work precision W is generous because the
    # arithmetic itself tracks what is actually provable
    caps = []
    if x.prec is not INF:
        caps.append(x.prec)
    if u.prec is not INF:
        caps.append(u.prec)
    if rel_prec is not None:
        caps.append(x.shift + rel_prec)
    if not caps:
        raise ValueError("recomposition of exact series needs a precision")
    W = max(3, min(caps)) + 2 * max(0, -x.shift) + 2
    s = _reversion(u, W)
    return _compose(x, s, W)


def _reversion(u: LaurentSeries, W: int) -> LaurentSeries:
    """Series s with u(s(w)) = w mod w^min(W, prec(u)), by coefficient recursion."""
    F = u.field
    top = W if u.prec is INF else min(W, u.prec)
    u1 = u.coefficient_raw(1)
    u1i = u1.inverse()
    s = [F.zero, u1i]  # s_1 = 1/u1
    for k in range(2, top):
        # s_k enters the w^k coefficient of u(s) only through u_1 * s_k,
        # so it is fixed by the partial sums s_1..s_{k-1}
        sj = (s + [F.zero] * (k + 1 - len(s)))[:k + 1]
        cur = sj[:]
        val = F.zero
        j = 1
        while True:
            uj = u.coefficient_raw(j)
            if uj:
                val = val + uj * cur[k]
            j += 1
            if j > k:
                break
            cur = _poly_mul_trunc(cur, sj, k + 1)
        s.append(-val * u1i)
    return LaurentSeries(F, 0, s, top)


def _poly_mul_trunc(a, b, n):
    F = a[0].spec
    out = [F.zero] * n
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j in range(min(len(b), n - i)):
            if b[j]:
                out[i + j] = out[i + j] + ai * b[j]
    return out


def _compose(x: LaurentSeries, s: LaurentSeries, W: int) -> LaurentSeries:
    """x(s(w)); s has valuation 1.  Work is truncated at w^W."""
    F = x.field
    hi = x.shift + len(x.coeffs) - 1
    base = max(x.shift, 0)
    pos = LaurentSeries.zero(F)
    for i in range(hi, base - 1, -1):
        pos = (pos * s + x.coefficient_raw(i)).truncate(W)
    if base > 0 and not pos.is_exact_zero:
        pos = (pos * s ** base).truncate(W)
    acc = pos
    if x.shift < 0:
        sinv = s.invert()
        neg = LaurentSeries.zero(F)
        for i in range(x.shift, 0):
            c = x.coefficient_raw(i)
            if c:
                neg = neg + LaurentSeries.constant(c) * (sinv ** (-i))
        acc = acc + neg.truncate(W)
    if x.prec is not INF:
        acc = acc.truncate(x.prec)
    return acc


def log_derivative_order(x: LaurentSeries) -> int | None:
    """Least n <= p with (D+x)^n(1) = 0, or None.

    A defined order certifies that x is a logarithmic derivative D(y)/y
    (with y killed by D^n but not D^(n-1)); since D^p = 0 on a Laurent
    series field of characteristic p, n never exceeds p, so a full sweep
    up to p is conclusive.  Vanishing of a truncated operand is certified
    through t^0; if an iterate is only known to be O(t^k) for k < 1 the
    input did not carry enough precision.
    """
    F = x.field
    p = F.p
    z = LaurentSeries.one(F)
    for n in range(1, p + 1):
        z = z.derivative() + x * z
        if z.known_zero:
            if z.is_exact_zero or z.prec >= 1:
                return n
            raise PrecisionError(
                f"(D+x)^{n}(1) is O(t^{z.prec}): not enough precision to decide")
    return None


class WpStatus(enum.Enum):
    IN_WP = "IN_WP"
    UNIT_OBSTRUCTION = "UNIT_OBSTRUCTION"
    POLE_OBSTRUCTION = "POLE_OBSTRUCTION"


@dataclass
class WpReduction:
    reduced: LaurentSeries
    witness: LaurentSeries
    status: WpStatus


def wp(z: LaurentSeries) -> LaurentSeries:
    """The Artin-Schreier operator z^p - z."""
    return z.pth_power() - z


def reduce_mod_wp(x: LaurentSeries, work_prec: int = 8) -> WpReduction:
    """Reduce x modulo the image of z -> z^p - z.

    Returns (reduced, witness, status) with x - wp(witness) = reduced and
    reduced one of: a class that vanishes to the working precision (IN_WP:
    x is a wp-value, since the positive-valuation tail is always hit by a
    convergent geometric series), a nonzero constant whose absolute trace
    is nonzero (UNIT_OBSTRUCTION), or a series with a pole of order not
    divisible by p (POLE_OBSTRUCTION).  Pole parts of order mp are removed
    by subtracting wp(c^(1/p) t^(-m)); the statuses are exact statements
    about x even though the witness is truncated.
    """
    F = x.field
    p = F.p
    prime = field(p, 1)
    witness = LaurentSeries.zero(F)
    cur = x
    # pole reduction
    while cur.coeffs and cur.shift < 0:
        m = -cur.shift
        c = cur.coeffs[0]
        if m % p:
            return WpReduction(cur, witness, WpStatus.POLE_OBSTRUCTION)
        w = LaurentSeries.t_power(F, -(m // p), frobenius_power(c, F.n - 1))
        cur = cur - wp(w)
        witness = witness + w
    if cur.known_zero and cur.is_exact_zero:
        return WpReduction(cur, witness, WpStatus.IN_WP)
    # constant term: needs prec >= 1
    a0 = cur.coefficient(0)
    if a0:
        if trace_to(a0, prime):
            tail = cur - a0
            z1 = _geometric_wp_witness(tail, work_prec)
            witness = witness + z1
            return WpReduction(LaurentSeries.constant(a0), witness,
                               WpStatus.UNIT_OBSTRUCTION)
        b = artin_schreier_solve(a0)
        cur = cur - wp(LaurentSeries.constant(b))
        witness = witness + LaurentSeries.constant(b)
    # positive-valuation tail
    z1 = _geometric_wp_witness(cur, work_prec)
    witness = witness + z1
    cur = cur - wp(z1)
    return WpReduction(cur, witness, WpStatus.IN_WP)


def _geometric_wp_witness(x1: LaurentSeries, work_prec: int) -> LaurentSeries:
    """z1 = -(x1 + x1^p + x1^(p^2) + ...) so that wp(z1) = x1 + O(t^N).

    x1 must have positive valuation; the series converges t-adically and is
    truncated at the working precision (or x1's own precision).
    """
    if x1.known_zero:
        return LaurentSeries.zero(x1.field)
    assert x1.valuation() >= 1, "geometric witness needs positive valuation"
    N = x1.prec if x1.prec is not INF else work_prec
    total = LaurentSeries.zero(x1.field, N)
    term = x1.truncate(N)
    while not term.known_zero:
        total = total + term
        term = term.pth_power().truncate(N)
    return -total


# ----------------------------------------------------------------------
# text format: `t^-2 + 1 + g*t^3 + O(t^5)`
# ----------------------------------------------------------------------

_O_RE = re.compile(r"^O\(t(?:\^(-?\d+))?\)$")
_T_RE = re.compile(r"^t(?:\^(-?\d+))?$")


def parse_series(text: str, spec: FieldSpec) -> LaurentSeries:
    """Parse a series in the documented text format over the given field."""
    s = text.replace(" ", "")
    if not s:
        raise ParseError("empty series")
    if s == "0":
        return LaurentSeries.zero(spec)
    chunks = []
    sign = 1
    i = 0
    if s[0] in "+-":
        sign = -1 if s[0] == "-" else 1
        i = 1
    depth = 0
    cur = ""
    prev = ""
    for ch in s[i:]:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch in "+-" and depth == 0 and prev != "^":
            chunks.append((sign, cur))
            sign = -1 if ch == "-" else 1
            cur = ""
        else:
            cur += ch
        prev = ch
    chunks.append((sign, cur))
    terms: dict[int, object] = {}
    prec = INF
    for sgn, chunk in chunks:
        if not chunk:
            raise ParseError(f"bad series: {text!r}")
        m = _O_RE.match(chunk)
        if m:
            if prec is not INF:
                raise ParseError("more than one O(...) term")
            prec = int(m.group(1)) if m.group(1) else 1
            continue
        if "t" in chunk:
            ci = chunk.index("t")
            coeff_part = chunk[:ci].rstrip("*")
            m = _T_RE.match(chunk[ci:])
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
    return LaurentSeries.from_terms(spec, terms, prec)


def format_series(x: LaurentSeries) -> str:
    """Inverse of parse_series: ascending exponents, trailing O-term."""
    parts = []
    for i, c in x.terms():
        cs = format_element(c)
        multi = "+" in cs
        if i == 0:
            parts.append(f"({cs})" if multi else cs)
        else:
            tpw = "t" if i == 1 else f"t^{i}"
            if c == 1:
                parts.append(tpw)
            else:
                parts.append((f"({cs})" if multi else cs) + "*" + tpw)
    if x.prec is not INF:
        parts.append(f"O(t^{x.prec})")
    if not parts:
        return "0"
    return " + ".join(parts)
