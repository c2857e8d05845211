"""Arithmetic in GF(p) and its extensions GF(p^n), p <= 13, n <= 12.

All fields of one characteristic live in a single tower with canonical
embeddings: the defining polynomials in `tower_table` are primitive and
norm-compatible, so GF(p^m) sits inside GF(p^n) (for m | n) by sending the
degree-m generator to g**((p**n-1)//(p**m-1)) where g is the degree-n
generator.  Elements are immutable; all operations are pure functions.
"""

from __future__ import annotations

import functools
import re

from .errors import ParseError
from .tower_table import TOWER_POLY

MAX_CHAR = 13
MAX_DEGREE = 12


@functools.lru_cache(maxsize=None)
def field(p: int, n: int = 1) -> "FieldSpec":
    """The canonical GF(p^n) from the built-in tower table."""
    return FieldSpec(p, n)


def field_of_order(q: int) -> "FieldSpec":
    """GF(q) for a prime power q."""
    p = 2
    m = q
    while p <= m:
        if m % p == 0:
            n = 0
            while m % p == 0:
                m //= p
                n += 1
            if m != 1:
                raise ValueError(f"{q} is not a prime power")
            return field(p, n)
        p += 1
    raise ValueError(f"{q} is not a prime power")


class FieldSpec:
    """A finite field GF(p^n) with its fixed defining polynomial.

    Use the `field(p, n)` factory; direct construction bypasses the cache.
    """

    def __init__(self, p: int, n: int):
        if (p, n) not in TOWER_POLY:
            raise ValueError(f"no table entry for GF({p}^{n}); "
                             f"p <= {MAX_CHAR} and n <= {MAX_DEGREE} required")
        self.p = p
        self.n = n
        self.q = p ** n
        self.poly = TOWER_POLY[(p, n)]
        # reduction rows: _red[k] = x^(n+k) mod poly, for k in 0..n-2
        self._red = self._reduction_rows()
        self.zero = ExtFieldElem(self, (0,) * n)
        self.one = ExtFieldElem(self, self._vec(1))
        if n > 1:
            self.gen = ExtFieldElem(self, self._vec_x())
        else:
            # table entry is x - g for the least primitive root g
            self.gen = ExtFieldElem(self, ((p - self.poly[0]) % p,))
        self._embed_cache: dict[int, list[tuple[int, ...]]] = {}

    def _vec(self, c):
        return (c % self.p,) + (0,) * (self.n - 1)

    def _vec_x(self):
        return (0, 1) + (0,) * (self.n - 2)

    def _reduction_rows(self):
        p, n, f = self.p, self.n, self.poly
        rows = []
        # x^n = -(f_0 + f_1 x + ... + f_{n-1} x^{n-1})
        cur = [(-f[i]) % p for i in range(n)]
        rows.append(tuple(cur))
        for _ in range(n - 2):
            top = cur[n - 1]
            cur = [0] + cur[:-1]
            if top:
                cur = [(cur[i] + top * rows[0][i]) % p for i in range(n)]
            rows.append(tuple(cur))
        return rows

    # -- structure ----------------------------------------------------

    def element(self, coeffs) -> "ExtFieldElem":
        """Element from an int (prime-field constant) or coefficient list."""
        if isinstance(coeffs, int):
            return ExtFieldElem(self, self._vec(coeffs))
        cs = tuple(int(c) % self.p for c in coeffs)
        if len(cs) > self.n:
            raise ValueError("coefficient vector too long")
        return ExtFieldElem(self, cs + (0,) * (self.n - len(cs)))

    def elements(self):
        """All q elements, lexicographic in the coefficient vector."""
        vec = [0] * self.n
        for _ in range(self.q):
            yield ExtFieldElem(self, tuple(vec))
            for i in range(self.n - 1, -1, -1):
                vec[i] += 1
                if vec[i] < self.p:
                    break
                vec[i] = 0

    def is_subfield_of(self, other: "FieldSpec") -> bool:
        return self.p == other.p and other.n % self.n == 0

    def _embedding_powers(self, sub_n: int):
        """Powers eta^0..eta^(sub_n-1) of the canonical image of the
        degree-sub_n generator, as coefficient tuples."""
        if sub_n not in self._embed_cache:
            e = (self.q - 1) // (self.p ** sub_n - 1)
            eta = self.gen ** e if self.n > 1 else self.gen
            pow_list = [self.one.coeffs]
            acc = self.one
            for _ in range(sub_n - 1):
                acc = acc * eta
                pow_list.append(acc.coeffs)
            self._embed_cache[sub_n] = pow_list
        return self._embed_cache[sub_n]

    def __repr__(self):
        return f"GF({self.q})"

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and (self.p, self.n) == (other.p, other.n)

    def __hash__(self):
        return hash((self.p, self.n))


class ExtFieldElem:
    """Element of GF(p^n): a coefficient vector in the generator basis."""

    __slots__ = ("spec", "coeffs")

    def __init__(self, spec: FieldSpec, coeffs: tuple):
        self.spec = spec
        self.coeffs = coeffs

    def _coerce(self, other):
        if isinstance(other, ExtFieldElem):
            if other.spec != self.spec:
                raise ValueError(f"mixed fields {self.spec} and {other.spec}")
            return other
        if isinstance(other, int):
            return ExtFieldElem(self.spec, self.spec._vec(other))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p = self.spec.p
        return ExtFieldElem(self.spec, tuple(
            (a + b) % p for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        p = self.spec.p
        return ExtFieldElem(self.spec, tuple((-a) % p for a in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p = self.spec.p
        return ExtFieldElem(self.spec, tuple(
            (a - b) % p for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        spec = self.spec
        p, n = spec.p, spec.n
        a, b = self.coeffs, o.coeffs
        if n == 1:
            return ExtFieldElem(spec, ((a[0] * b[0]) % p,))
        prod = [0] * (2 * n - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        out = [c % p for c in prod[:n]]
        red = spec._red
        for k in range(n - 1):
            c = prod[n + k] % p
            if c:
                row = red[k]
                for i in range(n):
                    out[i] = (out[i] + c * row[i]) % p
        return ExtFieldElem(spec, tuple(out))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        spec = self.spec
        if not any(self.coeffs):
            if e < 0:
                raise ZeroDivisionError("0 has no inverse")
            return spec.one if e == 0 else spec.zero
        e %= spec.q - 1
        r = spec.one
        b = self
        while e:
            if e & 1:
                r = r * b
            b = b * b
            e >>= 1
        return r

    def inverse(self):
        return self ** (self.spec.q - 2)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        return o * self.inverse()

    def __eq__(self, other):
        if isinstance(other, int):
            return self.coeffs == self.spec._vec(other)
        return (isinstance(other, ExtFieldElem)
                and self.spec == other.spec and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.spec.q, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def __repr__(self):
        return format_element(self)


# ----------------------------------------------------------------------
# operations
# ----------------------------------------------------------------------

def frobenius_power(a: ExtFieldElem, k: int) -> ExtFieldElem:
    """a^(p^k); k may be negative since Frobenius has order n."""
    spec = a.spec
    k %= spec.n
    if k == 0 or not a:
        return a
    return a ** pow(spec.p, k, spec.q - 1)


def trace_to(a: ExtFieldElem, sub: FieldSpec) -> ExtFieldElem:
    """Trace from a's field down to the subfield `sub`."""
    spec = a.spec
    if not sub.is_subfield_of(spec):
        raise ValueError(f"{sub} is not a subfield of {spec}")
    d = spec.n // sub.n
    acc = a
    b = a
    for _ in range(d - 1):
        b = frobenius_power(b, sub.n)
        acc = acc + b
    return unembed(acc, sub)


def norm_to(a: ExtFieldElem, sub: FieldSpec) -> ExtFieldElem:
    """Norm from a's field down to the subfield `sub`."""
    spec = a.spec
    if not sub.is_subfield_of(spec):
        raise ValueError(f"{sub} is not a subfield of {spec}")
    d = spec.n // sub.n
    acc = a
    b = a
    for _ in range(d - 1):
        b = frobenius_power(b, sub.n)
        acc = acc * b
    return unembed(acc, sub)


def embed(a: ExtFieldElem, target: FieldSpec) -> ExtFieldElem:
    """The canonical tower embedding of a into the larger field."""
    spec = a.spec
    if spec == target:
        return a
    if not spec.is_subfield_of(target):
        raise ValueError(f"{spec} does not embed in {target}")
    powers = target._embedding_powers(spec.n)
    p = target.p
    out = [0] * target.n
    for c, row in zip(a.coeffs, powers):
        if c:
            for i in range(target.n):
                out[i] = (out[i] + c * row[i]) % p
    return ExtFieldElem(target, tuple(out))


def unembed(a: ExtFieldElem, sub: FieldSpec) -> ExtFieldElem:
    """Inverse of `embed` on its image; raises if a is not in the subfield."""
    spec = a.spec
    if spec == sub:
        return a
    if not sub.is_subfield_of(spec):
        raise ValueError(f"{sub} is not a subfield of {spec}")
    powers = spec._embedding_powers(sub.n)
    # solve sum_j x_j * powers[j] = a.coeffs over GF(p)
    cols = [list(row) for row in powers]
    sol = _solve_mod_p(cols, list(a.coeffs), spec.p)
    if sol is None:
        raise ValueError(f"{a!r} does not lie in {sub}")
    return ExtFieldElem(sub, tuple(sol))


def artin_schreier_solve(a: ExtFieldElem) -> ExtFieldElem | None:
    """A solution z of z^p - z = a, or None.

    Solvable exactly when the absolute trace of a vanishes; the returned
    solution is the lexicographically least coefficient vector (the p
    solutions differ by GF(p)).
    """
    spec = a.spec
    p, n = spec.p, spec.n
    cols = []
    for i in range(n):
        e = spec.element([0] * i + [1])
        w = frobenius_power(e, 1) - e
        cols.append(list(w.coeffs))
    sol = _solve_mod_p(cols, list(a.coeffs), p)
    if sol is None:
        return None
    # kernel of wp is GF(p): shift by constants, take the lex-least vector
    best = None
    for c in range(p):
        cand = ((sol[0] + c) % p,) + tuple(sol[1:])
        if best is None or cand < best:
            best = cand
    return ExtFieldElem(spec, best)


def _solve_mod_p(cols, rhs, p):
    """Solve sum_j x_j cols[j] = rhs mod p; None if inconsistent."""
    m = len(rhs)
    k = len(cols)
    M = [[cols[j][i] % p for j in range(k)] + [rhs[i] % p] for i in range(m)]
    pivots = []
    row = 0
    for col in range(k):
        piv = next((r for r in range(row, m) if M[r][col]), None)
        if piv is None:
            continue
        M[row], M[piv] = M[piv], M[row]
        inv = pow(M[row][col], -1, p)
        M[row] = [(v * inv) % p for v in M[row]]
        for r in range(m):
            if r != row and M[r][col]:
                f = M[r][col]
                M[r] = [(M[r][j] - f * M[row][j]) % p for j in range(k + 1)]
        pivots.append(col)
        row += 1
    for r in range(row, m):
        if M[r][k]:
            return None
    sol = [0] * k
    for r, col in enumerate(pivots):
        sol[col] = M[r][k]
    return sol


# ----------------------------------------------------------------------
# text format: constants as decimal digits, generator as g
# ----------------------------------------------------------------------

_FIELD_RE = re.compile(r"^GF\((\d+)\)$")
_TERM_RE = re.compile(r"^(?:(\d+)\*?)?(g)(?:\^(\d+))?$|^(\d+)$")


def parse_field(text: str) -> FieldSpec:
    """Parse a field name like GF(4)."""
    m = _FIELD_RE.match(text.strip())
    if not m:
        raise ParseError(f"bad field name: {text!r}")
    try:
        return field_of_order(int(m.group(1)))
    except ValueError as e:
        raise ParseError(str(e)) from None


def parse_element(text: str, spec: FieldSpec) -> ExtFieldElem:
    """Parse an element like `g^2+g+1` or `2*g+1` or `7`."""
    s = text.replace(" ", "")
    if not s:
        raise ParseError("empty element")
    out = spec.zero
    sign = 1
    i = 0
    if s[0] in "+-":
        sign = -1 if s[0] == "-" else 1
        i = 1
    term = ""
    for ch in s[i:] + "+":
        if ch in "+-":
            if not term:
                raise ParseError(f"bad element: {text!r}")
            m = _TERM_RE.match(term)
            if not m:
                raise ParseError(f"bad term {term!r} in {text!r}")
            if m.group(4) is not None:
                val = spec.element(int(m.group(4)))
            else:
                c = int(m.group(1)) if m.group(1) else 1
                k = int(m.group(3)) if m.group(3) else 1
                if k >= spec.n and spec.n > 1:
                    val = spec.element(c) * spec.gen ** k
                elif spec.n == 1:
                    raise ParseError(f"no generator g in {spec!r}")
                else:
                    val = spec.element([0] * k + [c])
            out = out + (val if sign == 1 else -val)
            sign = -1 if ch == "-" else 1
            term = ""
        else:
            term += ch
    return out


def format_element(a: ExtFieldElem) -> str:
    """Inverse of parse_element, highest power first."""
    if not a:
        return "0"
    parts = []
    for k in range(a.spec.n - 1, -1, -1):
        c = a.coeffs[k]
        if not c:
            continue
        if k == 0:
            parts.append(str(c))
        else:
            head = "" if c == 1 else f"{c}*"
            parts.append(f"{head}g" + (f"^{k}" if k > 1 else ""))
    return "+".join(parts)
