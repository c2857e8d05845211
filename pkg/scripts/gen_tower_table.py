#!/usr/bin/env python3
"""Generate src/ffcft/tower_table.py.

For each characteristic p in {2,3,5,7,11,13} and degree n in 1..12 this
script finds a monic primitive polynomial f_{p,n} over GF(p) such that the
whole family is norm-compatible: whenever m | n, the element
x^((p^n-1)/(p^m-1)) mod f_{p,n} is a root of f_{p,m}.  Mapping the degree-m
generator to that power therefore gives canonical tower embeddings
GF(p^m) -> GF(p^n) that commute with each other.

The construction is the usual one for compatible ("pseudo-Conway") systems:
pick any irreducible polynomial to realise GF(p^n), pick a generator gamma
of its multiplicative group, locate roots of the already-chosen subfield
polynomials, read off their discrete logarithms, and solve for an exponent
k (coprime to p^n-1) such that gamma^k satisfies every subfield constraint
at once.  f_{p,n} is the minimal polynomial of gamma^k.

Everything is verified before being emitted; the package test suite
re-verifies the table with independent arithmetic.

Usage: python scripts/gen_tower_table.py > src/ffcft/tower_table.py
"""

from __future__ import annotations

import random
import sys
from math import gcd

PRIMES = [2, 3, 5, 7, 11, 13]
MAX_DEGREE = 12

rng = random.Random(20240801)


# ----------------------------------------------------------------------
# polynomial arithmetic over GF(p): polys are tuples of ints, ascending.
# ----------------------------------------------------------------------

def ptrim(a):
    i = len(a)
    while i > 0 and a[i - 1] == 0:
        i -= 1
    return tuple(a[:i])


def padd(a, b, p):
    n = max(len(a), len(b))
    return ptrim([((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p
                  for i in range(n)])


def psub(a, b, p):
    n = max(len(a), len(b))
    return ptrim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p
                  for i in range(n)])


def pmul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return ptrim(out)


def pdivmod(a, b, p):
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    inv = pow(lb, -1, p)
    q = [0] * max(0, len(a) - db)
    while len(ptrim(a)) - 1 >= db and a:
        a = list(ptrim(a))
        if len(a) - 1 < db:
            break
        c = (a[-1] * inv) % p
        k = len(a) - 1 - db
        q[k] = c
        for j in range(len(b)):
            a[k + j] = (a[k + j] - c * b[j]) % p
    return ptrim(q), ptrim(a)


def pmod(a, b, p):
    return pdivmod(a, b, p)[1]


def pgcd(a, b, p):
    while b:
        a, b = b, pmod(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = tuple((c * inv) % p for c in a)
    return a


def ppowmod(a, e, mod, p):
    r = (1,)
    a = pmod(a, mod, p)
    while e:
        if e & 1:
            r = pmod(pmul(r, a, p), mod, p)
        a = pmod(pmul(a, a, p), mod, p)
        e >>= 1
    return r


def is_irreducible(f, p):
    """Rabin test: x^(p^n) = x mod f and gcd(x^(p^(n/r)) - x, f) = 1."""
    n = len(f) - 1
    if n <= 0:
        return False
    x = (0, 1)
    xq = x
    for _ in range(n):
        xq = ppowmod(xq, p, f, p)
    if xq != pmod(x, f, p):
        return False
    for r in {q for q in range(2, n + 1) if n % q == 0 and is_prime(q)}:
        xe = x
        for _ in range(n // r):
            xe = ppowmod(xe, p, f, p)
        if len(pgcd(psub(xe, x, p), f, p)) > 1:
            return False
    return True


def is_prime(m):
    if m < 2:
        return False
    d = 2
    while d * d <= m:
        if m % d == 0:
            return False
        d += 1
    return True


def find_irreducible(p, n):
    """First monic irreducible of degree n over GF(p) in lex order."""
    for tail in lex_tuples(p, n):
        f = tail + (1,)
        if is_irreducible(f, p):
            return f
    raise AssertionError("no irreducible found")


def lex_tuples(p, n):
    total = p ** n
    for v in range(total):
        out = []
        x = v
        for _ in range(n):
            out.append(x % p)
            x //= p
        yield tuple(out)


# ----------------------------------------------------------------------
# factoring p^n - 1 via cyclotomic polynomial values + trial division
# ----------------------------------------------------------------------

def divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def cyclotomic_value(d, p):
    """Phi_d(p) computed by dividing p^d-1 by lower cyclotomic values."""
    v = p ** d - 1
    for e in divisors(d):
        if e < d:
            v //= cyclotomic_value(e, p)
    return v


def factorize(m):
    out = {}
    for d, val in [(2, None)]:
        pass
    d = 2
    while d * d <= m:
        while m % d == 0:
            out[d] = out.get(d, 0) + 1
            m //= d
        d += 1 if d == 2 else 2
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return out


def factor_group_order(p, n):
    fac = {}
    for d in divisors(n):
        for q, e in factorize(cyclotomic_value(d, p)).items():
            fac[q] = fac.get(q, 0) + e
    return fac


# ----------------------------------------------------------------------
# arithmetic in F = GF(p)[x]/(h)
# ----------------------------------------------------------------------

class Fq:
    def __init__(self, p, h):
        self.p, self.h = p, h
        self.n = len(h) - 1

    def mul(self, a, b):
        return pmod(pmul(a, b, self.p), self.h, self.p)

    def pow(self, a, e):
        if e < 0:
            a = self.inv(a)
            e = -e
        return ppowmod(a, e, self.h, self.p)

    def inv(self, a):
        return self.pow(a, self.p ** self.n - 2)

    def add(self, a, b):
        return padd(a, b, self.p)

    def sub(self, a, b):
        return psub(a, b, self.p)


def find_generator(F, order_fac):
    """A generator of F^x, trying x+c then random elements."""
    N = F.p ** F.n - 1
    cands = [ptrim((c, 1)) for c in range(F.p)]
    while True:
        for a in cands:
            if not a:
                continue
            if all(F.pow(a, N // q) != (1,) for q in order_fac):
                return a
        cands = [ptrim(tuple(rng.randrange(F.p) for _ in range(F.n)))
                 for _ in range(20)]


# --- root finding (Cantor-Zassenhaus) for a squarefree poly over F -----

def fq_poly_mod(a, mod, F):
    """Reduce poly-over-F a modulo monic poly-over-F mod."""
    a = list(a)
    dm = len(mod) - 1
    while len(a) - 1 >= dm:
        while a and a[-1] == ():
            a.pop()
        if len(a) - 1 < dm:
            break
        c = a[-1]
        k = len(a) - 1 - dm
        for j in range(dm + 1):
            a[k + j] = F.sub(a[k + j], F.mul(c, mod[j]))
        a.pop()
    while a and a[-1] == ():
        a.pop()
    return a


def fq_poly_mul(a, b, F):
    out = [()] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai == ():
            continue
        for j, bj in enumerate(b):
            out[i + j] = F.add(out[i + j], F.mul(ai, bj))
    return out


def fq_poly_gcd(a, b, F):
    a, b = list(a), list(b)
    while b:
        # make b monic
        lead = b[-1]
        li = F.inv(lead)
        b = [F.mul(c, li) for c in b]
        a = fq_poly_mod(a, b, F)
        a, b = b, a
    if a:
        li = F.inv(a[-1])
        a = [F.mul(c, li) for c in a]
    return a


def fq_poly_powmod(a, e, mod, F):
    r = [(1,)]
    a = fq_poly_mod(list(a), mod, F)
    while e:
        if e & 1:
            r = fq_poly_mod(fq_poly_mul(r, a, F), mod, F)
        a = fq_poly_mod(fq_poly_mul(a, a, F), mod, F)
        e >>= 1
    return r


def find_root(f_coeffs, F):
    """One root in F of the squarefree, totally-split polynomial f."""
    # f given over GF(p): lift coefficients into F
    f = [((c,) if c else ()) for c in f_coeffs]
    Q = F.p ** F.n

    def roots_of(g):
        # g: monic poly over F, splits into distinct linear factors
        if len(g) == 2:
            return F.sub((), g[0])  # -constant
        while True:
            delta = ptrim(tuple(rng.randrange(F.p) for _ in range(F.n)))
            shift = [delta, (1,)]  # y + delta
            if F.p == 2:
                # trace splitting: s(y) = sum (a*y)^(2^i) for random a != 0;
                # roots r, r' separate when Tr(a*(r - r')) = 1
                a = ()
                while a == ():
                    a = ptrim(tuple(rng.randrange(F.p) for _ in range(F.n)))
                s = [()]
                t = [(), a]  # a*y
                for _ in range(Q.bit_length() - 1):
                    s = fq_poly_mod(
                        [F.add(s[i] if i < len(s) else (),
                               t[i] if i < len(t) else ())
                         for i in range(max(len(s), len(t)))], g, F)
                    t = fq_poly_powmod(t, 2, g, F)
                cand = s
            else:
                cand = fq_poly_powmod(shift, (Q - 1) // 2, g, F)
                cand = list(cand)
                if cand:
                    cand[0] = F.sub(cand[0], (1,))
                else:
                    cand = [F.sub((), (1,))]
            h = fq_poly_gcd(cand, g, F)
            if 1 < len(h) < len(g):
                return roots_of(h if len(h) <= (len(g) + 1) // 2 else
                                fq_poly_divide(g, h, F))

    def fq_poly_divide(a, b, F):
        # exact division of monic polys
        a = list(a)
        out = [()] * (len(a) - len(b) + 1)
        while len(a) >= len(b):
            c = a[-1]
            k = len(a) - len(b)
            out[k] = c
            for j in range(len(b)):
                a[k + j] = F.sub(a[k + j], F.mul(c, b[j]))
            a.pop()
        return out

    # make monic over F (it already is) and strip multiple roots (none here)
    return roots_of(f)


def bsgs_log(base, target, order, F):
    """Discrete log of target w.r.t. base in the cyclic group of given order."""
    m = int(order ** 0.5) + 1
    table = {}
    e = (1,)
    for j in range(m):
        table.setdefault(e, j)
        e = F.mul(e, base)
    factor = F.inv(F.pow(base, m))
    gamma = target
    for i in range(m + 1):
        if gamma in table:
            return (i * m + table[gamma]) % order
        gamma = F.mul(gamma, factor)
    raise AssertionError("dlog not found")


def crt(pairs):
    """Solve x = a_i mod m_i allowing non-coprime moduli; None if inconsistent."""
    a, m = 0, 1
    for b, k in pairs:
        g = gcd(m, k)
        if (b - a) % g:
            return None, None
        lcm = m // g * k
        # x = a + m*t = b mod k  =>  t = (b-a)/g * inv(m/g) mod k/g
        t = ((b - a) // g * pow(m // g, -1, k // g)) % (k // g) if k // g > 1 else 0
        a = (a + m * t) % lcm
        m = lcm
    return a, m


# ----------------------------------------------------------------------
# main construction
# ----------------------------------------------------------------------

def minimal_polynomial(elem, F):
    """Minimal polynomial of elem over GF(p) (must have degree F.n)."""
    p, n = F.p, F.n
    rows = []
    e = (1,)
    for i in range(n + 1):
        rows.append([e[j] if j < len(e) else 0 for j in range(n)])
        e = F.mul(e, elem)
    # find monic dependency: x^n = -(c_0 + ... + c_{n-1} x^{n-1})
    # solve rows[0..n-1]^T c = rows[n]
    A = [[rows[i][j] for i in range(n)] for j in range(n)]  # n x n
    b = [rows[n][j] for j in range(n)]
    c = solve_mod_p(A, b, p)
    assert c is not None, "element generates a proper subfield"
    coeffs = [(-ci) % p for ci in c] + [1]
    return tuple(coeffs)


def solve_mod_p(A, b, p):
    n = len(b)
    M = [row[:] + [b[i]] for i, row in enumerate(A)]
    col = 0
    pivots = []
    for col in range(n):
        piv = next((r for r in range(len(pivots), n) if M[r][col] % p), None)
        if piv is None:
            return None
        M[len(pivots)], M[piv] = M[piv], M[len(pivots)]
        r = len(pivots)
        inv = pow(M[r][col], -1, p)
        M[r] = [(v * inv) % p for v in M[r]]
        for rr in range(n):
            if rr != r and M[rr][col] % p:
                f = M[rr][col]
                M[rr] = [(M[rr][j] - f * M[r][j]) % p for j in range(n + 1)]
        pivots.append(col)
    return [M[i][n] for i in range(n)]


def build_table():
    table = {}
    for p in PRIMES:
        # degree 1: x - g for the least primitive root g
        g = min(a for a in range(1, p)
                if all(pow(a, (p - 1) // q, p) != 1
                       for q in factorize(p - 1)))
        table[(p, 1)] = ((-g) % p, 1)
        for n in range(2, MAX_DEGREE + 1):
            table[(p, n)] = build_entry(p, n, table)
            sys.stderr.write(f"done p={p} n={n}\n")
    return table


def build_entry(p, n, table):
    N = p ** n - 1
    order_fac = factor_group_order(p, n)
    h = find_irreducible(p, n)
    F = Fq(p, h)
    gamma = find_generator(F, order_fac)

    maximal = [m for m in divisors(n)
               if m < n and not any(m < d < n and d % m == 0 for d in divisors(n))]
    # collect dlog constraints k = e_m * p^j (mod p^m - 1), one conjugate choice per m
    choices = []
    for m in maximal:
        Nm = p ** m - 1
        root = find_root(table[(p, m)], F)
        base = F.pow(gamma, N // Nm)
        e = bsgs_log(base, root, Nm, F)
        assert gcd(e, Nm) == 1
        choices.append([(e * pow(p, j, Nm)) % Nm for j in range(m)])

    def combos(idx):
        if idx == len(choices):
            yield []
            return
        for v in choices[idx]:
            for rest in combos(idx + 1):
                yield [v] + rest

    for combo in combos(0):
        pairs = [(v, p ** m - 1) for v, m in zip(combo, maximal)]
        k0, L = crt(pairs) if pairs else (1, 1)
        if k0 is None:
            continue
        k = k0 if k0 else L
        for _ in range(200000):
            if gcd(k, N) == 1:
                delta = F.pow(gamma, k)
                f = minimal_polynomial(delta, F)
                verify_entry(p, n, f, table)
                return f
            k += L
    raise AssertionError(f"no compatible exponent for p={p}, n={n}")


def verify_entry(p, n, f, table):
    assert len(f) == n + 1 and f[-1] == 1
    assert is_irreducible(f, p)
    F = Fq(p, f)
    N = p ** n - 1
    x = (0, 1)
    for q in factor_group_order(p, n):
        assert F.pow(x, N // q) != (1,), "not primitive"
    for m in divisors(n):
        if m == n:
            continue
        eta = F.pow(x, N // (p ** m - 1))
        fm = table[(p, m)]
        val = ()
        power = (1,)
        for c in fm:
            if c:
                val = F.add(val, F.mul((c % p,), power))
            power = F.mul(power, eta)
        assert val == (), f"incompatible with subfield degree {m}"


def emit(table):
    print('"""Defining polynomials for the finite-field towers.')
    print()
    print("Generated by scripts/gen_tower_table.py; do not edit by hand.")
    print()
    print("TOWER_POLY[(p, n)] is the coefficient tuple (ascending, monic) of the")
    print("defining polynomial of GF(p^n).  Every entry is primitive, and the")
    print("family is norm-compatible: for m | n the power x**((p**n-1)//(p**m-1))")
    print("of the degree-n generator is a root of the degree-m entry, which is")
    print("what makes the canonical tower embeddings commute.")
    print('"""')
    print()
    print("TOWER_POLY = {")
    for (p, n), f in sorted(table.items()):
        print(f"    ({p}, {n}): {f!r},")
    print("}")


if __name__ == "__main__":
    emit(build_table())
