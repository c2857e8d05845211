"""The residue pairing behind degree-p Artin-Schreier extensions.

Locally psi_P(x, y) = Tr(res(x dy/y)) pairs the additive group of the
completion with its units into GF(p); globally psi(x, alpha) sums the
local pairings over the finitely many contributing places.  The zeroes of
the pairing control how a place behaves in the extension obtained by
adjoining a root of Z^p - Z = x: pole order not divisible by p means
ramified, a residue obstruction means inert, and a full local solution
means the place splits.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass

from .adele_idele import Adele, Idele, _is_series
from .errors import PrecisionError
from .finite_field import (ExtFieldElem, FieldSpec, field, frobenius_power,
                           trace_to, _solve_mod_p)
from .function_field import (Place, Poly, RationalFunction, divisor_of,
                             factor, local_expand_root, place_lift,
                             place_root, places_up_to_degree, residue_value,
                             valuation_at)
from .laurent_series import (INF, LaurentSeries, reduce_mod_wp, wp, WpStatus)


def psi_local(x: LaurentSeries, y: LaurentSeries) -> int:
    """psi_P(x, y) = Tr(res(x dy/y)) in GF(p), returned as an int.

    Additive in x; turns products in y into sums.  Insufficient precision
    raises rather than guessing."""
    if y.known_zero:
        if y.is_exact_zero:
            raise ValueError("y must be a nonzero local element")
        raise PrecisionError("y has no known leading coefficient")
    dy = y.derivative()
    if dy.is_exact_zero:
        return 0
    if y.is_exact:
        # choose enough terms of 1/y to pin down the t^(-1) coefficient
        rel = max(1, 1 - x.shift - dy.shift + y.shift)
        w = x * dy * y.invert(rel)
    else:
        w = x * dy * y.invert()
    res = w.coefficient(-1)
    prime = field(res.spec.p, 1)
    return trace_to(res, prime).coeffs[0]


def verify_local_kernel(spec: FieldSpec, precision: int,
                        unit_window: int = 2) -> dict:
    """Exhaustive check of the local kernel description over GF(q)((t)).

    Sweeps every integral x supported on t^0..t^(precision-1) and every
    y = t^n u with n < 2p and u running over a family of units, and checks
    psi_P(x, y) = 0 exactly when p | n or x is a wp-value (decided by
    reduce_mod_wp).  Returns a report with any counterexamples."""
    if spec.q > 16 or precision > 5:
        raise ValueError("exhaustive sweep is limited to q <= 16, precision <= 5")
    p = spec.p
    elems = list(spec.elements())
    units = [LaurentSeries.constant(c) for c in elems if c]
    for c in elems:
        if c:
            for j in range(1, unit_window):
                units.append(LaurentSeries.from_terms(spec, {0: spec.one, j: c}))
    checked = 0
    counterexamples = []
    for coeffs in itertools.product(elems, repeat=precision):
        x = LaurentSeries(spec, 0, coeffs, INF)
        in_wp = reduce_mod_wp(x, work_prec=precision * p + 1).status == WpStatus.IN_WP
        for nexp in range(2 * p):
            for u in units:
                y = LaurentSeries.t_power(spec, nexp) * u
                val = psi_local(x, y)
                expected_zero = (nexp % p == 0) or in_wp
                checked += 1
                if (val == 0) != expected_zero:
                    counterexamples.append({
                        "x": repr(x), "y": repr(y), "psi": val,
                        "p_divides_v": nexp % p == 0, "x_in_wp": in_wp})
    return {"checked": checked, "counterexamples": counterexamples,
            "passed": not counterexamples}


def relevant_places(x: RationalFunction, alpha: Idele) -> list:
    """Places that can contribute to psi(x, alpha): support of the
    corrections, zeros and poles of x and of the rational part, and
    infinity.  Everywhere else x is integral and the component is a unit,
    so the local term vanishes."""
    places = set(alpha.corrections)
    places.update(divisor_of(x).support())
    if alpha.rational_part != RationalFunction.one(alpha.field):
        places.update(divisor_of(alpha.rational_part).support())
    places.add(Place.infinity(alpha.field))
    return sorted(places, key=Place.sort_key)


def psi_global(x: RationalFunction, alpha: Idele) -> int:
    """psi(x, alpha) = sum over P of psi_P(x, alpha_P), in GF(p)."""
    if x.is_zero:
        raise ValueError("x must be nonzero")
    if x.field != alpha.field:
        raise ValueError("x and alpha live over different base fields")
    p = x.field.p
    total = 0
    for P in relevant_places(x, alpha):
        vx = valuation_at(x, P)
        v_a = alpha.valuation_at(P)
        # residues of differentials do not depend on the prime, so expand
        # in the cheap root prime; the binding precision constraint is on
        # dy: the unknown tail of y meets x/y at prec(y) - 1 + v(x) - v(y)
        xs = local_expand_root(x, P, max(2, 2 - vx))
        ys = alpha.local_series(P, abs_prec=1 - vx + v_a + 1, prime="root")
        total = (total + psi_local(xs, ys)) % p
    return total


class PlaceClass(enum.Enum):
    SPLIT = "SPLIT"
    INERT = "INERT"
    RAMIFIED = "RAMIFIED"


def classify_place_in_AS_ext(x: RationalFunction, P: Place,
                             check_degenerate: bool = True) -> PlaceClass:
    """How P behaves in the degree-p extension adjoining a root of
    Z^p - Z = x.

    The local reduction of x modulo wp-values decides it: fully reducible
    means split, a residue constant with nonzero trace means inert (for
    prime degree the obstruction generates the whole residue extension),
    and a pole of order prime to p means ramified."""
    if check_degenerate:
        if x.is_zero or _solve_wp_linear(x, x.num.degree + x.den.degree + 1) is not None:
            raise ValueError("x = z^p - z globally: the extension is degenerate")
    return _classify_by_reduction(x, P)


def _classify_by_reduction(x: RationalFunction, P: Place) -> PlaceClass:
    # wp-membership, pole orders and the obstruction trace are intrinsic,
    # so the cheap root-prime expansion decides the status
    vx = valuation_at(x, P)
    rel = max(2, -vx + 2)
    xs = local_expand_root(x, P, rel)
    status = reduce_mod_wp(xs).status
    return {WpStatus.IN_WP: PlaceClass.SPLIT,
            WpStatus.UNIT_OBSTRUCTION: PlaceClass.INERT,
            WpStatus.POLE_OBSTRUCTION: PlaceClass.RAMIFIED}[status]


def splitting_table(x: RationalFunction, max_degree: int) -> list:
    """Classification of every place of degree <= max_degree, with the
    obstruction witness (the residue constant for inert places, the pole
    order for ramified ones)."""
    rows = []
    for P in places_up_to_degree(x.field, max_degree):
        vx = valuation_at(x, P)
        xs = local_expand_root(x, P, max(2, -vx + 2))
        red = reduce_mod_wp(xs)
        cls = {WpStatus.IN_WP: PlaceClass.SPLIT,
               WpStatus.UNIT_OBSTRUCTION: PlaceClass.INERT,
               WpStatus.POLE_OBSTRUCTION: PlaceClass.RAMIFIED}[red.status]
        if cls is PlaceClass.INERT:
            witness = repr(red.reduced.coefficient(0))
        elif cls is PlaceClass.RAMIFIED:
            witness = f"pole order {-red.reduced.valuation()}"
        else:
            witness = ""
        rows.append({"place": str(P), "degree": str(P.degree),
                     "class": cls.value, "witness": witness})
    return rows


def splitting_oracle(x: RationalFunction, P: Place) -> PlaceClass:
    """Independent classification by factoring Z^p - Z - x in the residue
    field after stripping poles with exact global arithmetic.

    Pole parts of order mp are removed by subtracting wp of an explicit
    rational function; what remains is evaluated at the place and the
    Artin-Schreier polynomial is factored over the residue field by
    direct root counting."""
    p = x.field.p
    cur = x
    while True:
        v = valuation_at(cur, P) if not cur.is_zero else 0
        if cur.is_zero or v >= 0:
            break
        if (-v) % p:
            return PlaceClass.RAMIFIED
        m = -v
        lead = _local_leading_coeff(cur, P, v)
        root = frobenius_power(lead, lead.spec.n - 1)  # p-th root
        lift = place_lift(root, P)
        if P.is_infinite:
            w = RationalFunction(Poly.T(x.field) ** (m // p)) * lift
        else:
            w = RationalFunction(lift, P.poly ** (m // p))
        cur = cur - (w ** p - w)
    c0 = residue_value(cur, P) if not cur.is_zero else x.field.zero
    R = P.residue_field()
    roots = sum(1 for z in R.elements() if z ** p - z == c0)
    assert roots in (0, p), "Z^p - Z - c splits into equal-degree factors"
    return PlaceClass.SPLIT if roots else PlaceClass.INERT


def _local_leading_coeff(x: RationalFunction, P: Place, v: int) -> ExtFieldElem:
    """Leading coefficient of x at P in the canonical prime t = f.

    Computed from the root-prime leading coefficient: t = f'(alpha) u +
    O(u^2), so the coefficients differ by f'(alpha)^v."""
    c_u = local_expand_root(x, P, 1).coefficient(v)
    if P.is_infinite or P.degree == 1:
        return c_u
    scale = P.poly.derivative().evaluate(place_root(P))
    return c_u * scale ** (-v)


@dataclass
class WpVerdict:
    """Outcome of the global search for x = z^p - z."""

    kind: str  # SOLVED | LOCALLY_OBSTRUCTED | UNDECIDED
    witness: RationalFunction | None = None
    place: Place | None = None

    def __repr__(self):
        if self.kind == "SOLVED":
            return f"SOLVED({self.witness!r})"
        if self.kind == "LOCALLY_OBSTRUCTED":
            return f"LOCALLY_OBSTRUCTED({self.place})"
        return "UNDECIDED"


def in_wp_global(x: RationalFunction, degree_bound: int) -> WpVerdict:
    """Decide x = z^p - z over the global field, or certify an obstruction.

    A global solution forces den(z)^p = den(x) and deg-bounds on the
    numerator, so the search is a finite GF(p)-linear solve; failing that,
    places of degree <= degree_bound are scanned for an inert or ramified
    witness, which certifies that no solution exists anywhere."""
    if degree_bound < 1:
        raise ValueError("degree bound must be positive")
    spec = x.field
    p = spec.p
    if x.is_zero:
        return WpVerdict("SOLVED", RationalFunction.zero(spec))
    z = _solve_wp_linear(x, degree_bound)
    if z is not None:
        assert z ** p - z == x
        return WpVerdict("SOLVED", z)
    for P in places_up_to_degree(spec, degree_bound):
        cls = _classify_by_reduction(x, P)
        if cls != PlaceClass.SPLIT:
            return WpVerdict("LOCALLY_OBSTRUCTED", place=P)
    return WpVerdict("UNDECIDED")


def _solve_wp_linear(x: RationalFunction, degree_bound: int):
    """Solve z^p - z = x with bounded degrees by GF(p)-linear algebra.

    Uses z = g / h0 with h0^p = den(x) (forced); c -> c^p is GF(p)-linear
    on the coefficients of g, so the polynomial identity
    g^p - g h0^(p-1) = num(x) is a linear system."""
    spec = x.field
    p, r = spec.p, spec.n
    den_fac = factor(x.den)
    h0 = Poly.one(spec)
    for f, m in den_fac.items():
        if f.degree < 1:
            continue
        if m % p:
            return None
        h0 = h0 * f ** (m // p)
    v_inf = x.den.degree - x.num.degree
    if v_inf < 0:
        if (-v_inf) % p:
            return None
        extra = (-v_inf) // p
    else:
        extra = 0
    deg_g = h0.degree + extra
    if deg_g > degree_bound or h0.degree > degree_bound:
        return None
    n_unknown = (deg_g + 1) * r
    h0p1 = h0 ** (p - 1)
    top = max(p * deg_g, deg_g + h0p1.degree, x.num.degree) + 1
    # columns: effect of each basis coefficient of g
    cols = []
    for j in range(deg_g + 1):
        for i in range(r):
            e = spec.element([0] * i + [1])
            gp_term = frobenius_power(e, 1)  # (e T^j)^p = e^p T^(jp)
            col = [0] * (top * r)
            for k in range(r):
                col[(j * p) * r + k] += gp_term.coeffs[k]
            # minus g * h0^(p-1): subtract e * h0p1 shifted by j
            for d2 in range(h0p1.degree + 1):
                val = e * h0p1.coefficient(d2)
                for k in range(r):
                    col[(j + d2) * r + k] -= val.coeffs[k]
            cols.append([c % p for c in col])
    rhs = [0] * (top * r)
    for d2 in range(x.num.degree + 1):
        for k in range(r):
            rhs[d2 * r + k] = x.num.coefficient(d2).coeffs[k]
    sol = _solve_mod_p(cols, rhs, p)
    if sol is None:
        return None
    coeffs = []
    for j in range(deg_g + 1):
        coeffs.append(spec.element(sol[j * r:(j + 1) * r]))
    g = Poly(spec, coeffs)
    z = RationalFunction(g, h0)
    if z ** p - z == x:
        return z
    return None
