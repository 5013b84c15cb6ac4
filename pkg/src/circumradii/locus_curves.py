"""Locus curves R(ABX) = R(CDX) and their intersections.

The locus of X with R(ABX) = R(CDX) is the zero set of

    |AX|^2 |BX|^2 |AB|^2 |CDX|^2 - |CX|^2 |DX|^2 |CD|^2 |ABX|^2

(areas squared), a curve of total degree at most 6.  Intersections of two
curves are counted through the resultant with respect to y, computed by a
subresultant PRS over Q[x], followed by a Sturm count of the distinct real
roots of its square-free part.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .exact_core import Point, as_point, squared_distance
from .polynomials import (
    ONE,
    BivariatePoly,
    UnivariatePoly,
    deg,
    pderiv,
    pdivmod,
    pexactdiv,
    pgcd,
    pmul,
    pneg,
    ppow,
    pscale,
    psub,
    trim,
)


class DegeneratePair(ValueError):
    pass


class SamePair(ValueError):
    pass


class NonpositiveRadius(ValueError):
    pass


class ZeroPolynomial(ValueError):
    pass


class IntersectionStatus(str, enum.Enum):
    FINITE = "FINITE"
    COMMON_COMPONENT = "COMMON_COMPONENT"


@dataclass(frozen=True)
class IntersectionReport:
    status: IntersectionStatus
    x_root_count: Optional[int]  # None when the curves share a component
    resultant_degree: Optional[int]
    bezout_bound: int
    shear_used: Fraction


def _sq_dist_to_X(p: Point) -> BivariatePoly:
    x, y = BivariatePoly.x(), BivariatePoly.y()
    return (x - p.x) ** 2 + (y - p.y) ** 2


def _sq_area_with_X(p: Point, q: Point) -> BivariatePoly:
    """Squared area of triangle pqX as a polynomial in X = (x, y)."""
    x, y = BivariatePoly.x(), BivariatePoly.y()
    cross = (y - p.y) * (q.x - p.x) - (x - p.x) * (q.y - p.y)
    return cross * cross * Fraction(1, 4)


def radius_locus(a, b, c, d) -> BivariatePoly:
    a, b, c, d = (as_point(p) for p in (a, b, c, d))
    if a == b or c == d:
        raise DegeneratePair("a pair must consist of two distinct points")
    if {a, b} == {c, d}:
        raise SamePair("the two pairs must differ")
    lhs = _sq_dist_to_X(a) * _sq_dist_to_X(b) * squared_distance(a, b) * _sq_area_with_X(c, d)
    rhs = _sq_dist_to_X(c) * _sq_dist_to_X(d) * squared_distance(c, d) * _sq_area_with_X(a, b)
    return lhs - rhs


def evaluate(p: BivariatePoly, pt) -> Fraction:
    pt = as_point(pt)
    return p.evaluate(pt.x, pt.y)


def total_degree(p: BivariatePoly) -> int:
    """Total degree, with -1 for the zero polynomial."""
    return p.degree


def circle_poly(center, r2) -> BivariatePoly:
    center = as_point(center)
    r2 = Fraction(r2)
    if r2 <= 0:
        raise NonpositiveRadius(f"squared radius must be positive, got {r2}")
    return _sq_dist_to_X(center) - r2


# -- resultants ---------------------------------------------------------------
# Polynomials in y over Q[x] are lists of coefficient lists, lowest y first.

def _ytrim(a: list) -> list:
    while a and not a[-1]:
        a.pop()
    return a


def _prem(a: list, b: list) -> list:
    """Pseudo-remainder of a by b in Q[x][y]: lc(b)^(deg a - deg b + 1) * a mod b."""
    db = len(b) - 1
    lcb = b[-1]
    r = list(a)
    e = len(a) - len(b) + 1
    while len(r) - 1 >= db and r:
        lcr = r[-1]
        shift = len(r) - 1 - db
        new = [pmul(lcb, c) for c in r]
        for j, c in enumerate(b):
            new[j + shift] = psub(new[j + shift], pmul(lcr, c))
        new.pop()  # leading term cancels by construction
        r = _ytrim(new)
        e -= 1
    if e > 0:
        f = ppow(lcb, e)
        r = [pmul(f, c) for c in r]
    return r


def _resultant_y(a: list, b: list) -> list:
    """Resultant in y of two polynomials in Q[x][y] (subresultant PRS)."""
    if not a or not b:
        return []
    s = 1
    if len(a) < len(b):
        a, b = b, a
        if (len(a) - 1) % 2 and (len(b) - 1) % 2:
            s = -1
    if len(b) == 1:
        return pscale(ppow(b[0], len(a) - 1), s)
    g = [ONE]
    h = [ONE]
    while True:
        da, db = len(a) - 1, len(b) - 1
        delta = da - db
        if da % 2 and db % 2:
            s = -s
        r = _prem(a, b)
        a = b
        div = pmul(g, ppow(h, delta))
        b = [pexactdiv(c, div) for c in r]
        g = a[-1]
        if delta == 0:
            pass  # h unchanged
        else:
            h = pexactdiv(ppow(g, delta), ppow(h, delta - 1))
        if len(b) - 1 > 0:
            continue
        if not b:
            return []
        da = len(a) - 1
        h = pexactdiv(ppow(b[-1], da), ppow(h, da - 1)) if da >= 1 else ppow(b[-1], da)
        return pscale(h, s)


def resultant_eliminate_y(p: BivariatePoly, q: BivariatePoly) -> UnivariatePoly:
    """Res_y(p, q) as a polynomial in x; zero iff p and q share a factor of positive y-degree."""
    return UnivariatePoly(_resultant_y(p.as_y_coefficients(), q.as_y_coefficients()))


# -- real roots ---------------------------------------------------------------

def _normalize_positive(a: list) -> list:
    # dividing by |lc| keeps every sign in the Sturm chain
    lc = abs(a[-1])
    return [c / lc for c in a]


def square_free_part(u: list) -> list:
    g = pgcd(u, pderiv(u))
    return pexactdiv(u, g) if deg(g) > 0 else list(u)


def _sign_changes(signs: list[int]) -> int:
    signs = [s for s in signs if s]
    return sum(1 for s0, s1 in zip(signs, signs[1:]) if s0 != s1)


def sturm_chain(u: list) -> list[list]:
    chain = [_normalize_positive(u)]
    d = pderiv(u)
    if d:
        chain.append(_normalize_positive(d))
    while len(chain) >= 2:
        r = pdivmod(chain[-2], chain[-1])[1]
        if not r:
            break
        chain.append(_normalize_positive(pneg(r)))
    return chain


def sturm_distinct_real_roots(u) -> int:
    """Number of distinct real roots of u over the whole real line."""
    coeffs = trim(list(u.coeffs if isinstance(u, UnivariatePoly) else map(Fraction, u)))
    if not coeffs:
        raise ZeroPolynomial("the zero polynomial has infinitely many roots")
    sqf = square_free_part(coeffs)
    if deg(sqf) <= 0:
        return 0
    chain = sturm_chain(sqf)
    at_pos = [1 if p[-1] > 0 else -1 for p in chain]
    at_neg = [s if deg(p) % 2 == 0 else -s for s, p in zip(at_pos, chain)]
    return _sign_changes(at_neg) - _sign_changes(at_pos)


def shear_from_seed(shear_seed) -> Fraction:
    if shear_seed is None:
        return Fraction(0)
    rng = random.Random(shear_seed)
    num = rng.randint(1, 64) * rng.choice((-1, 1))
    return Fraction(num, rng.randint(1, 64))


def count_common_points(p: BivariatePoly, q: BivariatePoly, shear_seed=None) -> IntersectionReport:
    """Count distinct real x-coordinates of the common points of p = 0 and q = 0.

    A rational shear x -> x + t*y (t drawn from ``shear_seed``; none when the
    seed is None) separates points that share an x-coordinate.
    """
    if p.is_zero() or q.is_zero():
        raise ZeroPolynomial("both curves must be nonzero polynomials")
    t = shear_from_seed(shear_seed)
    ps, qs = p.shear(t), q.shear(t)
    bound = p.degree * q.degree
    res = resultant_eliminate_y(ps, qs)
    if res.is_zero():
        return IntersectionReport(IntersectionStatus.COMMON_COMPONENT, None, None, bound, t)
    count = sturm_distinct_real_roots(res)
    return IntersectionReport(IntersectionStatus.FINITE, count, res.degree, bound, t)
