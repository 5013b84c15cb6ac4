"""Exact rational plane geometry.

Everything here works over :class:`fractions.Fraction`.  Lengths and areas
are only ever handled squared so that every quantity stays rational; the
squared circumradius of a collinear triple is the sentinel :data:`INFINITE`.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional, Sequence, Union


class DuplicatePoint(ValueError):
    pass


class Point(NamedTuple):
    x: Fraction
    y: Fraction

    @classmethod
    def of(cls, x, y) -> "Point":
        return cls(Fraction(x), Fraction(y))

    def __str__(self):
        return f"({self.x}, {self.y})"


def as_point(p) -> Point:
    if isinstance(p, Point) and type(p.x) is Fraction and type(p.y) is Fraction:
        return p
    return Point(Fraction(p[0]), Fraction(p[1]))


def as_points(points) -> list[Point]:
    return [as_point(p) for p in points]


class _Infinite:
    """Squared radius of a collinear triple (a line is a circle of infinite radius).

    Singleton; compares equal only to itself, so two collinear triples
    count as a radius coincidence.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITE"

    def __reduce__(self):
        return (_Infinite, ())


INFINITE = _Infinite()

SqRadius = Union[Fraction, _Infinite]


class Mode(str, enum.Enum):
    STRICT = "strict"
    PAPER = "paper"


@dataclass(frozen=True)
class PositionReport:
    ok: bool
    witness: Optional[tuple[int, ...]]
    mode: Mode


def _check_distinct(*pts: Point) -> None:
    if len(set(pts)) != len(pts):
        raise DuplicatePoint(f"coincident points among {[str(p) for p in pts]}")


def _cross(a: Point, b: Point, c: Point) -> Fraction:
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)


def orientation(a, b, c) -> int:
    """Sign of (b - a) x (c - a): +1 counterclockwise, -1 clockwise, 0 collinear."""
    d = _cross(as_point(a), as_point(b), as_point(c))
    return (d > 0) - (d < 0)


def squared_area(a, b, c) -> Fraction:
    d = _cross(as_point(a), as_point(b), as_point(c))
    return d * d / 4


def squared_distance(a, b) -> Fraction:
    a, b = as_point(a), as_point(b)
    dx, dy = a.x - b.x, a.y - b.y
    return dx * dx + dy * dy


def squared_circumradius(a, b, c) -> SqRadius:
    """R^2 = |ab|^2 |bc|^2 |ca|^2 / (16 area^2), or INFINITE for a collinear triple."""
    a, b, c = as_point(a), as_point(b), as_point(c)
    _check_distinct(a, b, c)
    if _integral(a, b, c):
        return _sq_radius_int(a, b, c)
    d = _cross(a, b, c)
    if d == 0:
        return INFINITE
    # 16 * area^2 == 4 * d^2
    return squared_distance(a, b) * squared_distance(b, c) * squared_distance(c, a) / (4 * d * d)


def _sq_radius_int(a: Point, b: Point, c: Point) -> SqRadius:
    ax, ay = a.x.numerator, a.y.numerator
    bx, by = b.x.numerator, b.y.numerator
    cx, cy = c.x.numerator, c.y.numerator
    d = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
    if d == 0:
        return INFINITE
    ab = (ax - bx) ** 2 + (ay - by) ** 2
    bc = (bx - cx) ** 2 + (by - cy) ** 2
    ca = (cx - ax) ** 2 + (cy - ay) ** 2
    return Fraction(ab * bc * ca, 4 * d * d)


def _det(m: list[list[Fraction]]) -> Fraction:
    # fraction-exact Gaussian elimination; matrices here are at most 4x4
    m = [row[:] for row in m]
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        for r in range(col + 1, n):
            f = m[r][col] / m[col][col]
            if f:
                for k in range(col, n):
                    m[r][k] -= f * m[col][k]
    return det


def incircle_determinant(a, b, c, d) -> Fraction:
    rows = []
    for p in (a, b, c, d):
        p = as_point(p)
        rows.append([p.x, p.y, p.x * p.x + p.y * p.y, Fraction(1)])
    return _det(rows)


def concyclic(a, b, c, d) -> bool:
    """True iff the four points lie on one circle or one line."""
    pts = as_points((a, b, c, d))
    _check_distinct(*pts)
    return incircle_determinant(*pts) == 0


def _integral(*pts: Point) -> bool:
    return all(p.x.denominator == 1 and p.y.denominator == 1 for p in pts)


def circle_key(a: Point, b: Point, c: Point) -> tuple[int, int, int, int]:
    """Canonical key of the circle (or line) through three distinct points.

    The key is the primitive integer vector (A, B, C, E), first nonzero entry
    positive, of A(x^2 + y^2) + Bx + Cy + E = 0; A = 0 for a line.  Four
    points are concyclic-or-collinear iff their triples share a key.
    """
    if _integral(a, b, c):
        coords = [(p.x.numerator, p.y.numerator) for p in (a, b, c)]
        scale = 1
    else:
        scale = 1
        for p in (a, b, c):
            scale = math.lcm(scale, p.x.denominator, p.y.denominator)
        coords = [(int(p.x * scale), int(p.y * scale)) for p in (a, b, c)]
    (x1, y1), (x2, y2), (x3, y3) = coords
    s1, s2, s3 = x1 * x1 + y1 * y1, x2 * x2 + y2 * y2, x3 * x3 + y3 * y3
    # cofactor expansion of det [[x^2+y^2, x, y, 1], p1, p2, p3] in the
    # coordinates scaled by `scale`; undo the scaling on the x, y and constant terms
    A = x1 * (y2 - y3) - y1 * (x2 - x3) + (x2 * y3 - x3 * y2)
    B = -(s1 * (y2 - y3) - y1 * (s2 - s3) + (s2 * y3 - s3 * y2))
    C = s1 * (x2 - x3) - x1 * (s2 - s3) + (s2 * x3 - s3 * x2)
    E = -(s1 * (x2 * y3 - x3 * y2) - x1 * (s2 * y3 - s3 * y2) + y1 * (s2 * x3 - s3 * x2))
    vec = [A * scale * scale, B * scale, C * scale, E]
    g = math.gcd(*vec)
    first = next(v for v in vec if v)
    if first < 0:
        g = -g
    return tuple(v // g for v in vec)


def circumcenter(a, b, c) -> Optional[Point]:
    a, b, c = as_point(a), as_point(b), as_point(c)
    A, B, C, _ = circle_key(a, b, c)
    if A == 0:
        return None
    return Point(Fraction(-B, 2 * A), Fraction(-C, 2 * A))


def is_general_position(points: Sequence, mode: Mode | str = Mode.PAPER) -> PositionReport:
    """Check that no four points share a circle or line (PAPER), and in
    STRICT mode also that no three are collinear.

    The witness is the lexicographically smallest violating index tuple; in
    STRICT mode collinear triples are reported before 4-tuples.
    """
    mode = Mode(mode)
    pts = as_points(points)
    if len(set(pts)) != len(pts):
        raise DuplicatePoint("point set contains duplicates")

    triples = list(itertools.combinations(range(len(pts)), 3))
    if mode is Mode.STRICT:
        for t in triples:
            if _cross(pts[t[0]], pts[t[1]], pts[t[2]]) == 0:
                return PositionReport(False, t, mode)

    groups: dict[tuple, set[int]] = {}
    best = None
    for t in triples:
        key = circle_key(pts[t[0]], pts[t[1]], pts[t[2]])
        members = groups.setdefault(key, set())
        members.update(t)
        if len(members) >= 4:
            cand = tuple(sorted(members)[:4])
            if best is None or cand < best:
                best = cand
    if best is not None:
        return PositionReport(False, best, mode)
    return PositionReport(True, None, mode)
