"""Exact univariate and bivariate polynomials over the rationals.

Univariate arithmetic is done on plain coefficient lists (lowest degree
first, no trailing zeros, ``[]`` is zero) because the resultant and Sturm
code call it in tight loops; :class:`UnivariatePoly` wraps such a list for
the public surface.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Mapping, Sequence

ZERO = Fraction(0)
ONE = Fraction(1)


# -- coefficient-list helpers -------------------------------------------------

def trim(a: list) -> list:
    while a and a[-1] == 0:
        a.pop()
    return a


def deg(a: Sequence) -> int:
    return len(a) - 1  # -1 for zero


def padd(a: Sequence, b: Sequence) -> list:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return trim(out)


def psub(a: Sequence, b: Sequence) -> list:
    out = list(a) + [ZERO] * (len(b) - len(a))
    for i, c in enumerate(b):
        out[i] -= c
    return trim(out)


def pneg(a: Sequence) -> list:
    return [-c for c in a]


def pscale(a: Sequence, s) -> list:
    if s == 0:
        return []
    return [c * s for c in a]


def pmul(a: Sequence, b: Sequence) -> list:
    if not a or not b:
        return []
    out = [ZERO] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return trim(out)


def ppow(a: Sequence, e: int) -> list:
    out = [ONE]
    base = list(a)
    while e:
        if e & 1:
            out = pmul(out, base)
        e >>= 1
        if e:
            base = pmul(base, base)
    return out


def pdivmod(a: Sequence, b: Sequence) -> tuple[list, list]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    db = len(b) - 1
    if len(r) - 1 < db:
        return [], trim(r)
    q = [ZERO] * (len(r) - db)
    inv = 1 / Fraction(b[-1])
    for k in range(len(r) - 1 - db, -1, -1):
        c = r[k + db] * inv
        q[k] = c
        if c:
            for j in range(db + 1):
                r[k + j] -= c * b[j]
    return trim(q), trim(r[:db])


def pexactdiv(a: Sequence, b: Sequence) -> list:
    q, r = pdivmod(a, b)
    if r:
        raise ArithmeticError("inexact polynomial division")
    return q


def pderiv(a: Sequence) -> list:
    return trim([i * a[i] for i in range(1, len(a))])


def pmonic(a: Sequence) -> list:
    if not a:
        return []
    inv = 1 / Fraction(a[-1])
    return [c * inv for c in a]


def pgcd(a: Sequence, b: Sequence) -> list:
    """Monic gcd (zero if both are zero)."""
    a, b = trim(list(a)), trim(list(b))
    while b:
        a, b = b, pdivmod(a, b)[1]
        # keep the remainder sequence from growing needlessly
        b = pmonic(b)
    return pmonic(a)


def peval(a: Sequence, x):
    acc = ZERO
    for c in reversed(a):
        acc = acc * x + c
    return acc


class UnivariatePoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        self.coeffs = tuple(trim([Fraction(c) for c in coeffs]))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x):
        return peval(self.coeffs, Fraction(x))

    def __eq__(self, other):
        if isinstance(other, UnivariatePoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == UnivariatePoly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"UnivariatePoly({[str(c) for c in self.coeffs]})"


# -- bivariate ----------------------------------------------------------------

class BivariatePoly:
    """Polynomial in x, y with rational coefficients.

    Stored sparsely as ``{(i, j): c}`` for the monomial x**i * y**j, with no
    zero coefficients, so equality of the dicts is equality of polynomials.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], object] | None = None):
        self.terms: dict[tuple[int, int], Fraction] = {}
        if terms:
            for k, c in terms.items():
                c = Fraction(c)
                if c:
                    self.terms[(int(k[0]), int(k[1]))] = c

    @classmethod
    def const(cls, c) -> "BivariatePoly":
        return cls({(0, 0): c})

    @classmethod
    def x(cls) -> "BivariatePoly":
        return cls({(1, 0): 1})

    @classmethod
    def y(cls) -> "BivariatePoly":
        return cls({(0, 1): 1})

    def _coerce(self, other) -> "BivariatePoly":
        if isinstance(other, BivariatePoly):
            return other
        if isinstance(other, (int, Fraction)):
            return BivariatePoly.const(other)
        raise TypeError(f"cannot combine BivariatePoly with {type(other).__name__}")

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, ZERO) + c
        return BivariatePoly(out)

    __radd__ = __add__

    def __neg__(self):
        return BivariatePoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        out: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, ZERO) + c1 * c2
        return BivariatePoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = BivariatePoly.const(1)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = BivariatePoly.const(other)
        if not isinstance(other, BivariatePoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if not self.terms:
            return "BivariatePoly(0)"
        parts = [f"{c}*x^{i}*y^{j}" for (i, j), c in sorted(self.terms.items())]
        return "BivariatePoly(" + " + ".join(parts) + ")"

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        """Total degree; -1 stands in for the zero polynomial's -infinity."""
        return max((i + j for i, j in self.terms), default=-1)

    def degree_in_y(self) -> int:
        return max((j for _, j in self.terms), default=-1)

    def coefficient(self, i: int, j: int) -> Fraction:
        return self.terms.get((i, j), ZERO)

    def __call__(self, x, y) -> Fraction:
        return self.evaluate(x, y)

    def evaluate(self, x, y) -> Fraction:
        x, y = Fraction(x), Fraction(y)
        # Horner in y over Horner in x
        acc = ZERO
        for col in reversed(self.as_y_coefficients()):
            acc = acc * y + peval(col, x)
        return acc

    def as_y_coefficients(self) -> list[list[Fraction]]:
        """Coefficients as a polynomial in y over Q[x]: entry j is the
        coefficient list (in x) of y**j."""
        dy = self.degree_in_y()
        cols: list[list[Fraction]] = [[] for _ in range(dy + 1)]
        for (i, j), c in self.terms.items():
            col = cols[j]
            if len(col) <= i:
                col.extend([ZERO] * (i + 1 - len(col)))
            col[i] = c
        return [trim(col) for col in cols]

    def shear(self, t) -> "BivariatePoly":
        """Substitute x -> x + t*y."""
        t = Fraction(t)
        if t == 0:
            return BivariatePoly(self.terms)
        out: dict[tuple[int, int], Fraction] = {}
        for (i, j), c in self.terms.items():
            tp = ONE
            for m in range(i, -1, -1):
                # term C(i, m) x^m (t y)^(i-m)
                k = (m, j + i - m)
                out[k] = out.get(k, ZERO) + c * comb(i, m) * tp
                tp *= t
        return BivariatePoly(out)

    def to_records(self) -> list[list]:
        """JSON-friendly ``[[i, j, "num/den"], ...]`` in sorted monomial order."""
        return [[i, j, f"{c.numerator}/{c.denominator}"] for (i, j), c in sorted(self.terms.items())]

    @classmethod
    def from_records(cls, records) -> "BivariatePoly":
        return cls({(int(i), int(j)): Fraction(c) for i, j, c in records})
