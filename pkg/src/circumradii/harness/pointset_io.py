"""Text point-set files.

    pointset 1
    # comment
    3/1 -1/2
    4 5

Denominators may be omitted; duplicate points are rejected.
"""

from __future__ import annotations

import re
from fractions import Fraction
from pathlib import Path
from typing import Iterable

from ..exact_core import Point

HEADER = "pointset 1"
_NUMBER = re.compile(r"^[+-]?\d+(/\d+)?$")


class PointSetFormatError(ValueError):
    pass


def _parse_number(tok: str, lineno: int) -> Fraction:
    if not _NUMBER.match(tok):
        raise PointSetFormatError(f"line {lineno}: bad rational {tok!r}")
    try:
        return Fraction(tok)
    except ZeroDivisionError:
        raise PointSetFormatError(f"line {lineno}: zero denominator in {tok!r}") from None


def parse_pointset(text: str) -> list[Point]:
    lines = text.splitlines()
    header_seen = False
    points: list[Point] = []
    seen: set[Point] = set()
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if not header_seen:
            if line.split() != HEADER.split():
                raise PointSetFormatError(f"line {lineno}: expected header {HEADER!r}")
            header_seen = True
            continue
        toks = line.split()
        if len(toks) != 2:
            raise PointSetFormatError(f"line {lineno}: expected two coordinates")
        p = Point(_parse_number(toks[0], lineno), _parse_number(toks[1], lineno))
        if p in seen:
            raise PointSetFormatError(f"line {lineno}: duplicate point {p}")
        seen.add(p)
        points.append(p)
    if not header_seen:
        raise PointSetFormatError(f"missing header {HEADER!r}")
    return points


def format_rational(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def format_pointset(points: Iterable, comment: str | None = None) -> str:
    out = [HEADER]
    if comment:
        out.extend(f"# {line}" for line in comment.splitlines())
    for p in points:
        out.append(f"{format_rational(Fraction(p[0]))} {format_rational(Fraction(p[1]))}")
    return "\n".join(out) + "\n"


def load_pointset(path) -> list[Point]:
    return parse_pointset(Path(path).read_text())


def save_pointset(path, points, comment: str | None = None) -> None:
    Path(path).write_text(format_pointset(points, comment))
