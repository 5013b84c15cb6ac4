"""Subsets whose triples all have distinct circumradii.

Indices are 0-based positions in the input point list.  Every search here
breaks ties lexicographically by index so certificates are reproducible.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .exact_core import (
    DuplicatePoint,
    Mode,
    Point,
    SqRadius,
    as_points,
    is_general_position,
    squared_circumradius,
)

Triple = tuple[int, int, int]
Pair = tuple[int, int]


class NotGeneralPosition(ValueError):
    pass


class NoCoincidence(RuntimeError):
    """An excluded point could be added to the set: the certificate was not maximal."""


class TripleRadiusTable(dict):
    """Maps each sorted index triple to its squared circumradius."""

    def __init__(self, points: Sequence):
        super().__init__()
        pts = as_points(points)
        if len(set(pts)) != len(pts):
            raise DuplicatePoint("point set contains duplicates")
        self.points = pts
        for t in itertools.combinations(range(len(pts)), 3):
            self[t] = squared_circumradius(*(pts[i] for i in t))

    @property
    def n(self) -> int:
        return len(self.points)

    def radius(self, i: int, j: int, k: int) -> SqRadius:
        return self[tuple(sorted((i, j, k)))]


def triple_radius_table(points: Sequence) -> TripleRadiusTable:
    return TripleRadiusTable(points)


class Case(str, enum.Enum):
    CIRCLE = "CASE_CIRCLE"
    LOCUS = "CASE_LOCUS"


@dataclass(frozen=True)
class ExclusionRecord:
    """Why point ``x`` cannot join the chosen set.

    CASE_CIRCLE: R(pair + x) equals R(triple) for a triple of the set.
    CASE_LOCUS: R(pair + x) equals R(other_pair + x).
    """

    x: int
    case: Case
    pair: Pair
    triple: Optional[Triple] = None
    other_pair: Optional[Pair] = None

    def to_json(self) -> dict:
        out = {"x": self.x, "case": self.case.value, "pair": list(self.pair)}
        if self.triple is not None:
            out["triple"] = list(self.triple)
        if self.other_pair is not None:
            out["other_pair"] = list(self.other_pair)
        return out

    @classmethod
    def from_json(cls, d: dict) -> "ExclusionRecord":
        return cls(
            x=d["x"],
            case=Case(d["case"]),
            pair=tuple(d["pair"]),
            triple=tuple(d["triple"]) if "triple" in d else None,
            other_pair=tuple(d["other_pair"]) if "other_pair" in d else None,
        )


@dataclass
class SubsetCertificate:
    chosen: list[int]
    distinct_ok: bool
    maximal: bool
    optimal: bool
    exclusions: dict[int, ExclusionRecord] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "chosen": list(self.chosen),
            "distinct_ok": self.distinct_ok,
            "maximal": self.maximal,
            "optimal": self.optimal,
            "exclusions": [self.exclusions[x].to_json() for x in sorted(self.exclusions)],
        }

    @classmethod
    def from_json(cls, d: dict) -> "SubsetCertificate":
        excl = [ExclusionRecord.from_json(e) for e in d.get("exclusions", [])]
        return cls(
            chosen=list(d["chosen"]),
            distinct_ok=d["distinct_ok"],
            maximal=d["maximal"],
            optimal=d["optimal"],
            exclusions={e.x: e for e in excl},
        )


def _table_for(points) -> TripleRadiusTable:
    return points if isinstance(points, TripleRadiusTable) else TripleRadiusTable(points)


def _require_general_position(table: TripleRadiusTable) -> None:
    report = is_general_position(table.points, Mode.PAPER)
    if not report.ok:
        raise NotGeneralPosition(f"points {report.witness} lie on a common circle or line")


def all_distinct(table: TripleRadiusTable, subset: Iterable[int]) -> bool:
    seen = set()
    for t in itertools.combinations(sorted(subset), 3):
        r = table[t]
        if r in seen:
            return False
        seen.add(r)
    return True


def _can_add(table: TripleRadiusTable, chosen: Sequence[int], radii: set, x: int) -> bool:
    """Whether chosen + [x] keeps all triple radii distinct, given the radii of chosen."""
    fresh = set()
    for a, b in itertools.combinations(chosen, 2):
        r = table.radius(a, b, x)
        if r in radii or r in fresh:
            return False
        fresh.add(r)
    return True


def _radii_of(table: TripleRadiusTable, subset: Sequence[int]) -> set:
    return {table[t] for t in itertools.combinations(sorted(subset), 3)}


def classify_excluded_point(points, certificate: SubsetCertificate, x_index: int) -> ExclusionRecord:
    """Find the coincidence that stops ``x_index`` from joining the chosen set.

    Scans (pair, triple) combinations in lexicographic order first, then
    pairs of pairs.
    """
    table = _table_for(points)
    chosen = sorted(certificate.chosen)
    if x_index in chosen:
        raise ValueError(f"point {x_index} is in the chosen set")
    pairs = list(itertools.combinations(chosen, 2))
    first_triple: dict = {}
    for t in itertools.combinations(chosen, 3):
        first_triple.setdefault(table[t], t)
    pairs_by_radius: dict = {}
    for pr in pairs:
        pairs_by_radius.setdefault(table.radius(pr[0], pr[1], x_index), []).append(pr)
    for pr in pairs:
        t = first_triple.get(table.radius(pr[0], pr[1], x_index))
        if t is not None:
            return ExclusionRecord(x_index, Case.CIRCLE, pr, triple=t)
    for pr in pairs:
        same = pairs_by_radius[table.radius(pr[0], pr[1], x_index)]
        if len(same) > 1 and same[-1] != pr:
            return ExclusionRecord(x_index, Case.LOCUS, pr, other_pair=same[same.index(pr) + 1])
    raise NoCoincidence(f"point {x_index} can be added to {chosen}")


def _certify(table: TripleRadiusTable, chosen: list[int], optimal: bool) -> SubsetCertificate:
    chosen = sorted(chosen)
    exclusions = {
        x: classify_excluded_point(table, SubsetCertificate(chosen, True, True, optimal), x)
        for x in range(table.n)
        if x not in chosen
    }
    return SubsetCertificate(chosen, all_distinct(table, chosen), True, optimal, exclusions)


def greedy_maximal_subset(points, order: Optional[Sequence[int]] = None) -> SubsetCertificate:
    """Scan points in ``order`` and keep each one that preserves distinctness."""
    table = _table_for(points)
    _require_general_position(table)
    order = list(range(table.n)) if order is None else list(order)
    if sorted(order) != list(range(table.n)):
        raise ValueError("order must be a permutation of the point indices")
    chosen: list[int] = []
    radii: set = set()
    for x in order:
        if _can_add(table, chosen, radii, x):
            for a, b in itertools.combinations(chosen, 2):
                radii.add(table.radius(a, b, x))
            chosen.append(x)
    return _certify(table, chosen, optimal=False)


class _Search:
    """Depth-first branch and bound over points in index order, include first.

    Include-first DFS meets equal-size subsets in lexicographic order, so the
    first subset of the final best size found by the DFS is the lexicographic
    winner among maxima.
    """

    def __init__(self, table: TripleRadiusTable, incumbent: list[int]):
        self.table = table
        self.n = table.n
        self.best = sorted(incumbent)
        self.best_from_dfs = False
        # pairs of colliding triples, for the packing bound
        groups: dict = {}
        for t, r in table.items():
            groups.setdefault(r, []).append(t)
        self.conflicts = [
            (set(t1) | set(t2))
            for ts in groups.values()
            if len(ts) > 1
            for t1, t2 in itertools.combinations(ts, 2)
        ]

    def _bound(self, cur: list[int], cand: list[int]) -> int:
        """len(cur) + len(cand) minus a packing of conflicts that must each lose a candidate."""
        pool = set(cur) | set(cand)
        cur_set = set(cur)
        used: set[int] = set()
        forced = 0
        for pts in self.conflicts:
            if pts <= pool:
                free = pts - cur_set
                if free and not (free & used):
                    used |= free
                    forced += 1
        return len(cur) + len(cand) - forced

    def _prune(self, bound: int) -> bool:
        best = len(self.best)
        return bound < best or (bound == best and self.best_from_dfs)

    def run(self) -> list[int]:
        self._dfs([], set(), list(range(self.n)))
        return self.best

    def _accept(self, subset: list[int]) -> None:
        if len(subset) > len(self.best) or (len(subset) == len(self.best) and subset <= self.best):
            self.best = list(subset)
            self.best_from_dfs = True

    def _dfs(self, cur: list[int], radii: set, remaining: list[int]) -> None:
        cand = [x for x in remaining if _can_add(self.table, cur, radii, x)]
        bound = self._bound(cur, cand)
        if self._prune(bound):
            return
        if not cand:
            self._accept(cur)
            return
        if bound == len(cur) + len(cand) and all_distinct(self.table, cur + cand):
            # taking everything is the unique best completion of this node
            self._accept(cur + cand)
            return
        x, rest = cand[0], cand[1:]
        new = {self.table.radius(a, b, x) for a, b in itertools.combinations(cur, 2)}
        self._dfs(cur + [x], radii | new, rest)
        self._dfs(cur, radii, rest)


def max_distinct_subset(points) -> SubsetCertificate:
    """Maximum-cardinality subset with all-distinct triple radii (lexicographically
    smallest among maxima)."""
    table = _table_for(points)
    _require_general_position(table)
    incumbent = greedy_maximal_subset(table).chosen
    best = _Search(table, incumbent).run()
    return _certify(table, best, optimal=True)


def brute_force_max_subset(points) -> list[int]:
    """Exhaustive reference: the lexicographically smallest largest distinct subset."""
    table = _table_for(points)
    for size in range(table.n, 0, -1):
        for subset in itertools.combinations(range(table.n), size):
            if all_distinct(table, subset):
                return list(subset)
    return []


def _is_maximal(table: TripleRadiusTable, chosen: list[int]) -> bool:
    radii = _radii_of(table, chosen)
    return not any(_can_add(table, chosen, radii, x) for x in range(table.n) if x not in chosen)


def _record_holds(table: TripleRadiusTable, chosen: set, rec: ExclusionRecord) -> bool:
    if rec.x in chosen or not set(rec.pair) <= chosen or len(set(rec.pair)) != 2:
        return False
    r = table.radius(rec.pair[0], rec.pair[1], rec.x)
    if rec.case is Case.CIRCLE:
        t = rec.triple
        return t is not None and len(set(t)) == 3 and set(t) <= chosen and table.radius(*t) == r
    p2 = rec.other_pair
    return (
        p2 is not None
        and len(set(p2)) == 2
        and set(p2) <= chosen
        and set(p2) != set(rec.pair)
        and table.radius(p2[0], p2[1], rec.x) == r
    )


def verify_certificate(points, certificate: SubsetCertificate) -> bool:
    """Recompute every claim of the certificate from the raw points."""
    try:
        table = _table_for(points)
    except DuplicatePoint:
        return False
    chosen = list(certificate.chosen)
    if chosen != sorted(set(chosen)) or any(not 0 <= i < table.n for i in chosen):
        return False
    if certificate.distinct_ok != all_distinct(table, chosen):
        return False
    chosen_set = set(chosen)
    if certificate.maximal:
        if not _is_maximal(table, chosen):
            return False
        if set(certificate.exclusions) != set(range(table.n)) - chosen_set:
            return False
    for x, rec in certificate.exclusions.items():
        if rec.x != x or not _record_holds(table, chosen_set, rec):
            return False
    if certificate.optimal:
        if not certificate.distinct_ok:
            return False
        best = _Search(table, chosen).run()
        if best != chosen:
            return False
    return True
