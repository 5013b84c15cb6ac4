"""Seeded experiments producing self-contained JSON records.

Each trial derives its own sub-seed from (experiment, seed, trial), so the
record for a trial is the same whether trials run serially or in a pool.
"""

from __future__ import annotations

import hashlib
import itertools
import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from functools import partial
from pathlib import Path
from typing import Callable, Optional

from ..exact_core import Mode, Point, circumcenter, squared_circumradius
from ..locus_curves import (
    IntersectionStatus,
    circle_poly,
    count_common_points,
    radius_locus,
    total_degree,
)
from ..radius_subsets import (
    Case,
    NoCoincidence,
    SubsetCertificate,
    TripleRadiusTable,
    classify_excluded_point,
    greedy_maximal_subset,
    max_distinct_subset,
    verify_certificate,
)
from .generate import GeneratorConfig, derive_seed, generate_instance
from .pointset_io import format_rational

SMALL_CASE_SIZES = {4: 9, 5: 37}
SMALL_CASE_GRIDS = {4: 12, 5: 60}
BEZOUT_GRID = 32
GAP_GRID = 12

# Two hand-built instances for the exclusion classifier.  In MIRROR_PAIR the
# last point is the reflection of (1, 3) across the x-axis, so it repeats the
# radius of triangle 012 (a circle-case exclusion).  In ROTATED_PAIR the
# segment (3,4)-(-5,5) is (5,0)-(1,7) rotated about the origin by the angle
# with cosine 3/5, so the origin sees both segments in congruent triangles
# without lying on any circle through two chosen points (a locus-case exclusion).
MIRROR_PAIR = [Point.of(0, 0), Point.of(4, 0), Point.of(1, 3), Point.of(1, -3)]
ROTATED_PAIR = [Point.of(5, 0), Point.of(1, 7), Point.of(3, 4), Point.of(-5, 5), Point.of(0, 0)]
CONSTRUCTED_GAP_INSTANCES = {"mirror_pair": MIRROR_PAIR, "rotated_pair": ROTATED_PAIR}


@dataclass
class ExperimentRecord:
    experiment: str
    seed: int
    trial: int
    n: int
    grid: Optional[int]
    mode: str
    payload: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return bool(self.payload.get("pass", True))

    def to_json_line(self) -> str:
        return json.dumps(asdict(self), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json_line(cls, line: str) -> "ExperimentRecord":
        return cls(**json.loads(line))


def encode_points(points) -> list[list[str]]:
    return [[format_rational(p.x), format_rational(p.y)] for p in points]


def decode_points(rows) -> list[Point]:
    return [Point(Fraction(x), Fraction(y)) for x, y in rows]


def certificate_digest(cert: SubsetCertificate) -> str:
    blob = json.dumps(cert.to_json(), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()[:16]


def certificate_payload(points, cert: SubsetCertificate) -> dict:
    return {
        "points": encode_points(points),
        "certificate": cert.to_json(),
        "certificate_digest": certificate_digest(cert),
    }


def verify_record_certificate(record: ExperimentRecord) -> bool:
    """Reload the embedded point set and certificate and re-verify them."""
    points = decode_points(record.payload["points"])
    cert = SubsetCertificate.from_json(record.payload["certificate"])
    return verify_certificate(points, cert)


def _run_trials(fn: Callable[[int], ExperimentRecord], trials: int, workers: int) -> list[ExperimentRecord]:
    if workers <= 1:
        return [fn(t) for t in range(trials)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, range(trials)))  # map keeps trial order


# -- Theorem 2 small cases ----------------------------------------------------

def small_case_record(points, k: int, name: str, seed: int, trial: int, grid, mode: Mode) -> ExperimentRecord:
    """Check that ``points`` contain k points with all-distinct triple radii.

    A greedy subset of size >= k already certifies this; the exact maximum is
    only computed when greedy falls short.
    """
    table = TripleRadiusTable(points)
    cert = greedy_maximal_subset(table)
    method = "greedy"
    if len(cert.chosen) < k:
        cert = max_distinct_subset(table)
        method = "exact"
    payload = {
        "k": k,
        "subset_size": len(cert.chosen),
        "method": method,
        "pass": len(cert.chosen) >= k,
        **certificate_payload(points, cert),
    }
    return ExperimentRecord(name, seed, trial, len(points), grid, Mode(mode).value, payload)


def _small_case_trial(trial: int, *, k: int, seed: int, n: int, grid: int, mode: Mode) -> ExperimentRecord:
    name = f"small_cases_k{k}"
    cfg = GeneratorConfig(derive_seed(seed, name, trial), n, grid, mode)
    return small_case_record(generate_instance(cfg), k, name, seed, trial, grid, mode)


def experiment_small_cases(
    k: int,
    trials: int,
    seed: int,
    n: Optional[int] = None,
    grid: Optional[int] = None,
    mode: Mode = Mode.PAPER,
    workers: int = 1,
) -> list[ExperimentRecord]:
    if k not in SMALL_CASE_SIZES:
        raise ValueError("small cases are k = 4 and k = 5")
    fn = partial(
        _small_case_trial,
        k=k,
        seed=seed,
        n=n or SMALL_CASE_SIZES[k],
        grid=grid or SMALL_CASE_GRIDS[k],
        mode=Mode(mode),
    )
    return _run_trials(fn, trials, workers)


# -- Bezout bounds ------------------------------------------------------------

def _report_json(rep) -> dict:
    return {
        "status": rep.status.value,
        "x_root_count": rep.x_root_count,
        "resultant_degree": rep.resultant_degree,
        "bezout_bound": rep.bezout_bound,
        "shear": format_rational(rep.shear_used),
    }


def bezout_check(points, pair_pairs, triple, shear_seed) -> dict:
    """Intersect the locus of the first pair-pair with the circumcircle of
    ``triple`` and with the locus of the second pair-pair.

    When the first pairs share a point, AB and AC say, every X on the circle
    through A, B, C gives R(ABX) = R(ACX), so that circle is a component of
    the locus. The circle test must report a common component exactly in
    that case, and otherwise be finite and within 12.
    """
    (ab, cd), (ef, gh) = pair_pairs
    p = points
    first = radius_locus(p[ab[0]], p[ab[1]], p[cd[0]], p[cd[1]])
    second = radius_locus(p[ef[0]], p[ef[1]], p[gh[0]], p[gh[1]])
    center = circumcenter(*(p[i] for i in triple))
    circle = circle_poly(center, squared_circumradius(*(p[i] for i in triple)))
    with_circle = count_common_points(first, circle, shear_seed)
    with_locus = count_common_points(first, second, derive_seed(shear_seed, "locus"))
    degrees = [total_degree(first), total_degree(second)]
    spanned = set(ab) | set(cd)
    circle_in_locus = len(spanned) == 3 and spanned == set(triple)
    if with_circle.status is IntersectionStatus.COMMON_COMPONENT:
        circle_ok = circle_in_locus
    else:
        circle_ok = not circle_in_locus and with_circle.x_root_count <= 12
    ok = (
        max(degrees) <= 6
        and circle_ok
        and (
            with_locus.status is IntersectionStatus.COMMON_COMPONENT
            or with_locus.x_root_count <= 36
        )
    )
    return {
        "pair_pairs": [[list(ab), list(cd)], [list(ef), list(gh)]],
        "circle_triple": list(triple),
        "circle_in_locus": circle_in_locus,
        "locus_degrees": degrees,
        "sextic_circle": _report_json(with_circle),
        "sextic_sextic": _report_json(with_locus),
        "pass": ok,
    }


def _bezout_trial(trial: int, *, seed: int, n: Optional[int], grid: int, mode: Mode) -> ExperimentRecord:
    name = "bezout"
    sub = derive_seed(seed, name, trial)
    rng = random.Random(sub)
    size = n or rng.randint(4, 8)
    points = generate_instance(GeneratorConfig(sub, size, grid, mode))
    pairs = list(itertools.combinations(range(size), 2))
    pair_pairs = list(itertools.combinations(pairs, 2))
    chosen = rng.sample(pair_pairs, 2)
    triples = [t for t in itertools.combinations(range(size), 3) if circumcenter(*(points[i] for i in t))]
    triple = rng.choice(triples)
    payload = {"points": encode_points(points), **bezout_check(points, chosen, triple, sub)}
    return ExperimentRecord(name, seed, trial, size, grid, mode.value, payload)


def experiment_bezout(
    trials: int,
    seed: int,
    n: Optional[int] = None,
    grid: Optional[int] = None,
    mode: Mode = Mode.PAPER,
    workers: int = 1,
) -> list[ExperimentRecord]:
    fn = partial(_bezout_trial, seed=seed, n=n, grid=grid or BEZOUT_GRID, mode=Mode(mode))
    return _run_trials(fn, trials, workers)


# -- exclusion cases ----------------------------------------------------------

def gap_case_record(points, name: str, seed: int, trial: int, grid, mode: Mode, order=None) -> ExperimentRecord:
    """Greedy maximal set, then the case of every excluded point."""
    table = TripleRadiusTable(points)
    cert = greedy_maximal_subset(table, order)
    tally = {Case.CIRCLE.value: 0, Case.LOCUS.value: 0}
    failures = []
    for x in range(len(points)):
        if x in cert.chosen:
            continue
        try:
            rec = classify_excluded_point(table, cert, x)
        except NoCoincidence:
            failures.append(x)
            continue
        tally[rec.case.value] += 1
    payload = {
        "subset_size": len(cert.chosen),
        "excluded": len(points) - len(cert.chosen),
        "tally": tally,
        "no_coincidence": failures,
        "pass": not failures,
        **certificate_payload(points, cert),
    }
    return ExperimentRecord(name, seed, trial, len(points), grid, Mode(mode).value, payload)


def _gap_trial(trial: int, *, seed: int, n: Optional[int], grid: int, mode: Mode) -> ExperimentRecord:
    name = "gap_cases"
    sub = derive_seed(seed, name, trial)
    size = n or random.Random(sub).randint(6, 12)
    points = generate_instance(GeneratorConfig(sub, size, grid, mode))
    return gap_case_record(points, name, seed, trial, grid, mode)


def experiment_gap_cases(
    trials: int,
    seed: int,
    n: Optional[int] = None,
    grid: Optional[int] = None,
    mode: Mode = Mode.PAPER,
    workers: int = 1,
) -> list[ExperimentRecord]:
    fn = partial(_gap_trial, seed=seed, n=n, grid=grid or GAP_GRID, mode=Mode(mode))
    return _run_trials(fn, trials, workers)


def constructed_gap_records(seed: int = 0) -> list[ExperimentRecord]:
    return [
        gap_case_record(pts, f"gap_cases_{name}", seed, i, None, Mode.PAPER)
        for i, (name, pts) in enumerate(sorted(CONSTRUCTED_GAP_INSTANCES.items()))
    ]


EXPERIMENTS = {
    "small-cases-4": partial(experiment_small_cases, 4),
    "small-cases-5": partial(experiment_small_cases, 5),
    "bezout": experiment_bezout,
    "gap-cases": experiment_gap_cases,
}


def write_records(records, path) -> None:
    Path(path).write_text("".join(r.to_json_line() + "\n" for r in records))


def read_records(path) -> list[ExperimentRecord]:
    return [ExperimentRecord.from_json_line(line) for line in Path(path).read_text().splitlines() if line.strip()]


def quarantine(records, directory, experiment: str, seed: int) -> Optional[Path]:
    """Write failing records to a quarantine file; returns its path, or None if all passed."""
    bad = [r for r in records if not r.passed]
    if not bad:
        return None
    path = Path(directory) / f"quarantine-{experiment}-{seed}.jsonl"
    path.parent.mkdir(parents=True, exist_ok=True)
    write_records(bad, path)
    return path
