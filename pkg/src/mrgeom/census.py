"""Exhaustive generation of all small finite linear spaces, up to isomorphism.

A space is determined by its lines of size >= 3 (2-lines are forced), and any
collection of >=3-point subsets that pairwise share at most one point is such
a space.  The census grows collections one line at a time, keeping one
representative per isomorphism class at every level; an independent generator
that branches on the lexicographically smallest uncovered pair cross-checks
the result at small orders.

This grounds desk-scale slices of the no-blocking-set fact for small spaces:
the census is capped at v = 9 (the v <= 11 statement is not re-proved here).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, NamedTuple

from .coloring import blocking_sets
from .incidence import FiniteLinearSpace, OutOfRange, build_space
from .iso import certificate, essentially_different_blocking_sets, find_isomorphism

CENSUS_CAP = 9
NAIVE_CAP = 7


@dataclass(frozen=True)
class SpaceCensus:
    v: int
    spaces: tuple[FiniteLinearSpace, ...]

    @property
    def count(self) -> int:
        return len(self.spaces)

    def filtered(self, profile: dict[int, int]) -> tuple[FiniteLinearSpace, ...]:
        """Spaces whose full line-size profile equals the given {size: count}."""
        want = tuple(sorted(profile.items()))
        return tuple(s for s in self.spaces if s.line_size_profile() == want)


def _dedup_insert(space: FiniteLinearSpace, buckets: dict) -> bool:
    """Keep one representative per class; True if this space was new."""
    cert = certificate(space)
    reps = buckets.setdefault(cert, [])
    for rep in reps:
        if find_isomorphism(space, rep, mode="first"):
            return False
    reps.append(space)
    return True


def all_spaces(v: int) -> SpaceCensus:
    """Census of all spaces on v points (3 <= v <= 9), one per iso class."""
    if not 3 <= v <= CENSUS_CAP:
        raise OutOfRange(f"census supports 3 <= v <= {CENSUS_CAP}, got {v}")
    candidates = []
    for size in range(3, v):           # a v-point line would violate I3
        for pts in combinations(range(v), size):
            m = 0
            for p in pts:
                m |= 1 << p
            candidates.append((m, pts))

    base = build_space(v, [])
    census = [base]
    frontier: list[tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]] = [((), ())]
    while frontier:
        buckets: dict = {}
        next_frontier = []
        for line_sets, line_masks in frontier:
            for cm, cpts in candidates:
                if all((cm & lm).bit_count() <= 1 for lm in line_masks):
                    space = build_space(v, line_sets + (cpts,))
                    if _dedup_insert(space, buckets):
                        next_frontier.append(
                            (line_sets + (cpts,), line_masks + (cm,)))
                        census.append(space)
        frontier = next_frontier
    census.sort(key=lambda s: (len([l for l in s.lines if len(l) >= 3]),
                               s.line_size_profile(), certificate(s)))
    return SpaceCensus(v, tuple(census))


def _labeled_spaces(v: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    # Branch on the smallest uncovered pair; cover it with each eligible line
    # (any superset whose internal pairs are all uncovered), largest first so
    # the all-collinear line is rejected once at the root.
    pair_bit = [[0] * v for _ in range(v)]
    k = 0
    for p in range(v):
        for q in range(p + 1, v):
            pair_bit[p][q] = pair_bit[q][p] = 1 << k
            k += 1
    all_pairs = (1 << k) - 1

    def line_choices(p: int, q: int, covered: int) -> Iterator[tuple[int, ...]]:
        def grow(pts: tuple[int, ...], pairs: int, start: int):
            if len(pts) < v:           # a full v-point line is all-collinear
                yield pts
            for r in range(start, v):
                if r in (p, q):
                    continue
                add = 0
                ok = True
                for s in pts:
                    bit = pair_bit[s][r]
                    if covered & bit or pairs & bit:
                        ok = False
                        break
                    add |= bit
                if ok:
                    yield from grow(pts + (r,), pairs | add, r + 1)
        yield from grow((p, q), pair_bit[p][q], 0)

    def dfs(covered: int, lines: tuple[tuple[int, ...], ...]):
        if covered == all_pairs:
            yield lines
            return
        for p in range(v):
            for q in range(p + 1, v):
                if not covered & pair_bit[p][q]:
                    for pts in line_choices(p, q, covered):
                        newly = 0
                        for x, y in combinations(pts, 2):
                            newly |= pair_bit[x][y]
                        yield from dfs(covered | newly,
                                       lines + (tuple(sorted(pts)),))
                    return

    yield from dfs(0, ())


class NaiveCensus(NamedTuple):
    census: SpaceCensus
    labeled_count: int


def all_spaces_naive(v: int) -> NaiveCensus:
    """Second, independent generator: enumerate every labeled space directly
    by pair coverage, then collapse to isomorphism classes (3 <= v <= 7).
    """
    if not 3 <= v <= NAIVE_CAP:
        raise OutOfRange(f"naive census supports 3 <= v <= {NAIVE_CAP}, got {v}")
    buckets: dict = {}
    census = []
    labeled = 0
    for lines in _labeled_spaces(v):
        labeled += 1
        space = FiniteLinearSpace(v, lines)
        if _dedup_insert(space, buckets):
            census.append(space)
    census.sort(key=lambda s: (len([l for l in s.lines if len(l) >= 3]),
                               s.line_size_profile(), certificate(s)))
    return NaiveCensus(SpaceCensus(v, tuple(census)), labeled)


@dataclass(frozen=True)
class BlockingScanRow:
    v: int
    spaces: int
    blocking_free: bool


@dataclass(frozen=True)
class BlockingScanReport:
    rows: tuple[BlockingScanRow, ...]

    @property
    def ok(self) -> bool:
        return all(r.blocking_free for r in self.rows)


def no_blocking_set_below(v_max: int) -> BlockingScanReport:
    """Verify that no census space up to v_max points admits a blocking set.

    This covers the statement only at census scale (v_max <= 9); the claim up
    to 11 points is out of computational reach here and is not asserted.
    """
    if not 3 <= v_max <= CENSUS_CAP:
        raise OutOfRange(f"scan supports 3 <= v_max <= {CENSUS_CAP}, got {v_max}")
    rows = []
    for v in range(3, v_max + 1):
        census = all_spaces(v)
        free = all(not blocking_sets(s, limit=1) for s in census.spaces)
        rows.append(BlockingScanRow(v, census.count, free))
    return BlockingScanReport(tuple(rows))


class ColouringCensus(NamedTuple):
    raw: int
    classes: int
    representatives: list[tuple[int, ...]]   # green class per orbit


def colouring_census(space: FiniteLinearSpace) -> ColouringCensus:
    """Count proper 2-colourings, raw and up to automorphism plus swap.

    A proper colouring is exactly a choice of green class that blocks every
    line, so the raw count is the number of blocking sets and the class count
    quotients them by the space's automorphisms and complementation.
    """
    if space.v > 21:
        raise OutOfRange(f"colouring census capped at 21 points, got {space.v}")
    raw = len(blocking_sets(space))
    orbits = essentially_different_blocking_sets(space)
    return ColouringCensus(raw, orbits.count, orbits.representatives)
