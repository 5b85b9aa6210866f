"""Core data model for finite linear spaces.

A finite linear space is a set of points 0..v-1 together with a set of lines
(point subsets of size >= 2) such that

    I1: every unordered point pair lies on exactly one line,
    I2: every line has at least two points,
    I3: not all points are collinear.

Lines are stored explicitly, including 2-lines; builders accept a partial line
list and complete every uncovered pair with an implicit 2-line.  Spaces are
immutable after construction and safe to share.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple, Optional, Sequence


class SpaceError(ValueError):
    """Base class for invalid finite-linear-space input."""


class BadLine(SpaceError):
    """A given line has fewer than two points, a duplicate, or a bad index."""


class PairDoubleCovered(SpaceError):
    """Two given lines share two or more points (violates I1)."""


class AllCollinear(SpaceError):
    """All points lie on a single line (violates I3)."""


class SamePoint(SpaceError):
    """An operation on a point pair received the same point twice."""


class OutOfRange(SpaceError):
    """A numeric argument is outside its supported range."""


class Line(NamedTuple):
    id: int
    points: tuple[int, ...]


class GridProfile(NamedTuple):
    """Capacity bound for the grid spanned by the lines through two points.

    Off the line pq there are at most (deg(p)-1)(deg(q)-1) points.
    """

    p: int
    q: int
    capacity: int
    off_line_count: int


def _mask(points: Iterable[int]) -> int:
    m = 0
    for p in points:
        m |= 1 << p
    return m


def _points(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


class FiniteLinearSpace:
    """Immutable point/line incidence structure satisfying I1-I3.

    ``lines`` holds every line (2-lines included) as a sorted point tuple, in
    canonical order: larger lines first, ties broken lexicographically.  The
    pair index is rebuilt on construction and never mutated.
    """

    __slots__ = ("v", "lines", "labels", "line_masks", "full_mask",
                 "_pair_line", "_lines_through", "_label_index")

    def __init__(self, v: int, lines: Iterable[Iterable[int]],
                 labels: Optional[Sequence[str]] = None):
        if v < 3:
            raise AllCollinear(f"a linear space needs 3 non-collinear points, got v={v}")
        canon = []
        for raw in lines:
            pts = tuple(sorted(raw))
            if len(pts) < 2 or len(set(pts)) != len(pts):
                raise BadLine(f"line {pts} must have >= 2 distinct points")
            if pts[0] < 0 or pts[-1] >= v:
                raise BadLine(f"line {pts} has an out-of-range point (v={v})")
            canon.append(pts)
        canon.sort(key=lambda pts: (-len(pts), pts))
        self.v = v
        self.lines = tuple(canon)
        self.line_masks = tuple(_mask(pts) for pts in self.lines)
        self.full_mask = (1 << v) - 1

        # I1: exact cover of all pairs; doubles surface as a pair seen twice.
        pair_line = [[-1] * v for _ in range(v)]
        for i, pts in enumerate(self.lines):
            for a in range(len(pts)):
                for b in range(a + 1, len(pts)):
                    p, q = pts[a], pts[b]
                    if pair_line[p][q] != -1:
                        raise PairDoubleCovered(
                            f"points {p},{q} lie on two lines "
                            f"({self.lines[pair_line[p][q]]} and {pts})")
                    pair_line[p][q] = pair_line[q][p] = i
        for p in range(v):
            for q in range(p + 1, v):
                if pair_line[p][q] == -1:
                    raise SpaceError(f"pair {p},{q} lies on no line; "
                                     "use build_space to complete 2-lines")
        self._pair_line = pair_line

        if len(self.lines) == 1:
            raise AllCollinear("all points lie on a single line")

        through: list[list[int]] = [[] for _ in range(v)]
        for i, pts in enumerate(self.lines):
            for p in pts:
                through[p].append(i)
        self._lines_through = tuple(tuple(t) for t in through)

        if labels is not None:
            labels = tuple(labels)
            if len(labels) != v:
                raise SpaceError(f"expected {v} labels, got {len(labels)}")
            for name in labels:
                if not name or any(c.isspace() for c in name):
                    raise SpaceError(f"bad label {name!r}: labels are "
                                     "non-empty whitespace-free tokens")
            if len(set(labels)) != v:
                raise SpaceError("labels must be unique")
            self.labels = labels
            self._label_index = {name: i for i, name in enumerate(labels)}
        else:
            self.labels = None
            self._label_index = None

    # -- identity is (v, lines); labels are presentation only ---------------

    def __eq__(self, other) -> bool:
        return (isinstance(other, FiniteLinearSpace)
                and self.v == other.v and self.lines == other.lines)

    def __hash__(self) -> int:
        return hash((self.v, self.lines))

    def __repr__(self) -> str:
        return f"FiniteLinearSpace(v={self.v}, lines={len(self.lines)})"

    # -- point helpers -------------------------------------------------------

    def label(self, p: int) -> str:
        return self.labels[p] if self.labels is not None else str(p)

    def point(self, label: str) -> int:
        """Index of a labelled point (falls back to numeric labels)."""
        if self._label_index is not None and label in self._label_index:
            return self._label_index[label]
        return int(label)

    def lines_through(self, p: int) -> tuple[int, ...]:
        return self._lines_through[p]

    def degree(self, p: int) -> int:
        """Number of lines through p."""
        if not 0 <= p < self.v:
            raise OutOfRange(f"point {p} not in 0..{self.v - 1}")
        return len(self._lines_through[p])

    def line_through(self, p: int, q: int) -> Line:
        """The unique line containing the two distinct points p and q."""
        if p == q:
            raise SamePoint(f"line_through needs two distinct points, got {p} twice")
        if not (0 <= p < self.v and 0 <= q < self.v):
            raise OutOfRange(f"points {p},{q} not in 0..{self.v - 1}")
        i = self._pair_line[p][q]
        return Line(i, self.lines[i])

    def grid_profile(self, p: int, q: int) -> GridProfile:
        """Grid bound at (p, q): off-line point count vs. capacity."""
        line = self.line_through(p, q)
        capacity = (self.degree(p) - 1) * (self.degree(q) - 1)
        return GridProfile(p, q, capacity, self.v - len(line.points))

    def line_size_profile(self) -> tuple[tuple[int, int], ...]:
        """((size, count), ...) ascending by size, over all lines."""
        counts: dict[int, int] = {}
        for pts in self.lines:
            counts[len(pts)] = counts.get(len(pts), 0) + 1
        return tuple(sorted(counts.items()))


def build_space(v: int, given_lines: Iterable[Iterable[int]],
                labels: Optional[Sequence[str]] = None) -> FiniteLinearSpace:
    """Complete a partial line list into a finite linear space.

    Every point pair not covered by a given line becomes an implicit 2-line.
    Raises BadLine / PairDoubleCovered / AllCollinear when I1-I3 cannot hold.
    """
    if v < 3:
        raise AllCollinear(f"a linear space needs 3 non-collinear points, got v={v}")
    canon = []
    for raw in given_lines:
        pts = tuple(sorted(raw))
        if len(pts) < 2 or len(set(pts)) != len(pts):
            raise BadLine(f"line {pts} must have >= 2 distinct points")
        if pts[0] < 0 or pts[-1] >= v:
            raise BadLine(f"line {pts} has an out-of-range point (v={v})")
        canon.append(pts)

    covered = [[False] * v for _ in range(v)]
    for i, pts in enumerate(canon):
        for a in range(len(pts)):
            for b in range(a + 1, len(pts)):
                p, q = pts[a], pts[b]
                if covered[p][q]:
                    raise PairDoubleCovered(f"points {p},{q} lie on two given lines")
                covered[p][q] = covered[q][p] = True

    complete = list(canon)
    for p in range(v):
        for q in range(p + 1, v):
            if not covered[p][q]:
                complete.append((p, q))
    return FiniteLinearSpace(v, complete, labels)


def induced_subspace(space: FiniteLinearSpace, subset: Iterable[int]) -> FiniteLinearSpace:
    """Restriction to a point subset: lines are the >=2-point intersections.

    Points are reindexed to 0..k-1 in ascending original order; labels carry
    over.  Raises AllCollinear when the restriction is collinear.
    """
    kept = sorted(set(subset))
    if len(kept) < 3:
        raise AllCollinear(f"subset of size {len(kept)} cannot satisfy I3")
    if kept[0] < 0 or kept[-1] >= space.v:
        raise OutOfRange("subset contains out-of-range points")
    index = {p: i for i, p in enumerate(kept)}
    new_lines = []
    for pts in space.lines:
        cut = tuple(index[p] for p in pts if p in index)
        if len(cut) >= 2:
            new_lines.append(cut)
    labels = tuple(space.label(p) for p in kept) if space.labels else None
    return FiniteLinearSpace(len(kept), new_lines, labels)


def is_proper_fls(space: FiniteLinearSpace) -> bool:
    """True iff every line has at least 3 points (no 2-lines)."""
    return all(len(pts) >= 3 for pts in space.lines)
