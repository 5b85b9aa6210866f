"""Isomorphism and automorphism search for spaces and coloured geometries.

Backtracking over point images with invariant pruning: points are classified
by an iterated point/line colour refinement, candidate images must share a
class, and partial maps must send lines into lines of equal size.  No
canonical-form machinery: direct search is fast and verifiable at v <= 31.

An isomorphism of coloured geometries maps colour classes to colour classes;
the map that exchanges the two classes globally counts (``swaps_colours``),
matching how extensions that differ only in the new point's colour are
identified.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional, Union

from .coloring import GREEN, MRGeometry, blocking_sets
from .incidence import FiniteLinearSpace

Geometry = Union[FiniteLinearSpace, MRGeometry]


@dataclass(frozen=True)
class Isomorphism:
    """A point bijection sending lines to lines (and colours to colours)."""

    mapping: tuple[int, ...]
    swaps_colours: bool = False

    def __call__(self, p: int) -> int:
        return self.mapping[p]

    def is_identity(self) -> bool:
        return all(i == m for i, m in enumerate(self.mapping))


def point_invariant(space: FiniteLinearSpace, p: int,
                    colours: Optional[tuple[int, ...]] = None):
    """Base per-point invariant: colour, degree, line sizes, line profiles."""
    sizes = tuple(sorted(len(space.lines[i]) for i in space.lines_through(p)))
    if colours is None:
        return (-1, space.degree(p), sizes, ())
    profs = []
    for i in space.lines_through(p):
        m = space.line_masks[i]
        g = sum(1 for q in space.lines[i] if colours[q] == GREEN)
        profs.append((g, m.bit_count() - g))
    return (colours[p], space.degree(p), sizes, tuple(sorted(profs)))


def _refined_classes(space: FiniteLinearSpace,
                     colours: Optional[tuple[int, ...]] = None,
                     rounds: int = 3) -> tuple[list[int], tuple]:
    """Iterated refinement of point/line classes.

    Class ids are ranks of the underlying invariant tuples, so two isomorphic
    inputs get identical ids.  Returns (per-point class, certificate), where
    the certificate is an isomorphism-invariant summary usable for bucketing.
    """
    v = space.v
    pcol = [point_invariant(space, p, colours) for p in range(v)]
    ranks = {t: i for i, t in enumerate(sorted(set(pcol)))}
    pcol = [ranks[t] for t in pcol]
    lcol = [0] * len(space.lines)
    history = []
    for _ in range(rounds):
        raw_l = [(len(pts), tuple(sorted(pcol[p] for p in pts)))
                 for pts in space.lines]
        ranks = {t: i for i, t in enumerate(sorted(set(raw_l)))}
        lcol = [ranks[t] for t in raw_l]
        raw_p = [(pcol[p], tuple(sorted(lcol[i] for i in space.lines_through(p))))
                 for p in range(v)]
        ranks = {t: i for i, t in enumerate(sorted(set(raw_p)))}
        new_p = [ranks[t] for t in raw_p]
        if new_p == pcol and history:
            break
        pcol = new_p
        history.append((tuple(sorted(pcol)), tuple(sorted(lcol))))
    cert = (v, tuple(sorted(len(pts) for pts in space.lines)), tuple(history))
    return pcol, cert


def certificate(space: FiniteLinearSpace,
                colours: Optional[tuple[int, ...]] = None) -> tuple:
    """Isomorphism-invariant summary; equal for isomorphic inputs.

    Not complete: equal certificates still need an exact search to confirm.
    """
    return _refined_classes(space, colours)[1]


def _search(a: FiniteLinearSpace, b: FiniteLinearSpace,
            a_classes: list[int], b_classes: list[int],
            find_all: bool) -> list[tuple[int, ...]]:
    v = a.v
    if v != b.v or sorted(a_classes) != sorted(b_classes):
        return []
    b_line_masks = set(b.line_masks)

    # Static point order: anchor each point to as many already-ordered
    # co-linear pairs as possible so line images force candidates early.
    class_size = {c: a_classes.count(c) for c in set(a_classes)}
    remaining = set(range(v))
    first = min(remaining, key=lambda p: (class_size[a_classes[p]], p))
    order = [first]
    remaining.remove(first)
    in_order = {first}
    while remaining:
        def anchored(p: int) -> int:
            n = 0
            for i in a.lines_through(p):
                if sum(1 for q in a.lines[i] if q in in_order) >= 2:
                    n += 1
            return n
        nxt = max(remaining,
                  key=lambda p: (anchored(p), -class_size[a_classes[p]], -p))
        order.append(nxt)
        remaining.remove(nxt)
        in_order.add(nxt)

    by_class: dict[int, list[int]] = {}
    for q in range(b.v):
        by_class.setdefault(b_classes[q], []).append(q)

    sigma = [-1] * v
    used = [False] * v
    line_map = [-1] * len(a.lines)
    line_map_inv = [-1] * len(b.lines)
    results: list[tuple[int, ...]] = []

    def candidates(p: int) -> list[int]:
        best = None
        for i in a.lines_through(p):
            j = line_map[i]
            if j >= 0:
                opts = [q for q in b.lines[j] if not used[q]
                        and b_classes[q] == a_classes[p]]
                if best is None or len(opts) < len(best):
                    best = opts
        if best is not None:
            return best
        return [q for q in by_class.get(a_classes[p], []) if not used[q]]

    def place(p: int, q: int) -> Optional[list[tuple[int, int]]]:
        trail = []
        for r in range(v):
            if sigma[r] < 0 or r == p:
                continue
            i = a._pair_line[p][r]
            j = b._pair_line[q][sigma[r]]
            if len(a.lines[i]) != len(b.lines[j]):
                return _undo(trail)
            if line_map[i] == -1:
                if line_map_inv[j] != -1:
                    return _undo(trail)
                line_map[i] = j
                line_map_inv[j] = i
                trail.append((i, j))
            elif line_map[i] != j:
                return _undo(trail)
        return trail

    def _undo(trail):
        for i, j in trail:
            line_map[i] = -1
            line_map_inv[j] = -1
        return None

    def dfs(depth: int) -> bool:
        if depth == v:
            for i, m in enumerate(a.line_masks):
                im = 0
                for p in a.lines[i]:
                    im |= 1 << sigma[p]
                if im not in b_line_masks:
                    return False
            results.append(tuple(sigma))
            return not find_all
        p = order[depth]
        for q in sorted(candidates(p)):
            trail = place(p, q)
            if trail is None:
                continue
            sigma[p] = q
            used[q] = True
            done = dfs(depth + 1)
            sigma[p] = -1
            used[q] = False
            _undo(trail)
            if done:
                return True
        return False

    dfs(0)
    return results


def find_isomorphism(a: Geometry, b: Geometry,
                     mode: str = "first") -> list[Isomorphism]:
    """Isomorphisms a -> b; the empty list means non-isomorphic.

    Plain spaces give line-preserving bijections.  Coloured geometries also
    require colour classes to map to colour classes; both the identity and the
    swapped class assignment are tried, and each result records which applied.
    mode="all" returns the complete list in deterministic order.
    """
    if mode not in ("first", "all"):
        raise ValueError(f"mode must be 'first' or 'all', not {mode!r}")
    find_all = mode == "all"
    out: list[Isomorphism] = []
    if isinstance(a, MRGeometry) != isinstance(b, MRGeometry):
        raise TypeError("cannot mix a coloured geometry with a bare space")
    if isinstance(a, MRGeometry):
        swapped = tuple(1 - c for c in b.colours)
        for b_cols, swaps in ((b.colours, False), (swapped, True)):
            n_green = b_cols.count(GREEN)
            if (a.g, a.r) != (n_green, len(b_cols) - n_green):
                continue
            ca, _ = _refined_classes(a.space, a.colours)
            cb, _ = _refined_classes(b.space, b_cols)
            for m in _search(a.space, b.space, ca, cb, find_all):
                out.append(Isomorphism(m, swaps))
            if out and not find_all:
                return out[:1]
    else:
        ca, _ = _refined_classes(a)
        cb, _ = _refined_classes(b)
        out = [Isomorphism(m) for m in _search(a, b, ca, cb, find_all)]
        if out and not find_all:
            return out[:1]
    out.sort(key=lambda iso: (iso.swaps_colours, iso.mapping))
    return out


def isomorphic(a: Geometry, b: Geometry) -> bool:
    return bool(find_isomorphism(a, b, mode="first"))


def automorphisms(x: Geometry) -> list[Isomorphism]:
    """The full automorphism group, identity first then sorted mappings."""
    autos = find_isomorphism(x, x, mode="all")
    autos.sort(key=lambda iso: (not iso.is_identity(),
                                iso.swaps_colours, iso.mapping))
    return autos


class BlockingOrbits(NamedTuple):
    count: int
    representatives: list[tuple[int, ...]]


def essentially_different_blocking_sets(space: FiniteLinearSpace) -> BlockingOrbits:
    """Orbits of blocking sets under space automorphisms and complementation.

    Returns the orbit count and the lexicographically least member of each
    orbit, sorted.
    """
    blocks = blocking_sets(space)
    if not blocks:
        return BlockingOrbits(0, [])
    full = space.full_mask
    maps = [iso.mapping for iso in automorphisms(space)]
    masks = []
    for pts in blocks:
        m = 0
        for p in pts:
            m |= 1 << p
        masks.append(m)
    mask_set = set(masks)
    seen: set[int] = set()
    reps = []
    for m in masks:
        if m in seen:
            continue
        orbit = set()
        for mp in maps:
            im = 0
            mm = m
            while mm:
                low = mm & -mm
                im |= 1 << mp[low.bit_length() - 1]
                mm ^= low
            orbit.add(im)
            orbit.add(full ^ im)
        if not orbit <= mask_set:
            raise RuntimeError("blocking sets are not closed under automorphisms")
        seen |= orbit
        reps.append(min(tuple(p for p in range(space.v) if om >> p & 1)
                        for om in orbit))
    reps.sort()
    return BlockingOrbits(len(reps), reps)
