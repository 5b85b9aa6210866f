"""Two-colourings, blocking sets, neighbourhood types, and exact weights.

A proper 2-colouring leaves no line monochromatic; an MR geometry is a space
with such a colouring, equivalently a space with a distinguished blocking set
(either colour class blocks every line).  The weight of a point and the lemma
predicates here are the engine behind the small-geometry classification: all
arithmetic is exact (fractions), never floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, NamedTuple, Optional

from .incidence import FiniteLinearSpace, OutOfRange, induced_subspace, AllCollinear

GREEN = 0
RED = 1
COLOUR_NAMES = ("green", "red")

# A colouring is a per-point tuple of GREEN/RED; an ntype is the multiset of
# (green, red) line profiles at a point, canonicalized as a sorted tuple.
Colouring = tuple[int, ...]
NType = tuple[tuple[int, int], ...]


class MRGeometry:
    """A finite linear space with a total red/green point colouring.

    Properness (no monochromatic line) is a checkable predicate, not a
    construction-time requirement; catalog constructors assert it.
    """

    __slots__ = ("space", "colours", "green_mask", "red_mask", "g", "r",
                 "line_profiles")

    def __init__(self, space: FiniteLinearSpace, colours: Iterable[int]):
        colours = tuple(colours)
        if len(colours) != space.v:
            raise OutOfRange(f"expected {space.v} colours, got {len(colours)}")
        if any(c not in (GREEN, RED) for c in colours):
            raise OutOfRange("colours must be GREEN or RED")
        self.space = space
        self.colours = colours
        gm = 0
        for p, c in enumerate(colours):
            if c == GREEN:
                gm |= 1 << p
        self.green_mask = gm
        self.red_mask = space.full_mask ^ gm
        self.g = gm.bit_count()
        self.r = space.v - self.g
        self.line_profiles = tuple(
            ((m & gm).bit_count(), (m & self.red_mask).bit_count())
            for m in space.line_masks)

    def greens(self) -> tuple[int, ...]:
        return tuple(p for p in range(self.space.v) if self.colours[p] == GREEN)

    def reds(self) -> tuple[int, ...]:
        return tuple(p for p in range(self.space.v) if self.colours[p] == RED)

    def swap(self) -> "MRGeometry":
        return MRGeometry(self.space, tuple(1 - c for c in self.colours))

    def __eq__(self, other) -> bool:
        return (isinstance(other, MRGeometry)
                and self.space == other.space and self.colours == other.colours)

    def __hash__(self) -> int:
        return hash((self.space, self.colours))

    def __repr__(self) -> str:
        return f"MRGeometry(v={self.space.v}, g={self.g}, r={self.r})"


def is_proper(space: FiniteLinearSpace, colours: Iterable[int]) -> bool:
    """True iff no line is monochromatic under this total colouring."""
    mr = colours if isinstance(colours, MRGeometry) else MRGeometry(space, colours)
    return all(g >= 1 and r >= 1 for g, r in mr.line_profiles)


def blocking_sets(space: FiniteLinearSpace,
                  limit: Optional[int] = None) -> list[tuple[int, ...]]:
    """All subsets meeting every line in a point and a non-point.

    Backtracking over point membership with unit propagation: a line whose
    points are all decided on one side forces the last undecided one.  Output
    is sorted by (size, points) and closed under complement; an empty list
    means the space has no blocking set.
    """
    v = space.v
    masks = space.line_masks
    lines_at = [tuple(space.lines_through(p)) for p in range(v)]
    full = space.full_mask
    found: list[int] = []

    def propagate(inside: int, outside: int, todo: list[int]):
        # Returns (inside, outside) or None on contradiction.
        while todo:
            li = todo.pop()
            lm = masks[li]
            und = lm & ~(inside | outside)
            if lm & inside == 0:
                if und == 0:
                    return None
                if und & (und - 1) == 0:           # single candidate: force in
                    p = und.bit_length() - 1
                    inside |= und
                    todo.extend(lines_at[p])
            if lm & outside == 0:
                und = lm & ~(inside | outside)
                if und == 0:
                    return None
                if und & (und - 1) == 0:
                    p = und.bit_length() - 1
                    outside |= und
                    todo.extend(lines_at[p])
        return inside, outside

    def dfs(inside: int, outside: int):
        if limit is not None and len(found) >= limit:
            return
        und = full & ~(inside | outside)
        if und == 0:
            for lm in masks:
                if lm & inside == 0 or lm & outside == 0:
                    return
            found.append(inside)
            return
        p = (und & -und).bit_length() - 1
        for bit_side in (0, 1):
            ni, no = (inside | (1 << p), outside) if bit_side == 0 else (inside, outside | (1 << p))
            state = propagate(ni, no, list(lines_at[p]))
            if state is not None:
                dfs(*state)

    dfs(0, 0)
    out = [tuple(p for p in range(v) if m >> p & 1) for m in found]
    out.sort(key=lambda t: (len(t), t))
    return out


def ntype(mr: MRGeometry, p: int) -> NType:
    """Neighbourhood type: one (green, red) profile per line through p."""
    if not 0 <= p < mr.space.v:
        raise OutOfRange(f"point {p} not in 0..{mr.space.v - 1}")
    return tuple(sorted(mr.line_profiles[i] for i in mr.space.lines_through(p)))


def format_ntype(nt: NType) -> str:
    return "[" + " ".join(f"{g}/{r}" for g, r in nt) + "]"


def weight(mr: MRGeometry, p: int) -> Fraction:
    """Exact weight of a point.

    Green points sum C(reds-on-line, 2)/greens-on-line over their lines; red
    points use the colour-swapped formula.  Globally the green weights add up
    to C(r, 2) and the red weights to C(g, 2).
    """
    total = Fraction(0)
    for g, r in ntype(mr, p):
        if mr.colours[p] == GREEN:
            total += Fraction(comb(r, 2), g)
        else:
            total += Fraction(comb(g, 2), r)
    return total


class WeightSumReport(NamedTuple):
    green_sum: Fraction
    red_sum: Fraction
    expected_green: int
    expected_red: int
    ok: bool


def weight_sum_identity(mr: MRGeometry) -> WeightSumReport:
    """Check sum(green weights) == C(r,2) and sum(red weights) == C(g,2)."""
    gs = sum((weight(mr, p) for p in mr.greens()), Fraction(0))
    rs = sum((weight(mr, p) for p in mr.reds()), Fraction(0))
    eg, er = comb(mr.r, 2), comb(mr.g, 2)
    return WeightSumReport(gs, rs, eg, er, gs == eg and rs == er)


def delete_point(mr: MRGeometry, p: int) -> Optional[MRGeometry]:
    """Restriction to all points but p, or None when it is not an MR geometry.

    Deletion fails when the remaining points are collinear or when the
    restricted colouring has a monochromatic line.
    """
    keep = [q for q in range(mr.space.v) if q != p]
    try:
        sub = induced_subspace(mr.space, keep)
    except AllCollinear:
        return None
    rest = MRGeometry(sub, tuple(mr.colours[q] for q in keep))
    return rest if is_proper(sub, rest) else None


def is_minimal(mr: MRGeometry) -> bool:
    """True iff no single-point deletion yields an MR geometry."""
    return all(delete_point(mr, p) is None for p in range(mr.space.v))


@dataclass(frozen=True)
class LemmaCheck:
    name: str
    ok: bool
    detail: str = ""


@dataclass(frozen=True)
class LemmaReport:
    checks: tuple[LemmaCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def __getitem__(self, name: str) -> LemmaCheck:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)


def _neighbourhood_ok(mr: MRGeometry) -> tuple[bool, str]:
    # For a green point G and a line l through it with profile (x, y), let t
    # count the other lines through G carrying >= 2 green points.  Any valid
    # geometry satisfies t >= 2 and t*y <= (t-1)*(g - x); colours swap likewise.
    space = mr.space
    for p in range(space.v):
        own = mr.colours[p]
        through = space.lines_through(p)
        multi = [i for i in through
                 if mr.line_profiles[i][own] >= 2]
        for i in through:
            g_i, r_i = mr.line_profiles[i]
            x = (g_i, r_i)[own]
            y = (g_i, r_i)[1 - own]
            t = len(multi) - (1 if mr.line_profiles[i][own] >= 2 else 0)
            same_total = mr.g if own == GREEN else mr.r
            if t < 2 or t * y > (t - 1) * (same_total - x):
                return False, (f"point {space.label(p)} on line {i}: "
                               f"t={t}, x={x}, y={y}")
    return True, ""


def lemma_checks(mr: MRGeometry) -> LemmaReport:
    """Evaluate the lemma-level predicates a valid MR geometry must satisfy.

    degree-min-4: every point lies on at least four lines.
    colour-counts: at least six points of each colour, and at least three of
        each colour off every line.
    neighbourhood: the t*y <= (t-1)(g-x) inequality at every point/line flag.
    minimal-structure: when the geometry is minimal, every point lies on a
        line carrying exactly one point of its own colour and >= 2 of the
        other, degrees are at most (opposite class size - 1), and no line has
        more than min(g, r) - 1 points.
    six-colour-cap: a colour class of exactly six points forces v <= 13.
    grid-bound: off-line point count within (deg-1)(deg-1) for every pair.
    """
    space, checks = mr.space, []

    bad = [p for p in range(space.v) if space.degree(p) < 4]
    checks.append(LemmaCheck("degree-min-4", not bad,
                             "" if not bad else f"points {bad}"))

    ok = mr.g >= 6 and mr.r >= 6
    detail = "" if ok else f"g={mr.g}, r={mr.r}"
    if ok:
        for i, m in enumerate(space.line_masks):
            off_g = (mr.green_mask & ~m).bit_count()
            off_r = (mr.red_mask & ~m).bit_count()
            if off_g < 3 or off_r < 3:
                ok, detail = False, f"line {i}: {off_g} green / {off_r} red off it"
                break
    checks.append(LemmaCheck("colour-counts", ok, detail))

    ok, detail = _neighbourhood_ok(mr)
    checks.append(LemmaCheck("neighbourhood", ok, detail))

    ok, detail = True, "not minimal; vacuous"
    if is_minimal(mr):
        detail = ""
        cap = min(mr.g, mr.r) - 1
        for pts in space.lines:
            if len(pts) > cap:
                ok, detail = False, f"line {pts} longer than {cap}"
        for p in range(space.v):
            own = mr.colours[p]
            opp_total = mr.r if own == GREEN else mr.g
            profs = [mr.line_profiles[i] for i in space.lines_through(p)]
            if not any(pr[own] == 1 and pr[1 - own] >= 2 for pr in profs):
                ok, detail = False, f"point {space.label(p)} lacks a [1/b]-line"
            if space.degree(p) > opp_total - 1:
                ok, detail = False, f"point {space.label(p)} degree too high"
    checks.append(LemmaCheck("minimal-structure", ok, detail))

    ok = (mr.g != 6 or space.v <= 13) and (mr.r != 6 or space.v <= 13)
    checks.append(LemmaCheck("six-colour-cap", ok,
                             "" if ok else f"class of 6 but v={space.v}"))

    ok, detail = True, ""
    for p in range(space.v):
        for q in range(p + 1, space.v):
            prof = space.grid_profile(p, q)
            if prof.off_line_count > prof.capacity:
                ok, detail = False, f"pair ({p},{q})"
    checks.append(LemmaCheck("grid-bound", ok, detail))

    return LemmaReport(tuple(checks))
