"""Catalog of the small two-coloured geometries and their parent planes.

Builds PG(2,q) for q in {2,3,4,5} from field coordinates, the cyclic
Z7 x Z3 presentation of PG(2,4), the ten named geometries on 12..15 points
(MR12 .. MR15_5), the complete-quadrilateral existence construction, and the
GF(4) coordinatization consistency check.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import NamedTuple, Optional

from .coloring import GREEN, RED, MRGeometry, is_proper
from .incidence import (FiniteLinearSpace, OutOfRange, SpaceError,
                        build_space, induced_subspace)
from .iso import find_isomorphism


class UnsupportedOrder(SpaceError):
    """Plane order outside the supported set."""


class UnknownName(SpaceError):
    """Not one of the ten catalog names."""


class NoDistinctAB(SpaceError):
    """The quadrilateral construction found no two distinct patch points."""


NAMES = ("MR12", "MR13", "MR14_1", "MR14_2", "MR15_1",
         "MR15_2", "MR15_3r", "MR15_3g", "MR15_4", "MR15_5")

# GF(4) = {0, 1, a, a+1} encoded 0..3 with a*a = a+1; addition is xor.
_GF4_MUL = ((0, 0, 0, 0),
            (0, 1, 2, 3),
            (0, 2, 3, 1),
            (0, 3, 1, 2))
_GF4_INV = (None, 1, 3, 2)


def gf4_add(x: int, y: int) -> int:
    return x ^ y


def gf4_mul(x: int, y: int) -> int:
    return _GF4_MUL[x][y]


def _field_ops(q: int):
    if q == 4:
        return gf4_add, gf4_mul
    return (lambda x, y: (x + y) % q), (lambda x, y: (x * y) % q)


def _normalized_triples(q: int) -> list[tuple[int, int, int]]:
    # Projective representatives: last nonzero coordinate equals 1.
    out = []
    for x in range(q):
        for y in range(q):
            for z in range(q):
                if (x, y, z) == (0, 0, 0):
                    continue
                last = z if z else (y if y else x)
                if last == 1:
                    out.append((x, y, z))
    return out


@lru_cache(maxsize=None)
def pg2(q: int) -> FiniteLinearSpace:
    """The projective plane of order q from homogeneous field coordinates."""
    if q not in (2, 3, 4, 5):
        raise UnsupportedOrder(f"pg2 supports orders 2..5, not {q}")
    add, mul = _field_ops(q)
    points = _normalized_triples(q)
    index = {pt: i for i, pt in enumerate(points)}
    lines = []
    for coeff in points:
        line = [index[pt] for pt in points
                if add(add(mul(coeff[0], pt[0]), mul(coeff[1], pt[1])),
                       mul(coeff[2], pt[2])) == 0]
        lines.append(line)
    labels = tuple(f"{x}{y}{z}" for x, y, z in points)
    space = build_space(len(points), lines, labels)
    assert space.v == q * q + q + 1 and len(space.lines) == space.v
    return space


_Z7Z3_F = (6, 3, 0, 5, 1, 2, 4)


@lru_cache(maxsize=None)
def pg24_z7z3() -> FiniteLinearSpace:
    """PG(2,4) on points i_j (i mod 7, j mod 3).

    Lines are {i_j, (i+1)_j, (i+3)_j, f(i)_{j+1}, f(i)_{j+2}} with
    f = (6, 3, 0, 5, 1, 2, 4); each {i_j : i} is a Baer subplane.
    """
    def idx(i: int, j: int) -> int:
        return 3 * (i % 7) + (j % 3)

    lines = []
    for j in range(3):
        for i in range(7):
            f = _Z7Z3_F[i]
            lines.append((idx(i, j), idx(i + 1, j), idx(i + 3, j),
                          idx(f, j + 1), idx(f, j + 2)))
    labels = tuple(f"{i}_{j}" for i in range(7) for j in range(3))
    return build_space(21, lines, labels)


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    geometry: MRGeometry
    note: str

    @property
    def v(self) -> int:
        return self.geometry.space.v


def _colour_by_labels(space: FiniteLinearSpace, green_labels) -> MRGeometry:
    green = set(green_labels)
    missing = green - set(space.labels or ())
    if missing:
        raise SpaceError(f"labels {missing} not in space")
    mr = MRGeometry(space, tuple(
        GREEN if space.label(p) in green else RED for p in range(space.v)))
    if not is_proper(space, mr.colours):
        raise SpaceError("catalog construction produced an improper colouring")
    return mr


def _pg3_quadrilateral() -> tuple[FiniteLinearSpace, tuple[int, ...], tuple[int, ...]]:
    # Lowest-index four points of PG(2,3) in general position, plus the three
    # diagonal points of the complete quadrilateral they span.
    plane = pg2(3)

    def collinear(a: int, b: int, c: int) -> bool:
        return c in plane.line_through(a, b).points

    for quad in combinations(range(plane.v), 4):
        if not any(collinear(*trip) for trip in combinations(quad, 3)):
            break
    else:  # pragma: no cover - PG(2,3) always has a quadrilateral
        raise SpaceError("no quadrilateral found")
    a, b, c, d = quad

    def meet(l1, l2) -> int:
        common = set(l1.points) & set(l2.points)
        assert len(common) == 1
        return common.pop()

    diagonals = tuple(sorted((
        meet(plane.line_through(a, b), plane.line_through(c, d)),
        meet(plane.line_through(a, c), plane.line_through(b, d)),
        meet(plane.line_through(a, d), plane.line_through(b, c)))))
    return plane, quad, diagonals


def _mr13() -> MRGeometry:
    plane, quad, diagonals = _pg3_quadrilateral()
    block = set(quad) | set(diagonals)
    assert len(block) == 7
    mr = MRGeometry(plane, tuple(
        GREEN if p in block else RED for p in range(plane.v)))
    if not is_proper(plane, mr.colours):
        raise SpaceError("quadrilateral plus diagonals failed to block PG(2,3)")
    return mr


def _mr12() -> MRGeometry:
    mr13 = _mr13()
    _, _, diagonals = _pg3_quadrilateral()
    keep = [p for p in range(13) if p != diagonals[0]]
    sub = induced_subspace(mr13.space, keep)
    return MRGeometry(sub, tuple(mr13.colours[p] for p in keep))


_BAER0 = tuple(f"{i}_0" for i in range(7))
_BAER1 = tuple(f"{i}_1" for i in range(7))
_MR14_2_EXTRA = ("2_1", "4_1", "5_1", "6_1", "0_2", "1_2", "3_2")


def _induced_by_labels(labels) -> FiniteLinearSpace:
    pg = pg24_z7z3()
    return induced_subspace(pg, [pg.point(s) for s in labels])


def _mr15_2() -> MRGeometry:
    # Close off the seven 2-lines of MR14_1 with one new point at infinity.
    base = _induced_by_labels(_BAER0 + _BAER1)
    inf = base.v
    lines = [pts if len(pts) >= 3 else pts + (inf,) for pts in base.lines]
    space = build_space(inf + 1, lines, (base.labels or ()) + ("∞",))
    return _colour_by_labels(space, set(_BAER0) | {"∞"})


@lru_cache(maxsize=None)
def named(name: str) -> CatalogEntry:
    """One of the ten catalog geometries, built exactly as described."""
    if name not in NAMES:
        raise UnknownName(f"unknown catalog name {name!r}; names are {NAMES}")
    if name == "MR13":
        return CatalogEntry(name, _mr13(),
                            "projective plane of order 3; blocking set = "
                            "complete quadrilateral plus its diagonal points")
    if name == "MR12":
        return CatalogEntry(name, _mr12(),
                            "punctured projective plane of order 3 "
                            "(a diagonal point removed)")
    if name == "MR14_1":
        space = _induced_by_labels(_BAER0 + _BAER1)
        return CatalogEntry(name, _colour_by_labels(space, _BAER0),
                            "union of two Baer subplanes of PG(2,4)")
    if name == "MR14_2":
        space = _induced_by_labels(_BAER0 + _MR14_2_EXTRA)
        return CatalogEntry(name, _colour_by_labels(space, _BAER0),
                            "a Baer subplane of PG(2,4) plus seven points")
    if name == "MR15_1":
        space = _induced_by_labels(_BAER0 + _BAER1 + ("6_2",))
        return CatalogEntry(name, _colour_by_labels(space, set(_BAER0) | {"6_2"}),
                            "MR14_1 plus the PG(2,4) point 6_2 (green)")
    if name == "MR15_2":
        return CatalogEntry(name, _mr15_2(),
                            "MR14_1 with one new point on all seven 2-lines")
    if name in ("MR15_3r", "MR15_3g"):
        space = _induced_by_labels(_BAER0 + _MR14_2_EXTRA + ("4_2",))
        greens = set(_BAER0) | ({"4_2"} if name == "MR15_3g" else set())
        return CatalogEntry(name, _colour_by_labels(space, greens),
                            f"MR14_2 plus 4_2 coloured "
                            f"{'green' if name == 'MR15_3g' else 'red'}")
    if name == "MR15_4":
        space = _induced_by_labels(_BAER0 + _MR14_2_EXTRA + ("3_1",))
        return CatalogEntry(name, _colour_by_labels(space, _BAER0),
                            "MR14_2 plus 3_1 (red)")
    # MR15_5: drop four points of one PG(2,4) line and two of another,
    # keeping their meet.
    deleted = {"0_1", "1_1", "3_1", "6_2", "0_2", "3_2"}
    pg = pg24_z7z3()
    keep = [lab for lab in pg.labels if lab not in deleted]
    space = _induced_by_labels(keep)
    greens = {"0_0", "1_0", "3_0", "4_0", "5_1", "1_2", "5_2"}
    return CatalogEntry("MR15_5", _colour_by_labels(space, greens),
                        "the minimal 15-point geometry")


def all_entries() -> tuple[CatalogEntry, ...]:
    return tuple(named(n) for n in NAMES)


@lru_cache(maxsize=None)
def mr14_2_second_representation() -> MRGeometry:
    """MR14_2 presented on points G, G_i, H_i (green) and R, R_i, S_i (red).

    The 20 lines are generated by an index i = 1, 2, 3 taken modulo 3, e.g.
    the 5-line G R_1 R_2 R_3 R, the 4-line R H_1 H_2 H_3, and the families
    G G_i H_i S_i, G_i G_{i+1} H_{i-1} R_{i+1}, H_{i-1} R_{i-1} S_i S_{i+1},
    R S_i G_{i-1}, G_{i+1} S_i R_i, H_i R_{i+1}.
    """
    names = ("G", "G_1", "G_2", "G_3", "H_1", "H_2", "H_3",
             "R", "R_1", "R_2", "R_3", "S_1", "S_2", "S_3")
    g, r = 0, 7
    gi = (1, 2, 3)
    hi = (4, 5, 6)
    ri = (8, 9, 10)
    si = (11, 12, 13)
    lines = [(g, ri[0], ri[1], ri[2], r), (r, hi[0], hi[1], hi[2])]
    for k in range(3):
        up, dn = (k + 1) % 3, (k - 1) % 3
        lines += [(g, gi[k], hi[k], si[k]),
                  (gi[k], gi[up], hi[dn], ri[up]),
                  (hi[dn], ri[dn], si[k], si[up]),
                  (r, si[k], gi[dn]),
                  (gi[up], si[k], ri[k]),
                  (hi[k], ri[up])]
    space = build_space(14, lines, names)
    return _colour_by_labels(space, {"G", "G_1", "G_2", "G_3",
                                     "H_1", "H_2", "H_3"})


def quadrilateral_mr(q: int, v: int) -> MRGeometry:
    """Existence construction: a valid v-point geometry inside PG(2,q).

    Colour the sides of a complete quadrilateral green/green/red/red with the
    four outer vertices flipped, patch the two uncovered diagonals with one
    point each, then adjoin surplus plane points with alternating colours.
    Valid for 4q <= v <= q^2 + q + 1.
    """
    if q not in (3, 4, 5):
        raise UnsupportedOrder(f"quadrilateral_mr supports q in 3..5, not {q}")
    n = q * q + q + 1
    if not 4 * q <= v <= n:
        raise OutOfRange(f"v={v} outside [{4 * q}, {n}] for q={q}")
    plane = pg2(q)

    for ids in combinations(range(len(plane.lines)), 4):
        pts = [set(plane.lines[i]) for i in ids]
        meets = {frozenset(pts[x] & pts[y]) for x, y in combinations(range(4), 2)}
        if len(meets) == 6:       # no three sides concurrent
            break
    else:  # pragma: no cover
        raise SpaceError("no complete quadrilateral found")

    def meet(x: int, y: int) -> int:
        return next(iter(pts[x - 1] & pts[y - 1]))

    sides = pts[0] | pts[1] | pts[2] | pts[3]
    colour: dict[int, int] = {}
    for p in pts[0] | pts[1]:
        colour[p] = GREEN
    for p in pts[2] | pts[3]:
        colour[p] = RED
    colour[meet(1, 4)] = RED
    colour[meet(2, 3)] = RED
    colour[meet(1, 3)] = GREEN
    colour[meet(2, 4)] = GREEN

    def patch(end1: int, end2: int, shade: int, skip: Optional[int]) -> int:
        line = plane.line_through(end1, end2).points
        for p in line:
            if p not in sides and p != skip:
                colour[p] = shade
                return p
        raise NoDistinctAB("no free point on a diagonal line")

    a = patch(meet(1, 4), meet(2, 3), GREEN, None)
    b = patch(meet(1, 3), meet(2, 4), RED, a)

    base = sorted(colour)
    assert len(base) == 4 * q
    surplus = [p for p in range(plane.v) if p not in colour][:v - 4 * q]
    for k, p in enumerate(surplus):
        colour[p] = GREEN if k % 2 == 0 else RED

    chosen = sorted(colour)
    sub = induced_subspace(plane, chosen)
    mr = MRGeometry(sub, tuple(colour[p] for p in chosen))
    if not is_proper(sub, mr.colours):
        raise SpaceError("quadrilateral construction gave an improper colouring")
    return mr


# -- GF(4) coordinatization check -------------------------------------------

Triple = tuple[int, int, int]


def _gf4_normalize(t: Triple) -> Triple:
    last = t[2] if t[2] else (t[1] if t[1] else t[0])
    if last == 0:
        return (0, 0, 0)
    inv = _GF4_INV[last]
    return (gf4_mul(t[0], inv), gf4_mul(t[1], inv), gf4_mul(t[2], inv))


def _gf4_cross(p: Triple, q: Triple) -> Triple:
    # Characteristic 2: the antisymmetric terms add.
    return _gf4_normalize((
        gf4_add(gf4_mul(p[1], q[2]), gf4_mul(p[2], q[1])),
        gf4_add(gf4_mul(p[2], q[0]), gf4_mul(p[0], q[2])),
        gf4_add(gf4_mul(p[0], q[1]), gf4_mul(p[1], q[0]))))


def _gf4_dot(c: Triple, p: Triple) -> int:
    return gf4_add(gf4_add(gf4_mul(c[0], p[0]), gf4_mul(c[1], p[1])),
                   gf4_mul(c[2], p[2]))


class CheckItem(NamedTuple):
    name: str
    ok: bool
    detail: str = ""


@dataclass(frozen=True)
class EmbeddingReport:
    checks: tuple[CheckItem, ...]
    coordinates: dict  # label -> normalized GF(4) triple

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)


# The anchor coordinates forced by the coordinatization argument: a is the
# primitive element (a*a = a + 1, encoded 2), a+1 encoded 3.
_ANCHORS: dict[str, Triple] = {
    "0_0": (0, 0, 1), "1_0": (1, 0, 1), "5_0": (0, 1, 1),
    "3_0": (1, 0, 0), "4_0": (0, 1, 0), "2_0": (1, 1, 1),
    "6_0": (1, 1, 0), "2_1": (2, 3, 1), "6_1": (2, 0, 1),
    "4_1": (3, 3, 1),
}

_ANCHOR_COLLINEARITIES = (
    ("1_0", "2_0", "4_0"),
    ("2_0", "3_0", "5_0"),
    ("0_0", "2_0", "6_0"),
    ("1_0", "5_0", "6_0"),
    ("2_1", "4_0", "6_1"),
    ("0_0", "3_0", "6_1"),
    ("2_1", "4_1", "3_0"),
    ("0_0", "2_0", "4_1", "6_0"),
)


def verify_gf4_embedding() -> EmbeddingReport:
    """Rebuild the GF(4) coordinates of the Z7 x Z3 plane and check them.

    Propagates the ten anchor coordinates to all 21 points through line
    intersections, then verifies: the anchor collinearities, the forced
    characteristic-2 identity, that the extension is a bijection onto the
    coordinate plane with every model line collinear, a search-based
    isomorphism with pg2(4), and that the coordinate lines through the pairs
    (2_0,2_1), (4_0,4_1), (6_0,6_1) are not concurrent.
    """
    pg = pg24_z7z3()
    coords: dict[int, Triple] = {pg.point(lab): t for lab, t in _ANCHORS.items()}
    checks: list[CheckItem] = []

    ok, bad = True, ""
    for group in _ANCHOR_COLLINEARITIES:
        ids = [pg.point(lab) for lab in group]
        c = _gf4_cross(coords[ids[0]], coords[ids[1]])
        if any(_gf4_dot(c, coords[i]) != 0 for i in ids[2:]):
            ok, bad = False, " ".join(group)
            break
    checks.append(CheckItem("anchor-collinearities", ok, bad))

    # 1 = -1 in GF(4): the two derivations of the coordinate (1,1,0) agree.
    neg_one = _gf4_normalize((1, gf4_add(0, 1), 0))   # (1, -1, 0) with -1 == 1
    checks.append(CheckItem("char-2-identity", neg_one == (1, 1, 0),
                            "forced [1,1,0] == [1,-1,0]"))

    changed = True
    while changed:
        changed = False
        for u in range(pg.v):
            if u in coords:
                continue
            found: list[Triple] = []
            for i in pg.lines_through(u):
                known = [p for p in pg.lines[i] if p in coords]
                if len(known) >= 2:
                    c = _gf4_cross(coords[known[0]], coords[known[1]])
                    if c != (0, 0, 0) and c not in found:
                        found.append(c)
                if len(found) == 2:
                    break
            if len(found) == 2:
                t = _gf4_cross(found[0], found[1])
                if t != (0, 0, 0):
                    coords[u] = t
                    changed = True
    checks.append(CheckItem("unique-extension", len(coords) == pg.v,
                            f"{len(coords)} of {pg.v} points coordinatized"))

    distinct = len(set(coords.values())) == len(coords)
    checks.append(CheckItem("bijection", distinct and len(coords) == 21))

    ok, bad = True, ""
    if len(coords) == pg.v:
        for i, pts in enumerate(pg.lines):
            c = _gf4_cross(coords[pts[0]], coords[pts[1]])
            if any(_gf4_dot(c, coords[p]) != 0 for p in pts):
                ok, bad = False, f"model line {i}"
                break
    else:
        ok = False
    checks.append(CheckItem("lines-collinear", ok, bad))

    checks.append(CheckItem("plane-isomorphic",
                            bool(find_isomorphism(pg, pg2(4), mode="first")),
                            "pg24_z7z3 vs pg2(4) by search"))

    ok, detail = False, "missing coordinates"
    if len(coords) == pg.v:
        cs = [_gf4_cross(coords[pg.point(f"{i}_0")], coords[pg.point(f"{i}_1")])
              for i in (2, 4, 6)]
        meets = {_gf4_cross(cs[0], cs[1]), _gf4_cross(cs[0], cs[2]),
                 _gf4_cross(cs[1], cs[2])}
        ok = len(meets) == 3
        detail = f"{len(meets)} distinct pairwise meets"
    checks.append(CheckItem("non-concurrency", ok, detail))

    labelled = {pg.label(p): t for p, t in sorted(coords.items())}
    return EmbeddingReport(tuple(checks), labelled)
