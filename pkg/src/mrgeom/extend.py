"""Partial parallel classes and one-point extensions.

A ppc partitions the points into lines and singletons; it is extendable for a
coloured geometry when all singletons share a colour.  Each singleton-free
eppc yields two extensions (the new point may take either colour) and each
eppc with singletons yields exactly one, the new point taking the colour
opposite to the singletons (their new 2-lines must stay bichromatic).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence

from .coloring import GREEN, RED, MRGeometry, is_proper
from .incidence import FiniteLinearSpace, build_space
from .iso import find_isomorphism


@dataclass(frozen=True)
class PartialParallelClass:
    """Disjoint blocks (lines or singletons) covering every point."""

    blocks: tuple[tuple[int, ...], ...]

    def singletons(self) -> tuple[int, ...]:
        return tuple(b[0] for b in self.blocks if len(b) == 1)

    def line_blocks(self) -> tuple[tuple[int, ...], ...]:
        return tuple(b for b in self.blocks if len(b) > 1)


@dataclass(frozen=True)
class ExtendablePPC:
    """A ppc whose singletons (if any) share a colour.

    ``forced_colour`` is the colour the new point must take (opposite to the
    singletons), or None when there are no singletons and either colour works.
    """

    ppc: PartialParallelClass
    forced_colour: Optional[int]


def partial_parallel_classes(space: FiniteLinearSpace) -> list[PartialParallelClass]:
    """All ppcs, by exact-cover backtracking on the smallest uncovered point.

    Every line of the space is an eligible block, 2-lines included.  Each
    branch covers the lowest uncovered point by one of the still-disjoint
    lines through it, or leaves it a singleton.
    """
    v = space.v
    masks = space.line_masks
    full = space.full_mask
    out: list[PartialParallelClass] = []
    blocks: list[tuple[int, ...]] = []

    def dfs(covered: int):
        if covered == full:
            out.append(PartialParallelClass(
                tuple(sorted(blocks, key=lambda b: b[0]))))
            return
        rest = full & ~covered
        p = (rest & -rest).bit_length() - 1
        for i in space.lines_through(p):
            if masks[i] & covered == 0:
                blocks.append(space.lines[i])
                dfs(covered | masks[i])
                blocks.pop()
        blocks.append((p,))
        dfs(covered | (1 << p))
        blocks.pop()

    dfs(0)
    return out


def extendable_ppcs(mr: MRGeometry) -> list[ExtendablePPC]:
    """The ppcs whose singletons are monochromatic, with the forced colour."""
    out = []
    for ppc in partial_parallel_classes(mr.space):
        singles = ppc.singletons()
        shades = {mr.colours[p] for p in singles}
        if len(shades) > 1:
            continue
        forced = None if not shades else (GREEN if shades == {RED} else RED)
        out.append(ExtendablePPC(ppc, forced))
    return out


class Extensions(NamedTuple):
    all: list[MRGeometry]
    classes: list[MRGeometry]


def one_point_extension(mr: MRGeometry, eppc: ExtendablePPC,
                        colour: Optional[int] = None) -> MRGeometry:
    """Adjoin a new point (index v, label ∞) through every block of the eppc.

    Blocks grow by the new point; singleton blocks become 2-lines.  The colour
    argument picks a side for a singleton-free eppc and must equal the forced
    colour otherwise.
    """
    if eppc.forced_colour is not None:
        if colour is not None and colour != eppc.forced_colour:
            raise ValueError("colour contradicts the eppc's forced colour")
        colour = eppc.forced_colour
    elif colour is None:
        raise ValueError("a singleton-free eppc extends with either colour; pick one")
    space = mr.space
    inf = space.v
    replaced = set(eppc.ppc.line_blocks())
    lines = [pts for pts in space.lines if pts not in replaced]
    lines += [b + (inf,) for b in eppc.ppc.blocks]
    labels = None
    if space.labels is not None:
        new = "∞" if "∞" not in space.labels else f"∞{inf}"
        labels = space.labels + (new,)
    ext_space = build_space(inf + 1, lines, labels)
    ext = MRGeometry(ext_space, mr.colours + (colour,))
    if not is_proper(ext_space, ext.colours):
        raise RuntimeError("extension produced a monochromatic line")
    return ext


def one_point_extensions(mr: MRGeometry) -> Extensions:
    """Every one-point extension, plus representatives up to isomorphism.

    Deduplication treats colourings that differ by the global swap as equal,
    matching how the two extensions of a singleton-free eppc are identified.
    """
    raw: list[MRGeometry] = []
    for eppc in extendable_ppcs(mr):
        if eppc.forced_colour is None:
            raw.append(one_point_extension(mr, eppc, GREEN))
            raw.append(one_point_extension(mr, eppc, RED))
        else:
            raw.append(one_point_extension(mr, eppc))
    classes: list[MRGeometry] = []
    for ext in raw:
        if not any(find_isomorphism(ext, rep, mode="first") for rep in classes):
            classes.append(ext)
    return Extensions(raw, classes)


def recovered_ppc(ext: MRGeometry, inf: Optional[int] = None) -> PartialParallelClass:
    """The ppc a one-point extension determines: its lines through ∞, cut back."""
    space = ext.space
    if inf is None:
        inf = space.v - 1
    blocks = []
    for i in space.lines_through(inf):
        blocks.append(tuple(p for p in space.lines[i] if p != inf))
    return PartialParallelClass(tuple(sorted(blocks, key=lambda b: b[0])))


class ExtensionEdge(NamedTuple):
    source: str
    target: str


def extension_graph(entries: Sequence) -> list[ExtensionEdge]:
    """Directed edges A -> B between catalog entries with |B| = |A| + 1 and
    B isomorphic to a one-point extension of A.

    Every extension class of an entry must match exactly one larger entry;
    anything else means the catalog is not closed under extension.
    """
    by_v: dict[int, list] = {}
    for e in entries:
        by_v.setdefault(e.geometry.space.v, []).append(e)
    edges = []
    for e in entries:
        targets = by_v.get(e.geometry.space.v + 1, [])
        if not targets:
            continue
        for ext in one_point_extensions(e.geometry).classes:
            hits = [t.name for t in targets
                    if find_isomorphism(ext, t.geometry, mode="first")]
            if len(hits) != 1:
                raise RuntimeError(
                    f"extension of {e.name} matched {hits or 'no entry'}")
            edge = ExtensionEdge(e.name, hits[0])
            if edge not in edges:
                edges.append(edge)
    return sorted(edges)
