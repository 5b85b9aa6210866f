"""Reading and writing the `.fls` text format.

Line-oriented UTF-8::

    points <v>
    label <index> <name>          # optional, repeatable
    green <i1> <i2> ...           # optional colouring block
    red   <i1> <i2> ...
    line <i1> <i2> <i3> ...       # 2-lines may be omitted

The parser completes omitted 2-lines; the writer emits only lines of size
>= 3, sorted by (size descending, points), so output is byte-stable and a
write/read/write round trip is the identity.
"""

from __future__ import annotations

import os
from typing import Union

from .coloring import GREEN, RED, MRGeometry
from .incidence import FiniteLinearSpace, SpaceError, build_space

Readable = Union[FiniteLinearSpace, MRGeometry]


class FormatError(SpaceError):
    """Malformed .fls input."""


def dumps(obj: Readable) -> str:
    space = obj.space if isinstance(obj, MRGeometry) else obj
    out = [f"points {space.v}"]
    if space.labels is not None:
        out += [f"label {i} {name}" for i, name in enumerate(space.labels)]
    if isinstance(obj, MRGeometry):
        out.append("green " + " ".join(str(p) for p in obj.greens()))
        out.append("red " + " ".join(str(p) for p in obj.reds()))
    for pts in sorted((pts for pts in space.lines if len(pts) >= 3),
                      key=lambda pts: (-len(pts), pts)):
        out.append("line " + " ".join(str(p) for p in pts))
    return "\n".join(out) + "\n"


def loads(text: str) -> Readable:
    v = None
    labels: dict[int, str] = {}
    greens: list[int] = []
    reds: list[int] = []
    lines: list[tuple[int, ...]] = []
    saw_colours = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        row = raw.split("#", 1)[0].strip()
        if not row:
            continue
        word, *rest = row.split()
        try:
            if word == "points":
                (v,) = rest
                v = int(v)
            elif word == "label":
                idx, name = rest
                labels[int(idx)] = name
            elif word == "green":
                greens += [int(t) for t in rest]
                saw_colours = True
            elif word == "red":
                reds += [int(t) for t in rest]
                saw_colours = True
            elif word == "line":
                lines.append(tuple(int(t) for t in rest))
            else:
                raise FormatError(f"line {lineno}: unknown directive {word!r}")
        except (ValueError, TypeError) as exc:
            if isinstance(exc, FormatError):
                raise
            raise FormatError(f"line {lineno}: cannot parse {row!r}") from exc
    if v is None:
        raise FormatError("missing 'points <v>' row")
    label_table = None
    if labels:
        if sorted(labels) != list(range(v)):
            raise FormatError("label rows must cover points 0..v-1 exactly")
        label_table = tuple(labels[i] for i in range(v))
    space = build_space(v, lines, label_table)
    if not saw_colours:
        return space
    colours = [None] * v
    for p in greens:
        colours[p] = GREEN
    for p in reds:
        if colours[p] is not None:
            raise FormatError(f"point {p} is both green and red")
        colours[p] = RED
    if any(c is None for c in colours):
        missing = [p for p, c in enumerate(colours) if c is None]
        raise FormatError(f"points {missing} have no colour")
    return MRGeometry(space, tuple(colours))


def save(path: Union[str, os.PathLike], obj: Readable) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(obj))


def load(path: Union[str, os.PathLike]) -> Readable:
    with open(path, "r", encoding="utf-8") as fh:
        return loads(fh.read())
