"""Command-line interface.

Deterministic text reports over the library: list the catalog, export and
verify geometries, search blocking sets, test isomorphism, enumerate
one-point extensions and small-space censuses, build existence examples, and
run the coordinatization check.  Exit codes: 0 success / affirmative,
1 negative verdict, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import catalog, census, coloring, extend, flsio, incidence, iso
from .coloring import GREEN, MRGeometry


def _fail(msg: str) -> int:
    print(msg, file=sys.stderr)
    return 2


def _load_geometry(args, need_colours: bool):
    """Resolve --name or a path into a space/geometry, or an error string."""
    if getattr(args, "name", None):
        return catalog.named(args.name).geometry
    obj = flsio.load(args.file)
    if need_colours and not isinstance(obj, MRGeometry):
        raise flsio.FormatError(f"{args.file} carries no colouring")
    return obj


def _emit(rows: list[tuple[str, str]], fmt: str) -> None:
    if fmt == "tsv":
        for key, value in rows:
            print(f"{key}\t{value}")
    else:
        width = max(len(k) for k, _ in rows)
        for key, value in rows:
            print(f"{key:<{width}}  {value}")


def cmd_catalog(args) -> int:
    rows = [("name", "v\tg\tr\tminimal" if args.format == "tsv" else "v   g  r  minimal")]
    for entry in catalog.all_entries():
        mr = entry.geometry
        minimal = "yes" if coloring.is_minimal(mr) else "no"
        if args.format == "tsv":
            rows.append((entry.name, f"{mr.space.v}\t{mr.g}\t{mr.r}\t{minimal}"))
        else:
            rows.append((entry.name, f"{mr.space.v}  {mr.g}  {mr.r}  {minimal}"))
    _emit(rows, args.format)
    return 0


def cmd_show(args) -> int:
    mr = catalog.named(args.name).geometry
    text = flsio.dumps(mr)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        print(f"wrote {args.out}")
    else:
        sys.stdout.write(text)
    return 0


def cmd_verify(args) -> int:
    mr = _load_geometry(args, need_colours=True)
    source = args.name or args.file
    proper = coloring.is_proper(mr.space, mr.colours)
    rows = [("geometry", str(source)),
            ("points", str(mr.space.v)),
            ("lines", str(len(mr.space.lines))),
            ("green", str(mr.g)),
            ("red", str(mr.r)),
            ("proper", "yes" if proper else "no")]
    ok = proper
    if proper:
        rows.append(("minimal", "yes" if coloring.is_minimal(mr) else "no"))
        ws = coloring.weight_sum_identity(mr)
        rows.append(("weight-sum-green",
                     f"{ws.green_sum} expected {ws.expected_green} "
                     f"{'ok' if ws.green_sum == ws.expected_green else 'MISMATCH'}"))
        rows.append(("weight-sum-red",
                     f"{ws.red_sum} expected {ws.expected_red} "
                     f"{'ok' if ws.red_sum == ws.expected_red else 'MISMATCH'}"))
        ok = ws.ok
        report = coloring.lemma_checks(mr)
        for check in report.checks:
            rows.append((f"check-{check.name}",
                         ("pass" if check.ok else f"FAIL {check.detail}")))
        ok = ok and report.ok
    rows.append(("result", "pass" if ok else "fail"))
    _emit(rows, args.format)
    return 0 if ok else 1


def cmd_blocking(args) -> int:
    obj = _load_geometry(args, need_colours=False)
    space = obj.space if isinstance(obj, MRGeometry) else obj
    blocks = coloring.blocking_sets(space, limit=args.limit)
    print(f"blocking-sets {len(blocks)}")
    sizes = sorted({len(b) for b in blocks})
    print("sizes " + (",".join(str(s) for s in sizes) if sizes else "-"))
    if args.essential:
        orbits = iso.essentially_different_blocking_sets(space)
        print(f"orbits {orbits.count}")
        for rep in orbits.representatives:
            print("orbit-rep " + " ".join(space.label(p) for p in rep))
    elif args.list:
        for b in blocks:
            print("set " + " ".join(space.label(p) for p in b))
    return 0 if blocks else 1


def cmd_iso(args) -> int:
    a = flsio.load(args.a)
    b = flsio.load(args.b)
    if args.mr:
        if not isinstance(a, MRGeometry) or not isinstance(b, MRGeometry):
            return _fail("--mr needs coloured inputs on both sides")
    else:
        a = a.space if isinstance(a, MRGeometry) else a
        b = b.space if isinstance(b, MRGeometry) else b
    maps = iso.find_isomorphism(a, b, mode="all" if args.all else "first")
    print(f"isomorphic {'yes' if maps else 'no'}")
    space_a = a.space if isinstance(a, MRGeometry) else a
    space_b = b.space if isinstance(b, MRGeometry) else b
    for k, m in enumerate(maps, start=1):
        swaps = " (swaps colours)" if m.swaps_colours else ""
        print(f"map {k}{swaps} " + " ".join(
            f"{space_a.label(p)}>{space_b.label(m.mapping[p])}"
            for p in range(space_a.v)))
    return 0 if maps else 1


def cmd_extend(args) -> int:
    mr = flsio.load(args.file)
    if not isinstance(mr, MRGeometry):
        return _fail(f"{args.file} carries no colouring")
    result = extend.one_point_extensions(mr)
    print(f"classes {len(result.classes)}")
    stem = str(args.file)
    if stem.endswith(".fls"):
        stem = stem[:-4]
    entries = catalog.all_entries()
    for k, cls in enumerate(result.classes, start=1):
        out = f"{stem}-ext-{k}.fls"
        flsio.save(out, cls)
        hits = [e.name for e in entries
                if e.v == cls.space.v
                and iso.find_isomorphism(cls, e.geometry, mode="first")]
        name = hits[0] if hits else "-"
        print(f"class {k} points {cls.space.v} catalog {name} wrote {out}")
    return 0


def _parse_profile(text: str) -> dict[int, int]:
    profile = {}
    for item in text.split(","):
        size, count = item.split(":")
        profile[int(size)] = int(count)
    return profile


def cmd_enumerate(args) -> int:
    result = census.all_spaces(args.points)
    spaces = result.spaces
    if args.filter:
        spaces = result.filtered(_parse_profile(args.filter))
    lines = [f"points {args.points}", f"classes {len(spaces)}"]
    for k, s in enumerate(spaces):
        profile = ",".join(f"{size}:{n}" for size, n in s.line_size_profile())
        lines.append(f"space {k:03d} lines {profile}")
    text = "\n".join(lines) + "\n"
    if args.out:
        outdir = Path(args.out)
        outdir.mkdir(parents=True, exist_ok=True)
        for k, s in enumerate(spaces):
            flsio.save(outdir / f"space-{k:03d}.fls", s)
        (outdir / "census.txt").write_text(text, encoding="utf-8")
        print(f"wrote {len(spaces)} spaces and census.txt to {outdir}")
    else:
        sys.stdout.write(text)
    return 0


def cmd_exist(args) -> int:
    mr = catalog.quadrilateral_mr(args.q, args.v)
    text = flsio.dumps(mr)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        print(f"wrote {args.out}")
    else:
        sys.stdout.write(text)
    return 0


def cmd_embed_check(args) -> int:
    report = catalog.verify_gf4_embedding()
    for check in report.checks:
        status = "pass" if check.ok else "FAIL"
        detail = f"  {check.detail}" if check.detail else ""
        print(f"{check.name} {status}{detail}")
    print(f"result {'pass' if report.ok else 'fail'}")
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mrgeom",
        description="Finite linear spaces with blocking sets: catalog, "
                    "verification, search, isomorphism, extension, census.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("catalog", help="list the ten catalog geometries")
    p.add_argument("--format", choices=("text", "tsv"), default="text")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("show", help="export a catalog geometry as .fls")
    p.add_argument("--name", required=True, choices=catalog.NAMES)
    p.add_argument("--out")
    p.set_defaults(func=cmd_show)

    p = sub.add_parser("verify", help="full validity report for a geometry")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--name", choices=catalog.NAMES)
    src.add_argument("file", nargs="?")
    p.add_argument("--format", choices=("text", "tsv"), default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("blocking", help="enumerate blocking sets")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--name", choices=catalog.NAMES)
    src.add_argument("file", nargs="?")
    p.add_argument("--limit", type=int, default=None)
    p.add_argument("--essential", action="store_true",
                   help="orbit count under automorphisms and complement")
    p.add_argument("--list", action="store_true", help="print every set")
    p.set_defaults(func=cmd_blocking)

    p = sub.add_parser("iso", help="isomorphism test between two .fls files")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--mr", action="store_true", help="require colour classes "
                   "to map to colour classes")
    p.add_argument("--all", action="store_true", help="list every isomorphism")
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("extend", help="one-point extensions of a coloured .fls")
    p.add_argument("file")
    p.set_defaults(func=cmd_extend)

    p = sub.add_parser("enumerate", help="census of all spaces on v points")
    p.add_argument("--points", type=int, required=True)
    p.add_argument("--filter", help="exact line profile, e.g. 2:3,3:6")
    p.add_argument("--out", help="directory for .fls files and census.txt")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("exist", help="build a v-point geometry inside PG(2,q)")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--v", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_exist)

    p = sub.add_parser("embed-check", help="GF(4) coordinatization report")
    p.set_defaults(func=cmd_embed_check)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (incidence.SpaceError, flsio.FormatError, OSError, ValueError) as exc:
        return _fail(f"error: {exc}")


if __name__ == "__main__":
    sys.exit(main())
