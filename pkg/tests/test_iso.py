from itertools import permutations

from hypothesis import given, settings
from hypothesis import strategies as st

import mrgeom as M

# All six isomorphisms from the second MR14_2 presentation onto the PG(2,4)
# one, keyed by point label.
FIG28_COLUMNS = ("G", "R", "G_1", "G_2", "G_3", "S_1", "S_2", "S_3",
                 "H_1", "H_2", "H_3", "R_1", "R_2", "R_3")
FIG28_ROWS = [
    ("6_0", "6_1", "4_1", "2_1", "5_1", "2_0", "5_0", "4_0",
     "0_0", "1_0", "3_0", "1_2", "3_2", "0_2"),
    ("6_0", "6_1", "2_0", "4_0", "5_0", "4_1", "5_1", "2_1",
     "0_0", "3_0", "1_0", "0_2", "3_2", "1_2"),
    ("6_0", "6_1", "5_0", "2_0", "4_0", "2_1", "4_1", "5_1",
     "1_0", "0_0", "3_0", "1_2", "0_2", "3_2"),
    ("6_0", "6_1", "2_1", "5_1", "4_1", "5_0", "4_0", "2_0",
     "1_0", "3_0", "0_0", "3_2", "0_2", "1_2"),
    ("6_0", "6_1", "5_1", "4_1", "2_1", "4_0", "2_0", "5_0",
     "3_0", "0_0", "1_0", "0_2", "1_2", "3_2"),
    ("6_0", "6_1", "4_0", "5_0", "2_0", "5_1", "2_1", "4_1",
     "3_0", "1_0", "0_0", "3_2", "1_2", "0_2"),
]

# The published point map between the two 15-point representations
# (MR14_1 + 6_2 green onto MR14_2 + 6_2 red); it swaps the colour classes.
MR15_1_MAP = {
    "0_0": "0_2", "1_0": "3_2", "2_0": "4_1", "3_0": "1_2", "4_0": "2_1",
    "5_0": "5_1", "6_0": "6_2", "0_1": "1_0", "1_1": "0_0", "2_1": "5_0",
    "3_1": "3_0", "4_1": "4_0", "5_1": "2_0", "6_1": "6_0", "6_2": "6_1",
}


def _as_label_map(iso, a, b):
    return {a.label(p): b.label(iso.mapping[p]) for p in range(a.v)}


def test_fig28_isomorphisms_row_for_row(geometries):
    rep2 = M.mr14_2_second_representation().space
    rep1 = geometries["MR14_2"].space
    isos = M.find_isomorphism(rep2, rep1, mode="all")
    assert len(isos) == 6
    got = {frozenset(_as_label_map(iso, rep2, rep1).items()) for iso in isos}
    want = {frozenset(zip(FIG28_COLUMNS, row)) for row in FIG28_ROWS}
    assert got == want


def test_mr15_3_colour_variants_not_isomorphic(geometries):
    r3, g3 = geometries["MR15_3r"], geometries["MR15_3g"]
    assert M.find_isomorphism(r3, g3, mode="all") == []
    assert M.isomorphic(r3.space, g3.space)


def test_identity_found_on_self(geometries):
    space = geometries["MR12"].space
    first = M.find_isomorphism(space, space, mode="first")
    assert first and len(first) == 1


def test_mr14_2_automorphisms(geometries):
    mr = geometries["MR14_2"]
    autos = M.automorphisms(mr.space)
    assert len(autos) == 6
    assert autos[0].is_identity()

    def parity(mapping):
        seen, odd = set(), 0
        for start in range(len(mapping)):
            if start in seen:
                continue
            length, p = 0, start
            while p not in seen:
                seen.add(p)
                p = mapping[p]
                length += 1
            odd ^= (length - 1) & 1
        return odd  # 0 = even

    preserving = [a for a in autos
                  if all(mr.colours[a.mapping[p]] == mr.colours[p]
                         for p in range(14))]
    assert len(preserving) == 3
    assert all(parity(a.mapping) == 0 for a in preserving)
    assert all(parity(a.mapping) == 1 for a in autos if a not in preserving)
    # as a coloured geometry: exactly the colour-preserving maps remain
    assert len(M.automorphisms(mr)) == 3


def test_pg2_2_automorphisms_brute_force_oracle():
    fano = M.pg2(2)
    line_set = {frozenset(pts) for pts in fano.lines}
    oracle = sum(
        1 for perm in permutations(range(7))
        if all(frozenset(perm[p] for p in pts) in line_set for pts in fano.lines))
    assert oracle == 168
    assert len(M.automorphisms(fano)) == oracle


def test_automorphisms_form_a_group(geometries):
    for space in (M.pg2(2), geometries["MR14_2"].space):
        maps = {a.mapping for a in M.automorphisms(space)}
        for f in maps:
            inverse = [0] * len(f)
            for i, fi in enumerate(f):
                inverse[fi] = i
            assert tuple(inverse) in maps
            for g in maps:
                assert tuple(g[fi] for fi in f) in maps


def test_published_mr15_1_map_is_found(geometries):
    mr15_1 = geometries["MR15_1"]
    pg = M.pg24_z7z3()
    keep = [f"{i}_0" for i in range(7)] + ["2_1", "4_1", "5_1", "6_1",
                                           "0_2", "1_2", "3_2", "6_2"]
    space_b = M.induced_subspace(pg, [pg.point(s) for s in keep])
    greens = {f"{i}_0" for i in range(7)}
    alt = M.MRGeometry(space_b, tuple(
        M.GREEN if space_b.label(p) in greens else M.RED
        for p in range(space_b.v)))
    isos = M.find_isomorphism(mr15_1, alt, mode="all")
    assert isos
    maps = [_as_label_map(iso, mr15_1.space, space_b) for iso in isos
            if iso.swaps_colours]
    assert MR15_1_MAP in maps


def test_all_pairs_non_isomorphic(geometries):
    names = list(M.NAMES)
    for i, a in enumerate(names):
        for b in names[i + 1:]:
            assert not M.find_isomorphism(
                geometries[a], geometries[b], mode="first"), (a, b)


def test_essentially_different_blocking_sets(geometries):
    assert M.essentially_different_blocking_sets(M.pg2(3)).count == 1
    assert M.essentially_different_blocking_sets(
        geometries["MR14_1"].space).count == 1
    orbits = M.essentially_different_blocking_sets(geometries["MR15_3r"].space)
    assert orbits.count == 2
    assert len(orbits.representatives) == 2


def test_point_invariant_preserved(geometries):
    mr = geometries["MR14_2"]
    for auto in M.automorphisms(mr.space):
        for p in range(mr.space.v):
            assert (M.point_invariant(mr.space, p)
                    == M.point_invariant(mr.space, auto.mapping[p]))


@settings(max_examples=20, deadline=None)
@given(st.permutations(range(14)))
def test_verdicts_stable_under_relabelling(perm):
    a = M.named("MR14_1").geometry.space
    b = M.named("MR14_2").geometry.space
    shuffled = M.build_space(
        14, [tuple(perm[p] for p in pts) for pts in b.lines])
    assert not M.isomorphic(a, shuffled)          # still different spaces
    assert M.isomorphic(b, shuffled)              # still the same space
