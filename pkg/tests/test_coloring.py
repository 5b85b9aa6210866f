from fractions import Fraction
from itertools import product
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import mrgeom as M
from mrgeom.coloring import GREEN, RED


def test_is_proper_examples(geometries):
    mr12 = geometries["MR12"]
    assert M.is_proper(mr12.space, mr12.colours)
    assert not M.is_proper(M.pg2(3), (GREEN,) * 13)


def test_fano_admits_no_proper_colouring():
    fano = M.pg2(2)
    assert all(not M.is_proper(fano, cols) for cols in product((GREEN, RED), repeat=7))
    assert M.blocking_sets(fano) == []


def test_flipping_a_point_breaks_mr12(geometries):
    mr12 = geometries["MR12"]
    for p in range(12):
        flipped = list(mr12.colours)
        flipped[p] = 1 - flipped[p]
        assert not M.is_proper(mr12.space, tuple(flipped))


def test_blocking_sets_pg3():
    blocks = M.blocking_sets(M.pg2(3))
    assert blocks
    assert {len(b) for b in blocks} == {6, 7}
    assert len(blocks) == 468
    # closed under complement
    as_sets = {frozenset(b) for b in blocks}
    everything = frozenset(range(13))
    assert all(everything - b in as_sets for b in as_sets)


def test_blocking_sets_limit():
    capped = M.blocking_sets(M.pg2(3), limit=10)
    assert len(capped) == 10


def test_blocking_sets_match_proper_colourings(geometries):
    space = geometries["MR12"].space
    blocks = {frozenset(b) for b in M.blocking_sets(space)}
    assert frozenset(geometries["MR12"].greens()) in blocks
    assert frozenset(geometries["MR12"].reds()) in blocks


def test_ntype_examples(geometries):
    mr = geometries["MR14_2"]
    sp = mr.space
    assert M.ntype(mr, sp.point("6_0")) == ((1, 4), (3, 1), (3, 1), (3, 1))
    for s in ("2_1", "4_1", "5_1"):
        assert M.ntype(mr, sp.point(s)) == ((1, 2), (1, 2), (1, 3), (1, 3), (3, 1))

    mr12 = geometries["MR12"]
    type2 = [p for p in mr12.greens()
             if M.ntype(mr12, p) == ((1, 3), (2, 1), (3, 1), (3, 1))]
    type3 = [p for p in mr12.greens()
             if M.ntype(mr12, p) == ((1, 2), (2, 2), (3, 1), (3, 1))]
    assert len(type2) == 4 and len(type3) == 2
    for p in type2:
        nt = M.ntype(mr12, p)
        assert sum(1 for _, r in nt if r == 1) == 3 and (1, 3) in nt


def test_ntype_sum_invariant(geometries):
    for mr in geometries.values():
        for p in range(mr.space.v):
            nt = M.ntype(mr, p)
            own_green = 1 if mr.colours[p] == GREEN else 0
            assert sum(g - own_green for g, _ in nt) == mr.g - own_green
            assert sum(r - (1 - own_green) for _, r in nt) == mr.r - (1 - own_green)
            assert all(g >= 1 and r >= 1 for g, r in nt)


def test_weight_examples(geometries):
    mr12 = geometries["MR12"]
    weights = sorted(M.weight(mr12, p) for p in mr12.greens())
    assert weights == [Fraction(3, 2), Fraction(3, 2), 3, 3, 3, 3]
    mr = geometries["MR14_2"]
    for s in ("2_1", "4_1", "5_1"):
        assert M.weight(mr, mr.space.point(s)) == 3


def test_weight_sum_identity(geometries):
    for name, mr in geometries.items():
        rep = M.weight_sum_identity(mr)
        assert rep.ok, name
        assert rep.green_sum == comb(mr.r, 2)
        assert rep.red_sum == comb(mr.g, 2)
    assert M.weight_sum_identity(geometries["MR12"]).green_sum == 15
    mr13 = geometries["MR13"]
    smaller = min(M.weight_sum_identity(mr13).green_sum,
                  M.weight_sum_identity(mr13).red_sum)
    assert smaller == 15 and max(
        M.weight_sum_identity(mr13).green_sum,
        M.weight_sum_identity(mr13).red_sum) == 21


def test_minimality(geometries):
    minimal = {name for name, mr in geometries.items() if M.is_minimal(mr)}
    assert minimal == {"MR12", "MR14_1", "MR14_2", "MR15_5"}


def test_delete_point_recovers_mr12(geometries):
    mr13 = geometries["MR13"]
    survivors = [p for p in range(13) if M.delete_point(mr13, p) is not None]
    assert survivors
    for p in survivors:
        smaller = M.delete_point(mr13, p)
        assert M.find_isomorphism(smaller, geometries["MR12"], mode="first")


def test_lemma_checks_all_pass(geometries):
    for name, mr in geometries.items():
        report = M.lemma_checks(mr)
        assert report.ok, (name, [c for c in report.checks if not c.ok])
        assert report["minimal-structure"].ok


def test_lemma_report_lookup(geometries):
    report = M.lemma_checks(geometries["MR12"])
    assert report["degree-min-4"].ok
    with pytest.raises(KeyError):
        report["nonsense"]


@settings(max_examples=40, deadline=None)
@given(st.tuples(*[st.sampled_from((GREEN, RED)) for _ in range(12)]))
def test_proper_iff_green_class_blocks(colours):
    space = M.named("MR12").geometry.space
    blocks = getattr(test_proper_iff_green_class_blocks, "_blocks", None)
    if blocks is None:
        blocks = {frozenset(b) for b in M.blocking_sets(space)}
        test_proper_iff_green_class_blocks._blocks = blocks
    greens = frozenset(p for p, c in enumerate(colours) if c == GREEN)
    assert M.is_proper(space, colours) == (greens in blocks)
