"""Finite linear spaces with blocking sets, at desk scale.

Core model: points 0..v-1, explicit lines (2-lines included), a unique line
through every point pair.  On top of it: proper 2-colourings and blocking
sets, exact point weights, a catalog of the small two-coloured geometries,
isomorphism search, one-point extensions via partial parallel classes, and an
exhaustive census of all spaces on up to 9 points.
"""

from .incidence import (AllCollinear, BadLine, FiniteLinearSpace, GridProfile,
                        Line, OutOfRange, PairDoubleCovered, SamePoint,
                        SpaceError, build_space, induced_subspace,
                        is_proper_fls)
from .coloring import (GREEN, RED, Colouring, LemmaCheck, LemmaReport,
                       MRGeometry, NType, WeightSumReport, blocking_sets,
                       delete_point, format_ntype, is_minimal, is_proper,
                       lemma_checks, ntype, weight, weight_sum_identity)
from .iso import (BlockingOrbits, Isomorphism, automorphisms, certificate,
                  essentially_different_blocking_sets, find_isomorphism,
                  isomorphic, point_invariant)
from .catalog import (NAMES, CatalogEntry, EmbeddingReport, NoDistinctAB,
                      UnknownName, UnsupportedOrder, all_entries, named,
                      mr14_2_second_representation, pg2, pg24_z7z3,
                      quadrilateral_mr, verify_gf4_embedding)
from .extend import (ExtendablePPC, ExtensionEdge, Extensions,
                     PartialParallelClass, extendable_ppcs, extension_graph,
                     one_point_extension, one_point_extensions,
                     partial_parallel_classes, recovered_ppc)
from .census import (BlockingScanReport, ColouringCensus, NaiveCensus,
                     SpaceCensus, all_spaces, all_spaces_naive,
                     colouring_census, no_blocking_set_below)
from . import flsio

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
