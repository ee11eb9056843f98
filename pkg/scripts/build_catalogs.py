#!/usr/bin/env python3
"""Regenerate every bundled fixture under src/fano_enriques/data/.

All golden content is recomputed through the public API and cross-checked
against the curated annotations below (expected torsion data, generator and
relation bidegrees, rejection reasons) before anything is written.  The
script exits nonzero on the first inconsistency, so a successful run means
the shipped fixtures and the engine agree.

Run from the repository root:

    python scripts/build_catalogs.py
"""

from __future__ import annotations

import json
import sys
from collections import Counter
from fractions import Fraction
from pathlib import Path

from fano_enriques.catalog import (
    FORMAT_VERSION,
    _candidate_row,
    _data_root,
    verify_fixtures,
)
from fano_enriques.enumeration import BtCandidate, MAX_TORSION, canonicalize, enumerate_bt
from fano_enriques.exact import format_rational
from fano_enriques.hilbert import FanoData, FanoEnriquesData, altinok_series, bigraded_series
from fano_enriques.orbifold import Basket
from fano_enriques.quotient import CROSS_CODIMENSION, CoverRecord, forced_preimage, search
from fano_enriques.series import Bidegree

DATA_DIR = Path(str(_data_root()))

TRUNC = 24
MAX_DEGREE = 24


# --------------------------------------------------------------------------
# Admissible torsion baskets, keyed by "r.k" with k the position in the
# canonical enumeration order for that r.  These are transcribed curated
# values; the builder asserts they coincide exactly with enumerate_bt().
# --------------------------------------------------------------------------

BT = {
    "2.1": (2, "1/2(1,1,1)_1, 1/14(1,1,13)_7"),
    "2.2": (2, "1/2(1,1,1)_1, 1/14(1,3,11)_7"),
    "2.3": (2, "1/2(1,1,1)_1, 1/14(1,5,9)_7"),
    "2.4": (2, "1/4(1,1,3)_2, 1/12(1,1,11)_6"),
    "2.5": (2, "1/4(1,1,3)_2, 1/12(1,5,7)_6"),
    "2.6": (2, "1/6(1,1,5)_3, 1/10(1,1,9)_5"),
    "2.7": (2, "1/6(1,1,5)_3, 1/10(1,3,7)_5"),
    "2.8": (2, "2x1/8(1,1,7)_4"),
    "2.9": (2, "1/8(1,1,7)_4, 1/8(1,3,5)_4"),
    "2.10": (2, "2x1/8(1,3,5)_4"),
    "2.11": (2, "3x1/2(1,1,1)_1, 1/10(1,1,9)_5"),
    "2.12": (2, "3x1/2(1,1,1)_1, 1/10(1,3,7)_5"),
    "2.13": (2, "2x1/2(1,1,1)_1, 1/4(1,1,3)_2, 1/8(1,1,7)_4"),
    "2.14": (2, "2x1/2(1,1,1)_1, 1/4(1,1,3)_2, 1/8(1,3,5)_4"),
    "2.15": (2, "2x1/2(1,1,1)_1, 2x1/6(1,1,5)_3"),
    "2.16": (2, "1/2(1,1,1)_1, 2x1/4(1,1,3)_2, 1/6(1,1,5)_3"),
    "2.17": (2, "4x1/4(1,1,3)_2"),
    "2.18": (2, "5x1/2(1,1,1)_1, 1/6(1,1,5)_3"),
    "2.19": (2, "4x1/2(1,1,1)_1, 2x1/4(1,1,3)_2"),
    "2.20": (2, "8x1/2(1,1,1)_1"),
    "3.1": (3, "1/9(1,1,8)_3, 1/9(1,1,8)_6"),
    "3.2": (3, "1/9(1,2,7)_3, 1/9(1,2,7)_6"),
    "3.3": (3, "1/9(1,4,5)_3, 1/9(1,4,5)_6"),
    "3.4": (3, "2x1/3(1,1,2)_1, 1/12(1,5,7)_4"),
    "3.5": (3, "1/3(1,1,2)_1, 1/3(1,1,2)_2, 1/6(1,1,5)_2, 1/6(1,1,5)_4"),
    "3.6": (3, "4x1/3(1,1,2)_1, 1/6(1,1,5)_4"),
    "3.7": (3, "3x1/3(1,1,2)_1, 3x1/3(1,1,2)_2"),
    "4.1": (4, "1/4(1,1,3)_2, 2x1/8(1,3,5)_2"),
    "4.2": (4, "2x1/2(1,1,1)_1, 1/4(1,1,3)_1, 1/12(1,5,7)_9"),
    "4.3": (4, "2x1/2(1,1,1)_1, 1/8(1,1,7)_2, 1/8(1,1,7)_6"),
    "4.4": (4, "2x1/2(1,1,1)_1, 1/8(1,3,5)_2, 1/8(1,3,5)_6"),
    "4.5": (4, "2x1/2(1,1,1)_1, 2x1/4(1,1,3)_1, 2x1/4(1,1,3)_3"),
    "5.1": (5, "2x1/5(1,2,3)_1, 1/10(1,3,7)_6"),
    "5.2": (5, "1/5(1,1,4)_1, 1/5(1,1,4)_2, 1/5(1,1,4)_3, 1/5(1,1,4)_4"),
    "5.3": (5, "1/5(1,1,4)_1, 1/5(1,1,4)_4, 1/5(1,2,3)_1, 1/5(1,2,3)_4"),
    "5.4": (5, "1/5(1,2,3)_1, 1/5(1,2,3)_2, 1/5(1,2,3)_3, 1/5(1,2,3)_4"),
    "6.1": (6, "2x1/3(1,1,2)_1, 1/4(1,1,3)_2, 1/12(1,5,7)_10"),
    "6.2": (6, "2x1/2(1,1,1)_1, 1/3(1,1,2)_1, 1/3(1,1,2)_2, 1/6(1,1,5)_1, 1/6(1,1,5)_5"),
    "8.1": (8, "1/2(1,1,1)_1, 1/4(1,1,3)_1, 1/8(1,3,5)_3, 1/8(1,3,5)_7"),
}


def bt_candidate(label: str) -> BtCandidate:
    r, text = BT[label]
    basket = Basket.parse(text)
    return canonicalize(BtCandidate(r=r, entries=tuple(basket)))


# --------------------------------------------------------------------------
# Cover catalogs.  Fields: name, weights, degrees, basket, -K^3, structure.
# Covers listed under "decoys" are genuine Fano threefolds that admit no
# fixed-point-free quotient; the golden file records why each one drops out.
# --------------------------------------------------------------------------

COVERS_CODIM1 = [
    ("Y_{4} in P(1,1,1,1,1)", (1, 1, 1, 1, 1), (4,), "", "4", ""),
    ("Y_{5} in P(1,1,1,1,2)", (1, 1, 1, 1, 2), (5,), "1/2(1,1,1)", "5/2", ""),
    ("Y_{6} in P(1,1,1,2,2)", (1, 1, 1, 2, 2), (6,), "3x1/2(1,1,1)", "3/2", ""),
    ("Y_{8} in P(1,1,1,2,4)", (1, 1, 1, 2, 4), (8,), "2x1/2(1,1,1)", "1", ""),
    ("Y_{9} in P(1,1,1,3,4)", (1, 1, 1, 3, 4), (9,), "1/4(1,1,3)", "3/4", ""),
    ("Y_{9} in P(1,1,2,3,3)", (1, 1, 2, 3, 3), (9,), "1/2(1,1,1), 3x1/3(1,1,2)", "1/2", ""),
    (
        "Y_{12} in P(1,1,2,3,6)",
        (1, 1, 2, 3, 6),
        (12,),
        "2x1/2(1,1,1), 2x1/3(1,1,2)",
        "1/3",
        "errata: source row printed a malformed degree marking; degree 12 "
        "is forced by the weights",
    ),
    ("Y_{14} in P(1,1,2,4,7)", (1, 1, 2, 4, 7), (14,), "3x1/2(1,1,1), 1/4(1,1,3)", "1/4", ""),
    (
        "Y_{16} in P(1,1,2,5,8)",
        (1, 1, 2, 5, 8),
        (16,),
        "2x1/2(1,1,1), 1/5(1,2,3)",
        "1/5",
        "errata: source row printed an incomplete singularity 1/5(1,2,_); "
        "1/5(1,2,3) is the unique completion consistent with the weights",
    ),
    ("Y_{16} in P(1,1,3,4,8)", (1, 1, 3, 4, 8), (16,), "1/3(1,1,2), 2x1/4(1,1,3)", "1/6", ""),
    (
        "Y_{20} in P(1,2,3,5,10)",
        (1, 2, 3, 5, 10),
        (20,),
        "2x1/2(1,1,1), 1/3(1,1,2), 2x1/5(1,2,3)",
        "1/15",
        "",
    ),
    (
        "Y_{24} in P(1,2,3,7,12)",
        (1, 2, 3, 7, 12),
        (24,),
        "2x1/2(1,1,1), 2x1/3(1,1,2), 1/7(1,2,5)",
        "1/21",
        "",
    ),
]

DECOYS_CODIM1 = [
    ("Y_{6} in P(1,1,1,1,3)", (1, 1, 1, 1, 3), (6,), "", "2", ""),
    (
        "Y_{10} in P(1,1,2,3,4)",
        (1, 1, 2, 3, 4),
        (10,),
        "2x1/2(1,1,1), 1/3(1,1,2), 1/4(1,1,3)",
        "5/12",
        "",
    ),
    ("Y_{8} in P(1,1,2,2,3)", (1, 1, 2, 2, 3), (8,), "4x1/2(1,1,1), 1/3(1,1,2)", "2/3", ""),
]

COVERS_CODIM2 = [
    ("Y_{2,3} in P(1,1,1,1,1,1)", (1,) * 6, (2, 3), "", "6", ""),
    ("Y_{3,3} in P(1,1,1,1,1,2)", (1, 1, 1, 1, 1, 2), (3, 3), "1/2(1,1,1)", "9/2", ""),
    ("Y_{2,4} in P(1,1,1,1,1,2)", (1, 1, 1, 1, 1, 2), (2, 4), "", "4", ""),
    ("Y_{3,4} in P(1,1,1,1,2,2)", (1, 1, 1, 1, 2, 2), (3, 4), "2x1/2(1,1,1)", "3", ""),
    ("Y_{4,4} in P(1,1,1,1,2,3)", (1, 1, 1, 1, 2, 3), (4, 4), "1/3(1,1,2)", "8/3", ""),
    ("Y_{4,4} in P(1,1,1,2,2,2)", (1, 1, 1, 2, 2, 2), (4, 4), "4x1/2(1,1,1)", "2", ""),
    (
        "Y_{4,5} in P(1,1,1,2,2,3)",
        (1, 1, 1, 2, 2, 3),
        (4, 5),
        "2x1/2(1,1,1), 1/3(1,1,2)",
        "5/3",
        "",
    ),
    ("Y_{4,6} in P(1,1,1,2,3,3)", (1, 1, 1, 2, 3, 3), (4, 6), "2x1/3(1,1,2)", "4/3", ""),
    ("Y_{5,6} in P(1,1,1,2,3,4)", (1, 1, 1, 2, 3, 4), (5, 6), "1/2(1,1,1), 1/4(1,1,3)", "5/4", ""),
    ("Y_{6,8} in P(1,1,1,3,4,5)", (1, 1, 1, 3, 4, 5), (6, 8), "1/5(1,1,4)", "4/5", ""),
    ("Y_{4,6} in P(1,1,2,2,2,3)", (1, 1, 2, 2, 2, 3), (4, 6), "6x1/2(1,1,1)", "1", ""),
    (
        "Y_{5,6} in P(1,1,2,2,3,3)",
        (1, 1, 2, 2, 3, 3),
        (5, 6),
        "3x1/2(1,1,1), 2x1/3(1,1,2)",
        "5/6",
        "",
    ),
    (
        "Y_{4,8} in P(1,1,2,2,3,4)",
        (1, 1, 2, 2, 3, 4),
        (4, 8),
        "4x1/2(1,1,1), 1/3(1,1,2)",
        "2/3",
        "",
    ),
    (
        "Y_{6,7} in P(1,1,2,3,3,4)",
        (1, 1, 2, 3, 3, 4),
        (6, 7),
        "1/2(1,1,1), 2x1/3(1,1,2), 1/4(1,1,3)",
        "7/12",
        "",
    ),
    (
        "Y_{6,8} in P(1,1,2,3,3,5)",
        (1, 1, 2, 3, 3, 5),
        (6, 8),
        "2x1/3(1,1,2), 1/5(1,2,3)",
        "8/15",
        "",
    ),
    (
        "Y_{6,8} in P(1,1,2,3,4,4)",
        (1, 1, 2, 3, 4, 4),
        (6, 8),
        "2x1/2(1,1,1), 2x1/4(1,1,3)",
        "1/2",
        "",
    ),
    (
        "Y_{7,8} in P(1,1,2,3,4,5)",
        (1, 1, 2, 3, 4, 5),
        (7, 8),
        "2x1/2(1,1,1), 1/3(1,1,2), 1/5(1,1,4)",
        "7/15",
        "",
    ),
    (
        "Y_{8,9} in P(1,1,2,3,4,7)",
        (1, 1, 2, 3, 4, 7),
        (8, 9),
        "2x1/2(1,1,1), 1/7(1,3,4)",
        "3/7",
        "",
    ),
    (
        "Y_{8,10} in P(1,1,2,4,5,6)",
        (1, 1, 2, 4, 5, 6),
        (8, 10),
        "3x1/2(1,1,1), 1/6(1,1,5)",
        "1/3",
        "",
    ),
    (
        "Y_{8,10} in P(1,1,3,4,5,5)",
        (1, 1, 3, 4, 5, 5),
        (8, 10),
        "1/3(1,1,2), 2x1/5(1,1,4)",
        "4/15",
        "",
    ),
    (
        "Y_{10,12} in P(1,1,3,5,6,7)",
        (1, 1, 3, 5, 6, 7),
        (10, 12),
        "2x1/3(1,1,2), 1/7(1,1,6)",
        "4/21",
        "",
    ),
    (
        "Y_{6,8} in P(1,2,2,3,3,4)",
        (1, 2, 2, 3, 3, 4),
        (6, 8),
        "6x1/2(1,1,1), 2x1/3(1,1,2)",
        "1/3",
        "",
    ),
    (
        "Y_{6,10} in P(1,2,2,3,4,5)",
        (1, 2, 2, 3, 4, 5),
        (6, 10),
        "7x1/2(1,1,1), 1/4(1,1,3)",
        "1/4",
        "",
    ),
    (
        "Y_{8,9} in P(1,2,3,3,4,5)",
        (1, 2, 3, 3, 4, 5),
        (8, 9),
        "2x1/2(1,1,1), 3x1/3(1,1,2), 1/5(1,2,3)",
        "1/5",
        "",
    ),
    (
        "Y_{8,10} in P(1,2,3,4,4,5)",
        (1, 2, 3, 4, 4, 5),
        (8, 10),
        "4x1/2(1,1,1), 1/3(1,1,2), 2x1/4(1,1,3)",
        "1/6",
        "",
    ),
    (
        "Y_{8,12} in P(1,2,3,4,5,6)",
        (1, 2, 3, 4, 5, 6),
        (8, 12),
        "4x1/2(1,1,1), 2x1/3(1,1,2), 1/5(1,1,4)",
        "2/15",
        "",
    ),
    (
        "Y_{10,12} in P(1,2,3,5,5,7)",
        (1, 2, 3, 5, 5, 7),
        (10, 12),
        "2x1/5(1,2,3), 1/7(1,2,5)",
        "4/35",
        "",
    ),
    (
        "Y_{10,12} in P(1,3,4,4,5,6)",
        (1, 3, 4, 4, 5, 6),
        (10, 12),
        "1/2(1,1,1), 2x1/3(1,1,2), 3x1/4(1,1,3)",
        "1/12",
        "",
    ),
]

DECOYS_CODIM2 = [
    ("Y_{4,6} in P(1,1,1,1,3,4)", (1, 1, 1, 1, 3, 4), (4, 6), "", "2", ""),
]

# codim-3 entries additionally carry the structure tag
COVERS_CODIM3 = [
    (
        "Y_{2,2,2} in P(1,1,1,1,1,1,1)",
        (1,) * 7,
        (2, 2, 2),
        "",
        "8",
        "ci",
        "",
    ),
    (
        "Y_{4,4,4,4,4} in P(1,1,1,2,2,2,2)",
        (1, 1, 1, 2, 2, 2, 2),
        (4, 4, 4, 4, 4),
        "5x1/2(1,1,1)",
        "5/2",
        "pfaffian",
        "errata: source row printed degrees (3,3,3,3,4); those are "
        "incompatible with any anticanonical grading on these weights, and "
        "(4,4,4,4,4) is forced by the skew-rank-drop degree constraint",
    ),
]


# --------------------------------------------------------------------------
# Stand-in for the upstream codimension-3 source-list entries that fit every
# numeric restriction but whose series force a degree-4 generator and a
# degree-4 relation with different second degrees.  The source list is not
# reproducible from the data available here, so this cover was found by
# exhaustive scan over quotient numerics: in the searched space it is the
# only catalog-shaped cover whose quotient candidates all go special with
# the documented degree-4 collision and which yields no clean candidate.
# --------------------------------------------------------------------------

STANDINS_CODIM3 = [
    (
        "Y_{5,5,6,6,6} in P(1,1,2,2,3,3,3)",
        (1, 1, 2, 2, 3, 3, 3),
        (5, 5, 6, 6, 6),
        "2x1/2(1,1,1), 3x1/3(1,1,2)",
        "1",
        "pfaffian",
        "stand-in for a source-list entry that is not reconstructible from "
        "the data available here; chosen by exhaustive scan so that every "
        "quotient candidate it admits is rejected at the presentation step "
        "with the degree-4 generator/relation collision",
    ),
]

DECOYS_CODIM3 = [
    (
        "Y_{3,3,4,4,4} in P(1,1,1,1,2,2,2)",
        (1, 1, 1, 1, 2, 2, 2),
        (3, 3, 4, 4, 4),
        "3x1/2(1,1,1)",
        "7/2",
        "pfaffian",
        "",
    ),
]


# --------------------------------------------------------------------------
# Quotient row annotations.  Each row: (label, cover name, r, bt key,
# be basket string, kx string, generator bidegrees, relation bidegrees,
# status, flags, notes).  Generator/relation bidegrees are matched against
# the engine output up to a simultaneous unit rescale of second degrees.
# --------------------------------------------------------------------------

CLEAN: tuple = ("clean", (), "")

ROWS_CODIM1 = [
    ("1", "Y_{4} in P(1,1,1,1,1)", 5, "5.4", "", "4/5",
     [(1, 0), (1, 1), (1, 2), (1, 3), (1, 4)], [(4, 0)], *CLEAN),
    ("2", "Y_{5} in P(1,1,1,1,2)", 5, "5.1", "", "1/2",
     [(1, 0), (1, 1), (1, 3), (1, 4), (2, 2)], [(5, 0)], *CLEAN),
    ("3", "Y_{6} in P(1,1,1,2,2)", 3, "3.7", "1/2(1,1,1)", "1/2",
     [(1, 0), (1, 1), (1, 2), (2, 1), (2, 2)], [(6, 0)], *CLEAN),
    ("4", "Y_{8} in P(1,1,1,2,4)", 2, "2.20", "1/2(1,1,1)", "1/2",
     [(1, 0), (1, 1), (1, 1), (2, 1), (4, 1)], [(8, 0)], *CLEAN),
    ("5", "Y_{9} in P(1,1,1,3,4)", 3, "3.4", "", "1/4",
     [(1, 0), (1, 1), (1, 2), (3, 2), (4, 1)], [(9, 0)], *CLEAN),
    ("6", "Y_{9} in P(1,1,2,3,3)", 3, "3.6", "1/3(1,1,2)", "1/6",
     [(1, 0), (1, 1), (2, 2), (3, 1), (3, 2)], [(9, 0)], *CLEAN),
    ("7", "Y_{12} in P(1,1,2,3,6)", 2, "2.19", "1/3(1,1,2)", "1/6",
     [(1, 0), (1, 1), (2, 1), (3, 1), (6, 1)], [(12, 0)], *CLEAN),
    ("8", "Y_{14} in P(1,1,2,4,7)", 2, "2.14", "1/2(1,1,1)", "1/8",
     [(1, 0), (1, 1), (2, 1), (4, 1), (7, 1)], [(14, 0)], *CLEAN),
    ("9", "Y_{16} in P(1,1,2,5,8)", 2, "2.12", "1/2(1,1,1)", "1/10",
     [(1, 0), (1, 1), (2, 1), (5, 1), (8, 1)], [(16, 0)], *CLEAN),
    ("10", "Y_{16} in P(1,1,3,4,8)", 2, "2.18", "1/4(1,1,3)", "1/12",
     [(1, 0), (1, 1), (3, 1), (4, 1), (8, 1)], [(16, 0)], *CLEAN),
    ("11", "Y_{20} in P(1,2,3,5,10)", 2, "2.16", "1/5(1,2,3)", "1/30",
     [(1, 0), (2, 1), (3, 1), (5, 1), (10, 1)], [(20, 0)], *CLEAN),
    ("12", "Y_{24} in P(1,2,3,7,12)", 2, "2.3", "1/2(1,1,1), 1/3(1,1,2)", "1/42",
     [(1, 0), (2, 1), (3, 1), (7, 1), (12, 1)], [(24, 0)], *CLEAN),
]

ROWS_CODIM2 = [
    ("1a", "Y_{2,3} in P(1,1,1,1,1,1)", 3, "3.7", "", "2",
     [(1, 0), (1, 0), (1, 1), (1, 1), (1, 2), (1, 2)], [(2, 0), (3, 0)], *CLEAN),
    ("1b", "Y_{2,3} in P(1,1,1,1,1,1)", 5, "5.2", "", "6/5",
     [(1, 0), (1, 0), (1, 1), (1, 2), (1, 3), (1, 4)], [(2, 0), (3, 0)], *CLEAN),
    ("2", "Y_{3,3} in P(1,1,1,1,1,2)", 3, "3.6", "", "3/2",
     [(1, 0), (1, 0), (1, 1), (1, 1), (1, 2), (2, 2)], [(3, 0), (3, 0)], *CLEAN),
    ("3", "Y_{2,4} in P(1,1,1,1,1,2)", 2, "2.20", "", "2",
     [(1, 0), (1, 0), (1, 1), (1, 1), (1, 1), (2, 1)], [(2, 0)],
     "special", ("cross-codimension",),
     "inference forces a generator of bidegree (2,1) and a relation of "
     "bidegree (2,0) at the same degree; expected higher-codimension model"),
    (None, "Y_{2,4} in P(1,1,1,1,1,2)", 5, "5.4", "", "4/5",
     [(1, 0), (1, 1), (1, 2), (1, 3), (1, 4)], [(4, 0)],
     "clean", (CROSS_CODIMENSION,),
     "not a separate source row: at order 5 the degree-2 relation and the "
     "weight-2 coordinate land on the same bidegree, the coordinate is "
     "eliminable, and the quotient coincides with row 1 of the "
     "hypersurface catalog"),
    ("4a", "Y_{3,4} in P(1,1,1,1,2,2)", 2, "2.19", "", "3/2",
     [(1, 0), (1, 0), (1, 1), (1, 1), (2, 1), (2, 1)], [(3, 0), (4, 0)], *CLEAN),
    ("4b", "Y_{3,4} in P(1,1,1,1,2,2)", 3, "3.5", "", "1",
     [(1, 0), (1, 0), (1, 1), (1, 2), (2, 1), (2, 2)], [(3, 0), (4, 0)], *CLEAN),
    ("4c", "Y_{3,4} in P(1,1,1,1,2,2)", 4, "4.3", "", "3/4",
     [(1, 0), (1, 0), (1, 1), (1, 3), (2, 1), (2, 3)], [(3, 0), (4, 0)],
     "clean", (),
     "errata: source row cites the basket position holding "
     "{2x1/2(1,1,1)_1, 1/8(1,1,7)_2, 1/8(1,1,7)_6}; the printed position "
     "points at the (1,3,5) variant, which contradicts the row content"),
    ("4d", "Y_{3,4} in P(1,1,1,1,2,2)", 4, "4.4", "", "3/4",
     [(1, 0), (1, 1), (1, 2), (1, 3), (2, 1), (2, 3)], [(3, 2), (4, 0)], *CLEAN),
    ("5a", "Y_{4,4} in P(1,1,1,1,2,3)", 2, "2.18", "", "4/3",
     [(1, 0), (1, 0), (1, 1), (1, 1), (2, 1), (3, 1)], [(4, 0), (4, 0)],
     "clean", (),
     "errata: source row printed torsion order 4; the basket listed is the "
     "order-2 one and the cover -K^3 is not divisible by 4 in the required "
     "sense, so r = 2"),
    ("5b", "Y_{4,4} in P(1,1,1,1,2,3)", 4, "4.2", "", "2/3",
     [(1, 0), (1, 1), (1, 2), (1, 3), (2, 1), (3, 3)], [(4, 0), (4, 2)], *CLEAN),
    ("6a", "Y_{4,4} in P(1,1,1,2,2,2)", 2, "2.20", "2x1/2(1,1,1)", "1",
     [(1, 0), (1, 1), (1, 1), (2, 0), (2, 1), (2, 1)], [(4, 0), (4, 0)], *CLEAN),
    ("6b", "Y_{4,4} in P(1,1,1,2,2,2)", 2, "2.17", "", "1",
     [(1, 0), (1, 0), (1, 1), (2, 1), (2, 1), (2, 1)], [(4, 0), (4, 0)], *CLEAN),
    ("6c", "Y_{4,4} in P(1,1,1,2,2,2)", 4, "4.5", "1/2(1,1,1)", "1/2",
     [(1, 0), (1, 1), (1, 3), (2, 1), (2, 2), (2, 3)], [(4, 0), (4, 2)],
     "clean", (),
     "errata: source row printed 4x1/4(1,1,3)_3; multiplicity 2 is forced "
     "by the admissibility bound for order-4 torsion"),
    ("6d", "Y_{4,4} in P(1,1,1,2,2,2)", 4, "4.1", "", "1/2",
     [(1, 0), (1, 2), (1, 3), (2, 1), (2, 1), (2, 3)], [(4, 0), (4, 2)], *CLEAN),
    ("7", "Y_{4,5} in P(1,1,1,2,2,3)", 2, "2.16", "", "5/6",
     [(1, 0), (1, 0), (1, 1), (2, 1), (2, 1), (3, 1)], [(4, 0), (5, 0)], *CLEAN),
    ("8a", "Y_{4,6} in P(1,1,1,2,3,3)", 2, "2.20", "1/3(1,1,2)", "2/3",
     [(1, 0), (1, 1), (1, 1), (2, 1), (3, 0), (3, 1)], [(4, 0), (6, 0)],
     "clean", (),
     "errata: source row printed an unmarked free point of index 2, which "
     "cannot split off the cover's pair of index-3 points; the free point "
     "has index 3"),
    ("8b", "Y_{4,6} in P(1,1,1,2,3,3)", 2, "2.15", "", "2/3",
     [(1, 0), (1, 0), (1, 1), (2, 1), (3, 1), (3, 1)], [(4, 0), (6, 0)], *CLEAN),
    ("8c", "Y_{4,6} in P(1,1,1,2,3,3)", 3, "3.2", "", "4/9",
     [(1, 0), (1, 1), (1, 2), (2, 0), (3, 1), (3, 2)], [(4, 0), (6, 0)], *CLEAN),
    ("9", "Y_{5,6} in P(1,1,1,2,3,4)", 2, "2.13", "", "5/8",
     [(1, 0), (1, 0), (1, 1), (2, 1), (3, 1), (4, 1)], [(5, 0), (6, 0)], *CLEAN),
    ("10", "Y_{6,8} in P(1,1,1,3,4,5)", 2, "2.11", "", "2/5",
     [(1, 0), (1, 0), (1, 1), (3, 1), (4, 1), (5, 1)], [(6, 0), (8, 0)], *CLEAN),
    ("11", "Y_{4,6} in P(1,1,2,2,2,3)", 2, "2.19", "2x1/2(1,1,1)", "1/2",
     [(1, 0), (1, 1), (2, 0), (2, 1), (2, 1), (3, 1)], [(4, 0), (6, 0)], *CLEAN),
    ("12", "Y_{5,6} in P(1,1,2,2,3,3)", 3, "3.1", "1/2(1,1,1)", "5/18",
     [(1, 0), (1, 0), (2, 1), (2, 2), (3, 1), (3, 2)], [(5, 0), (6, 0)], *CLEAN),
    ("13", "Y_{4,8} in P(1,1,2,2,3,4)", 2, "2.18", "2x1/2(1,1,1)", "1/3",
     [(1, 0), (1, 1), (2, 0), (2, 1), (3, 1), (4, 1)], [(4, 0)],
     "special", ("cross-codimension",),
     "inference forces a generator of bidegree (4,1) and a relation of "
     "bidegree (4,0) at the same degree; expected higher-codimension model"),
    ("14", "Y_{6,7} in P(1,1,2,3,3,4)", 2, "2.14", "1/3(1,1,2)", "7/24",
     [(1, 0), (1, 1), (2, 1), (3, 0), (3, 1), (4, 1)], [(6, 0), (7, 0)], *CLEAN),
    ("15", "Y_{6,8} in P(1,1,2,3,3,5)", 2, "2.12", "1/3(1,1,2)", "4/15",
     [(1, 0), (1, 1), (2, 1), (3, 0), (3, 1), (5, 1)], [(6, 0), (8, 0)],
     "clean", (),
     "errata: source row cites the basket position holding "
     "{3x1/2(1,1,1)_1, 1/10(1,3,7)_5}; the printed position points at the "
     "(1,1,9) variant, which contradicts the row content"),
    ("16a", "Y_{6,8} in P(1,1,2,3,4,4)", 2, "2.19", "1/4(1,1,3)", "1/4",
     [(1, 0), (1, 1), (2, 1), (3, 1), (4, 0), (4, 1)], [(6, 0), (8, 0)], *CLEAN),
    ("16b", "Y_{6,8} in P(1,1,2,3,4,4)", 2, "2.8", "1/2(1,1,1)", "1/4",
     [(1, 0), (1, 0), (2, 1), (3, 1), (4, 1), (4, 1)], [(6, 0), (8, 0)], *CLEAN),
    ("16c", "Y_{6,8} in P(1,1,2,3,4,4)", 2, "2.10", "1/2(1,1,1)", "1/4",
     [(1, 0), (1, 1), (2, 1), (3, 0), (4, 1), (4, 1)], [(6, 0), (8, 0)], *CLEAN),
    ("17", "Y_{7,8} in P(1,1,2,3,4,5)", 2, "2.6", "1/2(1,1,1)", "7/30",
     [(1, 0), (1, 0), (2, 1), (3, 1), (4, 1), (5, 1)], [(7, 0), (8, 0)], *CLEAN),
    ("18", "Y_{8,9} in P(1,1,2,3,4,7)", 2, "2.2", "1/2(1,1,1)", "3/14",
     [(1, 0), (1, 1), (2, 1), (3, 0), (4, 1), (7, 1)], [(8, 0), (9, 0)],
     "clean", (),
     "errata: source row printed the action of the row above it; the "
     "torsion data here forces h^0(-K) = 1, so one weight-1 coordinate is "
     "anti-invariant and the weight-3 coordinate invariant"),
    ("19a", "Y_{8,10} in P(1,1,2,4,5,6)", 2, "2.4", "1/2(1,1,1)", "1/6",
     [(1, 0), (1, 0), (2, 1), (4, 1), (5, 1), (6, 1)], [(8, 0), (10, 0)], *CLEAN),
    ("19b", "Y_{8,10} in P(1,1,2,4,5,6)", 2, "2.5", "1/2(1,1,1)", "1/6",
     [(1, 0), (1, 1), (2, 1), (4, 1), (5, 0), (6, 1)], [(8, 0), (10, 0)], *CLEAN),
    ("20", "Y_{8,10} in P(1,1,3,4,5,5)", 2, "2.18", "1/5(1,1,4)", "2/15",
     [(1, 0), (1, 1), (3, 1), (4, 1), (5, 0), (5, 1)], [(8, 0), (10, 0)],
     "clean", (),
     "errata: source row printed a free point 1/5(1,1,5), which is not a "
     "cyclic quotient singularity; the cover carries 1/5(1,1,4) points and "
     "1/5(1,1,4) is the unique admissible repair"),
    ("21", "Y_{10,12} in P(1,1,3,5,6,7)", 2, "2.1", "1/3(1,1,2)", "2/21",
     [(1, 0), (1, 0), (3, 1), (5, 1), (6, 1), (7, 1)], [(10, 0), (12, 0)], *CLEAN),
    ("22a", "Y_{6,8} in P(1,2,2,3,3,4)", 2, "2.20", "3x1/2(1,1,1), 1/3(1,1,2)", "1/6",
     [(1, 1), (2, 0), (2, 1), (3, 0), (3, 1), (4, 1)], [(6, 0), (8, 0)], *CLEAN),
    ("22b", "Y_{6,8} in P(1,2,2,3,3,4)", 2, "2.15", "3x1/2(1,1,1)", "1/6",
     [(1, 0), (2, 0), (2, 1), (3, 1), (3, 1), (4, 1)], [(6, 0), (8, 0)], *CLEAN),
    ("22c", "Y_{6,8} in P(1,2,2,3,3,4)", 2, "2.17", "1/2(1,1,1), 1/3(1,1,2)", "1/6",
     [(1, 0), (2, 1), (2, 1), (3, 0), (3, 1), (4, 1)], [(6, 0), (8, 0)], *CLEAN),
    ("22d", "Y_{6,8} in P(1,2,2,3,3,4)", 3, "3.3", "2x1/2(1,1,1)", "1/9",
     [(1, 0), (2, 1), (2, 2), (3, 1), (3, 2), (4, 0)], [(6, 0), (8, 0)], *CLEAN),
    ("23", "Y_{6,10} in P(1,2,2,3,4,5)", 2, "2.13", "3x1/2(1,1,1)", "1/8",
     [(1, 0), (2, 0), (2, 1), (3, 1), (4, 1), (5, 1)], [(6, 0), (10, 0)], *CLEAN),
    ("24", "Y_{8,9} in P(1,2,3,3,4,5)", 2, "2.7", "1/2(1,1,1), 1/3(1,1,2)", "1/10",
     [(1, 0), (2, 1), (3, 0), (3, 1), (4, 1), (5, 1)], [(8, 0), (9, 0)], *CLEAN),
    ("25", "Y_{8,10} in P(1,2,3,4,4,5)", 2, "2.16", "1/2(1,1,1), 1/4(1,1,3)", "1/12",
     [(1, 0), (2, 1), (3, 1), (4, 0), (4, 1), (5, 1)], [(8, 0), (10, 0)],
     "clean", (),
     "errata: source row printed a free point 1/1(1,1,1); the residual "
     "orbit is a pair of half-points, so the entry is 1/2(1,1,1)"),
    ("26", "Y_{8,12} in P(1,2,3,4,5,6)", 2, "2.11", "2x1/2(1,1,1), 1/3(1,1,2)", "1/15",
     [(1, 0), (2, 0), (3, 1), (4, 1), (5, 1), (6, 1)], [(8, 0), (12, 0)],
     "clean", (),
     "errata: source row printed 3x1/1(1,1,1) among the free points; the "
     "residual orbits are half-points, so they are 2x1/2(1,1,1) after the "
     "marked pair is accounted for"),
    ("27", "Y_{10,12} in P(1,2,3,5,5,7)", 2, "2.3", "1/5(1,2,3)", "2/35",
     [(1, 0), (2, 1), (3, 1), (5, 0), (5, 1), (7, 1)], [(10, 0), (12, 0)],
     "clean", (),
     "errata: source row printed a free point 1/1(1,1,1); the marked "
     "half-point already accounts for it and the free orbit is the "
     "1/5(1,2,3) pair"),
    ("28", "Y_{10,12} in P(1,3,4,4,5,6)", 2, "2.13", "1/3(1,1,2), 1/4(1,1,3)", "1/24",
     [(1, 0), (3, 1), (4, 0), (4, 1), (5, 1), (6, 1)], [(10, 0), (12, 0)],
     "clean", (),
     "errata: source row printed 2x1/1(1,1,1) among the free points; those "
     "slots hold the 1/3 and 1/4 free orbits"),
]

ROWS_CODIM3 = [
    ("1a", "Y_{2,2,2} in P(1,1,1,1,1,1,1)", 2, "2.20", "", "4",
     [(1, 0), (1, 0), (1, 0), (1, 1), (1, 1), (1, 1), (1, 1)],
     [(2, 0), (2, 0), (2, 0)], *CLEAN),
    ("1b", "Y_{2,2,2} in P(1,1,1,1,1,1,1)", 4, "4.5", "", "2",
     [(1, 0), (1, 0), (1, 1), (1, 1), (1, 2), (1, 3), (1, 3)],
     [(2, 0), (2, 0), (2, 2)], *CLEAN),
    ("1c", "Y_{2,2,2} in P(1,1,1,1,1,1,1)", 8, "8.1", "", "1",
     [(1, 0), (1, 1), (1, 2), (1, 3), (1, 4), (1, 5), (1, 7)],
     [(2, 0), (2, 2), (2, 4)],
     "clean", (),
     "errata: source row printed two marked half-points in the order-8 "
     "basket; admissibility forces a single one"),
    ("2", "Y_{4,4,4,4,4} in P(1,1,1,2,2,2,2)", 5, "5.3", "1/2(1,1,1)", "1/2",
     [(1, 0), (1, 1), (1, 4), (2, 1), (2, 2), (2, 3), (2, 4)],
     [(4, 0), (4, 1), (4, 2), (4, 3), (4, 4)], *CLEAN),
]


SPECIALS_CODIM3 = [
    # (cover name, r, bt key, be, kx, gens, rels, note)
    ("Y_{5,5,6,6,6} in P(1,1,2,2,3,3,3)", 2, "2.18",
     "1/2(1,1,1), 1/3(1,1,2)", "1/2",
     [(1, 0), (1, 1), (2, 0), (2, 1), (3, 0), (3, 1), (3, 1), (4, 1)],
     [(4, 0)],
     "the only candidate this cover admits; the series forces a degree-4 "
     "generator and a degree-4 relation with different second degrees, so "
     "the quotient is expected to live in higher codimension"),
]


# --------------------------------------------------------------------------
# build steps
# --------------------------------------------------------------------------


def fail(msg: str):
    print(f"FAIL: {msg}", file=sys.stderr)
    sys.exit(1)


def parse_basket(text: str) -> Basket:
    return Basket.parse(text) if text else Basket(())


def basket_key(basket: Basket) -> tuple:
    return tuple(sorted(tuple(sorted(e.items())) for e in basket.to_json()))


def units(r: int) -> list[int]:
    from math import gcd

    return [u for u in range(1, r) if gcd(u, r) == 1]


def bidegrees_match(r, got_gens, got_rels, want_gens, want_rels) -> bool:
    """Engine output vs annotation, up to one unit rescale of all second degrees."""
    gg = Counter((g.n, g.i) for g in got_gens)
    gq = Counter((q.n, q.i) for q in got_rels)
    for u in units(r):
        wg = Counter((n, (u * i) % r) for n, i in want_gens)
        wq = Counter((n, (u * i) % r) for n, i in want_rels)
        if wg == gg and wq == gq:
            return True
    return False


def make_records(entries) -> list[CoverRecord]:
    records = []
    for entry in entries:
        if len(entry) == 7:
            name, w, d, basket, k3, structure, notes = entry
        else:
            name, w, d, basket, k3, notes = entry
            structure = "ci"
        rec = CoverRecord(
            name=name,
            weights=tuple(w),
            degrees=tuple(d),
            basket=parse_basket(basket),
            minus_k_cubed=Fraction(k3),
            structure=structure,
            notes=notes,
        )
        problems = rec.validate(trunc=20)
        if problems:
            fail(f"cover {name}: " + "; ".join(problems))
        records.append(rec)
    return records


def check_row_arithmetic(rec: CoverRecord, r, btc, be, kx):
    """The quotient numerics a row claims must be forced by the cover."""
    need = forced_preimage(Basket(btc.entries), r)
    have = Counter()
    for entry, mult in rec.basket.counts().items():
        have[entry.type] += mult
    residual = have - need
    for s, m in need.items():
        if have.get(s, 0) < m:
            fail(f"{rec.name}: bt preimage needs {m} x {s}")
    split = Counter()
    for s, m in residual.items():
        if m % r:
            fail(f"{rec.name}: residual {m} x {s} not divisible by r={r}")
        split[s] = m // r
    want_be = Counter()
    for entry, mult in be.counts().items():
        want_be[entry.type] += mult
    if split != want_be:
        fail(f"{rec.name}: be should be {sorted(split.items())}")
    if kx * r != rec.minus_k_cubed:
        fail(f"{rec.name}: kx {kx} is not -K^3/{r}")


def build_quotients(covers, decoys, rows, specials_extra, covers_name, golden_name):
    """Run the search on one catalog and freeze the outcome as a golden file."""
    records = covers + decoys
    by_name = {rec.name: rec for rec in records}
    if len(by_name) != len(records):
        fail(f"{covers_name}: duplicate cover names")

    result = search(records, trunc=TRUNC, max_degree=MAX_DEGREE)
    by_key = {}
    for c in result:
        key = (c.cover.name, c.data.r, basket_key(c.data.bt))
        if key in by_key:
            fail(f"{golden_name}: duplicate candidate {key}")
        by_key[key] = c

    rows_out, specials_out, matched = [], [], set()
    annotations = [
        (label, cover, r, btkey, be, kx, gens, rels, status, flags, notes)
        for (label, cover, r, btkey, be, kx, gens, rels, status, flags, notes) in rows
    ] + [
        (None, cover, r, btkey, be, kx, gens, rels, "special",
         (CROSS_CODIMENSION,), note)
        for (cover, r, btkey, be, kx, gens, rels, note) in specials_extra
    ]

    for label, cover, r, btkey, be_str, kx_str, gens, rels, status, flags, notes in annotations:
        tag = f"{golden_name} row {label or cover}"
        if cover not in by_name:
            fail(f"{tag}: cover not in catalog")
        btc = bt_candidate(btkey)
        if btc.r != r:
            fail(f"{tag}: bt key {btkey} has order {btc.r}, row says {r}")
        be = parse_basket(be_str)
        kx = Fraction(kx_str)
        check_row_arithmetic(by_name[cover], r, btc, be, kx)

        c = by_key.get((cover, r, basket_key(Basket(btc.entries))))
        if c is None:
            fail(f"{tag}: search produced no candidate")
        if c.status != status:
            fail(f"{tag}: status {c.status}, expected {status}")
        if basket_key(c.data.be) != basket_key(be):
            fail(f"{tag}: be {c.data.be} != {be}")
        if c.data.minus_k_cubed != kx:
            fail(f"{tag}: kx {c.data.minus_k_cubed} != {kx}")
        if tuple(sorted(c.diagnostics)) != tuple(sorted(flags)):
            fail(f"{tag}: flags {c.diagnostics} != {flags}")
        if not bidegrees_match(r, c.presentation.generators,
                               c.presentation.relations, gens, rels):
            got_g = sorted((g.n, g.i) for g in c.presentation.generators)
            got_q = sorted((q.n, q.i) for q in c.presentation.relations)
            fail(f"{tag}: presentation {got_g} / {got_q} does not match "
                 f"{sorted(gens)} / {sorted(rels)} up to unit rescale")

        row = _candidate_row(c)
        if label is not None:
            row["label"] = label
        if notes:
            row["notes"] = notes
        (rows_out if status == "clean" else specials_out).append(row)
        matched.add((cover, r, basket_key(c.data.bt)))

    for key, c in sorted(by_key.items()):
        if key in matched:
            continue
        if c.status == "clean":
            got_g = sorted((g.n, g.i) for g in c.presentation.generators)
            got_q = sorted((q.n, q.i) for q in c.presentation.relations)
            fail(f"{golden_name}: unexpected clean candidate {key[0]} r={key[1]} "
                 f"bt={c.data.bt} be={c.data.be} {got_g} / {got_q}")
        row = _candidate_row(c)
        row["notes"] = (
            "additional special-status candidate surfaced by the search; "
            "kept so the golden freezes the full outcome"
        )
        specials_out.append(row)

    clean_names = {c.cover.name for c in result.clean()}
    decoys_out = []
    for rec in decoys:
        if rec.name in clean_names:
            fail(f"{golden_name}: decoy {rec.name} produced a clean candidate")
        reasons = sorted({rej.reason for rej in result.rejections
                          if rej.cover == rec.name})
        if not reasons:
            fail(f"{golden_name}: decoy {rec.name} was never rejected")
        decoys_out.append({"cover": rec.name, "reasons": reasons})

    write_json(covers_name, {
        "format_version": FORMAT_VERSION,
        "entries": [rec.to_json() for rec in records],
    })
    write_json(golden_name, {
        "format_version": FORMAT_VERSION,
        "catalog": covers_name,
        "trunc": TRUNC,
        "max_degree": MAX_DEGREE,
        "rows": rows_out,
        "special_cases": specials_out,
        "decoys": decoys_out,
    })
    n_clean = sum(1 for _ in result.clean())
    print(f"  {golden_name}: {n_clean} clean rows, {len(specials_out)} special, "
          f"{len(decoys_out)} decoys, {len(result.rejections)} rejections")


def build_torsion():
    golden = {}
    transcribed = Counter(label.split(".")[0] for label in BT)
    for r in range(2, MAX_TORSION + 1):
        found = enumerate_bt(r)
        if int(transcribed.get(str(r), 0)) != len(found):
            fail(f"torsion: order {r} has {len(found)} baskets, transcription "
                 f"lists {transcribed.get(str(r), 0)}")
        if found:
            golden[str(r)] = [list(c.entries.to_json()) for c in found]
    want = {basket_key(Basket(bt_candidate(label).entries)) for label in BT}
    got = {
        basket_key(Basket(c.entries))
        for r in range(2, MAX_TORSION + 1)
        for c in enumerate_bt(r)
    }
    if want != got:
        fail("torsion: transcribed baskets differ from the enumeration")
    write_json("torsion_baskets.json", {
        "max_order": MAX_TORSION,
        "baskets": golden,
    })
    print(f"  torsion_baskets.json: {sum(len(v) for v in golden.values())} baskets")


def build_series_examples():
    # hypersurface quotient pair: the bigraded components of the order-5
    # quotient must sum to the plain series of its cover, degree by degree
    plain_data = FanoData(Fraction(5, 2), parse_basket("1/2(1,1,1)"))
    plain = altinok_series(plain_data, 9)
    if [int(c) for c in plain.component(0)] != [1, 4, 11, 24, 46, 79, 126, 189, 271, 374]:
        fail("series examples: untwisted coefficients moved")
    peel_plain = [[1, 0], [1, 0], [1, 0], [1, 0], [2, 0]]
    peeled = plain
    for n, i in peel_plain:
        peeled = peeled.peel(Bidegree(n, i))
    peeled_map = {
        str(m): format_rational(c)
        for m, c in enumerate(peeled.component(0)) if c
    }
    if peeled_map != {"0": "1", "5": "-1"}:
        fail(f"series examples: untwisted peel is not 1 - t^5 ({peeled_map})")

    fe = FanoEnriquesData(
        5, Fraction(1, 2),
        parse_basket("1/10(1,3,7)_6, 2x1/5(1,2,3)_1"),
        Basket(()),
    )
    twisted = bigraded_series(fe, 9)
    if [int(c) for c in twisted.component(0)] != [1, 1, 2, 5, 9, 16, 25, 38, 54, 74]:
        fail("series examples: bigraded component 0 moved")
    for m in range(10):
        total = sum(twisted.coefficient(m, i) for i in range(5))
        if total != plain.coefficient(m, 0):
            fail(f"series examples: component sum differs from cover at t^{m}")
    peel_twisted = [[1, 0], [1, 1], [1, 3], [1, 4], [2, 2]]
    tpeeled = twisted
    for n, i in peel_twisted:
        tpeeled = tpeeled.peel(Bidegree(n, i))
    tpeeled_map = {}
    for i in range(tpeeled.r):
        for m, c in enumerate(tpeeled.component(i)):
            if c:
                tpeeled_map[f"{m},{i}"] = format_rational(c)
    if tpeeled_map != {"0,0": "1", "5,0": "-1"}:
        fail(f"series examples: bigraded peel is not 1 - t^5 ({tpeeled_map})")

    write_json("series_examples.json", {
        "untwisted": {
            "minusK3": format_rational(plain_data.minus_k_cubed),
            "basket": plain_data.basket.to_json(),
            "coeffs": [format_rational(c) for c in plain.component(0)],
            "peel": peel_plain,
            "peeled": peeled_map,
        },
        "bigraded": {
            "data": fe.to_json(),
            "components": [
                [format_rational(c) for c in twisted.component(i)]
                for i in range(twisted.r)
            ],
            "peel": peel_twisted,
            "peeled": tpeeled_map,
        },
    })
    print("  series_examples.json: written")


def write_json(name: str, obj):
    path = DATA_DIR / name
    path.write_text(json.dumps(obj, indent=1) + "\n")


def main():
    print("building bundled fixtures ...")
    build_torsion()
    build_series_examples()

    build_quotients(
        make_records(COVERS_CODIM1), make_records(DECOYS_CODIM1),
        ROWS_CODIM1, [], "covers_codim1.json", "quotients_codim1.json",
    )
    build_quotients(
        make_records(COVERS_CODIM2), make_records(DECOYS_CODIM2),
        ROWS_CODIM2, [], "covers_codim2.json", "quotients_codim2.json",
    )
    build_quotients(
        make_records(COVERS_CODIM3), make_records(STANDINS_CODIM3 + DECOYS_CODIM3),
        ROWS_CODIM3, SPECIALS_CODIM3, "covers_codim3.json", "quotients_codim3.json",
    )

    problems = verify_fixtures()
    if problems:
        fail("verify_fixtures: " + "; ".join(problems))
    print("verify_fixtures: all bundled fixtures check out")


if __name__ == "__main__":
    main()
