"""Digroups and normal forms for the free product of two digroups."""

from .digroup import (
    Digroup,
    FiniteDigroup,
    FreeDigroup,
    GroupAction,
    PointedSet,
    check_axioms,
    decompose,
    from_parts,
    group_part,
    halo,
    trivial_digroup,
)
from .free_product import FactorPair, GroupPart, Pointed, embed, fp_eval_word, universal_map
from .groups import FiniteGroup, FreeGroup, cyclic_group
from .oracle import Presentation, build_classes, decide_equal
from .pointed import PointedWord, parse_pointed, print_pointed

__all__ = [
    "Digroup", "FiniteDigroup", "FreeDigroup", "GroupAction", "PointedSet",
    "check_axioms", "decompose", "from_parts", "group_part", "halo", "trivial_digroup",
    "FactorPair", "GroupPart", "Pointed", "embed", "fp_eval_word", "universal_map",
    "FiniteGroup", "FreeGroup", "cyclic_group",
    "Presentation", "build_classes", "decide_equal",
    "PointedWord", "parse_pointed", "print_pointed",
]
