"""Exact arithmetic for spinal groups acting on spherically homogeneous trees.

The package constructs the finitely generated groups defined by a valency
sequence, verifies their finite level actions against iterated wreath
products of alternating groups, and computes Hausdorff-dimension data:
partial quotients with two-sided envelopes, sequence synthesis for a
target limit, and sampling of the realizable dimension set.
"""

__version__ = "0.1.0"

from .dimension import (
    alpha_target,
    chain_rule_table,
    dimension_report,
    envelope_bounds,
    partial_dimension,
    rigid_product_dimension,
    rigid_product_partial,
)
from .errors import BudgetExceeded, DegreeCapExceeded
from .perms import Permutation, alt_generators, embedded_alt_generators
from .portraits import Portrait, embed_at, rooted, spinal_generator
from .schreier import StabilizerChain
from .synthesis import (
    MembershipResult,
    SpectrumResult,
    SynthesisTrace,
    denominator_witness,
    spectrum_sample,
    spectrum_svg,
    synthesize,
    window,
)
from .trees import TreeSequence, Vertex
from .wreath import (
    QuotientOrder,
    lnfact,
    spinal_group_portraits,
    stirling_envelope,
    verify_level_action,
    wreath_quotient_order,
)

__all__ = [
    "BudgetExceeded",
    "DegreeCapExceeded",
    "MembershipResult",
    "Permutation",
    "Portrait",
    "QuotientOrder",
    "SpectrumResult",
    "StabilizerChain",
    "SynthesisTrace",
    "TreeSequence",
    "Vertex",
    "alpha_target",
    "alt_generators",
    "chain_rule_table",
    "denominator_witness",
    "dimension_report",
    "embed_at",
    "embedded_alt_generators",
    "envelope_bounds",
    "lnfact",
    "partial_dimension",
    "rigid_product_dimension",
    "rigid_product_partial",
    "rooted",
    "spectrum_sample",
    "spectrum_svg",
    "spinal_generator",
    "spinal_group_portraits",
    "stirling_envelope",
    "synthesize",
    "verify_level_action",
    "window",
    "wreath_quotient_order",
]
