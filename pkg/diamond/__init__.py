"""
Single-diamond algebra for Heronian and Cayley-Menger diamonds
"""

from .heron import (
    LETTERS,
    HeronianDiamond,
    HeronianReport,
    flip_horizontal,
    flip_vertical,
    heron_K,
    heronian_check,
    identity_residuals,
    is_degenerate_diagonal,
    require_diagonal,
    require_heron,
)
from .propagation import (
    DegeneratePattern,
    complete_diamond,
    propagate_degenerate,
    propagate_lr,
    propagate_rl,
)
from .cayley_menger import (
    CM_LETTERS,
    CayleyMengerDiamond,
    PartialDirection,
    cm_check,
    cm_residual,
    m4,
    m4_terms,
    scm_det,
    scm_partial,
)
from .coherence import INTERLOCKS, Side, coherence_check, coherence_sides, coherence_solve
from .lifting import (
    PRODUCT_IDENTITIES,
    lift,
    lift_both,
    parse_sign,
    product_residuals,
    restrict,
    to_cayley_menger,
)

__all__ = [
    "LETTERS",
    "HeronianDiamond",
    "HeronianReport",
    "flip_horizontal",
    "flip_vertical",
    "heron_K",
    "heronian_check",
    "identity_residuals",
    "is_degenerate_diagonal",
    "require_diagonal",
    "require_heron",
    "DegeneratePattern",
    "complete_diamond",
    "propagate_degenerate",
    "propagate_lr",
    "propagate_rl",
    "CM_LETTERS",
    "CayleyMengerDiamond",
    "PartialDirection",
    "cm_check",
    "cm_residual",
    "m4",
    "m4_terms",
    "scm_det",
    "scm_partial",
    "INTERLOCKS",
    "Side",
    "coherence_check",
    "coherence_sides",
    "coherence_solve",
    "PRODUCT_IDENTITIES",
    "lift",
    "lift_both",
    "parse_sign",
    "product_residuals",
    "restrict",
    "to_cayley_menger",
]
