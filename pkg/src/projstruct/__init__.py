"""Exact computations around projective structures and their automorphisms.

Submodules: ``scalars`` (exact cyclotomic numbers), ``series`` (truncated power
series and the Schwarzian), ``moebius``, ``action`` (affine actions on the space
of quadratic differentials), ``hyperelliptic``, ``orbifold``, ``torus``,
``origami``, ``io`` and ``cli``.
"""
from .errors import ProjStructError
from .scalars import I, ZETA3, ZETA6, ZETA12, Cyclotomic, format_scalar, root_of_unity
from .series import (
    DEFAULT_ORDER,
    TruncatedSeries,
    cocycle_residual,
    compose_series,
    derive,
    is_moebius_series,
    revert_series,
    schwarzian,
    series_arith,
)
from .moebius import INFINITY, MobiusMap, apply, compose, taylor_expand
from .action import (
    ActionGroup,
    AffineAutAction,
    FixedLocus,
    MonomialAction,
    apply_action,
    fixed_locus,
    is_projective_for,
    relatively_hurwitz_set,
)
from .hyperelliptic import (
    HyperellipticModel,
    basis,
    belyi_branch_data,
    export_action,
    invariant_dimension,
    pullback_of_involution,
    pullback_of_rotation,
)
from .orbifold import (
    OrbifoldSignature,
    TriangleSignature,
    automorphisms_per_genus,
    enumerate_triangle_signatures,
    fermat_genus,
    invariant_quadratic_dimension,
    is_very_large,
    quotient_differential_order,
    riemann_hurwitz_genus,
)
from .torus import Classification, TauClass, TorusAutomorphism, classify_by_formula, classify_by_series
from .origami import (
    Origami,
    check_hurwitz_translation_bound,
    enumerate_origamis,
    genus,
    is_normal,
    translation_group,
)

__version__ = "0.1.0"
