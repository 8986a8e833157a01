"""Exact Betti numbers and structure of idealization rings R ⋉ M."""

from .classify import (
    StructureVerdict,
    Verdict,
    ci_fraction_diagnostic,
    ci_verdict_eq1,
    classify,
    cm_verdict,
    gorenstein_verdict,
    hypersurface_verdict,
    regular_verdict,
)
from .conjectures import ConjectureReport, Witness, beh_check, jl_check, total_rank_check, zl_check
from .idealize import IdealizationRing, betti_lower_bound_check, betti_over_idealization, idealize
from .models import (
    LocalRingModel,
    ModuleModel,
    Structure,
    complete_intersection_ring,
    explicit_module,
    explicit_ring,
    free_module,
    hypersurface_ring,
    regular_ring,
    residue_field,
)
from .series import BettiSeries, TruncatedSeries, add, b_via_determinant, divide, mul, reciprocal_unit

__version__ = "0.1.0"
