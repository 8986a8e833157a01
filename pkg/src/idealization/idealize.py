"""The idealization ``R ⋉ M`` and Betti numbers of R-modules over it.

For R-modules M, N the Poincare series over the idealization is
``P_N(t) / (1 - t P_M(t))``.  Two routes compute it: long division, and the
convolution ``beta_n = sum_i beta_i^R(N) B_{n-i}`` with ``B = 1/(1 - t P_M)``.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from functools import lru_cache
from typing import Literal, NamedTuple

from .errors import ConsistencyError, RingMismatchError, TruncationError
from .models import (
    LocalRingModel,
    ModuleModel,
    Structure,
    check_module_over,
    deviation_ci_sides,
)
from .series import BettiSeries, divide, one_minus_t_times, reciprocal_unit

Route = Literal["division", "convolution", "both"]
ROUTES = ("division", "convolution", "both")


@dataclass(frozen=True)
class IdealizationRing:
    ring: LocalRingModel
    base: LocalRingModel
    zipped: ModuleModel

    @property
    def degree(self) -> int:
        return self.ring.degree

    @property
    def name(self) -> str:
        return self.ring.name


def _need(obj_name: str, have: int, need: int):
    if have < need:
        raise TruncationError(f"{obj_name} is known to degree {have}, degree {need} is needed")


@lru_cache(maxsize=256)
def _b_sequence(zipped_betti: BettiSeries, D: int) -> BettiSeries:
    return reciprocal_unit(one_minus_t_times(zipped_betti, D), D)


def b_sequence(m: ModuleModel, D: int) -> BettiSeries:
    """Coefficients of ``1 / (1 - t P_M(t))`` up to degree D."""
    _need(f"module {m.name}", m.degree, D - 1)
    return _b_sequence(m.betti.truncate(max(D - 1, 0)), D)


def gorenstein_status(base: LocalRingModel, m: ModuleModel) -> bool | None:
    """Gorenstein-ness of ``base ⋉ m``: CM base with m canonical (Reiten).

    Over a Gorenstein base the canonical module is the base itself, so the
    test reduces to m being free of rank one.
    """
    cm = base.structure.cohen_macaulay
    if cm is None:
        return None
    if not cm or m.depth < base.depth:
        return False
    if m.canonical_module:
        return True
    if base.structure.gorenstein:
        if m.betti[0] != 1:
            return False
        if m.degree >= 1:
            return m.betti[1] == 0
    return None


def idealize(
    base: LocalRingModel, m: ModuleModel, D: int | None = None, name: str | None = None
) -> IdealizationRing:
    if m.over != base.name:
        raise RingMismatchError(f"module {m.name} is over {m.over!r}, not {base.name!r}")
    check_module_over(m, base)
    if D is None:
        D = min(base.degree, m.degree + 1)
    _need(f"ring {base.name} (betti_k)", base.degree, D)
    _need(f"module {m.name}", m.degree, D - 1)

    den = one_minus_t_times(m.betti.truncate(max(D - 1, 0)), D)
    betti_k = BettiSeries(divide(base.betti_k.truncate(D), den, D).coeffs)
    dim = base.dim
    depth = min(base.depth, m.depth)
    edim = m.betti[0] + base.edim
    cm = depth == dim

    structure = Structure(
        regular=False,
        hypersurface=cm and edim - depth <= 1,
        gorenstein=gorenstein_status(base, m),
        cohen_macaulay=cm,
    ).closed()
    if D >= 2 and structure.complete_intersection is None:
        # flags forced by depth and Gorenstein-ness take precedence; the
        # deviation test only fills the gap (it can disagree on unrealizable data)
        lhs, rhs = deviation_ci_sides(betti_k, dim)
        structure = replace(structure, complete_intersection=lhs == rhs)
    ring = LocalRingModel(
        name=name or f"{base.name}⋉{m.name}",
        dim=dim, depth=depth, edim=edim,
        betti_k=betti_k,
        structure=structure,
        characteristic=base.characteristic,
    )
    return IdealizationRing(ring=ring, base=base, zipped=m)


def _transportable(ideal: IdealizationRing, n: ModuleModel):
    if n.over != ideal.base.name:
        raise RingMismatchError(
            f"module {n.name} is over {n.over!r}; only modules over the base {ideal.base.name!r} can be transported"
        )


def _convolve(nb, B, D):
    return tuple(sum(nb[i] * B[j - i] for i in range(j + 1)) for j in range(D + 1))


def betti_over_idealization(
    ideal: IdealizationRing, n: ModuleModel, D: int | None = None, route: Route = "convolution"
) -> BettiSeries:
    """Betti numbers over ``R ⋉ M`` of the R-module n, to degree D."""
    _transportable(ideal, n)
    if route not in ROUTES:
        raise ValueError(f"route must be one of {ROUTES}, got {route!r}")
    if D is None:
        D = min(ideal.degree, n.degree)
    _need(f"module {n.name}", n.degree, D)
    nb = n.betti.truncate(D)

    conv = div = None
    if route in ("convolution", "both"):
        conv = _convolve(nb, b_sequence(ideal.zipped, D), D)
    if route in ("division", "both"):
        den = one_minus_t_times(ideal.zipped.betti.truncate(max(D - 1, 0)), D)
        div = divide(nb, den, D).coeffs
    if conv is not None and div is not None and conv != div:
        raise ConsistencyError(f"division and convolution routes disagree for {n.name} over {ideal.name}")
    return BettiSeries(conv if conv is not None else div)


class LowerBound(NamedTuple):
    holds: bool
    first_violation: int | None


def betti_lower_bound_check(ideal: IdealizationRing, n: ModuleModel, D: int | None = None) -> LowerBound:
    """``beta_i over R⋉M  >=  beta_0(M) beta_{i-1}(N) + beta_i(N)`` for 1 <= i <= D."""
    over = betti_over_idealization(ideal, n, D)
    mu = ideal.zipped.betti[0]
    for i in range(1, over.degree + 1):
        if over[i] < mu * n.betti[i - 1] + n.betti[i]:
            return LowerBound(False, i)
    return LowerBound(True, None)


def closed_form_low_degrees(m: ModuleModel, n: ModuleModel) -> tuple[int, int, int]:
    """beta_0, beta_1, beta_2 of n over R⋉m written out in closed form."""
    _need(f"module {n.name}", n.degree, 2)
    _need(f"module {m.name}", m.degree, 1)
    n0, n1, n2 = n.betti[0], n.betti[1], n.betti[2]
    m0, m1 = m.betti[0], m.betti[1]
    return n0, n0 * m0 + n1, n0 * m0 ** 2 + n0 * m1 + m0 * n1 + n2


def with_gorenstein(ideal: IdealizationRing) -> IdealizationRing:
    ring = replace(ideal.ring, structure=replace(ideal.ring.structure, gorenstein=True))
    return replace(ideal, ring=ring)
