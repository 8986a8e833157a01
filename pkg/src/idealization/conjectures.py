"""Checkers for homological conjectures over idealization rings.

The underlying theorems are implications, so a checker either confirms the
conclusion ("holds") or reports that the criterion did not fire
("inconclusive").  "fails" is only used by the BEH checker, where it means
the user's assertions contradict each other.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import NamedTuple

from .classify import Verdict
from .errors import ConsistencyError, HypothesisUnmetError, RingMismatchError
from .idealize import (
    IdealizationRing,
    b_sequence,
    betti_over_idealization,
    idealize,
    with_gorenstein,
)
from .models import LocalRingModel, ModuleModel, residue_field


class Witness(NamedTuple):
    index: int
    left: int
    right: int


@dataclass(frozen=True)
class ConjectureReport:
    conjecture: str
    verdict: Verdict
    witnesses: tuple[Witness, ...]
    narrative: str
    derived: dict = field(default_factory=dict)
    ring: LocalRingModel | None = None

    def to_dict(self):
        out = {
            "conjecture": self.conjecture,
            "verdict": self.verdict.value,
            "witnesses": [{"index": w.index, "left": w.left, "right": w.right} for w in self.witnesses],
            "narrative": self.narrative,
            "derived": dict(self.derived),
        }
        if self.ring is not None:
            out["ring"] = self.ring.to_dict()
        return out


def _require_base_module(ideal: IdealizationRing, n: ModuleModel):
    if n.over != ideal.base.name:
        raise RingMismatchError(f"{n.name} must be a module over {ideal.base.name}, it is over {n.over}")


def jl_check(omega: ModuleModel, m: ModuleModel, ideal: IdealizationRing) -> ConjectureReport:
    """beta_1(omega) <= beta_0(omega) over a CM ring R⋉M forces it to be Gorenstein.

    ``omega`` is the canonical module of R⋉M viewed as an R-module.
    """
    if ideal.ring.structure.cohen_macaulay is not True:
        raise HypothesisUnmetError(f"{ideal.name} is not known to be Cohen-Macaulay")
    if m != ideal.zipped:
        raise RingMismatchError(f"{m.name} is not the module {ideal.zipped.name} that {ideal.name} idealizes")
    _require_base_module(ideal, omega)
    over = betti_over_idealization(ideal, omega, 1)
    b0, b1 = over[0], over[1]
    if (b0, b1) != (omega.betti[0], omega.betti[0] * m.betti[0] + omega.betti[1]):
        raise ConsistencyError("low-degree Betti numbers of omega disagree with their closed form")
    witnesses = (Witness(1, b1, b0),)
    if b1 > b0:
        return ConjectureReport(
            "jorgensen_leuschke", Verdict.INCONCLUSIVE, witnesses,
            f"beta_1(omega) = {b0}*{m.betti[0]} + {omega.betti[1]} = {b1} > {b0} = beta_0(omega); "
            "the criterion does not apply",
        )
    if omega.betti[1] != 0 or m.betti[0] != 1:
        raise ConsistencyError("inequality held without beta_1^R(omega) = 0 and beta_0(M) = 1")
    if ideal.ring.structure.gorenstein is False:
        raise ConsistencyError(f"{ideal.name} is recorded as not Gorenstein, but the criterion forces it")
    return ConjectureReport(
        "jorgensen_leuschke", Verdict.HOLDS, witnesses,
        f"beta_1(omega) = {b1} <= {b0} = beta_0(omega) forces beta_1^R(omega) = 0 and beta_0(M) = 1; "
        f"{ideal.name} is Gorenstein",
        derived={"beta1_omega_over_R": 0, "beta0_M": 1, "gorenstein": True},
        ring=with_gorenstein(ideal).ring,
    )


def _beh_hypotheses(n: ModuleModel, base_ok: bool, which: str):
    missing = []
    if not base_ok:
        missing.append(f"base ring satisfies {which}")
    if not n.finite_length:
        missing.append(f"{n.name} has finite length")
    if not n.finite_pd:
        missing.append(f"{n.name} has finite projective dimension")
    if missing:
        raise HypothesisUnmetError("missing assertions: " + ", ".join(missing))


def beh_check(ideal: IdealizationRing, n: ModuleModel, base_satisfies_beh: bool) -> ConjectureReport:
    """beta_i over R⋉M of n is at least C(d, i) for 1 <= i <= depth R."""
    _beh_hypotheses(n, base_satisfies_beh, "Buchsbaum-Eisenbud-Horrocks")
    _require_base_module(ideal, n)
    d, top = ideal.base.dim, ideal.base.depth
    if top == 0:
        return ConjectureReport("beh", Verdict.HOLDS, (), "depth(R) = 0: no index to check")
    over = betti_over_idealization(ideal, n, top)
    witnesses = tuple(Witness(i, over[i], comb(d, i)) for i in range(1, top + 1))
    for w in witnesses:
        if w.left < w.right:
            return ConjectureReport(
                "beh", Verdict.FAILS, witnesses,
                f"beta_{w.index} = {w.left} < C({d},{w.index}) = {w.right}: "
                "the asserted hypotheses are inconsistent with the Betti data",
                derived={"first_violation": w.index},
            )
    return ConjectureReport(
        "beh", Verdict.HOLDS, witnesses,
        f"beta_i over {ideal.name} >= C({d}, i) for 1 <= i <= {top}",
    )


def total_rank_check(
    ideal: IdealizationRing, n: ModuleModel, base_satisfies_total_rank: bool, D: int
) -> ConjectureReport:
    """Partial sums of Betti numbers over R⋉M reach 2^d (monotone in D)."""
    _beh_hypotheses(n, base_satisfies_total_rank, "the Total Rank conjecture")
    _require_base_module(ideal, n)
    target = 2 ** ideal.base.dim
    over = betti_over_idealization(ideal, n, D)
    total = 0
    for j in range(D + 1):
        total += over[j]
        if total >= target:
            return ConjectureReport(
                "total_rank", Verdict.HOLDS, (Witness(j, total, target),),
                f"sum of beta_0..beta_{j} = {total} >= 2^{ideal.base.dim} = {target} (holds as of degree {j})",
            )
    return ConjectureReport(
        "total_rank", Verdict.INCONCLUSIVE, (Witness(D, total, target),),
        f"partial sum to degree {D} is {total} < {target}; a larger truncation may still certify",
    )


def zl_check(t: ModuleModel, base: LocalRingModel, D: int) -> ConjectureReport:
    """Numeric regularity criterion for a free module over R⋉k.

    For t free of rank r, ``beta_n = r B_n`` over R⋉k.  A drop
    ``beta_n <= beta_{n-1}`` at some n >= 2 forces beta_{n-1}^R(k) = 0, hence
    R regular.  n = 1 never counts: beta_1 = beta_0 for any free module.
    """
    if t.free_of_rank is None:
        raise HypothesisUnmetError(f"{t.name} is not asserted free")
    if t.over != base.name:
        raise RingMismatchError(f"{t.name} is over {t.over}, not {base.name}")
    ideal = idealize(base, residue_field(base, D), D)
    beta = betti_over_idealization(ideal, t, D, route="both")
    B = b_sequence(ideal.zipped, D)
    r = t.free_of_rank
    if tuple(beta) != tuple(r * x for x in B):
        raise ConsistencyError(f"Betti numbers of free {t.name} over {ideal.name} are not rank * B_n")
    if D >= 1 and beta[1] != beta[0]:
        raise ConsistencyError("beta_1 != beta_0 for a free module over R⋉k")

    scanned = []
    for n in range(2, D + 1):
        w = Witness(n, beta[n], beta[n - 1])
        scanned.append(w)
        if beta[n] <= beta[n - 1]:
            if base.betti_k[n - 1] != 0:
                raise ConsistencyError(f"drop at n = {n} but beta_{n - 1}^R(k) = {base.betti_k[n - 1]} != 0")
            if base.structure.regular is False:
                raise ConsistencyError(f"drop at n = {n} forces {base.name} regular, but it is recorded non-regular")
            return ConjectureReport(
                "zariski_lipman", Verdict.HOLDS, (w,),
                f"beta_{n} = {w.left} <= {w.right} = beta_{n - 1} over {ideal.name}; "
                f"hence beta_{n - 1}^R(k) = 0 and {base.name} is regular",
                derived={f"beta{n - 1}_k": 0, "regular": True, "drop_index": n},
            )
    return ConjectureReport(
        "zariski_lipman", Verdict.INCONCLUSIVE, tuple(scanned),
        f"beta_n > beta_(n-1) for every 2 <= n <= {D}; no drop, criterion does not fire "
        "(n = 1 is excluded: equality holds there for every free module)",
    )
