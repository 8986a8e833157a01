"""Structure verdicts for idealization rings, each with a certificate."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from .errors import ConsistencyError
from .idealize import IdealizationRing, gorenstein_status, idealize
from .models import LocalRingModel, ModuleModel, deviation_ci_sides


class Verdict(str, Enum):
    HOLDS = "holds"
    FAILS = "fails"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class StructureVerdict:
    property: str
    verdict: Verdict
    certificate: str
    values: dict = field(default_factory=dict)

    def to_dict(self):
        return {
            "property": self.property,
            "verdict": self.verdict.value,
            "certificate": self.certificate,
            "values": dict(self.values),
        }


def regular_verdict(ideal: IdealizationRing) -> StructureVerdict:
    mu = ideal.zipped.betti[0]
    edim = mu + ideal.base.edim
    dim = ideal.base.dim
    if edim != ideal.ring.edim or dim != ideal.ring.dim:
        raise ConsistencyError(f"{ideal.name}: derived invariants do not match the idealization model")
    if not edim > dim:
        raise ConsistencyError(f"{ideal.name}: edim {edim} <= dim {dim} for a nonzero module")
    cert = (
        f"edim(R⋉M) = beta_0(M) + edim(R) = {mu} + {ideal.base.edim} = {edim} "
        f"> {dim} = dim(R) = dim(R⋉M)"
    )
    return StructureVerdict("regular", Verdict.FAILS, cert, {"edim": edim, "dim": dim, "beta0_M": mu})


def hypersurface_verdict(ideal: IdealizationRing) -> StructureVerdict:
    """Hypersurface => M cyclic and R regular; the converse needs R⋉M CM.

    A hypersurface is CM, so depth data alone can refute it.
    """
    mu = ideal.zipped.betti[0]
    base_regular = ideal.base.structure.regular
    cm = ideal.ring.structure.cohen_macaulay
    values = {"beta0_M": mu, "base_regular": base_regular, "cohen_macaulay": cm,
              "depth": ideal.ring.depth, "dim": ideal.ring.dim}
    if cm is False:
        return StructureVerdict(
            "hypersurface", Verdict.FAILS,
            f"R⋉M is not Cohen-Macaulay (depth {ideal.ring.depth} < dim {ideal.ring.dim}), but every hypersurface is",
            values,
        )
    if mu > 1:
        return StructureVerdict(
            "hypersurface", Verdict.FAILS, f"beta_0(M) = {mu} > 1, so M is not cyclic", values
        )
    if base_regular is False:
        return StructureVerdict("hypersurface", Verdict.FAILS, f"base {ideal.base.name} is not regular", values)
    if cm is True and base_regular is True:
        gap = ideal.ring.edim - ideal.ring.depth
        return StructureVerdict(
            "hypersurface", Verdict.HOLDS,
            f"R⋉M is Cohen-Macaulay, beta_0(M) = 1 and R is regular: edim - depth = {gap} <= 1",
            values,
        )
    return StructureVerdict(
        "hypersurface", Verdict.INCONCLUSIVE, "regularity of R or Cohen-Macaulayness of R⋉M unknown", values
    )


def ci_verdict_eq1(ideal: IdealizationRing) -> StructureVerdict:
    """Complete intersection iff beta_2(k) = C(beta_1(k), 2) + beta_1(k) - dim over R⋉M."""
    lhs, rhs = deviation_ci_sides(ideal.ring.betti_k, ideal.ring.dim)
    b1 = ideal.ring.betti_k[1]
    cert = f"beta_2(k) = {lhs} {'==' if lhs == rhs else '!='} C({b1},2) + {b1} - {ideal.ring.dim} = {rhs}"
    verdict = Verdict.HOLDS if lhs == rhs else Verdict.FAILS
    return StructureVerdict("complete_intersection", verdict, cert, {"lhs": lhs, "rhs": rhs})


def gorenstein_verdict(ideal: IdealizationRing) -> StructureVerdict:
    base, m = ideal.base, ideal.zipped
    status = gorenstein_status(base, m)
    values = {"base_cohen_macaulay": base.structure.cohen_macaulay,
              "canonical_asserted": m.canonical_module,
              "base_gorenstein": base.structure.gorenstein}
    if status is None and ideal.ring.structure.complete_intersection:
        return StructureVerdict(
            "gorenstein", Verdict.HOLDS, "R⋉M is a complete intersection (deviation test)", values
        )
    if status is None:
        return StructureVerdict(
            "gorenstein", Verdict.INCONCLUSIVE,
            "R is Cohen-Macaulay but M is not asserted to be its canonical module", values,
        )
    if status:
        if m.canonical_module:
            why = f"R is Cohen-Macaulay and {m.name} is asserted canonical"
        else:
            why = f"R is Gorenstein and {m.name} = R, which is then canonical"
        return StructureVerdict("gorenstein", Verdict.HOLDS, why, values)
    if not ideal.ring.structure.cohen_macaulay:
        why = "R⋉M is not Cohen-Macaulay"
    else:
        why = f"R is Gorenstein and {m.name} is not R, so it is not the canonical module"
    return StructureVerdict("gorenstein", Verdict.FAILS, why, values)


def cm_verdict(ideal: IdealizationRing) -> StructureVerdict:
    r = ideal.ring
    ok = r.depth == r.dim
    cert = (f"depth(R⋉M) = min(depth R, depth M) = min({ideal.base.depth}, {ideal.zipped.depth}) = {r.depth} "
            f"{'==' if ok else '<'} {r.dim} = dim")
    return StructureVerdict(
        "cohen_macaulay", Verdict.HOLDS if ok else Verdict.FAILS, cert, {"depth": r.depth, "dim": r.dim}
    )


def classify(ideal: IdealizationRing) -> list[StructureVerdict]:
    verdicts = [regular_verdict(ideal), hypersurface_verdict(ideal)]
    if ideal.degree >= 2:
        verdicts.append(ci_verdict_eq1(ideal))
    else:
        verdicts.append(StructureVerdict(
            "complete_intersection", Verdict.INCONCLUSIVE, "betti_k known only below degree 2"))
    verdicts += [gorenstein_verdict(ideal), cm_verdict(ideal)]
    return verdicts


@dataclass(frozen=True)
class CIFractionReport:
    numerator: int
    denominator: int
    fraction: Fraction | None
    eq1: StructureVerdict
    discrepancy: bool
    note: str

    def to_dict(self):
        return {
            "numerator": self.numerator,
            "denominator": self.denominator,
            "fraction": None if self.fraction is None else str(self.fraction),
            "fraction_equals_2": self.fraction == 2,
            "deviation_test": self.eq1.to_dict(),
            "discrepancy": self.discrepancy,
            "note": self.note,
        }


def ci_fraction_diagnostic(base: LocalRingModel, m: ModuleModel) -> CIFractionReport:
    """Evaluate the closed-form CI fraction next to the deviation test.

    The fraction is ``(mu(1 - mu) + b1(1 + b1)) / (b1 + beta_2^R(k) + dim R)``
    with ``mu = beta_0(M)``, ``b1 = beta_1(M)``; "fraction == 2" would be a
    CI criterion, but for M = R over a regular ring it gives 0 while R⋉R is
    a CI.  So it is reported alongside the deviation verdict, never trusted.
    """
    mu, b1 = m.betti[0], m.betti[1]
    num = mu * (1 - mu) + b1 * (1 + b1)
    den = b1 + base.betti_k[2] + base.dim
    frac = Fraction(num, den) if den != 0 else None
    eq1 = ci_verdict_eq1(idealize(base, m, 2))
    says_ci = frac == 2
    discrepancy = says_ci != (eq1.verdict is Verdict.HOLDS)
    if frac is None:
        note = "fraction undefined (zero denominator)"
    else:
        note = f"fraction = {frac}"
    if discrepancy:
        note += f"; disagrees with deviation-test verdict '{eq1.verdict.value}' (documented discrepancy)"
    else:
        note += f"; consistent with deviation-test verdict '{eq1.verdict.value}'"
    return CIFractionReport(num, den, frac, eq1, discrepancy, note)
