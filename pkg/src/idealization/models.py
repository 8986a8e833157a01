"""Local rings and modules described by numerical invariants and Betti data.

Rings are treated as complete local rings.  Structure flags are tri-state:
``True`` / ``False`` when known, ``None`` when the supplied data cannot
decide them.
"""

from __future__ import annotations

from dataclasses import dataclass, field, fields, replace
from math import comb
from typing import Sequence

from .errors import TruncationError, ValidationError
from .series import BettiSeries, divide, polynomial

FLAG_NAMES = ("regular", "hypersurface", "complete_intersection", "gorenstein", "cohen_macaulay")


@dataclass(frozen=True)
class Structure:
    regular: bool | None = None
    hypersurface: bool | None = None
    complete_intersection: bool | None = None
    gorenstein: bool | None = None
    cohen_macaulay: bool | None = None

    def as_dict(self):
        return {f.name: getattr(self, f.name) for f in fields(self)}

    def closed(self) -> "Structure":
        """Propagate regular => hypersurface => CI => Gorenstein => CM both ways.

        Raises ValidationError when a known-true flag implies a known-false one.
        """
        values = [getattr(self, n) for n in FLAG_NAMES]
        for i, v in enumerate(values):
            if v is True:
                for j in range(i + 1, len(values)):
                    if values[j] is False:
                        raise ValidationError(
                            f"structure flags inconsistent: {FLAG_NAMES[i]} is true but {FLAG_NAMES[j]} is false"
                        )
                    values[j] = True
        for i in range(len(values) - 1, -1, -1):
            if values[i] is False:
                for j in range(i):
                    values[j] = False
        return Structure(*values)


def binomial_series(d: int, D: int) -> BettiSeries:
    """``(1 + t)^d`` truncated at D."""
    return polynomial([comb(d, i) for i in range(d + 1)], D, cls=BettiSeries)


def _as_betti(data) -> BettiSeries:
    if isinstance(data, BettiSeries):
        return data
    try:
        return BettiSeries(tuple(data))
    except (TypeError, ValueError) as exc:
        raise ValidationError(f"invalid Betti data: {exc}") from None


@dataclass(frozen=True)
class LocalRingModel:
    name: str
    dim: int
    depth: int
    edim: int
    betti_k: BettiSeries
    structure: Structure = field(default_factory=Structure)
    # documentation only; the theory used here is characteristic zero
    characteristic: int = 0

    def __post_init__(self):
        object.__setattr__(self, "betti_k", _as_betti(self.betti_k))
        for attr in ("dim", "depth", "edim"):
            v = getattr(self, attr)
            if isinstance(v, bool) or not isinstance(v, int) or v < 0:
                raise ValidationError(f"{self.name}: {attr} must be a natural number, got {v!r}")
        if self.depth > self.dim:
            raise ValidationError(f"{self.name}: depth <= dim violated ({self.depth} > {self.dim})")
        if self.dim > self.edim:
            raise ValidationError(f"{self.name}: edim >= dim violated ({self.edim} < {self.dim})")
        b = self.betti_k
        if b[0] != 1:
            raise ValidationError(f"{self.name}: betti_k[0] = 1 violated (got {b[0]})")
        if b.degree >= 1 and b[1] != self.edim:
            raise ValidationError(f"{self.name}: betti_k[1] = edim violated ({b[1]} != {self.edim})")
        s = self.structure.closed()
        cm = self.depth == self.dim
        if s.cohen_macaulay is not None and s.cohen_macaulay != cm:
            raise ValidationError(
                f"{self.name}: cohen_macaulay <=> depth = dim violated "
                f"(flag {s.cohen_macaulay}, depth {self.depth}, dim {self.dim})"
            )
        regular = self.edim == self.dim
        if s.regular is not None and s.regular != regular:
            raise ValidationError(
                f"{self.name}: regular <=> edim = dim violated (flag {s.regular}, edim {self.edim}, dim {self.dim})"
            )
        if regular and b != binomial_series(self.dim, b.degree):
            raise ValidationError(f"{self.name}: regular ring must have betti_k = (1+t)^{self.dim}, got {b.coeffs}")
        object.__setattr__(self, "structure", s)

    @property
    def degree(self) -> int:
        return self.betti_k.degree

    def to_dict(self):
        return {
            "name": self.name,
            "dim": self.dim,
            "depth": self.depth,
            "edim": self.edim,
            "betti_k": list(self.betti_k.coeffs),
            "structure": self.structure.as_dict(),
            "characteristic": self.characteristic,
        }


@dataclass(frozen=True)
class ModuleModel:
    name: str
    over: str
    betti: BettiSeries
    depth: int
    free_of_rank: int | None = None
    canonical_module: bool = False
    finite_length: bool = False
    finite_pd: bool = False

    def __post_init__(self):
        object.__setattr__(self, "betti", _as_betti(self.betti))
        if self.betti[0] < 1:
            raise ValidationError(f"{self.name}: module must be nonzero (betti[0] >= 1, got {self.betti[0]})")
        if isinstance(self.depth, bool) or not isinstance(self.depth, int) or self.depth < 0:
            raise ValidationError(f"{self.name}: depth must be a natural number, got {self.depth!r}")
        r = self.free_of_rank
        if r is not None:
            expected = polynomial([r], self.betti.degree, cls=BettiSeries)
            if r < 1 or self.betti != expected:
                raise ValidationError(f"{self.name}: free_of_rank={r} requires betti = ({r}, 0, 0, ...)")

    @property
    def cyclic(self) -> bool:
        return self.betti[0] == 1

    @property
    def degree(self) -> int:
        return self.betti.degree

    def to_dict(self):
        return {
            "name": self.name,
            "over": self.over,
            "betti": list(self.betti.coeffs),
            "depth": self.depth,
            "free_of_rank": self.free_of_rank,
            "cyclic": self.cyclic,
            "canonical_module": self.canonical_module,
            "finite_length": self.finite_length,
            "finite_pd": self.finite_pd,
        }


def check_module_over(m: ModuleModel, ring: LocalRingModel) -> ModuleModel:
    """Invariants of ``m`` that need the ring it lives over."""
    if m.over != ring.name:
        raise ValidationError(f"{m.name}: declared over {m.over!r}, checked against {ring.name!r}")
    if m.depth > ring.dim:
        raise ValidationError(f"{m.name}: depth <= dim of {ring.name} violated ({m.depth} > {ring.dim})")
    if m.free_of_rank is not None and m.depth != ring.depth:
        raise ValidationError(f"{m.name}: a free module has depth {ring.depth}, got {m.depth}")
    if m.canonical_module:
        if ring.structure.cohen_macaulay and m.depth != ring.dim:
            raise ValidationError(f"{m.name}: canonical module must be maximal Cohen-Macaulay (depth {ring.dim})")
        if ring.structure.gorenstein and (m.betti[0] != 1 or (m.degree >= 1 and m.betti[1] != 0)):
            raise ValidationError(f"{m.name}: over a Gorenstein ring the canonical module is the ring itself")
    return m


# -- ring catalog ------------------------------------------------------------

def regular_ring(d: int, D: int, name: str | None = None) -> LocalRingModel:
    return LocalRingModel(
        name=name or f"regular({d})",
        dim=d, depth=d, edim=d,
        betti_k=binomial_series(d, D),
        structure=Structure(regular=True),
    )


def hypersurface_ring(e: int, D: int, name: str | None = None) -> LocalRingModel:
    if e < 1:
        raise ValidationError(f"hypersurface needs edim e >= 1, got {e}")
    betti = divide(binomial_series(e, D), polynomial([1, 0, -1], D), D)
    return LocalRingModel(
        name=name or f"hypersurface({e})",
        dim=e - 1, depth=e - 1, edim=e,
        betti_k=betti,
        structure=Structure(regular=False, hypersurface=True),
    )


def complete_intersection_ring(e: int, c: int, D: int, name: str | None = None) -> LocalRingModel:
    """Poincare series of k is ``(1 + t)^e / (1 - t^2)^c``."""
    if c < 0 or c > e:
        raise ValidationError(f"complete intersection needs 0 <= c <= e, got e={e}, c={c}")
    betti = binomial_series(e, D)
    # (1 - t^2)^c has positive coefficients for c >= 2, so divide one factor at a time
    for _ in range(c):
        betti = divide(betti, polynomial([1, 0, -1], D), D)
    return LocalRingModel(
        name=name or f"ci({e},{c})",
        dim=e - c, depth=e - c, edim=e,
        betti_k=BettiSeries(betti.coeffs),
        structure=Structure(regular=c == 0, hypersurface=c <= 1, complete_intersection=True),
    )


def explicit_ring(
    dim: int,
    depth: int,
    edim: int,
    betti_k: Sequence[int],
    name: str = "R",
    hypersurface: bool | None = None,
    complete_intersection: bool | None = None,
    gorenstein: bool | None = None,
    characteristic: int = 0,
) -> LocalRingModel:
    """A ring given by raw invariants.

    CM-ness and regularity follow from (dim, depth, edim); so does
    hypersurface-ness for CM rings (edim - depth <= 1).  CI and Gorenstein
    stay unknown unless asserted or forced by the other flags.
    """
    if not (isinstance(depth, int) and isinstance(dim, int) and isinstance(edim, int)):
        raise ValidationError("dim, depth, edim must be integers")
    cm = depth == dim
    forced_hyp = (edim - depth <= 1) if cm else False
    if hypersurface is not None and hypersurface != forced_hyp:
        raise ValidationError(
            f"{name}: hypersurface <=> (Cohen-Macaulay and edim - depth <= 1) violated by assertion {hypersurface}"
        )
    structure = Structure(
        regular=edim == dim,
        hypersurface=forced_hyp,
        complete_intersection=complete_intersection,
        gorenstein=gorenstein,
        cohen_macaulay=cm,
    )
    return LocalRingModel(name, dim, depth, edim, _as_betti(betti_k), structure, characteristic)


# -- module catalog ----------------------------------------------------------

def free_module(
    r: int, over: LocalRingModel, D: int, name: str | None = None,
    canonical: bool = False, finite_length: bool = False, finite_pd: bool = False,
) -> ModuleModel:
    if not isinstance(r, int) or r < 1:
        raise ValidationError(f"free module rank must be >= 1, got {r!r}")
    m = ModuleModel(
        name=name or (over.name if r == 1 else f"{over.name}^{r}"),
        over=over.name,
        betti=polynomial([r], D, cls=BettiSeries),
        depth=over.depth,
        free_of_rank=r,
        canonical_module=canonical,
        finite_length=finite_length,
        finite_pd=finite_pd,
    )
    return check_module_over(m, over)


def residue_field(
    over: LocalRingModel, D: int | None = None, name: str = "k",
    finite_length: bool = False, finite_pd: bool = False,
) -> ModuleModel:
    betti = over.betti_k if D is None else over.betti_k.truncate(D)
    m = ModuleModel(
        name=name, over=over.name, betti=betti, depth=0,
        finite_length=finite_length, finite_pd=finite_pd,
    )
    return check_module_over(m, over)


def explicit_module(
    betti: Sequence[int], depth: int, over: LocalRingModel, name: str = "N",
    free_of_rank: int | None = None, canonical: bool = False,
    finite_length: bool = False, finite_pd: bool = False,
) -> ModuleModel:
    m = ModuleModel(
        name=name, over=over.name, betti=_as_betti(betti), depth=depth,
        free_of_rank=free_of_rank, canonical_module=canonical,
        finite_length=finite_length, finite_pd=finite_pd,
    )
    return check_module_over(m, over)


def with_structure(ring: LocalRingModel, **flags) -> LocalRingModel:
    return replace(ring, structure=replace(ring.structure, **flags))


def deviation_ci_sides(betti_k: BettiSeries, dim: int) -> tuple[int, int]:
    """Both sides of the complete-intersection test on the residue field.

    A local ring is CI iff ``beta_2(k) == C(beta_1(k), 2) + beta_1(k) - dim``.
    """
    if betti_k.degree < 2:
        raise TruncationError(f"CI test needs betti_k to degree 2, known to degree {betti_k.degree}")
    b1, b2 = betti_k[1], betti_k[2]
    return b2, comb(b1, 2) + b1 - dim
