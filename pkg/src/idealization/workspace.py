"""Loading JSON workspace documents into models.

Schema (all top-level keys optional except ``rings``)::

    {
      "schema_version": 1,
      "truncation_degree": 24,
      "rings": {
        "R": {"kind": "regular", "dim": 1},
        "H": {"kind": "hypersurface", "edim": 3},
        "C": {"kind": "complete_intersection", "edim": 3, "codim": 2},
        "E": {"kind": "explicit", "dim": 1, "depth": 0, "edim": 2, "betti_k": [1, 2, 4],
              "assert": {"gorenstein": false}},
        ...  every ring may carry "satisfies": ["beh", "total_rank"]
      },
      "modules": {
        "k": {"kind": "residue_field", "over": "R"},
        "F": {"kind": "free", "rank": 1, "over": "R"},
        "w": {"kind": "explicit", "over": "R", "betti": [1, 0], "depth": 1},
        ...  every module may carry "flags": {"canonical", "finite_length", "finite_pd"}
      },
      "idealizations": {"Rk": {"base": "R", "module": "k"}}
    }

Rings and idealizations share one namespace: an idealization can be the
base of another idealization or the ring a module is declared over.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .config import DEFAULT
from .errors import IdealizationError, ValidationError
from .idealize import IdealizationRing, idealize
from .models import (
    LocalRingModel,
    ModuleModel,
    complete_intersection_ring,
    explicit_module,
    explicit_ring,
    free_module,
    hypersurface_ring,
    regular_ring,
    residue_field,
)


class WorkspaceError(IdealizationError):
    pass


class ParseError(WorkspaceError):
    pass


class UnresolvedReferenceError(WorkspaceError):
    pass


RING_KINDS = ("regular", "hypersurface", "complete_intersection", "explicit")
MODULE_KINDS = ("free", "residue_field", "explicit")
MODULE_FLAGS = ("canonical", "finite_length", "finite_pd")
ASSUMPTIONS = ("beh", "total_rank")


@dataclass
class Workspace:
    truncation_degree: int
    rings: dict[str, LocalRingModel] = field(default_factory=dict)
    modules: dict[str, ModuleModel] = field(default_factory=dict)
    idealizations: dict[str, IdealizationRing] = field(default_factory=dict)
    satisfies: dict[str, frozenset] = field(default_factory=dict)

    def ring(self, name: str) -> LocalRingModel:
        if name in self.rings:
            return self.rings[name]
        if name in self.idealizations:
            return self.idealizations[name].ring
        raise UnresolvedReferenceError(f"unknown ring {name!r}")

    def module(self, name: str) -> ModuleModel:
        try:
            return self.modules[name]
        except KeyError:
            raise UnresolvedReferenceError(f"unknown module {name!r}") from None

    def idealization(self, name: str) -> IdealizationRing:
        try:
            return self.idealizations[name]
        except KeyError:
            raise UnresolvedReferenceError(f"unknown idealization {name!r}") from None


def _no_duplicates(pairs):
    out = {}
    for k, v in pairs:
        if k in out:
            raise ParseError(f"duplicate name {k!r}")
        out[k] = v
    return out


def _nat(desc: dict, key: str, where: str, default=None) -> int:
    v = desc.get(key, default)
    if isinstance(v, bool) or not isinstance(v, int) or v < 0:
        raise ValidationError(f"{where}: {key!r} must be a natural number, got {v!r}")
    return v


def _int_list(desc: dict, key: str, where: str, D: int) -> list[int]:
    v = desc.get(key)
    if not isinstance(v, list) or not v or not all(isinstance(x, int) and not isinstance(x, bool) for x in v):
        raise ValidationError(f"{where}: {key!r} must be a nonempty list of integers")
    return v[: D + 1]


class _Loader:
    def __init__(self, doc: dict, D: int):
        self.doc = doc
        self.D = D
        self.ws = Workspace(truncation_degree=D)
        self.ring_desc = doc.get("rings", {})
        self.mod_desc = doc.get("modules", {})
        self.ideal_desc = doc.get("idealizations", {})
        for section in ("rings", "modules", "idealizations"):
            if not isinstance(doc.get(section, {}), dict):
                raise ParseError(f"{section!r} must be an object")
        clash = set(self.ring_desc) & set(self.ideal_desc)
        if clash:
            raise ValidationError(f"names used for both a ring and an idealization: {sorted(clash)}")
        self._visiting: set[str] = set()

    def load(self) -> Workspace:
        for name in self.ring_desc:
            self.ring(name)
        for name in self.ideal_desc:
            self.ideal(name)
        for name in self.mod_desc:
            self.module(name)
        return self.ws

    def ring(self, name: str) -> LocalRingModel:
        if name in self.ws.rings:
            return self.ws.rings[name]
        if name in self.ideal_desc:
            return self.ideal(name).ring
        if name not in self.ring_desc:
            raise UnresolvedReferenceError(f"unresolved ring name {name!r}")
        desc = self.ring_desc[name]
        where = f"ring {name!r}"
        if not isinstance(desc, dict):
            raise ParseError(f"{where} must be an object")
        kind = desc.get("kind")
        D = self.D
        if kind == "regular":
            ring = regular_ring(_nat(desc, "dim", where), D, name=name)
        elif kind == "hypersurface":
            ring = hypersurface_ring(_nat(desc, "edim", where), D, name=name)
        elif kind == "complete_intersection":
            ring = complete_intersection_ring(_nat(desc, "edim", where), _nat(desc, "codim", where), D, name=name)
        elif kind == "explicit":
            asserted = desc.get("assert", {})
            bad = set(asserted) - {"hypersurface", "complete_intersection", "gorenstein"}
            if bad:
                raise ValidationError(f"{where}: unknown assertions {sorted(bad)}")
            ring = explicit_ring(
                _nat(desc, "dim", where), _nat(desc, "depth", where), _nat(desc, "edim", where),
                _int_list(desc, "betti_k", where, D), name=name,
                characteristic=_nat(desc, "characteristic", where, 0), **asserted,
            )
        else:
            raise ValidationError(f"{where}: kind must be one of {RING_KINDS}, got {kind!r}")
        sat = desc.get("satisfies", [])
        if not isinstance(sat, list) or set(sat) - set(ASSUMPTIONS):
            raise ValidationError(f"{where}: 'satisfies' must be a list drawn from {ASSUMPTIONS}")
        self.ws.rings[name] = ring
        self.ws.satisfies[name] = frozenset(sat)
        return ring

    def ideal(self, name: str) -> IdealizationRing:
        if name in self.ws.idealizations:
            return self.ws.idealizations[name]
        if name in self._visiting:
            raise ValidationError(f"idealization {name!r} depends on itself")
        desc = self.ideal_desc[name]
        where = f"idealization {name!r}"
        if not isinstance(desc, dict) or "base" not in desc or "module" not in desc:
            raise ParseError(f"{where} needs 'base' and 'module'")
        self._visiting.add(name)
        try:
            base = self.ring(desc["base"])
            m = self.module(desc["module"])
        finally:
            self._visiting.discard(name)
        if m.over != base.name:
            raise ValidationError(f"{where}: module {m.name!r} is over {m.over!r}, not {base.name!r}")
        D = min(self.D, base.degree, m.degree + 1)
        ideal = idealize(base, m, D, name=name)
        self.ws.idealizations[name] = ideal
        self.ws.satisfies[name] = frozenset()
        return ideal

    def module(self, name: str) -> ModuleModel:
        if name in self.ws.modules:
            return self.ws.modules[name]
        if name not in self.mod_desc:
            raise UnresolvedReferenceError(f"unresolved module name {name!r}")
        desc = self.mod_desc[name]
        where = f"module {name!r}"
        if not isinstance(desc, dict):
            raise ParseError(f"{where} must be an object")
        if "over" not in desc:
            raise ValidationError(f"{where}: missing 'over'")
        over_name = desc["over"]
        if over_name not in self.ring_desc and over_name not in self.ideal_desc:
            raise UnresolvedReferenceError(f"{where}: unresolved ring name {over_name!r}")
        over = self.ring(over_name)
        flags = desc.get("flags", {})
        if not isinstance(flags, dict) or set(flags) - set(MODULE_FLAGS):
            raise ValidationError(f"{where}: flags must be an object with keys from {MODULE_FLAGS}")
        if not all(isinstance(v, bool) for v in flags.values()):
            raise ValidationError(f"{where}: flag values must be booleans")
        kind = desc.get("kind")
        D = min(self.D, over.degree)
        common = dict(name=name, finite_length=flags.get("finite_length", False),
                      finite_pd=flags.get("finite_pd", False))
        if kind == "free":
            m = free_module(_nat(desc, "rank", where, 1), over, self.D,
                            canonical=flags.get("canonical", False), **common)
        elif kind == "residue_field":
            if flags.get("canonical"):
                raise ValidationError(f"{where}: the residue field cannot be flagged canonical here")
            m = residue_field(over, D, **common)
        elif kind == "explicit":
            m = explicit_module(
                _int_list(desc, "betti", where, self.D), _nat(desc, "depth", where), over,
                canonical=flags.get("canonical", False), **common,
            )
        else:
            raise ValidationError(f"{where}: kind must be one of {MODULE_KINDS}, got {kind!r}")
        self.ws.modules[name] = m
        return m


def load_workspace(doc: dict, degree: int | None = None) -> Workspace:
    if not isinstance(doc, dict):
        raise ParseError("workspace document must be a JSON object")
    D = degree if degree is not None else doc.get("truncation_degree", DEFAULT.default_degree)
    if isinstance(D, bool) or not isinstance(D, int) or D < 0:
        raise ValidationError(f"truncation_degree must be a natural number, got {D!r}")
    return _Loader(doc, D).load()


def parse_workspace(path, degree: int | None = None) -> Workspace:
    text = Path(path).read_text(encoding="utf-8")
    try:
        doc = json.loads(text, object_pairs_hook=_no_duplicates)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return load_workspace(doc, degree)
