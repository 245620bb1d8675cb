"""Minor models and their independent verification.

``verify_minor`` deliberately uses nothing but the host's neighbour tuples and
plain Python sets; it shares no code with the engines that build models.
"""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from typing import Mapping, NamedTuple

from ..errors import InputError
from ..graph import Graph


@dataclass
class MinorModel:
    host: Graph
    pattern: Graph
    branch_sets: Mapping[int, frozenset]
    info: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        self.branch_sets = {int(h): frozenset(int(v) for v in W) for h, W in self.branch_sets.items()}

    @property
    def max_branch_size(self) -> int:
        return max((len(W) for W in self.branch_sets.values()), default=0)

    def to_dict(self) -> dict:
        return {
            "pattern_n": self.pattern.n,
            "pattern_edges": [list(e) for e in self.pattern.edges()],
            "branch_sets": {str(h): sorted(self.branch_sets[h]) for h in sorted(self.branch_sets)},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, host: Graph, raw: dict) -> "MinorModel":
        try:
            pattern = Graph(int(raw["pattern_n"]), raw.get("pattern_edges", []))
            sets = {int(h): W for h, W in raw["branch_sets"].items()}
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed model: {exc}") from None
        return cls(host, pattern, sets)

    @classmethod
    def from_json(cls, host: Graph, text: str) -> "MinorModel":
        return cls.from_dict(host, json.loads(text))


class Verdict(NamedTuple):
    valid: bool
    clause: str | None = None
    detail: dict | None = None

    def __bool__(self):
        return self.valid

    def describe(self) -> str:
        if self.valid:
            return "valid minor model"
        return f"invalid ({self.clause}): {json.dumps(self.detail, sort_keys=True)}"


def verify_minor(model: MinorModel) -> Verdict:
    """Check that the branch sets realise ``pattern`` as a minor of ``host``.

    Clauses, checked in order: ``coverage`` (each pattern vertex has a
    non-empty branch set), ``range``, ``disjointness``, ``connectivity`` and
    ``edge``.  The first failure is reported with its witnesses.
    """
    host, pattern, sets = model.host, model.pattern, model.branch_sets
    for h in range(pattern.n):
        if not sets.get(h):
            return Verdict(False, "coverage", {"pattern_vertex": h})
    extra = sorted(set(sets) - set(range(pattern.n)))
    if extra:
        return Verdict(False, "coverage", {"unknown_pattern_vertices": extra})
    owner = {}
    for h in range(pattern.n):
        for v in sets[h]:
            if not 0 <= v < host.n:
                return Verdict(False, "range", {"pattern_vertex": h, "vertex": v})
            if v in owner:
                return Verdict(False, "disjointness", {"vertex": v, "branch_sets": [owner[v], h]})
            owner[v] = h
    for h in range(pattern.n):
        W = sets[h]
        start = min(W)
        seen = {start}
        todo = deque([start])
        while todo:
            u = todo.popleft()
            for w in host.adj(u):
                if w in W and w not in seen:
                    seen.add(w)
                    todo.append(w)
        if len(seen) != len(W):
            return Verdict(False, "connectivity", {"pattern_vertex": h, "unreached": sorted(W - seen)[:10]})
    for a, b in pattern.edges():
        if not any(owner.get(w) == b for v in sets[a] for w in host.adj(v)):
            return Verdict(False, "edge", {"pattern_edge": [a, b]})
    return Verdict(True)


def contract_model(model: MinorModel, pattern: Graph, provenance) -> MinorModel:
    """Merge branch sets of a model of ``H'`` by ``provenance`` into a model of ``pattern``."""
    merged: dict[int, set] = {h: set() for h in range(pattern.n)}
    for x, W in model.branch_sets.items():
        merged[int(provenance[x])].update(W)
    return MinorModel(model.host, pattern, merged)
