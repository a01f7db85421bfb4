"""Classify a labeled graph: set-indexer, weak, strong, uniform, and the
divisor-class component structure of strongly uniform labelings.

All flags are computed independently and reported even when the assignment
fails injectivity, with violations carrying the witnessing vertices or
edges, so a bad labeling explains itself.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .graphs import Graph, Edge, connected_components, is_clique
from .setlabel import SetLabel, difference_set, sumset


class LabelingError(ValueError):
    """Raised when a labeling does not cover its graph's vertex set."""


class Labeling:
    """Total assignment of a SetLabel to every vertex id of some graph."""

    __slots__ = ("assignment",)

    def __init__(self, assignment: Mapping[int, SetLabel]):
        object.__setattr__(
            self, "assignment", dict(sorted(assignment.items()))
        )

    def __setattr__(self, name, value):
        raise AttributeError("Labeling is immutable")

    def __getitem__(self, v: int) -> SetLabel:
        return self.assignment[v]

    def __len__(self) -> int:
        return len(self.assignment)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Labeling):
            return NotImplemented
        return self.assignment == other.assignment

    def __repr__(self) -> str:
        return f"Labeling({self.assignment!r})"

    def vertices(self) -> list[int]:
        return list(self.assignment)

    def restricted_to(self, vertices: Iterable[int]) -> "Labeling":
        keep = set(vertices)
        return Labeling({v: a for v, a in self.assignment.items() if v in keep})

    def to_json(self) -> str:
        return json.dumps(
            {str(v): list(a.elements) for v, a in self.assignment.items()}
        )

    @classmethod
    def from_json(cls, text: str) -> "Labeling":
        try:
            raw = json.loads(text)
        except json.JSONDecodeError as exc:
            raise LabelingError(f"labeling is not valid JSON: {exc}") from None
        if not isinstance(raw, dict):
            raise LabelingError("labeling JSON must be an object")
        assignment = {}
        for key, arr in raw.items():
            try:
                v = int(key)
            except ValueError:
                raise LabelingError(f"vertex key {key!r} is not an integer") from None
            if v < 0:
                raise LabelingError(f"negative vertex id {v}")
            if not isinstance(arr, list) or not all(isinstance(e, int) for e in arr):
                raise LabelingError(f"label for vertex {v} must be an integer array")
            if arr != sorted(set(arr)):
                raise LabelingError(f"label for vertex {v} must be strictly ascending")
            assignment[v] = SetLabel(arr)
        return cls(assignment)


@dataclass(frozen=True)
class Violation:
    """One structured finding explaining a False classification flag."""

    kind: str
    message: str
    witness: tuple

    def as_dict(self) -> dict:
        return {"kind": self.kind, "message": self.message, "witness": list(self.witness)}


@dataclass(frozen=True)
class VerificationReport:
    is_iasi: bool
    is_weak: bool
    is_strong: bool
    uniform_k: int | None
    vertex_uniform_l: int | None
    completely_uniform: bool
    edge_sizes: dict[Edge, int]
    violations: list[Violation] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "is_iasi": self.is_iasi,
            "is_weak": self.is_weak,
            "is_strong": self.is_strong,
            "uniform_k": self.uniform_k,
            "vertex_uniform_l": self.vertex_uniform_l,
            "completely_uniform": self.completely_uniform,
            "edge_sizes": {f"{u}-{v}": s for (u, v), s in self.edge_sizes.items()},
            "violations": [viol.as_dict() for viol in self.violations],
        }


def _require_total(g: Graph, f: Labeling) -> None:
    missing = [v for v in g.vertices() if v not in f.assignment]
    if missing:
        raise LabelingError(f"labeling missing vertices {missing}")
    extra = [v for v in f.assignment if not (0 <= v < g.vertex_count)]
    if extra:
        raise LabelingError(f"labeling references unknown vertices {extra}")


def verify(g: Graph, f: Labeling) -> VerificationReport:
    """Full classification of the labeled graph.

    Edge labels are induced sumsets; injectivity of the edge map is set
    equality of those sumsets, not mere size equality.  Edges are processed
    in sorted order so the violation list is deterministic.
    """
    _require_total(g, f)
    violations: list[Violation] = []

    seen_labels: dict[SetLabel, int] = {}
    for v in g.vertices():
        a = f[v]
        if a in seen_labels:
            violations.append(
                Violation(
                    "duplicate-vertex-labels",
                    f"vertices {seen_labels[a]} and {v} share the label {a}",
                    (seen_labels[a], v),
                )
            )
        else:
            seen_labels[a] = v

    edge_sizes: dict[Edge, int] = {}
    edge_labels: dict[SetLabel, Edge] = {}
    weak_ok = True
    strong_ok = True
    for u, v in g.edges:
        lab = sumset(f[u], f[v])
        edge_sizes[(u, v)] = len(lab)
        if lab in edge_labels:
            pu, pv = edge_labels[lab]
            violations.append(
                Violation(
                    "duplicate-edge-labels",
                    f"edges {pu}-{pv} and {u}-{v} share the induced label {lab}",
                    (pu, pv, u, v),
                )
            )
        else:
            edge_labels[lab] = (u, v)
        if len(lab) != max(len(f[u]), len(f[v])):
            weak_ok = False
            violations.append(
                Violation(
                    "weak-equality",
                    f"edge {u}-{v}: |label| = {len(lab)} != max({len(f[u])},{len(f[v])})",
                    (u, v),
                )
            )
        if len(lab) != len(f[u]) * len(f[v]):
            strong_ok = False
            violations.append(
                Violation(
                    "strong-equality",
                    f"edge {u}-{v}: |label| = {len(lab)} != {len(f[u])}*{len(f[v])}",
                    (u, v),
                )
            )

    is_iasi = not any(
        viol.kind in ("duplicate-vertex-labels", "duplicate-edge-labels")
        for viol in violations
    )
    ks = set(edge_sizes.values())
    uniform_k = ks.pop() if len(ks) == 1 else None
    ls = {len(f[v]) for v in g.vertices()}
    vertex_uniform_l = ls.pop() if len(ls) == 1 else None
    return VerificationReport(
        is_iasi=is_iasi,
        is_weak=weak_ok,
        is_strong=strong_ok,
        uniform_k=uniform_k,
        vertex_uniform_l=vertex_uniform_l,
        completely_uniform=uniform_k is not None and vertex_uniform_l is not None,
        edge_sizes=edge_sizes,
        violations=violations,
    )


def check_weak_characterization(g: Graph, f: Labeling) -> bool:
    """True iff every edge has an endpoint labeled by a singleton.

    Agrees with the is_weak flag whenever the labeling is a set-indexer.
    """
    _require_total(g, f)
    return all(len(f[u]) == 1 or len(f[v]) == 1 for u, v in g.edges)


def check_strong_criterion(g: Graph, f: Labeling) -> bool:
    """True iff adjacent labels always have disjoint difference sets.

    Equivalent to every edge label reaching the maximal size
    |f(u)|*|f(v)|, but decided without computing any sumset.
    """
    _require_total(g, f)
    diffs = {v: difference_set(f[v]) for v in g.vertices()}
    return all(diffs[u].isdisjoint(diffs[v]) for u, v in g.edges)


def divisors_of(k: int) -> list[int]:
    """Ascending divisors of k >= 1, by trial division up to sqrt(k)."""
    if k < 1:
        raise ValueError("k must be positive")
    small, large = [], []
    d = 1
    while d * d <= k:
        if k % d == 0:
            small.append(d)
            if d * d != k:
                large.append(k // d)
        d += 1
    return small + large[::-1]


@dataclass(frozen=True)
class ComponentReport:
    """Divisor-class view of one connected component."""

    vertices: tuple[int, ...]
    kind: str  # "bipartite-pair" or "square-class"
    sizes: tuple[int, ...]  # the vertex set-indexing numbers present
    clique: bool

    def as_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "kind": self.kind,
            "sizes": list(self.sizes),
            "clique": self.clique,
        }


@dataclass(frozen=True)
class PartitionReport:
    """Divisor classes and component structure of a strongly k-uniform labeling."""

    k: int
    k_is_square: bool
    divisor_count: int
    classes: dict[int, tuple[int, ...]]  # divisor -> vertices with that label size
    components: list[ComponentReport]
    bipartite_component_count: int
    square_component_count: int
    bipartite_bound: int
    total_bound: int | None  # only bounded for square k
    bipartite_bound_satisfied: bool
    total_bound_satisfied: bool
    clique_component_present: bool

    def as_dict(self) -> dict:
        return {
            "k": self.k,
            "k_is_square": self.k_is_square,
            "divisor_count": self.divisor_count,
            "classes": {str(d): list(vs) for d, vs in self.classes.items()},
            "components": [c.as_dict() for c in self.components],
            "bipartite_component_count": self.bipartite_component_count,
            "square_component_count": self.square_component_count,
            "bipartite_bound": self.bipartite_bound,
            "total_bound": self.total_bound,
            "bipartite_bound_satisfied": self.bipartite_bound_satisfied,
            "total_bound_satisfied": self.total_bound_satisfied,
            "clique_component_present": self.clique_component_present,
        }


def analyze_divisor_partition(g: Graph, f: Labeling, k: int) -> PartitionReport:
    """Partition the vertices of a strongly k-uniform labeling by label size.

    Every vertex size divides k (the edge size is the product of its
    endpoint sizes), so each connected component either pairs two divisor
    classes d and k/d across a bipartition, or, when k is a perfect square,
    consists entirely of vertices of size sqrt(k).  Component counts are
    compared against the bounds implied by the number of divisors of k:
    for non-square k at most n/2 bipartite components; for square k at most
    (n+1)/2 components of which at most (n-1)/2 are bipartite pairs.
    """
    report = verify(g, f)
    if not report.is_strong or report.uniform_k != k:
        raise ValueError(
            f"labeling is not strongly {k}-uniform "
            f"(is_strong={report.is_strong}, uniform_k={report.uniform_k})"
        )

    root = math.isqrt(k)
    k_is_square = root * root == k
    divs = divisors_of(k)
    n_div = len(divs)

    classes: dict[int, list[int]] = {}
    for v in g.vertices():
        classes.setdefault(len(f[v]), []).append(v)
    for size in classes:
        if k % size != 0:
            raise ValueError(f"vertex size {size} does not divide k={k}")

    comps = []
    bip_count = 0
    sq_count = 0
    clique_present = False
    for comp in connected_components(g):
        vs = tuple(sorted(comp))
        sizes = tuple(sorted({len(f[v]) for v in vs}))
        if len(sizes) == 1 and k_is_square and sizes[0] == root:
            kind = "square-class"
            sq_count += 1
        else:
            kind = "bipartite-pair"
            bip_count += 1
        # K_2 components are complete but bipartite; the clique flag marks
        # complete components that cannot be bipartite (>= 3 vertices)
        clique = len(vs) >= 3 and is_clique(g, vs)
        clique_present = clique_present or clique
        comps.append(ComponentReport(vs, kind, sizes, clique))

    if k_is_square:
        bip_bound = (n_div - 1) // 2
        total_bound = (n_div + 1) // 2
        total_ok = len(comps) <= total_bound
    else:
        bip_bound = n_div // 2
        total_bound = None
        total_ok = True
    return PartitionReport(
        k=k,
        k_is_square=k_is_square,
        divisor_count=n_div,
        classes={d: tuple(sorted(classes[d])) for d in divs if d in classes},
        components=comps,
        bipartite_component_count=bip_count,
        square_component_count=sq_count,
        bipartite_bound=bip_bound,
        total_bound=total_bound,
        bipartite_bound_satisfied=bip_count <= bip_bound,
        total_bound_satisfied=total_ok,
        clique_component_present=clique_present,
    )
