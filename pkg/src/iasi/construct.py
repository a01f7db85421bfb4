"""Constructors that realize the existence theorems.

Three label families are produced here:

* strongly k-uniform labelings of bipartite graphs, interval labels on one
  side against arithmetic progressions on the other;
* strong, completely uniform labelings of complete graphs, built from
  exponentially separated bands with Sidon-sequence offsets;
* weakly k-uniform labelings of bipartite graphs, singletons against
  k-element intervals.

All constructors are deterministic: identical inputs give identical labels.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, Bipartition, is_valid_bipartition
from .setlabel import SetLabel, difference_set, sumset
from .verify import Labeling, verify


class ConstructionError(ValueError):
    """Raised when a constructor's preconditions fail."""


class ReductionError(ValueError):
    """Raised when a degree-2 reduction is undefined or breaks strength."""

    def __init__(self, message: str, shared_differences: tuple[int, ...] = ()):
        super().__init__(message)
        self.shared_differences = shared_differences


@dataclass(frozen=True)
class FactorPair:
    m: int
    n: int

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ConstructionError("factors must be positive")


@dataclass(frozen=True)
class ConstructionParams:
    """Inputs for the bipartite construction: target edge size k, an
    optional factorization k = m*n, and an optional stride override."""

    k: int
    factors: FactorPair | None = None
    stride: int | None = None

    def __post_init__(self):
        if self.k < 1:
            raise ConstructionError("k must be positive")
        if self.factors is not None and self.factors.m * self.factors.n != self.k:
            raise ConstructionError(
                f"factors {self.factors.m}*{self.factors.n} != k={self.k}"
            )
        if self.stride is not None and self.stride < 1:
            raise ConstructionError("stride must be positive")


def default_factor_pair(k: int) -> FactorPair:
    """Smallest divisor m <= sqrt(k), paired with n = k/m."""
    if k < 1:
        raise ConstructionError("k must be positive")
    best = 1
    d = 2
    while d * d <= k:
        if k % d == 0:
            best = d
            break
        d += 1
    return FactorPair(best, k // best)


def _check_bipartition(g: Graph, bp: Bipartition) -> None:
    if not is_valid_bipartition(g, bp):
        raise ConstructionError("bipartition is not valid for the graph")


def construct_bipartite_strong(
    g: Graph, bp: Bipartition, params: ConstructionParams
) -> Labeling:
    """Strongly k-uniform labeling of a bipartite graph, any k >= 1.

    With k = m*n, the x-th vertex of side_x gets the m consecutive integers
    starting at x*S, and the y-th vertex of side_y gets the n-term
    progression {y, y+m, ..., y+(n-1)m}.  Differences on the two sides
    (below m versus multiples of m) never collide, so every edge label has
    the full size m*n, and the stride S keeps all vertex labels and all
    edge labels pairwise distinct.
    """
    _check_bipartition(g, bp)
    pair = params.factors or default_factor_pair(params.k)
    m, n = pair.m, pair.n
    ys = sorted(bp.side_y)
    stride = params.stride if params.stride is not None else m + n * m * len(ys)
    # m = n = 1 makes the x=0 and y=0 labels both {0}; shifting the
    # singleton side one stride up restores injectivity.
    base = stride if m == 1 and n == 1 else 0
    assignment: dict[int, SetLabel] = {}
    for x, u in enumerate(sorted(bp.side_x)):
        assignment[u] = SetLabel(base + x * stride + t for t in range(m))
    for y, v in enumerate(ys):
        assignment[v] = SetLabel(y + s * m for s in range(n))
    return Labeling(assignment)


def construct_weak_uniform(g: Graph, bp: Bipartition, k: int) -> Labeling:
    """Weakly k-uniform labeling: singletons on side_x, k-element intervals
    on side_y, spaced so vertex and edge labels stay distinct."""
    if k < 1:
        raise ConstructionError("k must be positive")
    _check_bipartition(g, bp)
    ys = sorted(bp.side_y)
    stride = k * (len(ys) + 1)
    base = stride if k == 1 else 0  # same degenerate collision as m = n = 1
    assignment: dict[int, SetLabel] = {}
    for x, u in enumerate(sorted(bp.side_x)):
        assignment[u] = SetLabel([base + x * stride])
    for y, v in enumerate(ys):
        assignment[v] = SetLabel(y * k + t for t in range(k))
    return Labeling(assignment)


def mian_chowla(count: int) -> list[int]:
    """First terms of the greedy Sidon sequence 1, 2, 4, 8, 13, 21, ...

    All pairwise sums (including doubled terms) are distinct, which keeps
    the minima of the constructed edge labels distinct.
    """
    terms: list[int] = []
    pair_sums: set[int] = set()
    candidate = 1
    while len(terms) < count:
        new_sums = {candidate + t for t in terms} | {2 * candidate}
        if not (new_sums & pair_sums):
            terms.append(candidate)
            pair_sums |= new_sums
        candidate += 1
    return terms


def construct_complete_strong(num_vertices: int, l: int) -> Labeling:
    """Strong (l*l, l)-completely uniform labeling of K_n.

    Vertex i gets l elements in arithmetic progression with gap B**(i+2)
    where B = max(l, 2): the difference sets live in disjoint exponential
    bands, so every edge label has the maximal size l*l.  The progression
    offsets come from the greedy Sidon sequence, making all edge-label
    minima, and hence all edge labels, distinct.
    """
    if num_vertices < 1:
        raise ConstructionError("need at least one vertex")
    if l < 1:
        raise ConstructionError("l must be positive")
    band = max(l, 2)
    offsets = mian_chowla(num_vertices)
    assignment = {
        i: SetLabel(offsets[i] + t * band ** (i + 2) for t in range(l))
        for i in range(num_vertices)
    }
    return Labeling(assignment)


def topological_reduce(g: Graph, f: Labeling, v: int) -> tuple[Graph, Labeling]:
    """Remove a degree-2 vertex v and join its neighbors by a new edge.

    Requires the input to carry a strong labeling, v's neighbors u and w to
    be non-adjacent, and their difference sets to be disjoint; then the new
    edge keeps the product property and the result is strong again.
    Vertex ids above v are shifted down by one in both the returned graph
    and labeling.
    """
    if not (0 <= v < g.vertex_count):
        raise ReductionError(f"vertex {v} out of range")
    if g.degree(v) != 2:
        raise ReductionError(f"vertex {v} has degree {g.degree(v)}, need degree 2")
    u, w = g.neighbors(v)
    if g.has_edge(u, w):
        raise ReductionError(f"neighbors {u} and {w} are adjacent; reduction undefined")
    report = verify(g, f)
    if not report.is_strong:
        raise ReductionError("labeling is not strong")
    shared = difference_set(f[u]) & difference_set(f[w])
    if shared:
        raise ReductionError(
            f"difference sets of {u} and {w} share {sorted(shared)}",
            shared_differences=tuple(sorted(shared)),
        )
    new_label = sumset(f[u], f[w])
    for a, b in g.edges:
        if v in (a, b):
            continue
        if sumset(f[a], f[b]) == new_label:
            raise ReductionError(
                f"new edge {u}-{w} would duplicate the label of edge {a}-{b}"
            )

    def remap(x: int) -> int:
        return x if x < v else x - 1

    edges = [(remap(a), remap(b)) for a, b in g.edges if v not in (a, b)]
    edges.append((remap(u), remap(w)))
    reduced = Graph(g.vertex_count - 1, edges)
    labels = Labeling(
        {remap(x): f[x] for x in g.vertices() if x != v}
    )
    return reduced, labels
