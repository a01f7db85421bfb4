"""Shared test utilities: naive oracles and small-graph generators."""

from itertools import combinations, product
from random import Random

from iasi import Graph, Labeling, SetLabel


def naive_sumset(a, b):
    """Pairwise-sum enumeration, independent of the library's sumset."""
    return sorted({x + y for x in a for y in b})


def naive_difference_set(a):
    """All positive differences, by direct pair enumeration."""
    return sorted({x - y for x in a for y in a if x > y})


def small_sets(universe_max, max_size):
    """Every nonempty subset of {0..universe_max} with at most max_size
    elements, ordered by size then lexicographically."""
    out = []
    for size in range(1, max_size + 1):
        out.extend(combinations(range(universe_max + 1), size))
    return out


def graphs_without_isolated(n):
    """All labeled graphs on vertex set {0..n-1} with no isolated vertex,
    as edge tuples."""
    all_edges = list(combinations(range(n), 2))
    result = []
    for bits in range(1, 2 ** len(all_edges)):
        edges = [e for i, e in enumerate(all_edges) if bits >> i & 1]
        covered = {v for e in edges for v in e}
        if len(covered) == n:
            result.append(tuple(edges))
    return result


def random_bipartite_graph(rng: Random, max_vertices=12):
    """A random connected-enough bipartite graph with no isolated vertices."""
    while True:
        a = rng.randint(1, max_vertices - 1)
        b = rng.randint(1, max_vertices - a)
        cross = list(product(range(a), range(a, a + b)))
        edges = [e for e in cross if rng.random() < 0.5]
        covered = {v for e in edges for v in e}
        for v in range(a + b):
            if v not in covered:
                u = rng.randrange(a, a + b) if v < a else rng.randrange(a)
                edges.append((min(u, v), max(u, v)))
                covered.update((u, v))
        if edges:
            return Graph(a + b, set(edges))


def delete_vertex(g: Graph, f: Labeling, v: int):
    """Remove v and any vertices left isolated, compacting ids; returns the
    reduced (graph, labeling) or None if nothing remains."""
    edges = [e for e in g.edges if v not in e]
    return _compact(g, f, edges)


def delete_edge(g: Graph, f: Labeling, e):
    """Remove one edge and any vertices left isolated."""
    edges = [x for x in g.edges if x != e]
    return _compact(g, f, edges)


def _compact(g, f, edges):
    covered = sorted({v for e in edges for v in e})
    if not edges:
        return None
    remap = {old: new for new, old in enumerate(covered)}
    new_edges = [(remap[a], remap[b]) for a, b in edges]
    new_labels = Labeling({remap[old]: f[old] for old in covered})
    return Graph(len(covered), new_edges), new_labels
