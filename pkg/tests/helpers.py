"""Independent oracles and cached family data shared by the test modules."""
from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations

from hypothesis import strategies as st

from spantrees.cfinite import fit_gf, required_terms
from spantrees.cli import MIN_BZ_TERMS, default_max_order
from spantrees.graphs import FamilySpec, Graph
from spantrees.matrix_tree import spanning_tree_seq, total_leaves_seq


def brute_force(g: Graph) -> tuple[int, int]:
    """(spanning tree count, total leaves) by checking every (n-1)-edge subset."""
    n = g.n
    if n == 1:
        return 1, 0
    trees = leaves = 0
    for subset in combinations(g.sorted_edges(), n - 1):
        parent = list(range(n + 1))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        ok = True
        for u, v in subset:
            ru, rv = find(u), find(v)
            if ru == rv:
                ok = False
                break
            parent[ru] = rv
        if not ok:
            continue
        deg = [0] * (n + 1)
        for u, v in subset:
            deg[u] += 1
            deg[v] += 1
        trees += 1
        leaves += sum(1 for d in deg[1:] if d == 1)
    return trees, leaves


def cofactor_det(m: list[list[int]]) -> int:
    """Laplace expansion along the first row; only for tiny matrices."""
    if not m:
        return 1
    if len(m) == 1:
        return m[0][0]
    total = 0
    for j, a in enumerate(m[0]):
        if a:
            minor = [row[:j] + row[j + 1:] for row in m[1:]]
            total += (-1) ** j * a * cofactor_det(minor)
    return total


def random_connected_graph(rng: random.Random, n: int, max_edges: int) -> Graph:
    """Random spanning tree plus random extra edges, up to max_edges in total."""
    order = list(range(1, n + 1))
    rng.shuffle(order)
    edges = set()
    for i in range(1, n):
        u, v = order[i], order[rng.randrange(i)]
        edges.add((min(u, v), max(u, v)))
    others = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1) if (u, v) not in edges]
    rng.shuffle(others)
    extra = rng.randint(0, max(0, min(len(others), max_edges - len(edges))))
    edges.update(others[:extra])
    return Graph(n, frozenset(edges))


@lru_cache(maxsize=None)
def family_sequences(kind: str, param: int, extra_terms: int = 5):
    """Trees and leaves sequences long enough for the default fit, plus the family."""
    key = "a" if kind in ("grid", "torus") else "r"
    fam = FamilySpec.create(kind, **{key: param})
    count = max(required_terms(default_max_order(fam, w)) for w in ("trees", "leaves")) + extra_terms
    count = max(count, MIN_BZ_TERMS)
    trees = spanning_tree_seq(fam, count)
    leaves = total_leaves_seq(fam, count, use_transitivity=fam.vertex_transitive)
    return fam, trees, leaves


@lru_cache(maxsize=None)
def family_gfs(kind: str, param: int):
    fam, trees, leaves = family_sequences(kind, param)
    gf_t, _ = fit_gf(trees, default_max_order(fam, "trees"))
    gf_l, _ = fit_gf(leaves, default_max_order(fam, "leaves"))
    return fam, trees, leaves, gf_t, gf_l


def connected_graphs(min_n: int = 2, max_n: int = 9, max_extra: int = 12):
    """Hypothesis strategy: a random recursive tree plus random extra edges."""

    def build(data):
        n, parents, extra = data
        edges = [(i + 2, 1 + parents[i] % (i + 1)) for i in range(n - 1)]
        edges += [e for e in extra if e[0] != e[1]]
        return Graph.from_edges(n, edges)

    return st.integers(min_n, max_n).flatmap(
        lambda n: st.tuples(
            st.just(n),
            st.lists(st.integers(0, 10 ** 6), min_size=n - 1, max_size=n - 1),
            st.sets(st.tuples(st.integers(1, n), st.integers(1, n)), max_size=max_extra),
        )
    ).map(build)
