"""Exact spanning-tree and total-leaf counts via Kirchhoff's Matrix Tree Theorem.

Everything here is integer arithmetic; determinants use fraction-free
(Bareiss) elimination so intermediate values never leave the integers.
"""
from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import partial

from spantrees.errors import DomainError, InvalidParameter
from spantrees.graphs import FamilySpec, Graph, delete_vertex, make_path, power

IntMatrix = list[list[int]]


@dataclass(frozen=True)
class IntSequence:
    family: str
    start_n: int
    terms: tuple[int, ...]
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.terms:
            raise InvalidParameter("sequence must be nonempty")
        object.__setattr__(self, "terms", tuple(int(t) for t in self.terms))

    def __len__(self):
        return len(self.terms)

    def __getitem__(self, i):
        return self.terms[i]

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "params": dict(self.params),
            "start_n": self.start_n,
            "terms": [str(t) for t in self.terms],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1)

    @classmethod
    def from_dict(cls, data: dict) -> IntSequence:
        return cls(
            family=data["family"],
            start_n=int(data["start_n"]),
            terms=tuple(int(t) for t in data["terms"]),
            params=dict(data.get("params", {})),
        )

    @classmethod
    def from_json(cls, text: str) -> IntSequence:
        return cls.from_dict(json.loads(text))


def laplacian(g: Graph) -> IntMatrix:
    n = g.n
    m = [[0] * n for _ in range(n)]
    for u, v in g.edges:
        m[u - 1][v - 1] = m[v - 1][u - 1] = -1
        m[u - 1][u - 1] += 1
        m[v - 1][v - 1] += 1
    return m


def det_exact(m: IntMatrix) -> int:
    """Determinant by Bareiss fraction-free elimination (0x0 -> 1)."""
    n = len(m)
    if any(len(row) != n for row in m):
        raise InvalidParameter("matrix must be square")
    if n == 0:
        return 1
    a = [list(map(int, row)) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pk = a[k][k]
        rowk = a[k][k + 1:]
        for i in range(k + 1, n):
            ri = a[i]
            f = ri[k]
            if f:
                a[i] = ri[:k + 1] + [(x * pk - f * y) // prev for x, y in zip(ri[k + 1:], rowk)]
            else:
                a[i] = ri[:k + 1] + [x * pk // prev for x in ri[k + 1:]]
        prev = pk
    return sign * a[n - 1][n - 1]


def adjugate_exact(m: IntMatrix) -> tuple[int, IntMatrix]:
    """Return (det, adj) of a nonsingular integer matrix by fraction-free Gauss-Jordan."""
    n = len(m)
    if n == 0:
        return 1, []
    aug = [list(map(int, row)) + [0] * n for row in m]
    prev = 1
    for k in range(n):
        if aug[k][k] == 0:
            return _adjugate_pivoting(m)
        pk = aug[k][k]
        # Identity columns not yet reached only hold the running scale factor on
        # their own row, so that entry is filled in when the row becomes pivot.
        aug[k][n + k] = prev
        lo, hi = k + 1, n + k + 1
        rowk = aug[k][lo:hi]
        for i in range(n):
            if i == k:
                continue
            ri = aug[i]
            f = ri[k]
            if f:
                ri[lo:hi] = [(x * pk - f * y) // prev for x, y in zip(ri[lo:hi], rowk)]
            else:
                ri[lo:hi] = [x * pk // prev for x in ri[lo:hi]]
            ri[k] = 0
        prev = pk
    return prev, [row[n:] for row in aug]


def _adjugate_pivoting(m: IntMatrix) -> tuple[int, IntMatrix]:
    n = len(m)
    aug = [list(map(int, row)) + [1 if j == i else 0 for j in range(n)] for i, row in enumerate(m)]
    sign = 1
    prev = 1
    for k in range(n):
        if aug[k][k] == 0:
            for i in range(k + 1, n):
                if aug[i][k] != 0:
                    aug[k], aug[i] = aug[i], aug[k]
                    sign = -sign
                    break
            else:
                raise DomainError("singular matrix has no adjugate inverse form")
        pk = aug[k][k]
        rowk = aug[k]
        for i in range(n):
            if i != k:
                f = aug[i][k]
                aug[i] = [(x * pk - f * y) // prev for x, y in zip(aug[i], rowk)]
        prev = pk
    return sign * prev, [[sign * x for x in row[n:]] for row in aug]


def laplacian_minor(g: Graph, index: int | None = None) -> int:
    """det of the Laplacian with row and column ``index`` (1-based, default n) removed."""
    if g.n == 0:
        raise InvalidParameter("graph has no vertices")
    index = g.n if index is None else index
    lap = laplacian(g)
    del lap[index - 1]
    for row in lap:
        del row[index - 1]
    return det_exact(lap)


def _prune_pendants(g: Graph) -> Graph:
    """Strip degree-one vertices repeatedly; tau is unchanged by each removal."""
    adj = [set(a) for a in g.adjacency]
    alive = set(range(1, g.n + 1))
    stack = [v for v in alive if len(adj[v]) == 1]
    while stack and len(alive) > 2:
        v = stack.pop()
        if v not in alive or len(adj[v]) != 1:
            continue
        (w,) = adj[v]
        adj[w].discard(v)
        adj[v].clear()
        alive.discard(v)
        if len(adj[w]) == 1:
            stack.append(w)
    if len(alive) == g.n:
        return g
    order = {v: i + 1 for i, v in enumerate(sorted(alive))}
    edges = {(order[u], order[v]) for u, v in g.edges if u in alive and v in alive}
    return Graph(len(alive), frozenset(edges))


def num_spanning_trees(g: Graph) -> int:
    """tau(g): 0 for disconnected graphs, 1 for a single vertex.

    Pendant vertices are pruned first (they do not change tau); the count is
    the Laplacian minor with the last row and column removed.
    """
    if g.n < 1:
        raise InvalidParameter("graph must have at least one vertex")
    if not g.is_connected():
        return 0
    if g.num_edges == g.n - 1:
        return 1
    return laplacian_minor(_prune_pendants(g))


def total_leaves_by_deletion(g: Graph) -> int:
    """Sum over vertices of deg(v) * tau(g - v), one determinant per vertex."""
    return sum(g.degree(v) * num_spanning_trees(delete_vertex(g, v)) for v in range(1, g.n + 1) if g.degree(v))


def total_leaves_by_adjugate(g: Graph) -> int:
    """Same sum as total_leaves_by_deletion, with every tau(g - v) read off one adjugate.

    With M the Laplacian minor at w = n and A = adj(M), deleting v changes M
    to M[-v,-v] minus the unit diagonal on the neighbours of v, so the
    determinant lemma gives tau(g - v) from a deg(v) x deg(v) determinant.
    """
    n = g.n
    if n <= 2:
        return total_leaves_by_deletion(g)
    lap = laplacian(g)
    minor = [row[:-1] for row in lap[:-1]]
    delta, adj = adjugate_exact(minor)
    total = g.degree(n) * num_spanning_trees(delete_vertex(g, n))
    for v in range(1, n):
        deg = g.degree(v)
        i = v - 1
        a_vv = adj[i][i]
        nbrs = [u - 1 for u in g.adjacency[v] if u != n]
        if not nbrs:
            tau_v = a_vv
        else:
            x = delta * a_vv
            w = [[x * (s == t) - (adj[s][t] * a_vv - adj[s][i] * adj[i][t]) for t in nbrs] for s in nbrs]
            tau_v = Fraction(a_vv * det_exact(w), x ** len(nbrs))
            assert tau_v.denominator == 1
            tau_v = int(tau_v)
        total += deg * tau_v
    return total


def total_leaves(g: Graph, method: str = "auto") -> int:
    """Total number of leaves summed over all spanning trees of a connected graph.

    Uses sum_v deg(v) * tau(g - v). ``method`` is "deletion", "adjugate" or
    "auto" (deletion when pendant vertices make the minors tiny).
    """
    if g.n < 1:
        raise InvalidParameter("graph must have at least one vertex")
    if not g.is_connected():
        raise DomainError("total_leaves needs a connected graph")
    if g.n == 1:
        return 0
    if g.num_edges == g.n - 1:
        return len(g.leaves())
    if method == "auto":
        method = "deletion" if min(g.degrees()) == 1 or g.n <= 4 else "adjugate"
    if method == "deletion":
        return total_leaves_by_deletion(g)
    if method == "adjugate":
        return total_leaves_by_adjugate(g)
    raise InvalidParameter(f"unknown method {method!r}")


def total_leaves_vertex_transitive(g: Graph) -> int:
    """n * deg(1) * tau(g - 1); valid only when the caller knows g is vertex-transitive."""
    return g.n * g.degree(1) * num_spanning_trees(delete_vertex(g, 1))


def _tree_count_member(fam: FamilySpec, index: int) -> int:
    return num_spanning_trees(fam.member(index))


def _leaf_count_member(fam: FamilySpec, use_transitivity: bool, index: int) -> int:
    g = fam.member(index)
    if use_transitivity:
        return total_leaves_vertex_transitive(g)
    return total_leaves(g)


def _map_members(func, indices, workers: int) -> list[int]:
    if workers <= 1:
        return [func(i) for i in indices]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        # map() yields in submission order, whatever the completion order.
        return list(pool.map(func, indices))


def _sequence(fam: FamilySpec, terms: list[int], first: int) -> IntSequence:
    return IntSequence(family=fam.kind, start_n=fam.start_size + first, terms=tuple(terms), params=fam.p)


def spanning_tree_seq(fam: FamilySpec, count: int, first: int = 0, workers: int = 1) -> IntSequence:
    """tau of members first .. first+count-1."""
    if count < 1:
        raise InvalidParameter("count must be >= 1")
    terms = _map_members(partial(_tree_count_member, fam), range(first, first + count), workers)
    return _sequence(fam, terms, first)


def total_leaves_seq(
    fam: FamilySpec,
    count: int,
    use_transitivity: bool = False,
    first: int = 0,
    workers: int = 1,
    check: bool = False,
) -> IntSequence:
    """Total leaves of members first .. first+count-1.

    ``check`` recomputes the first member with the full vertex sum when the
    transitive shortcut is used and raises on disagreement.
    """
    if count < 1:
        raise InvalidParameter("count must be >= 1")
    if use_transitivity and not fam.vertex_transitive:
        raise InvalidParameter(f"family {fam.kind} is not vertex-transitive")
    terms = _map_members(partial(_leaf_count_member, fam, use_transitivity), range(first, first + count), workers)
    if check and use_transitivity:
        full = total_leaves(fam.member(first))
        if full != terms[0]:
            raise DomainError(f"transitive shortcut gave {terms[0]}, full sum {full}")
    return _sequence(fam, terms, first)


def sequence_vertex_map(fam: FamilySpec, seq: IntSequence) -> tuple[int, int]:
    """(s, t) so that position i of ``seq`` is a graph on s*i + t vertices."""
    s, t = fam.vertex_map
    first = seq.start_n - fam.start_size
    return s, s * first + t


def path_power_lower_bound(g: Graph, k: int, v: int) -> int:
    """prod over components H of g - v of tau(P_m^k), m = max distance from v into H."""
    if not g.is_connected():
        raise DomainError("lower bound needs a connected graph")
    dist = g.distances_from(v)
    rest = delete_vertex(g, v)
    back = lambda x: x + 1 if x >= v else x
    bound = 1
    for comp in rest.components():
        m = max(dist[back(x)] for x in comp)
        bound *= num_spanning_trees(power(make_path(m), k))
    return bound
