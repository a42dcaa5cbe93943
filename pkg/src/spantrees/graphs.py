"""Labeled simple graphs on vertices 1..n and the generators for every family we study."""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

from spantrees.errors import InvalidParameter

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with vertices 1..n.

    Edges are stored as a frozenset of ``(u, v)`` pairs with ``u < v``.
    Connectivity is not required.
    """

    n: int
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 1:
            raise InvalidParameter(f"vertex count must be positive, got {self.n}")
        normalized = set()
        for u, v in self.edges:
            if u == v:
                raise InvalidParameter(f"self-loop at vertex {u}")
            if u > v:
                u, v = v, u
            if u < 1 or v > self.n:
                raise InvalidParameter(f"edge ({u}, {v}) has endpoint outside 1..{self.n}")
            normalized.add((u, v))
        object.__setattr__(self, "edges", frozenset(normalized))

    @classmethod
    def from_edges(cls, n: int, edges) -> Graph:
        return cls(n, frozenset(tuple(e) for e in edges))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Sorted neighbor tuples; index 0 is unused so that ``adjacency[v]`` works for labels."""
        nbrs: list[list[int]] = [[] for _ in range(self.n + 1)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(x)) for x in nbrs)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency[1:]]

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def distances_from(self, source: int) -> dict[int, int]:
        """BFS distances; unreachable vertices are absent from the result."""
        dist = {source: 0}
        queue = deque([source])
        adj = self.adjacency
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return dist

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        return len(self.distances_from(1)) == self.n

    def components(self) -> list[list[int]]:
        seen: set[int] = set()
        comps = []
        for v in range(1, self.n + 1):
            if v not in seen:
                comp = sorted(self.distances_from(v))
                seen.update(comp)
                comps.append(comp)
        return comps

    def is_tree(self) -> bool:
        return self.n >= 1 and self.num_edges == self.n - 1 and self.is_connected()

    def leaves(self) -> list[int]:
        """Vertices of degree exactly one."""
        return [v for v in range(1, self.n + 1) if self.degree(v) == 1]

    def to_dict(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.sorted_edges()]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> Graph:
        return cls.from_edges(data["n"], data["edges"])

    @classmethod
    def from_json(cls, text: str) -> Graph:
        return cls.from_dict(json.loads(text))


def make_path(n: int) -> Graph:
    if n < 1:
        raise InvalidParameter(f"path needs n >= 1, got {n}")
    return Graph(n, frozenset((i, i + 1) for i in range(1, n)))


def make_cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidParameter(f"cycle needs n >= 3, got {n}")
    return Graph(n, frozenset([(i, i + 1) for i in range(1, n)] + [(1, n)]))


def make_complete(n: int) -> Graph:
    if n < 1:
        raise InvalidParameter(f"complete graph needs n >= 1, got {n}")
    return Graph(n, frozenset(combinations(range(1, n + 1), 2)))


def make_star(n: int) -> Graph:
    """Star on n vertices with center 1."""
    if n < 2:
        raise InvalidParameter(f"star needs n >= 2, got {n}")
    return Graph(n, frozenset((1, j) for j in range(2, n + 1)))


def power(g: Graph, k: int) -> Graph:
    """k-th power: join u, v whenever 1 <= dist(u, v) <= k.

    Pairs in different components are at infinite distance and never joined.
    """
    if k < 1:
        raise InvalidParameter(f"power exponent must be >= 1, got {k}")
    edges = set()
    for u in range(1, g.n + 1):
        for v, d in g.distances_from(u).items():
            if u < v and d <= k:
                edges.add((u, v))
    return Graph(g.n, frozenset(edges))


def make_grid(a: int, b: int) -> Graph:
    """a x b grid; cell (i, j) gets label (i - 1) * b + j."""
    if a < 1 or b < 1:
        raise InvalidParameter(f"grid needs a, b >= 1, got {a}x{b}")
    label = lambda i, j: (i - 1) * b + j
    edges = set()
    for i in range(1, a + 1):
        for j in range(1, b + 1):
            if j < b:
                edges.add((label(i, j), label(i, j + 1)))
            if i < a:
                edges.add((label(i, j), label(i + 1, j)))
    return Graph(a * b, frozenset(edges))


def make_torus(a: int, b: int) -> Graph:
    """a x b torus C_a x C_b, same labeling as make_grid. Needs a, b >= 3 to stay simple."""
    if a < 3 or b < 3:
        raise InvalidParameter(f"torus needs a, b >= 3 (else multigraph), got {a}x{b}")
    label = lambda i, j: (i - 1) * b + j
    edges = set()
    for i in range(1, a + 1):
        for j in range(1, b + 1):
            right = label(i, j % b + 1)
            down = label(i % a + 1, j)
            for w in (right, down):
                u = label(i, j)
                edges.add((min(u, w), max(u, w)))
    return Graph(a * b, frozenset(edges))


def subdivided_star_spokes(p: int, q: int, k: int) -> list[int]:
    """Number of internal (subdivision) vertices on each of the p*k spokes.

    The (q - p) * k subdivisions are spread as evenly as possible, earlier
    spokes taking the remainder, so spokes may be subdivided several times
    when q > 2p.
    """
    spokes = p * k
    extra = (q - p) * k
    base, rem = divmod(extra, spokes)
    return [base + (1 if j < rem else 0) for j in range(spokes)]


def make_subdivided_star(p: int, q: int, k: int) -> Graph:
    """Star with p*k spokes carrying (q - p)*k subdivision vertices in total.

    The result is a tree on q*k + 1 vertices. Vertex 1 is the center and
    each spoke is labeled consecutively from the center outward.
    """
    if not 0 < p < q:
        raise InvalidParameter(f"subdivided star needs 0 < p < q, got p={p}, q={q}")
    if k < 1:
        raise InvalidParameter(f"subdivided star needs k >= 1, got {k}")
    edges = []
    nxt = 2
    for inner in subdivided_star_spokes(p, q, k):
        prev = 1
        for _ in range(inner + 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph(nxt - 1, frozenset(edges))


def subdivision_vertices(p: int, q: int, k: int) -> list[int]:
    """Labels of the internal spoke vertices of make_subdivided_star(p, q, k)."""
    out = []
    nxt = 2
    for inner in subdivided_star_spokes(p, q, k):
        out.extend(range(nxt, nxt + inner))
        nxt += inner + 1
    return out


def make_counterexample(k: int) -> Graph:
    """Once-subdivided star on k spokes plus an edge joining two subdivision vertices."""
    if k < 2:
        raise InvalidParameter(f"counterexample needs k >= 2, got {k}")
    tree = make_subdivided_star(1, 2, k)
    u, v = subdivision_vertices(1, 2, k)[:2]
    return Graph(tree.n, tree.edges | {(u, v)})


def make_half_graph(m: int) -> Graph:
    """Half graph: u_i = i, v_j = m + j, edge u_i v_j iff i <= j."""
    if m < 1:
        raise InvalidParameter(f"half graph needs m >= 1, got {m}")
    return Graph(2 * m, frozenset((i, m + j) for i in range(1, m + 1) for j in range(i, m + 1)))


def graph_difference(g: Graph, h: Graph) -> Graph:
    if g.n != h.n:
        raise InvalidParameter(f"vertex counts differ: {g.n} vs {h.n}")
    return Graph(g.n, g.edges - h.edges)


def delete_vertex(g: Graph, v: int) -> Graph:
    """Remove v and relabel the remaining vertices to 1..n-1, keeping their order."""
    if not 1 <= v <= g.n:
        raise InvalidParameter(f"vertex {v} outside 1..{g.n}")
    shift = lambda x: x - 1 if x > v else x
    return Graph(g.n - 1, frozenset((shift(a), shift(b)) for a, b in g.edges if v not in (a, b)))


def relabel(g: Graph, mapping: dict[int, int]) -> Graph:
    """Apply a bijection old label -> new label on 1..n."""
    if sorted(mapping) != list(range(1, g.n + 1)) or sorted(mapping.values()) != list(range(1, g.n + 1)):
        raise InvalidParameter("relabeling must be a permutation of 1..n")
    return Graph(g.n, frozenset((mapping[a], mapping[b]) for a, b in g.edges))


def embed(g: Graph, n: int, mapping: dict[int, int]) -> Graph:
    """Place g inside an n-vertex graph via an injective label map; other vertices isolated."""
    if len(set(mapping.values())) != len(mapping):
        raise InvalidParameter("embedding must be injective")
    return Graph(n, frozenset((mapping[a], mapping[b]) for a, b in g.edges))


# ---------------------------------------------------------------------------
# Indexed families
# ---------------------------------------------------------------------------

FAMILY_KINDS = (
    "path-power",
    "cycle-power",
    "grid",
    "torus",
    "complete",
    "star",
    "subdivided-star",
    "counterexample",
)

_VERTEX_TRANSITIVE = {"cycle-power", "torus", "complete"}


@dataclass(frozen=True)
class FamilySpec:
    """An indexed graph family; member i = 0, 1, ... has ``s*i + t`` vertices.

    params by kind:
        path-power, cycle-power: r
        grid, torus: a (the fixed side)
        subdivided-star: p, q
    """

    kind: str
    params: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        if self.kind not in FAMILY_KINDS:
            raise InvalidParameter(f"unknown family kind {self.kind!r}")
        params = dict(self.params)
        needed = {
            "path-power": {"r"},
            "cycle-power": {"r"},
            "grid": {"a"},
            "torus": {"a"},
            "subdivided-star": {"p", "q"},
        }.get(self.kind, set())
        if set(params) != needed:
            raise InvalidParameter(f"family {self.kind} takes params {sorted(needed)}, got {sorted(params)}")
        for name, value in params.items():
            if not isinstance(value, int) or value < 1:
                raise InvalidParameter(f"parameter {name} must be a positive integer, got {value!r}")
        if self.kind == "torus" and params["a"] < 3:
            raise InvalidParameter("torus family needs a >= 3")
        if self.kind == "subdivided-star" and params["p"] >= params["q"]:
            raise InvalidParameter("subdivided-star family needs p < q")
        object.__setattr__(self, "params", tuple(sorted(params.items())))

    @classmethod
    def create(cls, kind: str, **params: int) -> FamilySpec:
        return cls(kind, tuple(sorted(params.items())))

    @property
    def p(self) -> dict[str, int]:
        return dict(self.params)

    @property
    def tag(self) -> str:
        if not self.params:
            return self.kind
        return self.kind + "(" + ",".join(f"{k}={v}" for k, v in self.params) + ")"

    @property
    def start_size(self) -> int:
        """Generator size argument of member 0 (n for powers/complete/star, k for stars, b for grids)."""
        p = self.p
        return {
            "path-power": lambda: p["r"] + 2,
            "cycle-power": lambda: 2 * p["r"] + 1,
            "grid": lambda: 1,
            "torus": lambda: 3,
            "complete": lambda: 2,
            "star": lambda: 2,
            "subdivided-star": lambda: 1,
            "counterexample": lambda: 2,
        }[self.kind]()

    @property
    def vertex_map(self) -> tuple[int, int]:
        """(s, t) with member i having s*i + t vertices."""
        p = self.p
        n0 = self.start_size
        if self.kind in ("grid", "torus"):
            return p["a"], p["a"] * n0
        if self.kind == "subdivided-star":
            return p["q"], p["q"] * n0 + 1
        if self.kind == "counterexample":
            return 2, 2 * n0 + 1
        return 1, n0

    def vertex_count(self, index: int) -> int:
        s, t = self.vertex_map
        return s * index + t

    @property
    def vertex_transitive(self) -> bool:
        return self.kind in _VERTEX_TRANSITIVE

    def member(self, index: int) -> Graph:
        if index < 0:
            raise InvalidParameter(f"member index must be >= 0, got {index}")
        size = self.start_size + index
        p = self.p
        if self.kind == "path-power":
            return power(make_path(size), p["r"])
        if self.kind == "cycle-power":
            return power(make_cycle(size), p["r"])
        if self.kind == "grid":
            return make_grid(p["a"], size)
        if self.kind == "torus":
            return make_torus(p["a"], size)
        if self.kind == "complete":
            return make_complete(size)
        if self.kind == "star":
            return make_star(size)
        if self.kind == "subdivided-star":
            return make_subdivided_star(p["p"], p["q"], size)
        return make_counterexample(size)

    def to_dict(self) -> dict:
        return {"family": self.kind, "params": dict(self.params)}
