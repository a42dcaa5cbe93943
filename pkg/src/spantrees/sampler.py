"""Uniform spanning trees by Wilson's loop-erased random walk, used to spot-check exact leaf averages."""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from spantrees.errors import DomainError, InvalidParameter
from spantrees.graphs import FamilySpec, Graph
from spantrees.matrix_tree import num_spanning_trees, total_leaves, total_leaves_vertex_transitive

GENERATOR = "numpy.PCG64"
_BLOCK = 4096


@dataclass(frozen=True)
class SampledTree:
    parent: Graph
    edges: tuple[tuple[int, int], ...]

    def degrees(self) -> list[int]:
        deg = [0] * (self.parent.n + 1)
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def is_valid(self) -> bool:
        """Spanning, acyclic, connected and using only parent edges."""
        n = self.parent.n
        if len(self.edges) != n - 1:
            return False
        if any(e not in self.parent.edges for e in self.edges):
            return False
        t = Graph(n, frozenset(self.edges))
        return t.is_connected()


@dataclass(frozen=True)
class SampleStats:
    sample_count: int
    mean_leaves: float
    std_error: float
    seed: int
    generator: str = GENERATOR
    total_leaves: int = 0
    sum_squares: int = 0

    @property
    def exact_mean(self) -> Fraction:
        return Fraction(self.total_leaves, self.sample_count)


def _rng(seed) -> np.random.Generator:
    if isinstance(seed, np.random.SeedSequence):
        return np.random.Generator(np.random.PCG64(seed))
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(int(seed))))


def wilson_sample(g: Graph, seed) -> SampledTree:
    """One uniform spanning tree of a connected graph, rooted at vertex 1.

    Walks start from the lowest-labeled vertex not yet in the tree; the
    ``succ`` table keeps only the last exit from each vertex, which is the loop
    erasure of the walk.
    """
    if not g.is_connected():
        raise DomainError("Wilson's algorithm needs a connected graph")
    n = g.n
    adj = g.adjacency
    rng = _rng(seed)
    uniforms = rng.random(_BLOCK)
    pos = 0
    in_tree = [False] * (n + 1)
    in_tree[1] = True
    succ = [0] * (n + 1)
    for start in range(2, n + 1):
        u = start
        while not in_tree[u]:
            if pos == _BLOCK:
                uniforms = rng.random(_BLOCK)
                pos = 0
            nb = adj[u]
            succ[u] = nb[int(uniforms[pos] * len(nb))]
            pos += 1
            u = succ[u]
        u = start
        while not in_tree[u]:
            in_tree[u] = True
            u = succ[u]
    edges = tuple(sorted((min(v, succ[v]), max(v, succ[v])) for v in range(2, n + 1)))
    return SampledTree(parent=g, edges=edges)


def count_leaves(t: SampledTree) -> int:
    return sum(1 for d in t.degrees()[1:] if d == 1)


def estimate_avg_leaves(g: Graph, samples: int, seed: int, validate: bool = False) -> SampleStats:
    """Mean and standard error of the leaf count over independent Wilson samples.

    Each draw gets its own child of ``SeedSequence(seed)``, so results do not
    depend on evaluation order.
    """
    if samples < 2:
        raise InvalidParameter("need at least 2 samples")
    total = 0
    squares = 0
    for child in np.random.SeedSequence(seed).spawn(samples):
        t = wilson_sample(g, child)
        if validate and not t.is_valid():
            raise AssertionError("sampler produced an invalid spanning tree")
        k = count_leaves(t)
        total += k
        squares += k * k
    mean = Fraction(total, samples)
    var = (Fraction(squares) - samples * mean * mean) / (samples - 1)
    return SampleStats(
        sample_count=samples,
        mean_leaves=float(mean),
        std_error=math.sqrt(float(var) / samples),
        seed=seed,
        total_leaves=total,
        sum_squares=squares,
    )


@dataclass(frozen=True)
class VerificationReport:
    family: str
    n: int
    exact_mean: Fraction
    sample_mean: float
    std_error: float
    k_sigma: float
    passed: bool
    seed: int
    samples: int

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "n": self.n,
            "exact_mean": f"{float(self.exact_mean):.12f}",
            "sample_mean": self.sample_mean,
            "std_error": self.std_error,
            "k_sigma": self.k_sigma,
            "pass": self.passed,
            "seed": self.seed,
            "samples": self.samples,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1)


def verify_family_member(
    fam: FamilySpec,
    index: int,
    samples: int = 400,
    seed: int = 0,
    k_sigma: float = 4.0,
    max_vertices: int = 300,
    exact_offset: Fraction | int = 0,
) -> VerificationReport:
    """Compare the sampled mean leaf count of one member against the exact average.

    ``exact_offset`` shifts the exact mean and exists only to check that the
    harness can fail.
    """
    g = fam.member(index)
    if g.n > max_vertices:
        raise InvalidParameter(f"member has {g.n} vertices, above the limit {max_vertices}")
    tau = num_spanning_trees(g)
    leaves = total_leaves_vertex_transitive(g) if fam.vertex_transitive else total_leaves(g)
    exact = Fraction(leaves, tau) + Fraction(exact_offset)
    stats = estimate_avg_leaves(g, samples, seed)
    if stats.std_error == 0:
        ok = stats.exact_mean == exact
    else:
        ok = abs(stats.mean_leaves - float(exact)) <= k_sigma * stats.std_error
    return VerificationReport(
        family=fam.tag,
        n=g.n,
        exact_mean=exact,
        sample_mean=stats.mean_leaves,
        std_error=stats.std_error,
        k_sigma=k_sigma,
        passed=ok,
        seed=seed,
        samples=samples,
    )
