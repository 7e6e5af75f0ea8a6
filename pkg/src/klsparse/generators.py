"""Seeded benchmark-graph generators and the molecular multiplicity
transform.

Families:

* erdos-renyi        -- G(n, p), each pair independently with probability p
* barabasi-albert    -- preferential attachment, m_attach distinct
                        neighbors per new node, weight degree + 1
* rigid              -- union of three random spanning trees, each node
                        blown up into a clique on tree-degree + 1 nodes,
                        original edges reattached to distinct clique nodes
* tight              -- multigraph union of k_trees random labeled
                        spanning trees on one node set ((k,k)-tight)
* molecular          -- every edge of a base graph replicated
                        `multiplicity` times

Random labeled trees are sampled uniformly through Prüfer sequences.  All
output is a deterministic function of the parameters and the seed.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .multigraph import Multigraph

FAMILIES = ("erdos-renyi", "barabasi-albert", "rigid", "tight", "molecular")


def random_labeled_tree(n: int, rng: random.Random) -> list[tuple[int, int]]:
    """Uniform random labeled tree on nodes 0..n-1 (n >= 2), returned as an
    edge list; decodes a random Prüfer sequence with a linear pointer scan.
    """
    if n < 2:
        raise ValueError(f"a tree needs at least 2 nodes, got {n}")
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges: list[tuple[int, int]] = []
    ptr = 0
    leaf = -1
    for x in seq:
        if leaf < 0:
            while degree[ptr] != 1:
                ptr += 1
            leaf = ptr
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
        if degree[x] == 1 and x < ptr:
            leaf = x  # new minimum leaf, cheaper than rescanning
        else:
            leaf = -1
    last = [v for v in range(n) if degree[v] == 1]
    edges.append((last[0], last[1]))
    return edges


def gen_erdos_renyi(n: int, p: float, seed: int = 0) -> Multigraph:
    """G(n, p) by geometric skip sampling: O(n + m) expected time."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    edges: list[tuple[int, int]] = []
    if p >= 1.0:
        edges = [(i, j) for j in range(n) for i in range(j)]
    elif p > 0.0:
        rng = random.Random(f"{seed}:erdos-renyi")
        logq = math.log1p(-p)
        v, w = 1, -1
        while v < n:
            w += 1 + int(math.log(1.0 - rng.random()) / logq)
            while w >= v and v < n:
                w -= v
                v += 1
            if v < n:
                edges.append((w, v))
    return Multigraph(n, edges)


def gen_barabasi_albert(n: int, m_attach: int, seed: int = 0) -> Multigraph:
    """Preferential attachment: starting from m_attach isolated nodes, each
    new node picks m_attach distinct earlier nodes with probability
    proportional to degree + 1 (smoothed so the empty start is
    well-defined)."""
    if m_attach < 1:
        raise ValueError(f"m_attach must be at least 1, got {m_attach}")
    if n < m_attach:
        raise ValueError(f"n must be at least m_attach = {m_attach}, got {n}")
    rng = random.Random(f"{seed}:barabasi-albert")
    edges: list[tuple[int, int]] = []
    # pool holds each existing node once (the +1 smoothing) plus once per
    # incident accepted edge, so a uniform draw is degree + 1 weighted
    pool = list(range(m_attach))
    for t in range(m_attach, n):
        chosen: list[int] = []
        taken: set[int] = set()
        while len(chosen) < m_attach:
            c = pool[rng.randrange(len(pool))]
            if c not in taken:
                taken.add(c)
                chosen.append(c)
        for c in chosen:
            edges.append((c, t))
            pool.append(c)
            pool.append(t)
        pool.append(t)
    return Multigraph(n, edges)


def gen_tight(n: int, k_trees: int, seed: int = 0) -> Multigraph:
    """Multigraph union of k_trees uniform random labeled spanning trees on
    nodes 0..n-1; the result is (k_trees, k_trees)-tight."""
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    if k_trees < 1:
        raise ValueError(f"k_trees must be at least 1, got {k_trees}")
    rng = random.Random(f"{seed}:tight")
    edges: list[tuple[int, int]] = []
    for _ in range(k_trees):
        edges.extend(random_labeled_tree(n, rng))
    return Multigraph(n, edges)


def gen_rigid(base_n: int, seed: int = 0) -> Multigraph:
    """Blown-up union of three random spanning trees on base_n nodes.

    Each base node v becomes a clique on d(v) + 1 nodes, d(v) its degree
    in the three-tree union; every base edge is reattached to a distinct
    clique node at both ends (lowest unused index first), leaving exactly
    one clique node per block free.  Output has 7*base_n - 6 nodes and is
    (2,3)-spanning.
    """
    if base_n < 2:
        raise ValueError(f"base_n must be at least 2, got {base_n}")
    rng = random.Random(f"{seed}:rigid")
    base_edges: list[tuple[int, int]] = []
    for _ in range(3):
        base_edges.extend(random_labeled_tree(base_n, rng))
    degree = [0] * base_n
    for u, v in base_edges:
        degree[u] += 1
        degree[v] += 1
    # sequential node blocks, one per base node
    start = [0] * base_n
    total = 0
    for v in range(base_n):
        start[v] = total
        total += degree[v] + 1
    edges: list[tuple[int, int]] = []
    for v in range(base_n):
        lo, size = start[v], degree[v] + 1
        for j in range(size):
            for i in range(j):
                edges.append((lo + i, lo + j))
    next_free = list(start)
    for u, v in base_edges:
        au = next_free[u]
        next_free[u] += 1
        av = next_free[v]
        next_free[v] += 1
        edges.append((au, av))
    return Multigraph(total, edges)


def molecular_transform(graph: Multigraph, multiplicity: int) -> Multigraph:
    """Replicate every edge ``multiplicity`` times (weights, if any, are
    copied along); node set unchanged."""
    if multiplicity < 1:
        raise ValueError(f"multiplicity must be at least 1, got {multiplicity}")
    edges: list[tuple[int, int]] = []
    weights: list[float] | None = [] if graph.is_weighted else None
    for e in range(graph.m):
        for _ in range(multiplicity):
            edges.append((graph.edge_u[e], graph.edge_v[e]))
            if weights is not None:
                weights.append(graph.weights[e])
    return Multigraph(graph.n, edges, weights)


@dataclass(frozen=True)
class GenSpec:
    """A reproducible generator invocation: family name, its parameters,
    and the seed.  ``base`` supplies the input graph for the molecular
    family."""

    family: str
    seed: int = 0
    n: int = 0
    p: float = 0.0
    m_attach: int = 1
    base_n: int = 2
    k_trees: int = 1
    multiplicity: int = 1
    base: Multigraph | None = None

    def build(self) -> Multigraph:
        if self.family == "erdos-renyi":
            return gen_erdos_renyi(self.n, self.p, self.seed)
        if self.family == "barabasi-albert":
            return gen_barabasi_albert(self.n, self.m_attach, self.seed)
        if self.family == "rigid":
            return gen_rigid(self.base_n, self.seed)
        if self.family == "tight":
            return gen_tight(self.n, self.k_trees, self.seed)
        if self.family == "molecular":
            if self.base is None:
                raise ValueError("molecular family needs a base graph")
            return molecular_transform(self.base, self.multiplicity)
        raise ValueError(
            f"unknown family {self.family!r}; valid: {', '.join(FAMILIES)}"
        )
