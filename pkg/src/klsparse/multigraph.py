"""Multigraph data model and edge-list file I/O.

The on-disk format is a plain UTF-8 edge list::

    kl-graph <n> <m> [weighted]
    <u> <v> [<weight>]
    ...

``#`` starts a comment line; blank lines are ignored.  Node ids are dense
integers in ``[0, n)``, edge ids are the 0-based position of the edge line.
Loops and parallel edges are allowed.
"""

from __future__ import annotations


class GraphParseError(ValueError):
    """Malformed edge-list input; ``line`` is the 1-based offending line."""

    def __init__(self, message: str, line: int) -> None:
        super().__init__(f"line {line}: {message}")
        self.line = line


class MalformedHeaderError(GraphParseError):
    pass


class MalformedEdgeError(GraphParseError):
    pass


class NodeIdOutOfRangeError(GraphParseError):
    pass


class EdgeCountMismatchError(GraphParseError):
    pass


class NegativeWeightError(GraphParseError):
    pass


class Multigraph:
    """Immutable multigraph with dense integer node and edge ids.

    Endpoints are stored canonically with ``u <= v``.  A loop appears once
    in the incidence list of its node but contributes 2 to the node degree,
    so degree-keyed heuristics see loops consistently.
    """

    __slots__ = ("n", "m", "edge_u", "edge_v", "weights", "incidence", "degree")

    def __init__(
        self,
        n: int,
        edges: list[tuple[int, int]],
        weights: list[float] | None = None,
    ) -> None:
        if n < 0:
            raise ValueError(f"node count must be non-negative, got {n}")
        if weights is not None and len(weights) != len(edges):
            raise ValueError(
                f"{len(edges)} edges but {len(weights)} weights"
            )
        self.n = n
        self.m = len(edges)
        edge_u: list[int] = []
        edge_v: list[int] = []
        incidence: list[list[int]] = [[] for _ in range(n)]
        degree = [0] * n
        for e, (u, v) in enumerate(edges):
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {e}: endpoint out of range [0, {n})")
            if u > v:
                u, v = v, u
            edge_u.append(u)
            edge_v.append(v)
            incidence[u].append(e)
            if v != u:
                incidence[v].append(e)
            degree[u] += 1
            degree[v] += 1
        if weights is not None:
            weights = [float(w) for w in weights]
            for e, w in enumerate(weights):
                if w < 0:
                    raise ValueError(f"edge {e}: negative weight {w}")
        self.edge_u = edge_u
        self.edge_v = edge_v
        self.weights = weights
        self.incidence = incidence
        self.degree = degree

    @property
    def is_weighted(self) -> bool:
        return self.weights is not None

    def endpoints(self, e: int) -> tuple[int, int]:
        return self.edge_u[e], self.edge_v[e]

    def is_loop(self, e: int) -> bool:
        return self.edge_u[e] == self.edge_v[e]

    def edges(self) -> list[tuple[int, int]]:
        """Endpoint pairs in storage order; feeding them back to the
        constructor reproduces the graph (weights aside)."""
        return list(zip(self.edge_u, self.edge_v))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Multigraph):
            return NotImplemented
        return (
            self.n == other.n
            and self.edge_u == other.edge_u
            and self.edge_v == other.edge_v
            and self.weights == other.weights
        )

    def __hash__(self) -> int:  # pragma: no cover - not used as dict key
        return hash((self.n, tuple(self.edge_u), tuple(self.edge_v)))

    def __repr__(self) -> str:
        tag = " weighted" if self.is_weighted else ""
        return f"Multigraph(n={self.n}, m={self.m}{tag})"


def parse_graph(text: str | bytes) -> Multigraph:
    """Parse edge-list text into a :class:`Multigraph`.

    Raises a :class:`GraphParseError` subclass naming the offending 1-based
    line number: :class:`MalformedHeaderError`, :class:`MalformedEdgeError`,
    :class:`NodeIdOutOfRangeError`, :class:`EdgeCountMismatchError` or
    :class:`NegativeWeightError`.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    lines = text.splitlines()
    eof = len(lines) + 1

    header: tuple[int, int, bool] | None = None
    edges: list[tuple[int, int]] = []
    weights: list[float] = []
    n = m = 0
    weighted = False

    for lineno, raw in enumerate(lines, start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        tokens = stripped.split()
        if header is None:
            if tokens[0] != "kl-graph" or len(tokens) not in (3, 4):
                raise MalformedHeaderError(
                    f"expected 'kl-graph <n> <m> [weighted]', got {stripped!r}",
                    lineno,
                )
            if len(tokens) == 4 and tokens[3] != "weighted":
                raise MalformedHeaderError(
                    f"unknown header flag {tokens[3]!r}", lineno
                )
            try:
                n, m = int(tokens[1]), int(tokens[2])
            except ValueError:
                raise MalformedHeaderError(
                    f"node/edge counts must be integers, got {stripped!r}",
                    lineno,
                ) from None
            if n < 0 or m < 0:
                raise MalformedHeaderError(
                    f"node/edge counts must be non-negative, got {n}, {m}",
                    lineno,
                )
            weighted = len(tokens) == 4
            header = (n, m, weighted)
            continue

        if len(edges) >= m:
            raise EdgeCountMismatchError(
                f"expected {m} edge lines, found more", lineno
            )
        expected = 3 if weighted else 2
        if len(tokens) != expected:
            raise MalformedEdgeError(
                f"expected {expected} tokens on edge line, got {len(tokens)}",
                lineno,
            )
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise MalformedEdgeError(
                f"endpoints must be integers, got {stripped!r}", lineno
            ) from None
        if not (0 <= u < n and 0 <= v < n):
            raise NodeIdOutOfRangeError(
                f"endpoint outside [0, {n}) on edge line {stripped!r}", lineno
            )
        if weighted:
            try:
                w = float(tokens[2])
            except ValueError:
                raise MalformedEdgeError(
                    f"weight must be a decimal number, got {tokens[2]!r}",
                    lineno,
                ) from None
            if not (w >= 0):  # also rejects NaN
                raise NegativeWeightError(f"negative weight {tokens[2]}", lineno)
            weights.append(w)
        edges.append((u, v))

    if header is None:
        raise MalformedHeaderError("missing 'kl-graph' header", eof)
    if len(edges) != m:
        raise EdgeCountMismatchError(
            f"expected {m} edge lines, found {len(edges)}", eof
        )
    return Multigraph(n, edges, weights if weighted else None)


def serialize_graph(g: Multigraph) -> str:
    """Render ``g`` in the edge-list format (inverse of :func:`parse_graph`).

    ``parse_graph(serialize_graph(g))`` reproduces ``g`` exactly; float
    weights are written with ``repr`` so the value round-trips bit-for-bit.
    """
    tag = " weighted" if g.is_weighted else ""
    out = [f"kl-graph {g.n} {g.m}{tag}"]
    if g.is_weighted:
        assert g.weights is not None
        for e in range(g.m):
            out.append(f"{g.edge_u[e]} {g.edge_v[e]} {g.weights[e]!r}")
    else:
        for e in range(g.m):
            out.append(f"{g.edge_u[e]} {g.edge_v[e]}")
    return "\n".join(out) + "\n"
