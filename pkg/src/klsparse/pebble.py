"""Maximum (k,l)-sparse subgraph extraction by path augmentation.

An edge uv is accepted exactly when the inner digraph can be reoriented so
that indeg(u) + indeg(v) < 2k - l (for a loop: indeg(v) <= k - l - 1);
each reorientation step reverses one path found by a backward search from
{u, v} to a node of indegree below k.  For 0 <= l < 2k the accepted sets
form the independent sets of a matroid, so any processing order yields a
maximum-size subgraph and non-increasing weight order yields a maximum-
weight one.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .multigraph import Multigraph
from .orientation import InnerDigraph, Instrumentation


class WrongRegimeError(ValueError):
    """The operation requires l < 2k (or l = 2k, for the 2k-only path)."""


class UnweightedInputError(ValueError):
    """Weighted extraction was asked for a graph without weights."""


class Reason(enum.Enum):
    """Why an edge got its verdict."""

    ACCEPTED = "accepted"
    INDEGREE_BLOCKED = "indegree-blocked"
    COVERED_BY_COMPONENT = "covered-by-component"
    EARLY_TERMINATED = "early-terminated"


@dataclass(frozen=True)
class SparsityParams:
    """The pair (k, l) with k >= 1 and 0 <= l <= 2k."""

    k: int
    l: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError(f"k must be at least 1, got {self.k}")
        if not 0 <= self.l <= 2 * self.k:
            raise ValueError(
                f"l must lie in [0, 2k] = [0, {2 * self.k}], got {self.l}"
            )

    @property
    def is_augmenting_regime(self) -> bool:
        """True when l < 2k, the regime the augmenting engine handles."""
        return self.l < 2 * self.k

    @property
    def pair_threshold(self) -> int:
        """Acceptance demands indeg(u) + indeg(v) strictly below this."""
        return 2 * self.k - self.l

    @property
    def loop_threshold(self) -> int:
        """A loop at v is acceptable once indeg(v) is at most this."""
        return self.k - self.l - 1

    def tight_size(self, n: int) -> int:
        """Edge count of a tight subgraph on n nodes: max(k*n - l, 0)."""
        return max(self.k * n - self.l, 0)

    def require_augmenting_regime(self) -> None:
        if not self.is_augmenting_regime:
            raise WrongRegimeError(
                f"(k={self.k}, l={self.l}) has l = 2k; use the maximal-2k path"
            )


@dataclass(frozen=True)
class Verdict:
    edge: int
    accepted: bool
    reversals_used: int
    reason: Reason


@dataclass
class ExtractionReport:
    """Outcome of one extraction run.

    ``accepted`` is the accepted edge-id set; ``verdicts`` lists one entry
    per processed edge in processing order.  The classification flags are
    filled by :func:`decide` and stay None otherwise.
    """

    params: SparsityParams
    n: int
    m: int
    accepted: set[int] = field(default_factory=set)
    verdicts: list[Verdict] = field(default_factory=list)
    counters: Instrumentation = field(default_factory=Instrumentation)
    total_weight: float | None = None
    is_sparse: bool | None = None
    is_tight: bool | None = None
    is_spanning: bool | None = None

    @property
    def accepted_count(self) -> int:
        return len(self.accepted)


class PebbleEngine:
    """Streaming acceptance engine for one graph and one (k, l) pair.

    Drives a strategy's edge order through :meth:`try_accept`, maintaining
    the inner digraph, the processed flags shared with the strategy, and
    the early-termination cutoff at max(k*n - l, 0) arcs.
    """

    def __init__(
        self,
        graph: Multigraph,
        params: SparsityParams,
        counters: Instrumentation | None = None,
    ) -> None:
        params.require_augmenting_regime()
        self.graph = graph
        self.params = params
        self.counters = counters if counters is not None else Instrumentation()
        self.digraph = InnerDigraph(graph.n, params.k, self.counters)
        self.processed = [False] * graph.m
        self.report = ExtractionReport(params=params, n=graph.n, m=graph.m,
                                       counters=self.counters)
        self._tight_size = params.tight_size(graph.n)

    def try_accept(self, e: int, preferred_head: int | None = None) -> Verdict:
        """Process edge ``e``: augment until the acceptance condition holds
        or the search fails, inserting the arc on success.

        Reversals performed before a rejection are kept; they only reorient
        the same accepted set.  ``preferred_head`` is honoured if its
        indegree allows, otherwise the other endpoint takes the arc.
        """
        g = self.graph
        u = g.edge_u[e]
        v = g.edge_v[e]
        p = self.params
        digraph = self.digraph
        indeg = digraph.indeg
        reversals = 0

        if u == v:
            limit = p.loop_threshold
            if limit < 0:
                return Verdict(e, False, 0, Reason.INDEGREE_BLOCKED)
            while indeg[u] > limit:
                path = digraph.find_reversal_path((u,))
                if path is None:
                    return Verdict(e, False, reversals, Reason.INDEGREE_BLOCKED)
                digraph.reverse(path)
                reversals += 1
            digraph.insert_arc(e, u, u)
        else:
            threshold = p.pair_threshold
            while indeg[u] + indeg[v] >= threshold:
                path = digraph.find_reversal_path((u, v))
                if path is None:
                    return Verdict(e, False, reversals, Reason.INDEGREE_BLOCKED)
                digraph.reverse(path)
                reversals += 1
            if preferred_head is not None and indeg[preferred_head] < p.k:
                head = preferred_head
            else:
                # default rule (and fallback): smaller indegree takes the
                # arc, ties to the smaller id; that endpoint is below k
                # because the indegree sum is below 2k
                head = u if (indeg[u], u) <= (indeg[v], v) else v
            digraph.insert_arc(e, u + v - head, head)
        assert reversals <= p.l + 1
        return Verdict(e, True, reversals, Reason.ACCEPTED)

    def preaccept(self, e: int, tail: int, head: int) -> None:
        """Record ``e`` as accepted with a caller-supplied orientation.

        Used by two-phase strategies whose first phase is sparse by
        construction; the indegree bound is still enforced on insert.
        """
        self.digraph.insert_arc(e, tail, head)
        self._record(Verdict(e, True, 0, Reason.ACCEPTED))

    def early_terminated(self) -> bool:
        return self.digraph.arc_count >= self._tight_size

    def _record(self, verdict: Verdict) -> None:
        e = verdict.edge
        self.processed[e] = True
        self.counters.edges_processed += 1
        if verdict.accepted:
            self.counters.edges_accepted += 1
            self.report.accepted.add(e)
        self.report.verdicts.append(verdict)

    def _process_edge(self, e: int, strategy) -> Verdict:
        preferred = strategy.orient(self.graph.edge_u[e], self.graph.edge_v[e])
        return self.try_accept(e, preferred)

    def run(self, strategy) -> ExtractionReport:
        """Drain ``strategy``'s edge order through the engine."""
        strategy.start(self)
        while (e := strategy.next_edge()) is not None:
            if self.early_terminated():
                self.counters.early_termination_hit = 1
                verdict = Verdict(e, False, 0, Reason.EARLY_TERMINATED)
            else:
                verdict = self._process_edge(e, strategy)
            self._record(verdict)
            strategy.on_processed(e, verdict.accepted)
        return self.report


def extract(
    graph: Multigraph,
    params: SparsityParams,
    order=None,
    counters: Instrumentation | None = None,
) -> ExtractionReport:
    """Extract a maximum-size (k,l)-sparse subgraph, l < 2k.

    ``order`` is a heuristic strategy or an explicit edge-id sequence
    (default: Basic with seed 0); the accepted cardinality is
    order-independent, the work done is not.
    """
    from .heuristics import make_strategy

    if order is None:
        order = make_strategy("Basic", graph, params)
    elif not hasattr(order, "next_edge"):
        order = _FixedOrder(list(order))
    engine = PebbleEngine(graph, params, counters)
    return engine.run(order)


class _FixedOrder:
    """Minimal strategy over a fixed edge sequence with the default
    orientation rule; used for weighted extraction."""

    name = "fixed"
    kind = "edge-order"
    uses_components = False

    def __init__(self, sequence: list[int]) -> None:
        self._sequence = sequence
        self._pos = 0

    def start(self, engine: PebbleEngine) -> None:
        self._engine = engine

    def next_edge(self) -> int | None:
        seq = self._sequence
        processed = self._engine.processed
        while self._pos < len(seq):
            e = seq[self._pos]
            self._pos += 1
            if not processed[e]:
                return e
        return None

    def orient(self, u: int, v: int) -> int | None:
        return None

    def on_processed(self, edge: int, accepted: bool) -> None:
        pass


def extract_weighted(
    graph: Multigraph,
    params: SparsityParams,
    counters: Instrumentation | None = None,
) -> ExtractionReport:
    """Extract a maximum-weight (k,l)-sparse subgraph, l < 2k.

    Processes edges by non-increasing weight (ties by edge id); matroid
    exchange makes this greedy optimal.  Raises
    :class:`UnweightedInputError` when the graph carries no weights.
    """
    params.require_augmenting_regime()
    if graph.weights is None:
        raise UnweightedInputError("graph has no edge weights")
    weights = graph.weights
    sequence = sorted(range(graph.m), key=lambda e: (-weights[e], e))
    engine = PebbleEngine(graph, params, counters)
    report = engine.run(_FixedOrder(sequence))
    report.total_weight = sum(weights[e] for e in report.accepted)
    return report


def decide(
    graph: Multigraph,
    params: SparsityParams,
    counters: Instrumentation | None = None,
) -> ExtractionReport:
    """Classify the graph: fills is_sparse / is_tight / is_spanning.

    sparse: every edge accepted; spanning: the accepted subgraph reaches
    max(k*n - l, 0) edges; tight: both at once.
    """
    report = extract(graph, params, counters=counters)
    tight_size = params.tight_size(graph.n)
    report.is_sparse = len(report.accepted) == graph.m
    report.is_spanning = len(report.accepted) == tight_size
    report.is_tight = report.is_sparse and graph.m == tight_size
    return report
