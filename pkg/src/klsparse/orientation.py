"""Mutable orientation state over accepted edges.

Arcs are stored column-wise (tail, head, source edge per arc id) with a
single incidence list per node; direction is read off the arc record, so
reversing a path is one tail/head swap per arc with no adjacency surgery.
Traversal bookkeeping uses epoch stamps: visited state is never cleared,
a stamp is simply overwritten the next time the node is actually reached,
which keeps reset work proportional to the nodes visited.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence


class StalePathError(RuntimeError):
    """A reversal path no longer matches the current arc directions."""


class IndegreeOverflowError(RuntimeError):
    """Inserting the arc would push the head's indegree above k."""


@dataclass
class Instrumentation:
    """Monotone work counters shared by one extraction run.

    ``lazy_reset_work`` counts visit-stamp writes; with epoch stamps this is
    exactly the reinitialization work the traversals pay, and it equals
    ``bfs_node_visits`` by construction.
    """

    bfs_node_visits: int = 0
    path_reversals: int = 0
    edges_processed: int = 0
    edges_accepted: int = 0
    lazy_reset_work: int = 0
    early_termination_hit: int = 0


@dataclass(frozen=True)
class ReversalPath:
    """A directed path from a deficient source node to a target.

    ``steps`` holds ``(arc_id, tail, head)`` snapshots in path order
    (source first); :meth:`InnerDigraph.reverse` revalidates them so a path
    cannot be applied after the digraph has moved on.
    """

    steps: tuple[tuple[int, int, int], ...]
    source: int
    target: int

    def __len__(self) -> int:
        return len(self.steps)


class InnerDigraph:
    """Orientation of the accepted edges with all indegrees at most ``k``."""

    __slots__ = (
        "n",
        "k",
        "arc_tail",
        "arc_head",
        "arc_edge",
        "inc",
        "in_arcs",
        "indeg",
        "counters",
        "_stamp",
        "_parent",
        "_epoch",
    )

    def __init__(self, n: int, k: int, counters: Instrumentation | None = None) -> None:
        if k < 1:
            raise ValueError(f"k must be positive, got {k}")
        self.n = n
        self.k = k
        self.arc_tail: list[int] = []
        self.arc_head: list[int] = []
        self.arc_edge: list[int] = []
        self.inc: list[list[int]] = [[] for _ in range(n)]
        self.in_arcs: list[list[int]] = [[] for _ in range(n)]
        self.indeg: list[int] = [0] * n
        self.counters = counters if counters is not None else Instrumentation()
        self._stamp = [0] * n
        self._parent = [0] * n
        self._epoch = 0

    @property
    def arc_count(self) -> int:
        return len(self.arc_tail)

    def insert_arc(self, edge: int, tail: int, head: int) -> int:
        """Add the arc ``tail -> head`` for ``edge``; returns the arc id."""
        if self.indeg[head] >= self.k:
            raise IndegreeOverflowError(
                f"head {head} already has indegree {self.indeg[head]} = k"
            )
        a = len(self.arc_tail)
        self.arc_tail.append(tail)
        self.arc_head.append(head)
        self.arc_edge.append(edge)
        self.inc[tail].append(a)
        if head != tail:
            self.inc[head].append(a)
        self.in_arcs[head].append(a)
        self.indeg[head] += 1
        return a

    def reverse(self, path: ReversalPath) -> None:
        """Flip every arc on ``path``, moving one indegree unit from
        ``path.target`` to ``path.source``.

        Raises :class:`StalePathError` if any arc no longer matches its
        snapshot.
        """
        arc_tail = self.arc_tail
        arc_head = self.arc_head
        for a, t, h in path.steps:
            if arc_tail[a] != t or arc_head[a] != h:
                raise StalePathError(f"arc {a} is no longer {t}->{h}")
        indeg = self.indeg
        in_arcs = self.in_arcs
        for a, t, h in path.steps:
            arc_tail[a] = h
            arc_head[a] = t
            in_arcs[h].remove(a)
            in_arcs[t].append(a)
            indeg[h] -= 1
            indeg[t] += 1
        self.counters.path_reversals += 1

    def _backward_search(
        self, targets: Sequence[int], forbidden: Sequence[int]
    ) -> tuple[int, list[int]]:
        """Backward BFS from ``targets`` along incoming arcs.

        Returns ``(source, visited)`` where ``source`` is the first node
        found with indegree below k outside ``forbidden`` and the targets
        themselves, or -1 if the whole backward closure is saturated; in
        either case ``visited`` lists every stamped node (the closure, when
        the search exhausted).
        """
        self._epoch += 1
        epoch = self._epoch
        stamp = self._stamp
        parent = self._parent
        indeg = self.indeg
        arc_tail = self.arc_tail
        in_arcs = self.in_arcs
        k = self.k
        c = self.counters

        queue = list(targets)
        for t in queue:
            stamp[t] = epoch
        visits = len(queue)
        found = -1
        append = queue.append
        for x in queue:
            for a in in_arcs[x]:
                y = arc_tail[a]
                if stamp[y] == epoch:
                    continue
                stamp[y] = epoch
                parent[y] = a
                visits += 1
                append(y)
                if indeg[y] < k and y not in forbidden:
                    found = y
                    break
            if found >= 0:
                break
        c.bfs_node_visits += visits
        c.lazy_reset_work += visits
        return found, queue

    def find_reversal_path(
        self, targets: Sequence[int], forbidden_sources: Sequence[int] = ()
    ) -> ReversalPath | None:
        """Find a directed path into one of ``targets`` from a node with
        indegree below k, excluding ``forbidden_sources`` and the targets
        themselves as sources.

        Searches backward from the targets, so the first source found is one
        of minimum arc distance; returns None when the backward closure holds
        no eligible deficient node.
        """
        source, _ = self._backward_search(targets, forbidden_sources)
        if source < 0:
            return None
        arc_tail = self.arc_tail
        arc_head = self.arc_head
        parent = self._parent
        steps = []
        node = source
        while node not in targets:
            a = parent[node]
            steps.append((a, arc_tail[a], arc_head[a]))
            node = arc_head[a]
        return ReversalPath(steps=tuple(steps), source=source, target=node)

    def saturated_closure(self, targets: Sequence[int]) -> list[int] | None:
        """Backward closure of ``targets`` if it contains no deficient node
        outside the targets, else None.

        The returned list is every node with a directed path to a target
        (targets included); all of them except possibly the targets have
        indegree exactly k.
        """
        source, visited = self._backward_search(targets, ())
        if source >= 0:
            return None
        return visited

    def multi_source_forward_reach(
        self,
        is_source: Callable[[int], bool],
        excluded: Iterable[int] = (),
    ) -> list[int]:
        """Nodes reachable by directed paths from any non-excluded node
        satisfying ``is_source``; excluded nodes are never visited."""
        self._epoch += 1
        epoch = self._epoch
        stamp = self._stamp
        arc_tail = self.arc_tail
        arc_head = self.arc_head
        inc = self.inc
        c = self.counters

        banned = set(excluded)
        queue = [
            v for v in range(self.n) if v not in banned and is_source(v)
        ]
        for v in queue:
            stamp[v] = epoch
        visits = len(queue)
        qi = 0
        while qi < len(queue):
            x = queue[qi]
            qi += 1
            for a in inc[x]:
                if arc_tail[a] != x:
                    continue
                y = arc_head[a]
                if stamp[y] == epoch or y in banned:
                    continue
                stamp[y] = epoch
                visits += 1
                queue.append(y)
        c.bfs_node_visits += visits
        c.lazy_reset_work += visits
        return queue

    def undirected_edges(self) -> list[tuple[int, int, int]]:
        """Current arcs as ``(min_endpoint, max_endpoint, edge_id)`` tuples,
        one per accepted edge (test/inspection helper)."""
        out = []
        for a in range(len(self.arc_tail)):
            t, h = self.arc_tail[a], self.arc_head[a]
            if t > h:
                t, h = h, t
            out.append((t, h, self.arc_edge[a]))
        return out
