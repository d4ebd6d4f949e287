"""Rauzy graphs and enumeration of their Lie cycles."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

from .sources import FactorSet, WordSource, saturated_factors
from .words import Word


@dataclass(frozen=True)
class RauzyGraph:
    """Vertices are factors of length ``order - 1``, edges factors of length ``order``.

    Edge ``e`` runs from ``e[:-1]`` to ``e[1:]``.  At order 1 every edge is a
    loop on the empty word, so this is a multigraph in general.
    """

    order: int
    vertices: FrozenSet[Word]
    edges: FrozenSet[Word]
    certified: bool = False

    @staticmethod
    def start(e: Word) -> Word:
        return e[:-1]

    @staticmethod
    def end(e: Word) -> Word:
        return e[1:]

    @classmethod
    def from_factor_sets(cls, vertices: FactorSet, edges: FactorSet) -> "RauzyGraph":
        if edges.n != vertices.n + 1:
            raise ValueError("edge length must be vertex length + 1")
        return cls(edges.n, vertices.factors, edges.factors,
                   vertices.certified and edges.certified)

    def out_edges(self) -> Dict[Word, List[Word]]:
        out: Dict[Word, List[Word]] = {v: [] for v in self.vertices}
        for e in sorted(self.edges):
            out.setdefault(e[:-1], []).append(e)
        return out

    def out_degree(self, v: Word) -> int:
        return sum(1 for e in self.edges if e[:-1] == v)


@dataclass(frozen=True)
class LieCycle:
    """A simple cycle whose length divides the graph order.

    ``walk`` lists the edges in traversal order starting from the least
    edge; ``edge_set`` is the identity used for deduplication.
    """

    walk: Tuple[Word, ...]

    @property
    def edge_set(self) -> FrozenSet[Word]:
        return frozenset(self.walk)

    @property
    def length(self) -> int:
        return len(self.walk)

    @property
    def vertices(self) -> Tuple[Word, ...]:
        return tuple(e[:-1] for e in self.walk)


def rauzy_graph(source: WordSource, n: int) -> RauzyGraph:
    if n < 1:
        raise ValueError(f"Rauzy graphs have order >= 1, got {n}")
    return RauzyGraph.from_factor_sets(saturated_factors(source, n - 1),
                                       saturated_factors(source, n))


def _canonical_walk(walk: Iterable[Word]) -> Tuple[Word, ...]:
    walk = tuple(walk)
    i = walk.index(min(walk))
    return walk[i:] + walk[:i]


def simple_cycles(graph: RauzyGraph, max_length: Optional[int] = None) -> List[LieCycle]:
    """All simple cycles of length at most ``max_length``.

    Each cycle is found once, from its least vertex: the search from a start
    vertex only enters vertices ranked above it.  Cycles are keyed by edge
    set regardless.
    """
    if max_length is None:
        max_length = len(graph.vertices)
    out = graph.out_edges()
    order = sorted(graph.vertices)
    rank = {v: i for i, v in enumerate(order)}
    found: Dict[FrozenSet[Word], LieCycle] = {}
    for s in order:
        rs = rank[s]
        path: List[Word] = []
        on_path = {s}
        stack = [iter(out.get(s, ()))]
        while stack:
            e = next(stack[-1], None)
            if e is None:
                stack.pop()
                if path:
                    on_path.discard(path.pop()[1:])
                continue
            t = e[1:]
            if t == s:
                walk = _canonical_walk(path + [e])
                found.setdefault(frozenset(walk), LieCycle(walk))
                continue
            if t in on_path or rank.get(t, -1) <= rs or len(path) + 1 >= max_length:
                continue
            path.append(e)
            on_path.add(t)
            stack.append(iter(out.get(t, ())))
    return sorted(found.values(), key=lambda c: (c.length, c.walk))


def lie_cycles(graph: RauzyGraph) -> List[LieCycle]:
    """Simple cycles of ``graph`` whose length divides its order."""
    n = graph.order
    return [c for c in simple_cycles(graph, max_length=n) if n % c.length == 0]


def lie_complexity_via_rauzy(source: WordSource, n: int) -> int:
    return len(lie_cycles(rauzy_graph(source, n)))
