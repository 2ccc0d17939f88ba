"""Undirected simple graphs on dense vertex ids and the set predicates used everywhere else."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, NamedTuple


class InputError(ValueError):
    """Malformed arguments: out-of-range vertices, loops, bad parameters."""


class DomainError(ValueError):
    """Well-formed input outside the hypotheses an operation requires."""


PREDICATE_MODES = ("independent", "vertex_cover", "dominating", "total_dominating", "oit_dominating")


@dataclass(frozen=True)
class Graph:
    n: int
    adjacency: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        if self.n < 0 or len(self.adjacency) != self.n:
            raise InputError("adjacency length must equal n")
        for v, nbrs in enumerate(self.adjacency):
            if v in nbrs:
                raise InputError(f"loop at vertex {v}")
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise InputError(f"neighbor {u} of {v} out of range")
                if v not in self.adjacency[u]:
                    raise InputError(f"asymmetric adjacency between {v} and {u}")

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @property
    def vertices(self) -> range:
        return range(self.n)

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple((u, v) for u in range(self.n) for v in sorted(self.adjacency[u]) if u < v)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Open neighborhoods as integer bitsets."""
        return tuple(sum(1 << u for u in nbrs) for nbrs in self.adjacency)

    def is_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def isolated_vertices(self) -> list[int]:
        return [v for v in range(self.n) if not self.adjacency[v]]

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            stack, comp = [s], []
            while stack:
                v = stack.pop()
                comp.append(v)
                for u in self.adjacency[v]:
                    if not seen[u]:
                        seen[u] = True
                        stack.append(u)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.components()) == 1

    def induced(self, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
        """Induced subgraph relabelled 0..k-1, plus the map back to original ids."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        adj = tuple(frozenset(index[u] for u in self.adjacency[v] if u in index) for v in keep)
        return Graph(len(keep), adj), keep


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if n < 0:
        raise InputError(f"vertex count must be non-negative, got {n}")
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise InputError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise InputError(f"loop at vertex {u}")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, tuple(frozenset(s) for s in adj))


@dataclass(frozen=True)
class DegreeProfile:
    degrees: tuple[int, ...]
    delta: int
    Delta: int
    leaves: frozenset[int]
    supports: frozenset[int]


def degree_profile(G: Graph) -> DegreeProfile:
    degrees = tuple(G.degree(v) for v in G.vertices)
    leaves = frozenset(v for v in G.vertices if degrees[v] == 1)
    supports = frozenset(u for v in leaves for u in G.neighbors(v))
    return DegreeProfile(
        degrees=degrees,
        delta=min(degrees, default=0),
        Delta=max(degrees, default=0),
        leaves=leaves,
        supports=supports,
    )


class PredicateResult(NamedTuple):
    ok: bool
    witness: int | tuple[int, int] | None = None

    def __bool__(self) -> bool:
        return self.ok


def _check_vertices(G: Graph, A: Iterable[int]) -> frozenset[int]:
    A = frozenset(A)
    for v in A:
        if not 0 <= v < G.n:
            raise InputError(f"vertex {v} out of range 0..{G.n - 1}")
    return A


def _first_edge_inside(G: Graph, A: frozenset[int]) -> tuple[int, int] | None:
    for u, v in G.edges:
        if u in A and v in A:
            return (u, v)
    return None


def set_predicate(G: Graph, A: Iterable[int], mode: str) -> PredicateResult:
    """Check a vertex set against one of PREDICATE_MODES.

    Failures carry the lowest violating vertex (domination modes) or the
    lexicographically first violating edge (independence / cover modes).
    """
    A = _check_vertices(G, A)
    if mode == "independent":
        edge = _first_edge_inside(G, A)
        return PredicateResult(edge is None, edge)
    if mode == "vertex_cover":
        edge = _first_edge_inside(G, frozenset(G.vertices) - A)
        return PredicateResult(edge is None, edge)
    if mode == "dominating":
        for v in G.vertices:
            if v not in A and not (G.neighbors(v) & A):
                return PredicateResult(False, v)
        return PredicateResult(True)
    if mode == "total_dominating":
        for v in G.vertices:
            if not (G.neighbors(v) & A):
                return PredicateResult(False, v)
        return PredicateResult(True)
    if mode == "oit_dominating":
        res = set_predicate(G, A, "total_dominating")
        if not res:
            return res
        return set_predicate(G, frozenset(G.vertices) - A, "independent")
    raise InputError(f"unknown predicate mode {mode!r}; expected one of {PREDICATE_MODES}")


def find_claw(G: Graph) -> tuple[int, int, int, int] | None:
    """Return (center, a, b, c) of an induced K_{1,3}, or None."""
    for v in G.vertices:
        nbrs = sorted(G.neighbors(v))
        if len(nbrs) < 3:
            continue
        for a, b, c in combinations(nbrs, 3):
            if not (G.is_edge(a, b) or G.is_edge(a, c) or G.is_edge(b, c)):
                return (v, a, b, c)
    return None


def is_claw_free(G: Graph) -> bool:
    return find_claw(G) is None
