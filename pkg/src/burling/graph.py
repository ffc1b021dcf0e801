"""Simple undirected graphs on dense integer vertices.

Vertices are the integers 0..n-1.  Besides the graph type itself this module
carries the set machinery the recognizer is built on: neighborhoods of vertex
sets, connected components of induced subgraphs, triangle detection,
homogeneity of one set toward another, and nesting orders of set families.
"""

from __future__ import annotations

from typing import Iterable, Optional

from .errors import InputError


class Graph:
    """Immutable simple graph on vertices 0..n-1."""

    __slots__ = ("n", "edges", "adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if not isinstance(n, int) or n < 0:
            raise InputError(f"vertex count must be a nonnegative integer, got {n!r}")
        seen = set()
        adj = [set() for _ in range(n)]
        for e in edges:
            try:
                u, v = e
            except (TypeError, ValueError):
                raise InputError(f"edge must be a pair of vertices, got {e!r}") from None
            if not (isinstance(u, int) and isinstance(v, int)):
                raise InputError(f"edge endpoints must be integers, got {e!r}")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge {e!r} out of range for {n} vertices")
            if u > v:
                u, v = v, u
            if (u, v) in seen:
                raise InputError(f"duplicate edge ({u}, {v})")
            seen.add((u, v))
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self.edges = frozenset(seen)
        self.adj = tuple(frozenset(a) for a in adj)

    def neighbors(self, v: int) -> frozenset:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={len(self.edges)})"


def _as_vertex_set(g: Graph, s: Iterable[int]) -> frozenset:
    """Validate an iterable of vertices of g and return it as a frozenset."""
    out = frozenset(s)
    for v in out:
        if not isinstance(v, int) or not (0 <= v < g.n):
            raise InputError(f"vertex {v!r} out of range for {g.n} vertices")
    return out


def neighborhood(g: Graph, s: Iterable[int], closed: bool = False) -> tuple[int, ...]:
    """Open neighborhood N(s) of a vertex set, or closed N[s] with closed=True.

    N(s) is the set of vertices outside s with at least one neighbor in s.
    Returned sorted ascending.
    """
    sset = _as_vertex_set(g, s)
    acc = set()
    for v in sset:
        acc |= g.adj[v]
    if closed:
        acc |= sset
    else:
        acc -= sset
    return tuple(sorted(acc))


def components(g: Graph, s: Iterable[int]) -> list[tuple[int, ...]]:
    """Connected components of the subgraph induced by s.

    Each component is a sorted tuple; the list is ordered by smallest member.
    """
    sset = _as_vertex_set(g, s)
    return [tuple(sorted(c)) for c in _components_sets(g, sset)]


def _components_sets(g: Graph, sset: frozenset) -> list[frozenset]:
    """Components of g[sset] as frozensets, ordered by minimum vertex."""
    remaining = set(sset)
    out = []
    for start in sorted(sset):
        if start not in remaining:
            continue
        remaining.discard(start)
        comp = {start}
        frontier = {start}
        while frontier:
            new = set()
            for v in frontier:
                new |= g.adj[v]
            new &= remaining
            remaining -= new
            comp |= new
            frontier = new
        out.append(frozenset(comp))
    return out


def is_triangle_free(g: Graph) -> bool:
    """True iff no three vertices are pairwise adjacent."""
    for u, v in g.edges:
        if g.adj[u] & g.adj[v]:
            return False
    return True


def _homogeneous(g: Graph, s_prime: frozenset, s: frozenset) -> bool:
    for x in s:
        hit = s_prime & g.adj[x]
        if hit and hit != s_prime:
            return False
    return True


def is_homogeneous(g: Graph, s_prime: Iterable[int], s: Iterable[int]) -> bool:
    """True iff every x in s sees either all of s_prime or none of it."""
    sp = _as_vertex_set(g, s_prime)
    ss = _as_vertex_set(g, s)
    if sp & ss:
        raise InputError("homogeneity test requires disjoint sets")
    return _homogeneous(g, sp, ss)


def nesting_order(
    g: Graph, family: list[Iterable[int]]
) -> Optional[frozenset[tuple[int, int]]]:
    """Strict partial order on the indices of a nested family, else None.

    The family members must be pairwise disjoint vertex sets.  The family is
    nested when every pair (C1, C2) satisfies one of: N(C1) is a subset of
    N(C2) and homogeneous for C2; the same with roles swapped; or
    N(C1) and N(C2) are disjoint.  For a nested family this returns index
    pairs (i, j) meaning family[i] < family[j], such that comparable pairs
    satisfy the subset-and-homogeneous clause in that direction and
    incomparable pairs have disjoint neighborhoods.  Returns None when some
    pair violates all three clauses.

    Pairs whose neighborhoods are equal and homogeneous both ways are ordered
    by (neighborhood size, index), which keeps the relation transitive:
    homogeneity of a set for a target descends to subsets of that set, so a
    forced direction always agrees with that key.
    """
    sets = [_as_vertex_set(g, c) for c in family]
    for i in range(len(sets)):
        for j in range(i + 1, len(sets)):
            if sets[i] & sets[j]:
                raise InputError(f"family members {i} and {j} overlap")
    nbs = [frozenset(neighborhood(g, c)) for c in sets]
    order = set()
    for i in range(len(sets)):
        for j in range(i + 1, len(sets)):
            if not (nbs[i] & nbs[j]):
                continue
            fwd = nbs[i] <= nbs[j] and _homogeneous(g, nbs[i], sets[j])
            bwd = nbs[j] <= nbs[i] and _homogeneous(g, nbs[j], sets[i])
            if not fwd and not bwd:
                return None
            if fwd and bwd:
                if (len(nbs[i]), i) < (len(nbs[j]), j):
                    order.add((i, j))
                else:
                    order.add((j, i))
            elif fwd:
                order.add((i, j))
            else:
                order.add((j, i))
    return frozenset(order)
