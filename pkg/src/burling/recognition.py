"""Deciding whether a graph is a Burling graph.

The decision procedure is a dynamic program over two kinds of subproblems,
both parameterized by a "blocked" vertex set X that is either empty or the
closed neighborhood N[v] of a single center vertex v:

  unrooted(X, S)    S a component of V-X; wants a Burling set on N[S] whose
                    adjacency graph is the induced subgraph on N[S] and in
                    which every vertex of N(S) is a probe
  rooted(X, r, S)   S a component of V-(X+{r}) containing a neighbor of r;
                    wants the same with r a root and N(S)-{r} all probes

The answer to a subproblem depends only on S respectively (r, S): the
blocked set X never appears in the requirement, it only governs which
subproblems arise.  The memo is therefore keyed by the component itself
(respectively the root and the component), so the same subproblem reached
under different blocked sets is solved once.  Subproblems are solved by
memoized recursion, so only the subproblems an instance actually demands
are ever created; every recursive call strictly shrinks S, so the
recursion depth is bounded by the vertex count.

The graph is a Burling graph exactly when unrooted(empty, C) is solvable for
every component C, and the union of those solutions is a witness.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass

from .core import BurlingSet, classify_elements, induced_graph, verify_axioms
from .errors import ContractError
from .graph import Graph, _components_sets, is_triangle_free, nesting_order


@dataclass(frozen=True)
class BurlingStructure:
    """A solved subproblem: the connected set it is around, and a Burling
    set on its closed neighborhood."""

    around: frozenset
    structure: BurlingSet


class RecognitionMemo:
    """Solved-subproblem cache for one recognition run.

    Failures are cached exactly like successes (value None).  The table is
    written only by the run that owns it.
    """

    def __init__(self, g: Graph, debug: bool = False):
        self.g = g
        self.debug = debug
        self.unrooted = {}  # S -> BurlingStructure | None
        self.rooted = {}  # (root, S) -> BurlingStructure | None

    @property
    def subproblem_count(self) -> int:
        return len(self.unrooted) + len(self.rooted)


@dataclass(frozen=True)
class RecognitionStats:
    unrooted_count: int
    rooted_count: int

    @property
    def subproblem_count(self) -> int:
        return self.unrooted_count + self.rooted_count


def _neighborhood(g: Graph, s) -> frozenset:
    """Open neighborhood N(s)."""
    acc = set()
    for x in s:
        acc |= g.adj[x]
    return frozenset(acc - s)


def _closed_region(g: Graph, s: frozenset):
    """(N(S), N[S]) for a vertex set s."""
    ns = _neighborhood(g, s)
    return ns, s | ns


def solve_unrooted(g: Graph, memo: RecognitionMemo, x_center, s) -> "BurlingStructure | None":
    s = frozenset(s)
    if s in memo.unrooted:
        return memo.unrooted[s]
    result = _compute_unrooted(g, memo, x_center, s)
    if memo.debug and result is not None:
        _assert_solution(g, s, result, root=None)
    memo.unrooted[s] = result
    return result


def _compute_unrooted(g, memo, x_center, s):
    ns, nclosed = _closed_region(g, s)
    # N(S) is independent (it sits inside the neighborhood of the center,
    # and the graph is triangle-free), so each p in N(S) meets N[S] only
    # within S itself.
    reach = {p: g.adj[p] & nclosed for p in ns}
    for r in sorted(s):
        comps = _components_sets(g, s - {r})
        ok = True
        for t in reach.values():
            rest = t - {r}
            if not rest:
                continue
            home = next((c for c in comps if rest & c), None)
            if home is None or not rest <= home:
                ok = False
                break
        if not ok:
            continue
        subs = []
        for c in comps:
            sol = solve_rooted(g, memo, x_center, r, c)
            if sol is None:
                break
            subs.append(sol)
        else:
            prec = set()
            adj = set()
            for sub in subs:
                prec |= sub.structure.prec
                adj |= sub.structure.adj
            for p, t in reach.items():
                if t == {r}:
                    adj.add((p, r))
            return BurlingStructure(s, BurlingSet(nclosed, prec, adj))
    return None


def solve_rooted(g: Graph, memo: RecognitionMemo, x_center, r, s) -> "BurlingStructure | None":
    s = frozenset(s)
    key = (r, s)
    if key in memo.rooted:
        return memo.rooted[key]
    result = _compute_rooted(g, memo, x_center, r, s)
    if memo.debug and result is not None:
        _assert_solution(g, s, result, root=r)
    memo.rooted[key] = result
    return result


def _compute_rooted(g, memo, x_center, r, s):
    nr = g.adj[r]
    ns, nclosed = _closed_region(g, s)

    # Split off the part of s not adjacent to r and classify each component:
    # inner ones will be represented nested inside r, outer ones beside r,
    # attached through their single link vertex q.  A component that
    # qualifies both ways is taken as inner.
    inner = []
    outer = []  # (component, q)
    for c in _components_sets(g, s - nr):
        nc = _neighborhood(g, c)
        if nc <= nr and solve_unrooted(g, memo, r, c) is not None:
            inner.append(c)
            continue
        link = nc & nr
        if len(link) == 1:
            (q,) = link
            if q in s and solve_rooted(g, memo, x_center, q, c) is not None:
                outer.append((c, q))
                continue
        return None

    # Every outside probe must fall into one of three shapes: reaching only
    # r and inner territory, confined to a single outer component plus its
    # link, or pendant on a single neighbor of r inside s.
    inner_zone = frozenset(x for c in inner for x in c) | {r}
    pendant = []  # (p, q) pairs realized below
    for p in sorted(ns - {r}):
        t = g.adj[p] & nclosed
        if t <= inner_zone:
            continue
        if len(t) == 1:
            (q,) = t
            if q in nr and q in s:
                pendant.append((p, q))
                continue
        if not any(t <= c | {q} for c, q in outer):
            return None

    order = nesting_order(g, inner)
    if order is None:
        return None

    prec = set()
    adj = set()
    for c in inner:
        sub = solve_unrooted(g, memo, r, c)
        prec |= sub.structure.prec
        adj |= sub.structure.adj
    for c, q in outer:
        sub = solve_rooted(g, memo, x_center, q, c)
        prec |= sub.structure.prec
        adj |= sub.structure.adj
    for c in inner:
        for x in c:
            prec.add((x, r))
    for i, j in order:
        c1, c2 = inner[i], inner[j]
        nb1 = _neighborhood(g, c1)
        targets = [y for y in c2 if g.adj[y] & nb1]
        for x in c1:
            for y in targets:
                prec.add((x, y))
    for q in nr & nclosed:
        adj.add((q, r))
    for p, q in pendant:
        adj.add((p, q))
    return BurlingStructure(s, BurlingSet(nclosed, prec, adj))


def _assert_solution(g, s, sol, root):
    """Debug-mode postcondition check for one memo entry."""
    ns, nclosed = _closed_region(g, s)
    b = sol.structure
    if sol.around != s or b.elements != nclosed:
        raise ContractError("subproblem solution covers the wrong element set")
    report = verify_axioms(b)
    if not report.ok:
        raise ContractError(f"subproblem solution breaks axioms: {report.lines()[0]}")
    order = sorted(nclosed)
    want = Graph(
        len(order),
        (
            (i, j)
            for i, x in enumerate(order)
            for j, y in enumerate(order)
            if i < j and y in g.adj[x]
        ),
    )
    if induced_graph(b) != want:
        raise ContractError("subproblem solution does not realize the induced subgraph")
    cls = classify_elements(b)
    probes_wanted = ns if root is None else ns - {root}
    if not probes_wanted <= cls.probes:
        raise ContractError("outside vertices are not all probes in the solution")
    if root is not None and root not in cls.roots:
        raise ContractError("designated root is not a root in the solution")


def _recognize(g: Graph, memo: RecognitionMemo):
    if g.n == 0:
        return None
    if not is_triangle_free(g):
        return None
    limit = sys.getrecursionlimit()
    needed = 6 * g.n + 200
    if limit < needed:
        sys.setrecursionlimit(needed)
    try:
        elements = set()
        prec = set()
        adj = set()
        for comp in _components_sets(g, frozenset(range(g.n))):
            sol = solve_unrooted(g, memo, None, comp)
            if sol is None:
                return None
            elements |= sol.structure.elements
            prec |= sol.structure.prec
            adj |= sol.structure.adj
        return BurlingSet(elements, prec, adj)
    finally:
        if limit < needed:
            sys.setrecursionlimit(limit)


def recognize(g: Graph, debug: bool = False) -> "BurlingSet | None":
    """A Burling set whose adjacency graph is g, or None if none exists.

    Vertices of g become the elements of the result.  Graphs containing a
    triangle are rejected up front.  With debug=True every memoized
    subproblem solution is re-checked against its postconditions.
    """
    return _recognize(g, RecognitionMemo(g, debug))


def recognize_with_stats(g: Graph, debug: bool = False):
    """Like recognize, also reporting how many distinct subproblems the run
    created (solved or failed)."""
    memo = RecognitionMemo(g, debug)
    result = _recognize(g, memo)
    return result, RecognitionStats(len(memo.unrooted), len(memo.rooted))
