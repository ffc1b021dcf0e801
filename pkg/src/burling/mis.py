"""Exact maximum-weight independent set on Burling graphs.

The combined relation of a Burling set is chordal in the oriented sense:
both out-targets of any element are themselves related.  A topological
order of the relation is therefore a perfect elimination order of the graph
whose edges are the related pairs, and Frank's two-phase greedy solves
weighted independent set on that graph exactly.

solve_indep lifts this to the Burling graph itself (edges are only the adj
pairs): each element u carries the optimal solution inside its prec-cone
{x : x prec u}, folded into a boosted weight, and one chordal solve over
the whole relation combines the cones.  Elements of a selected cone are
nested inside u, hence non-adjacent to everything the top solution keeps.

Weights are nonnegative integers.
"""

from __future__ import annotations

import heapq

from .core import BurlingSet, _relation_maps
from .errors import ContractError, InputError
from .graph import Graph
from .recognition import recognize


def _check_weights(elements, weights) -> None:
    for x in elements:
        if x not in weights:
            raise InputError(f"no weight for element {x!r}")
        w = weights[x]
        if not isinstance(w, int) or isinstance(w, bool):
            raise InputError(f"weight of {x!r} must be an integer, got {w!r}")
        if w < 0:
            raise InputError(f"weight of {x!r} is negative")


def chordal_relation(b: BurlingSet) -> frozenset:
    """The combined relation prec ∪ adj, checked to be chordal.

    Chordal means acyclic with every out-target pair related in some
    direction.  Both follow from the axioms, so a failure here is a bug in
    the caller or this package, not bad input.
    """
    rel = b.prec | b.adj
    _topo_order(b.ordered(), rel)
    out = {x: set() for x in b.elements}
    for a, c in rel:
        out[a].add(c)
    for x, targets in out.items():
        ts = sorted(targets)
        for i, y in enumerate(ts):
            for z in ts[i + 1:]:
                if (y, z) not in rel and (z, y) not in rel:
                    raise ContractError(
                        f"out-targets {y!r}, {z!r} of {x!r} are unrelated"
                    )
    return frozenset(rel)


def _topo_order(order, rel) -> list:
    """Topological order of the relation, sources first, ascending-id ties.
    Raises ContractError on a cycle."""
    succ = {x: [] for x in order}
    indeg = {x: 0 for x in order}
    for a, c in rel:
        succ[a].append(c)
        indeg[c] += 1
    heap = [x for x in order if indeg[x] == 0]
    heapq.heapify(heap)
    out = []
    while heap:
        x = heapq.heappop(heap)
        out.append(x)
        for y in succ[x]:
            indeg[y] -= 1
            if indeg[y] == 0:
                heapq.heappush(heap, y)
    if len(out) != len(order):
        raise ContractError("combined relation has a cycle")
    return out


def mwis_chordal(elements, rel, weights) -> tuple:
    """Maximum-weight independent set of the graph whose edges are the
    related pairs, via the two-phase greedy over a perfect elimination
    order.  Returns (frozenset, weight).  Empty element set is fine.
    """
    order = sorted(elements)
    eset = set(order)
    _check_weights(order, weights)
    out = {x: [] for x in order}
    inc = {x: [] for x in order}
    for a, c in rel:
        if a not in eset or c not in eset:
            raise InputError(f"relation pair ({a!r}, {c!r}) leaves the element set")
        out[a].append(c)
        inc[c].append(a)
    relset = set(rel)
    for x in order:
        ts = sorted(set(out[x]))
        for i, y in enumerate(ts):
            for z in ts[i + 1:]:
                if (y, z) not in relset and (z, y) not in relset:
                    raise ContractError(f"relation is not chordal at {x!r}")

    peo = _topo_order(order, relset)
    residual = {x: weights[x] for x in order}
    marked = []
    for x in peo:
        r = residual[x]
        if r > 0:
            marked.append(x)
            for y in out[x]:
                residual[y] -= r
    chosen = set()
    for x in reversed(marked):
        if not any(y in chosen for y in out[x]) and not any(
            y in chosen for y in inc[x]
        ):
            chosen.add(x)
    return frozenset(chosen), sum(weights[x] for x in chosen)


def solve_indep(b: BurlingSet, weights) -> tuple:
    """Maximum-weight independent set of the Burling graph of b.

    Returns (frozenset of elements, weight).  Bottom-up over prec-cones:
    the cone of u is solved before u because it is strictly smaller than
    any cone containing u.
    """
    _check_weights(b.ordered(), weights)
    rel = chordal_relation(b)
    _, in_prec = _relation_maps(b.elements, b.prec)
    out_adj, in_adj = _relation_maps(b.elements, b.adj)

    memo = {}  # u -> (expanded solution inside the cone of u, its weight)

    def cone_solve(members):
        for x in members:
            if x not in memo:
                # only reachable when prec is not transitive
                raise ContractError(f"cone of {x!r} was not solved first")
        boosted = {x: weights[x] + memo[x][1] for x in members}
        sub_rel = [(a, c) for a, c in rel if a in members and c in members]
        core, _ = mwis_chordal(members, sub_rel, boosted)
        full = set(core)
        total = 0
        for x in core:
            full.update(memo[x][0])
            total += boosted[x]
        return frozenset(full), total

    for u in sorted(b.ordered(), key=lambda x: len(in_prec[x])):
        memo[u] = cone_solve(in_prec[u])

    result, total = cone_solve(frozenset(b.elements))
    for x in result:
        bad = (out_adj[x] | in_adj[x]) & result
        if bad:
            raise ContractError(
                f"solution contains the adjacent pair {x!r}, {sorted(bad)[0]!r}"
            )
    return result, total


def max_weight_independent_set(g: Graph, weights):
    """Recognize g and solve on the witness; None when g is not a Burling
    graph.  Weights map every vertex 0..n-1 to a nonnegative integer."""
    if set(weights) != set(range(g.n)):
        raise InputError("weights must cover exactly the vertices 0..n-1")
    b = recognize(g)
    if b is None:
        return None
    return solve_indep(b, weights)
