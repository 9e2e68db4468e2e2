"""Offline edge-coloring engines.

exact_color is the ground-truth engine: complete backtracking with a
saturation-first edge order and first-use color symmetry breaking, capped
by a node budget.  vizing_plus_one and konig_color are the polynomial
constructions for max_degree+1 colors and for bipartite graphs.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Mapping, Optional

from .errors import NotBipartite, PreconditionViolated, ResourceLimit
from .graphs import Graph, Pair, bipartition, degeneracy, edge_pair, is_bipartite

DEFAULT_NODE_BUDGET = 10_000_000
_BUDGET_ENV = "ECADVICE_NODE_BUDGET"


def node_budget(budget: Optional[int]) -> int:
    if budget is not None:
        return budget
    return int(os.environ.get(_BUDGET_ENV, DEFAULT_NODE_BUDGET))


@dataclass(frozen=True)
class Coloring:
    """Proper edge coloring keyed by normalized endpoint pair."""

    assignment: Mapping[Pair, int]

    @property
    def palette(self) -> frozenset[int]:
        return frozenset(self.assignment.values())

    def get(self, pair: Pair) -> Optional[int]:
        return self.assignment.get(pair)

    def __getitem__(self, pair: Pair) -> int:
        return self.assignment[pair]

    def __len__(self) -> int:
        return len(self.assignment)


def exact_color(
    g: Graph,
    k: int,
    *,
    budget: Optional[int] = None,
    fixed: Optional[Mapping[Pair, int]] = None,
    forbidden: Optional[Mapping[Pair, frozenset[int]]] = None,
) -> Optional[Coloring]:
    """Search for a proper edge coloring with colors 1..k.

    Returns None when no such coloring exists.  `fixed` pins colors of some
    edges; `forbidden` excludes per-edge color sets (both used by the gadget
    rigidity check).  Colors above the largest one referenced so far are
    interchangeable, so branching is capped at max_used+1, which keeps the
    search complete while pruning palette permutations.

    Raises ResourceLimit when the node budget is exhausted.
    """
    if k < 0:
        raise PreconditionViolated("k must be nonnegative")
    fixed = dict(fixed or {})
    forbidden = {p: frozenset(cs) for p, cs in (forbidden or {}).items()}
    limit = node_budget(budget)

    if g.m == 0:
        return Coloring({})
    if k < g.max_degree:
        return None

    for pair, c in fixed.items():
        if pair not in g.pairs:
            raise PreconditionViolated(f"fixed pair {pair} not in graph")
        if not 1 <= c <= k or c in forbidden.get(pair, frozenset()):
            return None

    used: dict[int, set[int]] = {v: set() for v in g.vertices}
    assignment: dict[Pair, int] = {}
    for pair, c in fixed.items():
        u, v = pair
        if c in used[u] or c in used[v]:
            return None
        used[u].add(c)
        used[v].add(c)
        assignment[pair] = c

    # Colors referenced by constraints are pinned and excluded from the
    # symmetry cap.
    reserved = max(
        [c for c in fixed.values()] + [c for cs in forbidden.values() for c in cs],
        default=0,
    )
    remaining = [e for e in g.edges if e.pair not in assignment]
    nodes = 0

    def pick() -> int:
        best = -1
        best_key = None
        for idx, e in enumerate(remaining):
            if e is None:
                continue
            sat = len(used[e.u] | used[e.v])
            key = (sat, g.degree[e.u] + g.degree[e.v], -e.arrival)
            if best_key is None or key > best_key:
                best_key = key
                best = idx
        return best

    def solve(max_used: int) -> bool:
        nonlocal nodes
        idx = pick()
        if idx < 0:
            return True
        nodes += 1
        if nodes > limit:
            raise ResourceLimit(f"exact search exceeded {limit} nodes")
        e = remaining[idx]
        remaining[idx] = None
        bad = forbidden.get(e.pair, frozenset())
        cap = min(k, max(max_used, reserved) + 1)
        for c in range(1, cap + 1):
            if c in bad or c in used[e.u] or c in used[e.v]:
                continue
            used[e.u].add(c)
            used[e.v].add(c)
            assignment[e.pair] = c
            if solve(max(max_used, c)):
                remaining[idx] = e
                return True
            used[e.u].remove(c)
            used[e.v].remove(c)
            del assignment[e.pair]
        remaining[idx] = e
        return False

    start_max = max(assignment.values(), default=0)
    if solve(start_max):
        return Coloring(dict(assignment))
    return None


def brute_force_colorable(g: Graph, k: int) -> bool:
    """Independent oracle: exhaustive recursion over edges in arrival order.

    No ordering heuristics, no symmetry breaking, no budget; every proper
    prefix of every assignment in {1..k}^m is visited.  Only sensible for
    tiny graphs.
    """
    edges = g.edges
    used: dict[int, set[int]] = {v: set() for v in g.vertices}

    def extend(i: int) -> bool:
        if i == len(edges):
            return True
        e = edges[i]
        for c in range(1, k + 1):
            if c in used[e.u] or c in used[e.v]:
                continue
            used[e.u].add(c)
            used[e.v].add(c)
            if extend(i + 1):
                return True
            used[e.u].remove(c)
            used[e.v].remove(c)
        return False

    if g.m == 0:
        return True
    return extend(0)


def brute_force_chromatic_index(g: Graph) -> int:
    """Smallest k with a proper k-edge-coloring, found by scanning k upward."""
    k = 0
    while True:
        if brute_force_colorable(g, k):
            return k
        k += 1


def chromatic_index(g: Graph, *, budget: Optional[int] = None) -> int:
    """max_degree or max_degree+1; bipartite graphs settle without search."""
    if g.m == 0:
        return 0
    delta = g.max_degree
    if is_bipartite(g):
        return delta
    # any proper coloring uses >= delta distinct colors, so a fan-recoloring
    # run that lands on exactly delta is already a class-1 witness
    if len(set(vizing_plus_one(g).assignment.values())) == delta:
        return delta
    if exact_color(g, delta, budget=budget) is not None:
        return delta
    return delta + 1


def vizing_plus_one(g: Graph, *, check: bool = False) -> Coloring:
    """Proper coloring with at most max_degree+1 colors in polynomial time.

    Fan recoloring: each uncolored edge grows a maximal fan around one
    endpoint, a two-color alternating path is flipped, and a prefix of the
    fan is rotated.  `check` re-verifies properness after every edge (used
    by tests).
    """
    k = g.max_degree + 1
    color: dict[Pair, int] = {}
    at: dict[int, dict[int, Pair]] = {v: {} for v in g.vertices}

    def free(v: int) -> int:
        for c in range(1, k + 1):
            if c not in at[v]:
                return c
        raise AssertionError("palette exhausted at a vertex of degree <= k-1")

    def set_color(u: int, v: int, c: int) -> None:
        pair = edge_pair(u, v)
        color[pair] = c
        at[u][c] = pair
        at[v][c] = pair

    def unset_color(u: int, v: int) -> int:
        pair = edge_pair(u, v)
        c = color.pop(pair)
        del at[u][c]
        del at[v][c]
        return c

    def flip_path(start: int, first: int, second: int) -> None:
        """Swap colors first/second along the alternating path from start."""
        cur, want = start, first
        path: list[tuple[Pair, int]] = []
        seen = {start}
        while want in at[cur]:
            pair = at[cur][want]
            path.append((pair, want))
            cur = pair[0] if pair[1] == cur else pair[1]
            if cur in seen:  # paths are simple; a repeat would be a bug
                raise AssertionError("alternating path revisited a vertex")
            seen.add(cur)
            want = second if want == first else first
        for pair, old in path:
            u, v = pair
            del at[u][old]
            del at[v][old]
        for pair, old in path:
            new = second if old == first else first
            u, v = pair
            color[pair] = new
            at[u][new] = pair
            at[v][new] = pair

    for e in g.edges:
        anchor, tip = (e.u, e.v) if e.u < e.v else (e.v, e.u)
        # Maximal fan: each next edge's color is free at the previous vertex.
        fan = [tip]
        in_fan = {tip}
        while True:
            last = fan[-1]
            candidate = None
            for c in range(1, k + 1):
                if c in at[last]:
                    continue
                pair = at[anchor].get(c)
                if pair is None:
                    continue
                z = pair[0] if pair[1] == anchor else pair[1]
                if z not in in_fan and (candidate is None or z < candidate):
                    candidate = z
            if candidate is None:
                break
            fan.append(candidate)
            in_fan.add(candidate)
        a = free(anchor)
        b = free(fan[-1])
        if b in at[anchor]:
            flip_path(anchor, b, a)
        # Some prefix of the fan now ends at a vertex missing b and is still
        # a valid fan; rotate it and finish with b.
        chosen = -1
        for idx in range(len(fan)):
            if b in at[fan[idx]]:
                continue
            ok = True
            for t in range(idx):
                c_next = color[edge_pair(anchor, fan[t + 1])]
                if c_next in at[fan[t]]:
                    ok = False
                    break
            if ok:
                chosen = idx
                break
        if chosen < 0:
            raise AssertionError("fan rotation target missing")
        shifted = [color[edge_pair(anchor, fan[t + 1])] for t in range(chosen)]
        for t in range(chosen):
            unset_color(anchor, fan[t + 1])
        for t in range(chosen):
            set_color(anchor, fan[t], shifted[t])
        set_color(anchor, fan[chosen], b)
        if check:
            from .graphs import is_proper

            if not is_proper(g, color):
                raise AssertionError("fan step broke properness")
    return Coloring(dict(color))


def konig_color(g: Graph) -> Coloring:
    """Exactly max_degree colors on a bipartite graph.

    Each edge either takes a color free at both ends or flips one
    two-colored alternating path to make one free.  Raises NotBipartite.
    """
    bipartition(g)  # raises on odd cycles
    delta = g.max_degree
    color: dict[Pair, int] = {}
    at: dict[int, dict[int, Pair]] = {v: {} for v in g.vertices}

    def free(v: int) -> int:
        for c in range(1, delta + 1):
            if c not in at[v]:
                return c
        raise AssertionError("no free color at a vertex of degree < delta")

    for e in g.edges:
        u, v = e.u, e.v
        a = free(u)
        b = free(v)
        if a == b:
            c = a
        elif a not in at[v]:
            c = a
        elif b not in at[u]:
            c = b
        else:
            # a used at v, b used at u: flip the b/a path from u; in a
            # bipartite graph it cannot reach v, so b becomes free at both.
            cur, want = u, b
            path: list[Pair] = []
            while want in at[cur]:
                pair = at[cur][want]
                path.append(pair)
                cur = pair[0] if pair[1] == cur else pair[1]
                want = a if want == b else b
            if cur == v:
                raise AssertionError("alternating path reached the far endpoint")
            for pair in path:
                old = color[pair]
                x, y = pair
                del at[x][old]
                del at[y][old]
            for pair in path:
                old = color[pair]
                new = a if old == b else b
                x, y = pair
                color[pair] = new
                at[x][new] = pair
                at[y][new] = pair
            c = b
        color[e.pair] = c
        at[u][c] = e.pair
        at[v][c] = e.pair
    return Coloring(dict(color))


def color_degenerate(g: Graph, d: int, *, budget: Optional[int] = None) -> Coloring:
    """Executable witness that degeneracy <= d and max_degree >= 2d force a
    max_degree coloring; delegates to exact_color."""
    dgn, _ = degeneracy(g)
    if dgn > d:
        raise PreconditionViolated(f"degeneracy {dgn} exceeds {d}")
    if g.max_degree < 2 * d:
        raise PreconditionViolated(f"max degree {g.max_degree} below {2 * d}")
    coloring = exact_color(g, g.max_degree, budget=budget)
    if coloring is None:
        raise AssertionError("max_degree coloring must exist here")
    return coloring
