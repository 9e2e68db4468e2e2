"""Adversary games that pin down how much advice online coloring needs.

The elimination game drives any finite family of deterministic algorithms
to 2*delta - 1 colors on a forest: each round it finds delta stars that
enough surviving members colored identically and hangs a new vertex off
their centers.  The permutation game wires two stars together through
couplers according to a permutation chosen only after the star edges were
colored, forcing delta + 1 colors out of anyone who committed too early.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Callable, Optional, Sequence

from .coloring import exact_color, konig_color
from .errors import (
    ImproperColoring,
    NoMonochromeFamily,
    PreconditionViolated,
)
from .generators import build_coupled_pair, coupler_edges
from .graphs import Edge, EdgeStream, Graph, Pair, edge_pair, stream_from_pairs
from .runtime import GreedyVariant, OnlineAlgorithm, RunReport, simulate


def pigeonhole_thresholds(delta: int) -> tuple[int, int]:
    """(alpha, beta): alpha stars force delta identically colored ones under
    a 2*delta-2 palette; beta bounds the number of possible selections."""
    if delta < 2:
        raise PreconditionViolated("need delta >= 2")
    alpha = (delta - 1) * comb(2 * delta - 2, delta - 1) + 1
    beta = comb(alpha, delta)
    return alpha, beta


def select_same_colored_stars(
    star_colors: Sequence[frozenset[int]], delta: int
) -> tuple[int, ...]:
    """Lexicographically first delta indices whose color sets coincide."""
    groups: dict[frozenset[int], list[int]] = {}
    for i, colors in enumerate(star_colors):
        groups.setdefault(colors, []).append(i)
    best: Optional[tuple[int, ...]] = None
    for indices in groups.values():
        if len(indices) >= delta:
            candidate = tuple(sorted(indices)[:delta])
            if best is None or candidate < best:
                best = candidate
    if best is None:
        raise NoMonochromeFamily(
            f"no {delta} stars share a color set among {len(star_colors)}"
        )
    return best


@dataclass
class _Member:
    alg: OnlineAlgorithm
    assignment: dict[Pair, int]
    used: dict[int, set[int]]
    alive: bool = True

    def observe(self, edge: Edge) -> None:
        color = self.alg.step(edge, None)
        au = self.used.setdefault(edge.u, set())
        av = self.used.setdefault(edge.v, set())
        if not isinstance(color, int) or color < 1 or color in au or color in av:
            raise ImproperColoring(f"member broke properness at {edge.pair}")
        self.assignment[edge.pair] = color
        au.add(color)
        av.add(color)

    def palette_size(self) -> int:
        return len(set(self.assignment.values()))


@dataclass(frozen=True)
class EliminationRound:
    row: int
    alive_before: int
    alive_after: int
    selected: tuple[int, ...]
    new_vertex: int


@dataclass
class EliminationTranscript:
    delta: int
    alpha: int
    beta: int
    rows: int
    rounds: list[EliminationRound]
    stream: EdgeStream
    colors_used: list[int]
    alive: list[bool]

    @property
    def all_dead(self) -> bool:
        return not any(self.alive)


def elimination_game(
    delta: int, family: Sequence[OnlineAlgorithm], rounds: int
) -> EliminationTranscript:
    """Play `rounds` star rows against every member of the family at once.

    Members stay alive while they have used at most 2*delta - 2 colors.
    Per round, at least ceil(alive/beta) members pick the same star family
    and are forced over the threshold, so alive counts shrink by at least
    that much; the game stops early once nobody survives.  The revealed
    graph stays a forest with max degree delta.
    """
    alpha, beta = pigeonhole_thresholds(delta)
    members = [_Member(alg, {}, {}) for alg in family]
    threshold = 2 * delta - 2

    edges: list[Edge] = []
    next_label = 0

    def fresh() -> int:
        nonlocal next_label
        next_label += 1
        return next_label - 1

    def reveal(u: int, v: int) -> None:
        edge = Edge(u, v, len(edges))
        edges.append(edge)
        for member in members:
            member.observe(edge)

    centers: list[list[int]] = []
    star_pairs: list[list[list[Pair]]] = []
    for _ in range(rounds):
        row_centers = []
        row_pairs = []
        for _ in range(alpha):
            center = fresh()
            leaves = [fresh() for _ in range(delta - 1)]
            for leaf in leaves:
                reveal(center, leaf)
            row_centers.append(center)
            row_pairs.append([edge_pair(center, leaf) for leaf in leaves])
        centers.append(row_centers)
        star_pairs.append(row_pairs)

    for member in members:
        member.alive = member.palette_size() <= threshold

    log: list[EliminationRound] = []
    for row in range(rounds):
        alive_before = sum(m.alive for m in members)
        if alive_before == 0:
            break
        votes: dict[tuple[int, ...], int] = {}
        for member in members:
            if not member.alive:
                continue
            sets = [
                frozenset(member.assignment[p] for p in pairs)
                for pairs in star_pairs[row]
            ]
            choice = select_same_colored_stars(sets, delta)
            votes[choice] = votes.get(choice, 0) + 1
        selected = min(votes, key=lambda s: (-votes[s], s))
        joint = fresh()
        for s in selected:
            reveal(joint, centers[row][s])
        for member in members:
            if member.alive and member.palette_size() > threshold:
                member.alive = False
        alive_after = sum(m.alive for m in members)
        kills_due = -(-alive_before // beta)  # ceil
        if alive_after > alive_before - kills_due:
            raise AssertionError("round killed fewer members than the pigeonhole bound")
        log.append(EliminationRound(row, alive_before, alive_after, selected, joint))

    return EliminationTranscript(
        delta,
        alpha,
        beta,
        rounds,
        log,
        EdgeStream(tuple(edges)),
        [m.palette_size() for m in members],
        [m.alive for m in members],
    )


def rounds_to_extinction(family_size: int, beta: int) -> int:
    """Rounds guaranteed to empty a family under the per-round decay."""
    import math

    if family_size < 1:
        return 0
    return math.ceil(math.log(family_size) / math.log(beta / (beta - 1))) + 1


@dataclass
class PermutationInstance:
    stream: EdgeStream
    delta: int
    pi: tuple[int, ...]
    x_star: list[Pair]   # (x, x_i) pairs in index order
    y_star: list[Pair]


def build_permutation_instance(delta: int, pi: Optional[Sequence[int]] = None) -> PermutationInstance:
    """Two delta-stars whose rays are joined through couplers along pi.

    Ray i of the first star is coupled to ray pi[i] of the second.  The
    result is bipartite, delta-regular, with delta**3 + delta edges, hence
    delta-edge-colorable; but a coloring that gives coupled rays different
    colors cannot stay within delta colors.
    """
    if delta < 2:
        raise PreconditionViolated("need delta >= 2")
    if pi is None:
        pi = tuple(range(delta))
    pi = tuple(pi)
    if sorted(pi) != list(range(delta)):
        raise PreconditionViolated(f"{pi} is not a permutation of 0..{delta - 1}")
    x, y = 0, delta + 1
    x_leaf = [1 + i for i in range(delta)]
    y_leaf = [delta + 2 + j for j in range(delta)]
    pairs: list[tuple[int, int]] = [(x, leaf) for leaf in x_leaf]
    pairs += [(y, leaf) for leaf in y_leaf]
    label = 2 * delta + 2
    n = delta - 1
    for i in range(delta):
        pairs += coupler_edges(n, x_leaf[i], y_leaf[pi[i]], label)
        label += 2 * n
    stream = stream_from_pairs(pairs)
    return PermutationInstance(
        stream,
        delta,
        pi,
        [edge_pair(x, leaf) for leaf in x_leaf],
        [edge_pair(y, leaf) for leaf in y_leaf],
    )


@dataclass
class PermutationGameResult:
    pi: tuple[int, ...]
    report: RunReport
    forced: bool  # used at least delta + 1 colors


def permutation_game(
    delta: int,
    make_alg: Callable[[], OnlineAlgorithm],
    *,
    final_run: Optional[Callable[[EdgeStream], RunReport]] = None,
) -> PermutationGameResult:
    """Observe the star colors, then couple rays so some pair disagrees.

    The probe run only sees the 2*delta star edges; determinism means a
    fresh instance replays the same prefix on the completed stream.  When
    `final_run` is given it produces the report instead (used to show that
    a consumer whose records are recomputed for the completed instance is
    immune).
    """
    if delta < 2:
        raise PreconditionViolated("need delta >= 2")
    probe_instance = build_permutation_instance(delta)
    star_edges = probe_instance.stream.edges[: 2 * delta]
    probe_stream = EdgeStream(star_edges)
    probe = make_alg()
    probe_report = simulate(probe_stream, probe)
    x_colors = [probe_report.coloring[p] for p in probe_instance.x_star]
    y_colors = [probe_report.coloring[p] for p in probe_instance.y_star]
    if x_colors == y_colors:
        pi = tuple([1, 0] + list(range(2, delta)))
    else:
        pi = tuple(range(delta))
    instance = build_permutation_instance(delta, pi)
    if final_run is not None:
        report = final_run(instance.stream)
    else:
        report = simulate(instance.stream, make_alg())
    return PermutationGameResult(pi, report, report.colors_used >= delta + 1)


def rigidity_check(n: int, *, budget: Optional[int] = None) -> bool:
    """Verify the coupled pair's color rigidity by exhaustive search.

    True iff the instance is (n+1)-edge-colorable, no proper (n+1)-coloring
    gives the two pendant edges different colors, and some (n+2)-coloring
    does.  Fixing the left pendant's color to 1 is pure symmetry breaking:
    any separating coloring can be renamed into that shape.
    """
    stream, e_l, e_r = build_coupled_pair(n)
    g = Graph.from_stream(stream)
    base = konig_color(g)
    if len(base.palette) != n + 1:
        return False
    separated = exact_color(
        g,
        n + 1,
        budget=budget,
        fixed={e_l.pair: 1},
        forbidden={e_r.pair: frozenset({1})},
    )
    if separated is not None:
        return False
    wider = exact_color(
        g,
        n + 2,
        budget=budget,
        fixed={e_l.pair: 1},
        forbidden={e_r.pair: frozenset({1})},
    )
    return wider is not None


def variant_family(bit_length: int, *, cycle: bool = True) -> list[GreedyVariant]:
    """All 2**bit_length greedy variants driven by distinct bit strings."""
    if bit_length == 0:
        return [GreedyVariant("", cycle=cycle)]
    return [
        GreedyVariant(format(i, f"0{bit_length}b"), cycle=cycle)
        for i in range(2**bit_length)
    ]


def prefix_family(max_bits: int) -> list[GreedyVariant]:
    """Every variant whose advice string is shorter than max_bits."""
    out = []
    for length in range(max_bits):
        out.extend(variant_family(length, cycle=False))
    return out
