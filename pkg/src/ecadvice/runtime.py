"""Online algorithms, advice sources, and the stream simulator.

The simulator owns the coloring: an algorithm only ever returns a color
for the edge just revealed, properness is re-checked after every step, and
advice consumption is metered by the source.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .advice import (
    AdviceRecord,
    AdviceTape,
    bits_per_edge,
    degeneracy_from_length,
    encode_tape,
    read_header,
    unpack_record,
)
from .coloring import Coloring
from .errors import AdviceExhausted, ImproperColoring, RecoloringAttempt
from .graphs import Edge, EdgeStream, Graph, Pair


class RequestSource:
    """Hands out one whole record per edge; bits are counted as delivered."""

    model = "request"

    def __init__(self, records: Iterable[AdviceRecord | str]):
        self._records = [r.bits if isinstance(r, AdviceRecord) else r for r in records]
        self._next = 0
        self.bits_read = 0

    def next_record(self) -> str:
        if self._next >= len(self._records):
            raise AdviceExhausted(f"no record for edge {self._next}")
        bits = self._records[self._next]
        self._next += 1
        self.bits_read += len(bits)
        return bits


class TapeSource:
    """Cursor over a single bit string; reads past the end raise."""

    model = "tape"

    def __init__(self, tape: AdviceTape | str):
        self._bits = tape.bits if isinstance(tape, AdviceTape) else tape
        self._pos = 0
        self.bits_read = 0

    def read(self, k: int) -> str:
        if self._pos + k > len(self._bits):
            raise AdviceExhausted(
                f"requested {k} bits at {self._pos} of {len(self._bits)}"
            )
        out = self._bits[self._pos : self._pos + k]
        self._pos += k
        self.bits_read += k
        return out

    def read_degeneracy(self) -> int:
        d, pos = read_header(self._bits, self._pos)
        self.bits_read += pos - self._pos
        self._pos = pos
        return d


class OnlineAlgorithm:
    def step(self, edge: Edge, advice) -> int:
        raise NotImplementedError


class Greedy(OnlineAlgorithm):
    """Smallest color absent at both endpoints; never exceeds 2*delta - 1."""

    def __init__(self) -> None:
        self._used: dict[int, set[int]] = {}

    def step(self, edge: Edge, advice=None) -> int:
        au = self._used.setdefault(edge.u, set())
        av = self._used.setdefault(edge.v, set())
        c = 1
        while c in au or c in av:
            c += 1
        au.add(c)
        av.add(c)
        return c


class GreedyVariant(OnlineAlgorithm):
    """Greedy nudged by a bit string: bit 1 takes the second-smallest legal
    color instead of the smallest.

    With cycle=True the string repeats forever; otherwise it is consumed
    once and the tail behaves like plain greedy.  The string is baked in at
    construction, so each string is a distinct deterministic algorithm,
    the shape a finite advice budget produces.
    """

    def __init__(self, bits: str = "", cycle: bool = True):
        if any(b not in "01" for b in bits):
            raise ValueError("bits must be a 0/1 string")
        self.bits = bits
        self.cycle = cycle
        self._step = 0
        self._used: dict[int, set[int]] = {}

    def _skip(self) -> int:
        if not self.bits:
            return 0
        i = self._step
        if i < len(self.bits):
            return int(self.bits[i])
        if self.cycle:
            return int(self.bits[i % len(self.bits)])
        return 0

    def step(self, edge: Edge, advice=None) -> int:
        skip = self._skip()
        self._step += 1
        au = self._used.setdefault(edge.u, set())
        av = self._used.setdefault(edge.v, set())
        c = 0
        remaining = skip
        while True:
            c += 1
            if c in au or c in av:
                continue
            if remaining == 0:
                break
            remaining -= 1
        au.add(c)
        av.add(c)
        return c


@dataclass(frozen=True)
class DecodedStep:
    """What the decoder extracted for one edge (kept for cross-checks)."""

    arrival: int
    mode: int
    subset: Optional[int]
    rank: Optional[int]
    color: int


class AdviceAlgorithm(OnlineAlgorithm):
    """Consumes one record per edge and reproduces the oracle's coloring.

    The degeneracy bound is never given out of band: in the request model
    it is recovered from the record length, in the tape model from the
    self-delimiting header.  Subset routing rebuilds the eligible-index set
    from per-vertex counters over previously arrived subset edges, then the
    rank picks the target; this matches the oracle because both only look
    at earlier arrivals around the front endpoint.
    """

    def __init__(self, mode: str = "robust"):
        if mode not in ("strict", "robust"):
            raise ValueError(f"unknown mode {mode!r}")
        self.mode = mode
        self.d: Optional[int] = None
        self.record_length: Optional[int] = None
        self._counts: dict[int, dict[int, int]] = {}
        self._rename: dict[tuple[int, int], int] = {}
        self._next_color = 1
        self.decoded: list[DecodedStep] = []

    def _fetch(self, advice) -> str:
        if advice is None:
            raise AdviceExhausted("advice source required")
        if advice.model == "request":
            bits = advice.next_record()
            if self.d is None:
                self.d = degeneracy_from_length(len(bits), self.mode)
                self.record_length = len(bits)
            return bits
        if self.d is None:
            self.d = advice.read_degeneracy()
            self.record_length = bits_per_edge(self.d, self.mode)
        return advice.read(self.record_length)

    def _locate_subset(self, front: int, rank: int) -> int:
        cap = 2 * self.d - 1
        counts = self._counts.get(front, {})
        j, seen = 1, 0
        while True:
            if counts.get(j, 0) <= cap:
                if seen == rank:
                    return j
                seen += 1
            j += 1

    def step(self, edge: Edge, advice) -> int:
        bits = self._fetch(advice)
        fields = unpack_record(bits, self.d, self.mode)
        if fields.mode_flag == 0:
            provisional = (0, fields.color)
            self.decoded.append(DecodedStep(edge.arrival, 0, None, None, fields.color))
        else:
            if self.mode == "strict":
                front = edge.u
            elif fields.front_flag == 0:
                front = min(edge.u, edge.v)
            else:
                front = max(edge.u, edge.v)
            subset = self._locate_subset(front, fields.rank)
            for v in (edge.u, edge.v):
                per = self._counts.setdefault(v, {})
                per[subset] = per.get(subset, 0) + 1
            provisional = (1, (subset - 1) * 2 * self.d + fields.color)
            self.decoded.append(
                DecodedStep(edge.arrival, 1, subset, fields.rank, fields.color)
            )
        final = self._rename.get(provisional)
        if final is None:
            final = self._next_color
            self._next_color += 1
            self._rename[provisional] = final
        return final


@dataclass
class RunReport:
    algorithm: str
    model: Optional[str]
    mode: Optional[str]
    n: int
    m: int
    delta: int
    d: Optional[int]
    colors_used: int
    advice_bits_read: int
    per_edge_bits: int
    coloring: Coloring
    chromatic_index: Optional[int] = None
    optimal: Optional[bool] = None

    def summary(self) -> dict:
        return {
            "colors_used": self.colors_used,
            "chromatic_index": self.chromatic_index,
            "optimal": self.optimal,
            "advice_bits_read": self.advice_bits_read,
            "m": self.m,
            "n": self.n,
            "delta": self.delta,
            "d": self.d,
            "mode": self.mode,
        }


def simulate(stream: EdgeStream, alg: OnlineAlgorithm, advice=None) -> RunReport:
    """Reveal edges in arrival order, enforcing properness at every step."""
    assignment: dict[Pair, int] = {}
    used: dict[int, set[int]] = {}
    for edge in stream.edges:
        color = alg.step(edge, advice)
        if not isinstance(color, int) or color < 1:
            raise ImproperColoring(f"edge {edge.pair}: color {color!r} is not a positive int")
        if edge.pair in assignment:
            raise RecoloringAttempt(f"edge {edge.pair} colored twice")
        au = used.setdefault(edge.u, set())
        av = used.setdefault(edge.v, set())
        if color in au or color in av:
            raise ImproperColoring(f"edge {edge.pair}: color {color} already present")
        assignment[edge.pair] = color
        au.add(color)
        av.add(color)
    g = Graph.from_stream(stream)
    return RunReport(
        algorithm=type(alg).__name__,
        model=getattr(advice, "model", None),
        mode=getattr(alg, "mode", None),
        n=g.n,
        m=g.m,
        delta=g.max_degree,
        d=getattr(alg, "d", None),
        colors_used=len(set(assignment.values())),
        advice_bits_read=getattr(advice, "bits_read", 0),
        per_edge_bits=getattr(alg, "record_length", None) or 0,
        coloring=Coloring(assignment),
    )


def run_greedy(stream: EdgeStream) -> RunReport:
    return simulate(stream, Greedy())


@dataclass
class AdviceRun:
    """Full oracle-to-decoder pipeline output."""

    report: RunReport
    oracle: "OracleResult"  # noqa: F821  (import cycle; see oracle.py)
    algorithm: AdviceAlgorithm
    source: RequestSource | TapeSource


def run_advice(
    stream: EdgeStream,
    d: Optional[int] = None,
    *,
    mode: str = "robust",
    model: str = "request",
    budget: Optional[int] = None,
) -> AdviceRun:
    """Oracle, then decoder, on the stream the oracle says to replay."""
    from .oracle import build_advice

    oracle = build_advice(stream, d, mode=mode, budget=budget)
    if model == "request":
        source: RequestSource | TapeSource = RequestSource(oracle.records)
    elif model == "tape":
        source = TapeSource(encode_tape(oracle.records, oracle.d))
    else:
        raise ValueError(f"unknown advice model {model!r}")
    alg = AdviceAlgorithm(mode)
    report = simulate(oracle.stream, alg, source)
    report.chromatic_index = oracle.chromatic_index
    report.optimal = report.colors_used == oracle.chromatic_index
    return AdviceRun(report, oracle, alg, source)
