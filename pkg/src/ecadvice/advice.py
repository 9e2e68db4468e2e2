"""Advice record layout and the self-delimiting tape codec.

A record carries, per edge: a mode flag, optionally a front flag (robust
layout only), a color field of ceil(log2(2d)) bits storing color-1, and a
rank field of ceil(log2(d+1)) bits.  Fields are big-endian, filler bits
zero.  Records are strings of '0'/'1' so dumps stay greppable.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import MalformedAdvice, MalformedTape, PreconditionViolated


def ceil_log2(x: int) -> int:
    """Smallest w with 2**w >= x, for x >= 1.

    >>> [ceil_log2(x) for x in (1, 2, 3, 4, 5, 8, 9)]
    [0, 1, 2, 2, 3, 3, 4]
    """
    if x < 1:
        raise PreconditionViolated("ceil_log2 needs x >= 1")
    return (x - 1).bit_length()


def encode_int(value: int, width: int) -> str:
    """Big-endian fixed-width bits.

    >>> encode_int(5, 4)
    '0101'
    """
    if value < 0 or value >= (1 << width):
        raise PreconditionViolated(f"{value} does not fit in {width} bits")
    return format(value, f"0{width}b") if width else ""


def decode_int(bits: str) -> int:
    return int(bits, 2) if bits else 0


def bits_per_edge(d: int, mode: str = "strict") -> int:
    """Record length for degeneracy bound d.

    Strict layout: 1 + ceil(log2(2d)) + ceil(log2(d+1)).  The robust layout
    spends one extra bit naming the front endpoint.

    >>> [bits_per_edge(d) for d in (1, 3, 5)]
    [3, 6, 8]
    """
    if d < 1:
        raise PreconditionViolated("d must be >= 1")
    base = 1 + ceil_log2(2 * d) + ceil_log2(d + 1)
    if mode == "strict":
        return base
    if mode == "robust":
        return base + 1
    raise PreconditionViolated(f"unknown mode {mode!r}")


def pad_degeneracy(d: int) -> int:
    """Largest d' >= d whose record length equals that of d.

    Encoding for the padded value is free, and it makes the record length
    an injective function of the padded d, so the consumer can recover d
    from the length alone.

    >>> [pad_degeneracy(d) for d in (1, 2, 3, 5)]
    [1, 2, 3, 7]
    """
    target = bits_per_edge(d)
    while bits_per_edge(d + 1) == target:
        d += 1
    return d


def degeneracy_from_length(length: int, mode: str = "strict") -> int:
    """Invert bits_per_edge, returning the padded representative.

    Raises MalformedAdvice when no d maps to `length`.
    """
    d = 1
    while bits_per_edge(d, mode) <= length:
        if bits_per_edge(d, mode) == length:
            return pad_degeneracy(d)
        d += 1
    raise MalformedAdvice(f"no degeneracy bound has {length}-bit records")


@dataclass(frozen=True)
class RecordFields:
    mode_flag: int          # 0: take the color field literally; 1: subset route
    front_flag: Optional[int]  # robust layout only; 0 means min-label endpoint is front
    color: int              # 1..2d
    rank: int               # 0..d for subset records, filler 0 otherwise


@dataclass(frozen=True)
class AdviceRecord:
    bits: str

    def __len__(self) -> int:
        return len(self.bits)


def pack_record(
    d: int,
    mode: str,
    mode_flag: int,
    color: int,
    rank: int,
    front_flag: int = 0,
) -> AdviceRecord:
    """Serialize one record; color is stored as color-1."""
    cw = ceil_log2(2 * d)
    rw = ceil_log2(d + 1)
    bits = str(mode_flag)
    if mode == "robust":
        bits += str(front_flag)
    elif mode != "strict":
        raise PreconditionViolated(f"unknown mode {mode!r}")
    bits += encode_int(color - 1, cw)
    bits += encode_int(rank, rw)
    return AdviceRecord(bits)


def unpack_record(bits: str, d: int, mode: str) -> RecordFields:
    """Parse one record; range checks raise MalformedAdvice."""
    if len(bits) != bits_per_edge(d, mode):
        raise MalformedAdvice(
            f"record length {len(bits)} != {bits_per_edge(d, mode)} for d={d}"
        )
    if any(b not in "01" for b in bits):
        raise MalformedAdvice("record contains non-bit characters")
    pos = 0
    mode_flag = int(bits[pos])
    pos += 1
    front_flag: Optional[int] = None
    if mode == "robust":
        front_flag = int(bits[pos])
        pos += 1
    cw = ceil_log2(2 * d)
    rw = ceil_log2(d + 1)
    color = decode_int(bits[pos : pos + cw]) + 1
    pos += cw
    rank = decode_int(bits[pos : pos + rw])
    if color > 2 * d:
        raise MalformedAdvice(f"color {color} exceeds 2d = {2 * d}")
    if mode_flag == 1 and rank > d:
        raise MalformedAdvice(f"rank {rank} exceeds d = {d}")
    return RecordFields(mode_flag, front_flag, color, rank)


@dataclass(frozen=True)
class AdviceTape:
    """Append-only bit string: header then records in arrival order."""

    bits: str


def encode_header(d: int) -> str:
    """Self-delimiting d: ceil(log2(d)) ones, a zero, then d in that many bits.

    d itself is written modulo 2**width, so the top value of each width
    class wraps to zero; the reader knows the width and undoes the wrap.

    >>> encode_header(1), encode_header(5)
    ('0', '1110101')
    """
    if d < 1:
        raise PreconditionViolated("d must be >= 1")
    width = ceil_log2(d)
    return "1" * width + "0" + encode_int(d % (1 << width) if width else 0, width)


def read_header(bits: str, pos: int = 0) -> tuple[int, int]:
    """Decode the header at `pos`; returns (d, next position).

    Raises MalformedTape when the tape ends inside the header.
    """
    width = 0
    while True:
        if pos >= len(bits):
            raise MalformedTape("tape ended inside the unary width prefix")
        if bits[pos] == "0":
            pos += 1
            break
        width += 1
        pos += 1
    if pos + width > len(bits):
        raise MalformedTape("tape ended inside the binary value field")
    if width == 0:
        return 1, pos
    value = decode_int(bits[pos : pos + width])
    d = value if value else 1 << width
    return d, pos + width


def encode_tape(records: Iterable[AdviceRecord], d: int) -> AdviceTape:
    """Header for d followed by the concatenated records."""
    return AdviceTape(encode_header(d) + "".join(r.bits for r in records))


def header_bits(d: int) -> int:
    return 2 * ceil_log2(d) + 1
