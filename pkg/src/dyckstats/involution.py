"""Cut-line decomposition of Dyck paths and the block-reflection involution.

Fix m >= 2 and cut a path of height at least m-1 along the lines
L_i : y = m*i - 1.  A single left-to-right scan factors the path into an
initial segment (up to the first arrival on L_1), middle segments that are
above-blocks, under-blocks, upward links or downward links, and a terminal
segment (from the last departure off L_1).  Reflecting every block about its
own cut line while keeping links and end segments fixed is an involution on
paths; it swaps the roles of the up steps at heights divisible by m and those
at heights congruent to m-1, shifting the pair of counts (j, k) to
(k+1, j-1).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

from .errors import HeightTooLowError, NotReflectableError
from .paths import DOWN, UP, DyckPath, Step, up_steps_at_residue

__all__ = [
    "SegmentKind",
    "Segment",
    "StandardForm",
    "ResidueClass",
    "decompose_standard",
    "reflect_segment",
    "reflect_blocks",
    "residue_class",
    "residue_shift",
    "segment_residue_counts",
]


class SegmentKind(Enum):
    INITIAL = "initial"
    ABOVE_BLOCK = "above-block"
    UNDER_BLOCK = "under-block"
    UPWARD_LINK = "upward-link"
    DOWNWARD_LINK = "downward-link"
    TERMINAL = "terminal"


_BLOCKS = (SegmentKind.ABOVE_BLOCK, SegmentKind.UNDER_BLOCK)


@dataclass(frozen=True)
class Segment:
    """A contiguous piece of a path; line is the cut-line index for S1-S4."""

    kind: SegmentKind
    line: int | None
    start_altitude: int
    steps: tuple[Step, ...]

    @property
    def end_altitude(self) -> int:
        delta = sum(1 if s is UP else -1 for s in self.steps)
        return self.start_altitude + delta

    def word(self) -> str:
        return "".join("U" if s is UP else "D" for s in self.steps)

    def __len__(self) -> int:
        return len(self.steps)


@dataclass(frozen=True)
class StandardForm:
    """Ordered factorisation of a path along the cut lines y = m*i - 1."""

    m: int
    segments: tuple[Segment, ...]

    def reassemble(self) -> DyckPath:
        steps: list[Step] = []
        for seg in self.segments:
            steps.extend(seg.steps)
        return DyckPath(steps)

    def to_json(self) -> str:
        return json.dumps(
            [
                {"kind": seg.kind.value, "line": seg.line, "steps": seg.word()}
                for seg in self.segments
            ]
        )


def decompose_standard(path: DyckPath, m: int) -> StandardForm:
    """Factor a path of height >= m-1 into its standard form for modulus m."""
    if m < 2:
        raise HeightTooLowError(f"modulus must be >= 2, got {m}")
    if path.height() < m - 1:
        raise HeightTooLowError(
            f"height {path.height()} < {m - 1}; path has no standard form"
        )
    steps = path.steps
    alts = path.altitudes()
    total = len(steps)

    first = alts.index(m - 1)
    segments = [
        Segment(SegmentKind.INITIAL, None, 0, steps[: first + 1])
    ]
    pos = first + 1
    i = 1
    while pos < total:
        line_alt = m * i - 1
        if steps[pos] is UP:
            upper = m * (i + 1) - 1
            k = pos
            while True:
                if alts[k] == line_alt:
                    segments.append(
                        Segment(SegmentKind.ABOVE_BLOCK, i, line_alt, steps[pos : k + 1])
                    )
                    break
                if alts[k] == upper:
                    segments.append(
                        Segment(SegmentKind.UPWARD_LINK, i, line_alt, steps[pos : k + 1])
                    )
                    i += 1
                    break
                k += 1
            pos = k + 1
        else:
            lower = m * (i - 1) - 1
            k = pos
            terminal = False
            while True:
                if k == total:
                    terminal = True  # never returns to L_1: the rest is terminal
                    break
                if alts[k] == line_alt:
                    segments.append(
                        Segment(SegmentKind.UNDER_BLOCK, i, line_alt, steps[pos : k + 1])
                    )
                    break
                if i >= 2 and alts[k] == lower:
                    segments.append(
                        Segment(
                            SegmentKind.DOWNWARD_LINK, i, line_alt, steps[pos : k + 1]
                        )
                    )
                    i -= 1
                    break
                k += 1
            if terminal:
                segments.append(
                    Segment(SegmentKind.TERMINAL, None, line_alt, steps[pos:])
                )
                pos = total
            else:
                pos = k + 1
    assert segments[-1].kind is SegmentKind.TERMINAL, "scan must end in a terminal"
    assert sum(len(s) for s in segments) == total
    return StandardForm(m=m, segments=tuple(segments))


def _complement(steps: tuple[Step, ...]) -> tuple[Step, ...]:
    return tuple(DOWN if s is UP else UP for s in steps)


def reflect_segment(seg: Segment) -> Segment:
    """Reflect a block about its cut line; swaps above-block and under-block."""
    if seg.kind not in _BLOCKS:
        raise NotReflectableError(f"cannot reflect a segment of kind {seg.kind.value}")
    kind = (
        SegmentKind.UNDER_BLOCK
        if seg.kind is SegmentKind.ABOVE_BLOCK
        else SegmentKind.ABOVE_BLOCK
    )
    return Segment(
        kind=kind,
        line=seg.line,
        start_altitude=seg.start_altitude,
        steps=_complement(seg.steps),
    )


def reflect_blocks(path: DyckPath, m: int) -> DyckPath:
    """Involution: reflect every block of the standard form, fix everything else.

    Paths of height below m-1 are fixed points.
    """
    if path.height() < m - 1:
        return path
    out: list[Step] = []
    for seg in decompose_standard(path, m).segments:
        if seg.kind in _BLOCKS:
            out.extend(_complement(seg.steps))
        else:
            out.extend(seg.steps)
    return DyckPath(out)


class ResidueClass(NamedTuple):
    """j: up steps at height = m-1 (mod m); k: up steps at height = 0 (mod m)."""

    j: int
    k: int


def residue_class(path: DyckPath, m: int) -> ResidueClass:
    return ResidueClass(
        j=up_steps_at_residue(path, m, {m - 1}),
        k=up_steps_at_residue(path, m, {0}),
    )


def residue_shift(path: DyckPath, m: int) -> DyckPath:
    """Carry a path of class (j, k) to one of class (k+1, j-1).

    The class (1, 0) maps identically; everything else goes through
    reflect_blocks.  Requires height >= m-1 (so j >= 1).
    """
    if path.height() < m - 1:
        raise HeightTooLowError(
            f"height {path.height()} < {m - 1}; no class shift is defined"
        )
    if residue_class(path, m) == (1, 0):
        return path
    return reflect_blocks(path, m)


def segment_residue_counts(seg: Segment, m: int) -> tuple[int, int]:
    """(up steps at height = 0 mod m, up steps at height = m-1 mod m) in a segment."""
    altitude = seg.start_altitude
    zero = top = 0
    for s in seg.steps:
        if s is UP:
            altitude += 1
            r = altitude % m
            if r == 0:
                zero += 1
            elif r == m - 1:
                top += 1
        else:
            altitude -= 1
    return zero, top
