"""Dyck and s-ary lattice paths: validation, enumeration, and step statistics.

A Dyck path of semilength n walks from (0,0) to (2n,0) with steps (1,1) and
(1,-1), never dipping below the x-axis.  The s-ary variant keeps the unit up
step but drops by s at once on each down step.  All values here are immutable
and hashable; enumeration is lexicographic with U < D so golden tests are
deterministic.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from enum import IntEnum
from typing import Iterable, Iterator

from .errors import (
    BadCharError,
    BelowAxisError,
    CapExceededError,
    EmptyResidueSetError,
    IndexOutOfRangeError,
    InputError,
    InvalidMError,
    NonBalancedError,
)

__all__ = [
    "Step",
    "UP",
    "DOWN",
    "DyckPath",
    "SAryPath",
    "Pyramid",
    "DistributionTable",
    "DYCK_ENUMERATION_CAP",
    "SARY_ENUMERATION_CAP",
    "parse_path",
    "render_text",
    "enumerate_dyck",
    "maximal_pyramids",
    "pyramid_weight",
    "exterior_pairs",
    "exterior_pair_indices",
    "matched_pairs",
    "up_steps_at_residue",
    "catalan",
    "narayana",
    "distribution",
    "enumerate_sary",
    "sary_maximal_pyramids",
    "sary_pyramid_weight",
    "sary_exterior_down_steps",
    "sary_distribution",
]


class Step(IntEnum):
    """A single lattice step.  UP < DOWN fixes the lexicographic order."""

    UP = 0
    DOWN = 1


UP = Step.UP
DOWN = Step.DOWN

# Exhaustive enumeration stays desk-scale (under a minute) below these caps.
DYCK_ENUMERATION_CAP = 14
SARY_ENUMERATION_CAP = 8

_CHAR_TO_STEP = {
    "U": UP,
    "u": UP,
    "(": UP,
    "D": DOWN,
    "d": DOWN,
    ")": DOWN,
}


def _validate_dyck(steps: tuple[Step, ...]) -> None:
    ups = sum(1 for s in steps if s is UP)
    downs = len(steps) - ups
    if ups != downs:
        raise NonBalancedError(f"{ups} up steps vs {downs} down steps")
    altitude = 0
    for i, s in enumerate(steps):
        altitude += 1 if s is UP else -1
        if altitude < 0:
            raise BelowAxisError(f"prefix of length {i + 1} dips below the axis")


def _coerce_steps(steps: Iterable[Step | int]) -> tuple[Step, ...]:
    return tuple(Step(s) for s in steps)


class DyckPath:
    """An immutable Dyck path; equality, hashing and ordering follow the steps."""

    __slots__ = ("_steps",)

    def __init__(self, steps: Iterable[Step | int] = ()):
        object.__setattr__(self, "_steps", _coerce_steps(steps))
        _validate_dyck(self._steps)

    @classmethod
    def _trusted(cls, steps: tuple[Step, ...]) -> "DyckPath":
        # Internal fast path for enumeration: steps already validated.
        path = object.__new__(cls)
        object.__setattr__(path, "_steps", steps)
        return path

    @classmethod
    def from_word(cls, text: str) -> "DyckPath":
        return parse_path(text)

    @property
    def steps(self) -> tuple[Step, ...]:
        return self._steps

    @property
    def n(self) -> int:
        """Semilength: number of up steps."""
        return len(self._steps) // 2

    def word(self) -> str:
        return "".join("U" if s is UP else "D" for s in self._steps)

    def altitudes(self) -> tuple[int, ...]:
        """Altitude after each step (length = number of steps)."""
        out = []
        altitude = 0
        for s in self._steps:
            altitude += 1 if s is UP else -1
            out.append(altitude)
        return tuple(out)

    def height(self) -> int:
        """Maximum altitude reached."""
        best = 0
        altitude = 0
        for s in self._steps:
            altitude += 1 if s is UP else -1
            if altitude > best:
                best = altitude
        return best

    def blocks(self) -> list["DyckPath"]:
        """Factor into primitive blocks (segments between returns to the axis)."""
        out = []
        altitude = 0
        start = 0
        for i, s in enumerate(self._steps):
            altitude += 1 if s is UP else -1
            if altitude == 0:
                out.append(DyckPath._trusted(self._steps[start : i + 1]))
                start = i + 1
        return out

    def is_primitive(self) -> bool:
        return len(self._steps) > 0 and len(self.blocks()) == 1

    def __len__(self) -> int:
        return len(self._steps)

    def __iter__(self) -> Iterator[Step]:
        return iter(self._steps)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DyckPath):
            return NotImplemented
        return self._steps == other._steps

    def __hash__(self) -> int:
        return hash(self._steps)

    def __lt__(self, other: "DyckPath") -> bool:
        return self._steps < other._steps

    def __le__(self, other: "DyckPath") -> bool:
        return self._steps <= other._steps

    def __gt__(self, other: "DyckPath") -> bool:
        return self._steps > other._steps

    def __ge__(self, other: "DyckPath") -> bool:
        return self._steps >= other._steps

    def __repr__(self) -> str:
        return f"DyckPath({self.word()!r})"


class SAryPath:
    """A lattice path with up step (1,1) and grand down step (1,-s)."""

    __slots__ = ("_s", "_steps")

    def __init__(self, s: int, steps: Iterable[Step | int] = ()):
        if s < 1:
            raise InvalidMError(f"step drop s must be >= 1, got {s}")
        object.__setattr__(self, "_s", s)
        object.__setattr__(self, "_steps", _coerce_steps(steps))
        ups = sum(1 for st in self._steps if st is UP)
        downs = len(self._steps) - ups
        if ups != s * downs:
            raise NonBalancedError(f"{ups} up steps vs {downs} down steps (s={s})")
        altitude = 0
        for i, st in enumerate(self._steps):
            altitude += 1 if st is UP else -s
            if altitude < 0:
                raise BelowAxisError(f"prefix of length {i + 1} dips below the axis")

    @classmethod
    def _trusted(cls, s: int, steps: tuple[Step, ...]) -> "SAryPath":
        path = object.__new__(cls)
        object.__setattr__(path, "_s", s)
        object.__setattr__(path, "_steps", steps)
        return path

    @property
    def s(self) -> int:
        return self._s

    @property
    def steps(self) -> tuple[Step, ...]:
        return self._steps

    @property
    def n(self) -> int:
        """Length: number of (grand) down steps."""
        return sum(1 for st in self._steps if st is DOWN)

    def word(self) -> str:
        return "".join("U" if st is UP else "D" for st in self._steps)

    def __len__(self) -> int:
        return len(self._steps)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SAryPath):
            return NotImplemented
        return self._s == other._s and self._steps == other._steps

    def __hash__(self) -> int:
        return hash((self._s, self._steps))

    def __repr__(self) -> str:
        return f"SAryPath(s={self._s}, {self.word()!r})"


@dataclass(frozen=True)
class Pyramid:
    """A maximal factor of sk up steps followed by k down steps (k = height)."""

    start: int
    height: int

    def span(self, s: int = 1) -> range:
        """Step indices covered, given the down-step drop s."""
        return range(self.start, self.start + (s + 1) * self.height)


def parse_path(text: str) -> DyckPath:
    """Parse a path word over U/D (case-insensitive; parentheses accepted)."""
    steps = []
    for ch in text.strip():
        try:
            steps.append(_CHAR_TO_STEP[ch])
        except KeyError:
            raise BadCharError(f"unexpected character {ch!r} in path word") from None
    return DyckPath(steps)


def render_text(path: DyckPath) -> str:
    """Canonical U/D word for a path; inverse of parse_path."""
    return path.word()


def enumerate_dyck(n: int) -> Iterator[DyckPath]:
    """Yield every Dyck path of semilength n once, lexicographically (U < D)."""
    if n < 0:
        raise IndexOutOfRangeError(f"semilength must be >= 0, got {n}")
    buf: list[Step] = []

    def rec(ups: int, downs: int) -> Iterator[DyckPath]:
        if len(buf) == 2 * n:
            yield DyckPath._trusted(tuple(buf))
            return
        if ups < n:
            buf.append(UP)
            yield from rec(ups + 1, downs)
            buf.pop()
        if downs < ups:
            buf.append(DOWN)
            yield from rec(ups, downs + 1)
            buf.pop()

    yield from rec(0, 0)


def enumerate_sary(s: int, n: int) -> Iterator[SAryPath]:
    """Yield every s-ary path of length n once, lexicographically (U < D)."""
    if s < 1:
        raise InvalidMError(f"step drop s must be >= 1, got {s}")
    if n < 0:
        raise IndexOutOfRangeError(f"length must be >= 0, got {n}")
    total = (s + 1) * n
    buf: list[Step] = []

    def rec(ups: int, downs: int, altitude: int) -> Iterator[SAryPath]:
        if len(buf) == total:
            yield SAryPath._trusted(s, tuple(buf))
            return
        if ups < s * n:
            buf.append(UP)
            yield from rec(ups + 1, downs, altitude + 1)
            buf.pop()
        if downs < n and altitude >= s:
            buf.append(DOWN)
            yield from rec(ups, downs + 1, altitude - s)
            buf.pop()

    yield from rec(0, 0, 0)


def _runs(steps: tuple[Step, ...]) -> list[tuple[Step, int, int]]:
    """Maximal runs as (step, start_index, length)."""
    out = []
    i = 0
    while i < len(steps):
        j = i
        while j < len(steps) and steps[j] is steps[i]:
            j += 1
        out.append((steps[i], i, j - i))
        i = j
    return out


def _maximal_pyramids(steps: tuple[Step, ...], s: int) -> list[Pyramid]:
    # Each UD junction carries at most one maximal pyramid: the tallest
    # U^{sk} D^k factor centred there.  Junction pyramids use disjoint runs,
    # so the results are disjoint; callers assert this rather than assume it.
    runs = _runs(steps)
    pyramids = []
    for idx in range(len(runs) - 1):
        step, start, length = runs[idx]
        nstep, nstart, nlength = runs[idx + 1]
        if step is UP and nstep is DOWN:
            k = min(length // s, nlength)
            if k >= 1:
                pyramids.append(Pyramid(start=nstart - s * k, height=k))
    covered: set[int] = set()
    for p in pyramids:
        span = p.span(s)
        assert not covered.intersection(span), "maximal pyramids overlap"
        covered.update(span)
    return pyramids


def maximal_pyramids(path: DyckPath) -> list[Pyramid]:
    """All maximal pyramids, disjoint, listed by increasing start index."""
    return _maximal_pyramids(path.steps, 1)


def pyramid_weight(path: DyckPath) -> int:
    """Sum of the heights of the maximal pyramids."""
    return sum(p.height for p in maximal_pyramids(path))


def matched_pairs(path: DyckPath) -> list[tuple[int, int]]:
    """Index pairs (up, down) matching each up step with its down step."""
    stack: list[int] = []
    pairs = []
    for i, s in enumerate(path.steps):
        if s is UP:
            stack.append(i)
        else:
            pairs.append((stack.pop(), i))
    pairs.sort()
    return pairs


def exterior_pair_indices(path: DyckPath) -> list[tuple[int, int]]:
    """Matched pairs lying in no pyramid, found by direct membership testing."""
    covered = set()
    for p in maximal_pyramids(path):
        covered.update(p.span())
    out = []
    for up, down in matched_pairs(path):
        if up not in covered:
            # A pyramid's ups match its own downs, so membership agrees.
            assert down not in covered, "matched pair straddles a pyramid"
            out.append((up, down))
        else:
            assert down in covered, "matched pair straddles a pyramid"
    return out


def exterior_pairs(path: DyckPath) -> int:
    """Number of matched up/down pairs that belong to no pyramid."""
    return path.n - pyramid_weight(path)


def sary_maximal_pyramids(path: SAryPath) -> list[Pyramid]:
    """Maximal pyramids of an s-ary path (height k spans sk ups then k downs)."""
    return _maximal_pyramids(path.steps, path.s)


def sary_pyramid_weight(path: SAryPath) -> int:
    return sum(p.height for p in sary_maximal_pyramids(path))


def sary_exterior_down_steps(path: SAryPath) -> int:
    """Down steps outside all pyramids; always n minus the pyramid weight."""
    covered = set()
    weight = 0
    for p in sary_maximal_pyramids(path):
        covered.update(p.span(path.s))
        weight += p.height
    count = sum(
        1 for i, st in enumerate(path.steps) if st is DOWN and i not in covered
    )
    assert count == path.n - weight, "exterior down steps != n - pyramid weight"
    return count


def _check_residues(m: int, residues: Iterable[int]) -> frozenset[int]:
    if m < 2:
        raise InvalidMError(f"modulus must be >= 2, got {m}")
    r = frozenset(residues)
    if not r:
        raise EmptyResidueSetError("residue set is empty")
    if not r.issubset(range(m)):
        raise InvalidMError(f"residues {sorted(r)} not all in range(0, {m})")
    return r


def up_steps_at_residue(path: DyckPath, m: int, residues: Iterable[int]) -> int:
    """Count up steps whose height h satisfies h mod m in the residue set.

    An up step from y = h-1 to y = h is at height h.
    """
    r = _check_residues(m, residues)
    count = 0
    altitude = 0
    for s in path.steps:
        if s is UP:
            altitude += 1
            if altitude % m in r:
                count += 1
        else:
            altitude -= 1
    return count


def catalan(n: int) -> int:
    if n < 0:
        raise IndexOutOfRangeError(f"catalan undefined for n={n}")
    return math.comb(2 * n, n) // (n + 1)


def narayana(n: int, k: int) -> int:
    """N(n,k) = (1/n) C(n,k) C(n,k+1); counts paths with k up steps at even height."""
    if n < 1 or not 0 <= k <= n - 1:
        raise IndexOutOfRangeError(f"narayana undefined for n={n}, k={k}")
    return math.comb(n, k) * math.comb(n, k + 1) // n


@dataclass(frozen=True, eq=False)
class DistributionTable:
    """Exact counts of paths of one size, bucketed by a statistic value."""

    n: int
    statistic: str
    params: dict
    counts: dict[int, int]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DistributionTable):
            return NotImplemented
        return (
            self.n == other.n
            and self.statistic == other.statistic
            and self.params == other.params
            and self.counts == other.counts
        )

    def total(self) -> int:
        return sum(self.counts.values())

    def text(self) -> str:
        return " ".join(f"{k}:{self.counts[k]}" for k in sorted(self.counts))

    def to_csv(self) -> str:
        lines = ["k,count"]
        lines.extend(f"{k},{self.counts[k]}" for k in sorted(self.counts))
        return "\n".join(lines)

    def to_json(self) -> str:
        return json.dumps(
            {
                "n": self.n,
                "statistic": self.statistic,
                "params": self.params,
                "counts": {str(k): self.counts[k] for k in sorted(self.counts)},
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "DistributionTable":
        raw = json.loads(text)
        return cls(
            n=raw["n"],
            statistic=raw["statistic"],
            params=raw["params"],
            counts={int(k): v for k, v in raw["counts"].items()},
        )


_DYCK_STATISTICS = ("exterior_pairs", "pyramid_weight", "up_residue", "height")


def distribution(
    n: int,
    statistic: str,
    *,
    m: int | None = None,
    residues: Iterable[int] | None = None,
    cap: int | None = DYCK_ENUMERATION_CAP,
) -> DistributionTable:
    """Exact distribution of a statistic over all Dyck paths of semilength n."""
    if statistic not in _DYCK_STATISTICS:
        raise InputError(
            f"unknown statistic {statistic!r}; expected one of {_DYCK_STATISTICS}"
        )
    if cap is not None and n > cap:
        raise CapExceededError(f"n={n} exceeds enumeration cap {cap}")
    params: dict = {}
    if statistic == "up_residue":
        if m is None or residues is None:
            raise InvalidMError("up_residue needs m and residues")
        r = _check_residues(m, residues)
        params = {"m": m, "residues": sorted(r)}

        def stat(p: DyckPath) -> int:
            return up_steps_at_residue(p, m, r)

    elif statistic == "exterior_pairs":
        stat = exterior_pairs
    elif statistic == "pyramid_weight":
        stat = pyramid_weight
    else:
        stat = DyckPath.height
    counts: dict[int, int] = {}
    total = 0
    for p in enumerate_dyck(n):
        v = stat(p)
        counts[v] = counts.get(v, 0) + 1
        total += 1
    assert total == catalan(n)
    return DistributionTable(n=n, statistic=statistic, params=params, counts=counts)


def sary_distribution(
    s: int,
    n: int,
    statistic: str,
    *,
    cap: int | None = SARY_ENUMERATION_CAP,
) -> DistributionTable:
    """Exact distribution of an s-ary statistic (pyramid weight or exterior downs)."""
    if statistic not in ("sary_pyramid_weight", "sary_exterior_down_steps"):
        raise InputError(f"unknown s-ary statistic {statistic!r}")
    if cap is not None and n > cap:
        raise CapExceededError(f"n={n} exceeds s-ary enumeration cap {cap}")
    stat = (
        sary_pyramid_weight
        if statistic == "sary_pyramid_weight"
        else sary_exterior_down_steps
    )
    counts: dict[int, int] = {}
    for p in enumerate_sary(s, n):
        v = stat(p)
        counts[v] = counts.get(v, 0) + 1
    return DistributionTable(
        n=n, statistic=statistic, params={"s": s}, counts=counts
    )
