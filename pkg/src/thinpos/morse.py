"""Morse event words and the width invariants computed from them.

A Morse presentation is stored only through the bottom-to-top order of its
events: minima, maxima, and (for signed vertex graphs) the vertices pinned to
the bottom (``V-``) or top (``V+``) level.  Numeric heights are never stored;
every quantity here depends on the order alone.

    >>> w = MorseWord.parse("MIN MIN MAX MIN MAX MAX")
    >>> running_counts(w)
    [2, 4, 2, 4, 2, 0]
    >>> width_link(w)
    14
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import MalformedWord, NotBridgePosition, NotLinkWord


class Kind(enum.Enum):
    MIN = "MIN"
    MAX = "MAX"
    VPLUS = "V+"
    VMINUS = "V-"


@dataclass(frozen=True)
class MorseEvent:
    kind: Kind
    degree: int = 0

    def __post_init__(self):
        if self.kind in (Kind.VPLUS, Kind.VMINUS):
            if self.degree < 2 or self.degree % 2:
                raise MalformedWord(f"vertex degree must be an even integer >= 2, got {self.degree}")
        elif self.degree != 0:
            raise MalformedWord(f"{self.kind.value} events carry no degree")

    @property
    def is_critical(self) -> bool:
        return self.kind in (Kind.MIN, Kind.MAX)

    @property
    def delta(self) -> int:
        """Change in the strand count across this event."""
        if self.kind is Kind.MIN:
            return 2
        if self.kind is Kind.MAX:
            return -2
        if self.kind is Kind.VMINUS:
            return self.degree
        return -self.degree

    def flipped(self) -> MorseEvent:
        return MorseEvent(_FLIP[self.kind], self.degree)

    def __str__(self):
        if self.is_critical:
            return self.kind.value
        return f"{self.kind.value}{self.degree}"


_FLIP = {Kind.MIN: Kind.MAX, Kind.MAX: Kind.MIN, Kind.VPLUS: Kind.VMINUS, Kind.VMINUS: Kind.VPLUS}

MIN = MorseEvent(Kind.MIN)
MAX = MorseEvent(Kind.MAX)


def vplus(degree: int) -> MorseEvent:
    return MorseEvent(Kind.VPLUS, degree)


def vminus(degree: int) -> MorseEvent:
    return MorseEvent(Kind.VMINUS, degree)


_TOKEN = re.compile(r"^(MIN|MAX|V([+-])(\d+))$")


def parse_event(token: str) -> MorseEvent:
    m = _TOKEN.match(token.strip())
    if m is None:
        raise MalformedWord(f"unrecognised event token {token!r}")
    if m.group(1) == "MIN":
        return MIN
    if m.group(1) == "MAX":
        return MAX
    kind = Kind.VPLUS if m.group(2) == "+" else Kind.VMINUS
    return MorseEvent(kind, int(m.group(3)))


def _scan(events: Sequence[MorseEvent]) -> list[int]:
    counts = []
    total = 0
    for i, ev in enumerate(events):
        total += ev.delta
        if total < 0:
            raise MalformedWord(f"strand count drops to {total} after event {i} ({ev})")
        counts.append(total)
    if counts and counts[-1] != 0:
        raise MalformedWord(f"word ends with {counts[-1]} open strands")
    return counts


@dataclass(frozen=True)
class MorseWord:
    """Bottom-to-top event sequence, validated on construction."""

    events: tuple[MorseEvent, ...]

    def __init__(self, events: Iterable[MorseEvent] = ()):
        object.__setattr__(self, "events", tuple(events))
        self._validate()

    def _validate(self):
        evs = self.events
        kinds = [e.kind for e in evs]
        # V- events form a prefix, V+ events a suffix
        lo = 0
        while lo < len(kinds) and kinds[lo] is Kind.VMINUS:
            lo += 1
        hi = len(kinds)
        while hi > lo and kinds[hi - 1] is Kind.VPLUS:
            hi -= 1
        for i in range(lo, hi):
            if kinds[i] in (Kind.VPLUS, Kind.VMINUS):
                raise MalformedWord(
                    f"vertex event {evs[i]} at position {i} is not in the bottom prefix or top suffix"
                )
        _scan(evs)

    @classmethod
    def parse(cls, text: str) -> MorseWord:
        tokens = []
        for line in text.splitlines():
            tokens.extend(line.split("#", 1)[0].split())
        return cls(parse_event(t) for t in tokens)

    def __str__(self):
        return " ".join(str(e) for e in self.events)

    def __len__(self):
        return len(self.events)

    def __iter__(self) -> Iterator[MorseEvent]:
        return iter(self.events)

    def __add__(self, other: MorseWord) -> MorseWord:
        return MorseWord(self.events + other.events)

    @property
    def is_link_word(self) -> bool:
        return all(e.is_critical for e in self.events)

    @property
    def n_min(self) -> int:
        return sum(e.kind is Kind.MIN for e in self.events)

    @property
    def n_max(self) -> int:
        return sum(e.kind is Kind.MAX for e in self.events)


@dataclass(frozen=True)
class WidthProfile:
    """Strand counts at the regular levels between consecutive critical values."""

    counts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "counts", tuple(self.counts))
        for c in self.counts:
            if c < 0 or c % 2:
                raise ValueError(f"profile counts must be non-negative even integers, got {c}")

    @property
    def width(self) -> int:
        return sum(self.counts)

    def __len__(self):
        return len(self.counts)

    def __iter__(self):
        return iter(self.counts)


def running_counts(word: MorseWord) -> list[int]:
    """Strand count just above each event, bottom to top."""
    return _scan(word.events)


def profile(word: MorseWord) -> WidthProfile:
    """Counts strictly between consecutive MIN/MAX events.

    Levels next to vertex events are not between two critical values and
    so are left out; a word with at most one critical point has an empty
    profile.
    """
    counts = running_counts(word)
    crit = [i for i, e in enumerate(word.events) if e.is_critical]
    return WidthProfile(counts[i] for i in crit[:-1])


def width_link(word: MorseWord) -> int:
    if not word.is_link_word:
        raise NotLinkWord("width_link needs a word without vertex events; use width_graph")
    return sum(running_counts(word)[:-1])


def width_graph(word: MorseWord) -> int:
    return profile(word).width


def is_bridge_position(word: MorseWord) -> bool:
    last_min = -1
    first_max = len(word.events)
    for i, e in enumerate(word.events):
        if e.kind is Kind.MIN:
            last_min = i
        elif e.kind is Kind.MAX and first_max == len(word.events):
            first_max = i
    return last_min < first_max


def bridge_number(word: MorseWord) -> int:
    if not word.events:
        raise NotBridgePosition("empty word has no bridge number")
    if not is_bridge_position(word):
        raise NotBridgePosition(f"some maximum lies below a minimum in {word}")
    return max(running_counts(word)) // 2


def nbridge_word(n: int) -> MorseWord:
    """The standard n-bridge presentation: n minima, then n maxima."""
    if n < 1:
        raise ValueError("bridge number must be >= 1")
    return MorseWord([MIN] * n + [MAX] * n)


def thin_thick_levels(prof: WidthProfile | Sequence[int]) -> tuple[list[int], list[int]]:
    """Indices of thin (strict local minimum) and thick (strict local maximum) levels.

    The ends of the word count as 0, so the first and last levels can be
    thick but never thin.
    """
    c = list(prof)
    thin, thick = [], []
    for i, x in enumerate(c):
        below = c[i - 1] if i > 0 else 0
        above = c[i + 1] if i + 1 < len(c) else 0
        if x > below and x > above:
            thick.append(i)
        elif 0 < i < len(c) - 1 and x < below and x < above:
            thin.append(i)
    return thin, thick


def reflect(word: MorseWord) -> MorseWord:
    """Turn the presentation upside down."""
    return MorseWord(e.flipped() for e in reversed(word.events))
