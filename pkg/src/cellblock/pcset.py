"""Pitch-class sets as 12-bit masks and the basic dissonance predicates."""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Union

from . import kernels

SHARP_NAMES = ("C", "C#", "D", "D#", "E", "F", "F#", "G", "G#", "A", "A#", "B")
FLAT_NAMES = ("C", "Db", "D", "Eb", "E", "F", "Gb", "G", "Ab", "A", "Bb", "B")
# the spelling used in lead sheets and in the embedding tables
JAZZ_NAMES = ("C", "Db", "D", "Eb", "E", "F", "F#", "G", "Ab", "A", "Bb", "B")

_LETTERS = {"C": 0, "D": 2, "E": 4, "F": 5, "G": 7, "A": 9, "B": 11}
_ACCIDENTALS = {"#": 1, "♯": 1, "b": -1, "♭": -1}
_NOTE_RE = re.compile(r"([A-G])([#b♯♭]*)$")


def note_value(name: str) -> int:
    """Pitch class of a note name such as ``"Eb"``, ``"F#"`` or ``"B♭"``."""
    m = _NOTE_RE.match(name.strip())
    if not m:
        raise ValueError(f"not a note name: {name!r}")
    letter, acc = m.groups()
    return (_LETTERS[letter] + sum(_ACCIDENTALS[a] for a in acc)) % 12


def note_name(pc: int, spelling: str = "sharp", unicode: bool = False) -> str:
    table = {"sharp": SHARP_NAMES, "flat": FLAT_NAMES, "jazz": JAZZ_NAMES}[spelling]
    name = table[pc % 12]
    if unicode:
        name = name[0] + name[1:].replace("#", "♯").replace("b", "♭")
    return name


@dataclass(frozen=True, order=True)
class PitchClassSet:
    """An immutable set of pitch classes, stored as a membership mask."""

    mask: int = 0

    def __post_init__(self) -> None:
        if not 0 <= self.mask <= kernels.FULL:
            raise ValueError(f"mask out of range: {self.mask}")

    @classmethod
    def of(cls, pcs: Iterable[int]) -> "PitchClassSet":
        m = 0
        for p in pcs:
            m |= 1 << (int(p) % 12)
        return cls(m)

    @classmethod
    def chromatic(cls) -> "PitchClassSet":
        return cls(kernels.FULL)

    def __iter__(self) -> Iterator[int]:
        return (i for i in range(12) if self.mask >> i & 1)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, pc: object) -> bool:
        return isinstance(pc, int) and bool(self.mask >> (pc % 12) & 1)

    def __or__(self, other: "PitchClassSet") -> "PitchClassSet":
        return PitchClassSet(self.mask | other.mask)

    def __and__(self, other: "PitchClassSet") -> "PitchClassSet":
        return PitchClassSet(self.mask & other.mask)

    def __sub__(self, other: "PitchClassSet") -> "PitchClassSet":
        return PitchClassSet(self.mask & ~other.mask)

    def issubset(self, other: "PitchClassSet") -> bool:
        return self.mask & other.mask == self.mask

    def add(self, pc: int) -> "PitchClassSet":
        return PitchClassSet(self.mask | 1 << (pc % 12))

    def transpose(self, k: int) -> "PitchClassSet":
        return PitchClassSet(kernels.rotate(self.mask, k))

    def complement(self) -> "PitchClassSet":
        return PitchClassSet(kernels.FULL ^ self.mask)

    def members(self) -> list[int]:
        return list(self)

    def names(self, spelling: str = "sharp") -> list[str]:
        return [note_name(p, spelling) for p in self]

    def __str__(self) -> str:
        return "{" + ",".join(str(p) for p in self) + "}"

    def __repr__(self) -> str:
        return f"PitchClassSet({self})"


PCSetLike = Union[PitchClassSet, int, Iterable[int]]


def as_set(s: PCSetLike) -> PitchClassSet:
    if isinstance(s, PitchClassSet):
        return s
    if isinstance(s, int):
        return PitchClassSet(s)
    return PitchClassSet.of(s)


def parse_pcset(text: str) -> PitchClassSet:
    """Read ``"C,E,G"``, ``"C E G"``, ``"0,4,7"`` or the hex mask form ``"0x091"``."""
    text = text.strip()
    if text.lower().startswith("0x"):
        return PitchClassSet(int(text, 16))
    if text in ("", "{}"):
        return PitchClassSet()
    out = []
    for tok in re.split(r"[,\s]+", text.strip("{} ")):
        if tok.lstrip("-").isdigit():
            out.append(int(tok) % 12)
        else:
            out.append(note_value(tok))
    return PitchClassSet.of(out)


def transpose(s: PCSetLike, k: int) -> PitchClassSet:
    return as_set(s).transpose(k)


def complement(s: PCSetLike) -> PitchClassSet:
    return as_set(s).complement()


def circular_distance(a: int, b: int) -> int:
    d = (a - b) % 12
    return min(d, 12 - d)


def _runs(m: int, steps: tuple[int, ...]) -> list[tuple[int, ...]]:
    out = []
    for t in range(12):
        pcs = [t]
        for d in steps:
            pcs.append((pcs[-1] + d) % 12)
        if all(m >> p & 1 for p in pcs):
            out.append(tuple(sorted(pcs)))
    return sorted(out)


def semitone_blocks(s: PCSetLike) -> list[tuple[int, int]]:
    return _runs(as_set(s).mask, (1,))


def semitone_cells(s: PCSetLike) -> list[tuple[int, int, int]]:
    return _runs(as_set(s).mask, (1, 1))


def tone_blocks(s: PCSetLike) -> list[tuple[int, int]]:
    m = as_set(s).mask
    return sorted(_runs(m, (1,)) + _runs(m, (2,)))


def tone_cells(s: PCSetLike) -> list[tuple[int, int, int]]:
    """Triples a < b < c (read upward from a) with both steps of size 1 or 2."""
    m = as_set(s).mask
    out: list[tuple[int, int, int]] = []
    for steps in ((1, 1), (1, 2), (2, 1), (2, 2)):
        out += _runs(m, steps)
    return sorted(out)


@dataclass(frozen=True, order=True)
class ShapeClass:
    """A transposition class, keyed by its numerically smallest rotation."""

    canonical: PitchClassSet
    multiplicity: int

    @classmethod
    def of(cls, s: PCSetLike) -> "ShapeClass":
        m = as_set(s).mask
        orbit = {kernels.rotate(m, k) for k in range(12)}
        return cls(PitchClassSet(min(orbit)), len(orbit))

    def transpositions(self) -> list[PitchClassSet]:
        seen = sorted({kernels.rotate(self.canonical.mask, k) for k in range(12)})
        return [PitchClassSet(m) for m in seen]

    def __contains__(self, s: object) -> bool:
        return isinstance(s, PitchClassSet) and kernels.canonical(s.mask) == self.canonical.mask


def canonical(s: PCSetLike) -> PitchClassSet:
    return PitchClassSet(kernels.canonical(as_set(s).mask))


def shape_class(s: PCSetLike) -> ShapeClass:
    return ShapeClass.of(s)
