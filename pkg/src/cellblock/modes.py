"""Modes: a harmony scale heard over a chosen bass tone."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from . import catalog
from .catalog import CatalogEntry
from .errors import PreconditionError
from .pcset import PCSetLike, PitchClassSet, as_set, note_name

GREEK = ("Ionian", "Dorian", "Phrygian", "Lydian", "Mixolydian", "Aeolian", "Locrian")
# major modes over a fixed bass, brightest first
BRIGHTNESS = ("Lydian", "Ionian", "Mixolydian", "Dorian", "Aeolian", "Phrygian", "Locrian")
ALIASES = {("MEL", 4): "Lydian Dominant", ("MEL", 7): "altered"}

MIXOLYDIAN = PitchClassSet.of([0, 2, 4, 5, 7, 9, 10])
DOMINANT = PitchClassSet.of([0, 4, 10])

# (label of the missing natural degree, natural interval, altered intervals)
DEGREE_PAIRS = (
    ("9th", 2, (1, 3)),
    ("11th", 5, (6,)),
    ("5th", 7, ()),
    ("13th", 9, (8,)),
)
ALTERATION_NAMES = {1: "b9", 3: "#9", 6: "#11", 8: "b13"}
# labels sort by their interval above the bass
_LABEL_POS = {"b9": 1, "#9": 3, "no 9th": 2, "no 11th": 5, "#11": 6,
              "no 5th": 7, "b13": 8, "no 13th": 9}

HarmonyRef = Union[CatalogEntry, str]


def ordinal(n: int) -> str:
    if 10 <= n % 100 <= 20:
        return f"{n}th"
    return f"{n}{ {1: 'st', 2: 'nd', 3: 'rd'}.get(n % 10, 'th')}"


def _hname(h: HarmonyRef) -> str:
    return catalog.harmony(h.name if isinstance(h, CatalogEntry) else h).name


@dataclass(frozen=True)
class Mode:
    harmony: str
    harmony_root: int
    scale: PitchClassSet
    bass: int
    degree: int

    def __post_init__(self) -> None:
        if self.bass not in self.scale:
            raise PreconditionError(f"bass {self.bass} not in scale {self.scale}")

    @property
    def name(self) -> str:
        return mode_name(self.harmony, self.degree)

    def label(self, spelling: str = "jazz") -> str:
        bass = note_name(self.bass, spelling)
        root = note_name(self.harmony_root, spelling)
        if self.harmony == "MAJ":
            return f"{bass} {self.name}"
        return f"{ordinal(self.degree)} mode of {root} {self.harmony}"

    def intervals(self) -> PitchClassSet:
        return self.scale.transpose(-self.bass)

    def to_json(self) -> dict:
        return {"harmony": self.harmony, "harmony_root": self.harmony_root,
                "scale": list(self.scale), "bass": self.bass, "degree": self.degree,
                "name": self.name, "label": self.label()}


def _degree(root: int, scale: PitchClassSet, bass: int) -> int:
    order = sorted(scale, key=lambda p: (p - root) % 12)
    return order.index(bass % 12) + 1


def make_mode(harmony: HarmonyRef, harmony_root: int, bass: int) -> Mode:
    name = _hname(harmony)
    scale = catalog.harmony_scale(name, harmony_root)
    return Mode(name, harmony_root % 12, scale, bass % 12, _degree(harmony_root, scale, bass))


def mode_of_degree(harmony: HarmonyRef, harmony_root: int, degree: int) -> Mode:
    name = _hname(harmony)
    scale = catalog.harmony_scale(name, harmony_root)
    if not 1 <= degree <= len(scale):
        raise PreconditionError(f"{name} has no degree {degree}")
    bass = sorted(scale, key=lambda p: (p - harmony_root) % 12)[degree - 1]
    return Mode(name, harmony_root % 12, scale, bass, degree)


def mode_for_scale(scale: PCSetLike, bass: int) -> Mode:
    """Label a harmony scale over a bass, preferring the smallest degree."""
    s = as_set(scale)
    name = catalog.identify_harmony(s)
    if name is None:
        raise PreconditionError(f"{s} is not a harmony scale")
    pattern = catalog.HARMONY_PATTERNS[name]
    roots = [r for r in range(12) if pattern.transpose(r) == s]
    best = min(roots, key=lambda r: (_degree(r, s, bass), r))
    return Mode(name, best, s, bass % 12, _degree(best, s, bass))


def mode_name(harmony: HarmonyRef, degree: int) -> str:
    name = _hname(harmony)
    size = len(catalog.HARMONY_PATTERNS[name])
    if not 1 <= degree <= size:
        raise PreconditionError(f"{name} has degrees 1..{size}, not {degree}")
    if name == "MAJ":
        return GREEK[degree - 1]
    return ALIASES.get((name, degree), f"{ordinal(degree)} mode of {name}")


def modes_of(harmony: HarmonyRef, harmony_root: int = 0) -> list[Mode]:
    name = _hname(harmony)
    n = len(catalog.HARMONY_PATTERNS[name])
    return [mode_of_degree(name, harmony_root, d) for d in range(1, n + 1)]


def distinct_modes(harmony: HarmonyRef) -> int:
    return len({m.intervals() for m in modes_of(harmony)})


def fifths_window(bass: int, position: int) -> list[int]:
    """Seven consecutive fifths with ``bass`` at ``position``."""
    return [(bass + 7 * (j - position)) % 12 for j in range(7)]


def major_modes_for_bass(bass: int) -> list[Mode]:
    out = []
    for p in range(7):
        window = fifths_window(bass, p)
        out.append(make_mode("MAJ", window[1], bass))
    return out


def brightness_rank(mode: Mode) -> int:
    if mode.harmony != "MAJ":
        raise PreconditionError("brightness is only ranked for major modes")
    return BRIGHTNESS.index(mode.name)


def fifths_distance(frm: int, to: int) -> int:
    """Steps along ascending fifths from one pitch class to another."""
    return (7 * (to - frm)) % 12


def dim_aug_bright_mode(harmony: HarmonyRef, bass: int) -> Mode:
    """The brighter of the two DIM or AUG modes over ``bass``.

    Each scale is the bass's own symmetric chord plus one other copy; the
    scale whose other copy sits nearer the bass along ascending fifths wins.
    """
    name = _hname(harmony)
    if name not in ("DIM", "AUG"):
        raise PreconditionError(f"{name} is neither DIM nor AUG")
    bass %= 12
    period = 3 if name == "DIM" else 4
    own = PitchClassSet.of(range(bass, bass + 12, period))
    scales = sorted({s for s in (catalog.HARMONY_PATTERNS[name].transpose(r) for r in range(12))
                     if bass in s})

    def nearness(s: PitchClassSet) -> int:
        return min(fifths_distance(bass, t) for t in s - own)

    return mode_for_scale(min(scales, key=nearness), bass)


def dim_aug_dark_mode(harmony: HarmonyRef, bass: int) -> Mode:
    name = _hname(harmony)
    bright = dim_aug_bright_mode(name, bass)
    for r in range(12):
        s = catalog.HARMONY_PATTERNS[name].transpose(r)
        if bass % 12 in s and s != bright.scale:
            return mode_for_scale(s, bass)
    raise PreconditionError("no second mode")


@dataclass(frozen=True)
class DominantEmbeddingRow:
    mode: Mode
    alterations: frozenset[str]

    def sorted_alterations(self) -> list[str]:
        return sorted(self.alterations, key=_LABEL_POS.__getitem__)

    def mode_text(self) -> str:
        text = f"{ordinal(self.mode.degree)} mode of {self.mode.harmony}"
        if self.mode.harmony == "MAJ":
            return f"{self.mode.name} ({text})"
        return text

    def to_json(self) -> dict:
        return {"mode": self.mode_text(), "harmony": self.mode.harmony,
                "degree": self.mode.degree, "alterations": self.sorted_alterations()}


def alterations(mode_intervals: PCSetLike) -> frozenset[str]:
    """Labels describing a dominant scale (intervals above its bass) against Mixolydian."""
    iv = as_set(mode_intervals)
    out = {ALTERATION_NAMES[i] for i in iv - MIXOLYDIAN if i in ALTERATION_NAMES}
    for label, natural, altered in DEGREE_PAIRS:
        if natural not in iv and not any(a in iv for a in altered):
            out.add(f"no {label}")
    return frozenset(out)


def classify_dominant_modes() -> list[DominantEmbeddingRow]:
    """Every mode, up to transposition, that holds a root, major third and minor seventh."""
    rows = []
    order = ("MAJ", "MEL", "HMIN", "HMAJ", "DIM", "WTONE", "AUG")
    for h in order:
        seen = set()
        for m in modes_of(h):
            iv = m.intervals()
            if DOMINANT.issubset(iv) and iv not in seen:
                seen.add(iv)
                rows.append(DominantEmbeddingRow(m, alterations(iv)))
    return rows
