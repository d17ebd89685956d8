"""Exhaustive classification of scales, packings, chords and triads.

Every named family is rediscovered by sweeping all 4096 subsets.  The
interval patterns below are only used to attach names to what the sweep
finds, and to fix the root each table reports.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, NamedTuple

from . import kernels
from .errors import PreconditionError, TheoremViolation
from .pcset import PCSetLike, PitchClassSet, ShapeClass, as_set

FORMAT_VERSION = 1

P = PitchClassSet.of

# harmonies rooted at C, labelled the way the tables label them
HARMONY_PATTERNS: dict[str, PitchClassSet] = {
    "WTONE": P([0, 2, 4, 6, 8, 10]),
    "MAJ": P([0, 2, 4, 5, 7, 9, 11]),
    "MEL": P([0, 2, 3, 5, 7, 9, 11]),
    "DIM": P([0, 2, 3, 5, 6, 8, 9, 11]),
    "AUG": P([0, 1, 4, 5, 8, 9]),
    "HMIN": P([0, 2, 3, 5, 7, 8, 11]),
    "HMAJ": P([0, 2, 4, 5, 7, 8, 11]),
}
HARMONY_ORDER = tuple(HARMONY_PATTERNS)

PACKING_PATTERNS: dict[str, PitchClassSet] = {
    "wtone": P([0, 2, 4, 6, 8, 10]),
    "aug": P([0, 1, 4, 5, 8, 9]),
    "penta": P([0, 2, 4, 7, 9]),
    "dpenta": P([0, 2, 4, 7, 10]),
    "dim": P([0, 3, 6, 9]),
    "hmin": P([0, 1, 4, 7, 9]),
    "hmaj": P([0, 3, 4, 7, 9]),
}
PACKING_ORDER = tuple(PACKING_PATTERNS)
BLOCKFREE_NAMES = ("penta", "dpenta", "dim", "wtone")

DUALS = {"MAJ": "penta", "MEL": "dpenta", "WTONE": "wtone", "DIM": "dim",
         "AUG": "aug", "HMIN": "hmin", "HMAJ": "hmaj"}

# Irreducible chords.  The min7 column is named from its major-sixth
# inversion (C,F,G in C MAJ are the roots of Cmaj6, Fmaj6, Gmaj6).
CHORD_PATTERNS: dict[str, PitchClassSet] = {
    "min7": P([0, 4, 7, 9]),
    "maj7": P([0, 4, 7, 11]),
    "dom7": P([0, 4, 7, 10]),
    "dim7": P([0, 3, 6, 9]),
    "min7b5": P([0, 3, 6, 10]),
    "maj7b5": P([0, 4, 6, 11]),
    "aug": P([0, 4, 8]),
    "min11": P([0, 3, 5, 10]),
    "dom#11": P([0, 4, 6, 10]),
    "dom11": P([0, 4, 5, 10]),
    "dem": P([0, 1, 6, 7]),
}
CHORD_ORDER = tuple(CHORD_PATTERNS)

# complete sets with zero tone blocks under the tone-block counter
TRIAD_PATTERNS = {
    "maj": P([0, 4, 7]),
    "min": P([0, 3, 7]),
    "aug": P([0, 4, 8]),
    "dim7": P([0, 3, 6, 9]),
}
# the four triads of ordinary chord notation
BASIC_TRIADS = {
    "maj": P([0, 4, 7]),
    "min": P([0, 3, 7]),
    "aug": P([0, 4, 8]),
    "dim": P([0, 3, 6]),
}

DOUBLE_HARMONIC = P([0, 1, 4, 5, 7, 8, 11])

ONE_BLOCK_RESIDUE_NAMES = {
    P([0, 4, 8, 9]): "aug+13",
    P([0, 4, 7, 8]): "aug+5",
    P([2, 5, 9, 0, 6]): "min7 add b11 (hmin)",
    P([2, 5, 9, 0, 8]): "min7 add #11 (hmaj)",
}
ONE_CELL_RESIDUE_NAMES = {
    P([0, 4, 8, 10]): "aug+min7",
    P([0, 4, 7, 9, 2]): "maj6 add 9 (penta)",
}

PUBLISHED_COUNTS = {"packings": 132, "chords": 265, "scales": 59}


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    family: str
    shape: ShapeClass
    rooted: PitchClassSet = field(default_factory=PitchClassSet)
    transposition_count: int = 0

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "family": self.family,
            "canonical": list(self.shape.canonical),
            "canonical_mask": f"0x{self.shape.canonical.mask:03x}",
            "rooted": list(self.rooted),
            "transposition_count": self.transposition_count,
        }


@dataclass(frozen=True)
class DualityPair:
    harmony: CatalogEntry
    packing: CatalogEntry
    self_dual: bool


@dataclass(frozen=True)
class CountReport:
    """A complete-set count under both counting conventions."""

    family: str
    raw: int
    classes: int
    published: int

    @property
    def convention(self) -> str | None:
        if self.classes == self.published:
            return "transposition classes"
        if self.raw == self.published:
            return "raw subsets"
        return None

    @property
    def value(self) -> int:
        return self.raw if self.convention == "raw subsets" else self.classes

    def to_json(self) -> dict:
        return {"family": self.family, "raw_subsets": self.raw,
                "transposition_classes": self.classes, "published": self.published,
                "convention": self.convention, "reported": self.value,
                "matches_published": self.convention is not None}


# completeness predicates

def is_scale_complete(s: PCSetLike) -> bool:
    return kernels.complete(as_set(s).mask, kernels.SCALE)


def is_packing_complete(s: PCSetLike) -> bool:
    return kernels.complete(as_set(s).mask, kernels.PACKING)


def is_chord_complete(s: PCSetLike) -> bool:
    return kernels.complete(as_set(s).mask, kernels.CHORD)


def is_tone_block_complete(s: PCSetLike) -> bool:
    return kernels.complete(as_set(s).mask, kernels.TRIAD)


_KIND_OF: dict[Callable, int] = {
    is_scale_complete: kernels.SCALE,
    is_packing_complete: kernels.PACKING,
    is_chord_complete: kernels.CHORD,
    is_tone_block_complete: kernels.TRIAD,
}


@lru_cache(maxsize=None)
def complete_table(kind: int) -> bytes:
    return kernels.complete_table(kind)


@lru_cache(maxsize=None)
def irreducible_table(kind: int) -> bytes:
    return kernels.irreducible_table(kind)


@lru_cache(maxsize=None)
def count_table(kind: int) -> tuple[int, ...]:
    return tuple(kernels.count_table(kind))


def is_irreducible(s: PCSetLike, completeness: Callable[[PitchClassSet], bool]) -> bool:
    """True if ``s`` is complete and none of its proper subsets is."""
    m = as_set(s).mask
    if not completeness(PitchClassSet(m)):
        raise PreconditionError(f"{as_set(s)} is not complete under {completeness.__name__}")
    kind = _KIND_OF.get(completeness)
    if kind is not None:
        return bool(irreducible_table(kind)[m])
    sub = (m - 1) & m
    while True:
        if completeness(PitchClassSet(sub)):
            return False
        if sub == 0:
            return True
        sub = (sub - 1) & m


def _classes(masks) -> list[int]:
    return sorted({kernels.canonical(m) for m in masks})


def _name_for(canon: int, patterns: dict[str, PitchClassSet]) -> str | None:
    for name, pat in patterns.items():
        if kernels.canonical(pat.mask) == canon:
            return name
    return None


def _entries(canons, patterns, family, order) -> list[CatalogEntry]:
    found = {}
    for c in canons:
        name = _name_for(c, patterns)
        if name is None:
            raise TheoremViolation(f"unnamed {family} shape {PitchClassSet(c)}")
        shape = ShapeClass.of(c)
        found[name] = CatalogEntry(name, family, shape, patterns[name], shape.multiplicity)
    return [found[n] for n in order if n in found]


@lru_cache(maxsize=None)
def _complete_masks(kind: int) -> tuple[int, ...]:
    tab = complete_table(kind)
    return tuple(m for m in range(kernels.NSETS) if tab[m])


@lru_cache(maxsize=None)
def _irreducible_masks(kind: int) -> tuple[int, ...]:
    tab = irreducible_table(kind)
    return tuple(m for m in range(kernels.NSETS) if tab[m])


@lru_cache(maxsize=None)
def classify_harmonies() -> list[CatalogEntry]:
    cells = count_table(kernels.SCALE)
    canons = _classes(m for m in _complete_masks(kernels.SCALE) if cells[m] == 0)
    return _entries(canons, HARMONY_PATTERNS, "harmony", HARMONY_ORDER)


def harmony(name: str) -> CatalogEntry:
    for e in classify_harmonies():
        if e.name == name.upper():
            return e
    raise PreconditionError(f"unknown harmony {name!r}")


def harmony_scale(name: str, root: int = 0) -> PitchClassSet:
    return HARMONY_PATTERNS[harmony(name).name].transpose(root)


def harmony_scales() -> list[PitchClassSet]:
    """All 57 distinct harmony scales."""
    return sorted(t for e in classify_harmonies() for t in e.shape.transpositions())


def identify_harmony(s: PCSetLike) -> str | None:
    return _name_for(kernels.canonical(as_set(s).mask), HARMONY_PATTERNS)


class PackingClassification(NamedTuple):
    blockfree: list[CatalogEntry]
    irreducible: list[CatalogEntry]
    complete_count: int


@lru_cache(maxsize=None)
def classify_packings() -> PackingClassification:
    blocks = count_table(kernels.PACKING)
    comp = _complete_masks(kernels.PACKING)
    free = _entries(_classes(m for m in comp if blocks[m] == 0), PACKING_PATTERNS,
                    "packing_blockfree", BLOCKFREE_NAMES)
    irr = _entries(_classes(_irreducible_masks(kernels.PACKING)), PACKING_PATTERNS,
                   "packing_irreducible", PACKING_ORDER)
    return PackingClassification(free, irr, complete_counts()["packings"].value)


def packing(name: str) -> CatalogEntry:
    for e in classify_packings().irreducible:
        if e.name == name.lower():
            return e
    raise PreconditionError(f"unknown packing {name!r}")


class ChordClassification(NamedTuple):
    irreducible: list[CatalogEntry]
    complete_count: int


def _chord_masks() -> tuple[int, ...]:
    # chords have at least two tones
    return tuple(m for m in _complete_masks(kernels.CHORD) if m.bit_count() >= 2)


@lru_cache(maxsize=None)
def classify_chords() -> ChordClassification:
    irr = [m for m in _irreducible_masks(kernels.CHORD) if m.bit_count() >= 2]
    entries = _entries(_classes(irr), CHORD_PATTERNS, "chord_irreducible", CHORD_ORDER)
    return ChordClassification(entries, complete_counts()["chords"].value)


def chord(name: str) -> CatalogEntry:
    for e in classify_chords().irreducible:
        if e.name == name:
            return e
    raise PreconditionError(f"unknown irreducible chord {name!r}")


@lru_cache(maxsize=None)
def complete_counts() -> dict[str, CountReport]:
    scales = _complete_masks(kernels.SCALE)
    packings = _complete_masks(kernels.PACKING)
    chords = _chord_masks()
    return {
        "packings": CountReport("packings", len(packings), len(_classes(packings)),
                                PUBLISHED_COUNTS["packings"]),
        "chords": CountReport("chords", len(chords), len(_classes(chords)),
                              PUBLISHED_COUNTS["chords"]),
        "scales": CountReport("scales", len(scales), len(_classes(scales)),
                              PUBLISHED_COUNTS["scales"]),
    }


@dataclass(frozen=True)
class Characterization:
    members: list[ShapeClass]
    irreducible: list[ShapeClass]
    residue: list[ShapeClass]
    residue_names: list[str]


def _characterize(pred, names) -> Characterization:
    irr = {e.shape.canonical.mask for e in classify_chords().irreducible}
    members = _classes(m for m in _chord_masks() if pred(m))
    residue = [c for c in members if c not in irr]
    lookup = {kernels.canonical(k.mask): v for k, v in names.items()}
    return Characterization(
        [ShapeClass.of(c) for c in members],
        [ShapeClass.of(c) for c in members if c in irr],
        [ShapeClass.of(c) for c in residue],
        [lookup.get(c, "unnamed") for c in residue],
    )


def characterize_one_block_chords() -> Characterization:
    blocks, tcells = count_table(kernels.PACKING), count_table(kernels.CHORD)
    return _characterize(lambda m: blocks[m] <= 1 and tcells[m] == 0, ONE_BLOCK_RESIDUE_NAMES)


def characterize_one_cell_chords() -> Characterization:
    blocks, tcells = count_table(kernels.PACKING), count_table(kernels.CHORD)
    return _characterize(lambda m: blocks[m] == 0 and tcells[m] <= 1, ONE_CELL_RESIDUE_NAMES)


def auxiliary_result_holds() -> bool:
    """A set contains a semitone cell exactly when its complement is not packing-complete."""
    cells = count_table(kernels.SCALE)
    comp = complete_table(kernels.PACKING)
    return all((cells[m] > 0) == (not comp[kernels.FULL ^ m]) for m in range(kernels.NSETS))


def verify_duality() -> list[DualityPair]:
    packs = {e.name: e for e in classify_packings().irreducible}
    pairs = []
    for h in classify_harmonies():
        comp = kernels.canonical(kernels.FULL ^ h.shape.canonical.mask)
        name = _name_for(comp, {n: e.rooted for n, e in packs.items()})
        if name != DUALS[h.name]:
            raise TheoremViolation(f"complement of {h.name} is {name}, expected {DUALS[h.name]}")
        pairs.append(DualityPair(h, packs[name], comp == h.shape.canonical.mask))
    if not auxiliary_result_holds():
        raise TheoremViolation("cell / incomplete-complement equivalence fails")
    return pairs


@lru_cache(maxsize=None)
def classify_triads() -> list[CatalogEntry]:
    tb = count_table(kernels.TRIAD)
    canons = _classes(m for m in _complete_masks(kernels.TRIAD) if tb[m] == 0)
    return _entries(canons, TRIAD_PATTERNS, "triad", tuple(TRIAD_PATTERNS))


@lru_cache(maxsize=None)
def irreducible_chord_sets() -> tuple[PitchClassSet, ...]:
    """Every concrete irreducible chord (all transpositions of the 11 shapes)."""
    return tuple(PitchClassSet(m) for m in _irreducible_masks(kernels.CHORD))


def complete_triad_in_harmony(triad: PCSetLike, harmony_set: PCSetLike) -> list[PitchClassSet]:
    t, h = as_set(triad), as_set(harmony_set)
    if not any(kernels.canonical(t.mask) == kernels.canonical(b.mask) for b in BASIC_TRIADS.values()):
        raise PreconditionError(f"{t} is not a basic triad")
    if identify_harmony(h) is None:
        raise PreconditionError(f"{h} is not a harmony")
    if not t.issubset(h):
        raise PreconditionError(f"{t} is not contained in {h}")
    return [c for c in irreducible_chord_sets() if t.issubset(c) and c.issubset(h)]


@dataclass(frozen=True)
class ScaleCensus:
    census: dict[int, int]
    irreducible: list[CatalogEntry]

    @property
    def total(self) -> int:
        return sum(self.census.values())


@lru_cache(maxsize=None)
def classify_scales_with_cells() -> ScaleCensus:
    cells = count_table(kernels.SCALE)
    classes = _classes(_complete_masks(kernels.SCALE))
    census = {n: 0 for n in range(13)}
    for c in classes:
        census[cells[c]] += 1
    names = {h.shape.canonical.mask: h.name for h in classify_harmonies()}
    dh = kernels.canonical(DOUBLE_HARMONIC.mask)
    irr = []
    for c in _classes(_irreducible_masks(kernels.SCALE)):
        shape = ShapeClass.of(c)
        if c in names:
            name, rooted = names[c], HARMONY_PATTERNS[names[c]]
        elif c == dh:
            name, rooted = "double harmonic", DOUBLE_HARMONIC
        else:
            name, rooted = "S" + ",".join(map(str, PitchClassSet(c))), PitchClassSet(c)
        irr.append(CatalogEntry(name, "scale_irreducible", shape, rooted, shape.multiplicity))
    irr.sort(key=lambda e: (cells[e.shape.canonical.mask], e.shape.canonical.mask))
    return ScaleCensus(census, irr)


def whole_tone_overlap(s: PCSetLike) -> int:
    """Longest run of consecutive scale tones a whole tone apart."""
    pcs = sorted(as_set(s))
    n = len(pcs)
    if n == 0:
        return 0
    steps = [(pcs[(i + 1) % n] - pcs[i]) % 12 for i in range(n)]
    if all(d == 2 for d in steps):
        return n
    best = 1
    for i in range(n):
        run = 1
        while run < n and steps[(i + run - 1) % n] == 2:
            run += 1
        best = max(best, run)
    return best


def export_catalog() -> dict:
    packs = classify_packings()
    chords = classify_chords()
    census = classify_scales_with_cells()
    return {
        "format_version": FORMAT_VERSION,
        "families": {
            "harmony": [e.to_json() for e in classify_harmonies()],
            "packing_blockfree": [e.to_json() for e in packs.blockfree],
            "packing_irreducible": [e.to_json() for e in packs.irreducible],
            "chord_irreducible": [e.to_json() for e in chords.irreducible],
            "triad": [e.to_json() for e in classify_triads()],
            "scale_irreducible": [e.to_json() for e in census.irreducible],
        },
        "counts": {k: v.to_json() for k, v in complete_counts().items()},
        "scale_census": {str(k): v for k, v in census.census.items()},
        "duality": [{"harmony": p.harmony.name, "packing": p.packing.name,
                     "self_dual": p.self_dual} for p in verify_duality()],
        "backend": kernels.BACKEND,
    }
