"""Embeddings of packings and chords into harmonies, projection and blue notes."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence, Union

from . import catalog, kernels
from .catalog import CatalogEntry
from .errors import PreconditionError, TheoremViolation
from .pcset import PCSetLike, PitchClassSet, ShapeClass, as_set


@dataclass(frozen=True)
class Embedding:
    inner: str
    outer: PitchClassSet
    root: int
    notes: PitchClassSet

    def to_json(self) -> dict:
        return {"inner": self.inner, "root": self.root, "notes": list(self.notes)}


Inner = Union[CatalogEntry, ShapeClass, PitchClassSet]


def _rooted(inner: Inner) -> tuple[str, PitchClassSet]:
    if isinstance(inner, CatalogEntry):
        return inner.name, inner.rooted
    if isinstance(inner, ShapeClass):
        return str(inner.canonical), inner.canonical
    return str(inner), inner


def embeddings_of(inner: Inner, outer: PCSetLike, start: int = 0) -> list[Embedding]:
    """One embedding per distinct copy of ``inner`` inside ``outer``.

    A copy reachable from several roots (symmetric shapes) is reported at the
    first root met when scanning upward from ``start``.
    """
    name, pattern = _rooted(inner)
    out_set = as_set(outer)
    seen: set[int] = set()
    found = []
    for i in range(12):
        r = (start + i) % 12
        notes = pattern.transpose(r)
        if notes.issubset(out_set) and notes.mask not in seen:
            seen.add(notes.mask)
            found.append(Embedding(name, out_set, r, notes))
    return found


def embedding_roots(inner: Inner, outer: PCSetLike, start: int = 0) -> list[int]:
    return [e.root for e in embeddings_of(inner, outer, start)]


def packing_embeddings_table(harmony_root: int = 0) -> dict[str, dict[str, list[int]]]:
    packs = catalog.classify_packings().irreducible
    table = {}
    for h in catalog.classify_harmonies():
        scale = h.rooted.transpose(harmony_root)
        table[h.name] = {p.name: embedding_roots(p, scale, harmony_root) for p in packs}
    return table


def chord_embeddings_table(harmony_root: int = 0) -> dict[str, dict[str, list[int]]]:
    chords = catalog.classify_chords().irreducible
    table = {}
    for h in catalog.classify_harmonies():
        scale = h.rooted.transpose(harmony_root)
        table[h.name] = {c.name: embedding_roots(c, scale, harmony_root) for c in chords}
    return table


def chord_embeddings(harmony: PCSetLike) -> list[Embedding]:
    """All irreducible chords inside ``harmony``, in catalog order."""
    h = as_set(harmony)
    return [e for c in catalog.classify_chords().irreducible for e in embeddings_of(c, h)]


def _check_projection(packing: PitchClassSet, harmony: PitchClassSet) -> None:
    if not packing.issubset(harmony):
        raise PreconditionError(f"packing {packing} is not inside harmony {harmony}")
    if not catalog.is_packing_complete(packing):
        raise PreconditionError(f"packing {packing} is not complete")
    if kernels.cells(harmony.mask):
        raise PreconditionError(f"{harmony} contains a semitone cell")


def project(tone: int, packing: PCSetLike, harmony: PCSetLike) -> int:
    """Map a harmony tone onto the packing: itself, or its one semitone neighbour."""
    p, h = as_set(packing), as_set(harmony)
    _check_projection(p, h)
    tone %= 12
    if tone not in h:
        raise PreconditionError(f"tone {tone} is not in harmony {h}")
    if tone in p:
        return tone
    near = [n for n in ((tone - 1) % 12, (tone + 1) % 12) if n in p]
    if len(near) != 1:
        raise TheoremViolation(f"tone {tone} has {len(near)} semitone neighbours in {p}")
    return near[0]


def project_line(tones: Sequence[int], packing: PCSetLike, harmony: PCSetLike) -> list[int]:
    out = []
    for i, t in enumerate(tones):
        try:
            out.append(project(t, packing, harmony))
        except (PreconditionError, TheoremViolation) as exc:
            raise type(exc)(f"position {i}: {exc}") from exc
    return out


@dataclass(frozen=True)
class BlueNoteReport:
    packing: PitchClassSet
    creates_cell: PitchClassSet
    unique_projection: PitchClassSet
    double_resolution: PitchClassSet

    def to_json(self) -> dict:
        return {"packing": list(self.packing), "creates_cell": list(self.creates_cell),
                "unique_projection": list(self.unique_projection),
                "double_resolution": list(self.double_resolution)}


def blue_notes(packing: PCSetLike) -> BlueNoteReport:
    p = as_set(packing)
    if not catalog.is_packing_complete(p):
        raise PreconditionError(f"packing {p} is not complete")
    cell, unique, double = [], [], []
    for t in p.complement():
        if kernels.cells(p.add(t).mask):
            cell.append(t)
        n = ((t - 1) % 12 in p) + ((t + 1) % 12 in p)
        if n == 1:
            unique.append(t)
        elif n == 2:
            double.append(t)
    return BlueNoteReport(p, PitchClassSet.of(cell), PitchClassSet.of(unique), PitchClassSet.of(double))


def harmonization_candidates(harmony: PCSetLike, top: int,
                             avoid_semitone_below: bool = False) -> list[PitchClassSet]:
    h = as_set(harmony)
    top %= 12
    if top not in h:
        raise PreconditionError(f"tone {top} is not in {h}")
    out = []
    for e in chord_embeddings(h):
        if top not in e.notes:
            continue
        if avoid_semitone_below and (top - 1) % 12 in e.notes:
            continue
        out.append(e.notes)
    return out


@dataclass(frozen=True)
class CoverReport:
    harmony: str
    dual: str
    dual_roots: list[int]
    dual_covers: bool
    packing_union: PitchClassSet
    uncovered: PitchClassSet
    chord_cover: list[Embedding] = field(default_factory=list)

    def to_json(self) -> dict:
        return {"harmony": self.harmony, "dual": self.dual, "dual_roots": self.dual_roots,
                "dual_covers": self.dual_covers, "packing_union": list(self.packing_union),
                "uncovered": list(self.uncovered),
                "chord_cover": [e.to_json() for e in self.chord_cover]}


def _smallest_chord_cover(h: PitchClassSet) -> list[Embedding]:
    chords = chord_embeddings(h)
    for k in range(1, len(chords) + 1):
        for combo in combinations(chords, k):
            m = 0
            for e in combo:
                m |= e.notes.mask
            if m == h.mask:
                return list(combo)
    return []


def covering_check(harmony: PCSetLike) -> CoverReport:
    """Does the dual packing cover the harmony?  If not, what is missing?"""
    h = as_set(harmony)
    name = catalog.identify_harmony(h)
    if name is None:
        raise PreconditionError(f"{h} is not a harmony")
    dual = catalog.packing(catalog.DUALS[name])
    copies = embeddings_of(dual, h)
    union = 0
    for e in copies:
        union |= e.notes.mask
    covers = bool(copies) and union == h.mask
    every = 0
    for p in catalog.classify_packings().irreducible:
        for e in embeddings_of(p, h):
            every |= e.notes.mask
    if covers:
        return CoverReport(name, dual.name, [e.root for e in copies], True,
                           PitchClassSet(union), PitchClassSet())
    return CoverReport(name, dual.name, [e.root for e in copies], False, PitchClassSet(every),
                       h - PitchClassSet(every), _smallest_chord_cover(h))
