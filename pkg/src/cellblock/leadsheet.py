"""Lead-sheet chord symbols: parsing, tones, modes, voicings and packings.

The accepted grammar is written out in ``GRAMMAR.md`` next to this file.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from functools import lru_cache
from importlib import resources
from typing import Optional

from . import catalog, embed, modes
from .errors import ChordSyntaxError, DomainError, PreconditionError
from .modes import Mode
from .pcset import PitchClassSet, note_name, note_value

QUALITIES = ("maj", "min", "dom", "dim", "aug", "half_dim", "sus4", "minmaj")
EXTENSIONS = (6, 7, 9, 11, 13)
ALTERATIONS = ("b5", "#5", "b9", "#9", "#11", "b13", "alt")

_TRIAD = {"maj": (0, 4, 7), "min": (0, 3, 7), "dom": (0, 4, 7), "dim": (0, 3, 6),
          "aug": (0, 4, 8), "half_dim": (0, 3, 6), "sus4": (0, 5, 7), "minmaj": (0, 3, 7)}
_SEVENTH = {"maj": 11, "min": 10, "dom": 10, "dim": 9, "aug": 10,
            "half_dim": 10, "sus4": 10, "minmaj": 11}
_UPPER = {9: 2, 11: 5, 13: 9}
_ALTERED = {"b5": 6, "#5": 8, "b9": 1, "#9": 3, "#11": 6, "b13": 8}
_ADDED = {2: 2, 4: 5, 6: 9, 9: 2, 11: 5, 13: 9}
# alterations that collide with an explicitly named upper extension
_CLASH = {"b9": 9, "#9": 9, "#11": 11, "b13": 13}
_ALT_ORDER = {a: i for i, a in enumerate(("b5", "#5", "b9", "#9", "#11", "b13", "alt"))}

VOICING_SHAPES = {
    "maj6": PitchClassSet.of([0, 4, 7, 9]),
    "min7": PitchClassSet.of([0, 3, 7, 10]),
    "maj7": PitchClassSet.of([0, 4, 7, 11]),
    "dom7": PitchClassSet.of([0, 4, 7, 10]),
    "dim7": PitchClassSet.of([0, 3, 6, 9]),
    "min7b5": PitchClassSet.of([0, 3, 6, 10]),
    "maj7b5": PitchClassSet.of([0, 4, 6, 11]),
    "aug": PitchClassSet.of([0, 4, 8]),
    "min11": PitchClassSet.of([0, 3, 5, 10]),
    "dom#11": PitchClassSet.of([0, 4, 6, 10]),
    "dom11": PitchClassSet.of([0, 4, 5, 10]),
    # named from the lower tone of the semitone pair a fourth above it
    "dem": PitchClassSet.of([0, 5, 6, 11]),
}


@dataclass(frozen=True)
class ChordSymbol:
    root: int
    root_name: str
    quality: str
    extensions: frozenset[int] = frozenset()
    alterations: frozenset[str] = frozenset()
    additions: frozenset[int] = frozenset()
    slash_bass: Optional[int] = None
    bass_name: Optional[str] = None
    warnings: tuple[str, ...] = field(default=(), compare=False)

    def __str__(self) -> str:
        return format_chord(self)

    def to_json(self) -> dict:
        return {
            "symbol": format_chord(self),
            "root": self.root, "root_name": self.root_name, "quality": self.quality,
            "extensions": sorted(self.extensions),
            "alterations": sorted(self.alterations, key=_ALT_ORDER.__getitem__),
            "additions": sorted(self.additions),
            "slash_bass": self.slash_bass,
            "tones": list(chord_tones(self)),
            "warnings": list(self.warnings),
        }


# parsing

_SKIP = " \t^{}"
_UNICODE = {"♯": "#", "♭": "b", "−": "-", "–": "-", "ø": "Ø", "△": "Δ"}


class _Parser:
    def __init__(self, text: str):
        self.raw = text
        self.s = "".join(_UNICODE.get(ch, ch) for ch in text)
        self.i = 0

    def error(self, msg: str, pos: Optional[int] = None) -> ChordSyntaxError:
        return ChordSyntaxError(self.raw, self.i if pos is None else pos, msg)

    def skip(self) -> None:
        while self.i < len(self.s) and self.s[self.i] in _SKIP:
            self.i += 1

    def peek(self, word: str) -> bool:
        self.skip()
        return self.s.startswith(word, self.i)

    def take(self, *words: str) -> Optional[str]:
        self.skip()
        for w in words:
            if self.s.startswith(w, self.i):
                self.i += len(w)
                return w
        return None

    def number(self) -> Optional[int]:
        self.skip()
        j = self.i
        while j < len(self.s) and self.s[j].isdigit():
            j += 1
        if j == self.i:
            return None
        n = int(self.s[self.i:j])
        self.i = j
        return n

    def note(self) -> tuple[int, str]:
        self.skip()
        start = self.i
        if self.i >= len(self.s) or self.s[self.i] not in "ABCDEFG":
            raise self.error("expected a note letter A-G")
        self.i += 1
        if self.i < len(self.s) and self.s[self.i] in "#b":
            self.i += 1
        name = self.s[start:self.i]
        return note_value(name), name


def parse_chord(text: str) -> ChordSymbol:
    """Parse a lead-sheet chord symbol such as ``"Cmin7(b5)"`` or ``"G7(b9,b13)/B"``."""
    p = _Parser(text)
    if not p.s.strip(_SKIP):
        raise p.error("empty chord symbol", 0)
    root, root_name = p.note()
    quality: Optional[str] = None
    implied7 = False
    exts: set[int] = set()
    alts: set[str] = set()
    adds: set[int] = set()

    def extension() -> None:
        pos = p.i
        n = p.number()
        if n is None:
            return
        if n not in EXTENSIONS:
            raise p.error(f"unsupported extension {n}", pos)
        exts.add(n)

    word = p.take("maj", "min", "dim", "aug", "dom", "sus4", "sus", "M", "m", "-",
                  "Δ", "°", "+", "Ø")
    if word in ("maj", "M", "Δ"):
        quality = "maj"
        implied7 = word == "Δ"
    elif word in ("min", "m", "-"):
        quality = "min"
        save = p.i
        paren = p.take("(")
        if p.take("maj", "Maj", "M", "Δ"):
            quality, implied7 = "minmaj", True
            extension()
            if paren and not p.take(")"):
                raise p.error("expected ')'")
        else:
            p.i = save
    elif word == "dim":
        quality = "dim"
    elif word == "°":
        quality, implied7 = "dim", True
    elif word in ("aug", "+"):
        quality = "aug"
    elif word == "dom":
        quality = "dom"
    elif word in ("sus4", "sus"):
        quality = "sus4"
    elif word == "Ø":
        quality, implied7 = "half_dim", True

    extension()
    if p.take("sus4", "sus"):
        if quality not in (None, "dom"):
            raise p.error("sus4 cannot follow this quality")
        quality = "sus4"
    if p.take("alt"):
        alts.add("alt")

    def alteration(pos: int) -> bool:
        acc = p.take("b", "#")
        if acc is None:
            return False
        n = p.number()
        if n is None:
            raise p.error("expected a degree after accidental")
        label = f"{acc}{n}"
        if label not in _ALTERED:
            raise p.error(f"unknown alteration {label}", pos)
        alts.add(label)
        return True

    while True:
        p.skip()
        if p.i >= len(p.s) or p.peek("/"):
            break
        pos = p.i
        if p.take("("):
            while True:
                q = p.i
                if p.take("sus4", "sus"):
                    if quality not in (None, "dom"):
                        raise p.error("sus4 cannot follow this quality", q)
                    quality = "sus4"
                elif p.take("add"):
                    n = p.number()
                    if n not in _ADDED:
                        raise p.error("expected a degree after add", q)
                    adds.add(n)
                elif p.take("maj7", "M7"):
                    if quality != "min":
                        raise p.error("maj7 in parentheses only follows min", q)
                    quality, implied7 = "minmaj", True
                elif not alteration(q):
                    raise p.error("expected an alteration, add or sus4")
                if p.take(","):
                    continue
                if p.take(")"):
                    break
                raise p.error("expected ',' or ')'")
        elif p.take("add"):
            n = p.number()
            if n not in _ADDED:
                raise p.error("expected a degree after add", pos)
            adds.add(n)
        elif p.take("alt"):
            alts.add("alt")
        elif not alteration(pos):
            raise p.error("unexpected character")

    bass = bass_name = None
    if p.take("/"):
        bass, bass_name = p.note()
    p.skip()
    if p.i != len(p.s):
        raise p.error("trailing characters")

    return _normalize(text, root, root_name, quality, implied7, exts, alts, adds, bass, bass_name)


def _normalize(text, root, root_name, quality, implied7, exts, alts, adds, bass, bass_name):
    warnings = []
    if implied7 and not exts & {7, 9, 11, 13}:
        exts.add(7)
    if "alt" in alts and not exts & {7, 9, 11, 13}:
        exts.add(7)
    if quality is None:
        quality = "dom" if exts & {7, 9, 11, 13} else "maj"
    if quality == "dom" and not exts & {7, 9, 11, 13}:
        raise ChordSyntaxError(text, len(text), "dom needs a 7th or higher extension")
    if quality == "min" and "b5" in alts and exts & {7, 9, 11, 13}:
        quality = "half_dim"
        alts.discard("b5")
    if quality == "dom" and "alt" not in alts:
        if "b5" in alts:
            alts.discard("b5")
            alts.add("#11")
            warnings.append("b5 on a dominant read as #11")
        if "#5" in alts:
            alts.discard("#5")
            alts.add("b13")
            warnings.append("#5 on a dominant read as b13")
    if 6 in exts and len(exts) > 1:
        raise ChordSyntaxError(text, len(text), "6 combined with another extension")
    for a, d in _CLASH.items():
        if a in alts and d in exts:
            raise ChordSyntaxError(text, len(text), f"{a} contradicts the natural {d}th")
    return ChordSymbol(root, root_name, quality, frozenset(exts), frozenset(alts),
                       frozenset(adds), bass, bass_name, tuple(warnings))


# printing

def _acc(text: str, unicode: bool) -> str:
    return text.replace("#", "♯").replace("b", "♭") if unicode else text


def format_chord(sym: ChordSymbol, unicode: bool = False) -> str:
    """Canonical ASCII spelling; ``parse_chord(format_chord(s)) == s``."""
    q, ext = sym.quality, max(sym.extensions, default=None)
    seventh = ext in (7, 9, 11, 13)
    n = str(ext) if ext is not None else ""
    alts = sorted(sym.alterations - {"alt"}, key=_ALT_ORDER.__getitem__)
    extra: list[str] = []
    if q == "maj":
        body = ("maj" + n) if seventh else n
    elif q == "min":
        body = "min" + n
    elif q == "dom":
        body = n
    elif q == "dim":
        body = "dim" + n
    elif q == "aug":
        body = "aug" + n
    elif q == "half_dim":
        body = "min" + n
        alts = ["b5"] + alts
    elif q == "sus4":
        body = n if seventh else "sus4"
        if seventh:
            extra.append("sus4")
    else:  # minmaj
        body = "min(maj" + n + ")"
    if "alt" in sym.alterations:
        body += "alt"
    items = extra + [_acc(a, unicode) for a in alts] + [f"add{a}" for a in sorted(sym.additions)]
    out = _acc(sym.root_name, unicode) + body
    if items:
        out += "(" + ",".join(items) + ")"
    if sym.slash_bass is not None:
        out += "/" + _acc(sym.bass_name or note_name(sym.slash_bass, "jazz"), unicode)
    return out


# tones

def chord_tones(sym: ChordSymbol) -> PitchClassSet:
    q = sym.quality
    iv = set(_TRIAD[q])
    ext = sym.extensions
    if ext & {7, 9, 11, 13}:
        iv.add(_SEVENTH[q])
    if 6 in ext:
        iv.add(9)
    upper = [e for e in ext if e in _UPPER]
    for e in upper:
        iv.add(_UPPER[e])
    if upper and 7 in iv:
        iv.discard(7)  # higher extensions drop the fifth
    for a in sym.alterations:
        if a == "alt":
            iv.discard(7)
            iv.update((1, 3, 6, 8))
        elif a in ("b5", "#5"):
            iv.discard(7)
            iv.add(_ALTERED[a])
        else:
            iv.add(_ALTERED[a])
    for a in sym.additions:
        iv.add(_ADDED[a])
    return PitchClassSet.of(i + sym.root for i in iv)


# correspondence tables

@lru_cache(maxsize=None)
def _data() -> dict:
    with resources.files("cellblock").joinpath("data/correspondence.json").open(encoding="utf-8") as f:
        return json.load(f)


def _kind_key(sym: ChordSymbol) -> str:
    """Canonical spelling of the symbol moved to C with no slash bass."""
    return format_chord(replace(sym, root=0, root_name="C", slash_bass=None, bass_name=None))


@lru_cache(maxsize=None)
def _table(name: str) -> dict[str, dict]:
    return {_kind_key(parse_chord(row["symbol"])): row for row in _data()[name]}


def voicing_rows() -> list[dict]:
    return list(_data()["voicing_table"])


def packing_rows() -> list[dict]:
    return list(_data()["packing_table"])


def _reductions(sym: ChordSymbol):
    yield sym
    if sym.additions:
        sym = replace(sym, additions=frozenset())
        yield sym
    if sym.extensions & {9, 11, 13}:
        yield replace(sym, extensions=frozenset({7}))


def _lookup(name: str, sym: ChordSymbol) -> Optional[dict]:
    table = _table(name)
    for s in _reductions(sym):
        row = table.get(_kind_key(s))
        if row is not None:
            return row
    return None


def _row_modes(row: dict, root: int) -> list[Mode]:
    return [modes.mode_of_degree(m["harmony"], note_value(m["root"]) + root, m["degree"])
            for m in row["modes"]]


def _search_order():
    for h in ("MEL", "HMIN", "HMAJ", "DIM", "WTONE", "AUG"):
        n = len(catalog.HARMONY_PATTERNS[h])
        for degree in range(1, n + 1):
            yield h, degree


def chord_to_mode(sym: ChordSymbol) -> Mode:
    """The mode for a chord symbol; the symbol's root is the mode's bass."""
    row = _table("voicing_table").get(_kind_key(sym))
    if row is not None:
        return _row_modes(row, sym.root)[0]
    tones = chord_tones(sym)
    for m in modes.major_modes_for_bass(sym.root):
        if tones.issubset(m.scale):
            return m
    for h, degree in _search_order():
        # harmony root that puts the symbol's root on this degree
        base = modes.mode_of_degree(h, 0, degree)
        m = modes.mode_of_degree(h, sym.root - base.bass, degree)
        if tones.issubset(m.scale):
            return m
    raise DomainError(f"no harmony mode contains the tones of {sym}")


def alternative_modes(sym: ChordSymbol) -> list[Mode]:
    row = _table("voicing_table").get(_kind_key(sym))
    return _row_modes(row, sym.root)[1:] if row else []


@dataclass(frozen=True)
class Voicing:
    name: str
    chord: PitchClassSet
    bass: int
    bass_name: str

    def __str__(self) -> str:
        return f"{self.name}/{self.bass_name}"

    def to_json(self) -> dict:
        return {"voicing": str(self), "chord": list(self.chord), "bass": self.bass}


def parse_voicing_name(text: str, bass: int = 0, bass_name: Optional[str] = None) -> Voicing:
    p = _Parser(text)
    root, root_name = p.note()
    shape = p.s[p.i:].strip()
    if shape not in VOICING_SHAPES:
        raise DomainError(f"unknown voicing shape {shape!r} in {text!r}")
    return Voicing(text, VOICING_SHAPES[shape].transpose(root), bass % 12,
                   bass_name or note_name(bass, "jazz"))


def _transpose_label(label: str, k: int) -> str:
    p = _Parser(label)
    root, _ = p.note()
    return note_name(root + k, "jazz") + p.s[p.i:]


@dataclass(frozen=True)
class VoicingResult:
    symbol: ChordSymbol
    voicing: Optional[Voicing]
    alternatives: list[Voicing]
    candidates: list[PitchClassSet] = field(default_factory=list)

    @property
    def covered(self) -> bool:
        return self.voicing is not None

    def to_json(self) -> dict:
        return {"symbol": format_chord(self.symbol), "covered": self.covered,
                "voicing": self.voicing.to_json() if self.voicing else None,
                "alternatives": [v.to_json() for v in self.alternatives],
                "harmonization_candidates": [list(c) for c in self.candidates]}


def standard_voicing(sym: ChordSymbol) -> VoicingResult:
    row = _lookup("voicing_table", sym)
    bname = sym.root_name
    if row is None:
        mode = chord_to_mode(sym)
        return VoicingResult(sym, None, [], embed.harmonization_candidates(mode.scale, sym.root))
    vs = [parse_voicing_name(_transpose_label(v, sym.root), sym.root, bname) for v in row["voicings"]]
    return VoicingResult(sym, vs[0], vs[1:])


def improvisation_packing(sym: ChordSymbol) -> list[tuple[str, int]]:
    row = _lookup("packing_table", sym)
    if row is None:
        raise DomainError(f"no packing suggestion for {format_chord(sym)}")
    return [(name, (note_value(r) + sym.root) % 12) for name, r in row["packings"]]


def packing_notes(name: str, root: int) -> PitchClassSet:
    return catalog.PACKING_PATTERNS[name].transpose(root)


def tritone_pair(sym: ChordSymbol) -> PitchClassSet:
    return PitchClassSet.of([sym.root + 4, sym.root + 10])


def tritone_substitute(sym: ChordSymbol) -> ChordSymbol:
    if sym.quality != "dom":
        raise PreconditionError(f"{format_chord(sym)} is not a dominant chord")
    new_root = (sym.root + 6) % 12
    bass = None if sym.slash_bass is None else (sym.slash_bass + 6) % 12
    return replace(sym, root=new_root, root_name=note_name(new_root, "jazz"),
                   slash_bass=bass, bass_name=None if bass is None else note_name(bass, "jazz"),
                   warnings=())
