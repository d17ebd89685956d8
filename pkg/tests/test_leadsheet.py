from importlib import resources

import pytest
from hypothesis import given, strategies as st

from cellblock import catalog, embed, leadsheet
from cellblock.errors import ChordSyntaxError, DomainError, PreconditionError
from cellblock.leadsheet import chord_tones, format_chord, parse_chord
from cellblock.pcset import JAZZ_NAMES, PitchClassSet, canonical, parse_pcset


def load_corpus():
    text = resources.files("cellblock").joinpath("data/corpus.txt").read_text(encoding="utf-8")
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        sym, _, tones = line.partition("->")
        rows.append((sym.strip(), parse_pcset(tones) if tones.strip() else None))
    return rows


CORPUS = load_corpus()


def test_corpus_is_large_enough():
    assert len(CORPUS) >= 40
    assert all(t is not None for _, t in CORPUS)


@pytest.mark.parametrize("symbol, tones", CORPUS, ids=[s for s, _ in CORPUS])
def test_corpus_symbol(symbol, tones):
    sym = parse_chord(symbol)
    assert chord_tones(sym) == tones
    assert parse_chord(format_chord(sym)) == sym
    assert parse_chord(format_chord(sym, unicode=True)) == sym


@pytest.mark.parametrize("text, quality", [
    ("Cmaj7", "maj"), ("C-7", "min"), ("C7", "dom"), ("Cdom7", "dom"), ("C°", "dim"),
    ("CØ", "half_dim"), ("Cmin7(b5)", "half_dim"), ("C7sus4", "sus4"), ("CmM7", "minmaj"),
    ("Cmin(maj7)", "minmaj"), ("C+", "aug"), ("Csus4", "sus4"),
])
def test_qualities(text, quality):
    assert parse_chord(text).quality == quality


def test_slash_bass():
    s = parse_chord("G7(b9,b13)/B")
    assert s.slash_bass == 11
    assert format_chord(s) == "G7(b9,b13)/B"


def test_dominant_b5_reads_as_sharp_eleven():
    s = parse_chord("C7(b5)")
    assert s.alterations == {"#11"}
    assert s.warnings
    assert parse_chord("C7(#11)") == s


def test_alt_implies_seventh():
    s = parse_chord("Calt")
    assert 7 in s.extensions
    assert list(chord_tones(s)) == [0, 1, 3, 4, 6, 8, 10]


@pytest.mark.parametrize("bad", ["", "H7", "Cxyz", "C7(b9", "C7(b9,)", "C8", "C9(b9)",
                                 "Cmaj(maj7)", "C7/", "Cdom", "C69", "C7(b10)", "Cadd3"])
def test_syntax_errors(bad):
    with pytest.raises(ChordSyntaxError):
        parse_chord(bad)


def test_error_message_points_at_the_fault():
    with pytest.raises(ChordSyntaxError) as info:
        parse_chord("Cxyz")
    assert info.value.pos == 1
    assert "^" in str(info.value)


# generated symbols: every combination the grammar can print must read back

roots = st.sampled_from(JAZZ_NAMES)
shapes = st.sampled_from(["", "maj7", "min", "min7", "7", "9", "13", "dim7", "aug", "min(maj7)",
                          "6", "min6", "7(sus4)", "min9", "maj9", "min11", "7alt"])
alts = st.lists(st.sampled_from(["b9", "#9", "#11", "b13"]), unique=True, max_size=3)


@given(roots, shapes, alts, st.one_of(st.none(), roots))
def test_print_parse_round_trip(root, shape, alterations, bass):
    text = root + shape
    if alterations and shape in ("7", "13", "min7"):
        text += "(" + ",".join(alterations) + ")"
    if bass:
        text += "/" + bass
    try:
        sym = parse_chord(text)
    except ChordSyntaxError:
        return  # e.g. b9 beside 13's implied 9th is rejected on purpose
    again = parse_chord(format_chord(sym))
    assert again == sym
    assert chord_tones(again) == chord_tones(sym)


@given(roots, st.integers(0, 11))
def test_tones_transpose_with_the_root(root, k):
    s = parse_chord(root + "7(b9)")
    moved = parse_chord(JAZZ_NAMES[(JAZZ_NAMES.index(root) + k) % 12] + "7(b9)")
    assert chord_tones(moved) == chord_tones(s).transpose(k)


# correspondence tables

def _voicing_rows():
    return [(r["symbol"], r) for r in leadsheet.voicing_rows()]


@pytest.mark.parametrize("symbol, row", _voicing_rows(), ids=[s for s, _ in _voicing_rows()])
def test_voicing_row_is_consistent(symbol, row):
    sym = parse_chord(symbol)
    mode = leadsheet.chord_to_mode(sym)
    assert chord_tones(sym).issubset(mode.scale)
    res = leadsheet.standard_voicing(sym)
    assert res.covered
    for v in [res.voicing, *res.alternatives]:
        assert v.chord.issubset(mode.scale), (symbol, str(v))
    for m in leadsheet.alternative_modes(sym):
        assert chord_tones(sym).issubset(m.scale)


def _packing_rows():
    return [(r["symbol"], r) for r in leadsheet.packing_rows()]


@pytest.mark.parametrize("symbol, row", _packing_rows(), ids=[s for s, _ in _packing_rows()])
def test_packing_row_embeds_in_mode(symbol, row):
    sym = parse_chord(symbol)
    mode = leadsheet.chord_to_mode(sym)
    for name, root in leadsheet.improvisation_packing(sym):
        assert leadsheet.packing_notes(name, root).issubset(mode.scale), (symbol, name, root)


@pytest.mark.parametrize("symbol, label, voicing", [
    ("Cmaj7", "C Lydian", "Emin7/C"),
    ("Fmaj7", "F Lydian", "Amin7/F"),
    ("Dmin7", "D Dorian", "Fmaj7/D"),
    ("C7(b9)", "2nd mode of Bb DIM", "F#dom7/C"),
    ("C13(#9)", "2nd mode of Bb DIM", "Bbdem/C"),
    ("G7(#11)", "4th mode of D MEL", "Gdom#11/G"),
    ("Db7alt", "7th mode of D MEL", "Fmaj7b5/Db"),
    ("Cmin7(b5)", "2nd mode of Bb HMIN", "Cmin7b5/C"),
])
def test_modes_and_voicings(symbol, label, voicing):
    sym = parse_chord(symbol)
    assert leadsheet.chord_to_mode(sym).label() == label
    assert str(leadsheet.standard_voicing(sym).voicing) == voicing


def test_uncovered_symbol_falls_back_to_candidates():
    sym = parse_chord("C7(b9,#9)")
    res = leadsheet.standard_voicing(sym)
    mode = leadsheet.chord_to_mode(sym)
    assert not res.covered
    assert res.candidates
    assert all(c.issubset(mode.scale) for c in res.candidates)


def test_chord_to_mode_searches_the_catalog():
    m = leadsheet.chord_to_mode(parse_chord("Caug"))
    assert PitchClassSet.of([0, 4, 8]).issubset(m.scale)


def test_improvisation_packing():
    assert leadsheet.improvisation_packing(parse_chord("Dmin7")) == [("penta", 5), ("penta", 0)]
    with pytest.raises(DomainError):
        leadsheet.improvisation_packing(parse_chord("Caug"))


def test_tritone_substitute():
    sub = leadsheet.tritone_substitute(parse_chord("G7"))
    assert format_chord(sub) == "Db7"
    assert leadsheet.tritone_pair(parse_chord("G7")) == leadsheet.tritone_pair(sub)
    with pytest.raises(PreconditionError):
        leadsheet.tritone_substitute(parse_chord("Cmaj7"))


def test_dem_voicing_shape_is_tritone_symmetric():
    dem = leadsheet.VOICING_SHAPES["dem"]
    assert dem.transpose(6) == dem
    assert catalog.chord("dem").shape.canonical == canonical(dem)


def test_voicing_chords_are_irreducible_shapes():
    irreducible = {e.shape.canonical for e in catalog.classify_chords().irreducible}
    for name, shape in leadsheet.VOICING_SHAPES.items():
        assert canonical(shape) in irreducible, name


def test_harmonization_of_uncovered_symbols_uses_the_mode():
    sym = parse_chord("Cmaj9(#11)")
    res = leadsheet.standard_voicing(sym)
    mode = leadsheet.chord_to_mode(sym)
    assert res.candidates == embed.harmonization_candidates(mode.scale, sym.root)
