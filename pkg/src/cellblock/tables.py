"""Renderers for the summary tables.

Text output is one pipe-separated line per row, with cell lists joined by
commas and notes in jazz ASCII spelling.  The same rows are available as
JSON-ready lists.
"""
from __future__ import annotations

from . import catalog, embed, leadsheet, modes
from .pcset import note_name

TABLE_IDS = (1, 2, 3, 4, 5, 6)

# presentation orders: in table 2 each harmony row sits beside its dual column
TABLE1_ORDER = ("WTONE", "MEL", "MAJ", "HMIN", "HMAJ", "DIM", "AUG")
TABLE2_ROWS = ("WTONE", "AUG", "MAJ", "MEL", "DIM", "HMIN", "HMAJ")
TABLE2_COLUMNS = tuple(catalog.DUALS[h] for h in TABLE2_ROWS)
TABLE3_ROWS = ("WTONE", "MAJ", "MEL", "HMIN", "HMAJ", "DIM", "AUG")


def _notes(pcs) -> str:
    return ",".join(note_name(p, "jazz") for p in pcs)


def table1_rows() -> list[list[str]]:
    return [["harmony", *TABLE1_ORDER],
            ["overlap with WTONE",
             *(str(catalog.whole_tone_overlap(catalog.HARMONY_PATTERNS[h])) for h in TABLE1_ORDER)]]


def table2_rows(root: int = 0) -> list[list[str]]:
    data = embed.packing_embeddings_table(root)
    out = [["", *TABLE2_COLUMNS]]
    for h in TABLE2_ROWS:
        out.append([f"{note_name(root, 'jazz')} {h}", *(_notes(data[h][p]) for p in TABLE2_COLUMNS)])
    return out


def table3_rows(root: int = 0) -> list[list[str]]:
    data = embed.chord_embeddings_table(root)
    out = [[f"{note_name(root, 'jazz')} harmony", *catalog.CHORD_ORDER]]
    for h in TABLE3_ROWS:
        out.append([h, *(_notes(data[h][c]) for c in catalog.CHORD_ORDER)])
    return out


def table4_rows() -> list[list[str]]:
    out = [["mode", "alterations"]]
    for row in modes.classify_dominant_modes():
        out.append([row.mode_text(), ", ".join(row.sorted_alterations()) or "none"])
    return out


def _mode_text(m: modes.Mode) -> str:
    if m.harmony == "MAJ":
        return (f"{m.label()}, {modes.ordinal(m.degree)} mode of "
                f"{note_name(m.harmony_root, 'jazz')} MAJ")
    return m.label()


def table5_rows() -> list[list[str]]:
    out = [["chord symbol", "mode(s)", "voicings (all /C)"]]
    for row in leadsheet.voicing_rows():
        sym = leadsheet.parse_chord(row["symbol"])
        name = leadsheet.format_chord(sym)
        if row["aliases"]:
            name += f" ({', '.join(row['aliases'])})"
        mode = _mode_text(leadsheet.chord_to_mode(sym))
        alts = leadsheet.alternative_modes(sym)
        if alts:
            mode += f" (or {', '.join(m.label() for m in alts)})"
        v = leadsheet.standard_voicing(sym)
        voicing = v.voicing.name if v.voicing else ""
        if v.alternatives:
            voicing += f" ({', '.join(a.name for a in v.alternatives)})"
        out.append([name, mode, voicing])
    return out


def table6_rows() -> list[list[str]]:
    census = catalog.classify_scales_with_cells().census
    return [["number of cells", *(str(n) for n in range(13))],
            ["number of complete scales", *(str(census[n]) for n in range(13))]]


_ROWS = {1: table1_rows, 2: table2_rows, 3: table3_rows, 4: table4_rows,
         5: table5_rows, 6: table6_rows}


def rows(table: int) -> list[list[str]]:
    try:
        return _ROWS[table]()
    except KeyError:
        raise ValueError(f"no table {table}; choose from {TABLE_IDS}") from None


def render_text(table: int) -> str:
    return "".join("|".join(r) + "\n" for r in rows(table))


def render_json(table: int) -> dict:
    header, *body = rows(table)
    return {"table": table, "header": header, "rows": body}


def emit_tables(which=TABLE_IDS) -> str:
    """Every requested table as text, separated by ``# table N`` lines."""
    return "".join(f"# table {t}\n{render_text(t)}" for t in which)
