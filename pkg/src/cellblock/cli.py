"""Command-line front end.

Exit status: 0 on success, 1 on a domain error (bad chord symbol, failed
precondition), 2 on a usage error.  JSON output has sorted keys.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Optional, Sequence

from . import catalog, embed, kernels, leadsheet, modes, tables, tuning
from .errors import DomainError
from .pcset import note_name, note_value

FAMILIES = ("harmony", "packing", "chord", "triad", "scale", "all")


class _Out:
    def __init__(self, fmt: str, stream) -> None:
        self.fmt, self.stream = fmt, stream

    def emit(self, data, text: Callable[[], str]) -> None:
        if self.fmt == "json":
            json.dump(data, self.stream, sort_keys=True, indent=2, ensure_ascii=False)
            self.stream.write("\n")
        else:
            out = text()
            self.stream.write(out if out.endswith("\n") else out + "\n")


def _note(text: str) -> int:
    try:
        return note_value(text)
    except ValueError:
        try:
            return int(text) % 12
        except ValueError:
            raise DomainError(f"not a note: {text!r}") from None


def _harmony_name(text: str) -> str:
    name = text.upper()
    if name not in catalog.HARMONY_PATTERNS:
        raise DomainError(f"unknown harmony {text!r}; choose from {', '.join(catalog.HARMONY_ORDER)}")
    return name


def _packing_name(text: str) -> str:
    name = text.lower()
    if name not in catalog.PACKING_PATTERNS:
        raise DomainError(f"unknown packing {text!r}; choose from {', '.join(catalog.PACKING_ORDER)}")
    return name


def _names(pcs) -> str:
    return ",".join(note_name(p, "jazz") for p in pcs)


def _entry_line(e: catalog.CatalogEntry) -> str:
    return f"{e.name:<16} {str(e.shape.canonical):<24} {e.transposition_count}"


def _count_lines(reports) -> list[str]:
    out = []
    for r in reports:
        note = f"convention: {r.convention}" if r.convention else "does not match the published count"
        out.append(f"complete {r.family}: {r.classes} classes, {r.raw} subsets; "
                   f"published {r.published} ({note})")
    return out


# subcommands

def cmd_classify(a, out: _Out) -> None:
    counts = catalog.complete_counts()
    if a.family == "all":
        data = catalog.export_catalog()
        out.emit(data, lambda: json.dumps(data, sort_keys=True, indent=2))
        return
    if a.family == "harmony":
        entries = catalog.classify_harmonies()
        total = sum(e.transposition_count for e in entries)
        data = {"entries": [e.to_json() for e in entries], "distinct_scales": total}
        lines = [_entry_line(e) for e in entries] + [f"distinct scales: {total}"]
    elif a.family == "packing":
        pk = catalog.classify_packings()
        rep = counts["packings"]
        data = {"blockfree": [e.to_json() for e in pk.blockfree],
                "irreducible": [e.to_json() for e in pk.irreducible], "count": rep.to_json()}
        lines = (["block-free:"] + [_entry_line(e) for e in pk.blockfree]
                 + ["irreducible:"] + [_entry_line(e) for e in pk.irreducible] + _count_lines([rep]))
    elif a.family == "chord":
        ch = catalog.classify_chords()
        rep = counts["chords"]
        ob, oc = catalog.characterize_one_block_chords(), catalog.characterize_one_cell_chords()
        data = {"irreducible": [e.to_json() for e in ch.irreducible], "count": rep.to_json(),
                "one_block_residue": [list(s.canonical) for s in ob.residue],
                "one_cell_residue": [list(s.canonical) for s in oc.residue]}
        lines = ([_entry_line(e) for e in ch.irreducible] + _count_lines([rep])
                 + [f"one-block residue: {', '.join(ob.residue_names)}",
                    f"one-cell residue: {', '.join(oc.residue_names)}"])
    elif a.family == "triad":
        entries = catalog.classify_triads()
        data = {"entries": [e.to_json() for e in entries]}
        lines = [_entry_line(e) for e in entries]
    else:
        census = catalog.classify_scales_with_cells()
        rep = counts["scales"]
        data = {"irreducible": [e.to_json() for e in census.irreducible], "count": rep.to_json()}
        lines = [_entry_line(e) for e in census.irreducible] + _count_lines([rep])
    data["backend"] = kernels.BACKEND
    out.emit(data, lambda: "\n".join(lines))


def cmd_duality(a, out: _Out) -> None:
    pairs = catalog.verify_duality()
    aux = catalog.auxiliary_result_holds()
    data = {"pairs": [{"harmony": p.harmony.name, "packing": p.packing.name,
                       "self_dual": p.self_dual} for p in pairs],
            "auxiliary_result": aux}
    out.emit(data, lambda: "\n".join(
        [f"{p.harmony.name:<6} <-> {p.packing.name}{'  (self-dual)' if p.self_dual else ''}"
         for p in pairs] + [f"cell in s iff complement incomplete: {'holds' if aux else 'FAILS'}"]))


def cmd_embed(a, out: _Out) -> None:
    root = _note(a.root)
    if a.family not in ("packing", "chord"):
        raise DomainError("embed --family takes packing or chord")
    if a.family == "packing":
        table = embed.packing_embeddings_table(root)
    else:
        table = embed.chord_embeddings_table(root)
    if a.harmony:
        h = _harmony_name(a.harmony)
        table = {h: table[h]}
    data = {h: {k: [note_name(r, "jazz") for r in v] for k, v in row.items()}
            for h, row in table.items()}
    rname = note_name(root, "jazz")
    out.emit(data, lambda: "\n".join(
        f"{rname} {h}: " + "; ".join(f"{k} {_names(v)}" for k, v in row.items() if v)
        for h, row in table.items()))


def cmd_project(a, out: _Out) -> None:
    h = catalog.harmony_scale(_harmony_name(a.harmony), _note(a.root))
    p = catalog.PACKING_PATTERNS[_packing_name(a.packing)].transpose(_note(a.packing_root))
    tones = [_note(t) for t in a.tones]
    line = embed.project_line(tones, p, h)
    data = {"harmony": list(h), "packing": list(p), "tones": tones, "projected": line}
    out.emit(data, lambda: " ".join(note_name(t, "jazz") for t in line))


def cmd_blue_notes(a, out: _Out) -> None:
    p = catalog.PACKING_PATTERNS[_packing_name(a.packing)].transpose(_note(a.root))
    rep = embed.blue_notes(p)
    out.emit(rep.to_json(), lambda: "\n".join([
        f"packing: {_names(rep.packing)}",
        f"creates a cell: {_names(rep.creates_cell)}",
        f"unique projection: {_names(rep.unique_projection)}",
        f"two neighbours: {_names(rep.double_resolution)}"]))


def cmd_modes(a, out: _Out) -> None:
    h = _harmony_name(a.harmony)
    ms = modes.modes_of(h, _note(a.root))
    data = {"harmony": h, "distinct_modes": modes.distinct_modes(h),
            "modes": [m.to_json() for m in ms]}
    out.emit(data, lambda: "\n".join(
        f"{m.degree} {note_name(m.bass, 'jazz'):<3} {m.name:<18} {m.label()}" for m in ms))


def cmd_dominants(a, out: _Out) -> None:
    rows = modes.classify_dominant_modes()
    data = {"rows": [r.to_json() for r in rows]}
    out.emit(data, lambda: tables.render_text(4))


def _parse_one(text: str) -> dict:
    sym = leadsheet.parse_chord(text)
    d = sym.to_json()
    d["input"] = text
    return d


def cmd_parse(a, out: _Out, stdin, stderr) -> int:
    if a.symbols and a.symbols != ["-"]:
        items = a.symbols
    else:
        items = [ln.strip() for ln in stdin if ln.strip() and not ln.lstrip().startswith("#")]
    results, failed = [], 0
    for text in items:
        try:
            results.append(_parse_one(text))
        except DomainError as exc:
            failed += 1
            results.append({"input": text, "error": str(exc).splitlines()[0]})
            print(f"error: {exc}", file=stderr)
    data = results[0] if len(results) == 1 and a.symbols else results
    out.emit(data, lambda: "\n".join(
        f"{r['input']}: {r['symbol']} {_names(r['tones'])}" if "symbol" in r
        else f"{r['input']}: error" for r in results))
    return 1 if failed else 0


def cmd_voice(a, out: _Out) -> None:
    sym = leadsheet.parse_chord(a.symbol)
    mode = leadsheet.chord_to_mode(sym)
    res = leadsheet.standard_voicing(sym)
    data = res.to_json()
    data["mode"] = mode.to_json()
    data["alternative_modes"] = [m.to_json() for m in leadsheet.alternative_modes(sym)]

    def text() -> str:
        lines = [f"mode: {mode.label()}"]
        if res.voicing:
            lines.append(f"voicing: {res.voicing}")
            lines += [f"alternative: {v}" for v in res.alternatives]
        else:
            lines.append("no standard voicing; harmonization candidates:")
            lines += [f"  {_names(c)}" for c in res.candidates]
        return "\n".join(lines)
    out.emit(data, text)


def cmd_packing_for(a, out: _Out) -> None:
    sym = leadsheet.parse_chord(a.symbol)
    picks = leadsheet.improvisation_packing(sym)
    data = {"symbol": str(sym), "packings": [
        {"packing": n, "root": r, "notes": list(leadsheet.packing_notes(n, r))} for n, r in picks]}
    out.emit(data, lambda: "\n".join(
        f"{note_name(r, 'jazz')} {n}: {_names(leadsheet.packing_notes(n, r))}" for n, r in picks))


def cmd_tritone_sub(a, out: _Out) -> None:
    sym = leadsheet.parse_chord(a.symbol)
    sub = leadsheet.tritone_substitute(sym)
    pair = leadsheet.tritone_pair(sym)
    data = {"symbol": str(sym), "substitute": str(sub), "shared_tritone": list(pair)}
    out.emit(data, lambda: f"{sub} (shares {_names(pair)})")


def cmd_tuning(a, out: _Out) -> None:
    data: dict = {}
    lines: list[str] = []
    if a.convergents is not None:
        cs = tuning.fifth_convergents(a.convergents)
        data["convergents"] = [str(c) for c in cs]
        lines.append(" ".join(map(str, cs)))
    if a.stopping is not None:
        pts = tuning.stopping_points(a.stopping, a.reading)
        data["stopping_points"] = pts
        data["stopping_reading"] = a.reading
        lines.append(f"stopping points ({a.reading}): {' '.join(map(str, pts))}")
    if a.et is not None:
        sweep = tuning.et_error_sweep(1, a.et)
        data["et_error"] = [{"n": n, "error": e} for n, e in sweep]
        data["local_minima"] = tuning.local_minima(a.et)
        data["pronounced_minima"] = tuning.pronounced_minima(a.et)
        if a.csv:
            lines.append("n,error")
            lines += [f"{n},{e:.9f}" for n, e in sweep]
        else:
            lines.append(f"pronounced minima: {' '.join(map(str, data['pronounced_minima']))}")
    if a.overtones is not None:
        pts = tuning.odd_overtone_points(a.overtones)
        data["odd_overtones"] = [{"harmonic": 2 * p.index - 1, "position": p.position,
                                  "et_offset": tuning.nearest_et_offset(p.position)} for p in pts]
        lines += [f"{2 * p.index - 1:>3} {p.position:.6f} {tuning.nearest_et_offset(p.position):+.4f}"
                  for p in pts]
    if a.comma or not lines:
        data["pythagorean_comma"] = tuning.pythagorean_comma()
        data["et_fifth_ratio"] = tuning.equal_temperament_ratio()
        data["pythagorean_et_deviation"] = tuning.pythagorean_et_deviation()
        lines.append(f"comma {data['pythagorean_comma']:.6f}  ET fifth {data['et_fifth_ratio']:.6f}  "
                     f"max deviation {data['pythagorean_et_deviation']:.6f}")
    out.emit(data, lambda: "\n".join(lines))


def cmd_census(a, out: _Out) -> None:
    census = catalog.classify_scales_with_cells()
    rep = catalog.complete_counts()["scales"]
    data = {"census": {str(k): v for k, v in census.census.items()}, "total": census.total,
            "irreducible": len(census.irreducible), "count": rep.to_json()}
    out.emit(data, lambda: tables.render_text(6) + f"total|{census.total}\n"
             + f"irreducible|{len(census.irreducible)}")


def cmd_tables(a, out: _Out) -> None:
    which = [a.table] if a.table else list(tables.TABLE_IDS)
    data = {"tables": [tables.render_json(t) for t in which]}
    out.emit(data, lambda: tables.emit_tables(which))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")

    ap = argparse.ArgumentParser(prog="cellblock", parents=[common],
                                 description="Harmony, packing and chord catalogs on 12 pitch classes.")
    sub = ap.add_subparsers(dest="command", required=True, metavar="command")

    def add(name: str, help: str) -> argparse.ArgumentParser:
        return sub.add_parser(name, help=help, parents=[common])

    p = add("classify", "complete-set classifications")
    p.add_argument("--family", choices=FAMILIES, default="harmony")
    add("duality", "harmony/packing complement pairs")
    p = add("embed", "embeddings into each harmony")
    p.add_argument("--family", default="packing")
    p.add_argument("--root", default="C")
    p.add_argument("--harmony")
    p = add("project", "project a line onto a packing")
    p.add_argument("tones", nargs="+")
    p.add_argument("--harmony", required=True)
    p.add_argument("--root", default="C")
    p.add_argument("--packing", required=True)
    p.add_argument("--packing-root", default="C")
    p = add("blue-notes", "blue notes of a packing")
    p.add_argument("--packing", default="penta")
    p.add_argument("--root", default="C")
    p = add("modes", "modes of a harmony")
    p.add_argument("--harmony", default="MAJ")
    p.add_argument("--root", default="C")
    add("dominants", "dominant chord alterations by mode")
    p = add("parse", "parse chord symbols (stdin if none given)")
    p.add_argument("symbols", nargs="*")
    for name, help in (("voice", "mode and standard voicing"),
                       ("packing-for", "packing to improvise over a chord"),
                       ("tritone-sub", "tritone substitute of a dominant")):
        add(name, help).add_argument("symbol")
    p = add("tuning", "fifths, equal temperament and overtones")
    p.add_argument("--convergents", type=int, metavar="N")
    p.add_argument("--stopping", type=int, metavar="MAX_N")
    p.add_argument("--reading", choices=tuning.READINGS, default="adjacent-gap")
    p.add_argument("--et", "--n", dest="et", type=int, metavar="N", help="ET error sweep up to N")
    p.add_argument("--csv", action="store_true")
    p.add_argument("--overtones", type=int, metavar="N")
    p.add_argument("--comma", action="store_true")
    add("census", "complete scales by number of cells")
    p = add("tables", "render the summary tables")
    p.add_argument("--table", type=int, choices=tables.TABLE_IDS)
    return ap


_COMMANDS = {
    "classify": cmd_classify, "duality": cmd_duality, "embed": cmd_embed,
    "project": cmd_project, "blue-notes": cmd_blue_notes, "modes": cmd_modes,
    "dominants": cmd_dominants, "voice": cmd_voice, "packing-for": cmd_packing_for,
    "tritone-sub": cmd_tritone_sub, "tuning": cmd_tuning, "census": cmd_census,
    "tables": cmd_tables,
}


def run(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None, stdin=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    stdin = stdin or sys.stdin
    ap = build_parser()
    try:
        a = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out = _Out(a.format, stdout)
    try:
        if a.command == "parse":
            return cmd_parse(a, out, stdin, stderr)
        _COMMANDS[a.command](a, out)
    except (DomainError, ValueError) as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
