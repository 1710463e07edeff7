"""The bundled catalog of sequences with declared pivots or triples.

Catalog rows are data, not code: a tab-separated file shipped with the
package, so an erratum is a one-line patch.  Row format:

    table-id TAB order TAB sequence-text TAB pivots-or-triples TAB type-letter

Sequence text uses the compact notation (hook as 0, symbols >= 10 as
A-Z).  The fourth column is either a comma-separated pivot list or a
semicolon-separated triple list ("x,y,z;x,y,z;...").  Table ids 1-11
carry the tabulated rows; id 0 marks the narrative seed rows that anchor
each attachment pattern just below its table's range.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from . import sequences as sq
from .blocks import BlockTriple, derive_form

TYPE_LETTERS = "abcdefghijk"


@dataclass(frozen=True)
class CatalogEntry:
    table: int
    order: int
    text: str
    pivots: tuple[int, ...] | None
    triples: tuple[tuple[int, int, int], ...] | None
    type_letter: str

    def sequence(self) -> sq.SkolemSeq:
        kind = sq.HOOKED_SKOLEM if "0" in self.text else sq.SKOLEM
        return sq.parse(self.text, kind)

    def derived_triples(self) -> list[BlockTriple]:
        """Re-derive each declared triple from the sequence's pair set."""
        if self.triples is None:
            raise ValueError(f"catalog row ({self.table}, {self.order}) declares pivots, not triples")
        ps = sq.pairs(self.sequence())
        out = []
        for t in self.triples:
            bt = derive_form(t, ps)
            if bt is None:
                raise ValueError(f"triple {t} not derivable from row ({self.table}, {self.order})")
            out.append(bt)
        return out


@dataclass(frozen=True)
class CatalogReport:
    rows: int
    problems: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.problems


def _parse_line(line: str, lineno: int) -> CatalogEntry:
    parts = line.split("\t")
    if len(parts) != 5:
        raise ValueError(f"catalog line {lineno}: expected 5 tab-separated fields")
    table, order, text, payload, letter = parts
    pivots: tuple[int, ...] | None = None
    triples: tuple[tuple[int, int, int], ...] | None = None
    if ";" in payload or payload.count(",") > 2:
        triples = tuple(
            tuple(int(v) for v in chunk.split(","))  # type: ignore[misc]
            for chunk in payload.split(";")
        )
    else:
        pivots = tuple(int(v) for v in payload.split(","))
    if letter not in TYPE_LETTERS:
        raise ValueError(f"catalog line {lineno}: unknown type letter {letter!r}")
    return CatalogEntry(int(table), int(order), text, pivots, triples, letter)


def load_catalog(path: str | Path | None = None) -> list[CatalogEntry]:
    if path is None:
        data = resources.files("skolemwind.data").joinpath("catalog.tsv").read_text()
    else:
        data = Path(path).read_text()
    entries = []
    for lineno, raw in enumerate(data.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        entries.append(_parse_line(line, lineno))
    return entries


_override: tuple[CatalogEntry, ...] | None = None


def use_catalog(path: str | Path | None) -> None:
    """Replace the bundled catalog for this process (None restores it)."""
    global _override
    _override = None if path is None else tuple(load_catalog(path))


@functools.lru_cache(maxsize=1)
def _bundled() -> tuple[CatalogEntry, ...]:
    return tuple(load_catalog())


def catalog() -> tuple[CatalogEntry, ...]:
    return _bundled() if _override is None else _override


def find_entry(
    type_letter: str, order: int, entries: tuple[CatalogEntry, ...] | None = None
) -> CatalogEntry | None:
    """The row for a given attachment pattern and order; seed rows count."""
    pool = catalog() if entries is None else entries
    for e in pool:
        if e.type_letter == type_letter and e.order == order:
            return e
    return None


def max_order(type_letter: str, entries: tuple[CatalogEntry, ...] | None = None) -> int:
    pool = catalog() if entries is None else entries
    return max((e.order for e in pool if e.type_letter == type_letter), default=0)


def catalog_verify(entries: list[CatalogEntry] | None = None) -> CatalogReport:
    """Re-validate every row: sequence, declared pivots, declared triples."""
    pool = list(catalog()) if entries is None else entries
    problems: list[str] = []
    for e in pool:
        where = f"table {e.table}, order {e.order}, type ({e.type_letter})"
        try:
            seq = e.sequence()
        except sq.SequenceError as exc:
            problems.append(f"{where}: unparseable: {exc}")
            continue
        if seq.order != e.order:
            problems.append(f"{where}: text encodes order {seq.order}")
            continue
        report = sq.validate(seq)
        if not report.ok:
            problems.append(f"{where}: invalid: " + "; ".join(report.violations))
            continue
        if e.pivots is not None:
            have = set(sq.pivots(seq))
            missing = [p for p in e.pivots if p not in have]
            if missing:
                problems.append(f"{where}: declared pivots {missing} fail the pivot inequality")
        if e.triples is not None:
            if len(e.triples) != e.order:
                problems.append(f"{where}: {len(e.triples)} triples for order {e.order}")
            ps = sq.pairs(seq)
            for t in e.triples:
                if derive_form(t, ps) is None:
                    problems.append(f"{where}: triple {t} not derivable from the sequence")
    return CatalogReport(rows=len(pool), problems=tuple(problems))
