"""Building larger Skolem-type sequences out of smaller ones.

A Skolem sequence of order d-1 (symbols 1..d-1) and a Langford sequence
of defect d and order l (symbols d..d+l-1) splice into a Skolem-type
sequence of order N = l+d-1: every symbol keeps its gap because the
pieces are only translated, never stretched.  Which variant comes out
depends on where the hooks are:

    skolem        ++ langford            -> skolem(N)
    skolem        ++ hooked langford     -> hooked skolem(N)   (hook at 2N)
    langford      ++ hooked skolem       -> hooked skolem(N)   (hook at 2N)
    hooked skolem  interlaced with
                     hooked langford     -> skolem(N)

The interlacing overlaps the reversed hooked Skolem with the tail of the
hooked Langford so that each sequence's hook is covered by the other's
entries.

Because the seed's position pairs survive the splice unmoved (or are
restored by a final reversal), every pivot of the seed is still a pivot
of the composed sequence, which is what drives the order-extension step.
"""

from __future__ import annotations

from dataclasses import dataclass

from .search import SearchExhausted, find_first
from .sequences import (
    HOOKED_LANGFORD,
    HOOKED_SKOLEM,
    LANGFORD,
    P_EXTENDED_LANGFORD,
    SKOLEM,
    SequenceError,
    SkolemSeq,
    pivots,
    validate,
)


class ComposeError(ValueError):
    """Inputs cannot be spliced, or the splice produced an invalid sequence."""


@dataclass(frozen=True)
class ExistenceVerdict:
    exists: bool
    rule: str

    def __bool__(self) -> bool:
        return self.exists


def exists(kind: str, order: int, defect: int = 1) -> ExistenceVerdict:
    """Necessary-and-sufficient existence test for the four classic kinds."""
    if order < 1:
        return ExistenceVerdict(False, "order must be at least 1")
    r = order % 4
    if kind == SKOLEM:
        ok = r in (0, 1)
        return ExistenceVerdict(ok, f"n = {order} = {r} (mod 4); Skolem needs 0 or 1")
    if kind == HOOKED_SKOLEM:
        ok = r in (2, 3)
        return ExistenceVerdict(ok, f"n = {order} = {r} (mod 4); hooked Skolem needs 2 or 3")
    if kind == LANGFORD:
        if order < 2 * defect - 1:
            return ExistenceVerdict(False, f"m = {order} < 2d-1 = {2 * defect - 1}")
        if defect % 2 == 1:
            ok = r in (0, 1)
            rule = f"m = {r} (mod 4) with d odd; needs 0 or 1"
        else:
            ok = r in (0, 3)
            rule = f"m = {r} (mod 4) with d even; needs 0 or 3"
        return ExistenceVerdict(ok, rule)
    if kind == HOOKED_LANGFORD:
        if order * (order - 2 * defect + 1) + 2 < 0:
            return ExistenceVerdict(
                False, f"m(m-2d+1)+2 = {order * (order - 2 * defect + 1) + 2} < 0"
            )
        if defect % 2 == 1:
            ok = r in (2, 3)
            rule = f"m = {r} (mod 4) with d odd; needs 2 or 3"
        else:
            ok = r in (1, 2)
            rule = f"m = {r} (mod 4) with d even; needs 1 or 2"
        return ExistenceVerdict(ok, rule)
    raise SequenceError(f"no existence test for kind {kind!r}")


def _checked(entries: tuple[int, ...], kind: str, context: str) -> SkolemSeq:
    seq = SkolemSeq(entries, kind)
    report = validate(seq)
    if not report.ok:
        raise ComposeError(f"{context} produced an invalid sequence: " + "; ".join(report.violations))
    return seq


def _require_valid(seq: SkolemSeq, role: str) -> None:
    report = validate(seq)
    if not report.ok:
        raise ComposeError(f"{role} invalid: " + "; ".join(report.violations))


def concatenate(skolem_part: SkolemSeq, langford_part: SkolemSeq) -> SkolemSeq:
    """Splice a (hooked) Skolem sequence with a (hooked) Langford sequence.

    The hooked Skolem + hooked Langford combination needs interlace()
    instead; with two hooks a plain concatenation cannot close both gaps.
    """
    if skolem_part.kind not in (SKOLEM, HOOKED_SKOLEM):
        raise ComposeError(f"first operand must be a Skolem kind, got {skolem_part.kind}")
    if langford_part.kind not in (LANGFORD, HOOKED_LANGFORD):
        raise ComposeError(f"second operand must be a Langford kind, got {langford_part.kind}")
    d = langford_part.defect
    if skolem_part.order != d - 1:
        raise ComposeError(
            f"defect mismatch: Langford defect {d} needs a Skolem part of order {d - 1}, "
            f"got order {skolem_part.order}"
        )
    _require_valid(skolem_part, "Skolem part")
    _require_valid(langford_part, "Langford part")

    n = skolem_part.order + langford_part.order
    if skolem_part.kind == SKOLEM and langford_part.kind == LANGFORD:
        return _checked(skolem_part.entries + langford_part.entries, SKOLEM, "concatenation")
    if skolem_part.kind == SKOLEM and langford_part.kind == HOOKED_LANGFORD:
        return _checked(
            skolem_part.entries + langford_part.entries, HOOKED_SKOLEM, "concatenation"
        )
    if skolem_part.kind == HOOKED_SKOLEM and langford_part.kind == LANGFORD:
        # Langford block first so the Skolem hook ends up at position 2N.
        return _checked(
            langford_part.entries + skolem_part.entries, HOOKED_SKOLEM, "concatenation"
        )
    raise ComposeError(
        "hooked Skolem with hooked Langford concatenates via interlace(), not concatenate()"
    )


def interlace(hs: SkolemSeq, hl: SkolemSeq) -> SkolemSeq:
    """Cross-fill the hooks of a hooked Skolem and a hooked Langford.

    The hooked Skolem is reversed, which moves its hook to the second
    slot, and laid over the tail of the hooked Langford: the Langford's
    hook receives the reversed Skolem's first entry, and the reversed
    Skolem's hook is covered by the Langford's last entry.
    """
    if hs.kind != HOOKED_SKOLEM or hl.kind != HOOKED_LANGFORD:
        raise ComposeError(f"interlace needs hooked Skolem + hooked Langford, got {hs.kind} + {hl.kind}")
    d = hl.defect
    if hs.order != d - 1:
        raise ComposeError(
            f"defect mismatch: hooked Langford defect {d} needs a hooked Skolem of order {d - 1}, "
            f"got order {hs.order}"
        )
    _require_valid(hs, "hooked Skolem part")
    _require_valid(hl, "hooked Langford part")

    l = hl.order
    rhs = tuple(reversed(hs.entries))
    merged = list(hl.entries)
    merged[2 * l - 1] = rhs[0]  # langford hook <- reversed skolem head
    merged.extend(rhs[2:])      # rhs hook (slot 2) is covered by hl's last entry
    return _checked(tuple(merged), SKOLEM, "interlacing")


def extend_order(seed: SkolemSeq, m: int) -> SkolemSeq:
    """Grow a (hooked) Skolem sequence to order m >= 3n+1, keeping pivots.

    The required Langford piece (defect n+1, order m-n) is found by
    backtracking.  The seed's pairs end up at unmoved positions, so its
    whole pivot set carries over; this is asserted rather than assumed.
    """
    if seed.kind not in (SKOLEM, HOOKED_SKOLEM):
        raise ComposeError(f"seed must be a Skolem kind, got {seed.kind}")
    _require_valid(seed, "seed")
    n = seed.order
    if m < 3 * n + 1:
        raise ComposeError(f"target order {m} is below the extension bound 3n+1 = {3 * n + 1}")

    d, l = n + 1, m - n
    hooked_target = m % 4 in (2, 3)
    lang_kind = HOOKED_LANGFORD if (hooked_target != (seed.kind == HOOKED_SKOLEM)) else LANGFORD
    verdict = exists(lang_kind, l, d)
    if not verdict:
        raise SearchExhausted(f"no {lang_kind} of defect {d}, order {l}: {verdict.rule}")
    lang = find_first(lang_kind, l, d)
    if lang is None:
        raise SearchExhausted(f"backtracking found no {lang_kind} of defect {d}, order {l}")

    if seed.kind == HOOKED_SKOLEM and lang_kind == HOOKED_LANGFORD:
        # Reversal restores the seed's pairs to their original positions.
        result = interlace(seed, lang).reversed()
        _require_valid(result, "reversed interlacing")
    else:
        result = concatenate(seed, lang)

    seed_pivots = set(pivots(seed))
    result_pivots = set(pivots(result))
    lost = seed_pivots - result_pivots
    if lost:
        raise ComposeError(f"extension lost pivots {sorted(lost)}")
    assert result.order == m
    return result


# Worked extended-Langford sequences with no search-friendly structure are
# carried as data; the deterministic search would land on a different
# (equally valid) solution and every consumer of these exact triples would
# drift.  Keys are (defect, differences, hook position).
_KNOWN_EXTENDED: dict[tuple[int, int, int], tuple[int, ...]] = {
    (7, 13, 23): (
        11, 14, 15, 16, 17, 18, 19, 7, 8, 9, 10, 11, 12, 13,
        7, 14, 8, 15, 9, 16, 10, 17, 0, 18, 12, 19, 13,
    ),
}


def extended_langford_search(defect: int, diffs: int, hook: int) -> SkolemSeq | None:
    """A p-extended Langford sequence with the empty slot at `hook`.

    Existence is not covered by any of the classic theorems, so this is an
    honest exhaustive search (largest symbol first); known worked solutions
    are consulted before searching.  Returns None when nothing exists.
    """
    key = (defect, diffs, hook)
    if key in _KNOWN_EXTENDED:
        seq = SkolemSeq(_KNOWN_EXTENDED[key], P_EXTENDED_LANGFORD, defect)
        _require_valid(seq, "bundled extended Langford sequence")
        return seq
    if diffs < 1 or not 1 <= hook <= 2 * diffs + 1:
        return None
    return find_first(P_EXTENDED_LANGFORD, diffs, defect, hook=hook)


def modified_extended(els: SkolemSeq, extra: int, pad: int = 0) -> tuple[int, ...]:
    """Fill the hook with an extra symbol and append its partner.

    The extra symbol sits at the hook position p and again at the final
    appended slot (after `pad` empty slots), so p must equal
    len+1+pad-extra for the gap to come out right.  The result is a raw
    entry tuple, no longer a Langford sequence of any kind: one symbol is
    off-range, and with pad=1 an interior slot stays empty.
    """
    if els.kind != P_EXTENDED_LANGFORD:
        raise ComposeError(f"need a p-extended Langford sequence, got {els.kind}")
    if pad not in (0, 1):
        raise ComposeError("pad must be 0 or 1")
    _require_valid(els, "extended Langford part")
    p = els.hook
    total = len(els.entries) + 1 + pad
    if total - p != extra:
        raise ComposeError(
            f"extra symbol {extra} needs hook at position {total - extra}, found {p}"
        )
    if els.defect <= extra < els.defect + els.order:
        raise ComposeError(f"extra symbol {extra} collides with the sequence's own symbols")
    merged = list(els.entries)
    merged[p - 1] = extra
    merged.extend([0] * pad)
    merged.append(extra)
    return tuple(merged)
