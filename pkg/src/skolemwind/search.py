"""Deterministic backtracking generation of Skolem-type sequences.

Two search orders are used:

* ``iter_sequences`` fills the lowest empty slot first, trying symbols in
  increasing order.  That emits solutions exactly in lexicographic order
  of the resulting tuples, which makes it the canonical order for
  enumeration, oracles, and ``find_with_pivots``.
* ``find_first`` places the largest unplaced symbol at its lowest feasible
  position.  It reaches a single solution far faster on large instances
  (the long symbols are the scarce resource) and is deterministic, but its
  answer is generally not the lexicographic minimum.

Everything here is single-threaded; determinism needs no further care.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator

from .sequences import (
    HOOKED_LANGFORD,
    HOOKED_SKOLEM,
    LANGFORD,
    P_EXTENDED_LANGFORD,
    SKOLEM,
    SequenceError,
    SkolemSeq,
    pivots,
)


class SearchExhausted(RuntimeError):
    """No object with the requested structure exists in the search space."""


def _frame(kind: str, order: int, defect: int, hook: int | None):
    """Slot count, prefilled hook positions (1-based) and the symbol range."""
    if order < 1:
        raise SequenceError("order must be positive")
    if kind == SKOLEM:
        return 2 * order, (), range(1, order + 1)
    if kind == HOOKED_SKOLEM:
        return 2 * order + 1, (2 * order,), range(1, order + 1)
    if kind == LANGFORD:
        return 2 * order, (), range(defect, defect + order)
    if kind == HOOKED_LANGFORD:
        return 2 * order + 1, (2 * order,), range(defect, defect + order)
    if kind == P_EXTENDED_LANGFORD:
        if hook is None or not 1 <= hook <= 2 * order + 1:
            raise SequenceError(f"hook position must lie in 1..{2 * order + 1}")
        return 2 * order + 1, (hook,), range(defect, defect + order)
    raise SequenceError(f"unknown kind {kind!r}")


def iter_sequences(
    kind: str, order: int, defect: int = 1, hook: int | None = None
) -> Iterator[SkolemSeq]:
    """Yield every sequence of the given shape in lexicographic order."""
    length, hooks, symbols = _frame(kind, order, defect, hook)
    slots = [0] * length
    taken = [False] * length
    for h in hooks:
        taken[h - 1] = True
    unused = sorted(symbols)

    def fill(start: int) -> Iterator[tuple[int, ...]]:
        pos = start
        while pos < length and taken[pos]:
            pos += 1
        if pos == length:
            yield tuple(slots)
            return
        for idx, k in enumerate(unused):
            if k < 0:
                continue
            j = pos + k
            if j >= length or taken[j]:
                continue
            slots[pos] = slots[j] = k
            taken[pos] = taken[j] = True
            unused[idx] = -1
            yield from fill(pos + 1)
            unused[idx] = k
            slots[pos] = slots[j] = 0
            taken[pos] = taken[j] = False

    for entries in fill(0):
        yield SkolemSeq(entries, kind, defect)


def enumerate_sequences(
    kind: str,
    order: int,
    defect: int = 1,
    hook: int | None = None,
    limit: int | None = None,
) -> list[SkolemSeq]:
    """All sequences of the given shape (or the first `limit`), lexicographic."""
    out: list[SkolemSeq] = []
    for seq in iter_sequences(kind, order, defect, hook):
        out.append(seq)
        if limit is not None and len(out) >= limit:
            break
    return out


def find_first(
    kind: str, order: int, defect: int = 1, hook: int | None = None
) -> SkolemSeq | None:
    """First solution under the largest-symbol-first branching order."""
    length, hooks, symbols = _frame(kind, order, defect, hook)
    slots = [0] * length
    taken = [False] * length
    for h in hooks:
        taken[h - 1] = True
    desc = sorted(symbols, reverse=True)

    def place(idx: int) -> bool:
        if idx == len(desc):
            return True
        k = desc[idx]
        for a in range(length - k):
            b = a + k
            if taken[a] or taken[b]:
                continue
            taken[a] = taken[b] = True
            slots[a] = slots[b] = k
            if place(idx + 1):
                return True
            taken[a] = taken[b] = False
            slots[a] = slots[b] = 0
        return False

    if not place(0):
        return None
    return SkolemSeq(tuple(slots), kind, defect)


def find_with_pivots(
    kind: str, order: int, need: int | Iterable[int]
) -> SkolemSeq | None:
    """First sequence in enumeration order whose pivot set satisfies `need`.

    `need` is either a minimum pivot count or a set of required pivots.
    Returns None when the whole space is exhausted.
    """
    if kind not in (SKOLEM, HOOKED_SKOLEM):
        raise SequenceError(f"pivots are defined for Skolem kinds, not {kind}")
    wanted = None if isinstance(need, int) else frozenset(need)
    for seq in iter_sequences(kind, order):
        ps = set(pivots(seq))
        if wanted is not None:
            if wanted <= ps:
                return seq
        elif len(ps) >= need:
            return seq
    return None
