"""Difference triples and base blocks built from position pairs.

A pair (a_i, b_i) of an order-n sequence yields the triple
(i, a_i+n, b_i+n), whose entries partition {1, ..., 3n} over all i when
the source is a plain Skolem sequence (the hooked variant swaps 3n for
3n+1).  Two base-block forms carry the same pairwise differences:

    standard  {0, a_i+n, b_i+n}
    alt       {0, i,     b_i+n}

Adding a constant to every entry of a block preserves its differences,
so a block can be slid along the label range.  Sliding the standard
block of difference i by exactly i is the pivot transform; it is legal
precisely when i is a pivot of the source sequence, which keeps the new
entries inside the admissible label range.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable
from dataclasses import dataclass

from .sequences import PairSet

STANDARD = "standard"
ALT = "alt"


@dataclass(frozen=True)
class BlockTriple:
    """A sorted label triple plus how it was derived from its pair.

    ``base`` records the originating block form and ``shift`` the constant
    added to it; the difference index survives every transform, which is
    what ties a pendant triple back to its table row.
    """

    values: tuple[int, int, int]
    diff_index: int
    base: str = STANDARD
    shift: int = 0

    def __post_init__(self) -> None:
        v = tuple(sorted(self.values))
        object.__setattr__(self, "values", v)
        if len(set(v)) != 3 or v[0] < 0:
            raise ValueError(f"not a valid label triple: {self.values}")
        if self.base not in (STANDARD, ALT):
            raise ValueError(f"unknown base form {self.base!r}")

    @property
    def provenance(self) -> str:
        if self.shift == 0:
            return STANDARD if self.base == STANDARD else "alt-form"
        if self.base == STANDARD and self.shift == self.diff_index:
            return f"pivoted({self.diff_index})"
        return f"shifted({self.shift})"

    def differences(self) -> tuple[int, int, int]:
        x, y, z = self.values
        return (y - x, z - y, z - x)

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.values)


def heffter_triples(ps: PairSet, n: int | None = None) -> list[tuple[int, int, int]]:
    """The raw triples (i, a_i+n, b_i+n); first + second = third."""
    n = ps.order if n is None else n
    return [(i, a + n, b + n) for i, (a, b) in ps.items()]


def base_blocks(ps: PairSet, n: int | None = None, form: str = STANDARD) -> list[BlockTriple]:
    """Base blocks in the requested form, ordered by difference index."""
    n = ps.order if n is None else n
    if form == STANDARD:
        return [BlockTriple((0, a + n, b + n), i) for i, (a, b) in ps.items()]
    if form == ALT:
        return [BlockTriple((0, i, b + n), i, base=ALT) for i, (_, b) in ps.items()]
    raise ValueError(f"unknown block form {form!r}")


def _range_check(values: Iterable[int], n: int, hooked: bool) -> str | None:
    top = 3 * n + 1 if hooked else 3 * n
    for v in values:
        if v > top:
            return f"entry {v} exceeds {top}"
        if hooked and v == 3 * n:
            return f"entry {v} lands on the forbidden label {3 * n}"
    return None


def pivot_block(triple: BlockTriple, n: int, hooked: bool = False) -> BlockTriple:
    """Slide a block by its own difference index.

    Legality is re-checked here rather than trusted from the caller: the
    shifted entries must stay inside {0..3n} (plain) or {0..3n+1} minus
    {3n} (hooked), which holds exactly when the index is a pivot.
    """
    i = triple.diff_index
    values = tuple(v + i for v in triple.values)
    problem = _range_check(values, n, hooked)
    if problem is not None:
        raise ValueError(f"{i} is not a pivot here: {problem}")
    return BlockTriple(values, i, base=triple.base, shift=triple.shift + i)


def shift_block(
    triple: BlockTriple, c: int, n: int | None = None, hooked: bool = False
) -> BlockTriple:
    """Add the constant c to every entry; differences are unchanged.

    When n is given the result is range-checked against the labelling
    range, as for pivot_block.
    """
    if c < 0:
        raise ValueError("shift constant must be non-negative")
    values = tuple(v + c for v in triple.values)
    if n is not None:
        problem = _range_check(values, n, hooked)
        if problem is not None:
            raise ValueError(f"shift by {c} overflows: {problem}")
    return BlockTriple(values, triple.diff_index, base=triple.base, shift=triple.shift + c)


def check_heffter(
    triples: Iterable[BlockTriple | tuple[int, int, int]], n: int, hooked: bool = False
) -> bool:
    """Do the pairwise differences of n triples tile the label range?

    Plain target {1..3n}; hooked target {1..3n-1, 3n+1}.  Shifted and
    pivoted triples pass whenever their sources did, since the transforms
    preserve differences.
    """
    diffs: Counter[int] = Counter()
    count = 0
    for t in triples:
        x, y, z = sorted(t.values if isinstance(t, BlockTriple) else t)
        diffs.update((y - x, z - y, z - x))
        count += 1
    if count != n:
        return False
    if hooked:
        target = set(range(1, 3 * n)) | {3 * n + 1}
    else:
        target = set(range(1, 3 * n + 1))
    return all(c == 1 for c in diffs.values()) and set(diffs) == target


def derive_form(values: tuple[int, int, int], ps: PairSet, n: int | None = None) -> BlockTriple | None:
    """Recognise a triple as standard/alt block of some difference, shifted.

    The difference index is always the smallest pairwise difference (the
    other two exceed n), so the candidate derivations are determined by
    the smallest entry.  Returns None when the triple fits neither form.
    """
    n = ps.order if n is None else n
    x, y, z = sorted(values)
    i = min(y - x, z - y, z - x)
    if i not in ps.pairs:
        return None
    a, b = ps.pairs[i]
    if (y, z) == (a + n + x, b + n + x):
        return BlockTriple((x, y, z), i, base=STANDARD, shift=x)
    if (y, z) == (i + x, b + n + x):
        return BlockTriple((x, y, z), i, base=ALT, shift=x)
    return None
