"""Skolem-type sequences: validation, position pairs, pivots, text notation.

A Skolem sequence of order n places two copies of every symbol k in
{1, ..., n} into 2n slots so that the two copies of k sit exactly k slots
apart.  The hooked variant has 2n+1 slots with the second-to-last slot
empty (written 0).  A Langford sequence shifts the symbol range to
{d, ..., d+l-1} for a defect d; it too has a hooked form.  A p-extended
Langford sequence has 2m+1 slots with its single empty slot at an
arbitrary position p.

Positions are 1-based throughout the public API, matching the subscript
convention of the design-theory literature.  All types are immutable and
all functions are pure.
"""

from __future__ import annotations

from dataclasses import dataclass

SKOLEM = "skolem"
HOOKED_SKOLEM = "hooked-skolem"
LANGFORD = "langford"
HOOKED_LANGFORD = "hooked-langford"
P_EXTENDED_LANGFORD = "p-extended-langford"

KINDS = (SKOLEM, HOOKED_SKOLEM, LANGFORD, HOOKED_LANGFORD, P_EXTENDED_LANGFORD)
LANGFORD_KINDS = frozenset({LANGFORD, HOOKED_LANGFORD, P_EXTENDED_LANGFORD})
HOOKED_KINDS = frozenset({HOOKED_SKOLEM, HOOKED_LANGFORD, P_EXTENDED_LANGFORD})

# Compact notation: 1-9 then A-Z for 10-35, literal 0 for the empty slot.
_ALPHABET = "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZ"
_CHAR_VALUE = {c: v for v, c in enumerate(_ALPHABET)}


class SequenceError(ValueError):
    """Malformed sequence text, or a kind/shape mismatch."""


@dataclass(frozen=True)
class SkolemSeq:
    """One Skolem-type sequence; ``entries[i]`` holds the symbol in slot i+1.

    Empty slots are stored as 0.  ``defect`` is 1 for the Skolem kinds and
    the smallest symbol for the Langford kinds.  The kind is always carried
    explicitly; it is never inferred from the entries (a hooked Langford
    and a p-extended Langford can have identical entries).
    """

    entries: tuple[int, ...]
    kind: str
    defect: int = 1

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple(self.entries))
        if self.kind not in KINDS:
            raise SequenceError(f"unknown kind {self.kind!r}")
        if self.defect < 1:
            raise SequenceError(f"defect must be positive, got {self.defect}")
        if self.kind not in LANGFORD_KINDS and self.defect != 1:
            raise SequenceError(f"{self.kind} sequences have defect 1")
        if not self.entries:
            raise SequenceError("empty sequence")

    @property
    def order(self) -> int:
        """Number of distinct symbols the kind requires for this length."""
        n = len(self.entries)
        return (n - 1) // 2 if self.kind in HOOKED_KINDS else n // 2

    @property
    def symbols(self) -> range:
        return range(self.defect, self.defect + self.order)

    @property
    def hook(self) -> int | None:
        """1-based position of the single empty slot, or None."""
        if self.kind not in HOOKED_KINDS:
            return None
        for i, v in enumerate(self.entries, start=1):
            if v == 0:
                return i
        return None

    def reversed(self) -> "SkolemSeq":
        return SkolemSeq(tuple(reversed(self.entries)), self.kind, self.defect)

    def is_valid(self) -> bool:
        return validate(self).ok

    def __str__(self) -> str:
        return to_text(self)


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations


@dataclass(frozen=True)
class PairSet:
    """Position pair (a_i, b_i) with b_i - a_i = i for each difference i.

    The pairs are the bridge from sequences to difference triples: the
    sequence (1,1,4,2,3,2,4,3) becomes {1:(1,2), 2:(4,6), 3:(5,8), 4:(3,7)}.
    """

    pairs: dict[int, tuple[int, int]]
    order: int
    defect: int = 1

    def items(self) -> list[tuple[int, tuple[int, int]]]:
        return sorted(self.pairs.items())

    def positions(self, i: int) -> tuple[int, int]:
        return self.pairs[i]


def validate(seq: SkolemSeq) -> ValidationReport:
    """Check every kind-specific invariant; report violations, never raise."""
    bad: list[str] = []
    entries = seq.entries
    length = len(entries)
    n = seq.order

    if seq.kind in HOOKED_KINDS and length % 2 == 0:
        bad.append(f"length {length} is even, expected odd (2n+1)")
    if seq.kind not in HOOKED_KINDS and length % 2 == 1:
        bad.append(f"length {length} is odd, expected even (2n)")
    if n < 1:
        bad.append("too short to hold any symbol")
        return ValidationReport(tuple(bad))

    zeros = [i for i, v in enumerate(entries, start=1) if v == 0]
    if seq.kind in (HOOKED_SKOLEM, HOOKED_LANGFORD):
        if zeros != [2 * n]:
            bad.append(f"hook must be the single 0 at position {2 * n}, found 0s at {zeros}")
    elif seq.kind == P_EXTENDED_LANGFORD:
        if len(zeros) != 1:
            bad.append(f"exactly one empty slot required, found 0s at {zeros}")
    else:
        if zeros:
            bad.append(f"no empty slot allowed, found 0s at {zeros}")

    lo, hi = seq.defect, seq.defect + n - 1
    positions: dict[int, list[int]] = {}
    for i, v in enumerate(entries, start=1):
        if v == 0:
            continue
        if not lo <= v <= hi:
            bad.append(f"position {i}: symbol {v} outside {lo}..{hi}")
            continue
        positions.setdefault(v, []).append(i)

    for k in range(lo, hi + 1):
        occ = positions.get(k, [])
        if len(occ) != 2:
            bad.append(f"symbol {k}: occurs {len(occ)} time(s), expected 2")
            continue
        a, b = occ
        if b - a != k:
            bad.append(f"symbol {k}: positions {a} and {b} differ by {b - a}, expected {k}")

    return ValidationReport(tuple(bad))


def pairs(seq: SkolemSeq) -> PairSet:
    """Extract the position pair of every required symbol.

    Raises SequenceError when the sequence does not validate; the pair map
    of an invalid sequence would be meaningless downstream.
    """
    report = validate(seq)
    if not report.ok:
        raise SequenceError("invalid sequence: " + "; ".join(report.violations))
    found: dict[int, tuple[int, int]] = {}
    first: dict[int, int] = {}
    for i, v in enumerate(seq.entries, start=1):
        if v == 0:
            continue
        if v in first:
            found[v] = (first[v], i)
        else:
            first[v] = i
    return PairSet(pairs=found, order=seq.order, defect=seq.defect)


def pivots(seq: SkolemSeq) -> list[int]:
    """Differences i whose pair can absorb a further shift by i.

    For a plain Skolem sequence these are the i with b_i + i <= 2n; for a
    hooked one, b_i + i <= 2n+1 with b_i + i != 2n (the shifted pair must
    dodge the slot whose label the hook forfeits).
    """
    if seq.kind not in (SKOLEM, HOOKED_SKOLEM):
        raise SequenceError(f"pivots are defined for Skolem kinds, not {seq.kind}")
    ps = pairs(seq)
    n = seq.order
    out = []
    for i, (_, b) in ps.items():
        if seq.kind == SKOLEM:
            if b + i <= 2 * n:
                out.append(i)
        else:
            if b + i <= 2 * n + 1 and b + i != 2 * n:
                out.append(i)
    return sorted(out)


def parse(text: str, kind: str, defect: int = 1) -> SkolemSeq:
    """Parse the compact text notation into a sequence of the given kind.

    Digits 1-9 and letters A-Z cover symbols up to 35; a comma-separated
    decimal form covers anything larger.  0 marks the empty slot and is
    only legal where the kind puts its hook.
    """
    text = text.strip()
    if not text:
        raise SequenceError("empty text")
    if "," in text:
        try:
            entries = tuple(int(part) for part in text.split(","))
        except ValueError as exc:
            raise SequenceError(f"bad decimal entry in {text!r}") from exc
        if any(e < 0 for e in entries):
            raise SequenceError("negative entry")
    else:
        try:
            entries = tuple(_CHAR_VALUE[c] for c in text.upper())
        except KeyError as exc:
            raise SequenceError(f"bad character {exc.args[0]!r}") from exc
    seq = SkolemSeq(entries, kind, defect)

    n = seq.order
    zeros = [i for i, v in enumerate(entries, start=1) if v == 0]
    if kind in (HOOKED_SKOLEM, HOOKED_LANGFORD):
        if zeros != [2 * n]:
            raise SequenceError(f"hook (0) must sit exactly at position {2 * n}, found at {zeros}")
    elif kind == P_EXTENDED_LANGFORD:
        if len(zeros) != 1:
            raise SequenceError(f"exactly one empty slot expected, found at {zeros}")
    elif zeros:
        raise SequenceError(f"0 at position {zeros[0]} but {kind} has no empty slot")
    hi = defect + n - 1
    for i, v in enumerate(entries, start=1):
        if v != 0 and not defect <= v <= hi:
            raise SequenceError(f"position {i}: symbol {v} out of range for order {n}")
    return seq


def to_text(seq: SkolemSeq) -> str:
    """Inverse of parse: compact when all symbols fit in 0-9A-Z."""
    if max(seq.entries) <= 35:
        return "".join(_ALPHABET[v] for v in seq.entries)
    return ",".join(str(v) for v in seq.entries)


def position_pairs(entries: tuple[int, ...]) -> dict[int, tuple[int, int]]:
    """Raw two-pass position scan of an arbitrary entry tuple (1-based).

    Unlike pairs() this does not insist on any kind invariants; callers
    use it on spliced sequences that carry an extra symbol.
    """
    first: dict[int, int] = {}
    out: dict[int, tuple[int, int]] = {}
    for i, v in enumerate(entries, start=1):
        if v == 0:
            continue
        if v in first:
            if v in out:
                raise SequenceError(f"symbol {v} occurs more than twice")
            out[v] = (first[v], i)
        else:
            first[v] = i
    missing = set(first) - set(out)
    if missing:
        raise SequenceError(f"symbols occur once: {sorted(missing)}")
    return out
