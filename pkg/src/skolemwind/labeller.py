"""Assembling certified windmill labellings from sequences.

The engine room: an order-n (hooked) Skolem sequence yields the standard
blocks {0, a_i+n, b_i+n}, which label a plain windmill with the central
vertex at 0.  Replacing the blocks of three pivots r, s, t by their
pivoted forms detaches those triangles from the hub; each pivoted triple
then meets exactly one other triple in exactly one label, and that label
is the vertex where its pendant triangle hangs.  Which attachment
pattern (a-k) comes out is read off the assembled block structure, never
assumed.

Pattern (k) cannot be reached by pivoting alone: its third pendant hangs
on a label <= n, which no pivoted triple can supply, so one block is slid
by a non-pivot constant and alt-form blocks absorb the collisions.

Every labelling built here is pushed through the verifier before being
returned; nothing is certified by construction alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .blocks import ALT, STANDARD, BlockTriple, base_blocks, pivot_block, shift_block
from .tables import CatalogEntry, catalog as catalog_entries, find_entry, max_order
from .cactus import (
    GRACEFUL,
    NEAR_GRACEFUL,
    CactusError,
    CactusGraph,
    MIN_BLOCKS,
    classify_blocks,
    necessary_condition,
    verify_labelling,
)
from .compose import (
    ComposeError,
    concatenate,
    exists,
    extend_order,
    extended_langford_search,
    modified_extended,
)
from .search import SearchExhausted, find_first, iter_sequences
from .sequences import (
    HOOKED_LANGFORD,
    HOOKED_SKOLEM,
    LANGFORD,
    SKOLEM,
    SkolemSeq,
    pairs,
    pivots,
    position_pairs,
    to_text,
    validate,
)

EXPECTED_MODE = {SKOLEM: GRACEFUL, HOOKED_SKOLEM: NEAR_GRACEFUL}


@dataclass(frozen=True)
class Attachment:
    pendant: int
    host_kind: str  # "vane" | "pendant"
    host_index: int
    label: int


@dataclass(frozen=True)
class LabellingPlan:
    """Triple assignment for one windmill: vanes at the hub, pendants off it."""

    seq: SkolemSeq
    vanes: tuple[BlockTriple, ...]
    pendants: tuple[BlockTriple, ...]
    attachments: tuple[Attachment, ...]
    type_letter: str

    def triples(self) -> list[BlockTriple]:
        return list(self.vanes) + list(self.pendants)

    def describe(self) -> str:
        parts = [f"{t.provenance}[{t.diff_index}]" for t in self.pendants]
        alt_vanes = [str(t.diff_index) for t in self.vanes if t.base == ALT]
        summary = f"type ({self.type_letter}); pendants " + ", ".join(parts)
        if alt_vanes:
            summary += "; alt-form vanes " + ",".join(alt_vanes)
        return summary


def _interpret(
    seq: SkolemSeq, triples: list[BlockTriple]
) -> LabellingPlan | None:
    """Read vane/pendant structure off the triples, certify, build the plan.

    Returns None unless the triples assemble into a valid three-pendant
    windmill whose labelling the verifier certifies in the mode the
    sequence kind promises.
    """
    by_values = {t.values: t for t in triples}
    if len(by_values) != len(triples):
        return None
    vanes = sorted(v for v in by_values if 0 in v)
    pendant_values = [v for v in by_values if 0 not in v]
    if len(pendant_values) != 3:
        return None

    try:
        graph = CactusGraph.from_label_triples([t.values for t in triples])
    except CactusError:
        return None
    letter = classify_blocks([t.values for t in triples], central=0)
    if letter is None:
        return None
    verdict = verify_labelling(graph)
    if verdict.mode != EXPECTED_MODE[seq.kind]:
        return None

    # Re-run the placement walk to record hosts and shared labels.
    placed: list[tuple[int, int, int]] = []
    vane_labels = {v: i for i, vals in enumerate(vanes) for v in vals if v != 0}
    intro: dict[int, tuple[str, int]] = {v: ("vane", i) for i, vals in enumerate(vanes) for v in vals if v != 0}
    attachments: list[Attachment] = []
    remaining = sorted(pendant_values)
    while remaining:
        for vals in list(remaining):
            shared = [v for v in vals if v in intro]
            if len(shared) != 1:
                continue
            at = shared[0]
            host_kind, host_index = intro[at]
            attachments.append(Attachment(len(placed), host_kind, host_index, at))
            for v in vals:
                if v != at:
                    intro[v] = ("pendant", len(placed))
            placed.append(vals)
            remaining.remove(vals)
            break
        else:
            return None

    return LabellingPlan(
        seq=seq,
        vanes=tuple(by_values[v] for v in vanes),
        pendants=tuple(by_values[v] for v in placed),
        attachments=tuple(attachments),
        type_letter=letter,
    )


def plan_from_pivots(seq: SkolemSeq, chosen: tuple[int, ...]) -> LabellingPlan | None:
    """Pivot the chosen blocks, interpret the result."""
    ps = pairs(seq)
    n = seq.order
    hooked = seq.kind == HOOKED_SKOLEM
    chosen_set = set(chosen)
    triples: list[BlockTriple] = []
    for t in base_blocks(ps, n):
        if t.diff_index in chosen_set:
            try:
                t = pivot_block(t, n, hooked)
            except ValueError:
                return None
        triples.append(t)
    return _interpret(seq, triples)


def plan_labelling(
    seq: SkolemSeq,
    type_letter: str,
    chosen_pivots: tuple[int, ...] | None = None,
) -> LabellingPlan | None:
    """A certified plan for the requested pattern, or None if infeasible.

    For patterns a-j the pendant triples are pivoted blocks; the pendant
    to pivot matching is brute-forced over 3-subsets of the pivot set in
    ascending order, so the answer is deterministic.  Pattern (k) runs
    the mixed-form search instead.
    """
    if not validate(seq).ok:
        return None
    if type_letter == "k":
        return plan_type_k(seq)
    if chosen_pivots is not None:
        plan = plan_from_pivots(seq, tuple(chosen_pivots))
        return plan if plan is not None and plan.type_letter == type_letter else None
    available = pivots(seq)
    for chosen in combinations(available, 3):
        plan = plan_from_pivots(seq, chosen)
        if plan is not None and plan.type_letter == type_letter:
            return plan
    return None


def assemble(plan: LabellingPlan) -> CactusGraph:
    """Labelled graph for a plan; re-verified, never trusted."""
    graph = CactusGraph.from_label_triples([t.values for t in plan.triples()])
    verdict = verify_labelling(graph)
    if verdict.mode != EXPECTED_MODE[plan.seq.kind]:
        raise CactusError(f"assembled labelling is {verdict.mode}: {verdict.problems}")
    return graph


# -- pattern (k): mixed triple forms -------------------------------------

def _k_candidates(s: int, k: int, ps, n: int, hooked: bool) -> list[BlockTriple]:
    """Transformed blocks of difference s that contain the label k.

    Either the whole block is slid by k (standard or alt form), or an alt
    block is slid so its small entry s+c lands on k.  Every candidate is
    range-checked; illegal slides are dropped.
    """
    a, b = ps.pairs[s]
    out = []
    raw = [
        BlockTriple((0, a + n, b + n), s),
        BlockTriple((0, s, b + n), s, base=ALT),
    ]
    for base_triple in raw:
        try:
            out.append(shift_block(base_triple, k, n, hooked))
        except ValueError:
            pass
    if k > s:
        alt = BlockTriple((0, s, b + n), s, base=ALT)
        try:
            out.append(shift_block(alt, k - s, n, hooked))
        except ValueError:
            pass
    return [t for t in out if k in t.values]


def plan_type_k(seq: SkolemSeq) -> LabellingPlan | None:
    """Bounded deterministic search for a pattern-(k) labelling.

    Shape: a pivoted block T2 hangs on a vane; a second pivoted block T3
    hangs on one big value of T2; a slid block T4 hangs on T2's small
    value k.  Vane blocks that collide with the transformed triples are
    flipped to alt form, which frees exactly the a_i+n entry.
    """
    if not validate(seq).ok:
        return None
    ps = pairs(seq)
    n = seq.order
    hooked = seq.kind == HOOKED_SKOLEM
    piv = pivots(seq)
    std = {t.diff_index: t for t in base_blocks(ps, n)}

    for k in piv:
        try:
            t2 = pivot_block(std[k], n, hooked)
        except ValueError:
            continue
        for l in piv:
            if l == k:
                continue
            try:
                t3 = pivot_block(std[l], n, hooked)
            except ValueError:
                continue
            if len(set(t2.values) & set(t3.values)) != 1:
                continue
            for s in sorted(ps.pairs):
                if s in (k, l):
                    continue
                for t4 in _k_candidates(s, k, ps, n, hooked):
                    if set(t4.values) & set(t2.values) != {k}:
                        continue
                    plan = _settle_k(seq, ps, n, hooked, {k: t2, l: t3, s: t4})
                    if plan is not None:
                        return plan
    return None


def _settle_k(seq, ps, n, hooked, special: dict[int, BlockTriple]) -> LabellingPlan | None:
    """Flip colliding vanes to alt form, then interpret the triple set.

    In a three-pendant windmill every duplicated label belongs to the
    pendant cluster's hub triple T2, so any other duplicate must be
    dissolved; only standard vanes whose a_i+n entry is the offender can
    dissolve one.
    """
    # The hub is the special triple meeting both of the other two.
    trips = list(special.values())
    hub = None
    for t in trips:
        others = [u for u in trips if u is not t]
        if all(set(t.values) & set(u.values) for u in others):
            hub = t
    if hub is None:
        return None
    form: dict[int, str] = {j: STANDARD for j in ps.pairs if j not in special}

    def vane_block(j: int) -> BlockTriple:
        a, b = ps.pairs[j]
        if form[j] == STANDARD:
            return BlockTriple((0, a + n, b + n), j)
        return BlockTriple((0, j, b + n), j, base=ALT)

    for _ in range(len(form) + 1):
        triples = [vane_block(j) for j in sorted(form)] + [special[d] for d in sorted(special)]
        counts: dict[int, int] = {}
        for t in triples:
            for v in t.values:
                counts[v] = counts.get(v, 0) + 1
        offenders = sorted(
            v for v, c in counts.items()
            if v != 0 and (c > 2 or (c == 2 and v not in hub.values))
        )
        if not offenders:
            break
        fixed = False
        for v in offenders:
            for j in sorted(form):
                a, b = ps.pairs[j]
                if form[j] == STANDARD and a + n == v:
                    form[j] = ALT
                    fixed = True
                    break
            if fixed:
                break
        if not fixed:
            return None
    else:
        return None

    triples = [vane_block(j) for j in sorted(form)] + [special[d] for d in sorted(special)]
    plan = _interpret(seq, triples)
    if plan is not None and plan.type_letter == "k":
        return plan
    return None


# -- top-level labelling entry points -------------------------------------

def label_windmill(n: int, seq: SkolemSeq | None = None, form: str = STANDARD) -> CactusGraph:
    """A certified plain windmill labelling of order n.

    Graceful when n = 0, 1 (mod 4), near-graceful when n = 2, 3 (mod 4);
    the sequence is found by backtracking unless one is supplied.
    """
    kind = SKOLEM if necessary_condition(n, GRACEFUL) else HOOKED_SKOLEM
    if seq is None:
        seq = find_first(kind, n)
        if seq is None:
            raise SearchExhausted(f"no {kind} sequence of order {n}")
    if seq.order != n:
        raise CactusError(f"sequence has order {seq.order}, requested {n}")
    graph = CactusGraph.from_label_triples(
        [t.values for t in base_blocks(pairs(seq), n, form)]
    )
    verdict = verify_labelling(graph)
    if verdict.mode != EXPECTED_MODE[seq.kind]:
        raise CactusError(f"labelling is {verdict.mode}: {verdict.problems}")
    return graph


def _extension_seed(type_letter: str) -> CatalogEntry:
    pool = [e for e in catalog_entries() if e.type_letter == type_letter]
    return min(pool, key=lambda e: e.order)


def label_with_pendants(
    type_letter: str,
    n: int,
    seq: SkolemSeq | None = None,
    chosen_pivots: tuple[int, ...] | None = None,
) -> tuple[CactusGraph, str]:
    """A certified three-pendant windmill; returns (graph, plan summary).

    Resolution order: an explicitly supplied sequence; the bundled
    hand-labelled graphs; a catalog row; extension of the pattern's seed
    row for orders above the catalog; exhaustive search at the leftover
    small orders.  Raises SearchExhausted when nothing certifies.
    """
    if type_letter not in MIN_BLOCKS:
        raise CactusError(f"unknown type letter {type_letter!r}")
    if n < MIN_BLOCKS[type_letter]:
        raise CactusError(
            f"pattern ({type_letter}) needs at least {MIN_BLOCKS[type_letter]} blocks, got {n}"
        )
    if type_letter == "k" and seq is None:
        return label_type_k(n), "mixed triple forms"

    if seq is not None:
        plan = plan_labelling(seq, type_letter, chosen_pivots)
        if plan is None:
            raise SearchExhausted(
                f"supplied sequence admits no pattern ({type_letter}) plan"
            )
        return assemble(plan), plan.describe()

    from .figures import bundled_windmill

    bundled = bundled_windmill(type_letter, n)
    if bundled is not None:
        return bundled, "bundled hand labelling"

    entry = find_entry(type_letter, n)
    if entry is not None:
        plan = plan_labelling(entry.sequence(), type_letter, entry.pivots)
        if plan is None:
            raise SearchExhausted(
                f"catalog row (table {entry.table}, order {n}) failed to plan"
            )
        return assemble(plan), f"catalog table {entry.table}; " + plan.describe()

    top = max_order(type_letter)
    if n > top:
        seed_entry = _extension_seed(type_letter)
        base = seed_entry.sequence()
        extended = extend_order(base, n)
        if type_letter == "k":
            plan = plan_type_k(extended)
        else:
            plan = plan_labelling(extended, type_letter, seed_entry.pivots)
        if plan is None:
            raise SearchExhausted(f"extension to order {n} lost the ({type_letter}) structure")
        return assemble(plan), f"extended order-{seed_entry.order} seed; " + plan.describe()

    # Small orders under the catalog range: honest exhaustive search.
    kind = SKOLEM if necessary_condition(n, GRACEFUL) else HOOKED_SKOLEM
    for candidate in iter_sequences(kind, n):
        if len(pivots(candidate)) < 3:
            continue
        plan = plan_labelling(candidate, type_letter)
        if plan is not None:
            return assemble(plan), "search; " + plan.describe()
    raise SearchExhausted(f"no order-{n} sequence labels pattern ({type_letter})")


def label_type_k(n: int, seq: SkolemSeq | None = None) -> CactusGraph:
    """Certified pattern-(k) labelling via mixed triple forms."""
    if n < MIN_BLOCKS["k"]:
        raise CactusError(f"pattern (k) labellings start at order {MIN_BLOCKS['k']}, got {n}")
    if seq is not None:
        plan = plan_type_k(seq)
        if plan is None:
            raise SearchExhausted("supplied sequence admits no pattern (k) plan")
        return assemble(plan)
    entry = find_entry("k", n)
    if entry is not None and entry.triples is not None:
        sequence = entry.sequence()
        plan = _interpret(sequence, entry.derived_triples())
        if plan is None or plan.type_letter != "k":
            raise SearchExhausted(f"catalog triples for order {n} do not assemble to pattern (k)")
        return assemble(plan)
    seed_entry = _extension_seed("k")
    extended = extend_order(seed_entry.sequence(), n)
    plan = plan_type_k(extended)
    if plan is None:
        raise SearchExhausted(f"mixed-form search failed at order {n}")
    return assemble(plan)


# -- attaching vanes at a zero-labelled vertex ----------------------------

def attach_vanes(g: CactusGraph, count: int, case: int) -> CactusGraph:
    """Add `count` triangles at the 0-labelled vertex, certified.

    The four cases transfer between the modes:
        1  near-graceful -> graceful        (extended sequence + bridge symbol)
        2  graceful      -> graceful        (plain Langford)
        3  graceful      -> near-graceful   (hooked Langford)
        4  near-graceful -> near-graceful   (extended + bridge, one slack slot)
    The new vane labels continue the host's label range, so the result
    certifies exactly when the sequence search succeeds.
    """
    if case not in (1, 2, 3, 4):
        raise CactusError(f"case must be 1..4, got {case}")
    if count == 0:
        return g
    if count < 0:
        raise CactusError("vane count must be non-negative")
    verdict = verify_labelling(g)
    need = NEAR_GRACEFUL if case in (1, 4) else GRACEFUL
    if verdict.mode != need:
        raise CactusError(f"case {case} needs a {need} host, verifier says {verdict.mode}")
    m = g.edge_count
    zeros = [v for v in g.vertices if g.labelling[v] == 0]
    if not zeros:
        raise CactusError("host graph has no vertex labelled 0")
    x = zeros[0]

    c = m + count
    if case in (2, 3):
        kind = LANGFORD if case == 2 else HOOKED_LANGFORD
        d, l = m + 1, count
        verdict2 = exists(kind, l, d)
        if not verdict2:
            raise SearchExhausted(f"no {kind} of defect {d}, order {l}: {verdict2.rule}")
        lang = find_first(kind, l, d)
        if lang is None:
            raise SearchExhausted(f"backtracking found no {kind} of defect {d}, order {l}")
        pair_map = position_pairs(lang.entries)
        used = f"{kind} defect {d} order {l}: {to_text(lang)}"
    else:
        d, l = m + 2, count - 1
        if l < 1:
            raise CactusError("the bridge construction needs at least two new vanes")
        pad = 0 if case == 1 else 1
        p = 2 * l + 2 + pad - m
        if not 1 <= p <= 2 * l + 1:
            raise SearchExhausted(
                f"bridge symbol {m} cannot sit at position {p} of an order-{l} extended sequence"
            )
        els = extended_langford_search(d, l, p)
        if els is None:
            raise SearchExhausted(f"no extended sequence with defect {d}, {l} differences, slot {p}")
        entries = modified_extended(els, m, pad=pad)
        pair_map = position_pairs(entries)
        used = f"extended langford defect {d}, {l} differences, slot {p}, bridge {m}"

    labelling = dict(g.labelling)
    vertices = list(g.vertices)
    edges = list(g.edges)
    blocks = list(g.blocks)
    nxt = max(g.vertices) + 1
    for sym in sorted(pair_map):
        a, b = pair_map[sym]
        u, v = nxt, nxt + 1
        nxt += 2
        labelling[u], labelling[v] = a + c, b + c
        vertices.extend((u, v))
        edges.extend(sorted((min(p, q), max(p, q)) for p, q in ((x, u), (x, v), (u, v))))
        blocks.append(tuple(sorted((x, u, v))))

    result = CactusGraph(tuple(sorted(vertices)), tuple(sorted(edges)), tuple(blocks), labelling)
    out = verify_labelling(result)
    want = GRACEFUL if case in (1, 2) else NEAR_GRACEFUL
    if out.mode != want:
        raise ComposeError(f"case {case} attachment came out {out.mode} ({used})")
    return result


# -- the four-pendant composition ------------------------------------------

_LANGFORD_9_17 = (
    24, 17, 21, 22, 18, 14, 11, 19, 25, 23, 10, 20, 9, 16, 13, 15, 12,
    11, 17, 14, 10, 9, 18, 21, 24, 22, 19, 13, 12, 16, 15, 20, 23, 25,
)
_FOUR_PENDANT_PIVOTS = (1, 2, 4, 11)


def four_pendant_demo() -> tuple[CactusGraph, SkolemSeq]:
    """A graceful order-25 windmill with four pendant triangles.

    Concatenating the order-8 sequence with a defect-9 Langford sequence
    yields an order-25 sequence whose pivots include 1, 2, 4 and 11;
    pivoting all four produces four pendants on four distinct vanes.
    """
    s8 = SkolemSeq((4, 8, 5, 7, 4, 1, 1, 5, 6, 8, 7, 2, 3, 2, 6, 3), SKOLEM)
    lang = SkolemSeq(_LANGFORD_9_17, LANGFORD, defect=9)
    s25 = concatenate(s8, lang)
    available = set(pivots(s25))
    if not set(_FOUR_PENDANT_PIVOTS) <= available:
        raise CactusError(f"pivots {_FOUR_PENDANT_PIVOTS} not all available: {sorted(available)}")
    ps = pairs(s25)
    n = s25.order
    triples = []
    for t in base_blocks(ps, n):
        if t.diff_index in _FOUR_PENDANT_PIVOTS:
            t = pivot_block(t, n, hooked=False)
        triples.append(t)
    graph = CactusGraph.from_label_triples([t.values for t in triples])
    verdict = verify_labelling(graph)
    if verdict.mode != GRACEFUL:
        raise CactusError(f"four-pendant demo is {verdict.mode}: {verdict.problems}")
    return graph, s25
