"""Triangular cacti, Dutch windmills, and the labelling verifier.

A triangular cactus is a connected graph whose blocks are all triangles;
a Dutch windmill is the special case where every block (vane) shares one
central vertex.  Pendant triangles hang off a single vertex of an
existing block.  With exactly three pendants on a windmill there are
eleven attachment patterns, lettered a-k:

    a  three pendants on three distinct vanes
    b  two pendants on the two outer vertices of one vane, one elsewhere
    c  two pendants on the same outer vertex, one on another vane
    d  a chain of two pendants off one vane, plus one on another vane
    e  two pendants on one outer vertex, one on the other vertex of
       the same vane
    f  three pendants on a single outer vertex
    g  pendants on both outer vertices of one vane, plus a pendant on
       one of those pendants
    h  one pendant carrying two pendants on the same free vertex
    i  two pendants on one outer vertex, plus a pendant on one of them
    j  a chain of three pendants
    k  one pendant carrying pendants on both of its free vertices

The labelling verifier here is the certificate of record: every labelled
graph the package emits is pushed through it before being reported.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Mapping
from dataclasses import dataclass

GRACEFUL = "graceful"
NEAR_GRACEFUL = "near-graceful"
NEITHER = "neither"

TYPE_LETTERS = "abcdefghijk"

# Smallest windmill that leaves room for the pattern's vanes; pattern (k)
# additionally needs an order where a mixed-form labelling is known.
MIN_BLOCKS = {
    "a": 6, "b": 5, "c": 5, "d": 5,
    "e": 4, "f": 4, "g": 4, "h": 4, "i": 4, "j": 4,
    "k": 5,
}


class CactusError(ValueError):
    """Structurally impossible cactus or windmill request."""


@dataclass(frozen=True)
class CactusGraph:
    """A labelled graph whose triangle blocks, if any, are tracked.

    ``blocks`` lists the triangle blocks for cactus-shaped graphs; a
    non-cactus host (a labelled cycle, say) simply carries no blocks.
    ``labelling`` maps vertex id to label.
    """

    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    blocks: tuple[tuple[int, int, int], ...] = ()
    labelling: Mapping[int, int] | None = None

    @staticmethod
    def from_blocks(
        blocks: Iterable[tuple[int, int, int]],
        labelling: Mapping[int, int] | None = None,
        check: bool = True,
    ) -> "CactusGraph":
        blocks = tuple(tuple(sorted(b)) for b in blocks)
        vertices = tuple(sorted({v for b in blocks for v in b}))
        edges = sorted({e for b in blocks for e in _triangle_edges(b)})
        g = CactusGraph(vertices, tuple(edges), blocks, dict(labelling) if labelling else None)
        if check:
            ok, problems = is_triangular_cactus(g)
            if not ok:
                raise CactusError("not a triangular cactus: " + "; ".join(problems))
        return g

    @staticmethod
    def from_label_triples(
        triples: Iterable[tuple[int, int, int]], check: bool = True
    ) -> "CactusGraph":
        """Assemble a labelled cactus from label triples.

        The labels double as vertex identities: two triples sharing a label
        share that vertex.  Vertex ids are dense, ordered by label, so the
        0-labelled vertex (the hub in the standard constructions) gets id 0.
        """
        triples = list(triples)
        labels = sorted({v for t in triples for v in t})
        vid = {lab: i for i, lab in enumerate(labels)}
        blocks = [tuple(sorted(vid[v] for v in t)) for t in triples]
        return CactusGraph.from_blocks(
            blocks, labelling={vid[lab]: lab for lab in labels}, check=check
        )

    @staticmethod
    def cycle(labels: Iterable[int]) -> "CactusGraph":
        """A labelled cycle on the given labels, in cyclic order."""
        labels = list(labels)
        k = len(labels)
        if k < 3:
            raise CactusError("cycle needs at least 3 vertices")
        edges = sorted(tuple(sorted((i, (i + 1) % k))) for i in range(k))
        return CactusGraph(
            tuple(range(k)), tuple(edges), (), {i: lab for i, lab in enumerate(labels)}
        )

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def label(self, v: int) -> int:
        if self.labelling is None or v not in self.labelling:
            raise CactusError(f"vertex {v} is unlabelled")
        return self.labelling[v]

    def with_labelling(self, labelling: Mapping[int, int]) -> "CactusGraph":
        return CactusGraph(self.vertices, self.edges, self.blocks, dict(labelling))


def _triangle_edges(block: tuple[int, int, int]) -> list[tuple[int, int]]:
    a, b, c = block
    return [(a, b), (a, c), (b, c)]


def is_triangular_cactus(g: CactusGraph) -> tuple[bool, list[str]]:
    """Connected, all blocks triangles, blocks pairwise share <= 1 vertex.

    For a connected graph built from triangles that pairwise share at most
    one vertex, the vertex count 2B+1 forces the block structure to be a
    tree, i.e. the triangles really are the biconnected components.
    """
    problems: list[str] = []
    if not g.blocks:
        problems.append("no triangle blocks")
        return False, problems
    for b in g.blocks:
        if len(set(b)) != 3:
            problems.append(f"block {b} is not a triangle")
    blocks = [set(b) for b in g.blocks]
    for i in range(len(blocks)):
        for j in range(i + 1, len(blocks)):
            shared = blocks[i] & blocks[j]
            if len(shared) > 1:
                problems.append(f"blocks {g.blocks[i]} and {g.blocks[j]} share {sorted(shared)}")
    expected_edges = {e for b in g.blocks for e in _triangle_edges(b)}
    if set(g.edges) != expected_edges or len(g.edges) != 3 * len(g.blocks):
        problems.append("edges do not partition into the declared triangles")
    if len(g.vertices) != 2 * len(g.blocks) + 1:
        problems.append(
            f"{len(g.vertices)} vertices for {len(g.blocks)} blocks, expected {2 * len(g.blocks) + 1}"
        )
    if not _connected(g.vertices, g.edges):
        problems.append("graph is not connected")
    return not problems, problems


def _connected(vertices: tuple[int, ...], edges: Iterable[tuple[int, int]]) -> bool:
    if not vertices:
        return False
    adj: dict[int, list[int]] = {v: [] for v in vertices}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = {vertices[0]}
    stack = [vertices[0]]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(vertices)


@dataclass(frozen=True)
class AttachDescriptor:
    """Where one pendant triangle hangs.

    ``host_kind`` is "vane" or "pendant"; ``slot`` picks one of the host's
    two non-shared vertices (a vane's outer vertices, or a pendant's free
    vertices).  Pendants may only hang on earlier pendants, so the
    attachments always form a forest.
    """

    host_kind: str
    host_index: int
    slot: int

    def __post_init__(self) -> None:
        if self.host_kind not in ("vane", "pendant"):
            raise CactusError(f"unknown host kind {self.host_kind!r}")
        if self.slot not in (1, 2):
            raise CactusError(f"slot must be 1 or 2, got {self.slot}")
        if self.host_index < 0:
            raise CactusError("host index must be non-negative")


@dataclass(frozen=True)
class WindmillSpec:
    """A windmill with `blocks` triangles, 0 or 3 of which are pendants."""

    blocks: int
    pendants: tuple[AttachDescriptor, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "pendants", tuple(self.pendants))
        if self.blocks < 1:
            raise CactusError("a windmill needs at least one block")
        if len(self.pendants) not in (0, 3):
            raise CactusError("only plain windmills or exactly three pendants are supported")
        if self.vanes < 1:
            raise CactusError("at least one vane is required")
        for idx, d in enumerate(self.pendants):
            if d.host_kind == "vane" and d.host_index >= self.vanes:
                raise CactusError(f"pendant {idx} hosts on missing vane {d.host_index}")
            if d.host_kind == "pendant" and d.host_index >= idx:
                raise CactusError(f"pendant {idx} must hang on an earlier pendant, not {d.host_index}")

    @property
    def vanes(self) -> int:
        return self.blocks - len(self.pendants)

    @property
    def type_letter(self) -> str | None:
        return classify(self) if len(self.pendants) == 3 else None


def windmill_spec(n: int, type_letter: str) -> WindmillSpec:
    """The canonical three-pendant spec for an attachment pattern."""
    if type_letter not in TYPE_LETTERS:
        raise CactusError(f"unknown type letter {type_letter!r}")
    vane = lambda i, s: AttachDescriptor("vane", i, s)
    pend = lambda i, s: AttachDescriptor("pendant", i, s)
    shapes = {
        "a": (vane(0, 1), vane(1, 1), vane(2, 1)),
        "b": (vane(0, 1), vane(0, 2), vane(1, 1)),
        "c": (vane(0, 1), vane(0, 1), vane(1, 1)),
        "d": (vane(0, 1), pend(0, 1), vane(1, 1)),
        "e": (vane(0, 1), vane(0, 1), vane(0, 2)),
        "f": (vane(0, 1), vane(0, 1), vane(0, 1)),
        "g": (vane(0, 1), vane(0, 2), pend(0, 1)),
        "h": (vane(0, 1), pend(0, 1), pend(0, 1)),
        "i": (vane(0, 1), vane(0, 1), pend(0, 1)),
        "j": (vane(0, 1), pend(0, 1), pend(1, 1)),
        "k": (vane(0, 1), pend(0, 1), pend(0, 2)),
    }
    if n < MIN_BLOCKS[type_letter]:
        raise CactusError(
            f"pattern ({type_letter}) needs at least {MIN_BLOCKS[type_letter]} blocks, got {n}"
        )
    return WindmillSpec(n, shapes[type_letter])


def build_windmill(spec: WindmillSpec) -> CactusGraph:
    """Construct the unlabelled graph: central vertex 0, dense integer ids."""
    letter = spec.type_letter
    if letter is not None and spec.blocks < MIN_BLOCKS[letter]:
        raise CactusError(
            f"pattern ({letter}) needs at least {MIN_BLOCKS[letter]} blocks, got {spec.blocks}"
        )
    blocks: list[tuple[int, int, int]] = []
    vane_outer: list[tuple[int, int]] = []
    nxt = 1
    for _ in range(spec.vanes):
        x, y = nxt, nxt + 1
        nxt += 2
        blocks.append((0, x, y))
        vane_outer.append((x, y))
    pendant_free: list[tuple[int, int]] = []
    for d in spec.pendants:
        if d.host_kind == "vane":
            host_vertex = vane_outer[d.host_index][d.slot - 1]
        else:
            host_vertex = pendant_free[d.host_index][d.slot - 1]
        x, y = nxt, nxt + 1
        nxt += 2
        blocks.append(tuple(sorted((host_vertex, x, y))))
        pendant_free.append((x, y))
    return CactusGraph.from_blocks(blocks)


def classify(spec: WindmillSpec) -> str:
    """The attachment-pattern letter; total for three-pendant specs.

    Invariant under renumbering vanes and under swapping the two slots of
    any host, since only same-host and same-slot coincidences matter.
    """
    if len(spec.pendants) != 3:
        raise CactusError("classification needs exactly three pendants")
    level: list[int] = []
    for d in spec.pendants:
        level.append(0 if d.host_kind == "vane" else level[d.host_index] + 1)
    key = tuple(sorted(level))
    hosts = [(d.host_kind, d.host_index, d.slot) for d in spec.pendants]

    if key == (0, 0, 0):
        vanes = [h[1] for h in hosts]
        slots = [(h[1], h[2]) for h in hosts]
        if len(set(vanes)) == 3:
            return "a"
        if len(set(vanes)) == 2:
            dup = [v for v in set(vanes) if vanes.count(v) == 2][0]
            pair_slots = [s for v, s in slots if v == dup]
            return "c" if pair_slots[0] == pair_slots[1] else "b"
        return "f" if len(set(slots)) == 1 else "e"
    if key == (0, 0, 1):
        ground = [h for h, lv in zip(hosts, level) if lv == 0]
        (v1, s1), (v2, s2) = [(h[1], h[2]) for h in ground]
        if v1 != v2:
            return "d"
        return "i" if s1 == s2 else "g"
    if key == (0, 1, 1):
        upper = [h for h, lv in zip(hosts, level) if lv == 1]
        return "h" if upper[0][2] == upper[1][2] else "k"
    if key == (0, 1, 2):
        return "j"
    raise CactusError(f"unclassifiable level profile {key}")


def classify_blocks(
    blocks: Iterable[tuple[int, int, int]], central: int
) -> str | None:
    """Read the attachment pattern off an assembled block list.

    Blocks containing `central` are the vanes; the remaining three must
    hang off their vertices forest-fashion.  Returns None when the block
    list is not a three-pendant windmill around that central vertex.
    """
    blocks = [tuple(sorted(b)) for b in blocks]
    vanes = [b for b in blocks if central in b]
    pendants = sorted(b for b in blocks if central not in b)
    if len(pendants) != 3 or not vanes:
        return None

    depth: dict[int, int] = {}
    owner: dict[int, tuple[str, int]] = {}
    for vi, b in enumerate(vanes):
        for v in b:
            if v != central:
                depth[v] = 0
                owner[v] = ("vane", vi)

    placed: list[tuple[int, int, int]] = []
    attach_vertex: dict[tuple[int, int, int], int] = {}
    remaining = list(pendants)
    while remaining:
        progressed = False
        for b in sorted(remaining):
            shared = [v for v in b if v in depth]
            if not shared:
                continue
            if len(shared) != 1:
                return None
            v = shared[0]
            attach_vertex[b] = v
            for w in b:
                if w != v:
                    depth[w] = depth[v] + 1
                    owner[w] = ("pendant", len(placed))
            placed.append(b)
            remaining.remove(b)
            progressed = True
            break
        if not progressed:
            return None

    levels = sorted(depth[attach_vertex[b]] for b in pendants)
    att = {b: attach_vertex[b] for b in pendants}
    if levels == [0, 0, 0]:
        owners = [owner[att[b]][1] for b in pendants]
        verts = [att[b] for b in pendants]
        if len(set(owners)) == 3:
            return "a"
        if len(set(owners)) == 2:
            dup = [o for o in set(owners) if owners.count(o) == 2][0]
            vv = [v for v, o in zip(verts, owners) if o == dup]
            return "c" if vv[0] == vv[1] else "b"
        return "f" if len(set(verts)) == 1 else "e"
    if levels == [0, 0, 1]:
        ground = [b for b in pendants if depth[att[b]] == 0]
        o1, o2 = (owner[att[b]] for b in ground)
        v1, v2 = (att[b] for b in ground)
        if o1 != o2:
            return "d"
        return "i" if v1 == v2 else "g"
    if levels == [0, 1, 1]:
        upper = [att[b] for b in pendants if depth[att[b]] == 1]
        return "h" if upper[0] == upper[1] else "k"
    if levels == [0, 1, 2]:
        return "j"
    return None


@dataclass(frozen=True)
class LabelVerdict:
    mode: str
    edge_labels: tuple[int, ...]
    duplicate_edges: tuple[int, ...]
    missing_edges: tuple[int, ...]
    problems: tuple[str, ...]

    @property
    def certified(self) -> bool:
        return self.mode in (GRACEFUL, NEAR_GRACEFUL)


def verify_labelling(g: CactusGraph) -> LabelVerdict:
    """Decide graceful / near-graceful / neither from the definitions.

    Graceful: injective labels within {0..m} inducing every edge label in
    {1..m} exactly once.  Near-graceful: labels within {0..m+1}, edge
    labels exactly {1..m-1, m+1}.  Raises on an unlabelled vertex; every
    other failure is reported, not raised.
    """
    if g.labelling is None:
        raise CactusError("graph carries no labelling")
    unlabelled = [v for v in g.vertices if v not in g.labelling]
    if unlabelled:
        raise CactusError(f"unlabelled vertices: {unlabelled}")

    m = len(g.edges)
    labels = [g.labelling[v] for v in g.vertices]
    problems: list[str] = []

    label_counts = Counter(labels)
    dup_vertices = sorted(l for l, c in label_counts.items() if c > 1)
    if dup_vertices:
        problems.append(f"vertex labels used more than once: {dup_vertices}")
    if any(l < 0 for l in labels):
        problems.append("negative vertex label")

    edge_label_list = sorted(abs(g.labelling[u] - g.labelling[v]) for u, v in g.edges)
    edge_counts = Counter(edge_label_list)
    duplicates = tuple(sorted(l for l, c in edge_counts.items() if c > 1))
    missing = tuple(sorted(set(range(1, m + 1)) - set(edge_counts)))

    injective = not dup_vertices and all(l >= 0 for l in labels)
    graceful_edges = set(range(1, m + 1))
    near_edges = set(range(1, m)) | {m + 1}

    mode = NEITHER
    if injective and max(labels, default=0) <= m and not duplicates and set(edge_counts) == graceful_edges:
        mode = GRACEFUL
    elif injective and max(labels, default=0) <= m + 1 and not duplicates and set(edge_counts) == near_edges:
        mode = NEAR_GRACEFUL
    else:
        if duplicates:
            problems.append(f"duplicate edge labels: {list(duplicates)}")
        if missing:
            problems.append(f"missing edge labels: {list(missing)}")
        over = max(labels, default=0)
        if over > m + 1:
            problems.append(f"vertex label {over} exceeds m+1 = {m + 1}")

    return LabelVerdict(mode, tuple(edge_label_list), duplicates, missing, tuple(problems))


def necessary_condition(n: int, target: str) -> bool:
    """Block-count congruence any (near) graceful triangular cactus obeys."""
    if n < 1:
        raise CactusError("block count must be positive")
    if target == GRACEFUL:
        return n % 4 in (0, 1)
    if target == NEAR_GRACEFUL:
        return n % 4 in (2, 3)
    raise CactusError(f"unknown target {target!r}")
