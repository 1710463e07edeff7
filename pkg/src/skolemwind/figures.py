"""Small hand-labelled graphs bundled as fixtures.

Each entry is stored as its list of triangle label-triples (the vertex
labels double as vertex names) or, for the cycle, the labels in cyclic
order.  They serve as baseline certificates for the verifier and as the
bundled labellings for the handful of orders that sit below the range of
the sequence-derived constructions.
"""

from __future__ import annotations

from .cactus import CactusGraph

# One triangle: the smallest graceful graph beyond an edge.
K3_GRACEFUL = ((0, 1, 3),)

# Five-cycle, labels in cyclic order; near-graceful with edge labels
# {1,2,3,4,6}.  Not a cactus: kept as a plain labelled cycle.
C5_NEAR_GRACEFUL_LABELS = (0, 6, 3, 5, 1)

# Plain four-vane windmills, all graceful with edge labels {1..12}:
# standard blocks, alt blocks, and a mix of the two.
WINDMILL4_STANDARD = ((0, 5, 6), (0, 8, 10), (0, 9, 12), (0, 7, 11))
WINDMILL4_ALT = ((0, 1, 6), (0, 2, 10), (0, 3, 12), (0, 4, 11))
WINDMILL4_MIXED = ((0, 1, 6), (0, 2, 10), (0, 9, 12), (0, 7, 11))

# Six-block windmills with three pendants, near-graceful with edge labels
# {1..17, 19}.  The central vertex is listed alongside because these
# labellings do not put 0 at the hub.
TYPE_A_6 = {
    "central": 17,
    "blocks": ((17, 13, 1), (17, 0, 11), (17, 10, 7), (1, 16, 3), (0, 5, 19), (7, 15, 6)),
}
TYPE_D_6 = {
    "central": 1,
    "blocks": ((1, 17, 13), (1, 16, 3), (1, 2, 10), (17, 0, 11), (0, 19, 5), (16, 6, 9)),
}
TYPE_I_6 = {
    "central": 0,
    "blocks": ((0, 19, 5), (0, 17, 11), (0, 9, 8), (17, 1, 13), (17, 7, 10), (1, 16, 3)),
}

BUNDLED_WINDMILLS = {("a", 6): TYPE_A_6, ("d", 6): TYPE_D_6, ("i", 6): TYPE_I_6}


def k3() -> CactusGraph:
    return CactusGraph.from_label_triples(K3_GRACEFUL)


def c5() -> CactusGraph:
    return CactusGraph.cycle(C5_NEAR_GRACEFUL_LABELS)


def windmill4(form: str = "standard") -> CactusGraph:
    data = {
        "standard": WINDMILL4_STANDARD,
        "alt": WINDMILL4_ALT,
        "mixed": WINDMILL4_MIXED,
    }[form]
    return CactusGraph.from_label_triples(data)


def bundled_windmill(type_letter: str, order: int) -> CactusGraph | None:
    entry = BUNDLED_WINDMILLS.get((type_letter, order))
    return CactusGraph.from_label_triples(entry["blocks"]) if entry else None
