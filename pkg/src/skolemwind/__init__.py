"""Skolem-type sequences and certified graceful windmill labellings."""

from .blocks import (
    ALT,
    STANDARD,
    BlockTriple,
    base_blocks,
    check_heffter,
    derive_form,
    heffter_triples,
    pivot_block,
    shift_block,
)
from .cactus import (
    GRACEFUL,
    NEAR_GRACEFUL,
    NEITHER,
    AttachDescriptor,
    CactusError,
    CactusGraph,
    LabelVerdict,
    WindmillSpec,
    build_windmill,
    classify,
    classify_blocks,
    necessary_condition,
    verify_labelling,
    windmill_spec,
)
from .tables import CatalogEntry, catalog, catalog_verify, find_entry, load_catalog
from .compose import (
    ComposeError,
    ExistenceVerdict,
    concatenate,
    exists,
    extend_order,
    extended_langford_search,
    interlace,
    modified_extended,
)
from .labeller import (
    LabellingPlan,
    assemble,
    attach_vanes,
    four_pendant_demo,
    label_type_k,
    label_windmill,
    label_with_pendants,
    plan_labelling,
    plan_type_k,
)
from .search import (
    SearchExhausted,
    enumerate_sequences,
    find_first,
    find_with_pivots,
    iter_sequences,
)
from .sequences import (
    HOOKED_LANGFORD,
    HOOKED_SKOLEM,
    LANGFORD,
    P_EXTENDED_LANGFORD,
    SKOLEM,
    PairSet,
    SequenceError,
    SkolemSeq,
    ValidationReport,
    pairs,
    parse,
    pivots,
    to_text,
    validate,
)

__version__ = "0.1.0"
