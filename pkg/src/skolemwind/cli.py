"""Command-line surface.

Exit codes: 0 success or certified, 1 verification failure, 2 usage
error, 3 search exhausted.  Every failure prints one machine-parsable
line on stderr of the form ``error: <reason>``.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import compose
from . import docio
from . import sequences as sq
from .blocks import ALT, STANDARD, base_blocks, pivot_block, shift_block
from .tables import catalog as catalog_entries, catalog_verify, use_catalog
from .cactus import GRACEFUL, NEAR_GRACEFUL, CactusError, verify_labelling
from .labeller import EXPECTED_MODE, attach_vanes, label_windmill, label_with_pendants
from .search import SearchExhausted, enumerate_sequences

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_EXHAUSTED = 3

_KIND_CHOICES = list(sq.KINDS)


def _worker_env() -> int:
    """Honour the worker-count variable; search is deterministic either way."""
    raw = os.environ.get("SKOLEMWIND_WORKERS")
    if raw is None:
        return 1
    try:
        workers = int(raw)
    except ValueError as exc:
        raise sq.SequenceError(f"SKOLEMWIND_WORKERS must be an integer, got {raw!r}") from exc
    if workers < 1:
        raise sq.SequenceError("SKOLEMWIND_WORKERS must be at least 1")
    return workers


def _parse_skolem_family(text: str) -> sq.SkolemSeq:
    kind = sq.HOOKED_SKOLEM if "0" in text else sq.SKOLEM
    return sq.parse(text, kind)


def _parse_langford_family(text: str, defect: int) -> sq.SkolemSeq:
    kind = sq.HOOKED_LANGFORD if "0" in text else sq.LANGFORD
    return sq.parse(text, kind, defect)


def _emit_doc(graph, provenance: dict, out: str | None) -> None:
    verdict = verify_labelling(graph)
    if out:
        docio.write_doc(graph, verdict.mode, provenance, out)
    else:
        import json

        print(json.dumps(docio.doc_from_graph(graph, verdict.mode, provenance), indent=2))


def _cmd_seq_validate(args) -> int:
    try:
        seq = sq.parse(args.text, args.kind, args.defect)
    except sq.SequenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    report = sq.validate(seq)
    if report.ok:
        print("ok")
        return EXIT_OK
    for v in report.violations:
        print(v)
    return EXIT_VERIFY


def _cmd_seq_pivots(args) -> int:
    seq = sq.parse(args.text, args.kind, args.defect)
    print(",".join(str(p) for p in sq.pivots(seq)))
    return EXIT_OK


def _cmd_seq_enumerate(args) -> int:
    for seq in enumerate_sequences(args.kind, args.order, args.defect, args.hook, args.limit):
        print(sq.to_text(seq))
    return EXIT_OK


def _cmd_seq_compose(args) -> int:
    first = _parse_skolem_family(args.skolem)
    second = _parse_langford_family(args.langford, args.defect)
    if args.interlace:
        composed = compose.interlace(first, second)
    else:
        composed = compose.concatenate(first, second)
    print(sq.to_text(composed))
    return EXIT_OK


def _cmd_blocks(args) -> int:
    seq = sq.parse(args.text, args.kind, args.defect)
    ps = sq.pairs(seq)
    n = seq.order
    hooked = seq.kind in sq.HOOKED_KINDS
    form = STANDARD if args.form == "standard" else ALT
    triples = base_blocks(ps, n, form)
    to_pivot = set(args.pivot or ())
    unknown = to_pivot - set(ps.pairs)
    if unknown:
        raise sq.SequenceError(f"no block for difference {sorted(unknown)}")
    for t in triples:
        if t.diff_index in to_pivot:
            t = pivot_block(t, n, hooked)
        if args.shift:
            t = shift_block(t, args.shift)
        print(t)
    return EXIT_OK


def _cmd_windmill_label(args) -> int:
    seq = _parse_skolem_family(args.seq) if args.seq else None
    chosen = tuple(int(p) for p in args.pivots.split(",")) if args.pivots else None
    if args.type:
        graph, plan = label_with_pendants(args.type, args.order, seq, chosen)
        used = plan
    else:
        graph = label_windmill(args.order, seq, args.form)
        used = f"{args.form} blocks"
    provenance = {"plan": used}
    if seq is not None:
        provenance.update({"sequence": sq.to_text(seq), "kind": seq.kind, "defect": seq.defect})
    _emit_doc(graph, provenance, args.output)
    return EXIT_OK


def _cmd_windmill_verify(args) -> int:
    graph, claimed, _ = docio.read_doc(args.file)
    try:
        verdict = verify_labelling(graph)
    except CactusError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    print(verdict.mode)
    if verdict.duplicate_edges:
        print(f"duplicate edge labels: {','.join(map(str, verdict.duplicate_edges))}")
    if verdict.missing_edges:
        print(f"missing edge labels: {','.join(map(str, verdict.missing_edges))}")
    if not verdict.certified:
        return EXIT_VERIFY
    if claimed in (GRACEFUL, NEAR_GRACEFUL) and claimed != verdict.mode:
        print(f"error: document claims {claimed}, verifier says {verdict.mode}", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def _cmd_windmill_export(args) -> int:
    graph, _, _ = docio.read_doc(args.file)
    sys.stdout.write(docio.to_dot(graph))
    return EXIT_OK


def _cmd_extend(args) -> int:
    graph, _, provenance = docio.read_doc(args.graph)
    result = attach_vanes(graph, args.vanes, args.case)
    provenance = dict(provenance)
    provenance["extension"] = f"case {args.case}, {args.vanes} vanes"
    _emit_doc(result, provenance, args.output)
    return EXIT_OK


def _cmd_catalog_verify(args) -> int:
    entries = list(catalog_entries())
    report = catalog_verify(entries)
    by_table: dict[int, int] = {}
    for e in entries:
        by_table[e.table] = by_table.get(e.table, 0) + 1
    for table in sorted(by_table):
        print(f"table {table}: {by_table[table]} rows")
    if report.ok:
        print(f"all {report.rows} rows verified")
        return EXIT_OK
    for p in report.problems:
        print(p)
    print(f"{len(report.problems)} problem(s) in {report.rows} rows")
    return EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="skolemwind")
    top.add_argument("--seed-catalog", help="path overriding the bundled catalog file")
    sub = top.add_subparsers(dest="command", required=True)

    seq_p = sub.add_parser("seq", help="sequence operations")
    seq_sub = seq_p.add_subparsers(dest="seq_command", required=True)

    p = seq_sub.add_parser("validate")
    p.add_argument("--kind", required=True, choices=_KIND_CHOICES)
    p.add_argument("--defect", type=int, default=1)
    p.add_argument("text")
    p.set_defaults(func=_cmd_seq_validate)

    p = seq_sub.add_parser("pivots")
    p.add_argument("--kind", required=True, choices=_KIND_CHOICES)
    p.add_argument("--defect", type=int, default=1)
    p.add_argument("text")
    p.set_defaults(func=_cmd_seq_pivots)

    p = seq_sub.add_parser("enumerate")
    p.add_argument("--kind", required=True, choices=_KIND_CHOICES)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--defect", type=int, default=1)
    p.add_argument("--hook", type=int, default=None, help="hook slot for p-extended sequences")
    p.add_argument("--limit", type=int, default=None)
    p.set_defaults(func=_cmd_seq_enumerate)

    p = seq_sub.add_parser("compose")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--concat", action="store_true")
    mode.add_argument("--interlace", action="store_true")
    p.add_argument("skolem")
    p.add_argument("langford")
    p.add_argument("--defect", type=int, required=True)
    p.set_defaults(func=_cmd_seq_compose)

    p = sub.add_parser("blocks", help="difference triples from a sequence")
    p.add_argument("--kind", required=True, choices=_KIND_CHOICES)
    p.add_argument("--defect", type=int, default=1)
    p.add_argument("--form", choices=["standard", "alt"], default="standard")
    p.add_argument("--pivot", type=int, action="append", help="pivot this difference's block")
    p.add_argument("--shift", type=int, default=0, help="slide every block by this constant")
    p.add_argument("text")
    p.set_defaults(func=_cmd_blocks)

    wm = sub.add_parser("windmill", help="labelled windmill documents")
    wm_sub = wm.add_subparsers(dest="windmill_command", required=True)

    p = wm_sub.add_parser("label")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--type", choices=list("abcdefghijk"), default=None)
    p.add_argument("--seq", default=None, help="sequence text overriding the catalog")
    p.add_argument("--pivots", default=None, help="comma-separated pivots to use")
    p.add_argument("--form", choices=["standard", "alt"], default="standard")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_windmill_label)

    p = wm_sub.add_parser("verify")
    p.add_argument("file")
    p.set_defaults(func=_cmd_windmill_verify)

    p = wm_sub.add_parser("export")
    p.add_argument("file")
    p.add_argument("--format", choices=["dot"], default="dot")
    p.set_defaults(func=_cmd_windmill_export)

    p = sub.add_parser("extend", help="attach vanes at a zero-labelled vertex")
    p.add_argument("--graph", required=True)
    p.add_argument("--vanes", type=int, required=True)
    p.add_argument("--case", type=int, required=True, choices=[1, 2, 3, 4])
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_extend)

    cat_p = sub.add_parser("catalog", help="bundled catalog operations")
    cat_sub = cat_p.add_subparsers(dest="catalog_command", required=True)
    p = cat_sub.add_parser("verify")
    p.set_defaults(func=_cmd_catalog_verify)

    return top


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _worker_env()
        if args.seed_catalog:
            use_catalog(args.seed_catalog)
        return args.func(args)
    except SearchExhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_EXHAUSTED
    except (sq.SequenceError, compose.ComposeError, CactusError, docio.DocumentError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
