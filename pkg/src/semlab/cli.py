"""Command-line front end.

Commands: check, solve, interval, valences, perfect, sweep, render.
Graphs come from generator flags, a graph6 string, or a file (edge-list or
graph6). Exit codes for solve: 0 = super edge-magic (or edgeless), 1 = not
super edge-magic, 2 = budget exceeded; malformed input exits 3 everywhere.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .graphs import (
    CactusSpec,
    Graph,
    GraphError,
    degree_sequence,
    degseq_4_2_realizations,
    make_cactus,
    make_cycle,
    make_two_cycle,
    parse_graph,
    parse_graph6,
)
from .labeling import LabelingError, SemLabeling, verify_sem
from .obstructions import check_all
from .solver import (
    DEFAULT_BUDGET,
    STATUS_NOT_SEM_EXHAUSTED,
    STATUS_NOT_SEM_OBSTRUCTION,
    STATUS_SEM,
    STATUS_TRIVIAL_EDGELESS,
    STATUS_UNKNOWN_BUDGET_EXCEEDED,
    SearchConfig,
    is_perfect_sem,
    search_sem,
    sem_interval,
    sem_set,
)

EXIT_SEM = 0
EXIT_NOT_SEM = 1
EXIT_UNKNOWN = 2
EXIT_INPUT_ERROR = 3

_EDGELESS_NOTE = "trivially super edge-magic, valence undefined"


class CliError(Exception):
    """Input problem worth exit code 3."""


def _add_graph_args(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("path", nargs="?", help="graph file (edge-list or graph6)")
    sub.add_argument("--gen", nargs="+", metavar="ARG",
                     help="generate: cycle N | two-cycle M N | cactus L1 L2 ...")
    sub.add_argument("--attach", nargs="*", metavar="C:P", default=None,
                     help="cactus attachments, one per cycle after the first "
                          "(default: chain at position 1)")
    sub.add_argument("--g6", metavar="STRING", help="graph6 string")
    sub.add_argument("--format", choices=["edge-list", "graph6", "auto"],
                     default="auto", help="file format (default: sniff)")


def _parse_range(text: str) -> range:
    lo, sep, hi = text.partition("..")
    try:
        if sep:
            return range(int(lo), int(hi) + 1)
        return range(int(lo), int(lo) + 1)
    except ValueError as exc:
        raise CliError(f"bad range {text!r}, expected A or A..B") from exc


def _gen_graph(args) -> Graph:
    spec = args.gen
    family, params = spec[0], spec[1:]
    try:
        nums = [int(x) for x in params]
    except ValueError as exc:
        raise CliError(f"--gen {family} takes integer arguments") from exc
    if family == "cycle":
        if len(nums) != 1:
            raise CliError("--gen cycle takes exactly one length")
        return make_cycle(nums[0])
    if family == "two-cycle":
        if len(nums) != 2:
            raise CliError("--gen two-cycle takes exactly two lengths")
        return make_two_cycle(nums[0], nums[1])
    if family == "cactus":
        if not nums:
            raise CliError("--gen cactus takes at least one cycle length")
        if args.attach is None:
            attachments = tuple((i, 1) for i in range(len(nums) - 1))
        else:
            attachments = []
            for item in args.attach:
                c, sep, pos = item.partition(":")
                if not sep or not c.lstrip("-").isdigit() or not pos.lstrip("-").isdigit():
                    raise CliError(f"bad attachment {item!r}, expected C:P")
                attachments.append((int(c), int(pos)))
            attachments = tuple(attachments)
        return make_cactus(CactusSpec(tuple(nums), attachments))
    raise CliError(f"unknown generator family {family!r}")


def _sniff_format(text: str) -> str:
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        return "edge-list" if line.isdigit() else "graph6"
    return "edge-list"


def load_graph(args) -> Graph:
    if args.gen:
        return _gen_graph(args)
    if args.g6:
        return parse_graph6(args.g6)
    if args.path:
        try:
            with open(args.path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise CliError(f"cannot read {args.path}: {exc}") from exc
        fmt = args.format if args.format != "auto" else _sniff_format(text)
        return parse_graph(text, fmt)
    raise CliError("no graph given: use --gen, --g6, or a file path")


def _threads(args) -> int | None:
    env = os.environ.get("SEMLAB_THREADS")
    if env is not None:
        try:
            return max(1, int(env))
        except ValueError as exc:
            raise CliError(f"bad SEMLAB_THREADS value {env!r}") from exc
    return args.threads


def _load_certificate(path: str) -> SemLabeling:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise CliError(f"parse: certificate {path} is not valid JSON: {exc}") from exc
    return SemLabeling.from_json_dict(data)


# --- commands ---------------------------------------------------------------

def cmd_check(args) -> int:
    g = load_graph(args)
    cert = _load_certificate(args.cert)
    result = verify_sem(g, cert)
    if result:
        print(f"certificate valid: valence {cert.valence}")
        return EXIT_SEM
    print(f"certificate INVALID: {result.reason}")
    return EXIT_NOT_SEM


_EXIT_BY_STATUS = {
    STATUS_SEM: EXIT_SEM,
    STATUS_TRIVIAL_EDGELESS: EXIT_SEM,
    STATUS_NOT_SEM_EXHAUSTED: EXIT_NOT_SEM,
    STATUS_NOT_SEM_OBSTRUCTION: EXIT_NOT_SEM,
    STATUS_UNKNOWN_BUDGET_EXCEEDED: EXIT_UNKNOWN,
}


def cmd_solve(args) -> int:
    g = load_graph(args)
    cfg = SearchConfig(
        use_obstructions=not args.no_obstructions,
        symmetry_reduction=not args.no_symmetry,
        budget=args.budget,
        threads=_threads(args),
    )
    out = search_sem(g, cfg)
    if args.cert_out and out.witness is not None:
        with open(args.cert_out, "w", encoding="utf-8") as fh:
            json.dump(out.witness.to_json_dict(), fh, indent=2)
            fh.write("\n")
    if args.json:
        print(json.dumps(out.to_json_dict(), indent=2))
    else:
        print(f"graph: order {g.order}, size {g.size}, "
              f"degree sequence {degree_sequence(g)}")
        print(f"status: {out.status}")
        if out.status == STATUS_TRIVIAL_EDGELESS:
            print(_EDGELESS_NOTE)
        if out.obstruction:
            print(f"obstruction: {out.obstruction.rule}")
            print(f"  {out.obstruction.justification}")
        if out.witness:
            print(f"valence: {out.witness.valence}")
            print(f"vertex labels: {list(out.witness.vertex_labels)}")
            print(f"edge labels: {[list(t) for t in out.witness.edge_labels]}")
        if out.interval:
            print(f"valence interval: {out.interval.to_json()}")
        print(f"stats: nodes={out.stats.nodes} labelings={out.stats.labelings} "
              f"millis={out.stats.millis}")
    return _EXIT_BY_STATUS[out.status]


def cmd_interval(args) -> int:
    g = load_graph(args)
    if g.size == 0:
        print(_EDGELESS_NOTE)
        return EXIT_SEM
    iv = sem_interval(g)
    if args.json:
        print(json.dumps({"interval": iv.to_json(),
                          "min": str(iv.min_s), "max": str(iv.max_s)}))
    elif iv.empty:
        print(f"interval: empty (no integer between {iv.min_s} and {iv.max_s})")
    else:
        print(f"interval: [{iv.lo}, {iv.hi}]  (exact bounds {iv.min_s} .. {iv.max_s})")
    return EXIT_SEM


def cmd_valences(args) -> int:
    g = load_graph(args)
    if g.size == 0:
        print(_EDGELESS_NOTE)
        return EXIT_SEM
    vs = sem_set(g, budget=args.budget, threads=_threads(args))
    if args.json:
        print(json.dumps({"valence_set": vs.to_json(), "complete": vs.complete}))
    else:
        body = "{" + ", ".join(str(v) for v in vs.values) + "}"
        note = "" if vs.complete else "  (partial: budget exceeded)"
        print(f"valence set: {body}{note}")
    return EXIT_SEM if vs.complete else EXIT_UNKNOWN


def cmd_perfect(args) -> int:
    g = load_graph(args)
    if g.size == 0:
        print(_EDGELESS_NOTE)
        return EXIT_SEM
    verdict = is_perfect_sem(g, budget=args.budget, threads=_threads(args))
    if args.json:
        iv = sem_interval(g)
        vs = sem_set(g, budget=args.budget, threads=_threads(args))
        print(json.dumps({"classification": verdict, "interval": iv.to_json(),
                          "valence_set": vs.to_json()}))
    else:
        print(f"classification: {verdict}")
    return EXIT_SEM


def _sweep_graphs(args):
    """Yield (params_text, graph) rows in deterministic parameter order."""
    if args.family == "two-cycle-grid":
        for m in _parse_range(args.m):
            for n in _parse_range(args.n):
                yield f"m={m};n={n}", make_two_cycle(m, n)
    elif args.family == "three-cycle-series":
        for k in _parse_range(args.k):
            if k < 1 or 4 * k - 3 < 3:
                raise CliError(f"three-cycle-series needs 4k-3 >= 3, got k={k}")
            yield f"k={k}", make_two_cycle(3, 4 * k - 3)
    elif args.family == "degseq-4-2":
        for order in _parse_range(args.order):
            for name, g in degseq_4_2_realizations(order):
                yield f"order={order};graph={name}", g
    else:
        raise CliError(f"unknown sweep family {args.family!r}")


def cmd_sweep(args) -> int:
    threads = _threads(args)
    max_order = args.max_order
    header = ["family", "params", "order", "size", "obstruction", "status",
              "interval_lo", "interval_hi", "valence_set", "nodes"]
    if args.timing:
        header.append("millis")
    lines = [",".join(header)]
    for params, g in _sweep_graphs(args):
        if g.order > max_order:
            raise CliError(
                f"sweep row {params} has order {g.order} > --max-order "
                f"{max_order}; raise the cap to allow it")
        cfg = SearchConfig(budget=args.budget, threads=threads)
        out = search_sem(g, cfg)
        iv = out.interval
        lo = "" if (iv is None or iv.empty) else str(iv.lo)
        hi = "" if (iv is None or iv.empty) else str(iv.hi)
        if out.status in (STATUS_NOT_SEM_EXHAUSTED, STATUS_NOT_SEM_OBSTRUCTION):
            sigma = ""  # proven empty
        elif out.status == STATUS_SEM and g.order <= args.sigma_max_order:
            vs = sem_set(g, budget=args.budget, threads=threads)
            sigma = "|".join(str(v) for v in vs.values) if vs.complete else "skipped"
        else:
            sigma = "skipped"
        row = [args.family, params, str(g.order), str(g.size),
               out.obstruction.rule if out.obstruction else "",
               out.status, lo, hi, sigma, str(out.stats.nodes)]
        if args.timing:
            row.append(str(out.stats.millis))
        lines.append(",".join(row))
    text = "\n".join(lines) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_SEM


def cmd_render(args) -> int:
    g = load_graph(args)
    cert = None
    if args.cert:
        cert = _load_certificate(args.cert)
        result = verify_sem(g, cert)
        if not result:
            print(f"certificate INVALID: {result.reason}", file=sys.stderr)
            return EXIT_NOT_SEM
    lines = ["graph semlab {"]
    if cert:
        lines.append(f'  label="valence {cert.valence}";')
        for v in range(g.order):
            lines.append(f'  {v} [label="v{v}: {cert.vertex_labels[v]}"];')
        for u, v, lab in cert.edge_labels:
            lines.append(f'  {u} -- {v} [label="{lab}"];')
    else:
        for v in range(g.order):
            lines.append(f'  {v} [label="v{v}"];')
        for u, v in g.edges:
            lines.append(f"  {u} -- {v};")
    lines.append("}")
    text = "\n".join(lines) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_SEM


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="semlab",
        description="Decide super edge-magicness of small graphs, with "
                    "machine-checkable certificates.")
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("check", help="verify a labeling certificate")
    _add_graph_args(sub)
    sub.add_argument("--cert", required=True, help="certificate JSON file")
    sub.set_defaults(func=cmd_check)

    sub = subs.add_parser("solve", help="search for a labeling")
    _add_graph_args(sub)
    sub.add_argument("--no-obstructions", action="store_true")
    sub.add_argument("--no-symmetry", action="store_true")
    sub.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                     help="node budget (default 1e9)")
    sub.add_argument("--threads", type=int, default=None,
                     help="worker count (default: all cores; "
                          "SEMLAB_THREADS overrides)")
    sub.add_argument("--json", action="store_true")
    sub.add_argument("--cert-out", metavar="PATH",
                     help="write the witness certificate JSON here")
    sub.set_defaults(func=cmd_solve)

    sub = subs.add_parser("interval", help="valence interval")
    _add_graph_args(sub)
    sub.add_argument("--json", action="store_true")
    sub.set_defaults(func=cmd_interval)

    sub = subs.add_parser("valences", help="realized valence set")
    _add_graph_args(sub)
    sub.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    sub.add_argument("--threads", type=int, default=None)
    sub.add_argument("--json", action="store_true")
    sub.set_defaults(func=cmd_valences)

    sub = subs.add_parser("perfect", help="perfect super edge-magic test")
    _add_graph_args(sub)
    sub.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    sub.add_argument("--threads", type=int, default=None)
    sub.add_argument("--json", action="store_true")
    sub.set_defaults(func=cmd_perfect)

    sub = subs.add_parser("sweep", help="tabulate a family as CSV")
    sub.add_argument("family",
                     choices=["two-cycle-grid", "three-cycle-series", "degseq-4-2"])
    sub.add_argument("--m", default="3..5", help="range A..B (two-cycle-grid)")
    sub.add_argument("--n", default="3..5", help="range A..B (two-cycle-grid)")
    sub.add_argument("--k", default="3..3",
                     help="range A..B (three-cycle-series; k=4 is an "
                          "order-15 search, expect minutes)")
    sub.add_argument("--order", default="6..9", help="range A..B (degseq-4-2)")
    sub.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    sub.add_argument("--threads", type=int, default=None)
    sub.add_argument("--max-order", type=int, default=16,
                     help="refuse rows larger than this (default 16)")
    sub.add_argument("--sigma-max-order", type=int, default=10,
                     help="skip valence-set enumeration above this order")
    sub.add_argument("--timing", action="store_true",
                     help="append a wall-clock column (breaks byte-for-byte "
                          "reproducibility)")
    sub.add_argument("--output", metavar="PATH", help="CSV file (default stdout)")
    sub.set_defaults(func=cmd_sweep)

    sub = subs.add_parser("render", help="emit DOT")
    _add_graph_args(sub)
    sub.add_argument("--cert", help="certificate JSON to annotate with")
    sub.add_argument("--output", metavar="PATH", help="DOT file (default stdout)")
    sub.set_defaults(func=cmd_render)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CliError, GraphError, LabelingError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
