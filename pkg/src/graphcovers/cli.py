"""Command-line front end.

All numeric results are printed as machine-parseable `key: value` lines
before any prose.  Exit codes: 0 success, 1 infeasible result or invalid
certificate, 2 invalid input, 3 budget exhausted.
"""

from __future__ import annotations

import argparse
import random
import sys
from math import ceil
from pathlib import Path

from .graphs import (Graph, generate, line_graph, FAMILIES,
                     graph_to_text, graph_from_text)
from .templates import CLASS_TAGS, recognize, class_properties
from .covers import (verify_cover, cover_to_text, cover_from_text,
                     CoverCertificate)
from .orientations import (orient_bounded, pseudoarboricity, arboricity,
                           degeneracy, local_star_arboricity,
                           orientation_to_text)
from .solvers import (Budget, compute_number, compute_packing,
                      decide_constrained_folded)
from .constructions import (flac_cover, slug_cover, krausz_cover,
                            lift_to_simple, validate_sequence,
                            sequence_from_text, sequence_to_text,
                            representation_from_text, contact_star_forests,
                            gadget, fca_core, realize)

EXIT_OK = 0
EXIT_INFEASIBLE = 1
EXIT_BAD_INPUT = 2
EXIT_BUDGET = 3


def _read_graph(path: str) -> Graph:
    return graph_from_text(Path(path).read_text())


def _budget(args) -> Budget:
    return Budget(max_nodes=args.max_nodes, max_seconds=args.max_seconds)


def _write(path: str | None, text: str):
    if path:
        Path(path).write_text(text)


def cmd_gen(args) -> int:
    if args.family in FAMILIES:
        g = generate(args.family, args.params)
        seq_text = None
    else:
        if len(args.params) != 1:
            raise ValueError("gadgets take exactly one parameter k")
        res = gadget(args.family, args.params[0])
        g = res.graph
        seq_text = sequence_to_text(res.sequence) if res.sequence else None
        for note in res.notes:
            print(f"# note: {note}")
    print(f"vertices: {g.n}")
    print(f"edges: {g.m}")
    out = graph_to_text(g)
    if args.output:
        _write(args.output, out)
    else:
        sys.stdout.write(out)
    if seq_text and args.sequence_output:
        _write(args.sequence_output, seq_text)
    return EXIT_OK


def cmd_recognize(args) -> int:
    g = _read_graph(args.graph)
    result = recognize(args.cls, g)
    props = class_properties(args.cls)
    print(f"member: {str(result).lower()}")
    print(f"closed_under_subgraphs: {str(props.closed_under_subgraphs).lower()}")
    print(f"closed_under_merging: "
          f"{str(props.closed_under_merging_within_components).lower()}")
    return EXIT_OK


def cmd_solve(args) -> int:
    g = _read_graph(args.graph)
    res = compute_number(g, args.cls, args.mode, _budget(args))
    print(f"status: {res.status}")
    if res.status == "infinite":
        print("value: infinite")
        return EXIT_OK
    if res.status == "unknown":
        print("value: unknown")
        return EXIT_BUDGET
    print(f"value: {res.value}")
    print(f"nodes: {res.nodes_explored}")
    if res.certificate is not None and args.certificate:
        _write(args.certificate, cover_to_text(res.certificate))
    return EXIT_OK


def cmd_pack(args) -> int:
    g = _read_graph(args.graph)
    res = compute_packing(g, args.cls, args.mode, _budget(args))
    print(f"status: {res.status}")
    if res.status == "unknown":
        print("value: unknown")
        return EXIT_BUDGET
    print(f"value: {res.value}")
    if res.certificate is not None and args.certificate:
        _write(args.certificate, cover_to_text(res.certificate))
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _read_graph(args.graph)
    cert = cover_from_text(Path(args.certificate).read_text())
    rep = verify_cover(g, cert, args.cls, args.mode)
    print(f"valid: {str(rep.valid).lower()}")
    print(f"size: {rep.size}")
    print(f"max_preimage: {rep.max_preimage}")
    print(f"injective: {str(rep.injective).lower()}")
    print(f"covered_edges: {rep.covered_edge_count}")
    for v in rep.violations:
        print(f"violation: {v}")
    return EXIT_OK if rep.valid else EXIT_INFEASIBLE


def cmd_orient(args) -> int:
    g = _read_graph(args.graph)
    alpha = [args.alpha] * g.n
    orient, witness = orient_bounded(g, alpha)
    if orient is None:
        print("status: infeasible")
        print(f"witness_vertices: {' '.join(map(str, witness.vertices))}")
        print(f"witness_edges: {witness.induced_edge_count}")
        return EXIT_INFEASIBLE
    print("status: feasible")
    print(f"max_out_degree: {orient.max_out_degree(g.n)}")
    if args.output:
        _write(args.output, orientation_to_text(orient))
    return EXIT_OK


def cmd_arbor(args) -> int:
    g = _read_graph(args.graph)
    p, orient, pw = pseudoarboricity(g)
    print(f"pseudoarboricity: {p}")
    print(f"pseudo_witness: {' '.join(map(str, pw.vertices))}")
    if g.n <= 20:
        a, aw = arboricity(g)
        print(f"arboricity: {a}")
        print(f"arboricity_witness: {' '.join(map(str, aw.vertices))}")
    k, order = degeneracy(g)
    print(f"degeneracy: {k}")
    if args.output:
        _write(args.output, orientation_to_text(orient))
    return EXIT_OK


def cmd_lsa(args) -> int:
    g = _read_graph(args.graph)
    value, cert = local_star_arboricity(g)
    print(f"local_star_arboricity: {value}")
    rep = verify_cover(g, cert, "star_forest", "local")
    print(f"certificate_valid: {str(rep.valid).lower()}")
    if args.certificate:
        _write(args.certificate, cover_to_text(cert))
    return EXIT_OK if rep.valid else EXIT_INFEASIBLE


def cmd_flac(args) -> int:
    g = _read_graph(args.graph)
    cert = flac_cover(g)
    rep = verify_cover(g, cert, "linear_forest", "folded")
    bound = ceil((g.max_degree() + 1) / 2)
    print(f"max_preimage: {rep.max_preimage}")
    print(f"bound: {bound}")
    print(f"valid: {str(rep.valid).lower()}")
    if args.certificate:
        _write(args.certificate, cover_to_text(cert))
    return EXIT_OK if rep.valid and rep.max_preimage <= bound else EXIT_INFEASIBLE


def cmd_slug(args) -> int:
    g = _read_graph(args.graph)
    seq = sequence_from_text(Path(args.sequence).read_text())
    cert = slug_cover(g, seq)
    rep = verify_cover(g, cert, "interval", "local")
    print(f"max_preimage: {rep.max_preimage}")
    print(f"bound: {max(3, seq.width)}")
    print(f"valid: {str(rep.valid).lower()}")
    if args.certificate:
        _write(args.certificate, cover_to_text(cert))
    ok = rep.valid and rep.max_preimage <= max(3, seq.width)
    return EXIT_OK if ok else EXIT_INFEASIBLE


def cmd_lift(args) -> int:
    seq = sequence_from_text(Path(args.sequence).read_text())
    lifted = lift_to_simple(seq)
    viol, kept, _ = validate_sequence(lifted, require_simple=True)
    print(f"width: {lifted.width}")
    print(f"simple: {str(not viol).lower()}")
    if args.output:
        _write(args.output, sequence_to_text(lifted))
    return EXIT_OK if not viol else EXIT_INFEASIBLE


def cmd_validate_seq(args) -> int:
    seq = sequence_from_text(Path(args.sequence).read_text())
    viol, kept, full = validate_sequence(seq, require_simple=args.simple)
    print(f"ok: {str(not viol).lower()}")
    if kept is not None:
        print(f"vertices: {kept.n}")
        print(f"kept_edges: {kept.m}")
        print(f"full_edges: {full.m}")
    for v in viol:
        print(f"violation: {v}")
    return EXIT_OK if not viol else EXIT_INFEASIBLE


def cmd_krausz(args) -> int:
    h = _read_graph(args.graph)
    lg, cert = krausz_cover(h)
    rep = verify_cover(lg, cert, "clique_collection", "local")
    print(f"line_graph_vertices: {lg.n}")
    print(f"line_graph_edges: {lg.m}")
    print(f"max_preimage: {rep.max_preimage}")
    print(f"valid: {str(rep.valid).lower()}")
    if args.line_graph_output:
        _write(args.line_graph_output, graph_to_text(lg))
    if args.certificate:
        _write(args.certificate, cover_to_text(cert))
    return EXIT_OK if rep.valid and rep.max_preimage <= 2 else EXIT_INFEASIBLE


def cmd_contacts(args) -> int:
    g = _read_graph(args.graph)
    rep_data = representation_from_text(Path(args.representation).read_text())
    try:
        cert = contact_star_forests(g, rep_data)
    except ValueError as e:
        print(f"valid: false")
        print(f"error: {e}")
        return EXIT_BAD_INPUT
    rep = verify_cover(g, cert, "star_forest", "global")
    print(f"size: {rep.size}")
    print(f"valid: {str(rep.valid).lower()}")
    if args.certificate:
        _write(args.certificate, cover_to_text(cert))
    return EXIT_OK if rep.valid and rep.size <= 4 else EXIT_INFEASIBLE


def cmd_report(args) -> int:
    from .report import run_report
    failures = run_report(seed=args.seed, budget=_budget(args))
    return EXIT_OK if failures == 0 else EXIT_INFEASIBLE


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="graphcovers",
        description="Exact covering-number toolkit with certificates.")
    parser.add_argument("--max-nodes", type=int, default=50_000_000)
    parser.add_argument("--max-seconds", type=float, default=300.0)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a named family or gadget")
    p.add_argument("family",
                   help=f"one of {', '.join(FAMILIES)} or a gadget "
                        "(t_deg, i_tw, t_stw, fca)")
    p.add_argument("params", type=int, nargs="*")
    p.add_argument("--output", "-o")
    p.add_argument("--sequence-output")
    p.set_defaults(fn=cmd_gen)

    p = sub.add_parser("recognize", help="class membership of a graph")
    p.add_argument("cls", choices=CLASS_TAGS)
    p.add_argument("graph")
    p.set_defaults(fn=cmd_recognize)

    p = sub.add_parser("solve", help="compute a covering number")
    p.add_argument("graph")
    p.add_argument("--class", dest="cls", required=True, choices=CLASS_TAGS)
    p.add_argument("--mode", required=True,
                   choices=("global", "local", "folded"))
    p.add_argument("--certificate", "-c")
    p.set_defaults(fn=cmd_solve)

    p = sub.add_parser("pack", help="compute a packing number")
    p.add_argument("graph")
    p.add_argument("--class", dest="cls", required=True, choices=CLASS_TAGS)
    p.add_argument("--mode", required=True,
                   choices=("global", "local", "folded"))
    p.add_argument("--certificate", "-c")
    p.set_defaults(fn=cmd_pack)

    p = sub.add_parser("verify", help="verify a cover certificate")
    p.add_argument("graph")
    p.add_argument("certificate")
    p.add_argument("--class", dest="cls", required=True, choices=CLASS_TAGS)
    p.add_argument("--mode", required=True,
                   choices=("global", "local", "folded"))
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("orient", help="degree-constrained orientation")
    p.add_argument("graph")
    p.add_argument("--alpha", type=int, required=True)
    p.add_argument("--output", "-o")
    p.set_defaults(fn=cmd_orient)

    p = sub.add_parser("arbor", help="density parameters")
    p.add_argument("graph")
    p.add_argument("--output", "-o")
    p.set_defaults(fn=cmd_arbor)

    p = sub.add_parser("lsa", help="local star arboricity with certificate")
    p.add_argument("graph")
    p.add_argument("--certificate", "-c")
    p.set_defaults(fn=cmd_lsa)

    p = sub.add_parser("flac", help="folded linear-forest cover")
    p.add_argument("graph")
    p.add_argument("--certificate", "-c")
    p.set_defaults(fn=cmd_flac)

    p = sub.add_parser("slug", help="interval cover along a k-tree sequence")
    p.add_argument("graph")
    p.add_argument("sequence")
    p.add_argument("--certificate", "-c")
    p.set_defaults(fn=cmd_slug)

    p = sub.add_parser("lift", help="lift a sequence to a simple one")
    p.add_argument("sequence")
    p.add_argument("--output", "-o")
    p.set_defaults(fn=cmd_lift)

    p = sub.add_parser("validate-seq", help="validate a construction sequence")
    p.add_argument("sequence")
    p.add_argument("--simple", action="store_true")
    p.set_defaults(fn=cmd_validate_seq)

    p = sub.add_parser("krausz", help="clique cover of a line graph")
    p.add_argument("graph", help="the preimage graph H; covers L(H)")
    p.add_argument("--line-graph-output")
    p.add_argument("--certificate", "-c")
    p.set_defaults(fn=cmd_krausz)

    p = sub.add_parser("contacts", help="star forests from a contact representation")
    p.add_argument("graph")
    p.add_argument("representation")
    p.add_argument("--certificate", "-c")
    p.set_defaults(fn=cmd_contacts)

    p = sub.add_parser("report", help="desk-scale verification report")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=cmd_report)

    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
