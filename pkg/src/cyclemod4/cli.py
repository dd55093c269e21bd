"""Command-line frontend.  Exit status: 0 ok, 1 domain error, 2 usage error."""
from __future__ import annotations

import argparse
import sys

from . import atlas, checks
from .calculus import (FAMILIES, PARITY_NAMES, SHAPES, CaseConfig, cc_table, divide_possibilities,
                       explore, feasible_configs, parity_letter)
from .cycles import classify, epsilon_tag, spectrum
from .decomposition import cycle_decompose, graceful_candidate, necessary_parity, size_congruence, xi
from .errors import DomainError
from .graceful import DEFAULT_BUDGET, format_labeling, parse_labeling, search_graceful, verify_labeling
from .graph_core import emit_graph6, read_graph
from .report import Section, render


def _read_text(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path, encoding="ascii") as fh:
        return fh.read()


def _graph(args):
    return read_graph(_read_text(args.input))


def _families(args) -> list[str]:
    return [args.family] if args.family else list(FAMILIES)


def _shapes(args) -> list[str]:
    return [args.shape.upper()] if args.shape else list(SHAPES)


def _parse_row(text: str, shape: str) -> CaseConfig:
    """``"0,1,3;e"`` -> CaseConfig; parity letters e (even) and d (odd)."""
    try:
        types, pars = text.split(";")
        ts = tuple(int(x) for x in types.split(","))
        ps = tuple({"e": 0, "d": 1}[ch] for ch in pars.strip())
    except (ValueError, KeyError):
        raise ValueError(f"malformed row {text!r}; expected e.g. 0,1,3;e") from None
    if len(ts) != 3:
        raise ValueError(f"row {text!r} needs three types")
    return CaseConfig(shape, ts, ps)


def _rows(args, shape: str, fam: str) -> list[CaseConfig]:
    if args.row:
        return [_parse_row(args.row, shape)]
    return feasible_configs(shape, fam)


# ---------------------------------------------------------------------------
# verbs


def cmd_classify(args) -> str:
    g = _graph(args)
    s = spectrum(g)
    return f"{epsilon_tag(s)}\tlengths={','.join(map(str, s.lengths))}\n"


def cmd_spectrum(args) -> str:
    g = _graph(args)
    s = spectrum(g)
    sec = Section("spectrum", ("length", "type"))
    for n in s.lengths:
        sec.add(n, n % 4)
    summary = Section("summary", ("p", "q", "tag", "types", "truncated"))
    summary.add(g.p, g.q, str(epsilon_tag(s)), sorted(s.types_present), s.truncated)
    return render([sec, summary])


def cmd_decompose(args) -> str:
    g = _graph(args)
    d = cycle_decompose(g)
    cyc = Section("cycles", ("index", "length", "type", "nodes"))
    for i, c in enumerate(d.cycles):
        cyc.add(i, c.length, c.type, c.nodes)
    x = xi(d)
    cong = size_congruence(g, d)
    summary = Section("summary", ("q", "xi0", "xi1", "xi2", "xi3", "q_mod4", "xi_sum_mod4", "agrees", "candidate"))
    summary.add(g.q, *x, cong.q_mod4, cong.xi_sum_mod4, cong.agrees, graceful_candidate(g))
    out = [cyc, summary]
    tag = classify(g)
    if tag.kind == "triple" or tag.kind == "quad":
        fam = "0123" if tag.kind == "quad" else tag.family
        pc = necessary_parity(fam, x)
        par = Section("parity", ("family", "weighted_mod4", "applicable", "condition", "holds"))
        par.add(pc.family, pc.weighted_mod4, pc.applicable, pc.condition, pc.holds)
        out.append(par)
    return render(out)


def cmd_graceful(args) -> str:
    g = _graph(args)
    if args.action == "verify":
        if not args.labels:
            raise ValueError("graceful verify needs --labels FILE")
        labels = parse_labeling(_read_text(args.labels))
        return ("graceful" if verify_labeling(g, labels) else "not graceful") + "\n"
    res = search_graceful(g, args.budget)
    head = f"status={res.status}\tnodes_expanded={res.nodes_expanded}\n"
    return head + (format_labeling(res.labels) if res.labels else "")


def cmd_atlas(args) -> str:
    p_max = args.max_order
    if args.action == "enumerate":
        return "".join(emit_graph6(g) + "\n" for p in range(3, p_max + 1) for g in atlas.enumerate_euler(p))
    if args.action == "census":
        sec = Section("census", ("p", "tag", "count"), sort_key=lambda r: (r[0], r[1]))
        for row in atlas.census(p_max):
            for tag, n in row.counts.items():
                sec.add(row.p, tag, n)
        return render([sec])
    if args.action == "min-order":
        sec = Section("min_order", ("family", "min_order", "p", "q", "graph6"))
        for f in _families(args):
            g = atlas.smallest_member(f, p_max)
            sec.add(f, g.p if g else "none", g.p if g else "", g.q if g else "", emit_graph6(g) if g else "")
        return render([sec])
    if args.action == "sample":
        sec = Section("sample", ("trial", "base", "attachments", "p", "q", "status", "nodes_expanded"))
        for f in _families(args):
            for r in atlas.eulerforest_graceful_sample(f, args.trials, args.seed, min(p_max, 8), args.budget):
                sec.add(r.trial, r.base, ";".join(f"{u}-{v}" for u, v in r.attachments),
                        r.p, r.q, r.status, r.expanded)
        return render([sec])
    deg = Section("degree_two", ("family", "threshold", "p_max", "checked", "status", "counterexamples"))
    reg = Section("regular", ("family", "p_max", "graph6"))
    for f in _families(args):
        a = atlas.degree2_audit(f, p_max)
        deg.add(f, atlas.DEGREE2_THRESHOLD[f], p_max, a.checked, a.status, a.counterexamples)
        for g in atlas.regular_audit(f, p_max):
            reg.add(f, p_max, emit_graph6(g))
    return render([deg, reg])


def cmd_cases(args) -> str:
    if args.action == "table":
        if not args.shape:
            out = []
            for f in _families(args):
                sec = Section(f"cc {f}", ("t1", "t2", "even", "odd", "even_escapes", "odd_escapes"))
                for r in cc_table(f):
                    sec.add(r.t1, r.t2, r.even, r.odd, r.even_escapes, r.odd_escapes)
                out.append(sec)
            return render(out)
        shape = args.shape.upper()
        out = []
        text = ""
        for f in _families(args):
            pars = PARITY_NAMES[shape]
            derived = {"A": ("ij", "ik", "jk"), "B": ("ij", "ik", "jk"), "C": ("ij", "jk", "ijk"),
                       "E": ("ij", "jk", "ijk"), "F": ("ij", "jk", "ik", "ijk")}[shape]
            sec = Section(f"{shape} {f}", ("i", "j", "k", *pars, *(f"cc_{d}" for d in derived)))
            for c in feasible_configs(shape, f, args.repeated):
                sec.add(*c.types, *(parity_letter(p) for p in c.parities), *c.derived)
            out.append(sec)
        text = render(out)
        if all(not s.rows for s in out):
            text += "# no feasible configuration\n"
        return text
    if args.action == "divide":
        if args.type is None:
            raise ValueError("cases divide needs --type T")
        sec = Section("divide", ("family", "type", "t1", "t2", "parity"))
        for f in _families(args):
            for a, b, p in divide_possibilities(args.type, f):
                sec.add(f, args.type, a, b, parity_letter(p))
        return render([sec])
    if args.action == "explore":
        sec = Section("tree", ("family", "row", "node", "parent", "depth", "target", "split", "move",
                               "new_cycles", "verdict", "reason"))
        for f in _families(args):
            for shape in _shapes(args):
                for c in _rows(args, shape, f):
                    tree = explore(c, f, args.depth, args.divide)
                    for n in tree.nodes:
                        sec.add(f, f"{shape}:{c.label()}", n.index, n.parent, n.depth, n.target, n.split,
                                n.move_label(), n.new_cycles, n.verdict,
                                f"{n.reason.kind}: {n.reason.detail}" if n.reason else "")
        return render([sec])
    sec = Section("witness", ("family", "row", "graph6", "p", "q", "cycles", "combined_lengths", "verified"))
    for f in _families(args):
        for shape in _shapes(args):
            for c in _rows(args, shape, f):
                w = atlas.witness_search(c, f, args.max_order)
                if w is None:
                    sec.add(f, f"{shape}:{c.label()}", "none", "", "", "", "", "")
                else:
                    cyc = " ".join("-".join(map(str, x.nodes)) for x in w.cycles)
                    sec.add(f, f"{shape}:{c.label()}", emit_graph6(w.graph), w.graph.p, w.graph.q, cyc,
                            w.combined_lengths, atlas.verify_witness(c, w))
    return render([sec])


def cmd_verify(args) -> tuple[str, int]:
    results = checks.run_all()
    sec = Section("checks", ("status", "criterion", "name", "detail"))
    for r in results:
        sec.add("PASS" if r.passed else "FAIL", r.number, r.name, r.detail)
    err = Section("reprint_errata", ("family", "pair", "parity", "printed", "computed"))
    for row in checks.reprint_errata():
        err.add(*row)
    div = Section("feasibility_divergences", ("family", "shape", "side", "row"))
    for row in checks.feasibility_divergences():
        div.add(*row)
    return render([sec, err, div]), 0 if all(r.passed for r in results) else 1


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--in", dest="input", metavar="FILE", help="graph6 or edge list (default stdin)")
    common.add_argument("--family", choices=FAMILIES)
    common.add_argument("--shape", choices=[s.lower() for s in SHAPES] + list(SHAPES))
    common.add_argument("--max-order", type=int, default=9)
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    common.add_argument("--depth", type=int, default=1)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out", metavar="FILE")

    ap = argparse.ArgumentParser(prog="cyclemod4", description="Cycle types mod 4 in Euler graphs")
    sub = ap.add_subparsers(dest="verb", required=True)
    sub.add_parser("classify", parents=[common])
    sub.add_parser("spectrum", parents=[common])
    sub.add_parser("decompose", parents=[common])
    g = sub.add_parser("graceful", parents=[common])
    g.add_argument("action", choices=["search", "verify"])
    g.add_argument("--labels", metavar="FILE", help="lines v:label")
    a = sub.add_parser("atlas", parents=[common])
    a.add_argument("action", choices=["enumerate", "census", "min-order", "audit", "sample"])
    a.add_argument("--trials", type=int, default=10)
    c = sub.add_parser("cases", parents=[common])
    c.add_argument("action", choices=["table", "divide", "explore", "witness"])
    c.add_argument("--type", type=int, choices=range(4))
    c.add_argument("--row", help='types and parities, e.g. "0,1,3;e" (d = odd)')
    c.add_argument("--divide", type=int, choices=range(3), help="restrict level one to cycle i, j or k")
    c.add_argument("--repeated", action="store_true", help="allow a type to occur twice")
    v = sub.add_parser("verify", parents=[common])
    v.add_argument("target", choices=["paper"])
    return ap


def run(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    status = 0
    try:
        if args.verb == "verify":
            text, status = cmd_verify(args)
        else:
            text = {"classify": cmd_classify, "spectrum": cmd_spectrum, "decompose": cmd_decompose,
                    "graceful": cmd_graceful, "atlas": cmd_atlas, "cases": cmd_cases}[args.verb](args)
    except (DomainError, ValueError, OSError) as exc:
        msg = str(exc).replace("\n", " ")
        print(f"error\t{type(exc).__name__}\t{msg}", file=sys.stderr)
        return 1
    if args.out:
        with open(args.out, "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
