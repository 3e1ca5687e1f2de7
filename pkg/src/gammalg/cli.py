"""Command-line front end: ``gammalg <subcommand> ...``.

Exit codes: 0 decided or succeeded, 2 undecided or nothing found within
bounds, 1 on errors and failed checks.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import specio
from .algpres import PresentationError, homogeneity_check
from .bergman import bergman_presentation, bergman_to_hypergraph, hypergraph_to_bergman
from .field import Field
from .gamma_monoid import Budget, MonoidError, decide
from .hyperlpa import GraphError, hyper_vgr_presentation, localization_chain_check, talented_presentation
from .linalg_ss import IdempotentError
from .smash import IdemData, nesting_holds, smash_comparison_check, unit_idempotent
from .vmonoid import HomBounds, RealizationError, grading_structure_check, hom_search, realize

OK, ERROR, UNDECIDED = 0, 1, 2


class CliError(Exception):
    pass


def _load(path: str, kind: str) -> specio.SpecDocument:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise CliError("cannot read %s: %s" % (path, exc.strerror)) from None
    try:
        doc = specio.parse(text)
    except specio.ParseError as exc:
        raise CliError("%s: %s" % (path, exc)) from None
    if doc.kind != kind:
        raise CliError("%s: expected a %s document, found %s" % (path, kind, doc.kind))
    return doc


def _budget(args) -> Budget:
    return Budget(args.budget_len, args.budget_states, args.shift_window)


def _decision(d) -> dict:
    return d.as_dict()


# ---------------------------------------------------------------- subcommands


def cmd_decide(args):
    pres = _load(args.monoid, "monoid").payload
    try:
        a = specio.parse_word(args.w1, pres)
        b = specio.parse_word(args.w2, pres)
    except specio.ParseError as exc:
        raise CliError("word: %s" % exc) from None
    d = decide(pres, a, b, _budget(args), args.depth)
    text = "%s  (engine %s, %d states%s)" % (d.verdict, d.engine, d.states, ", " + d.note if d.note else "")
    return (UNDECIDED if d.is_unknown else OK), {"decision": _decision(d)}, text


def cmd_talented(args):
    E = _load(args.graph, "graph").payload
    doc = specio.dump(specio.monoid_doc(talented_presentation(E), "T_" + E.name))
    return OK, {"document": doc}, doc.rstrip("\n")


def cmd_vmon(args):
    H, w = _load(args.hypergraph, "hypergraph").payload
    doc = specio.dump(specio.monoid_doc(hyper_vgr_presentation(H, w), "V_" + H.name))
    return OK, {"document": doc}, doc.rstrip("\n")


def cmd_realize(args):
    M = _load(args.monoid, "monoid").payload
    rep = realize(M, args.field)
    doc = specio.dump(specio.hypergraph_doc(rep.hypergraph, rep.weights, "H"))
    status = "verified" if rep.verified else "NOT verified"
    lines = [doc.rstrip("\n"), "# hyper V-monoid presentation %s against the input" % status] + \
        ["# " + n for n in rep.notes]
    return (OK if rep.verified else ERROR), {"document": doc, "verified": rep.verified, "notes": rep.notes}, \
        "\n".join(lines)


def cmd_berg(args):
    doc = _load(args.bergman, "bergman")
    p = bergman_presentation(doc.payload, args.level)
    out = specio.format_algebra(p, "B%d_%s" % (args.level, doc.name))
    return OK, {"presentation": out, "homogeneity_violations": homogeneity_check(p)}, out.rstrip("\n")


def cmd_to_hypergraph(args):
    doc = _load(args.bergman, "bergman")
    H, w, _ = bergman_to_hypergraph(doc.payload)
    out = specio.dump(specio.hypergraph_doc(H, w, doc.name))
    return OK, {"document": out}, out.rstrip("\n")


def cmd_to_bergman(args):
    doc = _load(args.hypergraph, "hypergraph")
    H, w = doc.payload
    out = specio.dump(specio.bergman_doc(hypergraph_to_bergman(H, w, args.field), doc.name))
    return OK, {"document": out}, out.rstrip("\n")


def cmd_smash(args):
    data = _load(args.bergman, "bergman").payload
    try:
        A = specio.parse_window(args.window, data.group)
    except specio.ParseError as exc:
        raise CliError("window: %s" % exc) from None
    if args.idempotent:
        data = IdemData(data.ring, data.group, tuple((p.label, p.e) for p in data.pairs))
    rep = smash_comparison_check(data, A, args.depth_smash)
    obligations = [{"relation": repr(r), "status": st, "trace_ok": ok} for r, st, ok in rep.obligations]
    report = {
        "T": specio.format_algebra(rep.T, "T_A"),
        "B": specio.format_algebra(rep.B, "B_A"),
        "obligations": obligations,
        "rename_equal": rep.rename_ok,
        "unit_idempotent": unit_idempotent(rep.T),
        "passed": rep.passed,
    }
    if len(A) > 1:
        report["nesting"] = nesting_holds(data, A[:1], A)
    proved = sum(o["status"] == "Proved" for o in obligations)
    lines = [report["T"], report["B"],
             "obligations proved: %d/%d" % (proved, len(obligations)),
             "rename-equal: %s" % rep.rename_ok,
             "unit idempotent: %s" % report["unit_idempotent"]]
    if "nesting" in report:
        lines.append("nesting T_{%s} in T_A: %s" % (args.window.split(",")[0], report["nesting"]))
    good = rep.passed and report.get("nesting", True)
    return (OK if good else ERROR), report, "\n".join(lines)


def cmd_chain_check(args):
    E = _load(args.graph, "graph").payload
    rep = localization_chain_check(E, args.field)
    checks = [{"check": n, "passed": ok, "detail": det} for n, ok, det in rep.checks]
    lines = ["%s  %s%s" % ("PASS" if ok else "FAIL", n, "  (" + det + ")" if det else "") for n, ok, det in rep.checks]
    return (OK if rep.passed else ERROR), {"checks": checks, "passed": rep.passed}, "\n".join(lines)


def cmd_grading(args):
    H, w = _load(args.hypergraph, "hypergraph").payload
    res = grading_structure_check(H, w, _budget(args), args.depth)
    s, c = res["strongly_graded"], res["crossed_product"]
    report = {"strongly_graded": _decision(s), "crossed_product": _decision(c)}
    text = "strongly graded: %s\ncrossed product: %s" % (s.verdict, c.verdict)
    return (UNDECIDED if s.is_unknown or c.is_unknown else OK), report, text


def cmd_hom_search(args):
    E = _load(args.source, "graph").payload
    F = _load(args.target, "graph").payload
    bounds = HomBounds(args.max_coeff, args.shift_radius, args.max_support)
    res = hom_search(E, F, bounds, args.pointed, args.depth)
    report = {"found": res.found, "assignments_checked": res.assignments_checked, "unknown": res.unknown,
              "candidates_per_vertex": res.candidates_per_vertex}
    if not res.found:
        text = "none within bounds (%d assignments checked, %d undecided)" % (res.assignments_checked, res.unknown)
        return UNDECIDED, report, text
    cert = res.certificate
    report["assignment"] = {v: repr(w) for v, w in sorted(cert.assignment.items())}
    report["transcript"] = [{"relation": lab, "lhs": repr(a), "rhs": repr(b), "verdict": d.verdict}
                            for lab, a, b, d in cert.transcript]
    lines = ["found after %d assignments" % res.assignments_checked]
    lines += ["  %s -> %s" % (v, w) for v, w in report["assignment"].items()]
    lines += ["  %s: %s = %s  %s" % (t["relation"], t["lhs"], t["rhs"], t["verdict"]) for t in report["transcript"]]
    return OK, report, "\n".join(lines)


# ---------------------------------------------------------------- wiring


def _field(text):
    try:
        return Field.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    d = Budget()
    common.add_argument("--budget-states", type=int, default=d.max_states)
    common.add_argument("--budget-len", type=int, default=d.max_len)
    common.add_argument("--shift-window", type=int, default=d.shift_window)
    common.add_argument("--depth", type=int, default=16)
    common.add_argument("--field", type=_field, default=Field())
    common.add_argument("--format", choices=("text", "json"), default="text")

    ap = argparse.ArgumentParser(prog="gammalg", description="Graded monoids, Bergman algebras and hypergraph LPAs.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=fn)
        return p

    p = add("decide", cmd_decide, "decide equality of two words in a presented monoid")
    p.add_argument("monoid")
    p.add_argument("w1")
    p.add_argument("w2")
    add("talented", cmd_talented, "talented monoid presentation of a graph").add_argument("graph")
    add("vmon", cmd_vmon, "graded V-monoid presentation of a weighted hypergraph").add_argument("hypergraph")
    add("realize", cmd_realize, "weighted hypergraph realizing a monoid presentation").add_argument("monoid")
    p = add("berg", cmd_berg, "Bergman algebra presentation")
    p.add_argument("bergman")
    p.add_argument("--level", type=int, choices=(1, 2, 3, 4), default=4)
    add("to-hypergraph", cmd_to_hypergraph, "Bergman data to weighted hypergraph").add_argument("bergman")
    add("to-bergman", cmd_to_bergman, "weighted hypergraph to Bergman data").add_argument("hypergraph")
    p = add("smash", cmd_smash, "finite smash pieces T_A and B_A and their comparison")
    p.add_argument("bergman")
    p.add_argument("--window", required=True)
    p.add_argument("--idempotent", action="store_true", help="use the e idempotents of the pairs only")
    p.add_argument("--proof-depth", dest="depth_smash", type=int, default=2)
    add("chain-check", cmd_chain_check, "localization chain for a graph").add_argument("graph")
    add("grading", cmd_grading, "strongly graded / crossed product report").add_argument("hypergraph")
    p = add("hom-search", cmd_hom_search, "bounded search for talented monoid homomorphisms")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("--max-coeff", type=int, default=2)
    p.add_argument("--shift-radius", type=int, default=1)
    p.add_argument("--max-support", type=int, default=2)
    p.add_argument("--pointed", action="store_true")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        code, report, text = args.func(args)
    except CliError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return ERROR
    except (RealizationError, MonoidError, PresentationError, GraphError, IdempotentError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return ERROR
    if args.format == "json":
        report = dict(report, command=args.command, exit_code=code)
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
