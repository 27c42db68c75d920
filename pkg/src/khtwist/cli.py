"""Command-line interface.

Subcommands: bracket, homology, graphs, adequacy, twist, skein, faces,
verify.  Exit codes: 0 success / all pass, 1 verification failure, 2 input
error, 3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from importlib import resources

from .adequacy import check_adequacy
from .diagram import Diagram, faces, is_alternating, is_reduced, parse_corpus, parse_pd, twist_classes
from .errors import CapExceeded, KhtwistError, MalformedRecord, NotAKnot, PreconditionViolated
from .homology import (
    bracket_from_homology,
    bracket_state_sum,
    homology_table,
    table_and_bracket_json,
    torsion_table,
)
from .skein import check_lemma, check_les_identities, check_ses, skein_triple
from .states import build_complex
from .tait import psi_per_component, reduce_graph, tait_graphs
from .verify import DEFAULT_HOMOLOGY_CAP, DEFAULT_STATESUM_CAP, run_corpus, verify_theorem


@dataclass
class Config:
    """Resolved invocation: input source, caps, and output format."""

    command: str
    pd_text: str | None
    file_path: str | None
    as_json: bool
    json_lines: bool
    homology_cap: int
    statesum_cap: int
    crossing: int | None
    torsion: bool

    def __post_init__(self):
        if self.homology_cap <= 0 or self.statesum_cap <= 0:
            raise ValueError("caps must be positive")


def _add_input_options(p: argparse.ArgumentParser, default_bundled: bool = False):
    p.add_argument("--pd", help="inline PD code, records separated by ';' or newlines")
    p.add_argument("--file", help="path to a PD or corpus file")
    p.add_argument("--json", action="store_true", help="emit JSON instead of text")
    p.add_argument("--homology-cap", type=int, default=DEFAULT_HOMOLOGY_CAP)
    p.add_argument("--statesum-cap", type=int, default=DEFAULT_STATESUM_CAP)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="khtwist",
        description="Exact bracket/homology computations for knot and link diagrams",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for name, helptext in [
        ("bracket", "Kauffman bracket via state sum and homology reconstruction"),
        ("homology", "bigraded homology rank table"),
        ("graphs", "checkerboard graphs G and G*, reductions, and cycle ranks"),
        ("adequacy", "plus/minus adequacy report"),
        ("twist", "bigon twist classes and twist number"),
        ("faces", "face trace of the rotation system (debug)"),
        ("skein", "SES/LES/lemma reports at one crossing"),
    ]:
        p = sub.add_parser(name, help=helptext)
        _add_input_options(p)
        if name == "skein":
            p.add_argument("--crossing", type=int, default=1, help="crossing choice, 1-based")
        if name == "homology":
            p.add_argument("--torsion", action="store_true", help="include Smith-form torsion")
            p.add_argument("--dump-complex", action="store_true", help="dump generators and differentials")

    p = sub.add_parser("verify", help="theorem and corollary over a corpus")
    _add_input_options(p)
    p.add_argument("--json-lines", action="store_true", help="one JSON report per line")
    return parser


def _load_diagram(args) -> Diagram:
    if args.pd is not None and args.file:
        raise MalformedRecord("give either --pd or --file, not both")
    if args.pd is not None:
        return parse_pd(args.pd)
    if args.file:
        with open(args.file, "r", encoding="utf-8") as fh:
            return parse_pd(fh.read())
    raise MalformedRecord("no input: use --pd or --file")


def _load_corpus(args) -> list[Diagram]:
    if args.pd is not None:
        return [parse_pd(args.pd, name="<inline>")]
    if args.file:
        with open(args.file, "r", encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = bundled_corpus_text()
    if "name:" in text:
        return parse_corpus(text)
    return [parse_pd(text, name="<file>")]


def bundled_corpus_text() -> str:
    return resources.files("khtwist").joinpath("data/corpus.txt").read_text(encoding="utf-8")


def load_bundled_corpus() -> list[Diagram]:
    return parse_corpus(bundled_corpus_text())


def _emit(payload: dict, as_json: bool, text: str) -> None:
    if as_json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def cmd_bracket(args) -> int:
    d = _load_diagram(args)
    b = bracket_state_sum(d, args.statesum_cap)
    payload: dict = {"state_sum": b.to_json_pairs()}
    lines = [f"state sum:      {b}"]
    if d.n <= args.homology_cap:
        hb = bracket_from_homology(homology_table(build_complex(d, args.homology_cap)))
        payload["from_homology"] = hb.to_json_pairs()
        payload["equal"] = hb == b
        lines.append(f"from homology:  {hb}")
        lines.append(f"equal: {hb == b}")
    _emit(payload, args.json, "\n".join(lines))
    return 0


def cmd_homology(args) -> int:
    d = _load_diagram(args)
    c = build_complex(d, args.homology_cap)
    table = homology_table(c)
    b = bracket_from_homology(table)
    payload = table_and_bracket_json(table, b)
    lines = ["  j    k  rank"] + [f"{j:3d} {k:4d}  {r}" for j, k, r in table.ranks]
    lines.append(f"bracket: {b}")
    if args.torsion:
        torsion = {f"{j},{k}": fs for (j, k), fs in torsion_table(c).items()}
        payload["torsion"] = torsion
        lines.append(f"torsion: {torsion or 'none'}")
    if args.dump_complex:
        payload["complex"] = c.to_debug_dict()
    _emit(payload, args.json, "\n".join(lines))
    return 0


def cmd_graphs(args) -> int:
    d = _load_diagram(args)
    g, g_star = tait_graphs(d)
    rg, rg_star = reduce_graph(g), reduce_graph(g_star)
    payload = {
        "g": {"vertices": len(g.vertices), "edges": [list(e[:2]) for e in g.edges]},
        "g_star": {"vertices": len(g_star.vertices), "edges": [list(e[:2]) for e in g_star.edges]},
        "psi_reduced_g": psi_per_component(rg),
        "psi_reduced_g_star": psi_per_component(rg_star),
    }
    lines = [
        f"G:  {g.vertex_count} vertices, {g.edge_count} edges; reduced {rg.edge_count} edges; psi per component {psi_per_component(rg)}",
        f"G*: {g_star.vertex_count} vertices, {g_star.edge_count} edges; reduced {rg_star.edge_count} edges; psi per component {psi_per_component(rg_star)}",
        "",
        g.to_dot("G"),
        g_star.to_dot("Gstar"),
    ]
    _emit(payload, args.json, "\n".join(lines))
    return 0


def cmd_adequacy(args) -> int:
    d = _load_diagram(args)
    rep = check_adequacy(d)
    payload = {
        "plus_adequate": rep.plus_adequate,
        "minus_adequate": rep.minus_adequate,
        "adequate": rep.adequate,
        "witness": rep.witness,
    }
    _emit(payload, args.json, f"plus: {rep.plus_adequate}  minus: {rep.minus_adequate}  witness: {rep.witness}")
    return 0


def cmd_twist(args) -> int:
    d = _load_diagram(args)
    tc = twist_classes(d)
    payload = {
        "classes": [sorted(c) for c in tc.classes],
        "twist_number": tc.twist_number,
    }
    _emit(payload, args.json, f"classes: {[sorted(c) for c in tc.classes]}\ntwist number: {tc.twist_number}")
    return 0


def cmd_faces(args) -> int:
    d = _load_diagram(args)
    fs = faces(d)
    payload = {"faces": [[list(corner) for corner in f.corners] for f in fs.faces]}
    lines = [f"face {i}: {list(f.corners)}" for i, f in enumerate(fs.faces)]
    lines.append(f"{len(fs.faces)} faces; alternating: {is_alternating(d)}; reduced: {is_reduced(d)}")
    _emit(payload, args.json, "\n".join(lines))
    return 0


def cmd_skein(args) -> int:
    d = _load_diagram(args)
    c = args.crossing - 1
    if not 0 <= c < d.n:
        raise MalformedRecord(f"--crossing {args.crossing} out of range (diagram has {d.n} crossings)")
    t = skein_triple(d, c)
    ses = check_ses(t, args.homology_cap)
    les = check_les_identities(t, args.homology_cap)
    payload = {"ses": ses.to_json(), "les": les.to_json()}
    lines = [f"SES exact: {ses.exact}", f"LES identities: {les.passed}"]
    try:
        lemma = check_lemma(d, c, args.statesum_cap)
        payload["lemma"] = lemma.to_json()
        lines.append(f"lemma identities: {lemma.passed}")
    except PreconditionViolated as exc:
        payload["lemma"] = {"skipped": str(exc)}
        lines.append(f"lemma skipped: {exc}")
    _emit(payload, args.json, "\n".join(lines))
    return 0 if ses.exact and les.passed else 1


def cmd_verify(args) -> int:
    diagrams = _load_corpus(args)
    result = run_corpus(diagrams, args.statesum_cap)
    if args.json_lines:
        for e in result.entries:
            print(json.dumps(e.to_json(), sort_keys=True))
    elif args.json:
        print(json.dumps({"entries": [e.to_json() for e in result.entries],
                          "pairing_uniform": result.pairing_uniform,
                          "summary": result.summary()}, sort_keys=True))
    else:
        width = max((len(e.name) for e in result.entries), default=4)
        for e in result.entries:
            if e.skipped:
                print(f"{e.name:<{width}}  skipped: {e.skipped}")
            else:
                t = e.theorem
                flag = "ok" if e.passed else "FAIL"
                extra = ""
                if e.corollary:
                    extra = f"  twist={e.corollary.twist_number}"
                print(
                    f"{e.name:<{width}}  n={t.n:2d}  |a_k-4 - a_k|={t.top_difference}  "
                    f"|a_l+4 - a_l|={t.bottom_difference}  psi*={t.psi_g_star} psi={t.psi_g}{extra}  {flag}"
                )
        print(result.summary())
        if not result.pairing_uniform:
            print("warning: pairing not uniform across entries")
    if not result.all_passed:
        failing = [e.name for e in result.entries if not e.passed]
        print(f"failing entries: {', '.join(failing)}", file=sys.stderr)
        return 1
    return 0


COMMANDS = {
    "bracket": cmd_bracket,
    "homology": cmd_homology,
    "graphs": cmd_graphs,
    "adequacy": cmd_adequacy,
    "twist": cmd_twist,
    "faces": cmd_faces,
    "skein": cmd_skein,
    "verify": cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (KhtwistError, FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
