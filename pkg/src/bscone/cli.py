"""Command-line front end.

Sequences are comma separated, with ``inf`` / ``-inf`` for infinite
entries. Exit codes: 0 success (including a "false" answer), 1 usage or
input errors, 2 mathematical refusals such as NotComparable or NotInCone.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Any, Callable, Optional

from . import betti, equivariant, es_construction, supernatural
from .core import GLWeight, NEG_INF, INF, format_fraction, parse_entry
from .errors import MATHEMATICAL_REFUSALS


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # "-2,-3" and "-inf" are values, not flags
        self._negative_number_matcher = re.compile(r"^-(\d|inf)")

    def error(self, message):
        raise _UsageError(self, message)


class _UsageError(Exception):
    def __init__(self, parser, message):
        super().__init__(message)
        self.parser = parser


def _ints(text: str) -> list[int]:
    return [int(t) for t in text.split(",") if t.strip()]


def _window(text: Optional[str]) -> Optional[tuple[int, int]]:
    if text is None:
        return None
    lo, hi = text.split(":")
    return int(lo), int(hi)


def _pad(seqs: list[list], fill) -> list[list]:
    width = max(len(s) for s in seqs)
    return [s + [fill] * (width - len(s)) for s in seqs]


def _degs(*texts: str) -> list[betti.DegreeSequence]:
    raws = _pad([[parse_entry(t) for t in x.split(",") if t.strip()] for x in texts], INF)
    return [betti.DegreeSequence(tuple(r)) for r in raws]


def _roots(*texts: str, n: Optional[int] = None) -> list[supernatural.RootSequence]:
    raws = _pad([[parse_entry(t) for t in x.split(",") if t.strip()] for x in texts], NEG_INF)
    return [supernatural.root_sequence(r, n) for r in raws]


# each handler returns (result record, certificate record or None, text output)
Handler = Callable[[argparse.Namespace], tuple[Any, Any, str]]


def cmd_pure(args):
    (d,) = _degs(args.d)
    p = betti.pure_diagram(d)
    diagram = p.to_diagram()
    result = {"d": d.to_record(), "betti": list(p.betti), "diagram": diagram.to_records()}
    return result, None, diagram.render()


def cmd_decompose(args):
    with open(args.file) as fh:
        data = json.load(fh)
    if isinstance(data, dict):
        n = args.n if args.n is not None else data.get("n")
        B = betti.BettiDiagram.from_records(data["entries"], n)
    else:
        B = betti.BettiDiagram.from_records(data, args.n)
    dec = betti.decompose(B)
    lines = [B.render(), ""]
    for c, p in dec.terms:
        lines.append(f"{format_fraction(c)} * pi{p.d}  betti={list(p.betti)}")
    return {"terms": dec.to_records()}, None, "\n".join(lines)


def cmd_order(args):
    if args.kind == "deg":
        a, b = _degs(args.a, args.b)
        ans = betti.deg_leq(a, b)
    else:
        a, b = _roots(args.a, args.b)
        ans = supernatural.root_leq(a, b)
    return {"leq": ans, "a": a.to_record(), "b": b.to_record()}, None, "true" if ans else "false"


def cmd_witness(args):
    if args.kind == "deg":
        d, dp = _degs(args.a, args.b)
        t, dpp = betti.shift_reduction(d, dp)
        cert = es_construction.hom_witness(d, dpp)
        result = {"exists": True, "shift": t, "reduced": dpp.to_record(), "j": cert.j,
                  "degree": -t}
        text = f"Hom(M', M)_{-t} != 0  (shift t = {t}, d'' = {dpp})\n" + cert.render()
        return result, cert.to_record(), text
    f, fp = _roots(args.a, args.b)
    bound = supernatural.hom_lower_bound(f, fp)
    split = supernatural.split_hom_dim(f, fp)
    exists = supernatural.root_hom_exists(f, fp)
    result = {"exists": exists, "lower_bound": bound, "split_dim": split}
    text = f"exists: {str(exists).lower()}\nlower bound: {bound}"
    if split is not None:
        text += f"\nsplit dim: {split}"
    return result, None, text


def cmd_es_table(args):
    d, dp = _degs(args.a, args.b)
    e = es_construction.es_setup(d, dp)
    t1 = es_construction.twist_table(e, "unprimed")
    t2 = es_construction.twist_table(e, "primed")
    text = "\n".join([
        f"r = {e.r}, delta = {e.delta}, a = {e.a}, delta' = {e.deltap}, a' = {e.ap}, c = {e.c}",
        "",
        t1.render(f"d = {d}"),
        "",
        t2.render(f"d' = {dp}"),
    ])
    return {"es": e.to_record(), "unprimed": t1.to_record(), "primed": t2.to_record()}, None, text


def cmd_eq_shapes(args):
    (d,) = _degs(args.d)
    sh = equivariant.efw_shapes(d)
    result = sh.to_record()
    result["ranks"] = sh.ranks()
    return result, None, sh.render()


def cmd_eq_witness(args):
    d, dp = _degs(args.a, args.b)
    t, dpp = betti.shift_reduction(d, dp)
    cert = equivariant.eq_hom_witness(d, dpp, args.k)
    result = {"exists": True, "shift": t, "touching": cert.touching,
              "surjective_at_touching": cert.surjective_at_touching}
    return result, cert.to_record(), f"shift t = {t}\n" + cert.render()


def cmd_eq_bwb(args):
    lam = _ints(args.weight)
    res = equivariant.bwb(GLWeight(tuple(lam)) if lam else (), args.e, args.n)
    if res.vanishing:
        text = "all cohomology vanishes"
    else:
        text = f"H^{res.degree} = S_{res.weight} V, dim {res.dim}"
    return res.to_record(), None, text


def cmd_eq_supernatural(args):
    (f,) = _roots(args.f)
    lam, twist = equivariant.eq_supernatural_weight(f)
    window = _window(args.window) or supernatural.default_window(f)
    ok = equivariant.verify_supernatural_equivariant(f, window)
    result = {"lambda": list(lam.parts), "twist": twist, "window": list(window), "verified": ok}
    text = f"E = S_{lam} Q ⊗ O({twist})\nsupernatural of type {f} on columns {window[0]}..{window[1]}: {str(ok).lower()}"
    return result, None, text


def cmd_snat_table(args):
    (f,) = _roots(args.f)
    tab = supernatural.table(f, _window(args.window))
    head = f"f = {f}, rank convention {tab.rank_convention} (= s!)"
    return tab.to_records(), None, head + "\n" + tab.render()


def build_parser() -> _Parser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=["text", "structured"], default=argparse.SUPPRESS)
    common.add_argument("--out", default=argparse.SUPPRESS, help="write certificate/output here")

    p = _Parser(prog="bscone", description="Boij-Soederberg cones, pure diagrams and Hom witnesses",
                parents=[common])
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    q = sub.add_parser("pure", parents=[common], help="normalized pure diagram of a degree sequence")
    q.add_argument("d")
    q.set_defaults(func=cmd_pure)

    q = sub.add_parser("decompose", parents=[common], help="Boij-Soederberg decomposition of a diagram file")
    q.add_argument("file")
    q.add_argument("--n", type=int, default=None)
    q.set_defaults(func=cmd_decompose)

    q = sub.add_parser("order", parents=[common], help="compare two degree or root sequences")
    q.add_argument("kind", choices=["deg", "root"])
    q.add_argument("a")
    q.add_argument("b")
    q.set_defaults(func=cmd_order)

    q = sub.add_parser("witness", parents=[common], help="Hom witness between pure modules / supernatural sheaves")
    q.add_argument("kind", choices=["deg", "root"])
    q.add_argument("a")
    q.add_argument("b")
    q.set_defaults(func=cmd_witness)

    es = sub.add_parser("es", parents=[common], help="pushforward construction data")
    es_sub = es.add_subparsers(dest="action", required=True, parser_class=_Parser)
    q = es_sub.add_parser("table", parents=[common], help="Koszul twist tables")
    q.add_argument("a")
    q.add_argument("b")
    q.set_defaults(func=cmd_es_table)

    eq = sub.add_parser("eq", parents=[common], help="equivariant constructions")
    eq_sub = eq.add_subparsers(dest="action", required=True, parser_class=_Parser)
    q = eq_sub.add_parser("shapes", parents=[common], help="resolution shapes lambda(d)_j")
    q.add_argument("d")
    q.set_defaults(func=cmd_eq_shapes)
    q = eq_sub.add_parser("witness", parents=[common], help="Pieri chain certificate")
    q.add_argument("a")
    q.add_argument("b")
    q.add_argument("--k", type=int, default=None, help="touching index to report")
    q.set_defaults(func=cmd_eq_witness)
    q = eq_sub.add_parser("bwb", parents=[common], help="cohomology of S_w Q (x) O(e) on P^{n-1}")
    q.add_argument("weight")
    q.add_argument("e", type=int)
    q.add_argument("n", type=int)
    q.set_defaults(func=cmd_eq_bwb)
    q = eq_sub.add_parser("supernatural", parents=[common], help="equivariant supernatural bundle of type f")
    q.add_argument("f")
    q.add_argument("--window", default=None, help="column range a:b")
    q.set_defaults(func=cmd_eq_supernatural)

    sn = sub.add_parser("snat", parents=[common], help="supernatural cohomology tables")
    sn_sub = sn.add_subparsers(dest="action", required=True, parser_class=_Parser)
    q = sn_sub.add_parser("table", parents=[common])
    q.add_argument("f")
    q.add_argument("--window", default=None, help="column range a:b")
    q.set_defaults(func=cmd_snat_table)
    return p


def _emit(text: str, out: Optional[str], stream):
    if out and out != "-":
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        stream.write(text + "\n")


def run(argv: Optional[list[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        exc.parser.print_usage(stderr)
        stderr.write(f"error: {exc}\n")
        return 1
    fmt = getattr(args, "format", "text")
    out = getattr(args, "out", None)
    verb = " ".join(x for x in (args.verb, getattr(args, "action", None), getattr(args, "kind", None)) if x)
    inputs = {k: v for k, v in vars(args).items() if k not in ("func", "verb", "action", "kind", "format", "out")}

    try:
        result, certificate, text = args.func(args)
    except (ValueError, AssertionError, OSError, KeyError) as exc:
        code = getattr(exc, "code", type(exc).__name__)
        status = 2 if isinstance(exc, MATHEMATICAL_REFUSALS) else 1
        if fmt == "structured":
            record = {"verb": verb, "input": inputs, "error": {"code": code, "message": str(exc)}}
            stdout.write(json.dumps(record, sort_keys=True) + "\n")
        else:
            stderr.write(f"{code}: {exc}\n")
        return status

    if fmt == "structured":
        record = {"verb": verb, "input": inputs, "result": result}
        if certificate is not None:
            record["certificate"] = certificate
        _emit(json.dumps(record, sort_keys=True, indent=2), out, stdout)
    else:
        if certificate is not None and out:
            # text mode: certificate goes to the file, summary to stdout
            _emit(json.dumps(certificate, sort_keys=True, indent=2), out, stdout)
        stdout.write(text + "\n")
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
