"""Command-line entry point: ``fpgroups <command> ...``.

Exit codes: 0 success (satisfied, trivial, found), 1 certificate failure
(violated, nontrivial, not found), 2 input or precondition error.
"""
from __future__ import annotations

import argparse
import json
import sys
import warnings
from fractions import Fraction
from pathlib import Path

from fpgroups import constructions as C
from fpgroups import diagrams as D
from fpgroups import forms as F
from fpgroups import homology as H
from fpgroups import smallcancel as SC
from fpgroups.presentations import (
    AllKilled,
    Presentation,
    deficiency,
    format_presentation,
    parse_presentation,
    presentation_to_json,
    trivialization_replay,
)
from fpgroups.rewriting import (
    EquivalentAtDepth,
    Exhausted,
    parse_thue,
    positive_word,
    equivalent_within,
)
from fpgroups.words import Word, exponent_sum, format_word, parse_word

SCHEMA = 1


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None


def _emit(obj, as_json: bool, text: str | None = None) -> None:
    if as_json:
        print(json.dumps(obj, indent=2, sort_keys=True))
    else:
        print(text if text is not None else obj)


def _parse_rule(text: str):
    text = text.strip()
    if text.startswith("rule:"):
        text = text[5:]
    if "<->" not in text:
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if len(lines) != 2:
            raise UsageError("rule 3 must be 'F3 <-> E3' or two lines F3 / E3")
        return positive_word(lines[0]), positive_word(lines[1])
    lhs, rhs = text.split("<->")
    return positive_word(lhs), positive_word(rhs)


def _load_presentation(path: str) -> Presentation:
    return parse_presentation(_read(path))


def _print_presentation(p: Presentation, as_json: bool) -> None:
    if as_json:
        data = presentation_to_json(p)
        data["flags"] = sorted(p.flags)
        _emit(data, True)
    else:
        sys.stdout.write(format_presentation(p))
    if p.flags:
        print("note: " + ", ".join(sorted(p.flags)), file=sys.stderr)


# -- gen -------------------------------------------------------------------

def _p_word(args) -> tuple:
    if args.P_file:
        return positive_word(_read(args.P_file))
    if args.P is not None:
        return positive_word(args.P)
    return C.STANDIN_P


def _rule3(args):
    if args.rule3 == "none":
        return None
    if args.rule3:
        return _parse_rule(_read(args.rule3))
    return C.STANDIN_RULE3


def _build_R(args) -> Presentation:
    rule3 = _rule3(args)
    return C.presentation_R(_p_word(args), args.alpha if args.alpha is not None else 6,
                            rule3, allow_incomplete=rule3 is None)


def cmd_gen(args) -> int:
    kind = args.kind
    if kind == "R":
        p = _build_R(args)
    elif kind == "pw":
        base = _build_R(args) if args.base == "R" else _load_presentation(args.base)
        rprime = [parse_word(x) for x in args.rprime.split(";") if x.strip()]
        if args.raw_word is not None:
            w = parse_word(args.raw_word)
        elif args.base == "R":
            w = C.target_word(positive_word(args.word or ""))
        else:
            w = parse_word(args.word or "1")
        p = C.adian_rabin_P_w(base, rprime, w, variant=args.variant, relation3=args.relation3)
    else:
        if not args.system:
            system = C.matiyasevich_system(_rule3(args))
        else:
            system = parse_thue(_read(args.system))
        pw = _p_word(args)
        if kind == "B":
            p = C.borisov_B(system, pw, args.alpha)
        elif kind == "BE":
            p = C.borisov_BE(system, pw, args.alpha)
        else:
            if args.params == "R":
                params = C.R_PARAMS
            elif args.params:
                raw = json.loads(_read(args.params))
                maps = {k: {int(i): int(v) for i, v in raw[k].items()} for k in ("g", "h", "gp", "hp")}
                params = C.B4Params(**maps, alpha=int(raw["alpha"]))
            else:
                params = C.B4Params.identity(len(system.rules), args.alpha)
            p = C.borisov_Bprime(system, pw, params)
    _print_presentation(p, args.json)
    return 0


# -- thue ------------------------------------------------------------------

def cmd_thue(args) -> int:
    system = parse_thue(_read(args.system))
    verdict = equivalent_within(system, positive_word(args.from_), positive_word(args.to),
                                args.depth, args.max_states)
    found = isinstance(verdict, EquivalentAtDepth)
    data = {"verdict": type(verdict).__name__, **verdict.__dict__}
    _emit(data, args.json, f"{type(verdict).__name__} {verdict.__dict__}")
    if isinstance(verdict, Exhausted):
        return 1
    return 0 if found else 1


# -- sc --------------------------------------------------------------------

def cmd_sc(args) -> int:
    p = _load_presentation(args.presentation)
    if args.action == "check":
        lam = Fraction(args.lam)
        verdict = SC.check_metric(p, lam)
        data = {"condition": f"C'({lam})", "verdict": type(verdict).__name__}
        if p.relations:
            data["max_piece_ratio"] = str(SC.pieces(p).max_ratio())
        if isinstance(verdict, SC.Violated):
            data["relator"] = format_word(verdict.relator)
            data["piece"] = format_word(verdict.witness[0])
        if args.C:
            cv = SC.check_C(p, args.C)
            data[f"C({args.C})"] = type(cv).__name__
        _emit(data, args.json, "\n".join(f"{k}: {v}" for k, v in sorted(data.items())))
        return 0 if isinstance(verdict, SC.Satisfied) else 1
    try:
        reducer = SC.DehnReducer(p)
    except SC.PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    out = reducer.reduce(parse_word(args.word), cyclic=args.cyclic)
    data = {"reduced": format_word(out), "trivial": not out}
    _emit(data, args.json, format_word(out))
    return 0 if not out else 1


# -- diagram ---------------------------------------------------------------

def cmd_diagram(args) -> int:
    if args.action == "grid":
        d = D.grid_diagram(parse_word(args.word), args.k)
        text = json.dumps(D.diagram_to_json(d), indent=2)
        if args.out:
            Path(args.out).write_text(text + "\n")
        else:
            print(text)
        return 0
    d = D.diagram_from_json(_read(args.diagram))
    if args.action == "dot":
        if args.json:
            _emit({"dot": D.to_dot(d)}, True)
        else:
            sys.stdout.write(D.to_dot(d))
        return 0
    p = _load_presentation(args.presentation)
    problems = D.validate(d, p)
    data = {"valid": not problems, "violations": problems}
    if not problems:
        data["boundary_label"] = format_word(D.boundary_label(d))
    if args.word is not None:
        data["certifies"] = D.certify_trivial(d, p, parse_word(args.word))
    text = "Valid" if not problems else "\n".join(problems)
    if "boundary_label" in data:
        text += f"\nboundary: {data['boundary_label']}"
    _emit(data, args.json, text)
    ok = not problems and data.get("certifies", True)
    return 0 if ok else 1


# -- homology --------------------------------------------------------------

def _homology_dict(p: Presentation) -> dict:
    h = H.presentation_homology(p)
    return {
        "H0": {"betti": h.H0.betti, "torsion": list(h.H0.torsion)},
        "H1": {"betti": h.H1.betti, "torsion": list(h.H1.torsion)},
        "H2": {"betti": h.H2.betti, "torsion": list(h.H2.torsion)},
        "euler_characteristic": H.euler_characteristic(p),
        "expected_boundary_beta2": h.expected_boundary_beta2,
        "expected_boundary_beta2_source": "asserted: 2 * deficiency, not computed",
    }


def cmd_homology(args) -> int:
    p = _load_presentation(args.presentation)
    data = _homology_dict(p)
    text = "\n".join(
        [f"{k}: {H.HomologyGroup(data[k]['betti'], tuple(data[k]['torsion']))}" for k in ("H0", "H1", "H2")]
        + [f"euler: {data['euler_characteristic']}"]
    )
    _emit(data, args.json, text)
    return 0


# -- form ------------------------------------------------------------------

def _variant_dict(v) -> dict:
    return {"class": type(v).__name__, **v.__dict__}


def cmd_form(args) -> int:
    f = F.form_from_json(json.loads(_read(args.matrix)))
    if args.action == "classify":
        v = F.classify(f)
        _emit(_variant_dict(v), args.json, f"{type(v).__name__} {v.__dict__}")
        return 1 if isinstance(v, (F.NotUnimodular, F.Inconsistent)) else 0
    try:
        v = F.recognize_boundary(f)
    except F.FormError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(_variant_dict(v), args.json, f"{type(v).__name__} {v.__dict__}")
    return 1 if isinstance(v, F.CannotBound) else 0


# -- pipeline --------------------------------------------------------------

DEFAULT_CONFIG = {
    "P": " ".join(C.STANDIN_P),
    "rule3": " ".join(C.STANDIN_RULE3[0]) + " <-> " + " ".join(C.STANDIN_RULE3[1]),
    "alpha_R": "6",
    "rprime": "a;c",
    "word": "s1 s2",
    "variant": "literal",
    "relation3": "literal",
}


def parse_config(text: str) -> dict:
    """``key = value`` lines; ``#`` starts a comment; ``rule3 = none`` drops rule 3."""
    cfg = dict(DEFAULT_CONFIG)
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"config line {lineno}: expected key = value")
        key, value = (x.strip() for x in line.split("=", 1))
        if key not in DEFAULT_CONFIG:
            raise UsageError(f"config line {lineno}: unknown key {key!r}")
        cfg[key] = value
    return cfg


class StageFailure(Exception):
    pass


def run_pipeline(cfg: dict) -> dict:
    """Build R and P_w, run every certificate, return the report dict.

    Raises :class:`UsageError` for bad configuration; certificate failures
    are recorded in ``report["failed_stage"]``.
    """
    try:
        alpha = int(cfg["alpha_R"])
    except ValueError:
        raise UsageError("alpha_R must be an integer") from None
    rule3 = None if cfg["rule3"].lower() in ("", "none") else _parse_rule(cfg["rule3"])
    p_word = positive_word(cfg["P"])
    try:
        R = C.presentation_R(p_word, alpha, rule3, allow_incomplete=rule3 is None)
    except ValueError as exc:
        raise UsageError(f"presentation R: {exc}") from None
    incomplete = "incomplete" in R.flags
    rprime = [parse_word(x) for x in cfg["rprime"].split(";") if x.strip()]
    try:
        w = C.target_word(positive_word(cfg["word"]))
        Pw = C.adian_rabin_P_w(R, rprime, w, variant=cfg["variant"], relation3=cfg["relation3"])
    except ValueError as exc:
        raise UsageError(f"P_w: {exc}") from None

    report: dict = {"schema": SCHEMA, "incomplete": incomplete, "flags": sorted(R.flags),
                    "skipped": [], "stages": {}}
    failed = None

    def stage(name: str, ok: bool, **data):
        nonlocal failed
        report["stages"][name] = {"ok": ok, **data}
        if not ok and failed is None:
            failed = name

    def stats(p):
        return {"generators": p.n, "relations": p.m, "deficiency": deficiency(p)}

    report["presentation_R_stats"] = stats(R)
    report["pw_stats"] = stats(Pw)

    W = Presentation(("a", "b"), tuple(C.encoding_words()))
    verdict = SC.check_metric(W, Fraction(1, 6))
    pr = SC.pieces(W)
    per_word = []
    for x in ("s1", "s2", "k", "t"):
        mw = C.mu_new(x)
        shifts = [k for k in pr.per_relator_max if len(k) == len(mw)]
        longest = max(pr.per_relator_max[k][0] for k in shifts)
        per_word.append({"letter": x, "length": len(mw), "max_piece": longest})
    report["sc_certificate"] = {
        "condition": "C'(1/6)",
        "verdict": type(verdict).__name__,
        "max_piece_ratio": str(pr.max_ratio()),
        "closure_size": len(pr.per_relator_max),
        "words": per_word,
    }
    stage("small_cancellation", isinstance(verdict, SC.Satisfied))

    c_sums = {R.name_of(i): exponent_sum(r, "c") for i, r in enumerate(R.relations) if "c" in r.generators()}
    stage("c_exponent_sums", all(v == 0 for v in c_sums.values()), sums=c_sums)

    Rp = C.trivialized_R(R)
    if incomplete:
        report["trivialization"] = "skipped"
        report["skipped"].append("trivialization")
    else:
        tv = trivialization_replay(Rp, C.trivialization_script(Rp))
        report["trivialization"] = type(tv).__name__
        stage("trivialization", isinstance(tv, AllKilled))

    if incomplete:
        report["skipped"].append("deficiency_9")
    else:
        stage("deficiency_9", deficiency(Pw) == 9, deficiency=deficiency(Pw))

    report["homology"] = {"R": _homology_dict(R), "R_trivialized": _homology_dict(Rp)}
    report["expected_boundary_beta2"] = 2 * deficiency(Pw)
    report["expected_boundary_beta2_source"] = "asserted: 2 * deficiency, not computed"
    stage("euler_R", H.euler_characteristic(R) == 1 + deficiency(R))
    if incomplete:
        report["skipped"].append("H1_trivialized")
    else:
        h1 = report["homology"]["R_trivialized"]["H1"]
        stage("H1_trivialized", h1 == {"betti": 0, "torsion": []})

    report["failed_stage"] = failed
    return report


def cmd_pipeline(args) -> int:
    cfg = parse_config(_read(args.config)) if args.config else dict(DEFAULT_CONFIG)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        report = run_pipeline(cfg)
    if args.json:
        _emit(report, True)
    else:
        print(f"R: {report['presentation_R_stats']}")
        print(f"P_w: {report['pw_stats']}")
        for name, st in report["stages"].items():
            print(f"{name}: {'ok' if st['ok'] else 'FAILED'}")
        for name in report["skipped"]:
            print(f"{name}: skipped (incomplete)")
    if report["failed_stage"]:
        print(f"failed stage: {report['failed_stage']}", file=sys.stderr)
        return 1
    return 0


# -- argument parsing ------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="fpgroups", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def add_json(p):
        p.add_argument("--json", action="store_true", help="machine-readable output")

    g = sub.add_parser("gen", help="emit a named presentation")
    g.add_argument("kind", choices=["R", "pw", "B", "Bprime", "BE"])
    g.add_argument("--alpha", type=int)
    g.add_argument("--P", help="the distinguished Thue word, e.g. 's1 s2 s1'")
    g.add_argument("--P-file", dest="P_file")
    g.add_argument("--rule3", help="file holding 'F3 <-> E3', or 'none' to omit rule 3 "
                   "(default: the flagged stand-in)")
    g.add_argument("--system", help="Thue system file (B, Bprime, BE)")
    g.add_argument("--params", help="'R' or a JSON file with g, h, gp, hp, alpha (Bprime)")
    g.add_argument("--base", default="R", help="'R' or a presentation file (pw)")
    g.add_argument("--rprime", default="a;c", help="';'-separated extra relators (pw)")
    g.add_argument("--word", help="Thue word Q for base R, else a word over the base")
    g.add_argument("--raw-word", dest="raw_word", help="word w over the base generators (pw)")
    g.add_argument("--variant", default="literal", choices=["literal", "symmetric"])
    g.add_argument("--relation3", default="literal", choices=["literal", "miller"])
    add_json(g)
    g.set_defaults(func=cmd_gen)

    t = sub.add_parser("thue", help="bounded equivalence search in a Thue system")
    tsub = t.add_subparsers(dest="action", required=True)
    r = tsub.add_parser("reach")
    r.add_argument("--system", required=True)
    r.add_argument("--from", dest="from_", required=True)
    r.add_argument("--to", required=True)
    r.add_argument("--depth", type=int, required=True)
    r.add_argument("--max-states", dest="max_states", type=int, default=10**6)
    add_json(r)
    r.set_defaults(func=cmd_thue)

    s = sub.add_parser("sc", help="small cancellation checks and Dehn reduction")
    ssub = s.add_subparsers(dest="action", required=True)
    chk = ssub.add_parser("check")
    chk.add_argument("--presentation", required=True)
    chk.add_argument("--lambda", dest="lam", default="1/6")
    chk.add_argument("--C", type=int, help="also check C(p)")
    add_json(chk)
    dehn = ssub.add_parser("dehn")
    dehn.add_argument("--presentation", required=True)
    dehn.add_argument("--word", required=True)
    dehn.add_argument("--cyclic", action="store_true")
    add_json(dehn)
    s.set_defaults(func=cmd_sc)

    d = sub.add_parser("diagram", help="van Kampen diagrams")
    dsub = d.add_subparsers(dest="action", required=True)
    val = dsub.add_parser("validate")
    val.add_argument("--presentation", required=True)
    val.add_argument("--diagram", required=True)
    val.add_argument("--word", help="also certify this word trivial")
    add_json(val)
    grid = dsub.add_parser("grid")
    grid.add_argument("--word", required=True)
    grid.add_argument("--k", type=int, required=True)
    grid.add_argument("--out")
    add_json(grid)  # the diagram is always written as JSON
    dot = dsub.add_parser("dot")
    dot.add_argument("--diagram", required=True)
    add_json(dot)
    d.set_defaults(func=cmd_diagram)

    h = sub.add_parser("homology", help="homology of the presentation complex")
    h.add_argument("--presentation", required=True)
    add_json(h)
    h.set_defaults(func=cmd_homology)

    f = sub.add_parser("form", help="unimodular symmetric forms")
    f.add_argument("action", choices=["classify", "recognize"])
    f.add_argument("--matrix", required=True)
    add_json(f)
    f.set_defaults(func=cmd_form)

    pl = sub.add_parser("pipeline", help="build R and P_w and run every certificate")
    pl.add_argument("--config")
    add_json(pl)
    pl.set_defaults(func=cmd_pipeline)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            return args.func(args)
    except (UsageError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
