"""Command-line front door.

Every command builds a JSON report ``{command, config, checks, tables}``;
``--format tsv`` prints the tables instead, and ``--report PATH`` always
writes the JSON.  Exit status is 0 when every check passes, 1 when one
fails and 2 on malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from . import conventions
from . import verify as V
from .chains import CategoricalCoalgebra
from .cobar import CobarError, cobar, element_text, monomial_text
from .groupoid import WordError, enumerate_reduced_words, underlying_quiver
from .homology import HomologyError, hom_homology
from .kan import KanError, phi
from .simplicial import SSetError, build_space, validate
from .szczarba import FlagError, sz_table


class InputError(ValueError):
    pass


def _space(args):
    try:
        return build_space(args.space)
    except (SSetError, OSError, json.JSONDecodeError) as exc:
        raise InputError(str(exc)) from exc


def _vertex(X, name, default):
    if name is None:
        return default
    if name not in X.vertices:
        raise InputError(f"{name!r} is not a vertex of {X.name}")
    return name


def _flag_text(flag) -> str:
    return V._flag_text(flag)


def _table(header, rows) -> dict:
    return {"header": list(header), "rows": [[str(c) for c in r] for r in rows]}


# -- commands ----------------------------------------------------------------


def cmd_validate(args):
    X = _space(args)
    checks = [V._check(f"simplicial_identities[{X.name}]", validate(X))]
    checks.append(V._check(f"coalgebra.axioms[{X.name}]", CategoricalCoalgebra(X).check_axioms(max_witnesses=1)))
    counts = X.counts()
    table = _table(["dim", "nondegenerate"], [(d, counts[d]) for d in sorted(counts)])
    return checks, {"simplices": table}


def cmd_words(args):
    X = _space(args)
    Q = underlying_quiver(X)
    x = _vertex(X, args.source, X.vertices[0])
    y = _vertex(X, args.target, X.vertices[-1])
    rows = []
    for w in enumerate_reduced_words(Q, x, y, args.max_len):
        rows.append((len(w), str(w), "yes" if w.is_positive() else "no"))
    return [], {"words": _table(["length", "word", "positive"], rows)}


def cmd_szczarba(args):
    if not 0 <= args.p <= args.q <= args.n:
        raise InputError("need 0 <= p <= q <= n")
    rows = []
    for flag, alpha, gamma, word in sz_table(args.n, args.p, args.q):
        rows.append((_flag_text(flag), alpha, gamma, word.text(unicode=not args.ascii)))
    checks = []
    if (args.n, args.p, args.q) == (3, 0, 3):
        checks = V.sz_example_checks()
    return checks, {"szczarba": _table(["flag", "alpha", "gamma", "word"], rows)}


def _mode(args):
    return args.mode == "extended"


def cmd_cobar_basis(args):
    X = _space(args)
    Om = cobar(X, extended=_mode(args))
    x = _vertex(X, args.source, X.vertices[0])
    y = _vertex(X, args.target, X.vertices[-1])
    rows = []
    for d in range(args.max_degree + 1):
        for m in Om.hom_basis(x, y, d, word_cap=args.word_cap):
            rows.append((d, monomial_text(m, x), element_text(Om.differential_terms({m: 1}), x)))
    return [], {"basis": _table(["degree", "monomial", "differential"], rows)}


def cmd_homology(args):
    X = _space(args)
    Om = cobar(X, extended=_mode(args))
    x = _vertex(X, args.source, X.vertices[0])
    y = _vertex(X, args.target, X.vertices[0] if X.is_reduced() else X.vertices[-1])
    H = hom_homology(Om, x, y, args.max_degree, word_cap=args.word_cap, margin=args.margin)
    rows = []
    for k, h in sorted(H.degrees.items()):
        tors = ",".join(map(str, h.torsion)) or "-"
        rows.append((k, h.betti, tors, "yes" if h.truncated else "no", h.basis_size))
    table = _table(["degree", "betti", "torsion", "truncated", "basis_size"], rows)
    return [], {"homology": table, "summary": H.as_dict()}


def cmd_phi(args):
    X = _space(args)
    if not X.is_reduced():
        raise InputError(f"{X.name} is not reduced")
    ids = [args.simplex] if args.simplex else [s for d in range(1, args.max_dim + 1) for s in X.nondegenerate(d)]
    rows = []
    for s in ids:
        if s not in X:
            raise InputError(f"unknown simplex {s!r}")
        chain = phi(X, s)
        for w in sorted(chain, key=lambda w: w.text()):
            rows.append((s, X.dim(s) - 1, chain[w], w.text()))
    bad = V.phi_bad(X, max_degree=args.max_degree, cap=args.word_cap)
    checks = [V._check(f"phi.{k}[{X.name}]", v) for k, v in bad.items()]
    return checks, {"phi": _table(["simplex", "level", "coeff", "word"], rows)}


def _suite(args):
    return args[0], [c.as_dict() for c in V.run_suite(*args)]


def cmd_verify(args):
    suites = V.SUITES if args.suite == "all" else (args.suite,)
    jobs = [(s, args.seed) for s in suites]
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            done = dict(pool.map(_suite, jobs))
    else:
        done = dict(map(_suite, jobs))
    checks = [V.Check(c["name"], c["status"] == "pass", c.get("witness")) for s in suites for c in done[s]]
    return checks, None


COMMANDS = {
    "validate": cmd_validate,
    "words": cmd_words,
    "szczarba": cmd_szczarba,
    "cobar-basis": cmd_cobar_basis,
    "homology": cmd_homology,
    "phi": cmd_phi,
    "verify": cmd_verify,
}


# -- parsing -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pathcat", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, space=True):
        if space:
            p.add_argument("--space", required=True, help="delta:n, sphere:n, boundary:n, wedge:a+b, k1:X, reduce:X, file:path")
        p.add_argument("--format", choices=("json", "tsv"), default="json")
        p.add_argument("--report", help="also write the JSON report here")
        return p

    common(sub.add_parser("validate", help="simplicial identities and coalgebra axioms"))

    p = common(sub.add_parser("words", help="reduced words in the free groupoid"))
    p.add_argument("--source")
    p.add_argument("--target")
    p.add_argument("--max-len", type=int, default=3)

    p = common(sub.add_parser("szczarba", help="Sz on the top flags"), space=False)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--ascii", action="store_true")

    for name, helptext in (("cobar-basis", "hom basis with differentials"), ("homology", "hom homology")):
        p = common(sub.add_parser(name, help=helptext))
        p.add_argument("--source")
        p.add_argument("--target")
        p.add_argument("--max-degree", type=int, default=3)
        p.add_argument("--word-cap", type=int)
        p.add_argument("--mode", choices=("plain", "extended"), default="extended" if name == "homology" else "plain")
        if name == "homology":
            p.add_argument("--margin", type=int, default=0)

    p = common(sub.add_parser("phi", help="comparison map into chains on the loop group"))
    p.add_argument("--simplex")
    p.add_argument("--max-dim", type=int, default=3)
    p.add_argument("--max-degree", type=int, default=2)
    p.add_argument("--word-cap", type=int, default=3)

    p = common(sub.add_parser("verify", help="run invariant batteries"), space=False)
    p.add_argument("--suite", choices=V.SUITES + ("all",), default="all")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    return parser


def _config(args) -> dict:
    skip = {"format", "report", "jobs"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def _tsv(tables) -> str:
    out = []
    for name, t in (tables or {}).items():
        if not isinstance(t, dict) or "header" not in t:
            continue
        out.append("\t".join(t["header"]))
        out.extend("\t".join(r) for r in t["rows"])
    return "\n".join(out) + ("\n" if out else "")


def _checks_tsv(checks) -> str:
    lines = ["name\tstatus\twitness"]
    lines += [f"{c.name}\t{'pass' if c.status else 'fail'}\t{c.witness or ''}" for c in checks]
    return "\n".join(lines) + "\n"


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        checks, tables = COMMANDS[args.command](args)
    except (InputError, CobarError, HomologyError, FlagError, KanError, WordError) as exc:
        print(f"pathcat: {exc}", file=sys.stderr)
        return 2
    doc = {
        "command": args.command,
        "config": _config(args),
        "conventions": conventions.table(),
        "checks": [c.as_dict() for c in checks],
        "summary": {"passed": sum(c.status for c in checks), "failed": sum(not c.status for c in checks)},
    }
    if tables:
        doc["tables"] = tables
    text = V.dumps(doc)
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(text)
    if args.format == "tsv":
        sys.stdout.write(_tsv(tables) if tables else _checks_tsv(checks))
    else:
        sys.stdout.write(text)
    return 0 if all(c.status for c in checks) else 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
