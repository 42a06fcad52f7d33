"""Command line front end.

Subcommands: evaluate, closed, km, spin verify, spin invariant, spin search,
arf, defect invariant, verify.  Tables are emitted as CSV (default) or JSON;
exact values are the source of truth and the decimal column is display only.
Exit codes: 0 ok, 1 verification failure, 2 invalid input, 3 budget exceeded.
"""

import argparse
import csv
import io
import json
import sys

from .defects import generating_loop_invariant, regular_bimodule, verify_bimodule
from .errors import CapExceeded, InputError, VerificationError
from .frobenius import closed_genus_invariant, verify_frobenius_identities, verify_separability
from .involution import nonorientable_invariant, verify_w_identities
from .modelfile import load_model
from .quadform import QuadraticForm, arf
from .scalars import decimal_string, parse_scalar
from .spin import crossing_search_cyclic, spin_invariant, verify_crossing_axioms
from .statesum import evaluate, verify_pachner
from .surfaces import genus_surface, nonorientable_surface

AXIOM_ORDER = (
    "B1", "B2", "B3", "B4", "B5",
    "phi_involutive", "phi_automorphism", "phi_B", "phi_lambda",
)
REQUIRED_AXIOMS = ("B1", "B2", "B3", "B4", "B5")


def _parse_range(text, what):
    """'0..3' or '2' to a list of ints."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
            if hi < lo:
                raise ValueError
            return list(range(lo, hi + 1))
        return [int(text)]
    except ValueError:
        raise InputError("bad %s range %r, expected 'a..b' or a single integer" % (what, text)) from None


def _parities(text):
    if text == "both":
        return ["even", "odd"]
    if text in ("even", "odd"):
        return [text]
    raise InputError("parity must be even, odd or both")


def _pick(table, name, section):
    if name is None:
        if len(table) == 1:
            return next(iter(table.values()))
        raise InputError("the model declares %d %s entries, name one" % (len(table), section))
    if name not in table:
        raise InputError("no %s entry named %r" % (section, name))
    return table[name]


def _row(model, surface, structure, value):
    return {
        "model": model,
        "surface": surface,
        "structure": structure,
        "value": value.serialize(),
        "decimal": decimal_string(value),
    }


def _emit(rows, fmt, out):
    fields = ("model", "surface", "structure", "value", "decimal")
    if fmt == "json":
        out.write(json.dumps({"rows": rows}, indent=2, sort_keys=True) + "\n")
        return
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(fields)
    for r in rows:
        writer.writerow([r[f] for f in fields])
    out.write(buf.getvalue())


# -- handlers ----------------------------------------------------------------


def _cmd_closed(args, out):
    model = load_model(args.model)
    F = _pick(model.frobenius, args.frobenius, "frobenius")
    name = args.frobenius or next(iter(model.frobenius))
    rows = [
        _row(name, "genus %d" % g, "oriented", closed_genus_invariant(F, g))
        for g in _parse_range(args.genus, "genus")
    ]
    _emit(rows, args.format, out)
    return 0


def _cmd_evaluate(args, out):
    model = load_model(args.model)
    F = _pick(model.frobenius, args.frobenius, "frobenius")
    name = args.frobenius or next(iter(model.frobenius))
    rows = []
    if args.crosscaps is not None:
        if args.involution is None:
            raise InputError("unoriented evaluation needs --involution")
        I = _pick(model.involutions, args.involution, "involution")
        if I.frobenius is not F:
            raise InputError("the involution belongs to a different form")
        for k in _parse_range(args.crosscaps, "crosscaps"):
            rep = evaluate(nonorientable_surface(k), F, S=I.S_matrix, cap=args.cap)
            rows.append(_row(name, "crosscaps %d" % k, "unoriented", rep.value))
    else:
        if args.genus is None:
            raise InputError("evaluate needs --genus or --crosscaps")
        for g in _parse_range(args.genus, "genus"):
            rep = evaluate(genus_surface(g), F, cap=args.cap)
            rows.append(_row(name, "genus %d" % g, "oriented", rep.value))
    _emit(rows, args.format, out)
    return 0


def _cmd_km(args, out):
    model = load_model(args.model)
    I = _pick(model.involutions, args.involution, "involution")
    name = args.involution or next(iter(model.involutions))
    rows = [
        _row(name, "crosscaps %d" % k, "unoriented", nonorientable_invariant(I, k))
        for k in _parse_range(args.crosscaps, "crosscaps")
    ]
    _emit(rows, args.format, out)
    return 0


def _cmd_spin_verify(args, out):
    model = load_model(args.model)
    X = _pick(model.crossings, args.crossing, "crossing")
    report = verify_crossing_axioms(X)
    for key in AXIOM_ORDER:
        if key in report:
            out.write("%s: %s\n" % (key, "pass" if report[key] else "fail"))
    if "curl_free" in report:
        out.write("curl map trivial: %s\n" % ("yes" if report["curl_free"] else "no"))
    failed = [k for k in REQUIRED_AXIOMS if not report.get(k, False)]
    if failed:
        out.write("failed: %s\n" % ", ".join(failed))
        return 1
    out.write("all crossing axioms hold\n")
    return 0


def _cmd_spin_invariant(args, out):
    model = load_model(args.model)
    X = _pick(model.crossings, args.crossing, "crossing")
    name = args.crossing or next(iter(model.crossings))
    rows = []
    for g in _parse_range(args.genus, "genus"):
        for parity in _parities(args.parity):
            rows.append(_row(name, "genus %d" % g, parity, spin_invariant(X, g, parity)))
    _emit(rows, args.format, out)
    return 0


def _cmd_spin_search(args, out):
    results = crossing_search_cyclic(args.cyclic, args.mode)
    if args.format == "none":
        for i, r in enumerate(results, 1):
            out.write("family %d: %s\n" % (i, r.description))
            out.write("  even g=1..3: %s\n" % ", ".join(v.serialize() for v in r.even_values))
            out.write("  odd  g=1..3: %s\n" % ", ".join(v.serialize() for v in r.odd_values))
            out.write("  distinguishes parity: %s\n" % ("yes" if r.distinguishes else "no"))
        out.write("%d families\n" % len(results))
        return 0
    rows = []
    for i, r in enumerate(results, 1):
        label = "family %d: %s%s" % (i, r.description, " [parity-distinguishing]" if r.distinguishes else "")
        for g in (1, 2, 3):
            rows.append(_row(label, "genus %d" % g, "even", r.even_values[g - 1]))
            rows.append(_row(label, "genus %d" % g, "odd", r.odd_values[g - 1]))
    _emit(rows, args.format, out)
    return 0


def _cmd_arf(args, out):
    try:
        values = [int(v) for v in args.q.split(",")]
    except ValueError:
        raise InputError("bad --q, expected comma-separated bits") from None
    q = QuadraticForm(args.genus, values)
    out.write("odd\n" if arf(q).serialize() == "-1" else "even\n")
    return 0


def _cmd_defect_invariant(args, out):
    model = load_model(args.model)
    X = _pick(model.crossings, args.crossing, "crossing")
    if args.bimodule is not None:
        if args.sign is not None:
            raise InputError("give either --bimodule or --sign, not both")
        V = _pick(model.bimodules, args.bimodule, "bimodule")
        name = args.bimodule
    else:
        sign = parse_scalar(args.sign if args.sign is not None else "1")
        V = regular_bimodule(X.frobenius, sign)
        name = "regular sign=%s" % sign.serialize()
    if V.frobenius is not X.frobenius:
        raise InputError("the bimodule and the crossing use different forms")
    genera = _parse_range(args.genus, "genus")
    parities = _parities(args.parity)
    combos = [(g, p) for g in genera for p in parities]
    rows = []
    for g, parity in combos:
        try:
            value = generating_loop_invariant(V, X, g, parity, args.curls)
        except InputError:
            if len(combos) == 1:
                raise
            continue
        rows.append(_row(name, "genus %d" % g, "%s curls=%d" % (parity, args.curls), value))
    _emit(rows, args.format, out)
    return 0


def _cmd_verify(args, out):
    model = load_model(args.model)
    failures = 0

    def check(label, thunk):
        nonlocal failures
        try:
            thunk()
        except (VerificationError, ValueError, InputError) as e:
            failures += 1
            out.write("%s: FAIL (%s)\n" % (label, e))
            return
        out.write("%s: ok\n" % label)

    for name, alg in model.algebras.items():
        check("algebra %r" % name, lambda a=alg: (a.validate_associative(), a.validate_unit()))
    for name, F in model.frobenius.items():
        check(
            "frobenius %r" % name,
            lambda f=F: (verify_frobenius_identities(f), verify_separability(f), verify_pachner(f)),
        )
    for name, I in model.involutions.items():
        check("involution %r" % name, lambda i=I: verify_w_identities(i))
    for name, X in model.crossings.items():
        def crossing_suite(x=X):
            report = verify_crossing_axioms(x)
            failed = [k for k in REQUIRED_AXIOMS if not report.get(k, False)]
            if failed:
                raise VerificationError("axioms failed: %s" % ", ".join(failed))
        check("crossing %r" % name, crossing_suite)
    for name, V in model.bimodules.items():
        def bimodule_suite(v=V):
            report = verify_bimodule(v)
            failed = [k for k in ("H1", "H2", "spherical") if not report[k]]
            if failed:
                raise VerificationError("axioms failed: %s" % ", ".join(failed))
        check("bimodule %r" % name, bimodule_suite)
    if failures:
        out.write("%d entities failed\n" % failures)
        return 1
    out.write("all entities verified\n")
    return 0


# -- parser ------------------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(prog="spinsum", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, model=True, fmt=True):
        if model:
            p.add_argument("--model", required=True, help="model description file (JSON)")
        if fmt:
            p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = sub.add_parser("evaluate", help="contract an explicit triangulation")
    add_common(p)
    p.add_argument("--frobenius", help="frobenius entry name")
    p.add_argument("--involution", help="involution entry name (unoriented surfaces)")
    p.add_argument("--genus", help="oriented genus range, e.g. 0..3")
    p.add_argument("--crosscaps", help="crosscap range for unoriented surfaces")
    p.add_argument("--cap", type=int, default=None, help="multiplication budget")
    p.set_defaults(func=_cmd_evaluate)

    p = sub.add_parser("closed", help="closed-form oriented partition functions")
    add_common(p)
    p.add_argument("--frobenius", help="frobenius entry name")
    p.add_argument("--genus", required=True)
    p.set_defaults(func=_cmd_closed)

    p = sub.add_parser("km", help="closed-form unoriented partition functions")
    add_common(p)
    p.add_argument("--involution", help="involution entry name")
    p.add_argument("--crosscaps", required=True)
    p.set_defaults(func=_cmd_km)

    p = sub.add_parser("spin", help="crossing verification, invariants, searches")
    spin_sub = p.add_subparsers(dest="spin_command", required=True)

    q = spin_sub.add_parser("verify", help="report every crossing axiom")
    q.add_argument("--model", required=True)
    q.add_argument("--crossing", help="crossing entry name")
    q.set_defaults(func=_cmd_spin_verify)

    q = spin_sub.add_parser("invariant", help="spin partition functions")
    add_common(q)
    q.add_argument("--crossing", help="crossing entry name")
    q.add_argument("--genus", required=True)
    q.add_argument("--parity", default="both")
    q.set_defaults(func=_cmd_spin_invariant)

    q = spin_sub.add_parser("search", help="enumerate crossing families on C[Z_n]")
    q.add_argument("--cyclic", type=int, required=True, help="algebra dimension n")
    q.add_argument("--mode", choices=("ansatz", "full"), default="ansatz")
    q.add_argument("--format", choices=("csv", "json", "none"), default="none")
    q.set_defaults(func=_cmd_spin_search)

    p = sub.add_parser("arf", help="parity of a quadratic form")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--q", required=True, help="comma-separated values on a1,b1,a2,b2,...")
    p.set_defaults(func=_cmd_arf)

    p = sub.add_parser("defect", help="generating-loop invariants")
    defect_sub = p.add_subparsers(dest="defect_command", required=True)
    q = defect_sub.add_parser("invariant", help="genus table with one defect loop")
    add_common(q)
    q.add_argument("--crossing", help="crossing entry name")
    q.add_argument("--bimodule", help="bimodule entry name")
    q.add_argument("--sign", help="regular bimodule sign, 1 or -1")
    q.add_argument("--genus", required=True)
    q.add_argument("--parity", default="both")
    q.add_argument("--curls", type=int, choices=(0, 1), default=0)
    q.set_defaults(func=_cmd_defect_invariant)

    p = sub.add_parser("verify", help="run the full axiom suite over a model file")
    p.add_argument("--model", required=True)
    p.set_defaults(func=_cmd_verify)

    return parser


def run_command(argv, out=None):
    """Dispatch argv; returns the process exit code."""
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code in (0, None) else 2
    try:
        return args.func(args, out)
    except InputError as e:
        print("input error: %s" % e, file=sys.stderr)
        return 2
    except VerificationError as e:
        print("verification failure: %s" % e, file=sys.stderr)
        return 1
    except CapExceeded as e:
        print("budget exceeded: %s" % e, file=sys.stderr)
        return 3


def main():
    sys.exit(run_command(sys.argv[1:]))
