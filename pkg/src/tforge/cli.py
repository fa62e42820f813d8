"""Command-line entry point: ``tforge verify|transform|normalize|table``.

Every command builds a run report.  The report goes to stdout (as text, or
as JSON with ``--json``); progress and timing go to stderr.  Exit codes:

    0  every asserted check passed
    1  a check failed
    2  bad input (unparsable field or polynomial, wrong degree, ...)
    3  unsupported case (e.g. a sextic in characteristic 2)
    4  a generator search was exhausted
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time

from . import gf
from .domains import QQ, parse_field
from .polyring import PolySyntaxError
from .transform import (
    IrreducibilityUndecided,
    NotPowerOfIrreducible,
    SearchExhausted,
    TransformError,
    TransformNotIrreducible,
    UnsupportedCase,
)
from .unipoly import UniPoly

SCHEMA = "tforge.run-report/1"

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_UNSUPPORTED, EXIT_EXHAUSTED = 0, 1, 2, 3, 4

log = logging.getLogger("tforge")


class InputError(ValueError):
    pass


def _checks_ok(checks: dict) -> bool:
    return all(v["ok"] for v in checks.values())


# -- verify -------------------------------------------------------------------

def cmd_verify(args):
    from . import covariants as cov

    which = args.which
    say = log.info
    if which == "hermite":
        say("building the Hermite covariant and checking e1, e3 and the t-substitution")
        rep = cov.verify_hermite(strict=False)
        lead = rep["checks"]["leading term +-t^188"]
        rep["constants"] = {"leading_exponent": lead["exponent"],
                            "leading_coefficient": lead["coefficient"]}
    elif which == "joubert":
        say("building the Joubert covariant and its elementary functions")
        rep = cov.verify_joubert(strict=False)
        c = rep["checks"]["e5(psi) == +-2^s * Delta"]
        rep["constants"] = {"e5_constant": c["constant"], "sign": c["sign"], "s": c["s"],
                            "s5_phi_over_delta6": rep.pop("s5(phi) = c * Delta^6")}
    elif which == "s4":
        rep = cov.verify_s4(recompute=args.recompute, progress=say, strict=False,
                            seed=args.seed)
    elif which == "conditions-tr":
        rep = cov.verify_conditions_tr(strict=False)
    else:
        rep = cov.verify_group_facts(strict=False)
    ok = rep.pop("ok")
    return {"which": which, **{k: v for k, v in rep.items() if k != "which"}}, ok


# -- transform ----------------------------------------------------------------

def _parse_inputs(field_text, poly_text):
    try:
        K = parse_field(field_text)
    except ValueError as exc:
        raise InputError(f"bad field descriptor: {exc}") from exc
    if K.characteristic == 0 and K != QQ:
        raise InputError("the field must be Q or a finite field")
    if poly_text is None:
        return K, None
    try:
        f = UniPoly.parse(poly_text, K, "x")
    except (PolySyntaxError, ValueError, TypeError) as exc:
        raise InputError(f"cannot parse polynomial {poly_text!r}: {exc}") from exc
    return K, f


def _decompose(fbar):
    from .transform import power_of_irreducible_decompose

    try:
        h, m = power_of_irreducible_decompose(fbar)
    except NotPowerOfIrreducible as exc:
        out = {"h": None, "m": None, "reason": str(exc)}
        if hasattr(fbar.domain, "order"):
            from .transform import factor_degrees

            out["factor_degrees"] = factor_degrees(fbar)
        return out
    except IrreducibilityUndecided as exc:
        return {"h": None, "m": None, "reason": str(exc)}
    return {"h": h.format("y"), "m": m}


def _is_irreducible(f):
    from .transform import is_irreducible_over

    try:
        return is_irreducible_over(f)
    except IrreducibilityUndecided:
        return None


def cmd_transform(args):
    from .transform import hermite_form, joubert_image, transformed_polynomial

    K, f = _parse_inputs(args.field, args.poly)
    n = 5 if args.covariant == "hermite" else 6
    if f.degree() != n:
        raise InputError(f"the {args.covariant} covariant needs degree {n}, got {f.degree()}")
    if not f.is_monic():
        raise InputError("polynomial must be monic")
    if not f.is_squarefree():
        raise InputError("polynomial is not separable")
    if args.covariant == "joubert" and K.characteristic == 2:
        raise UnsupportedCase("CHAR2_UNSUPPORTED",
                              "the Joubert covariant degenerates in characteristic 2")
    irreducible = _is_irreducible(f)
    if args.covariant == "hermite":
        log.info("loading the Hermite Tschirnhaus form")
        tf = hermite_form()
        phi = tf.specialize(f)
        phi_text = phi.format("x")
    else:
        tf = joubert_image()
        phi_text = None
    fbar = transformed_polynomial(f, tf)
    checks = {
        "a1(f_bar) == 0": {"ok": not fbar[n - 1]},
        "a3(f_bar) == 0": {"ok": not fbar[n - 3]},
    }
    decomposition = _decompose(fbar)
    if args.covariant == "hermite" and irreducible:
        # an irreducible input must give a power of an irreducible polynomial
        checks["f_bar = h^m with h irreducible"] = {"ok": decomposition["h"] is not None}
    results = {
        "field": K.descriptor,
        "f": f.format("x"),
        "f_irreducible": irreducible,
        "covariant": args.covariant,
        "f_bar": fbar.format("y"),
        "decomposition": decomposition,
        "phi": phi_text,
        "checks": checks,
    }
    if args.covariant == "joubert":
        results["note"] = ("the Joubert covariant is twisted by the outer automorphism of S6: "
                           "its values are not elements of K[x]/(f), so there is no phi(f, x) "
                           "and f_bar need not be a power of an irreducible polynomial")
    return results, _checks_ok(checks)


# -- normalize ----------------------------------------------------------------

def _default_input(K, n):
    if K == QQ:
        return UniPoly(QQ, [-2] + [0] * (n - 1) + [1])  # Eisenstein at 2
    return gf.first_irreducible(K, n)


def cmd_normalize(args):
    from . import transform as T

    K, f = _parse_inputs(args.field, args.poly)
    if f is None and args.degree is None:
        raise InputError("give --poly or --degree")
    n = args.degree if f is None else f.degree()
    if args.degree is not None and n != args.degree:
        raise InputError(f"--degree {args.degree} does not match the polynomial of degree {n}")
    if n not in (3, 4, 5, 6):
        raise InputError(f"degree must be 3, 4, 5 or 6, got {n}")
    if f is None:
        f = _default_input(K, n)
        log.info("using the input polynomial %s", f.format("x"))
    if K.characteristic == 2 and n == 6:
        raise UnsupportedCase("CHAR2_UNSUPPORTED",
                              "the sextic normal form is not available in characteristic 2")
    if n == 3:
        eq = T.normalize_cubic(f)
    elif n == 4:
        eq = T.normalize_quartic(f)
    elif n == 5:
        eq = T.normalize_quintic(f, max_candidates=args.max_candidates)
    else:
        try:
            eq = T.normalize_sextic(f, fallback="search" if args.search else None)
        except TransformNotIrreducible as exc:
            results = {"field": K.descriptor, "original": f.format("x"),
                       "joubert_image": exc.image.format("y"),
                       "factor_degrees": exc.factor_degrees,
                       "checks": {"Joubert image irreducible": {"ok": False}},
                       "hint": "rerun with --search to look for another generator"}
            return results, False
    results = eq.to_json()
    v = eq.verify()
    results["checks"] = {
        "shape": {"ok": v["shape_ok"]},
        "irreducible": {"ok": v["irreducible"]},
        "witness charpoly equals the normalized polynomial": {
            "ok": v["witness_charpoly_matches"] or not eq.witness},
    }
    return results, _checks_ok(results["checks"])


# -- table --------------------------------------------------------------------

def cmd_table(args):
    entries = None
    if args.fixture:
        try:
            with open(args.fixture) as fh:
                entries = [tuple(e) for e in json.load(fh)]
        except (OSError, ValueError) as exc:
            raise InputError(f"cannot read table fixture: {exc}") from exc
    try:
        rep = gf.verify_quintic_table(entries, include_exception=entries is None)
    except (PolySyntaxError, ValueError) as exc:
        raise InputError(f"bad table entry: {exc}") from exc
    ok = rep.pop("ok")
    return rep, ok


# -- report plumbing ------------------------------------------------------------

def _render_text(report, out):
    res = report["results"]
    checks = res.get("checks", {})
    for name, v in checks.items():
        extra = {k: x for k, x in v.items() if k != "ok"}
        tail = f"  {json.dumps(extra)}" if extra else ""
        print(f"{'PASS' if v['ok'] else 'FAIL'}  {name}{tail}", file=out)
    for row in res.get("entries", []):
        ok = row["irreducible"] and row["shape_ok"]
        print(f"{'PASS' if ok else 'FAIL'}  {row['field']}: {row['polynomial']}"
              f"  irreducible={row['irreducible']} shape_ok={row['shape_ok']}", file=out)
    if "exception" in res:
        e = res["exception"]
        print(f"{'PASS' if e['irreducible'] else 'FAIL'}  {e['field']}: {e['polynomial']}"
              " (exception)", file=out)
    if "passed" in res:
        print(f"{res['passed']}/{res['total']} entries verified", file=out)
    for key, val in res.items():
        if key in ("checks", "entries", "exception", "passed", "total"):
            continue
        text = json.dumps(val) if isinstance(val, (dict, list)) else val
        print(f"{key}: {text}", file=out)
    if "error" in report:
        print(f"error: {report['error']}", file=out)
    print(f"status: {report['status']} (exit {report['exit_code']})", file=out)


COMMANDS = {"verify": cmd_verify, "transform": cmd_transform,
            "normalize": cmd_normalize, "table": cmd_table}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print the report as JSON")
    common.add_argument("--timing", action="store_true",
                        help="include wall time in the JSON report (breaks byte-identity)")
    common.add_argument("--seed", type=int, default=0,
                        help="seed for randomized checks (default 0)")
    common.add_argument("--quiet", action="store_true", help="no progress on stderr")

    p = argparse.ArgumentParser(prog="tforge", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", parents=[common], help="run an exact identity suite")
    v.add_argument("which", choices=["hermite", "joubert", "s4", "conditions-tr", "group-facts"])
    v.add_argument("--recompute", action="store_true",
                   help="s4: redo the exact division instead of checking the archived S4")

    t = sub.add_parser("transform", parents=[common], help="apply a covariant to a polynomial")
    t.add_argument("--field", required=True, help='e.g. Q, "GF(7)", "GF(9)", "GF(2^3)"')
    t.add_argument("--poly", required=True, help='monic polynomial in x, e.g. "x^5-x-1"')
    t.add_argument("--covariant", required=True, choices=["hermite", "joubert"])

    n = sub.add_parser("normalize", parents=[common], help="normal form of degree 3 to 6")
    n.add_argument("--field", required=True, help='coefficient field, e.g. Q or "GF(41)"')
    n.add_argument("--poly", help="irreducible polynomial in x")
    n.add_argument("--degree", type=int,
                   help="degree; without --poly the first irreducible polynomial is used")
    n.add_argument("--search", action="store_true",
                   help="sextics: search other generators when the Joubert image factors")
    n.add_argument("--max-candidates", type=int, default=None,
                   help="quintics: give up after this many generators")

    tb = sub.add_parser("table", parents=[common], help="re-verify the table of quintics")
    tb.add_argument("--fixture", help="JSON list of [q, polynomial] pairs to check instead")
    return p


def _inputs_echo(args):
    skip = {"json", "timing", "quiet", "command"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(stream=sys.stderr, format="tforge: %(message)s",
                        level=logging.WARNING if args.quiet else logging.INFO)
    start = time.perf_counter()
    report = {"schema": SCHEMA, "command": args.command, "inputs": _inputs_echo(args)}
    try:
        results, ok = COMMANDS[args.command](args)
        report["results"] = results
        code = EXIT_OK if ok else EXIT_FAIL
    except (InputError, TransformError) as exc:
        report["error"], code = str(exc), EXIT_INPUT
    except (UnsupportedCase, IrreducibilityUndecided) as exc:
        report["error"], code = str(exc), EXIT_UNSUPPORTED
        report["error_code"] = getattr(exc, "code", "UNDECIDED")
    except SearchExhausted as exc:
        report["error"], code = str(exc), EXIT_EXHAUSTED
    report.setdefault("results", {})
    report["status"] = {EXIT_OK: "ok", EXIT_FAIL: "fail"}.get(code, "error")
    report["exit_code"] = code
    elapsed = time.perf_counter() - start
    if args.timing:
        report["wall_time"] = round(elapsed, 3)
    log.info("wall time %.2f s", elapsed)
    if args.json:
        print(json.dumps(report, indent=2))
    else:
        _render_text(report, sys.stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())
