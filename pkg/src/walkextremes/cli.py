"""Command-line interface: ``walkextremes <command> ...``.

Exact probabilities are emitted as numerator/denominator strings next to a
convenience float.  Exit codes: 0 success, 1 failed verification or method
disagreement, 2 invalid flags.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from fractions import Fraction

from . import asymptotics, cycles, extrema_joint, montecarlo, reflect_strong, reflect_weak, verify
from .errors import MethodDisagreement, WalkError
from .exactnum import as_rational
from .walkcore import JointPmf, Mode, Pmf, WalkParams, pmf_moments

SCHEMA_VERSION = "1"
STATS = ("max", "min", "joint", "maxabs", "strong", "weak")
METHODS = ("auto", "all", "matrix", "recurrence", "series", "band", "reflection")


class UsageError(Exception):
    pass


def _rational(text: str) -> Fraction:
    try:
        return as_rational(text)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _rat_json(x) -> dict:
    x = Fraction(x)
    return {"num": str(x.numerator), "den": str(x.denominator)}


def _num_json(x):
    if isinstance(x, Fraction):
        return {**_rat_json(x), "float": float(x)}
    if x is None:
        return None
    return {"float": float(x)}


def _params(args, mode: Mode = Mode.PLAIN) -> WalkParams:
    p = args.p
    r = args.r or Fraction(0)
    return WalkParams(p, 1 - p - r, r, mode=mode, allow_upward_drift=getattr(args, "allow_upward_drift", False))


# --------------------------------------------------------------------------
# pmf computation with method dispatch

def _methods_for(stat: str, params: WalkParams) -> tuple:
    lazy = params.r != 0
    if stat in ("strong", "weak"):
        return ("matrix", "recurrence") if lazy else ("matrix", "recurrence", "series")
    if stat in ("max", "min"):
        return ("band",) if lazy else ("reflection", "band")
    if stat == "joint":
        return ("band",) if lazy else ("recurrence", "band")
    return ("band",)


def _compute(stat: str, n: int, params: WalkParams, method: str, arith: str):
    if stat in ("strong", "weak"):
        mod = reflect_strong if stat == "strong" else reflect_weak
        mode = Mode.STRONG if stat == "strong" else Mode.WEAK
        fn = mod.strong_pmf if stat == "strong" else mod.weak_pmf
        return fn(n, params.with_mode(mode), method=method, arithmetic=arith)
    if arith == "float" and stat != "maxabs":
        raise UsageError(f"--arith float is only available for strong, weak and maxabs, not {stat}")
    if stat in ("max", "min"):
        side = "plus" if stat == "max" else "minus"
        return extrema_joint.marginal_max_pmf(n, side, params, method=method)
    if stat == "joint":
        return extrema_joint.joint_pmf(n, params, method=method)
    if method not in ("auto", "band"):
        raise UsageError("maxabs is computed by the band method only")
    return extrema_joint.max_abs_pmf(n, params, arithmetic=arith or "exact")


def _diff(a, b) -> dict:
    ka = dict(a.entries) if isinstance(a, JointPmf) else a.as_dict()
    kb = dict(b.entries) if isinstance(b, JointPmf) else b.as_dict()
    out = {}
    for k in sorted(set(ka) | set(kb)):
        x, y = ka.get(k, 0), kb.get(k, 0)
        if x != y:
            out[str(k)] = [str(x), str(y)]
    return out


def compute_pmf(stat: str, n: int, params: WalkParams, method: str = "auto", arith: str | None = None):
    """Compute the requested law; ``method="all"`` runs every method and compares."""
    if method != "all":
        if method != "auto" and method not in _methods_for(stat, params):
            raise UsageError(f"method {method!r} is not available for {stat} with these parameters")
        return _compute(stat, n, params, method, arith)
    if arith == "float":
        raise UsageError("--method all compares exact results; drop --arith float")
    names = _methods_for(stat, params)
    results = {m: _compute(stat, n, params, m, "exact") for m in names}
    first = names[0]
    for m in names[1:]:
        if results[m] != results[first]:
            raise MethodDisagreement(f"{first} and {m} disagree", diff=_diff(results[first], results[m]))
    return results[first]


def _pmf_rows(law) -> list:
    rows = []
    if isinstance(law, JointPmf):
        items = sorted(law.entries.items())
    else:
        items = list(law.items())
    for value, prob in items:
        row = {"value": list(value) if isinstance(value, tuple) else value}
        if isinstance(prob, Fraction):
            row.update(prob_num=str(prob.numerator), prob_den=str(prob.denominator), prob_float=float(prob))
        else:
            row.update(prob_num=None, prob_den=None, prob_float=float(prob))
        rows.append(row)
    return rows


def _csv(rows: list) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["value", "prob_num", "prob_den", "prob_float"])
    for r in rows:
        v = r["value"]
        value = ":".join(map(str, v)) if isinstance(v, list) else v
        w.writerow([value, r["prob_num"] or "", r["prob_den"] or "", repr(r["prob_float"])])
    return buf.getvalue()


def _record(args, argv, params: dict, results: dict) -> dict:
    return {"schema_version": SCHEMA_VERSION, "command": list(argv), "params": params, "results": results}


def _walk_json(params: WalkParams) -> dict:
    return {"p": _rat_json(params.p), "q": _rat_json(params.q), "r": _rat_json(params.r)}


# --------------------------------------------------------------------------
# commands

def cmd_pmf(args, argv):
    params = _params(args)
    law = compute_pmf(args.stat, args.n, params, args.method, args.arith)
    rows = _pmf_rows(law)
    if args.format == "csv":
        return _csv(rows)
    return _record(args, argv, {"stat": args.stat, "n": args.n, **_walk_json(params)}, {"rows": rows})


_PREDICT = {
    "max": lambda p: "symmetric-max" if p.p == p.q else "asymmetric-max",
    "min": lambda p: "symmetric-max" if p.p == p.q else "asymmetric-min",
    "joint": lambda p: "symmetric-cross" if p.p == p.q else "asymmetric-cross",
    "strong": lambda p: "lazy-reflected" if p.r else "reflected",
    "weak": lambda p: "lazy-reflected" if p.r else "reflected",
}


def cmd_moments(args, argv):
    params = _params(args)
    law = compute_pmf(args.stat, args.n, params, args.method, args.arith)
    if isinstance(law, JointPmf):
        plus = pmf_moments(law.marginal("plus"))
        results = {
            "mean": _num_json(plus.mean),
            "second_moment": _num_json(plus.second_moment),
            "variance": _num_json(plus.variance),
            "cross_moment": _num_json(law.cross_moment()),
        }
    else:
        m = pmf_moments(law)
        results = {"mean": _num_json(m.mean), "second_moment": _num_json(m.second_moment), "variance": _num_json(m.variance)}
    if args.predict:
        pred = None
        if args.stat in _PREDICT:
            mode = {"strong": Mode.STRONG, "weak": Mode.WEAK}.get(args.stat, Mode.PLAIN)
            regime = _PREDICT[args.stat](params)
            try:
                m = asymptotics.predict_moments(regime, args.n, params.with_mode(mode))
                pred = {"regime": regime, "mean": float(m.mean), "second_moment": float(m.second_moment)}
                if m.cross_moment is not None:
                    pred["cross_moment"] = float(m.cross_moment)
            except WalkError as exc:
                pred = {"regime": regime, "error": str(exc)}
        results["predicted"] = pred
    return _record(args, argv, {"stat": args.stat, "n": args.n, **_walk_json(params)}, results)


def cmd_cycle(args, argv):
    params = _params(args)
    m = cycles.cycle_max_moments(params)
    results = {
        "mean": m.mean,
        "second_moment": m.second_moment,
        "terms": m.terms,
        "lambert_auxiliary": cycles.lambert_auxiliary(params),
        "cdf": [
            {"k": k, "cdf_below": _rat_json(c), "pmf": _rat_json(f)}
            for k in range(1, 11)
            for c, f in [cycles.cycle_max_distribution(k, params)]
        ],
    }
    if args.copies:
        results["copies"] = {
            "n": args.copies,
            "mean": cycles.record_of_copies_mean(args.copies, params, "tail"),
            "mean_pmf_route": cycles.record_of_copies_mean(args.copies, params, "pmf"),
        }
    if args.knuth:
        if params.p != Fraction(1, 3):
            raise UsageError("--knuth applies to p = 1/3")
        est = cycles.knuth_asymptotic(args.copies or 2**10)
        results["knuth"] = {
            "n": est.n,
            "exact_mean": est.exact_mean,
            "asymptotic_mean": est.asymptotic_mean,
            "residual": est.residual,
            "shifted_asymptotic": est.shifted_asymptotic,
            "shifted_residual": est.shifted_residual,
        }
    return _record(args, argv, _walk_json(params), results)


def cmd_constants(args, argv):
    g = asymptotics.catalan_constant(args.tol)
    half = WalkParams.from_p(Fraction(1, 3))
    results = {
        "catalan_G": {"value": g, "note": "alternating series 1 - 1/9 + 1/25 - ..., paired terms with iterated averaging"},
        "two_G": {"value": 2 * g, "note": "limit of E(M_n^2)/n for the symmetric reflected walk; equals the integral of t/cosh t"},
        "sqrt_pi_over_2": {"value": math.sqrt(math.pi / 2), "note": "limit of E(M_n)/sqrt(n) for the symmetric reflected walk"},
        "euler_gamma": {"value": cycles.euler_gamma(), "note": "H_N - ln N with Euler-Maclaurin terms, N = 1000"},
        "sum_1_over_2k_minus_1": {"value": cycles.cycle_max_moments(half).mean, "note": "E(M_T) at p = 1/3"},
        "sum_k_over_2k_minus_1": {"value": cycles.lambert_auxiliary(half), "note": "Lambert series used by E(M_T^2) at p = 1/3"},
    }
    return _record(args, argv, {"tol": args.tol}, results)


def cmd_probe(args, argv):
    fn = asymptotics.second_moment_probe if args.second_moment else asymptotics.sech_limit_probe
    target = 2 * asymptotics.catalan_constant() if args.second_moment else math.sqrt(math.pi / 2)
    value = fn(args.t, args.scenario)
    return _record(
        args,
        argv,
        {"scenario": args.scenario, "t": args.t, "second_moment": args.second_moment},
        {"value": value, "limit": target, "gap": value - target},
    )


def _sim_params(args):
    if args.variant == "persistent":
        if args.alpha is None:
            raise UsageError("--alpha is required for the persistent variant")
        return montecarlo.PersistentParams(args.alpha)
    if args.variant == "traffic":
        return WalkParams.traffic_light()
    r = args.r if args.r is not None else (Fraction(1, 3) if args.variant == "lazy" else Fraction(0))
    mode = {"plain": Mode.PLAIN, "strong": Mode.STRONG, "weak": Mode.WEAK, "lazy": Mode(args.reflect)}[args.variant]
    return WalkParams(args.p, 1 - args.p - r, r, mode=mode, allow_upward_drift=args.allow_upward_drift)


def cmd_simulate(args, argv):
    config = montecarlo.SimConfig(_sim_params(args), args.n, args.trials, args.seed)
    result = montecarlo.simulate(config, workers=args.workers)
    out = result.to_dict()
    return _record(args, argv, out.pop("config"), out)


def cmd_verify(args, argv):
    rows = verify.run_suite(args.suite)
    width = max(len(r[1]) for r in rows)
    lines = [f"{'suite':<13} {'check':<{width}} result"]
    for suite, check, ok, detail in rows:
        lines.append(f"{suite:<13} {check:<{width}} {'PASS' if ok else 'FAIL'} {detail}".rstrip())
    failed = sum(not r[2] for r in rows)
    lines.append(f"{len(rows) - failed}/{len(rows)} passed")
    return "\n".join(lines) + "\n", 1 if failed else 0


# --------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        _error("usage", message)
        self.exit(2)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="walkextremes", description="Exact laws of random-walk extremes.")
    parser.add_argument("--out", help="write output to FILE instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    def walk_flags(p, required=True):
        p.add_argument("--p", type=_rational, required=required, help="up-step probability, NUM/DEN")
        p.add_argument("--r", type=_rational, default=None, help="pause probability, NUM/DEN")
        p.add_argument("--allow-upward-drift", action="store_true")

    for name in ("pmf", "moments"):
        p = sub.add_parser(name)
        p.add_argument("--stat", choices=STATS, required=True)
        p.add_argument("--n", type=int, required=True)
        walk_flags(p)
        p.add_argument("--method", choices=METHODS, default="auto")
        p.add_argument("--arith", choices=("exact", "float"), default=None)
        if name == "pmf":
            p.add_argument("--format", choices=("json", "csv"), default="json")
        else:
            p.add_argument("--predict", action="store_true")

    p = sub.add_parser("cycle")
    walk_flags(p)
    p.add_argument("--copies", type=int, default=None)
    p.add_argument("--knuth", action="store_true")

    p = sub.add_parser("constants")
    p.add_argument("--tol", type=float, default=1e-12)

    p = sub.add_parser("probe")
    p.add_argument("--scenario", choices=("strong", "weak"), required=True)
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--second-moment", action="store_true")

    p = sub.add_parser("simulate")
    p.add_argument("--variant", choices=("plain", "strong", "weak", "lazy", "traffic", "persistent"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--alpha", type=float, default=None)
    p.add_argument("--p", type=_rational, default=Fraction(1, 2))
    p.add_argument("--r", type=_rational, default=None)
    p.add_argument("--reflect", choices=("plain", "strong", "weak"), default="weak", help="reflection for --variant lazy")
    p.add_argument("--allow-upward-drift", action="store_true")
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("verify")
    p.add_argument("--suite", choices=verify.SUITES + ("all",), required=True)
    return parser


COMMANDS = {
    "pmf": cmd_pmf,
    "moments": cmd_moments,
    "cycle": cmd_cycle,
    "constants": cmd_constants,
    "probe": cmd_probe,
    "simulate": cmd_simulate,
    "verify": cmd_verify,
}


def _error(kind: str, message: str, **extra) -> None:
    sys.stderr.write(json.dumps({"error": kind, "message": message, **extra}, sort_keys=True) + "\n")


def run(argv=None, stdout=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    code = 0
    try:
        out = COMMANDS[args.command](args, argv)
        if isinstance(out, tuple):
            out, code = out
    except MethodDisagreement as exc:
        _error("method-disagreement", str(exc), diff=exc.diff)
        return 1
    except (UsageError, WalkError, ValueError) as exc:
        _error(type(exc).__name__, str(exc))
        return 2
    text = out if isinstance(out, str) else json.dumps(out, sort_keys=True, indent=2) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return code


def main() -> None:
    sys.exit(run())
