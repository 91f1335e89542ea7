"""Command-line front end: ``dzeta eval|verify|gen-coeffs``.

Exit codes: 0 success, 2 refusal (the point lies outside the evaluator's
region or at a pole), 1 failure, internal error or malformed input.
"""

from __future__ import annotations

import argparse
import cmath
import contextlib
import io
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from importlib import resources

import numpy as np

from . import classical_zetas as cz
from . import coefficients as co
from . import double_series as ds
from . import fe_engine as fe
from . import oracle_quadrature as oq
from . import special_functions as sf
from .core import DzetaError, EvalPoint, PoleError, RefusedError, SeriesValue

SCHEMA = "dzeta-fe/1"
EXIT_OK, EXIT_FAIL, EXIT_REFUSED = 0, 1, 2
MAX_GRID_POINTS = 10_000


class InputError(ValueError):
    """Malformed command-line or config input."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_FAIL, f"{self.prog}: error: {message}\n")


# ------------------------------------------------------------------ parsing

def parse_complex(v) -> complex:
    if isinstance(v, (list, tuple)):
        if len(v) != 2:
            raise InputError(f"complex values are [re, im] pairs, got {v!r}")
        return complex(float(v[0]), float(v[1]))
    if isinstance(v, (int, float, complex)):
        return complex(v)
    text = str(v).strip().replace(" ", "").replace("i", "j")
    try:
        return complex(text)
    except ValueError as exc:
        raise InputError(f"cannot parse complex number {v!r}") from exc


def parse_sequence(spec):
    """const | exp:B | delta:N | periodic:a1,...,af | char:F:I | tau."""
    if isinstance(spec, co.CoefficientSequence):
        return spec
    if isinstance(spec, dict):
        spec = spec.get("spec", "")
    text = str(spec).strip()
    kind, _, rest = text.partition(":")
    kind = kind.lower()
    try:
        if kind in ("const", "one", "1"):
            return co.Constant()
        if kind == "exp":
            return co.Exponential(float(rest))
        if kind == "delta":
            return co.Delta(int(rest))
        if kind == "periodic":
            return co.Periodic(tuple(parse_complex(x) for x in rest.split(",")))
        if kind == "char":
            f, idx = rest.split(":")
            return co.dirichlet_character(int(f), int(idx))
        if kind in ("tau", "cusp"):
            return co.delta_sequence()
    except (ValueError, InputError) as exc:
        raise InputError(f"malformed sequence spec {text!r}: {exc}") from exc
    raise InputError(f"unknown sequence spec {text!r}")


def parse_range(text: str) -> np.ndarray:
    try:
        start, stop, step = (float(x) for x in text.split(":"))
    except ValueError as exc:
        raise InputError(f"grid ranges are start:stop:step, got {text!r}") from exc
    if step <= 0 or stop < start:
        raise InputError("grid needs step > 0 and stop >= start")
    n = int(math.floor((stop - start) / step + 1e-9)) + 1
    if n > MAX_GRID_POINTS:
        raise InputError(f"grid has {n} points (limit {MAX_GRID_POINTS})")
    return start + step * np.arange(n)


# --------------------------------------------------------------- serializing

def _plain(x):
    if isinstance(x, (complex, np.complexfloating)):
        return [_plain(float(x.real)), _plain(float(x.imag))]
    if isinstance(x, (bool, np.bool_)):
        return bool(x)
    if isinstance(x, (int, np.integer)):
        return int(x)
    if isinstance(x, (float, np.floating)):
        x = float(x)
        return x if math.isfinite(x) else None
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, np.ndarray)):
        return [_plain(v) for v in x]
    if isinstance(x, co.CoefficientSequence):
        return x.describe()
    if isinstance(x, co.CuspForm):
        return {"kind": "cuspform", "name": x.name}
    if x is None or isinstance(x, str):
        return x
    return repr(x)


def _write(x, indent: int) -> str:
    pad = "  " * (indent + 1)
    end = "  " * indent
    if isinstance(x, dict):
        if not x:
            return "{}"
        items = [f"{pad}{json.dumps(k)}: {_write(v, indent + 1)}" for k, v in x.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(x, list):
        if not x:
            return "[]"
        if all(not isinstance(v, (dict, list)) for v in x):
            return "[" + ", ".join(_write(v, indent) for v in x) + "]"
        return "[\n" + ",\n".join(pad + _write(v, indent + 1) for v in x) + "\n" + end + "]"
    if isinstance(x, bool) or x is None:
        return json.dumps(x)
    if isinstance(x, int):
        return str(x)
    if isinstance(x, float):
        text = format(x, ".17g")
        return text if any(ch in text for ch in ".en") else text + ".0"
    return json.dumps(x)


def dumps(obj) -> str:
    """Deterministic JSON: insertion key order, floats at 17 significant digits."""
    return _write(_plain(obj), 0)


def _emit(payload, args, csv_rows=None):
    if args.format == "csv" and csv_rows is not None:
        text = "\n".join(",".join(str(c) for c in row) for row in csv_rows) + "\n"
    else:
        text = dumps(payload) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -------------------------------------------------------------------- config

@dataclass
class RunConfig:
    command: str
    target: str = ""
    points: list = field(default_factory=list)
    params: dict = field(default_factory=dict)
    tol: float = 1e-8
    expect: str | None = None

    def __post_init__(self):
        if not 1e-14 <= self.tol <= 1e-2:
            raise InputError("tolerance must lie in [1e-14, 1e-2]")
        if len(self.points) > MAX_GRID_POINTS:
            raise InputError(f"at most {MAX_GRID_POINTS} points per run")


def _params_from(raw: dict) -> dict:
    out = {}
    for k, v in raw.items():
        if v is None:
            continue
        if k in ("sequence", "seq", "a1", "a2"):
            out["sequence" if k == "seq" else k] = parse_sequence(v)
        elif k in ("omega", "omega1", "omega2"):
            out[k] = parse_complex(v)
        elif k in ("alpha", "beta"):
            out[k] = float(v)
        else:
            out[k] = v
    return out


# ---------------------------------------------------------------------- eval

def _sv(v, name: str) -> SeriesValue:
    if isinstance(v, SeriesValue):
        return v
    # plain values carry no estimate; the error is reported as null
    return SeriesValue(complex(v), math.nan, route=name)


def _point(p) -> EvalPoint:
    return EvalPoint(parse_complex(p["s1"]), parse_complex(p["s2"]))


def _seq(p, default="const"):
    return parse_sequence(p.get("sequence", p.get("seq", default)))


def _eval_L2(p):
    s, seq = _point(p), _seq(p)
    alpha, omega = float(p.get("alpha", 1.0)), parse_complex(p.get("omega", 1.0))
    if p.get("continue"):
        return fe.L2_value(s, alpha, omega, seq)
    tol = float(p.get("tol", ds.DEFAULT_TOL))
    out = ds.L2_direct(s, ds.DoubleSeriesParams(alpha, omega, seq, target_tol=tol))
    if not out.ok:
        raise RefusedError(f"truncation tail {out.error:.3g} exceeds target tolerance")
    return out


def _eval_H(p):
    seq = _seq(p, "tau")
    form = seq.form if isinstance(seq, co.CuspFormSequence) else None
    if form is None:
        raise InputError("H needs a cusp-form sequence (tau)")
    return fe.H_pm(int(p.get("sign", 1)), _point(p), float(p.get("alpha", 1.0)),
                   parse_complex(p.get("omega", 1.0)), form.tilde() if form.level > 1 else form,
                   form.level)


def _eval_cusp(p):
    seq = _seq(p, "tau")
    return oq.cusp_form_eval(parse_complex(p["tau"]), seq.form)


EVALUATORS = {
    "psi": lambda p: sf.psi(parse_complex(p["a"]), parse_complex(p["c"]), parse_complex(p["x"])),
    "gamma": lambda p: sf.gamma(parse_complex(p["s"])),
    "zeta": lambda p: cz.riemann_zeta(parse_complex(p["s"])),
    "hurwitz": lambda p: cz.hurwitz_zeta(parse_complex(p["s"]), float(p.get("alpha", 1.0))),
    "lerch": lambda p: cz.lerch_phi(parse_complex(p["s"]), float(p.get("alpha", 0.0))),
    "L": lambda p: cz.sequence_L(parse_complex(p["s"]), _seq(p)),
    "L2": _eval_L2,
    "zeta2": lambda p: ds.zeta2_hl_two_omega(
        _point(p), float(p.get("alpha", 1.0)), float(p.get("beta", 0.0)),
        parse_complex(p.get("omega1", 1.0)), parse_complex(p.get("omega2", 1.0))),
    "F": lambda p: fe.F_pm(int(p.get("sign", 1)), _point(p), float(p.get("alpha", 1.0)),
                           parse_complex(p.get("omega", 1.0)), _seq(p)),
    "F0": lambda p: fe.F0_pm(int(p.get("sign", 1)), _point(p), float(p.get("alpha", 1.0)),
                             parse_complex(p.get("omega", 1.0)), _seq(p)),
    "H": _eval_H,
    "xi": lambda p: fe.xi_func(_point(p), parse_complex(p.get("omega1", 1.0)),
                               parse_complex(p.get("omega2", 1.0))),
    "g": lambda p: fe.g_func(_point(p), float(p.get("alpha", 1.0)), float(p.get("beta", 1.0)),
                             parse_complex(p.get("omega", 1.0))),
    "lambda": lambda p: oq.L2_by_integral(_point(p), float(p.get("alpha", 1.0)),
                                          parse_complex(p.get("omega", 1.0)), _seq(p)),
    "cusp": _eval_cusp,
}


def run_eval(name: str, p: dict) -> dict:
    """One evaluation as a JSON-ready record; raises on refusal."""
    if name not in EVALUATORS:
        raise InputError(f"unknown function {name!r}; choose from {sorted(EVALUATORS)}")
    try:
        v = _sv(EVALUATORS[name](p), name)
    except KeyError as exc:
        raise InputError(f"{name} needs argument {exc.args[0]!r}") from exc
    return {"value": complex(v.value), "error": v.error, "route": v.route, "status": v.status}


# -------------------------------------------------------------- extra checks

def _kummer(pt, p, tol):
    a, c, x = (parse_complex(p[k]) for k in ("a", "c", "x"))
    left = sf.psi(a, c, x)
    right = sf.psi(a - c + 1, 2 - c, x)
    fac = cmath.exp((1 - c) * cmath.log(x))
    return left, SeriesValue(fac * right.value, abs(fac) * right.error, route=right.route)


def _psi_asymptotic(pt, p, tol):
    a, c, x = (parse_complex(p[k]) for k in ("a", "c", "x"))
    quad = sf.psi(a, c, x, sf.PsiEvalConfig(crossover_magnitude=math.inf))
    asym, proxy = sf.psi_asymptotic_polar(a, c, abs(x), cmath.phase(x), 200)
    return quad, SeriesValue(complex(asym[0]), float(proxy[0]), route="asymptotic")


def _oracle(pt, p, tol):
    s = EvalPoint(*pt)
    seq = _seq(p)
    alpha, omega = float(p.get("alpha", 1.0)), parse_complex(p.get("omega", 1.0))
    lhs = ds.L2_series(s, alpha, omega, seq)
    return lhs, SeriesValue(oq.L2_by_integral(s, alpha, omega, seq), 0.0, route="quadrature")


def _modular(pt, p, tol):
    tau = pt[0]
    form = _seq(p, "tau").form
    lhs = (math.sqrt(form.level) * tau) ** (-form.weight) * oq.cusp_form_eval(
        -1 / (form.level * tau), form)
    return (SeriesValue(lhs, 0.0, route="q-expansion at -1/(N tau)"),
            SeriesValue(oq.cusp_form_eval(tau, form, tilde=True), 0.0, route="q-expansion"))


def _psi_exact(pt, p, tol):
    a, x = parse_complex(p["a"]), parse_complex(p["x"])
    return (sf.psi(a, a + 1, x),
            SeriesValue(cmath.exp(-a * cmath.log(x)), 0.0, route="closed form"))


def _tau(pt, p, tol):
    n = int(pt[0].real)
    return (SeriesValue(complex(co.ramanujan_tau(n)[-1]), 0.0, route="pentagonal recursion"),
            SeriesValue(complex(oq.eta_product_coefficients(n)[-1]), 0.0, route="eta product"))


EXTRA_CHECKS = {"Kummer": _kummer, "Psi-asymptotic": _psi_asymptotic, "Psi-exact": _psi_exact,
                "Oracle": _oracle, "Modular": _modular, "Tau": _tau}


def run_check(theorem: str, point, params: dict, tol: float) -> fe.FEReport:
    """One report; ``point`` lists coordinates, each a number, string or [re, im]."""
    if not isinstance(point, (list, tuple)):
        point = [point]
    pt = tuple(parse_complex(v) for v in point)
    if theorem in EXTRA_CHECKS:
        try:
            lhs, rhs = EXTRA_CHECKS[theorem](pt, params, tol)
        except RefusedError as exc:
            return fe.FEReport.refused(theorem, pt, params, tol, exc.reason)
        except DzetaError as exc:
            return fe.FEReport.refused(theorem, pt, params, tol, str(exc), "error")
        return fe.FEReport.from_sides(theorem, pt, params, tol, lhs, rhs)
    if theorem not in fe.THEOREMS:
        raise InputError(f"unknown theorem {theorem!r}; choose from "
                         f"{list(fe.THEOREMS) + list(EXTRA_CHECKS)}")
    return fe.verify(theorem, pt, params, tol)


def _outcome(rep: fe.FEReport, expect: str | None) -> str:
    """pass / fail / refused; ``expect="mismatch"`` marks a documented
    discrepancy of the stated identity, reported separately from failures."""
    refused = rep.status in ("refused", "pole")
    if expect == "mismatch":
        return "fail" if refused or rep.passed else "known-mismatch"
    if expect == "refused":
        return "pass" if refused else "fail"
    if refused:
        return "fail" if expect == "pass" else "refused"
    return "pass" if rep.passed else "fail"


def _run_argv(case: dict) -> dict:
    """A full CLI invocation; refusal means exit 2 with a named reason."""
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf), contextlib.redirect_stderr(io.StringIO()):
        code = main(list(case["argv"]))
    rec = {"argv": case["argv"], "exit": code}
    try:
        out = json.loads(buf.getvalue())
        reason = out.get("refusal_reason") or next(
            (r.get("refusal_reason") for r in out.get("reports", []) if r.get("refusal_reason")),
            None)
    except (ValueError, AttributeError):
        reason = None
    rec["refusal_reason"] = reason
    refused = code == EXIT_REFUSED and bool(reason)
    if case.get("expect") == "refused":
        rec["outcome"] = "pass" if refused else "fail"
    else:
        rec["outcome"] = {EXIT_OK: "pass", EXIT_REFUSED: "refused"}.get(code, "fail")
    return rec


def _run_case(case: dict) -> dict:
    expect = case.get("expect")
    if "argv" in case:
        return _run_argv(case)
    if "eval" in case:
        name = case["eval"]
        args = dict(case.get("args", {}))
        rec = {"eval": name, "args": args}
        try:
            rec.update(run_eval(name, args))
            got = "value"
        except (RefusedError, PoleError) as exc:
            rec.update(status="refused", refusal_reason=str(exc))
            got = "refused"
        except (DzetaError, InputError) as exc:
            rec.update(status="error", refusal_reason=str(exc))
            got = "error"
        if expect == "refused":
            rec["outcome"] = "pass" if got == "refused" else "fail"
        else:
            rec["outcome"] = {"value": "pass", "refused": "refused", "error": "fail"}[got]
        return rec
    params = _params_from(case.get("params", {}))
    tol = float(case.get("tol", 1e-8))
    rep = run_check(case["theorem"], case["point"], params, tol)
    out = rep.to_dict()
    out["outcome"] = _outcome(rep, expect)
    if case.get("label"):
        out["label"] = case["label"]
    return out


def load_suite(name: str) -> list[dict]:
    if os.path.exists(name):
        with open(name) as fh:
            data = json.load(fh)
        return data["cases"] if isinstance(data, dict) else data
    base = resources.files("dzeta") / "suites"
    if name == "all":
        index = json.loads((base / "all.json").read_text())
        cases = []
        for sub in index["include"]:
            cases.extend(load_suite(sub))
        return cases
    path = base / f"{name}.json"
    if not path.is_file():
        raise InputError(f"unknown suite {name!r}")
    return json.loads(path.read_text())["cases"]


def run_cases(cases: list[dict]) -> tuple[list[dict], dict]:
    threads = max(1, int(os.environ.get("DZETA_THREADS", "1") or 1))
    if threads > 1:
        with ThreadPoolExecutor(threads) as pool:
            results = list(pool.map(_run_case, cases))
    else:
        results = [_run_case(c) for c in cases]
    summary = {"pass": 0, "fail": 0, "refused": 0, "known-mismatch": 0}
    for r in results:
        summary[r["outcome"]] += 1
    return results, summary


def _verify_exit(summary: dict) -> int:
    if summary["fail"]:
        return EXIT_FAIL
    if summary["refused"] and not summary["pass"]:
        return EXIT_REFUSED
    return EXIT_OK


# ---------------------------------------------------------------------- CLI

def _common(p):
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out", help="write output to PATH instead of stdout")
    p.add_argument("--config", help="JSON file with default arguments")


def _point_flags(p):
    for name in ("s", "s1", "s2", "a", "c", "x", "tau", "omega", "omega1", "omega2"):
        p.add_argument(f"--{name}")
    p.add_argument("--alpha", type=float)
    p.add_argument("--beta", type=float)
    p.add_argument("--seq", dest="sequence")
    p.add_argument("--sign", type=int, choices=(1, -1))


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dzeta", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    pe = sub.add_parser("eval", help="evaluate a function at a point")
    pe.add_argument("function", help=f"one of {', '.join(sorted(EVALUATORS))}")
    _point_flags(pe)
    pe.add_argument("--tol", type=float)
    pe.add_argument("--continue", dest="continue_", action="store_true",
                    help="L2: continue outside the convergence region")
    _common(pe)

    pv = sub.add_parser("verify", help="check functional equations")
    pv.add_argument("theorem", nargs="?",
                    help=f"one of {', '.join(list(fe.THEOREMS) + list(EXTRA_CHECKS))}")
    _point_flags(pv)
    pv.add_argument("--suite", help="bundled suite name, 'all', or a JSON path")
    pv.add_argument("--k", type=int, help="hyperplane index")
    pv.add_argument("--parity", choices=(fe.ODD_SUM, fe.EVEN_SUM))
    pv.add_argument("--grid", help="start:stop:step for Re s1 (s2 from --k or --s2)")
    pv.add_argument("--t1", type=float, default=0.0, help="Im s1 for grid points")
    pv.add_argument("--a1")
    pv.add_argument("--a2")
    pv.add_argument("--form", choices=("general", "special"))
    pv.add_argument("--corrected", action="store_true")
    pv.add_argument("--tol", type=float, default=1e-8)
    pv.add_argument("--expect", choices=("pass", "refused", "mismatch"))
    _common(pv)

    pg = sub.add_parser("gen-coeffs", help="dump coefficient tables")
    pg.add_argument("kind", choices=("tau", "character", "fourier"))
    pg.add_argument("--max", type=int, default=10)
    pg.add_argument("--mod", type=int)
    pg.add_argument("--index", type=int)
    pg.add_argument("--seq", dest="sequence")
    _common(pg)
    return parser


def _apply_config(args):
    if not args.config:
        return
    with open(args.config) as fh:
        cfg = json.load(fh)
    for k, v in cfg.items():
        k = k.replace("-", "_")
        if getattr(args, k, None) in (None, False):
            setattr(args, k, v)


def _cmd_eval(args) -> int:
    keys = ("s", "s1", "s2", "a", "c", "x", "tau", "omega", "omega1", "omega2", "alpha",
            "beta", "sequence", "sign", "tol")
    p = {k: getattr(args, k) for k in keys if getattr(args, k, None) is not None}
    if args.continue_:
        p["continue"] = True
    try:
        rec = run_eval(args.function, p)
    except (RefusedError, PoleError) as exc:
        payload = {"schema": SCHEMA, "command": "eval", "function": args.function, "args": p,
                   "status": "refused", "refusal_reason": str(exc)}
        _emit(payload, args, [["function", "status", "reason"],
                              [args.function, "refused", str(exc).replace(",", ";")]])
        return EXIT_REFUSED
    payload = {"schema": SCHEMA, "command": "eval", "function": args.function, "args": p, **rec}
    v = rec["value"]
    _emit(payload, args, [["function", "re", "im", "error", "route"],
                          [args.function, repr(v.real), repr(v.imag), repr(float(rec["error"])),
                           rec["route"]]])
    return EXIT_OK


def _cases_from_args(args) -> list[dict]:
    if args.suite:
        return load_suite(args.suite)
    if not args.theorem:
        raise InputError("give a theorem id or --suite")
    params = {}
    for k in ("alpha", "beta", "omega", "omega1", "omega2", "sequence", "sign", "k", "parity",
              "a1", "a2", "form", "a", "c", "x"):
        v = getattr(args, k, None)
        if v is not None:
            params[k] = v
    if args.corrected:
        params["corrected"] = True
    one_var = args.theorem in ("Riemann", "Hurwitz", "Modular", "Kummer", "Psi-asymptotic")
    points = []
    if args.grid:
        for re1 in parse_range(args.grid):
            s1 = complex(re1, args.t1)
            if args.k is not None:
                par = args.parity or fe.ODD_SUM
                total = 2 * args.k + 1 if par == fe.ODD_SUM else 2 * args.k
                s2 = total - s1
            elif args.s2 is not None:
                s2 = parse_complex(args.s2)
            else:
                raise InputError("--grid needs --k or --s2")
            points.append([s1, s2])
    elif one_var:
        src = args.tau if args.theorem == "Modular" else args.s
        if args.theorem in ("Kummer", "Psi-asymptotic"):
            src = args.x
        if src is None:
            raise InputError(f"{args.theorem} needs a point")
        points.append([parse_complex(src)])
    else:
        if args.s1 is None or args.s2 is None:
            raise InputError("give --s1 and --s2 (or --grid)")
        points.append([parse_complex(args.s1), parse_complex(args.s2)])
    RunConfig("verify", args.theorem, points, params, args.tol, args.expect)
    return [{"theorem": args.theorem, "point": pt, "params": params, "tol": args.tol,
             "expect": args.expect} for pt in points]


def _cmd_verify(args) -> int:
    cases = _cases_from_args(args)
    for c in cases:
        RunConfig("verify", c.get("theorem", c.get("eval", "")), [], {},
                  float(c.get("tol", 1e-8)))
    results, summary = run_cases(cases)
    payload = {"schema": SCHEMA, "command": "verify", "suite": args.suite,
               "reports": results, "summary": summary}
    rows = [["theorem", "point", "residual_abs", "residual_rel", "outcome", "reason"]]
    for r in results:
        pt = r.get("point", r.get("args", {}))
        rows.append([r.get("theorem", r.get("eval")), json.dumps(_plain(pt)).replace(",", ";"),
                     r.get("residual_abs", ""), r.get("residual_rel", ""), r["outcome"],
                     str(r.get("refusal_reason", "")).replace(",", ";")])
    _emit(payload, args, rows)
    sys.stderr.write(f"pass {summary['pass']}  fail {summary['fail']}  "
                     f"refused {summary['refused']}  "
                     f"known-mismatch {summary['known-mismatch']}\n")
    return _verify_exit(summary)


def _cmd_gen(args) -> int:
    if args.kind == "tau":
        if args.max < 1 or args.max > 100_000:
            raise InputError("--max must lie in 1..100000")
        table = co.ramanujan_tau(args.max)
        payload = {"schema": SCHEMA, "command": "gen-coeffs", "kind": "tau", "values": table}
        rows = [["n", "tau"]] + [[i + 1, t] for i, t in enumerate(table)]
    elif args.kind == "character":
        if args.mod is None or args.index is None:
            raise InputError("character needs --mod and --index")
        chi = co.dirichlet_character(args.mod, args.index)
        vals = [complex(v) for v in chi.table]
        payload = {"schema": SCHEMA, "command": "gen-coeffs", "kind": "character",
                   "modulus": args.mod, "index": args.index, "parity": co.parity(chi),
                   "values": vals}
        rows = [["m", "re", "im"]] + [[i + 1, v.real, v.imag] for i, v in enumerate(vals)]
    else:
        if not args.sequence:
            raise InputError("fourier needs --seq a1,...,af")
        table = [parse_complex(x) for x in str(args.sequence).split(",")]
        hat = co.finite_fourier(table)
        back = co.inverse_fourier(hat)
        res = float(np.max(np.abs(back - np.asarray(table))))
        payload = {"schema": SCHEMA, "command": "gen-coeffs", "kind": "fourier",
                   "values": [complex(v) for v in table], "hat": [complex(v) for v in hat],
                   "roundtrip_residual": res, "roundtrip_ok": res <= 1e-12}
        rows = [["nu", "re", "im"]] + [[i + 1, v.real, v.imag] for i, v in enumerate(hat)]
    _emit(payload, args, rows)
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _apply_config(args)
        if args.command == "eval":
            return _cmd_eval(args)
        if args.command == "verify":
            return _cmd_verify(args)
        return _cmd_gen(args)
    except (InputError, DzetaError, ValueError, OSError) as exc:
        sys.stderr.write(f"dzeta: error: {exc}\n")
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
