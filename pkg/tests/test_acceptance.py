"""Acceptance run: one test and one printed PASS/FAIL line per criterion.

Each check reads the stated residual bound directly from the reports
(not the error-aware pass flag), so a criterion passes only if every
residual is within its bound.
"""

import time

import numpy as np
import pytest

from dzeta.cli import EXIT_REFUSED, load_suite, run_cases
from dzeta.coefficients import characters, finite_fourier, ramanujan_tau
from dzeta.core import EvalPoint
from dzeta.fe_engine import H_exponents, HyperplaneSpec, thm4_residual
from dzeta.oracle_quadrature import eta_product_coefficients

CHI4 = characters(4)[1]
T4_POINTS = [1.3 + 0.7j, 0.6 - 0.4j, 1.8 + 0.2j]


@pytest.fixture
def report(capsys):
    def emit(number, ok, detail, started):
        with capsys.disabled():
            print(f"\n[criterion {number:>2}] {'PASS' if ok else 'FAIL'}  {detail}  "
                  f"({time.perf_counter() - started:.1f} s)")
    return emit


def run_suite(name, theorem=None):
    cases = [c for c in load_suite(name) if theorem is None or c.get("theorem") == theorem]
    results, _ = run_cases(cases)
    return cases, results


def worst(results):
    return max(r["residual_rel"] for r in results)


def within(cases, results):
    return all(r["status"] == "ok" and r["residual_rel"] <= c["tol"]
               for c, r in zip(cases, results))


class TestAcceptance:
    def test_01_classical_layer(self, report):
        t0 = time.perf_counter()
        ok = True
        parts = []
        for theorem in ("Riemann", "Hurwitz"):
            cases, res = run_suite("classical", theorem)
            assert len(cases) == 20
            assert all(abs(complex(*c["point"][0]).imag) <= 10 for c in cases)
            assert all(c["tol"] == 1e-9 for c in cases)
            ok &= within(cases, res)
            parts.append(f"{theorem} 20 pts max rel {worst(res):.1e}")
        report(1, ok, "; ".join(parts) + " (bound 1e-9)", t0)
        assert ok

    def test_02_psi_kernel(self, report):
        t0 = time.perf_counter()
        bounds = {"Kummer": (50, 1e-8), "Psi-asymptotic": (100, 1e-6), "Psi-exact": (5, 1e-12)}
        ok = True
        parts = []
        for theorem, (count, bound) in bounds.items():
            cases, res = run_suite("psi", theorem)
            assert len(cases) == count and all(c["tol"] == bound for c in cases)
            ok &= within(cases, res)
            parts.append(f"{theorem} {count} max rel {worst(res):.1e} (<= {bound:g})")
        report(2, ok, "; ".join(parts), t0)
        assert ok

    def test_03_f_relation(self, report):
        t0 = time.perf_counter()
        cases, res = run_suite("f-relation")
        kinds = {c["params"]["sequence"].split(":")[0] for c in cases}
        assert len(cases) == 60 and len(kinds) == 3
        ok = within(cases, res) and all(c["tol"] == 1e-9 for c in cases)
        report(3, ok, f"3 sequence kinds x 20 pts, max rel {worst(res):.1e} (bound 1e-9)", t0)
        assert ok

    def test_04_general_equation_deltas(self, report):
        t0 = time.perf_counter()
        cases, res = run_suite("thm5")
        ns = sorted({int(c["params"]["sequence"].split(":")[1]) for c in cases})
        assert ns == [1, 2, 3, 5, 7] and len(cases) == 10
        for c in cases:
            s = EvalPoint(complex(*c["point"][0]), complex(*c["point"][1]))
            assert s.sigma1 < 0 and s.total.real > 1.5
        # the left side is summed directly, never through the continued route
        assert all(r["routes"]["lhs"] in ("row-series", "rows+asymptotic-tail") for r in res)
        ok = within(cases, res) and all(c["tol"] == 1e-8 for c in cases)
        report(4, ok, f"delta_n n in {ns}, 10 pts, max rel {worst(res):.1e} (bound 1e-8)", t0)
        assert ok

    def test_05_g_function_identities(self, report):
        t0 = time.perf_counter()
        cases, res = run_suite("thm2")
        special = [c.get("params", {}).get("form") == "special" for c in cases]
        assert sum(special) == 5 and len(cases) == 10
        ok = within(cases, res) and all(c["tol"] == 1e-8 for c in cases)
        report(5, ok, f"general 5 + special 5, max rel {worst(res):.1e} (bound 1e-8)", t0)
        assert ok

    def test_06_xi_symmetry(self, report):
        t0 = time.perf_counter()
        cases, res = run_suite("thm3")
        combos = {(tuple(c["params"]["omega1"]), tuple(c["params"]["omega2"]), c["params"]["k"])
                  for c in cases}
        assert len(cases) == 20 and len(combos) == 4
        ok = within(cases, res) and all(c["tol"] == 1e-7 for c in cases)
        report(6, ok, f"k = +-1, two omega pairs, 20 pts, max rel {worst(res):.1e} "
                      "(bound 1e-7)", t0)
        assert ok

    def test_07a_vanishing_condition(self, report):
        t0 = time.perf_counter()
        # sum chi(m) and sum hat(chi)(nu) = chi(f) are both exactly zero
        table = CHI4.table
        exact = sum(table) == 0 and table[-1] == 0
        numeric = abs(np.sum(finite_fourier(table))) <= 1e-15
        report("7a", exact and numeric, "sum a1 = 0 and sum hat(a2) = a2(4) = 0 exactly", t0)
        assert exact and numeric

    @pytest.mark.xfail(strict=True, reason="the stated equation is off by lambda(a1) f = -4")
    def test_07b_double_L_equation_as_stated(self, report):
        t0 = time.perf_counter()
        reps = [thm4_residual((s1, 5 - s1), CHI4, CHI4, 1, 1, HyperplaneSpec(2))
                for s1 in T4_POINTS]
        rel = max(r.residual_rel for r in reps)
        ratios = [r.lhs / r.rhs for r in reps]
        ok = rel <= 1e-7
        report("7b", ok, f"as stated: max rel {rel:.3g} (bound 1e-7); lhs/rhs = "
                         f"{np.mean(ratios).real:.12f}", t0)
        assert ok

    def test_07c_double_L_equation_corrected(self, report):
        t0 = time.perf_counter()
        reps = [thm4_residual((s1, 5 - s1), CHI4, CHI4, 1, 1, HyperplaneSpec(2), corrected=True)
                for s1 in T4_POINTS]
        rel = max(r.residual_rel for r in reps)
        ok = rel <= 1e-7 and all(r.routes["additional_terms_vanish"] for r in reps)
        report("7c", ok, f"with factor lambda(a1) f: max rel {rel:.1e} (bound 1e-7)", t0)
        assert ok

    def test_08_cusp_form_consistency(self, report):
        t0 = time.perf_counter()
        cases, res = run_suite("thm6")
        assert len(cases) == 2
        exps = []
        for c in cases:
            s1, s2 = complex(*c["point"][0]), complex(*c["point"][1])
            e = H_exponents((-s1, 12 - s2 + 1), 12)
            exps.append(max(e))
            assert max(e) < -1
        # left side continued through the general equation, right side through the H-series
        assert all(r["routes"]["lhs"] == "thm5-rhs" and r["routes"]["rhs"] == "thm6-rhs"
                   for r in res)
        ok = within(cases, res) and all(c["tol"] == 1e-6 for c in cases)
        report(8, ok, f"Delta at 2 pts, max rel {worst(res):.1e} (bound 1e-6); "
                      f"H exponents <= {max(exps):.2f}", t0)
        assert ok

    def test_09_integral_oracle(self, report):
        t0 = time.perf_counter()
        cases, res = run_suite("oracle")
        assert len(cases) == 5
        ok = within(cases, res) and all(c["tol"] == 1e-6 for c in cases)
        report(9, ok, f"5 parameter sets, max rel {worst(res):.1e} (bound 1e-6)", t0)
        assert ok

    def test_10_modularity_and_tau(self, report):
        t0 = time.perf_counter()
        cases, res = run_suite("modular", "Modular")
        assert len(cases) == 10
        mod_ok = all(r["residual_abs"] <= 1e-9 for r in res)
        tau_ok = ramanujan_tau(10) == eta_product_coefficients(10)
        ok = mod_ok and tau_ok
        report(10, ok, f"modular max abs {max(r['residual_abs'] for r in res):.1e} "
                       f"(bound 1e-9); tau(1..10) exact: {tau_ok}", t0)
        assert ok

    def test_11_gates(self, report):
        t0 = time.perf_counter()
        cases, res = run_suite("gates")
        named = [r["refusal_reason"] and any(k in r["refusal_reason"] for k in "<>=")
                 or "pole" in (r["refusal_reason"] or "") for r in res]
        ok = all(r["exit"] == EXIT_REFUSED for r in res) and all(named)
        report(11, ok, f"{len(res)} refusal cases, all exit 2 with a named condition", t0)
        assert ok
