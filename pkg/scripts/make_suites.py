"""Regenerate the bundled verification suites in src/dzeta/suites/."""

import json
import math
from pathlib import Path

import numpy as np

OUT = Path(__file__).resolve().parents[1] / "src" / "dzeta" / "suites"


def c(z):
    z = complex(z)
    return [round(z.real, 12), round(z.imag, 12)]


def case(theorem, point, params=None, tol=1e-8, expect="pass", label=None):
    d = {"theorem": theorem, "point": [c(v) for v in point], "params": params or {},
         "tol": tol, "expect": expect}
    if label:
        d["label"] = label
    return d


def classical():
    out = []
    for i in range(20):
        s = complex(-2.3 + 0.3 * i, round(10 * math.sin(i + 1), 6))
        out.append(case("Riemann", [s], tol=1e-9))
    for i in range(20):
        s = complex(-2.2 + 0.29 * i, round(9.5 * math.cos(1.7 * i + 0.3), 6))
        alpha = round(0.05 + 0.95 * ((0.37 * i + 0.11) % 1), 6)
        out.append(case("Hurwitz", [s], {"alpha": alpha}, tol=1e-9))
    return out


def psi_suite():
    rng = np.random.default_rng(20240611)
    out = []
    for _ in range(50):
        a = complex(rng.uniform(-2, 3), rng.uniform(-2, 2))
        cc = complex(rng.uniform(-2, 3), rng.uniform(-2, 2))
        x = (rng.uniform(0.5, 20) * np.exp(1j * rng.uniform(-2.8, 2.8)))
        out.append(case("Kummer", [x], {"a": c(a), "c": c(cc), "x": c(x)}))
    for _ in range(100):
        a = complex(rng.uniform(0.2, 3), rng.uniform(-1.5, 1.5))
        cc = complex(rng.uniform(-1, 3), rng.uniform(-1.5, 1.5))
        x = rng.uniform(60, 400) * np.exp(1j * rng.uniform(-2.5, 2.5))
        out.append(case("Psi-asymptotic", [x], {"a": c(a), "c": c(cc), "x": c(x)}, tol=1e-6))
    for a, x in [(1, 10), (0.5 + 0.5j, 3), (2.5, 0.7 + 1.1j), (-1.5 + 0.2j, 4), (0.3, 25j)]:
        out.append(case("Psi-exact", [x], {"a": c(a), "x": c(x)}, tol=1e-12))
    return out


def f_relation():
    out = []
    seqs = ["const", "exp:0.3", "delta:5"]
    for spec in seqs:
        for i in range(20):
            s1 = complex(-3 + 0.13 * i, 0.4 * math.sin(i))
            s2 = complex(2.5 + 0.1 * i, 0.3 * math.cos(2 * i))
            alpha = [0.3, 0.5, 0.8, 0.65][i % 4]
            omega = [1, 1.3, complex(0.8, 0.3), complex(1.1, -0.2)][i % 4]
            sign = 1 if i % 2 == 0 else -1
            out.append(case("F-relation", [s1, s2], {"sequence": spec, "alpha": alpha,
                                                    "omega": c(omega), "sign": sign}, 1e-9))
    return out


def thm5():
    out = []
    pts = [[(-1.5, 3.2), (-0.7 + 0.4j, 2.6 - 0.2j)], [(-2.2, 4.0), (-0.4 - 0.3j, 2.3)],
           [(-1.5, 3.2), (-1.1 + 0.2j, 3.0 + 0.5j)], [(-0.8, 2.7), (-2.5 + 0.1j, 4.4)],
           [(-1.3, 3.3), (-0.6 + 0.6j, 2.5 - 0.6j)]]
    for n, two in zip([1, 2, 3, 5, 7], pts):
        for j, (s1, s2) in enumerate(two):
            alpha = [1 / 3, 0.75, 0.5][(n + j) % 3]
            omega = [1, 1.2, complex(0.9, 0.25)][(n + 2 * j) % 3]
            out.append(case("T5", [s1, s2], {"sequence": f"delta:{n}", "alpha": alpha,
                                             "omega": c(omega)}))
    return out


def thm2():
    out = []
    general = [((-1.2, 2.9), 0.3, 0.7, 1), ((-1.5 + 0.4j, 3.1 - 0.2j), 0.45, 0.2, 1.7),
               ((-0.6, 2.5), 1, 1, 1), ((-2.1 + 0.3j, 3.6), 0.8, 0.35, complex(1, 0.4)),
               ((-0.9 - 0.5j, 2.8 + 0.2j), 0.15, 0.9, 0.8)]
    for s, a, b, w in general:
        out.append(case("T2", list(s), {"alpha": a, "beta": b, "omega": c(w)}))
    special = [((-1.5, 3.1), 2), ((-0.8 + 0.3j, 2.7), 1), ((-2.2, 3.8 - 0.4j), 1.5),
               ((-1.1 - 0.2j, 2.9 + 0.2j), complex(1, 0.3)), ((-0.5, 2.4), 0.7)]
    for s, w in special:
        out.append(case("T2", list(s), {"form": "special", "omega": c(w)}))
    return out


def thm3():
    out = []
    for om1, om2 in [(1, 1.5), (complex(1, 0.3), 1)]:
        for i in range(5):
            s1 = complex(0.2 + 0.3 * i, 1.1 - 0.5 * i)
            out.append(case("T3", [s1, 3 - s1], {"omega1": c(om1), "omega2": c(om2), "k": 1},
                            1e-7))
        for i in range(5):
            s1 = complex(-0.7 + 0.15 * i, 0.5 * i - 1.0)
            out.append(case("T3", [s1, -1 - s1], {"omega1": c(om1), "omega2": c(om2),
                                                  "k": -1}, 1e-7))
    return out


def thm4():
    out = []
    pts = [complex(1.3, 0.7), complex(0.6, -0.4), complex(1.8, 0.2)]
    for s1 in pts:
        p = {"a1": "char:4:1", "a2": "char:4:1", "k": 2}
        out.append(case("T4", [s1, 5 - s1], p, 1e-7, expect="mismatch", label="as stated"))
        out.append(case("T4", [s1, 5 - s1], {**p, "corrected": True}, 1e-7,
                        label="with factor lambda(a1) f"))
    return out


def thm6():
    return [case("T6", [-6, 5], {"sequence": "tau", "alpha": 0.5}, 1e-6),
            case("T6", [complex(-5.5, 0.5), complex(4.8, -0.3)],
                 {"sequence": "tau", "alpha": 0.5}, 1e-6)]


def oracle():
    sets = [((1.5, 2.5), "const", 1.0, 1.0), ((1.2, 2.2), "delta:2", 0.5, 1.2),
            ((1.3 + 0.5j, 2.4 - 0.2j), "exp:0.25", 0.3, complex(1, 0.4)),
            ((1.5, 2.5), "char:4:1", 0.7, 1.0), ((1.0, 8.0), "tau", 0.5, 1.0)]
    return [case("Oracle", list(s), {"sequence": q, "alpha": a, "omega": c(w)}, 1e-6)
            for s, q, a, w in sets]


def modular():
    out = [case("Modular", [np.exp(1j * t)], {"sequence": "tau"}, 1e-9)
           for t in np.linspace(0.35, 2.8, 10)]
    out += [case("Tau", [n], {}, 1e-2) for n in range(1, 11)]
    return out


def gates():
    r = "refused"
    argvs = [
        ["eval", "L2", "--s1", "5", "--s2", "0.1"],
        ["eval", "L2", "--s1", "2", "--s2", "6.5", "--seq", "tau"],
        ["eval", "zeta2", "--s1", "2", "--s2", "0.5"],
        ["eval", "zeta", "--s", "1"],
        ["eval", "xi", "--s1", "0.4", "--s2", "2.5"],
        ["eval", "lambda", "--s1", "-0.5", "--s2", "3"],
        ["eval", "cusp", "--tau", "0.5+0.0001i"],
        ["eval", "H", "--s1", "0.5", "--s2", "0.5", "--seq", "tau"],
        ["verify", "T5", "--s1", "5", "--s2", "0.1"],
        ["verify", "T5", "--s1", "-2.5", "--s2", "4.5"],
        ["verify", "T1", "--s1", "2", "--s2", "0.5"],
        ["verify", "T3", "--s1", "0.4", "--s2", "2.5", "--k", "1"],
        ["verify", "T3", "--s1", "0.4", "--s2", "0.6"],
        ["verify", "T4", "--s1", "1.3", "--s2", "3.7", "--a1", "periodic:1,-1,1,-1",
         "--a2", "char:4:1"],
        ["verify", "T6", "--s1", "0.5", "--s2", "5", "--seq", "tau"],
        ["verify", "Oracle", "--s1", "-0.5", "--s2", "3"],
    ]
    return [{"argv": a, "expect": r} for a in argvs]


SUITES = {"classical": classical, "psi": psi_suite, "f-relation": f_relation,
          "thm5": thm5, "thm2": thm2, "thm3": thm3, "thm4": thm4, "thm6": thm6,
          "oracle": oracle, "modular": modular, "gates": gates}


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for name, fn in SUITES.items():
        (OUT / f"{name}.json").write_text(json.dumps({"name": name, "cases": fn()}, indent=1)
                                          + "\n")
    (OUT / "default.json").write_text(json.dumps({"name": "default", "cases": thm5()},
                                                 indent=1) + "\n")
    (OUT / "all.json").write_text(json.dumps({"name": "all", "include": list(SUITES)},
                                             indent=1) + "\n")


if __name__ == "__main__":
    main()
