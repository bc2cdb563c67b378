"""Randomized invariant suites behind ``specdual property-suite``.

Each suite maps a case index to ``(ok, witness)``; the witness is a JSON-able
dict that is enough to reproduce a failure by hand.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .algebra.gcd import squarefree_primitive
from .algebra.poly import LaurentPoly
from .constructions import beh_duality_check, build_beh, resultant_curve
from .modrep import make_structure, reconstruct, reduce
from .sampling import (
    case_rng,
    random_beh_params,
    random_laurent_multiplier,
    random_laurent_pair,
    random_poly_mult_pair,
    random_rational,
    random_uni,
    random_weyl_op,
    random_weyl_pair,
)
from .spectral import duality_check, fourier_curve_theorem_check, spectral_curve
from .weyl import WeylOp

__all__ = ["SUITES", "SuiteResult", "run_suite"]


def _weyl_duality(rng):
    p, q = random_weyl_pair(rng)
    report = duality_check(p, q)
    return report.holds, {"P": p.to_text(), "Q": q.to_text(),
                          "X_QP": report.X_QP.raw.to_text(), "X_PQ": report.X_PQ.raw.to_text()}


def _laurent_duality(rng):
    P, Q, (gamma, a, b) = random_laurent_pair(rng)
    d2 = len(a) - 1
    N = d2 + 1
    report = duality_check(P, Q, N - 1, N - d2)
    return report.holds, {"P": P.to_text(), "Q": Q.to_text(), "N": N,
                          "X_QP": report.X_QP.raw.to_text(), "X_PQ": report.X_PQ.raw.to_text()}


def _fourier(rng):
    p, q = random_weyl_pair(rng)
    return fourier_curve_theorem_check((p, q)), {"P1": p.to_text(), "Q1": q.to_text()}


def _beh(rng):
    gamma, a, b = random_beh_params(rng)
    inst = build_beh(gamma, a, b)
    r = beh_duality_check(inst)
    ok = r.holds and r.d1_matches and r.d2_matches
    return ok, {"gamma": str(gamma), "a": [str(c) for c in a], "b": [str(c) for c in b],
                "N": inst.N, "holds": r.holds, "d1_matches": r.d1_matches,
                "d2_matches": r.d2_matches}


def _resultant_poly(rng):
    p, q = random_poly_mult_pair(rng)
    P, Q = WeylOp.from_multiplier(p), WeylOp.from_multiplier(q)
    res = squarefree_primitive(resultant_curve(p, q))
    ok = res == spectral_curve(P, Q).normal == spectral_curve(Q, P).swap().normal
    return ok, {"P": p.to_text(), "Q": q.to_text()}


def _resultant_laurent(rng):
    P, Q = random_laurent_multiplier(rng), random_laurent_multiplier(rng)
    res = squarefree_primitive(resultant_curve(P, Q))
    ok = res == spectral_curve(P, Q).normal == spectral_curve(Q, P).swap().normal
    return ok, {"P": P.to_text(), "Q": Q.to_text()}


def _roundtrip(rng):
    if rng.random() < 0.5:
        m = make_structure(random_weyl_op(rng, rng.randint(1, 4)))
        w = random_uni(rng, rng.randint(0, 12), "z")
    else:
        m = make_structure(random_laurent_multiplier(rng))
        w = LaurentPoly({k: random_rational(rng) for k in range(-6, 7) if rng.random() < 0.5})
    ok = reconstruct(m, reduce(m, w)) == w
    return ok, {"action": m.action.to_text(), "w": w.to_text()}


SUITES = {
    "weyl-duality": _weyl_duality,
    "laurent-duality": _laurent_duality,
    "fourier": _fourier,
    "beh": _beh,
    "resultant-poly": _resultant_poly,
    "resultant-laurent": _resultant_laurent,
    "roundtrip": _roundtrip,
}


@dataclass
class SuiteResult:
    name: str
    count: int
    passed: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return self.passed == self.count

    def to_json(self):
        return {"name": self.name, "count": self.count, "passed": self.passed,
                "failures": self.failures}


def run_suite(name, seed=0, count=20, jobs=1):
    """Run ``count`` cases of suite ``name``; results are ordered by case index."""
    check = SUITES[name]

    def one(index):
        ok, witness = check(case_rng(seed, name, index))
        return index, ok, witness

    result = SuiteResult(name, count)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(one, range(count)))
    else:
        outcomes = [one(i) for i in range(count)]
    for index, ok, witness in outcomes:
        if ok:
            result.passed += 1
        else:
            result.failures.append({"index": index, **witness})
    return result
