import random
import warnings
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from specdual.algebra import BiPoly, LaurentPoly, PolyMatrix, UniPoly, det_poly, swap_xy
from specdual.errors import ValidationError
from specdual.sampling import case_rng, random_weyl_pair
from specdual.spectral import (
    SpectralCurve,
    curves_equal_as_loci,
    duality_check,
    fourier_curve_theorem_check,
    fourier_pair,
    is_quantization,
    is_spectral_quantization,
    spectral_curve,
)
from specdual.weyl import WeylOp

D, s = WeylOp.D(), WeylOp.s()
L = LaurentPoly.gen()
x, y = BiPoly.x(), BiPoly.y()
P = D ** 2 + s + 1
Q = D ** 3 - 2
CLASSICAL = (D ** 2 - 2 * D + 1, D)
QUANTUM = (D ** 2 - s, D + 1)


def test_curve_example2():
    c = spectral_curve(P, Q)
    assert c.raw == y ** 2 + y - (x - 1) ** 3
    assert c.rank == 2 and c.raw.degree_y == 2


def test_curve_example2_other_side():
    # eigenvalue of M_{P,Q} is y here; swapping gives (x - 1)^3 - y^2 - y up to sign
    c = spectral_curve(Q, P)
    assert c.raw == (y - 1) ** 3 - x ** 2 - x
    assert swap_xy(c.raw) == (x - 1) ** 3 - y ** 2 - y
    assert curves_equal_as_loci(c.swap(), spectral_curve(P, Q))


@pytest.mark.parametrize("p,q", [(2, 3), (3, 2), (1, 4), (3, 5)])
def test_curve_of_powers(p, q):
    c = spectral_curve(D ** p, D ** q)
    assert curves_equal_as_loci(c, y ** p - x ** q)


def test_curves_equal_as_loci_examples():
    f = y ** 2 + y - (x - 1) ** 3
    assert curves_equal_as_loci(f, -f)
    assert curves_equal_as_loci((y - x) ** 2, y - x)
    assert not curves_equal_as_loci(y ** 2 - x ** 3, y ** 2 - x ** 2)
    with pytest.raises(ValidationError):
        curves_equal_as_loci(BiPoly(), f)


def test_curve_invariants():
    c = SpectralCurve.from_poly(3 * (y - x) ** 2, 2)
    assert c.normal == y - x or c.normal == x - y
    assert c.normal.lc > 0
    assert c.to_json()["rank"] == 2


def test_duality_example2():
    r = duality_check(P, Q)
    assert r.holds
    assert r.X_QP.raw == y ** 2 + y - (x - 1) ** 3


def test_duality_powers():
    r = duality_check(D ** 2, D ** 3)
    assert r.holds
    assert curves_equal_as_loci(r.X_QP, y ** 2 - x ** 3)
    assert curves_equal_as_loci(r.X_PQ, y ** 3 - x ** 2)


def test_duality_smallest_laurent():
    Pl = L ** -1 + 1 + L
    Ql = L + 1 + L ** -1
    assert duality_check(Pl, Ql, 1, 1).holds


def test_fourier_pair_examples():
    assert fourier_pair(*QUANTUM) == (-D - 1, D ** 2 - s)
    assert fourier_pair(D ** 2, D ** 3) == (-D ** 3, D ** 2)
    pair = (P, Q)
    for _ in range(4):
        pair = fourier_pair(*pair)
    assert pair == (P, Q)


@pytest.mark.parametrize("pair", [QUANTUM, (P, Q), (D ** 2, D ** 3)])
def test_fourier_curve_examples(pair):
    assert fourier_curve_theorem_check(pair)


def test_quantization_true():
    r = is_quantization(CLASSICAL, QUANTUM)
    assert r.degrees_ok and r.string_eq_ok and r.matrix_eq_ok and r.verdict
    assert is_spectral_quantization(CLASSICAL, QUANTUM).verdict


def test_commuting_pair_is_not_quantization():
    r = is_quantization((D ** 2, D ** 3), (D ** 2, D ** 3))
    assert r.degrees_ok and not r.string_eq_ok and not r.verdict


def test_fourier_pair_quantization_counterexample():
    f0, f1 = fourier_pair(*CLASSICAL), fourier_pair(*QUANTUM)
    exact = is_quantization(f0, f1)
    assert exact.degrees_ok and exact.string_eq_ok
    assert not exact.matrix_eq_ok and not exact.verdict
    spectral = is_spectral_quantization(f0, f1)
    assert spectral.spectral_eq_ok and spectral.verdict


def test_spectral_quantization_wrong_curve():
    # [D^2 - s + 1, D + 1] = 1 but the constant shift moves the curve
    pair1 = (D ** 2 - s + 1, D + 1)
    r = is_spectral_quantization(CLASSICAL, pair1)
    assert r.degrees_ok and r.string_eq_ok
    assert not r.spectral_eq_ok and not r.verdict


def test_noncommuting_classical_pair_warns():
    with pytest.warns(UserWarning, match="does not commute"):
        r = is_quantization(QUANTUM, QUANTUM)
    assert not r.classical_commutes


def test_commuting_classical_pair_silent():
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        is_quantization(CLASSICAL, QUANTUM)


XI = [Fraction(0), Fraction(1), Fraction(-2), Fraction(7, 3)]


@pytest.mark.parametrize("xi", XI)
def test_xi_family_spectrum(xi):
    u = UniPoly.gen("u")
    t = BiPoly.y()
    U = BiPoly.x()
    c = lambda v: UniPoly.constant(v, "u")
    m = PolyMatrix([[c(0), u, -xi * u], [c(xi), c(0), u], [c(1), c(0), c(0)]])
    from specdual.spectral import char_poly
    det = char_poly(m, module_var="x", eigen_var="y")
    assert det == t ** 3 - U ** 2 or det == U ** 2 - t ** 3
    assert abs(det_poly(m).lc) == 1


def _random_pairs(n, suite):
    return [random_weyl_pair(case_rng(0, suite, i)) for i in range(n)]


def test_degree_law():
    for p, q in _random_pairs(40, "degree-law"):
        a, b = spectral_curve(p, q).raw, spectral_curve(q, p).raw
        assert a.degree_y == p.order and b.degree_y == q.order
        assert a.degree_x == q.order and b.degree_x == p.order
        assert swap_xy(b).degree_y == a.degree_y


def test_quantization_implies_spectral():
    pairs = [(CLASSICAL, QUANTUM), (fourier_pair(*CLASSICAL), fourier_pair(*QUANTUM)),
             ((D ** 2, D ** 3), (D ** 2, D ** 3)), (CLASSICAL, (D ** 2 - s + 1, D + 1))]
    rng = random.Random(4)
    for _ in range(10):
        c = Fraction(rng.randint(-3, 3))
        pairs.append(((D ** 2 + c, D), (D ** 2 - s + c, D)))
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        for p0, p1 in pairs:
            if is_quantization(p0, p1).verdict:
                assert is_spectral_quantization(p0, p1).verdict


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2 ** 32))
def test_duality_and_fourier_random(seed):
    p, q = random_weyl_pair(random.Random(seed))
    assert duality_check(p, q).holds
    assert fourier_curve_theorem_check((p, q))
