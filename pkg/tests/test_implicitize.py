import random

import numpy as np
import pytest
import sympy

from galoispairs import (CurveParametrization, Poly, PrimeField,
                         ResultantVanishes, case_subgroups, check_pair,
                         emit_parametrization, implicit_degree)
from galoispairs.implicitize import (QuadExt, _batch_resultant,
                                     _interpolated_coefficients,
                                     _is_squarefree, _radical_degree_univariate,
                                     _scalar_resultant)


def test_quadratic_extension_arithmetic():
    K = QuadExt(PrimeField(11))
    assert K.r == 2  # least non-residue mod 11
    els = list(K.iter_elements())
    assert len(els) == 121 and len(set(els)) == 121
    for x in els:
        if x == K.zero:
            continue
        assert K.mul(x, K.inv(x)) == K.one
        # Frobenius inverse really is a p-th root
        root = K.pth_root(x)
        acc = K.one
        for _ in range(11):
            acc = K.mul(acc, root)
        assert acc == x


def test_scalar_resultant_against_sympy():
    rng = random.Random(9)
    p = 11
    K = QuadExt(PrimeField(p))
    t = sympy.Symbol("t")
    for _ in range(40):
        fc = [rng.randrange(p) for _ in range(rng.randrange(1, 6))] + [rng.randrange(1, p)]
        gc = [rng.randrange(p) for _ in range(rng.randrange(1, 6))] + [rng.randrange(1, p)]
        f = Poly(K, [(c, 0) for c in fc])
        g = Poly(K, [(c, 0) for c in gc])
        got = _scalar_resultant(K, f, g)
        fs = sympy.Poly(list(reversed(fc)), t, modulus=p)
        gs = sympy.Poly(list(reversed(gc)), t, modulus=p)
        want = int(sympy.resultant(fs, gs)) % p
        assert got == (want, 0)


def test_batch_resultant_handles_forced_degree_drops():
    rng = random.Random(10)
    p = 23
    K = QuadExt(PrimeField(p))
    for _ in range(100):
        n = rng.randrange(1, 6)
        g = [(rng.randrange(p), rng.randrange(p)) for _ in range(n)] + [(rng.randrange(1, p), 0)]
        # build f = q*g + r with small r so remainders collapse early
        q = Poly(K, [(rng.randrange(p), rng.randrange(p)), (1, 0)])
        r_poly = Poly(K, [(rng.randrange(p), 0)])
        f = q * Poly(K, g) + r_poly
        if f.degree < Poly(K, g).degree:
            continue
        F = np.array([[list(f.coeffs[k]) if k <= f.degree else [0, 0]
                       for k in range(f.degree + 1)]], dtype=np.int64)
        G = np.array([[list(c) for c in g]], dtype=np.int64)
        got = tuple(int(v) for v in _batch_resultant(K.p, K.r, F, G)[0])
        want = _scalar_resultant(K, f, Poly(K, g))
        assert got == want


def test_interpolated_coefficients_match_sympy_small_case():
    # full bivariate resultant cross-check at p = 11, reference pair (11, a)
    G1, G2 = case_subgroups(11, "a")
    param = emit_parametrization(check_pair(G1, G2))
    C = _interpolated_coefficients(param)
    t, x, y = sympy.symbols("t x y")
    F = PrimeField(11)

    def to_sympy(poly):
        return sum(int(c) * t ** k for k, c in enumerate(poly.coeffs))

    f = to_sympy(param.A) - x * to_sympy(param.D)
    g = to_sympy(param.B) - y * to_sympy(param.D)
    R = sympy.Poly(sympy.resultant(sympy.Poly(f, t, modulus=11),
                                   sympy.Poly(g, t, modulus=11)),
                   x, y, modulus=11)
    want = np.zeros_like(C)
    for (i, j), coeff in R.terms():
        want[i, j] = int(coeff) % 11
    assert (C == want).all()


def test_radical_degree_univariate():
    K = QuadExt(PrimeField(11))
    t = Poly(K, [K.zero, K.one])
    one = Poly(K, [K.one])

    def linear(a):
        return Poly(K, [K.neg(K.element(a)), K.one])

    f = linear(1) * linear(1) * linear(2)
    assert _radical_degree_univariate(K, f) == 2
    assert not _is_squarefree(K, f)
    g = linear(1) * linear(2) * linear(3)
    assert _radical_degree_univariate(K, g) == 3
    assert _is_squarefree(K, g)
    # (t - 1)^11 has zero derivative in characteristic 11
    h = one
    for _ in range(11):
        h = h * linear(1)
    assert h.derivative().is_zero
    assert _radical_degree_univariate(K, h) == 1
    # t^11 - t splits into 11 distinct roots
    split = Poly(K, [(0, 0), (10, 0)] + [(0, 0)] * 9 + [(1, 0)])
    assert _radical_degree_univariate(K, split) == 11
    # mixed: (t-1)^11 * (t-2)^2 * (t-3)
    mixed = h * linear(2) * linear(2) * linear(3)
    assert _radical_degree_univariate(K, mixed) == 3


def test_implicit_degree_line():
    F = PrimeField(11)
    param = CurveParametrization(11, Poly(F, [0, 1]), Poly(F, [1]),
                                 Poly(F, [1]), 1)
    assert implicit_degree(param) == 1


def test_implicit_degree_collapse_flagged():
    G1, G2 = case_subgroups(11, "a")
    param = emit_parametrization(check_pair(G1, G2))
    collapsed = CurveParametrization(11, param.A, param.A, param.D, param.degree)
    assert implicit_degree(collapsed) == 1 != param.degree


def test_implicit_degree_reference_cases_fast_subset():
    for p, label in ((11, "b"), (23, "c")):
        G1, G2 = case_subgroups(p, label)
        param = emit_parametrization(check_pair(G1, G2))
        assert implicit_degree(param) == param.degree == p + 1


def test_resultant_vanishes_on_shared_factor():
    F = PrimeField(11)
    t = Poly(F, [0, 1])
    param = CurveParametrization(11, t * Poly(F, [1, 1]), t * Poly(F, [2, 1]),
                                 t, 2)
    with pytest.raises(ResultantVanishes):
        implicit_degree(param)


def test_quadratic_image_of_degree_two_map():
    # t -> (t^2 : t^2 + t + 1 : 1): a conic parametrized birationally
    F = PrimeField(11)
    param = CurveParametrization(11, Poly(F, [0, 0, 1]), Poly(F, [1, 1, 1]),
                                 Poly(F, [1]), 2)
    assert implicit_degree(param) == 2
