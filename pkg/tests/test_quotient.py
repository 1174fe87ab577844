import pytest

from galoispairs import (INFINITY, IrregularOrbit, Poly, RationalFunction,
                         case_subgroups, check_pair, emit_parametrization,
                         fibers, generate_closure, invariant_generator,
                         is_invariant_under, moebius_adjust, orbit,
                         parametrization_from_dict, projective_line,
                         trivial_subgroup)
from galoispairs.polys import vanishing_poly


def negation_group(p=11):
    line = projective_line(p)
    return generate_closure(line, [line.matrix([[-1, 0], [0, 1]])])


def test_trivial_group_invariant_is_identity_map():
    line = projective_line(11)
    f = invariant_generator(trivial_subgroup(line))
    assert f.num == Poly.x(line.field)
    assert f.den == Poly(line.field, [1])


def test_order_two_invariant():
    G = negation_group()
    f = invariant_generator(G)
    assert f.degree == 2
    # t -> -t invariance means only even-degree terms survive
    assert all(c == 0 for c in f.num.coeffs[1::2])
    for M in G.elements:
        assert is_invariant_under(f, M)


def test_reference_group_invariants():
    for p, label in ((11, "a"), (23, "a")):
        for G in case_subgroups(p, label):
            f = invariant_generator(G)
            assert f.degree == len(G)
            for M in G.generators:
                assert is_invariant_under(f, M)


def test_invariance_consistent_with_point_action():
    # the cleared substitution matches apply() on every rational point
    line = projective_line(11)
    G = case_subgroups(11, "a")[0]
    f = invariant_generator(G)
    for M in list(G.elements)[:6]:
        for Q in line.points():
            assert f.eval_point(line.apply(Q, M)) == f.eval_point(Q)


def test_moebius_adjust_trivial():
    line = projective_line(11)
    G = trivial_subgroup(line)
    f = invariant_generator(G)
    h = moebius_adjust(f, G, line.point(1, 0))
    assert h.num == Poly(line.field, [1])
    assert h.den == Poly(line.field, [0, 1])  # h = 1/t


def test_moebius_adjust_full_orbit():
    line = projective_line(11)
    G1 = case_subgroups(11, "a")[0]
    h = moebius_adjust(invariant_generator(G1), G1, line.point(0, 1))
    assert h.den.degree == 11  # infinity lies in the orbit
    assert h.num.degree == 12
    assert h.den == vanishing_poly(line.field, range(11))
    # poles are exactly the orbit: every affine point is a simple root
    for t in range(11):
        assert h.eval_affine(t) is INFINITY


def test_moebius_adjust_partial_orbit_poles():
    line = projective_line(11)
    G = negation_group()
    Q = line.point(1, 3)
    h = moebius_adjust(invariant_generator(G), G, Q)
    assert h.degree == 2
    pts = orbit(G, Q)
    assert h.den == vanishing_poly(line.field, sorted(P.t for P in pts))
    for P in line.points():
        assert (h.eval_point(P) is INFINITY) == (P in pts)


def test_moebius_adjust_rejects_irregular_orbit():
    line = projective_line(11)
    G = negation_group()
    with pytest.raises(IrregularOrbit):
        moebius_adjust(invariant_generator(G), G, line.point(1, 0))


def test_emit_parametrization_reference_degrees():
    for p, label, d in ((11, "a", 12), (23, "c", 24)):
        G1, G2 = case_subgroups(p, label)
        param = emit_parametrization(check_pair(G1, G2))
        assert param.degree == d
        assert max(param.A.degree, param.B.degree, param.D.degree) == d
        assert param.A.gcd(param.D).degree == 0
        assert param.B.gcd(param.D).degree == 0


def test_emit_parametrization_rejects_failing_certificate():
    G1, _ = case_subgroups(11, "a")
    bad = check_pair(G1, G1)
    with pytest.raises(ValueError):
        emit_parametrization(bad)


def test_fibers_are_unions_of_orbits():
    line = projective_line(11)
    G = negation_group()
    Q = line.point(1, 3)
    h = moebius_adjust(invariant_generator(G), G, Q)
    orbits = {frozenset(orbit(G, P)) for P in line.points()}
    for value, fiber in fibers(h, line).items():
        merged = set()
        for o in orbits:
            if o <= fiber:
                merged |= o
        assert merged == fiber


def test_curve_json_round_trip():
    G1, G2 = case_subgroups(11, "a")
    param = emit_parametrization(check_pair(G1, G2))
    doc = param.to_dict()
    assert set(doc) == {"p", "degree", "A", "B", "D"}
    back = parametrization_from_dict(doc)
    assert (back.A, back.B, back.D, back.degree) == (param.A, param.B,
                                                     param.D, param.degree)
    # invariance re-check after the round trip
    h1 = RationalFunction(back.A, back.D)
    for M in G1.generators:
        assert is_invariant_under(h1, M)
