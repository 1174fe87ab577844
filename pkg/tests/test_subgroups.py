from collections import Counter

import pytest

from galoispairs import (ClosureCapExceeded, GroupKind, ModulusMismatch,
                         NotBlockPreserving, Partition, block_action,
                         case_subgroups, conjugate, generate_closure,
                         intersect, is_faithful_on_blocks, orbit,
                         order_multiset, parse_kind, projective_line,
                         recognize, stabilizer, trivial_subgroup)
from galoispairs.cases import prime_table


def suite_groups():
    for p in (11, 23, 59):
        for label in ("a", "b", "c"):
            G1, G2 = case_subgroups(p, label)
            yield G1
            yield G2


def test_closure_trivial():
    line = projective_line(11)
    G = generate_closure(line, [line.identity])
    assert len(G) == 1


def test_closure_reference_sizes():
    assert len(case_subgroups(11, "a")[0]) == 12
    assert len(case_subgroups(23, "b")[1]) == 24
    assert len(case_subgroups(59, "a")[0]) == 60


def test_closure_cap_exceeded():
    line = projective_line(11)
    gens = [line.matrix([[1, 1], [0, 1]]), line.matrix([[0, 1], [1, 0]])]
    with pytest.raises(ClosureCapExceeded):
        generate_closure(line, gens, cap=600)


def test_closure_is_closed_and_lagrange():
    for G in suite_groups():
        line = G.line
        n = line.p ** 3 - line.p
        assert n % len(G) == 0
        for A in G.generators:
            assert A in G.elements
        for A in list(G.elements)[:8]:
            assert line.inverse(A) in G.elements
            for B in list(G.elements)[:8]:
                assert line.compose(A, B) in G.elements


def test_order_multiset():
    line = projective_line(11)
    assert order_multiset(trivial_subgroup(line)) == {1: 1}
    G1 = case_subgroups(11, "a")[0]
    assert order_multiset(G1) == {1: 1, 2: 3, 3: 8}
    G3 = case_subgroups(11, "b")[1]
    tally = Counter(line.element_order(A) for A in G3.elements)
    assert order_multiset(G3) == dict(tally) == {1: 1, 2: 7, 3: 2, 6: 2}


def test_recognize_reference_kinds():
    assert recognize(case_subgroups(11, "a")[1]) == GroupKind.cyclic(12)
    assert recognize(case_subgroups(23, "a")[0]) == GroupKind.sym4()
    assert recognize(case_subgroups(59, "b")[1]) == GroupKind.dihedral(60)
    assert recognize(case_subgroups(11, "a")[0]) == GroupKind.alt4()
    assert recognize(case_subgroups(59, "a")[0]) == GroupKind.alt5()


def test_recognize_klein_as_dihedral_4():
    line = projective_line(5)
    G = generate_closure(line, [line.matrix([[-1, 0], [0, 1]]),
                                line.matrix([[0, 1], [1, 0]])])
    assert len(G) == 4
    assert recognize(G) == GroupKind.dihedral(4)


def test_recognize_trivial_and_cyclic():
    line = projective_line(11)
    assert recognize(trivial_subgroup(line)) == GroupKind.cyclic(1)
    G = generate_closure(line, [line.matrix([[-1, 0], [0, 1]])])
    assert recognize(G) == GroupKind.cyclic(2)


def test_intersect():
    G1, G2 = case_subgroups(11, "a")
    assert intersect(G1, G1).elements == G1.elements
    assert len(intersect(G1, G2)) == 1
    G1_23, G4_23 = case_subgroups(23, "c")
    assert len(intersect(G1_23, G4_23)) == 1
    with pytest.raises(ModulusMismatch):
        intersect(G1, G1_23)


def test_intersect_symmetric():
    G1, _ = case_subgroups(11, "a")
    _, G3 = case_subgroups(11, "b")
    assert intersect(G1, G3).elements == intersect(G3, G1).elements


def test_conjugate():
    tab = prime_table(11)
    line, gen = tab["line"], tab["gen"]
    G1 = case_subgroups(11, "a")[0]
    assert conjugate(G1, line.identity).elements == G1.elements
    # single-element check against the printed conjugated involution
    sigma_conj = conjugate(generate_closure(line, [gen["s"]]), gen["c"])
    assert line.matrix([[0, 6], [1, 0]]) in sigma_conj.elements
    G4_23 = conjugate(case_subgroups(23, "a")[0], prime_table(23)["gen"]["c"])
    assert recognize(G4_23) == GroupKind.sym4()


def test_conjugate_preserves_invariants():
    line = projective_line(11)
    C = line.matrix([[3, 1], [5, 2]])
    for G in (case_subgroups(11, "a")[0], case_subgroups(11, "b")[1]):
        H = conjugate(G, C)
        assert len(H) == len(G)
        assert order_multiset(H) == order_multiset(G)
        assert recognize(H) == recognize(G)


def test_orbit():
    line = projective_line(11)
    Q = line.point(0, 1)
    assert orbit(trivial_subgroup(line), Q) == {Q}
    G1 = case_subgroups(11, "a")[0]
    assert orbit(G1, Q) == frozenset(line.points())
    # order-3 generator at p=23 gives a 3-point orbit off the first block
    tab = prime_table(23)
    line23 = projective_line(23)
    T = generate_closure(line23, [tab["gen"]["t"]])
    orb = orbit(T, line23.point(1, 0))
    assert len(orb) == 3
    O = tab["o_partition"]
    assert orb <= O.blocks[1] | O.blocks[2] | O.blocks[3]


def test_stabilizer():
    line = projective_line(11)
    Q = line.point(0, 1)
    assert len(stabilizer(trivial_subgroup(line), Q)) == 1
    G1 = case_subgroups(11, "a")[0]
    assert len(stabilizer(G1, Q)) == 1
    # involution diag(-1,1) fixes (1:0) and (0:1); scan all points
    G = generate_closure(line, [line.matrix([[-1, 0], [0, 1]])])
    fixed = [P for P in line.points()
             if line.apply(P, G.generators[0]) == P]
    assert fixed == [line.point(0, 1), line.point(1, 0)]
    for P in fixed:
        assert stabilizer(G, P).elements == G.elements


def test_orbit_stabilizer_product():
    for G in suite_groups():
        line = G.line
        for Q in line.points():
            assert len(orbit(G, Q)) * len(stabilizer(G, Q)) == len(G)


def test_regularity_of_order_p_plus_1_groups():
    for p in (11, 23, 59):
        G2 = case_subgroups(p, "a")[1]
        line = G2.line
        assert len(G2) == p + 1
        assert len(orbit(G2, line.points()[0])) == p + 1
        for Q in line.points():
            assert len(stabilizer(G2, Q)) == 1


def test_partition_validation():
    line = projective_line(11)
    pts = list(line.points())
    with pytest.raises(ValueError):
        Partition(line, [pts[:5], pts[4:]])  # overlap
    with pytest.raises(ValueError):
        Partition(line, [pts[:5]])  # not covering


def test_block_action_printed_images():
    tab = prime_table(23)
    line, gen = tab["line"], tab["gen"]
    O, T = tab["o_partition"], tab["t_partition"]
    assert block_action(line, line.identity, O) == (0, 1, 2, 3)
    assert block_action(line, gen["s"], O) == (1, 0, 3, 2)
    assert block_action(line, gen["r"], T) == (0, 1)
    with pytest.raises(NotBlockPreserving):
        block_action(line, line.matrix([[1, 1], [0, 1]]), O)


def test_faithfulness():
    tab = prime_table(23)
    line = tab["line"]
    O, T = tab["o_partition"], tab["t_partition"]
    assert is_faithful_on_blocks(trivial_subgroup(line), O)
    G1 = case_subgroups(23, "a")[0]
    assert is_faithful_on_blocks(G1, O)
    G3 = case_subgroups(23, "b")[1]
    assert not is_faithful_on_blocks(G3, T)


def test_parse_kind():
    assert parse_kind("A4") == GroupKind.alt4()
    assert parse_kind("C12") == GroupKind.cyclic(12)
    assert parse_kind("D60") == GroupKind.dihedral(60)
    assert str(parse_kind("D24")) == "D24"
    assert str(GroupKind.other(42)) == "Other(42)"
    for bad in ("B7", "C0", "D7", "D2", "", "A6"):
        with pytest.raises(ValueError):
            parse_kind(bad)
