"""Item-by-item verification harness for the bundled reference cases.

Every order, relation, printed class list, partition image, intersection
table, and pair condition is recomputed natively and reported as one
pass/fail item. Words like "h' s h" multiply the named generator matrices
left to right, with a trailing apostrophe marking the class inverse.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .cases import LABELS, PRIMES, _pt, _pts, case_subgroups, load_case, prime_table
from .criterion import check_pair_all_basepoints
from .errors import UnknownCase
from .projline import ProjectiveLine, ProjectiveMatrix
from .subgroups import (GroupKind, Partition, Subgroup, block_action,
                        generate_closure, intersect, is_faithful_on_blocks,
                        orbit, recognize)


@dataclass(frozen=True)
class CheckItem:
    id: str
    claim: str
    passed: bool


@dataclass(frozen=True)
class VerificationReport:
    p: int
    items: tuple[CheckItem, ...]

    @property
    def passed(self) -> bool:
        return all(item.passed for item in self.items)

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "items": [{"id": i.id, "claim": i.claim, "pass": i.passed}
                      for i in self.items],
            "pass": self.passed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def to_text(self) -> str:
        lines = [f"[{'PASS' if i.passed else 'FAIL'}] {self.p}/{i.id}: {i.claim}"
                 for i in self.items]
        n_fail = sum(not i.passed for i in self.items)
        lines.append(f"p={self.p}: {len(self.items) - n_fail}/{len(self.items)} "
                     f"items pass")
        return "\n".join(lines)


def word(line: ProjectiveLine, gen: dict, text: str) -> ProjectiveMatrix:
    """Multiply named generators left to right; trailing ' inverts."""
    M = line.identity
    for tok in text.split():
        A = gen[tok.rstrip("'")]
        if tok.endswith("'"):
            A = line.inverse(A)
        M = line.compose(M, A)
    return M


class _Harness:
    def __init__(self, p: int):
        self.tab = prime_table(p)
        self.line: ProjectiveLine = self.tab["line"]
        self.gen: dict = self.tab["gen"]
        self.items: list[CheckItem] = []

    def add(self, item_id: str, claim: str, ok: bool):
        self.items.append(CheckItem(item_id, claim, bool(ok)))

    def order_item(self, letter: str, n: int):
        ok = self.line.element_order(self.gen[letter]) == n
        self.add(f"order.{letter}", f"{letter} has order {n}", ok)

    def relation(self, item_id: str, lhs: str, rhs: str):
        ok = word(self.line, self.gen, lhs) == word(self.line, self.gen, rhs)
        self.add(item_id, f"{lhs} ~ {rhs}", ok)

    def printed_class(self, item_id: str, lhs: str, printed: ProjectiveMatrix):
        ok = word(self.line, self.gen, lhs) == printed
        self.add(item_id, f"{lhs} ~ {printed}", ok)

    def power_class(self, letter: str, e: int, printed: ProjectiveMatrix):
        ok = self.line.power(self.gen[letter], e) == printed
        self.add(f"{letter}.power{e}", f"{letter}^{e} ~ {printed}", ok)

    def group_items(self, name: str, G: Subgroup, kind: GroupKind):
        self.add(f"{name}.kind",
                 f"{name} has order {kind.order} and type {kind}",
                 len(G) == kind.order and recognize(G) == kind)
        full = frozenset(self.line.points())
        self.add(f"{name}.transitive",
                 f"{name} acts transitively on the {self.line.p + 1} rational points",
                 orbit(G, self.line.points()[0]) == full)

    def element_list(self, item_id: str, G: Subgroup, order: int,
                     printed: list[ProjectiveMatrix]):
        actual = {A for A in G.elements if self.line.element_order(A) == order}
        self.add(item_id,
                 f"the printed {len(printed)} classes are exactly the "
                 f"order-{order} elements",
                 actual == set(printed))

    def pair_items(self, label: str, G1: Subgroup, G2: Subgroup):
        d = self.line.p + 1
        self.add(f"pair.{label}.intersection",
                 "the two groups intersect trivially",
                 len(intersect(G1, G2)) == 1)
        cert = check_pair_all_basepoints(G1, G2)
        self.add(f"pair.{label}.orbits",
                 "both orbits are the full point set for every base point",
                 cert.verdict == "pass")
        self.add(f"pair.{label}.degree",
                 f"the certified pair has degree {d}",
                 cert.verdict == "pass" and cert.degree == d)


def _verify_11(h: _Harness):
    line, gen, tab = h.line, h.gen, h.tab
    h.add("alpha", "2 generates the multiplicative group",
          line.field.primitive_element() == tab["alpha"])
    for letter, n in (("s", 2), ("t", 2), ("h", 3), ("x", 12), ("f", 2), ("r", 6)):
        h.order_item(letter, n)
    h.relation("g1.commute", "s t", "t s")
    h.relation("g1.conj_s", "h' s h", "t")
    h.relation("g1.conj_t", "h' t h", "s t")

    G1, G2 = case_subgroups(11, "a")
    _, G3 = case_subgroups(11, "b")
    _, G4 = case_subgroups(11, "c")
    h.group_items("g1", G1, GroupKind.alt4())
    h.element_list("g1.order2_list", G1, 2, tab["g1_order2"])
    h.element_list("g1.order3_list", G1, 3, tab["g1_order3"])
    h.group_items("g2", G2, GroupKind.cyclic(12))
    for e, printed in sorted(tab["x_power_classes"].items()):
        h.power_class("x", e, printed)
        h.add(f"x.power{e}.outside_g1", f"the class of x^{e} is not in g1",
              line.power(gen["x"], e) not in G1)
    h.relation("g3.dihedral", "f' r f", "r'")
    h.group_items("g3", G3, GroupKind.dihedral(12))
    for e, printed in sorted(tab["r_power_classes"].items()):
        h.power_class("r", e, printed)
    h.add("r.power2.outside_g1", "the class of r^2 is not in g1",
          line.power(gen["r"], 2) not in G1)
    for i, (w, printed) in enumerate(tab["printed_products"]):
        h.printed_class(f"products.{i}", w, printed)
    for i, (lhs, rhs) in enumerate((("s r r r", "r r r s"),
                                    ("t r r r", "r r r t"),
                                    ("s t r r r", "r r r s t"))):
        h.add(f"products.differ.{i}", f"{lhs} and {rhs} are different classes",
              word(line, gen, lhs) != word(line, gen, rhs))
    h.element_list("g4.order2_list", G4, 2, tab["g4_order2"])
    h.element_list("g4.order3_list", G4, 3, tab["g4_order3"])
    h.add("g4.kind", "g4 has the same type as g1",
          recognize(G4) == recognize(G1))
    h.pair_items("a", G1, G2)
    h.pair_items("b", G1, G3)
    h.pair_items("c", G1, G4)


def _verify_23(h: _Harness):
    line, gen, tab = h.line, h.gen, h.tab
    alpha = tab["alpha"]
    h.add("alpha", "5 generates the multiplicative group",
          line.field.primitive_element() == alpha)
    for letter, n in (("s", 2), ("m", 2), ("t", 3), ("h", 4), ("x", 24),
                      ("f", 2), ("r", 12)):
        h.order_item(letter, n)
    h.relation("g1.m_is_h2", "m", "h h")
    h.relation("g1.commute", "s m", "m s")
    h.relation("g1.conj_ts", "t' s t", "m")
    h.relation("g1.conj_tm", "t' m t", "s m")
    h.relation("g1.conj_hs", "h' s h", "s m")
    h.relation("g1.conj_hm", "h' m h", "m")
    h.relation("g1.conj_ht", "h' t h", "s m t t")
    h.relation("g1.conj_ht2", "h' t t h", "m t")

    sub = generate_closure(line, [gen["s"], gen["m"], gen["t"]])
    h.add("g1.sub_kind", "⟨s,m,t⟩ has order 12 and type A4",
          len(sub) == 12 and recognize(sub) == GroupKind.alt4())

    G1, G2 = case_subgroups(23, "a")
    _, G3 = case_subgroups(23, "b")
    _, G4 = case_subgroups(23, "c")
    h.group_items("g1", G1, GroupKind.sym4())

    O: Partition = tab["o_partition"]
    T: Partition = tab["t_partition"]
    h.add("blocks.o.sizes", "the four blocks each contain 6 points",
          [len(b) for b in O.blocks] == [6, 6, 6, 6])
    for letter, perm in sorted(tab["o_block_images"].items()):
        h.add(f"blocks.o.{letter}",
              f"{letter} permutes the four blocks as {perm}",
              block_action(line, gen[letter], O) == perm)
    h.add("blocks.o.faithful", "g1 acts faithfully on the four blocks",
          is_faithful_on_blocks(G1, O))

    h.group_items("g2", G2, GroupKind.cyclic(24))
    for e, printed in sorted(tab["x_power_classes"].items()):
        h.power_class("x", e, printed)
        h.add(f"x.power{e}.outside_g1", f"the class of x^{e} is not in g1",
              line.power(gen["x"], e) not in G1)
    for e, at, image, block in tab["x_point_images"]:
        P = _pt(line, alpha, at)
        img = line.apply(P, line.power(gen["x"], e))
        expected = _pt(line, alpha, image)
        h.add(f"x.power{e}.at.{at}",
              f"x^{e} sends {P} to {expected}, which lies in block {block + 1}",
              img == expected and img in O.blocks[block])
    h.pair_items("a", G1, G2)

    h.relation("g3.dihedral", "f' r f", "r'")
    h.group_items("g3", G3, GroupKind.dihedral(24))
    h.add("blocks.t.sizes", "the two blocks each contain 12 points",
          [len(b) for b in T.blocks] == [12, 12])
    for letter, perm in sorted(tab["t_block_images"].items()):
        h.add(f"blocks.t.{letter}",
              f"{letter} permutes the two blocks as {perm}",
              block_action(line, gen[letter], T) == perm)
    h.add("blocks.t.preserved", "every element of g3 permutes the two blocks",
          all(_preserves(line, A, T) for A in G3.elements))

    cells = tab["o_t_intersections"]
    for (i, j), tokens in sorted(cells.items()):
        expected = _pts(line, alpha, tokens)
        h.add(f"cells.{i + 1}{j + 1}",
              f"block O{i + 1} meets T{j + 1} in exactly {len(tokens)} points",
              O.blocks[i] & T.blocks[j] == expected)
    singletons = [(i, j) for (i, j) in cells
                  if len(O.blocks[i] & T.blocks[j]) == 1]
    h.add("cells.unique_singleton",
          "the unique single-point cell is O2 ∩ T1, at (1:alpha^9)",
          singletons == [(1, 0)] and
          O.blocks[1] & T.blocks[0] == {_pt(line, alpha, 9)})
    h.pair_items("b", G1, G3)

    conj_blocks = [_pts(line, alpha, toks) for toks in tab["conjugated_o_blocks"]]
    for j, expected in enumerate(conj_blocks):
        image = frozenset(line.apply(Q, gen["c"]) for Q in O.blocks[j])
        h.add(f"conj_blocks.{j + 1}",
              f"the conjugator maps O{j + 1} onto the printed 6-point set",
              image == expected)
    empty = [(i, j) for i in range(4) for j in range(4)
             if not (O.blocks[i] & conj_blocks[j])]
    h.add("conj_blocks.unique_empty",
          "O_i misses the conjugated O_j only for (i, j) = (2, 1)",
          empty == [(1, 0)])
    for i, (w, printed) in enumerate(tab["printed_products"]):
        h.printed_class(f"products.{i}", w, printed)
    h.add("g4.kind", "g4 has the same type as g1",
          recognize(G4) == recognize(G1))
    h.pair_items("c", G1, G4)


def _verify_59(h: _Harness):
    line, tab = h.line, h.tab
    h.add("alpha", "2 generates the multiplicative group",
          line.field.primitive_element() == tab["alpha"])
    for letter, n in (("s", 2), ("t", 3), ("x", 60), ("f", 2), ("r", 30)):
        h.order_item(letter, n)
    G1, G2 = case_subgroups(59, "a")
    _, G3 = case_subgroups(59, "b")
    _, G4 = case_subgroups(59, "c")
    h.group_items("g1", G1, GroupKind.alt5())
    h.group_items("g2", G2, GroupKind.cyclic(60))
    h.pair_items("a", G1, G2)
    h.relation("g3.dihedral", "f' r f", "r'")
    h.group_items("g3", G3, GroupKind.dihedral(60))
    h.pair_items("b", G1, G3)
    h.add("g4.kind", "g4 has the same type as g1",
          recognize(G4) == recognize(G1))
    h.pair_items("c", G1, G4)


def _preserves(line, A, partition) -> bool:
    try:
        block_action(line, A, partition)
        return True
    except Exception:
        return False


def verify_prime(p: int, case: str | None = None) -> VerificationReport:
    """Re-run every bundled claim for characteristic p.

    With `case` in {"a", "b", "c"} only that pair's proposition items are
    kept; the shared lemma items always run (every case depends on them).
    """
    if p not in PRIMES:
        raise UnknownCase(f"no reference data for p={p}")
    if case is not None and case not in LABELS:
        raise UnknownCase(f"no reference case label {case!r}")
    h = _Harness(p)
    {11: _verify_11, 23: _verify_23, 59: _verify_59}[p](h)
    items = h.items
    if case is not None:
        items = [i for i in items
                 if not i.id.startswith("pair.") or i.id.startswith(f"pair.{case}.")]
    return VerificationReport(p, tuple(items))
