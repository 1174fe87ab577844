"""Galois-pair criterion: certificates for pairs of subgroups sharing a
regular orbit with trivial intersection.

A passing certificate witnesses the existence of a plane rational curve of
degree d = |G1| = |G2| with two distinct outer Galois points whose groups
are G1 and G2; the quotient module turns it into an explicit parametrization.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import ModulusMismatch
from .projline import ProjectiveLine, ProjectiveMatrix, ProjectivePoint, projective_line
from .subgroups import GroupKind, Subgroup, generate_closure, intersect, orbit, recognize

DEFAULT_BASE_POINT = ProjectivePoint(0, 1)


@dataclass(frozen=True)
class PairCertificate:
    """Machine-checkable evidence for one subgroup pair.

    verdict == "pass" iff the groups differ as element sets, share the
    order d, intersect trivially, and both orbits of the base point are
    regular (length d) and equal.
    """

    p: int
    g1_generators: tuple[ProjectiveMatrix, ...]
    g2_generators: tuple[ProjectiveMatrix, ...]
    kind1: GroupKind
    kind2: GroupKind
    degree: int
    base_point: ProjectivePoint
    intersection_size: int
    orbit1: frozenset[ProjectivePoint]
    orbit2: frozenset[ProjectivePoint]
    failures: tuple[str, ...]

    @property
    def verdict(self) -> str:
        return "fail" if self.failures else "pass"

    @property
    def orbit_length(self) -> int:
        return len(self.orbit1)

    @property
    def orbit_equal(self) -> bool:
        return self.orbit1 == self.orbit2

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "g1": [M.rows() for M in self.g1_generators],
            "g2": [M.rows() for M in self.g2_generators],
            "kind1": str(self.kind1),
            "kind2": str(self.kind2),
            "degree": self.degree,
            "base_point": [self.base_point.s, self.base_point.t],
            "intersection_size": self.intersection_size,
            "orbit_equal": self.orbit_equal,
            "orbit_length": self.orbit_length,
            "verdict": self.verdict,
            "failures": list(self.failures),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _pair_failures(G1: Subgroup, G2: Subgroup, Q: ProjectivePoint,
                   inter_size: int) -> tuple[list[str], frozenset, frozenset]:
    """Evaluate every condition (no short-circuiting)."""
    d = len(G1)
    failures = []
    if G1.elements == G2.elements:
        failures.append("groups not different")
    if len(G2) != d:
        failures.append("orders differ")
    if inter_size != 1:
        failures.append("intersection not trivial")
    o1 = orbit(G1, Q)
    o2 = orbit(G2, Q)
    if len(o1) != d:
        failures.append(f"orbit of G1 at {Q} has length {len(o1)} != {d}")
    if len(o2) != len(G2):
        failures.append(f"orbit of G2 at {Q} has length {len(o2)} != {len(G2)}")
    if o1 != o2:
        failures.append(f"orbits at {Q} differ")
    return failures, o1, o2


def check_pair(G1: Subgroup, G2: Subgroup,
               Q: ProjectivePoint = DEFAULT_BASE_POINT) -> PairCertificate:
    """Certificate for (G1, G2) at the single base point Q."""
    if G1.line.p != G2.line.p:
        raise ModulusMismatch(f"p={G1.line.p} vs p={G2.line.p}")
    inter_size = len(intersect(G1, G2))
    Q = G1.line.point(Q.s, Q.t)
    failures, o1, o2 = _pair_failures(G1, G2, Q, inter_size)
    return PairCertificate(
        p=G1.line.p,
        g1_generators=G1.generators,
        g2_generators=G2.generators,
        kind1=recognize(G1),
        kind2=recognize(G2),
        degree=len(G1),
        base_point=Q,
        intersection_size=inter_size,
        orbit1=o1,
        orbit2=o2,
        failures=tuple(failures),
    )


def check_pair_all_basepoints(G1: Subgroup, G2: Subgroup) -> PairCertificate:
    """Certificate quantified over every rational base point.

    Recorded orbit data refers to the default base point (0:1); failures
    name the base points at which a condition breaks.
    """
    if G1.line.p != G2.line.p:
        raise ModulusMismatch(f"p={G1.line.p} vs p={G2.line.p}")
    line = G1.line
    inter_size = len(intersect(G1, G2))
    failures: list[str] = []
    base = line.point(DEFAULT_BASE_POINT.s, DEFAULT_BASE_POINT.t)
    base_o1 = base_o2 = frozenset()
    for Q in line.points():
        fails, o1, o2 = _pair_failures(G1, G2, Q, inter_size)
        if Q == base:
            base_o1, base_o2 = o1, o2
        for f in fails:
            if f not in failures:
                failures.append(f)
    return PairCertificate(
        p=line.p,
        g1_generators=G1.generators,
        g2_generators=G2.generators,
        kind1=recognize(G1),
        kind2=recognize(G2),
        degree=len(G1),
        base_point=base,
        intersection_size=inter_size,
        orbit1=base_o1,
        orbit2=base_o2,
        failures=tuple(failures),
    )


def subgroups_from_dict(doc: dict) -> tuple[Subgroup, Subgroup, ProjectivePoint]:
    """Rebuild (G1, G2, base point) from certificate or pair-document JSON.

    Accepts both shapes: {"g1": [[..]..], ...} (certificate) and
    {"g1": {"generators": [...]}, ...} (pair input document).
    """
    line = projective_line(int(doc["p"]))

    def gens_of(entry):
        raw = entry["generators"] if isinstance(entry, dict) else entry
        return [line.matrix(rows) for rows in raw]

    G1 = generate_closure(line, gens_of(doc["g1"]))
    G2 = generate_closure(line, gens_of(doc["g2"]))
    s, t = doc.get("base_point", [DEFAULT_BASE_POINT.s, DEFAULT_BASE_POINT.t])
    return G1, G2, line.point(s, t)


def reverify(cert_dict: dict, all_basepoints: bool = False) -> PairCertificate:
    """Re-run closure and every check from the stored generators alone."""
    G1, G2, Q = subgroups_from_dict(cert_dict)
    if all_basepoints:
        return check_pair_all_basepoints(G1, G2)
    return check_pair(G1, G2, Q)
