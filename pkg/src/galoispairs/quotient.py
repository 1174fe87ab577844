"""Constructive quotient maps and plane-curve parametrizations.

For a subgroup G with |G| coprime to p, a G-invariant rational function of
degree exactly |G| is read off the coefficients of prod_{g in G}(X - g(t)):
each coefficient is a symmetric function of the orbit {g(t)} and hence
invariant, and a non-constant invariant of a degree-|G| quotient map has
degree exactly |G|. A Moebius adjustment 1/(f - f(Q)) then moves the orbit
of the base point to the polar set, giving two maps over one common
denominator and the projective parametrization (A : B : D).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .criterion import PairCertificate
from .errors import DegenerateInvariant, EvaluationAtPole, IrregularOrbit
from .polys import INFINITY, Poly, RationalFunction, vanishing_poly
from .projline import ProjectiveMatrix, ProjectivePoint, projective_line
from .subgroups import Subgroup, generate_closure, orbit


@lru_cache(maxsize=128)
def invariant_generator(G: Subgroup) -> RationalFunction:
    """A rational function of degree |G| fixed by every element of G."""
    line = G.line
    field = line.field
    n = len(G)
    if n % line.p == 0:
        raise ValueError("group order must be coprime to p")
    if n == 1:
        return RationalFunction(Poly.x(field), Poly.const(field, 1))
    # cleared product prod (D_g X - N_g) with N_g = b + d t, D_g = a + c t:
    # coeffs[i] is the t-polynomial multiplying X^i
    p = line.p
    coeffs = [[1]]
    for (a, b, c, d) in sorted(G.elements):
        nb, nd = -b % p, -d % p
        new = []
        for i in range(len(coeffs) + 1):
            lo = coeffs[i] if i < len(coeffs) else None
            hi = coeffs[i - 1] if i >= 1 else None
            ln = len(lo) if lo else 0
            lh = len(hi) if hi else 0
            row = [0] * (max(ln, lh) + 1)
            if lo:
                for k, v in enumerate(lo):
                    row[k] = (row[k] + v * nb) % p
                    row[k + 1] = (row[k + 1] + v * nd) % p
            if hi:
                for k, v in enumerate(hi):
                    row[k] = (row[k] + v * a) % p
                    row[k + 1] = (row[k + 1] + v * c) % p
            new.append(row)
        coeffs = new
    polys = [Poly(field, row) for row in coeffs]
    top = polys[n]
    for i in range(n - 1, -1, -1):
        if polys[i].degree < 0:
            continue
        f = RationalFunction(polys[i], top)
        if f.degree == n:
            return f
    # pairwise combinations as a fallback for fully degenerate coefficients
    for i in range(n - 1, -1, -1):
        for j in range(i - 1, -1, -1):
            for lam in range(1, min(line.p, 32)):
                cand = polys[i] + polys[j].scale(lam)
                if cand.degree < 0:
                    continue
                f = RationalFunction(cand, top)
                if f.degree == n:
                    return f
    raise DegenerateInvariant(f"no degree-{n} invariant coefficient found")


def moebius_adjust(f: RationalFunction, G: Subgroup,
                   Q: ProjectivePoint) -> RationalFunction:
    """h = 1/(f - f(Q)), with the orbit of Q as its simple polar set.

    Requires the orbit to be regular (length |G|). The reduced denominator
    must come out as the monic vanishing polynomial of the orbit's affine
    points, with the degree excess accounting for a pole at (0:1) exactly
    when the orbit contains it.
    """
    line = G.line
    Q = line.point(Q.s, Q.t)
    pts = orbit(G, Q)
    if len(pts) != len(G):
        raise IrregularOrbit(f"orbit of {Q} has length {len(pts)} != {len(G)}")
    value = f.eval_point(Q)
    if value is INFINITY:
        f = f.reciprocal()
        value = f.eval_point(Q)
        if value is INFINITY:
            raise EvaluationAtPole(f"pole of both f and 1/f at {Q}")
    h = RationalFunction(f.den, f.shift_value(value).num)
    expected_den = vanishing_poly(line.field, sorted(P.t for P in pts if P.s == 1))
    infinity_in_orbit = any(P.s == 0 for P in pts)
    d = len(G)
    ok = h.den == expected_den
    if infinity_in_orbit:
        ok = ok and h.num.degree == expected_den.degree + 1
    else:
        ok = ok and h.num.degree <= expected_den.degree
    if not ok or h.degree != d:
        raise EvaluationAtPole(
            f"polar set of the adjusted invariant is not the orbit of {Q}")
    return h


@dataclass(frozen=True)
class CurveParametrization:
    """Projective map (A(t) : B(t) : D(t)) of max component degree `degree`."""

    p: int
    A: Poly
    B: Poly
    D: Poly
    degree: int

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "degree": self.degree,
            "A": [int(c) for c in self.A.coeffs],
            "B": [int(c) for c in self.B.coeffs],
            "D": [int(c) for c in self.D.coeffs],
        }


def parametrization_from_dict(doc: dict) -> CurveParametrization:
    field = projective_line(int(doc["p"])).field
    return CurveParametrization(
        p=field.p,
        A=Poly(field, doc["A"]),
        B=Poly(field, doc["B"]),
        D=Poly(field, doc["D"]),
        degree=int(doc["degree"]),
    )


def emit_parametrization(cert: PairCertificate) -> CurveParametrization:
    """Degree-d plane parametrization witnessing a passing certificate.

    The two coordinate projections (A : D) and (B : D) are the adjusted
    invariants of the two groups, sharing the base-point orbit as their
    common polar set.
    """
    if cert.verdict != "pass":
        raise ValueError("certificate must pass before a curve is emitted")
    line = projective_line(cert.p)
    G1 = generate_closure(line, cert.g1_generators)
    G2 = generate_closure(line, cert.g2_generators)
    Q = cert.base_point
    h1 = moebius_adjust(invariant_generator(G1), G1, Q)
    h2 = moebius_adjust(invariant_generator(G2), G2, Q)
    if h1.den != h2.den:
        raise EvaluationAtPole("the two adjusted invariants disagree on the "
                               "common denominator")
    degree = max(h1.num.degree, h2.num.degree, h1.den.degree)
    return CurveParametrization(p=cert.p, A=h1.num, B=h2.num, D=h1.den,
                                degree=degree)


def is_invariant_under(f: RationalFunction, M: ProjectiveMatrix) -> bool:
    """Exact identity f((b+dt)/(a+ct)) == f(t) after clearing (a+ct)^deg."""
    m = f.degree
    num_sub = f.num.compose_frac(m, M)
    den_sub = f.den.compose_frac(m, M)
    return num_sub * f.den == f.num * den_sub


def fibers(f: RationalFunction, line) -> dict:
    """Level sets of f on the rational points, keyed by value (or INFINITY)."""
    out: dict = {}
    for Q in line.points():
        out.setdefault(f.eval_point(Q), set()).add(Q)
    return {k: frozenset(v) for k, v in out.items()}
