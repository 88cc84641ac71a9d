"""Worked examples from the literature, runnable as a self test."""

from __future__ import annotations

from fractions import Fraction

from .conic import conic_has_point, conic_normalize
from .elliptic import (
    NOT_POTENTIAL_GOOD, ConicResidue, EllipticResidue, WeierstrassCurve, omega_star,
    verify_witness, weierstrass_identity_check, second_identity_check,
)
from .exact_algebra import Poly
from .gauss import AffineGenerator, GaussValuation, ResidueKind, analyze_quadratic_gauss
from .valued_field import Value, ValuedField


def tate_curve(semantics: str = "real-signs"):
    """Y^2 = (tS-1)(S^2+1) rewritten with S = tX + 1/(3t)."""
    F = ValuedField.parse(f"tadic:Q:{'real' if semantics == 'real-signs' else 'exact'}")
    t = F.t
    a = (3 * t ** 2 - 1) / (3 * t ** 4)
    b = -2 * (9 * t ** 2 + 1) / (27 * t ** 6)
    return WeierstrassCurve(F, a, b)


def check_bad_reduction_example() -> bool:
    curve = tate_curve()
    F, t = curve.field, curve.field.t
    rep = omega_star(curve)
    return (
        curve.discriminant == 4 * (t ** 2 + 1) ** 2 / t ** 10
        and rep.reduction.v_delta == Value([-10])
        and rep.reduction.v_a3 == rep.reduction.v_b2 == Value([-12])
        and rep.reduction.tag == NOT_POTENTIAL_GOOD
        and rep.count == 1
        and rep.generator == AffineGenerator(6 * t ** 5 * curve.a, 9 * t ** 5 * curve.b)
        and isinstance(rep.residue, ConicResidue)
        and rep.residue.klass.to_json() == [-1, -1]
        and verify_witness(curve, rep)
    )


def check_two_nonruled_extensions() -> bool:
    F = ValuedField.parse("tadic:Q:real")
    t = F.t
    X = Poly.gen(F.domain, "X")
    f = -(X ** 2 + t ** 2) * (X ** 2 + 1)
    results = []
    for scale in (F.domain.one, 1 / t):
        info = analyze_quadratic_gauss(f, GaussValuation.wrt_x(F, scale))
        results.append(info.kind is ResidueKind.CONIC and not info.ruled
                       and conic_normalize(*info.conic).to_json() == [-1, -1])
    w0, w1 = GaussValuation.wrt_x(F), GaussValuation.wrt_x(F, 1 / t)
    return all(results) and not w0.same_as(w1)


def check_good_reduction() -> bool:
    F = ValuedField.parse("padic:5")
    ok = True
    for a, b, d in ((1, 1, Fraction(1)), (625, 15625, Fraction(1, 5))):
        curve = WeierstrassCurve(F, a, b)
        rep = omega_star(curve)
        res = rep.residue
        ok &= (rep.count == 1 and isinstance(res, EllipticResidue)
               and (int(res.a_bar), int(res.b_bar), int(res.delta_bar)) == (1, 1, 1)
               and rep.scaling["d"] == d and verify_witness(curve, rep))
    G = ValuedField.parse("composite:5")
    curve = WeierstrassCurve(G, 1, 5 * G.t)
    rep = omega_star(curve)
    res = rep.residue
    ok &= (rep.count == 1 and isinstance(res, EllipticResidue)
           and (int(res.a_bar), int(res.b_bar), int(res.delta_bar)) == (1, 0, 4))
    return ok


def check_identities() -> bool:
    F = ValuedField.parse("padic:5")
    return (weierstrass_identity_check(F, 1, 1, 1)
            and weierstrass_identity_check(F, 2, 3, 7)
            and not weierstrass_identity_check(F, 1, 1, 1, k27=26)
            and second_identity_check(F, 2, 3))


def check_conics() -> bool:
    Q = conic_normalize(Fraction(-4, 81), Fraction(-16, 81))
    return (Q.to_json() == [-1, -1] and not conic_has_point(Q)
            and conic_has_point(conic_normalize(Fraction(2), Fraction(7))))


CHECKS = [
    ("bad reduction example over R((t))", check_bad_reduction_example),
    ("genus one field with two non-ruled extensions", check_two_nonruled_extensions),
    ("good reduction cases", check_good_reduction),
    ("Weierstrass identities", check_identities),
    ("conic point tests", check_conics),
]


def run_selftest():
    results = []
    for name, fn in CHECKS:
        try:
            ok = bool(fn())
        except Exception as exc:  # reported as a failure line
            ok = False
            name = f"{name} ({type(exc).__name__}: {exc})"
        results.append((name, ok))
    return results
