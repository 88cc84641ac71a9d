"""Reduction types of Y^2 = X^3 + aX + b and its unique non-ruled residue extension.

``omega_star`` decides whether v has a residually transcendental extension
to F = E(X)[sqrt(X^3+aX+b)] with non-ruled residue field; there is at most
one, and when it exists this module returns its Gauss generator and the
residue curve (an elliptic curve or a pointless conic).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .conic import ConicClass, conic_has_point, conic_normalize
from .exact_algebra import Poly
from .gauss import AffineGenerator, GaussValuation, ResidueKind, analyze_quadratic_gauss
from .valued_field import Value, ValuedField

GOOD = "good"
POTENTIAL_GOOD_NOT_GOOD = "potential_good_not_good"
NOT_POTENTIAL_GOOD = "not_potential_good"


class SingularCurveError(ValueError):
    pass


def discriminant(a, b):
    return 4 * a ** 3 + 27 * b ** 2


@dataclass(frozen=True)
class WeierstrassCurve:
    field: ValuedField
    a: object
    b: object

    def __post_init__(self):
        dom = self.field.domain
        object.__setattr__(self, "a", dom(self.a))
        object.__setattr__(self, "b", dom(self.b))
        disc = discriminant(self.a, self.b)
        if not disc:
            raise SingularCurveError("singular curve: discriminant is zero")
        object.__setattr__(self, "discriminant", disc)

    def radicand(self) -> Poly:
        dom = self.field.domain
        return Poly._raw([self.b, self.a, dom.zero, dom.one], dom, "X")


@dataclass
class ReductionType:
    tag: str
    v_delta: Value
    v_a3: Value
    v_b2: Value
    d: object = None
    a_prime: object = None
    b_prime: object = None


@dataclass
class EllipticResidue:
    a_bar: object
    b_bar: object
    delta_bar: object


@dataclass
class ConicResidue:
    klass: ConicClass


@dataclass
class OmegaStarReport:
    reduction: ReductionType
    count: int
    generator: AffineGenerator | None = None
    scaling: dict = dc_field(default_factory=dict)
    residue: EllipticResidue | ConicResidue | None = None
    notes: list = dc_field(default_factory=list)


def classify_reduction(curve: WeierstrassCurve) -> ReductionType:
    vf = curve.field
    v_delta = vf.valuate(curve.discriminant)
    v_a3 = 3 * vf.valuate(curve.a)
    v_b2 = 2 * vf.valuate(curve.b)
    m = min(v_a3, v_b2)
    if v_delta > m:
        return ReductionType(NOT_POTENTIAL_GOOD, v_delta, v_a3, v_b2)
    if vf.in_index_subgroup(v_delta, 12):
        red = ReductionType(GOOD, v_delta, v_a3, v_b2)
        red.a_prime, red.b_prime, red.d = rescale(curve, "good-units")
        return red
    return ReductionType(POTENTIAL_GOOD_NOT_GOOD, v_delta, v_a3, v_b2)


def rescale(curve: WeierstrassCurve, target: str):
    """(a', b', d) with a' = d^4 a, b' = d^6 b brought to the requested unit form."""
    vf = curve.field
    v_delta = vf.valuate(curve.discriminant)
    v_a3 = 3 * vf.valuate(curve.a)
    v_b2 = 2 * vf.valuate(curve.b)
    if target == "good-units":
        if v_delta != min(v_a3, v_b2) or not vf.in_index_subgroup(v_delta, 12):
            raise ValueError("good-units rescaling needs v(disc) = min{v(a^3), v(b^2)} in 12vE")
        gamma = v_delta
    elif target == "bad-units":
        if not (v_delta > v_a3 == v_b2) or not vf.in_index_subgroup(v_a3, 12):
            raise ValueError("bad-units rescaling needs v(disc) > v(a^3) = v(b^2) in 12vE")
        gamma = v_a3
    else:
        raise ValueError(f"unknown rescaling target {target!r}")
    d = vf.section(-(gamma / 12))
    return d ** 4 * curve.a, d ** 6 * curve.b, d


def omega_star(curve: WeierstrassCurve) -> OmegaStarReport:
    vf = curve.field
    red = classify_reduction(curve)
    if red.tag == GOOD:
        a1, b1, d = red.a_prime, red.b_prime, red.d
        res = EllipticResidue(vf.residue(a1), vf.residue(b1), vf.residue(discriminant(a1, b1)))
        gen = AffineGenerator(d * d, vf.domain.zero)
        return OmegaStarReport(red, 1, gen, {"d": d}, res)
    if red.tag == POTENTIAL_GOOD_NOT_GOOD:
        return OmegaStarReport(red, 0, notes=["potential good reduction without good reduction: every extension is ruled"])
    if red.v_a3 != red.v_b2:
        raise AssertionError("v(disc) > min forces v(a^3) = v(b^2)")
    v_ab = vf.valuate(curve.a * curve.b)
    notes = []
    if not vf.in_index_subgroup(v_ab, 2):
        notes.append("v(ab) not in 2vE")
    if not vf.in_index_subgroup(red.v_delta, 2):
        notes.append("v(disc) not in 2vE")
    if notes:
        return OmegaStarReport(red, 0, notes=notes)
    alpha, beta, d = rescale(curve, "bad-units")
    c = vf.section(-(red.v_delta / 2))
    u1 = alpha * beta
    u2 = c * c * curve.discriminant
    r1, r2 = vf.residue(u1), vf.residue(u2)
    klass = conic_normalize(-2 * r1, -2 * r1 * r2, vf.semantics)
    stated = conic_normalize(-2 * r1, r2, vf.semantics)
    notes = [f"residue conic from direct computation: {klass.to_json()}",
             f"conic class C(-2u1, u2): {stated.to_json()}"]
    scaling = {"d": d, "c": c, "u1": u1, "u2": u2}
    gen = AffineGenerator(6 * c * curve.a, 9 * c * curve.b)
    if conic_has_point(klass):
        notes.append("residue conic has a rational point: every extension is ruled")
        return OmegaStarReport(red, 0, None, scaling, None, notes)
    return OmegaStarReport(red, 1, gen, scaling, ConicResidue(klass), notes)


def verify_witness(curve: WeierstrassCurve, report: OmegaStarReport) -> bool:
    """Recompute the residue field at the reported generator and compare."""
    if report.count != 1:
        raise ValueError("no witness to verify")
    vf = curve.field
    info = analyze_quadratic_gauss(curve.radicand(), GaussValuation(vf, report.generator))
    if info.ruled:
        return False
    res = report.residue
    if isinstance(res, EllipticResidue):
        if info.kind is not ResidueKind.GENUS or info.genus != 1:
            return False
        F = vf.residue_field
        expected = Poly([res.b_bar, res.a_bar, F.zero, F.one], F, info.core_poly.var)
        return info.core_poly == expected and vf.residue_is_square(info.constant_class) and bool(res.delta_bar)
    if info.kind is not ResidueKind.CONIC:
        return False
    return conic_normalize(*info.conic, vf.semantics) == res.klass


def weierstrass_identity_check(field: ValuedField, a, b, c, *, k27=27, radicand=None) -> bool:
    """(6a)^3 c^2 (X^3+aX+b) == c^-1 S (S^2 + 9c^2 disc) - 27 b (S^2 + c^2 disc), S = c(6aX+9b).

    ``k27`` replaces the constant 27 in the right-hand side and ``radicand`` the
    cubic on the left (both only for perturbation tests).
    """
    E = field.domain
    a, b, c = E(a), E(b), E(c)
    X = Poly.gen(E, "X")
    disc = discriminant(a, b)
    S = X * (6 * a * c) + 9 * b * c
    cubic = X ** 3 + X * a + b if radicand is None else radicand
    lhs = cubic * (216 * a ** 3 * c * c)
    rhs = S * (S * S + 9 * c * c * disc) * (E.one / c) - (S * S + c * c * disc) * (k27 * b)
    return lhs == rhs


def second_identity_check(field: ValuedField, a, b, *, k27=27, radicand=None) -> bool:
    """(36a^2/b)^2 (X^3+aX+b) == 6ab((S-27)S^2 + 9(S-3) disc/b^2), S = (6aX+9b)/b."""
    E = field.domain
    a, b = E(a), E(b)
    X = Poly.gen(E, "X")
    disc = discriminant(a, b)
    S = (X * (6 * a) + 9 * b) * (E.one / b)
    cubic = X ** 3 + X * a + b if radicand is None else radicand
    lhs = cubic * (36 * a * a / b) ** 2
    rhs = ((S - k27) * S * S + (S - 3) * (9 * disc / (b * b))) * (6 * a * b)
    return lhs == rhs
