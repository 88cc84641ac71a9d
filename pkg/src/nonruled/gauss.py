"""Gauss extensions of v to E(X) and residue fields of E(X)[sqrt(g)].

A Gauss extension is given by an affine generator S = eX + f: the valuation
with w(sum c_i S^i) = min v(c_i), residue field Ev(S) with S transcendental.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field as dc_field

from .conic import conic_has_point, conic_normalize
from .exact_algebra import Poly, RatFunc, RationalFunctionField, squarefree_decompose
from .valued_field import INF, Value, ValuedField


class NonzeroValueError(ValueError):
    """Residue requested for an element whose value is not zero."""


class SplitExtensionError(ValueError):
    """The Gauss valuation splits in E(X)[sqrt(g)]; element values are ambiguous."""


@dataclass(frozen=True)
class AffineGenerator:
    e: object
    f: object
    label: str = "S"

    def __post_init__(self):
        if not self.e:
            raise ValueError("affine generator needs e != 0")

    @classmethod
    def from_poly(cls, poly: Poly, label: str = "S") -> AffineGenerator:
        if poly.degree != 1:
            raise ValueError(f"generator must be affine in X, got degree {poly.degree}")
        return cls(poly.coeffs[1], poly.coeffs[0], label)

    def as_poly(self, field: ValuedField) -> Poly:
        return Poly._raw([field.domain(self.f), field.domain(self.e)], field.domain, "X")


@dataclass(frozen=True)
class GaussValuation:
    field: ValuedField
    generator: AffineGenerator

    @classmethod
    def wrt_x(cls, field: ValuedField, scale=1) -> GaussValuation:
        return cls(field, AffineGenerator(field.domain(scale), field.domain.zero))

    @property
    def function_field(self) -> RationalFunctionField:
        return RationalFunctionField(self.field.domain, "X")

    def coerce(self, h) -> RatFunc:
        return self.function_field(h)

    def in_generator(self, h):
        """Rewrite h(X) as num(S)/den(S), polynomials over E."""
        h = self.coerce(h)
        E = self.field.domain
        e, f = E(self.generator.e), E(self.generator.f)
        inv = E.one / e
        x_of_s = Poly._raw([-f * inv, inv], E, "S")
        return h.num(x_of_s), h.den(x_of_s)

    def same_as(self, other: GaussValuation) -> bool:
        """Whether two affine generators define the same Gauss valuation."""
        E = self.field.domain
        u = E(other.generator.e) / E(self.generator.e)
        r = E(other.generator.f) - u * E(self.generator.f)
        zero = self.field.zero_value
        return self.field.valuate(u) == zero and self.field.valuate(r) >= zero


def _min_value(poly: Poly, field: ValuedField) -> Value:
    if not poly.coeffs:
        return INF
    return min(field.valuate(c) for c in poly.coeffs if c)


def gauss_value(h, w: GaussValuation) -> Value:
    num, den = w.in_generator(h)
    if not num.coeffs:
        return INF
    return _min_value(num, w.field) - _min_value(den, w.field)


def _residue_of(num: Poly, den: Poly, w: GaussValuation) -> RatFunc:
    vf = w.field
    gamma = _min_value(num, vf)
    if gamma != _min_value(den, vf):
        raise NonzeroValueError("residue of an element with nonzero value")
    phi_inv = vf.domain.one / vf.section(gamma)
    label = w.generator.label.lower()
    rn = num.map_coeffs(lambda c: vf.residue(c * phi_inv), vf.residue_field, label)
    rd = den.map_coeffs(lambda c: vf.residue(c * phi_inv), vf.residue_field, label)
    return RatFunc(rn, rd, RationalFunctionField(vf.residue_field, label))


def gauss_residue(h, w: GaussValuation) -> RatFunc:
    num, den = w.in_generator(h)
    if not num.coeffs:
        raise NonzeroValueError("residue of zero")
    return _residue_of(num, den, w)


class ResidueKind(enum.Enum):
    RATIONAL = "rational"
    SPLIT_OR_CONSTANT = "split_or_constant"
    CONIC = "conic"
    GENUS = "genus_at_least_one"


@dataclass
class ResidueAnalysis:
    value: Value
    parity_in_2vE: bool
    kind: ResidueKind
    ruled: bool
    residue: RatFunc | None = None
    constant_class: object = None
    core_poly: Poly | None = None
    conic: tuple | None = None
    genus: int = 0
    split: bool = False
    notes: list = dc_field(default_factory=list)


def analyze_quadratic_gauss(g, w: GaussValuation) -> ResidueAnalysis:
    """Residue field of the extensions of w to E(X)[sqrt(g)] and whether it is ruled over Ev."""
    vf = w.field
    num, den = w.in_generator(g)
    if not num.coeffs:
        raise ValueError("radicand must be nonzero")
    wg = _min_value(num, vf) - _min_value(den, vf)
    if not vf.in_index_subgroup(wg, 2):
        return ResidueAnalysis(wg, False, ResidueKind.RATIONAL, True,
                               notes=["ramified: residue field is Ev(S)"])
    phi = vf.section(wg / 2)
    r = _residue_of(num.scale(vf.domain.one / (phi * phi)), den, w)
    # sqrt(n/d) generates the same extension as sqrt(n*d)
    scalar, factors = squarefree_decompose(r.num * r.den)
    core = Poly._raw([vf.residue_field.one], vf.residue_field, r.num.var)
    for fac, mult in factors:
        if mult % 2:
            core = core * fac
    out = ResidueAnalysis(wg, True, ResidueKind.SPLIT_OR_CONSTANT, True, residue=r,
                          constant_class=scalar, core_poly=core)
    deg = core.degree
    if deg == 0:
        out.split = vf.residue_is_square(scalar)
    elif deg == 1:
        out.kind = ResidueKind.RATIONAL
    elif deg == 2:
        c0, c1 = core.coeffs[0], core.coeffs[1]
        A = scalar
        B = scalar * (c0 - c1 * c1 / 4)
        out.kind = ResidueKind.CONIC
        out.conic = (A, B)
        out.ruled = conic_has_point(conic_normalize(A, B, vf.semantics))
    else:
        out.kind = ResidueKind.GENUS
        out.genus = (deg - 1) // 2
        out.ruled = False
    return out


@dataclass(frozen=True)
class QuadExtElement:
    """p + q*sqrt(g) with p, q, g in E(X)."""
    p: object
    q: object
    g: object


def quad_ext_value(x: QuadExtElement, w: GaussValuation) -> Value:
    info = analyze_quadratic_gauss(x.g, w)
    if info.parity_in_2vE and info.kind is ResidueKind.SPLIT_OR_CONSTANT and info.split:
        raise SplitExtensionError("residue of the radicand is a square: w does not extend uniquely")
    return min(gauss_value(x.p, w), gauss_value(x.q, w) + info.value / 2)
