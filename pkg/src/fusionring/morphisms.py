"""Morphisms between fusion semirings.

Morphisms are extensional: a nonnegative-integer matrix sending source
simples to target elements, optionally twisted by a source element D with
f(x) f(y) = f(x D y).  The module verifies that identity, decides dominance,
certifies FPdim transport, and evaluates the adjoint / relative-tensor /
Morita formulas.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional, Union

from .core import FusionData, MultisetElement, multiply
from .fpengine import (
    AlgebraicNumber,
    ExactValue,
    algebraic_equal,
    as_interval,
    exact_cmp,
    exact_mul,
    fpdim_element,
    iv_add,
    iv_mul,
    iv_scale,
    iv_separation,
    normalize_value,
    reciprocal,
)
from .regular import CHECK_TOLERANCE, CHECK_WIDTH, regular_element, fpdim_category
from .report import ValidationReport, Violation

Rat = Union[int, Fraction]
ValueLike = Union[Rat, AlgebraicNumber]


@dataclass(frozen=True)
class SemiringMorphism:
    """Matrix presentation of a map between fusion bases.

    matrix[t][s] is the multiplicity of target simple t in the image of
    source simple s (column s = image of source simple s).  twist is the
    element D of the source; None means untwisted (D = 1).
    """

    source: FusionData
    target: FusionData
    matrix: tuple[tuple[int, ...], ...]
    twist: Optional[MultisetElement] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "matrix", tuple(tuple(row) for row in self.matrix))
        if len(self.matrix) != self.target.rank or any(
            len(row) != self.source.rank for row in self.matrix
        ):
            raise ValueError("matrix must be target_rank x source_rank")
        if any(not isinstance(m, int) or m < 0 for row in self.matrix for m in row):
            raise ValueError("matrix entries must be nonnegative integers")
        if self.twist is not None and self.twist.data != self.source:
            raise ValueError("twist element must live in the source")

    def twist_element(self) -> MultisetElement:
        return self.twist if self.twist is not None else self.source.one()

    def apply(self, x: MultisetElement) -> MultisetElement:
        if x.data != self.source:
            raise ValueError("element is not in the source")
        out = [
            sum(row[s] * x.coeffs[s] for s in range(self.source.rank)) for row in self.matrix
        ]
        return MultisetElement(self.target, tuple(out))


def check_homomorphism(f: SemiringMorphism) -> ValidationReport:
    """Verify f(x) f(y) = f(x D y) on all basis pairs (bilinearity extends
    this to everything), plus the unit condition: f(1) = 1 untwisted, and
    f(1) >= 1 twisted."""
    violations: list[Violation] = []
    src, tgt = f.source, f.target
    d = f.twist_element()
    one_image = f.apply(src.one())
    if f.twist is None:
        if one_image.coeffs != tgt.one().coeffs:
            violations.append(
                Violation("unit_image", (), f"f(1) = {one_image}, expected the target unit")
            )
    else:
        if not all(a >= b for a, b in zip(one_image.coeffs, tgt.one().coeffs)):
            violations.append(
                Violation(
                    "unit_image", (), f"f(1) = {one_image} does not dominate the target unit"
                )
            )
    for x in range(src.rank):
        bx = src.basis(x)
        fx = f.apply(bx)
        xd = multiply(bx, d)
        for y in range(src.rank):
            by = src.basis(y)
            lhs = multiply(fx, f.apply(by))
            rhs = f.apply(multiply(xd, by))
            if lhs.coeffs != rhs.coeffs:
                violations.append(
                    Violation(
                        "twisted_homomorphism",
                        (x, y),
                        f"f({src.labels[x]}) f({src.labels[y]}) = {lhs} but "
                        f"f({src.labels[x]} D {src.labels[y]}) = {rhs}",
                    )
                )
    return ValidationReport.from_violations(violations)


def check_dominant(f: SemiringMorphism) -> bool:
    """True iff every target simple is dominated by the image of some source
    element; it suffices to inspect the image of the sum of all simples."""
    total = [sum(row) for row in f.matrix]
    return all(c >= 1 for c in total)


def verify_fpdim_transport(f: SemiringMorphism) -> ValidationReport:
    """Certify FPdim(f(x)) = FPdim(D) FPdim(x) for all source simples, and,
    when f is dominant, f(R_A) = FPdim(D) (FPdim(A)/FPdim(B)) R_B.

    Equalities are exact when every quantity involved is rational, otherwise
    certified at interval width 10^-12 with pass threshold 10^-9.
    """
    hom = check_homomorphism(f)
    if not hom.passed:
        return hom
    violations: list[Violation] = []
    src, tgt = f.source, f.target
    d = f.twist_element()
    fpdim_d = fpdim_element(d, width=CHECK_WIDTH)
    src_dims = [fpdim_element(src.basis(x), width=CHECK_WIDTH) for x in range(src.rank)]
    img_dims = [fpdim_element(f.apply(src.basis(x)), width=CHECK_WIDTH) for x in range(src.rank)]

    for x in range(src.rank):
        if fpdim_d.is_point and src_dims[x].is_point and img_dims[x].is_point:
            ok = img_dims[x].value == fpdim_d.value * src_dims[x].value
        else:
            lhs = as_interval(img_dims[x], CHECK_WIDTH)
            rhs = iv_mul(
                as_interval(fpdim_d, CHECK_WIDTH), as_interval(src_dims[x], CHECK_WIDTH)
            )
            ok = iv_separation(lhs, rhs) <= CHECK_TOLERANCE
        if not ok:
            violations.append(
                Violation(
                    "fpdim_transport",
                    (x,),
                    f"FPdim(f({src.labels[x]})) differs from FPdim(D) * "
                    f"FPdim({src.labels[x]})",
                )
            )

    if check_dominant(f):
        reg_src = regular_element(src, width=CHECK_WIDTH)
        reg_tgt = regular_element(tgt, width=CHECK_WIDTH)
        cat_src = fpdim_category(src, width=CHECK_WIDTH)
        cat_tgt = fpdim_category(tgt, width=CHECK_WIDTH)
        scalar_ivs = iv_mul(
            as_interval(fpdim_d, CHECK_WIDTH),
            iv_mul(
                as_interval(cat_src, CHECK_WIDTH),
                _inverse_interval(cat_tgt),
            ),
        )
        for t in range(tgt.rank):
            lhs = (Fraction(0), Fraction(0))
            for s in range(src.rank):
                if f.matrix[t][s]:
                    lhs = iv_add(
                        lhs, iv_scale(as_interval(reg_src.coeffs[s], CHECK_WIDTH), f.matrix[t][s])
                    )
            rhs = iv_mul(scalar_ivs, as_interval(reg_tgt.coeffs[t], CHECK_WIDTH))
            if iv_separation(lhs, rhs) > CHECK_TOLERANCE:
                violations.append(
                    Violation(
                        "regular_transport",
                        (t,),
                        f"f(R_A)[{tgt.labels[t]}] differs from "
                        f"FPdim(D) (FPdim(A)/FPdim(B)) R_B[{tgt.labels[t]}]",
                    )
                )
    return ValidationReport.from_violations(violations)


def _inverse_interval(v: AlgebraicNumber) -> tuple[Fraction, Fraction]:
    iv = as_interval(v, CHECK_WIDTH)
    if iv[0] <= 0:
        raise ValueError("interval inversion needs a certified positive value")
    return (1 / iv[1], 1 / iv[0])


def _require_positive(name: str, v: ValueLike) -> ExactValue:
    value = normalize_value(v)
    if exact_cmp(value, Fraction(0)) <= 0:
        raise ValueError(f"{name} must be positive")
    return value


def exact_div(a: ValueLike, b: ValueLike) -> ExactValue:
    """Exact quotient a / b for positive exact values."""
    a, b = normalize_value(a), normalize_value(b)
    if isinstance(b, Fraction):
        if b == 0:
            raise ZeroDivisionError("division by zero")
        return exact_mul(a, 1 / b)
    if isinstance(a, AlgebraicNumber) and algebraic_equal(a, b):
        return Fraction(1)
    return exact_mul(a, reciprocal(b))


def adjoint_fpdim(
    fpdim_d: ValueLike,
    d_a: int,
    d_b: int,
    fpdim_cat_a: ValueLike,
    fpdim_cat_b: ValueLike,
    fpdim_x: ValueLike,
) -> ExactValue:
    """FPdim carried through an adjoint of a twisted dominant functor:
    FPdim(D) * (d_B/d_A) * (FPdim(A)/FPdim(B)) * FPdim(X)."""
    if d_a < 1 or d_b < 1:
        raise ValueError("endomorphism degrees must be positive integers")
    fpdim_d = _require_positive("FPdim(D)", fpdim_d)
    cat_a = _require_positive("FPdim of the source category", fpdim_cat_a)
    cat_b = _require_positive("FPdim of the target category", fpdim_cat_b)
    fpdim_x = _require_positive("FPdim(X)", fpdim_x)
    ratio = exact_div(cat_a, cat_b)
    return exact_mul(exact_mul(exact_mul(fpdim_d, Fraction(d_b, d_a)), ratio), fpdim_x)


def relative_tensor_fpdim(m: ValueLike, n: ValueLike, d_d: ValueLike) -> ExactValue:
    """FPdim of a relative tensor product of modules: m * n / FPdim(D)."""
    d_val = normalize_value(d_d)
    if isinstance(d_val, Fraction) and d_val == 0:
        raise ZeroDivisionError("FPdim(D) must be nonzero")
    d_val = _require_positive("FPdim(D)", d_val)
    return exact_div(exact_mul(normalize_value(m), normalize_value(n)), d_val)


def check_adjoint_matrix(adjoint: SemiringMorphism, fpdim_d: ValueLike) -> ValidationReport:
    """Consistency check of the adjoint formula against a concrete matrix.

    `adjoint` is the adjoint functor's semiring matrix (source = the twisted
    functor's target, where the formula's FPdim(X) lives).  For every simple
    X the matrix-computed FPdim of the image must equal
    FPdim(D) (d_B/d_A) (FPdim(A)/FPdim(B)) FPdim(X), certified at interval
    width 10^-12 with pass threshold 10^-9 (exact when rational).
    """
    src, tgt = adjoint.source, adjoint.target
    cat_src = fpdim_category(src, width=CHECK_WIDTH)
    cat_tgt = fpdim_category(tgt, width=CHECK_WIDTH)
    scalar = iv_mul(
        as_interval(normalize_value(fpdim_d), CHECK_WIDTH),
        iv_mul(as_interval(cat_tgt, CHECK_WIDTH), _inverse_interval(cat_src)),
    )
    scalar = iv_scale(scalar, Fraction(src.endo_degree, tgt.endo_degree))
    violations: list[Violation] = []
    for x in range(src.rank):
        lhs = as_interval(
            fpdim_element(adjoint.apply(src.basis(x)), width=CHECK_WIDTH), CHECK_WIDTH
        )
        rhs = iv_mul(
            scalar, as_interval(fpdim_element(src.basis(x), width=CHECK_WIDTH), CHECK_WIDTH)
        )
        if iv_separation(lhs, rhs) > CHECK_TOLERANCE:
            violations.append(
                Violation(
                    "adjoint_fpdim",
                    (x,),
                    f"FPdim of the adjoint image of {src.labels[x]} disagrees "
                    f"with the transport formula",
                )
            )
    return ValidationReport.from_violations(violations)


class MoritaComparison(NamedTuple):
    ratio_a: ExactValue
    ratio_b: ExactValue
    equal: bool


def morita_ratio_equal(a: FusionData, b: FusionData) -> MoritaComparison:
    """Compare the Morita invariant FPdim(C)/d exactly for two fusion data."""
    ratio_a = exact_mul(Fraction(1, a.endo_degree), fpdim_category(a))
    ratio_b = exact_mul(Fraction(1, b.endo_degree), fpdim_category(b))
    return MoritaComparison(ratio_a, ratio_b, exact_cmp(ratio_a, ratio_b) == 0)
