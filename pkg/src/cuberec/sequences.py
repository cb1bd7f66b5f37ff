"""Gale-Robinson and Somos sequences with grove-count certificates.

A (p,q,r) specification defines the order-n recurrence, n = p+q+r:

    y[l+n] * y[l] = alpha * y[l+p] * y[l+n-p]
                  + beta  * y[l+q] * y[l+n-q]
                  + gamma * y[l+r] * y[l+n-r]

Somos-6 is (1,2,3) and Somos-7 is (4,1,2), both with unit coefficients.
Terms are computed by exact rational recursion; the certificate for a term
independently enumerates the groves of the matching initial conditions and
compares the count, and optionally compares the full Laurent expansion of the
term against the renamed cube-recurrence polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import groves, lattice, recurrence
from .laurent import (
    ALPHA,
    BETA,
    GAMMA,
    TAG_X,
    LaurentPoly,
    div_exact,
    rename_variables,
    yvar,
)


@dataclass(frozen=True)
class GaleRobinsonSpec:
    p: int
    q: int
    r: int
    l: int = 0
    alpha: Fraction = Fraction(1)
    beta: Fraction = Fraction(1)
    gamma: Fraction = Fraction(1)

    def __post_init__(self):
        if min(self.p, self.q, self.r) < 1:
            raise ValueError("p, q, r must be positive")
        if self.l < 0:
            raise ValueError("l must be >= 0")

    @property
    def n(self) -> int:
        return self.p + self.q + self.r


SOMOS6 = GaleRobinsonSpec(1, 2, 3)
SOMOS7 = GaleRobinsonSpec(4, 1, 2)


def gr_terms(
    spec: GaleRobinsonSpec, count: int, initial: list[Fraction] | None = None
) -> list[Fraction]:
    """First ``count`` terms by exact rational recursion (default all-ones start)."""
    n = spec.n
    terms = [Fraction(v) for v in (initial if initial is not None else [1] * n)]
    if len(terms) != n:
        raise ValueError(f"need exactly {n} initial terms")
    del terms[count:]
    while len(terms) < count:
        m = len(terms)
        l = m - n
        if terms[l] == 0:
            raise ZeroDivisionError(f"term y_{l} is zero")
        num = (
            spec.alpha * terms[l + spec.p] * terms[m - spec.p]
            + spec.beta * terms[l + spec.q] * terms[m - spec.q]
            + spec.gamma * terms[l + spec.r] * terms[m - spec.r]
        )
        terms.append(num / terms[l])
    return terms


def gr_symbolic(spec: GaleRobinsonSpec, l: int | None = None) -> LaurentPoly:
    """Term y_l as an exact Laurent polynomial in y_0..y_{n-1}, alpha, beta, gamma.

    Runs the one-dimensional recurrence directly with exact division; this is
    the independent oracle for the cube-recurrence reduction.
    """
    n = spec.n
    l = spec.l if l is None else l
    values = [LaurentPoly.variable(yvar(m)) for m in range(n)]
    al = LaurentPoly.variable(ALPHA)
    be = LaurentPoly.variable(BETA)
    ga = LaurentPoly.variable(GAMMA)
    for m in range(n, l + 1):
        base = m - n
        num = (
            al * values[base + spec.p] * values[m - spec.p]
            + be * values[base + spec.q] * values[m - spec.q]
            + ga * values[base + spec.r] * values[m - spec.r]
        )
        values.append(div_exact(num, values[base]))
    return values[l]


def gr_renamed_cube_poly(spec: GaleRobinsonSpec, l: int | None = None) -> LaurentPoly:
    """The cube-recurrence polynomial with lattice variables renamed to y-terms."""
    l = spec.l if l is None else l
    ic = lattice.gale_robinson(spec.p, spec.q, spec.r, l)
    poly = recurrence.f_symbolic(ic, recurrence.MODE_ABC)
    mapping = {}
    for v in poly.variables():
        if v[0] == TAG_X:
            _, i, j, k = v
            mapping[v] = yvar(spec.p * i + spec.q * j + spec.r * k + l)
    return rename_variables(poly, mapping)


@dataclass(frozen=True)
class GrCertificate:
    l: int
    recursion_value: Fraction
    grove_count: int
    count_match: bool
    symbolic_match: bool | None


def gr_certificate(
    spec: GaleRobinsonSpec,
    l: int | None = None,
    max_groves: int = 200_000,
    symbolic: bool = False,
) -> GrCertificate:
    """Certify term y_l: grove count equals the recursion value.

    The counting side always uses the all-ones specialization (unit
    coefficients and unit initial terms), which is where terms count groves;
    ``spec.alpha`` etc. only matter for the symbolic comparison.  The expected
    size is pre-computed numerically; enumeration beyond ``max_groves`` raises
    TooLarge.  With ``symbolic`` the full Laurent expansion is compared
    against the one-dimensional recursion as well.
    """
    l = spec.l if l is None else l
    value = gr_terms(GaleRobinsonSpec(spec.p, spec.q, spec.r), l + 1)[l]
    ic = lattice.gale_robinson(spec.p, spec.q, spec.r, l)
    expected = recurrence.f_numeric(ic)
    if expected > max_groves:
        raise groves.TooLarge(
            f"term y_{l} counts {expected} groves, above the {max_groves} bound"
        )
    count = len(groves.enumerate_local_moves(ic))
    sym = None
    if symbolic:
        sym = gr_renamed_cube_poly(spec, l) == gr_symbolic(spec, l)
    return GrCertificate(
        l=l,
        recursion_value=value,
        grove_count=count,
        count_match=(value == count),
        symbolic_match=sym,
    )


def is_integral(x: Fraction) -> bool:
    return x.denominator == 1
