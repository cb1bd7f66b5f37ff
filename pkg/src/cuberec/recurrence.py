"""Cube-recurrence evaluation over order-ideal initial conditions.

The value at an initial point is its lattice variable; at any other point of
the cone it is the three-term bilinear combination of the values one step
down, divided exactly by the value at the diagonal predecessor:

    f[i,j,k] * f[i-1,j-1,k-1] =
          B*C * f[i-1,j,k]   * f[i,j-1,k-1]
        + C*A * f[i,j-1,k]   * f[i-1,j,k-1]
        + A*B * f[i,j,k-1]   * f[i-1,j-1,k]

where the coefficient system depends on the mode:

    edge-vars   A,B,C are the edge variables a(j,k), b(i,k), c(i,j)
    abc         coefficients alpha, beta, gamma; realised by transforming the
                edge-vars result (each edge variable maps to a square root of
                a coefficient ratio, tracked as doubled integer exponents)
    shift-octa  the third term is dropped (the degenerate two-term recurrence)
    all-ones    every variable is 1; numeric evaluation only
    custom      A,B,C are fixed monomials in the indeterminate t

Three evaluators are provided: a memoized symbolic recursion (f_symbolic), an
independent builder that starts from the trivial ideal and applies the
point-replacement substitution along the reversed peel sequence
(f_via_substitution), and an exact rational recursion that never expands
polynomials (f_numeric).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from . import laurent
from .laurent import (
    ALPHA,
    BETA,
    GAMMA,
    T,
    TAG_A,
    TAG_B,
    TAG_C,
    LaurentPoly,
    VarKey,
    avar,
    bvar,
    cvar,
    div_exact,
    xvar,
)
from .lattice import InitialConditions, Point3

MODE_EDGE_VARS = "edge-vars"
MODE_ABC = "abc"
MODE_ALL_ONES = "all-ones"
MODE_SHIFT_OCTA = "shift-octa"

SYMBOLIC_MODES = (MODE_EDGE_VARS, MODE_ABC, MODE_SHIFT_OCTA)


@dataclass(frozen=True)
class CustomMode:
    """Per-axis edge-variable specialization to monomials coeff * t**exp."""

    a: tuple[int, int] = (1, 0)
    b: tuple[int, int] = (1, 0)
    c: tuple[int, int] = (1, 0)


class HalfIntegerExponent(ArithmeticError):
    """A coefficient exponent came out odd before halving; must never happen."""


class DivisionByZeroDuringRecursion(ZeroDivisionError):
    def __init__(self, point: Point3):
        self.point = point
        super().__init__(f"recurrence value vanished at {point}")


def _neighbor_scheme(w: Point3):
    i, j, k = w
    pairs = (
        ((i - 1, j, k), (i, j - 1, k - 1)),
        ((i, j - 1, k), (i - 1, j, k - 1)),
        ((i, j, k - 1), (i - 1, j - 1, k)),
    )
    return pairs, (i - 1, j - 1, k - 1)


def _t_monomial(spec: tuple[int, int]) -> LaurentPoly:
    coeff, exp = spec
    return LaurentPoly.monomial(coeff, [(T, exp)] if exp else [])


def _symbolic_coeffs(w: Point3, mode) -> tuple[LaurentPoly, LaurentPoly, LaurentPoly]:
    i, j, k = w
    if mode == MODE_EDGE_VARS:
        a = LaurentPoly.variable(avar(j, k))
        b = LaurentPoly.variable(bvar(i, k))
        c = LaurentPoly.variable(cvar(i, j))
        return (b * c, c * a, a * b)
    if mode == MODE_SHIFT_OCTA:
        one = LaurentPoly.one()
        return (one, one, LaurentPoly.zero())
    if isinstance(mode, CustomMode):
        ma, mb, mc = _t_monomial(mode.a), _t_monomial(mode.b), _t_monomial(mode.c)
        return (mb * mc, mc * ma, ma * mb)
    raise ValueError(f"unsupported symbolic mode {mode!r}")


def f_symbolic(ic: InitialConditions, mode=MODE_EDGE_VARS) -> LaurentPoly:
    """The exact Laurent polynomial at the origin for the given mode."""
    if mode == MODE_ABC:
        return abc_from_edge_vars(f_symbolic(ic, MODE_EDGE_VARS))
    memo: dict[Point3, LaurentPoly] = {}

    def value(p: Point3) -> LaurentPoly:
        got = memo.get(p)
        if got is not None:
            return got
        assert ic.in_I(p), f"recursion escaped the initial conditions at {p}"
        return LaurentPoly.variable(xvar(*p))

    # Ascending coordinate sum guarantees all eight lower values exist.
    for w in sorted(ic.u_fin, key=lambda p: (p[0] + p[1] + p[2], p)):
        pairs, d = _neighbor_scheme(w)
        coeffs = _symbolic_coeffs(w, mode)
        num = LaurentPoly.zero()
        for coeff, (p1, p2) in zip(coeffs, pairs):
            if coeff.is_zero():
                continue
            num = num + coeff * value(p1) * value(p2)
        memo[w] = div_exact(num, value(d))

    return value((0, 0, 0))


def f_via_substitution(ic: InitialConditions, mode=MODE_EDGE_VARS) -> LaurentPoly:
    """Second evaluator: substitution along the reversed peel sequence.

    Starts from the single variable at the origin (the fully peeled ideal) and,
    for each restored point, replaces that point's variable by the recurrence
    step; negative exponents are cleared by assembling a numerator and calling
    div_exact.
    """
    if mode == MODE_ABC:
        return abc_from_edge_vars(f_via_substitution(ic, MODE_EDGE_VARS))
    poly = LaurentPoly.variable(xvar(0, 0, 0))
    for w in reversed(ic.peel_sequence()):
        pairs, d = _neighbor_scheme(w)
        coeffs = _symbolic_coeffs(w, mode)
        numerator = LaurentPoly.zero()
        for coeff, (p1, p2) in zip(coeffs, pairs):
            if coeff.is_zero():
                continue
            numerator = numerator + coeff * LaurentPoly.monomial(
                1, [(xvar(*p1), 1), (xvar(*p2), 1)]
            )
        poly = _substitute_ratio(poly, xvar(*w), numerator, xvar(*d))
    return poly


def _substitute_ratio(
    poly: LaurentPoly, v: VarKey, numerator: LaurentPoly, denom_var: VarKey
) -> LaurentPoly:
    # Replace v by numerator / denom_var, grouping terms by the exponent of v.
    groups: dict[int, LaurentPoly] = {}
    for m in poly.terms():
        exp = 0
        rest = []
        for var, x in m.exps:
            if var == v:
                exp = x
            else:
                rest.append((var, x))
        part = groups.get(exp, LaurentPoly.zero())
        groups[exp] = part + LaurentPoly.monomial(m.coeff, rest)

    min_exp = min(groups) if groups else 0
    if min_exp >= 0:
        out = LaurentPoly.zero()
        for e, part in groups.items():
            out = out + part * numerator**e * LaurentPoly.variable(denom_var, -e)
        return out
    # Clear the negative powers of the substituted value, divide once at the end.
    shift = -min_exp
    assembled = LaurentPoly.zero()
    for e, part in groups.items():
        assembled = assembled + (
            part * numerator ** (e + shift) * LaurentPoly.variable(denom_var, -e)
        )
    return div_exact(assembled, numerator**shift)


def abc_from_edge_vars(p: LaurentPoly) -> LaurentPoly:
    """Map each edge variable to the square-root coefficient ratio of its axis.

    Every a maps to sqrt(beta*gamma/alpha), b to sqrt(gamma*alpha/beta) and c
    to sqrt(alpha*beta/gamma).  Doubled exponents are tracked as integers and
    halved at the end; odd parity raises HalfIntegerExponent.
    """
    out = LaurentPoly.zero()
    for m in p.terms():
        na = nb = nc = 0
        rest = []
        for v, x in m.exps:
            tag = v[0]
            if tag == TAG_A:
                na += x
            elif tag == TAG_B:
                nb += x
            elif tag == TAG_C:
                nc += x
            else:
                rest.append((v, x))
        doubled = (nb + nc - na, nc + na - nb, na + nb - nc)
        for d in doubled:
            if d % 2 != 0:
                raise HalfIntegerExponent(f"odd doubled exponent {doubled} in {m}")
        for var, d in zip((ALPHA, BETA, GAMMA), doubled):
            if d:
                rest.append((var, d // 2))
        out = out + LaurentPoly.monomial(m.coeff, rest)
    return out


def _numeric_coeffs(w: Point3, mode, lookup) -> tuple[Fraction, Fraction, Fraction]:
    i, j, k = w
    if mode == MODE_EDGE_VARS or mode == MODE_ALL_ONES:
        a, b, c = lookup(avar(j, k)), lookup(bvar(i, k)), lookup(cvar(i, j))
        return (b * c, c * a, a * b)
    if mode == MODE_ABC:
        return (lookup(ALPHA), lookup(BETA), lookup(GAMMA))
    if mode == MODE_SHIFT_OCTA:
        return (Fraction(1), Fraction(1), Fraction(0))
    if isinstance(mode, CustomMode):
        t = lookup(T)
        ma, mb, mc = (Fraction(co) * t**e for co, e in (mode.a, mode.b, mode.c))
        return (mb * mc, mc * ma, ma * mb)
    raise ValueError(f"unsupported numeric mode {mode!r}")


def f_numeric(
    ic: InitialConditions,
    assign: Mapping[VarKey, Fraction | int] | None = None,
    mode=MODE_EDGE_VARS,
    default: Fraction | int | None = None,
) -> Fraction:
    """Exact rational value at the origin, without symbolic expansion.

    With no assignment every variable is 1 (the grove count in edge-vars
    mode).  A partial assignment may supply ``default`` for missing keys.
    """
    if assign is None and default is None:
        default = 1
    assign = assign or {}

    def lookup(v: VarKey) -> Fraction:
        if v in assign:
            return Fraction(assign[v])
        if default is not None:
            return Fraction(default)
        raise laurent.UnassignedVariable(laurent.var_name(v))

    memo: dict[Point3, Fraction] = {}

    def value(p: Point3) -> Fraction:
        got = memo.get(p)
        if got is not None:
            return got
        assert ic.in_I(p), f"recursion escaped the initial conditions at {p}"
        return lookup(xvar(*p))

    for w in sorted(ic.u_fin, key=lambda p: (p[0] + p[1] + p[2], p)):
        pairs, d = _neighbor_scheme(w)
        coeffs = _numeric_coeffs(w, mode, lookup)
        num = Fraction(0)
        for coeff, (p1, p2) in zip(coeffs, pairs):
            if coeff:
                num += coeff * value(p1) * value(p2)
        denom = value(d)
        if denom == 0:
            raise DivisionByZeroDuringRecursion(d)
        memo[w] = num / denom

    return value((0, 0, 0))


@dataclass(frozen=True)
class OctahedronReport:
    direct: LaurentPoly
    transformed: LaurentPoly

    @property
    def equal(self) -> bool:
        return self.direct == self.transformed


def octahedron_check(ic: InitialConditions) -> OctahedronReport:
    """Compute the two-term specialization two ways and compare.

    The direct route runs the degenerate recurrence on lattice points; the
    second runs the index-transformed recurrence g[x,y,z] with
    (x,y,z) = (i+j, i-k, j-k) and compares at the origin.
    """
    direct = f_symbolic(ic, MODE_SHIFT_OCTA)
    transformed = _g_transform_poly(ic)
    return OctahedronReport(direct=direct, transformed=transformed)


def _g_transform_poly(ic: InitialConditions) -> LaurentPoly:
    memo: dict[Point3, LaurentPoly] = {}

    def to_lattice(g: Point3) -> Point3:
        x, y, z = g
        assert (x + y + z) % 2 == 0
        return ((x + y - z) // 2, (x - y + z) // 2, (x - y - z) // 2)

    def children(g: Point3):
        x, y, z = g
        return (
            ((x - 1, y - 1, z), (x - 1, y + 1, z)),
            ((x - 1, y, z - 1), (x - 1, y, z + 1)),
            (x - 2, y, z),
        )

    stack = [(0, 0, 0)]
    while stack:
        g = stack[-1]
        if g in memo:
            stack.pop()
            continue
        p = to_lattice(g)
        if ic.in_I(p):
            memo[g] = LaurentPoly.variable(xvar(*p))
            stack.pop()
            continue
        assert ic.in_cone(p) and ic.in_U(p), f"transform escaped the cone at {p}"
        (pair1, pair2, below) = children(g)
        pending = [c for c in (*pair1, *pair2, below) if c not in memo]
        if pending:
            stack.extend(pending)
            continue
        num = memo[pair1[0]] * memo[pair1[1]] + memo[pair2[0]] * memo[pair2[1]]
        memo[g] = div_exact(num, memo[below])
        stack.pop()
    return memo[(0, 0, 0)]
