"""Order-ideal initial conditions on the Z^3 lattice.

An initial-conditions object stores ``u_fin``, the finite part of the upper
set inside the lower cone of the origin (all coordinates <= 0).  Everything
else is derived from it:

    in_L(p)   p lies in the order ideal (in the cone, not in u_fin)
    in_U(p)   complement of the ideal
    in_I(p)   p is an initial point: in_L(p) and in_U(p + (1,1,1))

The two stored invariants are that u_fin sits inside the cone and that it is
upward closed within the cone.  A cutoff N bounds the region where the
initial points deviate from the coordinate-wall pattern; the minimal cutoff
is max(0, 1 - min coordinate sum over u_fin).

Rhombi come in three axes.  For a top vertex (i,j,k):

    axis a: {(i,j,k), (i,j-1,k), (i,j,k-1), (i,j-1,k-1)}   variable a(j,k)
    axis b: {(i,j,k), (i-1,j,k), (i,j,k-1), (i-1,j,k-1)}   variable b(i,k)
    axis c: {(i,j,k), (i-1,j,k), (i,j-1,k), (i-1,j-1,k)}   variable c(i,j)

The long edge joins the two middle vertices, the short edge joins top to
bottom.  Projection onto the plane orthogonal to (1,1,1) sends a unit step in
k to (0,1), in i to (-s,-1/2) and in j to (s,-1/2), where s stands for
sqrt(3)/2; plane points are stored exactly as integer pairs (m, n) meaning
(m*s, n/2).
"""

from __future__ import annotations

import itertools
from typing import Iterable, NamedTuple

from .laurent import VarKey, avar, bvar, cvar

Point3 = tuple


class NotInCone(ValueError):
    def __init__(self, point: Point3):
        self.point = point
        super().__init__(f"point {point} lies outside the lower cone of the origin")


class NotUpwardClosed(ValueError):
    def __init__(self, point: Point3, missing: Point3):
        self.point = point
        self.missing = missing
        super().__init__(f"{missing} is missing above {point}")


class NoSuchRhombus(LookupError):
    pass


class NotACutoff(ValueError):
    pass


class CutoffNotOdd(ValueError):
    pass


# Unit steps subtracted from the top vertex, per axis.
_AXIS_STEPS = {
    "a": ((0, 1, 0), (0, 0, 1)),
    "b": ((1, 0, 0), (0, 0, 1)),
    "c": ((1, 0, 0), (0, 1, 0)),
}

AXES = ("a", "b", "c")


def _sub(p: Point3, q: Point3) -> Point3:
    return (p[0] - q[0], p[1] - q[1], p[2] - q[2])


class PlanePoint(NamedTuple):
    """Exact plane coordinates: x = xs * sqrt(3)/2, y = y2 / 2."""

    xs: int
    y2: int


def project(p: Point3) -> PlanePoint:
    """Linear projection killing the (1,1,1) direction; injective on initial points."""
    i, j, k = p
    return PlanePoint(j - i, 2 * k - i - j)


class Rhombus(NamedTuple):
    axis: str
    top: Point3

    def vertices(self) -> tuple[Point3, Point3, Point3, Point3]:
        u, v = _AXIS_STEPS[self.axis]
        t = self.top
        return (t, _sub(t, u), _sub(t, v), _sub(_sub(t, u), v))

    def bottom(self) -> Point3:
        u, v = _AXIS_STEPS[self.axis]
        return _sub(_sub(self.top, u), v)

    def long_edge(self) -> tuple[Point3, Point3]:
        u, v = _AXIS_STEPS[self.axis]
        a, b = _sub(self.top, u), _sub(self.top, v)
        return (a, b) if a <= b else (b, a)

    def short_edge(self) -> tuple[Point3, Point3]:
        a, b = self.top, self.bottom()
        return (a, b) if a <= b else (b, a)

    def variable(self) -> VarKey:
        i, j, k = self.top
        if self.axis == "a":
            return avar(j, k)
        if self.axis == "b":
            return bvar(i, k)
        return cvar(i, j)

    def corners(self) -> tuple[PlanePoint, PlanePoint, PlanePoint, PlanePoint]:
        """Projected vertices in cyclic order around the quadrilateral."""
        u, v = _AXIS_STEPS[self.axis]
        t = self.top
        return (
            project(t),
            project(_sub(t, u)),
            project(self.bottom()),
            project(_sub(t, v)),
        )


def edge_variable(r: Rhombus) -> VarKey:
    return r.variable()


class InitialConditions:
    """Initial conditions induced by an order ideal inside the origin cone."""

    __slots__ = ("u_fin", "_min_cutoff", "_windows")

    def __init__(self, u_fin: Iterable[Point3] = (), validate: bool = True):
        self.u_fin = frozenset(tuple(p) for p in u_fin)
        self._min_cutoff = None
        self._windows = {}
        if validate:
            self.validate()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, InitialConditions):
            return NotImplemented
        return self.u_fin == other.u_fin

    def __hash__(self) -> int:
        return hash(self.u_fin)

    def __repr__(self) -> str:
        return f"InitialConditions({sorted(self.u_fin)})"

    @staticmethod
    def in_cone(p: Point3) -> bool:
        return p[0] <= 0 and p[1] <= 0 and p[2] <= 0

    def validate(self) -> None:
        """Check cone membership and upward closure; raise naming the witness."""
        for p in self.u_fin:
            if not self.in_cone(p):
                raise NotInCone(p)
        for p in sorted(self.u_fin):
            i, j, k = p
            for w in ((i + 1, j, k), (i, j + 1, k), (i, j, k + 1)):
                if self.in_cone(w) and w not in self.u_fin:
                    raise NotUpwardClosed(p, w)

    def in_L(self, p: Point3) -> bool:
        return self.in_cone(p) and p not in self.u_fin

    def in_U(self, p: Point3) -> bool:
        return not self.in_L(p)

    def in_I(self, p: Point3) -> bool:
        if not self.in_L(p):
            return False
        return self.in_U((p[0] + 1, p[1] + 1, p[2] + 1))

    def is_cutoff(self, N: int) -> bool:
        """Both cutoff properties, checked directly against u_fin."""
        if N < 0:
            return False
        for v in self.u_fin:
            if v[0] + v[1] + v[2] <= -N:
                # (i): a wall point this deep must be an initial point.
                if max(v) == 0:
                    return False
                # (ii): otherwise (v - (1,1,1)) would be a too-deep interior
                # initial point unless it is itself in u_fin.
                if (v[0] - 1, v[1] - 1, v[2] - 1) not in self.u_fin:
                    return False
        return True

    @property
    def min_cutoff(self) -> int:
        if self._min_cutoff is None:
            if not self.u_fin:
                n = 0
            else:
                n = max(0, 1 - min(p[0] + p[1] + p[2] for p in self.u_fin))
            if not self.is_cutoff(n):
                raise NotACutoff(f"computed cutoff {n} fails the direct check")
            self._min_cutoff = n
        return self._min_cutoff

    @property
    def min_odd_cutoff(self) -> int:
        n = self.min_cutoff
        return n if n % 2 == 1 else n + 1

    def points_in_J(self, N: int | None = None) -> tuple[Point3, ...]:
        """All initial points with coordinate sum >= -N-2, sorted."""
        N = self.min_cutoff if N is None else N
        cached = self._windows.get(("points", N))
        if cached is not None:
            return cached
        if not self.is_cutoff(N):
            raise NotACutoff(str(N))
        lo = -N - 2
        pts = []
        for p in itertools.product(range(lo, 1), repeat=3):
            if p[0] + p[1] + p[2] >= lo and self.in_I(p):
                pts.append(p)
        out = tuple(sorted(pts))
        self._windows[("points", N)] = out
        return out

    def contains_rhombus(self, r: Rhombus) -> bool:
        return all(self.in_I(p) for p in r.vertices())

    def rhombi_in_J(self, N: int | None = None) -> tuple[Rhombus, ...]:
        """All rhombi whose four vertices lie in the radius-N window."""
        N = self.min_cutoff if N is None else N
        return tuple(
            r for r in self.rhombi_touching_J(N) if sum(r.top) >= -N
        )

    def rhombi_touching_J(self, N: int | None = None) -> tuple[Rhombus, ...]:
        """All rhombi with top-vertex sum >= -N-2 (their edges can reach the window)."""
        N = self.min_cutoff if N is None else N
        cached = self._windows.get(("rhombi", N))
        if cached is not None:
            return cached
        out = []
        for p in self.points_in_J(N):
            for axis in AXES:
                r = Rhombus(axis, p)
                if self.contains_rhombus(r):
                    out.append(r)
        result = tuple(sorted(out))
        self._windows[("rhombi", N)] = result
        return result

    def variable_rhombus(self, v: VarKey) -> Rhombus:
        """The unique rhombus carrying edge variable v, if it exists.

        Only the free index is unknown.  If no vertex of the rhombus has its
        diagonal successor inside u_fin, the bottom vertex pins the free index
        to 0; otherwise the successor's level determines it.  That makes
        {0} union {u-1 levels over u_fin} a complete candidate set.
        """
        from .laurent import TAG_A, TAG_B, TAG_C

        tag = v[0]
        if tag == TAG_A:
            j, k = v[1], v[2]
            cands = {0} | {u[0] - 1 for u in self.u_fin}
            rhombi = [Rhombus("a", (i, j, k)) for i in sorted(cands)]
        elif tag == TAG_B:
            i, k = v[1], v[2]
            cands = {0} | {u[1] - 1 for u in self.u_fin}
            rhombi = [Rhombus("b", (i, j, k)) for j in sorted(cands)]
        elif tag == TAG_C:
            i, j = v[1], v[2]
            cands = {0} | {u[2] - 1 for u in self.u_fin}
            rhombi = [Rhombus("c", (i, j, k)) for k in sorted(cands)]
        else:
            raise NoSuchRhombus(f"{v} is not an edge variable")
        found = [r for r in rhombi if self.contains_rhombus(r)]
        if not found:
            raise NoSuchRhombus(f"no rhombus carries {v}")
        if len(found) > 1:  # impossible for valid initial conditions
            raise AssertionError(f"edge variable {v} is ambiguous: {found}")
        return found[0]

    def peel_sequence(self) -> list[Point3]:
        """u_fin ordered so each prefix-removal peels a local minimum.

        Sorted by coordinate sum ascending, ties lexicographic; any order that
        always removes a minimal point of the remaining upper set is valid.
        """
        return sorted(self.u_fin, key=lambda p: (p[0] + p[1] + p[2], p))

    def height(self, p: Point3) -> int:
        """The unique h with p + (h,h,h) an initial point."""
        h = -max(p)
        while (p[0] + h, p[1] + h, p[2] + h) in self.u_fin:
            h -= 1
        return h


def standard(n: int) -> InitialConditions:
    """Initial conditions whose groves are the standard groves of order n."""
    if n < 1:
        raise ValueError("order must be >= 1")
    lo = 2 - n
    pts = [
        p
        for p in itertools.product(range(lo, 1), repeat=3)
        if p[0] + p[1] + p[2] >= lo
    ]
    return InitialConditions(pts)


def kleber(i: int, j: int, k: int) -> InitialConditions:
    """The box complement: u_fin is the i*j*k box of points nearest the origin."""
    if min(i, j, k) < 1:
        raise ValueError("box sides must be >= 1")
    pts = itertools.product(range(1 - i, 1), range(1 - j, 1), range(1 - k, 1))
    return InitialConditions(pts)


def gale_robinson(p: int, q: int, r: int, l: int) -> InitialConditions:
    """Initial conditions for term y_l of the (p,q,r) Gale-Robinson recurrence."""
    if min(p, q, r) < 1 or l < 0:
        raise ValueError("need p,q,r >= 1 and l >= 0")
    n = p + q + r
    if n - l > 0:
        return InitialConditions(())
    lo_i = -((l - n) // p)
    lo_j = -((l - n) // q)
    lo_k = -((l - n) // r)
    pts = [
        v
        for v in itertools.product(range(lo_i, 1), range(lo_j, 1), range(lo_k, 1))
        if p * v[0] + q * v[1] + r * v[2] >= n - l
    ]
    return InitialConditions(pts)


def explicit(u_fin: Iterable[Point3]) -> InitialConditions:
    return InitialConditions(u_fin)


def from_json(obj: dict) -> InitialConditions:
    """Parse the initial-conditions JSON forms."""
    if "explicit" in obj:
        return explicit(tuple(p) for p in obj["explicit"]["u_fin"])
    kind = obj.get("preset")
    if kind == "standard":
        return standard(int(obj["n"]))
    if kind == "kleber":
        return kleber(int(obj["i"]), int(obj["j"]), int(obj["k"]))
    if kind in ("gale_robinson", "gale-robinson"):
        return gale_robinson(int(obj["p"]), int(obj["q"]), int(obj["r"]), int(obj["l"]))
    raise ValueError(f"unrecognized initial-conditions object: {obj!r}")


def to_json(ic: InitialConditions) -> dict:
    return {"explicit": {"u_fin": [list(p) for p in sorted(ic.u_fin)]}}
