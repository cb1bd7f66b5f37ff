"""Grove axioms, monomials, enumeration, simplified groves, sign triangles."""

import random

import pytest

from conftest import grove_key, random_ic
from cuberec import groves, lattice, recurrence
from cuberec.groves import (
    Grove,
    RoundTripMismatch,
    TooLarge,
    asm_triangle,
    base_grove,
    boundary_classes,
    check_grove,
    coeffone_sums,
    enumerate_bruteforce,
    enumerate_local_moves,
    from_simplified,
    grove_from_monomial,
    grove_sum,
    is_acyclic,
    monomial_of,
    simplified_components,
    stats,
    to_simplified,
)
from cuberec.laurent import Monomial, avar, cvar, exps_from_items, xvar
from cuberec.lattice import CutoffNotOdd, InitialConditions, NotACutoff, Rhombus

EMPTY = InitialConditions(())
ONE_STEP = InitialConditions([(0, 0, 0)])
ONE_STEP_GROVE = Grove(
    ONE_STEP, frozenset({Rhombus("a", (-1, 0, 0)), Rhombus("c", (0, 0, -1))})
)


def test_monomial_of_base_grove():
    assert monomial_of(base_grove(EMPTY)) == Monomial(1, ((xvar(0, 0, 0), 1),))


def test_monomial_of_one_step_grove():
    expected = Monomial(1, exps_from_items([
        (avar(0, 0), 1), (cvar(0, 0), 1),
        (xvar(0, -1, 0), 1), (xvar(-1, 0, -1), 1), (xvar(-1, -1, -1), -1),
    ]))
    assert monomial_of(ONE_STEP_GROVE) == expected


def test_monomial_coefficient_is_one():
    for g in enumerate_local_moves(lattice.standard(3)):
        assert monomial_of(g).coeff == 1


def test_grove_from_monomial_roundtrip():
    for ic in (ONE_STEP, lattice.standard(3)):
        for g in enumerate_local_moves(ic):
            m = monomial_of(g)
            assert grove_from_monomial(ic, m) == g
    assert grove_from_monomial(EMPTY, Monomial(1, ((xvar(0, 0, 0), 1),))) == base_grove(EMPTY)


def test_grove_from_monomial_rejects_non_grove():
    with pytest.raises(RoundTripMismatch):
        grove_from_monomial(ONE_STEP, Monomial(1, ((avar(0, 0), 1),)))
    with pytest.raises(RoundTripMismatch):
        grove_from_monomial(ONE_STEP, Monomial(2, ((xvar(0, 0, 0), 1),)))
    with pytest.raises(RoundTripMismatch):
        # no rhombus carries this edge variable here
        grove_from_monomial(EMPTY, Monomial(1, ((avar(1, 1), 1),)))


def test_check_grove():
    assert check_grove(base_grove(EMPTY), 0) is None
    assert check_grove(ONE_STEP_GROVE, 1) is None
    bad = Grove(ONE_STEP, frozenset({Rhombus("a", (-1, 0, 0))}))
    violation = check_grove(bad, 1)
    assert violation is not None
    assert violation.kind in ("class-split", "class-shared", "component-count")


def test_check_grove_compactness():
    deep = Grove(EMPTY, frozenset({Rhombus("a", (0, -2, -2))}))
    violation = check_grove(deep, 3)
    assert violation is not None and violation.kind == "compactness"


def test_boundary_class_counts():
    for N in range(0, 7):
        assert len(boundary_classes(N)) == 3 * N + 7


def test_grove_rejects_rhombus_outside():
    # (0,0,0) is not an initial point once it joins the upper set
    with pytest.raises(ValueError):
        Grove(ONE_STEP, frozenset({Rhombus("a", (0, 0, 0))}))


# Six long edges forming a closed hexagon inside the bulk of standard(4).
HEXAGON = frozenset({
    Rhombus("a", (-1, -1, -1)),
    Rhombus("c", (-1, 0, -2)),
    Rhombus("b", (-2, 0, -1)),
    Rhombus("a", (-3, 0, 0)),
    Rhombus("c", (-2, -1, 0)),
    Rhombus("b", (-1, -2, 0)),
})


def test_is_acyclic():
    assert is_acyclic(base_grove(EMPTY))
    assert is_acyclic(ONE_STEP_GROVE)
    hexagon = Grove(lattice.standard(4), HEXAGON)
    assert not is_acyclic(hexagon)
    assert check_grove(hexagon) is not None


def test_enumeration_counts():
    assert len(enumerate_local_moves(EMPTY)) == 1
    assert len(enumerate_local_moves(ONE_STEP)) == 3
    assert len(enumerate_local_moves(lattice.standard(4))) == 81


def test_all_enumerated_groves_pass_checks():
    for ic in (ONE_STEP, lattice.standard(3), lattice.kleber(2, 2, 2)):
        for g in enumerate_local_moves(ic):
            assert check_grove(g) is None
            assert is_acyclic(g)


def test_stepwise_monomial_sums_match_polynomial():
    # every prefix of the reversed peel sequence is itself a valid upper set,
    # and the running grove family must track the polynomial exactly
    ic = lattice.standard(3)
    order = list(reversed(ic.peel_sequence()))
    for t in range(len(order) + 1):
        prefix = InitialConditions(order[:t])
        total = grove_sum(enumerate_local_moves(prefix))
        assert total == recurrence.f_symbolic(prefix), f"prefix {t}"


def test_bruteforce_oracle():
    assert len(enumerate_bruteforce(EMPTY, N=1)) == 1
    assert len(enumerate_bruteforce(ONE_STEP, N=1)) == 3
    brute = enumerate_bruteforce(lattice.standard(3), N=2)
    local = enumerate_local_moves(lattice.standard(3))
    assert {g.long_edges for g in brute} == {g.long_edges for g in local}
    assert len(brute) == 9
    with pytest.raises(TooLarge):
        enumerate_bruteforce(lattice.standard(4))


def test_bruteforce_oracle_random_ics():
    rng = random.Random(47)
    for _ in range(6):
        ic = random_ic(rng, depth=1)
        brute = enumerate_bruteforce(ic, cap=80)
        local = enumerate_local_moves(ic)
        assert {g.long_edges for g in brute} == {g.long_edges for g in local}


def test_cutoff_independence():
    # the same long-edge sets arise at different valid odd cutoffs
    for ic in (ONE_STEP, lattice.standard(3)):
        base_sets = {g.long_edges for g in enumerate_local_moves(ic)}
        for N in (ic.min_odd_cutoff, ic.min_odd_cutoff + 2):
            brute = enumerate_bruteforce(ic, N=N, cap=64)
            assert {g.long_edges for g in brute} == base_sets, f"N={N}"


def test_check_grove_at_larger_cutoffs():
    for N in (1, 2, 3, 5):
        assert check_grove(ONE_STEP_GROVE, N) is None, N
    for g in enumerate_local_moves(lattice.standard(3)):
        assert check_grove(g, 4) is None


def test_stats():
    st = stats(base_grove(EMPTY))
    assert (st.n_a, st.n_b, st.n_c) == (0, 0, 0)
    st = stats(ONE_STEP_GROVE)
    assert (st.n_a, st.n_b, st.n_c) == (1, 0, 1)
    assert st.n_a + st.n_b - st.n_c == 0
    assert st.degree == {(0, -1, 0): 3, (-1, 0, -1): 3, (-1, -1, -1): 1}


def test_degree_bounds_standard5():
    for g in enumerate_local_moves(lattice.standard(5)):
        st = stats(g)
        for v in (st.n_a + st.n_b - st.n_c, st.n_b + st.n_c - st.n_a,
                  st.n_c + st.n_a - st.n_b):
            assert v >= 0 and v % 2 == 0


def test_coeffone_sums():
    for r in EMPTY.rhombi_in_J(1):
        assert coeffone_sums(base_grove(EMPTY), r) == 0
    assert coeffone_sums(ONE_STEP_GROVE, Rhombus("a", (-1, 0, 0))) == -1
    for g in enumerate_local_moves(lattice.standard(4)):
        for r in lattice.standard(4).rhombi_in_J():
            expected = -1 if r in g.long_edges else 0
            assert coeffone_sums(g, r) == expected


def test_coeffone_sums_beyond_window():
    # rhombi too deep to carry a long edge still satisfy the quadrant law
    deep = [r for r in ONE_STEP.rhombi_touching_J(3) if sum(r.top) < -1]
    assert deep
    for g in enumerate_local_moves(ONE_STEP):
        for r in deep:
            assert coeffone_sums(g, r) == 0


def test_simplified_roundtrip_and_components():
    g = base_grove(EMPTY)
    s = to_simplified(g, 1)
    assert from_simplified(s) == g
    ic = lattice.standard(4)
    for g in enumerate_local_moves(ic):
        s = to_simplified(g, 3)
        assert from_simplified(s) == g
        assert simplified_components(s) == 7


def test_simplified_cutoff_validation():
    g = base_grove(lattice.standard(4))
    with pytest.raises(CutoffNotOdd):
        to_simplified(g, 4)
    with pytest.raises(NotACutoff):
        to_simplified(g, 1)


def test_simplified_edges_are_even_and_within_radius():
    ic = lattice.standard(4)
    for g in list(enumerate_local_moves(ic))[:10]:
        s = to_simplified(g, 3)
        for u, v in s.edges:
            assert sum(u) % 2 == 0 and sum(v) % 2 == 0
            assert sum(u) >= -4 and sum(v) >= -4


def test_asm_triangle():
    groves2 = sorted(enumerate_local_moves(lattice.standard(2)), key=grove_key)
    triangles = [asm_triangle(g) for g in groves2]
    for tri in triangles:
        assert [len(row) for row in tri] == [2, 1]
        assert all(e in (-1, 0, 1) for row in tri for e in row)
    key = grove_key(ONE_STEP_GROVE)
    match = [t for g, t in zip(groves2, triangles) if grove_key(g) == key]
    assert match == [[[0, 1], [0]]]
    # order 1: the single base grove has the one-entry triangle [[1]]
    assert asm_triangle(base_grove(lattice.standard(1))) == [[1]]
    for g in enumerate_local_moves(lattice.standard(4)):
        tri = asm_triangle(g)
        assert [len(row) for row in tri] == [4, 3, 2, 1]
        assert all(e in (-1, 0, 1) for row in tri for e in row)


def test_asm_requires_standard_ic():
    with pytest.raises(ValueError):
        asm_triangle(base_grove(lattice.kleber(2, 2, 2)))


def test_degree_table_injective():
    for ic in (lattice.standard(4), lattice.kleber(2, 2, 2)):
        tables = set()
        gs = enumerate_local_moves(ic)
        for g in gs:
            tables.add(tuple(sorted(stats(g).degree.items())))
        assert len(tables) == len(gs)


def test_grove_json():
    obj = groves.grove_to_json(ONE_STEP_GROVE)
    assert obj["long_edges"] == [["a", -1, 0, 0], ["c", 0, 0, -1]]
    assert obj["n"] == [1, 0, 1]
    assert obj["degrees"] == {"(-1,-1,-1)": 1, "(-1,0,-1)": 3, "(0,-1,0)": 3}
    assert groves.grove_from_json(ONE_STEP, obj) == ONE_STEP_GROVE


def test_shift_octa_grove_filter():
    gs = enumerate_local_moves(ONE_STEP)
    kept = [g for g in gs if (lambda s: s.n_a + s.n_b == s.n_c)(stats(g))]
    assert len(kept) == 2
