from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from flagcalc import roots

CLASSICAL_COUNTS = {
    ("A", 2): 3, ("A", 3): 6, ("A", 6): 21,
    ("B", 2): 4, ("B", 3): 9, ("C", 3): 9, ("C", 5): 25,
    ("D", 4): 12, ("D", 5): 20, ("G", 2): 6,
}


@pytest.mark.parametrize("letter,rank", sorted(CLASSICAL_COUNTS))
def test_positive_root_counts(letter, rank):
    R = roots.build(letter, rank)
    assert len(R.positive_roots) == CLASSICAL_COUNTS[(letter, rank)]


@pytest.mark.parametrize("letter,rank", sorted(CLASSICAL_COUNTS))
def test_cartan_shape_and_sum_rule(letter, rank):
    R = roots.build(letter, rank)
    for i in range(R.rank):
        assert R.cartan[i][i] == 2
        assert all(R.cartan[i][j] <= 0 for j in range(R.rank) if j != i)
    # sum of positive roots = 2 rho, coordinate-wise in the simple-root basis
    total = [0] * R.rank
    for b in R.positive_roots:
        for j in range(R.rank):
            total[j] += b[j]
    two_rho = R.root_of_fund(tuple(2 for _ in range(R.rank)))
    assert tuple(total) == tuple(int(x) for x in two_rho)


@pytest.mark.parametrize("letter,rank", sorted(CLASSICAL_COUNTS))
def test_highest_root_is_maximal(letter, rank):
    R = roots.build(letter, rank)
    theta = R.theta
    assert theta is not None
    for i in range(R.rank):
        up = list(theta)
        up[i] += 1
        assert not R.is_root(tuple(up))
    # rho pairs to 1 with every simple coroot by construction
    assert R.rho == (1,) * R.rank


def test_build_examples():
    A2 = roots.build("A", 2)
    assert len(A2.positive_roots) == 3 and A2.theta == (1, 1)
    G2 = roots.build("G", 2)
    assert len(G2.positive_roots) == 6 and G2.theta == (3, 2)
    C3 = roots.build("C", 3)
    assert len(C3.positive_roots) == 9 and C3.theta == (2, 2, 1)


@pytest.mark.parametrize("letter,rank", [("A", 0), ("A", 8), ("B", 1), ("B", 6),
                                         ("C", 1), ("D", 3), ("D", 6), ("G", 3),
                                         ("E", 6), ("F", 4)])
def test_build_rejects_unsupported(letter, rank):
    with pytest.raises(ValueError):
        roots.build(letter, rank)


def test_eval_at_x_basics():
    A2 = roots.build("A", 2)
    for i in range(1, 3):
        for j in range(1, 3):
            alpha = A2.fund_of_root(tuple(int(k == i - 1) for k in range(2)))
            assert A2.eval_at_x(alpha, j) == (1 if i == j else 0)
    assert A2.eval_at_x(A2.rho, 1) == 1  # rho = alpha1 + alpha2 in A2

    G2 = roots.build("G", 2)
    P = roots.parabolic(G2, crossed=[1])
    assert P.eval_at_xp(G2.fund_of_root(G2.theta)) == 3

    C3 = roots.build("C", 3)
    P2 = roots.parabolic(C3, crossed=[2])
    assert P2.eval_at_xp(C3.fund_of_root(C3.theta)) == 2


@settings(max_examples=40, deadline=None)
@given(st.integers(-9, 9), st.integers(-9, 9),
       st.integers(1, 4), st.integers(-5, 5), st.integers(-5, 5))
def test_eval_at_x_linear(a, b, den, l1, l2):
    R = roots.build("B", 2)
    ar, br = Fraction(a, den), Fraction(b, den)
    lam = (Fraction(l1), Fraction(l2))
    mu = (Fraction(l2, den), Fraction(l1))
    for j in (1, 2):
        combo = tuple(ar * x + br * y for x, y in zip(lam, mu))
        assert R.eval_at_x(combo, j) == ar * R.eval_at_x(lam, j) + br * R.eval_at_x(mu, j)


def test_rho_levi():
    C3 = roots.build("C", 3)
    assert roots.rho_levi(C3, ()) == (0, 0, 0)
    assert roots.rho_levi(C3, (1, 2, 3)) == C3.rho
    half = roots.rho_levi(C3, (1, 3))
    assert tuple(C3.root_of_fund(half)) == (Fraction(1, 2), 0, Fraction(1, 2))
    # pairing 1 on the Levi nodes, supported on Delta(P) in the root basis
    for i in (1, 3):
        assert half[i - 1] == 1


@pytest.mark.parametrize("letter,rank", sorted(CLASSICAL_COUNTS))
def test_parabolic_dimensions(letter, rank):
    R = roots.build(letter, rank)
    full = roots.parabolic(R, levi_simple=range(1, rank + 1))
    assert full.dim_gp == 0
    borel = roots.parabolic(R, levi_simple=())
    assert borel.dim_gp == len(R.positive_roots)


@pytest.mark.parametrize("letter,rank", [("A", 3), ("A", 6), ("B", 3), ("B", 5),
                                         ("C", 3), ("C", 5), ("D", 4), ("D", 5)])
def test_mo_bounds_classical_maximal(letter, rank):
    R = roots.build(letter, rank)
    for cross in range(1, rank + 1):
        P = roots.parabolic(R, crossed=[cross])
        assert 1 <= P.m_o <= 2


def test_basis_roundtrip():
    for (letter, rank) in [("A", 3), ("C", 3), ("G", 2), ("D", 4)]:
        R = roots.build(letter, rank)
        w = tuple(Fraction(k + 1, 3) for k in range(rank))
        back = R.fund_of_root(R.root_of_fund(w))
        assert tuple(Fraction(x) for x in back) == w


def test_eval_at_xp_on_simple_roots():
    C3 = roots.build("C", 3)
    P = roots.parabolic(C3, crossed=[2])
    for i in range(1, 4):
        alpha = C3.fund_of_root(tuple(int(k == i - 1) for k in range(3)))
        assert P.eval_at_xp(alpha) == (0 if i in P.levi_simple else 1)
    assert P.m_o >= 1
    for (letter, rank) in [("A", 3), ("B", 3), ("G", 2)]:
        R = roots.build(letter, rank)
        for cross in range(1, rank + 1):
            assert roots.parabolic(R, crossed=[cross]).m_o >= 1
