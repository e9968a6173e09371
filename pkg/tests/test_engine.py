import itertools

import pytest
import sympy as sp

from conftest import P, mono
from jmhomology import engine
from jmhomology.symbolic import FactoredRat, LaurentMonomial, LaurentPoly, frat_sum
from jmhomology.tableaux import Tableau, all_tableaux, box_weights
from sympy_oracle import iterated_integral, to_sympy


def grid(n):
    return [(0,) + r for r in itertools.product(range(4), repeat=n - 1)]


def test_integrand_examples(aQT):
    a, Q, T = aQT
    f = engine.integrand((0,))
    want = FactoredRat(1 + a * P(z1=-1), [], [mono(z1=-1)])
    assert f == want
    assert engine.integrand((2,)) == want * P(z1=2)
    g = engine.integrand((0, 0))
    dens = {str(b) for b in g.den_factors}
    assert {"(1-Q*z1*z2^-1)", "(1-T*z1*z2^-1)"} <= dens
    assert sum(1 for b in g.num_factors if "Q*T*z1*z2^-1" in str(b)) == 1


def test_enclosed_poles():
    assert engine.enclosed_poles(1) == [LaurentMonomial()]
    assert set(engine.enclosed_poles(3)) == {
        LaurentMonomial(), mono(Q=1, z1=1), mono(T=1, z1=1), mono(Q=1, z2=1), mono(T=1, z2=1),
    }
    assert set(engine.enclosed_poles(2, [mono(Q=1)])) == {LaurentMonomial(), mono(Q=2), mono(Q=1, T=1)}


def test_pushforward_step_examples(aQT):
    a, Q, T = aQT
    f = FactoredRat(1 + a * P(z1=-1), [], [mono(z1=-1)])
    assert engine.pushforward_step(f, 1).to_poly() == 1 + a
    assert engine.pushforward_step(f * P(z1=1), 1).to_poly() == 1 + a
    regular = FactoredRat(1 + P(z1=1), [], [mono(Q=2, z1=1)])
    assert engine.pushforward_step(regular, 1).is_zero()


@pytest.mark.parametrize(
    "e, expected",
    [
        ((0,), lambda a, Q, T: 1 + a),
        ((0, 0), lambda a, Q, T: (1 + a) ** 2),
        ((0, 1), lambda a, Q, T: (1 + a) * (a + Q + T - Q * T)),
    ],
)
def test_hand_oracles(aQT, e, expected):
    want = expected(*aQT)
    assert engine.evaluate_full(e) == want
    assert engine.evaluate_syt_sum(e) == want


@pytest.mark.parametrize("e", grid(2) + [(0, -1), (0, -2)])
def test_n2_matches_sympy(e):
    assert sp.expand(to_sympy(engine.evaluate_full(e)) - iterated_integral(e)) == 0


@pytest.mark.slow
def test_n3_matches_sympy():
    e = (0, 1, 2)
    assert sp.expand(to_sympy(engine.evaluate_full(e)) - iterated_integral(e)) == 0


def test_tableau_chains(aQT):
    a, Q, T = aQT
    row, col = Tableau(((1, 2),)), Tableau(((1,), (2,)))
    # (1+a) Q (Q+a)(1-T)/(Q-T), with Q - T = Q (1 - T/Q)
    want_row = FactoredRat((1 + a) * (Q + a) * (1 - T), [], [mono(Q=-1, T=1)])
    assert engine.evaluate_tableau((0, 1), row) == want_row
    assert engine.evaluate_tableau((0, 1), col) == want_row.swap("Q", "T")
    assert engine.evaluate_tableau((0,), Tableau(((1,),))).to_poly() == 1 + a
    total = frat_sum([engine.evaluate_tableau((0, 1), t) for t in (row, col)])
    assert total.to_poly() == (1 + a) * (a + Q + T - Q * T)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_dual_evaluators_agree_small(n):
    for e in grid(n):
        assert engine.evaluate_full(e) == engine.evaluate_syt_sum(e)


@pytest.mark.parametrize("n", [2, 3])
def test_series_path_agrees_with_simple_path(n):
    for e in grid(n)[::3]:
        assert engine.evaluate_full(e, method="series") == engine.evaluate_full(e)
        for t in all_tableaux(n):
            assert engine.evaluate_tableau(e, t, method="series") == engine.evaluate_tableau(e, t)


@pytest.mark.parametrize("n", [2, 3])
def test_qt_symmetry(n):
    for e in grid(n):
        p = engine.evaluate_full(e)
        assert p.swap("Q", "T") == p


@pytest.mark.parametrize("n", [1, 2, 3])
def test_z1_inert(n):
    for e in grid(n):
        base = engine.evaluate_full(e)
        for c in (1, 2):
            assert engine.evaluate_full((c,) + e[1:]) == base


@pytest.mark.parametrize("n", [2, 3])
def test_repeated_chains_vanish(n):
    values = {w for t in all_tableaux(n) for w in box_weights(t)}
    e = grid(n)[-1]
    for chain in itertools.product(sorted(values, key=str), repeat=n):
        if len(set(chain)) < n:
            assert engine.evaluate_chain(e, chain).is_zero()


@pytest.mark.parametrize("n", [1, 2, 3])
def test_kernel_factorization(n):
    for e in grid(n):
        assert engine.evaluate_full(e, kernel="zeta_tilde") == engine.evaluate_full(e)


@pytest.mark.parametrize("n", [2, 3])
def test_audit_finds_no_stray_residues(n):
    for e in grid(n) + [(0,) + (-1,) * (n - 1)]:
        audit = []
        engine.evaluate_full(e, audit=audit)
        assert audit == []


def test_single_tableau_terms_are_not_polynomial():
    # per-tableau denominators only cancel in the sum
    row = Tableau(((1, 2),))
    assert not engine.evaluate_tableau((0, 1), row).is_polynomial()


def test_integrand_validates_kernel():
    with pytest.raises(ValueError):
        engine.integrand((0,), kernel="other")
    with pytest.raises(ValueError):
        engine.evaluate_tableau((0, 0), Tableau(((1,),)))


def test_results_involve_only_grading_variables():
    p = engine.evaluate_full((0, 2, 1))
    assert p.variables() <= {"a", "Q", "T"}
    assert isinstance(p, LaurentPoly)
