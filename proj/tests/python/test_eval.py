import random

import sympy as sp

import cm_oracle as oracle
import cmcert


def test_headline_values():
    assert cmcert.f([4] * 6) == 16384
    assert cmcert.g("K4", [4] * 6) == 24576
    assert cmcert.f([6, 3, 3, 3, 3, 6]) == -93312
    assert cmcert.g("K4", [6, 3, 3, 3, 3, 6]) == -62208


def test_f_and_g_match_sympy():
    rng = random.Random(5)
    subsets = [[(1, 2)], [(1, 2), (1, 3)], [(1, 2), (3, 4)], [(1, 2), (1, 3), (2, 3)], oracle.EDGES]
    gs = {tuple(b): oracle.g_expr(b) for b in subsets}
    for _ in range(15):
        d = [rng.randint(1, 10**6) for _ in range(6)]
        want = oracle.at(oracle.F, d)
        assert cmcert.f(d) == want
        assert cmcert.f_determinant(d) == want
        for b, expr in gs.items():
            beta = ",".join(f"{i}{j}" for i, j in b)
            assert cmcert.g(beta, d) == oracle.at(expr, d)


def test_big_integers_round_trip():
    d = [10**30 + k for k in range(6)]
    assert cmcert.f(d) == oracle.at(oracle.F, d)
    assert cmcert.combination("12", 3, -2, d) == 3 * cmcert.g("12", d) - 2 * cmcert.f(d)


def test_tetrahedrality_against_gram_matrix():
    rng = random.Random(6)
    for _ in range(200):
        d = [rng.randint(1, 7) for _ in range(6)]
        sq = {e: x * x for e, x in zip(oracle.EDGES, d)}
        g = sp.Matrix(3, 3, lambda a, b: sp.Rational(sq[(1, a + 2)] + sq[(1, b + 2)] - (0 if a == b else sq[(min(a, b) + 2, max(a, b) + 2)]), 2))
        pd = all(g[:k, :k].det() > 0 for k in (1, 2, 3))
        assert cmcert.is_tetrahedral(d) == pd


def test_named_points():
    assert cmcert.named_point("A23") == [6, 3, 3, 3, 3, 6]
    assert list(oracle.point("A23")) == [6, 3, 3, 3, 3, 6]


def test_bad_input_raises():
    import pytest

    with pytest.raises(ValueError):
        cmcert.f([1, 2, 3])
    with pytest.raises(ValueError):
        cmcert.g("15", [1] * 6)
