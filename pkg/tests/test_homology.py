import random

import pytest

from idealtri.homology import (IntMatrix, AbelianGroup, smith_normal_form,
                               spine_presentation, first_homology)
from idealtri.builders import five_tet_cube
from idealtri.moves import legal_moves, apply_move
from idealtri.isosig import relabel, canonical_signature, decode_signature

import oracles


# -- Smith normal form ---------------------------------------------------------

def check_snf(a):
    s, u, v = smith_normal_form(a)
    m = a if isinstance(a, IntMatrix) else IntMatrix(a)
    assert u @ m @ v == s
    assert abs(u.determinant()) == 1
    assert abs(v.determinant()) == 1
    diag = [d for d in s.diagonal() if d != 0]
    for i in range(s.rows):
        for j in range(s.cols):
            if i != j:
                assert s[i, j] == 0
    for x, y in zip(diag, diag[1:]):
        assert x > 0 and y % x == 0
    # Nothing nonzero beyond the diagonal chain.
    assert all(d == 0 for d in s.diagonal()[len(diag):])
    return diag


def test_snf_diag_2_3():
    diag = check_snf([[2, 0], [0, 3]])
    assert diag == [1, 6]


def test_snf_zero_matrix():
    s, u, v = smith_normal_form([[0, 0, 0], [0, 0, 0]])
    assert s == IntMatrix.zeros(2, 3)
    assert abs(u.determinant()) == 1 and abs(v.determinant()) == 1


def test_snf_empty_and_single():
    assert check_snf([[7]]) == [7]
    assert check_snf([[-7]]) == [7]
    assert check_snf([[0]]) == []


def test_snf_200_random_vs_determinantal_divisors():
    rng = random.Random(42)
    for _ in range(200):
        rows = rng.randrange(1, 5)
        cols = rng.randrange(1, 6)
        data = [[rng.randrange(-5, 6) for _ in range(cols)]
                for _ in range(rows)]
        diag = check_snf(data)
        assert diag == oracles.determinantal_divisors(data)


def test_int_matrix_exact_large_entries():
    # Arbitrary precision: entries overflow any fixed-width integer.
    big = 10 ** 40
    diag = check_snf([[big, 0], [0, big + 1]])
    assert diag == [1, big * (big + 1)]


def test_int_matrix_determinant():
    assert IntMatrix([[2, 1], [1, 1]]).determinant() == 1
    assert IntMatrix([[1, 2], [2, 4]]).determinant() == 0
    with pytest.raises(ValueError):
        IntMatrix([[1, 2, 3]]).determinant()


def test_abelian_group_form():
    assert str(AbelianGroup(rank=1, torsion=(2, 2))) == "Z + Z_2 + Z_2"
    assert str(AbelianGroup(rank=0, torsion=())) == "0"
    assert str(AbelianGroup(rank=2, torsion=(3,))) == "Z^2 + Z_3"
    with pytest.raises(ValueError):
        AbelianGroup(rank=0, torsion=(3, 2))
    with pytest.raises(ValueError):
        AbelianGroup(rank=0, torsion=(1,))


# -- spine presentation ----------------------------------------------------------

def test_spine_counts_x101(x101):
    pres = spine_presentation(x101)
    assert pres.generators == 12
    assert len(pres.tree) == 5
    assert len(pres.relators) == 6


def test_spine_counts_fig8(fig8):
    pres = spine_presentation(fig8)
    assert pres.generators == 4
    assert len(pres.tree) == 1
    assert len(pres.relators) == 2


def test_spine_rejects_invalid():
    with pytest.raises(ValueError):
        spine_presentation(five_tet_cube().tri)


def test_relator_lengths_match_degrees(x101):
    from idealtri.triangulation import skeleton
    degrees = [e.degree for e in skeleton(x101).edges]
    pres = spine_presentation(x101)
    assert [len(word) for word in pres.relators] == degrees


# -- first homology ----------------------------------------------------------------

def test_h1_headline_values(x101, x103_0, x103_1, fig8):
    assert str(first_homology(x101)) == "Z + Z_2 + Z_2"
    assert str(first_homology(x103_0)) == "Z + Z_2 + Z_2"
    assert str(first_homology(x103_1)) == "Z + Z_2 + Z_2"
    assert str(first_homology(fig8)) == "Z"


def test_h1_against_sympy_snf(x101, fig8):
    # Independent reduction of the same abelianised presentation.
    from sympy import Matrix
    from sympy.matrices.normalforms import smith_normal_form as sympy_snf

    for tri, expect in ((x101, "Z + Z_2 + Z_2"), (fig8, "Z")):
        pres = spine_presentation(tri)
        live = [i for i in range(pres.generators) if i not in set(pres.tree)]
        col = {g: j for j, g in enumerate(live)}
        m = [[0] * len(live) for _ in pres.relators]
        for r, word in enumerate(pres.relators):
            for gen, sign in word:
                if gen in col:
                    m[r][col[gen]] += sign
        s = sympy_snf(Matrix(m))
        diag = [abs(s[i, i]) for i in range(min(s.rows, s.cols))]
        nonzero = [d for d in diag if d != 0]
        rank = len(live) - len(nonzero)
        torsion = tuple(int(d) for d in nonzero if d > 1)
        assert str(AbelianGroup(rank=rank, torsion=torsion)) == expect


def test_h1_invariant_under_relabel(x101):
    for seed in range(5):
        assert str(first_homology(relabel(x101, seed))) == "Z + Z_2 + Z_2"


def test_h1_invariant_under_random_moves(x101):
    rng = random.Random(7)
    tri = x101
    for _ in range(6):
        moves = legal_moves(tri, max_tets=12)
        tri = apply_move(tri, rng.choice(moves))
        assert str(first_homology(tri)) == "Z + Z_2 + Z_2"


def test_h1_of_decoded_signature(x101, fig8):
    for tri in (x101, fig8):
        decoded = decode_signature(canonical_signature(tri))
        assert str(first_homology(decoded)) == str(first_homology(tri))
