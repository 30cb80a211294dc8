import random

import pytest

from idealtri.moves import (MoveDescriptor, MoveError, pachner_23,
                            pachner_32, move_44, move_44_as_pachner_pair,
                            legal_moves, apply_move)
from idealtri.builders import build_x101, build_x103, x101_flip_edge
from idealtri.triangulation import (validate, skeleton, face_classes,
                                    is_orientable)
from idealtri.isosig import canonical_signature, are_isomorphic, relabel
from idealtri.homology import first_homology


def admissible_23_faces(tri):
    return [i for i, (s0, s1) in enumerate(face_classes(tri))
            if s0[0] != s1[0]]


# -- 2-3 ----------------------------------------------------------------------

def test_pachner_23_counts_and_new_edge(x101):
    for i in admissible_23_faces(x101):
        out = pachner_23(x101, i)
        assert out.size == x101.size + 1
        assert validate(out).census_valid
        # The new interior edge is the 01-edge of the first new
        # tetrahedron and has degree 3 in three distinct tetrahedra.
        e = skeleton(out).edge_containing(out.size - 3, 0, 1)
        assert e.degree == 3
        assert len({t for (t, _, _) in e.members}) == 3


def test_pachner_23_preserves_h1(x101):
    h = str(first_homology(x101))
    for i in admissible_23_faces(x101):
        assert str(first_homology(pachner_23(x101, i))) == h


def test_pachner_23_rejects_boundary_and_self():
    from idealtri.builders import five_tet_cube
    cube = five_tet_cube().tri
    with pytest.raises(MoveError):
        pachner_23(cube, (0, 1))  # boundary face of the corner tet


# -- 3-2 ----------------------------------------------------------------------

def test_pachner_32_inverts_23(x101):
    sig = canonical_signature(x101)
    for i in admissible_23_faces(x101):
        mid = pachner_23(x101, i)
        back = pachner_32(mid, (mid.size - 3, 0, 1))
        assert back.size == x101.size
        assert canonical_signature(back) == sig


def test_pachner_32_rejects_degree_four(x101):
    e = skeleton(x101).edge_containing(*x101_flip_edge())
    with pytest.raises(MoveError):
        pachner_32(x101, e)


def test_pachner_32_rejects_wrong_indices(x101):
    with pytest.raises(MoveError):
        pachner_32(x101, 99)


# -- 4-4 ----------------------------------------------------------------------

def test_move_44_matches_builder(x101, x103_0, x103_1):
    e = x101_flip_edge()
    assert canonical_signature(move_44(x101, e, 0)) == \
        canonical_signature(x103_0)
    assert canonical_signature(move_44(x101, e, 1)) == \
        canonical_signature(x103_1)


def test_move_44_keeps_count_and_validity(x101):
    for c in (0, 1):
        out = move_44(x101, x101_flip_edge(), c)
        assert out.size == x101.size
        assert validate(out).census_valid


def test_move_44_reversible(x101, x103_0):
    # Some degree-four edge of x103 with some choice restores x101.
    sig = canonical_signature(x101)
    restored = []
    for e in skeleton(x103_0).edges:
        if e.degree != 4 or len({t for (t, _, _) in e.members}) != 4:
            continue
        for c in (0, 1):
            restored.append(
                canonical_signature(move_44(x103_0, e, c)) == sig)
    assert any(restored)


def test_move_44_equals_pachner_pair(x101):
    # The 4-4 move is a 2-3 move followed by a 3-2 move.
    for c in (0, 1):
        direct = move_44(x101, x101_flip_edge(), c)
        composite = move_44_as_pachner_pair(x101, x101_flip_edge(), c)
        assert are_isomorphic(direct, composite) is not None


def test_move_44_rejects_wrong_degree(x101):
    deg6 = next(e for e in skeleton(x101).edges if e.degree == 6)
    with pytest.raises(MoveError):
        move_44(x101, deg6, 0)
    with pytest.raises(MoveError):
        move_44(x101, x101_flip_edge(), 2)


# -- shared move properties ------------------------------------------------------

def _invariants(tri):
    sk = skeleton(tri)
    return (len(sk.vertices), is_orientable(tri), str(first_homology(tri)),
            validate(tri).census_valid)


def test_relabel_then_move_is_move_then_relabel(x101):
    # Applying a move at the transported location commutes with
    # relabelling, up to isomorphism.
    i = admissible_23_faces(x101)[0]
    moved = pachner_23(x101, i)
    for seed in range(3):
        shuffled = relabel(x101, seed)
        results = {canonical_signature(pachner_23(shuffled, j))
                   for j in admissible_23_faces(shuffled)}
        assert canonical_signature(moved) in results


def test_random_move_sequences_preserve_invariants(x101):
    base = _invariants(x101)
    rng = random.Random(20260809)
    for _trial in range(6):
        tri = x101
        for _step in range(6):
            options = legal_moves(tri, max_tets=12)
            if not options:
                break
            tri = apply_move(tri, rng.choice(options))
        assert _invariants(tri) == base


def test_legal_moves_sorted_and_applicable(x101):
    moves = legal_moves(x101)
    assert moves == sorted(moves)
    for d in moves:
        out = apply_move(x101, d)
        assert validate(out).census_valid
    # Budget suppression of 2-3 moves.
    only32 = legal_moves(x101, max_tets=x101.size)
    assert all(d.kind == 32 for d in only32)


def test_move_descriptor_validation():
    with pytest.raises(ValueError):
        MoveDescriptor(kind=12, loc=0)
