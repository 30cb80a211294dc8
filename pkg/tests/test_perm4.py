import pytest

from idealtri.perm4 import Perm4, ALL_PERMS, IDENTITY


def test_all_24_elements():
    assert len(ALL_PERMS) == 24
    assert len(set(ALL_PERMS)) == 24
    assert ALL_PERMS[0] == IDENTITY


def test_group_axioms():
    for p in ALL_PERMS:
        assert p * IDENTITY == p
        assert IDENTITY * p == p
        assert p * p.inverse() == IDENTITY
        assert p.inverse() * p == IDENTITY
    # Associativity on a spanning sample of triples.
    for p in ALL_PERMS:
        for q in ALL_PERMS[::5]:
            for r in ALL_PERMS[::7]:
                assert (p * q) * r == p * (q * r)


def test_composition_order():
    p = Perm4((1, 2, 0, 3))
    q = Perm4((0, 1, 3, 2))
    assert (p * q)(3) == p(q(3))
    for x in range(4):
        assert (p * q)(x) == p(q(x))


def test_sign_is_homomorphism():
    assert IDENTITY.sign() == 1
    assert Perm4.transposition(0, 1).sign() == -1
    for p in ALL_PERMS:
        for q in ALL_PERMS:
            assert (p * q).sign() == p.sign() * q.sign()


def test_index_round_trip():
    for k, p in enumerate(ALL_PERMS):
        assert p.index() == k
        assert Perm4.from_index(k) == p


def test_rejects_non_permutation():
    with pytest.raises(ValueError):
        Perm4((0, 1, 2, 0))
    with pytest.raises(ValueError):
        Perm4((0, 1, 2))


def test_immutable():
    p = Perm4((0, 1, 2, 3))
    with pytest.raises(AttributeError):
        p.images = (1, 0, 2, 3)
