import pytest

from idealtri.isosig import (canonical_signature, canonical_form,
                             decode_signature, are_isomorphic, relabel,
                             Isomorphism, ALPHABET)
from idealtri.triangulation import Triangulation, skeleton, make_closed
from idealtri.builders import five_tet_cube

import oracles

# Pinned signatures: bit-exactness across runs and platforms is part of
# the interface (these appear in CLI output and files).
X101_SIG = "gbabccadaaackacdkeafaaabnegfgbnaacadgfhfsdgcaejeh"
FIG8_SIG = "cbabibhbtaaalamah"


def sister():
    # The other two-tetrahedron orientable census triangulation
    # (H1 = Z + Z_5); a non-isomorphic control for the tests.
    return make_closed(2, {
        (0, 0): (1, (0, 1, 2, 3)),
        (0, 1): (1, (0, 2, 3, 1)),
        (0, 2): (1, (3, 2, 1, 0)),
        (0, 3): (1, (2, 0, 1, 3)),
    })


def test_pinned_signatures(x101, fig8):
    assert canonical_signature(x101) == X101_SIG
    assert canonical_signature(fig8) == FIG8_SIG


def test_relabel_invariance_100(x101):
    sig = canonical_signature(x101)
    for seed in range(100):
        assert canonical_signature(relabel(x101, seed)) == sig


def test_relabel_deterministic_and_isomorphic(x101):
    assert relabel(x101, 3) == relabel(x101, 3)
    assert are_isomorphic(relabel(x101, 3), x101) is not None
    sk = skeleton(x101)
    degrees = sorted(e.degree for e in sk.edges)
    for seed in (1, 2):
        sk2 = skeleton(relabel(x101, seed))
        assert sorted(e.degree for e in sk2.edges) == degrees


def test_decode_round_trip(x101, fig8):
    for tri in (x101, fig8):
        sig = canonical_signature(tri)
        back = decode_signature(sig)
        assert are_isomorphic(back, tri) is not None
        assert canonical_signature(back) == sig


def test_signatures_distinguish(x101, x103_0, fig8):
    assert canonical_signature(x101) != canonical_signature(x103_0)
    assert canonical_signature(fig8) != canonical_signature(sister())


def test_agreement_with_exhaustive_oracle(fig8):
    other = sister()
    assert oracles.isomorphic_exhaustive(fig8, relabel(fig8, 5))
    assert not oracles.isomorphic_exhaustive(fig8, other)
    assert are_isomorphic(fig8, relabel(fig8, 5)) is not None
    assert are_isomorphic(fig8, other) is None


def test_witness_transports_table(x101):
    for seed in range(5):
        target = relabel(x101, seed)
        wit = are_isomorphic(x101, target)
        assert wit.apply(x101) == target


def test_witnesses_compose(x101):
    a, b, c = x101, relabel(x101, 11), relabel(x101, 22)
    ab = are_isomorphic(a, b)
    bc = are_isomorphic(b, c)
    assert bc.compose(ab).apply(a) == c


def test_isomorphism_identity_and_inverse(fig8):
    ident = Isomorphism.identity(fig8.size)
    assert ident.apply(fig8) == fig8
    wit = are_isomorphic(fig8, relabel(fig8, 9))
    assert wit.inverse().apply(wit.apply(fig8)) == fig8


def test_canonical_form_maps_onto_decoded_representative(x101):
    sig, iso = canonical_form(x101)
    assert iso.apply(x101) == decode_signature(sig)


def test_signature_rejects_boundary():
    cube = five_tet_cube().tri
    with pytest.raises(ValueError):
        canonical_signature(cube)


def test_signature_rejects_disconnected(fig8):
    table = [list(faces) for faces in fig8.tets]
    shifted = [[type(g)(g.tet + 2, g.perm) for g in faces]
               for faces in table]
    both = Triangulation(table + shifted)
    with pytest.raises(ValueError):
        canonical_signature(both)


def test_decode_rejects_garbage():
    with pytest.raises(ValueError):
        decode_signature("")
    with pytest.raises(ValueError):
        decode_signature("!!!")
    with pytest.raises(ValueError):
        decode_signature("b" + "a" * 3)  # wrong length
    # Tamper with a valid signature so the table is not involutive.
    sig = FIG8_SIG
    bad = sig[:-1] + ("a" if sig[-1] != "a" else "b")
    with pytest.raises(ValueError):
        decode_signature(bad)


def test_alphabet_is_printable_and_distinct():
    assert len(ALPHABET) == 64
    assert len(set(ALPHABET)) == 64
    assert all(c.isprintable() and not c.isspace() for c in ALPHABET)
