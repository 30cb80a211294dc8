import pytest

from idealtri.perm4 import Perm4
from idealtri.triangulation import (Triangulation, Gluing, validate,
                                    skeleton, vertex_link, is_orientable,
                                    face_classes, edge_walk)
from idealtri.isosig import relabel

import oracles


def lone_tet():
    return Triangulation([[None] * 4])


def non_involutive_pair():
    # Face 0 of tet 0 points at tet 1, but tet 1 does not point back.
    ident = Perm4((0, 1, 2, 3))
    return Triangulation([
        [Gluing(1, ident), None, None, None],
        [None, Gluing(0, ident), None, None],
    ])


# -- validate ----------------------------------------------------------------

def test_x101_census_valid(x101):
    report = validate(x101)
    assert report.census_valid
    assert report.messages == ()


def test_lone_tet_not_closed():
    report = validate(lone_tet())
    assert not report.closed
    assert not report.census_valid
    assert report.involution_ok
    assert any("unglued face" in m for m in report.messages)


def test_non_involutive_flagged():
    report = validate(non_involutive_pair())
    assert not report.involution_ok
    assert not report.census_valid
    assert any("involution" in m for m in report.messages)


def test_validate_is_label_invariant(x101, fig8):
    for tri in (x101, fig8):
        base = validate(tri)
        for seed in range(5):
            other = validate(relabel(tri, seed))
            assert other.census_valid == base.census_valid


# -- skeleton ------------------------------------------------------------------

def test_x101_skeleton_counts(x101):
    sk = skeleton(x101)
    assert sk.tets == 6
    assert sk.glued_face_pairs == 12
    assert len(sk.edges) == 6
    assert len(sk.edges) == oracles.edge_class_count(x101)
    assert len(sk.vertices) == oracles.vertex_class_count(x101)


def test_fig8_skeleton_counts(fig8):
    sk = skeleton(fig8)
    assert len(sk.edges) == 2 == oracles.edge_class_count(fig8)
    assert len(sk.vertices) == 1 == oracles.vertex_class_count(fig8)
    assert sorted(e.degree for e in sk.edges) == [6, 6]


def test_lone_tet_skeleton():
    sk = skeleton(lone_tet())
    assert len(sk.edges) == 6
    assert len(sk.vertices) == 4
    assert all(e.degree == 1 for e in sk.edges)


def test_skeleton_rejects_involution_violation():
    with pytest.raises(ValueError):
        skeleton(non_involutive_pair())


def test_degree_sums(x101, x103_0, fig8, x101_cover):
    for tri in (x101, x103_0, fig8, x101_cover):
        sk = skeleton(tri)
        assert sum(e.degree for e in sk.edges) == 6 * tri.size
        assert sum(len(v.members) for v in sk.vertices) == 4 * tri.size


def test_edge_classes_equal_tets_for_census_valid(x101, x103_0, x103_1,
                                                  fig8, x101_cover):
    # Euler-characteristic identity: closed, all links chi=0.
    for tri in (x101, x103_0, x103_1, fig8, x101_cover):
        assert len(skeleton(tri).edges) == tri.size


def test_edge_walk_matches_degrees(x101, fig8):
    for tri in (x101, fig8):
        for e in skeleton(tri).edges:
            assert len(edge_walk(tri, e.representative())) == e.degree


def test_face_classes_count(x101, fig8):
    assert len(face_classes(x101)) == 12
    assert len(face_classes(fig8)) == 4


# -- vertex links --------------------------------------------------------------

def test_x101_links_chi_zero(x101):
    sk = skeleton(x101)
    for vc in sk.vertices:
        link = vertex_link(x101, vc)
        assert link.euler_characteristic == 0
        assert link.connected
        (chi, orientable, connected) = oracles.link_data(x101, vc.members)
        assert (chi, orientable, connected) == (
            link.euler_characteristic, link.orientable, link.connected)


def test_fig8_link_torus(fig8):
    sk = skeleton(fig8)
    assert len(sk.vertices) == 1
    link = vertex_link(fig8, sk.vertices[0])
    assert link.kind() == "torus"
    chi, orientable, connected = oracles.link_data(fig8, sk.vertices[0].members)
    assert chi == 0 and orientable and connected


def test_cover_links_all_tori(x101_cover):
    for vc in skeleton(x101_cover).vertices:
        assert vertex_link(x101_cover, vc).kind() == "torus"


def test_link_triangle_sum(x101, x103_0, fig8):
    for tri in (x101, x103_0, fig8):
        sk = skeleton(tri)
        total = sum(vertex_link(tri, vc).triangles for vc in sk.vertices)
        assert total == 4 * tri.size


# -- orientability ---------------------------------------------------------------

def test_orientability_against_exhaustive(x101, x103_0, fig8, x101_cover):
    for tri, expect in ((x101, False), (x103_0, False), (fig8, True),
                        (x101_cover, True)):
        assert is_orientable(tri) == expect
        assert oracles.orientable_exhaustive(tri) == expect
