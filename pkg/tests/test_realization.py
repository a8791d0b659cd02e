import numpy as np
import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from exceptions import InvalidDocument, InvalidPoint
from gdelta.generators import codegeneracy, coface
from gdelta.maps import compose, enumerate_hom, identity
from gdelta.objects import SimplexObject
from gdelta.relations import generating_maps
from objects.standard import boundary, face_image
from presheaf.constructions import coproduct, pushout, representable
from presheaf.maps import inclusion
from presheaf.search import hom_presheaf_maps
from realization.geometry import (
    euler_characteristic,
    naturality_residual,
    random_point,
    realize,
    realize_cellwise,
    theta_star,
    theta_star_real,
)
from realization.mesh import Mesh, disjoint_union, export_obj, export_off, parse_off

GENERATORS = list(generating_maps(3))


class TestCellwise:
    def test_two_triangles_sharing_the_real_edge(self):
        mesh = realize_cellwise(2, 1)
        assert len(mesh.vertices) == 4
        assert mesh.census() == (4, 5, 2)
        assert len(mesh.facets()) == 2
        assert mesh.is_connected()

    @pytest.mark.parametrize("n", range(4))
    def test_no_free_vertices_gives_one_simplex(self, n):
        mesh = realize_cellwise(n, 0)
        assert mesh.facets() == [tuple(range(n + 1))]
        assert mesh.euler() == 1

    def test_all_free_gives_disjoint_chains(self):
        mesh = realize_cellwise(1, 2)
        assert mesh.census() == (4, 2)
        assert not mesh.is_connected()

    def test_free_partners_are_mirrored(self):
        mesh = realize_cellwise(1, 1)
        e, s = mesh.coordinates[0], mesh.coordinates[1]
        assert e[-1] == 1.0 and s[-1] == -1.0
        assert np.array_equal(e[:-1], s[:-1])


class TestRealize:
    def test_delta21_is_a_disk(self, delta21):
        mesh = realize(delta21)
        assert mesh.census() == (4, 5, 2)
        assert mesh.euler() == 1
        assert mesh.is_connected()
        assert mesh.is_closed()

    def test_free_point_is_two_points(self, delta01):
        assert euler_characteristic(delta01) == 2

    def test_empty(self, nothing):
        mesh = realize(nothing)
        assert mesh.census() == ()
        assert mesh.euler() == 0

    def test_boundary_keeps_the_shared_edge(self, boundary21):
        mesh = realize(boundary21)
        assert mesh.census() == (4, 5)
        assert mesh.euler() == -1

    @pytest.mark.parametrize("n, k", [(1, 0), (1, 1), (2, 0), (2, 2), (2, 3), (3, 1)])
    def test_top_facets(self, n, k):
        mesh = realize(representable(n, k))
        top = [f for f in mesh.facets() if len(f) == n + 1]
        assert len(top) == (1 if k == 0 else 2)

    def test_coproduct_is_a_disjoint_union(self, delta21, delta01):
        joined = realize(coproduct(delta21, delta01))
        assert joined.census() == disjoint_union(realize(delta21), realize(delta01)).census()

    def test_two_edges_glued_at_their_ends_make_a_circle(self):
        ends = inclusion(boundary(1, 0), representable(1, 0))
        circle, _, _ = pushout(ends, ends)
        mesh = realize(circle)
        assert mesh.census() == (2, 2)
        assert euler_characteristic(circle) == 0
        assert len(mesh.facets()) == 2
        assert mesh.is_closed() and mesh.is_connected()

    def test_edge_with_its_ends_identified_is_a_loop(self, point):
        ends = boundary(1, 0)
        (collapse,) = hom_presheaf_maps(ends, point)
        loop, _, _ = pushout(inclusion(ends, representable(1, 0)), collapse)
        mesh = realize(loop)
        assert mesh.census() == (1, 1)
        assert mesh.simplices[1] == (0, 0)
        assert euler_characteristic(loop) == 0
        assert mesh.is_closed()

    def test_triangles_glued_along_an_edge(self):
        edge = inclusion(face_image(2, 0, 0, 0), representable(2, 0))
        P, _, _ = pushout(edge, edge)
        mesh = realize(P)
        assert mesh.census() == (4, 5, 2)
        assert mesh.euler() == 1
        assert len(mesh.facets()) == 2
        assert mesh.is_closed() and mesh.is_connected()

    def test_crushed_edge_becomes_a_lower_face(self, point):
        edge = face_image(2, 0, 0, 0)
        (crush,) = hom_presheaf_maps(edge, point)
        cone, _, _ = pushout(inclusion(edge, representable(2, 0)), crush)
        mesh = realize(cone)
        assert mesh.census() == (2, 2, 1)
        assert mesh.euler() == 1
        (triangle,) = [i for i, s in enumerate(mesh.simplices) if len(s) == 3]
        assert len(mesh.simplices[mesh.faces[triangle][0]]) == 1
        assert mesh.is_closed()

    def test_euler_characteristic_counts_cells(self, horn211):
        degrees = [d.n for d in horn211.cells.values()]
        assert euler_characteristic(horn211) == sum((-1) ** n for n in degrees)

    def test_swap_partners_share_a_height(self, delta01):
        mesh = realize(delta01)
        a, b = mesh.coordinates
        assert a[1] == b[1] and a[0] == -b[0] != 0


class TestThetaStar:
    def test_identity(self):
        t = np.array([0.2, 0.3, 0.5])
        assert np.allclose(theta_star(identity(SimplexObject(2, 1)), t), t)

    def test_codegeneracy_adds_coordinates(self):
        assert np.allclose(theta_star(codegeneracy(0, 0, 0, 0), [0.5, 0.5]), [1.0])

    def test_coface_inserts_a_zero(self):
        assert np.allclose(theta_star(coface(1, 0, 1, 0), [0.25, 0.75]), [0.25, 0.0, 0.75])

    def test_real_part(self):
        theta = coface(1, 1, 1, 0)
        assert np.allclose(theta_star_real(theta, [1.0]), [0.0, 1.0])

    @pytest.mark.parametrize("point", [[0.5, 0.6], [1.5, -0.5], [1.0]])
    def test_rejects_points_off_the_simplex(self, point):
        with pytest.raises(InvalidPoint):
            theta_star(identity(SimplexObject(1, 0)), point)

    @given(st.sampled_from(GENERATORS), st.integers(0, 2**32 - 1))
    @settings(max_examples=200, deadline=None)
    def test_natural_on_real_faces(self, theta, seed):
        src = theta.src
        if src.k > src.n:
            return
        point = random_point(src.n - src.k + 1, np.random.default_rng(seed))
        assert naturality_residual(theta, point) < 1e-9

    @given(st.sampled_from(GENERATORS), st.integers(0, 2**32 - 1))
    @settings(max_examples=100, deadline=None)
    def test_functorial(self, theta, seed):
        rng = np.random.default_rng(seed)
        for g in enumerate_hom(theta.tgt, SimplexObject(theta.tgt.n, theta.tgt.k))[:3]:
            t = random_point(theta.src.n + 1, rng)
            assert np.allclose(theta_star(compose(g, theta), t), theta_star(g, theta_star(theta, t)))

    def test_image_stays_in_the_simplex(self):
        rng = np.random.default_rng(7)
        for theta in GENERATORS:
            image = theta_star(theta, random_point(theta.src.n + 1, rng))
            assert (image >= 0).all()
            assert np.isclose(image.sum(), 1.0)


class TestExport:
    def test_obj(self):
        text = export_obj(realize_cellwise(2, 1))
        lines = text.splitlines()
        assert sum(1 for line in lines if line.startswith("v ")) == 4
        assert sum(1 for line in lines if line.startswith("f ")) == 2
        assert sum(1 for line in lines if line.startswith("l ")) == 5

    def test_empty_off(self):
        assert export_off(Mesh([], np.zeros((0, 3)))) == "OFF\n0 0 0\n"

    def test_off_round_trip(self, delta21):
        mesh = realize(delta21)
        back = parse_off(export_off(mesh))
        assert back.census() == mesh.census()
        assert np.allclose(back.coordinates, mesh.coordinates)

    def test_malformed_off(self):
        with pytest.raises(InvalidDocument):
            parse_off("OFF\n2 0 0\n0 0 0\n")
        with pytest.raises(InvalidDocument):
            parse_off("PLY\n")

    def test_mesh_document(self, delta21):
        doc = realize(delta21).to_dict()
        assert len(doc["vertices"]) == 4
        assert len(doc["simplices"]) == 11
