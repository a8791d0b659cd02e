import pytest

from exceptions import IndexOutOfRange
from gdelta.maps import identity
from gdelta.objects import SimplexObject
from objects.standard import (
    boundary,
    face_image,
    horn,
    horn_by_predicate,
    horns,
    in_horn,
    notation,
    parse_notation,
    top_cells,
)
from presheaf.constructions import is_sub
from presheaf.isosset import simplex_count, validate


class TestBoundary:
    def test_boundary_of_delta21(self, boundary21, delta21):
        assert len(boundary21) == len(delta21) - 2
        assert boundary21.dimension == 1

    @pytest.mark.parametrize("k", [0, 1])
    def test_point_has_empty_boundary(self, k):
        assert boundary(0, k).is_empty()

    def test_boundary_is_a_subobject(self, boundary21, delta21):
        assert is_sub(boundary21, delta21)
        assert validate(boundary21).ok

    def test_free_face_needs_eps_one(self):
        with pytest.raises(IndexOutOfRange):
            face_image(2, 1, 0, 0)
        assert face_image(2, 1, 0, 1).dimension == 1


class TestHorns:
    @pytest.mark.parametrize("n, k, l", list(horns(3)))
    def test_predicate_matches_union_of_faces(self, n, k, l):
        assert horn_by_predicate(n, k, l) == horn(n, k, l)

    @pytest.mark.parametrize("n, k, l", [(2, 1, 1), (3, 2, 0), (3, 4, 2)])
    def test_horn_sits_inside_boundary(self, n, k, l):
        small, big = horn(n, k, l), boundary(n, k)
        assert is_sub(small, big)
        assert len(small) < len(big)

    def test_horn_211_drops_the_edges_through_vertex_1(self, horn211):
        census = {(d.n, d.k): c for d, c in horn211.census().items()}
        assert census == {(0, 0): 2, (0, 1): 2, (1, 0): 1, (1, 1): 2}

    def test_horn_index_range(self):
        with pytest.raises(IndexOutOfRange):
            horn(2, 1, 3)

    def test_membership(self):
        obj = SimplexObject(2, 1)
        assert not in_horn(identity(obj), 1)

    def test_horn_enumeration(self):
        assert len(list(horns(2))) == 3 * 2 + 4 * 3


class TestNotation:
    def test_round_trip(self, delta21):
        obj = SimplexObject(2, 1)
        for cell in delta21.cells:
            assert notation(parse_notation(cell, obj)) == cell

    def test_top_cells(self, delta21):
        assert len(top_cells(delta21)) == 2


class TestTerminal:
    def test_validates(self, terminal_object):
        assert validate(terminal_object).ok

    @pytest.mark.parametrize("n", range(4))
    def test_one_simplex_in_every_degree(self, terminal_object, n):
        for k in range(n + 2):
            assert simplex_count(terminal_object, n, k) == 1

    def test_free_point_is_fixed(self, terminal_object, delta01):
        assert terminal_object.swap_cell("fix") == "fix"
        a, b = delta01.cells
        assert delta01.swap_cell(a) == b
