import pytest

from exceptions import IndexOutOfRange, NotAdmissible
from gdelta.generators import coface, swap
from homotopy.admissibility import admissibility_table, is_admissible, is_admissible_by_definition
from homotopy.deformation import certify_horn, deformation, neighbour
from homotopy.fillers import horn_fillers, horn_filling_report
from homotopy.homotopies import (
    constant_homotopy,
    find_elementary_homotopy,
    homotopy_chain,
    homotopy_classes,
    is_elementary_homotopy_equivalence,
)
from homotopy.normality import aut_group, fixed_cells, is_normal, is_normal_mono
from objects.standard import horn
from presheaf.constructions import representable, yoneda_map
from presheaf.maps import identity, inclusion


class TestAdmissibility:
    def test_non_admissible_horns(self):
        bad = {(n, k, l) for n in range(1, 5) for k in range(n + 2) for l in range(n + 1) if not is_admissible(n, k, l)}
        assert bad == {(n, 1, 0) for n in range(1, 5)} | {(n, n, n) for n in range(1, 5)}

    @pytest.mark.parametrize("l", range(5))
    def test_every_horn_of_delta43(self, l):
        assert is_admissible(4, 3, l)

    def test_definition_agrees_with_closed_form(self):
        _, disagree = admissibility_table(4)
        assert disagree == []

    @pytest.mark.parametrize("n, k, l, expected", [(2, 1, 0, False), (2, 1, 1, True), (2, 2, 2, False), (2, 0, 2, True)])
    def test_by_definition(self, n, k, l, expected):
        assert is_admissible_by_definition(n, k, l) is expected

    def test_out_of_range(self):
        with pytest.raises(IndexOutOfRange):
            is_admissible(2, 4, 0)


class TestHomotopies:
    def test_vertex_inclusions_are_joined_one_way(self):
        left, right = yoneda_map(coface(0, 0, 1, 0)), yoneda_map(coface(0, 0, 0, 0))
        forward = find_elementary_homotopy(left, right)
        backward = find_elementary_homotopy(right, left)
        assert (forward is None) != (backward is None)
        found = forward or backward
        assert found.joins(*((left, right) if forward else (right, left)))

    def test_swap_is_not_homotopic_to_identity(self, delta01):
        assert find_elementary_homotopy(identity(delta01), yoneda_map(swap(0, 1))) is None

    def test_free_point_has_two_classes(self, delta01):
        assert len(homotopy_classes(delta01, delta01)) == 2

    def test_edge_endpoints_share_a_class(self):
        classes = homotopy_classes(representable(0, 0), representable(1, 0))
        assert len(classes) == 1 and len(classes[0]) == 2

    def test_constant_homotopy(self, delta21):
        f = identity(delta21)
        assert constant_homotopy(f).joins(f, f)
        assert homotopy_chain(f, f, 0) == []


class TestDeformation:
    def test_neighbours(self):
        assert neighbour(2, 1, 1) == 2
        assert neighbour(3, 2, 1) == 0
        assert neighbour(1, 0, 0) == 1

    def test_deformation_of_211(self):
        d = deformation(2, 1, 1)
        assert d.forward
        assert d.phi_in_horn()
        assert d.endpoints_hold()
        assert d.verified()

    @pytest.mark.slow
    def test_deformation_of_432(self):
        assert deformation(4, 3, 2).verified()

    def test_backward_deformation(self):
        d = deformation(3, 2, 1)
        assert not d.forward
        assert d.verified()

    def test_non_admissible(self):
        with pytest.raises(NotAdmissible):
            deformation(2, 1, 0)

    @pytest.mark.parametrize("n, k, l", [(1, 0, 0), (2, 1, 1), (2, 2, 0), (3, 2, 1)])
    def test_certified(self, n, k, l):
        result = certify_horn(n, k, l)
        assert result
        assert result.inverse is not None


class TestEquivalences:
    def test_admissible_horn_inclusion(self, horn211, delta21):
        assert is_elementary_homotopy_equivalence(inclusion(horn211, delta21), depth=1)

    @pytest.mark.slow
    def test_non_admissible_horn_inclusion(self, delta21):
        result = is_elementary_homotopy_equivalence(inclusion(horn(2, 1, 0), delta21))
        assert not result
        assert result.inverse is None


class TestNormality:
    @pytest.mark.parametrize("n, k, size", [(2, 0, 1), (2, 1, 2), (1, 2, 2)])
    def test_aut_group(self, n, k, size):
        assert len(aut_group(n, k)) == size

    def test_representables_are_normal(self, delta21, delta01):
        assert is_normal(delta21) and is_normal(delta01)

    def test_terminal_is_not_normal(self, terminal_object):
        assert not is_normal(terminal_object)
        assert set(fixed_cells(terminal_object)) == {"fix", "edge"}

    def test_boundary_inclusion_is_normal(self, boundary21, delta21):
        assert is_normal_mono(inclusion(boundary21, delta21))


class TestFillers:
    def test_terminal_fills_every_horn(self, terminal_object):
        report = horn_filling_report(terminal_object, 2)
        assert list(report.columns) == ["horn", "maps", "unfilled"]
        assert (report["maps"] == 1).all()
        assert (report["unfilled"] == 0).all()

    def test_representable_fills_its_own_horn(self, delta21):
        results = horn_fillers(delta21, 2, 1, 1)
        assert results
        assert any(filler is not None for _, filler in results)
