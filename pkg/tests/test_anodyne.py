import pytest

from anodyne.derivation import (
    DerivationNode,
    derivation_document,
    derive_generator,
    derive_horn,
    replay_derivation,
    verify_generator_membership,
)
from anodyne.filtration import attached_cell, build_filtration, generator_class, verify_filtration, verify_stage
from anodyne.retract import proof_case, retract_witness
from exceptions import IndexOutOfRange, InvalidDocument, NotAdmissible
from presheaf.constructions import is_sub


class TestFiltration:
    def test_stages_of_21(self):
        filtration = build_filtration(2, 1)
        assert len(filtration.stages) == 4
        assert filtration.order == [0, 1, 2]
        assert filtration.is_increasing()
        assert filtration.is_complete()

    def test_first_stage_is_the_generator_source(self):
        filtration = build_filtration(2, 1)
        start, _ = generator_class(2, 1, 1)
        assert filtration.stage(-1) == start
        assert is_sub(start, filtration.bundle.total)

    def test_level_zero_attaches_in_reverse(self):
        filtration = build_filtration(1, 0, eps=0)
        assert filtration.order == [1, 0]
        assert filtration.is_complete()

    def test_attached_cells_are_top_chains(self):
        filtration = build_filtration(2, 1)
        degrees = {filtration.bundle.total.degree(attached_cell(2, 1, i)).n for i in range(3)}
        assert degrees == {3}

    def test_free_stage_attaches_along_an_admissible_horn(self):
        report = verify_stage(build_filtration(2, 2), 0)
        assert report.horn == (3, 3, 1)
        assert report.admissible
        assert report.ok, report.notes

    @pytest.mark.parametrize("n, k", [(1, 0), (1, 1), (2, 1)])
    def test_every_stage_is_a_pushout(self, n, k):
        reports = verify_filtration(build_filtration(n, k))
        assert all(report.ok for report in reports), [r.notes for r in reports]

    @pytest.mark.parametrize("n, k", [(1, 0), (1, 2), (2, 0), (2, 3)])
    def test_boundary_degrees_build_the_classical_filtration(self, n, k):
        filtration = build_filtration(n, k)
        assert filtration.classical
        assert filtration.is_increasing()
        assert filtration.is_complete()

    def test_mixed_degrees_are_not_classical(self):
        assert not build_filtration(2, 1).classical

    @pytest.mark.parametrize("n, k", [(1, 3), (1, -1), (-1, 0)])
    def test_bad_degree(self, n, k):
        with pytest.raises(IndexOutOfRange):
            build_filtration(n, k)


class TestRetracts:
    @pytest.mark.parametrize(
        "n, k, l, case",
        [(3, 2, 1, "a"), (3, 1, 2, "b"), (2, 2, 0, "c"), (2, 0, 2, "top")],
    )
    def test_proof_case(self, n, k, l, case):
        assert proof_case(n, k, l)[0] == case

    @pytest.mark.parametrize("n, k, l", [(3, 2, 1), (3, 1, 2), (2, 2, 0), (2, 1, 1)])
    def test_witness(self, n, k, l):
        witness = retract_witness(n, k, l)
        assert witness.ok
        assert witness.retracts()
        assert witness.case == proof_case(n, k, l)[0]

    def test_non_admissible(self):
        with pytest.raises(NotAdmissible):
            retract_witness(2, 1, 0)


class TestDerivation:
    def test_horn_derivation(self):
        node = derive_horn(2, 1, 1)
        assert node.kind == "retract"
        assert node.depth() == 2
        assert node.all_passed()
        assert replay_derivation(node) == []

    def test_generator_leaves(self):
        node = derive_generator(1, 1, 1)
        assert [leaf.kind for leaf in node.children] == ["pushout", "pushout"]
        assert node.depth() == 1

    def test_document_round_trip(self):
        node = derive_horn(1, 0, 0)
        doc = derivation_document([node])
        restored = DerivationNode.from_dict(doc["derivations"][0])
        assert restored == node
        assert replay_derivation(restored) == []

    def test_tampered_derivation(self):
        node = derive_horn(1, 0, 0)
        node.detail["threshold"] = 99
        assert replay_derivation(node)

    def test_malformed_node(self):
        with pytest.raises(InvalidDocument):
            DerivationNode.from_dict({"kind": "retract"})

    def test_membership_in_small_dimensions(self):
        report = verify_generator_membership(max_horn_n=2, max_generator_n=1)
        assert all(node.all_passed() for node in report.horns)
        assert len(report.horns) == 14
        assert len(report.generators) == 2 * (2 + 3)
