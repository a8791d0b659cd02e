import pytest

from cylinder.bundle import cylinder, cylinder_inclusion, cylinder_map, verify_exactness
from cylinder.interval import injective_chains, interval_of_representable, top_census
from cylinder.unionfind import UnionFind
from exceptions import NonMono
from gdelta.generators import codegeneracy
from gdelta.objects import SimplexObject
from objects.standard import boundary, horn
from presheaf.constructions import is_sub, representable, yoneda_map
from presheaf.isosset import validate
from presheaf.maps import compose, identity, inclusion
from presheaf.search import isomorphic


def degrees(census):
    return {(d.n, d.k): count for d, count in census.items()}


class TestUnionFind:
    def test_union_and_find(self):
        classes = UnionFind(range(5))
        classes.union(0, 1)
        classes.union(3, 4)
        assert classes.find(1) == classes.find(0)
        assert classes.find(2) == 2
        assert len(classes.classes()) == 3

    def test_forced_root(self):
        classes = UnionFind()
        classes.union("a", "b", root="b")
        classes.union("c", "a", root="b")
        assert {classes.find(x) for x in "abc"} == {"b"}
        assert len(classes) == 3


class TestInterval:
    @pytest.mark.parametrize(
        "n, k, expected",
        [(2, 1, {(3, 1): 2, (3, 2): 1}), (1, 0, {(2, 0): 2}), (0, 0, {(1, 0): 1})],
    )
    def test_top_census(self, n, k, expected):
        assert degrees(top_census(interval_of_representable(n, k))) == expected

    def test_interval_validates(self):
        assert validate(interval_of_representable(2, 1)).ok

    def test_chains_are_injective(self):
        assert all(chain.is_injective() for chain in injective_chains(SimplexObject(1, 1)))

    @pytest.mark.parametrize("n, k", [(0, 0), (0, 1), (1, 0), (1, 1)])
    def test_cylinder_of_representable_is_the_interval(self, n, k):
        assert isomorphic(cylinder(representable(n, k)).total, interval_of_representable(n, k))


class TestCylinder:
    @pytest.mark.parametrize("n, k", [(0, 0), (1, 0), (1, 1), (2, 1)])
    def test_projection_splits_both_endpoints(self, n, k):
        bundle = cylinder(representable(n, k))
        assert bundle.sections_hold()
        assert bundle.endpoints_disjoint()
        assert validate(bundle.total).ok

    def test_free_point_gives_a_free_edge_pair(self, delta01):
        bundle = cylinder(delta01)
        assert degrees(top_census(bundle.total)) == {(1, 2): 1}
        assert bundle.d0.is_mono() and bundle.d1.is_mono()

    def test_empty(self, nothing):
        assert cylinder(nothing).total.is_empty()

    def test_identity_lifts_to_identity(self, delta21):
        assert cylinder_map(identity(delta21)) == identity(cylinder(delta21).total)

    def test_lift_commutes_with_endpoints(self, boundary21, delta21):
        iota = inclusion(boundary21, delta21)
        small, big = cylinder(boundary21), cylinder(delta21)
        lifted = cylinder_map(iota, small, big)
        for eps in (0, 1):
            assert compose(lifted, small.endpoint(eps)) == compose(big.endpoint(eps), iota)


class TestExactness:
    @pytest.mark.parametrize("sub, n, k", [(boundary(2, 1), 2, 1), (horn(3, 2, 1), 3, 2), (horn(2, 0, 0), 2, 0)])
    def test_endpoints_pull_back_to_the_subobject(self, sub, n, k):
        report = verify_exactness(inclusion(sub, representable(n, k)))
        assert report.ok
        assert set(report.to_frame().columns) == {"eps", "degree", "sub", "preimage", "holds"}

    def test_needs_a_mono(self):
        with pytest.raises(NonMono):
            verify_exactness(yoneda_map(codegeneracy(0, 0, 0, 0)))

    @pytest.mark.parametrize("eps", [0, 1])
    def test_partial_cylinder(self, horn211, delta21, eps):
        sub, iota = cylinder_inclusion(inclusion(horn211, delta21), eps)
        big = cylinder(delta21)
        assert is_sub(sub, big.total)
        assert set(big.endpoint(eps).image_cells()) <= set(sub.cells)
        assert len(sub) < len(big.total)
        assert iota.is_mono()
