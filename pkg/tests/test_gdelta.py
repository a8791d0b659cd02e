import pytest
from hypothesis import assume, given, settings
import hypothesis.strategies as st

from exceptions import (
    IndexOutOfRange,
    InvalidCospan,
    IsovarianceViolation,
    NonCanonicalVertex,
    NotEpi,
    OrderViolation,
)
from gdelta.cospan import Cospan, chain_cospan, complete_cospan, factorizations
from gdelta.decompose import decompose, epi_mono
from gdelta.generators import codegeneracy, codegeneracy_from, coface, swap
from gdelta.gposets import (
    compose_gmaps,
    count_gposet_maps,
    fiber_product,
    identity_gmap,
    isov_product,
    make_gposet_map,
    product_universal_maps,
    to_gposet,
    to_gposet_map,
)
from gdelta.maps import GDeltaMap, compose, enumerate_hom, identity, make_map, sections
from gdelta.notation import format_mono, parse_mono
from gdelta.objects import E, S, SimplexObject, Vertex, leq, vertices
from gdelta.oracles import naive_hom, order_by_closure
from gdelta.relations import _agree, check_cosimplicial_relations, objects_up_to
from gdelta.thickening import Chain, level_inclusion, level_projection, th_map, thicken
from presheaf.constructions import representable


def objects(max_n=2):
    return st.integers(0, max_n).flatmap(
        lambda n: st.integers(0, n + 1).map(lambda k: SimplexObject(n, k))
    )


@st.composite
def morphisms(draw, max_n=2):
    src, tgt = draw(objects(max_n)), draw(objects(max_n))
    hom = enumerate_hom(src, tgt)
    assume(hom)
    return draw(st.sampled_from(hom))


@st.composite
def composable(draw, max_n=2):
    f = draw(morphisms(max_n))
    tgt = draw(objects(max_n))
    hom = enumerate_hom(f.tgt, tgt)
    assume(hom)
    return f, draw(st.sampled_from(hom))


@st.composite
def cospans(draw, max_n=3):
    """f . alpha = g . gamma built from a square x . u = y . w in the category."""
    base = draw(objects(max_n))
    u = draw(st.sampled_from([f for o in objects_up_to(max_n) for f in enumerate_hom(base, o)]))
    x = draw(st.sampled_from([f for o in objects_up_to(max_n) for f in enumerate_hom(u.tgt, o)]))
    beta = compose(x, u)
    w, y = draw(st.sampled_from(factorizations(beta, draw(objects(max_n))) or [(identity(base), beta)]))
    return chain_cospan(u, x, w, y, draw(st.integers(0, base.n + 1)))


class TestObjects:
    def test_vertices_without_free_pairs(self):
        assert vertices(SimplexObject(2, 0)) == [Vertex(0, E), Vertex(1, E), Vertex(2, E)]

    def test_vertices_all_free(self):
        assert vertices(SimplexObject(1, 2)) == [Vertex(0, E), Vertex(0, S), Vertex(1, E), Vertex(1, S)]

    def test_vertices_mixed(self):
        assert vertices(SimplexObject(2, 1)) == [Vertex(0, E), Vertex(0, S), Vertex(1, E), Vertex(2, E)]

    def test_leq_through_merged_vertex(self):
        assert leq(SimplexObject(2, 1), Vertex(0, S), Vertex(1, E))

    def test_leq_branches_incomparable_below_k(self):
        assert not leq(SimplexObject(2, 2), Vertex(0, S), Vertex(1, E))

    def test_leq_rejects_non_canonical(self):
        with pytest.raises(NonCanonicalVertex):
            leq(SimplexObject(2, 1), Vertex(1, S), Vertex(2, E))

    @pytest.mark.parametrize("obj", list(objects_up_to(3)), ids=str)
    def test_closed_form_matches_closure(self, obj):
        closed = {(u, v) for u in obj.vertices for v in obj.vertices if obj.leq(u, v)}
        assert closed == set(order_by_closure(obj))


class TestMaps:
    def test_identity_from_images(self):
        obj = SimplexObject(2, 1)
        assert make_map(obj, obj, [Vertex(0), Vertex(1), Vertex(2)]) == identity(obj)

    def test_coface_from_images(self):
        theta = make_map(SimplexObject(2, 1), SimplexObject(3, 1), [Vertex(0), Vertex(2), Vertex(3)])
        assert theta == coface(2, 1, 1, 0)

    def test_free_vertex_cannot_become_real(self):
        with pytest.raises(IsovarianceViolation):
            make_map(SimplexObject(2, 1), SimplexObject(1, 0), [Vertex(0), Vertex(0), Vertex(1)])

    def test_codegeneracy_after_coface(self):
        assert compose(codegeneracy(1, 1, 1, 0), coface(1, 1, 1, 0)) == identity(SimplexObject(1, 1))

    def test_swap_is_an_involution(self):
        sigma = swap(2, 1)
        assert compose(sigma, sigma) == identity(SimplexObject(2, 1))

    @pytest.mark.parametrize(
        "src, tgt, size",
        [((0, 1), (0, 1), 2), ((1, 0), (1, 0), 3), ((2, 1), (1, 0), 0)],
    )
    def test_hom_sizes(self, src, tgt, size):
        assert len(enumerate_hom(SimplexObject(*src), SimplexObject(*tgt))) == size

    def test_real_coface_needs_i_at_least_k(self):
        with pytest.raises(IndexOutOfRange):
            coface(2, 1, 0, 0)

    def test_free_codegeneracy(self):
        s = codegeneracy(3, 2, 0, 1)
        assert (s.src, s.tgt) == (SimplexObject(4, 3), SimplexObject(3, 2))

    def test_codegeneracy_cannot_merge_across_bands(self):
        with pytest.raises(IndexOutOfRange):
            codegeneracy_from(SimplexObject(3, 2), 1)

    @pytest.mark.parametrize("src", list(objects_up_to(2)), ids=str)
    @pytest.mark.parametrize("tgt", list(objects_up_to(2)), ids=str)
    def test_hom_matches_naive_oracle(self, src, tgt):
        assert set(enumerate_hom(src, tgt)) == set(naive_hom(src, tgt))

    @given(morphisms())
    @settings(max_examples=100, deadline=None)
    def test_identity_is_neutral(self, f):
        assert compose(identity(f.tgt), f) == f
        assert compose(f, identity(f.src)) == f

    @given(composable(), objects())
    @settings(max_examples=100, deadline=None)
    def test_composition_is_associative(self, pair, last):
        f, g = pair
        hom = enumerate_hom(g.tgt, last)
        assume(hom)
        h = hom[0]
        assert compose(h, compose(g, f)) == compose(compose(h, g), f)


class TestSections:
    def test_coface_is_mono_not_epi(self):
        d = coface(2, 1, 1, 0)
        assert d.is_mono() and not d.is_epi()

    def test_codegeneracy_sections(self):
        s = codegeneracy(0, 0, 0, 0)
        assert set(sections(s)) == {coface(0, 0, 0, 0), coface(0, 0, 1, 0)}

    def test_swap_section(self):
        sigma = swap(1, 1)
        assert sigma.is_mono() and sigma.is_epi()
        assert sections(sigma) == [sigma]

    def test_sections_need_an_epi(self):
        with pytest.raises(NotEpi):
            sections(coface(1, 0, 0, 0))


class TestDecompose:
    def test_identity(self):
        parts = decompose(identity(SimplexObject(2, 1)))
        assert (parts.g, parts.cofaces, parts.codegeneracies) == ("id", (), ())

    def test_constructed_composite(self):
        theta = compose(swap(3, 2), compose(coface(2, 2, 2, 0), codegeneracy(2, 2, 0, 1)))
        parts = decompose(theta)
        assert parts.sigma
        assert parts.recompose() == theta

    def test_every_map_between_32_and_21(self):
        for theta in enumerate_hom(SimplexObject(3, 2), SimplexObject(2, 1)):
            assert decompose(theta).recompose() == theta

    @given(morphisms())
    @settings(max_examples=200, deadline=None)
    def test_round_trip_and_canonical_order(self, theta):
        parts = decompose(theta)
        assert parts.recompose() == theta
        omitted = [d.missing_indices()[0] for d in parts.cofaces]
        assert omitted == sorted(set(omitted))

    @given(morphisms())
    @settings(max_examples=100, deadline=None)
    def test_epi_mono_factorization(self, theta):
        eta, mono = epi_mono(theta)
        assert eta.is_epi() and not eta.twisted and mono.is_mono()
        assert compose(mono, eta) == theta


class TestRelations:
    def test_all_instances_pass_up_to_three(self):
        report = check_cosimplicial_relations(3)
        assert report.passed, report.failures[:3]
        assert report.instances

    def test_every_generator_is_a_valid_map(self):
        report = check_cosimplicial_relations(2)
        generators = [inst for inst in report.instances if inst.family == "generator"]
        assert generators
        assert all(inst.passed for inst in generators)

    def test_maps_that_are_not_morphisms_never_agree(self):
        edge = SimplexObject(1, 0)
        flipped = GDeltaMap(edge, edge, (Vertex(1, E), Vertex(0, E)))
        assert not _agree(flipped, flipped)
        assert not _agree(None, None)
        assert _agree(identity(edge), make_map(edge, edge, [Vertex(0, E), Vertex(1, E)]))

    def test_swap_commutes_with_real_coface(self):
        d = coface(2, 1, 1, 0)
        assert compose(d, swap(2, 1)) == compose(swap(3, 1), d)

    def test_needs_positive_bound(self):
        with pytest.raises(IndexOutOfRange):
            check_cosimplicial_relations(0)


class TestPosets:
    def test_isovariant_product_of_free_edges(self):
        A = to_gposet(SimplexObject(1, 1))
        assert len(isov_product(A, A).elements) == 5

    def test_fixed_point_times_free_orbit_is_empty(self):
        assert isov_product(to_gposet(SimplexObject(0, 0)), to_gposet(SimplexObject(0, 1))).elements == ()

    def test_product_is_universal(self):
        A = to_gposet(SimplexObject(1, 1))
        f = identity_gmap(A)
        P, p1, p2 = fiber_product(f, f)
        assert len(P.elements) == len(A.elements)
        assert len(product_universal_maps(P, p1, p2, f, f)) == 1

    def test_to_gposet_map_preserves_hom_count(self):
        src, tgt = SimplexObject(1, 1), SimplexObject(2, 1)
        assert count_gposet_maps(to_gposet(src), to_gposet(tgt)) == len(enumerate_hom(src, tgt))

    def test_product_validates(self):
        A = to_gposet(SimplexObject(2, 1))
        isov_product(A, A).validate()

    def test_checked_map_rejects_order_reversal(self):
        edge = to_gposet(SimplexObject(1, 0))
        with pytest.raises(OrderViolation):
            make_gposet_map(edge, edge, {"0": "1", "1": "0"})

    def test_checked_map_rejects_isotropy_change(self):
        free, point = to_gposet(SimplexObject(0, 1)), to_gposet(SimplexObject(0, 0))
        with pytest.raises(IsovarianceViolation):
            make_gposet_map(free, point, {"0,e": "0", "0,s": "0"})


class TestThickening:
    def test_point_thickens_to_a_chain(self):
        th = thicken(SimplexObject(0, 0)).poset
        assert len(th.elements) == 2
        assert len(th.order) == 3

    def test_swap_commutes_with_level_projection(self):
        obj = SimplexObject(2, 1)
        sigma = swap(2, 1)
        lhs = compose_gmaps(level_projection(obj), th_map(sigma))
        rhs = compose_gmaps(to_gposet_map(sigma), level_projection(obj))
        assert lhs == rhs

    @given(composable())
    @settings(max_examples=100, deadline=None)
    def test_functorial(self, pair):
        f, g = pair
        assert th_map(compose(g, f)) == compose_gmaps(th_map(g), th_map(f))

    def test_identity(self):
        obj = SimplexObject(1, 1)
        assert th_map(identity(obj)) == identity_gmap(thicken(obj).poset)

    def test_chain_repeats_only_at_threshold(self):
        s = codegeneracy(0, 0, 0, 0)
        assert Chain(s, 1).is_injective()
        assert not Chain(s, 0).is_injective()


class TestCospans:
    def test_identity_cospan(self):
        base = SimplexObject(1, 1)
        ident = identity_gmap(thicken(base).poset)
        leg = level_inclusion(base, 0)
        completion = complete_cospan(Cospan(base, ident, ident, leg, leg))
        assert completion.phi == completion.psi

    def test_two_free_cofaces(self):
        d0, d1 = coface(2, 1, 0, 1), coface(2, 1, 1, 1)
        base = SimplexObject(1, 0)
        shift = make_map(base, SimplexObject(2, 1), [Vertex(1), Vertex(2)])
        leg = compose_gmaps(level_inclusion(SimplexObject(2, 1), 0), to_gposet_map(shift))
        cospan = Cospan(base, th_map(d0), th_map(d1), leg, leg)
        assert complete_cospan(cospan).commutes(cospan)

    def test_factorizations_include_the_trivial_one(self):
        beta = coface(1, 1, 1, 0)
        assert (identity(beta.src), beta) in factorizations(beta, beta.src)

    def test_legs_must_share_a_base(self):
        u = identity(SimplexObject(1, 0))
        w = identity(SimplexObject(0, 0))
        with pytest.raises(InvalidCospan):
            chain_cospan(u, u, w, w, 0)

    @given(cospans())
    @settings(max_examples=100, deadline=None)
    def test_sampled_cospans_complete(self, cospan):
        completion = complete_cospan(cospan)
        assert completion.commutes(cospan)
        assert completion.apex == thicken(cospan.base)


class TestNotation:
    def test_full_simplex(self):
        assert format_mono(identity(SimplexObject(2, 1))) == "⟨v0^c | v1^r v2^r⟩"

    def test_twisted_cell_is_marked(self):
        assert format_mono(swap(2, 1)).endswith("^σ")

    def test_round_trip_on_delta32(self):
        obj = SimplexObject(3, 2)
        for cell in representable(3, 2).cells:
            assert format_mono(parse_mono(cell, obj)) == cell
