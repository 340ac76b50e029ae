"""Tests for facet-pairing triangulations: validation, serialization,
orientability, automorphisms, and the rigid building blocks."""

import pytest

from oracles import brute_force_tri_automorphisms
from pentasym import (
    CapExceededError,
    LabeledDigraph,
    NonOrientableWitness,
    OrientationAssignment,
    Pairing,
    ParseError,
    Triangulation,
    action_is_free,
    automorphism_group,
    cubic_graphs,
    cyclic_group,
    delete_edge,
    double_of_simplex,
    edge_complex,
    edge_complex_chain,
    graph_complex,
    is_asymmetric,
    isomorphisms_between,
    make_pairing,
    make_undirected,
    one_cusped_triangulation,
    orientability,
    orientation_preserving_subgroup,
    pairing_parity,
    pairing_sign,
    realize_group,
    realize_group_census,
    vertex_subcomplex,
)
from pentasym.triangulation import are_isomorphic, facet_vertices


def _disjoint_union(a: Triangulation, b: Triangulation) -> Triangulation:
    off = a.simplex_count
    pairings = list(a.pairings)
    for p in b.pairings:
        (k, i), (l, j) = p.side_a, p.side_b
        pairings.append(make_pairing((k + off, i), (l + off, j), p.as_dict()))
    frees = list(a.free_facets) + [(k + off, f) for (k, f) in b.free_facets]
    return Triangulation(off + b.simplex_count, tuple(pairings), tuple(frees))


def _relabel_two(t: Triangulation) -> Triangulation:
    """Swap simplex ids 0 and 1 of a two-simplex triangulation."""
    swap = {0: 1, 1: 0}
    pairings = tuple(
        make_pairing(
            (swap[p.side_a[0]], p.side_a[1]),
            (swap[p.side_b[0]], p.side_b[1]),
            p.as_dict(),
        )
        for p in t.pairings
    )
    frees = tuple((swap[k], f) for (k, f) in t.free_facets)
    return Triangulation(2, pairings, frees)


FIXTURES = {
    "vertex": vertex_subcomplex,
    "edge": edge_complex,
    "double": double_of_simplex,
    "one_cusped": one_cusped_triangulation,
    "chain2": lambda: edge_complex_chain(2),
}


# ---------------------------------------------------------------------------
# pairings


def test_facet_vertices():
    assert facet_vertices(1) == (2, 3, 4, 5)
    assert facet_vertices(3) == (1, 2, 4, 5)


def test_pairing_validation():
    with pytest.raises(ValueError, match="1..5"):
        make_pairing((0, 0), (0, 1), {2: 2, 3: 3, 4: 4, 5: 5})
    with pytest.raises(ValueError, match="itself"):
        make_pairing((0, 1), (0, 1), {2: 2, 3: 3, 4: 4, 5: 5})
    with pytest.raises(ValueError, match="canonical"):
        Pairing((1, 1), (0, 1), (0, 0, 2, 3, 4, 5))
    with pytest.raises(ValueError, match="bijection"):
        make_pairing((0, 1), (0, 2), {2: 1, 3: 1, 4: 4, 5: 5})
    with pytest.raises(ValueError, match="unused"):
        Pairing((0, 1), (1, 1), (0, 9, 2, 3, 4, 5))


def test_make_pairing_canonicalizes():
    vmap = {1: 4, 2: 2, 3: 3, 5: 1}  # facet 4 of simplex 1 -> facet 5 of 0
    p = make_pairing((1, 4), (0, 5), vmap)
    assert p.side_a == (0, 5)
    assert p.side_b == (1, 4)
    assert p.as_dict() == {1: 5, 2: 2, 3: 3, 4: 1}
    assert p.inverse_dict() == vmap
    assert p.sides() == ((0, 5), (1, 4))


# ---------------------------------------------------------------------------
# triangulation validation and queries


def test_every_facet_exactly_once():
    ident = {v: v for v in (2, 3, 4, 5)}
    p = make_pairing((0, 1), (1, 1), ident)
    with pytest.raises(ValueError, match="paired or declared free"):
        Triangulation(2, (p,), ())
    with pytest.raises(ValueError, match="used twice"):
        Triangulation(
            2,
            (p, make_pairing((0, 1), (1, 2), {2: 1, 3: 3, 4: 4, 5: 5})),
            (),
        )
    with pytest.raises(ValueError, match="both paired and free"):
        frees = tuple(
            (k, f) for k in (0, 1) for f in (1, 2, 3, 4, 5) if (k, f) != (1, 2)
        )
        Triangulation(2, (p,), frees + ((0, 1),))


def test_simplex_ids_and_free_facets_validated():
    ident = {v: v for v in (2, 3, 4, 5)}
    with pytest.raises(ValueError, match="out of range"):
        Triangulation(1, (make_pairing((0, 1), (3, 1), ident),), ())
    with pytest.raises(ValueError, match="bad free"):
        Triangulation(1, (), ((0, 7),) + tuple((0, f) for f in (1, 2, 3, 4)))
    with pytest.raises(ValueError, match="at least one"):
        Triangulation(0, (), ())


def test_queries():
    t = edge_complex()
    assert list(t.simplices) == [0, 1]
    assert not t.is_closed
    assert one_cusped_triangulation().is_closed
    l, j, vmap = t.partner(0, 2)
    assert (l, j) == (0, 3)
    assert vmap == {1: 4, 3: 2, 4: 5, 5: 1}
    back = t.partner(0, 3)
    assert back[:2] == (0, 2)
    assert back[2] == {v: k for k, v in vmap.items()}
    assert t.partner(1, 4) is None
    assert t.is_free(1, 4) and t.is_free(1, 5)
    assert not t.is_free(0, 1)
    assert t.self_pairing_count(0) == 2
    assert t.self_pairing_count(1) == 1
    assert t.free_count(1) == 2
    assert t.components() == [(0, 1)]


def test_components_of_disjoint_union():
    u = _disjoint_union(edge_complex(), vertex_subcomplex())
    assert u.components() == [(0, 1), (2,)]


# ---------------------------------------------------------------------------
# serialization


def test_text_roundtrip_bit_exact():
    for name, build in FIXTURES.items():
        t = build()
        text = t.to_text()
        back = Triangulation.from_text(text)
        assert back.to_text() == text, name
        # same content up to pairing order (to_text sorts the pairings)
        assert set(back.pairings) == set(t.pairings), name
        assert back.free_facets == t.free_facets, name
        assert back.simplex_count == t.simplex_count, name


def test_text_accepts_comments_and_blanks():
    text = "# a comment\nsimplices 1\n\n0 5 0 1 : 5 3 4 2\nfree\n0 2\n0 3\n0 4\n"
    t = Triangulation.from_text(text)
    assert t == vertex_subcomplex()


def test_text_parse_errors_carry_line_numbers():
    with pytest.raises(ParseError) as err:
        Triangulation.from_text("simplices 2\n0 1 1 1 : 2 3 4\n")
    assert "line 2" in str(err.value)
    with pytest.raises(ParseError) as err:
        Triangulation.from_text("simplices x\n")
    assert "line 1" in str(err.value)
    with pytest.raises(ParseError, match="':'"):
        Triangulation.from_text("simplices 2\n0 1 1 1 2 3 4 5\n")
    with pytest.raises(ParseError, match="missing"):
        Triangulation.from_text("0 1 1 1 : 2 3 4 5\n")
    with pytest.raises(ParseError, match="free facet"):
        Triangulation.from_text("simplices 1\nfree\n0\n")


# ---------------------------------------------------------------------------
# orientations


def _cycle_sign(dom, images) -> int:
    """Permutation sign by cycle decomposition (independent of the package)."""
    cod = sorted(images)
    perm = {i: cod.index(img) for i, img in enumerate(images)}
    sign, seen = 1, set()
    for s in perm:
        if s in seen:
            continue
        length, w = 0, s
        while w not in seen:
            seen.add(w)
            w = perm[w]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def test_pairing_parity_against_cycle_decomposition():
    for build in FIXTURES.values():
        for p in build().pairings:
            dom = facet_vertices(p.side_a[1])
            images = [p.fmap[v] for v in dom]
            assert pairing_parity(p) == _cycle_sign(dom, images)


def test_orientable_fixtures_have_all_reversing_pairings():
    for name in ("vertex", "edge", "double", "chain2"):
        t = FIXTURES[name]()
        o = orientability(t)
        assert isinstance(o, OrientationAssignment), name
        for p in t.pairings:
            assert pairing_sign(t, p, o) == -1, (name, p)


def test_double_orientation_signs():
    o = orientability(double_of_simplex())
    assert isinstance(o, OrientationAssignment)
    assert o[0] * o[1] == -1  # identity gluings force opposite signs


def test_one_cusped_is_non_orientable():
    w = orientability(one_cusped_triangulation())
    assert isinstance(w, NonOrientableWitness)
    assert w.pairings
    t = one_cusped_triangulation()
    assert all(p in t.pairings for p in w.pairings)


def test_non_orientable_self_pairing_witness():
    # a self-pairing needs its single simplex to satisfy o_k * o_k = -1
    # whenever the pairing is intrinsically orientation-preserving; the odd
    # vertex map below on facets 2-3 is such a pairing
    p = make_pairing((0, 2), (0, 3), {1: 1, 3: 2, 4: 5, 5: 4})
    t = Triangulation(1, (p,), ((0, 1), (0, 4), (0, 5)))
    result = orientability(t)
    assert isinstance(result, NonOrientableWitness)
    assert result.pairings == (p,)


# ---------------------------------------------------------------------------
# automorphisms


def test_automorphism_groups_match_brute_force():
    for name, build in FIXTURES.items():
        t = build()
        got = {
            (phi.simplex_map, phi.vertex_maps) for phi in automorphism_group(t)
        }
        expected = set(brute_force_tri_automorphisms(t))
        assert got == expected, name


def test_automorphism_group_laws():
    group = automorphism_group(double_of_simplex())
    elems = set(group.elements)
    ident = group.identity()
    assert ident.is_identity
    for phi in group.elements[:20]:
        assert phi.inverse() in elems
        assert phi.compose(phi.inverse()) == ident
        for psi in group.elements[:10]:
            assert phi.compose(psi) in elems


def test_double_automorphism_group_order():
    # vertex permutations applied to both simplices, times the swap
    assert automorphism_group(double_of_simplex()).order == 240


def test_rigid_fixtures_have_trivial_automorphisms():
    assert automorphism_group(edge_complex()).order == 1
    for n in (2, 3):
        assert automorphism_group(edge_complex_chain(n)).order == 1


def test_flag_permutation_is_faithful():
    group = automorphism_group(double_of_simplex())
    flags = {tuple(phi.flag_permutation()) for phi in group}
    assert len(flags) == group.order
    abstract = group.to_permutation_group()
    assert abstract.order == 240


def test_chain_one_equals_edge_complex():
    assert edge_complex_chain(1).to_text() == edge_complex().to_text()


def test_isomorphisms_to_relabelled_copy():
    t = edge_complex()
    s = _relabel_two(t)
    maps = isomorphisms_between(t, s)
    assert len(maps) == 1
    assert maps[0].simplex_map == (1, 0)
    assert are_isomorphic(t, s)
    assert not are_isomorphic(t, vertex_subcomplex())
    assert not are_isomorphic(t, double_of_simplex())


def test_disjoint_union_automorphisms():
    e = edge_complex()
    two = _disjoint_union(e, e)
    assert automorphism_group(two).order == 2  # the swap of the two copies
    v = vertex_subcomplex()
    mixed = _disjoint_union(e, v)
    assert (
        automorphism_group(mixed).order
        == automorphism_group(e).order * automorphism_group(v).order
    )


def test_automorphism_cap():
    with pytest.raises(CapExceededError):
        automorphism_group(edge_complex(), cap=1)


# ---------------------------------------------------------------------------
# orientation character and freeness


def test_orientation_preserving_subgroup_of_double():
    t = double_of_simplex()
    o = orientability(t)
    auts = automorphism_group(t)
    plus = orientation_preserving_subgroup(t, o, auts)
    assert plus.order == 120  # index two
    elems = set(plus.elements)
    for a in plus.elements[:10]:
        for b in plus.elements[:10]:
            assert a.compose(b) in elems
    with pytest.raises(ValueError, match="orientable"):
        orientation_preserving_subgroup(
            t, orientability(one_cusped_triangulation()), auts
        )


def test_action_is_free():
    t = double_of_simplex()
    auts = automorphism_group(t)
    assert not action_is_free(t, auts)  # the swap exchanges a glued pair
    e = edge_complex()
    assert action_is_free(e, automorphism_group(e))  # only the identity


# ---------------------------------------------------------------------------
# building blocks


def test_edge_complex_contract():
    t = edge_complex()
    assert t.simplex_count == 2
    assert t.free_facets == ((1, 4), (1, 5))
    assert len(t.pairings) == 4


def test_edge_complex_chain_contract():
    for n in (1, 2, 3, 4, 5):
        t = edge_complex_chain(n)
        assert t.simplex_count == 2 * n
        assert t.free_facets == tuple(sorted(((1, 5), (2 * n - 1, 4))))
        assert isinstance(orientability(t), OrientationAssignment)
    with pytest.raises(ValueError):
        edge_complex_chain(0)


def test_vertex_subcomplex_contract():
    t = vertex_subcomplex()
    assert t.simplex_count == 1
    assert t.free_facets == ((0, 2), (0, 3), (0, 4))
    assert t.self_pairing_count(0) == 1
    o = orientability(t)
    assert isinstance(o, OrientationAssignment)
    assert pairing_sign(t, t.pairings[0], o) == -1


def test_one_cusped_contract():
    t = one_cusped_triangulation()
    assert t.simplex_count == 2
    assert t.is_closed
    assert len(t.pairings) == 5
    assert all(p.side_a[1] == p.side_b[1] for p in t.pairings)


# ---------------------------------------------------------------------------
# graph complexes and the group builders


def test_graph_complex_on_k4_minus_edge():
    pruned = delete_edge(cubic_graphs(4)[0])
    t = graph_complex(pruned)
    assert t.simplex_count == 14  # 4 vertex blocks + 5 edge blocks of 2
    assert len(t.free_facets) == 2
    assert all(f == 4 for (_, f) in t.free_facets)
    assert isinstance(orientability(t), OrientationAssignment)
    assert automorphism_group(t).order == 1
    # rebuilding gives the identical triangulation
    assert graph_complex(pruned).to_text() == t.to_text()


def test_graph_complex_input_validation():
    directed = LabeledDigraph((0, 1), ((0, 1, "e"),), ("e",))
    with pytest.raises(ValueError, match="undirected"):
        graph_complex(directed)
    k4 = cubic_graphs(4)[0]
    with pytest.raises(ValueError, match="one edge deleted"):
        graph_complex(k4)  # still cubic everywhere
    square = make_undirected(
        (0, 1, 2, 3), [(0, 1, "e"), (1, 2, "e"), (2, 3, "e"), (0, 3, "e")], ("e",)
    )
    with pytest.raises(ValueError, match="one edge deleted"):
        graph_complex(square)


def test_realize_group_smallest_case():
    t = realize_group(cyclic_group(2))
    assert t.simplex_count == 64
    assert t.is_closed
    assert isinstance(orientability(t), OrientationAssignment)
    auts = automorphism_group(t)
    assert auts.order == 2
    assert action_is_free(t, auts)


def test_realize_group_needs_generators():
    from pentasym import FiniteGroup

    with pytest.raises(ValueError, match="generator"):
        realize_group(FiniteGroup(((0,),), ()))


def test_realize_group_census_validation():
    z2 = cyclic_group(2)
    pool = [g for g in cubic_graphs(12) if is_asymmetric(g)]
    with pytest.raises(ValueError, match="need exactly 5"):
        realize_group_census(z2, pool[:4])
    with pytest.raises(ValueError, match="isomorphic"):
        realize_group_census(z2, pool[:4] + [pool[0]])
    with pytest.raises(ValueError, match="nontrivial automorphism"):
        sym = next(g for g in cubic_graphs(12) if not is_asymmetric(g))
        realize_group_census(z2, pool[:4] + [sym])
    # vertex counts are checked before asymmetry, so any 14-vertex cubic
    # graph triggers the size mismatch
    ring = make_undirected(
        tuple(range(14)),
        [(i, (i + 1) % 14, "e") for i in range(14)]
        + [(i, i + 7, "e") for i in range(7)],
        ("e",),
    )
    with pytest.raises(ValueError, match="vertex count"):
        realize_group_census(z2, pool[:4] + [ring])
