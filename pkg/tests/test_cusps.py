"""Tests for face cycles, return maps, and cusp monodromy."""

from fractions import Fraction
from itertools import permutations

import pytest

from pentasym import (
    MAPPING_CLASSES,
    cusp_descriptors,
    cycle_notation,
    cyclic_group,
    double_of_simplex,
    edge_complex,
    face_cycles,
    monodromy,
    monodromy_parts,
    one_cusped_triangulation,
    permutation_parity,
    realize_group,
    return_map,
)


def _walk(t, state):
    """Traverse the face cycle through ``state``; return (length, return map).

    Re-implements the traversal rule directly on ``partner`` lookups so the
    basepoint can be chosen freely.
    """
    k, (i, j), e = state
    kept = [v for v in range(1, 6) if v not in (i, j)]
    perm = {v: v for v in kept}
    cur = state
    h = 0
    while True:
        k, (i, j), e = cur
        other = j if e == i else i
        l, jq, vmap = t.partner(k, e)
        perm = {v: vmap[w] for v, w in perm.items()}
        cur = (l, tuple(sorted((jq, vmap[other]))), vmap[other])
        h += 1
        if cur == state:
            return h, tuple(sorted(perm.items()))


# ---------------------------------------------------------------------------
# face cycles


def test_one_cusped_has_single_cycle_of_length_twenty():
    cycles = face_cycles(one_cusped_triangulation())
    assert len(cycles) == 1
    c = cycles[0]
    assert c.length == 20
    assert c.states[0] == c.base
    assert len(set(c.slots)) == 20  # twenty distinct 2-faces
    assert return_map(c) == ((3, 3), (4, 4), (5, 5))
    assert c.retained_vertices == (3, 4, 5)


def test_one_cusped_identity_return_from_any_face():
    t = one_cusped_triangulation()
    # the face retaining vertices {1,2,3} (omitted pair {4,5}) in particular
    h, pairs = _walk(t, (0, (4, 5), 4))
    assert h == 20
    assert pairs == ((1, 1), (2, 2), (3, 3))
    # and every other start slot of the cycle gives an identity return
    for state in face_cycles(t)[0].states:
        h, pairs = _walk(t, state)
        assert h == 20
        assert all(v == w for (v, w) in pairs)


def test_double_cycles():
    cycles = face_cycles(double_of_simplex())
    assert len(cycles) == 10
    assert all(c.length == 2 for c in cycles)
    assert all(all(v == w for (v, w) in c.return_map) for c in cycles)


def test_face_cycles_partition_all_faces():
    for t in (one_cusped_triangulation(), double_of_simplex()):
        cycles = face_cycles(t)
        assert sum(c.length for c in cycles) == 10 * t.simplex_count
        seen = set()
        for c in cycles:
            for s in c.states:
                assert s not in seen
                seen.add(s)
        # each state's exit facet is one of its omitted vertices
        for c in cycles:
            for (k, (i, j), e) in c.states:
                assert e in (i, j)
                assert 0 <= k < t.simplex_count


def test_face_cycles_require_closed():
    with pytest.raises(ValueError, match="closed"):
        face_cycles(edge_complex())


def test_realized_manifold_cycle_budget():
    t = realize_group(cyclic_group(2))
    cycles = face_cycles(t)
    assert sum(c.length for c in cycles) == 10 * t.simplex_count


# ---------------------------------------------------------------------------
# parities and notation


def test_permutation_parity():
    assert permutation_parity(((3, 3), (4, 4), (5, 5))) == 0
    assert permutation_parity(((3, 4), (4, 3), (5, 5))) == 1
    assert permutation_parity(((3, 4), (4, 5), (5, 3))) == 0
    assert permutation_parity(((1, 2), (2, 1), (3, 4), (4, 3))) == 0


def test_cycle_notation():
    assert cycle_notation(((3, 3), (4, 4), (5, 5))) == "id"
    assert cycle_notation(((3, 4), (4, 3), (5, 5))) == "(3 4)"
    assert cycle_notation(((3, 4), (4, 5), (5, 3))) == "(3 4 5)"
    assert cycle_notation(((1, 2), (2, 1), (3, 4), (4, 3))) == "(1 2)(3 4)"


def test_return_parity_is_basepoint_independent():
    for t in (one_cusped_triangulation(), double_of_simplex()):
        for c in face_cycles(t):
            parities = set()
            for state in c.states:
                _, pairs = _walk(t, state)
                parities.add(permutation_parity(pairs))
            assert len(parities) == 1
            assert parities.pop() == permutation_parity(c.return_map)


# ---------------------------------------------------------------------------
# monodromy classification


def test_monodromy_parts_examples():
    ident = ((3, 3), (4, 4), (5, 5))
    swap = ((3, 4), (4, 3), (5, 5))
    rot = ((3, 4), (4, 5), (5, 3))
    assert monodromy_parts(20, ident) == (0, "identity")
    assert monodromy_parts(1, ident) == (1, "P")
    assert monodromy_parts(2, swap) == (1, "P*tau")
    assert monodromy_parts(3, rot) == (1, "P")
    assert monodromy_parts(3, swap) == (0, "tau")
    assert set(MAPPING_CLASSES) == {"identity", "P", "tau", "P*tau"}


def test_monodromy_parts_depend_only_on_parities():
    for h in range(1, 7):
        for images in permutations((3, 4, 5)):
            rmap = tuple(zip((3, 4, 5), images))
            p_exp, cls = monodromy_parts(h, rmap)
            parity = permutation_parity(rmap)
            assert p_exp == ((h % 2) + parity) % 2
            expected = {
                (0, 0): "identity",
                (0, 1): "P*tau",
                (1, 0): "P",
                (1, 1): "tau",
            }[(h % 2, parity)]
            assert cls == expected


def test_one_cusped_descriptor():
    t = one_cusped_triangulation()
    descs = cusp_descriptors(t)
    assert len(descs) == 1
    d = descs[0]
    assert d.h == 20
    assert d.monodromy[0] == 0
    assert d.rotation_parity == "even"
    assert d.mapping_class == "identity"
    assert d.max_section_volume.coefficient == Fraction(30)
    assert d.max_section_volume.unit == "sqrt3"
    assert d.report_line() == (
        "cycle h=20 r_c=id monodromy=(P^0, id) maxvol=30*sqrt(3) = 51.9615242270663"
    )


def test_double_descriptors():
    descs = cusp_descriptors(double_of_simplex())
    assert len(descs) == 10
    for d in descs:
        assert d.h == 2
        assert d.mapping_class == "identity"
        assert d.max_section_volume.coefficient == Fraction(3)
    # the total horospherical budget is (3/2) sqrt3 per slot, 10n slots
    total = sum(d.max_section_volume.coefficient for d in descs)
    assert total == Fraction(3, 2) * 10 * 2


def test_monodromy_matches_parts():
    for t in (one_cusped_triangulation(), double_of_simplex()):
        for c in face_cycles(t):
            d = monodromy(c)
            p_exp, cls = monodromy_parts(c.length, c.return_map)
            assert d.monodromy == (p_exp, c.return_map)
            assert d.mapping_class == cls
            assert d.base_slot == c.base
            assert d.h == c.length


def test_descriptor_multiset_is_automorphism_invariant():
    from pentasym import automorphism_group

    t = realize_group(cyclic_group(2))
    cycles = face_cycles(t)
    # directed state -> (length, parity) through reported cycles and reverses
    profile = {}
    for c in cycles:
        par = permutation_parity(c.return_map)
        for (k, (i, j), e) in c.states:
            profile[(k, (i, j), e)] = (c.length, par)
            profile[(k, (i, j), j if e == i else i)] = (c.length, par)
    for phi in automorphism_group(t):
        for c in cycles:
            k, (i, j), e = c.base
            sk = phi.vertex_maps[k]
            image = (
                phi.simplex_map[k],
                tuple(sorted((sk[i], sk[j]))),
                sk[e],
            )
            assert profile[image] == (c.length, permutation_parity(c.return_map))
