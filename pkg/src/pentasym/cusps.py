"""Face cycles and cusp monodromy of closed facet-pairing triangulations.

Each 2-face of a 4-simplex is named by its omitted vertex pair {i, j}; from
a face one can exit through facet i or facet j, landing on a 2-face of the
partner simplex.  Following exits traces face cycles; the cycle length h
and the return permutation r_c on the three retained vertices determine the
mapping class of the corresponding flat cusp section and an exact upper
bound for the volume of its horospherical neighbourhood.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .volumes import ExactVolume, max_section_volume


State = tuple[int, tuple[int, int], int]  # (simplex, omitted pair, exit facet)


@dataclass(frozen=True)
class FaceCycle:
    """One face cycle, reported from its smallest directed state.

    ``states`` lists the h directed states in traversal order starting at
    ``base``; a state records a 2-face (simplex id plus omitted vertex pair)
    together with the facet the traversal exits through.  ``return_map`` is
    the permutation induced on the three retained vertices of the base face
    after a full traversal, stored as sorted (vertex, image) pairs.
    """

    base: State
    states: tuple[State, ...]
    return_map: tuple[tuple[int, int], ...]

    @property
    def length(self) -> int:
        return len(self.states)

    @property
    def slots(self) -> tuple[tuple[int, tuple[int, int]], ...]:
        """The cyclic sequence of (simplex id, omitted vertex pair)."""
        return tuple((k, pair) for (k, pair, _) in self.states)

    @property
    def retained_vertices(self) -> tuple[int, int, int]:
        k, (i, j), _ = self.base
        return tuple(v for v in range(1, 6) if v not in (i, j))


def _step(t, state: State) -> State:
    k, (i, j), e = state
    other = j if e == i else i
    partner = t.partner(k, e)
    if partner is None:
        raise ValueError(f"free facet {(k, e)} interrupts the face cycle")
    l, jq, vmap = partner
    pair = tuple(sorted((jq, vmap[other])))
    return (l, pair, vmap[other])


def face_cycles(t) -> list[FaceCycle]:
    """All face cycles of a closed triangulation, one per reversal pair.

    Every 2-face gives two directed states (one per exit facet); reversing
    a cycle's direction yields a distinct cycle (a cycle is never its own
    reverse, since that would need some state to exit through the facet it
    entered from), so cycles come in reverse pairs and only the member
    containing the smaller base state is reported.  The reported lengths sum
    to ten times the simplex count: each 2-face lies on exactly one cycle.
    """
    if not t.is_closed:
        raise ValueError("face cycles require a closed triangulation")
    all_states: list[State] = []
    for k in t.simplices:
        for i, j in combinations(range(1, 6), 2):
            all_states.append((k, (i, j), i))
            all_states.append((k, (i, j), j))

    seen: set[State] = set()
    cycles: list[FaceCycle] = []
    for start in sorted(all_states):
        if start in seen:
            continue
        states = []
        cur = start
        while cur not in seen:
            seen.add(cur)
            states.append(cur)
            cur = _step(t, cur)
        if cur != start:
            raise AssertionError("face traversal produced a tail, not a cycle")

        reverse = set()
        for (k, (i, j), e) in states:
            reverse.add((k, (i, j), j if e == i else i))
        if reverse & set(states):
            raise AssertionError("a face cycle met its own reverse")
        seen |= reverse

        kept = tuple(v for v in range(1, 6) if v not in start[1])
        perm = {v: v for v in kept}
        k, (i, j), e = start
        for _ in states:
            other = j if e == i else i
            l, jq, vmap = t.partner(k, e)
            perm = {v: vmap[w] for v, w in perm.items()}
            k, (i, j), e = (l, tuple(sorted((jq, vmap[other]))), vmap[other])
        cycles.append(
            FaceCycle(start, tuple(states), tuple(sorted(perm.items())))
        )

    total = sum(c.length for c in cycles)
    if total != 10 * t.simplex_count:
        raise AssertionError("face cycles do not partition the 2-faces")
    return cycles


def return_map(c: FaceCycle) -> tuple[tuple[int, int], ...]:
    """The return permutation of a cycle, as sorted (vertex, image) pairs."""
    return c.return_map


def permutation_parity(pairs) -> int:
    """0 for an even permutation (given as (v, image) pairs), 1 for odd."""
    items = dict(pairs)
    seen = set()
    parity = 0
    for v in items:
        if v in seen:
            continue
        length = 0
        w = v
        while w not in seen:
            seen.add(w)
            w = items[w]
            length += 1
        parity ^= (length - 1) & 1
    return parity


def cycle_notation(pairs) -> str:
    """Cycle notation for a permutation given as (v, image) pairs."""
    items = dict(pairs)
    seen = set()
    out = []
    for v in sorted(items):
        if v in seen or items[v] == v:
            seen.add(v)
            continue
        cyc = [v]
        seen.add(v)
        w = items[v]
        while w != v:
            cyc.append(w)
            seen.add(w)
            w = items[w]
        out.append("(" + " ".join(str(x) for x in cyc) + ")")
    return "".join(out) if out else "id"


MAPPING_CLASSES = ("identity", "P", "tau", "P*tau")

_CLASS_BY_PARITIES = {
    (0, 0): "identity",
    (0, 1): "P*tau",
    (1, 0): "P",
    (1, 1): "tau",
}


def monodromy_parts(h: int, rmap) -> tuple[int, str]:
    """P-exponent and mapping class determined by a length and return map.

    The P-exponent is sign(h) + sign(r_c) mod 2, where sign(h) is 0 for
    even h and 1 for odd h, and sign(r_c) is the parity of the return
    permutation; the mapping class only remembers the P-exponent and the
    parity of the rotation part.
    """
    parity = permutation_parity(rmap)
    p_exp = ((h % 2) + parity) % 2
    return p_exp, _CLASS_BY_PARITIES[(h % 2, parity)]


@dataclass(frozen=True)
class CuspDescriptor:
    """Everything the rigidity analysis needs about one cusp.

    ``monodromy`` is the pair (P-exponent mod 2, rotation part as a
    permutation of the retained vertices); ``base_slot`` tags the basepoint
    the rotation was computed from (the permutation is basepoint-dependent,
    its parity is not).
    """

    base_slot: State
    h: int
    monodromy: tuple[int, tuple[tuple[int, int], ...]]
    rotation_parity: str  # "even" | "odd"
    mapping_class: str
    max_section_volume: ExactVolume

    def report_line(self) -> str:
        p_exp, rot = self.monodromy
        rot_str = cycle_notation(rot)
        return (
            f"cycle h={self.h} r_c={rot_str} "
            f"monodromy=(P^{p_exp}, {rot_str}) "
            f"maxvol={self.max_section_volume}"
        )


def monodromy(c: FaceCycle) -> CuspDescriptor:
    """The cusp descriptor of one face cycle."""
    p_exp, cls = monodromy_parts(c.length, c.return_map)
    parity = "even" if permutation_parity(c.return_map) == 0 else "odd"
    return CuspDescriptor(
        base_slot=c.base,
        h=c.length,
        monodromy=(p_exp, c.return_map),
        rotation_parity=parity,
        mapping_class=cls,
        max_section_volume=max_section_volume(c.length),
    )


def cusp_descriptors(t) -> list[CuspDescriptor]:
    """One descriptor per face cycle of a closed triangulation."""
    return [monodromy(c) for c in face_cycles(t)]
