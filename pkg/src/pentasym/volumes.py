"""Exact volumes of the building-block polytope and the manifolds built from it.

Volumes in this package are rational multiples of a single irrational unit
(``pi^2`` or ``sqrt3``), so they are carried exactly as a
:class:`fractions.Fraction` coefficient times a unit symbol.  The volume of
the building block is derived from the orbifold Euler characteristic of its
symmetry quotient rather than hard-coded.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

UNITS = {"pi^2": math.pi**2, "sqrt3": math.sqrt(3.0), "1": 1.0}

#: Hyperbolic volume of the regular ideal 3-simplex (twice the Lobachevsky
#: function at pi/6), to full double precision.
IDEAL_TETRAHEDRON_VOLUME = 1.0149416064096536


@dataclass(frozen=True)
class ExactVolume:
    """A volume of the form coefficient * unit, held exactly.

    ``unit`` is one of ``"pi^2"``, ``"sqrt3"``, ``"1"``.
    """

    coefficient: Fraction
    unit: str = "pi^2"

    def __post_init__(self):
        if self.unit not in UNITS:
            raise ValueError(f"unknown unit {self.unit!r}")
        if not isinstance(self.coefficient, Fraction):
            object.__setattr__(self, "coefficient", Fraction(self.coefficient))

    @property
    def value(self) -> float:
        return float(self.coefficient) * UNITS[self.unit]

    def scaled(self, k) -> "ExactVolume":
        return ExactVolume(self.coefficient * Fraction(k), self.unit)

    def __str__(self) -> str:
        if self.unit == "1" or self.coefficient == 0:
            head = str(self.coefficient)
        elif self.unit == "pi^2":
            head = f"{self.coefficient}*pi^2"
        else:
            head = f"{self.coefficient}*sqrt(3)"
        return f"{head} = {self.value:.15g}"

    def render(self) -> str:
        return str(self)


@dataclass(frozen=True)
class Stratum:
    """One symmetry stratum of the quotient orbifold.

    ``codimension`` is the codimension of the stratum in the 4-dimensional
    quotient, ``count`` the number of its cells, and ``stabilizer_order`` the
    order of the point stabilizer (``None`` for an infinite stabilizer, as on
    ideal-vertex links, which contributes zero to the Euler characteristic).
    """

    codimension: int
    count: int
    stabilizer_order: int | None


class StratumTable:
    """Cell-by-cell symmetry data of a quotient orbifold."""

    def __init__(self, strata: list[Stratum]):
        self.strata = tuple(strata)

    def euler_characteristic(self) -> Fraction:
        """1 for the top stratum plus signed weighted counts of the others."""
        chi = Fraction(1)
        for s in self.strata:
            if s.stabilizer_order is None:
                continue
            chi += Fraction((-1) ** s.codimension * s.count, s.stabilizer_order)
        return chi


#: Symmetry strata of the quotient of the building block by its full
#: symmetry group: mirror walls, two kinds of codimension-2 ridges, corner
#: edges, and the ideal vertices (infinite stabilizers).
BLOCK_QUOTIENT_STRATA = StratumTable(
    [
        Stratum(1, 10, 2),
        Stratum(2, 20, 4),
        Stratum(2, 10, 6),
        Stratum(3, 30, 12),
        Stratum(4, 10, None),
    ]
)

#: Volume of the ideal hyperbolic 24-cell, the double cover of the glued
#: pair of building blocks: 8*pi^2/3 by the Gauss-Bonnet value of its
#: Euler characteristic.
TWENTYFOUR_CELL_VOLUME = ExactVolume(Fraction(8, 3), "pi^2")


def rectified_simplex_volume() -> ExactVolume:
    """Volume of the ideal rectified 4-simplex, via an Euler characteristic.

    The symmetry quotient has orbifold Euler characteristic 1/6, computed
    from :data:`BLOCK_QUOTIENT_STRATA`; the polytope volume is half the
    24-cell volume times that characteristic, giving 2*pi^2/9.
    """
    chi = BLOCK_QUOTIENT_STRATA.euler_characteristic()
    return ExactVolume(Fraction(1, 2) * TWENTYFOUR_CELL_VOLUME.coefficient * chi, "pi^2")


def block_volume() -> ExactVolume:
    """Volume of one building block: six rectified-simplex pieces."""
    return rectified_simplex_volume().scaled(6)


def manifold_volume(simplex_count: int) -> ExactVolume:
    """Total volume of a manifold assembled from ``simplex_count`` blocks."""
    if simplex_count < 1:
        raise ValueError("need at least one simplex")
    return block_volume().scaled(simplex_count)


def volume_bound(n: int, m: int) -> ExactVolume:
    """Upper bound on the volume of the manifold built for a group of order
    n with m generators: at most 2nm + 50nm^2 blocks."""
    if n < 1 or m < 1:
        raise ValueError("need n >= 1 and m >= 1")
    simplices = 2 * n * m + 50 * n * m * m
    return ExactVolume(Fraction(4, 3) * simplices, "pi^2")


def max_section_volume(h: int) -> ExactVolume:
    """Largest volume of a horizontal cusp cross-section of combinatorial
    length h: (3h/2) * sqrt(3)."""
    if h < 1:
        raise ValueError("need h >= 1")
    return ExactVolume(Fraction(3 * h, 2), "sqrt3")


def block_to_tetrahedra_ratio() -> float:
    """Block volume divided by thirty ideal regular 3-simplex volumes."""
    return block_volume().value / (30 * IDEAL_TETRAHEDRON_VOLUME)


def twelve_tetrahedra() -> float:
    """Reference value 12 * (ideal regular 3-simplex volume)."""
    return 12 * IDEAL_TETRAHEDRON_VOLUME
