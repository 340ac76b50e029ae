"""Exact short-vector certificates for the rank-3 cusp lattices.

Everything here is exact: Gram matrices have rational entries, positive
definiteness is certified by leading principal minors, the enumeration
radius comes from a certified rational bracket around the smallest
eigenvalue, and the integrality conditions on candidate vectors are decided
by rational perfect-square tests.  Floating point appears only as a first
guess for the eigenvalue bracket and in the reporting helpers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import isqrt

from .errors import PentasymError

Rational = Fraction


# ---------------------------------------------------------------------------
# numbers of the form a + b*sqrt(3)


@dataclass(frozen=True)
class Sqrt3Number:
    """An element a + b*sqrt(3) of the quadratic field Q(sqrt 3)."""

    a: Fraction
    b: Fraction

    @classmethod
    def of(cls, a=0, b=0) -> "Sqrt3Number":
        return cls(Fraction(a), Fraction(b))

    def __add__(self, other: "Sqrt3Number") -> "Sqrt3Number":
        return Sqrt3Number(self.a + other.a, self.b + other.b)

    def __mul__(self, other: "Sqrt3Number") -> "Sqrt3Number":
        return Sqrt3Number(
            self.a * other.a + 3 * self.b * other.b,
            self.a * other.b + self.b * other.a,
        )

    @property
    def is_rational(self) -> bool:
        return self.b == 0


def gram_from_vectors(vectors) -> tuple[tuple[Fraction, ...], ...]:
    """Exact Gram matrix of vectors with Sqrt3Number coordinates.

    Raises if any inner product has a nonzero sqrt(3) part; the lattices
    handled here always have rational Gram matrices.
    """
    n = len(vectors)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = Sqrt3Number.of(0)
            for x, y in zip(vectors[i], vectors[j]):
                acc = acc + x * y
            if not acc.is_rational:
                raise PentasymError("Gram entry has an irrational part")
            row.append(acc.a)
        rows.append(tuple(row))
    return tuple(rows)


# ---------------------------------------------------------------------------
# quadratic forms


@dataclass(frozen=True)
class QuadForm3:
    """A positive definite symmetric 3x3 matrix with exact rational entries."""

    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        e = tuple(tuple(Fraction(x) for x in row) for row in self.entries)
        object.__setattr__(self, "entries", e)
        if len(e) != 3 or any(len(row) != 3 for row in e):
            raise ValueError("need a 3x3 matrix")
        for i in range(3):
            for j in range(3):
                if e[i][j] != e[j][i]:
                    raise ValueError("matrix must be symmetric")
        if any(m <= 0 for m in self.leading_minors()):
            raise ValueError("matrix is not positive definite")

    def leading_minors(self) -> tuple[Fraction, Fraction, Fraction]:
        e = self.entries
        m1 = e[0][0]
        m2 = e[0][0] * e[1][1] - e[0][1] * e[1][0]
        m3 = (
            e[0][0] * (e[1][1] * e[2][2] - e[1][2] * e[2][1])
            - e[0][1] * (e[1][0] * e[2][2] - e[1][2] * e[2][0])
            + e[0][2] * (e[1][0] * e[2][1] - e[1][1] * e[2][0])
        )
        return (m1, m2, m3)

    def pairing(self, u: tuple[int, int, int], w: tuple[int, int, int]) -> Fraction:
        e = self.entries
        return sum(
            Fraction(u[i]) * e[i][j] * w[j] for i in range(3) for j in range(3)
        )

    def apply(self, w: tuple[int, int, int]) -> Fraction:
        return self.pairing(w, w)

    def eigenvalues_float(self) -> list[float]:
        import numpy

        m = numpy.array([[float(x) for x in row] for row in self.entries])
        return [float(v) for v in numpy.linalg.eigvalsh(m)]


def q_matrix(n: int) -> QuadForm3:
    """Gram matrix of the cusp lattice basis for parameter n in {0, 1, 2}.

    Basis vectors are (0, sqrt3, 0), (3, 0, 0), (1/2 + n, sqrt3/2, 1); the
    (3,3) entry is their third vector's squared length n^2 + n + 2.
    """
    if n not in (0, 1, 2):
        raise ValueError("n must be 0, 1, or 2")
    h = Fraction(3, 2)
    return QuadForm3(
        (
            (Fraction(3), Fraction(0), h),
            (Fraction(0), Fraction(9), 3 * n + h),
            (h, 3 * n + h, Fraction(n * n + n + 2)),
        )
    )


def basis_vectors(n: int) -> tuple[tuple[Sqrt3Number, ...], ...]:
    """The three lattice generators as exact Q(sqrt3) coordinate triples."""
    if n not in (0, 1, 2):
        raise ValueError("n must be 0, 1, or 2")
    v1 = (Sqrt3Number.of(0), Sqrt3Number.of(0, 1), Sqrt3Number.of(0))
    v2 = (Sqrt3Number.of(3), Sqrt3Number.of(0), Sqrt3Number.of(0))
    v3 = (
        Sqrt3Number.of(Fraction(1, 2) + n),
        Sqrt3Number.of(0, Fraction(1, 2)),
        Sqrt3Number.of(1),
    )
    return (v1, v2, v3)


# ---------------------------------------------------------------------------
# certified enumeration radius


def _is_pd_shift(q: QuadForm3, shift: Fraction) -> bool:
    """Exact test that q - shift*I is positive definite."""
    e = q.entries
    a = [[e[i][j] - (shift if i == j else 0) for j in range(3)] for i in range(3)]
    m1 = a[0][0]
    if m1 <= 0:
        return False
    m2 = a[0][0] * a[1][1] - a[0][1] * a[1][0]
    if m2 <= 0:
        return False
    m3 = (
        a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
        - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
        + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
    )
    return m3 > 0


def _det_shift_is_zero(q: QuadForm3, shift: Fraction) -> bool:
    e = q.entries
    a = [[e[i][j] - (shift if i == j else 0) for j in range(3)] for i in range(3)]
    det = (
        a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
        - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
        + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
    )
    return det == 0


def _floor_sqrt_ratio(bound: Fraction, lam: Fraction) -> int:
    """floor(sqrt(bound / lam)) for positive rationals, exactly."""
    num = bound.numerator * lam.denominator
    den = bound.denominator * lam.numerator
    t = isqrt(num // den)
    while (t + 1) * (t + 1) * den <= num:
        t += 1
    while t * t * den > num:
        t -= 1
    return t


def _certified_radius(q: QuadForm3, bound: Fraction) -> int:
    """floor(sqrt(bound)/sqrt(lambda_min)) + 1 with an exact certificate.

    A rational bracket lo < lambda_min <= hi is certified by exact
    positive-definiteness tests of q - shift*I and narrowed by bisection
    until both ends give the same floor; the rare exact-floor boundary case
    is resolved by an exact determinant test.
    """
    guess = min(q.eigenvalues_float())
    lo = Fraction(guess).limit_denominator(10**9) * Fraction(9999, 10000)
    if lo <= 0:
        lo = Fraction(1, 10**9)
    while not _is_pd_shift(q, lo):
        lo /= 2
    hi = lo * 2
    while _is_pd_shift(q, hi):
        hi *= 2
    for _ in range(256):
        t_lo = _floor_sqrt_ratio(bound, lo)
        t_hi = _floor_sqrt_ratio(bound, hi)
        if t_lo == t_hi:
            return t_lo + 1
        mid = (lo + hi) / 2
        if _is_pd_shift(q, mid):
            lo = mid
        else:
            hi = mid
    # non-termination means the floor jumps exactly at lambda_min
    t = _floor_sqrt_ratio(bound, lo)
    if t >= 1 and _det_shift_is_zero(q, bound / (t * t)):
        return t + 1
    raise PentasymError("eigenvalue bracket failed to converge")


def search_radius(q: QuadForm3) -> int:
    """Enumeration cube radius floor(3/sqrt(lambda_min)) + 1."""
    return _certified_radius(q, Fraction(9))


# ---------------------------------------------------------------------------
# short vectors and the integrality filter


@dataclass(frozen=True)
class LatticeVector:
    """Integer coordinates in the fixed lattice basis plus exact length^2."""

    coords: tuple[int, int, int]
    length_sq: Fraction

    def __neg__(self) -> "LatticeVector":
        return LatticeVector(tuple(-c for c in self.coords), self.length_sq)


def short_vectors(q: QuadForm3, bound) -> list[LatticeVector]:
    """All nonzero integer triples w with w^T q w <= bound.

    Enumerates the closed cube [-R, R]^3 for the certified radius R and
    checks, as a soundness guard, that no solution touches the cube
    boundary (the radius formula guarantees interior solutions only).
    """
    bound = Fraction(bound)
    if bound <= 0:
        raise ValueError("bound must be positive")
    r = _certified_radius(q, bound)
    out = []
    for w in product(range(-r, r + 1), repeat=3):
        if w == (0, 0, 0):
            continue
        val = q.apply(w)
        if val <= bound:
            if any(abs(c) == r for c in w):
                raise PentasymError(f"solution {w} touches the enumeration boundary")
            out.append(LatticeVector(w, val))
    out.sort(key=lambda v: v.coords)
    return out


def _is_integer_square(x: Fraction) -> bool:
    """True when x is the square of an integer."""
    if x < 0 or x.denominator != 1:
        return False
    root = isqrt(x.numerator)
    return root * root == x.numerator


def condition_filter(vs) -> list[LatticeVector]:
    """Keep vectors of length at most 3 whose associated height is integral.

    For a vector of squared length L the height satisfies h^2 = 27 / L^3;
    the vector passes if h is an integer for it or for its 1/sqrt(3)
    rescaling (squared height 729 / L^3).  All tests are exact.
    """
    kept = []
    for v in vs:
        L = v.length_sq
        if L == 0 or L > 9:
            continue
        h_sq = Fraction(27) / (L**3)
        h_scaled_sq = Fraction(729) / (L**3)
        if _is_integer_square(h_sq) or _is_integer_square(h_scaled_sq):
            kept.append(v)
    return kept


# ---------------------------------------------------------------------------
# rigidity certificates


@dataclass(frozen=True)
class RigidityVerdict:
    """Outcome of one lattice rigidity check.

    ``pair_is_standard`` reports that the shortest orthogonal pair with
    squared-length ratio 3, among the vectors surviving all filters, is
    exactly {±(first basis vector), ±(second basis vector)}.
    """

    h: int
    rc_parity: str
    n: int
    form: QuadForm3
    filtered: tuple[LatticeVector, ...]
    pair_is_standard: bool
    translation_action: bool
    note: str | None = None


def is_translation_case(rc_parity: str) -> bool:
    """The cusp return map acts by plane translations iff its permutation
    part is even."""
    if rc_parity not in ("even", "odd"):
        raise ValueError("rc_parity must be 'even' or 'odd'")
    return rc_parity == "even"


def _case_form(h: int, rc_parity: str, n: int) -> tuple[QuadForm3, str | None]:
    if h not in (1, 2) or rc_parity not in ("even", "odd") or n not in (0, 1, 2):
        raise ValueError(f"invalid case (h={h}, rc_parity={rc_parity!r}, n={n})")
    if (h, rc_parity) == (1, "even"):
        return q_matrix(n), None
    v1, v2, _ = basis_vectors(n)
    if (h, rc_parity) == (2, "odd"):
        third = (Sqrt3Number.of(n), Sqrt3Number.of(0), Sqrt3Number.of(4))
        note = (
            "short-period non-translation case handled by the generic "
            "shortest-pair argument"
        )
    else:
        third = (Sqrt3Number.of(n), Sqrt3Number.of(0), Sqrt3Number.of(2))
        note = None
    return QuadForm3(gram_from_vectors((v1, v2, third))), note


def rigidity_case(h: int, rc_parity: str, n: int) -> RigidityVerdict:
    """Build the case lattice, enumerate, filter, and certify the verdict.

    The verdict is positive when the minimal-length orthogonal pair (u, w)
    with length(w)^2 = 3 * length(u)^2 drawn from the filtered vectors uses
    exactly u in {±(1,0,0)} and w in {±(0,1,0)}.
    """
    form, note = _case_form(h, rc_parity, n)
    filtered = condition_filter(short_vectors(form, 9))
    pairs = [
        (u, w)
        for u in filtered
        for w in filtered
        if form.pairing(u.coords, w.coords) == 0 and w.length_sq == 3 * u.length_sq
    ]
    ok = False
    if pairs:
        best = min((u.length_sq, w.length_sq) for (u, w) in pairs)
        winners = [(u, w) for (u, w) in pairs if (u.length_sq, w.length_sq) == best]
        firsts = {u.coords for (u, _) in winners}
        seconds = {w.coords for (_, w) in winners}
        ok = firsts == {(1, 0, 0), (-1, 0, 0)} and seconds == {(0, 1, 0), (0, -1, 0)}
    return RigidityVerdict(
        h=h,
        rc_parity=rc_parity,
        n=n,
        form=form,
        filtered=tuple(filtered),
        pair_is_standard=ok,
        translation_action=is_translation_case(rc_parity),
        note=note,
    )
