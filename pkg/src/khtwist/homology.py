"""Exact homology ranks, bracket reconstruction, and the state-sum oracle.

The bracket of a diagram is reconstructed from homology as

    <D> = sum over (j, k) of i**j * rank H[j, k] * A**k

with Gaussian-integer coefficients, and independently as the enhanced state
sum  <D> = sum over enhanced states S of i**sigma(S) * A**J(S).  The two
computations share no code path beyond the diagram itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .diagram import Diagram, smoothing_pairs
from .errors import CapExceeded
from .linalg import SparseIntMatrix, matrix_rank, smith_normal_form
from .states import ChainComplex

DEFAULT_STATESUM_CAP = 20


@dataclass(frozen=True)
class GaussianInt:
    """Exact Gaussian integer a + b*i."""

    re: int = 0
    im: int = 0

    @staticmethod
    def i_power(j: int) -> "GaussianInt":
        return ((GaussianInt(1), GaussianInt(0, 1), GaussianInt(-1), GaussianInt(0, -1))[j % 4])

    def __add__(self, other: "GaussianInt") -> "GaussianInt":
        return GaussianInt(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussianInt") -> "GaussianInt":
        return GaussianInt(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "GaussianInt":
        return GaussianInt(-self.re, -self.im)

    def __mul__(self, other) -> "GaussianInt":
        if isinstance(other, int):
            return GaussianInt(self.re * other, self.im * other)
        return GaussianInt(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return bool(self.re or self.im)

    def times_i(self) -> "GaussianInt":
        return GaussianInt(-self.im, self.re)

    def conjugate(self) -> "GaussianInt":
        return GaussianInt(self.re, -self.im)

    @property
    def is_real(self) -> bool:
        return self.im == 0

    @property
    def is_imaginary(self) -> bool:
        return self.re == 0

    def pure_magnitude(self) -> int:
        """|a| for a purely real or purely imaginary value."""
        if self.re and self.im:
            raise ValueError(f"{self} has mixed phase")
        return abs(self.re) + abs(self.im)

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            if self.im == 1:
                return "i"
            if self.im == -1:
                return "-i"
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        mag = abs(self.im)
        tail = "i" if mag == 1 else f"{mag}i"
        return f"({self.re}{sign}{tail})"


ZERO = GaussianInt()


@dataclass(frozen=True)
class BracketPolynomial:
    """Laurent polynomial in A with Gaussian-integer coefficients."""

    terms: tuple[tuple[int, GaussianInt], ...]  # (degree, coefficient), degree descending

    @classmethod
    def from_dict(cls, coeffs: dict[int, GaussianInt]) -> "BracketPolynomial":
        items = tuple(sorted(((d, c) for d, c in coeffs.items() if c), reverse=True))
        return cls(items)

    def coefficients(self) -> dict[int, GaussianInt]:
        return dict(self.terms)

    def coefficient(self, degree: int) -> GaussianInt:
        for d, c in self.terms:
            if d == degree:
                return c
        return ZERO

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(d for d, _ in self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def k_max(self) -> int:
        if self.is_zero:
            raise ValueError("the zero polynomial has no degree span")
        return self.terms[0][0]

    @property
    def k_min(self) -> int:
        if self.is_zero:
            raise ValueError("the zero polynomial has no degree span")
        return self.terms[-1][0]

    def mirror(self) -> "BracketPolynomial":
        """Substitute A -> A**-1 (negate every exponent)."""
        return BracketPolynomial.from_dict({-d: c for d, c in self.terms})

    def conjugate(self) -> "BracketPolynomial":
        """Conjugate every coefficient (i -> -i).

        The bracket of a mirror image is the exponent-negated, conjugated
        bracket; for even crossing numbers the coefficients are real and the
        conjugation is invisible.
        """
        return BracketPolynomial.from_dict({d: c.conjugate() for d, c in self.terms})

    def __add__(self, other: "BracketPolynomial") -> "BracketPolynomial":
        acc = self.coefficients()
        for d, c in other.terms:
            acc[d] = acc.get(d, ZERO) + c
        return BracketPolynomial.from_dict(acc)

    def __sub__(self, other: "BracketPolynomial") -> "BracketPolynomial":
        acc = self.coefficients()
        for d, c in other.terms:
            acc[d] = acc.get(d, ZERO) - c
        return BracketPolynomial.from_dict(acc)

    def scaled(self, factor: GaussianInt, degree_shift: int = 0) -> "BracketPolynomial":
        return BracketPolynomial.from_dict({d + degree_shift: c * factor for d, c in self.terms})

    def phase_pure(self, n_crossings: int) -> bool:
        """All coefficients real for even n, imaginary for odd n."""
        if n_crossings % 2 == 0:
            return all(c.is_real for _, c in self.terms)
        return all(c.is_imaginary for _, c in self.terms)

    def to_json_pairs(self) -> list[list[int]]:
        return [[d, c.re, c.im] for d, c in self.terms]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for idx, (d, c) in enumerate(self.terms):
            if c.is_real:
                neg, mag = c.re < 0, abs(c.re)
                coeff = "" if mag == 1 else str(mag)
            elif c.is_imaginary:
                neg, mag = c.im < 0, abs(c.im)
                coeff = "i" if mag == 1 else f"{mag}i"
            else:
                neg, coeff = False, str(c)
            power = "" if d == 0 else ("A" if d == 1 else f"A^{d}")
            body = " ".join(x for x in (coeff, power) if x) or "1"
            if idx == 0:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append(("- " if neg else "+ ") + body)
        return " ".join(parts)


@dataclass(frozen=True)
class HomologyTable:
    """Ranks of H[j, k] (homological degree j, polynomial degree k)."""

    ranks: tuple[tuple[int, int, int], ...]  # (j, k, rank) with rank > 0, sorted
    n_crossings: int

    @classmethod
    def from_dict(cls, ranks: dict[tuple[int, int], int], n_crossings: int) -> "HomologyTable":
        items = tuple(sorted((j, k, r) for (j, k), r in ranks.items() if r))
        return cls(items, n_crossings)

    def rank(self, j: int, k: int) -> int:
        for jj, kk, r in self.ranks:
            if (jj, kk) == (j, k):
                return r
        return 0

    def as_dict(self) -> dict[tuple[int, int], int]:
        return {(j, k): r for j, k, r in self.ranks}

    @property
    def k_max(self) -> int:
        return max(k for _, k, _ in self.ranks)

    @property
    def k_min(self) -> int:
        return min(k for _, k, _ in self.ranks)

    def total_rank(self) -> int:
        return sum(r for _, _, r in self.ranks)

    def to_json(self) -> dict:
        return {"ranks": [[j, k, r] for j, k, r in self.ranks]}


def matrix_rank_exact(m: SparseIntMatrix) -> int:
    """Rank of an integer matrix over the rationals; see :mod:`khtwist.linalg`."""
    return matrix_rank(m)


def homology_table(c: ChainComplex) -> HomologyTable:
    """rank H[j, k] = dim C[j, k] - rank d[j, k] - rank d[j+2, k]."""
    rank_of: dict[tuple[int, int], int] = {}
    for bucket, mat in c.differentials.items():
        rank_of[bucket] = matrix_rank(mat)
    ranks: dict[tuple[int, int], int] = {}
    for (j, k), gens in c.generators.items():
        r = len(gens) - rank_of.get((j, k), 0) - rank_of.get((j + 2, k), 0)
        if r < 0:
            raise ArithmeticError(f"negative homology rank at {(j, k)}")  # pragma: no cover
        if r:
            ranks[(j, k)] = r
    return HomologyTable.from_dict(ranks, c.diagram.n)


def torsion_table(c: ChainComplex) -> dict[tuple[int, int], list[int]]:
    """Nontrivial invariant factors of the incoming differential per bucket.

    The torsion of H[j, k] is carried by the Smith normal form of
    d[j+2, k]; only factors larger than 1 are reported.
    """
    out: dict[tuple[int, int], list[int]] = {}
    for (j, k), mat in c.differentials.items():
        factors = [f for f in smith_normal_form(mat) if f > 1]
        if factors:
            out[(j - 2, k)] = factors
    return dict(sorted(out.items()))


def bracket_from_homology(h: HomologyTable) -> BracketPolynomial:
    """a_k = sum over j of i**j * rank H[j, k]."""
    acc: dict[int, GaussianInt] = {}
    for j, k, r in h.ranks:
        acc[k] = acc.get(k, ZERO) + GaussianInt.i_power(j) * r
    return BracketPolynomial.from_dict(acc)


def bracket_state_sum(d: Diagram, cap: int = DEFAULT_STATESUM_CAP) -> BracketPolynomial:
    """Enhanced state sum: sum of i**sigma(S) * A**J(S) over all enhanced states.

    The 2**|s| orientation choices of a state with |s| circles contribute
    binomially at J = sigma + 2*tau, which is what the inner loop adds up.
    """
    n = d.n
    if n > cap:
        raise CapExceeded(f"{n} crossings exceeds the state-sum cap {cap}")
    pair_table = [
        (smoothing_pairs(c, 0), smoothing_pairs(c, 1)) for c in d.crossings
    ]
    acc: dict[int, GaussianInt] = {}
    parent = list(range(2 * n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for s in range(1 << n):
        for a in range(2 * n + 1):
            parent[a] = a
        for i in range(n):
            for x, y in pair_table[i][(s >> i) & 1]:
                rx, ry = find(x), find(y)
                if rx != ry:
                    parent[rx] = ry
        circles = sum(1 for a in range(1, 2 * n + 1) if find(a) == a) + d.free_loops
        sigma = n - 2 * s.bit_count()
        phase = GaussianInt.i_power(sigma)
        for t in range(circles + 1):
            degree = sigma + 2 * (2 * t - circles)
            acc[degree] = acc.get(degree, ZERO) + phase * comb(circles, t)
    return BracketPolynomial.from_dict(acc)


def coefficient(b: BracketPolynomial, degree: int) -> GaussianInt:
    return b.coefficient(degree)


def framing_normalized(b: BracketPolynomial, writhe: int) -> BracketPolynomial:
    """Strip the framing dependence: multiply by (i * A**3) ** (-writhe).

    Diagrams of the same knot with different writhes then share one value
    (each kink contributes a factor of (i * A**3) ** (+-1) to the bracket).
    """
    return b.scaled(GaussianInt.i_power(-writhe), -3 * writhe)


def pure_difference_magnitude(a: GaussianInt, b: GaussianInt) -> int:
    """|a - b| for two same-phase Gaussian integers, as a nonnegative integer."""
    if (a.re and b.im) or (a.im and b.re):
        raise ValueError(f"{a} and {b} do not share a phase")
    return (a - b).pure_magnitude()


def step4_progression(b: BracketPolynomial) -> bool:
    """Support is contained in an arithmetic progression of step 4 anchored at k_max."""
    if b.is_zero:
        return True
    return all((b.k_max - d) % 4 == 0 for d in b.support)


def table_and_bracket_json(h: HomologyTable, b: BracketPolynomial) -> dict:
    return {"ranks": [[j, k, r] for j, k, r in h.ranks], "bracket": b.to_json_pairs()}
