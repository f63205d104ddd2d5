"""The calculus of homotopy types in the classes W and P.

W holds finite-type wedges of simply connected spheres, recorded by the
generating function of reduced homology ranks.  P holds finite-type
products of spheres and loops on simply connected spheres, recorded by an
exact (unreduced) Poincare series together with the multiset of factors
whose bottom homology degree is at most a cutoff D.  By Hopf invariant one
the only sphere factors are S^1, S^3, S^7, and loops on S^2, S^4, S^8 are
always rewritten through Omega S^n ~ S^(n-1) x Omega S^(2n-1); this makes
the bottom degrees of sphere factors {1,3,7} and of loop factors disjoint
from them, which is what makes greedy factorization unambiguous.

Factors beyond the cutoff are never listed individually; the series is the
lossless record of their aggregate.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .series import (
    DEFAULT_DEGREE,
    GradedSeries,
    binomial_expansion,
    convolve_trunc,
)


class NotSimplyConnectedOutput(ValueError):
    """A wedge construction produced cells below degree 2."""


class NoSolution(ValueError):
    """Graded basic-product counts forced negative; malformed input."""


class NotCanonicalP(ValueError):
    """A series is not the Poincare series of a canonical P-form."""


class NotADivisor(ValueError):
    """Quotient of product series has a negative coefficient."""


_HOPF_DIMS = (1, 3, 7)


@dataclass(frozen=True)
class CellSeries:
    """Reduced-homology rank series of a path connected space.

    The degree-0 coefficient is 0 and coefficients are non-negative through
    the default working degree.  The zero series is the point.
    """

    reduced: GradedSeries

    def __post_init__(self):
        if self.reduced.is_zero():
            return
        coeffs = self.reduced.expand(DEFAULT_DEGREE)
        if coeffs[0] != 0:
            raise ValueError("reduced series must have zero constant term")
        if any(c < 0 for c in coeffs):
            raise ValueError("reduced series must be non-negative")

    def is_trivial(self) -> bool:
        return self.reduced.is_zero()

    @classmethod
    def trivial(cls) -> "CellSeries":
        return cls(GradedSeries.zero())

    @classmethod
    def sphere(cls, dim: int) -> "CellSeries":
        if dim < 1:
            raise ValueError("sphere dimension must be >= 1")
        return cls(GradedSeries.monomial(dim))


@dataclass(frozen=True)
class SphereWedge:
    """Wedge of simply connected spheres; coefficient n counts copies of S^n."""

    cells: CellSeries

    def __post_init__(self):
        order = self.cells.reduced.order()
        if order is not None and order < 2:
            raise NotSimplyConnectedOutput(f"wedge has cells in degree {order}")

    def is_trivial(self) -> bool:
        return self.cells.is_trivial()

    @classmethod
    def trivial(cls) -> "SphereWedge":
        return cls(CellSeries.trivial())

    @classmethod
    def from_dims(cls, dims) -> "SphereWedge":
        total = GradedSeries.zero()
        for d in dims:
            total = total + GradedSeries.monomial(d)
        return cls(CellSeries(total))


@dataclass(frozen=True, order=True)
class PFactor:
    """One indecomposable factor: a sphere or loops on a sphere.

    Canonical form: sphere dims in {1,3,7} only; loop dims >= 3, not 4 or 8.
    Ordering is by bottom homology degree, then kind, for stable output.
    """

    bottom: int
    kind: str
    dim: int

    def __init__(self, kind: str, dim: int):
        if kind == "sphere":
            if dim not in _HOPF_DIMS:
                raise ValueError(f"sphere factor dimension {dim} not in 1,3,7")
            bottom = dim
        elif kind == "loop_sphere":
            if dim < 3 or dim in (4, 8):
                raise ValueError(f"loop factor on S^{dim} is not canonical")
            bottom = dim - 1
        else:
            raise ValueError(f"unknown factor kind {kind!r}")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "bottom", bottom)

    def poincare(self) -> GradedSeries:
        if self.kind == "sphere":
            return GradedSeries.monomial(self.dim) + 1
        return GradedSeries.geometric(self.dim - 1)

    def label(self) -> str:
        return f"S^{self.dim}" if self.kind == "sphere" else f"OmegaS^{self.dim}"


def sphere(dim: int) -> PFactor:
    return PFactor("sphere", dim)


def loop_sphere(dim: int) -> PFactor:
    return PFactor("loop_sphere", dim)


def _merge_factors(*groups) -> tuple[tuple[PFactor, int], ...]:
    counts: dict[PFactor, int] = {}
    for group in groups:
        for factor, mult in group:
            if mult < 0:
                raise ValueError("factor multiplicity must be >= 0")
            if mult:
                counts[factor] = counts.get(factor, 0) + mult
    return tuple(sorted(counts.items()))


@dataclass(frozen=True)
class PProduct:
    """Product of spheres and loop spaces, up to a bottom-degree cutoff.

    `series` is the exact unreduced Poincare series of the whole product;
    `factors` lists (factor, multiplicity) for factors with bottom degree
    <= cutoff, in canonical ascending order.
    """

    series: GradedSeries
    factors: tuple[tuple[PFactor, int], ...]
    cutoff: int

    def __post_init__(self):
        if self.cutoff < 1:
            raise ValueError("cutoff must be >= 1")
        object.__setattr__(self, "factors", _merge_factors(self.factors))
        coeffs = self.series.expand(self.cutoff)
        if coeffs[0] != 1:
            raise ValueError("Poincare series of a product starts with 1")
        if any(c < 0 for c in coeffs):
            raise ValueError("Poincare series must be non-negative")
        if any(f.bottom > self.cutoff for f, _ in self.factors):
            raise ValueError("listed factor beyond the cutoff")

    def is_trivial(self) -> bool:
        return self.series.is_one()

    @classmethod
    def trivial(cls, cutoff: int = DEFAULT_DEGREE) -> "PProduct":
        return cls(GradedSeries.one(), (), cutoff)

    @classmethod
    def from_factors(cls, factors, cutoff: int = DEFAULT_DEGREE) -> "PProduct":
        """Exact product of explicitly listed factors (all bottoms <= cutoff)."""
        merged = _merge_factors(factors)
        series = GradedSeries.one()
        for factor, mult in merged:
            fs = factor.poincare()
            for _ in range(mult):
                series = series * fs
        return cls(series, merged, cutoff)

    def residual_expansion(self) -> tuple[int, ...]:
        """Expansion of series / prod(listed factor series) through the cutoff.

        Works on truncated coefficient arrays so huge multiplicities never
        materialise as full polynomials.
        """
        coeffs = list(self.series.expand(self.cutoff))
        for factor, mult in self.factors:
            coeffs = _strip_factor(coeffs, factor, mult, self.cutoff)
        return tuple(coeffs)

    def check_canonical(self) -> None:
        """Raise NotCanonicalP unless series/factors satisfy the P invariants."""
        residual = self.residual_expansion()
        if residual[0] != 1 or any(residual[1:]):
            raise NotCanonicalP("series does not match listed factors below cutoff")

    def multiplicity(self, factor: PFactor) -> int:
        return dict(self.factors).get(factor, 0)

    def to_doc(self) -> dict:
        num, den = self.series.to_pair()
        return {
            "factors": [
                {"kind": f.kind, "dim": f.dim, "mult": mult} for f, mult in self.factors
            ],
            "series": {"num": num, "den": den},
            "cutoff": self.cutoff,
        }

    @classmethod
    def from_doc(cls, doc) -> "PProduct":
        factors = tuple(
            (PFactor(entry["kind"], entry["dim"]), entry["mult"])
            for entry in doc["factors"]
        )
        series = GradedSeries.from_pair((doc["series"]["num"], doc["series"]["den"]))
        return cls(series, factors, doc["cutoff"])


def _strip_factor(coeffs: list[int], factor: PFactor, mult: int, degree: int) -> list[int]:
    """Divide a truncated expansion by factor.poincare()**mult."""
    if factor.kind == "sphere":
        inverse = binomial_expansion(factor.dim, 1, -mult, degree)
    else:
        inverse = binomial_expansion(factor.dim - 1, -1, mult, degree)
    return convolve_trunc(coeffs, inverse, degree)


def pproduct_mul(a: PProduct, b: PProduct) -> PProduct:
    """Product of products: series multiply, factor multisets union."""
    if a.cutoff != b.cutoff:
        raise ValueError("cannot multiply products with different cutoffs")
    if a.is_trivial():
        return b
    if b.is_trivial():
        return a
    return PProduct(a.series * b.series, _merge_factors(a.factors, b.factors), a.cutoff)


def reduced_cells(p: PProduct) -> CellSeries:
    """Reduced-homology series of the underlying space of a product."""
    return CellSeries(p.series - 1)


# --------------------------------------------------------------------------
# operations


def join_cells(a: CellSeries, b: CellSeries) -> SphereWedge:
    """Join X * Y ~ Sigma(X ^ Y): cell series t * a * b.

    The caller guarantees the join lies in W; joining with a point gives the
    trivial wedge.
    """
    cells = GradedSeries.monomial(1) * a.reduced * b.reduced
    order = cells.order()
    if order is not None and order < 2:
        raise NotSimplyConnectedOutput(f"join cells start in degree {order}")
    return SphereWedge(CellSeries(cells))


def suspend_series(series: GradedSeries) -> SphereWedge:
    """Wedge of spheres underlying the suspension of a space with the given
    unreduced Poincare series: cells t * (series - 1)."""
    return SphereWedge(CellSeries(GradedSeries.monomial(1) * (series - 1)))


def suspension_splitting(p: PProduct) -> SphereWedge:
    """Suspension of a product of spheres and loop spaces, as a sphere wedge."""
    return suspend_series(p.series)


def lyndon_counts(f: GradedSeries, degree: int) -> dict[int, int]:
    """Graded basic-product counts l_n with prod (1-t^n)^(l_n) = 1 - f(t).

    These are the numbers of Lyndon words over a graded alphabet whose
    generating function is f; solved degree by degree, which is where the
    uniqueness comes from.  For genuine letter counts (non-negative f) the
    counts are automatically non-negative; NoSolution flags malformed input.
    """
    coeffs = f.expand(degree)
    if coeffs[0] != 0:
        raise ValueError("letter generating function needs zero constant term")
    target = [1] + [-c for c in coeffs[1:]]
    current = [1] + [0] * degree
    counts: dict[int, int] = {}
    for n in range(1, degree + 1):
        l_n = current[n] - target[n]
        if l_n < 0:
            raise NoSolution(f"negative count {l_n} in degree {n}")
        if l_n:
            counts[n] = l_n
            current = convolve_trunc(
                current, binomial_expansion(n, -1, l_n, degree), degree
            )
    return counts


def hilton_milnor(w: SphereWedge, cutoff: int = DEFAULT_DEGREE) -> PProduct:
    """Loop space of a wedge of spheres as a product of loops on spheres.

    A generator S^n of the wedge contributes a letter of degree n-1; each
    basic product of degree n gives a factor Omega S^(n+1), rewritten into
    canonical form when n+1 is 2, 4 or 8.  The exact series is
    1/(1 - cells/t) regardless of the cutoff.
    """
    cells = w.cells.reduced
    if cells.is_zero():
        return PProduct.trivial(cutoff)
    letters = GradedSeries(cells.num[1:], cells.den)  # cells/t, exact
    series = 1 / (1 - letters)
    factors = []
    for n, count in lyndon_counts(letters, cutoff).items():
        if n in _HOPF_DIMS:
            factors.append((sphere(n), count))
            if 2 * n <= cutoff:
                factors.append((loop_sphere(2 * n + 1), count))
        else:
            factors.append((loop_sphere(n + 1), count))
    return PProduct(series, tuple(factors), cutoff)


def loop_half_smash(x: CellSeries, y_loop: PProduct) -> PProduct:
    """Loops on a half-smash X |x Y: Omega(X * Omega Y) x Omega Y.

    The right-handed case G x| A is the same computation with the roles
    swapped, so callers pass the factors accordingly.
    """
    w = join_cells(x, reduced_cells(y_loop))
    return pproduct_mul(hilton_milnor(w, y_loop.cutoff), y_loop)


def porter_loop_wedge(summands, cutoff: int = DEFAULT_DEGREE) -> PProduct:
    """Loops on a wedge of spaces with given loop products (Porter splitting).

    Result is prod Omega X_i times the loops of the residual wedge whose
    cell series is sum over subsets T with |T| >= 2 of (|T|-1) * t *
    prod_{i in T} (series_i - 1).  The subset sum is evaluated through the
    identity  sum_T (|T|-1) prod u_i = B - A + 1  with A = prod s_i and
    B = sum_i u_i prod_{j != i} s_j, which avoids 2^m fraction additions.
    """
    summands = list(summands)
    if not summands:
        raise ValueError("need at least one summand")
    if any(p.cutoff != cutoff for p in summands):
        raise ValueError("summand cutoffs must match the requested cutoff")
    if len(summands) == 1:
        return summands[0]
    series = [p.series for p in summands]
    total = GradedSeries.one()
    for s in series:
        total = total * s
    cross = GradedSeries.zero()
    for i, s_i in enumerate(series):
        rest = GradedSeries.one()
        for j, s_j in enumerate(series):
            if j != i:
                rest = rest * s_j
        cross = cross + (s_i - 1) * rest
    residual_cells = GradedSeries.monomial(1) * (cross - total + 1)
    wedge = SphereWedge(CellSeries(residual_cells))
    result = hilton_milnor(wedge, cutoff)
    for p in summands:
        result = pproduct_mul(result, p)
    return result


def greedy_factorize(s: GradedSeries, cutoff: int = DEFAULT_DEGREE) -> PProduct:
    """Recover the canonical factor multiset of a P-form Poincare series.

    Repeatedly take the lowest degree d with a positive coefficient: d in
    {1,3,7} forces that many sphere factors, any other d forces loops on
    S^(d+1); divide out and continue.  The residual past the cutoff must
    expand to 1, otherwise the series is not canonical.
    """
    coeffs = list(s.expand(cutoff))
    if coeffs[0] != 1:
        raise NotCanonicalP("canonical series starts with 1")
    factors = []
    for d in range(1, cutoff + 1):
        c = coeffs[d]
        if c < 0:
            raise NotCanonicalP(f"negative coefficient {c} in degree {d}")
        if c == 0:
            continue
        factor = sphere(d) if d in _HOPF_DIMS else loop_sphere(d + 1)
        factors.append((factor, c))
        coeffs = _strip_factor(coeffs, factor, c, cutoff)
    if any(coeffs[1:]):
        raise NotCanonicalP("residual expansion is not 1 past the factors")
    return PProduct(s, tuple(factors), cutoff)


def divide_products(big: PProduct, small: PProduct) -> PProduct:
    """Complementary factor of small inside big: series divide, refactorize."""
    if big.cutoff != small.cutoff:
        raise ValueError("cannot divide products with different cutoffs")
    if small.is_trivial():
        return big
    quotient = big.series / small.series
    coeffs = quotient.expand(big.cutoff)
    for d, c in enumerate(coeffs):
        if c < 0:
            raise NotADivisor(f"quotient coefficient {c} in degree {d}")
    return greedy_factorize(quotient, big.cutoff)


def subset_residual_cells(summands, cutoff: int = DEFAULT_DEGREE) -> GradedSeries:
    """Direct subset-sum form of the Porter residual cells, for cross-checks."""
    series = [p.series for p in summands]
    total = GradedSeries.zero()
    for size in range(2, len(series) + 1):
        for combo in itertools.combinations(series, size):
            term = GradedSeries.from_coeffs((size - 1,))
            for s in combo:
                term = term * (s - 1)
            total = total + term
    return GradedSeries.monomial(1) * total
