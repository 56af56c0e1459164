"""Eigenvalues and multiplicities of the one-sided cycle shuffles.

Right multiplication by sum of weights[ell] * t_ell has eigenvalue
sum of weights[ell] * m_{I,ell} for each lacunar subset I of [n-1], with
algebraic multiplicity delta_i = #{w : Qind w = i} given in closed form by a
multinomial product.  The whole spectrum therefore scales with the Fibonacci
catalog, not with n!.  Exact dense-matrix routines (characteristic and
minimal polynomials) provide independent oracles at small n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .algebra import AlgebraElement, Scalar, require_within_cap
from .basis import QIndexTable
from .lacunar import LacunarCatalog, Subset, is_lacunar, m_vector
from .perms import all_permutations
from .polys import Polynomial, poly_lcm
from .shuffles import WeightVector, combine

CERTIFIED_DIAGONALIZABLE = "certified_diagonalizable"
INCONCLUSIVE = "inconclusive"


def eigenvalue_for_set(weights: WeightVector, members: Iterable[int], n: int) -> Fraction:
    """sum of weights[ell-1] * m_{I,ell}; eigenvalue rows are indexed by
    lacunar subsets of [n-1] only."""
    s = set(members)
    if not is_lacunar(s) or any(not 1 <= i <= n - 1 for i in s):
        raise ValueError(f"{s} is not a lacunar subset of [{n - 1}]")
    if len(weights) != n:
        raise ValueError(f"expected {n} weights, got {len(weights)}")
    return sum(
        (Fraction(c) * m for c, m in zip(weights, m_vector(s, n))), start=Fraction(0)
    )


def delta(i: int, catalog: LacunarCatalog) -> int:
    """Number of permutations with Q-index i, by the multinomial formula.

    With Q_i = {i_1 < ... < i_p}, i_0 = 1 and i_{p+1} = n+1, the gaps
    j_k = i_k - i_{k-1} give delta = multinomial(n; j_1..j_{p+1}) times the
    product of (j_k - 1) for k >= 2.  Works far beyond the algebra cap.

    >>> from cycleshuffles.lacunar import enumerate_lacunar
    >>> [delta(i, enumerate_lacunar(4)) for i in range(1, 6)]
    [1, 3, 8, 6, 6]
    """
    n = catalog.n
    elems = sorted(catalog[i])
    fenceposts = [1] + elems + [n + 1]
    gaps = [b - a for a, b in zip(fenceposts, fenceposts[1:])]
    count = math.factorial(n)
    for g in gaps:
        count //= math.factorial(g)
    for g in gaps[1:]:
        count *= g - 1
    return count


def delta_by_counting(i: int, catalog: LacunarCatalog, max_n: int | None = None) -> int:
    """Counting oracle for delta: enumerate S_n and count Q-indices equal to i."""
    table = QIndexTable(catalog.n, max_n)
    return sum(1 for qi in table.index.values() if qi == i)


@dataclass(frozen=True)
class SpectrumRow:
    members: Subset
    m: tuple[int, ...]
    eigenvalue: Fraction
    multiplicity: int


@dataclass(frozen=True)
class SpectrumReport:
    n: int
    weights: tuple[Fraction, ...]
    rows: tuple[SpectrumRow, ...]
    aggregate: tuple[tuple[Fraction, int], ...]

    def aggregate_dict(self) -> dict[Fraction, int]:
        return dict(self.aggregate)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "weights": [str(c) for c in self.weights],
            "rows": [
                {
                    "set": sorted(row.members),
                    "m": list(row.m),
                    "eigenvalue": str(row.eigenvalue),
                    "multiplicity": str(row.multiplicity),
                }
                for row in self.rows
            ],
            "aggregate": [
                {"eigenvalue": str(g), "multiplicity": str(mult)}
                for g, mult in self.aggregate
            ],
        }


def full_spectrum(weights: WeightVector, catalog: LacunarCatalog) -> SpectrumReport:
    """One row per catalog entry plus total multiplicities of equal eigenvalues.

    Always sums to n! because every permutation has exactly one Q-index.
    """
    n = catalog.n
    weights = tuple(Fraction(c) for c in weights)
    rows = []
    totals: dict[Fraction, int] = {}
    for i in range(1, len(catalog) + 1):
        members = catalog[i]
        m = m_vector(members, n)
        g = sum((c * mv for c, mv in zip(weights, m)), start=Fraction(0))
        d = delta(i, catalog)
        rows.append(SpectrumRow(members, m, g, d))
        totals[g] = totals.get(g, 0) + d
    aggregate = tuple(sorted(totals.items(), key=lambda item: item[0], reverse=True))
    return SpectrumReport(n, weights, tuple(rows), aggregate)


def annihilator_check(
    weights: WeightVector, catalog: LacunarCatalog, max_n: int | None = None
) -> tuple[bool, AlgebraElement]:
    """Evaluate the product of (t - g_I) over all lacunar I in the group algebra.

    Returns (True, zero) when the product vanishes exactly; otherwise the
    residual element is the witness.
    """
    n = catalog.n
    require_within_cap(n, max_n)
    t = combine(weights)
    product = AlgebraElement.one(n)
    for i in range(1, len(catalog) + 1):
        g = eigenvalue_for_set(weights, catalog[i], n)
        factor = t - AlgebraElement.one(n).scale(g)
        product = product * factor
        if product.is_zero():
            break
    return product.is_zero(), product


def evaluate_at_element(poly: Polynomial, x: AlgebraElement) -> AlgebraElement:
    """Horner evaluation of a rational polynomial at a group-algebra element."""
    acc = AlgebraElement.zero(x.n)
    one = AlgebraElement.one(x.n)
    for c in reversed(poly.coeffs):
        acc = acc * x + one.scale(c)
    return acc


def _krylov_annihilator(seed: dict, x: AlgebraElement) -> Polynomial:
    """Monic annihilator of the vector ``seed`` under repeated right
    multiplication by x, via incremental Gaussian elimination on the
    Krylov sequence."""
    pivots: list[tuple] = []  # (pivot perm, reduced vector, combination over powers)
    current = dict(seed)
    power = 0
    while True:
        vec = {w: Fraction(c) for w, c in current.items()}
        combo = [Fraction(0)] * (power + 1)
        combo[power] = Fraction(1)
        for pivot, pvec, pcombo in pivots:
            c = vec.get(pivot)
            if not c:
                continue
            for w, pv in pvec.items():
                s = vec.get(w, Fraction(0)) - c * pv
                if s:
                    vec[w] = s
                else:
                    vec.pop(w, None)
            for k, pc in enumerate(pcombo):
                combo[k] -= c * pc
        if not vec:
            return Polynomial(combo).monic()
        pivot = next(iter(vec))
        lead = vec[pivot]
        vec = {w: c / lead for w, c in vec.items()}
        combo = [c / lead for c in combo]
        pivots.append((pivot, vec, combo))
        # next Krylov vector: current * x
        nxt: dict = {}
        for u, cu in current.items():
            for v, cv in x.terms.items():
                w = tuple(u[k - 1] for k in v)
                s = nxt.get(w, 0) + cu * cv
                if s:
                    nxt[w] = s
                else:
                    nxt.pop(w, None)
        current = nxt
        power += 1


def minimal_polynomial(x: AlgebraElement, max_n: int = 5) -> Polynomial:
    """Monic minimal polynomial of right multiplication by x.

    Krylov iteration seeded at the identity yields the minimal polynomial of
    x itself, which annihilates the whole right-multiplication matrix since
    w * P(x) = 0 for every permutation w once P(x) = 0.  The evaluation
    P(x) = 0 is verified after the fact; if it ever failed, the least common
    multiple of per-basis-vector annihilators would be taken instead.
    """
    if x.n > max_n:
        raise ValueError(f"degree {x.n} exceeds the minimal-polynomial cap {max_n}")
    seed = {tuple(range(1, x.n + 1)): Fraction(1)}
    poly = _krylov_annihilator(seed, x)
    if evaluate_at_element(poly, x).is_zero():
        return poly
    result = Polynomial.one()
    for w in all_permutations(x.n):
        result = poly_lcm(result, _krylov_annihilator({w: Fraction(1)}, x))
    return result


def char_poly_oracle(matrix: Sequence[Sequence[Scalar]], max_dim: int = 120) -> Polynomial:
    """Exact characteristic polynomial det(xI - M) of a square rational matrix.

    Reduces M to upper Hessenberg form by exact similarity transformations,
    then expands the determinant with the Hessenberg recurrence.  Serves as
    the independent oracle for the multiplicity formula; it never consults
    the lacunar machinery.

    >>> char_poly_oracle([[2, 0], [0, 2]]) == Polynomial((4, -4, 1))
    True
    """
    size = len(matrix)
    if size > max_dim:
        raise ValueError(f"matrix dimension {size} exceeds the oracle cap {max_dim}")
    h = [[Fraction(v) for v in row] for row in matrix]
    if any(len(row) != size for row in h):
        raise ValueError("characteristic polynomial needs a square matrix")

    for k in range(size - 2):
        if not h[k + 1][k]:
            swap = next((i for i in range(k + 2, size) if h[i][k]), None)
            if swap is None:
                continue
            h[k + 1], h[swap] = h[swap], h[k + 1]
            for row in h:
                row[k + 1], row[swap] = row[swap], row[k + 1]
        pivot = h[k + 1][k]
        for i in range(k + 2, size):
            if not h[i][k]:
                continue
            factor = h[i][k] / pivot
            hi, hk1 = h[i], h[k + 1]
            for j in range(k, size):
                hi[j] -= factor * hk1[j]
            for row in h:
                row[k + 1] += factor * row[i]

    # p_k = det(xI - H[:k][:k]) by expansion along the last column
    polys = [Polynomial.one()]
    for k in range(1, size + 1):
        term = Polynomial.x_minus(h[k - 1][k - 1]) * polys[k - 1]
        subdiag = Fraction(1)
        for i in range(k - 1, 0, -1):
            subdiag *= h[i][i - 1]
            coeff = h[i - 1][k - 1] * subdiag
            if coeff:
                term = term - coeff * polys[i - 1]
        polys.append(term)
    return polys[size]


def diagonalizable_certificate(weights: WeightVector, catalog: LacunarCatalog) -> str:
    """"certified_diagonalizable" when all row eigenvalues are pairwise
    distinct, else "inconclusive" (distinctness is sufficient but not
    necessary, so no negative verdict is ever issued)."""
    n = catalog.n
    values = [eigenvalue_for_set(weights, catalog[i], n) for i in range(1, len(catalog) + 1)]
    if len(set(values)) == len(values):
        return CERTIFIED_DIAGONALIZABLE
    return INCONCLUSIVE
