"""Brute-force verification of the commutator and product identities among
the somewhere-to-below shuffles, over exact arithmetic at small n.

Every check multiplies out both sides in the group algebra and tests the
difference for exact vanishing; a failure records the number of surviving
terms and the lexicographically smallest survivor rather than dumping a
factorial-sized element.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra import AlgebraElement, require_within_cap
from .perms import Perm, transposition
from .shuffles import build_t


def commutator(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    return x * y - y * x


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    params: tuple
    passed: bool
    residual_terms: int
    smallest_surviving: Perm | None

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "params": list(self.params),
            "passed": self.passed,
            "residual_terms": self.residual_terms,
            "smallest_surviving": list(self.smallest_surviving)
            if self.smallest_surviving
            else None,
        }


@dataclass(frozen=True)
class IdentityReport:
    n: int
    checks: tuple[IdentityCheck, ...]

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[IdentityCheck]:
        return [c for c in self.checks if not c.passed]

    def to_json(self) -> list[dict]:
        return [c.to_json() for c in self.checks]


def _zero_check(name: str, params: tuple, residual: AlgebraElement) -> IdentityCheck:
    return IdentityCheck(
        name, params, residual.is_zero(), len(residual), residual.lex_smallest_term()
    )


def _nonzero_check(name: str, params: tuple, value: AlgebraElement) -> IdentityCheck:
    """A sharpness witness: passes when the value does NOT vanish."""
    return IdentityCheck(name, params, not value.is_zero(), len(value), value.lex_smallest_term())


def nilpotency_exponent(n: int, i: int, j: int) -> int:
    """min(j - i + 1, ceil((n - j) / 2) + 1), each sufficient on its own."""
    return min(j - i + 1, -((n - j) // -2) + 1)


def commutator_nilpotency(n: int, max_n: int | None = None) -> IdentityReport:
    """[t_i, t_j] ** e = 0 for all i < j with the minimal proven exponent e,
    plus the sharpness witness [t_1, t_3] ** 2 != 0 at n = 6."""
    require_within_cap(n, max_n)
    t = [None] + [build_t(n, ell) for ell in range(1, n + 1)]
    checks = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            com = commutator(t[i], t[j])
            e = nilpotency_exponent(n, i, j)
            checks.append(_zero_check("commutator_power", (i, j, e), com**e))
    if n == 6:
        com = commutator(t[1], t[3])
        checks.append(_nonzero_check("commutator_power_sharp_nonzero", (1, 3, 2), com**2))
        checks.append(_zero_check("commutator_power_sharp_zero", (1, 3, 3), com**3))
    return IdentityReport(n, tuple(checks))


def separate_nilpotency_exponents(n: int, max_n: int | None = None) -> IdentityReport:
    """Both proven exponents j - i + 1 and ceil((n - j)/2) + 1 individually."""
    require_within_cap(n, max_n)
    t = [None] + [build_t(n, ell) for ell in range(1, n + 1)]
    checks = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            com = commutator(t[i], t[j])
            for label, e in (
                ("commutator_power_gap", j - i + 1),
                ("commutator_power_tail", -((n - j) // -2) + 1),
            ):
                checks.append(_zero_check(label, (i, j, e), com**e))
    return IdentityReport(n, tuple(checks))


def mixed_commutator_product(
    n: int, j: int, ks: Sequence[int], max_n: int | None = None
) -> AlgebraElement:
    """The product [t_{k_1}, t_j] [t_{k_2}, t_j] ... for a user-supplied index
    sequence; vanishes whenever len(ks) >= j - ks[-1] + 1 or
    2 len(ks) >= n - j + 2."""
    require_within_cap(n, max_n)
    if not 1 <= j <= n or any(not 1 <= k <= j for k in ks):
        raise ValueError(f"indices must satisfy 1 <= k <= j <= n, got j={j}, ks={list(ks)}")
    tj = build_t(n, j)
    product = AlgebraElement.one(n)
    for k in ks:
        product = product * commutator(build_t(n, k), tj)
    return product


def identity_suite(n: int, max_n: int | None = None) -> IdentityReport:
    """The six product identities, each over every admissible index tuple.

    s_j only exists for j <= n - 1, so the (1 + s_j)-identity ranges over
    i < j <= n - 1; its j = n instance is the trivially zero commutator
    [t_i, 1].
    """
    require_within_cap(n, max_n)
    if n < 2:
        return IdentityReport(n, ())
    one = AlgebraElement.one(n)
    t = [None] + [build_t(n, ell) for ell in range(1, n + 1)]
    s = [None] + [AlgebraElement.from_perm(transposition(n, i)) for i in range(1, n)]
    checks = []
    for i in range(1, n):
        checks.append(_zero_check("recursion", (i,), t[i] - one - s[i] * t[i + 1]))
    for i in range(1, n):
        for j in range(i + 1, n):
            checks.append(
                _zero_check("descent_projector", (i, j), (one + s[j]) * commutator(t[i], t[j]))
            )
    for i in range(1, n + 1):
        checks.append(
            _zero_check("penultimate_absorbs", (i,), t[n - 1] * commutator(t[i], t[n - 1]))
        )
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            cyc = one
            for k in range(i, j):
                cyc = cyc * s[k]
            lhs = commutator(t[i], t[j])
            rhs = commutator(cyc, t[j]) * t[j]
            checks.append(_zero_check("commutator_via_cycle", (i, j), lhs - rhs))
    for i in range(1, n):
        checks.append(
            _zero_check("consecutive_product", (i,), t[i + 1] * t[i] - (t[i] - one) * t[i])
        )
    for i in range(1, n - 1):
        checks.append(
            _zero_check(
                "skip_product",
                (i,),
                t[i + 2] * (t[i] - one) - (t[i] - one) * (t[i + 1] - one),
            )
        )
    return IdentityReport(n, tuple(checks))
