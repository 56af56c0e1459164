"""Composite verification suites behind the command-line ``verify`` command.

Each check certifies one of the library's structural guarantees by exact
computation and reports a single pass/fail with a short diagnostic.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .algebra import AlgebraElement, bilinear_form, linear_combine
from .basis import QIndexTable, build_a_family, dual_basis, expand_in_a, expand_in_b
from .identities import commutator_nilpotency, identity_suite, separate_nilpotency_exponents
from .lacunar import enumerate_lacunar, m_value
from .perms import all_permutations, inverse
from .shuffles import build_t, build_t_prime, combine, r2b_weights
from .spectrum import annihilator_check


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        detail = f" ({self.detail})" if self.detail else ""
        return f"{status} {self.suite}: {self.name}{detail}"


def pseudo_random_weights(n: int) -> tuple[Fraction, ...]:
    """A fixed pseudo-random rational weight vector per degree (seeded, so
    golden across runs); includes negative weights since the annihilating
    product holds for arbitrary coefficients."""
    rng = random.Random(0xC0FFEE ^ n)
    return tuple(Fraction(rng.randrange(-9, 10), rng.randrange(1, 8)) for _ in range(n))


def check_triangularity(n: int, max_n: int | None = None) -> list[CheckResult]:
    """Right multiplication by each t_ell is upper-triangular on the a-basis
    in Q-index order, with diagonal entry m_{Q_{Qind w}, ell}."""
    family = build_a_family(n, max_n)
    table = QIndexTable(n, max_n)
    catalog = table.catalog
    results = []
    for ell in range(1, n + 1):
        t = build_t(n, ell)
        bad = None
        for w in family.perms:
            qw = table[w]
            expansion = expand_in_a(family.elements[w] * t, family)
            diag = expansion.pop(w, 0)
            if diag != m_value(catalog[qw], n, ell):
                bad = f"diagonal of column {w} is {diag}"
                break
            offender = next((v for v in expansion if table[v] >= qw), None)
            if offender is not None:
                bad = f"column {w} reaches {offender} with Qind {table[offender]} >= {qw}"
                break
        results.append(
            CheckResult("triangularity", f"R(t_{ell}) upper-triangular in Q-order", bad is None, bad or "")
        )
    return results


def check_dual_triangularity(n: int, max_n: int | None = None) -> list[CheckResult]:
    """Right multiplication by each t'_ell is upper-triangular on the dual
    basis in decreasing Q-index order, with the same diagonal."""
    family = build_a_family(n, max_n)
    b_family = dual_basis(family)
    table = QIndexTable(n, max_n)
    catalog = table.catalog
    results = []
    for ell in range(1, n + 1):
        tp = build_t_prime(n, ell)
        bad = None
        for w in family.perms:
            qw = table[w]
            expansion = expand_in_b(b_family.elements[w] * tp, family)
            diag = expansion.pop(w, 0)
            if diag != m_value(catalog[qw], n, ell):
                bad = f"diagonal of column {w} is {diag}"
                break
            offender = next((v for v in expansion if table[v] <= qw), None)
            if offender is not None:
                bad = f"column {w} reaches {offender} with Qind {table[offender]} <= {qw}"
                break
        results.append(
            CheckResult(
                "duality", f"R(t'_{ell}) upper-triangular in reverse Q-order", bad is None, bad or ""
            )
        )
    return results


def check_duality(n: int, max_n: int | None = None) -> list[CheckResult]:
    """Gram matrix of the a-basis against its dual is the identity, the
    antipode swaps t and t', and conjugating left multiplication by the
    antipode gives right multiplication by the primed shuffle."""
    family = build_a_family(n, max_n)
    b_family = dual_basis(family)
    bad = None
    for p in family.perms:
        ap = family.elements[p]
        for q in family.perms:
            expected = 1 if p == q else 0
            if bilinear_form(ap, b_family.elements[q]) != expected:
                bad = f"f(a_{p}, b_{q}) != {expected}"
                break
        if bad:
            break
    results = [CheckResult("duality", "Gram(a, b) = identity", bad is None, bad or "")]

    mismatch = next(
        (ell for ell in range(1, n + 1) if build_t(n, ell).antipode() != build_t_prime(n, ell)),
        None,
    )
    results.append(
        CheckResult(
            "duality",
            "antipode(t_ell) = t'_ell",
            mismatch is None,
            f"fails at ell={mismatch}" if mismatch else "",
        )
    )
    results.extend(check_dual_triangularity(n, max_n))
    results.append(check_antipode_conjugation(n, max_n))
    return results


def check_antipode_conjugation(n: int, max_n: int | None = None) -> CheckResult:
    """Matrix identity R(sum of c t') = S L(sum of c t) S^{-1} over the
    standard basis: entry (v, w) of the left side must equal entry
    (v^{-1}, w^{-1}) of L, since S is the permutation matrix of inversion."""
    weights = pseudo_random_weights(n)
    x = combine(weights)
    x_prime = linear_combine(
        (c, build_t_prime(n, ell)) for ell, c in enumerate(weights, start=1)
    )
    bad = None
    for w in all_permutations(n):
        rhs_col = (x * AlgebraElement.from_perm(inverse(w))).terms
        lhs_col = (AlgebraElement.from_perm(w) * x_prime).terms
        if {inverse(v): c for v, c in rhs_col.items()} != dict(lhs_col):
            bad = f"columns differ at w={w}"
            break
    return CheckResult("duality", "R(t') = S L(t) S^-1 as matrices", bad is None, bad or "")


def check_annihilator(n: int, max_n: int | None = None) -> list[CheckResult]:
    catalog = enumerate_lacunar(n)
    results = []
    for label, weights in (
        ("all-ones", tuple(Fraction(1) for _ in range(n))),
        ("random-to-below", r2b_weights(n)),
        ("pseudo-random", pseudo_random_weights(n)),
    ):
        ok, residual = annihilator_check(weights, catalog, max_n)
        results.append(
            CheckResult(
                "annihilator",
                f"product of (t - g_I) vanishes for {label} weights",
                ok,
                "" if ok else f"{len(residual)} surviving terms",
            )
        )
    return results


def check_identities(n: int, max_n: int | None = None) -> list[CheckResult]:
    results = []
    for label, report in (
        ("product identity suite", identity_suite(n, max_n)),
        ("commutator nilpotency", commutator_nilpotency(n, max_n)),
        ("separate nilpotency exponents", separate_nilpotency_exponents(n, max_n)),
    ):
        failures = report.failures()
        detail = "" if not failures else "; ".join(
            f"{c.name}{c.params}: {c.residual_terms} terms survive" for c in failures[:3]
        )
        results.append(CheckResult("identities", f"{label} at n={n}", not failures, detail))
    return results


def check_boolean_partition(n: int) -> list[CheckResult]:
    """Every subset of [n-1] lies in exactly one interval [I', [n-1] - I]
    over lacunar I."""
    catalog = enumerate_lacunar(n)
    full = (1 << n) - 2
    bad = None
    for j_mask in range(0, 1 << (n - 1)):
        j = j_mask << 1  # bits 1..n-1
        matches = sum(
            1
            for q_mask, np_mask in zip(catalog.masks, catalog.non_shadow_masks)
            if np_mask & j == np_mask and j & (full & ~q_mask) == j
        )
        if matches != 1:
            bad = f"subset mask {j:#x} matched {matches} lacunar intervals"
            break
    return [
        CheckResult(
            "boolean-partition",
            f"each of the 2^{n - 1} subsets matches exactly one lacunar interval",
            bad is None,
            bad or "",
        )
    ]


SUITES = {
    "triangularity": lambda n, max_n: check_triangularity(n, max_n),
    "annihilator": lambda n, max_n: check_annihilator(n, max_n),
    "duality": lambda n, max_n: check_duality(n, max_n),
    "identities": lambda n, max_n: check_identities(n, max_n),
    "boolean-partition": lambda n, max_n: check_boolean_partition(n),
}


def run_suite(name: str, n: int, max_n: int | None = None) -> list[CheckResult]:
    if name == "all":
        results = []
        for suite in SUITES.values():
            results.extend(suite(n, max_n))
        return results
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; expected one of {sorted(SUITES)} or 'all'")
    return SUITES[name](n, max_n)
