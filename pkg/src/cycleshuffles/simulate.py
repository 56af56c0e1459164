"""Monte Carlo simulation of the one-sided cycle shuffles and the bookmark
strong stationary time, with the exact expected-time formula for
random-to-below.

A bookmark starts right above the bottom card.  Each step picks a position i
from the distribution P, reinserts that card uniformly at a position j
weakly below i, and the bookmark gains a card whenever a card from weakly
above its gap lands weakly below it (a card dropped exactly into the gap
counts as below).  The shuffle is fully mixed at the first time tau when all
n cards sit below the bookmark; for the uniform P the expectation of tau is
sum over i = 2..n of n / (i (H_n - H_{i-1})).

Randomness comes from numpy's Philox counter-based generator ("philox4x64"):
trial t of a run seeded s uses the key (s, t), so trials form independent
streams and results are bit-identical for a fixed (seed, trials) regardless
of chunking or worker layout.  Means and standard errors are derived from
exact integer sums of the sampled times.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

import numpy as np

from .algebra import Scalar
from .perms import Perm
from .shuffles import uniform_distribution, validate_distribution

RNG_ID = "philox4x64"

_U64 = (1 << 64) - 1
_FAST_SIM_KEY_OFFSET = 1 << 63

# Fraction arithmetic for the exact expectation is kept to moderate n; the
# harmonic denominators grow like lcm(1..n) and summation multiplies them up.
EXACT_TAU_MAX_N = 200


@dataclass(frozen=True)
class DeckState:
    """Deck order (cards order[0..n-1] from top to bottom) plus the number of
    cards strictly below the bookmark; the count never decreases."""

    order: Perm
    below: int


def initial_state(n: int) -> DeckState:
    if n < 1:
        raise ValueError(f"deck size must be at least 1, got {n}")
    return DeckState(tuple(range(1, n + 1)), 1)


def _apply_move(deck: list[int], below: int, i: int, j: int) -> int:
    """Move the card at position i to position j >= i; return the new count
    of cards below the bookmark.

    The bookmark gap sits between positions n - below and n - below + 1, so
    the card crosses exactly when i <= n - below <= j.
    """
    if i != j:
        deck.insert(j - 1, deck.pop(i - 1))
    if i <= len(deck) - below <= j:
        below += 1
    return below


def _position_cdf(probabilities: Sequence[Scalar]) -> np.ndarray:
    probs = validate_distribution(probabilities)
    if probs[0] == 0:
        raise ValueError(
            "P(1) = 0: the top card never moves, so the chain's stationary "
            "distribution is not uniform and no stationary time exists"
        )
    return np.cumsum(np.array([float(p) for p in probs]))


def _trial_rng(seed: int, stream: int) -> np.random.Generator:
    key = np.array([seed & _U64, stream & _U64], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key))


def _sample_move(u1: float, u2: float, cdf: np.ndarray, n: int) -> tuple[int, int]:
    i = min(int(np.searchsorted(cdf, u1, side="right")) + 1, n)
    j = i + int(u2 * (n + 1 - i))
    return i, j


def step(state: DeckState, probabilities: Sequence[Scalar], rng: np.random.Generator) -> DeckState:
    """One shuffle step drawing two uniforms: the picked position and the
    weakly-lower insertion position."""
    cdf = _position_cdf(probabilities)
    n = len(state.order)
    u1, u2 = rng.random(2)
    i, j = _sample_move(u1, u2, cdf, n)
    deck = list(state.order)
    below = _apply_move(deck, state.below, i, j)
    return DeckState(tuple(deck), below)


@dataclass(frozen=True)
class SimulationResult:
    n: int
    trials: int
    seed: int
    rng: str
    mean: float
    stderr: float
    histogram: tuple[tuple[int, int], ...]
    exact: Fraction | None
    upper_bound: float | None
    conjectured_lower: float | None
    final_counts: Mapping[Perm, int] | None = None

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "trials": self.trials,
            "seed": self.seed,
            "rng": self.rng,
            "mean": self.mean,
            "stderr": self.stderr,
            "exact": str(self.exact) if self.exact is not None else None,
            "upper_bound": self.upper_bound,
            "conjectured_lower": self.conjectured_lower,
            "histogram": [[tau, count] for tau, count in self.histogram],
        }


def _summarize(
    n: int,
    trials: int,
    seed: int,
    taus: Counter,
    uniform: bool,
    final_counts: Mapping[Perm, int] | None,
) -> SimulationResult:
    total = sum(tau * c for tau, c in taus.items())
    total_sq = sum(tau * tau * c for tau, c in taus.items())
    mean = total / trials
    if trials > 1:
        variance = (total_sq - Fraction(total * total, trials)) / (trials - 1)
        stderr = math.sqrt(variance / trials)
    else:
        stderr = float("nan")
    exact = None
    upper = lower = None
    if uniform and n >= 2:
        upper, lower = bounds(n)
        if n <= EXACT_TAU_MAX_N:
            exact = exact_expected_tau(n)
    return SimulationResult(
        n,
        trials,
        seed,
        RNG_ID,
        mean,
        stderr,
        tuple(sorted(taus.items())),
        exact,
        upper,
        lower,
        final_counts,
    )


def simulate_sst(
    probabilities: Sequence[Scalar],
    trials: int,
    seed: int,
    record_final: bool = False,
    chunk: int | None = None,
) -> SimulationResult:
    """Run the full deck chain until the bookmark tops out, per trial.

    Requires P(1) > 0.  Each trial consumes its own Philox stream, drawn in
    blocks; the consumed prefix is independent of the block size, so results
    depend only on (seed, trials).
    """
    if trials < 1:
        raise ValueError(f"trials must be positive, got {trials}")
    probs = validate_distribution(probabilities)
    cdf = _position_cdf(probs)
    n = len(probs)
    if chunk is None:
        # roughly twice the n log n scale of tau, so most trials take one draw
        chunk = max(32, int(2.5 * n * math.log(n + 1)))
    uniform = probs == uniform_distribution(n)
    taus: Counter = Counter()
    final_counts: Counter | None = Counter() if record_final else None
    for trial in range(trials):
        rng = _trial_rng(seed, trial)
        deck = list(range(1, n + 1))
        below = 1
        steps = 0
        while below < n:
            u = rng.random((chunk, 2))
            i_arr = np.minimum(np.searchsorted(cdf, u[:, 0], side="right") + 1, n)
            j_arr = i_arr + (u[:, 1] * (n + 1 - i_arr)).astype(np.int64)
            for i, j in zip(i_arr.tolist(), j_arr.tolist()):
                steps += 1
                below = _apply_move(deck, below, i, j)
                if below == n:
                    break
        taus[steps] += 1
        if final_counts is not None:
            final_counts[tuple(deck)] += 1
    return _summarize(n, trials, seed, taus, uniform, final_counts)


def climb_probability(n: int, below: int) -> Fraction:
    """Chance that one random-to-below step raises the bookmark past the next
    card when ``below`` cards already sit under it."""
    if not 1 <= below <= n - 1:
        raise ValueError(f"below must be in [1, {n - 1}], got {below}")
    level = below + 1
    return Fraction(level, n) * (harmonic(n) - harmonic(level - 1))


def fast_bookmark_sim(n: int, trials: int, seed: int) -> SimulationResult:
    """Bookmark-only simulation of the random-to-below chain.

    The climb from ``below`` to ``below + 1`` is geometric with success
    probability climb_probability(n, below), the stages being independent;
    tau is their sum over below = 1..n-1, matching the exact expectation
    sum over i = 2..n of n / (i (H_n - H_{i-1})).  Stage draws use Philox
    streams keyed off the high key half so they never collide with
    simulate_sst's per-trial streams.
    """
    if n < 2:
        raise ValueError(f"deck size must be at least 2, got {n}")
    if trials < 1:
        raise ValueError(f"trials must be positive, got {trials}")
    totals = np.zeros(trials, dtype=np.int64)
    for below in range(1, n):
        p = float(climb_probability(n, below))
        rng = _trial_rng(seed, _FAST_SIM_KEY_OFFSET + below)
        totals += rng.geometric(p, size=trials)
    taus = Counter(totals.tolist())
    return _summarize(n, trials, seed, taus, uniform=True, final_counts=None)


def harmonic(m: int) -> Fraction:
    """H_m = 1 + 1/2 + ... + 1/m as an exact rational."""
    return sum((Fraction(1, k) for k in range(1, m + 1)), start=Fraction(0))


def exact_expected_tau(n: int) -> Fraction:
    """Expected steps to the strong stationary time of random-to-below:
    sum over i = 2..n of n / (i (H_n - H_{i-1})), exactly.

    >>> exact_expected_tau(2)
    Fraction(2, 1)
    >>> exact_expected_tau(3)
    Fraction(24, 5)
    """
    if n < 2:
        raise ValueError(f"the expectation formula needs n >= 2, got {n}")
    if n > EXACT_TAU_MAX_N:
        raise ValueError(
            f"exact rational evaluation is limited to n <= {EXACT_TAU_MAX_N} "
            f"(harmonic denominators explode); use expected_tau_extended"
        )
    h = [Fraction(0)] * (n + 1)
    for k in range(1, n + 1):
        h[k] = h[k - 1] + Fraction(1, k)
    return sum((Fraction(n) / (i * (h[n] - h[i - 1])) for i in range(2, n + 1)), start=Fraction(0))


def expected_tau_extended(n: int, harmonics: np.ndarray | None = None) -> np.longdouble:
    """The same expectation in numpy longdouble (>= 64-bit significand on
    this platform, i.e. x87 80-bit extended or better)."""
    if n < 2:
        raise ValueError(f"the expectation formula needs n >= 2, got {n}")
    if harmonics is None:
        harmonics = harmonic_prefix(n)
    i = np.arange(2, n + 1)
    terms = n / (i * (harmonics[n] - harmonics[i - 1]))
    return terms.sum()


def harmonic_prefix(max_n: int) -> np.ndarray:
    """Array H[0..max_n] of harmonic numbers in longdouble."""
    ks = np.arange(1, max_n + 1, dtype=np.longdouble)
    return np.concatenate([np.zeros(1, dtype=np.longdouble), np.cumsum(1 / ks)])


def bounds(n: int) -> tuple[float, float]:
    """(proved upper bound, conjectured lower bound) on the expectation, in
    natural logs: n log n + n log log n + n log 2 + 1 and the same without
    the last two terms.  Defined for every n >= 2; log log 2 < 0 is simply
    evaluated, no clamping."""
    if n < 2:
        raise ValueError(f"bounds need n >= 2, got {n}")
    loglog = math.log(math.log(n))
    upper = n * math.log(n) + n * loglog + n * math.log(2) + 1
    lower = n * math.log(n) + n * loglog
    return upper, lower


def bound_check_sweep(max_n: int) -> tuple[list[int], list[int]]:
    """For every n in [2, max_n], compare the expectation with the proved
    upper bound, and for n >= 3 with the conjectured lower bound, all in
    longdouble.  Returns (upper-bound violations, lower-bound violations);
    the first list empty certifies the theorem numerically, the second is
    conjecture status only and never gates anything."""
    harmonics = harmonic_prefix(max_n)
    upper_violations: list[int] = []
    lower_violations: list[int] = []
    log = np.log
    for n in range(2, max_n + 1):
        value = expected_tau_extended(n, harmonics)
        nl = np.longdouble(n)
        loglog = log(log(nl))
        upper = nl * log(nl) + nl * loglog + nl * log(np.longdouble(2)) + 1
        if value > upper:
            upper_violations.append(n)
        if n >= 3 and value < nl * log(nl) + nl * loglog:
            lower_violations.append(n)
    return upper_violations, lower_violations
