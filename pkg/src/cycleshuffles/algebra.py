"""Sparse elements of the rational group algebra of S_n.

Coefficients are exact: Python ints or fractions.Fraction (arbitrary
precision, always reduced).  Zero coefficients are never stored, so equality
of elements is equality of their term dictionaries and an identity check
reduces to emptiness of a difference.

Operations that enumerate all of S_n refuse to run above a degree cap
(default 8, i.e. 40320 basis permutations) to guard against accidental
factorial blowup; the cap can be lifted per call or through the
CYCLESHUFFLES_MAX_N environment variable.
"""

from __future__ import annotations

import os
from fractions import Fraction
from typing import Iterable, Mapping, Union

from .perms import Perm, compose, format_permutation, identity, inverse

Scalar = Union[int, Fraction]

DEFAULT_MAX_N = 8
MAX_N_ENV_VAR = "CYCLESHUFFLES_MAX_N"


def algebra_cap(override: int | None = None) -> int:
    """Effective degree cap for full-S_n computations."""
    if override is not None:
        return override
    env = os.environ.get(MAX_N_ENV_VAR)
    if env is not None:
        return int(env)
    return DEFAULT_MAX_N


def require_within_cap(n: int, override: int | None = None) -> None:
    cap = algebra_cap(override)
    if n > cap:
        raise ValueError(
            f"degree {n} exceeds the full-algebra cap {cap}; raise it explicitly "
            f"or via {MAX_N_ENV_VAR} if {n}! = that many terms is intended"
        )


class AlgebraElement:
    """An element of Q[S_n], stored as a sparse permutation -> coefficient map.

    Instances are immutable in intent: no method mutates ``self``, and the
    term mapping must not be modified by callers.
    """

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Mapping[Perm, Scalar] | None = None):
        self.n = n
        clean: dict[Perm, Scalar] = {}
        if terms:
            for w, c in terms.items():
                if len(w) != n:
                    raise ValueError(f"permutation {w} has degree {len(w)}, expected {n}")
                if c:
                    clean[w] = c
        self._terms = clean

    @classmethod
    def zero(cls, n: int) -> "AlgebraElement":
        return cls(n)

    @classmethod
    def one(cls, n: int) -> "AlgebraElement":
        return cls(n, {identity(n): 1})

    @classmethod
    def from_perm(cls, w: Perm) -> "AlgebraElement":
        return cls(len(w), {w: 1})

    @property
    def terms(self) -> Mapping[Perm, Scalar]:
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self):
        return hash((self.n, frozenset(self._terms.items())))

    def coefficient(self, w: Perm) -> Scalar:
        """The coefficient of the permutation w (0 if absent)."""
        if len(w) != self.n:
            raise ValueError(f"degree mismatch: {len(w)} vs {self.n}")
        return self._terms.get(w, 0)

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check_same_degree(other)
        terms = dict(self._terms)
        for w, c in other._terms.items():
            s = terms.get(w, 0) + c
            if s:
                terms[w] = s
            else:
                terms.pop(w, None)
        return _raw(self.n, terms)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def __neg__(self) -> "AlgebraElement":
        return _raw(self.n, {w: -c for w, c in self._terms.items()})

    def scale(self, c: Scalar) -> "AlgebraElement":
        if not c:
            return AlgebraElement.zero(self.n)
        return _raw(self.n, {w: c * cw for w, cw in self._terms.items()})

    def __rmul__(self, c: Scalar) -> "AlgebraElement":
        if isinstance(c, (int, Fraction)):
            return self.scale(c)
        return NotImplemented

    def __mul__(self, other: "AlgebraElement | Scalar") -> "AlgebraElement":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check_same_degree(other)
        terms: dict[Perm, Scalar] = {}
        for u, cu in self._terms.items():
            for v, cv in other._terms.items():
                w = compose(u, v)
                s = terms.get(w, 0) + cu * cv
                if s:
                    terms[w] = s
                else:
                    terms.pop(w, None)
        return _raw(self.n, terms)

    def __pow__(self, exponent: int) -> "AlgebraElement":
        """Power by repeated squaring (commutator powers are dense)."""
        if exponent < 0:
            raise ValueError("negative powers are not defined")
        result = AlgebraElement.one(self.n)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def antipode(self) -> "AlgebraElement":
        """Replace each permutation by its inverse, keeping coefficients.

        An involutive algebra antihomomorphism.
        """
        return _raw(self.n, {inverse(w): c for w, c in self._terms.items()})

    def lex_smallest_term(self) -> Perm | None:
        return min(self._terms) if self._terms else None

    def __repr__(self) -> str:
        if not self._terms:
            return f"AlgebraElement.zero({self.n})"
        parts = [f"{c!s}*[{format_permutation(w)}]" for w, c in sorted(self._terms.items())]
        return " + ".join(parts)

    def _check_same_degree(self, other: "AlgebraElement") -> None:
        if self.n != other.n:
            raise ValueError(f"degree mismatch: {self.n} vs {other.n}")


def _raw(n: int, terms: dict[Perm, Scalar]) -> AlgebraElement:
    """Internal constructor for term dicts already pruned and degree-checked."""
    el = AlgebraElement.__new__(AlgebraElement)
    el.n = n
    el._terms = terms
    return el


def linear_combine(pairs: Iterable[tuple[Scalar, AlgebraElement]]) -> AlgebraElement:
    """Sum of c_k * x_k with zero terms pruned.

    >>> from cycleshuffles.perms import identity
    >>> x = AlgebraElement.from_perm(identity(3))
    >>> linear_combine([(1, x), (-1, x)]).is_zero()
    True
    """
    pairs = list(pairs)
    if not pairs:
        raise ValueError("linear_combine needs at least one pair")
    n = pairs[0][1].n
    terms: dict[Perm, Scalar] = {}
    for c, x in pairs:
        if x.n != n:
            raise ValueError(f"degree mismatch: {x.n} vs {n}")
        if not c:
            continue
        for w, cw in x.terms.items():
            s = terms.get(w, 0) + c * cw
            if s:
                terms[w] = s
            else:
                terms.pop(w, None)
    return _raw(n, terms)


def antipode(x: AlgebraElement) -> AlgebraElement:
    return x.antipode()


def bilinear_form(x: AlgebraElement, y: AlgebraElement) -> Scalar:
    """Sum over w of [w]x * [w]y; the permutation basis is orthonormal for it."""
    if x.n != y.n:
        raise ValueError(f"degree mismatch: {x.n} vs {y.n}")
    small, large = (x.terms, y.terms) if len(x) <= len(y) else (y.terms, x.terms)
    total: Scalar = 0
    for w, c in small.items():
        d = large.get(w)
        if d is not None:
            total += c * d
    return total


def element_to_json(x: AlgebraElement) -> dict:
    """JSON form: terms sorted lexicographically, big integers as strings."""
    terms = []
    for w in sorted(x.terms):
        c = Fraction(x.terms[w])
        terms.append(
            {"perm": format_permutation(w), "num": str(c.numerator), "den": str(c.denominator)}
        )
    return {"n": x.n, "terms": terms}


def element_from_json(data: Mapping) -> AlgebraElement:
    from .perms import parse_permutation

    n = int(data["n"])
    terms: dict[Perm, Scalar] = {}
    for item in data["terms"]:
        w = parse_permutation(item["perm"])
        terms[w] = Fraction(int(item["num"]), int(item["den"]))
    return AlgebraElement(n, terms)
