"""
Integer polynomials in q and in (t, q), q-analogs and q-Stirling numbers.

Coefficients are Python ints, so there is no overflow at any size.

>>> print(q_binom(4, 2))
1 + q + 2*q^2 + q^3 + q^4
>>> print(carlitz_stirling(3, 2), "|", johnson_stirling(3, 2))
2 + q | 2 + q
"""

from __future__ import annotations

import json
from math import comb
from functools import reduce
from typing import Iterable, Mapping

from .errors import MahonianError, ParameterError

__all__ = [
    "QPoly", "TQPoly", "InexactDivisionError", "q_int", "q_fact", "q_binom",
    "stirling2", "stirling2_table", "stirling2_convolution_table", "bell", "carlitz_stirling",
    "carlitz_stirling_table", "johnson_stirling", "johnson_stirling_table",
]


class InexactDivisionError(MahonianError, ArithmeticError):
    pass


def _term(coeff: int, factors: list[str]) -> str:
    if not factors:
        return str(coeff)
    body = "*".join(factors)
    if coeff == 1:
        return body
    if coeff == -1:
        return "-" + body
    return f"{coeff}*{body}"


def _power(var: str, e: int) -> list[str]:
    if e == 0:
        return []
    return [var if e == 1 else f"{var}^{e}"]


def _join(terms: list[str]) -> str:
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
    return out


class QPoly:
    """Dense univariate polynomial; ``coeffs[k]`` is the coefficient of q^k."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def from_counts(cls, exponents: Iterable[int]) -> "QPoly":
        """Sum of q^e over the given exponents (a generating polynomial)."""
        c: list[int] = []
        for e in exponents:
            if e >= len(c):
                c.extend([0] * (e + 1 - len(c)))
            c[e] += 1
        return cls(c)

    @classmethod
    def from_dict(cls, d: Mapping) -> "QPoly":
        c: list[int] = []
        for e, v in d.items():
            e = int(e)
            if e >= len(c):
                c.extend([0] * (e + 1 - len(c)))
            c[e] += int(v)
        return cls(c)

    @property
    def degree(self) -> float:
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    def __eq__(self, other):
        if isinstance(other, int):
            other = QPoly([other])
        return isinstance(other, QPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if isinstance(other, int):
            other = QPoly([other])
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return QPoly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self):
        return QPoly(-x for x in self.coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return QPoly(x * other for x in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return QPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return QPoly(out)

    __rmul__ = __mul__

    def divmod(self, other: "QPoly") -> tuple["QPoly", "QPoly"]:
        if not other.coeffs:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        lead = other.coeffs[-1]
        db = len(other.coeffs) - 1
        quo = [0] * max(len(rem) - db, 0)
        for k in range(len(rem) - 1 - db, -1, -1):
            c = rem[k + db]
            if c % lead:
                raise InexactDivisionError("non-integral quotient coefficient")
            c //= lead
            quo[k] = c
            if c:
                for j, y in enumerate(other.coeffs):
                    rem[k + j] -= c * y
        return QPoly(quo), QPoly(rem)

    def exact_divide(self, other: "QPoly") -> "QPoly":
        try:
            quo, rem = self.divmod(other)
        except InexactDivisionError:
            raise InexactDivisionError(f"{other} does not divide {self}") from None
        if rem.coeffs:
            raise InexactDivisionError(f"{other} does not divide {self}")
        return quo

    def eval_at_one(self) -> int:
        return sum(self.coeffs)

    def __call__(self, q):
        return reduce(lambda acc, c: acc * q + c, reversed(self.coeffs), 0)

    def to_dict(self) -> dict[str, int]:
        return {str(e): c for e, c in enumerate(self.coeffs) if c}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def __str__(self):
        return _join([_term(c, _power("q", e)) for e, c in enumerate(self.coeffs) if c])

    def __repr__(self):
        return f"QPoly({list(self.coeffs)})"


class TQPoly:
    """Sparse polynomial in (t, q): {(t_exp, q_exp): coeff}, zeros dropped."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def from_counts(cls, pairs: Iterable[tuple[int, int]]) -> "TQPoly":
        d: dict[tuple[int, int], int] = {}
        for k in pairs:
            d[k] = d.get(k, 0) + 1
        return cls(d)

    def __eq__(self, other):
        return isinstance(other, TQPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        d = dict(self.terms)
        for k, v in other.terms.items():
            d[k] = d.get(k, 0) + v
        return TQPoly(d)

    def eval_at_one(self) -> int:
        return sum(self.terms.values())

    def q_marginal(self) -> QPoly:
        d: dict[int, int] = {}
        for (_, b), c in self.terms.items():
            d[b] = d.get(b, 0) + c
        return QPoly.from_dict(d)

    def to_dict(self) -> dict[str, int]:
        return {f"{a},{b}": c for (a, b), c in sorted(self.terms.items())}

    def __str__(self):
        return _join([_term(c, _power("t", a) + _power("q", b))
                      for (a, b), c in sorted(self.terms.items())])

    def __repr__(self):
        return f"TQPoly({dict(sorted(self.terms.items()))})"


def q_int(n: int) -> QPoly:
    if n < 0:
        raise ParameterError(f"n must be nonnegative, got {n}")
    return QPoly([1] * n)


def q_fact(n: int) -> QPoly:
    p = QPoly([1])
    for k in range(1, n + 1):
        p = p * q_int(k)
    return p


def q_binom(n: int, i: int) -> QPoly:
    """Gaussian binomial, built with the q-Pascal rule."""
    if not 0 <= i <= n:
        raise ParameterError(f"need 0 <= i <= n, got n={n}, i={i}")
    row = [QPoly([1])]
    for k in range(1, n + 1):
        new = [QPoly([1])]
        for j in range(1, k):
            new.append(row[j - 1] + row[j] * QPoly([0] * j + [1]))
        new.append(QPoly([1]))
        row = new
    return row[i]


def stirling2_table(n_max: int) -> list[list[int]]:
    """S(n, m) for 0 <= n, m <= n_max via S(n,m) = S(n-1,m-1) + m S(n-1,m)."""
    S = [[0] * (n_max + 1) for _ in range(n_max + 1)]
    S[0][0] = 1
    for n in range(1, n_max + 1):
        for m in range(1, n + 1):
            S[n][m] = S[n - 1][m - 1] + m * S[n - 1][m]
    return S


def stirling2_convolution_table(n_max: int) -> list[list[int]]:
    """S(n, m) via S(n+1, m) = sum_i C(n, i) S(n-i, m-1)."""
    S = [[0] * (n_max + 1) for _ in range(n_max + 1)]
    S[0][0] = 1
    for n in range(1, n_max + 1):
        for m in range(1, n + 1):
            S[n][m] = sum(comb(n - 1, i) * S[n - 1 - i][m - 1] for i in range(n))
    return S


def stirling2(n: int, m: int) -> int:
    if n < 0 or m < 0:
        raise ParameterError("n and m must be nonnegative")
    if m > n:
        return 0
    return stirling2_table(n)[n][m]


def bell(n: int) -> int:
    return sum(stirling2_table(n)[n])


def carlitz_stirling_table(n_max: int) -> list[list[QPoly]]:
    S = [[QPoly() for _ in range(n_max + 1)] for _ in range(n_max + 1)]
    S[0][0] = QPoly([1])
    for n in range(1, n_max + 1):
        for m in range(1, n + 1):
            S[n][m] = S[n - 1][m - 1] + q_int(m) * S[n - 1][m]
    return S


def carlitz_stirling(n: int, m: int) -> QPoly:
    """S_q(n, m) = S_q(n-1, m-1) + [m]_q S_q(n-1, m), S_q(0, m) = delta."""
    if n < 0 or m < 0:
        raise ParameterError("n and m must be nonnegative")
    if m > n:
        return QPoly()
    return carlitz_stirling_table(n)[n][m]


def johnson_stirling_table(n_max: int) -> list[list[QPoly]]:
    binoms = [[q_binom(a, b) for b in range(a + 1)] for a in range(n_max)]
    J = [[QPoly() for _ in range(n_max + 1)] for _ in range(n_max + 1)]
    J[0][0] = QPoly([1])
    for n in range(1, n_max + 1):
        # {n, m} = sum_i binom_q(n-1, i) {n-1-i, m-1}
        for m in range(1, n + 1):
            acc = QPoly()
            for i in range(n):
                acc = acc + binoms[n - 1][i] * J[n - 1 - i][m - 1]
            J[n][m] = acc
    return J


def johnson_stirling(n: int, m: int) -> QPoly:
    if n < 0 or m < 0:
        raise ParameterError("n and m must be nonnegative")
    if m > n:
        return QPoly()
    return johnson_stirling_table(n)[n][m]
