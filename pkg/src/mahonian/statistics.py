"""
Word statistics: inversions, descents and major index, and the Mahonian and
Euler-Mahonian statistics built from them.

Every statistic is 0 on the empty word.

>>> inv((3, 2, 1, 1, 2, 3)), maj((2, 1, 1, 3, 2, 3))
(6, 5)
>>> z_index((3, 1, 2, 4, 3, 2, 3, 1, 4))
18
"""

from __future__ import annotations

from itertools import combinations
from typing import NamedTuple, Sequence

from .errors import DomainError, ParameterError
from .words import Permutation, is_permutation, std, two_line

__all__ = [
    "LehmerCode", "DescentBlock", "Descents",
    "inv", "imv", "descents", "des", "maj", "inv_d", "maj_d", "z_index",
    "r_descents", "r_inversions", "r_maj", "excedances", "exc_den", "exc",
    "den", "lehmer_code", "eul", "mstc", "heights", "values",
    "descent_blocks", "right_embracing_numbers", "mak_mad", "mak", "mad",
]

LehmerCode = tuple[int, ...]


class Descents(NamedTuple):
    positions: tuple[int, ...]
    des: int
    maj: int


class DescentBlock(NamedTuple):
    """Maximal strictly decreasing factor, positions ``start..end`` (1-based)."""
    start: int
    end: int
    closer: int
    opener: int
    proper: bool


def inv(w: Sequence[int]) -> int:
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def imv(w: Sequence[int]) -> int:
    """Weak inversions: pairs i < j with w_i >= w_j."""
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] >= w[j])


def descents(w: Sequence[int]) -> Descents:
    pos = tuple(i for i in range(1, len(w)) if w[i - 1] > w[i])
    return Descents(pos, len(pos), sum(pos))


def des(w: Sequence[int]) -> int:
    return sum(1 for i in range(1, len(w)) if w[i - 1] > w[i])


def maj(w: Sequence[int]) -> int:
    return sum(i for i in range(1, len(w)) if w[i - 1] > w[i])


def _check_positive(name: str, v: int) -> None:
    if not isinstance(v, int) or v < 1:
        raise ParameterError(f"{name} must be a positive integer, got {v!r}")


def inv_d(w: Sequence[int], d: int) -> int:
    """Inversions (i, j) with j - i < d."""
    _check_positive("d", d)
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, min(n, i + d)) if w[i] > w[j])


def maj_d(w: Sequence[int], d: int) -> int:
    """Kadell's d-major index; d = 1 gives maj, d >= len(w) gives inv."""
    _check_positive("d", d)
    n = len(w)
    return inv_d(w, d) + sum(i + 1 for i in range(n - d) if w[i] > w[i + d])


def z_index(w: Sequence[int]) -> int:
    """Sum over letter pairs a < b of maj of the subword on {a, b}."""
    letters = sorted(set(w))
    total = 0
    for a, b in combinations(letters, 2):
        total += maj([x for x in w if x == a or x == b])
    return total


def r_descents(w: Sequence[int], r: int) -> tuple[int, ...]:
    _check_positive("r", r)
    return tuple(i for i in range(1, len(w)) if w[i - 1] >= w[i] + r)


def r_inversions(w: Sequence[int], r: int) -> list[tuple[int, int]]:
    _check_positive("r", r)
    n = len(w)
    return [(i + 1, j + 1) for i in range(n) for j in range(i + 1, n)
            if w[i] - r < w[j] < w[i]]


def r_maj(w: Sequence[int], r: int) -> int:
    """Rawlings' r-major index; r = 1 gives maj, r >= len(w) gives inv."""
    return len(r_inversions(w, r)) + sum(r_descents(w, r))


def excedances(w: Sequence[int]) -> tuple[int, ...]:
    """Positions i with w_i greater than the i-th letter of sorted(w)."""
    top = two_line(w).top
    return tuple(i + 1 for i in range(len(w)) if w[i] > top[i])


def exc_den(w: Sequence[int]) -> tuple[int, int]:
    """(exc, DEN) of a word, with Han's extension of Denert's statistic.

    >>> exc_den((5, 3, 1, 1, 2, 4, 4, 3, 2, 3))
    (4, 21)
    """
    places = excedances(w)
    marked = set(places)
    exc_tops = [w[i - 1] for i in places]
    rest = [w[i] for i in range(len(w)) if i + 1 not in marked]
    return len(places), sum(places) + imv(exc_tops) + inv(rest)


def exc(w: Sequence[int]) -> int:
    return len(excedances(w))


def den(w: Sequence[int]) -> int:
    return exc_den(w)[1]


def lehmer_code(p: Permutation) -> LehmerCode:
    """c_i = number of letters j < i lying to the right of letter i."""
    if not is_permutation(p):
        raise DomainError(f"not a permutation: {tuple(p)}")
    n = len(p)
    code = [0] * n
    for a in range(n):
        code[p[a] - 1] = sum(1 for b in range(a + 1, n) if p[b] < p[a])
    return tuple(code)


def eul(c: Sequence[int]) -> int:
    for i, ci in enumerate(c):
        if not 0 <= ci <= i:
            raise DomainError(f"entry c_{i + 1} = {ci} outside [0, {i}]")
    e = 0
    for ci in c[1:]:
        if ci > e:
            e += 1
    return e


def mstc(w: Sequence[int]) -> int:
    return eul(lehmer_code(std(w)))


def heights(w: Sequence[int]) -> dict[int, int]:
    """Height of each letter: one more than the number of strictly smaller letters."""
    out = {}
    seen = 0
    for x in sorted(w):
        if x not in out:
            out[x] = seen + 1
        seen += 1
    return out


def values(w: Sequence[int]) -> tuple[int, ...]:
    """v_i = h(w_i) + number of equal letters left of position i; equals std(w)."""
    h = heights(w)
    seen: dict[int, int] = {}
    out = []
    for x in w:
        out.append(h[x] + seen.get(x, 0))
        seen[x] = seen.get(x, 0) + 1
    return tuple(out)


def descent_blocks(w: Sequence[int]) -> list[DescentBlock]:
    blocks = []
    n = len(w)
    start = 0
    for i in range(n):
        if i == n - 1 or w[i] <= w[i + 1]:
            blocks.append(DescentBlock(start + 1, i + 1, w[start], w[i], i > start))
            start = i + 1
    return blocks


def right_embracing_numbers(w: Sequence[int]) -> tuple[int, ...]:
    """e_i = number of proper descent blocks starting right of position i
    whose closer >= w_i > opener."""
    proper = [b for b in descent_blocks(w) if b.proper]
    return tuple(
        sum(1 for b in proper if b.start > i and b.closer >= x > b.opener)
        for i, x in enumerate(w, 1)
    )


def mak_mad(w: Sequence[int]) -> tuple[int, int, int]:
    """(des, MAK, MAD) of a word."""
    h = heights(w)
    v = values(w)
    dpos = descents(w).positions
    dbot = sum(v[i] for i in dpos)  # bottom of descent i is at 0-based index i
    dtop = sum(h[w[i - 1]] for i in dpos)
    res = sum(right_embracing_numbers(w))
    return len(dpos), dbot + res, dtop - dbot + res


def mak(w: Sequence[int]) -> int:
    return mak_mad(w)[1]


def mad(w: Sequence[int]) -> int:
    return mak_mad(w)[2]
