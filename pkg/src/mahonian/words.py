"""
Words over positive integer letters, multisets and permutations.

A word is a tuple of positive ints, e.g. ``(3, 3, 1, 3)``.  A multiset
``{1^k1, 2^k2, ..., m^km}`` is the tuple of multiplicities ``(k1, ..., km)``.
Positions are 1-based in all docstrings; ``w[i - 1]`` is the letter at
position ``i``.

All enumerators yield words in lexicographic order, which is part of the API.

>>> list(enumerate_words((2, 2)))
[(1, 1, 2, 2), (1, 2, 1, 2), (1, 2, 2, 1), (2, 1, 1, 2), (2, 1, 2, 1), (2, 2, 1, 1)]
>>> list(enumerate_with_tail((2, 2), (2, 1)))
[(1, 2, 2, 1), (2, 1, 2, 1), (2, 2, 1, 1)]
"""

from __future__ import annotations

from collections import Counter
from math import factorial
from typing import Iterator, NamedTuple, Sequence

from .errors import DimensionError, MalformedMultisetError

Word = tuple[int, ...]
Permutation = tuple[int, ...]
Multiset = tuple[int, ...]

__all__ = [
    "Word", "Permutation", "Multiset", "Biword",
    "content", "has_full_support", "multiset_size", "multinomial",
    "compositions", "enumerate_words", "tail_permutation", "is_consecutive",
    "consecutive_permutations", "enumerate_with_tail", "enumerate_pm",
    "is_permutation", "std", "istd", "two_line",
    "parse_word", "format_word", "parse_multiset", "format_multiset",
]


class Biword(NamedTuple):
    top: Word
    bottom: Word

    def is_two_line(self) -> bool:
        return self.top == tuple(sorted(self.bottom))


def content(w: Sequence[int]) -> Multiset:
    """Multiplicity vector of ``w``, with length equal to its largest letter."""
    if not w:
        return ()
    counts = Counter(w)
    return tuple(counts.get(i, 0) for i in range(1, max(w) + 1))


def has_full_support(mults: Multiset) -> bool:
    return all(k >= 1 for k in mults)


def multiset_size(mults: Multiset) -> int:
    return sum(mults)


def multinomial(mults: Multiset) -> int:
    r = factorial(sum(mults))
    for k in mults:
        r //= factorial(k)
    return r


def compositions(n: int) -> Iterator[Multiset]:
    """All full-support multisets of size ``n``, in lexicographic order."""
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first,) + rest


def _check_multiset(mults: Multiset) -> None:
    if any(k < 0 for k in mults):
        raise MalformedMultisetError(f"negative multiplicity in {mults}")


def enumerate_words(mults: Multiset) -> Iterator[Word]:
    """Every rearrangement of the multiset, once each, lexicographically."""
    _check_multiset(mults)
    counts = list(mults)
    n = sum(counts)
    m = len(counts)
    word = [0] * n

    def rec(pos):
        if pos == n:
            yield tuple(word)
            return
        for x in range(m):
            if counts[x]:
                counts[x] -= 1
                word[pos] = x + 1
                yield from rec(pos + 1)
                counts[x] += 1

    yield from rec(0)


def tail_permutation(w: Sequence[int]) -> Permutation:
    """Subword of the last occurrences of each letter.

    >>> tail_permutation((3, 3, 1, 3, 2, 2, 1, 1, 2, 4, 4, 1))
    (3, 2, 4, 1)
    """
    if not w:
        raise MalformedMultisetError("tail permutation of the empty word")
    if not has_full_support(content(w)):
        raise MalformedMultisetError(f"content of {format_word(w)} has a gap")
    last = {}
    for i, x in enumerate(w):
        last[x] = i
    return tuple(sorted(last, key=last.__getitem__))


def is_consecutive(p: Sequence[int]) -> bool:
    """True iff every prefix of ``p`` is a set of consecutive integers."""
    lo = hi = None
    for k, x in enumerate(p):
        if k == 0:
            lo = hi = x
        elif x == lo - 1:
            lo = x
        elif x == hi + 1:
            hi = x
        else:
            return False
    return True


def consecutive_permutations(m: int) -> list[Permutation]:
    """The 2^(m-1) consecutive permutations of [m], sorted."""
    if m == 0:
        return [()]
    out = []

    def grow(p, lo, hi):
        if len(p) == m:
            out.append(tuple(p))
            return
        if lo > 1:
            grow(p + [lo - 1], lo - 1, hi)
        if hi < m:
            grow(p + [hi + 1], lo, hi + 1)

    for start in range(1, m + 1):
        grow([start], start, start)
    return sorted(out)


def enumerate_with_tail(mults: Multiset, tail: Sequence[int]) -> Iterator[Word]:
    """Words of the multiset whose tail permutation is ``tail``, lexicographically.

    Generation prunes on the order in which letters run out: when the last
    copy of a letter is placed it must be the next letter of ``tail``.
    """
    if not has_full_support(mults):
        raise MalformedMultisetError(f"multiset {mults} lacks full support")
    m = len(mults)
    if len(tail) != m:
        raise DimensionError(f"tail {tuple(tail)} has length {len(tail)}, expected {m}")
    if sorted(tail) != list(range(1, m + 1)):
        raise DimensionError(f"tail {tuple(tail)} is not a permutation of [{m}]")
    counts = list(mults)
    n = sum(counts)
    word = [0] * n

    def rec(pos, done):
        if pos == n:
            yield tuple(word)
            return
        for x in range(m):
            if counts[x]:
                counts[x] -= 1
                if counts[x] == 0:
                    if tail[done] == x + 1:
                        word[pos] = x + 1
                        yield from rec(pos + 1, done + 1)
                else:
                    word[pos] = x + 1
                    yield from rec(pos + 1, done)
                counts[x] += 1

    yield from rec(0, 0)


def enumerate_pm(mults: Multiset) -> Iterator[Word]:
    """Words with increasing tail permutation: set partitions of this type."""
    return enumerate_with_tail(mults, tuple(range(1, len(mults) + 1)))


def is_permutation(w: Sequence[int]) -> bool:
    return sorted(w) == list(range(1, len(w) + 1))


def std(w: Sequence[int]) -> Permutation:
    """Standardization: equal letters are numbered left to right.

    >>> std((3, 2, 1, 1, 2, 1, 3, 3))
    (6, 4, 1, 2, 5, 3, 7, 8)
    """
    order = sorted(range(len(w)), key=lambda i: (w[i], i))
    p = [0] * len(w)
    for rank, i in enumerate(order, 1):
        p[i] = rank
    return tuple(p)


def istd(mults: Multiset, p: Sequence[int]) -> Word:
    """Inverse standardization: values 1..k1 become 1, the next k2 become 2, ..."""
    if sum(mults) != len(p):
        raise DimensionError(f"permutation of length {len(p)} vs multiset size {sum(mults)}")
    letter_of = []
    for letter, k in enumerate(mults, 1):
        letter_of.extend([letter] * k)
    return tuple(letter_of[v - 1] for v in p)


def two_line(w: Sequence[int]) -> Biword:
    return Biword(tuple(sorted(w)), tuple(w))


def parse_word(s: str) -> Word:
    """Parse ``"331322"`` or ``"3,3,10,2"``; letters must be positive."""
    s = s.strip()
    if not s:
        return ()
    if "," in s:
        letters = tuple(int(t) for t in s.split(","))
    else:
        if not s.isdigit():
            raise ValueError(f"not a word: {s!r}")
        letters = tuple(int(c) for c in s)
    if any(x < 1 for x in letters):
        raise ValueError(f"letters must be positive: {s!r}")
    return letters


def format_word(w: Sequence[int]) -> str:
    if all(x <= 9 for x in w):
        return "".join(map(str, w))
    return ",".join(map(str, w))


def parse_multiset(s: str) -> Multiset:
    s = s.strip()
    if not s:
        return ()
    mults = tuple(int(t) for t in s.split(","))
    if any(k < 0 for k in mults):
        raise MalformedMultisetError(f"negative multiplicity in {s!r}")
    return mults


def format_multiset(mults: Multiset) -> str:
    return ",".join(map(str, mults))
