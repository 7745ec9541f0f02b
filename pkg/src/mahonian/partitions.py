"""
Set partitions of [n] and their four representations.

Blocks are kept sorted by their maximum, so the Mahonian word (block of
each element, blocks numbered by increasing maxima) is the native view.

>>> p = SetPartition.from_blocks([[1, 3, 5, 7], [2, 6], [4], [8, 9]])
>>> format_word(mahonian_word(p)), format_word(canonical_word(p))
('323132344', '121312144')
>>> format_blocks(block_repr(p))
'{1,3,5,7}/{2,6}/{4}/{8,9}'
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from .errors import DomainError, NotMahonianWordError
from .words import Word, compositions, enumerate_pm, format_word, tail_permutation

__all__ = [
    "SetPartition", "ArcDiagram", "mahonian_word", "canonical_word",
    "block_repr", "standard_arcs", "partition_from_mahonian",
    "enumerate_partitions", "format_blocks", "parse_blocks",
    "partition_to_json", "partition_from_json",
]

Block = tuple[int, ...]


@dataclass(frozen=True)
class SetPartition:
    blocks: tuple[Block, ...]  # sorted by block maximum

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]]) -> "SetPartition":
        bs = [tuple(sorted(b)) for b in blocks]
        if any(not b for b in bs):
            raise DomainError("blocks must be nonempty")
        elems = sorted(x for b in bs for x in b)
        if elems != list(range(1, len(elems) + 1)):
            raise DomainError(f"blocks do not partition [{len(elems)}]: {bs}")
        return cls(tuple(sorted(bs, key=lambda b: b[-1])))

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def type(self) -> tuple[int, ...]:
        """Block sizes under max-ordering."""
        return tuple(len(b) for b in self.blocks)

    def __str__(self) -> str:
        return format_blocks(block_repr(self))


@dataclass(frozen=True)
class ArcDiagram:
    n: int
    arcs: frozenset[tuple[int, int]]


def _word_from_ordered(blocks: Sequence[Block], n: int) -> Word:
    w = [0] * n
    for j, b in enumerate(blocks, 1):
        for x in b:
            w[x - 1] = j
    return tuple(w)


def mahonian_word(p: SetPartition) -> Word:
    return _word_from_ordered(p.blocks, p.n)


def canonical_word(p: SetPartition) -> Word:
    return _word_from_ordered(block_repr(p), p.n)


def block_repr(p: SetPartition) -> list[Block]:
    return sorted(p.blocks, key=lambda b: b[0])


def standard_arcs(p: SetPartition) -> ArcDiagram:
    arcs = frozenset((b[k], b[k + 1]) for b in p.blocks for k in range(len(b) - 1))
    return ArcDiagram(p.n, arcs)


def partition_from_mahonian(w: Sequence[int]) -> SetPartition:
    if not w:
        return SetPartition(())
    tail = tail_permutation(w)
    if tail != tuple(range(1, len(tail) + 1)):
        raise NotMahonianWordError(
            f"{format_word(w)} has tail permutation {format_word(tail)}")
    blocks = [[] for _ in tail]
    for i, x in enumerate(w, 1):
        blocks[x - 1].append(i)
    return SetPartition(tuple(tuple(b) for b in blocks))


def enumerate_partitions(n: int, m: Optional[int] = None) -> Iterator[SetPartition]:
    """Partitions of [n] (with exactly m blocks if given).

    Ordered by type lexicographically, then by Mahonian word.
    """
    for mults in compositions(n):
        if m is not None and len(mults) != m:
            continue
        for w in enumerate_pm(mults):
            yield partition_from_mahonian(w)


def format_blocks(blocks: Sequence[Block]) -> str:
    return "/".join("{" + ",".join(map(str, b)) + "}" for b in blocks)


def parse_blocks(s: str) -> SetPartition:
    """Parse ``"{1,3,5,7}/{2,6}/{4}/{8,9}"`` (block order is irrelevant)."""
    s = s.strip()
    if not s:
        return SetPartition(())
    blocks = []
    for part in s.split("/"):
        mo = re.fullmatch(r"\s*\{([\d,\s]+)\}\s*", part)
        if not mo:
            raise ValueError(f"bad block {part!r}")
        blocks.append([int(t) for t in mo.group(1).split(",")])
    return SetPartition.from_blocks(blocks)


def partition_to_json(p: SetPartition) -> str:
    return json.dumps([list(b) for b in block_repr(p)])


def partition_from_json(s: str) -> SetPartition:
    return SetPartition.from_blocks(json.loads(s))
