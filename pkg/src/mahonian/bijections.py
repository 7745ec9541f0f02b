"""
Statistic-transporting bijections on words.

=============  ==========================================  ===============
map            transports                                  letter content
=============  ==========================================  ===============
``foata``      MAJ -> INV                                  preserved
``foata_d``    MAJ_d -> INV                                preserved
``han_z``      MAJ -> Z                                    preserved
``psi_m``      (mstc, INV) -> (des, MAJ)                   preserved
``rawlings``   INV -> r-MAJ                                preserved
``han_den``    (exc, DEN) -> (des, MAJ)                    preserved
``csz_phi``    (des, MAK, MAD) -> (exc, DEN, INV)          preserved
=============  ==========================================  ===============

Only forward maps are provided.

>>> foata((2, 1, 1, 3, 2, 3))
(3, 1, 2, 1, 2, 3)
>>> han_den((1, 2, 4, 3, 2, 4))[0]
(1, 2, 3, 4, 2, 4)
"""

from __future__ import annotations

from typing import NamedTuple, Sequence

from .errors import DomainError, ParameterError
from .statistics import descents, lehmer_code, right_embracing_numbers
from .words import Biword, Permutation, Word, content, is_permutation, istd, std

__all__ = [
    "DominatedCycle", "jump", "foata", "foata_d", "theta", "theta_chain",
    "cyclic_up", "cyclic_down", "cyclic_down_inverse", "phi", "han_z",
    "carlitz_labels", "carlitz_psi", "psi_m", "rawlings", "t_operator",
    "han_den", "csz_phi", "is_dominated_cycle", "BIJECTIONS",
]


# --- Foata --------------------------------------------------------------

def jump(w: Sequence[int], x: int) -> Word:
    """Foata's operator J_x.

    Cut ``w`` after every letter on the same side of ``x`` as the last letter
    (``<= x`` or ``> x``), then move each such cut letter to the front of its
    factor.
    """
    if not w:
        return ()
    small = w[-1] <= x
    out: list[int] = []
    factor: list[int] = []
    for y in w:
        if (y <= x) == small:
            out.append(y)
            out.extend(factor)
            factor = []
        else:
            factor.append(y)
    return tuple(out)


def foata(w: Sequence[int]) -> Word:
    """Foata's second fundamental transformation: INV(foata(w)) = MAJ(w)."""
    return foata_d(w, 1)


def foata_d(w: Sequence[int], d: int) -> Word:
    """Liang's extension of Foata's map: INV(foata_d(w, d)) = MAJ_d(w).

    The first d letters are copied; afterwards the jump acts on all but the
    last d - 1 letters built so far.
    """
    if not isinstance(d, int) or d < 1:
        raise ParameterError(f"d must be a positive integer, got {d!r}")
    gamma = tuple(w[:d])
    for x in w[d:]:
        cut = len(gamma) - d + 1
        gamma = jump(gamma[:cut], x) + gamma[cut:] + (x,)
    return gamma


# --- Han's Z bijection ----------------------------------------------------

def theta(w: Sequence[int], i: int) -> Word:
    """Swap the multiplicities of i and i+1 while keeping the descent set.

    Each ``(i+1) i`` factor is frozen; every remaining maximal factor
    ``i^a (i+1)^b`` becomes ``i^b (i+1)^a``.
    """
    if not isinstance(i, int) or i < 1:
        raise ParameterError(f"i must be a positive integer, got {i!r}")
    j = i + 1
    out: list[int] = []
    a = b = 0

    def flush():
        nonlocal a, b
        out.extend([i] * b + [j] * a)
        a = b = 0

    n = len(w)
    k = 0
    while k < n:
        y = w[k]
        if y == j and k + 1 < n and w[k + 1] == i:
            flush()
            out.extend((j, i))
            k += 2
            continue
        if y == i:
            a += 1
        elif y == j:
            b += 1
        else:
            flush()
            out.append(y)
        k += 1
    flush()
    return tuple(out)


def theta_chain(w: Sequence[int], m: int) -> Word:
    """theta_{m-2} o ... o theta_1 (identity when m <= 2)."""
    w = tuple(w)
    for i in range(1, m - 1):
        w = theta(w, i)
    return w


def _check_letters(w: Sequence[int], m: int, x: int) -> None:
    if not 1 <= x <= m:
        raise DomainError(f"letter {x} outside [1, {m}]")
    for y in w:
        if not 1 <= y <= m:
            raise DomainError(f"letter {y} outside [1, {m}]")


def cyclic_up(w: Sequence[int], x: int, m: int) -> Word:
    """C^x: y -> y - x if y > x, else y - x + m."""
    _check_letters(w, m, x)
    return tuple(y - x if y > x else y - x + m for y in w)


def cyclic_down(w: Sequence[int], x: int, m: int) -> Word:
    """C_x: letters below x fixed, x -> m, letters above x shift down by one."""
    _check_letters(w, m, x)
    return tuple(y if y < x else (m if y == x else y - 1) for y in w)


def cyclic_down_inverse(w: Sequence[int], x: int, m: int) -> Word:
    _check_letters(w, m, x)
    return tuple(z if z < x else (x if z == m else z + 1) for z in w)


def phi(w: Sequence[int], x: int, m: int) -> Word:
    """phi_x = theta_chain^(m - x) o C^x, on words over [m].

    For x = 1 the multiplicities need no rotation and phi_1 = C^1; running
    the chain m - 1 times would cycle them back but is not the identity.
    """
    v = cyclic_up(w, x, m)
    for _ in range(m - x if x > 1 else 0):
        v = theta_chain(v, m)
    return v


def han_z(w: Sequence[int], m: int | None = None) -> Word:
    """Han's bijection with Z(han_z(w)) = MAJ(w).

    ``m`` is the alphabet bound, kept fixed through the recursion; letters
    of [m] may be absent.  Defaults to the largest letter of ``w``.
    """
    if not w:
        return ()
    if m is None:
        m = max(w)
    # unrolled recursion: peel last letters, then rebuild from the inside out
    xs = []
    v = tuple(w)
    while v:
        x = v[-1]
        xs.append(x)
        v = phi(v[:-1], x, m)
    out: Word = ()
    for x in reversed(xs):
        out = cyclic_down_inverse(out, x, m) + (x,)
    return out


# --- Carlitz insertion --------------------------------------------------

def carlitz_labels(p: Sequence[int]) -> list[int]:
    """Labels of the len(p)+1 insertion slots; slot k sits after the k-th letter.

    End slot gets 0, slots after descents get 1.. from right to left, the
    remaining slots continue left to right.
    """
    n = len(p)
    labels = [-1] * (n + 1)
    labels[n] = 0
    desc_slots = [k for k in range(1, n) if p[k - 1] > p[k]]
    for lab, k in enumerate(reversed(desc_slots), 1):
        labels[k] = lab
    nxt = len(desc_slots) + 1
    for k in range(n + 1):
        if labels[k] < 0:
            labels[k] = nxt
            nxt += 1
    return labels


def carlitz_psi(p: Permutation) -> Permutation:
    """Carlitz's bijection: (eul o I, INV) p = (des, MAJ) carlitz_psi(p)."""
    if not is_permutation(p):
        raise DomainError(f"not a permutation: {tuple(p)}")
    code = lehmer_code(p)
    out: list[int] = []
    for letter, c in enumerate(code, 1):
        slot = carlitz_labels(out).index(c)
        out.insert(slot, letter)
    return tuple(out)


def psi_m(w: Sequence[int]) -> Word:
    """istd o carlitz_psi o std: (mstc, INV) w = (des, MAJ) psi_m(w)."""
    return istd(content(w), carlitz_psi(std(w)))


# --- Rawlings -----------------------------------------------------------

def _rawlings_slot(v: list[int], m: int, r: int, label: int) -> int:
    """Slot of ``v`` carrying ``label`` for inserting another copy of ``m``.

    Slots just before an existing m are skipped.  A slot creates a new
    r-descent when m >= right + r while the pair (left, right) it splits was
    not already an r-descent; non-creating slots are labeled right to left
    first, creating ones left to right after them.
    """
    n = len(v)
    keep, create = [], []
    for k in range(n + 1):
        if k < n and v[k] == m:
            continue
        if k == n or m < v[k] + r:
            keep.append(k)
        elif k > 0 and v[k - 1] >= v[k] + r:
            keep.append(k)
        else:
            create.append(k)
    order = keep[::-1] + create
    return order[label]


def rawlings(w: Sequence[int], r: int) -> Word:
    """Rawlings' bijection on words: r_maj(rawlings(w, r), r) = inv(w)."""
    if not isinstance(r, int) or r < 1:
        raise ParameterError(f"r must be a positive integer, got {r!r}")
    if not w:
        return ()
    out: list[int] = []
    for m in sorted(set(w)):
        # u_j: letters smaller than m right of the j-th occurrence of m
        us = []
        below = 0
        for y in reversed(w):
            if y == m:
                us.append(below)
            elif y < m:
                below += 1
        us.reverse()
        for u in us:
            out.insert(_rawlings_slot(out, m, r, u), m)
    return tuple(out)


# --- Han's DEN bijection ------------------------------------------------

class DominatedCycle(NamedTuple):
    top: Word
    bottom: Word


def is_dominated_cycle(c: Biword | DominatedCycle) -> bool:
    top, bot = c.top, c.bottom
    n = len(top)
    if n == 0 or len(bot) != n:
        return False
    if n == 1:
        return bot[0] == top[0]
    return (bot[0] == top[-1]
            and all(bot[i] == top[i - 1] for i in range(1, n))
            and all(bot[0] > bot[i] for i in range(1, n)))


def _in_cyclic_interval(z: int, x: int, y: int) -> bool:
    if x <= y:
        return x < z <= y
    return z > x or z <= y


def t_operator(top: list[int], bot: list[int], i: int) -> None:
    """Apply T_i in place (1-based i: columns i and i+1)."""
    k = i - 1
    x, y = top[k], top[k + 1]
    a, b = bot[k], bot[k + 1]
    top[k], top[k + 1] = y, x
    if _in_cyclic_interval(a, x, y) != _in_cyclic_interval(b, x, y):
        bot[k], bot[k + 1] = b, a


def han_den(w: Sequence[int]) -> tuple[Word, list[DominatedCycle]]:
    """Han's bijection: (exc, DEN) w = (des, MAJ) of the returned word.

    Returns the word and the decomposition of ``w`` into dominated cycles,
    left to right; the word is the concatenation of their bottom rows.
    """
    top = sorted(w)
    bot = list(w)
    cycles: list[DominatedCycle] = []
    while bot:
        n = len(bot)
        big = top[-1]
        if bot[-1] == big:
            cycles.append(DominatedCycle((big,), (big,)))
            top.pop()
            bot.pop()
            continue
        # columns of the cycle, collected right to left
        ctop, cbot = [big], [bot[-1]]
        target = bot[-1]
        active = n - 1
        while True:
            idx = max(k for k in range(active) if top[k] == target) + 1
            for i in range(idx, active):
                t_operator(top, bot, i)
            nxt = bot[active - 1]
            ctop.append(target)
            if nxt == big:
                cbot.append(big)
                active -= 1
                break
            cbot.append(nxt)
            target = nxt
            active -= 1
        del top[active:]
        del bot[active:]
        cycles.append(DominatedCycle(tuple(reversed(ctop)), tuple(reversed(cbot))))
    cycles.reverse()
    word = tuple(x for c in cycles for x in c.bottom)
    return word, cycles


# --- Clarke-Steingrimsson-Zeng ------------------------------------------

def csz_phi(w: Sequence[int]) -> Word:
    """(des, MAK, MAD) w = (exc, DEN, INV) csz_phi(w)."""
    pi = std(w)
    n = len(pi)
    dpos = descents(pi).positions
    bottoms = {pi[i] for i in dpos}
    tops = {pi[i - 1] for i in dpos}
    emb = dict(zip(pi, right_embracing_numbers(pi)))

    f = sorted(bottoms)
    g = sorted(set(pi) - bottoms)
    # f': each x has exactly emb[x] larger letters to its left
    f_prime: list[int] = []
    for x in sorted(tops, reverse=True):
        f_prime.insert(emb[x], x)
    # g': each x has exactly emb[x] smaller letters to its right
    g_prime: list[int] = []
    for x in sorted(set(pi) - tops):
        g_prime.insert(len(g_prime) - emb[x], x)

    image = [0] * n
    for t, b in zip(f + g, f_prime + g_prime):
        image[t - 1] = b
    return istd(content(w), image)


BIJECTIONS = {
    "foata": lambda w, d=None, r=None: foata(w),
    "foata-d": lambda w, d=None, r=None: foata_d(w, d),
    "han-z": lambda w, d=None, r=None: han_z(w),
    "psi-m": lambda w, d=None, r=None: psi_m(w),
    "rawlings": lambda w, d=None, r=None: rawlings(w, r),
    "han-den": lambda w, d=None, r=None: han_den(w)[0],
    "csz-phi": lambda w, d=None, r=None: csz_phi(w),
}
