"""
Distributions of statistics over finite domains, and exhaustive checks of the
equidistribution and invariance claims.

Every check returns a :class:`VerificationReport`.  Checks are sequential and
enumerate in the documented lexicographic order, so the witness attached to
a failing (or, for the counterexample searches, succeeding) report is the
first one found in that order and is identical from run to run.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterable, Iterator, Optional, Sequence, Union

from . import bijections as bij
from . import statistics as st
from .errors import DomainError, ParameterError, PreconditionError, UnsupportedStatisticError
from .partitions import enumerate_partitions, mahonian_word
from .qpoly import QPoly, TQPoly, johnson_stirling
from .words import (
    Multiset, Word, compositions, consecutive_permutations, content,
    enumerate_with_tail, enumerate_words, format_multiset, format_word,
    has_full_support, is_consecutive, istd, std, tail_permutation,
)

Statistic = Callable[[Word], int]

# name -> (callable taking (w, d, r), needs_d, needs_r)
_STATS: dict[str, tuple[Callable, bool, bool]] = {
    "inv": (lambda w, d, r: st.inv(w), False, False),
    "maj": (lambda w, d, r: st.maj(w), False, False),
    "des": (lambda w, d, r: st.des(w), False, False),
    "majd": (lambda w, d, r: st.maj_d(w, d), True, False),
    "z": (lambda w, d, r: st.z_index(w), False, False),
    "rmaj": (lambda w, d, r: st.r_maj(w, r), False, True),
    "den": (lambda w, d, r: st.den(w), False, False),
    "exc": (lambda w, d, r: st.exc(w), False, False),
    "mak": (lambda w, d, r: st.mak(w), False, False),
    "mad": (lambda w, d, r: st.mad(w), False, False),
    "mstc": (lambda w, d, r: st.mstc(w), False, False),
}

STATISTIC_NAMES = tuple(_STATS)

STAT_EXPLANATION = (
    "STAT is not provided: it is tabulated in the source but never defined "
    "there, so any implementation would be a guess")

MAHONIAN = ("inv", "maj", "majd", "z", "rmaj", "den", "mak", "mad")
EULER_MAHONIAN = (("des", "maj"), ("mstc", "inv"), ("exc", "den"), ("des", "mak"))


def get_statistic(name: str, d: Optional[int] = None, r: Optional[int] = None) -> Statistic:
    key = name.lower()
    if key == "stat":
        raise UnsupportedStatisticError(STAT_EXPLANATION)
    if key not in _STATS:
        raise UnsupportedStatisticError(
            f"unknown statistic {name!r}; choose from {', '.join(STATISTIC_NAMES)}")
    fn, needs_d, needs_r = _STATS[key]
    if needs_d and (d is None or d < 1):
        raise ParameterError(f"{key} needs a positive d")
    if needs_r and (r is None or r < 1):
        raise ParameterError(f"{key} needs a positive r")
    return lambda w: fn(w, d, r)


def stat_label(name: str, d: Optional[int] = None, r: Optional[int] = None) -> str:
    if name == "majd":
        return f"majd(d={d})"
    if name == "rmaj":
        return f"rmaj(r={r})"
    return name


# --- domains ------------------------------------------------------------

DOMAIN_KINDS = ("all-words", "fixed-tail", "increasing-tail", "partitions-n", "partitions-n-m")


@dataclass(frozen=True)
class DomainDescriptor:
    kind: str
    multiset: Optional[Multiset] = None
    n: Optional[int] = None
    m: Optional[int] = None
    tail: Optional[tuple[int, ...]] = None

    def __post_init__(self):
        k = self.kind
        if k not in DOMAIN_KINDS:
            raise ValueError(f"unknown domain kind {k!r}")
        if k in ("all-words", "fixed-tail", "increasing-tail"):
            if self.multiset is None or self.n is not None or self.m is not None:
                raise ValueError(f"{k} takes a multiset only")
            if k != "all-words" and not has_full_support(self.multiset):
                raise PreconditionError(f"multiset {self.multiset} lacks full support")
        else:
            if self.n is None or self.multiset is not None:
                raise ValueError(f"{k} takes n (and m)")
            if (k == "partitions-n-m") != (self.m is not None):
                raise ValueError("m is required exactly for partitions-n-m")
            if self.m is not None and not 0 <= self.m <= self.n:
                raise ParameterError(f"need 0 <= m <= n, got n={self.n}, m={self.m}")
        if (k == "fixed-tail") != (self.tail is not None):
            raise ValueError("a tail permutation is given exactly for fixed-tail")

    @classmethod
    def words(cls, mults: Multiset) -> "DomainDescriptor":
        return cls("all-words", multiset=tuple(mults))

    @classmethod
    def fixed_tail(cls, mults: Multiset, tail: Sequence[int]) -> "DomainDescriptor":
        return cls("fixed-tail", multiset=tuple(mults), tail=tuple(tail))

    @classmethod
    def pm(cls, mults: Multiset) -> "DomainDescriptor":
        return cls("increasing-tail", multiset=tuple(mults))

    @classmethod
    def partitions(cls, n: int, m: Optional[int] = None) -> "DomainDescriptor":
        return cls("partitions-n" if m is None else "partitions-n-m", n=n, m=m)

    def __iter__(self) -> Iterator[Word]:
        if self.kind == "all-words":
            return enumerate_words(self.multiset)
        if self.kind == "fixed-tail":
            return enumerate_with_tail(self.multiset, self.tail)
        if self.kind == "increasing-tail":
            return enumerate_with_tail(self.multiset, tuple(range(1, len(self.multiset) + 1)))
        return (mahonian_word(p) for p in enumerate_partitions(self.n, self.m))

    def __str__(self):
        if self.kind == "all-words":
            return f"S_M M={format_multiset(self.multiset)}"
        if self.kind == "fixed-tail":
            return f"S_M^tau M={format_multiset(self.multiset)} tau={format_word(self.tail)}"
        if self.kind == "increasing-tail":
            return f"P_M M={format_multiset(self.multiset)}"
        if self.kind == "partitions-n":
            return f"Pi_n n={self.n}"
        return f"Pi_n,m n={self.n} m={self.m}"


StatArg = Union[str, Statistic]


def _resolve(stat: StatArg, d=None, r=None) -> Statistic:
    return get_statistic(stat, d, r) if isinstance(stat, str) else stat


def distribution(stat: StatArg, dom: Iterable[Word], d=None, r=None) -> QPoly:
    """Generating polynomial: coefficient of q^k counts words with value k."""
    f = _resolve(stat, d, r)
    return QPoly.from_counts(f(w) for w in dom)


def joint_distribution(pair: tuple[StatArg, StatArg], dom: Iterable[Word], d=None, r=None) -> TQPoly:
    f, g = (_resolve(s, d, r) for s in pair)
    return TQPoly.from_counts((f(w), g(w)) for w in dom)


# --- reports ------------------------------------------------------------

@dataclass
class VerificationReport:
    claim: str
    domain: str
    passed: bool
    witness: Optional[dict] = None
    polynomials: dict[str, str] = field(default_factory=dict)

    def __post_init__(self):
        if not self.passed and self.witness is None:
            raise ValueError("a failing report needs a witness")

    def to_dict(self) -> dict:
        d = {"claim": self.claim, "domain": self.domain, "pass": self.passed,
             "polynomials": self.polynomials}
        if self.witness is not None:
            d["witness"] = self.witness
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def render(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{status}\t{self.claim}\t{self.domain}"
        if self.witness:
            line += "\twitness: " + json.dumps(self.witness, sort_keys=True)
        return line


REPORT_SCHEMA = {
    "type": "object",
    "required": ["claim", "domain", "pass", "polynomials"],
    "properties": {
        "claim": {"type": "string"},
        "domain": {"type": "string"},
        "pass": {"type": "boolean"},
        "witness": {"type": "object"},
        "polynomials": {"type": "object", "additionalProperties": {"type": "string"}},
    },
    "additionalProperties": False,
    "if": {"properties": {"pass": {"const": False}}},
    "then": {"required": ["witness"]},
}


def _compare(claim: str, dom: DomainDescriptor, polys: dict[str, object]) -> VerificationReport:
    labels = list(polys)
    ref = polys[labels[0]]
    rendered = {k: str(v) for k, v in polys.items()}
    for k in labels[1:]:
        if polys[k] != ref:
            witness = {"statistic": k, "reference": labels[0],
                       "reference_polynomial": str(ref), "polynomial": str(polys[k])}
            return VerificationReport(claim, str(dom), False, witness, rendered)
    return VerificationReport(claim, str(dom), True, None, rendered)


def _multi_distribution(stats: dict[str, Statistic], words: Iterable[Word]) -> dict[str, QPoly]:
    counts: dict[str, list[int]] = {k: [] for k in stats}
    for w in words:
        for k, f in stats.items():
            counts[k].append(f(w))
    return {k: QPoly.from_counts(v) for k, v in counts.items()}


def mahonian_stats(n: int, d: int = 2, r: int = 2, sweep: bool = True) -> dict[str, Statistic]:
    """The eight Mahonian statistics, plus every d, r in 1..n when ``sweep``."""
    out = {}
    for name in MAHONIAN:
        out[stat_label(name, d, r)] = get_statistic(name, d, r)
    if sweep:
        for k in range(1, n + 1):
            out.setdefault(stat_label("majd", d=k), get_statistic("majd", d=k))
            out.setdefault(stat_label("rmaj", r=k), get_statistic("rmaj", r=k))
    return out


def _require_full_support(mults: Multiset) -> None:
    if not has_full_support(mults):
        raise PreconditionError(f"multiset {mults} lacks full support")


def check_theorem1(mults: Multiset, d: int = 2, r: int = 2, sweep: bool = True) -> VerificationReport:
    """All eight Mahonian statistics share one distribution on P_M."""
    _require_full_support(mults)
    dom = DomainDescriptor.pm(mults)
    polys = _multi_distribution(mahonian_stats(sum(mults), d, r, sweep), dom)
    return _compare("theorem1", dom, polys)


def check_theorem2(mults: Multiset) -> VerificationReport:
    """The four Euler-Mahonian pairs share one joint distribution on P_M."""
    _require_full_support(mults)
    dom = DomainDescriptor.pm(mults)
    words = list(dom)
    polys = {f"({a},{b})": joint_distribution((a, b), words) for a, b in EULER_MAHONIAN}
    return _compare("theorem2", dom, polys)


def check_theorem3(mults: Multiset, tail: Sequence[int]) -> VerificationReport:
    """INV, MAJ, MAJ_d (all d <= n) and Z agree on S_M^tau, tau consecutive."""
    _require_full_support(mults)
    if not is_consecutive(tail):
        raise PreconditionError(f"tail {format_word(tail)} is not consecutive")
    dom = DomainDescriptor.fixed_tail(mults, tail)
    stats = {"inv": st.inv, "maj": st.maj, "z": st.z_index}
    for k in range(1, sum(mults) + 1):
        stats[stat_label("majd", d=k)] = get_statistic("majd", d=k)
    return _compare("theorem3", dom, _multi_distribution(stats, dom))


def check_corollary(n: int, m: int) -> VerificationReport:
    """Johnson's q-Stirling number is the distribution of each Mahonian statistic on Pi_{n,m}."""
    dom = DomainDescriptor.partitions(n, m)
    polys: dict[str, object] = {"johnson": johnson_stirling(n, m)}
    polys.update(_multi_distribution(mahonian_stats(n, sweep=False), dom))
    return _compare("corollary", dom, polys)


# --- bijections ---------------------------------------------------------

TAIL_PRESERVING = ("foata", "foata-d", "han-z")
PM_PRESERVING = ("psi-m", "rawlings", "han-den", "csz-phi")


def bijection(name: str, d: Optional[int] = None, r: Optional[int] = None) -> Callable[[Word], Word]:
    if name not in bij.BIJECTIONS:
        raise DomainError(f"unknown bijection {name!r}; choose from {', '.join(bij.BIJECTIONS)}")
    if name == "foata-d" and d is None:
        raise ParameterError("foata-d needs d")
    if name == "rawlings" and r is None:
        raise ParameterError("rawlings needs r")
    f = bij.BIJECTIONS[name]
    return lambda w: f(w, d=d, r=r)


def _label(name, d, r):
    if name == "foata-d":
        return f"foata-d(d={d})"
    if name == "rawlings":
        return f"rawlings(r={r})"
    return name


def check_invariance(name: str, mults: Multiset, tail: Optional[Sequence[int]] = None,
                     d: Optional[int] = None, r: Optional[int] = None) -> VerificationReport:
    """The map sends S_M^tau onto itself (P_M when tail is omitted)."""
    _require_full_support(mults)
    m = len(mults)
    inc = tuple(range(1, m + 1))
    tail = inc if tail is None else tuple(tail)
    if name in TAIL_PRESERVING:
        if not is_consecutive(tail):
            raise PreconditionError(f"{name} needs a consecutive tail, got {format_word(tail)}")
    elif name in PM_PRESERVING:
        if tail != inc:
            raise PreconditionError(f"{name} is only claimed on P_M (increasing tail)")
    f = bijection(name, d, r)
    dom = DomainDescriptor.fixed_tail(mults, tail)
    claim = f"invariance[{_label(name, d, r)}]"
    words = list(dom)
    domain = set(words)
    seen: dict[Word, Word] = {}
    for w in words:
        v = f(w)
        if v not in domain:
            return VerificationReport(claim, str(dom), False,
                                      {"word": format_word(w), "image": format_word(v),
                                       "reason": "image outside domain"})
        if v in seen:
            return VerificationReport(claim, str(dom), False,
                                      {"word": format_word(w), "image": format_word(v),
                                       "collides_with": format_word(seen[v]),
                                       "reason": "not injective"})
        seen[v] = w
    return VerificationReport(claim, str(dom), True)


def _transport_pair(name: str, d, r) -> tuple[Callable[[Word], tuple], Callable[[Word], tuple]]:
    """(source statistics of w, target statistics of the image)."""
    if name == "foata":
        return (lambda w: (st.maj(w),)), (lambda v: (st.inv(v),))
    if name == "foata-d":
        return (lambda w: (st.maj_d(w, d),)), (lambda v: (st.inv(v),))
    if name == "han-z":
        return (lambda w: (st.maj(w),)), (lambda v: (st.z_index(v),))
    if name == "psi-m":
        return (lambda w: (st.mstc(w), st.inv(w))), (lambda v: (st.des(v), st.maj(v)))
    if name == "rawlings":
        return (lambda w: (st.inv(w),)), (lambda v: (st.r_maj(v, r),))
    if name == "han-den":
        return st.exc_den, (lambda v: (st.des(v), st.maj(v)))
    if name == "csz-phi":
        return st.mak_mad, (lambda v: st.exc_den(v) + (st.inv(v),))
    raise DomainError(f"unknown bijection {name!r}")


def check_transport(name: str, mults: Multiset, d: Optional[int] = None,
                    r: Optional[int] = None) -> VerificationReport:
    """The map carries its source statistics to its target statistics on all of S_M,
    preserves letter content, and is injective."""
    f = bijection(name, d, r)
    src, tgt = _transport_pair(name, d, r)
    dom = DomainDescriptor.words(mults)
    claim = f"transport[{_label(name, d, r)}]"
    seen: dict[Word, Word] = {}
    for w in dom:
        v = f(w)
        a, b = tuple(src(w)), tuple(tgt(v))
        bad = None
        if a != b:
            bad = {"source_values": list(a), "image_values": list(b), "reason": "statistics differ"}
        elif content(v) != content(w):
            bad = {"reason": "content changed"}
        elif v in seen:
            bad = {"collides_with": format_word(seen[v]), "reason": "not injective"}
        if bad:
            bad.update(word=format_word(w), image=format_word(v))
            return VerificationReport(claim, str(dom), False, bad)
        seen[v] = w
    return VerificationReport(claim, str(dom), True)


# --- remarks ------------------------------------------------------------

def find_remark_counterexample(which: str, max_n: int,
                               increasing_only: bool = False) -> VerificationReport:
    """Search for a failure of equidistribution on S_M^tau with tau consecutive.

    ``remark-1``: one of 2-MAJ, DEN, MAK, MAD differs from INV.
    ``remark-2``: two of the Euler-Mahonian pairs differ.
    Passes iff a counterexample is found; the witness is the first in
    (n, M, tau, statistic) order.
    """
    if which not in ("remark-1", "remark-2"):
        raise ValueError(f"unknown remark {which!r}")
    if max_n < 2:
        raise ParameterError("max_n must be at least 2")
    searched = f"full-support M with |M| <= {max_n}, consecutive tau"
    if increasing_only:
        searched += " (increasing only)"
    for n in range(2, max_n + 1):
        for mults in compositions(n):
            m = len(mults)
            tails = [tuple(range(1, m + 1))] if increasing_only else consecutive_permutations(m)
            for tail in tails:
                words = list(enumerate_with_tail(mults, tail))
                found = None
                if which == "remark-1":
                    ref = distribution(st.inv, words)
                    for name in ("rmaj", "den", "mak", "mad"):
                        p = distribution(name, words, r=2)
                        if p != ref:
                            found = {"statistic": stat_label(name, r=2), "reference": "inv",
                                     "polynomial": str(p), "reference_polynomial": str(ref)}
                            break
                else:
                    joints = [(f"({a},{b})", joint_distribution((a, b), words))
                              for a, b in EULER_MAHONIAN]
                    for i in range(len(joints)):
                        for j in range(i + 1, len(joints)):
                            if joints[i][1] != joints[j][1]:
                                found = {"pair": [joints[i][0], joints[j][0]],
                                         "polynomials": [str(joints[i][1]), str(joints[j][1])]}
                                break
                        if found:
                            break
                if found:
                    found.update(multiset=format_multiset(mults), tail=format_word(tail))
                    dom = DomainDescriptor.fixed_tail(mults, tail)
                    return VerificationReport(which, str(dom), True, found)
    return VerificationReport(which, searched, False,
                              {"reason": "no counterexample in the searched range"})


# --- structural properties used in the proofs ---------------------------

def _words_over(m: int, max_n: int) -> Iterator[Word]:
    for n in range(max_n + 1):
        yield from product(range(1, m + 1), repeat=n)


def check_theta_descents(max_n: int, max_m: int) -> VerificationReport:
    """theta_i keeps the descent set and swaps the multiplicities of i and i+1."""
    claim = "theta-descents"
    dom = f"words over [m], m <= {max_m}, length <= {max_n}"
    for m in range(2, max_m + 1):
        for w in _words_over(m, max_n):
            for i in range(1, m):
                c = bij.theta(w, i)
                k = list(content(w) + (0,) * (m - len(content(w))))
                k[i - 1], k[i] = k[i], k[i - 1]
                kc = content(c) + (0,) * (m - len(content(c)))
                if st.descents(c).positions != st.descents(w).positions or list(kc) != k:
                    return VerificationReport(claim, dom, False,
                                              {"word": format_word(w), "i": i, "image": format_word(c)})
    return VerificationReport(claim, dom, True)


def check_theta_chain_letters(max_n: int, max_m: int) -> VerificationReport:
    """For c = theta_{m-2} o ... o theta_1 (w): w_i = m gives c_i = m, and
    otherwise c_i is one less than some letter of w_{i-1} w_i ... w_n m (w_0 = m)."""
    claim = "theta-chain-letters"
    dom = f"words over [m], m <= {max_m}, length <= {max_n}"
    for m in range(1, max_m + 1):
        for w in _words_over(m, max_n):
            c = bij.theta_chain(w, m)
            for i, (x, y) in enumerate(zip(w, c)):
                if x == m:
                    ok = y == m
                else:
                    allowed = {z - 1 for z in (w[i - 1] if i else m,) + w[i:] + (m,)}
                    ok = y in allowed
                if not ok:
                    return VerificationReport(claim, dom, False,
                                              {"word": format_word(w), "m": m, "position": i + 1,
                                               "image": format_word(c)})
    return VerificationReport(claim, dom, True)


def _last_in(w: Sequence[int], A: set) -> Optional[int]:
    for x in reversed(w):
        if x in A:
            return x
    return None


def _subsets(values: Sequence[int]) -> Iterator[set]:
    values = list(values)
    for mask in range(1, 1 << len(values)):
        yield {v for k, v in enumerate(values) if mask >> k & 1}


def check_theta_chain_last(max_n: int, max_m: int) -> VerificationReport:
    """For A inside [2, m-1] meeting w: the last letter of the chain image
    lying in A - 1 equals the last letter of w lying in A, minus one."""
    claim = "theta-chain-last"
    dom = f"words over [m], m <= {max_m}, length <= {max_n}"
    for m in range(3, max_m + 1):
        subsets = list(_subsets(range(2, m)))
        for w in _words_over(m, max_n):
            c = bij.theta_chain(w, m)
            for A in subsets:
                last = _last_in(w, A)
                if last is None:
                    continue
                got = _last_in(c, {a - 1 for a in A})
                if got != last - 1:
                    return VerificationReport(claim, dom, False,
                                              {"word": format_word(w), "m": m, "A": sorted(A),
                                               "image": format_word(c)})
    return VerificationReport(claim, dom, True)


def check_phi_last(max_n: int, max_m: int) -> VerificationReport:
    """phi_x keeps the last letter from A whenever max A < x."""
    claim = "phi-last"
    dom = f"words over [m], m <= {max_m}, length <= {max_n}"
    for m in range(2, max_m + 1):
        for w in _words_over(m, max_n):
            for x in range(2, m + 1):
                v = bij.phi(w, x, m)
                for A in _subsets(range(1, x)):
                    last = _last_in(w, A)
                    if last is not None and _last_in(v, A) != last:
                        return VerificationReport(claim, dom, False,
                                                  {"word": format_word(w), "m": m, "x": x,
                                                   "A": sorted(A), "image": format_word(v)})
    return VerificationReport(claim, dom, True)


def _permutations(max_n: int) -> Iterator[tuple[int, ...]]:
    from itertools import permutations
    for n in range(max_n + 1):
        yield from permutations(range(1, n + 1))


def check_carlitz_transport(max_n: int) -> VerificationReport:
    """(eul o lehmer, INV) p = (des, MAJ) carlitz_psi(p) on permutations."""
    claim = "carlitz-transport"
    dom = f"permutations of length <= {max_n}"
    for p in _permutations(max_n):
        v = bij.carlitz_psi(p)
        if (st.eul(st.lehmer_code(p)), st.inv(p)) != (st.des(v), st.maj(v)):
            return VerificationReport(claim, dom, False, {"word": format_word(p), "image": format_word(v)})
    return VerificationReport(claim, dom, True)


def check_carlitz_adjacency(max_n: int) -> VerificationReport:
    """If c_i >= c_{i+1} >= ... >= c_{i+s}, then i+s is not immediately
    followed by i in carlitz_psi(p)."""
    claim = "carlitz-adjacency"
    dom = f"permutations of length <= {max_n}"
    for p in _permutations(max_n):
        c = st.lehmer_code(p)
        v = bij.carlitz_psi(p)
        follows = {v[k]: v[k + 1] for k in range(len(v) - 1)}
        n = len(p)
        for i in range(1, n):
            s = 1
            while i + s <= n and c[i + s - 2] >= c[i + s - 1]:
                if follows.get(i + s) == i:
                    return VerificationReport(claim, dom, False,
                                              {"word": format_word(p), "i": i, "s": s,
                                               "image": format_word(v)})
                s += 1
    return VerificationReport(claim, dom, True)


def check_psi_istd_descents(max_n: int) -> VerificationReport:
    """Collapsing carlitz_psi(std(w)) back to the letters of w keeps its descent set."""
    claim = "psi-istd-descents"
    dom = f"full-support words of length <= {max_n}"
    for n in range(max_n + 1):
        for mults in compositions(n):
            for w in enumerate_words(mults):
                p = bij.carlitz_psi(std(w))
                v = istd(mults, p)
                if st.descents(v).positions != st.descents(p).positions:
                    return VerificationReport(claim, dom, False,
                                              {"word": format_word(w), "image": format_word(v)})
    return VerificationReport(claim, dom, True)


# --- sweeps -------------------------------------------------------------

def full_support_multisets(max_n: int, min_n: int = 1) -> Iterator[Multiset]:
    for n in range(min_n, max_n + 1):
        yield from compositions(n)


def sweep(claim: str, max_n: int) -> list[VerificationReport]:
    """Run one family of checks over every domain up to size ``max_n``."""
    out: list[VerificationReport] = []
    if claim == "theorem1":
        out = [check_theorem1(M) for M in full_support_multisets(max_n)]
    elif claim == "theorem2":
        out = [check_theorem2(M) for M in full_support_multisets(max_n)]
    elif claim == "theorem3":
        out = [check_theorem3(M, t) for M in full_support_multisets(max_n)
               for t in consecutive_permutations(len(M))]
    elif claim == "corollary":
        out = [check_corollary(n, m) for n in range(max_n + 1) for m in range(n + 1)]
    elif claim == "invariance":
        for M in full_support_multisets(max_n):
            n = sum(M)
            for t in consecutive_permutations(len(M)):
                out.append(check_invariance("foata", M, t))
                out.append(check_invariance("han-z", M, t))
                out.extend(check_invariance("foata-d", M, t, d=d) for d in range(1, n + 1))
            out.append(check_invariance("psi-m", M))
            out.append(check_invariance("han-den", M))
            out.append(check_invariance("csz-phi", M))
            out.extend(check_invariance("rawlings", M, r=r) for r in range(1, n + 1))
    elif claim == "transport":
        for M in full_support_multisets(max_n):
            n = sum(M)
            for name in ("foata", "han-z", "psi-m", "han-den", "csz-phi"):
                out.append(check_transport(name, M))
            out.extend(check_transport("foata-d", M, d=d) for d in range(1, n + 1))
            out.extend(check_transport("rawlings", M, r=r) for r in range(1, n + 1))
    elif claim == "remarks":
        out = [find_remark_counterexample("remark-1", max_n),
               find_remark_counterexample("remark-2", max_n)]
    elif claim == "lemmas":
        small = min(max_n, 6)
        out = [check_theta_descents(small, 5), check_theta_chain_letters(small, 5),
               check_theta_chain_last(small, 5), check_phi_last(small, 5),
               check_carlitz_adjacency(max_n), check_psi_istd_descents(max_n),
               check_carlitz_transport(max_n)]
    else:
        raise ValueError(f"unknown claim family {claim!r}")
    return out


SWEEP_CLAIMS = ("theorem1", "theorem2", "theorem3", "corollary", "invariance",
                "transport", "remarks", "lemmas")
