"""Bi-infinite symbol sequences, the weighted sequence metric, and subshifts.

A sequence is stored as a finite window plus an extension rule (periodic, or
constant tails on each side).  That class is closed under every construction
used downstream -- periodic orbits, concatenations, cylinder representatives --
while keeping symbol access total and exact.  Construction canonicalizes the
representation (least period, trimmed tails) so that structural equality is
semantic equality.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass

from .util import DomainError

PERIODIC = "periodic"
TAILS = "tails"


@dataclass(frozen=True)
class SymbolSequence:
    """Bi-infinite sequence over {0..alphabet_size-1}.

    ``window`` holds the symbols at indices ``offset .. offset+len(window)-1``.
    With a periodic extension the sequence repeats the canonical word
    ``window`` (anchored so symbol(i) = window[i mod p]); with constant tails,
    indices left of the window read ``left`` and indices right of it ``right``.
    """

    alphabet_size: int
    window: tuple
    offset: int
    ext_kind: str
    period: int = 0
    left: int = 0
    right: int = 0

    def __post_init__(self):
        if self.alphabet_size < 1:
            raise DomainError("alphabet_size must be positive")
        win = tuple(int(c) for c in self.window)
        for c in win:
            if not 0 <= c < self.alphabet_size:
                raise DomainError("symbol out of alphabet range")
        if self.ext_kind == PERIODIC:
            p = int(self.period)
            if p < 1:
                raise DomainError("period must be >= 1")
            if len(win) < p:
                raise DomainError("periodic window must cover one period")
            # consistency, then canonical form: word anchored at index 0
            for j in range(len(win)):
                if win[j] != win[j % p]:
                    raise DomainError("window inconsistent with declared period")
            word = tuple(win[(i - self.offset) % p] for i in range(p))
            d = _least_period(word)
            object.__setattr__(self, "window", word[:d])
            object.__setattr__(self, "offset", 0)
            object.__setattr__(self, "period", d)
        elif self.ext_kind == TAILS:
            lo, hi = 0, len(win)
            while lo < hi and win[lo] == self.left:
                lo += 1
            while hi > lo and win[hi - 1] == self.right:
                hi -= 1
            off = self.offset + lo
            win = win[lo:hi]
            if not win and self.left == self.right:
                off = 0
            object.__setattr__(self, "window", win)
            object.__setattr__(self, "offset", off)
            if not 0 <= self.left < self.alphabet_size:
                raise DomainError("left tail symbol out of range")
            if not 0 <= self.right < self.alphabet_size:
                raise DomainError("right tail symbol out of range")
        else:
            raise DomainError(f"unknown extension kind {self.ext_kind!r}")

    # -- constructors ------------------------------------------------------

    @classmethod
    def periodic(cls, word, alphabet_size: int = 2, offset: int = 0):
        """Periodic sequence repeating ``word``, with word[0] at index ``offset``."""
        word = tuple(word)
        return cls(alphabet_size, word, offset, PERIODIC, period=len(word))

    @classmethod
    def constant(cls, symbol: int, alphabet_size: int = 2):
        return cls.periodic((symbol,), alphabet_size)

    @classmethod
    def with_tails(cls, window, offset: int, left: int, right: int,
                   alphabet_size: int = 2):
        return cls(alphabet_size, tuple(window), offset, TAILS,
                   left=left, right=right)

    # -- access ------------------------------------------------------------

    def symbol(self, i: int) -> int:
        if self.ext_kind == PERIODIC:
            return self.window[i % self.period]
        j = i - self.offset
        if j < 0:
            return self.left
        if j >= len(self.window):
            return self.right
        return self.window[j]

    def symbols(self, lo: int, hi: int) -> tuple:
        """Symbols at indices lo .. hi-1."""
        return tuple(self.symbol(i) for i in range(lo, hi))

    def shifted(self, k: int) -> "SymbolSequence":
        """The sequence i -> symbol(i + k)."""
        if self.ext_kind == PERIODIC:
            p = self.period
            word = tuple(self.window[(i + k) % p] for i in range(p))
            return SymbolSequence.periodic(word, self.alphabet_size)
        return SymbolSequence.with_tails(self.window, self.offset - k,
                                         self.left, self.right,
                                         self.alphabet_size)

    def to_json(self):
        if self.ext_kind == PERIODIC:
            ext = f"periodic({self.period})"
        else:
            ext = f"tails({self.left},{self.right})"
        return {"alphabet": self.alphabet_size, "window": list(self.window),
                "offset": self.offset, "ext": ext}

    @classmethod
    def from_json(cls, obj) -> "SymbolSequence":
        ext = obj["ext"]
        m = re.fullmatch(r"periodic\((\d+)\)", ext)
        if m:
            return cls(obj["alphabet"], tuple(obj["window"]), obj["offset"],
                       PERIODIC, period=int(m.group(1)))
        m = re.fullmatch(r"tails\((\d+),(\d+)\)", ext)
        if m:
            return cls(obj["alphabet"], tuple(obj["window"]), obj["offset"],
                       TAILS, left=int(m.group(1)), right=int(m.group(2)))
        raise DomainError(f"bad extension literal {ext!r}")


def _least_period(word: tuple) -> int:
    n = len(word)
    for d in range(1, n + 1):
        if n % d == 0 and all(word[j] == word[j % d] for j in range(n)):
            return d
    return n


def shift(s: SymbolSequence, k: int) -> SymbolSequence:
    """k-fold shift: result(i) = s(i + k)."""
    return s.shifted(k)


def truncation_index(alphabet_size: int, tail_tol: float) -> int:
    """Smallest N with (k-1) * 2^(-N+2) below tail_tol (N >= 1)."""
    if tail_tol <= 0:
        raise DomainError("tail_tol must be positive")
    n = 1
    while (alphabet_size - 1) * 2.0 ** (-n + 2) >= tail_tol:
        n += 1
    return n


def distance(s: SymbolSequence, t: SymbolSequence, tail_tol: float = 1e-9) -> float:
    """Weighted symbol metric sum_i 2^(-|i|) |s_i - t_i|, truncated.

    The series is cut once the geometric tail bound drops below ``tail_tol``,
    so the result is within tail_tol of the exact sum.
    """
    if s.alphabet_size != t.alphabet_size:
        raise DomainError("sequences over different alphabets")
    n = truncation_index(s.alphabet_size, tail_tol)
    total = abs(s.symbol(0) - t.symbol(0))
    for i in range(1, n):
        w = 2.0 ** (-i)
        d = abs(s.symbol(i) - t.symbol(i)) + abs(s.symbol(-i) - t.symbol(-i))
        if d:
            total += w * d
    return total


def periodic_family(n: int):
    """All 2^n binary sequences of period n, in lexicographic word order."""
    if n < 1:
        raise DomainError("period must be >= 1")
    out = []
    for v in range(2 ** n):
        word = tuple((v >> (n - 1 - j)) & 1 for j in range(n))
        out.append(SymbolSequence.periodic(word, 2))
    return out


@dataclass(frozen=True)
class Subshift:
    """Finite-type shift space: transition matrix plus bounded forbidden words."""

    alphabet_size: int
    transition: tuple
    forbidden: tuple = ()

    def __post_init__(self):
        k = self.alphabet_size
        tr = tuple(tuple(bool(v) for v in row) for row in self.transition)
        if len(tr) != k or any(len(row) != k for row in tr):
            raise DomainError("transition matrix must be alphabet_size^2")
        object.__setattr__(self, "transition", tr)
        fb = tuple(tuple(int(c) for c in w) for w in self.forbidden)
        for w in fb:
            if len(w) < 2:
                raise DomainError("forbidden words must have length >= 2")
            for c in w:
                if not 0 <= c < k:
                    raise DomainError("forbidden word symbol out of range")
        object.__setattr__(self, "forbidden", fb)

    @classmethod
    def full(cls, alphabet_size: int) -> "Subshift":
        k = alphabet_size
        return cls(k, tuple(tuple(True for _ in range(k)) for _ in range(k)))

    @classmethod
    def from_forbidden(cls, alphabet_size: int, words) -> "Subshift":
        """Build from forbidden words; length-2 words become matrix entries."""
        k = alphabet_size
        tr = [[True] * k for _ in range(k)]
        longer = []
        for w in words:
            w = tuple(int(c) for c in w)
            if len(w) == 2:
                tr[w[0]][w[1]] = False
            else:
                longer.append(w)
        return cls(k, tuple(tuple(r) for r in tr), tuple(longer))

    @classmethod
    def golden_mean(cls) -> "Subshift":
        return cls.from_forbidden(2, [(1, 1)])

    # -- admissibility -----------------------------------------------------

    def allows_word(self, word) -> bool:
        word = tuple(word)
        for a, b in zip(word, word[1:]):
            if not self.transition[a][b]:
                return False
        for f in self.forbidden:
            L = len(f)
            for i in range(len(word) - L + 1):
                if word[i:i + L] == f:
                    return False
        return True

    def allows_sequence(self, s: SymbolSequence, lo: int = None, hi: int = None) -> bool:
        """Check admissibility over the window (plus one period / tail pad)."""
        span = max(2, max((len(f) for f in self.forbidden), default=2))
        if s.ext_kind == PERIODIC:
            word = s.symbols(0, s.period + span)
        else:
            a = (lo if lo is not None else s.offset) - span
            b = (hi if hi is not None else s.offset + len(s.window)) + span
            word = s.symbols(a, b)
        return self.allows_word(word)

    # -- word counting -----------------------------------------------------

    def _max_context(self) -> int:
        return max(2, max((len(f) for f in self.forbidden), default=2)) - 1

    def words(self, n: int):
        """All admissible words of length n (exact enumeration)."""
        if n < 0:
            raise DomainError("word length must be nonnegative")
        if n == 0:
            return [()]
        out = [(a,) for a in range(self.alphabet_size)]
        for _ in range(n - 1):
            nxt = []
            for w in out:
                for b in range(self.alphabet_size):
                    if not self.transition[w[-1]][b]:
                        continue
                    w2 = w + (b,)
                    ok = True
                    for f in self.forbidden:
                        if len(w2) >= len(f) and w2[-len(f):] == f:
                            ok = False
                            break
                    if ok:
                        nxt.append(w2)
            out = nxt
        return out

    def count_words(self, n: int) -> int:
        """Number of admissible words of length n (suffix-state dynamic program)."""
        if n < 0:
            raise DomainError("word length must be nonnegative")
        if n == 0:
            return 1
        ctx = self._max_context()
        if n <= ctx:
            return len(self.words(n))
        counts = {}
        for w in self.words(ctx):
            counts[w] = counts.get(w, 0) + 1
        for _ in range(n - ctx):
            nxt = {}
            for suf, c in counts.items():
                for b in range(self.alphabet_size):
                    if not self.transition[suf[-1]][b]:
                        continue
                    w2 = suf + (b,)
                    ok = True
                    for f in self.forbidden:
                        if len(w2) >= len(f) and w2[-len(f):] == f:
                            ok = False
                            break
                    if ok:
                        s2 = w2[1:]
                        nxt[s2] = nxt.get(s2, 0) + c
            counts = nxt
        return sum(counts.values())

    def periodic_completion(self, word) -> SymbolSequence:
        """Admissible periodic sequence whose window starts with ``word``.

        Pads with a wrap connector when the plain periodization is forbidden.
        """
        word = tuple(word)
        if self.allows_word(word + word):
            return SymbolSequence.periodic(word, self.alphabet_size)
        for pad in range(self.alphabet_size):
            w2 = word + (pad,)
            if self.allows_word(w2 + w2):
                return SymbolSequence.periodic(w2, self.alphabet_size)
        raise DomainError("no admissible periodic completion found")

    def to_json(self):
        return {"alphabet": self.alphabet_size,
                "transition": [[int(v) for v in row] for row in self.transition],
                "forbidden": [list(w) for w in self.forbidden]}

    @classmethod
    def from_json(cls, obj) -> "Subshift":
        return cls(obj["alphabet"],
                   tuple(tuple(bool(v) for v in row) for row in obj["transition"]),
                   tuple(tuple(w) for w in obj.get("forbidden", [])))


def subshift_entropy(S: Subshift, horizon: int) -> float:
    """(1/horizon) * log(word count): finite-horizon growth-rate estimate."""
    if horizon < 1:
        raise DomainError("horizon must be >= 1")
    c = S.count_words(horizon)
    if c == 0:
        raise DomainError("empty subshift has no entropy estimate")
    return math.log(c) / horizon
