"""Pieces, the C(p) and C'(lambda) conditions, and Dehn's algorithm.

The symmetric closure is handled as a list of occurrences (relator, cyclic
shift, orientation). Two occurrences spelling the same word are distinct
elements, so proper powers and repeated relators show up as full-length pieces.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from fpgroups._kernels import DehnTable, common_prefix_length, dehn_find, free_reduce_codes, max_overlaps
from fpgroups.presentations import Presentation, closure_codes, inverse_codes
from fpgroups.words import Word


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class PieceReport:
    pieces: frozenset[Word]
    # word in R* -> (longest piece that is a prefix of it, its length)
    per_relator_max: dict[Word, tuple[int, int]]
    violations: tuple[tuple[Word, Word], ...] = ()

    def max_ratio(self) -> Fraction:
        return max((Fraction(p, n) for p, n in self.per_relator_max.values()), default=Fraction(0))


@dataclass(frozen=True)
class _Overlaps:
    alphabet: tuple[str, ...]
    words: list[tuple[int, ...]]
    order: list[int]
    best: list[int]
    adjacent: list[int]


@lru_cache(maxsize=32)
def _overlaps(p: Presentation) -> _Overlaps:
    words = closure_codes(p)
    order, best, adjacent = max_overlaps(words)
    return _Overlaps(p.generators, words, order, best, adjacent)


def pieces(p: Presentation, lam: Fraction | None = None) -> PieceReport:
    """All pieces of ``p`` and, per element of R*, its longest piece prefix.

    Pieces are exactly the common prefixes of neighbours in sorted order: the
    LCP of any two entries equals the minimum adjacent LCP between them.
    """
    if not p.relations:
        raise PreconditionError("pieces need at least one relation")
    ov = _overlaps(p)
    gens = ov.alphabet
    found = set()
    for k, lcp in enumerate(ov.adjacent):
        if lcp:
            found.add(Word.from_codes(ov.words[ov.order[k]][:lcp], gens))
    per = {}
    for w, b in zip(ov.words, ov.best):
        key = Word.from_codes(w, gens)
        if b > per.get(key, (-1, 0))[0]:
            per[key] = (b, len(w))
    violations = ()
    if lam is not None:
        violations = tuple(
            (key, Word.from_codes(ov.words[i][:ov.best[i]], gens))
            for i, key in _metric_failures(ov, lam)
        )
    return PieceReport(frozenset(found), per, violations)


def _metric_failures(ov: _Overlaps, lam: Fraction):
    seen = set()
    for i, (w, b) in enumerate(zip(ov.words, ov.best)):
        if b and not b < lam * len(w) and w not in seen:
            seen.add(w)
            yield i, Word.from_codes(w, ov.alphabet)


@dataclass(frozen=True)
class Satisfied:
    pass


@dataclass(frozen=True)
class Violated:
    relator: Word
    witness: tuple[Word, ...]


def _as_fraction(lam) -> Fraction:
    lam = Fraction(lam)
    if not 0 < lam < 1:
        raise PreconditionError("lambda must lie in (0, 1)")
    return lam


def check_metric(p: Presentation, lam) -> Satisfied | Violated:
    """C'(lam): every piece prefixing ``r`` in R* is shorter than ``lam * |r|``."""
    lam = _as_fraction(lam)
    if not p.relations:
        return Satisfied()
    ov = _overlaps(p)
    for i, r in _metric_failures(ov, lam):
        return Violated(r, (Word.from_codes(ov.words[i][:ov.best[i]], ov.alphabet),))
    return Satisfied()


def min_piece_decomposition(codes, shift_best) -> list[int] | None:
    """Fewest pieces spelling the word; ``shift_best[j]`` caps a piece starting at ``j``.

    Returns cut positions ``[0, ..., len]`` or None when no decomposition exists.
    """
    n = len(codes)
    # positions reachable with k pieces form a prefix [0, reach[k]]
    reach = [0]
    far = 0
    lo = 0
    while reach[-1] < n:
        for j in range(lo, reach[-1] + 1):
            far = max(far, j + shift_best[j])
        if far <= reach[-1]:
            return None
        lo = reach[-1] + 1
        reach.append(min(far, n))
    cuts = [n]
    for k in range(len(reach) - 2, -1, -1):
        target = cuts[-1]
        cuts.append(next(j for j in range(reach[k] + 1) if j + shift_best[j] >= target))
    return cuts[::-1]


def check_C(p: Presentation, pp: int) -> Satisfied | Violated:
    """C(pp): no element of R* is a product of fewer than ``pp`` pieces.

    Any prefix of a piece counts as a piece for the decomposition.
    """
    if pp < 1:
        raise PreconditionError("p must be positive")
    if not p.relations:
        return Satisfied()
    ov = _overlaps(p)
    # entry index of each (relator occurrence block, shift); blocks are laid out by closure_codes
    pos = 0
    for w in _blocks(ov.words):
        n = len(w)
        block = range(pos, pos + n)
        best = [ov.best[i] for i in block]
        for s in range(n):
            shifted = best[s:] + best[:s]
            cuts = min_piece_decomposition(ov.words[pos + s], shifted)
            if cuts is not None and len(cuts) - 1 < pp:
                word = ov.words[pos + s]
                parts = tuple(Word.from_codes(word[a:b], ov.alphabet) for a, b in zip(cuts, cuts[1:]))
                return Violated(Word.from_codes(word, ov.alphabet), parts)
        pos += n
    return Satisfied()


def _blocks(words):
    """Walk ``closure_codes`` output one shift-block (n entries of length n) at a time."""
    i = 0
    while i < len(words):
        n = len(words[i])
        yield words[i]
        i += n


class DehnReducer:
    """Dehn's algorithm for a presentation certified C'(1/6).

    Repeatedly replaces the leftmost, longest subword ``s`` of some ``r = s t``
    in R* with ``|s| > |r|/2`` by ``t^-1``, then freely reduces.
    """

    def __init__(self, p: Presentation, check: bool = True):
        if check and not isinstance(check_metric(p, Fraction(1, 6)), Satisfied):
            raise PreconditionError("Dehn's algorithm needs C'(1/6)")
        self.presentation = p
        self.index = p.index()
        self.table = DehnTable(sorted(set(closure_codes(p))))

    def reduce_codes(self, codes, cyclic: bool = False) -> list[int]:
        w = free_reduce_codes(list(codes))
        if cyclic:
            return self._reduce_cyclic(w)
        rstar = self.table.rstar
        maxlen = self.table.maxlen
        start = 0
        while True:
            hit = dehn_find(w, self.table, start)
            if hit is None:
                return w
            i, length, j = hit
            repl = inverse_codes(rstar[j][length:])
            new = free_reduce_codes(w[:i] + list(repl) + w[i + length:])
            keep = common_prefix_length(w, new)
            start = max(0, keep - maxlen)
            w = new

    def _reduce_cyclic(self, w):
        w = _cyclic_reduce_codes(w)
        rstar = self.table.rstar
        while w:
            n = len(w)
            doubled = w + w[: min(n, self.table.maxlen)]
            hit = None
            for i in range(n):
                m = self.table.match_at(doubled, i)
                if m is not None and m[0] <= n:
                    hit = (i, m[0], m[1])
                    break
            if hit is None:
                return w
            i, length, j = hit
            rot = w[i:] + w[:i]
            w = _cyclic_reduce_codes(free_reduce_codes(list(inverse_codes(rstar[j][length:])) + rot[length:]))
        return w

    def reduce(self, w: Word, cyclic: bool = False) -> Word:
        out = self.reduce_codes(w.codes(self.index), cyclic=cyclic)
        return Word.from_codes(out, self.presentation.generators)

    def is_trivial(self, w: Word) -> bool:
        return not self.reduce_codes(w.codes(self.index))


def _cyclic_reduce_codes(w):
    lo, hi = 0, len(w) - 1
    while lo < hi and w[lo] == -w[hi]:
        lo += 1
        hi -= 1
    return w[lo:hi + 1]


def dehn_reduce(w: Word, p: Presentation, cyclic: bool = False) -> Word:
    return DehnReducer(p).reduce(w, cyclic=cyclic)


__all__ = [
    "DehnReducer",
    "PieceReport",
    "PreconditionError",
    "Satisfied",
    "Violated",
    "check_C",
    "check_metric",
    "dehn_reduce",
    "pieces",
]
