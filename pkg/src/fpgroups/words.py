"""Free-group words stored run-length as (generator, exponent) syllables.

Exponents are Python ints, so powers like ``d**(alpha**n)`` stay cheap to
carry around. A :class:`Word` is just data: concatenation and powers are raw,
and :func:`reduce` / :func:`cyclic_reduce` produce normal forms.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

from fpgroups._kernels import free_reduce_codes

_FORBIDDEN = re.compile(r"[\s^<>|,]")
_TOKEN = re.compile(r"^([^\s^<>|,]+)(?:\^([+-]?\d+))?$")


class WordSyntaxError(ValueError):
    pass


def check_generator(name: str) -> str:
    if not isinstance(name, str) or not name or _FORBIDDEN.search(name):
        raise WordSyntaxError(f"invalid generator name: {name!r}")
    return name


@dataclass(frozen=True)
class Word:
    """A word in a free group, as a tuple of ``(generator, exponent)`` pairs.

    The stored syllables are not necessarily reduced; use :func:`reduce`.
    ``len(w)`` is the letter length (sum of absolute exponents).
    """

    syllables: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        syl = tuple((g, int(e)) for g, e in self.syllables)
        for g, e in syl:
            check_generator(g)
            if e == 0:
                raise ValueError(f"zero exponent on {g!r}")
        object.__setattr__(self, "syllables", syl)

    @classmethod
    def gen(cls, name: str, exponent: int = 1) -> "Word":
        return cls(((name, exponent),)) if exponent else cls()

    @classmethod
    def from_letters(cls, letters: Iterable[tuple[str, int]]) -> "Word":
        """Build from a letter sequence of ``(generator, +-1)``, merging equal runs only."""
        out: list[list] = []
        for g, e in letters:
            if out and out[-1][0] == g and (out[-1][1] > 0) == (e > 0):
                out[-1][1] += e
            else:
                out.append([g, e])
        return cls(tuple((g, e) for g, e in out))

    @property
    def length(self) -> int:
        """Letter length; unlike ``len()`` it works past ``sys.maxsize``."""
        return sum(abs(e) for _, e in self.syllables)

    def __len__(self) -> int:
        return self.length

    def __bool__(self) -> bool:
        return bool(self.syllables)

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.syllables + other.syllables)

    def __pow__(self, n: int) -> "Word":
        if n < 0:
            return self.inverse() ** (-n)
        return Word(self.syllables * n)

    def __invert__(self) -> "Word":
        return self.inverse()

    def inverse(self) -> "Word":
        return Word(tuple((g, -e) for g, e in reversed(self.syllables)))

    def letters(self) -> Iterator[tuple[str, int]]:
        for g, e in self.syllables:
            step = 1 if e > 0 else -1
            for _ in range(abs(e)):
                yield g, step

    def generators(self) -> set[str]:
        return {g for g, _ in self.syllables}

    def codes(self, index: Mapping[str, int]) -> tuple[int, ...]:
        """Signed letter codes ``+-(index[g] + 1)``, one per letter."""
        out = []
        for g, e in self.syllables:
            c = index[g] + 1
            out.extend([c if e > 0 else -c] * abs(e))
        return tuple(out)

    @classmethod
    def from_codes(cls, codes: Iterable[int], alphabet: Sequence[str]) -> "Word":
        return cls.from_letters((alphabet[abs(c) - 1], 1 if c > 0 else -1) for c in codes)

    def __str__(self) -> str:
        return format_word(self)

    def __repr__(self) -> str:
        return f"Word({format_word(self)!r})"


IDENTITY = Word()


def parse_word(text: str) -> Word:
    """Parse ``"a b^-1 c^3"``; ``"1"`` or blank is the identity."""
    tokens = text.split()
    if tokens == ["1"] or not tokens:
        return IDENTITY
    syl = []
    for tok in tokens:
        m = _TOKEN.match(tok)
        if not m:
            raise WordSyntaxError(f"bad token {tok!r} in {text!r}")
        e = int(m.group(2)) if m.group(2) is not None else 1
        if e:
            syl.append((m.group(1), e))
    return Word(tuple(syl))


def format_word(w: Word) -> str:
    if not w.syllables:
        return "1"
    return " ".join(g if e == 1 else f"{g}^{e}" for g, e in w.syllables)


def word(*items) -> Word:
    """Shorthand: ``word("a", ("b", -2), "c")`` or ``word("a b^-2 c")``."""
    if len(items) == 1 and isinstance(items[0], str) and " " in items[0]:
        return parse_word(items[0])
    syl = []
    for it in items:
        if isinstance(it, Word):
            syl.extend(it.syllables)
        elif isinstance(it, str):
            syl.extend(parse_word(it).syllables)
        else:
            syl.append(tuple(it))
    return Word(tuple(syl))


def reduce(w: Word) -> Word:
    stack: list[list] = []
    for g, e in w.syllables:
        if stack and stack[-1][0] == g:
            stack[-1][1] += e
            if stack[-1][1] == 0:
                stack.pop()
        else:
            stack.append([g, e])
    return Word(tuple((g, e) for g, e in stack))


def is_reduced(w: Word) -> bool:
    syl = w.syllables
    return all(syl[i][0] != syl[i + 1][0] for i in range(len(syl) - 1))


def cyclic_reduce(w: Word) -> Word:
    syl = list(reduce(w).syllables)
    lo, hi = 0, len(syl) - 1
    # strip conjugating syllables from both ends
    while lo < hi and syl[lo][0] == syl[hi][0]:
        g, e = syl[lo][0], syl[lo][1] + syl[hi][1]
        if e == 0:
            lo += 1
            hi -= 1
        else:
            return Word(((g, e),) + tuple(syl[lo + 1:hi]))
    return Word(tuple(syl[lo:hi + 1]))


def is_cyclically_reduced(w: Word) -> bool:
    return is_reduced(w) and (len(w.syllables) < 2 or w.syllables[0][0] != w.syllables[-1][0])


def invert(w: Word) -> Word:
    return w.inverse()


def substitute(w: Word, images: Mapping[str, Word]) -> Word:
    """Homomorphic image of ``w`` under ``images``, freely reduced."""
    out: list = []
    for g, e in w.syllables:
        try:
            img = images[g]
        except KeyError:
            raise KeyError(f"no image for generator {g!r}") from None
        part = img.syllables if e > 0 else img.inverse().syllables
        if len(part) == 1:
            out.append((part[0][0], part[0][1] * abs(e)))
        else:
            out.extend(part * abs(e))
    return reduce(Word(tuple(out)))


def exponent_sum(w: Word, g: str) -> int:
    return sum(e for h, e in w.syllables if h == g)


def rotations(w: Word) -> list[Word]:
    """All letter-level cyclic rotations of ``w`` (with repeats if periodic)."""
    letters = list(w.letters())
    return [Word.from_letters(letters[i:] + letters[:i]) for i in range(len(letters))] or [IDENTITY]


def reduce_codes(codes: Sequence[int]) -> list[int]:
    return free_reduce_codes(codes)
