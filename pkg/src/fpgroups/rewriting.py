"""Thue systems: positive words with bidirectional rewriting rules.

Equivalence in a Thue system is undecidable in general, so the search here is
a bounded breadth-first semi-decision.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from fpgroups.words import check_generator

PositiveWord = tuple[str, ...]

DEFAULT_MAX_STATES = 10**6


class ThueError(ValueError):
    pass


def positive_word(text: str | Iterable[str]) -> PositiveWord:
    """``"s1 s1 s2"`` -> ``("s1", "s1", "s2")``; ``"1"`` or blank is empty."""
    if isinstance(text, str):
        toks = text.split()
        return () if toks == ["1"] else tuple(toks)
    return tuple(text)


@dataclass(frozen=True)
class ThueSystem:
    alphabet: tuple[str, ...]
    rules: tuple[tuple[PositiveWord, PositiveWord], ...]
    incomplete: bool = field(default=False, compare=False)
    nonstandard: bool = field(default=False, compare=False)

    def __post_init__(self):
        alpha = tuple(check_generator(a) for a in self.alphabet)
        if len(set(alpha)) != len(alpha):
            raise ThueError("repeated letter in alphabet")
        rules = tuple((tuple(l), tuple(r)) for l, r in self.rules)
        for lhs, rhs in rules:
            if not lhs or not rhs:
                raise ThueError("rule sides must be nonempty")
            self._check(lhs, alpha)
            self._check(rhs, alpha)
        object.__setattr__(self, "alphabet", alpha)
        object.__setattr__(self, "rules", rules)

    @staticmethod
    def _check(w: Sequence[str], alphabet) -> None:
        bad = [x for x in w if x not in alphabet]
        if bad:
            raise ThueError(f"letters {sorted(set(bad))} not in alphabet {list(alphabet)}")

    def check_word(self, w: Sequence[str]) -> PositiveWord:
        self._check(w, self.alphabet)
        return tuple(w)

    def directed_rules(self):
        for lhs, rhs in self.rules:
            yield lhs, rhs
            yield rhs, lhs


def one_step_neighbors(system: ThueSystem, w: Sequence[str]) -> set[PositiveWord]:
    w = system.check_word(w)
    out = set()
    n = len(w)
    for src, dst in system.directed_rules():
        k = len(src)
        for i in range(n - k + 1):
            if w[i:i + k] == src:
                out.add(w[:i] + dst + w[i + k:])
    return out


@dataclass(frozen=True)
class EquivalentAtDepth:
    depth: int


@dataclass(frozen=True)
class NotFoundWithinDepth:
    depth: int


@dataclass(frozen=True)
class Exhausted:
    """The state cap was hit before the search radius was covered."""

    depth_completed: int
    states: int


def bfs_layers(system: ThueSystem, start: Sequence[str], depth: int,
               max_states: int = DEFAULT_MAX_STATES):
    """Yield ``(radius, layer)`` for radius 0..depth; layer holds words first seen there.

    Raises :class:`OverflowError` carrying the completed radius if the cap is hit.
    """
    start = system.check_word(start)
    seen = {start}
    layer = [start]
    yield 0, layer
    for d in range(1, depth + 1):
        nxt = []
        for w in layer:
            for v in sorted(one_step_neighbors(system, w)):
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
                    if len(seen) > max_states:
                        raise OverflowError(d - 1, len(seen))
        layer = nxt
        yield d, layer
        if not layer:
            return


def ball(system: ThueSystem, start: Sequence[str], radius: int,
         max_states: int = DEFAULT_MAX_STATES) -> dict[PositiveWord, int]:
    """Words within ``radius`` rewriting steps of ``start``, mapped to their distance."""
    out = {}
    for d, layer in bfs_layers(system, start, radius, max_states):
        for w in layer:
            out[w] = d
    return out


def equivalent_within(system: ThueSystem, p: Sequence[str], q: Sequence[str], depth: int,
                      max_states: int = DEFAULT_MAX_STATES):
    """Breadth-first search from ``p`` for ``q`` up to ``depth`` steps.

    ``NotFoundWithinDepth`` says nothing about inequivalence.
    """
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    q = system.check_word(q)
    try:
        for d, layer in bfs_layers(system, p, depth, max_states):
            if q in layer:
                return EquivalentAtDepth(d)
    except OverflowError as exc:
        done, states = exc.args
        return Exhausted(done, states)
    return NotFoundWithinDepth(depth)


def parse_thue(text: str) -> ThueSystem:
    """Read ``alphabet: s1 s2`` and ``rule: lhs <-> rhs`` lines (``#`` comments)."""
    alphabet = None
    rules = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, rest = line.partition(":")
        key = key.strip()
        if key == "alphabet":
            alphabet = tuple(rest.split())
        elif key == "rule":
            if "<->" not in rest:
                raise ThueError(f"line {lineno}: rule needs '<->'")
            lhs, rhs = rest.split("<->")
            rules.append((positive_word(lhs), positive_word(rhs)))
        else:
            raise ThueError(f"line {lineno}: unknown key {key!r}")
    if alphabet is None:
        raise ThueError("missing 'alphabet:' line")
    return ThueSystem(alphabet, tuple(rules))


def format_thue(system: ThueSystem) -> str:
    lines = ["alphabet: " + " ".join(system.alphabet)]
    for lhs, rhs in system.rules:
        lines.append(f"rule: {' '.join(lhs)} <-> {' '.join(rhs)}")
    return "\n".join(lines) + "\n"
