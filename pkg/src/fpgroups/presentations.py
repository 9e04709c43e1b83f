"""Finite group presentations and the bookkeeping done on them.

Relations written as equations ``u = v`` are stored as the relator
``u v^-1``; every stored relator is freely and cyclically reduced.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from fpgroups.words import (
    IDENTITY,
    Word,
    check_generator,
    cyclic_reduce,
    exponent_sum,
    format_word,
    parse_word,
    reduce,
    substitute,
)


class PresentationError(ValueError):
    pass


def relator(lhs: Word, rhs: Word = IDENTITY) -> Word:
    """The relator ``lhs rhs^-1``, freely reduced."""
    return reduce(lhs * rhs.inverse())


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relations: tuple[Word, ...]
    names: tuple[str, ...] = field(default=(), compare=False)
    flags: frozenset[str] = field(default=frozenset(), compare=False)

    def __post_init__(self):
        gens = tuple(check_generator(g) for g in self.generators)
        if len(set(gens)) != len(gens):
            raise PresentationError("repeated generator")
        rels = tuple(cyclic_reduce(r) for r in self.relations)
        known = set(gens)
        for r in rels:
            extra = r.generators() - known
            if extra:
                raise PresentationError(f"relator {r} uses unknown generators {sorted(extra)}")
        names = tuple(self.names)
        if names and len(names) != len(rels):
            raise PresentationError("names must match relations one-to-one")
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "relations", rels)
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "flags", frozenset(self.flags))

    @property
    def n(self) -> int:
        return len(self.generators)

    @property
    def m(self) -> int:
        return len(self.relations)

    def index(self) -> dict[str, int]:
        return {g: i for i, g in enumerate(self.generators)}

    def name_of(self, i: int) -> str:
        return self.names[i] if self.names else str(i)

    def relation_index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"no relation named {name!r}") from None

    def with_relations(self, extra: Iterable[Word], names: Sequence[str] = ()) -> "Presentation":
        extra = tuple(extra)
        new_names = ()
        if self.names or names:
            base = self.names or tuple(str(i) for i in range(self.m))
            tail = tuple(names) or tuple(str(self.m + i) for i in range(len(extra)))
            new_names = base + tail
        return Presentation(self.generators, self.relations + extra, new_names, self.flags)


def deficiency(p: Presentation) -> int:
    return p.m - p.n


def cyclic_shifts(codes: Sequence[int]) -> list[tuple[int, ...]]:
    n = len(codes)
    return [tuple(codes[i:]) + tuple(codes[:i]) for i in range(n)]


def inverse_codes(codes: Sequence[int]) -> tuple[int, ...]:
    return tuple(-c for c in reversed(codes))


def closure_codes(p: Presentation) -> list[tuple[int, ...]]:
    """Symmetric closure as signed letter codes, one entry per (relator, shift, sign).

    Periodic relators contribute repeated words; use ``set()`` for set semantics.
    """
    idx = p.index()
    out = []
    for r in p.relations:
        c = r.codes(idx)
        if not c:
            continue
        out.extend(cyclic_shifts(c))
        out.extend(cyclic_shifts(inverse_codes(c)))
    return out


def symmetric_closure(p: Presentation) -> set[Word]:
    return {Word.from_codes(c, p.generators) for c in set(closure_codes(p))}


def specialize(p: Presentation, kill: Iterable[str]) -> Presentation:
    """Send the generators in ``kill`` to the identity and drop relators that vanish."""
    kill = set(kill)
    unknown = kill - set(p.generators)
    if unknown:
        raise PresentationError(f"cannot kill unknown generators {sorted(unknown)}")
    if not kill:
        return p
    images = {g: (IDENTITY if g in kill else Word.gen(g)) for g in p.generators}
    gens = tuple(g for g in p.generators if g not in kill)
    rels, names = [], []
    for i, r in enumerate(p.relations):
        s = cyclic_reduce(substitute(r, images))
        if s:
            rels.append(s)
            names.append(p.name_of(i))
    return Presentation(gens, tuple(rels), tuple(names) if p.names else (), p.flags)


def abelianization_matrix(p: Presentation) -> list[list[int]]:
    return [[exponent_sum(r, g) for g in p.generators] for r in p.relations]


# -- trivialization scripts ------------------------------------------------

@dataclass(frozen=True)
class AllKilled:
    pass


@dataclass(frozen=True)
class Stuck:
    step: int
    residue: Word


def trivialization_replay(p: Presentation, script: Sequence[tuple[int, str]]):
    """Replay a "relation i kills generator g" script.

    A step succeeds when relation ``i``, with the previous victims sent to the
    identity, cyclically reduces to ``g`` or ``g^-1``.
    """
    victims = [v for _, v in script]
    if len(set(victims)) != len(victims):
        raise PresentationError("a generator is killed twice in the script")
    for i, v in script:
        if not 0 <= i < p.m:
            raise PresentationError(f"relation index {i} out of range")
        if v not in p.generators:
            raise PresentationError(f"unknown victim {v!r}")
    killed: set[str] = set()
    for step, (i, v) in enumerate(script):
        images = {g: (IDENTITY if g in killed else Word.gen(g)) for g in p.generators}
        residue = cyclic_reduce(substitute(p.relations[i], images))
        if len(residue.syllables) != 1 or residue.syllables[0] not in ((v, 1), (v, -1)):
            return Stuck(step, residue)
        killed.add(v)
    if killed != set(p.generators):
        return Stuck(len(script), IDENTITY)
    return AllKilled()


# -- text and JSON formats -------------------------------------------------

def format_presentation(p: Presentation) -> str:
    lines = ["gens: " + " ".join(p.generators)]
    for i, r in enumerate(p.relations):
        tag = f"  # {p.names[i]}" if p.names else ""
        lines.append(f"rel: {format_word(r)}{tag}")
    return "\n".join(lines) + "\n"


def parse_presentation(text: str) -> Presentation:
    """Read the ``gens:`` / ``rel:`` text format, or the JSON mirror."""
    if text.lstrip().startswith("{"):
        return presentation_from_json(json.loads(text))
    gens = None
    rels, names = [], []
    for lineno, raw in enumerate(text.splitlines(), 1):
        body, _, comment = raw.partition("#")
        body = body.strip()
        if not body:
            continue
        key, _, rest = body.partition(":")
        key = key.strip()
        if key == "gens":
            gens = tuple(rest.split())
        elif key == "rel":
            rels.append(parse_word(rest))
            names.append(comment.strip())
        else:
            raise PresentationError(f"line {lineno}: unknown key {key!r}")
    if gens is None:
        raise PresentationError("missing 'gens:' line")
    keep_names = all(names) and names
    return Presentation(gens, tuple(rels), tuple(names) if keep_names else ())


def presentation_to_json(p: Presentation) -> dict:
    out = {
        "generators": list(p.generators),
        "relations": [[[g, e] for g, e in r.syllables] for r in p.relations],
    }
    if p.names:
        out["names"] = list(p.names)
    return out


def presentation_from_json(data: dict) -> Presentation:
    rels = tuple(Word(tuple((g, int(e)) for g, e in r)) for r in data["relations"])
    return Presentation(tuple(data["generators"]), rels, tuple(data.get("names", ())))
