"""Named presentations: Matiyasevich's Thue system, Borisov's B, B' and BE,
the imbalanced encoding, the 12-relator presentation R, and the
deficiency-preserving family P_w.

Relations are stored as relators ``u v^-1`` and carry names like ``"R3.2"``
so scripts can refer to them.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Mapping, Sequence

from fpgroups.presentations import Presentation, PresentationError, relator
from fpgroups.rewriting import PositiveWord, ThueSystem, positive_word
from fpgroups.words import IDENTITY, Word, cyclic_reduce, reduce, substitute

S1, S2 = "s1", "s2"

F1 = (S1, S1, S2, S1, S2)
F2 = (S1, S1, S2, S2)
E1 = E2 = (S2, S1, S1)

RULE3_LENGTHS = (304, 608)
STANDARD_P_LENGTH = 304

# Short stand-ins for the unpublished rule-3 words and the word P; anything
# built from them is flagged nonstandard.
STANDIN_RULE3: tuple[PositiveWord, PositiveWord] = ((S1, S2, S2, S1), (S2, S2, S1, S1))
STANDIN_P: PositiveWord = (S1, S2, S1, S1)


def gen(name: str, e: int = 1) -> Word:
    return Word.gen(name, e)


def product(*parts: Word) -> Word:
    out = IDENTITY
    for p in parts:
        out = out * p
    return out


def positive(letters: Sequence[str]) -> Word:
    return Word.from_letters((x, 1) for x in letters)


# -- Thue system -----------------------------------------------------------

def matiyasevich_system(third_rule: tuple[Sequence[str], Sequence[str]] | None = None) -> ThueSystem:
    """Rules 1 and 2 as printed; rule 3 only if the caller supplies ``(L, M)``."""
    rules = [(F1, E1), (F2, E2)]
    if third_rule is None:
        return ThueSystem((S1, S2), tuple(rules), incomplete=True)
    lhs, rhs = positive_word(third_rule[0]), positive_word(third_rule[1])
    nonstandard = (len(lhs), len(rhs)) != RULE3_LENGTHS
    if nonstandard:
        warnings.warn(
            f"third rule has lengths {(len(lhs), len(rhs))}, expected {RULE3_LENGTHS}",
            stacklevel=2,
        )
    rules.append((lhs, rhs))
    return ThueSystem((S1, S2), tuple(rules), incomplete=False, nonstandard=nonstandard)


# -- Borisov's B and B' ----------------------------------------------------

@dataclass(frozen=True)
class B4Params:
    """Exponent maps for the generalised (B4) relations, indexed by rule number 1..M."""

    g: Mapping[int, int]
    h: Mapping[int, int]
    gp: Mapping[int, int]
    hp: Mapping[int, int]
    alpha: int

    def validate(self, m: int) -> None:
        domain = set(range(1, m + 1))
        for name in ("g", "h", "gp", "hp"):
            f = dict(getattr(self, name))
            if set(f) != domain:
                raise PresentationError(f"{name} must be defined exactly on 1..{m}")
            if any(v < 1 for v in f.values()):
                raise PresentationError(f"{name} must take positive values")
            if len(set(f.values())) != len(f):
                raise PresentationError(f"{name} is not injective")
            if f and self.alpha <= max(f.values()):
                raise PresentationError(f"alpha={self.alpha} must exceed every value of {name}")
        if self.alpha <= m:
            raise PresentationError("alpha must exceed the number of rules")

    @classmethod
    def identity(cls, m: int, alpha: int | None = None) -> "B4Params":
        ident = {i: i for i in range(1, m + 1)}
        return cls(ident, ident, ident, ident, m + 1 if alpha is None else alpha)


# exponents used when deriving R from B'
R_PARAMS = B4Params(
    g={1: 1, 2: 3, 3: 4},
    h={1: 1, 2: 3, 3: 4},
    gp={1: 2, 2: 3, 3: 4},
    hp={1: 1, 2: 3, 3: 5},
    alpha=6,
)


def _flags(system: ThueSystem, p_word: Sequence[str]) -> set[str]:
    flags = set()
    if system.incomplete:
        flags.add("incomplete")
    if system.nonstandard:
        flags.add("nonstandard_rule3")
    if len(p_word) != STANDARD_P_LENGTH:
        flags.add("nonstandard_P")
    return flags


def _borisov(system: ThueSystem, p_word, params: B4Params) -> Presentation:
    p_word = system.check_word(positive_word(p_word))
    letters = system.alphabet
    m = len(system.rules)
    params.validate(m)
    alpha = params.alpha
    c, d, e, k, t = (gen(x) for x in "cdekt")
    rels, names = [], []

    def add(name, lhs, rhs):
        names.append(name)
        rels.append(relator(lhs, rhs))

    for s in letters:
        add(f"B1[{s}]", gen("d", alpha) * gen(s), gen(s) * d)
    for s in letters:
        add(f"B2[{s}]", e * gen(s), gen(s) * gen("e", alpha))
    for s in letters:
        add(f"B3[{s}]", gen(s) * c, c * gen(s))
    for i, (f, ee) in enumerate(system.rules, 1):
        add(f"B4[{i}]",
            product(gen("d", params.g[i]), positive(f), gen("e", params.h[i]), c),
            product(c, gen("d", params.gp[i]), positive(ee), gen("e", params.hp[i])))
    add("B5", c * t, t * c)
    add("B6", d * t, t * d)
    add("B7", c * k, k * c)
    add("B8", e * k, k * e)
    pw = positive(p_word)
    add("B9", product(pw.inverse(), t, pw, k), product(k, pw.inverse(), t, pw))
    gens = ("c", "d", "e", "k", "t") + letters
    return Presentation(gens, tuple(rels), tuple(names), _flags(system, p_word))


def borisov_B(system: ThueSystem, p_word, alpha: int | None = None) -> Presentation:
    m = len(system.rules)
    alpha = m + 1 if alpha is None else alpha
    if alpha <= m:
        raise PresentationError(f"alpha={alpha} must exceed the number of rules M={m}")
    return _borisov(system, p_word, B4Params.identity(m, alpha))


def borisov_Bprime(system: ThueSystem, p_word, params: B4Params) -> Presentation:
    return _borisov(system, p_word, params)


# -- encodings -------------------------------------------------------------

def borisov_mu_original(i: int) -> Word:
    """Balanced encoding of the i-th letter (a- and b-exponent sums are 0)."""
    if i < 1:
        raise ValueError("index must be positive")
    a, b = gen("a"), gen("b")
    ai, bi = a.inverse(), b.inverse()
    return reduce(product(ai, bi, a, gen("b", -i), a, bi, ai, gen("b", i),
                          ai, b, a, gen("b", -i), a, b, ai, gen("b", i)))


def _imbalanced(base: int) -> Word:
    signs_and_offsets = [(1, 0), (-1, 1), (-1, 2), (1, 3), (1, 4), (-1, 5), (-1, 6), (1, 8)]
    syl = []
    for sign, off in signs_and_offsets:
        e = sign * (base + off)
        syl += [("a", e), ("b", e)]
    return Word(tuple(syl))


MU_NEW: dict[str, Word] = {
    S1: _imbalanced(10),
    S2: _imbalanced(20),
    "k": _imbalanced(30),
    "t": _imbalanced(40),
}


def mu_new(letter: str) -> Word:
    try:
        return MU_NEW[letter]
    except KeyError:
        raise KeyError(f"no encoding for {letter!r}; expected one of {sorted(MU_NEW)}") from None


def mu_word(q: Sequence[str]) -> Word:
    """Encoding of a positive word over {s1, s2, k, t}, freely reduced."""
    return reduce(product(*(mu_new(x) for x in q)))


def encoding_words() -> list[Word]:
    return [MU_NEW[x] for x in (S1, S2, "k", "t")]


def encode_presentation(p: Presentation, images: Mapping[str, Word], c: str = "c") -> Presentation:
    """Replace letters by words in a, b; relators ``[y, c]`` become ``[a, c]``, ``[b, c]``.

    Letters absent from ``images`` are kept. Generators of the result are
    ``a, b`` followed by the kept generators in their original order.
    """
    encoded = set(images)
    keep = tuple(g for g in p.generators if g not in encoded)
    subst = {g: gen(g) for g in keep}
    subst.update(images)
    comm = {relator(gen(y) * gen(c), gen(c) * gen(y)) for y in encoded}
    comm |= {relator(gen(c) * gen(y), gen(y) * gen(c)) for y in encoded}
    comm = {cyclic_reduce(r) for r in comm}
    rels, names = [], []
    for i, r in enumerate(p.relations):
        if r in comm:
            continue
        rels.append(substitute(r, subst))
        names.append(p.name_of(i))
    rels += [relator(gen("a") * gen(c), gen(c) * gen("a")), relator(gen("b") * gen(c), gen(c) * gen("b"))]
    names += ["ac", "bc"]
    return Presentation(("a", "b") + keep, tuple(rels), tuple(names), p.flags)


def borisov_BE(system: ThueSystem, p_word, alpha: int | None = None) -> Presentation:
    p_word = system.check_word(positive_word(p_word))
    m, n = len(system.rules), len(system.alphabet)
    alpha = m + 1 if alpha is None else alpha
    if alpha <= m:
        raise PresentationError(f"alpha={alpha} must exceed the number of rules M={m}")
    mu = {s: borisov_mu_original(i) for i, s in enumerate(system.alphabet, 1)}
    mu["k"] = borisov_mu_original(n + 1)
    mu["t"] = borisov_mu_original(n + 2)

    def enc(letters):
        return reduce(product(*(mu[x] for x in letters)))

    c, d, e = gen("c"), gen("d"), gen("e")
    rels, names = [], []

    def add(name, lhs, rhs):
        names.append(name)
        rels.append(relator(lhs, rhs))

    for s in system.alphabet:
        add(f"BE1[{s}]", gen("d", alpha) * mu[s], mu[s] * d)
    for s in system.alphabet:
        add(f"BE2[{s}]", e * mu[s], mu[s] * gen("e", alpha))
    for i, (f, ee) in enumerate(system.rules, 1):
        add(f"BE4[{i}]", product(gen("d", i), enc(f), gen("e", i), c),
            product(c, gen("d", i), enc(ee), gen("e", i)))
    add("BE6", d * mu["t"], mu["t"] * d)
    add("BE8", e * mu["k"], mu["k"] * e)
    pw = enc(p_word)
    add("BE9", product(pw.inverse(), mu["t"], pw, mu["k"]), product(mu["k"], pw.inverse(), mu["t"], pw))
    add("BE10", gen("a") * c, c * gen("a"))
    add("BE11", gen("b") * c, c * gen("b"))
    return Presentation(("a", "b", "c", "d", "e"), tuple(rels), tuple(names), _flags(system, p_word))


# -- presentation R --------------------------------------------------------

def presentation_R(p_word, alpha: int = 6,
                   rule3: tuple[Sequence[str], Sequence[str]] | None = None,
                   allow_incomplete: bool = False) -> Presentation:
    """The 12-relator presentation on a, b, c, d, e.

    ``rule3`` gives the sides (F3, E3) of the third Thue rule. Without it the
    relator R3.3 is omitted, which requires ``allow_incomplete=True``.
    """
    if alpha <= 5:
        raise PresentationError(f"alpha={alpha} must be greater than 5")
    p_word = positive_word(p_word)
    letters = {S1, S2}
    if not set(p_word) <= letters:
        raise PresentationError("P must be a positive word over s1, s2")
    if rule3 is None and not allow_incomplete:
        raise PresentationError("rule3=(F3, E3) is required (or pass allow_incomplete=True)")
    flags = set()
    if len(p_word) != STANDARD_P_LENGTH:
        flags.add("nonstandard_P")
    c, d, e = gen("c"), gen("d"), gen("e")
    mu_t, mu_k = mu_new("t"), mu_new("k")
    rels, names = [], []

    def add(name, lhs, rhs):
        names.append(name)
        rels.append(relator(lhs, rhs))

    for s in (S1, S2):
        add(f"R1[{s}]", gen("d", alpha) * mu_new(s), mu_new(s) * d)
    for s in (S1, S2):
        add(f"R2[{s}]", e * mu_new(s), mu_new(s) * gen("e", alpha))
    add("R3.1", product(d, mu_word(F1), e, c), product(c, gen("d", 2), mu_word(E1), e))
    add("R3.2", product(gen("d", 3), mu_word(F2), gen("e", 3), c),
        product(c, gen("d", 3), mu_word(E2), gen("e", 3)))
    if rule3 is not None:
        f3, e3 = positive_word(rule3[0]), positive_word(rule3[1])
        if not f3 or not e3 or not set(f3) | set(e3) <= letters:
            raise PresentationError("rule 3 sides must be nonempty positive words over s1, s2")
        if (len(f3), len(e3)) != RULE3_LENGTHS:
            flags.add("nonstandard_rule3")
        add("R3.3", product(gen("d", 4), mu_word(f3), gen("e", 4), c),
            product(c, gen("d", 4), mu_word(e3), gen("e", 5)))
    else:
        flags.add("incomplete")
    add("R4", d * mu_t, mu_t * d)
    add("R5", e * mu_k, mu_k * e)
    mp = mu_word(p_word)
    add("R6", product(mp.inverse(), mu_t, mp, mu_k), product(mu_k, mp.inverse(), mu_t, mp))
    add("R7", gen("a") * c, c * gen("a"))
    add("R8", gen("b") * c, c * gen("b"))
    return Presentation(("a", "b", "c", "d", "e"), tuple(rels), tuple(names), flags)


def trivialization_script(p: Presentation) -> list[tuple[int, str]]:
    """Script killing a, c (added relators), then b, e, d, for R plus relators a and c."""
    return [
        (p.relation_index("kill_a"), "a"),
        (p.relation_index("kill_c"), "c"),
        (p.relation_index("R3.2"), "b"),
        (p.relation_index("R3.3"), "e"),
        (p.relation_index("R3.1"), "d"),
    ]


def trivialized_R(r: Presentation) -> Presentation:
    """R with relators ``a`` and ``c`` adjoined."""
    return r.with_relations([gen("a"), gen("c")], ["kill_a", "kill_c"])


# -- Adian-Rabin family ----------------------------------------------------

GREEK = ("alpha", "beta", "gamma")


def adian_rabin_P_w(p: Presentation, rprime: Sequence[Word], w: Word,
                    variant: str = "literal", relation3: str = "literal",
                    names: tuple[str, str, str] = GREEK) -> Presentation:
    """P plus three new generators and the relations (1)-(4) of the family.

    ``variant`` picks the left exponent of relation (4): ``"literal"`` uses
    ``-3+i``, ``"symmetric"`` uses ``-(3+i)``. ``relation3`` picks
    ``alpha^-3 w alpha^-3`` (``"literal"``) or ``alpha^-3 [w, beta] alpha^-3``
    (``"miller"``).
    """
    if variant not in ("literal", "symmetric"):
        raise ValueError(f"unknown variant {variant!r}")
    if relation3 not in ("literal", "miller"):
        raise ValueError(f"unknown relation3 form {relation3!r}")
    clash = set(names) & set(p.generators)
    if clash:
        raise PresentationError(f"generator names {sorted(clash)} already used")
    known = set(p.generators)
    for x in list(rprime) + [w]:
        if not x.generators() <= known:
            raise PresentationError(f"{x} uses generators outside the base presentation")
    al, be, ga = (lambda e=1, n=n: gen(n, e) for n in names)
    rels, rnames = [], []

    def add(name, lhs, rhs):
        rnames.append(name)
        rels.append(relator(lhs, rhs))

    add("AR1", product(al(-1), be(), al()), product(ga(-1), be(-1), ga(), be(), ga()))
    add("AR2", product(al(-2), be(-1), al(), be(), al(2)), product(ga(-2), be(-1), ga(), be(), ga(2)))
    middle = w if relation3 == "literal" else product(w.inverse(), be(-1), w, be())
    add("AR3", product(al(-3), middle, al(-3)), product(ga(-3), be(), ga(3)))
    for i, r in enumerate(rprime, 1):
        left = -3 + i if variant == "literal" else -(3 + i)
        add(f"AR4[{i}]", product(al(left), r, be(), al(3 + i)), product(ga(-(3 + i)), be(), ga(3 + i)))
    base_names = p.names or tuple(str(i) for i in range(p.m))
    return Presentation(p.generators + tuple(names), p.relations + tuple(rels),
                        base_names + tuple(rnames), p.flags)


def target_word(q: Sequence[str]) -> Word:
    """``mu(Q^-1) mu(t) mu(Q) mu(k) (mu(k) mu(Q^-1) mu(t) mu(Q))^-1``, reduced."""
    q = positive_word(q)
    if not set(q) <= {S1, S2}:
        raise ValueError("Q must be a positive word over s1, s2")
    mq = mu_word(q)
    mt, mk = mu_new("t"), mu_new("k")
    lhs = product(mq.inverse(), mt, mq, mk)
    rhs = product(mk, mq.inverse(), mt, mq)
    return reduce(lhs * rhs.inverse())
