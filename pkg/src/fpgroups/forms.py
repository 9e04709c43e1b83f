"""Integral symmetric bilinear forms: signature, parity, classification of the
indefinite unimodular ones, and the boundary-recognition dichotomy.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from fpgroups.homology import det as _det


class FormError(ValueError):
    pass


@dataclass(frozen=True)
class FormMatrix:
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.entries)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise FormError("form matrix must be square")
        if any(rows[i][j] != rows[j][i] for i in range(n) for j in range(i)):
            raise FormError("form matrix must be symmetric")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def of(cls, rows: Sequence[Sequence[int]]) -> "FormMatrix":
        return cls(tuple(tuple(r) for r in rows))

    @property
    def rank(self) -> int:
        return len(self.entries)

    def __call__(self, x: Sequence[int], y: Sequence[int]) -> int:
        return sum(x[i] * self.entries[i][j] * y[j] for i in range(self.rank) for j in range(self.rank))

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]


def diagonal(*values: int) -> FormMatrix:
    n = len(values)
    return FormMatrix.of([[values[i] if i == j else 0 for j in range(n)] for i in range(n)])


def hyperbolic() -> FormMatrix:
    return FormMatrix.of([[0, 1], [1, 0]])


_E8_EDGES = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (2, 7)]


def e8() -> FormMatrix:
    """Cartan matrix of E8: 2 on the diagonal, -1 on Dynkin-adjacent nodes."""
    m = [[2 if i == j else 0 for j in range(8)] for i in range(8)]
    for i, j in _E8_EDGES:
        m[i][j] = m[j][i] = -1
    return FormMatrix.of(m)


def direct_sum(*forms: FormMatrix) -> FormMatrix:
    n = sum(f.rank for f in forms)
    m = [[0] * n for _ in range(n)]
    off = 0
    for f in forms:
        for i, row in enumerate(f.entries):
            m[off + i][off:off + f.rank] = row
        off += f.rank
    return FormMatrix.of(m)


def determinant(f: FormMatrix) -> int:
    return _det([list(r) for r in f.entries])


def diagonalize(f: FormMatrix) -> list[Fraction]:
    """Diagonal of a rational congruence diagonalization (zeros kept).

    When every remaining diagonal entry is zero but some off-diagonal
    ``a_ij`` is not, basis vector ``e_i`` is replaced by ``e_i + e_j``,
    whose square ``2 a_ij`` is nonzero.
    """
    n = f.rank
    m = [[Fraction(x) for x in r] for r in f.entries]
    out = []
    for k in range(n):
        piv = next((i for i in range(k, n) if m[i][i]), None)
        if piv is None:
            pair = next(((i, j) for i in range(k, n) for j in range(i + 1, n) if m[i][j]), None)
            if pair is None:
                out.extend([Fraction(0)] * (n - k))
                return out
            i, j = pair
            for t in range(n):  # row_i += row_j, col_i += col_j
                m[i][t] += m[j][t]
            for t in range(n):
                m[t][i] += m[t][j]
            piv = i
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            for row in m:
                row[k], row[piv] = row[piv], row[k]
        p = m[k][k]
        for i in range(k + 1, n):
            q = m[i][k] / p
            if q:
                for t in range(k, n):
                    m[i][t] -= q * m[k][t]
                for t in range(k, n):
                    m[t][i] -= q * m[t][k]
        out.append(p)
    return out


def inertia(f: FormMatrix) -> tuple[int, int, int]:
    """(positive, negative, zero) counts."""
    d = diagonalize(f)
    return sum(x > 0 for x in d), sum(x < 0 for x in d), sum(x == 0 for x in d)


def signature(f: FormMatrix) -> int:
    pos, neg, zero = inertia(f)
    if zero:
        raise FormError("signature needs a nonsingular form")
    return pos - neg


def is_unimodular(f: FormMatrix) -> bool:
    return determinant(f) in (1, -1)


def parity(f: FormMatrix) -> str:
    # Q(x) = sum a_ii x_i^2 + 2 sum_{i<j} a_ij x_i x_j, so Q is even iff every a_ii is
    return "even" if all(f.entries[i][i] % 2 == 0 for i in range(f.rank)) else "odd"


def definiteness(f: FormMatrix) -> str:
    pos, neg, zero = inertia(f)
    if zero:
        raise FormError("definiteness needs a nonsingular form")
    if neg == 0:
        return "positive"
    if pos == 0:
        return "negative"
    return "indefinite"


# -- classification --------------------------------------------------------

@dataclass(frozen=True)
class OddIndefinite:
    p: int
    q: int

    @property
    def strict_bounds(self) -> bool:
        """False when p or q equals 1 (the printed statement asks for more than one)."""
        return self.p > 1 and self.q > 1


@dataclass(frozen=True)
class EvenIndefinite:
    sign: int
    r: int
    s: int


@dataclass(frozen=True)
class Definite:
    sign: int


@dataclass(frozen=True)
class NotUnimodular:
    det: int


@dataclass(frozen=True)
class ZeroRank:
    pass


@dataclass(frozen=True)
class Inconsistent:
    """Even indefinite invariants that no unimodular form realizes."""

    rank: int
    signature: int


def classify(f: FormMatrix):
    if f.rank == 0:
        return ZeroRank()
    d = determinant(f)
    if d not in (1, -1):
        return NotUnimodular(d)
    kind = definiteness(f)
    if kind != "indefinite":
        return Definite(1 if kind == "positive" else -1)
    sig = signature(f)
    if parity(f) == "odd":
        return OddIndefinite((f.rank + sig) // 2, (f.rank - sig) // 2)
    if sig % 8:
        return Inconsistent(f.rank, sig)
    r = abs(sig) // 8
    two_s = f.rank - 8 * r
    if two_s < 2 or two_s % 2:
        return Inconsistent(f.rank, sig)
    return EvenIndefinite(1 if sig >= 0 else -1, r, two_s // 2)


@dataclass(frozen=True)
class SphereBundleSum:
    """Form of the connected sum of k copies of S^2 x S^2."""

    k: int


@dataclass(frozen=True)
class CPSum:
    """Form of the connected sum of k copies of CP^2 # -CP^2."""

    k: int


@dataclass(frozen=True)
class CannotBound:
    signature: int


@dataclass(frozen=True)
class OutOfScope:
    pass


def recognize_boundary(f: FormMatrix):
    """Which closed simply connected 4-manifold bounding a 5-manifold has this form.

    A nonzero signature rules out bounding at all. A zero-signature form of
    rank 2k is the form of k copies of S^2 x S^2 when even, of
    CP^2 # -CP^2 when odd.
    """
    if f.rank == 0:
        return OutOfScope()
    if not is_unimodular(f):
        raise FormError("recognition needs a unimodular form")
    sig = signature(f)
    if sig != 0:
        return CannotBound(sig)
    k = f.rank // 2
    return SphereBundleSum(k) if parity(f) == "even" else CPSum(k)


def form_from_json(data) -> FormMatrix:
    return FormMatrix.of([[int(x) for x in row] for row in data])
