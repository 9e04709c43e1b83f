"""Integer Smith normal form and homology of the one-vertex presentation complex."""
from __future__ import annotations

from dataclasses import dataclass

from fpgroups.presentations import Presentation, abelianization_matrix, deficiency

Matrix = list[list[int]]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if not a:
        return []
    cols = len(b[0]) if b else 0
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(cols)] for i in range(len(a))]


def det(a: Matrix) -> int:
    """Exact determinant by Bareiss fraction-free elimination."""
    n = len(a)
    if n == 0:
        return 1
    m = [row[:] for row in a]
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k]), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


@dataclass(frozen=True)
class SNFResult:
    diag: list[int]
    U: Matrix
    V: Matrix

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diag if d)


def smith_normal_form(a: Matrix, cols: int | None = None) -> SNFResult:
    """``U @ A @ V = D`` with unimodular ``U``, ``V`` and ``d1 | d2 | ...`` on the diagonal.

    ``cols`` is needed only for a matrix with no rows.
    """
    rows = len(a)
    ncols = len(a[0]) if rows else (cols or 0)
    m = [list(map(int, r)) for r in a]
    u, v = identity(rows), identity(ncols)

    def swap_rows(i, j):
        m[i], m[j] = m[j], m[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in m:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row_dst -= q * row_src
        m[dst] = [x - q * y for x, y in zip(m[dst], m[src])]
        u[dst] = [x - q * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, q):  # col_dst -= q * col_src
        for row in m:
            row[dst] -= q * row[src]
        for row in v:
            row[dst] -= q * row[src]

    def negate_row(i):
        m[i] = [-x for x in m[i]]
        u[i] = [-x for x in u[i]]

    for t in range(min(rows, ncols)):
        while True:
            # smallest nonzero |entry| in the trailing block
            piv = None
            for i in range(t, rows):
                for j in range(t, ncols):
                    if m[i][j] and (piv is None or abs(m[i][j]) < abs(m[piv[0]][piv[1]])):
                        piv = (i, j)
            if piv is None:
                break
            swap_rows(t, piv[0])
            swap_cols(t, piv[1])
            p = m[t][t]
            done = True
            for i in range(t + 1, rows):
                q = m[i][t] // p
                if q:
                    add_row(i, t, q)
                if m[i][t]:
                    done = False
            for j in range(t + 1, ncols):
                q = m[t][j] // p
                if q:
                    add_col(j, t, q)
                if m[t][j]:
                    done = False
            if not done:
                continue
            # divisibility: fold a non-multiple from the block into row t
            bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, ncols)
                        if m[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad[0], -1)
        if m[t][t] < 0:
            negate_row(t)
    diag = [m[i][i] for i in range(min(rows, ncols))]
    return SNFResult(diag, u, v)


def rank_bareiss(a: Matrix) -> int:
    """Rank by fraction-free elimination; independent of the SNF routine."""
    m = [list(r) for r in a]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    r, prev = 0, 1
    for c in range(cols):
        piv = next((i for i in range(r, rows) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, rows):
            for j in range(c + 1, cols):
                m[i][j] = (m[i][j] * m[r][c] - m[i][c] * m[r][j]) // prev
            m[i][c] = 0
        prev = m[r][c]
        r += 1
        if r == rows:
            break
    return r


@dataclass(frozen=True)
class HomologyGroup:
    betti: int
    torsion: tuple[int, ...] = ()

    def is_trivial(self) -> bool:
        return self.betti == 0 and not self.torsion

    def __str__(self) -> str:
        parts = (["Z"] if self.betti == 1 else [f"Z^{self.betti}"] if self.betti else [])
        parts += [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) or "0"


@dataclass(frozen=True)
class PresentationHomology:
    H0: HomologyGroup
    H1: HomologyGroup
    H2: HomologyGroup
    # 2 * deficiency: beta_2 of the boundary of the thickened complex when the
    # group is trivial. Reported, never computed.
    expected_boundary_beta2: int

    def euler_characteristic(self) -> int:
        return self.H0.betti - self.H1.betti + self.H2.betti


def presentation_homology(p: Presentation) -> PresentationHomology:
    """Cellular homology of the complex with one vertex, n loops and m disks.

    The boundary of the disk for relator ``r`` is its exponent-sum vector.
    """
    snf = smith_normal_form(abelianization_matrix(p), cols=p.n)
    rank = snf.rank
    torsion = tuple(d for d in snf.diag if d > 1)
    return PresentationHomology(
        H0=HomologyGroup(1),
        H1=HomologyGroup(p.n - rank, torsion),
        H2=HomologyGroup(p.m - rank),
        expected_boundary_beta2=2 * deficiency(p),
    )


def euler_characteristic(p: Presentation) -> int:
    return 1 - p.n + p.m


def in_row_span(a: Matrix, vec: list[int], cols: int | None = None) -> bool:
    """Whether ``vec`` is an integer combination of the rows of ``a``."""
    ncols = len(a[0]) if a else (cols if cols is not None else len(vec))
    snf = smith_normal_form(a, cols=ncols)
    # x A = vec  <=>  (x U^-1) D = vec V
    y = [sum(vec[k] * snf.V[k][j] for k in range(ncols)) for j in range(ncols)]
    for j in range(ncols):
        d = snf.diag[j] if j < len(snf.diag) else 0
        if d == 0:
            if y[j]:
                return False
        elif y[j] % d:
            return False
    return True
