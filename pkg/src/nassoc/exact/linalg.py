"""Exact dense and sparse linear algebra.

Dense routines work over any field whose elements support +, -, *, / and
compare equal to 0; callers pass explicit zero/one elements for fields other
than the rationals.  Pivoting is always "first nonzero in column order" so
results are deterministic.  Integer rank is also available through
fraction-free Bareiss elimination.

The SparseRREF accumulator maintains a reduced row-echelon basis of a
growing subspace of Q^n with sparse rows; it is the workhorse behind the
consequence-space computations, where generated relations have very few
nonzero entries.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from math import gcd

Q0 = Fraction(0)
Q1 = Fraction(1)


# ---------------------------------------------------------------------------
# dense matrices


def mat_copy(m):
    return [list(row) for row in m]


def rref(matrix, zero=Q0, one=Q1):
    """Reduced row echelon form; returns (pivot column list, row list)."""
    rows = mat_copy(matrix)
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for j in range(ncols):
        pivot_row = None
        for i in range(r, nrows):
            if rows[i][j] != zero:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = one / rows[r][j]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][j] != zero:
                c = rows[i][j]
                rows[i] = [a - c * b for a, b in zip(rows[i], rows[r])]
        pivots.append(j)
        r += 1
    return pivots, rows[: len(pivots)]


def rank(matrix, zero=Q0, one=Q1):
    if not matrix:
        return 0
    if all(isinstance(x, (int, Fraction)) for x in matrix[0]):
        return bareiss_rank(matrix)
    return len(rref(matrix, zero, one)[0])


def bareiss_rank(matrix) -> int:
    """Rank over Q by fraction-free elimination on a denominator-cleared copy."""
    rows = []
    for row in matrix:
        fr = [Fraction(x) for x in row]
        mult = 1
        for x in fr:
            mult = mult * x.denominator // gcd(mult, x.denominator)
        rows.append([int(x * mult) for x in fr])
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    prev = 1
    r = 0
    for j in range(ncols):
        if r == nrows:
            break
        pivot_row = None
        for i in range(r, nrows):
            if rows[i][j] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        p = rows[r][j]
        for i in range(r + 1, nrows):
            ri, rr = rows[i], rows[r]
            ci = ri[j]
            for k in range(j, ncols):
                ri[k] = (p * ri[k] - ci * rr[k]) // prev
        prev = p
        r += 1
    return r


def nullspace(matrix, ncols=None, zero=Q0, one=Q1):
    """Basis of the right kernel, one vector per free column, ascending.

    Each vector is scaled so that its first nonzero coordinate is +1.
    """
    if ncols is None:
        if not matrix:
            raise ValueError("empty matrix needs an explicit column count")
        ncols = len(matrix[0])
    if not matrix:
        matrix = [[zero] * ncols]
    pivots, rows = rref(matrix, zero, one)
    pivot_set = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        v = [zero] * ncols
        v[f] = one
        for r, c in enumerate(pivots):
            v[c] = zero - rows[r][f]
        for x in v:
            if x != zero:
                inv = one / x
                v = [inv * y for y in v]
                break
        basis.append(v)
    return basis


def solve_right(matrix, rhs_columns, zero=Q0, one=Q1):
    """Solve M X = B for X given B as a list of columns; M must be square invertible."""
    n = len(matrix)
    aug = [list(matrix[i]) + [col[i] for col in rhs_columns] for i in range(n)]
    pivots, rows = rref(aug, zero, one)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    cols = []
    for k in range(len(rhs_columns)):
        cols.append([rows[i][n + k] for i in range(n)])
    return cols


def inverse(matrix, zero=Q0, one=Q1):
    n = len(matrix)
    eye = [[one if i == j else zero for i in range(n)] for j in range(n)]
    cols = solve_right(matrix, eye, zero, one)
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def det(matrix, zero=Q0, one=Q1):
    rows = mat_copy(matrix)
    n = len(rows)
    sign = 1
    result = one
    for j in range(n):
        pivot_row = None
        for i in range(j, n):
            if rows[i][j] != zero:
                pivot_row = i
                break
        if pivot_row is None:
            return zero
        if pivot_row != j:
            rows[j], rows[pivot_row] = rows[pivot_row], rows[j]
            sign = -sign
        p = rows[j][j]
        result = result * p
        inv = one / p
        for i in range(j + 1, n):
            if rows[i][j] != zero:
                c = rows[i][j] * inv
                rows[i] = [a - c * b for a, b in zip(rows[i], rows[j])]
    return result if sign == 1 else zero - result


def matmul(a, b, zero=Q0):
    n, m, k = len(a), len(b[0]), len(b)
    out = [[zero] * m for _ in range(n)]
    for i in range(n):
        for l in range(k):
            x = a[i][l]
            if x != zero:
                row_b = b[l]
                row_o = out[i]
                for j in range(m):
                    row_o[j] = row_o[j] + x * row_b[j]
    return out


def matvec(a, v, zero=Q0):
    out = []
    for row in a:
        s = zero
        for x, y in zip(row, v):
            if x != zero and y != zero:
                s = s + x * y
        out.append(s)
    return out


# ---------------------------------------------------------------------------
# sparse incremental RREF over Q


class SparseRREF:
    """Reduced row-echelon basis of a growing subspace of Q^ncols.

    Vectors are dicts {position: Fraction}.  An optional priority order on
    positions steers where pivots land: positions earlier in `order` are
    eliminated first, so the final free positions are the late ones.  Rows
    are kept fully reduced at all times.
    """

    def __init__(self, ncols: int, order=None):
        self.ncols = ncols
        if order is None:
            self.to_priority = None
            self.from_priority = None
        else:
            if sorted(order) != list(range(ncols)):
                raise ValueError("order must be a permutation of range(ncols)")
            self.from_priority = list(order)
            self.to_priority = [0] * ncols
            for pr, col in enumerate(order):
                self.to_priority[col] = pr
        self.rows: dict[int, dict[int, Fraction]] = {}
        self.where: dict[int, set[int]] = {}  # non-pivot position -> pivots using it

    @property
    def rank(self) -> int:
        return len(self.rows)

    def _encode(self, vec):
        if self.to_priority is None:
            return {p: c for p, c in vec.items() if c != 0}
        tp = self.to_priority
        return {tp[p]: c for p, c in vec.items() if c != 0}

    def _decode(self, vec):
        if self.from_priority is None:
            return dict(vec)
        fp = self.from_priority
        return {fp[p]: c for p, c in vec.items()}

    def _reduce_internal(self, work: dict[int, Fraction]) -> dict[int, Fraction]:
        heap = sorted(work)
        heapq.heapify(heap)
        while heap:
            p = heapq.heappop(heap)
            c = work.get(p)
            if not c:
                continue
            row = self.rows.get(p)
            if row is None:
                continue
            del work[p]
            for q, rc in row.items():
                if q == p:
                    continue
                nv = work.get(q, Q0) - c * rc
                if nv == 0:
                    work.pop(q, None)
                else:
                    if q not in work:
                        heapq.heappush(heap, q)
                    work[q] = nv
        return work

    def reduce(self, vec) -> dict[int, Fraction]:
        """Residual of vec modulo the current subspace (in original positions)."""
        return self._decode(self._reduce_internal(self._encode(vec)))

    def contains(self, vec) -> bool:
        return not self._reduce_internal(self._encode(vec))

    def insert(self, vec) -> bool:
        """Add vec to the subspace.  Returns True when the rank grew."""
        work = self._reduce_internal(self._encode(vec))
        if not work:
            return False
        lead = min(work)
        inv = Q1 / work[lead]
        row = {q: c * inv for q, c in work.items()}
        # keep existing rows fully reduced with respect to the new pivot
        users = self.where.pop(lead, None)
        if users:
            for p in sorted(users):
                other = self.rows[p]
                c = other.pop(lead)
                for q, rc in row.items():
                    if q == lead:
                        continue
                    nv = other.get(q, Q0) - c * rc
                    if nv == 0:
                        if q in other:
                            del other[q]
                            self.where[q].discard(p)
                    else:
                        if q not in other:
                            self.where.setdefault(q, set()).add(p)
                        other[q] = nv
        self.rows[lead] = row
        for q in row:
            if q != lead:
                self.where.setdefault(q, set()).add(lead)
        return True

    def basis(self):
        """Rows as vectors in original positions, sorted by pivot priority."""
        return [self._decode(self.rows[p]) for p in sorted(self.rows)]

    def pivot_positions(self):
        """Pivot positions in original coordinates, sorted by priority."""
        if self.from_priority is None:
            return sorted(self.rows)
        return [self.from_priority[p] for p in sorted(self.rows)]
