"""Exact linear algebra over Z, Z/N, Z2 and the torus Q/Z.

* :class:`IntegerEchelon` -- row echelon form ``H = U @ D`` with a unimodular
  ``U`` (numpy, int64 with an automatic switch to Python integers on
  overflow).  Its zero rows give the integer left kernel of ``D``; a vector
  ``r`` of Q/Z lies in the image of ``D`` over the torus iff every left-kernel
  row pairs with it to an integer.
* :func:`smith_normal_form` -- ``U @ M @ V = S`` with transforms, pure Python,
  for the small matrices of the classification driver.
* :class:`HowellBasis` -- canonical form of a subgroup of ``(Z/N)^k``; reduction
  modulo it returns the lexicographically least coset representative.
* GF(2) helpers for the kappa-level linear systems.
"""

from fractions import Fraction
from math import gcd

import numpy as np

_LIMIT = 1 << 62


def xgcd(a, b):
    """Return ``(x, y, g)`` with ``x*a + y*b == g == gcd(a, b) >= 0``."""
    x, nx, y, ny, g, ng = 1, 0, 0, 1, a, b
    while ng:
        q = g // ng
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
        g, ng = ng, g - q * ng
    if g < 0:
        x, y, g = -x, -y, -g
    return x, y, g


class _Overflow(Exception):
    pass


def _absmax(a):
    if a.size == 0:
        return 0
    return int(np.max(np.abs(a)))


def _echelon_inplace(A, ncols, guard):
    """Row-reduce ``A`` in place, choosing pivots among the first ``ncols`` columns."""
    m = A.shape[0]
    r = 0
    pivots = []
    for j in range(ncols):
        if r == m:
            break
        while True:
            col = A[r:, j]
            nz = np.nonzero(col != 0)[0]
            if len(nz) == 0:
                break
            k = r + nz[int(np.argmin(np.abs(col[nz])))]
            if k != r:
                A[[r, k]] = A[[k, r]]
            if A[r, j] < 0:
                A[r] = -A[r]
            if len(nz) == 1:
                break
            p = A[r, j]
            rows = r + 1 + np.nonzero(A[r + 1:, j] != 0)[0]
            if len(rows) == 0:
                break
            q = (A[rows, j] + p // 2) // p
            if guard and _absmax(q) * _absmax(A[r]) + _absmax(A[rows]) >= _LIMIT:
                raise _Overflow
            A[rows] -= q[:, None] * A[r][None, :]
        if r < m and A[r, j] != 0:
            pivots.append((r, j))
            r += 1
    return pivots


def _run_echelon(A, ncols):
    A64 = np.array(A, dtype=np.int64)
    try:
        piv = _echelon_inplace(A64, ncols, guard=True)
        return A64, piv
    except _Overflow:
        Aobj = np.array(A, dtype=object)
        piv = _echelon_inplace(Aobj, ncols, guard=False)
        return Aobj, piv


class IntegerEchelon:
    """Row echelon form of an integer matrix with its unimodular transform.

    >>> E = IntegerEchelon(np.array([[2], [2]]))
    >>> E.rank, E.left_kernel().tolist()
    (1, [[-1, 1]])
    """

    def __init__(self, D):
        D = np.asarray(D)
        m, n = D.shape
        aug = np.concatenate([D.astype(object) if D.dtype == object else D.astype(np.int64),
                              np.eye(m, dtype=np.int64)], axis=1)
        A, piv = _run_echelon(aug, n)
        self.shape = (m, n)
        self.H = A[:, :n]
        self.U = A[:, n:]
        self.pivots = piv
        self.rank = len(piv)

    def left_kernel(self):
        """Integer basis of ``{u : u @ D == 0}`` (rows)."""
        return self.U[self.rank:]

    def membership(self, rhs, N):
        """Return ``None`` if ``rhs/N`` lies in ``D(T^n)`` mod 1, else a violated left-kernel row."""
        L = self.left_kernel()
        if L.shape[0] == 0:
            return None
        vals = _matvec(L, rhs) % N
        bad = np.nonzero(vals != 0)[0]
        if len(bad):
            return np.array(L[bad[0]])
        return None

    def solve_torus(self, rhs, N):
        """Solve ``D x = rhs/N`` over Q/Z.

        Returns ``(x_numerators, x_denominator)`` or ``None`` when ``rhs`` is not
        in the image.  Free coordinates are set to 0.
        """
        y = _matvec(self.U, rhs)
        for i in range(self.rank, self.shape[0]):
            if int(y[i]) % N:
                return None
        x = [Fraction(0)] * self.shape[1]
        H = self.H
        for i, j in reversed(self.pivots):
            s = Fraction(int(y[i]), N)
            row = H[i]
            nzc = np.nonzero(row[j + 1:] != 0)[0] + j + 1
            for c in nzc:
                s -= int(row[c]) * x[c]
            v = s / int(row[j])
            x[j] = v - (v.numerator // v.denominator)
        den = 1
        for v in x:
            den = den * v.denominator // gcd(den, v.denominator)
        num = [v.numerator * (den // v.denominator) for v in x]
        return num, den


def _matvec(M, v):
    v = np.asarray(v)
    if M.dtype == object or v.dtype == object:
        return np.array(M, dtype=object) @ np.array(v, dtype=object)
    bound = _absmax(M) * _absmax(v) * max(M.shape[1], 1)
    if bound >= _LIMIT:
        return np.array(M, dtype=object) @ np.array(v, dtype=object)
    return M @ v


def solve_torus(D, rhs, N):
    """One-off torus solve of ``D x = rhs/N`` (only the right-hand side is carried)."""
    D = np.asarray(D, dtype=np.int64)
    m, n = D.shape
    aug = np.concatenate([D, np.asarray(rhs, dtype=np.int64).reshape(m, 1)], axis=1)
    A, piv = _run_echelon(aug, n)
    rank = len(piv)
    for i in range(rank, m):
        if int(A[i, n]) % N:
            return None
    x = [Fraction(0)] * n
    for i, j in reversed(piv):
        s = Fraction(int(A[i, n]), N)
        row = A[i, :n]
        for c in np.nonzero(row[j + 1:] != 0)[0] + j + 1:
            s -= int(row[c]) * x[c]
        v = s / int(row[j])
        x[j] = v - (v.numerator // v.denominator)
    den = 1
    for v in x:
        den = den * v.denominator // gcd(den, v.denominator)
    return [v.numerator * (den // v.denominator) for v in x], den


class SmithForm:
    """``U @ M @ V == diag(S)`` with ``U_inv == U^-1``; all matrices are lists of Python ints."""

    def __init__(self, U, U_inv, V, diag, shape):
        self.U = U
        self.U_inv = U_inv
        self.V = V
        self.diag = diag
        self.shape = shape

    @property
    def rank(self):
        return len(self.diag)


def smith_normal_form(M):
    """Smith normal form with transforms (divisibility chain enforced)."""
    A = [[int(x) for x in row] for row in np.asarray(M).tolist()]
    m = len(A)
    n = len(A[0]) if m else np.asarray(M).shape[1]
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    Ui = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, k):
        A[i], A[k] = A[k], A[i]
        U[i], U[k] = U[k], U[i]
        for row in Ui:
            row[i], row[k] = row[k], row[i]

    def swap_cols(j, k):
        for row in A:
            row[j], row[k] = row[k], row[j]
        for row in V:
            row[j], row[k] = row[k], row[j]

    def add_row(i, t, q):
        # row_i += q * row_t
        if q == 0:
            return
        Ai, At = A[i], A[t]
        for c in range(n):
            if At[c]:
                Ai[c] += q * At[c]
        Uu, Ut = U[i], U[t]
        for c in range(m):
            if Ut[c]:
                Uu[c] += q * Ut[c]
        for row in Ui:
            if row[i]:
                row[t] -= q * row[i]

    def add_col(j, t, q):
        # col_j += q * col_t
        if q == 0:
            return
        for row in A:
            if row[t]:
                row[j] += q * row[t]
        for row in V:
            if row[t]:
                row[j] += q * row[t]

    diag = []
    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            Ai = A[i]
            for j in range(t, n):
                if Ai[j] and (best is None or abs(Ai[j]) < best[0]):
                    best = (abs(Ai[j]), i, j)
        if best is None:
            break
        _, i, j = best
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            p = A[t][t]
            clean = True
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // p))
                    if A[i][t]:
                        clean = False
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // p))
                    if A[t][j]:
                        clean = False
            if not clean:
                best = None
                for i in range(t, m):
                    if A[i][t] and (best is None or abs(A[i][t]) < best[0]):
                        best = (abs(A[i][t]), i, "r")
                for j in range(t, n):
                    if A[t][j] and (best is None or abs(A[t][j]) < best[0]):
                        best = (abs(A[t][j]), j, "c")
                if best[2] == "r":
                    swap_rows(t, best[1])
                else:
                    swap_cols(t, best[1])
                continue
            bad = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if A[i][j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(t, bad, 1)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]
            for row in Ui:
                row[t] = -row[t]
        diag.append(A[t][t])
        t += 1
    return SmithForm(U, Ui, V, diag, (m, n))


def _inv_unit(u, N):
    x, _, g = xgcd(u % N, N)
    if g != 1:
        raise ValueError(f"{u} is not a unit mod {N}")
    return x % N


def kernel_mod(M, N, smith=None):
    """Generators of ``{x in (Z/N)^n : M x == 0 mod N}`` as integer vectors."""
    sf = smith or smith_normal_form(M)
    m, n = sf.shape
    gens = []
    for i in range(n):
        col = [sf.V[r][i] for r in range(n)]
        if i < sf.rank:
            scale = N // gcd(sf.diag[i], N)
            if scale == N:
                continue
            col = [scale * c for c in col]
        gens.append([c % N for c in col])
    return [g for g in gens if any(g)]


def solve_mod(M, b, N, smith=None):
    """A solution of ``M x == b mod N`` or ``None``."""
    sf = smith or smith_normal_form(M)
    m, n = sf.shape
    b = [int(v) for v in b]
    y = [sum(sf.U[i][k] * b[k] for k in range(m) if sf.U[i][k]) % N for i in range(m)]
    z = [0] * n
    for i in range(m):
        if i < sf.rank:
            s = sf.diag[i]
            g = gcd(s, N)
            if y[i] % g:
                return None
            Ng = N // g
            z[i] = (y[i] // g) * _inv_unit(s // g, Ng) % Ng if Ng > 1 else 0
        elif y[i] % N:
            return None
    return [sum(sf.V[r][c] * z[c] for c in range(n) if z[c]) % N for r in range(n)]


def saturated_image_mod(M, N, smith=None):
    """Generators of ``(Q-span of columns of M  ∩  Z^m) mod N``.

    For an integer matrix ``D`` this is the set of N-torsion vectors lying in
    the torus image ``D(T^n)``.
    """
    sf = smith or smith_normal_form(M)
    m = sf.shape[0]
    gens = [[sf.U_inv[r][i] % N for r in range(m)] for i in range(sf.rank)]
    return [g for g in gens if any(g)]


def _unit_normalize(x, N):
    """Return ``(u, g)`` with ``u`` a unit mod N and ``u*x == g == gcd(x, N) mod N``."""
    x %= N
    g = gcd(x, N)
    if x == 0:
        return 1, 0
    Ng = N // g
    u = _inv_unit(x // g, Ng) if Ng > 1 else 1
    while gcd(u, N) != 1:
        u += Ng
    return u % N, g


class HowellBasis:
    """Canonical generating set of a subgroup ``K`` of ``(Z/N)^k``.

    ``reduce(v)`` depends only on the coset ``v + K`` and is its
    lexicographically least element (entries read in ``0..N-1``).

    >>> K = HowellBasis(4, 2, [[2, 1]])
    >>> K.reduce([3, 3]), K.reduce([1, 2])
    ([1, 0], [1, 0])
    """

    def __init__(self, N, k, gens=()):
        self.N = N
        self.k = k
        self.rows = {}  # pivot column -> row (list of ints), pivot divides N
        for g in gens:
            self.add(g)
        self._finish()

    def add(self, v):
        N = self.N
        stack = [[int(x) % N for x in v]]
        while stack:
            v = stack.pop()
            for j in range(self.k):
                if v[j] == 0:
                    continue
                row = self.rows.get(j)
                if row is None:
                    u, g = _unit_normalize(v[j], N)
                    v = [(u * x) % N for x in v]
                    self.rows[j] = v
                    stack.append([((N // g) * x) % N for x in v])
                    break
                p = row[j]
                if v[j] % p == 0:
                    q = v[j] // p
                    v = [(x - q * y) % N for x, y in zip(v, row)]
                    continue
                x, y, g = xgcd(p, v[j])
                new = [(x * a + y * b) % N for a, b in zip(row, v)]
                u, g2 = _unit_normalize(new[j], N)
                new = [(u * a) % N for a in new]
                self.rows[j] = new
                stack.append([((N // g2) * a) % N for a in new])
                stack.append(row)
                stack.append(v)
                break
        self._finished = False

    def _finish(self):
        cols = sorted(self.rows)
        for j in cols:
            piv = self.rows[j]
            for i in cols:
                if i >= j:
                    break
                row = self.rows[i]
                q = row[j] // piv[j]
                if q:
                    self.rows[i] = [(a - q * b) % self.N for a, b in zip(row, piv)]
        self._finished = True

    def reduce(self, v):
        if not self._finished:
            self._finish()
        N = self.N
        v = [int(x) % N for x in v]
        for j in sorted(self.rows):
            row = self.rows[j]
            q = v[j] // row[j]
            if q:
                v = [(a - q * b) % N for a, b in zip(v, row)]
        return v

    def contains(self, v):
        return not any(self.reduce(v))

    def order(self):
        """Number of elements of the subgroup."""
        size = 1
        for j, row in self.rows.items():
            size *= self.N // row[j]
        return size


# GF(2)

def gf2_rref(A):
    """Reduced row echelon form over GF(2); returns ``(R, pivot_columns)``."""
    R = np.array(A, dtype=np.uint8) & 1
    m, n = R.shape
    piv = []
    r = 0
    for j in range(n):
        if r == m:
            break
        nz = np.nonzero(R[r:, j])[0]
        if len(nz) == 0:
            continue
        k = r + nz[0]
        if k != r:
            R[[r, k]] = R[[k, r]]
        others = np.nonzero(R[:, j])[0]
        others = others[others != r]
        R[others] ^= R[r]
        piv.append(j)
        r += 1
    return R, piv


def gf2_solve(A, b):
    """Solve ``A x = b`` over GF(2).

    Returns ``(x0, kernel_basis)`` with kernel basis rows, or ``None``.
    """
    A = np.asarray(A, dtype=np.uint8) & 1
    b = np.asarray(b, dtype=np.uint8).reshape(-1, 1) & 1
    m, n = A.shape
    R, piv = gf2_rref(np.concatenate([A, b], axis=1))
    if n in piv:
        return None
    x0 = np.zeros(n, dtype=np.uint8)
    for r, j in enumerate(piv):
        x0[j] = R[r, n]
    free = [j for j in range(n) if j not in set(piv)]
    basis = []
    for f in free:
        v = np.zeros(n, dtype=np.uint8)
        v[f] = 1
        for r, j in enumerate(piv):
            v[j] = R[r, f]
        basis.append(v)
    kernel = np.array(basis, dtype=np.uint8).reshape(len(basis), n)
    return x0, kernel


def gf2_rank(A):
    return len(gf2_rref(A)[1])


class GF2Subspace:
    """Span of some GF(2) vectors with canonical coset reduction."""

    def __init__(self, vectors, n):
        vectors = np.asarray(vectors, dtype=np.uint8)
        vectors = vectors.reshape(-1, n) if n else np.zeros((0, 0), np.uint8)
        R, piv = gf2_rref(vectors) if len(vectors) else (np.zeros((0, n), np.uint8), [])
        self.basis = R[:len(piv)]
        self.pivots = piv
        self.n = n

    @property
    def dim(self):
        return len(self.pivots)

    def reduce(self, v):
        v = np.asarray(v, dtype=np.uint8).copy() & 1
        for r, j in enumerate(self.pivots):
            if v[j]:
                v ^= self.basis[r]
        return v

    def contains(self, v):
        return not self.reduce(v).any()
