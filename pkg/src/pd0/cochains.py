"""Dense doubled cochains ``G^n -> A + A`` and the twisted differentials.

A cochain of degree ``n`` keeps an integer array of shape ``(|G|,)*n + (2,)``;
the last axis is the component (0 = plus, 1 = minus).  Bit cochains hold
values in {0, 1}; phase cochains hold numerators over one shared
``denominator``, kept at the least common denominator of the entries.

The differential of degree ``n`` is

    d x(g0..gn) = x^{a(g0)}(g1..gn)
                  + sum_{i=1..n} (-1)^i x(g0, .., g_{i-1} g_i, .., gn)
                  + (-1)^{n+1} x(g0..g_{n-1})

written additively, where ``x^{a(g)}`` swaps the components when a(g) = 1.
"""

from functools import lru_cache
from math import gcd

import numpy as np

from .coefficients import Doubled, Phase

BIT = "bit"
PHASE = "phase"
KINDS = (BIT, PHASE)


def _lcm(a, b):
    return a * b // gcd(a, b)


class Cochain:
    """Immutable doubled cochain.  Group law written additively (``+``, ``-``)."""

    __slots__ = ("group", "degree", "kind", "values", "denominator")

    def __init__(self, group, degree, kind, values, denominator=1):
        if kind not in KINDS:
            raise ValueError(f"kind must be one of {KINDS}")
        if not 0 <= degree <= 4:
            raise ValueError("degree must be in 0..4")
        n = group.order
        vals = np.array(values, dtype=np.int64)
        shape = (n,) * degree + (2,)
        if vals.shape != shape:
            raise ValueError(f"expected values of shape {shape}, got {vals.shape}")
        if kind == BIT:
            denominator = 2
            vals %= 2
        else:
            if denominator < 1:
                raise ValueError("denominator must be >= 1")
            vals %= denominator
            g = int(np.gcd.reduce(vals.ravel(), initial=denominator))
            if g > 1:
                vals //= g
                denominator //= g
        vals.setflags(write=False)
        for name, v in (("group", group), ("degree", degree), ("kind", kind),
                        ("values", vals), ("denominator", int(denominator))):
            object.__setattr__(self, name, v)

    def __setattr__(self, name, value):
        raise AttributeError("Cochain is immutable")

    # construction helpers

    @classmethod
    def zero(cls, group, degree, kind):
        return cls(group, degree, kind, np.zeros((group.order,) * degree + (2,), dtype=np.int64))

    @classmethod
    def diagonal(cls, group, degree, kind, values, denominator=1):
        """Cochain with equal components from an undoubled array."""
        v = np.asarray(values, dtype=np.int64)
        return cls(group, degree, kind, np.stack([v, v], axis=-1), denominator)

    @classmethod
    def from_components(cls, group, degree, kind, plus, minus, denominator=1):
        return cls(group, degree, kind, np.stack([np.asarray(plus), np.asarray(minus)], axis=-1), denominator)

    # views

    @property
    def plus(self):
        return self.values[..., 0]

    @property
    def minus(self):
        return self.values[..., 1]

    @property
    def size(self):
        return self.values.size

    def numerators(self, N):
        """Entries scaled to denominator ``N`` (which must be a multiple of ``self.denominator``)."""
        if N % self.denominator:
            raise ValueError(f"denominator {N} is not a multiple of {self.denominator}")
        return self.values * (N // self.denominator)

    def flat(self, N=None):
        """Entries as a flat vector, tuple-major with the component fastest."""
        v = self.values if N is None else self.numerators(N)
        return v.reshape(-1)

    def __getitem__(self, idx):
        if isinstance(idx, (int, np.integer)):
            idx = (idx,)
        p, m = (int(x) for x in self.values[tuple(idx)])
        if self.kind == BIT:
            return Doubled(p, m)
        return Doubled(Phase(p, self.denominator), Phase(m, self.denominator))

    def entries(self):
        """Yield ``(tuple, Doubled)`` in row-major order."""
        n = self.group.order
        for idx in np.ndindex(*((n,) * self.degree)):
            yield idx, self[idx]

    # algebra

    def _check_compatible(self, other):
        if not isinstance(other, Cochain):
            raise TypeError("expected a Cochain")
        if self.group != other.group or self.degree != other.degree or self.kind != other.kind:
            raise ValueError("cochains differ in group, degree or kind")

    def __add__(self, other):
        self._check_compatible(other)
        if self.kind == BIT:
            return Cochain(self.group, self.degree, BIT, self.values ^ other.values)
        N = _lcm(self.denominator, other.denominator)
        return Cochain(self.group, self.degree, PHASE, self.numerators(N) + other.numerators(N), N)

    def __neg__(self):
        if self.kind == BIT:
            return self
        return Cochain(self.group, self.degree, PHASE, -self.values, self.denominator)

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        return (isinstance(other, Cochain) and self.group == other.group
                and self.degree == other.degree and self.kind == other.kind
                and self.denominator == other.denominator
                and np.array_equal(self.values, other.values))

    __hash__ = None

    def swapped(self):
        return Cochain(self.group, self.degree, self.kind, self.values[..., ::-1], self.denominator)

    def is_zero(self):
        return not self.values.any()

    def is_diagonal(self):
        return np.array_equal(self.plus, self.minus)

    def is_normalized(self):
        return not self.values[normalization_mask(self.group.order, self.degree)].any()

    def to_phase(self):
        """``(-1)^x``: a bit cochain viewed as a phase cochain with entries in {0, 1/2}."""
        if self.kind == PHASE:
            return self
        return Cochain(self.group, self.degree, PHASE, self.values, 2)

    def with_values(self, values, denominator=None):
        return Cochain(self.group, self.degree, self.kind, values,
                       self.denominator if denominator is None else denominator)

    def __repr__(self):
        return (f"Cochain(order={self.group.order}, degree={self.degree}, kind={self.kind!r}, "
                f"denominator={self.denominator})")


def cochain_combine(op, x, y):
    if op == "mul":
        return x + y
    if op == "div":
        return x - y
    raise ValueError(f"unknown op {op!r}")


def normalization_mask(n, degree):
    """Boolean array over tuples: True where some argument is the identity."""
    if degree == 0:
        return np.zeros((), dtype=bool)
    idx = np.indices((n,) * degree)
    return (idx == 0).any(axis=0)


@lru_cache(maxsize=None)
def _faces(group, degree):
    """Source flat-tuple indices for every term of the degree-``degree`` differential.

    Returns ``(first, others, signs)``: ``first`` is the source of the twisted
    term, ``others[i]`` the source of term ``i+1`` with sign ``signs[i]``.
    Index arrays run over output tuples in row-major order.
    """
    n = group.order
    t = group.table
    out = np.indices((n,) * (degree + 1)).reshape(degree + 1, -1)
    shape = (n,) * degree

    def flat(cols):
        if degree == 0:
            return np.zeros(out.shape[1], dtype=np.int64)
        return np.ravel_multi_index(tuple(cols), shape)

    first = flat(out[1:])
    others, signs = [], []
    for i in range(1, degree + 1):
        cols = list(out[:i - 1]) + [t[out[i - 1], out[i]]] + list(out[i + 1:])
        others.append(flat(cols))
        signs.append(-1 if i % 2 else 1)
    others.append(flat(out[:degree]))
    signs.append(-1 if (degree + 1) % 2 else 1)
    return first, tuple(others), tuple(signs), out[0]


def coboundary(a, x):
    """Twisted differential of ``x`` (degree 1, 2 or 3) with respect to the homomorphism ``a``."""
    if x.degree not in (1, 2, 3):
        raise ValueError(f"coboundary is defined on degrees 1..3, got {x.degree}")
    if a.group != x.group:
        raise ValueError("homomorphism and cochain live on different groups")
    first, others, signs, g0 = _faces(x.group, x.degree)
    v = x.values.reshape(-1, 2)
    tw = a.array[g0].astype(bool)
    src = v[first]
    acc = np.where(tw[:, None], src[:, ::-1], src)
    for idx, s in zip(others, signs):
        acc = acc + s * v[idx]
    n = x.group.order
    return Cochain(x.group, x.degree + 1, x.kind, acc.reshape((n,) * (x.degree + 1) + (2,)), x.denominator)


def linearize(degree, a, kind=PHASE, normalized=False):
    """Integer matrix ``D`` with ``flat(coboundary(a, x)) == D @ flat(x)`` (mod 2 or mod 1).

    Rows and columns are flat cochain slots (tuple-major, component fastest).
    With ``normalized`` the rows/columns are restricted to tuples that avoid the
    identity.  For bits the matrix is reduced mod 2.
    """
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}")
    G = a.group
    first, others, signs, g0 = _faces(G, degree)
    rows_t = np.arange(len(first))
    n_out = len(first) * 2
    n_in = G.order ** degree * 2
    D = np.zeros((n_out, n_in), dtype=np.int64)
    tw = a.array[g0]
    for comp in (0, 1):
        rows = rows_t * 2 + comp
        np.add.at(D, (rows, first * 2 + (comp ^ tw)), 1)
        for idx, s in zip(others, signs):
            np.add.at(D, (rows, idx * 2 + comp), s)
    if kind == BIT:
        D %= 2
    if normalized:
        r = normalized_slots(G.order, degree + 1)
        c = normalized_slots(G.order, degree)
        D = D[np.ix_(r, c)]
    return D


def normalized_slots(n, degree):
    """Flat slot indices of tuples that avoid the identity (both components)."""
    keep = ~normalization_mask(n, degree).reshape(-1)
    tuples = np.nonzero(keep)[0]
    return np.stack([tuples * 2, tuples * 2 + 1], axis=-1).reshape(-1)


def discretize(x, N=None):
    """Flat integer vector of ``x`` (numerators over ``N`` for phases)."""
    if x.kind == BIT:
        return x.flat()
    return x.flat(N or x.denominator)


def from_flat(group, degree, kind, vec, denominator=1, normalized=False):
    """Inverse of :func:`discretize`; with ``normalized`` the vector holds only normalized slots."""
    n = group.order
    vec = np.asarray(vec, dtype=np.int64)
    if normalized:
        full = np.zeros(n ** degree * 2, dtype=np.int64)
        full[normalized_slots(n, degree)] = vec
        vec = full
    return Cochain(group, degree, kind, vec.reshape((n,) * degree + (2,)), denominator)


def twist(values, mask):
    """Swap the components of ``values`` wherever the broadcast ``mask`` is set."""
    mask = np.asarray(mask, dtype=bool)
    return np.where(mask[..., None], values[..., ::-1], values)


def obstruction_rhs(kappa, a):
    """``(-1)^{kappa(g,h) . kappa^{a(gh)}(k,f)}`` as a degree-4 phase cochain."""
    if kappa.degree != 2 or kappa.kind != BIT:
        raise ValueError("kappa must be a degree-2 bit cochain")
    G = kappa.group
    k = kappa.values
    agh = a.array[G.table]  # a(gh) on (g, h)
    left = k[:, :, None, None, :]
    right = twist(k[None, None, :, :, :], agh[:, :, None, None])
    return Cochain(G, 4, PHASE, left & right, 2)


def random_cochain(group, degree, kind, denominator=8, seed=None):
    """Deterministic pseudorandom cochain; phase entries have denominators dividing ``denominator``."""
    if denominator < 1:
        raise ValueError("denominator must be >= 1")
    rng = np.random.default_rng(seed)
    shape = (group.order,) * degree + (2,)
    if kind == BIT:
        return Cochain(group, degree, BIT, rng.integers(0, 2, size=shape))
    return Cochain(group, degree, PHASE, rng.integers(0, denominator, size=shape), denominator)


def normalize_cochain(x):
    """Zero every entry with an identity argument (the normalization projection)."""
    vals = x.values.copy()
    vals[normalization_mask(x.group.order, x.degree)] = 0
    return x.with_values(vals)
