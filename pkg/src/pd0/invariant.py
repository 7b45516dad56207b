"""Triples ``(c, kappa, a)``: validity, the (m, sigma) moves, equivalence and classification.

A triple is valid when ``d_a kappa = 0`` and ``d_a c = (-1)^{kappa(g,h) . kappa^{a(gh)}(k,f)}``.
Two valid triples with the same ``a`` are equivalent when some bit 1-cochain
``m`` and phase 2-cochain ``sigma`` carry one onto the other:

    kappa2 = kappa1 + d_a m
    c2     = (-1)^{kappa1(g,h) . m^{a(gh)}(k)} (-1)^{m(g) . kappa2^{a(g)}(h,k)} d_a sigma . c1

The equivalence test solves the kappa equation over Z2, then for each ``m``
in the solution coset decides whether the remaining phase ratio is a
coboundary over the full torus (left-kernel annihilator test).
"""

import itertools
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd

import numpy as np

from .cochains import (BIT, PHASE, Cochain, coboundary, from_flat, linearize,
                       normalized_slots, obstruction_rhs, twist)
from .errors import Violation
from .groups import Z2Hom, all_z2_homs
from .linalg import (GF2Subspace, HowellBasis, IntegerEchelon, gf2_solve,
                     kernel_mod, saturated_image_mod, smith_normal_form,
                     solve_mod, solve_torus)

DEFAULT_BUDGET = 1 << 20

EQUIVALENT = "equivalent"
INEQUIVALENT = "inequivalent"
BUDGET_EXCEEDED = "budget-exceeded"


@dataclass(frozen=True, eq=False)
class PD0Triple:
    c: Cochain
    kappa: Cochain
    a: Z2Hom

    def __post_init__(self):
        G = self.a.group
        if self.c.group != G or self.kappa.group != G:
            raise ValueError("c, kappa and a must live on the same group")
        if self.c.degree != 3 or self.c.kind != PHASE:
            raise ValueError("c must be a degree-3 phase cochain")
        if self.kappa.degree != 2 or self.kappa.kind != BIT:
            raise ValueError("kappa must be a degree-2 bit cochain")

    @property
    def group(self):
        return self.a.group

    def __eq__(self, other):
        return (isinstance(other, PD0Triple) and self.a == other.a
                and self.kappa == other.kappa and self.c == other.c)

    __hash__ = None

    @classmethod
    def trivial(cls, a):
        G = a.group
        return cls(Cochain.zero(G, 3, PHASE), Cochain.zero(G, 2, BIT), a)


def _first_mismatch(lhs, rhs):
    bad = np.argwhere(lhs.values != rhs.values)
    if len(bad) == 0:
        return None
    idx = tuple(int(i) for i in bad[0][:-1])
    return idx


def validate_triple(t):
    """Check both cocycle conditions exactly; returns a list of violations (empty if valid)."""
    out = []
    dk = coboundary(t.a, t.kappa)
    if not dk.is_zero():
        idx = _first_mismatch(dk, Cochain.zero(t.group, 3, BIT))
        out.append(Violation("kappa-cocycle", idx, f"d_a kappa = {tuple(dk[idx])}, expected (0, 0)"))
    dc = coboundary(t.a, t.c)
    rhs = obstruction_rhs(t.kappa, t.a)
    if dc != rhs:
        idx = _first_mismatch(dc - rhs, Cochain.zero(t.group, 4, PHASE))
        lhs_s = tuple(str(x) for x in dc[idx])
        rhs_s = tuple(str(x) for x in rhs[idx])
        out.append(Violation("c-obstruction", idx, f"d_a c = {lhs_s}, sign side = {rhs_s}"))
    return out


def is_diagonal(t):
    return t.kappa.is_diagonal() and t.c.is_diagonal()


def move_signs(kappa1, kappa2, m, a):
    """``(-1)^{kappa1(g,h) . m^{a(gh)}(k)} (-1)^{m(g) . kappa2^{a(g)}(h,k)}`` as a phase 3-cochain."""
    G = a.group
    t = G.table
    av = a.array
    K1, K2, M = kappa1.values, kappa2.values, m.values
    first = K1[:, :, None, :] & twist(M[None, None, :, :], av[t][:, :, None])
    second = M[:, None, None, :] & twist(K2[None, :, :, :], av[:, None, None])
    return Cochain(G, 3, PHASE, first ^ second, 2)


def apply_move(t, m, sigma):
    """The triple reached from ``t`` by the move ``(m, sigma)``."""
    kappa2 = t.kappa + coboundary(t.a, m)
    c2 = move_signs(t.kappa, kappa2, m, t.a) + coboundary(t.a, sigma) + t.c
    return PD0Triple(c2, kappa2, t.a)


@dataclass(frozen=True, eq=False)
class KappaMoves:
    """All ``m`` with ``d_a m = kappa2 - kappa1``: ``particular + span(kernel)``."""

    particular: Cochain
    kernel: tuple

    def __iter__(self):
        # deterministic order: counting through kernel combinations
        for bits in itertools.product((0, 1), repeat=len(self.kernel)):
            m = self.particular
            for b, k in zip(reversed(bits), self.kernel):
                if b:
                    m = m + k
            yield m

    @property
    def size(self):
        return 1 << len(self.kernel)


def _bit_cochain(G, degree, flat):
    return from_flat(G, degree, BIT, np.asarray(flat, dtype=np.int64))


def solve_kappa_move(t1, t2):
    """Solve ``d_a m = kappa2 - kappa1`` over doubled bit 1-cochains, or return ``None``."""
    if t1.a != t2.a:
        return None
    G = t1.group
    D1 = linearize(1, t1.a, BIT)
    target = (t2.kappa - t1.kappa).flat()
    sol = gf2_solve(D1, target)
    if sol is None:
        return None
    x0, ker = sol
    return KappaMoves(_bit_cochain(G, 1, x0), tuple(_bit_cochain(G, 1, k) for k in ker))


@lru_cache(maxsize=64)
def _torus_solver(group, a_values, diff=False):
    a = Z2Hom(group, a_values, check=False)
    D = linearize(2, a, PHASE)
    if diff:
        D = D[0::2] - D[1::2]
    return IntegerEchelon(D)


@dataclass(frozen=True, eq=False)
class Membership:
    member: bool
    sigma: Cochain = None
    witness: tuple = None  # violated left-kernel row when not a member


def coboundary_membership(r, a):
    """Decide whether the phase 3-cochain ``r`` is ``d_a sigma`` for a torus-valued ``sigma``."""
    G = a.group
    E = _torus_solver(G, a.values)
    N = r.denominator
    rhs = r.flat(N)
    bad = E.membership(rhs, N)
    if bad is not None:
        return Membership(False, witness=tuple(int(x) for x in bad))
    num, den = E.solve_torus(rhs, N)
    sigma = from_flat(G, 2, PHASE, num, den)
    if coboundary(a, sigma) != r:
        raise ArithmeticError("torus solve produced a wrong preimage")
    return Membership(True, sigma=sigma)


@dataclass(frozen=True, eq=False)
class EquivCertificate:
    m: Cochain
    sigma: Cochain

    def replay(self, t1):
        return apply_move(t1, self.m, self.sigma)


@dataclass(frozen=True, eq=False)
class EquivResult:
    status: str
    certificate: EquivCertificate = None
    reason: str = ""
    witness: tuple = None
    candidates_tried: int = 0

    @property
    def equivalent(self):
        return self.status == EQUIVALENT

    def __bool__(self):
        return self.equivalent


def equiv(t1, t2, budget=DEFAULT_BUDGET):
    """Decide ``t1 ~ t2``; incompleteness is reported as ``budget-exceeded``."""
    if t1.a != t2.a:
        return EquivResult(INEQUIVALENT, reason="a differs")
    moves = solve_kappa_move(t1, t2)
    if moves is None:
        return EquivResult(INEQUIVALENT, reason="kappa difference is not d_a of any m")
    a = t1.a
    E = _torus_solver(t1.group, a.values)
    diff = t2.c - t1.c
    tried = 0
    first_witness = None
    for m in moves:
        if tried >= budget:
            return EquivResult(BUDGET_EXCEEDED, reason=f"stopped after {tried} of {moves.size} m-candidates",
                               candidates_tried=tried)
        tried += 1
        r = diff - move_signs(t1.kappa, t2.kappa, m, a)
        N = r.denominator
        bad = E.membership(r.flat(N), N)
        if bad is None:
            mem = coboundary_membership(r, a)
            cert = EquivCertificate(m, mem.sigma)
            if not _same(cert.replay(t1), t2):
                raise ArithmeticError("equivalence certificate does not replay")
            return EquivResult(EQUIVALENT, cert, candidates_tried=tried)
        if first_witness is None:
            first_witness = tuple(int(x) for x in bad)
    return EquivResult(INEQUIVALENT, reason="no m in the kappa-move coset leaves a torus coboundary",
                       witness=first_witness, candidates_tried=tried)


def _same(t1, t2):
    return t1.kappa == t2.kappa and t1.c == t2.c and t1.a == t2.a


@dataclass(frozen=True, eq=False)
class DiagonalMembership:
    status: str  # "diagonal", "not-diagonal", "budget-exceeded"
    representative: PD0Triple = None
    certificate: EquivCertificate = None
    reason: str = ""

    def __bool__(self):
        return self.status == "diagonal"


def is_in_diagonal_class(t, budget=DEFAULT_BUDGET):
    """Search the class of ``t`` for a representative with equal plus/minus components."""
    G, a = t.group, t.a
    D1 = linearize(1, a, BIT)
    # (kappa + d m) diagonal  <=>  (d m)^+ + (d m)^- = kappa^+ + kappa^-  over Z2
    A = (D1[0::2] + D1[1::2]) % 2
    rhs = (t.kappa.plus ^ t.kappa.minus).reshape(-1)
    sol = gf2_solve(A, rhs)
    if sol is None:
        return DiagonalMembership("not-diagonal", reason="kappa^+ - kappa^- is not a coboundary")
    x0, ker = sol
    moves = KappaMoves(_bit_cochain(G, 1, x0), tuple(_bit_cochain(G, 1, k) for k in ker))
    E = _torus_solver(G, a.values, diff=True)
    tried = 0
    for m in moves:
        if tried >= budget:
            return DiagonalMembership("budget-exceeded", reason=f"stopped after {tried} of {moves.size}")
        tried += 1
        kappa2 = t.kappa + coboundary(a, m)
        c1 = t.c + move_signs(t.kappa, kappa2, m, a)
        N = c1.denominator
        num = c1.numerators(N)
        rhs = (num[..., 1] - num[..., 0]).reshape(-1)
        if E.membership(rhs, N) is not None:
            continue
        xs, den = E.solve_torus(rhs, N)
        sigma = from_flat(G, 2, PHASE, xs, den)
        rep = apply_move(t, m, sigma)
        if not is_diagonal(rep):
            raise ArithmeticError("diagonalizing move did not produce a diagonal triple")
        return DiagonalMembership("diagonal", rep, EquivCertificate(m, sigma))
    return DiagonalMembership("not-diagonal", reason="no move makes c diagonal")


# classification

def default_denominator(G):
    n = G.order
    return n * 8 // gcd(n, 8)


@dataclass(frozen=True, eq=False)
class SectorResult:
    kappa: Cochain
    solvable: bool
    class_count: int
    representatives: tuple  # PD0Triple, sorted by canonical numerator vector

    @property
    def empty(self):
        return self.class_count == 0


@dataclass(frozen=True, eq=False)
class Classification:
    a: Z2Hom
    denominator: int
    normalized: bool
    diagonal_only: bool
    sectors: tuple

    @property
    def class_count(self):
        return sum(s.class_count for s in self.sectors)


@lru_cache(maxsize=64)
def _sector_tools(group, a_values, normalized):
    a = Z2Hom(group, a_values, check=False)
    n = group.order
    s1 = normalized_slots(n, 1) if normalized else np.arange(2 * n)
    s2 = normalized_slots(n, 2) if normalized else np.arange(2 * n ** 2)
    s3 = normalized_slots(n, 3) if normalized else np.arange(2 * n ** 3)
    s4 = normalized_slots(n, 4) if normalized else np.arange(2 * n ** 4)
    D1 = linearize(1, a, BIT)[np.ix_(s2, s1)]
    D2b = linearize(2, a, BIT)[np.ix_(s3, s2)]
    D2 = linearize(2, a, PHASE)[np.ix_(s3, s2)]
    D3 = linearize(3, a, PHASE)[np.ix_(s4, s3)]
    # (c, c) embedding of undoubled 3-cochains into the doubled slots
    half = len(s3) // 2
    Emb = np.zeros((len(s3), half), dtype=np.int64)
    Emb[0::2, :] = np.eye(half, dtype=np.int64)
    Emb[1::2, :] = np.eye(half, dtype=np.int64)
    return {
        "a": a, "slots": (s1, s2, s3, s4), "D1": D1, "D2b": D2b,
        "sf2": smith_normal_form(D2), "sf3": smith_normal_form(D3),
        "D3diag": D3 @ Emb, "sf3diag": smith_normal_form(D3 @ Emb), "Emb": Emb,
    }


def _embed(n, degree, slots, vec, kind=BIT):
    full = np.zeros(2 * n ** degree, dtype=np.int64)
    full[slots] = vec
    return full


def _closure(K, start, gens):
    """All K-cosets reachable from ``start`` by adding generators (canonical reps)."""
    first = tuple(K.reduce(start))
    seen = {first}
    frontier = [first]
    while frontier:
        v = frontier.pop()
        for g in gens:
            w = tuple(K.reduce([x + y for x, y in zip(v, g)]))
            if w not in seen:
                seen.add(w)
                frontier.append(w)
    return seen


def _sector(tools, kappa, N, diagonal_members=None):
    """Classes in the sector of ``kappa``; with ``diagonal_members`` only classes with a diagonal representative."""
    a = tools["a"]
    G = a.group
    n = G.order
    s1, s2, s3, s4 = tools["slots"]
    obs = obstruction_rhs(kappa, a).flat(N)[s4]
    c0 = solve_mod(None, obs, N, tools["sf3"])
    if c0 is None:
        return SectorResult(kappa, False, 0, ())
    zgens = kernel_mod(None, N, tools["sf3"])
    gens = saturated_image_mod(None, N, tools["sf2"])
    ker1 = gf2_solve(tools["D1"], np.zeros(len(s2), dtype=np.int64))[1]
    for k in ker1:
        m = _bit_cochain(G, 1, _embed(n, 1, s1, k))
        gens.append(list(move_signs(kappa, kappa, m, a).flat(N)[s3]))
    K = HowellBasis(N, len(s3), gens)
    if diagonal_members is None:
        reps = _closure(K, c0, zgens)
    else:
        reps = set()
        Emb = tools["Emb"]
        zd = [list((Emb @ np.array(z)) % N) for z in kernel_mod(None, N, tools["sf3diag"])]
        for kp in diagonal_members:
            shift = np.zeros(len(s3), dtype=np.int64)
            if kp != kappa:
                target = (kappa - kp).flat()[s2]
                sol = gf2_solve(tools["D1"], target)
                m = _bit_cochain(G, 1, _embed(n, 1, s1, sol[0]))
                shift = move_signs(kp, kappa, m, a).flat(N)[s3]
            obs_d = obstruction_rhs(kp, a).flat(N)[s4]
            cd = solve_mod(None, obs_d, N, tools["sf3diag"])
            if cd is None:
                continue
            start = (Emb @ np.array(cd) + shift) % N
            reps |= _closure(K, list(start), zd)
    reps = sorted(reps)
    triples = tuple(
        PD0Triple(from_flat(G, 3, PHASE, _embed(n, 3, s3, r), N), kappa, a) for r in reps)
    return SectorResult(kappa, True, len(reps), triples)


def _gf2_cosets(D1, D2):
    """Canonical representatives of ``ker D2 / im D1`` over Z2, sorted, with the image subspace."""
    z = gf2_solve(D2, np.zeros(D2.shape[0], dtype=np.int64))[1]
    B = GF2Subspace(D1.T, D1.shape[0])
    seen = {tuple(B.reduce(np.zeros(D1.shape[0])))}
    frontier = list(seen)
    while frontier:
        v = np.array(frontier.pop(), dtype=np.uint8)
        for g in z:
            w = tuple(B.reduce(v ^ g))
            if w not in seen:
                seen.add(w)
                frontier.append(w)
    return sorted(seen), B


def _kappa_classes(tools):
    """Canonical representatives of ``Z^2_a / B^2_a`` (doubled bit cochains)."""
    return _gf2_cosets(tools["D1"], tools["D2b"])


def classify_sector(G, a, denominator=None, kappa=None, diagonal_only=False, normalized=True):
    """Enumerate equivalence classes of valid triples with fixed ``a``.

    Cochains are taken N-torsion (``N = lcm(|G|, 8)`` by default) and, with
    ``normalized``, vanishing on identity arguments.  Each kappa cohomology
    class contributes one sector; inside a sector the solutions of the
    c-equation are counted modulo torus coboundaries and the sign moves of
    cocycle ``m``.  ``kappa`` restricts to that kappa's sector.  With
    ``diagonal_only`` a class is counted only if it contains a diagonal
    triple.
    """
    N = default_denominator(G) if denominator is None else int(denominator)
    if N < 1 or N % 2:
        raise ValueError("denominator must be a positive even integer (sign factors need 1/2)")
    if a.group != G:
        raise ValueError("a is a homomorphism on a different group")
    tools = _sector_tools(G, a.values, normalized)
    n = G.order
    s2 = tools["slots"][1]
    kappa_classes, B = _kappa_classes(tools)

    def as_kappa(vec):
        return _bit_cochain(G, 2, _embed(n, 2, s2, vec))

    if kappa is not None:
        if normalized and not kappa.is_normalized():
            raise ValueError("kappa must be normalized in normalized mode")
        if not coboundary(a, kappa).is_zero():
            raise ValueError("kappa is not a cocycle")
        wanted = tuple(B.reduce(kappa.flat()[s2]))
        kappa_classes = [wanted]
    if not diagonal_only:
        ks = [kappa if kappa is not None else as_kappa(key) for key in kappa_classes]
        sectors = _pmap(lambda k: _sector(tools, k, N), ks)
        return Classification(a, N, normalized, False, tuple(sectors))

    members = {}
    for k in _diagonal_kappa_cocycles(tools, G):
        key = tuple(B.reduce(k.flat()[s2]))
        if key in kappa_classes:
            members.setdefault(key, []).append(k)
    jobs = []
    for key in kappa_classes:
        if key not in members:
            continue
        diag = members[key]
        rep = kappa if (kappa is not None and kappa.is_diagonal()) else diag[0]
        jobs.append((rep, diag))
    sectors = _pmap(lambda job: _sector(tools, job[0], N, diagonal_members=job[1]), jobs)
    return Classification(a, N, normalized, True, tuple(sectors))


def worker_count():
    """Threads used for per-sector work, from ``PD0_WORKERS`` (default 1)."""
    raw = os.environ.get("PD0_WORKERS", "1")
    try:
        n = int(raw)
    except ValueError:
        raise ValueError(f"PD0_WORKERS must be a positive integer, got {raw!r}") from None
    if n < 1:
        raise ValueError(f"PD0_WORKERS must be a positive integer, got {raw!r}")
    return n


def _pmap(fn, items):
    # results keep input order, so reports do not depend on scheduling
    n = worker_count()
    if n == 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(n) as ex:
        return list(ex.map(fn, items))


def _diagonal_kappa_cocycles(tools, G, limit=1 << 16):
    """Every diagonal 2-cocycle ``(k, k)`` in the working subcomplex, in lexicographic order."""
    s2 = tools["slots"][1]
    D2b = tools["D2b"]
    n = G.order
    # diagonal part: plus-slot columns of D2b summed with minus-slot columns
    Dd = (D2b[:, 0::2] + D2b[:, 1::2]) % 2
    z = gf2_solve(Dd, np.zeros(Dd.shape[0], dtype=np.int64))[1]
    if len(z) > 16 or (1 << len(z)) > limit:
        raise ValueError("too many diagonal kappa cocycles to enumerate")
    out = []
    for bits in itertools.product((0, 1), repeat=len(z)):
        v = np.zeros(Dd.shape[1], dtype=np.uint8)
        for b, g in zip(bits, z):
            if b:
                v ^= g
        doubled = np.repeat(v, 2).astype(np.int64)
        out.append(_bit_cochain(G, 2, _embed(n, 2, s2, doubled)))
    out.sort(key=lambda k: tuple(k.flat()))
    return out


def classify_all(G, denominator=None, diagonal_only=False, normalized=True):
    """Classification for every ``a`` in Hom(G, Z2)."""
    return [classify_sector(G, a, denominator, diagonal_only=diagonal_only, normalized=normalized)
            for a in all_z2_homs(G)]


# random valid triples (test-instance generation)

def _product_cocycles(G):
    """Cup products ``x(g) y(h) z(k) / 2`` of homomorphisms to Z2 (3-cocycles)."""
    homs = [h.array for h in all_z2_homs(G) if not h.is_trivial]
    out = []
    for x, y, z in itertools.product(homs, repeat=3):
        out.append(x[:, None, None] & y[None, :, None] & z[None, None, :])
    return out


@lru_cache(maxsize=64)
def _generator_reps(group, a_values, diagonal):
    """Normalized kappa cocycles, one per class; diagonal ones come from undoubled untwisted classes."""
    n = group.order
    if not diagonal:
        a = Z2Hom(group, a_values, check=False)
        s1, s2, s3 = (normalized_slots(n, d) for d in (1, 2, 3))
        keys, _ = _gf2_cosets(linearize(1, a, BIT)[np.ix_(s2, s1)], linearize(2, a, BIT)[np.ix_(s3, s2)])
        return tuple(_bit_cochain(group, 2, _embed(n, 2, s2, k)) for k in keys)
    triv = Z2Hom(group, (0,) * n, check=False)
    s1, s2, s3 = (normalized_slots(n, d)[0::2] for d in (1, 2, 3))
    keys, _ = _gf2_cosets(linearize(1, triv, BIT)[np.ix_(s2, s1)], linearize(2, triv, BIT)[np.ix_(s3, s2)])
    full = normalized_slots(n, 2)
    return tuple(_bit_cochain(group, 2, _embed(n, 2, full, np.repeat(np.array(k), 2))) for k in keys)


@lru_cache(maxsize=256)
def _base_triple(group, a_values, diagonal, index):
    """A valid triple over the ``index``-th kappa representative, or ``None`` if its sector is empty."""
    a = Z2Hom(group, a_values, check=False)
    kappa = _generator_reps(group, a_values, diagonal)[index]
    n = group.order
    s3, s4 = normalized_slots(n, 3), normalized_slots(n, 4)
    obs = obstruction_rhs(kappa, a).flat(2)[s4]
    if diagonal:
        # diagonal c: the twist is invisible, solve the undoubled untwisted system
        triv = Z2Hom(group, (0,) * n, check=False)
        D3 = linearize(3, triv, PHASE)[np.ix_(s4[0::2], s3[0::2])]
        sol = solve_torus(D3, obs[0::2], 2)
        if sol is None:
            return None
        num, den = sol
        num = np.repeat(num, 2)
    else:
        D3 = linearize(3, a, PHASE)[np.ix_(s4, s3)]
        sol = solve_torus(D3, obs, 2)
        if sol is None:
            return None
        num, den = sol
    c = from_flat(group, 3, PHASE, _embed(n, 3, s3, num), den)
    return PD0Triple(c, kappa, a)


def random_triple(a, seed=None, diagonal=False, denominator=8):
    """A pseudorandom valid triple for ``a``; ``diagonal`` forces equal components.

    A kappa class is drawn at random, a base solution of the obstruction
    equation is taken for it, and the result is moved by a random ``(m, sigma)``
    (diagonal ones when ``diagonal``) and shifted by random cup-product cocycles.
    """
    G = a.group
    n = G.order
    rng = np.random.default_rng(seed)
    reps = _generator_reps(G, a.values, diagonal)
    base = None
    for i in rng.permutation(len(reps)):
        base = _base_triple(G, a.values, diagonal, int(i))
        if base is not None:
            break
    if diagonal:
        m = Cochain.diagonal(G, 1, BIT, rng.integers(0, 2, size=n))
        sigma = Cochain.diagonal(G, 2, PHASE, rng.integers(0, denominator, size=(n, n)), denominator)
    else:
        m = Cochain(G, 1, BIT, rng.integers(0, 2, size=(n, 2)))
        sigma = Cochain(G, 2, PHASE, rng.integers(0, denominator, size=(n, n, 2)), denominator)
    t = apply_move(base, m, sigma)
    c = t.c
    for cup in _product_cocycles(G):
        if rng.integers(4) == 0:
            c = c + Cochain.diagonal(G, 3, PHASE, cup, 2)
    t = PD0Triple(c, t.kappa, a)
    if validate_triple(t):
        raise ArithmeticError("random_triple produced an invalid triple")
    return t
