"""CRT pentuples ``(c_R, kappa_R, kappa_L, b, a)`` and their reduction to a diagonal triple.

The pentuple's scalar constraints are

    mirror      kappa_L^{-e}(g,h) = kappa_R^{e}(g,h)
    sum rule    b_g + b_h + b_{gh} = kappa_L^e(g,h) + kappa_R^e(g,h)   (mod 2)
    compat.     c_R^{+}(g,h,k) - c_R^{-}(g,h,k) = explicit phase in kappa_L, kappa_R, d b, a

and ``b`` is a single (undoubled) bit per element.  The reduction moves by
``m = (0, b)``, strips the ``b``-dependent signs, and divides by the
coboundary of ``sigma + eta`` whose quarter and eighth phases exactly cancel
the plus/minus asymmetry, leaving ``(c_hat, kappa, a)`` with equal components.

Every Z2 value entering a quarter or eighth phase is lifted to {0, 1}.
"""

from dataclasses import dataclass, replace
from typing import NamedTuple

import numpy as np

from .cochains import BIT, PHASE, Cochain, coboundary
from .coefficients import CANONICAL_LIFT
from .errors import ConstraintViolation, ConventionDiscrepancy, InternalInconsistency, Violation
from .invariant import PD0Triple, apply_move, is_diagonal, move_signs, validate_triple


@dataclass(frozen=True, eq=False)
class CRTPentuple:
    c_r: Cochain
    kappa_r: Cochain
    kappa_l: Cochain
    b: tuple
    a: object  # Z2Hom

    def __post_init__(self):
        G = self.a.group
        b = tuple(int(x) for x in self.b)
        if len(b) != G.order or any(x not in (0, 1) for x in b):
            raise ValueError("b must hold one bit per group element")
        object.__setattr__(self, "b", b)
        for name, x, deg, kind in (("c_r", self.c_r, 3, PHASE), ("kappa_r", self.kappa_r, 2, BIT),
                                   ("kappa_l", self.kappa_l, 2, BIT)):
            if x.group != G or x.degree != deg or x.kind != kind:
                raise ValueError(f"{name} must be a degree-{deg} {kind} cochain on a's group")

    @property
    def group(self):
        return self.a.group

    @property
    def b_array(self):
        return np.array(self.b, dtype=np.int64)

    def __eq__(self, other):
        return (isinstance(other, CRTPentuple) and self.a == other.a and self.b == other.b
                and self.kappa_r == other.kappa_r and self.kappa_l == other.kappa_l
                and self.c_r == other.c_r)

    __hash__ = None

    @classmethod
    def trivial(cls, a):
        G = a.group
        zero2 = Cochain.zero(G, 2, BIT)
        return cls(Cochain.zero(G, 3, PHASE), zero2, zero2, (0,) * G.order, a)


def d1b(G, b):
    """Untwisted ``b_g + b_h - b_{gh}`` mod 2 on pairs."""
    b = np.asarray(b, dtype=np.int64)
    return (b[:, None] + b[None, :] + b[G.table]) % 2


def _lift(bits, lift):
    return np.asarray(lift, dtype=np.int64)[np.asarray(bits) & 1]


def _first(mask):
    bad = np.argwhere(mask)
    return tuple(int(i) for i in bad[0]) if len(bad) else None


def _index_tables(G):
    n = G.order
    t = G.table
    ar = np.arange(n)
    g_hk = (ar[:, None, None], t[None, :, :])  # (g, hk)
    gh_k = (t[:, :, None], ar[None, None, :])  # (gh, k)
    return g_hk, gh_k


def compatibility_rhs(p, lift=CANONICAL_LIFT):
    """Right side of the compatibility identity, as quarter numerators on ``(g, h, k)``."""
    G = p.group
    av = p.a.array[:, None, None]
    kr1, krm = (_lift(x, lift) for x in (p.kappa_r.plus, p.kappa_r.minus))
    klm = _lift(p.kappa_l.minus, lift)
    db = d1b(G, p.b)
    g_hk, gh_k = _index_tables(G)
    # component (-1)^{a(g)} of kappa_R at (h, k)
    twisted = np.where(av.astype(bool), krm[None], kr1[None])
    quarter = -twisted - kr1[g_hk] + kr1[:, :, None] + kr1[gh_k]
    half = (av * klm[None] * krm[None]
            + db[None] * kr1[g_hk]
            + db[:, :, None] * kr1[gh_k])
    return (quarter + 2 * half) % 4


def validate_crt(p):
    """Exact check of the mirror, sum-rule, b-shape and compatibility constraints."""
    out = []
    G = p.group
    n = G.order
    b = p.b_array
    if b.shape != (n,):
        out.append(Violation("b-shape", (), f"b has shape {b.shape}, expected ({n},)"))
        return out
    kl, kr = p.kappa_l.values, p.kappa_r.values
    bad = _first(kl[..., ::-1] != kr)
    if bad is not None:
        g, h, comp = bad
        eps = "+1" if comp == 0 else "-1"
        out.append(Violation("mirror", (g, h),
                             f"kappa_R^{eps} = {kr[g, h, comp]} but kappa_L^(-{eps}) = {kl[g, h, 1 - comp]}"))
    db = d1b(G, b)
    bad = _first((kl ^ kr) != db[..., None])
    if bad is not None:
        g, h, comp = bad
        out.append(Violation("sum-rule", (g, h),
                             f"b_g+b_h+b_gh = {db[g, h]}, kappa_L+kappa_R = {kl[g, h, comp] ^ kr[g, h, comp]}"))
    rhs4 = compatibility_rhs(p)
    N = np.lcm(p.c_r.denominator, 4)
    num = p.c_r.numerators(N)
    lhs = (num[..., 0] - num[..., 1]) % N
    rhs = rhs4 * (N // 4)
    bad = _first(lhs != rhs)
    if bad is not None:
        out.append(Violation("compatibility", bad,
                             f"c_R^+ - c_R^- = {_fmt(lhs[bad], N)}, expected {_fmt(rhs[bad], N)}"))
    return out


def _fmt(x, N):
    from .coefficients import Phase
    return str(Phase(int(x), int(N)))


def build_m(b, a):
    """``m = (0, b)``; asserts the closed form of ``d_a m``."""
    G = a.group
    b = np.asarray(b, dtype=np.int64)
    m = Cochain.from_components(G, 1, BIT, np.zeros_like(b), b)
    bad = _first(coboundary(a, m).values != dm_closed_form(b, a))
    if bad is not None:
        raise InternalInconsistency(Violation("dm-lemma", bad[:2], "d_a m differs from its closed form"))
    return m


def dm_closed_form(b, a):
    """``(d_a m)^e = d b (1 - e)/2 + a(g) b_h`` as a value array."""
    G = a.group
    b = np.asarray(b, dtype=np.int64)
    ab = a.array[:, None] * b[None, :]
    return np.stack([ab % 2, (d1b(G, b) + ab) % 2], axis=-1)


class Verdict(NamedTuple):
    name: str
    passed: bool
    witness: tuple = ()
    detail: str = ""


@dataclass(frozen=True, eq=False)
class ReductionCertificate:
    m: Cochain
    kappa: Cochain
    kappa_prime: Cochain
    c_intermediate: Cochain
    c_tilde: Cochain
    c_hat: Cochain
    sigma: Cochain
    eta: Cochain
    lift: tuple = CANONICAL_LIFT
    checks: tuple = ()

    @property
    def passed(self):
        return all(v.passed for v in self.checks)


class Reduction(NamedTuple):
    triple: PD0Triple
    certificate: ReductionCertificate


def _sigma_eta(G, kappa_r, kappa, b, lift):
    n = G.order
    b = np.asarray(b, dtype=np.int64)
    zero = np.zeros((n, n), dtype=np.int64)
    # sigma^- = kappa_R^+/4 + kappa (b_g + b_h)/2, over 4
    sm = _lift(kappa_r.plus, lift) + 2 * kappa.plus * (b[:, None] + b[None, :])
    sigma = Cochain.from_components(G, 2, PHASE, zero, sm, 4)
    # eta^- = -(b_g + b_h - b_gh)/8, canonical lift of b
    em = -(b[:, None] + b[None, :] - b[G.table])
    eta = Cochain.from_components(G, 2, PHASE, zero, em, 8)
    return sigma, eta


def _b_signs(G, b, kappa):
    """``(-1)^{b_g . kappa(h, k)}`` (b doubled diagonally)."""
    b = np.asarray(b, dtype=np.int64)
    return Cochain(G, 3, PHASE, b[:, None, None, None] & kappa.values[None], 2)


def reduction_chain(p, lift=CANONICAL_LIFT):
    """All intermediates of the reduction, without verdicts.  ``lift`` only affects sigma's quarter phase."""
    G, a = p.group, p.a
    m = build_m(p.b, a)
    dm = coboundary(a, m)
    kappa = p.kappa_r + dm
    kappa_prime = p.kappa_l - dm
    c = move_signs(p.kappa_l, kappa, m, a) + p.c_r
    c_tilde = _b_signs(G, p.b, kappa) + c
    sigma, eta = _sigma_eta(G, p.kappa_r, kappa, p.b, lift)
    c_hat = c_tilde - coboundary(a, sigma + eta)
    return ReductionCertificate(m, kappa, kappa_prime, c, c_tilde, c_hat, sigma, eta, tuple(lift))


def _verdict(name, mask, detail=""):
    bad = _first(mask)
    if bad is None:
        return Verdict(name, True)
    return Verdict(name, False, bad, detail)


def check_claim_identities(p, cert):
    """Named entrywise checks of every identity along the reduction chain."""
    G, a = p.group, p.a
    b = p.b_array
    out = []
    dm = coboundary(a, cert.m)
    out.append(_verdict("dm-lemma", dm.values != dm_closed_form(b, a), "d_a m vs closed form"))
    k = cert.kappa.values
    out.append(_verdict("kappa-diagonal", k[..., 0] != k[..., 1], "kappa^+ != kappa^-"))
    kp = cert.kappa_prime.values
    out.append(_verdict("kappa-prime-diagonal", kp[..., 0] != kp[..., 1], "kappa'^+ != kappa'^-"))
    out.append(_verdict("kappa-prime-relation", kp != (k ^ d1b(G, b)[..., None]), "kappa' != kappa + d b"))

    # ratio claim: c~^+ - c~^- = (d(sigma+eta))^+ - (d(sigma+eta))^-
    d = coboundary(a, cert.sigma + cert.eta)
    N = int(np.lcm(cert.c_tilde.denominator, d.denominator))
    ct, dd = cert.c_tilde.numerators(N), d.numerators(N)
    out.append(_verdict("ratio-claim", (ct[..., 0] - ct[..., 1] - dd[..., 0] + dd[..., 1]) % N != 0,
                        "c~ ratio differs from the coboundary ratio"))

    # lift lemma: kR^+ kR^- / 2 = -(b_h - b_k + b_hk)^2 / 4 + (kR^+ + kR^-)/4, over 4
    kr1 = _lift(p.kappa_r.plus, cert.lift)
    krm = _lift(p.kappa_r.minus, cert.lift)
    x = b[:, None] - b[None, :] + b[G.table]
    lhs = 2 * (p.kappa_r.plus & p.kappa_r.minus)
    rhs = -x * x + kr1 + krm
    out.append(_verdict("lift-lemma", (lhs - rhs) % 4 != 0, f"fails under lift {tuple(cert.lift)}"))

    ch = cert.c_hat.values
    out.append(_verdict("c-hat-diagonal", ch[..., 0] != ch[..., 1], "c_hat^+ != c_hat^-"))
    t = PD0Triple(cert.c_hat, cert.kappa, a)
    bad = validate_triple(t)
    out.append(Verdict("triple-valid", not bad, bad[0].witness if bad else (), str(bad[0]) if bad else ""))
    return out


def reduce(p, lift=CANONICAL_LIFT):
    """Carry a valid pentuple to ``(c_hat, kappa, a)`` with equal components; every identity is verified."""
    bad = validate_crt(p)
    if bad:
        raise ConstraintViolation(bad)
    cert = reduction_chain(p, lift)
    checks = tuple(check_claim_identities(p, cert))
    cert = replace(cert, checks=checks)
    for v in checks:
        if not v.passed:
            raise InternalInconsistency(Violation(v.name, v.witness, v.detail))
    return Reduction(PD0Triple(cert.c_hat, cert.kappa, p.a), cert)


def synthesize_pentuple(t, b=None, seed=None, denominator=8):
    """Build a pentuple whose reduction lands in the class of the diagonal triple ``t``.

    With ``seed`` the triple is first moved by a random diagonal ``(m, sigma)``
    (so the reduction returns an equivalent, not identical, triple) and a
    missing ``b`` is drawn at random.  The output is checked against every
    constraint; a failure raises ConventionDiscrepancy.
    """
    if not is_diagonal(t):
        raise ValueError("synthesize_pentuple needs a diagonal triple")
    if validate_triple(t):
        raise ValueError("synthesize_pentuple needs a valid triple")
    G, a = t.group, t.a
    n = G.order
    rng = np.random.default_rng(seed)
    if b is None:
        b = rng.integers(0, 2, size=n) if seed is not None else np.zeros(n, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    if b.shape != (n,) or np.any((b != 0) & (b != 1)):
        raise ValueError("b must hold one bit per group element")
    if seed is not None:
        m0 = Cochain.diagonal(G, 1, BIT, rng.integers(0, 2, size=n))
        s0 = Cochain.diagonal(G, 2, PHASE, rng.integers(0, denominator, size=(n, n)), denominator)
        t = apply_move(t, m0, s0)
    kappa = t.kappa
    m = build_m(b, a)
    dm = coboundary(a, m)
    db = Cochain.diagonal(G, 2, BIT, d1b(G, b))
    kappa_r = kappa - dm
    kappa_l = kappa + db + dm
    sigma, eta = _sigma_eta(G, kappa_r, kappa, b, CANONICAL_LIFT)
    c_tilde = t.c + coboundary(a, sigma + eta)
    c = c_tilde - _b_signs(G, b, kappa)
    c_r = c - move_signs(kappa_l, kappa, m, a)
    p = CRTPentuple(c_r, kappa_r, kappa_l, tuple(int(x) for x in b), a)
    bad = validate_crt(p)
    if bad:
        raise ConventionDiscrepancy(bad)
    return p
