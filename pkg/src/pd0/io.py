"""JSON bundles for groups, cochains, triples, pentuples and certificates.

Serialization is canonical: sorted keys, phases as reduced ``"p/q"`` strings,
bits as 0/1, entries in row-major tuple order as ``[plus, minus]`` pairs.
Reading is strict; every schema error carries a JSON-pointer location.

Bundles other than bare group files carry a ``"type"`` key.  Inside a bundle
the group is stored once at the top level; a ``"group"`` value may also be a
path to a group file, resolved relative to the bundle.
"""

import hashlib
import json
from pathlib import Path

import numpy as np

from .cochains import BIT, PHASE, KINDS, Cochain
from .coefficients import Phase
from .crt import CRTPentuple, ReductionCertificate, Verdict
from .errors import ParseError
from .groups import FiniteGroup, Z2Hom, group_from_json
from .invariant import EquivCertificate, PD0Triple


def canonical_json(obj):
    return json.dumps(obj, sort_keys=True, indent=1) + "\n"


def digest(obj):
    """Short stable hash of a JSON-able value (used to name class representatives)."""
    return hashlib.sha256(json.dumps(obj, sort_keys=True, separators=(",", ":")).encode()).hexdigest()[:16]


# writing

def cochain_to_json(x, with_group=False):
    vals = x.values.reshape(-1, 2)
    if x.kind == BIT:
        entries = vals.tolist()
    else:
        entries = [[str(Phase(int(p), x.denominator)), str(Phase(int(m), x.denominator))] for p, m in vals]
    out = {"degree": x.degree, "kind": x.kind, "entries": entries}
    if x.kind == PHASE:
        out["denominator"] = x.denominator
    if with_group:
        out["group"] = x.group.to_json()
    return out


def to_json(obj):
    if isinstance(obj, FiniteGroup):
        return obj.to_json()
    if isinstance(obj, Cochain):
        return dict(cochain_to_json(obj, with_group=True), type="cochain")
    if isinstance(obj, PD0Triple):
        return {"type": "triple", "group": obj.group.to_json(), "a": list(obj.a.values),
                "kappa": cochain_to_json(obj.kappa), "c": cochain_to_json(obj.c)}
    if isinstance(obj, CRTPentuple):
        return {"type": "pentuple", "group": obj.group.to_json(), "a": list(obj.a.values), "b": list(obj.b),
                "kappaR": cochain_to_json(obj.kappa_r), "kappaL": cochain_to_json(obj.kappa_l),
                "cR": cochain_to_json(obj.c_r)}
    if isinstance(obj, EquivCertificate):
        return {"type": "equiv-certificate", "group": obj.m.group.to_json(),
                "m": cochain_to_json(obj.m), "sigma": cochain_to_json(obj.sigma)}
    if isinstance(obj, ReductionCertificate):
        out = {"type": "reduction-certificate", "group": obj.m.group.to_json(), "lift": list(obj.lift),
               "checks": [{"name": v.name, "passed": v.passed, "witness": list(v.witness), "detail": v.detail}
                          for v in obj.checks]}
        for key, attr in _CERT_FIELDS:
            out[key] = cochain_to_json(getattr(obj, attr))
        return out
    raise TypeError(f"cannot serialize {type(obj).__name__}")


_CERT_FIELDS = (("m", "m"), ("kappa", "kappa"), ("kappaPrime", "kappa_prime"),
                ("cIntermediate", "c_intermediate"), ("cTilde", "c_tilde"), ("cHat", "c_hat"),
                ("sigma", "sigma"), ("eta", "eta"))


def dumps(obj):
    return canonical_json(to_json(obj))


def write_bundle(obj, path):
    Path(path).write_text(dumps(obj), encoding="utf-8")


# reading

def _require(obj, keys, optional, location):
    if not isinstance(obj, dict):
        raise ParseError("expected a JSON object", location)
    missing = [k for k in keys if k not in obj]
    if missing:
        raise ParseError(f"missing keys {missing}", location)
    unknown = set(obj) - set(keys) - set(optional)
    if unknown:
        raise ParseError(f"unknown keys {sorted(unknown)}", location)


def _int(x, location, lo=None):
    if not isinstance(x, int) or isinstance(x, bool) or (lo is not None and x < lo):
        raise ParseError("expected an integer" + (f" >= {lo}" if lo is not None else ""), location)
    return x


def _bits(x, n, location):
    if not isinstance(x, list) or len(x) != n:
        raise ParseError(f"expected a list of {n} bits", location)
    for i, v in enumerate(x):
        if v not in (0, 1) or isinstance(v, bool):
            raise ParseError("expected 0 or 1", f"{location}/{i}")
    return tuple(x)


def _group(value, base, location):
    if isinstance(value, str):
        path = Path(value)
        if base is not None and not path.is_absolute():
            path = Path(base) / path
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as e:
            raise ParseError(f"cannot read group file {value!r}: {e.strerror}", location) from None
        try:
            value = json.loads(text)
        except json.JSONDecodeError as e:
            raise ParseError(f"invalid JSON in {value!r}: {e.msg}", location) from None
    return group_from_json(value, location)


def cochain_from_json(obj, group, location="", strict=True):
    """Parse a cochain body; ``strict`` rejects non-reduced fractions such as ``"3/6"``."""
    _require(obj, ("degree", "kind", "entries"), ("denominator", "group", "type"), location)
    degree = _int(obj["degree"], f"{location}/degree", 1)
    if degree > 4:
        raise ParseError("degree must be in 1..4", f"{location}/degree")
    kind = obj["kind"]
    if kind not in KINDS:
        raise ParseError(f"kind must be one of {list(KINDS)}", f"{location}/kind")
    n = group.order
    size = n ** degree
    entries = obj["entries"]
    if not isinstance(entries, list) or len(entries) != size:
        raise ParseError(f"expected {size} entries", f"{location}/entries")
    if kind == BIT:
        if "denominator" in obj:
            raise ParseError("bit cochains carry no denominator", f"{location}/denominator")
        vals = np.zeros((size, 2), dtype=np.int64)
        for i, e in enumerate(entries):
            if not isinstance(e, list) or len(e) != 2:
                raise ParseError("entry must be [plus, minus]", f"{location}/entries/{i}")
            for j, v in enumerate(e):
                if v not in (0, 1) or isinstance(v, bool):
                    raise ParseError("bit must be 0 or 1", f"{location}/entries/{i}/{j}")
                vals[i, j] = v
        return Cochain(group, degree, BIT, vals.reshape((n,) * degree + (2,)))
    if "denominator" not in obj:
        raise ParseError("phase cochains need a denominator", location)
    N = _int(obj["denominator"], f"{location}/denominator", 1)
    vals = np.zeros((size, 2), dtype=np.int64)
    for i, e in enumerate(entries):
        if not isinstance(e, list) or len(e) != 2:
            raise ParseError("entry must be [plus, minus]", f"{location}/entries/{i}")
        for j, s in enumerate(e):
            loc = f"{location}/entries/{i}/{j}"
            p = Phase.parse(s, strict=strict, location=loc)
            if N % p.denominator:
                raise ParseError(f"phase {s} does not have denominator dividing {N}", loc)
            vals[i, j] = p.numerator * (N // p.denominator)
    x = Cochain(group, degree, PHASE, vals.reshape((n,) * degree + (2,)), N)
    if strict and x.denominator != N:
        raise ParseError(f"denominator {N} is not the least common denominator ({x.denominator})",
                         f"{location}/denominator")
    return x


def _expect(x, degree, kind, location):
    if x.degree != degree or x.kind != kind:
        raise ParseError(f"expected a degree-{degree} {kind} cochain", location)
    return x


def _hom(values, group, location):
    bits = _bits(values, group.order, location)
    try:
        return Z2Hom(group, bits)
    except ValueError as e:
        raise ParseError(str(e), location) from None


def from_json(obj, base=None, strict=True):
    """Typed object from a parsed bundle."""
    if not isinstance(obj, dict):
        raise ParseError("bundle must be a JSON object", "")
    kind = obj.get("type")
    if kind is None:
        if "table" in obj:
            return group_from_json(obj)
        raise ParseError("bundle has no 'type' key", "")
    if kind == "cochain":
        _require(obj, ("type", "group", "degree", "kind", "entries"), ("denominator",), "")
        G = _group(obj["group"], base, "/group")
        return cochain_from_json(obj, G, "", strict)
    if kind == "triple":
        _require(obj, ("type", "group", "a", "kappa", "c"), (), "")
        G = _group(obj["group"], base, "/group")
        a = _hom(obj["a"], G, "/a")
        kappa = _expect(cochain_from_json(obj["kappa"], G, "/kappa", strict), 2, BIT, "/kappa")
        c = _expect(cochain_from_json(obj["c"], G, "/c", strict), 3, PHASE, "/c")
        return PD0Triple(c, kappa, a)
    if kind == "pentuple":
        _require(obj, ("type", "group", "a", "b", "kappaR", "kappaL", "cR"), (), "")
        G = _group(obj["group"], base, "/group")
        a = _hom(obj["a"], G, "/a")
        b = _bits(obj["b"], G.order, "/b")
        kr = _expect(cochain_from_json(obj["kappaR"], G, "/kappaR", strict), 2, BIT, "/kappaR")
        kl = _expect(cochain_from_json(obj["kappaL"], G, "/kappaL", strict), 2, BIT, "/kappaL")
        cr = _expect(cochain_from_json(obj["cR"], G, "/cR", strict), 3, PHASE, "/cR")
        return CRTPentuple(cr, kr, kl, b, a)
    if kind == "equiv-certificate":
        _require(obj, ("type", "group", "m", "sigma"), (), "")
        G = _group(obj["group"], base, "/group")
        m = _expect(cochain_from_json(obj["m"], G, "/m", strict), 1, BIT, "/m")
        sigma = _expect(cochain_from_json(obj["sigma"], G, "/sigma", strict), 2, PHASE, "/sigma")
        return EquivCertificate(m, sigma)
    if kind == "reduction-certificate":
        _require(obj, ("type", "group", "lift", "checks") + tuple(k for k, _ in _CERT_FIELDS), (), "")
        G = _group(obj["group"], base, "/group")
        lift = obj["lift"]
        if not isinstance(lift, list) or len(lift) != 2:
            raise ParseError("lift must be a pair of integers", "/lift")
        fields = {attr: cochain_from_json(obj[key], G, f"/{key}", strict) for key, attr in _CERT_FIELDS}
        checks = []
        for i, v in enumerate(obj["checks"]):
            loc = f"/checks/{i}"
            _require(v, ("name", "passed", "witness", "detail"), (), loc)
            checks.append(Verdict(v["name"], bool(v["passed"]), tuple(v["witness"]), v["detail"]))
        return ReductionCertificate(lift=tuple(_int(x, "/lift") for x in lift), checks=tuple(checks), **fields)
    raise ParseError(f"unknown bundle type {kind!r}", "/type")


def loads(text, base=None, strict=True):
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e.msg} (line {e.lineno}, column {e.colno})") from None
    return from_json(obj, base, strict)


def read_bundle(path, strict=True):
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError(f"cannot read {str(path)!r}: {e.strerror}") from None
    return loads(text, base=path.parent, strict=strict)
