"""Finite groups as multiplication tables, and their Z2-valued homomorphisms.

Elements are indices ``0..n-1`` with the identity at index 0; ``table[g, h]``
is the index of ``g*h``.

>>> G = make_direct_product(make_cyclic(2), make_cyclic(4))
>>> G.order, G.mul(5, 5)
(8, 2)
>>> [h.values for h in all_z2_homs(make_cyclic(2))]
[(0, 0), (0, 1)]
"""

import itertools
import json

import numpy as np

from .errors import InvalidGroupError, ParseError, Violation


class FiniteGroup:
    """Immutable finite group given by its Cayley table."""

    __slots__ = ("table", "names", "inverse", "_key")

    def __init__(self, table, names=None, check=True):
        table = np.array(table, dtype=np.int64)
        if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
            raise InvalidGroupError(Violation("shape", detail="table must be a non-empty square array"))
        n = table.shape[0]
        if names is None:
            names = tuple(str(i) for i in range(n))
        names = tuple(str(x) for x in names)
        if len(names) != n:
            raise InvalidGroupError(Violation("names", detail=f"expected {n} names, got {len(names)}"))
        table.setflags(write=False)
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "names", names)
        if check:
            v = check_axioms(self)
            if v is not None:
                raise InvalidGroupError(v)
        inv = np.argmin(table, axis=1) if check else _inverse_scan(table)
        inv.setflags(write=False)
        object.__setattr__(self, "inverse", inv)
        object.__setattr__(self, "_key", table.tobytes())

    def __setattr__(self, name, value):
        raise AttributeError("FiniteGroup is immutable")

    @property
    def order(self):
        return self.table.shape[0]

    def __len__(self):
        return self.order

    def mul(self, g, h):
        return int(self.table[g, h])

    def __eq__(self, other):
        return isinstance(other, FiniteGroup) and self._key == other._key and self.names == other.names

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"FiniteGroup(order={self.order})"

    def to_json(self):
        return {"order": self.order, "table": self.table.tolist(), "names": list(self.names)}


def _inverse_scan(table):
    n = table.shape[0]
    inv = np.zeros(n, dtype=np.int64)
    for g in range(n):
        hits = np.nonzero(table[g] == 0)[0]
        inv[g] = hits[0] if len(hits) else -1
    return inv


def check_axioms(G):
    """Return ``None`` if ``G`` is a group with identity 0, else the first violation."""
    t = np.asarray(G.table)
    n = t.shape[0]
    if t.min() < 0 or t.max() >= n:
        bad = tuple(int(i) for i in np.argwhere((t < 0) | (t >= n))[0])
        return Violation("range", bad, "entry outside 0..n-1")
    ar = np.arange(n)
    if not np.array_equal(t[0], ar):
        h = int(np.nonzero(t[0] != ar)[0][0])
        return Violation("identity-row", (0, h), f"identity must be index 0, but 0*{h} = {t[0, h]}")
    if not np.array_equal(t[:, 0], ar):
        g = int(np.nonzero(t[:, 0] != ar)[0][0])
        return Violation("identity-column", (g, 0), f"identity must be index 0, but {g}*0 = {t[g, 0]}")
    for g in range(n):
        if len(np.unique(t[g])) != n:
            return Violation("latin-row", (g,), f"row {g} is not a permutation")
    for h in range(n):
        if len(np.unique(t[:, h])) != n:
            return Violation("latin-column", (h,), f"column {h} is not a permutation")
    # (gh)k vs g(hk), all triples at once
    left = t[t[:, :, None], ar[None, None, :]]
    right = t[ar[:, None, None], t[None, :, :]]
    bad = np.argwhere(left != right)
    if len(bad):
        g, h, k = (int(x) for x in bad[0])
        return Violation("associativity", (g, h, k), f"(gh)k={left[g, h, k]} but g(hk)={right[g, h, k]}")
    return None


def inverse_of(G, g):
    if not 0 <= g < G.order:
        raise ValueError(f"element index {g} out of range for order {G.order}")
    return int(G.inverse[g])


def make_cyclic(n):
    if n < 1:
        raise ValueError("cyclic group order must be >= 1")
    ar = np.arange(n)
    return FiniteGroup((ar[:, None] + ar[None, :]) % n)


def make_direct_product(G, H):
    """Direct product with ``(g, h)`` stored at index ``g*|H| + h``."""
    n, m = G.order, H.order
    g = np.repeat(np.arange(n), m)
    h = np.tile(np.arange(m), n)
    table = G.table[g[:, None], g[None, :]] * m + H.table[h[:, None], h[None, :]]
    names = [f"({a},{b})" for a in G.names for b in H.names]
    return FiniteGroup(table, names)


def make_dihedral(n):
    """Dihedral group of order ``2n``; ``r^i`` is index ``i``, ``s r^i`` is ``n+i``."""
    if n < 1:
        raise ValueError("dihedral parameter must be >= 1")
    order = 2 * n
    table = np.zeros((order, order), dtype=np.int64)
    for x in range(order):
        for y in range(order):
            fx, ix = divmod(x, n)
            fy, iy = divmod(y, n)
            # (s^fx r^ix)(s^fy r^iy) = s^(fx+fy) r^((-1)^fy ix + iy)
            i = ((-ix if fy else ix) + iy) % n
            table[x, y] = ((fx + fy) % 2) * n + i
    names = [f"r{i}" for i in range(n)] + [f"sr{i}" for i in range(n)]
    return FiniteGroup(table, names)


class Z2Hom:
    """A homomorphism ``G -> Z2`` stored as its value tuple."""

    __slots__ = ("group", "values", "array")

    def __init__(self, group, values, check=True):
        values = tuple(int(v) for v in values)
        if len(values) != group.order or any(v not in (0, 1) for v in values):
            raise ValueError("Z2Hom needs one bit per group element")
        arr = np.array(values, dtype=np.int64)
        if check and not _is_hom(group, arr):
            raise ValueError(f"{values} is not a homomorphism to Z2")
        arr.setflags(write=False)
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "array", arr)

    def __setattr__(self, name, value):
        raise AttributeError("Z2Hom is immutable")

    def __call__(self, g):
        return self.values[g]

    def __eq__(self, other):
        return isinstance(other, Z2Hom) and self.group == other.group and self.values == other.values

    def __hash__(self):
        return hash(self.values)

    def __repr__(self):
        return f"Z2Hom({list(self.values)})"

    @property
    def is_trivial(self):
        return not any(self.values)


def _is_hom(G, arr):
    return arr[0] == 0 and np.array_equal(arr[G.table], arr[:, None] ^ arr[None, :])


def all_z2_homs(G):
    """Every homomorphism ``G -> Z2``, sorted lexicographically by value tuple."""
    n = G.order
    if n <= 16:
        found = []
        # identity must map to 0, so only the other n-1 bits vary
        for rest in itertools.product((0, 1), repeat=n - 1):
            arr = np.array((0,) + rest, dtype=np.int64)
            if _is_hom(G, arr):
                found.append(tuple(int(v) for v in arr))
    else:
        found = _homs_by_generators(G)
    return [Z2Hom(G, v, check=False) for v in sorted(found)]


def _homs_by_generators(G):
    gens = []
    reached = {0}
    for g in range(1, G.order):
        if g not in reached:
            gens.append(g)
            reached = _closure(G, gens)
    found = []
    for images in itertools.product((0, 1), repeat=len(gens)):
        val = {0: 0}
        frontier = [0]
        ok = True
        while frontier and ok:
            x = frontier.pop()
            for gen, im in zip(gens, images):
                y = G.mul(x, gen)
                v = val[x] ^ im
                if y in val:
                    if val[y] != v:
                        ok = False
                        break
                else:
                    val[y] = v
                    frontier.append(y)
        if ok:
            arr = np.array([val[g] for g in range(G.order)], dtype=np.int64)
            if _is_hom(G, arr):
                found.append(tuple(int(v) for v in arr))
    return found


def _closure(G, gens):
    seen = {0}
    frontier = [0]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = G.mul(x, g)
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return seen


def group_from_json(obj, location=""):
    if not isinstance(obj, dict):
        raise ParseError("group must be a JSON object", location)
    unknown = set(obj) - {"order", "table", "names"}
    if unknown:
        raise ParseError(f"unknown keys {sorted(unknown)}", location)
    if "order" not in obj or "table" not in obj:
        raise ParseError("group needs 'order' and 'table'", location)
    n = obj["order"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ParseError("order must be a positive integer", f"{location}/order")
    table = obj["table"]
    if not isinstance(table, list) or len(table) != n:
        raise ParseError(f"table must have {n} rows", f"{location}/table")
    for i, row in enumerate(table):
        if not isinstance(row, list) or len(row) != n:
            raise ParseError(f"row must have {n} entries", f"{location}/table/{i}")
        for j, x in enumerate(row):
            if not isinstance(x, int) or isinstance(x, bool):
                raise ParseError("entries must be integers", f"{location}/table/{i}/{j}")
    names = obj.get("names")
    if names is not None and (not isinstance(names, list) or len(names) != n
                              or not all(isinstance(s, str) for s in names)):
        raise ParseError(f"names must be a list of {n} strings", f"{location}/names")
    return FiniteGroup(table, names)


def load_group(text):
    """Parse a group file (bytes or str). Raises ParseError or InvalidGroupError."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e.msg} (line {e.lineno}, column {e.colno})") from e
    return group_from_json(obj)


def dump_group(G):
    return json.dumps(G.to_json(), sort_keys=True)
