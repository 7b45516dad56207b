import itertools
import json

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from pd0.errors import InvalidGroupError, ParseError
from pd0.groups import (FiniteGroup, Z2Hom, all_z2_homs, check_axioms, dump_group, inverse_of,
                        load_group, make_cyclic, make_dihedral, make_direct_product)


def test_cyclic_tables():
    assert make_cyclic(1).table.tolist() == [[0]]
    assert make_cyclic(2).table.tolist() == [[0, 1], [1, 0]]
    assert make_cyclic(4).table[3, 2] == 1
    with pytest.raises(ValueError):
        make_cyclic(0)


def test_direct_product_indexing():
    V = make_direct_product(make_cyclic(2), make_cyclic(2))
    assert V.order == 4
    assert all(inverse_of(V, g) == g for g in range(4))
    G = make_dihedral(4)
    assert np.array_equal(make_direct_product(G, make_cyclic(1)).table, G.table)
    P = make_direct_product(make_cyclic(2), make_cyclic(4))
    assert P.order == 8
    assert 1 * 4 + 1 == 5 and P.mul(5, 5) == 2


def test_product_is_componentwise():
    G, H = make_cyclic(3), make_cyclic(4)
    P = make_direct_product(G, H)
    for (g1, h1), (g2, h2) in itertools.product(itertools.product(range(3), range(4)), repeat=2):
        assert P.mul(g1 * 4 + h1, g2 * 4 + h2) == ((g1 + g2) % 3) * 4 + (h1 + h2) % 4


def test_load_group_examples():
    G = load_group('{"order": 2, "table": [[0, 1], [1, 0]]}')
    assert G == make_cyclic(2)
    with pytest.raises(InvalidGroupError) as e:
        load_group('{"order": 2, "table": [[0, 1], [1, 1]]}')
    assert "1" in str(e.value) and "permutation" in str(e.value)
    D4 = load_group(dump_group(make_dihedral(4)))
    assert check_axioms(D4) is None


def test_dihedral_associative_by_triple_loop():
    t = make_dihedral(4).table
    for g, h, k in itertools.product(range(8), repeat=3):
        assert t[t[g, h], k] == t[g, t[h, k]]


def test_load_group_parse_errors():
    with pytest.raises(ParseError):
        load_group("{not json")
    with pytest.raises(ParseError) as e:
        load_group('{"order": 2, "table": [[0, 1], [1]]}')
    assert e.value.location == "/table/1"
    with pytest.raises(ParseError):
        load_group('{"order": 2, "table": [[0, 1], [1, 0]], "extra": 1}')


def test_identity_must_be_index_zero():
    # Z2 with identity at index 1
    with pytest.raises(InvalidGroupError) as e:
        load_group('{"order": 2, "table": [[1, 0], [0, 1]]}')
    assert "identity must be index 0" in str(e.value)


def test_check_axioms_reports():
    assert check_axioms(make_cyclic(6)) is None
    bad = FiniteGroup([[0, 0], [1, 0]], check=False)
    assert check_axioms(bad).constraint == "identity-row"


def _nonassociative_latin_square():
    # an order-5 loop (Latin square with identity 0)
    return np.array([[0, 1, 2, 3, 4],
                     [1, 0, 3, 4, 2],
                     [2, 4, 0, 1, 3],
                     [3, 2, 4, 0, 1],
                     [4, 3, 1, 2, 0]])


def test_nonassociative_latin_square_witness():
    t = _nonassociative_latin_square()
    assert all(sorted(t[i]) == list(range(5)) and sorted(t[:, i]) == list(range(5)) for i in range(5))
    assert not all(t[t[g, h], k] == t[g, t[h, k]] for g, h, k in itertools.product(range(5), repeat=3))
    v = check_axioms(FiniteGroup(t, check=False))
    assert v.constraint == "associativity"
    g, h, k = v.witness
    assert t[t[g, h], k] != t[g, t[h, k]]


def test_inverse_of():
    assert inverse_of(make_cyclic(4), 3) == 1
    assert inverse_of(make_dihedral(3), 0) == 0
    assert inverse_of(make_direct_product(make_cyclic(2), make_cyclic(2)), 3) == 3
    with pytest.raises(ValueError):
        inverse_of(make_cyclic(4), 4)


GROUPS = [make_cyclic(n) for n in (1, 2, 3, 4, 6)] + [make_dihedral(3), make_dihedral(4),
          make_direct_product(make_cyclic(2), make_cyclic(2)),
          make_direct_product(make_cyclic(2), make_cyclic(4))]


@pytest.mark.parametrize("G", GROUPS, ids=lambda G: f"order{G.order}")
def test_inverse_table(G):
    for g in range(G.order):
        h = inverse_of(G, g)
        assert G.mul(g, h) == 0 and G.mul(h, g) == 0


def test_hom_counts():
    assert [h.values for h in all_z2_homs(make_cyclic(2))] == [(0, 0), (0, 1)]
    assert len(all_z2_homs(make_cyclic(3))) == 1
    assert len(all_z2_homs(make_direct_product(make_cyclic(2), make_cyclic(2)))) == 4


@pytest.mark.parametrize("G", GROUPS, ids=lambda G: f"order{G.order}")
def test_homs_complete_and_sound(G):
    n = G.order
    listed = {h.values for h in all_z2_homs(G)}
    assert (0,) * n in listed
    for v in listed:
        assert all(v[G.mul(g, h)] == v[g] ^ v[h] for g in range(n) for h in range(n))
    if n <= 4:
        candidates = itertools.product((0, 1), repeat=n)
    else:
        rng = np.random.default_rng(n)
        candidates = [tuple(rng.integers(0, 2, n)) for _ in range(300)]
    for v in candidates:
        is_hom = all(v[G.mul(g, h)] == v[g] ^ v[h] for g in range(n) for h in range(n))
        assert is_hom == (tuple(int(x) for x in v) in listed)


def test_homs_sorted_and_generator_search_agree():
    from pd0.groups import _homs_by_generators
    G = make_direct_product(make_dihedral(4), make_cyclic(2))
    listed = [h.values for h in all_z2_homs(G)]
    assert listed == sorted(listed)
    assert sorted(_homs_by_generators(G)) == listed


def test_z2hom_rejects_non_hom():
    with pytest.raises(ValueError):
        Z2Hom(make_cyclic(4), (0, 1, 1, 0))


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(GROUPS))
def test_round_trip(G):
    assert load_group(dump_group(G)) == G
    assert json.loads(dump_group(G))["order"] == G.order


def test_groups_immutable():
    G = make_cyclic(3)
    with pytest.raises(AttributeError):
        G.names = ()
    with pytest.raises(ValueError):
        G.table[0, 0] = 1
