from itertools import combinations_with_replacement

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dcrystal.brackets import bracket_text, reduce_brackets
from dcrystal.cartan import Root, coroot_pairing, height, positive_roots, simple_root_epsilon
from dcrystal.crystalgraph import KOSTANT, generate
from dcrystal.kostant import (
    KostantPartition,
    all_partitions,
    bracket_sequence_kp,
    e_kp,
    epsilon_kp,
    f_kp,
    phi_kp,
    phi_set,
    weight_kp,
)

B, G = Root.beta, Root.gamma


def test_phi_n_order_and_directions():
    seq = phi_set(4, 4)
    assert [r for r, _ in seq] == [
        G(1, 4), B(1, 2), G(1, 3), B(1, 3), G(2, 4), B(2, 2), G(2, 3), B(2, 3), G(3, 4)
    ]
    closes = {r for r, s in seq if s == ")"}
    assert closes == {G(1, 4), G(1, 3), G(2, 4), G(2, 3), G(3, 4)}


def test_phi_2_in_d4():
    seq = phi_set(2, 4)
    assert [r for r, _ in seq] == [B(1, 2), B(1, 1), G(1, 2), G(1, 3), B(2, 2)]
    assert "".join(s for _, s in seq) == ")()()"
    assert seq[-1] == (B(2, 2), ")")


@pytest.mark.parametrize("n", range(4, 8))
def test_phi_sets_are_valid_and_sized(n):
    for i in range(1, n + 1):
        roots = [r for r, _ in phi_set(i, n)]
        assert len(set(roots)) == len(roots)
        assert all(r.is_valid(n) for r in roots)
        expected = 4 * (i - 1) + 1 if i < n else 4 * (n - 2) + 1
        assert len(roots) == expected


def test_phi_set_invalid_index():
    with pytest.raises(ValueError):
        phi_set(5, 4)


def test_bracket_sequence_worked(ex_alpha):
    seq = bracket_sequence_kp(ex_alpha, 4)
    assert bracket_text(seq) == "))))())"
    red = reduce_brackets(seq)
    assert red.n_close == 5 and red.n_open == 0
    assert seq[red.closes[-1]].source == G(3, 4)


def test_bracket_sequence_single_row_example():
    a = KostantPartition(4, {B(1, 1): 4, B(1, 3): 2, G(1, 4): 1, G(1, 2): 2})
    seq = bracket_sequence_kp(a, 2)
    assert bracket_text(seq) == "(((())"
    red = reduce_brackets(seq)
    assert seq[red.opens[0]].source == B(1, 1)
    assert f_kp(a, 2) == a.add(B(1, 1), -1).add(B(1, 2))


def test_empty_partition():
    z = KostantPartition.empty(4)
    for i in range(1, 5):
        assert bracket_sequence_kp(z, i) == []
        assert e_kp(z, i) is None
        assert epsilon_kp(z, i) == 0
        assert phi_kp(z, i) == 0
    assert f_kp(z, 1) == KostantPartition(4, {B(1, 1): 1})
    assert weight_kp(z) == (0, 0, 0, 0)


def test_worked_operators(ex_alpha):
    assert f_kp(ex_alpha, 4) == ex_alpha.add(G(3, 4))
    assert e_kp(ex_alpha, 4) == ex_alpha.add(G(3, 4), -1)
    assert epsilon_kp(ex_alpha, 4) == 5


def test_weight_worked(ex_alpha):
    # parts as simple-root coordinate vectors, converted with hand-written alpha_i
    alphas = [(1, -1, 0, 0), (0, 1, -1, 0), (0, 0, 1, -1), (0, 0, 1, 1)]
    parts = [
        (5, (1, 0, 0, 0)), (1, (1, 1, 1, 1)), (3, (1, 2, 1, 1)), (2, (0, 1, 0, 1)),
        (1, (0, 1, 1, 0)), (1, (0, 1, 1, 1)), (1, (0, 0, 1, 0)), (2, (0, 0, 0, 1)),
    ]
    w = [0, 0, 0, 0]
    for m, c in parts:
        for s in range(4):
            for t in range(4):
                w[t] -= m * c[s] * alphas[s][t]
    assert weight_kp(ex_alpha) == tuple(w) == (-9, -2, -5, -2)


def test_weight_simple():
    assert weight_kp(KostantPartition(4, {B(1, 1): 1})) == (-1, 1, 0, 0)


def test_canonical_order_and_json(ex_alpha):
    assert [r for r, _ in ex_alpha.parts()] == [
        B(1, 1), G(1, 3), G(1, 2), G(2, 4), B(2, 3), G(2, 3), B(3, 3), G(3, 4)
    ]
    doc = ex_alpha.to_json()
    assert doc["parts"][0] == {"kind": "beta", "i": 1, "k": 1, "mult": 5}
    assert KostantPartition.from_json(doc) == ex_alpha


def test_construction_guards():
    with pytest.raises(ValueError):
        KostantPartition(4, {B(1, 4): 1})
    with pytest.raises(ValueError):
        KostantPartition(4, {B(1, 1): -1})
    assert KostantPartition(4, {B(1, 1): 0}) == KostantPartition.empty(4)


def test_axioms_on_ball(balls):
    for n in (4, 5):
        g = balls[(KOSTANT, n)]
        for a in g.nodes:
            for i in range(1, n + 1):
                fa = f_kp(a, i)
                assert e_kp(fa, i) == a
                ea = e_kp(a, i)
                if ea is not None:
                    assert f_kp(ea, i) == a
                assert weight_kp(fa) == tuple(x - y for x, y in zip(weight_kp(a), simple_root_epsilon(i, n)))
                assert epsilon_kp(fa, i) == epsilon_kp(a, i) + 1
                assert phi_kp(a, i) - epsilon_kp(a, i) == coroot_pairing(i, weight_kp(a), n)
                steps, z = 0, a
                while (z := e_kp(z, i)) is not None:
                    steps += 1
                assert steps == epsilon_kp(a, i)


def _brute_all(n, max_height):
    """Every multiset of roots with total height <= max_height, by plain enumeration."""
    roots = positive_roots(n)
    out = set()
    for size in range(max_height + 1):
        for combo in combinations_with_replacement(roots, size):
            if sum(height(r, n) for r in combo) <= max_height:
                counts = {}
                for r in combo:
                    counts[r] = counts.get(r, 0) + 1
                out.add(KostantPartition(n, counts))
    return out


def test_all_partitions_matches_brute_force():
    assert all_partitions(4, 4) == _brute_all(4, 4)


@pytest.mark.parametrize("depth", range(0, 6))
def test_bfs_reaches_every_partition(depth):
    g = generate(KOSTANT, 4, depth)
    assert set(g.nodes) == _brute_all(4, depth)


@settings(max_examples=100, deadline=None)
@given(st.integers(4, 7), st.data())
def test_random_partitions_invert(n, data):
    roots = positive_roots(n)
    parts = data.draw(st.dictionaries(st.sampled_from(roots), st.integers(1, 3), max_size=6))
    a = KostantPartition(n, parts)
    for i in range(1, n + 1):
        assert e_kp(f_kp(a, i), i) == a
        ea = e_kp(a, i)
        if ea is not None:
            assert f_kp(ea, i) == a
