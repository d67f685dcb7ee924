"""Node arithmetic for the implicit recursion tree."""

import pytest

from tftmul.tree import (
    ROOT,
    Node,
    even,
    first_leaf,
    is_leaf,
    node_elements,
    node_len,
    odd,
    parent,
    rising_parent,
)


def all_nodes(n):
    """Every node reachable from the root by child steps."""
    out = []
    stack = [ROOT]
    while stack:
        S = stack.pop()
        out.append(S)
        if node_len(S, n) > 1:
            stack.append(even(S))
            stack.append(odd(S))
    return out


def test_node_len_basics():
    assert node_len(ROOT, 6) == 6
    assert node_len(Node(0, 1), 6) == 3
    assert node_len(Node(1, 1), 6) == 3
    assert node_len(Node(1, 2), 6) == 2
    assert node_len(Node(3, 2), 6) == 1
    with pytest.raises(ValueError):
        node_len(Node(6, 1), 6)
    with pytest.raises(ValueError):
        node_len(Node(-1, 0), 6)


def test_children_split_lengths():
    # even child rounds up, odd child rounds down
    for n in range(1, 65):
        for S in all_nodes(n):
            m = node_len(S, n)
            if m == 1:
                assert is_leaf(S, n)
                continue
            assert node_len(even(S), n) == (m + 1) // 2
            assert node_len(odd(S), n) == m // 2


def test_children_partition_elements():
    for n in (1, 2, 3, 6, 7, 16, 23):
        for S in all_nodes(n):
            if is_leaf(S, n):
                continue
            mine = node_elements(S, n)
            ev = node_elements(even(S), n)
            od = node_elements(odd(S), n)
            assert sorted(ev + od) == mine
            assert ev == mine[0::2]
            assert od == mine[1::2]


def test_child_of_leaf_rejected_when_length_known():
    leaf = Node(3, 2)
    assert is_leaf(leaf, 6)
    with pytest.raises(ValueError):
        even(leaf, 6)
    with pytest.raises(ValueError):
        odd(leaf, 6)
    # without n the arithmetic itself still works
    assert even(leaf) == Node(3, 3)


def test_parent_inverts_children():
    for n in (2, 3, 6, 13, 32):
        for S in all_nodes(n):
            if is_leaf(S, n):
                continue
            assert parent(even(S)) == S
            assert parent(odd(S)) == S
    with pytest.raises(ValueError):
        parent(ROOT)


def test_first_leaf_follows_even_spine():
    assert first_leaf(ROOT, 1) == ROOT
    assert first_leaf(ROOT, 6) == Node(0, 3)
    for n in (1, 2, 5, 6, 17, 64):
        S = first_leaf(ROOT, n)
        assert is_leaf(S, n)
        assert S.q == 0
        walk = ROOT
        while not is_leaf(walk, n):
            walk = even(walk)
        assert walk == S


def test_rising_parent_finds_the_odd_turn():
    for n in (3, 6, 13, 40):
        for S in all_nodes(n):
            if S.q == 0:
                continue
            R = rising_parent(S, n)
            # R is an odd child; everything between S and R was even
            assert R.q >= 1 << (R.r - 1)
            walk = S
            while walk != R:
                assert walk == even(parent(walk))
                walk = parent(walk)
    with pytest.raises(ValueError):
        rising_parent(Node(0, 3), 8)


def test_q_stays_below_stride():
    for n in (1, 6, 37, 64):
        for S in all_nodes(n):
            assert 0 <= S.q < max(1, 1 << S.r)
            assert S.q < n
