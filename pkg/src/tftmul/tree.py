"""Node arithmetic for the implicit radix-2 recursion tree.

A node (q, r) names the strided view {X[q + i * 2^r]} of a length-n
buffer; nothing is ever materialized.  Each operation is O(1) index
arithmetic except the two spine walks, which are loops bounded by the
tree depth.  For every node reachable from the root, q < 2^r < 2n.
"""

from typing import NamedTuple


class Node(NamedTuple):
    q: int
    r: int


ROOT = Node(0, 0)


def node_len(S, n):
    """Number of elements of the strided view: ceil((n - q) / 2^r)."""
    q, r = S
    if not 0 <= q < n:
        raise ValueError(f"node {S!r} lies outside a length-{n} buffer")
    return (n - q + (1 << r) - 1) >> r


def is_leaf(S, n):
    return node_len(S, n) == 1


def even(S, n=None):
    """Child holding the even-local-index elements: (q, r + 1)."""
    if n is not None and is_leaf(S, n):
        raise ValueError(f"leaf {S!r} has no children")
    q, r = S
    return Node(q, r + 1)


def odd(S, n=None):
    """Child holding the odd-local-index elements: (q + 2^r, r + 1)."""
    if n is not None and is_leaf(S, n):
        raise ValueError(f"leaf {S!r} has no children")
    q, r = S
    return Node(q + (1 << r), r + 1)


def parent(S):
    """Invert even/odd: drop a stride level, adjusting q for odd children."""
    q, r = S
    if r == 0:
        raise ValueError("the root has no parent")
    half = 1 << (r - 1)
    return Node(q - half, r - 1) if q >= half else Node(q, r - 1)


def first_leaf(S, n):
    """Follow even children down to a leaf."""
    q, r = S
    if not 0 <= q < n:
        raise ValueError(f"node {S!r} lies outside a length-{n} buffer")
    while (n - q + (1 << r) - 1) >> r > 1:
        r += 1
    return Node(q, r)


def rising_parent(S, n=None):
    """Highest ancestor reached while S stays an even child.

    Climbs while the node is the even child of its parent and returns the
    first ancestor that is an odd child (possibly S itself).  Undefined on
    the leftmost spine (q = 0), where every ancestor is an even child.
    """
    q, r = S
    if q == 0:
        raise ValueError("rising_parent is undefined on the leftmost spine")
    if n is not None and not 0 <= q < n:
        raise ValueError(f"node {S!r} lies outside a length-{n} buffer")
    while q < 1 << (r - 1):
        r -= 1
    return Node(q, r)


def node_elements(S, n):
    """Buffer indices covered by the node, in local order (test helper)."""
    q, r = S
    return [q + (i << r) for i in range(node_len(S, n))]
