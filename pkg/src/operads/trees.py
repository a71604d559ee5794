"""Planar binary rooted trees.

A tree is stored as its serialization: "." for a leaf, "(L,R)" for an
internal node, no whitespace.  Lexicographic order on these strings is
the canonical basis order, so strings double as basis keys.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb

LEAF = "."
Y = "(.,.)"  # the unique tree with two leaves


def is_leaf(t):
    return t == LEAF


def leaf_count(t):
    return t.count(LEAF)


def validate(t):
    """Raise ValueError unless t is a well-formed tree string."""
    pos, ok = _scan(t, 0)
    if not ok or pos != len(t):
        raise ValueError("malformed tree: %r" % t)


def _scan(s, i):
    if i < len(s) and s[i] == LEAF:
        return i + 1, True
    if i >= len(s) or s[i] != "(":
        return i, False
    i, ok = _scan(s, i + 1)
    if not ok or i >= len(s) or s[i] != ",":
        return i, False
    i, ok = _scan(s, i + 1)
    if not ok or i >= len(s) or s[i] != ")":
        return i, False
    return i + 1, True


def vee(t, s):
    """Create a new root and graft t (left) and s (right) under it."""
    return "(" + t + "," + s + ")"


def split(u):
    """Inverse of vee: the two subtrees of the root."""
    if u == LEAF:
        raise ValueError("cannot split a leaf")
    depth = 0
    for i, ch in enumerate(u):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 1:
            return u[1:i], u[i + 1:-1]
    raise ValueError("malformed tree: %r" % u)


def over(t, s):
    """t/s: graft t on the first (leftmost) leaf of s."""
    i = s.index(LEAF)
    return s[:i] + t + s[i + 1:]


def under(t, s):
    """t\\s: graft s on the last (rightmost) leaf of t."""
    i = t.rindex(LEAF)
    return t[:i] + s + t[i + 1:]


@lru_cache(maxsize=None)
def enumerate_trees(n):
    """All trees with n leaves, sorted by their string form.

    The list length is the Catalan number c_{n-1}.
    """
    if n < 1:
        raise ValueError("need at least one leaf")
    if n == 1:
        return (LEAF,)
    out = []
    for i in range(1, n):
        for l in enumerate_trees(i):
            for r in enumerate_trees(n - i):
                out.append(vee(l, r))
    return tuple(sorted(out))


def catalan(n):
    return comb(2 * n, n) // (n + 1)


def left_comb(n):
    """The tree with n+1 leaves whose internal nodes sit on the left branch."""
    if n < 1:
        raise ValueError("n must be >= 1")
    t = Y
    for _ in range(n - 1):
        t = over(Y, t)
    return t


def right_comb(n):
    """Mirror of left_comb: all internal nodes on the right branch."""
    if n < 1:
        raise ValueError("n must be >= 1")
    t = Y
    for _ in range(n - 1):
        t = under(Y, t)
    return t


def path_cut(t, i):
    """Cut t along the path from leaf i to the root.

    Leaves are numbered 0..n left to right; valid cuts are 1 <= i <= n-1.
    Both output trees keep a copy of the dividing path, so the left part
    has i+1 leaves and the right part n-i+1.
    """
    n = leaf_count(t) - 1
    if not 1 <= i <= n - 1:
        raise ValueError("cut index %d out of range for a tree with %d leaves" % (i, n + 1))
    return _cut(t, i)


def _cut(t, i):
    if t == LEAF:
        return LEAF, LEAF
    l, r = split(t)
    nl = leaf_count(l)
    if i < nl:
        ll, lr = _cut(l, i)
        return ll, vee(lr, r)
    rl, rr = _cut(r, i - nl)
    return vee(l, rl), rr
