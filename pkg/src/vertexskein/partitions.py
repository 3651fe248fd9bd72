"""Integer partitions and Young-diagram statistics.

Partitions are plain tuples of weakly decreasing positive integers; the
empty tuple is the empty partition.  Box coordinates are English style,
(row i >= 1, column j >= 1), with content j - i.
"""

from __future__ import annotations

from functools import lru_cache

from .qscalar import QScalar, ZERO, canonicalize


def validate(parts):
    """Return the canonical tuple form, rejecting non-partitions."""
    t = tuple(int(p) for p in parts)
    if any(p <= 0 for p in t):
        raise ValueError("partition parts must be positive: %r" % (parts,))
    if any(t[i] < t[i + 1] for i in range(len(t) - 1)):
        raise ValueError("partition parts must weakly decrease: %r" % (parts,))
    return t


def size(lam):
    return sum(lam)


@lru_cache(maxsize=None)
def transpose(lam):
    if not lam:
        return ()
    out = []
    for j in range(lam[0]):
        out.append(sum(1 for p in lam if p > j))
    return tuple(out)


def kappa(lam):
    """2 * sum of contents; always even, and kappa(transpose) = -kappa."""
    total = 0
    for i, p in enumerate(lam):
        for j in range(p):
            total += j - i
    return 2 * total


def contents(lam):
    return [j - i for i, p in enumerate(lam) for j in range(p)]


def content_polynomial(lam):
    """C_lambda = sum over boxes of q^(content), as a QScalar in s (q = s^2)."""
    cs = contents(lam)
    if not cs:
        return ZERO
    lo = min(cs)
    coeffs = [0] * (2 * (max(cs) - lo) + 1)
    for c in cs:
        coeffs[2 * (c - lo)] += 1
    return canonicalize(tuple(coeffs), (1,), 2 * lo)


def add_corners(lam):
    """All partitions obtained by adding one box, ordered by row index."""
    out = []
    n = len(lam)
    for i in range(n + 1):
        cur = lam[i] if i < n else 0
        above = lam[i - 1] if i > 0 else None
        if above is None or cur < above:
            grown = list(lam)
            if i < n:
                grown[i] += 1
            else:
                grown.append(1)
            out.append(tuple(grown))
    return out


def remove_corners(lam):
    """All partitions obtained by removing one box, ordered by row index."""
    out = []
    n = len(lam)
    for i in range(n):
        below = lam[i + 1] if i + 1 < n else 0
        if lam[i] > below:
            shrunk = list(lam)
            shrunk[i] -= 1
            if shrunk[i] == 0:
                shrunk.pop(i)
            out.append(tuple(shrunk))
    return out


def corners(lam, direction):
    if direction == "add":
        return add_corners(lam)
    if direction == "remove":
        return remove_corners(lam)
    raise ValueError("direction must be 'add' or 'remove'")


def hook_lengths(lam):
    """Multiset (sorted descending) of hook lengths, one per box."""
    t = transpose(lam)
    hooks = []
    for i, p in enumerate(lam):
        for j in range(p):
            arm = p - (j + 1)
            leg = t[j] - (i + 1)
            hooks.append(arm + leg + 1)
    return sorted(hooks, reverse=True)


def arm_leg(lam):
    """(content, hook) pairs per box, for hook-content product formulas."""
    t = transpose(lam)
    out = []
    for i, p in enumerate(lam):
        for j in range(p):
            out.append((j - i, p - j - 1 + t[j] - i - 1 + 1))
    return out


@lru_cache(maxsize=None)
def enumerate_partitions(n):
    """All partitions of n in reverse lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return ((),)
    out = []

    def rec(remaining, maxpart, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for p in range(min(maxpart, remaining), 0, -1):
            prefix.append(p)
            rec(remaining - p, p, prefix)
            prefix.pop()

    rec(n, n, [])
    return tuple(out)


def partitions_up_to(n):
    """All partitions of size <= n, by size then reverse-lex."""
    out = []
    for k in range(n + 1):
        out.extend(enumerate_partitions(k))
    return out


def contains(lam, mu):
    """Whether the diagram of mu fits inside the diagram of lam."""
    if len(mu) > len(lam):
        return False
    return all(m <= l for m, l in zip(mu, lam))


def subdiagrams(lam):
    """All partitions contained in lam, deterministic order."""

    def gen(i, prev, prefix):
        # the current prefix is itself a subdiagram; rows after a zero row stop
        yield tuple(prefix)
        if i == len(lam):
            return
        for p in range(min(prev, lam[i]), 0, -1):
            prefix.append(p)
            yield from gen(i + 1, p, prefix)
            prefix.pop()

    return list(gen(0, lam[0] if lam else 0, []))


def to_json(lam):
    return list(lam)


def from_json(obj):
    return validate(obj)


def qscalar_q_power(k):
    """q^k as a QScalar (integer k)."""
    return QScalar.s_power(2 * k)
