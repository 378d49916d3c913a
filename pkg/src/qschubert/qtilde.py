"""The Qtilde family of symmetric functions.

Building blocks, expressed in the generators ci of sympoly:

  one row    Q[i]   = ci
  two rows   Q[i,j] = Q[i]*Q[j] + 2*sum((-1)^p * Q[i+p]*Q[j-p], p=1..j)
  general    Q[I]   = Pfaffian of the skew matrix with entries Q[i_p, i_q]

Odd-length index tuples are padded with a single zero part at the end
before forming the Pfaffian.  Schur Q-functions arise from the same
family by substituting the Chern series of the virtual difference
bundle for the generators.
"""

from functools import cache

from .partitions import partition
from .sympoly import SymPoly, chern_difference, subst


@cache
def qtilde_one(i: int) -> SymPoly:
    """One-row case: the generator ci, with the convention Q[0] = 1."""
    if i < 0:
        raise ValueError(f"index must be nonnegative, got {i}")
    return SymPoly.gen(i)


@cache
def qtilde_pair(i: int, j: int) -> SymPoly:
    """Two-row case for i >= j >= 0."""
    if j < 0 or i < j:
        raise ValueError(f"indices must satisfy i >= j >= 0, got ({i}, {j})")
    total = qtilde_one(i) * qtilde_one(j)
    for p in range(1, j + 1):
        term = 2 * qtilde_one(i + p) * qtilde_one(j - p)
        total = total - term if p % 2 else total + term
    return total


class SkewMatrix:
    """Skew-symmetric matrix of even size, upper triangle stored.

    The diagonal is zero and entries below it are the negatives of their
    mirror images, so only entries (p, q) with p < q are kept.
    """

    __slots__ = ("size", "upper")

    def __init__(self, size: int, upper):
        if size < 0 or size % 2:
            raise ValueError(f"size must be even and nonnegative, got {size}")
        entries = dict(upper)
        for p, q in entries:
            if not 0 <= p < q < size:
                raise ValueError(f"entry ({p}, {q}) outside upper triangle")
        self.size = size
        self.upper = entries

    def __getitem__(self, key):
        p, q = key
        if p < q:
            return self.upper.get((p, q), 0)
        if q < p:
            return -self.upper.get((q, p), 0)
        return 0


def pfaffian(m: SkewMatrix):
    """Pfaffian by recursive expansion along the first remaining row.

    For indices (r_1, ..., r_h), h even, the expansion is
    sum over k >= 2 of (-1)^k * m[r_1, r_k] * Pf(rows without r_1, r_k),
    with Pf of the empty matrix equal to 1.
    """
    memo = {}

    def pf(idx):
        if not idx:
            return 1
        if idx in memo:
            return memo[idx]
        first, rest = idx[0], idx[1:]
        total = 0
        for pos, q in enumerate(rest):
            term = m[first, q] * pf(rest[:pos] + rest[pos + 1:])
            total = total + (term if pos % 2 == 0 else -term)
        memo[idx] = total
        return total

    return pf(tuple(range(m.size)))


def qtilde(parts) -> SymPoly:
    """Q[I] for an arbitrary partition I, strict or not."""
    return _qtilde(partition(parts))


@cache
def _qtilde(parts) -> SymPoly:
    h = len(parts)
    if h == 0:
        return SymPoly.one()
    if h == 1:
        return qtilde_one(parts[0])
    if h == 2:
        return qtilde_pair(parts[0], parts[1])
    idx = parts if h % 2 == 0 else parts + (0,)
    upper = {}
    for p in range(len(idx)):
        for q in range(p + 1, len(idx)):
            upper[(p, q)] = qtilde_pair(idx[p], idx[q])
    return pfaffian(SkewMatrix(len(idx), upper))


def schur_q(parts) -> SymPoly:
    """Schur Q-function: Q[I] with ci replaced by ci of E - E*."""
    parts = partition(parts)
    return subst(qtilde(parts), chern_difference(sum(parts)))
