"""Shared oracles for the test suite.

Everything here is implemented independently of the package internals:
determinants use rational Gaussian elimination, Pfaffians use explicit
perfect-matching sums with permutation-parity signs, and symmetric
functions are expanded in raw exponent dictionaries with local
arithmetic helpers.  Agreement between these oracles and the package is
what the tests assert.
"""

from fractions import Fraction
from functools import cache
from itertools import combinations


def fraction_det(matrix):
    """Determinant by plain Gaussian elimination over Fractions."""
    a = [[Fraction(x) for x in row] for row in matrix]
    h = len(a)
    det = Fraction(1)
    for k in range(h):
        piv = next((r for r in range(k, h) if a[r][k]), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        det *= a[k][k]
        for r in range(k + 1, h):
            f = a[r][k] / a[k][k]
            if f:
                for j in range(k, h):
                    a[r][j] -= f * a[k][j]
    return det


def matchings(idx):
    """All perfect matchings of idx, each pair (a, b) with a before b."""
    if not idx:
        yield []
        return
    first = idx[0]
    for k in range(1, len(idx)):
        rest = idx[1:k] + idx[k + 1:]
        for m in matchings(rest):
            yield [(first, idx[k])] + m


def perm_parity(seq):
    """+1 or -1: parity of the permutation given as a sequence."""
    inv = sum(1 for a, b in combinations(seq, 2) if a > b)
    return -1 if inv % 2 else 1


def pf_matchings(matrix):
    """Pfaffian as a signed sum over perfect matchings (numbers only)."""
    h = len(matrix)
    if h % 2:
        raise ValueError("odd size")
    total = 0
    for m in matchings(tuple(range(h))):
        sign = perm_parity([v for pair in m for v in pair])
        prod = 1
        for a, b in m:
            prod *= matrix[a][b]
        total += sign * prod
    return total


# ---- raw exponent-dict polynomials in n variables -------------------------

def xp_add(a, b):
    out = dict(a)
    for e, c in b.items():
        s = out.get(e, 0) + c
        if s:
            out[e] = s
        else:
            del out[e]
    return out


def xp_mul(a, b):
    out = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            s = out.get(e, 0) + c1 * c2
            if s:
                out[e] = s
            else:
                del out[e]
    return out


def xp_scale(a, k):
    return {e: k * c for e, c in a.items()} if k else {}


def xp_const(k, n):
    return {(0,) * n: k} if k else {}


@cache
def elem_x(i, n):
    """e_i(x1..xn) as an exponent dict, built from combinations."""
    if i == 0:
        return {(0,) * n: 1}
    if i > n:
        return {}
    out = {}
    for subset in combinations(range(n), i):
        e = [0] * n
        for v in subset:
            e[v] = 1
        out[tuple(e)] = 1
    return out


@cache
def elem_x_squares(i, n):
    """e_i of the squared variables x1^2..xn^2."""
    return {tuple(2 * v for v in e): c for e, c in elem_x(i, n).items()}


@cache
def oracle_qpair(i, j, n):
    """Two-row value, expanded directly in x-variables."""
    total = xp_mul(elem_x(i, n), elem_x(j, n))
    for p in range(1, j + 1):
        term = xp_scale(xp_mul(elem_x(i + p, n), elem_x(j - p, n)), 2)
        total = xp_add(total, xp_scale(term, -1) if p % 2 else term)
    return total


def oracle_qtilde(parts, n):
    """Q[I] in x-variables via the perfect-matching Pfaffian.

    Completely parallel to the package path but with independent
    arithmetic, an independent Pfaffian algorithm, and no symbolic
    intermediate.
    """
    h = len(parts)
    if h == 0:
        return xp_const(1, n)
    if h == 1:
        return dict(elem_x(parts[0], n))
    idx = tuple(parts) if h % 2 == 0 else tuple(parts) + (0,)
    total = {}
    for m in matchings(tuple(range(len(idx)))):
        sign = perm_parity([v for pair in m for v in pair])
        prod = xp_const(sign, n)
        for a, b in m:
            prod = xp_mul(prod, oracle_qpair(idx[a], idx[b], n))
        total = xp_add(total, prod)
    return total


def xp_of(xpoly):
    """Exponent dict of a package XPoly value."""
    return dict(xpoly.terms)


def rand_sympoly(rng, max_degree, max_part, n_terms, coeff_bound=9):
    """Random SymPoly built via public constructors."""
    from qschubert.sympoly import SymPoly

    terms = {}
    for _ in range(n_terms):
        d = rng.randint(0, max_degree)
        key = []
        while d > 0:
            part = rng.randint(1, min(max_part, d))
            key.append(part)
            d -= part
        c = rng.randint(-coeff_bound, coeff_bound)
        key = tuple(sorted(key, reverse=True))
        terms[key] = terms.get(key, 0) + c
    return SymPoly(terms)


def rand_skew(rng, size, bound=9):
    """Random integer skew-symmetric matrix as a list of lists."""
    m = [[0] * size for _ in range(size)]
    for p in range(size):
        for q in range(p + 1, size):
            v = rng.randint(-bound, bound)
            m[p][q] = v
            m[q][p] = -v
    return m
