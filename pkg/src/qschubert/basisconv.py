"""Change of basis into the Qtilde family.

Two expansions are provided, both solved per graded component by exact
integer linear algebra (never by assuming any triangularity):

  expand_in_qtilde   P as an integer combination of Q[I] over partitions
                     with bounded parts (the additive basis).
  module_expand      P as a combination of (prod_k Q[m_k, m_k]) * Q[I]
                     with I strict, the free-module basis over the
                     subring generated by the Q[i, i].

Every solve asserts that the transition matrix is unimodular (integer
determinant +-1) and that the solution is integral; a violation means a
basis bug, not bad input, and raises BasisError.
"""

from functools import cache

from .intlinalg import solve_exact
from .partitions import enumerate_partitions, partition
from .qtilde import qtilde, qtilde_pair
from .sympoly import SymPoly, render_terms


class BasisError(RuntimeError):
    """Internal invariant violation: a claimed basis failed to be one."""


def qmono(key):
    return f"Q[{','.join(map(str, key))}]"


class QExpansion:
    """Integer combination of Q[I], keyed by partition."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        clean = {}
        for key, c in (coeffs or {}).items():
            k = partition(key)
            if c:
                clean[k] = clean.get(k, 0) + c
        self.coeffs = {k: v for k, v in clean.items() if v}

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, QExpansion):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __add__(self, other):
        coeffs = dict(self.coeffs)
        for k, v in other.coeffs.items():
            coeffs[k] = coeffs.get(k, 0) + v
        return QExpansion(coeffs)

    def __rmul__(self, scalar: int):
        return QExpansion({k: scalar * v for k, v in self.coeffs.items()})

    def to_sympoly(self) -> SymPoly:
        total = SymPoly.zero()
        for key, c in self.coeffs.items():
            total = total + qtilde(key) * c
        return total

    def json_obj(self) -> list:
        return [
            {"partition": list(k), "coefficient": self.coeffs[k]}
            for k in sorted(self.coeffs, key=lambda k: (-sum(k), k))
        ]

    def __str__(self):
        return render_terms(self.coeffs, qmono)

    def __repr__(self):
        return f"QExpansion({self})"


class ModuleExpansion:
    """Combination of basis elements (prod_k Q[m_k,m_k]) * Q[I].

    Keys are pairs (I, mu) with I strict; the pair of weights satisfies
    |I| + 2|mu| = degree of the term.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        clean = {}
        for (i, mu), c in (coeffs or {}).items():
            i, mu = partition(i), partition(mu)
            if len(set(i)) != len(i):
                raise ValueError(f"module basis index must be strict, got {i}")
            if c:
                clean[(i, mu)] = clean.get((i, mu), 0) + c
        self.coeffs = {k: v for k, v in clean.items() if v}

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, ModuleExpansion):
            return self.coeffs == other.coeffs
        return NotImplemented

    def ring_part(self) -> QExpansion:
        """The mu = () coefficients: what survives modulo the Q[i,i] ideal."""
        return QExpansion({i: c for (i, mu), c in self.coeffs.items() if not mu})

    def to_sympoly(self) -> SymPoly:
        total = SymPoly.zero()
        for (i, mu), c in self.coeffs.items():
            term = qtilde(i) * c
            for m in mu:
                term = term * qtilde_pair(m, m)
            total = total + term
        return total

    def __repr__(self):
        keys = sorted(self.coeffs, key=lambda k: (k[1], k[0]))
        body = ", ".join(f"{k}: {self.coeffs[k]}" for k in keys)
        return f"ModuleExpansion({{{body}}})"


@cache
def additive_transition(d: int, max_part=None):
    """Transition data for degree d: (basis, rows, matrix).

    basis: partitions indexing the Q[I] columns; rows: partitions
    indexing e-monomial coordinates; matrix[r][c] is the coefficient of
    e-monomial rows[r] in qtilde(basis[c]), truncated to parts <= max_part
    when a bound is given.  Both index sets are the partitions of d with
    parts <= bound, in descending lexicographic order.
    """
    bound = d if max_part is None else max_part
    basis = tuple(enumerate_partitions(d, max_part=bound))
    rows = basis
    cols = []
    for i in basis:
        q = qtilde(i)
        if max_part is not None:
            q = q.truncate_parts(max_part)
        cols.append(q)
    matrix = tuple(tuple(q.terms.get(r, 0) for q in cols) for r in rows)
    return basis, rows, matrix


@cache
def module_transition(d: int, n: int):
    """Transition data for module_expand at degree d in n variables.

    basis: pairs (I, mu), I strict, |I| + 2|mu| = d, all parts <= n,
    listed by descending |I|, then descending lex in I, then in mu.
    rows: partitions of d with parts <= n.  matrix as in
    additive_transition.
    """
    basis = []
    for w in range(d, -1, -2):
        for i in enumerate_partitions(w, max_part=n, strict=True):
            for mu in enumerate_partitions((d - w) // 2, max_part=n):
                basis.append((i, mu))
    rows = tuple(enumerate_partitions(d, max_part=n))
    cols = []
    for i, mu in basis:
        q = qtilde(i)
        for m in mu:
            q = q * qtilde_pair(m, m)
        cols.append(q.truncate_parts(n))
    matrix = tuple(tuple(q.terms.get(r, 0) for q in cols) for r in rows)
    return tuple(basis), rows, matrix


def _solve_component(basis, rows, matrix, comp, what):
    if len(basis) != len(rows):
        raise BasisError(f"{what}: index sets differ in size ({len(basis)} vs {len(rows)})")
    rhs = [comp.terms.get(r, 0) for r in rows]
    try:
        det, xs = solve_exact([list(row) for row in matrix], rhs)
    except ValueError as exc:
        raise BasisError(f"{what}: singular transition matrix") from exc
    if det not in (1, -1):
        raise BasisError(f"{what}: transition determinant {det} is not +-1")
    out = {}
    for key, x in zip(basis, xs):
        if x.denominator != 1:
            raise BasisError(f"{what}: non-integer coefficient {x} at {key}")
        if x.numerator:
            out[key] = x.numerator
    return out


def expand_in_qtilde(p: SymPoly, max_part=None) -> QExpansion:
    """Write p as an integer combination of Q[I] with parts <= max_part.

    With max_part = None the expansion runs over all partitions of each
    degree.  With a finite bound, p must already live in the subring on
    c1..c_max_part; a generator outside it is rejected.
    """
    if max_part is not None and max_part < 1:
        raise ValueError(f"max_part must be positive, got {max_part}")
    if max_part is not None:
        for key in p.terms:
            if key and key[0] > max_part:
                raise ValueError(
                    f"term {key} uses c{key[0]}, not representable with parts <= {max_part}"
                )
    coeffs = {}
    for d, comp in p.homogeneous_components().items():
        if d == 0:
            coeffs[()] = comp.terms[()]
            continue
        basis, rows, matrix = additive_transition(d, max_part)
        coeffs.update(_solve_component(basis, rows, matrix, comp, f"degree {d}"))
    return QExpansion(coeffs)


def module_expand(p: SymPoly, n: int) -> ModuleExpansion:
    """Expand p in the free-module basis over the Q[i,i] subring.

    p is first restricted to n variables (ci with i > n set to zero).
    """
    if n < 1:
        raise ValueError(f"variable count must be positive, got {n}")
    p = p.truncate_parts(n)
    coeffs = {}
    for d, comp in p.homogeneous_components().items():
        if d == 0:
            coeffs[((), ())] = comp.terms[()]
            continue
        basis, rows, matrix = module_transition(d, n)
        coeffs.update(_solve_component(basis, rows, matrix, comp, f"degree {d} over {n} variables"))
    return ModuleExpansion(coeffs)
