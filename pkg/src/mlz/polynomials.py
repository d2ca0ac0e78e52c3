"""Exact homogeneous polynomials attached to matroids.

Every polynomial here lives in Z[x0, x1..xn] (rational coefficients after
differentiation are still exact), is homogeneous, and is multilinear in
x1..xn; only x0 carries higher powers.  A term is therefore keyed by the
pair (e0, mask): the x0 exponent and the squarefree support over {1..n}.

The generating polynomials:

* basis_poly(M)         -- one squarefree monomial per basis, degree rank.
* indep_poly(M)         -- sum over independent sets I of x0^(n-|I|) * x_I,
                           degree n.
* reduced_indep_poly(M) -- indep_poly differentiated (n - rank) times in x0,
                           degree rank.
* f_slice(M, k)         -- the size-k layer of the independent-set sum.

Calculus (partial derivatives, directional derivatives, evaluation,
Hessians, the matrix of first-partial coefficients) is exact throughout;
no floating point exists in this package.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence

from .linalg import SymMatrix
from .matroids import Matroid, Mask, bits_of, elems_of, mask_of, popcount

TermKey = tuple[int, Mask]  # (x0 exponent, support mask over {1..n})


class HomogPoly:
    """Sparse homogeneous polynomial, multilinear outside x0.

    `active` is the ordered tuple of variable indices the polynomial is
    declared over (0 means x0); Hessians and gradient matrices range over
    exactly these variables.  `terms` maps (e0, mask) to a non-zero exact
    coefficient.  The zero polynomial is an empty term map with a degree
    tag.
    """

    __slots__ = ("active", "degree", "terms")

    def __init__(self, active: Sequence[int], degree: int, terms: dict):
        self.active = tuple(active)
        self.degree = degree
        self.terms = terms
        allowed = set(self.active)
        for (e0, mask), c in terms.items():
            if c == 0:
                raise ValueError("zero coefficient stored in term map")
            if e0 + popcount(mask) != degree:
                raise ValueError(f"term {(e0, mask)} is not homogeneous of degree {degree}")
            if e0 and 0 not in allowed:
                raise ValueError("x0 appears but is not an active variable")
            for b in bits_of(mask):
                if b + 1 not in allowed:
                    raise ValueError(f"x{b+1} appears but is not active")

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        """Term-level equality; the active declarations may differ."""
        return (
            isinstance(other, HomogPoly)
            and self.degree == other.degree
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.degree, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        return f"HomogPoly({poly_str(self)!r})"

    def coefficient(self, e0: int, mask: Mask):
        return self.terms.get((e0, mask), 0)


def _sorted_terms(p: HomogPoly):
    return sorted(p.terms.items(), key=lambda kv: (-kv[0][0], kv[0][1]))


def poly_str(p: HomogPoly) -> str:
    """Canonical text form: terms by (e0 desc, mask asc), exact coefficients."""
    if p.is_zero:
        return "0"
    parts = []
    for (e0, mask), c in _sorted_terms(p):
        factors = []
        if e0 == 1:
            factors.append("x0")
        elif e0 > 1:
            factors.append(f"x0^{e0}")
        factors.extend(f"x{e}" for e in elems_of(mask))
        body = "*".join(factors)
        if not factors:
            parts.append(str(c))
        elif c == 1:
            parts.append(body)
        else:
            parts.append(f"{c}*{body}")
    return " + ".join(parts)


def poly_json(p: HomogPoly) -> list[dict]:
    return [
        {"e0": e0, "vars": list(elems_of(mask)), "c": str(c)}
        for (e0, mask), c in _sorted_terms(p)
    ]


# -- constructors -------------------------------------------------------------


def basis_poly(m: Matroid) -> HomogPoly:
    """Sum of x_B over bases B; degree rank, active {1..n}."""
    terms = {(0, b): 1 for b in m.bases}
    return HomogPoly(range(1, m.n + 1), m.rank, terms)


def indep_poly(m: Matroid) -> HomogPoly:
    """Sum of x0^(n-|I|) x_I over independent sets; degree n, active {0..n}."""
    n = m.n
    terms = {(n - popcount(s), s): 1 for s in m.independent_masks}
    return HomogPoly(range(0, n + 1), n, terms)


def reduced_indep_poly(m: Matroid) -> HomogPoly:
    """indep_poly hit with d/dx0 exactly (n - rank) times."""
    p = indep_poly(m)
    for _ in range(m.n - m.rank):
        p = partial(p, 0)
    return p


def f_slice(m: Matroid, k: int) -> HomogPoly:
    """Degree-k layer: sum of x_I over independent k-sets (f_0 = 1)."""
    if not 0 <= k <= m.rank:
        raise ValueError(f"slice index {k} out of range 0..{m.rank}")
    terms = {
        (0, s): 1 for s in m.independent_masks if popcount(s) == k
    }
    return HomogPoly(range(1, m.n + 1), k, terms)


# -- calculus -----------------------------------------------------------------


def partial(p: HomogPoly, i: int) -> HomogPoly:
    """d/dx_i, exact; the active variable list is unchanged."""
    if i not in p.active:
        raise ValueError(f"variable x{i} is not active")
    terms: dict[TermKey, object] = {}
    if i == 0:
        for (e0, mask), c in p.terms.items():
            if e0:
                terms[(e0 - 1, mask)] = c * e0
    else:
        bit = 1 << (i - 1)
        for (e0, mask), c in p.terms.items():
            if mask & bit:
                terms[(e0, mask ^ bit)] = c
    return HomogPoly(p.active, p.degree - 1, terms)


def iterated_partial(p: HomogPoly, orders: Sequence[int]) -> HomogPoly:
    """Apply d/dx_i orders[pos] times for each active variable (by position)."""
    for i, k in zip(p.active, orders):
        for _ in range(k):
            p = partial(p, i)
            if p.is_zero:
                return p
    return p


def linear_apply(p: HomogPoly, coeffs: Sequence) -> HomogPoly:
    """(sum_i coeffs[pos] * d/dx_i) p, coefficients aligned with p.active."""
    if len(coeffs) != len(p.active):
        raise ValueError("coefficient vector length must match active variables")
    terms: dict[TermKey, object] = {}
    for c, i in zip(coeffs, p.active):
        if c == 0:
            continue
        for key, pc in partial(p, i).terms.items():
            new = terms.get(key, 0) + c * pc
            if new == 0:
                terms.pop(key, None)
            else:
                terms[key] = new
    return HomogPoly(p.active, p.degree - 1, terms)


def evaluate(p: HomogPoly, point: Sequence):
    """Exact value at a point given in active-variable order."""
    if len(point) != len(p.active):
        raise ValueError("point length must match active variables")
    coord = dict(zip(p.active, point))
    x0 = coord.get(0, 0)
    total = 0
    for (e0, mask), c in p.terms.items():
        v = c
        if e0:
            v *= x0 ** e0
        for b in bits_of(mask):
            v *= coord[b + 1]
        total += v
    return total


def hessian_at(p: HomogPoly, point: Sequence) -> SymMatrix:
    """Matrix of second partials at the point, over the active variables."""
    if p.degree < 2:
        raise ValueError("Hessian needs degree >= 2")
    if len(point) != len(p.active):
        raise ValueError("point length must match active variables")
    firsts = [partial(p, i) for i in p.active]
    size = len(p.active)
    rows = [[0] * size for _ in range(size)]
    for a in range(size):
        for b in range(a, size):
            v = evaluate(partial(firsts[a], p.active[b]), point)
            rows[a][b] = v
            rows[b][a] = v
    return SymMatrix(rows)


def gradient_matrix(p: HomogPoly) -> list[list]:
    """Coefficient matrix of the first partials.

    Rows follow the active variable order; columns are the union of the
    monomials appearing in any first partial, sorted by (e0 desc, mask asc).
    The rank of this matrix is the dimension of the span of the partials.
    """
    if p.degree < 1:
        raise ValueError("gradient needs degree >= 1")
    firsts = [partial(p, i) for i in p.active]
    keys = sorted(
        {k for q in firsts for k in q.terms}, key=lambda k: (-k[0], k[1])
    )
    pos = {k: j for j, k in enumerate(keys)}
    rows = []
    for q in firsts:
        row = [0] * len(keys)
        for k, c in q.terms.items():
            row[pos[k]] = c
        rows.append(row)
    return rows


# -- structural helpers -------------------------------------------------------


def rename_vars(p: HomogPoly, new_of_old: dict[int, int]) -> HomogPoly:
    """Rename variables; x0 may only map to x0.  Used to undo minor relabelings."""
    new_active = []
    for i in p.active:
        j = new_of_old.get(i, i)
        if (i == 0) != (j == 0):
            raise ValueError("x0 cannot be renamed to a multilinear variable")
        new_active.append(j)
    terms: dict[TermKey, object] = {}
    for (e0, mask), c in p.terms.items():
        new_mask = mask_of(new_of_old.get(e, e) for e in elems_of(mask))
        if popcount(new_mask) != popcount(mask):
            raise ValueError("variable renaming collapsed a monomial")
        terms[(e0, new_mask)] = c
    return HomogPoly(sorted(new_active), p.degree, terms)


def expand_class_sums(
    p: HomogPoly, groups: Sequence[Iterable[int]], nvars: int
) -> HomogPoly:
    """Substitute x_k -> sum of x_e over groups[k-1] (disjoint groups); x0 stays.

    The result is declared over {0..nvars} or {1..nvars} matching p.
    """
    group_elems = [tuple(g) for g in groups]
    terms: dict[TermKey, object] = {}

    def expand(mask: Mask) -> list[Mask]:
        outs = [0]
        for b in bits_of(mask):
            choices = group_elems[b]
            outs = [o | (1 << (e - 1)) for o in outs for e in choices]
        return outs

    for (e0, mask), c in p.terms.items():
        for new_mask in expand(mask):
            key = (e0, new_mask)
            terms[key] = terms.get(key, 0) + c
    active = range(0, nvars + 1) if 0 in p.active else range(1, nvars + 1)
    return HomogPoly(active, p.degree, {k: v for k, v in terms.items() if v != 0})


def scale(p: HomogPoly, factor) -> HomogPoly:
    if factor == 0:
        return HomogPoly(p.active, p.degree, {})
    return HomogPoly(p.active, p.degree, {k: factor * c for k, c in p.terms.items()})


def add(p: HomogPoly, q: HomogPoly) -> HomogPoly:
    if p.degree != q.degree:
        raise ValueError("degree mismatch")
    if p.active != q.active:
        raise ValueError("active variable mismatch")
    terms = dict(p.terms)
    for k, c in q.terms.items():
        new = terms.get(k, 0) + c
        if new == 0:
            terms.pop(k, None)
        else:
            terms[k] = new
    return HomogPoly(p.active, p.degree, terms)


def proportional(p: HomogPoly, q: HomogPoly) -> bool:
    """True when one polynomial is a scalar multiple of the other."""
    if p.is_zero or q.is_zero:
        return True
    if set(p.terms) != set(q.terms) or p.degree != q.degree:
        return False
    key = next(iter(p.terms))
    cp, cq = p.terms[key], q.terms[key]
    return all(Fraction(c) * cq == Fraction(q.terms[k]) * cp for k, c in p.terms.items())


def reduced_from_slices(m: Matroid) -> HomogPoly:
    """Closed-form reduced polynomial: sum_k (n-k)!/(r-k)! x0^(r-k) f_k.

    Used as a cross-check against the derivative route.
    """
    n, r = m.n, m.rank
    terms: dict[TermKey, object] = {}
    for s in m.independent_masks:
        k = popcount(s)
        terms[(r - k, s)] = factorial(n - k) // factorial(r - k)
    return HomogPoly(range(0, n + 1), r, terms)
