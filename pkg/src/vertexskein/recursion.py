"""The six difference equations satisfied by the vertex coefficients,
and a level-by-level solver that reconstructs the whole table from the
single initial value T(empty, empty, empty) = 1.

Each equation id R<i><j> names one relation.  Its residual at a triple
is LHS minus RHS; the vertex table makes every residual vanish, and the
system pins the table down uniquely.
"""

from __future__ import annotations

from .qscalar import QScalar, ZERO, ONE
from . import partitions as pt
from . import symfunc as sf
from .vertexcore import CoefficientTable


class IncompleteDataError(KeyError):
    """Raised when a residual needs a table entry the lookup lacks."""

    def __init__(self, triple):
        super().__init__(triple)
        self.triple = triple

    def __str__(self):
        return "no value supplied for triple %r" % (self.triple,)


class UniquenessFailure(RuntimeError):
    """Raised if a level system fails to determine its unknowns."""


# id -> (sbox slot, transpose sbox partition,
#        shrinking slot, kappa factor on shrink,
#        growing slot, kappa factor on grow)
_EQUATIONS = {
    "R32": (0, False, 1, True, 2, False),
    "R13": (1, False, 2, True, 0, False),
    "R21": (2, False, 0, True, 1, False),
    "R31": (1, True, 0, False, 2, True),
    "R12": (2, True, 1, False, 0, True),
    "R23": (0, True, 2, False, 1, True),
}

RECURSION_IDS = tuple(_EQUATIONS)


def _fetch(lookup, triple):
    try:
        if callable(lookup):
            val = lookup(triple)
        else:
            val = lookup[triple]
    except KeyError:
        raise IncompleteDataError(triple) from None
    if val is None:
        raise IncompleteDataError(triple)
    return val


def _replaced(t, slot, lam):
    out = list(t)
    out[slot] = lam
    return tuple(out)


def equation_terms(rid, t):
    """The residual of `rid` at `t` as a list of (coefficient, triple)
    pairs; the residual is the coefficient-weighted sum of table values."""
    sb_slot, sb_tr, mslot, mkap, pslot, pkap = _EQUATIONS[rid]
    sb_lam = t[sb_slot]
    if sb_tr:
        sb_lam = pt.transpose(sb_lam)
    terms = [(sf.s_box_at(sf.point(sb_lam, 1)), t)]
    for beta in pt.remove_corners(t[mslot]):
        coef = -ONE
        if mkap:
            coef = coef * QScalar.s_power(pt.kappa(beta) - pt.kappa(t[mslot]))
        terms.append((coef, _replaced(t, mslot, beta)))
    for gamma in pt.add_corners(t[pslot]):
        coef = ONE
        if pkap:
            coef = coef * QScalar.s_power(pt.kappa(gamma) - pt.kappa(t[pslot]))
        terms.append((coef, _replaced(t, pslot, gamma)))
    return terms


def residual(rid, t, lookup):
    """LHS minus RHS of equation `rid` at triple `t`, exactly."""
    acc = ZERO
    for coef, triple in equation_terms(rid, t):
        acc = acc + coef * _fetch(lookup, triple)
    return acc


def two_by_two_determinant(n):
    """Determinant q^(-1) - q^n of the elementary two-step system; its
    nonvanishing for n >= 1 is what makes each level solvable."""
    if n < 1:
        raise ValueError("n must be positive")
    det = QScalar.q_power(-1) - QScalar.q_power(n)
    assert det != ZERO
    return det


def _triples_of_size(n):
    out = []
    for a in range(n + 1):
        for b in range(n - a + 1):
            c = n - a - b
            for l1 in pt.enumerate_partitions(a):
                for l2 in pt.enumerate_partitions(b):
                    for l3 in pt.enumerate_partitions(c):
                        out.append((l1, l2, l3))
    return out


def _solve_level(values, n):
    """Determine every triple of total size n+1 from the residual
    equations indexed by size-n triples."""
    unknowns = _triples_of_size(n + 1)
    col = {t: i for i, t in enumerate(unknowns)}
    rows = []
    for t in _triples_of_size(n):
        for rid in RECURSION_IDS:
            coeffs = {}
            rhs = ZERO
            for coef, triple in equation_terms(rid, t):
                if triple in col:
                    j = col[triple]
                    coeffs[j] = coeffs.get(j, ZERO) + coef
                else:
                    rhs = rhs - coef * values[triple]
            coeffs = {j: c for j, c in coeffs.items() if c != ZERO}
            rows.append((coeffs, rhs))
    # Sparse exact Gaussian elimination.
    pivot_rows = {}
    for coeffs, rhs in rows:
        while coeffs:
            j = min(coeffs)
            if j not in pivot_rows:
                lead = coeffs.pop(j)
                inv = ONE / lead
                pivot_rows[j] = ({k: inv * c for k, c in coeffs.items()},
                                 inv * rhs)
                break
            pc, pr = pivot_rows[j]
            factor = coeffs.pop(j)
            merged = dict(coeffs)
            for k, c in pc.items():
                v = merged.get(k, ZERO) - factor * c
                if v == ZERO:
                    merged.pop(k, None)
                else:
                    merged[k] = v
            coeffs = merged
            rhs = rhs - factor * pr
        else:
            if rhs != ZERO:
                raise UniquenessFailure(
                    "inconsistent system at level %d" % n)
    if len(pivot_rows) != len(unknowns):
        raise UniquenessFailure(
            "level %d system is rank deficient (%d of %d pivots)"
            % (n, len(pivot_rows), len(unknowns)))
    # Back substitution, highest column first.
    solution = {}
    for j in sorted(pivot_rows, reverse=True):
        pc, pr = pivot_rows[j]
        val = pr
        for k, c in pc.items():
            val = val - c * solution[k]
        solution[j] = val
    for t, i in col.items():
        values[t] = solution[i]


def solve_recursion(max_size):
    """Rebuild the coefficient table on all triples of total size up to
    `max_size` from the initial condition alone."""
    if max_size < 0:
        raise ValueError("max_size must be nonnegative")
    values = {((), (), ()): ONE}
    for n in range(max_size):
        _solve_level(values, n)
    return CoefficientTable(values, max_size, "recursion")
