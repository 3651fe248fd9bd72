"""Schur and skew Schur functions at infinite q-power specializations.

A specialization point is a pair (nu, eps) with nu a partition and eps
in {+1, -1}, standing for the infinite variable set

    { q^(eps * (nu_i - i + 1/2)) : i >= 1 },   nu_i = 0 beyond len(nu).

So (∅, +1) is q^rho = (q^-1/2, q^-3/2, ...) and (∅, -1) is
q^-rho = (q^1/2, q^3/2, ...).  All values are exact QScalars; the variable
set is never truncated: complete homogeneous functions come from the
generating function with a closed form for the geometric tail.
"""

from __future__ import annotations

from functools import lru_cache

from .qscalar import QScalar, ZERO, ONE
from .partitions import contains

Q_RHO = ((), 1)
Q_MINUS_RHO = ((), -1)


def point(nu, eps):
    nu = tuple(nu)
    if eps not in (1, -1):
        raise ValueError("eps must be +1 or -1")
    return (nu, eps)


def _var_exponent(nu, eps, i):
    """Exponent of s for the i-th variable (i >= 1): s^(eps*(2 nu_i - 2i + 1))."""
    nui = nu[i - 1] if i <= len(nu) else 0
    return eps * (2 * nui - 2 * i + 1)


@lru_cache(maxsize=None)
def _h_list(nu, eps, upto):
    """[h_0, ..., h_upto] at the point (nu, eps)."""
    # tail over the full rho alphabet: h_k = s^(-eps k) / prod_{j<=k}(1 - s^(-2 eps j))
    tail = [ONE]
    denom = ONE
    for k in range(1, upto + 1):
        denom = denom * (ONE - QScalar.s_power(-2 * eps * k))
        tail.append(QScalar.s_power(-eps * k) / denom)
    ell = len(nu)
    if ell == 0:
        return tuple(tail)
    # finite correction: prod_i (1 - t s^rho_i) / (1 - t s^(nu_i + rho_i)), i <= ell
    series = tail
    for i in range(1, ell + 1):
        a = QScalar.s_power(eps * (1 - 2 * i))            # q^(eps rho_i)
        b = QScalar.s_power(_var_exponent(nu, eps, i))    # q^(eps (nu_i + rho_i))
        # multiply by (1 - t*a): new[k] = series[k] - a*series[k-1]
        step = [series[0]]
        for k in range(1, upto + 1):
            step.append(series[k] - a * series[k - 1])
        # multiply by 1/(1 - t*b): geometric, cumulative recurrence
        out = [step[0]]
        for k in range(1, upto + 1):
            out.append(step[k] + b * out[k - 1])
        series = out
    return tuple(series)


def complete_homogeneous(k, pt):
    """h_k at the specialization point; h_k = 0 for k < 0, h_0 = 1."""
    if k < 0:
        return ZERO
    nu, eps = pt
    return _h_list(tuple(nu), eps, k)[k]


def det(rows):
    """Determinant over the QScalar field by Gaussian elimination."""
    n = len(rows)
    if n == 0:
        return ONE
    m = [list(r) for r in rows]
    result = ONE
    for col in range(n):
        piv = None
        for r in range(col, n):
            if not m[r][col].is_zero():
                piv = r
                break
        if piv is None:
            return ZERO
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            result = -result
        pivval = m[col][col]
        result = result * pivval
        for r in range(col + 1, n):
            factor = m[r][col]
            if factor.is_zero():
                continue
            factor = factor / pivval
            for c in range(col + 1, n):
                m[r][c] = m[r][c] - factor * m[col][c]
    return result


@lru_cache(maxsize=None)
def skew_schur_at(lam, eta, pt):
    """s_{lam/eta} at the point, by the Jacobi-Trudi determinant."""
    lam = tuple(lam)
    eta = tuple(eta)
    if not contains(lam, eta):
        return ZERO
    if lam == eta:
        return ONE
    n = len(lam)
    eta_ext = eta + (0,) * (n - len(eta))
    rows = []
    for i in range(n):
        rows.append([
            complete_homogeneous(lam[i] - eta_ext[j] - (i + 1) + (j + 1), pt)
            for j in range(n)])
    return det(rows)


def schur_at(lam, pt):
    """s_lam at the point."""
    return skew_schur_at(tuple(lam), (), pt)


def s_box_at(pt):
    """s_[1] at the point; for (lam, +1) this equals z*C_lam + 1/z."""
    return complete_homogeneous(1, pt)


# ---------------------------------------------------------------------------
# Littlewood-Richardson coefficients and finite-variable Schur polynomials


@lru_cache(maxsize=None)
def lr_coefficient(lam, mu, nu):
    """c^lam_{mu nu}: LR skew tableaux of shape lam/mu and content nu."""
    lam = tuple(lam)
    mu = tuple(mu)
    nu = tuple(nu)
    if sum(mu) + sum(nu) != sum(lam):
        return 0
    if not contains(lam, mu):
        return 0
    if not nu:
        return 1
    n = len(lam)
    mu_ext = mu + (0,) * (n - len(mu))
    k = len(nu)
    # cells in reverse reading order: rows top to bottom, right to left
    cells = []
    for i in range(n):
        for j in range(lam[i] - 1, mu_ext[i] - 1, -1):
            cells.append((i, j))
    grid = [[0] * lam[i] for i in range(n)]
    counts = [0] * (k + 1)
    total = 0

    def place(idx):
        nonlocal total
        if idx == len(cells):
            total += 1
            return
        i, j = cells[idx]
        lo, hi = 1, k
        # column strict: greater than the entry above
        if i > 0 and j < lam[i - 1] and (j >= mu_ext[i - 1]):
            lo = max(lo, grid[i - 1][j] + 1)
        elif i > 0 and j < lam[i - 1]:
            pass  # cell above belongs to mu: no constraint from it
        # row weakly increasing: at most the entry to the right
        if j + 1 < lam[i] and grid[i][j + 1]:
            hi = min(hi, grid[i][j + 1])
        for v in range(lo, hi + 1):
            if counts[v] >= nu[v - 1]:
                continue
            if v > 1 and counts[v] >= counts[v - 1]:
                continue  # lattice word condition
            counts[v] += 1
            grid[i][j] = v
            place(idx + 1)
            grid[i][j] = 0
            counts[v] -= 1

    place(0)
    return total


def schur_polynomial_finite(lam, nvars):
    """s_lam(x_1..x_N) as {exponent tuple: int} by SSYT enumeration."""
    lam = tuple(lam)
    if len(lam) > nvars:
        return {}
    if not lam:
        return {(0,) * nvars: 1}
    n = len(lam)
    grid = [[0] * lam[i] for i in range(n)]
    cells = [(i, j) for i in range(n) for j in range(lam[i])]
    out = {}

    def place(idx):
        if idx == len(cells):
            exp = [0] * nvars
            for row in grid:
                for v in row:
                    exp[v - 1] += 1
            key = tuple(exp)
            out[key] = out.get(key, 0) + 1
            return
        i, j = cells[idx]
        lo = 1
        if j > 0:
            lo = max(lo, grid[i][j - 1])
        if i > 0:
            lo = max(lo, grid[i - 1][j] + 1)
        for v in range(lo, nvars + 1):
            grid[i][j] = v
            place(idx + 1)
            grid[i][j] = 0

    place(0)
    return out


def multiply_schur_expansion(mu, nu, nvars):
    """Expand s_mu * s_nu in finite variables; oracle for lr_coefficient."""
    a = schur_polynomial_finite(mu, nvars)
    b = schur_polynomial_finite(nu, nvars)
    prod = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            key = tuple(x + y for x, y in zip(e1, e2))
            prod[key] = prod.get(key, 0) + c1 * c2
    return prod
