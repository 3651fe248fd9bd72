"""Single-variable (U(1)) specialization: truncated Laurent series in
x_1, x_2, x_3 over exact scalars, quantum-torus generators acting on
them, the abelian partition function and its annihilating operators,
and the q = 1 augmentation-branch solve."""

from __future__ import annotations

from .qscalar import QScalar, ZERO, ONE


class DivisibilityError(ValueError):
    pass


class TruncationError(ValueError):
    pass


class BranchError(RuntimeError):
    pass


class LaurentSeries3:
    """Finite mapping from integer exponent triples to QScalars, with a
    total-degree truncation N and per-variable lower exponent bounds."""

    def __init__(self, n, terms=None, lower=(-2, -2, -2)):
        self.n = n
        self.lower = tuple(lower)
        self.terms = {}
        if terms:
            for e, c in terms.items():
                if c.is_zero():
                    continue
                if sum(e) > n:
                    continue
                if any(ei < li for ei, li in zip(e, self.lower)):
                    raise ValueError("exponent %r below lower bound %r"
                                     % (e, self.lower))
                self.terms[e] = c

    @staticmethod
    def monomial(n, exps, coef=ONE, lower=(0, 0, 0)):
        return LaurentSeries3(n, {tuple(exps): coef}, lower)

    @staticmethod
    def one(n, lower=(0, 0, 0)):
        return LaurentSeries3.monomial(n, (0, 0, 0), ONE, lower)

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), ZERO)

    def _merged_lower(self, other):
        return tuple(min(a, b) for a, b in zip(self.lower, other.lower))

    def __add__(self, other):
        out = LaurentSeries3(min(self.n, other.n), self.terms,
                             self._merged_lower(other))
        for e, c in other.terms.items():
            if sum(e) > out.n:
                continue
            cur = out.terms.get(e)
            cur = c if cur is None else cur + c
            if cur.is_zero():
                out.terms.pop(e, None)
            else:
                out.terms[e] = cur
        return out

    def __neg__(self):
        return LaurentSeries3(
            self.n, {e: -c for e, c in self.terms.items()}, self.lower)

    def __sub__(self, other):
        return self + (-other)

    def scaled(self, q):
        if q.is_zero():
            return LaurentSeries3(self.n, lower=self.lower)
        return LaurentSeries3(
            self.n, {e: c * q for e, c in self.terms.items()}, self.lower)

    def __mul__(self, other):
        if isinstance(other, QScalar):
            return self.scaled(other)
        n = min(self.n, other.n)
        out = LaurentSeries3(n, lower=self._merged_lower(other))
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
                if sum(e) > n:
                    continue
                cur = out.terms.get(e)
                v = c1 * c2
                cur = v if cur is None else cur + v
                if cur.is_zero():
                    out.terms.pop(e, None)
                else:
                    out.terms[e] = cur
        return out

    def __eq__(self, other):
        if not isinstance(other, LaurentSeries3):
            return NotImplemented
        return self.terms == other.terms

    def is_zero(self):
        return not self.terms

    def substitute_signs(self, eps):
        """x_i -> eps * x_i for a single global sign eps."""
        if eps == 1:
            return self
        return LaurentSeries3(
            self.n,
            {e: (c if sum(e) % 2 == 0 else -c)
             for e, c in self.terms.items()},
            self.lower)

    def items_sorted(self):
        return sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]))

    def to_json(self):
        return [{"exp": list(e), "coef": c.to_json()}
                for e, c in self.items_sorted()]

    def __repr__(self):
        parts = ["(%s) x^%r" % (c.text(), list(e))
                 for e, c in self.items_sorted()]
        return "LaurentSeries3(%s)" % (" + ".join(parts) or "0")


# Generators of the quantum torus action: ("X", i, +-1) multiplies by
# x_i^(+-1), ("Y", i, +-1) sends x_i to q^(+-1) x_i.

def apply_generator(gen, f):
    kind, i, e = gen
    idx = i - 1
    if kind == "Y":
        out = LaurentSeries3(f.n, lower=f.lower)
        for exps, c in f.terms.items():
            out.terms[exps] = c * QScalar.q_power(e * exps[idx])
        return out
    if kind != "X":
        raise ValueError("unknown generator %r" % (gen,))
    out = LaurentSeries3(f.n, lower=f.lower)
    for exps, c in f.terms.items():
        d = exps[idx] + e
        if d < f.lower[idx]:
            raise DivisibilityError(
                "x_%d^(-1) applied to a term with exponent %d at the "
                "lower bound %d" % (i, exps[idx], f.lower[idx]))
        ne = list(exps)
        ne[idx] = d
        if sum(ne) <= f.n:
            out.terms[tuple(ne)] = c
    return out


def pochhammer(base_exp, n_factors, n, lower=(0, 0, 0)):
    """(x;q)_m as a series for a monomial argument q^(k/2) x^exps, or
    1/(x;q)_infinity via the Euler expansion when n_factors is None.

    base_exp is a pair (half_q_power, exponent_triple)."""
    k, exps = base_exp
    x = LaurentSeries3.monomial(n, exps, QScalar.s_power(k), lower)
    if n_factors is None:
        deg = sum(exps)
        if deg <= 0:
            raise ValueError("Euler expansion needs positive degree")
        out = LaurentSeries3.one(n, lower)
        acc = LaurentSeries3.one(n, lower)
        denom = ONE
        j = 1
        while j * deg <= n:
            acc = acc * x
            denom = denom * (ONE - QScalar.q_power(j))
            out = out + acc.scaled(denom.inverse())
            j += 1
        return out
    out = LaurentSeries3.one(n, lower)
    for s in range(n_factors):
        factor = LaurentSeries3.one(n, lower) - \
            x.scaled(QScalar.q_power(s))
        out = out * factor
    return out


def pochhammer_scalar(x, count):
    """(x;q)_count for a QScalar argument."""
    out = ONE
    for s in range(count):
        out = out * (ONE - x * QScalar.q_power(s))
    return out


def abelian_z_direct(n):
    """The printed triple sum for the abelian partition function."""
    out = LaurentSeries3(n, lower=(0, 0, 0))
    half = QScalar.s_power(1)
    z = half - QScalar.s_power(-1)
    for n1 in range(n + 1):
        for n2 in range(n + 1 - n1):
            for n3 in range(n + 1 - n1 - n2):
                pre = (-half) ** (n1 * n1) * (-half) ** (n2 * n2) * \
                    (-half) ** (n3 * n3)
                pre = pre / (pochhammer_scalar(QScalar.q_power(1), n1) *
                             pochhammer_scalar(QScalar.q_power(1), n2) *
                             pochhammer_scalar(QScalar.q_power(1), n3))
                for m12 in (0, 1):
                    for m23 in (0, 1):
                        for m31 in (0, 1):
                            e = (n1 + m12 + m31, n2 + m12 + m23,
                                 n3 + m23 + m31)
                            if sum(e) > n:
                                continue
                            c = pre * QScalar.q_power(
                                n1 * m12 + n2 * m23 + n3 * m31 +
                                m12 * m23 * m31)
                            out = out + LaurentSeries3.monomial(n, e, c)
                e = (n1 + 1, n2 + 1, n3 + 1)
                if sum(e) <= n:
                    c = pre * z * QScalar.q_power(n1 + n2 + n3)
                    out = out + LaurentSeries3.monomial(n, e, c)
    return out


def specialize_z(table, n):
    """Coefficient table placed on x-monomials; only single-row triples
    survive the one-variable Schur specialization."""
    out = LaurentSeries3(n, lower=(0, 0, 0))
    for k1 in range(n + 1):
        for k2 in range(n + 1 - k1):
            for k3 in range(n + 1 - k1 - k2):
                t = ((k1,) if k1 else (), (k2,) if k2 else (),
                     (k3,) if k3 else ())
                val = table.get(t)
                if val is None:
                    raise ValueError("table does not cover %r" % (t,))
                out.terms[(k1, k2, k3)] = val
    out.terms = {e: c for e, c in out.terms.items() if not c.is_zero()}
    return out


def _group(coef_half_power, outer, inner):
    """One operator group: q^(coef/2) * outer-generators applied to a
    1 - (y-term) - (x-term) combination; inner lists (half-power, gen)."""
    return (coef_half_power, outer, inner)


def _std_inner(i, y_half=0, x_half=3):
    """1 - q^(y_half/2) y_i - q^(x_half/2) x_i."""
    return [(0, None, 1), (y_half, ("Y", i, 1), -1),
            (x_half, ("X", i, 1), -1)]


# Each operator is a list of groups; a group is (sign, half-power,
# outer generator or None, inner term list); inner terms are
# (half-power, generator or None, sign).
_OPERATORS = {
    ("main", 1): [(1, 0, None, _std_inner(1, 0, 3)),
                  (-1, 4, ("Y", 2, -1), _std_inner(2, 0, -1)),
                  (-1, 1, ("X", 3, -1), _std_inner(3, 0, 1))],
    ("main", 2): [(1, 0, None, _std_inner(2, 0, 3)),
                  (-1, 4, ("Y", 3, -1), _std_inner(3, 0, -1)),
                  (-1, 1, ("X", 1, -1), _std_inner(1, 0, 1))],
    ("main", 3): [(1, 0, None, _std_inner(3, 0, 3)),
                  (-1, 4, ("Y", 1, -1), _std_inner(1, 0, -1)),
                  (-1, 1, ("X", 2, -1), _std_inner(2, 0, 1))],
    ("F2", 1): [(1, 0, None, _std_inner(1, 0, 3)),
                (1, 2, None, _std_inner(2, 0, 1)),
                (-1, 4, ("Y", 3, -1), _std_inner(3, 0, 1))],
    ("F2", 2): [(1, 5, ("Y", 1, -1), _std_inner(1, 0, -1)),
                (1, 3, ("Y", 2, -1), _std_inner(2, 0, -1)),
                (1, 0, ("X", 3, -1), _std_inner(3, 0, 1))],
    ("F2", 3): [(1, 1, ("X", 1, -1), _std_inner(1, 0, 3)),
                (1, 1, ("X", 2, -1), _std_inner(2, 2, 1)),
                (-1, 0, None, _std_inner(3, 0, 5))],
    ("F3", 1): [(1, 0, None, _std_inner(1, 0, 5)),
                (1, 2, None, _std_inner(2, 0, 3)),
                (-1, 3, ("X", 3, -1), _std_inner(3, 0, 1))],
    ("F3", 2): [(1, 5, ("Y", 1, -1), _std_inner(1, 0, 1)),
                (1, 3, ("Y", 2, -1), _std_inner(2, 0, 1)),
                (-1, 1, None, _std_inner(3, 0, 1))],
    ("F3", 3): [(1, 0, ("X", 1, -1), _std_inner(1, 0, 3)),
                (1, 0, ("X", 2, -1), _std_inner(2, 2, 1)),
                (1, 5, ("Y", 3, -1), _std_inner(3, 0, -3))],
    ("F4", 1): [(1, 0, None, _std_inner(1, 0, 5)),
                (1, 2, None, _std_inner(2, 0, 3)),
                (1, 4, None, _std_inner(3, 0, 1))],
    ("F4", 2): [(1, 0, ("Y", 1, -1), _std_inner(1, 0, 1)),
                (1, -2, ("Y", 2, -1), _std_inner(2, 0, 1)),
                (1, -4, ("Y", 3, -1), _std_inner(3, 0, 1))],
    ("F4", 3): [(1, 0, ("X", 1, -1), _std_inner(1, 0, 5)),
                (1, 0, ("X", 2, -1), _std_inner(2, 2, 3)),
                (1, 0, ("X", 3, -1), _std_inner(3, 4, 1))],
}

FAMILIES = ("main", "F2", "F3", "F4")


class AbelianOperator:
    """Printed annihilation operator: a sum of groups, each a scalar
    times optional x^(-1)/y^(-1) generators applied to a three-term
    1 - (y part) - (x part) combination."""

    def __init__(self, family, i):
        if (family, i) not in _OPERATORS:
            raise ValueError("no operator for %r" % ((family, i),))
        self.family = family
        self.i = i
        self.groups = _OPERATORS[(family, i)]

    def apply(self, f):
        total = LaurentSeries3(f.n, lower=f.lower)
        for sign, half, outer, inner in self.groups:
            acc = LaurentSeries3(f.n, lower=f.lower)
            for ih, gen, isign in inner:
                g = f if gen is None else apply_generator(gen, f)
                c = QScalar.s_power(ih)
                acc = acc + g.scaled(c if isign > 0 else -c)
            if outer is not None:
                acc = apply_generator(outer, acc)
            c = QScalar.s_power(half)
            total = total + acc.scaled(c if sign > 0 else -c)
        return total

    def dequantized(self):
        """Coefficient structure at q = 1: list of groups as
        (sign * scalar, outer, [(sign_j, gen_j)]), scalars as Fractions."""
        out = []
        for sign, half, outer, inner in self.groups:
            coef = sign * QScalar.s_power(half).evaluate(1)
            terms = [(isign * QScalar.s_power(ih).evaluate(1), gen)
                     for ih, gen, isign in inner]
            out.append((coef, outer, terms))
        return out


def abelian_operator(family, i):
    return AbelianOperator(family, i)


def verify_abelian_annihilation(family, i, series, check_degree):
    if check_degree > series.n - 1:
        raise TruncationError(
            "coefficients above degree %d are not determined"
            % (series.n - 1))
    result = abelian_operator(family, i).apply(series)
    violations = [{"exp": list(e), "coef": c.text()}
                  for e, c in result.items_sorted()
                  if sum(e) <= check_degree]
    return {"operator": "%s A%d" % (family, i),
            "checkDegree": check_degree, "violations": violations}


def _monomials_of_degree(m):
    return [(a, b, m - a - b)
            for a in range(m + 1) for b in range(m + 1 - a)]


def _branch_equations(ys, n):
    """The three q=1 operator equations with denominators cleared by
    y_2 x_3, y_3 x_1 and y_1 x_2 respectively."""
    y1, y2, y3 = ys

    def x(i):
        return LaurentSeries3.monomial(n, tuple(1 if j == i - 1 else 0
                                                for j in range(3)))

    def grp(i, yi):
        return LaurentSeries3.one(n) - yi - x(i)

    e1 = y2 * x(3) * grp(1, y1) - x(3) * grp(2, y2) - y2 * grp(3, y3)
    e2 = y3 * x(1) * grp(2, y2) - x(1) * grp(3, y3) - y3 * grp(1, y1)
    e3 = y1 * x(2) * grp(3, y3) - x(2) * grp(1, y1) - y1 * grp(2, y2)
    return [e1, e2, e3]


def solve_augmentation_branch(order):
    """Power-series jets y_i(x) = 1 + ... solving the dequantized
    operator equations through the requested order."""
    if order < 1:
        raise ValueError("order must be at least 1")
    n = order + 1
    jets = [dict({(0, 0, 0): ONE}) for _ in range(3)]

    def series_of(jet):
        return LaurentSeries3(n, jet, lower=(0, 0, 0))

    for m in range(1, order + 1):
        monos = _monomials_of_degree(m)
        unknowns = [(i, a) for i in range(3) for a in monos]
        base = _branch_equations([series_of(j) for j in jets], n)
        eqs = [(k, b) for k in range(3) for b in monos]
        rhs = [base[k].coefficient(b) for k, b in eqs]
        matrix = []
        for i, a in unknowns:
            jets[i][a] = ONE
            pert = _branch_equations([series_of(j) for j in jets], n)
            del jets[i][a]
            matrix.append([pert[k].coefficient(b) - rhs[r]
                           for r, (k, b) in enumerate(eqs)])
        # Solve sum_u c_u * matrix[u][r] + rhs[r] = 0 exactly.
        rows = [[matrix[u][r] for u in range(len(unknowns))] + [-rhs[r]]
                for r in range(len(eqs))]
        sol = _dense_solve(rows, len(unknowns))
        if sol is None:
            raise BranchError(
                "inconsistent or underdetermined system at order %d" % m)
        for (i, a), c in zip(unknowns, sol):
            if not c.is_zero():
                jets[i][a] = c
    return jets


def _dense_solve(rows, ncols):
    """Gaussian elimination on [A | b]; returns the unique solution or
    None if the system is singular or inconsistent."""
    rows = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for k in range(r, len(rows)):
            if not rows[k][c].is_zero():
                pr = k
                break
        if pr is None:
            return None
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [v * inv for v in rows[r]]
        for k in range(len(rows)):
            if k != r and not rows[k][c].is_zero():
                f = rows[k][c]
                rows[k] = [a - f * b for a, b in zip(rows[k], rows[r])]
        pivots.append(c)
        r += 1
    for k in range(r, len(rows)):
        if not rows[k][ncols].is_zero():
            return None
    return [rows[i][ncols] for i in range(ncols)]
