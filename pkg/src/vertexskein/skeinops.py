"""Torus-boundary operators acting on triples of solid-torus skeins.

Each solid torus carries a basis W_{lambda, mubar} indexed by a pair of
partitions; states here are finite linear combinations of such labels
over three components, with FramedScalar coefficients (exact rational
functions in s with monomials in the framing variables a_1, a_2, a_3).
The seven implemented P_{i,j} actions are exactly the ones appearing in
the annihilation operators A_1, A_2, A_3.
"""

from __future__ import annotations

from .qscalar import QScalar, FramedScalar, ONE, Z_VAR, F_ONE
from . import partitions as pt

BOX = (1,)
SUPPORTED_ACTIONS = ((0, 0), (1, 0), (0, 1), (-1, 0), (-1, 1),
                     (0, -1), (1, -1))


class UnsupportedActionError(ValueError):
    pass


class MixedSectorError(ValueError):
    pass


def label_size(label):
    return sum(pt.size(l) + pt.size(m) for l, m in label)


def pure_label(triple):
    return tuple((lam, ()) for lam in triple)


def label_to_json(label):
    return [[list(l), list(m)] for l, m in label]


class SkeinState:
    """Finite FramedScalar combination of basis labels, truncated so
    that only labels of total size <= bound are retained."""

    def __init__(self, coeffs=None, bound=0):
        self.bound = bound
        self.coeffs = {}
        if coeffs:
            for k, v in coeffs.items():
                if not v.is_zero() and label_size(k) <= bound:
                    self.coeffs[k] = v

    def coefficient(self, label):
        return self.coeffs.get(label, FramedScalar())

    def _accumulate(self, label, value):
        if value.is_zero() or label_size(label) > self.bound:
            return
        cur = self.coeffs.get(label)
        cur = value if cur is None else cur + value
        if cur.is_zero():
            self.coeffs.pop(label, None)
        else:
            self.coeffs[label] = cur

    def __add__(self, other):
        out = SkeinState(self.coeffs, min(self.bound, other.bound))
        for k, v in other.coeffs.items():
            out._accumulate(k, v)
        return out

    def scaled(self, factor):
        out = SkeinState(bound=self.bound)
        for k, v in self.coeffs.items():
            out._accumulate(k, v * factor)
        return out

    def is_zero(self):
        return not self.coeffs


def _unknot_eigenvalue(k):
    inv_z = ONE / Z_VAR
    return FramedScalar.a_power(k, 1) * inv_z - \
        FramedScalar.a_power(k, -1) * inv_z


def _replaced_component(label, k, lam, mu):
    out = list(label)
    out[k - 1] = (lam, mu)
    return tuple(out)


def apply_p(i, j, k, state):
    """Act by P_{i,j} on component k of every label of the state."""
    if (i, j) not in SUPPORTED_ACTIONS:
        raise UnsupportedActionError("no action formula for P_(%d,%d)"
                                     % (i, j))
    out = SkeinState(bound=state.bound)
    for label, coef in state.coeffs.items():
        lam, mu = label[k - 1]
        if mu != ():
            raise MixedSectorError(
                "P-action on component %d needs an empty second index, "
                "got %r" % (k, mu))
        if (i, j) == (0, 0):
            out._accumulate(label, coef * _unknot_eigenvalue(k))
        elif (i, j) == (1, 0):
            eig = _unknot_eigenvalue(k) + FramedScalar.a_power(k, 1) * \
                (Z_VAR * pt.content_polynomial(lam))
            out._accumulate(label, coef * eig)
        elif (i, j) == (-1, 0):
            eig = _unknot_eigenvalue(k) - FramedScalar.a_power(k, -1) * \
                (Z_VAR * pt.content_polynomial(pt.transpose(lam)))
            out._accumulate(label, coef * eig)
        elif (i, j) == (0, 1):
            for alpha in pt.add_corners(lam):
                out._accumulate(_replaced_component(label, k, alpha, ()),
                                coef)
        elif (i, j) == (-1, 1):
            for beta in pt.add_corners(lam):
                w = FramedScalar.a_power(k, -1) * \
                    QScalar.s_power(pt.kappa(lam) - pt.kappa(beta))
                out._accumulate(_replaced_component(label, k, beta, ()),
                                coef * w)
        elif (i, j) == (0, -1):
            for gamma in pt.remove_corners(lam):
                out._accumulate(_replaced_component(label, k, gamma, ()),
                                coef)
            out._accumulate(_replaced_component(label, k, lam, BOX), coef)
        else:  # (1, -1)
            for gamma in pt.remove_corners(lam):
                w = FramedScalar.a_power(k, 1) * \
                    QScalar.s_power(pt.kappa(lam) - pt.kappa(gamma))
                out._accumulate(_replaced_component(label, k, gamma, ()),
                                coef * w)
            out._accumulate(_replaced_component(label, k, lam, BOX),
                            coef * FramedScalar.a_power(k, -1))
    return out


class OperatorSum:
    """List of (component, (i,j), FramedScalar coefficient) terms."""

    def __init__(self, name, terms):
        self.name = name
        self.terms = []
        for comp, idx, coef in terms:
            if tuple(idx) not in SUPPORTED_ACTIONS:
                raise UnsupportedActionError(
                    "no action formula for P_%r" % (idx,))
            self.terms.append((comp, tuple(idx), coef))

    def coefficient_of(self, comp, idx):
        acc = FramedScalar()
        for c, i, coef in self.terms:
            if c == comp and i == tuple(idx):
                acc = acc + coef
        return acc

    def apply(self, state):
        out = SkeinState(bound=state.bound)
        for comp, idx, coef in self.terms:
            out = out + apply_p(idx[0], idx[1], comp, state).scaled(coef)
        return out


def _rotate(c, shift):
    return (c - 1 + shift) % 3 + 1


def operator_a(k):
    """The annihilation operator A_k; A_2 and A_3 are the cyclic
    rotations 1 -> 2 -> 3 of A_1."""
    if k not in (1, 2, 3):
        raise ValueError("component must be 1, 2 or 3")
    r = k - 1
    a = lambda c, e=1: FramedScalar.a_power(_rotate(c, r), e)
    terms = [
        (_rotate(1, r), (0, 0), a(1, -1)),
        (_rotate(1, r), (1, 0), -a(1, -1)),
        (_rotate(1, r), (0, 1), -a(3, 2)),
        (_rotate(2, r), (0, 0), a(2) * a(3, 2)),
        (_rotate(2, r), (-1, 1), a(2)),
        (_rotate(2, r), (-1, 0), -(a(2) * a(3, 2))),
        (_rotate(3, r), (0, 0), a(3)),
        (_rotate(3, r), (0, -1), -F_ONE),
        (_rotate(3, r), (1, -1), a(3)),
    ]
    return OperatorSum("A%d" % k, terms)


def build_z(max_size, table):
    """The curve-counting state: the coefficient table placed on pure
    labels W_{l1,0} x W_{l2,0} x W_{l3,0}."""
    coeffs = {}
    for triple, value in table.values.items():
        if sum(pt.size(l) for l in triple) <= max_size:
            coeffs[pure_label(triple)] = FramedScalar.from_qscalar(value)
    return SkeinState(coeffs, max_size)


class TruncationError(ValueError):
    pass


def verify_annihilation(op, state, check_size):
    """Apply op to state and require every output coefficient of total
    size <= check_size to vanish identically."""
    if check_size > state.bound - 1:
        raise TruncationError(
            "coefficients above size %d are not determined by a state "
            "truncated at %d" % (state.bound - 1, state.bound))
    result = op.apply(state)
    violations = []
    for label in sorted(result.coeffs, key=lambda l: (label_size(l), l)):
        if label_size(label) <= check_size:
            violations.append({"label": label_to_json(label),
                               "coefficient": repr(result.coeffs[label])})
    return {"operator": op.name, "checkSize": check_size,
            "violations": violations}


def _adjoint_sources(comp, idx, t):
    """Triples t' together with weights w such that the P-action sends
    the pure label t' to the pure label t with coefficient w."""
    lam = t[comp - 1]

    def repl(l):
        out = list(t)
        out[comp - 1] = l
        return tuple(out)

    if idx == (0, 0):
        return [(t, _unknot_eigenvalue(comp))]
    if idx == (1, 0):
        eig = _unknot_eigenvalue(comp) + FramedScalar.a_power(comp, 1) * \
            (Z_VAR * pt.content_polynomial(lam))
        return [(t, eig)]
    if idx == (-1, 0):
        eig = _unknot_eigenvalue(comp) - FramedScalar.a_power(comp, -1) * \
            (Z_VAR * pt.content_polynomial(pt.transpose(lam)))
        return [(t, eig)]
    if idx == (0, 1):
        return [(repl(src), F_ONE) for src in pt.remove_corners(lam)]
    if idx == (-1, 1):
        return [(repl(src),
                 FramedScalar.a_power(comp, -1) *
                 QScalar.s_power(pt.kappa(src) - pt.kappa(lam)))
                for src in pt.remove_corners(lam)]
    if idx == (0, -1):
        return [(repl(src), F_ONE) for src in pt.add_corners(lam)]
    if idx == (1, -1):
        return [(repl(src),
                 FramedScalar.a_power(comp, 1) *
                 QScalar.s_power(pt.kappa(src) - pt.kappa(lam)))
                for src in pt.add_corners(lam)]
    raise UnsupportedActionError("no action formula for P_%r" % (idx,))


_ANSATZ_SLOTS = ((1, (0, 0)), (1, (1, 0)), (1, (0, 1)),
                 (2, (0, 0)), (2, (-1, 0)), (2, (-1, 1)),
                 (3, (0, 0)), (3, (0, -1)), (3, (1, -1)))


class NoSolutionError(ValueError):
    pass


def _monomial_parts(fs):
    if len(fs.terms) != 1:
        raise NoSolutionError("expected a single monomial, got %r" % (fs,))
    [(exps, q)] = fs.terms.items()
    return exps, q


def _divide_framed(num, den):
    """num / den when the quotient is a single a-monomial."""
    if num.is_zero():
        return FramedScalar()
    ne, nq = max(num.terms), num.terms[max(num.terms)]
    de, dq = max(den.terms), den.terms[max(den.terms)]
    cand = FramedScalar.from_qscalar(
        nq / dq, tuple(a - b for a, b in zip(ne, de)))
    if cand * den != num:
        raise NoSolutionError("quotient is not a monomial")
    return cand


def _sign_ok(idx, fs):
    """The recovered coefficient must be a bare a-monomial whose sign
    is (-1)^(i+j)."""
    if len(fs.terms) != 1:
        return False
    _, q = _monomial_parts(fs)
    want = ONE if (idx[0] + idx[1]) % 2 == 0 else -ONE
    return q == want


def _pure_expression(t, values, elim, data):
    """Coefficient of the pure label t in the ansatz operator applied to
    the leading-term state, as (unknown -> weight, constant)."""
    coeffs = {}
    const = FramedScalar()
    for comp, idx in _ANSATZ_SLOTS:
        total = FramedScalar()
        for src, w in _adjoint_sources(comp, idx, t):
            zval = data.get(src)
            if zval is None:
                raise NoSolutionError("leading data lacks %r" % (src,))
            total = total + w * zval
        if total.is_zero():
            continue
        slot = (comp, idx)
        if slot in values:
            const = const + values[slot] * total
        elif slot in elim:
            sign, target = elim[slot]
            cur = coeffs.get(target, FramedScalar())
            coeffs[target] = cur + (total if sign > 0 else -total)
        else:
            coeffs[slot] = coeffs.get(slot, FramedScalar()) + total
    return {s: c for s, c in coeffs.items() if not c.is_zero()}, const


def _solve_pairing(coeffs, const):
    """Assign each unknown a value so that sum(unknown * weight) + const
    vanishes, every unknown being a signed a-monomial obeying the sign
    rule.  The constant splits into as many monomials as unknowns."""
    from itertools import permutations
    slots = sorted(coeffs)
    terms = [FramedScalar.from_qscalar(q, e)
             for e, q in sorted(const.terms.items())]
    if len(terms) != len(slots):
        raise NoSolutionError("cannot pair %d monomials with %d unknowns"
                              % (len(terms), len(slots)))
    found = None
    for perm in permutations(range(len(terms))):
        cand = {}
        ok = True
        for slot, ti in zip(slots, perm):
            val = _divide_framed(-terms[ti], coeffs[slot])
            if not _sign_ok(slot[1], val):
                ok = False
                break
            cand[slot] = val
        if ok:
            if found is not None and found != cand:
                raise NoSolutionError("monomial pairing is ambiguous")
            found = cand
    if found is None:
        raise NoSolutionError("no sign-consistent monomial pairing")
    return found


def solve_monomial_coefficients(leading):
    """Recover the coefficients of A_1 from the nine-slot ansatz, the
    sign rule, and the leading coefficients of the curve count.

    `leading` maps small partition triples to QScalars; it is extended
    by the cyclic symmetry of the legs before use.
    """
    data = {}
    for triple, val in leading.items():
        fv = FramedScalar.from_qscalar(val)
        for r in range(3):
            rot = tuple(triple[(i - r) % 3] for i in range(3))
            prev = data.get(rot)
            if prev is not None and prev != fv:
                raise NoSolutionError("leading data breaks cyclic symmetry")
            data[rot] = fv
    empty = ((), (), ())
    values = {(3, (0, -1)): -F_ONE}

    # Mixed-sector vanishing at W_0 x W_0 x W_{0,box} forces the
    # P_(1,-1) coefficient.
    z0 = data[empty]
    mixed_const = values[(3, (0, -1))] * z0
    mixed_coeff = FramedScalar.a_power(3, -1) * z0
    values[(3, (1, -1))] = _divide_framed(-mixed_const, mixed_coeff)
    if not _sign_ok((1, -1), values[(3, (1, -1))]):
        raise NoSolutionError("mixed-sector solution violates the sign rule")

    # Subtracting the vanishing unknot combination ties each P_(0,0)
    # coefficient to its group partner.
    elim = {(1, (0, 0)): (-1, (1, (1, 0))),
            (2, (0, 0)): (-1, (2, (-1, 0)))}
    coeffs, const = _pure_expression(empty, values, elim, data)
    if set(coeffs) != {(3, (0, 0))}:
        raise NoSolutionError("unexpected unknowns in the empty-label "
                              "equation: %r" % (sorted(coeffs),))
    values[(3, (0, 0))] = _divide_framed(-const, coeffs[(3, (0, 0))])

    # One box on the first leg pins the first group.
    coeffs, const = _pure_expression(
        (BOX, (), ()), values, elim, data)
    values.update(_solve_pairing(coeffs, const))
    values[(1, (0, 0))] = -values[(1, (1, 0))]

    # One box on the second leg pins the second group.
    coeffs, const = _pure_expression(
        ((), BOX, ()), values, elim, data)
    values.update(_solve_pairing(coeffs, const))
    values[(2, (0, 0))] = -values[(2, (-1, 0))]
    return values


def coefficient_constraint(k, t):
    """The linear functional on table values given by the coefficient of
    the pure label t in A_k . Z, as a mapping triple -> FramedScalar."""
    out = {}
    for comp, idx, coef in operator_a(k).terms:
        for src, weight in _adjoint_sources(comp, idx, t):
            w = coef * weight
            cur = out.get(src)
            cur = w if cur is None else cur + w
            if cur.is_zero():
                out.pop(src, None)
            else:
                out[src] = cur
    return out
