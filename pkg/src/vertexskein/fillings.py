"""Hopf link coefficients, partial-filling partition functions, and the
operators annihilating them."""

from __future__ import annotations

from functools import lru_cache

from .qscalar import QScalar, FramedScalar, ZERO, ONE, F_ONE
from . import partitions as pt
from . import symfunc as sf
from .abelian import LaurentSeries3, abelian_operator, \
    verify_abelian_annihilation
from .skeinops import SkeinState, OperatorSum, MixedSectorError, \
    label_to_json


@lru_cache(maxsize=None)
def hopf_h(alpha, beta):
    """Hopf link invariant H(alpha, beta), computed two ways and checked
    for agreement before returning."""
    alpha, beta = tuple(alpha), tuple(beta)
    at = pt.transpose(alpha)
    bt = pt.transpose(beta)
    acc = ZERO
    for eta in pt.subdiagrams(at):
        if not pt.contains(bt, eta):
            continue
        acc = acc + sf.skew_schur_at(at, eta, sf.Q_MINUS_RHO) * \
            sf.skew_schur_at(bt, eta, sf.Q_MINUS_RHO)
    first = QScalar.s_power(-(pt.kappa(alpha) + pt.kappa(beta))) * acc
    second = QScalar.s_power(-pt.kappa(alpha)) * \
        sf.schur_at(at, sf.Q_MINUS_RHO) * sf.schur_at(beta, sf.point(alpha, -1))
    if first != second:
        raise AssertionError(
            "hopf forms disagree at %r, %r" % (alpha, beta))
    return first


class GluingError(ValueError):
    pass


EMPTY_PAIR = ((), ())
EMPTY_LABEL = (EMPTY_PAIR, EMPTY_PAIR, EMPTY_PAIR)

FILLING_IDS = ("F2", "F3", "F4")


def disk_hook_content(lam):
    """Hook-content product form of the one-leg disk coefficient
    s_lambda at q^(-rho)."""
    lam = tuple(lam)
    lt = pt.transpose(lam)
    out = ONE
    for i, row in enumerate(lam):
        for j in range(row):
            content = j - i
            hook = row - j + lt[j] - i - 1
            out = out * (-QScalar.s_power(-content)) / \
                (QScalar.s_power(hook) - QScalar.s_power(-hook))
    return out


def _placed(entries):
    """Label with (lam, mu) pairs placed on 1-based components."""
    out = [EMPTY_PAIR, EMPTY_PAIR, EMPTY_PAIR]
    for comp, pair in entries:
        out[comp - 1] = pair
    return tuple(out)


def psi_block(kind, components, bound, frames=None):
    """The basic filling blocks: one-component disk, two-component
    framed anti-annulus, and two-component twisted anti-annulus."""
    coeffs = {}
    if kind == "disk":
        (alpha,) = components
        for lam in pt.partitions_up_to(bound):
            value = sf.schur_at(lam, sf.Q_MINUS_RHO)
            coeffs[_placed([(alpha, (lam, ()))])] = \
                FramedScalar.from_qscalar(value)
        return SkeinState(coeffs, bound)
    alpha, beta = components
    if kind == "antiannulus":
        f1, f2 = frames
        for lam in pt.partitions_up_to(bound // 2):
            n, kap = pt.size(lam), pt.kappa(lam)
            value = QScalar.s_power(2 * kap * (f1 - f2))
            if (n * (f1 - f2 + 1)) % 2:
                value = -value
            coeffs[_placed([(alpha, (lam, ())),
                            (beta, (pt.transpose(lam), ()))])] = \
                FramedScalar.from_qscalar(value)
        return SkeinState(coeffs, bound)
    if kind != "twisted":
        raise ValueError("unknown block kind %r" % (kind,))
    for lam in pt.partitions_up_to(bound // 2):
        value = -ONE if pt.size(lam) % 2 else ONE
        coeffs[_placed([(alpha, (lam, ())),
                        (beta, ((), pt.transpose(lam)))])] = \
            FramedScalar.from_qscalar(value)
    return SkeinState(coeffs, bound)


def _pure_components(state):
    """Components carrying a nonempty first index; second indices must
    all be empty."""
    comps = set()
    for label in state.coeffs:
        for c, (lam, mu) in enumerate(label):
            if mu != ():
                raise MixedSectorError(
                    "star operand has a nonempty second index on "
                    "component %d" % (c + 1))
            if lam != ():
                comps.add(c + 1)
    return comps


def _framed_products(f, lam, mu):
    """Expansion of W_lam star_f W_mu: pairs (nu, weight)."""
    out = []
    for nu in pt.enumerate_partitions(pt.size(lam) + pt.size(mu)):
        if not pt.contains(nu, lam):
            continue
        mult = sf.lr_coefficient(nu, lam, mu)
        if mult == 0:
            continue
        w = QScalar.s_power(
            f * (pt.kappa(nu) - pt.kappa(lam) - pt.kappa(mu)))
        out.append((nu, w * QScalar.from_fraction(mult)))
    return out


def _star(frames, A, B):
    comps = sorted(_pure_components(A) | _pure_components(B))
    if len(comps) > len(frames):
        raise ValueError(
            "star product with %d framings applied to states on "
            "components %r" % (len(frames), comps))
    comps = comps + [c for c in (1, 2, 3) if c not in comps]
    comps = comps[:len(frames)]
    out = SkeinState(bound=min(A.bound, B.bound))
    for la, ca in A.coeffs.items():
        for lb, cb in B.coeffs.items():
            partial = [(la, ca * cb)]
            for f, comp in zip(frames, comps):
                lam = la[comp - 1][0]
                mu = lb[comp - 1][0]
                expanded = []
                for label, coef in partial:
                    for nu, w in _framed_products(f, lam, mu):
                        nl = list(label)
                        nl[comp - 1] = (nu, ())
                        expanded.append((tuple(nl), coef * w))
                partial = expanded
            for label, coef in partial:
                out._accumulate(label, coef)
    return out


def star_product(f, A, B):
    """Framed product star_f of two pure single-component states,
    extended bilinearly with Littlewood-Richardson multiplicity."""
    return _star((f,), A, B)


def star_paired(frames, A, B):
    """Componentwise star_(f1, f2) on two-component pure states."""
    return _star(tuple(frames), A, B)


def glue_product(A, B):
    """The gluing product: merges W_(lam, 0) with W_(0, mu-bar)
    componentwise, bilinearly."""
    out = SkeinState(bound=min(A.bound, B.bound))
    for la, ca in A.coeffs.items():
        for lb, cb in B.coeffs.items():
            label = []
            for (l1, m1), (l2, m2) in zip(la, lb):
                if (l1 and l2) or (m1 and m2):
                    raise GluingError(
                        "overlapping nonempty indices %r and %r"
                        % ((l1, m1), (l2, m2)))
                label.append((l1 or l2, m1 or m2))
            out._accumulate(tuple(label), ca * cb)
    return out


def build_filling_z(fid, max_size):
    """Closed-form partition functions for the three nontrivial
    fillings, truncated at total label size max_size."""
    coeffs = {}
    if fid in ("F2", "F3"):
        for l1 in pt.partitions_up_to(max_size // 2):
            n1 = pt.size(l1)
            for l2 in pt.partitions_up_to(max_size - 2 * n1):
                n2 = pt.size(l2)
                for l3 in pt.partitions_up_to(max_size - 2 * n1 - n2):
                    if fid == "F2":
                        value = QScalar.s_power(-pt.kappa(l3)) * \
                            hopf_h(l2, pt.transpose(l3))
                    else:
                        value = QScalar.s_power(-pt.kappa(l2)) * \
                            hopf_h(l3, pt.transpose(l2))
                    if n1 % 2:
                        value = -value
                    label = ((l1, ()), (l2, pt.transpose(l1)), (l3, ()))
                    coeffs[label] = FramedScalar.from_qscalar(value)
        return SkeinState(coeffs, max_size)
    if fid != "F4":
        raise ValueError("unknown filling %r" % (fid,))
    for l1 in pt.partitions_up_to(max_size // 2):
        n1 = pt.size(l1)
        for l2 in pt.partitions_up_to((max_size - 2 * n1) // 2):
            n2 = pt.size(l2)
            for l3 in pt.partitions_up_to(max_size - 2 * n1 - 2 * n2):
                value = sf.schur_at(l3, sf.Q_MINUS_RHO)
                if (n1 + n2) % 2:
                    value = -value
                label = ((l1, ()), (l2, pt.transpose(l1)),
                         (l3, pt.transpose(l2)))
                coeffs[label] = FramedScalar.from_qscalar(value)
    return SkeinState(coeffs, max_size)


def build_filling_z_u1(fid, n):
    """The printed one-variable specializations of the filling
    partition functions, as truncated Laurent series."""
    if fid in ("F2", "F3"):
        out = LaurentSeries3(n, lower=(0, -1, 0))
        for n1 in range(n + 1):
            d1 = pochhammer_denominator(n1)
            for n2 in range(n + 1):
                d2 = d1 * pochhammer_denominator(n2)
                for n3 in range(n + 1 - n1):
                    pre = QScalar.s_power(n1 + n2 + n3) / \
                        (d2 * pochhammer_denominator(n3))
                    for m1 in (0, 1):
                        for m2 in (0, 1):
                            for m3 in (0, 1):
                                e = (n1 + m2 + m3, n2 + m1 - m3,
                                     n3 + m1 + m2)
                                if sum(e) > n or e[1] < -1:
                                    continue
                                if fid == "F2":
                                    p = m2 - m1 * (n2 - m3) - \
                                        m2 * (n1 + m3)
                                else:
                                    p = m2 - (m1 + m2) * n3 - \
                                        2 * m1 * m2 - m2 * m3 + m1 * m3
                                c = pre * QScalar.q_power(p)
                                if m3:
                                    c = -c
                                out = out + LaurentSeries3.monomial(
                                    n, e, c, lower=(0, -1, 0))
        return out
    if fid != "F4":
        raise ValueError("unknown filling %r" % (fid,))
    lower = (0, -1, -2)
    pre = LaurentSeries3(n, {(0, 0, 0): ONE}, lower)
    for num, den in ((1, 2), (1, 3), (2, 3)):
        e = [0, 0, 0]
        e[num - 1] = 1
        e[den - 1] = -1
        factor = LaurentSeries3(
            n, {(0, 0, 0): ONE, tuple(e): -ONE}, lower)
        pre = pre * factor
    tail = LaurentSeries3(n, lower=lower)
    for n1 in range(n + 1):
        d1 = pochhammer_denominator(n1)
        for n2 in range(n + 1 - n1):
            d2 = d1 * pochhammer_denominator(n2)
            for n3 in range(n + 1 - n1 - n2):
                c = QScalar.s_power(n1 + n2 + n3) / \
                    (d2 * pochhammer_denominator(n3))
                tail = tail + LaurentSeries3.monomial(
                    n, (n1, n2, n3), c, lower)
    return pre * tail


@lru_cache(maxsize=None)
def pochhammer_denominator(k):
    """(q; q)_k."""
    out = ONE
    for j in range(1, k + 1):
        out = out * (ONE - QScalar.q_power(j))
    return out


def verify_filling_annihilation(fid, i, series, check_degree):
    """Annihilation check for a filling operator; the lower exponent
    bounds are widened by one so that the intermediate terms produced
    by a single x^(-1) application stay representable."""
    widened = LaurentSeries3(series.n, series.terms,
                             tuple(b - 1 for b in series.lower))
    return verify_abelian_annihilation(fid, i, widened, check_degree)


def sl_two_z_map(i, j):
    """The signed index change P_(i,j) -> (-1)^i P_(-i-j, i) induced by
    the basis move on one boundary torus; a cube root of the identity."""
    return (1 if i % 2 == 0 else -1, (-i - j, i))


def _fa(e1, e2, e3):
    return FramedScalar.a_power(1, e1) * FramedScalar.a_power(2, e2) * \
        FramedScalar.a_power(3, e3)


# Printed annihilation operators of the fillings, stored verbatim as
# skein data: (component, (i, j), coefficient) with a-monomial
# coefficients.
_FILLING_SKEIN = {
    ("F2", 1): [(1, (0, 0), F_ONE), (1, (1, 0), -F_ONE),
                (1, (0, 1), -_fa(1, 2, 0)),
                (2, (0, 0), _fa(1, 1, 0)), (2, (1, 0), -_fa(1, 1, 0)),
                (2, (0, 1), -_fa(1, 2, 0)),
                (3, (-1, 0), -_fa(1, 2, 1)), (3, (0, 0), _fa(1, 2, 1)),
                (3, (-1, 1), _fa(1, 2, 1))],
    ("F2", 2): [(1, (-1, 0), _fa(1, 2, 2)), (1, (0, 0), -_fa(1, 2, 2)),
                (1, (-1, 1), -_fa(1, 2, 0)),
                (2, (-1, 0), _fa(0, 1, 2)), (2, (0, 0), -_fa(0, 1, 2)),
                (2, (-1, 1), -_fa(0, 1, 0)),
                (3, (0, -1), F_ONE), (3, (1, -1), -_fa(0, 0, 1)),
                (3, (0, 0), -_fa(0, 0, 1))],
    ("F2", 3): [(1, (0, -1), _fa(0, 0, 1)), (1, (1, -1), -_fa(1, 0, 1)),
                (1, (0, 0), -_fa(1, 2, 1)),
                (2, (0, -1), _fa(0, 0, 1)), (2, (1, -1), -_fa(2, 1, 1)),
                (2, (0, 0), -_fa(0, 1, 1)),
                (3, (0, 0), -F_ONE), (3, (1, 0), F_ONE),
                (3, (0, 1), _fa(2, 2, 1))],
    ("F3", 1): [(1, (0, 0), F_ONE), (1, (1, 0), -F_ONE),
                (1, (0, 1), -_fa(1, 2, 2)),
                (2, (0, 0), _fa(1, 1, 0)), (2, (1, 0), -_fa(1, 1, 0)),
                (2, (0, 1), -_fa(1, 2, 2)),
                (3, (0, -1), -_fa(1, 2, 0)), (3, (1, -1), _fa(1, 2, 1)),
                (3, (0, 0), _fa(1, 2, 1))],
    ("F3", 2): [(1, (-1, 0), _fa(1, 2, 2)), (1, (0, 0), -_fa(1, 2, 2)),
                (1, (-1, 1), -_fa(1, 2, 2)),
                (2, (-1, 0), _fa(0, 1, 2)), (2, (0, 0), -_fa(0, 1, 2)),
                (2, (-1, 1), -_fa(0, 1, 2)),
                (3, (0, 0), -_fa(0, 0, 1)), (3, (1, 0), _fa(0, 0, 1)),
                (3, (0, 1), _fa(0, 0, 2))],
    ("F3", 3): [(1, (0, -1), F_ONE), (1, (1, -1), -_fa(1, 0, 0)),
                (1, (0, 0), -_fa(1, 2, 0)),
                (2, (0, -1), F_ONE), (2, (1, -1), -_fa(2, 1, 0)),
                (2, (0, 0), -_fa(0, 1, 0)),
                (3, (-1, 0), _fa(2, 2, 1)), (3, (0, 0), -_fa(2, 2, 1)),
                (3, (-1, 1), -_fa(0, 0, 1))],
    ("F4", 1): [(1, (0, 0), F_ONE), (1, (1, 0), -F_ONE),
                (1, (0, 1), -_fa(1, 2, 2)),
                (2, (0, 0), _fa(1, 1, 0)), (2, (1, 0), -_fa(1, 1, 0)),
                (2, (0, 1), -_fa(1, 2, 2)),
                (3, (0, 0), _fa(1, 2, 1)), (3, (1, 0), -_fa(1, 2, 1)),
                (3, (0, 1), -_fa(1, 2, 2))],
    ("F4", 2): [(1, (-1, 0), _fa(1, 2, 1)), (1, (0, 0), -_fa(1, 2, 1)),
                (1, (-1, 1), -_fa(1, 2, 1)),
                (2, (-1, 0), _fa(0, 1, 1)), (2, (0, 0), -_fa(0, 1, 1)),
                (2, (-1, 1), -_fa(0, 1, 1)),
                (3, (-1, 0), F_ONE), (3, (0, 0), -F_ONE),
                (3, (-1, 1), -F_ONE)],
    ("F4", 3): [(1, (0, -1), F_ONE), (1, (1, -1), -_fa(1, 0, 0)),
                (1, (0, 0), -_fa(1, 2, 2)),
                (2, (0, -1), F_ONE), (2, (1, -1), -_fa(2, 1, 0)),
                (2, (0, 0), -_fa(0, 1, 2)),
                (3, (0, -1), F_ONE), (3, (1, -1), -_fa(2, 2, 1)),
                (3, (0, 0), -_fa(0, 0, 1))],
}


def filling_skein_operator(fid, k):
    """The printed skein operator of a filling, as data; it is not
    applied, because its states live in a mixed basis."""
    if (fid, k) not in _FILLING_SKEIN:
        raise ValueError("no operator for %r" % ((fid, k),))
    return OperatorSum("A%d(%s)" % (k, fid), _FILLING_SKEIN[(fid, k)])


def filling_operators(fid, k):
    """Skein data and the matching one-variable operator."""
    return filling_skein_operator(fid, k), abelian_operator(fid, k)


def component_indices(op, comp):
    """The set of (i, j) indices acting on one component."""
    return {idx for c, idx, coef in op.terms if c == comp}


def verify_ansatz(fid, state):
    """Support predicates for the ansatz of each filling: second
    indices are bounded by the first indices of the earlier legs."""
    if fid not in FILLING_IDS:
        raise ValueError("unknown filling %r" % (fid,))
    violations = []
    for label, coef in sorted(state.coeffs.items()):
        (l1, m1), (l2, m2), (l3, m3) = label
        bad = m1 != () or pt.size(m2) > pt.size(l1)
        if fid == "F4":
            bad = bad or pt.size(m3) > pt.size(l1) + pt.size(l2)
        else:
            bad = bad or m3 != ()
        if bad:
            violations.append({"label": label_to_json(label),
                               "coefficient": repr(coef)})
    return {"filling": fid, "bound": state.bound,
            "violations": violations}
