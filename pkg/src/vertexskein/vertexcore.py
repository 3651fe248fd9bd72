"""Closed forms for the topological vertex C and its normalization T.

C takes three partitions and returns an exact rational function in
s = q^(1/2); T is the sign-and-transpose normalization
T(l1,l2,l3) = (-1)^(|l1|+|l2|+|l3|) C(l1^t, l2^t, l3^t).
Three independent closed forms for T are provided as cross-checks.
"""

from __future__ import annotations

from functools import lru_cache

from .qscalar import QScalar, ZERO
from . import partitions as pt
from . import symfunc as sf


def triple_size(t):
    return sum(pt.size(l) for l in t)


@lru_cache(maxsize=None)
def vertex_c(l1, l2, l3):
    """The skew Schur closed form for C_{l1,l2,l3}."""
    l1, l2, l3 = tuple(l1), tuple(l2), tuple(l3)
    l2t = pt.transpose(l2)
    l3t = pt.transpose(l3)
    p_inner = sf.point(l2, 1)     # q^(l2 + rho)
    p_outer = sf.point(l2t, 1)    # q^(l2^t + rho)
    acc = ZERO
    for eta in pt.subdiagrams(l1):
        if not pt.contains(l3t, eta):
            continue
        term = sf.skew_schur_at(l3t, eta, p_inner) * \
            sf.skew_schur_at(l1, eta, p_outer)
        acc = acc + term
    pref = QScalar.s_power(pt.kappa(l2) + pt.kappa(l3)) * \
        sf.schur_at(l2t, sf.Q_RHO)
    return pref * acc


def vertex_t(l1, l2, l3):
    """T = (-1)^total * C at the transposed triple."""
    val = vertex_c(pt.transpose(l1), pt.transpose(l2), pt.transpose(l3))
    if (pt.size(l1) + pt.size(l2) + pt.size(l3)) % 2:
        val = -val
    return val


@lru_cache(maxsize=None)
def vertex_t_alternate(l1, l2, l3):
    """Principal-specialization closed form for T (no reference to C)."""
    l1, l2, l3 = tuple(l1), tuple(l2), tuple(l3)
    l1t = pt.transpose(l1)
    l3t = pt.transpose(l3)
    p_a = sf.point(l3, -1)     # q^(-rho - l3)
    p_b = sf.point(l3t, -1)    # q^(-rho - l3^t)
    acc = ZERO
    for eta in pt.subdiagrams(l1t):
        if not pt.contains(l2, eta):
            continue
        acc = acc + sf.skew_schur_at(l1t, eta, p_a) * \
            sf.skew_schur_at(l2, eta, p_b)
    pref = QScalar.s_power(-(pt.kappa(l1) + pt.kappa(l3))) * \
        sf.schur_at(l3t, sf.Q_MINUS_RHO)
    return pref * acc


def vertex_t_via_hopf(l1, l2, l3):
    """Littlewood-Richardson / Hopf-link cross-check form for T."""
    from .fillings import hopf_h  # local import to avoid a cycle
    l1, l2, l3 = tuple(l1), tuple(l2), tuple(l3)
    l2t = pt.transpose(l2)
    l3t = pt.transpose(l3)
    acc = ZERO
    for nu in pt.subdiagrams(l1):
        if not pt.contains(l3t, nu):
            continue
        for mu1 in pt.enumerate_partitions(pt.size(l1) - pt.size(nu)):
            c1 = sf.lr_coefficient(l1, nu, mu1)
            if not c1:
                continue
            for mu3t in pt.enumerate_partitions(pt.size(l3) - pt.size(nu)):
                c3 = sf.lr_coefficient(l3t, nu, mu3t)
                if not c3:
                    continue
                mu3 = pt.transpose(mu3t)
                term = hopf_h(l2t, mu1) * hopf_h(l2, pt.transpose(mu3))
                n = c1 * c3
                acc = acc + term * QScalar.from_int(n)
    pref = QScalar.s_power(-(pt.kappa(l2) + pt.kappa(l3))) / hopf_h(l2, ())
    return pref * acc


_FORMULAS = {
    "C": vertex_c,
    "T": vertex_t,
    "alt": vertex_t_alternate,
    "hopf": vertex_t_via_hopf,
}


def triples_up_to(max_size):
    """All partition triples with total size <= max_size, ordered by
    total size then reverse-lex per slot."""
    out = []
    for n in range(max_size + 1):
        for a in range(n + 1):
            for b in range(n - a + 1):
                c = n - a - b
                for l1 in pt.enumerate_partitions(a):
                    for l2 in pt.enumerate_partitions(b):
                        for l3 in pt.enumerate_partitions(c):
                            out.append((l1, l2, l3))
    return out


class CoefficientTable:
    """Mapping from partition triples to QScalars, with provenance."""

    def __init__(self, values, max_size, formula):
        self.values = dict(values)
        self.max_size = max_size
        self.formula = formula

    def __getitem__(self, triple):
        return self.values[triple]

    def get(self, triple, default=None):
        return self.values.get(triple, default)

    def __len__(self):
        return len(self.values)

    def __eq__(self, other):
        if not isinstance(other, CoefficientTable):
            return NotImplemented
        return self.values == other.values

    def items_sorted(self):
        order = {t: i for i, t in enumerate(triples_up_to(self.max_size))}
        return sorted(self.values.items(), key=lambda kv: order[kv[0]])

    def to_json(self):
        return [
            {"l1": list(t[0]), "l2": list(t[1]), "l3": list(t[2]),
             "value": v.to_json()}
            for t, v in self.items_sorted()]

    @staticmethod
    def from_json(rows, max_size=None, formula="loaded"):
        values = {}
        for row in rows:
            t = (pt.validate(row["l1"]), pt.validate(row["l2"]),
                 pt.validate(row["l3"]))
            values[t] = QScalar.from_json(row["value"])
        if max_size is None:
            max_size = max((triple_size(t) for t in values), default=0)
        return CoefficientTable(values, max_size, formula)


def build_table(max_size, formula="T", parallel=1):
    """Evaluate the chosen closed form on every triple of total size
    <= max_size.  Entries are independent; evaluation order never affects
    the result, so any parallelism width gives identical output."""
    if max_size < 0:
        raise ValueError("max_size must be nonnegative")
    fn = _FORMULAS[formula]
    triples = triples_up_to(max_size)
    if parallel > 1:
        from concurrent.futures import ThreadPoolExecutor
        with ThreadPoolExecutor(max_workers=parallel) as ex:
            vals = list(ex.map(lambda t: fn(*t), triples))
        values = dict(zip(triples, vals))
    else:
        values = {t: fn(*t) for t in triples}
    return CoefficientTable(values, max_size, formula)
