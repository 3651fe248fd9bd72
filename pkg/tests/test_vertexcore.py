"""Closed forms for the vertex coefficients and their table."""

import json

from vertexskein import partitions as pt
from vertexskein import vertexcore as vc
from vertexskein.qscalar import ONE, Z_VAR

BOX = (1,)


def test_printed_values():
    assert vc.vertex_c((), (), ()) == ONE
    assert vc.vertex_c(BOX, (), ()) == ONE / Z_VAR
    assert vc.vertex_c(BOX, (), BOX) == ONE / (Z_VAR * Z_VAR) + ONE
    assert vc.vertex_t((), (), BOX) == -ONE / Z_VAR


def test_t_sign_and_transpose_relation():
    for t in vc.triples_up_to(3):
        val = vc.vertex_c(*(pt.transpose(l) for l in t))
        if vc.triple_size(t) % 2:
            val = -val
        assert vc.vertex_t(*t) == val


def test_cyclic_invariance():
    for l1, l2, l3 in vc.triples_up_to(4):
        v = vc.vertex_t(l1, l2, l3)
        assert vc.vertex_t(l2, l3, l1) == v
        assert vc.vertex_t(l3, l1, l2) == v


def test_three_closed_forms_agree():
    for t in vc.triples_up_to(4):
        v = vc.vertex_t(*t)
        assert vc.vertex_t_alternate(*t) == v
        assert vc.vertex_t_via_hopf(*t) == v


def test_triples_enumeration():
    triples = vc.triples_up_to(2)
    assert triples[0] == ((), (), ())
    assert len(triples) == 13
    sizes = [vc.triple_size(t) for t in triples]
    assert sizes == sorted(sizes)
    assert len(set(triples)) == len(triples)


def test_build_table_and_json_roundtrip():
    table = vc.build_table(3, "T")
    assert len(table) == len(vc.triples_up_to(3))
    assert table[((), (), ())] == ONE
    rows = json.loads(json.dumps(table.to_json()))
    again = vc.CoefficientTable.from_json(rows, max_size=3, formula="T")
    assert again == table


def test_build_table_parallel_matches_serial():
    assert vc.build_table(3, "C", parallel=4) == vc.build_table(3, "C")


def test_formula_selection():
    for name in ("C", "T", "alt", "hopf"):
        table = vc.build_table(2, name)
        assert table.formula == name
    t = ((1,), (), (1,))
    assert vc.build_table(2, "C")[t] == vc.vertex_c(*t)
