from fractions import Fraction

import pytest

from schur0.algebra import build_table
from schur0.core import E, F, K, GeneratorWord, OrbitMatrix, compositions, degree_vectors, left_apply_e, left_apply_f
from schur0.presentation import (
    build_quiver,
    evaluate_relation,
    evaluate_word_in,
    generator_elements,
    relation_set,
    rescaling_iso_check,
    verify_relations,
)


def test_quiver_2_2():
    q = build_quiver(2, 2)
    assert q.vertices == [(0, 2), (1, 1), (2, 0)]
    assert len(q.arrows) == 4
    assert {(a.kind, a.source, a.target) for a in q.arrows} == {
        ("e", (0, 2), (1, 1)), ("e", (1, 1), (2, 0)),
        ("f", (1, 1), (0, 2)), ("f", (2, 0), (1, 1))}


def test_quiver_sizes():
    assert len(build_quiver(3, 5).vertices) == 21
    q = build_quiver(1, 4)
    assert q.vertices == [(4,)] and q.arrows == []


@pytest.mark.parametrize("n,r", [(2, 3), (3, 3), (4, 2)])
def test_arrows_match_generator_action(n, r):
    q = build_quiver(n, r)
    arrows = {(a.kind, a.i, a.source) for a in q.arrows}
    for lam in compositions(n, r):
        for i in range(1, n):
            k = OrbitMatrix.diag(lam)
            assert (("e", i, lam) in arrows) == (left_apply_e(i, k) is not None)
            assert (("f", i, lam) in arrows) == (left_apply_f(i, k) is not None)


def _find(rels, family, i, j, lam):
    return [rel for rel in rels if (rel.family, rel.i, rel.j, rel.lam) == (family, i, j, lam)]


def test_commutator_cases_for_2_2():
    rels = relation_set(2, 2, 1)
    assert {rel.family for rel in rels} == {"C"}
    (mid,) = _find(rels, "C", 1, 1, (1, 1))
    k = K((1, 1))
    assert mid.terms == [(1, GeneratorWord([k, E(1), F(1), k])), (-1, GeneratorWord([k, F(1), E(1), k]))]
    (top,) = _find(rels, "C", 1, 1, (2, 0))
    k = K((2, 0))
    assert top.terms == [(1, GeneratorWord([k, E(1), F(1), k])), (-1, GeneratorWord([k]))]
    (bottom,) = _find(rels, "C", 1, 1, (0, 2))
    k = K((0, 2))
    assert bottom.terms == [(1, GeneratorWord([k])), (-1, GeneratorWord([k, F(1), E(1), k]))]


def test_deformation_parameter_enters_commutators():
    (top,) = _find(relation_set(2, 2, Fraction(1, 3)), "C", 1, 1, (2, 0))
    assert top.terms[1][0] == Fraction(-1, 3)
    (empty,) = _find(relation_set(2, 2, 0), "C", 1, 1, (2, 0))
    assert len(empty.terms) == 1


def test_serre_relation_targets():
    rels = relation_set(3, 3, 1)
    for rel in rels:
        if rel.family == "C":
            continue
        sign = 1 if rel.family == "P" else -1
        i, j = rel.i, rel.j
        times_i = 2 if abs(i - j) == 1 else 1
        shift = [0, 0, 0]
        for idx, times in ((i, times_i), (j, 1)):
            shift[idx - 1] += sign * times
            shift[idx] -= sign * times
        assert rel.target == tuple(x + y for x, y in zip(rel.lam, shift))


@pytest.mark.parametrize("n,r", [(2, 2), (3, 2)])
@pytest.mark.parametrize("product,t", [("s0", 1), ("star", 0), ("t", (Fraction(1, 2), Fraction(1, 3)))])
def test_relations_vanish(n, r, product, t):
    t = t[: n - 1] if isinstance(t, tuple) else t
    table = build_table(n, r, product, t if product == "t" else None)
    report = verify_relations(table, t)
    assert report["relations_checked"] == len(relation_set(n, r, t)) > 0
    assert report["failures"] == []


def test_wrong_parameter_is_detected():
    report = verify_relations(build_table(2, 3), 0)
    assert report["failures"]
    first = report["failures"][0]
    assert set(first) == {"family", "i", "j", "lambda", "residual"}
    assert all("/" in c or c.lstrip("-").isdigit() for c in first["residual"].values())


def test_serre_words_keep_degrees():
    table = build_table(3, 3)
    gens = generator_elements(table)
    for rel in relation_set(3, 3, 1):
        if rel.family == "C":
            continue
        degrees = set()
        for _, word in rel.terms:
            value = evaluate_word_in(table, word, gens)
            assert len(value) <= 1
            for k in value:
                degrees.add(degree_vectors(table.basis[k]))
        assert len(degrees) <= 1


def test_generators_are_sums_over_vertices():
    table = build_table(2, 2)
    gens = generator_elements(table)
    assert len(gens[E(1)]) == 2 and len(gens[F(1)]) == 2
    assert sum(len(gens[K(lam)]) for lam in compositions(2, 2)) == 3


def test_evaluate_relation_shape_mismatch():
    rel = relation_set(2, 2, 1)[0]
    with pytest.raises(ValueError):
        evaluate_relation(rel, build_table(2, 3))


@pytest.mark.parametrize("n,r,a", [(2, 3, [Fraction(1, 2)]), (3, 2, [Fraction(1, 2), Fraction(-3)])])
def test_rescaling(n, r, a):
    assert rescaling_iso_check(n, r, a)


def test_rescaling_needs_nonzero_parameters():
    with pytest.raises(ValueError):
        rescaling_iso_check(2, 2, [0])
