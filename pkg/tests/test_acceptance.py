"""Acceptance criteria 1-12, one PASS/FAIL line each.

Run with pytest (the lines appear in the terminal summary) or directly:

    python tests/test_acceptance.py
"""

import math
import sys
import time
from fractions import Fraction
from itertools import product

import pytest

from schur0.algebra import (
    boundary_ideal_basis,
    boundary_idempotents,
    build_table,
    check_associativity,
    ideal_closure,
    ideal_rank_formula,
    quotient_algebra,
    quotient_rank_formula,
    verify_main_theorem,
)
from schur0.centralizers import (
    Permutation,
    catalan,
    element_to_peaks,
    hecke0_build,
    hecke_relations,
    nilhecke_graded_build,
    ntl_build,
    peaks_to_element,
)
from schur0.core import (
    _basis_cached,
    binom,
    co,
    decompose_monomial,
    degree_vectors,
    enumerate_basis,
    evaluate_word,
    format_pbw,
    left_apply_e,
    left_apply_f,
    s0_multiply,
    star_multiply,
    E,
    F,
    OrbitMatrix,
)
from schur0.presentation import rescaling_iso_check, verify_relations

M = OrbitMatrix.from_rows
SHAPES = [(2, 2), (2, 3), (3, 2), (2, 4), (3, 3)]
RESULTS = {}


def record(number, title, ok, detail=""):
    line = f"{'PASS' if ok else 'FAIL'} [PRIMARY] {number:2d}. {title}" + (f": {detail}" if detail else "")
    RESULTS[number] = line
    return ok


def params(n, *values):
    return tuple(Fraction(v) for v in values[: n - 1]) if n > 2 else (Fraction(values[0]),)


# 1 ---------------------------------------------------------------------------

def test_01_dimension_formula():
    _basis_cached.cache_clear()
    start = time.perf_counter()
    bad = [(n, r) for n in (1, 2, 3) for r in range(7)
           if len(enumerate_basis(n, r)) != binom(n * n + r - 1, r)]
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 5
    assert record(1, "|Xi(n,r)| = C(n^2+r-1, r) for n <= 3, r <= 6", ok,
                  f"{len(bad)} mismatches, {elapsed:.2f} s")


# 2 ---------------------------------------------------------------------------

def test_02_worked_example():
    a = M([[0, 1, 2], [3, 0, 4], [5, 6, 0]])
    words_ok = (str(decompose_monomial(a)) == "e1^2 e2^6 e1 f2^5 f1^8 f2^6 k(8,7,6)"
                and format_pbw(a) == "e(2,2)^4 e(1,2)^2 e(1,1) f(1,1)^3 f(2,1)^5 f(2,2)^6 k(8,7,6)")
    chain1 = [([F(2)], 6, [[8, 0, 0], [0, 1, 0], [0, 6, 6]]),
              ([F(1)], 8, [[0, 0, 0], [8, 1, 0], [0, 6, 6]]),
              ([F(2)], 5, [[0, 0, 0], [3, 1, 0], [5, 6, 6]]),
              ([E(1)], 1, [[0, 1, 0], [3, 0, 0], [5, 6, 6]]),
              ([E(2)], 6, [[0, 1, 0], [3, 0, 6], [5, 6, 0]]),
              ([E(1)], 2, [[0, 1, 2], [3, 0, 4], [5, 6, 0]])]
    chain2 = [([F(2)], 6, [[8, 0, 0], [0, 1, 0], [0, 6, 6]]),
              ([F(2), F(1)], 5, [[3, 0, 0], [0, 1, 0], [5, 6, 6]]),
              ([F(1)], 3, [[0, 0, 0], [3, 1, 0], [5, 6, 6]]),
              ([E(1)], 1, [[0, 1, 0], [3, 0, 0], [5, 6, 6]]),
              ([E(1), E(2)], 2, [[0, 1, 2], [3, 0, 0], [5, 6, 4]]),
              ([E(2)], 4, [[0, 1, 2], [3, 0, 4], [5, 6, 0]])]
    rules = {"e": left_apply_e, "f": left_apply_f}
    steps_ok = True
    for chain in (chain1, chain2):
        cur = OrbitMatrix.diag(co(a))
        for word, times, rows in chain:
            for _ in range(times):
                for letter in reversed(word):
                    res = rules[letter.kind](letter.index, cur)
                    steps_ok = steps_ok and res is not None and res.coeff == 1
                    cur = res.matrix if res else cur
            steps_ok = steps_ok and cur == M(rows)
        steps_ok = steps_ok and cur == a
    evaluated = evaluate_word(decompose_monomial(a), OrbitMatrix.diag(co(a)))
    ok = words_ok and steps_ok and evaluated == (1, a)
    assert record(2, "worked example: both words and all 12 intermediate matrices", ok,
                  f"words {words_ok}, chains {steps_ok}")


# 3 ---------------------------------------------------------------------------

def test_03_newex():
    a, b = M([[2, 2], [0, 1]]), M([[2, 0], [2, 1]])
    s0, star = s0_multiply(a, b), star_multiply(a, b)
    ok = s0 == (1, M([[3, 1], [1, 0]])) and star is None
    assert record(3, "newex: s0 gives 3,1;1,0 and star gives 0", ok,
                  f"s0 {s0.matrix.literal() if s0 else 0}, star {star.matrix.literal() if star else 0}")


# 4 ---------------------------------------------------------------------------

def test_04_associativity():
    start = time.perf_counter()
    bad = []
    for n, r in SHAPES:
        tables = [build_table(n, r, "s0"), build_table(n, r, "star"),
                  build_table(n, r, "t", params(n, 1)), build_table(n, r, "t", params(n, 0)),
                  build_table(n, r, "t", params(n, Fraction(1, 2), Fraction(1, 2))),
                  build_table(n, r, "t", params(n, Fraction(-3, 2), 2) if n > 2 else (Fraction(-3, 2),))]
        bad += [(n, r, t.product) for t in tables if not check_associativity(t)]
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 120
    assert record(4, "s0, star and t products associative on all triples", ok,
                  f"{len(SHAPES) * 6} tables, {len(bad)} failures, {elapsed:.1f} s")


# 5 ---------------------------------------------------------------------------

def test_05_filtration():
    pairs = bad = 0
    for n, r in SHAPES:
        basis = enumerate_basis(n, r)
        deg = {m: degree_vectors(m) for m in basis}
        for x, y in product(basis, repeat=2):
            res = s0_multiply(x, y)
            if res is None:
                continue
            pairs += 1
            z = res.matrix
            de = [p + q - s for p, q, s in zip(deg[x].e_deg, deg[y].e_deg, deg[z].e_deg)]
            df = [p + q - s for p, q, s in zip(deg[x].f_deg, deg[y].f_deg, deg[z].f_deg)]
            bad += de != df or any(d < 0 for d in de)
    assert record(5, "E-defect = F-defect >= 0 on every nonzero product", not bad,
                  f"{pairs} products, {bad} failures")


# 6 ---------------------------------------------------------------------------

def test_06_presentation():
    checked = failed = 0
    for n, r in ((2, 3), (3, 2), (3, 3)):
        for product_name, t in (("s0", 1), ("star", 0), ("t", params(n, Fraction(1, 2), Fraction(1, 3)))):
            table = build_table(n, r, product_name, t if product_name == "t" else None)
            report = verify_relations(table, t)
            checked += report["relations_checked"]
            failed += len(report["failures"])
    assert record(6, "every P, N, C(t) relation vanishes for t = 1, 0, (1/2,1/3)", not failed,
                  f"{checked} relations, {failed} nonzero")


# 7 ---------------------------------------------------------------------------

def test_07_ideals():
    bad = []
    for n in (1, 2, 3):
        for r in range(1, 6):
            table = build_table(n, r)
            ideal = ideal_closure(table, [table.index[m] for m in boundary_idempotents(n, r)])
            span = sorted(table.basis[k] for k in ideal.indices()) == boundary_ideal_basis(n, r)
            quotient = quotient_algebra(table, ideal)
            if not (span and ideal.rank == ideal_rank_formula(n, r)
                    and quotient.dim == quotient_rank_formula(n, r)):
                bad.append((n, r))
    table = build_table(2, 3)
    ideal = ideal_closure(table, [table.index[m] for m in boundary_idempotents(2, 3)])
    example = ideal.rank == 16 and quotient_algebra(table, ideal).dim == 4
    ok = not bad and example
    assert record(7, "boundary ideal = zero-diagonal span, both rank formulas (n <= 3, r <= 5)", ok,
                  f"rank I(2,3) = {ideal.rank}, quotient 4: {example}, failures {bad}")


# 8 ---------------------------------------------------------------------------

def test_08_main_theorem():
    results = [verify_main_theorem(n, r) for n, r in ((2, 2), (2, 3), (3, 2))]
    ok = all(res["ok"] for res in results)
    assert record(8, "DS0(n,r) = S0(n,n+r)/I under A -> A + Id, zero patterns included", ok,
                  ", ".join(f"({res['n']},{res['r']}) iso {res['iso']} mismatches "
                            f"{res['zero_pattern_mismatches']}" for res in results))


# 9 ---------------------------------------------------------------------------

def test_09_rescaling():
    cases = [(2, 3, [Fraction(1, 2)]), (2, 3, [Fraction(-5)]),
             (3, 2, [Fraction(1, 2), Fraction(1, 3)]), (3, 2, [Fraction(2), Fraction(-7, 4)])]
    ok = all(rescaling_iso_check(n, r, a) for n, r, a in cases)
    assert record(9, "scale(A) = prod a_i^E(A)_i carries the t-table onto the s0 table", ok,
                  f"{len(cases)} parameter choices")


# 10 --------------------------------------------------------------------------

def _length_oracle_0hecke(table, r):
    bad = 0
    for w in table.basis:
        for i in range(1, r):
            s = Permutation.simple(r, i)
            want = s * w if (s * w).length() == w.length() + 1 else w
            got = table.mono(table.generator(i), table.index[w])
            bad += got != (table.index[want], 1)
    return bad


def test_10_zero_hecke():
    details, ok = [], True
    for r in (2, 3, 4):
        table = hecke0_build(r)
        rel = hecke_relations(table, square_is_zero=False)
        law = _length_oracle_0hecke(table, r)
        ok = ok and table.dim == math.factorial(r) and not rel and not law
        details.append(f"r={r}: dim {table.dim}, {len(rel)} relation and {law} product failures")
    assert record(10, "k_alpha S0(r,r) k_alpha is H0(r)", ok, "; ".join(details))


# 11 --------------------------------------------------------------------------

def _length_oracle_nilhecke(table):
    bad = []
    for u, v in product(table.basis, repeat=2):
        got = table.mono(table.index[u], table.index[v])
        if (u * v).length() == u.length() + v.length():
            if got != (table.index[u * v], 1):
                bad.append((u, v))
        elif got is not None:
            bad.append((u, v))
    return bad


def test_11_nil_hecke_graded():
    details, ok = [], True
    for r in (2, 3, 4):
        table = nilhecke_graded_build(r, check_law=False)
        squares = all(table.mono(table.generator(i), table.generator(i)) is None for i in range(1, r))
        law = _length_oracle_nilhecke(table)
        ok = ok and squares and not law
        details.append(f"r={r}: T_i^2 = 0 {squares}, {len(law)} of {table.dim ** 2} products off the law")
    assert record(11, "k_alpha DS0(r,r) k_alpha: T_i^2 = 0 and the nil-Hecke product law", ok,
                  "; ".join(details))


# 12 --------------------------------------------------------------------------

def test_12_ntl():
    start = time.perf_counter()
    dims = [ntl_build(r).dim for r in (2, 3, 4, 5)]
    listed = sorted(M(rows) for rows in (
        [[1, 0, 0], [0, 1, 0], [0, 0, 1]], [[1, 0, 0], [0, 0, 1], [0, 1, 0]],
        [[0, 0, 1], [1, 0, 0], [0, 1, 0]], [[0, 1, 0], [1, 0, 0], [0, 0, 1]],
        [[0, 1, 0], [0, 0, 1], [1, 0, 0]]))
    basis3 = sorted(ntl_build(3).matrices.values())
    roundtrip = all(peaks_to_element(r, element_to_peaks(m)) == m
                    for r in (2, 3, 4, 5) for m in ntl_build(r).matrices.values())
    example = (peaks_to_element(3, [(3, 2)]) == M([[1, 0, 0], [0, 0, 1], [0, 1, 0]])
               and peaks_to_element(3, [(2, 1), (3, 2)]) == M([[0, 0, 1], [1, 0, 0], [0, 1, 0]]))
    elapsed = time.perf_counter() - start
    ok = (dims == [catalan(r) for r in (2, 3, 4, 5)] == [2, 5, 14, 42] and basis3 == listed
          and roundtrip and example and elapsed < 30)
    assert record(12, "NTL(r): Catalan dimensions, r=3 basis, peak round trip and example", ok,
                  f"dims {dims}, r=3 basis {basis3 == listed}, round trip {roundtrip}, "
                  f"example {example}, {elapsed:.2f} s")


def main():
    failures = 0
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for number, fn in enumerate(tests, start=1):
        try:
            fn()
        except AssertionError:
            failures += 1
        except Exception as exc:  # report crashes as failures
            record(number, fn.__name__, False, f"{type(exc).__name__}: {exc}")
            failures += 1
        print(RESULTS.get(number, f"FAIL [PRIMARY] {number:2d}. {fn.__name__}"))
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
