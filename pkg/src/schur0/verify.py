"""Bounded verification suites behind ``schur0 verify``.

Each check returns ``(ok, detail)``; :func:`run_suite` times them and
collects a report.  Setting ``SCHUR0_INJECT_FAULT=flip-sign`` flips one
structure constant in every table the checks build, which must make the
suites fail (a self-test of the harness).
"""

from __future__ import annotations

import math
import os
import time
from fractions import Fraction
from itertools import combinations
from typing import Callable, NamedTuple

from . import kernel
from .algebra import (
    StructureTable,
    boundary_idempotents,
    boundary_ideal_basis,
    build_table,
    check_associativity,
    corrupt,
    face_idempotents,
    ideal_closure,
    ideal_rank_formula,
    max_dim,
    quotient_algebra,
    quotient_rank_formula,
    support_idempotents,
    verify_iso_by_bijection,
    verify_main_theorem,
)
from .centralizers import (
    ProductLawError,
    all_permutations,
    catalan,
    element_to_peaks,
    fully_commutative,
    hecke0_build,
    nil_hecke_law_violations,
    nilhecke_graded_build,
    ntl_build,
    peak_sets,
    peaks_to_element,
    zero_hecke_law_violations,
)
from .core import basis_size, binom, degree_vectors, enumerate_basis, s0_multiply
from .presentation import rescaling_scale, verify_relations

SUITES = ("filtration", "presentation", "maintheorem", "ideals", "hecke", "ntl")
SAMPLE_T = (Fraction(1, 2), Fraction(1, 3))


class CheckResult(NamedTuple):
    name: str
    status: str
    detail: str
    elapsed_ms: int


def fault_injected() -> bool:
    return os.environ.get("SCHUR0_INJECT_FAULT", "") == "flip-sign"


def _table(n, r, product="s0", t=None) -> StructureTable:
    table = build_table(n, r, product, t)
    if fault_injected() and table.products:
        table = corrupt(table)
    return table


def _shapes(max_n, max_r, min_n=1):
    return [(n, r) for n in range(min_n, max_n + 1) for r in range(1, max_r + 1)
            if basis_size(n, r) <= max_dim()]


def _t_values(n):
    return SAMPLE_T[: n - 1] if n > 2 else SAMPLE_T[:1]


# -- filtration ------------------------------------------------------------

def check_dimension(n, r):
    got = len(enumerate_basis(n, r))
    want = binom(n * n + r - 1, r)
    return got == want, f"|Xi({n},{r})| = {got}, C({n * n + r - 1},{r}) = {want}"


def check_defects(n, r):
    """E- and F-defects agree and are nonnegative on every nonzero s0 product."""
    basis = enumerate_basis(n, r)
    degs = {m: degree_vectors(m) for m in basis}
    pairs = 0
    for a in basis:
        for b in basis:
            res = s0_multiply(a, b)
            if res is None:
                continue
            pairs += 1
            c = res.matrix
            de = [x + y - z for x, y, z in zip(degs[a].e_deg, degs[b].e_deg, degs[c].e_deg)]
            df = [x + y - z for x, y, z in zip(degs[a].f_deg, degs[b].f_deg, degs[c].f_deg)]
            if de != df or min(de, default=0) < 0:
                return False, f"{a.literal()} * {b.literal()}: E-defect {de}, F-defect {df}"
    return True, f"{pairs} nonzero products"


def check_associative(n, r, product, t=None):
    table = _table(n, r, product, t)
    return check_associativity(table), f"{table.name} {table.product}, dim {table.dim}"


# -- presentation ----------------------------------------------------------

def check_relations(n, r, product, t):
    table = _table(n, r, product, None if product != "t" else t)
    report = verify_relations(table, t)
    bad = report["failures"]
    detail = f"{report['relations_checked']} relations, {len(bad)} nonzero"
    if bad:
        first = bad[0]
        detail += f"; first {first['family']}[{first['i']},{first['j']}] at {first['lambda']}"
    return not bad, detail


def check_rescaling(n, r, a):
    dt = _table(n, r, "t", a)
    s0 = build_table(n, r, "s0")
    ok = verify_iso_by_bijection(dt, s0, lambda m: m, rescaling_scale(a))
    return ok, f"scale = prod a_i^E_i with a = {[str(x) for x in a]}"


# -- ideals and the main theorem -------------------------------------------

def check_ideal(n, r):
    table = _table(n, r)
    ideal = ideal_closure(table, [table.index[m] for m in boundary_idempotents(n, r)])
    span = sorted(table.index[m] for m in boundary_ideal_basis(n, r))
    quotient = quotient_algebra(table, ideal, check=False)
    ok = (sorted(ideal.indices()) == span and ideal.rank == ideal_rank_formula(n, r)
          and quotient.dim == quotient_rank_formula(n, r))
    return ok, (f"rank I = {ideal.rank} (formula {ideal_rank_formula(n, r)}), "
                f"quotient {quotient.dim} (formula {quotient_rank_formula(n, r)})")


def check_faces(n, r, i):
    table = _table(n, r)
    whole = sorted(ideal_closure(
        table, [table.index[m] for m in support_idempotents(n, r, i)]).indices())
    for face in combinations(range(1, n + 1), i):
        part = ideal_closure(table, [table.index[m] for m in face_idempotents(n, r, face)])
        if sorted(part.indices()) != whole:
            return False, f"face {face} generates a smaller ideal"
    return True, f"every {i - 1}-face generates I_{i} (rank {len(whole)})"


def check_main_theorem(n, r):
    res = verify_main_theorem(n, r, ds=_table(n, r, "star"))
    return res["ok"], (f"dim {res['dim_ds']} = {res['dim_quotient']}, iso {res['iso']}, "
                       f"zero-pattern mismatches {res['zero_pattern_mismatches']}")


# -- centralizers ----------------------------------------------------------

def check_hecke0(r):
    table = hecke0_build(r)
    if fault_injected():
        table = corrupt(table)
    bad = zero_hecke_law_violations(table)
    return table.dim == math.factorial(r) and not bad, (
        f"dim {table.dim}, {len(bad)} violations of T_i T_w")


def check_nilhecke(r):
    try:
        table = nilhecke_graded_build(r)
    except ProductLawError as exc:
        kept = sum(1 for w, m in exc.table.word_products.items() if m is not None)
        return False, (f"{len(exc.violations)} length-additive products vanish under the "
                       f"graded product; first {exc.violations[0]}; only {kept} of "
                       f"{exc.table.dim} T_w survive as products of generators")
    bad = nil_hecke_law_violations(corrupt(table) if fault_injected() else table)
    return not bad, f"dim {table.dim}, {len(bad)} violations"


def check_well_defined(r):
    hecke0_build(r)  # raises when two reduced words of some w disagree
    nilhecke_graded_build(r, check_law=False)
    return True, f"all reduced words agree for the {math.factorial(r)} permutations"


def check_ntl(r):
    table = ntl_build(r)
    if fault_injected():
        table = corrupt(table) if table.products else table
        if not check_associativity(table):
            return False, "associativity fails"
    peaks = peak_sets(r)
    images = [peaks_to_element(r, p) for p in peaks]
    roundtrip = all(element_to_peaks(m) == p for m, p in zip(images, peaks))
    spans = sorted(images) == sorted(table.matrices.values())
    ok = table.dim == catalan(r) and roundtrip and spans
    detail = f"dim {table.dim}, Catalan({r}) = {catalan(r)}"
    if r <= 4:
        fc = all(fully_commutative(w) == (w in table.index) for w in all_permutations(r))
        ok = ok and fc
        detail += f", braid-free characterization {fc}"
    return ok, detail


# -- registry --------------------------------------------------------------

def registry(max_n: int = 3, max_r: int = 3) -> dict[str, list[tuple[str, Callable]]]:
    checks: dict[str, list] = {s: [] for s in SUITES}
    shapes = _shapes(max_n, max_r)
    for n, r in shapes:
        checks["filtration"].append((f"dimension({n},{r})", lambda n=n, r=r: check_dimension(n, r)))
        checks["filtration"].append((f"defects({n},{r})", lambda n=n, r=r: check_defects(n, r)))
        for product, t in (("s0", None), ("star", None), ("t", _t_values(n)), ("t", (0,))):
            if product == "t" and n == 1:
                continue
            tag = product if t is None else "t=" + ",".join(str(x) for x in t)
            checks["filtration"].append(
                (f"associative({n},{r},{tag})", lambda n=n, r=r, p=product, t=t: check_associative(n, r, p, t)))
    for n, r in shapes:
        if n == 1:
            continue
        for product, t in (("s0", 1), ("star", 0), ("t", _t_values(n))):
            tag = "t=" + (",".join(str(x) for x in t) if isinstance(t, tuple) else str(t))
            checks["presentation"].append(
                (f"relations({n},{r},{tag})", lambda n=n, r=r, p=product, t=t: check_relations(n, r, p, t)))
        checks["presentation"].append(
            (f"rescaling({n},{r})", lambda n=n, r=r: check_rescaling(n, r, _t_values(n))))
    for n, r in shapes:
        if basis_size(n, n + r) <= max_dim():
            checks["maintheorem"].append((f"maintheorem({n},{r})", lambda n=n, r=r: check_main_theorem(n, r)))
        checks["ideals"].append((f"ideal({n},{r})", lambda n=n, r=r: check_ideal(n, r)))
        if n >= 3 and r >= n:
            checks["ideals"].append((f"faces({n},{r},2)", lambda n=n, r=r: check_faces(n, r, 2)))
    for r in range(2, min(max_r, 5) + 1):
        checks["hecke"].append((f"hecke0({r})", lambda r=r: check_hecke0(r)))
        checks["hecke"].append((f"well_defined({r})", lambda r=r: check_well_defined(r)))
        checks["hecke"].append((f"nilhecke({r})", lambda r=r: check_nilhecke(r)))
    for r in range(2, min(max_r, 7) + 1):
        checks["ntl"].append((f"ntl({r})", lambda r=r: check_ntl(r)))
    return checks


def run_suite(suite: str = "all", max_n: int = 3, max_r: int = 3) -> dict:
    if suite != "all" and suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    table = registry(max_n, max_r)
    selected = SUITES if suite == "all" else (suite,)
    results = []
    for name in selected:
        for check_name, fn in table[name]:
            start = time.perf_counter()
            try:
                ok, detail = fn()
            except Exception as exc:  # a crashing check is a failing check
                ok, detail = False, f"{type(exc).__name__}: {exc}"
            elapsed = int((time.perf_counter() - start) * 1000)
            results.append(CheckResult(f"{name}:{check_name}", "pass" if ok else "fail",
                                       detail, elapsed))
    return {
        "suite": suite,
        "bounds": {"max_n": max_n, "max_r": max_r},
        "backend": kernel.BACKEND,
        "fault_injected": fault_injected(),
        "passed": all(c.status == "pass" for c in results),
        "checks": [c._asdict() for c in results],
    }
