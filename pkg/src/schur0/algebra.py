"""Finite-dimensional algebras given by structure constants.

Tables built from Xi(n, r) are *monomial*: each product of two basis
elements is a scalar multiple of one basis element or zero.  Closures,
quotients and associativity checks take a fast path on monomial data and
fall back to exact sparse linear algebra otherwise.
"""

from __future__ import annotations

import json
import os
from collections import defaultdict, deque
from fractions import Fraction
from typing import Callable, Hashable, Mapping, Sequence

import numpy as np

from . import kernel
from .core import (
    OrbitMatrix,
    compositions,
    enumerate_basis,
    basis_size,
    binom,
    parse_params,
    t_coefficient,
)
from .linalg import Subspace, SparseVector, unit

DEFAULT_MAX_DIM = 5000


class GuardExceeded(ValueError):
    """Requested object is larger than the configured size cap."""


def max_dim() -> int:
    return int(os.environ.get("SCHUR0_MAX_DIM", DEFAULT_MAX_DIM))


def format_fraction(c: Fraction) -> str:
    return f"{c.numerator}/{c.denominator}"


class StructureTable:
    """Basis labels plus sparse structure constants c_{ij}^k.

    ``products`` maps ``(i, j)`` to a tuple of ``(k, coeff)`` pairs; absent
    keys are zero products.
    """

    def __init__(self, name: str, basis: Sequence[Hashable],
                 products: Mapping[tuple[int, int], Sequence[tuple[int, Fraction]]],
                 *, unit: SparseVector | None = None, n: int | None = None,
                 r: int | None = None, product: str | None = None):
        self.name = name
        self.basis = tuple(basis)
        self.index = {label: i for i, label in enumerate(self.basis)}
        if len(self.index) != len(self.basis):
            raise ValueError("basis labels must be distinct")
        self.products = {key: tuple(terms) for key, terms in products.items() if terms}
        self.unit = unit
        self.n, self.r, self.product = n, r, product
        self._by_left = None
        self._by_right = None

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self):
        return len(self.basis)

    def __repr__(self):
        return f"StructureTable({self.name!r}, dim={self.dim})"

    @property
    def monomial(self) -> bool:
        return all(len(terms) == 1 for terms in self.products.values())

    def mul_basis(self, i: int, j: int) -> SparseVector:
        return dict(self.products.get((i, j), ()))

    def mono(self, i: int, j: int):
        """(k, coeff) for a monomial product, or None for zero."""
        terms = self.products.get((i, j))
        return terms[0] if terms else None

    def multiply(self, u: SparseVector, v: SparseVector) -> SparseVector:
        out: SparseVector = {}
        for i, a in u.items():
            for j, b in v.items():
                terms = self.products.get((i, j))
                if terms:
                    ab = a * b
                    for k, c in terms:
                        new = out.get(k, 0) + ab * c
                        if new:
                            out[k] = new
                        else:
                            del out[k]
        return out

    def element(self, label) -> SparseVector:
        return unit(self.index[label])

    def _build_adjacency(self):
        left, right = defaultdict(list), defaultdict(list)
        for (i, j), terms in self.products.items():
            left[i].append((j, terms))
            right[j].append((i, terms))
        self._by_left, self._by_right = dict(left), dict(right)

    def right_partners(self, i: int):
        """[(j, terms)] for every j with e_i e_j nonzero."""
        if self._by_left is None:
            self._build_adjacency()
        return self._by_left.get(i, [])

    def left_partners(self, j: int):
        """[(i, terms)] for every i with e_i e_j nonzero."""
        if self._by_right is None:
            self._build_adjacency()
        return self._by_right.get(j, [])

    def index_array(self) -> np.ndarray:
        """(N+1, N+1) product-index array of a monomial table; N encodes zero."""
        size = self.dim
        arr = np.full((size + 1, size + 1), size, dtype=np.int64)
        for (i, j), terms in self.products.items():
            if len(terms) != 1:
                raise ValueError("index array needs a monomial table")
            arr[i, j] = terms[0][0]
        return arr

    def identity(self) -> SparseVector:
        if self.unit is None:
            raise ValueError(f"{self.name} has no recorded identity")
        return dict(self.unit)

    def with_products(self, products, name=None) -> StructureTable:
        return StructureTable(name or self.name, self.basis, products, unit=self.unit,
                              n=self.n, r=self.r, product=self.product)


class IdealBasis:
    """A two-sided ideal, as a subspace over a table's basis indices."""

    def __init__(self, subspace: Subspace):
        self.subspace = subspace

    @property
    def rank(self) -> int:
        return self.subspace.rank

    def indices(self) -> list[int]:
        """Basis indices spanning the ideal; only for coordinate subspaces."""
        if not self.subspace.is_coordinate_subspace():
            raise ValueError("ideal is not spanned by basis elements")
        return self.subspace.pivots

    def __repr__(self):
        return f"IdealBasis(rank={self.rank})"


# -- construction -----------------------------------------------------------

def _product_tag(product: str, t) -> str:
    if product == "t":
        return "t(" + ",".join(str(x) for x in t) + ")"
    return product


def _check_size(size: int, cap: int | None) -> None:
    cap = max_dim() if cap is None else cap
    if size > cap:
        raise GuardExceeded(f"{size} basis elements exceeds the cap of {cap} (SCHUR0_MAX_DIM)")


def _products_over(basis: Sequence[OrbitMatrix], n: int, product: str, t) -> dict:
    """Monomial structure constants on a set of orbit matrices closed under the product."""
    index = {m: i for i, m in enumerate(basis)}
    flats = [tuple(m) for m in basis]
    edeg = [kernel.e_degree(f, n) for f in flats]
    by_co, by_ro = defaultdict(list), defaultdict(list)
    for i, f in enumerate(flats):
        by_co[kernel.col_sums(f, n)].append(i)
        by_ro[kernel.row_sums(f, n)].append(i)
    one = Fraction(1)
    s0 = kernel.s0_product
    products = {}
    for lam, lefts in by_co.items():
        rights = by_ro.get(lam, ())
        for i in lefts:
            a = flats[i]
            ea = edeg[i]
            for j in rights:
                c = s0(a, flats[j], n)
                if c is None:
                    continue
                k = index.get(c)
                if k is None and product != "star":
                    raise ValueError(f"product {c} leaves the given basis")
                if product == "s0":
                    coeff = one
                else:
                    eb = edeg[j]
                    ec = edeg[k] if k is not None else kernel.e_degree(c, n)
                    defect = tuple(x + y - z for x, y, z in zip(ea, eb, ec))
                    if product == "star":
                        coeff = one if not any(defect) else 0
                        if coeff and k is None:
                            raise ValueError(f"product {c} leaves the given basis")
                    else:
                        coeff = t_coefficient(t, defect)
                if coeff:
                    products[(i, j)] = ((k, coeff),)
    return products


def build_table(n: int, r: int, product: str = "s0", t=None,
                cap: int | None = None) -> StructureTable:
    """Structure table of S_0(n, r) ("s0"), DS_0(n, r) ("star") or D_t(n, r) ("t")."""
    if product not in ("s0", "star", "t"):
        raise ValueError(f"unknown product {product!r}")
    if n < 1:
        raise ValueError("n must be positive")
    _check_size(basis_size(n, r), cap)
    if product == "t":
        t = parse_params(t, n)
    basis = enumerate_basis(n, r)
    products = _products_over(basis, n, product, t)
    index = {m: i for i, m in enumerate(basis)}
    identity = {index[OrbitMatrix.diag(lam)]: Fraction(1) for lam in compositions(n, r)}
    names = {"s0": "S0", "star": "DS0", "t": "D_t"}
    return StructureTable(f"{names[product]}({n},{r})", basis, products, unit=identity,
                          n=n, r=r, product=_product_tag(product, t))


def _contingency(rows: Sequence[int], cols: Sequence[int]):
    """Nonnegative integer matrices with the given row and column sums."""
    n = len(rows)

    def fill(row, remaining_cols):
        if row == n - 1:
            yield (tuple(remaining_cols),)
            return
        for first in _bounded(rows[row], remaining_cols):
            rest = [c - x for c, x in zip(remaining_cols, first)]
            for tail in fill(row + 1, rest):
                yield (first,) + tail

    for mat in fill(0, list(cols)):
        yield OrbitMatrix(x for r_ in mat for x in r_)


def _bounded(total: int, caps: Sequence[int]):
    if len(caps) == 1:
        if total <= caps[0]:
            yield (total,)
        return
    for first in range(min(total, caps[0]), -1, -1):
        for rest in _bounded(total - first, caps[1:]):
            yield (first,) + rest


def corner_table(n: int, r: int, lam: Sequence[int], product: str = "s0", t=None,
                 cap: int | None = None) -> StructureTable:
    """k_lam A k_lam built directly on matrices with ro = co = lam.

    Same result as :func:`corner_algebra` on the full table, without
    materialising Xi(n, r).
    """
    lam = tuple(lam)
    if len(lam) != n or sum(lam) != r or min(lam) < 0:
        raise ValueError(f"{lam} is not in Lambda({n}, {r})")
    if product == "t":
        t = parse_params(t, n)
    basis = sorted(_contingency(lam, lam))
    _check_size(len(basis), cap)
    products = _products_over(basis, n, product, t)
    idx = basis.index(OrbitMatrix.diag(lam))
    names = {"s0": "S0", "star": "DS0", "t": "D_t"}
    return StructureTable(f"k{lam} {names[product]}({n},{r}) k{lam}", basis, products,
                          unit={idx: Fraction(1)}, n=n, r=r, product=_product_tag(product, t))


# -- ideals, subalgebras, quotients ----------------------------------------

def _as_vectors(generators) -> list[SparseVector]:
    out = []
    for g in generators:
        out.append(unit(g) if isinstance(g, int) else dict(g))
    return out


def _monomial_generators(vectors) -> list[int] | None:
    idx = []
    for v in vectors:
        if len(v) != 1:
            return None
        idx.append(next(iter(v)))
    return idx


def ideal_closure(table: StructureTable, generators) -> IdealBasis:
    """Smallest two-sided ideal containing the generators."""
    vectors = [v for v in _as_vectors(generators) if v]
    mono = _monomial_generators(vectors)
    if mono is not None and table.monomial:
        seen = set(mono)
        queue = deque(mono)
        while queue:
            x = queue.popleft()
            for _, terms in table.right_partners(x):
                k = terms[0][0]
                if k not in seen:
                    seen.add(k)
                    queue.append(k)
            for _, terms in table.left_partners(x):
                k = terms[0][0]
                if k not in seen:
                    seen.add(k)
                    queue.append(k)
        return IdealBasis(Subspace(unit(k) for k in sorted(seen)))
    return IdealBasis(_generic_ideal_closure(table, vectors))


def _generic_ideal_closure(table: StructureTable, vectors) -> Subspace:
    space = Subspace()
    queue = deque()
    for v in vectors:
        if space.add(v):
            queue.append(v)
    basis_units = [unit(b) for b in range(table.dim)]
    while queue:
        v = queue.popleft()
        for b in basis_units:
            for w in (table.multiply(b, v), table.multiply(v, b)):
                if w and space.add(w):
                    queue.append(w)
    return space


def is_two_sided_ideal(table: StructureTable, space: Subspace) -> bool:
    if space.is_coordinate_subspace() and table.monomial:
        members = set(space.pivots)
        for x in members:
            for _, terms in table.right_partners(x):
                if terms[0][0] not in members:
                    return False
            for _, terms in table.left_partners(x):
                if terms[0][0] not in members:
                    return False
        return True
    for v in space.basis:
        for b in range(table.dim):
            if not space.contains(table.multiply(unit(b), v)):
                return False
            if not space.contains(table.multiply(v, unit(b))):
                return False
    return True


def boundary_ideal_basis(n: int, r: int) -> list[OrbitMatrix]:
    """Orbit matrices with at least one zero diagonal entry."""
    return [m for m in enumerate_basis(n, r) if min(m.diagonal()) == 0]


def boundary_idempotents(n: int, r: int) -> list[OrbitMatrix]:
    return [OrbitMatrix.diag(lam) for lam in compositions(n, r) if 0 in lam]


def support_idempotents(n: int, r: int, i: int) -> list[OrbitMatrix]:
    """k_lam with at most i nonzero parts; these generate I_i(n, r)."""
    return [OrbitMatrix.diag(lam) for lam in compositions(n, r)
            if sum(1 for x in lam if x) <= i]


def face_idempotents(n: int, r: int, face: Sequence[int]) -> list[OrbitMatrix]:
    """k_lam whose nonzero parts sit inside the given positions (1-based)."""
    allowed = set(face)
    return [OrbitMatrix.diag(lam) for lam in compositions(n, r)
            if all(p + 1 in allowed for p, x in enumerate(lam) if x)]


def ideal_rank_formula(n: int, r: int) -> int:
    """Sum over s of C(n, s) C(n^2+r-n-1, r+s-n): matrices with exactly s zeros on the diagonal."""
    return sum(binom(n, s) * binom(n * n + r - n - 1, r + s - n) for s in range(1, n + 1))


def quotient_rank_formula(n: int, r: int) -> int:
    return binom(n * n + r - n - 1, r - n)


def quotient_algebra(table: StructureTable, ideal: IdealBasis, *, check: bool = True) -> StructureTable:
    """A / I on the basis labels at non-pivot positions of I's echelon form."""
    space = ideal.subspace
    if check and not is_two_sided_ideal(table, space):
        raise ValueError("subspace is not a two-sided ideal")
    pivots = set(space.pivots)
    keep = [i for i in range(table.dim) if i not in pivots]
    new_index = {old: new for new, old in enumerate(keep)}
    coordinate = space.is_coordinate_subspace()
    products = {}
    for (i, j), terms in table.products.items():
        if i not in new_index or j not in new_index:
            continue
        vec = dict(terms)
        rem = {k: c for k, c in vec.items() if k not in pivots} if coordinate else space.reduce(vec)
        if rem:
            products[(new_index[i], new_index[j])] = tuple(
                sorted((new_index[k], c) for k, c in rem.items()))
    unit_vec = None
    if table.unit is not None:
        reduced = space.reduce(table.unit)
        unit_vec = {new_index[k]: c for k, c in reduced.items()}
    return StructureTable(f"{table.name}/I", [table.basis[i] for i in keep], products,
                          unit=unit_vec, n=table.n, r=table.r, product=table.product)


def _table_on_subspace(table: StructureTable, space: Subspace, name: str,
                       unit_vec: SparseVector) -> StructureTable:
    pivots = space.pivots
    rows = space.basis
    pos = {p: k for k, p in enumerate(pivots)}
    labels = []
    for p, row in zip(pivots, rows):
        labels.append(table.basis[p] if len(row) == 1 else ("v", table.basis[p]))
    products = {}
    for a, ra in enumerate(rows):
        for b, rb in enumerate(rows):
            prod = table.multiply(ra, rb)
            if prod:
                coords = space.coordinates(prod)
                products[(a, b)] = tuple(sorted((pos[p], c) for p, c in coords.items()))
    unit_coords = {pos[p]: c for p, c in space.coordinates(unit_vec).items()}
    return StructureTable(name, labels, products, unit=unit_coords,
                          n=table.n, r=table.r, product=table.product)


def subalgebra_closure(table: StructureTable, generators, unit_vec: SparseVector,
                       name: str | None = None) -> StructureTable:
    """Smallest subspace containing unit and generators and closed under products."""
    vectors = [dict(unit_vec)] + [v for v in _as_vectors(generators) if v]
    space = Subspace()
    spanning: list[SparseVector] = []
    queue = deque()
    for v in vectors:
        if space.add(v):
            spanning.append(v)
            queue.append(v)
    while queue:
        v = queue.popleft()
        for s in list(spanning):
            for w in (table.multiply(s, v), table.multiply(v, s)):
                if w and space.add(w):
                    spanning.append(w)
                    queue.append(w)
    return _table_on_subspace(table, space, name or f"subalgebra of {table.name}", unit_vec)


def corner_algebra(table: StructureTable, idem: SparseVector) -> StructureTable:
    """idem * A * idem with unit idem."""
    if table.multiply(idem, idem) != {k: v for k, v in idem.items() if v}:
        raise ValueError("element is not idempotent")
    space = Subspace()
    for b in range(table.dim):
        v = table.multiply(table.multiply(idem, unit(b)), idem)
        if v:
            space.add(v)
    return _table_on_subspace(table, space, f"corner of {table.name}", idem)


# -- checks -----------------------------------------------------------------

def find_associativity_violation(table: StructureTable):
    """A basis triple (a, b, c) with (ab)c != a(bc), or None."""
    if table.monomial:
        bad = kernel.assoc_violation(table.index_array())
        if bad is not None:
            return bad
        coeffs = {key: terms[0][1] for key, terms in table.products.items()}
        if all(c == 1 for c in coeffs.values()):
            return None
        for (a, b), terms in table.products.items():
            ab, c_ab = terms[0]
            for c, terms2 in table.right_partners(ab):
                bc, c_bc = table.products[(b, c)][0]
                c_a_bc = coeffs[(a, bc)]
                if c_ab * terms2[0][1] != c_bc * c_a_bc:
                    return (a, b, c)
        return None
    size = table.dim
    for a in range(size):
        for b in range(size):
            ab = table.mul_basis(a, b)
            for c in range(size):
                left = table.multiply(ab, unit(c))
                right = table.multiply(unit(a), table.mul_basis(b, c))
                if left != right:
                    return (a, b, c)
    return None


def check_associativity(table: StructureTable) -> bool:
    return find_associativity_violation(table) is None


def verify_iso_by_bijection(t1: StructureTable, t2: StructureTable, bij,
                            scale: Callable | Mapping | None = None) -> bool:
    """Does e_x -> scale(x) e_{bij(x)} transport every structure constant of t1 onto t2?"""
    get = bij.get if isinstance(bij, Mapping) else bij
    images = [get(label) for label in t1.basis]
    if len(set(images)) != len(images) or t1.dim != t2.dim or any(
            img not in t2.index for img in images):
        raise ValueError("map is not a bijection of basis labels")
    perm = [t2.index[img] for img in images]
    if scale is None:
        factors = [Fraction(1)] * t1.dim
    else:
        sget = scale.get if isinstance(scale, Mapping) else scale
        factors = [Fraction(sget(label)) for label in t1.basis]
        if any(f == 0 for f in factors):
            raise ValueError("scale factors must be nonzero")
    inverse = {p: i for i, p in enumerate(perm)}
    # phi(e_i e_j) must equal phi(e_i) phi(e_j) for every pair i, j
    for (i, j), terms in t1.products.items():
        lhs = {perm[k]: c * factors[k] for k, c in terms}
        rhs = {k: c * factors[i] * factors[j]
               for k, c in t2.products.get((perm[i], perm[j]), ())}
        if lhs != rhs:
            return False
    for (pi, pj) in t2.products:
        if (inverse[pi], inverse[pj]) not in t1.products:
            return False
    return True


def shift_by_identity(a: OrbitMatrix) -> OrbitMatrix:
    n = a.n
    return OrbitMatrix._trusted(tuple(x + (1 if p // n == p % n else 0) for p, x in enumerate(a)))


def verify_main_theorem(n: int, r: int, ds: StructureTable | None = None) -> dict:
    """DS_0(n, r) against S_0(n, n+r)/I(n, n+r) under A -> A + identity.

    Reports the structure-constant transport and, pair by pair, that a star
    product vanishes exactly when the shifted s0 product is zero or lands in
    the ideal.  ``ds`` replaces the freshly built DS_0(n, r) table.
    """
    ds = build_table(n, r, "star") if ds is None else ds
    big = build_table(n, n + r, "s0")
    ideal = ideal_closure(big, [big.index[m] for m in boundary_idempotents(n, n + r)])
    members = set(ideal.indices())
    expected = {big.index[m] for m in boundary_ideal_basis(n, n + r)}
    quotient = quotient_algebra(big, ideal)
    iso = verify_iso_by_bijection(ds, quotient, shift_by_identity)
    mismatched = 0
    for i, a in enumerate(ds.basis):
        ia = big.index[shift_by_identity(a)]
        for j, b in enumerate(ds.basis):
            killed = (i, j) not in ds.products
            res = big.products.get((ia, big.index[shift_by_identity(b)]))
            in_ideal = res is None or res[0][0] in members
            if killed != in_ideal:
                mismatched += 1
    return {
        "n": n,
        "r": r,
        "dim_ds": ds.dim,
        "dim_quotient": quotient.dim,
        "ideal_rank": ideal.rank,
        "ideal_is_boundary_span": members == expected,
        "iso": iso,
        "zero_pattern_mismatches": mismatched,
        "ok": iso and mismatched == 0 and members == expected,
    }


# -- serialisation ----------------------------------------------------------

def _label_json(label):
    if isinstance(label, OrbitMatrix):
        return list(label)
    return str(label)


def table_to_json(table: StructureTable) -> str:
    entries = []
    for (i, j) in sorted(table.products):
        for k, c in sorted(table.products[(i, j)]):
            entries.append([i, j, k, format_fraction(Fraction(c))])
    doc = {
        "name": table.name,
        "n": table.n,
        "r": table.r,
        "product": table.product,
        "basis": [_label_json(b) for b in table.basis],
        "entries": entries,
    }
    return json.dumps(doc, separators=(",", ":")) + "\n"


def table_from_json(text: str) -> StructureTable:
    doc = json.loads(text)
    basis = [OrbitMatrix(b) if isinstance(b, list) else b for b in doc["basis"]]
    products: dict = defaultdict(list)
    for i, j, k, c in doc["entries"]:
        products[(i, j)].append((k, Fraction(c)))
    return StructureTable(doc["name"], basis, products, n=doc.get("n"), r=doc.get("r"),
                          product=doc.get("product"))


def corrupt(table: StructureTable, key=None, factor=Fraction(-1)) -> StructureTable:
    """Copy of the table with one structure constant multiplied by ``factor``.

    Used as a negative control for the verification harness.
    """
    products = dict(table.products)
    if key is None:
        # first product of two non-idempotent orbit matrices, else the first one
        def plain(i):
            label = table.basis[i]
            return isinstance(label, OrbitMatrix) and any(
                x for p, x in enumerate(label) if p // label.n != p % label.n)
        key = next((k for k in sorted(products) if plain(k[0]) and plain(k[1])), min(products))
    terms = products[key]
    products[key] = ((terms[0][0], terms[0][1] * factor),) + tuple(terms[1:])
    return table.with_products(products, name=f"{table.name} (corrupted)")
