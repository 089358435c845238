"""Symmetric-group words and the centralizer algebras at k_alpha, alpha = (1, ..., 1).

* the 0-Hecke algebra as k_alpha S_0(r, r) k_alpha,
* its graded image k_alpha DS_0(r, r) k_alpha,
* the nil-Temperley-Lieb algebra as the subalgebra of the graded corner
  generated by x_i = k_alpha f_i e_i k_alpha, with its peak-set basis.

Permutations are tuples in one-line notation on 1..r; products compose right
to left, ``(u * v)(x) = u(v(x))``.
"""

from __future__ import annotations

import math
from collections import deque
from fractions import Fraction
from functools import lru_cache
from itertools import permutations as _permutations
from typing import Iterable, Sequence

from . import kernel
from .algebra import GuardExceeded, StructureTable, _products_over, corner_table
from .core import E, F, K, OrbitMatrix, degree_vectors, evaluate_word

MAX_R_WORDS = 7
MAX_R_CORNER = 5
MAX_R_NTL = 7


def _guard(r: int, limit: int) -> None:
    if r < 1:
        raise ValueError("r must be positive")
    if r > limit:
        raise GuardExceeded(f"r = {r} exceeds the limit {limit}")


# -- permutations -----------------------------------------------------------

class Permutation(tuple):
    """One-line notation w = (w(1), ..., w(r))."""

    __slots__ = ()

    def __new__(cls, images: Iterable[int]):
        images = tuple(images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{images} is not a permutation of 1..{len(images)}")
        return super().__new__(cls, images)

    @classmethod
    def identity(cls, r: int) -> Permutation:
        return cls(range(1, r + 1))

    @classmethod
    def simple(cls, r: int, i: int) -> Permutation:
        """The transposition s_i = (i, i+1)."""
        images = list(range(1, r + 1))
        images[i - 1], images[i] = images[i], images[i - 1]
        return cls(images)

    @property
    def r(self) -> int:
        return len(self)

    def __mul__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return Permutation(self[x - 1] for x in other)

    def inverse(self) -> Permutation:
        out = [0] * len(self)
        for i, w in enumerate(self, start=1):
            out[w - 1] = i
        return Permutation(out)

    def length(self) -> int:
        """Number of inversions."""
        return sum(1 for a in range(len(self)) for b in range(a + 1, len(self))
                   if self[a] > self[b])

    def left_descents(self) -> list[int]:
        """i with l(s_i w) < l(w), i.e. i+1 appears before i."""
        pos = {v: k for k, v in enumerate(self)}
        return [i for i in range(1, len(self)) if pos[i + 1] < pos[i]]

    def matrix(self) -> OrbitMatrix:
        """Permutation matrix with a 1 at (i, w(i))."""
        r = len(self)
        return OrbitMatrix(1 if self[i] == j + 1 else 0 for i in range(r) for j in range(r))


def all_permutations(r: int) -> list[Permutation]:
    return [Permutation(p) for p in _permutations(range(1, r + 1))]


def from_word(r: int, word: Sequence[int]) -> Permutation:
    w = Permutation.identity(r)
    for i in word:
        w = w * Permutation.simple(r, i)
    return w


def permutation_of_matrix(m: OrbitMatrix) -> Permutation:
    n = m.n
    if sorted(m) != [0] * (n * n - n) + [1] * n:
        raise ValueError("not a permutation matrix")
    images = []
    for i in range(n):
        row = m[i * n:(i + 1) * n]
        if sum(row) != 1:
            raise ValueError("not a permutation matrix")
        images.append(row.index(1) + 1)
    return Permutation(images)


@lru_cache(maxsize=None)
def _reduced_words(w: Permutation) -> tuple[tuple[int, ...], ...]:
    if w.length() == 0:
        return ((),)
    out = set()
    for i in w.left_descents():
        shorter = Permutation.simple(len(w), i) * w
        for tail in _reduced_words(shorter):
            out.add((i,) + tail)
    return tuple(sorted(out))


def reduced_words(w: Permutation) -> list[tuple[int, ...]]:
    """Every reduced expression of w, as tuples of generator indices."""
    _guard(len(w), MAX_R_WORDS)
    return list(_reduced_words(Permutation(w)))


def reduced_word(w: Permutation) -> tuple[int, ...]:
    """One reduced expression (lexicographically first left-descent chain)."""
    w = Permutation(w)
    word = []
    while w.length():
        i = w.left_descents()[0]
        word.append(i)
        w = Permutation.simple(len(w), i) * w
    return tuple(word)


def has_braid_pattern(word: Sequence[int]) -> bool:
    """Does the word contain a factor s_i s_j s_i with |i - j| = 1?"""
    return any(word[k] == word[k + 2] and abs(word[k] - word[k + 1]) == 1
               for k in range(len(word) - 2))


def fully_commutative(w: Permutation) -> bool:
    return not any(has_braid_pattern(u) for u in reduced_words(w))


def catalan(r: int) -> int:
    return math.comb(2 * r, r) // (r + 1)


# -- corner algebras --------------------------------------------------------

class PermutationTable(StructureTable):
    """Corner algebra with basis labelled by permutations.

    ``matrices`` gives the orbit matrix of each label; ``word_products``
    records, for every w, the element obtained by multiplying the generators
    along each reduced word (a matrix, or None for zero).
    """

    def __init__(self, *args, matrices=None, word_products=None, **kwargs):
        super().__init__(*args, **kwargs)
        self.matrices = matrices or {}
        self.word_products = word_products or {}

    def generator(self, i: int) -> int:
        return self.index[Permutation.simple(self.r, i)]


def _alpha(r: int) -> tuple[int, ...]:
    return (1,) * r


def generator_matrix(r: int, i: int, product: str = "s0") -> OrbitMatrix:
    """k_alpha f_i e_i k_alpha on the orbit basis (the matrix of s_i)."""
    alpha = _alpha(r)
    res = evaluate_word([K(alpha), F(i), E(i), K(alpha)], OrbitMatrix.diag(alpha))
    if res is None or res.matrix != Permutation.simple(r, i).matrix():
        raise AssertionError("generator is not the transposition matrix")
    if product == "star":
        # e_i carries E-degree alpha_i and f_i none, so the graded product keeps the term
        want = tuple(1 if k == i else 0 for k in range(1, r))
        if degree_vectors(res.matrix).e_deg != want:
            raise AssertionError("graded generator vanished")
    return res.matrix


def _word_element(table: StructureTable, gens: dict[int, int], word: Sequence[int]):
    """Product of generator basis elements along the word, as (index, coeff) or None."""
    cur = table.index[OrbitMatrix.diag(_alpha(table.r))]
    coeff = Fraction(1)
    for i in reversed(word):
        res = table.mono(gens[i], cur)
        if res is None:
            return None
        cur, c = res
        coeff *= c
    return cur, coeff


def _label_corner(r: int, product: str) -> PermutationTable:
    corner = corner_table(r, r, _alpha(r), product)
    gens = {i: corner.index[generator_matrix(r, i, product)] for i in range(1, r)}
    perms = all_permutations(r)
    # T_w in the 0-Hecke corner is the product of generators along a reduced word;
    # the graded corner keeps the same basis labels
    if product == "s0":
        ref = corner
    else:
        ref = corner_table(r, r, _alpha(r), "s0")
        gens_ref = {i: ref.index[generator_matrix(r, i)] for i in range(1, r)}
    matrices = {}
    word_products = {}
    for w in perms:
        words = reduced_words(w)
        if product == "s0":
            res = {_word_element(corner, gens, u) for u in words}
            if len(res) != 1 or None in res:
                raise AssertionError(f"T_{w} is not well defined")
            (k, coeff), = res
            if coeff != 1:
                raise AssertionError("unexpected coefficient")
            matrices[w] = corner.basis[k]
        else:
            (k, _), = {_word_element(ref, gens_ref, u) for u in words}
            matrices[w] = ref.basis[k]
        graded = {_word_element(corner, gens, u) for u in words}
        if len(graded) != 1:
            raise AssertionError(f"reduced words of {w} disagree")
        (value,) = graded
        word_products[w] = None if value is None else corner.basis[value[0]]
    if len(set(matrices.values())) != len(perms) or corner.dim != len(perms):
        raise AssertionError("T_w do not form a basis")
    inverse = {m: w for w, m in matrices.items()}
    labels = [inverse[m] for m in corner.basis]
    name = "H0" if product == "s0" else "gr H0"
    return PermutationTable(f"{name}({r})", labels, corner.products, unit=corner.unit,
                            n=r, r=r, product=product, matrices=matrices,
                            word_products=word_products)


def hecke_relations(table: PermutationTable, square_is_zero: bool) -> list[str]:
    """Names of violated generating relations (empty when all hold)."""
    r = table.r
    bad = []
    gen = {i: table.generator(i) for i in range(1, r)}

    def mul(*idx):
        cur = {idx[-1]: Fraction(1)}
        for k in reversed(idx[:-1]):
            cur = table.multiply({k: Fraction(1)}, cur)
        return cur

    for i in range(1, r):
        sq = mul(gen[i], gen[i])
        want = {} if square_is_zero else {gen[i]: Fraction(1)}
        if sq != want:
            bad.append(f"T{i}^2")
    for i in range(1, r):
        for j in range(i + 2, r):
            if mul(gen[i], gen[j]) != mul(gen[j], gen[i]):
                bad.append(f"T{i}T{j}=T{j}T{i}")
    for i in range(1, r - 1):
        if mul(gen[i], gen[i + 1], gen[i]) != mul(gen[i + 1], gen[i], gen[i + 1]):
            bad.append(f"braid {i}")
    return bad


def hecke0_build(r: int) -> PermutationTable:
    """k_alpha S_0(r, r) k_alpha with basis T_w, w in S_r."""
    _guard(r, MAX_R_CORNER)
    table = _label_corner(r, "s0")
    bad = hecke_relations(table, square_is_zero=False)
    if bad or table.dim != math.factorial(r):
        raise AssertionError(f"0-Hecke relations fail: {bad}")
    return table


class ProductLawError(AssertionError):
    """A corner table that fails the nil-Hecke product law; keeps the evidence."""

    def __init__(self, table, violations):
        self.table = table
        self.violations = violations
        super().__init__(f"{table.name}: {len(violations)} products break the nil-Hecke law, "
                         f"first {violations[0]}")


def nilhecke_graded_build(r: int, check_law: bool = True) -> PermutationTable:
    """k_alpha DS_0(r, r) k_alpha with basis labelled by the 0-Hecke T_w.

    Asserts T_i^2 = 0 and the braid relations, then (unless ``check_law`` is
    false) the length-additive product law on all pairs of basis elements.
    For r >= 3 that law does not hold here: the graded product also kills
    length-additive products whose orbit degrees do not add, and
    :class:`ProductLawError` is raised with the table attached.
    """
    _guard(r, MAX_R_CORNER)
    table = _label_corner(r, "star")
    bad = hecke_relations(table, square_is_zero=True)
    if bad:
        raise AssertionError(f"nil-Hecke relations fail: {bad}")
    if check_law:
        violations = nil_hecke_law_violations(table)
        if violations:
            raise ProductLawError(table, violations)
    return table


def zero_hecke_law_violations(table: PermutationTable) -> list:
    """(i, w) with T_i T_w different from T_{s_i w} (length up) or T_w (otherwise)."""
    r = table.r
    out = []
    for w in table.basis:
        for i in range(1, r):
            s = Permutation.simple(r, i)
            sw = s * w
            want = sw if sw.length() == w.length() + 1 else w
            got = table.mono(table.generator(i), table.index[w])
            if got is None or table.basis[got[0]] != want or got[1] != 1:
                out.append((i, w))
    return out


def nil_hecke_law_violations(table: PermutationTable) -> list:
    """(w1, w2) with T_{w1} T_{w2} not equal to T_{w1 w2} (lengths add) or 0 (otherwise)."""
    out = []
    for w1 in table.basis:
        for w2 in table.basis:
            prod = w1 * w2
            got = table.mono(table.index[w1], table.index[w2])
            if prod.length() == w1.length() + w2.length():
                if got is None or table.basis[got[0]] != prod or got[1] != 1:
                    out.append((w1, w2))
            elif got is not None:
                out.append((w1, w2))
    return out


# -- nil-Temperley-Lieb ----------------------------------------------------

class PeakSet(tuple):
    """Peak entries (i_l, j_l), 1-based, below the diagonal.

    Requires j_l < i_l, i_1 < i_2 < ... and j_1 < j_2 < ... .
    """

    __slots__ = ()

    def __new__(cls, peaks: Iterable[Sequence[int]] = (), r: int | None = None):
        peaks = tuple((int(i), int(j)) for i, j in peaks)
        for l, (i, j) in enumerate(peaks):
            if not j < i:
                raise ValueError(f"peak {(i, j)} is not below the diagonal")
            if r is not None and not (1 <= j and i <= r):
                raise ValueError(f"peak {(i, j)} outside 1..{r}")
            if l and not (peaks[l - 1][0] < i and peaks[l - 1][1] < j):
                raise ValueError("peaks must increase strictly in both coordinates")
        return super().__new__(cls, peaks)


def peak_sets(r: int) -> list[PeakSet]:
    """All valid peak sets for size r."""
    out = []

    def extend(prefix, min_i, min_j):
        out.append(PeakSet(prefix))
        for i in range(min_i, r + 1):
            for j in range(min_j, i):
                extend(prefix + [(i, j)], i + 1, j + 1)

    extend([], 2, 1)
    return sorted(out, key=lambda p: (len(p), p))


def _x_star(r: int, i: int, flat):
    return kernel.star_product(tuple(Permutation.simple(r, i).matrix()), flat, r)


def peaks_to_element(r: int, peaks) -> OrbitMatrix:
    """Matrix of x^(1) ... x^(s) k_alpha with x^(l) = x_{i_l - 1} ... x_{j_l}."""
    peaks = PeakSet(peaks, r=r)
    cur = tuple(OrbitMatrix.diag(_alpha(r)))
    for i_l, j_l in reversed(peaks):
        for k in range(j_l, i_l):  # rightmost factor x_{j_l} acts first
            cur = _x_star(r, k, cur)
            if cur is None:
                raise AssertionError(f"peak construction vanished for {peaks}")
    return OrbitMatrix(cur)


def element_to_peaks(m: OrbitMatrix) -> PeakSet:
    """Below-diagonal entries of a permutation matrix, sorted by row."""
    permutation_of_matrix(m)
    n = m.n
    return PeakSet(sorted((i + 1, j + 1) for i in range(n) for j in range(i)
                          if m[i * n + j]))


def ntl_basis(r: int) -> list[OrbitMatrix]:
    """Orbit matrices spanning the subalgebra generated by the x_i, found by left multiplication."""
    _guard(r, MAX_R_NTL)
    start = tuple(OrbitMatrix.diag(_alpha(r)))
    seen = {start}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for i in range(1, r):
            nxt = _x_star(r, i, cur)
            if nxt is not None and nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return sorted(OrbitMatrix(m) for m in seen)


def ntl_build(r: int) -> PermutationTable:
    """The subalgebra of k_alpha DS_0(r, r) k_alpha generated by x_1, ..., x_{r-1}."""
    basis = ntl_basis(r)
    products = _products_over(basis, r, "star", None)
    perms = [permutation_of_matrix(m) for m in basis]
    unit_idx = basis.index(OrbitMatrix.diag(_alpha(r)))
    table = PermutationTable(f"NTL({r})", perms, products, unit={unit_idx: Fraction(1)},
                             n=r, r=r, product="star",
                             matrices={w: m for w, m in zip(perms, basis)})
    if table.dim != catalan(r):
        raise AssertionError(f"dimension {table.dim} differs from Catalan({r})")
    bad = ntl_relation_violations(table)
    if bad:
        raise AssertionError(f"NTL relations fail: {bad}")
    return table


def ntl_relation_violations(table: PermutationTable) -> list[str]:
    r = table.r
    gen = {i: table.generator(i) for i in range(1, r)}
    bad = hecke_relations(table, square_is_zero=True)

    def triple(a, b, c):
        first = table.mono(gen[b], gen[c])
        if first is None:
            return None
        return table.mono(gen[a], first[0])

    for i in range(1, r - 1):
        if triple(i, i + 1, i) is not None:
            bad.append(f"x{i}x{i + 1}x{i}")
        if triple(i + 1, i, i + 1) is not None:
            bad.append(f"x{i + 1}x{i}x{i + 1}")
    return bad


def render_peaks(m: OrbitMatrix) -> str:
    """ASCII grid of the matrix: P marks a peak, 1 another nonzero entry, . a zero."""
    n = m.n
    peaks = set(element_to_peaks(m))
    lines = []
    for i in range(1, n + 1):
        cells = []
        for j in range(1, n + 1):
            if (i, j) in peaks:
                cells.append("P")
            else:
                cells.append("1" if m.entry(i, j) else ".")
        lines.append(" ".join(cells))
    return "\n".join(lines)
