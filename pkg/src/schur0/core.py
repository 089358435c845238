"""Compositions, orbit matrices, the fundamental multiplication rules, and the
three products on the orbit basis.

Generator indices ``i`` are 1-based throughout the public API, as are matrix
positions in docstrings.  The zero element is represented by ``None``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from itertools import product as iproduct
from typing import Iterable, NamedTuple, Sequence

from . import kernel

MAX_R = 64
ONE = Fraction(1)

Composition = tuple  # tuple[int, ...], n parts summing to r


class OrbitMatrix(tuple):
    """An n x n nonnegative integer matrix, stored flat in row-major order."""

    __slots__ = ()

    def __new__(cls, entries: Iterable[int]):
        entries = tuple(int(x) for x in entries)
        n = math.isqrt(len(entries))
        if n * n != len(entries) or n == 0:
            raise ValueError(f"{len(entries)} entries do not form a square matrix")
        if any(x < 0 for x in entries):
            raise ValueError("orbit matrices have nonnegative entries")
        return super().__new__(cls, entries)

    @classmethod
    def _trusted(cls, flat) -> OrbitMatrix:
        # kernel output: already validated integers
        return tuple.__new__(cls, flat)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> OrbitMatrix:
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise ValueError("matrix must be square")
        return cls(x for row in rows for x in row)

    @classmethod
    def diag(cls, lam: Sequence[int]) -> OrbitMatrix:
        n = len(lam)
        return cls(lam[i] if i == j else 0 for i in range(n) for j in range(n))

    @classmethod
    def parse(cls, text: str) -> OrbitMatrix:
        """Parse the literal ``"a,b;c,d"`` (rows separated by semicolons)."""
        rows = [[int(x) for x in row.split(",")] for row in text.strip().split(";")]
        return cls.from_rows(rows)

    @property
    def n(self) -> int:
        return math.isqrt(len(self))

    @property
    def r(self) -> int:
        return sum(self)

    def __getitem__(self, key):
        if isinstance(key, tuple):
            i, j = key
            return tuple.__getitem__(self, i * self.n + j)
        return tuple.__getitem__(self, key)

    def entry(self, i: int, j: int) -> int:
        """Entry at 1-based position (i, j)."""
        n = self.n
        return tuple.__getitem__(self, (i - 1) * n + (j - 1))

    def rows(self) -> list[list[int]]:
        n = self.n
        return [list(self[i * n:(i + 1) * n]) for i in range(n)]

    def diagonal(self) -> tuple[int, ...]:
        n = self.n
        return tuple(tuple.__getitem__(self, i * n + i) for i in range(n))

    def literal(self) -> str:
        return ";".join(",".join(str(x) for x in row) for row in self.rows())

    def __add__(self, other):
        if isinstance(other, OrbitMatrix):
            if len(other) != len(self):
                raise ValueError("shape mismatch")
            return OrbitMatrix(a + b for a, b in zip(self, other))
        return NotImplemented

    def __repr__(self):
        return f"OrbitMatrix({self.rows()})"

    def __str__(self):
        return self.literal()


class ScaledOrbit(NamedTuple):
    coeff: Fraction
    matrix: OrbitMatrix


class DegreeVector(NamedTuple):
    e_deg: tuple[int, ...]
    f_deg: tuple[int, ...]


def identity(n: int) -> OrbitMatrix:
    return OrbitMatrix.diag((1,) * n)


def elementary(n: int, i: int, j: int) -> OrbitMatrix:
    """E_{ij} (1-based)."""
    return OrbitMatrix(1 if (a, b) == (i - 1, j - 1) else 0
                       for a in range(n) for b in range(n))


# -- compositions -----------------------------------------------------------

@lru_cache(maxsize=None)
def compositions(n: int, r: int) -> tuple[Composition, ...]:
    """All of Lambda(n, r), in lexicographic order."""
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return ((r,),)
    out = []
    for first in range(r, -1, -1):
        for rest in compositions(n - 1, r - first):
            out.append((first,) + rest)
    return tuple(sorted(out))


def alpha(n: int, i: int) -> tuple[int, ...]:
    """alpha_i: +1 at position i, -1 at position i+1."""
    return tuple(1 if k == i - 1 else -1 if k == i else 0 for k in range(n))


def add_alpha(lam: Composition, i: int, times: int = 1) -> Composition | None:
    """lam + times*alpha_i, or None when it leaves Lambda(n, r)."""
    out = list(lam)
    out[i - 1] += times
    out[i] -= times
    if min(out) < 0:
        return None
    return tuple(out)


def is_boundary(lam: Composition) -> bool:
    return 0 in lam


def binom(a: int, b: int) -> int:
    """Binomial coefficient, 0 outside the usual range, C(a, 0) = 1."""
    if b < 0:
        return 0
    if b == 0:
        return 1
    if a < b:
        return 0
    return math.comb(a, b)


# -- orbit matrices ---------------------------------------------------------

def _check_n_r(n: int, r: int) -> None:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if r < 0:
        raise ValueError(f"r must be nonnegative, got {r}")
    if r > MAX_R:
        raise ValueError(f"r is limited to {MAX_R}")


def _weak_compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _weak_compositions(total - first, parts - 1):
            yield (first,) + rest


@lru_cache(maxsize=32)
def _basis_cached(n: int, r: int) -> tuple[OrbitMatrix, ...]:
    return tuple(sorted(OrbitMatrix(c) for c in _weak_compositions(r, n * n)))


def enumerate_basis(n: int, r: int) -> list[OrbitMatrix]:
    """Xi(n, r) in lexicographic order of the row-major flattening."""
    _check_n_r(n, r)
    return list(_basis_cached(n, r))


def basis_size(n: int, r: int) -> int:
    return binom(n * n + r - 1, r)


def ro(a: OrbitMatrix) -> Composition:
    return kernel.row_sums(tuple(a), a.n)


def co(a: OrbitMatrix) -> Composition:
    return kernel.col_sums(tuple(a), a.n)


def _check_index(i: int, n: int) -> None:
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator index {i} out of range 1..{n - 1}")


def _scaled(flat) -> ScaledOrbit | None:
    if flat is None:
        return None
    return ScaledOrbit(ONE, OrbitMatrix._trusted(flat))


def left_apply_e(i: int, a: OrbitMatrix) -> ScaledOrbit | None:
    """e_i * e_A via the rule X = A + E_{i,p} - E_{i+1,p}, p the last nonzero column of row i+1."""
    _check_index(i, a.n)
    return _scaled(kernel.left_e(tuple(a), a.n, i - 1))


def left_apply_f(i: int, a: OrbitMatrix) -> ScaledOrbit | None:
    """f_i * e_A via Y = A - E_{i,p} + E_{i+1,p}, p the first nonzero column of row i."""
    _check_index(i, a.n)
    return _scaled(kernel.left_f(tuple(a), a.n, i - 1))


def right_apply_f(i: int, a: OrbitMatrix) -> ScaledOrbit | None:
    """e_A * f_i via X = A + E_{p,i} - E_{p,i+1}, p the last nonzero row of column i+1."""
    _check_index(i, a.n)
    return _scaled(kernel.right_f(tuple(a), a.n, i - 1))


def right_apply_e(i: int, a: OrbitMatrix) -> ScaledOrbit | None:
    """e_A * e_i via Y = A - E_{p,i} + E_{p,i+1}, p the first nonzero row of column i."""
    _check_index(i, a.n)
    return _scaled(kernel.right_e(tuple(a), a.n, i - 1))


def degree_vectors(a: OrbitMatrix) -> DegreeVector:
    flat = tuple(a)
    return DegreeVector(kernel.e_degree(flat, a.n), kernel.f_degree(flat, a.n))


# -- generator words --------------------------------------------------------

class Letter(NamedTuple):
    kind: str  # "e", "f" or "k"
    index: object  # generator index, or a composition for "k"

    def __str__(self):
        if self.kind == "k":
            return "k(" + ",".join(map(str, self.index)) + ")"
        return f"{self.kind}{self.index}"


def E(i: int) -> Letter:
    return Letter("e", i)


def F(i: int) -> Letter:
    return Letter("f", i)


def K(lam: Sequence[int]) -> Letter:
    return Letter("k", tuple(lam))


class GeneratorWord(tuple):
    """A word in e_i, f_i, k_lam, read as a product from left to right."""

    __slots__ = ()

    def __new__(cls, letters: Iterable[Letter] = ()):
        return super().__new__(cls, tuple(letters))

    @classmethod
    def from_powers(cls, powers: Iterable[tuple[Letter, int]]) -> GeneratorWord:
        return cls(letter for letter, times in powers for _ in range(times))

    def generators(self) -> GeneratorWord:
        """The word with idempotent letters removed."""
        return GeneratorWord(l for l in self if l.kind != "k")

    def length(self) -> int:
        return sum(1 for l in self if l.kind != "k")

    def letter_counts(self, n: int) -> DegreeVector:
        e = [0] * (n - 1)
        f = [0] * (n - 1)
        for l in self:
            if l.kind == "e":
                e[l.index - 1] += 1
            elif l.kind == "f":
                f[l.index - 1] += 1
        return DegreeVector(tuple(e), tuple(f))

    def __add__(self, other):
        return GeneratorWord(tuple(self) + tuple(other))

    def __str__(self):
        parts = []
        letters = list(self)
        t = 0
        while t < len(letters):
            s = t
            while s < len(letters) and letters[s] == letters[t]:
                s += 1
            power = s - t
            parts.append(str(letters[t]) + (f"^{power}" if power > 1 else ""))
            t = s
        return " ".join(parts) if parts else "1"

    def __repr__(self):
        return f"GeneratorWord({str(self)!r})"


def _monomial_powers(a: OrbitMatrix) -> tuple[list, list]:
    n = a.n
    e_part = []
    for s in range(n - 1, 0, -1):
        for l in range(1, s + 1):
            e_part.append((E(l), sum(a.entry(p, s + 1) for p in range(1, l + 1))))
    f_part = []
    for s in range(1, n):
        for l in range(n - 1, s - 1, -1):
            f_part.append((F(l), sum(a.entry(p, s) for p in range(l + 1, n + 1))))
    return e_part, f_part


def decompose_monomial(a: OrbitMatrix) -> GeneratorWord:
    """Reduced word for e_A built column by column with maximal powers of each generator."""
    e_part, f_part = _monomial_powers(a)
    return GeneratorWord.from_powers(e_part + f_part) + GeneratorWord([K(co(a))])


def e_block(i: int, j: int) -> GeneratorWord:
    """e(i, j) = e_i e_{i+1} ... e_j."""
    return GeneratorWord(E(l) for l in range(i, j + 1))


def f_block(j: int, i: int) -> GeneratorWord:
    """f(j, i) = f_j ... f_{i+1} f_i."""
    return GeneratorWord(F(l) for l in range(j, i - 1, -1))


def pbw_blocks(a: OrbitMatrix) -> list[tuple[str, int, int, int]]:
    """Block structure of the PBW-type word: (kind, first, last, exponent).

    Upper part: columns right to left, each column's entries top-down
    contributing e(i, j-1)^{a_ij} from the bottom entry upwards.  Lower part:
    columns left to right, entries below the diagonal contributing
    f(i-1, j)^{a_ij} with the lowest entry applied first.
    """
    n = a.n
    blocks = []
    for j in range(n, 1, -1):
        for i in range(j - 1, 0, -1):
            if a.entry(i, j):
                blocks.append(("e", i, j - 1, a.entry(i, j)))
    for j in range(1, n):
        for i in range(j + 1, n + 1):
            if a.entry(i, j):
                blocks.append(("f", i - 1, j, a.entry(i, j)))
    return blocks


def decompose_pbw(a: OrbitMatrix) -> GeneratorWord:
    letters: list[Letter] = []
    for kind, x, y, times in pbw_blocks(a):
        block = e_block(x, y) if kind == "e" else f_block(x, y)
        letters.extend(list(block) * times)
    return GeneratorWord(letters) + GeneratorWord([K(co(a))])


def format_pbw(a: OrbitMatrix) -> str:
    parts = []
    for kind, x, y, times in pbw_blocks(a):
        parts.append(f"{kind}({x},{y})" + (f"^{times}" if times > 1 else ""))
    parts.append(str(K(co(a))))
    return " ".join(parts)


def reduced_word_for(a: OrbitMatrix) -> GeneratorWord:
    word = decompose_pbw(a)
    deg = degree_vectors(a)
    if word.length() != sum(deg.e_deg) + sum(deg.f_deg):
        raise AssertionError(f"PBW word for {a!r} is not reduced")
    return word


def evaluate_word(word: Sequence[Letter], start: OrbitMatrix) -> ScaledOrbit | None:
    """Act on e_start by the word, rightmost letter first."""
    n = start.n
    flat = tuple(start)
    for letter in reversed(tuple(word)):
        if letter.kind == "k":
            lam = tuple(letter.index)
            if len(lam) != n:
                raise ValueError(f"idempotent {lam} has the wrong length")
            if lam != kernel.row_sums(flat, n):
                return None
            continue
        _check_index(letter.index, n)
        step = kernel.left_e if letter.kind == "e" else kernel.left_f
        flat = step(flat, n, letter.index - 1)
        if flat is None:
            return None
    return ScaledOrbit(ONE, OrbitMatrix._trusted(flat))


# -- products ---------------------------------------------------------------

def _check_pair(a: OrbitMatrix, b: OrbitMatrix) -> None:
    if len(a) != len(b) or a.r != b.r:
        raise ValueError("factors belong to different Xi(n, r)")


def s0_multiply(a: OrbitMatrix, b: OrbitMatrix) -> ScaledOrbit | None:
    _check_pair(a, b)
    return _scaled(kernel.s0_product(tuple(a), tuple(b), a.n))


def star_multiply(a: OrbitMatrix, b: OrbitMatrix) -> ScaledOrbit | None:
    _check_pair(a, b)
    return _scaled(kernel.star_product(tuple(a), tuple(b), a.n))


def parse_params(values, n: int) -> tuple[Fraction, ...]:
    """Normalise a parameter tuple to n-1 rationals (a single value is broadcast)."""
    if isinstance(values, (int, Fraction, str)):
        values = [values]
    vals = tuple(Fraction(v) for v in values)
    if len(vals) == 1 and n - 1 != 1:
        vals = vals * (n - 1)
    if len(vals) != n - 1:
        raise ValueError(f"expected {n - 1} parameters, got {len(vals)}")
    return vals


def filtration_defect(a: OrbitMatrix, b: OrbitMatrix, c: OrbitMatrix) -> tuple[int, ...]:
    """E(A) + E(B) - E(C) componentwise."""
    n = a.n
    ea = kernel.e_degree(tuple(a), n)
    eb = kernel.e_degree(tuple(b), n)
    ec = kernel.e_degree(tuple(c), n)
    return tuple(x + y - z for x, y, z in zip(ea, eb, ec))


def t_coefficient(t: Sequence[Fraction], defect: Sequence[int]) -> Fraction:
    coeff = Fraction(1)
    for ti, d in zip(t, defect):
        if d:
            coeff *= Fraction(ti) ** d
    return coeff


def t_multiply(t, a: OrbitMatrix, b: OrbitMatrix) -> ScaledOrbit | None:
    """Product in D_t(n, r) for a per-index constant parameter tuple.

    The s0 product is scaled by prod_i t_i^{d_i}, d the e-degree defect of the
    product (0^0 = 1).
    """
    _check_pair(a, b)
    t = parse_params(t, a.n)
    flat = kernel.s0_product(tuple(a), tuple(b), a.n)
    if flat is None:
        return None
    c = OrbitMatrix._trusted(flat)
    coeff = t_coefficient(t, filtration_defect(a, b, c))
    if not coeff:
        return None
    return ScaledOrbit(coeff, c)


def all_words(n: int, length: int) -> Iterable[GeneratorWord]:
    letters = [E(i) for i in range(1, n)] + [F(i) for i in range(1, n)]
    for combo in iproduct(letters, repeat=length):
        yield GeneratorWord(combo)
