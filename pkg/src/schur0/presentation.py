"""The quiver Sigma(n, r), the relation families P, N, C(t), and their
evaluation inside structure tables.

Relations are checked semantically: each word is multiplied out in a built
table and the resulting element must vanish.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

from .algebra import StructureTable, build_table, format_fraction, verify_iso_by_bijection
from .core import (
    E,
    F,
    K,
    GeneratorWord,
    Letter,
    OrbitMatrix,
    add_alpha,
    compositions,
    degree_vectors,
    parse_params,
)
from .linalg import SparseVector, add_scaled, unit


class Arrow(NamedTuple):
    kind: str  # "e" or "f"
    i: int
    source: tuple
    target: tuple


@dataclass
class Quiver:
    n: int
    r: int
    vertices: list
    arrows: list

    def arrows_from(self, lam):
        return [a for a in self.arrows if a.source == lam]


def build_quiver(n: int, r: int) -> Quiver:
    vertices = list(compositions(n, r))
    arrows = []
    for lam in vertices:
        for i in range(1, n):
            up = add_alpha(lam, i)
            if up is not None:
                arrows.append(Arrow("e", i, lam, up))
                arrows.append(Arrow("f", i, up, lam))
    arrows.sort()
    return Quiver(n, r, vertices, arrows)


@dataclass
class RelationElement:
    family: str  # "P", "N" or "C"
    i: int
    j: int
    lam: tuple
    target: tuple
    terms: list = field(default_factory=list)  # [(Fraction, GeneratorWord)]

    def __str__(self):
        parts = []
        for c, w in self.terms:
            parts.append(f"{'+' if c >= 0 else '-'} {abs(c)}*{w}")
        return f"{self.family}[{self.i},{self.j},{self.lam}]: " + " ".join(parts)


def _shift(lam, moves):
    """lam + sum of times*alpha_i over moves, or None when the result has a negative part."""
    out = list(lam)
    for i, times in moves:
        out[i - 1] += times
        out[i] -= times
    return tuple(out) if min(out) >= 0 else None


def path_target(word, lam):
    """Vertex reached by the path ``word * k_lam``, or None if some arrow is missing."""
    cur = tuple(lam)
    for letter in reversed(tuple(word)):
        if letter.kind == "k":
            if tuple(letter.index) != cur:
                return None
        elif letter.kind == "e":
            cur = add_alpha(cur, letter.index, 1)
        else:
            cur = add_alpha(cur, letter.index, -1)
        if cur is None:
            return None
    return cur


def _framed(mu, letters, lam) -> GeneratorWord:
    if not letters:
        return GeneratorWord([K(lam)])
    return GeneratorWord([K(mu), *letters, K(lam)])


def _serre(kind, i, j, lam):
    gen = E if kind == "e" else F
    sign = 1 if kind == "e" else -1
    a, b = gen(i), gen(j)
    if i == j - 1:
        mu = _shift(lam, [(i, 2 * sign), (j, sign)])
        if kind == "e":
            raw = [(1, [a, a, b]), (-1, [a, b, a])]
        else:
            raw = [(-1, [a, b, a]), (1, [b, a, a])]
    elif i == j + 1:
        mu = _shift(lam, [(i, 2 * sign), (j, sign)])
        if kind == "e":
            raw = [(-1, [a, b, a]), (1, [b, a, a])]
        else:
            raw = [(1, [a, a, b]), (-1, [a, b, a])]
    else:
        mu = _shift(lam, [(i, sign), (j, sign)])
        raw = [(1, [a, b]), (-1, [b, a])]
    return mu, raw


def _commutator(i, j, lam, t):
    mu = _shift(lam, [(i, 1), (j, -1)])
    ei, fj = E(i), F(j)
    if i != j:
        return mu, [(1, [ei, fj]), (-1, [fj, ei])]
    top, bottom = lam[i - 1], lam[i]
    if top and bottom:
        return mu, [(1, [ei, fj]), (-1, [fj, ei])]
    if bottom == 0 and top:
        return mu, [(1, [ei, fj]), (-t, [])]
    if top == 0 and bottom:
        return mu, [(t, []), (-1, [fj, ei])]
    return mu, []  # both zero: empty relation


def relation_set(n: int, r: int, t=1) -> list[RelationElement]:
    """All Serre relations P, N and t-deformed commutator relations C at every vertex."""
    t = parse_params(t, n) if n > 1 else ()
    out = []
    for lam in compositions(n, r):
        for i in range(1, n):
            for j in range(1, n):
                families = [("C", _commutator(i, j, lam, t[i - 1]))]
                if i != j:
                    families = [("P", _serre("e", i, j, lam)),
                                ("N", _serre("f", i, j, lam))] + families
                for family, (mu, raw) in families:
                    if mu is None or not raw:
                        continue
                    terms = []
                    for coeff, letters in raw:
                        if not coeff:
                            continue
                        word = _framed(mu, letters, lam)
                        if path_target(word, lam) is not None:
                            terms.append((Fraction(coeff), word))
                    if terms:
                        out.append(RelationElement(family, i, j, lam, mu, terms))
    return out


def generator_elements(table: StructureTable) -> dict:
    """e_i, f_i (summed over all vertices) and k_lam as elements of an orbit-basis table."""
    n, r = table.n, table.r
    if n is None or r is None:
        raise ValueError("table has no (n, r) shape")
    gens: dict[Letter, SparseVector] = {}
    for lam in compositions(n, r):
        gens[K(lam)] = unit(table.index[OrbitMatrix.diag(lam)])
    for i in range(1, n):
        for kind, (row, col) in (("e", (i - 1, i)), ("f", (i, i - 1))):
            vec = {}
            for idx, label in enumerate(table.basis):
                off = [(p // n, p % n) for p, x in enumerate(label) if x and p // n != p % n]
                if off == [(row, col)] and label[row * n + col] == 1:
                    vec[idx] = Fraction(1)
            gens[Letter(kind, i)] = vec
    return gens


def evaluate_word_in(table: StructureTable, word, gens=None) -> SparseVector:
    gens = gens or generator_elements(table)
    vec = table.identity()
    for letter in reversed(tuple(word)):
        vec = table.multiply(gens[letter], vec)
        if not vec:
            break
    return vec


def evaluate_relation(rel: RelationElement, table: StructureTable, gens=None) -> SparseVector:
    if table.n is None or len(rel.lam) != table.n or sum(rel.lam) != table.r:
        raise ValueError("relation and table have different shapes")
    gens = gens or generator_elements(table)
    total: SparseVector = {}
    for coeff, word in rel.terms:
        add_scaled(total, evaluate_word_in(table, word, gens), coeff)
    return total


def verify_relations(table: StructureTable, t=1) -> dict:
    """Evaluate every relation of the matching family; report the non-vanishing ones."""
    rels = relation_set(table.n, table.r, t)
    gens = generator_elements(table)
    failures = []
    for rel in rels:
        res = evaluate_relation(rel, table, gens)
        if res:
            failures.append({
                "family": rel.family,
                "i": rel.i,
                "j": rel.j,
                "lambda": list(rel.lam),
                "residual": {table.basis[k].literal(): format_fraction(c)
                             for k, c in sorted(res.items())},
            })
    return {"relations_checked": len(rels), "failures": failures}


def rescaling_scale(a) -> callable:
    """A -> prod_i a_i^{E(A)_i}."""
    a = tuple(Fraction(x) for x in a)

    def scale(m: OrbitMatrix) -> Fraction:
        out = Fraction(1)
        for ai, d in zip(a, degree_vectors(m).e_deg):
            out *= ai ** d
        return out
    return scale


def rescaling_iso_check(n: int, r: int, a) -> bool:
    """The constant-parameter table D_a(n, r) maps onto S_0(n, r) by rescaling each e_A."""
    a = parse_params(a, n)
    if any(x == 0 for x in a):
        raise ValueError("rescaling needs nonzero parameters")
    dt = build_table(n, r, "t", a)
    s0 = build_table(n, r, "s0")
    return verify_iso_by_bijection(dt, s0, lambda m: m, rescaling_scale(a))
