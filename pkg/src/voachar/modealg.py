"""Exact engine for the Lie algebra of normal-ordered quadratics
L_{a,b}(m,n) over a d-dimensional orthonormal space, with central level r.

The bracket is derived from the contraction calculus of the underlying
oscillators, a(p)b(q) = :a(p)b(q): + p (a,b) delta_{p+q} [p >= 0] c, rather
than transcribed, so antisymmetry and the Jacobi identity hold exactly and
the Virasoro vector reproduces central charge d*r.  Generators carry the
symmetry L_{a,b}(m,n) = L_{b,a}(n,m) and are stored canonically with
(m, a) <= (n, b).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple


class GenKey(NamedTuple):
    a: int
    b: int
    m: int
    n: int


def genkey(a: int, b: int, m: int, n: int) -> GenKey:
    """Canonical representative of L_{a,b}(m,n) = L_{b,a}(n,m)."""
    if (m, a) <= (n, b):
        return GenKey(a, b, m, n)
    return GenKey(b, a, n, m)


def parse_genkey(text: str) -> GenKey:
    """Parse generator syntax "L[a,b](m,n)"."""
    m = re.fullmatch(
        r"\s*L\[\s*(\d+)\s*,\s*(\d+)\s*\]\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)\s*", text
    )
    if not m:
        raise ValueError(f"cannot parse generator {text!r}; expected L[a,b](m,n)")
    a, b, mm, nn = (int(g) for g in m.groups())
    if a < 1 or b < 1:
        raise ValueError("basis indices are 1-based positive")
    return genkey(a, b, mm, nn)


def format_genkey(x: GenKey) -> str:
    return f"L[{x.a},{x.b}]({x.m},{x.n})"


@dataclass
class GenCombo:
    """Linear combination of generators plus a scalar (the central part
    after substituting the level for c)."""

    terms: dict[GenKey, Fraction] = field(default_factory=dict)
    central: Fraction = Fraction(0)

    def add_term(self, key: GenKey, coeff: Fraction) -> None:
        v = self.terms.get(key, Fraction(0)) + coeff
        if v:
            self.terms[key] = v
        else:
            self.terms.pop(key, None)

    def __add__(self, other: "GenCombo") -> "GenCombo":
        out = GenCombo(dict(self.terms), self.central + other.central)
        for k, c in other.terms.items():
            out.add_term(k, c)
        return out

    def scale(self, c) -> "GenCombo":
        c = Fraction(c)
        if c == 0:
            return GenCombo()
        return GenCombo({k: c * v for k, v in self.terms.items()}, c * self.central)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GenCombo)
            and self.terms == other.terms
            and self.central == other.central
        )

    def is_zero(self) -> bool:
        return not self.terms and self.central == 0


def _pair(a: int, b: int) -> int:
    # orthonormal basis of the d-dimensional space
    return 1 if a == b else 0


def bracket(x: GenKey, y: GenKey, r) -> GenCombo:
    """[L_{a,b}(m,n), L_{u,v}(k,l)] at central level r."""
    r = Fraction(r)
    a, b, m, n = x
    u, v, k, l = y
    out = GenCombo()
    half = Fraction(1, 2)
    if m + k == 0 and _pair(a, u):
        out.add_term(genkey(b, v, n, l), half * m)
    if m + l == 0 and _pair(a, v):
        out.add_term(genkey(b, u, n, k), half * m)
    if n + k == 0 and _pair(b, u):
        out.add_term(genkey(a, v, m, l), half * n)
    if n + l == 0 and _pair(b, v):
        out.add_term(genkey(a, u, m, k), half * n)
    # Central contribution: both modes of x must contract simultaneously.
    w = (1 if m >= 0 else 0) - (1 if n <= 0 else 0)
    if w:
        quarter = r / 4 * m * n * w
        if m + k == 0 and n + l == 0 and _pair(a, u) and _pair(b, v):
            out.central += quarter
        if m + l == 0 and n + k == 0 and _pair(a, v) and _pair(b, u):
            out.central += quarter
    return out


def bracket_combo(x: GenCombo, y: GenCombo, r) -> GenCombo:
    """Bilinear extension; central parts are central and drop out."""
    out = GenCombo()
    for kx, cx in x.terms.items():
        for ky, cy in y.terms.items():
            out = out + bracket(kx, ky, r).scale(cx * cy)
    return out


class PBWState:
    """Exact-rational combination of commuting creation monomials acting on
    the vacuum.  A monomial is a tuple of creation GenKeys (all modes < 0)
    sorted in non-increasing key order; repeats are allowed."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms: dict[tuple[GenKey, ...], Fraction] = {}
        if terms:
            for mono, c in terms.items():
                c = Fraction(c)
                if c:
                    self.terms[tuple(mono)] = c

    @classmethod
    def vacuum(cls) -> "PBWState":
        return cls({(): Fraction(1)})

    @classmethod
    def zero(cls) -> "PBWState":
        return cls()

    def add(self, mono: tuple[GenKey, ...], coeff: Fraction) -> None:
        v = self.terms.get(mono, Fraction(0)) + coeff
        if v:
            self.terms[mono] = v
        else:
            self.terms.pop(mono, None)

    def __add__(self, other: "PBWState") -> "PBWState":
        out = PBWState(dict(self.terms))
        for mono, c in other.terms.items():
            out.add(mono, c)
        return out

    def scale(self, c) -> "PBWState":
        c = Fraction(c)
        if c == 0:
            return PBWState()
        return PBWState({m: c * v for m, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, PBWState) and self.terms == other.terms

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Max total creation degree sum(-m_i - n_i) over monomials."""
        deg = 0
        for mono in self.terms:
            deg = max(deg, sum(-g.m - g.n for g in mono))
        return deg

    def __repr__(self) -> str:
        bits = []
        for mono, c in sorted(self.terms.items()):
            word = "*".join(format_genkey(g) for g in mono) or "1"
            bits.append(f"{c}*{word}")
        return "PBWState(" + " + ".join(bits) + ")" if bits else "PBWState(0)"


def _is_creation(x: GenKey) -> bool:
    return x.m < 0 and x.n < 0


def _insert_sorted(mono: tuple[GenKey, ...], x: GenKey) -> tuple[GenKey, ...]:
    # creation generators commute; keep non-increasing order
    out = list(mono)
    pos = 0
    while pos < len(out) and out[pos] >= x:
        pos += 1
    out.insert(pos, x)
    return tuple(out)


def _apply_key_mono(x: GenKey, mono: tuple[GenKey, ...], r) -> PBWState:
    if _is_creation(x):
        return PBWState({_insert_sorted(mono, x): Fraction(1)})
    if not mono:
        return PBWState()  # annihilation side kills the vacuum
    head, rest = mono[0], mono[1:]
    out = PBWState()
    # x * head * rest = head * (x * rest) + [x, head] * rest
    tail = _apply_key_mono(x, rest, r)
    for m2, c in tail.terms.items():
        out.add(_insert_sorted(m2, head), c)
    br = bracket(x, head, r)
    if br.central:
        out.add(rest, br.central)
    for y, c in br.terms.items():
        part = _apply_key_mono(y, rest, r)
        for m2, c2 in part.terms.items():
            out.add(m2, c * c2)
    return out


def apply_generator(x: GenKey, v: PBWState, r) -> PBWState:
    """Normal-form action of a generator on a vacuum-module state."""
    out = PBWState()
    for mono, c in v.terms.items():
        part = _apply_key_mono(x, mono, Fraction(r))
        for m2, c2 in part.terms.items():
            out.add(m2, c * c2)
    return out


def apply_combo(gc: GenCombo, v: PBWState, r) -> PBWState:
    out = v.scale(gc.central)
    for key, c in gc.terms.items():
        out = out + apply_generator(key, v, r).scale(c)
    return out


def mode_operator(a: int, b: int, l: int, v: PBWState, r) -> PBWState:
    """Apply the mode sum L_{a,b}(l) = sum_k L_{a,b}(-k+l-1, k).

    On a state of bounded degree D only k in [l-1-D, D] can act: a
    non-negative generator mode above D can never contract and dies on the
    vacuum, while creation terms force l <= k <= -1.
    """
    out = PBWState()
    d = v.degree()
    for k in range(l - 1 - d, d + 1):
        out = out + apply_generator(genkey(a, b, -k + l - 1, k), v, r)
    return out


def virasoro_state(d: int) -> PBWState:
    """omega = sum_a L_{a,a}(-1,-1) . 1."""
    out = PBWState()
    for a in range(1, d + 1):
        out.add((genkey(a, a, -1, -1),), Fraction(1))
    return out


# -- Jordan algebra of type B and the Griess product ------------------------

SymMatrix = tuple  # tuple of row tuples of Fraction, symmetric


def sym_matrix(rows) -> SymMatrix:
    mat = tuple(tuple(Fraction(x) for x in row) for row in rows)
    d = len(mat)
    if any(len(row) != d for row in mat):
        raise ValueError("matrix must be square")
    for i in range(d):
        for j in range(i):
            if mat[i][j] != mat[j][i]:
                raise ValueError("matrix must be symmetric")
    return mat


def jordan_product(x: SymMatrix, y: SymMatrix) -> SymMatrix:
    """x o y = (xy + yx) / 2."""
    d = len(x)
    if len(y) != d:
        raise ValueError("size mismatch")
    out = []
    for i in range(d):
        row = []
        for j in range(d):
            s = Fraction(0)
            for k in range(d):
                s += x[i][k] * y[k][j] + y[i][k] * x[k][j]
            row.append(s / 2)
        out.append(tuple(row))
    return tuple(out)


def _matrix_to_state(x: SymMatrix) -> PBWState:
    # coefficient of L_{a,b}(-1,-1).1 under sum x_ab e_a (x) e_b =
    # sum_{a<b} x_ab L_ab + sum_a (x_aa / 2) L_aa
    d = len(x)
    out = PBWState()
    for a in range(d):
        out.add((genkey(a + 1, a + 1, -1, -1),), x[a][a] / 2)
        for b in range(a + 1, d):
            out.add((genkey(a + 1, b + 1, -1, -1),), x[a][b])
    return out


def _state_to_matrix(v: PBWState, d: int) -> SymMatrix:
    rows = [[Fraction(0)] * d for _ in range(d)]
    for mono, c in v.terms.items():
        if len(mono) != 1 or mono[0].m != -1 or mono[0].n != -1:
            raise AssertionError("state is not in the degree-2 generator basis")
        g = mono[0]
        if g.a == g.b:
            rows[g.a - 1][g.a - 1] = 2 * c
        else:
            rows[g.a - 1][g.b - 1] = c
            rows[g.b - 1][g.a - 1] = c
    return tuple(tuple(row) for row in rows)


def griess_product(x: SymMatrix, y: SymMatrix, r) -> SymMatrix:
    """Degree-2 product u(1)v computed in the vacuum module, read back as a
    symmetric matrix; equals jordan_product for every level r."""
    d = len(x)
    if len(y) != d:
        raise ValueError("size mismatch")
    xs = _matrix_to_state(x)
    ys = _matrix_to_state(y)
    out = PBWState()
    for mono, c in xs.terms.items():
        g = mono[0]
        out = out + mode_operator(g.a, g.b, 1, ys, r).scale(c)
    return _state_to_matrix(out, d)


# -- irreducibility scan for the induced module ------------------------------


def simplicity_scan(r, d: int, N: int) -> list[tuple[int, int]]:
    """Pairs 1 <= k <= l <= d*N whose pairing value -r + k + l lands in the
    positive integers; an empty list certifies the irreducibility hypothesis
    at this truncation.
    """
    r = Fraction(r)
    if N < 1:
        raise ValueError("N must be >= 1")
    out = []
    for k in range(1, d * N + 1):
        for l in range(k, d * N + 1):
            v = -r + k + l
            if v.denominator == 1 and v > 0:
                out.append((k, l))
    return out
