"""Acceptance suite: every criterion runs at exact (tolerance-zero)
arithmetic and prints one pass/fail line with its elapsed time.

Run with ``pytest tests/test_acceptance.py -v -s``.
"""

import random
import time
from fractions import Fraction

from voachar.branching import (
    branching_product,
    branching_weylsum,
    denominator_identity_check,
)
from voachar.characters import invariant_series_oracle, theorem2_character
from voachar.fock import (
    generation_check,
    graded_basis,
    invariant_subspace,
    mode_apply,
    vec_scale,
    vec_sum,
    virasoro_check,
)
from voachar.modealg import (
    GenCombo,
    bracket,
    bracket_combo,
    genkey,
    griess_product,
    jordan_product,
    simplicity_scan,
    sym_matrix,
)
from voachar.rootsys import dominant_weights_up_to


def _report(num, name, t0):
    print(f"ACCEPTANCE {num} ({name}): PASS [{time.time() - t0:.2f}s]")


def test_criterion_1_branching_equality():
    t0 = time.time()
    checked = 0
    for n in (1, 2, 3):
        for lam in dominant_weights_up_to(n, 8):
            assert branching_product(lam, n, 16) == branching_weylsum(lam, n, 16), (
                f"branching mismatch at n={n}, lam={lam.coords2}"
            )
            checked += 1
    assert checked >= 3
    _report(1, f"branching product = Weyl sum, {checked} weights", t0)


def test_criterion_2_denominator_identity():
    t0 = time.time()
    for n in (1, 2, 3):
        lhs, rhs = denominator_identity_check(n)
        assert lhs == rhs
    _report(2, "so(2n+1) denominator identity, n=1..3", t0)


def test_criterion_3_theorem_three_way():
    t0 = time.time()
    for n, d, trunc in [(1, 1, 8), (1, 2, 8), (1, 3, 8), (2, 2, 6)]:
        thm = theorem2_character(n, d, trunc)
        oracle = invariant_series_oracle(n, d, trunc)
        assert thm == oracle, f"theorem2 != oracle at n={n}, d={d}"
    for d in (1, 2):
        thm = theorem2_character(1, d, 5)
        dims = [invariant_subspace(1, d, lvl)[0] for lvl in range(6)]
        assert thm.coeffs == dims, f"Fock dims diverge at d={d}: {dims}"
    _report(3, "theorem sum = decomposition oracle = Fock dimensions", t0)


def test_criterion_4_structure_constants():
    t0 = time.time()
    for n in (1, 2):
        for d in (2, 3):
            series = theorem2_character(n, d, 2)
            assert series.coeffs[0] == 1
            assert series.coeffs[1] == 0
            assert series.coeffs[2] == d * (d + 1) // 2
    _report(4, "q^0 = 1, q^1 = 0, q^2 = d(d+1)/2", t0)


def test_criterion_5_central_charge():
    t0 = time.time()
    for n, d in [(1, 1), (1, 2), (2, 1)]:
        c_value, grading_ok = virasoro_check(n, d, maxlevel=4)
        assert c_value == -2 * d * n
        assert grading_ok
    _report(5, "central charge -2dn with level grading to 4", t0)


def test_criterion_6_bracket_soundness():
    t0 = time.time()
    rng = random.Random(2024)

    def rand_key():
        return genkey(
            rng.randint(1, 3),
            rng.randint(1, 3),
            rng.randint(-4, 4),
            rng.randint(-4, 4),
        )

    def rand_r():
        return Fraction(rng.randint(-12, 12), rng.randint(1, 9))

    for _ in range(200):
        x, y, r = rand_key(), rand_key(), rand_r()
        xy, yx = bracket(x, y, r), bracket(y, x, r)
        assert xy.terms == {k: -c for k, c in yx.terms.items()}
        assert xy.central == -yx.central

    for _ in range(100):
        x, y, z, r = rand_key(), rand_key(), rand_key(), rand_r()
        total = (
            bracket_combo(GenCombo({x: Fraction(1)}), bracket(y, z, r), r)
            + bracket_combo(GenCombo({y: Fraction(1)}), bracket(z, x, r), r)
            + bracket_combo(GenCombo({z: Fraction(1)}), bracket(x, y, r), r)
        )
        assert total.is_zero()

    # mode-level agreement with the Fock operators, n=1, d=2, on the full
    # level <= 3 bases for a seeded sample of generator pairs
    n, d = 1, 2
    r = Fraction(-2 * n)
    keys = sorted(
        {
            genkey(a, b, m, mm)
            for a in (1, 2)
            for b in (1, 2)
            for m in range(-2, 3)
            for mm in range(-2, 3)
        }
    )
    basis = [mono for lvl in range(4) for mono in graded_basis(n, d, lvl)]
    assert len(basis) == 39
    for _ in range(200):
        x, y = rng.sample(keys, 2)
        gc = bracket(x, y, r)
        for mono in basis:
            vec = {mono: Fraction(1)}
            lhs = vec_sum(
                mode_apply(*x, mode_apply(*y, vec, n), n),
                vec_scale(mode_apply(*y, mode_apply(*x, vec, n), n), -1),
            )
            rhs = vec_scale(vec, gc.central)
            for key, c in gc.terms.items():
                rhs = vec_sum(rhs, vec_scale(mode_apply(*key, vec, n), c))
            assert lhs == rhs, f"commutator mismatch for {x}, {y} on {mono}"
    _report(6, "antisymmetry, Jacobi, and Fock commutator agreement", t0)


def test_criterion_7_griess_jordan():
    t0 = time.time()
    rng = random.Random(7**5)

    def rand_sym(d):
        rows = [[Fraction(0)] * d for _ in range(d)]
        for i in range(d):
            for j in range(i, d):
                rows[i][j] = rows[j][i] = Fraction(
                    rng.randint(-9, 9), rng.randint(1, 5)
                )
        return sym_matrix(rows)

    pairs = 0
    for d in (2, 3):
        for r in (Fraction(3), Fraction(-2), Fraction(-4), Fraction(5, 2)):
            for _ in range(7):
                x, y = rand_sym(d), rand_sym(d)
                assert griess_product(x, y, r) == jordan_product(x, y)
                pairs += 1
    assert pairs >= 50
    _report(7, f"Griess product = Jordan product on {pairs} pairs", t0)


def test_criterion_8_simplicity_criterion():
    t0 = time.time()
    for r in (Fraction(1, 2), Fraction(-1, 2), Fraction(3, 2), Fraction(7, 3)):
        for d in (1, 2):
            for N in range(1, 6):
                assert simplicity_scan(r, d, N) == []
    for r in range(-6, 7):
        if r == 0:
            continue
        assert simplicity_scan(Fraction(r), 1, abs(r) + 1) != []
    _report(8, "scan empty off Z, non-empty on Z", t0)


def test_criterion_9_generation_by_degree_2():
    t0 = time.time()
    results = generation_check(1, 2, 4)
    assert results == {lvl: True for lvl in range(5)}
    _report(9, "degree-2 generation to level 4 (n=1, d=2)", t0)
