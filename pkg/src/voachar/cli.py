"""Command-line front end; every subcommand emits text, JSON, or CSV with
numbers rendered as decimal strings or "p/q" so nothing is lost downstream.

Exit status: 0 for success and verified equalities, 1 for any mismatch or
a non-simple scan result (status "reducible-consistent"), 2 for usage, cap,
or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import branching, characters, fock, modealg, qseries, rootsys, weylchar


def fmt_rat(x) -> str:
    f = Fraction(x)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _series_payload(series: qseries.TruncSeries) -> dict:
    return {"series": series.to_record()}


def _poly_terms(poly: weylchar.LaurentPoly) -> list[dict]:
    out = []
    for e, c in sorted(poly.terms.items()):
        out.append({"exponent": rootsys.format_weight(rootsys.Weight(e)), "coeff": str(c)})
    return out


class _Report:
    """Accumulates lines (text), a payload (json), and rows (csv)."""

    def __init__(self):
        self.lines: list[str] = []
        self.payload: dict = {}
        self.csv_header: list[str] = []
        self.csv_rows: list[list[str]] = []

    def text(self, line: str) -> None:
        self.lines.append(line)

    def emit(self, fmt: str, stream) -> None:
        if fmt == "json":
            json.dump(self.payload, stream, indent=2, sort_keys=True)
            stream.write("\n")
        elif fmt == "csv":
            stream.write(",".join(self.csv_header) + "\n")
            for row in self.csv_rows:
                stream.write(",".join(row) + "\n")
        else:
            for line in self.lines:
                stream.write(line + "\n")


def _series_report(rep: _Report, label: str, series: qseries.TruncSeries) -> None:
    rep.text(f"{label}: " + ",".join(str(c) for c in series.coeffs))
    rep.csv_header = ["power", "coefficient"]
    rep.csv_rows = [[str(k), str(c)] for k, c in enumerate(series.coeffs)]


def _cmd_branching(args) -> tuple[int, _Report]:
    lam = rootsys.parse_weight(args.lam)
    prod = branching.branching_product(lam, args.n, args.trunc)
    wsum = branching.branching_weylsum(lam, args.n, args.trunc, args.weyl_cap)
    equal = prod == wsum
    rep = _Report()
    _series_report(rep, "product", prod)
    rep.text("weylsum: " + ",".join(str(c) for c in wsum.coeffs))
    rep.text(f"equal: {str(equal).lower()}")
    rep.payload = {
        "product": prod.to_record(),
        "weylsum": wsum.to_record(),
        "equal": equal,
    }
    if not equal:
        diff = [k for k in range(prod.trunc + 1) if prod.coeffs[k] != wsum.coeffs[k]]
        rep.payload["diff_powers"] = diff
        rep.text("diff at powers: " + ",".join(map(str, diff)))
    return (0 if equal else 1), rep


def _cmd_tensor(args) -> tuple[int, _Report]:
    lams = [rootsys.parse_weight(t) for t in args.weights.split(";") if t.strip()]
    if not lams:
        raise ValueError("no weights given")
    state: dict[rootsys.Weight, int] = {lams[0]: 1}
    for lam in lams[1:]:
        nxt: dict[rootsys.Weight, int] = {}
        for nu, m in state.items():
            for tau, k in weylchar.tensor_decompose_pair(nu, lam, args.weyl_cap).items():
                nxt[tau] = nxt.get(tau, 0) + m * k
        state = nxt
    rows = sorted(state.items(), key=lambda kv: (rootsys.conformal_h(kv[0]), kv[0].coords2))
    rep = _Report()
    rep.csv_header = ["mu", "multiplicity"]
    mults = []
    for mu, m in rows:
        rep.text(f"{rootsys.format_weight(mu)}: {m}")
        rep.csv_rows.append([rootsys.format_weight(mu), str(m)])
        mults.append({"mu": rootsys.format_weight(mu), "m": str(m)})
    rep.payload = {"multiplicities": mults}
    return 0, rep


def _char_by_method(method: str, args) -> qseries.TruncSeries:
    if method == "theorem2":
        return characters.theorem2_character(args.n, args.d, args.trunc, args.weyl_cap)
    if method == "oracle":
        return characters.invariant_series_oracle(args.n, args.d, args.trunc, args.weyl_cap)
    dims = [
        fock.invariant_subspace(args.n, args.d, lvl, args.basis_cap)[0]
        for lvl in range(args.trunc + 1)
    ]
    return qseries.TruncSeries(args.trunc, dims)


def _cmd_char(args) -> tuple[int, _Report]:
    rep = _Report()
    if args.method != "all":
        series = _char_by_method(args.method, args)
        _series_report(rep, args.method, series)
        rep.payload = _series_payload(series)
        return 0, rep
    results = {m: _char_by_method(m, args) for m in ("theorem2", "oracle", "fock")}
    base = results["theorem2"]
    equal = all(results[m] == base for m in results)
    for m in ("theorem2", "oracle", "fock"):
        rep.text(f"{m}: " + ",".join(str(c) for c in results[m].coeffs))
    rep.text(f"equal: {str(equal).lower()}")
    rep.csv_header = ["power"] + list(results)
    rep.csv_rows = [
        [str(k)] + [str(results[m].coeffs[k]) for m in results]
        for k in range(args.trunc + 1)
    ]
    rep.payload = {m: results[m].to_record() for m in results}
    rep.payload["equal"] = equal
    if not equal:
        diff = [
            k
            for k in range(args.trunc + 1)
            if len({results[m].coeffs[k] for m in results}) > 1
        ]
        rep.payload["diff_powers"] = diff
        rep.text("diff at powers: " + ",".join(map(str, diff)))
    return (0 if equal else 1), rep


def _cmd_denom_check(args) -> tuple[int, _Report]:
    lhs, rhs = branching.denominator_identity_check(args.n, args.weyl_cap)
    rep = _Report()
    rep.text(f"terms: {len(lhs.terms)}")
    for side, poly in (("lhs", lhs), ("rhs", rhs)):
        for item in _poly_terms(poly):
            rep.text(f"{side} {item['coeff']} * e^({item['exponent']})")
    rep.text("equal: true")
    rep.payload = {"lhs": _poly_terms(lhs), "rhs": _poly_terms(rhs), "equal": True}
    rep.csv_header = ["side", "exponent", "coeff"]
    for side, poly in (("lhs", lhs), ("rhs", rhs)):
        for item in _poly_terms(poly):
            rep.csv_rows.append([side, item["exponent"], item["coeff"]])
    return 0, rep


def _parse_matrix(text: str) -> modealg.SymMatrix:
    entries = [Fraction(t.strip()) for t in text.split(",")]
    d = round(len(entries) ** 0.5)
    if d * d != len(entries):
        raise ValueError("matrix entries must form a square (row-major)")
    return modealg.sym_matrix([entries[i * d : (i + 1) * d] for i in range(d)])


def _matrix_rows(mat: modealg.SymMatrix) -> list[str]:
    return [",".join(fmt_rat(x) for x in row) for row in mat]


def _cmd_griess(args) -> tuple[int, _Report]:
    x = _parse_matrix(args.x)
    y = _parse_matrix(args.y)
    if len(x) != len(y):
        raise ValueError("matrices must have equal size")
    g = modealg.griess_product(x, y, Fraction(args.r))
    j = modealg.jordan_product(x, y)
    equal = g == j
    rep = _Report()
    rep.text("griess: " + "; ".join(_matrix_rows(g)))
    rep.text("jordan: " + "; ".join(_matrix_rows(j)))
    rep.text(f"equal: {str(equal).lower()}")
    rep.payload = {
        "griess": _matrix_rows(g),
        "jordan": _matrix_rows(j),
        "equal": equal,
    }
    rep.csv_header = ["product", "rows"]
    rep.csv_rows = [["griess", ";".join(_matrix_rows(g))], ["jordan", ";".join(_matrix_rows(j))]]
    return (0 if equal else 1), rep


def _cmd_bracket(args) -> tuple[int, _Report]:
    x = modealg.parse_genkey(args.x)
    y = modealg.parse_genkey(args.y)
    out = modealg.bracket(x, y, Fraction(args.r))
    rep = _Report()
    terms = sorted(out.terms.items())
    for key, c in terms:
        rep.text(f"{fmt_rat(c)} * {modealg.format_genkey(key)}")
    rep.text(f"central: {fmt_rat(out.central)}")
    rep.payload = {
        "terms": [
            {"generator": modealg.format_genkey(k), "coeff": fmt_rat(c)}
            for k, c in terms
        ],
        "central": fmt_rat(out.central),
    }
    rep.csv_header = ["generator", "coeff"]
    rep.csv_rows = [[modealg.format_genkey(k), fmt_rat(c)] for k, c in terms]
    rep.csv_rows.append(["central", fmt_rat(out.central)])
    return 0, rep


def _cmd_simplicity(args) -> tuple[int, _Report]:
    violations = modealg.simplicity_scan(Fraction(args.r), args.d, args.N)
    status = "simple-consistent" if not violations else "reducible-consistent"
    rep = _Report()
    rep.text("violations: " + (" ".join(f"({k},{l})" for k, l in violations) or "none"))
    rep.text(f"status: {status}")
    rep.payload = {"violations": [[k, l] for k, l in violations], "status": status}
    rep.csv_header = ["k", "l"]
    rep.csv_rows = [[str(k), str(l)] for k, l in violations]
    return (0 if not violations else 1), rep


def _cmd_fock_invariants(args) -> tuple[int, _Report]:
    dims = [
        fock.invariant_subspace(args.n, args.d, lvl, args.basis_cap)[0]
        for lvl in range(args.maxlevel + 1)
    ]
    fock_series = qseries.TruncSeries(args.maxlevel, dims)
    oracle = characters.theorem2_character(args.n, args.d, args.maxlevel, args.weyl_cap)
    equal = fock_series == oracle
    rep = _Report()
    _series_report(rep, "fock", fock_series)
    rep.text("theorem2: " + ",".join(str(c) for c in oracle.coeffs))
    rep.text(f"equal: {str(equal).lower()}")
    rep.payload = {
        "fock": fock_series.to_record(),
        "theorem2": oracle.to_record(),
        "equal": equal,
    }
    return (0 if equal else 1), rep


def _cmd_virasoro(args) -> tuple[int, _Report]:
    c_value, grading_ok = fock.virasoro_check(args.n, args.d, cap=args.basis_cap)
    rep = _Report()
    rep.text(f"central_charge: {fmt_rat(c_value)}")
    rep.text(f"expected: {-2 * args.d * args.n}")
    rep.text(f"grading_ok: {str(grading_ok).lower()}")
    rep.payload = {
        "central_charge": fmt_rat(c_value),
        "expected": str(-2 * args.d * args.n),
        "grading_ok": grading_ok,
    }
    rep.csv_header = ["field", "value"]
    rep.csv_rows = [
        ["central_charge", fmt_rat(c_value)],
        ["expected", str(-2 * args.d * args.n)],
        ["grading_ok", str(grading_ok).lower()],
    ]
    return 0, rep


def _cmd_generation(args) -> tuple[int, _Report]:
    results = fock.generation_check(args.n, args.d, args.maxlevel, args.basis_cap)
    ok = all(results.values())
    rep = _Report()
    for lvl in sorted(results):
        rep.text(f"level {lvl}: {'ok' if results[lvl] else 'DEFICIENT'}")
    rep.text(f"generated: {str(ok).lower()}")
    rep.payload = {
        "levels": {str(k): v for k, v in results.items()},
        "generated": ok,
    }
    rep.csv_header = ["level", "generated"]
    rep.csv_rows = [[str(k), str(v).lower()] for k, v in sorted(results.items())]
    return (0 if ok else 1), rep


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="voachar",
        description="Exact graded characters, branching functions, and "
        "mode-algebra checks for symplectic-fermion invariant vertex algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, weyl=False, basis=False):
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")
        if weyl:
            p.add_argument("--weyl-cap", type=int, default=rootsys.DEFAULT_WEYL_CAP)
        if basis:
            p.add_argument("--basis-cap", type=int, default=fock.DEFAULT_BASIS_CAP)

    p = sub.add_parser("branching", help="branching function by both formulas")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lam", required=True, help='weight, e.g. "0,1"')
    p.add_argument("--trunc", type=int, required=True)
    common(p, weyl=True)
    p.set_defaults(func=_cmd_branching)

    p = sub.add_parser("tensor", help="tensor-product multiplicity table")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--weights", required=True, help='semicolon-separated, e.g. "1;1"')
    common(p, weyl=True)
    p.set_defaults(func=_cmd_tensor)

    p = sub.add_parser("char", help="invariant-subalgebra graded character")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--trunc", type=int, required=True)
    p.add_argument(
        "--method", choices=("theorem2", "oracle", "fock", "all"), default="theorem2"
    )
    common(p, weyl=True, basis=True)
    p.set_defaults(func=_cmd_char)

    p = sub.add_parser("denom-check", help="so(2n+1) denominator identity")
    p.add_argument("--n", type=int, required=True)
    common(p, weyl=True)
    p.set_defaults(func=_cmd_denom_check)

    p = sub.add_parser("griess", help="degree-2 product vs the Jordan product")
    p.add_argument("--r", required=True, help='level, rational like "5/2"')
    p.add_argument("--x", required=True, help="row-major entries, comma-separated")
    p.add_argument("--y", required=True)
    common(p)
    p.set_defaults(func=_cmd_griess)

    p = sub.add_parser("bracket", help="commutator of two generators")
    p.add_argument("--r", required=True)
    p.add_argument("--x", required=True, help='generator, e.g. "L[1,2](3,-1)"')
    p.add_argument("--y", required=True)
    common(p)
    p.set_defaults(func=_cmd_bracket)

    p = sub.add_parser("simplicity", help="scan the irreducibility criterion")
    p.add_argument("--r", required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--N", type=int, required=True)
    common(p)
    p.set_defaults(func=_cmd_simplicity)

    p = sub.add_parser("fock-invariants", help="invariant dimensions by level")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--maxlevel", type=int, required=True)
    common(p, weyl=True, basis=True)
    p.set_defaults(func=_cmd_fock_invariants)

    p = sub.add_parser("virasoro", help="central charge and grading check")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    common(p, basis=True)
    p.set_defaults(func=_cmd_virasoro)

    p = sub.add_parser("generation", help="degree-2 generation check")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--maxlevel", type=int, required=True)
    common(p, basis=True)
    p.set_defaults(func=_cmd_generation)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code, rep = args.func(args)
    except rootsys.CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    rep.emit(args.format, sys.stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())
