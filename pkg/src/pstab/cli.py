"""Command-line front end: matrix file I/O, one subcommand per pipeline
stage, certificate serialization and the built-in demo.

Matrix files are plain text: a dimension line, then n rows of n entries
(integers, fractions like "-7/5", or finite decimals, all parsed exactly).
Certificates are JSON with every exact value stored as a fraction string;
the only floats are eigenvalues, which carry their tolerances.

Exit codes are uniform across subcommands: 0 success/certified, 1 refuted
(with a witness), 2 inconclusive, 3 input error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from fractions import Fraction

from . import __version__
from .classify import classify_full
from .compound import compound, generalized_compound
from .errors import (
    CertificationError,
    HypothesisError,
    MatrixArgumentError,
    NumericToleranceError,
    SingularMatrixError,
    StabilizerInconclusiveError,
)
from .exactmat import ExactMatrix
from .nests import NestCertificate, NestEvidence, verify_nest
from .spectra import SpectralTolerances
from .stabilize import DEFAULT_MAX_SHRINK, build_B, certify_stability, homotopy_certificate

EXIT_OK = 0
EXIT_REFUTED = 1
EXIT_INCONCLUSIVE = 2
EXIT_INPUT = 3


class MatrixParseError(Exception):
    """Parse failure with 1-based line and token position."""

    def __init__(self, message, line, column):
        super().__init__(f"line {line}, entry {column}: {message}")
        self.line = line
        self.column = column


# -- matrix file format -----------------------------------------------------


def parse_matrix(text) -> ExactMatrix:
    """Parse the matrix file format: a dimension line, then n rows."""
    rows_of_tokens = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if stripped:
            rows_of_tokens.append((lineno, stripped.split()))
    if not rows_of_tokens:
        raise MatrixParseError("empty matrix file", 1, 1)

    head_line, head = rows_of_tokens[0]
    if len(head) != 1 or not head[0].isdigit():
        raise MatrixParseError(
            f"expected a single dimension, got {' '.join(head)!r}", head_line, 1
        )
    n = int(head[0])
    if n < 1:
        raise MatrixParseError("dimension must be at least 1", head_line, 1)
    body = rows_of_tokens[1:]
    if len(body) != n:
        where = body[-1][0] if body else head_line
        raise MatrixParseError(
            f"expected {n} matrix rows, got {len(body)}", where, 1
        )

    rows = []
    for lineno, tokens in body:
        if len(tokens) != n:
            raise MatrixParseError(
                f"expected {n} entries, got {len(tokens)}", lineno, len(tokens)
            )
        row = []
        for col, token in enumerate(tokens, start=1):
            try:
                row.append(Fraction(token))
            except (ValueError, ZeroDivisionError) as exc:
                raise MatrixParseError(
                    f"bad entry {token!r}: {exc}", lineno, col
                ) from exc
        rows.append(row)
    return ExactMatrix(rows)


def load_matrix(path) -> ExactMatrix:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_matrix(handle.read())


def entry_str(x: Fraction) -> str:
    """Shortest exact form: "7" for integers, "p/q" otherwise."""
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_matrix(m: ExactMatrix) -> str:
    """Canonical matrix file text; parse(format(m)) == m token for token."""
    lines = [str(m.n)]
    for row in m.rows:
        lines.append(" ".join(entry_str(x) for x in row))
    return "\n".join(lines) + "\n"


def matrix_hash(m: ExactMatrix) -> str:
    return hashlib.sha256(format_matrix(m).encode("utf-8")).hexdigest()


# -- certificate documents --------------------------------------------------


def frac_str(x) -> str:
    """Lossless fraction string, denominator always explicit ("5491/1")."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def _matrix_doc(m: ExactMatrix):
    return [[frac_str(x) for x in row] for row in m.rows]


def _matrix_from_doc(doc) -> ExactMatrix:
    return ExactMatrix([[Fraction(x) for x in row] for row in doc])


def _complex_doc(v):
    return {"re": v.real, "im": v.imag}


def certificate_document(cert) -> dict:
    """Serialize a StabilityCertificate to a JSON-ready dict.

    Everything up to trace_ledger is exact (fraction strings); the spectrum
    section is the only floating-point content.
    """
    report = cert.report
    tols = cert.tolerances
    return {
        "tool": {"name": "pstab", "version": __version__},
        "verdict": "certified",
        "input": {
            "n": cert.matrix.n,
            "matrix": _matrix_doc(cert.matrix),
            "sha256": matrix_hash(cert.matrix),
        },
        "classification": {
            "flags": report.flags(),
            "order_sums": [frac_str(v) for v in report.order_sums],
            "order_sums_square": [frac_str(v) for v in report.order_sums_square],
        },
        "nest": {
            "chain": [list(s) for s in cert.nest.chain],
            "tau": list(cert.nest.tau),
        },
        "transform": {
            "theta": list(cert.theta),
            "b_matrix": _matrix_doc(cert.b_matrix),
        },
        "block_traces": {
            f"{j},{m}": frac_str(v)
            for (j, m), v in sorted(cert.block_trace_values.items())
        },
        "stabilizer": {
            "eps": [frac_str(e) for e in cert.stabilizer.eps],
            "shrink_log": list(cert.stabilizer.shrink_log),
        },
        "trace_ledger": {
            f"{j},{k},{m}": frac_str(v)
            for (j, k, m), v in sorted(cert.trace_ledger.entries.items())
        },
        "spectrum": {
            "input_eigenvalues": [_complex_doc(v) for v in cert.spectrum.eigenvalues],
            "stabilized_eigenvalues": [
                _complex_doc(v) for v in cert.stabilized_spectrum.eigenvalues
            ],
            "wedge_margin": cert.wedge_margin,
            "method": cert.spectrum.method,
            "tolerances": {
                "tol_imag": tols.tol_imag,
                "tol_pos": tols.tol_pos,
                "tol_sep": tols.tol_sep,
            },
        },
    }


def verify_document(doc, a: ExactMatrix):
    """Re-derive every exact claim of a certificate from the matrix alone.

    Returns a list of discrepancy strings; an empty list means the document
    re-verifies.  Floating-point sections are not re-checked here: they are
    advisory, the exact ledger is the certificate.
    """
    problems = []
    if doc.get("verdict") != "certified":
        problems.append(f"unexpected verdict {doc.get('verdict')!r}")
        return problems

    inp = doc["input"]
    if inp["n"] != a.n:
        problems.append(f"dimension mismatch: document says {inp['n']}, matrix is {a.n}")
        return problems
    if inp["sha256"] != matrix_hash(a):
        problems.append("matrix hash mismatch")
        return problems
    if _matrix_from_doc(inp["matrix"]) != a:
        problems.append("matrix entries do not match the document")
        return problems

    report = classify_full(a)
    if doc["classification"]["flags"] != report.flags():
        problems.append("classification flags do not re-verify")
    if [frac_str(v) for v in report.order_sums] != doc["classification"]["order_sums"]:
        problems.append("order sums do not re-verify")
    if [frac_str(v) for v in report.order_sums_square] != doc["classification"][
        "order_sums_square"
    ]:
        problems.append("order sums of the square do not re-verify")

    chain = [tuple(s) for s in doc["nest"]["chain"]]
    tau = tuple(doc["nest"]["tau"])
    evidence = verify_nest(a, chain)
    if not isinstance(evidence, NestEvidence):
        problems.append(f"nest fails re-verification: {evidence.describe()}")
        return problems

    try:
        theta, b = build_B(a, NestCertificate(chain=tuple(chain), tau=tau, evidence=evidence))
    except (CertificationError, MatrixArgumentError, SingularMatrixError) as exc:
        problems.append(f"transform fails re-verification: {exc}")
        return problems
    if list(theta) != doc["transform"]["theta"]:
        problems.append("permutation theta does not re-verify")
    if _matrix_from_doc(doc["transform"]["b_matrix"]) != b:
        problems.append("transformed matrix B does not re-verify")
        return problems

    from .stabilize import block_traces

    recomputed_bt = {
        f"{j},{m}": frac_str(v) for (j, m), v in block_traces(b).items()
    }
    for key in sorted(doc["block_traces"]):
        if recomputed_bt.get(key) != doc["block_traces"][key]:
            problems.append(f"block trace ({key}) does not re-verify")

    eps = [Fraction(e) for e in doc["stabilizer"]["eps"]]
    if eps[0] != 1 or any(not (0 < b_ < a_) for a_, b_ in zip(eps, eps[1:])):
        problems.append("stabilizer diagonal is not strictly decreasing from 1")
        return problems

    ledger = homotopy_certificate(b, eps)
    recomputed = {
        f"{j},{k},{m}": frac_str(v) for (j, k, m), v in ledger.entries.items()
    }
    doc_ledger = doc["trace_ledger"]
    if set(doc_ledger) != set(recomputed):
        problems.append("trace ledger key set does not match")
    for key in sorted(doc_ledger):
        if key in recomputed and recomputed[key] != doc_ledger[key]:
            problems.append(f"trace ledger entry ({key}) does not re-verify")
    for key, value in sorted(doc_ledger.items()):
        if Fraction(value) <= 0:
            problems.append(f"trace ledger entry ({key}) is not positive")
    return problems


# -- subcommands ------------------------------------------------------------

CLASS_LABELS = [
    ("P", "P"),
    ("Q", "Q"),
    ("P2", "P^2"),
    ("Q2", "Q^2"),
    ("sign_symmetric", "sign-symmetric"),
    ("row_sqdd", "row square diagonally dominant"),
    ("col_sqdd", "column square diagonally dominant"),
]


def cmd_classify(args) -> int:
    a = load_matrix(args.matrix)
    report = classify_full(a)
    flags = report.flags()
    required = args.require or [key for key, _ in CLASS_LABELS]
    if args.json:
        doc = {
            "n": report.n,
            "flags": flags,
            "order_sums": [frac_str(v) for v in report.order_sums],
            "order_sums_square": [frac_str(v) for v in report.order_sums_square],
            "witnesses": {
                key: w.describe() for key, w in sorted(report.witnesses.items())
            },
        }
        print(json.dumps(doc, indent=2))
    else:
        for key, label in CLASS_LABELS:
            verdict = "yes" if flags[key] else "no"
            line = f"{label}: {verdict}"
            if not flags[key] and key in report.witnesses:
                line += f"  ({report.witnesses[key].describe()})"
            print(line)
    return EXIT_OK if all(flags[key] for key in required) else EXIT_REFUTED


def _print_exact_matrix(m: ExactMatrix, as_json):
    if as_json:
        print(json.dumps({"n": m.n, "matrix": _matrix_doc(m)}, indent=2))
    else:
        widths = [
            max(len(entry_str(m.rows[i][j])) for i in range(m.n))
            for j in range(m.n)
        ]
        for row in m.rows:
            print(" ".join(entry_str(x).rjust(w) for x, w in zip(row, widths)))


def cmd_compound(args) -> int:
    a = load_matrix(args.matrix)
    if args.wedge is None:
        result = compound(a, args.order).data
    else:
        result = generalized_compound(a, args.order, args.wedge).data
    _print_exact_matrix(result, args.json)
    return EXIT_OK


def cmd_certify(args) -> int:
    a = load_matrix(args.matrix)
    tols = SpectralTolerances(
        tol_imag=args.tol_imag, tol_pos=args.tol_pos, tol_sep=args.tol_sep
    )
    try:
        cert = certify_stability(a, tols=tols, max_shrink=args.max_shrink)
    except HypothesisError as exc:
        print(f"refuted ({exc.kind}): {exc}")
        return EXIT_REFUTED
    except (StabilizerInconclusiveError, NumericToleranceError) as exc:
        print(f"inconclusive: {exc}")
        return EXIT_INCONCLUSIVE
    except CertificationError as exc:
        print(f"inconclusive (internal check failed): {exc}")
        return EXIT_INCONCLUSIVE

    doc = certificate_document(cert)
    if args.json:
        payload = json.dumps(doc, indent=2)
        if args.json == "-":
            print(payload)
        else:
            with open(args.json, "w", encoding="utf-8") as handle:
                handle.write(payload + "\n")
    print(f"certified: positively stable (n = {a.n})")
    print(f"nest chain: {' < '.join(str(set(s)) for s in cert.nest.chain)}")
    print(f"stabilizer eps: {', '.join(entry_str(e) for e in cert.stabilizer.eps)}")
    print(
        "eigenvalues: "
        + ", ".join(f"{v.real:.5g}{v.imag:+.5g}i" for v in cert.spectrum.eigenvalues)
    )
    print(f"sharpened wedge slack: {cert.wedge_margin:.4g} rad")
    return EXIT_OK


def cmd_verify(args) -> int:
    with open(args.certificate, "r", encoding="utf-8") as handle:
        doc = json.load(handle)
    a = load_matrix(args.matrix)
    problems = verify_document(doc, a)
    if problems:
        for p in problems:
            print(f"FAIL: {p}")
        return EXIT_REFUTED
    print("certificate re-verifies")
    return EXIT_OK


def cmd_demo(args) -> int:
    """Walk the bundled 4x4 demo end-to-end, PASS/FAIL line per quantity."""
    from . import fixtures as fx
    from .exactmat import det, trace
    from .nests import find_q2_nest
    from .spectra import eigenvalues, multiset_match

    a = fx.DEMO_A
    failures = 0

    def check(label, got, want):
        nonlocal failures
        ok = got == want
        if not ok:
            failures += 1
        print(f"[{'PASS' if ok else 'FAIL'}] {label}: {got} vs {want}")

    check("det A", det(a), fx.DEMO_DET)
    check("A^(2)", compound(a, 2).data, fx.DEMO_COMPOUND_2)
    check("A^(3)", compound(a, 3).data, fx.DEMO_COMPOUND_3)
    sq = a.square()
    check("A^2", sq, fx.DEMO_SQUARE)
    report = classify_full(a)
    for k, want in enumerate(fx.DEMO_SQUARE_ORDER_SUMS, start=1):
        check(f"order-{k} minor sum of A^2", report.order_sums_square[k - 1], want)
    scaled = a.scale_rows(fx.DEMO_D)
    check("Tr((D A)^2) with D = diag(1,1,1/10,1/10)", trace(scaled.square()),
          fx.DEMO_SCALED_SQUARE_TRACE)
    nest = find_q2_nest(a)
    check("Q^2 chain", nest.chain if nest else None, fx.DEMO_CHAIN)
    a1 = fx.DEMO_SUB_234
    a12 = fx.DEMO_SUB_34
    check("det(A1^2)", det(a1.square()), fx.DEMO_SUB_234_SQUARE_DET)
    check("Tr(A1^2)", trace(a1.square()), fx.DEMO_SUB_234_SQUARE_TRACE)
    check(
        "order-2 minor sum of A1^2",
        classify_full(a1).order_sums_square[1],
        fx.DEMO_SUB_234_SQUARE_ORDER2_SUM,
    )
    check("det(A12^2)", det(a12.square()), fx.DEMO_SUB_34_SQUARE_DET)
    check("Tr(A12^2)", trace(a12.square()), fx.DEMO_SUB_34_SQUARE_TRACE)

    spectrum = eigenvalues(a)
    ok = multiset_match(
        spectrum.eigenvalues, fx.DEMO_EIGENVALUES, abs_tol=1e-3, rel_tol=0.0
    )
    if not ok:
        failures += 1
    print(f"[{'PASS' if ok else 'FAIL'}] eigenvalues within 1e-3 of reference")

    return EXIT_OK if failures == 0 else EXIT_REFUTED


# -- argument parsing -------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(
        prog="pstab",
        description="Exact matrix-class tests and positive-stability certificates.",
    )
    parser.add_argument("--version", action="version", version=f"pstab {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="exact class membership report")
    p.add_argument("matrix", help="matrix file")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument(
        "--require",
        action="append",
        choices=[key for key, _ in CLASS_LABELS],
        help="class that must hold for exit 0 (repeatable; default: all)",
    )
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("compound", help="print a compound or generalized compound")
    p.add_argument("matrix", help="matrix file")
    p.add_argument("--order", type=int, required=True, help="compound order j")
    p.add_argument("--wedge", type=int, help="number m of matrix factors (wedge with identities)")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.set_defaults(func=cmd_compound)

    p = sub.add_parser("certify", help="run the stability certification pipeline")
    p.add_argument("matrix", help="matrix file")
    p.add_argument("--json", metavar="PATH", help="write the certificate document ('-' for stdout)")
    p.add_argument("--tol-pos", type=float, default=SpectralTolerances().tol_pos)
    p.add_argument("--tol-imag", type=float, default=SpectralTolerances().tol_imag)
    p.add_argument("--tol-sep", type=float, default=SpectralTolerances().tol_sep)
    p.add_argument("--max-shrink", type=int, default=DEFAULT_MAX_SHRINK)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("verify", help="re-check a certificate against its matrix")
    p.add_argument("certificate", help="certificate JSON file")
    p.add_argument("matrix", help="matrix file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("demo", help="walk the bundled 4x4 example end-to-end")
    p.set_defaults(func=cmd_demo)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except MatrixParseError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (MatrixArgumentError, json.JSONDecodeError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
