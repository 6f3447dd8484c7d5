"""
Command Line - gschur/cli.py

Verbs: verify, basis, mul, coproduct, char, filt, mult, truncate.

Exit codes: 0 success, 1 a check failed, 2 usage, parse or precondition error.
"""

import argparse
import sys
from math import comb
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence

from pydantic import BaseModel

from gschur.combinat.partitions import (
    Multipartition,
    degree,
    format_multipartition,
    parse_multipartition,
    parse_partition,
)
from gschur.core.config import settings
from gschur.core.errors import (
    AlgebraFileError,
    DegreeMismatchError,
    GSchurError,
    PreconditionError,
)
from gschur.core.monitoring import init_sentry, log_event, log_exception
from gschur.modules.decompose import verify_multiplicities
from gschur.modules.filtration import build_filtration, truncated_tensor_filtration
from gschur.modules.standard import standard_module, truncated_standard
from gschur.schemas.algebra import load_algebra
from gschur.schemas.reports import (
    BasisEntry,
    BasisReport,
    CharacterReport,
    CharacterTerm,
    CheckEntry,
    CoproductReport,
    CoproductTerm,
    FailureEntry,
    MultiplicityEntry,
    MultiplicityReportModel,
    ProductReport,
    TermEntry,
    TruncationReport,
    VerifyReport,
)
from gschur.schur.algebra import SchurAlgebra, TElement
from gschur.schur.words import Letter, OrbitTriple
from gschur.superalg.axioms import is_conforming, verify_axioms
from gschur.superalg.data import HeredityData
from gschur.symfunc.characters import standard_character

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_ERROR = 2

# ============================================================================
# ARGUMENT HELPERS
# ============================================================================


def resolve_algebra(name: str) -> HeredityData:
    """A path, or a fixture name looked up in FIXTURES_DIR."""
    path = Path(name)
    if path.is_file():
        return load_algebra(path)
    fixtures = Path(settings.FIXTURES_DIR or "fixtures")
    for candidate in (fixtures / name, fixtures / f"{name}.json"):
        if candidate.is_file():
            return load_algebra(candidate)
    raise AlgebraFileError(f"no algebra file or fixture named {name!r}")


def parse_triple(text: str, T: SchurAlgebra) -> TElement:
    """'x*y:r:s,...' as η of that word; '' or '-' is the unit of degree 0."""
    text = text.strip()
    if text in ("", "-"):
        return T.element(())
    word: List[Letter] = []
    for token in text.split(","):
        try:
            name, r, s = token.strip().rsplit(":", 2)
            x, y = name.split("*", 1)
            row, col = int(r), int(s)
        except ValueError:
            raise PreconditionError(f"malformed letter {token!r}, expected x*y:r:s") from None
        if not (1 <= row <= T.n and 1 <= col <= T.n):
            raise PreconditionError(f"letter {token!r} needs 1 ≤ r, s ≤ n = {T.n}")
        word.append((T.A.index_of((x, y)), row, col))
    return T.element(word)


def format_triple(triple: OrbitTriple, A: HeredityData) -> str:
    return ",".join(f"{A.basis[b].name}:{r}:{s}" for b, r, s in triple) or "-"


def _terms(u: TElement, A: HeredityData) -> List[TermEntry]:
    return [TermEntry(triple=format_triple(t, A), coef=str(c)) for t, c in u]


def _character_terms(terms: Dict[Multipartition, int]) -> List[CharacterTerm]:
    return [
        CharacterTerm(key=format_multipartition(key), coef=coef)
        for key, coef in sorted(terms.items(), reverse=True)
    ]


def _shape(text: str, A: HeredityData) -> Multipartition:
    slots = len(A.poset)
    if slots == 1 and "|" not in text:
        return (parse_partition(text),)
    return parse_multipartition(text, slots)


def _element(text: str, T: SchurAlgebra, d: int) -> TElement:
    u = parse_triple(text, T)
    if u.degree != d:
        raise DegreeMismatchError(d, u.degree)
    return u


# ============================================================================
# OUTPUT
# ============================================================================


def _render_text(model: BaseModel) -> str:
    lines: List[str] = []
    for key, value in model.model_dump(mode="json").items():
        if isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{key}:")
            for item in value:
                if set(item) == {"key", "coef"}:
                    prefix = "m" if key == "monomials" else "s"
                    lines.append(f"  {item['coef']} {prefix}[{item['key']}]")
                else:
                    lines.append("  " + "  ".join(f"{k}={v}" for k, v in item.items()))
        else:
            lines.append(f"{key}: {value}")
    return "\n".join(lines)


def emit(model: BaseModel, output: str) -> None:
    if output == "text":
        print(_render_text(model))
    else:
        print(model.model_dump_json(indent=settings.JSON_INDENT))


# ============================================================================
# COMMANDS
# ============================================================================


def cmd_verify(args: argparse.Namespace) -> int:
    A = resolve_algebra(args.algebra)
    report = verify_axioms(A)
    conforming = is_conforming(A)
    model = VerifyReport(
        algebra=A.name,
        passed=report.passed,
        conforming=conforming,
        checks=[CheckEntry(name=k, ok=v) for k, v in report.checks.items()],
        failures=[FailureEntry(axiom=f.axiom, detail=f.detail) for f in report.failures],
    )
    emit(model, args.output)
    return EXIT_OK if report.passed and conforming else EXIT_FAILED


def cmd_basis(args: argparse.Namespace) -> int:
    A = resolve_algebra(args.algebra)
    T = SchurAlgebra(A, args.n)
    basis = T.basis(args.d)
    classical = comb(args.n * args.n + args.d - 1, args.d) if A.dim == 1 else None
    model = BasisReport(
        algebra=A.name,
        n=args.n,
        d=args.d,
        dim=len(basis),
        classical_dim=classical,
        triples=[
            BasisEntry(
                triple=format_triple(t, A), c_factorial=T.c_factorial(t), parity=T.parity(t)
            )
            for t in basis
        ],
    )
    emit(model, args.output)
    return EXIT_OK if classical is None or classical == len(basis) else EXIT_FAILED


def cmd_mul(args: argparse.Namespace) -> int:
    A = resolve_algebra(args.algebra)
    T = SchurAlgebra(A, args.n)
    left = _element(args.left, T, args.d)
    right = _element(args.right, T, args.d)
    model = ProductReport(
        algebra=A.name,
        n=args.n,
        d=args.d,
        left=args.left,
        right=args.right,
        result=_terms(T.multiply(left, right), A),
    )
    emit(model, args.output)
    return EXIT_OK


def cmd_coproduct(args: argparse.Namespace) -> int:
    A = resolve_algebra(args.algebra)
    T = SchurAlgebra(A, args.n)
    u = _element(args.elt, T, args.d)
    terms = []
    for u1, u2, coef in T.coproduct(u):
        (t1,), (t2,) = u1.terms, u2.terms
        terms.append(
            CoproductTerm(left=format_triple(t1, A), right=format_triple(t2, A), coef=str(coef))
        )
    model = CoproductReport(algebra=A.name, n=args.n, d=args.d, element=args.elt, terms=terms)
    emit(model, args.output)
    return EXIT_OK


def cmd_char(args: argparse.Namespace) -> int:
    A = resolve_algebra(args.algebra)
    la = _shape(args.lam, A)
    d = degree(la)
    if args.d is not None and args.d != d:
        raise DegreeMismatchError(args.d, d)
    T = SchurAlgebra(A, args.n)
    V = standard_module(la, T)
    by_idempotents = V.idempotent_character()
    by_tableaux = V.weight_character()
    by_pipeline = standard_character(la, A, args.n)
    agree = by_idempotents == by_tableaux == by_pipeline
    if not agree:
        log_event("character_mismatch", level="warning", algebra=A.name, shape=la, n=args.n)
    model = CharacterReport(
        algebra=A.name,
        n=args.n,
        d=d,
        shape=format_multipartition(la),
        dimension=V.dim,
        monomials=_character_terms(by_idempotents.monomial_terms()),
        schur=_character_terms(by_idempotents.schur_expansion()),
        tableau_schur=_character_terms(by_tableaux.schur_expansion()),
        pipeline_schur=_character_terms(by_pipeline.schur_expansion()),
        agree=agree,
    )
    emit(model, args.output)
    return EXIT_OK if agree else EXIT_FAILED


def cmd_mult(args: argparse.Namespace) -> int:
    A = resolve_algebra(args.algebra)
    la, mu = _shape(args.lam, A), _shape(args.mu, A)
    report = verify_multiplicities(la, mu, args.n, A)
    shapes = sorted(set(report.observed) | set(report.expected), reverse=True)
    model = MultiplicityReportModel(
        algebra=A.name,
        la=format_multipartition(report.la),
        mu=format_multipartition(report.mu),
        n=args.n,
        multiplicities=[
            MultiplicityEntry(
                shape=format_multipartition(nu),
                expected=report.expected.get(nu, 0),
                observed=report.observed.get(nu, 0),
            )
            for nu in shapes
        ],
        top_ok=report.top_ok,
        product_ok=report.product_ok,
        decol_ok=report.decol_ok,
        passed=report.passed,
    )
    emit(model, args.output)
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_filt(args: argparse.Namespace) -> int:
    if args.mu is not None:
        return cmd_mult(args)
    if args.c is None:
        raise PreconditionError("filt needs --c (or --mu for the multiplicity check)")
    A = resolve_algebra(args.algebra)
    label = args.i if args.i is not None else A.poset.labels[0]
    la = parse_partition(args.lam)
    if args.truncate is not None:
        report = truncated_tensor_filtration(la, args.c, label, args.truncate, args.n, A)
    else:
        report = build_filtration(la, args.c, label, args.n, A)
    emit(report.to_model(), args.output)
    return EXIT_OK if report.certified else EXIT_FAILED


def cmd_truncate(args: argparse.Namespace) -> int:
    A = resolve_algebra(args.algebra)
    la = _shape(args.lam, A)
    V = truncated_standard(la, args.n, args.N, A)
    ch = V.weight_character()
    model = TruncationReport(
        algebra=A.name,
        shape=format_multipartition(la),
        n=args.n,
        N=args.N,
        dim=V.dim,
        monomials=_character_terms(ch.monomial_terms()),
        schur=_character_terms(ch.schur_expansion()),
    )
    emit(model, args.output)
    return EXIT_OK


COMMANDS: Dict[str, Callable[[argparse.Namespace], int]] = {
    "verify": cmd_verify,
    "basis": cmd_basis,
    "mul": cmd_mul,
    "coproduct": cmd_coproduct,
    "char": cmd_char,
    "filt": cmd_filt,
    "mult": cmd_mult,
    "truncate": cmd_truncate,
}

# ============================================================================
# PARSER
# ============================================================================


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gschur", description="Generalized Schur superalgebras T^A(n,d)"
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--algebra",
        default="trivial",
        help="Algebra JSON file or fixture name (default: trivial)",
    )
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="output", action="store_const", const="json")
    fmt.add_argument("--text", dest="output", action="store_const", const="text")
    common.set_defaults(output=None)

    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("verify", parents=[common], help="Check the heredity axioms of A")

    p = sub.add_parser("basis", parents=[common], help="List the orbit triples of T(n,d)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)

    p = sub.add_parser("mul", parents=[common], help="Multiply two η basis elements")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--left", required=True, help="Triple as x*y:r:s,...")
    p.add_argument("--right", required=True, help="Triple as x*y:r:s,...")

    p = sub.add_parser("coproduct", parents=[common], help="Coproduct of an η basis element")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--elt", required=True, help="Triple as x*y:r:s,...")

    p = sub.add_parser("char", parents=[common], help="Character of Δ(λ), three ways")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int)
    p.add_argument("--lambda", dest="lam", required=True, help="Multipartition, e.g. 2,1|1")

    p = sub.add_parser("filt", parents=[common], help="Standard filtration of a tensor product")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--c", type=int)
    p.add_argument("--i", type=int, help="Poset label of the color (default: first label)")
    p.add_argument("--mu", help="Second multipartition; switches to the multiplicity check")
    p.add_argument("--truncate", type=int, help="Compress the width --n chain to this width")

    p = sub.add_parser("mult", parents=[common], help="Multiplicities in Δ(λ) ⊗ Δ(μ)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)

    p = sub.add_parser("truncate", parents=[common], help="Truncated standard module Δ_n(λ)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """CLI entry point."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_ERROR
    args.output = args.output or settings.OUTPUT_FORMAT

    init_sentry()
    try:
        code = COMMANDS[args.command](args)
    except (GSchurError, ValueError) as exc:
        log_event("command_failed", level="error", command=args.command, error=exc)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except Exception as exc:
        log_exception("command_crashed", exc, command=args.command)
        raise
    log_event("command_finished", level="debug", command=args.command, exit=code)
    return code


if __name__ == "__main__":
    sys.exit(main())
