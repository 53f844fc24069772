"""
Subcommand dispatch for `python -m cli`.

Exit codes: 0 success, 1 a check failed, 2 usage or input error.
Logs go to stderr; stdout carries only command output.
"""

import argparse
import asyncio
import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional

from pydantic import ValidationError

from algebra.errors import ParameterError, WorkbenchError
from algebra.ncpoly import NCPoly
from algebra.words import GenSym
from cli.expr_parser import parse_expr
from models.document_models import CocycleDocument, PresentationDocument
from models.report_models import DomainReport, LemmaReport
from presentations.base import FreeProductPresentation
from presentations.factory import make_presentation
from presentations.free_product import an_embedding, unitary_embedding
from services.catalog_service import CatalogService
from services.codec_service import CodecService
from services.cocycle_service import (
    NON_INNER_CAVEAT,
    ModuleSpec,
    check_relations,
    eval_cocycle,
    factor_cocycle,
    inner_cocycle,
    make_cocycle,
    solve_inner,
)
from services.hopf_service import check_hopf_axioms, make_hopf_structure
from services.rewriting_service import reduce
from services.su2_service import domain_test
from services.verify_service import available_suites, run_suite, verify_all
from storage.presentation_store import PresentationStore
from utils.settings import Settings, configure_logging, get_settings

logger = logging.getLogger(__name__)

catalog = CatalogService()

SCHEMAS = {
    "lemma-report": LemmaReport,
    "domain-report": DomainReport,
    "presentation": PresentationDocument,
    "cocycle": CocycleDocument,
}


# ---------- Output ----------

def _emit_json(data: Any) -> None:
    print(json.dumps(data, indent=2, ensure_ascii=False))


def _print_report(report: LemmaReport) -> None:
    status = "PASS" if report.passed else "FAIL"
    params = ", ".join(f"{k}={v}" for k, v in report.parameters.items())
    print(f"{status}  {report.lemma_id} ({params})")
    for check in report.checks:
        mark = "ok  " if check.passed else "FAIL"
        flag = " [inconclusive]" if check.inconclusive else ""
        print(f"  {mark} {check.description}{flag}")
        if check.counterexample:
            print(f"       counterexample: {check.counterexample}")
    for caveat in report.caveats:
        print(f"  note: {caveat}")


def _store(args) -> Optional[PresentationStore]:
    return PresentationStore(str(args.cache)) if args.cache else None


def _presentation(args, degree: Optional[int] = None):
    return catalog.presentation(args.alg, args.n, degree if degree is not None else args.degree, _store(args))


# ---------- Handlers ----------

def _handle_normalize(args, settings: Settings) -> int:
    presentation = _presentation(args)
    p = parse_expr(args.expr, presentation)
    result = reduce(p, presentation)
    if not result.certified:
        logger.warning(
            f"Degree {p.degree()} is above the certified degree {presentation.certified_degree}; "
            f"normal form is not certified unique"
        )
    text = result.poly.to_text(presentation.order)
    if args.json:
        _emit_json({
            "algebra": presentation.name,
            "n": presentation.n,
            "input": args.expr,
            "normal_form": text,
            "terms": CodecService.poly_to_json(result.poly),
            "certified": result.certified,
        })
    else:
        print(text)
    return 0


def _handle_hopf_check(args, settings: Settings) -> int:
    presentation = _presentation(args)
    report = check_hopf_axioms(
        make_hopf_structure(presentation),
        degree_bound=args.degree_bound,
        samples=args.samples,
        seed=args.seed,
    )
    if args.json:
        _emit_json(report.model_dump(by_alias=True))
    else:
        _print_report(report)
    return 0 if report.passed else 1


def _parse_values(pairs: List[str], module_alphabet, domain_alphabet) -> Dict[GenSym, NCPoly]:
    values: Dict[GenSym, NCPoly] = {}
    for item in pairs or []:
        key, sep, expr = item.partition("=")
        if not sep:
            raise ParameterError(f"--value expects GEN=EXPR, got {item!r}")
        g = GenSym.from_text(key)
        domain_alphabet.check_word((g,))
        values[g] = parse_expr(expr, module_alphabet)
    return values


def _build_cocycle(args):
    """Module from --alg, domain from --domain or the cocycle document, values from both sources."""
    doc: Optional[CocycleDocument] = None
    if args.cocycle:
        doc = CocycleDocument.model_validate_json(Path(args.cocycle).read_text())
        args.alg = args.alg or doc.module
        args.n = doc.n
    if not args.alg:
        raise ParameterError("cocycle commands need --alg or a --cocycle document")
    ambient = _presentation(args)
    module = ModuleSpec(ambient)
    domain_name = catalog.resolve(args.domain or (doc.domain if doc and doc.domain else ambient.name))

    if domain_name == ambient.name:
        domain, embedding, factor_index = ambient, None, None
    elif isinstance(ambient, FreeProductPresentation) and domain_name in [f.name for f in ambient.factors]:
        factor_index = [f.name for f in ambient.factors].index(domain_name)
        domain, embedding = ambient.factors[factor_index], None
    elif domain_name == "U_plus" and ambient.name == "H_n":
        domain, embedding, factor_index = make_presentation("U_plus", ambient.n), unitary_embedding(ambient.n), None
    elif domain_name == "A_n":
        domain = make_presentation("A_n", ambient.n)
        embedding, factor_index = an_embedding(ambient.n, target=ambient.alphabet), None
    else:
        raise ParameterError(f"No embedding of {domain_name} into {ambient.name}")

    values: Dict[GenSym, NCPoly] = {}
    if doc is not None:
        values.update(CodecService.document_values(doc, ambient.alphabet, domain.alphabet))
    values.update(_parse_values(args.value, ambient.alphabet, domain.alphabet))

    if factor_index is not None:
        return factor_cocycle(module, factor_index, values)
    return make_cocycle(module, values, domain=domain, embedding=embedding)


def _handle_cocycle(args, settings: Settings) -> int:
    action = args.action

    if action == "inner":
        if not args.alg:
            raise ParameterError("cocycle inner needs --alg")
        ambient = _presentation(args)
        xi = parse_expr(args.xi, ambient)
        c = inner_cocycle(xi, ModuleSpec(ambient))
        doc = CodecService.cocycle_to_document(ambient.name, ambient.n, c.values)
        _emit_json(doc.model_dump())
        return 0

    c = _build_cocycle(args)

    if action == "eval":
        if not args.expr:
            raise ParameterError("cocycle eval needs an expression")
        value = eval_cocycle(c, parse_expr(args.expr, c.domain.alphabet))
        if args.json:
            _emit_json({"input": args.expr, "value": value.to_text(), "terms": CodecService.poly_to_json(value)})
        else:
            print(value.to_text())
        return 0

    if action == "check":
        report = check_relations(c)
        if args.json:
            _emit_json(report.model_dump(by_alias=True))
        else:
            _print_report(report)
        return 0 if report.passed else 1

    # solve-inner
    witness = solve_inner(c, args.bound)
    if args.json:
        _emit_json({
            "bound": args.bound,
            "witness": CodecService.poly_to_json(witness) if witness is not None else None,
            "caveats": [] if witness is not None else [NON_INNER_CAVEAT],
        })
    elif witness is not None:
        print(witness.to_text())
    else:
        print(f"no witness up to degree {args.bound}")
        print(f"note: {NON_INNER_CAVEAT}")
    return 0


def _handle_domain_test(args, settings: Settings) -> int:
    report = domain_test(args.samples, args.max_alpha, args.max_gamma, seed=args.seed)
    if args.json:
        _emit_json(report.model_dump(by_alias=True))
    else:
        status = "PASS" if report.passed else "FAIL"
        print(f"{status}  {report.pairs_checked} pairs, {len(report.failures)} failures (seed={report.seed})")
        for f in report.failures:
            print(f"  {f.kind}: ({f.x}) * ({f.y}) = {f.product}")
    return 0 if report.passed else 1


def _handle_verify(args, settings: Settings) -> int:
    if args.lemma == "all":
        reports = asyncio.run(verify_all(
            n=args.n, seed=args.seed, xi=args.xi, control=args.control, tables=args.tables, samples=args.samples,
        ))
    else:
        reports = [run_suite(
            args.lemma, n=args.n, seed=args.seed, degree=args.degree, xi=args.xi, control=args.control,
            tables=args.tables, samples=args.samples,
        )]
    if args.json:
        dumped = [r.model_dump(by_alias=True) for r in reports]
        _emit_json(dumped[0] if len(dumped) == 1 else dumped)
    else:
        for r in reports:
            _print_report(r)
    return 0 if all(r.passed for r in reports) else 1


def _handle_complete(args, settings: Settings) -> int:
    degree = args.degree if args.degree is not None else settings.completion_bound
    presentation = _presentation(args, degree)
    doc = CodecService.presentation_to_document(presentation) if not isinstance(
        presentation, FreeProductPresentation) else None
    if args.json and doc is not None:
        _emit_json({"name": doc.name, "n": doc.n, "rules": len(doc.rules), "certified_degree": doc.certified_degree})
    else:
        print(f"{presentation!r}")
    return 0


def _handle_dump_presentation(args, settings: Settings) -> int:
    degree = args.degree if args.degree is not None else settings.completion_bound
    presentation = _presentation(args, degree)
    if isinstance(presentation, FreeProductPresentation):
        raise ParameterError(f"{presentation.name} is stored factor by factor; dump S1 and O_plus instead")
    doc = CodecService.presentation_to_document(presentation)
    text = json.dumps(doc.model_dump(), indent=2)
    if args.out:
        Path(args.out).write_text(text)
        logger.info(f"Wrote {len(doc.rules)} rules to {args.out}")
    else:
        print(text)
    return 0


def _handle_schema(args, settings: Settings) -> int:
    model = SCHEMAS.get(args.name)
    if model is None:
        raise ParameterError(f"Unknown schema: {args.name}. Available: {list(SCHEMAS.keys())}")
    _emit_json(model.model_json_schema(by_alias=True))
    return 0


HANDLERS = {
    "normalize": _handle_normalize,
    "hopf-check": _handle_hopf_check,
    "cocycle": _handle_cocycle,
    "domain-test": _handle_domain_test,
    "verify": _handle_verify,
    "complete": _handle_complete,
    "dump-presentation": _handle_dump_presentation,
    "schema": _handle_schema,
}


# ---------- Parser ----------

def build_parser(settings: Settings) -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="Machine-readable output on stdout")
    common.add_argument("--cache", nargs="?", const=settings.cache_dir, default=None,
                        help=f"Presentation cache directory (default when given bare: {settings.cache_dir})")
    common.add_argument("--seed", type=int, default=settings.seed, help="Seed for sampled checks")
    common.add_argument("--log-level", default=settings.log_level)

    algebra = argparse.ArgumentParser(add_help=False)
    algebra.add_argument("--alg", default=None, help="Algebra name or alias: o+, u+, s1, su2, h, a")
    algebra.add_argument("--n", type=int, default=2, help="Matrix size")
    algebra.add_argument("--degree", type=int, default=None, help="Completion degree")

    parser = argparse.ArgumentParser(prog="qhopf", description="Exact noncommutative *-algebra workbench")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("normalize", parents=[common, algebra], help="Normal form of an expression")
    p.add_argument("expr")

    p = sub.add_parser("hopf-check", parents=[common, algebra], help="Counit, coassociativity, multiplicativity")
    p.add_argument("--degree-bound", type=int, default=3)
    p.add_argument("--samples", type=int, default=20)

    p = sub.add_parser("cocycle", parents=[common, algebra], help="Cocycle evaluation, checks and innerness")
    p.add_argument("action", choices=["eval", "check", "solve-inner", "inner"])
    p.add_argument("expr", nargs="?", default=None)
    p.add_argument("--domain", default=None, help="Domain algebra when it differs from --alg")
    p.add_argument("--cocycle", default=None, help="Cocycle JSON document")
    p.add_argument("--value", action="append", default=[], help="GEN=EXPR, repeatable")
    p.add_argument("--xi", default="0", help="Witness for `inner`")
    p.add_argument("--bound", type=int, default=2, help="Witness degree for `solve-inner`")

    p = sub.add_parser("domain-test", parents=[common], help="Zero-divisor test in Pol(SU_-1(2))")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--max-alpha", type=int, default=3)
    p.add_argument("--max-gamma", type=int, default=3)

    p = sub.add_parser("verify", parents=[common], help="Run a verification suite")
    p.add_argument("lemma", choices=available_suites() + ["all"])
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--degree", type=int, default=None)
    p.add_argument("--xi", default=None)
    p.add_argument("--control", action="store_true", help="Run on the corrupted input; must fail")
    p.add_argument("--tables", type=int, default=None, help="Random cocycle tables for determination (default 20)")
    p.add_argument("--samples", type=int, default=None, help="Random elements per sampling check")

    p = sub.add_parser("complete", parents=[common, algebra], help="Complete and optionally cache a presentation")
    p = sub.add_parser("dump-presentation", parents=[common, algebra], help="Print a completed rewrite system")
    p.add_argument("--out", default=None)

    p = sub.add_parser("schema", parents=[common], help="JSON schema of an output document")
    p.add_argument("name", choices=list(SCHEMAS.keys()))
    return parser


def run(argv: Optional[List[str]] = None) -> int:
    settings = get_settings()
    parser = build_parser(settings)
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    configure_logging(args.log_level)
    if getattr(args, "alg", None) is None and args.command in ("normalize", "hopf-check", "complete", "dump-presentation"):
        parser.print_usage(sys.stderr)
        print(f"{args.command}: --alg is required", file=sys.stderr)
        return 2

    try:
        return HANDLERS[args.command](args, settings)
    except WorkbenchError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (ValidationError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
