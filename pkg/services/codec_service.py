"""
JSON codec for elements, rewrite systems and cocycles.

Elements travel as term lists [{word: [...], re, im}]; a cocycle value may also
be given as expression text, which is parsed against the module alphabet.
"""

import logging
from typing import Any, Dict, List, Mapping, Optional

from algebra.errors import ParameterError
from algebra.ncpoly import NCPoly
from algebra.scalar import Scalar
from algebra.words import Alphabet, GenSym
from cli.expr_parser import parse_expr
from models.document_models import (
    CocycleDocument,
    PresentationDocument,
    RuleDocument,
    TermDocument,
)
from presentations.base import Presentation, Rule
from presentations.factory import base_presentation

logger = logging.getLogger(__name__)


class CodecService:

    @staticmethod
    def poly_to_terms(p: NCPoly) -> List[TermDocument]:
        """Terms in canonical order, coefficients as exact p/q strings."""
        out = []
        for word, c in p.sorted_terms():
            data = c.to_json()
            out.append(TermDocument(word=[g.text for g in word], re=data["re"], im=data["im"]))
        return out

    @staticmethod
    def terms_to_poly(terms: List[TermDocument], alphabet: Alphabet) -> NCPoly:
        acc: Dict[tuple, Scalar] = {}
        for t in terms:
            word = tuple(GenSym.from_text(s) for s in t.word)
            acc[word] = acc.get(word, Scalar(0)) + Scalar.from_json({"re": t.re, "im": t.im})
        return NCPoly(alphabet, acc)

    @staticmethod
    def poly_to_json(p: NCPoly) -> List[Dict[str, Any]]:
        return [t.model_dump() for t in CodecService.poly_to_terms(p)]

    # ---------- Rewrite systems ----------

    @staticmethod
    def presentation_to_document(p: Presentation) -> PresentationDocument:
        return PresentationDocument(
            name=p.name,
            n=p.n,
            order=p.order.name,
            rules=[
                RuleDocument(lhs=[g.text for g in r.lhs], rhs=CodecService.poly_to_terms(r.rhs))
                for r in p.rules
            ],
            certified_degree=p.certified_degree,
        )

    @staticmethod
    def document_to_presentation(doc: PresentationDocument) -> Presentation:
        """Rebuild generators and relations by name, then attach the stored rules."""
        base = base_presentation(doc.name, doc.n)
        if base.order.name != doc.order:
            raise ParameterError(
                f"Stored system for {doc.name} uses order {doc.order}, expected {base.order.name}"
            )
        rules = [
            Rule(
                tuple(GenSym.from_text(s) for s in r.lhs),
                CodecService.terms_to_poly(r.rhs, base.alphabet),
            )
            for r in doc.rules
        ]
        return base.with_rules(rules, doc.certified_degree)

    # ---------- Cocycles ----------

    @staticmethod
    def cocycle_to_document(
        module: str,
        n: int,
        values: Mapping[GenSym, NCPoly],
        domain: str = "",
    ) -> CocycleDocument:
        return CocycleDocument(
            module=module,
            n=n,
            domain=domain,
            values={g.text: CodecService.poly_to_terms(v) for g, v in values.items()},
        )

    @staticmethod
    def document_values(
        doc: CocycleDocument,
        module_alphabet: Alphabet,
        domain_alphabet: Optional[Alphabet] = None,
    ) -> Dict[GenSym, NCPoly]:
        """Value table with keys checked against the domain alphabet."""
        domain_alphabet = domain_alphabet or module_alphabet
        table: Dict[GenSym, NCPoly] = {}
        for key, raw in doc.values.items():
            g = GenSym.from_text(key)
            domain_alphabet.check_word((g,))
            if isinstance(raw, str):
                table[g] = parse_expr(raw, module_alphabet)
            else:
                table[g] = CodecService.terms_to_poly(raw, module_alphabet)
        logger.debug(f"Decoded cocycle table with {len(table)} values over {module_alphabet.name}")
        return table
