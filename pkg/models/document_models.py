from typing import Dict, List, Union

from pydantic import BaseModel, Field


class TermDocument(BaseModel):
    """One term of a polynomial: word as symbol list, exact coefficient parts."""
    word: List[str] = Field(default_factory=list, description="Symbols, e.g. [\"u[1,2]'\", \"z\"]")
    re: str = Field(default="0", description="Real part, p/q")
    im: str = Field(default="0", description="Imaginary part, p/q")


class RuleDocument(BaseModel):
    lhs: List[str]
    rhs: List[TermDocument] = Field(default_factory=list)


class PresentationDocument(BaseModel):
    """A completed rewrite system, reloadable without recompletion."""
    name: str
    n: int
    order: str = Field(default="deglex", description="deglex | su2-graded")
    rules: List[RuleDocument] = Field(default_factory=list)
    certified_degree: int = 0


class CocycleDocument(BaseModel):
    """Cocycle value table. Values are term lists or expression text."""
    module: str = Field(..., description="Ambient presentation name, e.g. H_n")
    n: int = 2
    domain: str = Field(default="", description="Domain presentation; empty means the module itself")
    values: Dict[str, Union[List[TermDocument], str]] = Field(default_factory=dict)
