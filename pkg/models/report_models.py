from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field, computed_field


class CheckResult(BaseModel):
    """One exact check inside a report."""
    description: str = Field(..., description="What was checked")
    passed: bool = Field(..., alias="pass", description="True iff the identity held exactly")
    counterexample: Optional[str] = Field(None, description="Violating element, verbatim")
    inconclusive: bool = Field(default=False, description="Budget ran out before a verdict")

    class Config:
        populate_by_name = True


class LemmaReport(BaseModel):
    """Machine-readable outcome of one verification suite."""
    lemma_id: str = Field(..., description="Suite id, e.g. relate-cocycles")
    parameters: Dict[str, Any] = Field(default_factory=dict)
    checks: List[CheckResult] = Field(default_factory=list)
    caveats: List[str] = Field(default_factory=list)

    @computed_field(alias="pass")
    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(
        self,
        description: str,
        passed: bool,
        counterexample: Optional[str] = None,
        inconclusive: bool = False,
    ) -> CheckResult:
        check = CheckResult(
            description=description,
            passed=passed,
            counterexample=None if passed else counterexample,
            inconclusive=inconclusive,
        )
        self.checks.append(check)
        return check

    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks if not c.passed]


class DomainFailure(BaseModel):
    """A sampled pair whose product vanished or broke degree additivity."""
    kind: str = Field(..., description="zero_product | degree_not_additive | unit_not_neutral")
    x: str
    y: str
    product: str


class DomainReport(BaseModel):
    """Report of the zero-divisor test in Pol(SU_-1(2))."""
    samples: int
    seed: int
    max_alpha: int
    max_gamma: int
    pairs_checked: int = 0
    failures: List[DomainFailure] = Field(default_factory=list)

    @computed_field(alias="pass")
    @property
    def passed(self) -> bool:
        return not self.failures
