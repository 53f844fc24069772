from models.report_models import (
    CheckResult,
    DomainFailure,
    DomainReport,
    LemmaReport,
)
from models.document_models import (
    CocycleDocument,
    PresentationDocument,
    RuleDocument,
    TermDocument,
)
