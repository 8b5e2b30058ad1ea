from pydantic import BaseModel, ConfigDict, Field, computed_field
from typing import Dict, List, Optional

SCHEMA_VERSION = 1


class CheckResult(BaseModel):
    id: str
    claim: str
    expected: str
    computed: str
    passed: bool
    seconds: float = 0.0


class VerificationReport(BaseModel):
    checks: List[CheckResult] = []
    skipped: List[str] = []
    notes: List[str] = []

    @computed_field
    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> List[CheckResult]:
        return [check for check in self.checks if not check.passed]


class GroupFile(BaseModel):
    """A group supplied as a JSON Cayley table."""
    name: str = "G"
    table: List[List[int]]
    labels: Optional[List[str]] = None


class GroupExport(BaseModel):
    name: str
    order: int
    labels: List[str]
    table: List[List[int]]


class ElementExport(BaseModel):
    index: int
    label: str
    minimal_sets: List[str]


class LambdaExport(BaseModel):
    size: int
    elements: List[ElementExport]
    table_ref: str = "table_indices.csv"


class OrbitExport(BaseModel):
    representative: str
    members: List[str]


class StructureExport(BaseModel):
    idempotents: List[str]
    zero: Optional[str] = None
    poset_edges: List[List[str]]
    maximal_ideal: Optional[List[str]] = None
    orbits: List[OrbitExport]


class AutExport(BaseModel):
    group_order: int
    group_name: str
    lambda_order: int
    lambda_name: str
    kernel_size: int
    lifted_normal: bool


class LambdaReport(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    schema_version: int = SCHEMA_VERSION
    group: GroupExport
    lambda_: LambdaExport = Field(alias="lambda")
    structure: StructureExport
    aut: Optional[AutExport] = None
    t17: Optional[Dict[str, Dict[str, str]]] = None
