"""
Pydantic schemas for command reports.

Field order is declaration order, so the JSON output of every command is
deterministic.
"""

from typing import List, Optional

from pydantic import BaseModel, Field

# ============================================================================
# SHARED ENTRIES
# ============================================================================


class TermEntry(BaseModel):
    """One η-basis term of an element of T(n,d)"""

    triple: str = Field(..., description="Letters as b:r:s separated by commas")
    coef: str = Field(..., description="Exact rational coefficient")


class CharacterTerm(BaseModel):
    key: str = Field(..., description="Multipartition, components separated by '|'")
    coef: int


class CheckEntry(BaseModel):
    name: str
    ok: bool


class FailureEntry(BaseModel):
    axiom: str
    detail: str


# ============================================================================
# REPORTS
# ============================================================================


class VerifyReport(BaseModel):
    """Outcome of heredity-data verification"""

    algebra: str
    passed: bool
    conforming: bool
    checks: List[CheckEntry] = Field(default_factory=list)
    failures: List[FailureEntry] = Field(default_factory=list)


class BasisEntry(BaseModel):
    triple: str
    c_factorial: int
    parity: int


class BasisReport(BaseModel):
    """Orbit triples of T(n,d)"""

    algebra: str
    n: int
    d: int
    dim: int
    classical_dim: Optional[int] = Field(
        None, description="C(n²+d-1, d), reported for the trivial algebra only"
    )
    triples: List[BasisEntry] = Field(default_factory=list)


class ProductReport(BaseModel):
    algebra: str
    n: int
    d: int
    left: str
    right: str
    result: List[TermEntry] = Field(default_factory=list)


class CoproductTerm(BaseModel):
    left: str
    right: str
    coef: str


class CoproductReport(BaseModel):
    algebra: str
    n: int
    d: int
    element: str
    terms: List[CoproductTerm] = Field(default_factory=list)


class CharacterReport(BaseModel):
    """ch Δ(λ) from idempotent ranks, tableau weights and the symmetric-function pipeline"""

    algebra: str
    n: int
    d: int
    shape: str
    dimension: int
    monomials: List[CharacterTerm] = Field(default_factory=list)
    schur: List[CharacterTerm] = Field(default_factory=list)
    tableau_schur: List[CharacterTerm] = Field(default_factory=list)
    pipeline_schur: List[CharacterTerm] = Field(default_factory=list)
    agree: bool


class FiltrationStepReport(BaseModel):
    index: int
    pset: List[int]
    highest_weight: List[List[int]]
    parity: Optional[int]
    rank: int
    quotient_dim: int
    expected_dim: int
    weight_ok: bool
    y_annihilation_ok: bool


class FiltrationReportModel(BaseModel):
    """Certified chain of submodules with standard quotients"""

    algebra: str
    la: List[int]
    c: int
    label: int
    n: int
    N: Optional[int] = None
    tensor_dim: int
    steps: List[FiltrationStepReport] = Field(default_factory=list)
    skipped: List[List[List[int]]] = Field(default_factory=list)
    generation_ok: bool
    dimension_sum_ok: bool
    certified: bool


class MultiplicityEntry(BaseModel):
    shape: str
    expected: int
    observed: int


class MultiplicityReportModel(BaseModel):
    """Standard multiplicities of Δ(λ) ⊗ Δ(μ) against Littlewood-Richardson products"""

    algebra: str
    la: str
    mu: str
    n: int
    multiplicities: List[MultiplicityEntry] = Field(default_factory=list)
    top_ok: bool
    product_ok: bool
    decol_ok: bool
    passed: bool


class TruncationReport(BaseModel):
    algebra: str
    shape: str
    n: int
    N: int
    dim: int
    monomials: List[CharacterTerm] = Field(default_factory=list)
    schur: List[CharacterTerm] = Field(default_factory=list)


__all__ = [
    "BasisEntry",
    "BasisReport",
    "CharacterReport",
    "CharacterTerm",
    "CheckEntry",
    "CoproductReport",
    "CoproductTerm",
    "FailureEntry",
    "FiltrationReportModel",
    "FiltrationStepReport",
    "MultiplicityEntry",
    "MultiplicityReportModel",
    "ProductReport",
    "TermEntry",
    "TruncationReport",
    "VerifyReport",
]
