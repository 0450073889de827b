"""Request and response shapes for the HTTP service."""
from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field, model_validator

IndexName = Literal["J", "EE", "RVa", "RVb"]


class GraphSource(BaseModel):
    """Where the graphs of a request come from.

    Sources combine; the resolved list keeps this order: inline edge
    lists, then alkane names, then whole enumerated families. complete
    only affects the cyclic family (include every enumerated graph, even
    ones the bundled reference tables skip).
    """

    edge_lists: list[str] = Field(default_factory=list)
    names: list[str] = Field(default_factory=list)
    alkanes: Optional[int] = Field(default=None, ge=1, le=12)
    cyclic: Optional[int] = Field(default=None, ge=3, le=7)
    complete: bool = False

    @model_validator(mode="after")
    def _at_least_one_source(self):
        if not (self.edge_lists or self.names or self.alkanes or self.cyclic):
            raise ValueError("no graph source given")
        return self


class IndexRow(BaseModel):
    name: str
    n: int
    m: int
    mu: int
    tau: int
    degrees: str
    J: float
    EE: float
    RVa: float
    RVb: float


class IndicesRequest(GraphSource):
    pass


class IndicesResponse(BaseModel):
    rows: list[IndexRow]


class EnumerateRequest(BaseModel):
    family: Literal["alkanes", "cyclic"]
    n: int
    complete: bool = False


class EnumerateResponse(BaseModel):
    count: int
    rows: list[IndexRow]


class ParseNamesRequest(BaseModel):
    names: list[str] = Field(min_length=1)


class ParsedName(BaseModel):
    name: str
    ok: bool
    n: Optional[int] = None
    m: Optional[int] = None
    degrees: Optional[str] = None
    edge_list: Optional[str] = None
    error: Optional[str] = None


class ParseNamesResponse(BaseModel):
    results: list[ParsedName]


class RankRequest(GraphSource):
    index: IndexName


class RankResponse(BaseModel):
    index: IndexName
    positions: list[int]
    groups: list[list[int]]
    rows: list[IndexRow]


class CorrelatePair(BaseModel):
    x: IndexName
    y: IndexName
    r_squared: float


class CorrelateResponse(BaseModel):
    count: int
    pairs: list[CorrelatePair]


class DegeneracyRequest(GraphSource):
    index: IndexName
    tol: float = Field(default=1e-9, gt=0)


class DegeneracyGroup(BaseModel):
    rows: list[int]
    names: list[str]
    value: float


class DegeneracyResponse(BaseModel):
    index: IndexName
    groups: list[DegeneracyGroup]


class CospectralRequest(GraphSource):
    method: Literal["exact", "float"] = "exact"


class CospectralPairOut(BaseModel):
    rows: list[int]
    names: list[str]


class CospectralResponse(BaseModel):
    method: str
    pairs: list[CospectralPairOut]


class PlotRequest(GraphSource):
    x: IndexName
    y: IndexName
    title: str = ""


class PlotResponse(BaseModel):
    svg: str


class ReproduceRequest(BaseModel):
    tables: list[int] = Field(default_factory=lambda: [1, 2, 3, 4, 5])


class IssueOut(BaseModel):
    table: int
    row: str
    column: str
    printed: str
    recomputed: str
    deviation: Optional[float] = None
    known: bool
    note: str = ""


class TableReportOut(BaseModel):
    table: int
    rows: int
    cells_checked: int
    known_errata: int
    unexpected: int
    issues: list[IssueOut]
    notes: list[str]


class ReproduceResponse(BaseModel):
    ok: bool
    text: str
    tables: list[TableReportOut]


class RonRequest(BaseModel):
    positive_only: bool = False


class FitOut(BaseModel):
    slope: float
    intercept: float
    r_squared: float
    count: int


class RonResponse(BaseModel):
    fits: dict[str, FitOut]


class HealthResponse(BaseModel):
    status: str
    version: str
