# filename: app/schemas/models.py

import re
from typing import Dict, List, Literal, Tuple

from pydantic import BaseModel, Field, computed_field, field_validator

from app.core.config import FORMAT_VERSION

StructureKind = Literal[
    "algebra",
    "diff_algebra",
    "diff_bimodule",
    "ainf2",
    "diff_ainf2",
    "diff_morphism",
    "cochain",
    "crossed_module",
    "hbimod",
    "diff_hbimod",
    "diffass2",
]

_RATIONAL = re.compile(r"^-?\d+(/[1-9]\d*)?$")


class MapBlock(BaseModel):
    srcs: List[str] = Field(..., examples=[["A", "A"]])
    dst: str = Field(..., examples=["A"])
    entries: List[Tuple[List[int], str]] = Field(
        default_factory=list, examples=[[[[0, 0, 0], "1"], [[1, 0, 1], "-1/2"]]]
    )

    @field_validator("entries")
    @classmethod
    def rationals_are_exact(cls, entries):
        for index, literal in entries:
            if not _RATIONAL.match(literal):
                raise ValueError(f"'{literal}' at {index} is not an exact rational 'p' or 'p/q'")
            if any(i < 0 for i in index):
                raise ValueError(f"negative index {index}")
        return entries


class StructureFile(BaseModel):
    version: int = FORMAT_VERSION
    kind: StructureKind
    dims: Dict[str, int] = Field(default_factory=dict, examples=[{"A": 2}])
    maps: Dict[str, MapBlock] = Field(default_factory=dict)
    params: Dict[str, int] = Field(default_factory=dict)
    parts: Dict[str, "StructureFile"] = Field(default_factory=dict)

    @field_validator("version")
    @classmethod
    def known_version(cls, version):
        if version != FORMAT_VERSION:
            raise ValueError(f"unsupported format version {version}, expected {FORMAT_VERSION}")
        return version


class Violation(BaseModel):
    tag: str
    point: List[int]
    lhs: List[str]
    rhs: List[str]


class CheckReport(BaseModel):
    structure: str
    ok: bool = True
    checked: List[str] = []
    counts: Dict[str, int] = {}
    violations: List[Violation] = []

    def failed_tags(self) -> List[str]:
        return [tag for tag in self.checked if self.counts.get(tag)]

    def summary(self) -> str:
        if self.ok:
            return f"{self.structure}: pass ({len(self.checked)} identity families)"
        return f"{self.structure}: FAIL {', '.join(self.failed_tags())}"


class McReport(BaseModel):
    difference_identity: bool
    graph_criterion: bool
    maurer_cartan: bool
    residual: List[Tuple[List[int], str]] = []
    agree: bool


class ConvertResponse(BaseModel):
    file: StructureFile
    relation: Literal["identical", "alpha-isomorphic", "converted"] = "converted"
    note: str = ""


class RoundtripStep(BaseModel):
    name: str
    ok: bool
    detail: str = ""


class RoundtripReport(BaseModel):
    kind: str
    steps: List[RoundtripStep] = []

    @computed_field
    @property
    def ok(self) -> bool:
        return all(step.ok for step in self.steps)


StructureFile.model_rebuild()
