# filename: utils/checking.py

import logging
from typing import Sequence

from pydantic import BaseModel, ConfigDict

from app.core.config import MAX_VIOLATIONS_PER_TAG
from app.schemas.models import CheckReport, Violation
from utils.errors import DimensionError, StructureError
from utils.exactlin import MultiMap, Space, zero_map

logger = logging.getLogger(__name__)


def require_shape(name: str, m: MultiMap, srcs: Sequence[Space], dst: Space):
    expected = (tuple(s.dim for s in srcs), dst.dim)
    if m.signature() != expected:
        raise DimensionError(f"{name}: expected signature {expected}, got {m.signature()}")


class Reporter:
    """Collects identity checks into a ``CheckReport``.

    Each ``expect`` compares two multilinear maps on every tuple of basis
    vectors; disagreeing tuples are recorded under the identity's tag.
    """

    def __init__(self, structure: str):
        self.structure = structure
        self.checked: list[str] = []
        self.counts: dict[str, int] = {}
        self.violations: list[Violation] = []

    def expect(self, tag: str, lhs: MultiMap, rhs: MultiMap | None = None):
        if rhs is None:
            rhs = zero_map(lhs.srcs, lhs.dst)
        if tag not in self.checked:
            self.checked.append(tag)
        points = lhs.diff_points(rhs)
        if not points:
            return
        self.counts[tag] = self.counts.get(tag, 0) + len(points)
        for point in points[:MAX_VIOLATIONS_PER_TAG]:
            self.violations.append(
                Violation(
                    tag=tag,
                    point=list(point),
                    lhs=[str(v) for v in lhs.column(*point)],
                    rhs=[str(v) for v in rhs.column(*point)],
                )
            )

    def include(self, report: CheckReport, prefix: str = ""):
        for tag in report.checked:
            name = f"{prefix}{tag}"
            if name not in self.checked:
                self.checked.append(name)
        for tag, count in report.counts.items():
            self.counts[f"{prefix}{tag}"] = self.counts.get(f"{prefix}{tag}", 0) + count
        for v in report.violations:
            self.violations.append(v.model_copy(update={"tag": f"{prefix}{v.tag}"}))

    def finish(self) -> CheckReport:
        report = CheckReport(
            structure=self.structure,
            ok=not self.counts,
            checked=self.checked,
            counts=self.counts,
            violations=self.violations,
        )
        logger.debug(f"{self.structure}: {len(self.checked)} families checked, {len(self.counts)} violated")
        return report


def require(report: CheckReport, what: str):
    if not report.ok:
        raise StructureError(f"{what} failed: {', '.join(report.failed_tags())}", report)


class Structure(BaseModel):
    """Base for algebraic structures: immutable holders of spaces and maps."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)


def same_maps(x, y) -> bool:
    """Exact equality of two structures, walking nested fields down to their maps.

    Names and labels do not take part.
    """
    if isinstance(x, str) and isinstance(y, str):
        return True
    if isinstance(x, MultiMap) or isinstance(y, MultiMap):
        return isinstance(x, MultiMap) and isinstance(y, MultiMap) and x == y
    if isinstance(x, BaseModel) and isinstance(y, BaseModel):
        if type(x) is not type(y):
            return False
        return all(same_maps(getattr(x, name), getattr(y, name)) for name in type(x).model_fields)
    if isinstance(x, (tuple, list)) and isinstance(y, (tuple, list)):
        return len(x) == len(y) and all(same_maps(a, b) for a, b in zip(x, y))
    return x == y
