# filename: app/schemas/__init__.py

from .models import (
    StructureKind,
    MapBlock,
    StructureFile,
    Violation,
    CheckReport,
    McReport,
    ConvertResponse,
    RoundtripStep,
    RoundtripReport
)
