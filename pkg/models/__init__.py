from models.chain import ChainModel, ChainTermModel, TriplePointRecordModel
from models.command import CommandResult
from models.quandle import GroupModel, QuandleModel
from models.report import (
    ClassCoordinatesModel,
    HomologyGroupModel,
    ScanReport,
    VerificationReport,
    Violation,
)

__all__ = [
    "ChainModel",
    "ChainTermModel",
    "TriplePointRecordModel",
    "CommandResult",
    "GroupModel",
    "QuandleModel",
    "ClassCoordinatesModel",
    "HomologyGroupModel",
    "ScanReport",
    "VerificationReport",
    "Violation",
]
