from typing import Any

from pydantic import BaseModel, Field


class Violation(BaseModel):
    condition: str
    witness: list[Any] = Field(default_factory=list)


class VerificationReport(BaseModel):
    subject: str
    passed: bool
    violations: list[Violation] = Field(default_factory=list)


class HomologyGroupModel(BaseModel):
    degree: int
    flavor: str
    free_rank: int
    torsion: list[int] = Field(default_factory=list)

    def describe(self) -> str:
        parts = ["Z"] * self.free_rank + [f"Z_{d}" for d in self.torsion]
        return " ⊕ ".join(parts) if parts else "0"


class ClassCoordinatesModel(BaseModel):
    free: list[int] = Field(default_factory=list)
    torsion: list[int] = Field(default_factory=list)
    torsion_orders: list[int] = Field(default_factory=list)

    @property
    def is_zero(self) -> bool:
        return not any(self.free) and not any(self.torsion)


class ScanReport(BaseModel):
    mode: str
    seed: int | None = None
    trials: int | None = None
    degree: int
    max_support: int
    min_support: int
    classes: int
    supports_checked: int
    nontrivial_kernels: int
    counterexamples: list[dict] = Field(default_factory=list)
