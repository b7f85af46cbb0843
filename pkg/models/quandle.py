from pydantic import BaseModel, model_validator


class QuandleModel(BaseModel):
    """Quandle JSON: {"labels": [...], "table": [[...]], "rho": [...]}; row = left argument."""

    labels: list[str]
    table: list[list[int]]
    rho: list[int] | None = None

    @model_validator(mode="after")
    def check_shape(self):
        q = len(self.labels)
        if len(self.table) != q or any(len(row) != q for row in self.table):
            raise ValueError(f"table must be {q}x{q}")
        if self.rho is not None and len(self.rho) != q:
            raise ValueError(f"rho must have {q} entries")
        return self


class GroupModel(BaseModel):
    """Group export: size m, generators and elements in tuple notation."""

    size: int
    order: int
    generators: list[str]
    elements: list[str]
