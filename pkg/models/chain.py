from pydantic import BaseModel, Field, field_validator


class ChainTermModel(BaseModel):
    coeff: int
    y: str | None = None
    x: list[int]


class ChainModel(BaseModel):
    """Chain JSON: {"degree": n, "terms": [{"coeff": k, "y": "α", "x": [...]}]}."""

    degree: int
    terms: list[ChainTermModel] = Field(default_factory=list)

    @field_validator("terms")
    @classmethod
    def check_lengths(cls, terms, info):
        degree = info.data.get("degree")
        for term in terms:
            if degree is not None and len(term.x) != degree:
                raise ValueError(f"term {term.x} does not have degree {degree}")
        return terms


class TriplePointRecordModel(BaseModel):
    sign: int
    y: str | None = None
    x: list[int]

    @field_validator("sign")
    @classmethod
    def check_sign(cls, value):
        if value not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        return value

    @field_validator("x")
    @classmethod
    def check_colors(cls, value):
        if len(value) != 3:
            raise ValueError("a triple point carries exactly three sheet colors")
        return value
