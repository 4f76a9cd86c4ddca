from typing import Annotated, List, Optional

from pydantic import BaseModel, BeforeValidator, Field, model_validator

from app.core.config import settings
from app.utils.int_codec import IntCodec

JsonInt = Annotated[int, BeforeValidator(IntCodec.decode)]


class JobConfig(BaseModel):

    min_poly: List[JsonInt] = Field(..., min_length=2, description="Minimal polynomial, constant term first, monic")
    a: List[JsonInt] = Field(..., description="Power-basis coordinates of a")
    b: List[JsonInt] = Field(..., description="Power-basis coordinates of b")
    c: List[JsonInt] = Field(..., description="Power-basis coordinates of c")
    oracle_degree_bound: Optional[int] = Field(None, ge=1, description="Override for the oracle search bound")

    @model_validator(mode="after")
    def _check_shape(self) -> "JobConfig":
        if self.min_poly[-1] != 1:
            raise ValueError(f"min_poly must be monic, leading coefficient is {self.min_poly[-1]}")
        n = len(self.min_poly) - 1
        if n > settings.MAX_RING_DEGREE:
            raise ValueError(f"ring degree {n} exceeds cap {settings.MAX_RING_DEGREE}")
        for name in ("a", "b", "c"):
            if len(getattr(self, name)) != n:
                raise ValueError(f"{name} needs {n} coordinates, got {len(getattr(self, name))}")
        return self
