"""Request and response models for the service endpoints.

All responses share one envelope: ``command``, ``inputs`` (echo of the parsed
request), ``result`` (command-specific payload), plus ``witnesses`` and
``skipped`` for obstruction sweeps.  Integers beyond the float64-exact range
(|x| > 2^53) are serialized as decimal strings so JSON consumers cannot
silently lose precision; smaller ones stay JSON numbers.
"""

from __future__ import annotations

from typing import Any, Optional

from pydantic import BaseModel, Field, field_validator

JSON_SAFE_INT = 1 << 53


def encode_big_ints(value: Any) -> Any:
    """Recursively convert ints outside the float64-exact range to strings."""
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return value if abs(value) <= JSON_SAFE_INT else str(value)
    if isinstance(value, (list, tuple)):
        return [encode_big_ints(v) for v in value]
    if isinstance(value, dict):
        return {k: encode_big_ints(v) for k, v in value.items()}
    return value


class Envelope(BaseModel):
    command: str
    inputs: dict
    result: dict
    witnesses: Optional[list] = None
    skipped: Optional[list] = None

    def payload(self) -> dict:
        out = {"command": self.command, "inputs": self.inputs,
               "result": self.result}
        if self.witnesses is not None:
            out["witnesses"] = self.witnesses
        if self.skipped is not None:
            out["skipped"] = self.skipped
        return out


def _coerce_int(v):
    if isinstance(v, str):
        return int(v)
    return v


class SigRequest(BaseModel):
    knot: str = Field(description="knot expression, e.g. 'C(2,201;T(4,25))'")
    angle: str = Field(description="angle a/m on the unit circle, e.g. '1/10'")


class CgSurgeryRequest(BaseModel):
    knot: str
    m: int = Field(ge=2, description="character order; the surgery slope is m^2 (over q)")
    a: int = Field(ge=1, description="meridian exponent, coprime to m")
    q: Optional[int] = Field(default=None, ge=1,
                             description="rational surgery denominator; omit for integer surgery")

    _coerce = field_validator("m", "a", "q", mode="before")(_coerce_int)


class CgLensRequest(BaseModel):
    p: int = Field(ge=2)
    q: int = Field(ge=1)
    order: int = Field(ge=2, description="order of the character")
    a: int = Field(ge=1, description="image of the first chain meridian")

    _coerce = field_validator("p", "q", "order", "a", mode="before")(_coerce_int)


class PlumbingSpec(BaseModel):
    a: int
    n: list[int] = Field(min_length=1)


class H1Request(BaseModel):
    matrix: Optional[list[list[int]]] = None
    plumbing: Optional[PlumbingSpec] = None

    @field_validator("matrix", mode="before")
    @classmethod
    def _matrix_ints(cls, v):
        if v is None:
            return v
        return [[int(x) for x in row] for row in v]


class ObstructRequest(BaseModel):
    knot: str
    m: int = Field(ge=2)
    q: Optional[int] = Field(default=None, ge=1)

    _coerce = field_validator("m", "q", mode="before")(_coerce_int)


class FusionMinmaxRequest(BaseModel):
    lens: list[tuple[int, int]] = Field(min_length=1,
                                        description="lens-space summands (p, q)")


class FusionSurgeryRequest(BaseModel):
    knot: str
    m: int = Field(ge=2)

    _coerce = field_validator("m", mode="before")(_coerce_int)


class FamilyRequest(BaseModel):
    v: int = Field(ge=1, le=3,
                   description="family size; v=3 already uses ~2M-digit parameters")


class ReproduceRequest(BaseModel):
    pass
