"""Run configuration models.

The JSON Schema in schemas/run_config.schema.json documents the same fields.
"""

import json
from typing import List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from src.lieb_thirring.params import SpectralParams, Theorem, parse_params
from src.operators.grid import Grid
from src.operators.potentials import Potential, from_descriptor
from src.utils.config import (
    EIG_TOL,
    GRID_CAP,
    QUAD_TOL,
    SCHEMA_VERSION,
    TAU_DEFAULT,
    WORKERS,
)

PotentialKind = Literal["gaussian", "box", "random-bandlimited", "constant"]


class GridSpec(BaseModel):
    model_config = ConfigDict(extra="forbid")

    n: int = Field(ge=4, description="points per axis (power of two)")
    length: float = Field(gt=0.0, description="box side L")

    @field_validator("n")
    @classmethod
    def _power_of_two(cls, n: int) -> int:
        if n & (n - 1):
            raise ValueError(f"points per axis must be a power of two, got N={n}")
        return n


class PotentialSpec(BaseModel):
    model_config = ConfigDict(extra="forbid")

    kind: PotentialKind
    amplitude: Tuple[float, float] = (1.0, 0.0)
    width: float = Field(default=1.0, gt=0.0)
    center: List[float] = Field(default_factory=list)
    seed: Optional[int] = None
    bandwidth: int = Field(default=4, ge=1)

    @field_validator("amplitude", mode="before")
    @classmethod
    def _complex_pair(cls, value):
        # a bare number means a real amplitude
        if isinstance(value, (int, float)):
            return (float(value), 0.0)
        return value


class ToleranceSpec(BaseModel):
    model_config = ConfigDict(extra="forbid")

    eigen_residual: float = Field(default=EIG_TOL, gt=0.0)
    classification_eps: Optional[float] = Field(default=None, gt=0.0)


class JobSpec(BaseModel):
    model_config = ConfigDict(extra="forbid")

    name: Optional[str] = None
    theorem: Literal["T1", "T1b", "T2"]
    d: int = Field(ge=1)
    s: float = Field(gt=0.0)
    p: float = Field(ge=1.0)
    tau: float = Field(default=TAU_DEFAULT, gt=0.0)
    grid: GridSpec
    potential: PotentialSpec
    tolerances: ToleranceSpec = Field(default_factory=ToleranceSpec)
    seed: Optional[int] = None

    @model_validator(mode="after")
    def _admissible(self) -> "JobSpec":
        # DomainError is a ValueError, so pydantic reports the violated hypothesis
        parse_params(self.theorem, self.d, self.s, self.p, self.tau)
        if self.potential.kind == "random-bandlimited" and self.potential.seed is None and self.seed is None:
            raise ValueError("random-bandlimited potentials need a seed (potential.seed or job seed)")
        if self.potential.center and len(self.potential.center) != self.d:
            raise ValueError(f"potential center has {len(self.potential.center)} coordinates, expected d={self.d}")
        if self.grid.n ** self.d > GRID_CAP:
            raise ValueError(f"grid of {self.grid.n}^{self.d} points exceeds the cap {GRID_CAP}")
        return self

    @property
    def label(self) -> str:
        return self.name or f"{self.theorem}_d{self.d}_s{self.s:g}_p{self.p:g}_tau{self.tau:g}"

    def spectral_params(self) -> SpectralParams:
        return parse_params(self.theorem, self.d, self.s, self.p, self.tau)

    def build_grid(self) -> Grid:
        return Grid(self.d, self.grid.n, self.grid.length)

    def build_potential(self, grid: Grid) -> Potential:
        descriptor = self.potential.model_dump()
        if descriptor["seed"] is None:
            descriptor["seed"] = self.seed
        return from_descriptor(grid, descriptor)

    def build(self) -> Tuple[Theorem, Grid, SpectralParams, Potential]:
        grid = self.build_grid()
        return Theorem.parse(self.theorem), grid, self.spectral_params(), self.build_potential(grid)


class RunConfig(BaseModel):
    model_config = ConfigDict(extra="forbid")

    schema_version: Literal[1] = SCHEMA_VERSION
    output_dir: Optional[str] = None
    workers: int = Field(default=WORKERS, ge=1)
    quadrature_tol: float = Field(default=QUAD_TOL, gt=0.0)
    jobs: List[JobSpec] = Field(min_length=1)

    def canonical(self) -> dict:
        return self.model_dump(mode="json")


def load_run_config(path: str) -> RunConfig:
    with open(path, encoding="utf-8") as f:
        return RunConfig.model_validate(json.load(f))
