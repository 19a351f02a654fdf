"""Request and response models for the JSON service.

Wire conventions: polynomials are arrays of decimal integer strings with
the constant term first; rationals are 'p/q' or decimal strings; matrices
are row-major arrays of decimal strings; every response is a verdict
carrying status, witness payload, assumptions and the bounds that were in
effect (so unknown outcomes are reproducible).
"""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field


class Verdict(BaseModel):
    status: Literal["yes", "no", "unknown", "error"]
    witness: Optional[dict] = None
    assumptions: list[str] = Field(default_factory=list)
    bounds_used: dict = Field(default_factory=dict)
    error: Optional[dict] = None


class SalemCheckRequest(BaseModel):
    poly: list[str]
    tol: str = "1/1000000000000"


class SalemEnumRequest(BaseModel):
    a_min: int = -8
    a_max: int = 8
    b_min: int = -8
    b_max: int = 8


class SalemEquivRequest(BaseModel):
    poly1: list[str]
    poly2: list[str]
    power_bound: int = 12


class SymbolSpec(BaseModel):
    name: str
    interval: Optional[list[str]] = None
    independent: Optional[bool] = None


class TermSpec(BaseModel):
    sym: str
    coef: str


class MuT1Spec(BaseModel):
    symbols: list[SymbolSpec] = Field(default_factory=list)
    entries: list[list[TermSpec]]


class EntryT2Spec(BaseModel):
    x: list[TermSpec]
    y: list[TermSpec]


class MuT2Spec(BaseModel):
    family: Literal["osc2", "d"] = "osc2"
    symbols: list[SymbolSpec] = Field(default_factory=list)
    entries: list[EntryT2Spec]


class MuCheckT1Request(BaseModel):
    mu: MuT1Spec
    poly: list[str]
    offset_bound: int = 64


class DecideT1Request(BaseModel):
    mu: MuT1Spec
    coeff_height: int = 10
    degree_bound: Optional[int] = None
    offset_bound: int = 64


class DecideT2Request(BaseModel):
    mu: MuT2Spec


class BuildLatticeRequest(BaseModel):
    family: Literal["osc1", "osc2", "d"]
    poly: Optional[list[str]] = None  # osc1
    q: Optional[int] = None  # osc1
    mu: Optional[MuT2Spec] = None  # osc2 / d
    seed: int = 0


class VerifyLatticeRequest(BaseModel):
    lattice: dict
    word_length: Optional[int] = None


class GammaSpec(BaseModel):
    poly: list[str]
    q: int
    seed: int = 0


class CommensurableRequest(BaseModel):
    gamma1: GammaSpec
    gamma2: GammaSpec
    power_bound: int = 12
    search_bound: int = 8


class BchCheckRequest(BaseModel):
    t: list[str] = Field(default_factory=lambda: ["1", "0"])
    t_dot: list[str] = Field(default_factory=lambda: ["0", "1"])
    mu: Optional[MuT2Spec] = None  # defaults to the q = 0 odd family
    grid: Optional[int] = None  # run an n x n rational grid instead
