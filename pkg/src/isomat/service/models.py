"""Pydantic request/response schemas for the HTTP service and the CLI."""

from __future__ import annotations

from typing import Literal, Optional, Union

from pydantic import BaseModel, Field

from ..graph import Graph

ConnJson = Union[int, Literal["inf"]]


class GraphSpec(BaseModel):
    """One graph, named by exactly one source.

    Either a built-in fixture name, the text format, the compact "n:hex"
    encoding, or an explicit vertex count with edge and loop lists.
    """

    fixture: Optional[str] = None
    text: Optional[str] = None
    hex: Optional[str] = None
    n: Optional[int] = None
    edges: list[tuple[int, int]] = Field(default_factory=list)
    loops: list[int] = Field(default_factory=list)


class GraphOut(BaseModel):
    n: int
    edges: list[tuple[int, int]]
    loops: list[int]
    text: str
    hex: str

    @classmethod
    def from_graph(cls, g: Graph) -> "GraphOut":
        edges = [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if g.has_edge(u, v)]
        loops = [v for v in range(g.n) if g.has_loop(v)]
        return cls(n=g.n, edges=edges, loops=loops, text=g.to_text(), hex=g.to_hex())


class GroundElementModel(BaseModel):
    vertex: int
    kind: Literal["phi", "chi", "psi"]


class WitnessModel(BaseModel):
    kind: str
    k: int
    lambda_value: int
    elements: Optional[list[GroundElementModel]] = None
    vertex_set: Optional[list[int]] = None


class AnalyzeRequest(BaseModel):
    graph: GraphSpec


class AnalyzeResponse(BaseModel):
    n: int
    tau: ConnJson
    kappa_star: int
    kappa: int
    kappa_B: ConnJson
    case_thm1: int
    case_thm2: int
    witnesses: dict[str, WitnessModel]


class SplitModel(BaseModel):
    v1: list[int]
    w1: list[int]
    v2: list[int]
    w2: list[int]


class SplitResponse(BaseModel):
    n: int
    prime: bool
    split: Optional[SplitModel] = None


class CircuitsRequest(BaseModel):
    graph: GraphSpec
    size_cap: Optional[int] = None


class CircuitsResponse(BaseModel):
    q: Optional[int] = None
    witness: Optional[list[GroundElementModel]] = None
    exceeded_cap: bool = False
    size_cap: Optional[int] = None


class OrbitRequest(BaseModel):
    graph: GraphSpec
    member_cap: int = 5_000_000


class OrbitResponse(BaseModel):
    seed: GraphOut
    size: int
    min_degree: Optional[int]
    representative: GraphOut
    truncated: bool


class VerifyRequest(BaseModel):
    campaign: str
    n: int
    with_loops: bool = False
    threads: Optional[int] = None


class VerifyResponse(BaseModel):
    campaign: str
    params: dict
    graphs_checked: int
    case_counts: dict[str, int]
    stats: dict[str, int]
    failures: list[str]
    passed: bool


class FixtureResponse(GraphOut):
    name: str
