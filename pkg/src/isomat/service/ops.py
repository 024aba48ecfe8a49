"""Service operations shared by the HTTP endpoints and the CLI client."""

from __future__ import annotations

from ..connectivity import analyze, conn_value_to_json
from ..fixtures import FIXTURES, fixture
from ..graph import Graph, find_split
from ..harness import run_campaign
from ..isotropic import build, element_key
from ..localeq import orbit
from .models import (
    AnalyzeRequest,
    AnalyzeResponse,
    CircuitsRequest,
    CircuitsResponse,
    FixtureResponse,
    GraphOut,
    GraphSpec,
    GroundElementModel,
    OrbitRequest,
    OrbitResponse,
    SplitModel,
    SplitResponse,
    VerifyRequest,
    VerifyResponse,
    WitnessModel,
)


class ServiceError(ValueError):
    """Invalid request content (unparseable graph, unknown name, bad size)."""


def resolve_graph(spec: GraphSpec) -> Graph:
    sources = [
        spec.fixture is not None,
        spec.text is not None,
        spec.hex is not None,
        spec.n is not None,
    ]
    if sum(sources) != 1:
        raise ServiceError(
            "specify exactly one graph source: fixture, text, hex, or n with edges/loops"
        )
    try:
        if spec.fixture is not None:
            return fixture(spec.fixture)
        if spec.text is not None:
            return Graph.from_text(spec.text)
        if spec.hex is not None:
            return Graph.from_hex(spec.hex)
        return Graph.from_edges(spec.n, spec.edges, spec.loops)
    except ValueError as exc:
        raise ServiceError(str(exc)) from exc


def _witness_model(w) -> WitnessModel:
    d = w.to_json_dict()
    return WitnessModel(
        kind=d["kind"],
        k=d["k"],
        lambda_value=d["lambda_value"],
        elements=None
        if d["elements"] is None
        else [GroundElementModel(**e) for e in d["elements"]],
        vertex_set=d["vertex_set"],
    )


def analyze_graph(req: AnalyzeRequest) -> AnalyzeResponse:
    g = resolve_graph(req.graph)
    report = analyze(g)
    return AnalyzeResponse(
        n=report.n,
        tau=conn_value_to_json(report.tau),
        kappa_star=report.kappa_star,
        kappa=report.kappa,
        kappa_B=conn_value_to_json(report.kappa_b),
        case_thm1=report.case_thm1,
        case_thm2=report.case_thm2,
        witnesses={name: _witness_model(w) for name, w in report.witnesses.items()},
    )


def split_graph(req: AnalyzeRequest) -> SplitResponse:
    g = resolve_graph(req.graph)
    s = find_split(g)
    if s is None:
        return SplitResponse(n=g.n, prime=True)
    return SplitResponse(
        n=g.n,
        prime=False,
        split=SplitModel(
            v1=sorted(s.v1), w1=sorted(s.w1), v2=sorted(s.v2), w2=sorted(s.w2)
        ),
    )


def smallest_circuit(req: CircuitsRequest) -> CircuitsResponse:
    g = resolve_graph(req.graph)
    if g.n == 0:
        raise ServiceError("the empty graph has no transverse circuits")
    found = build(g).min_transverse_circuit(size_cap=req.size_cap)
    if found is None:
        return CircuitsResponse(q=None, exceeded_cap=True, size_cap=req.size_cap)
    q, witness = found
    elements = [
        GroundElementModel(vertex=e.vertex, kind=e.kind)
        for e in sorted(witness, key=element_key)
    ]
    return CircuitsResponse(q=q, witness=elements, size_cap=req.size_cap)


def orbit_summary(req: OrbitRequest) -> OrbitResponse:
    g = resolve_graph(req.graph)
    o = orbit(g, member_cap=req.member_cap)
    return OrbitResponse(
        seed=GraphOut.from_graph(o.seed),
        size=o.size,
        min_degree=o.min_degree,
        representative=GraphOut.from_graph(o.representative),
        truncated=o.truncated,
    )


def run_verification(req: VerifyRequest) -> VerifyResponse:
    try:
        result = run_campaign(
            req.campaign, req.n, with_loops=req.with_loops, threads=req.threads
        )
    except ValueError as exc:
        raise ServiceError(str(exc)) from exc
    return VerifyResponse(
        campaign=result.name,
        params=result.params,
        graphs_checked=result.graphs_checked,
        case_counts=result.case_counts,
        stats=result.stats,
        failures=result.failures,
        passed=result.passed,
    )


def list_fixtures() -> list[str]:
    return sorted(FIXTURES)


def fixture_info(name: str) -> FixtureResponse:
    try:
        g = fixture(name)
    except ValueError as exc:
        raise ServiceError(str(exc)) from exc
    out = GraphOut.from_graph(g)
    return FixtureResponse(name=name, **out.model_dump())
