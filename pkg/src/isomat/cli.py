"""Command-line front end.

A thin client over the service layer: every subcommand builds the same
request models the HTTP endpoints accept and either calls the handlers
in-process (default) or sends them to a running server via --server.

Exit codes: 0 success, 1 theorem violation or counterexample found,
2 usage error (unparseable graph, unknown name, size guard).
"""

from __future__ import annotations

import json
import sys
from typing import Optional

import click

from . import __version__
from .harness import CampaignResult, write_report
from .service import ops
from .service.models import (
    AnalyzeRequest,
    AnalyzeResponse,
    CircuitsRequest,
    CircuitsResponse,
    GraphSpec,
    OrbitRequest,
    OrbitResponse,
    SplitResponse,
    VerifyRequest,
    VerifyResponse,
)

_ENDPOINTS = {
    "analyze": (ops.analyze_graph, AnalyzeResponse),
    "split": (ops.split_graph, SplitResponse),
    "circuits": (ops.smallest_circuit, CircuitsResponse),
    "orbit": (ops.orbit_summary, OrbitResponse),
    "verify": (ops.run_verification, VerifyResponse),
}


def _call(server: Optional[str], endpoint: str, request) -> object:
    handler, response_cls = _ENDPOINTS[endpoint]
    if server is None:
        try:
            return handler(request)
        except ops.ServiceError as exc:
            raise click.UsageError(str(exc)) from exc
    import httpx

    url = server.rstrip("/") + "/" + endpoint
    try:
        resp = httpx.post(url, json=request.model_dump(mode="json"), timeout=None)
    except httpx.HTTPError as exc:
        raise click.ClickException(f"cannot reach {url}: {exc}") from exc
    if resp.status_code >= 400:
        detail = resp.json().get("detail", resp.text) if resp.content else resp.text
        raise click.UsageError(f"server rejected request: {detail}")
    return response_cls.model_validate(resp.json())


def _parse_edges(text: str) -> list[tuple[int, int]]:
    edges = []
    for part in filter(None, (p.strip() for p in text.split(","))):
        try:
            u, v = part.split("-")
            edges.append((int(u), int(v)))
        except ValueError:
            raise click.UsageError(f"bad edge {part!r}; expected like 0-1")
    return edges


def _parse_loops(text: str) -> list[int]:
    try:
        return [int(p) for p in filter(None, (p.strip() for p in text.split(",")))]
    except ValueError:
        raise click.UsageError(f"bad loop list {text!r}; expected like 0,2")


def _graph_options(fn):
    fn = click.option("--fixture", "fixture_name", help="Built-in graph name.")(fn)
    fn = click.option("--file", "file_path", type=click.Path(exists=True), help="Graph text file.")(fn)
    fn = click.option("--hex", "hex_code", help='Compact "n:hex" encoding.')(fn)
    fn = click.option("--edges", help='Inline edge list like "0-1,1-2".')(fn)
    fn = click.option("--n", "n_vertices", type=int, help="Vertex count for --edges input.")(fn)
    fn = click.option("--loops", help='Looped vertices like "0,2".')(fn)
    return fn


def _common_options(fn):
    fn = click.option("--server", help="Base URL of a running isomat service.")(fn)
    fn = click.option("--json", "as_json", is_flag=True, help="Machine-readable output.")(fn)
    return fn


def _spec_from_flags(fixture_name, file_path, hex_code, edges, n_vertices, loops) -> GraphSpec:
    if file_path is not None:
        with open(file_path) as fh:
            return GraphSpec(text=fh.read())
    if edges is not None or loops is not None or n_vertices is not None:
        if n_vertices is None:
            raise click.UsageError("--edges/--loops input needs --n")
        return GraphSpec(
            n=n_vertices,
            edges=_parse_edges(edges or ""),
            loops=_parse_loops(loops or ""),
        )
    return GraphSpec(fixture=fixture_name, hex=hex_code)


def _emit(model, as_json: bool) -> None:
    data = model.model_dump(mode="json")
    if as_json:
        click.echo(json.dumps(data, indent=2, sort_keys=True))
        return
    for key, value in data.items():
        if isinstance(value, (dict, list)):
            value = json.dumps(value, sort_keys=True)
        click.echo(f"{key:<15} {value}")


@click.group()
@click.version_option(version=__version__)
def main() -> None:
    """Isotropic matroid connectivity analysis and theorem verification."""


@main.command()
@_graph_options
@_common_options
def analyze(fixture_name, file_path, hex_code, edges, n_vertices, loops, server, as_json):
    """Connectivity report: tau, kappa*, kappa, kappa_B, cases, witnesses."""
    spec = _spec_from_flags(fixture_name, file_path, hex_code, edges, n_vertices, loops)
    _emit(_call(server, "analyze", AnalyzeRequest(graph=spec)), as_json)


@main.command()
@_graph_options
@_common_options
def split(fixture_name, file_path, hex_code, edges, n_vertices, loops, server, as_json):
    """Find a split, or certify the graph prime."""
    spec = _spec_from_flags(fixture_name, file_path, hex_code, edges, n_vertices, loops)
    _emit(_call(server, "split", AnalyzeRequest(graph=spec)), as_json)


@main.command()
@_graph_options
@_common_options
@click.option("--size-cap", type=int, help="Stop if no circuit at most this size.")
def circuits(fixture_name, file_path, hex_code, edges, n_vertices, loops, size_cap, server, as_json):
    """Smallest transverse circuit size q with one witness circuit."""
    spec = _spec_from_flags(fixture_name, file_path, hex_code, edges, n_vertices, loops)
    _emit(_call(server, "circuits", CircuitsRequest(graph=spec, size_cap=size_cap)), as_json)


@main.command()
@_graph_options
@_common_options
@click.option("--member-cap", type=int, default=5_000_000, show_default=True)
def orbit(fixture_name, file_path, hex_code, edges, n_vertices, loops, member_cap, server, as_json):
    """Local-equivalence orbit summary."""
    spec = _spec_from_flags(fixture_name, file_path, hex_code, edges, n_vertices, loops)
    _emit(_call(server, "orbit", OrbitRequest(graph=spec, member_cap=member_cap)), as_json)


@main.command()
@click.argument("campaign")
@click.option("--n", "n_max", type=int, required=True, help="Largest order to sweep.")
@click.option("--with-loops", is_flag=True, help="Include loop patterns (cconnect/vconnect).")
@click.option("--threads", type=int, default=None, help="Worker processes; ISOMAT_THREADS fallback.")
@click.option("--report", "report_path", type=click.Path(), help="Write a JSON-lines report.")
@click.option("--checkpoint", "checkpoint_path", type=click.Path(), help="Resumable checkpoint file.")
@_common_options
def verify(campaign, n_max, with_loops, threads, report_path, checkpoint_path, server, as_json):
    """Run a verification campaign; exit 1 if counterexamples are found."""
    if checkpoint_path is not None and server is not None:
        raise click.UsageError("--checkpoint only applies to in-process runs")
    if server is None:
        from .harness import run_campaign

        try:
            result = run_campaign(
                campaign, n_max, with_loops=with_loops, threads=threads,
                checkpoint_path=checkpoint_path,
            )
        except ValueError as exc:
            raise click.UsageError(str(exc)) from exc
        response = VerifyResponse(
            campaign=result.name,
            params=result.params,
            graphs_checked=result.graphs_checked,
            case_counts=result.case_counts,
            stats=result.stats,
            failures=result.failures,
            passed=result.passed,
        )
    else:
        request = VerifyRequest(campaign=campaign, n=n_max, with_loops=with_loops, threads=threads)
        response = _call(server, "verify", request)
    if report_path is not None:
        write_report(
            CampaignResult(
                response.campaign,
                response.params,
                graphs_checked=response.graphs_checked,
                case_counts=response.case_counts,
                stats=response.stats,
                failures=response.failures,
            ),
            report_path,
        )
    _emit(response, as_json)
    if not response.passed:
        sys.exit(1)


@main.command()
@click.argument("name")
@_common_options
def fixture(name, server, as_json):
    """Print a built-in graph in text, hex, and edge-list form."""
    if server is None:
        try:
            info = ops.fixture_info(name)
        except ops.ServiceError as exc:
            raise click.UsageError(str(exc)) from exc
    else:
        import httpx

        resp = httpx.get(server.rstrip("/") + f"/fixtures/{name}", timeout=None)
        if resp.status_code >= 400:
            raise click.UsageError(resp.json().get("detail", resp.text))
        from .service.models import FixtureResponse

        info = FixtureResponse.model_validate(resp.json())
    _emit(info, as_json)


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8157, show_default=True, type=int)
def serve(host, port):
    """Run the HTTP service."""
    import uvicorn

    uvicorn.run("isomat.service.app:app", host=host, port=port)


if __name__ == "__main__":
    main()
