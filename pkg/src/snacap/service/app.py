"""HTTP surface: one endpoint per toolkit operation.

Core validation failures (bad catalogs, bad parameters) surface as HTTP 400
with a diagnostics payload; request-shape problems are FastAPI's usual 422.
Endpoints that produce tables accept ``?format=csv`` to get the flat export
instead of JSON.
"""

from __future__ import annotations

import json
from typing import Optional

from fastapi import FastAPI, Query, Request
from fastapi.responses import JSONResponse, PlainTextResponse, Response

from .. import __version__
from ..analysis import (
    distribution_stats,
    pareto_front,
    rank,
    score_catalog,
    top_k_by_dimension,
)
from ..capability import DimensionScores, capability_c4, round_score
from ..catalog import CatalogError, ToolCatalog, bundled_catalog, catalog_diagnostics, parse_catalog
from ..exports import export_table, mapping_csv, scored_tools_csv, top_csv
from ..netprobe import (
    basic_metrics,
    centrality,
    diffuse,
    format_edge_list,
    generate,
    girvan_newman,
    girvan_newman_max_modularity,
    greedy_modularity,
    greedy_quasi_clique,
    is_gamma_dense,
    k_core,
    modularity,
    parse_edge_list,
    quasi_clique_density,
)
from ..radar import RadarSpec, render_radar
from ..scientometrics import CitationRecord, multi_rpys, rpys
from . import schemas


def _load_catalog(payload: Optional[dict]) -> ToolCatalog:
    if payload is None:
        return bundled_catalog()
    return parse_catalog(json.dumps(payload))


def _graph(payload: schemas.GraphIn):
    return parse_edge_list(payload.edge_list, directed=payload.directed)


def _records(items: list[schemas.CitationRecordIn]) -> list[CitationRecord]:
    return [CitationRecord(r.citing_year, tuple(r.cited_years)) for r in items]


def create_app() -> FastAPI:
    app = FastAPI(title="snacap", version=__version__)

    @app.exception_handler(CatalogError)
    async def catalog_error(request: Request, exc: CatalogError) -> JSONResponse:
        return JSONResponse(
            status_code=400,
            content={
                "detail": "catalog validation failed",
                "diagnostics": [
                    {"path": d.path, "message": d.message, "severity": d.severity}
                    for d in exc.diagnostics
                ],
            },
        )

    @app.exception_handler(ValueError)
    async def value_error(request: Request, exc: ValueError) -> JSONResponse:
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    @app.get("/health", response_model=schemas.HealthResponse)
    def health() -> schemas.HealthResponse:
        return schemas.HealthResponse(status="ok", version=__version__)

    @app.get("/catalog")
    def get_catalog() -> Response:
        from importlib import resources

        data = resources.files("snacap.data").joinpath("paper_tools.json").read_text("utf-8")
        return Response(content=data, media_type="application/json")

    @app.post("/score")
    def score(
        req: schemas.ScoreRequest, format: schemas.OutputFormat = Query("json")
    ) -> Response:
        catalog = _load_catalog(req.catalog)
        rows = []
        for tool in score_catalog(catalog):
            capability = capability_c4(tool.dimension_scores()) if tool.complete else None
            rows.append((tool, capability))
        if req.rank:
            rows.sort(
                key=lambda pair: (
                    -(pair[1].normalized if pair[1] and pair[1].normalized is not None else -1.0),
                    pair[0].name,
                )
            )
        if format == "csv":
            return PlainTextResponse(scored_tools_csv(rows), media_type="text/csv")
        payload = schemas.ScoreResponse(
            tools=[
                schemas.ScoredToolModel(
                    name=tool.name,
                    license=tool.license,
                    degrees=tool.degrees,
                    capability=schemas.CapabilityModel(
                        raw=capability.raw,
                        normalized=capability.normalized,
                        degeneracy=capability.degeneracy.value,
                    )
                    if capability
                    else None,
                )
                for tool, capability in rows
            ]
        )
        return JSONResponse(payload.model_dump())

    @app.post("/rank")
    def rank_endpoint(
        req: schemas.RankRequest, format: schemas.OutputFormat = Query("json")
    ) -> Response:
        result = rank(_load_catalog(req.catalog), license_filter=req.license)
        if format == "csv":
            return PlainTextResponse(export_table(result, "csv"), media_type="text/csv")
        payload = schemas.RankResponse(
            ranked=[
                schemas.RankedToolModel(
                    rank=i,
                    name=t.name,
                    license=t.license,
                    scores=schemas.DimensionScoresModel(**t.scores.as_dict()),
                    capability=schemas.CapabilityModel(
                        raw=t.capability.raw,
                        normalized=t.capability.normalized,
                        degeneracy=t.capability.degeneracy.value,
                    ),
                    c4=round_score(t.capability.normalized),
                )
                for i, t in enumerate(result.ranked, start=1)
            ],
            excluded=[
                schemas.ExcludedToolModel(name=name, reason=reason)
                for name, reason in result.excluded
            ],
        )
        return JSONResponse(payload.model_dump())

    @app.post("/top")
    def top(
        req: schemas.TopRequest, format: schemas.OutputFormat = Query("json")
    ) -> Response:
        entries = top_k_by_dimension(_load_catalog(req.catalog), req.dimension, req.k)
        if format == "csv":
            return PlainTextResponse(top_csv(req.dimension, entries), media_type="text/csv")
        return JSONResponse(
            schemas.TopResponse(
                dimension=req.dimension,
                entries=[
                    schemas.TopEntryModel(name=name, score=score, rounded=round_score(score))
                    for name, score in entries
                ],
            ).model_dump()
        )

    @app.post("/pareto")
    def pareto(
        req: schemas.ParetoRequest, format: schemas.OutputFormat = Query("json")
    ) -> Response:
        result = pareto_front(_load_catalog(req.catalog), req.axis_x, req.axis_y)
        if format == "csv":
            return PlainTextResponse(export_table(result, "csv"), media_type="text/csv")
        return JSONResponse(
            schemas.ParetoResponse(
                axis_x=result.axis_x,
                axis_y=result.axis_y,
                front=sorted(result.front),
                dominated=sorted(result.dominated),
                unplaced=list(result.unplaced),
                points=[
                    schemas.ParetoPointModel(name=name, x=x, y=y)
                    for name, x, y in result.points
                ],
            ).model_dump()
        )

    @app.post("/dist")
    def dist(
        req: schemas.CatalogRequest, format: schemas.OutputFormat = Query("json")
    ) -> Response:
        result = distribution_stats(_load_catalog(req.catalog))
        if format == "csv":
            return PlainTextResponse(export_table(result, "csv"), media_type="text/csv")
        return JSONResponse(
            schemas.DistResponse(
                per_dimension={
                    dim: schemas.DimensionStatsModel(
                        count=s.count,
                        minimum=s.minimum,
                        q1=s.q1,
                        median=s.median,
                        q3=s.q3,
                        maximum=s.maximum,
                        mean=s.mean,
                    )
                    for dim, s in result.per_dimension.items()
                }
            ).model_dump()
        )

    @app.post("/radar")
    def radar(req: schemas.RadarRequest) -> Response:
        if (req.tool is None) == (req.scores is None):
            raise ValueError("provide exactly one of 'tool' or 'scores'")
        if req.tool is not None:
            catalog = _load_catalog(req.catalog)
            for tool in score_catalog(catalog):
                if tool.name == req.tool:
                    if not tool.complete:
                        raise ValueError(f"tool {req.tool!r} is not fully assessed")
                    scores = tool.dimension_scores()
                    label = req.label if req.label is not None else req.tool
                    break
            else:
                raise ValueError(f"tool {req.tool!r} not in catalog")
        else:
            scores = DimensionScores(**req.scores.model_dump())
            label = req.label or ""
        svg = render_radar(RadarSpec(scores=scores, size=req.size, label=label))
        return Response(content=svg, media_type="image/svg+xml")

    @app.post("/rpys")
    def rpys_endpoint(
        req: schemas.RpysRequest, format: schemas.OutputFormat = Query("json")
    ) -> Response:
        result = rpys(_records(req.records), year_range=req.year_range)
        if format == "csv":
            return PlainTextResponse(export_table(result, "csv"), media_type="text/csv")
        return JSONResponse(
            schemas.SpectrogramResponse(
                years=list(result.years),
                counts=list(result.counts),
                deviations=list(result.deviations),
            ).model_dump()
        )

    @app.post("/multirpys")
    def multirpys(
        req: schemas.MultiRpysRequest, format: schemas.OutputFormat = Query("json")
    ) -> Response:
        result = multi_rpys(_records(req.records), req.citing_range, req.referenced_range)
        if format == "csv":
            return PlainTextResponse(export_table(result, "csv"), media_type="text/csv")
        return JSONResponse(
            schemas.MultiRpysResponse(
                citing_years=list(result.citing_years),
                referenced_years=list(result.referenced_years),
                values=[list(row) for row in result.values],
                empty_rows=sorted(result.empty_rows),
            ).model_dump()
        )

    @app.post("/graph/generate")
    def graph_generate(
        req: schemas.GenerateRequest, format: schemas.OutputFormat = Query("json")
    ) -> Response:
        params = {"n": req.n}
        if req.model == "er_gnm":
            params["m"] = req.m
        elif req.model == "gilbert_gnp":
            params["p"] = req.p
        elif req.model == "watts_strogatz":
            params["k"] = req.k
            params["rewire_p"] = req.rewire
        else:
            params["m"] = req.m
            if req.m0 is not None:
                params["m0"] = req.m0
        missing = [k for k, v in params.items() if v is None]
        if missing:
            raise ValueError(f"{req.model} needs parameters: {', '.join(missing)}")
        graph = generate(req.model, req.seed, **params)
        edge_list = format_edge_list(graph)
        if format == "csv":
            return PlainTextResponse(edge_list, media_type="text/plain")
        return JSONResponse(
            schemas.GraphOut(n=graph.n, m=graph.m, edge_list=edge_list).model_dump()
        )

    @app.post("/graph/metrics")
    def graph_metrics(
        req: schemas.MetricsRequest, format: schemas.OutputFormat = Query("json")
    ) -> Response:
        report = basic_metrics(_graph(req.graph))
        if format == "csv":
            return PlainTextResponse(export_table(report, "csv"), media_type="text/csv")
        return JSONResponse(
            schemas.MetricsResponse(
                n=report.n,
                m=report.m,
                density=report.density,
                mean_degree=report.mean_degree,
                degree_histogram={str(k): v for k, v in report.degree_histogram.items()},
                triangle_count=report.triangle_count,
                global_clustering=report.global_clustering,
                component_count=report.component_count,
                largest_component_size=report.largest_component_size,
                disconnected=report.disconnected,
                average_path_length=report.average_path_length,
                diameter=report.diameter,
            ).model_dump()
        )

    @app.post("/graph/centrality")
    def graph_centrality(
        req: schemas.CentralityRequest, format: schemas.OutputFormat = Query("json")
    ) -> Response:
        g = _graph(req.graph)
        params = {"damping": req.damping} if req.measure == "pagerank" else {}
        result = centrality(g, req.measure, **params)
        if format == "csv":
            return PlainTextResponse(export_table(result, "csv"), media_type="text/csv")
        return JSONResponse(
            schemas.CentralityResponse(
                measure=result.measure,
                connected=result.connected,
                values={str(k): v for k, v in sorted(result.values.items())},
            ).model_dump()
        )

    @app.post("/graph/community")
    def graph_community(
        req: schemas.CommunityRequest, format: schemas.OutputFormat = Query("json")
    ) -> Response:
        g = _graph(req.graph)
        response = schemas.CommunityResponse(method=req.method)
        csv_text: str
        if req.method == "k_core":
            cores = k_core(g)
            response.core_numbers = {str(k): v for k, v in sorted(cores.items())}
            csv_text = mapping_csv(cores, "node", "core")
        elif req.method == "quasi_clique":
            if req.gamma is None:
                raise ValueError("quasi_clique needs 'gamma'")
            members = sorted(greedy_quasi_clique(g, req.gamma))
            response.members = members
            if len(members) >= 2:
                response.density = quasi_clique_density(g, members)
                response.gamma_dense = is_gamma_dense(g, members, req.gamma)
            csv_text = mapping_csv({v: "member" for v in members}, "node", "role")
        else:
            if req.method == "greedy_modularity":
                membership = greedy_modularity(g)
            elif req.method == "girvan_newman_best":
                membership = girvan_newman_max_modularity(g)
            else:
                if req.target is None:
                    raise ValueError("girvan_newman needs 'target'")
                membership = girvan_newman(g, req.target)
            response.membership = {str(k): v for k, v in sorted(membership.items())}
            groups: dict[int, list[int]] = {}
            for node, community in membership.items():
                groups.setdefault(community, []).append(node)
            response.communities = [sorted(nodes) for _, nodes in sorted(groups.items())]
            response.modularity = modularity(g, membership) if g.m else None
            csv_text = mapping_csv(membership, "node", "community")
        if format == "csv":
            return PlainTextResponse(csv_text, media_type="text/csv")
        return JSONResponse(response.model_dump())

    @app.post("/graph/diffuse")
    def graph_diffuse(
        req: schemas.DiffuseRequest, format: schemas.OutputFormat = Query("json")
    ) -> Response:
        g = _graph(req.graph)
        threshold = req.thresholds if req.thresholds is not None else req.threshold
        trajectory = diffuse(
            g,
            req.model,
            seeds=set(req.seeds),
            steps=req.steps,
            rng_seed=req.rng_seed,
            beta=req.beta,
            mu=req.mu,
            xi=req.xi,
            p=req.p,
            threshold=threshold,
        )
        if format == "csv":
            return PlainTextResponse(export_table(trajectory, "csv"), media_type="text/csv")
        return JSONResponse(
            schemas.TrajectoryResponse(
                model=trajectory.model,
                params=dict(trajectory.params),
                seeds=list(trajectory.seeds),
                rng_seed=trajectory.rng_seed,
                steps=trajectory.steps,
                states=[list(s) for s in trajectory.states],
            ).model_dump()
        )

    @app.post("/validate", response_model=schemas.ValidateResponse)
    def validate(req: schemas.ValidateRequest) -> schemas.ValidateResponse:
        diagnostics = catalog_diagnostics(json.dumps(req.catalog))
        return schemas.ValidateResponse(
            valid=not any(d.severity == "error" for d in diagnostics),
            diagnostics=[
                schemas.DiagnosticModel(path=d.path, message=d.message, severity=d.severity)
                for d in diagnostics
            ],
        )

    return app


app = create_app()
