"""HTTP face of the package. Every CLI verb maps to one route here, so
anything scriptable from the shell is equally reachable over the wire."""
from __future__ import annotations

import itertools

from fastapi import FastAPI, HTTPException

from .. import __version__
from ..analysis import (
    cospectral_pairs,
    correlate,
    detect_degeneracy,
    format_report,
    index_report,
    rank_by,
    regress_ron,
    reproduce_tables,
)
from ..enumeration import enumerate_alkane_trees, enumerate_cyclic_chemical_graphs
from ..graphs import GraphError, degree_string, format_edge_list, parse_edge_list
from ..nomenclature import ParseError, graph_from_name
from ..output import emit_svg_scatter
from ..reference import INDEX_COLUMNS
from . import models


def _resolve(source):
    """GraphSource -> (graphs, labels). Bad input becomes HTTP 400."""
    graphs, labels = [], []
    try:
        for i, text in enumerate(source.edge_lists, start=1):
            graphs.append(parse_edge_list(text))
            labels.append(f"edges-{i}")
        for name in source.names:
            graphs.append(graph_from_name(name))
            labels.append(name)
        if source.alkanes is not None:
            fam = enumerate_alkane_trees(source.alkanes)
            graphs.extend(fam)
            labels.extend(
                f"alkane-{source.alkanes}-{k}" for k in range(1, len(fam) + 1)
            )
        if source.cyclic is not None:
            fam = enumerate_cyclic_chemical_graphs(
                source.cyclic, complete=source.complete
            )
            graphs.extend(fam)
            labels.extend(
                f"cyclic-{source.cyclic}-{k}" for k in range(1, len(fam) + 1)
            )
    except (GraphError, ParseError, ValueError) as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    return graphs, labels


def _rows(reports):
    return [models.IndexRow(**r.to_dict()) for r in reports]


def create_app():
    app = FastAPI(
        title="chemindex",
        version=__version__,
        description="Spectral and distance-based topological indices "
        "over small chemical graphs",
    )

    @app.get("/api/health", response_model=models.HealthResponse)
    def health():
        return models.HealthResponse(status="ok", version=__version__)

    @app.post("/api/indices", response_model=models.IndicesResponse)
    def indices(req: models.IndicesRequest):
        graphs, labels = _resolve(req)
        return models.IndicesResponse(rows=_rows(index_report(graphs, labels)))

    @app.post("/api/enumerate", response_model=models.EnumerateResponse)
    def enumerate_family(req: models.EnumerateRequest):
        try:
            if req.family == "alkanes":
                fam = enumerate_alkane_trees(req.n)
                labels = [f"alkane-{req.n}-{k}" for k in range(1, len(fam) + 1)]
            else:
                fam = enumerate_cyclic_chemical_graphs(req.n, complete=req.complete)
                labels = [f"cyclic-{req.n}-{k}" for k in range(1, len(fam) + 1)]
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc
        return models.EnumerateResponse(
            count=len(fam), rows=_rows(index_report(fam, labels))
        )

    @app.post("/api/parse-name", response_model=models.ParseNamesResponse)
    def parse_name(req: models.ParseNamesRequest):
        results = []
        for name in req.names:
            try:
                g = graph_from_name(name)
            except ParseError as exc:
                results.append(models.ParsedName(name=name, ok=False, error=str(exc)))
            else:
                results.append(
                    models.ParsedName(
                        name=name,
                        ok=True,
                        n=g.n,
                        m=g.m,
                        degrees=degree_string(g),
                        edge_list=format_edge_list(g),
                    )
                )
        return models.ParseNamesResponse(results=results)

    @app.post("/api/rank", response_model=models.RankResponse)
    def rank(req: models.RankRequest):
        graphs, labels = _resolve(req)
        reports = index_report(graphs, labels)
        ranking = rank_by(reports, req.index)
        return models.RankResponse(
            index=req.index,
            positions=list(ranking.positions),
            groups=[list(g) for g in ranking.groups],
            rows=_rows(reports),
        )

    @app.post("/api/correlate", response_model=models.CorrelateResponse)
    def correlate_indices(req: models.IndicesRequest):
        graphs, labels = _resolve(req)
        reports = index_report(graphs, labels)
        pairs = []
        for x, y in itertools.combinations(INDEX_COLUMNS, 2):
            try:
                r2 = correlate(
                    [r.value(x) for r in reports], [r.value(y) for r in reports]
                )
            except ValueError as exc:
                raise HTTPException(status_code=400, detail=str(exc)) from exc
            pairs.append(models.CorrelatePair(x=x, y=y, r_squared=r2))
        return models.CorrelateResponse(count=len(reports), pairs=pairs)

    @app.post("/api/degeneracy", response_model=models.DegeneracyResponse)
    def degeneracy(req: models.DegeneracyRequest):
        graphs, labels = _resolve(req)
        reports = index_report(graphs, labels)
        values = [r.value(req.index) for r in reports]
        groups = detect_degeneracy(values, req.tol)
        return models.DegeneracyResponse(
            index=req.index,
            groups=[
                models.DegeneracyGroup(
                    rows=list(g),
                    names=[labels[i] for i in g],
                    value=values[g[0]],
                )
                for g in groups
            ],
        )

    @app.post("/api/cospectral", response_model=models.CospectralResponse)
    def cospectral(req: models.CospectralRequest):
        graphs, labels = _resolve(req)
        pairs = cospectral_pairs(graphs, method=req.method)
        return models.CospectralResponse(
            method=req.method,
            pairs=[
                models.CospectralPairOut(
                    rows=[i, j], names=[labels[i], labels[j]]
                )
                for i, j in pairs
            ],
        )

    @app.post("/api/plot", response_model=models.PlotResponse)
    def plot(req: models.PlotRequest):
        graphs, labels = _resolve(req)
        reports = index_report(graphs, labels)
        if not reports:
            raise HTTPException(status_code=400, detail="nothing to plot")
        svg = emit_svg_scatter(
            [r.value(req.x) for r in reports],
            [r.value(req.y) for r in reports],
            xlabel=req.x,
            ylabel=req.y,
            names=labels,
            title=req.title,
        )
        return models.PlotResponse(svg=svg)

    @app.post("/api/reproduce", response_model=models.ReproduceResponse)
    def reproduce(req: models.ReproduceRequest):
        try:
            rep = reproduce_tables(tuple(req.tables))
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc
        tables = [
            models.TableReportOut(
                table=t.table,
                rows=t.rows,
                cells_checked=t.cells_checked,
                known_errata=len(t.known_issues),
                unexpected=len(t.unexpected_issues),
                issues=[
                    models.IssueOut(
                        table=i.table,
                        row=i.row,
                        column=i.column,
                        printed=i.printed,
                        recomputed=i.recomputed,
                        deviation=i.deviation,
                        known=i.known,
                        note=i.note,
                    )
                    for i in t.issues
                ],
                notes=list(t.notes),
            )
            for t in rep.tables
        ]
        return models.ReproduceResponse(
            ok=rep.ok, text=format_report(rep), tables=tables
        )

    @app.post("/api/ron-regression", response_model=models.RonResponse)
    def ron_regression(req: models.RonRequest):
        fits = regress_ron(positive_only=req.positive_only)
        return models.RonResponse(
            fits={
                k: models.FitOut(
                    slope=v.slope,
                    intercept=v.intercept,
                    r_squared=v.r_squared,
                    count=v.count,
                )
                for k, v in fits.items()
            }
        )

    return app


app = create_app()
