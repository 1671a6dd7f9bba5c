"""FastAPI application exposing the index engine.

Domain errors (invalid combinations that pass schema validation) map to 400;
schema violations, including composite p, are pydantic's 422.  Handlers are
synchronous on purpose: every computation is pure CPU-bound algebra.
"""

from __future__ import annotations

from math import ceil

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..charclass import GroupSpec, ScalarField, total_class
from ..fppoly import TruncatedPolynomial
from ..indices import RepSphereSpec, StiefelSpec, index_rep_sphere, index_stiefel
from ..kakutani import (
    BoundQuery,
    NoKnownBoundError,
    bound_l,
    decide,
    guaranteed_threshold,
    rows_to_csv,
    table,
)
from ..steenrod import StuntedSpace, c2_numeric_index_bounds, sq_connects
from ..verify import all_passed, run_all, run_suite
from . import schemas


def _domain_error(request: Request, exc: Exception) -> JSONResponse:
    return JSONResponse(status_code=400, content={"detail": str(exc)})


def _term_records(poly: TruncatedPolynomial) -> list[schemas.TermRecord]:
    ring = poly.ring
    ordered = sorted(poly.terms().items(), key=lambda kv: (ring.monomial_degree(kv[0]), kv[0]))
    return [
        schemas.TermRecord(exponents=list(exps), coefficient=c) for exps, c in ordered
    ]


def create_app() -> FastAPI:
    app = FastAPI(title="fhindex", version=__version__)
    app.add_exception_handler(ValueError, _domain_error)

    @app.get("/v1/health", response_model=schemas.HealthResponse)
    def health() -> schemas.HealthResponse:
        return schemas.HealthResponse(status="ok", version=__version__)

    @app.post("/v1/classes", response_model=schemas.ClassesResponse)
    def classes(req: schemas.ClassesRequest) -> schemas.ClassesResponse:
        group = GroupSpec(req.p, req.n)
        # default cap reaches the top reduced component of the regular product
        cap = req.cap if req.cap is not None else max(4 * (req.p - 1), 2 * (group.order - 1))
        series = total_class(group, ScalarField(req.field), cap)
        return schemas.ClassesResponse(
            field=req.field,
            p=req.p,
            n=req.n,
            cap=cap,
            class_kind=series.class_kind.value,
            ring=group.ambient_ring_description(),
            total_text=str(series.total),
            inverse_text=str(series.inverse),
            total_terms=_term_records(series.total),
            inverse_terms=_term_records(series.inverse),
            note=series.extrapolation_note,
        )

    @app.post("/v1/index", response_model=schemas.StiefelIndexResponse)
    def stiefel_index(req: schemas.IndexRequest) -> schemas.StiefelIndexResponse:
        spec = StiefelSpec(ScalarField(req.field), req.l, GroupSpec(req.p, req.n))
        return schemas.StiefelIndexResponse(**index_stiefel(spec).to_record())

    @app.post("/v1/sphere", response_model=schemas.SphereIndexResponse)
    def sphere_index(req: schemas.SphereRequest) -> schemas.SphereIndexResponse:
        group = GroupSpec(req.p, req.n)
        dim = req.dim if req.dim is not None else req.m * (group.order - 1)
        spec = RepSphereSpec(group, dim, fixed_point_free=req.fixed_point_free)
        return schemas.SphereIndexResponse(**index_rep_sphere(spec).to_record())

    @app.post("/v1/kakutani", response_model=schemas.KakutaniResponse)
    def kakutani(req: schemas.KakutaniRequest) -> schemas.KakutaniResponse:
        group = GroupSpec(req.p, req.n)
        query = BoundQuery(req.m, group, ScalarField(req.field))
        try:
            bound = bound_l(query)
        except NoKnownBoundError:
            bound = None
        decide_at = req.l if req.l is not None else (ceil(bound) if bound is not None else None)
        decision = None
        if decide_at is not None:
            record = decide(decide_at, query).to_record()
            decision = schemas.DecisionRecord(**record)
        return schemas.KakutaniResponse(
            field=req.field,
            p=req.p,
            n=req.n,
            m=req.m,
            bound=None if bound is None else str(bound),
            bound_ceiling=None if bound is None else ceil(bound),
            threshold=guaranteed_threshold(query),
            decision=decision,
        )

    @app.post("/v1/kakutani/table", response_model=schemas.KakutaniTableResponse)
    def kakutani_table(req: schemas.KakutaniTableRequest) -> schemas.KakutaniTableResponse:
        rows = table(ScalarField(req.field), req.p_values, req.n_values, req.m_values)
        return schemas.KakutaniTableResponse(
            rows=[schemas.TableRowRecord(**row.to_record()) for row in rows],
            csv=rows_to_csv(rows),
        )

    @app.post("/v1/steenrod", response_model=schemas.SteenrodResponse)
    def steenrod(req: schemas.SteenrodRequest) -> schemas.SteenrodResponse:
        field = ScalarField(req.field)
        space = StuntedSpace(field, req.l)
        lower, upper = c2_numeric_index_bounds(field, req.l)
        return schemas.SteenrodResponse(
            field=req.field,
            l=req.l,
            cell_dimensions=list(space.cell_dimensions()),
            sq_connects=sq_connects(space),
            lower_bound=lower,
            upper_bound=upper,
        )

    @app.post("/v1/verify", response_model=schemas.VerifyResponse)
    def verify(req: schemas.VerifyRequest) -> schemas.VerifyResponse:
        if req.suite is None:
            results = run_all(p=req.p, k=req.k)
        else:
            results = run_suite(req.suite, p=req.p, k=req.k)
        return schemas.VerifyResponse(
            results=[schemas.VerifyRecord(**r.to_record()) for r in results],
            all_passed=all_passed(results),
        )

    return app
