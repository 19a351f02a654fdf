"""The FastAPI application: every decision and construction as an endpoint.

All endpoints answer a Verdict.  Domain failures (bad mathematical input,
undecidable comparisons) come back as status 'error' with HTTP 400;
internal inconsistencies (closure violations, cross-check mismatches) use
HTTP 500 so that clients and CI can separate the two.  Outcomes are
deterministic for a fixed request, including the echoed bounds.
"""

from __future__ import annotations

from fractions import Fraction

from fastapi import FastAPI
from fastapi.responses import JSONResponse

from .. import criteria, salem
from ..errors import ClosureViolation, InternalInconsistency, SalemLatticesError
from ..groups import (
    bch_crosscheck_Ell,
    build_lattice_T1,
    build_lattice_T2,
    closure_check,
    lattice_from_json,
)
from ..groups.twocentre import D0_UNITS, DqExact
from ..intervals import as_fraction
from ..polycore import IntPoly
from ..sympmat import build_A_for_theorem1, commensurable, verify_LKO
from . import schemas


def _verdict(status, witness=None, assumptions=(), bounds=None, error=None,
             http_status=200):
    v = schemas.Verdict(
        status=status,
        witness=witness,
        assumptions=list(assumptions),
        bounds_used=bounds or {},
        error=error,
    )
    return JSONResponse(v.model_dump(), status_code=http_status)


def _domain_error(exc: SalemLatticesError, bounds=None):
    return _verdict(
        "error",
        bounds=bounds,
        error={"kind": type(exc).__name__, "message": str(exc)},
        http_status=400,
    )


def _internal_error(exc: Exception, bounds=None):
    return _verdict(
        "error",
        bounds=bounds,
        error={"kind": type(exc).__name__, "message": str(exc)},
        http_status=500,
    )


def create_app() -> FastAPI:
    app = FastAPI(
        title="salemlattices",
        description=(
            "Exact decision procedures and constructions for cocompact "
            "lattices in solvable Lie groups with bi-invariant metric of "
            "index 2."
        ),
        version="0.1.0",
    )

    @app.get("/health")
    def health():
        return {"status": "ok"}

    @app.post("/v1/salem/check")
    def salem_check(req: schemas.SalemCheckRequest):
        bounds = {"tol": req.tol}
        try:
            p = IntPoly.from_json(req.poly)
            res = salem.classify_F_plus(p, as_fraction(req.tol))
        except SalemLatticesError as exc:
            return _domain_error(exc, bounds)
        if res.accepted:
            return _verdict(
                "yes",
                {"k": res.k, "salem_data": res.salem.to_json()},
                bounds=bounds,
            )
        return _verdict(
            "no", {"reason": res.reason, "detail": res.detail}, bounds=bounds
        )

    @app.post("/v1/salem/enum")
    def salem_enum(req: schemas.SalemEnumRequest):
        bounds = req.model_dump()
        try:
            params = salem.enumerate_F4(req.a_min, req.a_max, req.b_min, req.b_max)
        except InternalInconsistency as exc:
            return _internal_error(exc, bounds)
        return _verdict(
            "yes",
            {"count": len(params), "params": [[p.a, p.b] for p in params]},
            bounds=bounds,
        )

    @app.post("/v1/salem/equiv")
    def salem_equiv(req: schemas.SalemEquivRequest):
        bounds = {"power_bound": req.power_bound}
        try:
            p1 = IntPoly.from_json(req.poly1)
            p2 = IntPoly.from_json(req.poly2)
            res = salem.salem_equivalent(p1, p2, req.power_bound)
        except (SalemLatticesError, ValueError) as exc:
            return _domain_error(
                exc if isinstance(exc, SalemLatticesError) else
                SalemLatticesError(str(exc)), bounds)
        status = {"equivalent": "yes", "not-equivalent": "no", "unknown": "unknown"}
        witness = {"reason": res.reason}
        if res.status == "equivalent":
            witness = {"k1": res.k1, "k2": res.k2}
        return _verdict(status[res.status], witness, bounds=bounds)

    @app.post("/v1/mu/check-t1")
    def mu_check_t1(req: schemas.MuCheckT1Request):
        bounds = {"offset_bound": req.offset_bound}
        try:
            mu = criteria.MuSpecT1.from_json(req.mu.model_dump())
            f = IntPoly.from_json(req.poly)
            res = criteria.check_mu_T1(mu, f, req.offset_bound)
        except (SalemLatticesError, ValueError) as exc:
            return _domain_error(
                exc if isinstance(exc, SalemLatticesError) else
                SalemLatticesError(str(exc)), bounds)
        status = {"member": "yes", "non-member": "no", "unknown": "unknown"}
        witness = {"assignment": list(res.witness)} if res.witness else None
        return _verdict(status[res.status], witness, res.assumptions, bounds)

    @app.post("/v1/decide/t1")
    def decide_t1(req: schemas.DecideT1Request):
        bounds = {
            "coeff_height": req.coeff_height,
            "degree_bound": req.degree_bound,
            "offset_bound": req.offset_bound,
        }
        try:
            mu = criteria.MuSpecT1.from_json(req.mu.model_dump())
            res = criteria.decide_T1(
                mu, req.coeff_height, req.degree_bound, req.offset_bound
            )
        except (SalemLatticesError, ValueError) as exc:
            return _domain_error(
                exc if isinstance(exc, SalemLatticesError) else
                SalemLatticesError(str(exc)), bounds)
        bounds["candidates_checked"] = res.candidates_checked
        bounds["unknown_candidates"] = res.unknown_candidates
        if res.status == "exists":
            witness = {"poly": res.f.to_json()}
            if res.witness:
                witness["assignment"] = list(res.witness)
            return _verdict("yes", witness, res.assumptions, bounds)
        return _verdict(
            "unknown",
            {"note": "bounded search exhausted; not a nonexistence proof"},
            res.assumptions,
            bounds,
        )

    @app.post("/v1/decide/t2")
    def decide_t2(req: schemas.DecideT2Request):
        try:
            mu = criteria.MuSpecT2.from_json(req.mu.model_dump())
            res = criteria.decide_T2(mu)
        except (SalemLatticesError, ValueError) as exc:
            return _domain_error(
                exc if isinstance(exc, SalemLatticesError) else
                SalemLatticesError(str(exc)))
        if res.status == "exists":
            witness = {
                "basis": [
                    {"x": bx.to_json(), "y": by.to_json()} for bx, by in res.basis
                ],
                "mu_coords": [list(c) for c in res.mu_coords],
            }
            return _verdict("yes", witness, res.assumptions)
        return _verdict("no", {"reason": res.reason}, res.assumptions)

    @app.post("/v1/lattice/build")
    def lattice_build(req: schemas.BuildLatticeRequest):
        bounds = {"seed": req.seed}
        try:
            if req.family == "osc1":
                if req.poly is None or req.q is None:
                    raise ValueError("osc1 needs poly and q")
                model = build_lattice_T1(IntPoly.from_json(req.poly), req.q, req.seed)
            else:
                if req.mu is None:
                    raise ValueError(f"{req.family} needs mu")
                spec = req.mu.model_dump()
                spec["family"] = req.family
                model = build_lattice_T2(criteria.MuSpecT2.from_json(spec))
        except (SalemLatticesError, ValueError) as exc:
            return _domain_error(
                exc if isinstance(exc, SalemLatticesError) else
                SalemLatticesError(str(exc)), bounds)
        return _verdict("yes", {"lattice": model.to_json()}, bounds=bounds)

    @app.post("/v1/lattice/verify")
    def lattice_verify(req: schemas.VerifyLatticeRequest):
        try:
            model = lattice_from_json(req.lattice)
        except (SalemLatticesError, ValueError, KeyError) as exc:
            return _domain_error(SalemLatticesError(str(exc)))
        word_length = req.word_length or (4 if model.family == "osc1" else 3)
        bounds = {"word_length": word_length}
        try:
            report = closure_check(model, word_length)
            witness = {"closure": report.to_json()}
            if model.family == "osc1":
                lko = verify_LKO(model.group.pair)
                witness["lko"] = lko.to_json()
                if not lko.passed:
                    raise InternalInconsistency("constructed pair fails verification")
        except (ClosureViolation, InternalInconsistency) as exc:
            return _internal_error(exc, bounds)
        return _verdict("yes", witness, bounds=bounds)

    @app.post("/v1/commensurable")
    def commensurable_endpoint(req: schemas.CommensurableRequest):
        bounds = {"power_bound": req.power_bound, "search_bound": req.search_bound}
        try:
            g1 = build_A_for_theorem1(
                IntPoly.from_json(req.gamma1.poly), req.gamma1.q, req.gamma1.seed
            )
            g2 = build_A_for_theorem1(
                IntPoly.from_json(req.gamma2.poly), req.gamma2.q, req.gamma2.seed
            )
            res = commensurable(g1, g2, req.power_bound, req.search_bound)
        except (SalemLatticesError, ValueError) as exc:
            return _domain_error(
                exc if isinstance(exc, SalemLatticesError) else
                SalemLatticesError(str(exc)), bounds)
        status = {"proven": "yes", "disproven": "no", "unknown": "unknown"}
        return _verdict(status[res.status], res.to_json(), bounds=bounds)

    @app.post("/v1/bch/check")
    def bch_check(req: schemas.BchCheckRequest):
        try:
            if req.mu is not None:
                spec = req.mu.model_dump()
                spec["family"] = "d"
                mu = criteria.MuSpecT2.from_json(spec)
                decision = criteria.decide_T2(mu)
                if decision.status != "exists":
                    raise SalemLatticesError(
                        "the parameter vector admits no lattice; "
                        "the exact model is unavailable"
                    )
                group = DqExact(mu.q, decision.mu_coords)
            else:
                group = DqExact(0, [], D0_UNITS)
            if req.grid:
                n = req.grid
                checks = 0
                for i in range(n):
                    for j in range(n):
                        t1 = (Fraction(i - n // 2, 3), Fraction(2 * i + 1, 5))
                        t2 = (Fraction(j - n // 2, 2), Fraction(3 * j - 1, 7))
                        bch_crosscheck_Ell(group, t1, t2)
                        checks += 1
                return _verdict("yes", {"grid": n, "checks": checks, "equal": True})
            t1 = tuple(as_fraction(x) for x in req.t)
            t2 = tuple(as_fraction(x) for x in req.t_dot)
            res = bch_crosscheck_Ell(group, t1, t2)
            return _verdict("yes", res.to_json())
        except InternalInconsistency as exc:
            return _internal_error(exc)
        except (SalemLatticesError, ValueError) as exc:
            return _domain_error(
                exc if isinstance(exc, SalemLatticesError) else
                SalemLatticesError(str(exc)))

    return app
