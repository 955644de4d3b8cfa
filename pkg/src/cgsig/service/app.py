"""FastAPI application exposing the library as a compute service.

Every computation is a pure function of the request, so all endpoints are
POST-with-body returning the shared envelope.  Input problems (bad grammar,
violated invariants, characters outside the surgery formula's hypotheses)
map to 422; internal certification or integrality failures to 500.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from ..casson_gordon import IntegralityError, InvalidCharacter, UnsupportedCharacter
from ..hermitian import CertificationError
from ..knots import ParseError
from . import handlers
from .models import (CgLensRequest, CgSurgeryRequest, Envelope, FamilyRequest,
                     FusionMinmaxRequest, FusionSurgeryRequest, H1Request,
                     ObstructRequest, ReproduceRequest, SigRequest)

_INPUT_ERRORS = (ParseError, UnsupportedCharacter, InvalidCharacter, ValueError)
_INTERNAL_ERRORS = (IntegralityError, CertificationError, AssertionError)


def _run(handler, request) -> dict:
    try:
        envelope: Envelope = handler(request)
    except _INPUT_ERRORS as e:
        raise HTTPException(status_code=422, detail=str(e)) from e
    except _INTERNAL_ERRORS as e:
        raise HTTPException(status_code=500,
                            detail=f"internal computation failure: {e}") from e
    return envelope.payload()


def create_app() -> FastAPI:
    app = FastAPI(
        title="cgsig",
        description="Exact knot-signature invariants, surgery signature "
                    "defects, and handle/fusion obstructions.",
        version="0.1.0",
    )

    @app.get("/health")
    def health():
        return {"status": "ok"}

    @app.post("/sig")
    def sig(request: SigRequest):
        return _run(handlers.handle_sig, request)

    @app.post("/cg/surgery")
    def cg_surgery(request: CgSurgeryRequest):
        return _run(handlers.handle_cg_surgery, request)

    @app.post("/cg/lens")
    def cg_lens(request: CgLensRequest):
        return _run(handlers.handle_cg_lens, request)

    @app.post("/h1")
    def h1(request: H1Request):
        return _run(handlers.handle_h1, request)

    @app.post("/obstruct/one-handle")
    def obstruct_one_handle(request: ObstructRequest):
        return _run(handlers.handle_obstruct, request)

    @app.post("/fusion/minmax")
    def fusion_minmax(request: FusionMinmaxRequest):
        return _run(handlers.handle_fusion_minmax, request)

    @app.post("/fusion/surgery")
    def fusion_surgery(request: FusionSurgeryRequest):
        return _run(handlers.handle_fusion_surgery, request)

    @app.post("/family")
    def family(request: FamilyRequest):
        return _run(handlers.handle_family, request)

    @app.post("/reproduce-paper")
    def reproduce_paper(request: ReproduceRequest | None = None):
        return _run(handlers.handle_reproduce, request or ReproduceRequest())

    return app


app = create_app()
