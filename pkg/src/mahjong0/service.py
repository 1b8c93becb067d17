"""Stateless HTTP analysis service, a thin adapter over the library.

Responses are deterministic functions of the request body and share
their field layout with the CLI's JSON output.  Errors carry a machine
readable code: 400 for unparseable input, 422 for constraint
violations such as five identical tiles or a horizon over the cap.
"""

from __future__ import annotations

import os

from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from . import __version__
from .deficiency import deficiency
from .policy import (
    DEFAULT_HORIZON_CAP,
    HorizonTooLarge,
    advise as advise_policy,
    parse_kb,
)
from .reports import advise_payload, analyze_payload, health_payload
from .tiles import BadToken, FiveIdentical, WrongCount, parse_hand


class AnalyzeRequest(BaseModel):
    hand: str


class AdviseRequest(BaseModel):
    hand: str
    kb: str
    k: int = 1


def _error(status: int, code: str, message: str) -> JSONResponse:
    return JSONResponse(status_code=status, content={"code": code, "message": message})


def create_app(horizon_cap: int | None = None,
               cors_origins: str | None = None) -> FastAPI:
    cap = horizon_cap if horizon_cap is not None else int(
        os.environ.get("MAHJONG0_HORIZON_CAP", str(DEFAULT_HORIZON_CAP)))
    origins = cors_origins if cors_origins is not None else os.environ.get(
        "MAHJONG0_CORS_ORIGINS", "*")
    app = FastAPI(title="mahjong0", version=__version__)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=[o.strip() for o in origins.split(",")],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.post("/analyze")
    def analyze(req: AnalyzeRequest):
        try:
            hand = parse_hand(req.hand)
        except FiveIdentical as exc:
            return _error(422, "five_identical", str(exc))
        except WrongCount as exc:
            return _error(400, "wrong_count", str(exc))
        except BadToken as exc:
            return _error(400, "bad_token", str(exc))
        return analyze_payload(hand, deficiency(hand))

    @app.post("/advise")
    def advise(req: AdviseRequest):
        try:
            hand = parse_hand(req.hand)
        except FiveIdentical as exc:
            return _error(422, "five_identical", str(exc))
        except WrongCount as exc:
            return _error(400, "wrong_count", str(exc))
        except BadToken as exc:
            return _error(400, "bad_token", str(exc))
        try:
            kb = parse_kb(req.kb)
        except ValueError as exc:
            return _error(400, "bad_kb", str(exc))
        if req.k < 1:
            return _error(422, "bad_horizon", "horizon must be at least 1")
        try:
            report = advise_policy(hand, kb, req.k, cap=cap)
        except HorizonTooLarge as exc:
            return _error(422, "horizon_exceeded", str(exc))
        except ValueError as exc:
            code = "hand_complete" if "complete" in str(exc) else "no_tiles_available"
            return _error(422, code, str(exc))
        return advise_payload(hand, report)

    @app.get("/health")
    def health():
        return health_payload(__version__, cap)

    return app


app = create_app()
