"""JSON-over-HTTP API for revision sessions.

Single-analyst tool: sessions live in process memory, optionally backed by
an append-only JSON-lines event file that is replayed at startup.  Every
response carries the full recomputed bundle rather than deltas; bundles are
tiny at the supported matrix sizes and the client never has to merge state.

Endpoints:
    POST  /sessions                  create a session from a matrix document
    GET   /sessions/{id}             current bundle and step log
    PATCH /sessions/{id}/entries     apply one revision {i, j, value}
    POST  /sessions/{id}/undo        roll back the last revision
    GET   /sessions/{id}/cop?delta=  what-if safety report at a chosen delta
    GET   /healthz

Mutations on one session are serialized by a per-session lock; concurrent
clients interleave as some serial order and can never corrupt history.
Validation failures return 400 with structured {row, col, reason} detail;
422 is reserved for solver failures.
"""

from __future__ import annotations

import argparse
import json
import os
import threading
import time
import uuid
from dataclasses import dataclass, field
from pathlib import Path

from fastapi import Body, FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from .discrepancy import (cop_safety_at, poip_threshold_failures,
                          pop_threshold_failures)
from .errors import ConvergenceError, MatrixError, UndoError
from .matrix import matrix_from_payload
from .revision import RevisionSession, open_session
from .schema import bundle_to_dict, session_to_dict


@dataclass
class SessionRecord:
    """One stored session plus its bookkeeping."""

    id: str
    session: RevisionSession
    created: float
    updated: float
    lock: threading.Lock = field(default_factory=threading.Lock)

    def snapshot(self) -> dict:
        """Consistent view of the record; serialized against mutations."""
        with self.lock:
            doc = session_to_dict(self.session)
            return {"id": self.id, "created": self.created, "updated": self.updated, **doc}


class SessionStore:
    """In-memory session map with optional JSONL event persistence."""

    def __init__(self, persist_path: str | os.PathLike | None = None):
        self._records: dict[str, SessionRecord] = {}
        self._lock = threading.Lock()
        self._persist_path = Path(persist_path) if persist_path else None
        if self._persist_path and self._persist_path.exists():
            self._replay()

    def get(self, sid: str) -> SessionRecord | None:
        with self._lock:
            return self._records.get(sid)

    def create(self, payload: dict, *, sid: str | None = None, ts: float | None = None) -> SessionRecord:
        matrix = matrix_from_payload(payload)
        session = open_session(matrix)
        ts = time.time() if ts is None else ts
        record = SessionRecord(id=sid or uuid.uuid4().hex, session=session, created=ts, updated=ts)
        with self._lock:
            self._records[record.id] = record
        self._append_event({"event": "create", "id": record.id, "ts": ts,
                            "labels": list(matrix.labels),
                            "matrix": [list(row) for row in matrix.values.tolist()]})
        return record

    def patch(self, record: SessionRecord, i: int, j: int, value: float,
              *, ts: float | None = None, replaying: bool = False) -> dict:
        ts = time.time() if ts is None else ts
        with record.lock:
            record.session = record.session.apply(i, j, value, timestamp=ts)
            record.updated = ts
            doc = {"id": record.id, "created": record.created, "updated": record.updated,
                   **session_to_dict(record.session)}
        if not replaying:
            self._append_event({"event": "patch", "id": record.id, "ts": ts,
                                "i": i, "j": j, "value": value})
        return doc

    def undo(self, record: SessionRecord, *, ts: float | None = None,
             replaying: bool = False) -> dict:
        ts = time.time() if ts is None else ts
        with record.lock:
            record.session = record.session.undo()
            record.updated = ts
            doc = {"id": record.id, "created": record.created, "updated": record.updated,
                   **session_to_dict(record.session)}
        if not replaying:
            self._append_event({"event": "undo", "id": record.id, "ts": ts})
        return doc

    def _append_event(self, event: dict) -> None:
        if self._persist_path is None:
            return
        with self._lock:
            with self._persist_path.open("a") as fh:
                fh.write(json.dumps(event) + "\n")
                fh.flush()

    def _replay(self) -> None:
        # events were validated when written; a broken file should fail loudly
        path = self._persist_path
        self._persist_path = None  # no re-append while replaying
        try:
            for line in path.read_text().splitlines():
                if not line.strip():
                    continue
                event = json.loads(line)
                kind = event["event"]
                if kind == "create":
                    self.create({"labels": event["labels"], "matrix": event["matrix"]},
                                sid=event["id"], ts=event["ts"])
                    continue
                record = self._records[event["id"]]
                if kind == "patch":
                    self.patch(record, event["i"], event["j"], event["value"],
                               ts=event["ts"], replaying=True)
                elif kind == "undo":
                    self.undo(record, ts=event["ts"], replaying=True)
                else:
                    raise ValueError(f"unknown event {kind!r} in {path}")
        finally:
            self._persist_path = path


def _error(status: int, reason: str, row: int | None = None, col: int | None = None) -> JSONResponse:
    return JSONResponse(status_code=status,
                        content={"detail": {"reason": reason, "row": row, "col": col}})


def create_app(store: SessionStore | None = None) -> FastAPI:
    app = FastAPI(title="coprank", version="0.1.0")
    app.state.store = store if store is not None else SessionStore()
    # the browser UI is typically served from a different local port
    app.add_middleware(CORSMiddleware, allow_origins=["*"], allow_methods=["*"],
                       allow_headers=["*"])

    @app.exception_handler(MatrixError)
    def _matrix_error(request: Request, exc: MatrixError):
        return _error(400, str(exc), exc.row, exc.col)

    @app.exception_handler(ConvergenceError)
    def _solver_error(request: Request, exc: ConvergenceError):
        return _error(422, str(exc))

    @app.exception_handler(UndoError)
    def _undo_error(request: Request, exc: UndoError):
        return _error(409, str(exc))

    @app.exception_handler(RequestValidationError)
    def _body_error(request: Request, exc: RequestValidationError):
        # malformed request bodies are validation failures, not solver ones
        first = (exc.errors() or [{}])[0]
        return _error(400, str(first.get("msg", "invalid request body")))

    def _get_record(sid: str) -> SessionRecord | JSONResponse:
        record = app.state.store.get(sid)
        if record is None:
            return _error(404, f"unknown session {sid!r}")
        return record

    @app.get("/healthz")
    def healthz():
        return {"status": "ok"}

    @app.post("/sessions", status_code=201)
    def create_session(payload: dict = Body(...)):
        record = app.state.store.create(payload)
        return record.snapshot()

    @app.get("/sessions/{sid}")
    def get_session(sid: str):
        record = _get_record(sid)
        if isinstance(record, JSONResponse):
            return record
        return record.snapshot()

    @app.patch("/sessions/{sid}/entries")
    def patch_entry(sid: str, payload: dict = Body(...)):
        record = _get_record(sid)
        if isinstance(record, JSONResponse):
            return record
        missing = [k for k in ("i", "j", "value") if k not in payload]
        if missing:
            raise MatrixError(f"missing field(s) {missing} in revision body")
        i, j, value = payload["i"], payload["j"], payload["value"]
        if isinstance(i, bool) or isinstance(j, bool) or not isinstance(i, int) or not isinstance(j, int):
            raise MatrixError("i and j must be integers")
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise MatrixError("value must be a number", row=i, col=j)
        return app.state.store.patch(record, i, j, float(value))

    @app.post("/sessions/{sid}/undo")
    def undo_step(sid: str):
        record = _get_record(sid)
        if isinstance(record, JSONResponse):
            return record
        return app.state.store.undo(record)

    @app.get("/sessions/{sid}/cop")
    def what_if(sid: str, delta: float):
        record = _get_record(sid)
        if isinstance(record, JSONResponse):
            return record
        if not delta >= 0:
            raise MatrixError(f"delta must be nonnegative, got {delta}")
        bundle = record.session.bundle
        report = cop_safety_at(bundle.matrix, bundle.ranking, delta)
        doc = bundle_to_dict(bundle)["cop"] | {
            "delta": report.delta,
            "pop_threshold": report.pop_threshold,
            "poip_threshold": report.poip_threshold,
            "pop_safe": report.pop_safe,
            "poip_safe": report.poip_safe,
            "pop_margin": None if report.pop_margin == float("inf") else report.pop_margin,
            "poip_margin": None if report.poip_margin == float("inf") else report.poip_margin,
            "pop_failures": [list(x) for x in pop_threshold_failures(bundle.matrix, delta)],
            "poip_failures": [list(x) for x in poip_threshold_failures(bundle.matrix, delta)],
        }
        return doc

    return app


app = create_app()


def main() -> None:
    import uvicorn

    parser = argparse.ArgumentParser(prog="coprank-serve", description=__doc__.splitlines()[0])
    parser.add_argument("--bind", default=os.environ.get("COPRANK_BIND", "127.0.0.1:8347"),
                        help="host:port to listen on (env COPRANK_BIND)")
    parser.add_argument("--persist", default=os.environ.get("COPRANK_PERSIST"),
                        help="JSONL event file for session persistence (env COPRANK_PERSIST)")
    args = parser.parse_args()
    host, _, port = args.bind.rpartition(":")
    application = create_app(SessionStore(args.persist))
    uvicorn.run(application, host=host or "127.0.0.1", port=int(port))
