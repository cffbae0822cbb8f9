"""Session-oriented HTTP service exposing the recommenders.

Every endpoint is a thin shell over the library modules: parse and stash
the ontology in a session, then route recommendation and hierarchy calls
through the same functions the CLI uses, so service responses match
direct library calls exactly.
"""

from __future__ import annotations

import threading
import time
import uuid
from dataclasses import dataclass, field
from pathlib import Path

from fastapi import FastAPI, HTTPException, Request
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from ontoseer import naming, ontoclean
from ontoseer.axioms import DEFAULT_AXIOM_K, recommend_axioms
from ontoseer.config import ServiceConfig
from ontoseer.index import (
    CorpusIndex,
    Recommendation,
    build_index_from_dir,
    load_corpus,
    load_index,
    recommend_terms,
    save_index,
)
from ontoseer.model import OntologyDocument, render_axiom
from ontoseer.odp import load_odp_dir, recommend_odps
from ontoseer.turtle import TurtleSyntaxError, parse_turtle


@dataclass
class Session:
    id: str
    working: OntologyDocument
    text: str
    meta: dict = field(default_factory=lambda: {"description": "", "domain": "", "cqs": []})
    answers: dict = field(default_factory=dict)
    created_at: float = field(default_factory=time.time)


class ServiceState:
    def __init__(self, config: ServiceConfig):
        self.config = config
        self.sessions: dict[str, Session] = {}
        self.lock = threading.Lock()
        self.index = CorpusIndex()
        self.corpus: list[OntologyDocument] = []
        self.odps = []
        self.reload()

    def reload(self):
        cfg = self.config
        if cfg.index_path and Path(cfg.index_path).exists():
            self.index = load_index(cfg.index_path)
        elif cfg.corpus_dir:
            self.index = CorpusIndex()
        if cfg.corpus_dir and Path(cfg.corpus_dir).exists():
            self.corpus = load_corpus(cfg.corpus_dir)
            if not self.index.registry:
                from ontoseer.index import build_index
                self.index = build_index(self.corpus)
        if cfg.odp_dir and Path(cfg.odp_dir).exists():
            self.odps = load_odp_dir(cfg.odp_dir)

    def reindex(self):
        if not self.config.corpus_dir:
            raise HTTPException(status_code=400, detail="corpus_dir is not configured")
        self.index = build_index_from_dir(self.config.corpus_dir)
        self.corpus = load_corpus(self.config.corpus_dir)
        if self.config.index_path:
            save_index(self.index, self.config.index_path)
        return {"ontologies": len(self.index.registry),
                "tokens": len(self.index.token_map)}

    def session(self, session_id: str) -> Session:
        try:
            return self.sessions[session_id]
        except KeyError:
            raise HTTPException(status_code=404, detail=f"unknown session {session_id}")


def _recommendation_json(rec: Recommendation) -> dict:
    return {"item": rec.item, "source": rec.source,
            "score": rec.score, "rationale": rec.rationale}


def _axiom_json(rec) -> dict:
    return {"item": render_axiom(rec.axiom),
            "source": rec.source_ontology,
            "score": rec.similarity,
            "rationale": f"matches {rec.matched_entity} from {rec.source_ontology}",
            "working_entity": str(rec.working_entity),
            "matched_entity": str(rec.matched_entity),
            "source_axiom": render_axiom(rec.source_axiom)}


def _finding_json(finding: naming.NameFinding) -> dict:
    return {"item": finding.term,
            "source": "working-ontology",
            "name": finding.name,
            "kind": finding.kind,
            "issues": [issue.value for issue in finding.issues],
            "suggestions": finding.suggestions}


def _verdict_json(verdict: ontoclean.Verdict) -> dict:
    return {"subclass": verdict.subclass,
            "superclass": verdict.superclass,
            "rule": verdict.rule.value,
            "status": verdict.status.value,
            "explanation": verdict.explanation}


def _float_param(request: Request, name: str, default: float) -> float:
    raw = request.query_params.get(name)
    if raw is None:
        return default
    try:
        value = float(raw)
    except ValueError:
        raise HTTPException(status_code=400, detail=f"{name} must be a number")
    if not 0.0 <= value <= 1.0:
        raise HTTPException(status_code=400, detail=f"{name} must be within [0, 1]")
    return value


def _int_param(request: Request, name: str, default: int) -> int:
    raw = request.query_params.get(name)
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError:
        raise HTTPException(status_code=400, detail=f"{name} must be an integer")
    if value < 1:
        raise HTTPException(status_code=400, detail=f"{name} must be at least 1")
    return value


def create_app(config: ServiceConfig | None = None) -> FastAPI:
    state = ServiceState(config or ServiceConfig())
    app = FastAPI(title="ontoseer", version="0.1.0")
    app.state.ontoseer = state

    @app.post("/ontology", status_code=201)
    async def create_session(request: Request):
        body = await request.body()
        if len(body) > state.config.max_upload_bytes:
            raise HTTPException(status_code=413, detail="ontology upload too large")
        try:
            text = body.decode("utf-8")
            working = parse_turtle(text)
        except TurtleSyntaxError as exc:
            return JSONResponse(status_code=400, content={
                "error": exc.message, "line": exc.line, "column": exc.column})
        except UnicodeDecodeError:
            raise HTTPException(status_code=400, detail="body is not UTF-8 text")
        session = Session(id=uuid.uuid4().hex, working=working, text=text)
        with state.lock:
            state.sessions[session.id] = session
        return {"session": session.id}

    @app.get("/sessions/{session_id}/recommend/{kind}")
    def recommend(session_id: str, kind: str, request: Request):
        session = state.session(session_id)
        cfg = state.config
        if kind == "terms":
            query = request.query_params.get("query")
            if not query:
                raise HTTPException(status_code=400, detail="query parameter is required")
            k = _int_param(request, "k", 10)
            floor = _float_param(request, "floor", cfg.term_floor)
            kind_filter = request.query_params.get("kind") or None
            items = [_recommendation_json(r) for r in recommend_terms(
                state.index, query, kind_filter=kind_filter, k=k, floor=floor)]
        elif kind == "axioms":
            k = _int_param(request, "k", DEFAULT_AXIOM_K)
            threshold = _float_param(request, "threshold", cfg.axiom_threshold)
            items = [_axiom_json(r) for r in recommend_axioms(
                session.working, state.corpus, state.index, k=k, threshold=threshold)]
        elif kind == "odps":
            k = _int_param(request, "k", 5)
            threshold = _float_param(request, "threshold", cfg.odp_threshold)
            items = [_recommendation_json(r) for r in recommend_odps(
                session.working, session.meta, state.odps, k=k, threshold=threshold)]
        elif kind == "names":
            k = 0
            items = [_finding_json(f) for f in naming.check_term_names(session.working)]
        else:
            raise HTTPException(status_code=400,
                                detail=f"unknown recommendation kind {kind!r}")
        return {"items": items, "kind": kind, "k": k or len(items)}

    @app.post("/sessions/{session_id}/meta")
    def update_meta(session_id: str, body: dict):
        session = state.session(session_id)
        if not isinstance(body, dict):
            raise HTTPException(status_code=400, detail="meta body must be an object")
        meta = dict(session.meta)
        for key in ("description", "domain"):
            if key in body:
                if body[key] is not None and not isinstance(body[key], str):
                    raise HTTPException(status_code=400, detail=f"{key} must be a string")
                meta[key] = body[key] or ""
        if "cqs" in body:
            cqs = body["cqs"]
            if cqs is None:
                cqs = []
            if not isinstance(cqs, list) or any(not isinstance(q, str) for q in cqs):
                raise HTTPException(status_code=400, detail="cqs must be a list of strings")
            meta["cqs"] = cqs
        with state.lock:
            session.meta = meta
        return {"meta": session.meta}

    @app.get("/sessions/{session_id}/hierarchy/questions")
    def hierarchy_questions(session_id: str):
        session = state.session(session_id)
        profiles = {cls: ontoclean.profile_from_answers(cls, answers)
                    for cls, answers in session.answers.items()}
        pending = ontoclean.pending_classes(session.working, profiles)
        return {"pending": [{"class": cls, "questions": ontoclean.questions_for(cls)}
                            for cls in pending]}

    @app.post("/sessions/{session_id}/hierarchy/answers")
    def hierarchy_answers(session_id: str, body: dict):
        session = state.session(session_id)
        posted = body.get("answers")
        if not isinstance(posted, list):
            raise HTTPException(status_code=400,
                                detail="body must carry an 'answers' list")
        known = {str(c) for c in session.working.classes}
        updates = {}
        for entry in posted:
            if not isinstance(entry, dict) or "class" not in entry:
                raise HTTPException(status_code=400,
                                    detail="each answer needs a 'class' field")
            cls = entry["class"]
            if cls not in known:
                raise HTTPException(status_code=400,
                                    detail=f"unknown class {cls}")
            answers = {q: entry.get(q) for q in ("q1", "q2", "q3")}
            try:
                ontoclean.profile_from_answers(cls, answers)
            except ValueError as exc:
                raise HTTPException(status_code=400, detail=str(exc))
            updates[cls] = answers
        with state.lock:
            session.answers.update(updates)
            profiles = {cls: ontoclean.profile_from_answers(cls, answers)
                        for cls, answers in session.answers.items()}
        verdicts = ontoclean.validate_hierarchy(session.working, profiles)
        return {"verdicts": [_verdict_json(v) for v in verdicts]}

    @app.post("/admin/reindex")
    def reindex():
        with state.lock:
            return state.reindex()

    ui_dir = _find_ui_dir()
    if ui_dir is not None:
        app.mount("/ui", StaticFiles(directory=str(ui_dir), html=True), name="ui")

    return app


def _find_ui_dir() -> Path | None:
    import os
    candidates = []
    if os.environ.get("ONTOSEER_UI_DIR"):
        candidates.append(Path(os.environ["ONTOSEER_UI_DIR"]))
    candidates.append(Path.cwd() / "frontend" / "dist")
    candidates.append(Path(__file__).resolve().parents[2] / "frontend" / "dist")
    for candidate in candidates:
        if candidate.is_dir():
            return candidate
    return None
