"""Command line interface wiring all recommenders together."""

from __future__ import annotations

import sys
from pathlib import Path

import click

from ontoseer import evalkit, naming, ontoclean
from ontoseer.axioms import DEFAULT_AXIOM_K, DEFAULT_AXIOM_THRESHOLD, recommend_axioms
from ontoseer.config import ServiceConfig, load_config
from ontoseer.cq import seed_suggestions
from ontoseer.errors import OntoSeerError
from ontoseer.index import (
    DEFAULT_SCORE_FLOOR,
    build_index_from_dir,
    load_index,
    recommend_terms,
    save_index,
)
from ontoseer.model import local_name, render_axiom
from ontoseer.odp import DEFAULT_ODP_THRESHOLD, load_odp_dir, recommend_odps
from ontoseer.turtle import load_ontology


@click.group()
def main():
    """Ontology quality recommendations: term and axiom reuse, design
    patterns, naming conventions, and class hierarchy validation."""


def _fail(exc: Exception):
    raise click.ClickException(str(exc))


@main.command("index")
@click.option("--corpus", "corpus_dir", required=True,
              type=click.Path(exists=True, file_okay=False),
              help="Directory walked recursively for *.ttl files.")
@click.option("--out", "out_path", required=True, type=click.Path(dir_okay=False))
def index_cmd(corpus_dir, out_path):
    """Build the corpus index and write it to a JSON file."""
    try:
        index = build_index_from_dir(corpus_dir)
        save_index(index, out_path)
    except OntoSeerError as exc:
        _fail(exc)
    click.echo(f"indexed {len(index.registry)} ontologies, "
               f"{len(index.token_map)} tokens -> {out_path}")


@main.group()
def recommend():
    """Ranked reuse recommendations."""


@recommend.command("terms")
@click.option("--index", "index_path", required=True, type=click.Path(exists=True))
@click.option("--query", required=True)
@click.option("--kind", type=click.Choice(["class", "object_property", "data_property"]))
@click.option("--k", default=10, show_default=True)
@click.option("--floor", default=DEFAULT_SCORE_FLOOR, show_default=True)
def recommend_terms_cmd(index_path, query, kind, k, floor):
    """Terms from the corpus matching a query string."""
    try:
        index = load_index(index_path)
        recs = recommend_terms(index, query, kind_filter=kind, k=k, floor=floor)
    except OntoSeerError as exc:
        _fail(exc)
    for rec in recs:
        click.echo(f"{rec.score:.3f}  {rec.item}  {rec.source}")
    if not recs:
        click.echo("no recommendations", err=True)


def _corpus_for_axioms(index, corpus_dir):
    from ontoseer.index import load_corpus
    if corpus_dir:
        return load_corpus(corpus_dir)
    docs = []
    for entry in index.registry.values():
        path = entry.get("source_path")
        if path and Path(path).exists():
            docs.append(load_ontology(path))
    return docs


@recommend.command("axioms")
@click.option("--ontology", "ontology_path", required=True, type=click.Path(exists=True))
@click.option("--index", "index_path", required=True, type=click.Path(exists=True))
@click.option("--corpus", "corpus_dir", type=click.Path(exists=True, file_okay=False),
              help="Reload corpus from here instead of the indexed paths.")
@click.option("--k", default=DEFAULT_AXIOM_K, show_default=True)
@click.option("--threshold", default=DEFAULT_AXIOM_THRESHOLD, show_default=True)
def recommend_axioms_cmd(ontology_path, index_path, corpus_dir, k, threshold):
    """Corpus axioms rewritten onto this ontology's entities."""
    try:
        working = load_ontology(ontology_path)
        index = load_index(index_path)
        corpus = _corpus_for_axioms(index, corpus_dir)
        recs = recommend_axioms(working, corpus, index, k=k, threshold=threshold)
    except OntoSeerError as exc:
        _fail(exc)
    for rec in recs:
        click.echo(f"{rec.similarity:.3f}  {render_axiom(rec.axiom)}  {rec.source_ontology}")
    if not recs:
        click.echo("no recommendations", err=True)


@recommend.command("odps")
@click.option("--ontology", "ontology_path", required=True, type=click.Path(exists=True))
@click.option("--odp-dir", required=True, type=click.Path(exists=True, file_okay=False))
@click.option("--description", default="")
@click.option("--domain", default="")
@click.option("--cqs", "cqs_path", type=click.Path(exists=True, dir_okay=False),
              help="File with one competency question per line.")
@click.option("--k", default=5, show_default=True)
@click.option("--threshold", default=DEFAULT_ODP_THRESHOLD, show_default=True)
def recommend_odps_cmd(ontology_path, odp_dir, description, domain, cqs_path, k, threshold):
    """Design patterns ranked against the ontology and its metadata."""
    try:
        working = load_ontology(ontology_path)
        odps = load_odp_dir(odp_dir)
        cqs = _read_lines(cqs_path) if cqs_path else []
        meta = {"description": description, "domain": domain, "cqs": cqs}
        recs = recommend_odps(working, meta, odps, k=k, threshold=threshold)
    except OntoSeerError as exc:
        _fail(exc)
    for rec in recs:
        click.echo(f"{rec.score:.3f}  {rec.item}  [{rec.rationale}]")
    if not recs:
        click.echo("no recommendations", err=True)


def _read_lines(path):
    return [line.strip() for line in Path(path).read_text(encoding="utf-8").splitlines()
            if line.strip()]


@main.command("check-names")
@click.option("--ontology", "ontology_path", required=True, type=click.Path(exists=True))
def check_names_cmd(ontology_path):
    """Report naming convention violations with suggested fixes."""
    try:
        doc = load_ontology(ontology_path)
        findings = naming.check_term_names(doc)
    except OntoSeerError as exc:
        _fail(exc)
    for finding in findings:
        issues = ", ".join(i.value for i in finding.issues)
        fix = f" -> {finding.suggestions[0]}" if finding.suggestions else ""
        click.echo(f"{finding.name} ({finding.kind}): {issues}{fix}")
    if not findings:
        click.echo("all names conform", err=True)


def _parse_answers_file(path) -> dict[str, dict]:
    answers: dict[str, dict] = {}
    for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        parts = line.rstrip("\n").split("\t")
        cls, pairs = parts[0].strip(), parts[1:]
        entry = answers.setdefault(cls, {})
        for pair in pairs:
            if not pair.strip():
                continue
            key, sep, value = pair.partition("=")
            if not sep or key.strip() not in ("q1", "q2", "q3"):
                raise click.ClickException(
                    f"{path}:{lineno}: expected q1|q2|q3=yes|no, got {pair!r}")
            entry[key.strip()] = value.strip()
    return answers


def _ask_interactively(doc) -> dict[str, dict]:
    answers: dict[str, dict] = {}
    for cls in ontoclean.pending_classes(doc, {}):
        click.echo(f"\n{local_name(cls)} ({cls})")
        entry = {}
        for key, question in zip(("q1", "q2", "q3"), ontoclean.questions_for(cls)):
            entry[key] = "yes" if click.confirm(question) else "no"
        answers[cls] = entry
    return answers


@main.command("validate-hierarchy")
@click.option("--ontology", "ontology_path", required=True, type=click.Path(exists=True))
@click.option("--answers", "answers_path", type=click.Path(exists=True, dir_okay=False),
              help="Tab-separated answers: classIRI, then q1=yes style pairs.")
@click.option("--interactive", is_flag=True,
              help="Ask the three questions per class on the terminal.")
def validate_hierarchy_cmd(ontology_path, answers_path, interactive):
    """Check every subclass edge against the rigidity/identity/unity table."""
    try:
        doc = load_ontology(ontology_path)
    except OntoSeerError as exc:
        _fail(exc)
    if interactive:
        raw_answers = _ask_interactively(doc)
    elif answers_path:
        raw_answers = _parse_answers_file(answers_path)
    else:
        raw_answers = {}
    try:
        profiles = {cls: ontoclean.profile_from_answers(cls, ans)
                    for cls, ans in raw_answers.items()}
    except ValueError as exc:
        _fail(exc)
    verdicts = ontoclean.validate_hierarchy(doc, profiles)
    for v in verdicts:
        click.echo(f"{v.status.value}\t{v.rule.value}\t"
                   f"{local_name(v.subclass)} SubClassOf {local_name(v.superclass)}\t"
                   f"{v.explanation}")
    if not verdicts:
        click.echo("no subclass edges to validate", err=True)
    if any(v.status is ontoclean.Status.VIOLATED for v in verdicts):
        sys.exit(1)


@main.command("eval")
@click.option("--gold", "gold_path", required=True, type=click.Path(exists=True))
@click.option("--recs", "recs_path", required=True, type=click.Path(exists=True))
@click.option("--k", "ks", default="3,5,7", show_default=True,
              help="Comma-separated list of cutoffs.")
def eval_cmd(gold_path, recs_path, ks):
    """Precision@k / recall@k of a recommendation dump against gold."""
    try:
        k_values = [int(part) for part in ks.split(",") if part.strip()]
    except ValueError:
        raise click.ClickException(f"bad --k list {ks!r}")
    if not k_values:
        raise click.ClickException("--k needs at least one cutoff")
    try:
        gold = evalkit.load_gold(gold_path)
        recs = evalkit.load_recs(recs_path)
        reports = evalkit.evaluate(recs, gold, k_values)
    except OntoSeerError as exc:
        _fail(exc)
    click.echo(evalkit.format_reports(reports))


@main.command("seed")
@click.option("--cqs", "cqs_path", required=True, type=click.Path(exists=True, dir_okay=False))
def seed_cmd(cqs_path):
    """Class and property name candidates from competency questions."""
    questions = _read_lines(cqs_path)
    if not questions:
        raise click.ClickException(f"{cqs_path} contains no questions")
    try:
        seeds = seed_suggestions(questions)
    except OntoSeerError as exc:
        _fail(exc)
    click.echo("classes: " + ", ".join(seeds["class_candidates"]))
    click.echo("properties: " + ", ".join(seeds["property_candidates"]))


@main.command("serve")
@click.option("--port", default=None, type=int)
@click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False))
def serve_cmd(port, config_path):
    """Run the HTTP service."""
    import uvicorn

    from ontoseer.service import create_app
    try:
        config = load_config(config_path) if config_path else ServiceConfig()
    except OntoSeerError as exc:
        _fail(exc)
    if port is not None:
        config.port = port
    uvicorn.run(create_app(config), host="127.0.0.1", port=config.port)


if __name__ == "__main__":
    main()
