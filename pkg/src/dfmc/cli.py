"""Command-line front door.

Exit codes: 0 success (warnings allowed), 1 validation errors found,
2 usage or I/O failure. Standard output carries only payload; diagnostics
that are not themselves the payload, and all logs, go to standard error.
"""

from __future__ import annotations

import json
import socket
import sys
from datetime import datetime
from pathlib import Path

import click

from dfmc import __version__
from dfmc.errors import (
    ConflictError,
    EmptyInputError,
    RejectedInvalidError,
    StorageError,
    UnknownVocabularyError,
)
from dfmc.render import RenderOptions, emit_schema, parse_timestamp, to_json, to_markdown
from dfmc.service import DEFAULT_PORT, create_app
from dfmc.store import CardStore
from dfmc.validation import ParseResult, has_errors, lint_card, parse_card, sort_diagnostics
from dfmc.vocab import FORENSIC_CLASSIFICATION, VOCABULARIES, canonicalize, vocabulary

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2


def _read_document(path: str) -> bytes:
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        click.echo(f"cannot read {path}: {exc}", err=True)
        sys.exit(EXIT_USAGE)


def _parse_or_fail(document: bytes) -> ParseResult:
    """Parse a card; on error print diagnostics to stderr and exit 1."""
    result = parse_card(document)
    if not result.ok:
        for diagnostic in result.diagnostics:
            click.echo(diagnostic.format_line(), err=True)
        sys.exit(EXIT_INVALID)
    return result


class _TimestampParam(click.ParamType):
    name = "timestamp"

    def convert(self, value, param, ctx):
        try:
            return parse_timestamp(value)
        except ValueError:
            self.fail(f"{value!r} is not an ISO-8601 instant", param, ctx)


TIMESTAMP = _TimestampParam()

_store_option = click.option(
    "--store",
    "store_root",
    envvar="DFMC_STORE",
    required=True,
    type=click.Path(file_okay=False, path_type=Path),
    help="Store root directory (default: DFMC_STORE).",
)


@click.group()
@click.version_option(__version__, prog_name="dfmc")
def main():
    """Author, validate, render, and store digital forensics model cards."""


@main.command()
@click.argument("input_path", type=click.Path(dir_okay=False))
@click.option(
    "--format",
    "output_format",
    type=click.Choice(["text", "json"]),
    default="text",
    show_default=True,
    help="Diagnostic output format.",
)
def validate(input_path: str, output_format: str):
    """Parse and lint a card file; print every finding."""
    result = parse_card(_read_document(input_path))
    diagnostics = list(result.diagnostics)
    if result.ok:
        diagnostics = list(sort_diagnostics(diagnostics + lint_card(result.card)))

    if output_format == "json":
        click.echo(json.dumps([d.to_dict() for d in diagnostics], indent=2))
    else:
        for diagnostic in diagnostics:
            click.echo(diagnostic.format_line())

    sys.exit(EXIT_INVALID if has_errors(diagnostics) else EXIT_OK)


@main.command()
@click.argument("input_path", type=click.Path(dir_okay=False))
@click.option(
    "--format",
    "output_format",
    type=click.Choice(["json", "markdown"]),
    required=True,
    help="Output document format.",
)
@click.option(
    "--output",
    "-o",
    "output_path",
    type=click.Path(dir_okay=False, path_type=Path),
    default=None,
    help="Write to a file instead of standard output.",
)
@click.option(
    "--timestamp",
    type=TIMESTAMP,
    default=None,
    help="Pin the generation instant (ISO-8601) for reproducible output.",
)
def render(input_path: str, output_format: str, output_path: Path | None, timestamp: datetime | None):
    """Render a card file as canonical JSON or Markdown."""
    result = _parse_or_fail(_read_document(input_path))
    opts = RenderOptions(timestamp=timestamp)
    if output_format == "markdown":
        payload = to_markdown(result.card, opts).encode("utf-8")
    else:
        payload = to_json(result.card, opts)

    if output_path is not None:
        try:
            output_path.write_bytes(payload)
        except OSError as exc:
            click.echo(f"cannot write {output_path}: {exc}", err=True)
            sys.exit(EXIT_USAGE)
    else:
        sys.stdout.buffer.write(payload)
        sys.stdout.buffer.flush()
    sys.exit(EXIT_OK)


@main.group()
def vocab():
    """Inspect the controlled vocabularies."""


@vocab.command(name="list")
def vocab_list():
    """Print the vocabulary ids, one per line."""
    for vocab_id in VOCABULARIES:
        click.echo(vocab_id)


@vocab.command(name="show")
@click.argument("vocabulary_id")
def vocab_show(vocabulary_id: str):
    """Print one vocabulary's terms in canonical order."""
    try:
        for term in vocabulary(vocabulary_id).terms:
            click.echo(term.label)
    except UnknownVocabularyError as exc:
        click.echo(str(exc), err=True)
        sys.exit(EXIT_USAGE)


@main.command()
def schema():
    """Print the card document schema."""
    sys.stdout.buffer.write(emit_schema())
    sys.stdout.buffer.flush()


@main.command()
@click.argument("input_path", type=click.Path(dir_okay=False))
@_store_option
@click.option("--overwrite", is_flag=True, help="Replace an existing card with the same id.")
def save(input_path: str, store_root: Path, overwrite: bool):
    """Validate a card file and store it; print the stored id."""
    result = _parse_or_fail(_read_document(input_path))
    try:
        card_id = CardStore(store_root).save(result.card, overwrite=overwrite)
    except RejectedInvalidError as exc:
        for diagnostic in exc.diagnostics:
            click.echo(diagnostic.format_line(), err=True)
        sys.exit(EXIT_INVALID)
    except (ConflictError, StorageError) as exc:
        click.echo(str(exc), err=True)
        sys.exit(EXIT_USAGE)
    click.echo(card_id)


@main.command(name="list")
@_store_option
@click.option("--domain", default=None, help="Only cards documenting this forensic domain.")
def list_cards(store_root: Path, domain: str | None):
    """List stored cards as 'id<TAB>domains'."""
    selection = None
    if domain is not None:
        try:
            selection = canonicalize(FORENSIC_CLASSIFICATION, domain)
        except EmptyInputError:
            click.echo("domain filter must not be blank", err=True)
            sys.exit(EXIT_USAGE)
    try:
        listing = CardStore(store_root).list_cards(selection)
    except StorageError as exc:
        click.echo(str(exc), err=True)
        sys.exit(EXIT_USAGE)
    for skipped in listing.skipped:
        click.echo(f"skipping {skipped.filename}: {skipped.reason}", err=True)
    for card in listing.cards:
        domains = ", ".join(s.label for s in card.classification.domains)
        click.echo(f"{card.id}\t{domains}")


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=DEFAULT_PORT, show_default=True, type=int)
@_store_option
@click.option(
    "--ui",
    "ui_dir",
    type=click.Path(file_okay=False, exists=True, path_type=Path),
    default=None,
    help="Serve a built frontend directory at the site root.",
)
def serve(host: str, port: int, store_root: Path, ui_dir: Path | None):
    """Run the HTTP service."""
    probe = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
    try:
        probe.bind((host, port))
    except OSError as exc:
        click.echo(f"cannot bind {host}:{port}: {exc}", err=True)
        sys.exit(EXIT_USAGE)
    finally:
        probe.close()

    import uvicorn

    app = create_app(CardStore(store_root), ui_dir=ui_dir)
    uvicorn.run(app, host=host, port=port, log_level="info")


if __name__ == "__main__":
    main()
