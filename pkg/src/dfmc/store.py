"""File-backed card store: one JSON document per card.

Layout is flat: ``<root>/<id>.json``. Writes go through a temp file and an
atomic rename, so readers never observe a partially written card; leftover
temp files carry a ``.tmp`` suffix and are ignored by listings.
"""

from __future__ import annotations

import hashlib
import json
import os
import re
import tempfile
from dataclasses import dataclass
from pathlib import Path

from dfmc.errors import ConflictError, RejectedInvalidError, StorageError
from dfmc.model import Classification, ModelCard
from dfmc.render import RenderOptions, card_to_document, to_json
from dfmc.validation import has_errors, lint_card, parse_card
from dfmc.vocab import TermSelection

_ID_RE = re.compile(r"[A-Za-z0-9_-]+")


@dataclass(frozen=True)
class StoredCard:
    """Listing entry: the stored id and the card's classification."""

    id: str
    classification: Classification


@dataclass(frozen=True)
class SkippedFile:
    """A file the listing could not use, and why."""

    filename: str
    reason: str


@dataclass(frozen=True)
class CardListing:
    cards: tuple[StoredCard, ...]
    skipped: tuple[SkippedFile, ...]


def content_id(card: ModelCard) -> str:
    """Stable id for cards without an MMCID, derived from the card body only.

    Generation metadata is excluded so the same content always maps to the
    same id and a re-save collides instead of multiplying files.
    """
    body = json.dumps(card_to_document(card), ensure_ascii=False, separators=(",", ":"))
    digest = hashlib.sha256(body.encode("utf-8")).hexdigest()
    return f"card-{digest[:12]}"


class CardStore:
    """Save, load, and list cards under one root directory."""

    def __init__(self, root: Path | str):
        self.root = Path(root)

    def path_for(self, card_id: str) -> Path:
        return self.root / f"{card_id}.json"

    def save(
        self,
        card: ModelCard,
        opts: RenderOptions | None = None,
        *,
        overwrite: bool = False,
    ) -> str:
        """Write the card; returns the stored id.

        Cards with error-severity lint findings are rejected. The id is the
        MMCID when present, otherwise a content hash. An existing id is only
        replaced when ``overwrite`` is set.
        """
        diagnostics = lint_card(card)
        if has_errors(diagnostics):
            raise RejectedInvalidError([d for d in diagnostics if d.severity == "error"])

        card_id = card.identification.mmcid or content_id(card)
        if not _ID_RE.fullmatch(card_id):
            raise StorageError(f"stored id {card_id!r} contains unsupported characters")

        target = self.path_for(card_id)
        if target.exists() and not overwrite:
            raise ConflictError(card_id)

        payload = to_json(card, opts)
        try:
            self.root.mkdir(parents=True, exist_ok=True)
            fd, temp_path = tempfile.mkstemp(dir=self.root, prefix=f".{card_id}.", suffix=".tmp")
            try:
                with os.fdopen(fd, "wb") as handle:
                    handle.write(payload)
                os.replace(temp_path, target)
            except BaseException:
                try:
                    os.unlink(temp_path)
                except OSError:
                    pass
                raise
        except OSError as exc:
            raise StorageError(f"could not write {target}: {exc}") from exc
        return card_id

    def load(self, card_id: str) -> ModelCard:
        path = self.path_for(card_id)
        try:
            payload = path.read_bytes()
        except OSError as exc:
            raise StorageError(f"could not read {path}: {exc}") from exc
        result = parse_card(payload)
        if not result.ok:
            first = result.diagnostics[0]
            raise StorageError(f"stored card {card_id!r} is corrupt: {first.message}")
        return result.card

    def list_cards(self, domain: TermSelection | None = None) -> CardListing:
        """All stored cards, id-sorted, optionally filtered by forensic domain.

        Corrupt files are skipped and reported, never fatal. A missing root
        just means no cards yet.
        """
        if not self.root.exists():
            return CardListing((), ())
        try:
            paths = sorted(p for p in self.root.iterdir() if p.suffix == ".json" and p.is_file())
        except OSError as exc:
            raise StorageError(f"could not list {self.root}: {exc}") from exc

        cards: list[StoredCard] = []
        skipped: list[SkippedFile] = []
        for path in paths:
            try:
                payload = path.read_bytes()
            except OSError as exc:
                skipped.append(SkippedFile(path.name, f"unreadable: {exc}"))
                continue
            result = parse_card(payload)
            if not result.ok:
                skipped.append(SkippedFile(path.name, result.diagnostics[0].message))
                continue
            card = result.card
            if domain is not None and not any(
                s.matches(domain) for s in card.classification.domains
            ):
                continue
            cards.append(StoredCard(path.stem, card.classification))
        return CardListing(tuple(cards), tuple(skipped))
