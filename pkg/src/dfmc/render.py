"""Deterministic card rendering: canonical JSON, Markdown, and the schema.

Both outputs are byte-stable for a fixed card and options: same input,
identical bytes. Absent optionals are omitted from JSON entirely rather
than written as null, so a sparse card stays sparse on disk.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from datetime import datetime, timezone

from dfmc import __version__
from dfmc.model import ModelCard, PIPELINE_PROCESSES, TOP_LEVEL_ELEMENTS
from dfmc.validation import MMCID_PATTERN
from dfmc.vocab import VOCABULARIES, TermSelection, USAGE_CONTEXT

SCHEMA_VERSION = "1.0-beta"

FOUNDATIONAL_REFERENCES = (
    "Mitchell, M., Wu, S., Zaldivar, A., Barnes, P., Vasserman, L., Hutchinson, B., "
    "Spitzer, E., Raji, I. D., & Gebru, T. (2019). Model Cards for Model Reporting. "
    "Proceedings of the Conference on Fairness, Accountability, and Transparency, 220-229.",
    "Hargreaves, C., Nelson, A., & Casey, E. (2024). An abstract model for digital "
    "forensic analysis tools - A foundation for systematic error mitigation analysis. "
    "Forensic Science International: Digital Investigation, 48.",
)

TIMESTAMP_FORMAT = "%Y-%m-%dT%H:%M:%SZ"

MARKDOWN_TITLE = "Digital Forensics Model Card"
SECTION_HEADINGS = (
    "Identification & Context",
    "Case Context",
    "Classification & Approach",
    "Quality & Limitations",
    "Top Level Elements (DF MC 0)",
    "Data Types & Analytical Processes (DF MC 1)",
)

_NOT_DOCUMENTED = "*(not documented)*"


@dataclass(frozen=True)
class RenderOptions:
    """Generation metadata applied to an output.

    With no explicit timestamp the current UTC time is used, truncated to
    whole seconds. Pin the timestamp to make output reproducible.
    """

    timestamp: datetime | None = None
    generator_version: str = __version__
    schema_version: str = SCHEMA_VERSION

    def resolved(self) -> "RenderOptions":
        """Options with the timestamp pinned (now, if unset)."""
        stamp = self.timestamp if self.timestamp is not None else datetime.now(timezone.utc)
        if stamp.tzinfo is None:
            stamp = stamp.replace(tzinfo=timezone.utc)
        stamp = stamp.astimezone(timezone.utc).replace(microsecond=0)
        return replace(self, timestamp=stamp)


@dataclass(frozen=True)
class RenderedCard:
    """The dual outputs for one card, with the options actually applied."""

    json_bytes: bytes
    markdown_text: str
    options_used: RenderOptions


def parse_timestamp(value: str) -> datetime:
    """Parse an ISO-8601 instant; a trailing Z means UTC."""
    text = value.strip()
    if text.endswith("Z"):
        text = text[:-1] + "+00:00"
    stamp = datetime.fromisoformat(text)
    if stamp.tzinfo is None:
        stamp = stamp.replace(tzinfo=timezone.utc)
    return stamp.astimezone(timezone.utc)


def _selection_value(selection: TermSelection):
    if selection.is_other:
        return {"other": selection.other}
    return selection.term.label


def _selection_values(selections) -> list:
    return [_selection_value(s) for s in selections]


def card_to_document(card: ModelCard) -> dict:
    """The card's six sections as a JSON-ready dict, no generation meta."""
    identification: dict = {}
    ident = card.identification
    if ident.mmcid is not None:
        identification["mmcid"] = ident.mmcid
    if ident.version is not None:
        identification["version"] = ident.version
    if ident.owner is not None:
        identification["owner"] = ident.owner
    if ident.usage_context is not None:
        identification["usage_context"] = _selection_value(ident.usage_context)
    if ident.layer_stage is not None:
        identification["layer_stage"] = ident.layer_stage

    case_context: dict = {}
    if card.case_context.case_statement is not None:
        case_context["case_statement"] = card.case_context.case_statement
    if card.case_context.hypotheses:
        case_context["hypotheses"] = list(card.case_context.hypotheses)

    classification: dict = {}
    if card.classification.domains:
        classification["domains"] = _selection_values(card.classification.domains)
    if card.classification.reasoning:
        classification["reasoning"] = _selection_values(card.classification.reasoning)

    quality: dict = {}
    if card.quality.biases:
        quality["biases"] = _selection_values(card.quality.biases)
    if card.quality.bias_causes:
        quality["bias_causes"] = _selection_values(card.quality.bias_causes)
    if card.quality.errors_observed is not None:
        quality["errors_observed"] = card.quality.errors_observed
    if card.quality.error_causes:
        quality["error_causes"] = _selection_values(card.quality.error_causes)

    def checklist_entries(checklist) -> list[dict]:
        out = []
        for entry in checklist.entries:
            item = {"key": entry.key, "label": entry.label, "selected": entry.selected}
            if entry.description is not None:
                item["description"] = entry.description
            out.append(item)
        return out

    return {
        "identification": identification,
        "case_context": case_context,
        "classification": classification,
        "quality": quality,
        "top_level": checklist_entries(card.top_level),
        "pipeline": checklist_entries(card.pipeline),
    }


def _meta_object(opts: RenderOptions) -> dict:
    return {
        "timestamp": opts.timestamp.strftime(TIMESTAMP_FORMAT),
        "generator_version": opts.generator_version,
        "schema_version": opts.schema_version,
        "references": list(FOUNDATIONAL_REFERENCES),
    }


def _dump(document: dict) -> bytes:
    return (json.dumps(document, indent=2, ensure_ascii=False) + "\n").encode("utf-8")


def to_json(card: ModelCard, opts: RenderOptions | None = None) -> bytes:
    """Canonical JSON document: fixed key order, 2-space indent, UTF-8."""
    opts = (opts or RenderOptions()).resolved()
    document = card_to_document(card)
    document["meta"] = _meta_object(opts)
    return _dump(document)


def _field_lines(label: str, value: str | None) -> list[str]:
    return [f"- **{label}:** {value if value is not None else _NOT_DOCUMENTED}"]


def _selection_label(selection: TermSelection) -> str:
    if selection.is_other:
        return f"Other: {selection.other}"
    return selection.term.label


def _list_lines(label: str, items: list[str]) -> list[str]:
    if not items:
        return [f"- **{label}:** {_NOT_DOCUMENTED}"]
    return [f"- **{label}:**"] + [f"  - {item}" for item in items]


def _checklist_lines(checklist) -> list[str]:
    lines = []
    for entry in checklist.entries:
        box = "x" if entry.selected else " "
        lines.append(f"- [{box}] {entry.label}")
        if entry.description is not None:
            lines.append(f"  - {entry.description}")
    return lines


def to_markdown(card: ModelCard, opts: RenderOptions | None = None) -> str:
    """Human-readable document: H1 title, six H2 sections, metadata footer."""
    opts = (opts or RenderOptions()).resolved()
    ident = card.identification
    title = MARKDOWN_TITLE if ident.mmcid is None else f"{MARKDOWN_TITLE} ({ident.mmcid})"

    lines: list[str] = [f"# {title}", ""]

    lines += [f"## {SECTION_HEADINGS[0]}", ""]
    lines += _field_lines("MMCID", ident.mmcid)
    lines += _field_lines("Version", ident.version)
    lines += _field_lines("Owner", ident.owner)
    usage = None if ident.usage_context is None else _selection_label(ident.usage_context)
    lines += _field_lines("Usage Context", usage)
    lines += _field_lines("Layer/Stage", ident.layer_stage)
    lines.append("")

    lines += [f"## {SECTION_HEADINGS[1]}", ""]
    lines += _field_lines("Case Statement", card.case_context.case_statement)
    lines += _list_lines("Hypotheses", list(card.case_context.hypotheses))
    lines.append("")

    lines += [f"## {SECTION_HEADINGS[2]}", ""]
    lines += _list_lines(
        "Forensic Domains", [_selection_label(s) for s in card.classification.domains]
    )
    lines += _list_lines(
        "Reasoning Methodologies", [_selection_label(s) for s in card.classification.reasoning]
    )
    lines.append("")

    lines += [f"## {SECTION_HEADINGS[3]}", ""]
    lines += _list_lines("Bias Types", [_selection_label(s) for s in card.quality.biases])
    lines += _list_lines("Causes of Bias", [_selection_label(s) for s in card.quality.bias_causes])
    lines += _field_lines("Observed Errors", card.quality.errors_observed)
    lines += _list_lines("Causes of Error", [_selection_label(s) for s in card.quality.error_causes])
    lines.append("")

    lines += [f"## {SECTION_HEADINGS[4]}", ""]
    lines += _checklist_lines(card.top_level)
    lines.append("")

    lines += [f"## {SECTION_HEADINGS[5]}", ""]
    lines += _checklist_lines(card.pipeline)
    lines.append("")

    lines += ["### Generation Metadata", ""]
    lines.append(f"- **Generated:** {opts.timestamp.strftime(TIMESTAMP_FORMAT)}")
    lines.append(f"- **Generator version:** {opts.generator_version}")
    lines.append(f"- **Schema version:** {opts.schema_version}")
    lines.append("- **References:**")
    for reference in FOUNDATIONAL_REFERENCES:
        lines.append(f"  - {reference}")

    return "\n".join(lines) + "\n"


def render_card(card: ModelCard, opts: RenderOptions | None = None) -> RenderedCard:
    """Both outputs at once, sharing a single resolved timestamp."""
    resolved = (opts or RenderOptions()).resolved()
    return RenderedCard(
        json_bytes=to_json(card, resolved),
        markdown_text=to_markdown(card, resolved),
        options_used=resolved,
    )


def _selection_def(vocabulary_id: str) -> dict:
    return {
        "oneOf": [
            {"type": "string", "enum": list(VOCABULARIES[vocabulary_id].labels)},
            {"$ref": "#/$defs/other_entry"},
        ]
    }


def _selection_list_schema(vocabulary_id: str) -> dict:
    return {
        "type": "array",
        "items": {"$ref": f"#/$defs/{vocabulary_id}_selection"},
        "minItems": 1,
        "uniqueItems": True,
    }


def _checklist_schema(catalog) -> dict:
    return {
        "type": "array",
        "minItems": len(catalog),
        "maxItems": len(catalog),
        "prefixItems": [
            {
                "type": "object",
                "properties": {
                    "key": {"const": key},
                    "label": {"const": label},
                    "selected": {"type": "boolean"},
                    "description": {"type": "string", "minLength": 1},
                },
                "required": ["key", "label", "selected"],
                "additionalProperties": False,
            }
            for key, label in catalog
        ],
        "items": False,
    }


_TEXT = {"type": "string", "minLength": 1}


def schema_document() -> dict:
    """The card document schema as a dict (see :func:`emit_schema`)."""
    return {
        "$schema": "https://json-schema.org/draft/2020-12/schema",
        "title": "Digital Forensics Model Card",
        "description": (
            "Card document layout: six sections in fixed order plus generation "
            "metadata, with vocabulary enumerations, the card identifier grammar, "
            "and the fixed checklists."
        ),
        "version": SCHEMA_VERSION,
        "type": "object",
        "properties": {
            "identification": {
                "type": "object",
                "properties": {
                    "mmcid": {"type": "string", "pattern": MMCID_PATTERN},
                    "version": _TEXT,
                    "owner": _TEXT,
                    "usage_context": {"$ref": f"#/$defs/{USAGE_CONTEXT}_selection"},
                    "layer_stage": _TEXT,
                },
                "additionalProperties": False,
            },
            "case_context": {
                "type": "object",
                "properties": {
                    "case_statement": _TEXT,
                    "hypotheses": {"type": "array", "items": _TEXT, "minItems": 1},
                },
                "additionalProperties": False,
            },
            "classification": {
                "type": "object",
                "properties": {
                    "domains": _selection_list_schema("forensic_classification"),
                    "reasoning": _selection_list_schema("reasoning_methodology"),
                },
                "additionalProperties": False,
            },
            "quality": {
                "type": "object",
                "properties": {
                    "biases": _selection_list_schema("bias_taxonomy"),
                    "bias_causes": _selection_list_schema("cause_of_bias"),
                    "errors_observed": _TEXT,
                    "error_causes": _selection_list_schema("error_causation"),
                },
                "additionalProperties": False,
            },
            "top_level": _checklist_schema(TOP_LEVEL_ELEMENTS),
            "pipeline": _checklist_schema(PIPELINE_PROCESSES),
            "meta": {
                "type": "object",
                "properties": {
                    "timestamp": {
                        "type": "string",
                        "pattern": "^[0-9]{4}-[0-9]{2}-[0-9]{2}T[0-9]{2}:[0-9]{2}:[0-9]{2}Z$",
                    },
                    "generator_version": _TEXT,
                    "schema_version": {"const": SCHEMA_VERSION},
                    "references": {"const": list(FOUNDATIONAL_REFERENCES)},
                },
                "required": ["timestamp", "generator_version", "schema_version", "references"],
                "additionalProperties": False,
            },
        },
        "required": [
            "identification",
            "case_context",
            "classification",
            "quality",
            "top_level",
            "pipeline",
            "meta",
        ],
        "additionalProperties": False,
        "$defs": {
            "other_entry": {
                "type": "object",
                "properties": {"other": _TEXT},
                "required": ["other"],
                "additionalProperties": False,
            },
            **{
                f"{vocab_id}_selection": _selection_def(vocab_id)
                for vocab_id in VOCABULARIES
            },
        },
    }


def emit_schema() -> bytes:
    """The schema document as stable UTF-8 JSON bytes."""
    return _dump(schema_document())
