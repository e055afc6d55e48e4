"""Identifier grammar, card lint rules, and JSON document parsing.

All checks produce :class:`Diagnostic` values instead of raising, so
callers can present every finding at once. Only error-severity findings
ever block an operation; warnings and info are advisory.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass

from dfmc.model import (
    ChecklistEntry,
    CaseContext,
    Classification,
    Identification,
    ModelCard,
    ProcessPipeline,
    QualityLimitations,
    TopLevelElements,
    has_content,
)
from dfmc.vocab import (
    BIAS_TAXONOMY,
    CAUSE_OF_BIAS,
    ERROR_CAUSATION,
    FORENSIC_CLASSIFICATION,
    NO_IDENTIFIED_BIAS,
    REASONING_METHODOLOGY,
    USAGE_CONTEXT,
    TermSelection,
    canonicalize,
)

# Stable diagnostic codes. The letter encodes the severity.
MALFORMED_MMCID = "DFMC-E001"
UNREADABLE_DOCUMENT = "DFMC-E002"
STRUCTURAL_ERROR = "DFMC-E003"
OVER_ADVISORY_LIMIT = "DFMC-W001"
DESCRIPTION_WITHOUT_SELECTION = "DFMC-W002"
CONTRADICTORY_BIAS = "DFMC-W003"
UNKNOWN_LABEL_KEPT_AS_OTHER = "DFMC-W004"
EMPTY_CARD = "DFMC-I001"

# Advisory ceiling for selections per vocabulary-backed field; never enforced.
ADVISORY_SELECTION_LIMIT = 3

_SEVERITY_BY_LETTER = {"E": "error", "W": "warning", "I": "info"}
_CODE_RE = re.compile(r"DFMC-[EWI][0-9]{3}")

MMCID_FORMAT = "DF-MC-YYYY-NNN"
MMCID_PATTERN = "^DF-MC-(19[7-9][0-9]|[2-9][0-9]{3})-[0-9]{3}$"
_MMCID_RE = re.compile(MMCID_PATTERN)


@dataclass(frozen=True)
class Diagnostic:
    """A single validation finding."""

    severity: str
    code: str
    path: str
    message: str

    def __post_init__(self):
        if not _CODE_RE.fullmatch(self.code):
            raise ValueError(f"malformed diagnostic code {self.code!r}")
        expected = _SEVERITY_BY_LETTER[self.code[5]]
        if self.severity != expected:
            raise ValueError(
                f"severity {self.severity!r} does not match code {self.code!r} "
                f"(expected {expected!r})"
            )

    def to_dict(self) -> dict:
        return {
            "severity": self.severity,
            "code": self.code,
            "path": self.path,
            "message": self.message,
        }

    def format_line(self) -> str:
        return f"{self.severity.upper()} {self.code} {self.path}: {self.message}"


def _diag(code: str, path: str, message: str) -> Diagnostic:
    return Diagnostic(_SEVERITY_BY_LETTER[code[5]], code, path, message)


def sort_diagnostics(diagnostics) -> tuple[Diagnostic, ...]:
    """Deterministic reporting order: field path, then code, then message."""
    return tuple(sorted(diagnostics, key=lambda d: (d.path, d.code, d.message)))


def has_errors(diagnostics) -> bool:
    return any(d.severity == "error" for d in diagnostics)


def validate_mmcid(value: str, path: str = "identification.mmcid") -> Diagnostic | None:
    """Check an identifier against the DF-MC-YYYY-NNN grammar.

    Returns None when the identifier is valid, otherwise the diagnostic.
    The grammar is case-sensitive: the literal prefix "DF-MC-", a four-digit
    year 1970-9999, a hyphen, and exactly three serial digits.
    """
    if _MMCID_RE.fullmatch(value):
        return None
    return _diag(
        MALFORMED_MMCID,
        path,
        f"identifier {value!r} does not match {MMCID_FORMAT} (year 1970-9999, three serial digits)",
    )


_LINTED_SELECTION_FIELDS = (
    ("classification.domains", lambda card: card.classification.domains),
    ("classification.reasoning", lambda card: card.classification.reasoning),
    ("quality.biases", lambda card: card.quality.biases),
    ("quality.bias_causes", lambda card: card.quality.bias_causes),
    ("quality.error_causes", lambda card: card.quality.error_causes),
)


def lint_card(card: ModelCard) -> list[Diagnostic]:
    """Run every lint rule; findings come back ordered by path, then code."""
    diagnostics: list[Diagnostic] = []

    mmcid = card.identification.mmcid
    if mmcid is not None:
        finding = validate_mmcid(mmcid)
        if finding is not None:
            diagnostics.append(finding)

    for path, get in _LINTED_SELECTION_FIELDS:
        count = len(get(card))
        if count > ADVISORY_SELECTION_LIMIT:
            diagnostics.append(
                _diag(
                    OVER_ADVISORY_LIMIT,
                    path,
                    f"{count} selections; guidelines suggest at most "
                    f"{ADVISORY_SELECTION_LIMIT} (advisory only, not enforced)",
                )
            )

    for section, checklist in (("top_level", card.top_level), ("pipeline", card.pipeline)):
        for entry in checklist.entries:
            if entry.description and not entry.selected:
                diagnostics.append(
                    _diag(
                        DESCRIPTION_WITHOUT_SELECTION,
                        f"{section}.{entry.key}",
                        f"entry {entry.label!r} has a description but is not selected",
                    )
                )

    biases = card.quality.biases
    if len(biases) > 1 and any(s.term == NO_IDENTIFIED_BIAS for s in biases):
        diagnostics.append(
            _diag(
                CONTRADICTORY_BIAS,
                "quality.biases",
                f"{NO_IDENTIFIED_BIAS.label!r} is selected alongside other bias terms",
            )
        )

    if not has_content(card):
        diagnostics.append(_diag(EMPTY_CARD, "", "card has no content"))

    return list(sort_diagnostics(diagnostics))


@dataclass(frozen=True)
class ParseResult:
    """Outcome of parsing a card document.

    On success ``card`` is set and ``diagnostics`` holds warnings only; on
    failure ``card`` is None and ``diagnostics`` includes the errors.
    """

    card: ModelCard | None
    diagnostics: tuple[Diagnostic, ...]

    @property
    def ok(self) -> bool:
        return self.card is not None


_SECTION_KEYS = (
    "identification",
    "case_context",
    "classification",
    "quality",
    "top_level",
    "pipeline",
    "meta",
)


def parse_card(document: bytes | str) -> ParseResult:
    """Parse a JSON card document, tolerantly.

    Unknown vocabulary labels degrade to "Other" selections with a warning;
    absent sections and fields mean empty; ``null`` is treated as absent.
    Wrong types, unexpected keys, and checklist shape violations are
    structural errors and fail the parse.
    """
    diagnostics: list[Diagnostic] = []

    if isinstance(document, bytes):
        try:
            text = document.decode("utf-8")
        except UnicodeDecodeError as exc:
            return ParseResult(
                None, (_diag(UNREADABLE_DOCUMENT, "", f"document is not valid UTF-8: {exc}"),)
            )
    else:
        text = document

    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        return ParseResult(
            None, (_diag(UNREADABLE_DOCUMENT, "", f"document is not valid JSON: {exc}"),)
        )
    if not isinstance(raw, dict):
        return ParseResult(
            None,
            (_diag(UNREADABLE_DOCUMENT, "", "top-level JSON value must be an object"),),
        )

    for key in raw:
        if key not in _SECTION_KEYS:
            diagnostics.append(_diag(STRUCTURAL_ERROR, key, f"unexpected key {key!r}"))

    identification = _parse_identification(raw.get("identification"), diagnostics)
    case_context = _parse_case_context(raw.get("case_context"), diagnostics)
    classification = _parse_classification(raw.get("classification"), diagnostics)
    quality = _parse_quality(raw.get("quality"), diagnostics)
    top_level = _parse_checklist(raw.get("top_level"), TopLevelElements, "top_level", diagnostics)
    pipeline = _parse_checklist(raw.get("pipeline"), ProcessPipeline, "pipeline", diagnostics)

    meta = raw.get("meta")
    if meta is not None and not isinstance(meta, dict):
        diagnostics.append(_diag(STRUCTURAL_ERROR, "meta", "meta must be an object"))

    if has_errors(diagnostics):
        return ParseResult(None, sort_diagnostics(diagnostics))

    card = ModelCard(
        identification=identification,
        case_context=case_context,
        classification=classification,
        quality=quality,
        top_level=top_level,
        pipeline=pipeline,
    )
    return ParseResult(card, sort_diagnostics(diagnostics))


def _expect_object(value, path: str, diagnostics: list[Diagnostic], allowed: set[str]) -> dict:
    """Return the value as a dict; absent means empty, wrong type is an error."""
    if value is None:
        return {}
    if not isinstance(value, dict):
        diagnostics.append(
            _diag(STRUCTURAL_ERROR, path, f"expected an object, got {type(value).__name__}")
        )
        return {}
    for key in value:
        if key not in allowed:
            diagnostics.append(
                _diag(STRUCTURAL_ERROR, f"{path}.{key}", f"unexpected key {key!r}")
            )
    return value


def _get_text(obj: dict, field: str, path: str, diagnostics: list[Diagnostic]) -> str | None:
    value = obj.get(field)
    if value is None:
        return None
    if not isinstance(value, str):
        diagnostics.append(
            _diag(
                STRUCTURAL_ERROR,
                f"{path}.{field}",
                f"expected a string, got {type(value).__name__}",
            )
        )
        return None
    return value


def _parse_selection(
    item, vocabulary_id: str, path: str, diagnostics: list[Diagnostic]
) -> TermSelection | None:
    if isinstance(item, str):
        if not item.strip():
            diagnostics.append(_diag(STRUCTURAL_ERROR, path, "selection must not be blank"))
            return None
        selection = canonicalize(vocabulary_id, item)
        if selection.is_other:
            diagnostics.append(
                _diag(
                    UNKNOWN_LABEL_KEPT_AS_OTHER,
                    path,
                    f"{item.strip()!r} is not a {vocabulary_id} term; kept as an \"Other\" entry",
                )
            )
        return selection
    if isinstance(item, dict):
        if set(item) != {"other"}:
            diagnostics.append(
                _diag(STRUCTURAL_ERROR, path, 'selection object must have exactly one key, "other"')
            )
            return None
        text = item["other"]
        if not isinstance(text, str) or not text.strip():
            diagnostics.append(
                _diag(STRUCTURAL_ERROR, path, '"other" must be a non-empty string')
            )
            return None
        return TermSelection(other=text)
    diagnostics.append(
        _diag(
            STRUCTURAL_ERROR,
            path,
            f'expected a term label or {{"other": ...}}, got {type(item).__name__}',
        )
    )
    return None


def _parse_selection_list(
    value, vocabulary_id: str, path: str, diagnostics: list[Diagnostic]
) -> tuple[TermSelection, ...]:
    if value is None:
        return ()
    if not isinstance(value, list):
        diagnostics.append(
            _diag(STRUCTURAL_ERROR, path, f"expected an array, got {type(value).__name__}")
        )
        return ()
    selections: list[TermSelection] = []
    seen: set[tuple] = set()
    for index, item in enumerate(value):
        selection = _parse_selection(item, vocabulary_id, f"{path}[{index}]", diagnostics)
        if selection is None:
            continue
        key = selection.key()
        if key in seen:
            diagnostics.append(
                _diag(
                    STRUCTURAL_ERROR,
                    f"{path}[{index}]",
                    f"duplicate selection {selection.label!r}",
                )
            )
            continue
        seen.add(key)
        selections.append(selection)
    return tuple(selections)


def _parse_identification(value, diagnostics: list[Diagnostic]) -> Identification:
    obj = _expect_object(
        value,
        "identification",
        diagnostics,
        {"mmcid", "version", "owner", "usage_context", "layer_stage"},
    )
    usage_value = obj.get("usage_context")
    usage = (
        None
        if usage_value is None
        else _parse_selection(usage_value, USAGE_CONTEXT, "identification.usage_context", diagnostics)
    )
    return Identification(
        mmcid=_get_text(obj, "mmcid", "identification", diagnostics),
        version=_get_text(obj, "version", "identification", diagnostics),
        owner=_get_text(obj, "owner", "identification", diagnostics),
        usage_context=usage,
        layer_stage=_get_text(obj, "layer_stage", "identification", diagnostics),
    )


def _parse_case_context(value, diagnostics: list[Diagnostic]) -> CaseContext:
    obj = _expect_object(value, "case_context", diagnostics, {"case_statement", "hypotheses"})
    hypotheses: list[str] = []
    raw_hypotheses = obj.get("hypotheses")
    if raw_hypotheses is not None:
        if not isinstance(raw_hypotheses, list):
            diagnostics.append(
                _diag(
                    STRUCTURAL_ERROR,
                    "case_context.hypotheses",
                    f"expected an array, got {type(raw_hypotheses).__name__}",
                )
            )
        else:
            for index, item in enumerate(raw_hypotheses):
                if not isinstance(item, str):
                    diagnostics.append(
                        _diag(
                            STRUCTURAL_ERROR,
                            f"case_context.hypotheses[{index}]",
                            f"expected a string, got {type(item).__name__}",
                        )
                    )
                    continue
                hypotheses.append(item)
    return CaseContext(
        case_statement=_get_text(obj, "case_statement", "case_context", diagnostics),
        hypotheses=tuple(hypotheses),
    )


def _parse_classification(value, diagnostics: list[Diagnostic]) -> Classification:
    obj = _expect_object(value, "classification", diagnostics, {"domains", "reasoning"})
    return Classification(
        domains=_parse_selection_list(
            obj.get("domains"), FORENSIC_CLASSIFICATION, "classification.domains", diagnostics
        ),
        reasoning=_parse_selection_list(
            obj.get("reasoning"), REASONING_METHODOLOGY, "classification.reasoning", diagnostics
        ),
    )


def _parse_quality(value, diagnostics: list[Diagnostic]) -> QualityLimitations:
    obj = _expect_object(
        value,
        "quality",
        diagnostics,
        {"biases", "bias_causes", "errors_observed", "error_causes"},
    )
    return QualityLimitations(
        biases=_parse_selection_list(
            obj.get("biases"), BIAS_TAXONOMY, "quality.biases", diagnostics
        ),
        bias_causes=_parse_selection_list(
            obj.get("bias_causes"), CAUSE_OF_BIAS, "quality.bias_causes", diagnostics
        ),
        errors_observed=_get_text(obj, "errors_observed", "quality", diagnostics),
        error_causes=_parse_selection_list(
            obj.get("error_causes"), ERROR_CAUSATION, "quality.error_causes", diagnostics
        ),
    )


def _parse_checklist(value, cls, section: str, diagnostics: list[Diagnostic]):
    catalog = cls.CATALOG
    if value is None:
        return cls()
    if not isinstance(value, list):
        diagnostics.append(
            _diag(STRUCTURAL_ERROR, section, f"expected an array, got {type(value).__name__}")
        )
        return cls()
    if len(value) != len(catalog):
        diagnostics.append(
            _diag(
                STRUCTURAL_ERROR,
                section,
                f"expected {len(catalog)} entries, got {len(value)}",
            )
        )
        return cls()

    entries: list[ChecklistEntry] = []
    for index, (item, (key, label)) in enumerate(zip(value, catalog)):
        path = f"{section}[{index}]"
        if not isinstance(item, dict):
            diagnostics.append(
                _diag(STRUCTURAL_ERROR, path, f"expected an object, got {type(item).__name__}")
            )
            continue
        unexpected = sorted(set(item) - {"key", "label", "selected", "description"})
        if unexpected:
            diagnostics.append(
                _diag(STRUCTURAL_ERROR, path, f"unexpected keys: {', '.join(unexpected)}")
            )
            continue
        if item.get("key") != key:
            diagnostics.append(
                _diag(
                    STRUCTURAL_ERROR,
                    path,
                    f"expected entry key {key!r}, got {item.get('key')!r}",
                )
            )
            continue
        if item.get("label") is not None and item["label"] != label:
            diagnostics.append(
                _diag(
                    STRUCTURAL_ERROR,
                    path,
                    f"label for {key!r} must be {label!r}",
                )
            )
            continue
        selected = item.get("selected", False)
        if not isinstance(selected, bool):
            diagnostics.append(
                _diag(STRUCTURAL_ERROR, path, '"selected" must be a boolean')
            )
            continue
        description = item.get("description")
        if description is not None and not isinstance(description, str):
            diagnostics.append(
                _diag(STRUCTURAL_ERROR, path, '"description" must be a string')
            )
            continue
        entries.append(ChecklistEntry(key, label, selected, description))

    if len(entries) != len(catalog):
        return cls()
    return cls(tuple(entries))
