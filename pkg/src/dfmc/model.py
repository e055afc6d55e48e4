"""Card data model: six sections plus the two fixed checklists.

Every field is optional; a card with nothing filled in is valid. Values
are immutable after construction and normalized on the way in (free text
trimmed, blank entries dropped).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from dfmc.vocab import (
    BIAS_TAXONOMY,
    CAUSE_OF_BIAS,
    ERROR_CAUSATION,
    FORENSIC_CLASSIFICATION,
    REASONING_METHODOLOGY,
    USAGE_CONTEXT,
    TermSelection,
)

# Conceptual elements of the analysis (the card's fifth section).
TOP_LEVEL_ELEMENTS: tuple[tuple[str, str], ...] = (
    ("algorithm", "Algorithm"),
    ("inference", "Inference methodology"),
    ("confounding_factors", "Confounding factors"),
    ("evaluation", "Evaluation approach"),
    ("tools", "Tools employed"),
    ("evidence_handling", "Evidence handling (MC1)"),
    ("file_types", "File types processed"),
    ("data_structures", "Data structures"),
    ("degree_of_confidence", "Degree of confidence"),
)

# Data types and analytical processing steps (the card's sixth section).
PIPELINE_PROCESSES: tuple[tuple[str, str], ...] = (
    ("event_data_handling", "Event/Data handling"),
    ("raw_data_parsing", "Raw data parsing"),
    ("data_validation", "Data validation"),
    ("partition_identification", "Partition identification"),
    ("file_system_processing", "File system processing"),
    ("content_carving", "Content identification (carving)"),
    ("file_type_identification", "File type identification"),
    ("file_specific_processing", "File-specific processing"),
    ("hashing", "Hashing operations"),
    ("hash_matching", "Hash matching"),
    ("signature_detection", "Signature detection"),
    ("timeline", "Timeline construction and analysis"),
    ("geolocation", "Geolocation processing and analysis"),
    ("keyword_indexing_search", "Keyword indexing and searching"),
    ("automated_interpretation", "Automated result interpretation"),
    ("ai_content_flagging", "AI-based content flagging"),
)


def _clean_text(value: str | None) -> str | None:
    if value is None:
        return None
    trimmed = value.strip()
    return trimmed or None


def _check_selections(
    selections, vocabulary_id: str, field_name: str
) -> tuple[TermSelection, ...]:
    out = tuple(selections)
    seen: set[tuple] = set()
    for selection in out:
        if not isinstance(selection, TermSelection):
            raise TypeError(f"{field_name}: expected TermSelection, got {type(selection).__name__}")
        if selection.term is not None and selection.term.vocabulary != vocabulary_id:
            raise ValueError(
                f"{field_name}: term {selection.term.slug!r} belongs to vocabulary "
                f"{selection.term.vocabulary!r}, not {vocabulary_id!r}"
            )
        key = selection.key()
        if key in seen:
            raise ValueError(f"{field_name}: duplicate selection {selection.label!r}")
        seen.add(key)
    return out


@dataclass(frozen=True)
class ChecklistEntry:
    """One check-and-describe row of a fixed checklist."""

    key: str
    label: str
    selected: bool = False
    description: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "description", _clean_text(self.description))


def _check_entries(
    entries, catalog: tuple[tuple[str, str], ...], name: str
) -> tuple[ChecklistEntry, ...]:
    out = tuple(entries)
    if len(out) != len(catalog):
        raise ValueError(f"{name}: expected {len(catalog)} entries, got {len(out)}")
    for entry, (key, label) in zip(out, catalog):
        if not isinstance(entry, ChecklistEntry):
            raise TypeError(f"{name}: expected ChecklistEntry, got {type(entry).__name__}")
        if entry.key != key or entry.label != label:
            raise ValueError(
                f"{name}: expected entry ({key!r}, {label!r}), got "
                f"({entry.key!r}, {entry.label!r})"
            )
    return out


class _Checklist:
    """Shared behavior of the two fixed-order checklists."""

    CATALOG: tuple[tuple[str, str], ...] = ()

    @classmethod
    def empty(cls):
        return cls(tuple(ChecklistEntry(key, label) for key, label in cls.CATALOG))

    def entry(self, key: str) -> ChecklistEntry:
        for candidate in self.entries:
            if candidate.key == key:
                return candidate
        raise KeyError(f"no checklist entry {key!r}")

    def set(self, key: str, selected: bool, description: str | None = None):
        """Return a copy with one entry replaced."""
        label = dict(self.CATALOG)[key]
        return type(self)(
            tuple(
                ChecklistEntry(key, label, selected, description) if e.key == key else e
                for e in self.entries
            )
        )

    @property
    def selected_entries(self) -> tuple[ChecklistEntry, ...]:
        return tuple(e for e in self.entries if e.selected)


@dataclass(frozen=True)
class TopLevelElements(_Checklist):
    """The nine conceptual elements, fixed keys and order."""

    CATALOG = TOP_LEVEL_ELEMENTS
    entries: tuple[ChecklistEntry, ...] = ()

    def __post_init__(self):
        entries = self.entries or tuple(ChecklistEntry(k, l) for k, l in self.CATALOG)
        object.__setattr__(self, "entries", _check_entries(entries, self.CATALOG, "top_level"))


@dataclass(frozen=True)
class ProcessPipeline(_Checklist):
    """The sixteen processing steps, fixed keys and order."""

    CATALOG = PIPELINE_PROCESSES
    entries: tuple[ChecklistEntry, ...] = ()

    def __post_init__(self):
        entries = self.entries or tuple(ChecklistEntry(k, l) for k, l in self.CATALOG)
        object.__setattr__(self, "entries", _check_entries(entries, self.CATALOG, "pipeline"))


@dataclass(frozen=True)
class Identification:
    """Card identity and deployment metadata."""

    mmcid: str | None = None
    version: str | None = None
    owner: str | None = None
    usage_context: TermSelection | None = None
    layer_stage: str | None = None

    def __post_init__(self):
        for name in ("mmcid", "version", "owner", "layer_stage"):
            object.__setattr__(self, name, _clean_text(getattr(self, name)))
        if self.usage_context is not None:
            _check_selections([self.usage_context], USAGE_CONTEXT, "usage_context")


@dataclass(frozen=True)
class CaseContext:
    """Investigation scope and the hypotheses being worked."""

    case_statement: str | None = None
    hypotheses: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "case_statement", _clean_text(self.case_statement))
        # Blank hypothesis submissions are dropped, not stored.
        cleaned = tuple(h.strip() for h in self.hypotheses if h and h.strip())
        object.__setattr__(self, "hypotheses", cleaned)


@dataclass(frozen=True)
class Classification:
    """Forensic domain(s) and reasoning methodology."""

    domains: tuple[TermSelection, ...] = ()
    reasoning: tuple[TermSelection, ...] = ()

    def __post_init__(self):
        object.__setattr__(
            self, "domains", _check_selections(self.domains, FORENSIC_CLASSIFICATION, "domains")
        )
        object.__setattr__(
            self, "reasoning", _check_selections(self.reasoning, REASONING_METHODOLOGY, "reasoning")
        )


@dataclass(frozen=True)
class QualityLimitations:
    """Identified biases and errors, with their causes."""

    biases: tuple[TermSelection, ...] = ()
    bias_causes: tuple[TermSelection, ...] = ()
    errors_observed: str | None = None
    error_causes: tuple[TermSelection, ...] = ()

    def __post_init__(self):
        object.__setattr__(
            self, "biases", _check_selections(self.biases, BIAS_TAXONOMY, "biases")
        )
        object.__setattr__(
            self, "bias_causes", _check_selections(self.bias_causes, CAUSE_OF_BIAS, "bias_causes")
        )
        object.__setattr__(self, "errors_observed", _clean_text(self.errors_observed))
        object.__setattr__(
            self,
            "error_causes",
            _check_selections(self.error_causes, ERROR_CAUSATION, "error_causes"),
        )


@dataclass(frozen=True)
class ModelCard:
    """A complete card: six sections, everything optional."""

    identification: Identification = field(default_factory=Identification)
    case_context: CaseContext = field(default_factory=CaseContext)
    classification: Classification = field(default_factory=Classification)
    quality: QualityLimitations = field(default_factory=QualityLimitations)
    top_level: TopLevelElements = field(default_factory=TopLevelElements)
    pipeline: ProcessPipeline = field(default_factory=ProcessPipeline)


def empty_card() -> ModelCard:
    """A card with all optionals absent and every checklist entry unselected."""
    return ModelCard()


def has_content(card: ModelCard) -> bool:
    """True if anything at all is documented on the card."""
    ident = card.identification
    quality = card.quality
    return bool(
        ident.mmcid
        or ident.version
        or ident.owner
        or ident.usage_context
        or ident.layer_stage
        or card.case_context.case_statement
        or card.case_context.hypotheses
        or card.classification.domains
        or card.classification.reasoning
        or quality.biases
        or quality.bias_causes
        or quality.errors_observed
        or quality.error_causes
        or any(e.selected or e.description for e in card.top_level.entries)
        or any(e.selected or e.description for e in card.pipeline.entries)
    )
