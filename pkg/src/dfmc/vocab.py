"""Controlled vocabularies and term selection for model cards.

Six vocabularies back the card's classified fields. Each is a closed,
ordered list of canonical terms plus an "Other" free-text escape for
entries the taxonomy does not cover yet.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from dfmc.errors import EmptyInputError, UnknownVocabularyError

FORENSIC_CLASSIFICATION = "forensic_classification"
REASONING_METHODOLOGY = "reasoning_methodology"
BIAS_TAXONOMY = "bias_taxonomy"
ERROR_CAUSATION = "error_causation"
USAGE_CONTEXT = "usage_context"
CAUSE_OF_BIAS = "cause_of_bias"


@dataclass(frozen=True)
class Term:
    """A canonical entry of one vocabulary."""

    vocabulary: str
    slug: str
    label: str


@dataclass(frozen=True)
class TermSelection:
    """Either a canonical vocabulary term or an "Other" free-text entry.

    Exactly one of ``term`` / ``other`` is set. Free text is stored trimmed
    and must be non-empty.
    """

    term: Term | None = None
    other: str | None = None

    def __post_init__(self):
        if (self.term is None) == (self.other is None):
            raise ValueError("selection must carry exactly one of term / other")
        if self.other is not None:
            trimmed = self.other.strip()
            if not trimmed:
                raise EmptyInputError("free-text selection must not be blank")
            object.__setattr__(self, "other", trimmed)

    @property
    def is_other(self) -> bool:
        return self.other is not None

    @property
    def label(self) -> str:
        """Display text: the term label, or the free text itself."""
        return self.other if self.term is None else self.term.label

    def key(self) -> tuple:
        """Identity used for duplicate detection and filter matching.

        Canonical selections compare by term; free-text selections compare
        case-insensitively after trimming.
        """
        if self.term is not None:
            return ("term", self.term.vocabulary, self.term.slug)
        return ("other", self.other.casefold())

    def matches(self, other: "TermSelection") -> bool:
        return self.key() == other.key()


@dataclass(frozen=True)
class Vocabulary:
    """An ordered, closed set of canonical terms."""

    id: str
    terms: tuple[Term, ...]

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(term.label for term in self.terms)

    def term(self, slug: str) -> Term:
        for candidate in self.terms:
            if candidate.slug == slug:
                return candidate
        raise KeyError(f"no term {slug!r} in vocabulary {self.id!r}")

    def find(self, raw: str) -> Term | None:
        """Exact match against a label or slug after trim + case-fold."""
        needle = raw.strip().casefold()
        for candidate in self.terms:
            if needle == candidate.label.casefold() or needle == candidate.slug:
                return candidate
        return None


def _slug(label: str) -> str:
    # Trailing parentheticals are explanatory, not part of the identifier.
    head = re.sub(r"\s*\(.*\)\s*$", "", label)
    return re.sub(r"[^a-z0-9]+", "_", head.lower()).strip("_")


_VOCABULARY_LABELS: dict[str, tuple[str, ...]] = {
    FORENSIC_CLASSIFICATION: (
        "Computer Forensics",
        "Network Forensics",
        "Mobile Device Forensics",
        "Cloud Forensics",
        "Database Forensics",
        "Memory Forensics",
        "Digital Image Forensics",
        "Digital Video/Audio Forensics",
        "IoT Forensics",
        "Multi-domain (covers multiple types)",
    ),
    REASONING_METHODOLOGY: (
        "Deductive Reasoning",
        "Inductive Reasoning",
        "Abductive Reasoning",
        "Retroductive Reasoning",
        "Hybrid/Mixed Reasoning",
    ),
    BIAS_TAXONOMY: (
        "Data Bias (historical, sampling, selection)",
        "Algorithmic Bias (model architecture, optimization)",
        "Human Bias (cognitive, confirmation, implicit)",
        "Deployment Bias (context mismatch)",
        "Reporting Bias (documentation gaps)",
        "Measurement Bias (proxy variables)",
        "Stereotyping Bias (reinforcing stereotypes)",
        "Automation Bias (over-reliance on automated results)",
        "No Identified Bias",
        "Multiple Bias Types",
    ),
    ERROR_CAUSATION: (
        "Training Error (underfitting)",
        "Validation Error (model selection issues)",
        "Testing Error (generalization failure)",
        "Overfitting (high variance)",
        "Underfitting (high bias)",
        "Data Quality Issues (noise, outliers, mislabeling)",
        "Insufficient Training Data",
        "Class Imbalance",
        "Feature Engineering Issues",
        "Hyperparameter Misconfiguration",
        "Model Complexity Mismatch",
        "Adversarial Attack (poisoning, evasion)",
        "Concept Drift",
        "Tool Calibration Error",
        "Human Error in Analysis",
        "Chain of Custody Issues",
        "Multiple Error Sources",
        "Unknown/Under Investigation",
    ),
    USAGE_CONTEXT: (
        "Standalone",
        "Integrated",
        "Hybrid (both standalone and integrated)",
    ),
    CAUSE_OF_BIAS: (
        "Unrepresentative Training Data",
        "Historical Inequities in Data",
        "Feature Selection Issues",
        "Labeling Inconsistencies",
        "Optimization Objective Mismatch",
        "Insufficient Diversity in Development Team",
        "Lack of Domain Expertise",
        "Temporal Drift (data age/staleness)",
        "Geographic/Cultural Limitations",
        "Tool/Method Limitations",
        "Multiple Causes",
        "Unknown/Under Investigation",
    ),
}

VOCABULARIES: dict[str, Vocabulary] = {
    vocab_id: Vocabulary(
        id=vocab_id,
        terms=tuple(Term(vocab_id, _slug(label), label) for label in labels),
    )
    for vocab_id, labels in _VOCABULARY_LABELS.items()
}

NO_IDENTIFIED_BIAS = VOCABULARIES[BIAS_TAXONOMY].term("no_identified_bias")


def vocabulary(vocabulary_id: str) -> Vocabulary:
    """Look up a vocabulary by its slug."""
    try:
        return VOCABULARIES[vocabulary_id]
    except KeyError:
        raise UnknownVocabularyError(vocabulary_id) from None


def canonicalize(vocabulary_id: str, raw: str) -> TermSelection:
    """Resolve free text to a canonical term, or keep it as "Other".

    Matching is exact against a term label or slug after trim + case-fold;
    no fuzzy matching. Non-matching input becomes a trimmed free-text
    selection.
    """
    vocab = vocabulary(vocabulary_id)
    trimmed = raw.strip()
    if not trimmed:
        raise EmptyInputError(f"empty input for vocabulary {vocabulary_id!r}")
    term = vocab.find(trimmed)
    if term is not None:
        return TermSelection(term=term)
    return TermSelection(other=trimmed)
