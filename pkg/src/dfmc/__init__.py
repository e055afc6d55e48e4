"""Digital forensics model card toolkit.

Card model and controlled vocabularies, a validator/linter, deterministic
JSON and Markdown renderers, a file-backed card store, a CLI, and an HTTP
service for form-driven authoring.
"""

__version__ = "0.1.0"

from dfmc.model import ModelCard, empty_card
from dfmc.render import RenderOptions, to_json, to_markdown
from dfmc.validation import Diagnostic, lint_card, parse_card, validate_mmcid
from dfmc.vocab import Term, TermSelection, Vocabulary, canonicalize, vocabulary

__all__ = [
    "Diagnostic",
    "ModelCard",
    "RenderOptions",
    "Term",
    "TermSelection",
    "Vocabulary",
    "__version__",
    "canonicalize",
    "empty_card",
    "lint_card",
    "parse_card",
    "to_json",
    "to_markdown",
    "validate_mmcid",
    "vocabulary",
]
