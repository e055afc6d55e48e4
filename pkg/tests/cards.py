"""Hand-built fixture cards shared across the test suite."""

from __future__ import annotations

from dfmc.model import (
    CaseContext,
    Classification,
    Identification,
    ModelCard,
    ProcessPipeline,
    QualityLimitations,
    TopLevelElements,
    empty_card,
)
from dfmc.vocab import TermSelection, canonicalize


def sel(vocabulary_id: str, raw: str) -> TermSelection:
    return canonicalize(vocabulary_id, raw)


def make_minimal_card() -> ModelCard:
    """One identifier, one domain, one described pipeline step."""
    return ModelCard(
        identification=Identification(mmcid="DF-MC-2025-001"),
        classification=Classification(domains=[sel("forensic_classification", "Network Forensics")]),
        pipeline=ProcessPipeline().set("content_carving", True, "PhotoRec pass"),
    )


def make_full_card() -> ModelCard:
    """Every field populated, including "Other" entries in three lists."""
    return ModelCard(
        identification=Identification(
            mmcid="DF-MC-2024-042",
            version="2.1",
            owner="Example Digital Forensics Unit",
            usage_context=sel("usage_context", "Hybrid (both standalone and integrated)"),
            layer_stage="L2 of 4",
        ),
        case_context=CaseContext(
            case_statement="Determine whether the seized laptop exfiltrated design documents.",
            hypotheses=(
                "Files left via personal cloud storage",
                "An external USB device was used",
            ),
        ),
        classification=Classification(
            domains=[
                sel("forensic_classification", "Computer Forensics"),
                sel("forensic_classification", "Network Forensics"),
                TermSelection(other="Drone Forensics"),
            ],
            reasoning=[
                sel("reasoning_methodology", "Abductive Reasoning"),
                sel("reasoning_methodology", "Hybrid/Mixed Reasoning"),
            ],
        ),
        quality=QualityLimitations(
            biases=[
                sel("bias_taxonomy", "Automation Bias (over-reliance on automated results)"),
                sel("bias_taxonomy", "Data Bias (historical, sampling, selection)"),
            ],
            bias_causes=[
                sel("cause_of_bias", "Unrepresentative Training Data"),
                TermSelection(other="Vendor model opacity"),
            ],
            errors_observed="Two PDFs were misclassified as archives during triage.",
            error_causes=[
                sel("error_causation", "Class Imbalance"),
                sel("error_causation", "Tool Calibration Error"),
            ],
        ),
        top_level=(
            TopLevelElements()
            .set("algorithm", True, "Gradient-boosted file-type classifier")
            .set("inference", True)
            .set("evaluation", True, "Cross-validated on the lab's reference corpus")
            .set("tools", True, "bulk_extractor 2.1, custom triage scripts")
            .set("degree_of_confidence", True, "High for NTFS sources, medium otherwise")
        ),
        pipeline=(
            ProcessPipeline()
            .set("raw_data_parsing", True)
            .set("file_system_processing", True, "NTFS and ext4")
            .set("content_carving", True, "PhotoRec pass over unallocated space")
            .set("hashing", True, "SHA-256")
            .set("timeline", True)
            .set("ai_content_flagging", True, "CSAM classifier, human review queue")
        ),
    )


def make_lint_table() -> list[tuple[str, ModelCard, list[tuple[str, str]]]]:
    """Golden lint cases: (name, card, expected [(code, path), ...]).

    Expected lists are worked out by hand from the lint rules, in the
    reporting order (path, then code).
    """
    fc = "forensic_classification"
    rm = "reasoning_methodology"
    bt = "bias_taxonomy"
    cb = "cause_of_bias"
    ec = "error_causation"

    domains4 = [
        sel(fc, "Computer Forensics"),
        sel(fc, "Network Forensics"),
        sel(fc, "Cloud Forensics"),
        sel(fc, "Memory Forensics"),
    ]
    reasoning4 = [
        sel(rm, "Deductive Reasoning"),
        sel(rm, "Inductive Reasoning"),
        sel(rm, "Abductive Reasoning"),
        sel(rm, "Retroductive Reasoning"),
    ]
    bias_causes4 = [
        sel(cb, "Unrepresentative Training Data"),
        sel(cb, "Labeling Inconsistencies"),
        sel(cb, "Lack of Domain Expertise"),
        sel(cb, "Multiple Causes"),
    ]
    error_causes4 = [
        sel(ec, "Overfitting (high variance)"),
        sel(ec, "Class Imbalance"),
        sel(ec, "Concept Drift"),
        sel(ec, "Tool Calibration Error"),
    ]
    error_causes5 = error_causes4 + [sel(ec, "Chain of Custody Issues")]

    return [
        ("empty card", empty_card(), [("DFMC-I001", "")]),
        (
            "clean card",
            ModelCard(
                identification=Identification(mmcid="DF-MC-2025-001"),
                classification=Classification(
                    domains=[sel(fc, "Network Forensics"), sel(fc, "Cloud Forensics")],
                    reasoning=[sel(rm, "Deductive Reasoning")],
                ),
            ),
            [],
        ),
        (
            "malformed mmcid",
            ModelCard(identification=Identification(mmcid="DF-MC-25-001")),
            [("DFMC-E001", "identification.mmcid")],
        ),
        (
            "four domains",
            ModelCard(classification=Classification(domains=domains4)),
            [("DFMC-W001", "classification.domains")],
        ),
        (
            "four reasoning methodologies",
            ModelCard(classification=Classification(reasoning=reasoning4)),
            [("DFMC-W001", "classification.reasoning")],
        ),
        (
            "four biases including the no-bias term",
            ModelCard(
                quality=QualityLimitations(
                    biases=[
                        sel(bt, "No Identified Bias"),
                        sel(bt, "Data Bias (historical, sampling, selection)"),
                        sel(bt, "Human Bias (cognitive, confirmation, implicit)"),
                        sel(bt, "Automation Bias (over-reliance on automated results)"),
                    ]
                )
            ),
            [("DFMC-W001", "quality.biases"), ("DFMC-W003", "quality.biases")],
        ),
        (
            "no-bias term plus one other bias",
            ModelCard(
                quality=QualityLimitations(
                    biases=[
                        sel(bt, "No Identified Bias"),
                        sel(bt, "Reporting Bias (documentation gaps)"),
                    ]
                )
            ),
            [("DFMC-W003", "quality.biases")],
        ),
        (
            "no-bias term alone",
            ModelCard(quality=QualityLimitations(biases=[sel(bt, "No Identified Bias")])),
            [],
        ),
        (
            "description on unselected conceptual element",
            ModelCard(top_level=TopLevelElements().set("algorithm", False, "left over")),
            [("DFMC-W002", "top_level.algorithm")],
        ),
        (
            "description on unselected processing step",
            ModelCard(pipeline=ProcessPipeline().set("timeline", False, "draft note")),
            [("DFMC-W002", "pipeline.timeline")],
        ),
        (
            "malformed mmcid plus five error causes",
            ModelCard(
                identification=Identification(mmcid="df-mc-2025-001"),
                quality=QualityLimitations(error_causes=error_causes5),
            ),
            [
                ("DFMC-E001", "identification.mmcid"),
                ("DFMC-W001", "quality.error_causes"),
            ],
        ),
        (
            "four bias causes and four error causes",
            ModelCard(
                quality=QualityLimitations(bias_causes=bias_causes4, error_causes=error_causes4)
            ),
            [
                ("DFMC-W001", "quality.bias_causes"),
                ("DFMC-W001", "quality.error_causes"),
            ],
        ),
    ]
