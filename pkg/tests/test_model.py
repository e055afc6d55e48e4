import pytest

from dfmc.model import (
    PIPELINE_PROCESSES,
    TOP_LEVEL_ELEMENTS,
    CaseContext,
    ChecklistEntry,
    Classification,
    Identification,
    ModelCard,
    ProcessPipeline,
    QualityLimitations,
    TopLevelElements,
    empty_card,
    has_content,
)
from dfmc.vocab import TermSelection, canonicalize, vocabulary


def test_empty_card_has_nine_top_level_entries():
    assert len(empty_card().top_level.entries) == 9


def test_empty_card_has_sixteen_pipeline_entries():
    assert len(empty_card().pipeline.entries) == 16


def test_empty_card_has_no_selections_anywhere():
    card = empty_card()
    assert not has_content(card)
    assert all(not e.selected for e in card.top_level.entries)
    assert all(not e.selected for e in card.pipeline.entries)
    assert card.classification.domains == ()


def test_checklist_labels_and_order_match_transcription(vocabulary_fixture):
    assert [l for _, l in TOP_LEVEL_ELEMENTS] == vocabulary_fixture["checklists"]["top_level"]
    assert [l for _, l in PIPELINE_PROCESSES] == vocabulary_fixture["checklists"]["pipeline"]


def test_last_top_level_label():
    assert TOP_LEVEL_ELEMENTS[-1][1] == "Degree of confidence"


def test_carving_label():
    assert dict(PIPELINE_PROCESSES)["content_carving"] == "Content identification (carving)"


def test_checklist_set_replaces_one_entry():
    checklist = TopLevelElements().set("tools", True, "bulk_extractor")
    entry = checklist.entry("tools")
    assert entry.selected and entry.description == "bulk_extractor"
    assert not checklist.entry("algorithm").selected


def test_checklist_rejects_wrong_count():
    with pytest.raises(ValueError):
        TopLevelElements(tuple(ChecklistEntry(k, l) for k, l in TOP_LEVEL_ELEMENTS[:-1]))


def test_checklist_rejects_reordered_entries():
    entries = tuple(ChecklistEntry(k, l) for k, l in TOP_LEVEL_ELEMENTS)
    swapped = (entries[1], entries[0]) + entries[2:]
    with pytest.raises(ValueError):
        TopLevelElements(swapped)


def test_checklist_rejects_wrong_label():
    entries = [ChecklistEntry(k, l) for k, l in TOP_LEVEL_ELEMENTS]
    entries[0] = ChecklistEntry("algorithm", "Algorithms")
    with pytest.raises(ValueError):
        TopLevelElements(tuple(entries))


def test_blank_description_is_dropped():
    entry = ChecklistEntry("algorithm", "Algorithm", True, "   ")
    assert entry.description is None


def test_identification_trims_free_text():
    ident = Identification(mmcid="  DF-MC-2025-001 ", owner="   ")
    assert ident.mmcid == "DF-MC-2025-001"
    assert ident.owner is None


def test_identification_accepts_any_usage_other_entry():
    ident = Identification(usage_context=TermSelection(other="Edge appliance"))
    assert ident.usage_context.is_other


def test_identification_rejects_foreign_vocabulary_term():
    domain = canonicalize("forensic_classification", "Network Forensics")
    with pytest.raises(ValueError):
        Identification(usage_context=domain)


def test_blank_hypotheses_are_dropped_not_stored():
    context = CaseContext(hypotheses=("  first  ", "", "   ", "second"))
    assert context.hypotheses == ("first", "second")


def test_classification_rejects_duplicate_terms():
    term = canonicalize("forensic_classification", "Network Forensics")
    with pytest.raises(ValueError):
        Classification(domains=[term, term])


def test_duplicate_other_entries_need_distinct_casefolded_text():
    with pytest.raises(ValueError):
        Classification(domains=[TermSelection(other="Drone"), TermSelection(other="drone ")])
    ok = Classification(domains=[TermSelection(other="Drone"), TermSelection(other="Kiosk")])
    assert len(ok.domains) == 2


def test_classification_rejects_terms_from_other_vocabularies():
    bias = canonicalize("bias_taxonomy", "No Identified Bias")
    with pytest.raises(ValueError):
        Classification(domains=[bias])


def test_shared_term_text_across_vocabularies_stays_distinct():
    # The same label exists in two vocabularies; the terms must not be
    # interchangeable between fields.
    from_errors = vocabulary("error_causation").term("unknown_under_investigation")
    from_causes = vocabulary("cause_of_bias").term("unknown_under_investigation")
    assert from_errors != from_causes
    QualityLimitations(error_causes=[TermSelection(term=from_errors)])
    with pytest.raises(ValueError):
        QualityLimitations(error_causes=[TermSelection(term=from_causes)])


def test_cards_with_same_content_are_equal():
    assert empty_card() == empty_card()
    a = ModelCard(identification=Identification(owner="Lab"))
    b = ModelCard(identification=Identification(owner="Lab"))
    assert a == b and a != empty_card()


def test_has_content_sees_every_corner():
    assert has_content(ModelCard(identification=Identification(layer_stage="L1")))
    assert has_content(ModelCard(case_context=CaseContext(hypotheses=("h",))))
    assert has_content(ModelCard(quality=QualityLimitations(errors_observed="drift")))
    assert has_content(ModelCard(top_level=TopLevelElements().set("tools", True)))
    assert has_content(ModelCard(pipeline=ProcessPipeline().set("timeline", False, "note")))
