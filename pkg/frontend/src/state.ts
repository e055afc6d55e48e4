/** Form state and its lossless serialization to a card document. */

import type {
  CardDocument,
  ChecklistEntryDocument,
  ChecklistItem,
  Checklists,
  SelectionValue,
} from "./types.js";

/** Canonical labels from the checkbox group, plus free-text Other entries. */
export interface MultiSelection {
  terms: string[];
  others: string[];
}

/** Dropdown value: "" for unset, a canonical label, or OTHER_CHOICE. */
export interface SingleSelection {
  choice: string;
  otherText: string;
}

export const OTHER_CHOICE = "__other__";

export interface ChecklistRowState extends ChecklistItem {
  selected: boolean;
  description: string;
}

export interface FormState {
  identification: {
    mmcid: string;
    version: string;
    owner: string;
    usageContext: SingleSelection;
    layerStage: string;
  };
  caseContext: {
    caseStatement: string;
    hypotheses: string[];
  };
  classification: {
    domains: MultiSelection;
    reasoning: MultiSelection;
  };
  quality: {
    biases: MultiSelection;
    biasCauses: MultiSelection;
    errorsObserved: string;
    errorCauses: MultiSelection;
  };
  topLevel: ChecklistRowState[];
  pipeline: ChecklistRowState[];
  dirty: boolean;
}

function emptyMulti(): MultiSelection {
  return { terms: [], others: [] };
}

export function emptyFormState(checklists: Checklists): FormState {
  const rows = (items: ChecklistItem[]): ChecklistRowState[] =>
    items.map((item) => ({ ...item, selected: false, description: "" }));
  return {
    identification: {
      mmcid: "",
      version: "",
      owner: "",
      usageContext: { choice: "", otherText: "" },
      layerStage: "",
    },
    caseContext: { caseStatement: "", hypotheses: [] },
    classification: { domains: emptyMulti(), reasoning: emptyMulti() },
    quality: {
      biases: emptyMulti(),
      biasCauses: emptyMulti(),
      errorsObserved: "",
      errorCauses: emptyMulti(),
    },
    topLevel: rows(checklists.top_level),
    pipeline: rows(checklists.pipeline),
    dirty: false,
  };
}

function cleaned(value: string): string | undefined {
  const trimmed = value.trim();
  return trimmed === "" ? undefined : trimmed;
}

function multiValues(selection: MultiSelection): SelectionValue[] | undefined {
  const values: SelectionValue[] = [...selection.terms];
  for (const other of selection.others) {
    const text = other.trim();
    if (text !== "") {
      values.push({ other: text });
    }
  }
  return values.length > 0 ? values : undefined;
}

function singleValue(selection: SingleSelection): SelectionValue | undefined {
  if (selection.choice === OTHER_CHOICE) {
    const text = selection.otherText.trim();
    return text === "" ? undefined : { other: text };
  }
  return selection.choice === "" ? undefined : selection.choice;
}

function checklistDocument(rows: ChecklistRowState[]): ChecklistEntryDocument[] {
  return rows.map((row) => {
    const entry: ChecklistEntryDocument = {
      key: row.key,
      label: row.label,
      selected: row.selected,
    };
    const description = row.description.trim();
    if (description !== "") {
      entry.description = description;
    }
    return entry;
  });
}

/** Serialize to the wire format; blank fields are omitted, never null. */
export function serializeCard(state: FormState): CardDocument {
  const identification: CardDocument["identification"] = {};
  const mmcid = cleaned(state.identification.mmcid);
  if (mmcid !== undefined) identification.mmcid = mmcid;
  const version = cleaned(state.identification.version);
  if (version !== undefined) identification.version = version;
  const owner = cleaned(state.identification.owner);
  if (owner !== undefined) identification.owner = owner;
  const usage = singleValue(state.identification.usageContext);
  if (usage !== undefined) identification.usage_context = usage;
  const layerStage = cleaned(state.identification.layerStage);
  if (layerStage !== undefined) identification.layer_stage = layerStage;

  const caseContext: CardDocument["case_context"] = {};
  const statement = cleaned(state.caseContext.caseStatement);
  if (statement !== undefined) caseContext.case_statement = statement;
  const hypotheses = state.caseContext.hypotheses
    .map((h) => h.trim())
    .filter((h) => h !== "");
  if (hypotheses.length > 0) caseContext.hypotheses = hypotheses;

  const classification: CardDocument["classification"] = {};
  const domains = multiValues(state.classification.domains);
  if (domains !== undefined) classification.domains = domains;
  const reasoning = multiValues(state.classification.reasoning);
  if (reasoning !== undefined) classification.reasoning = reasoning;

  const quality: CardDocument["quality"] = {};
  const biases = multiValues(state.quality.biases);
  if (biases !== undefined) quality.biases = biases;
  const biasCauses = multiValues(state.quality.biasCauses);
  if (biasCauses !== undefined) quality.bias_causes = biasCauses;
  const errorsObserved = cleaned(state.quality.errorsObserved);
  if (errorsObserved !== undefined) quality.errors_observed = errorsObserved;
  const errorCauses = multiValues(state.quality.errorCauses);
  if (errorCauses !== undefined) quality.error_causes = errorCauses;

  return {
    identification,
    case_context: caseContext,
    classification,
    quality,
    top_level: checklistDocument(state.topLevel),
    pipeline: checklistDocument(state.pipeline),
  };
}

/** Download name: the card id when present, otherwise "untitled". */
export function downloadName(state: FormState, format: "json" | "markdown"): string {
  const base = cleaned(state.identification.mmcid) ?? "untitled";
  return `${base}.${format === "json" ? "json" : "md"}`;
}
