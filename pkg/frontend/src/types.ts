/** Wire types for the /api/v1 contract. */

export interface Term {
  slug: string;
  label: string;
}

export type Vocabularies = Record<string, Term[]>;

export interface ChecklistItem {
  key: string;
  label: string;
}

export interface Checklists {
  top_level: ChecklistItem[];
  pipeline: ChecklistItem[];
}

export type Severity = "error" | "warning" | "info";

export interface Diagnostic {
  severity: Severity;
  code: string;
  path: string;
  message: string;
}

export interface ValidationResponse {
  valid: boolean;
  diagnostics: Diagnostic[];
}

export interface ApiErrorBody {
  status: number;
  code: string;
  message: string;
  diagnostics?: Diagnostic[];
}

/** A vocabulary selection on the wire: a canonical label or an Other entry. */
export type SelectionValue = string | { other: string };

export interface ChecklistEntryDocument {
  key: string;
  label: string;
  selected: boolean;
  description?: string;
}

/** The card document POSTed to validate/render. */
export interface CardDocument {
  identification: {
    mmcid?: string;
    version?: string;
    owner?: string;
    usage_context?: SelectionValue;
    layer_stage?: string;
  };
  case_context: {
    case_statement?: string;
    hypotheses?: string[];
  };
  classification: {
    domains?: SelectionValue[];
    reasoning?: SelectionValue[];
  };
  quality: {
    biases?: SelectionValue[];
    bias_causes?: SelectionValue[];
    errors_observed?: string;
    error_causes?: SelectionValue[];
  };
  top_level: ChecklistEntryDocument[];
  pipeline: ChecklistEntryDocument[];
}
