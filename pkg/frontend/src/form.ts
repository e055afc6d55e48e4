/** Builds the six-section form; every input writes straight into FormState. */

import type { FormState, MultiSelection } from "./state.js";
import { OTHER_CHOICE } from "./state.js";
import type { Term, Vocabularies } from "./types.js";

export const SECTION_HEADINGS = [
  "Identification & Context",
  "Case Context",
  "Classification & Approach",
  "Quality & Limitations",
  "Top Level Elements (DF MC 0)",
  "Data Types & Analytical Processes (DF MC 1)",
] as const;

type OnChange = () => void;

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  attrs: Record<string, string> = {},
  ...children: (Node | string)[]
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  for (const [name, value] of Object.entries(attrs)) {
    node.setAttribute(name, value);
  }
  node.append(...children);
  return node;
}

function textField(
  path: string,
  label: string,
  value: string,
  write: (value: string) => void,
  onChange: OnChange,
  placeholder = "",
): HTMLElement {
  const input = el("input", {
    type: "text",
    id: path.replace(/\./g, "-"),
    placeholder,
  }) as HTMLInputElement;
  input.value = value;
  input.addEventListener("input", () => {
    write(input.value);
    onChange();
  });
  return el(
    "div",
    { class: "field", "data-path": path },
    el("label", { for: input.id }, label),
    input,
    el("span", { class: "badges" }),
  );
}

function textArea(
  path: string,
  label: string,
  write: (value: string) => void,
  onChange: OnChange,
): HTMLElement {
  const area = el("textarea", { id: path.replace(/\./g, "-"), rows: "3" }) as HTMLTextAreaElement;
  area.addEventListener("input", () => {
    write(area.value);
    onChange();
  });
  return el(
    "div",
    { class: "field", "data-path": path },
    el("label", { for: area.id }, label),
    area,
    el("span", { class: "badges" }),
  );
}

function multiSelect(
  path: string,
  label: string,
  terms: Term[],
  selection: MultiSelection,
  onChange: OnChange,
): HTMLElement {
  const group = el("fieldset", { class: "field multi", "data-path": path });
  group.append(el("legend", {}, label, el("span", { class: "badges" })));

  for (const term of terms) {
    const box = el("input", { type: "checkbox", value: term.label }) as HTMLInputElement;
    box.addEventListener("change", () => {
      if (box.checked) {
        selection.terms.push(term.label);
      } else {
        selection.terms = selection.terms.filter((t) => t !== term.label);
      }
      onChange();
    });
    group.append(el("label", { class: "term" }, box, ` ${term.label}`));
  }

  const chips = el("span", { class: "other-chips" });
  const otherInput = el("input", {
    type: "text",
    class: "other-input",
    placeholder: "Other…",
  }) as HTMLInputElement;
  const addOther = () => {
    const text = otherInput.value.trim();
    if (text === "") {
      return;
    }
    selection.others.push(text);
    otherInput.value = "";
    const chip = el("span", { class: "other-chip" }, text);
    const remove = el("button", { type: "button", class: "remove" }, "×");
    remove.addEventListener("click", () => {
      selection.others = selection.others.filter((o) => o !== text);
      chip.remove();
      onChange();
    });
    chip.append(remove);
    chips.append(chip);
    onChange();
  };
  const addButton = el("button", { type: "button", class: "other-add" }, "Add");
  addButton.addEventListener("click", addOther);
  otherInput.addEventListener("keydown", (event) => {
    if ((event as KeyboardEvent).key === "Enter") {
      event.preventDefault();
      addOther();
    }
  });
  group.append(el("span", { class: "other-row" }, otherInput, addButton, chips));
  return group;
}

function checklist(
  sectionPath: "top_level" | "pipeline",
  rows: FormState["topLevel"],
  onChange: OnChange,
): HTMLElement {
  const wrapper = el("div", { class: "checklist" });
  for (const row of rows) {
    const box = el("input", { type: "checkbox" }) as HTMLInputElement;
    box.addEventListener("change", () => {
      row.selected = box.checked;
      onChange();
    });
    const description = el("input", {
      type: "text",
      class: "description",
      placeholder: "Describe…",
    }) as HTMLInputElement;
    description.addEventListener("input", () => {
      row.description = description.value;
      onChange();
    });
    wrapper.append(
      el(
        "div",
        { class: "field check-row", "data-path": `${sectionPath}.${row.key}` },
        el("label", { class: "term" }, box, ` ${row.label}`),
        description,
        el("span", { class: "badges" }),
      ),
    );
  }
  return wrapper;
}

export function buildForm(
  root: HTMLElement,
  vocabularies: Vocabularies,
  state: FormState,
  onChange: OnChange,
): void {
  const section = (index: number, ...children: (Node | string)[]) =>
    el(
      "section",
      { class: "card-section", id: `section-${index + 1}` },
      el("h2", {}, SECTION_HEADINGS[index]),
      ...children,
    );

  const usage = el("select", { id: "identification-usage_context" }) as HTMLSelectElement;
  usage.append(el("option", { value: "" }, "(not documented)"));
  for (const term of vocabularies.usage_context) {
    usage.append(el("option", { value: term.label }, term.label));
  }
  usage.append(el("option", { value: OTHER_CHOICE }, "Other…"));
  const usageOther = el("input", {
    type: "text",
    id: "identification-usage_context-other",
    placeholder: "Other usage context",
    hidden: "",
  }) as HTMLInputElement;
  usage.addEventListener("change", () => {
    state.identification.usageContext.choice = usage.value;
    usageOther.hidden = usage.value !== OTHER_CHOICE;
    onChange();
  });
  usageOther.addEventListener("input", () => {
    state.identification.usageContext.otherText = usageOther.value;
    onChange();
  });
  const usageField = el(
    "div",
    { class: "field", "data-path": "identification.usage_context" },
    el("label", { for: usage.id }, "Usage Context"),
    usage,
    usageOther,
    el("span", { class: "badges" }),
  );

  const hypotheses = el("textarea", { id: "case_context-hypotheses", rows: "3" }) as HTMLTextAreaElement;
  hypotheses.addEventListener("input", () => {
    state.caseContext.hypotheses = hypotheses.value.split("\n");
    onChange();
  });
  const hypothesesField = el(
    "div",
    { class: "field", "data-path": "case_context.hypotheses" },
    el("label", { for: hypotheses.id }, "Hypotheses (one per line)"),
    hypotheses,
    el("span", { class: "badges" }),
  );

  root.append(
    section(
      0,
      textField(
        "identification.mmcid",
        "MMCID",
        state.identification.mmcid,
        (v) => (state.identification.mmcid = v),
        onChange,
        "DF-MC-YYYY-NNN",
      ),
      textField(
        "identification.version",
        "Version",
        state.identification.version,
        (v) => (state.identification.version = v),
        onChange,
      ),
      textField(
        "identification.owner",
        "Owner",
        state.identification.owner,
        (v) => (state.identification.owner = v),
        onChange,
      ),
      usageField,
      textField(
        "identification.layer_stage",
        "Layer/Stage",
        state.identification.layerStage,
        (v) => (state.identification.layerStage = v),
        onChange,
      ),
    ),
    section(
      1,
      textArea(
        "case_context.case_statement",
        "Case Statement",
        (v) => (state.caseContext.caseStatement = v),
        onChange,
      ),
      hypothesesField,
    ),
    section(
      2,
      multiSelect(
        "classification.domains",
        "Forensic Domains",
        vocabularies.forensic_classification,
        state.classification.domains,
        onChange,
      ),
      multiSelect(
        "classification.reasoning",
        "Reasoning Methodologies",
        vocabularies.reasoning_methodology,
        state.classification.reasoning,
        onChange,
      ),
    ),
    section(
      3,
      multiSelect(
        "quality.biases",
        "Bias Types",
        vocabularies.bias_taxonomy,
        state.quality.biases,
        onChange,
      ),
      multiSelect(
        "quality.bias_causes",
        "Causes of Bias",
        vocabularies.cause_of_bias,
        state.quality.biasCauses,
        onChange,
      ),
      textArea(
        "quality.errors_observed",
        "Observed Errors",
        (v) => (state.quality.errorsObserved = v),
        onChange,
      ),
      multiSelect(
        "quality.error_causes",
        "Causes of Error",
        vocabularies.error_causation,
        state.quality.errorCauses,
        onChange,
      ),
    ),
    section(4, checklist("top_level", state.topLevel, onChange)),
    section(5, checklist("pipeline", state.pipeline, onChange)),
  );
}
