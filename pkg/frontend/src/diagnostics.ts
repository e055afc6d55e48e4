/** Renders service diagnostics: a summary panel plus inline field badges. */

import type { Diagnostic } from "./types.js";

/** "classification.domains[2]" anchors to the "classification.domains" field. */
function fieldPath(path: string): string {
  return path.replace(/\[\d+\]$/, "");
}

export function renderDiagnostics(
  panel: HTMLElement,
  formRoot: HTMLElement,
  diagnostics: Diagnostic[],
): void {
  for (const badges of formRoot.querySelectorAll(".badges")) {
    badges.textContent = "";
  }
  panel.textContent = "";

  if (diagnostics.length === 0) {
    const note = document.createElement("p");
    note.className = "all-clear";
    note.textContent = "No findings.";
    panel.append(note);
    return;
  }

  const list = document.createElement("ul");
  for (const diagnostic of diagnostics) {
    const item = document.createElement("li");
    item.className = `diagnostic ${diagnostic.severity}`;
    item.dataset.code = diagnostic.code;
    item.textContent = `${diagnostic.severity.toUpperCase()} ${diagnostic.code} ${
      diagnostic.path
    }: ${diagnostic.message}`;
    list.append(item);

    const anchor = fieldPath(diagnostic.path);
    if (anchor === "") {
      continue;
    }
    const field = formRoot.querySelector(`[data-path="${anchor}"] .badges`);
    if (field instanceof HTMLElement && !badgeExists(field, diagnostic.code)) {
      const badge = document.createElement("span");
      badge.className = `badge ${diagnostic.severity}`;
      badge.dataset.code = diagnostic.code;
      badge.title = diagnostic.message;
      badge.textContent = diagnostic.code;
      field.append(badge);
    }
  }
  panel.append(list);
}

function badgeExists(field: HTMLElement, code: string): boolean {
  return [...field.querySelectorAll(".badge")].some(
    (badge) => (badge as HTMLElement).dataset.code === code,
  );
}

export function setStale(panel: HTMLElement, stale: boolean): void {
  panel.classList.toggle("stale", stale);
}
