/** Application wiring: load, form, live validation, preview, downloads. */

import { ApiClient, ServiceError } from "./api.js";
import { renderDiagnostics, setStale } from "./diagnostics.js";
import { browserDownload, type DownloadSink } from "./download.js";
import { buildForm } from "./form.js";
import { downloadName, emptyFormState, serializeCard, type FormState } from "./state.js";

export const DEBOUNCE_MS = 400;

export interface AppOptions {
  client?: ApiClient;
  downloadSink?: DownloadSink;
}

export interface App {
  state: FormState;
  /** The most recent in-flight validate/preview cycle. */
  whenIdle(): Promise<void>;
  download(format: "json" | "markdown"): Promise<void>;
  root: HTMLElement;
}

export async function createApp(root: HTMLElement, options: AppOptions = {}): Promise<App> {
  const client = options.client ?? new ApiClient();
  const sink = options.downloadSink ?? browserDownload;

  root.innerHTML = `
    <div class="banner" hidden></div>
    <div class="layout" hidden>
      <form class="form-column" id="card-form"></form>
      <aside class="sidebar">
        <div class="actions">
          <button type="button" id="download-json">Download JSON</button>
          <button type="button" id="download-markdown">Download Markdown</button>
        </div>
        <div class="panel" id="diagnostics-panel"></div>
        <h3>Markdown preview</h3>
        <pre id="preview"></pre>
      </aside>
    </div>
  `;
  const banner = root.querySelector(".banner") as HTMLElement;
  const layout = root.querySelector(".layout") as HTMLElement;
  const formRoot = root.querySelector("#card-form") as HTMLElement;
  const panel = root.querySelector("#diagnostics-panel") as HTMLElement;
  const preview = root.querySelector("#preview") as HTMLElement;

  async function loadReferenceData() {
    return Promise.all([client.vocabularies(), client.checklists()]);
  }

  let vocabularies;
  let checklists;
  for (;;) {
    try {
      [vocabularies, checklists] = await loadReferenceData();
      break;
    } catch {
      // Blocking banner with retry: no partial form without reference data.
      banner.hidden = false;
      banner.innerHTML = "";
      banner.append("Cannot reach the card service. ");
      const retry = document.createElement("button");
      retry.type = "button";
      retry.textContent = "Retry";
      banner.append(retry);
      await new Promise<void>((resolve) => retry.addEventListener("click", () => resolve()));
    }
  }
  banner.hidden = true;
  layout.hidden = false;

  const state = emptyFormState(checklists);

  let timer: ReturnType<typeof setTimeout> | undefined;
  let controller: AbortController | undefined;
  let inFlight: Promise<void> = Promise.resolve();

  async function refresh(): Promise<void> {
    controller?.abort();
    const current = new AbortController();
    controller = current;
    const card = serializeCard(state);
    try {
      const result = await client.validate(card, current.signal);
      if (current.signal.aborted) return;
      renderDiagnostics(panel, formRoot, result.diagnostics);
      setStale(panel, false);
      const markdown = await client.render(card, "markdown", current.signal);
      if (current.signal.aborted) return;
      preview.textContent = markdown;
    } catch (error) {
      if (current.signal.aborted) return;
      if (error instanceof ServiceError && error.diagnostics.length > 0) {
        renderDiagnostics(panel, formRoot, error.diagnostics);
        setStale(panel, false);
      } else {
        setStale(panel, true);
      }
    }
  }

  function onChange() {
    state.dirty = true;
    if (timer !== undefined) clearTimeout(timer);
    timer = setTimeout(() => {
      timer = undefined;
      inFlight = refresh();
    }, DEBOUNCE_MS);
  }

  buildForm(formRoot, vocabularies, state, onChange);
  inFlight = refresh();

  async function download(format: "json" | "markdown"): Promise<void> {
    const card = serializeCard(state);
    try {
      const content = await client.render(card, format);
      sink(
        downloadName(state, format),
        content,
        format === "json" ? "application/json" : "text/markdown",
      );
    } catch (error) {
      if (error instanceof ServiceError && error.diagnostics.length > 0) {
        renderDiagnostics(panel, formRoot, error.diagnostics);
      } else {
        setStale(panel, true);
      }
    }
  }

  (root.querySelector("#download-json") as HTMLButtonElement).addEventListener("click", () => {
    void download("json");
  });
  (root.querySelector("#download-markdown") as HTMLButtonElement).addEventListener(
    "click",
    () => {
      void download("markdown");
    },
  );

  return {
    state,
    whenIdle: () => inFlight,
    download,
    root,
  };
}
