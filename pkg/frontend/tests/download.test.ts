import { afterEach, beforeEach, describe, expect, it } from "vitest";

import { createApp } from "../src/app.js";
import type { CardDocument } from "../src/types.js";
import {
  addOther,
  selectOption,
  toggleChecklistRow,
  toggleTerm,
  typeInto,
  unmount,
  type Harness,
} from "./helpers.js";
import { installStub, StubService } from "./stub_service.js";

interface Download {
  filename: string;
  content: string;
  mediaType: string;
}

let harness: Harness;
let downloads: Download[];

beforeEach(async () => {
  downloads = [];
  const stub = new StubService();
  const restore = installStub(stub);
  const root = document.createElement("div");
  document.body.append(root);
  const app = await createApp(root, {
    downloadSink: (filename, content, mediaType) => {
      downloads.push({ filename, content, mediaType });
    },
  });
  await app.whenIdle();
  harness = { app, stub, root, restore };
});

afterEach(() => {
  unmount(harness);
});

function fillEveryField(): void {
  const { root } = harness;
  typeInto(root, "#identification-mmcid", "DF-MC-2025-001");
  typeInto(root, "#identification-version", "1.0");
  typeInto(root, "#identification-owner", "Example Lab");
  selectOption(root, "#identification-usage_context", "Standalone");
  typeInto(root, "#identification-layer_stage", "L1 of 2");

  typeInto(root, "#case_context-case_statement", "Scope the incident.");
  typeInto(root, "#case_context-hypotheses", "Exfiltration via cloud\nUSB transfer");

  toggleTerm(root, "classification.domains", "Computer Forensics");
  toggleTerm(root, "classification.domains", "Network Forensics");
  addOther(root, "classification.domains", "Drone Forensics");
  toggleTerm(root, "classification.reasoning", "Abductive Reasoning");

  toggleTerm(root, "quality.biases", "Automation Bias (over-reliance on automated results)");
  addOther(root, "quality.bias_causes", "Vendor model opacity");
  typeInto(root, "#quality-errors_observed", "Two PDFs misclassified.");
  toggleTerm(root, "quality.error_causes", "Class Imbalance");

  for (const row of ["top_level.algorithm", "top_level.tools", "top_level.degree_of_confidence"]) {
    toggleChecklistRow(root, row, "documented");
  }
  for (const row of ["pipeline.content_carving", "pipeline.hashing", "pipeline.timeline"]) {
    toggleChecklistRow(root, row, "documented");
  }
}

describe("generate and download", () => {
  it("downloads JSON whose server re-validation has zero error diagnostics", async () => {
    fillEveryField();
    await harness.app.download("json");

    expect(downloads).toHaveLength(1);
    const { filename, content, mediaType } = downloads[0];
    expect(filename).toBe("DF-MC-2025-001.json");
    expect(mediaType).toBe("application/json");

    const document = JSON.parse(content) as CardDocument & { meta: unknown };
    expect(document.meta).toBeDefined();
    expect(document.classification.domains).toContainEqual({ other: "Drone Forensics" });

    const revalidated = harness.stub.validateDocument(document);
    expect(revalidated.diagnostics.filter((d) => d.severity === "error")).toEqual([]);
    expect(revalidated.valid).toBe(true);
  });

  it("names an unidentified card untitled", async () => {
    await harness.app.download("markdown");
    expect(downloads[0].filename).toBe("untitled.md");
    expect(downloads[0].mediaType).toBe("text/markdown");
    expect(downloads[0].content).toContain("# Digital Forensics Model Card");
  });

  it("surfaces render diagnostics instead of downloading on 422", async () => {
    harness.stub.renderFailsWith = [
      {
        severity: "error",
        code: "DFMC-E003",
        path: "top_level",
        message: "expected 9 entries, got 8",
      },
    ];
    await harness.app.download("json");
    expect(downloads).toHaveLength(0);
    const panel = harness.root.querySelector("#diagnostics-panel") as HTMLElement;
    const codes = [...panel.querySelectorAll<HTMLElement>(".diagnostic")].map(
      (d) => d.dataset.code,
    );
    expect(codes).toEqual(["DFMC-E003"]);
  });
});
