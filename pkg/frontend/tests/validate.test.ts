import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import { DEBOUNCE_MS } from "../src/app.js";
import {
  badgeCodes,
  mount,
  toggleTerm,
  typeInto,
  unmount,
  type Harness,
} from "./helpers.js";

let harness: Harness;

beforeEach(async () => {
  harness = await mount();
  vi.useFakeTimers();
});

afterEach(() => {
  vi.useRealTimers();
  unmount(harness);
});

async function settle(): Promise<void> {
  await vi.advanceTimersByTimeAsync(DEBOUNCE_MS + 10);
  await harness.app.whenIdle();
}

describe("live validation", () => {
  it("shows the single info notice for an empty form", async () => {
    const panel = harness.root.querySelector("#diagnostics-panel") as HTMLElement;
    const items = [...panel.querySelectorAll(".diagnostic")];
    expect(items).toHaveLength(1);
    expect((items[0] as HTMLElement).dataset.code).toBe("DFMC-I001");
  });

  it("surfaces the advisory-limit warning on the domains field at the 4th selection", async () => {
    const { root } = harness;
    for (const label of ["Computer Forensics", "Network Forensics", "Cloud Forensics"]) {
      toggleTerm(root, "classification.domains", label);
    }
    await settle();
    expect(badgeCodes(root, "classification.domains")).toEqual([]);

    toggleTerm(root, "classification.domains", "Memory Forensics");
    await settle();
    expect(badgeCodes(root, "classification.domains")).toEqual(["DFMC-W001"]);
  });

  it("pins a malformed identifier finding to its field as typed", async () => {
    typeInto(harness.root, "#identification-mmcid", "DF-MC-20");
    await settle();
    expect(badgeCodes(harness.root, "identification.mmcid")).toEqual(["DFMC-E001"]);

    typeInto(harness.root, "#identification-mmcid", "DF-MC-2025-001");
    await settle();
    expect(badgeCodes(harness.root, "identification.mmcid")).toEqual([]);
  });

  it("debounces: one validate round for a burst of edits", async () => {
    const before = harness.stub.callsTo("/api/v1/validate");
    typeInto(harness.root, "#identification-owner", "a");
    typeInto(harness.root, "#identification-owner", "ab");
    typeInto(harness.root, "#identification-owner", "abc");
    await settle();
    expect(harness.stub.callsTo("/api/v1/validate")).toBe(before + 1);
  });

  it("marks results stale on transport failure and keeps the form editable", async () => {
    harness.stub.reachable = false;
    typeInto(harness.root, "#identification-owner", "Lab");
    await settle();
    const panel = harness.root.querySelector("#diagnostics-panel") as HTMLElement;
    expect(panel.classList.contains("stale")).toBe(true);

    harness.stub.reachable = true;
    typeInto(harness.root, "#identification-owner", "Lab Two");
    await settle();
    expect(panel.classList.contains("stale")).toBe(false);
  });

  it("refreshes the markdown preview with the latest render", async () => {
    typeInto(harness.root, "#identification-mmcid", "DF-MC-2025-001");
    await settle();
    const preview = harness.root.querySelector("#preview") as HTMLElement;
    expect(preview.textContent).toContain("# Digital Forensics Model Card (DF-MC-2025-001)");
    expect(preview.textContent?.match(/^## /gm)).toHaveLength(6);
  });
});
