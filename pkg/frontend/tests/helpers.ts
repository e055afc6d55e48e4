/** Shared DOM-driving helpers for the UI tests. */

import { createApp, type App } from "../src/app.js";
import { installStub, StubService } from "./stub_service.js";

export interface Harness {
  app: App;
  stub: StubService;
  root: HTMLElement;
  restore: () => void;
}

export async function mount(stub = new StubService()): Promise<Harness> {
  const restore = installStub(stub);
  const root = document.createElement("div");
  document.body.append(root);
  const app = await createApp(root);
  await app.whenIdle();
  return { app, stub, root, restore };
}

export function unmount(harness: Harness): void {
  harness.restore();
  harness.root.remove();
}

export function typeInto(root: HTMLElement, selector: string, value: string): void {
  const input = root.querySelector(selector) as HTMLInputElement | HTMLTextAreaElement;
  input.value = value;
  input.dispatchEvent(new Event("input", { bubbles: true }));
}

export function toggleTerm(root: HTMLElement, fieldPath: string, label: string): void {
  const group = root.querySelector(`[data-path="${fieldPath}"]`) as HTMLElement;
  for (const box of group.querySelectorAll<HTMLInputElement>('input[type="checkbox"]')) {
    if (box.value === label) {
      box.checked = !box.checked;
      box.dispatchEvent(new Event("change", { bubbles: true }));
      return;
    }
  }
  throw new Error(`no checkbox ${label} under ${fieldPath}`);
}

export function toggleChecklistRow(root: HTMLElement, rowPath: string, description?: string): void {
  const row = root.querySelector(`[data-path="${rowPath}"]`) as HTMLElement;
  const box = row.querySelector('input[type="checkbox"]') as HTMLInputElement;
  box.checked = !box.checked;
  box.dispatchEvent(new Event("change", { bubbles: true }));
  if (description !== undefined) {
    const text = row.querySelector("input.description") as HTMLInputElement;
    text.value = description;
    text.dispatchEvent(new Event("input", { bubbles: true }));
  }
}

export function addOther(root: HTMLElement, fieldPath: string, text: string): void {
  const group = root.querySelector(`[data-path="${fieldPath}"]`) as HTMLElement;
  const input = group.querySelector("input.other-input") as HTMLInputElement;
  input.value = text;
  input.dispatchEvent(new Event("input", { bubbles: true }));
  (group.querySelector("button.other-add") as HTMLButtonElement).click();
}

export function selectOption(root: HTMLElement, selector: string, value: string): void {
  const select = root.querySelector(selector) as HTMLSelectElement;
  select.value = value;
  select.dispatchEvent(new Event("change", { bubbles: true }));
}

export function badgeCodes(root: HTMLElement, fieldPath: string): string[] {
  const group = root.querySelector(`[data-path="${fieldPath}"]`) as HTMLElement;
  return [...group.querySelectorAll<HTMLElement>(".badge")].map((b) => b.dataset.code ?? "");
}
