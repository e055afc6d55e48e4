/** Thin fetch client for the card service. */

import type {
  ApiErrorBody,
  CardDocument,
  Checklists,
  Diagnostic,
  ValidationResponse,
  Vocabularies,
} from "./types.js";

export class ServiceError extends Error {
  readonly status: number;
  readonly code: string;
  readonly diagnostics: Diagnostic[];

  constructor(body: ApiErrorBody) {
    super(body.message);
    this.status = body.status;
    this.code = body.code;
    this.diagnostics = body.diagnostics ?? [];
  }
}

async function raiseForStatus(response: Response): Promise<Response> {
  if (response.ok) {
    return response;
  }
  let body: ApiErrorBody;
  try {
    body = (await response.json()) as ApiErrorBody;
  } catch {
    body = { status: response.status, code: "http_error", message: response.statusText };
  }
  throw new ServiceError(body);
}

export class ApiClient {
  constructor(private readonly baseUrl: string = "") {}

  private url(path: string): string {
    return `${this.baseUrl}/api/v1${path}`;
  }

  async vocabularies(): Promise<Vocabularies> {
    const response = await raiseForStatus(await fetch(this.url("/vocabularies")));
    return (await response.json()) as Vocabularies;
  }

  async checklists(): Promise<Checklists> {
    const response = await raiseForStatus(await fetch(this.url("/checklists")));
    return (await response.json()) as Checklists;
  }

  async validate(card: CardDocument, signal?: AbortSignal): Promise<ValidationResponse> {
    const response = await raiseForStatus(
      await fetch(this.url("/validate"), {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify(card),
        signal,
      }),
    );
    return (await response.json()) as ValidationResponse;
  }

  async render(
    card: CardDocument,
    format: "json" | "markdown",
    signal?: AbortSignal,
  ): Promise<string> {
    const response = await raiseForStatus(
      await fetch(this.url(`/render?format=${format}`), {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify(card),
        signal,
      }),
    );
    return await response.text();
  }
}
