/** Typed client for the mutation service.  Every response is an envelope
 * carrying exactly one of result or error; errors become ApiRequestError. */

import type {
  EnumerateResult,
  FinitenessVerdict,
  GabrielDocument,
  MutateResult,
  QuiverDocument,
  ValidateResult,
} from "./types.js";

export class ApiRequestError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
  ) {
    super(message);
    this.name = "ApiRequestError";
  }
}

interface Envelope<T> {
  ok: boolean;
  result?: T;
  error?: { code: string; message: string };
}

export class ApiClient {
  constructor(readonly base: string = "") {}

  private async post<T>(path: string, body: unknown): Promise<T> {
    let resp: Response;
    try {
      resp = await fetch(this.base + path, {
        method: "POST",
        headers: { "content-type": "application/json" },
        body: JSON.stringify(body),
      });
    } catch (err) {
      throw new ApiRequestError(0, "unreachable", `service unreachable: ${err}`);
    }
    const envelope = (await resp.json()) as Envelope<T>;
    if (!resp.ok || !envelope.ok || envelope.result === undefined) {
      const error = envelope.error ?? { code: "unknown", message: `HTTP ${resp.status}` };
      throw new ApiRequestError(resp.status, error.code, error.message);
    }
    return envelope.result;
  }

  async health(): Promise<boolean> {
    try {
      const resp = await fetch(this.base + "/api/health");
      return resp.ok;
    } catch {
      return false;
    }
  }

  validate(quiver: QuiverDocument): Promise<ValidateResult> {
    return this.post("/api/validate", { quiver });
  }

  mutate(quiver: QuiverDocument, vertex: number): Promise<MutateResult> {
    return this.post("/api/mutate", { quiver, vertex });
  }

  mutateSeq(quiver: QuiverDocument, vertices: number[]): Promise<MutateResult> {
    return this.post("/api/mutate_seq", { quiver, vertices });
  }

  gabriel(quiver: QuiverDocument): Promise<GabrielDocument> {
    return this.post("/api/gabriel", { quiver });
  }

  classify(quiver: QuiverDocument, max?: number): Promise<FinitenessVerdict> {
    return this.post("/api/classify", max === undefined ? { quiver } : { quiver, max });
  }

  enumerate(
    quiver: QuiverDocument,
    opts: { max?: number; pageSize?: number; token?: string } = {},
  ): Promise<EnumerateResult> {
    const body: Record<string, unknown> = { quiver };
    if (opts.max !== undefined) body.max = opts.max;
    if (opts.pageSize !== undefined) body.page_size = opts.pageSize;
    if (opts.token !== undefined) body.token = opts.token;
    return this.post("/api/enumerate", body);
  }
}
