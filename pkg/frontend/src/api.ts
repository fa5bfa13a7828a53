/** Typed client for the session endpoints. */

import type { ApiErrorDetail, MatrixPayload, SessionDoc, WhatIfDoc } from "./types.js";

export class ApiError extends Error {
  readonly status: number;
  readonly detail: ApiErrorDetail;

  constructor(status: number, detail: ApiErrorDetail) {
    super(detail.reason);
    this.status = status;
    this.detail = detail;
  }
}

async function parseError(response: Response): Promise<never> {
  let detail: ApiErrorDetail = { reason: `HTTP ${response.status}`, row: null, col: null };
  try {
    const body = await response.json();
    if (body && typeof body.detail === "object" && body.detail !== null) {
      detail = { reason: String(body.detail.reason ?? "unknown"), row: body.detail.row ?? null, col: body.detail.col ?? null };
    } else if (body && typeof body.detail === "string") {
      detail = { reason: body.detail, row: null, col: null };
    }
  } catch {
    // keep the generic detail when the body is not JSON
  }
  throw new ApiError(response.status, detail);
}

/** What the app needs from the backend; SessionApi is the HTTP implementation. */
export interface SessionClient {
  createSession(payload: MatrixPayload): Promise<SessionDoc>;
  getSession(id: string): Promise<SessionDoc>;
  patchEntry(id: string, i: number, j: number, value: number): Promise<SessionDoc>;
  undo(id: string): Promise<SessionDoc>;
  whatIf(id: string, delta: number): Promise<WhatIfDoc>;
}

export class SessionApi implements SessionClient {
  constructor(private readonly baseUrl: string = "") {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await fetch(this.baseUrl + path, {
      headers: { "content-type": "application/json" },
      ...init,
    });
    if (!response.ok) {
      await parseError(response);
    }
    return (await response.json()) as T;
  }

  createSession(payload: MatrixPayload): Promise<SessionDoc> {
    return this.request<SessionDoc>("/sessions", { method: "POST", body: JSON.stringify(payload) });
  }

  getSession(id: string): Promise<SessionDoc> {
    return this.request<SessionDoc>(`/sessions/${id}`);
  }

  patchEntry(id: string, i: number, j: number, value: number): Promise<SessionDoc> {
    return this.request<SessionDoc>(`/sessions/${id}/entries`, {
      method: "PATCH",
      body: JSON.stringify({ i, j, value }),
    });
  }

  undo(id: string): Promise<SessionDoc> {
    return this.request<SessionDoc>(`/sessions/${id}/undo`, { method: "POST" });
  }

  whatIf(id: string, delta: number): Promise<WhatIfDoc> {
    return this.request<WhatIfDoc>(`/sessions/${id}/cop?delta=${encodeURIComponent(delta)}`);
  }

  async health(): Promise<boolean> {
    try {
      const response = await fetch(this.baseUrl + "/healthz");
      return response.ok;
    } catch {
      return false;
    }
  }
}
