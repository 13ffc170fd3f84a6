/** Thin client for the recommendation service. */

import type { RecommendBody, RecommendResponse } from "./types.js";

export type FetchLike = (
  url: string,
  init?: { method?: string; headers?: Record<string, string>; body?: string }
) => Promise<{ ok: boolean; status: number; text(): Promise<string> }>;

export class ApiError extends Error {
  constructor(
    public readonly status: number,
    public readonly code: string,
    message: string
  ) {
    super(message);
  }
}

export function createApiClient(baseUrl: string, fetchImpl?: FetchLike) {
  const doFetch: FetchLike = fetchImpl ?? ((url, init) => fetch(url, init));
  const root = baseUrl.replace(/\/+$/, "");

  return {
    async recommend(body: RecommendBody): Promise<RecommendResponse> {
      const response = await doFetch(`${root}/recommend`, {
        method: "POST",
        headers: { "content-type": "application/json" },
        body: JSON.stringify(body),
      });
      const text = await response.text();
      if (!response.ok) {
        let code = "http_error";
        let message = `service returned ${response.status}`;
        try {
          const payload = JSON.parse(text);
          code = payload.code ?? code;
          message = payload.message ?? message;
        } catch {
          // non-JSON error body; keep the generic message
        }
        throw new ApiError(response.status, code, message);
      }
      return JSON.parse(text) as RecommendResponse;
    },
  };
}

export type ApiClient = ReturnType<typeof createApiClient>;
