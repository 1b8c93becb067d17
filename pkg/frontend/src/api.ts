import type { AdviseResponse, AnalyzeResponse, HealthResponse, ServiceError } from "./types";

export class ApiError extends Error {
  constructor(public status: number, public code: string, message: string) {
    super(message);
  }
}

export interface Client {
  health(): Promise<HealthResponse>;
  analyze(hand: string): Promise<AnalyzeResponse>;
  advise(hand: string, kb: string, k: number): Promise<AdviseResponse>;
}

async function unwrap<T>(res: Response): Promise<T> {
  if (res.ok) {
    return (await res.json()) as T;
  }
  let detail: ServiceError = { code: "error", message: `HTTP ${res.status}` };
  try {
    detail = (await res.json()) as ServiceError;
  } catch {
    // non-JSON error body; keep the fallback
  }
  throw new ApiError(res.status, detail.code, detail.message);
}

export function createClient(baseUrl: string, fetchImpl: typeof fetch = fetch): Client {
  const post = (path: string, body: unknown) =>
    fetchImpl(`${baseUrl}${path}`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
  return {
    health: () => fetchImpl(`${baseUrl}/health`).then((r) => unwrap<HealthResponse>(r)),
    analyze: (hand) => post("/analyze", { hand }).then((r) => unwrap<AnalyzeResponse>(r)),
    advise: (hand, kb, k) =>
      post("/advise", { hand, kb, k }).then((r) => unwrap<AdviseResponse>(r)),
  };
}
