import type { AtlasBundle } from "../src/types.js";
import type { FetchLike } from "../src/api.js";
import bundleJson from "./fixture_bundle.json";

export const FIXTURE_BUNDLE = bundleJson as unknown as AtlasBundle;

export interface RecordedCall {
  url: string;
  method: string;
  body: unknown;
}

export interface MockServer {
  fetchFn: FetchLike;
  calls: RecordedCall[];
}

/** Fetch stub answering POST /api/atlas like the real service. */
export function mockServer(
  handler: (body: Record<string, unknown>) => { status: number; payload: unknown } = () => ({
    status: 200,
    payload: FIXTURE_BUNDLE,
  }),
): MockServer {
  const calls: RecordedCall[] = [];
  const fetchFn: FetchLike = async (url, init) => {
    const method = init?.method ?? "GET";
    const body = init?.body ? JSON.parse(String(init.body)) : null;
    calls.push({ url, method, body });
    if (url === "/api/atlas" && method === "POST") {
      const { status, payload } = handler(body as Record<string, unknown>);
      return new Response(JSON.stringify(payload), {
        status,
        headers: { "Content-Type": "application/json" },
      });
    }
    return new Response(JSON.stringify({ detail: "unexpected endpoint" }), { status: 500 });
  };
  return { fetchFn, calls };
}

/** The bundle echoes submitted values, like the cache-keyed server does. */
export function echoBundle(body: Record<string, unknown>): AtlasBundle {
  return {
    ...FIXTURE_BUNDLE,
    query: {
      min_downloads: (body.min_downloads as number) ?? 10000,
      k: (body.k as number) ?? 20,
      threshold: 0.2,
      seed: (body.seed as number) ?? 42,
    },
  };
}
