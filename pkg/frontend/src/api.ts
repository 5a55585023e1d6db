import type { AtlasBundle, ControlsState } from "./types.js";

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiError extends Error {
  constructor(
    public readonly status: number,
    detail: string,
  ) {
    super(detail);
  }
}

async function errorDetail(res: Response): Promise<string> {
  try {
    const body = await res.json();
    if (body && typeof body.detail === "string") {
      return body.detail;
    }
    return JSON.stringify(body.detail ?? body);
  } catch {
    return `HTTP ${res.status}`;
  }
}

/** POST the controls as an atlas query; resolves to the full bundle. */
export async function postAtlas(controls: ControlsState, fetchFn: FetchLike): Promise<AtlasBundle> {
  const res = await fetchFn("/api/atlas", {
    method: "POST",
    headers: { "Content-Type": "application/json", Accept: "application/json" },
    body: JSON.stringify({
      min_downloads: controls.min_downloads,
      k: controls.k,
      seed: controls.seed,
    }),
  });
  if (!res.ok) {
    throw new ApiError(res.status, await errorDetail(res));
  }
  return (await res.json()) as AtlasBundle;
}
