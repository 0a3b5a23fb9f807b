// HTTP access to the metrics API: one paginated listing fetch plus one
// batched multi fetch per load — never a request per row. The fetch
// implementation is injectable so tests run without a network.

import type { ApiPayload, DaoListItem, Listing, RowError } from "./types.js";

export interface HttpResponse {
  ok: boolean;
  status: number;
  json(): Promise<unknown>;
}

export type FetchLike = (url: string) => Promise<HttpResponse>;

export class ApiUnreachable extends Error {}

export class NotFound extends Error {}

const PAGE_SIZE = 200;
const MULTI_CHUNK = 200;

const defaultFetch: FetchLike = (url) => fetch(url);

async function getJson(fetchImpl: FetchLike, url: string): Promise<unknown> {
  let response: HttpResponse;
  try {
    response = await fetchImpl(url);
  } catch {
    throw new ApiUnreachable(`cannot reach ${url}`);
  }
  if (response.status === 404) throw new NotFound(url);
  if (!response.ok) throw new ApiUnreachable(`${url} responded HTTP ${response.status}`);
  return response.json();
}

export async function fetchListing(
  apiBase: string,
  fetchImpl: FetchLike = defaultFetch,
): Promise<DaoListItem[]> {
  const items: DaoListItem[] = [];
  let page = 1;
  for (;;) {
    const body = (await getJson(
      fetchImpl,
      `${apiBase}/api/v1/daos?page=${page}&page_size=${PAGE_SIZE}`,
    )) as Listing;
    items.push(...body.items);
    if (page * body.page_size >= body.total) return items;
    page += 1;
  }
}

export interface Comparison {
  payloads: ApiPayload[];
  errors: RowError[];
}

export async function loadComparison(
  apiBase: string,
  fetchImpl: FetchLike = defaultFetch,
): Promise<Comparison> {
  const items = await fetchListing(apiBase, fetchImpl);
  const ids = items.map((item) => item.dao_id);
  const payloads: ApiPayload[] = [];
  const errors: RowError[] = [];
  for (let start = 0; start < ids.length; start += MULTI_CHUNK) {
    const chunk = ids.slice(start, start + MULTI_CHUNK);
    const body = (await getJson(
      fetchImpl,
      `${apiBase}/api/v1/daos/metrics/multi?dao_ids=${chunk.join(",")}`,
    )) as Array<Record<string, unknown>>;
    for (const entry of body) {
      if ("error" in entry) {
        errors.push({ dao_id: entry["dao_id"] as number, error: String(entry["error"]) });
      } else {
        payloads.push(entry as unknown as ApiPayload);
      }
    }
  }
  return { payloads, errors };
}

// Demo mode: a bundled static file shaped exactly like the payload list
// the API would return, so the rest of the app cannot tell the difference.
export async function loadDemo(
  url: string,
  fetchImpl: FetchLike = defaultFetch,
): Promise<Comparison> {
  const body = (await getJson(fetchImpl, url)) as ApiPayload[];
  return { payloads: body, errors: [] };
}
