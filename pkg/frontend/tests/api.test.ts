import { describe, expect, it } from "vitest";

import {
  ApiUnreachable,
  NotFound,
  fetchListing,
  loadComparison,
  loadDemo,
  type FetchLike,
  type HttpResponse,
} from "../src/api.js";
import type { ApiPayload } from "../src/types.js";
import { emptyPayload } from "./helpers.js";

function jsonResponse(body: unknown, status = 200): HttpResponse {
  return { ok: status >= 200 && status < 300, status, json: async () => body };
}

// A fake API over `count` DAOs mirroring the v1 surface: paginated
// listing plus a batched multi endpoint.
function fakeApi(count: number, unknownIds: number[] = []) {
  const calls: string[] = [];
  const payloads = new Map<number, ApiPayload>();
  for (let id = 1; id <= count; id += 1) payloads.set(id, emptyPayload(id, `DAO ${id}`));

  const fetchImpl: FetchLike = async (url) => {
    calls.push(url);
    const parsed = new URL(url);
    if (parsed.pathname === "/api/v1/daos") {
      const page = Number(parsed.searchParams.get("page") ?? "1");
      const pageSize = Number(parsed.searchParams.get("page_size") ?? "50");
      const start = (page - 1) * pageSize;
      const items = [...payloads.values()]
        .slice(start, start + pageSize)
        .map((p) => ({
          dao_id: p.dao_id,
          dao_name: p.dao_name,
          chain_id: p.chain_id,
          timestamp: p.timestamp,
        }));
      return jsonResponse({ total: count, page, page_size: pageSize, items });
    }
    if (parsed.pathname === "/api/v1/daos/metrics/multi") {
      const ids = (parsed.searchParams.get("dao_ids") ?? "")
        .split(",")
        .map((s) => Number(s));
      const body = ids.map((id) =>
        unknownIds.includes(id) || !payloads.has(id)
          ? { dao_id: id, error: "unknown" }
          : payloads.get(id),
      );
      return jsonResponse(body);
    }
    return jsonResponse({ error: "not_found", detail: parsed.pathname }, 404);
  };
  return { fetchImpl, calls };
}

describe("loadComparison", () => {
  it("fetches every page, then one batch per 200 ids — never per row", async () => {
    const api = fakeApi(450);
    const result = await loadComparison("http://api.test", api.fetchImpl);
    expect(result.payloads.map((p) => p.dao_id)).toEqual(
      Array.from({ length: 450 }, (_, i) => i + 1),
    );
    expect(result.errors).toEqual([]);
    const listingCalls = api.calls.filter((u) => u.includes("/daos?"));
    const multiCalls = api.calls.filter((u) => u.includes("/metrics/multi"));
    expect(listingCalls).toHaveLength(3); // 450 ids at page_size 200
    expect(multiCalls).toHaveLength(3); // 200 + 200 + 50
    expect(api.calls).toHaveLength(6);
  });

  it("keeps listing order in the batch request", async () => {
    const api = fakeApi(5);
    await loadComparison("http://api.test", api.fetchImpl);
    const multi = api.calls.find((u) => u.includes("/metrics/multi"))!;
    expect(new URL(multi).searchParams.get("dao_ids")).toBe("1,2,3,4,5");
  });

  it("turns unknown-id entries into per-row errors, keeping the rest", async () => {
    const api = fakeApi(4, [2]);
    const result = await loadComparison("http://api.test", api.fetchImpl);
    expect(result.payloads.map((p) => p.dao_id)).toEqual([1, 3, 4]);
    expect(result.errors).toEqual([{ dao_id: 2, error: "unknown" }]);
  });

  it("maps network failure to ApiUnreachable", async () => {
    const dead: FetchLike = async () => {
      throw new Error("ECONNREFUSED");
    };
    await expect(loadComparison("http://down.test", dead)).rejects.toBeInstanceOf(
      ApiUnreachable,
    );
  });

  it("maps server errors to ApiUnreachable and 404 to NotFound", async () => {
    const failing: FetchLike = async () => jsonResponse({ error: "boom" }, 500);
    await expect(fetchListing("http://x", failing)).rejects.toBeInstanceOf(ApiUnreachable);
    const missing: FetchLike = async () => jsonResponse({ error: "not_found" }, 404);
    await expect(fetchListing("http://x", missing)).rejects.toBeInstanceOf(NotFound);
  });
});

describe("loadDemo", () => {
  it("reads a bundled payload list with no errors", async () => {
    const payloads = [emptyPayload(1, "A"), emptyPayload(2, "B")];
    const fetchImpl: FetchLike = async () => jsonResponse(payloads);
    const result = await loadDemo("./demo_payloads.json", fetchImpl);
    expect(result.payloads).toEqual(payloads);
    expect(result.errors).toEqual([]);
  });
});
