// Browser entry point: wires the pure modules to the DOM. Routing is
// hash-based (#dao/<id> for the drill-down); data loads once per view
// and stale responses are discarded when a newer load has started.

import { ApiUnreachable, loadComparison, loadDemo, type Comparison } from "./api.js";
import { exportEnabled, svgDataUrl } from "./charts.js";
import { buildDrilldown, type Drilldown } from "./drilldown.js";
import { methodology } from "./methodology.js";
import {
  bandColour,
  buildRows,
  cellColour,
  sortRows,
  summaryTiles,
  type SortDirection,
  type SortKey,
} from "./table.js";
import type { ApiPayload, TableRow } from "./types.js";

declare global {
  interface Window {
    DAOGAUGE_CONFIG?: { apiBase?: string; demoUrl?: string };
  }
}

interface AppState {
  payloads: Map<number, ApiPayload>;
  rows: TableRow[];
  errors: { dao_id: number; error: string }[];
  sortKey: SortKey;
  sortDirection: SortDirection;
  loadError: string | null;
  loading: boolean;
}

const state: AppState = {
  payloads: new Map(),
  rows: [],
  errors: [],
  sortKey: "overall",
  sortDirection: "desc",
  loadError: null,
  loading: true,
};

let loadToken = 0;

function config(): { apiBase: string | null; demoUrl: string } {
  const params = new URLSearchParams(window.location.search);
  const fromWindow = window.DAOGAUGE_CONFIG ?? {};
  const apiBase = params.get("api") ?? fromWindow.apiBase ?? null;
  const demoUrl = fromWindow.demoUrl ?? "./public/demo_payloads.json";
  return { apiBase, demoUrl };
}

function esc(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

const fmtScore = (n: number): string => String(n);

function root(): HTMLElement {
  const el = document.getElementById("app");
  if (!el) throw new Error("missing #app container");
  return el;
}

async function load(): Promise<void> {
  const token = ++loadToken;
  state.loading = true;
  state.loadError = null;
  render();
  const { apiBase, demoUrl } = config();
  try {
    const result: Comparison = apiBase
      ? await loadComparison(apiBase)
      : await loadDemo(demoUrl);
    if (token !== loadToken) return; // superseded by a newer load
    state.payloads = new Map(result.payloads.map((p) => [p.dao_id, p]));
    state.rows = buildRows(result.payloads);
    state.errors = result.errors;
    state.loadError = null;
  } catch (error) {
    if (token !== loadToken) return;
    state.loadError =
      error instanceof ApiUnreachable
        ? `The metrics API is unreachable (${error.message}). Retry when the server is back.`
        : `Loading failed: ${String(error)}`;
  } finally {
    if (token === loadToken) {
      state.loading = false;
      render();
    }
  }
}

function currentDaoId(): number | null {
  const match = window.location.hash.match(/^#dao\/(\d+)$/);
  return match ? Number(match[1]) : null;
}

function tilesHtml(): string {
  const tiles = summaryTiles(state.rows);
  const mean = tiles.mean_composite === null ? "–" : tiles.mean_composite.toFixed(2);
  return `
    <section class="tiles">
      <div class="tile green">High<strong>${tiles.high}</strong></div>
      <div class="tile amber">Medium<strong>${tiles.medium}</strong></div>
      <div class="tile red">Low<strong>${tiles.low}</strong></div>
      <div class="tile">Mean C<strong>${mean}</strong></div>
    </section>`;
}

function methodologyHtml(): string {
  const m = methodology();
  const sections = m.sections
    .map(
      (section) => `
        <h4>${esc(section.label)} (${esc(section.key)})</h4>
        <ul>${section.lines.map((line) => `<li>${esc(line)}</li>`).join("")}</ul>
        ${section.notes.map((note) => `<p class="note">${esc(note)}</p>`).join("")}`,
    )
    .join("");
  return `
    <details class="methodology">
      <summary>Research methodology (policy ${esc(m.version)})</summary>
      ${sections}
      <h4>Bands</h4>
      <ul>${m.bands.map((band) => `<li>${esc(band)}</li>`).join("")}</ul>
      <p class="note">Composite range: ${m.composite_range[0]} – ${m.composite_range[1]}.
      ${esc(m.cell_rule)}</p>
    </details>`;
}

function tableHtml(): string {
  const rows = sortRows(state.rows, state.sortKey, state.sortDirection);
  const arrow = state.sortDirection === "desc" ? "▾" : "▴";
  const header = (key: SortKey, label: string) =>
    `<th data-sort="${key}">${label}${state.sortKey === key ? ` ${arrow}` : ""}</th>`;
  const body = rows
    .map(
      (row) => `
      <tr data-dao="${row.dao_id}">
        <td class="name">${esc(row.dao_name)}</td>
        <td>${row.chain_id ?? "–"}</td>
        <td class="${cellColour(row.card.s_participation)}">${fmtScore(row.card.s_participation)}</td>
        <td class="${cellColour(row.card.s_funds)}">${fmtScore(row.card.s_funds)}</td>
        <td class="${cellColour(row.card.s_voting)}">${fmtScore(row.card.s_voting)}</td>
        <td class="${cellColour(row.card.s_decentralisation)}">${fmtScore(row.card.s_decentralisation)}</td>
        <td><strong>${fmtScore(row.card.composite)}</strong></td>
        <td class="${bandColour(row.card.band)}">${row.card.band}</td>
      </tr>`,
    )
    .join("");
  const chips = state.errors
    .map((e) => `<span class="chip">dao ${e.dao_id}: ${esc(e.error)}</span>`)
    .join("");
  return `
    ${tilesHtml()}
    <table class="comparison">
      <thead><tr>
        <th>DAO</th><th>Chain</th>
        ${header("s_participation", "Participation")}
        ${header("s_funds", "Funds")}
        ${header("s_voting", "Voting")}
        ${header("s_decentralisation", "Decentralisation")}
        ${header("overall", "C")}
        <th>Band</th>
      </tr></thead>
      <tbody>${body}</tbody>
    </table>
    ${chips ? `<div class="chips">${chips}</div>` : ""}
    ${methodologyHtml()}`;
}

function chartBlock(key: string, title: string, svg: string | null, facts: string[]): string {
  const body = svg ?? `<p class="note">no data to chart</p>`;
  const disabled = exportEnabled(svg) ? "" : " disabled";
  return `
    <section class="card" data-chart="${key}">
      <h3>${esc(title)}</h3>
      <ul>${facts.map((fact) => `<li>${esc(fact)}</li>`).join("")}</ul>
      <div class="chart">${body}</div>
      <button data-export="${key}"${disabled}>Export SVG</button>
    </section>`;
}

const maybe = (value: number | null, unit = ""): string =>
  value === null ? "missing" : `${value}${unit}`;

function drilldownHtml(view: Drilldown): string {
  const { card } = view;
  const health = view.health
    ? `<section class="card"><h3>Health</h3><pre>${esc(JSON.stringify(view.health, null, 2))}</pre></section>`
    : "";
  return `
    <p><a href="#">← back to comparison</a></p>
    <h2>${esc(view.dao_name)} <small>chain ${view.chain_id ?? "–"} · ${esc(view.timestamp ?? "no timestamp")}</small></h2>
    <p class="scoreline">
      C <strong>${fmtScore(card.composite)}</strong> (${card.band}) ·
      policy ${esc(card.policy_version)}
    </p>
    ${chartBlock("participation", `Participation — score ${fmtScore(card.s_participation)}`, view.participation.chart, [
      `distinct voters: ${maybe(view.participation.voters)}`,
      `total members: ${maybe(view.participation.members)}`,
      `turnout: ${view.participation.turnout_pct === null ? "invalid or missing" : view.participation.turnout_pct.toFixed(2) + "%"}`,
    ])}
    ${chartBlock("treasury", `Treasury — score ${fmtScore(card.s_funds)}`, view.treasury.chart, [
      `treasury: ${view.treasury.treasury_usd === null ? "missing" : "$" + view.treasury.treasury_usd.toLocaleString()}`,
      `circulating share: ${maybe(view.treasury.circulating_share_pct, "%")}`,
      `relative treasury: ${view.treasury.relative_treasury_pct.toFixed(2)}%`,
    ])}
    ${chartBlock("governance", `Voting — score ${fmtScore(card.s_voting)}`, view.governance.chart, [
      `approved / total proposals: ${maybe(view.governance.approved)} / ${maybe(view.governance.total)}`,
      `approval: ${maybe(view.governance.approval_pct, "%")}`,
      `avg voting duration: ${maybe(view.governance.duration_days, " days")}`,
    ])}
    ${chartBlock("distribution", `Decentralisation — score ${fmtScore(card.s_decentralisation)}`, view.distribution.chart, [
      `largest holder: ${maybe(view.distribution.largest_holder_pct, "%")}`,
      `on-chain automation: ${view.distribution.automation}`,
      ...(view.distribution.note ? [view.distribution.note] : []),
    ])}
    ${health}`;
}

let currentDrilldown: Drilldown | null = null;

function render(): void {
  const el = root();
  if (state.loading) {
    el.innerHTML = `<p class="note">loading…</p>`;
    return;
  }
  if (state.loadError) {
    el.innerHTML = `
      <div class="banner">
        <p>${esc(state.loadError)}</p>
        <button data-retry>Retry</button>
      </div>`;
    return;
  }
  const daoId = currentDaoId();
  if (daoId !== null) {
    const payload = state.payloads.get(daoId);
    if (!payload) {
      el.innerHTML = `<p><a href="#">← back</a></p><p class="banner">No DAO with id ${daoId}.</p>`;
      currentDrilldown = null;
      return;
    }
    currentDrilldown = buildDrilldown(payload);
    el.innerHTML = drilldownHtml(currentDrilldown);
    return;
  }
  currentDrilldown = null;
  if (!state.rows.length) {
    el.innerHTML = `<p class="note">The catalog is empty — import some snapshots first.</p>${methodologyHtml()}`;
    return;
  }
  el.innerHTML = tableHtml();
}

function chartForKey(key: string): string | null {
  if (!currentDrilldown) return null;
  switch (key) {
    case "participation":
      return currentDrilldown.participation.chart;
    case "treasury":
      return currentDrilldown.treasury.chart;
    case "governance":
      return currentDrilldown.governance.chart;
    case "distribution":
      return currentDrilldown.distribution.chart;
    default:
      return null;
  }
}

function onClick(event: MouseEvent): void {
  const target = event.target as HTMLElement | null;
  if (!target) return;

  if (target.dataset["retry"] !== undefined) {
    void load();
    return;
  }
  const exportKey = target.dataset["export"];
  if (exportKey) {
    const svg = chartForKey(exportKey);
    if (svg) {
      const link = document.createElement("a");
      link.href = svgDataUrl(svg);
      link.download = `${currentDrilldown?.dao_name ?? "chart"}-${exportKey}.svg`;
      link.click();
    }
    return;
  }
  const sortHeader = target.closest<HTMLElement>("[data-sort]");
  if (sortHeader?.dataset["sort"]) {
    const key = sortHeader.dataset["sort"] as SortKey;
    if (state.sortKey === key) {
      state.sortDirection = state.sortDirection === "desc" ? "asc" : "desc";
    } else {
      state.sortKey = key;
      state.sortDirection = "desc";
    }
    render();
    return;
  }
  const row = target.closest<HTMLElement>("[data-dao]");
  if (row?.dataset["dao"]) {
    window.location.hash = `#dao/${row.dataset["dao"]}`;
  }
}

export function start(): void {
  document.addEventListener("click", onClick);
  window.addEventListener("hashchange", render);
  void load();
}

start();
