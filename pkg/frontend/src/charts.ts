// Framework-free SVG chart builders. Each returns a complete SVG
// document string (or null when there is nothing to draw, which
// disables the export control for that chart).

export interface PieSlice {
  label: string;
  value: number;
  colour: string;
}

export interface Bar {
  label: string;
  value: number;
  colour: string;
}

const PIE_SIZE = 240;
const BAR_WIDTH = 320;
const BAR_HEIGHT = 200;
const BAR_PAD = 28;

export function escapeXml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;")
    .replace(/'/g, "&apos;");
}

const fmt = (n: number): string => String(Math.round(n * 100) / 100);

function svgOpen(width: number, height: number, title: string): string {
  return (
    `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${width} ${height}" ` +
    `role="img"><title>${escapeXml(title)}</title>`
  );
}

export function pieChart(slices: PieSlice[], title: string): string | null {
  const drawn = slices.filter((slice) => slice.value > 0);
  const total = drawn.reduce((sum, slice) => sum + slice.value, 0);
  if (total <= 0) return null;

  const cx = PIE_SIZE / 2;
  const cy = PIE_SIZE / 2;
  const r = PIE_SIZE / 2 - 8;
  const parts: string[] = [svgOpen(PIE_SIZE, PIE_SIZE, title)];

  if (drawn.length === 1) {
    // a lone slice is the whole pie; arcs degenerate, draw a circle
    const slice = drawn[0]!;
    parts.push(
      `<circle data-slice="${escapeXml(slice.label)}" cx="${cx}" cy="${cy}" r="${r}" ` +
        `fill="${slice.colour}"/>`,
    );
  } else {
    let angle = -Math.PI / 2;
    for (const slice of drawn) {
      const sweep = (slice.value / total) * 2 * Math.PI;
      const x1 = cx + r * Math.cos(angle);
      const y1 = cy + r * Math.sin(angle);
      angle += sweep;
      const x2 = cx + r * Math.cos(angle);
      const y2 = cy + r * Math.sin(angle);
      const largeArc = sweep > Math.PI ? 1 : 0;
      parts.push(
        `<path data-slice="${escapeXml(slice.label)}" d="M ${cx} ${cy} L ${fmt(x1)} ${fmt(y1)} ` +
          `A ${r} ${r} 0 ${largeArc} 1 ${fmt(x2)} ${fmt(y2)} Z" fill="${slice.colour}"/>`,
      );
    }
  }
  parts.push("</svg>");
  return parts.join("");
}

export function barChart(bars: Bar[], title: string): string | null {
  const max = Math.max(0, ...bars.map((bar) => bar.value));
  if (!bars.length || max <= 0) return null;

  const innerHeight = BAR_HEIGHT - 2 * BAR_PAD;
  const slot = BAR_WIDTH / bars.length;
  const barWidth = slot * 0.6;
  const parts: string[] = [svgOpen(BAR_WIDTH, BAR_HEIGHT, title)];
  bars.forEach((bar, i) => {
    const h = (bar.value / max) * innerHeight;
    const x = i * slot + (slot - barWidth) / 2;
    const y = BAR_HEIGHT - BAR_PAD - h;
    parts.push(
      `<rect data-bar="${escapeXml(bar.label)}" x="${fmt(x)}" y="${fmt(y)}" ` +
        `width="${fmt(barWidth)}" height="${fmt(h)}" fill="${bar.colour}"/>`,
    );
    parts.push(
      `<text x="${fmt(x + barWidth / 2)}" y="${BAR_HEIGHT - BAR_PAD / 3}" ` +
        `text-anchor="middle" font-size="12">${escapeXml(bar.label)}</text>`,
    );
  });
  parts.push("</svg>");
  return parts.join("");
}

export function exportEnabled(svg: string | null): boolean {
  return svg !== null && svg.includes("<svg");
}

export function svgDataUrl(svg: string): string {
  return `data:image/svg+xml;charset=utf-8,${encodeURIComponent(svg)}`;
}
