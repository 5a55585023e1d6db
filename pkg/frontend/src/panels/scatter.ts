import type { ScatterDoc } from "../types.js";

const SVG_NS = "http://www.w3.org/2000/svg";

export const SCATTER_WIDTH = 480;
export const SCATTER_HEIGHT = 360;
const PAD = 36;

/** Log-log likes vs downloads scatter; the values arrive already log10-scaled. */
export function renderScatter(container: HTMLElement, doc: ScatterDoc): void {
  container.replaceChildren();
  const svg = document.createElementNS(SVG_NS, "svg");
  svg.setAttribute("viewBox", `0 0 ${SCATTER_WIDTH} ${SCATTER_HEIGHT}`);
  svg.setAttribute("class", "scatter-canvas");

  const tooltip = document.createElement("div");
  tooltip.className = "tooltip";
  tooltip.hidden = true;

  const xs = doc.points.map((p) => p.log_downloads);
  const ys = doc.points.map((p) => p.log_likes);
  const xMin = Math.min(...xs, 0);
  const xMax = Math.max(...xs, 1);
  const yMin = Math.min(...ys, 0);
  const yMax = Math.max(...ys, 1);
  const sx = (v: number) => PAD + ((v - xMin) / (xMax - xMin)) * (SCATTER_WIDTH - 2 * PAD);
  const sy = (v: number) => SCATTER_HEIGHT - PAD - ((v - yMin) / (yMax - yMin)) * (SCATTER_HEIGHT - 2 * PAD);

    const axis = document.createElementNS(SVG_NS, "path");
  axis.setAttribute(
    "d",
    `M ${PAD} ${PAD} L ${PAD} ${SCATTER_HEIGHT - PAD} L ${SCATTER_WIDTH - PAD} ${SCATTER_HEIGHT - PAD}`,
  );
  axis.setAttribute("fill", "none");
  axis.setAttribute("stroke", "#445");
  svg.appendChild(axis);

  const xLabel = document.createElementNS(SVG_NS, "text");
  xLabel.setAttribute("x", String(SCATTER_WIDTH / 2));
  xLabel.setAttribute("y", String(SCATTER_HEIGHT - 8));
  xLabel.setAttribute("text-anchor", "middle");
  xLabel.setAttribute("class", "axis-label");
  xLabel.textContent = "log10 downloads";
  svg.appendChild(xLabel);

  const yLabel = document.createElementNS(SVG_NS, "text");
  yLabel.setAttribute("transform", `translate(12 ${SCATTER_HEIGHT / 2}) rotate(-90)`);
  yLabel.setAttribute("text-anchor", "middle");
  yLabel.setAttribute("class", "axis-label");
  yLabel.textContent = "log10 likes";
  svg.appendChild(yLabel);

  for (const point of doc.points) {
    const dot = document.createElementNS(SVG_NS, "circle");
    dot.setAttribute("class", "scatter-point");
    dot.setAttribute("cx", String(sx(point.log_downloads)));
    dot.setAttribute("cy", String(sy(point.log_likes)));
    dot.setAttribute("r", "3");
    dot.dataset.name = point.name;
    dot.addEventListener("mouseenter", () => {
      tooltip.textContent = point.name;
      tooltip.hidden = false;
    });
    dot.addEventListener("mouseleave", () => {
      tooltip.hidden = true;
    });
    svg.appendChild(dot);
  }

  container.appendChild(svg);
  container.appendChild(tooltip);
}
