import type { GraphDoc, GraphNode } from "../types.js";
import { communityColor, fmtCount, fmtParams } from "../format.js";

const SVG_NS = "http://www.w3.org/2000/svg";

export const GRAPH_WIDTH = 640;
export const GRAPH_HEIGHT = 480;
const PAD = 20;

export function edgeStrokeWidth(weight: number): number {
  // strictly increasing in the cosine similarity carried by the edge
  return 0.4 + 3.0 * weight;
}

export function discRadius(size: number, maxSize: number): number {
  // proportional to the community's member count
  const scale = 70 / Math.max(1, maxSize);
  return size * scale;
}

function toPixels(doc: GraphDoc, x: number, y: number): [number, number] {
  const sx = (GRAPH_WIDTH - 2 * PAD) / doc.frame.width;
  const sy = (GRAPH_HEIGHT - 2 * PAD) / doc.frame.height;
  return [PAD + x * sx, PAD + y * sy];
}

export function nodeTooltipText(node: GraphNode): string {
  return (
    `${node.name}\n` +
    `downloads: ${fmtCount(node.downloads)}\n` +
    `likes: ${fmtCount(node.likes)}\n` +
    `params: ${fmtParams(node.params_millions)}`
  );
}

/** Draw the community graph at the server-computed layout. */
export function renderGraph(container: HTMLElement, doc: GraphDoc): void {
  container.replaceChildren();
  const svg = document.createElementNS(SVG_NS, "svg");
  svg.setAttribute("viewBox", `0 0 ${GRAPH_WIDTH} ${GRAPH_HEIGHT}`);
  svg.setAttribute("class", "graph-canvas");

  const tooltip = document.createElement("div");
  tooltip.className = "tooltip";
  tooltip.hidden = true;

  const maxSize = Math.max(1, ...doc.communities.map((c) => c.size));
  for (const community of doc.communities) {
    const [cx, cy] = toPixels(doc, community.cx, community.cy);
    const disc = document.createElementNS(SVG_NS, "circle");
    disc.setAttribute("class", "community-disc");
    disc.setAttribute("cx", String(cx));
    disc.setAttribute("cy", String(cy));
    disc.setAttribute("r", String(discRadius(community.size, maxSize)));
    disc.setAttribute("fill", communityColor(community.id));
    disc.setAttribute("fill-opacity", "0.15");
    disc.dataset.communityId = String(community.id);
    disc.dataset.size = String(community.size);
    svg.appendChild(disc);
  }

  const byId = new Map(doc.nodes.map((n) => [n.id, n]));
  for (const edge of doc.edges) {
    const a = byId.get(edge.source);
    const b = byId.get(edge.target);
    if (!a || !b) {
      continue;
    }
    const [x1, y1] = toPixels(doc, a.x, a.y);
    const [x2, y2] = toPixels(doc, b.x, b.y);
    const line = document.createElementNS(SVG_NS, "line");
    line.setAttribute("class", "graph-edge");
    line.setAttribute("x1", String(x1));
    line.setAttribute("y1", String(y1));
    line.setAttribute("x2", String(x2));
    line.setAttribute("y2", String(y2));
    line.setAttribute("stroke", "#889");
    line.setAttribute("stroke-opacity", "0.5");
    line.setAttribute("stroke-width", String(edgeStrokeWidth(edge.weight)));
    line.dataset.weight = String(edge.weight);
    svg.appendChild(line);
  }

  for (const node of doc.nodes) {
    const [x, y] = toPixels(doc, node.x, node.y);
    const dot = document.createElementNS(SVG_NS, "circle");
    dot.setAttribute("class", "graph-node");
    dot.setAttribute("cx", String(x));
    dot.setAttribute("cy", String(y));
    dot.setAttribute("r", "4");
    dot.setAttribute("fill", communityColor(node.community));
    dot.dataset.nodeId = String(node.id);
    dot.dataset.name = node.name;
    dot.addEventListener("mouseenter", () => {
      tooltip.textContent = nodeTooltipText(node);
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
