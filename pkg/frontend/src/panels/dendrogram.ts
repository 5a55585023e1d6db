import type { TreeNode } from "../types.js";

const SVG_NS = "http://www.w3.org/2000/svg";

export const DENDRO_SIZE = 640;
const LABEL_GAP = 6;

export interface RadialNode {
  angle: number; // radians
  radius: number;
  height: number;
  name?: string;
  x: number;
  y: number;
}

export interface RadialLink {
  /** arc at the parent radius from the parent angle to the child angle */
  parentRadius: number;
  parentAngle: number;
  childAngle: number;
  /** radial segment from the arc end down to the child */
  childRadius: number;
}

export interface RadialLayout {
  nodes: RadialNode[];
  leaves: RadialNode[];
  links: RadialLink[];
  maxRadius: number;
}

function polar(angle: number, radius: number): [number, number] {
  return [radius * Math.cos(angle), radius * Math.sin(angle)];
}

/**
 * Radial dendrogram geometry: leaves sit evenly spaced on the rim, inner
 * nodes at the mean of their children's angles; the radial coordinate
 * shrinks with merge height, so the root (largest height) is innermost
 * and radial extent is monotone in height.
 */
export function radialLayout(tree: TreeNode, maxRadius: number): RadialLayout {
  const leaves: RadialNode[] = [];
  const nodes: RadialNode[] = [];
  const links: RadialLink[] = [];

  let leafCount = 0;
  const countLeaves = (node: TreeNode): number => {
    if (node.children.length === 0) {
      return 1;
    }
    return node.children.map(countLeaves).reduce((a, b) => a + b, 0);
  };
  leafCount = countLeaves(tree);
  const rootHeight = tree.height > 0 ? tree.height : 1.0;
  const radiusOf = (height: number) => maxRadius * (1 - height / rootHeight);

  let nextLeaf = 0;
  const place = (node: TreeNode): RadialNode => {
    let angle: number;
    if (node.children.length === 0) {
      angle = (2 * Math.PI * nextLeaf) / leafCount;
      nextLeaf += 1;
    } else {
      const childPlaced = node.children.map(place);
      angle = childPlaced.reduce((a, c) => a + c.angle, 0) / childPlaced.length;
      for (const child of childPlaced) {
        links.push({
          parentRadius: radiusOf(node.height),
          parentAngle: angle,
          childAngle: child.angle,
          childRadius: child.radius,
        });
      }
    }
    const radius = radiusOf(node.height);
    const [x, y] = polar(angle, radius);
    const placed: RadialNode = { angle, radius, height: node.height, name: node.name, x, y };
    nodes.push(placed);
    if (node.children.length === 0) {
      leaves.push(placed);
    }
    return placed;
  };
  place(tree);
  return { nodes, leaves, links, maxRadius };
}

function arcPath(link: RadialLink): string {
  const [sx, sy] = polar(link.parentAngle, link.parentRadius);
  const [mx, my] = polar(link.childAngle, link.parentRadius);
  const [ex, ey] = polar(link.childAngle, link.childRadius);
  const sweep = link.childAngle > link.parentAngle ? 1 : 0;
  return (
    `M ${sx.toFixed(2)} ${sy.toFixed(2)} ` +
    `A ${link.parentRadius.toFixed(2)} ${link.parentRadius.toFixed(2)} 0 0 ${sweep} ${mx.toFixed(2)} ${my.toFixed(2)} ` +
    `L ${ex.toFixed(2)} ${ey.toFixed(2)}`
  );
}

/** Draw the radial tree with wheel zoom and drag pan. */
export function renderDendrogram(container: HTMLElement, tree: TreeNode): void {
  container.replaceChildren();
  const svg = document.createElementNS(SVG_NS, "svg");
  const half = DENDRO_SIZE / 2;
  svg.setAttribute("viewBox", `${-half} ${-half} ${DENDRO_SIZE} ${DENDRO_SIZE}`);
  svg.setAttribute("class", "dendro-canvas");
  const pane = document.createElementNS(SVG_NS, "g");
  pane.setAttribute("class", "dendro-pane");
  svg.appendChild(pane);

  const layout = radialLayout(tree, half - 90);
  for (const link of layout.links) {
    const path = document.createElementNS(SVG_NS, "path");
    path.setAttribute("class", "dendro-link");
    path.setAttribute("d", arcPath(link));
    path.setAttribute("fill", "none");
    path.setAttribute("stroke", "#667");
    path.setAttribute("stroke-width", "1");
    pane.appendChild(path);
  }
  for (const leaf of layout.leaves) {
    const dot = document.createElementNS(SVG_NS, "circle");
    dot.setAttribute("class", "dendro-leaf");
    dot.setAttribute("cx", String(leaf.x));
    dot.setAttribute("cy", String(leaf.y));
    dot.setAttribute("r", "2");
    pane.appendChild(dot);

    const label = document.createElementNS(SVG_NS, "text");
    label.setAttribute("class", "dendro-label");
    const flip = leaf.angle > Math.PI / 2 && leaf.angle < (3 * Math.PI) / 2;
    const deg = (leaf.angle * 180) / Math.PI;
    label.setAttribute(
      "transform",
      `rotate(${deg.toFixed(2)}) translate(${(leaf.radius + LABEL_GAP).toFixed(2)} 0)` +
        (flip ? " rotate(180)" : ""),
    );
    label.setAttribute("text-anchor", flip ? "end" : "start");
    label.setAttribute("dominant-baseline", "middle");
    label.textContent = leaf.name ?? "";
    pane.appendChild(label);
  }

  // wheel zoom and drag pan on the group transform
  let scale = 1;
  let tx = 0;
  let ty = 0;
  const apply = () => {
    pane.setAttribute("transform", `translate(${tx} ${ty}) scale(${scale})`);
  };
  apply();
  svg.addEventListener("wheel", (event) => {
    event.preventDefault();
    scale *= event.deltaY < 0 ? 1.15 : 1 / 1.15;
    scale = Math.min(40, Math.max(0.2, scale));
    apply();
  });
  let dragging: [number, number] | null = null;
  svg.addEventListener("pointerdown", (event) => {
    dragging = [event.clientX - tx, event.clientY - ty];
  });
  svg.addEventListener("pointermove", (event) => {
    if (dragging) {
      tx = event.clientX - dragging[0];
      ty = event.clientY - dragging[1];
      apply();
    }
  });
  svg.addEventListener("pointerup", () => {
    dragging = null;
  });

  container.appendChild(svg);
}
