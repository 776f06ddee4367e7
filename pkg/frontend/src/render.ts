/**
 * Pure DOM builders. Every factual string comes verbatim from a service
 * response; this module only adds fixed French labels around them.
 */

import type { PartReport, ProvisionResponse, SummaryResponse } from "./api.js";

const PART_NOTICES: Record<string, string> = {
  extraction_error: "Cette partie n'a pas pu être lue dans le document.",
  generation_error: "Cette partie n'a pas pu être formulée (cas non couvert par les règles).",
};

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

function notice(part: PartReport): HTMLElement {
  const box = el("p", "notice", PART_NOTICES[part.status] ?? "Partie indisponible.");
  if (part.message) {
    box.appendChild(el("span", "notice-detail", ` (${part.message})`));
  }
  return box;
}

function section(title: string, body: HTMLElement[]): HTMLElement {
  const wrapper = el("section", "summary-section");
  wrapper.appendChild(el("h2", undefined, title));
  for (const child of body) wrapper.appendChild(child);
  return wrapper;
}

function paragraphOrNotice(text: string | null, part: PartReport): HTMLElement {
  return text !== null ? el("p", "summary-text", text) : notice(part);
}

export function renderSummary(summary: SummaryResponse): HTMLElement {
  const root = el("div", "summary");
  root.appendChild(section("Accusé", [paragraphOrNotice(summary.accused_paragraph, summary.report.accused)]));
  root.appendChild(
    section("Partie plaignante", [paragraphOrNotice(summary.plaintiff_paragraph, summary.report.plaintiff)]),
  );

  const chargesBody: HTMLElement[] = [];
  if (summary.report.charges_part.status !== "ok") {
    chargesBody.push(notice(summary.report.charges_part));
  } else if (summary.charge_paragraphs.length === 0) {
    chargesBody.push(el("p", "notice", "Aucun chef d'accusation dans ce document."));
  }
  summary.charge_paragraphs.forEach((text, i) => {
    const charge = el("article", "charge");
    charge.appendChild(el("h3", undefined, `Chef ${i + 1}`));
    const part = summary.report.charges[i] ?? { status: "ok", message: null };
    charge.appendChild(paragraphOrNotice(text, part));
    const citation = summary.citations.find((c) => c.charge_index === i + 1);
    if (citation) {
      const button = el("button", "provision-link", `Voir l'article ${citation.provision} du Code criminel`);
      button.type = "button";
      button.dataset.provision = citation.provision;
      charge.appendChild(button);
    }
    chargesBody.push(charge);
  });
  root.appendChild(section("Chefs d'accusation", chargesBody));
  return root;
}

export function renderProvision(provision: ProvisionResponse): HTMLElement {
  const panel = el("div", "provision");
  panel.appendChild(el("h2", undefined, `Article ${provision.number} — ${provision.title}`));
  if (provision.repealed) {
    panel.appendChild(el("p", "notice", "Cette disposition est abrogée."));
  }
  if (provision.text) {
    panel.appendChild(el("p", "provision-text", provision.text));
  }
  const labels = Object.keys(provision.paragraphs);
  if (labels.length > 0) {
    const list = el("dl", "provision-paragraphs");
    for (const label of labels) {
      const node = provision.paragraphs[label];
      if (!node) continue;
      list.appendChild(el("dt", undefined, label));
      list.appendChild(el("dd", undefined, node.text));
      for (const [subLabel, subText] of Object.entries(node.subparagraphs)) {
        list.appendChild(el("dt", "subparagraph", subLabel));
        list.appendChild(el("dd", "subparagraph", subText));
      }
    }
    panel.appendChild(list);
  }
  return panel;
}

export function renderNotice(message: string): HTMLElement {
  return el("p", "notice", message);
}

export function renderProvisionNotFound(number: string): HTMLElement {
  return el("p", "notice", `L'article ${number} est introuvable dans le Code criminel chargé.`);
}
