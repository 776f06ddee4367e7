import { describe, expect, it } from "vitest";

import type { SummaryResponse } from "../src/api.js";
import { renderProvision, renderSummary } from "../src/render.js";
import { partialFixture, provisionFixture, repealedFixture, summaryFixture } from "./helpers.js";

describe("renderSummary", () => {
  it("renders one section per part with the response text verbatim", () => {
    const root = renderSummary(summaryFixture as SummaryResponse);
    const sections = root.querySelectorAll("section.summary-section");
    expect(sections).toHaveLength(3);
    const texts = root.querySelectorAll(".summary-text");
    expect(texts[0]?.textContent).toBe(summaryFixture.accused_paragraph);
    expect(texts[1]?.textContent).toBe(summaryFixture.plaintiff_paragraph);
    expect(texts[2]?.textContent).toBe(summaryFixture.charge_paragraphs[0]);
  });

  it("renders a provision link per cited charge", () => {
    const root = renderSummary(summaryFixture as SummaryResponse);
    const buttons = root.querySelectorAll("button.provision-link");
    expect(buttons).toHaveLength(summaryFixture.citations.length);
    expect((buttons[0] as HTMLButtonElement).dataset.provision).toBe("733.1");
  });

  it("renders an explanatory notice for a failed part, not blank space", () => {
    const root = renderSummary(partialFixture as SummaryResponse);
    const sections = root.querySelectorAll("section.summary-section");
    const plaintiffSection = sections[1]!;
    expect(plaintiffSection.querySelector(".notice")?.textContent).toContain("n'a pas pu être lue");
  });

  it("says so when there are no charges", () => {
    const root = renderSummary(partialFixture as SummaryResponse);
    expect(root.textContent).toContain("Aucun chef d'accusation");
  });
});

describe("renderProvision", () => {
  it("shows number, title, text and nesting", () => {
    const panel = renderProvision(provisionFixture);
    expect(panel.querySelector("h2")?.textContent).toBe(
      `Article ${provisionFixture.number} — ${provisionFixture.title}`,
    );
    expect(panel.querySelector(".provision-text")?.textContent).toBe(provisionFixture.text);
  });

  it("marks repealed provisions", () => {
    const panel = renderProvision(repealedFixture);
    expect(panel.textContent).toContain("abrogée");
  });
});
