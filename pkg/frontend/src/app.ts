/**
 * Controller: one in-flight summarize request at a time, inline validation
 * before any network call, provision drill-down from the rendered summary.
 */

import { ApiClient } from "./api.js";
import { renderNotice, renderProvision, renderProvisionNotFound, renderSummary } from "./render.js";

export interface AppElements {
  textarea: HTMLTextAreaElement;
  submitButton: HTMLButtonElement;
  summaryPane: HTMLElement;
  provisionPane: HTMLElement;
}

export class App {
  private inFlight = false;

  constructor(
    private readonly ui: AppElements,
    private readonly api: ApiClient,
  ) {
    ui.submitButton.addEventListener("click", () => {
      void this.submit();
    });
    ui.summaryPane.addEventListener("click", (event) => {
      const target = event.target as HTMLElement | null;
      const number = target?.dataset?.provision;
      if (number) void this.showProvision(number);
    });
  }

  private replace(pane: HTMLElement, node: HTMLElement): void {
    pane.replaceChildren(node);
  }

  async submit(): Promise<void> {
    const text = this.ui.textarea.value;
    if (!text.trim()) {
      this.replace(this.ui.summaryPane, renderNotice("Collez d'abord le texte du plumitif."));
      return;
    }
    if (this.inFlight) {
      return; // duplicate submission while a request is pending
    }
    this.inFlight = true;
    this.ui.submitButton.disabled = true;
    try {
      const result = await this.api.summarize(text);
      if (result.kind === "summary") {
        this.replace(this.ui.summaryPane, renderSummary(result.summary));
      } else {
        this.replace(this.ui.summaryPane, renderNotice(result.message));
      }
      this.ui.provisionPane.replaceChildren();
    } finally {
      this.inFlight = false;
      this.ui.submitButton.disabled = false;
    }
  }

  async showProvision(number: string): Promise<void> {
    const result = await this.api.getProvision(number);
    if (result.kind === "provision") {
      this.replace(this.ui.provisionPane, renderProvision(result.provision));
    } else if (result.kind === "not_found") {
      this.replace(this.ui.provisionPane, renderProvisionNotFound(number));
    } else {
      this.replace(this.ui.provisionPane, renderNotice(result.message));
    }
  }
}

export function mount(root: Document, api?: ApiClient): App {
  const ui: AppElements = {
    textarea: root.querySelector("#docket-input") as HTMLTextAreaElement,
    submitButton: root.querySelector("#submit-button") as HTMLButtonElement,
    summaryPane: root.querySelector("#summary-pane") as HTMLElement,
    provisionPane: root.querySelector("#provision-pane") as HTMLElement,
  };
  return new App(ui, api ?? new ApiClient());
}
