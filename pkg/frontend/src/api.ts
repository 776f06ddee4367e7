/**
 * Typed client for the summarization service.
 *
 * The pasted docket leaves the page through exactly one call (POST
 * /summarize); provision drill-downs fetch GET /provision/{number}. No
 * other network traffic, no storage of any kind.
 */

export type PartStatus = "ok" | "extraction_error" | "generation_error";

export interface PartReport {
  status: PartStatus;
  message: string | null;
}

export interface SummaryReport {
  accused: PartReport;
  plaintiff: PartReport;
  charges_part: PartReport;
  charges: PartReport[];
}

export interface CitationRef {
  charge_index: number;
  provision: string;
  paragraph: string | null;
  subparagraph: string | null;
}

export interface SummaryResponse {
  accused_paragraph: string | null;
  plaintiff_paragraph: string | null;
  charge_paragraphs: (string | null)[];
  citations: CitationRef[];
  report: SummaryReport;
}

export interface ParagraphNode {
  text: string;
  subparagraphs: Record<string, string>;
}

export interface ProvisionResponse {
  number: string;
  title: string;
  text: string;
  repealed: boolean;
  paragraphs: Record<string, ParagraphNode>;
}

export type SummarizeResult =
  | { kind: "summary"; summary: SummaryResponse }
  | { kind: "rejected"; status: number; message: string };

export type ProvisionResult =
  | { kind: "provision"; provision: ProvisionResponse }
  | { kind: "not_found" }
  | { kind: "error"; message: string };

export class ApiClient {
  constructor(
    private readonly baseUrl: string = "",
    private readonly fetchFn: typeof fetch = (...args) => fetch(...args),
  ) {}

  /** POST /summarize. A 422 still carries the report, so it renders as a summary. */
  async summarize(text: string): Promise<SummarizeResult> {
    let response: Response;
    try {
      response = await this.fetchFn(`${this.baseUrl}/summarize`, {
        method: "POST",
        headers: { "content-type": "application/json" },
        body: JSON.stringify({ text }),
      });
    } catch {
      return { kind: "rejected", status: 0, message: "Service injoignable. Vérifiez la connexion." };
    }
    if (response.status === 200 || response.status === 422) {
      return { kind: "summary", summary: (await response.json()) as SummaryResponse };
    }
    let message = `Le service a refusé la demande (code ${response.status}).`;
    if (response.status === 413) {
      message = "Le document dépasse la taille maximale acceptée.";
    }
    return { kind: "rejected", status: response.status, message };
  }

  async getProvision(number: string): Promise<ProvisionResult> {
    let response: Response;
    try {
      response = await this.fetchFn(`${this.baseUrl}/provision/${encodeURIComponent(number)}`);
    } catch {
      return { kind: "error", message: "Service injoignable. Vérifiez la connexion." };
    }
    if (response.status === 404) {
      return { kind: "not_found" };
    }
    if (!response.ok) {
      return { kind: "error", message: `Erreur du service (code ${response.status}).` };
    }
    return { kind: "provision", provision: (await response.json()) as ProvisionResponse };
  }
}
