/** Shared test plumbing: a fetch mock that logs every request it serves. */

import summaryFixture from "./fixtures/summary_response.json";
import partialFixture from "./fixtures/summary_partial_response.json";
import provisionFixture from "./fixtures/provision_733_1.json";
import repealedFixture from "./fixtures/provision_179.json";
import goldenDocket from "./fixtures/golden_docket.json";

export { summaryFixture, partialFixture, provisionFixture, repealedFixture };
export const GOLDEN_DOCKET: string = (goldenDocket as { text: string }).text;

export interface LoggedRequest {
  url: string;
  method: string;
  body: string | null;
}

export type Route = (request: LoggedRequest) => Response | Promise<Response>;

export function jsonResponse(status: number, body: unknown): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "content-type": "application/json" },
  });
}

export function makeFetchMock(route: Route) {
  const log: LoggedRequest[] = [];
  const fetchFn = (async (input: RequestInfo | URL, init?: RequestInit) => {
    const request: LoggedRequest = {
      url: String(input),
      method: init?.method ?? "GET",
      body: typeof init?.body === "string" ? init.body : null,
    };
    log.push(request);
    return route(request);
  }) as typeof fetch;
  return { fetchFn, log };
}

/** Serves the captured service fixtures, mirroring the real endpoints. */
export function fixtureRoute(request: LoggedRequest): Response {
  if (request.url.endsWith("/summarize") && request.method === "POST") {
    return jsonResponse(200, summaryFixture);
  }
  if (request.url.includes("/provision/")) {
    const number = decodeURIComponent(request.url.split("/provision/")[1] ?? "");
    if (number === "733.1") return jsonResponse(200, provisionFixture);
    if (number === "179") return jsonResponse(200, repealedFixture);
    return jsonResponse(404, { error: `provision ${number} not found` });
  }
  return jsonResponse(500, { error: `unexpected request ${request.method} ${request.url}` });
}

export function flushTasks(): Promise<void> {
  return new Promise((resolve) => setTimeout(resolve, 0));
}
