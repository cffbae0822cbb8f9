/**
 * Typed client for the ontoseer HTTP service.
 *
 * Every method maps to exactly one endpoint and returns the response
 * body untouched, so anything the workbench displays is a field the
 * service actually sent.
 */

export interface RecommendationRow {
  item: string;
  source: string;
  score: number;
  rationale: string;
}

export interface AxiomRow extends RecommendationRow {
  working_entity: string;
  matched_entity: string;
  source_axiom: string;
}

export interface NameRow {
  item: string;
  source: string;
  name: string;
  kind: string;
  issues: string[];
  suggestions: string[];
}

export interface RecommendPayload<T> {
  items: T[];
  kind: string;
  k: number;
}

export interface PendingClass {
  class: string;
  questions: string[];
}

export interface Verdict {
  subclass: string;
  superclass: string;
  rule: string;
  status: string;
  explanation: string;
}

export interface SessionMeta {
  description?: string;
  domain?: string;
  cqs?: string[];
}

export interface AnswerEntry {
  class: string;
  q1?: string | null;
  q2?: string | null;
  q3?: string | null;
}

export type UploadResult =
  | { ok: true; session: string }
  | { ok: false; error: string; line?: number; column?: number };

export class ApiError extends Error {
  constructor(public status: number, message: string) {
    super(message);
    this.name = 'ApiError';
  }
}

async function errorDetail(res: { json(): Promise<unknown> }, fallback: string): Promise<string> {
  try {
    const body = (await res.json()) as { detail?: unknown; error?: unknown };
    if (typeof body.detail === 'string') return body.detail;
    if (typeof body.error === 'string') return body.error;
  } catch {
    // non-JSON error body, keep the fallback
  }
  return fallback;
}

export class ApiClient {
  constructor(private readonly baseUrl: string = '') {}

  /** POST the raw Turtle text; parse failures come back as a value, not a throw. */
  async uploadOntology(text: string): Promise<UploadResult> {
    const res = await fetch(this.baseUrl + '/ontology', {
      method: 'POST',
      headers: { 'Content-Type': 'text/turtle' },
      body: text,
    });
    const body = (await res.json()) as Record<string, unknown>;
    if (res.status === 201 && typeof body.session === 'string') {
      return { ok: true, session: body.session };
    }
    const error =
      typeof body.error === 'string' ? body.error :
      typeof body.detail === 'string' ? body.detail : 'upload failed';
    return {
      ok: false,
      error,
      line: typeof body.line === 'number' ? body.line : undefined,
      column: typeof body.column === 'number' ? body.column : undefined,
    };
  }

  recommendTerms(session: string, query: string, k = 10): Promise<RecommendPayload<RecommendationRow>> {
    const params = new URLSearchParams({ query, k: String(k) });
    return this.getJson(`/sessions/${session}/recommend/terms?${params}`);
  }

  recommendAxioms(session: string): Promise<RecommendPayload<AxiomRow>> {
    return this.getJson(`/sessions/${session}/recommend/axioms`);
  }

  recommendOdps(session: string): Promise<RecommendPayload<RecommendationRow>> {
    return this.getJson(`/sessions/${session}/recommend/odps`);
  }

  checkNames(session: string): Promise<RecommendPayload<NameRow>> {
    return this.getJson(`/sessions/${session}/recommend/names`);
  }

  async updateMeta(session: string, meta: SessionMeta): Promise<void> {
    const res = await fetch(`${this.baseUrl}/sessions/${session}/meta`, {
      method: 'POST',
      headers: { 'Content-Type': 'application/json' },
      body: JSON.stringify(meta),
    });
    if (!res.ok) {
      throw new ApiError(res.status, await errorDetail(res, 'meta update failed'));
    }
  }

  hierarchyQuestions(session: string): Promise<{ pending: PendingClass[] }> {
    return this.getJson(`/sessions/${session}/hierarchy/questions`);
  }

  async postAnswers(session: string, answers: AnswerEntry[]): Promise<{ verdicts: Verdict[] }> {
    const res = await fetch(`${this.baseUrl}/sessions/${session}/hierarchy/answers`, {
      method: 'POST',
      headers: { 'Content-Type': 'application/json' },
      body: JSON.stringify({ answers }),
    });
    if (!res.ok) {
      throw new ApiError(res.status, await errorDetail(res, 'posting answers failed'));
    }
    return (await res.json()) as { verdicts: Verdict[] };
  }

  private async getJson<T>(path: string): Promise<T> {
    const res = await fetch(this.baseUrl + path);
    if (!res.ok) {
      throw new ApiError(res.status, await errorDetail(res, `request failed (${res.status})`));
    }
    return (await res.json()) as T;
  }
}
