// Thin client over the engine service.  Every displayed number comes
// from these responses; the UI never computes domain values itself.

import type {
  EditResultData,
  ProfileData,
  PrototypeEntry,
  TableData,
} from "./types.js";

export class ConflictError extends Error {
  constructor(message: string) {
    super(message);
    this.name = "ConflictError";
  }
}

export class DomainError extends Error {
  rule: string;
  constructor(message: string, rule: string) {
    super(message);
    this.name = "DomainError";
    this.rule = rule;
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  revision = 0;

  constructor(
    private readonly base = "",
    private readonly fetchFn: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async getJson<T>(path: string): Promise<T> {
    const response = await this.fetchFn(this.base + path);
    if (!response.ok) throw new Error(`${path}: HTTP ${response.status}`);
    return (await response.json()) as T;
  }

  async getProfile(): Promise<ProfileData> {
    const data = await this.getJson<{ revision: number; profile: ProfileData }>(
      "/profile");
    this.revision = data.revision;
    return data.profile;
  }

  async getTable(): Promise<TableData> {
    const data = await this.getJson<{ revision: number; table: TableData }>(
      "/table");
    return data.table;
  }

  async getRenderSvg(): Promise<string> {
    const response = await this.fetchFn(this.base + "/render.svg");
    if (!response.ok) throw new Error(`render: HTTP ${response.status}`);
    return response.text();
  }

  async getPrototypes(): Promise<PrototypeEntry[]> {
    return this.getJson<PrototypeEntry[]>("/prototypes");
  }

  async postOp(op: string, args: Record<string, unknown>): Promise<EditResultData> {
    const response = await this.fetchFn(this.base + "/profile/ops", {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ op, args, revision: this.revision }),
    });
    if (response.status === 409) {
      throw new ConflictError("profile changed elsewhere; reload");
    }
    const payload = await response.json();
    if (!response.ok) {
      const detail = payload?.detail ?? {};
      throw new DomainError(detail.error ?? `HTTP ${response.status}`,
                            detail.rule ?? "error");
    }
    this.revision = payload.revision;
    return payload.result as EditResultData;
  }

  async loadPrototype(name: string): Promise<void> {
    const response = await this.fetchFn(this.base + "/profile/load", {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ name }),
    });
    if (!response.ok) throw new Error(`load: HTTP ${response.status}`);
    this.revision = (await response.json()).revision;
  }

  async saveAs(name: string): Promise<{ name: string; size: number }> {
    const response = await this.fetchFn(this.base + "/profile/save", {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ name }),
    });
    if (!response.ok) throw new Error(`save: HTTP ${response.status}`);
    return response.json();
  }

  async newProfile(sample: boolean): Promise<void> {
    const response = await this.fetchFn(
      this.base + `/profile/new?sample=${sample}`, { method: "POST" });
    if (!response.ok) throw new Error(`new: HTTP ${response.status}`);
    this.revision = (await response.json()).revision;
  }
}
