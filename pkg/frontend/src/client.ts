/**
 * HTTP client for the manipkit service.
 *
 * Sessions wrap immutable loaded scenes on the server; every evaluation call
 * is read-only, so one client (or many) may fan out concurrent requests
 * against the same session. Values returned by the server are the primary
 * implementation's own doubles, serialized with shortest-round-trip JSON, so
 * they compare bit-identical to in-process results.
 */

import type {
  AccumulateRequest,
  AlignResponse,
  ControlTargetData,
  EvaluateRequest,
  FrameStateData,
  MetricReport,
  RewardBatch,
  RewardRow,
  RewardTerms,
  SessionInfo,
  SettleCandidate,
  SettleRequest,
  SynthRequest,
  SynthResponse,
  TrajectoryData,
} from "./types.js";

/** Error raised for contract violations; `code` carries the server-side
 * error class name (DegenerateGeometry, UnknownObject, ...). */
export class ManipkitError extends Error {
  constructor(
    readonly code: string,
    detail: string,
    readonly status: number,
  ) {
    super(`${code}: ${detail}`);
    this.name = "ManipkitError";
  }
}

export class ManipkitClient {
  constructor(readonly baseUrl: string) {
    this.baseUrl = baseUrl.replace(/\/+$/, "");
  }

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const resp = await fetch(this.baseUrl + path, {
      method,
      headers: body === undefined ? undefined : { "content-type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    if (!resp.ok) {
      let code = `HTTP${resp.status}`;
      let detail = resp.statusText;
      try {
        const payload = (await resp.json()) as { error?: string; detail?: string };
        if (payload.error) code = payload.error;
        if (payload.detail) detail = payload.detail;
      } catch {
        // non-JSON error body; keep the status line
      }
      throw new ManipkitError(code, detail, resp.status);
    }
    return (await resp.json()) as T;
  }

  health(): Promise<{ status: string; version: string }> {
    return this.request("GET", "/health");
  }

  // -- sessions ---------------------------------------------------------------

  createSession(sceneDir: string): Promise<SessionInfo> {
    return this.request("POST", "/sessions", { scene_dir: sceneDir });
  }

  getSession(sessionId: string): Promise<SessionInfo> {
    return this.request("GET", `/sessions/${sessionId}`);
  }

  deleteSession(sessionId: string): Promise<{ deleted: string }> {
    return this.request("DELETE", `/sessions/${sessionId}`);
  }

  rewardTerms(sessionId: string, t: number, state: FrameStateData): Promise<RewardTerms> {
    return this.request("POST", `/sessions/${sessionId}/rewards/terms`, { t, state });
  }

  async totalReward(sessionId: string, t: number, state: FrameStateData): Promise<number> {
    const r = await this.request<{ value: number }>(
      "POST",
      `/sessions/${sessionId}/rewards/total`,
      { t, state },
    );
    return r.value;
  }

  async contactReward(sessionId: string, t: number, state: FrameStateData): Promise<number> {
    const r = await this.request<{ value: number }>(
      "POST",
      `/sessions/${sessionId}/rewards/contact`,
      { t, state },
    );
    return r.value;
  }

  async objectReward(sessionId: string, t: number, state: FrameStateData): Promise<number> {
    const r = await this.request<{ value: number }>(
      "POST",
      `/sessions/${sessionId}/rewards/object`,
      { t, state },
    );
    return r.value;
  }

  async imitationReward(sessionId: string, t: number, state: FrameStateData): Promise<number> {
    const r = await this.request<{ value: number }>(
      "POST",
      `/sessions/${sessionId}/rewards/imitation`,
      { t, state },
    );
    return r.value;
  }

  rewardBatch(
    sessionId: string,
    items: { t: number; state: FrameStateData }[],
  ): Promise<RewardBatch> {
    return this.request("POST", `/sessions/${sessionId}/rewards/batch`, { items });
  }

  sessionMetrics(sessionId: string, pred: TrajectoryData, jobs = 1): Promise<MetricReport> {
    return this.request("POST", `/sessions/${sessionId}/metrics`, { pred, jobs });
  }

  // -- stateless operations -----------------------------------------------------

  accumulate(req: AccumulateRequest): Promise<ControlTargetData> {
    return this.request("POST", "/accumulate", req);
  }

  evaluate(req: EvaluateRequest): Promise<MetricReport> {
    return this.request("POST", "/evaluate", req);
  }

  settle(req: SettleRequest): Promise<SettleCandidate> {
    return this.request("POST", "/settle", req);
  }

  align(scenePath: string, chunksPath?: string): Promise<AlignResponse> {
    return this.request("POST", "/align", { scene_path: scenePath, chunks_path: chunksPath ?? null });
  }

  synth(req: SynthRequest): Promise<SynthResponse> {
    return this.request("POST", "/synth", req);
  }

  async rewardsCsv(sceneDir: string, statesPath: string, weightsPath?: string): Promise<RewardRow[]> {
    const r = await this.request<{ rows: RewardRow[] }>("POST", "/rewards-csv", {
      scene_dir: sceneDir,
      states_path: statesPath,
      weights_path: weightsPath ?? null,
    });
    return r.rows;
  }
}
