import fs from "node:fs";
import os from "node:os";
import path from "node:path";
import { describe, expect, it } from "vitest";

import { ManipkitClient, ManipkitError } from "../src/client.js";
import { BASE_URL, SCENE_DIR } from "./config.js";

const client = new ManipkitClient(BASE_URL);

describe("service basics", () => {
  it("reports health", async () => {
    const h = await client.health();
    expect(h.status).toBe("ok");
  });

  it("session lifecycle", async () => {
    const info = await client.createSession(SCENE_DIR);
    expect(info.objects).toEqual(["obj0"]);
    expect(info.n_frames).toBe(16);
    expect(info.n_prior_timesteps).toBeGreaterThan(0);
    const again = await client.getSession(info.session_id);
    expect(again.session_id).toBe(info.session_id);
    await client.deleteSession(info.session_id);
    await expect(client.getSession(info.session_id)).rejects.toThrowError(ManipkitError);
  });

  it("surfaces the primary error codes", async () => {
    try {
      await client.createSession("/nonexistent/scene");
      expect.unreachable("should have thrown");
    } catch (err) {
      expect(err).toBeInstanceOf(ManipkitError);
      const e = err as ManipkitError;
      expect(e.status).toBe(400);
      expect(e.code).toBe("InputError");
    }
  });

  it("names the missing prior file", async () => {
    const broken = fs.mkdtempSync(path.join(os.tmpdir(), "scene-"));
    try {
      await client.createSession(broken);
      expect.unreachable("should have thrown");
    } catch (err) {
      expect((err as ManipkitError).message).toContain("scene directory");
    }
  });

  it("concurrent sessions stay independent", async () => {
    const dirs: string[] = [];
    for (let k = 0; k < 8; k++) {
      const dir = path.join(os.tmpdir(), `mk-scn-${process.pid}-${k}`);
      await client.synth({
        spec: { seed: 900 + k, mesh_kind: "cube", motion_kind: "static", n_frames: 3 },
        out_dir: dir,
      });
      dirs.push(dir);
    }
    const sessions = await Promise.all(dirs.map((d) => client.createSession(d)));
    const ids = new Set(sessions.map((s) => s.session_id));
    expect(ids.size).toBe(8);
    await Promise.all(sessions.map((s) => client.deleteSession(s.session_id)));
  });
});

describe("stateless operations", () => {
  it("synth -> settle -> evaluate chain", async () => {
    const dir = path.join(os.tmpdir(), `mk-chain-${process.pid}`);
    const synth = await client.synth({
      spec: { seed: 31, mesh_kind: "cube", motion_kind: "rotate", n_frames: 5 },
      out_dir: dir,
    });
    expect(synth.n_frames).toBe(5);

    const settle = await client.settle({ mesh_path: path.join(dir, "mesh.obj"), seed: 7 });
    expect(settle.stable).toBe(true);
    expect(settle.rotational_deviation).toBeLessThan(1e-9);

    const report = await client.evaluate({
      pred_path: path.join(dir, "gt_trajectory.json"),
      gt_path: path.join(dir, "gt_trajectory.json"),
      mesh_path: path.join(dir, "mesh.obj"),
      depth_dir: path.join(dir, "depth"),
      masks_dir: path.join(dir, "masks"),
      camera_path: path.join(dir, "camera.json"),
    });
    expect(report.adds_auc).toBe(1.0);
    expect(report.vsd_auc).toBe(1.0);
    expect(report.failure_rate).toBe(0.0);
    expect(report.success).toBe(true);
  });

  it("rewards csv rows sum", async () => {
    const rows = await client.rewardsCsv(SCENE_DIR, path.join(SCENE_DIR, "states.jsonl"));
    expect(rows.length).toBe(16);
    for (const row of rows) {
      expect(row.r_total).toBeCloseTo(row.r_contact + row.r_obj + row.r_imit, 12);
    }
  });

  it("accumulate clips the accumulated joint sum", async () => {
    const out = await client.accumulate({
      reference: [
        { wrist_pos: [0, 0, 0], wrist_quat: [1, 0, 0, 0], joint_angles: [0] },
        { wrist_pos: [0, 0, 0], wrist_quat: [1, 0, 0, 0], joint_angles: [0] },
      ],
      residuals: [
        { delta_wrist_pos: [0, 0, 0], delta_wrist_rot: [0, 0, 0], delta_joints: [2] },
        { delta_wrist_pos: [0, 0, 0], delta_wrist_rot: [0, 0, 0], delta_joints: [-2] },
      ],
      limits: { lower: [-1], upper: [1] },
      t: 1,
    });
    expect(out.joint_angles).toEqual([0]); // sum-then-clip, not clip-per-step
  });
});
