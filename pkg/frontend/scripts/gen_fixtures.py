"""Generate parity fixtures for the client test suite.

Inputs are built from a seeded deterministic stream; expected outputs are
computed by the primary package in-process (the same code the service
dispatches to). The client tests replay the inputs over HTTP and require
bit-identical numbers back.
"""

from __future__ import annotations

import json
import os
import sys

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
FIXTURES = os.path.join(ROOT, "test", "fixtures")

N_REWARD_CASES = 25_000  # x4 bound reward functions = 1e5 parity checks
N_ACCUMULATE_CASES = 5_000

CONTACT_KEYPOINTS = ["R_thumb_tip", "R_index_tip", "R_middle_tip"]


def gen_rewards(session, rng, n_frames: int) -> None:
    from manipkit.rewards import FrameState
    from manipkit.service import handlers, models

    path = os.path.join(FIXTURES, "rewards.jsonl")
    with open(path, "w", encoding="ascii") as fh:
        for _ in range(N_REWARD_CASES):
            t = int(rng.next_u64() % n_frames)
            quat = [rng.normal() for _ in range(4)]
            ref_quat = [rng.normal() for _ in range(4)]
            state = {
                "objects": {
                    "obj0": {
                        "current": {
                            "quat": quat,
                            "pos": [rng.uniform(-0.2, 0.2) for _ in range(3)],
                        },
                        "reference": {
                            "quat": ref_quat,
                            "pos": [rng.uniform(-0.2, 0.2) for _ in range(3)],
                        },
                        "lifted": bool(rng.next_u64() & 1),
                    }
                },
                "hands": [
                    {
                        "side": "right",
                        "wrist_pos": [rng.uniform(-0.5, 0.5) for _ in range(3)],
                        "wrist_quat": [rng.normal() for _ in range(4)],
                        "ref_wrist_pos": [rng.uniform(-0.5, 0.5) for _ in range(3)],
                        "ref_wrist_quat": [rng.normal() for _ in range(4)],
                        "joints": [rng.uniform(-1, 1) for _ in range(3)],
                        "ref_joints": [rng.uniform(-1, 1) for _ in range(3)],
                        "keypoints": {
                            kp: {
                                "position": [rng.uniform(-0.3, 0.3) for _ in range(3)],
                                "normal": [rng.normal() for _ in range(3)],
                            }
                            for kp in CONTACT_KEYPOINTS
                        },
                    }
                ],
            }
            # the request model normalizes nothing: what goes on the wire is
            # exactly what the primary evaluates
            req = models.RewardRequest(t=t, state=models.FrameStateModel(**state))
            terms = handlers.reward_terms(session, req)
            FrameState.from_dict(state)  # sanity: stays parseable
            fh.write(
                json.dumps(
                    {
                        "t": t,
                        "state": state,
                        "expected": {
                            "contact": terms.contact,
                            "object": terms.object,
                            "imitation": terms.imitation,
                            "total": terms.total,
                        },
                    },
                    sort_keys=True,
                )
                + "\n"
            )


def gen_accumulate(rng) -> None:
    from manipkit.service import handlers, models

    path = os.path.join(FIXTURES, "accumulate.jsonl")
    n_joints = 3
    with open(path, "w", encoding="ascii") as fh:
        for _ in range(N_ACCUMULATE_CASES):
            t = int(rng.next_u64() % 8)
            request = {
                "reference": [
                    {
                        "wrist_pos": [rng.uniform(-0.5, 0.5) for _ in range(3)],
                        "wrist_quat": [rng.normal() for _ in range(4)],
                        "joint_angles": [rng.uniform(-0.8, 0.8) for _ in range(n_joints)],
                    }
                    for _ in range(t + 1)
                ],
                "residuals": [
                    {
                        "delta_wrist_pos": [rng.uniform(-0.05, 0.05) for _ in range(3)],
                        "delta_wrist_rot": [rng.uniform(-0.3, 0.3) for _ in range(3)],
                        "delta_joints": [rng.uniform(-0.3, 0.3) for _ in range(n_joints)],
                    }
                    for _ in range(t + 1)
                ],
                "limits": {"lower": [-1.0] * n_joints, "upper": [1.0] * n_joints},
                "t": t,
            }
            target = handlers.accumulate_handler(models.AccumulateRequest(**request))
            fh.write(
                json.dumps({"request": request, "expected": target.model_dump()}, sort_keys=True)
                + "\n"
            )


def gen_metrics(session, scene_dir: str, rng) -> None:
    from manipkit.service import handlers, models

    gt = json.load(open(os.path.join(scene_dir, "gt_trajectory.json")))
    cases = []
    perturbed = {
        "dt": gt["dt"],
        "frames": [
            {
                "quat": f["quat"],
                "pos": [p + rng.uniform(-0.01, 0.01) for p in f["pos"]],
            }
            for f in gt["frames"]
        ],
    }
    offset = {
        "dt": gt["dt"],
        "frames": [
            {"quat": f["quat"], "pos": [f["pos"][0] + 0.02, f["pos"][1], f["pos"][2]]}
            for f in gt["frames"]
        ],
    }
    for pred in (gt, perturbed, offset):
        report = handlers.session_metrics(
            session, models.SessionMetricsRequest(pred=models.TrajectoryModel(**pred))
        )
        cases.append({"pred": pred, "expected": report.model_dump()})
    with open(os.path.join(FIXTURES, "metrics.json"), "w", encoding="ascii") as fh:
        json.dump(cases, fh, sort_keys=True)


def main() -> int:
    os.makedirs(FIXTURES, exist_ok=True)
    from manipkit.prng import SplitMix64
    from manipkit.service.sessions import open_session
    from manipkit.synth import ScenarioSpec, generate

    scene_dir = os.path.join(FIXTURES, "scene")
    if not os.path.exists(os.path.join(scene_dir, "prior.json")):
        generate(
            ScenarioSpec(seed=4242, mesh_kind="cube", motion_kind="grasp", n_frames=16)
        ).save(scene_dir)
    session = open_session(scene_dir)
    rng = SplitMix64(20240811)
    gen_rewards(session, rng, n_frames=16)
    gen_accumulate(rng)
    gen_metrics(session, scene_dir, rng)
    meta = {
        "n_reward_cases": N_REWARD_CASES,
        "n_accumulate_cases": N_ACCUMULATE_CASES,
        "scene_dir": scene_dir,
    }
    with open(os.path.join(FIXTURES, "meta.json"), "w", encoding="ascii") as fh:
        json.dump(meta, fh, sort_keys=True)
    print(f"fixtures written to {FIXTURES}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
