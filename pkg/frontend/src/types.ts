/**
 * Wire types for the manipkit service. Field layouts mirror the server's
 * pydantic models exactly; all numbers are IEEE-754 doubles that round-trip
 * bit-exactly through JSON on both sides.
 */

export interface PoseData {
  quat: [number, number, number, number]; // (w, x, y, z)
  pos: [number, number, number];
}

export interface TrajectoryData {
  dt: number;
  frames: PoseData[];
}

export interface ObjectStateData {
  current: PoseData;
  reference: PoseData;
  lifted?: boolean;
}

export interface KeypointStateData {
  position: [number, number, number];
  normal: [number, number, number];
}

export interface HandStateData {
  side: string;
  wrist_pos: [number, number, number];
  wrist_quat: [number, number, number, number];
  ref_wrist_pos: [number, number, number];
  ref_wrist_quat: [number, number, number, number];
  joints: number[];
  ref_joints: number[];
  keypoints: Record<string, KeypointStateData>;
}

export interface FrameStateData {
  objects: Record<string, ObjectStateData>;
  hands: HandStateData[];
}

export interface SessionInfo {
  session_id: string;
  scene_dir: string;
  objects: string[];
  n_frames: number;
  n_prior_timesteps: number;
}

export interface RewardTerms {
  contact: number;
  object: number;
  imitation: number;
  total: number;
}

export interface RewardBatch {
  contact: number[];
  object: number[];
  imitation: number[];
  total: number[];
}

export interface ControlTargetData {
  wrist_pos: [number, number, number];
  wrist_quat: [number, number, number, number];
  joint_angles: number[];
}

export interface ResidualActionData {
  delta_wrist_pos: [number, number, number];
  delta_wrist_rot: [number, number, number];
  delta_joints: number[];
}

export interface JointLimitsData {
  lower: number[];
  upper: number[];
}

export interface AccumulateRequest {
  reference: ControlTargetData[];
  residuals: ResidualActionData[];
  limits: JointLimitsData;
  t: number;
}

export interface TemporalStability {
  mean: number;
  std: number;
}

export interface MetricReport {
  adds_auc: number | null;
  vsd_auc: number | null;
  failure_rate: number | null;
  temporal_stability: TemporalStability | null;
  success: boolean | null;
  e_r: number | null;
  e_t: number | null;
  mask_iou: number | null;
}

export interface EvaluateRequest {
  pred_path: string;
  gt_path: string;
  mesh_path: string;
  depth_dir?: string | null;
  masks_dir?: string | null;
  camera_path?: string | null;
  validity_path?: string | null;
  metrics?: string[];
  adds_max_tau?: number;
  vsd_delta?: number;
  iou_fail_tau?: number;
  success_rot?: number;
  success_pos?: number;
  jobs?: number;
}

export interface SettleRequest {
  mesh_path: string;
  pose?: PoseData | null;
  pose_path?: string | null;
  seed?: number;
  n_candidates?: number;
  max_angle?: number;
  settle_steps?: number;
  stability_threshold?: number;
}

export interface SettleCandidate {
  initial_pose: PoseData;
  settled_pose: PoseData;
  rotational_deviation: number;
  stable: boolean;
  candidate_index: number;
}

export interface AffineParamsData {
  alpha: number;
  beta: number;
  residual: number;
}

export interface AlignResponse {
  scene_transform: {
    gravity_rotation: PoseData;
    facing_rotation: PoseData;
    workspace_translation: [number, number, number];
  };
  plane_normal: [number, number, number];
  plane_inlier_rms: number;
  affine: Record<string, AffineParamsData[]>;
  hand_scale: number | null;
}

export interface SynthRequest {
  spec_path?: string | null;
  spec?: Record<string, unknown> | null;
  out_dir: string;
}

export interface SynthResponse {
  out_dir: string;
  n_frames: number;
  object_id: string;
}

export interface RewardRow {
  t: number;
  r_contact: number;
  r_obj: number;
  r_imit: number;
  r_total: number;
}
