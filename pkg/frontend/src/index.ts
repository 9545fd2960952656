export { ManipkitClient, ManipkitError } from "./client.js";
export type {
  AccumulateRequest,
  AlignResponse,
  ControlTargetData,
  EvaluateRequest,
  FrameStateData,
  HandStateData,
  JointLimitsData,
  MetricReport,
  ObjectStateData,
  PoseData,
  ResidualActionData,
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
