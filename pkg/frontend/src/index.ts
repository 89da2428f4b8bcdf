export {
  IndbenchEnv,
  LifecycleError,
  RemoteError,
  type ActionVector,
  type BoxSpace,
  type EnvConfig,
  type SpawnSettings,
  type StepOutcome,
} from "./env.js";
export { ServiceClient } from "./protocol.js";
