/**
 * Gym-style environment bound to the simulator core.
 *
 * Observations cross the boundary as flat 6-vectors in the documented order
 * (setpoint, velocity, gain, shift, consumption, fatigue); the latent state
 * is available only through the explicit `latentState()` debug call, keeping
 * the partial-observability contract intact by default.
 */

import { RemoteError, ServiceClient, type SpawnSettings } from "./protocol.js";

export interface EnvConfig {
  setpoint_mode?: "constant" | "variable";
  setpoint?: number;
  initial_velocity?: number;
  initial_gain?: number;
  initial_shift?: number;
  seed?: number;
  action_mode?: "strict" | "lenient";
  reward_convention?: "cost_negative" | "cost_positive";
}

export interface BoxSpace {
  shape: number[];
  /** null means unbounded on that side */
  low: (number | null)[];
  high: (number | null)[];
  names: string[];
}

export type ActionVector = readonly [number, number, number];

export interface StepOutcome {
  observation: number[];
  reward: number;
  /** always false: the benchmark is non-episodic */
  terminated: boolean;
  truncated: boolean;
  info: Record<string, unknown>;
}

interface MakeResult {
  protocol: string;
  benchmark_version: string;
  action_space: BoxSpace;
  observation_space: BoxSpace;
  observation: number[];
}

export class LifecycleError extends Error {
  constructor(message: string) {
    super(message);
    this.name = "LifecycleError";
  }
}

export class IndbenchEnv {
  readonly actionSpace: BoxSpace;
  readonly observationSpace: BoxSpace;
  readonly coreVersion: string;

  private readonly client: ServiceClient;
  private closed = false;

  private constructor(client: ServiceClient, made: MakeResult) {
    this.client = client;
    this.actionSpace = made.action_space;
    this.observationSpace = made.observation_space;
    this.coreVersion = made.benchmark_version;
  }

  /** Spawn a core process and construct its environment. */
  static async make(config: EnvConfig = {}, settings: SpawnSettings = {}): Promise<IndbenchEnv> {
    const client = new ServiceClient(settings);
    try {
      const made = (await client.request("make", { config })) as MakeResult;
      return new IndbenchEnv(client, made);
    } catch (err) {
      client.dispose();
      throw err;
    }
  }

  async reset(seed?: number): Promise<number[]> {
    this.ensureOpen();
    const result = (await this.client.request(
      "reset",
      seed === undefined ? {} : { seed },
    )) as { observation: number[] };
    return result.observation;
  }

  async step(action: ActionVector): Promise<StepOutcome> {
    this.ensureOpen();
    return (await this.client.request("step", { action: [...action] })) as StepOutcome;
  }

  async observe(): Promise<number[]> {
    this.ensureOpen();
    const result = (await this.client.request("observe")) as { observation: number[] };
    return result.observation;
  }

  /** Full latent Markov state; debugging and oracle checks only. */
  async latentState(): Promise<Record<string, unknown>> {
    this.ensureOpen();
    const result = (await this.client.request("state")) as { state: Record<string, unknown> };
    return result.state;
  }

  /** Outstanding requests; zero between calls when the pipe is healthy. */
  get pendingRequests(): number {
    return this.client.pendingCount;
  }

  /** Close the environment and stop the core process. Safe to call twice. */
  async close(): Promise<void> {
    if (this.closed) {
      return;
    }
    this.closed = true;
    try {
      await this.client.request("close");
    } catch {
      // the process may already be gone; disposal below is what matters
    } finally {
      this.client.dispose();
    }
  }

  private ensureOpen(): void {
    if (this.closed) {
      throw new LifecycleError("environment is closed");
    }
  }
}

export { RemoteError };
export type { SpawnSettings };
