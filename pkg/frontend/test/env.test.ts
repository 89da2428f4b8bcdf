import assert from "node:assert/strict";
import { test } from "node:test";

import { IndbenchEnv, LifecycleError, RemoteError } from "../src/index.js";
import { coreSettings } from "./helpers.js";

test("space metadata matches the core definitions", async () => {
  const env = await IndbenchEnv.make({}, coreSettings());
  try {
    assert.deepEqual(env.actionSpace.shape, [3]);
    assert.deepEqual(env.actionSpace.low, [-1, -1, -1]);
    assert.deepEqual(env.actionSpace.high, [1, 1, 1]);
    assert.deepEqual(env.observationSpace.shape, [6]);
    assert.deepEqual(env.observationSpace.names, [
      "setpoint", "velocity", "gain", "shift", "consumption", "fatigue",
    ]);
    assert.deepEqual(env.observationSpace.low.slice(0, 4), [0, 0, 0, 0]);
  } finally {
    await env.close();
  }
});

test("empty config applies the documented defaults", async () => {
  const env = await IndbenchEnv.make({}, coreSettings());
  try {
    const obs = await env.observe();
    assert.equal(obs[0], 50); // setpoint
    assert.equal(obs[1], 50); // velocity
    assert.equal(obs[2], 50); // gain
    assert.equal(obs[3], 50); // shift
  } finally {
    await env.close();
  }
});

test("two environments with one seed trace identical trajectories", async () => {
  const a = await IndbenchEnv.make({ seed: 11 }, coreSettings());
  const b = await IndbenchEnv.make({ seed: 11 }, coreSettings());
  try {
    for (let t = 0; t < 25; t++) {
      const action: [number, number, number] = [
        Math.sin(t / 3), Math.cos(t / 5), Math.sin(t / 7),
      ];
      const ra = await a.step(action);
      const rb = await b.step(action);
      assert.deepEqual(ra.observation, rb.observation);
      assert.equal(ra.reward, rb.reward);
    }
  } finally {
    await a.close();
    await b.close();
  }
});

test("reset with a seed is reproducible in place", async () => {
  const env = await IndbenchEnv.make({ seed: 1 }, coreSettings());
  try {
    const first = await env.reset(1234);
    await env.step([0.5, -0.5, 0.25]);
    const second = await env.reset(1234);
    assert.deepEqual(first, second);
  } finally {
    await env.close();
  }
});

test("step reports the exact reward identity and no termination", async () => {
  const env = await IndbenchEnv.make({ seed: 3 }, coreSettings());
  try {
    for (let t = 0; t < 10; t++) {
      const out = await env.step([0.1, 0.1, -0.1]);
      const [, , , , consumption, fatigue] = out.observation;
      assert.equal(out.reward, -(consumption + 3 * fatigue));
      assert.equal(out.terminated, false);
      assert.equal(out.truncated, false);
    }
  } finally {
    await env.close();
  }
});

test("strict mode surfaces the core's validation error", async () => {
  const env = await IndbenchEnv.make({ seed: 3 }, coreSettings());
  try {
    await assert.rejects(env.step([1.5, 0, 0]), (err: unknown) => {
      assert.ok(err instanceof RemoteError);
      assert.equal(err.remoteType, "InvalidActionError");
      return true;
    });
  } finally {
    await env.close();
  }
});

test("unknown config keys surface as named-key errors", async () => {
  await assert.rejects(
    IndbenchEnv.make({ velocty: 10 } as never, coreSettings()),
    (err: unknown) => {
      assert.ok(err instanceof RemoteError);
      assert.equal(err.remoteType, "ConfigError");
      assert.match(err.message, /velocty/);
      return true;
    },
  );
});

test("latent state is reachable only through the debug call", async () => {
  const env = await IndbenchEnv.make({ seed: 5 }, coreSettings());
  try {
    const obs = await env.observe();
    assert.equal(obs.length, 6);
    const state = await env.latentState();
    assert.equal(state["direction"], 0);
    assert.equal((state["cost_history"] as number[]).length, 9);
  } finally {
    await env.close();
  }
});

test("step after close is a lifecycle error; close is idempotent", async () => {
  const env = await IndbenchEnv.make({ seed: 7 }, coreSettings());
  await env.step([0, 0, 0]);
  await env.close();
  await env.close();
  await assert.rejects(env.step([0, 0, 0]), LifecycleError);
});

test("no requests accumulate across a long run (handle hygiene)", async () => {
  const env = await IndbenchEnv.make({ seed: 9 }, coreSettings());
  try {
    for (let t = 0; t < 300; t++) {
      await env.step([0, 0, 0]);
    }
    assert.equal(env.pendingRequests, 0);
  } finally {
    await env.close();
  }
});
