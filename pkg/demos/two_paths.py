"""Train a plain Q-learner and an AUP agent on the two-path level and show where each goes.

The goal can be reached through a green still life (one toggle, seven actions)
or by a detour around it (eight actions, nothing touched).  The plain agent
takes the shortcut; the AUP agent, penalised for changing what it could do
with respect to a learned auxiliary reward, walks around.

Run: python demos/two_paths.py [seed]   (about half a minute per agent)
"""

import sys

from auplab.config import load_config
from auplab.runner import build_curriculum, render_trajectory, rollout_policy, run_experiment

seed = int(sys.argv[1]) if len(sys.argv) > 1 else 0
for name in ("fig2_plain", "fig2_aup"):
    cfg = load_config(f"recipes/{name}/config.txt", environ={}).with_values(seed=seed)
    res = run_experiment(cfg, write=False)
    start = build_curriculum(cfg).reset(0)
    r = rollout_policy(res.policy, start)
    frames = render_trajectory(res.policy, start, r.length)
    print(f"== {cfg.condition.value}: reached goal {r.reached_goal}, side-effect score {r.side_effect}")
    print(frames[0])
    print(frames[-1])
