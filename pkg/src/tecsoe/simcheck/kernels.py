"""Exhaustive interleaving search over lowered task programs.

``explore_py`` is plain numpy; ``explore_jit`` is the same function compiled
with numba (None when numba is missing). ``explore_kernel`` picks one per
the TECSOE_DISABLE_NUMBA flag at call time.
"""

import numpy as np

from .._accel import compile_kernel, numba_enabled

OP_ACQUIRE = 0
OP_ENTER = 1

MAX_RACES = 256
MAX_DEADLOCKS = 64


def _explore(ops, args, lens, held, inside, has_vars, strides, bound):
    """Depth-first search with state dedup on the mixed-radix pc code.

    Returns (n_states, n_transitions, n_interleavings, inconclusive,
    races[k, 4] = (cell, inside_task, entering_task, state),
    deadlocks[k], parent, parent_task). Interleavings are counted as paths
    from the initial to the final state, in float64.
    """
    n_tasks = lens.shape[0]
    total = 0
    for t in range(n_tasks):
        total += lens[t]
    final_code = 0
    for t in range(n_tasks):
        final_code += lens[t] * strides[t]

    cap = 1024
    codes = np.zeros(cap, dtype=np.int64)
    parent = np.full(cap, -1, dtype=np.int64)
    parent_task = np.full(cap, -1, dtype=np.int64)
    paths = np.zeros(cap, dtype=np.float64)

    visited = dict()
    visited[np.int64(0)] = np.int64(0)
    n_states = 1
    n_transitions = 0
    inconclusive = False

    races = np.zeros((MAX_RACES, 4), dtype=np.int64)
    n_races = 0
    deadlocks = np.zeros(MAX_DEADLOCKS, dtype=np.int64)
    n_deadlocks = 0

    depth = total + 1
    st_state = np.zeros(depth, dtype=np.int64)
    st_next = np.zeros(depth, dtype=np.int64)
    st_enabled = np.zeros(depth, dtype=np.int64)
    st_pcs = np.zeros((depth, max(n_tasks, 1)), dtype=np.int64)
    sp = 1

    while sp > 0:
        top = sp - 1
        s = st_state[top]
        i = st_next[top]
        if i >= n_tasks:
            if codes[s] == final_code:
                paths[s] = 1.0
            elif st_enabled[top] == 0 and n_deadlocks < MAX_DEADLOCKS:
                deadlocks[n_deadlocks] = s
                n_deadlocks += 1
            sp -= 1
            if sp > 0:
                paths[st_state[sp - 1]] += paths[s]
            continue
        st_next[top] = i + 1
        pc = st_pcs[top, i]
        if pc >= lens[i]:
            continue
        op = ops[i, pc]
        arg = args[i, pc]
        if op == OP_ACQUIRE:
            blocked = False
            for j in range(n_tasks):
                if j != i and held[j, st_pcs[top, j], arg]:
                    blocked = True
                    break
            if blocked:
                continue
        st_enabled[top] += 1
        n_transitions += 1
        if op == OP_ENTER and has_vars[arg]:
            for j in range(n_tasks):
                if j != i and inside[j, st_pcs[top, j], arg]:
                    a = min(i, j)
                    b = max(i, j)
                    seen = False
                    for r in range(n_races):
                        if races[r, 0] == arg and min(races[r, 1], races[r, 2]) == a and max(races[r, 1], races[r, 2]) == b:
                            seen = True
                            break
                    if not seen and n_races < MAX_RACES:
                        races[n_races, 0] = arg
                        races[n_races, 1] = j
                        races[n_races, 2] = i
                        races[n_races, 3] = s
                        n_races += 1
        code = codes[s] + strides[i]
        if code in visited:
            paths[s] += paths[visited[code]]
            continue
        if n_states >= bound:
            inconclusive = True
            break
        idx = n_states
        n_states += 1
        visited[code] = np.int64(idx)
        if idx >= cap:
            cap *= 2
            grown_i = np.zeros(cap, dtype=np.int64)
            grown_i[:idx] = codes[:idx]
            codes = grown_i
            grown_i = np.zeros(cap, dtype=np.int64)
            grown_i[:idx] = parent[:idx]
            parent = grown_i
            grown_i = np.zeros(cap, dtype=np.int64)
            grown_i[:idx] = parent_task[:idx]
            parent_task = grown_i
            grown_f = np.zeros(cap, dtype=np.float64)
            grown_f[:idx] = paths[:idx]
            paths = grown_f
        codes[idx] = code
        parent[idx] = s
        parent_task[idx] = i
        paths[idx] = 0.0
        st_state[sp] = idx
        st_next[sp] = 0
        st_enabled[sp] = 0
        for t in range(n_tasks):
            st_pcs[sp, t] = st_pcs[top, t]
        st_pcs[sp, i] = pc + 1
        sp += 1

    return (n_states, n_transitions, paths[0], inconclusive,
            races[:n_races].copy(), deadlocks[:n_deadlocks].copy(),
            parent[:n_states].copy(), parent_task[:n_states].copy())


explore_py = _explore
explore_jit = compile_kernel(_explore)


def explore_kernel(*arrays, backend=None):
    """Run the search with the requested backend ("numba", "numpy" or None for default)."""
    if backend is None:
        backend = "numba" if numba_enabled() else "numpy"
    if backend == "numba":
        if explore_jit is None:
            raise RuntimeError("numba backend requested but numba is not installed")
        return explore_jit(*arrays)
    if backend == "numpy":
        return explore_py(*arrays)
    raise ValueError(f"unknown backend {backend!r}")
