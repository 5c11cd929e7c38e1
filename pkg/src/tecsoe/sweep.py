"""Seeded random systems for soundness sweeps and benchmarks.

Cells are numbered so joins only point from lower to higher index, which
keeps the join graph acyclic by construction. Cells that agree on
(has-vars, call-port count) share a celltype, so multi-cell celltypes and
mixed dispatch modes show up naturally.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .callflow import parse_callflow
from .model import load_model


@dataclass(frozen=True)
class SweepBounds:
    max_cells: int = 5
    max_tasks: int = 3
    max_invocations: int = 6
    max_depth: int = 3
    max_calls: int = 2
    max_priority: int = 3


@dataclass
class RandomSystem:
    seed: int
    cdl: str
    flow: str

    def load(self):
        model = load_model(self.cdl)
        return model, parse_callflow(self.flow, model)


DEFAULT_BOUNDS = SweepBounds()


def random_system(seed, bounds=DEFAULT_BOUNDS) -> RandomSystem:
    rng = random.Random(seed)
    n_cells = rng.randint(1, bounds.max_cells)
    has_vars = [rng.random() < 0.75 for _ in range(n_cells)]
    callees = []
    for i in range(n_cells):
        later = list(range(i + 1, n_cells))
        k = rng.randint(0, min(bounds.max_calls, len(later)))
        callees.append(rng.sample(later, k))

    def celltype(i):
        return f"t{'V' if has_vars[i] else 'N'}{len(callees[i])}"

    lines = ["signature sAny {", "    void f(void);", "};", ""]
    for ct in sorted({celltype(i) for i in range(n_cells)}):
        lines.append(f"celltype {ct} {{")
        lines.append("    entry sAny eAny;")
        lines.extend(f"    call sAny c{p};" for p in range(int(ct[2:])))
        if ct[1] == "V":
            lines.append("    var {")
            lines.append("        int32 state = 0;")
            lines.append("    };")
        lines.extend(["};", ""])
    for i in range(n_cells):
        lines.append(f"cell {celltype(i)} C{i} {{")
        lines.extend(f"    c{p} = C{j}.eAny;" for p, j in enumerate(callees[i]))
        lines.extend(["};", ""])

    n_tasks = rng.randint(1, bounds.max_tasks)
    flow = []
    for t in range(n_tasks):
        budget = [rng.randint(1, bounds.max_invocations)]

        def invocation(cell, depth, indent, budget=budget):
            budget[0] -= 1
            pad = "    " * indent
            children = []
            while (budget[0] > 0 and depth < bounds.max_depth and callees[cell]
                   and rng.random() < 0.55):
                children.append(invocation(rng.choice(callees[cell]), depth + 1, indent + 1, budget))
            if not children:
                return [f"{pad}C{cell}.eAny.f;"]
            return [f"{pad}C{cell}.eAny.f {{"] + [l for c in children for l in c] + [f"{pad}}};"]

        flow.append(f"task T{t} priority {rng.randint(1, bounds.max_priority)} {{")
        while budget[0] > 0:
            flow.extend(invocation(rng.randrange(n_cells), 1, 1))
        flow.extend(["}", ""])
    return RandomSystem(seed, "\n".join(lines), "\n".join(flow))


def sweep(n=100, base_seed=0, bounds=DEFAULT_BOUNDS):
    return [random_system(base_seed + i, bounds) for i in range(n)]
