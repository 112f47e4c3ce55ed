"""Desk-scale verification report: re-runs the fast end-to-end checks and
prints one pass/fail line per check."""

from __future__ import annotations

import random
from math import ceil

from .graphs import generate, line_graph, complete, spider
from .covers import verify_cover
from .orientations import pseudoarboricity, arboricity, local_star_arboricity, degeneracy
from .solvers import Budget, compute_number, decide_constrained_folded
from .constructions import (flac_cover, slug_cover, krausz_cover, realize,
                            random_partial_simple_ktree, validate_sequence,
                            gadget, fca_core)


def _random_graph(rng: random.Random, n: int, p: float):
    from .graphs import Graph
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)
                     if rng.random() < p])


def run_report(seed: int = 0, budget: Budget = Budget()) -> int:
    checks: list[tuple[str, bool, str]] = []

    def record(name: str, ok: bool, detail: str = ""):
        checks.append((name, ok, detail))
        print(f"{'PASS' if ok else 'FAIL'}  {name}" +
              (f"  [{detail}]" if detail else ""), flush=True)

    print(f"seed: {seed}")

    # Petersen cycle-collection covers: global 3, local 3, folded 2
    pet = generate("petersen", [])
    vals = {}
    for mode in ("global", "local", "folded"):
        res = compute_number(pet, "cycle_collection", mode, budget)
        ok = res.status == "feasible" and \
            verify_cover(pet, res.certificate, "cycle_collection", mode).valid
        vals[mode] = res.value
        record(f"petersen cycle cover, {mode}",
               ok and res.value == (2 if mode == "folded" else 3),
               f"value {res.value}")

    # complete bipartite caterpillar formulas
    for (m, n) in [(2, 2), (2, 3), (3, 3)]:
        g = generate("complete_bipartite", [m, n])
        want_g = ceil(m * n / (m + n - 1))
        want_f = ceil((m * n + 1) / (m + n))
        rg = compute_number(g, "caterpillar_forest", "global", budget)
        rf = compute_number(g, "caterpillar_forest", "folded", budget)
        record(f"K_{{{m},{n}}} caterpillar global = {want_g}",
               rg.value == want_g, f"got {rg.value}")
        record(f"K_{{{m},{n}}} caterpillar folded = {want_f}",
               rf.value == want_f, f"got {rf.value}")

    # orientation bracket on a small random corpus
    rng = random.Random(seed)
    ok = True
    for _ in range(25):
        g = _random_graph(rng, rng.randint(2, 8), rng.choice([0.3, 0.5]))
        p, _, _ = pseudoarboricity(g)
        a, _ = arboricity(g)
        sa, cert = local_star_arboricity(g)
        if not (p <= a <= sa <= p + 1):
            ok = False
        if g.m and not verify_cover(g, cert, "star_forest", "local").valid:
            ok = False
    record("pseudoarboricity <= arboricity <= local star arboricity "
           "<= pseudoarboricity + 1 (random corpus)", ok)

    # folded linear-forest covers from Euler tours
    ok = True
    for _ in range(25):
        g = _random_graph(rng, rng.randint(2, 15), rng.choice([0.2, 0.4]))
        if g.m == 0:
            continue
        cert = flac_cover(g)
        rep = verify_cover(g, cert, "linear_forest", "folded")
        if not rep.valid or rep.max_preimage > ceil((g.max_degree() + 1) / 2):
            ok = False
    record("Euler-walk folded linear covers within degree bound "
           "(random corpus)", ok)

    # slug covers on random partial simple k-trees
    ok = True
    for _ in range(10):
        w = rng.choice([3, 4])
        seq = random_partial_simple_ktree(rng, w, rng.randint(w + 1, 25))
        g = realize(seq)
        cert = slug_cover(g, seq)
        rep = verify_cover(g, cert, "interval", "local")
        if not rep.valid or rep.max_preimage > w:
            ok = False
    record("slug interval covers within width bound (random corpus)", ok)

    # constrained folded infeasibility on the 10-vertex core
    core = fca_core(2)
    bounds = {v: {"c": 1, "s": 2, "a": 2}[core.labels[v]]
              for v in range(core.n)}
    res = decide_constrained_folded(core, "caterpillar_forest", bounds, budget)
    record("10-vertex core admits no tightly-bounded folded caterpillar "
           "cover", res.status == "infeasible", res.status)

    # folded caterpillar lower bound on the pendant gadget at k=1
    res = compute_number(spider(3, 2), "caterpillar_forest", "folded", budget)
    record("pendant gadget (k=1) folded caterpillar number = 2",
           res.value == 2, f"got {res.value}")

    # tree-width gadget sequence is simple at width 3
    gres = gadget("t_stw", 3)
    viol, kept, _ = validate_sequence(gres.sequence, require_simple=True)
    record("width-3 gadget stacking sequence valid and simple",
           not viol and kept == gres.graph,
           f"{len(viol)} violations")

    # Krausz covers of line graphs of complete graphs
    ok = True
    for n in range(3, 7):
        lg, cert = krausz_cover(complete(n))
        rep = verify_cover(lg, cert, "clique_collection", "local")
        if not rep.valid or rep.max_preimage > 2:
            ok = False
    record("line graphs of K_n have clique covers with two cliques "
           "per vertex (n <= 6)", ok)

    # degeneracy of the subset gadget
    gres = gadget("t_deg", 2)
    k, _ = degeneracy(gres.graph)
    record("subset gadget (k=2) has degeneracy at most 2", k <= 2, f"got {k}")

    failures = sum(1 for _, ok, _ in checks if not ok)
    print(f"checks: {len(checks)}")
    print(f"failures: {failures}")
    return failures
