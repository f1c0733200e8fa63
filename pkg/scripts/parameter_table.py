#!/usr/bin/env python3
"""Print the twelve parameters for a list of graphs.

Example:
    python scripts/parameter_table.py --graphs fcn:0,fcn:1,cycle:6,path:7 --budget-nodes 2000000
"""

import argparse
import sys

from fcnlab.cli import load_graph
from fcnlab.solve import Budget, SolverStatus, min_param
from fcnlab.verify import ParameterKind


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--graphs", default="fcn:0,fcn:1", help="comma separated graph specs")
    ap.add_argument("--budget-nodes", type=int, default=None, help="node budget per cell (unlimited when omitted)")
    args = ap.parse_args()

    graphs = [load_graph(s.strip()) for s in args.graphs.split(",") if s.strip()]
    budget = Budget(max_nodes=args.budget_nodes) if args.budget_nodes else None

    width = max(len(g.name) for g in graphs) + 2
    print("kind".ljust(8) + "".join(g.name.rjust(width) for g in graphs))
    for kind in ParameterKind:
        cells = []
        for g in graphs:
            try:
                res = min_param(g, kind, budget)
            except Exception as e:  # resolving kinds reject disconnected graphs
                cells.append("err")
                continue
            if res.status is SolverStatus.EXACT:
                cells.append(str(res.value))
            elif res.status is SolverStatus.INFEASIBLE:
                cells.append("none")
            else:
                cells.append(f"[{res.lower},{res.upper if res.upper is not None else '?'}]")
        print(kind.value.ljust(8) + "".join(c.rjust(width) for c in cells))
    return 0


if __name__ == "__main__":
    sys.exit(main())
