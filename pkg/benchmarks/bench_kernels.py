"""Compare the compiled and pure-Python polynomial kernels.

Each backend runs in a fresh interpreter (the backend is fixed at import),
so module-level caches never leak between runs.

    python benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys

WORKLOAD = r"""
import json, time
from symorient.polyring import BACKEND
from symorient import charclass, cohomology
from symorient.spaces import SpaceId

cases = [
    ("AIII:4,5 presentation", lambda: cohomology.presentation(SpaceId("AIII", (4, 5)))),
    ("CII:2,3 p1^6", lambda: charclass.pontrjagin_number(SpaceId("CII", (2, 3)), [1] * 6)),
    ("DIII:5 Pontrjagin numbers", lambda: charclass.pontrjagin_numbers(SpaceId("DIII", (5,)))),
    ("FII Pontrjagin numbers", lambda: charclass.pontrjagin_numbers(SpaceId("FII"))),
    ("BDI:4,4 signature", lambda: charclass.lgenus_signature(SpaceId("BDI", (4, 4)))),
    ("AIII:2,6 signature", lambda: charclass.lgenus_signature(SpaceId("AIII", (2, 6)))),
]
out = {"backend": BACKEND, "timings": {}}
for name, fn in cases:
    cohomology.presentation.cache_clear()
    cohomology._uncalibrated.cache_clear()
    t = time.perf_counter()
    fn()
    out["timings"][name] = time.perf_counter() - t
print(json.dumps(out))
"""


def run(pure: bool) -> dict:
    env = dict(os.environ, SYMORIENT_PURE_PYTHON="1" if pure else "0")
    res = subprocess.run([sys.executable, "-c", WORKLOAD], env=env, capture_output=True, text=True)
    if res.returncode:
        raise RuntimeError(res.stderr)
    return json.loads(res.stdout)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3, help="take the best of N runs")
    args = ap.parse_args(argv)

    best: dict[str, dict[str, float]] = {}
    names: dict[str, str] = {}
    for pure in (False, True):
        key = "python" if pure else "compiled"
        for _ in range(args.repeat):
            r = run(pure)
            names[key] = r["backend"]
            slot = best.setdefault(key, {})
            for case, t in r["timings"].items():
                slot[case] = min(t, slot.get(case, float("inf")))

    if names["compiled"] != "cython":
        print("note: compiled kernels unavailable, both columns use the Python fallback")
    print(f"{'case':<26}{'cython [s]':>12}{'python [s]':>12}{'speedup':>10}")
    for case in best["python"]:
        c, p = best["compiled"][case], best["python"][case]
        print(f"{case:<26}{c:>12.3f}{p:>12.3f}{p / c:>9.2f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
