"""Golden CLI corpus: inputs and the invocations whose output is frozen.

Run ``python3 tests/golden/cases.py`` from the repository root to rebuild
``inputs/`` and ``expected/`` after an intended output change.
"""

import contextlib
import io
import os
import sys
from pathlib import Path

HERE = Path(__file__).resolve().parent
INPUTS = HERE / "inputs"
EXPECTED = HERE / "expected"

GRAPHS = {
    "triangle": "p h3 6 3\ne 0 1 2\ne 2 3 4\ne 0 4 5\n",
    "path": "p h3 6 2\ne 0 1 2\ne 2 3 4\n",
    "empty9": "p h3 9 0\n",
    "k5": "p h3 5 10\n" + "".join(
        f"e {a} {b} {c}\n" for a in range(5) for b in range(a + 1, 5) for c in range(b + 1, 5)
    ),
}
CONSTRUCTED = (14, 16, 17, 23)
GREEDY = ((9, 0), (10, 1), (11, 2), (12, 3))
JOBS_VARIANTS = ("1", "2", "3")


def build_inputs() -> None:
    from loosesat.construction import construct_gn
    from loosesat.hypergraph import Hypergraph3
    from loosesat.io import write_h3
    from loosesat.saturation import saturate_greedy

    INPUTS.mkdir(exist_ok=True)
    for name, text in GRAPHS.items():
        (INPUTS / f"{name}.h3").write_text(text)
    for n in CONSTRUCTED:
        (INPUTS / f"g{n}.h3").write_text(write_h3(construct_gn(n)[0]))
    for n, seed in GREEDY:
        H = saturate_greedy(Hypergraph3(n), seed)
        (INPUTS / f"greedy{n}s{seed}.h3").write_text(write_h3(H, (f"greedy saturation, seed={seed}",)))


def cases() -> list[tuple[str, list[str], bool]]:
    """``(case name, argv, accepts --jobs)``; file arguments are relative to ``inputs/``."""
    out = []
    for f in sorted(p.name for p in INPUTS.glob("*.h3")):
        stem = f[:-3]
        out.append((f"{stem}.check-free", ["check", f, "--free"], False))
        out.append((f"{stem}.check-saturated", ["check", f, "--saturated"], True))
        out.append((f"{stem}.stats", ["stats", f], False))
        out.append((f"{stem}.lemmas", ["lemmas", f], False))
        out.append((f"{stem}.discharge", ["discharge", f, "--ell", "4"], False))
    for n in (14, 15):
        out.append((f"construct{n}", ["construct", "-n", str(n)], False))
    for n in (5, 6, 7, 9):
        out.append((f"satnum{n}", ["satnum", "-n", str(n), "--enumerate", "-w", "-"], True))
    return out


def run_case(argv: list[str]) -> tuple[int, str]:
    from loosesat.cli import main

    buf = io.StringIO()
    cwd = os.getcwd()
    os.chdir(INPUTS)
    try:
        with contextlib.redirect_stdout(buf), contextlib.redirect_stderr(io.StringIO()):
            code = main(argv)
    finally:
        os.chdir(cwd)
    return code, buf.getvalue()


def render(code: int, out: str) -> str:
    return f"exit {code}\n{out}"


def regenerate() -> None:
    build_inputs()
    EXPECTED.mkdir(exist_ok=True)
    for old in EXPECTED.glob("*.out"):
        old.unlink()
    for name, argv, _ in cases():
        code, out = run_case(argv)
        (EXPECTED / f"{name}.out").write_text(render(code, out))


if __name__ == "__main__":
    sys.path.insert(0, str(HERE.parent.parent / "src"))
    regenerate()
