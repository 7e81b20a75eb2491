#!/usr/bin/env python3
"""Regenerate the golden JSON reports for the fixture corpus.

One golden file per fixture, produced by that fixture's primary command with
a fixed seed.  Run from the repository root:

    python scripts/regen_golden.py
"""

import io
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from holoclosure.cli import run  # noqa: E402

GOLDEN = ROOT / "fixtures" / "golden"

COMMANDS = {
    "totally_real_r1.sys": ["hcdim"],
    "totally_real_r2.sys": ["hcdim"],
    "totally_real_r3.sys": ["hcdim"],
    "complex_line_c2.sys": ["hcdim"],
    "complex_hyperplane_c3.sys": ["hcdim"],
    "sphere.sys": ["hcdim"],
    "line_times_real.sys": ["hcdim"],
    "umbrella.sys": ["hcdim"],
    "umbrella_stick_germ.sys": ["hcdim"],
    "paraboloid.sys": ["hcdim"],
    "mixed_graph.sys": ["crdim", "--point", "1+2*i, 2"],
    "whitney.map": ["ranks"],
    "osgood.jets": ["probe", "--jets", "3,5,7", "--maxdeg", "2"],
    "surface_param.par": ["param-hcdim"],
}


def main():
    GOLDEN.mkdir(parents=True, exist_ok=True)
    for fixture, argv in COMMANDS.items():
        command = argv[0]
        full = [command, str(ROOT / "fixtures" / fixture)] + argv[1:] + ["--json", "--seed", "0"]
        out = io.StringIO()
        code = run(full, stdout=out)
        if code != 0:
            raise SystemExit(f"{fixture}: exit {code}\n{out.getvalue()}")
        name = f"{fixture.replace('.', '_')}__{command}.json"
        (GOLDEN / name).write_text(out.getvalue(), encoding="utf-8")
        print(f"wrote {name}")


if __name__ == "__main__":
    main()
