"""Rewrite tests/golden/*.json from the current CLI output.

Only run this after checking the new output by hand; the goldens are the
regression contract for the CLI.
"""
import contextlib
import io
import json
from pathlib import Path

from idealization.cli import main

ROOT = Path(__file__).resolve().parent.parent
GOLDEN = ROOT / "tests" / "golden"


def run(argv):
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        status = main(argv)
    return status, buf.getvalue()


if __name__ == "__main__":
    import os

    os.chdir(ROOT)
    cases = json.loads((GOLDEN / "cases.json").read_text())
    for name, argv in cases.items():
        status, out = run(argv)
        assert status == 0, (name, status)
        (GOLDEN / f"{name}.json").write_text(out, encoding="utf-8")
        print(f"wrote {name}.json")
