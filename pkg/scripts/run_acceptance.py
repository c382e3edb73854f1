#!/usr/bin/env python3
"""Run the acceptance checks and print one line per check.

The same checks run under pytest as tests/test_acceptance.py; this entry
point skips the test harness for quick terminal runs.  Exit status is 0
when every check passes, 1 otherwise.
"""

import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))
sys.path.insert(0, str(ROOT / "tests"))

import test_acceptance as acceptance  # noqa: E402


def main():
    failed = 0
    for num, slug, fn in acceptance.CHECKS:
        try:
            ok, detail = fn()
        except Exception as exc:  # noqa: BLE001 - keep the checklist running
            ok, detail = False, f"error: {exc}"
        print(f"acceptance {num:02d} {slug}: {'PASS' if ok else 'FAIL'} ({detail})")
        failed += not ok
    if failed:
        print(f"{failed} check(s) failed")
        return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
