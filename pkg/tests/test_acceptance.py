"""The eleven acceptance criteria at full scale, one test and one PASS/FAIL line each.

Run directly (``python3 tests/test_acceptance.py``) to print just the lines.
"""
import sys

import pytest

from greenblocks.verify import CRITERIA, run_criterion

try:
    from conftest import ACCEPTANCE_LINES
except ImportError:
    ACCEPTANCE_LINES = {}


def line(res) -> str:
    status = "PASS" if res.ok else "FAIL"
    text = f"{status}  criterion {res.number:2d}  {res.title}  ({res.checked} checks, {res.seconds:.1f} s)"
    if not res.ok:
        text += "  first failure: " + "; ".join(f"{f['locus']} {f['detail']}".strip() for f in res.failures[:3])
    return text


@pytest.mark.parametrize("number", sorted(CRITERIA), ids=lambda k: f"{k:02d}")
def test_criterion(number):
    res = run_criterion(number)
    text = line(res)
    ACCEPTANCE_LINES[number] = text
    print(text)
    assert res.ok, text


if __name__ == "__main__":
    results = [run_criterion(k) for k in sorted(CRITERIA)]
    for r in results:
        print(line(r))
    sys.exit(0 if all(r.ok for r in results) else 1)
