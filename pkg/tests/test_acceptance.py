"""Acceptance gate: one PASS/FAIL line per criterion.

Run directly (``python tests/test_acceptance.py``) or through pytest, which
prints the same lines with capture disabled.
"""

import time

import pytest

from pointcircle import verify

TITLES = {
    "1": "Klein quartic 56_3 and dual 24_7",
    "2": "Bring's curve 30_4 and dual 12_5",
    "3": "Bolza curve Moebius-Kantor 8_3 and degenerate dual 6_4",
    "4": "Moore graphs, pentagonal geometries, removal",
    "5": "Y_p maps, p^2_4 configurations, p-gonal quotients (p = 3, 5, 7)",
    "6": "Paley(13) cover, generalized pentagonal d = 3 (candidate match)",
    "7": "structural identities on catalog and 50 random graphs",
    "8": "hyperbolic patches: edge lengths, concyclicity, isometric circles, SVG",
}


def criterion_line(number: str) -> tuple[bool, str, list]:
    t0 = time.perf_counter()
    report = verify.run_criterion(number)
    elapsed = time.perf_counter() - t0
    failed = [c for c in report.claims if not c.passed]
    status = "PASS" if not failed else "FAIL"
    line = f"criterion {number} {status}  {len(report.claims) - len(failed)}/{len(report.claims)} claims  {elapsed:6.2f}s  {TITLES[number]}"
    return not failed, line, failed


@pytest.mark.parametrize("number", sorted(TITLES))
def test_criterion(number, capsys):
    ok, line, failed = criterion_line(number)
    with capsys.disabled():
        print(f"\n{line}")
        for c in failed:
            print(f"    {c.claim_id}: expected {c.expected!r}, observed {c.observed!r}")
    assert ok, line


if __name__ == "__main__":
    results = [criterion_line(n) for n in sorted(TITLES)]
    for _, line, _ in results:
        print(line)
    raise SystemExit(0 if all(ok for ok, _, _ in results) else 1)
