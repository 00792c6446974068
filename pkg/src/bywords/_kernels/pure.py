"""Pure-Python diagonal scan; same contract as the compiled kernel."""

from __future__ import annotations

from collections.abc import Sequence


def diag_line_histogram(codes: Sequence[int]) -> tuple[int, list[int]]:
    """Scan the strict upper triangle of the recurrence plot of ``codes``.

    Returns ``(points, hist)`` where ``points`` counts recurrent cells
    above the main diagonal and ``hist[length]`` counts maximal diagonal
    runs of exactly ``length`` recurrent cells there. The lower triangle
    mirrors the upper, so callers double the counts where both sides
    matter.
    """
    n = len(codes)
    hist = [0] * max(n, 1)
    points = 0
    for k in range(1, n):
        run = 0
        for i in range(n - k):
            if codes[i] == codes[i + k]:
                run += 1
                points += 1
            elif run:
                hist[run] += 1
                run = 0
        if run:
            hist[run] += 1
    return points, hist
