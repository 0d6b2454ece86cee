"""Pure-Python union-find kernel.

Drop-in fallback for the compiled variant in ``_ckern.pyx``; both expose
``classes`` and ``component_count`` with identical semantics.
"""

from __future__ import annotations

BACKEND = "python"


def classes(n: int, pairs: list[int]) -> list[int]:
    """Partition ``range(n)`` by the relation pairs and label each item.

    ``pairs`` is a flat list ``[i0, j0, i1, j1, ...]``.  The returned list
    maps every item to the minimal item index of its class, so labels are
    canonical and deterministic.
    """
    parent = list(range(n))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for t in range(0, len(pairs), 2):
        ri = find(pairs[t])
        rj = find(pairs[t + 1])
        if ri != rj:
            if ri < rj:
                parent[rj] = ri
            else:
                parent[ri] = rj

    # Union always keeps the smaller index as root, so roots are minimal.
    return [find(i) for i in range(n)]


def component_count(n: int, pairs: list[int]) -> int:
    """Number of classes of ``range(n)`` under the relation pairs."""
    if n == 0:
        return 0
    label = classes(n, pairs)
    return sum(1 for i, l in enumerate(label) if i == l)
