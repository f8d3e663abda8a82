"""Pure-Python gluing census kernel (fallback for ``_wick_ext``)."""

from __future__ import annotations


def canonical_sigma(parts: tuple[int, ...]) -> tuple[list[int], list[int]]:
    """Permutation of cycle type ``parts`` with cycles laid out consecutively.

    Returns ``(sigma, cycle_of)``.
    """
    sigma, cycle_of = [], []
    start = 0
    for c, p in enumerate(parts):
        for k in range(p):
            sigma.append(start + (k + 1) % p)
            cycle_of.append(c)
        start += p
    return sigma, cycle_of


def census_chunk(parts: tuple[int, ...], first_partner: int) -> tuple[dict[int, int], dict[int, int]]:
    """Face histograms over involutions with ``tau(0) == first_partner``.

    Returns ``(all_gluings, connected_gluings)``, each mapping the number of
    cycles of ``sigma o tau`` to a count.
    """
    sigma, cycle_of = canonical_sigma(parts)
    size = len(sigma)
    ncyc = len(parts)
    hist: dict[int, int] = {}
    conn: dict[int, int] = {}
    if size == 0:
        return {0: 1}, {}
    tau = [-1] * size
    tau[0], tau[first_partner] = first_partner, 0
    seen = [False] * size

    def leaf() -> None:
        faces = 0
        for i in range(size):
            seen[i] = False
        for i in range(size):
            if not seen[i]:
                faces += 1
                j = i
                while not seen[j]:
                    seen[j] = True
                    j = sigma[tau[j]]
        hist[faces] = hist.get(faces, 0) + 1
        parent = list(range(ncyc))

        def find(a: int) -> int:
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        comps = ncyc
        for i in range(size):
            a, b = find(cycle_of[i]), find(cycle_of[tau[i]])
            if a != b:
                parent[a] = b
                comps -= 1
        if comps == 1:
            conn[faces] = conn.get(faces, 0) + 1

    def rec(i: int) -> None:
        while i < size and tau[i] >= 0:
            i += 1
        if i == size:
            leaf()
            return
        for j in range(i + 1, size):
            if tau[j] < 0:
                tau[i], tau[j] = j, i
                rec(i + 1)
                tau[i] = tau[j] = -1

    rec(1)
    return hist, conn
