# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled gluing census kernel.  Same contract as ``_wick_py.census_chunk``."""

cdef enum:
    MAXPTS = 32

cdef struct State:
    int size
    int ncyc
    int sigma[MAXPTS]
    int cycle_of[MAXPTS]
    int tau[MAXPTS]
    unsigned char seen[MAXPTS]
    int parent[MAXPTS]
    long long hist[MAXPTS + 1]
    long long conn[MAXPTS + 1]


cdef inline int _find(State* st, int a) nogil:
    while st.parent[a] != a:
        st.parent[a] = st.parent[st.parent[a]]
        a = st.parent[a]
    return a


cdef void _leaf(State* st) nogil:
    cdef int i, j, faces = 0, comps, a, b
    for i in range(st.size):
        st.seen[i] = 0
    for i in range(st.size):
        if not st.seen[i]:
            faces += 1
            j = i
            while not st.seen[j]:
                st.seen[j] = 1
                j = st.sigma[st.tau[j]]
    st.hist[faces] += 1
    for i in range(st.ncyc):
        st.parent[i] = i
    comps = st.ncyc
    for i in range(st.size):
        a = _find(st, st.cycle_of[i])
        b = _find(st, st.cycle_of[st.tau[i]])
        if a != b:
            st.parent[a] = b
            comps -= 1
    if comps == 1:
        st.conn[faces] += 1


cdef void _rec(State* st, int i) nogil:
    cdef int j
    while i < st.size and st.tau[i] >= 0:
        i += 1
    if i == st.size:
        _leaf(st)
        return
    for j in range(i + 1, st.size):
        if st.tau[j] < 0:
            st.tau[i] = j
            st.tau[j] = i
            _rec(st, i + 1)
            st.tau[i] = -1
            st.tau[j] = -1


def census_chunk(tuple parts, int first_partner):
    cdef State st
    cdef int start = 0, c, k, p, i
    st.size = sum(parts)
    st.ncyc = len(parts)
    if st.size == 0:
        return {0: 1}, {}
    if st.size > MAXPTS:
        raise ValueError("too many points for the compiled kernel")
    if first_partner <= 0 or first_partner >= st.size:
        raise ValueError("first_partner out of range")
    for c in range(st.ncyc):
        p = parts[c]
        for k in range(p):
            st.sigma[start + k] = start + (k + 1) % p
            st.cycle_of[start + k] = c
        start += p
    for i in range(st.size):
        st.tau[i] = -1
    for i in range(MAXPTS + 1):
        st.hist[i] = 0
        st.conn[i] = 0
    st.tau[0] = first_partner
    st.tau[first_partner] = 0
    with nogil:
        _rec(&st, 1)
    hist = {f: st.hist[f] for f in range(MAXPTS + 1) if st.hist[f]}
    conn = {f: st.conn[f] for f in range(MAXPTS + 1) if st.conn[f]}
    return hist, conn
