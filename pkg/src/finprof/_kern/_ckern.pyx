# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled union-find kernel; see _pykern for the reference semantics."""

from cpython.mem cimport PyMem_Malloc, PyMem_Free

BACKEND = "c"


cdef Py_ssize_t _find(Py_ssize_t* parent, Py_ssize_t i) nogil:
    while parent[i] != i:
        parent[i] = parent[parent[i]]
        i = parent[i]
    return i


def classes(Py_ssize_t n, pairs):
    cdef Py_ssize_t* parent = <Py_ssize_t*> PyMem_Malloc(n * sizeof(Py_ssize_t))
    if parent == NULL and n > 0:
        raise MemoryError()
    cdef Py_ssize_t i, ri, rj, t
    cdef Py_ssize_t npairs = len(pairs)
    try:
        for i in range(n):
            parent[i] = i
        t = 0
        while t < npairs:
            ri = _find(parent, pairs[t])
            rj = _find(parent, pairs[t + 1])
            if ri != rj:
                if ri < rj:
                    parent[rj] = ri
                else:
                    parent[ri] = rj
            t += 2
        return [_find(parent, i) for i in range(n)]
    finally:
        PyMem_Free(parent)


def component_count(Py_ssize_t n, pairs):
    if n == 0:
        return 0
    cdef list label = classes(n, pairs)
    cdef Py_ssize_t i, count = 0
    for i in range(n):
        if <Py_ssize_t> label[i] == i:
            count += 1
    return count
