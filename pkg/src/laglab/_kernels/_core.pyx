# cython: language_level=3
"""Compiled ascent kernels: weight polynomial, gradient, growth transform.

Mirrors laglab._kernels._pycore; the inner loop here dominates the runtime
of the exhaustive sweeps.
"""

import numpy as np

from laglab.errors import DegenerateStartError

BACKEND = "cython"


def weight_poly(const long long[:, ::1] edges, const double[::1] x):
    cdef Py_ssize_t m = edges.shape[0]
    cdef Py_ssize_t r = edges.shape[1]
    cdef Py_ssize_t e, k
    cdef double w = 0.0, p
    for e in range(m):
        p = 1.0
        for k in range(r):
            p *= x[edges[e, k]]
        w += p
    return w


def partials(const long long[:, ::1] edges, const double[::1] x, Py_ssize_t n):
    cdef Py_ssize_t m = edges.shape[0]
    cdef Py_ssize_t r = edges.shape[1]
    grad_arr = np.zeros(n)
    cdef double[::1] grad = grad_arr
    pre_arr = np.empty(r)
    suf_arr = np.empty(r)
    cdef double[::1] pre = pre_arr
    cdef double[::1] suf = suf_arr
    cdef double w = _partials(edges, x, grad, pre, suf, m, r)
    return w, grad_arr


cdef double _partials(const long long[:, ::1] edges, const double[::1] x,
                      double[::1] grad, double[::1] pre, double[::1] suf,
                      Py_ssize_t m, Py_ssize_t r) noexcept:
    cdef Py_ssize_t e, k
    cdef double w = 0.0
    for e in range(m):
        pre[0] = 1.0
        for k in range(1, r):
            pre[k] = pre[k - 1] * x[edges[e, k - 1]]
        suf[r - 1] = 1.0
        for k in range(r - 2, -1, -1):
            suf[k] = suf[k + 1] * x[edges[e, k + 1]]
        for k in range(r):
            grad[edges[e, k]] += pre[k] * suf[k]
        w += pre[r - 1] * x[edges[e, r - 1]]
    return w


def ascend(const long long[:, ::1] edges, double[::1] x, long max_iters,
           double conv_tol, double resid_tol, double support_eps):
    """In-place growth transform; see the python kernel for the contract."""
    cdef Py_ssize_t m = edges.shape[0]
    cdef Py_ssize_t r = edges.shape[1]
    cdef Py_ssize_t n = x.shape[0]
    grad_arr = np.zeros(n)
    pre_arr = np.empty(r)
    suf_arr = np.empty(r)
    cdef double[::1] grad = grad_arr
    cdef double[::1] pre = pre_arr
    cdef double[::1] suf = suf_arr
    cdef double w = 0.0, w_prev = -1.0, resid, rw, s, d
    cdef Py_ssize_t v
    cdef long it, steps = 0
    for it in range(max_iters + 1):
        for v in range(n):
            grad[v] = 0.0
        w = _partials(edges, x, grad, pre, suf, m, r)
        if w <= 0.0:
            raise DegenerateStartError("weight polynomial is zero at start")
        rw = r * w
        resid = 0.0
        for v in range(n):
            if x[v] > support_eps:
                d = grad[v] - rw
                if d < 0.0:
                    d = -d
                if d > resid:
                    resid = d
        if (w - w_prev) <= conv_tol and resid <= resid_tol:
            return steps, w, resid
        if it == max_iters:
            return steps, w, resid
        s = 0.0
        for v in range(n):
            x[v] = x[v] * grad[v] / rw
            s += x[v]
        for v in range(n):
            x[v] /= s
        w_prev = w
        steps += 1
    return steps, w, resid
