# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; signature-compatible twin of ``_kernels_py``."""

from libc.math cimport fabs, hypot

BACKEND = "cython"


cdef inline double _horner(double c4, double c3, double c2, double c1,
                           double c0, double y) nogil:
    return (((c4 * y + c3) * y + c2) * y + c1) * y + c0


def horner(double c4, double c3, double c2, double c1, double c0, double y):
    """Evaluate c4*y^4 + c3*y^3 + c2*y^2 + c1*y + c0."""
    return _horner(c4, c3, c2, c1, c0, y)


def newton_polish(double c4, double c3, double c2, double c1, double c0,
                  double y0, int max_iter=50):
    """Polish a quartic root estimate by Newton steps.

    Stops when |P| stagnates, the derivative vanishes, or after
    ``max_iter`` steps; returns the iterate with the smallest |P| seen.
    """
    cdef double y = y0, y_best = y0, y_next
    cdef double f, df, f_next
    cdef double f_best = fabs(_horner(c4, c3, c2, c1, c0, y0))
    cdef int k
    for k in range(max_iter):
        f = _horner(c4, c3, c2, c1, c0, y)
        df = ((4.0 * c4 * y + 3.0 * c3) * y + 2.0 * c2) * y + c1
        if f == 0.0 or df == 0.0:
            break
        y_next = y - f / df
        f_next = fabs(_horner(c4, c3, c2, c1, c0, y_next))
        if f_next < f_best:
            f_best = f_next
            y_best = y_next
        elif y_next != y:
            break
        if y_next == y:
            break
        y = y_next
    return y_best


def residual_norm(double[::1] xs, double[::1] ys, double[::1] ws,
                  double x, double y):
    """Norm of the weighted sum of unit vectors from (x, y) to the points.

    Terms at zero distance are skipped, which makes the same routine
    usable for the per-vertex absorbed test (the vertex's own term drops).
    """
    cdef double sx = 0.0, sy = 0.0, dx, dy, d
    cdef Py_ssize_t i, n = ws.shape[0]
    for i in range(n):
        dx = xs[i] - x
        dy = ys[i] - y
        d = hypot(dx, dy)
        if d == 0.0:
            continue
        sx += ws[i] * dx / d
        sy += ws[i] * dy / d
    return hypot(sx, sy)


def objective_sum(double[::1] xs, double[::1] ys, double[::1] ws,
                  double x, double y):
    """Weighted sum of Euclidean distances from (x, y) to the points."""
    cdef double total = 0.0
    cdef Py_ssize_t i, n = ws.shape[0]
    for i in range(n):
        total += ws[i] * hypot(xs[i] - x, ys[i] - y)
    return total


def weiszfeld_loop(double[::1] xs, double[::1] ys, double[::1] ws,
                   double x0, double y0, double tol, int max_iter,
                   double vertex_radius):
    """Fixed-point iteration for the weighted geometric median.

    Returns ``(x, y, iterations, converged, vertex_index)``.  When an
    iterate falls within ``vertex_radius`` of an input point, the
    absorbed condition is tested there: if the resultant pull of the
    other weights does not exceed that point's weight the point itself
    is returned (``vertex_index`` set), otherwise the iterate steps off
    along the descent direction and the loop continues.
    """
    cdef Py_ssize_t n = ws.shape[0]
    cdef double x = x0, y = y0
    cdef double gx, gy, lip, dx, dy, d, pull, step
    cdef double num_x, num_y, den, wd, nx, ny
    cdef Py_ssize_t i, j, near
    cdef int it
    for it in range(1, max_iter + 1):
        near = -1
        for i in range(n):
            if hypot(xs[i] - x, ys[i] - y) < vertex_radius:
                near = i
                break
        if near >= 0:
            gx = 0.0
            gy = 0.0
            lip = 0.0
            for j in range(n):
                if j == near:
                    continue
                dx = xs[j] - xs[near]
                dy = ys[j] - ys[near]
                d = hypot(dx, dy)
                gx += ws[j] * dx / d
                gy += ws[j] * dy / d
                lip += ws[j] / d
            pull = hypot(gx, gy)
            if pull <= ws[near]:
                return xs[near], ys[near], it, True, near
            step = (pull - ws[near]) / lip
            x = xs[near] + step * gx / pull
            y = ys[near] + step * gy / pull
            continue
        num_x = 0.0
        num_y = 0.0
        den = 0.0
        for i in range(n):
            d = hypot(xs[i] - x, ys[i] - y)
            wd = ws[i] / d
            num_x += wd * xs[i]
            num_y += wd * ys[i]
            den += wd
        nx = num_x / den
        ny = num_y / den
        if hypot(nx - x, ny - y) < tol:
            return nx, ny, it, True, -1
        x = nx
        y = ny
    return x, y, max_iter, False, -1
