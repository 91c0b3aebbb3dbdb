"""Pure-Python hot kernels.

Reference implementations of the inner loops (quartic evaluation and
polishing, weighted-distance sums, the fixed-point iteration for the
weighted geometric median).  A compiled twin with identical signatures
lives in ``_kernels.pyx``; ``backend`` picks one at import time.

All functions take plain floats or indexable float sequences and return
plain Python values, so both twins are interchangeable.
"""

import math

BACKEND = "python"


def horner(c4: float, c3: float, c2: float, c1: float, c0: float, y: float) -> float:
    """Evaluate c4*y^4 + c3*y^3 + c2*y^2 + c1*y + c0."""
    return (((c4 * y + c3) * y + c2) * y + c1) * y + c0


def newton_polish(
    c4: float,
    c3: float,
    c2: float,
    c1: float,
    c0: float,
    y0: float,
    max_iter: int = 50,
) -> float:
    """Polish a quartic root estimate by Newton steps.

    Stops when |P| stagnates, the derivative vanishes, or after
    ``max_iter`` steps; returns the iterate with the smallest |P| seen.
    """
    y_best = y = y0
    f_best = abs(horner(c4, c3, c2, c1, c0, y0))
    for _ in range(max_iter):
        f = horner(c4, c3, c2, c1, c0, y)
        df = ((4.0 * c4 * y + 3.0 * c3) * y + 2.0 * c2) * y + c1
        if f == 0.0 or df == 0.0:
            break
        y_next = y - f / df
        f_next = abs(horner(c4, c3, c2, c1, c0, y_next))
        if f_next < f_best:
            f_best = f_next
            y_best = y_next
        elif y_next != y:
            break
        if y_next == y:
            break
        y = y_next
    return y_best


def residual_norm(xs, ys, ws, x: float, y: float) -> float:
    """Norm of the weighted sum of unit vectors from (x, y) to the points.

    Terms at zero distance are skipped, which makes the same routine
    usable for the per-vertex absorbed test (the vertex's own term drops).
    """
    sx = 0.0
    sy = 0.0
    for i in range(len(ws)):
        dx = xs[i] - x
        dy = ys[i] - y
        d = math.hypot(dx, dy)
        if d == 0.0:
            continue
        sx += ws[i] * dx / d
        sy += ws[i] * dy / d
    return math.hypot(sx, sy)


def objective_sum(xs, ys, ws, x: float, y: float) -> float:
    """Weighted sum of Euclidean distances from (x, y) to the points."""
    total = 0.0
    for i in range(len(ws)):
        total += ws[i] * math.hypot(xs[i] - x, ys[i] - y)
    return total


def weiszfeld_loop(
    xs,
    ys,
    ws,
    x0: float,
    y0: float,
    tol: float,
    max_iter: int,
    vertex_radius: float,
):
    """Fixed-point iteration for the weighted geometric median.

    Returns ``(x, y, iterations, converged, vertex_index)``.  When an
    iterate falls within ``vertex_radius`` of an input point, the
    absorbed condition is tested there: if the resultant pull of the
    other weights does not exceed that point's weight the point itself
    is returned (``vertex_index`` set), otherwise the iterate steps off
    along the descent direction and the loop continues.
    """
    n = len(ws)
    x = x0
    y = y0
    for it in range(1, max_iter + 1):
        near = -1
        for i in range(n):
            if math.hypot(xs[i] - x, ys[i] - y) < vertex_radius:
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
                d = math.hypot(dx, dy)
                gx += ws[j] * dx / d
                gy += ws[j] * dy / d
                lip += ws[j] / d
            pull = math.hypot(gx, gy)
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
            d = math.hypot(xs[i] - x, ys[i] - y)
            wd = ws[i] / d
            num_x += wd * xs[i]
            num_y += wd * ys[i]
            den += wd
        nx = num_x / den
        ny = num_y / den
        if math.hypot(nx - x, ny - y) < tol:
            return nx, ny, it, True, -1
        x = nx
        y = ny
    return x, y, max_iter, False, -1
