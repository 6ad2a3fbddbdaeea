"""Adaptive Simpson quadrature."""
import math

from .errors import QuadratureError


def adaptive_simpson(f, a, b, rtol=1e-9, atol=0.0, max_depth=50):
    """Integrate scalar ``f`` over ``[a, b]`` (either orientation).

    Recursive bisection with the Richardson-corrected Simpson estimate.  The
    integral is always evaluated over ``[min(a, b), max(a, b)]`` and negated
    for ``b < a``, so swapping the limits flips the sign exactly.
    """
    if a == b:
        return 0.0
    if b < a:
        return -adaptive_simpson(f, b, a, rtol, atol, max_depth)

    fa, fb = f(a), f(b)
    m = 0.5 * (a + b)
    fm = f(m)
    whole = (b - a) * (fa + 4.0 * fm + fb) / 6.0
    if not all(map(math.isfinite, (fa, fm, fb))):
        raise QuadratureError("non-finite integrand value")
    eps = max(rtol * abs(whole), atol)

    # explicit stack: (a, b, fa, fm, fb, whole, eps, depth)
    total = 0.0
    stack = [(a, b, fa, fm, fb, whole, eps, 0)]
    while stack:
        lo, hi, flo, fmid, fhi, est, tol, depth = stack.pop()
        mid = 0.5 * (lo + hi)
        lm, rm = 0.5 * (lo + mid), 0.5 * (mid + hi)
        flm, frm = f(lm), f(rm)
        if not (math.isfinite(flm) and math.isfinite(frm)):
            raise QuadratureError("non-finite integrand value")
        left = (mid - lo) * (flo + 4.0 * flm + fmid) / 6.0
        right = (hi - mid) * (fmid + 4.0 * frm + fhi) / 6.0
        diff = left + right - est
        if abs(diff) <= 15.0 * tol:
            total += left + right + diff / 15.0
        elif depth >= max_depth:
            raise QuadratureError(
                f"no convergence on [{lo:.6g}, {hi:.6g}] after {max_depth} bisections")
        else:
            stack.append((mid, hi, fmid, frm, fhi, right, 0.5 * tol, depth + 1))
            stack.append((lo, mid, flo, flm, fmid, left, 0.5 * tol, depth + 1))
    return total
