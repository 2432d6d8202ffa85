"""Associated Laguerre polynomials via the stable upward recurrence."""

from __future__ import annotations


def assoc_laguerre(p: int, alpha: int, x: float) -> float:
    """Evaluate L_p^alpha(x) for integer p >= 0, alpha >= 0 and x >= 0.

    Uses the three-term recurrence

        k * L_k = (2k - 1 + alpha - x) * L_{k-1} - (k - 1 + alpha) * L_{k-2},

    which is upward-stable for x >= 0.  p <= 1 is returned in closed form.
    """
    if p < 0 or alpha < 0:
        raise ValueError(f"indices must be non-negative, got p={p}, alpha={alpha}")
    if p == 0:
        return 1.0
    prev = 1.0
    curr = 1.0 + alpha - x
    for k in range(2, p + 1):
        prev, curr = curr, ((2.0 * k - 1.0 + alpha - x) * curr - (k - 1.0 + alpha) * prev) / k
    return curr


def assoc_laguerre_derivative(p: int, alpha: int, x: float) -> float:
    """d/dx L_p^alpha(x) = -L_{p-1}^{alpha+1}(x); zero for p = 0."""
    if p == 0:
        return 0.0
    return -assoc_laguerre(p - 1, alpha + 1, x)
