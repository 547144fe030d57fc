"""The order ``<<`` on signed multiplicities.

``0`` is the least element, every negative count lies below every positive
one, positives are ordered as usual and negatives are ordered as usual
among themselves (``-4 << -3``).  The result is a total order with minimum
``0``::

    0 << -n << ... << -2 << -1 << 1 << 2 << ...
"""


def ll(n: int, m: int) -> bool:
    """Return whether ``n << m``."""
    if n == 0:
        return True
    if n > 0:
        return m > 0 and n <= m
    # n < 0
    return m > 0 or (m < 0 and n <= m)


def gg(n: int, m: int) -> bool:
    """Return whether ``n >> m``, i.e. ``m << n``."""
    return ll(m, n)
