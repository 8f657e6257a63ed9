"""Independent high-precision reference evaluations (mpmath, 50 digits).

Everything here uses the unregularized textbook form of each expression --
n / sinh^2 r appears literally -- so this module shares no algebraic
rewrites, no truncation logic and no code with the package under test.
Values frozen into the tests were produced by these functions.
"""

import mpmath as mp

mp.mp.dps = 50

_STOP = mp.mpf("1e-42")


def squeezing_from_omega(omega):
    return float(mp.acosh((1 - mp.e ** (-2 * mp.pi * mp.mpf(omega))) ** mp.mpf("-0.5")))


def _base(r, n):
    sh, th = mp.sinh(r), mp.tanh(r)
    return (n / sh**2 if n > 0 else mp.mpf(0)) + th**2


def pt_block(r, n):
    r = mp.mpf(r)
    ch, th = mp.cosh(r), mp.tanh(r)
    base = _base(r, n)
    root = mp.sqrt(base**2 + 4 / ch**2)
    pre = th ** (2 * n) / (4 * ch**2)
    return float(pre * (base + root)), float(pre * (base - root))


def sigma(r):
    r = mp.mpf(r)
    ch, th = mp.cosh(r), mp.tanh(r)
    total = mp.mpf(0)
    n = 0
    while True:
        term = th ** (2 * n) / (2 * ch**2) * mp.sqrt(_base(r, n) ** 2 + 4 / ch**2)
        total += term
        if n >= 2 and term < _STOP:
            return float(total)
        n += 1


def log_negativity(r):
    r = mp.mpf(r)
    return float(mp.log(1 / (2 * mp.cosh(r) ** 2) + mp.mpf(repr(sigma(r))), 2))


def _entropy(r, occupancy):
    r = mp.mpf(r)
    ch, th = mp.cosh(r), mp.tanh(r)
    total = mp.mpf(0)
    n = 0
    while True:
        w = th ** (2 * n) / (2 * ch**2) * occupancy(r, n)
        if w > 0:
            total -= w * mp.log(w, 2)
        if n >= 2 and w < _STOP:
            return float(total)
        n += 1


def entropy_joint(r):
    return _entropy(r, lambda r, n: 1 + (n + 1) / mp.cosh(r) ** 2)


def entropy_rob(r):
    return _entropy(r, lambda r, n: 1 + (n / mp.sinh(r) ** 2 if n > 0 else 0))


def mutual_information(r):
    return 1.0 + entropy_rob(r) - entropy_joint(r)


def mutual_information_partial(r, n_terms):
    r = mp.mpf(r)
    ch, sh, th = mp.cosh(r), mp.sinh(r), mp.tanh(r)
    total = mp.mpf(0)
    for n in range(n_terms):
        b = 1 + (n / sh**2 if n > 0 else mp.mpf(0))
        c = 1 + (n + 1) / ch**2
        d = b * mp.log(b, 2) - c * mp.log(c, 2)
        total += th ** (2 * n) * d
    return float(1 - mp.log(th**2, 2) / 2 - total / (2 * ch**2))
