"""Prime-order group arithmetic, bounded discrete logs, Gaussian sampling.

This module is the substrate for both scheme families: arbitrary-precision
modular arithmetic over a prime-order subgroup, a baby-step giant-step
solver for discrete logs restricted to an explicit window, and a tail-cut
discrete Gaussian sampler.  All residues are kept in canonical form
[0, modulus); signed values are mapped through `v mod q` and re-centred
by the caller during decoding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DlogNotFoundError
from .rng import Rng

# Hard cap on dlog window widths; callers may lower it, never raise it
# implicitly.  sqrt(2^48) baby steps is the edge of desk-scale feasibility.
MAX_DLOG_WINDOW = 2**48

# 3072-bit MODP group (RFC 3526, group 15): safe prime, generator 2 has
# order q = (p-1)/2.  Vendored bit-exact.
_MODP_3072_HEX = (
    "FFFFFFFFFFFFFFFFC90FDAA22168C234C4C6628B80DC1CD129024E088A67CC74"
    "020BBEA63B139B22514A08798E3404DDEF9519B3CD3A431B302B0A6DF25F1437"
    "4FE1356D6D51C245E485B576625E7EC6F44C42E9A637ED6B0BFF5CB6F406B7ED"
    "EE386BFB5A899FA5AE9F24117C4B1FE649286651ECE45B3DC2007CB8A163BF05"
    "98DA48361C55D39A69163FA8FD24CF5F83655D23DCA3AD961C62F356208552BB"
    "9ED529077096966D670C354E4ABC9804F1746C08CA18217C32905E462E36CE3B"
    "E39E772C180E86039B2783A2EC07A28FB5C55DF06F4C52C9DE2BCBF695581718"
    "3995497CEA956AE515D2261898FA051015728E5A8AAAC42DAD33170D04507A33"
    "A85521ABDF1CBA64ECFB850458DBEF0A8AEA71575D060C7DB3970F85A6E1E4C7"
    "ABF5AE8CDB0933D71E8C94E04A25619DCEE3D2261AD2EE6BF12FFA06D98A0864"
    "D87602733EC86A64521F2B18177B200CBBE117577A615D6C770988C0BAD946E2"
    "08E24FA074E5AB3143DB5BFCE0FD108E4B82D120A93AD2CAFFFFFFFFFFFFFFFF"
)
_MODP_3072_P = int(_MODP_3072_HEX, 16)

# 512-bit safe-prime group for mid-size deterministic tests; g = 4 = 2^2 is
# a quadratic residue, hence has order exactly q for any safe prime p > 5.
_TOY512_P = int(
    "11407616372997587220218923542393993578346833090027935501905537374207"
    "18165522202092786164210331667076727896343549891337346997193015359632"
    "0157665392245450459"
)


@dataclass(frozen=True)
class GroupParams:
    """A prime-order subgroup of Z_p^* with generator of order exactly q."""

    p: int
    q: int
    g: int

    def __post_init__(self):
        if not (2 <= self.g <= self.p - 1):
            raise ValueError("generator out of range")
        if (self.p - 1) % self.q != 0:
            raise ValueError("subgroup order must divide p - 1")
        if pow(self.g, self.q, self.p) != 1 or self.g == 1:
            raise ValueError("generator does not have order q")

    @property
    def element_bytes(self) -> int:
        return (self.p.bit_length() + 7) // 8

    @property
    def scalar_bytes(self) -> int:
        return (self.q.bit_length() + 7) // 8

    def exp(self, base: int, e: int) -> int:
        """base^e mod p for bases of order dividing q (negative e allowed)."""
        return pow(base, e % self.q, self.p)

    def gexp(self, e: int) -> int:
        return pow(self.g, e % self.q, self.p)

    def mul(self, a: int, b: int) -> int:
        return a * b % self.p

    def inv(self, a: int) -> int:
        return pow(a, -1, self.p)


_GROUPS = {
    "toy": (23, 11, 4),
    "toy-512": (_TOY512_P, (_TOY512_P - 1) // 2, 4),
    "nist-3072": (_MODP_3072_P, (_MODP_3072_P - 1) // 2, 2),
}


def group_gen(preset: str) -> GroupParams:
    """Return the vendored group for a preset id.

    `toy` is a hand-checkable 23-element group, `toy-512` a 512-bit
    safe-prime group for randomized tests, `nist-3072` the standard
    3072-bit MODP group.
    """
    try:
        p, q, g = _GROUPS[preset]
    except KeyError:
        raise ValueError(f"unknown group preset: {preset!r}") from None
    return GroupParams(p=p, q=q, g=g)


@dataclass(frozen=True)
class DlogWindow:
    """Inclusive exponent search bounds for a bounded discrete log."""

    lower: int
    upper: int
    max_width: int = MAX_DLOG_WINDOW

    def __post_init__(self):
        if self.lower > self.upper:
            raise ValueError("empty dlog window")
        if self.width > self.max_width:
            raise ValueError(f"dlog window width {self.width} exceeds cap {self.max_width}")

    @property
    def width(self) -> int:
        return self.upper - self.lower + 1


class BsgsSolver:
    """Baby-step giant-step with a reusable baby table.

    The table depends only on the group and the stride, so one solver can
    serve many windows (of any position) whose width does not exceed
    `stride * stride`.  Memory is O(stride); each solve is O(width/stride)
    group operations.
    """

    def __init__(self, group: GroupParams, max_width: int):
        if max_width < 1:
            raise ValueError("max_width must be >= 1")
        self.group = group
        self.stride = math.isqrt(max_width - 1) + 1
        table = {}
        acc = 1
        for j in range(self.stride):
            table.setdefault(acc, j)
            acc = acc * group.g % group.p
        self._baby = table
        # acc is now g^stride; its inverse drives the giant steps
        self._giant_step = group.inv(acc)

    def solve(self, target: int, window: DlogWindow) -> int:
        group = self.group
        if window.width > self.stride * self.stride:
            raise ValueError("window wider than solver capacity")
        # shift the window to [0, width)
        cur = target * group.exp(group.g, -window.lower) % group.p
        giant_count = (window.width + self.stride - 1) // self.stride
        for i in range(giant_count):
            j = self._baby.get(cur)
            if j is not None:
                e = i * self.stride + j
                if e < window.width:
                    return window.lower + e
            cur = cur * self._giant_step % group.p
        raise DlogNotFoundError(
            f"no exponent in [{window.lower}, {window.upper}] matches target"
        )


def bounded_dlog(group: GroupParams, target: int, window: DlogWindow,
                 solver: BsgsSolver | None = None) -> int:
    """Solve g^e = target for e inside `window` (baby-step giant-step).

    Pass a prebuilt `solver` when solving many targets in the same group;
    otherwise a one-shot solver sized to the window is built.
    """
    if solver is None:
        solver = BsgsSolver(group, window.width)
    return solver.solve(target % group.p, window)


@dataclass(frozen=True)
class GaussianParams:
    """Width and tail cut of a discrete Gaussian over the integers."""

    std_dev: float
    tail_cut: float = 6.0

    def __post_init__(self):
        if self.std_dev <= 0:
            raise ValueError("std_dev must be positive")
        if self.tail_cut < 6:
            raise ValueError("tail_cut must be at least 6")


def gaussian_sample(params: GaussianParams, rng: Rng) -> int:
    """Integer from the rounded Gaussian N(0, std_dev), tail-cut rejection.

    Samples the continuous Gaussian, rounds to the nearest integer and
    rejects anything beyond tail_cut * std_dev.  Statistically faithful;
    not constant-time and not an exact CDT sampler.
    """
    limit = params.tail_cut * params.std_dev
    while True:
        v = round(rng.gauss(params.std_dev))
        if abs(v) <= limit:
            return int(v)


def lift_centered(value: int, modulus: int) -> int:
    """Map a canonical residue to its representative in (-modulus/2, modulus/2]."""
    value %= modulus
    return value - modulus if value > modulus // 2 else value
