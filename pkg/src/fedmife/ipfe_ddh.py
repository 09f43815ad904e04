"""Single-input inner-product functional encryption over a prime-order group.

Two variants share one API, tagged by mode:

* ``selective`` - ElGamal-derived: secret vector s, public h_i = g^s_i,
  functional key d = <y, s>.
* ``adaptive``  - matrix variant: secret W over Z_q^{m x 2}, public
  (g^a_vec, g^{W a_vec}) with a_vec = (1, a), functional key d = W^T y.

Decryption is split in two steps: the partial step returns the group
element g^{<x,y>} (no discrete log); the final step takes a bounded dlog
over a caller-supplied window.  Exponent arithmetic is mod q, group
arithmetic mod p.  Encryption always draws fresh randomness; r is never
stored.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import BsgsSolver, DlogWindow, GroupParams, bounded_dlog
from .rng import Rng

MODES = ("selective", "adaptive")


def _check_mode(mode: str):
    if mode not in MODES:
        raise ValueError(f"unknown mode: {mode!r}")


@dataclass(frozen=True)
class DdhPublicKey:
    mode: str
    group: GroupParams
    m: int
    h: tuple[int, ...] | None = None       # selective: (g^s_1 .. g^s_m)
    ga: tuple[int, int] | None = None      # adaptive: (g^1, g^a)
    gwa: tuple[int, ...] | None = None     # adaptive: g^{W a_vec}, m entries


@dataclass(frozen=True)
class DdhMasterKeys:
    public: DdhPublicKey
    s: tuple[int, ...] | None = None                  # selective secret
    w: tuple[tuple[int, int], ...] | None = None      # adaptive secret rows

    @property
    def mode(self) -> str:
        return self.public.mode


@dataclass(frozen=True)
class DdhCiphertext:
    mode: str
    head: tuple[int, ...]   # selective: (ct_0,); adaptive: (g^r, g^{ar})
    body: tuple[int, ...]   # m elements


@dataclass(frozen=True)
class DdhFunctionalKey:
    mode: str
    group: GroupParams
    d: int | tuple[int, int]
    y: tuple[int, ...]


def ddh_setup(mode: str, group: GroupParams, m: int, rng: Rng) -> DdhMasterKeys:
    """Sample master keys for an m-dimensional instance."""
    _check_mode(mode)
    if m < 1:
        raise ValueError("vector length m must be >= 1")
    q = group.q
    if mode == "selective":
        s = tuple(rng.uniform(q) for _ in range(m))
        h = tuple(group.gexp(si) for si in s)
        public = DdhPublicKey(mode=mode, group=group, m=m, h=h)
        return DdhMasterKeys(public=public, s=s)
    a = rng.uniform(q)
    w = tuple((rng.uniform(q), rng.uniform(q)) for _ in range(m))
    ga = (group.gexp(1), group.gexp(a))
    gwa = tuple(group.gexp(row[0] + row[1] * a) for row in w)
    public = DdhPublicKey(mode=mode, group=group, m=m, ga=ga, gwa=gwa)
    return DdhMasterKeys(public=public, w=w)


def ddh_encrypt(public: DdhPublicKey, x, rng: Rng) -> DdhCiphertext:
    """Encrypt an integer vector (entries taken mod q) under fresh randomness."""
    group = public.group
    if len(x) != public.m:
        raise ValueError(f"plaintext length {len(x)} != m={public.m}")
    r = rng.uniform(group.q)
    if public.mode == "selective":
        head = (group.gexp(r),)
        body = tuple(
            group.mul(group.exp(hi, r), group.gexp(xi)) for hi, xi in zip(public.h, x)
        )
    else:
        head = (group.exp(public.ga[0], r), group.exp(public.ga[1], r))
        body = tuple(
            group.mul(group.gexp(xi), group.exp(gi, r)) for gi, xi in zip(public.gwa, x)
        )
    return DdhCiphertext(mode=public.mode, head=head, body=body)


def ddh_keygen(keys: DdhMasterKeys, y) -> DdhFunctionalKey:
    """Derive the functional key for integer vector y."""
    public = keys.public
    if len(y) != public.m:
        raise ValueError(f"key vector length {len(y)} != m={public.m}")
    q = public.group.q
    y = tuple(int(v) for v in y)
    if keys.mode == "selective":
        d = sum(yi * si for yi, si in zip(y, keys.s)) % q
    else:
        d = (
            sum(yi * row[0] for yi, row in zip(y, keys.w)) % q,
            sum(yi * row[1] for yi, row in zip(y, keys.w)) % q,
        )
    return DdhFunctionalKey(mode=keys.mode, group=public.group, d=d, y=y)


def ddh_decrypt_partial(ct: DdhCiphertext, sk: DdhFunctionalKey) -> int:
    """First decryption step: the group element g^{<x,y>}, no dlog taken."""
    if ct.mode != sk.mode:
        raise ValueError(f"ciphertext mode {ct.mode!r} does not match key mode {sk.mode!r}")
    if len(ct.body) != len(sk.y):
        raise ValueError("ciphertext dimension does not match key")
    group = sk.group
    num = 1
    for ci, yi in zip(ct.body, sk.y):
        num = group.mul(num, group.exp(ci, yi))
    if ct.mode == "selective":
        den = group.exp(ct.head[0], sk.d)
    else:
        den = group.mul(group.exp(ct.head[0], sk.d[0]), group.exp(ct.head[1], sk.d[1]))
    return group.mul(num, group.inv(den))


def ddh_decrypt(ct: DdhCiphertext, sk: DdhFunctionalKey, window: DlogWindow,
                solver: BsgsSolver | None = None) -> int:
    """Full decryption: <x, y> as an integer inside `window`."""
    c = ddh_decrypt_partial(ct, sk)
    return bounded_dlog(sk.group, c, window, solver=solver)


# -- fixed-width big-endian serialization (the widths the harness counts) --

def _pack_elements(group: GroupParams, elements) -> bytes:
    w = group.element_bytes
    return b"".join(e.to_bytes(w, "big") for e in elements)


def serialize_ciphertext(group: GroupParams, ct: DdhCiphertext) -> bytes:
    return _pack_elements(group, ct.head + ct.body)


def serialize_public_key(public: DdhPublicKey) -> bytes:
    """Adaptive keys omit the constant first component g^1 (it equals the
    group generator and is recoverable from the group parameters)."""
    group = public.group
    if public.mode == "selective":
        return _pack_elements(group, public.h)
    return _pack_elements(group, (public.ga[1],) + public.gwa)


def serialize_functional_key_payload(group: GroupParams, sk: DdhFunctionalKey) -> bytes:
    """The d component only; y is accounted for once at the bundle level."""
    w = group.scalar_bytes
    if sk.mode == "selective":
        return sk.d.to_bytes(w, "big")
    return sk.d[0].to_bytes(w, "big") + sk.d[1].to_bytes(w, "big")
