# coding=utf-8
"""Deterministic 64-bit pseudo-random generator used for sampling.

The generator is xoshiro256** with its 256-bit state filled by four outputs
of SplitMix64 seeded with the user seed. Both algorithms are the public
reference versions by Blackman and Vigna, so a stream can be reproduced by
any implementation given the same seed.

Reference vector for seed 0:

.. code-block:: text

    SplitMix64:   0xe220a8397b1dcdaf 0x6e789e6aa1b965f4
                  0x06c45d188009454f 0xf88bb8a8724c81ec
    xoshiro256**: 0x99ec5f36cb75f2b4 0xbf6e1f784956452a 0x1a5f849d4933e6e0
"""
from __future__ import division

_MASK64 = 0xFFFFFFFFFFFFFFFF
_TWO_POW_MINUS_53 = 1.0 / (1 << 53)


def _rotl(x, k):
    return ((x << k) | (x >> (64 - k))) & _MASK64


def splitmix64(seed, count):
    """Get a list of SplitMix64 outputs.

    Args:
        seed: An integer seed. It is reduced modulo 2^64.
        count: The number of outputs to generate.
    """
    state = int(seed) & _MASK64
    values = []
    for _ in range(count):
        state = (state + 0x9E3779B97F4A7C15) & _MASK64
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        values.append(z ^ (z >> 31))
    return values


class Xoshiro256StarStar(object):
    """xoshiro256** generator seeded through SplitMix64.

    Args:
        seed: An integer seed. Any integer is accepted (including 0) and it is
            reduced modulo 2^64.

    Properties:
        * seed
        * state
    """
    __slots__ = ('_seed', '_s')

    def __init__(self, seed=0):
        self._seed = int(seed) & _MASK64
        self._s = splitmix64(self._seed, 4)

    @property
    def seed(self):
        """Get the 64-bit seed of the generator."""
        return self._seed

    @property
    def state(self):
        """Get a tuple with the four 64-bit words of the current state."""
        return tuple(self._s)

    def next_uint64(self):
        """Get the next 64-bit unsigned integer of the stream."""
        s = self._s
        result = (_rotl((s[1] * 5) & _MASK64, 7) * 9) & _MASK64
        t = (s[1] << 17) & _MASK64
        s[2] ^= s[0]
        s[3] ^= s[1]
        s[1] ^= s[2]
        s[0] ^= s[3]
        s[2] ^= t
        s[3] = _rotl(s[3], 45)
        return result

    def random(self):
        """Get the next float in [0, 1) from the upper 53 bits of the stream."""
        return (self.next_uint64() >> 11) * _TWO_POW_MINUS_53

    def randoms(self, count):
        """Get a list of the next count floats in [0, 1)."""
        return [self.random() for _ in range(count)]

    def __repr__(self):
        return 'Xoshiro256StarStar [seed: {}]'.format(self._seed)
