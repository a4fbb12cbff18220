"""Binary field GF(2^m) arithmetic on integer-coded polynomials.

Elements are ints in [0, 2^m); bit i is the coefficient of x^i. The
reduction polynomials are fixed per degree (Conway-style) so that element
encodings are reproducible across runs:

    m=1: x+1          m=2: x^2+x+1      m=3: x^3+x+1
    m=4: x^4+x+1      m=5: x^5+x^2+1
"""

from __future__ import annotations

IRREDUCIBLE = {
    1: 0b11,
    2: 0b111,
    3: 0b1011,
    4: 0b10011,
    5: 0b100101,
}


class BinaryField:
    """GF(2^m) for 1 <= m <= 5."""

    def __init__(self, degree: int):
        if degree not in IRREDUCIBLE:
            raise ValueError(f"unsupported field degree {degree} (need 1..5)")
        self.degree = degree
        self.size = 1 << degree
        self.poly = IRREDUCIBLE[degree]
        self._inv = self._build_inverse_table()

    @staticmethod
    def add(a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        # carry-less multiply, then reduce modulo the fixed polynomial
        acc = 0
        x = a
        while b:
            if b & 1:
                acc ^= x
            b >>= 1
            x <<= 1
        top = self.poly.bit_length()
        while acc.bit_length() >= top:
            acc ^= self.poly << (acc.bit_length() - top)
        return acc

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse in GF(2^m)")
        return self._inv[a]

    def _build_inverse_table(self) -> list:
        inv = [0] * self.size
        for a in range(1, self.size):
            if inv[a]:
                continue
            for b in range(1, self.size):
                if self.mul(a, b) == 1:
                    inv[a] = b
                    inv[b] = a
                    break
        return inv

    def pow(self, a: int, k: int) -> int:
        r = 1
        for _ in range(k):
            r = self.mul(r, a)
        return r
