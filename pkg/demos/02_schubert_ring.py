"""Schubert calculus on the Lagrangian Grassmannian LG(n).

Run as:  python3 demos/02_schubert_ring.py
"""

from qschubert import (
    LGRing,
    betti,
    complement,
    dual,
    enumerate_partitions,
    integrate,
    multiply,
    omega,
    pair,
)

ring = LGRing(3)
print(f"LG(3): complex dimension {ring.dim}, top class S{list(ring.top)}")
print(f"Betti numbers: {betti(ring)}")

# Multiplication happens in the quotient ring; products are reduced to
# the Schubert basis automatically.
s1 = omega((1,), ring)
s21 = omega((2, 1), ring)
print(f"\nS[1] * S[1]   = {multiply(s1, s1)}")
print(f"S[1] * S[2,1] = {multiply(s1, s21)}")

# Powers of the hyperplane class compute the degree of the variety.
acc = omega((), ring)
for _ in range(ring.dim):
    acc = multiply(acc, s1)
print(f"\nS[1]^{ring.dim} = {acc}, so deg LG(3) = {integrate(acc)}")

# The pairing of complementary classes is 1 and every other pairing of
# complementary degree vanishes.  Print the full table for LG(3).
print("\nduality pairing on LG(3)")
strict = [i for d in range(ring.dim + 1)
          for i in enumerate_partitions(d, max_part=3, strict=True)]
for i in strict:
    partner = complement(i, 3)
    assert dual(i, ring) == partner
    assert pair(i, partner, ring) == 1
    print(f"  <S{list(i)}, S{list(partner)}> = 1")

# Complementary degree is not enough: these two middle-degree pairs
# have total degree 6 but are not complements, so they integrate to 0.
print(f"  <S[3], S[3]>     = {pair((3,), (3,), ring)}")
print(f"  <S[2,1], S[2,1]> = {pair((2, 1), (2, 1), ring)}")
