"""A first tour of the Q-function calculator.

Run as:  python3 demos/01_qtilde_basics.py
"""

from qschubert import evaluate, qtilde, qtilde_pair, schur_q

# The one-row functions are just the polynomial generators c1, c2, ...
print("one-row values")
for i in range(1, 5):
    print(f"  Q[{i}] = {qtilde((i,))}")

# Two rows combine quadratically; the diagonal case Q[i,i] is special
# because it only involves even-degree data once evaluated.
print("\ntwo-row values")
print(f"  Q[2,1] = {qtilde((2, 1))}")
print(f"  Q[3,1] = {qtilde((3, 1))}")
print(f"  Q[2,2] = {qtilde_pair(2, 2)}")

# Indices need not be strictly decreasing, and longer index tuples are
# handled through an exact Pfaffian evaluation behind the scenes.
print("\nlonger and repeated indices")
print(f"  Q[1,1,1]   = {qtilde((1, 1, 1))}")
print(f"  Q[3,2,1]   = {qtilde((3, 2, 1))}")
print(f"  Q[2,2,1]   = {qtilde((2, 2, 1))}")

# Everything lives in a polynomial ring whose generators can be read as
# elementary symmetric functions of n variables.  Evaluating makes the
# square identity visible: Q[i,i] becomes e_i of the squared variables.
p = evaluate(qtilde_pair(2, 2), 3)
print("\nQ[2,2] in three variables (exponent vector: coefficient)")
for key, c in sorted(p.terms.items()):
    print(f"  {key}: {c}")

# The Schur Q specialization substitutes a different generator series.
# On doubled diagonal indices it collapses to zero.
print("\nSchur Q values")
print(f"  SchurQ[1]   = {schur_q((1,))}")
print(f"  SchurQ[2,1] = {schur_q((2, 1))}")
print(f"  SchurQ[3,3] = {schur_q((3, 3))}")
