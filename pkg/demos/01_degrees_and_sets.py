"""Degrees, multi-fuzzy sets and hybrid sets.

Run:  python demos/01_degrees_and_sets.py
"""
from fuzzyhybrid import Frame, HybridSet, MultiFuzzySet

# %% Frames: the unit interval and intuitionistic pairs
U = Frame.unit()
P = Frame.pair()
print("join(0.3, 0.7) =", U("0.3") | U("0.7"))
print("meet((0.3,0.5),(0.4,0.6)) =", P(("0.3", "0.5")) & P(("0.4", "0.6")))
print("(0.6,0.2) x 3 =", P(("0.6", "0.2")).scalar(3))

# %% Multi-fuzzy sets: one degree and one count per element
A = MultiFuzzySet(U, {"x": ("0.3", 2), "y": ("0.9", 1)})
B = MultiFuzzySet(U, {"x": ("0.7", 1)})
print("A      =", A)
print("A | B  =", A | B)
print("A & B  =", A & B)
print("A + B  =", A + B)
print("card A =", A.cardinality())

# %% Hybrid sets: counts may be negative; only the sum is defined
H = HybridSet(U, {"a": ("1/2", 2), "b": (1, -3)})
print("H =", H, " card =", H.cardinality(), " strong =", H.strong_cardinality())
print("H + (-H) is empty:", not (H + -H))
print("{a:-4} <= {a:-3}:", HybridSet(U, {"a": ("0.3", -4)}) <= HybridSet(U, {"a": ("0.5", -3)}))
