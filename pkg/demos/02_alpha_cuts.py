"""Alpha-cuts, and where the union law breaks.

Run:  python demos/02_alpha_cuts.py
"""
from fuzzyhybrid import Frame, MultiFuzzySet
from fuzzyhybrid.laws import check_cut_laws

U = Frame.unit()
A = MultiFuzzySet(U, {"a": ("0.8", 3), "b": ("0.4", 1)})
for alpha in ("0", "0.4", "0.5", "1"):
    print(f"cut at {alpha}:", A.alpha_cut(U(alpha)).as_dict())

# %% The laws that hold on every frame
for result in check_cut_laws(Frame.powerset(["p", "q"]), samples=500):
    print(result)

# %% A cut of a union is not the union of the cuts once counts straddle alpha
X = MultiFuzzySet(U, {"x": ("0.8", 1)})
Y = MultiFuzzySet(U, {"x": ("0.2", 5)})
alpha = U("1/2")
print("cut(X | Y)       =", (X | Y).alpha_cut(alpha).as_dict())
print("cut X | cut Y    =", (X.alpha_cut(alpha) | Y.alpha_cut(alpha)).as_dict())

# %% Off a chain, even equal counts fail: alpha={p,q} sits below {p} join {q}
S = Frame.powerset(["p", "q"])
X = MultiFuzzySet(S, {"x": ({"p"}, 1)})
Y = MultiFuzzySet(S, {"x": ({"q"}, 1)})
alpha = S({"p", "q"})
print("cut(X | Y)       =", (X | Y).alpha_cut(alpha).as_dict())
print("cut X | cut Y    =", (X.alpha_cut(alpha) | Y.alpha_cut(alpha)).as_dict())
