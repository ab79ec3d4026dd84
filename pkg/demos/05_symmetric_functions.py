"""Generating functions of symmetric functions and the Newton identities.

E(t) = prod (1 + x_i t), H(t) = 1 / E(-t) and P(t) = H'(t) / H(t).
The Newton identities move between the e, h and p bases exactly.
"""

from fglab import Alphabet, gen_E, gen_H, gen_P, h_from_p, newton_convert
from fglab.symfun import basis_table, complete_in_p, evaluate_at

N = 6
X = Alphabet([1, 2, "1/3"])

# %% Generating functions at a concrete alphabet
E = gen_E(X, N)
H = gen_H(X, N)
print("E(t) =", E)
print("H(t) =", H)
print("P(t) =", gen_P(X, N))
print("E(-t) H(t) =", H * gen_E([-x for x in X], N))

# %% Symbolic H in power sums
print("H(t) over Q[p_*] =", h_from_p(3))
h3 = complete_in_p(3)
print("h_3 =", h3, "=", evaluate_at(h3, X), "at X")
print("direct [t^3] H(t) =", H[3])

# %% Converting bases
e = basis_table("e", 4)
expr = e.gen("e2") * e.gen("e1") - e.gen("e3")
print("e1 e2 - e3 in p:", newton_convert(expr, "p", 4))
print("   ... and in h:", newton_convert(expr, "h", 4))
