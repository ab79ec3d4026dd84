"""The universal logarithm over Q[CP_1, CP_2, ...] and its specializations.

log_MU(c) = sum CP_{n-1} c^n / n.  Setting every CP_n to 1 gives the
multiplicative law; setting them to 0 gives the additive law.  Pairing
b CP_{n-1} with power sums p_n turns the modulus st_MU into 1 - E(-t).
"""

from fglab import (
    cartier_character,
    fgl_additive,
    fgl_gm,
    hurewicz_substitute,
    specialize,
    st_mu,
    universal_fgl,
    universal_log,
)

N = 5

# %% The universal law
print("log_MU(c) =", universal_log(N))
F = universal_fgl(N)
print("[x y]   =", F.coefficient(1, 1))
print("[x^2 y] =", F.coefficient(2, 1))

# %% Specializations
print("CP=1 gives x + y - xy:", specialize(F, 1).law == fgl_gm(N).law)
print("CP=0 gives x + y:     ", specialize(F, 0).law == fgl_additive(N).law)

# %% The modulus and its image in power sums
st = st_mu(N)
for n in range(1, 4):
    print(f"hurewicz [t^{n}] st_MU =", hurewicz_substitute(st[n], N))

# %% The Cartier character is multiplicative along the universal law
for check in cartier_character(4).checks:
    print(f"  {check.name}: {'ok' if check.passed else check.first_discrepancy}")
