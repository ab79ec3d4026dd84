"""A random variable as a formal group law.

For a distribution with moment generating function M(t) and non-zero mean,
exp_F(t) = 1 - M(-t) is a coordinate on the multiplicative group.  The
change of coordinates log_Gm o exp_F is -K(-t), K the cumulant generating function,
and exp_Gm o log_F goes the other way.
"""

from fractions import Fraction

from fglab import (
    Poisson,
    classical_cumulants,
    fgl_of_distribution,
    kappa,
    moments,
    parse_distribution,
    st_modulus,
    verify_intertwining,
)

N = 7

# %% A Poisson variable: every cumulant equals the mean
X = Poisson(Fraction(3, 2))
print("moments:", [str(m) for m in moments(X, N)])
k = kappa(X, N)
print("kappa_F(t) =", k)
print("cumulants (n! [t^n]):", [str(c) for c in classical_cumulants(moments(X, N), N)])

# %% A finite distribution parsed from text
Y = parse_distribution("finite:0@1/4,1@1/2,3@1/4")
F = fgl_of_distribution(Y, N)
print("F_Y(x, y) =", F.law.truncate(3))
print("st_Y(t) =", st_modulus(Y, N))

# %% The two coordinate changes really are homomorphisms
for check in verify_intertwining(Y, N).checks:
    print(f"  {check.name}: {'ok' if check.passed else check.first_discrepancy}")

# %% Zero mean has no law: the linear coefficient of exp_F vanishes
try:
    fgl_of_distribution(parse_distribution("finite:1@1/2,-1@1/2"), N)
except ValueError as err:
    print("refused:", err)
