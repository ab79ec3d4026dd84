"""Energy levels, the Boltzmann law and Gibbs free energy.

An energetic set lambda_1 < ... < lambda_l gives exp_BE(t) = -sum p_n t^n / n!
with p_n the power sums of the levels.  The Gibbs series
Omega(x) = log(1 + sum p_n x^n / n!) carries the cumulant polynomials with
moments replaced by power sums.
"""

from fglab import EnergeticSet, boltzmann_fgl, fgl_check_axioms, gibbs_series
from fglab.boltzmann import ensemble_average_fgl, level_law

N = 6
E = EnergeticSet.parse("1,3/2,2")
print(E)

# %% The law and its axioms
F = boltzmann_fgl(E, N)
print("F_BE(x, y) through degree 3:", F.law.truncate(3))
print("axioms hold:", bool(fgl_check_axioms(F)))

# %% Gibbs series, numerically and symbolically
G = gibbs_series(E, N)
print("Omega(x) =", G.numeric)
for n in range(1, 4):
    print(f"  [x^{n}] =", G.symbolic[n])
print("symbolic agrees with numeric:", G.consistent())

# Normalized form: p_n = wp_n p_1^n, so each coefficient is a polynomial in wp_*.
print("normalized [x^3] =", G.normalized[3])

# %% The Boltzmann exponential is a sum of one-level exponentials
avg = ensemble_average_fgl([level_law(v, N) for v in E])
print("sum of level exponentials equals exp_BE:", avg.exp == F.exp)
