"""Exact truncated power series: composition, reversion and the multiplicative law.

Everything below is computed over Q with fractions.Fraction, so every
identity printed here holds exactly rather than to rounding error.
"""

from fglab import (
    TruncatedSeries,
    fgl_check_axioms,
    fgl_gm,
    gm_exp,
    gm_log,
    lagrange_inversion,
    series_compose,
    series_exp,
    series_log,
    series_revert,
)

N = 8

# %% The two coordinates of the multiplicative law
e = gm_exp(N)   # 1 - e^{-t}
l = gm_log(N)   # -log(1 - t)
print("exp_Gm(t) =", e)
print("log_Gm(t) =", l)

# They are compositional inverses.
print("exp o log =", series_compose(e, l))

# %% Reversion two ways
# series_revert solves a triangular system; Lagrange inversion is an
# independent route to the same answer.
f = TruncatedSeries([0, 1, 1, 0, 2], N)
print("f        =", f)
print("f^{-1}   =", series_revert(f))
print("agree:", series_revert(f) == lagrange_inversion(f))

# %% exp and log are mutually inverse on series with suitable constant terms
g = TruncatedSeries([0, 1, -3, 5], N)
print("log(exp(g)) == g:", series_log(series_exp(g)) == g)

# %% The law itself
F = fgl_gm(N)
print("F(x, y) =", F)
report = fgl_check_axioms(F)
for check in report.checks:
    print(f"  {check.name}: {'ok' if check.passed else check.first_discrepancy}")
