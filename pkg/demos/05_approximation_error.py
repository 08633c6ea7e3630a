# %% [markdown]
# # How well does a short Dirichlet polynomial invert zeta?
#
# E_a(t) = |1/zeta(1+iat) - sum_{n<=X} mu(n) n^(-1-iat)|. Longer
# polynomials should track 1/zeta(1+iat) more closely on [T, 2T].

# %%
import numpy as np

from zetaratio import build_tables, mollifier_length
from zetaratio.kernel import approx_error_array

table = build_tables(10**5)
rng = np.random.default_rng(0)
ts = rng.uniform(1e4, 2e4, 200)

# %%
for X in (10, 100, 1000, 10**4, 10**5):
    e = approx_error_array(ts, 2.0, X, table)
    print(f"X={X:>6}  median E = {np.median(e):.4f}   90% quantile = {np.quantile(e, 0.9):.4f}")

# %% [markdown]
# The length X = exp((log T)^beta) used in the asymptotic argument:

# %%
for beta in (0.7, 0.8, 0.9):
    print(f"beta={beta}  X(T=1e4) = {mollifier_length(1e4, beta)}")
