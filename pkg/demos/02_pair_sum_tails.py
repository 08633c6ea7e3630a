# %% [markdown]
# # Square-free pair sums and their tails
#
# Truncating the double sum over square-free m, n at X gives a finite
# approximation to D1(a) (plain) or D0~(a) (log-ratio). This demo measures
# how fast the truncation error R(X) shrinks.

# %%
import numpy as np

from zetaratio import build_tables, d0_tilde, d1, pair_sum, tail_fit

table = build_tables(2**16)
grid = [2**k for k in range(4, 13)]

# %% [markdown]
# ## Truncated sums next to the Euler products

# %%
for a in (1, 2, 3):
    s = pair_sum(a, 4096, "plain", table).value
    l = pair_sum(a, 4096, "log-ratio", table).value
    print(f"a={a}  plain {s:.8f} vs D1 {d1(a, 60000, table).value:.8f}   "
          f"log-ratio {l:.8f} vs D0~ {d0_tilde(a, 60000, table).value:.8f}")

# %% [markdown]
# ## Fitted decay
#
# The residual is measured against a reference cutoff of 2^16. For a = 1
# X R(X) stays roughly flat: the tail falls like 1/X, faster than the
# X^(-1/2) upper bound.

# %%
for a in (1, 2, 3):
    for variant in ("plain", "log-ratio"):
        fit = tail_fit(a, variant, grid, 2**16, table)
        xr = np.array(fit.residuals) * np.array(fit.X_grid)
        print(f"a={a} {variant:<9} slope {fit.slope:+.3f} +- {fit.slope_stderr:.3f}   "
              f"X R(X) from {xr[0]:.3f} to {xr[-1]:.3f}")
