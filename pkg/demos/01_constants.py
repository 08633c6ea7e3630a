# %% [markdown]
# # Euler-product constants
#
# D1(a) and D0(a) set the size of the ratio moment. Each value comes with
# a prime cutoff P and a certified bound on what the primes above P can
# still change. At a = 2 both have closed forms in zeta(2) and zeta'(2).

# %%
import math

from zetaratio import build_tables, d0, d0_tilde, d1
from zetaratio.kernel import zeta, zeta_deriv_real

P = 10**6
table = build_tables(P)

# %% [markdown]
# ## a = 2 against the closed forms

# %%
z2 = float(zeta(2).real)
dz2 = float(zeta_deriv_real(2))
v1 = d1(2, P, table)
vt = d0_tilde(2, P, table)
print(f"D1(2)  = {v1.value:.12f} +- {v1.tail_bound:.1e}   1/zeta(2)            = {1 / z2:.12f}")
print(f"D0~(2) = {vt.value:.12f} +- {vt.tail_bound:.1e}   -4 zeta'(2)/zeta(2)^2 = {-4 * dz2 / z2**2:.12f}")
print(f"D0(2)  = {d0(2, P, table).value:.12f}")

# %% [markdown]
# ## Growth in a
#
# D1 increases with a toward zeta(2)/zeta(4). Convergence is slow: the
# p = 2 factor alone keeps D1(30) about 4e-5 below the limit.

# %%
limit = z2 / (math.pi**4 / 90)
for a in (1, 2, 3, 4, 6, 8, 12, 20, 30):
    v = d1(a, P, table)
    print(f"a={a:>2}  D1 = {v.value:.10f}   limit - D1 = {limit - v.value:.3e}")
