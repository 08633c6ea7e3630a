# %% [markdown]
# # Mollified main term
#
# With a(h) = mu(n)/n^b at h = n^a, the main term of the mollified second
# moment splits into S1 + S2 + S3. As X grows, the difference of the main
# terms at 2T and T approaches D1 T log T + D0 T.

# %%
import math

from zetaratio import bchb_main_term, build_tables, mollifier_coeffs, theorem_prediction

table = build_tables(10**6)
T, a = 1e4, 2.0
pred = theorem_prediction(T, a, 10**6, table)
print(f"prediction for [T, 2T] at T={T:g}: {pred:.4f}")

# %%
for X in (10, 100, 1000):
    co = mollifier_coeffs(a, X, table)
    lo = bchb_main_term(T, co)
    hi = bchb_main_term(2 * T, co)
    diff = hi.total - lo.total
    print(f"X={X:>5}  S1={lo.S1:12.3f} S2={lo.S2:11.3f} S3={lo.S3:10.3f}   "
          f"M(2T)-M(T)={diff:.4f}  gap/(T log T)={(diff - pred) / (T * math.log(T)):+.2e}")
