#!/usr/bin/env python3
"""Detail tables for the convergence studies (supplement to reference_values.py)."""

import mpmath as mp
from reference_values import balance, exponent_c, ols_r2

mp.mp.prec = 600

for p in (2, 5):
    ks = list(range(2, 11))
    eps = []
    for k in ks:
        a, e = balance(p, k, tol=mp.mpf("1e-20"))
        eps.append(e)
        print(f"p={p} k={k}: alpha={mp.nstr(a, 25)} eps={mp.nstr(e, 25)}")
    c = exponent_c(p)
    xs = [mp.mpf(p) ** (c * k) for k in ks]
    ys = [mp.log(e) for e in eps]
    slope, intercept, r2 = ols_r2(xs, ys)
    print(f"p={p}: fit slope={mp.nstr(slope,12)} intercept={mp.nstr(intercept,12)} r2={mp.nstr(r2,12)}")

    lls = [mp.log(mp.log(1 / e)) for e in eps]
    s2, i2, r2b = ols_r2([mp.mpf(k) for k in ks], lls)
    resid = [y - (s2 * k + i2) for k, y in zip(ks, lls)]
    maxrel = max(abs(r) / abs(y) for r, y in zip(resid, lls))
    rng = max(lls) - min(lls)
    nrmse = mp.sqrt(sum(r * r for r in resid) / len(resid)) / rng
    maxrng = max(abs(r) for r in resid) / rng
    print(f"p={p}: loglog slope={mp.nstr(s2,10)} r2={mp.nstr(r2b,10)} "
          f"maxrel={mp.nstr(maxrel,6)} nrmse_range={mp.nstr(nrmse,6)} maxabs/range={mp.nstr(maxrng,6)}")
    for i in range(1, len(eps)):
        ratio = mp.log(eps[i]) / mp.log(eps[i - 1])
        print(f"  k={ks[i-1]}->{ks[i]}: log eps ratio = {mp.nstr(ratio, 8)}")
