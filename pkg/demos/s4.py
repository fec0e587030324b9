"""Galois factorization of S(4) and the null-tetrad Lorentz classes."""

from qnd.symmetry import all_permutations, classify_lorentz, galois_factorize, null_tetrad

tetrad = null_tetrad()
for g in list(all_permutations())[:6]:
    gc, lc = galois_factorize(g), classify_lorentz(g, tetrad)
    print(f"{str(g):>10}  sign={g.sign():+d}  a={gc.a} b={gc.b} c={gc.c}  "
          f"det={lc.det:+.0f} proper={lc.proper}")
