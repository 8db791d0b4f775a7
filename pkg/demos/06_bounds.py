"""The numbers behind the counting lower bound.

Slab size k, slab count m and the Chernoff tail are evaluated in log space.
The closed chain form and the direct Chernoff value are printed side by side:
they differ, and the chain is the looser of the two.
"""
from fractions import Fraction

import mpmath

from obsnum import BoundConfig, binomial_tail_exact, chernoff_tail_log, hhat, lemma1_report, wn_lower_bound

tail = chernoff_tail_log(30, Fraction(1, 4), 15)
exact = binomial_tail_exact(30, Fraction(1, 4), 15)
print(f"Pr(Bin(30,1/4) >= 15): exact {float(exact):.3e}, Chernoff bound {float(mpmath.exp(tail.log_bound)):.3e}")

rep = lemma1_report(10 ** 6)
print(f"n=1e6: k={rep.k}, m={rep.m}, ln mu={mpmath.nstr(rep.log_mu, 10)}")
print(f"  chain  {mpmath.nstr(rep.log_prob_chain, 12)}")
print(f"  direct {mpmath.nstr(rep.log_prob_chernoff, 12)}")

for e in (8, 12, 16, 20):
    n = 1 << e
    print(f"n=2^{e}: hhat={hhat(n)}, w(n) bound c=1: {mpmath.nstr(wn_lower_bound(n), 6)}, "
          f"c=32: {mpmath.nstr(wn_lower_bound(n, BoundConfig(c=32)), 6)}")
