"""Records of a permutation, the inversion code behind them, and sampling.

Run:  python3 demos/records_and_codes.py
"""

import math
from collections import Counter

from recstats import (
    Permutation,
    lehmer_decode,
    lehmer_encode,
    records,
    sample_uniform_many,
)

# A record is an entry beating everything before it.  In 4,7,5,1,6,8,2,3
# the records are 4, 7 and 8, sitting at positions 1, 2 and 6.
sigma = Permutation.from_string("4,7,5,1,6,8,2,3")
profile = records(sigma)
print(f"permutation      : {sigma}")
print(f"record positions : {profile.positions}")
print(f"rec (count)      : {profile.rec}")
print(f"srec (sum)       : {profile.srec}")

# The code r_i counts earlier entries larger than a_i.  Zeros mark the
# records, and the map is a bijection: decoding returns the permutation.
code = lehmer_encode(sigma)
print(f"\ninversion code   : {code}")
print(f"zero positions   : {tuple(i for i, r in enumerate(code, 1) if r == 0)}")
assert lehmer_decode(code) == sigma

# Because digit r_i is free over {0, ..., i-1}, decoding independent
# uniform digits yields a uniform random permutation, and position k is
# a record with probability exactly 1/k.
n, count = 8, 50_000
hits = Counter()
for p in sample_uniform_many(n, seed=7, count=count):
    hits.update(records(p).positions)
print(f"\nrecord frequency at each position over {count} samples of n={n}:")
for k in range(1, n + 1):
    print(f"  position {k}: observed {hits[k] / count:.4f}   expected {1 / k:.4f}")

# rec and srec of the samples, against the exact distributions coming up
# in exact_tables.py
recs = Counter()
for p in sample_uniform_many(4, seed=11, count=20_000):
    recs[records(p).rec] += 1
print("\nrec distribution for n=4 (exact probabilities are 6,11,6,1 over 24):")
for k in range(1, 5):
    print(f"  P(rec={k}) ~ {recs[k] / 20_000:.4f}   exact {(6, 11, 6, 1)[k - 1] / 24:.4f}")
assert math.isclose(sum(hits.values()) / count, sum(1 / k for k in range(1, n + 1)), rel_tol=0.05)
print("\nok")
