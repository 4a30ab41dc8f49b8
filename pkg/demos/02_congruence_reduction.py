#!/usr/bin/env python3
# Reduce a random symmetric hollow GF(2) matrix to its canonical block
# diagonal and reconstruct it from the factorization.

import random

from paulicompress import BitMatrix, congruence_reduce, mat_mul

rng = random.Random(7)
d = 8
rows = [0] * d
for i in range(d):
    for j in range(i + 1, d):
        if rng.random() < 0.5:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
m = BitMatrix(d, d, tuple(rows))

print("input (symmetric, zero diagonal):")
print(m)

form = congruence_reduce(m)
print(f"\nzero blocks: {form.iso_count}   antidiagonal pairs: {form.pair_count}")
print(f"so these relations fit on {form.iso_count + form.pair_count} registers")

print("\ncanonical block diagonal D:")
print(form.canonical_matrix())

print("\ntransform T (invertible):")
print(form.transform)

rebuilt = mat_mul(mat_mul(form.transform, form.canonical_matrix()), form.transform.transpose())
print("\nT . D . T^t reproduces the input:", rebuilt == m)
