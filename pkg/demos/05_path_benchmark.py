"""
Why the dispatcher exists
=========================

The two routes factor matrices of very different sizes: m x m versus n x n.
For tall tables (many objects, few variables) the n x n route wins by a wide
margin; for wide tables it is the opposite. ``pca_auto`` picks the smaller
eigenproblem. Medians over a few trials keep the comparison honest.
"""

from sympca import benchmark_paths

for m, n in [(400, 8), (8, 400)]:
    report = benchmark_paths(m, n, trials=3)
    print(f"m={m:4d} n={n:4d}:  "
          f"zzt median {report.median_zzt * 1e3:9.2f} ms   "
          f"ztz median {report.median_ztz * 1e3:9.2f} ms   "
          f"auto -> {report.auto_method}")
