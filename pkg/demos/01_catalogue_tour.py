"""Tour of the space catalogue and its self-checking dimension data.

Every entry stores the rank, the dimensions of X, K, and M, and its
positive restricted roots with multiplicities.  Two identities tie the
hand-entered dimensions to the root data, so a transcription error in
either one is impossible to miss:

    dim X = rank + sum of multiplicities
    dim K = dim M + sum of multiplicities
"""

from rootmatch import catalogue, space

print("catalogued spaces:", len(catalogue()))
print()

for s in catalogue():
    total = s.rootsys.total_multiplicity
    assert s.dim_x == s.rank + total
    assert s.dim_k == s.dim_m + total

print("dimension identities hold for every entry")
print()

# The number of selection-matrix columns is dim X - rank.  It is never
# below rank(rank+1)/2, with equality exactly on the SL entries -- the
# tightest spaces for the matching problem.
for s in catalogue():
    bound = s.rank * (s.rank + 1) // 2
    marker = "  <- equality" if s.columns == bound else ""
    if s.rank == 3:
        print(f"{s.name:10s} columns {s.columns:3d}  bound {bound:3d}{marker}")

print()
sl4 = space("SL(4,R)")
print("positive roots of", sl4.name)
for root in sl4.rootsys.positives:
    print("  ", root.coords, "multiplicity", root.multiplicity)
