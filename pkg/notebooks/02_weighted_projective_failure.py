# %% [markdown]
# # When the Delzant test fails
#
# Change one weight: |z_1|^2 + |z_2|^2 + 2|z_3|^2 = 1. The quotient is the
# weighted projective plane CP^2(1,1,2), which has an orbifold point. The
# exact pipeline should find exactly one bad corner.

# %%
from fractions import Fraction

from toric_lagrangian import build_construction, build_polyhedron, embedding_criterion, gale_dual, report_text
from toric_lagrangian.quadrics import QuadricSystem

s = QuadricSystem.from_rows([[1, 1, 2]], [1])

# %%
gd = gale_dual(s)
print("a:", gd.a_vectors)
print("b:", gd.b_offsets)
P = build_polyhedron(gd)
print("simple:", P.is_simple, "bounded:", P.is_bounded)
for v in P.vertices:
    print(v.point, v.active_set)

# %% [markdown]
# Conditions (a)-(c) all pass, so Z is smooth. What fails is that the two
# normals at (-1, 1/2) span an index-2 sublattice.

# %%
verdict = embedding_criterion(s)
print("Delzant:", verdict.is_delzant)
for f in verdict.failures:
    print(f"vertex {f.point}: normals {f.normals}, |det| = {f.abs_det}, ratio = {f.ratio}")

# %% [markdown]
# The construction refuses the pair, whatever Delta is.

# %%
rep = build_construction(s, QuadricSystem.from_rows([[1, 1, 0]], [Fraction(1, 2)]))
print(report_text(rep))
