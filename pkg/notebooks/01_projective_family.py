# %% [markdown]
# # The projective family
#
# A single quadric |z_1|^2 + ... + |z_m|^2 = 1 cut out of C^m and divided by
# the circle gives CP^{m-1}. Here we push that system through the exact
# pipeline and look at what comes out at each stage.

# %%
from fractions import Fraction

import numpy as np

from toric_lagrangian import build_construction, build_polyhedron, check_delzant, gale_dual, report_text
from toric_lagrangian.quadrics import QuadricSystem, validate

# %% [markdown]
# Conditions (a), (b), (c) for m = 2..6. The lattice data from (c) gives the
# torus rank m - n = 1 and the finite group order 2.

# %%
for m in range(2, 7):
    s = QuadricSystem.from_rows([[1] * m], [1], m)
    v = validate(s)
    lat = v.cond_c.lattice
    print(m, v.passed, "dim Z =", v.smooth_dim_Z, "torus rank", lat.torus_rank, "|D| =", lat.two_group_order)

# %% [markdown]
# Gale dual at m = 3. The normals a_i come out as the standard basis plus
# (-1, -1), so the polyhedron is the standard triangle.

# %%
s = QuadricSystem.from_rows([[1, 1, 1]], [1])
gd = gale_dual(s)
print("a:", gd.a_vectors, " b:", gd.b_offsets)
P = build_polyhedron(gd)
for vert in P.vertices:
    print(vert.point, "active", vert.active_set)

# %% [markdown]
# Every vertex sees two normals with determinant +-1, equal to the covolume
# of the lattice they should generate.

# %%
dz = check_delzant(P)
print("Delzant:", dz.is_delzant, "covolume", dz.lambda_covolume)
for vert in P.vertices:
    M = np.array([gd.a_vectors[i] for i in vert.active_set], dtype=float)
    print(vert.active_set, round(abs(np.linalg.det(M))))

# %% [markdown]
# Pairing with the half-space y_1 + y_2 = 1/2 gives a one-dimensional
# family S, so N is a surface in CP^2.

# %%
rep = build_construction(s, QuadricSystem.from_rows([[1, 1, 0]], [Fraction(1, 2)]))
print(report_text(rep))
