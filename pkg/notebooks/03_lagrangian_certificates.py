# %% [markdown]
# # Numerical certificates
#
# N lifts to j(R x T_Gamma x T_Delta) in C^m. At a sample point the frame is
# the real directions tangent to the quadrics plus one torus direction per
# row. N is Lagrangian iff every pair in the frame has zero standard
# symplectic pairing Im <v, w>.

# %%
from fractions import Fraction

import numpy as np

from toric_lagrangian import certify, sample_points, stack, tangent_frame, verify_batch
from toric_lagrangian.quadrics import QuadricSystem

Q, E = QuadricSystem.from_rows, QuadricSystem.empty
docs = {
    "circle pair in C^2": (E(2), Q([[1, 1]], [1])),
    "CP^2 with a strip": (Q([[1, 1, 1]], [1]), Q([[1, 1, 0]], [Fraction(1, 2)])),
    "real points of CP^2": (Q([[1, 1, 1]], [1]), E(3)),
}

# %%
for name, (g, d) in docs.items():
    s = verify_batch(g, d, count=500, seed=1)
    print(f"{name:22s} pass {s.pass_fraction:.3f}  worst pairing {s.worst_pairing:.1e}  worst ratio {s.worst_rank_ratio:.3f}")

# %% [markdown]
# A look at one frame for the middle example.

# %%
g, d = docs["CP^2 with a strip"]
st = stack(g, d)
p = sample_points(st, 1, seed=3, gamma_rows=1)[0]
frame = tangent_frame(p, st)
np.set_printoptions(precision=3, suppress=True)
print("y =", [str(v) for v in p.y])
print(frame)
unit = frame / np.linalg.norm(frame, axis=1, keepdims=True)
print("pairings:\n", np.imag(np.conj(unit) @ unit.T))

# %% [markdown]
# Negative control. Rotating one torus vector by i breaks isotropy here, since
# the frame has other directions for it to pair with.

# %%
bad = frame.copy()
bad[1] = 1j * bad[1]
c = certify(p, bad)
print(c.lagrangian_pass, c.max_symplectic_pairing)

# %% [markdown]
# In C^2 with one quadric the same corruption goes unnoticed. Both frame
# vectors lie in e^{i theta} R^2, and rotating the torus vector keeps it in
# that plane, which is itself Lagrangian.

# %%
g, d = docs["circle pair in C^2"]
st = stack(g, d)
p = sample_points(st, 1, seed=1)[0]
frame = tangent_frame(p, st)
frame[1] = 1j * frame[1]
c = certify(p, frame)
print(c.lagrangian_pass, c.max_symplectic_pairing)
