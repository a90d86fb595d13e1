"""
From hitting sets to simplex faces and back
===========================================

Each element becomes the face of a triangle spanned by the corners whose
subsets miss it.  Elements share a point exactly when they do not hit all
three subsets, and the deepest point of the faces is bounded by the
threshold of the instance.
"""

from convex_depth import (Family, HittingInstance, equivalence_roundtrip_2d,
                          hitting_to_family, min_hitting_set, shallow_family_to_instance_2d)

inst = HittingInstance(6, [[0, 1], [2, 3], [4, 5]])
rf = hitting_to_family(inst, 2)
for x, I in enumerate(rf.index_sets):
    print(f"element {x}: subsets {sorted(I)} -> face {[tuple(map(str, v)) for v in rf.face(x).exact]}")

rep = equivalence_roundtrip_2d(inst, 2)
print(f"depth {rep['max_depth']} of {rep['n']}: ratio {rep['depth_ratio']} <= {rep['bound']}")

# backwards: three far apart segments have no point of depth 2
F = Family([[(-11, -5), (-9, -5)], [(9, -5), (11, -5)], [(-1, 12), (1, 12)]])
back = shallow_family_to_instance_2d(F, 2)
print("subsets from witness halfplanes:", [sorted(A) for A in back.subsets])
print("min hitting set:", sorted(min_hitting_set(back).witness))
