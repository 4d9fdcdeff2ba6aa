"""Hand-assembled vertex-coder inputs, digested with hashlib.

Produces the frozen digests used by vertex_coder_test.cpp. Each tree is
written out by hand rather than generated, so the values do not depend on
the C++ expansion code.
"""
import hashlib


def md5(b):
    return hashlib.md5(b).digest()


def u32(x):
    return x.to_bytes(4, "big")


def label(x):
    return b"\x00" if x is None else b"\x01" + u32(x)


FWD, BWD, UND = u32(1), u32(0), u32(2)

# Isolated vertex: terminal value 1.
iso = md5(u32(1))
print("isolated_vertex", iso.hex())
print("two_isolated_graph", md5(iso + iso).hex())

# K2 undirected, unlabeled. Root 0 -> 1 -> 0 (duplicate at branch index 0).
term = md5(u32(1))
k2_v1 = md5(UND + term)
k2_v0 = md5(UND + k2_v1)
print("k2_vertex", k2_v0.hex())
print("k2_graph", md5(k2_v0 + k2_v0).hex())

# Directed edge 0 -> 1, unlabeled.
root0 = md5(FWD + md5(BWD + md5(u32(1))))
root1 = md5(BWD + md5(FWD + md5(u32(1))))
print("arc_v0", root0.hex())
print("arc_v1", root1.hex())
print("arc_graph", md5(b"".join(sorted([root0, root1]))).hex())

# Same arc with vertex labels 1, 2 and edge label 7, labels hashed.
l_root0 = md5(label(1) + label(7) + FWD
              + md5(label(2) + label(7) + BWD + md5(label(1) + u32(1))))
l_root1 = md5(label(2) + label(7) + BWD
              + md5(label(1) + label(7) + FWD + md5(label(2) + u32(1))))
print("labeled_arc_v0", l_root0.hex())
print("labeled_arc_v1", l_root1.hex())
print("labeled_arc_graph", md5(b"".join(sorted([l_root0, l_root1]))).hex())

# Single vertex with an undirected self-loop: child is the vertex itself,
# found at branch index 0 -> value 1.
loop = md5(UND + md5(u32(1)))
print("self_loop_vertex", loop.hex())

# Boundary lengths for the MD5 padding path.
for n in (55, 56, 63, 64, 65, 119, 120, 1000):
    print(f"md5_a{n}", hashlib.md5(b"a" * n).hexdigest())
