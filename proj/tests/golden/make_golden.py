"""Regenerates the golden exports directly from the order definition.

Independent of the C++ code: level s of P_n has F_s vertices and x <= y
holds iff x == y or level(x) < level(y).
"""
import pathlib


def level_sizes(depth):
    a, b = 1, 1
    sizes = []
    for _ in range(depth):
        sizes.append(a)
        a, b = b, a + b
    return sizes


def vertices(depth):
    return [(s, i) for s, size in enumerate(level_sizes(depth), 1) for i in range(size)]


def zeta_csv(depth):
    vs = vertices(depth)
    rows = []
    for x in vs:
        rows.append(",".join("1" if x == y or x[0] < y[0] else "0" for y in vs))
    return "".join(r + "\n" for r in rows)


def hasse_dot(depth):
    sizes = level_sizes(depth)
    name = lambda s, i: f"v{s}_{i}"
    out = ["digraph cobweb {", "  rankdir=BT;", "  node [shape=circle];"]
    for s, size in enumerate(sizes, 1):
        out.append("  { rank=same;" + "".join(f" {name(s, i)};" for i in range(size)) + " }")
    for s in range(1, depth):
        for i in range(sizes[s - 1]):
            for j in range(sizes[s]):
                out.append(f"  {name(s, i)} -> {name(s + 1, j)};")
    out.append("}")
    return "\n".join(out) + "\n"


if __name__ == "__main__":
    here = pathlib.Path(__file__).parent
    for d in (1, 3, 5):
        (here / f"zeta_p{d}.csv").write_text(zeta_csv(d), newline="")
    for d in (3, 5):
        (here / f"hasse_p{d}.dot").write_text(hasse_dot(d), newline="")
