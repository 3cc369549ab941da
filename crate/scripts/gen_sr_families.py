"""Generate strongly regular graph families as graph6 files.

SRG(16,6,2,2): the 4x4 rook's graph and the Shrikhande graph.
SRG(25,12,5,6): closure of Paley(25) and the Latin square graphs of order 5
under Seidel-switching descendants, Godsil-McKay switching and complementation.
SRG(35,16,6,8): complements of block graphs of random Steiner triple systems
of order 15 (a subset of the full family).

Isomorphism classes are deduplicated with nauty canonical labelling.
"""
import itertools
import random
import sys

import networkx as nx
import pynauty


def canon(adj):
    n = len(adj)
    g = pynauty.Graph(n, adjacency_dict={v: sorted(adj[v]) for v in range(n)})
    return pynauty.certificate(g)


def to_adj(n, edges):
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def srg_params(adj):
    n = len(adj)
    degs = {len(a) for a in adj}
    if len(degs) != 1:
        return None
    k = degs.pop()
    lam, mu = set(), set()
    for u in range(n):
        for v in range(u + 1, n):
            c = len(adj[u] & adj[v])
            (lam if v in adj[u] else mu).add(c)
    if len(lam) > 1 or len(mu) > 1:
        return None
    return (n, k, lam.pop() if lam else 0, mu.pop() if mu else 0)


def graph6(adj):
    n = len(adj)
    assert n < 63
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if j in adj[i] else 0)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


def complement(adj):
    n = len(adj)
    return [set(range(n)) - adj[v] - {v} for v in range(n)]


def rook(m):
    cells = [(r, c) for r in range(m) for c in range(m)]
    adj = [set() for _ in cells]
    for i, (a, b) in enumerate(cells):
        for j, (c, d) in enumerate(cells):
            if i != j and (a == c or b == d):
                adj[i].add(j)
    return adj


def shrikhande():
    cells = [(a, b) for a in range(4) for b in range(4)]
    conn = {(0, 1), (0, 3), (1, 0), (3, 0), (1, 1), (3, 3)}
    adj = [set() for _ in cells]
    for i, (a, b) in enumerate(cells):
        for j, (c, d) in enumerate(cells):
            if ((c - a) % 4, (d - b) % 4) in conn:
                adj[i].add(j)
    return adj


def paley25():
    # GF(25) = GF(5)[x]/(x^2 - 2)
    elems = [(a, b) for a in range(5) for b in range(5)]

    def mul(p, q):
        a, b = p
        c, d = q
        return ((a * c + 2 * b * d) % 5, (a * d + b * c) % 5)

    squares = {mul(e, e) for e in elems if e != (0, 0)}
    adj = [set() for _ in elems]
    for i, (a, b) in enumerate(elems):
        for j, (c, d) in enumerate(elems):
            if i != j and ((a - c) % 5, (b - d) % 5) in squares:
                adj[i].add(j)
    return adj


def latin_square_graph(sq):
    m = len(sq)
    cells = [(r, c) for r in range(m) for c in range(m)]
    adj = [set() for _ in cells]
    for i, (a, b) in enumerate(cells):
        for j, (c, d) in enumerate(cells):
            if i != j and (a == c or b == d or sq[a][b] == sq[c][d]):
                adj[i].add(j)
    return adj


def descendants(adj):
    """Seidel-switch G + isolated vertex so that each vertex becomes isolated."""
    return isolate_each(adj + [set()])


def isolate_each(big):
    """All graphs obtained by Seidel switching one vertex to isolation and deleting it."""
    n = len(big) - 1
    out = []
    for w in range(n + 1):
        switch = big[w]
        new = [set(a) for a in big]
        for u in switch:
            for v in range(n + 1):
                if v == u or v in switch:
                    continue
                if v in new[u]:
                    new[u].discard(v)
                    new[v].discard(u)
                else:
                    new[u].add(v)
                    new[v].add(u)
        assert not new[w]
        keep = [v for v in range(n + 1) if v != w]
        idx = {v: i for i, v in enumerate(keep)}
        out.append([{idx[x] for x in new[v]} for v in keep])
    return out


def gm_switchings(adj):
    """Godsil-McKay switchings on 4-sets inducing a regular subgraph."""
    n = len(adj)
    out = []
    for d in itertools.combinations(range(n), 4):
        ds = set(d)
        if len({len(adj[x] & ds) for x in d}) != 1:
            continue
        halves = []
        ok = True
        for v in range(n):
            if v in ds:
                continue
            m = len(adj[v] & ds)
            if m not in (0, 2, 4):
                ok = False
                break
            if m == 2:
                halves.append(v)
        if not ok or not halves:
            continue
        new = [set(a) for a in adj]
        for v in halves:
            for x in d:
                if x in new[v]:
                    new[v].discard(x)
                    new[x].discard(v)
                else:
                    new[v].add(x)
                    new[x].add(v)
        out.append(new)
    return out


def closure(seeds, params, ops):
    found = {}
    frontier = list(seeds)
    while frontier:
        g = frontier.pop()
        if srg_params(g) != params:
            continue
        c = canon(g)
        if c in found:
            continue
        found[c] = g
        for op in ops:
            frontier.extend(op(g))
    return found


def sr16622():
    found = closure([rook(4), shrikhande()], (16, 6, 2, 2), [])
    return sorted(found.values(), key=graph6)


def sr251256():
    cyclic = [[(r + c) % 5 for c in range(5)] for r in range(5)]
    # representative of the main class of order-5 Latin squares without an orthogonal mate
    other = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ]
    seeds = [paley25(), latin_square_graph(cyclic), latin_square_graph(other)]
    # complements of STS(13) block graphs are SRG(26,10,3,4) in regular two-graphs on 26 points
    rng = random.Random(13)
    for _ in range(40):
        g = complement(block_graph(random_sts(13, rng)))
        seeds.extend(isolate_each(g))
    found = closure(seeds, (25, 12, 5, 6), [descendants, gm_switchings, lambda g: [complement(g)]])
    return sorted(found.values(), key=graph6)


def random_sts(v, rng):
    """Stinson's hill-climbing for STS(v)."""
    need = {x: set(range(v)) - {x} for x in range(v)}
    block_of = {}
    blocks = set()
    target = v * (v - 1) // 6
    while len(blocks) < target:
        live = [x for x in range(v) if need[x]]
        x = rng.choice(live)
        y, z = rng.sample(sorted(need[x]), 2)
        pair = frozenset((y, z))
        if pair in block_of:
            old = block_of.pop(pair)
            blocks.discard(old)
            for a, b in itertools.combinations(old, 2):
                p = frozenset((a, b))
                if p != pair:
                    block_of.pop(p, None)
                need[a].add(b)
                need[b].add(a)
            need[y].add(z)
            need[z].add(y)
        blk = frozenset((x, y, z))
        blocks.add(blk)
        for a, b in itertools.combinations(blk, 2):
            block_of[frozenset((a, b))] = blk
            need[a].discard(b)
            need[b].discard(a)
    return sorted(tuple(sorted(b)) for b in blocks)


def block_graph(blocks):
    adj = [set() for _ in blocks]
    for i, a in enumerate(blocks):
        for j, b in enumerate(blocks):
            if i != j and set(a) & set(b):
                adj[i].add(j)
    return adj


def sr351668(count, seed=1668):
    rng = random.Random(seed)
    found = {}
    order = []
    tries = 0
    while len(order) < count and tries < 200000:
        tries += 1
        blocks = random_sts(15, rng)
        g = complement(block_graph(blocks))
        if srg_params(g) != (35, 16, 6, 8):
            continue
        c = canon(g)
        if c not in found:
            found[c] = g
            order.append(g)
    return order


def write(path, graphs):
    with open(path, "w") as f:
        for g in graphs:
            f.write(graph6(g) + "\n")
    print(path, len(graphs), file=sys.stderr)


if __name__ == "__main__":
    out = sys.argv[1] if len(sys.argv) > 1 else "."
    write(f"{out}/sr16622.g6", sr16622())
    write(f"{out}/sr251256.g6", sr251256())
    write(f"{out}/sr351668_sample.g6", sr351668(50))
