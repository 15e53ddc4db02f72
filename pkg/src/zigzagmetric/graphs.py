"""Finite reflexive directed graphs.

Loops are implicit everywhere: they are never stored, and every vertex
is understood to carry one.  Vertex order is the declaration order and
is the canonical tie-break order throughout.
"""

import itertools
import warnings
from dataclasses import dataclass
from functools import lru_cache

from .words import PLUS, check_word


@dataclass(frozen=True)
class DiGraph:
    vertices: tuple
    arcs: frozenset


class DgParseError(ValueError):
    pass


def digraph(vertices, arcs):
    verts = tuple(dict.fromkeys(vertices))
    vset = set(verts)
    clean = set()
    for a, b in arcs:
        if a == b:
            warnings.warn(f"ignoring explicit loop at {a!r}; loops are implicit")
            continue
        if a not in vset or b not in vset:
            raise ValueError(f"arc ({a!r}, {b!r}) mentions an unknown vertex")
        clean.add((a, b))
    return DiGraph(verts, frozenset(clean))


@lru_cache(maxsize=None)
def zigzag_of_word(u):
    """The oriented zigzag coded by u: vertices 0..len(u), letter i giving
    a forward arc i -> i+1 for + and a backward arc i+1 -> i for -."""
    check_word(u)
    arcs = set()
    for i, c in enumerate(u):
        arcs.add((i, i + 1) if c == PLUS else (i + 1, i))
    return DiGraph(tuple(range(len(u) + 1)), frozenset(arcs))


def is_oriented(g):
    """True iff no two vertices are linked by arcs in both directions."""
    return not any((b, a) in g.arcs for a, b in g.arcs)


def is_acyclic(g):
    """True iff there is no directed cycle on two or more vertices."""
    succ = {v: [] for v in g.vertices}
    for a, b in g.arcs:
        succ[a].append(b)
    state = {v: 0 for v in g.vertices}  # 0 new, 1 on stack, 2 done
    for root in g.vertices:
        if state[root]:
            continue
        stack = [(root, iter(succ[root]))]
        state[root] = 1
        while stack:
            v, it = stack[-1]
            adv = False
            for w in it:
                if state[w] == 1:
                    return False
                if state[w] == 0:
                    state[w] = 1
                    stack.append((w, iter(succ[w])))
                    adv = True
                    break
            if not adv:
                state[v] = 2
                stack.pop()
    return True


def find_directed_cycle(g):
    """One directed cycle as a vertex list, or None."""
    succ = {v: [] for v in g.vertices}
    for a, b in g.arcs:
        succ[a].append(b)
    color = {v: 0 for v in g.vertices}
    parent = {}

    def walk(root):
        stack = [(root, iter(succ[root]))]
        color[root] = 1
        while stack:
            v, it = stack[-1]
            adv = False
            for w in it:
                if color[w] == 1:
                    cycle = [v]
                    while cycle[-1] != w:
                        cycle.append(parent[cycle[-1]])
                    cycle.reverse()
                    return cycle
                if color[w] == 0:
                    color[w] = 1
                    parent[w] = v
                    stack.append((w, iter(succ[w])))
                    adv = True
                    break
            if not adv:
                color[v] = 2
                stack.pop()
        return None

    for root in g.vertices:
        if color[root] == 0:
            found = walk(root)
            if found:
                return found
    return None


def symmetric_components(g):
    """Weakly connected components, as a list of vertex tuples."""
    nbr = {v: set() for v in g.vertices}
    for a, b in g.arcs:
        nbr[a].add(b)
        nbr[b].add(a)
    seen = set()
    comps = []
    for v in g.vertices:
        if v in seen:
            continue
        comp = []
        stack = [v]
        seen.add(v)
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in nbr[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        comps.append(tuple(sorted(comp, key=g.vertices.index)))
    return comps


def induced_subgraph(g, keep):
    keep = [v for v in g.vertices if v in set(keep)]
    kset = set(keep)
    return DiGraph(
        tuple(keep),
        frozenset((a, b) for a, b in g.arcs if a in kset and b in kset),
    )


def product_graph(graphs):
    """Direct product: an arc between distinct tuples iff every coordinate
    pair is an arc or equal (implicit loops acting coordinatewise)."""
    if not graphs:
        raise ValueError("product of no graphs")
    verts = list(itertools.product(*(g.vertices for g in graphs)))
    arcs = set()
    for xs in verts:
        for ys in verts:
            if xs == ys:
                continue
            if all(
                x == y or (x, y) in g.arcs
                for g, x, y in zip(graphs, xs, ys)
            ):
                arcs.add((xs, ys))
    return DiGraph(tuple(verts), frozenset(arcs))


def parse_dg(text):
    """Parse the .dg format: one arc 'x y' per line, '#' comments, and an
    optional 'vertices: a b c' header declaring isolated vertices."""
    verts = []
    arcs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("vertices:"):
            verts.extend(line[len("vertices:"):].split())
            continue
        parts = line.split()
        if len(parts) != 2:
            raise DgParseError(
                f"line {lineno}: expected 'x y' arc, got {raw.rstrip()!r}"
            )
        a, b = parts
        for v in (a, b):
            if v not in verts:
                verts.append(v)
        if a == b:
            raise DgParseError(
                f"line {lineno}: loop arc {a!r} {b!r}; loops are implicit"
            )
        arcs.append((a, b))
    return digraph(verts, arcs)


def format_dg(g):
    lines = []
    isolated = [
        v for v in g.vertices if not any(v in ab for ab in g.arcs)
    ]
    if isolated:
        lines.append("vertices: " + " ".join(str(v) for v in isolated))
    for a, b in sorted(g.arcs, key=lambda ab: (g.vertices.index(ab[0]), g.vertices.index(ab[1]))):
        lines.append(f"{a} {b}")
    return "\n".join(lines) + "\n"


def fresh_names(g, base, count):
    """count new vertex names derived from base, avoiding clashes."""
    taken = set(g.vertices)
    out = []
    i = 0
    while len(out) < count:
        name = f"{base}{i}"
        while name in taken:
            name = "_" + name
        taken.add(name)
        out.append(name)
        i += 1
    return out
