#!/usr/bin/env python3
"""Writes fixtures/feeder123.json: a 123-node radial feeder split into
7 islands by 6 switch lines, loosely following the layout of the IEEE
123-node test feeder (source bus 150, long main trunk, lateral branches).

The output is deterministic; rerun only if the layout below changes."""

import json
import random
import sys

# island -> (parent island, node count). Island 0 holds the source.
ISLANDS = {
    0: (None, 24),
    1: (0, 20),
    2: (0, 16),
    3: (1, 18),
    4: (1, 15),
    5: (2, 14),
    6: (4, 16),
}


def main(path):
    rng = random.Random(123)
    assert sum(n for _, n in ISLANDS.values()) == 123
    nodes, lines = [], []
    members = {}
    next_id = 1

    def new_node():
        nonlocal next_id
        nid = str(next_id)
        next_id += 1
        nodes.append({"id": nid, "weight": rng.choice([0, 0, 5, 10, 20, 40])})
        return nid

    def add_line(u, v, is_switch):
        damaged = is_switch or rng.random() < 0.35
        lines.append({"id": "L%03d" % (len(lines) + 1), "from": u, "to": v,
                      "repair_time": rng.randint(1, 8) if damaged else 0,
                      "switch": is_switch})

    for isl, (parent, count) in ISLANDS.items():
        if parent is None:
            first = "150"
            nodes.append({"id": first, "weight": 0})
            count -= 1
        else:
            first = new_node()
            anchor = rng.choice(members[parent])
            add_line(anchor, first, True)
            count -= 1
        members[isl] = [first]
        trunk = first
        for _ in range(count):
            v = new_node()
            # Mostly extend the trunk, sometimes branch off an earlier node.
            u = trunk if rng.random() < 0.6 else rng.choice(members[isl])
            add_line(u, v, False)
            members[isl].append(v)
            if u == trunk:
                trunk = v

    doc = {"root": "150", "crews": 3, "nodes": nodes, "lines": lines}
    with open(path, "w") as f:
        json.dump(doc, f, indent=1)
        f.write("\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "fixtures/feeder123.json")
