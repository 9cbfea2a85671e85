#!/usr/bin/env python3
"""Writes the hand-modelled SAS+ fixtures gripper_small, logistics_small and trap."""
import os

HERE = os.path.dirname(os.path.abspath(__file__))


def write_task(path, variables, init, goal, operators):
    """variables: [(name, [value names])]; operators: [(name, {var: val}, [(var, pre, post)])]."""
    out = ["begin_version", "3", "end_version", "begin_metric", "0", "end_metric",
           str(len(variables))]
    for name, values in variables:
        out += ["begin_variable", name, "-1", str(len(values))] + values + ["end_variable"]
    out += ["0", "begin_state"] + [str(v) for v in init] + ["end_state"]
    out += ["begin_goal", str(len(goal))] + ["%d %d" % g for g in sorted(goal)] + ["end_goal"]
    out.append(str(len(operators)))
    for name, prevail, effects in operators:
        affected = {var for var, _, _ in effects}
        prevails = sorted((v, val) for v, val in prevail.items() if v not in affected)
        out += ["begin_operator", name, str(len(prevails))]
        out += ["%d %d" % p for p in prevails]
        out.append(str(len(effects)))
        for var, pre, post in effects:
            out.append("0 %d %d %d" % (var, pre, post))
        out += ["1", "end_operator"]
    out.append("0")
    with open(os.path.join(HERE, path), "w") as f:
        f.write("\n".join(out) + "\n")


def gripper():
    rooms = ["rooma", "roomb"]
    grippers = ["left", "right"]
    balls = ["ball1", "ball2", "ball3"]
    variables = [("robot", ["Atom at-robby(%s)" % r for r in rooms])]
    ball_var = {}
    for b in balls:
        ball_var[b] = len(variables)
        variables.append((b, ["Atom at(%s, %s)" % (b, r) for r in rooms] +
                          ["Atom carry(%s, %s)" % (b, g) for g in grippers]))
    free_var = {}
    for g in grippers:
        free_var[g] = len(variables)
        variables.append(("free-" + g, ["Atom free(%s)" % g, "NegatedAtom free(%s)" % g]))
    ops = []
    for i, a in enumerate(rooms):
        for j, b in enumerate(rooms):
            if i != j:
                ops.append(("move %s %s" % (a, b), {}, [(0, i, j)]))
    for b in balls:
        for ri, r in enumerate(rooms):
            for gi, g in enumerate(grippers):
                carry = 2 + gi
                ops.append(("pick %s %s %s" % (b, r, g), {0: ri},
                            [(ball_var[b], ri, carry), (free_var[g], 0, 1)]))
                ops.append(("drop %s %s %s" % (b, r, g), {0: ri},
                            [(ball_var[b], carry, ri), (free_var[g], 1, 0)]))
    init = [0] + [0] * len(balls) + [0, 0]
    goal = [(ball_var[b], 1) for b in balls]
    write_task("gripper_small.sas", variables, init, goal, ops)


def logistics():
    locations = ["l1", "l2", "l3", "l4"]
    trucks = {"t1": ["l1", "l2"], "t2": ["l3", "l4"]}
    airports = ["l1", "l3"]
    vehicles = ["t1", "t2", "plane"]
    packages = ["p1", "p2"]
    variables = []
    vehicle_var = {}
    for t, locs in trucks.items():
        vehicle_var[t] = len(variables)
        variables.append((t, ["Atom at(%s, %s)" % (t, l) for l in locs]))
    vehicle_var["plane"] = len(variables)
    variables.append(("plane", ["Atom at(plane, %s)" % l for l in airports]))
    package_var = {}
    for p in packages:
        package_var[p] = len(variables)
        variables.append((p, ["Atom at(%s, %s)" % (p, l) for l in locations] +
                          ["Atom in(%s, %s)" % (p, v) for v in vehicles]))
    reach = dict(trucks)
    reach["plane"] = airports
    ops = []
    for v, locs in reach.items():
        for i, a in enumerate(locs):
            for j, b in enumerate(locs):
                if i != j:
                    ops.append(("drive %s %s %s" % (v, a, b), {}, [(vehicle_var[v], i, j)]))
    for p in packages:
        for vi, v in enumerate(vehicles):
            for li, l in enumerate(reach[v]):
                loc = locations.index(l)
                inside = len(locations) + vi
                pos = {vehicle_var[v]: li}
                ops.append(("load %s %s %s" % (p, v, l), pos, [(package_var[p], loc, inside)]))
                ops.append(("unload %s %s %s" % (p, v, l), pos, [(package_var[p], inside, loc)]))
    init = [0, 0, 0, 0, 1]
    goal = [(package_var["p1"], 3), (package_var["p2"], 1)]
    write_task("logistics_small.sas", variables, init, goal, ops)


def trap():
    # Relaxed-solvable but unsolvable: reaching z needs x=1 and w=1, but s
    # resets w when it sets x, and nothing sets w once x=1.
    variables = [("x", ["Atom x0()", "Atom x1()"]),
                 ("w", ["Atom w0()", "Atom w1()"]),
                 ("z", ["Atom z0()", "Atom z1()"])]
    ops = [("r", {0: 0}, [(1, -1, 1)]),
           ("s", {}, [(0, 0, 1), (1, -1, 0)]),
           ("q", {0: 1, 1: 1}, [(2, -1, 1)])]
    write_task("trap.sas", variables, [0, 0, 0], [(2, 1)], ops)


if __name__ == "__main__":
    gripper()
    logistics()
    trap()
