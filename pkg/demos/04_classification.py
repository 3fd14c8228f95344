"""Group decreasing trees by the isomorphism type of their cross-sections."""

from ordcross import classify, enumerate_decreasing, oracle_semigroup_iso, phi_semigroup

n = 5
trees = enumerate_decreasing(n)
classes = []
for t in trees:
    for cls in classes:
        if classify(cls[0], t).isomorphic:
            cls.append(t)
            break
    else:
        classes.append([t])
print(f"{len(trees)} decreasing trees on {n} points fall into {len(classes)} classes")
for cls in classes:
    print(" ", len(cls), "x root", [t.root for t in cls])

# spot-check the verdicts against a search over multiplication tables
a, b = classes[0][0], classes[0][-1]
f = oracle_semigroup_iso(phi_semigroup(a).element_set(), phi_semigroup(b).element_set())
print("\nsearch finds an isomorphism:", f is not None)
print(classify(a, b).to_json())
