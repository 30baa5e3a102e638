"""The two Mamdani gates that drive the adaptive second phase.

S-Dive scores static diversity from entropy and the requested security
level; D-Dive scores dynamic diversity from the differential metrics.
Low scores trigger more encryption work, high scores stop it.
"""

from acfz import fis

fis1 = fis.fis1_default()
fis2 = fis.fis2_default()

print("FIS1 rules:")
for rule in fis1.rules:
    ant = " AND ".join(f"{v} IS {t}" for v, t in rule.antecedents)
    print(f"  IF {ant} THEN {rule.consequent[0]} IS {rule.consequent[1]}")

print("\nS-Dive over entropy (SEC=80):")
for entropy in (0.0, 2.0, 4.0, 6.0, 7.0, 7.9, 8.0):
    s = fis.evaluate(fis1, {"Entropy": entropy, "SEC": 80.0})
    gate = "-> run AES stage" if s < 0.5 else "-> skip AES stage"
    print(f"  entropy={entropy:4.1f}  S-Dive={s:.4f}  {gate}")

print("\nFIS2 rules:")
for rule in fis2.rules:
    ant = " AND ".join(f"{v} IS {t}" for v, t in rule.antecedents)
    print(f"  IF {ant} THEN {rule.consequent[0]} IS {rule.consequent[1]}")

print("\nD-Dive at interesting operating points:")
points = [
    ("no diversity yet, SEC=100", {"UACI": 0.0, "NPCR": 0.0, "SEC": 100.0}),
    ("no diversity yet, SEC=0", {"UACI": 0.0, "NPCR": 0.0, "SEC": 0.0}),
    ("ideal avalanche, SEC=100", {"UACI": 33.5, "NPCR": 99.6, "SEC": 100.0}),
    ("half-diffused, SEC=80", {"UACI": 16.0, "NPCR": 50.0, "SEC": 80.0}),
]
for label, values in points:
    d = fis.evaluate(fis2, values)
    gate = "-> keep XOR-ing" if d < 0.5 else "-> stop"
    print(f"  {label:28s} D-Dive={d:.4f}  {gate}")

# The config file format round-trips, so gates are tunable per run.
text = fis.dump_fis_config(fis1)
print("\nFIS1 as a config document:\n")
print("\n".join("  " + line for line in text.strip().splitlines()))
assert fis.load_fis_config(text) == fis1
