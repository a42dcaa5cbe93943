"""Regenerate src/spantrees/golden/*.json from the hand-transcribed factored forms below.

Coefficient lists are written in DESCENDING degree order, exactly as the
expressions are usually typeset; the JSON files store ascending order.

    python tools/build_golden.py
"""
import json
from pathlib import Path

from spantrees import poly

OUT = Path(__file__).resolve().parent.parent / "src" / "spantrees" / "golden"

T_PLUS_1 = [1, 1]
T_MINUS_1 = [1, -1]
Q2 = [1, -3, 1]
Q3A = [1, 3, 6, 3, 1]
Q3B = [1, -4, -1, -4, 1]
Q4A = [1, -3, 6, -10, 6, -3, 1]
Q4B = [1, -4, -17, 8, 49, 8, -17, -4, 1]
Q4C = [1, 3, 12, 28, -27, 36, -81, 36, -27, 28, 12, 3, 1]
Q5A = [1, 3, 6, 10, 15, 10, 6, 3, 1]
Q5B = [1, 3, 6, -1, 15, -1, 6, 3, 1]
Q5C = [1, -5, 10, -10, -28, 10, 110, 110, 88, 110, 110, 10, -28, -10, 10, -5, 1]
Q5D = [1, -5, -23, -10, -94, -485, 242, 110, 649, 110, 242, -485, -94, -10, -23, -5, 1]
Q5E = [
    1, 1, 12, 45, 45, -1561, 3917, -3222, -3981, 7745, 26379, -88937, 84093, 63864, -153881,
    -202281, 550163, -202281, -153881, 63864, 84093, -88937, 26379, 7745, -3981, -3222, 3917,
    -1561, 45, 45, 12, 1, 1,
]

N3 = [
    -3072, 11683, 26868, 60636, -356682, -844329, -1651344, -104646, 813834, 3128248,
    1452330, 512250, -1392528, -1049445, -579514, -54068, 15716, 16807,
]
A3 = [
    -8820, 51390, 61812, 2088, -2539950, -2981160, 2492784, 45845688, 83018808, 107694630,
    -44892840, -166389300, -333210654, -121438506, 42702660, 312824052, 213402930, 100784592,
    -77616756, -90041700, -62209728, -13836186, 276924, 2761596, 501534, 32592, -54432,
]
M4 = [-125, 859, -13, -3141, 3475, -5968, -11312, 36080, -5597, -7893, 2435, -2741, -413, 864]

# (file stem, family, params, quantity, start_n, numerator (descending) or None, [(factor, power)])
ENTRIES = [
    ("cycle_power_r2_trees", "cycle-power", {"r": 2}, "trees", 5,
     [-36, 132, 46, -353, -116, 125], [(T_PLUS_1, 2), (Q2, 2)]),
    ("cycle_power_r3_trees", "cycle-power", {"r": 3}, "trees", 7,
     N3, [(T_MINUS_1, 2), (Q3A, 2), (Q3B, 2)]),
    ("cycle_power_r4_trees", "cycle-power", {"r": 4}, "trees", 9,
     None, [(T_PLUS_1, 2), (Q4A, 2), (Q4B, 2), (Q4C, 2)]),
    ("cycle_power_r5_trees", "cycle-power", {"r": 5}, "trees", 11,
     None, [(T_MINUS_1, 2), (Q5A, 2), (Q5B, 2), (Q5C, 2), (Q5D, 2), (Q5E, 2)]),
    ("cycle_power_r2_leaves", "cycle-power", {"r": 2}, "leaves", 5,
     [-8 * c for c in [10, -67, 109, 99, -282, -30, 145, -40]], [(T_PLUS_1, 2), (Q2, 3)]),
    ("cycle_power_r3_leaves", "cycle-power", {"r": 3}, "leaves", 7,
     A3, [(T_MINUS_1, 3), (Q3A, 3), (Q3B, 3)]),
    ("cycle_power_r4_leaves", "cycle-power", {"r": 4}, "leaves", 9,
     None, [(T_PLUS_1, 3), (Q4A, 3), (Q4B, 3), (Q4C, 3)]),
    ("path_power_r2_trees", "path-power", {"r": 2}, "trees", 4,
     [-3, 8], [(Q2, 1)]),
    ("path_power_r3_trees", "path-power", {"r": 3}, "trees", 5,
     [-16, 77, -33, 39, -75], [(T_MINUS_1, 1), (Q3B, 1)]),
    ("path_power_r4_trees", "path-power", {"r": 4}, "trees", 6,
     M4, [(Q4A, 1), (Q4B, 1)]),
    ("path_power_r5_trees", "path-power", {"r": 5}, "trees", 7,
     None, [(T_MINUS_1, 1), (Q5B, 1), (Q5C, 1), (Q5D, 1)]),
    ("path_power_r2_leaves", "path-power", {"r": 2}, "leaves", 4,
     [-2 * c for c in [2, -15, 27, -9]], [(Q2, 2)]),
    ("path_power_r3_leaves", "path-power", {"r": 3}, "leaves", 5,
     [2 * c for c in [16, -154, 403, -340, 963, -768, 1109, -788, 509, -470, 96]],
     [(T_MINUS_1, 2), (Q3B, 2)]),
    ("path_power_r4_leaves", "path-power", {"r": 4}, "leaves", 6,
     None, [(Q4A, 2), (Q4B, 2)]),
]


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for stem, family, params, quantity, start_n, num, factors in ENTRIES:
        asc_factors = [(poly.from_descending(f), e) for f, e in factors]
        den = poly.product(asc_factors)
        record = {
            "family": family,
            "params": params,
            "quantity": quantity,
            "start_n": start_n,
            "num": None if num is None else [str(c) for c in poly.from_descending(num)],
            "den": [str(c) for c in den],
            "den_factors": [{"coeffs": [str(c) for c in f], "power": e} for f, e in asc_factors],
        }
        (OUT / f"{stem}.json").write_text(json.dumps(record, indent=1) + "\n")
        print("wrote", stem)


if __name__ == "__main__":
    main()
