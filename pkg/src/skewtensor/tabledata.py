"""Expected summand multisets and quasi-polynomial fits for verification.

Shape text maps to the sorted dimension multiset of the indecomposable
summands of V (x) V* over the minimal alpha(r, s) for that shape.  The
quasi-polynomial rows give (period, polynomial per residue class, lowest
degree first) for the tensor-power dimension sequence P_V(n).
"""

DIM3_MULTISETS = {
    "1,1,1": [1, 4, 4],
    "2,1": [1, 4, 4],
}

DIM5_MULTISETS = {
    "3,1,1": [1, 12, 12],
    "4,2/1": [1, 12, 12],
    "3,3,1/2": [1, 12, 12],
    "4,1": [1, 4, 4, 8, 8],
    "3,2": [1, 4, 4, 8, 8],
    "5": [1, 4, 4, 8, 8],
    "3,2,1/1": [1, 4, 4, 4, 4, 4, 4],
}

DIM7_MULTISETS = {
    "5,1,1": [1, 4, 4, 20, 20],
    "6,2/1": [1, 4, 4, 20, 20],
    "4,2,2/1": [1, 4, 4, 20, 20],
    "5,2,2/1,1": [1, 4, 4, 20, 20],
    "5,3,2/2,1": [1, 4, 4, 20, 20],
    "5,5,1/4": [1, 4, 4, 20, 20],
    "4,4,2,1/3,1": [1, 4, 4, 20, 20],
    "6,1": [1, 8, 8, 16, 16],
    "3,3,1": [1, 8, 8, 16, 16],
    "4,3,1/1": [1, 8, 8, 16, 16],
    "5,4,1/3": [1, 8, 8, 16, 16],
    "5,4,2/3,1": [1, 8, 8, 16, 16],
    "4,2,1,1/1": [1, 24, 24],
    "5,3,1/2": [1, 24, 24],
    "4,3,1,1/2": [1, 24, 24],
    "4,4,1,1/3": [1, 24, 24],
    "5,3,3/2,2": [1, 24, 24],
    "5,2": [1, 48],
    "4,2,1": [1, 48],
    "3,3,2/1": [1, 48],
    "4,3,3,1/2,2": [1, 48],
    "7": [1, 8, 8, 8, 8, 8, 8],
    "5,3/1": [1, 8, 8, 8, 8, 8, 8],
    "4,4,1/2": [1, 8, 8, 8, 8, 8, 8],
    "4,3": [1, 8, 8, 8, 8, 8, 8],
    "5,2,1/1": [1, 4, 4, 4, 4, 8, 8, 8, 8],
    "6,3/2": [1, 4, 4, 4, 4, 8, 8, 8, 8],
    "4,3,2/2": [1, 4, 4, 4, 4, 8, 8, 8, 8],
    "4,1,1,1": [1, 4, 4, 4, 4, 16, 16],
    "4,3,2/1,1": [1, 4, 4, 40],
    "4,3,2,1/2,1": [1, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4],
}

# Closed forms established exactly (not just fitted) for specific shapes:
# (shape text, (r, s), period, polys by residue class, lowest degree first).
COROLLARY_FITS = [
    ("4,1", (1, 2), 1, ((1, 4),)),
    ("3,1,1", (2, 2), 2, ((1, 6), (-5, 10))),
    ("4,2/1", (1, 2), 2, ((1, 6), (-1, 6))),
    ("6,1", (1, 3), 1, ((1, 4, 2),)),
    ("2,1", (1, 1), 1, ((1, 2),)),
    ("3,2,1/1", (1, 1), 1, ((1, 4),)),
    ("4,3,2,1/2,1", (1, 1), 1, ((1, 6),)),
]

# Conjectured fits reported from computational evidence (n <= 8 suffices).
TABLE12_SUBSET = [
    ("3,2", (1, 2), 2, ((1, 6), (-5, 10))),
    ("4,3", (1, 2), 2, ((1, 4), (3, 4))),
    ("4,1,1,1", (2, 2), 2, ((1, 8), (-1, 8))),
    ("5,2,1/1", (1, 2), 1, ((1, 6),)),
    ("5,4,1/1", (1, 2), 1, ((1, 8),)),
]
