"""Published polynomial families used as verification targets."""

from .polynomial import Polynomial

P = Polynomial

# Barreto-Naehrig, k = 12, D = 3
BN = {
    "k": 12,
    "D": 3,
    "t": P([1, 0, 6]),
    "r": P([1, 6, 18, 36, 36]),
    "q": P([1, 6, 24, 36, 36]),
}

# Miyaji-Nakabayashi-Takano and Freeman sparse families.  The CM equation
# has integral solutions only at special x, so D is per-instance; D = 3 is a
# placeholder for the polynomial check.
MNT3 = {"k": 3, "D": 3, "t": P([-1, 6]), "r": P([1, -6, 12]), "q": P([-1, 0, 12])}
MNT3_ALT = {"k": 3, "D": 3, "t": P([-1, -6]), "r": P([1, 6, 12]), "q": P([-1, 0, 12])}
MNT4 = {"k": 4, "D": 3, "t": P([1, 1]), "r": P([1, 0, 1]), "q": P([1, 1, 1])}
MNT4_ALT = {"k": 4, "D": 3, "t": P([0, -1]), "r": P([2, 2, 1]), "q": P([1, 1, 1])}
MNT6 = {"k": 6, "D": 3, "t": P([1, 2]), "r": P([1, -2, 4]), "q": P([1, 0, 4])}
MNT6_ALT = {"k": 6, "D": 3, "t": P([1, -2]), "r": P([1, 2, 4]), "q": P([1, 0, 4])}
FREEMAN10 = {
    "k": 10,
    "D": 3,
    "t": P([3, 5, 10]),
    "r": P([1, 5, 15, 25, 25]),
    "q": P([3, 10, 25, 25, 25]),
}

PRESETS = {
    "bn": BN,
    "mnt3": MNT3,
    "mnt3-alt": MNT3_ALT,
    "mnt4": MNT4,
    "mnt4-alt": MNT4_ALT,
    "mnt6": MNT6,
    "mnt6-alt": MNT6_ALT,
    "freeman10": FREEMAN10,
}
