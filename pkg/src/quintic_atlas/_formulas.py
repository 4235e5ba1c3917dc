"""Monomial tables for the closed-form quintic quantities.

Every table is a tuple of ``(coefficient, (i, j, k, l, m))`` entries standing for
``coefficient * p**i * q**j * r**k * s**l * t**m``; a table may carry a positive
integer denominator in ``DENOMINATORS``. All tables are weighted-homogeneous with
weights (1, 2, 3, 4, 5) on (p, q, r, s, t); ``invariants`` checks this at import.
"""

# discriminant of the monic quintic
DISCRIMINANT = (
    (256, (5, 0, 0, 0, 3)),
    (-192, (4, 1, 0, 1, 2)),
    (-128, (4, 0, 2, 0, 2)),
    (144, (4, 0, 1, 2, 1)),
    (144, (3, 2, 1, 0, 2)),
    (-6, (3, 2, 0, 2, 1)),
    (-80, (3, 1, 2, 1, 1)),
    (16, (3, 0, 4, 0, 1)),
    (-27, (2, 4, 0, 0, 2)),
    (18, (2, 3, 1, 1, 1)),
    (-4, (2, 2, 3, 0, 1)),
    (-1600, (3, 1, 0, 0, 3)),
    (160, (3, 0, 1, 1, 2)),
    (-36, (3, 0, 0, 3, 1)),
    (1020, (2, 2, 0, 1, 2)),
    (560, (2, 1, 2, 0, 2)),
    (-746, (2, 1, 1, 2, 1)),
    (24, (2, 0, 3, 1, 1)),
    (-630, (1, 3, 1, 0, 2)),
    (24, (1, 3, 0, 2, 1)),
    (356, (1, 2, 2, 1, 1)),
    (-72, (1, 1, 4, 0, 1)),
    (108, (0, 5, 0, 0, 2)),
    (-72, (0, 4, 1, 1, 1)),
    (16, (0, 3, 3, 0, 1)),
    (2000, (2, 0, 1, 0, 3)),
    (-50, (2, 0, 0, 2, 2)),
    (2250, (1, 2, 0, 0, 3)),
    (-2050, (1, 1, 1, 1, 2)),
    (160, (1, 1, 0, 3, 1)),
    (-900, (1, 0, 3, 0, 2)),
    (1020, (1, 0, 2, 2, 1)),
    (-900, (0, 3, 0, 1, 2)),
    (825, (0, 2, 2, 0, 2)),
    (560, (0, 2, 1, 2, 1)),
    (-630, (0, 1, 3, 1, 1)),
    (-2500, (1, 0, 0, 1, 3)),
    (-3750, (0, 1, 1, 0, 3)),
    (2000, (0, 1, 0, 2, 2)),
    (108, (0, 0, 5, 0, 1)),
    (-27, (0, 0, 4, 2, 0)),
    (2250, (0, 0, 2, 1, 2)),
    (-1600, (0, 0, 1, 3, 1)),
    (256, (0, 0, 0, 5, 0)),
    (3125, (0, 0, 0, 0, 4)),
    (-27, (4, 0, 0, 4, 0)),
    (18, (3, 1, 1, 3, 0)),
    (-4, (3, 0, 3, 2, 0)),
    (-4, (2, 3, 0, 3, 0)),
    (1, (2, 2, 2, 2, 0)),
    (144, (2, 1, 0, 4, 0)),
    (-6, (2, 0, 2, 3, 0)),
    (-80, (1, 2, 1, 3, 0)),
    (18, (1, 1, 3, 2, 0)),
    (16, (0, 4, 0, 3, 0)),
    (-4, (0, 3, 2, 2, 0)),
    (-192, (1, 0, 1, 4, 0)),
    (-128, (0, 2, 0, 4, 0)),
    (144, (0, 1, 2, 3, 0)),
)

# sign-carrying factor of the leading coefficient of the degree-3 remainder
L3 = (
    (2, (2, 0, 0, 0, 0)),
    (-5, (0, 1, 0, 0, 0)),
)

# sign-carrying factor of the leading coefficient of the degree-2 remainder
L2 = (
    (40, (0, 1, 0, 1, 0)),
    (-16, (2, 0, 0, 1, 0)),
    (-8, (3, 0, 1, 0, 0)),
    (38, (1, 1, 1, 0, 0)),
    (3, (2, 2, 0, 0, 0)),
    (-12, (0, 3, 0, 0, 0)),
    (-45, (0, 0, 2, 0, 0)),
)

# sign-carrying factor of the leading coefficient of the degree-1 remainder
L1 = (
    (-264, (1, 0, 1, 2, 0)),
    (-12, (3, 2, 0, 0, 1)),
    (36, (1, 1, 3, 0, 0)),
    (-124, (1, 2, 1, 1, 0)),
    (28, (3, 1, 1, 1, 0)),
    (260, (1, 1, 0, 1, 1)),
    (-132, (2, 1, 1, 0, 1)),
    (240, (1, 0, 2, 0, 1)),
    (234, (0, 1, 2, 1, 0)),
    (32, (4, 0, 1, 0, 1)),
    (48, (1, 3, 0, 0, 1)),
    (-56, (3, 0, 0, 1, 1)),
    (-80, (0, 2, 1, 0, 1)),
    (194, (2, 1, 0, 2, 0)),
    (-600, (0, 0, 1, 1, 1)),
    (-6, (2, 3, 0, 1, 0)),
    (2, (2, 2, 2, 0, 0)),
    (-12, (2, 0, 2, 1, 0)),
    (-54, (0, 0, 4, 0, 0)),
    (320, (0, 0, 0, 3, 0)),
    (-8, (0, 3, 2, 0, 0)),
    (-8, (3, 0, 3, 0, 0)),
    (250, (0, 1, 0, 0, 2)),
    (-176, (0, 2, 0, 2, 0)),
    (24, (0, 4, 0, 1, 0)),
    (-36, (4, 0, 0, 2, 0)),
    (-100, (2, 0, 0, 0, 2)),
)

# same-sign factor of the discriminant of the degree-2 remainder
D2 = (
    (24, (2, 4, 0, 1, 0)),
    (-1100, (0, 3, 1, 0, 1)),
    (800, (3, 1, 0, 1, 1)),
    (-1735, (2, 2, 1, 0, 1)),
    (-3, (2, 1, 2, 1, 0)),
    (20, (1, 3, 1, 1, 0)),
    (-600, (2, 0, 1, 1, 1)),
    (-1150, (1, 2, 0, 1, 1)),
    (5475, (1, 1, 2, 0, 1)),
    (-1380, (1, 1, 1, 2, 0)),
    (1500, (0, 1, 1, 1, 1)),
    (6, (3, 1, 3, 0, 0)),
    (1, (4, 2, 2, 0, 0)),
    (-128, (6, 0, 1, 0, 1)),
    (660, (1, 4, 0, 0, 1)),
    (-136, (5, 0, 0, 1, 1)),
    (-3, (4, 3, 0, 1, 0)),
    (-236, (4, 1, 0, 2, 0)),
    (337, (2, 2, 0, 2, 0)),
    (48, (5, 2, 0, 0, 1)),
    (-357, (3, 3, 0, 0, 1)),
    (-12, (4, 0, 2, 1, 0)),
    (-45, (1, 0, 3, 1, 0)),
    (60, (0, 2, 2, 1, 0)),
    (-8, (2, 3, 2, 0, 0)),
    (-500, (2, 1, 0, 0, 2)),
    (-24, (1, 2, 3, 0, 0)),
    (-1380, (3, 0, 2, 0, 1)),
    (408, (3, 0, 1, 2, 0)),
    (-4, (5, 1, 1, 1, 0)),
    (1028, (4, 1, 1, 0, 1)),
    (11, (3, 2, 1, 1, 0)),
    (36, (6, 0, 0, 2, 0)),
    (100, (4, 0, 0, 0, 2)),
    (9, (2, 0, 4, 0, 0)),
    (-48, (0, 5, 0, 1, 0)),
    (16, (0, 4, 2, 0, 0)),
    (160, (0, 3, 0, 2, 0)),
    (625, (0, 2, 0, 0, 2)),
    (-3375, (0, 0, 3, 0, 1)),
    (900, (0, 0, 2, 2, 0)),
)

# leading factor of the linear remainder in the Sturm chain of the degree-3 remainder
M1 = (
    (8, (3, 0, 1, 0, 0)),
    (-80, (2, 0, 0, 1, 0)),
    (-3, (2, 2, 0, 0, 0)),
    (10, (1, 1, 1, 0, 0)),
    (200, (0, 1, 0, 1, 0)),
    (-75, (0, 0, 2, 0, 0)),
)

# numerator of the double root
C0 = (
    (48, (4, 0, 0, 1, 1)),
    (4, (3, 0, 2, 1, 0)),
    (80, (3, 0, 0, 0, 2)),
    (-32, (3, 1, 1, 0, 1)),
    (-3, (3, 1, 0, 2, 0)),
    (7, (2, 0, 1, 2, 0)),
    (-1, (2, 2, 1, 1, 0)),
    (-4, (2, 0, 2, 0, 1)),
    (9, (2, 3, 0, 0, 1)),
    (-266, (2, 1, 0, 1, 1)),
    (16, (1, 0, 0, 3, 0)),
    (146, (1, 2, 1, 0, 1)),
    (-18, (1, 1, 2, 1, 0)),
    (290, (1, 0, 1, 1, 1)),
    (-275, (1, 1, 0, 0, 2)),
    (12, (1, 2, 0, 2, 0)),
    (4, (0, 3, 1, 1, 0)),
    (-195, (0, 1, 2, 0, 1)),
    (260, (0, 2, 0, 1, 1)),
    (27, (0, 0, 3, 1, 0)),
    (375, (0, 0, 1, 0, 2)),
    (-36, (0, 4, 0, 0, 1)),
    (-48, (0, 1, 1, 2, 0)),
    (-400, (0, 0, 0, 2, 1)),
)

# denominator of the double root
C1 = (
    (-56, (3, 0, 0, 1, 1)),
    (-100, (2, 0, 0, 0, 2)),
    (240, (1, 0, 2, 0, 1)),
    (-264, (1, 0, 1, 2, 0)),
    (-12, (3, 2, 0, 0, 1)),
    (28, (3, 1, 1, 1, 0)),
    (-124, (1, 2, 1, 1, 0)),
    (-8, (3, 0, 3, 0, 0)),
    (-36, (4, 0, 0, 2, 0)),
    (-176, (0, 2, 0, 2, 0)),
    (24, (0, 4, 0, 1, 0)),
    (-8, (0, 3, 2, 0, 0)),
    (250, (0, 1, 0, 0, 2)),
    (194, (2, 1, 0, 2, 0)),
    (-12, (2, 0, 2, 1, 0)),
    (-6, (2, 3, 0, 1, 0)),
    (2, (2, 2, 2, 0, 0)),
    (36, (1, 1, 3, 0, 0)),
    (234, (0, 1, 2, 1, 0)),
    (-80, (0, 2, 1, 0, 1)),
    (-600, (0, 0, 1, 1, 1)),
    (-54, (0, 0, 4, 0, 0)),
    (320, (0, 0, 0, 3, 0)),
    (260, (1, 1, 0, 1, 1)),
    (-132, (2, 1, 1, 0, 1)),
    (48, (1, 3, 0, 0, 1)),
    (32, (4, 0, 1, 0, 1)),
)

# numerator of the triple root
C21 = (
    (6, (3, 0, 0, 1, 0)),
    (4, (0, 2, 1, 0, 0)),
    (-3, (1, 0, 2, 0, 0)),
    (-21, (1, 1, 0, 1, 0)),
    (30, (0, 0, 1, 1, 0)),
    (10, (2, 0, 0, 0, 1)),
    (-25, (0, 1, 0, 0, 1)),
    (-1, (2, 1, 1, 0, 0)),
)

# constant-term factor of the degree-2 remainder
C20 = (
    (-16, (3, 0, 0, 0, 1)),
    (-75, (0, 0, 1, 0, 1)),
    (3, (1, 0, 1, 1, 0)),
    (-4, (0, 2, 0, 1, 0)),
    (55, (1, 1, 0, 0, 1)),
    (1, (2, 1, 0, 1, 0)),
)

# numerator of the single root beside two double roots
C3 = (
    (-34, (2, 1, 1, 0, 0)),
    (8, (4, 0, 1, 0, 0)),
    (44, (1, 1, 0, 1, 0)),
    (-3, (3, 2, 0, 0, 0)),
    (-8, (3, 0, 0, 1, 0)),
    (12, (1, 3, 0, 0, 0)),
    (57, (1, 0, 2, 0, 0)),
    (-16, (0, 2, 1, 0, 0)),
    (100, (0, 1, 0, 0, 1)),
    (-120, (0, 0, 1, 1, 0)),
    (-40, (2, 0, 0, 0, 1)),
)

# numerator of the triple/double ordering value, over (2p^2 - 5q)^3
C5_NUM = (
    (-8, (5, 0, 0, 1, 0)),
    (4, (4, 1, 1, 0, 0)),
    (200, (4, 0, 0, 0, 1)),
    (-1, (3, 3, 0, 0, 0)),
    (-20, (3, 0, 2, 0, 0)),
    (5, (2, 2, 1, 0, 0)),
    (-1000, (2, 1, 0, 0, 1)),
    (200, (2, 0, 1, 1, 0)),
    (50, (1, 2, 0, 1, 0)),
    (-25, (1, 1, 2, 0, 0)),
    (1250, (0, 2, 0, 0, 1)),
    (-500, (0, 1, 1, 1, 0)),
    (125, (0, 0, 3, 0, 0)),
)

# discriminant of the degree-3 remainder
D3 = (
    (21600, (5, 0, 0, 1, 1)),
    (432, (5, 1, 1, 1, 0)),
    (-10800, (4, 1, 1, 0, 1)),
    (-180, (3, 2, 1, 1, 0)),
    (-540000, (2, 0, 1, 1, 1)),
    (128000, (2, 0, 0, 3, 0)),
    (-432, (6, 0, 0, 2, 0)),
    (-270000, (4, 0, 0, 0, 2)),
    (1350000, (2, 1, 0, 0, 2)),
    (-135000, (1, 2, 0, 1, 1)),
    (67500, (1, 1, 2, 0, 1)),
    (1350000, (0, 1, 1, 1, 1)),
    (-5100, (2, 1, 2, 1, 0)),
    (-13500, (2, 2, 1, 0, 1)),
    (6000, (1, 1, 1, 2, 0)),
    (-320000, (0, 1, 0, 3, 0)),
    (90000, (0, 0, 2, 2, 0)),
    (-337500, (0, 0, 3, 0, 1)),
    (-1687500, (0, 2, 0, 0, 2)),
    (-40, (3, 1, 3, 0, 0)),
    (1680, (4, 0, 2, 1, 0)),
    (-2160, (4, 1, 0, 2, 0)),
    (-108, (4, 3, 0, 1, 0)),
    (36, (4, 2, 2, 0, 0)),
    (2700, (3, 3, 0, 0, 1)),
    (54000, (3, 0, 2, 0, 1)),
    (-16800, (3, 0, 1, 2, 0)),
    (11700, (2, 2, 0, 2, 0)),
    (-4500, (1, 0, 3, 1, 0)),
    (-128, (5, 0, 3, 0, 0)),
    (900, (2, 0, 4, 0, 0)),
)

# numerator of the x coefficient of the degree-1 remainder
GCDDEG1_LEAD = (
    (6000, (2, 1, 1, 1, 1)),
    (-7500, (0, 2, 1, 1, 1)),
    (-2490, (2, 2, 2, 1, 0)),
    (-528, (5, 2, 1, 1, 0)),
    (1590, (3, 3, 1, 1, 0)),
    (2640, (3, 1, 1, 2, 0)),
    (588, (4, 1, 2, 1, 0)),
    (-3300, (1, 2, 1, 2, 0)),
    (-1550, (1, 4, 1, 1, 0)),
    (-2400, (3, 1, 2, 0, 1)),
    (-584, (6, 1, 1, 0, 1)),
    (-3300, (3, 2, 0, 1, 1)),
    (1560, (4, 2, 1, 0, 1)),
    (1080, (5, 1, 0, 1, 1)),
    (-1200, (4, 0, 1, 1, 1)),
    (-850, (2, 3, 1, 0, 1)),
    (56, (7, 1, 1, 1, 0)),
    (3000, (1, 2, 2, 0, 1)),
    (3250, (1, 3, 0, 1, 1)),
    (4000, (0, 2, 0, 3, 0)),
    (-2200, (0, 4, 0, 2, 0)),
    (3125, (0, 3, 0, 0, 2)),
    (-1000, (0, 4, 1, 0, 1)),
    (2925, (0, 3, 2, 1, 0)),
    (108, (4, 4, 0, 1, 0)),
    (4185, (2, 3, 0, 2, 0)),
    (-2742, (4, 2, 0, 2, 0)),
    (-315, (2, 5, 0, 1, 0)),
    (-24, (6, 0, 2, 1, 0)),
    (-528, (5, 0, 1, 2, 0)),
    (-3200, (2, 1, 0, 3, 0)),
    (-460, (3, 2, 3, 0, 0)),
    (4, (6, 2, 2, 0, 0)),
    (-36, (4, 3, 2, 0, 0)),
    (540, (2, 1, 4, 0, 0)),
    (450, (1, 3, 3, 0, 0)),
    (152, (5, 1, 3, 0, 0)),
    (105, (2, 4, 2, 0, 0)),
    (216, (5, 3, 0, 0, 1)),
    (-630, (3, 4, 0, 0, 1)),
    (-24, (7, 2, 0, 0, 1)),
    (480, (5, 0, 2, 0, 1)),
    (64, (8, 0, 1, 0, 1)),
    (-112, (7, 0, 0, 1, 1)),
    (-12, (6, 3, 0, 1, 0)),
    (748, (6, 1, 0, 2, 0)),
    (600, (1, 5, 0, 0, 1)),
    (-3750, (2, 2, 0, 0, 2)),
    (1500, (4, 1, 0, 0, 2)),
    (640, (4, 0, 0, 3, 0)),
    (300, (0, 6, 0, 1, 0)),
    (-108, (4, 0, 4, 0, 0)),
    (-16, (7, 0, 3, 0, 0)),
    (-100, (0, 5, 2, 0, 0)),
    (-675, (0, 2, 4, 0, 0)),
    (-200, (6, 0, 0, 0, 2)),
    (-72, (8, 0, 0, 2, 0)),
)

# numerator of the constant of the degree-1 remainder
GCDDEG1_CONST = (
    (-5800, (3, 1, 1, 1, 1)),
    (7250, (1, 2, 1, 1, 1)),
    (-1200, (0, 3, 1, 2, 0)),
    (3800, (2, 2, 2, 0, 1)),
    (1224, (5, 2, 1, 0, 1)),
    (-11850, (2, 3, 0, 1, 1)),
    (-3720, (3, 3, 1, 0, 1)),
    (7560, (4, 2, 0, 1, 1)),
    (-700, (4, 1, 2, 0, 1)),
    (1160, (5, 0, 1, 1, 1)),
    (8000, (2, 1, 0, 2, 1)),
    (3650, (1, 4, 1, 0, 1)),
    (-332, (4, 1, 1, 2, 0)),
    (1135, (2, 2, 1, 2, 0)),
    (-450, (1, 3, 2, 1, 0)),
    (460, (3, 2, 2, 1, 0)),
    (-4, (6, 2, 1, 1, 0)),
    (36, (4, 3, 1, 1, 0)),
    (-540, (2, 1, 3, 1, 0)),
    (-152, (5, 1, 2, 1, 0)),
    (-105, (2, 4, 1, 1, 0)),
    (-2024, (6, 1, 0, 1, 1)),
    (-128, (7, 1, 1, 0, 1)),
    (-7500, (2, 1, 1, 0, 2)),
    (-900, (0, 6, 0, 0, 1)),
    (64, (5, 0, 0, 3, 0)),
    (320, (7, 0, 0, 0, 2)),
    (-324, (4, 4, 0, 0, 1)),
    (945, (2, 5, 0, 0, 1)),
    (-4875, (0, 3, 2, 0, 1)),
    (-16, (6, 0, 2, 0, 1)),
    (-10000, (0, 2, 0, 2, 1)),
    (6500, (0, 4, 0, 1, 1)),
    (-1600, (4, 0, 0, 2, 1)),
    (108, (4, 0, 3, 1, 0)),
    (16, (7, 0, 2, 1, 0)),
    (400, (1, 2, 0, 3, 0)),
    (300, (1, 4, 0, 2, 0)),
    (-315, (3, 3, 0, 2, 0)),
    (108, (5, 2, 0, 2, 0)),
    (28, (6, 0, 1, 2, 0)),
    (-320, (3, 1, 0, 3, 0)),
    (100, (0, 5, 1, 1, 0)),
    (675, (0, 2, 3, 1, 0)),
    (-6875, (1, 3, 0, 0, 2)),
    (7500, (3, 2, 0, 0, 2)),
    (9375, (0, 2, 1, 0, 2)),
    (36, (6, 3, 0, 0, 1)),
    (-2700, (5, 1, 0, 0, 2)),
    (1500, (4, 0, 1, 0, 2)),
    (192, (8, 0, 0, 1, 1)),
    (-12, (7, 1, 0, 2, 0)),
)

# constant-term partner of M1 in the same linear remainder
M1_CONST = (
    (6, (3, 0, 0, 1, 0)),
    (-150, (2, 0, 0, 0, 1)),
    (-1, (2, 1, 1, 0, 0)),
    (-5, (1, 1, 0, 1, 0)),
    (5, (1, 0, 2, 0, 0)),
    (375, (0, 1, 0, 0, 1)),
    (-50, (0, 0, 1, 1, 0)),
)

DENOMINATORS = {'D3': 390625}
