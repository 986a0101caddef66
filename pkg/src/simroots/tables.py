"""Reference data for the four worked examples (p = 97, 101, 127, 89).

Each table lists every primitive root z with f(z) mod p when (z, f(z)) is a
simultaneous pair and 0 otherwise. ``stated_main_term`` is the printed value
of (phi(p-1)/(p-1))^2 p; for p = 97 it disagrees with direct evaluation
(97/9), which is why ``main_term_discrepancy`` is set there.
"""

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class ReferenceExample:
    p: int
    poly: str
    phi: int
    tuple_count: int
    stated_main_term: Fraction
    main_term_discrepancy: bool
    table: tuple[tuple[int, int], ...]


EXAMPLES = (
    ReferenceExample(
        p=97,
        poly="t^2+1",
        phi=32,
        tuple_count=4,
        stated_main_term=Fraction(24832, 2401),
        main_term_discrepancy=True,
        table=(
            (5, 26), (7, 0), (10, 0), (13, 0), (14, 0), (15, 0), (17, 0), (21, 0),
            (23, 0), (26, 0), (29, 0), (37, 0), (38, 87), (39, 0), (40, 0), (41, 0),
            (56, 0), (57, 0), (58, 0), (59, 87), (60, 0), (68, 0), (71, 0), (74, 0),
            (76, 0), (80, 0), (82, 0), (83, 0), (84, 0), (87, 0), (90, 0), (92, 26),
        ),
    ),
    ReferenceExample(
        p=101,
        poly="t^2+1",
        phi=40,
        tuple_count=12,
        stated_main_term=Fraction(404, 25),
        main_term_discrepancy=False,
        table=(
            (2, 0), (3, 0), (7, 50), (8, 0), (11, 0), (12, 0), (15, 0), (18, 0),
            (26, 0), (27, 0), (28, 0), (29, 34), (34, 46), (35, 0), (38, 0), (40,
            86), (42, 48), (46, 0), (48, 83), (50, 0), (51, 0), (53, 83), (55, 0),
            (59, 48), (61, 86), (63, 0), (66, 0), (67, 46), (72, 34), (73, 0), (74,
            0), (75, 0), (83, 0), (86, 0), (89, 0), (90, 0), (93, 0), (94, 50), (98,
            0), (99, 0),
        ),
    ),
    ReferenceExample(
        p=127,
        poly="(t+2)*(t+1)^2",
        phi=36,
        tuple_count=9,
        stated_main_term=Fraction(508, 49),
        main_term_discrepancy=False,
        table=(
            (3, 0), (6, 0), (7, 0), (12, 0), (14, 0), (23, 0), (29, 0), (39, 0),
            (43, 0), (45, 0), (46, 114), (48, 0), (53, 106), (55, 0), (56, 101),
            (57, 0), (58, 0), (65, 6), (67, 0), (78, 43), (83, 0), (85, 0), (86, 0),
            (91, 6), (92, 0), (93, 0), (96, 0), (97, 0), (101, 0), (106, 0), (109,
            0), (110, 97), (112, 0), (114, 67), (116, 116), (118, 0),
        ),
    ),
    ReferenceExample(
        p=89,
        poly="(t+2)*(t+1)^2",
        phi=40,
        tuple_count=18,
        stated_main_term=Fraction(2225, 121),
        main_term_discrepancy=False,
        table=(
            (3, 0), (6, 0), (7, 0), (13, 3), (14, 0), (15, 0), (19, 0), (23, 0),
            (24, 0), (26, 31), (27, 41), (28, 43), (29, 43), (30, 0), (31, 61), (33,
            54), (35, 70), (38, 0), (41, 24), (43, 0), (46, 33), (48, 0), (51, 0),
            (54, 33), (56, 29), (58, 66), (59, 0), (60, 14), (61, 3), (62, 0), (63,
            41), (65, 0), (66, 0), (70, 0), (74, 33), (75, 19), (76, 0), (82, 0),
            (83, 0), (86, 0),
        ),
    ),
)
