"""Test suite for balanced_episturmian."""

FRAENKEL_3 = (1, 2, 1, 3, 1, 2, 1)
FRAENKEL_4 = (1, 2, 1, 3, 1, 2, 1, 4, 1, 2, 1, 3, 1, 2, 1)
FRAENKEL_5_TEXT = "1213121412131215121312141213121"

# Pal(1232) and Pal(12131)
PAL_1232 = (1, 2, 1, 3, 1, 2, 1, 2, 1, 3, 1, 2, 1)
PAL_12131 = (1, 2, 1, 1, 2, 1, 3, 1, 2, 1, 1, 2, 1, 1, 2, 1, 3, 1, 2, 1, 1, 2, 1)

TRIBONACCI_27 = "121312112131212131211213121"

SMALL_PREFIX_BOUND = 2_000
