"""Fixed reference rows: example strings with their border and cover arrays."""

EX23_TEXT = "abaababaabaababaabababa"
EX23_MIN = [0, 0, 0, 0, 0, 3, 0, 3, 0, 5, 3, 0, 5, 3, 0, 3, 0, 5, 3, 0, 3, 0, 3]
EX23_MAX = [0, 0, 0, 0, 0, 3, 0, 3, 0, 5, 6, 0, 5, 6, 0, 8, 9, 10, 11, 0, 8, 0, 3]
# the reference minimal row has 0 at position 17, but the length-9 border covers that prefix
EX23_MIN_COMPUTED = EX23_MIN[:16] + [9] + EX23_MIN[17:]

EX24_TEXT = "abaababaababaabaababaaba"
EX24_MIN = [0, 0, 0, 0, 0, 3, 0, 3, 0, 5, 3, 7, 3, 9, 5, 3, 0, 5, 3, 0, 3, 9, 5, 3]
EX24_PRUNED = [0, 0, 0, 0, 0, 3, 0, 0, 0, 0, 0, 0, 0, 9, 5, 0, 0, 0, 0, 0, 0, 9, 5, 3]

EX13_MIN = [0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 6, 0]
EX13_COMPONENTS = [(1, 2, 7, 8), (3, 9), (4, 10), (5, 11), (6, 12), (13,)]
EX13_TEXT = "aabbbbaabbbbb"
EX13_BORDERS = [0, 1, 0, 0, 0, 0, 1, 2, 3, 4, 5, 6, 0]

_LENGTH8 = """\
0 0 0 0 0 0 0 0 | a b b b b b b b
0 0 0 0 0 0 0 4 | a b b b a b b b
0 0 0 0 0 3 0 0 | a b b a b b b b
0 0 0 0 0 3 0 3 | a b a a b a b a
0 0 0 0 0 3 4 0 | a b b a b b a a
0 0 0 0 0 3 4 5 | a b b a b b a b
0 0 0 2 0 0 0 0 | a b a b b b b b
0 0 0 2 3 0 0 0 | a b a b a a a a
0 0 0 2 3 0 0 3 | a b a b a a b a
0 0 0 2 3 2 0 0 | a b a b a b b b
0 0 0 2 3 2 3 0 | a b a b a b a a
0 0 0 2 3 2 3 2 | a b a b a b a b
0 1 0 0 0 0 0 0 | a a b b b b b b
0 1 0 0 0 0 0 4 | a a b b a a b b
0 1 0 0 0 3 0 0 | a a b a a b b b
0 1 0 0 0 3 4 0 | a a b a a b a b
0 1 0 0 0 3 4 5 | a a b a a b a a
0 1 1 0 0 0 0 0 | a a a b b b b b
0 1 1 0 0 0 0 4 | a a a b a a a b
0 1 1 1 0 0 0 0 | a a a a b b b b
0 1 1 1 1 0 0 0 | a a a a a b b b
0 1 1 1 1 1 0 0 | a a a a a a b b
0 1 1 1 1 1 1 0 | a a a a a a a b
0 1 1 1 1 1 1 1 | a a a a a a a a
"""

LENGTH8_TABLE = [
    ([int(v) for v in left.split()], right.replace(" ", ""))
    for left, right in (line.split("|") for line in _LENGTH8.splitlines())
]
