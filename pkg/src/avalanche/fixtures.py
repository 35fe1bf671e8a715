"""The two published n = 8 examples, as block strings and ANFs."""
from .core import unit

N = 8

EXAMPLE1_BLOCKS = (
    "A A A ~A B B B ~B C C C ~C D D D ~D "
    "A ~A ~A ~A B ~B ~B ~B C ~C ~C ~C D ~D ~D ~D "
    "~A A A A ~B B B B ~C C C C ~D D D D "
    "~A ~A ~A A ~B ~B ~B B ~C ~C ~C C ~D ~D ~D D"
)
EXAMPLE1_ANF = "x1 + x7 + x1x5 + x1x6 + x2x5 + x2x6 + x3x8 + x4x7 + x4x8 + x5x6"
# e7+e8, e3+e4+e8, e3+e4+e7
EXAMPLE1_NON_PC = frozenset({
    unit(7, N) | unit(8, N),
    unit(3, N) | unit(4, N) | unit(8, N),
    unit(3, N) | unit(4, N) | unit(7, N),
})

EXAMPLE2_BLOCKS = (
    "A B A ~B B A B ~A C D C ~D D C D ~C "
    "B ~A ~B ~A A ~B ~A ~B C ~D ~C ~D D ~C ~D ~C "
    "~B A B A ~A B A B ~D C D C ~C D C D "
    "~A ~B ~A B ~B ~A ~B A ~D ~C ~D C ~C ~D ~C D"
)
EXAMPLE2_ANF = (
    "x1 + x7 + x1x5 + x1x6 + x1x7 + x1x8 + x2x5 + x2x6 + x2x7 + x2x8 + x3x8 + "
    "x4x7 + x4x8 + x5x6 + x6x7 + x6x8 + x2x3x7 + x2x3x8"
)
EXAMPLE2_PC_COUNT = 252

NONLINEARITY = 112
SIGMA = 262_144
