"""Published decompositions of the first few M_n, transcribed by hand."""

from e9paths.lattice import WeightLabel

L = WeightLabel.of

GOLDEN = {
    2: {L(M0=1): 1, L(M2=1): 1, L(M1=2): 1},
    3: {
        L(M1=3): 1,
        L(M1=1, M2=1): 2,
        L(M0=1, M1=1): 3,
        L(M3=1): 1,
        L(M8=1, s=1): 2,
    },
    4: {
        L(M1=4): 1,
        L(M4=1): 1,
        L(M0=1, M1=2): 6,
        L(M1=2, M2=1): 3,
        L(M7=1, s=1): 6,
        L(M0=1, M2=1): 6,
        L(M0=2): 3,
        L(M1=1, M8=1, s=1): 8,
        L(M1=1, M3=1): 3,
        L(M2=2): 2,
    },
}

# coefficients of the level-count generating function through x^8
GENFUN_8 = [1, 1, 3, 5, 10, 15, 27, 39, 63]
