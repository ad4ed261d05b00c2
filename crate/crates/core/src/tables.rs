//! Published reference values used by the verification harness and the
//! golden-file tests.

/// Number of self-modified d-ascent sequences of length `n`, `d = 0..=6`, `n = 0..=12`.
pub const SELF_MODIFIED_COUNTS: [[i64; 13]; 7] = [
    [1, 1, 2, 5, 14, 43, 143, 510, 1936, 7775, 32869, 145665, 674338],
    [1, 1, 1, 2, 4, 10, 27, 81, 262, 910, 3363, 13150, 54135],
    [1, 1, 1, 1, 2, 4, 9, 23, 64, 194, 629, 2177, 7982],
    [1, 1, 1, 1, 1, 2, 4, 9, 22, 58, 167, 515, 1698],
    [1, 1, 1, 1, 1, 1, 2, 4, 9, 22, 57, 158, 467],
    [1, 1, 1, 1, 1, 1, 1, 2, 4, 9, 22, 57, 157],
    [1, 1, 1, 1, 1, 1, 1, 1, 2, 4, 9, 22, 57],
];

/// Coefficients of `(Self_d(1,x) - [d]_x) / x^d`, `d = 0..=10`, `n = 0..=12`.
pub const SHIFTED_COUNTS: [[i64; 13]; 11] = [
    [1, 1, 2, 5, 14, 43, 143, 510, 1936, 7775, 32869, 145665, 674338],
    [1, 1, 2, 4, 10, 27, 81, 262, 910, 3363, 13150, 54135, 233671],
    [1, 1, 2, 4, 9, 23, 64, 194, 629, 2177, 7982, 30871, 125402],
    [1, 1, 2, 4, 9, 22, 58, 167, 515, 1698, 5925, 21810, 84310],
    [1, 1, 2, 4, 9, 22, 57, 158, 467, 1474, 4934, 17448, 64847],
    [1, 1, 2, 4, 9, 22, 57, 157, 454, 1387, 4476, 15243, 54606],
    [1, 1, 2, 4, 9, 22, 57, 157, 453, 1369, 4321, 14293, 49570],
    [1, 1, 2, 4, 9, 22, 57, 157, 453, 1368, 4297, 14027, 47615],
    [1, 1, 2, 4, 9, 22, 57, 157, 453, 1368, 4296, 13996, 47178],
    [1, 1, 2, 4, 9, 22, 57, 157, 453, 1368, 4296, 13995, 47139],
    [1, 1, 2, 4, 9, 22, 57, 157, 453, 1368, 4296, 13995, 47138],
];

/// `Self_2(q, x)` through `x^9`: row `n` lists the coefficients of `q^0, q^1, …`.
pub const SELF2_ROWS: [&[i64]; 10] = [
    &[1],
    &[0, 1],
    &[0, 0, 1],
    &[0, 0, 0, 1],
    &[0, 0, 0, 1, 1],
    &[0, 0, 0, 0, 3, 1],
    &[0, 0, 0, 0, 2, 6, 1],
    &[0, 0, 0, 0, 0, 12, 10, 1],
    &[0, 0, 0, 0, 0, 9, 39, 15, 1],
    &[0, 0, 0, 0, 0, 2, 75, 95, 21, 1],
];

/// `r_n(1)` for `n = 0..=14`.
pub const LIMIT_COUNTS: [i64; 15] = [1, 1, 2, 4, 9, 22, 57, 157, 453, 1368, 4296, 13995, 47138, 163779, 585741];

/// Fishburn numbers for `n = 0..=10`.
pub const FISHBURN_NUMBERS: [i64; 11] = [1, 1, 2, 5, 15, 53, 217, 1014, 5335, 31240, 201608];
