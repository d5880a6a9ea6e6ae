//! Static recipe tables: residue-class families for block size four,
//! their ingredient recipes, and the worked transversal-design plans for
//! block size five.

/// One residue class of a 44-periodic family: for every w >= w_min the
/// recipe covers r = 44w + s, written r = 44t + rho with
/// t = w + (s - rho)/44.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ResidueRow {
    pub rho: usize,
    pub s: usize,
    pub w_min: usize,
    pub t_min: usize,
}

/// One composed value r = u*p + q + 5u/3: u copies of a replication-p
/// geometry and one replication-q geometry over a group type
/// (3p+5)^u (3q+5)^1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IngredientRow {
    pub r: usize,
    pub u: usize,
    pub p: usize,
    pub q: usize,
}

/// One worked plan of the weighted transversal composition: parameters
/// (g, u, q, r0) and the replication numbers it is recorded to reach.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TdPlanRow {
    pub g: usize,
    pub u: usize,
    pub q: usize,
    pub r0: usize,
    pub rs: &'static [usize],
}

/// Residue-class recipes behind the r > 920 no-OLP family (block size 4).
pub const NO_OLP_BASIC_ROWS: [ResidueRow; 22] = [
    ResidueRow { rho: 0, s: 132, w_min: 7, t_min: 10 },
    ResidueRow { rho: 1, s: 133, w_min: 7, t_min: 10 },
    ResidueRow { rho: 4, s: 136, w_min: 7, t_min: 10 },
    ResidueRow { rho: 5, s: 181, w_min: 9, t_min: 13 },
    ResidueRow { rho: 8, s: 228, w_min: 11, t_min: 16 },
    ResidueRow { rho: 9, s: 185, w_min: 9, t_min: 13 },
    ResidueRow { rho: 12, s: 188, w_min: 9, t_min: 13 },
    ResidueRow { rho: 13, s: 13, w_min: 1, t_min: 1 },
    ResidueRow { rho: 16, s: 192, w_min: 10, t_min: 14 },
    ResidueRow { rho: 17, s: 17, w_min: 2, t_min: 2 },
    ResidueRow { rho: 20, s: 20, w_min: 2, t_min: 2 },
    ResidueRow { rho: 21, s: 21, w_min: 2, t_min: 2 },
    ResidueRow { rho: 24, s: 24, w_min: 2, t_min: 2 },
    ResidueRow { rho: 25, s: 157, w_min: 8, t_min: 11 },
    ResidueRow { rho: 28, s: 160, w_min: 8, t_min: 11 },
    ResidueRow { rho: 29, s: 293, w_min: 14, t_min: 20 },
    ResidueRow { rho: 32, s: 296, w_min: 14, t_min: 20 },
    ResidueRow { rho: 33, s: 297, w_min: 14, t_min: 20 },
    ResidueRow { rho: 36, s: 300, w_min: 15, t_min: 21 },
    ResidueRow { rho: 37, s: 125, w_min: 7, t_min: 9 },
    ResidueRow { rho: 40, s: 304, w_min: 15, t_min: 21 },
    ResidueRow { rho: 41, s: 129, w_min: 7, t_min: 9 },
];
/// Ingredient recipes feeding [`NO_OLP_BASIC_ROWS`].
pub const NO_OLP_BASIC_INGREDIENTS: [IngredientRow; 17] = [
    IngredientRow { r: 132, u: 6, p: 17, q: 20 },
    IngredientRow { r: 133, u: 6, p: 17, q: 21 },
    IngredientRow { r: 136, u: 6, p: 17, q: 24 },
    IngredientRow { r: 181, u: 9, p: 17, q: 13 },
    IngredientRow { r: 228, u: 9, p: 21, q: 24 },
    IngredientRow { r: 185, u: 9, p: 17, q: 17 },
    IngredientRow { r: 188, u: 9, p: 17, q: 20 },
    IngredientRow { r: 192, u: 9, p: 17, q: 24 },
    IngredientRow { r: 157, u: 6, p: 21, q: 21 },
    IngredientRow { r: 160, u: 6, p: 21, q: 24 },
    IngredientRow { r: 293, u: 15, p: 17, q: 13 },
    IngredientRow { r: 296, u: 12, p: 21, q: 24 },
    IngredientRow { r: 297, u: 15, p: 17, q: 17 },
    IngredientRow { r: 300, u: 15, p: 17, q: 20 },
    IngredientRow { r: 125, u: 6, p: 17, q: 13 },
    IngredientRow { r: 304, u: 15, p: 17, q: 24 },
    IngredientRow { r: 129, u: 6, p: 17, q: 17 },
];
/// Residue-class recipes behind the full no-OLP spectrum (block size 4).
pub const NO_OLP_FULL_ROWS: [ResidueRow; 22] = [
    ResidueRow { rho: 0, s: 132, w_min: 7, t_min: 10 },
    ResidueRow { rho: 1, s: 45, w_min: 3, t_min: 4 },
    ResidueRow { rho: 4, s: 136, w_min: 7, t_min: 10 },
    ResidueRow { rho: 5, s: 49, w_min: 3, t_min: 4 },
    ResidueRow { rho: 8, s: 52, w_min: 3, t_min: 4 },
    ResidueRow { rho: 9, s: 53, w_min: 3, t_min: 4 },
    ResidueRow { rho: 12, s: 100, w_min: 5, t_min: 7 },
    ResidueRow { rho: 13, s: 13, w_min: 1, t_min: 1 },
    ResidueRow { rho: 16, s: 60, w_min: 4, t_min: 5 },
    ResidueRow { rho: 17, s: 17, w_min: 2, t_min: 2 },
    ResidueRow { rho: 20, s: 20, w_min: 2, t_min: 2 },
    ResidueRow { rho: 21, s: 21, w_min: 2, t_min: 2 },
    ResidueRow { rho: 24, s: 24, w_min: 2, t_min: 2 },
    ResidueRow { rho: 25, s: 69, w_min: 4, t_min: 5 },
    ResidueRow { rho: 28, s: 160, w_min: 8, t_min: 11 },
    ResidueRow { rho: 29, s: 29, w_min: 2, t_min: 2 },
    ResidueRow { rho: 32, s: 120, w_min: 6, t_min: 8 },
    ResidueRow { rho: 33, s: 33, w_min: 2, t_min: 2 },
    ResidueRow { rho: 36, s: 80, w_min: 5, t_min: 6 },
    ResidueRow { rho: 37, s: 37, w_min: 3, t_min: 3 },
    ResidueRow { rho: 40, s: 40, w_min: 3, t_min: 3 },
    ResidueRow { rho: 41, s: 85, w_min: 5, t_min: 6 },
];
/// Recipes for the individual values the residue rows miss.
pub const NO_OLP_PATCH_INGREDIENTS: [IngredientRow; 30] = [
    IngredientRow { r: 129, u: 6, p: 17, q: 17 },
    IngredientRow { r: 176, u: 6, p: 21, q: 40 },
    IngredientRow { r: 188, u: 9, p: 17, q: 20 },
    IngredientRow { r: 192, u: 9, p: 17, q: 24 },
    IngredientRow { r: 201, u: 6, p: 29, q: 17 },
    IngredientRow { r: 204, u: 6, p: 29, q: 20 },
    IngredientRow { r: 208, u: 6, p: 29, q: 24 },
    IngredientRow { r: 217, u: 9, p: 21, q: 13 },
    IngredientRow { r: 220, u: 9, p: 17, q: 52 },
    IngredientRow { r: 224, u: 9, p: 21, q: 20 },
    IngredientRow { r: 232, u: 6, p: 33, q: 24 },
    IngredientRow { r: 248, u: 12, p: 17, q: 24 },
    IngredientRow { r: 252, u: 6, p: 37, q: 20 },
    IngredientRow { r: 256, u: 6, p: 37, q: 24 },
    IngredientRow { r: 261, u: 6, p: 37, q: 29 },
    IngredientRow { r: 264, u: 12, p: 17, q: 40 },
    IngredientRow { r: 268, u: 6, p: 33, q: 60 },
    IngredientRow { r: 276, u: 12, p: 17, q: 52 },
    IngredientRow { r: 292, u: 12, p: 21, q: 20 },
    IngredientRow { r: 296, u: 9, p: 29, q: 20 },
    IngredientRow { r: 312, u: 12, p: 21, q: 40 },
    IngredientRow { r: 336, u: 9, p: 33, q: 24 },
    IngredientRow { r: 340, u: 15, p: 17, q: 60 },
    IngredientRow { r: 352, u: 9, p: 33, q: 40 },
    IngredientRow { r: 356, u: 18, p: 17, q: 20 },
    IngredientRow { r: 380, u: 15, p: 21, q: 40 },
    IngredientRow { r: 396, u: 18, p: 17, q: 60 },
    IngredientRow { r: 400, u: 9, p: 37, q: 52 },
    IngredientRow { r: 424, u: 6, p: 65, q: 24 },
    IngredientRow { r: 468, u: 24, p: 17, q: 20 },
];
/// Residue-class recipes behind the r > 9172 one-OLP family (block size 4).
pub const ONE_OLP_ROWS: [ResidueRow; 22] = [
    ResidueRow { rho: 0, s: 1496, w_min: 69, t_min: 103 },
    ResidueRow { rho: 1, s: 1, w_min: 2, t_min: 2 },
    ResidueRow { rho: 4, s: 1236, w_min: 57, t_min: 85 },
    ResidueRow { rho: 5, s: 137, w_min: 7, t_min: 10 },
    ResidueRow { rho: 8, s: 976, w_min: 45, t_min: 67 },
    ResidueRow { rho: 9, s: 185, w_min: 9, t_min: 13 },
    ResidueRow { rho: 12, s: 1156, w_min: 53, t_min: 79 },
    ResidueRow { rho: 13, s: 233, w_min: 11, t_min: 16 },
    ResidueRow { rho: 16, s: 2876, w_min: 132, t_min: 197 },
    ResidueRow { rho: 17, s: 281, w_min: 14, t_min: 20 },
    ResidueRow { rho: 20, s: 3056, w_min: 140, t_min: 209 },
    ResidueRow { rho: 21, s: 417, w_min: 20, t_min: 29 },
    ResidueRow { rho: 24, s: 2796, w_min: 128, t_min: 191 },
    ResidueRow { rho: 25, s: 113, w_min: 6, t_min: 8 },
    ResidueRow { rho: 28, s: 1876, w_min: 86, t_min: 128 },
    ResidueRow { rho: 29, s: 205, w_min: 10, t_min: 14 },
    ResidueRow { rho: 32, s: 2276, w_min: 104, t_min: 155 },
    ResidueRow { rho: 33, s: 209, w_min: 10, t_min: 14 },
    ResidueRow { rho: 36, s: 2016, w_min: 93, t_min: 138 },
    ResidueRow { rho: 37, s: 169, w_min: 9, t_min: 12 },
    ResidueRow { rho: 40, s: 1756, w_min: 81, t_min: 120 },
    ResidueRow { rho: 41, s: 305, w_min: 15, t_min: 21 },
];
/// Ingredient recipes feeding [`ONE_OLP_ROWS`]; the q = 1 tail is the degenerate geometry.
pub const ONE_OLP_INGREDIENTS: [IngredientRow; 21] = [
    IngredientRow { r: 1496, u: 69, p: 20, q: 1 },
    IngredientRow { r: 1236, u: 57, p: 20, q: 1 },
    IngredientRow { r: 137, u: 6, p: 21, q: 1 },
    IngredientRow { r: 976, u: 45, p: 20, q: 1 },
    IngredientRow { r: 185, u: 6, p: 29, q: 1 },
    IngredientRow { r: 1156, u: 45, p: 24, q: 1 },
    IngredientRow { r: 233, u: 6, p: 37, q: 1 },
    IngredientRow { r: 2876, u: 69, p: 40, q: 1 },
    IngredientRow { r: 281, u: 15, p: 17, q: 1 },
    IngredientRow { r: 3056, u: 141, p: 20, q: 1 },
    IngredientRow { r: 417, u: 12, p: 33, q: 1 },
    IngredientRow { r: 2796, u: 129, p: 20, q: 1 },
    IngredientRow { r: 113, u: 6, p: 17, q: 1 },
    IngredientRow { r: 1876, u: 45, p: 40, q: 1 },
    IngredientRow { r: 205, u: 9, p: 21, q: 1 },
    IngredientRow { r: 2276, u: 105, p: 20, q: 1 },
    IngredientRow { r: 209, u: 6, p: 33, q: 1 },
    IngredientRow { r: 2016, u: 93, p: 20, q: 1 },
    IngredientRow { r: 169, u: 9, p: 17, q: 1 },
    IngredientRow { r: 1756, u: 81, p: 20, q: 1 },
    IngredientRow { r: 305, u: 6, p: 49, q: 1 },
];
/// Worked examples of the general transversal-design composition (block size 5).
pub const TD_PLAN_ROWS: [TdPlanRow; 44] = [
    TdPlanRow { g: 2, u: 40, q: 43, r0: 20, rs: &[880, 1066] },
    TdPlanRow { g: 2, u: 40, q: 53, r0: 25, rs: &[1085, 1241, 1295] },
    TdPlanRow { g: 2, u: 40, q: 73, r0: 35, rs: &[1495, 1591, 1915] },
    TdPlanRow { g: 2, u: 40, q: 83, r0: 40, rs: &[1700, 1766, 2060] },
    TdPlanRow { g: 2, u: 64, q: 73, r0: 35, rs: &[2371, 2571, 2681, 2791, 2891, 3001, 3101] },
    TdPlanRow { g: 2, u: 64, q: 83, r0: 40, rs: &[2696, 2946, 3056, 3106, 3316, 3476, 3526] },
    TdPlanRow { g: 10, u: 10, q: 43, r0: 106, rs: &[1181, 1206, 1231, 1256, 1281] },
    TdPlanRow { g: 10, u: 10, q: 53, r0: 131, rs: &[1456, 1481, 1506, 1531] },
    TdPlanRow { g: 10, u: 10, q: 73, r0: 181, rs: &[2006, 2031, 2296, 2361] },
    TdPlanRow { g: 10, u: 10, q: 83, r0: 206, rs: &[2281, 2546, 2611] },
    TdPlanRow { g: 10, u: 16, q: 43, r0: 106, rs: &[1826, 1876, 1926, 2256] },
    TdPlanRow { g: 10, u: 16, q: 53, r0: 131, rs: &[2251, 2301, 2591, 2781] },
    TdPlanRow { g: 10, u: 16, q: 73, r0: 181, rs: &[3101, 3391, 3581, 3671, 3831] },
    TdPlanRow { g: 10, u: 16, q: 83, r0: 206, rs: &[3526, 3856, 4106, 4246, 4286, 4356] },
    TdPlanRow { g: 10, u: 22, q: 43, r0: 106, rs: &[2471, 2546, 3026, 3116] },
    TdPlanRow { g: 10, u: 22, q: 53, r0: 131, rs: &[3046, 3121, 3451, 3826, 3841] },
    TdPlanRow { g: 10, u: 22, q: 73, r0: 181, rs: &[4196, 4676, 4766, 5051, 5081, 5246, 5291] },
    TdPlanRow { g: 10, u: 22, q: 83, r0: 206, rs: &[4771, 5101, 5476, 5491, 5746, 5806, 5821, 6016] },
    TdPlanRow { g: 10, u: 28, q: 43, r0: 106, rs: &[3116, 3216, 3796, 3936, 3976] },
    TdPlanRow { g: 10, u: 28, q: 53, r0: 131, rs: &[3841, 4181, 4461, 4621, 4901] },
    TdPlanRow { g: 10, u: 28, q: 73, r0: 181, rs: &[5291, 5771, 6211, 6291, 6351, 6391, 6591, 6751] },
    TdPlanRow { g: 10, u: 28, q: 83, r0: 206, rs: &[6016, 6596, 6736, 6776, 6876, 7016, 7316, 7576, 7636, 7676] },
    TdPlanRow { g: 10, u: 40, q: 43, r0: 106, rs: &[4406, 5336, 5366, 5576, 5696] },
    TdPlanRow { g: 10, u: 40, q: 53, r0: 131, rs: &[5431, 6211, 6481, 6541, 6751, 6781, 7021] },
    TdPlanRow { g: 10, u: 40, q: 73, r0: 181, rs: &[7481, 7961] },
    TdPlanRow { g: 42, u: 10, q: 43, r0: 450, rs: &[4965, 4986, 5070, 5175, 5280, 5301, 5385, 5490, 5616, 5721, 5805] },
    TdPlanRow { g: 42, u: 10, q: 53, r0: 555, rs: &[6120, 6225, 6330, 6351, 6435, 6540, 6666, 6771, 6855, 6981, 7170] },
    TdPlanRow { g: 42, u: 14, q: 43, r0: 450, rs: &[6771, 6876, 6981, 7086, 7191, 7296, 7611, 7926] },
    TdPlanRow { g: 50, u: 10, q: 43, r0: 536, rs: &[5911, 6036, 6161, 6286, 6411, 6986] },
    TdPlanRow { g: 50, u: 10, q: 53, r0: 661, rs: &[7286, 7411, 7536, 7661] },
    TdPlanRow { g: 54, u: 10, q: 49, r0: 660, rs: &[7275, 7896] },
    TdPlanRow { g: 70, u: 10, q: 27, r0: 471, rs: &[5196, 5476, 5511, 5651, 5791, 5826, 5931, 5966, 6001, 6141] },
    TdPlanRow { g: 90, u: 6, q: 7, r0: 156, rs: &[1101] },
    TdPlanRow { g: 90, u: 6, q: 43, r0: 966, rs: &[6771, 6906, 6996, 7011, 7086, 7221, 7311, 7416] },
    TdPlanRow { g: 90, u: 6, q: 49, r0: 1101, rs: &[7716, 7806, 7821, 7896] },
    TdPlanRow { g: 98, u: 10, q: 27, r0: 660, rs: &[7275, 7716] },
    TdPlanRow { g: 126, u: 10, q: 11, r0: 345, rs: &[3810, 3936, 4125, 4251, 4440] },
    TdPlanRow { g: 146, u: 10, q: 11, r0: 400, rs: &[4415, 4780, 4926, 5145] },
    TdPlanRow { g: 166, u: 10, q: 11, r0: 455, rs: &[5020, 5435, 5601, 5850] },
    TdPlanRow { g: 210, u: 6, q: 9, r0: 471, rs: &[3306, 3586, 3621] },
    TdPlanRow { g: 210, u: 8, q: 9, r0: 471, rs: &[4251, 4531, 4881] },
    TdPlanRow { g: 270, u: 6, q: 7, r0: 471, rs: &[3306, 3621] },
    TdPlanRow { g: 450, u: 6, q: 7, r0: 786, rs: &[5511] },
    TdPlanRow { g: 630, u: 6, q: 7, r0: 1101, rs: &[7716, 7821] },
];

/// Replication numbers of the catalog's block-size-five entries; every
/// no-OLP family for k = 5 grows from these.
pub const K5_BASE: [usize; 5] = [20, 25, 30, 35, 40];

/// Values the block-size-four no-OLP spectrum provably reaches nowhere in
/// the recorded tables; existence is open exactly here (besides 1, 4, 5).
pub const NO_OLP_OPEN: [usize; 34] = [
    8, 9, 12, 16, 25, 28, 32, 36, 41, 44, 48, 56, 64, 68, 72, 73, 76, 84, 88, 89, 92, 96, 104,
    113, 116, 124, 128, 137, 144, 148, 164, 168, 212, 308,
];

/// Open replication numbers for block size five (r = 1 mod 5 values with
/// no recorded geometry).
pub const K5_OPEN: [usize; 8] = [11, 16, 36, 56, 66, 81, 96, 116];

/// Recorded outcomes of the weight-pattern-{g,3g,13g} composition with
/// g = 2, u = 40 groups, q = 2*r0 + 3: (r0, replication numbers gained).
pub const W40_EXPECTED: [(usize, &[usize]); 4] = [
    (20, &[885, 890, 895, 900, 991, 1016, 1041, 1066]),
    (25, &[1090, 1100, 1166, 1216, 1241, 1266, 1295]),
    (35, &[1500, 1566, 1591, 1616, 1666, 1695, 1750, 1805, 1910, 1915]),
    (40, &[1766, 1791, 1816, 1841, 1895, 1950, 2005, 2060, 2110, 2131]),
];

/// Recorded outcomes of the weight-pattern-{g,9g/5,3g} composition with
/// g = 10, u = 10 groups, q = (4*r0 + 6)/10: (r0, replication numbers gained).
pub const W10_EXPECTED: [(usize, &[usize]); 4] = [
    (106, &[1206, 1231, 1256, 1281, 1365]),
    (131, &[1481, 1506, 1531, 1560, 1670]),
    (181, &[2031, 2060, 2275, 2280, 2296]),
    (206, &[2310, 2365, 2420, 2475, 2525, 2546, 2611, 2630]),
];
