// Generated by tests/data/stats_corpus.py (scipy 1.15.3). Do not edit.

pub struct PairCase {
    pub a: &'static [f64],
    pub b: &'static [f64],
    pub t: f64,
    pub t_df: f64,
    pub t_p: f64,
    pub ks_d: f64,
    pub ks_p: f64,
}

pub struct GroupCase {
    pub groups: &'static [&'static [f64]],
    pub f: f64,
    pub df_between: f64,
    pub df_within: f64,
    pub p: f64,
}

pub struct SeriesCase {
    pub values: &'static [f64],
    pub mean: f64,
    pub low: f64,
    pub high: f64,
}

pub const PAIRS: &[PairCase] = &[
    PairCase {
        a: &[1.0, 2.0, 3.0],
        b: &[2.0, 3.0, 4.0],
        t: -1.224744871391589,
        t_df: 4.0,
        t_p: 0.2878641347266908,
        ks_d: 0.33333333333333337,
        ks_p: 0.9962551923793987,
    },
    PairCase {
        a: &[1.0, 2.0, 3.0, 4.0],
        b: &[1.0, 2.0, 3.0, 5.0],
        t: -0.2335496832484569,
        t_df: 5.584615384615385,
        t_p: 0.8236578021069852,
        ks_d: 0.25,
        ks_p: 0.9996332921577278,
    },
    PairCase {
        a: &[0.5, 1.5, 2.25, 9.0, 3.0],
        b: &[1.0, 1.0, 2.0],
        t: 1.2506651098640846,
        t_df: 4.385503586681753,
        t_p: 0.2736322125193303,
        ks_d: 0.6,
        ks_p: 0.5094579353194411,
    },
    PairCase {
        a: &[3.0, 1.0, 3.0, 5.0, 2.0, 3.0, 5.0, 5.0],
        b: &[2.0, 2.0, 7.0, 1.0, 6.0, 6.0, 2.0, 4.0],
        t: -0.3841106397986879,
        t_df: 12.025958974455618,
        t_p: 0.707601786923492,
        ks_d: 0.375,
        ks_p: 0.6271670417762616,
    },
    PairCase {
        a: &[1.0, 11.0, 4.0, 8.0, 3.0, 3.0, 9.0, 6.0, 11.0, 8.0, 10.0, 9.0, 4.0, 4.0, 1.0, 9.0],
        b: &[3.0, 6.0, 11.0, 12.0, 6.0, 8.0, 8.0, 3.0, 1.0, 13.0, 8.0, 9.0, 4.0, 2.0, 7.0, 12.0],
        t: -0.5865651007297268,
        t_df: 29.782902919806205,
        t_p: 0.5619158022495615,
        ks_d: 0.1875,
        ks_p: 0.9411813706744824,
    },
    PairCase {
        a: &[3.0, 9.0, 3.0, 4.0, 3.0, 8.0, 5.0, 3.0, 8.0, 7.0, 5.0, 1.0, 8.0, 3.0, 7.0, 3.0, 9.0, 9.0, 5.0, 2.0, 3.0, 2.0, 8.0, 5.0, 9.0, 9.0, 2.0, 5.0, 8.0, 1.0, 4.0, 5.0, 6.0, 5.0, 3.0, 1.0, 2.0, 4.0, 7.0, 5.0, 5.0, 4.0, 7.0, 3.0, 4.0, 7.0, 4.0, 6.0, 5.0, 7.0, 8.0, 8.0, 3.0, 7.0, 9.0, 5.0, 3.0, 4.0, 9.0, 3.0, 2.0, 1.0, 6.0, 1.0],
        b: &[1.0, 8.0, 10.0, 8.0, 2.0, 4.0, 6.0, 6.0, 7.0, 11.0, 2.0, 11.0, 8.0, 2.0, 6.0, 9.0, 10.0, 2.0, 6.0, 9.0, 1.0, 6.0, 6.0, 5.0, 4.0, 8.0, 8.0, 7.0, 7.0, 9.0, 9.0, 10.0, 3.0, 4.0, 7.0, 8.0, 11.0, 3.0, 2.0, 6.0, 11.0, 4.0, 8.0, 5.0, 8.0, 9.0, 2.0, 5.0, 5.0, 11.0, 6.0, 3.0, 8.0, 4.0, 11.0, 2.0, 8.0, 1.0, 3.0, 6.0, 9.0, 6.0, 9.0, 5.0],
        t: -2.6289315868130783,
        t_df: 122.30244816790436,
        t_p: 0.009664250751768053,
        ks_d: 0.25,
        ks_p: 0.03663105270711935,
    },
    PairCase {
        a: &[1.0, 1.0, 1.0, 0.0, 1.0, 0.0, 3.0, 2.0, 2.0, 0.0, 0.0, 0.0, 0.0, 3.0, 1.0, 2.0, 1.0, 1.0, 3.0, 2.0, 1.0, 2.0, 1.0, 0.0, 0.0, 3.0, 2.0, 2.0, 0.0, 1.0],
        b: &[1.0, 2.0, 0.0, 2.0, 1.0, 3.0, 2.0, 0.0, 2.0, 2.0, 5.0, 3.0, 1.0, 4.0, 2.0, 0.0, 0.0, 4.0, 0.0, 4.0, 1.0, 5.0, 0.0, 1.0, 0.0, 2.0, 0.0, 1.0, 2.0, 5.0, 4.0, 1.0, 0.0, 4.0, 4.0, 5.0, 1.0, 0.0, 0.0, 3.0, 5.0, 3.0, 0.0, 1.0, 4.0],
        t: -2.491751615510937,
        t_df: 72.12771189246477,
        t_p: 0.015011271076367372,
        ks_d: 0.2666666666666667,
        ks_p: 0.15453805538450618,
    },
    PairCase {
        a: &[2.0, 2.0, 1.0, 2.0, 2.0],
        b: &[2.0, 3.0, 1.0, 3.0, 1.0, 2.0, 1.0, 1.0, 1.0, 3.0, 2.0, 2.0, 2.0, 3.0, 1.0, 2.0, 1.0, 2.0, 4.0, 3.0, 3.0, 1.0, 1.0, 2.0, 3.0, 1.0, 4.0, 3.0, 3.0, 2.0, 1.0, 4.0, 4.0, 3.0, 3.0, 4.0, 3.0, 4.0, 4.0, 3.0],
        t: -2.280350850198275,
        t_df: 11.360040276179518,
        t_p: 0.04280102608418486,
        ks_d: 0.5,
        ks_p: 0.21646022494742512,
    },
    PairCase {
        a: &[-1.092072, -0.086264, 0.195294, 1.013168, 1.460168, 0.049231, 1.895644, -0.819525, 0.327086, -0.236901],
        b: &[0.572427, -0.951858, -1.097837, 1.283161, 1.06403, 0.561118, -0.702213, 0.592071, 0.447158, 1.233463, 0.232916, -1.614519],
        t: 0.3290530481218063,
        t_df: 19.498998213580247,
        t_p: 0.7456236466672808,
        ks_d: 0.28333333333333327,
        ks_p: 0.7736340895770445,
    },
    PairCase {
        a: &[-0.21626, -0.027445, 0.792205, -0.247773, -1.058217, 1.150392, 0.385599, -1.097424, -0.663839, 0.919146, -1.349368, 0.967976, 0.022872, -0.152219, 0.866086, -0.424157, 0.05578, 1.635002, -0.84487, 1.821685, -1.686116, -0.856448, 0.900917, -0.662844, -0.318335],
        b: &[2.279164, 2.615611, 1.680065, -0.382677, 1.956534, 1.007729, 3.058363, 1.47974, -0.891857, 0.449223, -2.404642, 1.958529, 1.594076, 0.73754, -1.991162, -0.077861, 2.064405, 0.331394, 0.940208, 2.990352, 1.966963, -2.497488, 1.433287, -1.171722, -3.749798],
        t: -1.4960507890425838,
        t_df: 35.69137743854665,
        t_p: 0.14343145638652705,
        ks_d: 0.4,
        ks_p: 0.03663105270711935,
    },
    PairCase {
        a: &[1.159973, -1.485598, -0.31554, 1.248971, 0.703018, -0.062049, -0.887862, 0.296123, -0.068271, 0.821405, 0.388248, 0.729121, -1.503616, -0.859064, 0.159709, 0.368882, -0.624254, -0.70182, -0.027077, 0.124923, 1.964022, -0.38395, 0.537464, -1.712829, -0.1004, -0.321242, -1.288442, -0.970611, -0.645344, -0.78195, -1.897873, -0.32371, -0.098926, -0.306152, 0.814339, -0.171036, 0.099283, -0.035902, 0.116886, -1.059699, -0.287042, 1.79206, 0.326368, -0.163892, -0.450059, 0.37837, 0.005672, 0.216306, 0.875159, 0.144388],
        b: &[-1.345061, -1.606869, -1.962936, -1.08663, -1.120937, -1.629922, -1.579308, -1.846703, -1.79471, -1.473989, -1.33006, -0.863391, -1.019335, -1.57289, -0.895124, -2.274318, -1.496493, -1.058657, -0.56294, -2.122262],
        t: 8.801970693406862,
        t_df: 61.362598997582815,
        t_p: 1.7699313498371616e-12,
        ks_d: 0.7899999999999999,
        ks_p: 3.605279695209891e-08,
    },
    PairCase {
        a: &[-1.207906, -0.499141, -1.571326, -0.047452, 0.25963, -0.26903, -0.883786, 1.875184, 1.575058, 0.304668, 1.466477, -0.793127, -1.329979, 0.252625, 1.803245, -0.22841, 0.753965, 1.25877, 0.044465, 0.841013, -0.660806, 1.290076, 0.421093, 0.067503, -0.629757, -2.855521, 0.318864, 0.002958, -0.116153, -0.397255, 1.884582, -0.086728, -0.081639, -0.003438, -1.072078, -0.53642, -0.34426, 0.316764, 0.598286, -0.755304, 1.056818, -2.390088, 1.51391, 0.658266, 0.826274, 0.139279, 0.413582, 0.331261, -0.347282, -0.908724, 0.418662, 0.26963, -0.672572, 0.058685, -0.726642, 2.394722, 0.547017, 0.645809, 0.912559, -3.508473, 0.032456, 1.12153, -1.109613, 0.364178, 0.603861, -1.237428, 3.115592, 0.108925, -0.032093, 0.072674, 1.313571, 2.631431, -0.411217, -1.761728, 0.659555, 0.27861, 1.360614, -1.365431, -0.287748, 0.034168, -0.189834, -0.352316, -0.465575, 1.687336, -0.333408, 1.171763, -0.102714, 0.651707, 1.190345, 0.548055, -2.143499, -1.136204, -0.658138, 0.625169, -0.821499, -0.955554, 1.322757, 2.131113, -1.038614, -0.280464, 0.074135, -1.155018, -0.52313, -1.698815, 0.381784, -0.288949, -1.374406, -2.266801, 1.218819, -0.015656, -2.324905, 0.049701, 2.145817, -0.058306, 1.175024, -1.442665, 1.108418, -1.427362, 0.589287, -0.398202, 0.298569, 0.723057, -0.826044, -1.384272, 1.770867, 0.72291, 0.558329, 0.078813, 2.202898, 0.841601, -1.958882, -0.084033, 0.087695, -2.437341, -1.47824, 0.914337, -0.450618, 1.225552, -0.588666, -1.467575, 2.747105, 0.6776, -0.307279, 1.159579, -0.097932, -0.872205, 0.710286, 0.268271, -0.747772, 0.128675, -0.639661, 1.846305, 0.664146, -0.128659, -0.796907, -1.00826, 1.589799, -0.15217, 1.051533, 0.884068, 2.09178, 0.117155, -0.172993, -0.159407, -0.470479, 0.650806, 0.78092, 0.971936, -3.405385, -0.722218, -0.575429, -0.801544, 1.180528, -0.526971, -0.858141, 0.313927, -0.484093, 0.006131, -0.720447, -0.86968, 0.656471, -0.02234, -0.65417, -0.136218, 0.147902, -1.366716, 0.263388, 0.55998, -0.618523, 0.242738, -1.983966, -0.543227, 0.633863, -0.343046, 1.020916, 0.115067, 0.163129, -1.984321, -1.486958, -0.336396],
        b: &[-0.013204, 1.136622, 0.080428, 1.158338, -1.136588, 2.059669, -0.463081, -0.866777, -1.058187, -1.496523, 0.423027, -0.544061, -1.029518, -0.332522, -0.612724, 1.465666, -0.299606, 0.286262, -0.346354, 1.523266, -0.440458, -0.289683, -1.182432, 0.370307, 0.262972, 1.475252, 1.456472, 2.404748, 0.593139, 0.625332, -0.159965, 0.424325, -0.675316, -0.100146, 0.084911, 0.779834, 1.023631, -1.030462, -0.816653, -0.19124, -0.311027, -0.303743, -1.406159, 0.026097, -0.442074, 0.300733, 0.243639, -0.865528, 0.501038, 0.554533, -1.471237, 0.716192, -0.312264, 0.255004, 0.130293, -0.383267, -1.681798, 0.140482, -0.475353, -0.175669, 1.522505, -1.349494, -0.479303, 0.806059, -0.619409, 1.796606, 1.624602, -1.630443, 1.997718, -0.352424, -0.122566, 2.356662, 2.388058, -0.087754, -0.791548, 0.164545, 1.056988, -0.573766, 0.617112, 0.1999, 0.071366, 1.102111, -1.368715, -1.242941, -0.603697, 0.934154, 0.76261, -0.072825, 0.705954, -1.174271, -0.483588, 0.76882, 1.600819, -0.41402, 0.102054, -0.843615, -0.550024, 0.316952, 0.661661, -0.937073, -0.205954, 0.753466, 1.37412, -1.178791, -0.306422, -0.158191, -0.149077, 0.346302, -0.295684, 0.288826, 1.388617, 1.382189, -0.3989, -0.094802, 0.663531, -0.302169, -0.425126, -0.846492, -0.484056, -0.846557, -0.736067, -0.574115, -0.035128, 1.865405, 1.71635, 0.453286, 0.506514, 0.759865, 0.046068, -0.206974, 1.511973, -1.298636, 1.292023, -0.801065, -1.591213, 0.796832, -0.738343, -2.470492, 0.495772, 0.483881, -0.002183, 0.892021, -1.015609, 0.187739, 1.41576, 0.22629, -0.010647, -0.628409, -0.067993, 0.319225],
        t: -0.6926971980093205,
        t_df: 343.0392210620271,
        t_p: 0.4889682593210878,
        ks_d: 0.06333333333333335,
        ks_p: 0.8818208309399311,
    },
];

pub const GROUPS: &[GroupCase] = &[
    GroupCase {
        groups: &[&[1.0, 2.0, 3.0], &[2.0, 3.0, 4.0], &[5.0, 6.0, 9.0]],
        f: 8.578947368421048,
        df_between: 2.0,
        df_within: 6.0,
        p: 0.01739228024042076,
    },
    GroupCase {
        groups: &[&[1.0, 1.0, 2.0, 2.0], &[1.0, 2.0, 2.0, 3.0]],
        f: 1.0,
        df_between: 1.0,
        df_within: 6.0,
        p: 0.355917683749582,
    },
    GroupCase {
        groups: &[&[3.0, 5.0, 5.0, 2.0, 5.0, 1.0, 4.0, 4.0], &[1.0, 6.0, 6.0, 3.0, 4.0, 2.0, 5.0, 5.0], &[3.0, 6.0, 5.0, 5.0, 3.0, 2.0, 1.0, 3.0]],
        f: 0.18997912317327767,
        df_between: 2.0,
        df_within: 21.0,
        p: 0.8283819763486553,
    },
    GroupCase {
        groups: &[&[5.0, 1.0, 7.0, 8.0, 8.0, 9.0, 6.0, 5.0, 9.0, 8.0, 7.0, 3.0, 3.0, 9.0, 6.0, 8.0], &[2.0, 1.0, 3.0, 9.0, 8.0, 9.0, 6.0, 8.0, 8.0, 3.0, 1.0, 7.0, 2.0, 5.0, 4.0, 10.0], &[4.0, 3.0, 9.0, 4.0, 10.0, 6.0, 2.0, 2.0, 1.0, 2.0, 10.0, 3.0, 5.0, 9.0, 7.0, 2.0], &[5.0, 10.0, 7.0, 11.0, 6.0, 12.0, 12.0, 5.0, 11.0, 4.0, 4.0, 2.0, 7.0, 5.0, 11.0, 1.0], &[10.0, 12.0, 9.0, 5.0, 4.0, 3.0, 1.0, 10.0, 8.0, 12.0, 3.0, 8.0, 3.0, 8.0, 5.0, 6.0]],
        f: 1.27776860186638,
        df_between: 4.0,
        df_within: 75.0,
        p: 0.2863160175194829,
    },
    GroupCase {
        groups: &[&[2.0, 4.0, 2.0, 1.0, 4.0, 7.0, 3.0, 7.0, 5.0, 4.0, 7.0, 3.0, 1.0, 4.0, 2.0, 2.0, 6.0, 7.0, 1.0, 2.0, 7.0, 4.0, 4.0, 1.0, 2.0, 2.0, 3.0, 7.0, 5.0, 6.0, 2.0, 4.0, 6.0, 1.0, 6.0, 1.0, 3.0, 6.0, 2.0, 7.0, 5.0, 5.0, 1.0, 3.0, 5.0, 7.0, 2.0, 4.0, 4.0, 2.0, 4.0, 2.0, 1.0, 7.0, 2.0, 5.0, 6.0, 6.0, 4.0, 7.0, 4.0, 1.0, 7.0, 3.0], &[1.0, 5.0, 3.0, 8.0, 7.0, 2.0, 3.0, 6.0, 7.0, 3.0, 5.0, 4.0, 1.0, 5.0, 4.0, 6.0, 8.0, 6.0, 4.0, 8.0, 1.0, 1.0, 5.0, 8.0, 3.0, 8.0, 7.0, 4.0, 2.0, 1.0, 8.0, 7.0, 8.0, 6.0, 4.0, 6.0, 7.0, 3.0, 6.0, 2.0, 5.0, 1.0, 4.0, 2.0, 5.0, 3.0, 3.0, 2.0, 5.0, 1.0, 3.0, 7.0, 1.0, 4.0, 3.0, 7.0, 1.0, 2.0, 7.0, 6.0, 8.0, 2.0, 5.0, 2.0], &[9.0, 8.0, 6.0, 4.0, 2.0, 4.0, 8.0, 5.0, 1.0, 6.0, 7.0, 3.0, 9.0, 5.0, 9.0, 8.0, 2.0, 9.0, 3.0, 8.0, 3.0, 9.0, 6.0, 8.0, 4.0, 9.0, 3.0, 6.0, 4.0, 9.0, 3.0, 9.0, 5.0, 9.0, 4.0, 9.0, 9.0, 5.0, 6.0, 4.0, 4.0, 1.0, 2.0, 2.0, 2.0, 6.0, 3.0, 8.0, 1.0, 8.0, 1.0, 3.0, 4.0, 2.0, 1.0, 1.0, 1.0, 4.0, 9.0, 5.0, 7.0, 7.0, 6.0, 2.0], &[7.0, 3.0, 6.0, 10.0, 4.0, 1.0, 9.0, 10.0, 10.0, 2.0, 7.0, 10.0, 9.0, 9.0, 4.0, 8.0, 3.0, 9.0, 10.0, 9.0, 2.0, 5.0, 3.0, 7.0, 5.0, 10.0, 9.0, 8.0, 2.0, 1.0, 5.0, 3.0, 5.0, 3.0, 5.0, 6.0, 9.0, 9.0, 4.0, 8.0, 2.0, 7.0, 1.0, 5.0, 4.0, 5.0, 2.0, 4.0, 7.0, 6.0, 2.0, 9.0, 9.0, 5.0, 5.0, 3.0, 9.0, 4.0, 9.0, 3.0, 7.0, 5.0, 3.0, 5.0], &[9.0, 11.0, 6.0, 3.0, 8.0, 8.0, 3.0, 8.0, 9.0, 8.0, 2.0, 2.0, 9.0, 7.0, 11.0, 11.0, 11.0, 3.0, 2.0, 7.0, 11.0, 1.0, 8.0, 6.0, 5.0, 1.0, 9.0, 9.0, 10.0, 11.0, 11.0, 9.0, 4.0, 2.0, 3.0, 10.0, 4.0, 5.0, 3.0, 11.0, 8.0, 6.0, 11.0, 11.0, 1.0, 3.0, 10.0, 8.0, 2.0, 8.0, 7.0, 7.0, 3.0, 9.0, 9.0, 3.0, 11.0, 3.0, 1.0, 10.0, 10.0, 9.0, 1.0, 10.0]],
        f: 10.830325774512936,
        df_between: 4.0,
        df_within: 315.0,
        p: 3.075468443149062e-08,
    },
    GroupCase {
        groups: &[&[1.0, 2.0, 1.0, 1.0, 2.0, 1.0, 2.0, 1.0, 1.0, 1.0, 1.0, 2.0], &[3.0, 1.0, 3.0, 3.0, 2.0, 1.0, 1.0, 1.0, 3.0, 1.0, 2.0, 2.0], &[2.0, 1.0, 1.0, 2.0, 3.0, 3.0, 3.0, 4.0, 3.0, 3.0, 2.0, 4.0], &[3.0, 5.0, 2.0, 3.0, 3.0, 3.0, 5.0, 1.0, 2.0, 3.0, 4.0, 3.0]],
        f: 8.256124721603566,
        df_between: 3.0,
        df_within: 44.0,
        p: 0.00018135619890413278,
    },
    GroupCase {
        groups: &[&[0.756805, 1.29922, -0.363293, -0.73747, 0.860753, 0.410377, 1.014276, -0.516262, -1.876931, -0.485263], &[0.218993, 1.337932, 1.464001, -1.072254, 0.45445, 0.463243, 0.858711, 1.420588, 0.729939, 1.114635, -1.45704, 2.444638, 2.388921], &[1.213541, 2.0078, 0.645944, 0.50107, -0.783502, -0.656779, 1.331719, 2.024068, 1.134487, 2.230618, 0.416949, 1.115207, 2.642294, 0.672536, 1.118377, 0.998625], &[2.16931, 3.05322, 0.108045, 0.259441, 0.28579, 1.011552, 0.464572, 1.974791, 1.48926, 0.706262, 1.195094, 1.189688, 0.443533, 0.945901, -0.874362, 1.08672, 0.101706, 1.170611, 2.173622]],
        f: 2.549981443571137,
        df_between: 3.0,
        df_within: 54.0,
        p: 0.06522473966921863,
    },
];

pub const SERIES: &[SeriesCase] = &[
    SeriesCase {
        values: &[0.0, 2.0],
        mean: 1.0,
        low: -11.706204736432094,
        high: 13.706204736432094,
    },
    SeriesCase {
        values: &[1.0, 2.0, 3.0, 4.0],
        mean: 2.5,
        low: 0.445739743239121,
        high: 4.5542602567608785,
    },
    SeriesCase {
        values: &[5.0, 5.0, 5.0, 6.0],
        mean: 5.25,
        low: 4.454388423678934,
        high: 6.045611576321066,
    },
    SeriesCase {
        values: &[3.984857, 2.222918, 3.066292],
        mean: 3.0913556666666664,
        low: 0.9022419539445372,
        high: 5.280469379388796,
    },
    SeriesCase {
        values: &[1.763802, -0.574728, 3.361723, 4.16116, 3.830472, 5.297137, 3.042649, 1.32501, 0.633474, -1.148544, 3.905719, 5.692836, 5.191387, 0.881055, 6.016716, -1.444348],
        mean: 2.62097,
        low: 1.3064168936779383,
        high: 3.9355231063220613,
    },
    SeriesCase {
        values: &[0.176581, -0.542428, 4.48632, -0.307723, 3.110033, 0.201235, 1.890126, 5.094035, -0.763089, 9.737089, 1.941521, 1.731461, 4.322396, 1.720544, 4.908316, 2.837456, 1.226192, 2.898093, 0.754528, 3.814277, 2.107125, 2.539293, 5.232813, 7.752733, 5.038396, 2.511132, 1.888743, 4.96077, 1.811441, 3.79639, 0.018725, 2.546413, 2.286827, -0.04121, 4.602621, -0.600682, 1.831877, 6.288052, 3.607148, -2.619578, 3.428879, 2.21355, 2.462484, -1.616944, 3.655987, -4.067022, 3.986441, 4.296836, 4.070894, 1.647529, 4.821274, 0.984477, 1.784365, 3.669461, 4.811256, 4.658937, 2.448166, 5.804429, 3.868833, 7.018991, 1.665648, 1.415683, 2.359874, 5.688],
        mean: 2.7480315625,
        low: 2.1421628668583157,
        high: 3.3539002581416844,
    },
];
