// Cell values transcribed from the published tables.

/// No, point, width, F, P, M (full precision).
pub const NEW_FULL: [(u32, Option<u32>, f64, f64, f64, f64); 25] = [
    (
        1,
        Some(0),
        18.000000000,
        14.562306046,
        12.727922279,
        11.124611685,
    ),
    (
        2,
        Some(1),
        20.594211063,
        16.661066905,
        14.562306545,
        12.727922279,
    ),
    (
        3,
        Some(2),
        23.562307183,
        19.062307131,
        16.661067475,
        14.562306545,
    ),
    (
        4,
        Some(3),
        26.958173737,
        21.809620912,
        19.062307784,
        16.661067475,
    ),
    (
        5,
        Some(4),
        30.843462211,
        24.952885347,
        21.809621658,
        19.062307784,
    ),
    (
        6,
        Some(5),
        35.288709483,
        28.549165971,
        24.952886201,
        21.809621658,
    ),
    (
        7,
        Some(6),
        40.374618401,
        32.663752759,
        28.549166948,
        24.952886201,
    ),
    (
        8,
        Some(8),
        46.193522941,
        37.371345468,
        32.663753877,
        28.549166948,
    ),
    (
        9,
        Some(10),
        52.851064510,
        42.757409793,
        37.371346747,
        32.663753877,
    ),
    (
        10,
        Some(12),
        60.468109856,
        48.919728988,
        42.757411256,
        37.371346747,
    ),
    (
        11,
        Some(15),
        69.182945386,
        55.970179106,
        48.919730662,
        42.757411256,
    ),
    (
        12,
        Some(25),
        79.153787735,
        64.036760096,
        55.970181022,
        48.919730662,
    ),
    (
        13,
        Some(30),
        90.561656168,
        73.265919622,
        64.036762288,
        55.970181022,
    ),
    (
        14,
        Some(40),
        103.613658963,
        83.825211801,
        73.265922130,
        64.036762288,
    ),
    (
        15,
        Some(50),
        118.546753426,
        95.906339123,
        83.825214670,
        73.265922130,
    ),
    (
        16,
        Some(60),
        135.632047826,
        109.728632786,
        95.906342405,
        83.825214670,
    ),
    (
        17,
        Some(80),
        155.179723323,
        125.543034624,
        109.728636542,
        95.906342405,
    ),
    (
        18,
        Some(100),
        177.544665266,
        143.636652918,
        125.543038921,
        109.728636542,
    ),
    (
        19,
        Some(130),
        203.132906087,
        164.337974808,
        143.636657834,
        125.543038921,
    ),
    (
        20,
        Some(150),
        232.408996764,
        188.022829935,
        164.337980433,
        143.636657834,
    ),
    (
        21,
        Some(200),
        265.904440681,
        215.121213573,
        188.022836371,
        164.337980433,
    ),
    (
        22,
        Some(300),
        304.227342996,
        246.125093134,
        215.121220936,
        188.022836371,
    ),
    (
        23,
        Some(500),
        348.073450708,
        281.597339770,
        246.125101559,
        215.121220936,
    ),
    (
        24,
        None,
        398.238783847,
        322.181947220,
        281.597349409,
        246.125101559,
    ),
    (
        25,
        None,
        455.634087108,
        368.615723426,
        322.181958248,
        281.597349409,
    ),
];

/// No, point, width, F, P, M (rounded to mm).
pub const NEW_ROUNDED: [(u32, Option<u32>, f64, f64, f64, f64); 25] = [
    (1, Some(0), 18.0, 14.6, 12.7, 11.1),
    (2, Some(1), 20.6, 16.7, 14.6, 12.7),
    (3, Some(2), 23.6, 19.1, 16.7, 14.6),
    (4, Some(3), 27.0, 21.8, 19.1, 16.7),
    (5, Some(4), 30.8, 25.0, 21.8, 19.1),
    (6, Some(5), 35.3, 28.5, 25.0, 21.8),
    (7, Some(6), 40.4, 32.7, 28.5, 25.0),
    (8, Some(8), 46.2, 37.4, 32.7, 28.5),
    (9, Some(10), 52.9, 42.8, 37.4, 32.7),
    (10, Some(12), 60.5, 48.9, 42.8, 37.4),
    (11, Some(15), 69.2, 56.0, 48.9, 42.8),
    (12, Some(25), 79.2, 64.0, 56.0, 48.9),
    (13, Some(30), 90.6, 73.3, 64.0, 56.0),
    (14, Some(40), 103.6, 83.8, 73.3, 64.0),
    (15, Some(50), 118.5, 95.9, 83.8, 73.3),
    (16, Some(60), 135.6, 109.7, 95.9, 83.8),
    (17, Some(80), 155.2, 125.5, 109.7, 95.9),
    (18, Some(100), 177.5, 143.6, 125.5, 109.7),
    (19, Some(130), 203.1, 164.3, 143.6, 125.5),
    (20, Some(150), 232.4, 188.0, 164.3, 143.6),
    (21, Some(200), 265.9, 215.1, 188.0, 164.3),
    (22, Some(300), 304.2, 246.1, 215.1, 188.0),
    (23, Some(500), 348.1, 281.6, 246.1, 215.1),
    (24, None, 398.2, 322.2, 281.6, 246.1),
    (25, None, 455.6, 368.6, 322.2, 281.6),
];

/// No, point, circumference of F, P, M in cm.
pub const CIRCUMFERENCE: [(u32, Option<u32>, f64, f64, f64); 25] = [
    (1, Some(0), 65.1, 61.5, 58.2),
    (2, Some(1), 74.5, 70.3, 66.6),
    (3, Some(2), 85.2, 80.4, 76.2),
    (4, Some(3), 97.5, 92.0, 87.2),
    (5, Some(4), 111.6, 105.3, 99.8),
    (6, Some(5), 127.7, 120.5, 114.2),
    (7, Some(6), 146.1, 137.8, 130.7),
    (8, Some(8), 167.1, 157.7, 149.5),
    (9, Some(10), 191.2, 180.4, 171.0),
    (10, Some(12), 218.8, 206.5, 195.7),
    (11, Some(15), 250.3, 236.2, 223.9),
    (12, Some(25), 286.4, 270.2, 256.1),
    (13, Some(30), 327.7, 309.2, 293.1),
    (14, Some(40), 374.9, 353.8, 335.3),
    (15, Some(50), 428.9, 404.7, 383.6),
    (16, Some(60), 490.7, 463.1, 438.9),
    (17, Some(80), 561.4, 529.8, 502.2),
    (18, Some(100), 642.4, 606.2, 574.5),
    (19, Some(130), 734.9, 693.5, 657.4),
    (20, Some(150), 840.9, 793.5, 752.1),
    (21, Some(200), 962.1, 907.9, 860.5),
    (22, Some(300), 1100.7, 1038.7, 984.5),
    (23, Some(500), 1259.3, 1188.4, 1126.4),
    (24, None, 1440.8, 1359.7, 1288.7),
    (25, None, 1648.5, 1555.6, 1474.5),
];

/// No, point, area of F, P, M in cm².
pub const AREA: [(u32, Option<u32>, f64, f64, f64); 25] = [
    (1, Some(0), 262.1, 229.1, 200.2),
    (2, Some(1), 343.1, 299.9, 262.1),
    (3, Some(2), 449.2, 392.6, 343.1),
    (4, Some(3), 587.9, 513.9, 449.2),
    (5, Some(4), 769.6, 672.7, 587.9),
    (6, Some(5), 1007.5, 880.6, 769.6),
    (7, Some(6), 1318.8, 1152.7, 1007.5),
    (8, Some(8), 1726.3, 1508.9, 1318.8),
    (9, Some(10), 2259.8, 1975.1, 1726.3),
    (10, Some(12), 2958.1, 2585.5, 2259.8),
    (11, Some(15), 3872.2, 3384.4, 2958.1),
    (12, Some(25), 5068.8, 4430.3, 3872.2),
    (13, Some(30), 6635.1, 5799.3, 5068.8),
    (14, Some(40), 8685.4, 7591.4, 6635.1),
    (15, Some(50), 11369.4, 9937.2, 8685.4),
    (16, Some(60), 14882.7, 13008.0, 11369.4),
    (17, Some(80), 19481.7, 17027.7, 14882.7),
    (18, Some(100), 25501.9, 22289.5, 19481.7),
    (19, Some(130), 33382.5, 29177.3, 25501.9),
    (20, Some(150), 43698.2, 38193.6, 33382.5),
    (21, Some(200), 57201.7, 49996.1, 43698.2),
    (22, Some(300), 74878.0, 65445.8, 57201.7),
    (23, Some(500), 98016.6, 85669.6, 74878.0),
    (24, None, 128305.3, 112143.0, 98016.6),
    (25, None, 167953.9, 146797.1, 128305.4),
];

/// Legacy French/Japanese table: No, point, width, F, P, M in cm.
pub const LEGACY: [(u32, u32, u32, u32, u32, u32); 25] = [
    (1, 0, 18, 14, 12, 10),
    (2, 1, 22, 16, 14, 12),
    (3, 2, 24, 19, 16, 14),
    (4, 3, 27, 22, 19, 16),
    (5, 4, 33, 24, 22, 19),
    (6, 5, 35, 27, 24, 22),
    (7, 6, 41, 33, 27, 24),
    (8, 8, 46, 38, 33, 27),
    (9, 10, 55, 46, 38, 33),
    (10, 12, 61, 50, 46, 38),
    (11, 15, 65, 54, 50, 46),
    (12, 20, 73, 60, 54, 50),
    (13, 25, 81, 65, 60, 54),
    (14, 30, 92, 73, 65, 60),
    (15, 40, 100, 81, 73, 65),
    (16, 50, 116, 89, 81, 73),
    (17, 60, 130, 97, 89, 81),
    (18, 80, 146, 114, 97, 89),
    (19, 100, 162, 130, 114, 97),
    (20, 120, 195, 130, 114, 97),
    (21, 130, 195, 162, 130, 114),
    (22, 150, 228, 182, 162, 146),
    (23, 200, 260, 195, 182, 162),
    (24, 300, 292, 219, 197, 182),
    (25, 500, 334, 250, 219, 197),
];
