//! Published pattern tables, embedded for offline regression checks.

/// Stitch gauge width shared by all published models (cm).
pub const WIDTH_CM: f64 = 0.5;

/// One column of the non-intersecting model table.
#[derive(Debug, Clone, Copy)]
pub struct PublishedColumn {
    pub height_cm: f64,
    /// `N` for rounds 1, 2, ...
    pub stitches: &'static [u32],
    /// Total printed under the column (does not always equal the column sum).
    pub stated_total: u32,
}

pub const NON_INTERSECTING_COLUMNS: [PublishedColumn; 3] = [
    PublishedColumn {
        height_cm: 0.4,
        stitches: &[
            5, 11, 18, 25, 34, 43, 53, 63, 74, 85, 96, 107, 119, 131, 143, 155, 167, 180,
        ],
        stated_total: 1512,
    },
    PublishedColumn {
        height_cm: 0.45,
        stitches: &[
            6, 12, 20, 29, 39, 49, 61, 73, 85, 97, 110, 123, 136, 150, 164, 178, 192,
        ],
        stated_total: 1525,
    },
    PublishedColumn {
        height_cm: 0.5,
        stitches: &[
            6, 14, 23, 33, 44, 56, 69, 82, 96, 110, 124, 139, 154, 169, 184, 200,
        ],
        stated_total: 1504,
    },
];

/// Gauge height of the intersecting model (cm).
pub const INTERSECTING_HEIGHT_CM: f64 = 0.45;

/// Rounds 1..=9 of the intersecting model, before the intersection.
pub const INTERSECTING_PRE: [u32; 9] = [6, 14, 24, 35, 46, 59, 72, 86, 100];

/// First round of the per-quarter schedule.
pub const INTERSECTING_START_ROUND: u32 = 10;

/// Per-quarter schedule for rounds 10..=26:
/// `(n_inner, move_in, inc_inner, n_outer, inc_outer)`.
pub const INTERSECTING_SCHEDULE: [(u32, u32, u32, u32, u32); 17] = [
    (2, 2, 0, 26, 3),
    (7, 4, 1, 25, 3),
    (10, 2, 1, 26, 3),
    (12, 1, 1, 27, 2),
    (15, 1, 2, 28, 2),
    (17, 1, 1, 29, 2),
    (20, 1, 2, 31, 3),
    (22, 1, 1, 32, 2),
    (25, 1, 2, 33, 2),
    (27, 1, 1, 35, 3),
    (30, 1, 2, 36, 2),
    (32, 1, 1, 37, 2),
    (34, 0, 2, 39, 2),
    (37, 1, 2, 40, 2),
    (39, 0, 2, 42, 2),
    (42, 1, 2, 43, 2),
    (44, 0, 2, 44, 1),
];

/// Stitch total quoted for the intersecting model.
pub const INTERSECTING_TOTAL: u64 = 4394;
