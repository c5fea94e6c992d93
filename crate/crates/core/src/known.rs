//! The ten previously known anomalous nine-tuples.

/// `(a, b, c, x1, y1, z1, x2, y2, z2)`.
pub const KNOWN_ANOMALOUS: [[u64; 9]; 10] = [
    [2, 6, 38, 1, 2, 1, 5, 1, 1],
    [3, 6, 15, 2, 1, 1, 2, 3, 2],
    [6, 15, 231, 1, 2, 1, 3, 1, 1],
    [3, 1215, 6, 4, 1, 4, 8, 1, 5],
    [3, 6, 7857, 4, 5, 1, 8, 4, 1],
    [5, 275, 280, 1, 1, 1, 7, 1, 2],
    [5, 280, 78405, 1, 2, 1, 7, 1, 1],
    [30, 70, 4930, 1, 2, 1, 5, 2, 2],
    [30, 4930, 24304930, 1, 2, 1, 5, 1, 1],
    [2, 88, 6, 7, 1, 3, 5, 2, 5],
];
