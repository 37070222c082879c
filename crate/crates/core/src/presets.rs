//! Named diagrams used by the CLI, the service, and the test suites.

use crate::diagram::Diagram;

fn build(pairs: &[(u32, u32)]) -> Diagram {
    Diagram::from_pairs(pairs.iter().copied()).expect("preset cells are valid")
}

/// Five cells; three moves at most, one at least.
pub fn small() -> Diagram {
    build(&[(1, 1), (2, 1), (2, 2), (2, 3), (3, 3)])
}

/// Seventeen cells over eight columns; 41 moves at most, 23 at least.
pub fn large() -> Diagram {
    build(&[
        (2, 1), (2, 2), (3, 3), (2, 4), (4, 2), (4, 4), (4, 5), (5, 2), (5, 3),
        (5, 4), (3, 6), (6, 6), (6, 7), (3, 8), (6, 8), (7, 2), (7, 3),
    ])
}

/// Four columns whose right-to-left justification passes exercise every
/// case of the column ceiling.
pub fn lowering() -> Diagram {
    build(&[(3, 1), (4, 1), (2, 2), (2, 3), (3, 3), (4, 3), (2, 4), (4, 4)])
}

/// Looks up a preset by its CLI/service name.
pub fn by_name(name: &str) -> Option<Diagram> {
    match name {
        "small" => Some(small()),
        "large" => Some(large()),
        "lowering" => Some(lowering()),
        _ => None,
    }
}

pub const NAMES: [&str; 3] = ["small", "large", "lowering"];
