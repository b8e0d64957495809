//! Small numeric facts about bridge position and web sizes.

use serde::{Deserialize, Serialize};

/// Number of intersection points forced by a `b`-bridge position: the
/// crossing counts `2, 4, ..., 2b, ..., 4, 2` summed over the levels of the
/// bridge sphere sweep.  Equals `2 b^2`.
pub fn bridge_width(b: usize) -> usize {
    let up: usize = (1..=b).map(|i| 2 * i).sum();
    let down: usize = (1..b).rev().map(|i| 2 * i).sum();
    up + down
}

/// Divisibility and size constraints tying the order `n` of the
/// Scharlemann cycles to the vertex count `v` of a great web.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct WebNumberCheck {
    /// The order divides the web size (`n | v`).
    pub divides: bool,
    /// The web is strictly larger than one cycle (`n != v`).
    pub proper: bool,
    /// Minimal web size (`v >= 4`).
    pub min_ok: bool,
}

impl WebNumberCheck {
    /// All constraints hold.
    pub fn pass(&self) -> bool {
        self.divides && self.proper && self.min_ok
    }
}

/// Checks the web-size constraints for Scharlemann order `n` and web vertex
/// count `v`.
pub fn web_number_check(n: usize, v: usize) -> WebNumberCheck {
    WebNumberCheck {
        divides: n != 0 && v % n == 0,
        proper: n != v,
        min_ok: v >= 4,
    }
}
