//! Named, embedded fixtures: small canonical pairs and stars.
//!
//! Each fixture is a frozen JSON document compiled into the library, so
//! the command-line tool can list and emit them byte-for-byte and tests
//! can reload them without touching the filesystem.
//!
//! The pair fixtures cover the canonical small shapes: the two valid
//! 2-by-2 pairs (`loop-pair`, whose P side is two disjoint loops, and
//! `cross-pair`, whose every edge joins antiparallel vertices), and
//! `great-web-pair`, a 4-by-12 instance built around one order-2
//! Scharlemann bigon whose positive centre is simultaneously an innermost
//! (+)-set, the bounded side of a new cycle, and a great 2-web.

use crate::error::{Error, Result};
use crate::pair::IntersectionPair;
use crate::star::Star;

/// What a fixture's JSON parses into.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FixtureKind {
    /// An intersection-pair document.
    Pair,
    /// A star document.
    Star,
}

/// One named, embedded JSON document.
#[derive(Clone, Copy, Debug)]
pub struct Fixture {
    /// Stable lookup name.
    pub name: &'static str,
    /// One-line description.
    pub description: &'static str,
    /// How to parse the document.
    pub kind: FixtureKind,
    /// The frozen JSON.
    pub json: &'static str,
}

/// The 2-by-2 pair whose P side is two disjoint loops.
pub const LOOP_PAIR_JSON: &str = r#"{
  "p": 2,
  "q": 2,
  "signsP": ["+", "-"],
  "signsQ": ["+", "-"],
  "matching": [[[1, 1], [1, 2]], [[2, 1], [2, 2]]]
}"#;

/// The 2-by-2 pair whose every edge joins antiparallel vertices.
pub const CROSS_PAIR_JSON: &str = r#"{
  "p": 2,
  "q": 2,
  "signsP": ["+", "-"],
  "signsQ": ["+", "-"],
  "matching": [[[1, 1], [2, 1]], [[1, 2], [2, 2]]]
}"#;

/// The 8-label model star with two switches of each kind.
pub const MODEL_STAR_JSON: &str = r#"{
  "sign": "+",
  "parities": ["-", "+", "-", "+", "-", "+", "-", "+"],
  "labels": [1, 2, 3, 4, 5, 6, 7, 8],
  "omega": ["out", "out", "out", "in", "in", "out", "in", "in"]
}"#;

/// A 4-by-12 pair whose Q side realises, at once: an order-2 Scharlemann
/// bigon on vertices {2, 4} (1-based) with label pair {1, 2}; a new
/// non-great cycle on {1, 3} whose bounded side is exactly {2, 4, 6, 8};
/// and {2, 4, 6, 8} as a connected innermost (+)-set and great 2-web.
/// Two further two-vertex clusters keep every vertex non-isolated and
/// every auxiliary empty bigon on the same label pair {1, 2}.
pub const GREAT_WEB_PAIR_JSON: &str = r#"{
  "p": 4,
  "q": 12,
  "signsP": ["-", "+", "+", "-"],
  "signsQ": ["-", "+", "-", "+", "-", "+", "-", "+", "+", "-", "+", "-"],
  "matching": [
    [[1, 2], [2, 4]],
    [[2, 2], [1, 4]],
    [[1, 6], [3, 2]],
    [[1, 8], [3, 4]],
    [[4, 2], [2, 6]],
    [[4, 4], [2, 8]],
    [[4, 6], [3, 8]],
    [[3, 6], [3, 1]],
    [[4, 8], [1, 3]],
    [[4, 1], [2, 3]],
    [[4, 3], [2, 1]],
    [[1, 1], [3, 7]],
    [[3, 3], [4, 5]],
    [[1, 5], [2, 7]],
    [[2, 5], [1, 7]],
    [[3, 5], [4, 7]],
    [[1, 9], [2, 11]],
    [[2, 9], [1, 11]],
    [[4, 9], [3, 11]],
    [[3, 9], [3, 10]],
    [[1, 10], [2, 12]],
    [[2, 10], [1, 12]],
    [[4, 10], [3, 12]],
    [[4, 11], [4, 12]]
  ]
}"#;

/// Every embedded fixture, in listing order.
pub const ALL: &[Fixture] = &[
    Fixture {
        name: "loop-pair",
        description: "2x2 pair; P side is two disjoint loops, Q side a parallel edge pair",
        kind: FixtureKind::Pair,
        json: LOOP_PAIR_JSON,
    },
    Fixture {
        name: "cross-pair",
        description: "2x2 pair; every edge joins antiparallel vertices (all isolated)",
        kind: FixtureKind::Pair,
        json: CROSS_PAIR_JSON,
    },
    Fixture {
        name: "great-web-pair",
        description: "4x12 pair; order-2 Scharlemann bigon, new cycle bounding an innermost (+)-set and great 2-web",
        kind: FixtureKind::Pair,
        json: GREAT_WEB_PAIR_JSON,
    },
    Fixture {
        name: "model-star",
        description: "8-label star with switch sets A = {4, 7} and C = {1, 6} (1-based)",
        kind: FixtureKind::Star,
        json: MODEL_STAR_JSON,
    },
];

/// Looks a fixture up by name.
pub fn by_name(name: &str) -> Option<&'static Fixture> {
    ALL.iter().find(|f| f.name == name)
}

/// Parses a pair fixture.
pub fn pair(name: &str) -> Result<IntersectionPair> {
    let f = by_name(name)
        .ok_or_else(|| Error::InvalidInput(format!("no fixture named {name:?}")))?;
    if f.kind != FixtureKind::Pair {
        return Err(Error::InvalidInput(format!("{name:?} is not a pair fixture")));
    }
    IntersectionPair::from_json(f.json)
}

/// Parses a star fixture.
pub fn star(name: &str) -> Result<Star> {
    let f = by_name(name)
        .ok_or_else(|| Error::InvalidInput(format!("no fixture named {name:?}")))?;
    if f.kind != FixtureKind::Star {
        return Err(Error::InvalidInput(format!("{name:?} is not a star fixture")));
    }
    Star::from_json(f.json)
}
