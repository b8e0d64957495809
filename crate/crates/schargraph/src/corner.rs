//! Corner quality calculus: good / bad / ugly corners and corner index.
//!
//! A *corner profile* is the abstract shape of one corner of a face in a
//! dually oriented subgraph, read in traversal (counterclockwise) order
//! around its fat vertex: the character of the arrival endpoint, a sequence
//! of interior slots (each with a character), and the dual-orientation arc
//! values between consecutive slots.  There is always exactly one more arc
//! than interior slots: the first arc follows the arrival endpoint and the
//! last arc precedes the departure endpoint.
//!
//! Every interior slot is classified by its flanking arcs:
//!
//! * `(Out, In)`  — an **anticlockwise switch** (the A-kind),
//! * `(In, Out)`  — a **clockwise switch** (the C-kind),
//! * equal arcs   — a **plain** (non-switch) slot.
//!
//! Quality is judged against an ambient pair of characters `(eta_c, eta_a)`:
//!
//! * the corner is **ugly** when its anticlockwise switches carry mixed
//!   characters;
//! * otherwise the corner splits at its switch slots into *maximal atoms*
//!   (switch-free stretches).  An atom whose arcs point `In` is good exactly
//!   when the character of its later end equals `eta_c`; an atom whose arcs
//!   point `Out` is good exactly when the character of its earlier end
//!   equals `eta_c`.  "End" here means the flanking switch slot, or the
//!   arrival/departure endpoint for the outermost atoms.
//! * if the anticlockwise-switch characters agree with `eta_a` (or there are
//!   no switches at all) the corner is **good** iff *all* atoms are good;
//!   if they agree with `-eta_a` it is **good** iff *some* atom is good.
//!   In all remaining cases it is **bad**.
//!
//! When the corner has no switches the two aggregation rules coincide:
//! the single atom is the whole corner, so "all" and "some" agree.
//!
//! The **index** of a corner is `1 - s` where `s` is its number of interior
//! switch slots; the index of an edge between two corners is `-1` when the
//! adjacent arc values agree and `0` otherwise.  These feed the face index
//! bound used by the verification harness.

use serde::{Deserialize, Serialize};

use crate::sign::{Dir, Sign};

/// Classification of an interior slot of a corner by its flanking arcs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CornerSlotKind {
    /// Arcs `(Out, In)`: an A-kind switch.
    Anticlockwise,
    /// Arcs `(In, Out)`: a C-kind switch.
    Clockwise,
    /// Equal flanking arcs: not a switch.
    Plain,
}

/// Quality of a corner relative to an ambient character pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CornerQuality {
    Good,
    Bad,
    /// Anticlockwise switches of mixed character; quality undefined.
    Ugly,
}

/// One switch-free stretch of a corner, with the characters of the slots
/// (or endpoints) bounding it and the common direction of its arcs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Atom {
    /// Character of the earlier bounding slot (arrival endpoint for the
    /// first atom, otherwise the preceding switch).
    pub early_char: Sign,
    /// Character of the later bounding slot (departure endpoint for the
    /// last atom, otherwise the following switch).
    pub late_char: Sign,
    /// Common arc direction inside the atom.
    pub dir: Dir,
}

impl Atom {
    /// Whether this atom is good relative to `eta_c`.
    pub fn is_good(&self, eta_c: Sign) -> bool {
        match self.dir {
            Dir::In => self.late_char == eta_c,
            Dir::Out => self.early_char == eta_c,
        }
    }
}

/// Abstract corner: endpoint characters, interior slot characters, and the
/// arc directions between them, all in traversal (ccw) order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CornerProfile {
    /// Character of the arrival endpoint slot.
    pub arr_char: Sign,
    /// Character of the departure endpoint slot.
    pub dep_char: Sign,
    /// Characters of interior slots, in traversal order.
    pub interior: Vec<Sign>,
    /// Arc directions; `arcs.len() == interior.len() + 1`.
    pub arcs: Vec<Dir>,
}

impl CornerProfile {
    /// Builds a profile, checking the arc/slot length invariant.
    pub fn new(arr_char: Sign, dep_char: Sign, interior: Vec<Sign>, arcs: Vec<Dir>) -> Self {
        assert_eq!(
            arcs.len(),
            interior.len() + 1,
            "a corner needs exactly one more arc than interior slots"
        );
        CornerProfile { arr_char, dep_char, interior, arcs }
    }

    /// Kind of interior slot `i`, from its flanking arcs.
    pub fn slot_kind(&self, i: usize) -> CornerSlotKind {
        match (self.arcs[i], self.arcs[i + 1]) {
            (Dir::Out, Dir::In) => CornerSlotKind::Anticlockwise,
            (Dir::In, Dir::Out) => CornerSlotKind::Clockwise,
            _ => CornerSlotKind::Plain,
        }
    }

    /// Indices of interior switch slots, in traversal order.
    pub fn switch_positions(&self) -> Vec<usize> {
        (0..self.interior.len())
            .filter(|&i| self.slot_kind(i) != CornerSlotKind::Plain)
            .collect()
    }

    /// Number of interior switch slots.
    pub fn n_switches(&self) -> usize {
        self.switch_positions().len()
    }

    /// Characters at anticlockwise switch slots.
    pub fn a_chars(&self) -> Vec<Sign> {
        (0..self.interior.len())
            .filter(|&i| self.slot_kind(i) == CornerSlotKind::Anticlockwise)
            .map(|i| self.interior[i])
            .collect()
    }

    /// Characters at clockwise switch slots.
    pub fn c_chars(&self) -> Vec<Sign> {
        (0..self.interior.len())
            .filter(|&i| self.slot_kind(i) == CornerSlotKind::Clockwise)
            .map(|i| self.interior[i])
            .collect()
    }

    /// Corner index `1 - #switches`.
    pub fn index(&self) -> i64 {
        1 - self.n_switches() as i64
    }

    /// The mirrored corner with all arcs flipped and all characters negated:
    /// traversal order reverses (arrival and departure swap), every arc
    /// direction flips, and every slot character flips.
    pub fn negate(&self) -> CornerProfile {
        CornerProfile {
            arr_char: -self.dep_char,
            dep_char: -self.arr_char,
            interior: self.interior.iter().rev().map(|&c| -c).collect(),
            arcs: self.arcs.iter().rev().map(|d| d.flip()).collect(),
        }
    }

    /// Maximal switch-free atoms in traversal order.
    ///
    /// Panics (debug) if an atom's arcs are not uniform, which cannot happen
    /// for profiles whose plain slots genuinely have equal flanking arcs.
    pub fn atoms(&self) -> Vec<Atom> {
        let switches = self.switch_positions();
        let mut out = Vec::with_capacity(switches.len() + 1);
        // Bounding characters: arrival, switch slots, departure.
        let mut early = self.arr_char;
        let mut arc_from = 0usize;
        for &s in &switches {
            // Atom covering arcs arc_from ..= s.
            let dir = self.arcs[arc_from];
            debug_assert!(
                self.arcs[arc_from..=s].iter().all(|&d| d == dir),
                "arcs inside an atom must be uniform"
            );
            out.push(Atom { early_char: early, late_char: self.interior[s], dir });
            early = self.interior[s];
            arc_from = s + 1;
        }
        let dir = self.arcs[arc_from];
        debug_assert!(
            self.arcs[arc_from..].iter().all(|&d| d == dir),
            "arcs inside an atom must be uniform"
        );
        out.push(Atom { early_char: early, late_char: self.dep_char, dir });
        out
    }

    /// Quality relative to the ambient character pair `(eta_c, eta_a)`.
    pub fn classify(&self, eta_c: Sign, eta_a: Sign) -> CornerQuality {
        let a_chars = self.a_chars();
        if a_chars.iter().any(|&c| c != a_chars[0]) {
            return CornerQuality::Ugly;
        }
        let atoms = self.atoms();
        let use_all = a_chars.first().map_or(true, |&c| c == eta_a);
        let good = if use_all {
            atoms.iter().all(|a| a.is_good(eta_c))
        } else {
            atoms.iter().any(|a| a.is_good(eta_c))
        };
        if good {
            CornerQuality::Good
        } else {
            CornerQuality::Bad
        }
    }

    /// Whether the switch at interior position `i` is double-sided relative
    /// to `(eta_c, eta_a)`: a clockwise switch of character `eta_c`, or an
    /// anticlockwise switch of character `eta_a`.
    pub fn is_double_sided(&self, i: usize, eta_c: Sign, eta_a: Sign) -> bool {
        match self.slot_kind(i) {
            CornerSlotKind::Clockwise => self.interior[i] == eta_c,
            CornerSlotKind::Anticlockwise => self.interior[i] == eta_a,
            CornerSlotKind::Plain => false,
        }
    }

    /// Splits the corner at interior switch position `i` into the stretch
    /// before (ending at the switch) and after (starting at the switch).
    pub fn split_at(&self, i: usize) -> (CornerProfile, CornerProfile) {
        assert!(
            self.slot_kind(i) != CornerSlotKind::Plain,
            "corners split at switch slots only"
        );
        let first = CornerProfile {
            arr_char: self.arr_char,
            dep_char: self.interior[i],
            interior: self.interior[..i].to_vec(),
            arcs: self.arcs[..=i].to_vec(),
        };
        let second = CornerProfile {
            arr_char: self.interior[i],
            dep_char: self.dep_char,
            interior: self.interior[i + 1..].to_vec(),
            arcs: self.arcs[i + 1..].to_vec(),
        };
        (first, second)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sign::Sign::{Minus, Plus};

    fn sign_at(mask: usize, i: usize) -> Sign {
        if mask >> i & 1 == 0 {
            Plus
        } else {
            Minus
        }
    }

    fn dir_at(mask: usize, i: usize) -> Dir {
        if mask >> i & 1 == 0 {
            Dir::Out
        } else {
            Dir::In
        }
    }

    /// Every corner profile with `n_interior` interior slots.
    fn all_profiles(n_interior: usize) -> Vec<CornerProfile> {
        let mut out = Vec::new();
        for ends in 0..4usize {
            for imask in 0..1usize << n_interior {
                for amask in 0..1usize << (n_interior + 1) {
                    out.push(CornerProfile::new(
                        sign_at(ends, 0),
                        sign_at(ends, 1),
                        (0..n_interior).map(|i| sign_at(imask, i)).collect(),
                        (0..=n_interior).map(|i| dir_at(amask, i)).collect(),
                    ));
                }
            }
        }
        out
    }

    #[test]
    fn slot_kinds_read_off_flanking_arcs() {
        let x = CornerProfile::new(
            Plus,
            Plus,
            vec![Plus, Minus, Plus],
            vec![Dir::Out, Dir::In, Dir::In, Dir::Out],
        );
        assert_eq!(x.slot_kind(0), CornerSlotKind::Anticlockwise);
        assert_eq!(x.slot_kind(1), CornerSlotKind::Plain);
        assert_eq!(x.slot_kind(2), CornerSlotKind::Clockwise);
        assert_eq!(x.n_switches(), 2);
        assert_eq!(x.index(), -1);
        assert_eq!(x.a_chars(), vec![Plus]);
        assert_eq!(x.c_chars(), vec![Plus]);
    }

    #[test]
    fn atoms_split_at_switches() {
        let x = CornerProfile::new(
            Plus,
            Minus,
            vec![Plus, Minus],
            vec![Dir::Out, Dir::In, Dir::Out],
        );
        // Slot 0 anticlockwise, slot 1 clockwise: three atoms.
        let atoms = x.atoms();
        assert_eq!(atoms.len(), 3);
        assert_eq!(atoms[0], Atom { early_char: Plus, late_char: Plus, dir: Dir::Out });
        assert_eq!(atoms[1], Atom { early_char: Plus, late_char: Minus, dir: Dir::In });
        assert_eq!(atoms[2], Atom { early_char: Minus, late_char: Minus, dir: Dir::Out });
    }

    #[test]
    fn switchless_corner_all_equals_some() {
        // With no switches, "all atoms good" and "some atom good" coincide,
        // so the quality is independent of eta_a.
        for x in all_profiles(0).into_iter().chain(
            all_profiles(1)
                .into_iter()
                .filter(|x| x.n_switches() == 0),
        ) {
            for eta_c in [Plus, Minus] {
                let q_plus = x.classify(eta_c, Plus);
                let q_minus = x.classify(eta_c, Minus);
                assert_eq!(q_plus, q_minus, "switchless quality must ignore eta_a: {x:?}");
                assert_ne!(q_plus, CornerQuality::Ugly);
            }
        }
    }

    #[test]
    fn good_iff_negation_bad() {
        // Negating the corner and both ambient characters swaps good and bad
        // (and preserves ugly).
        for n in 0..=3 {
            for x in all_profiles(n) {
                let nx = x.negate();
                for eta_c in [Plus, Minus] {
                    for eta_a in [Plus, Minus] {
                        let q = x.classify(eta_c, eta_a);
                        let nq = nx.classify(eta_c, eta_a);
                        match q {
                            CornerQuality::Good => assert_eq!(nq, CornerQuality::Bad, "{x:?}"),
                            CornerQuality::Bad => assert_eq!(nq, CornerQuality::Good, "{x:?}"),
                            CornerQuality::Ugly => assert_eq!(nq, CornerQuality::Ugly, "{x:?}"),
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn negate_is_involutive_and_flips_switch_kinds() {
        for x in all_profiles(2) {
            assert_eq!(x.negate().negate(), x);
            assert_eq!(x.n_switches(), x.negate().n_switches());
            // Mirroring alone and flipping alone each swap the switch kinds;
            // their composition (negation) preserves each slot's kind at the
            // mirrored position.
            let n = x.interior.len();
            for i in 0..n {
                assert_eq!(x.slot_kind(i), x.negate().slot_kind(n - 1 - i));
            }
        }
    }

    #[test]
    fn atoms_flanking_clockwise_switch() {
        // The two atoms flanking a clockwise switch are both good iff the
        // switch character equals eta_c.  (The earlier atom points In and
        // ends at the switch; the later points Out and starts at it.)
        for arr in [Plus, Minus] {
            for dep in [Plus, Minus] {
                for c in [Plus, Minus] {
                    let x = CornerProfile::new(arr, dep, vec![c], vec![Dir::In, Dir::Out]);
                    for eta_c in [Plus, Minus] {
                        let atoms = x.atoms();
                        assert_eq!(atoms.len(), 2);
                        let both = atoms[0].is_good(eta_c) && atoms[1].is_good(eta_c);
                        assert_eq!(both, c == eta_c);
                    }
                }
            }
        }
    }

    #[test]
    fn split_at_double_sided_switch_is_conjunction() {
        // Splitting at a double-sided interior switch: X good iff both
        // halves are good.  At a single-sided switch: X good iff at least
        // one half is good.  Checked exhaustively over small corners with
        // no ugliness.
        for n in 1..=3 {
            for x in all_profiles(n) {
                for eta_c in [Plus, Minus] {
                    for eta_a in [Plus, Minus] {
                        if x.classify(eta_c, eta_a) == CornerQuality::Ugly {
                            continue;
                        }
                        for &i in &x.switch_positions() {
                            let (x1, x2) = x.split_at(i);
                            let (q1, q2) = (x1.classify(eta_c, eta_a), x2.classify(eta_c, eta_a));
                            if q1 == CornerQuality::Ugly || q2 == CornerQuality::Ugly {
                                continue;
                            }
                            let g = x.classify(eta_c, eta_a) == CornerQuality::Good;
                            let g1 = q1 == CornerQuality::Good;
                            let g2 = q2 == CornerQuality::Good;
                            if x.is_double_sided(i, eta_c, eta_a) {
                                assert_eq!(g, g1 && g2, "double split {x:?} at {i}");
                            } else {
                                assert_eq!(g, g1 || g2, "single split {x:?} at {i}");
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn opposite_a_char_with_matching_c_char_is_good() {
        // If all anticlockwise switches have character -eta_a and some
        // clockwise switch has character eta_c, the corner is good.
        for n in 1..=3 {
            for x in all_profiles(n) {
                for eta_c in [Plus, Minus] {
                    for eta_a in [Plus, Minus] {
                        let a = x.a_chars();
                        if a.is_empty() || a.iter().any(|&c| c != -eta_a) {
                            continue;
                        }
                        if !x.c_chars().contains(&eta_c) {
                            continue;
                        }
                        assert_eq!(
                            x.classify(eta_c, eta_a),
                            CornerQuality::Good,
                            "expected good: {x:?} eta_c={eta_c:?} eta_a={eta_a:?}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn good_corner_index_bound_small() {
        // A good corner relative to (eta_c, eta_a) whose quality comes from
        // the "all atoms" rule with at least one switch has index <= 0; the
        // harness checks the aggregate face bound, here we sanity-check the
        // index arithmetic only.
        let x = CornerProfile::new(Plus, Plus, vec![Plus], vec![Dir::Out, Dir::In]);
        assert_eq!(x.index(), 0);
        let y = CornerProfile::new(Plus, Plus, vec![], vec![Dir::Out]);
        assert_eq!(y.index(), 1);
    }
}
