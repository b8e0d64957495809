//! Stars: dual-orientation templates on a single model fat vertex.
//!
//! A *star* is a fat vertex together with a chosen subset of its boundary
//! labels and a radial direction (`Out` of the vertex or `In` toward it)
//! for each interval between consecutive chosen labels.  Stars are the
//! portable half of the dual-orientation machinery: a star on a model
//! vertex induces an orientation of every corner of the corresponding
//! label-restricted subgraph (same-sign vertices copy it, opposite-sign
//! vertices copy its reverse), so questions about oriented subgraphs reduce
//! to a calculus on stars alone.
//!
//! # Encoding
//!
//! Labels are `0..m` in ambient positions.  On a positive vertex the
//! counterclockwise rotation meets labels in ascending order; on a negative
//! vertex, in descending order.  We key everything by *ascending* order,
//! which is orientation-independent: `labels` is the sorted chosen subset
//! and `omega[i]` is the direction of the arc running from `labels[i]`
//! ascending to `labels[(i+1) % k]` (the whole circle when `k == 1`).
//! Radial directions are preserved by reflection, so a mirror image keeps
//! `omega` fixed and flips only the vertex sign.
//!
//! The character of label `l` is `sign(vertex) * parity(l)`.
//!
//! # Switch calculus
//!
//! Reading arcs in traversal (counterclockwise) order around the vertex, a
//! label whose flanking arcs are `(Out, In)` is an *anticlockwise switch*
//! (the set `A`), `(In, Out)` a *clockwise switch* (`C`), and equal flanks
//! are non-switches, split into `B₊`/`B₋` by the sign
//! `char(l) * φ(l)` where `φ` is `+` for two `Out` arcs and `-` for two
//! `In` arcs.  Around the circle switches alternate `A, C, A, C, …`, so
//! `|A| = |C|` and every `C`-interval contains exactly one `A` label — the
//! fact that makes derivatives well defined.
//!
//! # Operations
//!
//! * `bar`: reverse every arc (swaps `A ↔ C`, preserves `B_s`).
//! * `minus`: the mirror image of `bar` — sign flips and arcs flip
//!   (preserves `A`, `C` and `B_s` as label sets).
//! * `derivative(s)`: the star on labels `C(T)` orienting each `C`-interval
//!   by the character of its unique interior `A` label; `d⁻T = bar(d⁺T)`
//!   and `d^±(-T) = -(d^±T)`.
//! * `relative_derivative(s, L₀)`: same on labels `C(T) ∪ L₀`, inheriting
//!   the parent direction on intervals without an interior `A` label.
//! * `sequence_of_coherence`: iterates `d⁺` (with one final `d⁻`, `d⁺`
//!   correction step when needed) from a nontrivial-type star until the
//!   switch sets have uniform parity.
//! * `inherited_type`: reads off a type on the `L₀`-intervals from the
//!   relative sequence via corner quality.
//! * `conjugate`: reverses every other unit arc of a full-label star (the
//!   star-level shadow of reversing the black faces of a two-colored
//!   graph); swaps the switch sets with the non-switch sets when ambient
//!   parities alternate.

use serde::{Deserialize, Serialize};

use crate::corner::{CornerProfile, CornerQuality, CornerSlotKind};
use crate::error::{Error, Result};
use crate::sign::{Dir, Sign};

/// A type on the intervals of a label set: one sign per interval, in
/// ascending order of the interval's starting label.
pub type LType = Vec<Sign>;

/// Whether a type is trivial (uniform).
pub fn type_is_trivial(tau: &[Sign]) -> bool {
    tau.iter().all(|&s| s == tau[0])
}

/// Pointwise negation of a type.
pub fn type_negate(tau: &[Sign]) -> LType {
    tau.iter().map(|&s| -s).collect()
}

/// A dual-orientation template on one model fat vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Star {
    sign: Sign,
    parities: Vec<Sign>,
    labels: Vec<usize>,
    omega: Vec<Dir>,
}

/// JSON form of a star.  Label ids are 1-based here and 0-based internally.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawStar {
    pub sign: Sign,
    /// All ambient labels around the vertex, in order, with parities.
    pub labels: Vec<RawAmbientLabel>,
    /// The chosen subset `L` (1-based ids, ascending).
    #[serde(rename = "L")]
    pub l: Vec<usize>,
    /// One direction per `L`-interval, keyed by ascending start label.
    pub omega: Vec<Dir>,
}

/// One ambient label in the JSON form.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawAmbientLabel {
    pub id: usize,
    pub parity: Sign,
}

impl Star {
    /// Builds a star, validating the label set and arc count.
    pub fn new(sign: Sign, parities: Vec<Sign>, labels: Vec<usize>, omega: Vec<Dir>) -> Result<Star> {
        if parities.is_empty() {
            return Err(Error::InvalidInput("a star needs at least one ambient label".into()));
        }
        if labels.is_empty() {
            return Err(Error::InvalidInput("a star needs a nonempty chosen label set".into()));
        }
        if !labels.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput(
                "chosen labels must be strictly ascending".into(),
            ));
        }
        if *labels.last().unwrap() >= parities.len() {
            return Err(Error::InvalidInput(format!(
                "label {} out of range for {} ambient labels",
                labels.last().unwrap() + 1,
                parities.len()
            )));
        }
        if omega.len() != labels.len() {
            return Err(Error::InvalidInput(format!(
                "expected {} interval directions, got {}",
                labels.len(),
                omega.len()
            )));
        }
        Ok(Star { sign, parities, labels, omega })
    }

    /// The alternating ambient parity vector: label `l` (0-based) stands
    /// for circle `l + 1`, so even positions are odd circles (`-`).
    pub fn standard_parities(m: usize) -> Vec<Sign> {
        (0..m).map(|i| Sign::of_parity(i + 1)).collect()
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    /// Number of ambient labels.
    pub fn m(&self) -> usize {
        self.parities.len()
    }

    pub fn parities(&self) -> &[Sign] {
        &self.parities
    }

    /// The chosen label set, ascending.
    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    /// Interval directions, aligned with `labels()`.
    pub fn omega(&self) -> &[Dir] {
        &self.omega
    }

    /// Character of ambient label `l`.
    pub fn char_of(&self, l: usize) -> Sign {
        self.sign * self.parities[l]
    }

    fn label_index(&self, l: usize) -> Option<usize> {
        self.labels.binary_search(&l).ok()
    }

    /// Index of the interval containing the unit arc that starts at
    /// ambient position `s` (ascending), i.e. the arc between `s` and
    /// `s + 1 (mod m)`.
    pub fn interval_of_arc(&self, s: usize) -> usize {
        debug_assert!(s < self.m());
        match self.labels.binary_search(&s) {
            Ok(i) => i,
            Err(0) => self.labels.len() - 1,
            Err(i) => i - 1,
        }
    }

    /// Direction of the unit arc starting at ambient position `s`.
    pub fn omega_at_arc(&self, s: usize) -> Dir {
        self.omega[self.interval_of_arc(s)]
    }

    /// The flanking arcs of chosen label index `idx`, in traversal
    /// (counterclockwise) order around this vertex: `(previous, next)`.
    fn flanks(&self, idx: usize) -> (Dir, Dir) {
        let k = self.labels.len();
        let below = self.omega[(idx + k - 1) % k]; // interval ending at the label, ascending
        let above = self.omega[idx]; // interval starting at the label, ascending
        match self.sign {
            Sign::Plus => (below, above),
            Sign::Minus => (above, below),
        }
    }

    /// Switch classification of chosen label `l`.
    pub fn switch_kind(&self, l: usize) -> CornerSlotKind {
        let idx = self
            .label_index(l)
            .expect("switch_kind queried at a label outside the chosen set");
        match self.flanks(idx) {
            (Dir::Out, Dir::In) => CornerSlotKind::Anticlockwise,
            (Dir::In, Dir::Out) => CornerSlotKind::Clockwise,
            _ => CornerSlotKind::Plain,
        }
    }

    /// Anticlockwise switch labels, ascending.
    pub fn a_set(&self) -> Vec<usize> {
        self.labels
            .iter()
            .copied()
            .filter(|&l| self.switch_kind(l) == CornerSlotKind::Anticlockwise)
            .collect()
    }

    /// Clockwise switch labels, ascending.
    pub fn c_set(&self) -> Vec<usize> {
        self.labels
            .iter()
            .copied()
            .filter(|&l| self.switch_kind(l) == CornerSlotKind::Clockwise)
            .collect()
    }

    /// All switch labels, ascending.
    pub fn s_set(&self) -> Vec<usize> {
        self.labels
            .iter()
            .copied()
            .filter(|&l| self.switch_kind(l) != CornerSlotKind::Plain)
            .collect()
    }

    /// `φ(l)` for a non-switch label: `+` when both flanking arcs point
    /// out, `-` when both point in; `None` at switches.
    pub fn phi(&self, l: usize) -> Option<Sign> {
        let idx = self.label_index(l)?;
        match self.flanks(idx) {
            (Dir::Out, Dir::Out) => Some(Sign::Plus),
            (Dir::In, Dir::In) => Some(Sign::Minus),
            _ => None,
        }
    }

    /// Non-switch labels with `char(l) * φ(l) = s`, ascending.
    pub fn b_set(&self, s: Sign) -> Vec<usize> {
        self.labels
            .iter()
            .copied()
            .filter(|&l| self.phi(l).map_or(false, |phi| self.char_of(l) * phi == s))
            .collect()
    }

    fn uniform_parity(&self, set: &[usize]) -> bool {
        set.is_empty() || set.iter().all(|&l| self.parities[l] == self.parities[set[0]])
    }

    /// Coherent: the anticlockwise switches share a parity and the
    /// clockwise switches share a parity.
    pub fn is_coherent(&self) -> bool {
        let a = self.a_set();
        let c = self.c_set();
        (a.is_empty() || self.uniform_parity(&a)) && (c.is_empty() || self.uniform_parity(&c))
    }

    /// Bicoherent: coherent, and each non-switch class also has uniform
    /// parity (equivalently, the conjugate star is coherent too).
    pub fn is_bicoherent(&self) -> bool {
        self.is_coherent()
            && [Sign::Plus, Sign::Minus].iter().all(|&s| {
                let b = self.b_set(s);
                b.is_empty() || self.uniform_parity(&b)
            })
    }

    /// The same star with every arc reversed.
    pub fn bar(&self) -> Star {
        Star {
            sign: self.sign,
            parities: self.parities.clone(),
            labels: self.labels.clone(),
            omega: self.omega.iter().map(|d| d.flip()).collect(),
        }
    }

    /// The mirror image: vertex sign flips; arcs keep their radial
    /// directions and their (ascending-keyed) intervals.
    pub fn mirror(&self) -> Star {
        Star {
            sign: -self.sign,
            parities: self.parities.clone(),
            labels: self.labels.clone(),
            omega: self.omega.clone(),
        }
    }

    /// `-T`: the mirror image of `bar`.  Sign flips and arcs flip.
    pub fn minus(&self) -> Star {
        self.bar().mirror()
    }

    /// The type represented under the reading `Out ↦ +` (the other
    /// dictionary gives the pointwise negation).
    pub fn type_of(&self) -> LType {
        self.omega
            .iter()
            .map(|&d| if d == Dir::Out { Sign::Plus } else { Sign::Minus })
            .collect()
    }

    /// Whether this star represents the type `tau` under either reading of
    /// directions as signs.
    pub fn represents(&self, tau: &[Sign]) -> bool {
        let t = self.type_of();
        t == tau || type_negate(&t) == tau
    }

    /// Builds the star over `labels` representing `tau` under the reading
    /// `+ ↦ Out` (its `bar` is the other representative of the same sign).
    pub fn from_type(sign: Sign, parities: Vec<Sign>, labels: Vec<usize>, tau: &[Sign]) -> Result<Star> {
        if tau.len() != labels.len() {
            return Err(Error::InvalidInput(format!(
                "type length {} does not match {} intervals",
                tau.len(),
                labels.len()
            )));
        }
        let omega = tau
            .iter()
            .map(|&s| if s == Sign::Plus { Dir::Out } else { Dir::In })
            .collect();
        Star::new(sign, parities, labels, omega)
    }

    /// Labels strictly inside the cyclic ascending interval `(lo, hi)`;
    /// the whole circle minus `lo` when `lo == hi`.
    fn strictly_between(lo: usize, hi: usize, x: usize) -> bool {
        if lo < hi {
            lo < x && x < hi
        } else if lo > hi {
            x > lo || x < hi
        } else {
            x != lo
        }
    }

    /// The derivative `d^s T`: the star on labels `C(T)` where each
    /// `C`-interval takes `Out` when `char(a) = s` for its unique interior
    /// anticlockwise switch `a`, and `In` otherwise.
    pub fn derivative(&self, dsign: Sign) -> Result<Star> {
        let c = self.c_set();
        if c.is_empty() {
            return Err(Error::NoSwitches(
                "derivative of a star with no clockwise switches".into(),
            ));
        }
        let a = self.a_set();
        let k = c.len();
        let mut omega = Vec::with_capacity(k);
        for i in 0..k {
            let (lo, hi) = (c[i], c[(i + 1) % k]);
            let inside: Vec<usize> =
                a.iter().copied().filter(|&x| Self::strictly_between(lo, hi, x)).collect();
            assert_eq!(
                inside.len(),
                1,
                "every interval between consecutive clockwise switches holds exactly one anticlockwise switch"
            );
            let dir = if self.char_of(inside[0]) * dsign == Sign::Plus { Dir::Out } else { Dir::In };
            omega.push(dir);
        }
        Star::new(self.sign, self.parities.clone(), c, omega)
    }

    /// The derivative relative to `l0`: labels `C(T) ∪ L₀`; intervals with
    /// an interior anticlockwise switch orient by its character as in
    /// `derivative`, the rest inherit this star's direction there.
    pub fn relative_derivative(&self, dsign: Sign, l0: &[usize]) -> Result<Star> {
        let mut new_labels = self.c_set();
        new_labels.extend(l0.iter().copied());
        new_labels.sort_unstable();
        new_labels.dedup();
        if new_labels.is_empty() {
            return Err(Error::NoSwitches(
                "relative derivative with no clockwise switches and empty base set".into(),
            ));
        }
        if *new_labels.last().unwrap() >= self.m() {
            return Err(Error::InvalidInput(format!(
                "base label {} out of range for {} ambient labels",
                new_labels.last().unwrap() + 1,
                self.m()
            )));
        }
        let a = self.a_set();
        let k = new_labels.len();
        let mut omega = Vec::with_capacity(k);
        for i in 0..k {
            let (lo, hi) = (new_labels[i], new_labels[(i + 1) % k]);
            let inside: Vec<usize> =
                a.iter().copied().filter(|&x| Self::strictly_between(lo, hi, x)).collect();
            assert!(
                inside.len() <= 1,
                "refining the clockwise-switch intervals cannot put two anticlockwise switches in one interval"
            );
            let dir = match inside.first() {
                Some(&x) => {
                    if self.char_of(x) * dsign == Sign::Plus {
                        Dir::Out
                    } else {
                        Dir::In
                    }
                }
                // No switch inside: this star's direction is constant on
                // the interval; read it off the interval's first unit arc.
                None => self.omega_at_arc(lo),
            };
            omega.push(dir);
        }
        Star::new(self.sign, self.parities.clone(), new_labels, omega)
    }

    /// The corner swept in traversal (counterclockwise) order from chosen
    /// label `from` to chosen label `to`: interior chosen labels and the
    /// arcs between them.  `from == to` sweeps the whole circle.
    pub fn corner_profile(&self, from: usize, to: usize) -> CornerProfile {
        let i_from = self.label_index(from).expect("corner endpoint outside the chosen set");
        let i_to = self.label_index(to).expect("corner endpoint outside the chosen set");
        let k = self.labels.len();
        let mut interior = Vec::new();
        let mut arcs = Vec::new();
        let mut i = i_from;
        loop {
            // Traversal from label index i crosses, and lands on:
            //   + vertex: interval i, label i+1 (ascending);
            //   − vertex: interval i-1, label i-1 (descending).
            match self.sign {
                Sign::Plus => {
                    arcs.push(self.omega[i]);
                    i = (i + 1) % k;
                }
                Sign::Minus => {
                    arcs.push(self.omega[(i + k - 1) % k]);
                    i = (i + k - 1) % k;
                }
            }
            if i == i_to {
                break;
            }
            interior.push(self.char_of(self.labels[i]));
        }
        CornerProfile::new(self.char_of(from), self.char_of(to), interior, arcs)
    }

    /// The conjugate: every other unit arc reversed (even ascending start
    /// positions), defined for full-label stars with an even number of
    /// labels.  The other phase choice gives `bar` of this result.
    pub fn conjugate(&self) -> Result<Star> {
        let m = self.m();
        if self.labels.len() != m {
            return Err(Error::PartialType(
                "conjugation needs a star on the full label set".into(),
            ));
        }
        if m % 2 != 0 {
            return Err(Error::InvalidInput(
                "conjugation needs an even number of labels".into(),
            ));
        }
        let omega = self
            .omega
            .iter()
            .enumerate()
            .map(|(i, &d)| if i % 2 == 0 { d.flip() } else { d })
            .collect();
        Star::new(self.sign, self.parities.clone(), self.labels.clone(), omega)
    }

    /// The sign `s` for which conjugation swaps the switch sets with the
    /// non-switch sets — `A(T) = B_s(T̂)` and `C(T) = B_{-s}(T̂)` — or
    /// `None` when no such swap holds (possible when ambient parities do
    /// not alternate).
    pub fn conjugate_swap_sign(&self) -> Result<Option<Sign>> {
        let hat = self.conjugate()?;
        for s in [Sign::Plus, Sign::Minus] {
            if self.a_set() == hat.b_set(s) && self.c_set() == hat.b_set(-s) {
                return Ok(Some(s));
            }
        }
        Ok(None)
    }

    /// Parses the JSON form.
    pub fn from_raw(raw: &RawStar) -> Result<Star> {
        for (i, lab) in raw.labels.iter().enumerate() {
            if lab.id != i + 1 {
                return Err(Error::InvalidInput(format!(
                    "ambient label ids must be 1..{} in order; found {} at position {}",
                    raw.labels.len(),
                    lab.id,
                    i + 1
                )));
            }
        }
        let parities: Vec<Sign> = raw.labels.iter().map(|l| l.parity).collect();
        let mut labels = Vec::with_capacity(raw.l.len());
        for &id in &raw.l {
            if id == 0 || id > parities.len() {
                return Err(Error::InvalidInput(format!(
                    "chosen label {id} out of range 1..{}",
                    parities.len()
                )));
            }
            labels.push(id - 1);
        }
        Star::new(raw.sign, parities, labels, raw.omega.clone())
    }

    /// Serializes to the JSON form (1-based ids).
    pub fn to_raw(&self) -> RawStar {
        RawStar {
            sign: self.sign,
            labels: self
                .parities
                .iter()
                .enumerate()
                .map(|(i, &parity)| RawAmbientLabel { id: i + 1, parity })
                .collect(),
            l: self.labels.iter().map(|&l| l + 1).collect(),
            omega: self.omega.clone(),
        }
    }

    pub fn from_json(s: &str) -> Result<Star> {
        let raw: RawStar =
            serde_json::from_str(s).map_err(|e| Error::InvalidInput(format!("bad star JSON: {e}")))?;
        Star::from_raw(&raw)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_raw()).expect("star serialization cannot fail")
    }
}

/// A sequence of derivatives ending in a coherent star, together with the
/// derivative signs used and whether the starting star was bar-swapped.
#[derive(Clone, Debug)]
pub struct CoherenceSequence {
    /// `T₁ … Tₙ`; `stars[0]` is the input or its `bar`.
    pub stars: Vec<Star>,
    /// Derivative signs, one per step (`len = stars.len() - 1`).
    pub signs: Vec<Sign>,
    /// Whether `stars[0]` is the `bar` of the input star.
    pub bar_swapped: bool,
}

impl CoherenceSequence {
    pub fn last(&self) -> &Star {
        self.stars.last().expect("a coherence sequence is nonempty")
    }
}

/// Builds a sequence of coherence starting from `t1`, which must be a
/// positive-vertex star of nontrivial type.
///
/// When `t1` is incoherent it is bar-swapped if needed so its anticlockwise
/// switches have mixed parity, then `d⁺` is applied until they become
/// uniform (say after `m` steps).  If the clockwise switches are then also
/// uniform the sequence stops there; otherwise the `m`-th step is replaced
/// by `d⁻` (whose result is the bar of the `d⁺` result, so its clockwise
/// switches are uniform) followed by one more `d⁺`.
pub fn sequence_of_coherence(t1: &Star) -> Result<CoherenceSequence> {
    if t1.sign() != Sign::Plus {
        return Err(Error::InvalidInput(
            "coherence sequences start from a positive-vertex star".into(),
        ));
    }
    if type_is_trivial(&t1.type_of()) {
        return Err(Error::InvalidInput(
            "a trivial type has no coherence sequence".into(),
        ));
    }
    if t1.is_coherent() {
        return Ok(CoherenceSequence { stars: vec![t1.clone()], signs: vec![], bar_swapped: false });
    }
    // Make the anticlockwise switches mixed-parity.  Incoherence means A or
    // C is mixed; bar swaps them.
    let (start, bar_swapped) = if t1.uniform_parity(&t1.a_set()) {
        (t1.bar(), true)
    } else {
        (t1.clone(), false)
    };
    debug_assert!(!start.uniform_parity(&start.a_set()));

    let cap = start.labels().len() + 2;
    let mut plus_iterates = vec![start.clone()];
    for _ in 0..cap {
        let cur = plus_iterates.last().unwrap();
        let next = cur.derivative(Sign::Plus)?;
        let a_uniform = {
            let a = next.a_set();
            a.is_empty() || next.uniform_parity(&a)
        };
        plus_iterates.push(next);
        if !a_uniform {
            continue;
        }
        // m = number of d⁺ steps taken; plus_iterates = [T₁, …, (d⁺)^m T₁].
        let m = plus_iterates.len() - 1;
        let last = plus_iterates.last().unwrap();
        if last.uniform_parity(&last.c_set()) {
            let signs = vec![Sign::Plus; m];
            return Ok(CoherenceSequence { stars: plus_iterates, signs, bar_swapped });
        }
        // Replace the final d⁺ by d⁻ and take one more d⁺.
        let mut stars = plus_iterates[..m].to_vec();
        let t_m1 = stars.last().unwrap().derivative(Sign::Minus)?;
        let t_m2 = t_m1.derivative(Sign::Plus)?;
        stars.push(t_m1);
        stars.push(t_m2);
        let mut signs = vec![Sign::Plus; m - 1];
        signs.push(Sign::Minus);
        signs.push(Sign::Plus);
        return Ok(CoherenceSequence { stars, signs, bar_swapped });
    }
    Err(Error::CoherenceDivergence(format!(
        "anticlockwise switches never reached uniform parity within {cap} derivative steps"
    )))
}

/// The relative sequence over `l0` matching a coherence sequence: starts at
/// the same star and applies relative derivatives with the same signs.
pub fn relative_sequence(seq: &CoherenceSequence, l0: &[usize]) -> Result<Vec<Star>> {
    let mut out = vec![seq.stars[0].clone()];
    for &s in &seq.signs {
        let next = out.last().unwrap().relative_derivative(s, l0)?;
        out.push(next);
    }
    Ok(out)
}

/// The type a coherence sequence induces on the `l0`-intervals, with the
/// ambient characters used to judge corner quality.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InheritedType {
    /// One sign per `l0`-interval, keyed by ascending start label: the sign
    /// that makes the final relative star's corner over that interval good.
    pub tau0: LType,
    /// Character of the final star's clockwise switches.
    pub eta_c: Sign,
    /// Negated character of the final relative star's anticlockwise
    /// switches outside `l0`.
    pub eta_a: Sign,
    /// Set when that switch set is empty and `eta_a` defaulted to `+`.
    pub eta_a_arbitrary: bool,
}

/// Computes the inherited type of a coherence sequence on the intervals of
/// `l0` (a nonempty ascending set of ambient labels).
pub fn inherited_type(seq: &CoherenceSequence, l0: &[usize]) -> Result<InheritedType> {
    if l0.is_empty() {
        return Err(Error::InvalidInput("inherited types need a nonempty base label set".into()));
    }
    if !l0.windows(2).all(|w| w[0] < w[1]) {
        return Err(Error::InvalidInput("base labels must be strictly ascending".into()));
    }
    let rel = relative_sequence(seq, l0)?;
    let t_n = seq.last();
    let r_n = rel.last().expect("relative sequence is nonempty");

    let c = t_n.c_set();
    if c.is_empty() {
        return Err(Error::InvalidInput(
            "the final star of the sequence has no clockwise switches".into(),
        ));
    }
    debug_assert!(t_n.uniform_parity(&c), "final star of a coherence sequence is coherent");
    let eta_c = t_n.char_of(c[0]);

    let a_tilde: Vec<usize> =
        r_n.a_set().into_iter().filter(|l| !l0.contains(l)).collect();
    let (eta_a, eta_a_arbitrary) = match a_tilde.first() {
        Some(&l) => {
            assert!(
                r_n.uniform_parity(&a_tilde),
                "anticlockwise switches of the final relative star outside the base set have uniform parity"
            );
            (-r_n.char_of(l), false)
        }
        None => (Sign::Plus, true),
    };

    let mut tau0 = Vec::with_capacity(l0.len());
    for i in 0..l0.len() {
        let from = l0[i];
        let to = l0[(i + 1) % l0.len()];
        let corner = r_n.corner_profile(from, to);
        let eps = match corner.classify(eta_c, eta_a) {
            CornerQuality::Good => Sign::Plus,
            CornerQuality::Bad => Sign::Minus,
            CornerQuality::Ugly => {
                return Err(Error::UglyCorner(format!(
                    "corner over base interval starting at label {} has mixed anticlockwise characters",
                    from + 1
                )))
            }
        };
        debug_assert_eq!(
            if eps == Sign::Plus { corner.clone() } else { corner.negate() }.classify(eta_c, eta_a),
            CornerQuality::Good
        );
        tau0.push(eps);
    }
    Ok(InheritedType { tau0, eta_c, eta_a, eta_a_arbitrary })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sign::Sign::{Minus, Plus};
    use crate::sign::Dir::{In, Out};

    /// All full-label stars on `m` standard-parity labels with the given sign.
    fn all_full_stars(sign: Sign, m: usize) -> Vec<Star> {
        (0..1usize << m)
            .map(|mask| {
                let omega = (0..m).map(|i| if mask >> i & 1 == 0 { Out } else { In }).collect();
                Star::new(sign, Star::standard_parities(m), (0..m).collect(), omega).unwrap()
            })
            .collect()
    }

    fn model_star() -> Star {
        // Eight labels, alternating parities, directions chosen so the
        // anticlockwise switches sit at 0-based labels {3, 6} and the
        // clockwise ones at {0, 5}.
        Star::new(
            Plus,
            Star::standard_parities(8),
            (0..8).collect(),
            vec![Out, Out, Out, In, In, Out, In, In],
        )
        .unwrap()
    }

    #[test]
    fn model_star_switch_sets() {
        let t = model_star();
        assert_eq!(t.a_set(), vec![3, 6]);
        assert_eq!(t.c_set(), vec![0, 5]);
        assert_eq!(t.b_set(Plus), vec![1, 4]);
        assert_eq!(t.b_set(Minus), vec![2, 7]);
        assert!(!t.is_coherent()); // A = {3, 6} has mixed parities.
    }

    #[test]
    fn negative_vertex_mirrors_switch_kinds() {
        // The mirror image keeps omega and flips the sign; reflection
        // reverses the traversal, so the two switch classes swap.
        for t in all_full_stars(Plus, 6) {
            let m = t.mirror();
            assert_eq!(t.a_set(), m.c_set());
            assert_eq!(t.c_set(), m.a_set());
        }
    }

    #[test]
    fn bar_swaps_switch_classes() {
        for t in all_full_stars(Plus, 6) {
            let b = t.bar();
            assert_eq!(t.a_set(), b.c_set());
            assert_eq!(t.c_set(), b.a_set());
            assert_eq!(t.b_set(Plus), b.b_set(Minus));
            assert_eq!(t.b_set(Minus), b.b_set(Plus));
        }
    }

    #[test]
    fn minus_preserves_all_label_classes() {
        for sign in [Plus, Minus] {
            for t in all_full_stars(sign, 6) {
                let n = t.minus();
                assert_eq!(t.a_set(), n.a_set());
                assert_eq!(t.c_set(), n.c_set());
                assert_eq!(t.b_set(Plus), n.b_set(Plus));
                assert_eq!(t.b_set(Minus), n.b_set(Minus));
                assert_eq!(n.minus(), t);
            }
        }
    }

    #[test]
    fn alternation_of_switches() {
        // Around the circle the switch kinds must alternate, so the two
        // switch sets always have equal size.
        for t in all_full_stars(Plus, 8) {
            assert_eq!(t.a_set().len(), t.c_set().len());
            let s = t.s_set();
            for w in 0..s.len() {
                let here = t.switch_kind(s[w]);
                let next = t.switch_kind(s[(w + 1) % s.len()]);
                assert_ne!(here, next);
            }
        }
    }

    #[test]
    fn derivative_identities() {
        for sign in [Plus, Minus] {
            for t in all_full_stars(sign, 6) {
                if t.c_set().is_empty() {
                    assert!(matches!(t.derivative(Plus), Err(Error::NoSwitches(_))));
                    continue;
                }
                let dp = t.derivative(Plus).unwrap();
                let dm = t.derivative(Minus).unwrap();
                assert_eq!(dm, dp.bar(), "d⁻T = bar(d⁺T)");
                let nt = t.minus();
                assert_eq!(nt.derivative(Plus).unwrap(), dp.minus(), "d⁺(-T) = -(d⁺T)");
                assert_eq!(nt.derivative(Minus).unwrap(), dm.minus(), "d⁻(-T) = -(d⁻T)");
            }
        }
    }

    #[test]
    fn relative_derivative_with_all_labels_keeps_label_set() {
        let t = model_star();
        let d0 = t.relative_derivative(Plus, &[0, 1, 2, 3, 4, 5, 6, 7]).unwrap();
        assert_eq!(d0.labels(), (0..8).collect::<Vec<_>>().as_slice());
        // Intervals with an interior anticlockwise switch: none (every
        // label is a cut point), so each unit interval either holds a
        // switch endpoint or inherits.  All inherit here.
        assert_eq!(d0.omega(), t.omega());
    }

    #[test]
    fn relative_derivative_containments() {
        // C(DT) ⊆ C(D₀T) and A(DT) ∖ L₀ ⊇ A(D₀T) ∖ L₀ for single steps
        // over every full star on six labels and every base set.
        for t in all_full_stars(Plus, 6) {
            if t.c_set().is_empty() {
                continue;
            }
            for mask in 0..1usize << 6 {
                let l0: Vec<usize> = (0..6).filter(|&i| mask >> i & 1 == 1).collect();
                for s in [Plus, Minus] {
                    let d = t.derivative(s).unwrap();
                    let d0 = t.relative_derivative(s, &l0).unwrap();
                    let c_d = d.c_set();
                    let c_d0 = d0.c_set();
                    assert!(c_d.iter().all(|x| c_d0.contains(x)), "C(dT) ⊆ C(d₀T)");
                    let a_d: Vec<usize> =
                        d.a_set().into_iter().filter(|x| !l0.contains(x)).collect();
                    let a_d0: Vec<usize> =
                        d0.a_set().into_iter().filter(|x| !l0.contains(x)).collect();
                    assert!(a_d0.iter().all(|x| a_d.contains(x)), "Ã(dT) ⊇ Ã(d₀T)");
                }
            }
        }
    }

    #[test]
    fn types_and_representation() {
        let t = model_star();
        let tau = t.type_of();
        assert!(t.represents(&tau));
        assert!(t.bar().represents(&tau));
        assert!(t.minus().represents(&type_negate(&tau)));
        assert!(t.minus().represents(&tau)); // either dictionary
        let rebuilt = Star::from_type(Plus, Star::standard_parities(8), (0..8).collect(), &tau).unwrap();
        assert_eq!(rebuilt, t);
    }

    #[test]
    fn coherence_sequence_postconditions() {
        for t1 in all_full_stars(Plus, 8) {
            if type_is_trivial(&t1.type_of()) {
                assert!(sequence_of_coherence(&t1).is_err());
                continue;
            }
            let seq = sequence_of_coherence(&t1).unwrap();
            assert_eq!(seq.signs.len() + 1, seq.stars.len());
            // First star is the input or its bar, and represents the type.
            if seq.bar_swapped {
                assert_eq!(seq.stars[0], t1.bar());
            } else {
                assert_eq!(seq.stars[0], t1);
            }
            assert!(seq.stars[0].represents(&t1.type_of()));
            // Steps are genuine derivatives with the recorded signs.
            for (i, &s) in seq.signs.iter().enumerate() {
                assert_eq!(seq.stars[i + 1], seq.stars[i].derivative(s).unwrap());
            }
            // Every star has nontrivial type; only the last is coherent.
            for (i, st) in seq.stars.iter().enumerate() {
                assert!(!type_is_trivial(&st.type_of()));
                if i + 1 < seq.stars.len() {
                    assert!(!st.is_coherent(), "only the last star is coherent");
                }
            }
            assert!(seq.last().is_coherent());
        }
    }

    #[test]
    fn inherited_type_never_ugly_small() {
        // Over all incoherent-or-not full stars on six labels and all
        // nonempty base sets, the inherited type is defined (no ugly
        // corner) whenever the sequence exists.
        for t1 in all_full_stars(Plus, 6) {
            if type_is_trivial(&t1.type_of()) {
                continue;
            }
            let seq = sequence_of_coherence(&t1).unwrap();
            for mask in 1..1usize << 6 {
                let l0: Vec<usize> = (0..6).filter(|&i| mask >> i & 1 == 1).collect();
                let inh = inherited_type(&seq, &l0).unwrap();
                assert_eq!(inh.tau0.len(), l0.len());
            }
        }
    }

    #[test]
    fn conjugate_is_involutive_and_swaps_partitions() {
        for t in all_full_stars(Plus, 8) {
            let hat = t.conjugate().unwrap();
            assert_eq!(hat.conjugate().unwrap(), t);
            let s = t.conjugate_swap_sign().unwrap();
            assert!(s.is_some(), "alternating parities always admit the partition swap: {t:?}");
            let s = s.unwrap();
            assert_eq!(t.a_set(), hat.b_set(s));
            assert_eq!(t.c_set(), hat.b_set(-s));
            // The same property applied to the conjugate turns the
            // non-switch sets of `t` into its switch sets (the swap sign
            // can differ when a switch set is empty).
            let s2 = hat.conjugate_swap_sign().unwrap().expect("swap holds for the conjugate too");
            assert_eq!(hat.a_set(), t.b_set(s2));
            assert_eq!(hat.c_set(), t.b_set(-s2));
        }
    }

    #[test]
    fn conjugate_requires_full_even_label_set() {
        let t = Star::new(Plus, Star::standard_parities(4), vec![0, 2], vec![Out, In]).unwrap();
        assert!(matches!(t.conjugate(), Err(Error::PartialType(_))));
        let odd = Star::new(Plus, vec![Plus; 3], vec![0, 1, 2], vec![Out, In, Out]).unwrap();
        assert!(matches!(odd.conjugate(), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn corner_profile_reads_traversal_order() {
        let t = model_star();
        // From label 0 to label 3 (ascending traversal on a + vertex):
        // interior labels 1, 2 and arcs omega[0..3].
        let x = t.corner_profile(0, 3);
        assert_eq!(x.arr_char, t.char_of(0));
        assert_eq!(x.dep_char, t.char_of(3));
        assert_eq!(x.interior, vec![t.char_of(1), t.char_of(2)]);
        assert_eq!(x.arcs, vec![Out, Out, Out]);
        // Full sweep from a label to itself.
        let full = t.corner_profile(2, 2);
        assert_eq!(full.interior.len(), 7);
        assert_eq!(full.arcs.len(), 8);
        // On the mirror the traversal runs the other way.
        let m = t.mirror();
        let y = m.corner_profile(3, 0);
        assert_eq!(y.arcs, vec![Out, Out, Out]);
    }

    #[test]
    fn json_round_trip() {
        let t = model_star();
        let s = t.to_json();
        let back = Star::from_json(&s).unwrap();
        assert_eq!(back, t);
        assert!(s.contains("\"L\""));
    }

    #[test]
    fn rejects_malformed_stars() {
        assert!(Star::new(Plus, vec![], vec![], vec![]).is_err());
        assert!(Star::new(Plus, vec![Plus; 4], vec![], vec![]).is_err());
        assert!(Star::new(Plus, vec![Plus; 4], vec![2, 1], vec![Out, In]).is_err());
        assert!(Star::new(Plus, vec![Plus; 4], vec![1, 4], vec![Out, In]).is_err());
        assert!(Star::new(Plus, vec![Plus; 4], vec![1, 2], vec![Out]).is_err());
    }
}
