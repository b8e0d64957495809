//! Deterministic enumeration of valid pairs, size budgets, and
//! parity-breaking mutations.
//!
//! Instances are generated for fixed orders and sign vectors by walking
//! all perfect matchings that join slots of opposite character, in
//! lexicographic order (repeatedly pair the smallest uncovered slot with
//! each larger uncovered slot of opposite character, in slot order), and
//! keeping the candidates whose canonical embeddings are spherical on
//! both sides.  The walk is exhaustive and allocation-light; results are
//! streamed to a callback so sweeps never hold a whole corpus in memory.
//!
//! Sizes are gated by a budget on `p · q` (default
//! [`DEFAULT_BUDGET`], overridable with the `SCHARGRAPH_BUDGET`
//! environment variable) so accidental large sweeps fail fast with
//! [`Error::BudgetExceeded`] instead of running for hours.
//!
//! [`parity_breaking_mutations`] produces, for every unordered pair of
//! edges of a valid instance, the unique re-pairing that joins equal
//! characters; validation must reject every one of them.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pair::{IntersectionPair, RawPair, Slot};
use crate::sign::Sign;

/// Environment variable overriding the size budget (a bound on `p · q`).
pub const BUDGET_ENV: &str = "SCHARGRAPH_BUDGET";

/// Default bound on `p · q` for enumeration sweeps.
pub const DEFAULT_BUDGET: usize = 16;

/// The effective budget: the override if given, else the environment
/// variable if set and parseable, else [`DEFAULT_BUDGET`].
pub fn budget_limit(override_limit: Option<usize>) -> usize {
    override_limit
        .or_else(|| std::env::var(BUDGET_ENV).ok().and_then(|s| s.parse().ok()))
        .unwrap_or(DEFAULT_BUDGET)
}

/// Errors when `p · q` exceeds the effective budget.
pub fn check_budget(p: usize, q: usize, override_limit: Option<usize>) -> Result<()> {
    let limit = budget_limit(override_limit);
    if p * q > limit {
        return Err(Error::BudgetExceeded(format!(
            "p * q = {} exceeds the enumeration budget {limit} \
             (raise {BUDGET_ENV} to allow larger sweeps)",
            p * q
        )));
    }
    Ok(())
}

/// The canonical balanced sign vector: first half positive.
pub fn canonical_signs(n: usize) -> Vec<Sign> {
    (0..n).map(|i| if i < n / 2 { Sign::Plus } else { Sign::Minus }).collect()
}

/// All balanced sign vectors of length `n`, in lexicographic order with
/// `+` before `-`.
pub fn balanced_sign_vectors(n: usize) -> Vec<Vec<Sign>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn rec(n: usize, plus: usize, minus: usize, cur: &mut Vec<Sign>, out: &mut Vec<Vec<Sign>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        if plus < n / 2 {
            cur.push(Sign::Plus);
            rec(n, plus + 1, minus, cur, out);
            cur.pop();
        }
        if minus < n / 2 {
            cur.push(Sign::Minus);
            rec(n, plus, minus + 1, cur, out);
            cur.pop();
        }
    }
    rec(n, 0, 0, &mut cur, &mut out);
    out
}

/// Counts from one enumeration sweep.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationSummary {
    /// Opposite-character perfect matchings generated.
    pub candidates: usize,
    /// Candidates whose embeddings are spherical on both sides.
    pub valid: usize,
}

/// Streams every valid pair with the given orders and signs to `visit`,
/// in lexicographic matching order.  Signs must be balanced vectors of
/// the right lengths (enforced by validation on the first candidate).
pub fn enumerate_pairs<F>(
    p: usize,
    q: usize,
    signs_p: &[Sign],
    signs_q: &[Sign],
    budget: Option<usize>,
    mut visit: F,
) -> Result<EnumerationSummary>
where
    F: FnMut(IntersectionPair),
{
    check_budget(p, q, budget)?;
    if signs_p.len() != p || signs_q.len() != q {
        return Err(Error::InvalidInput(format!(
            "sign vectors of lengths {} and {} do not match orders p = {p}, q = {q}",
            signs_p.len(),
            signs_q.len()
        )));
    }
    let n = p * q;
    let char_of = |i: usize| signs_q[i % q] * signs_p[i / q];
    let mut used = vec![false; n];
    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(n / 2);
    let mut summary = EnumerationSummary::default();

    // Depth-first walk over partner choices for the smallest open slot.
    fn rec<F: FnMut(IntersectionPair)>(
        n: usize,
        p: usize,
        q: usize,
        signs_p: &[Sign],
        signs_q: &[Sign],
        char_of: &dyn Fn(usize) -> Sign,
        used: &mut Vec<bool>,
        edges: &mut Vec<(usize, usize)>,
        summary: &mut EnumerationSummary,
        visit: &mut F,
    ) {
        let Some(first) = (0..n).find(|&i| !used[i]) else {
            summary.candidates += 1;
            let raw = RawPair {
                p,
                q,
                signs_p: signs_p.to_vec(),
                signs_q: signs_q.to_vec(),
                matching: edges
                    .iter()
                    .map(|&(a, b)| [[a / q + 1, a % q + 1], [b / q + 1, b % q + 1]])
                    .collect(),
                nesting: None,
            };
            if let Ok(pair) = IntersectionPair::from_raw(&raw) {
                summary.valid += 1;
                visit(pair);
            }
            return;
        };
        used[first] = true;
        for j in first + 1..n {
            if used[j] || char_of(j) == char_of(first) {
                continue;
            }
            used[j] = true;
            edges.push((first, j));
            rec(n, p, q, signs_p, signs_q, char_of, used, edges, summary, visit);
            edges.pop();
            used[j] = false;
        }
        used[first] = false;
    }

    rec(
        n,
        p,
        q,
        signs_p,
        signs_q,
        &char_of,
        &mut used,
        &mut edges,
        &mut summary,
        &mut visit,
    );
    Ok(summary)
}

/// Collects the valid pairs of one sweep (small sizes only).
pub fn collect_pairs(
    p: usize,
    q: usize,
    signs_p: &[Sign],
    signs_q: &[Sign],
    budget: Option<usize>,
) -> Result<Vec<IntersectionPair>> {
    let mut out = Vec::new();
    enumerate_pairs(p, q, signs_p, signs_q, budget, |pair| out.push(pair))?;
    Ok(out)
}

/// For every unordered pair of edges, the unique re-pairing of their four
/// endpoints that joins equal characters (the other re-pairing stays
/// opposite-character and is skipped).  Each returned candidate differs
/// from the input in exactly two edges and must fail validation.
pub fn parity_breaking_mutations(raw: &RawPair) -> Vec<RawPair> {
    let char_of = |s: [usize; 2]| raw.signs_q[s[1] - 1] * raw.signs_p[s[0] - 1];
    let mut out = Vec::new();
    for i in 0..raw.matching.len() {
        for j in i + 1..raw.matching.len() {
            let [a, b] = raw.matching[i];
            let [c, d] = raw.matching[j];
            // a and b have opposite characters, as do c and d; exactly one
            // of c, d matches a's character.
            let (same_as_a, other) = if char_of(c) == char_of(a) { (c, d) } else { (d, c) };
            let mut mutated = raw.clone();
            mutated.matching[i] = [a, same_as_a];
            mutated.matching[j] = [b, other];
            out.push(mutated);
        }
    }
    out
}
