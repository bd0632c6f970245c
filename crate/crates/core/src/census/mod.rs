//! Exhaustive enumeration of the permutation and tableau classes, their
//! triangles of counts by first-row length / LIS, closed forms, and the
//! log-concavity checker.

pub mod formulas;
pub mod generate;
pub mod shapes;
pub mod verify;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::par::{self, Execution};
use crate::perm::{is_involution_word, is_skew_merged_word, lds_len, lis_len, Permutation};
use crate::tableaux::Tableau;

use generate::{
    hooks, involutions_with_first, partitions, permutation_shards, standard_tableaux,
    ShardPermutations,
};

/// A family of permutations or tableaux graded by `k` (LIS length for
/// permutations, first-row length for tableaux).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum ClassLabel {
    /// `u`: all of `S_n`.
    AllPermutations,
    /// `i`: involutions.
    Involutions,
    /// `h`: hook tableaux.
    Hooks,
    /// `p(l,m)`: (l, m)-protected tableaux.
    Protected { l: usize, m: usize },
    /// `a`: 321-avoiding involutions (tableaux with at most two rows).
    TwoRowInvolutions,
    /// `b`: 321-avoiding permutations.
    Avoid321Permutations,
    /// `m`: permutations with LIS `k` and LDS `n - k + 1` (hook RS shape).
    HookPairPermutations,
    /// `sm`: involutions avoiding 2143 and 3412.
    SkewMergedInvolutions,
    /// `p24`: (2, 4)-protected tableaux.
    Protected24Tableaux,
    /// `hb`: tableaux whose shape is a hook plus the box (2, 2).
    HookPlusBoxTableaux,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Family {
    Permutations,
    Involutions,
    Tableaux,
}

impl ClassLabel {
    pub const ALL_FIXED: [ClassLabel; 9] = [
        ClassLabel::AllPermutations,
        ClassLabel::Involutions,
        ClassLabel::Hooks,
        ClassLabel::TwoRowInvolutions,
        ClassLabel::Avoid321Permutations,
        ClassLabel::HookPairPermutations,
        ClassLabel::SkewMergedInvolutions,
        ClassLabel::Protected24Tableaux,
        ClassLabel::HookPlusBoxTableaux,
    ];

    pub fn code(&self) -> String {
        match self {
            ClassLabel::AllPermutations => "u".into(),
            ClassLabel::Involutions => "i".into(),
            ClassLabel::Hooks => "h".into(),
            ClassLabel::Protected { l, m } => format!("p({l},{m})"),
            ClassLabel::TwoRowInvolutions => "a".into(),
            ClassLabel::Avoid321Permutations => "b".into(),
            ClassLabel::HookPairPermutations => "m".into(),
            ClassLabel::SkewMergedInvolutions => "sm".into(),
            ClassLabel::Protected24Tableaux => "p24".into(),
            ClassLabel::HookPlusBoxTableaux => "hb".into(),
        }
    }

    pub(crate) fn family(&self) -> Family {
        match self {
            ClassLabel::AllPermutations
            | ClassLabel::Avoid321Permutations
            | ClassLabel::HookPairPermutations => Family::Permutations,
            ClassLabel::Involutions
            | ClassLabel::TwoRowInvolutions
            | ClassLabel::SkewMergedInvolutions => Family::Involutions,
            ClassLabel::Hooks
            | ClassLabel::Protected { .. }
            | ClassLabel::Protected24Tableaux
            | ClassLabel::HookPlusBoxTableaux => Family::Tableaux,
        }
    }

    /// Inclusive range of `k` on which the class lives and on which
    /// log-concavity is stated.
    pub fn k_range(&self, n: usize) -> (usize, usize) {
        match *self {
            ClassLabel::TwoRowInvolutions | ClassLabel::Avoid321Permutations => (n.div_ceil(2), n),
            ClassLabel::Protected { l, m } => (l, l + n.saturating_sub(m)),
            ClassLabel::Protected24Tableaux | ClassLabel::HookPlusBoxTableaux => {
                (2, n.saturating_sub(2).max(2))
            }
            _ => (1, n),
        }
    }

    /// Number of independent enumeration shards at size `n`.
    pub fn shard_count(&self, n: usize) -> usize {
        match self.family() {
            Family::Permutations => permutation_shards(n),
            Family::Involutions => n,
            Family::Tableaux => partitions(n).len(),
        }
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.code())
    }
}

impl FromStr for ClassLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let fixed = match s {
            "u" | "all_permutations" => Some(ClassLabel::AllPermutations),
            "i" | "involutions" => Some(ClassLabel::Involutions),
            "h" | "hooks" => Some(ClassLabel::Hooks),
            "a" | "two_row_involutions" => Some(ClassLabel::TwoRowInvolutions),
            "b" | "avoid321_permutations" => Some(ClassLabel::Avoid321Permutations),
            "m" | "hook_pair_permutations" => Some(ClassLabel::HookPairPermutations),
            "sm" | "skew_merged_involutions" => Some(ClassLabel::SkewMergedInvolutions),
            "p24" | "protected24_tableaux" => Some(ClassLabel::Protected24Tableaux),
            "hb" | "hook_plus_box_tableaux" => Some(ClassLabel::HookPlusBoxTableaux),
            _ => None,
        };
        if let Some(label) = fixed {
            return Ok(label);
        }
        // p(l,m) or protected(l,m)
        let bad = |reason: &str| Error::Parse {
            what: "class label",
            token: s.to_string(),
            reason: reason.to_string(),
        };
        let inner = s
            .strip_prefix("protected")
            .or_else(|| s.strip_prefix('p'))
            .and_then(|r| r.strip_prefix('('))
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| bad("unknown class; expected u, i, h, p(l,m), a, b, m, sm, p24 or hb"))?;
        let (l, m) = parse_lm(inner).map_err(|_| bad("expected p(l,m) with positive integers"))?;
        Ok(ClassLabel::Protected { l, m })
    }
}

/// Parses `"l,m"`.
pub fn parse_lm(s: &str) -> Result<(usize, usize)> {
    let bad = || Error::Parse {
        what: "(l,m) pair",
        token: s.to_string(),
        reason: "expected two positive integers separated by a comma".into(),
    };
    let (l, m) = s.split_once(',').ok_or_else(bad)?;
    let l: usize = l.trim().parse().map_err(|_| bad())?;
    let m: usize = m.trim().parse().map_err(|_| bad())?;
    if l == 0 || m == 0 || l > m {
        return Err(bad());
    }
    Ok((l, m))
}

impl TryFrom<String> for ClassLabel {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<ClassLabel> for String {
    fn from(label: ClassLabel) -> String {
        label.code()
    }
}

/// One member of a class.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Member {
    Permutation(Permutation),
    Tableau(Tableau),
}

impl Member {
    /// The grading statistic: LIS length or first-row length.
    pub fn k(&self) -> usize {
        match self {
            Member::Permutation(p) => lis_len(p.word()),
            Member::Tableau(t) => t.first_row_len(),
        }
    }
}

impl fmt::Display for Member {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Member::Permutation(p) => p.fmt(f),
            Member::Tableau(t) => t.fmt(f),
        }
    }
}

/// Largest `n` each enumeration family will accept.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    pub max_permutation_n: usize,
    pub max_involution_n: usize,
    pub max_tableau_n: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_permutation_n: 12,
            max_involution_n: 14,
            max_tableau_n: 16,
        }
    }
}

impl Budget {
    pub const ENV: &'static str = "ULAM_BUDGET";

    /// The default budget, overridden by `ULAM_BUDGET` when set.
    pub fn from_env() -> Result<Self> {
        match std::env::var(Self::ENV) {
            Ok(v) => Budget::default().with_override(&v),
            Err(_) => Ok(Budget::default()),
        }
    }

    /// `"N"` sets the permutation cap; `"perm=N,inv=N,tab=N"` sets any of
    /// the three.
    pub fn with_override(mut self, spec: &str) -> Result<Self> {
        let bad = |tok: &str| Error::Parse {
            what: "budget",
            token: tok.to_string(),
            reason: "expected N or perm=N,inv=N,tab=N".into(),
        };
        let spec = spec.trim();
        if let Ok(n) = spec.parse::<usize>() {
            self.max_permutation_n = n;
            return Ok(self);
        }
        for part in spec.split(',') {
            let (key, val) = part.split_once('=').ok_or_else(|| bad(part))?;
            let val: usize = val.trim().parse().map_err(|_| bad(part))?;
            match key.trim() {
                "perm" => self.max_permutation_n = val,
                "inv" => self.max_involution_n = val,
                "tab" => self.max_tableau_n = val,
                _ => return Err(bad(part)),
            }
        }
        Ok(self)
    }

    /// Fails with an advisory when `label` at size `n` is over budget.
    pub fn check(&self, label: ClassLabel, n: usize) -> Result<()> {
        let cap = match label.family() {
            Family::Permutations => self.max_permutation_n,
            Family::Involutions => self.max_involution_n,
            Family::Tableaux => self.max_tableau_n,
        };
        if n > cap {
            return Err(Error::Budget {
                label: label.code(),
                n,
                cap,
            });
        }
        Ok(())
    }
}

/// Counts of a class at fixed `n`, indexed by `k` over `k_min..=k_max`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassSequence {
    #[serde(rename = "class")]
    pub label: ClassLabel,
    pub n: usize,
    pub k_min: usize,
    pub k_max: usize,
    pub counts: Vec<u128>,
}

impl ClassSequence {
    /// Builds the sequence over the class's stated range; fails if any
    /// count falls outside it.
    pub fn from_counts(label: ClassLabel, n: usize, by_k: &[u128]) -> Result<Self> {
        let (k_min, k_max) = label.k_range(n);
        for (k, &c) in by_k.iter().enumerate() {
            if c != 0 && (k < k_min || k > k_max) {
                return domain(format!("class {label} has {c} members at k = {k}, outside {k_min}..={k_max}"));
            }
        }
        let counts = (k_min..=k_max).map(|k| by_k.get(k).copied().unwrap_or(0)).collect();
        Ok(ClassSequence {
            label,
            n,
            k_min,
            k_max,
            counts,
        })
    }

    pub fn count(&self, k: usize) -> u128 {
        if k < self.k_min || k > self.k_max {
            0
        } else {
            self.counts[k - self.k_min]
        }
    }

    pub fn total(&self) -> Result<u128> {
        self.counts
            .iter()
            .try_fold(0u128, |acc, &c| acc.checked_add(c))
            .ok_or(Error::Overflow)
    }

    /// `(k, count)` pairs in increasing `k`.
    pub fn iter(&self) -> impl Iterator<Item = (usize, u128)> + '_ {
        (self.k_min..=self.k_max).zip(self.counts.iter().copied())
    }

    /// `n,k,count` rows with header.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,k,count\n");
        for (k, c) in self.iter() {
            out.push_str(&format!("{},{},{}\n", self.n, k, c));
        }
        out
    }
}

/// Streams every member of `label` at size `n`, shard by shard.
pub fn enumerate(
    label: ClassLabel,
    n: usize,
    budget: &Budget,
) -> Result<Box<dyn Iterator<Item = Member> + Send>> {
    if n == 0 {
        return domain("classes are enumerated for n >= 1");
    }
    budget.check(label, n)?;
    let shards = label.shard_count(n);
    Ok(Box::new((0..shards).flat_map(move |s| shard_members(label, n, s))))
}

/// Members of one shard. Permutation shards fix the first two entries,
/// involution shards fix `σ(1)`, tableau shards fix the shape.
pub fn enumerate_shard(
    label: ClassLabel,
    n: usize,
    shard: usize,
    budget: &Budget,
) -> Result<Box<dyn Iterator<Item = Member> + Send>> {
    budget.check(label, n)?;
    if shard >= label.shard_count(n) {
        return domain(format!("shard {shard} out of range for {label} at n = {n}"));
    }
    Ok(shard_members(label, n, shard))
}

fn shard_members(label: ClassLabel, n: usize, shard: usize) -> Box<dyn Iterator<Item = Member> + Send> {
    match label.family() {
        Family::Permutations => Box::new(
            ShardPermutations::new(n, shard)
                .filter(move |p| permutation_stat(label, p.word()).is_some())
                .map(Member::Permutation),
        ),
        Family::Involutions => Box::new(
            involutions_with_first(n, shard as u32 + 1)
                .into_iter()
                .filter(move |w| permutation_stat(label, w).is_some())
                .map(|w| Member::Permutation(Permutation::from_word_unchecked(w))),
        ),
        Family::Tableaux => Box::new(shape_shard_tableaux(label, n, shard).into_iter().map(Member::Tableau)),
    }
}

/// Grading statistic of a word, or `None` when it is not in the class.
fn permutation_stat(label: ClassLabel, w: &[u32]) -> Option<usize> {
    match label {
        ClassLabel::AllPermutations => Some(lis_len(w)),
        ClassLabel::Involutions => Some(lis_len(w)),
        ClassLabel::Avoid321Permutations | ClassLabel::TwoRowInvolutions => {
            (lds_len(w) <= 2).then(|| lis_len(w))
        }
        ClassLabel::HookPairPermutations => {
            let k = lis_len(w);
            (lds_len(w) == w.len() - k + 1).then_some(k)
        }
        ClassLabel::SkewMergedInvolutions => {
            debug_assert!(is_involution_word(w));
            is_skew_merged_word(w).then(|| lis_len(w))
        }
        _ => unreachable!("{label} is a tableau class"),
    }
}

/// Protected-area parameters `(l, m)` of a shape, without building a
/// tableau.
fn shape_lm(rows: &[usize]) -> (usize, usize) {
    let l = rows.get(1).copied().unwrap_or(0).max(1);
    let col = rows.iter().filter(|&&r| r >= 2).count().max(1);
    (l, l + rows[1..col].iter().sum::<usize>())
}

fn shape_in_class(label: ClassLabel, rows: &[usize]) -> bool {
    match label {
        ClassLabel::Hooks => rows.get(1).is_none_or(|&r| r <= 1),
        ClassLabel::Protected { l, m } => shape_lm(rows) == (l, m),
        ClassLabel::Protected24Tableaux | ClassLabel::HookPlusBoxTableaux => {
            rows.len() >= 2 && rows[0] >= 2 && rows[1] == 2 && rows[2..].iter().all(|&r| r == 1)
        }
        _ => unreachable!("{label} is not a tableau class"),
    }
}

fn shape_shard_tableaux(label: ClassLabel, n: usize, shard: usize) -> Vec<Tableau> {
    let shape = &partitions(n)[shard];
    if !shape_in_class(label, shape.rows()) {
        return Vec::new();
    }
    match label {
        ClassLabel::Hooks => hooks(n, shape.row(0)),
        ClassLabel::HookPlusBoxTableaux => standard_tableaux(shape),
        ClassLabel::Protected { l, m } => standard_tableaux(shape)
            .into_iter()
            .filter(|t| t.is_lm_protected(l, m))
            .collect(),
        ClassLabel::Protected24Tableaux => standard_tableaux(shape)
            .into_iter()
            .filter(|t| t.is_lm_protected(2, 4))
            .collect(),
        _ => unreachable!(),
    }
}

fn shard_counts(label: ClassLabel, n: usize, shard: usize) -> Vec<u64> {
    let mut counts = vec![0u64; n + 1];
    match label.family() {
        Family::Permutations => {
            let mut it = ShardPermutations::new(n, shard);
            while let Some(w) = it.advance() {
                if let Some(k) = permutation_stat(label, w) {
                    counts[k] += 1;
                }
            }
        }
        Family::Involutions => {
            for w in involutions_with_first(n, shard as u32 + 1) {
                if let Some(k) = permutation_stat(label, &w) {
                    counts[k] += 1;
                }
            }
        }
        Family::Tableaux => {
            for t in shape_shard_tableaux(label, n, shard) {
                counts[t.first_row_len()] += 1;
            }
        }
    }
    counts
}

/// Counts by `k` from exhaustive enumeration. Shards run on the rayon pool
/// under [`Execution::Parallel`]; the result does not depend on `exec`.
pub fn sequence(label: ClassLabel, n: usize, budget: &Budget, exec: Execution) -> Result<ClassSequence> {
    if n == 0 {
        return domain("sequences are defined for n >= 1");
    }
    budget.check(label, n)?;
    let counts = par::map_reduce(
        exec,
        label.shard_count(n),
        |s| shard_counts(label, n, s),
        |mut a, b| {
            a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
            a
        },
    )
    .unwrap_or_else(|| vec![0; n + 1]);
    let counts: Vec<u128> = counts.into_iter().map(u128::from).collect();
    ClassSequence::from_counts(label, n, &counts)
}

/// Outcome of a log-concavity check on one sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LogConcavityReport {
    #[serde(rename = "class")]
    pub label: ClassLabel,
    pub n: usize,
    pub holds: bool,
    /// Interior `k` with `c[k-1]·c[k+1] > c[k]²`, or with `c[k] = 0`.
    pub witnesses: Vec<usize>,
    /// Range actually checked, after trimming leading and trailing zeros.
    pub range: (usize, usize),
}

/// `a·b` as a 256-bit `(high, low)` pair.
fn wide_mul(a: u128, b: u128) -> (u128, u128) {
    const MASK: u128 = (1 << 64) - 1;
    let (a_hi, a_lo) = (a >> 64, a & MASK);
    let (b_hi, b_lo) = (b >> 64, b & MASK);
    let lo_lo = a_lo * b_lo;
    let hi_lo = a_hi * b_lo;
    let lo_hi = a_lo * b_hi;
    let hi_hi = a_hi * b_hi;
    let mid = (lo_lo >> 64) + (hi_lo & MASK) + (lo_hi & MASK);
    let low = (lo_lo & MASK) | (mid << 64);
    let high = hi_hi + (hi_lo >> 64) + (lo_hi >> 64) + (mid >> 64);
    (high, low)
}

/// Checks `c[k-1]·c[k+1] <= c[k]²` at every interior `k` of the
/// sequence's support. Leading and trailing zeros are outside the
/// sequence; an interior zero is a violation.
pub fn check_log_concavity(seq: &ClassSequence) -> LogConcavityReport {
    let c = &seq.counts;
    let first = c.iter().position(|&x| x != 0);
    let last = c.iter().rposition(|&x| x != 0);
    let mut witnesses = Vec::new();
    let range = match (first, last) {
        (Some(lo), Some(hi)) => {
            for i in lo + 1..hi {
                if c[i] == 0 || wide_mul(c[i - 1], c[i + 1]) > wide_mul(c[i], c[i]) {
                    witnesses.push(seq.k_min + i);
                }
            }
            (seq.k_min + lo, seq.k_min + hi)
        }
        _ => (seq.k_min, seq.k_max),
    };
    LogConcavityReport {
        label: seq.label,
        n: seq.n,
        holds: witnesses.is_empty(),
        witnesses,
        range,
    }
}

/// How the `u` triangle is obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum CountMethod {
    /// Walk all of `S_n`.
    #[default]
    Enumerate,
    /// Sum squared tableau counts over shapes.
    Shapes,
}

/// Log-concavity of `u(n, ·)` for every `n` in `1..=n_max`.
pub fn verify_conjecture(
    n_max: usize,
    budget: &Budget,
    exec: Execution,
    method: CountMethod,
) -> Result<Vec<LogConcavityReport>> {
    if method == CountMethod::Enumerate {
        budget.check(ClassLabel::AllPermutations, n_max)?;
    }
    (1..=n_max)
        .map(|n| {
            let seq = match method {
                CountMethod::Enumerate => sequence(ClassLabel::AllPermutations, n, budget, exec)?,
                CountMethod::Shapes => shapes::sequence_by_shapes(ClassLabel::AllPermutations, n)?,
            };
            Ok(check_log_concavity(&seq))
        })
        .collect()
}
