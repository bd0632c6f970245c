//! Permutations in one-line notation and the statistics built on them:
//! longest increasing subsequence, Ulam distance, and classical pattern
//! containment.
//!
//! Values and positions are 1-based throughout, so `[3, 1, 4, 2]` sends
//! position 1 to 3, position 2 to 1 and so on.

use std::fmt;
use std::str::FromStr;

use smallvec::SmallVec;

use crate::error::{domain, Error, Result};

/// A permutation of `{1..n}` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    word: Vec<u32>,
}

impl Permutation {
    /// Checks that `word` is a bijection on `{1..n}`.
    pub fn new(word: Vec<u32>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &v in &word {
            let i = v as usize;
            if i == 0 || i > n {
                return domain(format!("value {v} is outside 1..={n}"));
            }
            if seen[i] {
                return domain(format!("value {v} occurs twice"));
            }
            seen[i] = true;
        }
        Ok(Permutation { word })
    }

    pub(crate) fn from_word_unchecked(word: Vec<u32>) -> Self {
        debug_assert!(Permutation::new(word.clone()).is_ok());
        Permutation { word }
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            word: (1..=n as u32).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn word(&self) -> &[u32] {
        &self.word
    }

    pub fn into_word(self) -> Vec<u32> {
        self.word
    }

    /// Image of the 1-based position `i`.
    pub fn at(&self, i: usize) -> u32 {
        self.word[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.word.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    /// Length of the longest strictly increasing subsequence.
    pub fn lis_length(&self) -> Result<usize> {
        if self.is_empty() {
            return domain("longest increasing subsequence of the empty permutation");
        }
        Ok(lis_len(&self.word))
    }

    /// Length of the longest strictly decreasing subsequence.
    pub fn lds_length(&self) -> Result<usize> {
        if self.is_empty() {
            return domain("longest decreasing subsequence of the empty permutation");
        }
        Ok(lds_len(&self.word))
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.word.iter().enumerate() {
            inv[v as usize - 1] = i as u32 + 1;
        }
        Permutation { word: inv }
    }

    /// `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.len() != other.len() {
            return domain(format!(
                "cannot compose permutations of lengths {} and {}",
                self.len(),
                other.len()
            ));
        }
        Ok(Permutation {
            word: other.word.iter().map(|&j| self.word[j as usize - 1]).collect(),
        })
    }

    /// Reads the word right to left: `reverse(p)(i) = p(n + 1 - i)`.
    pub fn reverse(&self) -> Permutation {
        let mut word = self.word.clone();
        word.reverse();
        Permutation { word }
    }

    pub fn is_involution(&self) -> bool {
        is_involution_word(&self.word)
    }

    /// True iff some subsequence of `self` is order-isomorphic to `pattern`.
    pub fn contains_pattern(&self, pattern: &Permutation) -> bool {
        contains_pattern_word(&self.word, &pattern.word)
    }

    /// Avoids both 2143 and 3412, i.e. is a merge of an increasing and a
    /// decreasing sequence.
    pub fn is_skew_merged(&self) -> bool {
        is_skew_merged_word(&self.word)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.word.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Comma-separated values, e.g. `"3,1,4,2"`. The empty string is the
    /// empty permutation.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Permutation::identity(0));
        }
        let word = s
            .split(',')
            .map(|tok| {
                tok.trim().parse::<u32>().map_err(|e| Error::Parse {
                    what: "permutation",
                    token: tok.to_string(),
                    reason: e.to_string(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(word).map_err(|e| Error::Parse {
            what: "permutation",
            token: s.to_string(),
            reason: e.to_string(),
        })
    }
}

impl TryFrom<Vec<u32>> for Permutation {
    type Error = Error;

    fn try_from(word: Vec<u32>) -> Result<Self> {
        Permutation::new(word)
    }
}

/// Ulam distance: the least number of take-one-element-and-reinsert moves
/// turning `p` into `q`. Equal to `n - ℓ(q⁻¹ ∘ p)`; against the identity
/// this is `n - ℓ(p)`.
pub fn ulam_distance(p: &Permutation, q: &Permutation) -> Result<usize> {
    if p.len() != q.len() {
        return domain(format!(
            "Ulam distance between lengths {} and {}",
            p.len(),
            q.len()
        ));
    }
    if p.is_empty() {
        return domain("Ulam distance needs n >= 1");
    }
    let relabeled = q.inverse().compose(p)?;
    Ok(p.len() - lis_len(&relabeled.word))
}

/// Patience-sorting LIS length, `O(n log n)`.
pub fn lis_len(word: &[u32]) -> usize {
    let mut tails: SmallVec<[u32; 24]> = SmallVec::new();
    for &x in word {
        let pos = tails.partition_point(|&t| t < x);
        if pos == tails.len() {
            tails.push(x);
        } else {
            tails[pos] = x;
        }
    }
    tails.len()
}

/// Longest strictly decreasing subsequence length.
pub fn lds_len(word: &[u32]) -> usize {
    let mut tails: SmallVec<[u32; 24]> = SmallVec::new();
    for &x in word {
        // tails is kept strictly decreasing
        let pos = tails.partition_point(|&t| t > x);
        if pos == tails.len() {
            tails.push(x);
        } else {
            tails[pos] = x;
        }
    }
    tails.len()
}

pub(crate) fn is_involution_word(word: &[u32]) -> bool {
    word.iter()
        .enumerate()
        .all(|(i, &v)| word[v as usize - 1] as usize == i + 1)
}

pub(crate) fn is_skew_merged_word(word: &[u32]) -> bool {
    !contains_pattern_word(word, &[2, 1, 4, 3]) && !contains_pattern_word(word, &[3, 4, 1, 2])
}

/// Exhaustive search over index subsets, pruning a partial choice as soon
/// as it stops being order-isomorphic to the matching prefix of `pattern`.
pub(crate) fn contains_pattern_word(word: &[u32], pattern: &[u32]) -> bool {
    if pattern.is_empty() {
        return true;
    }
    if pattern.len() > word.len() {
        return false;
    }
    let mut chosen: SmallVec<[u32; 8]> = SmallVec::new();
    extend_match(word, pattern, 0, &mut chosen)
}

fn extend_match(word: &[u32], pattern: &[u32], from: usize, chosen: &mut SmallVec<[u32; 8]>) -> bool {
    let j = chosen.len();
    if j == pattern.len() {
        return true;
    }
    let remaining = pattern.len() - j;
    for i in from..=word.len() - remaining {
        let v = word[i];
        let consistent = chosen
            .iter()
            .zip(pattern)
            .all(|(&c, &pc)| (c < v) == (pc < pattern[j]));
        if consistent {
            chosen.push(v);
            if extend_match(word, pattern, i + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// Rearranges `word` into the next permutation in lexicographic order.
/// Returns false (leaving `word` sorted ascending) after the last one.
pub(crate) fn next_permutation(word: &mut [u32]) -> bool {
    let n = word.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && word[i - 1] >= word[i] {
        i -= 1;
    }
    if i == 0 {
        word.reverse();
        return false;
    }
    let mut j = n - 1;
    while word[j] <= word[i - 1] {
        j -= 1;
    }
    word.swap(i - 1, j);
    word[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::{HashMap, VecDeque};

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn all_perms(n: usize) -> Vec<Permutation> {
        let mut w: Vec<u32> = (1..=n as u32).collect();
        let mut out = vec![Permutation::new(w.clone()).unwrap()];
        while next_permutation(&mut w) {
            out.push(Permutation::new(w.clone()).unwrap());
        }
        out
    }

    // brute force over all 2^n subsequences
    fn brute_lis(word: &[u32]) -> usize {
        let n = word.len();
        (0u32..1 << n)
            .filter_map(|mask| {
                let sub: Vec<u32> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| word[i]).collect();
                sub.windows(2).all(|w| w[0] < w[1]).then_some(sub.len())
            })
            .max()
            .unwrap()
    }

    // BFS over the graph whose edges are single remove-and-reinsert moves
    fn bfs_distances(n: usize) -> HashMap<Vec<u32>, usize> {
        let start: Vec<u32> = (1..=n as u32).collect();
        let mut dist = HashMap::from([(start.clone(), 0)]);
        let mut queue = VecDeque::from([start]);
        while let Some(w) = queue.pop_front() {
            let d = dist[&w];
            for from in 0..n {
                for to in 0..n {
                    if from == to {
                        continue;
                    }
                    let mut next = w.clone();
                    let v = next.remove(from);
                    next.insert(to, v);
                    if !dist.contains_key(&next) {
                        dist.insert(next.clone(), d + 1);
                        queue.push_back(next);
                    }
                }
            }
        }
        dist
    }

    #[test]
    fn parse_rejects_non_bijections() {
        assert!("3,1,4,2".parse::<Permutation>().is_ok());
        assert!("1,1,2".parse::<Permutation>().is_err());
        assert!("0,1".parse::<Permutation>().is_err());
        assert!("1,3".parse::<Permutation>().is_err());
        assert!("1,x".parse::<Permutation>().is_err());
        assert_eq!(p("3,1,4,2").to_string(), "3,1,4,2");
    }

    #[test]
    fn lis_examples() {
        assert_eq!(p("1,2,3,4").lis_length().unwrap(), 4);
        assert_eq!(brute_lis(&[3, 1, 4, 2]), 2);
        assert_eq!(p("3,1,4,2").lis_length().unwrap(), 2);
        assert!(Permutation::identity(0).lis_length().is_err());
    }

    #[test]
    fn lis_matches_brute_force() {
        for n in 1..=7 {
            for q in all_perms(n) {
                assert_eq!(q.lis_length().unwrap(), brute_lis(q.word()), "{q}");
                let rev: Vec<u32> = q.word().iter().rev().copied().collect();
                assert_eq!(q.lds_length().unwrap(), brute_lis(&rev));
                assert_eq!(q.reverse().lis_length().unwrap(), q.lds_length().unwrap());
            }
        }
    }

    #[test]
    fn ulam_examples() {
        assert_eq!(ulam_distance(&p("1,2,3"), &p("1,2,3")).unwrap(), 0);
        assert_eq!(ulam_distance(&p("3,2,1"), &p("1,2,3")).unwrap(), 2);
        assert_eq!(ulam_distance(&p("2,1,3,4"), &Permutation::identity(4)).unwrap(), 1);
        assert!(ulam_distance(&p("1,2"), &p("1,2,3")).is_err());
    }

    #[test]
    fn ulam_matches_bfs_for_all_pairs() {
        // the move graph is vertex-transitive under relabeling, so the BFS
        // from the identity gives d(p, q) = d(q⁻¹∘p, id)
        for n in 1..=5 {
            let dist = bfs_distances(n);
            let perms = all_perms(n);
            for a in &perms {
                assert_eq!(ulam_distance(a, &Permutation::identity(n)).unwrap(), dist[a.word()]);
                for b in &perms {
                    let rel = b.inverse().compose(a).unwrap();
                    assert_eq!(ulam_distance(a, b).unwrap(), dist[rel.word()]);
                    assert_eq!(ulam_distance(a, b).unwrap(), ulam_distance(b, a).unwrap());
                }
            }
        }
    }

    #[test]
    fn inverse_reverse_involution() {
        assert_eq!(p("2,3,1").inverse(), p("3,1,2"));
        assert!(p("2,1,4,3").is_involution());
        assert!(!p("2,3,1").is_involution());
        assert_eq!(p("3,1,4,2").reverse(), p("2,4,1,3"));
        for n in 1..=6 {
            for q in all_perms(n) {
                assert_eq!(q.is_involution(), q.inverse() == q);
                assert!(q.compose(&q.inverse()).unwrap().is_identity());
            }
        }
    }

    #[test]
    fn pattern_examples() {
        assert!(!p("1,2,3").contains_pattern(&p("2,1")));
        assert!(p("2,1,4,3").contains_pattern(&p("2,1,4,3")));
        assert!(p("5,3,1,6,4,2").contains_pattern(&p("3,1,4,2")));
        assert!(!p("1,2").contains_pattern(&p("1,2,3")));
    }

    fn brute_contains(word: &[u32], pat: &[u32]) -> bool {
        let n = word.len();
        let k = pat.len();
        (0u32..1 << n).filter(|m| m.count_ones() as usize == k).any(|mask| {
            let sub: Vec<u32> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| word[i]).collect();
            (0..k).all(|a| (0..k).all(|b| (sub[a] < sub[b]) == (pat[a] < pat[b])))
        })
    }

    #[test]
    fn pattern_search_matches_subset_oracle() {
        let patterns: Vec<Permutation> = (1..=4).flat_map(all_perms).collect();
        for n in 1..=6 {
            for q in all_perms(n) {
                for pat in &patterns {
                    assert_eq!(q.contains_pattern(pat), brute_contains(q.word(), pat.word()));
                }
            }
        }
    }

    #[test]
    fn skew_merged_examples() {
        assert!(p("1,2,3,4").is_skew_merged());
        assert!(!p("2,1,4,3").is_skew_merged());
        assert!(!p("3,4,1,2").is_skew_merged());
    }

    #[test]
    fn next_permutation_enumerates_factorial() {
        assert_eq!(all_perms(5).len(), 120);
        let mut w = vec![1];
        assert!(!next_permutation(&mut w));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn perm_strategy(max: usize) -> impl Strategy<Value = Permutation> {
            (1..=max)
                .prop_flat_map(|n| Just((1..=n as u32).collect::<Vec<_>>()).prop_shuffle())
                .prop_map(|w| Permutation::new(w).unwrap())
        }

        proptest! {
            #[test]
            fn pattern_containment_is_monotone(q in perm_strategy(9), pat in perm_strategy(4), drop in 0usize..4) {
                // sub-pattern of pat: delete one entry and standardize
                if pat.len() > 1 && q.contains_pattern(&pat) {
                    let i = drop % pat.len();
                    let removed = pat.word()[i];
                    let sub: Vec<u32> = pat.word().iter().enumerate()
                        .filter(|&(j, _)| j != i)
                        .map(|(_, &v)| if v > removed { v - 1 } else { v })
                        .collect();
                    prop_assert!(q.contains_pattern(&Permutation::new(sub).unwrap()));
                }
            }

            #[test]
            fn skew_merged_closed_under_reverse(q in perm_strategy(10)) {
                prop_assert_eq!(q.is_skew_merged(), q.reverse().is_skew_merged());
            }

            #[test]
            fn ulam_is_a_metric(a in perm_strategy(8), seed in any::<u64>()) {
                let n = a.len();
                let mut w: Vec<u32> = (1..=n as u32).collect();
                // deterministic shuffle from the seed
                let mut s = seed;
                for i in (1..n).rev() {
                    s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    w.swap(i, (s >> 33) as usize % (i + 1));
                }
                let b = Permutation::new(w).unwrap();
                let id = Permutation::identity(n);
                let ab = ulam_distance(&a, &b).unwrap();
                prop_assert!(ab <= ulam_distance(&a, &id).unwrap() + ulam_distance(&id, &b).unwrap());
                prop_assert_eq!(ab == 0, a == b);
            }
        }
    }
}
