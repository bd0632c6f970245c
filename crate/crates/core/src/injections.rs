//! Constructive injections behind the log-concavity results:
//!
//! * [`hook_inject`]: `H(n,k) × H(n,l) → H(n,k+1) × H(n,l-1)` on hook
//!   tableaux, by recursion on the largest entry for `l = k + 2`, anchored
//!   in hand-written tables for `n = 3, 4`;
//! * [`protected_inject`]: the same map applied to the surplus of
//!   (l, m)-protected tableaux, leaving the protected areas untouched;
//! * [`lift`]: turns an injection on tableau pairs into one on permutation
//!   pairs through Robinson–Schensted.

use std::collections::HashMap;
use std::sync::OnceLock;

use crate::error::{domain, Error, Result};
use crate::perm::Permutation;
use crate::tableaux::{rsk, rsk_inverse, HookType, Tableau};

type Pair = (Tableau, Tableau);

/// `(n, k, l, T1, T2) ↦ (U1, U2)` for `n ∈ {3, 4}`.
const BASE_TABLE: &[(usize, usize, usize, &str, &str, &str, &str)] = &[
    (3, 1, 3, "1/2/3", "1,2,3", "1,2/3", "1,3/2"),
    (4, 1, 3, "1/2/3/4", "1,2,3/4", "1,2/3/4", "1,3/2/4"),
    (4, 1, 3, "1/2/3/4", "1,2,4/3", "1,2/3/4", "1,4/2/3"),
    (4, 1, 3, "1/2/3/4", "1,3,4/2", "1,3/2/4", "1,4/2/3"),
    (4, 1, 4, "1/2/3/4", "1,2,3,4", "1,2/3/4", "1,2,4/3"),
    (4, 2, 4, "1,2/3/4", "1,2,3,4", "1,2,3/4", "1,2,4/3"),
    (4, 2, 4, "1,4/2/3", "1,2,3,4", "1,2,4/3", "1,3,4/2"),
    (4, 2, 4, "1,3/2/4", "1,2,3,4", "1,2,3/4", "1,3,4/2"),
];

/// The base maps for `n = 3, 4`, keyed by `(n, k, l)` and the input pair.
pub struct HookBaseTable {
    entries: Vec<((usize, usize, usize), Pair, Pair)>,
    map: HashMap<(usize, usize, usize, Tableau, Tableau), Pair>,
}

impl HookBaseTable {
    pub fn get() -> &'static HookBaseTable {
        static TABLE: OnceLock<HookBaseTable> = OnceLock::new();
        TABLE.get_or_init(|| {
            let parse = |s: &str| s.parse::<Tableau>().expect("base table entry");
            let entries: Vec<_> = BASE_TABLE
                .iter()
                .map(|&(n, k, l, t1, t2, u1, u2)| ((n, k, l), (parse(t1), parse(t2)), (parse(u1), parse(u2))))
                .collect();
            let map = entries
                .iter()
                .map(|((n, k, l), (t1, t2), out)| ((*n, *k, *l, t1.clone(), t2.clone()), out.clone()))
                .collect();
            HookBaseTable { entries, map }
        })
    }

    pub fn lookup(&self, n: usize, k: usize, l: usize, t1: &Tableau, t2: &Tableau) -> Option<&Pair> {
        self.map.get(&(n, k, l, t1.clone(), t2.clone()))
    }

    /// Every `((n, k, l), input, output)` entry, in table order.
    pub fn entries(&self) -> &[((usize, usize, usize), Pair, Pair)] {
        &self.entries
    }
}

/// Injects `[0, A) × [0, B)` into `[0, C) × [0, D)` through the mixed
/// radix rank `t = i·B + j ↦ (t / D, t mod D)`. Needs `A·B <= C·D`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RankInjection {
    a: u128,
    b: u128,
    c: u128,
    d: u128,
}

impl RankInjection {
    pub fn new(a: u128, b: u128, c: u128, d: u128) -> Result<Self> {
        let dom = a.checked_mul(b).ok_or(Error::Overflow)?;
        let cod = c.checked_mul(d).ok_or(Error::Overflow)?;
        if dom > cod {
            return domain(format!("cannot inject {a}x{b} into {c}x{d}"));
        }
        Ok(RankInjection { a, b, c, d })
    }

    pub fn apply(&self, i: u128, j: u128) -> (u128, u128) {
        debug_assert!(i < self.a && j < self.b);
        let t = i * self.b + j;
        (t / self.d, t % self.d)
    }

    /// Left inverse of [`apply`](Self::apply), `None` off the image.
    pub fn invert(&self, u: u128, v: u128) -> Option<(u128, u128)> {
        if u >= self.c || v >= self.d || self.b == 0 {
            return None;
        }
        let t = u * self.d + v;
        let (i, j) = (t / self.b, t % self.b);
        (i < self.a).then_some((i, j))
    }
}

/// `C(n, r)` in exact arithmetic; zero when `r > n`.
pub fn binomial(n: usize, r: usize) -> u128 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for i in 0..r {
        // exact at every step: acc = C(n - r + i + 1, i + 1)
        acc = acc * (n - r + i + 1) as u128 / (i + 1) as u128;
    }
    acc
}

/// Number of hooks of size `n` with first row `k`.
pub fn hook_count(n: usize, k: usize) -> u128 {
    if n == 0 || k == 0 || k > n {
        return 0;
    }
    binomial(n - 1, k - 1)
}

/// Builds the hook whose first row is `row` and whose first column below
/// the corner is `column`. Both must be increasing, together `1..=n`, and
/// start after 1.
pub(crate) fn hook_from_parts(row: &[u32], column: &[u32]) -> Tableau {
    let mut rows = Vec::with_capacity(column.len() + 1);
    let mut first = Vec::with_capacity(row.len() + 1);
    first.push(1);
    first.extend_from_slice(row);
    rows.push(first);
    rows.extend(column.iter().map(|&v| vec![v]));
    Tableau::from_rows_unchecked(rows)
}

/// (first row past the corner, first column below the corner).
pub(crate) fn hook_parts(t: &Tableau) -> (Vec<u32>, Vec<u32>) {
    let rows = t.rows();
    (rows[0][1..].to_vec(), rows[1..].iter().map(|r| r[0]).collect())
}

/// Lexicographic rank of a hook among `H(n, k)`, ordering by the sorted
/// first-row entry set.
pub fn hook_rank(t: &Tableau) -> u128 {
    let n = t.size();
    let (row, _) = hook_parts(t);
    let r = row.len();
    // choose r elements from {2..=n}; index them 0..n-1
    let universe = n - 1;
    let mut rank = 0;
    let mut prev: isize = -1;
    for (j, &v) in row.iter().enumerate() {
        let c = v as isize - 2;
        for skipped in prev + 1..c {
            rank += binomial(universe - 1 - skipped as usize, r - j - 1);
        }
        prev = c;
    }
    rank
}

/// Inverse of [`hook_rank`].
pub fn hook_unrank(n: usize, k: usize, mut rank: u128) -> Result<Tableau> {
    let total = hook_count(n, k);
    if rank >= total {
        return domain(format!("rank {rank} out of range for H({n},{k}) of size {total}"));
    }
    let universe = n - 1;
    let r = k - 1;
    let mut row = Vec::with_capacity(r);
    let mut next = 0usize;
    for j in 0..r {
        loop {
            let with_next = binomial(universe - 1 - next, r - j - 1);
            if rank < with_next {
                break;
            }
            rank -= with_next;
            next += 1;
        }
        row.push(next as u32 + 2);
        next += 1;
    }
    let column: Vec<u32> = (2..=n as u32).filter(|v| !row.contains(v)).collect();
    Ok(hook_from_parts(&row, &column))
}

fn check_hook(t: &Tableau, n: usize, k: usize, which: &str) -> Result<()> {
    if !t.is_hook() {
        return domain(format!("{which} = {t} is not a hook"));
    }
    if t.size() != n || t.first_row_len() != k {
        return domain(format!(
            "{which} = {t} is not in H({n},{k}) (size {}, first row {})",
            t.size(),
            t.first_row_len()
        ));
    }
    Ok(())
}

/// Removes the largest entry of a hook.
fn remove_max(t: &Tableau) -> Tableau {
    let n = t.size() as u32;
    let (mut row, mut column) = hook_parts(t);
    row.retain(|&v| v != n);
    column.retain(|&v| v != n);
    hook_from_parts(&row, &column)
}

/// Appends `n = size + 1` to the end of the first row or column.
fn append_max(t: &Tableau, at: HookType) -> Tableau {
    let n = t.size() as u32 + 1;
    let (mut row, mut column) = hook_parts(t);
    match at {
        HookType::Right => row.push(n),
        HookType::Down => column.push(n),
    }
    hook_from_parts(&row, &column)
}

/// Injection `H(n,k) × H(n,l) → H(n,k+1) × H(n,l-1)` for
/// `1 <= k <= l - 2 <= n - 2`, `n >= 3`.
///
/// For `l = k + 2` the map preserves the pair type (positions of `n`).
/// For `l > k + 2` it goes through lexicographic ranks.
pub fn hook_inject(n: usize, k: usize, l: usize, t1: &Tableau, t2: &Tableau) -> Result<Pair> {
    if n < 3 || k < 1 || k + 2 > l || l > n {
        return domain(format!("need n >= 3 and 1 <= k <= l - 2 <= n - 2, got n = {n}, k = {k}, l = {l}"));
    }
    check_hook(t1, n, k, "T1")?;
    check_hook(t2, n, l, "T2")?;
    Ok(inject_unchecked(n, k, l, t1, t2))
}

fn inject_unchecked(n: usize, k: usize, l: usize, t1: &Tableau, t2: &Tableau) -> Pair {
    if n <= 4 {
        return HookBaseTable::get()
            .lookup(n, k, l, t1, t2)
            .cloned()
            .expect("base table covers every pair for n <= 4");
    }
    if l > k + 2 {
        return rank_inject(n, k, l, t1, t2);
    }
    let ty1 = t1.hook_type().expect("hook of size >= 2");
    let ty2 = t2.hook_type().expect("hook of size >= 2");
    match (ty1, ty2) {
        (HookType::Down, HookType::Right) => {
            let u1 = append_max(&remove_max(t1), HookType::Right);
            let u2 = append_max(&remove_max(t2), HookType::Down);
            (u2, u1)
        }
        _ => {
            let s1 = remove_max(t1);
            let s2 = remove_max(t2);
            let (u1, u2) = inject_unchecked(n - 1, s1.first_row_len(), s2.first_row_len(), &s1, &s2);
            (append_max(&u1, ty1), append_max(&u2, ty2))
        }
    }
}

fn rank_inject(n: usize, k: usize, l: usize, t1: &Tableau, t2: &Tableau) -> Pair {
    let ranks = RankInjection::new(
        hook_count(n, k),
        hook_count(n, l),
        hook_count(n, k + 1),
        hook_count(n, l - 1),
    )
    .expect("binomial rows are log-concave");
    let (u, v) = ranks.apply(hook_rank(t1), hook_rank(t2));
    (
        hook_unrank(n, k + 1, u).expect("rank in range"),
        hook_unrank(n, l - 1, v).expect("rank in range"),
    )
}

/// Pair type `(type(T1), type(T2))`.
pub fn pair_type(t1: &Tableau, t2: &Tableau) -> Result<(HookType, HookType)> {
    Ok((t1.hook_type()?, t2.hook_type()?))
}

/// Injection `P(n,k-1) × P(n,k+1) → P(n,k)²` on (l, m)-protected
/// tableaux: the surpluses are standardized into hooks, pushed through
/// [`hook_inject`], and reattached to the original protected areas.
pub fn protected_inject(
    n: usize,
    k: usize,
    l: usize,
    m: usize,
    t1: &Tableau,
    t2: &Tableau,
) -> Result<Pair> {
    if k < 1 {
        return domain("protected injection needs k >= 1");
    }
    for (t, want, which) in [(t1, k - 1, "T1"), (t2, k + 1, "T2")] {
        if t.size() != n || t.first_row_len() != want {
            return domain(format!(
                "{which} = {t} should have size {n} and first row {want}"
            ));
        }
        if !t.is_lm_protected(l, m) {
            return domain(format!("{which} = {t} is not ({l},{m})-protected"));
        }
    }
    let d1 = t1.protected_decompose()?;
    let d2 = t2.protected_decompose()?;
    let size = n - m + 1;

    let standard_hook = |dec: &crate::tableaux::ProtectedDecomposition| {
        let surplus = dec.surplus();
        let index = |v: &u32| surplus.binary_search(v).expect("surplus entry") as u32 + 2;
        let row: Vec<u32> = dec.eastern_surplus.iter().map(index).collect();
        let col: Vec<u32> = dec.southern_surplus.iter().map(index).collect();
        (hook_from_parts(&row, &col), surplus)
    };
    let (h1, s1) = standard_hook(&d1);
    let (h2, s2) = standard_hook(&d2);
    let (j1, j2) = hook_inject(size, k - l, k - l + 2, &h1, &h2)?;

    let restore = |j: &Tableau, surplus: &[u32], dec: &crate::tableaux::ProtectedDecomposition| {
        let (row, col) = hook_parts(j);
        let relabel = |v: &u32| surplus[*v as usize - 2];
        let east: Vec<u32> = row.iter().map(relabel).collect();
        let south: Vec<u32> = col.iter().map(relabel).collect();
        dec.attach(&east, &south)
    };
    Ok((restore(&j1, &s1, &d1)?, restore(&j2, &s2, &d2)?))
}

/// Lifts an injection on tableau pairs to permutation pairs:
/// with `f(P1, P2) = (A1, A2)` and `f(Q1, Q2) = (B1, B2)`, the image is
/// `(RS⁻¹(A1, B1), RS⁻¹(A2, B2))`.
///
/// `Ai` and `Bi` must share a shape; a violation is reported as a domain
/// error rather than assumed away.
pub fn lift<F>(inj: F, p1: &Permutation, p2: &Permutation) -> Result<(Permutation, Permutation)>
where
    F: Fn(&Tableau, &Tableau) -> Result<Pair>,
{
    let (pp1, qq1) = rsk(p1)?;
    let (pp2, qq2) = rsk(p2)?;
    let (a1, a2) = inj(&pp1, &pp2)?;
    let (b1, b2) = inj(&qq1, &qq2)?;
    for (x, y) in [(&a1, &b1), (&a2, &b2)] {
        if x.shape() != y.shape() {
            return domain(format!(
                "injection is not shape-rigid: images {x} and {y} have shapes {} and {}",
                x.shape(),
                y.shape()
            ));
        }
    }
    Ok((rsk_inverse(&a1, &b1)?, rsk_inverse(&a2, &b2)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::census::generate::{hooks, permutations, standard_tableaux};
    use proptest::prelude::*;
    use std::collections::HashSet;

    fn t(s: &str) -> Tableau {
        s.parse().unwrap()
    }

    #[test]
    fn base_table_is_complete_and_consistent() {
        let table = HookBaseTable::get();
        assert_eq!(table.entries().len(), 8);
        for &((n, k, l), (ref t1, ref t2), (ref u1, ref u2)) in table.entries() {
            assert!(t1.is_hook() && t1.size() == n && t1.first_row_len() == k);
            assert!(t2.is_hook() && t2.size() == n && t2.first_row_len() == l);
            assert!(u1.is_hook() && u1.first_row_len() == k + 1);
            assert!(u2.is_hook() && u2.first_row_len() == l - 1);
        }
        // every input pair for n <= 4 appears exactly once
        let mut expected = 0;
        for (n, k, l) in [(3, 1, 3), (4, 1, 3), (4, 1, 4), (4, 2, 4)] {
            expected += hooks(n, k).len() * hooks(n, l).len();
            for a in hooks(n, k) {
                for b in hooks(n, l) {
                    assert!(table.lookup(n, k, l, &a, &b).is_some(), "{a} {b}");
                }
            }
        }
        assert_eq!(expected, 8);
    }

    #[test]
    fn worked_examples_n5() {
        assert_eq!(
            hook_inject(5, 2, 4, &t("1,2/3/4/5"), &t("1,2,4,5/3")).unwrap(),
            (t("1,2,4/3/5"), t("1,2,5/3/4"))
        );
        assert_eq!(
            hook_inject(5, 3, 5, &t("1,2,5/3/4"), &t("1,2,3,4,5")).unwrap(),
            (t("1,2,3,5/4"), t("1,2,4,5/3"))
        );
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(hook_inject(5, 2, 3, &t("1,2/3/4/5"), &t("1,2,4/3/5")).is_err());
        assert!(hook_inject(5, 2, 4, &t("1,2/3,4/5"), &t("1,2,4,5/3")).is_err());
        assert!(hook_inject(5, 2, 4, &t("1,2,4,5/3"), &t("1,2/3/4/5")).is_err());
    }

    #[test]
    fn type_preserving_injection_small_n() {
        for n in 3..=10 {
            for k in 1..=n - 2 {
                let mut seen = HashSet::new();
                for a in hooks(n, k) {
                    for b in hooks(n, k + 2) {
                        let (u1, u2) = hook_inject(n, k, k + 2, &a, &b).unwrap();
                        assert_eq!((u1.first_row_len(), u2.first_row_len()), (k + 1, k + 1));
                        assert!(u1.is_hook() && u2.is_hook());
                        assert_eq!(pair_type(&a, &b).unwrap(), pair_type(&u1, &u2).unwrap(), "{a} {b}");
                        assert!(seen.insert((u1, u2)));
                    }
                }
            }
        }
    }

    #[test]
    fn rank_order_matches_generation() {
        for n in 1..=9 {
            for k in 1..=n {
                for (i, h) in hooks(n, k).iter().enumerate() {
                    assert_eq!(hook_rank(h), i as u128);
                    assert_eq!(&hook_unrank(n, k, i as u128).unwrap(), h);
                }
                assert!(hook_unrank(n, k, hook_count(n, k)).is_err());
            }
        }
    }

    #[test]
    fn binomial_small() {
        let mut row = vec![1u128];
        for n in 1..=40 {
            let mut next = vec![1u128; n + 1];
            for r in 1..n {
                next[r] = row[r - 1] + row[r];
            }
            row = next;
            for (r, &c) in row.iter().enumerate() {
                assert_eq!(binomial(n, r), c);
            }
            assert_eq!(binomial(n, n + 1), 0);
        }
    }

    proptest! {
        #[test]
        fn rank_injection_is_injective(a in 1u128..40, b in 1u128..40, slack in 0u128..5) {
            let c = a + slack;
            let d = (a * b).div_ceil(c);
            let r = RankInjection::new(a, b, c, d).unwrap();
            let mut seen = HashSet::new();
            for i in 0..a {
                for j in 0..b {
                    let (u, v) = r.apply(i, j);
                    prop_assert!(u < c && v < d);
                    prop_assert!(seen.insert((u, v)));
                    prop_assert_eq!(r.invert(u, v), Some((i, j)));
                }
            }
        }
    }

    #[test]
    fn rank_injection_rejects_small_codomain() {
        assert!(RankInjection::new(3, 3, 2, 4).is_err());
    }

    #[test]
    fn protected_worked_example() {
        let t1 = t("1,3,6,9/2,4,7,15/5,8/10,13/11/12/14");
        let t2 = t("1,2,3,4,11,14/5,6,8,12/7,10,13,15/9");
        let (u1, u2) = protected_inject(15, 5, 4, 12, &t1, &t2).unwrap();
        assert_eq!(u1, t("1,3,6,9,12/2,4,7,15/5,8/10,13/11/14"));
        assert_eq!(u2, t("1,2,3,4,14/5,6,8,12/7,10,13,15/9/11"));
    }

    fn protected_of_size(n: usize, l: usize, m: usize) -> Vec<Tableau> {
        crate::census::generate::partitions(n)
            .iter()
            .flat_map(standard_tableaux)
            .filter(|t| t.is_lm_protected(l, m))
            .collect()
    }

    fn check_protected(n: usize, l: usize, m: usize) {
        let all = protected_of_size(n, l, m);
        for k in l + 1..(l + n).saturating_sub(m) {
            let left: Vec<_> = all.iter().filter(|t| t.first_row_len() == k - 1).collect();
            let right: Vec<_> = all.iter().filter(|t| t.first_row_len() == k + 1).collect();
            let mut seen = HashSet::new();
            for a in &left {
                for b in &right {
                    let (u1, u2) = protected_inject(n, k, l, m, a, b).unwrap();
                    for (src, img) in [(a, &u1), (b, &u2)] {
                        assert_eq!(img.first_row_len(), k);
                        assert!(img.is_lm_protected(l, m), "{img}");
                        assert_eq!(
                            src.protected_decompose().unwrap().protected_rows(),
                            img.protected_decompose().unwrap().protected_rows()
                        );
                    }
                    assert!(seen.insert((u1, u2)), "collision at ({a}, {b})");
                }
            }
        }
    }

    #[test]
    fn protected_24_exhaustive() {
        for n in 4..=9 {
            check_protected(n, 2, 4);
        }
    }

    #[test]
    fn protected_11_exhaustive() {
        for n in 3..=10 {
            check_protected(n, 1, 1);
        }
    }

    #[test]
    fn protected_11_is_shifted_hook_map() {
        for n in 3..=8 {
            for k in 2..n {
                for a in hooks(n, k - 1) {
                    for b in hooks(n, k + 1) {
                        assert_eq!(
                            protected_inject(n, k, 1, 1, &a, &b).unwrap(),
                            hook_inject(n, k - 1, k + 1, &a, &b).unwrap()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn protected_rejects_unprotected() {
        // surplus 3 is smaller than the protected first-column entry 4
        let bad = t("1,2,3,6/4,5");
        assert!(!bad.is_lm_protected(2, 4));
        let good = t("1,2/3,4/5/6");
        assert!(good.is_lm_protected(2, 4));
        assert!(protected_inject(6, 3, 2, 4, &good, &bad).is_err());
        assert!(protected_inject(6, 3, 2, 5, &good, &bad).is_err());
    }

    #[test]
    fn lift_on_hook_permutations() {
        for n in 3..=6 {
            let perms = permutations(n);
            let by_k = |k: usize| -> Vec<&Permutation> {
                perms
                    .iter()
                    .filter(|p| p.lis_length().unwrap() == k && p.lds_length().unwrap() == n - k + 1)
                    .collect()
            };
            for k in 2..n {
                let mut seen = HashSet::new();
                for p1 in by_k(k - 1) {
                    for p2 in by_k(k + 1) {
                        let (w1, w2) = lift(|a, b| hook_inject(n, k - 1, k + 1, a, b), p1, p2).unwrap();
                        assert_eq!(w1.lis_length().unwrap(), k);
                        assert_eq!(w2.lds_length().unwrap(), n - k + 1);
                        assert!(seen.insert((w1, w2)));
                    }
                }
            }
        }
    }

    #[test]
    fn lift_reports_shape_mismatch() {
        // replaces one recording tableau by a column, breaking shape agreement
        let p1: Permutation = "2,3,1".parse().unwrap();
        let p2 = Permutation::identity(3);
        let odd = t("1,3/2");
        let inj = |a: &Tableau, b: &Tableau| {
            if a == &odd {
                Ok((Tableau::column_tableau(3), b.clone()))
            } else {
                Ok((a.clone(), b.clone()))
            }
        };
        assert!(matches!(lift(inj, &p1, &p2), Err(Error::Domain(_))));
        assert_eq!(lift(|a, b| Ok((a.clone(), b.clone())), &p1, &p2).unwrap(), (p1, p2));
    }
}
