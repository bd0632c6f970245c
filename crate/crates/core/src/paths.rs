//! East/North lattice paths that never rise above the diagonal, their
//! bijection with tableaux of at most two rows, and the tail-exchange
//! ("flip") injection `L(n,k) × L(n,k+2) → L(n,k+1)²`.

use std::fmt;
use std::str::FromStr;

use crate::error::{domain, Error, Result};
use crate::tableaux::Tableau;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    East,
    North,
}

/// A path from the origin with every prefix having at most as many North
/// steps as East steps.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePath {
    steps: Vec<Step>,
}

impl LatticePath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut height: i64 = 0;
        for (i, s) in steps.iter().enumerate() {
            height += match s {
                Step::East => 1,
                Step::North => -1,
            };
            if height < 0 {
                return domain(format!("step {} of the path rises above the diagonal", i + 1));
            }
        }
        Ok(LatticePath { steps })
    }

    pub fn all_east(n: usize) -> Self {
        LatticePath {
            steps: vec![Step::East; n],
        }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Number of East steps, i.e. the x-coordinate of the endpoint.
    pub fn east_count(&self) -> usize {
        self.steps.iter().filter(|&&s| s == Step::East).count()
    }

    pub fn endpoint(&self) -> (usize, usize) {
        let k = self.east_count();
        (k, self.len() - k)
    }

    /// Lattice points visited, starting with the origin.
    pub fn points(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.len() + 1);
        let (mut x, mut y) = (0, 0);
        out.push((x, y));
        for s in &self.steps {
            match s {
                Step::East => x += 1,
                Step::North => y += 1,
            }
            out.push((x, y));
        }
        out
    }

    /// East-step counts after each prefix, `0..=n`.
    fn east_prefix(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.len() + 1);
        let mut e = 0;
        out.push(0);
        for s in &self.steps {
            if *s == Step::East {
                e += 1;
            }
            out.push(e);
        }
        out
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(match s {
                Step::East => "E",
                Step::North => "N",
            })?;
        }
        Ok(())
    }
}

impl FromStr for LatticePath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .trim()
            .chars()
            .map(|c| match c {
                'E' | 'e' => Ok(Step::East),
                'N' | 'n' => Ok(Step::North),
                other => Err(Error::Parse {
                    what: "lattice path",
                    token: other.to_string(),
                    reason: "steps must be E or N".into(),
                }),
            })
            .collect::<Result<Vec<_>>>()?;
        LatticePath::new(steps).map_err(|e| Error::Parse {
            what: "lattice path",
            token: s.trim().to_string(),
            reason: e.to_string(),
        })
    }
}

/// Step `t` is East iff `t` lies in the first row.
pub fn tableau_to_path(t: &Tableau) -> Result<LatticePath> {
    if t.num_rows() > 2 {
        return domain(format!("{t} has more than two rows"));
    }
    let mut steps = vec![Step::North; t.size()];
    for &v in t.first_row() {
        steps[v as usize - 1] = Step::East;
    }
    Ok(LatticePath { steps })
}

/// East positions form the first row, North positions the second.
pub fn path_to_tableau(path: &LatticePath) -> Tableau {
    let mut first = Vec::new();
    let mut second = Vec::new();
    for (i, s) in path.steps.iter().enumerate() {
        match s {
            Step::East => first.push(i as u32 + 1),
            Step::North => second.push(i as u32 + 1),
        }
    }
    let mut rows = Vec::new();
    if !first.is_empty() {
        rows.push(first);
    }
    if !second.is_empty() {
        rows.push(second);
    }
    Tableau::from_rows_unchecked(rows)
}

/// All paths of `L(n, k)`: `n` steps, `k` of them East, never above the
/// diagonal. Lexicographic with East < North.
pub fn paths(n: usize, k: usize) -> Vec<LatticePath> {
    fn go(n: usize, k: usize, steps: &mut Vec<Step>, e: usize, out: &mut Vec<LatticePath>) {
        let t = steps.len();
        if t == n {
            out.push(LatticePath { steps: steps.clone() });
            return;
        }
        let north = t - e;
        if e < k {
            steps.push(Step::East);
            go(n, k, steps, e + 1, out);
            steps.pop();
        }
        if north < n - k && north < e {
            steps.push(Step::North);
            go(n, k, steps, e, out);
            steps.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n && n - k <= k {
        go(n, k, &mut Vec::with_capacity(n), 0, &mut out);
    }
    out
}

/// Index of the last point shared by `low` translated by `(1, -1)` and
/// `high`. Both paths have the same length, so shared points are reached
/// after the same number of steps.
fn last_meeting(low: &LatticePath, high: &LatticePath) -> Option<usize> {
    let a = low.east_prefix();
    let b = high.east_prefix();
    (0..a.len()).rev().find(|&t| a[t] + 1 == b[t])
}

fn splice(head: &LatticePath, tail: &LatticePath, at: usize) -> Vec<Step> {
    head.steps[..at].iter().chain(&tail.steps[at..]).copied().collect()
}

/// Translates `p` by `(1, -1)`, cuts it and `q` at their last common point
/// and exchanges the tails. The first output is translated back to start
/// at the origin.
///
/// Requires `p ∈ L(n,k)`, `q ∈ L(n,k+2)` with `n - k <= k <= n - 2`.
pub fn flip_inject(p: &LatticePath, q: &LatticePath) -> Result<(LatticePath, LatticePath)> {
    let n = p.len();
    if q.len() != n {
        return domain(format!("paths {p} and {q} have different lengths"));
    }
    let k = p.east_count();
    if q.east_count() != k + 2 {
        return domain(format!(
            "second path must end two columns right of the first ({p} ends at x = {k}, {q} at x = {})",
            q.east_count()
        ));
    }
    if n - k > k || k + 2 > n {
        return domain(format!("need n - k <= k <= n - 2, got n = {n}, k = {k}"));
    }
    // the translated p starts east of q and ends west of it
    let x = last_meeting(p, q).expect("translated paths cross");
    debug_assert!(x > 0 && x < n);
    let r = LatticePath::new(splice(p, q, x))?;
    let s = LatticePath::new(splice(q, p, x))?;
    Ok((r, s))
}

/// The unique `(p, q)` with `flip_inject(p, q) == (r, s)`, if any.
pub fn flip_preimage(r: &LatticePath, s: &LatticePath) -> Option<(LatticePath, LatticePath)> {
    if r.len() != s.len() {
        return None;
    }
    let x = last_meeting(r, s)?;
    if x == 0 || x == r.len() {
        return None;
    }
    let p = LatticePath::new(splice(r, s, x)).ok()?;
    let q = LatticePath::new(splice(s, r, x)).ok()?;
    match flip_inject(&p, &q) {
        Ok((rr, ss)) if &rr == r && &ss == s => Some((p, q)),
        _ => None,
    }
}

/// The flip injection read through the tableau–path bijection, acting on
/// pairs of tableaux with at most two rows.
pub fn flip_inject_tableaux(t1: &Tableau, t2: &Tableau) -> Result<(Tableau, Tableau)> {
    let (r, s) = flip_inject(&tableau_to_path(t1)?, &tableau_to_path(t2)?)?;
    Ok((path_to_tableau(&r), path_to_tableau(&s)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::census::generate::all_tableaux;
    use std::collections::HashSet;

    fn path(s: &str) -> LatticePath {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_validate() {
        assert_eq!(path("EENENNE").to_string(), "EENENNE");
        assert!("NE".parse::<LatticePath>().is_err());
        assert!("EXN".parse::<LatticePath>().is_err());
        assert_eq!(path("EENENNE").endpoint(), (4, 3));
    }

    #[test]
    fn tableau_path_examples() {
        let row: Tableau = "1,2,3,4,5".parse().unwrap();
        assert_eq!(tableau_to_path(&row).unwrap(), LatticePath::all_east(5));
        let fig: Tableau = "1,3,4,5,6,7/2".parse().unwrap();
        assert_eq!(tableau_to_path(&fig).unwrap(), path("ENEEEEE"));
        assert_eq!(path_to_tableau(&path("ENEEEEE")), fig);
        assert_eq!(path_to_tableau(&LatticePath::all_east(5)), row);
        let small: Tableau = "1,2,4/3,5".parse().unwrap();
        assert_eq!(path_to_tableau(&tableau_to_path(&small).unwrap()), small);
        assert!(tableau_to_path(&"1/2/3".parse().unwrap()).is_err());
    }

    #[test]
    fn bijection_with_two_row_tableaux() {
        for n in 1..=10 {
            let two_row: Vec<Tableau> = all_tableaux(n).into_iter().filter(|t| t.num_rows() <= 2).collect();
            let mut count = 0;
            for k in 0..=n {
                for pth in paths(n, k) {
                    let t = path_to_tableau(&pth);
                    assert!(two_row.contains(&t));
                    assert_eq!(tableau_to_path(&t).unwrap(), pth);
                    count += 1;
                }
            }
            assert_eq!(count, two_row.len());
        }
    }

    #[test]
    fn worked_flip_example() {
        let (r, s) = flip_inject(&path("EENENNE"), &path("ENEEEEE")).unwrap();
        assert_eq!(r, path("EENENEE"));
        assert_eq!(s, path("ENEEENE"));
        assert_eq!(r.endpoint(), (5, 2));
        assert_eq!(s.endpoint(), (5, 2));
        assert_eq!(last_meeting(&path("EENENNE"), &path("ENEEEEE")), Some(5));
        assert_eq!(
            flip_preimage(&r, &s),
            Some((path("EENENNE"), path("ENEEEEE")))
        );
    }

    #[test]
    fn smallest_case() {
        let (r, s) = flip_inject(&path("ENEN"), &path("EEEE")).unwrap();
        assert_eq!(r.east_count(), 3);
        assert_eq!(s.east_count(), 3);
        assert_eq!(flip_preimage(&r, &s), Some((path("ENEN"), path("EEEE"))));
    }

    #[test]
    fn flip_rejects_bad_domain() {
        assert!(flip_inject(&path("EEEE"), &path("EEEE")).is_err());
        assert!(flip_inject(&path("EEE"), &path("EEEE")).is_err());
        // k = n - 1 has no partner in L(n, k + 2)
        assert!(flip_inject(&path("EEEN"), &path("EEEEE")).is_err());
    }

    #[test]
    fn all_east_has_no_preimage() {
        assert_eq!(flip_preimage(&LatticePath::all_east(6), &LatticePath::all_east(6)), None);
    }

    #[test]
    fn flip_is_injective_and_inverted_exhaustively() {
        for n in 4..=12usize {
            for k in n.div_ceil(2)..=n - 2 {
                let mut images = HashSet::new();
                for p in paths(n, k) {
                    for q in paths(n, k + 2) {
                        let (r, s) = flip_inject(&p, &q).unwrap();
                        assert_eq!(r.east_count(), k + 1);
                        assert_eq!(s.east_count(), k + 1);
                        assert_eq!(flip_preimage(&r, &s), Some((p.clone(), q.clone())));
                        assert!(images.insert((r, s)));
                    }
                }
            }
        }
    }

    #[test]
    fn preimage_only_for_image() {
        for n in 4..=9usize {
            for k in n.div_ceil(2)..=n - 2 {
                let image: HashSet<_> = paths(n, k)
                    .iter()
                    .flat_map(|p| paths(n, k + 2).into_iter().map(move |q| flip_inject(p, &q).unwrap()))
                    .collect();
                for r in paths(n, k + 1) {
                    for s in paths(n, k + 1) {
                        let pre = flip_preimage(&r, &s);
                        assert_eq!(pre.is_some(), image.contains(&(r.clone(), s.clone())));
                    }
                }
            }
        }
    }
}
