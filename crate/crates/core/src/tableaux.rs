//! Standard Young tableaux, the Robinson–Schensted correspondence, hooks
//! and the protected-area decomposition.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::perm::Permutation;

/// An integer partition, stored as weakly decreasing positive row lengths.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Shape(Vec<usize>);

impl Shape {
    pub fn new(rows: Vec<usize>) -> Result<Self> {
        if rows.contains(&0) {
            return domain(format!("shape {rows:?} has an empty row"));
        }
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return domain(format!("shape {rows:?} is not weakly decreasing"));
        }
        Ok(Shape(rows))
    }

    pub fn rows(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn num_rows(&self) -> usize {
        self.0.len()
    }

    /// Length of row `i` (0-based), zero past the last row.
    pub fn row(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Shape {
        let cols = self.row(0);
        Shape((0..cols).map(|c| self.0.iter().filter(|&&r| r > c).count()).collect())
    }

    /// One row plus one column (a single box counts).
    pub fn is_hook(&self) -> bool {
        self.row(1) <= 1
    }

    /// Rows whose last box can be removed leaving a partition.
    pub fn corners(&self) -> Vec<usize> {
        (0..self.num_rows())
            .filter(|&i| self.row(i + 1) < self.row(i))
            .collect()
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, r) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, ")")
    }
}

/// Where the largest entry of a hook sits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum HookType {
    /// Bottom of the first column.
    Down,
    /// End of the first row.
    Right,
}

impl fmt::Display for HookType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HookType::Down => "↓",
            HookType::Right => "→",
        })
    }
}

/// A standard Young tableau, stored row by row.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    /// Validates shape, strict row/column increase and that the entries are
    /// exactly `1..=n`.
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        Shape::new(rows.iter().map(Vec::len).collect())?;
        let n: usize = rows.iter().map(Vec::len).sum();
        let mut seen = vec![false; n + 1];
        for row in &rows {
            for &v in row {
                let i = v as usize;
                if i == 0 || i > n || seen[i] {
                    return domain(format!("entries of {rows:?} are not 1..={n}"));
                }
                seen[i] = true;
            }
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return domain(format!("row {row:?} is not increasing"));
            }
        }
        for pair in rows.windows(2) {
            if pair[1].iter().zip(&pair[0]).any(|(below, above)| below <= above) {
                return domain(format!("columns of {rows:?} are not increasing"));
            }
        }
        Ok(Tableau { rows })
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<u32>>) -> Self {
        debug_assert!(Tableau::new(rows.clone()).is_ok(), "{rows:?}");
        Tableau { rows }
    }

    /// Single-row tableau `1 2 … n`.
    pub fn row_tableau(n: usize) -> Self {
        Tableau {
            rows: vec![(1..=n as u32).collect()],
        }
    }

    /// Single-column tableau `1/2/…/n`.
    pub fn column_tableau(n: usize) -> Self {
        Tableau {
            rows: (1..=n as u32).map(|v| vec![v]).collect(),
        }
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<u32>> {
        self.rows
    }

    pub fn shape(&self) -> Shape {
        Shape(self.rows.iter().map(Vec::len).collect())
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn first_row_len(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    pub fn first_row(&self) -> &[u32] {
        self.rows.first().map_or(&[], Vec::as_slice)
    }

    pub fn first_column(&self) -> Vec<u32> {
        self.rows.iter().map(|r| r[0]).collect()
    }

    /// 0-based (row, column) of entry `v`.
    pub fn position_of(&self, v: u32) -> Option<(usize, usize)> {
        self.rows
            .iter()
            .enumerate()
            .find_map(|(r, row)| row.iter().position(|&x| x == v).map(|c| (r, c)))
    }

    pub fn is_hook(&self) -> bool {
        self.rows.get(1).map_or(0, Vec::len) <= 1
    }

    pub fn hook_type(&self) -> Result<HookType> {
        if !self.is_hook() {
            return domain(format!("{self} is not a hook"));
        }
        let n = self.size();
        if n < 2 {
            return domain("hook type needs at least two boxes");
        }
        if self.num_rows() > 1 && self.rows[self.num_rows() - 1][0] == n as u32 {
            Ok(HookType::Down)
        } else {
            Ok(HookType::Right)
        }
    }

    /// Strips first-row and first-column boxes as far as possible while
    /// keeping a Ferrers diagram.
    pub fn protected_decompose(&self) -> Result<ProtectedDecomposition> {
        if self.rows.is_empty() {
            return domain("protected decomposition of the empty tableau");
        }
        // the first row can shrink to the second row's length, the first
        // column to the number of rows of length >= 2
        let keep_row = self.rows.get(1).map_or(0, Vec::len).max(1);
        let keep_col = self.rows.iter().filter(|r| r.len() >= 2).count().max(1);

        let mut protected: Vec<Vec<u32>> = Vec::with_capacity(keep_col);
        protected.push(self.rows[0][..keep_row].to_vec());
        protected.extend(self.rows[1..keep_col].iter().cloned());
        let eastern = self.rows[0][keep_row..].to_vec();
        let southern: Vec<u32> = self.rows[keep_col..].iter().map(|r| r[0]).collect();

        let m = protected.iter().map(Vec::len).sum();
        Ok(ProtectedDecomposition {
            protected_shape: Shape(protected.iter().map(Vec::len).collect()),
            l: keep_row,
            m,
            a: eastern.first().copied(),
            b: southern.first().copied(),
            c: protected[0][keep_row - 1],
            d: protected[keep_col - 1][0],
            eastern_surplus: eastern,
            southern_surplus: southern,
            protected,
        })
    }

    /// (l, m)-protected: the protected area has `m` boxes, `l` of them in
    /// the first row, and every surplus entry exceeds every entry of the
    /// protected area's first row and first column.
    pub fn is_lm_protected(&self, l: usize, m: usize) -> bool {
        match self.protected_decompose() {
            Ok(dec) => dec.l == l && dec.m == m && dec.surplus_dominates(),
            Err(_) => false,
        }
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str("/")?;
            }
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Tableau {
    type Err = Error;

    /// Rows separated by `/`, entries by `,`: `"1,3/2"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Tableau { rows: Vec::new() });
        }
        let rows = s
            .split('/')
            .map(|row| {
                row.split(',')
                    .map(|tok| {
                        tok.trim().parse::<u32>().map_err(|e| Error::Parse {
                            what: "tableau",
                            token: tok.to_string(),
                            reason: e.to_string(),
                        })
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Tableau::new(rows).map_err(|e| Error::Parse {
            what: "tableau",
            token: s.to_string(),
            reason: e.to_string(),
        })
    }
}

/// Split of a tableau into its protected area and the eastern/southern
/// surplus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProtectedDecomposition {
    pub protected_shape: Shape,
    /// Length of the protected area's first row.
    pub l: usize,
    /// Number of boxes in the protected area.
    pub m: usize,
    /// Entries removed from the first row, increasing.
    pub eastern_surplus: Vec<u32>,
    /// Entries removed from the first column, increasing.
    pub southern_surplus: Vec<u32>,
    /// Smallest eastern surplus entry.
    pub a: Option<u32>,
    /// Smallest southern surplus entry.
    pub b: Option<u32>,
    /// Last entry of the protected area's first row.
    pub c: u32,
    /// Last entry of the protected area's first column.
    pub d: u32,
    protected: Vec<Vec<u32>>,
}

impl ProtectedDecomposition {
    /// Rows of the protected area.
    pub fn protected_rows(&self) -> &[Vec<u32>] {
        &self.protected
    }

    /// All surplus entries, increasing.
    pub fn surplus(&self) -> Vec<u32> {
        let mut s: Vec<u32> = self
            .eastern_surplus
            .iter()
            .chain(&self.southern_surplus)
            .copied()
            .collect();
        s.sort_unstable();
        s
    }

    /// Every surplus entry exceeds every entry in the first row and first
    /// column of the protected area. Vacuous with no surplus.
    pub fn surplus_dominates(&self) -> bool {
        let bound = self.protected[0]
            .iter()
            .chain(self.protected.iter().map(|r| &r[0]))
            .max()
            .copied()
            .unwrap_or(0);
        self.eastern_surplus
            .iter()
            .chain(&self.southern_surplus)
            .all(|&v| v > bound)
    }

    /// `min(a, b) > max(c, d)` over whichever of `a`, `b` exist.
    pub fn corner_condition(&self) -> bool {
        match self.a.into_iter().chain(self.b).min() {
            Some(low) => low > self.c.max(self.d),
            None => true,
        }
    }

    /// Attaches the given surpluses to this protected area. The result is
    /// validated as a standard tableau.
    pub fn attach(&self, eastern: &[u32], southern: &[u32]) -> Result<Tableau> {
        let mut rows = self.protected.clone();
        rows[0].extend_from_slice(eastern);
        rows.extend(southern.iter().map(|&v| vec![v]));
        Tableau::new(rows)
    }

    /// Inverse of [`Tableau::protected_decompose`].
    pub fn reassemble(&self) -> Tableau {
        self.attach(&self.eastern_surplus, &self.southern_surplus)
            .expect("decomposition of a standard tableau reassembles")
    }
}

/// Row-insertion Robinson–Schensted: `p ↦ (P(p), Q(p))`.
pub fn rsk(p: &Permutation) -> Result<(Tableau, Tableau)> {
    if p.is_empty() {
        return domain("RSK of the empty permutation");
    }
    let mut prow: Vec<Vec<u32>> = Vec::new();
    let mut qrow: Vec<Vec<u32>> = Vec::new();
    for (i, &v) in p.word().iter().enumerate() {
        let mut x = v;
        let mut r = 0;
        loop {
            if r == prow.len() {
                prow.push(vec![x]);
                qrow.push(vec![i as u32 + 1]);
                break;
            }
            let row = &mut prow[r];
            let pos = row.partition_point(|&y| y < x);
            if pos == row.len() {
                row.push(x);
                qrow[r].push(i as u32 + 1);
                break;
            }
            std::mem::swap(&mut row[pos], &mut x);
            r += 1;
        }
    }
    Ok((Tableau::from_rows_unchecked(prow), Tableau::from_rows_unchecked(qrow)))
}

/// Reverse bumping: the permutation whose RSK pair is `(p, q)`.
pub fn rsk_inverse(p: &Tableau, q: &Tableau) -> Result<Permutation> {
    if p.shape() != q.shape() {
        return domain(format!(
            "tableaux {p} and {q} have different shapes {} and {}",
            p.shape(),
            q.shape()
        ));
    }
    let n = p.size();
    let mut row_of = vec![0usize; n + 1];
    for (r, row) in q.rows.iter().enumerate() {
        for &v in row {
            row_of[v as usize] = r;
        }
    }
    let mut rows = p.rows.clone();
    let mut word = vec![0u32; n];
    for t in (1..=n).rev() {
        let r = row_of[t];
        let mut x = rows[r].pop().expect("recording tableau entry sits at a row end");
        for rr in (0..r).rev() {
            let row = &mut rows[rr];
            let pos = row.partition_point(|&y| y < x) - 1;
            std::mem::swap(&mut row[pos], &mut x);
        }
        if rows[r].is_empty() {
            rows.pop();
        }
        word[t - 1] = x;
    }
    Ok(Permutation::from_word_unchecked(word))
}
