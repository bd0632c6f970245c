//! Generators for the permutation and tableau families.

use crate::injections::hook_from_parts;
use crate::perm::{next_permutation, Permutation};
use crate::tableaux::{Shape, Tableau};

/// Number of prefix shards for `S_n`: one per choice of the first two
/// entries (one per first entry when `n = 1`).
pub fn permutation_shards(n: usize) -> usize {
    match n {
        0 => 0,
        1 => 1,
        _ => n * (n - 1),
    }
}

/// Lexicographic walk over the permutations of `S_n` that share the
/// prefix of one shard.
pub struct ShardPermutations {
    word: Vec<u32>,
    fixed: usize,
    started: bool,
    done: bool,
}

impl ShardPermutations {
    pub fn new(n: usize, shard: usize) -> Self {
        assert!(shard < permutation_shards(n), "shard {shard} out of range for n = {n}");
        let mut rest: Vec<u32> = (1..=n as u32).collect();
        let mut word = Vec::with_capacity(n);
        let fixed = n.min(2);
        if n == 1 {
            word.push(rest.remove(0));
        } else {
            word.push(rest.remove(shard / (n - 1)));
            word.push(rest.remove(shard % (n - 1)));
        }
        word.extend(rest);
        ShardPermutations {
            word,
            fixed,
            started: false,
            done: false,
        }
    }

    /// Next word of the shard, borrowed without allocating.
    pub fn advance(&mut self) -> Option<&[u32]> {
        if self.done {
            return None;
        }
        if self.started && !next_permutation(&mut self.word[self.fixed..]) {
            self.done = true;
            return None;
        }
        self.started = true;
        Some(&self.word)
    }
}

impl Iterator for ShardPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        self.advance().map(|w| Permutation::from_word_unchecked(w.to_vec()))
    }
}

/// All of `S_n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Permutation> {
    (0..permutation_shards(n))
        .flat_map(|s| ShardPermutations::new(n, s))
        .collect()
}

/// Involutions of length `n` with `σ(1) = first`, as words.
pub fn involutions_with_first(n: usize, first: u32) -> Vec<Vec<u32>> {
    fn go(word: &mut Vec<u32>, free: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        let Some(&a) = free.first() else {
            out.push(word.clone());
            return;
        };
        free.remove(0);
        word[a as usize - 1] = a;
        go(word, free, out);
        for i in 0..free.len() {
            let b = free.remove(i);
            word[a as usize - 1] = b;
            word[b as usize - 1] = a;
            go(word, free, out);
            free.insert(i, b);
        }
        free.insert(0, a);
    }
    assert!(first >= 1 && first as usize <= n);
    let mut word = vec![0; n];
    word[0] = first;
    word[first as usize - 1] = 1;
    let mut free: Vec<u32> = (2..=n as u32).filter(|&v| v != first).collect();
    let mut out = Vec::new();
    go(&mut word, &mut free, &mut out);
    out
}

pub fn involutions(n: usize) -> Vec<Permutation> {
    (1..=n as u32)
        .flat_map(|f| involutions_with_first(n, f))
        .map(Permutation::from_word_unchecked)
        .collect()
}

/// Partitions of `n`, largest first part first.
pub fn partitions(n: usize) -> Vec<Shape> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Shape>) {
        if rest == 0 {
            out.push(Shape::new(cur.clone()).unwrap());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            cur.push(part);
            go(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Every standard tableau of the given shape.
pub fn standard_tableaux(shape: &Shape) -> Vec<Tableau> {
    fn go(shape: &[usize], rows: &mut Vec<Vec<u32>>, v: u32, n: u32, out: &mut Vec<Tableau>) {
        if v > n {
            out.push(Tableau::from_rows_unchecked(rows.clone()));
            return;
        }
        for i in 0..shape.len() {
            let len = rows[i].len();
            if len < shape[i] && (i == 0 || rows[i - 1].len() > len) {
                rows[i].push(v);
                go(shape, rows, v + 1, n, out);
                rows[i].pop();
            }
        }
    }
    let mut out = Vec::new();
    let mut rows = vec![Vec::new(); shape.num_rows()];
    go(shape.rows(), &mut rows, 1, shape.size() as u32, &mut out);
    out
}

/// Every standard tableau with `n` boxes.
pub fn all_tableaux(n: usize) -> Vec<Tableau> {
    partitions(n).iter().flat_map(standard_tableaux).collect()
}

/// `H(n, k)` in lexicographic order of the first-row entry set.
pub fn hooks(n: usize, k: usize) -> Vec<Tableau> {
    fn go(n: u32, need: usize, from: u32, row: &mut Vec<u32>, out: &mut Vec<Tableau>) {
        if need == 0 {
            let col: Vec<u32> = (2..=n).filter(|v| !row.contains(v)).collect();
            out.push(hook_from_parts(row, &col));
            return;
        }
        for v in from..=n {
            if ((n - v + 1) as usize) < need {
                break;
            }
            row.push(v);
            go(n, need - 1, v + 1, row, out);
            row.pop();
        }
    }
    let mut out = Vec::new();
    if n >= 1 && k >= 1 && k <= n {
        go(n as u32, k - 1, 2, &mut Vec::new(), &mut out);
    }
    out
}
