//! Exhaustive harnesses: run an injection over its full domain, and compare
//! closed forms against enumeration.

use std::collections::HashSet;
use std::fmt;
use std::hash::Hash;

use serde::Serialize;

use super::formulas::{closed_form, closed_form_total, two_row_count};
use super::generate::{hooks, standard_tableaux};
use super::{enumerate, sequence, Budget, ClassLabel, Member};
use crate::error::{domain, Error, Result};
use crate::injections::{hook_inject, lift, pair_type, protected_inject};
use crate::par::{self, Execution};
use crate::paths::{flip_inject, flip_preimage, paths, LatticePath};
use crate::perm::Permutation;
use crate::tableaux::{Shape, Tableau};

const MAX_COUNTEREXAMPLES: usize = 10;

/// Which injection to exercise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum InjectionKind {
    /// `H(n,k) × H(n,l) → H(n,k+1) × H(n,l-1)`; `l` defaults to `k + 2`.
    Hook { l: Option<usize> },
    /// `P(n,k-1) × P(n,k+1) → P(n,k)²` on (l, m)-protected tableaux.
    Protected { l: usize, m: usize },
    /// `L(n,k) × L(n,k+2) → L(n,k+1)²` on lattice paths.
    Flip,
    /// The hook injection lifted to permutations with hook RS shape.
    LiftHook,
    /// The flip injection lifted to 321-avoiding permutations.
    LiftTwoRow,
}

impl InjectionKind {
    /// Values of `k` for which the injection is defined at size `n`.
    pub fn valid_ks(&self, n: usize) -> Vec<usize> {
        let needs_three = matches!(self, InjectionKind::Hook { .. } | InjectionKind::LiftHook);
        if needs_three && n < 3 {
            return Vec::new();
        }
        match *self {
            InjectionKind::Hook { l: None } => (1..=n - 2).collect(),
            InjectionKind::Hook { l: Some(l) } if l <= n => (1..=l.saturating_sub(2)).collect(),
            InjectionKind::Hook { .. } => Vec::new(),
            InjectionKind::Protected { l, m } => (l + 1..(l + n).saturating_sub(m)).collect(),
            InjectionKind::Flip => (n.div_ceil(2)..=n.saturating_sub(2)).collect(),
            InjectionKind::LiftHook => (2..n).collect(),
            InjectionKind::LiftTwoRow => (n.div_ceil(2) + 1..n).collect(),
        }
    }
}

impl fmt::Display for InjectionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InjectionKind::Hook { l: None } => write!(f, "hook"),
            InjectionKind::Hook { l: Some(l) } => write!(f, "hook(l={l})"),
            InjectionKind::Protected { l, m } => write!(f, "protected({l},{m})"),
            InjectionKind::Flip => write!(f, "flip"),
            InjectionKind::LiftHook => write!(f, "lift-hook"),
            InjectionKind::LiftTwoRow => write!(f, "lift-two-row"),
        }
    }
}

/// Result of one exhaustive run at fixed `(n, k)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InjectionReport {
    pub kind: String,
    pub n: usize,
    pub k: usize,
    pub domain_size: usize,
    pub distinct_images: usize,
    pub injective: bool,
    pub codomain_ok: bool,
    /// Only meaningful for the type-preserving hook map.
    pub type_preserved: Option<bool>,
    pub counterexamples: Vec<String>,
    pub holds: bool,
}

struct Tally<O> {
    images: HashSet<O>,
    domain: usize,
    codomain_ok: bool,
    type_ok: Option<bool>,
    counterexamples: Vec<String>,
}

impl<O: Eq + Hash> Tally<O> {
    fn new(track_type: bool) -> Self {
        Tally {
            images: HashSet::new(),
            domain: 0,
            codomain_ok: true,
            type_ok: track_type.then_some(true),
            counterexamples: Vec::new(),
        }
    }

    fn note(&mut self, msg: String) {
        if self.counterexamples.len() < MAX_COUNTEREXAMPLES {
            self.counterexamples.push(msg);
        }
    }

    fn report(self, kind: InjectionKind, n: usize, k: usize) -> InjectionReport {
        let injective = self.images.len() == self.domain;
        let holds = injective && self.codomain_ok && self.type_ok.unwrap_or(true);
        InjectionReport {
            kind: kind.to_string(),
            n,
            k,
            domain_size: self.domain,
            distinct_images: self.images.len(),
            injective,
            codomain_ok: self.codomain_ok,
            type_preserved: self.type_ok,
            counterexamples: self.counterexamples,
            holds,
        }
    }
}

/// One application: the image, whether it is in the codomain, whether the
/// type was kept, and a description for the report.
struct Outcome<O> {
    input: String,
    image: Result<O>,
    in_codomain: bool,
    type_kept: bool,
}

/// Applies `f` to every pair of `left × right`, fanning out over `left`.
#[allow(clippy::too_many_arguments)]
fn run<A, B, O, F>(
    kind: InjectionKind,
    n: usize,
    k: usize,
    left: &[A],
    right: &[B],
    track_type: bool,
    exec: Execution,
    f: F,
) -> InjectionReport
where
    A: Sync,
    B: Sync,
    O: Eq + Hash + Send + fmt::Debug,
    F: Fn(&A, &B) -> Outcome<O> + Sync + Send,
{
    let chunks = par::map_collect(exec, left, |a| right.iter().map(|b| f(a, b)).collect::<Vec<_>>());
    let mut tally = Tally::new(track_type);
    for outcome in chunks.into_iter().flatten() {
        tally.domain += 1;
        match outcome.image {
            Err(e) => {
                tally.codomain_ok = false;
                tally.note(format!("{} -> error: {e}", outcome.input));
            }
            Ok(img) => {
                if !outcome.in_codomain {
                    tally.codomain_ok = false;
                    tally.note(format!("{} -> {img:?} outside codomain", outcome.input));
                }
                if !outcome.type_kept {
                    tally.type_ok = Some(false);
                    tally.note(format!("{} -> {img:?} changes pair type", outcome.input));
                }
                let desc = format!("{} -> {img:?}", outcome.input);
                if !tally.images.insert(img) {
                    tally.note(format!("{desc} collides with an earlier image"));
                }
            }
        }
    }
    tally.report(kind, n, k)
}

fn in_hooks(t: &Tableau, n: usize, k: usize) -> bool {
    t.is_hook() && t.size() == n && t.first_row_len() == k
}

fn protected_by_k(n: usize, l: usize, m: usize, budget: &Budget) -> Result<Vec<Vec<Tableau>>> {
    let mut by_k = vec![Vec::new(); n + 2];
    for member in enumerate(ClassLabel::Protected { l, m }, n, budget)? {
        if let Member::Tableau(t) = member {
            by_k[t.first_row_len()].push(t);
        }
    }
    Ok(by_k)
}

fn perms_by_k(label: ClassLabel, n: usize, budget: &Budget) -> Result<Vec<Vec<Permutation>>> {
    let mut by_k = vec![Vec::new(); n + 2];
    for member in enumerate(label, n, budget)? {
        if let Member::Permutation(p) = member {
            by_k[crate::perm::lis_len(p.word())].push(p);
        }
    }
    Ok(by_k)
}

/// Exhaustive injectivity / codomain check of `kind` at size `n`, for one
/// `k` or for every valid `k`.
pub fn verify_injection(
    kind: InjectionKind,
    n: usize,
    k: Option<usize>,
    budget: &Budget,
    exec: Execution,
) -> Result<Vec<InjectionReport>> {
    let valid = kind.valid_ks(n);
    let ks = match k {
        Some(k) if valid.contains(&k) => vec![k],
        Some(k) => return domain(format!("{kind} is not defined at n = {n}, k = {k}; valid k: {valid:?}")),
        None => valid,
    };
    match kind {
        InjectionKind::Hook { l } => {
            budget.check(ClassLabel::Hooks, n)?;
            Ok(ks
                .into_iter()
                .map(|k| {
                    let l = l.unwrap_or(k + 2);
                    let preserve = l == k + 2;
                    run(kind, n, k, &hooks(n, k), &hooks(n, l), preserve, exec, |t1, t2| {
                        let image = hook_inject(n, k, l, t1, t2);
                        let (in_codomain, type_kept) = match &image {
                            Ok((u1, u2)) => (
                                in_hooks(u1, n, k + 1) && in_hooks(u2, n, l - 1),
                                !preserve || pair_type(t1, t2).ok() == pair_type(u1, u2).ok(),
                            ),
                            Err(_) => (false, true),
                        };
                        Outcome {
                            input: format!("({t1}, {t2})"),
                            image,
                            in_codomain,
                            type_kept,
                        }
                    })
                })
                .collect())
        }
        InjectionKind::Protected { l, m } => {
            let by_k = protected_by_k(n, l, m, budget)?;
            Ok(ks
                .into_iter()
                .map(|k| {
                    run(kind, n, k, &by_k[k - 1], &by_k[k + 1], false, exec, |t1, t2| {
                        let image = protected_inject(n, k, l, m, t1, t2);
                        let in_codomain = match &image {
                            Ok((u1, u2)) => [(t1, u1), (t2, u2)].iter().all(|(t, u)| {
                                u.size() == n
                                    && u.first_row_len() == k
                                    && u.is_lm_protected(l, m)
                                    && same_protected_area(t, u)
                            }),
                            Err(_) => false,
                        };
                        Outcome {
                            input: format!("({t1}, {t2})"),
                            image,
                            in_codomain,
                            type_kept: true,
                        }
                    })
                })
                .collect())
        }
        InjectionKind::Flip => {
            budget.check(ClassLabel::TwoRowInvolutions, n)?;
            Ok(ks
                .into_iter()
                .map(|k| {
                    run(kind, n, k, &paths(n, k), &paths(n, k + 2), false, exec, |p, q| {
                        let image = flip_inject(p, q);
                        let in_codomain = match &image {
                            Ok((r, s)) => {
                                in_paths(r, n, k + 1)
                                    && in_paths(s, n, k + 1)
                                    && flip_preimage(r, s).as_ref() == Some(&(p.clone(), q.clone()))
                            }
                            Err(_) => false,
                        };
                        Outcome {
                            input: format!("({p}, {q})"),
                            image,
                            in_codomain,
                            type_kept: true,
                        }
                    })
                })
                .collect())
        }
        InjectionKind::LiftHook | InjectionKind::LiftTwoRow => {
            let label = if kind == InjectionKind::LiftHook {
                ClassLabel::HookPairPermutations
            } else {
                ClassLabel::Avoid321Permutations
            };
            let by_k = perms_by_k(label, n, budget)?;
            Ok(ks
                .into_iter()
                .map(|k| {
                    let inj = |t1: &Tableau, t2: &Tableau| {
                        if kind == InjectionKind::LiftHook {
                            hook_inject(n, k - 1, k + 1, t1, t2)
                        } else {
                            crate::paths::flip_inject_tableaux(t1, t2)
                        }
                    };
                    run(kind, n, k, &by_k[k - 1], &by_k[k + 1], false, exec, |p1, p2| {
                        let image = lift(inj, p1, p2);
                        let in_codomain = match &image {
                            Ok((w1, w2)) => [w1, w2].iter().all(|w| {
                                crate::perm::lis_len(w.word()) == k && in_class(label, w)
                            }),
                            Err(_) => false,
                        };
                        Outcome {
                            input: format!("({p1}, {p2})"),
                            image: image.map(|(a, b)| (a.into_word(), b.into_word())),
                            in_codomain,
                            type_kept: true,
                        }
                    })
                })
                .collect())
        }
    }
}

fn in_paths(p: &LatticePath, n: usize, k: usize) -> bool {
    p.len() == n && p.east_count() == k && LatticePath::new(p.steps().to_vec()).is_ok()
}

fn in_class(label: ClassLabel, w: &Permutation) -> bool {
    let (lis, lds) = (crate::perm::lis_len(w.word()), crate::perm::lds_len(w.word()));
    match label {
        ClassLabel::HookPairPermutations => lds == w.len() + 1 - lis,
        ClassLabel::Avoid321Permutations => lds <= 2,
        _ => true,
    }
}

fn same_protected_area(t: &Tableau, u: &Tableau) -> bool {
    match (t.protected_decompose(), u.protected_decompose()) {
        (Ok(a), Ok(b)) => a.protected_rows() == b.protected_rows(),
        _ => false,
    }
}

/// One closed form compared with an independent count.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FormulaCheck {
    /// What was compared, e.g. `"a vs two-row SYT"`.
    pub what: String,
    pub n: usize,
    /// `None` for whole-class totals.
    pub k: Option<usize>,
    pub closed_form: u128,
    pub counted: u128,
    pub agrees: bool,
}

impl FormulaCheck {
    fn new(what: &str, n: usize, k: Option<usize>, closed_form: u128, counted: u128) -> Self {
        FormulaCheck {
            what: what.to_string(),
            n,
            k,
            closed_form,
            counted,
            agrees: closed_form == counted,
        }
    }
}

/// Largest `n` each comparison is run to by default, capped by the budget.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FormulaLimits {
    pub hooks: usize,
    pub two_row_tableaux: usize,
    pub two_row_involutions: usize,
    pub skew_merged: usize,
    pub protected: usize,
    pub hook_pairs: usize,
}

impl Default for FormulaLimits {
    fn default() -> Self {
        FormulaLimits {
            hooks: 15,
            two_row_tableaux: 14,
            two_row_involutions: 12,
            skew_merged: 11,
            protected: 14,
            hook_pairs: 8,
        }
    }
}

impl FormulaLimits {
    /// Every limit set to `n`.
    pub fn uniform(n: usize) -> Self {
        FormulaLimits {
            hooks: n,
            two_row_tableaux: n,
            two_row_involutions: n,
            skew_merged: n,
            protected: n,
            hook_pairs: n,
        }
    }
}

fn per_k(what: &str, label: ClassLabel, n: usize, counted: &super::ClassSequence, out: &mut Vec<FormulaCheck>) -> Result<()> {
    for (k, c) in counted.iter() {
        out.push(FormulaCheck::new(what, n, Some(k), closed_form(label, n, k)?, c));
    }
    Ok(())
}

/// Compares every closed form with enumeration for `1 <= n <= limit`, each
/// limit further capped by `budget`.
pub fn verify_formulas(limits: FormulaLimits, budget: &Budget, exec: Execution) -> Result<Vec<FormulaCheck>> {
    let mut out = Vec::new();
    let cap_tab = budget.max_tableau_n;
    let cap_inv = budget.max_involution_n;
    let cap_perm = budget.max_permutation_n;

    for n in 1..=limits.hooks.min(cap_tab) {
        let counted = sequence(ClassLabel::Hooks, n, budget, exec)?;
        per_k("h vs hook SYT", ClassLabel::Hooks, n, &counted, &mut out)?;
    }
    for n in 1..=limits.two_row_tableaux.min(cap_tab) {
        for k in n.div_ceil(2)..=n {
            let shape = Shape::new(if k == n { vec![n] } else { vec![k, n - k] })?;
            let counted = standard_tableaux(&shape).len() as u128;
            out.push(FormulaCheck::new("a vs two-row SYT", n, Some(k), two_row_count(n, k)?, counted));
        }
    }
    for n in 1..=limits.two_row_involutions.min(cap_inv) {
        let counted = sequence(ClassLabel::TwoRowInvolutions, n, budget, exec)?;
        per_k("a vs 321-avoiding involutions", ClassLabel::TwoRowInvolutions, n, &counted, &mut out)?;
    }
    for n in 1..=limits.skew_merged.min(cap_inv) {
        let counted = sequence(ClassLabel::SkewMergedInvolutions, n, budget, exec)?;
        per_k("sm vs skew-merged involutions", ClassLabel::SkewMergedInvolutions, n, &counted, &mut out)?;
        out.push(FormulaCheck::new(
            "sm total",
            n,
            None,
            closed_form_total(ClassLabel::SkewMergedInvolutions, n)?,
            counted.total()?,
        ));
    }
    for n in 4..=limits.protected.min(cap_tab) {
        for (what, label) in [
            ("p_n vs (2,4)-protected SYT", ClassLabel::Protected24Tableaux),
            ("b_n vs hook-plus-box SYT", ClassLabel::HookPlusBoxTableaux),
        ] {
            let counted = sequence(label, n, budget, exec)?.total()?;
            out.push(FormulaCheck::new(what, n, None, closed_form_total(label, n)?, counted));
        }
    }
    for n in 1..=limits.hook_pairs.min(cap_perm) {
        let counted = sequence(ClassLabel::HookPairPermutations, n, budget, exec)?;
        per_k("m vs hook-pair permutations", ClassLabel::HookPairPermutations, n, &counted, &mut out)?;
    }
    if out.is_empty() {
        return Err(Error::Domain("no comparison fits the given limits".into()));
    }
    Ok(out)
}
