//! Exact closed forms for the classes that have one.

use super::ClassLabel;
use crate::error::{Error, Result};
use crate::injections::{binomial, hook_count};

fn pow2(e: usize) -> Result<u128> {
    1u128.checked_shl(e as u32).filter(|_| e < 128).ok_or(Error::Overflow)
}

/// Two-row SYT of shape `(k, n - k)`: `C(n,k)(2k - n + 1)/(k + 1)`, zero
/// outside `⌈n/2⌉ <= k <= n`.
pub fn two_row_count(n: usize, k: usize) -> Result<u128> {
    if k > n || 2 * k < n {
        return Ok(0);
    }
    let num = binomial(n, k)
        .checked_mul((2 * k + 1 - n) as u128)
        .ok_or(Error::Overflow)?;
    let den = (k + 1) as u128;
    debug_assert_eq!(num % den, 0, "ballot numbers are integers");
    Ok(num / den)
}

/// Count of `label` at `(n, k)` from its closed form. Outside the class's
/// support the count is zero.
pub fn closed_form(label: ClassLabel, n: usize, k: usize) -> Result<u128> {
    match label {
        ClassLabel::Hooks | ClassLabel::SkewMergedInvolutions => Ok(hook_count(n, k)),
        ClassLabel::HookPairPermutations => hook_count(n, k).checked_mul(hook_count(n, k)).ok_or(Error::Overflow),
        ClassLabel::TwoRowInvolutions => two_row_count(n, k),
        ClassLabel::Avoid321Permutations => {
            let a = two_row_count(n, k)?;
            a.checked_mul(a).ok_or(Error::Overflow)
        }
        other => Err(Error::NoClosedForm(format!("{other} at fixed k"))),
    }
}

/// `(n - 3)·2^(n-3)` for `n >= 4`, else 0.
pub fn protected24_total(n: usize) -> Result<u128> {
    if n < 4 {
        return Ok(0);
    }
    ((n - 3) as u128).checked_mul(pow2(n - 3)?).ok_or(Error::Overflow)
}

/// `(n - 4)·2^(n-2) + 2` for `n >= 4`, else 0.
pub fn hook_plus_box_total(n: usize) -> Result<u128> {
    if n < 4 {
        return Ok(0);
    }
    ((n - 4) as u128)
        .checked_mul(pow2(n - 2)?)
        .and_then(|x| x.checked_add(2))
        .ok_or(Error::Overflow)
}

/// Size of the whole class at `n`.
pub fn closed_form_total(label: ClassLabel, n: usize) -> Result<u128> {
    match label {
        ClassLabel::AllPermutations => {
            (1..=n as u128).try_fold(1u128, |acc, i| acc.checked_mul(i)).ok_or(Error::Overflow)
        }
        ClassLabel::Hooks | ClassLabel::SkewMergedInvolutions => {
            if n == 0 {
                Ok(0)
            } else {
                pow2(n - 1)
            }
        }
        ClassLabel::HookPairPermutations => Ok(if n == 0 { 0 } else { binomial(2 * n - 2, n - 1) }),
        ClassLabel::TwoRowInvolutions => Ok(binomial(n, n / 2)),
        ClassLabel::Avoid321Permutations => {
            let c = binomial(2 * n, n);
            Ok(c / (n as u128 + 1))
        }
        ClassLabel::Protected24Tableaux => protected24_total(n),
        ClassLabel::HookPlusBoxTableaux => hook_plus_box_total(n),
        other => Err(Error::NoClosedForm(other.to_string())),
    }
}
