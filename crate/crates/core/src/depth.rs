//! Linear quotients of `B_k(u^k)`, the invariant `q(I^k)` and `depth(S/I^k)`.
//!
//! With the generators of `B_k(u^k)` sorted lex-decreasing as `u_1 > u_2 > ...`,
//! the colon `(u_1, ..., u_{i-1}) : u_i` is generated by the variables `x_j`
//! with `j < max(u_i)` whose exponent in `u_i` is below `k`. The depth of
//! `S/I^k` is `n - q - 1` where `q` is the largest such colon, so the maximal
//! ideal is associated to `I^k` exactly when `q = n - 1`.

use crate::borel::{member_bk, power_generators};
use crate::error::{Error, Result};
use crate::exponent::Exponent;
use crate::monomial::{Monomial, SquarefreeMonomial};
use crate::Exp;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientProfile {
    /// Colon variable labels, one entry per generator in lex-decreasing order.
    pub quotient_sets: Vec<Vec<usize>>,
    pub q: usize,
    pub depth: usize,
    pub n: usize,
    pub m_in_ass: bool,
}

/// Colon variables of `gens[index]` against the earlier generators.
///
/// `gens` must be `B_k(u^k)` sorted strictly lex-decreasing; the formula is
/// not valid for other ideals.
pub fn linear_quotient_set<E: Exponent>(
    gens: &[Monomial<E>],
    index: usize,
    k: u32,
) -> Result<Vec<usize>> {
    if index >= gens.len() {
        return Err(Error::precondition(format!(
            "generator index {index} out of range for {} generators",
            gens.len()
        )));
    }
    for pair in gens.windows(2) {
        if pair[0].lex_cmp(&pair[1])? != std::cmp::Ordering::Greater {
            return Err(Error::Unsorted);
        }
    }
    if index == 0 {
        return Ok(Vec::new());
    }
    Ok(quotient_labels(&gens[index], u64::from(k)))
}

fn quotient_labels<E: Exponent>(w: &Monomial<E>, k: u64) -> Vec<usize> {
    let Some(top) = w.max_label() else {
        return Vec::new();
    };
    w.ground()
        .indices()
        .iter()
        .copied()
        .take_while(|&l| l < top)
        .filter(|&l| w.exponent(l).as_u64() != k)
        .collect()
}

fn require_contiguous(u: &SquarefreeMonomial) -> Result<usize> {
    if u.ground().is_contiguous() {
        Ok(u.ground().len())
    } else {
        Err(Error::precondition(format!(
            "{u} must live over a contiguous ground set, not {}",
            u.ground()
        )))
    }
}

/// Full colon profile of `I^k` for `I = (B_1(u))` over `[n]`.
pub fn quotient_profile<E: Exponent>(u: &SquarefreeMonomial, k: u32) -> Result<QuotientProfile> {
    let n = require_contiguous(u)?;
    let gens = power_generators::<E>(u, k)?;
    let kk = u64::from(k);
    let quotient_sets: Vec<Vec<usize>> = gens
        .generators()
        .iter()
        .enumerate()
        .map(|(i, w)| if i == 0 { Vec::new() } else { quotient_labels(w, kk) })
        .collect();
    let q = quotient_sets.iter().map(Vec::len).max().unwrap_or(0);
    debug_assert!(q < n);
    Ok(QuotientProfile {
        quotient_sets,
        q,
        depth: n - q - 1,
        n,
        m_in_ass: q == n - 1,
    })
}

pub fn q_invariant(u: &SquarefreeMonomial, k: u32) -> Result<usize> {
    Ok(quotient_profile::<Exp>(u, k)?.q)
}

/// `depth(S/I^k) = n - q(I^k) - 1`.
pub fn depth_power(u: &SquarefreeMonomial, k: u32) -> Result<usize> {
    Ok(quotient_profile::<Exp>(u, k)?.depth)
}

/// Whether the maximal ideal is associated to `I^k`, via `q(I^k) = n - 1`.
pub fn max_ideal_in_ass_formula(u: &SquarefreeMonomial, k: u32) -> Result<bool> {
    Ok(quotient_profile::<Exp>(u, k)?.m_in_ass)
}

/// For `u = x_{i_1} ... x_{i_r} x_n` with `min(u) > 1` and `k > r`, the
/// generator `x_1^r x_{i_1}^{k-1} ... x_{i_r}^{k-1} x_n^k` of `I^k`, whose colon
/// has all `n - 1` variables.
pub fn depth_zero_witness<E: Exponent>(u: &SquarefreeMonomial, k: u32) -> Result<Monomial<E>> {
    let n = require_contiguous(u)?;
    let r = u.degree() - 1;
    if u.min() == 1 || u.max() != n {
        return Err(Error::precondition(format!(
            "witness needs min(u) > 1 and max(u) = n, got {u} with n = {n}"
        )));
    }
    if (k as usize) <= r {
        return Err(Error::precondition(format!(
            "witness needs k > {r}, got k = {k}"
        )));
    }
    let kk = u64::from(k);
    let mut pairs = vec![(1, r as u64), (n, kk)];
    pairs.extend(u.indices()[..r].iter().map(|&i| (i, kk - 1)));
    let v = Monomial::<E>::from_pairs(u.ground().clone(), pairs)?;

    let u_pow = u.to_monomial::<E>().pow(k)?;
    if !member_bk(&v, &u_pow, k)? {
        return Err(Error::Internal(format!("{v} is not in B_{k}({u_pow})")));
    }
    if quotient_labels(&v, kk).len() != n - 1 {
        return Err(Error::Internal(format!(
            "colon of {v} does not contain all {} variables",
            n - 1
        )));
    }
    Ok(v)
}
