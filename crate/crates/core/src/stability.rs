//! Stability indices and the stable set of associated primes of `(B_1(u))`.
//!
//! Notation: `u = x_{i_1} ... x_{i_d}` over `[n]`, `A = {k_1 < ... < k_s}` with
//! sentinels `k_0 = 0`, `k_{s+1} = n + 1`, and `i_0 = 0`. The gap lengths
//! between interval blocks are called `gaps` here so they do not collide with
//! the elements `k_t` of `A`.

use std::fmt;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::localization::{localize_closed_form, Localization, VariableSubset};
use crate::monomial::SquarefreeMonomial;

/// Index of stability: the least power at which a prime shows up, or infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Lambda {
    Finite(u32),
    Infinite,
}

impl Lambda {
    pub fn finite(self) -> Option<u32> {
        match self {
            Lambda::Finite(k) => Some(k),
            Lambda::Infinite => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Lambda::Finite(_))
    }
}

impl fmt::Display for Lambda {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Lambda::Finite(k) => write!(f, "{k}"),
            Lambda::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for Lambda {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Lambda::Finite(k) => s.serialize_u32(*k),
            Lambda::Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Lambda {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct LambdaVisitor;

        impl Visitor<'_> for LambdaVisitor {
            type Value = Lambda;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a positive integer or \"inf\"")
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Lambda, E> {
                u32::try_from(v)
                    .map(Lambda::Finite)
                    .map_err(|_| E::custom("lambda out of range"))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Lambda, E> {
                if v == "inf" {
                    Ok(Lambda::Infinite)
                } else {
                    Err(E::invalid_value(de::Unexpected::Str(v), &self))
                }
            }
        }

        d.deserialize_any(LambdaVisitor)
    }
}

/// Maximal runs `[a_j, b_j]` of `{i_1, ..., i_{d-1}, n}` with their lengths
/// and the gaps in front of each run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalDecomposition {
    pub blocks: Vec<(usize, usize)>,
    /// `b_j - a_j + 1` for inner runs; `n - a_m` for the last one.
    pub lengths: Vec<usize>,
    /// `a_1 - 1`, then `a_j - b_{j-1} - 1`.
    pub gaps: Vec<usize>,
    pub n: usize,
}

impl IntervalDecomposition {
    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }
}

fn contiguous_n(u: &SquarefreeMonomial) -> Result<usize> {
    if u.ground().is_contiguous() {
        Ok(u.ground().len())
    } else {
        Err(Error::precondition(format!(
            "{u} must live over a contiguous ground set, not {}",
            u.ground()
        )))
    }
}

pub fn interval_decomposition(u: &SquarefreeMonomial) -> Result<IntervalDecomposition> {
    let n = contiguous_n(u)?;
    if u.max() != n {
        return Err(Error::precondition(format!("max({u}) must equal n = {n}")));
    }
    let mut blocks: Vec<(usize, usize)> = Vec::new();
    for &i in u.indices() {
        match blocks.last_mut() {
            Some((_, b)) if *b + 1 == i => *b = i,
            _ => blocks.push((i, i)),
        }
    }
    let m = blocks.len();
    let lengths = blocks
        .iter()
        .enumerate()
        .map(|(j, &(a, b))| if j + 1 < m { b - a + 1 } else { n - a })
        .collect();
    let gaps = blocks
        .iter()
        .enumerate()
        .map(|(j, &(a, _))| if j == 0 { a - 1 } else { a - blocks[j - 1].1 - 1 })
        .collect();
    Ok(IntervalDecomposition {
        blocks,
        lengths,
        gaps,
        n,
    })
}

fn is_single_variable_ring(u: &SquarefreeMonomial) -> bool {
    u.ground().len() == 1
}

/// Whether the maximal ideal is associated to some power of `(B_1(u))`.
pub fn ever_associated(u: &SquarefreeMonomial) -> Result<bool> {
    let n = contiguous_n(u)?;
    if is_single_variable_ring(u) {
        return Ok(true);
    }
    Ok(u.min() > 1 && u.max() == n)
}

/// `λ(m; I)` for `I = (B_1(u))`:
/// `max_j ceil((l_1 + ... + l_j) / (gap_1 + ... + gap_j)) + 1` when
/// `min(u) > 1` and `max(u) = n`, infinite otherwise.
pub fn lambda_max_ideal(u: &SquarefreeMonomial) -> Result<Lambda> {
    if !ever_associated(u)? {
        return Ok(Lambda::Infinite);
    }
    if is_single_variable_ring(u) {
        return Ok(Lambda::Finite(1));
    }
    let dec = interval_decomposition(u)?;
    let mut len_sum = 0usize;
    let mut gap_sum = 0usize;
    let mut best = 0usize;
    for (l, g) in dec.lengths.iter().zip(&dec.gaps) {
        len_sum += l;
        gap_sum += g;
        assert!(gap_sum >= 1, "min(u) > 1 forces a positive first gap");
        best = best.max(len_sum.div_ceil(gap_sum) + 1);
    }
    Ok(Lambda::Finite(best as u32))
}

/// Degree-`d` squarefree monomial in `2d - i + 1` variables whose maximal
/// ideal has stability index `i`:
/// `x_2 ... x_i * x_{i+2} x_{i+4} ... x_{2d-i} * x_{2d-i+1}`.
pub fn generator_with_lambda(d: usize, i: usize) -> Result<SquarefreeMonomial> {
    if i < 2 || i > d {
        return Err(Error::precondition(format!("need 2 <= i <= d, got i = {i}, d = {d}")));
    }
    let n = 2 * d - i + 1;
    let mut idx: Vec<usize> = (2..=i).collect();
    idx.extend((1..=d - i).map(|j| i + 2 * j));
    idx.push(n);
    SquarefreeMonomial::over(n, &idx)
}

fn same_ambient(u: &SquarefreeMonomial, a: &VariableSubset) -> Result<()> {
    u.ground().ensure_same(a.ambient())
}

/// `l(t) = min { r : k_t <= i_r }` for each position `t` of `A` (1-based
/// values); `None` where `k_t > i_d`.
pub fn l_function(u: &SquarefreeMonomial, a: &VariableSubset) -> Vec<Option<usize>> {
    a.members()
        .iter()
        .map(|&k| u.indices().iter().position(|&i| k <= i).map(|r| r + 1))
        .collect()
}

// `i_r` with `i_r = 0` for `r <= 0`.
fn i_at(u: &SquarefreeMonomial, r: isize) -> usize {
    if r <= 0 {
        0
    } else {
        u.indices()[r as usize - 1]
    }
}

/// `k_{s-j} > i_{d-j-1}` for some `0 <= j < s`.
pub fn max_drop_by_gaps(u: &SquarefreeMonomial, a: &VariableSubset) -> bool {
    let (s, d) = (a.len() as isize, u.degree() as isize);
    (0..s).any(|j| a.members()[(s - j - 1) as usize] > i_at(u, d - j - 1))
}

/// `l(s-j) >= d-j` for some `0 <= j < s`, with undefined `l` counting as infinite.
pub fn max_drop_by_reach(u: &SquarefreeMonomial, a: &VariableSubset) -> bool {
    let l = l_function(u, a);
    let (s, d) = (a.len(), u.degree() as isize);
    (0..s).any(|j| match l[s - j - 1] {
        None => true,
        Some(r) => r as isize >= d - j as isize,
    })
}

/// Whether `max(u_A) = max(u)`.
///
/// Uses the gap criterion when `k_s <= i_d`; otherwise falls back to
/// computing `u_A`.
pub fn max_preserved(u: &SquarefreeMonomial, a: &VariableSubset) -> Result<bool> {
    same_ambient(u, a)?;
    match a.members().last() {
        None => Ok(true),
        Some(&ks) if ks <= u.max() => Ok(!max_drop_by_gaps(u, a)),
        Some(_) => {
            let loc = localize_closed_form(u, a)?;
            Ok(loc.generator().is_some_and(|v| v.max() == u.max()))
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FghParameters {
    /// `max { r in 0..=s : k_r + 1 < k_{r+1} }`.
    pub f: usize,
    /// `max { t : i_t <= k_{f+1} - 1 }`, 0 if there is none.
    pub g: usize,
    /// `min { j : i_{j+1} > i_j + 1 }`, or `d` when `u = x_1 ... x_d`.
    pub h: usize,
    /// `max(S_A) = k_{f+1} - 1`.
    pub max_ground: usize,
}

fn sentinel_sequence(a: &VariableSubset, n: usize) -> Vec<usize> {
    let mut ks = Vec::with_capacity(a.len() + 2);
    ks.push(0);
    ks.extend_from_slice(a.members());
    ks.push(n + 1);
    ks
}

pub fn fgh_parameters(u: &SquarefreeMonomial, a: &VariableSubset) -> Result<FghParameters> {
    same_ambient(u, a)?;
    let n = contiguous_n(u)?;
    let ks = sentinel_sequence(a, n);
    let s = a.len();
    let f = (0..=s)
        .rev()
        .find(|&r| ks[r] + 1 < ks[r + 1])
        .ok_or_else(|| Error::precondition(format!("{a} leaves no variables")))?;
    let max_ground = ks[f + 1] - 1;
    let g = u.indices().iter().take_while(|&&i| i <= max_ground).count();
    let d = u.degree();
    let h = (0..d)
        .find(|&j| i_at(u, j as isize + 1) > i_at(u, j as isize) + 1)
        .unwrap_or(d);
    Ok(FghParameters { f, g, h, max_ground })
}

/// Stable-set membership of `P_A` from `A` and `u` alone, without computing `u_A`.
///
/// Condition (i) `min(u_A) > min(S_A)` is `k_t = t` for `t = 0..=h`.
/// Condition (ii) `max(u_A) = max(S_A)` is `i_g = max(S_A)` together with
/// `l(f-j) < g-j` for `j = 0..f`. A one-variable localized ring only needs (ii).
pub fn stable_membership_combinatorial(u: &SquarefreeMonomial, a: &VariableSubset) -> Result<bool> {
    same_ambient(u, a)?;
    let n = contiguous_n(u)?;
    let s = a.len();
    if s == n {
        return Ok(false);
    }
    let FghParameters { f, g, h, max_ground } = fgh_parameters(u, a)?;
    let l = l_function(u, a);
    let reaches_top = g >= 1 && u.indices()[g - 1] == max_ground;
    let cond_ii = reaches_top
        && (0..f).all(|j| match l[f - j - 1] {
            Some(r) => r + j < g,
            None => false,
        });
    if n - s == 1 {
        return Ok(cond_ii);
    }
    let ks = sentinel_sequence(a, n);
    let cond_i = (0..=h.min(s + 1)).all(|t| ks[t] == t);
    Ok(cond_i && cond_ii)
}

/// Stable-set membership of `P_A` from the localized generator:
/// `min(u_A) > min(S_A)` and `max(u_A) = max(S_A)`.
pub fn stable_membership_direct(u: &SquarefreeMonomial, a: &VariableSubset) -> Result<bool> {
    let loc = localize_closed_form(u, a)?;
    Ok(direct_from_localization(&loc))
}

fn direct_from_localization(loc: &Localization) -> bool {
    match (loc.ground(), loc.generator()) {
        (Some(ground), Some(v)) => {
            if ground.len() == 1 {
                true
            } else {
                v.min() > ground.min() && v.max() == ground.max()
            }
        }
        _ => false,
    }
}

fn lambda_from_localization(loc: &Localization) -> Result<Lambda> {
    match loc.generator() {
        None => Ok(Lambda::Infinite),
        Some(v) => lambda_max_ideal(&v.relabel_contiguous()),
    }
}

/// `λ(P_A; I)`, transported through the localization `I(P_A)`.
pub fn lambda_of_prime(u: &SquarefreeMonomial, a: &VariableSubset) -> Result<Lambda> {
    lambda_from_localization(&localize_closed_form(u, a)?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StableSetEntry {
    pub subset: VariableSubset,
    pub localization: Localization,
    pub member: bool,
    pub lambda: Lambda,
    /// Labels of the localized ring; position `p` is relabeled to `p + 1`
    /// when evaluating the interval formula.
    pub relabeling: Vec<usize>,
}

impl StableSetEntry {
    /// Generators of `P_A`.
    pub fn prime(&self) -> Vec<usize> {
        self.subset.complement()
    }

    pub fn u_a(&self) -> Option<&SquarefreeMonomial> {
        self.localization.generator()
    }
}

/// Evaluates every `A ⊆ [n]`, ordered by size then lexicographically.
///
/// Both membership routes are evaluated and must agree.
pub fn stable_set_enumerate(u: &SquarefreeMonomial, max_n: usize) -> Result<Vec<StableSetEntry>> {
    let n = contiguous_n(u)?;
    if n > max_n {
        return Err(Error::LimitExceeded {
            what: "n",
            limit: max_n,
            actual: n,
        });
    }
    VariableSubset::all(u.ground())
        .into_iter()
        .map(|a| {
            let localization = localize_closed_form(u, &a)?;
            let member = direct_from_localization(&localization);
            if member != stable_membership_combinatorial(u, &a)? {
                return Err(Error::Internal(format!(
                    "membership routes disagree for u = {u}, {a}"
                )));
            }
            let lambda = lambda_from_localization(&localization)?;
            if member != lambda.is_finite() {
                return Err(Error::Internal(format!(
                    "membership and lambda disagree for u = {u}, {a}"
                )));
            }
            let relabeling = localization
                .ground()
                .map(|g| g.indices().to_vec())
                .unwrap_or_default();
            Ok(StableSetEntry {
                subset: a,
                localization,
                member,
                lambda,
                relabeling,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::GroundSet;

    fn sq(idx: &[usize], n: usize) -> SquarefreeMonomial {
        SquarefreeMonomial::over(n, idx).unwrap()
    }

    fn sub(members: &[usize], n: usize) -> VariableSubset {
        VariableSubset::new(GroundSet::contiguous(n).unwrap(), members.to_vec()).unwrap()
    }

    #[test]
    fn interval_examples() {
        let dec = interval_decomposition(&sq(&[2, 3, 5], 5)).unwrap();
        assert_eq!(dec.blocks, vec![(2, 3), (5, 5)]);
        assert_eq!(dec.lengths, vec![2, 0]);
        assert_eq!(dec.gaps, vec![1, 1]);

        let dec = interval_decomposition(&sq(&[2, 3, 4, 5], 5)).unwrap();
        assert_eq!(dec.blocks, vec![(2, 5)]);
        assert_eq!((dec.lengths[0], dec.gaps[0]), (3, 1));

        let dec = interval_decomposition(&sq(&[1, 3, 4, 5], 5)).unwrap();
        assert_eq!(dec.blocks, vec![(1, 1), (3, 5)]);
        assert_eq!(dec.lengths, vec![1, 2]);
        assert_eq!(dec.gaps, vec![0, 1]);

        assert!(interval_decomposition(&sq(&[2, 3], 4)).is_err());
    }

    #[test]
    fn lambda_examples() {
        for d in 1..=6 {
            let mut idx: Vec<usize> = (2..=d).collect();
            let n = d + 2;
            idx.push(n);
            assert_eq!(lambda_max_ideal(&sq(&idx, n)).unwrap(), Lambda::Finite(d as u32));
        }
        assert_eq!(lambda_max_ideal(&sq(&[2, 3], 3)).unwrap(), Lambda::Finite(2));
        assert_eq!(lambda_max_ideal(&sq(&[1, 3, 4, 5], 5)).unwrap(), Lambda::Infinite);
        assert_eq!(lambda_max_ideal(&sq(&[2, 4, 5], 5)).unwrap(), Lambda::Finite(2));
        assert_eq!(lambda_max_ideal(&sq(&[1], 1)).unwrap(), Lambda::Finite(1));
        assert_eq!(lambda_max_ideal(&sq(&[2, 3], 4)).unwrap(), Lambda::Infinite);
    }

    #[test]
    fn ever_associated_examples() {
        assert!(ever_associated(&sq(&[2, 3], 3)).unwrap());
        assert!(!ever_associated(&sq(&[2, 3], 4)).unwrap());
        assert!(!ever_associated(&sq(&[1, 3, 4, 5], 5)).unwrap());
        assert!(ever_associated(&sq(&[1], 1)).unwrap());
    }

    #[test]
    fn generator_with_lambda_examples() {
        let u = generator_with_lambda(3, 2).unwrap();
        assert_eq!((u.indices(), u.ground().len()), (&[2, 4, 5][..], 5));
        let u = generator_with_lambda(2, 2).unwrap();
        assert_eq!((u.indices(), u.ground().len()), (&[2, 3][..], 3));
        let u = generator_with_lambda(4, 4).unwrap();
        assert_eq!((u.indices(), u.ground().len()), (&[2, 3, 4, 5][..], 5));
        assert_eq!(lambda_max_ideal(&u).unwrap(), Lambda::Finite(4));
        assert!(generator_with_lambda(3, 1).is_err());
        assert!(generator_with_lambda(3, 4).is_err());
    }

    #[test]
    fn l_function_examples() {
        let u = sq(&[1, 3, 4, 5], 5);
        assert_eq!(l_function(&u, &sub(&[1, 2], 5)), vec![Some(1), Some(2)]);
        assert_eq!(l_function(&u, &sub(&[5], 5)), vec![Some(4)]);
        let u6 = sq(&[1, 3, 4, 5], 6);
        assert_eq!(l_function(&u6, &sub(&[6], 6)), vec![None]);
    }

    #[test]
    fn max_preserved_examples() {
        let u = sq(&[1, 3, 4, 5], 5);
        assert!(!max_preserved(&u, &sub(&[4, 5], 5)).unwrap());
        assert!(max_preserved(&u, &sub(&[1], 5)).unwrap());
        assert!(max_preserved(&u, &sub(&[], 5)).unwrap());
        let short = sq(&[1, 3], 5);
        assert!(max_preserved(&short, &sub(&[5], 5)).unwrap());
        assert!(!max_preserved(&short, &sub(&[3, 5], 5)).unwrap());
    }

    #[test]
    fn fgh_examples() {
        let u = sq(&[1, 3, 4, 5], 5);
        let p = fgh_parameters(&u, &sub(&[1], 5)).unwrap();
        assert_eq!((p.f, p.max_ground, p.g, p.h), (1, 5, 4, 1));
        let p = fgh_parameters(&u, &sub(&[], 5)).unwrap();
        assert_eq!((p.f, p.max_ground, p.g, p.h), (0, 5, 4, 1));
        let p = fgh_parameters(&sq(&[2, 3], 3), &sub(&[1], 3)).unwrap();
        assert_eq!(p.h, 0);
        let p = fgh_parameters(&sq(&[1, 2], 3), &sub(&[], 3)).unwrap();
        assert_eq!(p.h, 2);
        assert!(fgh_parameters(&u, &sub(&[1, 2, 3, 4, 5], 5)).is_err());
    }

    #[test]
    fn membership_examples() {
        let u = sq(&[1, 3, 4, 5], 5);
        for (a, expected) in [
            (&[1, 4][..], true),
            (&[2][..], false),
            (&[2, 3, 4, 5][..], true),
            (&[1][..], true),
            (&[4, 5][..], false),
            (&[][..], false),
        ] {
            let a = sub(a, 5);
            assert_eq!(stable_membership_combinatorial(&u, &a).unwrap(), expected, "{a}");
            assert_eq!(stable_membership_direct(&u, &a).unwrap(), expected, "{a}");
        }
    }

    #[test]
    fn lambda_of_prime_examples() {
        let u = sq(&[1, 3, 4, 5], 5);
        assert_eq!(lambda_of_prime(&u, &sub(&[1], 5)).unwrap(), Lambda::Finite(3));
        assert_eq!(lambda_of_prime(&u, &sub(&[1, 3], 5)).unwrap(), Lambda::Finite(2));
        assert_eq!(lambda_of_prime(&u, &sub(&[1, 2, 4], 5)).unwrap(), Lambda::Finite(1));
        assert_eq!(lambda_of_prime(&u, &sub(&[1, 2, 3, 4, 5], 5)).unwrap(), Lambda::Infinite);
    }

    #[test]
    fn enumeration_small_cases() {
        let entries = stable_set_enumerate(&sq(&[1], 1), 12).unwrap();
        let members: Vec<_> = entries.iter().filter(|e| e.member).collect();
        assert_eq!(members.len(), 1);
        assert!(members[0].subset.is_empty());
        assert_eq!(members[0].lambda, Lambda::Finite(1));

        let entries = stable_set_enumerate(&sq(&[2, 3], 3), 12).unwrap();
        let empty = entries.iter().find(|e| e.subset.is_empty()).unwrap();
        assert!(empty.member);
        assert_eq!(empty.lambda, Lambda::Finite(2));

        assert!(matches!(
            stable_set_enumerate(&sq(&[2, 3], 3), 2),
            Err(Error::LimitExceeded { .. })
        ));
    }

    #[test]
    fn lambda_json_forms() {
        assert_eq!(serde_json::to_string(&Lambda::Finite(2)).unwrap(), "2");
        assert_eq!(serde_json::to_string(&Lambda::Infinite).unwrap(), "\"inf\"");
        assert_eq!(serde_json::from_str::<Lambda>("\"inf\"").unwrap(), Lambda::Infinite);
        assert_eq!(serde_json::from_str::<Lambda>("3").unwrap(), Lambda::Finite(3));
        assert!(serde_json::from_str::<Lambda>("\"two\"").is_err());
    }
}
