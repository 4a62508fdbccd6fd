//! Exact monomial and monomial-ideal arithmetic over explicit ordered ground sets.
//!
//! A [`GroundSet`] is a strictly increasing list of positive variable labels.
//! Monomials store one exponent per ground-set position, so two monomials can
//! only be combined when they share a ground set. Localized ideals keep their
//! original labels (for example `vars=2,3,5`), which is why labels and
//! positions are kept distinct throughout.
//!
//! Text format: comma separated `label^exponent` pairs with the exponent
//! omitted when it is 1, e.g. `1^2,3,5^4` is `x_1^2 x_3 x_5^4`. The empty string
//! is the unit monomial.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exponent::Exponent;

/// Strictly increasing, non-empty list of positive variable labels.
#[derive(Clone, Eq)]
pub struct GroundSet(Arc<[usize]>);

impl PartialEq for GroundSet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0[..] == other.0[..]
    }
}

impl Hash for GroundSet {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0[..].hash(state);
    }
}

impl GroundSet {
    pub fn new(indices: Vec<usize>) -> Result<Self> {
        if indices.is_empty() {
            return Err(Error::InvalidGroundSet("empty".into()));
        }
        if indices[0] == 0 {
            return Err(Error::InvalidGroundSet("labels start at 1".into()));
        }
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidGroundSet(
                "labels must be strictly increasing".into(),
            ));
        }
        Ok(GroundSet(indices.into()))
    }

    /// The contiguous ground set `[n] = {1, ..., n}`.
    pub fn contiguous(n: usize) -> Result<Self> {
        GroundSet::new((1..=n).collect())
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn min(&self) -> usize {
        self.0[0]
    }

    pub fn max(&self) -> usize {
        self.0[self.0.len() - 1]
    }

    pub fn position(&self, label: usize) -> Option<usize> {
        self.0.binary_search(&label).ok()
    }

    pub fn contains(&self, label: usize) -> bool {
        self.position(label).is_some()
    }

    pub fn label(&self, position: usize) -> usize {
        self.0[position]
    }

    /// True when the labels are exactly `1..=n`.
    pub fn is_contiguous(&self) -> bool {
        self.0.iter().enumerate().all(|(p, &l)| l == p + 1)
    }

    /// Labels of `self` not listed in `removed`; `None` when nothing remains.
    pub fn without(&self, removed: &[usize]) -> Option<GroundSet> {
        let rest: Vec<usize> = self
            .0
            .iter()
            .copied()
            .filter(|l| !removed.contains(l))
            .collect();
        if rest.is_empty() {
            None
        } else {
            Some(GroundSet(rest.into()))
        }
    }

    pub(crate) fn ensure_same(&self, other: &GroundSet) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::GroundMismatch {
                left: self.to_string(),
                right: other.to_string(),
            })
        }
    }
}

impl fmt::Display for GroundSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_contiguous() {
            write!(f, "n={}", self.len())
        } else {
            write!(f, "vars={}", join_labels(&self.0))
        }
    }
}

impl fmt::Debug for GroundSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for GroundSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("n=") {
            let n: usize = rest
                .trim()
                .parse()
                .map_err(|_| Error::parse(format!("bad ground-set size `{rest}`")))?;
            GroundSet::contiguous(n)
        } else if let Some(rest) = s.strip_prefix("vars=") {
            GroundSet::new(parse_labels(rest)?)
        } else {
            Err(Error::parse(format!(
                "ground set must be `n=<int>` or `vars=<labels>`, got `{s}`"
            )))
        }
    }
}

pub(crate) fn join_labels(labels: &[usize]) -> String {
    labels
        .iter()
        .map(|l| l.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Parses a comma separated label list such as `1,3,4,5`. Empty input gives
/// an empty list.
pub fn parse_labels(text: &str) -> Result<Vec<usize>> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|tok| {
            let tok = tok.trim();
            let label: usize = tok
                .parse()
                .map_err(|_| Error::parse(format!("bad variable label `{tok}`")))?;
            if label == 0 {
                return Err(Error::parse("variable labels start at 1"));
            }
            Ok(label)
        })
        .collect()
}

/// Parses `label^exponent` pairs, e.g. `1^2,3,5^4`.
pub fn parse_pairs(text: &str) -> Result<Vec<(usize, u64)>> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|tok| {
            let tok = tok.trim();
            let (label, exp) = match tok.split_once('^') {
                Some((l, e)) => (l.trim(), e.trim()),
                None => (tok, "1"),
            };
            let label: usize = label
                .parse()
                .map_err(|_| Error::parse(format!("bad variable label in `{tok}`")))?;
            let exp: u64 = exp
                .parse()
                .map_err(|_| Error::parse(format!("bad exponent in `{tok}`")))?;
            if label == 0 {
                return Err(Error::parse("variable labels start at 1"));
            }
            Ok((label, exp))
        })
        .collect()
}

// Raw exponent-vector helpers shared with the oracle.

pub(crate) fn divides_slice<E: Exponent>(a: &[E], b: &[E]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub(crate) fn degree_slice<E: Exponent>(a: &[E]) -> u64 {
    a.iter().map(|e| e.as_u64()).sum()
}

/// `a / gcd(a, b)`.
pub(crate) fn strip_slice<E: Exponent>(a: &[E], b: &[E]) -> Box<[E]> {
    a.iter()
        .zip(b)
        .map(|(&x, &y)| if x > y { x - y } else { E::zero() })
        .collect()
}

pub(crate) fn mul_slice<E: Exponent>(a: &[E], b: &[E]) -> Result<Box<[E]>> {
    a.iter().zip(b).map(|(&x, &y)| x.add_checked(y)).collect()
}

/// Removes duplicates and non-minimal elements, then sorts lex-decreasing.
pub(crate) fn minimalize_slices<E: Exponent>(mut gens: Vec<Box<[E]>>) -> Vec<Box<[E]>> {
    gens.sort_by(|a, b| {
        degree_slice(a)
            .cmp(&degree_slice(b))
            .then_with(|| b.cmp(a))
    });
    gens.dedup();
    let mut kept: Vec<Box<[E]>> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| divides_slice(k, &g)) {
            kept.push(g);
        }
    }
    kept.sort_by(|a, b| b.cmp(a));
    kept
}

/// A monomial `x_1^{a_1} ... x_n^{a_n}` over an explicit ground set.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial<E> {
    ground: GroundSet,
    exps: Box<[E]>,
}

impl<E: Exponent> Monomial<E> {
    /// Builds a monomial from one exponent per ground-set position.
    pub fn new(ground: GroundSet, exps: Vec<E>) -> Result<Self> {
        if exps.len() != ground.len() {
            return Err(Error::precondition(format!(
                "{} exponents given for a ground set of size {}",
                exps.len(),
                ground.len()
            )));
        }
        Ok(Monomial {
            ground,
            exps: exps.into(),
        })
    }

    pub(crate) fn from_raw(ground: GroundSet, exps: Box<[E]>) -> Self {
        debug_assert_eq!(exps.len(), ground.len());
        Monomial { ground, exps }
    }

    pub fn one(ground: GroundSet) -> Self {
        let exps = vec![E::zero(); ground.len()].into();
        Monomial { ground, exps }
    }

    pub fn variable(ground: GroundSet, label: usize) -> Result<Self> {
        Monomial::from_pairs(ground, [(label, 1)])
    }

    /// Builds a monomial from `(label, exponent)` pairs; repeated labels multiply.
    pub fn from_pairs<I>(ground: GroundSet, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, u64)>,
    {
        let mut exps = vec![E::zero(); ground.len()];
        for (label, e) in pairs {
            let p = ground.position(label).ok_or(Error::LabelNotInGround(label))?;
            exps[p] = exps[p].add_checked(E::from_u64(e)?)?;
        }
        Monomial::new(ground, exps)
    }

    /// Parses the `1^2,3,5^4` text format.
    pub fn parse(text: &str, ground: GroundSet) -> Result<Self> {
        Monomial::from_pairs(ground, parse_pairs(text)?)
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn exponents(&self) -> &[E] {
        &self.exps
    }

    /// Exponent of `x_label`; zero for labels outside the ground set.
    pub fn exponent(&self, label: usize) -> E {
        self.ground
            .position(label)
            .map_or(E::zero(), |p| self.exps[p])
    }

    /// Non-zero `(label, exponent)` pairs in increasing label order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, E)> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, e)| !e.is_zero())
            .map(|(p, &e)| (self.ground.label(p), e))
    }

    pub fn degree(&self) -> u64 {
        degree_slice(&self.exps)
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|e| e.is_zero())
    }

    pub fn support(&self) -> Vec<usize> {
        self.pairs().map(|(l, _)| l).collect()
    }

    pub fn min_label(&self) -> Option<usize> {
        self.pairs().next().map(|(l, _)| l)
    }

    pub fn max_label(&self) -> Option<usize> {
        self.pairs().last().map(|(l, _)| l)
    }

    pub fn max_exponent(&self) -> E {
        self.exps.iter().copied().max().unwrap_or_else(E::zero)
    }

    /// `self | other`: every exponent of `self` is at most the one of `other`.
    pub fn divides(&self, other: &Monomial<E>) -> Result<bool> {
        self.ground.ensure_same(&other.ground)?;
        Ok(divides_slice(&self.exps, &other.exps))
    }

    pub fn mul(&self, other: &Monomial<E>) -> Result<Monomial<E>> {
        self.ground.ensure_same(&other.ground)?;
        Ok(Monomial::from_raw(
            self.ground.clone(),
            mul_slice(&self.exps, &other.exps)?,
        ))
    }

    pub fn pow(&self, k: u32) -> Result<Monomial<E>> {
        let k = E::from_u64(u64::from(k))?;
        let exps = self
            .exps
            .iter()
            .map(|&e| e.checked_mul(&k).ok_or(Error::Overflow))
            .collect::<Result<Box<[E]>>>()?;
        Ok(Monomial::from_raw(self.ground.clone(), exps))
    }

    pub fn gcd(&self, other: &Monomial<E>) -> Result<Monomial<E>> {
        self.ground.ensure_same(&other.ground)?;
        let exps = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(&a, &b)| a.min(b))
            .collect();
        Ok(Monomial::from_raw(self.ground.clone(), exps))
    }

    /// `self / gcd(self, w)`, the generator of `(self) : w`.
    pub fn strip(&self, w: &Monomial<E>) -> Result<Monomial<E>> {
        self.ground.ensure_same(&w.ground)?;
        Ok(Monomial::from_raw(
            self.ground.clone(),
            strip_slice(&self.exps, &w.exps),
        ))
    }

    /// Lexicographic order with `x_i > x_j` for `i < j`: the first position
    /// where the exponents differ decides, larger exponent wins.
    pub fn lex_cmp(&self, other: &Monomial<E>) -> Result<Ordering> {
        self.ground.ensure_same(&other.ground)?;
        Ok(self.exps.cmp(&other.exps))
    }

    /// Product of the support variables.
    pub fn radical(&self) -> Result<SquarefreeMonomial> {
        if self.is_one() {
            return Err(Error::UnitMonomial);
        }
        SquarefreeMonomial::new(self.ground.clone(), self.support())
    }

    pub fn to_squarefree(&self) -> Result<SquarefreeMonomial> {
        if self.exps.iter().any(|&e| e > E::one()) {
            return Err(Error::NotSquarefree(self.to_string()));
        }
        self.radical()
    }

    /// Re-expresses the monomial over another ground set with the same labels
    /// in its support.
    pub fn with_ground(&self, ground: &GroundSet) -> Result<Monomial<E>> {
        Monomial::from_pairs(ground.clone(), self.pairs().map(|(l, e)| (l, e.as_u64())))
    }

    /// Changes the exponent type, failing if an exponent does not fit.
    pub fn cast<F: Exponent>(&self) -> Result<Monomial<F>> {
        let exps = self
            .exps
            .iter()
            .map(|e| F::from_u64(e.as_u64()))
            .collect::<Result<Box<[F]>>>()?;
        Ok(Monomial::from_raw(self.ground.clone(), exps))
    }

    /// Machine text format (`1^2,3`); the unit monomial is the empty string.
    pub fn to_text(&self) -> String {
        self.pairs()
            .map(|(l, e)| {
                if e.is_one() {
                    l.to_string()
                } else {
                    format!("{l}^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl<E: Exponent> fmt::Display for Monomial<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        for (l, e) in self.pairs() {
            if e.is_one() {
                write!(f, "x_{l}")?;
            } else {
                write!(f, "x_{l}^{e}")?;
            }
        }
        Ok(())
    }
}

impl<E: Exponent> fmt::Debug for Monomial<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} over {}", self.ground)
    }
}

/// Squarefree monomial `x_{i_1} ... x_{i_d}` with `i_1 < ... < i_d`, `d >= 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SquarefreeMonomial {
    ground: GroundSet,
    indices: Box<[usize]>,
}

impl SquarefreeMonomial {
    pub fn new(ground: GroundSet, indices: Vec<usize>) -> Result<Self> {
        if indices.is_empty() {
            return Err(Error::UnitMonomial);
        }
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::precondition(
                "squarefree indices must be strictly increasing",
            ));
        }
        if let Some(&bad) = indices.iter().find(|&&i| !ground.contains(i)) {
            return Err(Error::LabelNotInGround(bad));
        }
        Ok(SquarefreeMonomial {
            ground,
            indices: indices.into(),
        })
    }

    /// Convenience constructor over `[n]`.
    pub fn over(n: usize, indices: &[usize]) -> Result<Self> {
        SquarefreeMonomial::new(GroundSet::contiguous(n)?, indices.to_vec())
    }

    /// Parses a bare label list such as `1,3,4,5`.
    pub fn parse(text: &str, ground: GroundSet) -> Result<Self> {
        SquarefreeMonomial::new(ground, parse_labels(text)?)
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn degree(&self) -> usize {
        self.indices.len()
    }

    pub fn min(&self) -> usize {
        self.indices[0]
    }

    pub fn max(&self) -> usize {
        self.indices[self.indices.len() - 1]
    }

    pub fn to_monomial<E: Exponent>(&self) -> Monomial<E> {
        let mut exps = vec![E::zero(); self.ground.len()];
        for &i in self.indices.iter() {
            exps[self.ground.position(i).expect("checked at construction")] = E::one();
        }
        Monomial::from_raw(self.ground.clone(), exps.into())
    }

    /// Order-isomorphic copy over `[n']`, `n' = |ground|`.
    pub fn relabel_contiguous(&self) -> SquarefreeMonomial {
        let ground = GroundSet::contiguous(self.ground.len()).expect("ground is non-empty");
        let indices = self
            .indices
            .iter()
            .map(|&i| self.ground.position(i).expect("checked at construction") + 1)
            .collect();
        SquarefreeMonomial { ground, indices }
    }

    pub fn to_text(&self) -> String {
        join_labels(&self.indices)
    }
}

impl fmt::Display for SquarefreeMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in self.indices.iter() {
            write!(f, "x_{i}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SquarefreeMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} over {}", self.ground)
    }
}

/// Monomial ideal stored by its minimal generators, sorted lex-decreasing.
///
/// The zero ideal has no generators; the unit ideal is generated by the unit
/// monomial.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal<E> {
    ground: GroundSet,
    gens: Vec<Monomial<E>>,
}

impl<E: Exponent> MonomialIdeal<E> {
    /// Minimalizes `gens`: drops every generator divisible by another one.
    pub fn new<I>(ground: GroundSet, gens: I) -> Result<Self>
    where
        I: IntoIterator<Item = Monomial<E>>,
    {
        let mut raw = Vec::new();
        for g in gens {
            ground.ensure_same(&g.ground)?;
            raw.push(g.exps);
        }
        Ok(MonomialIdeal::from_raw(ground, raw))
    }

    pub(crate) fn from_raw(ground: GroundSet, raw: Vec<Box<[E]>>) -> Self {
        let gens = minimalize_slices(raw)
            .into_iter()
            .map(|e| Monomial::from_raw(ground.clone(), e))
            .collect();
        MonomialIdeal { ground, gens }
    }

    pub fn zero(ground: GroundSet) -> Self {
        MonomialIdeal {
            ground,
            gens: Vec::new(),
        }
    }

    pub fn unit(ground: GroundSet) -> Self {
        let one = Monomial::one(ground.clone());
        MonomialIdeal {
            ground,
            gens: vec![one],
        }
    }

    pub fn principal(m: Monomial<E>) -> Self {
        MonomialIdeal {
            ground: m.ground.clone(),
            gens: vec![m],
        }
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn generators(&self) -> &[Monomial<E>] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub(crate) fn raw(&self) -> Vec<Box<[E]>> {
        self.gens.iter().map(|g| g.exps.clone()).collect()
    }

    pub fn contains(&self, w: &Monomial<E>) -> Result<bool> {
        self.ground.ensure_same(&w.ground)?;
        Ok(self.gens.iter().any(|g| divides_slice(&g.exps, &w.exps)))
    }

    /// The common degree of all generators, if there is one.
    pub fn single_degree(&self) -> Option<u64> {
        let d = self.gens.first()?.degree();
        self.gens.iter().all(|g| g.degree() == d).then_some(d)
    }

    /// Componentwise maximum of the generator exponents.
    pub fn max_exponents(&self) -> Vec<E> {
        let mut out = vec![E::zero(); self.ground.len()];
        for g in &self.gens {
            for (o, &e) in out.iter_mut().zip(g.exps.iter()) {
                *o = (*o).max(e);
            }
        }
        out
    }

    /// `J : (w)`, generated by `g / gcd(g, w)` for `g` in `G(J)`.
    pub fn colon(&self, w: &Monomial<E>) -> Result<Self> {
        self.ground.ensure_same(&w.ground)?;
        let raw = self.gens.iter().map(|g| strip_slice(&g.exps, &w.exps)).collect();
        Ok(MonomialIdeal::from_raw(self.ground.clone(), raw))
    }

    /// `J : w^∞`, iterating the colon until it stabilizes.
    pub fn saturate(&self, w: &Monomial<E>) -> Result<Self> {
        let mut current = self.clone();
        loop {
            let next = current.colon(w)?;
            if next == current {
                return Ok(current);
            }
            current = next;
        }
    }

    pub fn product(&self, other: &MonomialIdeal<E>) -> Result<Self> {
        self.ground.ensure_same(&other.ground)?;
        let mut seen = HashSet::new();
        for a in &self.gens {
            for b in &other.gens {
                seen.insert(mul_slice(&a.exps, &b.exps)?);
            }
        }
        Ok(MonomialIdeal::from_raw(
            self.ground.clone(),
            seen.into_iter().collect(),
        ))
    }

    /// `J^k` for `k >= 1`.
    pub fn power(&self, k: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::precondition("ideal power needs k >= 1"));
        }
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// Moves the ideal onto a smaller ground set. Every generator must avoid
    /// the dropped variables.
    pub fn restrict(&self, ground: &GroundSet) -> Result<Self> {
        let gens = self
            .gens
            .iter()
            .map(|g| g.with_ground(ground))
            .collect::<Result<Vec<_>>>()?;
        MonomialIdeal::new(ground.clone(), gens)
    }

    pub fn cast<F: Exponent>(&self) -> Result<MonomialIdeal<F>> {
        let gens = self
            .gens
            .iter()
            .map(|g| g.cast())
            .collect::<Result<Vec<_>>>()?;
        Ok(MonomialIdeal {
            ground: self.ground.clone(),
            gens,
        })
    }
}

impl<E: Exponent> fmt::Display for MonomialIdeal<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

impl<E: Exponent> fmt::Debug for MonomialIdeal<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} over {}", self.ground)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize) -> GroundSet {
        GroundSet::contiguous(n).unwrap()
    }

    fn m(text: &str, n: usize) -> Monomial<u32> {
        Monomial::parse(text, g(n)).unwrap()
    }

    fn ideal(texts: &[&str], n: usize) -> MonomialIdeal<u32> {
        MonomialIdeal::new(g(n), texts.iter().map(|t| m(t, n))).unwrap()
    }

    #[test]
    fn ground_set_parsing_and_display() {
        assert_eq!("n=5".parse::<GroundSet>().unwrap(), g(5));
        let v: GroundSet = "vars=2,3,5".parse().unwrap();
        assert_eq!(v.indices(), &[2, 3, 5]);
        assert_eq!(v.to_string(), "vars=2,3,5");
        assert_eq!(g(4).to_string(), "n=4");
        assert!(GroundSet::new(vec![]).is_err());
        assert!(GroundSet::new(vec![3, 2]).is_err());
        assert!(GroundSet::new(vec![2, 2]).is_err());
        assert!(GroundSet::new(vec![0, 1]).is_err());
        assert!("m=3".parse::<GroundSet>().is_err());
    }

    #[test]
    fn text_format_round_trip() {
        let w = m("1^2,3,5^4", 5);
        assert_eq!(w.exponents(), &[2, 0, 1, 0, 4]);
        assert_eq!(w.to_text(), "1^2,3,5^4");
        assert_eq!(w.to_string(), "x_1^2x_3x_5^4");
        assert!(m("", 3).is_one());
        assert_eq!(m("", 3).to_string(), "1");
        assert!(Monomial::<u32>::parse("6", g(5)).is_err());
        assert!(Monomial::<u32>::parse("1^x", g(5)).is_err());
    }

    #[test]
    fn divides_examples() {
        assert!(m("1", 3).divides(&m("1,2", 3)).unwrap());
        assert!(!m("1^2", 3).divides(&m("1,2", 3)).unwrap());
        assert!(m("2,3", 3).divides(&m("1,2,3", 3)).unwrap());
        let other = Monomial::<u32>::parse("1", g(4)).unwrap();
        assert!(matches!(
            m("1", 3).divides(&other),
            Err(Error::GroundMismatch { .. })
        ));
    }

    #[test]
    fn minimalize_examples() {
        assert_eq!(ideal(&["1", "1,2"], 3), ideal(&["1"], 3));
        assert_eq!(ideal(&["1,2", "2,3"], 3).len(), 2);
        let j = ideal(&["1^2", "1^2,3", "2"], 3);
        assert_eq!(j.generators(), &[m("1^2", 3), m("2", 3)]);
        assert!(ideal(&[], 3).is_zero());
    }

    #[test]
    fn colon_examples() {
        assert_eq!(ideal(&["1,2"], 3).colon(&m("2", 3)).unwrap(), ideal(&["1"], 3));
        assert_eq!(
            ideal(&["1,2", "1,3"], 3).colon(&m("2,3", 3)).unwrap(),
            ideal(&["1"], 3)
        );
        assert_eq!(
            ideal(&["1^2", "2"], 3).colon(&m("1", 3)).unwrap(),
            ideal(&["1", "2"], 3)
        );
    }

    #[test]
    fn saturate_examples() {
        assert_eq!(
            ideal(&["1,2"], 2).saturate(&m("2", 2)).unwrap(),
            ideal(&["1"], 2)
        );
        assert_eq!(
            ideal(&["1^3,2"], 2).saturate(&m("1", 2)).unwrap(),
            ideal(&["2"], 2)
        );
        assert!(ideal(&["1"], 2).saturate(&m("1", 2)).unwrap().is_unit());
    }

    #[test]
    fn power_examples() {
        assert_eq!(ideal(&["1"], 2).power(3).unwrap(), ideal(&["1^3"], 2));
        assert_eq!(
            ideal(&["1", "2"], 2).power(2).unwrap(),
            ideal(&["1^2", "1,2", "2^2"], 2)
        );
        assert!(ideal(&["1"], 2).power(0).is_err());
    }

    #[test]
    fn power_overflow_is_rejected() {
        let w = Monomial::<u8>::parse("1^200", g(1)).unwrap();
        let j = MonomialIdeal::principal(w.clone());
        assert_eq!(j.power(2), Err(Error::Overflow));
        assert_eq!(w.pow(2), Err(Error::Overflow));
        assert!(Monomial::<u8>::parse("1^256", g(1)).is_err());
    }

    #[test]
    fn lex_examples() {
        assert_eq!(m("1,2", 3).lex_cmp(&m("1,3", 3)).unwrap(), Ordering::Greater);
        assert_eq!(
            m("1^2,3^2", 3).lex_cmp(&m("1,2,3^2", 3)).unwrap(),
            Ordering::Greater
        );
        let w = m("2,3^4", 3);
        assert_eq!(w.lex_cmp(&w).unwrap(), Ordering::Equal);
    }

    #[test]
    fn radical_examples() {
        assert_eq!(m("1^3,2", 5).radical().unwrap().indices(), &[1, 2]);
        assert_eq!(m("5", 5).radical().unwrap().indices(), &[5]);
        assert_eq!(m("2^2,4^2", 5).radical().unwrap().indices(), &[2, 4]);
        assert_eq!(m("", 5).radical(), Err(Error::UnitMonomial));
    }

    #[test]
    fn squarefree_construction() {
        let u = SquarefreeMonomial::parse("1,3,4,5", g(5)).unwrap();
        assert_eq!((u.min(), u.max(), u.degree()), (1, 5, 4));
        assert_eq!(u.to_monomial::<u32>(), m("1,3,4,5", 5));
        assert!(SquarefreeMonomial::parse("3,1", g(5)).is_err());
        assert!(SquarefreeMonomial::parse("", g(5)).is_err());
        assert!(SquarefreeMonomial::parse("6", g(5)).is_err());
        let v = SquarefreeMonomial::new("vars=2,4,5".parse().unwrap(), vec![4, 5]).unwrap();
        assert_eq!(v.relabel_contiguous().indices(), &[2, 3]);
    }

    #[test]
    fn restrict_moves_to_smaller_ground() {
        let j = ideal(&["3,4", "3,5"], 5);
        let small: GroundSet = "vars=3,4,5".parse().unwrap();
        let r = j.restrict(&small).unwrap();
        assert_eq!(r.ground(), &small);
        assert_eq!(r.len(), 2);
        assert!(ideal(&["1,3"], 5).restrict(&small).is_err());
    }
}
