//! Principal k-strongly stable (Borel) ideals.
//!
//! The breadth-first closure [`closure_bk`] is the definition of `B_k(w)`.
//! [`member_bk`] is a partial-sum shortcut for membership in `B_k(u^k)`; it
//! is validated against the closure by the test suite before anything relies
//! on it.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::exponent::Exponent;
use crate::monomial::{GroundSet, Monomial, MonomialIdeal, SquarefreeMonomial};

/// The ideal `(B_k(w))` described by its Borel generator and exponent cap.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BorelPrincipalIdeal<E: Exponent> {
    generator: Monomial<E>,
    bound: u32,
}

impl<E: Exponent> BorelPrincipalIdeal<E> {
    pub fn new(generator: Monomial<E>, bound: u32) -> Result<Self> {
        check_bound(&generator, bound)?;
        Ok(BorelPrincipalIdeal { generator, bound })
    }

    /// `B_k(u^k)`, the k-th power of the squarefree principal ideal `(B_1(u))`.
    pub fn power_of(u: &SquarefreeMonomial, k: u32) -> Result<Self> {
        BorelPrincipalIdeal::new(u.to_monomial::<E>().pow(k)?, k)
    }

    pub fn generator(&self) -> &Monomial<E> {
        &self.generator
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn ground(&self) -> &GroundSet {
        self.generator.ground()
    }

    pub fn expand(&self) -> Result<MonomialIdeal<E>> {
        closure_bk(&self.generator, self.bound)
    }
}

fn check_bound<E: Exponent>(w: &Monomial<E>, k: u32) -> Result<()> {
    if k == 0 {
        return Err(Error::precondition("exponent bound must be positive"));
    }
    if let Some((label, e)) = w.pairs().find(|(_, e)| e.as_u64() > u64::from(k)) {
        return Err(Error::ExponentExceedsBound {
            label,
            exponent: e.as_u64(),
            bound: u64::from(k),
        });
    }
    Ok(())
}

fn check_support(u: &SquarefreeMonomial, ground: &GroundSet) -> Result<()> {
    match u.indices().iter().find(|&&i| !ground.contains(i)) {
        Some(&bad) => Err(Error::LabelNotInGround(bad)),
        None => Ok(()),
    }
}

/// `B_1(u)`: all `x_{j_1}...x_{j_d}` with `j_1 < ... < j_d` in `ground` and
/// `j_t <= i_t` for every position `t`.
pub fn expand_b1<E: Exponent>(
    u: &SquarefreeMonomial,
    ground: &GroundSet,
) -> Result<MonomialIdeal<E>> {
    check_support(u, ground)?;
    let caps = u.indices();
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(caps.len());
    enumerate_b1(ground.indices(), caps, 0, &mut chosen, &mut |js: &[usize]| {
        let mut exps = vec![E::zero(); ground.len()];
        for &j in js {
            exps[ground.position(j).expect("drawn from ground")] = E::one();
        }
        out.push(exps.into_boxed_slice());
    });
    Ok(MonomialIdeal::from_raw(ground.clone(), out))
}

fn enumerate_b1(
    labels: &[usize],
    caps: &[usize],
    start: usize,
    chosen: &mut Vec<usize>,
    emit: &mut dyn FnMut(&[usize]),
) {
    let t = chosen.len();
    if t == caps.len() {
        emit(chosen);
        return;
    }
    for p in start..labels.len() {
        if labels[p] > caps[t] {
            break;
        }
        chosen.push(labels[p]);
        enumerate_b1(labels, caps, p + 1, chosen, emit);
        chosen.pop();
    }
}

/// `|B_1(u)|` by dynamic programming over positions, without enumerating.
pub fn count_b1(u: &SquarefreeMonomial, ground: &GroundSet) -> Result<u64> {
    check_support(u, ground)?;
    let labels = ground.indices();
    // ways[p]: admissible prefixes whose last chosen label sits at position p
    let mut ways: Vec<u64> = labels
        .iter()
        .map(|&l| u64::from(l <= u.indices()[0]))
        .collect();
    for &cap in &u.indices()[1..] {
        let mut next = vec![0u64; labels.len()];
        let mut running = 0u64;
        for p in 0..labels.len() {
            if labels[p] <= cap {
                next[p] = running;
            }
            running += ways[p];
        }
        ways = next;
    }
    Ok(ways.iter().sum())
}

/// Smallest set containing `w` and closed under `w' -> x_i (w' / x_j)` for
/// `i < j`, `x_j | w'`, `deg_{x_i}(w') < k`.
pub fn closure_bk<E: Exponent>(w: &Monomial<E>, k: u32) -> Result<MonomialIdeal<E>> {
    check_bound(w, k)?;
    let cap = E::from_u64(u64::from(k))?;
    let n = w.ground().len();
    let start: Box<[E]> = w.exponents().into();
    let mut seen: HashSet<Box<[E]>> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(cur) = queue.pop_front() {
        for j in 1..n {
            if cur[j].is_zero() {
                continue;
            }
            for i in 0..j {
                if cur[i] >= cap {
                    continue;
                }
                let mut next = cur.clone();
                next[j] = next[j] - E::one();
                next[i] = next[i] + E::one();
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    Ok(MonomialIdeal::from_raw(
        w.ground().clone(),
        seen.into_iter().collect(),
    ))
}

/// Partial-sum membership test for `B_k(u^k)`: `w` belongs iff
/// `sum_{i <= i_j} deg_{x_i}(w) >= k j` for every `j`.
pub fn member_bk<E: Exponent>(w: &Monomial<E>, u_pow: &Monomial<E>, k: u32) -> Result<bool> {
    w.ground().ensure_same(u_pow.ground())?;
    check_bound(w, k)?;
    let kk = u64::from(k);
    if u_pow.is_one() || u_pow.exponents().iter().any(|e| !e.is_zero() && e.as_u64() != kk) {
        return Err(Error::precondition(format!(
            "{u_pow} is not the k-th power of a squarefree monomial for k = {k}"
        )));
    }
    if w.degree() != u_pow.degree() {
        return Err(Error::DegreeMismatch {
            expected: u_pow.degree(),
            found: w.degree(),
        });
    }
    let mut partial = 0u64;
    let mut reached = 0u64;
    for (we, ue) in w.exponents().iter().zip(u_pow.exponents()) {
        partial += we.as_u64();
        if !ue.is_zero() {
            reached += kk;
            if partial < reached {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Minimal generators of `(B_1(u))^k`, i.e. `B_k(u^k)`.
pub fn power_generators<E: Exponent>(u: &SquarefreeMonomial, k: u32) -> Result<MonomialIdeal<E>> {
    if k == 0 {
        return Err(Error::precondition("power needs k >= 1"));
    }
    BorelPrincipalIdeal::power_of(u, k)?.expand()
}

/// Checks the exponent cap and that every legal Borel move of every
/// generator stays inside the ideal.
pub fn is_k_strongly_stable<E: Exponent>(ideal: &MonomialIdeal<E>, k: u32) -> bool {
    let cap = u64::from(k);
    let raw = ideal.raw();
    let n = ideal.ground().len();
    let inside = |w: &[E]| raw.iter().any(|g| crate::monomial::divides_slice(g, w));
    for g in &raw {
        if g.iter().any(|e| e.as_u64() > cap) {
            return false;
        }
        for j in 1..n {
            if g[j].is_zero() {
                continue;
            }
            for i in 0..j {
                if g[i].as_u64() >= cap {
                    continue;
                }
                let mut moved = g.clone();
                moved[j] = moved[j] - E::one();
                moved[i] = moved[i] + E::one();
                if !inside(&moved) {
                    return false;
                }
            }
        }
    }
    true
}

/// Recovers the Borel generator of a principal k-strongly stable ideal: the
/// lex-minimal generator, accepted only if its closure is the whole `G(J)`.
pub fn extract_borel_generator<E: Exponent>(
    ideal: &MonomialIdeal<E>,
    k: u32,
) -> Result<Monomial<E>> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.single_degree().is_none() {
        return Err(Error::MixedDegrees);
    }
    let candidate = ideal.generators().last().expect("non-empty").clone();
    match closure_bk(&candidate, k) {
        Ok(closure) if &closure == ideal => Ok(candidate),
        Ok(_) | Err(Error::ExponentExceedsBound { .. }) => Err(Error::NotPrincipal),
        Err(e) => Err(e),
    }
}
