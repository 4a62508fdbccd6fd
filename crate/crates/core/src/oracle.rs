//! Brute-force associated primes of monomial ideals.
//!
//! Two independent layers: an irreducible decomposition by generator
//! splitting, whose irredundant components give the associated primes by
//! their radicals, and a bounded witness search confirming each prime as an
//! exact colon `J : w`. None of the closed forms from the other modules are
//! used here, except inside [`Oracle::cross_validate`], whose job is to
//! compare them against the brute force.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt;

use rayon::prelude::*;

use crate::borel::expand_b1;
use crate::depth::max_ideal_in_ass_formula;
use crate::error::{Error, Result};
use crate::exponent::Exponent;
use crate::localization::{localize_saturation_oracle, VariableSubset};
use crate::monomial::{divides_slice, join_labels, minimalize_slices, GroundSet, Monomial, MonomialIdeal, SquarefreeMonomial};
use crate::stability::{lambda_of_prime, stable_membership_combinatorial, stable_membership_direct, Lambda};
use crate::Exp;

/// Irreducible monomial ideal `(x_{i_1}^{e_1}, ..., x_{i_r}^{e_r})`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IrreducibleComponent<E> {
    powers: Vec<(usize, E)>,
}

impl<E: Exponent> IrreducibleComponent<E> {
    /// `(label, exponent)` pairs in increasing label order.
    pub fn powers(&self) -> &[(usize, E)] {
        &self.powers
    }

    /// The radical, as a sorted label list.
    pub fn support(&self) -> Vec<usize> {
        self.powers.iter().map(|&(l, _)| l).collect()
    }

    pub fn contains(&self, w: &Monomial<E>) -> bool {
        self.powers.iter().any(|&(l, e)| w.exponent(l) >= e)
    }

    /// `self ⊆ other` as ideals.
    pub fn is_contained_in(&self, other: &IrreducibleComponent<E>) -> bool {
        self.powers
            .iter()
            .all(|&(l, e)| other.powers.iter().any(|&(l2, e2)| l2 == l && e2 <= e))
    }

    pub fn to_ideal(&self, ground: &GroundSet) -> Result<MonomialIdeal<E>> {
        let gens = self
            .powers
            .iter()
            .map(|&(l, e)| Monomial::from_pairs(ground.clone(), [(l, e.as_u64())]))
            .collect::<Result<Vec<_>>>()?;
        MonomialIdeal::new(ground.clone(), gens)
    }
}

impl<E: Exponent> fmt::Display for IrreducibleComponent<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .powers
            .iter()
            .map(|(l, e)| if e.is_one() { format!("x_{l}") } else { format!("x_{l}^{e}") })
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl<E: Exponent> fmt::Debug for IrreducibleComponent<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// An associated prime together with a monomial `w` with `J : w = P`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssociatedPrime<E: Exponent> {
    pub prime: Vec<usize>,
    pub witness: Monomial<E>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerAss {
    pub k: u32,
    pub primes: Vec<AssociatedPrime<Exp>>,
}

impl PowerAss {
    pub fn prime_set(&self) -> BTreeSet<Vec<usize>> {
        self.primes.iter().map(|p| p.prime.clone()).collect()
    }

    pub fn contains(&self, prime: &[usize]) -> bool {
        self.primes.iter().any(|p| p.prime == prime)
    }
}

/// `Ass(I^k)` for `k = 1..=kmax`, `I = (B_1(u))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssProfile {
    pub u: SquarefreeMonomial,
    pub kmax: u32,
    pub powers: Vec<PowerAss>,
    /// Least `k < kmax` from which `Ass(I^k)` stays constant up to `kmax`.
    pub stabilization: Option<u32>,
}

impl AssProfile {
    pub fn at(&self, k: u32) -> Option<&PowerAss> {
        self.powers.get((k as usize).checked_sub(1)?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PersistenceViolation {
    /// The prime is in `Ass(I^k)` but not in `Ass(I^{k+1})`.
    pub k: u32,
    pub prime: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PersistenceReport {
    pub u: SquarefreeMonomial,
    pub kmax: u32,
    pub violations: Vec<PersistenceViolation>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub check: String,
    /// Minimal reproducer in CLI flag syntax plus the disagreeing values.
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub u: SquarefreeMonomial,
    pub kmax: u32,
    pub checks: usize,
    pub mismatches: Vec<Mismatch>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Brute-force engine with resource ceilings.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Oracle {
    /// Largest generator count accepted by the decomposition.
    pub max_generators: usize,
    /// Largest witness-search box, `prod (D_i + 1)`.
    pub max_box: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle {
            max_generators: 5_000,
            max_box: 20_000_000,
        }
    }
}

type Raw<E> = Vec<Box<[E]>>;

fn is_pure_power<E: Exponent>(g: &[E]) -> bool {
    g.iter().filter(|e| !e.is_zero()).count() <= 1
}

fn prime_label(prime: &[usize]) -> String {
    format!("({})", prime.iter().map(|l| format!("x_{l}")).collect::<Vec<_>>().join(","))
}

impl Oracle {
    pub fn new(max_generators: usize) -> Self {
        Oracle {
            max_generators,
            ..Oracle::default()
        }
    }

    fn check_ideal<E: Exponent>(&self, j: &MonomialIdeal<E>) -> Result<()> {
        if j.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        if j.is_unit() {
            return Err(Error::UnitIdeal);
        }
        if j.len() > self.max_generators {
            return Err(Error::LimitExceeded {
                what: "generator count",
                limit: self.max_generators,
                actual: j.len(),
            });
        }
        Ok(())
    }

    /// Irredundant irreducible decomposition by repeated splitting
    /// `J = (J, x_i^{a_i}) ∩ (J, g / x_i^{a_i})` of the lex-largest generator
    /// `g` that is not a pure power, at its lowest variable `x_i`.
    pub fn irreducible_decomposition<E: Exponent>(
        &self,
        j: &MonomialIdeal<E>,
    ) -> Result<Vec<IrreducibleComponent<E>>> {
        self.check_ideal(j)?;
        let ground = j.ground();
        let mut found: BTreeSet<IrreducibleComponent<E>> = BTreeSet::new();
        let mut visited: HashSet<Raw<E>> = HashSet::new();
        let mut stack: Vec<Raw<E>> = vec![j.raw()];
        while let Some(gens) = stack.pop() {
            if visited.contains(&gens) {
                continue;
            }
            match gens.iter().position(|g| !is_pure_power(g)) {
                None => {
                    let mut powers: Vec<(usize, E)> = gens
                        .iter()
                        .map(|g| {
                            let p = g.iter().position(|e| !e.is_zero()).expect("no unit generator");
                            (ground.label(p), g[p])
                        })
                        .collect();
                    powers.sort_unstable();
                    found.insert(IrreducibleComponent { powers });
                }
                Some(idx) => {
                    let g = &gens[idx];
                    let p = g.iter().position(|e| !e.is_zero()).expect("non-pure power");
                    let mut left = vec![E::zero(); g.len()];
                    left[p] = g[p];
                    let mut right = g.clone();
                    right[p] = E::zero();
                    for piece in [left.into_boxed_slice(), right] {
                        let mut next = gens.clone();
                        next.push(piece);
                        stack.push(minimalize_slices(next));
                    }
                }
            }
            visited.insert(gens);
        }
        let all: Vec<_> = found.into_iter().collect();
        Ok(all
            .iter()
            .filter(|c| !all.iter().any(|o| o != *c && o.is_contained_in(c)))
            .cloned()
            .collect())
    }

    fn box_size<E: Exponent>(&self, bounds: &[E]) -> Result<usize> {
        let mut size = 1usize;
        for b in bounds {
            size = size.saturating_mul(b.as_u64() as usize + 1);
        }
        if size > self.max_box {
            return Err(Error::LimitExceeded {
                what: "witness search box",
                limit: self.max_box,
                actual: size,
            });
        }
        Ok(size)
    }

    /// `Ass(S/J)`: radicals of the irredundant irreducible components, each
    /// confirmed by a witness `w` with `J : w` exactly the prime. Primes are
    /// ordered by size, then lexicographically.
    pub fn associated_primes<E: Exponent>(
        &self,
        j: &MonomialIdeal<E>,
    ) -> Result<Vec<AssociatedPrime<E>>> {
        let components = self.irreducible_decomposition(j)?;
        let mut primes: Vec<Vec<usize>> = components.iter().map(|c| c.support()).collect();
        primes.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        primes.dedup();

        let ground = j.ground();
        let n = ground.len();
        let mask_of = |prime: &[usize]| -> u128 {
            prime
                .iter()
                .map(|&l| 1u128 << ground.position(l).expect("prime labels come from ground"))
                .fold(0, |a, b| a | b)
        };
        let mut wanted: HashMap<u128, usize> =
            primes.iter().enumerate().map(|(i, p)| (mask_of(p), i)).collect();
        let mut witnesses: Vec<Option<Monomial<E>>> = vec![None; primes.len()];

        let gens = j.raw();
        let bounds = j.max_exponents();
        self.box_size(&bounds)?;
        let inside = |w: &[E]| gens.iter().any(|g| divides_slice(g, w));
        let mut w = vec![E::zero(); n];
        'search: loop {
            if !wanted.is_empty() && !inside(&w) {
                let mut mask = 0u128;
                for i in 0..n {
                    w[i] = w[i] + E::one();
                    if inside(&w) {
                        mask |= 1 << i;
                    }
                    w[i] = w[i] - E::one();
                }
                if let Some(&idx) = wanted.get(&mask) {
                    let candidate = Monomial::from_raw(ground.clone(), w.clone().into());
                    if colon_is_prime(j, &candidate, &primes[idx])? {
                        witnesses[idx] = Some(candidate);
                        wanted.remove(&mask);
                    }
                }
            }
            if wanted.is_empty() {
                break;
            }
            // odometer step through the box
            for i in 0..n {
                if w[i] < bounds[i] {
                    w[i] = w[i] + E::one();
                    continue 'search;
                }
                w[i] = E::zero();
            }
            break;
        }
        primes
            .into_iter()
            .zip(witnesses)
            .map(|(prime, witness)| match witness {
                Some(witness) => Ok(AssociatedPrime { prime, witness }),
                None => Err(Error::Internal(format!(
                    "no witness for {} in {j}",
                    prime_label(&prime)
                ))),
            })
            .collect()
    }

    /// Whether the maximal ideal of `J`'s ring is associated: some
    /// `w ∉ J` with `x_i w ∈ J` for every variable.
    pub fn m_in_ass<E: Exponent>(&self, j: &MonomialIdeal<E>) -> Result<bool> {
        self.check_ideal(j)?;
        Ok(self.socle_witness(j)?.is_some())
    }

    /// A monomial `w ∉ J` annihilated into `J` by every variable.
    pub fn socle_witness<E: Exponent>(&self, j: &MonomialIdeal<E>) -> Result<Option<Monomial<E>>> {
        let gens = j.raw();
        let bounds = j.max_exponents();
        self.box_size(&bounds)?;
        let n = bounds.len();
        let inside = |w: &[E]| gens.iter().any(|g| divides_slice(g, w));
        let mut w = vec![E::zero(); n];
        'search: loop {
            if !inside(&w) {
                let all = (0..n).all(|i| {
                    let mut v = w.clone();
                    v[i] = v[i] + E::one();
                    inside(&v)
                });
                if all {
                    return Ok(Some(Monomial::from_raw(j.ground().clone(), w.into())));
                }
            }
            for i in 0..n {
                if w[i] < bounds[i] {
                    w[i] = w[i] + E::one();
                    continue 'search;
                }
                w[i] = E::zero();
            }
            return Ok(None);
        }
    }

    fn power_of_b1(&self, u: &SquarefreeMonomial, k: u32) -> Result<MonomialIdeal<Exp>> {
        expand_b1::<Exp>(u, u.ground())?.power(k)
    }

    /// `Ass(I^k)` for `k = 1..=kmax`.
    pub fn ass_profile(&self, u: &SquarefreeMonomial, kmax: u32) -> Result<AssProfile> {
        if kmax == 0 {
            return Err(Error::precondition("kmax must be at least 1"));
        }
        let powers: Vec<PowerAss> = (1..=kmax)
            .into_par_iter()
            .map(|k| {
                let ideal = self.power_of_b1(u, k)?;
                Ok(PowerAss {
                    k,
                    primes: self.associated_primes(&ideal)?,
                })
            })
            .collect::<Result<_>>()?;
        let last = powers.last().expect("kmax >= 1").prime_set();
        let mut stabilization = None;
        for p in powers.iter().rev().skip(1) {
            if p.prime_set() == last {
                stabilization = Some(p.k);
            } else {
                break;
            }
        }
        Ok(AssProfile {
            u: u.clone(),
            kmax,
            powers,
            stabilization,
        })
    }

    /// Reports every prime of `Ass(I^k)` missing from `Ass(I^{k+1})`, `k < kmax`.
    pub fn persistence_scan(&self, u: &SquarefreeMonomial, kmax: u32) -> Result<PersistenceReport> {
        let profile = self.ass_profile(u, kmax)?;
        Ok(persistence_from_profile(&profile))
    }

    /// Compares every closed form against the brute force for `k <= kmax`.
    pub fn cross_validate(&self, u: &SquarefreeMonomial, kmax: u32) -> Result<ValidationReport> {
        if !u.ground().is_contiguous() {
            return Err(Error::precondition("cross validation needs u over [n]"));
        }
        let n = u.ground().len();
        let profile = self.ass_profile(u, kmax)?;
        let repro = |extra: &str| {
            format!("--u {} --n {n}{extra}", u.to_text())
        };
        let mut checks = 0usize;
        let mut mismatches = Vec::new();

        let maximal: Vec<usize> = u.ground().indices().to_vec();
        for p in &profile.powers {
            let formula = max_ideal_in_ass_formula(u, p.k)?;
            let ideal = self.power_of_b1(u, p.k)?;
            let socle = self.m_in_ass(&ideal)?;
            let listed = p.contains(&maximal);
            checks += 1;
            if formula != listed || socle != listed {
                mismatches.push(Mismatch {
                    check: "maximal ideal: q = n-1 vs oracle".into(),
                    detail: format!(
                        "{} --k {}: formula {formula}, decomposition {listed}, socle {socle}",
                        repro(""),
                        p.k
                    ),
                });
            }
        }

        let base = expand_b1::<Exp>(u, u.ground())?;
        let per_subset: Vec<(usize, Vec<Mismatch>)> = VariableSubset::all(u.ground())
            .into_par_iter()
            .filter(|a| a.len() < n)
            .map(|a| self.validate_subset(u, &a, &base, &profile, &repro(&format!(" --A {}", join_labels(a.members())))))
            .collect::<Result<_>>()?;
        for (c, m) in per_subset {
            checks += c;
            mismatches.extend(m);
        }

        let persistence = persistence_from_profile(&profile);
        checks += 1;
        for v in persistence.violations {
            mismatches.push(Mismatch {
                check: "persistence".into(),
                detail: format!("{}: {} in Ass(I^{}) but not in Ass(I^{})", repro(""), prime_label(&v.prime), v.k, v.k + 1),
            });
        }

        Ok(ValidationReport {
            u: u.clone(),
            kmax,
            checks,
            mismatches,
        })
    }

    fn validate_subset(
        &self,
        u: &SquarefreeMonomial,
        a: &VariableSubset,
        base: &MonomialIdeal<Exp>,
        profile: &AssProfile,
        repro: &str,
    ) -> Result<(usize, Vec<Mismatch>)> {
        let mut checks = 0;
        let mut out = Vec::new();
        let prime = a.complement();
        let local = localize_saturation_oracle(base, a)?.expect("A is a proper subset");

        for p in &profile.powers {
            let global = p.contains(&prime);
            let local_m = if local.is_unit() {
                false
            } else {
                self.m_in_ass(&local.power(p.k)?)?
            };
            checks += 1;
            if global != local_m {
                out.push(Mismatch {
                    check: "localization commutes with Ass".into(),
                    detail: format!(
                        "{repro} --k {}: P_A in Ass(I^k) is {global}, maximal ideal in Ass(I(P_A)^k) is {local_m}",
                        p.k
                    ),
                });
            }
        }

        let direct = stable_membership_direct(u, a)?;
        let combinatorial = stable_membership_combinatorial(u, a)?;
        let lambda = lambda_of_prime(u, a)?;
        checks += 1;
        if direct != combinatorial || direct != lambda.is_finite() {
            out.push(Mismatch {
                check: "stable-set membership routes".into(),
                detail: format!("{repro}: direct {direct}, combinatorial {combinatorial}, lambda {lambda}"),
            });
        }

        let first_seen = profile.powers.iter().find(|p| p.contains(&prime)).map(|p| p.k);
        checks += 1;
        let consistent = match (lambda, first_seen) {
            (Lambda::Finite(l), Some(k)) => l == k,
            (Lambda::Finite(l), None) => l > profile.kmax,
            (Lambda::Infinite, None) => true,
            (Lambda::Infinite, Some(_)) => false,
        };
        if !consistent {
            out.push(Mismatch {
                check: "lambda is the first power containing P_A".into(),
                detail: format!(
                    "{repro}: lambda {lambda}, oracle first power {}",
                    first_seen.map_or("none".to_string(), |k| k.to_string())
                ),
            });
        }
        Ok((checks, out))
    }
}

fn colon_is_prime<E: Exponent>(j: &MonomialIdeal<E>, w: &Monomial<E>, prime: &[usize]) -> Result<bool> {
    let colon = j.colon(w)?;
    let labels: BTreeMap<usize, ()> = prime.iter().map(|&l| (l, ())).collect();
    Ok(colon.len() == prime.len()
        && colon.generators().iter().all(|g| {
            let pairs: Vec<_> = g.pairs().collect();
            pairs.len() == 1 && pairs[0].1.is_one() && labels.contains_key(&pairs[0].0)
        }))
}

fn persistence_from_profile(profile: &AssProfile) -> PersistenceReport {
    let mut violations = Vec::new();
    for pair in profile.powers.windows(2) {
        for p in &pair[0].primes {
            if !pair[1].contains(&p.prime) {
                violations.push(PersistenceViolation {
                    k: pair[0].k,
                    prime: p.prime.clone(),
                });
            }
        }
    }
    PersistenceReport {
        u: profile.u.clone(),
        kmax: profile.kmax,
        violations,
    }
}
