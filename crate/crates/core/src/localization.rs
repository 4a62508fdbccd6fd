//! Monomial localization `I(P_A)` of squarefree principal Borel ideals.
//!
//! Localizing at `P_A = (x_i : i ∉ A)` inverts the variables of `A`; the
//! localized ideal lives over the complement of `A` and keeps the original
//! variable labels. For `I = (B_1(u))` it is again principal with Borel
//! generator `u_A`, computed one variable of `A` at a time by
//! [`localize_closed_form`]. [`localize_saturation_oracle`] computes the same
//! ideal as `I : (prod_{i in A} x_i)^∞` for arbitrary monomial ideals.

use std::fmt;

use crate::borel::expand_b1;
use crate::error::{Error, Result};
use crate::exponent::Exponent;
use crate::monomial::{join_labels, parse_labels, GroundSet, Monomial, MonomialIdeal, SquarefreeMonomial};

/// A set `A = {k_1 < ... < k_s}` of labels from an ambient ground set.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VariableSubset {
    members: Vec<usize>,
    ambient: GroundSet,
}

impl VariableSubset {
    pub fn new(ambient: GroundSet, mut members: Vec<usize>) -> Result<Self> {
        members.sort_unstable();
        if members.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidSubset("repeated label".into()));
        }
        if let Some(&bad) = members.iter().find(|&&k| !ambient.contains(k)) {
            return Err(Error::InvalidSubset(format!(
                "x_{bad} is not in the ambient ground set {ambient}"
            )));
        }
        Ok(VariableSubset { members, ambient })
    }

    pub fn empty(ambient: GroundSet) -> Self {
        VariableSubset {
            members: Vec::new(),
            ambient,
        }
    }

    /// Parses `A=1,5`, `1,5`, `A=` or the empty string.
    pub fn parse(text: &str, ambient: GroundSet) -> Result<Self> {
        let text = text.trim();
        let body = text.strip_prefix("A=").unwrap_or(text);
        VariableSubset::new(ambient, parse_labels(body)?)
    }

    /// Every subset of the ambient set, ordered by size and then lexicographically.
    pub fn all(ambient: &GroundSet) -> Vec<VariableSubset> {
        let labels = ambient.indices();
        let mut out = Vec::with_capacity(1 << labels.len().min(20));
        for size in 0..=labels.len() {
            let mut chosen = Vec::with_capacity(size);
            combinations(labels, size, 0, &mut chosen, &mut |c: &[usize]| {
                out.push(VariableSubset {
                    members: c.to_vec(),
                    ambient: ambient.clone(),
                })
            });
        }
        out
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn ambient(&self) -> &GroundSet {
        &self.ambient
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, label: usize) -> bool {
        self.members.binary_search(&label).is_ok()
    }

    pub fn is_subset_of(&self, other: &VariableSubset) -> bool {
        self.ambient == other.ambient && self.members.iter().all(|&k| other.contains(k))
    }

    /// Labels outside `A`: the generators of `P_A`.
    pub fn complement(&self) -> Vec<usize> {
        self.ambient
            .indices()
            .iter()
            .copied()
            .filter(|&l| !self.contains(l))
            .collect()
    }

    /// Ground set of the localized ring; `None` when `A` is everything.
    pub fn localized_ground(&self) -> Option<GroundSet> {
        self.ambient.without(&self.members)
    }

    /// `self ∖ other`, re-homed onto `ambient`.
    pub fn minus(&self, other: &VariableSubset, ambient: GroundSet) -> Result<VariableSubset> {
        let rest = self
            .members
            .iter()
            .copied()
            .filter(|&k| !other.contains(k))
            .collect();
        VariableSubset::new(ambient, rest)
    }
}

fn combinations(
    labels: &[usize],
    size: usize,
    start: usize,
    chosen: &mut Vec<usize>,
    emit: &mut dyn FnMut(&[usize]),
) {
    if chosen.len() == size {
        emit(chosen);
        return;
    }
    let needed = size - chosen.len();
    for p in start..=labels.len().saturating_sub(needed) {
        chosen.push(labels[p]);
        combinations(labels, size, p + 1, chosen, emit);
        chosen.pop();
    }
}

impl fmt::Display for VariableSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A={}", join_labels(&self.members))
    }
}

impl fmt::Debug for VariableSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in {}", self.ambient)
    }
}

/// Borel generator of a localized ideal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum LocalGenerator {
    /// Every generator became invertible: the localized ideal is the whole ring.
    Unit,
    Monomial(SquarefreeMonomial),
}

/// Result of localizing `(B_1(u))` at `P_A`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Localization {
    subset: VariableSubset,
    ground: Option<GroundSet>,
    generator: LocalGenerator,
}

impl Localization {
    pub fn subset(&self) -> &VariableSubset {
        &self.subset
    }

    /// Ground set of the localized ring (`None` if `A` covers everything).
    pub fn ground(&self) -> Option<&GroundSet> {
        self.ground.as_ref()
    }

    pub fn local_generator(&self) -> &LocalGenerator {
        &self.generator
    }

    /// `u_A`, or `None` for the unit ideal.
    pub fn generator(&self) -> Option<&SquarefreeMonomial> {
        match &self.generator {
            LocalGenerator::Unit => None,
            LocalGenerator::Monomial(m) => Some(m),
        }
    }

    pub fn is_unit(&self) -> bool {
        self.generator == LocalGenerator::Unit
    }

    /// Labels generating `P_A`.
    pub fn prime(&self) -> Vec<usize> {
        self.subset.complement()
    }

    /// Minimal generators of the localized ideal, `None` if the localized
    /// ring has no variables.
    pub fn ideal<E: Exponent>(&self) -> Result<Option<MonomialIdeal<E>>> {
        let Some(ground) = &self.ground else {
            return Ok(None);
        };
        Ok(Some(match &self.generator {
            LocalGenerator::Unit => MonomialIdeal::unit(ground.clone()),
            LocalGenerator::Monomial(v) => expand_b1(v, ground)?,
        }))
    }
}

/// One localization step at `x_k`: drop the unique `i_j` with
/// `i_{j-1} < k <= i_j` (`i_0 = 0`); no change when `k > max`.
fn localize_step(indices: &mut Vec<usize>, k: usize) -> bool {
    match indices.iter().position(|&i| k <= i) {
        Some(j) => {
            indices.remove(j);
            true
        }
        None => false,
    }
}

/// Closed-form `u_A`, processing `A` in increasing order.
pub fn localize_closed_form(u: &SquarefreeMonomial, a: &VariableSubset) -> Result<Localization> {
    localize_in_order(u, a, a.members())
}

/// Closed-form `u_A` applying the single-variable steps in the given order,
/// which must be a permutation of `A`.
pub fn localize_in_order(
    u: &SquarefreeMonomial,
    a: &VariableSubset,
    order: &[usize],
) -> Result<Localization> {
    u.ground().ensure_same(a.ambient())?;
    let mut sorted = order.to_vec();
    sorted.sort_unstable();
    if sorted != a.members() {
        return Err(Error::precondition(format!(
            "step order {order:?} is not a permutation of {a}"
        )));
    }
    let mut indices = u.indices().to_vec();
    for &k in order {
        let before = indices.len();
        let above_max = indices.last().is_none_or(|&m| k > m);
        let fired = localize_step(&mut indices, k);
        debug_assert_eq!(fired, !above_max);
        debug_assert_eq!(indices.len() + usize::from(fired), before);
    }
    let ground = a.localized_ground();
    let generator = match (&ground, indices.is_empty()) {
        (_, true) => LocalGenerator::Unit,
        (Some(g), false) => LocalGenerator::Monomial(
            SquarefreeMonomial::new(g.clone(), indices)
                .map_err(|e| Error::Internal(format!("localized generator left the ring: {e}")))?,
        ),
        (None, false) => {
            return Err(Error::Internal(
                "localizing at every variable left a non-unit generator".into(),
            ))
        }
    };
    Ok(Localization {
        subset: a.clone(),
        ground,
        generator,
    })
}

/// `J : (prod_{i in A} x_i)^∞`, moved onto the complement of `A`.
///
/// Returns `None` when `A` is the whole ground set.
pub fn localize_saturation_oracle<E: Exponent>(
    j: &MonomialIdeal<E>,
    a: &VariableSubset,
) -> Result<Option<MonomialIdeal<E>>> {
    j.ground().ensure_same(a.ambient())?;
    let w = Monomial::from_pairs(j.ground().clone(), a.members().iter().map(|&k| (k, 1)))?;
    let saturated = j.saturate(&w)?;
    if let Some(g) = saturated
        .generators()
        .iter()
        .find(|g| a.members().iter().any(|&k| !g.exponent(k).is_zero()))
    {
        return Err(Error::Internal(format!(
            "saturated generator {g} still involves a variable of {a}"
        )));
    }
    match a.localized_ground() {
        None => Ok(None),
        Some(ground) if saturated.is_unit() => Ok(Some(MonomialIdeal::unit(ground))),
        Some(ground) => saturated.restrict(&ground).map(Some),
    }
}

/// Checks `I(P_A)(P_{B∖A}) = I(P_B)` for `I = (B_1(u))`, both through the
/// closed form and through saturation.
pub fn compose_localizations_check(
    u: &SquarefreeMonomial,
    a: &VariableSubset,
    b: &VariableSubset,
) -> Result<bool> {
    if !a.is_subset_of(b) {
        return Err(Error::InvalidSubset(format!("{a} is not contained in {b}")));
    }
    let direct = localize_closed_form(u, b)?;
    let first = localize_closed_form(u, a)?;
    let closed_ok = match first.ground() {
        None => direct.ground().is_none() && direct.is_unit(),
        Some(ground) => {
            let rest = b.minus(a, ground.clone())?;
            let (generator, ground_after) = match first.generator() {
                None => (LocalGenerator::Unit, rest.localized_ground()),
                Some(v) => {
                    let second = localize_closed_form(v, &rest)?;
                    (second.generator.clone(), second.ground.clone())
                }
            };
            generator == direct.generator && ground_after == direct.ground
        }
    };

    let ideal = expand_b1::<u32>(u, u.ground())?;
    let sat_direct = localize_saturation_oracle(&ideal, b)?;
    let sat_ok = match localize_saturation_oracle(&ideal, a)? {
        None => sat_direct.is_none(),
        Some(partial) => {
            let rest = b.minus(a, partial.ground().clone())?;
            localize_saturation_oracle(&partial, &rest)? == sat_direct
        }
    };
    Ok(closed_ok && sat_ok)
}
