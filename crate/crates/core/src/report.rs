//! JSON documents emitted by the command line, schema version 1.
//!
//! Monomials are `{"index": exponent}` objects, primes are sorted index
//! arrays and `λ` is an integer or `"inf"`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::depth::QuotientProfile;
use crate::error::{Error, Result};
use crate::exponent::Exponent;
use crate::localization::Localization;
use crate::monomial::{Monomial, MonomialIdeal, SquarefreeMonomial};
use crate::oracle::{AssProfile, PersistenceReport, ValidationReport};
use crate::stability::{Lambda, StableSetEntry};

pub const SCHEMA_VERSION: u32 = 1;

/// `index -> exponent`, read back through string keys.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct MonomialJson(pub BTreeMap<usize, u64>);

impl<'de> Deserialize<'de> for MonomialJson {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = BTreeMap::<String, u64>::deserialize(d)?;
        raw.into_iter()
            .map(|(k, v)| {
                k.parse::<usize>()
                    .map(|k| (k, v))
                    .map_err(|_| serde::de::Error::custom(format!("bad variable index {k:?}")))
            })
            .collect::<std::result::Result<_, _>>()
            .map(MonomialJson)
    }
}

impl FromIterator<(usize, u64)> for MonomialJson {
    fn from_iter<I: IntoIterator<Item = (usize, u64)>>(iter: I) -> Self {
        MonomialJson(iter.into_iter().collect())
    }
}

impl MonomialJson {
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&usize, &u64)> {
        self.0.iter()
    }
}

pub fn monomial_json<E: Exponent>(m: &Monomial<E>) -> MonomialJson {
    m.pairs().map(|(l, e)| (l, e.as_u64())).collect()
}

pub fn squarefree_json(u: &SquarefreeMonomial) -> MonomialJson {
    u.indices().iter().map(|&l| (l, 1)).collect()
}

fn ideal_json<E: Exponent>(ideal: &MonomialIdeal<E>) -> Vec<MonomialJson> {
    ideal.generators().iter().map(monomial_json).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Document {
    pub schema: u32,
    #[serde(flatten)]
    pub output: Output,
}

impl Document {
    pub fn new(output: Output) -> Self {
        Document {
            schema: SCHEMA_VERSION,
            output,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: Document = serde_json::from_str(text).map_err(|e| Error::parse(format!("json: {e}")))?;
        if doc.schema != SCHEMA_VERSION {
            return Err(Error::parse(format!("unsupported schema version {}", doc.schema)));
        }
        Ok(doc)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verb", rename_all = "kebab-case")]
pub enum Output {
    Expand(GeneratorsJson),
    Power(GeneratorsJson),
    Localize(LocalizeJson),
    ColonProfile(ColonProfileJson),
    Lambda(LambdaJson),
    EverAssociated(EverAssociatedJson),
    StableSet(StableSetJson),
    Table(StableSetJson),
    Ass(AssJson),
    Persist(PersistJson),
    Validate(ValidateJson),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorsJson {
    pub u: MonomialJson,
    pub ground: Vec<usize>,
    pub k: u32,
    pub count: usize,
    pub generators: Vec<MonomialJson>,
}

impl GeneratorsJson {
    pub fn new<E: Exponent>(u: &SquarefreeMonomial, k: u32, ideal: &MonomialIdeal<E>) -> Self {
        GeneratorsJson {
            u: squarefree_json(u),
            ground: u.ground().indices().to_vec(),
            k,
            count: ideal.len(),
            generators: ideal_json(ideal),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalizeJson {
    pub u: MonomialJson,
    #[serde(rename = "A")]
    pub a: Vec<usize>,
    pub prime: Vec<usize>,
    /// Labels of the localized ring; empty when `A` is everything.
    pub ground: Vec<usize>,
    /// `null` when the localized ideal is the unit ideal.
    #[serde(rename = "uA")]
    pub u_a: Option<MonomialJson>,
    pub generators: Vec<MonomialJson>,
}

impl LocalizeJson {
    pub fn new(u: &SquarefreeMonomial, loc: &Localization) -> Result<Self> {
        let generators = match loc.ideal::<crate::Exp>()? {
            Some(ideal) => ideal_json(&ideal),
            None => Vec::new(),
        };
        Ok(LocalizeJson {
            u: squarefree_json(u),
            a: loc.subset().members().to_vec(),
            prime: loc.prime(),
            ground: loc.ground().map(|g| g.indices().to_vec()).unwrap_or_default(),
            u_a: loc.generator().map(squarefree_json),
            generators,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColonProfileJson {
    pub u: MonomialJson,
    pub n: usize,
    pub k: u32,
    pub quotient_sets: Vec<Vec<usize>>,
    pub q: usize,
    pub depth: usize,
    pub m_in_ass: bool,
}

impl ColonProfileJson {
    pub fn new(u: &SquarefreeMonomial, k: u32, p: &QuotientProfile) -> Self {
        ColonProfileJson {
            u: squarefree_json(u),
            n: p.n,
            k,
            quotient_sets: p.quotient_sets.clone(),
            q: p.q,
            depth: p.depth,
            m_in_ass: p.m_in_ass,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LambdaJson {
    pub u: MonomialJson,
    pub n: usize,
    /// The prime is `P_A`; `null` means the maximal ideal.
    #[serde(rename = "A")]
    pub a: Option<Vec<usize>>,
    pub prime: Vec<usize>,
    pub lambda: Lambda,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EverAssociatedJson {
    pub u: MonomialJson,
    pub n: usize,
    pub ever_associated: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryJson {
    #[serde(rename = "A")]
    pub a: Vec<usize>,
    #[serde(rename = "uA")]
    pub u_a: Option<MonomialJson>,
    pub prime: Vec<usize>,
    pub member: bool,
    pub lambda: Lambda,
}

impl From<&StableSetEntry> for EntryJson {
    fn from(e: &StableSetEntry) -> Self {
        EntryJson {
            a: e.subset.members().to_vec(),
            u_a: e.u_a().map(squarefree_json),
            prime: e.prime(),
            member: e.member,
            lambda: e.lambda,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StableSetJson {
    pub u: MonomialJson,
    pub n: usize,
    /// `size-lex` or `reference`.
    pub order: String,
    pub entries: Vec<EntryJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessedPrimeJson {
    pub prime: Vec<usize>,
    pub witness: MonomialJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowerAssJson {
    pub k: u32,
    pub count: usize,
    pub primes: Vec<WitnessedPrimeJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AssJson {
    pub u: MonomialJson,
    pub n: usize,
    pub kmax: u32,
    pub powers: Vec<PowerAssJson>,
    pub stabilization: Option<u32>,
}

impl From<&AssProfile> for AssJson {
    fn from(p: &AssProfile) -> Self {
        AssJson {
            u: squarefree_json(&p.u),
            n: p.u.ground().len(),
            kmax: p.kmax,
            powers: p
                .powers
                .iter()
                .map(|pa| PowerAssJson {
                    k: pa.k,
                    count: pa.primes.len(),
                    primes: pa
                        .primes
                        .iter()
                        .map(|ap| WitnessedPrimeJson {
                            prime: ap.prime.clone(),
                            witness: monomial_json(&ap.witness),
                        })
                        .collect(),
                })
                .collect(),
            stabilization: p.stabilization,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ViolationJson {
    pub k: u32,
    pub prime: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PersistJson {
    pub u: MonomialJson,
    pub n: usize,
    pub kmax: u32,
    pub ok: bool,
    pub violations: Vec<ViolationJson>,
}

impl From<&PersistenceReport> for PersistJson {
    fn from(r: &PersistenceReport) -> Self {
        PersistJson {
            u: squarefree_json(&r.u),
            n: r.u.ground().len(),
            kmax: r.kmax,
            ok: r.violations.is_empty(),
            violations: r
                .violations
                .iter()
                .map(|v| ViolationJson {
                    k: v.k,
                    prime: v.prime.clone(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MismatchJson {
    pub check: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidateJson {
    pub u: MonomialJson,
    pub n: usize,
    pub kmax: u32,
    pub checks: usize,
    pub ok: bool,
    pub mismatches: Vec<MismatchJson>,
}

impl From<&ValidationReport> for ValidateJson {
    fn from(r: &ValidationReport) -> Self {
        ValidateJson {
            u: squarefree_json(&r.u),
            n: r.u.ground().len(),
            kmax: r.kmax,
            checks: r.checks,
            ok: r.is_ok(),
            mismatches: r
                .mismatches
                .iter()
                .map(|m| MismatchJson {
                    check: m.check.clone(),
                    detail: m.detail.clone(),
                })
                .collect(),
        }
    }
}

fn mono_text(m: &MonomialJson) -> String {
    if m.is_empty() {
        return "1".into();
    }
    m.iter()
        .map(|(l, e)| if *e == 1 { format!("x_{l}") } else { format!("x_{l}^{e}") })
        .collect()
}

fn set_text(labels: &[usize]) -> String {
    let inner: Vec<String> = labels.iter().map(usize::to_string).collect();
    format!("{{{}}}", inner.join(","))
}

fn prime_text(labels: &[usize]) -> String {
    let inner: Vec<String> = labels.iter().map(|l| format!("x_{l}")).collect();
    format!("({})", inner.join(","))
}

fn columns(rows: &[Vec<String>]) -> String {
    let widths: Vec<usize> = (0..rows[0].len())
        .map(|c| rows.iter().map(|r| r[c].chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in rows {
        let cells: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(cell, &w)| format!("{cell:<w$}"))
            .collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}

fn generator_lines(out: &mut String, gens: &[MonomialJson]) {
    for g in gens {
        let _ = writeln!(out, "{}", mono_text(g));
    }
}

fn stable_table(s: &StableSetJson) -> String {
    let mut rows = vec![vec!["A".to_string(), "u_A".into(), "P_A".into(), "lambda".into()]];
    for e in &s.entries {
        rows.push(vec![
            set_text(&e.a),
            e.u_a.as_ref().map_or("1".to_string(), mono_text),
            prime_text(&e.prime),
            e.lambda.to_string(),
        ]);
    }
    columns(&rows)
}

impl Output {
    /// Plain-text rendering used by `--format table`.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        match self {
            Output::Expand(g) | Output::Power(g) => {
                let _ = writeln!(out, "# {} generators", g.count);
                generator_lines(&mut out, &g.generators);
            }
            Output::Localize(l) => {
                let _ = writeln!(out, "A      {}", set_text(&l.a));
                let _ = writeln!(out, "P_A    {}", prime_text(&l.prime));
                let _ = writeln!(out, "ring   {}", set_text(&l.ground));
                let _ = writeln!(out, "u_A    {}", l.u_a.as_ref().map_or("1".to_string(), mono_text));
                let _ = writeln!(out, "# {} generators", l.generators.len());
                generator_lines(&mut out, &l.generators);
            }
            Output::ColonProfile(c) => {
                let _ = writeln!(out, "q         {}", c.q);
                let _ = writeln!(out, "depth     {}", c.depth);
                let _ = writeln!(out, "m_in_ass  {}", c.m_in_ass);
                for (i, s) in c.quotient_sets.iter().enumerate() {
                    let _ = writeln!(out, "{:>4}  {}", i + 1, set_text(s));
                }
            }
            Output::Lambda(l) => {
                let _ = writeln!(out, "{}", l.lambda);
            }
            Output::EverAssociated(e) => {
                let _ = writeln!(out, "{}", e.ever_associated);
            }
            Output::StableSet(s) | Output::Table(s) => out = stable_table(s),
            Output::Ass(a) => {
                for p in &a.powers {
                    let primes: Vec<String> = p.primes.iter().map(|ap| prime_text(&ap.prime)).collect();
                    let _ = writeln!(out, "k={}  {}  {}", p.k, p.count, primes.join(" "));
                }
                let stab = a.stabilization.map_or("none".to_string(), |k| k.to_string());
                let _ = writeln!(out, "stabilization  {stab}");
            }
            Output::Persist(p) => {
                if p.ok {
                    let _ = writeln!(out, "ok: no violations up to k={}", p.kmax);
                }
                for v in &p.violations {
                    let _ = writeln!(out, "violation: {} in Ass(I^{}) but not Ass(I^{})", prime_text(&v.prime), v.k, v.k + 1);
                }
            }
            Output::Validate(v) => {
                let _ = writeln!(out, "{} checks, {} mismatches", v.checks, v.mismatches.len());
                for m in &v.mismatches {
                    let _ = writeln!(out, "mismatch [{}]: {}", m.check, m.detail);
                }
            }
        }
        out
    }
}
