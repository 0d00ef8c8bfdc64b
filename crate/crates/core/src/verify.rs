//! Exhaustive and randomized checks of the local invariants.
//!
//! Every check returns a [`VerificationReport`] whose verdict is `pass` only
//! if each evidence row holds. Work items are pure, so partition sweeps and
//! sample batches run in parallel and are collected back in input order.

use std::collections::BTreeMap;

use indexmap::IndexMap;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::artinian::{local_components, local_ideal, minimal_generator_count, socle_dimension, universal_family_multiplicity, LocalQuotient};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{buchberger, initial_ideal, GroebnerBasis};
use crate::monomial::{Monomial, MonomialOrder};
use crate::parse::parse_ideal;
use crate::polynomial::Polynomial;
use crate::report::{EvidenceRow, Value, Verdict, VerificationReport};
use crate::staircase::{b2_bound, corners, is_triangular, monomial_ideal_of, optimal_witness, partitions_of, Partition};

/// Default size up to which partition checks also run the algebra engine.
pub const DEFAULT_CROSSCHECK_CUTOFF: u32 = 10;

/// Invariants of one rational local component.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentAnalysis {
    pub point: String,
    /// `n_p`
    pub local_length: usize,
    pub nilpotency_index: u32,
    pub e: usize,
    pub b1: usize,
    /// `b2` as the socle dimension.
    pub b2_socle: usize,
    /// `b2` as `e - 1`.
    pub b2_generators: usize,
    pub mu: u64,
    /// Socle dimension equals `e - 1`.
    pub lemma_holds: bool,
    /// `μ ≤ n_p`
    pub haiman_holds: bool,
    pub mu_equals_length: bool,
}

impl ComponentAnalysis {
    fn of(gb: &GroebnerBasis, lq: &LocalQuotient) -> Result<Self> {
        let ideal = local_ideal(gb, lq)?;
        let e = minimal_generator_count(&ideal);
        let socle = socle_dimension(lq);
        let mu = universal_family_multiplicity(socle)?;
        let n = lq.dim();
        Ok(ComponentAnalysis {
            point: lq.point().to_string(),
            local_length: n,
            nilpotency_index: lq.nilpotency_index(),
            e,
            b1: e,
            b2_socle: socle,
            b2_generators: e.saturating_sub(1),
            mu,
            lemma_holds: e >= 1 && socle == e - 1,
            haiman_holds: mu <= n as u64,
            mu_equals_length: mu == n as u64,
        })
    }

    pub fn passed(&self) -> bool {
        self.lemma_holds && self.haiman_holds
    }
}

/// Full analysis of an ideal: its Gröbner basis and every rational local component.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealAnalysis {
    pub ideal: String,
    pub field: Field,
    pub order: MonomialOrder,
    pub groebner_basis: Vec<String>,
    pub colength: usize,
    /// Length carried by points with coordinates outside the field.
    pub non_rational_length: usize,
    pub components: Vec<ComponentAnalysis>,
    pub verdict: Verdict,
}

impl IdealAnalysis {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("analysis serializes")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }
}

fn analyze_basis(text: &str, gb: &GroebnerBasis) -> Result<IdealAnalysis> {
    let dec = local_components(gb)?;
    let components = dec
        .components
        .iter()
        .map(|lq| ComponentAnalysis::of(gb, lq))
        .collect::<Result<Vec<_>>>()?;
    let verdict = Verdict::from_bool(components.iter().all(ComponentAnalysis::passed));
    Ok(IdealAnalysis {
        ideal: text.trim().to_string(),
        field: gb.field(),
        order: gb.order(),
        groebner_basis: gb.generators().iter().map(|g| g.display_with(gb.order())).collect(),
        colength: dec.colength,
        non_rational_length: dec.non_rational_dim,
        components,
        verdict,
    })
}

fn basis_of(text: &str, field: Field, order: MonomialOrder) -> Result<GroebnerBasis> {
    let gens = parse_ideal(text, field)?;
    Ok(buchberger(&gens, order))
}

/// Parses, computes a Gröbner basis and analyzes every rational component.
pub fn analyze_ideal(text: &str, field: Field, order: MonomialOrder) -> Result<IdealAnalysis> {
    analyze_basis(text, &basis_of(text, field, order)?)
}

/// Socle dimension equals `e - 1` at each rational local component.
pub fn verify_lemma_b2(text: &str, field: Field, order: MonomialOrder) -> Result<VerificationReport> {
    let analysis = analyze_ideal(text, field, order)?;
    let mut report = VerificationReport::new("socle_generators", analysis.ideal.clone());
    report.summarize("field", field.to_string());
    report.summarize("order", order.to_string());
    report.summarize("colength", analysis.colength);
    report.summarize("non_rational_length", analysis.non_rational_length);
    for c in &analysis.components {
        report.push(
            EvidenceRow::new(c.point.clone(), "socle = e - 1")
                .with("n_p", c.local_length)
                .with("r", c.nilpotency_index)
                .with("socle", c.b2_socle)
                .with("e", c.e)
                .holds(c.lemma_holds),
        );
    }
    Ok(report)
}

/// `μ = C(b2 + 1, 2)` and `μ ≤ n_p` at each rational local component.
pub fn verify_theorem1(text: &str, field: Field, order: MonomialOrder) -> Result<VerificationReport> {
    let analysis = analyze_ideal(text, field, order)?;
    let mut report = VerificationReport::new("multiplicity", analysis.ideal.clone());
    report.summarize("field", field.to_string());
    report.summarize("order", order.to_string());
    report.summarize("colength", analysis.colength);
    for c in &analysis.components {
        report.push(
            EvidenceRow::new(c.point.clone(), "mu = C(b2+1, 2) <= n_p")
                .with("b2", c.b2_socle)
                .with("mu", c.mu)
                .with("n_p", c.local_length)
                .with("relation", if c.mu_equals_length { "equal" } else { "strict" })
                .holds(c.haiman_holds && c.lemma_holds),
        );
    }
    Ok(report)
}

/// Length, `e` and socle dimension at the origin, from the algebra engine.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OriginInvariants {
    pub colength: usize,
    pub local_length: usize,
    pub e: usize,
    pub socle: usize,
}

pub fn origin_invariants(gb: &GroebnerBasis) -> Result<OriginInvariants> {
    let dec = local_components(gb)?;
    let lq = dec.component_at_origin().ok_or(Error::PointNotInSupport)?;
    let ideal = local_ideal(gb, lq)?;
    Ok(OriginInvariants {
        colength: dec.colength,
        local_length: lq.dim(),
        e: minimal_generator_count(&ideal),
        socle: socle_dimension(lq),
    })
}

/// Engine invariants of the monomial ideal of a partition.
pub fn partition_invariants(lambda: &Partition) -> Result<OriginInvariants> {
    let gb = GroebnerBasis::from_monomials(&monomial_ideal_of(lambda), Field::Rationals, MonomialOrder::default());
    origin_invariants(&gb)
}

fn partition_row(lambda: &Partition, bound: u32, cutoff: u32) -> Result<EvidenceRow> {
    let n = lambda.size();
    let c = corners(lambda);
    let b2 = c.b2();
    let mu = universal_family_multiplicity(b2)?;
    let mut holds = b2 as u32 <= bound && mu <= n as u64 && c.e() == b2 + 1;
    let mut row = EvidenceRow::new(lambda.to_string(), "b2 <= bound, mu <= n")
        .with("e", c.e())
        .with("b2", b2)
        .with("mu", mu);
    if n <= cutoff {
        let inv = partition_invariants(lambda)?;
        holds &= inv.colength == n as usize && inv.e == c.e() && inv.socle == b2;
        row = row
            .with("engine_n", inv.colength)
            .with("engine_e", inv.e)
            .with("engine_socle", inv.socle);
    }
    Ok(row.holds(holds))
}

/// Maximum of `b2` over all partitions of `n` against the integer bound.
pub fn verify_theorem2(n: u32, cutoff: u32) -> Result<VerificationReport> {
    if n == 0 {
        return Err(Error::InvalidInput("n must be at least 1".into()));
    }
    let bound = b2_bound(n);
    let parts: Vec<Partition> = partitions_of(n).collect();
    let rows = parts
        .par_iter()
        .map(|l| partition_row(l, bound, cutoff))
        .collect::<Result<Vec<_>>>()?;
    let b2s: Vec<usize> = parts.iter().map(|l| l.distinct_parts()).collect();
    let max = b2s.iter().copied().max().unwrap_or(0);
    let argmax: Vec<String> = parts
        .iter()
        .zip(&b2s)
        .filter(|&(_, &b)| b == max)
        .map(|(l, _)| l.to_string())
        .collect();

    let mut report = VerificationReport::new("partition_bound", format!("n={n}"));
    report.summarize("partitions", parts.len());
    report.summarize("max_b2", max);
    report.summarize("bound", bound);
    report.summarize("argmax", argmax);
    report.summarize("crosscheck_cutoff", cutoff);
    report.require("max b2 = bound", max == bound as usize);
    if is_triangular(n) {
        let witness = optimal_witness(bound)?;
        let attains = witness.size() == n && corners(&witness).b2() == bound as usize;
        report.summarize("witness", witness.to_string());
        report.require("witness attains bound", attains);
    }
    for row in rows {
        report.push(row);
    }
    Ok(report)
}

fn monomials_text(ms: &[Monomial]) -> String {
    let inner: Vec<String> = ms.iter().map(Monomial::to_string).collect();
    format!("({})", inner.join(", "))
}

/// Colength preservation and `b2(in I) ≥ b2(I)` for each order.
pub fn semicontinuity_check(text: &str, field: Field, orders: &[MonomialOrder]) -> Result<VerificationReport> {
    if orders.is_empty() {
        return Err(Error::InvalidInput("at least one monomial order is required".into()));
    }
    let gens = parse_ideal(text, field)?;
    let reference = buchberger(&gens, MonomialOrder::default());
    let dec = local_components(&reference)?;
    if !dec.is_local_at_origin() {
        return Err(Error::SupportNotLocal);
    }
    let base = origin_invariants(&reference)?;

    let rows = orders
        .par_iter()
        .map(|&ord| -> Result<EvidenceRow> {
            let gb = buchberger(&gens, ord);
            let lead = initial_ideal(&gb);
            let degenerate = GroebnerBasis::from_monomials(&lead, field, ord);
            let inv = origin_invariants(&degenerate)?;
            let relation = match inv.socle.cmp(&base.socle) {
                std::cmp::Ordering::Greater => "strict",
                std::cmp::Ordering::Equal => "equal",
                std::cmp::Ordering::Less => "violated",
            };
            Ok(EvidenceRow::new(ord.to_string(), "colength(in I) = colength(I), b2(in I) >= b2(I)")
                .with("initial_ideal", monomials_text(&lead))
                .with("colength", base.colength)
                .with("colength_in", inv.colength)
                .with("b2", base.socle)
                .with("b2_in", inv.socle)
                .with("relation", relation)
                .holds(inv.colength == base.colength && inv.socle >= base.socle))
        })
        .collect::<Result<Vec<_>>>()?;

    let mut report = VerificationReport::new("semicontinuity", text.trim());
    report.summarize("field", field.to_string());
    report.summarize("colength", base.colength);
    report.summarize("b2", base.socle);
    let strict = rows.iter().filter(|r| r.values.get("relation") == Some(&Value::from("strict"))).count();
    report.summarize("strict_orders", strict);
    for row in rows {
        report.push(row);
    }
    Ok(report)
}

/// Number of partitions of `n` with each value of `b2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratificationCensus {
    pub n: u32,
    pub counts: BTreeMap<usize, u64>,
    pub total: u64,
    pub max_index: usize,
    pub bound: u32,
}

impl StratificationCensus {
    pub fn consistent(&self) -> bool {
        self.counts.values().sum::<u64>() == self.total && self.max_index == self.bound as usize
    }
}

pub fn stratification_census(n: u32) -> Result<StratificationCensus> {
    if n == 0 {
        return Err(Error::InvalidInput("n must be at least 1".into()));
    }
    let mut counts = BTreeMap::new();
    let mut total = 0;
    for lambda in partitions_of(n) {
        *counts.entry(corners(&lambda).b2()).or_insert(0) += 1;
        total += 1;
    }
    let max_index = counts.keys().next_back().copied().unwrap_or(0);
    Ok(StratificationCensus {
        n,
        counts,
        total,
        max_index,
        bound: b2_bound(n),
    })
}

/// Parameters of the random ideal sampler.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SamplerConfig {
    pub prime: u32,
    /// Maximum total degree of each generator.
    pub degree: u32,
    /// Number of zero-dimensional ideals to analyze.
    pub count: usize,
    pub seed: u64,
    /// Generators per ideal.
    #[serde(default = "default_generators")]
    pub generators: usize,
    /// Lowest total degree of the terms drawn; 2 drops linear terms too.
    #[serde(default = "default_min_degree")]
    pub min_degree: u32,
}

fn default_generators() -> usize {
    2
}

fn default_min_degree() -> u32 {
    1
}

impl SamplerConfig {
    /// Pairs `(f, g)` with all non-constant terms up to `degree`.
    pub fn new(prime: u32, degree: u32, count: usize, seed: u64) -> Self {
        SamplerConfig {
            prime,
            degree,
            count,
            seed,
            generators: default_generators(),
            min_degree: default_min_degree(),
        }
    }

    pub fn validate(&self) -> Result<Field> {
        let field = Field::prime(self.prime)?;
        if self.degree == 0 {
            return Err(Error::InvalidInput("sample degree must be at least 1".into()));
        }
        if self.min_degree == 0 || self.min_degree > self.degree {
            return Err(Error::InvalidInput("minimum degree must lie in 1..=degree".into()));
        }
        if self.generators < 2 {
            return Err(Error::InvalidInput("at least two generators are needed".into()));
        }
        Ok(field)
    }

    /// Draws are abandoned after this many rejections.
    pub fn max_attempts(&self) -> usize {
        self.count.saturating_mul(200).max(1000)
    }
}

impl std::fmt::Display for SamplerConfig {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Fp:{} degree={} count={} seed={}",
            self.prime, self.degree, self.count, self.seed
        )?;
        if self.generators != default_generators() {
            write!(f, " generators={}", self.generators)?;
        }
        if self.min_degree != default_min_degree() {
            write!(f, " min_degree={}", self.min_degree)?;
        }
        Ok(())
    }
}

fn random_polynomial(rng: &mut ChaCha8Rng, field: Field, cfg: &SamplerConfig) -> Polynomial {
    let mut f = Polynomial::zero();
    let p = cfg.prime;
    for m in Monomial::up_to_degree(cfg.degree).into_iter().filter(|m| m.degree() >= cfg.min_degree) {
        let c = rng.gen_range(0..p);
        f.add_term(m, field.from_i64(c as i64));
    }
    f
}

fn histogram(values: impl Iterator<Item = usize>) -> Value {
    let mut counts = BTreeMap::new();
    for v in values {
        *counts.entry(v).or_insert(0usize) += 1;
    }
    Value::Map(counts.into_iter().map(|(k, c)| (k.to_string(), Value::from(c))).collect::<IndexMap<_, _>>())
}

/// Random ideals without constant terms, checked at the origin. Each
/// generator gets a uniform coefficient in `F_p` on every monomial of degree
/// `min_degree..=degree`; ideals that are not zero-dimensional are redrawn.
pub fn random_ideal_sample(cfg: &SamplerConfig) -> Result<VerificationReport> {
    let field = cfg.validate()?;
    let order = MonomialOrder::default();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut accepted: Vec<(String, GroebnerBasis)> = Vec::with_capacity(cfg.count);
    let mut rejected = 0usize;
    while accepted.len() < cfg.count && rejected < cfg.max_attempts() {
        let gens: Vec<Polynomial> = (0..cfg.generators)
            .map(|_| random_polynomial(&mut rng, field, cfg))
            .collect();
        let gb = buchberger(&gens, order);
        if gb.is_zero_dimensional() {
            let text: Vec<String> = gens.iter().map(|g| g.display_with(order)).collect();
            accepted.push((text.join(", "), gb));
        } else {
            rejected += 1;
        }
    }

    let analyses = accepted
        .par_iter()
        .map(|(_, gb)| -> Result<(usize, ComponentAnalysis)> {
            let dec = local_components(gb)?;
            let lq = dec.component_at_origin().ok_or(Error::PointNotInSupport)?;
            Ok((dec.colength, ComponentAnalysis::of(gb, lq)?))
        })
        .collect::<Result<Vec<_>>>()?;

    let mut report = VerificationReport::new("sample", cfg.to_string());
    report.summarize("requested", cfg.count);
    report.summarize("accepted", accepted.len());
    report.summarize("rejected", rejected);
    report.summarize("socle_passes", analyses.iter().filter(|(_, c)| c.lemma_holds).count());
    report.summarize("multiplicity_passes", analyses.iter().filter(|(_, c)| c.haiman_holds).count());
    report.summarize("b2_histogram", histogram(analyses.iter().map(|(_, c)| c.b2_socle)));
    report.summarize("local_length_histogram", histogram(analyses.iter().map(|(_, c)| c.local_length)));
    report.require("requested sample count reached", accepted.len() == cfg.count);
    for (i, ((text, _), (colength, c))) in accepted.iter().zip(&analyses).enumerate() {
        report.push(
            EvidenceRow::new(format!("#{:04}", i + 1), "socle = e - 1, mu <= n_p")
                .with("ideal", text.clone())
                .with("n", *colength)
                .with("n_p", c.local_length)
                .with("e", c.e)
                .with("socle", c.b2_socle)
                .with("mu", c.mu)
                .holds(c.passed()),
        );
    }
    Ok(report)
}
