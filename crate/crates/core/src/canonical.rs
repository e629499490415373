//! Canonical basis `{G^μ : μ Kleshchev}` of the highest-weight submodule
//! generated by the vacuum, computed LLT-style.
//!
//! For each Kleshchev `μ` a bar-invariant vector `A(μ)` is built from
//! divided powers of the `F_i` along maximal crystal strings. When that
//! vector is not monic at `s_μ` it is replaced by `F_i^{(k)} G^{μ'}`, where
//! `μ' = ẽ_i^k μ` strips the first string. While the
//! working vector has a coefficient outside `qZ[q]` away from `s_μ`, the
//! first such term `s_ν` in increasing order is cleared by subtracting
//! `m·G^ν`, where `m` is the bar-symmetric part of its coefficient. That
//! `ν` is always Kleshchev. What remains is `G^μ`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{Signed, Zero};

use crate::crystal::{self, e_tilde, enumerate_kleshchev, f_tilde, i_signature};
use crate::error::{ConventionFault, Error, Result};
use crate::fock::{FockContext, FockVector};
use crate::laurent::LaurentPoly;
use crate::multipartition::{count_std, multipartitions, Multipartition, Residue};
use crate::roots::{beta, defect, RootVector};

/// A divided-power word `[(i_1,k_1), …, (i_m,k_m)]`, read as
/// `F_{i_m}^{(k_m)} ⋯ F_{i_1}^{(k_1)} s_∅` (first pair applied first).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Monomial(pub Vec<(Residue, u32)>);

impl Monomial {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Applies the word to `∅` through the crystal operators.
    pub fn replay(&self, ctx: &FockContext) -> Option<Multipartition> {
        let mut current = Multipartition::empty(ctx.level());
        for &(i, k) in &self.0 {
            for _ in 0..k {
                current = f_tilde(i, &current, ctx)?;
            }
        }
        Some(current)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (idx, (i, k)) in self.0.iter().enumerate() {
            if idx > 0 {
                f.write_str(", ")?;
            }
            write!(f, "({i},{k})")?;
        }
        f.write_str("]")
    }
}

/// Which residue string to peel first when building `A(μ)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum PeelStrategy {
    /// Smallest residue with a good node.
    #[default]
    GoodNode,
    /// Largest residue with a good node.
    LargestResidue,
}

pub fn monomial_for(
    mu: &Multipartition,
    ctx: &FockContext,
    strategy: PeelStrategy,
) -> Result<Monomial> {
    ctx.check_level(mu)?;
    let mut current = mu.clone();
    let mut word = Vec::new();
    while !current.is_empty() {
        let candidates = ctx
            .residues_at(&current)
            .into_iter()
            .map(|i| (i, i_signature(&current, i, ctx).eps))
            .filter(|&(_, eps)| eps > 0);
        let picked = match strategy {
            PeelStrategy::GoodNode => candidates.min_by_key(|&(i, _)| i),
            PeelStrategy::LargestResidue => candidates.max_by_key(|&(i, _)| i),
        };
        let Some((i, k)) = picked else {
            return Err(Error::NotKleshchev(mu.clone()));
        };
        for _ in 0..k {
            current = e_tilde(i, &current, ctx).expect("eps counts good nodes");
        }
        word.push((i, k));
    }
    word.reverse();
    Ok(Monomial(word))
}

/// `A = F_{i_m}^{(k_m)} ⋯ F_{i_1}^{(k_1)} s_∅`; bar-invariant by construction.
pub fn aux_vector(m: &Monomial, ctx: &FockContext) -> Result<FockVector> {
    let mut v = ctx.vacuum();
    for &(i, k) in &m.0 {
        v = ctx.divided_power_f(i, k, &v)?;
    }
    Ok(v)
}

/// `A(μ)` for the monomial of `μ`, which must be monic at `s_μ`.
pub fn monic_aux_vector(
    mu: &Multipartition,
    ctx: &FockContext,
    strategy: PeelStrategy,
) -> Result<FockVector> {
    let v = aux_vector(&monomial_for(mu, ctx, strategy)?, ctx)?;
    if !v.coeff(mu).is_one() {
        return Err(ConventionFault::NonMonic { mu: mu.clone() }.into());
    }
    Ok(v)
}

/// Graded decomposition matrix: rows are all multipartitions of `n`,
/// columns the Kleshchev ones, both most dominant first. Entry `(λ, μ)` is
/// the coefficient `d_{λμ}(q)` of `s_λ` in `G^μ`.
#[derive(Clone, Debug)]
pub struct DecompositionMatrix {
    ctx: FockContext,
    n: u32,
    rows: Vec<Multipartition>,
    cols: Vec<Multipartition>,
    entries: BTreeMap<(usize, usize), LaurentPoly>,
    row_index: BTreeMap<Multipartition, usize>,
    /// Per column reduction record; absent when the matrix was loaded
    /// rather than computed.
    stats: Option<Vec<ReductionStats>>,
}

/// Equality compares the matrix itself, not the recorded reduction history.
impl PartialEq for DecompositionMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.ctx == other.ctx
            && self.n == other.n
            && self.rows == other.rows
            && self.cols == other.cols
            && self.entries == other.entries
    }
}

impl Eq for DecompositionMatrix {}

impl DecompositionMatrix {
    /// Assembles a matrix from stored parts, checking that labels have the
    /// right size and level and that indices are in range.
    pub fn from_parts(
        ctx: FockContext,
        n: u32,
        rows: Vec<Multipartition>,
        cols: Vec<Multipartition>,
        entries: BTreeMap<(usize, usize), LaurentPoly>,
    ) -> Result<Self> {
        for lam in rows.iter().chain(&cols) {
            ctx.check_level(lam)?;
            if lam.size() != n {
                return Err(Error::Argument(format!(
                    "{lam} is not a multipartition of {n}"
                )));
            }
        }
        if let Some(((r, c), _)) = entries
            .iter()
            .find(|((r, c), _)| *r >= rows.len() || *c >= cols.len())
        {
            return Err(Error::Argument(format!("entry ({r},{c}) is out of range")));
        }
        let row_index = rows
            .iter()
            .cloned()
            .enumerate()
            .map(|(k, lam)| (lam, k))
            .collect();
        let entries = entries.into_iter().filter(|(_, p)| !p.is_zero()).collect();
        Ok(DecompositionMatrix {
            ctx,
            n,
            rows,
            cols,
            entries,
            row_index,
            stats: None,
        })
    }

    pub fn ctx(&self) -> &FockContext {
        &self.ctx
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn rows(&self) -> &[Multipartition] {
        &self.rows
    }

    pub fn cols(&self) -> &[Multipartition] {
        &self.cols
    }

    /// Nonzero entries keyed by `(row index, column index)`, row-major.
    pub fn entries(&self) -> &BTreeMap<(usize, usize), LaurentPoly> {
        &self.entries
    }

    pub fn stats(&self) -> Option<&[ReductionStats]> {
        self.stats.as_deref()
    }

    pub fn row_of(&self, lambda: &Multipartition) -> Option<usize> {
        self.row_index.get(lambda).copied()
    }

    /// `d_{λμ}(q)`, zero when absent.
    pub fn entry(&self, lambda: &Multipartition, mu: &Multipartition) -> LaurentPoly {
        let (Some(r), Some(c)) = (self.row_of(lambda), self.cols.iter().position(|m| m == mu))
        else {
            return LaurentPoly::zero();
        };
        self.entries.get(&(r, c)).cloned().unwrap_or_default()
    }

    /// Nonzero entries of column `c` as `(row index, polynomial)`.
    pub fn column(&self, c: usize) -> impl Iterator<Item = (usize, &LaurentPoly)> + '_ {
        self.entries
            .iter()
            .filter(move |((_, cc), _)| *cc == c)
            .map(|((r, _), p)| (*r, p))
    }

    /// `G^μ` for column `c` as a Fock vector.
    pub fn column_vector(&self, c: usize) -> FockVector {
        self.column(c)
            .map(|(r, p)| (self.rows[r].clone(), p.clone()))
            .collect()
    }

    /// True iff every column is `s_μ` alone.
    pub fn is_identity(&self) -> bool {
        self.entries.len() == self.cols.len()
            && self.cols.iter().enumerate().all(|(c, mu)| {
                self.row_of(mu)
                    .and_then(|r| self.entries.get(&(r, c)))
                    .is_some_and(LaurentPoly::is_one)
            })
    }
}

/// The canonical basis with the default peeling strategy.
pub fn canonical_basis(n: u32, ctx: &FockContext) -> Result<DecompositionMatrix> {
    canonical_basis_with(n, ctx, PeelStrategy::GoodNode)
}

pub fn canonical_basis_with(
    n: u32,
    ctx: &FockContext,
    strategy: PeelStrategy,
) -> Result<DecompositionMatrix> {
    let rows = multipartitions(n, ctx.level());
    let mut reducer = Reducer::new(ctx, strategy);
    let cols: Vec<Multipartition> = reducer.kleshchev(n).iter().rev().cloned().collect();
    for mu in &cols {
        reducer.finish(mu)?;
    }

    let row_index: BTreeMap<Multipartition, usize> = rows
        .iter()
        .cloned()
        .enumerate()
        .map(|(k, lam)| (lam, k))
        .collect();
    let mut entries = BTreeMap::new();
    let mut stats = Vec::with_capacity(cols.len());
    for (c, mu) in cols.iter().enumerate() {
        let (g, stat) = &reducer.finished[mu];
        for (lam, p) in g {
            entries.insert((row_index[lam], c), p.clone());
        }
        stats.push(*stat);
    }
    Ok(DecompositionMatrix {
        ctx: ctx.clone(),
        n,
        rows,
        cols,
        entries,
        row_index,
        stats: Some(stats),
    })
}

/// How one column was reduced.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReductionStats {
    /// Largest degree of any coefficient in any working vector.
    pub max_degree: i64,
    /// Number of `G^ν` subtractions.
    pub steps: usize,
    /// True when the path monomial was not monic and the reduction started
    /// from `F_i^(k) G^{μ'}` instead.
    pub string_seed: bool,
}

/// Reduction state for one context. Columns are requested most dominant
/// first; a reduction that needs a `G^ν` not yet finished finishes `ν`
/// first. A request for a column already on the stack is a cycle and is
/// reported as a triangularity fault.
///
/// Every working vector is bar-invariant, so a vector that ends up monic at
/// `s_μ` with all other coefficients in `qZ[q]` is `G^μ`.
struct Reducer<'a> {
    ctx: &'a FockContext,
    strategy: PeelStrategy,
    kleshchev: BTreeMap<u32, BTreeSet<Multipartition>>,
    finished: BTreeMap<Multipartition, (FockVector, ReductionStats)>,
    pending: BTreeSet<Multipartition>,
}

impl<'a> Reducer<'a> {
    fn new(ctx: &'a FockContext, strategy: PeelStrategy) -> Self {
        Reducer {
            ctx,
            strategy,
            kleshchev: BTreeMap::new(),
            finished: BTreeMap::new(),
            pending: BTreeSet::new(),
        }
    }

    fn kleshchev(&mut self, n: u32) -> &BTreeSet<Multipartition> {
        let ctx = self.ctx;
        self.kleshchev
            .entry(n)
            .or_insert_with(|| enumerate_kleshchev(n, ctx))
    }

    /// `F_i^(k) G^{μ'}` for the first string peeled off `μ`; its expansion
    /// in the canonical basis contains `G^μ` exactly once.
    fn string_seed(&mut self, mu: &Multipartition) -> Result<FockVector> {
        let word = monomial_for(mu, self.ctx, self.strategy)?;
        let &(i, k) = word.0.last().expect("mu is not empty");
        let mut lower = mu.clone();
        for _ in 0..k {
            lower = e_tilde(i, &lower, self.ctx).expect("string of good nodes");
        }
        self.finish(&lower)?;
        self.ctx.divided_power_f(i, k, &self.finished[&lower].0)
    }

    fn finish(&mut self, mu: &Multipartition) -> Result<()> {
        if self.finished.contains_key(mu) {
            return Ok(());
        }
        self.pending.insert(mu.clone());
        let (mut v, string_seed) = match monic_aux_vector(mu, self.ctx, self.strategy) {
            Ok(v) => (v, false),
            Err(Error::Convention(ConventionFault::NonMonic { .. })) => {
                (self.string_seed(mu)?, true)
            }
            Err(err) => return Err(err),
        };
        let bound = self.kleshchev(mu.size()).len() * v.len().max(1) + 1;
        let mut stats = ReductionStats {
            max_degree: max_degree(&v),
            steps: 0,
            string_seed,
        };
        // The first offending term in increasing order is always the
        // leading term of some G^nu still hiding in v.
        while let Some((nu, c)) = v.iter().find(|(lam, c)| *lam != mu && !c.in_q_zq()) {
            let (nu, scale) = (nu.clone(), c.bar_symmetric_part());
            if !self.kleshchev(nu.size()).contains(&nu) {
                return Err(ConventionFault::NonKleshchevLeader {
                    mu: mu.clone(),
                    leader: nu,
                }
                .into());
            }
            if self.pending.contains(&nu) {
                return Err(ConventionFault::Triangularity { mu: mu.clone(), nu }.into());
            }
            self.finish(&nu)?;
            v.sub_scaled(&scale, &self.finished[&nu].0);
            stats.steps += 1;
            if stats.steps > bound {
                return Err(ConventionFault::NonTermination { mu: mu.clone() }.into());
            }
            stats.max_degree = stats.max_degree.max(max_degree(&v));
        }
        if !v.coeff(mu).is_one() {
            return Err(ConventionFault::NonMonic { mu: mu.clone() }.into());
        }
        self.pending.remove(mu);
        self.finished.insert(mu.clone(), (v, stats));
        Ok(())
    }
}

fn max_degree(v: &FockVector) -> i64 {
    v.iter().filter_map(|(_, c)| c.degree()).max().unwrap_or(0)
}

/// One named assertion and its outcome.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// A list of checks. Passing means every check passed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn push(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn len(&self) -> usize {
        self.checks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.checks.is_empty()
    }
}

/// The row attaining the degree bound in column `μ`: `m⁻¹(μ)′`.
pub fn mullineux_row(mu: &Multipartition, ctx: &FockContext) -> Result<Multipartition> {
    Ok(crystal::mullineux(mu, ctx)?.conjugate())
}

/// Checks, for every nonzero `d_{λμ}`: `0 ≤ deg ≤ defect μ`, and
/// `deg = defect μ ⇔ d = q^{defect μ} ⇔ λ = m⁻¹(μ)′`; and that each column
/// has exactly one row attaining the bound.
pub fn verify_degree_bounds(matrix: &DecompositionMatrix) -> Result<Report> {
    let ctx = matrix.ctx();
    let mut report = Report::default();
    for (c, mu) in matrix.cols().iter().enumerate() {
        let cap = i64::from(defect(mu, ctx.e(), ctx.charge())?);
        let target = mullineux_row(mu, ctx)?;
        let mut attaining = Vec::new();
        for (r, poly) in matrix.column(c) {
            let lam = &matrix.rows()[r];
            let deg = poly.degree().expect("entries are nonzero");
            let low = poly.min_degree().expect("entries are nonzero");
            report.push(
                format!("bound d[{lam}][{mu}]"),
                low >= 0 && deg <= cap,
                format!("degrees {low}..={deg}, defect {cap}"),
            );
            let by_degree = deg == cap;
            let by_value = *poly == LaurentPoly::q_pow(cap);
            let by_label = *lam == target;
            report.push(
                format!("equality d[{lam}][{mu}]"),
                by_degree == by_value && by_value == by_label,
                format!("deg=defect: {by_degree}, d=q^defect: {by_value}, row=m^-1(mu)': {by_label} ({poly})"),
            );
            if by_degree {
                attaining.push(lam.clone());
            }
        }
        report.push(
            format!("attained [{mu}]"),
            attaining.len() == 1 && attaining[0] == target,
            format!(
                "expected {target}, attained at [{}]",
                crate::multipartition::join(&attaining)
            ),
        );
    }
    Ok(report)
}

/// Structural invariants of a computed matrix: unitriangularity, entries
/// in `δ_{λμ} + qN[q]`, dominance triangularity and block support.
pub fn structure_report(matrix: &DecompositionMatrix) -> Report {
    let ctx = matrix.ctx();
    let betas: Vec<RootVector> = matrix
        .rows()
        .iter()
        .map(|l| beta(l, ctx.e(), ctx.charge()))
        .collect();
    let mut report = Report::default();
    for (c, mu) in matrix.cols().iter().enumerate() {
        let diag = matrix
            .row_of(mu)
            .map(|r| matrix.entry(&matrix.rows()[r], mu));
        report.push(
            format!("monic [{mu}]"),
            diag.as_ref().is_some_and(LaurentPoly::is_one),
            format!("d[mu][mu] = {}", diag.unwrap_or_default()),
        );
        let mu_beta = beta(mu, ctx.e(), ctx.charge());
        for (r, poly) in matrix.column(c) {
            let lam = &matrix.rows()[r];
            if lam == mu {
                continue;
            }
            report.push(
                format!("positive d[{lam}][{mu}]"),
                poly.in_q_zq() && poly.has_nonnegative_coeffs(),
                format!("{poly}"),
            );
            report.push(
                format!("triangular d[{lam}][{mu}]"),
                lam.dominates_unchecked(mu),
                format!("{lam} vs {mu}"),
            );
            report.push(
                format!("block d[{lam}][{mu}]"),
                betas[r] == mu_beta,
                format!("beta {} vs {}", betas[r], mu_beta),
            );
        }
    }
    report
}

/// The matrix specialized at `q = 1` together with the dimensions of the
/// simple modules solved from `#Std(λ) = Σ_ν d_{λν}(1)·dim D^ν`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AtOne {
    pub values: BTreeMap<(usize, usize), BigInt>,
    pub dims: BTreeMap<Multipartition, BigUint>,
}

/// Back-substitutes over Kleshchev rows in increasing dominance, then
/// checks the identity on every row. Any non-positive dimension or failed
/// row identity is a consistency error.
pub fn decomposition_at_one(matrix: &DecompositionMatrix) -> Result<AtOne> {
    let values: BTreeMap<(usize, usize), BigInt> = matrix
        .entries()
        .iter()
        .map(|(&k, p)| (k, p.eval_at_one()))
        .collect();
    let row_sum = |r: usize,
                   dims: &BTreeMap<Multipartition, BigUint>,
                   skip: Option<usize>|
     -> Result<BigInt> {
        let mut total = BigInt::zero();
        for c in 0..matrix.cols().len() {
            if Some(c) == skip {
                continue;
            }
            let Some(v) = values.get(&(r, c)) else {
                continue;
            };
            let nu = &matrix.cols()[c];
            let dim = dims.get(nu).ok_or_else(|| {
                Error::Consistency(format!("dim of {nu} needed before it is known"))
            })?;
            total += v * BigInt::from(dim.clone());
        }
        Ok(total)
    };

    let mut dims = BTreeMap::new();
    // Columns are stored most dominant first.
    for (c, mu) in matrix.cols().iter().enumerate().rev() {
        let r = matrix
            .row_of(mu)
            .ok_or_else(|| Error::Consistency(format!("{mu} has no row")))?;
        let rest = row_sum(r, &dims, Some(c))?;
        let dim = BigInt::from(count_std(mu)) - rest;
        if !dim.is_positive() {
            return Err(Error::Consistency(format!(
                "dim D^{mu} = {dim} is not positive"
            )));
        }
        let (Sign::Plus, mag) = dim.into_parts() else {
            unreachable!()
        };
        dims.insert(mu.clone(), mag);
    }
    for (r, lam) in matrix.rows().iter().enumerate() {
        let lhs = BigInt::from(count_std(lam));
        let rhs = row_sum(r, &dims, None)?;
        if lhs != rhs {
            return Err(Error::Consistency(format!(
                "#Std({lam}) = {lhs} but the decomposition gives {rhs}"
            )));
        }
    }
    Ok(AtOne { values, dims })
}

/// One block of `P_n`: its `β`, defect and members (most dominant first).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub beta: RootVector,
    pub defect: u32,
    pub members: Vec<Multipartition>,
}

pub fn block_decomposition(n: u32, ctx: &FockContext) -> Result<Vec<Block>> {
    let mut blocks: Vec<Block> = Vec::new();
    let mut by_beta: BTreeMap<RootVector, usize> = BTreeMap::new();
    for lam in multipartitions(n, ctx.level()) {
        let b = beta(&lam, ctx.e(), ctx.charge());
        let d = defect(&lam, ctx.e(), ctx.charge())?;
        match by_beta.get(&b) {
            Some(&k) => {
                if blocks[k].defect != d {
                    return Err(Error::Consistency(format!(
                        "defect differs inside the block of {lam}"
                    )));
                }
                blocks[k].members.push(lam);
            }
            None => {
                by_beta.insert(b.clone(), blocks.len());
                blocks.push(Block {
                    beta: b,
                    defect: d,
                    members: alloc::vec![lam],
                });
            }
        }
    }
    Ok(blocks)
}

/// Checks that every nonzero entry of the matrix stays inside one block.
pub fn block_support_report(matrix: &DecompositionMatrix, blocks: &[Block]) -> Report {
    let mut which = BTreeMap::new();
    for (k, b) in blocks.iter().enumerate() {
        for lam in &b.members {
            which.insert(lam, k);
        }
    }
    let mut report = Report::default();
    for &(r, c) in matrix.entries().keys() {
        let (lam, mu) = (&matrix.rows()[r], &matrix.cols()[c]);
        report.push(
            format!("block class d[{lam}][{mu}]"),
            which.contains_key(lam) && which.get(lam) == which.get(mu),
            String::new(),
        );
    }
    report
}

/// Degree profile of one column against its cap `defect μ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColumnAudit {
    pub mu: Multipartition,
    pub cap: i64,
    /// Final entry degree → number of entries with that degree.
    pub histogram: BTreeMap<i64, usize>,
    /// Largest degree seen during the reduction, when recorded.
    pub intermediate_max: Option<i64>,
}

impl ColumnAudit {
    pub fn final_within_cap(&self) -> bool {
        self.histogram.keys().all(|&d| d <= self.cap)
    }

    /// True when some working vector went past the cap. Informational.
    pub fn intermediate_exceeded(&self) -> bool {
        self.intermediate_max.is_some_and(|d| d > self.cap)
    }
}

pub fn degree_audit(matrix: &DecompositionMatrix) -> Result<Vec<ColumnAudit>> {
    let ctx = matrix.ctx();
    let mut out = Vec::with_capacity(matrix.cols().len());
    for (c, mu) in matrix.cols().iter().enumerate() {
        let cap = i64::from(defect(mu, ctx.e(), ctx.charge())?);
        let mut histogram = BTreeMap::new();
        for (_, p) in matrix.column(c) {
            *histogram.entry(p.degree().expect("nonzero")).or_insert(0) += 1;
        }
        out.push(ColumnAudit {
            mu: mu.clone(),
            cap,
            histogram,
            intermediate_max: matrix.stats().map(|s| s[c].max_degree),
        });
    }
    Ok(out)
}

/// Mullineux map checks for size `n`: a bijection onto the twisted
/// Kleshchev set whose inverse is the twisted-side map.
pub fn mullineux_report(n: u32, ctx: &FockContext) -> Result<Report> {
    let twisted = ctx.twisted();
    let source = enumerate_kleshchev(n, ctx);
    let target = enumerate_kleshchev(n, &twisted);
    let mut image = BTreeSet::new();
    let mut report = Report::default();
    for mu in &source {
        let m = crystal::mullineux(mu, ctx)?;
        let back = crystal::mullineux(&m, &twisted)?;
        report.push(
            format!("mullineux lands [{mu}]"),
            target.contains(&m),
            format!("m = {m}"),
        );
        report.push(
            format!("mullineux inverse [{mu}]"),
            back == *mu,
            format!("m'(m) = {back}"),
        );
        image.insert(m);
    }
    report.push(
        format!("mullineux bijective n={n}"),
        image == target,
        format!("|image| = {}, |target| = {}", image.len(), target.len()),
    );
    Ok(report)
}

/// `(E_i F_j − F_j E_i) s_λ = δ_ij [⟨wt λ, α_i^∨⟩] s_λ` for every `λ ⊢ n`
/// and every residue pair that can act at `λ`.
pub fn commutator_report(n: u32, ctx: &FockContext) -> Report {
    let mut report = Report::default();
    let mut failures = Vec::new();
    let mut count = 0usize;
    for lam in multipartitions(n, ctx.level()) {
        let residues = ctx.residues_at(&lam);
        for &i in &residues {
            for &j in &residues {
                count += 1;
                if !ctx.commutator_defect(i, j, &lam).is_zero() {
                    failures.push(format!("{lam}:{i},{j}"));
                }
            }
        }
    }
    report.push(
        format!("commutator n={n}"),
        failures.is_empty(),
        format!("{count} cases, failing: {failures:?}"),
    );
    report
}

/// Everything the `verify` front end checks for one `(ctx, n)`: the degree
/// bound, structure, blocks, dimensions at `q = 1`, the alternate-strategy
/// uniqueness oracle, the Mullineux map and the commutation relations.
pub fn full_verification(n: u32, ctx: &FockContext) -> Result<Report> {
    let matrix = canonical_basis(n, ctx)?;
    let mut report = verify_degree_bounds(&matrix)?;
    report.extend(structure_report(&matrix));
    let blocks = block_decomposition(n, ctx)?;
    report.extend(block_support_report(&matrix, &blocks));
    match decomposition_at_one(&matrix) {
        Ok(_) => report.push(format!("dims n={n}"), true, ""),
        Err(err) => report.push(format!("dims n={n}"), false, format!("{err}")),
    }
    let alternate = canonical_basis_with(n, ctx, PeelStrategy::LargestResidue)?;
    report.push(
        format!("uniqueness n={n}"),
        alternate == matrix,
        "largest-residue peeling",
    );
    for audit in degree_audit(&matrix)? {
        report.push(
            format!("degree cap [{}]", audit.mu),
            audit.final_within_cap(),
            format!("cap {}, degrees {:?}", audit.cap, audit.histogram),
        );
    }
    report.extend(mullineux_report(n, ctx)?);
    report.extend(commutator_report(n, ctx));
    Ok(report)
}
