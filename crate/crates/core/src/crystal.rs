//! Kashiwara crystal operators on multipartitions.
//!
//! The `i`-signature lists addable (`+`) and removable (`−`) `i`-nodes in
//! reading order. Adjacent `−+` pairs cancel until the word reads
//! `+^φ −^ε`. `f̃_i` adds the node of the rightmost surviving `+`, `ẽ_i`
//! removes the node of the leftmost surviving `−`.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec::Vec;

use crate::error::{ConventionFault, Error, Result};
use crate::fock::{FockContext, Mark};
use crate::multipartition::{Multipartition, Residue};

/// A reduced `i`-signature: the uncancelled marks in reading order, all
/// `+` marks before all `−` marks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Signature {
    pub reduced: Vec<Mark>,
    pub eps: u32,
    pub phi: u32,
}

impl Signature {
    /// The cogood node's mark (rightmost `+`).
    pub fn cogood(&self) -> Option<Mark> {
        self.reduced
            .iter()
            .rev()
            .find(|m| matches!(m, Mark::Add(_)))
            .copied()
    }

    /// The good node's mark (leftmost `−`).
    pub fn good(&self) -> Option<Mark> {
        self.reduced
            .iter()
            .find(|m| matches!(m, Mark::Remove(_)))
            .copied()
    }
}

/// A sequence of residues `i_1, …, i_n` with `μ = f̃_{i_n} ⋯ f̃_{i_1} ∅`.
pub type ResiduePath = Vec<Residue>;

pub fn i_signature(lambda: &Multipartition, i: Residue, ctx: &FockContext) -> Signature {
    let mut reduced: Vec<Mark> = Vec::new();
    for mark in ctx.marks(lambda, i) {
        if matches!(mark, Mark::Add(_)) && matches!(reduced.last(), Some(Mark::Remove(_))) {
            reduced.pop();
        } else {
            reduced.push(mark);
        }
    }
    let eps = reduced
        .iter()
        .filter(|m| matches!(m, Mark::Remove(_)))
        .count() as u32;
    let phi = reduced.len() as u32 - eps;
    Signature { reduced, eps, phi }
}

pub fn f_tilde(i: Residue, lambda: &Multipartition, ctx: &FockContext) -> Option<Multipartition> {
    i_signature(lambda, i, ctx)
        .cogood()
        .map(|m| lambda.with_node(m.node()))
}

pub fn e_tilde(i: Residue, lambda: &Multipartition, ctx: &FockContext) -> Option<Multipartition> {
    i_signature(lambda, i, ctx)
        .good()
        .map(|m| lambda.without_node(m.node()))
}

/// Smallest residue with `ε_i(λ) > 0`, if any.
fn first_good_residue(lambda: &Multipartition, ctx: &FockContext) -> Option<Residue> {
    ctx.residues_at(lambda)
        .into_iter()
        .find(|&i| i_signature(lambda, i, ctx).eps > 0)
}

/// Walks good-node removals down to a source vertex of the crystal and
/// returns the removed residues, top first, together with that source.
fn descend(lambda: &Multipartition, ctx: &FockContext) -> (Vec<Residue>, Multipartition) {
    let mut current = lambda.clone();
    let mut removed = Vec::with_capacity(lambda.size() as usize);
    while let Some(i) = first_good_residue(&current, ctx) {
        current = e_tilde(i, &current, ctx).expect("eps > 0 implies a good node");
        removed.push(i);
    }
    (removed, current)
}

pub fn is_kleshchev(lambda: &Multipartition, ctx: &FockContext) -> bool {
    lambda.level() == ctx.level() && descend(lambda, ctx).1.is_empty()
}

/// Kleshchev multipartitions of `n`: the closure of `{∅}` under every
/// `f̃_i`, truncated at size `n`.
pub fn enumerate_kleshchev(n: u32, ctx: &FockContext) -> BTreeSet<Multipartition> {
    let mut layer = BTreeSet::from([Multipartition::empty(ctx.level())]);
    for _ in 0..n {
        let mut next = BTreeSet::new();
        for lambda in &layer {
            for i in ctx.residues_at(lambda) {
                if let Some(mu) = f_tilde(i, lambda, ctx) {
                    next.insert(mu);
                }
            }
        }
        layer = next;
    }
    layer
}

/// Breadth-first variant returning every layer `0..=n`; used where a whole
/// range of sizes is needed at once.
pub fn kleshchev_layers(n: u32, ctx: &FockContext) -> Vec<BTreeSet<Multipartition>> {
    let mut layers = Vec::with_capacity(n as usize + 1);
    let mut queue = VecDeque::from([Multipartition::empty(ctx.level())]);
    let mut current = BTreeSet::new();
    let mut size = 0;
    while let Some(lambda) = queue.pop_front() {
        if lambda.size() != size {
            layers.push(core::mem::take(&mut current));
            size = lambda.size();
        }
        if !current.insert(lambda.clone()) {
            continue;
        }
        if size < n {
            for i in ctx.residues_at(&lambda) {
                if let Some(mu) = f_tilde(i, &lambda, ctx) {
                    queue.push_back(mu);
                }
            }
        }
    }
    layers.push(current);
    layers
}

pub fn crystal_path(mu: &Multipartition, ctx: &FockContext) -> Result<ResiduePath> {
    ctx.check_level(mu)?;
    let (mut removed, source) = descend(mu, ctx);
    if !source.is_empty() {
        return Err(Error::NotKleshchev(mu.clone()));
    }
    removed.reverse();
    Ok(removed)
}

/// Replays a residue path from `∅` through `f̃`.
pub fn replay(path: &[Residue], ctx: &FockContext) -> Result<Multipartition> {
    let mut current = Multipartition::empty(ctx.level());
    for &i in path {
        current =
            f_tilde(i, &current, ctx).ok_or_else(|| ConventionFault::UndefinedCrystalStep {
                at: current.clone(),
                residue: i.0,
            })?;
    }
    Ok(current)
}

/// The Mullineux map: negate the crystal path of `μ` and replay it in the
/// context with twisted charge `κ′`. The result is Kleshchev for `κ′`.
///
/// Since twisting is an involution, `mullineux(mullineux(μ, ctx), &ctx.twisted())`
/// returns `μ`; the same call therefore computes `m⁻¹` when `μ` lies on the
/// twisted side.
pub fn mullineux(mu: &Multipartition, ctx: &FockContext) -> Result<Multipartition> {
    let e = ctx.e();
    let negated: Vec<Residue> = crystal_path(mu, ctx)?
        .into_iter()
        .map(|i| i.negate(e))
        .collect();
    replay(&negated, &ctx.twisted())
}
