//! The combinatorial Fock space of level `ℓ` as a sparse module.
//!
//! `F_i s_λ = Σ_A q^{d_A(λ)} s_{λ∪A}` over addable `i`-nodes `A`, where
//! `d_A(λ)` is the number of addable minus removable `i`-nodes strictly
//! after `A` in reading order. `E_i` is the mirror image: it removes
//! removable `i`-nodes `A` with weight `q^{−d′_A(λ)}`, `d′_A` counting
//! strictly before `A`.

use alloc::collections::btree_map::{self, BTreeMap};
use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::laurent::{quantum_factorial, quantum_int, LaurentPoly};
use crate::multipartition::{
    residue_unchecked, Characteristic, Charge, Multipartition, Node, Residue,
};

/// The data a Fock space depends on: `e` and the multicharge `κ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FockContext {
    e: Characteristic,
    charge: Charge,
}

/// A finite sum `Σ c_λ s_λ`. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FockVector {
    terms: BTreeMap<Multipartition, LaurentPoly>,
}

impl FockVector {
    pub fn zero() -> Self {
        FockVector::default()
    }

    pub fn basis(lambda: Multipartition) -> Self {
        let mut v = FockVector::zero();
        v.terms.insert(lambda, LaurentPoly::one());
        v
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `s_λ` (zero if absent).
    pub fn coeff(&self, lambda: &Multipartition) -> LaurentPoly {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn get(&self, lambda: &Multipartition) -> Option<&LaurentPoly> {
        self.terms.get(lambda)
    }

    /// Terms in increasing order (least dominant first within one size).
    pub fn iter(&self) -> btree_map::Iter<'_, Multipartition, LaurentPoly> {
        self.terms.iter()
    }

    /// Adds `c·s_λ`.
    pub fn add_term(&mut self, lambda: Multipartition, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
            btree_map::Entry::Vacant(slot) => {
                slot.insert(c.clone());
            }
            btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// `self += scale · other`.
    pub fn add_scaled(&mut self, scale: &LaurentPoly, other: &FockVector) {
        for (lambda, c) in &other.terms {
            self.add_term(lambda.clone(), &(scale * c));
        }
    }

    /// `self −= scale · other`.
    pub fn sub_scaled(&mut self, scale: &LaurentPoly, other: &FockVector) {
        self.add_scaled(&-scale, other);
    }

    /// Applies `f` to every coefficient (this is not the Fock-space bar
    /// involution even when `f` is `bar`).
    pub fn map_coeffs(&self, f: impl Fn(&LaurentPoly) -> LaurentPoly) -> FockVector {
        let mut out = FockVector::zero();
        for (lambda, c) in &self.terms {
            out.add_term(lambda.clone(), &f(c));
        }
        out
    }

    /// The common size of the support, or `None` when zero or mixed.
    pub fn homogeneous_size(&self) -> Option<u32> {
        let mut sizes = self.terms.keys().map(Multipartition::size);
        let first = sizes.next()?;
        sizes.all(|s| s == first).then_some(first)
    }
}

impl<'a> IntoIterator for &'a FockVector {
    type Item = (&'a Multipartition, &'a LaurentPoly);
    type IntoIter = btree_map::Iter<'a, Multipartition, LaurentPoly>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl FromIterator<(Multipartition, LaurentPoly)> for FockVector {
    fn from_iter<T: IntoIterator<Item = (Multipartition, LaurentPoly)>>(iter: T) -> Self {
        let mut v = FockVector::zero();
        for (lambda, c) in iter {
            v.add_term(lambda, &c);
        }
        v
    }
}

/// One `+` (addable) or `−` (removable) mark of an `i`-signature.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mark {
    Add(Node),
    Remove(Node),
}

impl Mark {
    pub fn node(self) -> Node {
        match self {
            Mark::Add(n) | Mark::Remove(n) => n,
        }
    }
}

impl FockContext {
    pub fn new(e: Characteristic, charge: Charge) -> Self {
        FockContext { e, charge }
    }

    pub fn e(&self) -> Characteristic {
        self.e
    }

    pub fn charge(&self) -> &Charge {
        &self.charge
    }

    pub fn level(&self) -> usize {
        self.charge.level()
    }

    /// The context with charge `κ′ = (−κ_ℓ, …, −κ_1)`.
    pub fn twisted(&self) -> FockContext {
        FockContext {
            e: self.e,
            charge: self.charge.twisted(),
        }
    }

    pub fn residue(&self, node: Node) -> Residue {
        residue_unchecked(node, self.e, &self.charge)
    }

    pub fn check_level(&self, lambda: &Multipartition) -> Result<()> {
        if lambda.level() != self.level() {
            return Err(Error::Argument(format!(
                "{lambda} has level {}, context has level {}",
                lambda.level(),
                self.level()
            )));
        }
        Ok(())
    }

    /// Addable and removable `i`-nodes of `λ` merged in reading order.
    pub fn marks(&self, lambda: &Multipartition, i: Residue) -> Vec<Mark> {
        let mut marks: Vec<Mark> = lambda
            .addable()
            .into_iter()
            .filter(|&a| self.residue(a) == i)
            .map(Mark::Add)
            .chain(
                lambda
                    .removable()
                    .into_iter()
                    .filter(|&a| self.residue(a) == i)
                    .map(Mark::Remove),
            )
            .collect();
        marks.sort_unstable_by_key(|m| m.node());
        marks
    }

    /// Residues worth trying at `λ`: all of `I` for finite `e`, otherwise
    /// the residues of the addable and removable nodes of `λ`.
    pub fn residues_at(&self, lambda: &Multipartition) -> Vec<Residue> {
        match self.e.residues() {
            Some(all) => all.collect(),
            None => {
                let mut out: Vec<Residue> = lambda
                    .addable()
                    .into_iter()
                    .chain(lambda.removable())
                    .map(|a| self.residue(a))
                    .collect();
                out.sort_unstable();
                out.dedup();
                out
            }
        }
    }

    /// The vacuum `s_∅`.
    pub fn vacuum(&self) -> FockVector {
        FockVector::basis(Multipartition::empty(self.level()))
    }

    /// `⟨wt(λ), α_i^∨⟩`: addable minus removable `i`-nodes.
    pub fn weight_ci(&self, lambda: &Multipartition, i: Residue) -> i64 {
        self.marks(lambda, i)
            .iter()
            .map(|m| match m {
                Mark::Add(_) => 1,
                Mark::Remove(_) => -1,
            })
            .sum()
    }

    /// `F_i` on a single basis vector, accumulated into `out` with scale `c`.
    fn f_basis(&self, i: Residue, lambda: &Multipartition, c: &LaurentPoly, out: &mut FockVector) {
        let marks = self.marks(lambda, i);
        // Walk right to left keeping (addable − removable) strictly after.
        let mut after = 0i64;
        for mark in marks.iter().rev() {
            match *mark {
                Mark::Add(node) => {
                    out.add_term(lambda.with_node(node), &c.shift(after));
                    after += 1;
                }
                Mark::Remove(_) => after -= 1,
            }
        }
    }

    fn e_basis(&self, i: Residue, lambda: &Multipartition, c: &LaurentPoly, out: &mut FockVector) {
        let marks = self.marks(lambda, i);
        let mut before = 0i64;
        for mark in &marks {
            match *mark {
                Mark::Add(_) => before += 1,
                Mark::Remove(node) => {
                    out.add_term(lambda.without_node(node), &c.shift(-before));
                    before -= 1;
                }
            }
        }
    }

    pub fn f_action(&self, i: Residue, v: &FockVector) -> FockVector {
        let mut out = FockVector::zero();
        for (lambda, c) in v {
            self.f_basis(i, lambda, c, &mut out);
        }
        out
    }

    pub fn e_action(&self, i: Residue, v: &FockVector) -> FockVector {
        let mut out = FockVector::zero();
        for (lambda, c) in v {
            self.e_basis(i, lambda, c, &mut out);
        }
        out
    }

    /// `F_i^(k) = F_i^k / [k]!`. Division must be exact.
    pub fn divided_power_f(&self, i: Residue, k: u32, v: &FockVector) -> Result<FockVector> {
        let mut out = v.clone();
        for _ in 0..k {
            out = self.f_action(i, &out);
        }
        if k < 2 {
            return Ok(out);
        }
        let denom = quantum_factorial(k);
        let mut divided = FockVector::zero();
        for (lambda, c) in &out {
            divided.add_term(lambda.clone(), &c.exact_div(&denom)?);
        }
        Ok(divided)
    }

    /// `(E_i F_j − F_j E_i) s_λ − δ_ij [weight_ci(λ, i)] s_λ`; zero exactly
    /// when the commutation relation holds at `λ`.
    pub fn commutator_defect(&self, i: Residue, j: Residue, lambda: &Multipartition) -> FockVector {
        let s = FockVector::basis(lambda.clone());
        let mut out = self.e_action(i, &self.f_action(j, &s));
        out.sub_scaled(
            &LaurentPoly::one(),
            &self.f_action(j, &self.e_action(i, &s)),
        );
        if i == j {
            out.sub_scaled(&quantum_int(self.weight_ci(lambda, i)), &s);
        }
        out
    }
}
