//! Root and weight data for type `A^(1)_{e−1}` (and `A_∞`).
//!
//! Pairings use `(Λ_i, α_j) = δ_ij` and `(α_i, α_j) = a_ij`.

use alloc::collections::BTreeMap;
use alloc::format;
use core::fmt;

use crate::error::{ConventionFault, Error, Result};
use crate::multipartition::{residue_unchecked, Characteristic, Charge, Multipartition, Residue};

/// `β = Σ m_i α_i ∈ Q⁺`, stored sparsely (zero entries omitted).
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootVector(BTreeMap<Residue, u32>);

/// `Λ = Σ m_i Λ_i ∈ P⁺`, stored sparsely.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Weight(BTreeMap<Residue, u32>);

impl RootVector {
    pub fn get(&self, i: Residue) -> u32 {
        self.0.get(&i).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Residue, u32)> + '_ {
        self.0.iter().map(|(&i, &m)| (i, m))
    }

    pub fn height(&self) -> u32 {
        self.0.values().sum()
    }

    fn bump(&mut self, i: Residue) {
        *self.0.entry(i).or_insert(0) += 1;
    }

    /// `(β, γ)` under the Cartan pairing.
    pub fn pair(&self, other: &RootVector, e: Characteristic) -> i64 {
        let mut total = 0;
        for (i, a) in self.iter() {
            for (j, b) in other.iter() {
                total += i64::from(a) * i64::from(b) * cartan(i, j, e);
            }
        }
        total
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (idx, (i, m)) in self.iter().enumerate() {
            if idx > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{i}:{m}")?;
        }
        f.write_str("}")
    }
}

impl Weight {
    pub fn get(&self, i: Residue) -> u32 {
        self.0.get(&i).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Residue, u32)> + '_ {
        self.0.iter().map(|(&i, &m)| (i, m))
    }

    /// `(Λ, β)`.
    pub fn pair(&self, beta: &RootVector) -> i64 {
        self.iter()
            .map(|(i, m)| i64::from(m) * i64::from(beta.get(i)))
            .sum()
    }
}

/// Cartan matrix entry `a_ij`.
pub fn cartan(i: Residue, j: Residue, e: Characteristic) -> i64 {
    if i == j {
        return 2;
    }
    match e {
        Characteristic::Finite(2) => -2,
        Characteristic::Finite(m) => {
            let d = (i.0 - j.0).rem_euclid(i64::from(m));
            if d == 1 || d == i64::from(m) - 1 {
                -1
            } else {
                0
            }
        }
        Characteristic::Infinite => {
            if (i.0 - j.0).abs() == 1 {
                -1
            } else {
                0
            }
        }
    }
}

/// `Λ′ = Σ_i l_i Λ_i` with `l_i = #{l : i ≡ −κ_l}`.
pub fn weight_from_charge(e: Characteristic, charge: &Charge) -> Weight {
    let mut mult = BTreeMap::new();
    for &k in charge.kappas() {
        *mult.entry(e.reduce(-k)).or_insert(0) += 1;
    }
    Weight(mult)
}

/// `β_λ = Σ_{A ∈ [λ]} α_{res A}`.
pub fn beta(lambda: &Multipartition, e: Characteristic, charge: &Charge) -> RootVector {
    let mut out = RootVector::default();
    for node in lambda.diagram() {
        out.bump(residue_unchecked(node, e, charge));
    }
    out
}

/// `defect λ = (Λ′, β_λ) − ½(β_λ, β_λ)`; must be a non-negative integer.
pub fn defect(lambda: &Multipartition, e: Characteristic, charge: &Charge) -> Result<u32> {
    if lambda.level() != charge.level() {
        return Err(Error::Argument(format!(
            "{lambda} does not have level {}",
            charge.level()
        )));
    }
    let b = beta(lambda, e, charge);
    let norm = b.pair(&b, e);
    let value = 2 * weight_from_charge(e, charge).pair(&b) - norm;
    if value < 0 || value % 2 != 0 {
        return Err(ConventionFault::Defect {
            lambda: lambda.clone(),
        }
        .into());
    }
    Ok((value / 2) as u32)
}

/// `β_λ = β_μ`.
pub fn same_block(
    lambda: &Multipartition,
    mu: &Multipartition,
    e: Characteristic,
    charge: &Charge,
) -> Result<bool> {
    if lambda.size() != mu.size() || lambda.level() != mu.level() {
        return Err(Error::Argument(format!(
            "{lambda} and {mu} differ in size or level"
        )));
    }
    Ok(beta(lambda, e, charge) == beta(mu, e, charge))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multipartition::multipartitions;
    use alloc::collections::BTreeMap;
    use alloc::vec;

    fn e(v: u32) -> Characteristic {
        Characteristic::finite(v).unwrap()
    }

    fn mp(s: &str) -> Multipartition {
        s.parse().unwrap()
    }

    fn ch(k: &[i64]) -> Charge {
        Charge::new(k.to_vec()).unwrap()
    }

    #[test]
    fn cartan_entries() {
        for m in 2..=8 {
            assert_eq!(cartan(Residue(0), Residue(0), e(m)), 2);
        }
        assert_eq!(cartan(Residue(0), Residue(0), Characteristic::Infinite), 2);
        assert_eq!(cartan(Residue(0), Residue(1), e(2)), -2);
        assert_eq!(cartan(Residue(0), Residue(2), e(5)), 0);
        assert_eq!(cartan(Residue(0), Residue(4), e(5)), -1);
        assert_eq!(cartan(Residue(3), Residue(4), Characteristic::Infinite), -1);
        assert_eq!(cartan(Residue(3), Residue(5), Characteristic::Infinite), 0);
    }

    #[test]
    fn cartan_is_symmetric_affine() {
        for m in 2..=8 {
            let ch = e(m);
            for i in 0..i64::from(m) {
                let row: i64 = (0..i64::from(m))
                    .map(|j| cartan(Residue(i), Residue(j), ch))
                    .sum();
                assert_eq!(row, 0, "row {i} for e={m}");
                for j in 0..i64::from(m) {
                    assert_eq!(
                        cartan(Residue(i), Residue(j), ch),
                        cartan(Residue(j), Residue(i), ch)
                    );
                }
            }
        }
    }

    #[test]
    fn weights() {
        let w = weight_from_charge(e(5), &ch(&[0]));
        assert_eq!(
            w.iter().collect::<alloc::vec::Vec<_>>(),
            vec![(Residue(0), 1)]
        );
        let w = weight_from_charge(e(2), &ch(&[0, 1]));
        assert_eq!((w.get(Residue(0)), w.get(Residue(1))), (1, 1));
        let w = weight_from_charge(e(2), &ch(&[0, 2]));
        assert_eq!((w.get(Residue(0)), w.get(Residue(1))), (2, 0));
        let w = weight_from_charge(e(3), &ch(&[1]));
        assert_eq!(w.get(Residue(2)), 1);
    }

    #[test]
    fn betas() {
        let k = ch(&[0]);
        assert_eq!(beta(&mp("-"), e(2), &k), RootVector::default());
        let expected = RootVector(BTreeMap::from([(Residue(0), 1), (Residue(1), 1)]));
        assert_eq!(beta(&mp("2"), e(2), &k), expected);
        assert_eq!(beta(&mp("1,1"), e(2), &k), expected);
    }

    #[test]
    fn defects() {
        let k = ch(&[0]);
        assert_eq!(defect(&mp("-"), e(2), &k).unwrap(), 0);
        assert_eq!(defect(&mp("1"), e(2), &k).unwrap(), 0);
        assert_eq!(defect(&mp("2"), e(2), &k).unwrap(), 1);
        assert_eq!(defect(&mp("3"), e(3), &k).unwrap(), 1);
        assert_eq!(defect(&mp("4"), Characteristic::Infinite, &k).unwrap(), 0);
        assert!(defect(&mp("1|1"), e(2), &k).is_err());
    }

    #[test]
    fn blocks() {
        let k = ch(&[0]);
        assert!(same_block(&mp("2,1"), &mp("2,1"), e(3), &k).unwrap());
        assert!(same_block(&mp("2"), &mp("1,1"), e(2), &k).unwrap());
        assert!(!same_block(&mp("2"), &mp("1,1"), e(3), &k).unwrap());
        assert!(same_block(&mp("2"), &mp("1"), e(3), &k).is_err());
    }

    #[test]
    fn defect_is_a_nonnegative_block_invariant() {
        for (m, charge) in [
            (2, ch(&[0])),
            (3, ch(&[0])),
            (2, ch(&[0, 1])),
            (3, ch(&[0, 1])),
            (4, ch(&[1, 3])),
        ] {
            let ch_e = e(m);
            let max_n = if charge.level() == 1 { 8 } else { 6 };
            for n in 0..=max_n {
                let mut by_block: BTreeMap<RootVector, u32> = BTreeMap::new();
                for lam in multipartitions(n, charge.level()) {
                    let b = beta(&lam, ch_e, &charge);
                    assert_eq!(b.height(), n);
                    assert_eq!(b.pair(&b, ch_e) % 2, 0);
                    let d = defect(&lam, ch_e, &charge).unwrap();
                    assert_eq!(*by_block.entry(b).or_insert(d), d, "{lam}");
                }
            }
        }
    }
}
