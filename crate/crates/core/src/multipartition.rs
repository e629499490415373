//! Partitions, multipartitions and the node combinatorics built on them.
//!
//! Nodes are always listed in *reading order*: component ascending, then
//! row ascending, then column ascending. Every exponent and signature
//! convention elsewhere in the crate refers to this one order.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds a partition, dropping trailing zeros. Fails if the parts are
    /// not weakly decreasing.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::Argument(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `r`-th part, 1-based; zero past the end.
    pub fn part(&self, r: usize) -> u32 {
        if r == 0 {
            return 0;
        }
        self.parts.get(r - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(1) as usize;
        let parts = (1..=width)
            .map(|c| self.parts.iter().filter(|&&p| p as usize >= c).count() as u32)
            .collect();
        Partition { parts }
    }

    /// True iff every consecutive difference, including the last part
    /// against zero, is below `e`.
    pub fn is_e_restricted(&self, e: Characteristic) -> bool {
        let Characteristic::Finite(e) = e else {
            return true;
        };
        (1..=self.len()).all(|r| self.part(r) - self.part(r + 1) < e)
    }

    /// Rows `r` (1-based) where a node can be added, i.e. `r = 1` or
    /// `λ_{r-1} > λ_r`, up to one row past the last part.
    fn addable_rows(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=self.len() + 1).filter(move |&r| r == 1 || self.part(r - 1) > self.part(r))
    }

    /// Rows whose last node is removable.
    fn removable_rows(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=self.len()).filter(move |&r| self.part(r) > self.part(r + 1))
    }
}

/// Size first, then parts lexicographically. Within one size this is a
/// linear extension of dominance.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| self.parts.cmp(&other.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// An ordered `ℓ`-tuple of partitions.
///
/// The derived order compares level, then size, then components one at a
/// time (each by size, then parts). For multipartitions of the same size and
/// level this is a linear extension of dominance: `λ ⊳ μ` implies `λ > μ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Multipartition {
    components: Vec<Partition>,
}

impl Ord for Multipartition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.level()
            .cmp(&other.level())
            .then_with(|| self.size().cmp(&other.size()))
            .then_with(|| self.components.cmp(&other.components))
    }
}

impl PartialOrd for Multipartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A box `(k, r, c)` of a diagram, all coordinates 1-based. The derived
/// order is the reading order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Node {
    pub comp: usize,
    pub row: usize,
    pub col: usize,
}

impl Node {
    pub const fn new(comp: usize, row: usize, col: usize) -> Self {
        Node { comp, row, col }
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.comp, self.row, self.col)
    }
}

/// The quantum characteristic `e`: a finite modulus `≥ 2`, or infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Characteristic {
    Finite(u32),
    Infinite,
}

impl Characteristic {
    pub fn finite(e: u32) -> Result<Self> {
        if e < 2 {
            return Err(Error::Argument(format!("e must be at least 2, got {e}")));
        }
        Ok(Characteristic::Finite(e))
    }

    /// Reduces an integer to its residue class representative.
    pub fn reduce(self, value: i64) -> Residue {
        match self {
            Characteristic::Finite(e) => Residue(value.rem_euclid(i64::from(e))),
            Characteristic::Infinite => Residue(value),
        }
    }

    /// All residues, or `None` for `e = ∞` where `I = Z`.
    pub fn residues(self) -> Option<impl Iterator<Item = Residue>> {
        match self {
            Characteristic::Finite(e) => Some((0..i64::from(e)).map(Residue)),
            Characteristic::Infinite => None,
        }
    }
}

impl fmt::Display for Characteristic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Characteristic::Finite(e) => write!(f, "{e}"),
            Characteristic::Infinite => f.write_str("inf"),
        }
    }
}

impl FromStr for Characteristic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "inf" {
            return Ok(Characteristic::Infinite);
        }
        let e = s
            .parse::<u32>()
            .map_err(|_| Error::Parse(format!("bad value for e: {s:?}")))?;
        Characteristic::finite(e)
    }
}

/// An element of `I = Z/eZ` (stored reduced), or of `Z` when `e = ∞`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Residue(pub i64);

impl Residue {
    pub fn negate(self, e: Characteristic) -> Residue {
        e.reduce(-self.0)
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A multicharge `(κ_1, …, κ_ℓ)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Charge(Vec<i64>);

impl Charge {
    pub fn new(kappas: Vec<i64>) -> Result<Self> {
        if kappas.is_empty() {
            return Err(Error::Argument("a charge needs at least one entry".into()));
        }
        Ok(Charge(kappas))
    }

    pub fn kappas(&self) -> &[i64] {
        &self.0
    }

    pub fn level(&self) -> usize {
        self.0.len()
    }

    /// `κ' = (−κ_ℓ, …, −κ_1)`.
    pub fn twisted(&self) -> Charge {
        Charge(self.0.iter().rev().map(|k| -k).collect())
    }
}

impl fmt::Display for Charge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, k) in self.0.iter().enumerate() {
            if idx > 0 {
                f.write_str(",")?;
            }
            write!(f, "{k}")?;
        }
        Ok(())
    }
}

/// `res A = −κ_{ℓ+1−k} + c − r`, reduced modulo `e`.
pub fn residue(node: Node, e: Characteristic, charge: &Charge) -> Result<Residue> {
    let level = charge.level();
    if node.comp == 0 || node.comp > level || node.row == 0 || node.col == 0 {
        return Err(Error::Argument(format!(
            "node {node} is not valid at level {level}"
        )));
    }
    Ok(residue_unchecked(node, e, charge))
}

pub(crate) fn residue_unchecked(node: Node, e: Characteristic, charge: &Charge) -> Residue {
    let kappa = charge.0[charge.level() - node.comp];
    e.reduce(-kappa + node.col as i64 - node.row as i64)
}

impl Multipartition {
    pub fn new(components: Vec<Partition>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::Argument(
                "a multipartition needs at least one component".into(),
            ));
        }
        Ok(Multipartition { components })
    }

    /// Builds from raw part lists; convenient in tests.
    pub fn from_parts(parts: &[&[u32]]) -> Result<Self> {
        let components = parts
            .iter()
            .map(|p| Partition::new(p.to_vec()))
            .collect::<Result<Vec<_>>>()?;
        Multipartition::new(components)
    }

    /// The empty multipartition of the given level (must be `≥ 1`).
    pub fn empty(level: usize) -> Self {
        assert!(level >= 1, "level must be positive");
        Multipartition {
            components: vec![Partition::empty(); level],
        }
    }

    pub fn level(&self) -> usize {
        self.components.len()
    }

    pub fn size(&self) -> u32 {
        self.components.iter().map(Partition::size).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.components.iter().all(Partition::is_empty)
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    /// Component `k`, 1-based.
    pub fn component(&self, k: usize) -> &Partition {
        &self.components[k - 1]
    }

    pub fn contains(&self, node: Node) -> bool {
        node.comp >= 1
            && node.comp <= self.level()
            && node.col >= 1
            && node.col as u32 <= self.component(node.comp).part(node.row)
    }

    /// All nodes of the diagram in reading order.
    pub fn diagram(&self) -> Vec<Node> {
        let mut nodes = Vec::with_capacity(self.size() as usize);
        for (k, part) in self.components.iter().enumerate() {
            for (r, &len) in part.parts.iter().enumerate() {
                nodes.extend((1..=len as usize).map(|c| Node::new(k + 1, r + 1, c)));
            }
        }
        nodes
    }

    /// Reverses the components and transposes each one.
    pub fn conjugate(&self) -> Multipartition {
        Multipartition {
            components: self
                .components
                .iter()
                .rev()
                .map(Partition::conjugate)
                .collect(),
        }
    }

    /// Dominance `self ⊵ other`.
    pub fn dominates(&self, other: &Multipartition) -> Result<bool> {
        if self.level() != other.level() || self.size() != other.size() {
            return Err(Error::Argument(format!(
                "cannot compare {self} and {other}: level or size differs"
            )));
        }
        Ok(self.dominates_unchecked(other))
    }

    pub(crate) fn dominates_unchecked(&self, other: &Multipartition) -> bool {
        let (mut before_self, mut before_other) = (0u32, 0u32);
        for (a, b) in self.components.iter().zip(&other.components) {
            let rows = a.len().max(b.len());
            let (mut sa, mut sb) = (before_self, before_other);
            for r in 1..=rows {
                sa += a.part(r);
                sb += b.part(r);
                if sa < sb {
                    return false;
                }
            }
            // rows == 0 still has to compare the running totals
            if sa < sb {
                return false;
            }
            before_self = sa;
            before_other = sb;
        }
        true
    }

    /// Adds a node. The caller must ensure the result is a diagram.
    pub fn with_node(&self, node: Node) -> Multipartition {
        let mut out = self.clone();
        let parts = &mut out.components[node.comp - 1].parts;
        if node.row > parts.len() {
            debug_assert_eq!(node.row, parts.len() + 1);
            debug_assert_eq!(node.col, 1);
            parts.push(1);
        } else {
            debug_assert_eq!(parts[node.row - 1] as usize + 1, node.col);
            parts[node.row - 1] += 1;
        }
        out
    }

    /// Removes a removable node.
    pub fn without_node(&self, node: Node) -> Multipartition {
        let mut out = self.clone();
        let parts = &mut out.components[node.comp - 1].parts;
        debug_assert_eq!(parts[node.row - 1] as usize, node.col);
        parts[node.row - 1] -= 1;
        if parts[node.row - 1] == 0 {
            parts.pop();
        }
        out
    }

    /// Every addable node, in reading order.
    pub fn addable(&self) -> Vec<Node> {
        let mut nodes = Vec::new();
        for (k, part) in self.components.iter().enumerate() {
            nodes.extend(
                part.addable_rows()
                    .map(|r| Node::new(k + 1, r, part.part(r) as usize + 1)),
            );
        }
        nodes
    }

    /// Every removable node, in reading order.
    pub fn removable(&self) -> Vec<Node> {
        let mut nodes = Vec::new();
        for (k, part) in self.components.iter().enumerate() {
            nodes.extend(
                part.removable_rows()
                    .map(|r| Node::new(k + 1, r, part.part(r) as usize)),
            );
        }
        nodes
    }

    /// Addable nodes of residue `i`, in reading order.
    pub fn addable_nodes(&self, i: Residue, e: Characteristic, charge: &Charge) -> Vec<Node> {
        self.addable()
            .into_iter()
            .filter(|&a| residue_unchecked(a, e, charge) == i)
            .collect()
    }

    /// Removable nodes of residue `i`, in reading order.
    pub fn removable_nodes(&self, i: Residue, e: Characteristic, charge: &Charge) -> Vec<Node> {
        self.removable()
            .into_iter()
            .filter(|&a| residue_unchecked(a, e, charge) == i)
            .collect()
    }

    pub fn is_e_restricted(&self, e: Characteristic) -> bool {
        self.components.iter().all(|p| p.is_e_restricted(e))
    }
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, part) in self.components.iter().enumerate() {
            if k > 0 {
                f.write_str("|")?;
            }
            if part.is_empty() {
                f.write_str("-")?;
            }
            for (r, p) in part.parts.iter().enumerate() {
                if r > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{p}")?;
            }
        }
        Ok(())
    }
}

/// Parses `2,1|-` style text. Only the canonical spelling is accepted, so
/// printing a parsed value reproduces the input byte for byte.
impl FromStr for Multipartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |why: &str| Error::Parse(format!("{s:?}: {why}"));
        let mut components = Vec::new();
        for text in s.split('|') {
            if text == "-" {
                components.push(Partition::empty());
                continue;
            }
            if text.is_empty() {
                return Err(bad("empty component must be written '-'"));
            }
            let mut parts = Vec::new();
            for p in text.split(',') {
                if p.is_empty() || !p.bytes().all(|b| b.is_ascii_digit()) || p.starts_with('0') {
                    return Err(bad(
                        "parts must be positive integers without sign or padding",
                    ));
                }
                parts.push(p.parse::<u32>().map_err(|_| bad("part out of range"))?);
            }
            if parts.windows(2).any(|w| w[0] < w[1]) {
                return Err(bad("parts must be weakly decreasing"));
            }
            components.push(Partition { parts });
        }
        Ok(Multipartition { components })
    }
}

/// Number of standard tableaux of shape `λ` via the removable-node
/// recursion.
pub fn count_std(lambda: &Multipartition) -> BigUint {
    let mut memo = BTreeMap::new();
    count_std_memo(lambda, &mut memo)
}

fn count_std_memo(
    lambda: &Multipartition,
    memo: &mut BTreeMap<Multipartition, BigUint>,
) -> BigUint {
    if lambda.is_empty() {
        return BigUint::one();
    }
    if let Some(hit) = memo.get(lambda) {
        return hit.clone();
    }
    let mut total = BigUint::zero();
    for node in lambda.removable() {
        total += count_std_memo(&lambda.without_node(node), memo);
    }
    memo.insert(lambda.clone(), total.clone());
    total
}

/// Partitions of `n` with parts at most `max`, in decreasing lexicographic
/// order.
fn partitions_bounded(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if n == 0 {
        out.push(Partition {
            parts: prefix.clone(),
        });
        return;
    }
    for p in (1..=max.min(n)).rev() {
        prefix.push(p);
        partitions_bounded(n - p, p, prefix, out);
        prefix.pop();
    }
}

/// All partitions of `n`.
pub fn partitions(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    partitions_bounded(n, n, &mut Vec::new(), &mut out);
    out
}

/// All multipartitions of `n` with `level` components, most dominant first
/// (descending in the crate's linear extension of dominance).
pub fn multipartitions(n: u32, level: usize) -> Vec<Multipartition> {
    assert!(level >= 1, "level must be positive");
    let by_size: Vec<Vec<Partition>> = (0..=n).map(partitions).collect();
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(level);
    fill_components(n, level, &by_size, &mut current, &mut out);
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

fn fill_components(
    remaining: u32,
    slots: usize,
    by_size: &[Vec<Partition>],
    current: &mut Vec<Partition>,
    out: &mut Vec<Multipartition>,
) {
    if slots == 1 {
        for p in &by_size[remaining as usize] {
            current.push(p.clone());
            out.push(Multipartition {
                components: current.clone(),
            });
            current.pop();
        }
        return;
    }
    for size in 0..=remaining {
        for p in &by_size[size as usize] {
            current.push(p.clone());
            fill_components(remaining - size, slots - 1, by_size, current, out);
            current.pop();
        }
    }
}

/// Renders a multipartition list in the text grammar; handy for messages.
pub fn join(items: &[Multipartition]) -> String {
    let mut s = String::new();
    for (idx, mp) in items.iter().enumerate() {
        if idx > 0 {
            s.push(' ');
        }
        s.push_str(&format!("{mp}"));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn mp(s: &str) -> Multipartition {
        s.parse().unwrap()
    }

    fn e(v: u32) -> Characteristic {
        Characteristic::finite(v).unwrap()
    }

    fn charge(k: &[i64]) -> Charge {
        Charge::new(k.to_vec()).unwrap()
    }

    #[test]
    fn diagram_in_reading_order() {
        assert!(mp("-").diagram().is_empty());
        assert_eq!(
            mp("2,1").diagram(),
            vec![Node::new(1, 1, 1), Node::new(1, 1, 2), Node::new(1, 2, 1)]
        );
        assert_eq!(
            mp("1|1").diagram(),
            vec![Node::new(1, 1, 1), Node::new(2, 1, 1)]
        );
    }

    #[test]
    fn conjugation() {
        assert_eq!(mp("-").conjugate(), mp("-"));
        assert_eq!(mp("3,1").conjugate(), mp("2,1,1"));
        assert_eq!(mp("2|1").conjugate(), mp("1|1,1"));
    }

    #[test]
    fn dominance_examples() {
        let l = mp("2,1|1");
        assert!(l.dominates(&l).unwrap());
        assert!(mp("2").dominates(&mp("1,1")).unwrap());
        assert!(!mp("1,1").dominates(&mp("2")).unwrap());
        assert!(mp("1|1").dominates(&mp("-|1,1")).unwrap());
        assert!(mp("1|1").dominates(&mp("2")).is_err());
        assert!(mp("2").dominates(&mp("1")).is_err());
    }

    #[test]
    fn residues() {
        assert_eq!(
            residue(Node::new(1, 1, 1), e(3), &charge(&[0])).unwrap(),
            Residue(0)
        );
        assert_eq!(
            residue(Node::new(1, 2, 1), e(3), &charge(&[0])).unwrap(),
            Residue(2)
        );
        assert_eq!(
            residue(Node::new(1, 1, 1), e(4), &charge(&[0, 1])).unwrap(),
            Residue(3)
        );
        assert_eq!(
            residue(Node::new(1, 3, 1), Characteristic::Infinite, &charge(&[0])).unwrap(),
            Residue(-2)
        );
        assert!(residue(Node::new(2, 1, 1), e(3), &charge(&[0])).is_err());
        assert!(Characteristic::finite(1).is_err());
        assert!(Characteristic::finite(0).is_err());
    }

    #[test]
    fn addable_and_removable() {
        let k = charge(&[0]);
        assert_eq!(
            mp("-").addable_nodes(Residue(0), e(2), &k),
            vec![Node::new(1, 1, 1)]
        );
        assert_eq!(
            mp("1").addable_nodes(Residue(1), e(2), &k),
            vec![Node::new(1, 1, 2), Node::new(1, 2, 1)]
        );
        assert_eq!(
            mp("2,1").removable_nodes(Residue(1), e(2), &k),
            vec![Node::new(1, 1, 2), Node::new(1, 2, 1)]
        );
        assert!(mp("2,1").addable_nodes(Residue(1), e(2), &k).is_empty());
    }

    #[test]
    fn standard_tableaux_counts() {
        assert_eq!(count_std(&mp("5")), BigUint::from(1u32));
        assert_eq!(count_std(&mp("2,1")), BigUint::from(2u32));
        assert_eq!(count_std(&mp("1|1")), BigUint::from(2u32));
        assert_eq!(count_std(&mp("-|-")), BigUint::from(1u32));
        assert_eq!(count_std(&mp("3,2,1")), BigUint::from(16u32));
    }

    #[test]
    fn restricted_partitions() {
        assert!(Partition::new(vec![1, 1, 1]).unwrap().is_e_restricted(e(2)));
        assert!(!Partition::new(vec![2]).unwrap().is_e_restricted(e(2)));
        assert!(Partition::new(vec![2, 1]).unwrap().is_e_restricted(e(2)));
        assert!(Partition::new(vec![7])
            .unwrap()
            .is_e_restricted(Characteristic::Infinite));
    }

    #[test]
    fn text_grammar() {
        for s in ["2,1|-", "3", "-|-", "-", "10,10,2|1|-"] {
            assert_eq!(mp(s).to_string(), s);
        }
        assert_eq!(mp("-|-").level(), 2);
        for bad in [
            "", "1,2", "0", "2,0", "|1", "1||2", " 1", "+1", "01", "1,", "a",
        ] {
            assert!(bad.parse::<Multipartition>().is_err(), "{bad:?} accepted");
        }
    }

    #[test]
    fn enumeration_counts() {
        // p(6) = 11; bipartitions of 4 number 20.
        assert_eq!(multipartitions(6, 1).len(), 11);
        assert_eq!(multipartitions(4, 2).len(), 20);
        assert_eq!(multipartitions(0, 3), vec![Multipartition::empty(3)]);
        let all = multipartitions(4, 2);
        assert_eq!(all[0], mp("4|-"));
        assert_eq!(all.last().unwrap(), &mp("-|1,1,1,1"));
    }

    #[test]
    fn order_extends_dominance() {
        for level in 1..=3 {
            for n in 0..=5 {
                let all = multipartitions(n, level);
                for a in &all {
                    for b in &all {
                        if a != b && a.dominates_unchecked(b) {
                            assert!(a > b, "{a} ⊳ {b} but ordered below");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn partition_rejects_increasing() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(Partition::new(vec![2, 1, 0, 0]).unwrap().parts(), &[2, 1]);
    }
}
