use fockcanon_core::multipartition::{count_std, multipartitions, partitions, residue};
use fockcanon_core::{Characteristic, Charge, Multipartition, Node, Partition, Residue};
use num_bigint::BigUint;
use proptest::prelude::*;

/// Euler's pentagonal-number recurrence.
fn partition_counts(max: usize) -> Vec<u64> {
    let mut p = vec![0i64; max + 1];
    p[0] = 1;
    for n in 1..=max as i64 {
        let mut total = 0;
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > n {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            total += sign * p[(n - g1) as usize];
            let g2 = k * (3 * k + 1) / 2;
            if g2 <= n {
                total += sign * p[(n - g2) as usize];
            }
        }
        p[n as usize] = total;
    }
    p.into_iter().map(|v| v as u64).collect()
}

fn factorial(n: u32) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

/// Hook length formula per component, times the multinomial for
/// distributing labels among components.
fn hook_count(lambda: &Multipartition) -> BigUint {
    let mut total = factorial(lambda.size());
    for comp in lambda.components() {
        let conj = comp.conjugate();
        let mut hooks = BigUint::from(1u32);
        for (r, &len) in comp.parts().iter().enumerate() {
            for c in 1..=len as usize {
                let arm = len as usize - c;
                let leg = conj.parts()[c - 1] as usize - (r + 1);
                hooks *= BigUint::from((arm + leg + 1) as u64);
            }
        }
        total /= hooks;
    }
    total
}

/// Dominance straight from the definition: every partial sum of rows,
/// read component by component, is at least the other's.
fn dominates_by_definition(a: &Multipartition, b: &Multipartition) -> bool {
    fn sums(m: &Multipartition, width: &[usize]) -> Vec<u32> {
        let mut out = Vec::new();
        let mut acc = 0;
        for (k, comp) in m.components().iter().enumerate() {
            for r in 0..width[k] {
                acc += comp.parts().get(r).copied().unwrap_or(0);
                out.push(acc);
            }
            out.push(acc);
        }
        out
    }
    let width: Vec<usize> = a
        .components()
        .iter()
        .zip(b.components())
        .map(|(x, y)| x.len().max(y.len()))
        .collect();
    sums(a, &width)
        .iter()
        .zip(sums(b, &width))
        .all(|(x, y)| *x >= y)
}

#[test]
fn partition_enumeration_counts() {
    let p = partition_counts(16);
    for n in 0..=16u32 {
        let parts = partitions(n);
        assert_eq!(parts.len() as u64, p[n as usize], "n={n}");
        assert!(parts.iter().all(|x| x.size() == n));
        let mut dedup = parts.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), parts.len());
    }
    for level in 1..=3usize {
        for n in 0..=7u32 {
            // coefficient of x^n in P(x)^level
            let mut conv = vec![1u64];
            for _ in 0..level {
                conv = (0..=n as usize)
                    .map(|m| {
                        (0..=m)
                            .map(|j| conv.get(j).copied().unwrap_or(0) * p[m - j])
                            .sum()
                    })
                    .collect();
            }
            assert_eq!(multipartitions(n, level).len() as u64, conv[n as usize]);
        }
    }
}

#[test]
fn standard_tableaux_match_hook_formula() {
    for level in 1..=3 {
        for n in 0..=6 {
            for lam in multipartitions(n, level) {
                assert_eq!(count_std(&lam), hook_count(&lam), "{lam}");
            }
        }
    }
    // Σ #Std(λ)² = n! at level 1
    for n in 0..=8 {
        let s: BigUint = multipartitions(n, 1)
            .iter()
            .map(|l| count_std(l).pow(2))
            .sum();
        assert_eq!(s, factorial(n));
    }
}

#[test]
fn dominance_agrees_with_definition_and_order() {
    for level in 1..=3usize {
        let max_n = if level == 3 { 4 } else { 6 };
        for n in 0..=max_n {
            let all = multipartitions(n, level);
            // stored most dominant first, strictly descending
            assert!(all.windows(2).all(|w| w[0] > w[1]));
            for a in &all {
                for b in &all {
                    let d = a.dominates(b).unwrap();
                    assert_eq!(d, dominates_by_definition(a, b), "{a} vs {b}");
                    if d {
                        assert!(a >= b, "order does not extend dominance at {a}, {b}");
                    }
                    assert_eq!(d, b.conjugate().dominates(&a.conjugate()).unwrap());
                }
            }
        }
    }
}

#[test]
fn dominance_rejects_mismatched_shapes() {
    let a: Multipartition = "2".parse().unwrap();
    let b: Multipartition = "1".parse().unwrap();
    let c: Multipartition = "1|1".parse().unwrap();
    assert!(a.dominates(&b).is_err());
    assert!(a.dominates(&c).is_err());
}

#[test]
fn residues_follow_the_charge() {
    let e = Characteristic::finite(5).unwrap();
    let charge = Charge::new(vec![1, 3]).unwrap();
    // component 1 uses κ_2, component 2 uses κ_1
    assert_eq!(residue(Node::new(1, 1, 1), e, &charge).unwrap(), Residue(2));
    assert_eq!(residue(Node::new(2, 1, 1), e, &charge).unwrap(), Residue(4));
    assert_eq!(residue(Node::new(2, 3, 1), e, &charge).unwrap(), Residue(2));
    assert!(residue(Node::new(3, 1, 1), e, &charge).is_err());
    let inf = Characteristic::Infinite;
    assert_eq!(
        residue(Node::new(1, 1, 4), inf, &Charge::new(vec![0]).unwrap()).unwrap(),
        Residue(3)
    );
    assert_eq!(
        residue(Node::new(1, 3, 1), inf, &Charge::new(vec![1]).unwrap()).unwrap(),
        Residue(-3)
    );
}

fn multipartition() -> impl Strategy<Value = Multipartition> {
    prop::collection::vec(prop::collection::vec(1u32..7, 0..5), 1..4).prop_map(|comps| {
        let comps = comps
            .into_iter()
            .map(|mut parts| {
                parts.sort_unstable_by(|a, b| b.cmp(a));
                Partition::new(parts).unwrap()
            })
            .collect();
        Multipartition::new(comps).unwrap()
    })
}

proptest! {
    #[test]
    fn text_round_trip(m in multipartition()) {
        let text = m.to_string();
        let back: Multipartition = text.parse().unwrap();
        prop_assert_eq!(&back, &m);
        prop_assert_eq!(back.to_string(), text);
    }

    #[test]
    fn conjugation_is_an_involution(m in multipartition()) {
        prop_assert_eq!(m.conjugate().conjugate(), m.clone());
        prop_assert_eq!(m.conjugate().size(), m.size());
        if m.size() <= 9 {
            prop_assert_eq!(count_std(&m.conjugate()), count_std(&m));
        }
    }

    #[test]
    fn node_edits_invert(m in multipartition()) {
        for node in m.addable() {
            let up = m.with_node(node);
            prop_assert!(up.removable().contains(&node));
            prop_assert_eq!(up.without_node(node), m.clone());
        }
        for node in m.removable() {
            prop_assert_eq!(m.without_node(node).with_node(node), m.clone());
        }
    }
}

#[test]
fn text_grammar_is_strict() {
    for good in ["-", "3", "2,1|-", "-|-", "10,2,2|1|-"] {
        assert_eq!(good.parse::<Multipartition>().unwrap().to_string(), good);
    }
    for bad in [
        "", "|", "1|", "1,2", "01", "+1", "1,,1", " 1", "1|-1", "2,0", "a",
    ] {
        assert!(
            bad.parse::<Multipartition>().is_err(),
            "{bad:?} should be rejected"
        );
    }
}
