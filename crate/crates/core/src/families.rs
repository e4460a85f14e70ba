//! Standard poset families used as fixtures and by the CLI generator:
//! chains, antichains, Boolean lattices, divisor lattices, grid products,
//! and seeded random posets.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::poset::FinitePoset;

/// Labels `1..=n` with `i` covered by `i+1`.
pub fn chain(n: usize) -> FinitePoset {
    let labels = numeric_labels(n);
    let covers: Vec<(String, String)> = (1..n)
        .map(|i| (i.to_string(), (i + 1).to_string()))
        .collect();
    FinitePoset::from_cover_relation(labels, covers).expect("chain construction is valid")
}

/// Labels `1..=n`, no relations.
pub fn antichain(n: usize) -> FinitePoset {
    FinitePoset::from_cover_relation(numeric_labels(n), core::iter::empty::<(String, String)>())
        .expect("antichain construction is valid")
}

pub fn numeric_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

/// Subsets of `{1..n}` ordered by inclusion, labelled `{}`, `{1}`, `{1,2}`, …
///
/// The poset has 2^n elements; callers must keep `n` small (asserted at 20,
/// matching the CLI guard).
pub fn boolean(n: u32) -> FinitePoset {
    assert!(n <= 20, "boolean family limited to n <= 20");
    let labels: Vec<String> = (0u32..1 << n).map(|mask| boolean_label(mask, n)).collect();
    let mut covers = Vec::new();
    for mask in 0u32..1 << n {
        for bit in 0..n {
            if mask >> bit & 1 == 0 {
                covers.push((boolean_label(mask, n), boolean_label(mask | 1 << bit, n)));
            }
        }
    }
    FinitePoset::from_cover_relation(labels, covers).expect("boolean construction is valid")
}

/// Label of a subset mask in the Boolean family, e.g. `{1,3}`.
pub fn boolean_label(mask: u32, n: u32) -> String {
    let elems: Vec<String> = (0..n)
        .filter(|bit| mask >> bit & 1 == 1)
        .map(|bit| (bit + 1).to_string())
        .collect();
    format!("{{{}}}", elems.join(","))
}

/// The divisors of `n` ordered by divisibility (`n >= 1`). Decimal labels.
pub fn divisor(n: u64) -> FinitePoset {
    assert!(n >= 1, "divisor family requires n >= 1");
    let divs = divisors_of(n);
    let labels: Vec<String> = divs.iter().map(|d| d.to_string()).collect();
    let covers = divisor_covers(&divs);
    FinitePoset::from_cover_relation(labels, covers).expect("divisor construction is valid")
}

pub fn divisors_of(n: u64) -> Vec<u64> {
    let mut divs: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
    divs.sort_unstable();
    divs
}

/// Cover pairs among a divisor set: `d` covered by `e` iff `e/d` is prime.
pub fn divisor_covers(divs: &[u64]) -> Vec<(String, String)> {
    let mut covers = Vec::new();
    for &d in divs {
        for &e in divs {
            if e > d && e % d == 0 && is_prime(e / d) {
                covers.push((d.to_string(), e.to_string()));
            }
        }
    }
    covers
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut k = 2;
    while k * k <= n {
        if n % k == 0 {
            return false;
        }
        k += 1;
    }
    true
}

/// The product of an `a`-chain and a `b`-chain: elements `x,y` with
/// `1 <= x <= a`, `1 <= y <= b` under the componentwise order. The labels
/// use the same `x,y` encoding as the planar lazy posets.
pub fn grid(a: usize, b: usize) -> FinitePoset {
    let mut labels = Vec::new();
    let mut covers = Vec::new();
    for x in 1..=a {
        for y in 1..=b {
            labels.push(grid_label(x, y));
            if x < a {
                covers.push((grid_label(x, y), grid_label(x + 1, y)));
            }
            if y < b {
                covers.push((grid_label(x, y), grid_label(x, y + 1)));
            }
        }
    }
    FinitePoset::from_cover_relation(labels, covers).expect("grid construction is valid")
}

pub fn grid_label(x: usize, y: usize) -> String {
    format!("{x},{y}")
}

/// A seeded random poset on `n` elements labelled `e0..e{n-1}`: each forward
/// pair `(i, j)`, `i < j`, is related with probability ~1/3 and the result
/// is transitively closed. Deterministic for a fixed `(n, seed)`.
pub fn random_poset(n: usize, seed: u64) -> FinitePoset {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let labels: Vec<String> = (0..n).map(|i| format!("e{i}")).collect();
    let mut covers = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_range(0..3u32) == 0 {
                covers.push((labels[i].clone(), labels[j].clone()));
            }
        }
    }
    FinitePoset::from_cover_relation(labels, covers).expect("forward edges cannot cycle")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_sizes_and_order() {
        assert!(chain(0).is_empty());
        let c = chain(4);
        assert_eq!(c.len(), 4);
        assert!(c.leq_labels("1", "4").unwrap());
        assert!(!c.leq_labels("4", "1").unwrap());
    }

    #[test]
    fn divisor_12_shape() {
        let d = divisor(12);
        assert_eq!(d.labels(), ["1", "2", "3", "4", "6", "12"]);
        assert!(d.leq_labels("2", "12").unwrap());
        assert!(!d.leq_labels("4", "6").unwrap());
        // 4 covers 2 but not 1 (12/1 has the non-prime quotient 4 on that edge).
        assert!(d.covers(d.index_of("2").unwrap(), d.index_of("4").unwrap()));
        assert!(!d.covers(d.index_of("1").unwrap(), d.index_of("4").unwrap()));
    }

    #[test]
    fn boolean_labels_are_subset_notation() {
        let b = boolean(3);
        assert_eq!(b.len(), 8);
        assert!(b.leq_labels("{}", "{1,2,3}").unwrap());
        assert!(b.leq_labels("{1}", "{1,3}").unwrap());
        assert!(!b.leq_labels("{1}", "{2,3}").unwrap());
    }

    #[test]
    fn grid_is_componentwise() {
        let g = grid(3, 2);
        assert_eq!(g.len(), 6);
        assert!(g.leq_labels("1,1", "3,2").unwrap());
        assert!(!g.leq_labels("2,1", "1,2").unwrap());
    }

    #[test]
    fn random_poset_is_deterministic_per_seed() {
        let a = random_poset(7, 42);
        let b = random_poset(7, 42);
        assert_eq!(a.transitive_reduction(), b.transitive_reduction());
        let c = random_poset(7, 43);
        // Overwhelmingly likely to differ; structure equality is what matters.
        assert_eq!(a.len(), c.len());
    }
}
