//! Explicitly stored finite partial orders.
//!
//! A [`FinitePoset`] keeps the full ≤ relation as a bit matrix, so order
//! queries are O(1) and the poset axioms can be checked wholesale. Elements
//! carry opaque string labels at the API surface and dense indices
//! internally; serialization always speaks labels.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

/// Default cap on how many ideals [`FinitePoset::enumerate_order_ideals`]
/// may produce before giving up (ideal counts grow as fast as 2^n).
pub const DEFAULT_IDEAL_BUDGET: usize = 1_000_000;

/// Errors from poset construction and label-based queries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PosetError {
    /// The same label was declared twice.
    DuplicateLabel(String),
    /// A query or cover pair referenced a label the poset does not contain.
    UnknownLabel(String),
    /// The transitive closure of the covers relates two elements both ways,
    /// so no partial order extends them.
    Cycle(String, String),
    /// Ideal enumeration would exceed the configured cap.
    BudgetExceeded { budget: usize },
}

impl fmt::Display for PosetError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PosetError::DuplicateLabel(l) => write!(f, "duplicate label {l:?}"),
            PosetError::UnknownLabel(l) => write!(f, "unknown label {l:?}"),
            PosetError::Cycle(a, b) => {
                write!(f, "cover relation is cyclic: {a:?} and {b:?} order each other")
            }
            PosetError::BudgetExceeded { budget } => {
                write!(f, "ideal enumeration exceeded budget of {budget}")
            }
        }
    }
}

impl core::error::Error for PosetError {}

/// Square bit matrix with u64-packed rows.
#[derive(Clone, PartialEq, Eq)]
pub(crate) struct BitMatrix {
    n: usize,
    stride: usize,
    words: Vec<u64>,
}

impl BitMatrix {
    pub(crate) fn new(n: usize) -> Self {
        let stride = n.div_ceil(64);
        BitMatrix { n, stride, words: alloc::vec![0; n * stride] }
    }

    #[inline]
    pub(crate) fn get(&self, i: usize, j: usize) -> bool {
        self.words[i * self.stride + j / 64] >> (j % 64) & 1 == 1
    }

    #[inline]
    pub(crate) fn set(&mut self, i: usize, j: usize) {
        self.words[i * self.stride + j / 64] |= 1 << (j % 64);
    }

    pub(crate) fn row(&self, i: usize) -> &[u64] {
        &self.words[i * self.stride..(i + 1) * self.stride]
    }

    /// OR row `src` into row `dst` in place.
    fn or_rows(&mut self, src: usize, dst: usize) {
        let (s, d) = (src * self.stride, dst * self.stride);
        for w in 0..self.stride {
            let bits = self.words[s + w];
            self.words[d + w] |= bits;
        }
    }

    fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::new(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                if self.get(i, j) {
                    t.set(j, i);
                }
            }
        }
        t
    }
}

pub(crate) fn row_is_subset(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

/// A finite partial order on labelled elements.
///
/// Invariants established at construction and preserved by immutability:
/// the relation is reflexive, antisymmetric, and transitive, and labels are
/// unique. The empty poset is legal.
#[derive(Clone, PartialEq, Eq)]
pub struct FinitePoset {
    labels: Vec<String>,
    index: BTreeMap<String, usize>,
    /// up.get(i, j) ⇔ i ≤ j; row i is the up-set of i.
    up: BitMatrix,
    /// down.get(i, j) ⇔ j ≤ i; row i is the down-set of i.
    down: BitMatrix,
}

impl fmt::Debug for FinitePoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FinitePoset")
            .field("labels", &self.labels)
            .field("covers", &self.transitive_reduction())
            .finish()
    }
}

impl FinitePoset {
    /// Build a poset as the reflexive-transitive closure of a cover relation.
    ///
    /// Fails with [`PosetError::Cycle`] when the closure would violate
    /// antisymmetry, and with the label errors when the inputs are malformed.
    pub fn from_cover_relation<L, A, B>(
        labels: impl IntoIterator<Item = L>,
        covers: impl IntoIterator<Item = (A, B)>,
    ) -> Result<Self, PosetError>
    where
        L: Into<String>,
        A: AsRef<str>,
        B: AsRef<str>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let mut index = BTreeMap::new();
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(PosetError::DuplicateLabel(l.clone()));
            }
        }

        let n = labels.len();
        let mut up = BitMatrix::new(n);
        for i in 0..n {
            up.set(i, i);
        }
        for (a, b) in covers {
            let (a, b) = (a.as_ref(), b.as_ref());
            let i = *index.get(a).ok_or_else(|| PosetError::UnknownLabel(a.to_string()))?;
            let j = *index.get(b).ok_or_else(|| PosetError::UnknownLabel(b.to_string()))?;
            if i == j {
                return Err(PosetError::Cycle(a.to_string(), b.to_string()));
            }
            up.set(i, j);
        }

        // Warshall closure over bit rows.
        for k in 0..n {
            for i in 0..n {
                if up.get(i, k) {
                    up.or_rows(k, i);
                }
            }
        }

        for i in 0..n {
            for j in i + 1..n {
                if up.get(i, j) && up.get(j, i) {
                    return Err(PosetError::Cycle(labels[i].clone(), labels[j].clone()));
                }
            }
        }

        let down = up.transpose();
        Ok(FinitePoset { labels, index, up, down })
    }

    /// The poset with no elements.
    pub fn empty() -> Self {
        FinitePoset {
            labels: Vec::new(),
            index: BTreeMap::new(),
            up: BitMatrix::new(0),
            down: BitMatrix::new(0),
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize, PosetError> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| PosetError::UnknownLabel(label.to_string()))
    }

    /// Whether element `i` ≤ element `j`. Panics on out-of-range indices.
    #[inline]
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.up.get(i, j)
    }

    pub fn leq_labels(&self, a: &str, b: &str) -> Result<bool, PosetError> {
        Ok(self.leq(self.index_of(a)?, self.index_of(b)?))
    }

    pub(crate) fn up_row(&self, i: usize) -> &[u64] {
        self.up.row(i)
    }

    pub(crate) fn down_row(&self, i: usize) -> &[u64] {
        self.down.row(i)
    }

    /// Indices of elements with no strictly smaller element.
    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| (0..self.len()).all(|j| j == i || !self.leq(j, i)))
            .collect()
    }

    /// Indices of elements with no strictly larger element.
    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| (0..self.len()).all(|j| j == i || !self.leq(i, j)))
            .collect()
    }

    /// Whether `j` covers `i`: i < j with nothing strictly between.
    pub fn covers(&self, i: usize, j: usize) -> bool {
        i != j
            && self.leq(i, j)
            && (0..self.len()).all(|k| k == i || k == j || !(self.leq(i, k) && self.leq(k, j)))
    }

    /// Indices of the elements covering `i` from below.
    pub fn lower_covers_of(&self, i: usize) -> Vec<usize> {
        (0..self.len()).filter(|&j| self.covers(j, i)).collect()
    }

    /// Indices of the elements covering `i` from above.
    pub fn upper_covers_of(&self, i: usize) -> Vec<usize> {
        (0..self.len()).filter(|&j| self.covers(i, j)).collect()
    }

    /// The cover pairs of the order as `(lower, upper)` labels, sorted by
    /// index pair. For a finite poset this is the unique minimal relation
    /// whose reflexive-transitive closure is ≤.
    pub fn transitive_reduction(&self) -> Vec<(String, String)> {
        let mut out = Vec::new();
        for i in 0..self.len() {
            for j in 0..self.len() {
                if self.covers(i, j) {
                    out.push((self.labels[i].clone(), self.labels[j].clone()));
                }
            }
        }
        out.sort_by_key(|(a, b)| (self.index[a], self.index[b]));
        out
    }

    fn resolve_set(&self, members: &[&str]) -> Result<BTreeSet<usize>, PosetError> {
        members.iter().map(|l| self.index_of(l)).collect()
    }

    /// Whether the given label set is downward closed.
    pub fn is_order_ideal(&self, members: &[&str]) -> Result<bool, PosetError> {
        let set = self.resolve_set(members)?;
        Ok(self.is_ideal_indices(&set))
    }

    pub(crate) fn is_ideal_indices(&self, set: &BTreeSet<usize>) -> bool {
        set.iter()
            .all(|&j| (0..self.len()).all(|i| !self.leq(i, j) || set.contains(&i)))
    }

    /// Whether no two distinct members of the label set are comparable.
    pub fn is_antichain(&self, members: &[&str]) -> Result<bool, PosetError> {
        let set = self.resolve_set(members)?;
        Ok(self.is_antichain_indices(&set))
    }

    pub(crate) fn is_antichain_indices(&self, set: &BTreeSet<usize>) -> bool {
        let v: Vec<usize> = set.iter().copied().collect();
        for (a, &i) in v.iter().enumerate() {
            for &j in &v[a + 1..] {
                if self.leq(i, j) || self.leq(j, i) {
                    return false;
                }
            }
        }
        true
    }

    /// The down-set {y : y ≤ x}.
    pub fn principal_ideal(&self, x: &str) -> Result<OrderIdeal, PosetError> {
        let i = self.index_of(x)?;
        Ok(OrderIdeal::new((0..self.len()).filter(|&j| self.leq(j, i))))
    }

    /// Every order ideal of the poset, in (cardinality, lexicographic on
    /// sorted member indices) order. Includes the empty set and, for
    /// nonempty posets, the full set. Uses [`DEFAULT_IDEAL_BUDGET`].
    pub fn enumerate_order_ideals(&self) -> Result<Vec<OrderIdeal>, PosetError> {
        self.enumerate_order_ideals_with_budget(DEFAULT_IDEAL_BUDGET)
    }

    /// As [`enumerate_order_ideals`](Self::enumerate_order_ideals) with an
    /// explicit cap on the number of ideals.
    pub fn enumerate_order_ideals_with_budget(
        &self,
        budget: usize,
    ) -> Result<Vec<OrderIdeal>, PosetError> {
        let mut out: Vec<OrderIdeal> = Vec::new();
        let mut level: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
        level.insert(BTreeSet::new());
        while !level.is_empty() {
            if out.len() + level.len() > budget {
                return Err(PosetError::BudgetExceeded { budget });
            }
            let mut next: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
            for ideal in level {
                for e in self.addable_elements(&ideal) {
                    let mut grown = ideal.clone();
                    grown.insert(e);
                    next.insert(grown);
                }
                out.push(OrderIdeal { members: ideal });
            }
            level = next;
        }
        Ok(out)
    }

    /// Elements not in `ideal` whose strict down-set lies inside it; adding
    /// any one of them yields an ideal covering `ideal` in J(P).
    pub(crate) fn addable_elements(&self, ideal: &BTreeSet<usize>) -> Vec<usize> {
        (0..self.len())
            .filter(|&e| {
                !ideal.contains(&e)
                    && (0..self.len()).all(|i| i == e || !self.leq(i, e) || ideal.contains(&i))
            })
            .collect()
    }

    /// The sub-poset induced on the given indices (which must be strictly
    /// increasing), with labels preserved.
    pub fn induced(&self, indices: &[usize]) -> FinitePoset {
        debug_assert!(indices.windows(2).all(|w| w[0] < w[1]));
        let labels: Vec<String> = indices.iter().map(|&i| self.labels[i].clone()).collect();
        let n = indices.len();
        let mut up = BitMatrix::new(n);
        for (a, &i) in indices.iter().enumerate() {
            for (b, &j) in indices.iter().enumerate() {
                if self.leq(i, j) {
                    up.set(a, b);
                }
            }
        }
        let down = up.transpose();
        let index = labels.iter().cloned().zip(0..).collect();
        FinitePoset { labels, index, up, down }
    }
}

/// A downward-closed subset of a host [`FinitePoset`], stored as member
/// indices.
///
/// The type itself is a plain index set; producers in this crate only emit
/// downward-closed ones, and consumers that require closure re-validate
/// against their host poset.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct OrderIdeal {
    members: BTreeSet<usize>,
}

impl OrderIdeal {
    pub fn new(members: impl IntoIterator<Item = usize>) -> Self {
        OrderIdeal { members: members.into_iter().collect() }
    }

    pub fn empty() -> Self {
        OrderIdeal { members: BTreeSet::new() }
    }

    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub(crate) fn member_set(&self) -> &BTreeSet<usize> {
        &self.members
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.contains(&i)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Member labels in index order.
    pub fn label_set<'p>(&self, host: &'p FinitePoset) -> Vec<&'p str> {
        self.members().map(|i| host.label(i)).collect()
    }

    pub fn union(&self, other: &OrderIdeal) -> OrderIdeal {
        OrderIdeal { members: self.members.union(&other.members).copied().collect() }
    }

    pub fn intersection(&self, other: &OrderIdeal) -> OrderIdeal {
        OrderIdeal {
            members: self.members.intersection(&other.members).copied().collect(),
        }
    }

    pub fn is_subset(&self, other: &OrderIdeal) -> bool {
        self.members.is_subset(&other.members)
    }
}
