//! Tuple-walking machinery shared by every verifier.

use crate::algebra::Element;
use crate::exec::{filter_map_range, unrank};
use crate::report::{CheckRecord, Witness, MAX_WITNESSES};

/// A finite labelled family of elements standing in for "all elements" in a
/// universally quantified identity.
#[derive(Debug, Clone, PartialEq)]
pub struct Family<E> {
    pub items: Vec<E>,
    pub labels: Vec<String>,
}

impl<E> Family<E> {
    pub fn new(items: Vec<E>, labels: Vec<String>) -> Self {
        assert_eq!(items.len(), labels.len(), "one label per family member");
        Family { items, labels }
    }

    /// Labels items `prefix1, prefix2, ...`.
    pub fn numbered(items: Vec<E>, prefix: &str) -> Self {
        let labels = (1..=items.len()).map(|i| format!("{prefix}{i}")).collect();
        Family { items, labels }
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &E> {
        self.items.iter()
    }
}

impl<E: std::fmt::Display> Family<E> {
    /// Labels items by their own rendering.
    pub fn displayed(items: Vec<E>) -> Self {
        let labels = items.iter().map(ToString::to_string).collect();
        Family { items, labels }
    }
}

/// Evaluates `residual` on every multi-index over `dims` and records the
/// tuples whose residual is nonzero.
///
/// `labels[slot][i]` names the `i`-th member of the family feeding `slot`.
pub fn run_check<R, F>(
    name: &str,
    label: &str,
    dims: &[usize],
    labels: &[&[String]],
    residual: F,
) -> CheckRecord
where
    R: Element,
    F: Fn(&[usize]) -> R + Sync + Send,
{
    let total: usize = if dims.is_empty() { 0 } else { dims.iter().product() };
    let failing = filter_map_range(total, |lin| {
        let multi = unrank(lin, dims);
        let r = residual(&multi);
        (!r.is_zero()).then_some((multi, r))
    });
    let mut record = CheckRecord::new(name, label);
    record.evaluated = total;
    record.failures = failing.len();
    record.witnesses = failing
        .into_iter()
        .take(MAX_WITNESSES)
        .map(|(multi, r)| Witness {
            tuple: multi.iter().enumerate().map(|(slot, &i)| labels[slot][i].clone()).collect(),
            indices: multi,
            residual: r.residual(),
        })
        .collect();
    record
}

/// Lookup table of a binary operation on two families, computed once.
pub(crate) struct Table2<T> {
    cols: usize,
    values: Vec<T>,
}

impl<T: Send> Table2<T> {
    pub(crate) fn build(rows: usize, cols: usize, f: impl Fn(usize, usize) -> T + Sync + Send) -> Self {
        let values = crate::exec::map_range(rows * cols, |lin| f(lin / cols, lin % cols));
        Table2 { cols, values }
    }

    pub(crate) fn get(&self, i: usize, j: usize) -> &T {
        &self.values[i * self.cols + j]
    }
}

/// Lookup table of a ternary operation on one family.
pub(crate) struct Table3<T> {
    n: usize,
    values: Vec<T>,
}

impl<T: Send> Table3<T> {
    pub(crate) fn build(n: usize, f: impl Fn(usize, usize, usize) -> T + Sync + Send) -> Self {
        let values = crate::exec::map_range(n * n * n, |lin| f(lin / (n * n), (lin / n) % n, lin % n));
        Table3 { n, values }
    }

    pub(crate) fn get(&self, i: usize, j: usize, k: usize) -> &T {
        &self.values[(i * self.n + j) * self.n + k]
    }
}
