//! Flat-filled increasing binary trees.
//!
//! An increasing binary tree on `k` vertices is determined by the sequence
//! of its labels read in binary-search (in-order) order; the vertex labelled
//! `i` records the `i`-th factor `γ_{v_i}`. Filling vertex `p` of that order
//! with the `p`-th flat of a flag gives a tree whose weight is the product of
//! the expansion weights met while inserting its vertices in label order.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{check_v, gap_weight, FlagChain, Intervals, WeightConvention};
use crate::error::Result;
use crate::matroid::Matroid;
use crate::set::ElementSet;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PostnikovTree {
    /// Labels `1..=k` in binary-search order.
    pub labels: Vec<usize>,
    /// `flag.flats()[p]` fills the vertex at search position `p`.
    pub flag: FlagChain,
}

impl PostnikovTree {
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Search position of the parent of the vertex at position `p`.
    pub fn parent(&self, p: usize) -> Option<usize> {
        let (l, r) = self.neighbors(p);
        match (l, r) {
            (Some(a), Some(b)) => Some(if self.labels[a] > self.labels[b] { a } else { b }),
            (a, b) => a.or(b),
        }
    }

    /// Every vertex is the left child of its parent.
    pub fn is_left_path(&self) -> bool {
        self.labels.windows(2).all(|w| w[0] > w[1])
    }

    /// Nearest positions on each side carrying a smaller label: the vertices
    /// bounding the gap this vertex was inserted into.
    fn neighbors(&self, p: usize) -> (Option<usize>, Option<usize>) {
        let own = self.labels[p];
        let left = (0..p).rev().find(|&q| self.labels[q] < own);
        let right = (p + 1..self.labels.len()).find(|&q| self.labels[q] < own);
        (left, right)
    }
}

impl fmt::Display for PostnikovTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (l, g)) in self.labels.iter().zip(self.flag.flats()).enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}:{g}")?;
        }
        Ok(())
    }
}

/// Weight of a flat-filled tree computed from its shape alone, or `None` if
/// the tree is malformed or not compatible with `v`.
pub fn tree_weight(
    m: &Matroid,
    v: &[usize],
    tree: &PostnikovTree,
    convention: WeightConvention,
) -> Option<BigRational> {
    let k = tree.len();
    let flats = tree.flag.flats();
    if flats.len() != k || v.len() != k {
        return None;
    }
    let mut seen = vec![false; k + 1];
    for &l in &tree.labels {
        if l == 0 || l > k || std::mem::replace(&mut seen[l], true) {
            return None;
        }
    }
    let ok_flag = flats.iter().all(|f| m.is_flat(*f) && !f.is_empty() && *f != m.ground())
        && flats.windows(2).all(|w| w[0].is_proper_subset(w[1]));
    if !ok_flag {
        return None;
    }
    let mut weight = BigRational::one();
    for p in 0..k {
        let (l, r) = tree.neighbors(p);
        let lo = l.map_or(ElementSet::EMPTY, |q| flats[q]);
        let hi = r.map_or(m.ground(), |q| flats[q]);
        let target = v[tree.labels[p] - 1];
        if !(lo.len() < target && target < hi.len()) {
            return None;
        }
        weight *= gap_weight(convention, lo, hi, flats[p], target);
    }
    Some(weight)
}

/// All `v`-compatible flat-filled trees with nonzero weight.
///
/// Trees are built by recording the gap each factor is inserted into, so
/// grouping them by flag reproduces [`super::expand_gamma_product`].
pub fn enumerate_trees(
    m: &Matroid,
    v: &[usize],
    convention: WeightConvention,
) -> Result<Vec<(PostnikovTree, BigRational)>> {
    check_v(m, v)?;
    let mut intervals = Intervals::new(m);
    let ground = m.ground();
    let mut states = vec![(Vec::<usize>::new(), Vec::<ElementSet>::new(), BigRational::one())];
    for (i, &k) in v.iter().enumerate() {
        let mut next = Vec::new();
        for (labels, flats, w) in &states {
            let j = flats.iter().take_while(|f| f.len() <= k).count();
            if j > 0 && flats[j - 1].len() == k {
                continue;
            }
            let lo = if j == 0 { ElementSet::EMPTY } else { flats[j - 1] };
            let hi = flats.get(j).copied().unwrap_or(ground);
            for &g in intervals.between(lo, hi).iter() {
                let gw = gap_weight(convention, lo, hi, g, k);
                if gw.is_zero() {
                    continue;
                }
                let mut labels = labels.clone();
                let mut flats = flats.clone();
                labels.insert(j, i + 1);
                flats.insert(j, g);
                next.push((labels, flats, w * gw));
            }
        }
        states = next;
    }
    let mut out: Vec<_> = states
        .into_iter()
        .map(|(labels, flats, w)| (PostnikovTree { labels, flag: FlagChain(flats) }, w))
        .collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    use crate::chow::expand_gamma_product;

    fn set(e: &[usize]) -> ElementSet {
        e.iter().copied().collect()
    }

    fn example_tree(flats: &[&[usize]]) -> PostnikovTree {
        PostnikovTree {
            labels: vec![3, 1, 4, 2],
            flag: FlagChain(flats.iter().map(|f| set(f)).collect()),
        }
    }

    #[test]
    fn worked_example_on_u_6_10() {
        let m = Matroid::uniform(6, 10).unwrap();
        let v = [2, 3, 1, 4];
        let a = example_tree(&[&[5], &[3, 5], &[3, 5, 8], &[1, 2, 3, 5, 8]]);
        let b = example_tree(&[&[5], &[0, 5], &[0, 3, 5, 8], &[0, 2, 3, 5, 8]]);
        let two = BigRational::from_integer(2.into());
        assert_eq!(tree_weight(&m, &v, &a, WeightConvention::Oi), Some(two.clone()));
        assert_eq!(tree_weight(&m, &v, &b, WeightConvention::Oi), Some(BigRational::one()));
        let all = enumerate_trees(&m, &v, WeightConvention::Oi).unwrap();
        let find = |t: &PostnikovTree| all.iter().find(|(s, _)| s == t).map(|(_, w)| w.clone());
        assert_eq!(find(&a), Some(two));
        assert_eq!(find(&b), Some(BigRational::one()));
    }

    #[test]
    fn ones_give_left_paths() {
        let m = Matroid::uniform(4, 5).unwrap();
        let trees = enumerate_trees(&m, &[1, 1, 1], WeightConvention::Oi).unwrap();
        assert!(!trees.is_empty());
        assert!(trees.iter().all(|(t, w)| t.is_left_path() && w.is_one()));
        assert_eq!(trees[0].0.parent(0), Some(1));
        assert_eq!(trees[0].0.parent(2), None);
    }

    #[test]
    fn trees_aggregate_to_flags() {
        let m = Matroid::uniform(4, 6).unwrap();
        for conv in [WeightConvention::Oi, WeightConvention::Mult] {
            let v = [3, 1, 2];
            let mut agg: BTreeMap<FlagChain, BigRational> = BTreeMap::new();
            for (t, w) in enumerate_trees(&m, &v, conv).unwrap() {
                assert_eq!(tree_weight(&m, &v, &t, conv).as_ref(), Some(&w));
                *agg.entry(t.flag).or_insert_with(BigRational::zero) += w;
            }
            agg.retain(|_, w| !w.is_zero());
            assert_eq!(agg, expand_gamma_product(&m, &v, conv).unwrap().terms);
        }
    }
}
