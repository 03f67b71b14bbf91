//! Loopless matroids on `{0, ..., n}` stored through their lattice of flats.
//!
//! Every constructor enumerates the flats eagerly, grouped by rank. The rank
//! of an arbitrary subset is read off the lattice: the closure of `S` is the
//! unique lowest-rank flat containing `S`.

mod json;
mod projective;

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::set::{subsets, ElementSet, MAX_ELEMENTS};

pub use json::{parse_matroid_json, MatroidFile};
pub use projective::is_prime;

/// How a matroid was built. Informational only; not part of equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    Bases,
    Flats,
    Uniform { rank: usize, size: usize },
    ProjectiveGeometry { dimension: usize, q: u64 },
    SparsePaving { rank: usize, size: usize, circuit_hyperplanes: Vec<ElementSet> },
    Restriction,
    Contraction,
    Interval,
    Deletion { element: usize },
    Truncation { by: usize },
}

/// Order-preserving relabeling from a minor's ground set back to its parent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorMap {
    surviving: Vec<usize>,
}

impl MinorMap {
    fn new(surviving: ElementSet) -> Self {
        MinorMap { surviving: surviving.to_vec() }
    }

    /// Parent element for each child index `0..k`.
    pub fn surviving_elements(&self) -> &[usize] {
        &self.surviving
    }

    pub fn to_parent(&self, child: ElementSet) -> ElementSet {
        child.iter().map(|i| self.surviving[i]).collect()
    }

    /// Relabel a parent set; elements outside the minor are dropped.
    pub fn to_child(&self, parent: ElementSet) -> ElementSet {
        self.surviving
            .iter()
            .enumerate()
            .filter(|(_, &p)| parent.contains(p))
            .map(|(i, _)| i)
            .collect()
    }
}

/// Result of deleting a single element.
#[derive(Clone, Debug)]
pub struct Deletion {
    pub matroid: Matroid,
    pub map: MinorMap,
    /// The deleted element was a coloop, so the rank dropped by one.
    pub coloop: bool,
}

#[derive(Clone, Debug)]
pub struct Matroid {
    size: usize,
    rank: usize,
    flats_by_rank: Vec<Vec<ElementSet>>,
    flat_rank: HashMap<ElementSet, usize>,
    provenance: Provenance,
}

impl PartialEq for Matroid {
    fn eq(&self, other: &Self) -> bool {
        self.size == other.size && self.flats_by_rank == other.flats_by_rank
    }
}

impl Eq for Matroid {}

impl Matroid {
    fn from_levels(size: usize, mut levels: Vec<Vec<ElementSet>>, provenance: Provenance) -> Self {
        for level in &mut levels {
            level.sort();
            level.dedup();
        }
        let flat_rank = levels
            .iter()
            .enumerate()
            .flat_map(|(k, fs)| fs.iter().map(move |&f| (f, k)))
            .collect();
        Matroid {
            size,
            rank: levels.len() - 1,
            flats_by_rank: levels,
            flat_rank,
            provenance,
        }
    }

    /// Build from a rank oracle by closure saturation, rank by rank.
    fn from_rank_oracle(
        size: usize,
        rank_fn: impl Fn(ElementSet) -> usize,
        provenance: Provenance,
    ) -> Result<Self> {
        let ground = ElementSet::full(size);
        let closure = |s: ElementSet| -> ElementSet {
            let rs = rank_fn(s);
            let mut c = s;
            for e in ground.difference(s) {
                if rank_fn(s.with(e)) == rs {
                    c.insert(e);
                }
            }
            c
        };
        let bottom = closure(ElementSet::EMPTY);
        if let Some(e) = bottom.min_element() {
            return Err(Error::LoopDetected(e));
        }
        let mut levels = vec![vec![bottom]];
        while levels.last().is_some_and(|l| l != &[ground]) {
            let mut next = BTreeSet::new();
            for &f in levels.last().unwrap() {
                let mut covered = f;
                for e in ground.difference(f) {
                    // Covers of f partition E \ f, so skip elements already placed.
                    if covered.contains(e) {
                        continue;
                    }
                    let g = closure(f.with(e));
                    covered = covered.union(g);
                    next.insert(g);
                }
            }
            if next.is_empty() {
                break;
            }
            levels.push(next.into_iter().collect());
        }
        Ok(Self::from_levels(size, levels, provenance))
    }

    /// Matroid whose bases are the given sets.
    pub fn from_bases(size: usize, bases: &[ElementSet]) -> Result<Self> {
        check_size(size)?;
        if bases.is_empty() {
            return Err(Error::EmptyInput("no bases given"));
        }
        let ground = ElementSet::full(size);
        let k = bases[0].len();
        for b in bases {
            if !b.is_subset(ground) {
                let e = b.difference(ground).min_element().unwrap();
                return Err(Error::ElementOutOfRange { element: e, size });
            }
            if b.len() != k {
                return Err(Error::InconsistentBasisSize { expected: k, found: b.len() });
            }
        }
        let set: BTreeSet<ElementSet> = bases.iter().copied().collect();
        for &b1 in &set {
            for &b2 in &set {
                for x in b1.difference(b2) {
                    let ok = b2
                        .difference(b1)
                        .iter()
                        .any(|y| set.contains(&b1.without(x).with(y)));
                    if !ok {
                        return Err(Error::BasisExchangeViolation { b1, b2, element: x });
                    }
                }
            }
        }
        let covered = set.iter().fold(ElementSet::EMPTY, |a, &b| a.union(b));
        if let Some(e) = ground.difference(covered).min_element() {
            return Err(Error::LoopDetected(e));
        }
        let list: Vec<ElementSet> = set.into_iter().collect();
        let rank_fn = |s: ElementSet| list.iter().map(|b| b.intersection(s).len()).max().unwrap();
        Self::from_rank_oracle(size, rank_fn, Provenance::Bases)
    }

    /// The uniform matroid `U_{rank,size}`: every set of fewer than `rank`
    /// elements is a flat.
    pub fn uniform(rank: usize, size: usize) -> Result<Self> {
        check_size(size)?;
        if rank < 1 || rank > size {
            return Err(Error::RankOutOfRange { rank, size });
        }
        let ground = ElementSet::full(size);
        let mut levels = vec![Vec::new(); rank + 1];
        for s in subsets(ground) {
            if s.len() < rank {
                levels[s.len()].push(s);
            }
        }
        levels[rank].push(ground);
        Ok(Self::from_levels(size, levels, Provenance::Uniform { rank, size }))
    }

    /// The Boolean matroid `U_{size,size}`.
    pub fn boolean(size: usize) -> Result<Self> {
        Self::uniform(size, size)
    }

    /// Sparse paving matroid: all `rank`-subsets are bases except the listed
    /// circuit-hyperplanes.
    pub fn sparse_paving(rank: usize, size: usize, circuit_hyperplanes: &[ElementSet]) -> Result<Self> {
        check_size(size)?;
        if rank < 1 || rank > size {
            return Err(Error::RankOutOfRange { rank, size });
        }
        let ground = ElementSet::full(size);
        let mut chs: Vec<ElementSet> = circuit_hyperplanes.to_vec();
        chs.sort();
        chs.dedup();
        for &c in &chs {
            if let Some(e) = c.difference(ground).min_element() {
                return Err(Error::ElementOutOfRange { element: e, size });
            }
            if c.len() != rank {
                return Err(Error::SizeViolation { set: c, expected: rank, found: c.len() });
            }
        }
        for (i, &a) in chs.iter().enumerate() {
            for &b in &chs[i + 1..] {
                if a.intersection(b).len() + 2 > rank {
                    return Err(Error::OverlapViolation(a, b));
                }
            }
        }
        let rank_fn = |s: ElementSet| match s.len() {
            l if l < rank => l,
            l if l == rank && chs.binary_search(&s).is_ok() => rank - 1,
            _ => rank,
        };
        Self::from_rank_oracle(
            size,
            rank_fn,
            Provenance::SparsePaving { rank, size, circuit_hyperplanes: chs.clone() },
        )
    }

    /// Matroid from an explicit lattice of flats, grouped by rank.
    ///
    /// The family is checked to be closed under intersection, and the covers
    /// of every flat must partition its complement.
    pub fn from_flats(size: usize, flats_by_rank: &[Vec<ElementSet>]) -> Result<Self> {
        check_size(size)?;
        let ground = ElementSet::full(size);
        if flats_by_rank.is_empty() {
            return Err(Error::EmptyInput("no flats given"));
        }
        if flats_by_rank[0] != [ElementSet::EMPTY] {
            return Err(Error::InvalidFlats(
                "rank-0 level must consist of the empty set alone".into(),
            ));
        }
        if flats_by_rank.last().unwrap() != &[ground] {
            return Err(Error::InvalidFlats("top level must be the ground set alone".into()));
        }
        let mut rank_of = HashMap::new();
        for (k, level) in flats_by_rank.iter().enumerate() {
            for &f in level {
                if let Some(e) = f.difference(ground).min_element() {
                    return Err(Error::ElementOutOfRange { element: e, size });
                }
                if rank_of.insert(f, k).is_some() {
                    return Err(Error::InvalidFlats(format!("flat {f} listed twice")));
                }
            }
        }
        let all: Vec<ElementSet> = rank_of.keys().copied().collect();
        for &a in &all {
            for &b in &all {
                if !rank_of.contains_key(&a.intersection(b)) {
                    return Err(Error::InvalidFlats(format!(
                        "{a} ∩ {b} is not listed as a flat"
                    )));
                }
            }
        }
        for &f in &all {
            if f == ground {
                continue;
            }
            let covers: Vec<ElementSet> = all
                .iter()
                .copied()
                .filter(|&g| {
                    f.is_proper_subset(g)
                        && !all.iter().any(|&h| f.is_proper_subset(h) && h.is_proper_subset(g))
                })
                .collect();
            let mut seen = ElementSet::EMPTY;
            for &g in &covers {
                let part = g.difference(f);
                if !seen.intersection(part).is_empty() {
                    return Err(Error::InvalidFlats(format!(
                        "covers of {f} do not partition its complement"
                    )));
                }
                seen = seen.union(part);
                if rank_of[&g] != rank_of[&f] + 1 {
                    return Err(Error::InvalidFlats(format!(
                        "{g} covers {f} but its rank is not one higher"
                    )));
                }
            }
            if seen != ground.difference(f) {
                return Err(Error::InvalidFlats(format!(
                    "covers of {f} do not partition its complement"
                )));
            }
        }
        Ok(Self::from_levels(size, flats_by_rank.to_vec(), Provenance::Flats))
    }

    /// Number of ground set elements, `n + 1`.
    pub fn size(&self) -> usize {
        self.size
    }

    /// Largest ground-set element `n`, i.e. the largest hypersimplex index.
    /// Zero for the empty ground set.
    pub fn n(&self) -> usize {
        self.size.saturating_sub(1)
    }

    /// Matroid rank `r + 1`.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Top degree `r` of the Chow ring.
    pub fn chow_dimension(&self) -> usize {
        self.rank.saturating_sub(1)
    }

    pub fn ground(&self) -> ElementSet {
        ElementSet::full(self.size)
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn flats_by_rank(&self) -> &[Vec<ElementSet>] {
        &self.flats_by_rank
    }

    pub fn flats_of_rank(&self, k: usize) -> &[ElementSet] {
        self.flats_by_rank.get(k).map_or(&[], |v| v.as_slice())
    }

    /// All flats, by increasing rank.
    pub fn flats(&self) -> impl Iterator<Item = ElementSet> + '_ {
        self.flats_by_rank.iter().flatten().copied()
    }

    /// Flats other than the empty set and the ground set.
    pub fn proper_flats(&self) -> impl Iterator<Item = ElementSet> + '_ {
        let top = self.rank;
        self.flats_by_rank
            .iter()
            .enumerate()
            .filter(move |(k, _)| *k != 0 && *k != top)
            .flat_map(|(_, v)| v.iter().copied())
    }

    pub fn is_flat(&self, s: ElementSet) -> bool {
        self.flat_rank.contains_key(&s)
    }

    /// Rank of `s` if it is a flat.
    pub fn flat_rank(&self, s: ElementSet) -> Option<usize> {
        self.flat_rank.get(&s).copied()
    }

    /// Smallest flat containing `s`.
    pub fn closure(&self, s: ElementSet) -> ElementSet {
        debug_assert!(s.is_subset(self.ground()));
        self.closure_with_rank(s).0
    }

    pub fn rank_of(&self, s: ElementSet) -> usize {
        self.closure_with_rank(s).1
    }

    fn closure_with_rank(&self, s: ElementSet) -> (ElementSet, usize) {
        for (k, level) in self.flats_by_rank.iter().enumerate() {
            if let Some(&f) = level.iter().find(|f| s.is_subset(**f)) {
                return (f, k);
            }
        }
        unreachable!("the ground set is always a flat")
    }

    /// Sizes of the proper nonempty flats.
    pub fn proper_flat_sizes(&self) -> BTreeSet<usize> {
        self.proper_flats().map(|f| f.len()).collect()
    }

    pub fn is_simple(&self) -> bool {
        self.flats_of_rank(1).iter().all(|f| f.len() == 1)
    }

    pub fn count_bases(&self) -> usize {
        subsets(self.ground())
            .filter(|s| s.len() == self.rank && self.rank_of(*s) == self.rank)
            .count()
    }

    pub fn is_coloop(&self, i: usize) -> bool {
        self.rank_of(self.ground().without(i)) < self.rank
    }

    fn require_flat(&self, f: ElementSet) -> Result<usize> {
        self.flat_rank(f).ok_or(Error::NotAFlat(f))
    }

    /// The interval `[F, G]` of the lattice as a matroid on `G \ F`.
    pub fn minor_interval(&self, f: ElementSet, g: ElementSet) -> Result<(Matroid, MinorMap)> {
        let rf = self.require_flat(f)?;
        let rg = self.require_flat(g)?;
        if !f.is_subset(g) {
            return Err(Error::PreconditionViolation(format!("{f} is not contained in {g}")));
        }
        let map = MinorMap::new(g.difference(f));
        let mut levels = vec![Vec::new(); rg - rf + 1];
        for k in rf..=rg {
            for &h in &self.flats_by_rank[k] {
                if f.is_subset(h) && h.is_subset(g) {
                    levels[k - rf].push(map.to_child(h.difference(f)));
                }
            }
        }
        Ok((Self::from_levels(map.surviving.len(), levels, Provenance::Interval), map))
    }

    /// Restriction `M^F`, whose lattice is `[∅, F]`.
    pub fn restriction(&self, f: ElementSet) -> Result<(Matroid, MinorMap)> {
        let (mut m, map) = self.minor_interval(ElementSet::EMPTY, f)?;
        m.provenance = Provenance::Restriction;
        Ok((m, map))
    }

    /// Contraction `M_F`, whose lattice is `[F, E]`.
    pub fn contraction(&self, f: ElementSet) -> Result<(Matroid, MinorMap)> {
        let (mut m, map) = self.minor_interval(f, self.ground())?;
        m.provenance = Provenance::Contraction;
        Ok((m, map))
    }

    /// Deletion `M \ i`. Deleting a coloop is allowed and flagged.
    pub fn deletion(&self, i: usize) -> Result<Deletion> {
        if i >= self.size {
            return Err(Error::ElementOutOfRange { element: i, size: self.size });
        }
        let rest = self.ground().without(i);
        let coloop = self.is_coloop(i);
        let new_rank = self.rank - usize::from(coloop);
        let map = MinorMap::new(rest);
        let mut levels = vec![Vec::new(); new_rank + 1];
        for f in self.flats() {
            let g = f.without(i);
            levels[self.rank_of(g)].push(map.to_child(g));
        }
        let matroid = Self::from_levels(rest.len(), levels, Provenance::Deletion { element: i });
        Ok(Deletion { matroid, map, coloop })
    }

    /// `s`-fold truncation: flats of rank at most `r - s`, plus the ground set.
    pub fn truncate(&self, s: usize) -> Result<Matroid> {
        if s >= self.rank {
            return Err(Error::RankCollapse);
        }
        if s == 0 {
            return Ok(self.clone());
        }
        let top = self.rank - s;
        let mut levels: Vec<Vec<ElementSet>> = self.flats_by_rank[..top].to_vec();
        levels.push(vec![self.ground()]);
        Ok(Self::from_levels(self.size, levels, Provenance::Truncation { by: s }))
    }
}

/// The projective geometry `PG(dimension, q)` over the prime field with `q`
/// elements.
pub fn projective_geometry(dimension: usize, q: u64) -> Result<Matroid> {
    projective::build(dimension, q)
}

fn check_size(size: usize) -> Result<()> {
    if size > MAX_ELEMENTS {
        return Err(Error::TooManyElements(size));
    }
    if size == 0 {
        return Err(Error::EmptyInput("ground set is empty"));
    }
    Ok(())
}

/// Parse an element set from a list of indices.
pub fn set_of(elements: &[usize]) -> ElementSet {
    elements.iter().copied().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(e: &[usize]) -> ElementSet {
        set_of(e)
    }

    #[test]
    fn uniform_flat_counts() {
        let b = Matroid::boolean(4).unwrap();
        assert_eq!(b.proper_flats().count(), 14);
        let u = Matroid::uniform(3, 5).unwrap();
        assert_eq!(u.flats_of_rank(1).len(), 5);
        assert_eq!(u.flats_of_rank(2).len(), 10);
        let u23 = Matroid::uniform(2, 3).unwrap();
        assert_eq!(u23.flats().count(), 5);
        assert_eq!(Matroid::uniform(0, 3).unwrap_err(), Error::RankOutOfRange { rank: 0, size: 3 });
        assert!(matches!(Matroid::uniform(4, 3), Err(Error::RankOutOfRange { .. })));
    }

    #[test]
    fn from_bases_examples() {
        let m = Matroid::from_bases(3, &[s(&[0, 1]), s(&[0, 2]), s(&[1, 2])]).unwrap();
        assert_eq!(m, Matroid::uniform(2, 3).unwrap());

        // 0 is a coloop, 1 and 2 are parallel.
        let m = Matroid::from_bases(3, &[s(&[0, 1]), s(&[0, 2])]).unwrap();
        assert_eq!(m.flats_of_rank(1), &[s(&[0]), s(&[1, 2])]);
        assert_eq!(m.rank(), 2);

        assert_eq!(
            Matroid::from_bases(3, &[s(&[0, 1])]).unwrap_err(),
            Error::LoopDetected(2)
        );
        assert!(matches!(
            Matroid::from_bases(4, &[s(&[0, 1]), s(&[2, 3])]),
            Err(Error::BasisExchangeViolation { .. })
        ));
        assert_eq!(Matroid::from_bases(3, &[]).unwrap_err(), Error::EmptyInput("no bases given"));
    }

    #[test]
    fn sparse_paving_examples() {
        let m = Matroid::sparse_paving(3, 6, &[s(&[0, 1, 2]), s(&[3, 4, 5])]).unwrap();
        assert_eq!(m.count_bases(), 18);
        assert!(m.is_flat(s(&[0, 1, 2])));
        let u = Matroid::sparse_paving(3, 6, &[]).unwrap();
        assert_eq!(u, Matroid::uniform(3, 6).unwrap());
        assert!(matches!(
            Matroid::sparse_paving(3, 6, &[s(&[0, 1, 2]), s(&[0, 1, 3])]),
            Err(Error::OverlapViolation(..))
        ));
        assert!(matches!(
            Matroid::sparse_paving(3, 6, &[s(&[0, 1])]),
            Err(Error::SizeViolation { .. })
        ));
    }

    #[test]
    fn closure_and_rank() {
        let u = Matroid::uniform(3, 5).unwrap();
        assert_eq!(u.closure(ElementSet::EMPTY), ElementSet::EMPTY);
        assert_eq!(u.closure(s(&[0, 2, 4])), u.ground());
        assert_eq!(u.rank_of(s(&[1, 3])), 2);
    }

    #[test]
    fn minors_of_uniform() {
        let b = Matroid::boolean(4).unwrap();
        assert_eq!(b.truncate(1).unwrap(), Matroid::uniform(3, 4).unwrap());
        assert!((0..4).all(|i| b.is_coloop(i)));
        let u = Matroid::uniform(3, 5).unwrap();
        assert!((0..5).all(|i| !u.is_coloop(i)));
        let d = u.deletion(0).unwrap();
        assert!(!d.coloop);
        assert_eq!(d.matroid, Matroid::uniform(3, 4).unwrap());
        assert_eq!(d.map.surviving_elements(), &[1, 2, 3, 4]);
        let d = b.deletion(2).unwrap();
        assert!(d.coloop);
        assert_eq!(d.matroid, Matroid::boolean(3).unwrap());
        assert_eq!(b.truncate(4).unwrap_err(), Error::RankCollapse);
    }

    #[test]
    fn interval_minors() {
        let u = Matroid::uniform(3, 5).unwrap();
        let f = s(&[1]);
        let (c, map) = u.contraction(f).unwrap();
        assert_eq!(c, Matroid::uniform(2, 4).unwrap());
        assert_eq!(map.surviving_elements(), &[0, 2, 3, 4]);
        let (r, _) = u.restriction(s(&[2, 4])).unwrap();
        assert_eq!(r, Matroid::boolean(2).unwrap());
        let (p, _) = u.minor_interval(f, f).unwrap();
        assert_eq!(p.size(), 0);
        assert_eq!(p.rank(), 0);
        assert_eq!(u.restriction(s(&[0, 1, 2])).unwrap_err(), Error::NotAFlat(s(&[0, 1, 2])));
    }

    #[test]
    fn explicit_flats_validation() {
        let u = Matroid::uniform(2, 3).unwrap();
        let m = Matroid::from_flats(3, u.flats_by_rank()).unwrap();
        assert_eq!(m, u);
        let bad = vec![
            vec![ElementSet::EMPTY],
            vec![s(&[0]), s(&[1])],
            vec![s(&[0, 1, 2])],
        ];
        assert!(matches!(Matroid::from_flats(3, &bad), Err(Error::InvalidFlats(_))));
    }
}
