#![allow(dead_code)]

use mixed_eulerian::matroid::set_of;
use mixed_eulerian::{projective_geometry, Matroid};

pub struct Entry {
    pub name: String,
    pub matroid: Matroid,
}

fn entry(name: impl Into<String>, matroid: Matroid) -> Entry {
    Entry { name: name.into(), matroid }
}

/// Rank-3 sparse paving matroids on six elements with 0, 1 and 2
/// circuit-hyperplanes.
pub fn sparse_family() -> Vec<(usize, Entry)> {
    let chs = [set_of(&[0, 1, 2]), set_of(&[3, 4, 5])];
    (0..=2)
        .map(|m| {
            let matroid = Matroid::sparse_paving(3, 6, &chs[..m]).unwrap();
            (m, entry(format!("sparse(3,6;{m})"), matroid))
        })
        .collect()
}

/// `U_{r+1,n+1}` for `1 <= r <= n <= 8`, the Fano plane, `PG(2,3)`,
/// `PG(3,2)` and the sparse paving family.
pub fn catalog() -> Vec<Entry> {
    let mut out = Vec::new();
    for n in 1..=8 {
        for r in 1..=n {
            out.push(entry(format!("U({},{})", r + 1, n + 1), Matroid::uniform(r + 1, n + 1).unwrap()));
        }
    }
    out.push(entry("PG(2,2)", projective_geometry(2, 2).unwrap()));
    out.push(entry("PG(2,3)", projective_geometry(2, 3).unwrap()));
    out.push(entry("PG(3,2)", projective_geometry(3, 2).unwrap()));
    out.extend(sparse_family().into_iter().map(|(_, e)| e));
    out
}

pub fn small_catalog() -> Vec<Entry> {
    catalog().into_iter().filter(|e| e.matroid.size() <= 7).collect()
}
