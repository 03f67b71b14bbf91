//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

mod common;

use std::collections::BTreeMap;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use mixed_eulerian::chow::{
    count_initial_descending_flags, enumerate_trees, expand_gamma_product, log_concavity_check, pvol, tree_weight,
    FlagChain, PostnikovTree,
};
use mixed_eulerian::classical::{binomial, descent_set, eulerian, factorial, permutations, q_factorial};
use mixed_eulerian::composition::{compositions, is_contiguous, is_lopsided};
use mixed_eulerian::localization::{calibrate_sign, series, DescentTable, SIGN_CALIBRATION};
use mixed_eulerian::matroid::set_of;
use mixed_eulerian::pmd::{
    lopsided_degree, pg_identity_with, pmd_profile, pmd_recurrence_check_with, rank3_closed_forms, remixed_residuals,
    remixed_table,
};
use mixed_eulerian::poly::Poly;
use mixed_eulerian::recursion::{
    cv_polynomial, deletion_contraction_degree, eulerian_recursion_degree, is_flatly_contiguous, two_block_degree,
};
use mixed_eulerian::tutte::{characteristic_data, tutte_polynomial, TutteMethod};
use mixed_eulerian::{projective_geometry, Composition, DegreeCache, Error, Matroid, WeightConvention};

use common::{catalog, small_catalog, sparse_family};

const SEED: u64 = 0x5eed_2026;

type Outcome = Result<String, String>;

/// Collects the first few failures and a case count.
#[derive(Default)]
struct Tally {
    cases: usize,
    failures: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failures.len() < 5 {
            self.failures.push(what());
        } else if !ok {
            self.failures.push(String::new());
        }
    }

    fn finish(self) -> Outcome {
        if self.failures.is_empty() {
            Ok(format!("{} cases", self.cases))
        } else {
            let shown: Vec<&str> = self.failures.iter().map(String::as_str).filter(|s| !s.is_empty()).collect();
            Err(format!("{} of {} cases failed: {}", self.failures.len(), self.cases, shown.join("; ")))
        }
    }
}

fn int(x: impl Into<BigInt>) -> BigInt {
    x.into()
}

fn one_hot(n: usize, entries: &[(usize, usize)]) -> Composition {
    let mut c = vec![0; n];
    for &(k, e) in entries {
        c[k - 1] += e;
    }
    Composition::new(c)
}

/// Permutations of `0..n` with exactly `d` descents, by enumeration.
fn brute_eulerian(n: usize, d: usize) -> BigInt {
    int(permutations(n).filter(|w| descent_set(w).len() == d).count())
}

fn criterion_1() -> Outcome {
    let mut t = Tally::default();
    for n in 1..=6 {
        let m = Matroid::boolean(n + 1).unwrap();
        let mut cache = DegreeCache::new(&m, WeightConvention::Oi);
        for c in compositions(n, n) {
            let d = cache.degree(&Composition::new(c.clone())).unwrap();
            t.check(d >= BigInt::zero(), || format!("n={n} {c:?} negative"));
            // A single nonzero entry n at position k.
            if let Some(k) = c.iter().position(|&x| x == n) {
                let want = brute_eulerian(n, k);
                t.check(d == want, || format!("n={n} {c:?}: {d} vs Eulerian {want}"));
            }
            // Mass only at the two ends.
            if n >= 2 && c[1..n - 1].iter().all(|&x| x == 0) {
                let want = binomial(n, c[0]);
                t.check(d == want, || format!("n={n} {c:?}: {d} vs binomial {want}"));
            }
            if c.iter().all(|&x| x == 1) {
                t.check(d == factorial(n), || format!("n={n}: A_(1..1) = {d}"));
            }
            if is_lopsided(&c) {
                let want: BigInt = c.iter().enumerate().map(|(i, &e)| int(i + 1).pow(e as u32)).product();
                t.check(d == want, || format!("n={n} {c:?}: {d} vs lopsided {want}"));
            }
        }
    }
    t.finish()
}

fn criterion_2() -> Outcome {
    let mut t = Tally::default();
    for n in 1..=6 {
        let got = pvol(&Matroid::boolean(n + 1).unwrap());
        let want = factorial(n) * int(n + 1).pow(n as u32 - 1);
        t.check(got == want, || format!("n={n}: {got} vs {want}"));
    }
    t.finish()
}

fn criterion_3() -> Outcome {
    let mut t = Tally::default();
    for e in catalog() {
        let m = &e.matroid;
        let (r, n) = (m.chow_dimension(), m.n());
        let mu = characteristic_data(m).unwrap().mu;
        let mut cache = DegreeCache::new(m, WeightConvention::Oi);
        for (k, mu_k) in mu.iter().enumerate().take(r + 1) {
            let d = cache.degree(&one_hot(n, &[(1, k), (n, r - k)])).unwrap();
            let flags = count_initial_descending_flags(m, k);
            t.check(&d == mu_k, || format!("{} k={k}: degree {d} vs mu {mu_k}", e.name));
            t.check(&flags == mu_k, || format!("{} k={k}: flags {flags} vs mu {mu_k}", e.name));
        }
    }
    t.finish()
}

/// Sorted contiguous vectors of length `r` with entries in `1..=max`.
fn contiguous_sorted(r: usize, max: usize) -> Vec<Vec<usize>> {
    compositions(r, max)
        .into_iter()
        .map(|c| Composition::new(c).to_v())
        .filter(|v| is_contiguous(v))
        .collect()
}

fn criterion_4() -> Outcome {
    let mut t = Tally::default();
    for e in catalog().into_iter().filter(|e| e.matroid.chow_dimension() <= 4) {
        let m = &e.matroid;
        let (r, n) = (m.chow_dimension(), m.n());
        let t1 = tutte_polynomial(m, TutteMethod::CorankNullity).at_x(&BigInt::one());
        let boolean = Matroid::boolean(r + 1).unwrap();
        for v in contiguous_sorted(r, n).into_iter().filter(|v| v[0] == 1) {
            let lhs = cv_polynomial(m, &v).unwrap();
            let rhs = &t1 * &cv_polynomial(&boolean, &v).unwrap();
            t.check(lhs == rhs, || format!("{} {v:?}: {} vs {}", e.name, lhs.display("y"), rhs.display("y")));
        }
        let rf = factorial(r);
        let staircase: Vec<usize> = (1..=r).collect();
        let lhs = cv_polynomial(m, &staircase).unwrap();
        let rhs = &Poly::constant(rf.clone()) * &t1;
        t.check(lhs == rhs, || format!("{} staircase polynomial", e.name));
        let d = DegreeCache::new(m, WeightConvention::Oi).degree_of_v(&staircase.iter().map(|&x| x as i64).collect::<Vec<_>>()).unwrap();
        let want = &rf * t1.eval(&BigInt::zero());
        t.check(d == want, || format!("{} staircase degree {d} vs {want}", e.name));
        // Sum over every contiguous sorted v, all shifts included.
        let mut cache = DegreeCache::new(m, WeightConvention::Oi);
        let total: BigInt = contiguous_sorted(r, n)
            .iter()
            .map(|v| cache.degree(&Composition::from_v(n, v).unwrap()).unwrap())
            .sum();
        let want = &rf * int(2).pow(r as u32 - 1) * t1.eval(&BigInt::one());
        t.check(total == want, || format!("{} contiguous sum {total} vs {want}", e.name));
    }
    t.finish()
}

fn criterion_5() -> Outcome {
    let mut t = Tally::default();
    for n in 1..=8 {
        for r in 1..=n.min(4) {
            let m = Matroid::uniform(r + 1, n + 1).unwrap();
            let mut cache = DegreeCache::new(&m, WeightConvention::Oi);
            for k in 1..=n {
                let d = cache.degree(&one_hot(n, &[(k, r)])).unwrap();
                let sum: BigInt = (0..k).map(|j| binomial(n - j, r) * eulerian(r, k as i64 - j as i64 - 1)).sum();
                t.check(d == sum, || format!("U({},{}) k={k}: {d} vs {sum}", r + 1, n + 1));
                if k >= r {
                    let w = int(n + 1 - k).pow(r as u32);
                    t.check(d == w, || format!("U({},{}) k={k}: {d} vs Worpitzky {w}", r + 1, n + 1));
                }
            }
        }
    }
    t.finish()
}

fn criterion_6() -> Outcome {
    let mut t = Tally::default();
    let (r, n) = (2, 5);
    let uniform = Matroid::uniform(r + 1, n + 1).unwrap();
    let boolean = Matroid::boolean(r + 1).unwrap();
    let mut cu = DegreeCache::new(&uniform, WeightConvention::Oi);
    let mut cb = DegreeCache::new(&boolean, WeightConvention::Oi);
    for (count, e) in sparse_family() {
        let mut cm = DegreeCache::new(&e.matroid, WeightConvention::Oi);
        for v in contiguous_sorted(r, n) {
            let vi: Vec<i64> = v.iter().map(|&x| x as i64).collect();
            let got = cm.degree_of_v(&vi).unwrap();
            let mut want = cu.degree_of_v(&vi).unwrap();
            if v[r - 1] <= r {
                want -= int(count) * cb.degree_of_v(&vi).unwrap();
            }
            t.check(got == want, || format!("{} {v:?}: {got} vs {want}", e.name));
        }
    }
    t.finish()
}

fn criterion_7() -> Outcome {
    let mut t = Tally::default();
    let mut domains = [0usize; 3];
    for e in small_catalog() {
        let m = &e.matroid;
        let (r, n) = (m.chow_dimension(), m.n());
        let mut oi = DegreeCache::new(m, WeightConvention::Oi);
        let mut mult = DegreeCache::new(m, WeightConvention::Mult);
        let table = DescentTable::new(m);
        for c in compositions(r, n) {
            let c = Composition::new(c);
            let a = oi.degree(&c).unwrap();
            let b = mult.degree(&c).unwrap();
            let l = table.gamma_degree(&c).unwrap();
            t.check(a == b && b == l, || format!("{} {c}: oi {a}, mult {b}, localization {l}", e.name));
            let v = c.to_v();
            // Every repeated position.
            if is_flatly_contiguous(m, &v) {
                for j in 1..=v.len() {
                    if v.iter().filter(|&&x| x == v[j - 1]).count() < 2 {
                        continue;
                    }
                    for conv in [WeightConvention::Oi, WeightConvention::Mult] {
                        let d = eulerian_recursion_degree(m, &v, j, conv).unwrap();
                        domains[0] += 1;
                        t.check(d == a, || format!("{} {c} j={j}: eulerian {d} vs {a}", e.name));
                    }
                }
            }
            if m.rank() >= 3 && is_contiguous(&v) {
                let trailing = v.iter().rev().take_while(|&&x| x == n).count();
                for s in 0..=trailing {
                    let head = &v[..v.len() - s];
                    if s > 0 && head.first() != Some(&1) {
                        continue;
                    }
                    for i in 0..m.size() {
                        let d = deletion_contraction_degree(m, head, s, i).unwrap();
                        domains[1] += 1;
                        t.check(d == a, || format!("{} {c} s={s} i={i}: delcon {d} vs {a}", e.name));
                    }
                }
            }
            for split in 1..v.len() {
                match two_block_degree(m, &v[..split], &v[split..]) {
                    Ok(d) => {
                        domains[2] += 1;
                        t.check(d == a, || format!("{} {c} split {split}: two-block {d} vs {a}", e.name));
                    }
                    Err(Error::PreconditionViolation(_)) => {}
                    Err(other) => t.check(false, || format!("{} {c}: {other}", e.name)),
                }
            }
        }
    }
    t.check(domains.iter().all(|&d| d > 0), || format!("empty domain: {domains:?}"));
    t.finish().map(|s| format!("{s}; eulerian {}, delcon {}, two-block {}", domains[0], domains[1], domains[2]))
}

fn criterion_8() -> Outcome {
    let mut t = Tally::default();
    let u = Matroid::uniform(6, 10).unwrap();
    let v = [2, 3, 1, 4];
    let tree = |flats: &[&[usize]]| PostnikovTree {
        labels: vec![3, 1, 4, 2],
        flag: FlagChain(flats.iter().map(|f| set_of(f)).collect()),
    };
    let a = tree(&[&[5], &[3, 5], &[3, 5, 8], &[1, 2, 3, 5, 8]]);
    let b = tree(&[&[5], &[0, 5], &[0, 3, 5, 8], &[0, 2, 3, 5, 8]]);
    let wa = tree_weight(&u, &v, &a, WeightConvention::Oi);
    let wb = tree_weight(&u, &v, &b, WeightConvention::Oi);
    t.check(wa == Some(BigRational::from_integer(int(2))), || format!("first worked tree: {wa:?}"));
    t.check(wb == Some(BigRational::one()), || format!("second worked tree: {wb:?}"));

    let pool = small_catalog();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..200 {
        let e = pool.choose(&mut rng).unwrap();
        let m = &e.matroid;
        let v: Vec<usize> = (0..m.chow_dimension()).map(|_| rng.gen_range(1..=m.n())).collect();
        let conv = if rng.gen_bool(0.5) { WeightConvention::Oi } else { WeightConvention::Mult };
        let mut agg: BTreeMap<FlagChain, BigRational> = BTreeMap::new();
        for (tr, w) in enumerate_trees(m, &v, conv).unwrap() {
            *agg.entry(tr.flag).or_insert_with(BigRational::zero) += w;
        }
        agg.retain(|_, w| !w.is_zero());
        let flags = expand_gamma_product(m, &v, conv).unwrap().terms;
        t.check(agg == flags, || format!("{} v={v:?} {conv}", e.name));
    }
    t.finish()
}

fn criterion_9() -> Outcome {
    let mut t = Tally::default();
    for e in catalog().into_iter().filter(|e| (2..=4).contains(&e.matroid.chow_dimension())) {
        let m = &e.matroid;
        let (r, n) = (m.chow_dimension(), m.n());
        let mut cache = DegreeCache::new(m, WeightConvention::Oi);
        for c in compositions(r - 2, n) {
            let c = Composition::new(c);
            for i in 1..=n {
                for j in i..=n {
                    let lc = log_concavity_check(&mut cache, &c, i, j).unwrap();
                    t.check(lc.holds, || format!("{} {c} i={i} j={j}: {lc:?}", e.name));
                }
            }
        }
    }
    t.finish()
}

fn criterion_10() -> Outcome {
    let mut t = Tally::default();
    let fano = projective_geometry(2, 2).unwrap();
    let mut fc = DegreeCache::new(&fano, WeightConvention::Oi);
    let got: Vec<BigInt> = [vec![1, 1], vec![1, 3], vec![3, 3]].iter().map(|v| fc.degree_of_v(v).unwrap()).collect();
    t.check(got == [int(8), int(24), int(16)], || format!("Fano values {got:?}"));

    let designs: Vec<(usize, u64)> = vec![(2, 2), (2, 3), (3, 2)];
    for &(r, q) in &designs {
        let m = projective_geometry(r, q).unwrap();
        let p = pmd_profile(&m).unwrap();
        let mut cache = DegreeCache::new(&m, WeightConvention::Oi);
        if r == 2 {
            let forms = rank3_closed_forms(&p).unwrap();
            let degs: Vec<BigRational> = [(0, 0), (0, 1), (1, 1)]
                .iter()
                .map(|&(a, b)| {
                    let v = [p.sizes[a] as i64, p.sizes[b] as i64];
                    BigRational::from_integer(cache.degree_of_v(&v).unwrap())
                })
                .collect();
            t.check(forms.to_vec() == degs, || format!("PG({r},{q}) rank-3 forms"));
        }
        let qr = BigRational::from_integer(int(q));
        let table = remixed_table(r, &qr).unwrap();
        for c in compositions(r, r) {
            let deg = cache.degree(&p.to_composition(&c).unwrap()).unwrap();
            if is_lopsided(&c) {
                let closed = lopsided_degree(&m, &c).unwrap();
                t.check(closed == deg, || format!("PG({r},{q}) {c:?}: lopsided {closed} vs {deg}"));
            }
            for i in 1..=r {
                if c[i - 1] >= 2 {
                    let ok = pmd_recurrence_check_with(&mut cache, &p, &c, i).unwrap();
                    t.check(ok, || format!("PG({r},{q}) {c:?} i={i}: relation"));
                }
            }
            let id = pg_identity_with(&mut cache, &p, &table, q, &c).unwrap();
            t.check(id.holds, || format!("PG({r},{q}) {c:?}: {} vs {}", id.lhs, id.rhs));
        }
    }
    for r in 1..=4 {
        let boolean = Matroid::boolean(r + 1).unwrap();
        let mut bc = DegreeCache::new(&boolean, WeightConvention::Oi);
        for q in ["1", "2", "3", "1/2"] {
            let q: BigRational = q.parse().unwrap();
            let table = remixed_table(r, &q).unwrap();
            t.check(table[&vec![1; r]] == q_factorial(r, &q), || format!("r={r} q={q}: anchor"));
            t.check(remixed_residuals(r, &q, &table).iter().all(Zero::is_zero), || format!("r={r} q={q}: residuals"));
            if q.is_one() {
                for (c, a) in &table {
                    let d = BigRational::from_integer(bc.degree(&Composition::new(c.clone())).unwrap());
                    t.check(&d == a, || format!("r={r} {c:?}: q=1 gives {a}, Boolean {d}"));
                }
            }
        }
    }
    t.finish()
}

fn criterion_11() -> Outcome {
    let mut t = Tally::default();
    let eps = calibrate_sign();
    t.check(eps == SIGN_CALIBRATION, || format!("calibration gives {eps}, fixed constant is {SIGN_CALIBRATION}"));
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 11);
    let mut hits = 0;
    for _ in 0..100 {
        let n = rng.gen_range(1..=4);
        let mut w: Vec<usize> = (0..=n).collect();
        w.shuffle(&mut rng);
        let mut c = vec![0i64; n + 1];
        for _ in 0..n {
            c[rng.gen_range(0..=n)] += 1;
        }
        let direct = series::constant_term(&w, &c);
        let rule = series::descent_rule(&w, &c);
        hits += usize::from(!rule.is_zero());
        t.check(direct == rule, || format!("w={w:?} c={c:?}: series {direct}, rule {rule}"));
    }
    t.finish().map(|s| format!("{s}; {hits} with nonzero constant term"))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 11] = [
        ("Boolean identities", criterion_1),
        ("Boolean volume", criterion_2),
        ("characteristic polynomial", criterion_3),
        ("Tutte factorization", criterion_4),
        ("uniform closed forms", criterion_5),
        ("sparse paving", criterion_6),
        ("cross-pipeline equivalence", criterion_7),
        ("tree expansion", criterion_8),
        ("log-concavity", criterion_9),
        ("perfect matroid designs", criterion_10),
        ("localization internals", criterion_11),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} {name}: PASS ({detail}, {secs:.2}s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} {name}: FAIL ({detail}, {secs:.2}s)", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
