//! Verification suites run by `mmeuler check`.

use clap::ValueEnum;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use mixed_eulerian::chow::{count_initial_descending_flags, enumerate_trees, expand_gamma_product, log_concavity_check};
use mixed_eulerian::composition::{compositions, is_contiguous, is_lopsided};
use mixed_eulerian::localization::DescentTable;
use mixed_eulerian::pmd::{lopsided_degree, pmd_profile, pmd_recurrence_check_with};
use mixed_eulerian::poly::Poly;
use mixed_eulerian::recursion::{cv_polynomial, deletion_contraction_degree, eulerian_recursion_degree};
use mixed_eulerian::tutte::{characteristic_data, tutte_polynomial, TutteMethod};
use mixed_eulerian::{Composition, DegreeCache, Matroid, WeightConvention};

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// μ^k against degrees and descending flag counts.
    Charpoly,
    /// All degree algorithms against each other.
    Pipelines,
    /// Contiguous polynomials against the Tutte factorization.
    Tutte,
    /// Log-concavity over all exponents.
    Logconcave,
    /// Closed forms and the three-term relation for designs.
    Pmd,
    /// Tree weights against flag expansions.
    Trees,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Charpoly => "charpoly",
            Suite::Pipelines => "pipelines",
            Suite::Tutte => "tutte",
            Suite::Logconcave => "logconcave",
            Suite::Pmd => "pmd",
            Suite::Trees => "trees",
        }
    }
}

#[derive(Debug, Default)]
pub struct Report {
    pub cases: usize,
    pub failures: Vec<String>,
}

impl Report {
    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(what());
        }
    }
}

/// Ground sets above this size skip the permutation sums.
const LOCALIZATION_LIMIT: usize = 8;

pub fn run_suite(suite: Suite, m: &Matroid) -> Result<Report, CliError> {
    let mut report = Report::default();
    let r = m.chow_dimension();
    let n = m.n();
    let mut cache = DegreeCache::new(m, WeightConvention::Oi);
    match suite {
        Suite::Charpoly => {
            let mu = characteristic_data(m)?.mu;
            for (k, mu_k) in mu.iter().enumerate().take(r + 1) {
                let mut c = vec![0; n];
                c[0] += k;
                c[n - 1] += r - k;
                let d = cache.degree(&Composition::new(c))?;
                let flags = count_initial_descending_flags(m, k);
                report.expect(&d == mu_k && &flags == mu_k, || {
                    format!("k={k}: mu={mu_k} degree={d} flags={flags}")
                });
            }
        }
        Suite::Pipelines => {
            let mut mult = DegreeCache::new(m, WeightConvention::Mult);
            let table = (m.size() <= LOCALIZATION_LIMIT).then(|| DescentTable::new(m));
            for c in compositions(r, n) {
                let c = Composition::new(c);
                let oracle = cache.degree(&c)?;
                let other = mult.degree(&c)?;
                report.expect(other == oracle, || format!("{c}: oi={oracle} mult={other}"));
                if let Some(t) = &table {
                    let loc = t.gamma_degree(&c)?;
                    report.expect(loc == oracle, || format!("{c}: flag={oracle} localization={loc}"));
                }
                let v = c.to_v();
                if let Some(j) = v.windows(2).position(|w| w[0] == w[1]) {
                    if let Ok(e) = eulerian_recursion_degree(m, &v, j + 1, WeightConvention::Oi) {
                        report.expect(e == oracle, || format!("{c}: flag={oracle} eulerian={e}"));
                    }
                }
                if m.rank() >= 3 && is_contiguous(&v) {
                    if let Ok(d) = deletion_contraction_degree(m, &v, 0, 0) {
                        report.expect(d == oracle, || format!("{c}: flag={oracle} delcon={d}"));
                    }
                }
            }
        }
        Suite::Tutte => {
            let t1 = tutte_polynomial(m, TutteMethod::CorankNullity).at_x(&BigInt::one());
            let boolean = Matroid::boolean(r + 1)?;
            for c in compositions(r, n) {
                let v = Composition::new(c).to_v();
                if v.first() != Some(&1) || !is_contiguous(&v) || v.last().is_some_and(|&x| x > r) {
                    continue;
                }
                let lhs = cv_polynomial(m, &v)?;
                let rhs = &t1 * &cv_polynomial(&boolean, &v)?;
                report.expect(lhs == rhs, || format!("{v:?}: {} vs {}", lhs.display("y"), rhs.display("y")));
            }
            let staircase: Vec<usize> = (1..=r).collect();
            if r <= n {
                let lhs = cv_polynomial(m, &staircase)?;
                let factorial: BigInt = (1..=r).map(BigInt::from).product();
                let rhs = &Poly::constant(factorial) * &t1;
                report.expect(lhs == rhs, || format!("staircase: {}", lhs.display("y")));
            }
        }
        Suite::Logconcave => {
            if r >= 2 {
                for c in compositions(r - 2, n) {
                    let c = Composition::new(c);
                    for i in 1..=n {
                        for j in i + 1..=n {
                            let lc = log_concavity_check(&mut cache, &c, i, j)?;
                            report.expect(lc.holds, || format!("{c} i={i} j={j}: {lc:?}"));
                        }
                    }
                }
            }
        }
        Suite::Pmd => {
            let p = pmd_profile(m)?;
            for c in compositions(r, r) {
                let deg = cache.degree(&p.to_composition(&c)?)?;
                if is_lopsided(&c) {
                    let closed = lopsided_degree(m, &c)?;
                    report.expect(closed == deg, || format!("{c:?}: lopsided {closed} vs {deg}"));
                }
                for i in 1..=r {
                    if c[i - 1] >= 2 {
                        let ok = pmd_recurrence_check_with(&mut cache, &p, &c, i)?;
                        report.expect(ok, || format!("relation fails at {c:?}, i={i}"));
                    }
                }
            }
        }
        Suite::Trees => {
            for c in compositions(r, n) {
                let v = Composition::new(c).to_v();
                let trees = enumerate_trees(m, &v, WeightConvention::Oi)?;
                let total: BigRational = trees.iter().map(|(_, w)| w).sum();
                let flags = expand_gamma_product(m, &v, WeightConvention::Oi)?.total();
                report.expect(total == flags, || {
                    format!("{v:?}: trees {total} vs flags {flags}")
                });
            }
        }
    }
    Ok(report)
}
