//! Brute-force minimum Wiener index per `(n, g, beta)` class, compared with the
//! extremal construction and its printed closed form.

use std::collections::BTreeMap;

use rayon::prelude::*;

use super::{compositions, gen_unicyclic_unit, EnumerationError, NecklaceCode, TreeTable};
use crate::constructions::{construct_gstar, eval_gstar_formula, ExtremalParams};
use crate::graph::{matching_number, wiener_index};

/// `2*beta >= 3*g` and `n >= 2*beta`: the range where `G*` is claimed extremal.
pub fn in_hypothesis(n: usize, g: usize, beta: usize) -> bool {
    2 * beta >= 3 * g && n >= 2 * beta
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub n: usize,
    pub g: usize,
    pub beta: usize,
    pub class_size: usize,
    pub min_wiener: Option<u64>,
    /// Codes of every class member attaining the minimum, sorted.
    pub argmin: Vec<NecklaceCode>,
    pub wiener_gstar_direct: Option<u64>,
    pub formula_value: Option<i64>,
    pub gstar_is_unique_min: bool,
    pub formula_matches_direct: bool,
    pub in_hypothesis: bool,
}

impl VerificationReport {
    fn build(n: usize, g: usize, beta: usize, members: &[(u64, NecklaceCode)]) -> Self {
        let min_wiener = members.iter().map(|m| m.0).min();
        let mut argmin: Vec<NecklaceCode> = members
            .iter()
            .filter(|m| Some(m.0) == min_wiener)
            .map(|m| m.1.clone())
            .collect();
        argmin.sort();

        let gstar = ExtremalParams::new(n, g, beta).ok().map(|p| {
            let graph = construct_gstar(p).expect("valid params construct");
            let direct = wiener_index(&graph).expect("connected");
            let code = NecklaceCode::of(&graph).expect("unicyclic");
            (direct, eval_gstar_formula(p), code)
        });
        let (wiener_gstar_direct, formula_value, gstar_is_unique_min) = match &gstar {
            Some((direct, formula, code)) => (
                Some(*direct),
                Some(*formula),
                argmin.len() == 1 && &argmin[0] == code && min_wiener == Some(*direct),
            ),
            None => (None, None, false),
        };
        let formula_matches_direct = matches!(gstar, Some((d, f, _)) if d as i64 == f);

        VerificationReport {
            n,
            g,
            beta,
            class_size: members.len(),
            min_wiener,
            argmin,
            wiener_gstar_direct,
            formula_value,
            gstar_is_unique_min,
            formula_matches_direct,
            in_hypothesis: in_hypothesis(n, g, beta),
        }
    }

    /// The extremal claim for this class: `G*` is the unique minimizer.
    pub fn claim_holds(&self) -> bool {
        self.gstar_is_unique_min && self.min_wiener == self.wiener_gstar_direct
    }
}

/// Matching number, Wiener index and code of every class member of one `(n, g)`,
/// grouped by matching number.
#[derive(Debug, Clone, Default)]
pub struct ClassSurvey {
    pub by_beta: BTreeMap<usize, Vec<(u64, NecklaceCode)>>,
}

impl ClassSurvey {
    pub fn total(&self) -> usize {
        self.by_beta.values().map(Vec::len).sum()
    }

    pub fn report(&self, n: usize, g: usize, beta: usize) -> VerificationReport {
        let members = self.by_beta.get(&beta).map(Vec::as_slice).unwrap_or(&[]);
        VerificationReport::build(n, g, beta, members)
    }
}

type UnitResult = Vec<(usize, u64, NecklaceCode)>;

fn evaluate_unit(composition: &[usize], table: &TreeTable) -> UnitResult {
    gen_unicyclic_unit(composition, table)
        .into_iter()
        .map(|c| {
            let beta = matching_number(&c.graph).expect("unicyclic").0;
            let w = wiener_index(&c.graph).expect("connected");
            (beta, w, c.code)
        })
        .collect()
}

fn merge(units: Vec<UnitResult>) -> ClassSurvey {
    let mut survey = ClassSurvey::default();
    for (beta, w, code) in units.into_iter().flatten() {
        survey.by_beta.entry(beta).or_default().push((w, code));
    }
    survey
}

/// Surveys every `(n, g)` in `pairs`. Work is split by branch-order composition;
/// results are merged in a fixed order so the output does not depend on `jobs`.
fn survey_pairs(pairs: &[(usize, usize)], jobs: usize) -> Vec<ClassSurvey> {
    let max_branch = pairs.iter().map(|&(n, g)| n - g + 1).max().unwrap_or(1);
    let table = TreeTable::new(max_branch);
    let units: Vec<(usize, Vec<usize>)> = pairs
        .iter()
        .enumerate()
        .flat_map(|(k, &(n, g))| compositions(n, g).into_iter().map(move |c| (k, c)))
        .collect();

    let results: Vec<UnitResult> = if jobs <= 1 {
        units.iter().map(|(_, c)| evaluate_unit(c, &table)).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("thread pool");
        pool.install(|| units.par_iter().map(|(_, c)| evaluate_unit(c, &table)).collect())
    };

    let mut grouped: Vec<Vec<UnitResult>> = vec![Vec::new(); pairs.len()];
    for ((k, _), r) in units.iter().zip(results) {
        grouped[*k].push(r);
    }
    grouped.into_iter().map(merge).collect()
}

/// Exact minimum Wiener index over unicyclic graphs of order `n`, girth `g` and
/// matching number `beta`, with the comparison against `G*`.
pub fn min_wiener(n: usize, g: usize, beta: usize) -> Result<VerificationReport, EnumerationError> {
    if g < 3 || g > n {
        return Err(EnumerationError::Range { n, g });
    }
    let survey = survey_pairs(&[(n, g)], 1).pop().expect("one pair");
    Ok(survey.report(n, g, beta))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepConfig {
    pub max_n: usize,
    pub girths: Vec<usize>,
    /// Only report classes with `2*beta >= 3*g` and `n >= 2*beta`.
    pub require_hypothesis: bool,
    pub jobs: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepOutcome {
    /// Sorted by `(n, g, beta)`.
    pub reports: Vec<VerificationReport>,
    /// Hypothesis classes where `G*` is not the unique minimizer.
    pub violations: Vec<(usize, usize, usize)>,
    /// Places where the class minimum drops as `beta` grows (diagnostic only).
    pub monotonicity_breaks: Vec<(usize, usize, usize)>,
}

impl SweepOutcome {
    pub fn claim_holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Brute-force check of the extremal claim over every `(n, g, beta)` with
/// `g` in `girths` and `n <= max_n`.
pub fn verify_sweep(cfg: &SweepConfig) -> SweepOutcome {
    let mut girths = cfg.girths.clone();
    girths.sort_unstable();
    girths.dedup();
    let mut pairs = Vec::new();
    for n in 3..=cfg.max_n {
        for &g in girths.iter().filter(|&&g| g >= 3 && g <= n) {
            let wanted = (1..=n / 2).any(|b| !cfg.require_hypothesis || in_hypothesis(n, g, b));
            if wanted {
                pairs.push((n, g));
            }
        }
    }
    let surveys = survey_pairs(&pairs, cfg.jobs);

    let mut reports = Vec::new();
    let mut monotonicity_breaks = Vec::new();
    for (&(n, g), survey) in pairs.iter().zip(&surveys) {
        let mut prev_min: Option<u64> = None;
        for beta in 1..=n / 2 {
            let report = survey.report(n, g, beta);
            if let (Some(p), Some(m)) = (prev_min, report.min_wiener) {
                if m < p {
                    monotonicity_breaks.push((n, g, beta));
                }
            }
            if report.min_wiener.is_some() {
                prev_min = report.min_wiener;
            }
            if !cfg.require_hypothesis || report.in_hypothesis {
                reports.push(report);
            }
        }
    }
    reports.sort_by_key(|r| (r.n, r.g, r.beta));
    let violations = reports
        .iter()
        .filter(|r| r.in_hypothesis && !r.claim_holds())
        .map(|r| (r.n, r.g, r.beta))
        .collect();
    SweepOutcome {
        reports,
        violations,
        monotonicity_breaks,
    }
}
