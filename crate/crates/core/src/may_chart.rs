//! The E1-term as an explicit bigraded algebra: generator families with
//! their chart bidegrees, dimension tables, and a mechanical comparison of
//! the closed-form bidegrees with operation-word evaluation.

use std::sync::Arc;

use serde::Serialize;

use crate::dyer_lashof::{self, check_indices, Family, GeneratorFamily};
use crate::error::{Error, Result};
use crate::fpgraded::{Bidegree, FreeGCAlgebra, GeneratorSpec, PoincareTable, Prime};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ChartSpec {
    pub prime: Prime,
    pub t_max: i64,
    pub f_max: Option<i64>,
}

impl ChartSpec {
    pub fn new(prime: Prime, t_max: i64, f_max: Option<i64>) -> Result<Self> {
        if t_max < 0 {
            return Err(Error::IndexOutOfRange(format!("t_max = {t_max} must be >= 0")));
        }
        if let Some(f) = f_max {
            if f < 0 {
                return Err(Error::IndexOutOfRange(format!("f_max = {f} must be >= 0")));
            }
        }
        Ok(ChartSpec { prime, t_max, f_max })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChartGenerator {
    pub generator: GeneratorFamily,
    pub bidegree: Bidegree,
}

impl ChartGenerator {
    pub fn name(&self) -> String {
        self.generator.family.label(self.generator.i, self.generator.j)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Chart {
    pub spec: ChartSpec,
    pub generators: Vec<ChartGenerator>,
    /// Effective filtration cap used for `dims`.
    pub f_max: i64,
    pub dims: PoincareTable,
    #[serde(skip)]
    pub algebra: Arc<FreeGCAlgebra>,
}

fn checked_pow(p: i64, e: i64) -> Result<i64> {
    u32::try_from(e)
        .ok()
        .and_then(|e| p.checked_pow(e))
        .ok_or_else(|| Error::Overflow(format!("{p}^{e}")))
}

/// The bidegree formulas of the E1-term.
pub fn closed_form(p: Prime, family: Family, i: i64, j: i64) -> Result<Bidegree> {
    check_indices(p, family, i, j)?;
    let pp = p.get() as i64;
    let ovf = || Error::Overflow(format!("closed form {}", family.label(i, j)));
    if !p.is_odd() {
        // (2^{i+j} - 2^j - 1, 2^{i+j-1})
        let top = checked_pow(2, i + j)?;
        let pj = checked_pow(2, j)?;
        return Ok(Bidegree::new(top - pj - 1, top / 2));
    }
    let b = match family {
        Family::V => {
            let w = checked_pow(pp, i)?;
            Bidegree::new(w.checked_mul(2).ok_or_else(ovf)? - 2, w)
        }
        Family::H => {
            let w = checked_pow(pp, i + j)?;
            let pj = checked_pow(pp, j)?;
            Bidegree::new(w.checked_mul(2).ok_or_else(ovf)? - 2 * pj - 1, w)
        }
        Family::B => {
            let w = checked_pow(pp, i + j + 1)?;
            let pj = checked_pow(pp, j + 1)?;
            Bidegree::new(w.checked_mul(2).ok_or_else(ovf)? - 2 * pj - 2, w)
        }
    };
    Ok(b)
}

fn first_i(family: Family) -> i64 {
    if family == Family::V {
        0
    } else {
        1
    }
}

/// All family members with `t <= t_max` (and `f <= f_max` when set), ordered
/// by family, then `i`, then `j`.
///
/// The closed forms increase strictly in both indices, so each scan stops at
/// the first index whose bidegree leaves the window.
pub fn enumerate_generators(spec: &ChartSpec) -> Result<Vec<ChartGenerator>> {
    let p = spec.prime;
    let in_t = |b: Bidegree| b.t <= spec.t_max;
    let mut out = Vec::new();
    for &family in Family::all(p) {
        let mut i = first_i(family);
        loop {
            let head = closed_form(p, family, i, 0)?;
            if !in_t(head) {
                break;
            }
            let mut j = 0;
            loop {
                let b = closed_form(p, family, i, j)?;
                if !in_t(b) {
                    break;
                }
                if spec.f_max.is_none_or(|f| b.w <= f) {
                    out.push(ChartGenerator {
                        generator: dyer_lashof::generator_family(p, family, i, j)?,
                        bidegree: b,
                    });
                }
                if family == Family::V {
                    break;
                }
                j += 1;
            }
            i += 1;
        }
    }
    Ok(out)
}

/// Builds the free graded-commutative algebra on the enumerated generators
/// and tabulates its dimensions over `t <= t_max`, `f <= f_max`. Without an
/// explicit cap the largest generator filtration in range is used.
pub fn build_chart(spec: &ChartSpec) -> Result<Chart> {
    let generators = enumerate_generators(spec)?;
    let f_max = spec
        .f_max
        .unwrap_or_else(|| generators.iter().map(|g| g.bidegree.w).max().unwrap_or(0));
    let gens = generators
        .iter()
        .map(|g| GeneratorSpec {
            name: g.name(),
            parity: g.generator.parity,
            bidegree: g.bidegree,
        })
        .collect();
    let algebra = FreeGCAlgebra::new(spec.prime, gens)?;
    let dims = algebra.poincare_series(Bidegree::new(spec.t_max, f_max));
    Ok(Chart {
        spec: *spec,
        generators,
        f_max,
        dims,
        algebra,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub family: Family,
    pub i: i64,
    pub j: i64,
    pub closed_form: Bidegree,
    pub from_word: Bidegree,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossCheckReport {
    pub prime: Prime,
    pub checked: usize,
    pub mismatches: Vec<Mismatch>,
}

impl CrossCheckReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty() && self.checked > 0
    }
}

fn compare(p: Prime, family: Family, i: i64, j: i64, report: &mut CrossCheckReport) -> Result<()> {
    let expected = closed_form(p, family, i, j)?;
    let got = dyer_lashof::chart_bidegree(&dyer_lashof::family_word(p, family, i, j)?)?;
    report.checked += 1;
    if expected != got {
        report.mismatches.push(Mismatch {
            family,
            i,
            j,
            closed_form: expected,
            from_word: got,
        });
    }
    Ok(())
}

/// Compares closed forms with word evaluation over the index rectangle
/// `i <= i_max`, `j <= j_max` (the `v` family only uses `i`).
pub fn cross_check(p: Prime, i_max: i64, j_max: i64) -> Result<CrossCheckReport> {
    let mut report = CrossCheckReport {
        prime: p,
        checked: 0,
        mismatches: Vec::new(),
    };
    for &family in Family::all(p) {
        for i in first_i(family)..=i_max {
            let j_hi = if family == Family::V { 0 } else { j_max };
            for j in 0..=j_hi {
                compare(p, family, i, j, &mut report)?;
            }
        }
    }
    Ok(report)
}

/// Same comparison over every family member of weight at most `p^max_exp`.
pub fn cross_check_by_weight(p: Prime, max_exp: i64) -> Result<CrossCheckReport> {
    let mut report = CrossCheckReport {
        prime: p,
        checked: 0,
        mismatches: Vec::new(),
    };
    // weight exponents: p=2 h: i+j-1; v: i; h: i+j; b: i+j+1
    for &family in Family::all(p) {
        let shift = match (p.is_odd(), family) {
            (false, _) => -1,
            (true, Family::V) | (true, Family::H) => 0,
            (true, Family::B) => 1,
        };
        for i in first_i(family)..=max_exp + 1 {
            let j_hi = if family == Family::V { 0 } else { max_exp + 1 };
            for j in 0..=j_hi {
                let exp = if family == Family::V { i } else { i + j + shift };
                if exp <= max_exp {
                    compare(p, family, i, j, &mut report)?;
                }
            }
        }
    }
    Ok(report)
}
