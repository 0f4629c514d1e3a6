//! Degree bookkeeping for the Steinberger relations `Q_{1/2} τ̄_n = τ̄_{n+1}`,
//! `βQ_{1/2} τ̄_n = ξ̄_{n+1}`, and the match between the free E2-algebra on
//! `τ̄_n` and the generators of the killed ideal.

use serde::Serialize;

use super::derive_generator_degrees;
use crate::dyer_lashof::{apply_op, free_e2_generators_odd, OpSymbol};
use crate::error::{Error, Result};
use crate::fpgraded::{Parity, Prime};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SteinbergerRow {
    pub n: u32,
    pub tau_degree: i64,
    pub q_half_degree: i64,
    pub expected_tau_next: i64,
    pub beta_q_half_degree: i64,
    pub expected_xi_next: i64,
    /// Degrees and parities of the free E2 generators on `τ̄_n` agree with
    /// `τ̄_{n+m}` (exterior) and `ξ̄_{n+m}` (polynomial) up to the bound.
    pub e2_generators_match: bool,
}

impl SteinbergerRow {
    pub fn passed(&self) -> bool {
        self.q_half_degree == self.expected_tau_next
            && self.beta_q_half_degree == self.expected_xi_next
            && self.e2_generators_match
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SteinbergerReport {
    pub prime: Prime,
    pub n_max: u32,
    pub rows: Vec<SteinbergerRow>,
}

impl SteinbergerReport {
    pub fn passed(&self) -> bool {
        !self.rows.is_empty() && self.rows.iter().all(SteinbergerRow::passed)
    }
}

pub fn steinberger_consistency(p: Prime, n_max: u32) -> Result<SteinbergerReport> {
    if !p.is_odd() {
        return Err(Error::EvenPrime(p.get()));
    }
    let pp = p.get() as i64;
    let pow = |e: u32| {
        pp.checked_pow(e)
            .ok_or_else(|| Error::Overflow(format!("{pp}^{e}")))
    };
    let mut rows = Vec::new();
    for n in 0..=n_max {
        let tau = 2 * pow(n)? - 1;
        let (q_half, _) = apply_op(p, OpSymbol::HALF, (tau, 1))?;
        let (beta, _) = apply_op(p, OpSymbol::BETA_HALF, (tau, 1))?;
        let next = pow(n + 1)?;

        // two more steps of the tower above τ̄_n
        let bound = 2 * pow(n + 2)? - 1;
        let (taus, xis) = derive_generator_degrees(p, bound)?;
        let mut expected = Vec::new();
        for k in n as usize..taus.len() {
            expected.push((taus[k], Parity::Exterior));
            if k > n as usize {
                expected.push((xis[k - 1], Parity::Polynomial));
            }
        }
        expected.retain(|&(d, _)| d <= bound);
        let got: Vec<(i64, Parity)> = free_e2_generators_odd(p, tau, bound)?
            .into_iter()
            .map(|g| (g.degree, g.parity))
            .collect();

        rows.push(SteinbergerRow {
            n,
            tau_degree: tau,
            q_half_degree: q_half,
            expected_tau_next: 2 * next - 1,
            beta_q_half_degree: beta,
            expected_xi_next: 2 * next - 2,
            e2_generators_match: got == expected,
        });
    }
    Ok(SteinbergerReport {
        prime: p,
        n_max,
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn consistent_for_small_primes() {
        for p in [3, 5, 7] {
            let r = steinberger_consistency(Prime::new(p).unwrap(), 4).unwrap();
            assert!(r.passed(), "p = {p}: {r:?}");
        }
    }

    #[test]
    fn first_row_at_three() {
        let r = steinberger_consistency(Prime::new(3).unwrap(), 0).unwrap();
        let row = &r.rows[0];
        assert_eq!((row.tau_degree, row.q_half_degree, row.beta_q_half_degree), (1, 5, 4));
    }

    #[test]
    fn rejects_two() {
        assert!(steinberger_consistency(Prime::new(2).unwrap(), 2).is_err());
    }
}
