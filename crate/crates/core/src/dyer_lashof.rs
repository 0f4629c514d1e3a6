//! Lower-indexed Dyer–Lashof operations as bidegree transformations.
//!
//! A class lives in bidegree `(r, w)`: `r` is its homological (space)
//! degree and `w` its weight. Every operation multiplies the weight by `p`.
//! At `p = 2`, `Q_i` sends `(r, w)` to `(2r + i, 2w)`. At odd primes
//! `Q_j` sends it to `(pr + 2j(p - 1), pw)` and `βQ_j` to one less in degree.
//! Subscripts are stored doubled (`index2 = 2j`) so that `Q_{1/2}` stays
//! integral.
//!
//! Chart coordinates are `(t, f) = (r - w, w)`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fpgraded::{Bidegree, Parity, Prime};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum OpKind {
    Q,
    BetaQ,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct OpSymbol {
    pub kind: OpKind,
    /// Twice the lower index.
    pub index2: i64,
}

impl OpSymbol {
    pub const fn q(index2: i64) -> Self {
        OpSymbol {
            kind: OpKind::Q,
            index2,
        }
    }

    pub const fn beta_q(index2: i64) -> Self {
        OpSymbol {
            kind: OpKind::BetaQ,
            index2,
        }
    }

    /// `Q_{1/2}`
    pub const HALF: OpSymbol = OpSymbol::q(1);
    /// `βQ_{1/2}`
    pub const BETA_HALF: OpSymbol = OpSymbol::beta_q(1);
}

impl fmt::Display for OpSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let beta = if self.kind == OpKind::BetaQ { "βQ" } else { "Q" };
        if self.index2 % 2 == 0 {
            write!(f, "{beta}{}", self.index2 / 2)
        } else {
            write!(f, "{beta}{}/2", self.index2)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct BaseClass {
    pub name: String,
    pub space_degree: i64,
    pub weight: i64,
}

impl BaseClass {
    pub fn new(name: impl Into<String>, space_degree: i64, weight: i64) -> Result<Self> {
        let name = name.into();
        if weight < 1 || space_degree < 0 {
            return Err(Error::IndexOutOfRange(format!(
                "base class {name} needs r >= 0 and w >= 1, got ({space_degree},{weight})"
            )));
        }
        Ok(BaseClass {
            name,
            space_degree,
            weight,
        })
    }

    /// The degree-one generator of weight one that every chart family starts from.
    pub fn y1() -> Self {
        BaseClass {
            name: "y1".into(),
            space_degree: 1,
            weight: 1,
        }
    }
}

/// A composite of operations applied to a base class. The last symbol in
/// `ops` acts first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct OpWord {
    pub ops: Vec<OpSymbol>,
    pub base: BaseClass,
    pub prime: Prime,
}

impl fmt::Display for OpWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for op in &self.ops {
            write!(f, "{op} ")?;
        }
        write!(f, "{}", self.base.name)
    }
}

pub fn apply_op(p: Prime, sym: OpSymbol, state: (i64, i64)) -> Result<(i64, i64)> {
    let (r, w) = state;
    let pp = p.get() as i64;
    let overflow = || Error::Overflow(format!("{sym} on ({r},{w})"));
    let w2 = w.checked_mul(pp).ok_or_else(overflow)?;
    if pp == 2 {
        if sym.kind == OpKind::BetaQ {
            return Err(Error::BetaAtTwo);
        }
        if sym.index2 % 2 != 0 {
            return Err(Error::FractionalIndexAtTwo { index2: sym.index2 });
        }
        let r2 = r
            .checked_mul(2)
            .and_then(|x| x.checked_add(sym.index2 / 2))
            .ok_or_else(overflow)?;
        return Ok((r2, w2));
    }
    let mut r2 = r
        .checked_mul(pp)
        .and_then(|x| x.checked_add((pp - 1) * sym.index2))
        .ok_or_else(overflow)?;
    if sym.kind == OpKind::BetaQ {
        r2 -= 1;
    }
    Ok((r2, w2))
}

pub fn eval_word(word: &OpWord) -> Result<(i64, i64)> {
    word.ops
        .iter()
        .rev()
        .try_fold((word.base.space_degree, word.base.weight), |st, &op| {
            apply_op(word.prime, op, st)
        })
}

pub fn chart_bidegree(word: &OpWord) -> Result<Bidegree> {
    let (r, w) = eval_word(word)?;
    Ok(Bidegree::new(r - w, w))
}

/// Generator families of the E1-term. `H` is the only family at `p = 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    V,
    H,
    B,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::V => "v",
            Family::H => "h",
            Family::B => "b",
        }
    }

    pub fn parity(self, p: Prime) -> Parity {
        if p.is_odd() && self == Family::H {
            Parity::Exterior
        } else {
            Parity::Polynomial
        }
    }

    /// Families present at the prime, in ring-shape order.
    pub fn all(p: Prime) -> &'static [Family] {
        if p.is_odd() {
            &[Family::V, Family::H, Family::B]
        } else {
            &[Family::H]
        }
    }

    /// The `v` family has a single index; `j` is ignored for it.
    pub fn label(self, i: i64, j: i64) -> String {
        match self {
            Family::V => format!("v_{i}"),
            _ => format!("{}_{{{i},{j}}}", self.name()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneratorFamily {
    pub family: Family,
    pub i: i64,
    pub j: i64,
    pub word: OpWord,
    pub parity: Parity,
}

pub fn check_indices(p: Prime, family: Family, i: i64, j: i64) -> Result<()> {
    let ok = match (p.is_odd(), family) {
        (false, Family::H) => i >= 1 && j >= 0,
        (false, _) => false,
        (true, Family::V) => i >= 0,
        (true, _) => i >= 1 && j >= 0,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange(format!(
            "family {} with (i, j) = ({i}, {j}) at p = {p}",
            family.name()
        )))
    }
}

/// The operation word defining a generator.
///
/// `p = 2`: `h_{i,j} = Q_1^{(j)} Q_2^{(i-1)} y1`.
/// Odd `p`: `v_i = Q_1^{(i)} y1`, `h_{i,j} = Q_{1/2}^{(j)} βQ_1 Q_1^{(i-1)} y1`,
/// `b_{i,j} = βQ_{1/2} Q_{1/2}^{(j)} βQ_1 Q_1^{(i-1)} y1`. A β attaches only to
/// the outermost factor of an iterated power.
pub fn family_word(p: Prime, family: Family, i: i64, j: i64) -> Result<OpWord> {
    check_indices(p, family, i, j)?;
    let rep = |sym: OpSymbol, n: i64| std::iter::repeat_n(sym, n.max(0) as usize);
    let ops: Vec<OpSymbol> = if !p.is_odd() {
        rep(OpSymbol::q(2), j).chain(rep(OpSymbol::q(4), i - 1)).collect()
    } else {
        match family {
            Family::V => rep(OpSymbol::q(2), i).collect(),
            Family::H => rep(OpSymbol::HALF, j)
                .chain([OpSymbol::beta_q(2)])
                .chain(rep(OpSymbol::q(2), i - 1))
                .collect(),
            Family::B => [OpSymbol::BETA_HALF]
                .into_iter()
                .chain(rep(OpSymbol::HALF, j))
                .chain([OpSymbol::beta_q(2)])
                .chain(rep(OpSymbol::q(2), i - 1))
                .collect(),
        }
    };
    Ok(OpWord {
        ops,
        base: BaseClass::y1(),
        prime: p,
    })
}

pub fn generator_family(p: Prime, family: Family, i: i64, j: i64) -> Result<GeneratorFamily> {
    Ok(GeneratorFamily {
        family,
        i,
        j,
        word: family_word(p, family, i, j)?,
        parity: family.parity(p),
    })
}

/// A generator of the homology of a free E2-algebra on an odd sphere.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct E2Generator {
    pub name: String,
    pub degree: i64,
    pub parity: Parity,
    pub word: OpWord,
}

/// Generators `Q_{1/2}^{(m)} α` (exterior, m >= 0) and `βQ_{1/2} Q_{1/2}^{(m-1)} α`
/// (polynomial, m >= 1) with degree at most `degree_bound`, where `α` sits in
/// degree `n`. Ordered by `m`, exterior before polynomial.
pub fn free_e2_generators_odd(p: Prime, n: i64, degree_bound: i64) -> Result<Vec<E2Generator>> {
    if !p.is_odd() {
        return Err(Error::EvenPrime(p.get()));
    }
    if n <= 0 || n % 2 == 0 {
        return Err(Error::EvenSphere(n));
    }
    let base = BaseClass::new("α", n, 1)?;
    let word = |ops: Vec<OpSymbol>| OpWord {
        ops,
        base: base.clone(),
        prime: p,
    };
    let mut out = Vec::new();
    for m in 0usize.. {
        let plain = word(vec![OpSymbol::HALF; m]);
        let (deg, _) = eval_word(&plain)?;
        let beta = (m >= 1).then(|| {
            let mut ops = vec![OpSymbol::BETA_HALF];
            ops.extend(std::iter::repeat_n(OpSymbol::HALF, m - 1));
            word(ops)
        });
        let beta_deg = beta.as_ref().map(eval_word).transpose()?.map(|(d, _)| d);
        if deg.min(beta_deg.unwrap_or(deg)) > degree_bound {
            break;
        }
        if deg <= degree_bound {
            out.push(E2Generator {
                name: plain.to_string(),
                degree: deg,
                parity: Parity::Exterior,
                word: plain,
            });
        }
        if let (Some(beta), Some(bdeg)) = (beta, beta_deg) {
            if bdeg <= degree_bound {
                out.push(E2Generator {
                    name: beta.to_string(),
                    degree: bdeg,
                    parity: Parity::Polynomial,
                    word: beta,
                });
            }
        }
    }
    Ok(out)
}
