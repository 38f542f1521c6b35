use super::quotient::{quotient, ratio};
use super::{HyperTerm, Kind};
use crate::error::{Error, Result};
use crate::field::gcd::lcm;
use crate::field::{Polynomial, RationalFunction};

/// Terms `f_1..f_m` together with `f_i/f_1 = p_i/Q` and `f_1(k+1)/f_1(k)`.
#[derive(Clone, Debug)]
pub struct SimilarFamily {
    pub members: Vec<HyperTerm>,
    pub common_den: Polynomial,
    pub numerators: Vec<Polynomial>,
    pub ratio: RationalFunction,
}

impl SimilarFamily {
    pub fn new(members: Vec<HyperTerm>) -> Result<Self> {
        let first = members
            .first()
            .ok_or_else(|| Error::Invalid("empty family".into()))?;
        if first.is_zero() {
            return Err(Error::Invalid("the first term is zero".into()));
        }
        let quotients: Vec<RationalFunction> = members
            .iter()
            .map(|f| quotient(f, first))
            .collect::<Result<_>>()?;
        Self::from_quotients(members, quotients)
    }

    /// Builds the family from known quotients `f_i / f_1`.
    pub fn from_quotients(members: Vec<HyperTerm>, quotients: Vec<RationalFunction>) -> Result<Self> {
        let first = members
            .first()
            .ok_or_else(|| Error::Invalid("empty family".into()))?;
        let common_den = quotients
            .iter()
            .fold(Polynomial::one(), |acc, r| lcm(&acc, r.den()));
        let numerators = quotients
            .iter()
            .map(|r| {
                let cofactor = common_den.div_exact(r.den()).expect("lcm is a multiple");
                r.num() * &cofactor
            })
            .collect();
        Ok(SimilarFamily {
            ratio: ratio(first)?,
            members,
            common_den,
            numerators,
        })
    }

    pub fn kind(&self) -> Kind {
        self.members[0].kind
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}
