//! Finite continued fractions and their two canonical forms.
//!
//! A rational has one shortest expansion (terminal quotient > 1) and one
//! expansion with an odd number of quotients (indices 0..=2n); the word
//! calculus in [`crate::words`] is built on the latter. Both are kept as
//! plain quotient sequences; the rewrite `[.., a] = [.., a-1, 1]` converts
//! between them.

use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::rational::ProjectiveRational;
use crate::error::Error;
use crate::Result;

/// A finite quotient sequence `[a0, a1, ..., an]`.
///
/// The sequence is stored exactly as given: several operations distinguish
/// representations of the same rational (canonical minimal form vs the
/// odd-count word form vs raw evaluation sequences with embedded zeros).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ContinuedFraction {
    quotients: Vec<u64>,
}

impl ContinuedFraction {
    /// Wrap a non-empty quotient sequence. Zeros are allowed anywhere; they
    /// are meaningful for evaluation only.
    pub fn new(quotients: Vec<u64>) -> Result<Self> {
        if quotients.is_empty() {
            return Err(Error::EmptyContinuedFraction);
        }
        Ok(Self { quotients })
    }

    pub fn quotients(&self) -> &[u64] {
        &self.quotients
    }

    pub fn len(&self) -> usize {
        self.quotients.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Shortest canonical form: interior quotients >= 1 and the terminal
    /// quotient > 1 whenever there is more than one quotient.
    pub fn is_minimal(&self) -> bool {
        let q = &self.quotients;
        q.iter().skip(1).all(|&a| a >= 1) && (q.len() == 1 || *q.last().unwrap() >= 2)
    }

    /// Odd quotient count with interior quotients >= 1 (terminal may be 1).
    pub fn is_word_form(&self) -> bool {
        let q = &self.quotients;
        q.len() % 2 == 1 && q.iter().skip(1).all(|&a| a >= 1)
    }

    /// Expand a non-negative finite rational by the Euclidean algorithm.
    /// The result is the minimal canonical form.
    pub fn from_rational(x: &ProjectiveRational) -> Result<Self> {
        Self::from_rational_bounded(x, None).map(|(cf, _)| cf)
    }

    /// Like [`Self::from_rational`] but stops after `depth` quotients.
    /// Returns the (possibly non-canonical) prefix and whether it was cut.
    pub fn from_rational_bounded(x: &ProjectiveRational, depth: Option<usize>) -> Result<(Self, bool)> {
        if x.is_infinite() {
            return Err(Error::InfiniteInput);
        }
        if x.is_negative() {
            return Err(Error::NegativeInput);
        }
        if depth == Some(0) {
            return Err(Error::BadDepth);
        }
        let mut p = x.numer().clone();
        let mut q = x.denom().clone();
        let mut quotients = Vec::new();
        let mut truncated = false;
        while !q.is_zero() {
            if let Some(d) = depth {
                if quotients.len() == d {
                    truncated = true;
                    break;
                }
            }
            let (a, r) = p.div_rem(&q);
            let a = a.to_u64().ok_or_else(|| Error::Invalid("partial quotient exceeds u64".to_string()))?;
            quotients.push(a);
            p = q;
            q = r;
        }
        Ok((Self { quotients }, truncated))
    }

    /// Exact nested evaluation; embedded zeros are fine and the result is
    /// projective (sequences like `[1, 0]` evaluate to infinity).
    pub fn value(&self) -> ProjectiveRational {
        let (p, q) = eval_pair(&self.quotients);
        ProjectiveRational::new(p, q).expect("convergent pair is never 0/0")
    }

    /// Full convergent table `p_i/q_i` under the standard recurrence.
    pub fn convergents(&self) -> ConvergentTable {
        let mut rows = Vec::with_capacity(self.quotients.len());
        let (mut p_prev, mut p_prev2) = (BigInt::from(1), BigInt::from(0));
        let (mut q_prev, mut q_prev2) = (BigInt::from(0), BigInt::from(1));
        for (i, &a) in self.quotients.iter().enumerate() {
            let p = BigInt::from(a) * &p_prev + &p_prev2;
            let q = BigInt::from(a) * &q_prev + &q_prev2;
            rows.push(ConvergentRow { index: i, p: p.clone(), q: q.clone() });
            p_prev2 = core::mem::replace(&mut p_prev, p);
            q_prev2 = core::mem::replace(&mut q_prev, q);
        }
        ConvergentTable { rows }
    }

    /// Rewrite to the odd-count word form via `[.., a] = [.., a-1, 1]`.
    pub fn to_word_form(&self) -> Result<Self> {
        if self.is_word_form() {
            return Ok(self.clone());
        }
        if !self.is_minimal() || self.quotients.len() % 2 == 1 {
            return Err(Error::NotCanonical("expected minimal or word form"));
        }
        let mut q = self.quotients.clone();
        let last = q.last_mut().unwrap();
        debug_assert!(*last >= 2);
        *last -= 1;
        q.push(1);
        Ok(Self { quotients: q })
    }

    /// Rewrite to the minimal form via `[.., a-1, 1] = [.., a]`.
    pub fn to_minimal_form(&self) -> Result<Self> {
        if self.is_minimal() {
            return Ok(self.clone());
        }
        if !self.is_word_form() {
            return Err(Error::NotCanonical("expected minimal or word form"));
        }
        let mut q = self.quotients.clone();
        if *q.last().unwrap() == 1 && q.len() >= 2 {
            q.pop();
            *q.last_mut().unwrap() += 1;
        }
        Ok(Self { quotients: q })
    }

    /// Largest quotient of the sequence as stored.
    pub fn max_quotient(&self) -> u64 {
        self.quotients.iter().copied().max().unwrap_or(0)
    }
}

/// Parse an exact decimal (or `p/q`) string and truncate its expansion at
/// `depth` quotients. No floating point anywhere.
pub fn cf_of_decimal(s: &str, depth: usize) -> Result<ContinuedFraction> {
    if depth == 0 {
        return Err(Error::BadDepth);
    }
    let x: ProjectiveRational = s.parse()?;
    ContinuedFraction::from_rational_bounded(&x, Some(depth)).map(|(cf, _)| cf)
}

fn eval_pair(quotients: &[u64]) -> (BigInt, BigInt) {
    let (mut p_prev, mut p_prev2) = (BigInt::from(1), BigInt::from(0));
    let (mut q_prev, mut q_prev2) = (BigInt::from(0), BigInt::from(1));
    for &a in quotients {
        let p = BigInt::from(a) * &p_prev + &p_prev2;
        let q = BigInt::from(a) * &q_prev + &q_prev2;
        p_prev2 = core::mem::replace(&mut p_prev, p);
        q_prev2 = core::mem::replace(&mut q_prev, q);
    }
    (p_prev, q_prev)
}

/// One convergent `p_i/q_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvergentRow {
    pub index: usize,
    pub p: BigInt,
    pub q: BigInt,
}

/// The convergent recurrence table with seeds `p(-1)=1, p(-2)=0, q(-1)=0,
/// q(-2)=1`; satisfies `p_i q_{i-1} - p_{i-1} q_i = (-1)^(i+1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvergentTable {
    rows: Vec<ConvergentRow>,
}

impl ConvergentTable {
    pub fn rows(&self) -> &[ConvergentRow] {
        &self.rows
    }

    pub fn last(&self) -> Option<&ConvergentRow> {
        self.rows.last()
    }

    /// Check the determinant identity on every adjacent pair.
    pub fn determinant_identity_holds(&self) -> bool {
        let mut p_prev = BigInt::from(1);
        let mut q_prev = BigInt::from(0);
        for (i, row) in self.rows.iter().enumerate() {
            let det = &row.p * &q_prev - &p_prev * &row.q;
            let expected = if i % 2 == 0 { -1 } else { 1 };
            if det != BigInt::from(expected) {
                return false;
            }
            p_prev = row.p.clone();
            q_prev = row.q.clone();
        }
        true
    }
}

impl fmt::Display for ContinuedFraction {
    /// Interchange form: `"[a0,a1,...,an]"`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, a) in self.quotients.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for ContinuedFraction {
    type Err = Error;

    /// Accepts `"[0,1,3]"` or bare `"0,1,3"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let body = s.strip_prefix('[').and_then(|t| t.strip_suffix(']')).unwrap_or(s);
        let mut quotients = Vec::new();
        for part in body.split(',') {
            let part = part.trim();
            if part.is_empty() {
                return Err(Error::Parse(s.to_string()));
            }
            quotients.push(part.parse::<u64>().map_err(|_| Error::Parse(s.to_string()))?);
        }
        ContinuedFraction::new(quotients)
    }
}

/// Convenience constructor used throughout the tests.
pub fn cf(quotients: &[u64]) -> ContinuedFraction {
    ContinuedFraction::new(quotients.to_vec()).expect("non-empty")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pr(s: &str) -> ProjectiveRational {
        s.parse().unwrap()
    }

    /// Independent Euclidean-algorithm oracle over machine integers.
    fn euclid_oracle(mut p: u64, mut q: u64) -> Vec<u64> {
        let mut out = Vec::new();
        while q != 0 {
            out.push(p / q);
            let r = p % q;
            p = q;
            q = r;
        }
        out
    }

    #[test]
    fn expansion_of_zero() {
        assert_eq!(ContinuedFraction::from_rational(&pr("0/1")).unwrap(), cf(&[0]));
    }

    #[test]
    fn expansion_matches_euclid_oracle() {
        assert_eq!(euclid_oracle(3, 4), vec![0, 1, 3]);
        assert_eq!(ContinuedFraction::from_rational(&pr("3/4")).unwrap(), cf(&[0, 1, 3]));
        for q in 1..=60u64 {
            for p in 0..=2 * q {
                if num_integer::gcd(p, q) != 1 {
                    continue;
                }
                let got = ContinuedFraction::from_rational(&ProjectiveRational::new(p, q).unwrap()).unwrap();
                assert_eq!(got.quotients(), euclid_oracle(p, q).as_slice(), "{p}/{q}");
                assert!(got.is_minimal(), "{p}/{q} -> {got}");
            }
        }
    }

    #[test]
    fn measured_ratio_prefix() {
        let got = ContinuedFraction::from_rational_bounded(&pr("59997500/100000007"), Some(7)).unwrap().0;
        assert_eq!(got.quotients(), &[0, 1, 1, 2, 1596, 1, 10]);
    }

    #[test]
    fn rejects_negative_and_infinite() {
        assert!(ContinuedFraction::from_rational(&pr("-1/2")).is_err());
        assert!(ContinuedFraction::from_rational(&ProjectiveRational::infinity()).is_err());
    }

    #[test]
    fn evaluation_examples() {
        assert_eq!(cf(&[2]).value(), pr("2/1"));
        assert_eq!(cf(&[0, 1, 2, 1]).value(), pr("3/4"));
        assert_eq!(cf(&[0, 0, 0, 1]).value(), pr("1/1"));
        assert_eq!(cf(&[1, 0]).value(), ProjectiveRational::infinity());
    }

    #[test]
    fn convergent_tables() {
        let t = cf(&[0, 1, 1, 2]).convergents();
        let shown: Vec<(i64, i64)> = t
            .rows()
            .iter()
            .map(|r| (r.p.to_i64().unwrap(), r.q.to_i64().unwrap()))
            .collect();
        assert_eq!(shown, [(0, 1), (1, 1), (1, 2), (3, 5)]);
        assert!(t.determinant_identity_holds());

        let t = cf(&[0, 1, 1, 2, 1596]).convergents();
        let last = t.last().unwrap();
        assert_eq!(last.p, BigInt::from(4789));
        assert_eq!(last.q, BigInt::from(7982));

        let t = cf(&[5]).convergents();
        assert_eq!(t.rows().len(), 1);
        assert_eq!(t.last().unwrap().p, BigInt::from(5));
        assert_eq!(t.last().unwrap().q, BigInt::from(1));
    }

    #[test]
    fn form_rewrites() {
        assert_eq!(cf(&[0, 2]).to_word_form().unwrap(), cf(&[0, 1, 1]));
        assert_eq!(cf(&[0, 1, 3]).to_word_form().unwrap(), cf(&[0, 1, 3]));
        assert_eq!(cf(&[1, 3]).to_word_form().unwrap(), cf(&[1, 2, 1]));
        assert_eq!(cf(&[0, 1, 1]).to_minimal_form().unwrap(), cf(&[0, 2]));
        assert_eq!(cf(&[1, 2, 1]).to_minimal_form().unwrap(), cf(&[1, 3]));
        assert_eq!(cf(&[0, 2]).to_word_form().unwrap().value(), pr("1/2"));
        assert_eq!(cf(&[1, 3]).to_word_form().unwrap().value(), pr("4/3"));
    }

    #[test]
    fn decimal_truncation() {
        assert_eq!(cf_of_decimal("0.5", 10).unwrap(), cf(&[0, 2]));
        assert_eq!(
            cf_of_decimal("0.599975/1.00000007", 7).unwrap(),
            cf(&[0, 1, 1, 2, 1596, 1, 10])
        );
        assert_eq!(cf_of_decimal("1.366", 4).unwrap(), cf(&[1, 2, 1, 2]));
        assert!(cf_of_decimal("0.5", 0).is_err());
        assert!(cf_of_decimal("zebra", 3).is_err());
    }

    #[test]
    fn display_and_parse() {
        assert_eq!(cf(&[0, 1, 3]).to_string(), "[0,1,3]");
        assert_eq!("[0,1,3]".parse::<ContinuedFraction>().unwrap(), cf(&[0, 1, 3]));
        assert_eq!("0,1,1,2".parse::<ContinuedFraction>().unwrap(), cf(&[0, 1, 1, 2]));
        assert!("[]".parse::<ContinuedFraction>().is_err());
    }
}
