//! Ordinals below ε₀ in Cantor normal form.
//!
//! An [`Ordinal`] is a finite list of [`Term`]s `ω^e·c` with strictly
//! decreasing exponents and positive coefficients. Exponents are ordinals
//! themselves, so the representation is recursive. Every constructor
//! canonicalizes, which makes structural equality the same thing as ordinal
//! equality and lets `Ord` be the usual lexicographic comparison on terms.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::OrdinalError;

/// Default bound on exponent nesting accepted by checked constructors.
pub const DEFAULT_DEPTH_LIMIT: usize = 32;

/// A single `ω^exponent · coefficient` summand of a Cantor normal form.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Term {
    exponent: Ordinal,
    coefficient: BigUint,
}

impl Term {
    pub fn exponent(&self) -> &Ordinal {
        &self.exponent
    }

    pub fn coefficient(&self) -> &BigUint {
        &self.coefficient
    }
}

/// An ordinal strictly below ε₀.
///
/// The empty term list is `0`. Values are immutable; all arithmetic returns
/// fresh values.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Ordinal {
    terms: Vec<Term>,
}

impl Ordinal {
    pub fn zero() -> Self {
        Ordinal { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Ordinal::natural(1u32)
    }

    /// `ω`.
    pub fn omega() -> Self {
        Ordinal::monomial(Ordinal::one(), BigUint::one())
    }

    pub fn natural(n: impl Into<BigUint>) -> Self {
        let n = n.into();
        if n.is_zero() {
            Ordinal::zero()
        } else {
            Ordinal::monomial(Ordinal::zero(), n)
        }
    }

    // Caller guarantees `coefficient > 0`.
    fn monomial(exponent: Ordinal, coefficient: BigUint) -> Self {
        debug_assert!(!coefficient.is_zero());
        Ordinal {
            terms: vec![Term {
                exponent,
                coefficient,
            }],
        }
    }

    /// Builds an ordinal from `(exponent, coefficient)` pairs, which must
    /// already be in Cantor normal form: strictly decreasing exponents and
    /// nonzero coefficients.
    pub fn from_terms(terms: Vec<(Ordinal, BigUint)>) -> Result<Self, OrdinalError> {
        Ordinal::from_terms_with_limit(terms, DEFAULT_DEPTH_LIMIT)
    }

    pub fn from_terms_with_limit(
        terms: Vec<(Ordinal, BigUint)>,
        depth_limit: usize,
    ) -> Result<Self, OrdinalError> {
        for (i, (exponent, coefficient)) in terms.iter().enumerate() {
            if coefficient.is_zero() {
                return Err(OrdinalError::NotCanonical(format!(
                    "term {i} has coefficient 0"
                )));
            }
            if i > 0 && terms[i - 1].0 <= *exponent {
                return Err(OrdinalError::NotCanonical(format!(
                    "exponent of term {i} is not below the previous exponent"
                )));
            }
        }
        let value = Ordinal {
            terms: terms
                .into_iter()
                .map(|(exponent, coefficient)| Term {
                    exponent,
                    coefficient,
                })
                .collect(),
        };
        value.check_depth(depth_limit)?;
        Ok(value)
    }

    /// `ω^xi`, rejected if the result nests deeper than the default limit.
    pub fn omega_pow(xi: &Ordinal) -> Result<Self, OrdinalError> {
        Ordinal::omega_pow_with_limit(xi, DEFAULT_DEPTH_LIMIT)
    }

    pub fn omega_pow_with_limit(xi: &Ordinal, depth_limit: usize) -> Result<Self, OrdinalError> {
        let value = Ordinal::omega_pow_unchecked(xi.clone());
        value.check_depth(depth_limit)?;
        Ok(value)
    }

    pub(crate) fn omega_pow_unchecked(xi: Ordinal) -> Self {
        Ordinal::monomial(xi, BigUint::one())
    }

    fn check_depth(&self, limit: usize) -> Result<(), OrdinalError> {
        let depth = self.depth();
        if depth > limit {
            Err(OrdinalError::DepthLimit { depth, limit })
        } else {
            Ok(())
        }
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.terms.iter().all(|t| t.exponent.is_zero())
    }

    /// The value as a natural number, if it is finite.
    pub fn as_natural(&self) -> Option<BigUint> {
        match self.terms.as_slice() {
            [] => Some(BigUint::zero()),
            [t] if t.exponent.is_zero() => Some(t.coefficient.clone()),
            _ => None,
        }
    }

    /// Exponent nesting depth: 0 for zero, 1 for positive naturals, 2 for
    /// ordinals with natural exponents, and so on.
    pub fn depth(&self) -> usize {
        self.terms
            .iter()
            .map(|t| 1 + t.exponent.depth())
            .max()
            .unwrap_or(0)
    }

    /// Leading exponent. Zero has none.
    pub fn degree(&self) -> Result<&Ordinal, OrdinalError> {
        self.terms
            .first()
            .map(|t| &t.exponent)
            .ok_or(OrdinalError::DegreeOfZero)
    }

    pub fn successor(&self) -> Ordinal {
        self.add(&Ordinal::one())
    }

    pub fn is_successor(&self) -> bool {
        self.terms.last().is_some_and(|t| t.exponent.is_zero())
    }

    pub fn is_limit(&self) -> bool {
        self.terms.last().is_some_and(|t| !t.exponent.is_zero())
    }

    /// Ordinal (ordered) sum `self + other`.
    ///
    /// Terms of `self` whose exponent is below the leading exponent of
    /// `other` are absorbed.
    pub fn add(&self, other: &Ordinal) -> Ordinal {
        let Some(lead) = other.terms.first() else {
            return self.clone();
        };
        let mut terms: Vec<Term> = self
            .terms
            .iter()
            .take_while(|t| t.exponent > lead.exponent)
            .cloned()
            .collect();
        match self.terms.get(terms.len()) {
            Some(t) if t.exponent == lead.exponent => terms.push(Term {
                exponent: lead.exponent.clone(),
                coefficient: &t.coefficient + &lead.coefficient,
            }),
            _ => terms.push(lead.clone()),
        }
        terms.extend(other.terms[1..].iter().cloned());
        Ordinal { terms }
    }

    /// Hessenberg natural sum: coefficient-wise addition of the two normal
    /// forms after aligning exponents.
    pub fn nat_sum(&self, other: &Ordinal) -> Ordinal {
        let mut terms = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut a, mut b) = (self.terms.iter().peekable(), other.terms.iter().peekable());
        loop {
            let next = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => a.next().cloned(),
                (None, Some(_)) => b.next().cloned(),
                (Some(x), Some(y)) => match x.exponent.cmp(&y.exponent) {
                    Ordering::Greater => a.next().cloned(),
                    Ordering::Less => b.next().cloned(),
                    Ordering::Equal => {
                        let merged = Term {
                            exponent: x.exponent.clone(),
                            coefficient: &x.coefficient + &y.coefficient,
                        };
                        a.next();
                        b.next();
                        Some(merged)
                    }
                },
            };
            terms.extend(next);
        }
        Ordinal { terms }
    }

    /// Natural sum of any number of ordinals; the empty sum is `0`.
    pub fn nat_sum_many<'a, I>(items: I) -> Ordinal
    where
        I: IntoIterator<Item = &'a Ordinal>,
    {
        items
            .into_iter()
            .fold(Ordinal::zero(), |acc, x| acc.nat_sum(x))
    }

    /// Ordered sum of a finite list, left to right.
    pub fn ord_sum_many<'a, I>(items: I) -> Ordinal
    where
        I: IntoIterator<Item = &'a Ordinal>,
    {
        items.into_iter().fold(Ordinal::zero(), |acc, x| acc.add(x))
    }

    /// Keeps exactly the terms whose exponent is at least `xi`.
    pub fn truncate(&self, xi: &Ordinal) -> Ordinal {
        Ordinal {
            terms: self
                .terms
                .iter()
                .take_while(|t| t.exponent >= *xi)
                .cloned()
                .collect(),
        }
    }

    /// Right multiplication by a natural number, `self · n`.
    pub fn mul_natural(&self, n: &BigUint) -> Ordinal {
        if n.is_zero() || self.is_zero() {
            return Ordinal::zero();
        }
        let mut terms = self.terms.clone();
        terms[0].coefficient *= n;
        Ordinal { terms }
    }

    /// Finite part: the coefficient of `ω^0` (zero if absent).
    pub(crate) fn finite_part(&self) -> BigUint {
        match self.terms.last() {
            Some(t) if t.exponent.is_zero() => t.coefficient.clone(),
            _ => BigUint::zero(),
        }
    }
}

impl Ord for Ordinal {
    fn cmp(&self, other: &Self) -> Ordering {
        for (x, y) in self.terms.iter().zip(&other.terms) {
            let ord = x
                .exponent
                .cmp(&y.exponent)
                .then_with(|| x.coefficient.cmp(&y.coefficient));
            if ord != Ordering::Equal {
                return ord;
            }
        }
        self.terms.len().cmp(&other.terms.len())
    }
}

impl PartialOrd for Ordinal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<u64> for Ordinal {
    fn from(n: u64) -> Self {
        Ordinal::natural(n)
    }
}

/// Canonical ASCII rendering: `w^(E)*C` terms joined by ` + `, with the
/// contractions `w*C` for exponent 1, `C` for exponent 0, no `*1`, and no
/// parentheses around a natural exponent.
impl fmt::Display for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if t.exponent.is_zero() {
                write!(f, "{}", t.coefficient)?;
                continue;
            }
            match t.exponent.as_natural() {
                Some(n) if n.is_one() => f.write_str("w")?,
                Some(n) => write!(f, "w^{n}")?,
                None => write!(f, "w^({})", t.exponent)?,
            }
            if !t.coefficient.is_one() {
                write!(f, "*{}", t.coefficient)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ordinal({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(v: u64) -> Ordinal {
        Ordinal::natural(v)
    }

    fn w() -> Ordinal {
        Ordinal::omega()
    }

    fn wpow(e: u64) -> Ordinal {
        Ordinal::omega_pow(&n(e)).unwrap()
    }

    // ω²·3 + ω·2 + 5
    fn sample() -> Ordinal {
        wpow(2)
            .mul_natural(&3u32.into())
            .add(&w().mul_natural(&2u32.into()))
            .add(&n(5))
    }

    #[test]
    fn compare_examples() {
        assert_eq!(n(0).cmp(&n(0)), Ordering::Equal);
        assert_eq!(w().cmp(&w().successor()), Ordering::Less);
        let w5p3 = w().mul_natural(&5u32.into()).add(&n(3));
        assert_eq!(wpow(2).cmp(&w5p3), Ordering::Greater);
    }

    #[test]
    fn add_examples() {
        assert_eq!(n(2).add(&w()), w());
        let a = Ordinal::zero().add(&sample());
        assert_eq!(a, sample());
        let w2p2 = w().mul_natural(&2u32.into()).add(&n(2));
        assert_eq!(w2p2.add(&w()), w().mul_natural(&3u32.into()));
    }

    #[test]
    fn nat_sum_examples() {
        assert_eq!(n(0).nat_sum(&n(0)), n(0));
        assert_eq!(w().nat_sum(&n(1)), w().add(&n(1)));
        let wp1 = w().successor();
        assert_eq!(wp1.nat_sum(&wp1), w().mul_natural(&2u32.into()).add(&n(2)));
    }

    #[test]
    fn nat_sum_many_examples() {
        assert_eq!(Ordinal::nat_sum_many([]), n(0));
        let wp1 = w().successor();
        assert_eq!(
            Ordinal::nat_sum_many([&wp1, &wp1]),
            w().mul_natural(&2u32.into()).add(&n(2))
        );
        assert_eq!(Ordinal::nat_sum_many([&n(3), &n(4), &n(5)]), n(12));
    }

    #[test]
    fn truncate_examples() {
        let expect = wpow(2)
            .mul_natural(&3u32.into())
            .add(&w().mul_natural(&2u32.into()));
        assert_eq!(sample().truncate(&n(1)), expect);
        assert_eq!(n(5).truncate(&n(1)), n(0));
        assert_eq!(sample().truncate(&n(0)), sample());
    }

    #[test]
    fn plumbing_examples() {
        assert_eq!(wpow(0), n(1));
        assert!(!w().successor().is_limit());
        assert!(w().is_limit());
        assert!(!n(0).is_limit());
        let x = wpow(2).mul_natural(&3u32.into()).add(&w());
        assert_eq!(x.degree().unwrap(), &n(2));
        assert_eq!(n(0).degree(), Err(OrdinalError::DegreeOfZero));
    }

    #[test]
    fn parenthesization_matters() {
        assert_eq!(n(1).nat_sum(&n(0)).add(&w()), w());
        assert_eq!(n(1).nat_sum(&n(0).add(&w())), w().successor());
        assert_eq!(n(1).add(&n(0)).nat_sum(&w()), w().successor());
        assert_eq!(n(1).add(&n(0).nat_sum(&w())), w());
    }

    #[test]
    fn from_terms_rejects_non_canonical() {
        assert!(matches!(
            Ordinal::from_terms(vec![(n(1), 1u32.into()), (n(1), 2u32.into())]),
            Err(OrdinalError::NotCanonical(_))
        ));
        assert!(matches!(
            Ordinal::from_terms(vec![(n(1), 0u32.into())]),
            Err(OrdinalError::NotCanonical(_))
        ));
        assert!(matches!(
            Ordinal::from_terms(vec![(n(0), 1u32.into()), (n(1), 1u32.into())]),
            Err(OrdinalError::NotCanonical(_))
        ));
        let ok = Ordinal::from_terms(vec![(n(2), 3u32.into()), (n(0), 1u32.into())]).unwrap();
        assert_eq!(ok, wpow(2).mul_natural(&3u32.into()).add(&n(1)));
    }

    #[test]
    fn depth_limit_guards_towers() {
        let mut x = Ordinal::zero();
        for _ in 0..DEFAULT_DEPTH_LIMIT {
            x = Ordinal::omega_pow(&x).unwrap();
        }
        assert_eq!(x.depth(), DEFAULT_DEPTH_LIMIT);
        assert_eq!(
            Ordinal::omega_pow(&x),
            Err(OrdinalError::DepthLimit {
                depth: DEFAULT_DEPTH_LIMIT + 1,
                limit: DEFAULT_DEPTH_LIMIT
            })
        );
        assert!(Ordinal::omega_pow_with_limit(&w(), 2).is_err());
        assert!(Ordinal::omega_pow_with_limit(&w(), 3).is_ok());
    }

    #[test]
    fn rendering() {
        assert_eq!(n(0).to_string(), "0");
        assert_eq!(sample().to_string(), "w^2*3 + w*2 + 5");
        assert_eq!(w().to_string(), "w");
        let tower = Ordinal::omega_pow(&w().successor())
            .unwrap()
            .mul_natural(&2u32.into());
        assert_eq!(tower.to_string(), "w^(w + 1)*2");
        assert_eq!(Ordinal::omega_pow(&w()).unwrap().to_string(), "w^(w)");
    }

    #[test]
    fn big_coefficients() {
        let big: BigUint = "123456789012345678901234567890".parse().unwrap();
        let x = Ordinal::natural(big.clone());
        assert_eq!(x.nat_sum(&x).as_natural(), Some(&big + &big));
        assert_eq!(x.to_string(), "123456789012345678901234567890");
    }
}
