//! Mixed sums: realizations of an ordinal as a disjoint union of copies of
//! the summands, each keeping its own order type.
//!
//! A [`Certificate`] describes a realization as an ordered list of convex
//! blocks tagged with the summand they belong to. Infinite realizations
//! end with a tail rule: every summand from some index on contributes one
//! convex block, in sequence order, after all explicit blocks.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{CertificateError, MixedSumError};
use crate::ordinal::Ordinal;
use crate::sequence::{OmegaSequence, Tail};

/// Default cap on the number of summands whose orderings are enumerated.
pub const DEFAULT_PERMUTATION_BOUND: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub summand: usize,
    pub length: Ordinal,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub head_blocks: Vec<Block>,
    /// One convex block per summand from this index on, after the head.
    pub tail_from: Option<usize>,
    pub value: Ordinal,
}

/// Machine-readable listing: `#<summand> : <length>` per block, then
/// `tail from <m>` if present, then `value: <value>`.
impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.head_blocks {
            writeln!(f, "#{} : {}", b.summand, b.length)?;
        }
        if let Some(m) = self.tail_from {
            writeln!(f, "tail from {m}")?;
        }
        write!(f, "value: {}", self.value)
    }
}

/// A strictly increasing list of ordinals.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ValueSet(Vec<Ordinal>);

impl ValueSet {
    pub fn values(&self) -> &[Ordinal] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, x: &Ordinal) -> bool {
        self.0.binary_search(x).is_ok()
    }

    pub fn max(&self) -> Option<&Ordinal> {
        self.0.last()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Ordinal> {
        self.0.iter()
    }
}

impl FromIterator<Ordinal> for ValueSet {
    fn from_iter<I: IntoIterator<Item = Ordinal>>(iter: I) -> Self {
        let set: BTreeSet<Ordinal> = iter.into_iter().collect();
        ValueSet(set.into_iter().collect())
    }
}

impl fmt::Display for ValueSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "{{{}}}", items.join(", "))
    }
}

/// Realizes `α_0 ⊞ … ⊞ α_n` as a mixed sum of the list.
///
/// Every Cantor normal form term of every summand becomes one block; blocks
/// are ordered by nonincreasing exponent, ties by ascending summand index.
/// Adjacent blocks with equal exponents concatenate like a single term, so
/// the ordered sum of all blocks is the coefficient-wise sum.
pub fn carruth_realize(summands: &[Ordinal]) -> Certificate {
    let mut blocks: Vec<(Ordinal, Block)> = summands
        .iter()
        .enumerate()
        .flat_map(|(i, x)| {
            x.terms().iter().map(move |t| {
                let length =
                    Ordinal::omega_pow_unchecked(t.exponent().clone()).mul_natural(t.coefficient());
                (t.exponent().clone(), Block { summand: i, length })
            })
        })
        .collect();
    blocks.sort_by(|a, b| b.0.cmp(&a.0));
    Certificate {
        head_blocks: blocks.into_iter().map(|(_, b)| b).collect(),
        tail_from: None,
        value: Ordinal::nat_sum_many(summands),
    }
}

/// Realizes the infinite natural sum of `s` as a left-finite, almost
/// piecewise convex mixed sum: the summands before the split index `m` are
/// merged by [`carruth_realize`] at the bottom and every later summand is
/// one convex block on top.
pub fn realize_inat_sum(s: &OmegaSequence) -> Certificate {
    let analysis = s.analyze();
    let mut cert = carruth_realize(&s.prefix(analysis.m));
    if !analysis.xi.is_zero() {
        debug_assert_eq!(
            cert.value.add(&s.shift(analysis.m).iord_sum()),
            analysis.inat
        );
        cert.tail_from = Some(analysis.m);
    }
    cert.value = analysis.inat;
    cert
}

/// Checks a certificate against a sequence of summands and returns the
/// realized value.
pub fn validate_certificate(
    c: &Certificate,
    s: &OmegaSequence,
) -> Result<Ordinal, CertificateError> {
    validate(c, s, None)
}

/// Checks a certificate against a finite list of summands.
pub fn validate_certificate_finite(
    c: &Certificate,
    summands: &[Ordinal],
) -> Result<Ordinal, CertificateError> {
    let s = OmegaSequence::finite(summands.to_vec());
    validate(c, &s, Some(summands.len()))
}

fn validate(
    c: &Certificate,
    s: &OmegaSequence,
    finite_len: Option<usize>,
) -> Result<Ordinal, CertificateError> {
    let mut order_types: BTreeMap<usize, Ordinal> = BTreeMap::new();
    for (position, b) in c.head_blocks.iter().enumerate() {
        if b.length.is_zero() {
            return Err(CertificateError::ZeroLengthBlock { position });
        }
        if finite_len.is_some_and(|n| b.summand >= n) {
            return Err(CertificateError::UnknownSummandIndex(b.summand));
        }
        let ot = order_types.entry(b.summand).or_default();
        *ot = ot.add(&b.length);
    }
    if let (Some(f), Some(n)) = (c.tail_from, finite_len) {
        if f > n {
            return Err(CertificateError::UnknownSummandIndex(f));
        }
    }

    for (&i, ot) in order_types.iter_mut() {
        let expected = s.element_at(i);
        if c.tail_from.is_some_and(|f| i >= f) {
            // the tail rule appends a block of the full length
            *ot = ot.add(&expected);
        }
        if *ot != expected {
            return Err(CertificateError::OrderTypeMismatch {
                index: i,
                expected,
                found: ot.clone(),
            });
        }
    }

    // summands that own no block must be empty
    let scan_end = match (c.tail_from, s.tail()) {
        (Some(f), _) => f,
        (None, Tail::Zero) => s.head().len(),
        (None, Tail::Periodic(p)) => covered_end(&order_types, s) + p.len(),
        (None, Tail::DegreeRamp(_)) => covered_end(&order_types, s) + 1,
    };
    if let Some(i) =
        (0..scan_end).find(|i| !order_types.contains_key(i) && !s.element_at(*i).is_zero())
    {
        return Err(CertificateError::OrderTypeMismatch {
            index: i,
            expected: s.element_at(i),
            found: Ordinal::zero(),
        });
    }

    let mut computed = Ordinal::ord_sum_many(c.head_blocks.iter().map(|b| &b.length));
    if let Some(f) = c.tail_from {
        computed = computed.add(&s.shift(f).iord_sum());
    }
    if computed != c.value {
        return Err(CertificateError::ValueMismatch {
            claimed: c.value.clone(),
            computed,
        });
    }
    Ok(computed)
}

fn covered_end(order_types: &BTreeMap<usize, Ordinal>, s: &OmegaSequence) -> usize {
    let after_blocks = order_types.keys().next_back().map_or(0, |i| i + 1);
    after_blocks.max(s.head().len())
}

/// All values of `α_{π(0)} + … + α_{π(n-1)}` over permutations `π`, which
/// by the finite case of the piecewise convex characterization are exactly
/// the piecewise convex mixed sums of the list.
pub fn enumerate_pwc_sums_finite(summands: &[Ordinal]) -> Result<ValueSet, MixedSumError> {
    enumerate_pwc_sums_finite_with_bound(summands, DEFAULT_PERMUTATION_BOUND)
}

pub fn enumerate_pwc_sums_finite_with_bound(
    summands: &[Ordinal],
    bound: usize,
) -> Result<ValueSet, MixedSumError> {
    let n = summands.len();
    if n > bound {
        return Err(MixedSumError::BoundExceeded { len: n, bound });
    }
    // sums[mask]: every ordered sum of the summands in `mask`
    let mut sums: Vec<BTreeSet<Ordinal>> = vec![BTreeSet::new(); 1 << n];
    sums[0].insert(Ordinal::zero());
    for mask in 1usize..(1 << n) {
        let mut acc = BTreeSet::new();
        for (last, x) in summands.iter().enumerate() {
            let bit = 1 << last;
            if mask & bit != 0 {
                acc.extend(sums[mask ^ bit].iter().map(|v| v.add(x)));
            }
        }
        sums[mask] = acc;
    }
    Ok(sums
        .pop()
        .expect("at least the empty mask")
        .into_iter()
        .collect())
}

/// Values of the left-finite piecewise convex mixed sums of `s`.
///
/// With infinitely many nonzero summands every such sum is an ω-type
/// rearrangement; each heavy summand sits at a finite position, each light
/// one is swallowed by the next heavy or by the tail `ω^ξ`, so only the
/// order of the heavies matters.
pub fn enumerate_lf_pwc_sums(s: &OmegaSequence) -> Result<ValueSet, MixedSumError> {
    enumerate_lf_pwc_sums_with_bound(s, DEFAULT_PERMUTATION_BOUND)
}

pub fn enumerate_lf_pwc_sums_with_bound(
    s: &OmegaSequence,
    bound: usize,
) -> Result<ValueSet, MixedSumError> {
    if s.has_finite_support() {
        let support: Vec<Ordinal> = s.head().iter().filter(|x| !x.is_zero()).cloned().collect();
        return enumerate_pwc_sums_finite_with_bound(&support, bound);
    }
    let analysis = s.analyze();
    let heavies: Vec<Ordinal> = analysis.heavy.iter().map(|&i| s.element_at(i)).collect();
    let top = Ordinal::omega_pow_unchecked(analysis.xi);
    Ok(enumerate_pwc_sums_finite_with_bound(&heavies, bound)?
        .iter()
        .map(|v| v.add(&top))
        .collect())
}

/// The largest left-finite mixed sum of `s` with a certificate realizing it.
pub fn max_lf_mixed_sum(s: &OmegaSequence) -> (Ordinal, Certificate) {
    let cert = realize_inat_sum(s);
    (cert.value.clone(), cert)
}

/// Value of any mixed sum of `lights` with a cofinal copy of `ω^xi`, when
/// every light summand is below `ω^xi`.
pub fn absorb_cofinal_power(lights: &[Ordinal], xi: &Ordinal) -> Result<Ordinal, MixedSumError> {
    if xi.is_zero() {
        return Err(MixedSumError::ZeroExponent);
    }
    let top = Ordinal::omega_pow_unchecked(xi.clone());
    if let Some(light) = lights.iter().find(|x| **x >= top) {
        return Err(MixedSumError::NotLight {
            light: light.clone(),
            xi: xi.clone(),
        });
    }
    Ok(top)
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
    fn times(x: &Ordinal, k: u32) -> Ordinal {
        x.mul_natural(&k.into())
    }
    fn block(summand: usize, length: Ordinal) -> Block {
        Block { summand, length }
    }
    fn w2w() -> Ordinal {
        wpow(2).add(&w())
    }

    #[test]
    fn carruth_examples() {
        let wp1 = w().successor();
        let c = carruth_realize(&[wp1.clone(), wp1.clone()]);
        assert_eq!(
            c.head_blocks,
            vec![block(0, w()), block(1, w()), block(0, n(1)), block(1, n(1))]
        );
        assert_eq!(c.value, times(&w(), 2).add(&n(2)));
        assert_eq!(c.tail_from, None);

        let c = carruth_realize(&[n(5)]);
        assert_eq!((c.head_blocks, c.value), (vec![block(0, n(5))], n(5)));
        assert_eq!(carruth_realize(&[n(3), n(4)]).value, n(7));

        let c = carruth_realize(&[]);
        assert!(c.head_blocks.is_empty());
        assert_eq!(c.value, n(0));
    }

    #[test]
    fn realize_examples() {
        let s = OmegaSequence::constant(w());
        let c = realize_inat_sum(&s);
        assert!(c.head_blocks.is_empty());
        assert_eq!((c.tail_from, c.value.clone()), (Some(0), wpow(2)));

        let wp1 = w().successor();
        let s = OmegaSequence::finite(vec![wp1.clone(), wp1.clone()]);
        let c = realize_inat_sum(&s);
        assert_eq!(c, carruth_realize(&[wp1.clone(), wp1]));

        let s = OmegaSequence::periodic(vec![w2w(), w2w()], vec![n(1)]).unwrap();
        let c = realize_inat_sum(&s);
        assert_eq!(c.value, times(&wpow(2), 2).add(&times(&w(), 3)));
        assert_eq!(c.tail_from, Some(2));
    }

    #[test]
    fn validate_examples() {
        let list = vec![w().successor(), n(3), wpow(2)];
        let c = carruth_realize(&list);
        assert_eq!(
            validate_certificate_finite(&c, &list),
            Ok(Ordinal::nat_sum_many(&list))
        );

        let bad = Certificate {
            head_blocks: vec![block(0, n(1)), block(0, w())],
            tail_from: None,
            value: w(),
        };
        assert_eq!(
            validate_certificate_finite(&bad, &[w().successor()]),
            Err(CertificateError::OrderTypeMismatch {
                index: 0,
                expected: w().successor(),
                found: w(),
            })
        );

        let s = OmegaSequence::periodic(vec![w2w(), n(4), w2w()], vec![n(1), n(0)]).unwrap();
        assert_eq!(
            validate_certificate(&realize_inat_sum(&s), &s),
            Ok(s.inat_sum())
        );
    }

    #[test]
    fn validate_error_paths() {
        let list = vec![w(), n(2)];
        let mut c = carruth_realize(&list);
        c.value = w();
        assert!(matches!(
            validate_certificate_finite(&c, &list),
            Err(CertificateError::ValueMismatch { .. })
        ));

        let c = Certificate {
            head_blocks: vec![block(0, n(0))],
            tail_from: None,
            value: n(0),
        };
        assert_eq!(
            validate_certificate_finite(&c, &[n(0)]),
            Err(CertificateError::ZeroLengthBlock { position: 0 })
        );

        let c = Certificate {
            head_blocks: vec![block(2, n(1))],
            tail_from: None,
            value: n(1),
        };
        assert_eq!(
            validate_certificate_finite(&c, &[n(1)]),
            Err(CertificateError::UnknownSummandIndex(2))
        );

        // summand 1 is never placed
        let c = Certificate {
            head_blocks: vec![block(0, w())],
            tail_from: None,
            value: w(),
        };
        assert!(matches!(
            validate_certificate_finite(&c, &list),
            Err(CertificateError::OrderTypeMismatch { index: 1, .. })
        ));

        // an infinite sequence needs a tail rule
        let s = OmegaSequence::constant(n(1));
        let c = Certificate {
            head_blocks: vec![block(0, n(1)), block(1, n(1))],
            tail_from: None,
            value: n(2),
        };
        assert!(matches!(
            validate_certificate(&c, &s),
            Err(CertificateError::OrderTypeMismatch { index: 2, .. })
        ));
    }

    #[test]
    fn tail_rule_certificates() {
        // ω copies of 1 with one of them moved to the bottom: 1 + ω = ω
        let s = OmegaSequence::constant(n(1));
        let c = Certificate {
            head_blocks: vec![block(0, n(1))],
            tail_from: Some(1),
            value: w(),
        };
        assert_eq!(validate_certificate(&c, &s), Ok(w()));

        // ω copies of ω, one moved to the bottom: ω + ω² = ω²
        let s = OmegaSequence::constant(w());
        let c = Certificate {
            head_blocks: vec![block(0, w())],
            tail_from: Some(1),
            value: wpow(2),
        };
        assert_eq!(validate_certificate(&c, &s), Ok(wpow(2)));
    }

    #[test]
    fn pwc_finite_examples() {
        let wp1 = w().successor();
        let v = enumerate_pwc_sums_finite(&[wp1.clone(), wp1]).unwrap();
        assert_eq!(v.values(), &[times(&w(), 2).add(&n(1))]);
        assert!(!v.contains(&times(&w(), 2).add(&n(2))));

        let v = enumerate_pwc_sums_finite(&[n(1), w()]).unwrap();
        assert_eq!(v.values(), &[w(), w().successor()]);

        let v = enumerate_pwc_sums_finite(&[n(2), n(3), n(4)]).unwrap();
        assert_eq!(v.values(), &[n(9)]);

        assert_eq!(enumerate_pwc_sums_finite(&[]).unwrap().values(), &[n(0)]);
        assert_eq!(
            enumerate_pwc_sums_finite(&vec![n(1); 9]),
            Err(MixedSumError::BoundExceeded { len: 9, bound: 8 })
        );
    }

    #[test]
    fn lf_pwc_examples() {
        let v = enumerate_lf_pwc_sums(&OmegaSequence::constant(w())).unwrap();
        assert_eq!(v.values(), &[wpow(2)]);

        let s = OmegaSequence::periodic(vec![w(), wpow(2)], vec![n(1)]).unwrap();
        let v = enumerate_lf_pwc_sums(&s).unwrap();
        assert_eq!(
            v.values(),
            &[wpow(2).add(&w()), wpow(2).add(&times(&w(), 2))]
        );

        let v = enumerate_lf_pwc_sums(&OmegaSequence::constant(n(1))).unwrap();
        assert_eq!(v.values(), &[w()]);

        let s = OmegaSequence::finite(vec![n(1), n(0), w()]);
        let v = enumerate_lf_pwc_sums(&s).unwrap();
        assert_eq!(v.values(), &[w(), w().successor()]);
    }

    #[test]
    fn max_lf_examples() {
        let s = OmegaSequence::periodic(vec![w2w(), w2w()], vec![n(1)]).unwrap();
        let (value, cert) = max_lf_mixed_sum(&s);
        assert_eq!(value, times(&wpow(2), 2).add(&times(&w(), 3)));
        assert_eq!(validate_certificate(&cert, &s), Ok(value.clone()));
        let pwc = enumerate_lf_pwc_sums(&s).unwrap();
        assert_eq!(pwc.values(), &[times(&wpow(2), 2).add(&times(&w(), 2))]);
        assert!(pwc.max().unwrap() < &value);

        assert_eq!(max_lf_mixed_sum(&OmegaSequence::constant(n(1))).0, w());
        let wp1 = w().successor();
        let s = OmegaSequence::finite(vec![wp1.clone(), wp1]);
        assert_eq!(max_lf_mixed_sum(&s).0, times(&w(), 2).add(&n(2)));
    }

    #[test]
    fn absorb_examples() {
        assert_eq!(absorb_cofinal_power(&[n(5), w()], &n(2)), Ok(wpow(2)));
        assert_eq!(absorb_cofinal_power(&[], &n(1)), Ok(w()));
        assert_eq!(
            absorb_cofinal_power(&[w()], &n(1)),
            Err(MixedSumError::NotLight {
                light: w(),
                xi: n(1)
            })
        );
        assert_eq!(
            absorb_cofinal_power(&[], &n(0)),
            Err(MixedSumError::ZeroExponent)
        );
    }

    #[test]
    fn certificate_rendering() {
        let wp1 = w().successor();
        let c = carruth_realize(&[wp1.clone(), wp1]);
        assert_eq!(
            c.to_string(),
            "#0 : w\n#1 : w\n#0 : 1\n#1 : 1\nvalue: w*2 + 2"
        );
        let c = realize_inat_sum(&OmegaSequence::constant(w()));
        assert_eq!(c.to_string(), "tail from 0\nvalue: w^2");
    }
}
