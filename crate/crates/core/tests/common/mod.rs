#![allow(dead_code)]

use hessenberg::{OmegaSequence, Ordinal};
use num_bigint::BigUint;
use proptest::prelude::*;
use rand::Rng;

pub const MAX_TERMS: usize = 4;
pub const MAX_COEFF: u32 = 9;
pub const MAX_NESTING: usize = 3;

pub fn p(s: &str) -> Ordinal {
    hessenberg::parse_ordinal(s).unwrap()
}

fn canonical(mut terms: Vec<(Ordinal, u32)>) -> Ordinal {
    terms.sort_by(|a, b| b.0.cmp(&a.0));
    terms.dedup_by(|a, b| a.0 == b.0);
    Ordinal::from_terms(
        terms
            .into_iter()
            .map(|(e, c)| (e, BigUint::from(c)))
            .collect(),
    )
    .unwrap()
}

/// Random ordinal with at most `terms` terms, exponent nesting at most
/// `nesting` and coefficients in `1..=MAX_COEFF`.
pub fn random_ordinal(rng: &mut impl Rng, nesting: usize, terms: usize) -> Ordinal {
    if nesting == 0 {
        return Ordinal::zero();
    }
    let count = rng.gen_range(0..=terms);
    canonical(
        (0..count)
            .map(|_| {
                (
                    random_ordinal(rng, nesting - 1, terms),
                    rng.gen_range(1..=MAX_COEFF),
                )
            })
            .collect(),
    )
}

pub fn random_small(rng: &mut impl Rng) -> Ordinal {
    random_ordinal(rng, MAX_NESTING, MAX_TERMS)
}

/// Random sequence: head of up to 4 elements drawn from the general
/// generator, periodic tail of 1..=3 smaller elements (not all zero).
pub fn random_periodic_sequence(rng: &mut impl Rng) -> OmegaSequence {
    let head_len = rng.gen_range(0..=4);
    let head = (0..head_len).map(|_| random_small(rng)).collect();
    let period_len = rng.gen_range(1..=3);
    let mut period: Vec<Ordinal> = (0..period_len).map(|_| random_ordinal(rng, 2, 2)).collect();
    if period.iter().all(Ordinal::is_zero) {
        period[0] = Ordinal::natural(rng.gen_range(1..=MAX_COEFF));
    }
    OmegaSequence::periodic(head, period).unwrap()
}

/// Element-wise shrinking: every element replaced by something at most it.
pub fn shrink_elementwise(rng: &mut impl Rng, s: &OmegaSequence) -> OmegaSequence {
    use hessenberg::Tail;
    let mut shrink = |x: &Ordinal| -> Ordinal {
        match rng.gen_range(0..3) {
            0 => x.clone(),
            1 => {
                let xi = Ordinal::natural(rng.gen_range(0..3u32));
                x.truncate(&xi)
            }
            _ => {
                let y = random_small(rng);
                if y <= *x {
                    y
                } else {
                    Ordinal::zero()
                }
            }
        }
    };
    let head = s.head().iter().map(&mut shrink).collect();
    match s.tail() {
        Tail::Periodic(period) => {
            let period: Vec<Ordinal> = period.iter().map(&mut shrink).collect();
            OmegaSequence::periodic(head, period).unwrap()
        }
        other => OmegaSequence::new(head, other.clone()).unwrap(),
    }
}

pub fn arb_ordinal_nested(nesting: usize) -> BoxedStrategy<Ordinal> {
    if nesting == 0 {
        return Just(Ordinal::zero()).boxed();
    }
    prop::collection::vec(
        (arb_ordinal_nested(nesting - 1), 1..=MAX_COEFF),
        0..=MAX_TERMS,
    )
    .prop_map(canonical)
    .boxed()
}

pub fn arb_ordinal() -> BoxedStrategy<Ordinal> {
    arb_ordinal_nested(MAX_NESTING)
}

/// Two ordinals below `ω^eta` together with `eta`.
pub fn arb_below_power() -> impl Strategy<Value = (Ordinal, Ordinal, Ordinal)> {
    (arb_ordinal(), arb_ordinal(), arb_ordinal_nested(2)).prop_map(|(a, b, eta)| {
        let below = |x: Ordinal| {
            let terms: Vec<(Ordinal, BigUint)> = x
                .terms()
                .iter()
                .filter(|t| *t.exponent() < eta)
                .map(|t| (t.exponent().clone(), t.coefficient().clone()))
                .collect();
            Ordinal::from_terms(terms).unwrap()
        };
        (below(a), below(b), eta)
    })
}
