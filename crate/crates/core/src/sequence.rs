//! Finitely described ω-sequences of ordinals and their infinite sums.
//!
//! A sequence is a finite head followed by one of three tail shapes. The
//! shapes are what make the critical exponent `ξ` (the least ordinal such
//! that only finitely many elements are `≥ ω^ξ`) computable by rule:
//!
//! * `Zero`: every tail element is 0, so `ξ = 0`.
//! * `Periodic(p)`: the period repeats forever; if `δ` is the largest
//!   degree of a nonzero period element then elements `≥ ω^δ` recur and
//!   every tail element is `< ω^(δ+1)`, so `ξ = δ + 1`.
//! * `DegreeRamp(b)`: the element at tail offset `k` is `ω^(b+k)`; degrees
//!   are unbounded below `b + ω`, so `ξ = b + ω` (a limit).
//!
//! Once `ξ` is known, the finitely many "heavy" elements (those `≥ ω^ξ`)
//! all sit in the head, and both infinite sums have closed forms:
//! the natural sum is `(⊞ heavies) + ω^ξ` and the ordered sum is
//! `(Σ heavies in index order) + ω^ξ`.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::error::SequenceError;
use crate::ordinal::Ordinal;

/// Upper bound on zeros materialized when truncating a ramp tail.
const MATERIALIZE_LIMIT: usize = 1 << 20;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Tail {
    Zero,
    Periodic(Vec<Ordinal>),
    /// Element at tail offset `k` is `ω^(base + k)`.
    DegreeRamp(Ordinal),
}

/// An ω-indexed sequence of ordinals: `head` followed by the `tail` rule.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OmegaSequence {
    head: Vec<Ordinal>,
    tail: Tail,
}

/// Critical exponent, split index, heavy indices and both infinite sums.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SumAnalysis {
    pub xi: Ordinal,
    /// Least index after which every element is `< ω^xi`.
    pub m: usize,
    /// Indices `i_0 < … < i_h` of the elements `≥ ω^xi`.
    pub heavy: Vec<usize>,
    /// Infinite natural sum.
    pub inat: Ordinal,
    /// Infinite ordered sum.
    pub iord: Ordinal,
}

impl fmt::Display for SumAnalysis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let heavy: Vec<String> = self.heavy.iter().map(|i| i.to_string()).collect();
        write!(f, "xi={} m={} heavy=[{}]", self.xi, self.m, heavy.join(","))
    }
}

impl OmegaSequence {
    /// Builds a sequence, normalizing an all-zero period to `Tail::Zero`.
    pub fn new(head: Vec<Ordinal>, tail: Tail) -> Result<Self, SequenceError> {
        let tail = match tail {
            Tail::Periodic(period) if period.is_empty() => return Err(SequenceError::EmptyPeriod),
            Tail::Periodic(period) if period.iter().all(Ordinal::is_zero) => Tail::Zero,
            Tail::DegreeRamp(base) => {
                // the deepest element shape is ω^(base + k)
                Ordinal::omega_pow(&base.successor())?;
                Tail::DegreeRamp(base)
            }
            other => other,
        };
        Ok(OmegaSequence { head, tail })
    }

    /// A sequence that is zero from `head.len()` on.
    pub fn finite(head: Vec<Ordinal>) -> Self {
        OmegaSequence {
            head,
            tail: Tail::Zero,
        }
    }

    pub fn periodic(head: Vec<Ordinal>, period: Vec<Ordinal>) -> Result<Self, SequenceError> {
        OmegaSequence::new(head, Tail::Periodic(period))
    }

    pub fn ramp(head: Vec<Ordinal>, base: Ordinal) -> Result<Self, SequenceError> {
        OmegaSequence::new(head, Tail::DegreeRamp(base))
    }

    /// The constant sequence `x, x, x, …`.
    pub fn constant(x: Ordinal) -> Self {
        OmegaSequence::periodic(Vec::new(), vec![x]).expect("period is nonempty")
    }

    pub fn head(&self) -> &[Ordinal] {
        &self.head
    }

    pub fn tail(&self) -> &Tail {
        &self.tail
    }

    /// Only finitely many elements are nonzero.
    pub fn has_finite_support(&self) -> bool {
        matches!(self.tail, Tail::Zero)
    }

    pub fn element_at(&self, i: usize) -> Ordinal {
        if let Some(x) = self.head.get(i) {
            return x.clone();
        }
        let k = i - self.head.len();
        match &self.tail {
            Tail::Zero => Ordinal::zero(),
            Tail::Periodic(period) => period[k % period.len()].clone(),
            Tail::DegreeRamp(base) => {
                Ordinal::omega_pow_unchecked(base.add(&Ordinal::natural(k as u64)))
            }
        }
    }

    /// The first `n` elements.
    pub fn prefix(&self, n: usize) -> Vec<Ordinal> {
        (0..n).map(|i| self.element_at(i)).collect()
    }

    /// The sequence `(α_{n+i})_{i<ω}`.
    pub fn shift(&self, n: usize) -> OmegaSequence {
        if n <= self.head.len() {
            return OmegaSequence {
                head: self.head[n..].to_vec(),
                tail: self.tail.clone(),
            };
        }
        let k = n - self.head.len();
        let tail = match &self.tail {
            Tail::Zero => Tail::Zero,
            Tail::Periodic(period) => {
                let mut rotated = period.clone();
                rotated.rotate_left(k % period.len());
                Tail::Periodic(rotated)
            }
            Tail::DegreeRamp(base) => Tail::DegreeRamp(base.add(&Ordinal::natural(k as u64))),
        };
        OmegaSequence {
            head: Vec::new(),
            tail,
        }
    }

    /// Least `ξ` such that only finitely many elements are `≥ ω^ξ`.
    pub fn xi(&self) -> Ordinal {
        match &self.tail {
            Tail::Zero => Ordinal::zero(),
            Tail::Periodic(period) => period
                .iter()
                .filter_map(|x| x.degree().ok())
                .max()
                .expect("normalized period has a nonzero element")
                .successor(),
            Tail::DegreeRamp(base) => base.add(&Ordinal::omega()),
        }
    }

    pub fn analyze(&self) -> SumAnalysis {
        let xi = self.xi();
        let threshold = Ordinal::omega_pow_unchecked(xi.clone());
        // every tail element is below ω^ξ, so heavies live in the head
        let heavy: Vec<usize> = (0..self.head.len())
            .filter(|&i| self.head[i] >= threshold)
            .collect();
        let m = heavy.last().map_or(0, |&i| i + 1);
        let heavies: Vec<&Ordinal> = heavy.iter().map(|&i| &self.head[i]).collect();

        let (inat, iord) = if xi.is_zero() {
            (
                Ordinal::nat_sum_many(heavies.iter().copied()),
                Ordinal::ord_sum_many(heavies.iter().copied()),
            )
        } else {
            let inat = Ordinal::nat_sum_many(heavies.iter().copied()).add(&threshold);
            let iord = Ordinal::ord_sum_many(heavies.iter().copied()).add(&threshold);
            if cfg!(debug_assertions) {
                let truncated: Vec<Ordinal> = heavies.iter().map(|x| x.truncate(&xi)).collect();
                debug_assert_eq!(inat, Ordinal::nat_sum_many(&truncated).nat_sum(&threshold));
                debug_assert_eq!(iord, Ordinal::ord_sum_many(&truncated).add(&threshold));
            }
            (inat, iord)
        };
        SumAnalysis {
            xi,
            m,
            heavy,
            inat,
            iord,
        }
    }

    /// `⊞_{i<ω} α_i`.
    pub fn inat_sum(&self) -> Ordinal {
        self.analyze().inat
    }

    /// `Σ_{i<ω} α_i`.
    pub fn iord_sum(&self) -> Ordinal {
        self.analyze().iord
    }

    /// `S_n = α_0 ⊞ … ⊞ α_{n-1}`.
    pub fn partial_nat_sum(&self, n: usize) -> Ordinal {
        Ordinal::nat_sum_many(&self.prefix(n))
    }

    /// `α_0 + … + α_{n-1}`.
    pub fn partial_ord_sum(&self, n: usize) -> Ordinal {
        Ordinal::ord_sum_many(&self.prefix(n))
    }

    /// `⊞_{n≤i<ω} α_i`.
    pub fn tail_sum_from(&self, n: usize) -> Ordinal {
        self.shift(n).inat_sum()
    }

    /// Element-wise truncation at `eps`, which must lie below `ξ`. Both
    /// infinite sums are preserved.
    pub fn truncate(&self, eps: &Ordinal) -> Result<OmegaSequence, SequenceError> {
        let xi = self.xi();
        if *eps >= xi {
            return Err(SequenceError::TruncationAboveXi {
                eps: eps.clone(),
                xi,
            });
        }
        let mut head: Vec<Ordinal> = self.head.iter().map(|x| x.truncate(eps)).collect();
        let tail = match &self.tail {
            Tail::Zero => Tail::Zero,
            Tail::Periodic(period) => {
                Tail::Periodic(period.iter().map(|x| x.truncate(eps)).collect())
            }
            Tail::DegreeRamp(base) if eps <= base => Tail::DegreeRamp(base.clone()),
            Tail::DegreeRamp(base) => {
                // eps < base + ω, so eps = base + j for a finite j; the
                // first j ramp elements fall below ω^eps
                debug_assert_eq!(
                    eps.truncate(&Ordinal::one()),
                    base.truncate(&Ordinal::one())
                );
                let j: BigUint = eps.finite_part() - base.finite_part();
                let j = j
                    .to_usize()
                    .filter(|&j| j <= MATERIALIZE_LIMIT)
                    .ok_or(SequenceError::MaterializationLimit(MATERIALIZE_LIMIT))?;
                head.extend(std::iter::repeat_n(Ordinal::zero(), j));
                Tail::DegreeRamp(eps.clone())
            }
        };
        OmegaSequence::new(head, tail)
    }

    /// Replaces the first `n` elements by the natural sums of the given
    /// blocks, which must partition `[0, n)` into nonempty sets.
    pub fn regroup_head(&self, blocks: &[Vec<usize>]) -> Result<OmegaSequence, SequenceError> {
        let mut seen = BTreeSet::new();
        for block in blocks {
            if block.is_empty() {
                return Err(SequenceError::MalformedPartition("empty block".into()));
            }
            for &i in block {
                if !seen.insert(i) {
                    return Err(SequenceError::MalformedPartition(format!(
                        "index {i} appears twice"
                    )));
                }
            }
        }
        let n = seen.len();
        if let Some(&max) = seen.last() {
            if max + 1 != n {
                return Err(SequenceError::MalformedPartition(format!(
                    "blocks do not cover [0, {}) exactly",
                    max + 1
                )));
            }
        }
        let mut head: Vec<Ordinal> = blocks
            .iter()
            .map(|block| {
                Ordinal::nat_sum_many(
                    &block
                        .iter()
                        .map(|&i| self.element_at(i))
                        .collect::<Vec<_>>(),
                )
            })
            .collect();
        let rest = self.shift(n);
        head.extend(rest.head);
        Ok(OmegaSequence {
            head,
            tail: rest.tail,
        })
    }
}

/// Descriptor rendering: an optional `head:` line, then the `tail:` line.
impl fmt::Display for OmegaSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn list(items: &[Ordinal]) -> String {
            items
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        }
        if !self.head.is_empty() {
            writeln!(f, "head: {}", list(&self.head))?;
        }
        match &self.tail {
            Tail::Zero => write!(f, "tail: zero"),
            Tail::Periodic(period) => write!(f, "tail: periodic {}", list(period)),
            Tail::DegreeRamp(base) => write!(f, "tail: ramp {base}"),
        }
    }
}
