//! Slow, independent re-derivations used to cross-check the normal-form
//! algebra and the closed forms.
//!
//! * [`RecursiveNatSum`] evaluates the natural sum from its recursive
//!   definition `0 ⊞ 0 = 0`, `α ⊞ β = sup {S(α ⊞ β'), S(α' ⊞ β) : α' < α,
//!   β' < β}` and never looks at coefficients.
//! * [`brute_force_perm_sums`] tries every ordering of a short list.
//! * [`brute_force_interleavings_naturals`] enumerates every interleaving of
//!   finite chains.
//! * The `extrapolated_*` functions recover infinite sums as the supremum of
//!   their partial sums instead of using the closed forms.
//!
//! # Suprema over predecessors
//!
//! The recursive definition makes `⊞` strictly increasing in each argument
//! (every `α' < α` gives `α' ⊞ β < S(α' ⊞ β) ≤ α ⊞ β`). So for a successor
//! `α = π + 1` the sup over `α' < α` is attained at `π`, and for a limit `α`
//! it is the limit along any cofinal sequence. We use the standard
//! fundamental sequence `α[k]` and read the limit of `α[k] ⊞ β` off a few
//! samples with [`limit_of`].

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::OracleError;
use crate::mixed::ValueSet;
use crate::ordinal::{Ordinal, Term};
use crate::sequence::{OmegaSequence, Tail};

/// Cap on the length of lists whose permutations are tried one by one.
pub const PERMUTATION_LIMIT: usize = 7;
/// Caps for [`brute_force_interleavings_naturals`].
pub const INTERLEAVING_PART_LIMIT: u32 = 6;
pub const INTERLEAVING_TOTAL_LIMIT: u32 = 12;
pub const INTERLEAVING_COUNT_LIMIT: u64 = 1_000_000;

/// Fundamental-sequence indices sampled at each limit stage.
const LIMIT_SAMPLES: std::ops::RangeInclusive<u64> = 1..=4;
/// Partial sums sampled when extrapolating an infinite sum.
const SERIES_SAMPLES: usize = 7;

/// Every ordinal below `ω^levels` with natural exponents and coefficients
/// at most `cap`, in increasing order.
#[derive(Clone, Debug)]
pub struct SmallUniverse {
    bound: Ordinal,
    members: Vec<Ordinal>,
}

impl SmallUniverse {
    pub fn below_omega_power(levels: u32, cap: u32) -> Self {
        let mut members = vec![Ordinal::zero()];
        // coefficient vectors, highest exponent first
        for e in (0..levels).rev() {
            let mut next = Vec::with_capacity(members.len() * (cap as usize + 1));
            for m in &members {
                next.push(m.clone());
                for c in 1..=cap {
                    let mut terms: Vec<(Ordinal, BigUint)> = m
                        .terms()
                        .iter()
                        .map(|t| (t.exponent().clone(), t.coefficient().clone()))
                        .collect();
                    terms.push((Ordinal::natural(e), BigUint::from(c)));
                    next.push(Ordinal::from_terms(terms).expect("decreasing exponents"));
                }
            }
            members = next;
        }
        members.sort();
        SmallUniverse {
            bound: Ordinal::omega_pow(&Ordinal::natural(levels)).expect("shallow"),
            members,
        }
    }

    pub fn bound(&self) -> &Ordinal {
        &self.bound
    }

    pub fn members(&self) -> &[Ordinal] {
        &self.members
    }

    pub fn contains(&self, x: &Ordinal) -> bool {
        self.members.binary_search(x).is_ok()
    }
}

/// One memoized evaluation session of the recursive natural sum.
pub struct RecursiveNatSum<'u> {
    universe: &'u SmallUniverse,
    memo: HashMap<(Ordinal, Ordinal), Ordinal>,
}

impl<'u> RecursiveNatSum<'u> {
    pub fn new(universe: &'u SmallUniverse) -> Self {
        RecursiveNatSum {
            universe,
            memo: HashMap::new(),
        }
    }

    /// Number of distinct argument pairs evaluated so far.
    pub fn evaluated_pairs(&self) -> usize {
        self.memo.len()
    }

    pub fn eval(&mut self, a: &Ordinal, b: &Ordinal) -> Result<Ordinal, OracleError> {
        for x in [a, b] {
            if !self.universe.contains(x) {
                return Err(OracleError::UniverseExhausted(x.clone()));
            }
        }
        self.eval_inner(a, b)
    }

    fn eval_inner(&mut self, a: &Ordinal, b: &Ordinal) -> Result<Ordinal, OracleError> {
        if let Some(v) = self.memo.get(&(a.clone(), b.clone())) {
            return Ok(v.clone());
        }
        let mut best = Ordinal::zero();
        for a_side in [true, false] {
            let (x, other) = if a_side { (a, b) } else { (b, a) };
            let pair = |y: Ordinal| {
                if a_side {
                    (y, other.clone())
                } else {
                    (other.clone(), y)
                }
            };
            let candidate = if x.is_zero() {
                continue;
            } else if let Some(p) = predecessor(x) {
                let (l, r) = pair(p);
                self.eval_inner(&l, &r)?.successor()
            } else {
                let mut samples = Vec::new();
                for k in LIMIT_SAMPLES {
                    let (l, r) = pair(fundamental(x, k));
                    samples.push(self.eval_inner(&l, &r)?);
                }
                limit_of(&samples)?
            };
            best = best.max(candidate);
        }
        if best >= *self.universe.bound() {
            return Err(OracleError::UniverseExhausted(best));
        }
        self.memo.insert((a.clone(), b.clone()), best.clone());
        Ok(best)
    }
}

/// `a ⊞ b` from the recursive definition, in a fresh session.
pub fn nat_sum_recursive(
    a: &Ordinal,
    b: &Ordinal,
    universe: &SmallUniverse,
) -> Result<Ordinal, OracleError> {
    RecursiveNatSum::new(universe).eval(a, b)
}

fn raw_terms(x: &Ordinal) -> Vec<(Ordinal, BigUint)> {
    x.terms()
        .iter()
        .map(|t| (t.exponent().clone(), t.coefficient().clone()))
        .collect()
}

fn build(terms: Vec<(Ordinal, BigUint)>) -> Ordinal {
    Ordinal::from_terms(terms).expect("term manipulation keeps normal form")
}

/// `π` with `x = π + 1`, if `x` is a successor.
fn predecessor(x: &Ordinal) -> Option<Ordinal> {
    if !x.is_successor() {
        return None;
    }
    let mut terms = raw_terms(x);
    let last = terms.last_mut().expect("successor is nonzero");
    last.1 -= 1u32;
    if last.1.is_zero() {
        terms.pop();
    }
    Some(build(terms))
}

/// The `k`-th element of the standard fundamental sequence of a limit:
/// `γ + ω^(ε+1)` maps to `γ + ω^ε·k`, and `γ + ω^λ` with `λ` a limit maps
/// to `γ + ω^(λ[k])`.
fn fundamental(x: &Ordinal, k: u64) -> Ordinal {
    debug_assert!(x.is_limit());
    let mut terms = raw_terms(x);
    let (exponent, coefficient) = terms.pop().expect("limit is nonzero");
    if coefficient > BigUint::one() {
        terms.push((exponent.clone(), coefficient - 1u32));
    }
    match predecessor(&exponent) {
        Some(e) => terms.push((e, BigUint::from(k))),
        None => terms.push((fundamental(&exponent, k), BigUint::one())),
    }
    build(terms)
}

/// Supremum of a strictly increasing sequence given by a few consecutive
/// samples.
///
/// The samples must eventually agree on a leading block of terms and then
/// either grow the coefficient of one fixed exponent `e` (limit: the block
/// followed by `ω^(e+1)`) or grow the exponent itself (limit: the block
/// followed by `ω^(sup of exponents)`, computed recursively). The first
/// sample is allowed to deviate. Anything else is rejected.
pub fn limit_of(samples: &[Ordinal]) -> Result<Ordinal, OracleError> {
    let fail = || OracleError::Extrapolation(samples.to_vec());
    if samples.len() < 3 || samples.windows(2).any(|w| w[0] >= w[1]) {
        return Err(fail());
    }
    let settled = &samples[1..];
    let first = settled[0].terms();
    let shared = (0..first.len())
        .take_while(|&i| settled.iter().all(|s| s.terms().get(i) == Some(&first[i])))
        .count();
    let moving: Vec<&Term> = settled
        .iter()
        .map(|s| s.terms().get(shared))
        .collect::<Option<_>>()
        .ok_or_else(fail)?;

    let exponents: Vec<Ordinal> = moving.iter().map(|t| t.exponent().clone()).collect();
    let top_exponent = if exponents.windows(2).all(|w| w[0] == w[1]) {
        if moving
            .windows(2)
            .any(|w| w[0].coefficient() >= w[1].coefficient())
        {
            return Err(fail());
        }
        exponents[0].successor()
    } else if exponents.windows(2).all(|w| w[0] < w[1]) {
        limit_of(&exponents)?
    } else {
        return Err(fail());
    };
    let block = build(raw_terms(&settled[0])[..shared].to_vec());
    Ok(block.add(&Ordinal::omega_pow_unchecked(top_exponent)))
}

/// Every ordered sum `α_{π(0)} + … + α_{π(n-1)}`, trying all `n!` orders.
pub fn brute_force_perm_sums(list: &[Ordinal]) -> Result<ValueSet, OracleError> {
    if list.len() > PERMUTATION_LIMIT {
        return Err(OracleError::BoundExceeded {
            len: list.len(),
            bound: PERMUTATION_LIMIT,
        });
    }
    // Heap's algorithm
    let mut perm: Vec<&Ordinal> = list.iter().collect();
    let mut counters = vec![0usize; perm.len()];
    let mut found = BTreeSet::new();
    found.insert(Ordinal::ord_sum_many(perm.iter().copied()));
    let mut i = 0;
    while i < perm.len() {
        if counters[i] < i {
            let j = if i % 2 == 0 { 0 } else { counters[i] };
            perm.swap(j, i);
            found.insert(Ordinal::ord_sum_many(perm.iter().copied()));
            counters[i] += 1;
            i = 0;
        } else {
            counters[i] = 0;
            i += 1;
        }
    }
    Ok(found.into_iter().collect())
}

/// Every mixed sum of finite chains, by listing each way to interleave
/// them. The result is always the single arithmetic total.
pub fn brute_force_interleavings_naturals(list: &[u32]) -> Result<ValueSet, OracleError> {
    let total: u32 = list.iter().sum();
    if let Some(&big) = list.iter().find(|&&x| x > INTERLEAVING_PART_LIMIT) {
        return Err(OracleError::Precondition(format!(
            "part {big} exceeds {INTERLEAVING_PART_LIMIT}"
        )));
    }
    if total > INTERLEAVING_TOTAL_LIMIT {
        return Err(OracleError::Precondition(format!(
            "total {total} exceeds {INTERLEAVING_TOTAL_LIMIT}"
        )));
    }
    let count = multinomial(list);
    if count > INTERLEAVING_COUNT_LIMIT {
        return Err(OracleError::BoundExceeded {
            len: count as usize,
            bound: INTERLEAVING_COUNT_LIMIT as usize,
        });
    }

    let mut found = BTreeSet::new();
    let mut remaining = list.to_vec();
    let mut labels = Vec::with_capacity(total as usize);
    interleave(&mut remaining, &mut labels, &mut |labels| {
        // order type of each part is the number of positions it occupies
        let mut order_types = vec![0u32; list.len()];
        for &l in labels {
            order_types[l] += 1;
        }
        assert_eq!(order_types, list, "interleaving lost elements");
        found.insert(Ordinal::natural(labels.len() as u64));
    });
    Ok(found.into_iter().collect())
}

fn interleave(remaining: &mut [u32], labels: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
    if remaining.iter().all(|&r| r == 0) {
        visit(labels);
        return;
    }
    for i in 0..remaining.len() {
        if remaining[i] > 0 {
            remaining[i] -= 1;
            labels.push(i);
            interleave(remaining, labels, visit);
            labels.pop();
            remaining[i] += 1;
        }
    }
}

fn multinomial(parts: &[u32]) -> u64 {
    let mut result: u64 = 1;
    let mut n: u64 = 0;
    for &k in parts {
        for j in 1..=u64::from(k) {
            n += 1;
            result = result * n / j;
        }
    }
    result
}

/// Outcome of [`partial_sum_growth_check`].
#[derive(Clone, Debug, Default)]
pub struct GrowthReport {
    pub checked: usize,
    /// `(n, description)` for every violated check.
    pub violations: Vec<(usize, String)>,
}

impl GrowthReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// For `m ≤ n < limit`: the ordered sums `α_m + … + α_n` stay below `ω^ξ`
/// and never decrease, and `S_n` stays below the infinite natural sum.
pub fn partial_sum_growth_check(
    s: &OmegaSequence,
    limit: usize,
) -> Result<GrowthReport, OracleError> {
    let analysis = s.analyze();
    if analysis.xi.is_zero() {
        return Err(OracleError::Precondition(
            "the critical exponent is 0".into(),
        ));
    }
    let top = Ordinal::omega_pow_unchecked(analysis.xi.clone());
    let mut report = GrowthReport::default();
    let mut tail_partial = Ordinal::zero();
    let mut natural = s.partial_nat_sum(analysis.m);
    for n in analysis.m..limit {
        if natural >= analysis.inat {
            report.violations.push((
                n,
                format!("S_{n} = {natural} is not below {}", analysis.inat),
            ));
        }
        let x = s.element_at(n);
        let next = tail_partial.add(&x);
        if next < tail_partial || (!x.is_zero() && next == tail_partial) {
            report.violations.push((
                n,
                format!("ordered tail sum fell from {tail_partial} to {next}"),
            ));
        }
        if next >= top {
            report
                .violations
                .push((n, format!("ordered tail sum {next} reached {top}")));
        }
        tail_partial = next;
        natural = natural.nat_sum(&x);
        report.checked += 1;
    }
    Ok(report)
}

/// The infinite natural sum as the supremum of `S_n`.
pub fn extrapolated_inat_sum(s: &OmegaSequence) -> Result<Ordinal, OracleError> {
    extrapolate(s, &[], |acc, x| acc.nat_sum(x))
}

/// The infinite ordered sum as the supremum of its partial sums.
pub fn extrapolated_iord_sum(s: &OmegaSequence) -> Result<Ordinal, OracleError> {
    extrapolated_arrangement_sum(s, &[])
}

/// Ordered sum of the ω-type rearrangement that lists the indices in
/// `front` first and then every other index in increasing order.
pub fn extrapolated_arrangement_sum(
    s: &OmegaSequence,
    front: &[usize],
) -> Result<Ordinal, OracleError> {
    let distinct: BTreeSet<usize> = front.iter().copied().collect();
    if distinct.len() != front.len() {
        return Err(OracleError::Precondition(
            "front lists an index twice".into(),
        ));
    }
    extrapolate(s, front, |acc, x| acc.add(x))
}

fn extrapolate(
    s: &OmegaSequence,
    front: &[usize],
    combine: impl Fn(&Ordinal, &Ordinal) -> Ordinal,
) -> Result<Ordinal, OracleError> {
    let used: BTreeSet<usize> = front.iter().copied().collect();
    let past_front = used.last().map_or(0, |i| i + 1);
    let rest_from = past_front.max(s.head().len());
    // positions in original index order, skipping the front
    let rest = (0..rest_from).filter(|i| !used.contains(i));
    if s.has_finite_support() {
        let order: Vec<usize> = front.iter().copied().chain(rest).collect();
        return Ok(order
            .iter()
            .fold(Ordinal::zero(), |acc, &i| combine(&acc, &s.element_at(i))));
    }
    let step = match s.tail() {
        Tail::Periodic(p) => p.len(),
        _ => 1,
    };
    let mut acc = Ordinal::zero();
    for &i in front.iter().chain(rest.collect::<Vec<_>>().iter()) {
        acc = combine(&acc, &s.element_at(i));
    }
    // warm up one period past everything irregular, then sample per period
    let mut next = rest_from;
    let mut samples = Vec::with_capacity(SERIES_SAMPLES);
    for k in 0..=SERIES_SAMPLES {
        for _ in 0..step {
            acc = combine(&acc, &s.element_at(next));
            next += 1;
        }
        if k > 0 {
            samples.push(acc.clone());
        }
    }
    limit_of(&samples)
}
