//! The matrix Euclidean algorithm, its cycles, and the radix/pseudodigit
//! encodings built on them.
//!
//! Every `x ∈ Zⁿ` has exactly one of two forms:
//!
//! * radix: `x = Σ_{j≤N} Aʲ dⱼ`, when repeated division reaches `0`;
//! * pseudodigit: `x = A^N s + Σ_{j<N} Aʲ dⱼ`, where `s` is the chosen
//!   representative of the cycle the algorithm falls into.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::digits::DigitSet;
use crate::error::{Error, Result};
use crate::linalg::sqrt::sqrt_upper;
use crate::linalg::IntMatrix;
use crate::norms::BoundsReport;
use crate::points::{ball_points, BoxPoints};
use crate::scalar::{ceil, floor, norm_sq, rat_from_int};
use crate::IntVector;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Representation {
    /// `Σ_{j≤N} Aʲ dⱼ`, little-endian digits, no trailing zero digit
    /// except for the single digit `0`.
    Radix { digits: Vec<IntVector> },
    /// `A^N s + Σ_{j<N} Aʲ dⱼ`.
    Pseudo { digits: Vec<IntVector>, pseudodigit: IntVector },
}

impl Representation {
    pub fn digits(&self) -> &[IntVector] {
        match self {
            Representation::Radix { digits } | Representation::Pseudo { digits, .. } => digits,
        }
    }

    /// The exponent `N` of the form.
    pub fn len(&self) -> usize {
        match self {
            Representation::Radix { digits } => digits.len().saturating_sub(1),
            Representation::Pseudo { digits, .. } => digits.len(),
        }
    }

    pub fn is_radix(&self) -> bool {
        matches!(self, Representation::Radix { .. })
    }

    pub fn kind(&self) -> Kind {
        match self {
            Representation::Radix { .. } => Kind::Radix,
            Representation::Pseudo { pseudodigit, .. } => Kind::Pseudo(pseudodigit.clone()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    Radix,
    Pseudo(IntVector),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrbitOutcome {
    TerminatedAtZero,
    /// `states[entry]` is the first state visited twice; the cycle has
    /// `period` elements.
    EnteredCycle { entry: usize, period: usize },
}

/// `states[j] = A·states[j+1] + emitted_digits[j]` for every `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitTrace {
    pub states: Vec<IntVector>,
    pub emitted_digits: Vec<IntVector>,
    pub outcome: OrbitOutcome,
}

impl OrbitTrace {
    /// The cycle states in orbit order, if the orbit entered one.
    pub fn cycle(&self) -> Option<&[IntVector]> {
        match self.outcome {
            OrbitOutcome::EnteredCycle { entry, period } => Some(&self.states[entry..entry + period]),
            OrbitOutcome::TerminatedAtZero => None,
        }
    }
}

fn is_zero(x: &[BigInt]) -> bool {
    x.iter().all(Zero::is_zero)
}

/// Runs the Euclidean algorithm from `x` until it reaches `0` or revisits
/// a state. The revisited state is appended as the final entry of
/// `states`.
pub fn orbit(ds: &DigitSet, x: &[BigInt], max_steps: u64) -> Result<OrbitTrace> {
    if x.len() != ds.dim() {
        return Err(Error::DimensionMismatch { expected: ds.dim(), found: x.len() });
    }
    let mut states = vec![x.to_vec()];
    let mut emitted_digits = Vec::new();
    let mut seen: HashMap<IntVector, usize> = HashMap::new();
    let mut current = x.to_vec();
    let mut steps = 0u64;
    loop {
        if is_zero(&current) {
            return Ok(OrbitTrace { states, emitted_digits, outcome: OrbitOutcome::TerminatedAtZero });
        }
        if let Some(&entry) = seen.get(&current) {
            let period = states.len() - 1 - entry;
            return Ok(OrbitTrace {
                states,
                emitted_digits,
                outcome: OrbitOutcome::EnteredCycle { entry, period },
            });
        }
        if steps >= max_steps {
            return Err(Error::StepBudget(max_steps));
        }
        seen.insert(current.clone(), states.len() - 1);
        let (y, r) = ds.divide(&current)?;
        emitted_digits.push(r);
        states.push(y.clone());
        current = y;
        steps += 1;
    }
}

/// All nonzero cycles of the Euclidean algorithm, one representative each.
#[derive(Clone, Debug)]
pub struct PseudodigitTable {
    /// Each cycle starts at its representative and follows the division
    /// step; cycles are sorted by representative.
    pub cycles: Vec<Vec<IntVector>>,
    /// The pseudodigit set `S`: the lexicographically smallest element of
    /// each cycle, sorted.
    pub representatives: Vec<IntVector>,
    /// `None` for non-canonical digit sets, where only the box applies.
    pub ball_radius_used: Option<BigRational>,
    /// Certified box containing every cycle element; the search covers the
    /// integer points of this box inside the l² ball.
    pub search_box: Vec<(BigInt, BigInt)>,
    pub points_searched: usize,
    /// Bounds the table was built from; they also size orbit step budgets.
    pub bounds: BoundsReport,
    membership: HashMap<IntVector, usize>,
}

impl PseudodigitTable {
    /// `S`
    pub fn s(&self) -> &[IntVector] {
        &self.representatives
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    /// Index of the cycle containing `x`.
    pub fn cycle_of(&self, x: &[BigInt]) -> Option<usize> {
        self.membership.get(x).copied()
    }

    pub fn representative_of(&self, x: &[BigInt]) -> Option<&IntVector> {
        self.cycle_of(x).map(|i| &self.representatives[i])
    }
}

/// Certified box around `−T`, `T = {Σ_{j≥1} A⁻ʲ dⱼ : dⱼ ∈ D}`.
///
/// Running the division step backwards around a cycle gives
/// `x = −Σ_{j≥1} A⁻ʲ r_{−j}`, so every cycle element lies in `−T`. Each
/// coordinate of `T` is a separable sum over `j`, so its extremes are
/// `Σⱼ maxᵈ (A⁻ʲd)ᵢ` and `Σⱼ minᵈ (A⁻ʲd)ᵢ`; the series is truncated with a
/// geometric tail bound from `θ`.
pub fn cycle_box(ds: &DigitSet, bounds: &BoundsReport) -> Vec<(BigInt, BigInt)> {
    let n = ds.dim();
    let adj = ds.adjugate();
    let det = ds.det();
    let one = BigRational::one();
    let eighth = BigRational::new(1.into(), 8.into());
    let dmax = sqrt_upper(&rat_from_int(
        &ds.digits().iter().map(|d| norm_sq(d)).max().unwrap_or_else(BigInt::zero),
    ));

    // g ≥ Σ_{i≥1} ‖A⁻ⁱ‖_F, from one block and ‖A⁻ᴶ‖ ≤ θ.
    let theta = sqrt_upper(&bounds.theta_sq);
    let mut p = crate::linalg::RatMatrix::identity(n);
    let mut g = BigRational::zero();
    for _ in 0..bounds.block_len {
        p = p.mul(ds.inverse());
        g += sqrt_upper(&p.frobenius_sq());
    }
    let g = g / (&one - &theta);

    // A⁻ʲd = adjʲd / detʲ. The partial sums Σ_{j≤k} tⱼ/detʲ are kept as
    // integers S with value S/detᵏ, updated by S ← S·det + t.
    let mut images: Vec<IntVector> = ds.digits().to_vec();
    let mut adj_pow = IntMatrix::identity(n);
    let mut det_pow = BigInt::one();
    let mut hi = vec![BigInt::zero(); n];
    let mut lo = vec![BigInt::zero(); n];
    loop {
        for _ in 0..bounds.block_len {
            for img in images.iter_mut() {
                *img = adj.mul_vec(img);
            }
            adj_pow = adj_pow.mul(adj);
            det_pow *= det;
            let flip = det_pow.is_negative();
            for i in 0..n {
                let col = || images.iter().map(|v| &v[i]);
                let (big, small) = (col().max().unwrap(), col().min().unwrap());
                let (top, bottom) = if flip { (small, big) } else { (big, small) };
                hi[i] = &hi[i] * det + top;
                lo[i] = &lo[i] * det + bottom;
            }
        }
        // Σ_{j>K} ‖A⁻ʲ‖ ≤ ‖A⁻ᴷ‖_F · g
        let scale = rat_from_int(&det_pow);
        let frob_k = sqrt_upper(&(rat_from_int(&adj_pow.frobenius_sq()) / (&scale * &scale)));
        let tail = &dmax * frob_k * &g;
        if tail <= eighth {
            return (0..n)
                .map(|i| {
                    let h = rat_from_int(&hi[i]) / &scale;
                    let l = rat_from_int(&lo[i]) / &scale;
                    (floor(&(-h - &tail)), ceil(&(-l + &tail)))
                })
                .collect();
        }
    }
}

/// Enumerates every cycle of the Euclidean algorithm.
///
/// Candidates are the integer points with `‖x‖₂ ≤ R_upper` inside
/// [`cycle_box`]; every cycle element is such a point, so running the
/// algorithm from each candidate finds every cycle. The ball bound assumes
/// the canonical digit set, so explicit digit sets search the box alone.
pub fn pseudodigits(ds: &DigitSet, bounds: &BoundsReport) -> Result<PseudodigitTable> {
    #[derive(Clone, Copy)]
    enum Fate {
        Terminates,
        Cycle,
    }

    let search_box = cycle_box(ds, bounds);
    let radius = ds.is_canonical().then(|| bounds.candidate_radius_l2.clone());
    let candidates: Box<dyn Iterator<Item = IntVector>> = match &radius {
        Some(r) => Box::new(ball_points(ds.dim(), &(r * r), Some(&search_box))),
        None => Box::new(BoxPoints::new(search_box.clone())),
    };
    let mut fate: HashMap<IntVector, Fate> = HashMap::new();
    let mut raw_cycles: Vec<Vec<IntVector>> = Vec::new();
    let mut points_searched = 0usize;

    for start in candidates {
        points_searched += 1;
        if fate.contains_key(&start) {
            continue;
        }
        let budget = bounds.default_max_steps(&start);
        let mut path: Vec<IntVector> = Vec::new();
        let mut on_path: HashMap<IntVector, usize> = HashMap::new();
        let mut x = start;
        let outcome = loop {
            if is_zero(&x) {
                break Fate::Terminates;
            }
            if let Some(&f) = fate.get(&x) {
                break f;
            }
            if let Some(&i) = on_path.get(&x) {
                raw_cycles.push(path[i..].to_vec());
                break Fate::Cycle;
            }
            if path.len() as u64 >= budget {
                return Err(Error::StepBudget(budget));
            }
            on_path.insert(x.clone(), path.len());
            path.push(x.clone());
            x = ds.divide(&x)?.0;
        };
        for p in path {
            fate.insert(p, outcome);
        }
    }

    // Rotate each cycle to start at its smallest element, then sort.
    let mut cycles: Vec<Vec<IntVector>> = raw_cycles
        .into_iter()
        .map(|mut c| {
            let start = (0..c.len()).min_by(|&i, &j| c[i].cmp(&c[j])).unwrap();
            c.rotate_left(start);
            c
        })
        .collect();
    cycles.sort();
    let representatives: Vec<IntVector> = cycles.iter().map(|c| c[0].clone()).collect();
    let mut membership = HashMap::new();
    for (i, c) in cycles.iter().enumerate() {
        for x in c {
            membership.insert(x.clone(), i);
        }
    }
    Ok(PseudodigitTable {
        cycles,
        representatives,
        ball_radius_used: radius,
        search_box,
        points_searched,
        bounds: bounds.clone(),
        membership,
    })
}

/// Convenience: digit set, bounds and table for a dilation matrix.
pub fn pseudodigits_for(a: &IntMatrix) -> Result<(DigitSet, BoundsReport, PseudodigitTable)> {
    let ds = crate::digits::digit_set(a)?;
    let br = crate::norms::bounds_report(a)?;
    let table = pseudodigits(&ds, &br)?;
    Ok((ds, br, table))
}

fn budget_for(table: &PseudodigitTable, x: &[BigInt]) -> u64 {
    table.bounds.default_max_steps(x)
}

/// Encodes `x` in its unique radix or pseudodigit form.
pub fn represent(ds: &DigitSet, table: &PseudodigitTable, x: &[BigInt]) -> Result<Representation> {
    let trace = orbit(ds, x, budget_for(table, x))?;
    match trace.outcome {
        OrbitOutcome::TerminatedAtZero => {
            let mut digits = trace.emitted_digits;
            if digits.is_empty() {
                digits.push(vec![BigInt::zero(); ds.dim()]);
            }
            Ok(Representation::Radix { digits })
        }
        OrbitOutcome::EnteredCycle { entry, period } => {
            let cycle = &trace.states[entry..entry + period];
            let s = cycle.iter().min().unwrap().clone();
            if table.cycle_of(&s).is_none() || !table.representatives.contains(&s) {
                return Err(Error::UnknownCycle(s));
            }
            // Continue around the cycle from the entry point to `s`.
            let offset = cycle.iter().position(|c| *c == s).unwrap();
            let n = entry + offset;
            let mut digits = trace.emitted_digits;
            digits.truncate(n);
            Ok(Representation::Pseudo { digits, pseudodigit: s })
        }
    }
}

/// `head·Aᵏ + Σⱼ Aʲ dⱼ` by Horner's rule, where `k = digits.len()`.
pub fn horner(a: &IntMatrix, head: &[BigInt], digits: &[IntVector]) -> IntVector {
    digits.iter().rev().fold(head.to_vec(), |acc, d| {
        a.mul_vec(&acc).into_iter().zip(d).map(|(u, v)| u + v).collect()
    })
}

/// Decodes a representation, rejecting digits outside `D`.
pub fn evaluate(ds: &DigitSet, rep: &Representation) -> Result<IntVector> {
    let n = ds.dim();
    for d in rep.digits() {
        if d.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: d.len() });
        }
        if !ds.contains(d) {
            return Err(Error::DigitNotInSet(d.clone()));
        }
    }
    match rep {
        Representation::Radix { digits } => {
            let (top, rest) = digits
                .split_last()
                .ok_or_else(|| Error::Inconsistent("radix representation without digits".into()))?;
            Ok(horner(ds.matrix(), top, rest))
        }
        Representation::Pseudo { digits, pseudodigit } => {
            if pseudodigit.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: pseudodigit.len() });
            }
            Ok(horner(ds.matrix(), pseudodigit, digits))
        }
    }
}

/// The form `represent` would return, without collecting digits.
pub fn classify(ds: &DigitSet, table: &PseudodigitTable, x: &[BigInt]) -> Result<Kind> {
    if x.len() != ds.dim() {
        return Err(Error::DimensionMismatch { expected: ds.dim(), found: x.len() });
    }
    let budget = budget_for(table, x);
    let mut seen = std::collections::HashSet::new();
    let mut current = x.to_vec();
    for _ in 0..budget {
        if is_zero(&current) {
            return Ok(Kind::Radix);
        }
        if let Some(s) = table.representative_of(&current) {
            return Ok(Kind::Pseudo(s.clone()));
        }
        if !seen.insert(current.clone()) {
            return Err(Error::UnknownCycle(current));
        }
        current = ds.divide(&current)?.0;
    }
    Err(Error::StepBudget(budget))
}

/// `A` yields a radix representation: no nonzero cycle exists.
pub fn yields_radix(table: &PseudodigitTable) -> bool {
    table.is_empty()
}

/// Points reachable by each form with exponent at most `N_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Atlas {
    /// `{Σ_{j≤N_max} Aʲdⱼ}`, sorted.
    pub radix: Vec<IntVector>,
    /// `{A^N s + Σ_{j<N} Aʲdⱼ : N ≤ N_max}`, sorted.
    pub pseudo: Vec<IntVector>,
}

pub fn atlas(ds: &DigitSet, table: &PseudodigitTable, n_max: usize) -> Atlas {
    let a = ds.matrix();
    let extend = |level: &BTreeSet<IntVector>| -> BTreeSet<IntVector> {
        let mut out = BTreeSet::new();
        for y in level {
            let ay = a.mul_vec(y);
            for d in ds.digits() {
                out.insert(ay.iter().zip(d).map(|(u, v)| u + v).collect());
            }
        }
        out
    };

    let mut radix: BTreeSet<IntVector> = ds.digits().iter().cloned().collect();
    for _ in 0..n_max {
        radix = extend(&radix);
    }

    let mut level: BTreeSet<IntVector> = table.representatives.iter().cloned().collect();
    let mut pseudo = level.clone();
    for _ in 0..n_max {
        level = extend(&level);
        pseudo.extend(level.iter().cloned());
    }
    Atlas { radix: radix.into_iter().collect(), pseudo: pseudo.into_iter().collect() }
}
