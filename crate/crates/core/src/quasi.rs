//! Quasi f-ideal types, the two degree-2 characterizations, admissible type
//! bounds, and minimal primes.

use std::fmt;

use serde::Serialize;

use crate::complex::{facet_complex, height, stanley_reisner_complex, write_tuple, FVector};
use crate::error::{Error, Result};
use crate::ideal::{is_equigenerated, Ideal};
use crate::monomial::{binomial, Monomial};
use crate::perfect::{is_upper_perfect, perfect_number_formula, ShadowSet};

/// `f(δ_N(I)) - f(δ_F(I))`, entry by entry.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct QuasiType(Vec<i64>);

impl QuasiType {
    pub fn new(entries: Vec<i64>) -> Self {
        QuasiType(entries)
    }

    /// The degree-2 type `(0, b)`.
    pub fn pair(b: i64) -> Self {
        QuasiType(vec![0, b])
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }
}

impl fmt::Display for QuasiType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, self.0.iter())
    }
}

/// Outcome of comparing the two complexes of an ideal. Both f-vectors are
/// always attached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QuasiOutcome {
    Quasi {
        quasi_type: QuasiType,
        facet: FVector,
        nonface: FVector,
    },
    /// The complexes have different dimensions, so no type is defined.
    NotQuasi { facet: FVector, nonface: FVector },
}

impl QuasiOutcome {
    pub fn quasi_type(&self) -> Option<&QuasiType> {
        match self {
            QuasiOutcome::Quasi { quasi_type, .. } => Some(quasi_type),
            QuasiOutcome::NotQuasi { .. } => None,
        }
    }

    pub fn facet_fvector(&self) -> &FVector {
        match self {
            QuasiOutcome::Quasi { facet, .. } | QuasiOutcome::NotQuasi { facet, .. } => facet,
        }
    }

    pub fn nonface_fvector(&self) -> &FVector {
        match self {
            QuasiOutcome::Quasi { nonface, .. } | QuasiOutcome::NotQuasi { nonface, .. } => nonface,
        }
    }
}

/// Computes the quasi type of a nonzero ideal with full support.
pub fn quasi_type(ideal: &Ideal) -> Result<QuasiOutcome> {
    let facet = facet_complex(ideal)?.f_vector()?;
    let nonface = stanley_reisner_complex(ideal)?.f_vector()?;
    Ok(match nonface.difference(&facet) {
        Some(diff) => QuasiOutcome::Quasi {
            quasi_type: QuasiType(diff),
            facet,
            nonface,
        },
        None => QuasiOutcome::NotQuasi { facet, nonface },
    })
}

/// `f(δ_F(I)) = f(δ_N(I))`.
pub fn is_f_ideal(ideal: &Ideal) -> Result<bool> {
    Ok(quasi_type(ideal)?.quasi_type().is_some_and(QuasiType::is_zero))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Criterion {
    /// Height `n - 2`, parity, and generator count.
    Height,
    /// Parity, upper perfect generating set, and generator count.
    UpperPerfect,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Condition {
    pub name: &'static str,
    pub holds: bool,
}

/// Condition-by-condition evaluation of one degree-2 characterization.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharacterizationReport {
    pub criterion: Criterion,
    pub n: usize,
    /// `C(n,2) - 2|G(I)|`
    pub b: i64,
    pub height: usize,
    pub generator_count: usize,
    pub binomial_parity: u8,
    pub b_parity: u8,
    pub conditions: Vec<Condition>,
    pub verdict: bool,
}

impl CharacterizationReport {
    fn new(criterion: Criterion, ctx: &Degree2, conditions: Vec<Condition>) -> Self {
        let verdict = conditions.iter().all(|c| c.holds);
        CharacterizationReport {
            criterion,
            n: ctx.n,
            b: ctx.b,
            height: ctx.height,
            generator_count: ctx.r,
            binomial_parity: (ctx.pairs % 2) as u8,
            b_parity: ctx.b.rem_euclid(2) as u8,
            conditions,
            verdict,
        }
    }
}

struct Degree2 {
    n: usize,
    r: usize,
    pairs: i64,
    b: i64,
    height: usize,
}

impl Degree2 {
    fn new(ideal: &Ideal) -> Result<Self> {
        if ideal.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        if !is_equigenerated(ideal, 2) {
            return Err(Error::NotEquigenerated { degree: 2 });
        }
        let missing = ideal.uncovered_vars();
        if !missing.is_empty() {
            return Err(Error::UncoveredVertices { vertices: missing });
        }
        let n = ideal.n();
        let r = ideal.generators().len();
        let pairs = binomial(n as u64, 2) as i64;
        Ok(Degree2 {
            n,
            r,
            pairs,
            b: pairs - 2 * r as i64,
            height: height(ideal)?,
        })
    }

    fn parity(&self) -> Condition {
        Condition {
            name: "C(n,2) and b have the same parity",
            holds: (self.pairs - self.b).rem_euclid(2) == 0,
        }
    }

    fn count(&self) -> Condition {
        Condition {
            name: "|G(I)| = (C(n,2) - b) / 2",
            holds: 2 * self.r as i64 == self.pairs - self.b,
        }
    }
}

/// Degree-2 quasi f-ideal test through the height of the ideal.
pub fn characterize_by_height(ideal: &Ideal) -> Result<CharacterizationReport> {
    let ctx = Degree2::new(ideal)?;
    let conditions = vec![
        Condition {
            name: "ht(I) = n - 2",
            holds: ctx.height + 2 == ctx.n,
        },
        ctx.parity(),
        ctx.count(),
    ];
    Ok(CharacterizationReport::new(Criterion::Height, &ctx, conditions))
}

/// Degree-2 quasi f-ideal test through the upper shadow of `G(I)`.
pub fn characterize_by_upper_perfect(ideal: &Ideal) -> Result<CharacterizationReport> {
    let ctx = Degree2::new(ideal)?;
    let upper_perfect = if ctx.n > 2 {
        let t = ShadowSet::new(ctx.n, 2, ideal.generators().iter().copied())?;
        is_upper_perfect(&t)?
    } else {
        // no degree-3 layer to cover
        true
    };
    let conditions = vec![
        Condition {
            name: "|b| < C(n,2)",
            holds: ctx.b.abs() < ctx.pairs,
        },
        ctx.parity(),
        Condition {
            name: "G(I) is upper perfect",
            holds: upper_perfect,
        },
        ctx.count(),
    ];
    Ok(CharacterizationReport::new(Criterion::UpperPerfect, &ctx, conditions))
}

/// `(-C(n,2) + 2, C(n,2) - 2 N(n,2))`.
pub fn type_bounds(n: usize) -> Result<(i64, i64)> {
    let perfect = perfect_number_formula(n)? as i64;
    let pairs = binomial(n as u64, 2) as i64;
    Ok((-pairs + 2, pairs - 2 * perfect))
}

/// `b` lies within [`type_bounds`] and has the parity of `C(n,2)`.
pub fn is_admissible_type(n: usize, b: i64) -> Result<bool> {
    let (lo, hi) = type_bounds(n)?;
    let pairs = binomial(n as u64, 2) as i64;
    Ok(lo <= b && b <= hi && (pairs - b).rem_euclid(2) == 0)
}

/// A monomial prime `(x_i : i ∈ vars)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeIdeal {
    vars: Monomial,
}

impl PrimeIdeal {
    pub fn new(vars: Monomial) -> Self {
        PrimeIdeal { vars }
    }

    pub fn from_indices(indices: &[usize], n: usize) -> Result<Self> {
        Ok(PrimeIdeal { vars: Monomial::from_indices(indices, n)? })
    }

    pub fn vars(&self) -> Monomial {
        self.vars
    }

    pub fn height(&self) -> usize {
        self.vars.degree()
    }
}

impl fmt::Display for PrimeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.vars.indices().map(|i| format!("x{i}")).collect::<Vec<_>>().join(","))
    }
}

/// Minimal primes of `I`, one per facet `F` of `δ_N(I)`: `(x_i : i ∉ F)`.
/// For square-free ideals these are also the associated primes.
pub fn minimal_primes(ideal: &Ideal) -> Result<Vec<PrimeIdeal>> {
    let delta = stanley_reisner_complex(ideal)?;
    let mut primes: Vec<PrimeIdeal> = delta
        .facets()
        .iter()
        .map(|f| PrimeIdeal::new(f.complement(ideal.n())))
        .collect();
    primes.sort();
    Ok(primes)
}

/// Membership of a height `n-2` or `n-1` monomial prime in `Ass(R/I)` for a
/// degree-2 quasi f-ideal, decided from `G(I)` alone:
///
/// * height `n-2`, free variables `x_i, x_j`: iff `x_i x_j ∉ G(I)`;
/// * height `n-1`, free variable `x_i`: iff `x_i x_j ∈ G(I)` for every `j ≠ i`.
pub fn associated_prime_criterion(ideal: &Ideal, prime: &PrimeIdeal) -> Result<bool> {
    match characterize_by_height(ideal) {
        Ok(report) if report.verdict => {}
        _ => return Err(Error::NotQuasiDeg2),
    }
    let n = ideal.n();
    let free = prime.vars.complement(n);
    let gens = ideal.generators();
    let is_gen = |m: Monomial| gens.binary_search(&m).is_ok();
    match prime.height() {
        h if h + 2 == n => Ok(!is_gen(free)),
        h if h + 1 == n => {
            let i = free.indices().next().expect("one free variable");
            Ok((1..=n).filter(|&j| j != i).all(|j| is_gen(free.with_var(j))))
        }
        h => Err(Error::WrongHeight { height: h, n }),
    }
}
