//! Degree-2 quasi f-ideals built from a two-block vertex partition, padded to
//! any admissible type.

use crate::error::{Error, Result};
use crate::ideal::{minimalize, Ideal};
use crate::monomial::{binomial, full_mask, k_subsets, Monomial};
use crate::quasi::{is_admissible_type, quasi_type, QuasiType};

/// A nonempty proper subset `A` of the variables `{1..n}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PartitionSpec {
    n: usize,
    part: Monomial,
}

impl PartitionSpec {
    pub fn new(n: usize, part: Monomial) -> Result<Self> {
        crate::monomial::check_var_count(n)?;
        if part.mask() & !full_mask(n) != 0 {
            return Err(Error::OutOfRange { index: part.max_index(), n });
        }
        if part.is_one() || part.degree() == n {
            return Err(Error::InvalidA {
                reason: format!("A must be a nonempty proper subset of 1..={n}"),
            });
        }
        Ok(PartitionSpec { n, part })
    }

    pub fn from_indices(n: usize, indices: &[usize]) -> Result<Self> {
        Self::new(n, Monomial::from_indices(indices, n)?)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn part(&self) -> Monomial {
        self.part
    }

    /// `(n - (n - 2|A|)²) / 2`, the `b` of the partition ideal.
    pub fn expected_b(&self) -> i64 {
        let n = self.n as i64;
        let a = self.part.degree() as i64;
        (n - (n - 2 * a).pow(2)) / 2
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionResult {
    pub ideal: Ideal,
    pub claimed_type: QuasiType,
    pub partition: PartitionSpec,
    /// The partition pairs `W_A`.
    pub within: Vec<Monomial>,
    /// The padding pairs `D`, disjoint from `W_A`.
    pub padding: Vec<Monomial>,
}

/// `W_A`: all pairs inside `A` together with all pairs inside its complement.
pub fn partition_set(spec: &PartitionSpec) -> Vec<Monomial> {
    let a = spec.part;
    let rest = a.complement(spec.n);
    let mut out: Vec<Monomial> = k_subsets(spec.n, 2)
        .into_iter()
        .filter(|p| p.divides(a) || p.divides(rest))
        .collect();
    out.sort();
    out
}

/// The ideal generated by `W_A`, checked to have the type predicted from `|A|`.
/// `|A| = 1` or `n - 1` leaves a variable outside every generator and is
/// reported as uncovered.
pub fn partition_ideal(spec: &PartitionSpec) -> Result<ConstructionResult> {
    let within = partition_set(spec);
    let ideal = minimalize(within.iter().copied(), spec.n)?;
    let missing = ideal.uncovered_vars();
    if !missing.is_empty() {
        return Err(Error::UncoveredVertices { vertices: missing });
    }
    let claimed = QuasiType::pair(spec.expected_b());
    verify(&ideal, &claimed)?;
    Ok(ConstructionResult {
        ideal,
        claimed_type: claimed,
        partition: *spec,
        within,
        padding: Vec::new(),
    })
}

/// Default partition block: `{1..2t}` for `n = 4t, 4t+1` and `{1..2t+1}`
/// for `n = 4t+2, 4t+3`.
pub fn default_partition(n: usize) -> Result<PartitionSpec> {
    let t = n / 4;
    let size = if n % 4 < 2 { 2 * t } else { 2 * t + 1 };
    PartitionSpec::new(n, Monomial::from_mask(full_mask(size)))
}

/// Builds a degree-2 quasi f-ideal of type `(0, b)` as `W_A ∪ D` with the
/// default `A` and the lexicographically first `D`.
pub fn construct_of_type(n: usize, b: i64) -> Result<ConstructionResult> {
    construct_with(n, b, None, None)
}

/// [`construct_of_type`] with optional explicit `A` and `D`. Explicit choices
/// are validated and the result is verified the same way.
pub fn construct_with(
    n: usize,
    b: i64,
    partition: Option<PartitionSpec>,
    padding: Option<Vec<Monomial>>,
) -> Result<ConstructionResult> {
    if n < 4 || !is_admissible_type(n, b)? {
        return Err(Error::InadmissibleType { n, b });
    }
    let explicit_a = partition.is_some();
    let spec = match partition {
        Some(p) if p.n() != n => {
            return Err(Error::InvalidA {
                reason: format!("partition is over {} variables, expected {n}", p.n()),
            })
        }
        Some(p) => p,
        None => default_partition(n)?,
    };
    let within = partition_set(&spec);
    let target = (binomial(n as u64, 2) as i64 - b) / 2;
    let need = target - within.len() as i64;
    if need < 0 {
        let reason = format!("|W_A| = {} exceeds |G(I)| = {target}", within.len());
        return Err(if explicit_a {
            Error::InvalidA { reason }
        } else {
            Error::InternalVerificationFailure { reason }
        });
    }
    let need = need as usize;

    let padding = match padding {
        Some(mut d) => {
            d.sort();
            d.dedup();
            if let Some(bad) = d.iter().find(|m| m.degree() != 2) {
                return Err(Error::InvalidD { reason: format!("{bad} is not a square-free quadric") });
            }
            if let Some(bad) = d.iter().find(|m| m.mask() & !full_mask(n) != 0) {
                return Err(Error::OutOfRange { index: bad.max_index(), n });
            }
            if let Some(bad) = d.iter().find(|m| within.binary_search(m).is_ok()) {
                return Err(Error::InvalidD { reason: format!("{bad} already lies in W_A") });
            }
            if d.len() != need {
                return Err(Error::InvalidD {
                    reason: format!("|D| = {} but type (0, {b}) needs {need}", d.len()),
                });
            }
            d
        }
        None => k_subsets(n, 2)
            .into_iter()
            .filter(|p| within.binary_search(p).is_err())
            .take(need)
            .collect(),
    };

    let ideal = minimalize(within.iter().chain(&padding).copied(), n)?;
    let claimed = QuasiType::pair(b);
    verify(&ideal, &claimed)?;
    Ok(ConstructionResult {
        ideal,
        claimed_type: claimed,
        partition: spec,
        within,
        padding,
    })
}

fn verify(ideal: &Ideal, claimed: &QuasiType) -> Result<()> {
    let outcome = quasi_type(ideal).map_err(|e| Error::InternalVerificationFailure {
        reason: e.to_string(),
    })?;
    match outcome.quasi_type() {
        Some(t) if t == claimed => Ok(()),
        Some(t) => Err(Error::InternalVerificationFailure {
            reason: format!("expected type {claimed}, computed {t}"),
        }),
        None => Err(Error::InternalVerificationFailure {
            reason: format!(
                "expected type {claimed}, but f-vectors {} and {} differ in length",
                outcome.facet_fvector(),
                outcome.nonface_fvector()
            ),
        }),
    }
}
