//! Hilbert function and Hilbert series of `R/I` from the f-vector of the
//! Stanley-Reisner complex, closed forms for degree-2 quasi f-ideals, and a
//! standard-monomial counting oracle. All arithmetic is exact.

use std::fmt;

use serde::Serialize;

use crate::complex::FVector;
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::monomial::{binomial, Monomial};
use crate::quasi::is_admissible_type;

/// Largest `C(n+m-1, m)` that [`count_standard_monomials`] will enumerate.
pub const STANDARD_MONOMIAL_LIMIT: u128 = 10_000_000;

/// `H(m) = Σ_i C(m-1, i) f_i` for `m >= 1`, and `H(0) = 1`.
pub fn hilbert_function_from_fvector(fvec: &FVector, m: i64) -> Result<u128> {
    if m < 0 {
        return Err(Error::NegativeDegree { m });
    }
    if m == 0 {
        return Ok(1);
    }
    Ok(fvec
        .entries()
        .iter()
        .enumerate()
        .map(|(i, &f)| binomial(m as u64 - 1, i as u64) * f as u128)
        .sum())
}

/// `c · z^k / (1-z)^k`, with `c` over the series' scale.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SeriesTerm {
    pub coefficient: i128,
    pub power: u32,
}

/// A Hilbert series held two ways over a positive integer `scale`:
/// the sum of `terms`, and the single fraction
/// `numerator(z) / (scale · (1-z)^exponent)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RationalSeries {
    pub scale: i128,
    pub terms: Vec<SeriesTerm>,
    pub numerator: Vec<i128>,
    pub exponent: u32,
}

impl RationalSeries {
    /// Single-fraction numerator implied by `terms`.
    fn numerator_from_terms(terms: &[SeriesTerm], exponent: u32) -> Vec<i128> {
        let mut acc = vec![0i128; exponent as usize + 1];
        for t in terms {
            // c z^k (1-z)^(e-k)
            let mut poly = vec![0i128; t.power as usize];
            poly.push(t.coefficient);
            let poly = mul(&poly, &one_minus_z_pow(exponent - t.power));
            add_into(&mut acc, &poly);
        }
        trim(acc)
    }

    /// Checks that the term sum and the single fraction agree.
    pub fn forms_agree(&self) -> bool {
        Self::numerator_from_terms(&self.terms, self.exponent) == trim(self.numerator.clone())
    }

    /// Equality as rational functions, by integer cross-multiplication.
    pub fn same_function(&self, other: &RationalSeries) -> bool {
        let lhs = mul(&scale_poly(&self.numerator, other.scale), &one_minus_z_pow(other.exponent));
        let rhs = mul(&scale_poly(&other.numerator, self.scale), &one_minus_z_pow(self.exponent));
        trim(lhs) == trim(rhs)
    }

    /// Power-series coefficients of `z^0 ..= z^order`.
    pub fn expand(&self, order: usize) -> Result<Vec<i128>> {
        let k = self.exponent as u64;
        (0..=order)
            .map(|m| {
                let raw: i128 = self
                    .numerator
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| *j <= m)
                    .map(|(j, &c)| {
                        let mm = (m - j) as u64;
                        // 1/(1-z)^k = Σ C(m+k-1, k-1) z^m
                        let coeff = if k == 0 {
                            (mm == 0) as u128
                        } else {
                            binomial(mm + k - 1, k - 1)
                        };
                        c * coeff as i128
                    })
                    .sum();
                if raw % self.scale != 0 {
                    return Err(Error::TooLarge {
                        reason: format!("coefficient {raw} not divisible by scale {}", self.scale),
                    });
                }
                Ok(raw / self.scale)
            })
            .collect()
    }

    /// Divides numerator and scale by their common content.
    pub fn reduced(&self) -> RationalSeries {
        let g = self
            .numerator
            .iter()
            .chain(self.terms.iter().map(|t| &t.coefficient))
            .fold(self.scale, |g, &c| gcd(g, c.abs()));
        let g = g.max(1);
        RationalSeries {
            scale: self.scale / g,
            terms: self
                .terms
                .iter()
                .map(|t| SeriesTerm { coefficient: t.coefficient / g, power: t.power })
                .collect(),
            numerator: self.numerator.iter().map(|c| c / g).collect(),
            exponent: self.exponent,
        }
    }

    /// `1 + 5z/(1-z) + 8z^2/(1-z)^2 + ...`
    pub fn term_sum_string(&self) -> String {
        let mut s = String::new();
        for (k, t) in self.terms.iter().enumerate() {
            let body = match t.power {
                0 => format!("{}", t.coefficient),
                p => format!("{}{}/{}", t.coefficient, z_power(p), denominator(p)),
            };
            if k == 0 {
                s.push_str(&body);
            } else if let Some(rest) = body.strip_prefix('-') {
                s.push_str(" - ");
                s.push_str(rest);
            } else {
                s.push_str(" + ");
                s.push_str(&body);
            }
        }
        if self.scale != 1 {
            s = format!("({s}) / {}", self.scale);
        }
        s
    }
}

/// `P(z) / (1-z)^e`, or `P(z) / (s(1-z)^e)` with a nontrivial scale.
impl fmt::Display for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut p = String::new();
        for (j, &c) in self.numerator.iter().enumerate() {
            if c == 0 && self.numerator.len() > 1 {
                continue;
            }
            let mag = c.abs();
            let mono = match (j, mag) {
                (0, _) => format!("{mag}"),
                (_, 1) => z_power(j as u32),
                _ => format!("{mag}{}", z_power(j as u32)),
            };
            if p.is_empty() {
                if c < 0 {
                    p.push('-');
                }
            } else {
                p.push_str(if c < 0 { " - " } else { " + " });
            }
            p.push_str(&mono);
        }
        if p.is_empty() {
            p.push('0');
        }
        let den = denominator(self.exponent);
        if self.scale == 1 {
            write!(f, "({p}) / {den}")
        } else if self.exponent == 0 {
            write!(f, "({p}) / {}", self.scale)
        } else {
            write!(f, "({p}) / ({}{den})", self.scale)
        }
    }
}

fn z_power(p: u32) -> String {
    match p {
        0 => String::new(),
        1 => "z".into(),
        p => format!("z^{p}"),
    }
}

fn denominator(p: u32) -> String {
    match p {
        0 => "1".into(),
        1 => "(1-z)".into(),
        p => format!("(1-z)^{p}"),
    }
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn mul(a: &[i128], b: &[i128]) -> Vec<i128> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0i128; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn add_into(acc: &mut Vec<i128>, p: &[i128]) {
    if acc.len() < p.len() {
        acc.resize(p.len(), 0);
    }
    for (a, &c) in acc.iter_mut().zip(p) {
        *a += c;
    }
}

fn scale_poly(p: &[i128], s: i128) -> Vec<i128> {
    p.iter().map(|c| c * s).collect()
}

fn one_minus_z_pow(e: u32) -> Vec<i128> {
    (0..=e as u64)
        .map(|k| {
            let c = binomial(e as u64, k) as i128;
            if k % 2 == 0 {
                c
            } else {
                -c
            }
        })
        .collect()
}

fn trim(mut p: Vec<i128>) -> Vec<i128> {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

/// `F(R/I, z) = Σ_{i=-1}^{d} f_i z^{i+1} / (1-z)^{i+1}` with `f_{-1} = 1`.
pub fn hilbert_series_from_fvector(fvec: &FVector) -> RationalSeries {
    let terms: Vec<SeriesTerm> = std::iter::once(1u64)
        .chain(fvec.entries().iter().copied())
        .enumerate()
        .map(|(k, f)| SeriesTerm { coefficient: f as i128, power: k as u32 })
        .collect();
    let exponent = fvec.len() as u32;
    let numerator = RationalSeries::numerator_from_terms(&terms, exponent);
    RationalSeries { scale: 1, terms, numerator, exponent }
}

/// Hilbert polynomial of `R/I`, valid for degrees `m >= 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum HilbertPolynomial {
    /// `(slope · z + intercept) / denominator`.
    Linear { slope: i128, intercept: i128, denominator: i128 },
    /// `Σ_i C(z-1, i) f_i`.
    FaceSum(FVector),
}

impl HilbertPolynomial {
    pub fn from_fvector(fvec: FVector) -> Self {
        HilbertPolynomial::FaceSum(fvec)
    }

    /// Value of the polynomial itself at `z` (for `Linear`, including
    /// `z = 0`, where it does not equal the Hilbert function).
    pub fn value(&self, z: i64) -> Result<i128> {
        match self {
            HilbertPolynomial::Linear { slope, intercept, denominator } => {
                let raw = slope * z as i128 + intercept;
                if raw % denominator != 0 {
                    return Err(Error::TooLarge { reason: format!("{raw}/{denominator} is not an integer") });
                }
                Ok(raw / denominator)
            }
            HilbertPolynomial::FaceSum(f) => {
                if z < 1 {
                    return Err(Error::NegativeDegree { m: z - 1 });
                }
                Ok(hilbert_function_from_fvector(f, z)? as i128)
            }
        }
    }

    /// Hilbert function `H(m)`: the polynomial for `m >= 1`, pinned to 1 at
    /// `m = 0`.
    pub fn hilbert_function(&self, m: i64) -> Result<i128> {
        match m {
            m if m < 0 => Err(Error::NegativeDegree { m }),
            0 => Ok(1),
            m => self.value(m),
        }
    }

    /// Integer `(slope, intercept)` of a linear polynomial, when exact.
    pub fn integer_coefficients(&self) -> Option<(i128, i128)> {
        match self {
            HilbertPolynomial::Linear { slope, intercept, denominator }
                if slope % denominator == 0 && intercept % denominator == 0 =>
            {
                Some((slope / denominator, intercept / denominator))
            }
            _ => None,
        }
    }
}

impl fmt::Display for HilbertPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self, self.integer_coefficients()) {
            (_, Some((a, c))) => match c {
                0 => write!(f, "{a}z"),
                c if c < 0 => write!(f, "{a}z - {}", -c),
                c => write!(f, "{a}z + {c}"),
            },
            (HilbertPolynomial::Linear { slope, intercept, denominator }, None) => {
                write!(f, "({slope}z + {intercept}) / {denominator}")
            }
            (HilbertPolynomial::FaceSum(fv), None) => {
                let parts: Vec<String> = fv
                    .entries()
                    .iter()
                    .enumerate()
                    .map(|(i, c)| format!("{c}·C(z-1,{i})"))
                    .collect();
                write!(f, "{}", parts.join(" + "))
            }
        }
    }
}

fn check_admissible(n: usize, b: i64) -> Result<()> {
    if n < 4 || !is_admissible_type(n, b)? {
        return Err(Error::InadmissibleType { n, b });
    }
    Ok(())
}

/// `H(z) = ((n² - n + 2b) z - n² + 5n - 2b) / 4` for degree-2 quasi
/// f-ideals of type `(0, b)`.
pub fn hilbert_polynomial_deg2(n: usize, b: i64) -> Result<HilbertPolynomial> {
    check_admissible(n, b)?;
    let (n, b) = (n as i128, b as i128);
    Ok(HilbertPolynomial::Linear {
        slope: n * n - n + 2 * b,
        intercept: -n * n + 5 * n - 2 * b,
        denominator: 4,
    })
}

/// `F(R/I, z) = (4 + 4(n-2) z + (n² - 5n + 4 + 2b) z²) / (4 (1-z)²)`.
pub fn hilbert_series_deg2(n: usize, b: i64) -> Result<RationalSeries> {
    check_admissible(n, b)?;
    let pairs = binomial(n as u64, 2) as i128;
    let (n, b) = (n as i128, b as i128);
    Ok(RationalSeries {
        scale: 4,
        terms: vec![
            SeriesTerm { coefficient: 4, power: 0 },
            SeriesTerm { coefficient: 4 * n, power: 1 },
            // 4 · (C(n,2) + b) / 2
            SeriesTerm { coefficient: 2 * (pairs + b), power: 2 },
        ],
        numerator: vec![4, 4 * (n - 2), n * n - 5 * n + 4 + 2 * b],
        exponent: 2,
    })
}

/// Counts degree-`m` monomials of `k[x_1..x_n]` outside `I`: those whose
/// support contains no generator.
pub fn count_standard_monomials(ideal: &Ideal, m: i64) -> Result<u128> {
    if m < 0 {
        return Err(Error::NegativeDegree { m });
    }
    let n = ideal.n();
    let m = m as usize;
    let total = binomial((n + m).saturating_sub(1) as u64, m as u64);
    if total > STANDARD_MONOMIAL_LIMIT {
        return Err(Error::TooLarge {
            reason: format!("{total} monomials of degree {m} in {n} variables"),
        });
    }
    fn go(ideal: &Ideal, var: usize, left: usize, support: Monomial) -> u128 {
        if left == 0 {
            return 1;
        }
        let mut total = 0;
        for v in var..=ideal.n() {
            let s = support.with_var(v);
            if ideal.contains(s) {
                continue;
            }
            // x_v appears with exponent k
            for k in 1..=left {
                total += go(ideal, v + 1, left - k, s);
            }
        }
        total
    }
    Ok(go(ideal, 1, m, Monomial::ONE))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::stanley_reisner_complex;
    use crate::ideal::minimalize;
    use proptest::prelude::*;

    fn fv(v: &[u64]) -> FVector {
        FVector::new(v.to_vec())
    }

    fn ideal(n: usize, s: &str) -> Ideal {
        Ideal::parse_list(s, n).unwrap()
    }

    #[test]
    fn hilbert_function_examples() {
        assert_eq!(hilbert_function_from_fvector(&fv(&[5, 8, 2]), 2).unwrap(), 13);
        assert_eq!(hilbert_function_from_fvector(&fv(&[4, 4]), 3).unwrap(), 12);
        assert_eq!(hilbert_function_from_fvector(&fv(&[7, 21, 18]), 0).unwrap(), 1);
        assert_eq!(
            hilbert_function_from_fvector(&fv(&[4]), -1),
            Err(Error::NegativeDegree { m: -1 })
        );
    }

    #[test]
    fn standard_monomial_examples() {
        let i = ideal(5, "x1x2,x3x4,x1x3x5,x2x4x5");
        assert_eq!(count_standard_monomials(&i, 2).unwrap(), 13);
        assert_eq!(count_standard_monomials(&ideal(4, "x1x2,x3x4"), 2).unwrap(), 8);
        assert_eq!(count_standard_monomials(&ideal(4, "x1x2,x3x4"), 0).unwrap(), 1);
        assert_eq!(count_standard_monomials(&ideal(4, "x1x2,x3x4"), 3).unwrap(), 12);
        assert!(matches!(count_standard_monomials(&ideal(40, "x1x2"), 9), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn series_from_fvector_examples() {
        let s = hilbert_series_from_fvector(&fv(&[5, 8, 2]));
        assert_eq!(s.term_sum_string(), "1 + 5z/(1-z) + 8z^2/(1-z)^2 + 2z^3/(1-z)^3");
        assert!(s.forms_agree());
        assert_eq!(s.exponent, 3);
        // (1-z)^3 + 5z(1-z)^2 + 8z^2(1-z) + 2z^3 = 1 + 2z + z^2 - 2z^3
        assert_eq!(s.numerator, vec![1, 2, 1, -2]);
        assert_eq!(s.to_string(), "(1 + 2z + z^2 - 2z^3) / (1-z)^3");

        let s = hilbert_series_from_fvector(&fv(&[5, 10, 5]));
        assert_eq!(s.term_sum_string(), "1 + 5z/(1-z) + 10z^2/(1-z)^2 + 5z^3/(1-z)^3");
        assert!(s.forms_agree());

        let s = hilbert_series_from_fvector(&fv(&[6]));
        assert_eq!(s.term_sum_string(), "1 + 6z/(1-z)");
        assert_eq!(s.numerator, vec![1, 5]);
    }

    #[test]
    fn closed_form_polynomial() {
        let h = hilbert_polynomial_deg2(8, -6).unwrap();
        assert_eq!(h.integer_coefficients(), Some((11, -3)));
        assert_eq!(h.to_string(), "11z - 3");
        assert_eq!(h.value(1).unwrap(), 8);
        let h = hilbert_polynomial_deg2(4, 2).unwrap();
        assert_eq!(h.integer_coefficients(), Some((4, 0)));
        assert_eq!(h.hilbert_function(0).unwrap(), 1);
        assert_eq!(h.value(0).unwrap(), 0);
        for n in 4..=10usize {
            let pairs = binomial(n as u64, 2) as i64;
            for b in -pairs..=pairs {
                if is_admissible_type(n, b).unwrap() {
                    let h = hilbert_polynomial_deg2(n, b).unwrap();
                    assert_eq!(h.value(1).unwrap(), n as i128);
                }
            }
        }
        assert_eq!(hilbert_polynomial_deg2(8, 3), Err(Error::InadmissibleType { n: 8, b: 3 }));
    }

    #[test]
    fn closed_form_series() {
        let s = hilbert_series_deg2(4, 2).unwrap();
        assert_eq!(s.numerator, vec![4, 8, 4]);
        assert_eq!(s.to_string(), "(4 + 8z + 4z^2) / (4(1-z)^2)");
        assert_eq!(s.reduced().to_string(), "(1 + 2z + z^2) / (1-z)^2");
        assert_eq!(s.expand(5).unwrap(), vec![1, 4, 8, 12, 16, 20]);
        let cycle = hilbert_series_from_fvector(&fv(&[4, 4]));
        assert!(s.same_function(&cycle));
        assert!(s.forms_agree());

        let s = hilbert_series_deg2(8, -6).unwrap();
        assert_eq!(s.numerator, vec![4, 24, 16]);
        assert!(hilbert_series_deg2(8, 5).is_err());
    }

    #[test]
    fn integrality_of_closed_forms() {
        for n in 4..=12usize {
            let pairs = binomial(n as u64, 2) as i64;
            for b in -pairs..=pairs {
                if !is_admissible_type(n, b).unwrap() {
                    continue;
                }
                let h = hilbert_polynomial_deg2(n, b).unwrap();
                assert!(h.integer_coefficients().is_some(), "n={n} b={b}");
                let s = hilbert_series_deg2(n, b).unwrap();
                assert!(s.forms_agree());
                if n <= 10 {
                    let f1 = ((pairs + b) / 2) as u64;
                    assert!(s.same_function(&hilbert_series_from_fvector(&fv(&[n as u64, f1]))));
                }
            }
        }
    }

    #[test]
    fn series_and_function_agree_on_hand_vectors() {
        for v in [&[3u64, 3, 1][..], &[5, 8, 2], &[7, 21, 18], &[4], &[6, 15, 20, 15, 6, 1]] {
            let f = fv(v);
            let s = hilbert_series_from_fvector(&f);
            let coeffs = s.expand(12).unwrap();
            for (m, c) in coeffs.into_iter().enumerate() {
                assert_eq!(c as u128, hilbert_function_from_fvector(&f, m as i64).unwrap());
            }
        }
    }

    proptest! {
        #[test]
        fn function_matches_oracle(n in 1usize..=6, raw in prop::collection::vec(1u64..64, 1..6), m in 0i64..=5) {
            let mask = (1u64 << n) - 1;
            let gens: Vec<Monomial> = raw.into_iter().map(|g| g & mask).filter(|&g| g != 0).map(Monomial::from_mask).collect();
            prop_assume!(!gens.is_empty());
            let i = minimalize(gens, n).unwrap();
            let f = stanley_reisner_complex(&i).unwrap().f_vector().unwrap();
            prop_assert_eq!(hilbert_function_from_fvector(&f, m).unwrap(), count_standard_monomials(&i, m).unwrap());
        }

        #[test]
        fn expansion_matches_function(v in prop::collection::vec(0u64..40, 1..6), order in 0usize..=12) {
            let f = fv(&v);
            let s = hilbert_series_from_fvector(&f);
            let coeffs = s.expand(order).unwrap();
            for (m, c) in coeffs.into_iter().enumerate() {
                prop_assert_eq!(c as u128, hilbert_function_from_fvector(&f, m as i64).unwrap());
            }
        }
    }
}
