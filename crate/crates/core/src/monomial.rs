//! Square-free monomials stored as variable bitmasks.
//!
//! Variable `x_i` (1-based) occupies bit `i - 1`, so a monomial in at most 64
//! variables fits one machine word. The same type doubles as a vertex set for
//! faces of simplicial complexes.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Largest supported number of variables.
pub const MAX_VARS: usize = 64;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial(u64);

/// Faces of a complex are vertex sets, stored exactly like monomial supports.
pub type Face = Monomial;

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    pub fn from_mask(mask: u64) -> Self {
        Monomial(mask)
    }

    /// Builds a monomial from 1-based indices, rejecting repeats and indices
    /// outside `1..=n`.
    pub fn from_indices(indices: &[usize], n: usize) -> Result<Self> {
        let mut mask = 0u64;
        for &i in indices {
            if i == 0 || i > n || i > MAX_VARS {
                return Err(Error::OutOfRange { index: i, n });
            }
            let bit = 1u64 << (i - 1);
            if mask & bit != 0 {
                return Err(Error::NotSquareFree { index: i });
            }
            mask |= bit;
        }
        Ok(Monomial(mask))
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn degree(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_one(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, var: usize) -> bool {
        (1..=MAX_VARS).contains(&var) && self.0 & (1u64 << (var - 1)) != 0
    }

    /// `self` divides `other`, i.e. the support of `self` is a subset of the
    /// support of `other`.
    pub fn divides(self, other: Monomial) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: Monomial) -> Monomial {
        Monomial(self.0 | other.0)
    }

    pub fn intersection(self, other: Monomial) -> Monomial {
        Monomial(self.0 & other.0)
    }

    pub fn with_var(self, var: usize) -> Monomial {
        Monomial(self.0 | (1u64 << (var - 1)))
    }

    pub fn without_var(self, var: usize) -> Monomial {
        Monomial(self.0 & !(1u64 << (var - 1)))
    }

    /// Complement within the variable set `{1..n}`.
    pub fn complement(self, n: usize) -> Monomial {
        Monomial(full_mask(n) & !self.0)
    }

    /// Increasing 1-based variable indices.
    pub fn indices(self) -> Indices {
        Indices(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.indices().collect()
    }

    /// Largest variable index, or 0 for the constant monomial.
    pub fn max_index(self) -> usize {
        64 - self.0.leading_zeros() as usize
    }
}

/// Iterator over the set bits of a monomial as 1-based indices.
pub struct Indices(u64);

impl Iterator for Indices {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let tz = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(tz + 1)
    }
}

// Degree first, then lexicographic on the increasing index sequence.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.indices().cmp(other.indices()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for i in self.indices() {
            write!(f, "x{i}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.indices().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

pub fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub(crate) fn check_var_count(n: usize) -> Result<()> {
    if n == 0 || n > MAX_VARS {
        Err(Error::VariableCount { n })
    } else {
        Ok(())
    }
}

/// Parses a square-free monomial in compact (`x1x2x5`), product
/// (`x1*x2*x5`) or index-list (`[1,2,5]`) form.
pub fn parse_monomial(text: &str, n: usize) -> Result<Monomial> {
    let s = text.trim();
    let err = |reason: &str| Error::Parse {
        text: text.to_string(),
        reason: reason.to_string(),
    };
    if s.is_empty() {
        return Err(err("empty input"));
    }

    let indices: Vec<usize> = if let Some(inner) = s.strip_prefix('[') {
        let inner = inner.strip_suffix(']').ok_or_else(|| err("missing `]`"))?;
        if inner.trim().is_empty() {
            Vec::new()
        } else {
            inner
                .split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|_| err("expected an integer index")))
                .collect::<Result<_>>()?
        }
    } else {
        let mut out = Vec::new();
        let bytes = s.as_bytes();
        let mut pos = 0;
        while pos < bytes.len() {
            match bytes[pos] {
                b'*' if pos > 0
                    && bytes[pos - 1].is_ascii_digit()
                    && matches!(bytes.get(pos + 1), Some(b'x' | b'X')) =>
                {
                    pos += 1
                }
                b'x' | b'X' => {
                    let start = pos + 1;
                    let mut end = start;
                    while end < bytes.len() && bytes[end].is_ascii_digit() {
                        end += 1;
                    }
                    if end == start {
                        return Err(err("variable name without index"));
                    }
                    out.push(s[start..end].parse::<usize>().map_err(|_| err("index overflow"))?);
                    pos = end;
                }
                _ => return Err(err("unexpected character")),
            }
        }
        out
    };

    Monomial::from_indices(&indices, n)
}

/// All `k`-subsets of `{1..n}` in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<Monomial> {
    fn go(start: usize, n: usize, left: usize, acc: u64, out: &mut Vec<Monomial>) {
        if left == 0 {
            out.push(Monomial(acc));
            return;
        }
        for i in start..=n + 1 - left {
            go(i + 1, n, left - 1, acc | (1u64 << (i - 1)), out);
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(1, n, k, 0, &mut out);
    }
    out
}

/// Exact binomial coefficient; `C(a, b) = 0` when `b > a`.
pub fn binomial(a: u64, b: u64) -> u128 {
    if b > a {
        return 0;
    }
    let b = b.min(a - b);
    let mut acc: u128 = 1;
    for i in 0..b {
        acc = acc * (a - i) as u128 / (i + 1) as u128;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_all_three_forms() {
        assert_eq!(parse_monomial("x1x2", 5).unwrap().to_vec(), vec![1, 2]);
        assert_eq!(parse_monomial("x3*x4*x5", 5).unwrap().to_vec(), vec![3, 4, 5]);
        assert_eq!(parse_monomial("[1, 2,5]", 5).unwrap().to_vec(), vec![1, 2, 5]);
        assert_eq!(parse_monomial("x10x2", 12).unwrap().to_vec(), vec![2, 10]);
    }

    #[test]
    fn parse_errors() {
        assert_eq!(parse_monomial("x1x1", 5), Err(Error::NotSquareFree { index: 1 }));
        assert_eq!(parse_monomial("x6", 5), Err(Error::OutOfRange { index: 6, n: 5 }));
        assert_eq!(parse_monomial("[0]", 5), Err(Error::OutOfRange { index: 0, n: 5 }));
        for bad in ["", "x", "y1", "x1**x2", "x1*", "[1,a]", "[1,2", "*x1"] {
            assert!(matches!(parse_monomial(bad, 5), Err(Error::Parse { .. })), "{bad}");
        }
    }

    #[test]
    fn order_is_degree_then_lex() {
        let m = |v: &[usize]| Monomial::from_indices(v, 8).unwrap();
        let mut v = vec![m(&[1, 2, 3]), m(&[2, 3]), m(&[1, 4]), m(&[5]), m(&[1, 3])];
        v.sort();
        assert_eq!(v, vec![m(&[5]), m(&[1, 3]), m(&[1, 4]), m(&[2, 3]), m(&[1, 2, 3])]);
    }

    #[test]
    fn display_round_trip() {
        let m = Monomial::from_indices(&[2, 7, 11], 12).unwrap();
        assert_eq!(m.to_string(), "x2x7x11");
        assert_eq!(parse_monomial(&m.to_string(), 12).unwrap(), m);
        assert_eq!(Monomial::ONE.to_string(), "1");
    }

    #[test]
    fn subsets_and_binomials() {
        for n in 0..=12 {
            for k in 0..=n {
                let subs = k_subsets(n, k);
                assert_eq!(subs.len() as u128, binomial(n as u64, k as u64));
                assert!(subs.windows(2).all(|w| w[0] < w[1]));
            }
        }
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(64, 32), 1832624140942590534);
    }

    #[test]
    fn sixty_four_variables() {
        let m = Monomial::from_indices(&[1, 64], 64).unwrap();
        assert_eq!(m.max_index(), 64);
        assert_eq!(m.complement(64).degree(), 62);
    }
}
