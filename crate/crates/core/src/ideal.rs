//! Square-free monomial ideals given by their minimal generators.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{check_var_count, full_mask, k_subsets, parse_monomial, Monomial};

/// A square-free monomial ideal of `k[x_1, ..., x_n]`.
///
/// `gens` is always the minimal generating set `G(I)`: an antichain under
/// divisibility, sorted by degree and then lexicographically. An empty
/// generator list is the zero ideal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Ideal {
    n: usize,
    gens: Vec<Monomial>,
}

impl Ideal {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn zero(n: usize) -> Result<Self> {
        check_var_count(n)?;
        Ok(Ideal { n, gens: Vec::new() })
    }

    /// Minimalizes index lists into an ideal.
    pub fn from_index_lists(n: usize, lists: &[Vec<usize>]) -> Result<Self> {
        let gens = lists
            .iter()
            .map(|l| Monomial::from_indices(l, n))
            .collect::<Result<Vec<_>>>()?;
        minimalize(gens, n)
    }

    /// Parses comma-separated generators in any accepted monomial form
    /// (`"x1x2,x3x4"`).
    pub fn parse_list(text: &str, n: usize) -> Result<Self> {
        check_var_count(n)?;
        let gens = split_generators(text)
            .into_iter()
            .map(|t| parse_monomial(&t, n))
            .collect::<Result<Vec<_>>>()?;
        minimalize(gens, n)
    }

    /// Whether `m` lies in the ideal, i.e. some generator divides it.
    pub fn contains(&self, m: Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn support(&self) -> Monomial {
        support(self)
    }

    pub fn has_full_support(&self) -> bool {
        self.support().mask() == full_mask(self.n)
    }

    /// Variables in `1..=n` that divide no generator.
    pub fn uncovered_vars(&self) -> Vec<usize> {
        self.support().complement(self.n).to_vec()
    }

    pub fn max_degree(&self) -> usize {
        self.gens.iter().map(|g| g.degree()).max().unwrap_or(0)
    }

    pub fn to_file(&self) -> IdealFile {
        IdealFile {
            n: self.n,
            generators: self.gens.iter().map(|g| g.to_vec()).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_file()).expect("ideal serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: IdealFile = serde_json::from_str(text).map_err(|e| Error::Format {
            reason: e.to_string(),
        })?;
        file.into_ideal()
    }

    /// Reads the text format: one monomial per line in compact form, blank
    /// lines and `#` comments ignored. Without an explicit `n` the largest
    /// index present is used.
    pub fn from_text(text: &str, n: Option<usize>) -> Result<Self> {
        let lines: Vec<&str> = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty())
            .collect();
        let n = match n {
            Some(n) => n,
            None => {
                let gens = lines
                    .iter()
                    .map(|l| parse_monomial(l, crate::monomial::MAX_VARS))
                    .collect::<Result<Vec<_>>>()?;
                gens.iter().map(|g| g.max_index()).max().unwrap_or(0)
            }
        };
        check_var_count(n)?;
        let gens = lines
            .iter()
            .map(|l| parse_monomial(l, n))
            .collect::<Result<Vec<_>>>()?;
        minimalize(gens, n)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} (n={})", self.n)
    }
}

/// On-disk JSON form: `{"n": 5, "generators": [[1,2,4], ...]}`.
///
/// Unknown fields are ignored, so richer documents that embed an ideal at the
/// top level (such as classification output) parse back to the same ideal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealFile {
    pub n: usize,
    pub generators: Vec<Vec<usize>>,
}

impl IdealFile {
    pub fn into_ideal(self) -> Result<Ideal> {
        check_var_count(self.n)?;
        Ideal::from_index_lists(self.n, &self.generators)
    }
}

fn split_generators(text: &str) -> Vec<String> {
    // Commas inside `[..]` belong to the index-list form.
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut cur = String::new();
    for c in text.chars() {
        match c {
            '[' => {
                depth += 1;
                cur.push(c);
            }
            ']' => {
                depth = depth.saturating_sub(1);
                cur.push(c);
            }
            ',' | ';' | '\n' if depth == 0 => {
                if !cur.trim().is_empty() {
                    out.push(cur.trim().to_string());
                }
                cur.clear();
            }
            _ => cur.push(c),
        }
    }
    if !cur.trim().is_empty() {
        out.push(cur.trim().to_string());
    }
    out
}

/// Reduces a generating set to `G(I)` by dropping every monomial divisible by
/// another member. Duplicates collapse; the constant monomial is rejected
/// since it would generate the unit ideal.
pub fn minimalize<I>(gens: I, n: usize) -> Result<Ideal>
where
    I: IntoIterator<Item = Monomial>,
{
    check_var_count(n)?;
    let limit = full_mask(n);
    let mut gens: Vec<Monomial> = gens.into_iter().collect();
    for g in &gens {
        if g.is_one() {
            return Err(Error::Format {
                reason: "constant generator (unit ideal) is not square-free of positive degree".into(),
            });
        }
        if g.mask() & !limit != 0 {
            return Err(Error::OutOfRange { index: g.max_index(), n });
        }
    }
    gens.sort();
    gens.dedup();
    // Sorted by degree, so a divisor always precedes its multiples.
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| k.divides(g)) {
            kept.push(g);
        }
    }
    Ok(Ideal { n, gens: kept })
}

/// Union of the generator supports.
pub fn support(ideal: &Ideal) -> Monomial {
    ideal
        .gens
        .iter()
        .fold(Monomial::ONE, |acc, g| acc.union(*g))
}

/// Every generator has degree `d` (vacuously true for the zero ideal).
pub fn is_equigenerated(ideal: &Ideal, d: usize) -> bool {
    ideal.gens.iter().all(|g| g.degree() == d)
}

/// `Sm(R)_d`: all square-free monomials of degree `d`, in lexicographic order.
pub fn sm_universe(n: usize, d: usize) -> Result<Vec<Monomial>> {
    check_var_count(n)?;
    if d > n {
        return Err(Error::DegreeOutOfRange { d, n });
    }
    Ok(k_subsets(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::binomial;
    use proptest::prelude::*;

    fn ideal(n: usize, s: &str) -> Ideal {
        Ideal::parse_list(s, n).unwrap()
    }

    fn sets(i: &Ideal) -> Vec<Vec<usize>> {
        i.generators().iter().map(|g| g.to_vec()).collect()
    }

    // Pairwise divisibility scan, independent of the sorted sweep.
    fn minimal_oracle(gens: &[Monomial]) -> Vec<Monomial> {
        let mut out: Vec<Monomial> = gens
            .iter()
            .copied()
            .filter(|g| !gens.iter().any(|h| h != g && h.divides(*g)))
            .collect();
        out.sort();
        out.dedup();
        out
    }

    #[test]
    fn minimalize_examples() {
        let m = |v: &[usize], n| Monomial::from_indices(v, n).unwrap();
        let i = minimalize([m(&[1, 2], 3), m(&[1, 2, 3], 3)], 3).unwrap();
        assert_eq!(sets(&i), vec![vec![1, 2]]);
        let i = minimalize([m(&[1, 2], 4), m(&[3, 4], 4)], 4).unwrap();
        assert_eq!(sets(&i), vec![vec![1, 2], vec![3, 4]]);
        let input = [m(&[1], 3), m(&[1, 2], 3), m(&[1, 3], 3), m(&[2, 3], 3)];
        let i = minimalize(input, 3).unwrap();
        assert_eq!(i.generators(), minimal_oracle(&input).as_slice());
        assert_eq!(sets(&i), vec![vec![1], vec![2, 3]]);
        assert!(minimalize(Vec::new(), 3).unwrap().is_zero());
    }

    #[test]
    fn minimalize_rejects_bad_input() {
        assert!(matches!(minimalize([Monomial::ONE], 3), Err(Error::Format { .. })));
        let m = Monomial::from_indices(&[4], 4).unwrap();
        assert_eq!(minimalize([m], 3), Err(Error::OutOfRange { index: 4, n: 3 }));
        assert_eq!(minimalize([m], 0), Err(Error::VariableCount { n: 0 }));
    }

    #[test]
    fn support_examples() {
        assert_eq!(ideal(4, "x1x2,x3x4").support().to_vec(), vec![1, 2, 3, 4]);
        let i = ideal(3, "x1x2");
        assert_eq!(i.support().to_vec(), vec![1, 2]);
        assert!(!i.has_full_support());
        assert_eq!(i.uncovered_vars(), vec![3]);
        let j = ideal(5, "x1x2x4,x1x2x5,x1x4x5,x2x3x5,x3x4x5");
        assert_eq!(support(&j).to_vec(), vec![1, 2, 3, 4, 5]);
    }

    #[test]
    fn equigenerated_examples() {
        assert!(is_equigenerated(&ideal(4, "x1x2,x3x4"), 2));
        assert!(!is_equigenerated(&ideal(5, "x1x2,x3x4,x1x3x5,x2x4x5"), 2));
        let zero = Ideal::zero(4).unwrap();
        assert!(is_equigenerated(&zero, 2));
        assert!(is_equigenerated(&zero, 7));
    }

    #[test]
    fn sm_universe_sizes() {
        assert_eq!(sm_universe(4, 2).unwrap().len(), 6);
        assert_eq!(sm_universe(5, 3).unwrap().len(), 10);
        assert_eq!(sm_universe(3, 0).unwrap(), vec![Monomial::ONE]);
        assert_eq!(sm_universe(3, 4), Err(Error::DegreeOutOfRange { d: 4, n: 3 }));
        for n in 1..=12 {
            for d in 0..=n {
                assert_eq!(sm_universe(n, d).unwrap().len() as u128, binomial(n as u64, d as u64));
            }
        }
    }

    #[test]
    fn json_and_text_formats() {
        let j = Ideal::from_json(r#"{"n": 5, "generators": [[1,2,4],[1,2,5],[1,4,5],[2,3,5],[3,4,5]]}"#)
            .unwrap();
        assert_eq!(j, ideal(5, "x1x2x4,x1x2x5,x1x4x5,x2x3x5,x3x4x5"));
        assert_eq!(Ideal::from_json(&j.to_json()).unwrap(), j);
        let t = Ideal::from_text("x1x2x4\nx1x2x5 # comment\n\nx1x4x5\nx2x3x5\nx3x4x5\n", None).unwrap();
        assert_eq!(t, j);
        let wider = Ideal::from_text("x1x2\n", Some(4)).unwrap();
        assert_eq!(wider.n(), 4);
        assert!(matches!(Ideal::from_json(r#"{"n": 5}"#), Err(Error::Format { .. })));
        assert!(matches!(
            Ideal::from_json(r#"{"n": 2, "generators": [[1,3]]}"#),
            Err(Error::OutOfRange { index: 3, n: 2 })
        ));
    }

    #[test]
    fn mixed_list_syntax() {
        let i = ideal(5, "[1,2], x3*x4 ; x1x3x5");
        assert_eq!(sets(&i), vec![vec![1, 2], vec![3, 4], vec![1, 3, 5]]);
    }

    proptest! {
        #[test]
        fn minimalize_is_idempotent_antichain(masks in prop::collection::vec(1u64..256, 0..12)) {
            let gens: Vec<Monomial> = masks.into_iter().map(Monomial::from_mask).collect();
            let once = minimalize(gens.clone(), 8).unwrap();
            let twice = minimalize(once.generators().to_vec(), 8).unwrap();
            prop_assert_eq!(&once, &twice);
            let oracle = minimal_oracle(&gens);
            prop_assert_eq!(once.generators(), oracle.as_slice());
            for a in once.generators() {
                for b in once.generators() {
                    prop_assert!(a == b || !a.divides(*b));
                }
            }
        }
    }
}
