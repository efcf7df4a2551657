//! Exhaustive census of degree-2 quasi f-ideals of a given type.
//!
//! An equigenerated degree-2 ideal is a graph on `{1..n}`, encoded as a
//! bitmask over the `C(n,2)` pairs in lexicographic order. With full
//! support both complexes have `n` vertices and `δ_F(I)` is 1-dimensional,
//! so `I` has type `(0, b)` exactly when `δ_N(I)` has an edge but no
//! triangle; then `b = (C(n,2) - r) - r` for `r` generators.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::{minimalize, Ideal};
use crate::monomial::{binomial, full_mask, k_subsets, Monomial};

pub const MIN_VARS: usize = 4;
pub const MAX_VARS: usize = 7;
pub const DEFAULT_CAP: usize = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerateOptions {
    /// Keep one representative per vertex-relabeling orbit.
    pub up_to_symmetry: bool,
    /// Maximum number of ideals materialized in the result.
    pub cap: usize,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        EnumerateOptions { up_to_symmetry: false, cap: DEFAULT_CAP }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    /// Minimum-bitmask member of the orbit.
    pub representative: Ideal,
    pub size: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Census {
    pub n: usize,
    pub b: i64,
    /// Number of labeled ideals of type `(0, b)`.
    pub count: usize,
    /// Labeled ideals, or orbit representatives, up to the cap.
    pub ideals: Vec<Ideal>,
    /// Orbit sizes aligned with `ideals` when enumerating up to symmetry.
    pub orbit_sizes: Option<Vec<usize>>,
    /// Total number of orbits when enumerating up to symmetry.
    pub orbit_count: Option<usize>,
    pub truncated: bool,
}

#[derive(Serialize)]
struct CensusFile<'a> {
    n: usize,
    b: i64,
    count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    orbit_count: Option<usize>,
    truncated: bool,
    ideals: Vec<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    orbit_sizes: Option<&'a [usize]>,
}

impl Census {
    pub fn to_json(&self) -> String {
        let file = CensusFile {
            n: self.n,
            b: self.b,
            count: self.count,
            orbit_count: self.orbit_count,
            truncated: self.truncated,
            ideals: self.ideals.iter().map(|i| i.to_file().generators).collect(),
            orbit_sizes: self.orbit_sizes.as_deref(),
        };
        serde_json::to_string(&file).expect("census serializes")
    }
}

/// Precomputed pair and triple layouts for one `n`.
pub struct GraphLayout {
    n: usize,
    pairs: Vec<Monomial>,
    /// For each vertex triple, the bitmask of its three pairs.
    triples: Vec<u64>,
}

impl GraphLayout {
    pub fn new(n: usize) -> Self {
        let pairs = k_subsets(n, 2);
        let pair_bit = |m: Monomial| 1u64 << pairs.binary_search(&m).expect("pair");
        let triples = k_subsets(n, 3)
            .into_iter()
            .map(|t| t.indices().map(|v| pair_bit(t.without_var(v))).fold(0, |a, b| a | b))
            .collect();
        GraphLayout { n, pairs, triples }
    }

    pub fn pair_count(&self) -> usize {
        self.pairs.len()
    }

    pub fn ideal(&self, mask: u64) -> Ideal {
        let gens = (0..self.pairs.len())
            .filter(|k| mask >> k & 1 == 1)
            .map(|k| self.pairs[k]);
        minimalize(gens, self.n).expect("pairs are valid generators")
    }

    pub fn mask_of(&self, ideal: &Ideal) -> Option<u64> {
        ideal.generators().iter().try_fold(0u64, |acc, g| {
            self.pairs.binary_search(g).ok().map(|k| acc | 1u64 << k)
        })
    }

    fn support(&self, mask: u64) -> u64 {
        let mut rest = mask;
        let mut s = 0u64;
        while rest != 0 {
            s |= self.pairs[rest.trailing_zeros() as usize].mask();
            rest &= rest - 1;
        }
        s
    }

    /// Type `(0, b)` test for the graph `mask`: full support, some pair left
    /// out of `G(I)`, and no vertex triple avoiding `G(I)`.
    pub fn is_quasi(&self, mask: u64) -> bool {
        mask.count_ones() < self.pairs.len() as u32
            && self.support(mask) == full_mask(self.n)
            && self.triples.iter().all(|&t| t & mask != 0)
    }

    /// Image of `mask` under the vertex permutation `perm` (0-based).
    fn relabel(&self, pair_image: &[usize], mask: u64) -> u64 {
        let mut rest = mask;
        let mut out = 0u64;
        while rest != 0 {
            out |= 1u64 << pair_image[rest.trailing_zeros() as usize];
            rest &= rest - 1;
        }
        out
    }

    fn pair_images(&self) -> Vec<Vec<usize>> {
        permutations(self.n)
            .into_iter()
            .map(|perm| {
                self.pairs
                    .iter()
                    .map(|p| {
                        let img = p
                            .indices()
                            .fold(Monomial::ONE, |acc, v| acc.with_var(perm[v - 1] + 1));
                        self.pairs.binary_search(&img).expect("pair")
                    })
                    .collect()
            })
            .collect()
    }

    /// Smallest bitmask over all relabelings of `mask`.
    pub fn canonical(&self, mask: u64) -> u64 {
        self.pair_images()
            .iter()
            .map(|img| self.relabel(img, mask))
            .min()
            .unwrap_or(mask)
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Next larger integer with the same popcount.
fn next_same_popcount(x: u64) -> u64 {
    let c = x & x.wrapping_neg();
    let r = x + c;
    (((r ^ x) >> 2) / c) | r
}

/// All graphs with `edges` edges among `bits` pair slots, scanned in
/// parallel by the assignment of the top pair slots.
fn scan(layout: &GraphLayout, edges: usize) -> Vec<u64> {
    let bits = layout.pair_count();
    let prefix_bits = bits.min(8);
    let low_bits = bits - prefix_bits;
    let chunks: Vec<Vec<u64>> = (0u64..1 << prefix_bits)
        .into_par_iter()
        .filter(|p| p.count_ones() as usize <= edges && edges - p.count_ones() as usize <= low_bits)
        .map(|prefix| {
            let low_count = edges - prefix.count_ones() as usize;
            let high = prefix << low_bits;
            let mut hits = Vec::new();
            if low_count == 0 {
                if layout.is_quasi(high) {
                    hits.push(high);
                }
                return hits;
            }
            let end = 1u64 << low_bits;
            let mut low = (1u64 << low_count) - 1;
            while low < end {
                let mask = high | low;
                if layout.is_quasi(mask) {
                    hits.push(mask);
                }
                low = next_same_popcount(low);
            }
            hits
        })
        .collect();
    let mut all: Vec<u64> = chunks.into_iter().flatten().collect();
    all.sort_unstable();
    all
}

/// Every equigenerated degree-2 ideal with full support and type `(0, b)`
/// in `n` variables, `4 <= n <= 7`.
pub fn enumerate_quasi(n: usize, b: i64, options: EnumerateOptions) -> Result<Census> {
    if n < MIN_VARS {
        return Err(Error::UnsupportedN { n });
    }
    if n > MAX_VARS {
        return Err(Error::SearchTooLarge {
            reason: format!("2^C({n},2) graphs; enumeration supports n <= {MAX_VARS}"),
        });
    }
    let pairs = binomial(n as u64, 2) as i64;
    let empty = Census {
        n,
        b,
        count: 0,
        ideals: Vec::new(),
        orbit_sizes: options.up_to_symmetry.then(Vec::new),
        orbit_count: options.up_to_symmetry.then_some(0),
        truncated: false,
    };
    if (pairs - b).rem_euclid(2) != 0 {
        return Ok(empty);
    }
    let edges = (pairs - b) / 2;
    if edges < 1 || edges > pairs {
        return Ok(empty);
    }

    let layout = GraphLayout::new(n);
    let mut hits = scan(&layout, edges as usize);
    hits.sort_by_cached_key(|&m| lex_key(m));
    let count = hits.len();

    if !options.up_to_symmetry {
        let truncated = count > options.cap;
        let ideals = hits.iter().take(options.cap).map(|&m| layout.ideal(m)).collect();
        return Ok(Census { ideals, truncated, count, ..empty });
    }

    let images = layout.pair_images();
    let mut seen: HashSet<u64> = HashSet::with_capacity(count);
    let mut orbits: Vec<(u64, usize)> = Vec::new();
    for &h in &hits {
        if seen.contains(&h) {
            continue;
        }
        let orbit: HashSet<u64> = images.iter().map(|img| layout.relabel(img, h)).collect();
        let rep = *orbit.iter().min().expect("orbit contains h");
        orbits.push((rep, orbit.len()));
        seen.extend(orbit);
    }
    orbits.sort_by_cached_key(|&(m, _)| lex_key(m));
    let orbit_count = orbits.len();
    let truncated = orbit_count > options.cap;
    orbits.truncate(options.cap);
    Ok(Census {
        ideals: orbits.iter().map(|&(m, _)| layout.ideal(m)).collect(),
        orbit_sizes: Some(orbits.iter().map(|&(_, s)| s).collect()),
        orbit_count: Some(orbit_count),
        truncated,
        count,
        ..empty
    })
}

/// Pair indices follow lexicographic pair order, so comparing the set bit
/// positions in increasing order matches comparing generator lists.
fn lex_key(mask: u64) -> Vec<u8> {
    (0..64u8).filter(|&i| mask >> i & 1 == 1).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quasi::{quasi_type, QuasiType};
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn count(n: usize, b: i64) -> usize {
        enumerate_quasi(n, b, EnumerateOptions::default()).unwrap().count
    }

    #[test]
    fn n4_counts() {
        assert_eq!(count(4, 2), 3);
        assert_eq!(count(4, 0), 12);
        assert_eq!(count(4, 1), 0);
        let matchings = enumerate_quasi(4, 2, EnumerateOptions::default()).unwrap();
        let text: Vec<String> = matchings.ideals.iter().map(|i| i.to_string()).collect();
        assert_eq!(text, vec!["<x1x2, x3x4>", "<x1x3, x2x4>", "<x1x4, x2x3>"]);
    }

    #[test]
    fn kernel_matches_quasi_type() {
        for n in 4..=5usize {
            let layout = GraphLayout::new(n);
            let pairs = binomial(n as u64, 2) as i64;
            for mask in 1u64..(1 << layout.pair_count()) {
                let ideal = layout.ideal(mask);
                let b = pairs - 2 * mask.count_ones() as i64;
                let by_definition = ideal.has_full_support()
                    && quasi_type(&ideal).unwrap().quasi_type() == Some(&QuasiType::pair(b));
                assert_eq!(layout.is_quasi(mask), by_definition, "{ideal}");
                assert_eq!(layout.mask_of(&ideal), Some(mask));
            }
        }
    }

    #[test]
    fn symmetry_orbits_partition_the_census() {
        for n in 4..=6usize {
            let pairs = binomial(n as u64, 2) as i64;
            for b in -pairs..=pairs {
                let plain = enumerate_quasi(n, b, EnumerateOptions::default()).unwrap();
                let sym = enumerate_quasi(n, b, EnumerateOptions { up_to_symmetry: true, cap: DEFAULT_CAP })
                    .unwrap();
                assert_eq!(plain.count, sym.count);
                assert_eq!(sym.orbit_sizes.as_ref().unwrap().iter().sum::<usize>(), plain.count);
                let layout = GraphLayout::new(n);
                for rep in &sym.ideals {
                    let m = layout.mask_of(rep).unwrap();
                    assert_eq!(layout.canonical(m), m);
                }
            }
        }
        let sym = enumerate_quasi(4, 0, EnumerateOptions { up_to_symmetry: true, cap: 10 }).unwrap();
        // labeled paths on 4 vertices form a single orbit
        assert_eq!(sym.orbit_sizes, Some(vec![12]));
    }

    #[test]
    fn counts_survive_relabeling() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        for n in 4..=6usize {
            let layout = GraphLayout::new(n);
            let pairs = binomial(n as u64, 2) as i64;
            for b in (-pairs + 2..=pairs).step_by(1) {
                let census = enumerate_quasi(n, b, EnumerateOptions::default()).unwrap();
                let mut perm: Vec<usize> = (0..n).collect();
                perm.shuffle(&mut rng);
                let image: Vec<usize> = layout
                    .pairs
                    .iter()
                    .map(|p| {
                        let img = p.indices().fold(Monomial::ONE, |a, v| a.with_var(perm[v - 1] + 1));
                        layout.pairs.binary_search(&img).unwrap()
                    })
                    .collect();
                let relabeled: HashSet<u64> = census
                    .ideals
                    .iter()
                    .map(|i| layout.relabel(&image, layout.mask_of(i).unwrap()))
                    .collect();
                assert_eq!(relabeled.len(), census.count);
                assert!(relabeled.iter().all(|&m| layout.is_quasi(m)));
            }
        }
    }

    #[test]
    fn cap_truncates_list_not_count() {
        let c = enumerate_quasi(5, 0, EnumerateOptions { up_to_symmetry: false, cap: 3 }).unwrap();
        assert_eq!(c.ideals.len(), 3);
        assert!(c.truncated);
        assert!(c.count > 3);
    }

    #[test]
    fn range_checks() {
        assert_eq!(
            enumerate_quasi(3, 1, EnumerateOptions::default()).unwrap_err(),
            Error::UnsupportedN { n: 3 }
        );
        assert!(matches!(
            enumerate_quasi(8, 4, EnumerateOptions::default()),
            Err(Error::SearchTooLarge { .. })
        ));
    }

    #[test]
    fn census_json_shape() {
        let c = enumerate_quasi(4, 2, EnumerateOptions::default()).unwrap();
        let v: serde_json::Value = serde_json::from_str(&c.to_json()).unwrap();
        assert_eq!(v["n"], 4);
        assert_eq!(v["b"], 2);
        assert_eq!(v["count"], 3);
        assert_eq!(v["ideals"][0], serde_json::json!([[1, 2], [3, 4]]));
    }
}
