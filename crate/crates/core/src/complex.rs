//! Simplicial complexes, f-vectors, and the facet / Stanley-Reisner
//! correspondences between complexes and square-free monomial ideals.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::{minimalize, Ideal};
use crate::monomial::{check_var_count, full_mask, Face, Monomial};
use crate::transversal::minimal_transversals;

/// Facets wider than this are not expanded into their face lattice.
pub const MAX_FACET_EXPANSION: usize = 24;

/// A simplicial complex on the vertex set `{1..n}`, stored by its facets.
///
/// Facets are kept as a sorted antichain. Complexes built by
/// [`SimplicialComplex::new`] cover every vertex; the Stanley-Reisner complex
/// of an ideal with a linear generator does not, and reports the missing
/// vertices through [`SimplicialComplex::uncovered_vertices`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<Face>,
}

impl SimplicialComplex {
    /// Builds the complex generated by `faces`, keeping only the maximal ones.
    /// Fails if some vertex lies in no face.
    pub fn new<I>(n: usize, faces: I) -> Result<Self>
    where
        I: IntoIterator<Item = Face>,
    {
        let complex = Self::generated_by(n, faces)?;
        let missing = complex.uncovered_vertices();
        if !missing.is_empty() {
            return Err(Error::UncoveredVertices { vertices: missing });
        }
        Ok(complex)
    }

    pub fn from_index_lists(n: usize, lists: &[Vec<usize>]) -> Result<Self> {
        let faces = lists
            .iter()
            .map(|l| Monomial::from_indices(l, n))
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, faces)
    }

    /// Like [`SimplicialComplex::new`] but without the vertex-cover check.
    pub(crate) fn generated_by<I>(n: usize, faces: I) -> Result<Self>
    where
        I: IntoIterator<Item = Face>,
    {
        check_var_count(n)?;
        let limit = full_mask(n);
        let mut faces: Vec<Face> = faces.into_iter().collect();
        if let Some(bad) = faces.iter().find(|f| f.mask() & !limit != 0) {
            return Err(Error::OutOfRange { index: bad.max_index(), n });
        }
        faces.sort_by(|a, b| b.cmp(a));
        faces.dedup();
        let mut facets: Vec<Face> = Vec::with_capacity(faces.len());
        for f in faces {
            if !facets.iter().any(|g| f.divides(*g)) {
                facets.push(f);
            }
        }
        if facets.is_empty() {
            facets.push(Monomial::ONE);
        }
        facets.sort();
        Ok(SimplicialComplex { n, facets })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn vertices(&self) -> Monomial {
        self.facets.iter().fold(Monomial::ONE, |a, f| a.union(*f))
    }

    pub fn uncovered_vertices(&self) -> Vec<usize> {
        self.vertices().complement(self.n).to_vec()
    }

    pub fn contains_face(&self, face: Face) -> bool {
        self.facets.iter().any(|f| face.divides(*f))
    }

    /// `max |F| - 1` over facets; `-1` for the complex whose only face is empty.
    pub fn dimension(&self) -> isize {
        self.facets.iter().map(|f| f.degree() as isize).max().unwrap_or(0) - 1
    }

    pub fn f_vector(&self) -> Result<FVector> {
        f_vector(self)
    }

    pub fn to_file(&self) -> ComplexFile {
        ComplexFile {
            n: self.n,
            facets: self.facets.iter().map(|f| f.to_vec()).collect(),
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: ComplexFile = serde_json::from_str(text).map_err(|e| Error::Format {
            reason: e.to_string(),
        })?;
        Self::from_index_lists(file.n, &file.facets)
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (k, face) in self.facets.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{face:?}")?;
        }
        write!(f, ">")
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} (n={})", self.n)
    }
}

/// `{"n": 5, "facets": [[1,2],[3,4],[1,3,5],[2,4,5]]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexFile {
    pub n: usize,
    pub facets: Vec<Vec<usize>>,
}

/// Face counts `(f_0, ..., f_d)` by dimension. The empty face is implicit.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FVector(Vec<u64>);

impl FVector {
    pub fn new(entries: Vec<u64>) -> Self {
        FVector(entries)
    }

    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Dimension of the complex it came from.
    pub fn dimension(&self) -> isize {
        self.0.len() as isize - 1
    }

    /// `f_i`, or 0 past the end.
    pub fn get(&self, i: usize) -> u64 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Entrywise `self - other`; `None` when the lengths differ.
    pub fn difference(&self, other: &FVector) -> Option<Vec<i64>> {
        (self.len() == other.len()).then(|| {
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a as i64 - *b as i64)
                .collect()
        })
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, self.0.iter())
    }
}

pub(crate) fn write_tuple<T: fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    items: impl Iterator<Item = T>,
) -> fmt::Result {
    write!(f, "(")?;
    for (k, x) in items.enumerate() {
        if k > 0 {
            write!(f, ", ")?;
        }
        write!(f, "{x}")?;
    }
    write!(f, ")")
}

/// `δ_F(I)`: the complex whose facets are the generator supports.
pub fn facet_complex(ideal: &Ideal) -> Result<SimplicialComplex> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let missing = ideal.uncovered_vars();
    if !missing.is_empty() {
        return Err(Error::UncoveredVertices { vertices: missing });
    }
    Ok(SimplicialComplex {
        n: ideal.n(),
        facets: ideal.generators().to_vec(),
    })
}

/// `δ_N(I)`: faces are the vertex sets whose monomial is outside `I`.
///
/// The facets are the complements of the minimal transversals of the
/// generator supports, i.e. the complements of the minimal vertex covers of
/// `δ_F(I)`.
pub fn stanley_reisner_complex(ideal: &Ideal) -> Result<SimplicialComplex> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let n = ideal.n();
    let edges: Vec<u64> = ideal.generators().iter().map(|g| g.mask()).collect();
    let mut facets: Vec<Face> = minimal_transversals(&edges)
        .into_iter()
        .map(|t| Monomial::from_mask(t).complement(n))
        .collect();
    facets.sort();
    Ok(SimplicialComplex { n, facets })
}

/// Reference construction of the Stanley-Reisner facets by scanning all
/// `2^n` vertex subsets (`n <= 20`).
pub fn stanley_reisner_facets_bruteforce(ideal: &Ideal) -> Option<Vec<Face>> {
    let n = ideal.n();
    if n > crate::transversal::BRUTEFORCE_MAX_VERTICES {
        return None;
    }
    let faces: Vec<u64> = (0u64..(1u64 << n))
        .filter(|&s| !ideal.contains(Monomial::from_mask(s)))
        .collect();
    let mut facets: Vec<Face> = faces
        .iter()
        .filter(|&&s| (0..n).all(|v| s & (1 << v) != 0 || ideal.contains(Monomial::from_mask(s | 1 << v))))
        .map(|&s| Monomial::from_mask(s))
        .collect();
    facets.sort();
    Some(facets)
}

/// Counts faces by expanding every facet's subset lattice into a shared set.
pub fn f_vector(complex: &SimplicialComplex) -> Result<FVector> {
    let dim = complex.dimension();
    if dim < 0 {
        return Ok(FVector(Vec::new()));
    }
    if let Some(wide) = complex.facets.iter().find(|f| f.degree() > MAX_FACET_EXPANSION) {
        return Err(Error::TooLarge {
            reason: format!(
                "facet with {} vertices exceeds the face expansion limit of {}",
                wide.degree(),
                MAX_FACET_EXPANSION
            ),
        });
    }
    let mut seen: HashSet<u64> = HashSet::new();
    for facet in &complex.facets {
        let full = facet.mask();
        // Walk all nonempty submasks of the facet.
        let mut sub = full;
        while sub != 0 {
            seen.insert(sub);
            sub = (sub - 1) & full;
        }
    }
    let mut counts = vec![0u64; dim as usize + 1];
    for face in seen {
        counts[face.count_ones() as usize - 1] += 1;
    }
    Ok(FVector(counts))
}

pub fn dimension(complex: &SimplicialComplex) -> isize {
    complex.dimension()
}

/// `ht(I) = n - dim δ_N(I) - 1`, the minimum size of a transversal of the
/// generator supports.
pub fn height(ideal: &Ideal) -> Result<usize> {
    let delta = stanley_reisner_complex(ideal)?;
    Ok((ideal.n() as isize - delta.dimension() - 1) as usize)
}

/// `I_F(Δ)`: generated by the facet monomials.
pub fn facet_ideal(complex: &SimplicialComplex) -> Ideal {
    minimalize(complex.facets.iter().copied().filter(|f| !f.is_one()), complex.n)
        .expect("facets are valid square-free monomials")
}

/// `I_N(Δ)`: generated by the minimal non-faces.
///
/// A set is a non-face iff it meets the complement of every facet, so the
/// minimal non-faces are the minimal transversals of the facet complements.
pub fn nonface_ideal(complex: &SimplicialComplex) -> Ideal {
    let n = complex.n;
    let complements: Vec<u64> = complex
        .facets
        .iter()
        .map(|f| f.complement(n).mask())
        .collect();
    let gens = minimal_transversals(&complements)
        .into_iter()
        .map(Monomial::from_mask);
    minimalize(gens, n).expect("minimal non-faces are nonempty square-free monomials")
}
