//! Upper and lower shadows of uniform-degree sets of square-free monomials,
//! perfect sets, and perfect numbers `N(n, d)`.

use crate::error::{Error, Result};
use crate::monomial::{binomial, check_var_count, full_mask, k_subsets, Monomial};

/// Upper bound on `C(n, d)` for the exhaustive perfect-number search.
pub const BRUTEFORCE_MAX_UNIVERSE: u128 = 24;

/// A set of square-free monomials, all of one degree, in `n` variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ShadowSet {
    n: usize,
    degree: usize,
    members: Vec<Monomial>,
}

impl ShadowSet {
    pub fn new<I>(n: usize, degree: usize, members: I) -> Result<Self>
    where
        I: IntoIterator<Item = Monomial>,
    {
        check_var_count(n)?;
        if degree > n {
            return Err(Error::DegreeOutOfRange { d: degree, n });
        }
        let limit = full_mask(n);
        let mut members: Vec<Monomial> = members.into_iter().collect();
        for m in &members {
            if m.degree() != degree {
                return Err(Error::MixedDegree);
            }
            if m.mask() & !limit != 0 {
                return Err(Error::OutOfRange { index: m.max_index(), n });
            }
        }
        members.sort();
        members.dedup();
        Ok(ShadowSet { n, degree, members })
    }

    /// The whole layer `Sm(R)_d`.
    pub fn universe(n: usize, degree: usize) -> Result<Self> {
        check_var_count(n)?;
        if degree > n {
            return Err(Error::DegreeOutOfRange { d: degree, n });
        }
        Ok(ShadowSet { n, degree, members: k_subsets(n, degree) })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn members(&self) -> &[Monomial] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_subset(&self, other: &ShadowSet) -> bool {
        self.members.iter().all(|m| other.members.binary_search(m).is_ok())
    }
}

/// `⊔(T)`: every `g·x_i` with `x_i ∤ g`.
pub fn upper_shadow(t: &ShadowSet) -> Result<ShadowSet> {
    if t.degree >= t.n {
        return Err(Error::DegreeOverflow { degree: t.degree, n: t.n });
    }
    let mut out = Vec::new();
    for g in &t.members {
        for v in g.complement(t.n).indices() {
            out.push(g.with_var(v));
        }
    }
    ShadowSet::new(t.n, t.degree + 1, out)
}

/// `⊓(T)`: every `g / x_i` with `x_i | g`.
pub fn lower_shadow(t: &ShadowSet) -> Result<ShadowSet> {
    if t.degree == 0 {
        return Err(Error::DegreeUnderflow { degree: 0 });
    }
    let mut out = Vec::new();
    for g in &t.members {
        for v in g.indices() {
            out.push(g.without_var(v));
        }
    }
    ShadowSet::new(t.n, t.degree - 1, out)
}

pub fn is_upper_perfect(t: &ShadowSet) -> Result<bool> {
    let up = upper_shadow(t)?;
    Ok(up.len() as u128 == binomial(t.n as u64, t.degree as u64 + 1))
}

pub fn is_lower_perfect(t: &ShadowSet) -> Result<bool> {
    let down = lower_shadow(t)?;
    Ok(down.len() as u128 == binomial(t.n as u64, t.degree as u64 - 1))
}

/// Upper and lower perfect at once; requires `1 <= degree < n`.
pub fn is_perfect(t: &ShadowSet) -> Result<bool> {
    Ok(is_upper_perfect(t)? && is_lower_perfect(t)?)
}

/// Closed form of `N(n, 2)`: `t² - t` for `n = 2t`, `t²` for `n = 2t + 1`.
/// Defined for `n >= 4` only.
pub fn perfect_number_formula(n: usize) -> Result<u64> {
    if n < 4 {
        return Err(Error::UnsupportedN { n });
    }
    let t = (n / 2) as u64;
    Ok(if n.is_multiple_of(2) { t * t - t } else { t * t })
}

/// `N(n, d)` by exhaustive search over subsets of `Sm(R)_d` in increasing
/// cardinality, stopping at the first perfect one.
pub fn perfect_number_bruteforce(n: usize, d: usize) -> Result<u64> {
    check_var_count(n)?;
    if d == 0 || d >= n {
        return Err(Error::DegreeOutOfRange { d, n });
    }
    let size = binomial(n as u64, d as u64);
    if size > BRUTEFORCE_MAX_UNIVERSE {
        return Err(Error::SearchTooLarge {
            reason: format!("C({n},{d}) = {size} exceeds {BRUTEFORCE_MAX_UNIVERSE}"),
        });
    }
    let layer = k_subsets(n, d);
    let above = k_subsets(n, d + 1);
    let below = k_subsets(n, d - 1);
    let index = |set: &[Monomial], m: Monomial| set.binary_search(&m).expect("member of layer");

    let cover = |targets: &[Monomial], images: &dyn Fn(Monomial) -> Vec<Monomial>| -> Vec<Bits> {
        layer
            .iter()
            .map(|&g| {
                let mut b = Bits::new(targets.len());
                for h in images(g) {
                    b.set(index(targets, h));
                }
                b
            })
            .collect()
    };
    let up = cover(&above, &|g: Monomial| g.complement(n).indices().map(|v| g.with_var(v)).collect());
    let down = cover(&below, &|g: Monomial| g.indices().map(|v| g.without_var(v)).collect());

    // Each member covers n-d sets above and d sets below.
    let per_up = n - d;
    let lower_bound = above.len().div_ceil(per_up).max(below.len().div_ceil(d));

    let search = Search {
        up: &up,
        down: &down,
        up_total: above.len(),
        down_total: below.len(),
        per_up,
        per_down: d,
    };
    for k in lower_bound.max(1)..=layer.len() {
        let mut acc_up = Bits::new(above.len());
        let mut acc_down = Bits::new(below.len());
        if search.run(0, k, &mut acc_up, &mut acc_down) {
            return Ok(k as u64);
        }
    }
    unreachable!("the whole layer is perfect for 1 <= d < n")
}

struct Search<'a> {
    up: &'a [Bits],
    down: &'a [Bits],
    up_total: usize,
    down_total: usize,
    per_up: usize,
    per_down: usize,
}

impl Search<'_> {
    fn run(&self, start: usize, left: usize, acc_up: &mut Bits, acc_down: &mut Bits) -> bool {
        let missing_up = self.up_total - acc_up.count();
        let missing_down = self.down_total - acc_down.count();
        if left == 0 {
            return missing_up == 0 && missing_down == 0;
        }
        if missing_up > left * self.per_up || missing_down > left * self.per_down {
            return false;
        }
        for i in start..=self.up.len() - left {
            let (saved_up, saved_down) = (acc_up.clone(), acc_down.clone());
            acc_up.or_with(&self.up[i]);
            acc_down.or_with(&self.down[i]);
            if self.run(i + 1, left - 1, acc_up, acc_down) {
                return true;
            }
            *acc_up = saved_up;
            *acc_down = saved_down;
        }
        false
    }
}

#[derive(Clone)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(len: usize) -> Self {
        Bits(vec![0; len.div_ceil(64).max(1)])
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1u64 << (i % 64);
    }

    fn or_with(&mut self, other: &Bits) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a |= b;
        }
    }

    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
}
