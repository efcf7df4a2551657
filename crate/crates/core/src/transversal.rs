//! Minimal transversals (minimal hitting sets, minimal vertex covers) of a
//! hypergraph whose edges are vertex bitmasks.

/// Largest vertex count accepted by [`minimal_transversals_bruteforce`].
pub const BRUTEFORCE_MAX_VERTICES: usize = 20;

/// Enumerates every minimal transversal of `edges`, sorted by
/// `(cardinality, lexicographic)`.
///
/// Branches on the vertices of the first edge not yet hit. Branch `k` takes
/// the `k`-th vertex and forbids the earlier ones, so each minimal transversal
/// is reached by exactly one path. A partial set is cut as soon as one of its
/// members has no private edge left.
pub fn minimal_transversals(edges: &[u64]) -> Vec<u64> {
    if edges.contains(&0) {
        return Vec::new();
    }
    let edges = minimal_edges(edges);
    let mut out = Vec::new();
    search(&edges, 0, 0, &mut out);
    sort_sets(&mut out);
    out
}

fn search(edges: &[u64], chosen: u64, forbidden: u64, out: &mut Vec<u64>) {
    let Some(&open) = edges.iter().find(|&&e| e & chosen == 0) else {
        out.push(chosen);
        return;
    };
    let mut candidates = open & !forbidden;
    let mut forbidden = forbidden;
    while candidates != 0 {
        let v = candidates & candidates.wrapping_neg();
        candidates &= candidates - 1;
        let next = chosen | v;
        if all_critical(edges, chosen, next) {
            search(edges, next, forbidden, out);
        }
        forbidden |= v;
    }
}

/// Every member of `old` still owns an edge met by no other member of `set`.
fn all_critical(edges: &[u64], old: u64, set: u64) -> bool {
    let mut rest = old;
    while rest != 0 {
        let u = rest & rest.wrapping_neg();
        rest &= rest - 1;
        if !edges.iter().any(|&e| e & set == u) {
            return false;
        }
    }
    true
}

fn minimal_edges(edges: &[u64]) -> Vec<u64> {
    let mut sorted: Vec<u64> = edges.to_vec();
    sorted.sort_by_key(|e| (e.count_ones(), *e));
    sorted.dedup();
    let mut kept: Vec<u64> = Vec::with_capacity(sorted.len());
    for e in sorted {
        if !kept.iter().any(|&k| k & !e == 0) {
            kept.push(e);
        }
    }
    kept
}

/// Exhaustive scan of all `2^n` vertex subsets; an independent check of
/// [`minimal_transversals`] for `n <= 20`.
pub fn minimal_transversals_bruteforce(edges: &[u64], n: usize) -> Option<Vec<u64>> {
    if n > BRUTEFORCE_MAX_VERTICES {
        return None;
    }
    let hits = |s: u64| edges.iter().all(|&e| e & s != 0);
    let mut out = Vec::new();
    for s in 0u64..(1u64 << n) {
        if !hits(s) {
            continue;
        }
        let mut minimal = true;
        let mut rest = s;
        while rest != 0 {
            let v = rest & rest.wrapping_neg();
            rest &= rest - 1;
            if hits(s & !v) {
                minimal = false;
                break;
            }
        }
        if minimal {
            out.push(s);
        }
    }
    sort_sets(&mut out);
    Some(out)
}

fn sort_sets(sets: &mut [u64]) {
    sets.sort_by(|a, b| {
        crate::Monomial::from_mask(*a).cmp(&crate::Monomial::from_mask(*b))
    });
}
