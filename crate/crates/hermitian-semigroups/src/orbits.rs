//! Exhaustive orbit computation of triangles under the automorphism group.
//!
//! The group of the Hermitian curve has order `(q^3+1) q^3 (q^2-1)` and is
//! exactly the set of explicit two-point matrices: distinct parameter
//! choices give distinct automorphisms. Enumerating all of them per subset
//! is wasteful, so orbits are computed by breadth-first search under a
//! small generating family (all translations fixing `P_inf`, one scaling by
//! a primitive element, and one swap of `P_00` with `P_inf`) — and the
//! family is *certified* to generate: the closure of the generators under
//! composition is computed explicitly and must have the full group order.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::curve::{automorphism, curve_points, scaling, CurveAutomorphism, ProjectivePoint};
use crate::field::FieldParams;
use crate::{Error, Result};

/// All automorphisms realized by the two-point matrix construction, one per
/// `(A, B, eps)` parameter triple, deduplicated projectively. The spread of
/// parameters is `(q^3+1) q^3 (q^2-1)`, and the returned set has the same
/// cardinality: distinct parameters give distinct maps, and together they
/// exhaust the automorphism group. Exhaustive enumeration is desk-scale
/// only (`q <= 3`).
pub fn enumerate_automorphisms(params: &FieldParams) -> Result<Vec<CurveAutomorphism>> {
    let q = params.q();
    if q > 3 {
        return Err(Error::TooLarge {
            what: "q for full automorphism enumeration",
            value: q,
            max: 3,
        });
    }
    let points = curve_points(params);
    let units: Vec<_> = params.elements().filter(|e| !e.is_zero()).collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut parameter_count = 0u64;
    for a in &points {
        for b in &points {
            if a == b {
                continue;
            }
            for &eps in &units {
                parameter_count += 1;
                let m = automorphism(params, a, b, eps)?;
                if seen.insert(m) {
                    out.push(m);
                }
            }
        }
    }
    assert_eq!(parameter_count, expected_group_order(q));
    assert_eq!(
        out.len() as u64,
        parameter_count,
        "parameter triples must yield pairwise distinct automorphisms"
    );
    Ok(out)
}

/// `(q^3 + 1) q^3 (q^2 - 1)`, the order of the automorphism group.
pub fn expected_group_order(q: u64) -> u64 {
    (q * q * q + 1) * (q * q * q) * (q * q - 1)
}

/// The certified generating family: every translation `M(A, P_inf, 1)`
/// (fixing `P_inf`, sending `P_00` to the affine point `A`), the scaling by
/// the least primitive element, and the swap `M(P_inf, P_00, 1)`.
fn generators(params: &FieldParams) -> Result<Vec<CurveAutomorphism>> {
    let p_inf = ProjectivePoint::infinity(params);
    let p_00 = ProjectivePoint::affine(params, params.zero(), params.zero());
    let mut gens = Vec::new();
    for a in curve_points(params) {
        if !a.is_infinity() {
            gens.push(automorphism(params, &a, &p_inf, params.one())?);
        }
    }
    gens.push(scaling(params, params.primitive_element())?);
    gens.push(automorphism(params, &p_inf, &p_00, params.one())?);
    Ok(gens)
}

/// Closure of the generators under composition; its size certifies that
/// they generate the whole group.
fn group_closure_size(params: &FieldParams, gens: &[CurveAutomorphism]) -> usize {
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    let id = CurveAutomorphism::identity(params);
    seen.insert(id);
    queue.push_back(id);
    while let Some(m) = queue.pop_front() {
        for g in gens {
            let next = g.compose(params, &m);
            if seen.insert(next) {
                queue.push_back(next);
            }
        }
    }
    seen.len()
}

/// Number of orbits of 3-element subsets of the rational points under the
/// full automorphism group, by exhaustive breadth-first search. Feasible
/// for `q <= 5`.
pub fn orbit_count(params: &FieldParams) -> Result<usize> {
    Ok(orbit_partition(params)?.1)
}

/// Orbit labelling of all 3-subsets: returns (for each subset, by index
/// into the sorted list of subsets, its orbit id) and the orbit count.
/// Subset `i < j < k` of point indices is at position produced by the
/// lexicographic triple loop.
pub fn orbit_partition(params: &FieldParams) -> Result<(Vec<u32>, usize)> {
    let q = params.q();
    if q > 5 {
        return Err(Error::TooLarge {
            what: "q for exhaustive orbit computation",
            value: q,
            max: 5,
        });
    }
    let points = curve_points(params);
    let n = points.len();
    let index_of: HashMap<ProjectivePoint, u16> = points
        .iter()
        .enumerate()
        .map(|(i, p)| (*p, i as u16))
        .collect();

    let gens = generators(params)?;
    let closure = group_closure_size(params, &gens);
    assert_eq!(
        closure as u64,
        expected_group_order(q),
        "generator closure must realize the whole automorphism group"
    );

    // Generators as point permutations; the subset BFS is pure index work.
    let perms: Vec<Vec<u16>> = gens
        .iter()
        .map(|g| {
            points
                .iter()
                .map(|p| index_of[&g.apply(params, p)])
                .collect()
        })
        .collect();

    let mut subset_id: HashMap<[u16; 3], u32> = HashMap::new();
    let mut subsets: Vec<[u16; 3]> = Vec::new();
    for i in 0..n as u16 {
        for j in (i + 1)..n as u16 {
            for k in (j + 1)..n as u16 {
                subset_id.insert([i, j, k], subsets.len() as u32);
                subsets.push([i, j, k]);
            }
        }
    }

    let mut orbit = vec![u32::MAX; subsets.len()];
    let mut orbits = 0usize;
    let mut queue = VecDeque::new();
    for start in 0..subsets.len() {
        if orbit[start] != u32::MAX {
            continue;
        }
        let label = orbits as u32;
        orbits += 1;
        orbit[start] = label;
        queue.push_back(start);
        while let Some(cur) = queue.pop_front() {
            let s = subsets[cur];
            for perm in &perms {
                let mut image = [perm[s[0] as usize], perm[s[1] as usize], perm[s[2] as usize]];
                image.sort_unstable();
                let id = subset_id[&image] as usize;
                if orbit[id] == u32::MAX {
                    orbit[id] = label;
                    queue.push_back(id);
                }
            }
        }
    }
    Ok((orbit, orbits))
}
