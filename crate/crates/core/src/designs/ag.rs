//! Point-hyperplane designs of the affine space `AG(d, q)`.

use super::{DesignError, ResolvableDesign};
use crate::algebra::FiniteField;
use crate::bounds::DEFAULT_MAX_DESIGN_POINTS;

/// The point-hyperplane design of `AG(d, q)`: `q^d` points, one parallel
/// class per hyperplane direction, `r = q^{d-2}`.
///
/// Points are the vectors of `GF(q)^d`; the point id reads the coordinates as
/// base-`q` digits, first coordinate most significant. Parallel classes are
/// numbered by the lexicographic order of their normalized normal vectors
/// (first nonzero coordinate scaled to 1), so the same `(q, d)` always yields
/// the same numbering.
pub fn affine_from_ag(q: u64, d: u32) -> Result<ResolvableDesign, DesignError> {
    affine_from_ag_bounded(q, d, DEFAULT_MAX_DESIGN_POINTS)
}

pub fn affine_from_ag_bounded(
    q: u64,
    d: u32,
    max_points: usize,
) -> Result<ResolvableDesign, DesignError> {
    if d < 2 {
        return Err(DesignError::DimensionTooSmall(d as usize));
    }
    let field = FiniteField::of_order(q)?;
    let points = (q as u128).pow(d);
    if points > max_points as u128 {
        return Err(DesignError::PointCountExceedsBound { points, bound: max_points });
    }
    let v = points as usize;
    let d = d as usize;

    // normalized hyperplane normals in lexicographic order
    let mut normals: Vec<Vec<u64>> = Vec::new();
    let mut a = vec![0u64; d];
    for _ in 0..v {
        if let Some(first) = a.iter().position(|&c| c != 0) {
            if a[first] == 1 {
                normals.push(a.clone());
            }
        }
        increment(&mut a, q);
    }
    debug_assert_eq!(normals.len() as u128, (points - 1) / (q as u128 - 1));

    let mut class_blocks = Vec::with_capacity(normals.len());
    let mut coords = vec![0u64; d];
    for normal in &normals {
        let mut buckets: Vec<Vec<usize>> = vec![Vec::with_capacity(v / q as usize); q as usize];
        coords.iter_mut().for_each(|c| *c = 0);
        for point in 0..v {
            let mut dot = 0;
            for (&n, &x) in normal.iter().zip(&coords) {
                dot = field.add(dot, field.mul(n, x));
            }
            buckets[dot as usize].push(point);
            increment(&mut coords, q);
        }
        class_blocks.push(buckets);
    }

    let r = (q as usize).pow(d as u32 - 2);
    Ok(ResolvableDesign::from_classes(v, class_blocks, q as usize, r))
}

/// Odometer step in base `q`, last coordinate fastest.
fn increment(coords: &mut [u64], q: u64) {
    for c in coords.iter_mut().rev() {
        *c += 1;
        if *c < q {
            return;
        }
        *c = 0;
    }
}
