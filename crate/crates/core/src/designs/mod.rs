//! Affine resolvable designs with numbered parallel classes.
//!
//! An affine design with parameters `(q, r)` has blocks that are pairwise
//! either disjoint or meeting in exactly `r` points, and every block extends
//! to a parallel class of `q` disjoint blocks partitioning the points. The
//! two built-in families are the point-hyperplane designs of `AG(d, q)` and
//! the designs obtained from Hadamard matrices; arbitrary candidates can be
//! assembled from parts and audited with [`affine_verify`].

mod ag;
mod hadamard;

pub use ag::{affine_from_ag, affine_from_ag_bounded};
pub use hadamard::{affine_from_hadamard, hadamard_matrix, HadamardMatrix, HadamardMethod};

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DesignError {
    #[error("dimension d must be at least 2, got {0}")]
    DimensionTooSmall(usize),
    #[error("design would have {points} points, above the bound {bound}")]
    PointCountExceedsBound { points: u128, bound: usize },
    #[error(transparent)]
    Algebra(#[from] crate::algebra::AlgebraError),
    #[error("order {0} is not a power of two")]
    NotPowerOfTwo(usize),
    #[error("order {order} is not p+1 for a prime p = 3 (mod 4)")]
    NotPaleyOrder { order: usize },
    #[error("matrix is not Hadamard: {0}")]
    InvalidHadamard(String),
    #[error("order {0} is degenerate here; orders below 8 have no non-trivial parallel classes")]
    DegenerateOrder(usize),
    #[error("class number {class} out of range 1..={kappa}")]
    ClassOutOfRange { class: usize, kappa: usize },
    #[error("point {point} out of range for {points} points")]
    PointOutOfRange { point: usize, points: usize },
    #[error("class {class} has no block containing point {point}")]
    PointNotCovered { class: usize, point: usize },
}

/// Verification verdict naming the first violated affine-design axiom.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum AffineViolation {
    #[error("design has no points or no blocks")]
    Empty,
    #[error("fewer than two parallel classes")]
    NotEnoughClasses,
    #[error("parallel class {class} has {got} blocks, expected {expected}")]
    ClassSizeMismatch { class: usize, got: usize, expected: usize },
    #[error("blocks {b1} and {b2} of parallel class {class} share point {point}")]
    ClassBlocksOverlap { class: usize, b1: usize, b2: usize, point: usize },
    #[error("parallel class {class} misses point {point}")]
    ClassDoesNotCover { class: usize, point: usize },
    #[error("blocks {b1} and {b2} from different classes are disjoint")]
    CrossBlocksDisjoint { b1: usize, b2: usize },
    #[error("blocks {b1} and {b2} meet in {got} points, expected {expected}")]
    IntersectionNotConstant { b1: usize, b2: usize, got: usize, expected: usize },
    #[error("points ({x},{y}) lie in {got} common blocks, points ({x0},{y0}) in {expected}")]
    PairCountNotConstant { x: usize, y: usize, got: usize, x0: usize, y0: usize, expected: usize },
}

/// Parameters recovered by [`affine_verify`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AffineReport {
    /// Blocks per parallel class.
    pub q: usize,
    /// Intersection size of non-parallel blocks.
    pub r: usize,
    /// Number of parallel classes.
    pub kappa: usize,
    /// Number of blocks through any two distinct points.
    pub pair_count: usize,
}

/// A design together with a resolution of its blocks into parallel classes.
///
/// Blocks are stored class-major; inside a class, slot order is by smallest
/// contained point id, which is the stable indexing the construction's block
/// bijections act on.
#[derive(Clone, Debug)]
pub struct ResolvableDesign {
    point_count: usize,
    blocks: Vec<Vec<usize>>,
    classes: Vec<Vec<usize>>,
    /// `slot_of[class * point_count + point]` = slot in that class, or MAX.
    slot_of: Vec<u16>,
    q: usize,
    r: usize,
}

impl ResolvableDesign {
    /// Assembles a design from per-class block lists without checking the
    /// affine axioms; run [`affine_verify`] to audit a candidate. Block point
    /// lists are sorted, and blocks inside a class are ordered by their
    /// smallest point.
    pub fn from_classes(
        point_count: usize,
        class_blocks: Vec<Vec<Vec<usize>>>,
        q: usize,
        r: usize,
    ) -> Self {
        let kappa = class_blocks.len();
        let mut blocks = Vec::new();
        let mut classes = Vec::with_capacity(kappa);
        let mut slot_of = vec![u16::MAX; kappa * point_count];
        for (c, class) in class_blocks.into_iter().enumerate() {
            let mut normalized: Vec<Vec<usize>> = class
                .into_iter()
                .map(|mut b| {
                    b.sort_unstable();
                    b.dedup();
                    b
                })
                .collect();
            normalized.sort();
            let mut ids = Vec::with_capacity(normalized.len());
            for (slot, block) in normalized.into_iter().enumerate() {
                for &p in &block {
                    assert!(p < point_count, "point id {p} out of range");
                    let cell = &mut slot_of[c * point_count + p];
                    if *cell == u16::MAX {
                        *cell = slot as u16;
                    }
                }
                ids.push(blocks.len());
                blocks.push(block);
            }
            classes.push(ids);
        }
        ResolvableDesign { point_count, blocks, classes, slot_of, q, r }
    }

    pub fn point_count(&self) -> usize {
        self.point_count
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn block(&self, id: usize) -> &[usize] {
        &self.blocks[id]
    }

    pub fn kappa(&self) -> usize {
        self.classes.len()
    }

    /// Declared number of blocks per parallel class.
    pub fn q(&self) -> usize {
        self.q
    }

    /// Declared intersection number of non-parallel blocks.
    pub fn r(&self) -> usize {
        self.r
    }

    /// Block ids of parallel class `class` (1-based), in slot order.
    pub fn class_blocks(&self, class: usize) -> Result<&[usize], DesignError> {
        self.check_class(class)?;
        Ok(&self.classes[class - 1])
    }

    fn check_class(&self, class: usize) -> Result<(), DesignError> {
        if class == 0 || class > self.classes.len() {
            return Err(DesignError::ClassOutOfRange { class, kappa: self.classes.len() });
        }
        Ok(())
    }

    /// The unique block of parallel class `class` (1-based) containing `point`.
    pub fn parallel_block_of(&self, class: usize, point: usize) -> Result<usize, DesignError> {
        let slot = self.block_slot_of(class, point)?;
        Ok(self.classes[class - 1][slot])
    }

    /// Slot (position within the class) of the class-`class` block containing
    /// `point`.
    pub fn block_slot_of(&self, class: usize, point: usize) -> Result<usize, DesignError> {
        self.check_class(class)?;
        if point >= self.point_count {
            return Err(DesignError::PointOutOfRange { point, points: self.point_count });
        }
        let slot = self.slot_of[(class - 1) * self.point_count + point];
        if slot == u16::MAX {
            return Err(DesignError::PointNotCovered { class, point });
        }
        Ok(slot as usize)
    }

    /// Declared parameters agree: same `(q, r, κ)` and point count.
    pub fn same_shape(&self, other: &ResolvableDesign) -> bool {
        self.point_count == other.point_count
            && self.q == other.q
            && self.r == other.r
            && self.kappa() == other.kappa()
    }
}

/// Checks every affine-design axiom by brute force and reports the recovered
/// parameters, or the first violation with a witness.
pub fn affine_verify(design: &ResolvableDesign) -> Result<AffineReport, AffineViolation> {
    let v = design.point_count;
    if v == 0 || design.blocks.is_empty() {
        return Err(AffineViolation::Empty);
    }
    let kappa = design.classes.len();
    if kappa < 2 {
        return Err(AffineViolation::NotEnoughClasses);
    }
    let q = design.classes[0].len();

    // each parallel class: q pairwise-disjoint blocks covering all points
    for (c, class) in design.classes.iter().enumerate() {
        let class_no = c + 1;
        if class.len() != q {
            return Err(AffineViolation::ClassSizeMismatch {
                class: class_no,
                got: class.len(),
                expected: q,
            });
        }
        let mut owner = vec![usize::MAX; v];
        for &b in class {
            for &p in &design.blocks[b] {
                if owner[p] != usize::MAX {
                    return Err(AffineViolation::ClassBlocksOverlap {
                        class: class_no,
                        b1: owner[p],
                        b2: b,
                        point: p,
                    });
                }
                owner[p] = b;
            }
        }
        if let Some(p) = owner.iter().position(|&o| o == usize::MAX) {
            return Err(AffineViolation::ClassDoesNotCover { class: class_no, point: p });
        }
    }

    // non-parallel blocks meet in a constant number r >= 1 of points
    let words = v.div_ceil(64);
    let masks: Vec<Vec<u64>> = design
        .blocks
        .iter()
        .map(|b| {
            let mut m = vec![0u64; words];
            for &p in b {
                m[p / 64] |= 1 << (p % 64);
            }
            m
        })
        .collect();
    let class_of_block: Vec<usize> = {
        let mut out = vec![0; design.blocks.len()];
        for (c, class) in design.classes.iter().enumerate() {
            for &b in class {
                out[b] = c;
            }
        }
        out
    };
    let mut r: Option<(usize, usize, usize)> = None; // (r, b1, b2)
    for b1 in 0..design.blocks.len() {
        for b2 in (b1 + 1)..design.blocks.len() {
            if class_of_block[b1] == class_of_block[b2] {
                continue;
            }
            let meet: usize = masks[b1]
                .iter()
                .zip(&masks[b2])
                .map(|(x, y)| (x & y).count_ones() as usize)
                .sum();
            if meet == 0 {
                return Err(AffineViolation::CrossBlocksDisjoint { b1, b2 });
            }
            match r {
                None => r = Some((meet, b1, b2)),
                Some((expected, _, _)) if meet != expected => {
                    return Err(AffineViolation::IntersectionNotConstant {
                        b1,
                        b2,
                        got: meet,
                        expected,
                    });
                }
                _ => {}
            }
        }
    }
    let (r, _, _) = r.expect("at least two classes, so cross pairs exist");

    // constant number of blocks through any two distinct points
    let mut pair: Option<(usize, usize, usize)> = None; // (count, x, y)
    for x in 0..v {
        for y in (x + 1)..v {
            let count = masks
                .iter()
                .filter(|m| m[x / 64] >> (x % 64) & 1 == 1 && m[y / 64] >> (y % 64) & 1 == 1)
                .count();
            match pair {
                None => pair = Some((count, x, y)),
                Some((expected, x0, y0)) if count != expected => {
                    return Err(AffineViolation::PairCountNotConstant {
                        x,
                        y,
                        got: count,
                        x0,
                        y0,
                        expected,
                    });
                }
                _ => {}
            }
        }
    }
    let pair_count = pair.map(|(c, _, _)| c).unwrap_or(0);

    Ok(AffineReport { q, r, kappa, pair_count })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parallel_block_lookup_on_ag22() {
        let d = affine_from_ag(2, 2).unwrap();
        assert_eq!(d.point_count(), 4);
        assert_eq!(d.block_count(), 6);
        assert_eq!(d.kappa(), 3);
        let b = d.parallel_block_of(1, 0).unwrap();
        assert!(d.block(b).contains(&0));
        // all points of a block map back to the same block
        for class in 1..=3 {
            for &b in d.class_blocks(class).unwrap() {
                for &p in d.block(b) {
                    assert_eq!(d.parallel_block_of(class, p).unwrap(), b);
                }
            }
        }
        assert_eq!(
            d.parallel_block_of(4, 0).unwrap_err(),
            DesignError::ClassOutOfRange { class: 4, kappa: 3 }
        );
        assert_eq!(
            d.parallel_block_of(1, 9).unwrap_err(),
            DesignError::PointOutOfRange { point: 9, points: 4 }
        );
    }

    #[test]
    fn classes_partition_points() {
        for d in [affine_from_ag(2, 3).unwrap(), affine_from_ag(3, 2).unwrap()] {
            for class in 1..=d.kappa() {
                let mut seen = vec![false; d.point_count()];
                for &b in d.class_blocks(class).unwrap() {
                    for &p in d.block(b) {
                        assert!(!seen[p]);
                        seen[p] = true;
                    }
                }
                assert!(seen.iter().all(|&s| s));
            }
        }
    }

    #[test]
    fn verify_accepts_ag_designs() {
        let d = affine_from_ag(2, 3).unwrap();
        let rep = affine_verify(&d).unwrap();
        assert_eq!(rep, AffineReport { q: 2, r: 2, kappa: 7, pair_count: 3 });
        assert_eq!((rep.q, rep.r, rep.kappa), (d.q(), d.r(), d.kappa()));

        let rep = affine_verify(&affine_from_ag(2, 2).unwrap()).unwrap();
        assert_eq!(rep, AffineReport { q: 2, r: 1, kappa: 3, pair_count: 1 });

        let rep = affine_verify(&affine_from_ag(3, 2).unwrap()).unwrap();
        assert_eq!(rep, AffineReport { q: 3, r: 1, kappa: 4, pair_count: 1 });
    }

    #[test]
    fn verify_names_broken_class_after_block_deletion() {
        let d = affine_from_ag(2, 2).unwrap();
        // rebuild with the second block of class 2 dropped
        let mut class_blocks: Vec<Vec<Vec<usize>>> = (1..=d.kappa())
            .map(|c| {
                d.class_blocks(c)
                    .unwrap()
                    .iter()
                    .map(|&b| d.block(b).to_vec())
                    .collect()
            })
            .collect();
        class_blocks[1].pop();
        let broken = ResolvableDesign::from_classes(4, class_blocks, 2, 1);
        match affine_verify(&broken).unwrap_err() {
            AffineViolation::ClassSizeMismatch { class, got, expected } => {
                assert_eq!((class, got, expected), (2, 1, 2));
            }
            other => panic!("unexpected violation {other:?}"),
        }
    }

    #[test]
    fn verify_catches_overlap_and_coverage() {
        // two "classes" on 4 points with an overlap inside class 1
        let broken = ResolvableDesign::from_classes(
            4,
            vec![
                vec![vec![0, 1], vec![1, 3]],
                vec![vec![0, 2], vec![1, 3]],
            ],
            2,
            1,
        );
        assert!(matches!(
            affine_verify(&broken).unwrap_err(),
            AffineViolation::ClassBlocksOverlap { class: 1, point: 1, .. }
        ));
        let gap = ResolvableDesign::from_classes(
            4,
            vec![
                vec![vec![0, 1], vec![2, 3]],
                vec![vec![0, 2], vec![1, 2]],
            ],
            2,
            1,
        );
        assert!(matches!(
            affine_verify(&gap).unwrap_err(),
            AffineViolation::ClassBlocksOverlap { class: 2, point: 2, .. }
        ));
    }

    #[test]
    fn ag_pair_count_formula() {
        // (q^{d-1} - 1) / (q - 1) blocks through two distinct points
        for (q, d) in [(2usize, 2u32), (2, 3), (2, 4), (3, 2), (4, 2)] {
            let rep = affine_verify(&affine_from_ag(q as u64, d).unwrap()).unwrap();
            let expected = (q.pow(d - 1) - 1) / (q - 1);
            assert_eq!(rep.pair_count, expected, "AG({d},{q})");
        }
    }
}
