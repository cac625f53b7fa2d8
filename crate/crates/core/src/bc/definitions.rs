//! Definition-level membership tests and full witness sets, evaluated by
//! exhaustive scans over the ring.
//!
//! Nothing here calls the factor solvers: ideal membership is decided by
//! enumerating products, so these routines serve as the independent oracle for
//! the criterion-based procedures in the parent module.

use crate::ring::{Element, Ring};

use super::kind::{DeltaSet, InverseKind};

/// `y ∈ Rg` by scanning all left multiples.
pub fn in_left_multiples(ring: &Ring, y: Element, g: Element) -> bool {
    ring.elements().any(|s| ring.mul(s, g) == y)
}

/// `y ∈ gR` by scanning all right multiples.
pub fn in_right_multiples(ring: &Ring, y: Element, g: Element) -> bool {
    ring.elements().any(|s| ring.mul(g, s) == y)
}

/// `g1° ⊆ g2°`
pub fn right_ann_subset(ring: &Ring, g1: Element, g2: Element) -> bool {
    ring.elements()
        .all(|x| !ring.is_zero(ring.mul(g1, x)) || ring.is_zero(ring.mul(g2, x)))
}

/// `°g1 ⊆ °g2`
pub fn left_ann_subset(ring: &Ring, g1: Element, g2: Element) -> bool {
    ring.elements()
        .all(|x| !ring.is_zero(ring.mul(x, g1)) || ring.is_zero(ring.mul(x, g2)))
}

/// Membership mask of `Rg`, indexed by element code.
pub fn left_multiples_mask(ring: &Ring, g: Element) -> Vec<bool> {
    let mut mask = vec![false; ring.cardinality()];
    for s in ring.elements() {
        mask[ring.mul(s, g).code() as usize] = true;
    }
    mask
}

/// Membership mask of `gR`.
pub fn right_multiples_mask(ring: &Ring, g: Element) -> Vec<bool> {
    let mut mask = vec![false; ring.cardinality()];
    for s in ring.elements() {
        mask[ring.mul(g, s).code() as usize] = true;
    }
    mask
}

/// Membership mask of `g° = {x : gx = 0}`.
pub fn right_ann_mask(ring: &Ring, g: Element) -> Vec<bool> {
    ring.elements().map(|x| ring.is_zero(ring.mul(g, x))).collect()
}

/// Membership mask of `°g = {x : xg = 0}`.
pub fn left_ann_mask(ring: &Ring, g: Element) -> Vec<bool> {
    ring.elements().map(|x| ring.is_zero(ring.mul(x, g))).collect()
}

pub fn is_regular(ring: &Ring, x: Element) -> bool {
    ring.elements().any(|y| ring.product(&[x, y, x]) == x)
}

/// `Ry ⊆ Rc`, `yab = b`
pub fn is_left_bc(ring: &Ring, a: Element, b: Element, c: Element, y: Element) -> bool {
    ring.product(&[y, a, b]) == b && in_left_multiples(ring, y, c)
}

/// `yR ⊆ bR`, `cay = c`
pub fn is_right_bc(ring: &Ring, a: Element, b: Element, c: Element, y: Element) -> bool {
    ring.product(&[c, a, y]) == c && in_right_multiples(ring, y, b)
}

/// `c° ⊆ y°`, `yab = b`
pub fn is_right_ann_bc(ring: &Ring, a: Element, b: Element, c: Element, y: Element) -> bool {
    ring.product(&[y, a, b]) == b && right_ann_subset(ring, c, y)
}

/// `°b ⊆ °y`, `cay = c`
pub fn is_left_ann_bc(ring: &Ring, a: Element, b: Element, c: Element, y: Element) -> bool {
    ring.product(&[c, a, y]) == c && left_ann_subset(ring, b, y)
}

/// Drazin's original conditions: `y ∈ bRy ∩ yRc`, `yab = b`, `cay = c`.
pub fn is_two_sided_bc(ring: &Ring, a: Element, b: Element, c: Element, y: Element) -> bool {
    ring.product(&[y, a, b]) == b
        && ring.product(&[c, a, y]) == c
        && ring.elements().any(|r| ring.product(&[b, r, y]) == y)
        && ring.elements().any(|r| ring.product(&[y, r, c]) == y)
}

/// `yay = y`, `yR = bR`, `y° = c°`
pub fn is_hybrid_bc(ring: &Ring, a: Element, b: Element, c: Element, y: Element) -> bool {
    ring.product(&[y, a, y]) == y
        && in_right_multiples(ring, y, b)
        && in_right_multiples(ring, b, y)
        && right_ann_subset(ring, y, c)
        && right_ann_subset(ring, c, y)
}

/// `yay = y`, `°b = °y`, `y° = c°`
pub fn is_ann_bc(ring: &Ring, a: Element, b: Element, c: Element, y: Element) -> bool {
    ring.product(&[y, a, y]) == y
        && left_ann_subset(ring, b, y)
        && left_ann_subset(ring, y, b)
        && right_ann_subset(ring, y, c)
        && right_ann_subset(ring, c, y)
}

/// `yad = d`, `Ry ⊆ Rd`
pub fn is_mary_left(ring: &Ring, a: Element, d: Element, y: Element) -> bool {
    ring.product(&[y, a, d]) == d && in_left_multiples(ring, y, d)
}

/// `day = d`, `yR ⊆ dR`
pub fn is_mary_right(ring: &Ring, a: Element, d: Element, y: Element) -> bool {
    ring.product(&[d, a, y]) == d && in_right_multiples(ring, y, d)
}

/// `yad = d = day`, `yR ⊆ dR`, `Ry ⊆ Rd`
pub fn is_mary(ring: &Ring, a: Element, d: Element, y: Element) -> bool {
    is_mary_left(ring, a, d, y) && is_mary_right(ring, a, d, y)
}

pub fn is_delta(ring: &Ring, a: Element, delta: DeltaSet, y: Element) -> bool {
    let ay = ring.mul(a, y);
    let ya = ring.mul(y, a);
    delta.equations().all(|e| match e {
        1 => ring.mul(ay, a) == a,
        2 => ring.mul(y, ay) == y,
        3 => ring.star(ay) == ay,
        4 => ring.star(ya) == ya,
        _ => unreachable!("delta sets only hold 1..=4"),
    })
}

/// `ya = ay`, `yay = y`, `a^k = a^(k+1) y` with `k = |R|`, which bounds every index.
pub fn is_drazin(ring: &Ring, a: Element, y: Element) -> bool {
    let k = ring.cardinality() as u32;
    is_drazin_with_index(ring, a, y, k)
}

pub fn is_drazin_with_index(ring: &Ring, a: Element, y: Element, k: u32) -> bool {
    ring.mul(y, a) == ring.mul(a, y)
        && ring.product(&[y, a, y]) == y
        && ring.pow(a, k) == ring.mul(ring.pow(a, k + 1), y)
}

/// `ya = ay`, `yay = y`, `aya = a`
pub fn is_group(ring: &Ring, a: Element, y: Element) -> bool {
    ring.mul(y, a) == ring.mul(a, y)
        && ring.product(&[y, a, y]) == y
        && ring.product(&[a, y, a]) == a
}

/// Definition-level check of `y` against `kind`, using the conventions of
/// [`super::Witness`] for the roles of `b` and `c`.
pub fn satisfies(
    ring: &Ring,
    kind: InverseKind,
    a: Element,
    b: Element,
    c: Element,
    y: Element,
) -> bool {
    match kind {
        InverseKind::LeftBc => is_left_bc(ring, a, b, c, y),
        InverseKind::RightBc => is_right_bc(ring, a, b, c, y),
        InverseKind::RightAnnBc => is_right_ann_bc(ring, a, b, c, y),
        InverseKind::LeftAnnBc => is_left_ann_bc(ring, a, b, c, y),
        InverseKind::TwoSidedBc => is_two_sided_bc(ring, a, b, c, y),
        InverseKind::HybridBc => is_hybrid_bc(ring, a, b, c, y),
        InverseKind::AnnBc => is_ann_bc(ring, a, b, c, y),
        InverseKind::MaryLeft => is_mary_left(ring, a, b, y),
        InverseKind::MaryRight => is_mary_right(ring, a, b, y),
        InverseKind::Mary => is_mary(ring, a, b, y),
        InverseKind::Delta(set) => is_delta(ring, a, set, y),
        InverseKind::MoorePenrose => is_delta(ring, a, DeltaSet::ALL, y),
        InverseKind::Group => is_group(ring, a, y),
        InverseKind::Drazin => is_drazin(ring, a, y),
    }
}

/// All witnesses of `kind` for the given inputs, sorted by code.
pub fn witness_set(ring: &Ring, kind: InverseKind, a: Element, b: Element, c: Element) -> Vec<Element> {
    match kind {
        InverseKind::LeftBc => left_bc_set(ring, a, b, c),
        InverseKind::RightBc => right_bc_set(ring, a, b, c),
        InverseKind::RightAnnBc => right_ann_bc_set(ring, a, b, c),
        InverseKind::LeftAnnBc => left_ann_bc_set(ring, a, b, c),
        InverseKind::MaryLeft => left_bc_set(ring, a, b, b),
        InverseKind::MaryRight => right_bc_set(ring, a, b, b),
        _ => ring.elements().filter(|&y| satisfies(ring, kind, a, b, c, y)).collect(),
    }
}

pub fn left_bc_set(ring: &Ring, a: Element, b: Element, c: Element) -> Vec<Element> {
    let rc = left_multiples_mask(ring, c);
    ring.elements()
        .filter(|&y| rc[y.code() as usize] && ring.product(&[y, a, b]) == b)
        .collect()
}

pub fn right_bc_set(ring: &Ring, a: Element, b: Element, c: Element) -> Vec<Element> {
    let br = right_multiples_mask(ring, b);
    ring.elements()
        .filter(|&y| br[y.code() as usize] && ring.product(&[c, a, y]) == c)
        .collect()
}

pub fn right_ann_bc_set(ring: &Ring, a: Element, b: Element, c: Element) -> Vec<Element> {
    let c_ann: Vec<Element> = ring.elements().filter(|&x| ring.is_zero(ring.mul(c, x))).collect();
    ring.elements()
        .filter(|&y| {
            ring.product(&[y, a, b]) == b && c_ann.iter().all(|&x| ring.is_zero(ring.mul(y, x)))
        })
        .collect()
}

pub fn left_ann_bc_set(ring: &Ring, a: Element, b: Element, c: Element) -> Vec<Element> {
    let ann_b: Vec<Element> = ring.elements().filter(|&x| ring.is_zero(ring.mul(x, b))).collect();
    ring.elements()
        .filter(|&y| {
            ring.product(&[c, a, y]) == c && ann_b.iter().all(|&x| ring.is_zero(ring.mul(x, y)))
        })
        .collect()
}

pub fn delta_set(ring: &Ring, a: Element, delta: DeltaSet) -> Vec<Element> {
    ring.elements().filter(|&y| is_delta(ring, a, delta, y)).collect()
}
