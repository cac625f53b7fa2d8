//! Jacobson's lemma with explicit inverse formulas, and one-sided
//! `(b, c)`-invertibility of perturbations `α` of a `(b, c)`-invertible `a`.

use serde::Serialize;
use thiserror::Error;

use crate::bc::{check_two_sided_bc, definitions, left_bc_exists, right_bc_exists};
use crate::ideal::Side;
use crate::ring::{Element, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PerturbationError {
    #[error("precondition violated: {0}")]
    Precondition(&'static str),
    #[error("formula check failed: {0}")]
    FormulaFailed(&'static str),
    #[error("given element is not the (b,c)-inverse of a")]
    NotBcInverse,
    #[error("equivalence violated at {0}")]
    EquivalenceViolated(String),
}

fn one_plus(ring: &Ring, x: Element) -> Element {
    ring.add(ring.one(), x)
}

/// Given `y (1 + ab) = 1`, returns `1 − bya`, a left inverse of `1 + ba`.
pub fn jacobson_left(ring: &Ring, a: Element, b: Element, y: Element) -> Result<Element, PerturbationError> {
    let one = ring.one();
    if ring.mul(y, one_plus(ring, ring.mul(a, b))) != one {
        return Err(PerturbationError::Precondition("y·(1 + a·b) = 1"));
    }
    let r = ring.sub(one, ring.product(&[b, y, a]));
    if ring.mul(r, one_plus(ring, ring.mul(b, a))) != one {
        return Err(PerturbationError::FormulaFailed("(1 - b·y·a)·(1 + b·a) = 1"));
    }
    Ok(r)
}

/// Given `(1 + ab) x = 1`, returns `1 − bxa`, a right inverse of `1 + ba`.
pub fn jacobson_right(ring: &Ring, a: Element, b: Element, x: Element) -> Result<Element, PerturbationError> {
    let one = ring.one();
    if ring.mul(one_plus(ring, ring.mul(a, b)), x) != one {
        return Err(PerturbationError::Precondition("(1 + a·b)·x = 1"));
    }
    let r = ring.sub(one, ring.product(&[b, x, a]));
    if ring.mul(one_plus(ring, ring.mul(b, a)), r) != one {
        return Err(PerturbationError::FormulaFailed("(1 + b·a)·(1 - b·x·a) = 1"));
    }
    Ok(r)
}

/// Given `inv = (1 + ab)⁻¹`, returns `(1 + ba)⁻¹ = 1 − b·inv·a`.
pub fn jacobson_inverse(ring: &Ring, a: Element, b: Element, inv: Element) -> Result<Element, PerturbationError> {
    let one = ring.one();
    let u = one_plus(ring, ring.mul(a, b));
    if ring.mul(inv, u) != one || ring.mul(u, inv) != one {
        return Err(PerturbationError::Precondition("inv is the inverse of 1 + a·b"));
    }
    let r = ring.sub(one, ring.product(&[b, inv, a]));
    let v = one_plus(ring, ring.mul(b, a));
    if ring.mul(r, v) != one || ring.mul(v, r) != one {
        return Err(PerturbationError::FormulaFailed("(1 + b·a)⁻¹ = 1 - b·(1 + a·b)⁻¹·a"));
    }
    Ok(r)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Perturbed {
    pub invertible: bool,
    /// (i) `α` one-sided `(b, c)`-invertible, (ii) `α` opposite annihilator
    /// `(b, c)`-invertible, (iii) `1 + (α − a)a⊗` and (iv) `1 + a⊗(α − a)`
    /// one-sided invertible on the same side.
    pub conditions: [bool; 4],
}

/// Decides whether `α` is left (or right) `(b, c)`-invertible through the four
/// equivalent conditions, where `a_bc` is the `(b, c)`-inverse of `a`.
///
/// All four conditions are evaluated independently and must agree; a
/// disagreement is reported with the full input tuple.
pub fn perturbed_one_sided(
    ring: &Ring,
    a: Element,
    b: Element,
    c: Element,
    a_bc: Element,
    alpha: Element,
    side: Side,
) -> Result<Perturbed, PerturbationError> {
    if !check_two_sided_bc(ring, a, b, c, a_bc) {
        return Err(PerturbationError::NotBcInverse);
    }
    let diff = ring.sub(alpha, a);
    let u = one_plus(ring, ring.mul(diff, a_bc));
    let v = one_plus(ring, ring.mul(a_bc, diff));
    let conditions = match side {
        Side::Left => [
            left_bc_exists(ring, alpha, b, c),
            !definitions::right_ann_bc_set(ring, alpha, b, c).is_empty(),
            ring.left_invertible(u).is_some(),
            ring.left_invertible(v).is_some(),
        ],
        Side::Right => [
            right_bc_exists(ring, alpha, b, c),
            !definitions::left_ann_bc_set(ring, alpha, b, c).is_empty(),
            ring.right_invertible(u).is_some(),
            ring.right_invertible(v).is_some(),
        ],
    };
    if conditions.iter().any(|&x| x != conditions[0]) {
        let f = |x| ring.format_element(x);
        return Err(PerturbationError::EquivalenceViolated(format!(
            "{side:?} a={} b={} c={} a_bc={} alpha={} conditions={conditions:?}",
            f(a),
            f(b),
            f(c),
            f(a_bc),
            f(alpha)
        )));
    }
    Ok(Perturbed { invertible: conditions[0], conditions })
}
