//! One-sided `(b, c)`-invertibility of a product `paq`, split onto `pa` and `aq`
//! or transferred onto `a`, with explicit witness maps between the factors.

use thiserror::Error;

use crate::bc::{
    check_left_bc, check_right_bc, check_two_sided_bc, left_bc, right_bc, two_sided_bc,
    InverseError, Sidedness,
};
use crate::ideal::{solve_left_factor, solve_right_factor};
use crate::ring::{Element, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProductError {
    #[error("precondition unsatisfied: no {0}")]
    PreconditionUnsatisfied(&'static str),
    #[error(transparent)]
    Inverse(#[from] InverseError),
}

fn inconsistent(procedure: &'static str, detail: impl Into<String>) -> ProductError {
    ProductError::Inverse(InverseError::Inconsistent { procedure, detail: detail.into() })
}

/// Outcome of splitting `paq` onto `pa` and `aq`.
///
/// `y` is the computed witness for `paq`; `x = q y` and `z = y p` are its images
/// for `pa` and `aq`; `y_composed = z' a x'` is rebuilt from independently
/// computed witnesses `x'`, `z'` of the factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Split {
    pub exists: bool,
    pub y: Option<Element>,
    pub x: Option<Element>,
    pub z: Option<Element>,
    pub y_composed: Option<Element>,
}

type Solver = fn(&Ring, Element, Element, Element) -> Option<crate::bc::Witness>;
type Checker = fn(&Ring, Element, Element, Element, Element) -> bool;

fn split(
    ring: &Ring,
    [p, a, q, b, c]: [Element; 5],
    solve: Solver,
    check: Checker,
    procedure: &'static str,
) -> Result<Split, ProductError> {
    let paq = ring.product(&[p, a, q]);
    let (pa, aq) = (ring.mul(p, a), ring.mul(a, q));
    let (qb, cp) = (ring.mul(q, b), ring.mul(c, p));

    let whole = solve(ring, paq, b, c).map(|w| w.y);
    let left_factor = solve(ring, pa, qb, c).map(|w| w.y);
    let right_factor = solve(ring, aq, b, cp).map(|w| w.y);
    let exists = whole.is_some();
    if exists != (left_factor.is_some() && right_factor.is_some()) {
        return Err(inconsistent(procedure, "paq and its factors disagree on existence"));
    }

    let (x, z) = match whole {
        Some(y) => {
            let (x, z) = (ring.mul(q, y), ring.mul(y, p));
            if !check(ring, pa, qb, c, x) || !check(ring, aq, b, cp, z) {
                return Err(inconsistent(procedure, "x = q·y or z = y·p fails its recheck"));
            }
            (Some(x), Some(z))
        }
        None => (None, None),
    };
    let y_composed = match (left_factor, right_factor) {
        (Some(x), Some(z)) => {
            let y = ring.product(&[z, a, x]);
            if !check(ring, paq, b, c, y) {
                return Err(inconsistent(procedure, "y = z·a·x fails its recheck"));
            }
            Some(y)
        }
        _ => None,
    };
    Ok(Split { exists, y: whole, x, z, y_composed })
}

/// `paq` left `(b, c)`-invertible ⟺ `pa` left `(qb, c)`- and `aq` left `(b, cp)`-invertible.
pub fn split_left(
    ring: &Ring,
    p: Element,
    a: Element,
    q: Element,
    b: Element,
    c: Element,
) -> Result<Split, ProductError> {
    split(ring, [p, a, q, b, c], left_bc, check_left_bc, "split_left")
}

/// `paq` right `(b, c)`-invertible ⟺ `pa` right `(qb, c)`- and `aq` right `(b, cp)`-invertible.
pub fn split_right(
    ring: &Ring,
    p: Element,
    a: Element,
    q: Element,
    b: Element,
    c: Element,
) -> Result<Split, ProductError> {
    split(ring, [p, a, q, b, c], right_bc, check_right_bc, "split_right")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transfer {
    pub exists: bool,
    /// `w = q y p`, a witness for `a` with respect to `(qb, cp)`.
    pub w: Option<Element>,
    pub q_prime: Option<Element>,
    pub p_prime: Option<Element>,
}

/// Transfers invertibility between `paq` (w.r.t. `(b, c)`) and `a` (w.r.t. `(qb, cp)`).
///
/// The left version needs `q'` with `q'qb = b`, the right one `p'` with
/// `cpp' = c`; `Both` needs both. A missing `q'`/`p'` is an error, distinct from
/// non-existence of the inverse.
pub fn transfer(
    ring: &Ring,
    p: Element,
    a: Element,
    q: Element,
    b: Element,
    c: Element,
    side: Sidedness,
) -> Result<Transfer, ProductError> {
    let (qb, cp) = (ring.mul(q, b), ring.mul(c, p));
    let needs_q = matches!(side, Sidedness::Left | Sidedness::Both);
    let needs_p = matches!(side, Sidedness::Right | Sidedness::Both);
    let q_prime = if needs_q {
        Some(solve_left_factor(ring, b, qb).ok_or(ProductError::PreconditionUnsatisfied("q′ with q′·q·b = b"))?)
    } else {
        None
    };
    let p_prime = if needs_p {
        Some(solve_right_factor(ring, c, cp).ok_or(ProductError::PreconditionUnsatisfied("p′ with c·p·p′ = c"))?)
    } else {
        None
    };

    let paq = ring.product(&[p, a, q]);
    let (whole, reduced, check): (Option<Element>, bool, Checker) = match side {
        Sidedness::Left => (
            left_bc(ring, paq, b, c).map(|w| w.y),
            left_bc(ring, a, qb, cp).is_some(),
            check_left_bc,
        ),
        Sidedness::Right => (
            right_bc(ring, paq, b, c).map(|w| w.y),
            right_bc(ring, a, qb, cp).is_some(),
            check_right_bc,
        ),
        Sidedness::Both => (
            two_sided_bc(ring, paq, b, c)?.map(|w| w.y),
            two_sided_bc(ring, a, qb, cp)?.is_some(),
            check_two_sided_bc,
        ),
    };
    if whole.is_some() != reduced {
        return Err(inconsistent("transfer", "paq and a disagree on existence"));
    }
    let w = whole.map(|y| ring.product(&[q, y, p]));
    if let Some(w) = w {
        if !check(ring, a, qb, cp, w) {
            return Err(inconsistent("transfer", "w = q·y·p fails its recheck"));
        }
    }
    Ok(Transfer { exists: whole.is_some(), w, q_prime, p_prime })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mixed {
    pub exists: bool,
    /// `y = z a x` from a right `(qb, qc)`-inverse `x` of `pa` and a left
    /// `(bp, cp)`-inverse `z` of `aq`.
    pub y: Option<Element>,
    pub q_prime: Element,
    pub p_prime: Element,
}

/// `paq` is `(b, c)`-invertible ⟺ `pa` right `(qb, qc)`- and `aq` left
/// `(bp, cp)`-invertible, given `q'qc = c` and `bpp' = b`.
pub fn mixed_transfer(
    ring: &Ring,
    p: Element,
    a: Element,
    q: Element,
    b: Element,
    c: Element,
) -> Result<Mixed, ProductError> {
    let q_prime = solve_left_factor(ring, c, ring.mul(q, c))
        .ok_or(ProductError::PreconditionUnsatisfied("q′ with q′·q·c = c"))?;
    let p_prime = solve_right_factor(ring, b, ring.mul(b, p))
        .ok_or(ProductError::PreconditionUnsatisfied("p′ with b·p·p′ = b"))?;

    let paq = ring.product(&[p, a, q]);
    let whole = two_sided_bc(ring, paq, b, c)?.map(|w| w.y);
    let x = right_bc(ring, ring.mul(p, a), ring.mul(q, b), ring.mul(q, c)).map(|w| w.y);
    let z = left_bc(ring, ring.mul(a, q), ring.mul(b, p), ring.mul(c, p)).map(|w| w.y);
    let y = match (x, z) {
        (Some(x), Some(z)) => Some(ring.product(&[z, a, x])),
        _ => None,
    };
    if whole.is_some() != y.is_some() {
        return Err(inconsistent("mixed_transfer", "paq and its factors disagree on existence"));
    }
    if let Some(y) = y {
        // The (b, c)-inverse is unique, so the composed witness must be it.
        if !check_two_sided_bc(ring, paq, b, c, y) || whole != Some(y) {
            return Err(inconsistent("mixed_transfer", "y = z·a·x is not the (b,c)-inverse of paq"));
        }
    }
    Ok(Mixed { exists: y.is_some(), y, q_prime, p_prime })
}
