//! Decision procedures and witness constructions for one-sided `(b, c)`-inverses
//! and the related generalized inverses.
//!
//! One-sided existence is decided through the ideal criteria `Rb = Rcab` and
//! `cR = cabR`, solved as factor equations; witnesses are then built from the
//! factor (`y = s c` or `y = b t`). Notions without such a criterion are searched
//! exhaustively. Every returned witness carries product-equation certificates.

pub mod definitions;
mod kind;

pub use kind::{Certificate, CertificateJson, DeltaSet, InverseError, InverseKind, Witness, WitnessJson};

use crate::ideal::{
    ideal_eq_cr_cabr, ideal_eq_rb_rcab, left_factor_exists, right_factor_exists, solve_right_factor,
};
use crate::ring::{Element, Ring};
use kind::inconsistent;

/// Which one-sided version(s) of a notion to decide.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sidedness {
    Left,
    Right,
    Both,
}

/// Existence of a left `(b, c)`-inverse: `b ∈ Rcab`.
pub fn left_bc_exists(ring: &Ring, a: Element, b: Element, c: Element) -> bool {
    left_factor_exists(ring, b, ring.product(&[c, a, b]))
}

/// Existence of a right `(b, c)`-inverse: `c ∈ cabR`.
pub fn right_bc_exists(ring: &Ring, a: Element, b: Element, c: Element) -> bool {
    right_factor_exists(ring, c, ring.product(&[c, a, b]))
}

/// Solver-backed check that `y` is a left `(b, c)`-inverse of `a`: `yab = b`, `y ∈ Rc`.
pub fn check_left_bc(ring: &Ring, a: Element, b: Element, c: Element, y: Element) -> bool {
    ring.product(&[y, a, b]) == b && left_factor_exists(ring, y, c)
}

/// Solver-backed check that `y` is a right `(b, c)`-inverse of `a`: `cay = c`, `y ∈ bR`.
pub fn check_right_bc(ring: &Ring, a: Element, b: Element, c: Element, y: Element) -> bool {
    ring.product(&[c, a, y]) == c && right_factor_exists(ring, y, b)
}

/// A simultaneous left and right `(b, c)`-inverse is the `(b, c)`-inverse.
pub fn check_two_sided_bc(ring: &Ring, a: Element, b: Element, c: Element, y: Element) -> bool {
    check_left_bc(ring, a, b, c, y) && check_right_bc(ring, a, b, c, y)
}

/// Left `(b, c)`-inverse `y = s c`, where `s` is the least solution of `s c a b = b`.
pub fn left_bc(ring: &Ring, a: Element, b: Element, c: Element) -> Option<Witness> {
    let s = ideal_eq_rb_rcab(ring, a, b, c)?;
    let y = ring.mul(s, c);
    Some(Witness {
        kind: InverseKind::LeftBc,
        a,
        b,
        c,
        y,
        index: None,
        certificate: vec![
            Certificate::new("y = s·c", &[("s", s)], &[s, c], y),
            Certificate::new("y·a·b = b", &[], &[y, a, b], b),
        ],
    })
}

/// Right `(b, c)`-inverse `y = b t`, where `t` is the least solution of `c a b t = c`.
pub fn right_bc(ring: &Ring, a: Element, b: Element, c: Element) -> Option<Witness> {
    let t = ideal_eq_cr_cabr(ring, a, b, c)?;
    let y = ring.mul(b, t);
    Some(Witness {
        kind: InverseKind::RightBc,
        a,
        b,
        c,
        y,
        index: None,
        certificate: vec![
            Certificate::new("y = b·t", &[("t", t)], &[b, t], y),
            Certificate::new("c·a·y = c", &[], &[c, a, y], c),
        ],
    })
}

/// Right annihilator `(b, c)`-inverse: `c° ⊆ y°` and `yab = b`.
///
/// When `c` is regular the witness sets of this notion and of [`left_bc`]
/// coincide and the left construction is reused; otherwise the least `y` is
/// found by scanning.
pub fn right_ann_bc(ring: &Ring, a: Element, b: Element, c: Element) -> Option<Witness> {
    if definitions::is_regular(ring, c) {
        return left_bc(ring, a, b, c).map(|w| Witness { kind: InverseKind::RightAnnBc, ..w });
    }
    let c_ann: Vec<Element> = ring.elements().filter(|&x| ring.is_zero(ring.mul(c, x))).collect();
    let y = ring.elements().find(|&y| {
        ring.product(&[y, a, b]) == b && c_ann.iter().all(|&x| ring.is_zero(ring.mul(y, x)))
    })?;
    Some(Witness {
        kind: InverseKind::RightAnnBc,
        a,
        b,
        c,
        y,
        index: None,
        certificate: vec![Certificate::new("y·a·b = b", &[], &[y, a, b], b)],
    })
}

/// Left annihilator `(b, c)`-inverse: `°b ⊆ °y` and `cay = c`. Mirror of [`right_ann_bc`].
pub fn left_ann_bc(ring: &Ring, a: Element, b: Element, c: Element) -> Option<Witness> {
    if definitions::is_regular(ring, b) {
        return right_bc(ring, a, b, c).map(|w| Witness { kind: InverseKind::LeftAnnBc, ..w });
    }
    let ann_b: Vec<Element> = ring.elements().filter(|&x| ring.is_zero(ring.mul(x, b))).collect();
    let y = ring.elements().find(|&y| {
        ring.product(&[c, a, y]) == c && ann_b.iter().all(|&x| ring.is_zero(ring.mul(x, y)))
    })?;
    Some(Witness {
        kind: InverseKind::LeftAnnBc,
        a,
        b,
        c,
        y,
        index: None,
        certificate: vec![Certificate::new("c·a·y = c", &[], &[c, a, y], c)],
    })
}

/// The `(b, c)`-inverse, built as `y = s c = b t` from the two one-sided criteria.
pub fn two_sided_bc(
    ring: &Ring,
    a: Element,
    b: Element,
    c: Element,
) -> Result<Option<Witness>, InverseError> {
    let (Some(left), Some(right)) = (left_bc(ring, a, b, c), right_bc(ring, a, b, c)) else {
        return Ok(None);
    };
    let (s, t) = (left.certificate[0].aux[0].1, right.certificate[0].aux[0].1);
    let y = left.y;
    if y != right.y {
        return Err(inconsistent(
            "two_sided_bc",
            format!(
                "s·c = {} but b·t = {}",
                ring.format_element(y),
                ring.format_element(right.y)
            ),
        ));
    }
    let witness = Witness {
        kind: InverseKind::TwoSidedBc,
        a,
        b,
        c,
        y,
        index: None,
        certificate: vec![
            Certificate::new("y = s·c", &[("s", s)], &[s, c], y),
            Certificate::new("y = b·t", &[("t", t)], &[b, t], y),
            Certificate::new("y·a·b = b", &[], &[y, a, b], b),
            Certificate::new("c·a·y = c", &[], &[c, a, y], c),
            // y = b(ta)y and y = y(as)c place y in bRy ∩ yRc.
            Certificate::new("y = b·(t·a)·y", &[("t", t)], &[b, t, a, y], y),
            Certificate::new("y = y·(a·s)·c", &[("s", s)], &[y, a, s, c], y),
        ],
    };
    if !witness.certificate.iter().all(|cert| cert.holds(ring)) {
        return Err(inconsistent("two_sided_bc", "certificate recheck failed"));
    }
    Ok(Some(witness))
}

/// Hybrid `(b, c)`-inverse: `yay = y`, `yR = bR`, `y° = c°`.
pub fn hybrid_bc(ring: &Ring, a: Element, b: Element, c: Element) -> Option<Witness> {
    let y = ring
        .elements()
        .find(|&y| definitions::is_hybrid_bc(ring, a, b, c, y))?;
    let u = solve_right_factor(ring, b, y).expect("b ∈ yR");
    let v = solve_right_factor(ring, y, b).expect("y ∈ bR");
    Some(Witness {
        kind: InverseKind::HybridBc,
        a,
        b,
        c,
        y,
        index: None,
        certificate: vec![
            Certificate::new("y·a·y = y", &[], &[y, a, y], y),
            Certificate::new("b = y·u", &[("u", u)], &[y, u], b),
            Certificate::new("y = b·v", &[("v", v)], &[b, v], y),
        ],
    })
}

/// Annihilator `(b, c)`-inverse: `yay = y`, `°b = °y`, `y° = c°`.
pub fn ann_bc(ring: &Ring, a: Element, b: Element, c: Element) -> Option<Witness> {
    let y = ring.elements().find(|&y| definitions::is_ann_bc(ring, a, b, c, y))?;
    Some(Witness {
        kind: InverseKind::AnnBc,
        a,
        b,
        c,
        y,
        index: None,
        certificate: vec![Certificate::new("y·a·y = y", &[], &[y, a, y], y)],
    })
}

/// (One-sided) inverse along `d`, reduced to the `(d, d)` case.
pub fn inverse_along(
    ring: &Ring,
    a: Element,
    d: Element,
    side: Sidedness,
) -> Result<Option<Witness>, InverseError> {
    let relabel = |w: Witness, kind| Witness { kind, ..w };
    match side {
        Sidedness::Left => Ok(left_bc(ring, a, d, d).map(|w| relabel(w, InverseKind::MaryLeft))),
        Sidedness::Right => Ok(right_bc(ring, a, d, d).map(|w| relabel(w, InverseKind::MaryRight))),
        Sidedness::Both => {
            let Some(mut w) = two_sided_bc(ring, a, d, d)? else {
                return Ok(None);
            };
            w.kind = InverseKind::Mary;
            let y = w.y;
            w.certificate.push(Certificate::new("y·a·d = d", &[], &[y, a, d], d));
            w.certificate.push(Certificate::new("d·a·y = d", &[], &[d, a, y], d));
            if !w.certificate.iter().all(|cert| cert.holds(ring)) {
                return Err(inconsistent("inverse_along", "yad = d = day fails"));
            }
            Ok(Some(w))
        }
    }
}

/// All `y` satisfying the selected Penrose equations, sorted by code.
///
/// For `{1,3}` and `{1,4}` existence is cross-checked against `right_bc(a, 1, a*)`
/// and `left_bc(a, a*, 1)`.
pub fn delta_inverses(ring: &Ring, a: Element, delta: DeltaSet) -> Result<Vec<Element>, InverseError> {
    let found = definitions::delta_set(ring, a, delta);
    let a_star = ring.star(a);
    let one = ring.one();
    let bridge = if delta == DeltaSet::new(&[1, 3]).expect("valid") {
        Some(right_bc_exists(ring, a, one, a_star))
    } else if delta == DeltaSet::new(&[1, 4]).expect("valid") {
        Some(left_bc_exists(ring, a, a_star, one))
    } else {
        None
    };
    if let Some(expected) = bridge {
        if expected == found.is_empty() {
            return Err(inconsistent(
                "delta_inverses",
                format!("{delta}-inverses of {} disagree with the (b,c) bridge", ring.format_element(a)),
            ));
        }
    }
    Ok(found)
}

/// Inner inverse (`aya = a`) of least code.
pub fn inner_inverse(ring: &Ring, a: Element) -> Option<Element> {
    ring.elements().find(|&y| ring.product(&[a, y, a]) == a)
}

/// Moore–Penrose inverse. Existence via `left_bc(a, a*, 1) ∧ right_bc(a, 1, a*)`,
/// witness from the four-equation search; the two routes must agree.
pub fn moore_penrose(ring: &Ring, a: Element) -> Result<Option<Witness>, InverseError> {
    let a_star = ring.star(a);
    let one = ring.one();
    let by_criterion = left_bc_exists(ring, a, a_star, one) && right_bc_exists(ring, a, one, a_star);
    let found = definitions::delta_set(ring, a, DeltaSet::ALL);
    if found.len() > 1 {
        return Err(inconsistent("moore_penrose", "more than one Moore-Penrose inverse"));
    }
    if by_criterion != !found.is_empty() {
        return Err(inconsistent(
            "moore_penrose",
            format!("criterion says {by_criterion} for {}", ring.format_element(a)),
        ));
    }
    Ok(found.first().map(|&y| Witness {
        kind: InverseKind::MoorePenrose,
        a,
        b: a_star,
        c: a_star,
        y,
        index: None,
        certificate: penrose_certificates(ring, a, y, DeltaSet::ALL),
    }))
}

/// One certificate per selected Penrose equation; the star equations use
/// `(ay)* = y*a*` and `(ya)* = a*y*`.
fn penrose_certificates(ring: &Ring, a: Element, y: Element, delta: DeltaSet) -> Vec<Certificate> {
    let (a_star, y_star) = (ring.star(a), ring.star(y));
    delta
        .equations()
        .map(|e| match e {
            1 => Certificate::new("a·y·a = a", &[], &[a, y, a], a),
            2 => Certificate::new("y·a·y = y", &[], &[y, a, y], y),
            3 => Certificate::new("(a·y)* = a·y", &[], &[y_star, a_star], ring.mul(a, y)),
            _ => Certificate::new("(y·a)* = y·a", &[], &[a_star, y_star], ring.mul(y, a)),
        })
        .collect()
}

/// Least `n ≥ 1` and least-code `x` with `a^n = x a^(n+1)` (left) or
/// `a^n = a^(n+1) x` (right), cross-checked against `left_bc(a, a^n, 1)` /
/// `right_bc(a, 1, a^n)`.
pub fn pi_regular(
    ring: &Ring,
    a: Element,
    side: crate::ideal::Side,
) -> Result<Option<(u32, Element)>, InverseError> {
    use crate::ideal::Side;
    let one = ring.one();
    for n in 1..=ring.cardinality() as u32 {
        let an = ring.pow(a, n);
        let an1 = ring.mul(an, a);
        let x = match side {
            Side::Left => ring.elements().find(|&x| ring.mul(x, an1) == an),
            Side::Right => ring.elements().find(|&x| ring.mul(an1, x) == an),
        };
        let bridge = match side {
            Side::Left => left_bc_exists(ring, a, an, one),
            Side::Right => right_bc_exists(ring, a, one, an),
        };
        if bridge != x.is_some() {
            return Err(inconsistent("pi_regular", format!("bridge disagrees at n = {n}")));
        }
        if let Some(x) = x {
            return Ok(Some((n, x)));
        }
    }
    Ok(None)
}

/// Drazin index: least `k ≥ 1` at which `a` is both left and right π-regular.
pub fn drazin_index(ring: &Ring, a: Element) -> Result<Option<u32>, InverseError> {
    use crate::ideal::Side;
    let left = pi_regular(ring, a, Side::Left)?;
    let right = pi_regular(ring, a, Side::Right)?;
    Ok(match (left, right) {
        (Some((l, _)), Some((r, _))) => Some(l.max(r)),
        _ => None,
    })
}

/// Drazin inverse with its index. Cross-checked against `two_sided_bc(a, a^k, a^k)`.
pub fn drazin(ring: &Ring, a: Element) -> Result<Option<Witness>, InverseError> {
    let Some(k) = drazin_index(ring, a)? else {
        return Ok(None);
    };
    let ak = ring.pow(a, k);
    let ak1 = ring.mul(ak, a);
    let found: Vec<Element> = ring
        .elements()
        .filter(|&y| definitions::is_drazin_with_index(ring, a, y, k))
        .collect();
    if found.len() > 1 {
        return Err(inconsistent("drazin", "more than one Drazin inverse"));
    }
    let via_bc = two_sided_bc(ring, a, ak, ak)?;
    if via_bc.as_ref().map(|w| w.y) != found.first().copied() {
        return Err(inconsistent(
            "drazin",
            format!("(a^k, a^k)-inverse disagrees for {}", ring.format_element(a)),
        ));
    }
    Ok(found.first().map(|&y| {
        let ay = ring.mul(a, y);
        Witness {
            kind: InverseKind::Drazin,
            a,
            b: ak,
            c: ak,
            y,
            index: Some(k),
            certificate: vec![
                Certificate::new("y·a = a·y", &[], &[y, a], ay),
                Certificate::new("y·a·y = y", &[], &[y, a, y], y),
                Certificate::new("a^k = a^(k+1)·y", &[], &[ak1, y], ak),
            ],
        }
    }))
}

/// Group inverse: the Drazin inverse when the index is 1.
pub fn group(ring: &Ring, a: Element) -> Result<Option<Witness>, InverseError> {
    Ok(drazin(ring, a)?
        .filter(|w| w.index == Some(1))
        .map(|w| Witness { kind: InverseKind::Group, index: None, ..w }))
}

/// Least-code `x` with `a = a a* a x` (left) or `a = x a a* a` (right),
/// cross-checked against `left_bc(a, a*, a*)` / `right_bc(a, a*, a*)`.
pub fn star_regular(
    ring: &Ring,
    a: Element,
    side: crate::ideal::Side,
) -> Result<Option<Element>, InverseError> {
    use crate::ideal::Side;
    let a_star = ring.star(a);
    let core = ring.product(&[a, a_star, a]);
    let (x, bridge) = match side {
        Side::Left => (
            ring.elements().find(|&x| ring.mul(core, x) == a),
            left_bc_exists(ring, a, a_star, a_star),
        ),
        Side::Right => (
            ring.elements().find(|&x| ring.mul(x, core) == a),
            right_bc_exists(ring, a, a_star, a_star),
        ),
    };
    if bridge != x.is_some() {
        return Err(inconsistent("star_regular", "bridge to (a*, a*)-invertibility disagrees"));
    }
    Ok(x)
}

/// Dispatches on `kind`. `b` doubles as `d` for Mary kinds and is ignored,
/// together with `c`, for kinds that only depend on `a`.
pub fn solve(
    ring: &Ring,
    kind: InverseKind,
    a: Element,
    b: Element,
    c: Element,
) -> Result<Option<Witness>, InverseError> {
    Ok(match kind {
        InverseKind::LeftBc => left_bc(ring, a, b, c),
        InverseKind::RightBc => right_bc(ring, a, b, c),
        InverseKind::RightAnnBc => right_ann_bc(ring, a, b, c),
        InverseKind::LeftAnnBc => left_ann_bc(ring, a, b, c),
        InverseKind::TwoSidedBc => two_sided_bc(ring, a, b, c)?,
        InverseKind::HybridBc => hybrid_bc(ring, a, b, c),
        InverseKind::AnnBc => ann_bc(ring, a, b, c),
        InverseKind::MaryLeft => inverse_along(ring, a, b, Sidedness::Left)?,
        InverseKind::MaryRight => inverse_along(ring, a, b, Sidedness::Right)?,
        InverseKind::Mary => inverse_along(ring, a, b, Sidedness::Both)?,
        InverseKind::Delta(set) => delta_inverses(ring, a, set)?.first().map(|&y| Witness {
            kind,
            a,
            b: a,
            c: a,
            y,
            index: None,
            certificate: penrose_certificates(ring, a, y, set),
        }),
        InverseKind::MoorePenrose => moore_penrose(ring, a)?,
        InverseKind::Group => group(ring, a)?,
        InverseKind::Drazin => drazin(ring, a)?,
    })
}

/// Full witness set of `kind` by exhaustive definitional scan, using the same
/// argument conventions as [`solve`].
pub fn all_witnesses(ring: &Ring, kind: InverseKind, a: Element, b: Element, c: Element) -> Vec<Element> {
    definitions::witness_set(ring, kind, a, b, c)
}
