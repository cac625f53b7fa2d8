//! Principal and annihilator one-sided ideals, one-sided division, and the
//! unit-sum decompositions `R = Rca + °b` / `R = abR + c°`.

use crate::linalg::{solve_linear_mod, IntMatrix, LinAlgError};
use crate::ring::{Carrier, Element, Ring};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

/// `Rg` (left side) or `gR` (right side).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrincipalIdeal {
    pub side: Side,
    pub generator: Element,
}

/// `°g = {x : xg = 0}` (left side) or `g° = {x : gx = 0}` (right side).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AnnihilatorIdeal {
    pub side: Side,
    pub generator: Element,
}

impl PrincipalIdeal {
    /// Membership by solving the factor equation.
    pub fn contains(&self, ring: &Ring, x: Element) -> bool {
        match self.side {
            Side::Left => left_factor_exists(ring, x, self.generator),
            Side::Right => right_factor_exists(ring, x, self.generator),
        }
    }

    /// All members, sorted by code, enumerated as products.
    pub fn members(&self, ring: &Ring) -> Vec<Element> {
        let mut seen = vec![false; ring.cardinality()];
        for s in ring.elements() {
            let p = match self.side {
                Side::Left => ring.mul(s, self.generator),
                Side::Right => ring.mul(self.generator, s),
            };
            seen[p.code() as usize] = true;
        }
        ring.elements().filter(|x| seen[x.code() as usize]).collect()
    }
}

impl AnnihilatorIdeal {
    pub fn contains(&self, ring: &Ring, x: Element) -> bool {
        let p = match self.side {
            Side::Left => ring.mul(x, self.generator),
            Side::Right => ring.mul(self.generator, x),
        };
        ring.is_zero(p)
    }

    pub fn members(&self, ring: &Ring) -> Vec<Element> {
        ring.elements().filter(|&x| self.contains(ring, x)).collect()
    }
}

/// Ideal descriptor drawn from `{x°, °x, xR, Rx}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ideal {
    Principal(PrincipalIdeal),
    Annihilator(AnnihilatorIdeal),
}

impl Ideal {
    /// `Rg`
    pub fn left_multiples(generator: Element) -> Self {
        Ideal::Principal(PrincipalIdeal { side: Side::Left, generator })
    }

    /// `gR`
    pub fn right_multiples(generator: Element) -> Self {
        Ideal::Principal(PrincipalIdeal { side: Side::Right, generator })
    }

    /// `g°`
    pub fn right_annihilator(generator: Element) -> Self {
        Ideal::Annihilator(AnnihilatorIdeal { side: Side::Right, generator })
    }

    /// `°g`
    pub fn left_annihilator(generator: Element) -> Self {
        Ideal::Annihilator(AnnihilatorIdeal { side: Side::Left, generator })
    }

    pub fn contains(&self, ring: &Ring, x: Element) -> bool {
        match self {
            Ideal::Principal(p) => p.contains(ring, x),
            Ideal::Annihilator(a) => a.contains(ring, x),
        }
    }

    pub fn members(&self, ring: &Ring) -> Vec<Element> {
        match self {
            Ideal::Principal(p) => p.members(ring),
            Ideal::Annihilator(a) => a.members(ring),
        }
    }

    /// Membership indicator indexed by code.
    pub fn mask(&self, ring: &Ring) -> Vec<bool> {
        let mut mask = vec![false; ring.cardinality()];
        for x in self.members(ring) {
            mask[x.code() as usize] = true;
        }
        mask
    }
}

/// Least-code `s` with `s g = x` (`x ∈ Rg`).
pub fn solve_left_factor(ring: &Ring, x: Element, g: Element) -> Option<Element> {
    factor(ring, x, g, Side::Left, true)
}

/// Least-code `s` with `g s = x` (`x ∈ gR`).
pub fn solve_right_factor(ring: &Ring, x: Element, g: Element) -> Option<Element> {
    factor(ring, x, g, Side::Right, true)
}

/// Same decision as [`solve_left_factor`] without the least-code refinement.
pub fn left_factor_exists(ring: &Ring, x: Element, g: Element) -> bool {
    factor(ring, x, g, Side::Left, false).is_some()
}

pub fn right_factor_exists(ring: &Ring, x: Element, g: Element) -> bool {
    factor(ring, x, g, Side::Right, false).is_some()
}

fn factor(ring: &Ring, x: Element, g: Element, side: Side, least: bool) -> Option<Element> {
    match ring.carrier() {
        Carrier::Zmod { n } => {
            crate::linalg::solve_scalar_congruence(g.code() as i64, x.code() as i64, n as i64)
                .map(|s| ring.from_residue(s).expect("zmod carrier"))
        }
        Carrier::Mat { k, n } => match matrix_factor(ring, x, g, side, k, n, least) {
            Ok(found) => found,
            Err(_) => scan_factor(ring, x, g, side),
        },
        Carrier::Prod { left, right } => {
            let (xl, xr) = ring.split(x)?;
            let (gl, gr) = ring.split(g)?;
            let sl = factor(left, xl, gl, side, least)?;
            let sr = factor(right, xr, gr, side, least)?;
            ring.join(sl, sr)
        }
    }
}

fn scan_factor(ring: &Ring, x: Element, g: Element, side: Side) -> Option<Element> {
    ring.elements().find(|&s| {
        let p = match side {
            Side::Left => ring.mul(s, g),
            Side::Right => ring.mul(g, s),
        };
        p == x
    })
}

/// Vectorizes `s g = x` (or `g s = x`) over the `k^2` unknown entries of `s`.
fn matrix_factor(
    ring: &Ring,
    x: Element,
    g: Element,
    side: Side,
    k: usize,
    n: u32,
    least: bool,
) -> Result<Option<Element>, LinAlgError> {
    let kk = k * k;
    let ge = ring.entries(g).expect("matrix carrier");
    let xe: Vec<i64> = ring.entries(x).expect("matrix carrier").iter().map(|&e| e as i64).collect();
    let mut a = IntMatrix::<i64>::zeros(kk, kk);
    for i in 0..k {
        for j in 0..k {
            for l in 0..k {
                match side {
                    // (s g)_{ij} = sum_l s_{il} g_{lj}
                    Side::Left => a[(i * k + j, i * k + l)] = ge[l * k + j] as i64,
                    // (g s)_{ij} = sum_l g_{il} s_{lj}
                    Side::Right => a[(i * k + j, l * k + j)] = ge[i * k + l] as i64,
                }
            }
        }
    }
    let n = n as i64;
    let solution = if least {
        least_solution(&a, &xe, n)?
    } else {
        solve_linear_mod(&a, &xe, n)?
    };
    Ok(solution.map(|s| ring.from_entries(&s).expect("matrix carrier")))
}

/// Lexicographically least solution of `a s = v (mod n)`, fixing one unknown at
/// a time to the smallest value that keeps the remaining system solvable.
fn least_solution(a: &IntMatrix<i64>, v: &[i64], n: i64) -> Result<Option<Vec<i64>>, LinAlgError> {
    if solve_linear_mod(a, v, n)?.is_none() {
        return Ok(None);
    }
    let (rows, cols) = (a.rows(), a.cols());
    let mut fixed: Vec<i64> = Vec::with_capacity(cols);
    let mut residual = v.to_vec();
    for pos in 0..cols {
        let rest = cols - pos - 1;
        let mut sub = Vec::with_capacity(rows * rest);
        for i in 0..rows {
            for j in pos + 1..cols {
                sub.push(a[(i, j)]);
            }
        }
        let sub = IntMatrix::from_row_major(rows, rest, sub)?;
        let mut chosen = None;
        for val in 0..n {
            let trial: Vec<i64> = (0..rows)
                .map(|i| (residual[i] - a[(i, pos)] * val).rem_euclid(n))
                .collect();
            if solve_linear_mod(&sub, &trial, n)?.is_some() {
                chosen = Some((val, trial));
                break;
            }
        }
        // Solvability of the previous step guarantees some value works.
        let (val, trial) = chosen.expect("solvable system lost a solution");
        fixed.push(val);
        residual = trial;
    }
    Ok(Some(fixed))
}

/// Decides `g1° ⊆ g2°` (right side) or `°g1 ⊆ °g2` (left side).
pub fn annihilator_subset(ring: &Ring, g1: Element, g2: Element, side: Side) -> bool {
    let (small, big) = (
        AnnihilatorIdeal { side, generator: g1 },
        AnnihilatorIdeal { side, generator: g2 },
    );
    ring.elements().all(|x| !small.contains(ring, x) || big.contains(ring, x))
}

/// Decides `Rb = Rcab` by solving `s c a b = b`; returns the least such `s`.
pub fn ideal_eq_rb_rcab(ring: &Ring, a: Element, b: Element, c: Element) -> Option<Element> {
    let cab = ring.product(&[c, a, b]);
    solve_left_factor(ring, b, cab)
}

/// Decides `cR = cabR` by solving `c a b t = c`; returns the least such `t`.
pub fn ideal_eq_cr_cabr(ring: &Ring, a: Element, b: Element, c: Element) -> Option<Element> {
    let cab = ring.product(&[c, a, b]);
    solve_right_factor(ring, c, cab)
}

/// `(t, u)` with `1 = t·ca + u` and `u b = 0`, i.e. a certificate for `R = Rca + °b`.
pub fn unit_sum_decomposition(ring: &Ring, ca: Element, b: Element) -> Option<(Element, Element)> {
    let s = solve_left_factor(ring, b, ring.mul(ca, b))?;
    let u = ring.sub(ring.one(), ring.mul(s, ca));
    assert_eq!(ring.add(ring.mul(s, ca), u), ring.one());
    assert!(ring.is_zero(ring.mul(u, b)), "unit-sum certificate failed: u b != 0");
    Some((s, u))
}

/// `(t, u)` with `1 = ab·t + u` and `c u = 0`, i.e. a certificate for `R = abR + c°`.
pub fn unit_sum_decomposition_right(ring: &Ring, ab: Element, c: Element) -> Option<(Element, Element)> {
    let t = solve_right_factor(ring, c, ring.mul(c, ab))?;
    let u = ring.sub(ring.one(), ring.mul(ab, t));
    assert_eq!(ring.add(ring.mul(ab, t), u), ring.one());
    assert!(ring.is_zero(ring.mul(c, u)), "unit-sum certificate failed: c u != 0");
    Some((t, u))
}

/// True iff the two ideals meet only in zero.
pub fn trivial_intersection(ring: &Ring, i1: &Ideal, i2: &Ideal) -> bool {
    let m1 = i1.members(ring);
    let m2 = i2.members(ring);
    let (small, other) = if m1.len() <= m2.len() { (m1, i2) } else { (m2, i1) };
    let other_mask = other.mask(ring);
    small.iter().all(|x| ring.is_zero(*x) || !other_mask[x.code() as usize])
}

/// Some `(e1, e2)` with `e1 ∈ i1`, `e2 ∈ i2`, `e1 + e2 = 1`. For two ideals on the
/// same side this decides `R = i1 + i2`.
pub fn covers_ring(ring: &Ring, i1: &Ideal, i2: &Ideal) -> Option<(Element, Element)> {
    let mask2 = i2.mask(ring);
    i1.members(ring).into_iter().find_map(|e1| {
        let e2 = ring.sub(ring.one(), e1);
        mask2[e2.code() as usize].then_some((e1, e2))
    })
}

/// Set equality of two ideals.
pub fn ideals_equal(ring: &Ring, i1: &Ideal, i2: &Ideal) -> bool {
    i1.mask(ring) == i2.mask(ring)
}
