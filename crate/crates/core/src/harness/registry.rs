//! Every statement about one-sided `(b, c)`-inverses, products and perturbations
//! as a decidable predicate over a tuple of ring elements.
//!
//! Predicates are evaluated from the definitions (exhaustive scans over the
//! ring), not from the decision procedures they are meant to check, except for
//! the `existence-*` claims whose whole point is to compare the two.

use crate::bc::definitions::{self as def, left_multiples_mask as rmul_l, right_multiples_mask as rmul_r};
use crate::bc::{left_bc, left_bc_exists, right_bc, right_bc_exists, DeltaSet};
use crate::ring::{Element, Ring};

/// Whether a claim is a theorem (must hold on every tuple) or the converse of
/// one, which is hunted for counterexamples.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Expected {
    Holds,
    FailsSomewhere,
}

/// Result of evaluating a claim on one tuple: overall truth plus the truth
/// table of its sub-conditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Eval {
    pub holds: bool,
    pub conditions: Vec<(&'static str, bool)>,
}

impl Eval {
    fn new(holds: bool, conditions: &[(&'static str, bool)]) -> Self {
        Eval { holds, conditions: conditions.to_vec() }
    }

    /// All listed conditions have the same truth value.
    fn equivalent(conditions: &[(&'static str, bool)]) -> Self {
        let holds = conditions.windows(2).all(|w| w[0].1 == w[1].1);
        Eval::new(holds, conditions)
    }

    fn implies(premise: (&'static str, bool), conclusion: (&'static str, bool)) -> Self {
        Eval::new(!premise.1 || conclusion.1, &[premise, conclusion])
    }
}

pub type Predicate = fn(&Ring, &[Element]) -> Eval;

#[derive(Clone, Copy)]
pub struct Claim {
    pub id: &'static str,
    /// Number of quantified elements.
    pub arity: usize,
    /// The statement being checked.
    pub statement: &'static str,
    pub expected: Expected,
    pub predicate: Predicate,
}

impl std::fmt::Debug for Claim {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Claim")
            .field("id", &self.id)
            .field("arity", &self.arity)
            .field("expected", &self.expected)
            .finish()
    }
}

pub fn registry() -> &'static [Claim] {
    CLAIMS
}

pub fn find_claim(id: &str) -> Option<&'static Claim> {
    CLAIMS.iter().find(|c| c.id == id)
}

// ---------------------------------------------------------------------------
// Small helpers over membership masks.

fn has(mask: &[bool], x: Element) -> bool {
    mask[x.code() as usize]
}

/// `I ∩ J = {0}`; the zero element always has code 0.
fn meet_trivial(i: &[bool], j: &[bool]) -> bool {
    i.iter().zip(j).skip(1).all(|(&x, &y)| !(x && y))
}

/// `R = I + J` for one-sided ideals on the same side, i.e. `1 ∈ I + J`.
fn sum_is_ring(ring: &Ring, i: &[bool], j: &[bool]) -> bool {
    let one = ring.one();
    ring.elements().any(|e| has(i, e) && has(j, ring.sub(one, e)))
}

fn ne(v: Vec<Element>) -> bool {
    !v.is_empty()
}

fn contains(sorted: &[Element], x: Element) -> bool {
    sorted.binary_search(&x).is_ok()
}

fn two_sided_set(ring: &Ring, a: Element, b: Element, c: Element) -> Vec<Element> {
    ring.elements().filter(|&y| def::is_two_sided_bc(ring, a, b, c, y)).collect()
}

fn delta(eqs: &[u8]) -> DeltaSet {
    DeltaSet::new(eqs).expect("valid equation set")
}

fn has_delta(ring: &Ring, a: Element, eqs: &[u8]) -> bool {
    ring.elements().any(|y| def::is_delta(ring, a, delta(eqs), y))
}

fn left_exists(ring: &Ring, a: Element, b: Element, c: Element) -> bool {
    ne(def::left_bc_set(ring, a, b, c))
}

fn right_exists(ring: &Ring, a: Element, b: Element, c: Element) -> bool {
    ne(def::right_bc_set(ring, a, b, c))
}

// ---------------------------------------------------------------------------
// Definitions, the regularity bridge and existence.

fn onesided_implies_annihilator(r: &Ring, t: &[Element]) -> Eval {
    let [a, b, c, y] = [t[0], t[1], t[2], t[3]];
    let l = def::is_left_bc(r, a, b, c, y);
    let ra = def::is_right_ann_bc(r, a, b, c, y);
    let rr = def::is_right_bc(r, a, b, c, y);
    let la = def::is_left_ann_bc(r, a, b, c, y);
    Eval::new(
        (!l || ra) && (!rr || la),
        &[("left", l), ("right_ann", ra), ("right", rr), ("left_ann", la)],
    )
}

fn annihilator_containment_parts(r: &Ring, g: Element, y: Element) -> [(&'static str, bool); 4] {
    [
        ("g° ⊆ y°", def::right_ann_subset(r, g, y)),
        ("Ry ⊆ Rg", def::in_left_multiples(r, y, g)),
        ("°g ⊆ °y", def::left_ann_subset(r, g, y)),
        ("yR ⊆ gR", def::in_right_multiples(r, y, g)),
    ]
}

fn regular_annihilator_iff_ideal(r: &Ring, t: &[Element]) -> Eval {
    let (g, y) = (t[0], t[1]);
    let reg = def::is_regular(r, g);
    let p = annihilator_containment_parts(r, g, y);
    let holds = !reg || (p[0].1 == p[1].1 && p[2].1 == p[3].1);
    Eval::new(holds, &[("g regular", reg), p[0], p[1], p[2], p[3]])
}

fn annihilator_containment_without_ideal(r: &Ring, t: &[Element]) -> Eval {
    let p = annihilator_containment_parts(r, t[0], t[1]);
    Eval::new((!p[0].1 || p[1].1) && (!p[2].1 || p[3].1), &p)
}

fn regular_bridge(r: &Ring, t: &[Element]) -> Eval {
    let [a, b, c, y] = [t[0], t[1], t[2], t[3]];
    let (rb, rc) = (def::is_regular(r, b), def::is_regular(r, c));
    let l = def::is_left_bc(r, a, b, c, y);
    let ra = def::is_right_ann_bc(r, a, b, c, y);
    let rr = def::is_right_bc(r, a, b, c, y);
    let la = def::is_left_ann_bc(r, a, b, c, y);
    Eval::new(
        (!rc || l == ra) && (!rb || rr == la),
        &[("b regular", rb), ("c regular", rc), ("left", l), ("right_ann", ra), ("right", rr), ("left_ann", la)],
    )
}

fn existence_left(r: &Ring, t: &[Element]) -> Eval {
    let [a, b, c] = [t[0], t[1], t[2]];
    let definitional = left_exists(r, a, b, c);
    let solver = left_bc_exists(r, a, b, c);
    let ideals = rmul_l(r, b) == rmul_l(r, r.product(&[c, a, b]));
    let witness_ok = left_bc(r, a, b, c).is_none_or(|w| def::is_left_bc(r, a, b, c, w.y));
    let conds = [("definition", definitional), ("solver", solver), ("Rb = Rcab", ideals)];
    let mut eval = Eval::equivalent(&conds);
    eval.holds &= witness_ok;
    eval.conditions.push(("witness rechecks", witness_ok));
    eval
}

fn existence_right(r: &Ring, t: &[Element]) -> Eval {
    let [a, b, c] = [t[0], t[1], t[2]];
    let definitional = right_exists(r, a, b, c);
    let solver = right_bc_exists(r, a, b, c);
    let ideals = rmul_r(r, c) == rmul_r(r, r.product(&[c, a, b]));
    let witness_ok = right_bc(r, a, b, c).is_none_or(|w| def::is_right_bc(r, a, b, c, w.y));
    let conds = [("definition", definitional), ("solver", solver), ("cR = cabR", ideals)];
    let mut eval = Eval::equivalent(&conds);
    eval.holds &= witness_ok;
    eval.conditions.push(("witness rechecks", witness_ok));
    eval
}

fn existence_along_onesided(r: &Ring, t: &[Element]) -> Eval {
    let (a, d) = (t[0], t[1]);
    let dad = r.product(&[d, a, d]);
    let left = r.elements().any(|y| def::is_mary_left(r, a, d, y));
    let right = r.elements().any(|y| def::is_mary_right(r, a, d, y));
    let left_crit = rmul_l(r, d) == rmul_l(r, dad);
    let right_crit = rmul_r(r, d) == rmul_r(r, dad);
    Eval::new(
        left == left_crit && right == right_crit,
        &[("left along d", left), ("Rd = Rdad", left_crit), ("right along d", right), ("dR = dadR", right_crit)],
    )
}

fn two_sided_iff_left_and_right(r: &Ring, t: &[Element]) -> Eval {
    let [a, b, c] = [t[0], t[1], t[2]];
    let two = ne(two_sided_set(r, a, b, c));
    let both = left_exists(r, a, b, c) && right_exists(r, a, b, c);
    Eval::equivalent(&[("(b,c)-invertible", two), ("left and right", both)])
}

fn two_sided_iff_regular_annihilators(r: &Ring, t: &[Element]) -> Eval {
    let [a, b, c] = [t[0], t[1], t[2]];
    let two = ne(two_sided_set(r, a, b, c));
    let rhs = def::is_regular(r, b)
        && def::is_regular(r, c)
        && ne(def::right_ann_bc_set(r, a, b, c))
        && ne(def::left_ann_bc_set(r, a, b, c));
    Eval::equivalent(&[("(b,c)-invertible", two), ("b, c regular, both annihilator", rhs)])
}

fn star_duality_onesided(r: &Ring, t: &[Element]) -> Eval {
    let [a, b, c, y] = [t[0], t[1], t[2], t[3]];
    let s = |x| r.star(x);
    let l = def::is_left_bc(r, a, b, c, y);
    let l_dual = def::is_right_bc(r, s(a), s(c), s(b), s(y));
    let rr = def::is_right_bc(r, a, b, c, y);
    let rr_dual = def::is_left_bc(r, s(a), s(c), s(b), s(y));
    Eval::new(
        l == l_dual && rr == rr_dual,
        &[("left", l), ("a* right (c*,b*) via y*", l_dual), ("right", rr), ("a* left (c*,b*) via y*", rr_dual)],
    )
}

fn star_duality_annihilator(r: &Ring, t: &[Element]) -> Eval {
    let [a, b, c] = [t[0], t[1], t[2]];
    let s = |x| r.star(x);
    let reg = def::is_regular(r, b) && def::is_regular(r, c);
    let la = ne(def::left_ann_bc_set(r, a, b, c));
    let dual = ne(def::right_ann_bc_set(r, s(a), s(c), s(b)));
    Eval::new(!reg || la == dual, &[("b, c regular", reg), ("left_ann", la), ("a* right_ann (c*,b*)", dual)])
}

fn right_ann_implies_kernel_equality(r: &Ring, t: &[Element]) -> Eval {
    let [a, b, c] = [t[0], t[1], t[2]];
    let ra = ne(def::right_ann_bc_set(r, a, b, c));
    let eq = def::right_ann_mask(r, b) == def::right_ann_mask(r, r.product(&[c, a, b]));
    Eval::implies(("right_ann", ra), ("b° = (cab)°", eq))
}

fn left_ann_implies_kernel_equality(r: &Ring, t: &[Element]) -> Eval {
    let [a, b, c] = [t[0], t[1], t[2]];
    let la = ne(def::left_ann_bc_set(r, a, b, c));
    let eq = def::left_ann_mask(r, c) == def::left_ann_mask(r, r.product(&[c, a, b]));
    Eval::implies(("left_ann", la), ("°c = °(cab)", eq))
}

fn kernel_equality_converse(r: &Ring, t: &[Element]) -> Eval {
    let [a, b, c] = [t[0], t[1], t[2]];
    let cab = r.product(&[c, a, b]);
    let eq_r = def::right_ann_mask(r, b) == def::right_ann_mask(r, cab);
    let eq_l = def::left_ann_mask(r, c) == def::left_ann_mask(r, cab);
    let ra = ne(def::right_ann_bc_set(r, a, b, c));
    let la = ne(def::left_ann_bc_set(r, a, b, c));
    Eval::new(
        (!eq_r || ra) && (!eq_l || la),
        &[("b° = (cab)°", eq_r), ("right_ann", ra), ("°c = °(cab)", eq_l), ("left_ann", la)],
    )
}

// ---------------------------------------------------------------------------
// Hybrid and annihilator inverses.

fn hybrid_right_characterization(r: &Ring, t: &[Element]) -> Eval {
    let [a, b, c, y] = [t[0], t[1], t[2], t[3]];
    let both = def::is_right_bc(r, a, b, c, y) && def::is_right_ann_bc(r, a, b, c, y);
    let hybrid = def::is_hybrid_bc(r, a, b, c, y);
    Eval::equivalent(&[("right and right_ann", both), ("hybrid", hybrid)])
}

fn hybrid_left_characterization(r: &Ring, t: &[Element]) -> Eval {
    let [a, b, c, y] = [t[0], t[1], t[2], t[3]];
    let both = def::is_left_bc(r, a, b, c, y) && def::is_left_ann_bc(r, a, b, c, y);
    let rhs = r.product(&[y, a, y]) == y
        && def::left_ann_mask(r, b) == def::left_ann_mask(r, y)
        && rmul_l(r, c) == rmul_l(r, y);
    Eval::equivalent(&[("left and left_ann", both), ("yay = y, °b = °y, Rc = Ry", rhs)])
}

fn ann_inverse_implies_both_annihilator(r: &Ring, t: &[Element]) -> Eval {
    let [a, b, c, y] = [t[0], t[1], t[2], t[3]];
    let ann = def::is_ann_bc(r, a, b, c, y);
    let both = def::is_right_ann_bc(r, a, b, c, y) && def::is_left_ann_bc(r, a, b, c, y);
    Eval::implies(("annihilator inverse", ann), ("right_ann and left_ann", both))
}

fn left_pair_implies_ann_inverse(r: &Ring, t: &[Element]) -> Eval {
    let [a, b, c, y] = [t[0], t[1], t[2], t[3]];
    let both = def::is_left_bc(r, a, b, c, y) && def::is_left_ann_bc(r, a, b, c, y);
    Eval::implies(("left and left_ann", both), ("annihilator inverse", def::is_ann_bc(r, a, b, c, y)))
}

fn right_pair_implies_ann_inverse(r: &Ring, t: &[Element]) -> Eval {
    let [a, b, c, y] = [t[0], t[1], t[2], t[3]];
    let both = def::is_right_bc(r, a, b, c, y) && def::is_right_ann_bc(r, a, b, c, y);
    Eval::implies(("right and right_ann", both), ("annihilator inverse", def::is_ann_bc(r, a, b, c, y)))
}

fn ann_inverse_converses(r: &Ring, t: &[Element]) -> Eval {
    let [a, b, c, y] = [t[0], t[1], t[2], t[3]];
    let ann = def::is_ann_bc(r, a, b, c, y);
    let l = def::is_left_bc(r, a, b, c, y);
    let rr = def::is_right_bc(r, a, b, c, y);
    let la = def::is_left_ann_bc(r, a, b, c, y);
    let ra = def::is_right_ann_bc(r, a, b, c, y);
    let holds = (!(ra && la) || ann) && (!ann || (l && la)) && (!ann || (rr && ra));
    Eval::new(
        holds,
        &[("annihilator inverse", ann), ("left", l), ("left_ann", la), ("right", rr), ("right_ann", ra)],
    )
}

fn witness_inequality(r: &Ring, t: &[Element]) -> Eval {
    let [a, b, c] = [t[0], t[1], t[2]];
    let left = def::left_bc_set(r, a, b, c);
    let right_ann = def::right_ann_bc_set(r, a, b, c);
    let single = left.len() == 1 && left == right_ann;
    let holds = left.is_empty() || right_ann.is_empty() || single;
    Eval::new(
        holds,
        &[("left exists", !left.is_empty()), ("right_ann exists", !right_ann.is_empty()), ("same single witness", single)],
    )
}

fn onesided_without_regularity(r: &Ring, t: &[Element]) -> Eval {
    let [a, b, c] = [t[0], t[1], t[2]];
    let one_sided = left_exists(r, a, b, c) || right_exists(r, a, b, c);
    let reg = def::is_regular(r, b) && def::is_regular(r, c);
    Eval::implies(("left or right", one_sided), ("b, c regular", reg))
}

// ---------------------------------------------------------------------------
// Ideal decompositions.

fn five_way_left(r: &Ring, t: &[Element]) -> Eval {
    let [a, b, c] = [t[0], t[1], t[2]];
    let i = left_exists(r, a, b, c);
    let x1 = meet_trivial(&def::right_ann_mask(r, a), &rmul_r(r, b));
    let x2 = meet_trivial(&rmul_r(r, r.mul(a, b)), &def::right_ann_mask(r, c));
    let sum = sum_is_ring(r, &rmul_l(r, r.mul(c, a)), &def::left_ann_mask(r, b));
    Eval::equivalent(&[
        ("(i) left", i),
        ("(ii)", x1 && x2 && sum),
        ("(iii)", x1 && sum),
        ("(iv)", x2 && sum),
        ("(v) R = Rca + °b", sum),
    ])
}

fn five_way_right(r: &Ring, t: &[Element]) -> Eval {
    let [a, b, c] = [t[0], t[1], t[2]];
    let i = right_exists(r, a, b, c);
    let x1 = meet_trivial(&def::left_ann_mask(r, a), &rmul_l(r, c));
    let x2 = meet_trivial(&rmul_l(r, r.mul(c, a)), &def::left_ann_mask(r, b));
    let sum = sum_is_ring(r, &rmul_r(r, r.mul(a, b)), &def::right_ann_mask(r, c));
    Eval::equivalent(&[
        ("(i) right", i),
        ("(ii)", x1 && x2 && sum),
        ("(iii)", x1 && sum),
        ("(iv)", x2 && sum),
        ("(v) R = abR + c°", sum),
    ])
}

fn direct_sum_two_sided(r: &Ring, t: &[Element]) -> Eval {
    let [a, b, c] = [t[0], t[1], t[2]];
    let i = ne(two_sided_set(r, a, b, c));
    let x1 = meet_trivial(&def::right_ann_mask(r, a), &rmul_r(r, b));
    let y1 = meet_trivial(&def::left_ann_mask(r, a), &rmul_l(r, c));
    let (ab_r, c_ann) = (rmul_r(r, r.mul(a, b)), def::right_ann_mask(r, c));
    let (r_ca, ann_b) = (rmul_l(r, r.mul(c, a)), def::left_ann_mask(r, b));
    let sum_r = sum_is_ring(r, &ab_r, &c_ann);
    let sum_l = sum_is_ring(r, &r_ca, &ann_b);
    let direct_r = sum_r && meet_trivial(&ab_r, &c_ann);
    let direct_l = sum_l && meet_trivial(&r_ca, &ann_b);
    Eval::equivalent(&[
        ("(i) (b,c)-invertible", i),
        ("(ii)", x1 && y1 && direct_r && direct_l),
        ("(iii)", x1 && y1 && sum_r && sum_l),
        ("(iv) direct sums", direct_r && direct_l),
        ("(v) sums", sum_r && sum_l),
    ])
}

// ---------------------------------------------------------------------------
// Involution-based specializations.

fn lemma_13(r: &Ring, t: &[Element]) -> Eval {
    let a = t[0];
    let s = r.star(a);
    Eval::equivalent(&[
        ("{1,3}-invertible", has_delta(r, a, &[1, 3])),
        ("a*R = a*aR", rmul_r(r, s) == rmul_r(r, r.mul(s, a))),
        ("Ra = Ra*a", rmul_l(r, a) == rmul_l(r, r.mul(s, a))),
        ("R = Ra* + °a", sum_is_ring(r, &rmul_l(r, s), &def::left_ann_mask(r, a))),
        ("R = aR + (a*)°", sum_is_ring(r, &rmul_r(r, a), &def::right_ann_mask(r, s))),
    ])
}

fn lemma_14(r: &Ring, t: &[Element]) -> Eval {
    let a = t[0];
    let s = r.star(a);
    Eval::equivalent(&[
        ("{1,4}-invertible", has_delta(r, a, &[1, 4])),
        ("aR = aa*R", rmul_r(r, a) == rmul_r(r, r.mul(a, s))),
        ("Ra* = Raa*", rmul_l(r, s) == rmul_l(r, r.mul(a, s))),
        ("R = Ra + °(a*)", sum_is_ring(r, &rmul_l(r, a), &def::left_ann_mask(r, s))),
        ("R = a*R + a°", sum_is_ring(r, &rmul_r(r, s), &def::right_ann_mask(r, a))),
    ])
}

fn bridge_14(r: &Ring, t: &[Element]) -> Eval {
    let a = t[0];
    Eval::equivalent(&[
        ("left (a*,1)", left_exists(r, a, r.star(a), r.one())),
        ("{1,4}-invertible", has_delta(r, a, &[1, 4])),
    ])
}

fn bridge_13(r: &Ring, t: &[Element]) -> Eval {
    let a = t[0];
    Eval::equivalent(&[
        ("right (1,a*)", right_exists(r, a, r.one(), r.star(a))),
        ("{1,3}-invertible", has_delta(r, a, &[1, 3])),
    ])
}

fn bridge_moore_penrose(r: &Ring, t: &[Element]) -> Eval {
    let a = t[0];
    let (s, one) = (r.star(a), r.one());
    Eval::equivalent(&[
        ("Moore-Penrose invertible", has_delta(r, a, &[1, 2, 3, 4])),
        ("left (a*,1) and right (1,a*)", left_exists(r, a, s, one) && right_exists(r, a, one, s)),
    ])
}

fn example_13(r: &Ring, t: &[Element]) -> Eval {
    let (a, y) = (t[0], t[1]);
    Eval::implies(
        ("y ∈ a{1,3}", def::is_delta(r, a, delta(&[1, 3]), y)),
        ("y right (1,a*)", def::is_right_bc(r, a, r.one(), r.star(a), y)),
    )
}

fn example_14(r: &Ring, t: &[Element]) -> Eval {
    let (a, y) = (t[0], t[1]);
    Eval::implies(
        ("y ∈ a{1,4}", def::is_delta(r, a, delta(&[1, 4]), y)),
        ("y left (a*,1)", def::is_left_bc(r, a, r.star(a), r.one(), y)),
    )
}

fn example_two_sided(r: &Ring, t: &[Element]) -> Eval {
    let [a, b, c, y] = [t[0], t[1], t[2], t[3]];
    let both = def::is_left_bc(r, a, b, c, y) && def::is_right_bc(r, a, b, c, y);
    Eval::implies(("(b,c)-inverse", def::is_two_sided_bc(r, a, b, c, y)), ("left and right", both))
}

fn example_along(r: &Ring, t: &[Element]) -> Eval {
    let [a, d, y] = [t[0], t[1], t[2]];
    let (ml, mr) = (def::is_mary_left(r, a, d, y), def::is_mary_right(r, a, d, y));
    let (l, rr) = (def::is_left_bc(r, a, d, d, y), def::is_right_bc(r, a, d, d, y));
    let m = def::is_mary(r, a, d, y);
    Eval::new(
        (!m || (l && rr)) && (!ml || l) && (!mr || rr),
        &[("along d", m), ("left along d", ml), ("right along d", mr), ("left (d,d)", l), ("right (d,d)", rr)],
    )
}

fn pi_bridge(r: &Ring, a: Element, left: bool) -> Eval {
    let one = r.one();
    let (mut by_bc, mut by_def, mut agree) = (false, false, true);
    for n in 1..=r.cardinality() as u32 {
        let an = r.pow(a, n);
        let an1 = r.mul(an, a);
        let (bc, pi) = if left {
            (left_exists(r, a, an, one), r.elements().any(|x| r.mul(x, an1) == an))
        } else {
            (right_exists(r, a, one, an), r.elements().any(|x| r.mul(an1, x) == an))
        };
        by_bc |= bc;
        by_def |= pi;
        agree &= bc == pi;
    }
    Eval::new(agree, &[("(a^n,1)/(1,a^n) for some n", by_bc), ("π-regular", by_def), ("agree for each n", agree)])
}

fn pi_bridge_left(r: &Ring, t: &[Element]) -> Eval {
    pi_bridge(r, t[0], true)
}

fn pi_bridge_right(r: &Ring, t: &[Element]) -> Eval {
    pi_bridge(r, t[0], false)
}

fn strongly_pi_bridge(r: &Ring, t: &[Element]) -> Eval {
    let a = t[0];
    let one = r.one();
    let drazin = r.elements().any(|y| def::is_drazin(r, a, y));
    let by_bc = (1..=r.cardinality() as u32).any(|n| {
        let an = r.pow(a, n);
        left_exists(r, a, an, one) && right_exists(r, a, one, an)
    });
    Eval::equivalent(&[("Drazin invertible", drazin), ("left (a^n,1) and right (1,a^n)", by_bc)])
}

fn star_one_bridge(r: &Ring, t: &[Element]) -> Eval {
    let a = t[0];
    let (s, one) = (r.star(a), r.one());
    let right = right_exists(r, a, s, one);
    let right_crit = has(&rmul_r(r, r.mul(a, s)), one);
    let left = left_exists(r, a, one, s);
    let left_crit = has(&rmul_l(r, r.mul(s, a)), one);
    Eval::new(
        right == right_crit && left == left_crit,
        &[("right (a*,1)", right), ("R = aa*R", right_crit), ("left (1,a*)", left), ("R = Ra*a", left_crit)],
    )
}

fn a_star_bridge(r: &Ring, t: &[Element]) -> Eval {
    let a = t[0];
    let s = r.star(a);
    let left = left_exists(r, a, a, s);
    let left_crit = rmul_l(r, a) == rmul_l(r, r.product(&[s, a, a]));
    let right = right_exists(r, a, a, s);
    let right_crit = rmul_r(r, s) == rmul_r(r, r.product(&[s, a, a]));
    Eval::new(
        left == left_crit && right == right_crit,
        &[("left (a,a*)", left), ("Ra = Ra*a²", left_crit), ("right (a,a*)", right), ("a*R = a*a²R", right_crit)],
    )
}

fn star_a_bridge(r: &Ring, t: &[Element]) -> Eval {
    let a = t[0];
    let s = r.star(a);
    let left = left_exists(r, a, s, a);
    let left_crit = rmul_l(r, s) == rmul_l(r, r.product(&[a, a, s]));
    let right = right_exists(r, a, s, a);
    let right_crit = rmul_r(r, a) == rmul_r(r, r.product(&[a, a, s]));
    Eval::new(
        left == left_crit && right == right_crit,
        &[("left (a*,a)", left), ("Ra* = Ra²a*", left_crit), ("right (a*,a)", right), ("aR = a²a*R", right_crit)],
    )
}

fn special_units(r: &Ring, t: &[Element]) -> Eval {
    let a = t[0];
    let one = r.one();
    let (l, li) = (left_exists(r, a, one, one), r.left_invertible(a).is_some());
    let (rr, ri) = (right_exists(r, a, one, one), r.right_invertible(a).is_some());
    Eval::new(
        l == li && rr == ri,
        &[("left (1,1)", l), ("left invertible", li), ("right (1,1)", rr), ("right invertible", ri)],
    )
}

fn special_regular(r: &Ring, t: &[Element]) -> Eval {
    let a = t[0];
    let a2 = r.mul(a, a);
    let (l, lr) = (left_exists(r, a, a, a), r.elements().any(|x| r.mul(x, a2) == a));
    let (rr, rreg) = (right_exists(r, a, a, a), r.elements().any(|x| r.mul(a2, x) == a));
    Eval::new(
        l == lr && rr == rreg,
        &[("left (a,a)", l), ("a ∈ Ra²", lr), ("right (a,a)", rr), ("a ∈ a²R", rreg)],
    )
}

fn special_star_regular(r: &Ring, t: &[Element]) -> Eval {
    let a = t[0];
    let s = r.star(a);
    let core = r.product(&[a, s, a]);
    let l = left_exists(r, a, s, s);
    let lsr = r.elements().any(|x| r.mul(core, x) == a);
    let rr = right_exists(r, a, s, s);
    let rsr = r.elements().any(|x| r.mul(x, core) == a);
    let mp = has_delta(r, a, &[1, 2, 3, 4]);
    Eval::new(
        l == lsr && lsr == mp && rr == rsr && rsr == mp,
        &[
            ("left (a*,a*)", l),
            ("a = aa*ax", lsr),
            ("right (a*,a*)", rr),
            ("a = xaa*a", rsr),
            ("Moore-Penrose invertible", mp),
        ],
    )
}

fn special_powers(r: &Ring, t: &[Element]) -> Eval {
    let a = t[0];
    let mut agree = true;
    for n in 1..=r.cardinality() as u32 {
        let an = r.pow(a, n);
        let an1 = r.mul(an, a);
        agree &= left_exists(r, a, an, an) == r.elements().any(|x| r.mul(x, an1) == an);
        agree &= right_exists(r, a, an, an) == r.elements().any(|x| r.mul(an1, x) == an);
    }
    Eval::new(agree, &[("(a^n,a^n) agrees with π-regularity for each n", agree)])
}

// ---------------------------------------------------------------------------
// Products paq. Tuples are (p, a, q, b, c).

type SetFn = fn(&Ring, Element, Element, Element) -> Vec<Element>;

fn split_claim(r: &Ring, t: &[Element], set: SetFn) -> Eval {
    let [p, a, q, b, c] = [t[0], t[1], t[2], t[3], t[4]];
    let paq = r.product(&[p, a, q]);
    let ys = set(r, paq, b, c);
    let xs = set(r, r.mul(p, a), r.mul(q, b), c);
    let zs = set(r, r.mul(a, q), b, r.mul(c, p));
    let exists = !ys.is_empty();
    let factors = !xs.is_empty() && !zs.is_empty();
    let forward = ys.iter().all(|&y| contains(&xs, r.mul(q, y)) && contains(&zs, r.mul(y, p)));
    let backward = xs.iter().all(|&x| zs.iter().all(|&z| contains(&ys, r.product(&[z, a, x]))));
    Eval::new(
        exists == factors && forward && backward,
        &[("paq", exists), ("pa and aq", factors), ("x = qy, z = yp", forward), ("y = zax", backward)],
    )
}

fn split_left(r: &Ring, t: &[Element]) -> Eval {
    split_claim(r, t, def::left_bc_set)
}

fn split_right(r: &Ring, t: &[Element]) -> Eval {
    split_claim(r, t, def::right_bc_set)
}

fn transfer_claim(r: &Ring, t: &[Element], set: SetFn, need_q: bool, need_p: bool) -> Eval {
    let [p, a, q, b, c] = [t[0], t[1], t[2], t[3], t[4]];
    let (qb, cp) = (r.mul(q, b), r.mul(c, p));
    let pre_q = !need_q || def::in_left_multiples(r, b, qb);
    let pre_p = !need_p || def::in_right_multiples(r, c, cp);
    let premise = pre_q && pre_p;
    if !premise {
        return Eval::new(true, &[("q′/p′ exist", false)]);
    }
    let ys = set(r, r.product(&[p, a, q]), b, c);
    let ws = set(r, a, qb, cp);
    let maps = ys.iter().all(|&y| contains(&ws, r.product(&[q, y, p])));
    Eval::new(
        ys.is_empty() == ws.is_empty() && maps,
        &[("q′/p′ exist", true), ("paq", !ys.is_empty()), ("a w.r.t. (qb,cp)", !ws.is_empty()), ("w = qyp", maps)],
    )
}

fn transfer_left(r: &Ring, t: &[Element]) -> Eval {
    transfer_claim(r, t, def::left_bc_set, true, false)
}

fn transfer_right(r: &Ring, t: &[Element]) -> Eval {
    transfer_claim(r, t, def::right_bc_set, false, true)
}

fn transfer_two_sided(r: &Ring, t: &[Element]) -> Eval {
    transfer_claim(r, t, two_sided_set, true, true)
}

fn mixed(r: &Ring, t: &[Element]) -> Eval {
    let [p, a, q, b, c] = [t[0], t[1], t[2], t[3], t[4]];
    let pre = def::in_left_multiples(r, c, r.mul(q, c)) && def::in_right_multiples(r, b, r.mul(b, p));
    if !pre {
        return Eval::new(true, &[("q′, p′ exist", false)]);
    }
    let ys = two_sided_set(r, r.product(&[p, a, q]), b, c);
    let xs = def::right_bc_set(r, r.mul(p, a), r.mul(q, b), r.mul(q, c));
    let zs = def::left_bc_set(r, r.mul(a, q), r.mul(b, p), r.mul(c, p));
    let factors = !xs.is_empty() && !zs.is_empty();
    let composed = xs.iter().all(|&x| zs.iter().all(|&z| ys == [r.product(&[z, a, x])]));
    Eval::new(
        ys.is_empty() != factors && composed,
        &[("q′, p′ exist", true), ("paq (b,c)-invertible", !ys.is_empty()), ("pa right, aq left", factors), ("y = zax", composed)],
    )
}

fn arbitrary_witness_relations(r: &Ring, t: &[Element]) -> Eval {
    let [p, a, q, b, c] = [t[0], t[1], t[2], t[3], t[4]];
    let ys = def::left_bc_set(r, r.product(&[p, a, q]), b, c);
    let xs = def::left_bc_set(r, r.mul(p, a), r.mul(q, b), c);
    let zs = def::left_bc_set(r, r.mul(a, q), b, r.mul(c, p));
    let holds = ys.iter().all(|&y| {
        xs.iter().all(|&x| {
            zs.iter().all(|&z| y == r.product(&[z, a, x]) && x == r.mul(q, y) && z == r.mul(y, p))
        })
    });
    Eval::new(holds, &[("relations hold for all witness choices", holds)])
}

// ---------------------------------------------------------------------------
// Jacobson's lemma and perturbations.

fn jacobson_i(r: &Ring, t: &[Element]) -> Eval {
    let (a, b) = (t[0], t[1]);
    let one = r.one();
    let u = r.add(one, r.mul(a, b));
    let v = r.add(one, r.mul(b, a));
    let (lu, lv) = (r.left_invertible(u).is_some(), r.left_invertible(v).is_some());
    let formula = r
        .elements()
        .filter(|&y| r.mul(y, u) == one)
        .all(|y| r.mul(r.sub(one, r.product(&[b, y, a])), v) == one);
    Eval::new(
        lu == lv && formula,
        &[("1+ab left invertible", lu), ("1+ba left invertible", lv), ("(1 - bya)(1 + ba) = 1", formula)],
    )
}

fn jacobson_ii(r: &Ring, t: &[Element]) -> Eval {
    let (a, b) = (t[0], t[1]);
    let one = r.one();
    let u = r.add(one, r.mul(a, b));
    let v = r.add(one, r.mul(b, a));
    let (ru, rv) = (r.right_invertible(u).is_some(), r.right_invertible(v).is_some());
    let formula = r
        .elements()
        .filter(|&x| r.mul(u, x) == one)
        .all(|x| r.mul(v, r.sub(one, r.product(&[b, x, a]))) == one);
    Eval::new(
        ru == rv && formula,
        &[("1+ab right invertible", ru), ("1+ba right invertible", rv), ("(1 + ba)(1 - bxa) = 1", formula)],
    )
}

fn jacobson_iii(r: &Ring, t: &[Element]) -> Eval {
    let (a, b) = (t[0], t[1]);
    let one = r.one();
    let u = r.add(one, r.mul(a, b));
    let v = r.add(one, r.mul(b, a));
    let (iu, iv) = (r.invertible(u), r.invertible(v));
    let formula = iu.is_none_or(|inv| {
        let w = r.sub(one, r.product(&[b, inv, a]));
        r.mul(w, v) == one && r.mul(v, w) == one
    });
    Eval::new(
        iu.is_some() == iv.is_some() && formula,
        &[("1+ab invertible", iu.is_some()), ("1+ba invertible", iv.is_some()), ("(1+ba)⁻¹ = 1 - b(1+ab)⁻¹a", formula)],
    )
}

fn perturbation(r: &Ring, t: &[Element], left: bool) -> Eval {
    let [a, b, c, g, alpha] = [t[0], t[1], t[2], t[3], t[4]];
    if !def::is_two_sided_bc(r, a, b, c, g) {
        return Eval::new(true, &[("a_bc is the (b,c)-inverse of a", false)]);
    }
    let one = r.one();
    let diff = r.sub(alpha, a);
    let u = r.add(one, r.mul(diff, g));
    let v = r.add(one, r.mul(g, diff));
    let conds = if left {
        [
            ("(i) α left (b,c)", left_exists(r, alpha, b, c)),
            ("(ii) α right_ann (b,c)", ne(def::right_ann_bc_set(r, alpha, b, c))),
            ("(iii) 1+(α-a)a_bc left invertible", r.left_invertible(u).is_some()),
            ("(iv) 1+a_bc(α-a) left invertible", r.left_invertible(v).is_some()),
        ]
    } else {
        [
            ("(i) α right (b,c)", right_exists(r, alpha, b, c)),
            ("(ii) α left_ann (b,c)", ne(def::left_ann_bc_set(r, alpha, b, c))),
            ("(iii) 1+(α-a)a_bc right invertible", r.right_invertible(u).is_some()),
            ("(iv) 1+a_bc(α-a) right invertible", r.right_invertible(v).is_some()),
        ]
    };
    Eval::equivalent(&conds)
}

fn perturbation_left(r: &Ring, t: &[Element]) -> Eval {
    perturbation(r, t, true)
}

fn perturbation_right(r: &Ring, t: &[Element]) -> Eval {
    perturbation(r, t, false)
}

// ---------------------------------------------------------------------------

const fn holds(id: &'static str, arity: usize, statement: &'static str, predicate: Predicate) -> Claim {
    Claim { id, arity, statement, expected: Expected::Holds, predicate }
}

const fn hunt(id: &'static str, arity: usize, statement: &'static str, predicate: Predicate) -> Claim {
    Claim { id, arity, statement, expected: Expected::FailsSomewhere, predicate }
}

static CLAIMS: &[Claim] = &[
    holds("onesided-implies-annihilator", 4, "y left (right) (b,c)-inverse ⟹ y right (left) annihilator (b,c)-inverse", onesided_implies_annihilator),
    holds("regular-annihilator-iff-ideal", 2, "g regular ⟹ (g° ⊆ y° ⟺ Ry ⊆ Rg) and (°g ⊆ °y ⟺ yR ⊆ gR)", regular_annihilator_iff_ideal),
    hunt("remark-c-ann-eq-but-not-ideal", 2, "converse: c° ⊆ y° ⟹ Ry ⊆ Rc (and dually), without regularity", annihilator_containment_without_ideal),
    holds("regular-bridge", 4, "c regular ⟹ (y left ⟺ y right_ann); b regular ⟹ (y right ⟺ y left_ann)", regular_bridge),
    holds("existence-left-bc", 3, "left (b,c)-invertible ⟺ Rb = Rcab", existence_left),
    holds("existence-right-bc", 3, "right (b,c)-invertible ⟺ cR = cabR", existence_right),
    holds("existence-along-onesided", 2, "left (right) invertible along d ⟺ Rd = Rdad (dR = dadR)", existence_along_onesided),
    holds("two-sided-iff-left-and-right", 3, "(b,c)-invertible ⟺ left and right (b,c)-invertible", two_sided_iff_left_and_right),
    holds("two-sided-iff-regular-annihilators", 3, "(b,c)-invertible ⟺ b, c regular and left and right annihilator (b,c)-invertible", two_sided_iff_regular_annihilators),
    holds("star-duality", 4, "y left (b,c)-inverse of a ⟺ y* right (c*,b*)-inverse of a*, and dually", star_duality_onesided),
    holds("star-duality-annihilator", 3, "b, c regular ⟹ (a left_ann (b,c) ⟺ a* right_ann (c*,b*))", star_duality_annihilator),
    holds("right-ann-implies-kernel-equality", 3, "right annihilator (b,c)-invertible ⟹ b° = (cab)°", right_ann_implies_kernel_equality),
    holds("left-ann-implies-kernel-equality", 3, "left annihilator (b,c)-invertible ⟹ °c = °(cab)", left_ann_implies_kernel_equality),
    hunt("converse-bcirc-equality", 3, "converse: b° = (cab)° ⟹ right annihilator (b,c)-invertible (and dually)", kernel_equality_converse),
    holds("hybrid-right-characterization", 4, "y right and right annihilator (b,c)-inverse ⟺ y hybrid (b,c)-inverse", hybrid_right_characterization),
    holds("hybrid-left-characterization", 4, "y left and left annihilator (b,c)-inverse ⟺ yay = y, °b = °y, Rc = Ry", hybrid_left_characterization),
    holds("ann-inverse-implies-both-annihilator", 4, "y annihilator (b,c)-inverse ⟹ y right and left annihilator (b,c)-inverse", ann_inverse_implies_both_annihilator),
    holds("left-pair-implies-ann-inverse", 4, "y left and left annihilator (b,c)-inverse ⟹ y annihilator (b,c)-inverse", left_pair_implies_ann_inverse),
    holds("right-pair-implies-ann-inverse", 4, "y right and right annihilator (b,c)-inverse ⟹ y annihilator (b,c)-inverse", right_pair_implies_ann_inverse),
    hunt("converse-annihilator-to-onesided", 4, "converses: annihilator inverse ⟹ one-sided pairs; both annihilator ⟹ annihilator inverse", ann_inverse_converses),
    hunt("witness-inequality-left-vs-rightann", 3, "converse: left and right annihilator (b,c)-invertible ⟹ the witnesses coincide", witness_inequality),
    hunt("onesided-without-regular-bc", 3, "converse: left or right (b,c)-invertible ⟹ b, c regular", onesided_without_regularity),
    holds("five-way-left", 3, "left (b,c)-invertible ⟺ … ⟺ R = Rca + °b (five conditions)", five_way_left),
    holds("five-way-right", 3, "right (b,c)-invertible ⟺ … ⟺ R = abR + c° (five conditions)", five_way_right),
    holds("direct-sum-two-sided", 3, "(b,c)-invertible ⟺ R = abR ⊕ c° and R = Rca ⊕ °b (five conditions)", direct_sum_two_sided),
    holds("lemma-13-criteria", 1, "a{1,3} ≠ ∅ ⟺ a*R = a*aR ⟺ Ra = Ra*a ⟺ R = Ra* + °a ⟺ R = aR + (a*)°", lemma_13),
    holds("lemma-14-criteria", 1, "a{1,4} ≠ ∅ ⟺ aR = aa*R ⟺ Ra* = Raa* ⟺ R = Ra + °(a*) ⟺ R = a*R + a°", lemma_14),
    holds("bridge-14-left-astar-one", 1, "left (a*,1)-invertible ⟺ a{1,4} ≠ ∅", bridge_14),
    holds("bridge-13-right-one-astar", 1, "right (1,a*)-invertible ⟺ a{1,3} ≠ ∅", bridge_13),
    holds("bridge-moore-penrose", 1, "Moore-Penrose invertible ⟺ left (a*,1)- and right (1,a*)-invertible", bridge_moore_penrose),
    holds("example-13-implies-right-one-astar", 2, "y ∈ a{1,3} ⟹ y right (1,a*)-inverse", example_13),
    holds("example-14-implies-left-astar-one", 2, "y ∈ a{1,4} ⟹ y left (a*,1)-inverse", example_14),
    holds("example-two-sided-implies-onesided", 4, "y (b,c)-inverse ⟹ y left and right (b,c)-inverse", example_two_sided),
    holds("example-along-implies-dd", 3, "(one-sided) inverse along d ⟹ (one-sided) (d,d)-inverse", example_along),
    holds("pi-regular-bridge-left", 1, "left (a^n,1)-invertible ⟺ a^n ∈ Ra^(n+1)", pi_bridge_left),
    holds("pi-regular-bridge-right", 1, "right (1,a^n)-invertible ⟺ a^n ∈ a^(n+1)R", pi_bridge_right),
    holds("strongly-pi-regular-bridge", 1, "Drazin invertible ⟺ left (a^n,1)- and right (1,a^n)-invertible for some n", strongly_pi_bridge),
    holds("star-one-bridge", 1, "right (a*,1) ⟺ R = aa*R; left (1,a*) ⟺ R = Ra*a", star_one_bridge),
    holds("a-astar-bridge", 1, "left (a,a*) ⟺ Ra = Ra*a²; right (a,a*) ⟺ a*R = a*a²R", a_star_bridge),
    holds("astar-a-bridge", 1, "left (a*,a) ⟺ Ra* = Ra²a*; right (a*,a) ⟺ aR = a²a*R", star_a_bridge),
    holds("special-case-units", 1, "left (right) (1,1)-invertible ⟺ left (right) invertible", special_units),
    holds("special-case-regular", 1, "left (right) (a,a)-invertible ⟺ a ∈ Ra² (a ∈ a²R)", special_regular),
    holds("special-case-star-regular", 1, "left (right) (a*,a*)-invertible ⟺ left (right) *-regular ⟺ Moore-Penrose invertible", special_star_regular),
    holds("special-case-powers", 1, "left (right) (a^n,a^n)-invertible ⟺ left (right) π-regular at n", special_powers),
    holds("product-split-left", 5, "paq left (b,c) ⟺ pa left (qb,c) and aq left (b,cp); x = qy, z = yp, y = zax", split_left),
    holds("product-split-right", 5, "paq right (b,c) ⟺ pa right (qb,c) and aq right (b,cp); x = qy, z = yp, y = zax", split_right),
    holds("product-transfer-left", 5, "q′qb = b ⟹ (paq left (b,c) ⟺ a left (qb,cp)), w = qyp", transfer_left),
    holds("product-transfer-right", 5, "cpp′ = c ⟹ (paq right (b,c) ⟺ a right (qb,cp)), w = qyp", transfer_right),
    holds("product-transfer-two-sided", 5, "q′qb = b, cpp′ = c ⟹ (paq (b,c) ⟺ a (qb,cp)), w = qyp", transfer_two_sided),
    holds("product-mixed", 5, "q′qc = c, bpp′ = b ⟹ (paq (b,c) ⟺ pa right (qb,qc) and aq left (bp,cp)), y = zax", mixed),
    hunt("product-witness-relations-arbitrary", 5, "converse reading: y = zax, x = qy, z = yp for arbitrary witness choices", arbitrary_witness_relations),
    holds("jacobson-i", 2, "1+ab left invertible ⟺ 1+ba left invertible; y(1+ab) = 1 ⟹ (1-bya)(1+ba) = 1", jacobson_i),
    holds("jacobson-ii", 2, "1+ab right invertible ⟺ 1+ba right invertible; (1+ab)x = 1 ⟹ (1+ba)(1-bxa) = 1", jacobson_ii),
    holds("jacobson-iii", 2, "1+ab invertible ⟺ 1+ba invertible; (1+ba)⁻¹ = 1 - b(1+ab)⁻¹a", jacobson_iii),
    holds("perturbation-left-4way", 5, "α left (b,c) ⟺ α right_ann (b,c) ⟺ 1+(α-a)a_bc left inv ⟺ 1+a_bc(α-a) left inv", perturbation_left),
    holds("perturbation-right-4way", 5, "α right (b,c) ⟺ α left_ann (b,c) ⟺ 1+(α-a)a_bc right inv ⟺ 1+a_bc(α-a) right inv", perturbation_right),
];
