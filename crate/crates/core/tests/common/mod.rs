//! Brute-force oracle built only from the ring's multiplication, addition and
//! involution tables. It shares no code with the library's decision procedures.
#![allow(dead_code)]

use bcring::{Element, Ring, RingSpec};

pub struct Oracle {
    pub ring: Ring,
    pub elts: Vec<Element>,
    n: usize,
    mul: Vec<usize>,
    add: Vec<usize>,
    star: Vec<usize>,
}

impl Oracle {
    pub fn new(spec: &str) -> Oracle {
        let ring = Ring::new(spec.parse::<RingSpec>().expect("spec")).expect("ring");
        let elts: Vec<Element> = ring.elements().collect();
        let n = elts.len();
        let idx = |e: Element| e.code() as usize;
        let mut mul = vec![0; n * n];
        let mut add = vec![0; n * n];
        for &x in &elts {
            for &y in &elts {
                mul[idx(x) * n + idx(y)] = idx(ring.mul(x, y));
                add[idx(x) * n + idx(y)] = idx(ring.add(x, y));
            }
        }
        let star = elts.iter().map(|&x| idx(ring.star(x))).collect();
        Oracle { ring, elts, n, mul, add, star }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn m(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.n + y]
    }

    pub fn m3(&self, x: usize, y: usize, z: usize) -> usize {
        self.m(self.m(x, y), z)
    }

    pub fn s(&self, x: usize) -> usize {
        self.star[x]
    }

    pub fn e(&self, x: usize) -> Element {
        self.elts[x]
    }

    pub fn one(&self) -> usize {
        self.ring.one().code() as usize
    }

    pub fn pow(&self, x: usize, k: u32) -> usize {
        (0..k).fold(self.one(), |acc, _| self.m(acc, x))
    }

    /// `Rg` as a membership mask.
    pub fn left_mult(&self, g: usize) -> Vec<bool> {
        let mut out = vec![false; self.n];
        (0..self.n).for_each(|r| out[self.m(r, g)] = true);
        out
    }

    /// `gR` as a membership mask.
    pub fn right_mult(&self, g: usize) -> Vec<bool> {
        let mut out = vec![false; self.n];
        (0..self.n).for_each(|r| out[self.m(g, r)] = true);
        out
    }

    /// `g°`
    pub fn right_ann(&self, g: usize) -> Vec<bool> {
        (0..self.n).map(|x| self.m(g, x) == 0).collect()
    }

    /// `°g`
    pub fn left_ann(&self, g: usize) -> Vec<bool> {
        (0..self.n).map(|x| self.m(x, g) == 0).collect()
    }

    /// `I + J` for two ideal masks.
    pub fn sum(&self, i: &[bool], j: &[bool]) -> Vec<bool> {
        let mut out = vec![false; self.n];
        for x in (0..self.n).filter(|&x| i[x]) {
            for y in (0..self.n).filter(|&y| j[y]) {
                out[self.add[x * self.n + y]] = true;
            }
        }
        out
    }

    pub fn whole(&self, i: &[bool]) -> bool {
        i.iter().all(|&b| b)
    }

    /// `Ry ⊆ Rc`, `yab = b`
    pub fn left_set(&self, a: usize, b: usize, c: usize) -> Vec<usize> {
        let rc = self.left_mult(c);
        (0..self.n).filter(|&y| rc[y] && self.m3(y, a, b) == b).collect()
    }

    /// `yR ⊆ bR`, `cay = c`
    pub fn right_set(&self, a: usize, b: usize, c: usize) -> Vec<usize> {
        let br = self.right_mult(b);
        (0..self.n).filter(|&y| br[y] && self.m3(c, a, y) == c).collect()
    }

    /// `c° ⊆ y°`, `yab = b`
    pub fn right_ann_set(&self, a: usize, b: usize, c: usize) -> Vec<usize> {
        (0..self.n)
            .filter(|&y| {
                self.m3(y, a, b) == b && (0..self.n).all(|x| self.m(c, x) != 0 || self.m(y, x) == 0)
            })
            .collect()
    }

    /// `°b ⊆ °y`, `cay = c`
    pub fn left_ann_set(&self, a: usize, b: usize, c: usize) -> Vec<usize> {
        (0..self.n)
            .filter(|&y| {
                self.m3(c, a, y) == c && (0..self.n).all(|x| self.m(x, b) != 0 || self.m(x, y) == 0)
            })
            .collect()
    }

    /// `y ∈ bRy ∩ yRc`, `yab = b`, `cay = c`
    pub fn two_sided_set(&self, a: usize, b: usize, c: usize) -> Vec<usize> {
        (0..self.n)
            .filter(|&y| {
                self.m3(y, a, b) == b
                    && self.m3(c, a, y) == c
                    && (0..self.n).any(|r| self.m3(b, r, y) == y)
                    && (0..self.n).any(|r| self.m3(y, r, c) == y)
            })
            .collect()
    }

    /// `yay = y`, `yR = bR`, `y° = c°`
    pub fn hybrid_set(&self, a: usize, b: usize, c: usize) -> Vec<usize> {
        let br = self.right_mult(b);
        let cann = self.right_ann(c);
        (0..self.n)
            .filter(|&y| self.m3(y, a, y) == y && self.right_mult(y) == br && self.right_ann(y) == cann)
            .collect()
    }

    /// Solutions of the Penrose equations listed in `eqs`.
    pub fn penrose_set(&self, a: usize, eqs: &[u8]) -> Vec<usize> {
        (0..self.n)
            .filter(|&y| {
                let (ay, ya) = (self.m(a, y), self.m(y, a));
                eqs.iter().all(|e| match e {
                    1 => self.m(ay, a) == a,
                    2 => self.m(y, ay) == y,
                    3 => self.s(ay) == ay,
                    4 => self.s(ya) == ya,
                    _ => unreachable!(),
                })
            })
            .collect()
    }

    pub fn left_unit(&self, x: usize) -> bool {
        (0..self.n).any(|t| self.m(t, x) == self.one())
    }

    pub fn right_unit(&self, x: usize) -> bool {
        (0..self.n).any(|t| self.m(x, t) == self.one())
    }
}
