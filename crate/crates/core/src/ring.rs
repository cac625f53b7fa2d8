//! Finite ring carriers: `Z_n`, `k x k` matrices over `Z_n`, and binary direct products.
//!
//! Every element is stored as a canonical code in `[0, |R|)`:
//!
//! * `zmod:n` uses the residue itself.
//! * `mat:k:zmod:n` reads the row-major entry list as a base-`n` number with the
//!   first entry most significant, so code order is lexicographic order on entries.
//!   The identity has code `sum_i n^(k^2 - 1 - i(k + 1))`.
//! * `prod:(L;R)` encodes the pair `(l, r)` as `l * |R| + r`.
//!
//! In all three carriers zero has code 0. Least-code witness selection throughout
//! the crate relies on this order.

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicU32, Ordering};

use thiserror::Error;

/// Default upper bound on `|R|` accepted by [`Ring::new`].
pub const DEFAULT_CARDINALITY_CAP: u64 = 10_000;

/// Largest `|R|` for which full addition/multiplication tables are precomputed.
const TABLE_LIMIT: u64 = 1296;

/// Largest supported `k^2` for matrix carriers (`2^(k^2)` must fit the cap).
const MAX_MAT_ENTRIES: usize = 13;

static NEXT_RING_ID: AtomicU32 = AtomicU32::new(1);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("modulus must be at least 2, got {0}")]
    ModulusTooSmall(u64),
    #[error("matrix size must be at least 1")]
    EmptyMatrix,
    #[error("ring cardinality {cardinality} exceeds the cap {cap}")]
    CapExceeded { cardinality: u128, cap: u64 },
    #[error("malformed ring spec `{0}`")]
    MalformedSpec(String),
    #[error("malformed element literal `{literal}` for ring {ring}")]
    MalformedElement { literal: String, ring: String },
    #[error("element code {code} out of range for a ring with {cardinality} elements")]
    CodeOutOfRange { code: u64, cardinality: u32 },
    #[error("operands belong to different rings")]
    MixedRing,
}

/// Description of a finite ring carrier.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingSpec {
    Zmod(u64),
    Mat { k: u32, n: u64 },
    Prod(Box<RingSpec>, Box<RingSpec>),
}

impl RingSpec {
    pub fn zmod(n: u64) -> Self {
        RingSpec::Zmod(n)
    }

    pub fn mat(k: u32, n: u64) -> Self {
        RingSpec::Mat { k, n }
    }

    pub fn prod(left: RingSpec, right: RingSpec) -> Self {
        RingSpec::Prod(Box::new(left), Box::new(right))
    }

    /// Exact cardinality, or `None` on overflow of `u128`.
    pub fn cardinality(&self) -> Option<u128> {
        match self {
            RingSpec::Zmod(n) => Some(*n as u128),
            RingSpec::Mat { k, n } => {
                let entries = (*k).checked_mul(*k)?;
                (*n as u128).checked_pow(entries)
            }
            RingSpec::Prod(l, r) => l.cardinality()?.checked_mul(r.cardinality()?),
        }
    }

    fn validate(&self) -> Result<(), RingError> {
        match self {
            RingSpec::Zmod(n) | RingSpec::Mat { n, .. } if *n < 2 => {
                Err(RingError::ModulusTooSmall(*n))
            }
            RingSpec::Mat { k: 0, .. } => Err(RingError::EmptyMatrix),
            RingSpec::Prod(l, r) => {
                l.validate()?;
                r.validate()
            }
            _ => Ok(()),
        }
    }

    /// Expands the family shorthand `zmod:a..b` (inclusive); any other text is
    /// parsed as a single spec.
    pub fn parse_family(text: &str) -> Result<Vec<RingSpec>, RingError> {
        let text = text.trim();
        if let Some(range) = text.strip_prefix("zmod:") {
            if let Some((lo, hi)) = range.split_once("..") {
                let lo: u64 = lo
                    .trim()
                    .parse()
                    .map_err(|_| RingError::MalformedSpec(text.to_string()))?;
                let hi: u64 = hi
                    .trim()
                    .parse()
                    .map_err(|_| RingError::MalformedSpec(text.to_string()))?;
                if lo > hi {
                    return Err(RingError::MalformedSpec(text.to_string()));
                }
                return Ok((lo..=hi).map(RingSpec::Zmod).collect());
            }
        }
        Ok(vec![text.parse()?])
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Zmod(n) => write!(f, "zmod:{n}"),
            RingSpec::Mat { k, n } => write!(f, "mat:{k}:zmod:{n}"),
            RingSpec::Prod(l, r) => write!(f, "prod:({l};{r})"),
        }
    }
}

impl FromStr for RingSpec {
    type Err = RingError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let malformed = || RingError::MalformedSpec(s.to_string());
        if let Some(rest) = s.strip_prefix("zmod:") {
            return rest.trim().parse().map(RingSpec::Zmod).map_err(|_| malformed());
        }
        if let Some(rest) = s.strip_prefix("mat:") {
            let (k, base) = rest.split_once(':').ok_or_else(malformed)?;
            let k: u32 = k.trim().parse().map_err(|_| malformed())?;
            let n = base.trim().strip_prefix("zmod:").ok_or_else(malformed)?;
            let n: u64 = n.trim().parse().map_err(|_| malformed())?;
            return Ok(RingSpec::Mat { k, n });
        }
        if let Some(rest) = s.strip_prefix("prod:") {
            let inner = rest
                .trim()
                .strip_prefix('(')
                .and_then(|r| r.strip_suffix(')'))
                .ok_or_else(malformed)?;
            let (l, r) = split_top_level(inner, ';').ok_or_else(malformed)?;
            return Ok(RingSpec::prod(l.parse()?, r.parse()?));
        }
        Err(malformed())
    }
}

/// Splits at the first `sep` not nested inside `()` or `[]`.
fn split_top_level(s: &str, sep: char) -> Option<(&str, &str)> {
    let mut depth = 0i32;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            c if c == sep && depth == 0 => return Some((&s[..i], &s[i + 1..])),
            _ => {}
        }
    }
    None
}

/// One element of a [`Ring`]: the owning ring's id plus the canonical code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element {
    ring: u32,
    code: u32,
}

impl Element {
    pub fn code(self) -> u32 {
        self.code
    }

    pub fn ring_id(self) -> u32 {
        self.ring
    }
}

/// Structured view of an element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ElementView {
    Residue(u32),
    /// Row-major entries.
    Matrix(Vec<u32>),
    Pair(Box<ElementView>, Box<ElementView>),
}

/// Borrowed view of the carrier shape, used by the factor solvers.
#[derive(Debug, Clone, Copy)]
pub enum Carrier<'a> {
    Zmod { n: u32 },
    Mat { k: usize, n: u32 },
    Prod { left: &'a Ring, right: &'a Ring },
}

#[derive(Debug)]
enum Shape {
    Zmod { n: u32 },
    Mat { k: usize, n: u32 },
    Prod { left: Box<Ring>, right: Box<Ring> },
}

#[derive(Debug)]
struct Tables {
    add: Vec<u32>,
    mul: Vec<u32>,
}

/// An immutable finite ring with identity and a fixed involution
/// (identity on `Z_n`, transpose on matrices, componentwise on products).
#[derive(Debug)]
pub struct Ring {
    id: u32,
    spec: RingSpec,
    size: u32,
    shape: Shape,
    one: u32,
    neg: Vec<u32>,
    star: Vec<u32>,
    tables: Option<Tables>,
}

type Digits = [u32; MAX_MAT_ENTRIES];

impl Ring {
    pub fn new(spec: RingSpec) -> Result<Ring, RingError> {
        Ring::with_cap(spec, DEFAULT_CARDINALITY_CAP)
    }

    pub fn with_cap(spec: RingSpec, cap: u64) -> Result<Ring, RingError> {
        spec.validate()?;
        let cardinality = spec.cardinality().unwrap_or(u128::MAX);
        if cardinality > cap as u128 || cardinality > u32::MAX as u128 {
            return Err(RingError::CapExceeded { cardinality, cap });
        }
        let size = cardinality as u32;
        let shape = match &spec {
            RingSpec::Zmod(n) => Shape::Zmod { n: *n as u32 },
            RingSpec::Mat { k, n } => {
                let k = *k as usize;
                if k * k > MAX_MAT_ENTRIES {
                    return Err(RingError::CapExceeded { cardinality, cap });
                }
                Shape::Mat { k, n: *n as u32 }
            }
            RingSpec::Prod(l, r) => Shape::Prod {
                left: Box::new(Ring::with_cap((**l).clone(), cap)?),
                right: Box::new(Ring::with_cap((**r).clone(), cap)?),
            },
        };
        let mut ring = Ring {
            id: NEXT_RING_ID.fetch_add(1, Ordering::Relaxed),
            spec,
            size,
            shape,
            one: 0,
            neg: Vec::new(),
            star: Vec::new(),
            tables: None,
        };
        ring.one = ring.one_formula();
        ring.neg = (0..size).map(|x| ring.neg_formula(x)).collect();
        ring.star = (0..size).map(|x| ring.star_formula(x)).collect();
        if !matches!(ring.shape, Shape::Zmod { .. }) && size as u64 <= TABLE_LIMIT {
            let mut add = Vec::with_capacity((size * size) as usize);
            let mut mul = Vec::with_capacity((size * size) as usize);
            for x in 0..size {
                for y in 0..size {
                    add.push(ring.add_formula(x, y));
                    mul.push(ring.mul_formula(x, y));
                }
            }
            ring.tables = Some(Tables { add, mul });
        }
        Ok(ring)
    }

    pub fn spec(&self) -> &RingSpec {
        &self.spec
    }

    pub fn id(&self) -> u32 {
        self.id
    }

    pub fn cardinality(&self) -> usize {
        self.size as usize
    }

    pub fn carrier(&self) -> Carrier<'_> {
        match &self.shape {
            Shape::Zmod { n } => Carrier::Zmod { n: *n },
            Shape::Mat { k, n } => Carrier::Mat { k: *k, n: *n },
            Shape::Prod { left, right } => Carrier::Prod { left, right },
        }
    }

    pub fn zero(&self) -> Element {
        self.wrap(0)
    }

    pub fn one(&self) -> Element {
        self.wrap(self.one)
    }

    pub fn element(&self, code: u64) -> Result<Element, RingError> {
        if code >= self.size as u64 {
            return Err(RingError::CodeOutOfRange { code, cardinality: self.size });
        }
        Ok(self.wrap(code as u32))
    }

    /// All elements in code order.
    pub fn elements(&self) -> impl Iterator<Item = Element> + Clone + '_ {
        let id = self.id;
        (0..self.size).map(move |code| Element { ring: id, code })
    }

    pub fn owns(&self, x: Element) -> bool {
        x.ring == self.id && x.code < self.size
    }

    #[inline]
    fn wrap(&self, code: u32) -> Element {
        Element { ring: self.id, code }
    }

    #[inline]
    fn code(&self, x: Element) -> u32 {
        assert!(x.ring == self.id, "element from ring #{} used in ring #{}", x.ring, self.id);
        x.code
    }

    pub fn add(&self, x: Element, y: Element) -> Element {
        self.wrap(self.add_raw(self.code(x), self.code(y)))
    }

    pub fn sub(&self, x: Element, y: Element) -> Element {
        let ny = self.neg[self.code(y) as usize];
        self.wrap(self.add_raw(self.code(x), ny))
    }

    pub fn neg(&self, x: Element) -> Element {
        self.wrap(self.neg[self.code(x) as usize])
    }

    pub fn mul(&self, x: Element, y: Element) -> Element {
        self.wrap(self.mul_raw(self.code(x), self.code(y)))
    }

    /// Left-to-right product of `factors`; the empty product is one.
    pub fn product(&self, factors: &[Element]) -> Element {
        factors.iter().fold(self.one(), |acc, &f| self.mul(acc, f))
    }

    pub fn star(&self, x: Element) -> Element {
        self.wrap(self.star[self.code(x) as usize])
    }

    pub fn pow(&self, x: Element, mut m: u32) -> Element {
        let mut base = self.code(x);
        let mut acc = self.one;
        while m > 0 {
            if m & 1 == 1 {
                acc = self.mul_raw(acc, base);
            }
            base = self.mul_raw(base, base);
            m >>= 1;
        }
        self.wrap(acc)
    }

    pub fn checked_add(&self, x: Element, y: Element) -> Result<Element, RingError> {
        self.same_ring(x, y)?;
        Ok(self.add(x, y))
    }

    pub fn checked_mul(&self, x: Element, y: Element) -> Result<Element, RingError> {
        self.same_ring(x, y)?;
        Ok(self.mul(x, y))
    }

    fn same_ring(&self, x: Element, y: Element) -> Result<(), RingError> {
        if self.owns(x) && self.owns(y) {
            Ok(())
        } else {
            Err(RingError::MixedRing)
        }
    }

    pub fn is_zero(&self, x: Element) -> bool {
        self.code(x) == 0
    }

    /// Least-code `t` with `t x = 1`.
    pub fn left_invertible(&self, x: Element) -> Option<Element> {
        let x = self.code(x);
        (0..self.size).find(|&t| self.mul_raw(t, x) == self.one).map(|t| self.wrap(t))
    }

    /// Least-code `t` with `x t = 1`.
    pub fn right_invertible(&self, x: Element) -> Option<Element> {
        let x = self.code(x);
        (0..self.size).find(|&t| self.mul_raw(x, t) == self.one).map(|t| self.wrap(t))
    }

    /// The two-sided inverse, if any.
    pub fn invertible(&self, x: Element) -> Option<Element> {
        let t = self.left_invertible(x)?;
        (self.mul(x, t) == self.one()).then_some(t)
    }

    // Prod helpers.

    /// Components of a product-ring element, as elements of the factor rings.
    pub fn split(&self, x: Element) -> Option<(Element, Element)> {
        match &self.shape {
            Shape::Prod { left, right } => {
                let (l, r) = split_code(self.code(x), right.size);
                Some((left.wrap(l), right.wrap(r)))
            }
            _ => None,
        }
    }

    pub fn join(&self, l: Element, r: Element) -> Option<Element> {
        match &self.shape {
            Shape::Prod { left, right } => {
                Some(self.wrap(left.code(l) * right.size + right.code(r)))
            }
            _ => None,
        }
    }

    // Mat helpers.

    /// Row-major entries of a matrix element.
    pub fn entries(&self, x: Element) -> Option<Vec<u32>> {
        match self.shape {
            Shape::Mat { k, n } => {
                let d = digits(self.code(x), k * k, n);
                Some(d[..k * k].to_vec())
            }
            _ => None,
        }
    }

    /// Builds a matrix element from row-major entries, reducing each mod `n`.
    pub fn from_entries(&self, entries: &[i64]) -> Option<Element> {
        match self.shape {
            Shape::Mat { k, n } if entries.len() == k * k => {
                let mut d: Digits = [0; MAX_MAT_ENTRIES];
                for (slot, &e) in d.iter_mut().zip(entries) {
                    *slot = e.rem_euclid(n as i64) as u32;
                }
                Some(self.wrap(undigits(&d[..k * k], n)))
            }
            _ => None,
        }
    }

    /// Residue of an element of `Z_n`, reduced from any integer.
    pub fn from_residue(&self, value: i64) -> Option<Element> {
        match self.shape {
            Shape::Zmod { n } => Some(self.wrap(value.rem_euclid(n as i64) as u32)),
            _ => None,
        }
    }

    pub fn view(&self, x: Element) -> ElementView {
        match &self.shape {
            Shape::Zmod { .. } => ElementView::Residue(self.code(x)),
            Shape::Mat { .. } => ElementView::Matrix(self.entries(x).unwrap_or_default()),
            Shape::Prod { left, right } => {
                let (l, r) = self.split(x).expect("product carrier");
                ElementView::Pair(Box::new(left.view(l)), Box::new(right.view(r)))
            }
        }
    }

    /// Formats an element in the literal grammar accepted by [`Ring::parse_element`].
    pub fn format_element(&self, x: Element) -> String {
        match &self.shape {
            Shape::Zmod { .. } => self.code(x).to_string(),
            Shape::Mat { k, .. } => {
                let e = self.entries(x).unwrap_or_default();
                let rows: Vec<String> = e
                    .chunks(*k)
                    .map(|row| {
                        let cells: Vec<String> = row.iter().map(u32::to_string).collect();
                        format!("[{}]", cells.join(","))
                    })
                    .collect();
                format!("[{}]", rows.join(","))
            }
            Shape::Prod { left, right } => {
                let (l, r) = self.split(x).expect("product carrier");
                format!("({};{})", left.format_element(l), right.format_element(r))
            }
        }
    }

    pub fn parse_element(&self, literal: &str) -> Result<Element, RingError> {
        let text = literal.trim();
        let malformed = || RingError::MalformedElement {
            literal: literal.to_string(),
            ring: self.spec.to_string(),
        };
        match &self.shape {
            Shape::Zmod { .. } => {
                let v: i64 = text.parse().map_err(|_| malformed())?;
                Ok(self.from_residue(v).expect("zmod carrier"))
            }
            Shape::Mat { k, .. } => {
                let inner = text
                    .strip_prefix('[')
                    .and_then(|t| t.strip_suffix(']'))
                    .ok_or_else(malformed)?;
                let mut entries = Vec::with_capacity(k * k);
                let mut rest = inner.trim();
                for row_index in 0..*k {
                    if row_index > 0 {
                        rest = rest.strip_prefix(',').ok_or_else(malformed)?.trim_start();
                    }
                    let body = rest.strip_prefix('[').ok_or_else(malformed)?;
                    let close = body.find(']').ok_or_else(malformed)?;
                    let cells: Vec<&str> = body[..close].split(',').collect();
                    if cells.len() != *k {
                        return Err(malformed());
                    }
                    for cell in cells {
                        entries.push(cell.trim().parse::<i64>().map_err(|_| malformed())?);
                    }
                    rest = body[close + 1..].trim_start();
                }
                if !rest.is_empty() {
                    return Err(malformed());
                }
                Ok(self.from_entries(&entries).expect("matrix carrier"))
            }
            Shape::Prod { left, right } => {
                let inner = text
                    .strip_prefix('(')
                    .and_then(|t| t.strip_suffix(')'))
                    .ok_or_else(malformed)?;
                let (l, r) = split_top_level(inner, ';').ok_or_else(malformed)?;
                let l = left.parse_element(l).map_err(|_| malformed())?;
                let r = right.parse_element(r).map_err(|_| malformed())?;
                Ok(self.join(l, r).expect("product carrier"))
            }
        }
    }

    // Raw arithmetic on codes.

    #[inline]
    fn add_raw(&self, x: u32, y: u32) -> u32 {
        match &self.tables {
            Some(t) => t.add[(x * self.size + y) as usize],
            None => self.add_formula(x, y),
        }
    }

    #[inline]
    fn mul_raw(&self, x: u32, y: u32) -> u32 {
        match &self.tables {
            Some(t) => t.mul[(x * self.size + y) as usize],
            None => self.mul_formula(x, y),
        }
    }

    fn add_formula(&self, x: u32, y: u32) -> u32 {
        match &self.shape {
            Shape::Zmod { n } => ((x as u64 + y as u64) % *n as u64) as u32,
            Shape::Mat { k, n } => {
                let kk = k * k;
                let (dx, dy) = (digits(x, kk, *n), digits(y, kk, *n));
                let mut out: Digits = [0; MAX_MAT_ENTRIES];
                for i in 0..kk {
                    out[i] = (dx[i] + dy[i]) % n;
                }
                undigits(&out[..kk], *n)
            }
            Shape::Prod { left, right } => {
                let (xl, xr) = split_code(x, right.size);
                let (yl, yr) = split_code(y, right.size);
                left.add_raw(xl, yl) * right.size + right.add_raw(xr, yr)
            }
        }
    }

    fn mul_formula(&self, x: u32, y: u32) -> u32 {
        match &self.shape {
            Shape::Zmod { n } => ((x as u64 * y as u64) % *n as u64) as u32,
            Shape::Mat { k, n } => {
                let k = *k;
                let (dx, dy) = (digits(x, k * k, *n), digits(y, k * k, *n));
                let mut out: Digits = [0; MAX_MAT_ENTRIES];
                for i in 0..k {
                    for j in 0..k {
                        let mut acc = 0u64;
                        for l in 0..k {
                            acc += dx[i * k + l] as u64 * dy[l * k + j] as u64;
                        }
                        out[i * k + j] = (acc % *n as u64) as u32;
                    }
                }
                undigits(&out[..k * k], *n)
            }
            Shape::Prod { left, right } => {
                let (xl, xr) = split_code(x, right.size);
                let (yl, yr) = split_code(y, right.size);
                left.mul_raw(xl, yl) * right.size + right.mul_raw(xr, yr)
            }
        }
    }

    fn neg_formula(&self, x: u32) -> u32 {
        match &self.shape {
            Shape::Zmod { n } => (n - x) % n,
            Shape::Mat { k, n } => {
                let kk = k * k;
                let mut d = digits(x, kk, *n);
                for e in d.iter_mut().take(kk) {
                    *e = (n - *e) % n;
                }
                undigits(&d[..kk], *n)
            }
            Shape::Prod { left, right } => {
                let (l, r) = split_code(x, right.size);
                left.neg[l as usize] * right.size + right.neg[r as usize]
            }
        }
    }

    fn star_formula(&self, x: u32) -> u32 {
        match &self.shape {
            Shape::Zmod { .. } => x,
            Shape::Mat { k, n } => {
                let k = *k;
                let d = digits(x, k * k, *n);
                let mut t: Digits = [0; MAX_MAT_ENTRIES];
                for i in 0..k {
                    for j in 0..k {
                        t[j * k + i] = d[i * k + j];
                    }
                }
                undigits(&t[..k * k], *n)
            }
            Shape::Prod { left, right } => {
                let (l, r) = split_code(x, right.size);
                left.star[l as usize] * right.size + right.star[r as usize]
            }
        }
    }

    fn one_formula(&self) -> u32 {
        match &self.shape {
            Shape::Zmod { n } => 1 % n,
            Shape::Mat { k, n } => {
                let mut d: Digits = [0; MAX_MAT_ENTRIES];
                for i in 0..*k {
                    d[i * k + i] = 1;
                }
                undigits(&d[..k * k], *n)
            }
            Shape::Prod { left, right } => left.one * right.size + right.one,
        }
    }
}

#[inline]
fn split_code(x: u32, right_size: u32) -> (u32, u32) {
    (x / right_size, x % right_size)
}

#[inline]
fn digits(mut code: u32, len: usize, n: u32) -> Digits {
    let mut d: Digits = [0; MAX_MAT_ENTRIES];
    for slot in d[..len].iter_mut().rev() {
        *slot = code % n;
        code /= n;
    }
    d
}

#[inline]
fn undigits(d: &[u32], n: u32) -> u32 {
    d.iter().fold(0, |acc, &e| acc * n + e)
}
