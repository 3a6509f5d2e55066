//! Arithmetic in GF(4) = {0, 1, w, w^2}, vectors over it, and the map to Pauli strings.
//!
//! Elements are stored as two bits `(c1, cw)` with `x = c1 + cw*w`, so addition
//! is XOR: 0 = 00, 1 = 10, w = 01, w^2 = 1 + w = 11.

use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use crate::bits::{BitVec, EchelonBasis};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GF4 {
    Zero,
    One,
    W,
    W2,
}

impl GF4 {
    pub const ALL: [GF4; 4] = [GF4::Zero, GF4::One, GF4::W, GF4::W2];
    pub const NONZERO: [GF4; 3] = [GF4::One, GF4::W, GF4::W2];

    /// `(coefficient of 1, coefficient of w)`.
    #[inline]
    pub fn bits(self) -> (bool, bool) {
        match self {
            GF4::Zero => (false, false),
            GF4::One => (true, false),
            GF4::W => (false, true),
            GF4::W2 => (true, true),
        }
    }

    #[inline]
    pub fn from_bits(one: bool, w: bool) -> GF4 {
        match (one, w) {
            (false, false) => GF4::Zero,
            (true, false) => GF4::One,
            (false, true) => GF4::W,
            (true, true) => GF4::W2,
        }
    }

    /// Exponent of `w` for nonzero elements.
    fn log(self) -> Option<u8> {
        match self {
            GF4::Zero => None,
            GF4::One => Some(0),
            GF4::W => Some(1),
            GF4::W2 => Some(2),
        }
    }

    fn exp(e: u8) -> GF4 {
        [GF4::One, GF4::W, GF4::W2][(e % 3) as usize]
    }

    pub fn square(self) -> GF4 {
        self * self
    }

    pub fn is_zero(self) -> bool {
        self == GF4::Zero
    }

    /// Trace inner product `<a, b> = a b^2 + a^2 b`, which always lands in GF(2).
    pub fn trace_inner(self, b: GF4) -> bool {
        let t = self * b.square() + self.square() * b;
        debug_assert!(matches!(t, GF4::Zero | GF4::One));
        t == GF4::One
    }

    pub fn symbol(self) -> char {
        match self {
            GF4::Zero => '0',
            GF4::One => '1',
            GF4::W => 'w',
            GF4::W2 => 'W',
        }
    }

    pub fn from_symbol(c: char) -> Option<GF4> {
        match c {
            '0' => Some(GF4::Zero),
            '1' => Some(GF4::One),
            'w' => Some(GF4::W),
            'W' => Some(GF4::W2),
            _ => None,
        }
    }

    pub fn alpha(self) -> Pauli {
        match self {
            GF4::Zero => Pauli::I,
            GF4::One => Pauli::X,
            GF4::W => Pauli::Y,
            GF4::W2 => Pauli::Z,
        }
    }
}

impl Add for GF4 {
    type Output = GF4;
    fn add(self, rhs: GF4) -> GF4 {
        let (a1, aw) = self.bits();
        let (b1, bw) = rhs.bits();
        GF4::from_bits(a1 ^ b1, aw ^ bw)
    }
}

impl Mul for GF4 {
    type Output = GF4;
    // logarithms add
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: GF4) -> GF4 {
        match (self.log(), rhs.log()) {
            (Some(a), Some(b)) => GF4::exp(a + b),
            _ => GF4::Zero,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    pub fn symbol(self) -> char {
        match self {
            Pauli::I => 'I',
            Pauli::X => 'X',
            Pauli::Y => 'Y',
            Pauli::Z => 'Z',
        }
    }
}

/// Phase-free Pauli string.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PauliString(pub Vec<Pauli>);

impl PauliString {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Preimage under the alpha map.
    pub fn to_gf4(&self) -> GF4Vector {
        GF4Vector(
            self.0
                .iter()
                .map(|p| match p {
                    Pauli::I => GF4::Zero,
                    Pauli::X => GF4::One,
                    Pauli::Y => GF4::W,
                    Pauli::Z => GF4::W2,
                })
                .collect(),
        )
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|p| write!(f, "{}", p.symbol()))
    }
}

/// Two Pauli strings commute iff the trace inner product of their preimages vanishes.
pub fn pauli_commute(p: &PauliString, q: &PauliString) -> Result<bool> {
    Ok(!p.to_gf4().trace_inner(&q.to_gf4())?)
}

/// Vector of GF(4)^n.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GF4Vector(pub Vec<GF4>);

impl GF4Vector {
    pub fn zeros(n: usize) -> Self {
        GF4Vector(vec![GF4::Zero; n])
    }

    pub fn constant(n: usize, x: GF4) -> Self {
        GF4Vector(vec![x; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|x| x.is_zero())
    }

    fn check_len(&self, other: &GF4Vector) -> Result<()> {
        if self.len() == other.len() {
            Ok(())
        } else {
            Err(Error::LengthMismatch {
                expected: self.len(),
                found: other.len(),
            })
        }
    }

    pub fn add(&self, other: &GF4Vector) -> Result<GF4Vector> {
        self.check_len(other)?;
        Ok(GF4Vector(
            self.0.iter().zip(&other.0).map(|(&a, &b)| a + b).collect(),
        ))
    }

    /// GF(2) sum of the coordinatewise trace inner products.
    pub fn trace_inner(&self, other: &GF4Vector) -> Result<bool> {
        self.check_len(other)?;
        Ok(self
            .0
            .iter()
            .zip(&other.0)
            .fold(false, |acc, (&a, &b)| acc ^ a.trace_inner(b)))
    }

    /// Keeps the entries indexed by `set`; zero elsewhere.
    pub fn restrict(&self, set: &[usize]) -> Result<GF4Vector> {
        let mut out = GF4Vector::zeros(self.len());
        for &i in set {
            if i >= self.len() {
                return Err(Error::VertexOutOfRange {
                    vertex: i,
                    n: self.len(),
                });
            }
            out.0[i] = self.0[i];
        }
        Ok(out)
    }

    /// Restriction to the indicator set `mask`.
    pub fn restrict_mask(&self, mask: &BitVec) -> GF4Vector {
        assert_eq!(mask.len(), self.len());
        GF4Vector(
            self.0
                .iter()
                .enumerate()
                .map(|(i, &x)| if mask.get(i) { x } else { GF4::Zero })
                .collect(),
        )
    }

    pub fn alpha(&self) -> PauliString {
        PauliString(self.0.iter().map(|x| x.alpha()).collect())
    }

    /// Binary expansion: entry `i` occupies bits `2i` (coefficient of 1) and `2i+1` (of w).
    pub fn to_bits(&self) -> BitVec {
        let mut b = BitVec::zeros(2 * self.len());
        for (i, x) in self.0.iter().enumerate() {
            let (one, w) = x.bits();
            b.set(2 * i, one);
            b.set(2 * i + 1, w);
        }
        b
    }

    pub fn from_bits(b: &BitVec) -> GF4Vector {
        assert!(b.len().is_multiple_of(2));
        GF4Vector(
            (0..b.len() / 2)
                .map(|i| GF4::from_bits(b.get(2 * i), b.get(2 * i + 1)))
                .collect(),
        )
    }
}

impl fmt::Display for GF4Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|x| write!(f, "{}", x.symbol()))
    }
}

impl FromStr for GF4Vector {
    type Err = Error;

    /// Parses a word over `{0, 1, w, W}` (`W` is w^2).
    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .chars()
            .map(|c| {
                GF4::from_symbol(c).ok_or_else(|| {
                    Error::Parse(format!("`{c}` is not a GF(4) symbol (expected 0, 1, w, W)"))
                })
            })
            .collect::<Result<Vec<_>>>()
            .map(GF4Vector)
    }
}

/// Subspace of GF(4)^n closed under addition, i.e. a GF(2)-span.
///
/// Dimensions are binary dimensions: the subspace has `2^dim` elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GF4Subspace {
    n: usize,
    basis: EchelonBasis,
}

impl GF4Subspace {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            basis: EchelonBasis::new(2 * n),
        }
    }

    pub fn span(n: usize, vectors: &[GF4Vector]) -> Result<Self> {
        let mut s = Self::zero(n);
        for v in vectors {
            s.insert(v)?;
        }
        Ok(s)
    }

    fn check(&self, v: &GF4Vector) -> Result<()> {
        if v.len() == self.n {
            Ok(())
        } else {
            Err(Error::LengthMismatch {
                expected: self.n,
                found: v.len(),
            })
        }
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: &GF4Vector) -> Result<bool> {
        self.check(v)?;
        Ok(self.basis.insert(&v.to_bits()))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn contains(&self, v: &GF4Vector) -> Result<bool> {
        self.check(v)?;
        Ok(self.basis.contains(&v.to_bits()))
    }

    /// Echelon basis rows, decoded.
    pub fn basis(&self) -> Vec<GF4Vector> {
        self.basis.rows().iter().map(GF4Vector::from_bits).collect()
    }

    /// Every element of the subspace. Exponential in `dim`.
    pub fn elements(&self) -> Vec<GF4Vector> {
        let rows = self.basis.rows();
        assert!(rows.len() < 32, "subspace too large to list");
        (0u64..1 << rows.len())
            .map(|m| {
                let mut acc = BitVec::zeros(2 * self.n);
                for (i, r) in rows.iter().enumerate() {
                    if m >> i & 1 == 1 {
                        acc.xor_assign(r);
                    }
                }
                GF4Vector::from_bits(&acc)
            })
            .collect()
    }

    pub fn sum(&self, other: &GF4Subspace) -> Result<GF4Subspace> {
        if self.n != other.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        let mut out = self.clone();
        out.basis.extend(other.basis.rows());
        Ok(out)
    }

    /// Intersection via the Zassenhaus construction: reduce the rows `[a | a]`
    /// and `[b | 0]`; rows whose left half vanishes span the intersection.
    pub fn intersect(&self, other: &GF4Subspace) -> Result<GF4Subspace> {
        if self.n != other.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        let m = 2 * self.n;
        // Pivots are leading (highest) bits, so the left half goes in the high bits.
        let mut z = EchelonBasis::new(2 * m);
        let lift = |left: &BitVec, right: &BitVec| {
            BitVec::from_indices(
                2 * m,
                right.iter_ones().chain(left.iter_ones().map(|i| i + m)),
            )
        };
        for a in self.basis.rows() {
            z.insert(&lift(a, a));
        }
        for b in other.basis.rows() {
            z.insert(&lift(b, &BitVec::zeros(m)));
        }
        let mut out = GF4Subspace::zero(self.n);
        for row in z.rows() {
            if row.iter_ones().all(|i| i < m) {
                out.basis.insert(&BitVec::from_indices(m, row.iter_ones()));
            }
        }
        Ok(out)
    }
}
