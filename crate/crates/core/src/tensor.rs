//! Noncommutative tensors of fixed degree over `V = span{x, y}`.
//!
//! A degree-`d` tensor stores all `2^d` coefficients densely, indexed by
//! words over `{x, y}` in lexicographic order (`x < y`), with the first
//! letter most significant. Provides the cyclic permutation on degree 4,
//! left partial derivatives, slot-wise linear substitution, point
//! evaluation and exact kernel computation over relation spaces.
//!
//! Convention (fixed here for the whole crate): a slot matrix `m`
//! substitutes by rows, `x -> m11*x + m12*y`, `y -> m21*x + m22*y`, and a
//! point representative transforms by column action `p -> m*p`. With this
//! pairing, evaluation satisfies
//! `apply_slotwise((m1,m2,m3), f)(p1,p2,p3) = f(m1*p1, m2*p2, m3*p3)`
//! as an exact identity of values (the dual-map transport of the zero
//! set), which every other module relies on.

use std::fmt;
use std::str::FromStr;

use crate::linalg::{self, Mat2};
use num_traits::Zero as _;

use crate::proj::ProjPoint;
use crate::scalar::Scalar;
use crate::{Error, Result};

/// One of the two generators of `V`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    X,
    Y,
}

/// A word over `{x, y}` of fixed length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Word {
    degree: usize,
    index: usize,
}

impl Word {
    pub fn from_index(degree: usize, index: usize) -> Self {
        debug_assert!(index < (1 << degree));
        Word { degree, index }
    }

    pub fn letters(&self) -> Vec<Generator> {
        (0..self.degree)
            .map(|k| {
                if self.index >> (self.degree - 1 - k) & 1 == 0 {
                    Generator::X
                } else {
                    Generator::Y
                }
            })
            .collect()
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn degree(&self) -> usize {
        self.degree
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in self.letters() {
            write!(f, "{}", if l == Generator::X { 'x' } else { 'y' })?;
        }
        Ok(())
    }
}

fn word_index(word: &str) -> Result<(usize, usize)> {
    let mut idx = 0usize;
    let mut deg = 0usize;
    for c in word.chars() {
        idx <<= 1;
        match c {
            'x' => {}
            'y' => idx |= 1,
            _ => return Err(Error::Parse(format!("bad word `{word}`"))),
        }
        deg += 1;
    }
    Ok((deg, idx))
}

/// A noncommutative tensor of fixed degree with dense exact coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct NcTensor {
    degree: usize,
    coeffs: Vec<Scalar>,
}

impl fmt::Debug for NcTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl NcTensor {
    pub fn zero(degree: usize) -> Self {
        NcTensor {
            degree,
            coeffs: vec![Scalar::zero(); 1 << degree],
        }
    }

    /// Build from `(word, coefficient)` pairs, e.g. `[("xxy", c1), ...]`.
    pub fn from_terms(degree: usize, terms: &[(&str, Scalar)]) -> Result<Self> {
        let mut t = NcTensor::zero(degree);
        for (w, c) in terms {
            let (d, idx) = word_index(w)?;
            if d != degree {
                return Err(Error::DegreeMismatch { expected: degree, got: d });
            }
            t.coeffs[idx] = &t.coeffs[idx] + c;
        }
        Ok(t)
    }

    /// Same as [`NcTensor::from_terms`] with integer coefficients.
    pub fn from_int_terms(degree: usize, terms: &[(&str, i64)]) -> Result<Self> {
        let owned: Vec<(&str, Scalar)> =
            terms.iter().map(|(w, c)| (*w, Scalar::from_int(*c))).collect();
        NcTensor::from_terms(degree, &owned)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeff(&self, word: &str) -> Result<&Scalar> {
        let (d, idx) = word_index(word)?;
        if d != self.degree {
            return Err(Error::DegreeMismatch { expected: self.degree, got: d });
        }
        Ok(&self.coeffs[idx])
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    pub fn add(&self, rhs: &NcTensor) -> NcTensor {
        debug_assert_eq!(self.degree, rhs.degree);
        NcTensor {
            degree: self.degree,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &NcTensor) -> NcTensor {
        debug_assert_eq!(self.degree, rhs.degree);
        NcTensor {
            degree: self.degree,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> NcTensor {
        NcTensor {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// The tensor `g (x) self` of one higher degree.
    pub fn prepend(&self, g: Generator) -> NcTensor {
        let mut out = NcTensor::zero(self.degree + 1);
        let shift = if g == Generator::Y { 1 << self.degree } else { 0 };
        for (i, c) in self.coeffs.iter().enumerate() {
            out.coeffs[shift + i] = c.clone();
        }
        out
    }

    /// The tensor `self (x) g` of one higher degree.
    pub fn append(&self, g: Generator) -> NcTensor {
        let mut out = NcTensor::zero(self.degree + 1);
        let bit = if g == Generator::Y { 1 } else { 0 };
        for (i, c) in self.coeffs.iter().enumerate() {
            out.coeffs[(i << 1) | bit] = c.clone();
        }
        out
    }

    fn check_degree(&self, expected: usize) -> Result<()> {
        if self.degree != expected {
            Err(Error::DegreeMismatch { expected, got: self.degree })
        } else {
            Ok(())
        }
    }
}

/// Cyclic permutation on degree-4 tensors:
/// the coefficient of `v1 v2 v3 v4` in the output equals the coefficient
/// of `v2 v3 v4 v1` in the input.
pub fn cyclic_phi(w: &NcTensor) -> Result<NcTensor> {
    w.check_degree(4)?;
    let mut out = NcTensor::zero(4);
    for idx in 0..16 {
        // rotate the 4-bit word left by one: v1v2v3v4 -> v2v3v4v1
        let rotated = ((idx << 1) & 0b1110) | (idx >> 3);
        out.coeffs[idx] = w.coeffs[rotated].clone();
    }
    Ok(out)
}

/// Left partial derivative: the `g`-component of `w = x(x)w_x + y(x)w_y`.
pub fn partial(w: &NcTensor, g: Generator) -> Result<NcTensor> {
    w.check_degree(4)?;
    let mut out = NcTensor::zero(3);
    let shift = if g == Generator::Y { 8 } else { 0 };
    for i in 0..8 {
        out.coeffs[i] = w.coeffs[shift + i].clone();
    }
    Ok(out)
}

/// Right partial: the `g`-component of `w = w'_x (x) x + w'_y (x) y`.
pub fn right_partial(w: &NcTensor, g: Generator) -> Result<NcTensor> {
    w.check_degree(4)?;
    let mut out = NcTensor::zero(3);
    let bit = if g == Generator::Y { 1 } else { 0 };
    for i in 0..8 {
        out.coeffs[i] = w.coeffs[(i << 1) | bit].clone();
    }
    Ok(out)
}

/// Apply one 2x2 matrix per slot (row-substitution convention, see the
/// module docs). `maps.len()` must equal the tensor degree.
pub fn apply_slotwise(maps: &[Mat2], t: &NcTensor) -> Result<NcTensor> {
    if maps.len() != t.degree {
        return Err(Error::DegreeMismatch { expected: t.degree, got: maps.len() });
    }
    let d = t.degree;
    let mut out = NcTensor::zero(d);
    for (idx, c) in t.coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        // expand the product of per-slot images of each letter
        let mut terms: Vec<(usize, Scalar)> = vec![(0, c.clone())];
        for (slot, map) in maps.iter().enumerate() {
            let letter = (idx >> (d - 1 - slot)) & 1;
            let row = &map.e[letter];
            let mut next = Vec::with_capacity(terms.len() * 2);
            for (widx, coef) in &terms {
                if !row[0].is_zero() {
                    next.push((widx << 1, coef * &row[0]));
                }
                if !row[1].is_zero() {
                    next.push(((widx << 1) | 1, coef * &row[1]));
                }
            }
            terms = next;
        }
        for (widx, coef) in terms {
            out.coeffs[widx] = &out.coeffs[widx] + &coef;
        }
    }
    Ok(out)
}

/// Evaluate a tensor at one point representative per slot:
/// `sum_w c_w * p1(w1) * ... * pd(wd)` with `p(x) = a`, `p(y) = b`.
pub fn evaluate(f: &NcTensor, points: &[ProjPoint]) -> Result<Scalar> {
    if points.len() != f.degree {
        return Err(Error::DegreeMismatch { expected: f.degree, got: points.len() });
    }
    let d = f.degree;
    let mut acc = Scalar::zero();
    for (idx, c) in f.coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut v = c.clone();
        for (slot, p) in points.iter().enumerate() {
            let letter = (idx >> (d - 1 - slot)) & 1;
            v = &v * if letter == 0 { p.a() } else { p.b() };
        }
        acc = &acc + &v;
    }
    Ok(acc)
}

/// A 2-dimensional subspace of the degree-3 tensors, with a canonical
/// reduced row-echelon form so that span equality is data equality.
#[derive(Clone, PartialEq, Eq)]
pub struct RelationSpace {
    basis: [NcTensor; 2],
    rref: [Vec<Scalar>; 2],
}

impl fmt::Debug for RelationSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span{{{}, {}}}", self.basis[0], self.basis[1])
    }
}

impl RelationSpace {
    pub fn new(f1: NcTensor, f2: NcTensor) -> Result<Self> {
        f1.check_degree(3)?;
        f2.check_degree(3)?;
        let mut rows = vec![f1.coeffs.clone(), f2.coeffs.clone()];
        linalg::rref(&mut rows);
        if rows.len() != 2 {
            return Err(Error::Invalid(
                "relation space basis is linearly dependent".into(),
            ));
        }
        let r1 = rows.remove(0);
        let r2 = rows.remove(0);
        Ok(RelationSpace { basis: [f1, f2], rref: [r1, r2] })
    }

    /// The ordered basis this space was constructed with.
    pub fn basis(&self) -> &[NcTensor; 2] {
        &self.basis
    }

    /// Canonical RREF rows (each of length 8).
    pub fn rref_rows(&self) -> &[Vec<Scalar>; 2] {
        &self.rref
    }

    pub fn rref_tensors(&self) -> [NcTensor; 2] {
        let t = |row: &Vec<Scalar>| NcTensor { degree: 3, coeffs: row.clone() };
        [t(&self.rref[0]), t(&self.rref[1])]
    }

    pub fn contains(&self, f: &NcTensor) -> bool {
        if f.degree != 3 {
            return false;
        }
        let mut rows = vec![self.rref[0].clone(), self.rref[1].clone(), f.coeffs.clone()];
        linalg::rref(&mut rows);
        rows.len() == 2
    }

    /// Coordinates of `f` in the constructed basis, when `f` lies in the
    /// span.
    pub fn coordinates(&self, f: &NcTensor) -> Option<(Scalar, Scalar)> {
        let rows: Vec<Vec<Scalar>> = (0..8)
            .map(|c| vec![self.basis[0].coeffs[c].clone(), self.basis[1].coeffs[c].clone()])
            .collect();
        let (part, _) = linalg::solve_affine(&rows, &f.coeffs)?;
        Some((part[0].clone(), part[1].clone()))
    }
}

/// True iff the two spaces have identical canonical RREF.
pub fn span_equal(r1: &RelationSpace, r2: &RelationSpace) -> bool {
    r1.rref == r2.rref
}

/// Exact kernel of the evaluation matrix built from point triples: one
/// row per triple, one column per degree-3 word. Succeeds only when the
/// kernel has dimension exactly 2.
pub fn kernel_of_evaluations(
    rows: &[(ProjPoint, ProjPoint, ProjPoint)],
) -> Result<RelationSpace> {
    let mat: Vec<Vec<Scalar>> = rows
        .iter()
        .map(|(p1, p2, p3)| {
            (0..8)
                .map(|idx: usize| {
                    let l1 = if idx >> 2 & 1 == 0 { p1.a() } else { p1.b() };
                    let l2 = if idx >> 1 & 1 == 0 { p2.a() } else { p2.b() };
                    let l3 = if idx & 1 == 0 { p3.a() } else { p3.b() };
                    &(l1 * l2) * l3
                })
                .collect()
        })
        .collect();
    let ker = linalg::kernel(&mat, 8);
    if ker.len() != 2 {
        return Err(Error::KernelDimension { dim: ker.len(), rank: 8 - ker.len() });
    }
    let t = |v: &Vec<Scalar>| NcTensor { degree: 3, coeffs: v.clone() };
    RelationSpace::new(t(&ker[0]), t(&ker[1]))
}

// ---- text form --------------------------------------------------------

fn render_word(degree: usize, idx: usize) -> String {
    let mut out = String::new();
    let mut k = 0;
    while k < degree {
        let letter = (idx >> (degree - 1 - k)) & 1;
        let mut run = 1;
        while k + run < degree && (idx >> (degree - 1 - k - run)) & 1 == letter {
            run += 1;
        }
        out.push(if letter == 0 { 'x' } else { 'y' });
        if run > 1 {
            out.push_str(&format!("^{run}"));
        }
        k += run;
    }
    out
}

impl fmt::Display for NcTensor {
    /// Sum of `coeff word` terms in canonical word order, e.g.
    /// `x^2y-2xyx+yx^2+(5/6)y^3`. Unit coefficients are folded into the
    /// sign; integer coefficients are bare; all others parenthesized.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (idx, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let word = render_word(self.degree, idx);
            let real_int = c.im().is_zero() && c.re().denom() == &num_bigint::BigInt::from(1);
            if real_int {
                let n = c.re().numer();
                let neg = n < &num_bigint::BigInt::from(0);
                let mag = if neg { -n.clone() } else { n.clone() };
                if neg {
                    write!(f, "-")?;
                } else if !first {
                    write!(f, "+")?;
                }
                if mag != num_bigint::BigInt::from(1) {
                    write!(f, "{mag}")?;
                }
                write!(f, "{word}")?;
            } else if c.im().is_zero() {
                use num_traits::Signed;
                let neg = c.re().is_negative();
                if neg {
                    write!(f, "-")?;
                } else if !first {
                    write!(f, "+")?;
                }
                let mag = Scalar::new(c.re().abs(), num_rational::BigRational::from_integer(0.into()));
                write!(f, "({mag}){word}")?;
            } else {
                if !first {
                    write!(f, "+")?;
                }
                write!(f, "({c}){word}")?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl FromStr for NcTensor {
    type Err = Error;

    /// Parse the text form produced by `Display`: a sum of
    /// `[sign][coeff][*]word` terms, words over `{x,y}` with optional
    /// `^k` powers; complex or fractional coefficients in parentheses.
    fn from_str(text: &str) -> Result<Self> {
        let s: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty tensor".into()));
        }
        let mut terms: Vec<(usize, usize, Scalar)> = Vec::new(); // (deg, idx, coeff)
        let mut pos = 0usize;
        while pos < s.len() {
            let mut sign = Scalar::one();
            if s[pos] == '+' {
                pos += 1;
            } else if s[pos] == '-' {
                sign = -Scalar::one();
                pos += 1;
            }
            if pos >= s.len() {
                return Err(Error::Parse("dangling sign".into()));
            }
            // coefficient
            let mut coeff = Scalar::one();
            if s[pos] == '(' {
                let close = s[pos..]
                    .iter()
                    .position(|&c| c == ')')
                    .ok_or_else(|| Error::Parse("unbalanced parenthesis".into()))?
                    + pos;
                let inner: String = s[pos + 1..close].iter().collect();
                coeff = inner.parse()?;
                pos = close + 1;
            } else if s[pos].is_ascii_digit() || s[pos] == 'i' {
                let start = pos;
                while pos < s.len() && (s[pos].is_ascii_digit() || s[pos] == '/' || s[pos] == 'i') {
                    pos += 1;
                }
                let lit: String = s[start..pos].iter().collect();
                coeff = lit.parse()?;
            }
            if pos < s.len() && s[pos] == '*' {
                pos += 1;
            }
            // word with optional powers
            let mut deg = 0usize;
            let mut idx = 0usize;
            let word_start = pos;
            while pos < s.len() && (s[pos] == 'x' || s[pos] == 'y') {
                let bit = if s[pos] == 'y' { 1 } else { 0 };
                pos += 1;
                let mut power = 1usize;
                if pos < s.len() && s[pos] == '^' {
                    pos += 1;
                    let dstart = pos;
                    while pos < s.len() && s[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    let pw: String = s[dstart..pos].iter().collect();
                    power = pw
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad exponent in `{text}`")))?;
                }
                for _ in 0..power {
                    idx = (idx << 1) | bit;
                    deg += 1;
                }
            }
            if pos == word_start {
                return Err(Error::Parse(format!("expected word at `{text}`")));
            }
            terms.push((deg, idx, &sign * &coeff));
        }
        let degree = terms[0].0;
        if terms.iter().any(|(d, _, _)| *d != degree) {
            return Err(Error::Parse("mixed degrees in tensor".into()));
        }
        let mut t = NcTensor::zero(degree);
        for (_, idx, c) in terms {
            t.coeffs[idx] = &t.coeffs[idx] + &c;
        }
        Ok(t)
    }
}
