//! The six geometric-pair types on `P1 x P1`, their automorphisms
//! `sigma`, point sampling, relation extraction through the kernel of
//! evaluations, and the closed-form relation constructors.
//!
//! Component normal forms. The T family is pinned by the requirement
//! that the monodromy `tau2^-1 tau1` be unipotent with the common fixed
//! point at `(1:0)`; the remaining representatives were derived by
//! postulating the natural shape (diagonal for P1/S1, unipotent for P2,
//! antidiagonal for S2) and accepting the candidate once the kernel of
//! evaluations reproduces the closed-form relations at random
//! parameters. The accepted fixtures:
//!
//! - `P1(alpha)`: `tau = diag(1, alpha)`, `sigma(p, q) = (q, tau p)`
//! - `P2`:       `tau = [[1,1],[0,1]]`
//! - `S1(a,b)`:  `tau1 = diag(1, -1/a)`, `tau2 = diag(1, -1/b)`, fixing
//! - `S2(a,b)`:  `tau1 = [[0,-1/a],[1,0]]`, `tau2 = [[0,-1/b],[1,0]]`,
//!   switching
//! - `T1(b)`:    `tau1 = [[1,b],[0,1]]`, `tau2 = [[1,b-1],[0,1]]`, fixing
//! - `T2`:       `tau1 = [[1,1],[0,-1]]`, `tau2 = [[1,-1],[0,-1]]`,
//!   switching. All switching pairs with unipotent monodromy give the
//!   same algebra up to isomorphism, and this fixed representative is
//!   the one whose relations match the closed form; a supplied `beta` is
//!   validated and recorded but does not move the pair.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::linalg::Mat2;
use crate::proj::{
    act, intersection_type, IntersectionType, PairedMaps, ProjMap, ProjPoint,
};
use crate::scalar::Scalar;
use crate::tensor::{apply_slotwise, kernel_of_evaluations, NcTensor, RelationSpace};
use crate::{Error, Result};

/// The six geometric-pair types.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Kind {
    P1,
    P2,
    S1,
    S2,
    T1,
    T2,
}

impl Kind {
    pub const ALL: [Kind; 6] = [Kind::P1, Kind::P2, Kind::S1, Kind::S2, Kind::T1, Kind::T2];

    /// The type letter P, S or T.
    pub fn letter(&self) -> char {
        match self {
            Kind::P1 | Kind::P2 => 'P',
            Kind::S1 | Kind::S2 => 'S',
            Kind::T1 | Kind::T2 => 'T',
        }
    }

    pub fn subscript(&self) -> u8 {
        match self {
            Kind::P1 | Kind::S1 | Kind::T1 => 1,
            Kind::P2 | Kind::S2 | Kind::T2 => 2,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Kind::P1 => "P1",
            Kind::P2 => "P2",
            Kind::S1 => "S1",
            Kind::S2 => "S2",
            Kind::T1 => "T1",
            Kind::T2 => "T2",
        }
    }
}

impl std::str::FromStr for Kind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "P1" => Ok(Kind::P1),
            "P2" => Ok(Kind::P2),
            "S1" => Ok(Kind::S1),
            "S2" => Ok(Kind::S2),
            "T1" => Ok(Kind::T1),
            "T2" => Ok(Kind::T2),
            other => Err(Error::Parse(format!("unknown kind `{other}`"))),
        }
    }
}

/// Parameters of a pair; which fields are required depends on the kind.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<Scalar>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta: Option<Scalar>,
}

impl Params {
    pub fn alpha(a: Scalar) -> Self {
        Params { alpha: Some(a), beta: None }
    }

    pub fn beta(b: Scalar) -> Self {
        Params { alpha: None, beta: Some(b) }
    }

    pub fn alpha_beta(a: Scalar, b: Scalar) -> Self {
        Params { alpha: Some(a), beta: Some(b) }
    }

    pub fn none() -> Self {
        Params::default()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub(crate) enum PairShape {
    /// `E = P1 x P1` with `sigma = (id x tau) . nu`.
    Product { tau: ProjMap },
    /// `E = C_{tau1} (u) C_{tau2}`; `fixes` tells whether `sigma`
    /// preserves or switches the components.
    Union { components: PairedMaps, fixes: bool },
}

/// A geometric pair `(E, sigma)` of one of the six types.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeometricPair {
    kind: Kind,
    params: Params,
    pub(crate) shape: PairShape,
}

impl GeometricPair {
    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    /// The component pair for S/T kinds, `None` for P kinds.
    pub fn components(&self) -> Option<&PairedMaps> {
        match &self.shape {
            PairShape::Union { components, .. } => Some(components),
            PairShape::Product { .. } => None,
        }
    }

    /// Whether `sigma` fixes (true) or switches (false) the components;
    /// `None` for P kinds.
    pub fn fixes_components(&self) -> Option<bool> {
        match &self.shape {
            PairShape::Union { fixes, .. } => Some(*fixes),
            PairShape::Product { .. } => None,
        }
    }

    /// The factor automorphism for P kinds (`sigma = (id x tau) . nu`).
    pub fn product_tau(&self) -> Option<&ProjMap> {
        match &self.shape {
            PairShape::Product { tau } => Some(tau),
            PairShape::Union { .. } => None,
        }
    }
}

fn require(p: &Option<Scalar>, name: &str, kind: Kind) -> Result<Scalar> {
    p.clone()
        .ok_or_else(|| Error::Invalid(format!("kind {} requires parameter {name}", kind.as_str())))
}

fn forbid(p: &Option<Scalar>, name: &str, kind: Kind) -> Result<()> {
    if p.is_some() {
        return Err(Error::Invalid(format!(
            "kind {} takes no parameter {name}",
            kind.as_str()
        )));
    }
    Ok(())
}

fn check_s_conditions(a: &Scalar, b: &Scalar) -> Result<()> {
    if a.is_zero() || b.is_zero() || a * a == b * b {
        return Err(Error::SideCondition("αβ ≠ 0, α² ≠ β²".into()));
    }
    Ok(())
}

/// Build the geometric pair of the given kind, checking side conditions.
pub fn make_pair(kind: Kind, params: &Params) -> Result<GeometricPair> {
    let one = Scalar::one();
    let shape = match kind {
        Kind::P1 => {
            forbid(&params.beta, "beta", kind)?;
            let a = require(&params.alpha, "alpha", kind)?;
            if a.is_zero() {
                return Err(Error::SideCondition("α ≠ 0".into()));
            }
            PairShape::Product {
                tau: ProjMap::new(Mat2::diag(one, a))?,
            }
        }
        Kind::P2 => {
            forbid(&params.alpha, "alpha", kind)?;
            forbid(&params.beta, "beta", kind)?;
            PairShape::Product {
                tau: ProjMap::from_ints(1, 1, 0, 1)?,
            }
        }
        Kind::S1 | Kind::S2 => {
            let a = require(&params.alpha, "alpha", kind)?;
            let b = require(&params.beta, "beta", kind)?;
            check_s_conditions(&a, &b)?;
            let (la, lb) = (-&a.inv()?, -&b.inv()?);
            let components = if kind == Kind::S1 {
                PairedMaps::new(
                    ProjMap::new(Mat2::diag(one.clone(), la))?,
                    ProjMap::new(Mat2::diag(one, lb))?,
                )
            } else {
                PairedMaps::new(
                    ProjMap::new(Mat2::new(Scalar::zero(), la, one.clone(), Scalar::zero()))?,
                    ProjMap::new(Mat2::new(Scalar::zero(), lb, one, Scalar::zero()))?,
                )
            };
            debug_assert_eq!(intersection_type(&components), IntersectionType::Two);
            PairShape::Union { components, fixes: kind == Kind::S1 }
        }
        Kind::T1 => {
            forbid(&params.alpha, "alpha", kind)?;
            let b = require(&params.beta, "beta", kind)?;
            let components = PairedMaps::new(
                ProjMap::new(Mat2::new(one.clone(), b.clone(), Scalar::zero(), one.clone()))?,
                ProjMap::new(Mat2::new(one.clone(), &b - &one, Scalar::zero(), one))?,
            );
            debug_assert_eq!(intersection_type(&components), IntersectionType::One);
            PairShape::Union { components, fixes: true }
        }
        Kind::T2 => {
            forbid(&params.alpha, "alpha", kind)?;
            let components = PairedMaps::new(
                ProjMap::from_ints(1, 1, 0, -1)?,
                ProjMap::from_ints(1, -1, 0, -1)?,
            );
            debug_assert_eq!(intersection_type(&components), IntersectionType::One);
            PairShape::Union { components, fixes: false }
        }
    };
    Ok(GeometricPair { kind, params: params.clone(), shape })
}

/// Apply `sigma` to a point `(p, q)` of `E`. For S/T kinds the point
/// must lie on one of the components.
pub fn sigma_apply(
    gp: &GeometricPair,
    p: &ProjPoint,
    q: &ProjPoint,
) -> Result<(ProjPoint, ProjPoint)> {
    match &gp.shape {
        PairShape::Product { tau } => Ok((q.clone(), act(tau, p))),
        PairShape::Union { components, fixes } => {
            let on1 = act(&components.tau1, p) == *q;
            let on2 = act(&components.tau2, p) == *q;
            if !on1 && !on2 {
                return Err(Error::PointNotOnCurve);
            }
            let next = match (on1, *fixes) {
                (true, true) => act(&components.tau1, q),
                (true, false) => act(&components.tau2, q),
                (false, true) => act(&components.tau2, q),
                (false, false) => act(&components.tau1, q),
            };
            Ok((q.clone(), next))
        }
    }
}

/// A sampled point of the graph of `sigma`: `(p1, p2)` on `E` and
/// `p3 = pi2(sigma(p1, p2))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointTriple {
    pub p1: ProjPoint,
    pub p2: ProjPoint,
    pub p3: ProjPoint,
}

fn random_rational(rng: &mut ChaCha8Rng) -> Scalar {
    let num = rng.gen_range(-30i64..=30);
    let den = rng.gen_range(1i64..=12);
    Scalar::new(
        num_rational::BigRational::new(num.into(), den.into()),
        num_rational::BigRational::from_integer(0.into()),
    )
}

/// Deterministic pseudorandom triples on the graph of `sigma`. For
/// P kinds: `n` independent pairs; for S/T: `n/2` per component,
/// starting with the point `(1:0)`.
pub fn sample_triples(gp: &GeometricPair, n: usize, seed: u64) -> Vec<PointTriple> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(n);
    match &gp.shape {
        PairShape::Product { .. } => {
            for _ in 0..n {
                let p1 = ProjPoint::new(random_rational(&mut rng), Scalar::one())
                    .expect("second coordinate is 1");
                let p2 = ProjPoint::new(random_rational(&mut rng), Scalar::one())
                    .expect("second coordinate is 1");
                let (_, p3) = sigma_apply(gp, &p1, &p2).expect("E is everything");
                out.push(PointTriple { p1, p2, p3 });
            }
        }
        PairShape::Union { components, .. } => {
            let per = n / 2;
            for tau in [&components.tau1, &components.tau2] {
                for k in 0..per {
                    let p1 = if k == 0 {
                        ProjPoint::from_ints(1, 0).expect("valid point")
                    } else {
                        ProjPoint::new(random_rational(&mut rng), Scalar::one())
                            .expect("second coordinate is 1")
                    };
                    let p2 = act(tau, &p1);
                    let (_, p3) = sigma_apply(gp, &p1, &p2).expect("p2 is on the component");
                    out.push(PointTriple { p1, p2, p3 });
                }
            }
        }
    }
    out
}

/// Defining relations by the kernel of evaluations over a growing
/// sample: batches of 10/20/30/40 triples (5 per component and batch
/// for S/T); the rank must reach 6 with an identical kernel on two
/// consecutive batches.
pub fn g2_relations(gp: &GeometricPair) -> Result<RelationSpace> {
    g2_relations_seeded(gp, 7)
}

/// [`g2_relations`] with an explicit sampling seed; the result does not
/// depend on the seed (tested), only the sampled rows do.
pub fn g2_relations_seeded(gp: &GeometricPair, seed: u64) -> Result<RelationSpace> {
    // batches are nested prefixes of one deterministic sample of 40
    let full = sample_triples(gp, 40, seed);
    let rows: Vec<(ProjPoint, ProjPoint, ProjPoint)> = full
        .into_iter()
        .map(|t| (t.p1, t.p2, t.p3))
        .collect();
    let prefix = |n: usize| -> Vec<(ProjPoint, ProjPoint, ProjPoint)> {
        match &gp.shape {
            PairShape::Product { .. } => rows[..n].to_vec(),
            PairShape::Union { .. } => {
                // keep n/2 from each component half of the sample
                let half = n / 2;
                let mut v = rows[..half].to_vec();
                v.extend_from_slice(&rows[20..20 + half]);
                v
            }
        }
    };
    let mut previous: Option<RelationSpace> = None;
    for batch in [10usize, 20, 30, 40] {
        match kernel_of_evaluations(&prefix(batch)) {
            Ok(space) => {
                if let Some(prev) = &previous {
                    if crate::tensor::span_equal(prev, &space) {
                        return Ok(space);
                    }
                }
                previous = Some(space);
            }
            Err(_) => previous = None,
        }
    }
    Err(Error::RankNotStabilized)
}

fn t(degree: usize, terms: &[(&str, Scalar)]) -> NcTensor {
    NcTensor::from_terms(degree, terms).expect("fixture terms are well-formed")
}

/// The closed-form defining relations of each type, instantiated at the
/// given parameters (the two rows of the classification list).
pub fn table_relations(kind: Kind, params: &Params) -> Result<RelationSpace> {
    let one = Scalar::one();
    let two = Scalar::from_int(2);
    let (f1, f2) = match kind {
        Kind::P1 => {
            forbid(&params.beta, "beta", kind)?;
            let a = require(&params.alpha, "alpha", kind)?;
            if a.is_zero() {
                return Err(Error::SideCondition("α ≠ 0".into()));
            }
            (
                t(3, &[("xxy", one.clone()), ("yxx", -&a)]),
                t(3, &[("xyy", one), ("yyx", -&a)]),
            )
        }
        Kind::P2 => {
            forbid(&params.alpha, "alpha", kind)?;
            forbid(&params.beta, "beta", kind)?;
            (
                NcTensor::from_int_terms(3, &[("xxy", 1), ("yxx", -1), ("yxy", 1)])?,
                NcTensor::from_int_terms(3, &[("xyy", 1), ("yyx", -1), ("yyy", 1)])?,
            )
        }
        Kind::S1 => {
            let a = require(&params.alpha, "alpha", kind)?;
            let b = require(&params.beta, "beta", kind)?;
            check_s_conditions(&a, &b)?;
            let ab = &a * &b;
            let apb = &a + &b;
            (
                t(3, &[("xxy", ab.clone()), ("xyx", apb.clone()), ("yxx", one.clone())]),
                t(3, &[("xyy", ab), ("yxy", apb), ("yyx", one)]),
            )
        }
        Kind::S2 => {
            let a = require(&params.alpha, "alpha", kind)?;
            let b = require(&params.beta, "beta", kind)?;
            check_s_conditions(&a, &b)?;
            let apb = &a + &b;
            let inv_sum = &a.inv()? + &b.inv()?;
            (
                t(3, &[("xyy", one.clone()), ("yyx", one.clone()), ("xxx", apb)]),
                t(3, &[("xxy", one.clone()), ("yxx", one), ("yyy", inv_sum)]),
            )
        }
        Kind::T1 => {
            forbid(&params.alpha, "alpha", kind)?;
            let b = require(&params.beta, "beta", kind)?;
            let c = &two * &(&(&two * &b) - &one); // 2(2b - 1)
            let d = &(&two * &b) * &(&b - &one); // 2b(b - 1)
            (
                t(
                    3,
                    &[
                        ("xxy", one.clone()),
                        ("xyx", -&two),
                        ("yxx", one.clone()),
                        ("xyy", c.clone()),
                        ("yxy", -&c),
                        ("yyy", d),
                    ],
                ),
                t(3, &[("xyy", one.clone()), ("yxy", -&two), ("yyx", one)]),
            )
        }
        Kind::T2 => {
            forbid(&params.alpha, "alpha", kind)?;
            (
                NcTensor::from_int_terms(3, &[("xxy", 1), ("xyx", 2), ("yxx", 1), ("yyy", 2)])?,
                NcTensor::from_int_terms(3, &[("xyy", 1), ("yxy", 2), ("yyx", 1)])?,
            )
        }
    };
    RelationSpace::new(f1, f2)
}

/// The relation space `R'` with `(theta^0 (x) theta^1 (x) theta^2)(R') = R`,
/// i.e. `R' = apply_slotwise((id, theta^-1, theta^-2), R)`.
pub fn twist_relations(r: &RelationSpace, theta: &Mat2) -> Result<RelationSpace> {
    let inv = theta.inverse()?;
    let inv2 = inv.mul(&inv);
    let maps = [Mat2::identity(), inv, inv2];
    let [f1, f2] = r.basis();
    RelationSpace::new(apply_slotwise(&maps, f1)?, apply_slotwise(&maps, f2)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensor::span_equal;

    fn s(text: &str) -> Scalar {
        text.parse().unwrap()
    }

    fn rel(f1: &str, f2: &str) -> RelationSpace {
        RelationSpace::new(f1.parse().unwrap(), f2.parse().unwrap()).unwrap()
    }

    #[test]
    fn t1_monodromy_is_unipotent_shift() {
        let gp = make_pair(Kind::T1, &Params::beta(s("3"))).unwrap();
        let m = gp.components().unwrap().monodromy();
        assert_eq!(m, ProjMap::from_ints(1, 1, 0, 1).unwrap());
    }

    #[test]
    fn side_conditions_rejected() {
        let err = make_pair(Kind::S1, &Params::alpha_beta(s("1"), s("1"))).unwrap_err();
        assert_eq!(err, Error::SideCondition("αβ ≠ 0, α² ≠ β²".into()));
        let err = make_pair(Kind::S2, &Params::alpha_beta(s("2"), s("-2"))).unwrap_err();
        assert_eq!(err, Error::SideCondition("αβ ≠ 0, α² ≠ β²".into()));
        let err = make_pair(Kind::P1, &Params::alpha(s("0"))).unwrap_err();
        assert_eq!(err, Error::SideCondition("α ≠ 0".into()));
        assert!(make_pair(Kind::T1, &Params::none()).is_err());
    }

    #[test]
    fn sigma_examples() {
        let p1 = make_pair(Kind::P1, &Params::alpha(s("2"))).unwrap();
        let p = ProjPoint::from_ints(3, 5).unwrap();
        let q = ProjPoint::from_ints(1, 7).unwrap();
        let (i1, i2) = sigma_apply(&p1, &p, &q).unwrap();
        assert_eq!(i1, q);
        assert_eq!(i2, act(p1.product_tau().unwrap(), &p));

        let t1 = make_pair(Kind::T1, &Params::beta(s("3"))).unwrap();
        let tau1 = &t1.components().unwrap().tau1;
        let q = act(tau1, &p);
        let (i1, i2) = sigma_apply(&t1, &p, &q).unwrap();
        assert_eq!(i1, q);
        assert_eq!(i2, act(tau1, &q));

        let t2 = make_pair(Kind::T2, &Params::none()).unwrap();
        let c = t2.components().unwrap();
        let q1 = act(&c.tau1, &p);
        let (_, n1) = sigma_apply(&t2, &p, &q1).unwrap();
        assert_eq!(n1, act(&c.tau2, &q1));
        let q2 = act(&c.tau2, &p);
        let (_, n2) = sigma_apply(&t2, &p, &q2).unwrap();
        assert_eq!(n2, act(&c.tau1, &q2));

        // off-curve points are rejected for S/T kinds
        let off = ProjPoint::from_ints(1, 1).unwrap();
        let bad = ProjPoint::from_ints(8, 9).unwrap();
        assert_eq!(sigma_apply(&t1, &off, &bad).unwrap_err(), Error::PointNotOnCurve);
    }

    #[test]
    fn sample_counts_and_graph_invariant() {
        let t1 = make_pair(Kind::T1, &Params::beta(s("3"))).unwrap();
        let triples = sample_triples(&t1, 6, 11);
        assert_eq!(triples.len(), 6);
        for t in &triples {
            let (q, next) = sigma_apply(&t1, &t.p1, &t.p2).unwrap();
            assert_eq!(q, t.p2); // the Aut^G law: pi1 . sigma = pi2
            assert_eq!(next, t.p3);
        }
        let p1 = make_pair(Kind::P1, &Params::alpha(s("2"))).unwrap();
        assert_eq!(sample_triples(&p1, 12, 11).len(), 12);
    }

    #[test]
    fn g2_matches_printed_examples() {
        let p1 = make_pair(Kind::P1, &Params::alpha(s("2"))).unwrap();
        let k = g2_relations(&p1).unwrap();
        assert!(span_equal(&k, &rel("x^2y-2yx^2", "xy^2-2y^2x")));

        let s2 = make_pair(Kind::S2, &Params::alpha_beta(s("2"), s("3"))).unwrap();
        let k = g2_relations(&s2).unwrap();
        assert!(span_equal(&k, &rel("xy^2+y^2x+5x^3", "x^2y+yx^2+(5/6)y^3")));

        let t1 = make_pair(Kind::T1, &Params::beta(s("0"))).unwrap();
        let k = g2_relations(&t1).unwrap();
        assert!(span_equal(
            &k,
            &table_relations(Kind::T1, &Params::beta(s("0"))).unwrap()
        ));
    }

    #[test]
    fn table_examples_verbatim() {
        let p2 = table_relations(Kind::P2, &Params::none()).unwrap();
        assert_eq!(p2.basis()[0].to_string(), "x^2y-yx^2+yxy");
        assert_eq!(p2.basis()[1].to_string(), "xy^2-y^2x+y^3");

        let t2 = table_relations(Kind::T2, &Params::none()).unwrap();
        assert!(span_equal(&t2, &rel("x^2y+2xyx+yx^2+2y^3", "xy^2+2yxy+y^2x")));

        let s1 = table_relations(Kind::S1, &Params::alpha_beta(s("2"), s("3"))).unwrap();
        assert!(span_equal(&s1, &rel("6x^2y+5xyx+yx^2", "6xy^2+5yxy+y^2x")));
    }

    #[test]
    fn seed_independence() {
        let gp = make_pair(Kind::S1, &Params::alpha_beta(s("-5/3"), s("7/2"))).unwrap();
        let a = g2_relations_seeded(&gp, 1).unwrap();
        let b = g2_relations_seeded(&gp, 99).unwrap();
        assert!(span_equal(&a, &b));
    }

    #[test]
    fn zero_set_transport_under_twist() {
        // if R' = twist_relations(R, theta), i.e. (th^0 x th^1 x th^2)(R') = R,
        // then every sampled zero (p1,p2,p3) of R transports to the zero
        // (p1, theta p2, theta^2 p3) of R'
        let gp = make_pair(Kind::S1, &Params::alpha_beta(s("2"), s("3"))).unwrap();
        let r = g2_relations(&gp).unwrap();
        for theta in [
            Mat2::from_ints(1, 2, 0, 1),
            Mat2::from_ints(2, 0, 0, 3),
            Mat2::from_ints(0, 1, -1, 0),
            Mat2::diag(Scalar::i(), Scalar::one()),
        ] {
            let rp = twist_relations(&r, &theta).unwrap();
            let t2m = theta.mul(&theta);
            let tmap = ProjMap::new(theta.clone()).unwrap();
            let t2map = ProjMap::new(t2m).unwrap();
            for tri in sample_triples(&gp, 10, 5) {
                let moved = [tri.p1.clone(), act(&tmap, &tri.p2), act(&t2map, &tri.p3)];
                for f in rp.basis() {
                    assert!(crate::tensor::evaluate(f, &moved).unwrap().is_zero());
                }
            }
        }
    }

    #[test]
    fn twist_of_t2_relations_lands_on_rescaled_t1() {
        // twisting the T2 relations by diag(i, -i) gives exactly the
        // derivation quotient of the twisted superpotential, which is the
        // T1(1/2) algebra in y-rescaled coordinates
        let theta = Mat2::diag(Scalar::i(), -Scalar::i());
        let t2 = table_relations(Kind::T2, &Params::none()).unwrap();
        let twisted = twist_relations(&t2, &theta).unwrap();
        let dw = crate::superpot::derivation_quotient(&crate::superpot::w_t2_twist()).unwrap();
        assert!(span_equal(&twisted, dw.space()));

        // substitute y -> 2y in the T1(1/2) closed form to land on it
        let t1_half = table_relations(Kind::T1, &Params::beta(s("1/2"))).unwrap();
        let sub = Mat2::from_ints(1, 0, 0, 2);
        let maps = [sub.clone(), sub.clone(), sub];
        let [f1, f2] = t1_half.basis();
        let rescaled = RelationSpace::new(
            apply_slotwise(&maps, f1).unwrap(),
            apply_slotwise(&maps, f2).unwrap(),
        )
        .unwrap();
        assert!(span_equal(&twisted, &rescaled));
    }

    #[test]
    fn twist_identity_and_inverse() {
        let r = table_relations(Kind::T1, &Params::beta(s("2"))).unwrap();
        let tw = twist_relations(&r, &Mat2::identity()).unwrap();
        assert!(span_equal(&r, &tw));

        let theta = Mat2::from_ints(1, 2, 0, 3);
        let there = twist_relations(&r, &theta).unwrap();
        // undo: apply (id, theta, theta^2) to the twisted basis
        let maps = [Mat2::identity(), theta.clone(), theta.mul(&theta)];
        let [g1, g2] = there.basis();
        let back = RelationSpace::new(
            apply_slotwise(&maps, g1).unwrap(),
            apply_slotwise(&maps, g2).unwrap(),
        )
        .unwrap();
        assert!(span_equal(&r, &back));
        assert!(twist_relations(&r, &Mat2::from_ints(1, 1, 1, 1)).is_err());
    }
}
