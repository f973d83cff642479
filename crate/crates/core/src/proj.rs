//! Exact projective geometry of `P1` and `P1 x P1`: points, `PGL2`
//! elements, graph divisors, intersection classification and the
//! similarity / equivalence relations on component pairs.

use serde::{Deserialize, Serialize};

use crate::linalg::{self, Mat2};
use crate::scalar::Scalar;
use crate::{Error, Result};

/// A point of `P1` given by a fixed representative `(a : b)`.
#[derive(Clone, Serialize, Deserialize)]
#[serde(into = "[Scalar; 2]", from = "[Scalar; 2]")]
pub struct ProjPoint {
    a: Scalar,
    b: Scalar,
}

impl From<ProjPoint> for [Scalar; 2] {
    fn from(p: ProjPoint) -> Self {
        [p.a, p.b]
    }
}

impl From<[Scalar; 2]> for ProjPoint {
    fn from([a, b]: [Scalar; 2]) -> Self {
        ProjPoint { a, b }
    }
}

impl std::fmt::Debug for ProjPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}:{})", self.a, self.b)
    }
}

impl ProjPoint {
    pub fn new(a: Scalar, b: Scalar) -> Result<Self> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::Invalid("projective point needs a nonzero coordinate".into()));
        }
        Ok(ProjPoint { a, b })
    }

    pub fn from_ints(a: i64, b: i64) -> Result<Self> {
        ProjPoint::new(Scalar::from_int(a), Scalar::from_int(b))
    }

    pub fn a(&self) -> &Scalar {
        &self.a
    }

    pub fn b(&self) -> &Scalar {
        &self.b
    }

    /// Canonical representative: first nonzero coordinate scaled to 1.
    pub fn canonical(&self) -> ProjPoint {
        let s = if self.a.is_zero() { &self.b } else { &self.a };
        let inv = s.inv().expect("nonzero coordinate");
        ProjPoint { a: &self.a * &inv, b: &self.b * &inv }
    }
}

/// Cross-ratio equality `a*b' = a'*b`.
impl PartialEq for ProjPoint {
    fn eq(&self, other: &Self) -> bool {
        &self.a * &other.b == &self.b * &other.a
    }
}
impl Eq for ProjPoint {}

/// An element of `PGL2`: an invertible 2x2 matrix up to nonzero scalar.
#[derive(Clone, Serialize, Deserialize)]
#[serde(try_from = "Mat2", into = "Mat2")]
pub struct ProjMap {
    m: Mat2,
}

impl From<ProjMap> for Mat2 {
    fn from(p: ProjMap) -> Self {
        p.m
    }
}

impl TryFrom<Mat2> for ProjMap {
    type Error = Error;
    fn try_from(m: Mat2) -> Result<Self> {
        ProjMap::new(m)
    }
}

impl std::fmt::Debug for ProjMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?}", self.m)
    }
}

impl ProjMap {
    pub fn new(m: Mat2) -> Result<Self> {
        if !m.is_invertible() {
            return Err(Error::SingularMatrix);
        }
        Ok(ProjMap { m })
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        ProjMap::new(Mat2::from_ints(a, b, c, d))
    }

    pub fn identity() -> Self {
        ProjMap { m: Mat2::identity() }
    }

    pub fn matrix(&self) -> &Mat2 {
        &self.m
    }

    pub fn compose(&self, rhs: &ProjMap) -> ProjMap {
        ProjMap { m: self.m.mul(&rhs.m) }
    }

    pub fn inverse(&self) -> ProjMap {
        ProjMap { m: self.m.inverse().expect("invertible by construction") }
    }

    /// Canonical representative: first nonzero entry scaled to 1.
    pub fn canonical(&self) -> ProjMap {
        ProjMap { m: self.m.canonical() }
    }
}

/// Proportionality (equality in `PGL2`).
impl PartialEq for ProjMap {
    fn eq(&self, other: &Self) -> bool {
        self.m.proj_eq(&other.m)
    }
}
impl Eq for ProjMap {}

/// Column action on a point representative; projectively well defined.
pub fn act(m: &ProjMap, p: &ProjPoint) -> ProjPoint {
    let e = &m.m.e;
    ProjPoint {
        a: &(&e[0][0] * &p.a) + &(&e[0][1] * &p.b),
        b: &(&e[1][0] * &p.a) + &(&e[1][1] * &p.b),
    }
}

/// The swap `nu(p, q) = (q, p)` on `P1 x P1`.
pub fn swap_nu(p: &ProjPoint, q: &ProjPoint) -> (ProjPoint, ProjPoint) {
    (q.clone(), p.clone())
}

/// The graph divisor `C_tau = {(p, tau(p))}`, the irreducible curve of
/// bidegree (1,1) attached to `tau`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDivisor {
    tau: ProjMap,
}

impl GraphDivisor {
    pub fn new(tau: ProjMap) -> Self {
        GraphDivisor { tau }
    }

    pub fn tau(&self) -> &ProjMap {
        &self.tau
    }

    pub fn contains(&self, p: &ProjPoint, q: &ProjPoint) -> bool {
        act(&self.tau, p) == *q
    }
}

/// An ordered pair of `PGL2` elements, the component data of a union
/// `E = C_{tau1} (u) C_{tau2}` of two graph divisors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairedMaps {
    pub tau1: ProjMap,
    pub tau2: ProjMap,
}

impl PairedMaps {
    pub fn new(tau1: ProjMap, tau2: ProjMap) -> Self {
        PairedMaps { tau1, tau2 }
    }

    pub fn swapped(&self) -> PairedMaps {
        PairedMaps { tau1: self.tau2.clone(), tau2: self.tau1.clone() }
    }

    /// `tau2^-1 tau1`, whose `PGL2` class controls the intersection.
    pub fn monodromy(&self) -> ProjMap {
        self.tau2.inverse().compose(&self.tau1)
    }
}

/// Cardinality class of `C_{tau1} (n) C_{tau2}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum IntersectionType {
    Two,
    One,
    Infinite,
}

/// The conjugacy invariant `j(g) = tr(g)^2 / det(g)`.
fn j_invariant(m: &Mat2) -> Scalar {
    let t = m.trace();
    (&t * &t).checked_div(&m.det()).expect("invertible")
}

/// Classify `g = tau2^-1 tau1` in `PGL2`: scalar -> Infinite; `j = 4`
/// nonscalar -> One; otherwise -> Two.
pub fn intersection_type(pm: &PairedMaps) -> IntersectionType {
    let g = pm.monodromy();
    if g.m.is_scalar_matrix() {
        return IntersectionType::Infinite;
    }
    if j_invariant(&g.m) == Scalar::from_int(4) {
        IntersectionType::One
    } else {
        IntersectionType::Two
    }
}

/// Outcome of a computation that may need a field extension of `Q(i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OverField<T> {
    Known(T),
    NotOverField,
}

impl<T> OverField<T> {
    pub fn known(self) -> Option<T> {
        match self {
            OverField::Known(t) => Some(t),
            OverField::NotOverField => None,
        }
    }
}

/// Intersection points of the two graphs: eigenvectors of `tau2^-1 tau1`
/// paired with their `tau1`-images. `NotOverField` when the eigenvalues
/// live outside `Q(i)`.
pub fn intersection_points(
    pm: &PairedMaps,
) -> Result<OverField<Vec<(ProjPoint, ProjPoint)>>> {
    if intersection_type(pm) == IntersectionType::Infinite {
        return Err(Error::Invalid(
            "intersection is infinite; the graphs coincide".into(),
        ));
    }
    let g = pm.monodromy();
    let tr = g.m.trace();
    let det = g.m.det();
    let disc = &(&tr * &tr) - &(&Scalar::from_int(4) * &det);
    let Some(sq) = disc.sqrt() else {
        return Ok(OverField::NotOverField);
    };
    let half = Scalar::from_ratio(1, 2)?;
    let mut eigenvalues = vec![&(&tr + &sq) * &half];
    if !sq.is_zero() {
        eigenvalues.push(&(&tr - &sq) * &half);
    }
    let mut out = Vec::new();
    for lam in eigenvalues {
        // kernel vector of g - lam*I
        let a = &g.m.e[0][0] - &lam;
        let b = g.m.e[0][1].clone();
        let c = g.m.e[1][0].clone();
        let d = &g.m.e[1][1] - &lam;
        let v = if !a.is_zero() || !b.is_zero() {
            ProjPoint::new(b, -a)?
        } else {
            ProjPoint::new(d, -c)?
        };
        let image = act(&pm.tau1, &v);
        out.push((v, image));
    }
    Ok(OverField::Known(out))
}

/// Conjugacy in `PGL2` over the algebraic closure, decided by invariants
/// alone: both scalar, or equal `j` with matching scalar/nonscalar
/// status (`j = 4` covers the parabolic class).
pub fn proj_similar(m: &ProjMap, n: &ProjMap) -> bool {
    let (sm, sn) = (m.m.is_scalar_matrix(), n.m.is_scalar_matrix());
    if sm || sn {
        return sm && sn;
    }
    j_invariant(&m.m) == j_invariant(&n.m)
}

/// Result of a pair-similarity search.
#[derive(Debug, Clone, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum PairSimilarity {
    /// `mu` with `mu tau'_i mu^-1 = tau_i` in `PGL2` for `i = 1, 2`.
    Witness(ProjMap),
    NotSimilar,
    NotOverField,
}

/// Scalar candidates for `mu A = lam A' mu` (i.e. `mu A mu^-1 ≐ A'`).
/// `lam^2 = det(A)/det(A')`, filtered by `tr(A) = lam tr(A')`.
/// Returns `(candidates, needs_field_extension)`.
fn lambda_candidates(a: &Mat2, ap: &Mat2) -> (Vec<Scalar>, bool) {
    let ratio = a.det().checked_div(&ap.det()).expect("invertible");
    let (ta, tp) = (a.trace(), ap.trace());
    if !tp.is_zero() {
        if ta.is_zero() {
            return (vec![], false);
        }
        let lam = ta.checked_div(&tp).expect("nonzero");
        if &lam * &lam == ratio {
            return (vec![lam], false);
        }
        return (vec![], false);
    }
    if !ta.is_zero() {
        return (vec![], false);
    }
    match ratio.sqrt() {
        Some(s) if s.is_zero() => (vec![s], false),
        Some(s) => (vec![s.clone(), -&s], false),
        None => (vec![], true),
    }
}

/// Linear equations in the four entries of `mu` for `mu A = lam A' mu`.
fn sylvester_rows(a: &Mat2, ap: &Mat2, lam: &Scalar) -> Vec<Vec<Scalar>> {
    let mut rows = Vec::with_capacity(4);
    for i in 0..2 {
        for j in 0..2 {
            let mut co = vec![Scalar::zero(); 4];
            for k in 0..2 {
                co[2 * i + k] = &co[2 * i + k] + &a.e[k][j];
            }
            for k in 0..2 {
                co[2 * k + j] = &co[2 * k + j] - &(lam * &ap.e[i][k]);
            }
            rows.push(co);
        }
    }
    rows
}

/// All invertible joint solutions (up to a finite exact enumeration of
/// the solution family) of the conjugation conditions
/// `mu A_i mu^-1 ≐ A'_i`. Returns the candidates plus a flag marking
/// that some scalar branch needed a square root outside `Q(i)`.
pub(crate) fn conj_witness_candidates(conds: &[(Mat2, Mat2)]) -> (Vec<Mat2>, bool) {
    let mut lam_lists = Vec::with_capacity(conds.len());
    let mut blocked = false;
    for (a, ap) in conds {
        let (ls, bl) = lambda_candidates(a, ap);
        blocked = blocked || bl;
        if ls.is_empty() {
            return (vec![], blocked);
        }
        lam_lists.push(ls);
    }
    // cartesian product over the (at most 2 each) scalar candidates
    let mut combos: Vec<Vec<Scalar>> = vec![vec![]];
    for ls in &lam_lists {
        let mut next = Vec::new();
        for c in &combos {
            for l in ls {
                let mut cc = c.clone();
                cc.push(l.clone());
                next.push(cc);
            }
        }
        combos = next;
    }
    let small: Vec<Scalar> = vec![
        Scalar::from_int(1),
        Scalar::from_int(-1),
        Scalar::from_int(2),
        Scalar::from_int(-2),
        Scalar::from_int(3),
        Scalar::from_ratio(1, 2).unwrap(),
        Scalar::i(),
        -Scalar::i(),
        &Scalar::one() + &Scalar::i(),
    ];
    let mut out = Vec::new();
    for combo in combos {
        let mut rows = Vec::new();
        for ((a, ap), lam) in conds.iter().zip(&combo) {
            rows.extend(sylvester_rows(a, ap, lam));
        }
        let ker = linalg::kernel(&rows, 4);
        if ker.is_empty() {
            continue;
        }
        let mut cands: Vec<Vec<Scalar>> = ker.clone();
        for i in 0..ker.len() {
            for j in (i + 1)..ker.len() {
                for t in &small {
                    cands.push(
                        (0..4).map(|n| &ker[i][n] + &(t * &ker[j][n])).collect(),
                    );
                }
            }
        }
        for v in cands {
            let m = Mat2::new(v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone());
            if m.is_invertible() {
                out.push(m);
            }
        }
    }
    (out, blocked)
}

/// Find `mu` with `mu q_i mu^-1 = p_i` in `PGL2` for both components.
pub fn pair_similar(p: &PairedMaps, q: &PairedMaps) -> PairSimilarity {
    let conds = [
        (q.tau1.m.clone(), p.tau1.m.clone()),
        (q.tau2.m.clone(), p.tau2.m.clone()),
    ];
    let (cands, blocked) = conj_witness_candidates(&conds);
    if let Some(m) = cands.into_iter().next() {
        let mu = ProjMap::new(m).expect("candidates are invertible");
        debug_assert!(verify_pair_witness(p, q, &mu));
        return PairSimilarity::Witness(mu);
    }
    if blocked {
        PairSimilarity::NotOverField
    } else {
        PairSimilarity::NotSimilar
    }
}

/// Exact check `mu q_i mu^-1 ≐ p_i`.
pub fn verify_pair_witness(p: &PairedMaps, q: &PairedMaps, mu: &ProjMap) -> bool {
    let conj = |t: &ProjMap| mu.compose(t).compose(&mu.inverse());
    conj(&q.tau1) == p.tau1 && conj(&q.tau2) == p.tau2
}

/// Which equivalence of unions of graph divisors to decide.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EquivMode {
    /// `E ~2 E'`: a single `mu x mu` carries one union to the other.
    TwoEquiv,
    /// `E ~ E'`: independent factors; decided by the monodromy class.
    Equiv,
}

/// Equivalence of `E = C_{tau1} (u) C_{tau2}` and `E'` per the selected
/// mode. `TwoEquiv` may be undecidable over `Q(i)`.
pub fn equiv_e(p: &PairedMaps, q: &PairedMaps, mode: EquivMode) -> OverField<bool> {
    match mode {
        EquivMode::TwoEquiv => {
            let mut blocked = false;
            for target in [p.clone(), p.swapped()] {
                match pair_similar(&target, q) {
                    PairSimilarity::Witness(_) => return OverField::Known(true),
                    PairSimilarity::NotOverField => blocked = true,
                    PairSimilarity::NotSimilar => {}
                }
            }
            if blocked {
                OverField::NotOverField
            } else {
                OverField::Known(false)
            }
        }
        EquivMode::Equiv => {
            let g = p.monodromy();
            let gq = q.monodromy();
            OverField::Known(proj_similar(&g, &gq) || proj_similar(&g.inverse(), &gq))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pm(a: i64, b: i64, c: i64, d: i64) -> ProjMap {
        ProjMap::from_ints(a, b, c, d).unwrap()
    }

    fn pt(a: i64, b: i64) -> ProjPoint {
        ProjPoint::from_ints(a, b).unwrap()
    }

    #[test]
    fn graph_divisor_membership() {
        let c = GraphDivisor::new(pm(1, 1, 0, 1));
        assert!(c.contains(&pt(1, 0), &pt(1, 0)));
        assert!(c.contains(&pt(1, 1), &pt(2, 1)));
        assert!(!c.contains(&pt(1, 1), &pt(1, 1)));
    }

    #[test]
    fn act_examples() {
        assert_eq!(act(&ProjMap::identity(), &pt(3, 5)), pt(3, 5));
        assert_eq!(act(&pm(2, 0, 0, 1), &pt(1, 1)), pt(2, 1));
        assert_eq!(act(&pm(1, 1, 0, 1), &pt(1, 0)), pt(1, 0));
    }

    #[test]
    fn act_respects_composition() {
        let m = pm(1, 2, 3, 5);
        let n = pm(0, 1, -1, 4);
        let p = pt(7, -2);
        assert_eq!(act(&m.compose(&n), &p), act(&m, &act(&n, &p)));
    }

    #[test]
    fn swap_is_involution() {
        let (p, q) = (pt(1, 0), pt(0, 1));
        let (a, b) = swap_nu(&p, &q);
        assert_eq!((a.clone(), b.clone()), (pt(0, 1), pt(1, 0)));
        assert_eq!(swap_nu(&a, &b), (p, q));
        let d = pt(1, 1);
        assert_eq!(swap_nu(&d, &d), (d.clone(), d.clone()));
    }

    #[test]
    fn intersection_trichotomy_examples() {
        let two = PairedMaps::new(pm(2, 0, 0, 1), ProjMap::identity());
        assert_eq!(intersection_type(&two), IntersectionType::Two);
        let one = PairedMaps::new(pm(1, 1, 0, 1), ProjMap::identity());
        assert_eq!(intersection_type(&one), IntersectionType::One);
        let inf = PairedMaps::new(pm(3, 1, 0, 2), pm(3, 1, 0, 2));
        assert_eq!(intersection_type(&inf), IntersectionType::Infinite);
    }

    #[test]
    fn intersection_invariance() {
        let pmaps = PairedMaps::new(pm(2, 1, 0, 1), pm(1, 0, 1, 1));
        let t = intersection_type(&pmaps);
        assert_eq!(intersection_type(&pmaps.swapped()), t);
        for g in [pm(1, 2, 0, 1), pm(0, 1, -1, 0), pm(3, 1, 1, 1)] {
            let conj = |m: &ProjMap| g.compose(m).compose(&g.inverse());
            let moved = PairedMaps::new(conj(&pmaps.tau1), conj(&pmaps.tau2));
            assert_eq!(intersection_type(&moved), t);
        }
    }

    #[test]
    fn intersection_points_examples() {
        let two = PairedMaps::new(pm(2, 0, 0, 1), ProjMap::identity());
        let pts = intersection_points(&two).unwrap().known().unwrap();
        assert_eq!(pts, vec![(pt(1, 0), pt(1, 0)), (pt(0, 1), pt(0, 1))]);

        let one = PairedMaps::new(pm(1, 1, 0, 1), ProjMap::identity());
        let pts = intersection_points(&one).unwrap().known().unwrap();
        assert_eq!(pts, vec![(pt(1, 0), pt(1, 0))]);

        // monodromy with characteristic polynomial t^2 + 1: roots +-i
        let rot = PairedMaps::new(pm(0, -1, 1, 0), ProjMap::identity());
        let pts = intersection_points(&rot).unwrap().known().unwrap();
        assert_eq!(pts.len(), 2);
        for (p, q) in &pts {
            assert_eq!(p, q); // tau2 = id fixes the intersection
            assert!(!p.a().is_zero());
            let ratio = p.b().checked_div(p.a()).unwrap();
            assert!(ratio == Scalar::i() || ratio == -Scalar::i());
        }

        // eigenvalues sqrt(2) are outside Q(i)
        let ext = PairedMaps::new(pm(0, 2, 1, 0), ProjMap::identity());
        assert_eq!(intersection_points(&ext).unwrap(), OverField::NotOverField);
    }

    #[test]
    fn intersection_points_lie_on_both_graphs() {
        let pmaps = PairedMaps::new(pm(2, 1, 0, 1), pm(1, 0, 1, 1));
        assert_eq!(intersection_type(&pmaps), IntersectionType::Two);
        if let OverField::Known(pts) = intersection_points(&pmaps).unwrap() {
            assert_eq!(pts.len(), 2);
            assert_ne!(pts[0].0, pts[1].0);
            for (p, q) in pts {
                assert_eq!(act(&pmaps.tau1, &p), q);
                assert_eq!(act(&pmaps.tau2, &p), q);
            }
        }
    }

    #[test]
    fn proj_similar_examples() {
        assert!(proj_similar(&pm(2, 0, 0, 1), &pm(1, 0, 0, 2)));
        assert!(!proj_similar(&pm(2, 0, 0, 1), &pm(1, 1, 0, 1)));
        let m = pm(3, 1, -2, 4);
        assert!(proj_similar(&m, &m));
        // scalar vs nonscalar with j = 4
        assert!(!proj_similar(&ProjMap::identity(), &pm(1, 1, 0, 1)));
    }

    #[test]
    fn proj_similar_equivalence_relation() {
        let samples = [
            pm(2, 0, 0, 1),
            pm(1, 0, 0, 2),
            pm(1, 1, 0, 1),
            pm(1, 5, 0, 1),
            pm(0, -1, 1, 0),
            pm(3, 1, 1, 2),
        ];
        for a in &samples {
            assert!(proj_similar(a, a));
            for b in &samples {
                assert_eq!(proj_similar(a, b), proj_similar(b, a));
                for c in &samples {
                    if proj_similar(a, b) && proj_similar(b, c) {
                        assert!(proj_similar(a, c));
                    }
                }
            }
        }
    }

    #[test]
    fn pair_similar_examples() {
        let p = PairedMaps::new(pm(2, 0, 0, 1), pm(3, 0, 0, 1));
        let q = PairedMaps::new(
            ProjMap::new(Mat2::diag(Scalar::from_ratio(1, 2).unwrap(), Scalar::one())).unwrap(),
            ProjMap::new(Mat2::diag(Scalar::from_ratio(1, 3).unwrap(), Scalar::one())).unwrap(),
        );
        match pair_similar(&p, &q) {
            PairSimilarity::Witness(mu) => {
                assert!(verify_pair_witness(&p, &q, &mu));
                assert_eq!(mu, pm(0, 1, 1, 0));
            }
            other => panic!("expected witness, got {other:?}"),
        }

        let r = PairedMaps::new(pm(2, 0, 0, 1), pm(5, 0, 0, 1));
        assert_eq!(pair_similar(&p, &r), PairSimilarity::NotSimilar);

        let s = PairedMaps::new(pm(1, 2, 3, 4), pm(0, 1, -1, 0));
        match pair_similar(&s, &s) {
            PairSimilarity::Witness(mu) => assert!(verify_pair_witness(&s, &s, &mu)),
            other => panic!("expected witness, got {other:?}"),
        }
    }

    #[test]
    fn pair_similar_not_over_field() {
        // antidiagonal components: traces vanish, so lambda needs
        // sqrt(det ratio) = sqrt(2), which is outside Q(i)
        let p = PairedMaps::new(pm(0, 2, 1, 0), pm(0, 3, 1, 0));
        let q = PairedMaps::new(pm(0, 1, 1, 0), pm(0, 6, 4, 0));
        assert_eq!(pair_similar(&p, &q), PairSimilarity::NotOverField);
    }

    #[test]
    fn equiv_e_examples() {
        // T-type pairs at beta and 1 - beta are 2-equivalent
        let t = |b: Scalar| {
            PairedMaps::new(
                ProjMap::new(Mat2::new(Scalar::one(), b.clone(), Scalar::zero(), Scalar::one()))
                    .unwrap(),
                ProjMap::new(Mat2::new(
                    Scalar::one(),
                    &b - &Scalar::one(),
                    Scalar::zero(),
                    Scalar::one(),
                ))
                .unwrap(),
            )
        };
        let beta = Scalar::from_int(3);
        let e = t(beta.clone());
        let e2 = t(&Scalar::one() - &beta);
        assert_eq!(equiv_e(&e, &e2, EquivMode::TwoEquiv), OverField::Known(true));
        assert_eq!(equiv_e(&e, &e, EquivMode::TwoEquiv), OverField::Known(true));
        assert_eq!(equiv_e(&e, &e, EquivMode::Equiv), OverField::Known(true));

        // S-type pairs with inverted eigenvalue ratio are equivalent
        let s = |l1: Scalar, l2: Scalar| {
            PairedMaps::new(
                ProjMap::new(Mat2::diag(Scalar::one(), l1)).unwrap(),
                ProjMap::new(Mat2::diag(Scalar::one(), l2)).unwrap(),
            )
        };
        let a = s(Scalar::from_int(2), Scalar::from_int(3));
        let b = s(Scalar::from_int(3), Scalar::from_int(2));
        assert_eq!(equiv_e(&a, &b, EquivMode::Equiv), OverField::Known(true));
        let c = s(Scalar::from_int(2), Scalar::from_int(5));
        assert_eq!(equiv_e(&a, &c, EquivMode::Equiv), OverField::Known(false));
    }
}
