//! Superpotential calculus and the regularity certificate: twisted
//! superpotentials, twist-witness solving, MS twists, the
//! derivation-quotient presentation, standardness and the
//! empty-common-zero-set test.

use serde::Serialize;

use crate::linalg::{self, Mat2};
use crate::scalar::Scalar;
use crate::tensor::{
    apply_slotwise, cyclic_phi, partial, right_partial, Generator, NcTensor, RelationSpace,
};
use crate::{Error, Result};

/// An ordered pair of degree-3 relations together with the space they
/// span.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubicPresentation {
    f1: NcTensor,
    f2: NcTensor,
    space: RelationSpace,
}

impl CubicPresentation {
    pub fn new(f1: NcTensor, f2: NcTensor) -> Result<Self> {
        let space = RelationSpace::new(f1.clone(), f2.clone())?;
        Ok(CubicPresentation { f1, f2, space })
    }

    pub fn from_relation_space(space: &RelationSpace) -> Self {
        let [f1, f2] = space.basis();
        CubicPresentation {
            f1: f1.clone(),
            f2: f2.clone(),
            space: space.clone(),
        }
    }

    pub fn f1(&self) -> &NcTensor {
        &self.f1
    }

    pub fn f2(&self) -> &NcTensor {
        &self.f2
    }

    pub fn space(&self) -> &RelationSpace {
        &self.space
    }
}

/// The 2x2 matrix of degree-2 tensors with `f_i = m_i1 (x) x + m_i2 (x) y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MMatrix {
    pub entries: [[NcTensor; 2]; 2],
}

/// `phi(w) = w` exactly.
pub fn is_superpotential(w: &NcTensor) -> Result<bool> {
    Ok(cyclic_phi(w)? == *w)
}

/// Solve `(theta (x) id^3)(phi(w)) = w` for `theta`: the condition is
/// linear in the four entries; any invertible solution is returned.
pub fn solve_twist_witness(w: &NcTensor) -> Result<Option<Mat2>> {
    let phw = cyclic_phi(w)?;
    // out[x s] = t11 phw[x s] + t21 phw[y s]
    // out[y s] = t12 phw[x s] + t22 phw[y s]
    // unknowns ordered (t11, t12, t21, t22)
    let mut rows = Vec::with_capacity(16);
    let mut rhs = Vec::with_capacity(16);
    for sfx in 0..8usize {
        let px = phw.coeffs()[sfx].clone();
        let py = phw.coeffs()[8 + sfx].clone();
        rows.push(vec![px.clone(), Scalar::zero(), py.clone(), Scalar::zero()]);
        rhs.push(w.coeffs()[sfx].clone());
        rows.push(vec![Scalar::zero(), px, Scalar::zero(), py]);
        rhs.push(w.coeffs()[8 + sfx].clone());
    }
    let Some((part, ker)) = linalg::solve_affine(&rows, &rhs) else {
        return Ok(None);
    };
    let mat = |v: &[Scalar]| Mat2::new(v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone());
    let mut candidates = vec![part.clone()];
    let shifts = [
        Scalar::from_int(1),
        Scalar::from_int(-1),
        Scalar::from_int(2),
        Scalar::from_int(3),
        Scalar::i(),
    ];
    for k in &ker {
        for t in &shifts {
            candidates.push((0..4).map(|n| &part[n] + &(t * &k[n])).collect());
        }
    }
    if ker.len() >= 2 {
        for t in &shifts {
            candidates
                .push((0..4).map(|n| &(&part[n] + &ker[0][n]) + &(t * &ker[1][n])).collect());
        }
    }
    for v in candidates {
        let m = mat(&v);
        if m.is_invertible() {
            debug_assert_eq!(
                apply_slotwise(
                    &[m.clone(), Mat2::identity(), Mat2::identity(), Mat2::identity()],
                    &phw
                )?,
                *w
            );
            return Ok(Some(m));
        }
    }
    Ok(None)
}

/// The scalar `lambda` with `theta^(x)4 (w) = lambda w`, if `theta` lies
/// in `Aut(w)`.
pub fn in_aut_w(w: &NcTensor, theta: &Mat2) -> Result<Option<Scalar>> {
    if !theta.is_invertible() {
        return Err(Error::SingularMatrix);
    }
    let tw = apply_slotwise(&[theta.clone(), theta.clone(), theta.clone(), theta.clone()], w)?;
    let mut lambda: Option<Scalar> = None;
    for (a, b) in tw.coeffs().iter().zip(w.coeffs()) {
        if b.is_zero() {
            if !a.is_zero() {
                return Ok(None);
            }
            continue;
        }
        let l = a.checked_div(b)?;
        match &lambda {
            None => lambda = Some(l),
            Some(prev) if *prev == l => {}
            Some(_) => return Ok(None),
        }
    }
    Ok(lambda.filter(|l| !l.is_zero()))
}

/// The MS twist `w^theta = (theta^3 (x) theta^2 (x) theta (x) id)(w)`.
pub fn ms_twist(w: &NcTensor, theta: &Mat2) -> Result<NcTensor> {
    let t2 = theta.mul(theta);
    let t3 = t2.mul(theta);
    apply_slotwise(&[t3, t2, theta.clone(), Mat2::identity()], w)
}

/// The presentation `(d_x w, d_y w)`; fails when the left partials are
/// linearly dependent.
pub fn derivation_quotient(w: &NcTensor) -> Result<CubicPresentation> {
    let fx = partial(w, Generator::X)?;
    let fy = partial(w, Generator::Y)?;
    CubicPresentation::new(fx, fy).map_err(|_| Error::DependentPartials)
}

/// Decompose each relation by its last letter.
pub fn m_matrix(pres: &CubicPresentation) -> MMatrix {
    let split = |f: &NcTensor| -> (NcTensor, NcTensor) {
        let mut mx = NcTensor::zero(2);
        let mut my = NcTensor::zero(2);
        let mut mx_terms: Vec<(usize, Scalar)> = Vec::new();
        let mut my_terms: Vec<(usize, Scalar)> = Vec::new();
        for (idx, c) in f.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if idx & 1 == 0 {
                mx_terms.push((idx >> 1, c.clone()));
            } else {
                my_terms.push((idx >> 1, c.clone()));
            }
        }
        for (i, c) in mx_terms {
            mx = set_coeff(mx, i, c);
        }
        for (i, c) in my_terms {
            my = set_coeff(my, i, c);
        }
        (mx, my)
    };
    let (m11, m12) = split(&pres.f1);
    let (m21, m22) = split(&pres.f2);
    MMatrix { entries: [[m11, m12], [m21, m22]] }
}

fn set_coeff(t: NcTensor, idx: usize, c: Scalar) -> NcTensor {
    // dense tensors have no public index setter; rebuild via terms
    let degree = t.degree();
    let mut coeffs: Vec<Scalar> = t.coeffs().to_vec();
    coeffs[idx] = c;
    let terms: Vec<(String, Scalar)> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .map(|(i, v)| (crate::tensor::Word::from_index(degree, i).to_string(), v.clone()))
        .collect();
    let borrowed: Vec<(&str, Scalar)> =
        terms.iter().map(|(w, v)| (w.as_str(), v.clone())).collect();
    NcTensor::from_terms(degree, &borrowed).expect("rebuild is well-formed")
}

/// The column relations `g_i = x (x) m_1i + y (x) m_2i` of a presentation.
fn column_relations(m: &MMatrix) -> [NcTensor; 2] {
    let build = |i: usize| {
        m.entries[0][i]
            .prepend(Generator::X)
            .add(&m.entries[1][i].prepend(Generator::Y))
    };
    [build(0), build(1)]
}

/// Try `g^t = Q f` in the exact basis `(f1, f2)`.
fn standard_q_in_basis(f1: &NcTensor, f2: &NcTensor) -> Option<Mat2> {
    let pres = CubicPresentation::new(f1.clone(), f2.clone()).ok()?;
    let m = m_matrix(&pres);
    let [g1, g2] = column_relations(&m);
    let (a, b) = pres.space.coordinates(&g1)?;
    let (c, d) = pres.space.coordinates(&g2)?;
    let q = Mat2::new(a, b, c, d);
    q.is_invertible().then_some(q)
}

/// Candidate 4-tensors for the standardness search: the exact
/// intersection `(V (x) R) (n) (R (x) V)` inside degree 4.
fn intersection_candidates(space: &RelationSpace) -> Vec<NcTensor> {
    let [f1, f2] = space.basis();
    let left = [
        f1.prepend(Generator::X),
        f2.prepend(Generator::X),
        f1.prepend(Generator::Y),
        f2.prepend(Generator::Y),
    ];
    let right = [
        f1.append(Generator::X),
        f2.append(Generator::X),
        f1.append(Generator::Y),
        f2.append(Generator::Y),
    ];
    // solve sum a_i left_i - sum b_j right_j = 0
    let rows: Vec<Vec<Scalar>> = (0..16)
        .map(|w| {
            let mut row = Vec::with_capacity(8);
            for l in &left {
                row.push(l.coeffs()[w].clone());
            }
            for r in &right {
                row.push(-&r.coeffs()[w].clone());
            }
            row
        })
        .collect();
    let ker = linalg::kernel(&rows, 8);
    let mut basis = Vec::new();
    for v in &ker {
        let mut acc = NcTensor::zero(4);
        for (i, l) in left.iter().enumerate() {
            acc = acc.add(&l.scale(&v[i]));
        }
        if !acc.is_zero() {
            basis.push(acc);
        }
    }
    // a couple of exact combinations, in case a basis element alone is
    // degenerate
    if basis.len() >= 2 {
        let extra: Vec<NcTensor> = [1i64, 2, 3, 5]
            .iter()
            .map(|&k| basis[0].add(&basis[1].scale(&Scalar::from_int(k))))
            .collect();
        basis.extend(extra);
    }
    basis
}

/// Standardness certificate: an invertible `Q` with `g^t = Q f` for some
/// basis of the relation space. Searches the given basis, the canonical
/// RREF basis, and then the presentations cut out by the degree-4
/// intersection space (which carries every candidate 4-tensor whose
/// left and right partials both land in `R`). `None` is a legitimate
/// outcome.
pub fn is_standard(pres: &CubicPresentation) -> Option<Mat2> {
    if let Some(q) = standard_q_in_basis(&pres.f1, &pres.f2) {
        return Some(q);
    }
    let [r1, r2] = pres.space.rref_tensors();
    if let Some(q) = standard_q_in_basis(&r1, &r2) {
        return Some(q);
    }
    for w in intersection_candidates(&pres.space) {
        let Ok(px) = partial(&w, Generator::X) else { continue };
        let Ok(py) = partial(&w, Generator::Y) else { continue };
        let Ok(candidate) = RelationSpace::new(px.clone(), py.clone()) else {
            continue;
        };
        if !crate::tensor::span_equal(&candidate, &pres.space) {
            continue;
        }
        let gx = right_partial(&w, Generator::X).expect("degree 4");
        let gy = right_partial(&w, Generator::Y).expect("degree 4");
        if !pres.space.contains(&gx) || !pres.space.contains(&gy) {
            continue;
        }
        if let Some(q) = standard_q_in_basis(&px, &py) {
            return Some(q);
        }
    }
    None
}

// ---- common zero set of the M-matrix ---------------------------------

/// A binary form in `(s, t)` stored as coefficients of
/// `s^d, s^(d-1) t, ..., t^d`.
#[derive(Debug, Clone, PartialEq, Eq)]
struct BinForm(Vec<Scalar>);

impl BinForm {
    fn is_zero(&self) -> bool {
        self.0.iter().all(Scalar::is_zero)
    }
}

/// gcd of univariate polynomials over `Q(i)`, coefficients low-to-high.
fn poly_gcd(mut a: Vec<Scalar>, mut b: Vec<Scalar>) -> Vec<Scalar> {
    fn deg(p: &[Scalar]) -> Option<usize> {
        p.iter().rposition(|c| !c.is_zero())
    }
    fn rem(mut p: Vec<Scalar>, q: &[Scalar]) -> Vec<Scalar> {
        let dq = deg(q).expect("nonzero divisor");
        while let Some(dp) = deg(&p) {
            if dp < dq {
                break;
            }
            let f = p[dp].checked_div(&q[dq]).expect("leading coefficient nonzero");
            for i in 0..=dq {
                let sub = &f * &q[i];
                p[dp - dq + i] = &p[dp - dq + i] - &sub;
            }
        }
        p
    }
    while deg(&b).is_some() {
        let r = rem(a, &b);
        a = b;
        b = r;
    }
    a
}

/// Do the nonzero forms share a projective root (over the closure)?
/// All-zero input counts as "every point is a root".
fn common_projective_root(forms: &[BinForm]) -> bool {
    let nonzero: Vec<&BinForm> = forms.iter().filter(|f| !f.is_zero()).collect();
    if nonzero.is_empty() {
        return true;
    }
    // root at (1:0) iff every leading (s^d) coefficient vanishes
    if nonzero.iter().all(|f| f.0[0].is_zero()) {
        return true;
    }
    // affine roots: gcd of the dehomogenized polynomials (t = 1), which
    // detects common roots wherever they live, by gcd degree alone
    let mut g: Option<Vec<Scalar>> = None;
    for f in nonzero {
        let p: Vec<Scalar> = f.0.iter().rev().cloned().collect();
        g = Some(match g {
            None => p,
            Some(prev) => poly_gcd(prev, p),
        });
    }
    let g = g.expect("at least one form");
    g.iter().rposition(|c| !c.is_zero()).unwrap_or(0) >= 1
}

/// Linear forms `A(s,t) X + B(s,t) Y` of the Segre evaluation of each
/// entry, viewing the chosen slot as the indeterminate point.
fn entry_linear_forms(m: &MMatrix, first_slot_free: bool) -> Vec<(BinForm, BinForm)> {
    let mut out = Vec::with_capacity(4);
    for i in 0..2 {
        for j in 0..2 {
            let e = &m.entries[i][j];
            let c = |w: &str| e.coeff(w).expect("degree-2 word").clone();
            let (a, b) = if first_slot_free {
                // coefficient of X (second point): words ending in x
                (
                    BinForm(vec![c("xx"), c("yx")]),
                    BinForm(vec![c("xy"), c("yy")]),
                )
            } else {
                (
                    BinForm(vec![c("xx"), c("xy")]),
                    BinForm(vec![c("yx"), c("yy")]),
                )
            };
            out.push((a, b));
        }
    }
    out
}

fn zero_exists_with_free_slot(m: &MMatrix, first_slot_free: bool) -> bool {
    let forms = entry_linear_forms(m, first_slot_free);
    // a common zero with this slot at (s:t) exists iff the 4x2
    // coefficient matrix has rank <= 1 there, i.e. all six 2x2 minors
    // (binary quadratics) vanish simultaneously
    let mut minors = Vec::with_capacity(6);
    for i in 0..4 {
        for j in (i + 1)..4 {
            let (a1, b1) = &forms[i];
            let (a2, b2) = &forms[j];
            let mul = |x: &BinForm, y: &BinForm| -> Vec<Scalar> {
                let mut r = vec![Scalar::zero(); 3];
                for (p, xp) in x.0.iter().enumerate() {
                    for (q, yq) in y.0.iter().enumerate() {
                        r[p + q] = &r[p + q] + &(xp * yq);
                    }
                }
                r
            };
            let lhs = mul(a1, b2);
            let rhs = mul(a2, b1);
            minors.push(BinForm(
                lhs.iter().zip(&rhs).map(|(l, r)| l - r).collect(),
            ));
        }
    }
    common_projective_root(&minors)
}

/// Is the common zero set of the four entries empty in `P1 x P1`?
/// Decided exactly over the algebraic closure by the minor/GCD method,
/// run from both sides.
pub fn common_zero_empty(m: &MMatrix) -> bool {
    let first = !zero_exists_with_free_slot(m, true);
    let second = !zero_exists_with_free_slot(m, false);
    debug_assert_eq!(first, second, "the two slot analyses must agree");
    first && second
}

/// The full regularity certificate for a presentation.
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct AsRegularCertificate {
    /// `Q` of a standard basis, if one was found.
    pub standard: Option<Mat2>,
    /// Entries of the M-matrix in text form, row-major.
    pub m_matrix: [[String; 2]; 2],
    pub common_zero_empty: bool,
    pub as_regular: bool,
}

/// Regularity check: standard and empty common zero set.
pub fn check_as_regular(pres: &CubicPresentation) -> AsRegularCertificate {
    let standard = is_standard(pres);
    let m = m_matrix(pres);
    let empty = common_zero_empty(&m);
    let as_regular = standard.is_some() && empty;
    AsRegularCertificate {
        standard,
        m_matrix: [
            [m.entries[0][0].to_string(), m.entries[0][1].to_string()],
            [m.entries[1][0].to_string(), m.entries[1][1].to_string()],
        ],
        common_zero_empty: empty,
        as_regular,
    }
}

// ---- frozen superpotential fixtures -----------------------------------

/// The twisted superpotential of the `T1(beta)` family:
/// `D(w) = (d_x w, d_y w)` spans the `T1(beta)` relations.
pub fn w_t1(beta: &Scalar) -> NcTensor {
    let two = Scalar::from_int(2);
    let c = &two * &(&(&two * beta) - &Scalar::one()); // 2(2b - 1)
    let d = &(&two * beta) * &(beta - &Scalar::one()); // 2b(b - 1)
    NcTensor::from_terms(
        4,
        &[
            ("xxyy", Scalar::one()),
            ("xyxy", Scalar::from_int(-2)),
            ("xyyx", Scalar::one()),
            ("yxxy", Scalar::one()),
            ("yxyx", Scalar::from_int(-2)),
            ("yyxx", Scalar::one()),
            ("yxyy", c.clone()),
            ("yyxy", -&c),
            ("yyyy", d),
        ],
    )
    .expect("well-formed fixture")
}

/// The superpotential whose derivation quotient is the switching-type
/// normal form with unipotent monodromy (the `T2` relations):
/// `x^2y^2 + 2xyxy + xy^2x + yx^2y + 2yxyx + y^2x^2 + 2y^4`.
pub fn w_t2() -> NcTensor {
    NcTensor::from_int_terms(
        4,
        &[
            ("xxyy", 1),
            ("xyxy", 2),
            ("xyyx", 1),
            ("yxxy", 1),
            ("yxyx", 2),
            ("yyxx", 1),
            ("yyyy", 2),
        ],
    )
    .expect("well-formed fixture")
}

/// The MS twist of [`w_t2`] by `theta = diag(i, -i)`:
/// `x^2y^2 - 2xyxy + xy^2x + yx^2y - 2yxyx + y^2x^2 - 2y^4`.
pub fn w_t2_twist() -> NcTensor {
    NcTensor::from_int_terms(
        4,
        &[
            ("xxyy", 1),
            ("xyxy", -2),
            ("xyyx", 1),
            ("yxxy", 1),
            ("yxyx", -2),
            ("yyxx", 1),
            ("yyyy", -2),
        ],
    )
    .expect("well-formed fixture")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geopair::{table_relations, twist_relations, Kind, Params};
    use crate::tensor::span_equal;

    fn s(text: &str) -> Scalar {
        text.parse().unwrap()
    }

    fn t(text: &str) -> NcTensor {
        text.parse().unwrap()
    }

    #[test]
    fn superpotential_predicate() {
        assert!(is_superpotential(&t("x^4")).unwrap());
        assert!(!is_superpotential(&t("xy^3")).unwrap());
        assert!(is_superpotential(&w_t2()).unwrap());
    }

    #[test]
    fn twist_witness_for_t1_family() {
        for b in ["3", "-1/2", "7/3", "0", "1"] {
            let beta = s(b);
            let w = w_t1(&beta);
            let theta = solve_twist_witness(&w).unwrap().expect("witness exists");
            let c = &s("2") * &(&(&s("2") * &beta) - &Scalar::one());
            let expected = Mat2::new(Scalar::one(), c, Scalar::zero(), Scalar::one());
            assert!(theta.proj_eq(&expected), "beta={b}: {theta:?}");
        }
    }

    #[test]
    fn twist_witness_none_case() {
        assert_eq!(solve_twist_witness(&t("x^3y")).unwrap(), None);
    }

    #[test]
    fn superpotential_admits_identity_witness() {
        let w = t("x^4+y^4");
        assert!(is_superpotential(&w).unwrap());
        let phw = cyclic_phi(&w).unwrap();
        let id = Mat2::identity();
        assert_eq!(
            apply_slotwise(&[id.clone(), id.clone(), id.clone(), id], &phw).unwrap(),
            w
        );
        assert!(solve_twist_witness(&w).unwrap().is_some());
    }

    #[test]
    fn aut_w_examples() {
        let w = t("x^4+y^4");
        assert_eq!(in_aut_w(&w, &Mat2::identity()).unwrap(), Some(Scalar::one()));
        let scaled = Mat2::diag(Scalar::from_int(2), Scalar::one());
        assert_eq!(in_aut_w(&t("x^4"), &scaled).unwrap(), Some(Scalar::from_int(16)));
        let theta = Mat2::diag(Scalar::i(), -Scalar::i());
        assert_eq!(in_aut_w(&w_t2(), &theta).unwrap(), Some(Scalar::one()));
        assert_eq!(in_aut_w(&t("x^4+x^2y^2"), &scaled).unwrap(), None);
    }

    #[test]
    fn ms_twist_between_normal_forms() {
        let theta = Mat2::diag(Scalar::i(), -Scalar::i());
        assert_eq!(ms_twist(&w_t2(), &theta).unwrap(), w_t2_twist());
        assert_eq!(ms_twist(&w_t2(), &Mat2::identity()).unwrap(), w_t2());
    }

    #[test]
    fn ms_twist_of_superpotential_is_twisted() {
        // Aut(x^4 + y^4) contains diag(1, i^k) and the antidiagonal swaps
        let w = t("x^4+y^4");
        let mut elements = vec![
            Mat2::diag(Scalar::one(), Scalar::i()),
            Mat2::diag(Scalar::one(), -Scalar::one()),
            Mat2::new(Scalar::zero(), Scalar::one(), Scalar::one(), Scalar::zero()),
            Mat2::new(Scalar::zero(), Scalar::one(), Scalar::i(), Scalar::zero()),
        ];
        elements.push(Mat2::diag(-Scalar::one(), Scalar::i()));
        for theta in elements {
            assert!(in_aut_w(&w, &theta).unwrap().is_some(), "{theta:?}");
            let tw = ms_twist(&w, &theta).unwrap();
            assert!(
                solve_twist_witness(&tw).unwrap().is_some(),
                "MS twist by {theta:?} must be a twisted superpotential"
            );
        }
    }

    #[test]
    fn derivation_quotient_examples() {
        let beta = s("5/2");
        let pres = derivation_quotient(&w_t1(&beta)).unwrap();
        assert_eq!(pres.f1(), &t("xy^2-2yxy+y^2x"));
        let table = table_relations(Kind::T1, &Params::beta(beta)).unwrap();
        assert!(span_equal(pres.space(), &table));
        // the closed-form list's first relation equals d_y(w) verbatim
        assert_eq!(pres.f2(), &table.basis()[0]);

        assert!(derivation_quotient(&t("x^4+y^4")).is_ok());
        assert_eq!(
            derivation_quotient(&t("x^2y^2")).unwrap_err(),
            Error::DependentPartials
        );
    }

    #[test]
    fn m_matrix_t1_closed_form() {
        let pres = CubicPresentation::from_relation_space(
            &table_relations(Kind::T1, &Params::beta(s("1"))).unwrap(),
        );
        let m = m_matrix(&pres);
        assert_eq!(m.entries[0][0], t("-2xy+yx"));
        assert_eq!(m.entries[0][1], t("x^2+2xy-2yx"));
        assert_eq!(m.entries[1][0], t("y^2"));
        assert_eq!(m.entries[1][1], t("xy-2yx"));
    }

    #[test]
    fn m_matrix_reconstruction() {
        let pres = CubicPresentation::new(t("x^3"), t("y^3")).unwrap();
        let m = m_matrix(&pres);
        assert_eq!(m.entries[0][0], t("x^2"));
        assert!(m.entries[0][1].is_zero());
        assert!(m.entries[1][0].is_zero());
        assert_eq!(m.entries[1][1], t("y^2"));
        // f_i = m_i1 (x) x + m_i2 (x) y for a random-ish presentation
        let pres = CubicPresentation::new(
            t("x^2y-2xyx+yx^2+3xy^2"),
            t("xy^2-5yxy+y^2x+(1/2)y^3"),
        )
        .unwrap();
        let m = m_matrix(&pres);
        for (i, f) in [pres.f1(), pres.f2()].into_iter().enumerate() {
            let rebuilt = m.entries[i][0]
                .append(Generator::X)
                .add(&m.entries[i][1].append(Generator::Y));
            assert_eq!(&rebuilt, f);
        }
    }

    #[test]
    fn standardness_q_values() {
        // derivation-quotient order of the T1 superpotential at beta = 1
        let pres = derivation_quotient(&w_t1(&s("1"))).unwrap();
        let q = is_standard(&pres).unwrap();
        assert!(q.proj_eq(&Mat2::from_ints(1, 0, -2, 1)));

        // any verified twisted superpotential gives a standard quotient
        for b in ["0", "2", "-3/4"] {
            let pres = derivation_quotient(&w_t1(&s(b))).unwrap();
            assert!(is_standard(&pres).is_some());
        }

        // x^3, x^2y is not standard in any basis
        let bad = CubicPresentation::new(t("x^3"), t("x^2y")).unwrap();
        assert!(is_standard(&bad).is_none());
    }

    #[test]
    fn common_zero_examples() {
        let pres = CubicPresentation::from_relation_space(
            &table_relations(Kind::T1, &Params::beta(s("1"))).unwrap(),
        );
        assert!(common_zero_empty(&m_matrix(&pres)));

        // all entries xy: the zero set is nonempty
        let m = MMatrix {
            entries: [
                [t("xy"), t("xy")],
                [t("xy"), t("xy")],
            ],
        };
        assert!(!common_zero_empty(&m));

        // x^3, y^3: standard but with a common zero, so not regular
        let degenerate = CubicPresentation::new(t("x^3"), t("y^3")).unwrap();
        let cert = check_as_regular(&degenerate);
        assert!(cert.standard.is_some());
        assert!(!cert.common_zero_empty);
        assert!(!cert.as_regular);
    }

    #[test]
    fn check_as_regular_p2() {
        let pres = CubicPresentation::from_relation_space(
            &table_relations(Kind::P2, &Params::none()).unwrap(),
        );
        let cert = check_as_regular(&pres);
        assert!(cert.as_regular);
    }

    #[test]
    fn derivation_quotient_twist_chain() {
        // D(ms_twist(w, theta)) = twist_relations(D(w), theta)
        let theta = Mat2::diag(Scalar::i(), -Scalar::i());
        let dw = derivation_quotient(&w_t2()).unwrap();
        let dtw = derivation_quotient(&ms_twist(&w_t2(), &theta).unwrap()).unwrap();
        let twisted = twist_relations(dw.space(), &theta).unwrap();
        assert!(span_equal(dtw.space(), &twisted));

        // and on Aut elements of x^4 + y^4
        let w = t("x^4+y^4");
        for theta in [
            Mat2::diag(Scalar::one(), Scalar::i()),
            Mat2::diag(Scalar::one(), -Scalar::one()),
            Mat2::new(Scalar::zero(), Scalar::one(), Scalar::one(), Scalar::zero()),
        ] {
            let dw = derivation_quotient(&w).unwrap();
            let dtw = derivation_quotient(&ms_twist(&w, &theta).unwrap()).unwrap();
            let twisted = twist_relations(dw.space(), &theta).unwrap();
            assert!(span_equal(dtw.space(), &twisted), "{theta:?}");
        }
    }
}
