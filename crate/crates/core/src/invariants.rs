//! Classical invariants of the distinguished knot in a surgered sphere:
//! Thurston–Bennequin invariant, rotation number (both orientations), and
//! the d3-invariant of the resulting contact structure, together with the
//! auxiliary topology of the surgery handlebody (χ, σ, homology check).
//!
//! Every operation comes in two independent flavours: the full-matrix
//! computation on a [`SurgeryDiagram`], and a weighted computation on
//! [`DeflatedDiagram`] data. The two must agree wherever both apply; the
//! verification suite checks this across the generated families.

use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::diagram::{DeflatedDiagram, SurgeryDiagram};
use crate::exact::{ExactError, Matrix};
use crate::seifert::TorusKnotSpec;
use crate::{rat, Int, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InvariantError {
    #[error("linking matrix is singular")]
    SingularMatrix,
    #[error("{0} is not an integer (malformed diagram)")]
    NonIntegerResult(&'static str),
    #[error("surgered manifold is not a homology sphere (det M = {0})")]
    NotHomologySphere(Int),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("value out of machine range: {0}")]
    Overflow(String),
}

impl From<ExactError> for InvariantError {
    fn from(e: ExactError) -> Self {
        match e {
            ExactError::SingularMatrix => InvariantError::SingularMatrix,
            other => InvariantError::InvalidInput(other.to_string()),
        }
    }
}

/// Full invariant report for a distinguished knot. `rot_plus` is the
/// stored (clockwise) orientation, `rot_minus = -rot_plus` the reversed
/// one; `d3` refers to the contact structure on the surgered sphere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantReport {
    pub tb: i64,
    pub rot_plus: i64,
    pub rot_minus: i64,
    pub d3: Rational,
    pub det_m: Int,
    pub sigma: i64,
    pub chi: i64,
    pub c_squared: Rational,
    pub q_plus: i64,
    pub is_homology_sphere: bool,
}

fn to_i64(r: &Rational, what: &'static str) -> Result<i64, InvariantError> {
    if !r.is_integer() {
        return Err(InvariantError::NonIntegerResult(what));
    }
    r.to_integer()
        .to_i64()
        .ok_or_else(|| InvariantError::Overflow(what.to_string()))
}

fn dot(ints: &[i64], xs: &[Rational]) -> Rational {
    ints.iter()
        .zip(xs)
        .map(|(&a, x)| rat(a, 1) * x)
        .fold(Rational::zero(), |acc, t| acc + t)
}

/// Thurston–Bennequin invariant after surgery: the bordered-determinant
/// quotient `tb0 + det(M_0)/det(M)`.
pub fn tb_of(d: &SurgeryDiagram) -> Result<i64, InvariantError> {
    let det_m = d.linking_matrix().determinant();
    if det_m.is_zero() {
        return Err(InvariantError::SingularMatrix);
    }
    let det_m0 = d.extended_matrix().determinant();
    let tb = rat(d.distinguished().tb0, 1) + Rational::new(det_m0, det_m);
    to_i64(&tb, "tb")
}

/// Rotation numbers for the stored and the reversed orientation:
/// `rot0 - <rot, M^{-1} lk>` and its negative.
pub fn rot_of(d: &SurgeryDiagram) -> Result<(i64, i64), InvariantError> {
    let m = d.linking_matrix();
    let lk: Vec<Int> = d.distinguished().lk.iter().map(|&v| Int::from(v)).collect();
    let z = m.solve(&lk)?;
    let rot = rat(d.distinguished().rot0, 1) - dot(&d.rot_vec(), &z);
    let plus = to_i64(&rot, "rot")?;
    Ok((plus, -plus))
}

/// d3-invariant of the surgered contact sphere:
/// `(c^2 - 3 sigma - 2 chi)/4 + q`, where `c^2 = x·rot` with `M x = rot`,
/// `chi = 1 + n`, `sigma = signature(M)`, and `q` counts (+1)-surgeries.
/// Only defined here when the surgery yields a homology sphere.
pub fn d3_of(d: &SurgeryDiagram) -> Result<Rational, InvariantError> {
    let m = d.linking_matrix();
    let det_m = m.determinant();
    if det_m.is_zero() {
        return Err(InvariantError::SingularMatrix);
    }
    if !det_m.abs().is_one() {
        return Err(InvariantError::NotHomologySphere(det_m));
    }
    let rot_vec = d.rot_vec();
    let rot_ints: Vec<Int> = rot_vec.iter().map(|&v| Int::from(v)).collect();
    let x = m.solve(&rot_ints)?;
    let c_squared = dot(&rot_vec, &x);
    let sigma = m.signature()?;
    let chi = 1 + d.len() as i64;
    Ok(d3_formula(&c_squared, sigma, chi, d.q_plus()))
}

fn d3_formula(c_squared: &Rational, sigma: i64, chi: i64, q_plus: i64) -> Rational {
    (c_squared.clone() - rat(3 * sigma + 2 * chi, 1)) / rat(4, 1) + rat(q_plus, 1)
}

/// Full report via the full-matrix path. Requires a homology sphere,
/// since the report contains d3.
pub fn report(d: &SurgeryDiagram) -> Result<InvariantReport, InvariantError> {
    let m = d.linking_matrix();
    let det_m = m.determinant();
    if det_m.is_zero() {
        return Err(InvariantError::SingularMatrix);
    }
    if !det_m.abs().is_one() {
        return Err(InvariantError::NotHomologySphere(det_m));
    }
    let tb = tb_of(d)?;
    let (rot_plus, rot_minus) = rot_of(d)?;
    let rot_vec = d.rot_vec();
    let rot_ints: Vec<Int> = rot_vec.iter().map(|&v| Int::from(v)).collect();
    let x = m.solve(&rot_ints)?;
    let c_squared = dot(&rot_vec, &x);
    let sigma = m.signature()?;
    let chi = 1 + d.len() as i64;
    let q_plus = d.q_plus();
    Ok(InvariantReport {
        tb,
        rot_plus,
        rot_minus,
        d3: d3_formula(&c_squared, sigma, chi, q_plus),
        det_m,
        sigma,
        chi,
        c_squared,
        q_plus,
        is_homology_sphere: true,
    })
}

/// Determinant of the full linking matrix recovered from deflated data:
/// collapsing a block of w push-offs contributes a factor coeff^{w-1}.
fn det_from_deflated(dd: &DeflatedDiagram) -> Int {
    let det_mprime = dd.mprime.determinant();
    let sign: i64 = dd
        .weights
        .iter()
        .zip(&dd.coeffs)
        .map(|(&w, c)| c.shift().pow((w - 1) as u32))
        .product();
    det_mprime * Int::from(sign)
}

fn weighted_dot(weights: &[i64], ints: &[i64], xs: &[Rational]) -> Rational {
    weights
        .iter()
        .zip(ints)
        .zip(xs)
        .map(|((&w, &a), x)| rat(w * a, 1) * x)
        .fold(Rational::zero(), |acc, t| acc + t)
}

fn solve_deflated(dd: &DeflatedDiagram, v: &[i64]) -> Result<Vec<Rational>, InvariantError> {
    let ints: Vec<Int> = v.iter().map(|&x| Int::from(x)).collect();
    Ok(dd.mprime.solve(&ints)?)
}

/// tb from deflated data: `tb0 - sum_G w_G lk_G y_G` with `M' y = lk`.
pub fn tb_of_deflated(dd: &DeflatedDiagram) -> Result<i64, InvariantError> {
    let y = solve_deflated(dd, &dd.lk)?;
    let tb = rat(dd.tb0, 1) - weighted_dot(&dd.weights, &dd.lk, &y);
    to_i64(&tb, "tb")
}

/// rot from deflated data: `rot0 - sum_G w_G rot_G y_G` with `M' y = lk`.
pub fn rot_of_deflated(dd: &DeflatedDiagram) -> Result<(i64, i64), InvariantError> {
    let y = solve_deflated(dd, &dd.lk)?;
    let rot = rat(dd.rot0, 1) - weighted_dot(&dd.weights, &dd.rot, &y);
    let plus = to_i64(&rot, "rot")?;
    Ok((plus, -plus))
}

/// Signature of the full matrix from deflated data: each collapsed
/// push-off contributes sign(coeff), and the remaining form is the
/// weight-scaled deflated matrix (symmetric for valid push-off blocks).
fn sigma_from_deflated(dd: &DeflatedDiagram) -> Result<i64, InvariantError> {
    let k = dd.mprime.dim();
    let scaled = Matrix::from_fn(k, |i, j| {
        Int::from(dd.weights[i]) * dd.mprime.at(i, j).clone()
    });
    let collapsed: i64 = dd
        .weights
        .iter()
        .zip(&dd.coeffs)
        .map(|(&w, c)| (w - 1) * c.shift())
        .sum();
    Ok(collapsed + scaled.signature()?)
}

/// d3 from deflated data, by the weighted analogues of the full formulas.
pub fn d3_of_deflated(dd: &DeflatedDiagram) -> Result<Rational, InvariantError> {
    Ok(report_deflated(dd)?.d3)
}

/// Full report via the deflated path.
pub fn report_deflated(dd: &DeflatedDiagram) -> Result<InvariantReport, InvariantError> {
    let det_m = det_from_deflated(dd);
    if det_m.is_zero() {
        return Err(InvariantError::SingularMatrix);
    }
    if !det_m.abs().is_one() {
        return Err(InvariantError::NotHomologySphere(det_m));
    }
    let tb = tb_of_deflated(dd)?;
    let (rot_plus, rot_minus) = rot_of_deflated(dd)?;
    let x = solve_deflated(dd, &dd.rot)?;
    let c_squared = weighted_dot(&dd.weights, &dd.rot, &x);
    let sigma = sigma_from_deflated(dd)?;
    let chi = 1 + dd.weights.iter().sum::<i64>();
    let q_plus = dd
        .weights
        .iter()
        .zip(&dd.coeffs)
        .filter(|(_, c)| c.is_positive())
        .map(|(&w, _)| w)
        .sum();
    Ok(InvariantReport {
        tb,
        rot_plus,
        rot_minus,
        d3: d3_formula(&c_squared, sigma, chi, q_plus),
        det_m,
        sigma,
        chi,
        c_squared,
        q_plus,
        is_homology_sphere: true,
    })
}

/// Hopf-invariant label of the plane field: `h = -d3 - 1/2`.
pub fn d3_to_hopf(d3: &Rational) -> Rational {
    -d3.clone() - rat(1, 2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Overtwisted,
    Inconclusive,
}

/// Detects overtwistedness of the ambient structure on the sphere from
/// the computed invariants alone: a d3 other than -1/2 forces it, and so
/// does a tb beyond the maximal value attained in the standard tight
/// sphere (when a torus-knot type is supplied).
pub fn overtwisted_verdict(tb: i64, d3: &Rational, knot: Option<&TorusKnotSpec>) -> Verdict {
    if *d3 != rat(-1, 2) {
        return Verdict::Overtwisted;
    }
    if let Some(k) = knot {
        if tb > k.max_tb() {
            return Verdict::Overtwisted;
        }
    }
    Verdict::Inconclusive
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::tests::trefoil;
    use crate::diagram::{ContactCoeff, DistinguishedKnot, SurgeryComponent, SurgeryDiagram};

    #[test]
    fn trefoil_tb() {
        assert_eq!(tb_of(&trefoil()).unwrap(), -5);
    }

    #[test]
    fn trefoil_rot_both_orientations() {
        assert_eq!(rot_of(&trefoil()).unwrap(), (6, -6));
        assert_eq!(rot_of(&trefoil().reversed()).unwrap(), (-6, 6));
    }

    #[test]
    fn trefoil_d3() {
        assert_eq!(d3_of(&trefoil()).unwrap(), rat(3, 2));
    }

    #[test]
    fn trefoil_report() {
        let r = report(&trefoil()).unwrap();
        assert_eq!(
            r,
            InvariantReport {
                tb: -5,
                rot_plus: 6,
                rot_minus: -6,
                d3: rat(3, 2),
                det_m: Int::from(-1),
                sigma: -2,
                chi: 5,
                c_squared: rat(6, 1),
                q_plus: 1,
                is_homology_sphere: true,
            }
        );
    }

    #[test]
    fn reversal_fixes_tb_and_d3() {
        let r = report(&trefoil()).unwrap();
        let rr = report(&trefoil().reversed()).unwrap();
        assert_eq!((r.tb, &r.d3), (rr.tb, &rr.d3));
        assert_eq!(r.rot_plus, -rr.rot_plus);
    }

    fn unknot_with(coeff: ContactCoeff) -> SurgeryComponent {
        SurgeryComponent {
            name: "u".into(),
            tb: -1,
            rot: 0,
            coeff,
        }
    }

    #[test]
    fn non_homology_sphere_is_rejected() {
        let d = SurgeryDiagram::new(
            vec![unknot_with(ContactCoeff::MinusOne)],
            vec![vec![0]],
            DistinguishedKnot {
                tb0: -1,
                rot0: 0,
                lk: vec![0],
            },
        )
        .unwrap();
        assert_eq!(
            d3_of(&d),
            Err(InvariantError::NotHomologySphere(Int::from(-2)))
        );
        // tb is still defined: the bordered determinant vanishes here
        assert_eq!(tb_of(&d).unwrap(), -1);
    }

    #[test]
    fn singular_matrix_is_rejected() {
        let d = SurgeryDiagram::new(
            vec![
                unknot_with(ContactCoeff::PlusOne),
                unknot_with(ContactCoeff::PlusOne),
            ],
            vec![vec![0, 0], vec![0, 0]],
            DistinguishedKnot {
                tb0: -1,
                rot0: 0,
                lk: vec![1, 0],
            },
        )
        .unwrap();
        assert_eq!(tb_of(&d), Err(InvariantError::SingularMatrix));
        assert_eq!(rot_of(&d), Err(InvariantError::SingularMatrix));
        assert_eq!(d3_of(&d), Err(InvariantError::SingularMatrix));
    }

    #[test]
    fn fractional_tb_is_an_error() {
        let d = SurgeryDiagram::new(
            vec![
                unknot_with(ContactCoeff::MinusOne),
                unknot_with(ContactCoeff::MinusOne),
            ],
            vec![vec![0, 1], vec![1, 0]],
            DistinguishedKnot {
                tb0: -1,
                rot0: 0,
                lk: vec![1, 0],
            },
        )
        .unwrap();
        assert_eq!(tb_of(&d), Err(InvariantError::NonIntegerResult("tb")));
    }

    #[test]
    fn deflated_tb_rot_agree_with_full_path() {
        // two push-offs of a tb = -1 unknot plus one more knot; synthetic
        // linking data, but a valid push-off partition
        let d = SurgeryDiagram::new(
            vec![
                unknot_with(ContactCoeff::MinusOne),
                unknot_with(ContactCoeff::MinusOne),
                SurgeryComponent {
                    name: "k".into(),
                    tb: -2,
                    rot: 1,
                    coeff: ContactCoeff::PlusOne,
                },
            ],
            vec![vec![0, -1, 2], vec![-1, 0, 2], vec![2, 2, 0]],
            DistinguishedKnot {
                tb0: -2,
                rot0: 1,
                lk: vec![5, 5, 0],
            },
        )
        .unwrap();
        let groups = crate::diagram::DeflationGroups::new(vec![vec![0, 1], vec![2]]).unwrap();
        let dd = d.deflate(&groups).unwrap();
        assert_eq!(tb_of(&d).unwrap(), -12);
        assert_eq!(tb_of(&d).unwrap(), tb_of_deflated(&dd).unwrap());
        assert_eq!(rot_of(&d).unwrap(), rot_of_deflated(&dd).unwrap());
        assert_eq!(d.linking_matrix().determinant(), det_from_deflated(&dd));
        assert_eq!(
            d.linking_matrix().signature().unwrap(),
            sigma_from_deflated(&dd).unwrap()
        );
    }

    #[test]
    fn hopf_labels() {
        assert_eq!(d3_to_hopf(&rat(3, 2)), rat(-2, 1));
        assert_eq!(d3_to_hopf(&rat(-1, 2)), rat(0, 1));
        assert_eq!(d3_to_hopf(&rat(1, 2)), rat(-1, 1));
    }

    #[test]
    fn verdicts() {
        assert_eq!(
            overtwisted_verdict(-5, &rat(3, 2), None),
            Verdict::Overtwisted
        );
        assert_eq!(
            overtwisted_verdict(-7, &rat(-1, 2), None),
            Verdict::Inconclusive
        );
        let rht = TorusKnotSpec::new(2, 3).unwrap();
        // max tb in the standard tight sphere is pq - p - q = 1
        assert_eq!(
            overtwisted_verdict(7, &rat(-1, 2), Some(&rht)),
            Verdict::Overtwisted
        );
        assert_eq!(
            overtwisted_verdict(1, &rat(-1, 2), Some(&rht)),
            Verdict::Inconclusive
        );
    }
}
