//! Torus-knot complements as Seifert fibrations over the disc, boundary
//! slopes of Legendrian realizations, and counting of tight contact
//! structures on the complement by slope.
//!
//! The counting recipes cover exactly two situations: slope `s >= 2` with
//! the fractional part admitting an integral `a/(a-b)` (the "case 1"
//! count), and `s` in `[0,1)` with both normalized Seifert invariants in
//! `[1/2, 1)`, which reduces to a small Seifert manifold whose count is
//! tabulated for the left-handed-trefoil complement. Everything outside
//! these recipes is reported as unknown or unsupported, never guessed.

use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::exact::neg_cf_expand;
use crate::{rat, Int, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeifertError {
    #[error("invalid torus-knot parameters: {0}")]
    InvalidKnot(String),
    #[error("unsupported torus-knot form: {0}")]
    UnsupportedForm(String),
    #[error("infinite slope — not covered (tb equals the surgery-framing product pq)")]
    InfiniteSlope,
    #[error("unsupported slope: {0}")]
    UnsupportedSlope(String),
    #[error("unsupported input: {0}")]
    UnsupportedInput(String),
}

/// A (p,q)-torus knot with p >= 2, q nonzero and coprime to p.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TorusKnotSpec {
    p: i64,
    q: i64,
}

impl TorusKnotSpec {
    pub fn new(p: i64, q: i64) -> Result<Self, SeifertError> {
        if p < 2 {
            return Err(SeifertError::InvalidKnot(format!(
                "p must be >= 2, got {p}"
            )));
        }
        if q == 0 {
            return Err(SeifertError::InvalidKnot("q must be nonzero".into()));
        }
        if p.gcd(&q.abs()) != 1 {
            return Err(SeifertError::InvalidKnot(format!(
                "p and q must be coprime, got ({p}, {q})"
            )));
        }
        Ok(TorusKnotSpec { p, q })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    /// Maximal tb among Legendrian realizations in the standard tight
    /// sphere: pq - p - q for positive q, pq for negative q.
    pub fn max_tb(&self) -> i64 {
        if self.q > 0 {
            self.p * self.q - self.p - self.q
        } else {
            self.p * self.q
        }
    }

    /// The left-handed trefoil, the one knot with a tabulated
    /// small-Seifert count.
    pub fn is_lht(&self) -> bool {
        (self.p, self.q) == (2, -3)
    }
}

/// Seifert data of the knot complement, fibred over the disc with two
/// singular fibres, normalized so both invariants lie in (0,1). The
/// normalization shifts the boundary slope by +1 (recorded in `shift`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeifertComplement {
    pub p: i64,
    pub q: i64,
    pub pprime: i64,
    pub qprime: i64,
    pub r1: Rational,
    pub r2: Rational,
    pub shift: i64,
}

/// Normalized complement data. Supported are the two torus-knot families
/// with q = np+1 (n >= 1) and q = -(np-1) (n >= 2), which normalize to
/// r1 = (p-1)/p and r2 = n/|q|.
pub fn complement_of(k: &TorusKnotSpec) -> Result<SeifertComplement, SeifertError> {
    let (p, q) = (k.p(), k.q());
    let n = if q > 0 && (q - 1) % p == 0 && (q - 1) / p >= 1 {
        (q - 1) / p
    } else if q < 0 && (1 - q) % p == 0 && (1 - q) / p >= 2 {
        (1 - q) / p
    } else {
        return Err(SeifertError::UnsupportedForm(format!(
            "q = {q} is neither np+1 (n >= 1) nor -(np-1) (n >= 2) for p = {p}"
        )));
    };
    // p*qprime + pprime*q = 1 with pprime = 1
    let qprime = (1 - q) / p;
    debug_assert_eq!(p * qprime + q, 1);
    Ok(SeifertComplement {
        p,
        q,
        pprime: 1,
        qprime,
        r1: rat(p - 1, p),
        r2: rat(n, q.abs()),
        shift: 1,
    })
}

/// A complement together with the tb of a Legendrian realization and the
/// resulting normalized boundary slope.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlopeProblem {
    pub complement: SeifertComplement,
    pub tb: i64,
    pub s: Rational,
}

/// Normalized boundary slope s = 1/(tb - pq) + 1.
pub fn slope_of(c: SeifertComplement, tb: i64) -> Result<SlopeProblem, SeifertError> {
    let pq = c.p * c.q;
    if tb == pq {
        return Err(SeifertError::InfiniteSlope);
    }
    let s = rat(1, tb - pq) + rat(c.shift, 1);
    Ok(SlopeProblem {
        complement: c,
        tb,
        s,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DlzCase {
    Dlz1,
    Dlz2,
    Unclassified,
}

impl std::fmt::Display for DlzCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DlzCase::Dlz1 => write!(f, "DLZ1"),
            DlzCase::Dlz2 => write!(f, "DLZ2"),
            DlzCase::Unclassified => write!(f, "Unclassified"),
        }
    }
}

/// Case selection: DLZ1 for s < 0 or s >= 2 (any Seifert invariants),
/// DLZ2 for r1, r2 in [1/2, 1) and s in [0, 1).
pub fn classify_case(sp: &SlopeProblem) -> DlzCase {
    let s = &sp.s;
    if s < &rat(0, 1) || s >= &rat(2, 1) {
        return DlzCase::Dlz1;
    }
    let half = rat(1, 2);
    let one = rat(1, 1);
    let in_range = |r: &Rational| *r >= half && *r < one;
    if in_range(&sp.complement.r1) && in_range(&sp.complement.r2) && s < &one {
        return DlzCase::Dlz2;
    }
    DlzCase::Unclassified
}

fn floor_i64(r: &Rational, what: &str) -> Result<i64, SeifertError> {
    r.floor()
        .to_integer()
        .to_i64()
        .ok_or_else(|| SeifertError::UnsupportedSlope(format!("{what} out of machine range")))
}

/// `a/(a-b)` for the fractional part b/a of the slope; integral in every
/// situation the counting recipes define.
fn cone_index(frac: &Rational) -> Result<i64, SeifertError> {
    let a = frac.denom().clone();
    let b = frac.numer().clone();
    let d = &a - &b;
    if d.is_zero() || !(&a % &d).is_zero() {
        return Err(SeifertError::UnsupportedSlope(format!(
            "a/(a-b) is not an integer for fractional part {frac}"
        )));
    }
    (a / d)
        .to_i64()
        .ok_or_else(|| SeifertError::UnsupportedSlope("a/(a-b) out of machine range".into()))
}

/// Tight-structure count for slopes s >= 2:
/// `[s] * prod |a_j^i + 1| * (a1 - 1) * a2` over the negative continued
/// fractions of -1/r1 and -1/r2, with a1 = a/(a-b) + 1 and a2 = 1.
pub fn count_dlz1(sp: &SlopeProblem) -> Result<i64, SeifertError> {
    if sp.s < rat(2, 1) {
        return Err(SeifertError::UnsupportedSlope(format!(
            "the counting recipe covers s >= 2 only, got s = {}",
            sp.s
        )));
    }
    let floor_s = floor_i64(&sp.s, "[s]")?;
    let frac = sp.s.clone() - rat(floor_s, 1);
    let a1 = cone_index(&frac)? + 1;
    let a2 = 1i64;
    let mut product: i64 = 1;
    for r in [&sp.complement.r1, &sp.complement.r2] {
        let minus_recip = -r.recip();
        let coeffs = neg_cf_expand::<Int>(&minus_recip)
            .map_err(|e| SeifertError::UnsupportedSlope(e.to_string()))?;
        for c in coeffs {
            let factor = (c + Int::from(1)).abs().to_i64().ok_or_else(|| {
                SeifertError::UnsupportedSlope("expansion coefficient out of range".into())
            })?;
            product *= factor;
        }
    }
    Ok(floor_s * product * (a1 - 1) * a2)
}

/// Small Seifert manifold data (e0; r1, r2, r3) over the sphere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmallSeifert {
    pub e0: i64,
    pub r1: Rational,
    pub r2: Rational,
    pub r3: Rational,
}

/// For s in [0,1) the complement count equals the count on a small
/// Seifert manifold: e0 = -1 - [s], r3 = 1/(a1 - 1/(a2+1)) with
/// a1 = 1/(1 - b/a) + 1 and a2 = 1.
pub fn reduce_dlz2(sp: &SlopeProblem) -> Result<SmallSeifert, SeifertError> {
    if sp.s < rat(0, 1) || sp.s >= rat(1, 1) {
        return Err(SeifertError::UnsupportedSlope(format!(
            "reduction applies to s in [0,1) only, got s = {}",
            sp.s
        )));
    }
    let a1 = cone_index(&sp.s)? + 1;
    let a2 = 1i64;
    let r3 = (rat(a1, 1) - rat(1, a2 + 1)).recip();
    Ok(SmallSeifert {
        e0: -1 - floor_i64(&sp.s, "[s]")?,
        r1: sp.complement.r1.clone(),
        r2: sp.complement.r2.clone(),
        r3,
    })
}

/// Tabulated count for the reductions arising from the left-handed
/// trefoil: (e0; r1, r2, r3) = (-1; 1/2, 2/3, 2/(2k+1)) has k + 4 tight
/// structures. Any other reduction is out of range of the table.
pub fn count_dlz2_lht(red: &SmallSeifert) -> Result<i64, SeifertError> {
    if red.e0 != -1 || red.r1 != rat(1, 2) || red.r2 != rat(2, 3) {
        return Err(SeifertError::UnsupportedInput(format!(
            "no tabulated count for ({}; {}, {}, {})",
            red.e0, red.r1, red.r2, red.r3
        )));
    }
    // r3 = 2/(2k+1) <=> k = (2/r3 - 1)/2
    let twice = rat(2, 1) / red.r3.clone();
    let k = (twice - rat(1, 1)) / rat(2, 1);
    let k = if k.is_integer() {
        k.to_integer().to_i64()
    } else {
        None
    };
    match k {
        Some(k) if k >= 1 => Ok(k + 4),
        _ => Err(SeifertError::UnsupportedInput(format!(
            "r3 = {} is not of the form 2/(2k+1), k >= 1",
            red.r3
        ))),
    }
}

/// A count that may be honestly unknown.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Count {
    Known(i64),
    Unknown(String),
}

impl Count {
    pub fn known(&self) -> Option<i64> {
        match self {
            Count::Known(n) => Some(*n),
            Count::Unknown(_) => None,
        }
    }
}

/// Count of Legendrian realizations in the standard tight sphere at a
/// given tb, where classified.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StdCount {
    pub count: Count,
    pub rot_set: Option<Vec<i64>>,
}

/// Standard-tight realization counts: the left-handed trefoil is fully
/// classified (tb = -6-k has k+2 realizations with rot in
/// {-(k+1), -(k-1), ..., k+1}); any tb above the maximal value has none;
/// everything else is unknown.
pub fn std_count(k: &TorusKnotSpec, tb: i64) -> StdCount {
    if k.is_lht() && tb <= -6 {
        let steps = -6 - tb;
        let top = steps + 1;
        let rot_set: Vec<i64> = (-top..=top).step_by(2).collect();
        return StdCount {
            count: Count::Known(steps + 2),
            rot_set: Some(rot_set),
        };
    }
    if tb > k.max_tb() {
        return StdCount {
            count: Count::Known(0),
            rot_set: Some(Vec::new()),
        };
    }
    StdCount {
        count: Count::Unknown(format!(
            "no classification data for the ({}, {})-torus knot at tb = {tb}",
            k.p(),
            k.q()
        )),
        rot_set: None,
    }
}

/// Combined result of the counting pipeline.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TightCount {
    pub case: DlzCase,
    pub total: Count,
    pub std_count: Count,
    pub exceptional_upper_bound: Count,
    pub reduction: Option<SmallSeifert>,
}

/// Full pipeline: complement data, slope, case, total count, standard
/// count, and the difference as an upper bound for exceptional
/// realizations. Hard errors (unsupported forms and slopes) propagate;
/// an unclassified case is a soft Unknown.
pub fn exceptional_bound(k: &TorusKnotSpec, tb: i64) -> Result<TightCount, SeifertError> {
    let complement = complement_of(k)?;
    let sp = slope_of(complement, tb)?;
    let case = classify_case(&sp);
    let (total, reduction) = match case {
        DlzCase::Dlz1 => (Count::Known(count_dlz1(&sp)?), None),
        DlzCase::Dlz2 => {
            let red = reduce_dlz2(&sp)?;
            let n = count_dlz2_lht(&red)?;
            (Count::Known(n), Some(red))
        }
        DlzCase::Unclassified => (
            Count::Unknown(format!(
                "slope s = {} falls outside both counting cases",
                sp.s
            )),
            None,
        ),
    };
    let std = std_count(k, tb);
    let bound = match (&total, &std.count) {
        (Count::Known(t), Count::Known(s)) => Count::Known(t - s),
        (Count::Unknown(r), _) | (_, Count::Unknown(r)) => Count::Unknown(r.clone()),
    };
    Ok(TightCount {
        case,
        total,
        std_count: std.count,
        exceptional_upper_bound: bound,
        reduction,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lht() -> TorusKnotSpec {
        TorusKnotSpec::new(2, -3).unwrap()
    }

    #[test]
    fn knot_spec_validation() {
        assert!(TorusKnotSpec::new(2, 3).is_ok());
        assert!(matches!(
            TorusKnotSpec::new(1, 2),
            Err(SeifertError::InvalidKnot(_))
        ));
        assert!(matches!(
            TorusKnotSpec::new(2, 0),
            Err(SeifertError::InvalidKnot(_))
        ));
        assert!(matches!(
            TorusKnotSpec::new(4, 6),
            Err(SeifertError::InvalidKnot(_))
        ));
    }

    #[test]
    fn complement_normalizations() {
        let c = complement_of(&lht()).unwrap();
        assert_eq!((c.r1, c.r2), (rat(1, 2), rat(2, 3)));
        let c = complement_of(&TorusKnotSpec::new(2, 3).unwrap()).unwrap();
        assert_eq!((c.r1, c.r2), (rat(1, 2), rat(1, 3)));
        let c = complement_of(&TorusKnotSpec::new(3, 7).unwrap()).unwrap();
        assert_eq!((c.r1, c.r2), (rat(2, 3), rat(2, 7)));
        // the defining identity of (pprime, qprime)
        for (p, q) in [(2i64, -3i64), (2, 3), (3, 7), (3, -5), (5, 11)] {
            let c = complement_of(&TorusKnotSpec::new(p, q).unwrap()).unwrap();
            assert_eq!(c.p * c.qprime + c.pprime * c.q, 1);
        }
    }

    #[test]
    fn unsupported_forms() {
        // q = -(p-1) would need n = 1; q = np+2 is not np+1
        assert!(matches!(
            complement_of(&TorusKnotSpec::new(3, -2).unwrap()),
            Err(SeifertError::UnsupportedForm(_))
        ));
        assert!(matches!(
            complement_of(&TorusKnotSpec::new(5, 7).unwrap()),
            Err(SeifertError::UnsupportedForm(_))
        ));
    }

    #[test]
    fn slopes() {
        let c = complement_of(&lht()).unwrap();
        assert_eq!(slope_of(c.clone(), -5).unwrap().s, rat(2, 1));
        assert_eq!(slope_of(c.clone(), -7).unwrap().s, rat(0, 1));
        assert_eq!(slope_of(c.clone(), -9).unwrap().s, rat(2, 3));
        assert_eq!(slope_of(c, -6), Err(SeifertError::InfiniteSlope));
        let c = complement_of(&TorusKnotSpec::new(2, 3).unwrap()).unwrap();
        assert_eq!(slope_of(c, 7).unwrap().s, rat(2, 1));
    }

    #[test]
    fn slope_decreases_with_tb() {
        // s = 1/(tb - pq) + 1 is strictly decreasing on each side of the pole.
        let c = complement_of(&lht()).unwrap();
        let s = |tb| slope_of(c.clone(), tb).unwrap().s;
        for tb in -20..-7 {
            assert!(s(tb) > s(tb + 1));
        }
        for tb in -5..10 {
            assert!(s(tb) > s(tb + 1));
        }
    }

    #[test]
    fn case_classification() {
        let c = complement_of(&lht()).unwrap();
        assert_eq!(
            classify_case(&slope_of(c.clone(), -5).unwrap()),
            DlzCase::Dlz1
        );
        for k in 1..=10 {
            assert_eq!(
                classify_case(&slope_of(c.clone(), -6 - k).unwrap()),
                DlzCase::Dlz2
            );
        }
        // (3,-5) at a slope in (1,2)
        let c = complement_of(&TorusKnotSpec::new(3, -5).unwrap()).unwrap();
        let sp = slope_of(c, -13).unwrap();
        assert_eq!(sp.s, rat(3, 2));
        assert_eq!(classify_case(&sp), DlzCase::Unclassified);
    }

    #[test]
    fn counts_at_slope_two() {
        let sp = slope_of(complement_of(&lht()).unwrap(), -5).unwrap();
        assert_eq!(count_dlz1(&sp).unwrap(), 2);
        let rht = TorusKnotSpec::new(2, 3).unwrap();
        let sp = slope_of(complement_of(&rht).unwrap(), 7).unwrap();
        assert_eq!(count_dlz1(&sp).unwrap(), 4);
    }

    #[test]
    fn counts_match_closed_forms() {
        for p in 2..=6i64 {
            for n in 1..=5i64 {
                let k = TorusKnotSpec::new(p, n * p + 1).unwrap();
                let sp = slope_of(complement_of(&k).unwrap(), n * p * p + p + 1).unwrap();
                assert_eq!(count_dlz1(&sp).unwrap(), 2 * p);
                if n >= 2 {
                    let k = TorusKnotSpec::new(p, -(n * p - 1)).unwrap();
                    let sp = slope_of(complement_of(&k).unwrap(), -n * p * p + p + 1).unwrap();
                    assert_eq!(count_dlz1(&sp).unwrap(), 2 * (p - 1) * (n - 1));
                }
            }
        }
    }

    #[test]
    fn out_of_recipe_slopes() {
        // s = 0 with r2 outside [1/2, 1) falls in neither case
        let rht = TorusKnotSpec::new(2, 3).unwrap();
        let sp = slope_of(complement_of(&rht).unwrap(), 5).unwrap();
        assert_eq!(sp.s, rat(0, 1));
        assert_eq!(classify_case(&sp), DlzCase::Unclassified);
        // negative slopes select the first case, but its count is undefined there
        let sp = SlopeProblem {
            complement: complement_of(&lht()).unwrap(),
            tb: 0,
            s: rat(-1, 2),
        };
        assert_eq!(classify_case(&sp), DlzCase::Dlz1);
        assert!(matches!(
            count_dlz1(&sp),
            Err(SeifertError::UnsupportedSlope(_))
        ));
    }

    #[test]
    fn small_seifert_reductions() {
        let c = complement_of(&lht()).unwrap();
        let red = reduce_dlz2(&slope_of(c.clone(), -7).unwrap()).unwrap();
        assert_eq!(
            red,
            SmallSeifert {
                e0: -1,
                r1: rat(1, 2),
                r2: rat(2, 3),
                r3: rat(2, 3),
            }
        );
        let red = reduce_dlz2(&slope_of(c.clone(), -8).unwrap()).unwrap();
        assert_eq!(red.r3, rat(2, 5));
        let red = reduce_dlz2(&slope_of(c, -11).unwrap()).unwrap();
        assert_eq!(red.r3, rat(2, 11));
    }

    #[test]
    fn tabulated_counts() {
        let c = complement_of(&lht()).unwrap();
        for (tb, expected) in [(-7, 5), (-8, 6), (-16, 14)] {
            let red = reduce_dlz2(&slope_of(c.clone(), tb).unwrap()).unwrap();
            assert_eq!(count_dlz2_lht(&red).unwrap(), expected);
        }
        // a reduction from a different complement is out of the table
        let other = complement_of(&TorusKnotSpec::new(2, -5).unwrap()).unwrap();
        assert_eq!((other.r1.clone(), other.r2.clone()), (rat(1, 2), rat(3, 5)));
        let red = reduce_dlz2(&slope_of(other, -11).unwrap()).unwrap();
        assert!(matches!(
            count_dlz2_lht(&red),
            Err(SeifertError::UnsupportedInput(_))
        ));
    }

    #[test]
    fn standard_counts() {
        let sc = std_count(&lht(), -7);
        assert_eq!(sc.count, Count::Known(3));
        assert_eq!(sc.rot_set, Some(vec![-2, 0, 2]));
        let sc = std_count(&lht(), -6);
        assert_eq!(sc.count, Count::Known(2));
        assert_eq!(sc.rot_set, Some(vec![-1, 1]));
        // above the maximal tb there are no standard realizations
        let k = TorusKnotSpec::new(2, 3).unwrap();
        let sc = std_count(&k, 7);
        assert_eq!(sc.count, Count::Known(0));
        assert_eq!(sc.rot_set, Some(vec![]));
        // below it, the answer is honestly unknown
        let sc = std_count(&k, 0);
        assert!(matches!(sc.count, Count::Unknown(_)));
    }

    #[test]
    fn pipeline_bounds() {
        let tc = exceptional_bound(&lht(), -5).unwrap();
        assert_eq!(tc.case, DlzCase::Dlz1);
        assert_eq!(tc.total, Count::Known(2));
        assert_eq!(tc.std_count, Count::Known(0));
        assert_eq!(tc.exceptional_upper_bound, Count::Known(2));
        for k in 1..=10i64 {
            let tc = exceptional_bound(&lht(), -6 - k).unwrap();
            assert_eq!(tc.case, DlzCase::Dlz2);
            assert_eq!(tc.total, Count::Known(k + 4));
            assert_eq!(tc.std_count, Count::Known(k + 2));
            assert_eq!(tc.exceptional_upper_bound, Count::Known(2));
            assert_eq!(tc.reduction.unwrap().r3, rat(2, 2 * k + 1));
        }
        let rht = TorusKnotSpec::new(2, 3).unwrap();
        let tc = exceptional_bound(&rht, 7).unwrap();
        assert_eq!(tc.case, DlzCase::Dlz1);
        assert_eq!(tc.total, Count::Known(4));
        assert_eq!(tc.exceptional_upper_bound, Count::Known(4));
    }

    #[test]
    fn unclassified_is_a_soft_unknown() {
        let k = TorusKnotSpec::new(3, -5).unwrap();
        let tc = exceptional_bound(&k, -13).unwrap();
        assert_eq!(tc.case, DlzCase::Unclassified);
        assert!(matches!(tc.total, Count::Unknown(_)));
        assert_eq!(tc.std_count, Count::Known(0));
        assert!(matches!(tc.exceptional_upper_bound, Count::Unknown(_)));
    }

    #[test]
    fn infinite_slope_propagates() {
        assert_eq!(
            exceptional_bound(&lht(), -6),
            Err(SeifertError::InfiniteSlope)
        );
    }
}
