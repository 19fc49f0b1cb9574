//! Contact (±1)-surgery diagrams with one distinguished (non-surgery)
//! Legendrian knot, and the matrices derived from them.
//!
//! A diagram is an ordered list of surgery components, their pairwise
//! linking numbers, and the distinguished knot's data. The linking matrix
//! `M` carries the surgery framings on its diagonal (`M_ii = tb_i +
//! coeff_i`); the extended matrix `M_0` borders `M` with the distinguished
//! knot's linking vector and a zero self-linking slot. Blocks of Legendrian
//! push-offs of one knot can be *deflated* to a single row/column with a
//! multiplicity weight, which is the matrix form of a rational surgery
//! coefficient.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::Matrix;
use crate::{Int, IntMatrix};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("linking matrix not symmetric at ({0}, {1})")]
    AsymmetricLinking(usize, usize),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("diagram has no surgery components")]
    Empty,
    #[error("component {0}: tb + rot must be odd (got tb = {1}, rot = {2})")]
    ParityViolation(String, i64, i64),
    #[error("invalid deflation group: {0}")]
    InvalidGroup(String),
    #[error("invalid diagram file: {0}")]
    ParseError(String),
}

/// Contact surgery coefficient, restricted to ±1. Rational coefficients
/// are represented only through deflation groups.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "i8", into = "i8")]
pub enum ContactCoeff {
    PlusOne,
    MinusOne,
}

impl ContactCoeff {
    /// The framing contribution: the diagonal of the linking matrix is
    /// `tb + shift`.
    pub fn shift(self) -> i64 {
        match self {
            ContactCoeff::PlusOne => 1,
            ContactCoeff::MinusOne => -1,
        }
    }

    pub fn is_positive(self) -> bool {
        self == ContactCoeff::PlusOne
    }
}

impl TryFrom<i8> for ContactCoeff {
    type Error = String;
    fn try_from(v: i8) -> Result<Self, String> {
        match v {
            1 => Ok(ContactCoeff::PlusOne),
            -1 => Ok(ContactCoeff::MinusOne),
            other => Err(format!("contact coefficient must be 1 or -1, got {other}")),
        }
    }
}

impl From<ContactCoeff> for i8 {
    fn from(c: ContactCoeff) -> i8 {
        c.shift() as i8
    }
}

/// One surgery component: classical invariants in the standard tight
/// 3-sphere plus its contact surgery coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurgeryComponent {
    pub name: String,
    pub tb: i64,
    pub rot: i64,
    pub coeff: ContactCoeff,
}

/// The distinguished knot `L`: its invariants in the unsurgered sphere and
/// its linking numbers with each surgery component, in diagram order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistinguishedKnot {
    pub tb0: i64,
    pub rot0: i64,
    pub lk: Vec<i64>,
}

/// A validated surgery diagram. Components are ordered; all vectors are in
/// component order; the stored orientation of every knot is the one the
/// source diagrams fix (reversing `L` is [`SurgeryDiagram::reversed`]).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurgeryDiagram {
    components: Vec<SurgeryComponent>,
    offdiag: Vec<Vec<i64>>, // symmetric, diagonal normalized to 0
    distinguished: DistinguishedKnot,
}

impl SurgeryDiagram {
    /// Validates and builds a diagram. `offdiag` must be a symmetric n×n
    /// matrix of pairwise linking numbers (its diagonal is ignored — the
    /// self-linking slot is derived, never user data).
    #[allow(clippy::needless_range_loop)]
    pub fn new(
        components: Vec<SurgeryComponent>,
        offdiag: Vec<Vec<i64>>,
        distinguished: DistinguishedKnot,
    ) -> Result<Self, DiagramError> {
        let n = components.len();
        if n == 0 {
            return Err(DiagramError::Empty);
        }
        if offdiag.len() != n || offdiag.iter().any(|r| r.len() != n) {
            return Err(DiagramError::DimensionMismatch(format!(
                "linking matrix must be {n}x{n}"
            )));
        }
        for i in 0..n {
            for j in i + 1..n {
                if offdiag[i][j] != offdiag[j][i] {
                    return Err(DiagramError::AsymmetricLinking(i, j));
                }
            }
        }
        if distinguished.lk.len() != n {
            return Err(DiagramError::DimensionMismatch(format!(
                "distinguished lk vector must have length {n}"
            )));
        }
        for c in &components {
            if (c.tb + c.rot).rem_euclid(2) != 1 {
                return Err(DiagramError::ParityViolation(c.name.clone(), c.tb, c.rot));
            }
        }
        if (distinguished.tb0 + distinguished.rot0).rem_euclid(2) != 1 {
            return Err(DiagramError::ParityViolation(
                "distinguished".into(),
                distinguished.tb0,
                distinguished.rot0,
            ));
        }
        let mut offdiag = offdiag;
        for (i, row) in offdiag.iter_mut().enumerate() {
            row[i] = 0;
        }
        Ok(SurgeryDiagram {
            components,
            offdiag,
            distinguished,
        })
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn components(&self) -> &[SurgeryComponent] {
        &self.components
    }

    pub fn distinguished(&self) -> &DistinguishedKnot {
        &self.distinguished
    }

    pub fn linking(&self, i: usize, j: usize) -> i64 {
        self.offdiag[i][j]
    }

    /// Rotation numbers of the surgery components, in order.
    pub fn rot_vec(&self) -> Vec<i64> {
        self.components.iter().map(|c| c.rot).collect()
    }

    /// Number of (+1)-surgeries.
    pub fn q_plus(&self) -> i64 {
        self.components
            .iter()
            .filter(|c| c.coeff.is_positive())
            .count() as i64
    }

    /// The linking matrix `M`: off-diagonal entries are the pairwise
    /// linking numbers, and `M_ii = tb_i + coeff_i`.
    pub fn linking_matrix(&self) -> IntMatrix {
        Matrix::from_fn(self.len(), |i, j| {
            if i == j {
                Int::from(self.components[i].tb + self.components[i].coeff.shift())
            } else {
                Int::from(self.offdiag[i][j])
            }
        })
    }

    /// The extended matrix `M_0`: `M` bordered by the distinguished knot's
    /// linking vector as row/column 0, with self-linking slot zero.
    pub fn extended_matrix(&self) -> IntMatrix {
        let n = self.len();
        Matrix::from_fn(n + 1, |i, j| match (i, j) {
            (0, 0) => Int::from(0),
            (0, j) => Int::from(self.distinguished.lk[j - 1]),
            (i, 0) => Int::from(self.distinguished.lk[i - 1]),
            (i, j) => self.linking_matrix_entry(i - 1, j - 1),
        })
    }

    fn linking_matrix_entry(&self, i: usize, j: usize) -> Int {
        if i == j {
            Int::from(self.components[i].tb + self.components[i].coeff.shift())
        } else {
            Int::from(self.offdiag[i][j])
        }
    }

    /// The same diagram with the distinguished knot's orientation reversed:
    /// `rot0` and the whole lk vector change sign (surgery components keep
    /// their stored orientation).
    pub fn reversed(&self) -> SurgeryDiagram {
        let mut d = self.clone();
        d.distinguished.rot0 = -d.distinguished.rot0;
        for lk in &mut d.distinguished.lk {
            *lk = -*lk;
        }
        d
    }

    /// Sums a block partition into the deflated data, after checking the
    /// push-off conditions (see [`DeflationGroups`]).
    pub fn deflate(&self, groups: &DeflationGroups) -> Result<DeflatedDiagram, DiagramError> {
        groups.check(self)?;
        let g = groups.groups();
        let reps: Vec<usize> = g.iter().map(|grp| grp[0]).collect();
        let mprime = Matrix::from_fn(g.len(), |gi, gj| {
            g[gj].iter().fold(Int::from(0), |acc, &c| {
                acc + self.linking_matrix_entry(reps[gi], c)
            })
        });
        Ok(DeflatedDiagram {
            mprime,
            weights: g.iter().map(|grp| grp.len() as i64).collect(),
            rot: reps.iter().map(|&r| self.components[r].rot).collect(),
            lk: reps.iter().map(|&r| self.distinguished.lk[r]).collect(),
            coeffs: reps.iter().map(|&r| self.components[r].coeff).collect(),
            tb0: self.distinguished.tb0,
            rot0: self.distinguished.rot0,
        })
    }
}

/// A partition of the component indices into blocks of Legendrian
/// push-offs of one knot. Validity (checked against a diagram): within a
/// group all components agree in (tb, rot, coeff), their pairwise linking
/// equals their tb (push-offs link by the contact framing), and every
/// group member has the same linking with each outside component and with
/// the distinguished knot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeflationGroups {
    groups: Vec<Vec<usize>>,
}

impl DeflationGroups {
    pub fn new(groups: Vec<Vec<usize>>) -> Result<Self, DiagramError> {
        if groups.iter().any(|g| g.is_empty()) {
            return Err(DiagramError::InvalidGroup("empty group".into()));
        }
        let mut seen: Vec<usize> = groups.iter().flatten().copied().collect();
        seen.sort_unstable();
        if seen.windows(2).any(|w| w[0] == w[1]) {
            return Err(DiagramError::InvalidGroup(
                "component listed in more than one group".into(),
            ));
        }
        Ok(DeflationGroups { groups })
    }

    /// The trivial partition: every component its own group.
    pub fn singletons(n: usize) -> Self {
        DeflationGroups {
            groups: (0..n).map(|i| vec![i]).collect(),
        }
    }

    pub fn groups(&self) -> &[Vec<usize>] {
        &self.groups
    }

    fn check(&self, d: &SurgeryDiagram) -> Result<(), DiagramError> {
        let n = d.len();
        let mut covered = vec![false; n];
        for g in &self.groups {
            for &c in g {
                if c >= n {
                    return Err(DiagramError::InvalidGroup(format!(
                        "component index {c} out of range"
                    )));
                }
                if covered[c] {
                    return Err(DiagramError::InvalidGroup(format!(
                        "component {c} listed twice"
                    )));
                }
                covered[c] = true;
            }
        }
        if covered.iter().any(|&b| !b) {
            return Err(DiagramError::InvalidGroup(
                "partition does not cover every component".into(),
            ));
        }
        for g in &self.groups {
            let r = g[0];
            let rc = &d.components()[r];
            for &c in &g[1..] {
                let cc = &d.components()[c];
                if (cc.tb, cc.rot, cc.coeff) != (rc.tb, rc.rot, rc.coeff) {
                    return Err(DiagramError::InvalidGroup(format!(
                        "components {r} and {c} differ in (tb, rot, coeff)"
                    )));
                }
            }
            for (ai, &a) in g.iter().enumerate() {
                for &b in &g[ai + 1..] {
                    if d.linking(a, b) != rc.tb {
                        return Err(DiagramError::InvalidGroup(format!(
                            "components {a} and {b} must link by their tb ({})",
                            rc.tb
                        )));
                    }
                }
            }
            for &c in &g[1..] {
                for o in 0..n {
                    if !g.contains(&o) && d.linking(c, o) != d.linking(r, o) {
                        return Err(DiagramError::InvalidGroup(format!(
                            "components {r} and {c} link component {o} differently"
                        )));
                    }
                }
                if d.distinguished().lk[c] != d.distinguished().lk[r] {
                    return Err(DiagramError::InvalidGroup(format!(
                        "components {r} and {c} link the distinguished knot differently"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Deflated diagram data: the group-summed matrix `M'` (entry = sum of a
/// representative row over the target group's columns), group sizes, and
/// per-representative vectors. Invariants are computed from these by the
/// weighted formulas in the invariants module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeflatedDiagram {
    pub mprime: IntMatrix,
    pub weights: Vec<i64>,
    pub rot: Vec<i64>,
    pub lk: Vec<i64>,
    pub coeffs: Vec<ContactCoeff>,
    pub tb0: i64,
    pub rot0: i64,
}

/// The JSON file format understood by the CLI:
///
/// ```json
/// {
///   "components": [ { "name": "K", "tb": -2, "rot": 1, "coeff": 1 }, ... ],
///   "linking": [[0, 1], [1, 0]],
///   "distinguished": { "tb0": -2, "rot0": 1, "lk": [-2, -1] },
///   "groups": [[0], [1]]
/// }
/// ```
///
/// `linking` is the full symmetric matrix with diagonal entries ignored;
/// `groups` is an optional deflation partition of 0-based indices.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DiagramFile {
    pub components: Vec<SurgeryComponent>,
    pub linking: Vec<Vec<i64>>,
    pub distinguished: DistinguishedKnot,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub groups: Option<Vec<Vec<usize>>>,
}

impl DiagramFile {
    pub fn parse(json: &str) -> Result<Self, DiagramError> {
        serde_json::from_str(json).map_err(|e| DiagramError::ParseError(e.to_string()))
    }

    /// Validates the raw file into a diagram plus its optional deflation
    /// partition.
    pub fn validate(self) -> Result<(SurgeryDiagram, Option<DeflationGroups>), DiagramError> {
        let diagram = SurgeryDiagram::new(self.components, self.linking, self.distinguished)?;
        let groups = match self.groups {
            Some(g) => {
                let groups = DeflationGroups::new(g)?;
                groups.check(&diagram)?;
                Some(groups)
            }
            None => None,
        };
        Ok((diagram, groups))
    }

    pub fn from_diagram(d: &SurgeryDiagram, groups: Option<&DeflationGroups>) -> Self {
        DiagramFile {
            components: d.components().to_vec(),
            linking: (0..d.len())
                .map(|i| (0..d.len()).map(|j| d.linking(i, j)).collect())
                .collect(),
            distinguished: d.distinguished().clone(),
            groups: groups.map(|g| g.groups().to_vec()),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("diagram files serialize")
    }
}
