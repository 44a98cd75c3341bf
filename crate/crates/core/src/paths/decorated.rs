use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::path::SquarePath;
use crate::error::Error;

/// A partially labelled square path with decorated valleys or decorated rises.
///
/// Rows are 1-based. Label `0` is the zero label.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DecoratedPath {
    path: SquarePath,
    labels: Vec<u32>,
    dv: BTreeSet<usize>,
    dr: BTreeSet<usize>,
}

/// The four parts of `dinv`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DinvBreakdown {
    pub primary: u32,
    pub secondary: u32,
    pub bonus: u32,
    pub decorated: u32,
}

impl DinvBreakdown {
    pub fn total(&self) -> i64 {
        self.primary as i64 + self.secondary as i64 + self.bonus as i64 - self.decorated as i64
    }
}

/// `w` is a partial labelling of a path with area word `a` and shift `s`.
pub fn is_partial_labelling(a: &[i32], shift: u32, w: &[u32]) -> bool {
    if a.len() != w.len() {
        return false;
    }
    if a.is_empty() {
        return true;
    }
    if a[0] == 0 && w[0] == 0 {
        return false;
    }
    if (1..a.len()).any(|i| a[i] > a[i - 1] && w[i] <= w[i - 1]) {
        return false;
    }
    a.iter().zip(w).any(|(&ai, &wi)| ai == -(shift as i32) && wi > 0)
}

/// Contractible valleys `v(pi, w)`, 1-based.
pub fn contractible_valleys(a: &[i32], w: &[u32]) -> Vec<usize> {
    let mut out = Vec::new();
    for i in 1..=a.len() {
        let ok = if i == 1 {
            a[0] < -1 || (a[0] == -1 && w[0] > 0)
        } else {
            a[i - 1] < a[i - 2] || (a[i - 1] == a[i - 2] && w[i - 1] > w[i - 2])
        };
        if ok {
            out.push(i);
        }
    }
    out
}

/// `dinv` from its definition; `dv` holds 1-based rows.
pub fn dinv_breakdown(a: &[i32], w: &[u32], dv: &BTreeSet<usize>) -> DinvBreakdown {
    let mut b = DinvBreakdown { decorated: dv.len() as u32, ..Default::default() };
    let n = a.len();
    for i in 0..n {
        if a[i] < 0 && w[i] > 0 {
            b.bonus += 1;
        }
        if dv.contains(&(i + 1)) {
            continue;
        }
        for j in i + 1..n {
            if a[i] == a[j] && w[i] < w[j] {
                b.primary += 1;
            } else if a[i] == a[j] + 1 && w[i] > w[j] {
                b.secondary += 1;
            }
        }
    }
    b
}

/// Rows in reading order: by diagonal from the base upwards, bottom to top.
pub fn reading_order(a: &[i32]) -> Vec<usize> {
    let mut rows: Vec<usize> = (1..=a.len()).collect();
    rows.sort_by_key(|&i| (a[i - 1], i));
    rows
}

impl DecoratedPath {
    /// Checks the labelling, `dv` against the contractible valleys and `dr`
    /// against the rises. A path may not carry both kinds of decoration.
    pub fn new(path: SquarePath, labels: Vec<u32>, dv: BTreeSet<usize>, dr: BTreeSet<usize>) -> Result<Self, Error> {
        let a = path.area_word();
        if labels.len() != a.len() {
            return Err(Error::InvalidPath(format!("{} labels for a path of size {}", labels.len(), a.len())));
        }
        if !is_partial_labelling(&a, path.shift(), &labels) {
            return Err(Error::InvalidPath(format!("{labels:?} is not a partial labelling of {path}")));
        }
        let cv = contractible_valleys(&a, &labels);
        if let Some(i) = dv.iter().find(|i| !cv.contains(i)) {
            return Err(Error::InvalidPath(format!("row {i} is not a contractible valley")));
        }
        let rises = path.rises();
        if let Some(i) = dr.iter().find(|i| !rises.contains(i)) {
            return Err(Error::InvalidPath(format!("row {i} is not a rise")));
        }
        if !dv.is_empty() && !dr.is_empty() {
            return Err(Error::InvalidPath("both valleys and rises decorated".into()));
        }
        Ok(DecoratedPath { path, labels, dv, dr })
    }

    pub(crate) fn from_parts_unchecked(path: SquarePath, labels: Vec<u32>, dv: BTreeSet<usize>) -> Self {
        DecoratedPath { path, labels, dv, dr: BTreeSet::new() }
    }

    /// The empty path.
    pub fn empty() -> Self {
        DecoratedPath::from_parts_unchecked(SquarePath::empty(), Vec::new(), BTreeSet::new())
    }

    pub fn path(&self) -> &SquarePath {
        &self.path
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn dv(&self) -> &BTreeSet<usize> {
        &self.dv
    }

    pub fn dr(&self) -> &BTreeSet<usize> {
        &self.dr
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn shift(&self) -> u32 {
        self.path.shift()
    }

    pub fn area_word(&self) -> Vec<i32> {
        self.path.area_word()
    }

    /// Number of zero labels.
    pub fn zeros(&self) -> usize {
        self.labels.iter().filter(|&&w| w == 0).count()
    }

    /// Number of positive labels.
    pub fn positives(&self) -> usize {
        self.size() - self.zeros()
    }

    pub fn contractible_valleys(&self) -> Vec<usize> {
        contractible_valleys(&self.area_word(), &self.labels)
    }

    /// `sum over rows not in dr of (a_i + s)`.
    pub fn area(&self) -> u32 {
        let s = self.shift() as i32;
        self.area_word()
            .iter()
            .enumerate()
            .filter(|(i, _)| !self.dr.contains(&(i + 1)))
            .map(|(_, &a)| (a + s) as u32)
            .sum()
    }

    pub fn dinv_breakdown(&self) -> DinvBreakdown {
        dinv_breakdown(&self.area_word(), &self.labels, &self.dv)
    }

    pub fn dinv(&self) -> u32 {
        let d = self.dinv_breakdown().total();
        assert!(d >= 0, "negative dinv on {self:?}");
        d as u32
    }

    pub fn reading_word(&self) -> Vec<u32> {
        reading_order(&self.area_word()).into_iter().map(|i| self.labels[i - 1]).collect()
    }

    /// Rows on the base diagonal that are not decorated valleys.
    ///
    /// With `positive_only`, zero-labelled rows are skipped as well.
    pub fn base_touches(&self, positive_only: bool) -> usize {
        let s = -(self.shift() as i32);
        self.area_word()
            .iter()
            .enumerate()
            .filter(|&(i, &a)| a == s && !self.dv.contains(&(i + 1)) && (!positive_only || self.labels[i] > 0))
            .count()
    }

    /// Some positive label on the base diagonal is not a decorated valley.
    pub fn has_free_base_label(&self) -> bool {
        let s = -(self.shift() as i32);
        self.area_word().iter().enumerate().any(|(i, &a)| a == s && self.labels[i] > 0 && !self.dv.contains(&(i + 1)))
    }

    /// Multiplicity of each positive label value, index `v - 1`.
    pub fn content(&self) -> Vec<u32> {
        let top = self.labels.iter().copied().max().unwrap_or(0) as usize;
        let mut c = vec![0u32; top];
        for &w in &self.labels {
            if w > 0 {
                c[w as usize - 1] += 1;
            }
        }
        c
    }

    pub fn to_record(&self, family: Option<&str>) -> PathRecord {
        PathRecord {
            steps: self.path.to_string(),
            labels: self.labels.clone(),
            dv: self.dv.iter().copied().collect(),
            dr: self.dr.iter().copied().collect(),
            family: family.map(str::to_owned),
        }
    }

    pub fn from_record(r: &PathRecord) -> Result<Self, Error> {
        let path: SquarePath = r.steps.parse()?;
        DecoratedPath::new(path, r.labels.clone(), r.dv.iter().copied().collect(), r.dr.iter().copied().collect())
    }

    pub fn to_json(&self, family: Option<&str>) -> String {
        serde_json::to_string(&self.to_record(family)).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<(Self, Option<String>), Error> {
        let r: PathRecord = serde_json::from_str(s).map_err(|e| Error::InvalidPath(e.to_string()))?;
        Ok((Self::from_record(&r)?, r.family))
    }
}

/// JSON form of a decorated path.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathRecord {
    pub steps: String,
    pub labels: Vec<u32>,
    #[serde(default)]
    pub dv: Vec<usize>,
    #[serde(default)]
    pub dr: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
}
