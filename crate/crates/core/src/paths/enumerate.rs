use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use super::decorated::{contractible_valleys, is_partial_labelling, reading_order, DecoratedPath};
use super::path::SquarePath;
use crate::error::Error;

/// Path families.
///
/// The labelled families carry arbitrary positive labels in `1..=n`. The peak
/// families `D` and `SQ'` are the labelled paths whose reading word shuffles
/// `m` zeros, `1, ..., n-d` and `n, n-1, ..., n-d+1`; the `d` largest labels
/// play the role of decorated peaks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// `LD(m,n)^{.k}`.
    LD,
    /// `LSQ(m,n)^{.k}`.
    LSQ,
    /// `LSQ'(m,n)^{.k}`.
    LSQPrime,
    /// `D(m,n)^{.k,od}`.
    D,
    /// `SQ'(m,n)^{.k,od}`.
    SQPrime,
}

impl Family {
    pub const ALL: [Family; 5] = [Family::LD, Family::LSQ, Family::LSQPrime, Family::D, Family::SQPrime];

    pub fn name(self) -> &'static str {
        match self {
            Family::LD => "LD",
            Family::LSQ => "LSQ",
            Family::LSQPrime => "LSQ'",
            Family::D => "D",
            Family::SQPrime => "SQ'",
        }
    }

    pub fn is_dyck(self) -> bool {
        matches!(self, Family::LD | Family::D)
    }

    pub fn is_primed(self) -> bool {
        matches!(self, Family::LSQPrime | Family::SQPrime)
    }

    pub fn is_peak_model(self) -> bool {
        matches!(self, Family::D | Family::SQPrime)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim() {
            "LD" => Ok(Family::LD),
            "LSQ" => Ok(Family::LSQ),
            "LSQ'" | "LSQp" | "LSQprime" => Ok(Family::LSQPrime),
            "D" | "Do" => Ok(Family::D),
            "SQ'" | "SQp" | "SQprime" | "SQ'o" => Ok(Family::SQPrime),
            other => Err(Error::InvalidArgument(format!("unknown family {other:?}"))),
        }
    }
}

/// Parameters `(m, n, k, d)` of a family.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Params {
    pub m: usize,
    pub n: usize,
    pub k: usize,
    pub d: usize,
}

impl Params {
    pub fn new(m: usize, n: usize, k: usize, d: usize) -> Self {
        Params { m, n, k, d }
    }

    pub fn size(&self) -> usize {
        self.m + self.n
    }
}

fn check_params(family: Family, p: Params) -> Result<(), Error> {
    if family.is_peak_model() {
        if p.d > p.n {
            return Err(Error::InvalidArgument(format!("d = {} exceeds n = {}", p.d, p.n)));
        }
    } else if p.d != 0 {
        return Err(Error::InvalidArgument(format!("family {family} has no decorated peaks")));
    }
    Ok(())
}

/// Visits every element of `family` with parameters `p`, once each.
///
/// Labelled families use positive labels in `1..=label_bound`.
pub fn for_each<F: FnMut(&DecoratedPath)>(family: Family, p: Params, label_bound: u32, mut f: F) -> Result<(), Error> {
    check_params(family, p)?;
    if p.n == 0 {
        // Only the empty path survives.
        if p.m == 0 && p.k == 0 && p.d == 0 {
            f(&DecoratedPath::empty());
        }
        return Ok(());
    }
    for path in SquarePath::all(p.size(), family.is_dyck()) {
        let a = path.area_word();
        let shift = path.shift();
        let mut emit = |w: &[u32]| {
            let cv = contractible_valleys(&a, w);
            for_each_subset(&cv, p.k, &mut |dv: &BTreeSet<usize>| {
                let obj = DecoratedPath::from_parts_unchecked(path.clone(), w.to_vec(), dv.clone());
                if family.is_primed() && !obj.has_free_base_label() {
                    return;
                }
                f(&obj);
            });
        };
        if family.is_peak_model() {
            peak_labellings(&a, shift, p, &mut emit);
        } else {
            free_labellings(&a, shift, p.m, label_bound, &mut emit);
        }
    }
    Ok(())
}

/// All elements, collected.
pub fn enumerate(family: Family, p: Params) -> Result<Vec<DecoratedPath>, Error> {
    let mut out = Vec::new();
    for_each(family, p, p.n as u32, |x| out.push(x.clone()))?;
    Ok(out)
}

/// Membership test without enumeration.
pub fn contains(family: Family, p: Params, x: &DecoratedPath) -> bool {
    if check_params(family, p).is_err() || x.zeros() != p.m || x.positives() != p.n || x.dv().len() != p.k {
        return false;
    }
    if !x.dr().is_empty() || (family.is_dyck() && !x.path().is_dyck()) {
        return false;
    }
    if family.is_primed() && x.size() > 0 && !x.has_free_base_label() {
        return false;
    }
    if family.is_peak_model() {
        return is_peak_shuffle(&x.reading_word(), p);
    }
    x.labels().iter().all(|&w| w as usize <= p.n.max(1))
}

/// Reading word is a shuffle of `m` zeros, `1..=n-d` and `n, ..., n-d+1`.
pub fn is_peak_shuffle(word: &[u32], p: Params) -> bool {
    let small = (p.n - p.d) as u32;
    let (mut next_small, mut next_big, mut zeros) = (1u32, p.n as u32, 0usize);
    for &w in word {
        if w == 0 {
            zeros += 1;
        } else if w <= small {
            if w != next_small {
                return false;
            }
            next_small += 1;
        } else {
            if w != next_big {
                return false;
            }
            next_big -= 1;
        }
    }
    zeros == p.m && next_small == small + 1 && next_big == small
}

/// Labellings with `zeros` zero labels and positive labels in `1..=bound`.
fn free_labellings(a: &[i32], shift: u32, zeros: usize, bound: u32, f: &mut dyn FnMut(&[u32])) {
    fn rec(a: &[i32], shift: u32, i: usize, zeros: usize, bound: u32, w: &mut Vec<u32>, f: &mut dyn FnMut(&[u32])) {
        let n = a.len();
        if i == n {
            if zeros == 0 && is_partial_labelling(a, shift, w) {
                f(w);
            }
            return;
        }
        let zeros_ok = zeros > 0 && !(i == 0 && a[0] == 0);
        let positives_left = n - i - zeros;
        let low = if i > 0 && a[i] > a[i - 1] { w[i - 1] + 1 } else { 0 };
        if zeros_ok && low == 0 {
            w.push(0);
            rec(a, shift, i + 1, zeros - 1, bound, w, f);
            w.pop();
        }
        if positives_left > 0 {
            for v in low.max(1)..=bound {
                w.push(v);
                rec(a, shift, i + 1, zeros, bound, w, f);
                w.pop();
            }
        }
    }
    rec(a, shift, 0, zeros, bound, &mut Vec::with_capacity(a.len()), f);
}

/// Labellings with an exact content: `counts[v]` copies of label `v`.
pub(crate) fn content_labellings(a: &[i32], shift: u32, counts: &[u32], f: &mut dyn FnMut(&[u32])) {
    fn rec(a: &[i32], shift: u32, i: usize, counts: &mut [u32], w: &mut Vec<u32>, f: &mut dyn FnMut(&[u32])) {
        if i == a.len() {
            if is_partial_labelling(a, shift, w) {
                f(w);
            }
            return;
        }
        let low = if i > 0 && a[i] > a[i - 1] { w[i - 1] as usize + 1 } else { 0 };
        let low = if i == 0 && a[0] == 0 { low.max(1) } else { low };
        for v in low..counts.len() {
            if counts[v] == 0 {
                continue;
            }
            counts[v] -= 1;
            w.push(v as u32);
            rec(a, shift, i + 1, counts, w, f);
            w.pop();
            counts[v] += 1;
        }
    }
    rec(a, shift, 0, &mut counts.to_vec(), &mut Vec::with_capacity(a.len()), f);
}

/// Visits the elements of a labelled family (`LD`, `LSQ`, `LSQ'`) whose labels
/// have content `counts` (`counts[0]` zeros, `counts[v]` copies of `v`), with
/// `k` decorated valleys.
pub fn for_each_with_content<F: FnMut(&DecoratedPath)>(family: Family, counts: &[u32], k: usize, mut f: F) -> Result<(), Error> {
    if family.is_peak_model() {
        return Err(Error::InvalidArgument(format!("family {family} is not labelled")));
    }
    let size: usize = counts.iter().map(|&c| c as usize).sum();
    let positives = size - counts.first().copied().unwrap_or(0) as usize;
    if positives == 0 {
        if size == 0 && k == 0 {
            f(&DecoratedPath::empty());
        }
        return Ok(());
    }
    for path in SquarePath::all(size, family.is_dyck()) {
        let a = path.area_word();
        content_labellings(&a, path.shift(), counts, &mut |w: &[u32]| {
            let cv = contractible_valleys(&a, w);
            for_each_subset(&cv, k, &mut |dv: &BTreeSet<usize>| {
                let obj = DecoratedPath::from_parts_unchecked(path.clone(), w.to_vec(), dv.clone());
                if family.is_primed() && !obj.has_free_base_label() {
                    return;
                }
                f(&obj);
            });
        });
    }
    Ok(())
}

/// Reading-word shuffles: choose the reading positions of the zeros and of the
/// `d` large labels; the rest is forced.
fn peak_labellings(a: &[i32], shift: u32, p: Params, f: &mut dyn FnMut(&[u32])) {
    let order = reading_order(a);
    let size = a.len();
    let positions: Vec<usize> = (0..size).collect();
    for_each_combination(&positions, p.m, &mut |zero_pos: &[usize]| {
        let rest: Vec<usize> = positions.iter().copied().filter(|x| !zero_pos.contains(x)).collect();
        for_each_combination(&rest, p.d, &mut |big_pos: &[usize]| {
            let mut w = vec![0u32; size];
            let (mut small, mut big) = (1u32, p.n as u32);
            for (pos, &row) in order.iter().enumerate() {
                if zero_pos.contains(&pos) {
                    continue;
                }
                if big_pos.contains(&pos) {
                    w[row - 1] = big;
                    big -= 1;
                } else {
                    w[row - 1] = small;
                    small += 1;
                }
            }
            if is_partial_labelling(a, shift, &w) {
                for &pos in big_pos {
                    let row = order[pos];
                    assert!(is_peak_row(a, row), "large label off a peak");
                }
                f(&w);
            }
        });
    });
}

/// Row `i` (1-based) is followed by an east step: the next row does not rise.
fn is_peak_row(a: &[i32], i: usize) -> bool {
    i == a.len() || a[i] <= a[i - 1]
}

fn for_each_combination(items: &[usize], k: usize, f: &mut dyn FnMut(&[usize])) {
    fn rec(items: &[usize], start: usize, k: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        let need = k - cur.len();
        for i in start..items.len() {
            if items.len() - i < need {
                break;
            }
            cur.push(items[i]);
            rec(items, i + 1, k, cur, f);
            cur.pop();
        }
    }
    rec(items, 0, k, &mut Vec::with_capacity(k), f);
}

fn for_each_subset(items: &[usize], k: usize, f: &mut dyn FnMut(&BTreeSet<usize>)) {
    for_each_combination(items, k, &mut |c: &[usize]| f(&c.iter().copied().collect()));
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(family: Family, m: usize, n: usize, k: usize, d: usize) -> usize {
        enumerate(family, Params::new(m, n, k, d)).unwrap().len()
    }

    #[test]
    fn empty_path_only() {
        assert_eq!(count(Family::D, 0, 0, 0, 0), 1);
        assert_eq!(count(Family::SQPrime, 0, 0, 0, 0), 1);
        assert_eq!(count(Family::D, 1, 0, 0, 0), 0);
        assert_eq!(count(Family::D, 0, 0, 1, 0), 0);
    }

    #[test]
    fn size_two_peak_family() {
        assert_eq!(count(Family::D, 0, 2, 0, 0), 2);
        let one = enumerate(Family::D, Params::new(0, 2, 0, 2)).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].path().to_string(), "NENE");
        assert_eq!(one[0].labels(), &[2, 1]);
    }

    #[test]
    fn catalan_numbers() {
        let c: Vec<usize> = (0..=6).map(|n| count(Family::D, 0, n, 0, 0)).collect();
        assert_eq!(c, vec![1, 1, 2, 5, 14, 42, 132]);
    }

    #[test]
    fn parking_functions() {
        // Labelled Dyck paths with distinct labels 1..n: (n+1)^{n-1}.
        for n in 1..=4usize {
            let mut distinct = 0;
            for_each(Family::LD, Params::new(0, n, 0, 0), n as u32, |x| {
                let mut l = x.labels().to_vec();
                l.sort_unstable();
                if l == (1..=n as u32).collect::<Vec<_>>() {
                    distinct += 1;
                }
            })
            .unwrap();
            assert_eq!(distinct, (n + 1).pow(n as u32 - 1));
        }
    }

    #[test]
    fn shuffle_filter() {
        let p = Params::new(1, 3, 0, 1);
        assert!(is_peak_shuffle(&[0, 1, 3, 2], p));
        assert!(is_peak_shuffle(&[3, 1, 0, 2], p));
        assert!(!is_peak_shuffle(&[2, 1, 0, 3], p));
        assert!(!is_peak_shuffle(&[1, 2, 3, 0, 0], p));
    }

    #[test]
    fn membership_agrees_with_enumeration() {
        for family in Family::ALL {
            let d = if family.is_peak_model() { 1 } else { 0 };
            let p = Params::new(1, 2, 1, d);
            for x in enumerate(family, p).unwrap() {
                assert!(contains(family, p, &x), "{family} {x:?}");
            }
        }
    }
}
