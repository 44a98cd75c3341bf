use std::collections::BTreeSet;

use super::decorated::DecoratedPath;
use super::enumerate::{contains, Family, Params};
use super::path::{SquarePath, Step};
use crate::error::{Error, Result};

/// Image of the pushing map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pushed {
    /// Element of `D(d - p, n - d)^{.k - i}`.
    pub image: DecoratedPath,
    /// Decorated peaks deleted from the main diagonal.
    pub p: usize,
    /// How many of those were decorated valleys.
    pub i: usize,
}

/// Deletes the decorated peaks on the main diagonal and swaps the north and
/// east steps of every other decorated peak, which then carries a zero label.
///
/// `x` must lie in `D(n)^{.k,od}`; the decorated peaks are the rows holding the
/// `d` largest labels.
pub fn push(x: &DecoratedPath, n: usize, k: usize, d: usize) -> Result<Pushed> {
    let params = Params::new(0, n, k, d);
    if !contains(Family::D, params, x) {
        return Err(Error::InvalidPath(format!("not an element of D({n})^(.{k},o{d})")));
    }
    let a = x.area_word();
    let labels = x.labels();
    let is_peak = |row: usize| labels[row - 1] as usize > n - d;

    let mut steps = Vec::with_capacity(x.path().steps().len());
    let mut new_labels = Vec::with_capacity(n);
    let mut new_dv = BTreeSet::new();
    let (mut p, mut i) = (0, 0);
    let mut row = 0;
    let old = x.path().steps();
    let mut pos = 0;
    while pos < old.len() {
        match old[pos] {
            Step::E => {
                steps.push(Step::E);
                pos += 1;
            }
            Step::N => {
                row += 1;
                let decorated = x.dv().contains(&row);
                if is_peak(row) && a[row - 1] == 0 {
                    p += 1;
                    if decorated {
                        i += 1;
                    }
                    // Drop the peak's north step and the east step after it.
                    pos += 2;
                    continue;
                }
                if is_peak(row) {
                    steps.push(Step::E);
                    steps.push(Step::N);
                    new_labels.push(0);
                    pos += 2;
                } else {
                    steps.push(Step::N);
                    new_labels.push(labels[row - 1]);
                    pos += 1;
                }
                if decorated {
                    new_dv.insert(new_labels.len());
                }
            }
        }
    }
    let path = SquarePath::new(steps)?;
    let image = DecoratedPath::new(path, new_labels, new_dv, BTreeSet::new())?;
    let target = Params::new(d - p, n - d, k - i, 0);
    if !contains(Family::D, target, &image) {
        return Err(Error::InvalidPath(format!("pushed image {image:?} left D({}, {})^(.{})", d - p, n - d, k - i)));
    }
    Ok(Pushed { image, p, i })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paths::enumerate::enumerate;

    #[test]
    fn nothing_to_push() {
        for x in enumerate(Family::D, Params::new(0, 3, 1, 0)).unwrap() {
            let out = push(&x, 3, 1, 0).unwrap();
            assert_eq!((out.p, out.i), (0, 0));
            assert_eq!(out.image, x);
        }
    }

    #[test]
    fn both_peaks_on_the_diagonal() {
        let x = &enumerate(Family::D, Params::new(0, 2, 0, 2)).unwrap()[0];
        let out = push(x, 2, 0, 2).unwrap();
        assert_eq!((out.p, out.i), (2, 0));
        assert_eq!(out.image.size(), 0);
    }

    #[test]
    fn area_drops_by_pushed_peaks() {
        for (n, k, d) in [(3, 0, 1), (3, 1, 1), (4, 1, 2), (4, 0, 3)] {
            for x in enumerate(Family::D, Params::new(0, n, k, d)).unwrap() {
                let out = push(&x, n, k, d).unwrap();
                assert_eq!(out.image.area() + (d - out.p) as u32, x.area());
            }
        }
    }
}
