use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// A unit step.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    N,
    E,
}

/// A square path of size `n`: `n` north and `n` east steps ending with east.
///
/// The empty path (size 0) is allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SquarePath {
    steps: Vec<Step>,
}

impl SquarePath {
    pub fn new(steps: Vec<Step>) -> Result<Self, Error> {
        let north = steps.iter().filter(|&&s| s == Step::N).count();
        if 2 * north != steps.len() {
            return Err(Error::InvalidPath(format!("unequal numbers of N and E steps in {}", word(&steps))));
        }
        if let Some(&last) = steps.last() {
            if last != Step::E {
                return Err(Error::InvalidPath(format!("{} does not end with an east step", word(&steps))));
            }
        }
        Ok(SquarePath { steps })
    }

    pub fn empty() -> Self {
        SquarePath { steps: Vec::new() }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn size(&self) -> usize {
        self.steps.len() / 2
    }

    /// `a_i`: the diagonal `y = x + a_i` on which the `i`-th north step starts.
    pub fn area_word(&self) -> Vec<i32> {
        let (mut x, mut y) = (0i32, 0i32);
        let mut out = Vec::with_capacity(self.size());
        for s in &self.steps {
            match s {
                Step::N => {
                    out.push(y - x);
                    y += 1;
                }
                Step::E => x += 1,
            }
        }
        out
    }

    /// Largest `s` with the path meeting `y = x - s`.
    pub fn shift(&self) -> u32 {
        let (mut x, mut y, mut low) = (0i32, 0i32, 0i32);
        for s in &self.steps {
            match s {
                Step::N => y += 1,
                Step::E => x += 1,
            }
            low = low.min(y - x);
        }
        (-low) as u32
    }

    pub fn is_dyck(&self) -> bool {
        self.shift() == 0
    }

    /// Index (into `steps`) of the `i`-th north step, `i` 1-based.
    pub fn north_position(&self, i: usize) -> usize {
        self.steps.iter().enumerate().filter(|(_, &s)| s == Step::N).nth(i - 1).map(|(p, _)| p).expect("row in range")
    }

    /// Row `i` is a peak: its north step is followed by an east step.
    pub fn is_peak(&self, i: usize) -> bool {
        let p = self.north_position(i);
        self.steps.get(p + 1) == Some(&Step::E)
    }

    /// Row `i` is preceded by an east step.
    pub fn is_valley(&self, i: usize) -> bool {
        let p = self.north_position(i);
        p > 0 && self.steps[p - 1] == Step::E
    }

    /// Rises `{2 <= i <= n : a_i > a_{i-1}}`.
    pub fn rises(&self) -> Vec<usize> {
        let a = self.area_word();
        (2..=a.len()).filter(|&i| a[i - 1] > a[i - 2]).collect()
    }

    /// All square paths of size `n`, or only Dyck paths, in lexicographic order of
    /// step words (`N < E`).
    pub fn all(n: usize, dyck_only: bool) -> Vec<SquarePath> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(2 * n);
        extend(n, dyck_only, 0, 0, &mut cur, &mut out);
        out
    }
}

fn extend(n: usize, dyck: bool, north: usize, east: usize, cur: &mut Vec<Step>, out: &mut Vec<SquarePath>) {
    if north == n && east == n {
        if cur.last().is_none_or(|&s| s == Step::E) {
            out.push(SquarePath { steps: cur.clone() });
        }
        return;
    }
    if north < n {
        cur.push(Step::N);
        extend(n, dyck, north + 1, east, cur, out);
        cur.pop();
    }
    if east < n && (!dyck || east < north) {
        cur.push(Step::E);
        extend(n, dyck, north, east + 1, cur, out);
        cur.pop();
    }
}

fn word(steps: &[Step]) -> String {
    steps.iter().map(|s| if *s == Step::N { 'N' } else { 'E' }).collect()
}

impl fmt::Display for SquarePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&word(&self.steps))
    }
}

impl FromStr for SquarePath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let steps = s
            .trim()
            .chars()
            .map(|c| match c {
                'N' | 'n' => Ok(Step::N),
                'E' | 'e' => Ok(Step::E),
                other => Err(Error::InvalidPath(format!("unexpected step {other:?}"))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        SquarePath::new(steps)
    }
}
