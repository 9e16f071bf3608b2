//! Permutations of `{1..d}`, stored zero-based in one-line notation.
//!
//! Products compose left to right: `(f * g)(i) = g(f(i))`, matching the
//! concatenation order of monodromy loops.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation { images: (0..degree).collect() }
    }

    /// Builds a permutation from zero-based one-line images.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let d = images.len();
        let mut seen = vec![false; d];
        for &i in &images {
            if i >= d || seen[i] {
                return Err(Error::InvalidParameter(format!(
                    "{images:?} is not a bijection of 0..{d}"
                )));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation from one-based one-line notation.
    pub fn from_one_line(one_based: &[usize]) -> Result<Self> {
        if one_based.contains(&0) {
            return Err(Error::InvalidParameter("one-line notation is one-based".into()));
        }
        Self::from_images(one_based.iter().map(|&i| i - 1).collect())
    }

    /// Transposition of the one-based letters `a` and `b`.
    pub fn transposition(degree: usize, a: usize, b: usize) -> Result<Self> {
        Self::from_cycles(degree, &[vec![a, b]])
    }

    /// Builds a permutation from one-based cycles. Cycles must be disjoint.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                if a == 0 || a > degree {
                    return Err(Error::InvalidParameter(format!(
                        "letter {a} outside 1..{degree}"
                    )));
                }
                if touched[a - 1] {
                    return Err(Error::InvalidParameter(format!(
                        "letter {a} appears twice in cycle notation"
                    )));
                }
                touched[a - 1] = true;
                let b = cycle[(k + 1) % cycle.len()];
                if b == 0 || b > degree {
                    return Err(Error::InvalidParameter(format!(
                        "letter {b} outside 1..{degree}"
                    )));
                }
                images[a - 1] = b - 1;
            }
        }
        Ok(Permutation { images })
    }

    /// Parses cycle notation such as `"(1 2)(3 4)"`. `"()"`, `"e"` and the
    /// empty string denote the identity.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Self> {
        let t = text.trim();
        if t.is_empty() || t == "e" || t == "()" {
            return Ok(Self::identity(degree));
        }
        let mut cycles = Vec::new();
        let mut rest = t;
        while !rest.is_empty() {
            let open = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::Parse(format!("expected '(' in {text:?}")))?;
            let close = open
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unclosed cycle in {text:?}")))?;
            let body = &open[..close];
            let letters = body
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad letter {s:?} in {text:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            if !letters.is_empty() {
                cycles.push(letters);
            }
            rest = open[close + 1..].trim_start();
        }
        Self::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Zero-based image of the zero-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation { images: self.images.iter().map(|&i| other.images[i]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Permutation { images }
    }

    /// `y⁻¹ · self · y`.
    pub fn conjugate_by(&self, y: &Permutation) -> Permutation {
        y.inverse().then(self).then(y)
    }

    /// Nontrivial cycles, one-based, each starting at its least letter,
    /// ordered by least letter.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let d = self.degree();
        let mut seen = vec![false; d];
        let mut out = Vec::new();
        for start in 0..d {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i + 1);
                i = self.images[i];
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle lengths including fixed points, sorted descending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut ty: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        let moved: usize = ty.iter().sum();
        ty.extend(std::iter::repeat_n(1, self.degree() - moved));
        ty.sort_unstable_by(|a, b| b.cmp(a));
        ty
    }

    /// Exactly one cycle of length at least two.
    pub fn is_cyclic(&self) -> bool {
        self.cycles().len() == 1
    }

    pub fn is_transposition(&self) -> bool {
        let c = self.cycles();
        c.len() == 1 && c[0].len() == 2
    }

    /// All permutations of the given degree, in lexicographic order of their
    /// one-line notation.
    pub fn all(degree: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current: Vec<usize> = (0..degree).collect();
        loop {
            out.push(Permutation { images: current.clone() });
            // next lexicographic permutation
            let Some(i) = (1..degree).rev().find(|&i| current[i - 1] < current[i]) else {
                break;
            };
            let j = (i..degree).rev().find(|&j| current[j] > current[i - 1]).unwrap();
            current.swap(i - 1, j);
            current[i..].reverse();
        }
        out
    }

    /// Whether the group generated by `gens` acts transitively on the letters.
    pub fn generate_transitive(degree: usize, gens: &[Permutation]) -> bool {
        if degree <= 1 {
            return true;
        }
        let mut seen = vec![false; degree];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for g in gens {
                for j in [g.apply(i), g.inverse().apply(i)] {
                    if !seen[j] {
                        seen[j] = true;
                        stack.push(j);
                    }
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let body: Vec<String> = c.iter().map(usize::to_string).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(one_based: Vec<usize>) -> Result<Self> {
        Permutation::from_one_line(&one_based)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.one_line()
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Parses cycle notation with the degree inferred from the largest letter.
    fn from_str(s: &str) -> Result<Self> {
        let degree = s
            .split(|c: char| !c.is_ascii_digit())
            .filter_map(|t| t.parse::<usize>().ok())
            .max()
            .unwrap_or(0);
        Permutation::parse_cycles(s, degree)
    }
}
