//! Freely reduced words in a free group on `x_1, x_2, ...`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A generator `x_{index+1}` or its inverse.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Letter {
    /// Zero-based generator index.
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(generator: usize, inverse: bool) -> Self {
        Letter { generator, inverse }
    }

    pub fn inv(self) -> Self {
        Letter { generator: self.generator, inverse: !self.inverse }
    }

    fn cancels(self, other: Letter) -> bool {
        self.generator == other.generator && self.inverse != other.inverse
    }
}

/// A freely reduced word. Every constructor reduces eagerly, so two words
/// are equal in the free group iff they are equal as values.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeWord {
    letters: Vec<Letter>,
}

impl FreeWord {
    pub fn identity() -> Self {
        FreeWord::default()
    }

    pub fn generator(generator: usize) -> Self {
        FreeWord { letters: vec![Letter::new(generator, false)] }
    }

    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let mut w = FreeWord::default();
        for l in letters {
            w.push(l);
        }
        w
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Appends one letter, cancelling against the last letter if possible.
    pub fn push(&mut self, l: Letter) {
        match self.letters.last() {
            Some(&last) if last.cancels(l) => {
                self.letters.pop();
            }
            _ => self.letters.push(l),
        }
    }

    pub fn mul(&self, other: &FreeWord) -> FreeWord {
        let mut out = self.clone();
        out.append(other);
        out
    }

    pub fn append(&mut self, other: &FreeWord) {
        for &l in &other.letters {
            self.push(l);
        }
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord { letters: self.letters.iter().rev().map(|l| l.inv()).collect() }
    }

    /// `c⁻¹ · self · c`.
    pub fn conjugate_by(&self, c: &FreeWord) -> FreeWord {
        let mut out = c.inverse();
        out.append(self);
        out.append(c);
        out
    }

    /// Replaces every generator `x_j` by `images[j]`.
    pub fn substitute(&self, images: &[FreeWord]) -> FreeWord {
        let mut out = FreeWord::default();
        for l in &self.letters {
            let img = &images[l.generator];
            if l.inverse {
                out.append(&img.inverse());
            } else {
                out.append(img);
            }
        }
        out
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.letters.iter().map(|l| l.generator).max()
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|l| {
                if l.inverse {
                    format!("x{}^-1", l.generator + 1)
                } else {
                    format!("x{}", l.generator + 1)
                }
            })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

impl fmt::Debug for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

/// Parses one token of the form `<prefix><i>` or `<prefix><i>^-1` (also
/// `^1`), returning the one-based index and whether it is inverted.
pub(crate) fn parse_power_token(token: &str, prefix: char) -> Result<(usize, bool)> {
    let body = token
        .strip_prefix(prefix)
        .ok_or_else(|| Error::Parse(format!("expected {prefix}<i>, got {token:?}")))?;
    let (index, inverse) = match body.split_once('^') {
        Some((i, "-1")) => (i, true),
        Some((i, "1")) | Some((i, "+1")) => (i, false),
        Some(_) => return Err(Error::Parse(format!("unsupported exponent in {token:?}"))),
        None => (body, false),
    };
    let index: usize = index
        .parse()
        .map_err(|_| Error::Parse(format!("bad index in {token:?}")))?;
    if index == 0 {
        return Err(Error::Parse(format!("indices are one-based: {token:?}")));
    }
    Ok((index, inverse))
}

impl FromStr for FreeWord {
    type Err = Error;

    /// Whitespace-separated tokens `x<i>` / `x<i>^-1`; `1` or empty is the
    /// identity.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.is_empty() || t == "1" {
            return Ok(FreeWord::identity());
        }
        let letters = t
            .split_whitespace()
            .map(|tok| parse_power_token(tok, 'x').map(|(i, inv)| Letter::new(i - 1, inv)))
            .collect::<Result<Vec<_>>>()?;
        Ok(FreeWord::from_letters(letters))
    }
}
