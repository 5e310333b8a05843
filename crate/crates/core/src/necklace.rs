//! Binary necklaces over the alphabet `{b, w}`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::Error;

/// A letter. `B` sorts before `W`, which fixes the canonical rotation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Bead {
    B,
    W,
}

impl Bead {
    pub fn as_char(self) -> char {
        match self {
            Bead::B => 'b',
            Bead::W => 'w',
        }
    }
}

/// A cyclic word, stored in its lexicographically least rotation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Necklace {
    beads: Vec<Bead>,
}

impl Necklace {
    /// Canonicalizes an arbitrary rotation.
    pub fn new(mut beads: Vec<Bead>) -> Self {
        let k = least_rotation(&beads);
        beads.rotate_left(k);
        Self { beads }
    }

    /// Word of length `len` with `b` exactly at `positions`.
    pub fn from_positions(len: usize, positions: impl IntoIterator<Item = usize>) -> Self {
        let mut beads = alloc::vec![Bead::W; len];
        for p in positions {
            beads[p % len] = Bead::B;
        }
        Self::new(beads)
    }

    pub fn beads(&self) -> &[Bead] {
        &self.beads
    }

    pub fn len(&self) -> usize {
        self.beads.len()
    }

    pub fn is_empty(&self) -> bool {
        self.beads.is_empty()
    }

    /// Indices of the `b`s in the canonical rotation.
    pub fn b_positions(&self) -> Vec<usize> {
        self.beads.iter().enumerate().filter(|(_, &b)| b == Bead::B).map(|(i, _)| i).collect()
    }

    /// No two cyclically adjacent `b`s, i.e. some rotation lies in `{w, bw}*`.
    /// A single `b` of length 1 is adjacent to itself.
    pub fn is_special(&self) -> bool {
        let n = self.beads.len();
        (0..n).all(|i| !(self.beads[i] == Bead::B && self.beads[(i + 1) % n] == Bead::B))
    }
}

/// Index of the lexicographically least rotation (first one on ties).
pub fn least_rotation<T: Ord>(word: &[T]) -> usize {
    let n = word.len();
    let mut best = 0;
    for k in 1..n {
        let less =
            (0..n).map(|i| word[(k + i) % n].cmp(&word[(best + i) % n])).find(|o| o.is_ne()).is_some_and(|o| o.is_lt());
        if less {
            best = k;
        }
    }
    best
}

impl fmt::Display for Necklace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.beads.iter().try_for_each(|b| write!(f, "{}", b.as_char()))
    }
}

impl FromStr for Necklace {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let beads = s
            .chars()
            .map(|c| match c {
                'b' => Ok(Bead::B),
                'w' => Ok(Bead::W),
                other => Err(Error::BadParameter(alloc::format!("necklace letter {other:?}"))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        if beads.is_empty() {
            return Err(Error::BadParameter(String::from("empty necklace")));
        }
        Ok(Self::new(beads))
    }
}
