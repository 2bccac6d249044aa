//! Permutations of `0..n` in image notation.

use std::fmt;

use crate::error::{Error, Result};

/// A bijection of `0..n`, stored as the sequence of images.
///
/// `Ord` is lexicographic on the image sequence, which is the tie-breaking
/// order used everywhere a canonical representative is needed.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n).collect(),
        }
    }

    /// Builds a permutation from its images, rejecting non-bijections.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v >= n {
                return Err(Error::NotAPermutation {
                    reason: format!("image {v} is out of range for degree {n}"),
                });
            }
            if seen[v] {
                return Err(Error::NotAPermutation {
                    reason: format!("image {v} occurs twice"),
                });
            }
            seen[v] = true;
        }
        Ok(Self { images })
    }

    /// The transposition swapping `i` and `j`.
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        assert!(i < n && j < n);
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(i, j);
        Self { images }
    }

    /// The cycle `0 -> 1 -> ... -> n-1 -> 0`.
    pub fn full_cycle(n: usize) -> Self {
        Self {
            images: (0..n).map(|i| (i + 1) % n).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `self ∘ other`: applies `other` first, then `self`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.degree(), other.degree());
        Self {
            images: other.images.iter().map(|&v| self.images[v]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v] = i;
        }
        Self { images }
    }

    /// Multiplicative order: the smallest `k >= 1` with `self^k = id`.
    pub fn order(&self) -> usize {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut ord: usize = 1;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x];
                len += 1;
            }
            ord = lcm(ord, len);
        }
        ord
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// All permutations of degree `n` in lexicographic order.
///
/// Intended for the small degrees the brute-force oracles run at; the result
/// has `n!` entries.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut images = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(n: usize, images: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Permutation>) {
        if images.len() == n {
            out.push(Permutation {
                images: images.clone(),
            });
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                images.push(v);
                rec(n, images, used, out);
                images.pop();
                used[v] = false;
            }
        }
    }
    rec(n, &mut images, &mut used, &mut out);
    out
}
