use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use crate::arith::lcm;
use crate::error::{Error, Result};

/// A bijection on `{0, .., degree - 1}` stored as an image table.
///
/// Products act left to right: `a.compose(&b)` applies `a` first, then `b`,
/// so `a.compose(&b).apply(i) == b.apply(a.apply(i))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a bijection on 0..{n}"
                )));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation from 0-indexed disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                if x >= degree {
                    return Err(Error::InvalidPermutation(format!(
                        "point {} out of range for degree {degree}",
                        x + 1
                    )));
                }
                if touched[x] {
                    return Err(Error::InvalidPermutation(format!(
                        "point {} occurs twice in cycle notation",
                        x + 1
                    )));
                }
                touched[x] = true;
                images[x] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Permutation::from_images(images.clone()).is_ok());
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Apply `self`, then `other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(
            self.degree(),
            other.degree(),
            "composing permutations of different degree"
        );
        Permutation {
            images: self.images.iter().map(|&x| other.images[x]).collect(),
        }
    }

    pub fn try_compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                expected: self.degree(),
                found: other.degree(),
            });
        }
        Ok(self.compose(other))
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    pub fn pow(&self, exp: i64) -> Permutation {
        let mut base = if exp < 0 {
            self.inverse()
        } else {
            self.clone()
        };
        let mut e = exp.unsigned_abs();
        let mut acc = Permutation::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            e >>= 1;
        }
        acc
    }

    /// `g^-1 * self * g`: the image of `self` under relabelling points by `g`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        g.inverse().compose(self).compose(g)
    }

    /// `[a, b] = a^-1 b^-1 a b`.
    pub fn commutator(a: &Permutation, b: &Permutation) -> Permutation {
        a.inverse().compose(&b.inverse()).compose(a).compose(b)
    }

    pub fn commutes_with(&self, other: &Permutation) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &x)| other.images[x] == self.images[other.images[i]])
    }

    /// All cycles, including fixed points, each starting at its smallest point,
    /// ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_lengths(&self) -> Vec<usize> {
        self.cycles().iter().map(Vec::len).collect()
    }

    pub fn order(&self) -> u64 {
        self.cycle_lengths()
            .into_iter()
            .fold(1, |acc, l| lcm(acc, l as u64))
    }

    /// True iff all cycles (fixed points included) have equal length.
    /// The identity counts as semiregular.
    pub fn is_semiregular(&self) -> bool {
        let lengths = self.cycle_lengths();
        lengths.windows(2).all(|w| w[0] == w[1])
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.degree())
            .filter(|&i| self.images[i] == i)
            .collect()
    }

    pub fn moved_points(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.degree()).filter(move |&i| self.images[i] != i)
    }

    pub fn smallest_moved_point(&self) -> Option<usize> {
        self.moved_points().next()
    }

    /// Restriction to an invariant `domain`, relabelled by position in `domain`.
    pub fn restrict(&self, domain: &[usize]) -> Result<Permutation> {
        let mut index = vec![usize::MAX; self.degree()];
        for (i, &x) in domain.iter().enumerate() {
            index[x] = i;
        }
        let images = domain
            .iter()
            .map(|&x| match index[self.images[x]] {
                usize::MAX => Err(Error::NotInvariant),
                j => Ok(j),
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::from_images(images).map_err(|_| Error::NotInvariant)
    }

    /// Acts as `self` on `0..degree` and as `other` on `degree..degree+other.degree()`.
    pub fn direct_sum(&self, other: &Permutation) -> Permutation {
        let n = self.degree();
        let mut images = self.images.clone();
        images.extend(other.images.iter().map(|&x| x + n));
        Permutation { images }
    }

    /// Disjoint cycle notation, 1-indexed, fixed points omitted; `()` for the identity.
    pub fn to_cycle_string(&self) -> String {
        let mut s = String::new();
        for cycle in self.cycles().into_iter().filter(|c| c.len() > 1) {
            s.push('(');
            let parts: Vec<String> = cycle.iter().map(|x| (x + 1).to_string()).collect();
            s.push_str(&parts.join(","));
            s.push(')');
        }
        if s.is_empty() {
            s.push_str("()");
        }
        s
    }

    /// Parses 1-indexed disjoint cycle notation such as `(1,2,3)(4,5)` or `()`.
    pub fn parse_cycles(degree: usize, text: &str) -> Result<Permutation> {
        let cycles = parse_cycle_list(text)?;
        let zero_based: Vec<Vec<usize>> = cycles
            .into_iter()
            .map(|c| {
                c.into_iter()
                    .map(|x| {
                        if x == 0 {
                            Err(Error::Parse("cycle notation is 1-indexed; found 0".into()))
                        } else {
                            Ok(x - 1)
                        }
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        Permutation::from_cycles(degree, &zero_based)
    }

    /// Largest point mentioned in a cycle string (1-indexed), or 0 for `()`.
    pub fn max_point_in(text: &str) -> Result<usize> {
        Ok(parse_cycle_list(text)?
            .into_iter()
            .flatten()
            .max()
            .unwrap_or(0))
    }
}

fn parse_cycle_list(text: &str) -> Result<Vec<Vec<usize>>> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut cycles = Vec::new();
    let mut rest = compact.as_str();
    while !rest.is_empty() {
        let inner_end = rest
            .strip_prefix('(')
            .and_then(|r| r.find(')'))
            .ok_or_else(|| Error::Parse(format!("malformed cycle notation `{text}`")))?;
        let inner = &rest[1..=inner_end];
        rest = &rest[inner_end + 2..];
        if inner.is_empty() {
            continue;
        }
        let cycle = inner
            .split(',')
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad point `{t}` in `{text}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        cycles.push(cycle);
    }
    Ok(cycles)
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cycle_string())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.to_cycle_string(), self.degree())
    }
}

impl Mul<&Permutation> for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        self.compose(rhs)
    }
}

/// Parses `degree:cycles`, e.g. `4:(1,2)(3,4)`.
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (deg, cycles) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected `degree:cycles`, got `{s}`")))?;
        let degree = deg
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad degree `{deg}`")))?;
        Permutation::parse_cycles(degree, cycles)
    }
}
