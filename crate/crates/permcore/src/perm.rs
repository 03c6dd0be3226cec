use crate::error::{GroupError, Result};

/// A permutation of the points `0..n`, stored as its full image array.
///
/// Points act on the right: `apply` sends `x` to `images[x]`, and `mul(p, q)`
/// is "first `p`, then `q`".
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<u32>,
}

impl std::fmt::Debug for Permutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let cycles = self.cycles();
        let moved: Vec<_> = cycles.iter().filter(|c| c.len() > 1).collect();
        if moved.is_empty() {
            return write!(f, "()");
        }
        for c in moved {
            write!(f, "(")?;
            for (i, p) in c.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from an image array, rejecting non-bijections.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let degree = images.len();
        let mut seen = vec![false; degree];
        for &y in &images {
            if (y as usize) >= degree {
                return Err(GroupError::PointOutOfRange { point: y, degree });
            }
            if seen[y as usize] {
                return Err(GroupError::NotBijection { degree });
            }
            seen[y as usize] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation of the given degree from disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<u32>]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        for cycle in cycles {
            for w in 0..cycle.len() {
                let a = cycle[w];
                let b = cycle[(w + 1) % cycle.len()];
                if (a as usize) >= degree {
                    return Err(GroupError::PointOutOfRange { point: a, degree });
                }
                images[a as usize] = b;
            }
        }
        Self::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: u32) -> u32 {
        self.images[x as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &y)| i as u32 == y)
    }

    /// First point moved by this permutation, if any.
    pub fn first_moved(&self) -> Option<u32> {
        self.images
            .iter()
            .enumerate()
            .find(|(i, &y)| *i as u32 != y)
            .map(|(i, _)| i as u32)
    }

    /// Group multiplication: apply `self`, then `other`. Panics on degree
    /// mismatch; the checked public form is [`Permutation::compose`].
    pub fn mul(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch in mul");
        let images = self
            .images
            .iter()
            .map(|&y| other.images[y as usize])
            .collect();
        Permutation { images }
    }

    /// Composition with an explicit degree check: the result maps `x` to
    /// `q(p(x))`.
    pub fn compose(p: &Permutation, q: &Permutation) -> Result<Permutation> {
        if p.degree() != q.degree() {
            return Err(GroupError::DegreeMismatch(p.degree(), q.degree()));
        }
        Ok(p.mul(q))
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.degree()];
        for (i, &y) in self.images.iter().enumerate() {
            images[y as usize] = i as u32;
        }
        Permutation { images }
    }

    /// Conjugate `g^h = h^-1 g h`.
    pub fn conjugate_by(&self, h: &Permutation) -> Permutation {
        h.inverse().mul(self).mul(h)
    }

    pub fn commutator(a: &Permutation, b: &Permutation) -> Permutation {
        a.inverse().mul(&b.inverse()).mul(a).mul(b)
    }

    pub fn pow(&self, mut e: u64) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Cycle decomposition including fixed points as 1-cycles.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n as u32 {
            if seen[start as usize] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start as usize] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x as usize] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    /// Number of cycles on the full point set (fixed points count).
    pub fn cycle_count(&self) -> usize {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut count = 0;
        for start in 0..n as u32 {
            if seen[start as usize] {
                continue;
            }
            count += 1;
            let mut x = start;
            loop {
                seen[x as usize] = true;
                x = self.apply(x);
                if x == start {
                    break;
                }
            }
        }
        count
    }

    pub fn fixed_point_count(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|(i, &y)| *i as u32 == y)
            .count()
    }

    /// Exact element order as the lcm of cycle lengths.
    pub fn order(&self) -> u128 {
        let mut ord: u128 = 1;
        for c in self.cycles() {
            ord = lcm_u128(ord, c.len() as u128);
        }
        ord
    }

    /// Image of a point subset encoded as a bitmask. Degree must be at most 64.
    pub fn apply_mask(&self, mask: u64) -> u64 {
        debug_assert!(self.degree() <= 64);
        let mut out = 0u64;
        let mut m = mask;
        while m != 0 {
            let x = m.trailing_zeros();
            out |= 1u64 << self.apply(x);
            m &= m - 1;
        }
        out
    }
}

pub(crate) fn gcd_u128(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd_u128(b, a % b)
    }
}

pub(crate) fn lcm_u128(a: u128, b: u128) -> u128 {
    a / gcd_u128(a, b) * b
}
