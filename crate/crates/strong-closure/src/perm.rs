//! Permutations of the points `1..=degree`.
//!
//! Points are 1-indexed in the public API and in cycle notation; the image
//! table is stored 0-indexed internally. Permutations act on the right:
//! `p^(a·b) = (p^a)^b`, and conjugation is `a^g = g⁻¹·a·g`.

use std::fmt;

use crate::error::{Error, Result};

/// A bijection on the points `1..=degree`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    imgs: Vec<u32>, // imgs[i] = image of point i, both 0-indexed
}

impl Perm {
    /// The identity permutation on `degree` points.
    pub fn identity(degree: usize) -> Self {
        Perm {
            imgs: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from a 1-indexed image table: `images[i]` is the
    /// image of point `i+1`.
    pub fn from_images(images: &[u32]) -> Result<Self> {
        let degree = images.len();
        let mut imgs = Vec::with_capacity(degree);
        let mut seen = vec![false; degree];
        for &img in images {
            if img == 0 || img as usize > degree {
                return Err(Error::NotABijection {
                    degree,
                    reason: format!("image {img} out of range"),
                });
            }
            let z = img - 1;
            if seen[z as usize] {
                return Err(Error::NotABijection {
                    degree,
                    reason: format!("image {img} repeated"),
                });
            }
            seen[z as usize] = true;
            imgs.push(z);
        }
        Ok(Perm { imgs })
    }

    /// Builds a permutation of `degree` points from disjoint cycles of
    /// 1-indexed points. Cycles need not be disjoint; later cycles are applied
    /// after earlier ones (the product of the cycles, left to right).
    pub fn from_cycles(degree: usize, cycles: &[Vec<u32>]) -> Result<Self> {
        let mut result = Perm::identity(degree);
        for cycle in cycles {
            let mut imgs: Vec<u32> = (0..degree as u32).collect();
            for (k, &pt) in cycle.iter().enumerate() {
                if pt == 0 || pt as usize > degree {
                    return Err(Error::PointOutOfRange { point: pt, degree });
                }
                let next = cycle[(k + 1) % cycle.len()];
                if next == 0 || next as usize > degree {
                    return Err(Error::PointOutOfRange { point: next, degree });
                }
                imgs[(pt - 1) as usize] = next - 1;
            }
            let mut seen = vec![false; degree];
            for &i in &imgs {
                if seen[i as usize] {
                    return Err(Error::NotABijection {
                        degree,
                        reason: "cycle repeats a point".into(),
                    });
                }
                seen[i as usize] = true;
            }
            result = result.compose(&Perm { imgs });
        }
        Ok(result)
    }

    pub fn degree(&self) -> usize {
        self.imgs.len()
    }

    /// Image of the 1-indexed point `p` under this permutation.
    pub fn image_of(&self, p: u32) -> u32 {
        self.imgs[(p - 1) as usize] + 1
    }

    pub(crate) fn apply0(&self, p: u32) -> u32 {
        self.imgs[p as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.imgs.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `self · other`: apply `self` first, then `other`.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            imgs: self.imgs.iter().map(|&x| other.imgs[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut imgs = vec![0u32; self.imgs.len()];
        for (i, &x) in self.imgs.iter().enumerate() {
            imgs[x as usize] = i as u32;
        }
        Perm { imgs }
    }

    /// Conjugate `self^g = g⁻¹·self·g`.
    pub fn conjugate(&self, g: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), g.degree());
        let mut imgs = vec![0u32; self.imgs.len()];
        for (i, &gi) in g.imgs.iter().enumerate() {
            imgs[gi as usize] = g.imgs[self.imgs[i] as usize];
        }
        Perm { imgs }
    }

    /// Commutator `[self, other] = self⁻¹·other⁻¹·self·other`.
    pub fn commutator(&self, other: &Perm) -> Perm {
        self.inverse()
            .compose(&other.inverse())
            .compose(self)
            .compose(other)
    }

    /// Multiplicative order (lcm of the cycle lengths).
    pub fn order(&self) -> u64 {
        let mut seen = vec![false; self.imgs.len()];
        let mut ord: u64 = 1;
        for start in 0..self.imgs.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut p = start as u32;
            while !seen[p as usize] {
                seen[p as usize] = true;
                p = self.imgs[p as usize];
                len += 1;
            }
            ord = lcm(ord, len);
        }
        ord
    }

    /// Smallest moved point (1-indexed), if any.
    pub fn smallest_moved(&self) -> Option<u32> {
        self.imgs
            .iter()
            .enumerate()
            .find(|&(i, &x)| i as u32 != x)
            .map(|(i, _)| i as u32 + 1)
    }

    /// Disjoint cycle decomposition, 1-indexed, fixed points omitted,
    /// each cycle rotated to start at its smallest point, cycles sorted.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.imgs.len()];
        let mut out = Vec::new();
        for start in 0..self.imgs.len() {
            if seen[start] || self.imgs[start] == start as u32 {
                seen[start] = true;
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start as u32;
            while !seen[p as usize] {
                seen[p as usize] = true;
                cycle.push(p + 1);
                p = self.imgs[p as usize];
            }
            out.push(cycle);
        }
        out
    }

    /// Parses cycle notation like `(1 2 3)(4 5)`. The empty product `()` is
    /// the identity. Points must lie in `1..=degree`.
    pub fn parse(degree: usize, s: &str) -> Result<Self> {
        let mut cycles: Vec<Vec<u32>> = Vec::new();
        let mut current: Option<Vec<u32>> = None;
        let mut num: Option<u32> = None;
        let flush_num = |num: &mut Option<u32>, cur: &mut Option<Vec<u32>>| -> Result<()> {
            if let Some(n) = num.take() {
                match cur {
                    Some(c) => c.push(n),
                    None => {
                        return Err(Error::Construction(format!(
                            "point {n} outside any cycle in {s:?}"
                        )))
                    }
                }
            }
            Ok(())
        };
        for ch in s.chars() {
            match ch {
                '(' => {
                    if current.is_some() {
                        return Err(Error::Construction(format!("nested '(' in {s:?}")));
                    }
                    current = Some(Vec::new());
                }
                ')' => {
                    flush_num(&mut num, &mut current)?;
                    match current.take() {
                        Some(c) => {
                            if !c.is_empty() {
                                cycles.push(c);
                            }
                        }
                        None => return Err(Error::Construction(format!("unmatched ')' in {s:?}"))),
                    }
                }
                '0'..='9' => {
                    let d = ch as u32 - '0' as u32;
                    num = Some(num.unwrap_or(0) * 10 + d);
                }
                ' ' | ',' | '\t' => flush_num(&mut num, &mut current)?,
                _ => {
                    return Err(Error::Construction(format!(
                        "unexpected character {ch:?} in {s:?}"
                    )))
                }
            }
        }
        if current.is_some() {
            return Err(Error::Construction(format!("unbalanced cycle in {s:?}")));
        }
        flush_num(&mut num, &mut None).ok();
        if num.is_some() {
            return Err(Error::Construction(format!(
                "trailing point outside cycle in {s:?}"
            )));
        }
        Perm::from_cycles(degree, &cycles)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (i, p) in cycle.iter().enumerate() {
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

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm[{self}]")
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(degree: usize, s: &str) -> Perm {
        Perm::parse(degree, s).unwrap()
    }

    #[test]
    fn compose_applies_left_then_right() {
        let a = p(3, "(1 2)");
        let b = p(3, "(2 3)");
        // 1 -a-> 2 -b-> 3
        assert_eq!(a.compose(&b).image_of(1), 3);
    }

    #[test]
    fn conjugate_matches_definition() {
        let a = p(3, "(1 2)");
        let g = p(3, "(1 3)");
        let via_def = g.inverse().compose(&a).compose(&g);
        assert_eq!(a.conjugate(&g), via_def);
        // relabelling: (1 2) conjugated by (1 3) is (2 3)
        assert_eq!(a.conjugate(&g), p(3, "(2 3)"));
    }

    #[test]
    fn conjugate_by_identity_is_noop() {
        let a = p(4, "(1 2 3)");
        assert_eq!(a.conjugate(&Perm::identity(4)), a);
    }

    #[test]
    fn inverse_reverses_cycles() {
        assert_eq!(p(3, "(1 2 3)").inverse(), p(3, "(1 3 2)"));
        let a = p(5, "(1 4 2)(3 5)");
        assert!(a.compose(&a.inverse()).is_identity());
    }

    #[test]
    fn order_is_lcm_of_cycle_lengths() {
        assert_eq!(p(5, "(1 2 3)(4 5)").order(), 6);
        assert_eq!(Perm::identity(4).order(), 1);
    }

    #[test]
    fn display_round_trips() {
        let a = p(6, "(1 3 5)(2 6)");
        assert_eq!(Perm::parse(6, &a.to_string()).unwrap(), a);
        assert_eq!(Perm::identity(3).to_string(), "()");
    }

    #[test]
    fn rejects_bad_images() {
        assert!(Perm::from_images(&[1, 1, 3]).is_err());
        assert!(Perm::from_images(&[0, 2, 3]).is_err());
        assert!(Perm::parse(3, "(1 4)").is_err());
        assert!(Perm::parse(3, "(1 2").is_err());
    }
}
