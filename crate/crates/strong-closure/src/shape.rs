//! Isomorphism-shape recognition for the handful of shapes the theorem
//! hypotheses care about. Order statistics narrow the candidates, then the
//! defining relations are verified; anything ambiguous falls through to
//! `Other` rather than guessing.

use std::fmt;

use crate::arith::factorize;
use crate::error::Result;
use crate::group::Group;
use crate::perm::Perm;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Shape {
    Cyclic,
    ElementaryAbelian,
    Abelian,
    Dihedral,
    GeneralizedQuaternion,
    Other,
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Shape::Cyclic => "cyclic",
            Shape::ElementaryAbelian => "elementary_abelian",
            Shape::Abelian => "abelian",
            Shape::Dihedral => "dihedral",
            Shape::GeneralizedQuaternion => "generalized_quaternion",
            Shape::Other => "other",
        };
        write!(f, "{s}")
    }
}

pub fn is_abelian(g: &Group) -> bool {
    let gens = g.generators();
    gens.iter()
        .enumerate()
        .all(|(i, a)| gens[i + 1..].iter().all(|b| a.compose(b) == b.compose(a)))
}

/// Classifies H among {cyclic, elementary abelian, abelian, dihedral,
/// generalized quaternion, other}. The first matching shape in that order
/// wins, so C₂ is cyclic and the Klein four-group is elementary abelian.
pub fn shape(h: &Group) -> Result<Shape> {
    let order = h.order();
    if order == 1 {
        return Ok(Shape::Cyclic);
    }
    let elems = h.elements()?;
    let max_order = elems.iter().map(|x| x.order()).max().unwrap_or(1);
    if max_order == order {
        return Ok(Shape::Cyclic);
    }
    if is_abelian(h) {
        let factors = factorize(order);
        if factors.len() == 1 {
            let p = factors[0].0;
            if elems.iter().all(|x| x.is_identity() || x.order() == p) {
                return Ok(Shape::ElementaryAbelian);
            }
        }
        return Ok(Shape::Abelian);
    }

    // Both remaining shapes need a cyclic subgroup of index 2.
    if order % 2 != 0 || max_order * 2 != order {
        return Ok(Shape::Other);
    }
    let rotation = elems
        .iter()
        .find(|x| x.order() == max_order)
        .expect("max order is attained");
    let cyclic: Vec<Perm> = {
        let mut c: Vec<Perm> = (0..max_order)
            .scan(Perm::identity(h.degree()), |acc, _| {
                let cur = acc.clone();
                *acc = acc.compose(rotation);
                Some(cur)
            })
            .collect();
        c.sort_unstable();
        c
    };
    let outside = elems
        .iter()
        .find(|x| cyclic.binary_search(x).is_err())
        .expect("index 2");
    // every element of the non-trivial coset inverts the rotation, or neither does
    if rotation.conjugate(outside) != rotation.inverse() {
        return Ok(Shape::Other);
    }
    let sq = outside.compose(outside);
    if sq.is_identity() {
        return Ok(Shape::Dihedral);
    }
    // generalized quaternion: a 2-group, s² the unique involution of ⟨r⟩
    let factors = factorize(order);
    if factors.len() == 1 && factors[0].0 == 2 {
        let half_twist = {
            let mut t = Perm::identity(h.degree());
            for _ in 0..max_order / 2 {
                t = t.compose(rotation);
            }
            t
        };
        let unique_involution = elems.iter().filter(|x| x.order() == 2).count() == 1;
        if sq == half_twist && unique_involution {
            return Ok(Shape::GeneralizedQuaternion);
        }
    }
    Ok(Shape::Other)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(degree: usize, s: &str) -> Perm {
        Perm::parse(degree, s).unwrap()
    }

    #[test]
    fn cyclic_shapes() {
        let c8 = Group::from_generators(8, vec![p(8, "(1 2 3 4 5 6 7 8)")]).unwrap();
        assert_eq!(shape(&c8).unwrap(), Shape::Cyclic);
        assert_eq!(shape(&Group::trivial(1)).unwrap(), Shape::Cyclic);
    }

    #[test]
    fn klein_four_is_elementary_abelian() {
        let v4 = Group::from_generators(4, vec![p(4, "(1 2)(3 4)"), p(4, "(1 3)(2 4)")]).unwrap();
        assert_eq!(shape(&v4).unwrap(), Shape::ElementaryAbelian);
    }

    #[test]
    fn c4_x_c2_is_plain_abelian() {
        let g = Group::from_generators(6, vec![p(6, "(1 2 3 4)"), p(6, "(5 6)")]).unwrap();
        assert_eq!(shape(&g).unwrap(), Shape::Abelian);
    }

    #[test]
    fn sylow_2_of_s4_is_dihedral() {
        let d8 = Group::from_generators(4, vec![p(4, "(1 2 3 4)"), p(4, "(1 3)")]).unwrap();
        assert_eq!(shape(&d8).unwrap(), Shape::Dihedral);
    }

    #[test]
    fn quaternion_group_is_recognized() {
        let q8 = Group::from_generators(
            8,
            vec![p(8, "(1 2 3 4)(5 8 7 6)"), p(8, "(1 5 3 7)(2 6 4 8)")],
        )
        .unwrap();
        assert_eq!(shape(&q8).unwrap(), Shape::GeneralizedQuaternion);
    }

    #[test]
    fn s3_and_a4_fall_through() {
        let s3 = Group::from_generators(3, vec![p(3, "(1 2 3)"), p(3, "(1 2)")]).unwrap();
        // S3 = D6 is dihedral
        assert_eq!(shape(&s3).unwrap(), Shape::Dihedral);
        let a4 = Group::from_generators(4, vec![p(4, "(1 2 3)"), p(4, "(2 3 4)")]).unwrap();
        assert_eq!(shape(&a4).unwrap(), Shape::Other);
    }

    #[test]
    fn dicyclic_12_is_not_generalized_quaternion() {
        // regular representation of ⟨a, b | a⁶ = 1, b² = a³, aᵇ = a⁻¹⟩:
        // unique involution and cyclic index 2, but not a 2-group
        let gens = vec![
            p(12, "(1 2 3 4 5 6)(7 12 11 10 9 8)"),
            p(12, "(1 7 4 10)(2 8 5 11)(3 9 6 12)"),
        ];
        let g = Group::from_generators(12, gens).unwrap();
        assert_eq!(g.order(), 12);
        let involutions = g.elements().unwrap().iter().filter(|x| x.order() == 2).count();
        assert_eq!(involutions, 1);
        assert_eq!(shape(&g).unwrap(), Shape::Other);
    }
}
