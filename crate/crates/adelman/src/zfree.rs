//! The additive category of finitely generated free abelian groups.
//!
//! Objects are the groups `Z^k`, morphisms are integer matrices acting on
//! row vectors, equality of morphisms is matrix equality, and the homotopy
//! solver is the exact integer solver from [`crate::linalg`].

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::category::{AdditiveCategory, DirectSum, OpCategory};
use crate::error::{Error, Result};
use crate::linalg;
use crate::matrix::ZMatrix;

/// The free abelian group `Z^rank`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct FreeObject {
    pub rank: usize,
}

impl FreeObject {
    pub fn new(rank: usize) -> Self {
        FreeObject { rank }
    }
}

/// A morphism `Z^m -> Z^n`: an `m x n` integer matrix under the row
/// convention, so source and target are recoverable from its shape.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FreeMorphism {
    mat: ZMatrix,
}

impl FreeMorphism {
    pub fn new(mat: ZMatrix) -> Self {
        FreeMorphism { mat }
    }

    pub fn identity(rank: usize) -> Self {
        FreeMorphism::new(ZMatrix::identity(rank))
    }

    pub fn zero(dom: usize, cod: usize) -> Self {
        FreeMorphism::new(ZMatrix::zero(dom, cod))
    }

    pub fn mat(&self) -> &ZMatrix {
        &self.mat
    }

    pub fn dom(&self) -> FreeObject {
        FreeObject::new(self.mat.rows())
    }

    pub fn cod(&self) -> FreeObject {
        FreeObject::new(self.mat.cols())
    }

    /// Checked composition "`self` then `g`".
    pub fn compose(&self, g: &FreeMorphism) -> Result<FreeMorphism> {
        if self.cod() != g.dom() {
            return Err(Error::Mismatch(format!(
                "compose: codomain Z^{} differs from domain Z^{}",
                self.cod().rank,
                g.dom().rank
            )));
        }
        Ok(FreeMorphism::new(self.mat.mul(&g.mat)))
    }
}

/// The category capability of finitely generated free abelian groups.
#[derive(Clone, Copy, Default, Debug, PartialEq, Eq)]
pub struct ZFree;

impl AdditiveCategory for ZFree {
    type Object = FreeObject;
    type Morphism = FreeMorphism;

    fn dom(&self, f: &FreeMorphism) -> FreeObject {
        f.dom()
    }

    fn cod(&self, f: &FreeMorphism) -> FreeObject {
        f.cod()
    }

    fn identity(&self, x: &FreeObject) -> FreeMorphism {
        FreeMorphism::identity(x.rank)
    }

    fn zero_object(&self) -> FreeObject {
        FreeObject::new(0)
    }

    fn is_zero_object(&self, x: &FreeObject) -> bool {
        x.rank == 0
    }

    fn zero_morphism(&self, dom: &FreeObject, cod: &FreeObject) -> FreeMorphism {
        FreeMorphism::zero(dom.rank, cod.rank)
    }

    fn compose(&self, f: &FreeMorphism, g: &FreeMorphism) -> FreeMorphism {
        assert_eq!(f.cod(), g.dom(), "compose: object mismatch");
        FreeMorphism::new(f.mat.mul(&g.mat))
    }

    fn add(&self, f: &FreeMorphism, g: &FreeMorphism) -> FreeMorphism {
        assert_eq!((f.dom(), f.cod()), (g.dom(), g.cod()), "add: object mismatch");
        FreeMorphism::new(f.mat.add(&g.mat))
    }

    fn negate(&self, f: &FreeMorphism) -> FreeMorphism {
        FreeMorphism::new(f.mat.neg())
    }

    fn direct_sum(&self, parts: &[FreeObject]) -> DirectSum<Self> {
        let total: usize = parts.iter().map(|p| p.rank).sum();
        let mut injections = Vec::with_capacity(parts.len());
        let mut projections = Vec::with_capacity(parts.len());
        let mut offset = 0;
        for part in parts {
            let mut inj = ZMatrix::zero(part.rank, total);
            let mut proj = ZMatrix::zero(total, part.rank);
            for i in 0..part.rank {
                inj.set(i, offset + i, 1.into());
                proj.set(offset + i, i, 1.into());
            }
            injections.push(FreeMorphism::new(inj));
            projections.push(FreeMorphism::new(proj));
            offset += part.rank;
        }
        DirectSum {
            object: FreeObject::new(total),
            injections,
            projections,
        }
    }

    fn morphisms_equal(&self, f: &FreeMorphism, g: &FreeMorphism) -> bool {
        f.mat == g.mat
    }

    fn solve_homotopy(
        &self,
        a1: &FreeMorphism,
        b0: &FreeMorphism,
        c: &FreeMorphism,
    ) -> Option<(FreeMorphism, FreeMorphism)> {
        let (s, t) = linalg::solve_homotopy(&a1.mat, &b0.mat, &c.mat)
            .expect("homotopy shapes agree")?;
        Some((FreeMorphism::new(s), FreeMorphism::new(t)))
    }
}

impl OpCategory for ZFree {
    fn op(&self, f: &FreeMorphism) -> FreeMorphism {
        FreeMorphism::new(f.mat.transpose())
    }
}

// JSON form: {"dom": m, "cod": n, "mat": [[..]]}: the explicit ranks
// disambiguate empty matrices and guard against shape mismatches.

#[derive(Serialize, Deserialize)]
struct FreeMorphismRepr {
    dom: usize,
    cod: usize,
    mat: ZMatrix,
}

impl Serialize for FreeMorphism {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        FreeMorphismRepr {
            dom: self.dom().rank,
            cod: self.cod().rank,
            mat: self.mat.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FreeMorphism {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = FreeMorphismRepr::deserialize(deserializer)?;
        if repr.mat.rows() != repr.dom || repr.mat.cols() != repr.cod {
            return Err(D::Error::custom(format!(
                "matrix is {} x {} but dom/cod claim {} x {}",
                repr.mat.rows(),
                repr.mat.cols(),
                repr.dom,
                repr.cod
            )));
        }
        Ok(FreeMorphism::new(repr.mat))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zmat;

    #[test]
    fn composition_multiplies_matrices() {
        let f = FreeMorphism::new(zmat![[2]]);
        let g = FreeMorphism::new(zmat![[3]]);
        assert_eq!(f.compose(&g).unwrap().mat(), &zmat![[6]]);
    }

    #[test]
    fn composition_into_a_direct_summand() {
        // Z -> Z^2 followed by diag-ish (4,0;0,1)
        let f = FreeMorphism::new(zmat![[1, 0]]);
        let g = FreeMorphism::new(zmat![[4, 0], [0, 1]]);
        assert_eq!(f.compose(&g).unwrap().mat(), &zmat![[4, 0]]);
    }

    #[test]
    fn identity_is_neutral() {
        let f = FreeMorphism::new(zmat![[1, 2], [0, 5], [7, -1]]);
        assert_eq!(f.compose(&FreeMorphism::identity(2)).unwrap(), f);
        assert_eq!(FreeMorphism::identity(3).compose(&f).unwrap(), f);
    }

    #[test]
    fn composition_rejects_mismatch() {
        let f = FreeMorphism::new(zmat![[1, 0]]);
        assert!(f.compose(&f).is_err());
    }

    #[test]
    fn direct_sum_block_layout() {
        let cat = ZFree;
        let sum = cat.direct_sum(&[FreeObject::new(1), FreeObject::new(2)]);
        assert_eq!(sum.object, FreeObject::new(3));
        assert_eq!(sum.injections[0].mat(), &zmat![[1, 0, 0]]);
        assert_eq!(sum.injections[1].mat(), &zmat![[0, 1, 0], [0, 0, 1]]);
        // i_k p_k = 1, i_k p_l = 0, sum of p_m i_m = 1
        for k in 0..2 {
            for l in 0..2 {
                let comp = cat.compose(&sum.injections[k], &sum.projections[l]);
                if k == l {
                    assert!(comp.mat().is_identity());
                } else {
                    assert!(comp.mat().is_zero());
                }
            }
        }
        let total: ZMatrix = (0..2)
            .map(|m| cat.compose(&sum.projections[m], &sum.injections[m]))
            .fold(ZMatrix::zero(3, 3), |acc, f| acc.add(f.mat()));
        assert!(total.is_identity());
    }

    #[test]
    fn empty_direct_sum_is_the_zero_object() {
        let cat = ZFree;
        let sum = cat.direct_sum(&[]);
        assert_eq!(sum.object, cat.zero_object());
        assert!(sum.injections.is_empty());
    }

    #[test]
    fn capability_equality_and_zero() {
        let cat = ZFree;
        assert!(cat.morphisms_equal(
            &FreeMorphism::new(zmat![[2]]),
            &FreeMorphism::new(zmat![[2]])
        ));
        let z = cat.zero_morphism(&FreeObject::new(2), &FreeObject::new(1));
        assert_eq!((z.mat().rows(), z.mat().cols()), (2, 1));
        assert!(z.mat().is_zero());
    }

    #[test]
    fn homotopy_solver_delegates() {
        // no t with 2t = 1, so the solver reports none
        let cat = ZFree;
        let a1 = FreeMorphism::new(zmat![[2]]);
        let b0 = FreeMorphism::zero(0, 1);
        let c = FreeMorphism::new(zmat![[1]]);
        assert!(cat.solve_homotopy(&a1, &b0, &c).is_none());
    }

    #[test]
    fn inverse_detects_unimodularity() {
        let cat = ZFree;
        let f = FreeMorphism::new(zmat![[1, 1], [0, 1]]);
        let inv = cat.inverse(&f).unwrap();
        assert!(cat.compose(&f, &inv).mat().is_identity());
        assert!(cat.compose(&inv, &f).mat().is_identity());
        assert!(cat.inverse(&FreeMorphism::new(zmat![[2]])).is_none());
        // non-square with one-sided inverse only
        assert!(cat.inverse(&FreeMorphism::new(zmat![[1], [0]])).is_none());
    }

    #[test]
    fn morphism_json_round_trip() {
        let f = FreeMorphism::new(zmat![[1, 2], [3, 4]]);
        let text = serde_json::to_string(&f).unwrap();
        let back: FreeMorphism = serde_json::from_str(&text).unwrap();
        assert_eq!(back, f);

        let g = FreeMorphism::zero(0, 2);
        let text = serde_json::to_string(&g).unwrap();
        let back: FreeMorphism = serde_json::from_str(&text).unwrap();
        assert_eq!(back, g);
    }
}
