//! The homology functor `H : Adel(B) -> B` for an abelian base `B`, and
//! the lift `F^ = H ∘ Adel(F)` of an additive functor `F : A -> B`.
//!
//! For an object `A0 -> A1 -> A2` the functor chooses a kernel of `a1`, a
//! cokernel of `a0` and an image of their composite; the value on objects
//! is that image, the value on morphisms is the induced map between
//! images.  When a boundary object is zero the chosen kernel or cokernel
//! is the identity of `A1`, which makes `H ∘ I` the identity on the nose.

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::Mutex;

use crate::adel::{map_morphism, map_object, map_transformation, Adel, AdelMorphism, AdelObject};
use crate::category::{AbelianCategory, AdditiveCategory, Functor, Transformation};

/// The chosen kernel/cokernel/image data of one object.
pub struct HomologyData<B: AbelianCategory> {
    /// `k_A : K_A -> A1`, a kernel of `a1`.
    pub kernel: B::Morphism,
    /// `c_A : A1 -> C_A`, a cokernel of `a0`.
    pub cokernel: B::Morphism,
    /// `p_A : K_A ->> Im_A`, the epi part of an image of `k_A * c_A`.
    pub image_epi: B::Morphism,
    /// `i_A : Im_A -> C_A`, the mono part.
    pub image_mono: B::Morphism,
}

impl<B: AbelianCategory> Clone for HomologyData<B> {
    fn clone(&self) -> Self {
        HomologyData {
            kernel: self.kernel.clone(),
            cokernel: self.cokernel.clone(),
            image_epi: self.image_epi.clone(),
            image_mono: self.image_mono.clone(),
        }
    }
}

/// The homology functor of an abelian category, with its choices cached
/// per object so repeated calls see the same kernel/cokernel/image.
pub struct HomologyFunctor<B: AbelianCategory>
where
    B::Morphism: Hash,
{
    base: B,
    adel: Adel<B>,
    cache: Mutex<HashMap<AdelObject<B>, HomologyData<B>>>,
}

impl<B: AbelianCategory> HomologyFunctor<B>
where
    B::Morphism: Hash,
{
    pub fn new(base: B) -> Self {
        HomologyFunctor {
            adel: Adel::new(base.clone()),
            base,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn base(&self) -> &B {
        &self.base
    }

    fn is_identity(&self, m: &B::Morphism) -> bool {
        let d = self.base.dom(m);
        d == self.base.cod(m) && *m == self.base.identity(&d)
    }

    /// The chosen data of `a`, computed once per object.
    ///
    /// When `A2` is a zero object the kernel is `1_{A1}`; when `A0` is,
    /// the cokernel is `1_{A1}`; when both are, the image is the pair of
    /// identities on `A1`.
    pub fn data(&self, a: &AdelObject<B>) -> HomologyData<B> {
        if let Some(hit) = self.cache.lock().unwrap().get(a) {
            return hit.clone();
        }
        let [a0_obj, a1_obj, a2_obj] = self.adel.slots(a);
        let a0_zero = self.base.is_zero_object(&a0_obj);
        let a2_zero = self.base.is_zero_object(&a2_obj);
        let kernel = if a2_zero {
            self.base.identity(&a1_obj)
        } else {
            self.base.kernel(a.x1())
        };
        let cokernel = if a0_zero {
            self.base.identity(&a1_obj)
        } else {
            self.base.cokernel(a.x0())
        };
        let (image_epi, image_mono) = if a0_zero && a2_zero {
            (self.base.identity(&a1_obj), self.base.identity(&a1_obj))
        } else {
            self.base.image(&self.base.compose(&kernel, &cokernel))
        };
        let data = HomologyData {
            kernel,
            cokernel,
            image_epi,
            image_mono,
        };
        self.cache
            .lock()
            .unwrap()
            .entry(a.clone())
            .or_insert(data.clone());
        data
    }

    /// `H(A) = Im_A`.
    pub fn object(&self, a: &AdelObject<B>) -> B::Object {
        self.base.cod(&self.data(a).image_epi)
    }

    /// The induced map between the kernels: `f_K * k_B = k_A * f1`.
    fn kernel_map(
        &self,
        da: &HomologyData<B>,
        db: &HomologyData<B>,
        f: &AdelMorphism<B>,
    ) -> B::Morphism {
        let target = self.base.compose(&da.kernel, f.f1());
        if self.is_identity(&db.kernel) {
            return target;
        }
        self.base
            .lift_along_mono(&db.kernel, &target)
            .expect("induced kernel map exists")
    }

    /// The induced map between the cokernels: `c_A * f_C = f1 * c_B`.
    fn cokernel_map(
        &self,
        da: &HomologyData<B>,
        db: &HomologyData<B>,
        f: &AdelMorphism<B>,
    ) -> B::Morphism {
        let target = self.base.compose(f.f1(), &db.cokernel);
        if self.is_identity(&da.cokernel) {
            return target;
        }
        self.base
            .lift_along_epi(&da.cokernel, &target)
            .expect("induced cokernel map exists")
    }

    /// `H([f]) : Im_A -> Im_B`, the induced map between the images.
    /// It does not depend on the representative of `[f]`.
    pub fn morphism(&self, f: &AdelMorphism<B>) -> B::Morphism {
        let da = self.data(f.source());
        let db = self.data(f.target());
        let f_k = self.kernel_map(&da, &db, f);
        let through = self.base.compose(&f_k, &db.image_epi);
        let induced = if self.is_identity(&da.image_epi) {
            through
        } else {
            self.base
                .lift_along_epi(&da.image_epi, &through)
                .expect("induced image map exists")
        };
        debug_assert!({
            let f_c = self.cokernel_map(&da, &db, f);
            self.base.morphisms_equal(
                &self.base.compose(&induced, &db.image_mono),
                &self.base.compose(&da.image_mono, &f_c),
            )
        });
        induced
    }

    /// `F^ = H ∘ Adel(F)` on objects.
    pub fn hat_object<S: AdditiveCategory>(
        &self,
        f: &Functor<S, B>,
        x: &AdelObject<S>,
    ) -> B::Object {
        self.object(&map_object(f, x))
    }

    /// `F^ = H ∘ Adel(F)` on morphisms.
    pub fn hat_morphism<S: AdditiveCategory>(
        &self,
        f: &Functor<S, B>,
        m: &AdelMorphism<S>,
    ) -> B::Morphism {
        self.morphism(&map_morphism(f, m))
    }

    /// The lifted transformation: `alpha^_X = H(Adel(alpha)_X)`, the
    /// unique transformation `F^ => G^` restricting to `alpha` along the
    /// inclusion.
    pub fn hat_transformation<S: AdditiveCategory>(
        &self,
        s_cat: &S,
        alpha: &Transformation<S, B>,
        x: &AdelObject<S>,
    ) -> B::Morphism {
        self.morphism(&map_transformation(s_cat, alpha, x))
    }
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;

    use super::*;
    use crate::zfree::{FreeMorphism, FreeObject, ZFree};
    use crate::zmat;
    use crate::zmod::{
        embed_morphism, embedding, free_resolution_object, invariant_factors, PresentedGroup,
        Zmod,
    };

    fn homology() -> HomologyFunctor<Zmod> {
        HomologyFunctor::new(Zmod)
    }

    fn adel_free() -> Adel<ZFree> {
        Adel::new(ZFree)
    }

    /// The worked object A = (Z^2 --(4 0;0 1)--> Z^2 --(1;2)--> Z).
    fn sample_object() -> AdelObject<ZFree> {
        adel_free()
            .object(
                FreeMorphism::new(zmat![[4, 0], [0, 1]]),
                FreeMorphism::new(zmat![[1], [2]]),
            )
            .unwrap()
    }

    #[test]
    fn data_of_the_worked_example() {
        let h = homology();
        let e = embedding();
        let a = map_object(&e, &sample_object());
        let data = h.data(&a);
        // kernel of (1; 2) is included by (2 -1)
        assert_eq!(data.kernel.mat(), &zmat![[2, -1]]);
        // cokernel of (4 0; 0 1) is the identity onto a Z/4 presentation
        assert!(data.cokernel.mat().is_identity());
        assert_eq!(
            invariant_factors(&Zmod.cod(&data.cokernel)).torsion,
            vec![BigInt::from(4)]
        );
        // the image is Z/2
        let inv = invariant_factors(&h.object(&a));
        assert_eq!(inv.free_rank, 0);
        assert_eq!(inv.torsion, vec![BigInt::from(2)]);
    }

    #[test]
    fn hat_values_of_the_worked_example() {
        let h = homology();
        let e = embedding();
        // E^(A) = Z/2 for the sample object
        let inv = invariant_factors(&h.hat_object(&e, &sample_object()));
        assert_eq!((inv.free_rank, inv.torsion.clone()), (0, vec![2.into()]));
        // E^(B) = Z/2 for B = (Z -2-> Z -> 0)
        let b = adel_free()
            .object(FreeMorphism::new(zmat![[2]]), FreeMorphism::zero(1, 0))
            .unwrap();
        let inv = invariant_factors(&h.hat_object(&e, &b));
        assert_eq!((inv.free_rank, inv.torsion.clone()), (0, vec![2.into()]));
    }

    #[test]
    fn inclusion_shaped_objects_return_their_middle() {
        let h = homology();
        let adel = Adel::new(Zmod);
        let g = PresentedGroup::new(zmat![[4, 0], [0, 1]]);
        let obj = adel.include(&g);
        // exactly the same presentation, not just an isomorphic one
        assert_eq!(h.object(&obj), g);
        let m = crate::zmod::GroupMorphism::new(g.clone(), g.clone(), zmat![[1, 0], [0, 3]])
            .unwrap();
        let lifted = adel.include_morphism(&m);
        assert_eq!(h.morphism(&lifted), m);
    }

    #[test]
    fn identity_maps_to_identity() {
        let h = homology();
        let e = embedding();
        let a = map_object(&e, &sample_object());
        let id = Adel::new(Zmod).identity(&a);
        let value = h.morphism(&id);
        assert!(Zmod.morphisms_equal(&value, &Zmod.identity(&h.object(&a))));
    }

    #[test]
    fn nonzero_morphism_with_zero_homology() {
        // E^([0,1,0]) = 0 although [0,1,0] is not zero in Adel(Z-free)
        let a = adel_free();
        let h = homology();
        let e = embedding();
        let src = a
            .object(FreeMorphism::zero(0, 1), FreeMorphism::new(zmat![[2]]))
            .unwrap();
        let tgt = a.include(&FreeObject::new(1));
        let f = a
            .morphism(
                src.clone(),
                tgt,
                FreeMorphism::zero(0, 0),
                FreeMorphism::identity(1),
                FreeMorphism::zero(1, 0),
            )
            .unwrap();
        assert!(a.is_zero_morphism(&f).is_none());
        let hf = h.hat_morphism(&e, &f);
        let zero = Zmod.zero_morphism(&Zmod.dom(&hf), &Zmod.cod(&hf));
        assert!(Zmod.morphisms_equal(&hf, &zero));
        // and the homology of the source is the zero group
        assert!(invariant_factors(&h.hat_object(&e, &src)).is_trivial());
    }

    #[test]
    fn included_morphisms_come_back_unchanged() {
        let h = homology();
        let e = embedding();
        let a = adel_free();
        let f = a.include_morphism(&FreeMorphism::new(zmat![[3, 1], [0, 2]]));
        let back = h.hat_morphism(&e, &f);
        assert_eq!(back, embed_morphism(&FreeMorphism::new(zmat![[3, 1], [0, 2]])));
    }

    #[test]
    fn free_resolution_recovers_the_group() {
        // E^ of (Z --6--> Z -> 0) has torsion [6]
        let g = PresentedGroup::new(zmat![[6]]);
        let obj = free_resolution_object(&g);
        let h = homology();
        let inv = invariant_factors(&h.hat_object(&embedding(), &obj));
        assert_eq!((inv.free_rank, inv.torsion.clone()), (0, vec![6.into()]));
    }

    #[test]
    fn scaled_transformation_collapses_on_torsion() {
        // alpha = 2 * id on E: at the sample object it is multiplication
        // by 2 on Z/2, i.e. the zero morphism
        let h = homology();
        let e = embedding();
        let alpha = Transformation::scale(Zmod, &e, &BigInt::from(2));
        let value = h.hat_transformation(&ZFree, &alpha, &sample_object());
        let zero = Zmod.zero_morphism(&Zmod.dom(&value), &Zmod.cod(&value));
        assert!(Zmod.morphisms_equal(&value, &zero));
    }

    #[test]
    fn hat_transformation_restricts_to_alpha() {
        // (alpha^ * I)_X = alpha_X, forced by the identity choices
        let h = homology();
        let e = embedding();
        let n = BigInt::from(3);
        let alpha = Transformation::scale(Zmod, &e, &n);
        let x = FreeObject::new(2);
        let at_included = h.hat_transformation(&ZFree, &alpha, &adel_free().include(&x));
        assert_eq!(at_included, alpha.component(&x));
    }

    #[test]
    fn choices_are_cached_per_object() {
        let h = homology();
        let e = embedding();
        let a = map_object(&e, &sample_object());
        let first = h.data(&a);
        let second = h.data(&a);
        assert_eq!(first.kernel.mat(), second.kernel.mat());
        assert_eq!(first.image_epi.mat(), second.image_epi.mat());
    }
}
