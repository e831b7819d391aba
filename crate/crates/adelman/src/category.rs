//! Category interfaces consumed by the generic Adelman construction.
//!
//! A category is an ordinary value (typically a unit struct) whose objects
//! and morphisms are plain data.  The additive interface carries the usual
//! structure plus one decidability member: a homotopy solver producing
//! witnesses for equations `s * b0 + a1 * t = c`, which is exactly what
//! equality of morphisms in the Adelman category reduces to.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Signed;

/// A chosen direct sum: the sum object together with the injection of and
/// projection onto each summand (`inj[k] * proj[k] = 1`, mixed composites
/// vanish, and the projections followed by injections sum to the identity).
pub struct DirectSum<C: AdditiveCategory> {
    pub object: C::Object,
    pub injections: Vec<C::Morphism>,
    pub projections: Vec<C::Morphism>,
}

/// An additive category with chosen zero object and direct sums, morphism
/// equality, and a homotopy solver with witnesses.
///
/// Composition is diagrammatic throughout: `compose(f, g)` is "`f` then
/// `g`".  Structural operations panic on ill-typed input (a caller bug);
/// checked entry points live on the types built on top of this interface.
pub trait AdditiveCategory: Clone + Send + Sync + 'static {
    type Object: Clone + Eq + fmt::Debug + Send + Sync;
    type Morphism: Clone + Eq + fmt::Debug + Send + Sync;

    fn dom(&self, f: &Self::Morphism) -> Self::Object;
    fn cod(&self, f: &Self::Morphism) -> Self::Object;
    fn identity(&self, x: &Self::Object) -> Self::Morphism;
    fn zero_object(&self) -> Self::Object;
    fn is_zero_object(&self, x: &Self::Object) -> bool;
    fn zero_morphism(&self, dom: &Self::Object, cod: &Self::Object) -> Self::Morphism;
    fn compose(&self, f: &Self::Morphism, g: &Self::Morphism) -> Self::Morphism;
    fn add(&self, f: &Self::Morphism, g: &Self::Morphism) -> Self::Morphism;
    fn negate(&self, f: &Self::Morphism) -> Self::Morphism;
    fn direct_sum(&self, parts: &[Self::Object]) -> DirectSum<Self>;

    /// Equality of morphisms in the category (not of representations).
    fn morphisms_equal(&self, f: &Self::Morphism, g: &Self::Morphism) -> bool;

    /// Finds `(s, t)` with `s * b0 + a1 * t = c`, where
    /// `s : dom(a1) -> dom(b0)` and `t : cod(a1) -> cod(b0)`.
    fn solve_homotopy(
        &self,
        a1: &Self::Morphism,
        b0: &Self::Morphism,
        c: &Self::Morphism,
    ) -> Option<(Self::Morphism, Self::Morphism)>;

    fn sub(&self, f: &Self::Morphism, g: &Self::Morphism) -> Self::Morphism {
        self.add(f, &self.negate(g))
    }

    fn is_zero_morphism(&self, f: &Self::Morphism) -> bool {
        self.morphisms_equal(f, &self.zero_morphism(&self.dom(f), &self.cod(f)))
    }

    /// The two-sided inverse of `f`, when one exists.
    ///
    /// A right inverse `t` with `f * t = 1` is found through the homotopy
    /// solver; if `t` is also a left inverse it is the inverse.
    fn inverse(&self, f: &Self::Morphism) -> Option<Self::Morphism> {
        let a = self.dom(f);
        let b = self.cod(f);
        let zero = self.zero_object();
        let b0 = self.zero_morphism(&zero, &a);
        let (_, t) = self.solve_homotopy(f, &b0, &self.identity(&a))?;
        if self.morphisms_equal(&self.compose(&t, f), &self.identity(&b)) {
            Some(t)
        } else {
            None
        }
    }

    fn is_iso(&self, f: &Self::Morphism) -> bool {
        self.inverse(f).is_some()
    }
}

/// An additive category carrying a contravariant involution that realizes
/// its opposite category on the same objects (matrix transpose for free
/// abelian groups).
pub trait OpCategory: AdditiveCategory {
    /// `op(f)` reverses domain and codomain; `op(f * g) = op(g) * op(f)`
    /// and `op(op(f)) = f`.
    fn op(&self, f: &Self::Morphism) -> Self::Morphism;
}

/// An abelian category: kernels, cokernels, images, and effective lifting
/// through monomorphisms and epimorphisms.
pub trait AbelianCategory: AdditiveCategory {
    /// A kernel of `f`, as the monomorphism from the kernel object into
    /// the domain of `f`.
    fn kernel(&self, f: &Self::Morphism) -> Self::Morphism;

    /// A cokernel of `f`, as the epimorphism from the codomain of `f`
    /// onto the cokernel object.
    fn cokernel(&self, f: &Self::Morphism) -> Self::Morphism;

    /// An image factorisation `f = p * i` with `p` epi and `i` mono.
    fn image(&self, f: &Self::Morphism) -> (Self::Morphism, Self::Morphism);

    /// Finds `u` with `u * m = g`, if `g` factors through `m`.
    fn lift_along_mono(
        &self,
        m: &Self::Morphism,
        g: &Self::Morphism,
    ) -> Option<Self::Morphism>;

    /// Finds `u` with `e * u = g`, if `g` factors through `e`.
    fn lift_along_epi(&self, e: &Self::Morphism, g: &Self::Morphism)
        -> Option<Self::Morphism>;

    /// The induced morphism into the kernel of `f`, for `g` with
    /// `g * f = 0`.
    fn factor_through_kernel(
        &self,
        g: &Self::Morphism,
        f: &Self::Morphism,
    ) -> Option<Self::Morphism> {
        self.lift_along_mono(&self.kernel(f), g)
    }

    /// The induced morphism out of the cokernel of `f`, for `g` with
    /// `f * g = 0`.
    fn factor_through_cokernel(
        &self,
        g: &Self::Morphism,
        f: &Self::Morphism,
    ) -> Option<Self::Morphism> {
        self.lift_along_epi(&self.cokernel(f), g)
    }

    fn is_mono(&self, f: &Self::Morphism) -> bool {
        self.is_zero_object(&self.dom(&self.kernel(f)))
    }

    fn is_epi(&self, f: &Self::Morphism) -> bool {
        self.is_zero_object(&self.cod(&self.cokernel(f)))
    }
}

/// Assembles a block morphism between chosen direct sums: entry `(k, l)`
/// maps summand `k` of `src` to summand `l` of `dst`, `None` meaning
/// zero.  The result is `sum of proj_k * entry * inj_l`.
pub fn block_morphism<C: AdditiveCategory>(
    cat: &C,
    src: &DirectSum<C>,
    dst: &DirectSum<C>,
    entries: &[Vec<Option<C::Morphism>>],
) -> C::Morphism {
    let mut acc = cat.zero_morphism(&src.object, &dst.object);
    for (k, row) in entries.iter().enumerate() {
        for (l, entry) in row.iter().enumerate() {
            if let Some(m) = entry {
                let term = cat.compose(&cat.compose(&src.projections[k], m), &dst.injections[l]);
                acc = cat.add(&acc, &term);
            }
        }
    }
    acc
}

/// An additive functor as a capability value: callable object and
/// morphism maps.
type ObjectMap<S, T> =
    Arc<dyn Fn(&<S as AdditiveCategory>::Object) -> <T as AdditiveCategory>::Object + Send + Sync>;
type MorphismMap<S, T> = Arc<
    dyn Fn(&<S as AdditiveCategory>::Morphism) -> <T as AdditiveCategory>::Morphism + Send + Sync,
>;
type ComponentMap<S, T> =
    Arc<dyn Fn(&<S as AdditiveCategory>::Object) -> <T as AdditiveCategory>::Morphism + Send + Sync>;

pub struct Functor<S: AdditiveCategory, T: AdditiveCategory> {
    on_object: ObjectMap<S, T>,
    on_morphism: MorphismMap<S, T>,
}

impl<S: AdditiveCategory, T: AdditiveCategory> Clone for Functor<S, T> {
    fn clone(&self) -> Self {
        Functor {
            on_object: Arc::clone(&self.on_object),
            on_morphism: Arc::clone(&self.on_morphism),
        }
    }
}

impl<S: AdditiveCategory, T: AdditiveCategory> Functor<S, T> {
    pub fn new(
        on_object: impl Fn(&S::Object) -> T::Object + Send + Sync + 'static,
        on_morphism: impl Fn(&S::Morphism) -> T::Morphism + Send + Sync + 'static,
    ) -> Self {
        Functor {
            on_object: Arc::new(on_object),
            on_morphism: Arc::new(on_morphism),
        }
    }

    pub fn object(&self, x: &S::Object) -> T::Object {
        (self.on_object)(x)
    }

    pub fn morphism(&self, f: &S::Morphism) -> T::Morphism {
        (self.on_morphism)(f)
    }

    /// The composite "`self` then `k`", i.e. `K ∘ F` for `F = self`.
    pub fn then<U: AdditiveCategory>(&self, k: &Functor<T, U>) -> Functor<S, U> {
        let f_obj = self.clone();
        let k_obj = k.clone();
        let f_mor = self.clone();
        let k_mor = k.clone();
        Functor::new(
            move |x| k_obj.object(&f_obj.object(x)),
            move |m| k_mor.morphism(&f_mor.morphism(m)),
        )
    }
}

impl<S: AdditiveCategory> Functor<S, S> {
    pub fn identity() -> Self {
        Functor::new(|x: &S::Object| x.clone(), |f: &S::Morphism| f.clone())
    }
}

/// A transformation between two functors, as its component map together
/// with the functors it connects.
pub struct Transformation<S: AdditiveCategory, T: AdditiveCategory> {
    source: Functor<S, T>,
    target: Functor<S, T>,
    component: ComponentMap<S, T>,
}

impl<S: AdditiveCategory, T: AdditiveCategory> Clone for Transformation<S, T> {
    fn clone(&self) -> Self {
        Transformation {
            source: self.source.clone(),
            target: self.target.clone(),
            component: Arc::clone(&self.component),
        }
    }
}

impl<S: AdditiveCategory, T: AdditiveCategory> Transformation<S, T> {
    pub fn new(
        source: Functor<S, T>,
        target: Functor<S, T>,
        component: impl Fn(&S::Object) -> T::Morphism + Send + Sync + 'static,
    ) -> Self {
        Transformation {
            source,
            target,
            component: Arc::new(component),
        }
    }

    pub fn source(&self) -> &Functor<S, T> {
        &self.source
    }

    pub fn target(&self) -> &Functor<S, T> {
        &self.target
    }

    pub fn component(&self, x: &S::Object) -> T::Morphism {
        (self.component)(x)
    }

    /// The identity transformation of `f`.
    pub fn identity(t_cat: T, f: &Functor<S, T>) -> Self {
        let g = f.clone();
        Transformation::new(f.clone(), f.clone(), move |x| {
            t_cat.identity(&g.object(x))
        })
    }

    /// The scalar multiple `n * 1_f` of the identity transformation.
    pub fn scale(t_cat: T, f: &Functor<S, T>, n: &BigInt) -> Self {
        let g = f.clone();
        let n = n.clone();
        Transformation::new(f.clone(), f.clone(), move |x| {
            let obj = g.object(x);
            let id = t_cat.identity(&obj);
            let mut acc = t_cat.zero_morphism(&obj, &obj);
            let mut count = n.abs();
            while count.is_positive() {
                acc = t_cat.add(&acc, &id);
                count -= 1;
            }
            if n.is_negative() {
                t_cat.negate(&acc)
            } else {
                acc
            }
        })
    }

    /// Vertical composite: `self` then `other` (components compose).
    pub fn vertical(&self, other: &Self, t_cat: T) -> Self {
        let a = self.clone();
        let b = other.clone();
        Transformation::new(self.source.clone(), other.target.clone(), move |x| {
            t_cat.compose(&a.component(x), &b.component(x))
        })
    }

    /// Horizontal composite `self ⋆ alpha` for `self : K => L` between
    /// functors `T -> U` and `alpha : F => G` between functors `S -> T`;
    /// the component at `X` is `K(alpha_X) * self_{G(X)}`.
    pub fn star<R: AdditiveCategory>(
        &self,
        alpha: &Transformation<R, S>,
        t_cat: T,
    ) -> Transformation<R, T> {
        let gamma = self.clone();
        let alpha = alpha.clone();
        let source = alpha.source().then(gamma.source());
        let target = alpha.target().then(gamma.target());
        Transformation::new(source, target, move |x| {
            let k_alpha = gamma.source().morphism(&alpha.component(x));
            let gamma_gx = gamma.component(&alpha.target().object(x));
            t_cat.compose(&k_alpha, &gamma_gx)
        })
    }
}
