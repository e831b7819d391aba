//! Adelman's abelianisation `Adel(A)` of an additive category `A`, as an
//! executable construction over exact integer arithmetic.
//!
//! The crate is organised bottom-up:
//!
//! * [`matrix`] and [`linalg`] provide arbitrary-precision integer matrices
//!   together with Hermite/Smith normal forms and the integer linear system
//!   solvers every equality decision rests on;
//! * [`category`] defines the additive/abelian category interfaces the
//!   generic construction consumes;
//! * [`zfree`] is the additive category of finitely generated free abelian
//!   groups, [`zmod`] the abelian category of finitely presented abelian
//!   groups together with the embedding of the former into the latter;
//! * [`adel`] is the Adelman category of any additive category: objects are
//!   composable pairs `X0 -> X1 -> X2`, morphisms are commuting triples, and
//!   a morphism is zero exactly when a homotopy witness `s, t` with
//!   `s*y0 + x1*t = f1` exists;
//! * [`homology`] is the homology functor `Adel(B) -> B` for abelian `B` and
//!   the induced lift `F^ = H ∘ Adel(F)` of an additive functor `F`;
//! * [`audit`] hosts the seeded randomized invariant suites.
//!
//! ```
//! use adelman::adel::Adel;
//! use adelman::homology::HomologyFunctor;
//! use adelman::zfree::{FreeMorphism, ZFree};
//! use adelman::zmod::{embedding, invariant_factors, Zmod};
//! use adelman::zmat;
//!
//! // A = (Z^2 --(4 0; 0 1)--> Z^2 --(1; 2)--> Z) in Adel(Z-free)
//! let adel = Adel::new(ZFree);
//! let a = adel
//!     .object(
//!         FreeMorphism::new(zmat![[4, 0], [0, 1]]),
//!         FreeMorphism::new(zmat![[1], [2]]),
//!     )
//!     .unwrap();
//!
//! // its homology under the embedding into presented groups is Z/2
//! let h = HomologyFunctor::new(Zmod);
//! let image = h.hat_object(&embedding(), &a);
//! assert_eq!(invariant_factors(&image).to_string(), "Z/2");
//! ```

pub mod adel;
pub mod audit;
pub mod category;
mod error;
pub mod homology;
pub mod linalg;
pub mod matrix;
pub mod zfree;
pub mod zmod;

pub use error::{Error, Result};
pub use matrix::ZMatrix;
