//! Lie group and Lie algebra kernel.
//!
//! A configuration group implements [`LieGroup`]. Elements of the Lie algebra
//! `g` and of its dual `g*` are stored as coordinate vectors in a fixed basis
//! ([`AlgebraVector`], [`CoalgebraVector`]) and are paired by the coordinate dot
//! product. The coadjoint action follows the convention
//!
//! ```text
//! <Ad*_g mu, xi> = <mu, Ad_g xi>
//! ```
//!
//! so that `Ad*` is a right action: `Ad*_{gh} = Ad*_h Ad*_g`. On SO(3) it is
//! `mu ↦ R^T mu`, the body-frame momentum update of the rigid body.

mod so3;

use std::fmt::Debug;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use nalgebra::{SMatrix, SVector};

pub use so3::SO3;

/// Coordinate storage for algebra and coalgebra vectors.
///
/// Implemented for `nalgebra::SVector<f64, N>`; `Operator` is the matching
/// square matrix used for linear maps `g -> g`.
pub trait Coords:
    Copy
    + Debug
    + PartialEq
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Neg<Output = Self>
    + Mul<f64, Output = Self>
    + 'static
{
    type Operator: Copy + Debug + PartialEq + Send + Sync + 'static;

    fn dim() -> usize;
    fn zeros() -> Self;
    fn from_fn(f: impl FnMut(usize) -> f64) -> Self;
    fn component(&self, i: usize) -> f64;
    fn dot(&self, other: &Self) -> f64;

    fn norm(&self) -> f64 {
        self.dot(self).sqrt()
    }

    fn identity_operator() -> Self::Operator;
    fn operator_from_fn(f: impl FnMut(usize, usize) -> f64) -> Self::Operator;
    fn operator_entry(op: &Self::Operator, i: usize, j: usize) -> f64;
    fn apply(op: &Self::Operator, v: &Self) -> Self;
    fn apply_transpose(op: &Self::Operator, v: &Self) -> Self;
    fn invert(op: &Self::Operator) -> Option<Self::Operator>;
}

impl<const N: usize> Coords for SVector<f64, N> {
    type Operator = SMatrix<f64, N, N>;

    fn dim() -> usize {
        N
    }

    fn zeros() -> Self {
        SVector::zeros()
    }

    fn from_fn(mut f: impl FnMut(usize) -> f64) -> Self {
        SVector::from_fn(|i, _| f(i))
    }

    fn component(&self, i: usize) -> f64 {
        self[i]
    }

    fn dot(&self, other: &Self) -> f64 {
        SVector::dot(self, other)
    }

    fn identity_operator() -> Self::Operator {
        SMatrix::identity()
    }

    fn operator_from_fn(f: impl FnMut(usize, usize) -> f64) -> Self::Operator {
        SMatrix::from_fn(f)
    }

    fn operator_entry(op: &Self::Operator, i: usize, j: usize) -> f64 {
        op[(i, j)]
    }

    fn apply(op: &Self::Operator, v: &Self) -> Self {
        op * v
    }

    fn apply_transpose(op: &Self::Operator, v: &Self) -> Self {
        op.tr_mul(v)
    }

    fn invert(op: &Self::Operator) -> Option<Self::Operator> {
        op.try_inverse()
    }
}

macro_rules! linear_newtype {
    ($name:ident) => {
        impl<V: Coords> $name<V> {
            pub fn new(coords: V) -> Self {
                Self(coords)
            }

            pub fn zero() -> Self {
                Self(V::zeros())
            }

            /// The `i`-th basis vector.
            pub fn basis(i: usize) -> Self {
                Self(V::from_fn(|j| if i == j { 1.0 } else { 0.0 }))
            }

            pub fn from_fn(f: impl FnMut(usize) -> f64) -> Self {
                Self(V::from_fn(f))
            }

            pub fn coords(&self) -> &V {
                &self.0
            }

            pub fn into_coords(self) -> V {
                self.0
            }

            pub fn norm(&self) -> f64 {
                self.0.norm()
            }

            pub fn to_vec(&self) -> Vec<f64> {
                (0..V::dim()).map(|i| self.0.component(i)).collect()
            }
        }

        impl<V: Coords> Add for $name<V> {
            type Output = Self;
            fn add(self, rhs: Self) -> Self {
                Self(self.0 + rhs.0)
            }
        }

        impl<V: Coords> Sub for $name<V> {
            type Output = Self;
            fn sub(self, rhs: Self) -> Self {
                Self(self.0 - rhs.0)
            }
        }

        impl<V: Coords> AddAssign for $name<V> {
            fn add_assign(&mut self, rhs: Self) {
                self.0 = self.0 + rhs.0;
            }
        }

        impl<V: Coords> SubAssign for $name<V> {
            fn sub_assign(&mut self, rhs: Self) {
                self.0 = self.0 - rhs.0;
            }
        }

        impl<V: Coords> Neg for $name<V> {
            type Output = Self;
            fn neg(self) -> Self {
                Self(-self.0)
            }
        }

        impl<V: Coords> Mul<f64> for $name<V> {
            type Output = Self;
            fn mul(self, s: f64) -> Self {
                Self(self.0 * s)
            }
        }

        impl<V: Coords> Mul<$name<V>> for f64 {
            type Output = $name<V>;
            fn mul(self, v: $name<V>) -> $name<V> {
                $name(v.0 * self)
            }
        }
    };
}

/// Coordinates of `xi` in the Lie algebra `g`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlgebraVector<V>(V);

/// Coordinates of `mu` in the dual `g*`, in the dual basis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoalgebraVector<V>(V);

linear_newtype!(AlgebraVector);
linear_newtype!(CoalgebraVector);

/// Algebra vector of group `G`.
pub type Alg<G> = AlgebraVector<<G as LieGroup>::Coords>;
/// Coalgebra vector of group `G`.
pub type CoAlg<G> = CoalgebraVector<<G as LieGroup>::Coords>;
/// Linear operator on the coordinates of group `G`'s algebra.
pub type Operator<G> = <<G as LieGroup>::Coords as Coords>::Operator;

/// Static facts about a group implementation.
#[derive(Debug, Clone, PartialEq)]
pub struct LieGroupDescriptor {
    pub name: &'static str,
    pub dimension: usize,
    pub basis_labels: &'static [&'static str],
    /// Default tolerance for group-axiom and manifold checks.
    pub tolerance: f64,
}

/// A matrix Lie group with a fixed basis of its algebra.
///
/// Downstream modules are written against this trait only.
pub trait LieGroup: Copy + Debug + PartialEq + Send + Sync + 'static {
    type Coords: Coords;

    fn descriptor() -> LieGroupDescriptor;

    fn identity() -> Self;

    fn compose(&self, other: &Self) -> Self;

    fn inverse(&self) -> Self;

    /// `Ad_g xi`.
    fn adjoint(&self, xi: &Alg<Self>) -> Alg<Self>;

    /// `Ad*_g mu`, with `<Ad*_g mu, xi> = <mu, Ad_g xi>`.
    fn coadjoint(&self, mu: &CoAlg<Self>) -> CoAlg<Self>;

    fn bracket(xi: &Alg<Self>, eta: &Alg<Self>) -> Alg<Self>;

    /// `ad*_xi mu`, with `<ad*_xi mu, eta> = <mu, [xi, eta]>`.
    fn ad_star(xi: &Alg<Self>, mu: &CoAlg<Self>) -> CoAlg<Self>;

    /// Frobenius distance between the matrix representations.
    fn distance(&self, other: &Self) -> f64;

    /// How far the representation has drifted off the group manifold.
    fn manifold_residual(&self) -> f64;

    /// Nearest group element to the (possibly drifted) representation.
    fn project_to_group(&self) -> Self;

    /// Row-major flattening of the representation.
    fn flatten(&self) -> Vec<f64>;
}

/// Natural pairing `<mu, xi>` between `g*` and `g`.
pub fn pairing<V: Coords>(mu: &CoalgebraVector<V>, xi: &AlgebraVector<V>) -> f64 {
    mu.0.dot(&xi.0)
}

pub fn compose<G: LieGroup>(g: &G, h: &G) -> G {
    g.compose(h)
}

pub fn inverse<G: LieGroup>(g: &G) -> G {
    g.inverse()
}

pub fn ad<G: LieGroup>(g: &G, xi: &Alg<G>) -> Alg<G> {
    g.adjoint(xi)
}

pub fn co_ad<G: LieGroup>(g: &G, mu: &CoAlg<G>) -> CoAlg<G> {
    g.coadjoint(mu)
}

pub fn bracket<G: LieGroup>(xi: &Alg<G>, eta: &Alg<G>) -> Alg<G> {
    G::bracket(xi, eta)
}

pub fn ad_star<G: LieGroup>(xi: &Alg<G>, mu: &CoAlg<G>) -> CoAlg<G> {
    G::ad_star(xi, mu)
}

/// Apply a linear operator on `g` to an algebra vector.
pub fn apply_op<V: Coords>(op: &V::Operator, xi: &AlgebraVector<V>) -> AlgebraVector<V> {
    AlgebraVector(V::apply(op, &xi.0))
}

/// Apply the dual (transpose) of a linear operator on `g` to a covector.
pub fn apply_dual<V: Coords>(op: &V::Operator, mu: &CoalgebraVector<V>) -> CoalgebraVector<V> {
    CoalgebraVector(V::apply_transpose(op, &mu.0))
}
