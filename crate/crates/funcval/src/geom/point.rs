//! Points of `R^n` with exact rational coordinates.

use crate::linalg;
use crate::rat::{to_f64, Rat};
use num_traits::Zero;
use std::fmt;

/// A point (or vector) with exact rational coordinates.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point(pub Vec<Rat>);

impl Point {
    pub fn new(coords: Vec<Rat>) -> Self {
        Point(coords)
    }

    /// Origin of `R^n`.
    pub fn zero(n: usize) -> Self {
        Point(vec![Rat::zero(); n])
    }

    /// `i`-th standard basis vector of `R^n`.
    pub fn unit(n: usize, i: usize) -> Self {
        let mut c = vec![Rat::zero(); n];
        c[i] = Rat::from_integer(1.into());
        Point(c)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rat] {
        &self.0
    }

    pub fn dot(&self, other: &Point) -> Rat {
        linalg::dot(&self.0, &other.0)
    }

    pub fn add(&self, other: &Point) -> Point {
        Point(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Point) -> Point {
        Point(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, s: &Rat) -> Point {
        Point(self.0.iter().map(|a| a * s).collect())
    }

    pub fn neg(&self) -> Point {
        Point(self.0.iter().map(|a| -a).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|a| a.is_zero())
    }

    /// Squared Euclidean norm, exact.
    pub fn norm_sq(&self) -> Rat {
        self.0.iter().map(|a| a * a).sum()
    }

    /// Euclidean norm as `f64`.
    pub fn norm_f64(&self) -> f64 {
        to_f64(&self.norm_sq()).sqrt()
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", crate::rat::format_rat(c))?;
        }
        write!(f, ")")
    }
}
