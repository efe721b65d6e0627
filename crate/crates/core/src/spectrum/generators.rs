//! Dense angular-momentum matrices in the `|j, m>` basis, and the
//! `su(2) + su(2)` realization of `so(4)` built from two copies of them.

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::HalfInteger;

type Matrix = DMatrix<Complex64>;

/// `(J_x, J_y, J_z)` for one spin-`j` irrep, basis ordered `m = j, j-1, ..., -j`.
#[derive(Debug, Clone)]
pub struct GeneratorSet {
    pub j: HalfInteger,
    pub components: [Matrix; 3],
}

/// Build the spin-`j` triple from ladder-operator matrix elements
/// `<m+1| J_+ |m> = sqrt(j(j+1) - m(m+1))`.
pub fn build_generators(j: HalfInteger) -> GeneratorSet {
    let dim = j.multiplicity();
    let jv = j.value();
    let m_at = |row: usize| jv - row as f64;

    let mut raise = Matrix::zeros(dim, dim);
    for col in 1..dim {
        let m = m_at(col);
        raise[(col - 1, col)] = Complex64::new((jv * (jv + 1.0) - m * (m + 1.0)).sqrt(), 0.0);
    }
    let lower = raise.adjoint();

    let half = Complex64::new(0.5, 0.0);
    let jx = (&raise + &lower) * half;
    let jy = (&raise - &lower) * Complex64::new(0.0, -0.5);
    let jz = Matrix::from_fn(dim, dim, |r, c| {
        if r == c {
            Complex64::new(m_at(r), 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    });

    GeneratorSet {
        j,
        components: [jx, jy, jz],
    }
}

fn commutator(a: &Matrix, b: &Matrix) -> Matrix {
    a * b - b * a
}

fn max_abs(m: &Matrix) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

fn squared_sum(ops: &[Matrix; 3]) -> Matrix {
    ops.iter().map(|op| op * op).fold(Matrix::zeros(ops[0].nrows(), ops[0].ncols()), |acc, sq| acc + sq)
}

/// Largest entrywise deviation of `[A_a, A_b]` from `i eps_abc A_c` over all ordered pairs.
fn algebra_residual(ops: &[Matrix; 3]) -> f64 {
    let i = Complex64::new(0.0, 1.0);
    let mut worst = 0.0f64;
    for (a, b, c) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
        worst = worst.max(max_abs(&(commutator(&ops[a], &ops[b]) - &ops[c] * i)));
        worst = worst.max(max_abs(&(commutator(&ops[b], &ops[a]) + &ops[c] * i)));
    }
    for op in ops {
        worst = worst.max(max_abs(&commutator(op, op)));
    }
    worst
}

fn identity_residual(m: &Matrix, value: f64) -> f64 {
    let target = Matrix::identity(m.nrows(), m.ncols()) * Complex64::new(value, 0.0);
    max_abs(&(m - target))
}

impl GeneratorSet {
    pub fn dimension(&self) -> usize {
        self.j.multiplicity()
    }

    /// `J^2 = J_x^2 + J_y^2 + J_z^2`.
    pub fn casimir(&self) -> Matrix {
        squared_sum(&self.components)
    }

    pub fn commutator_residual(&self) -> f64 {
        algebra_residual(&self.components)
    }

    /// Entrywise distance of `J^2` from `j(j+1) * 1`.
    pub fn casimir_residual(&self) -> f64 {
        let j = self.j.value();
        identity_residual(&self.casimir(), j * (j + 1.0))
    }
}

/// The `(j, j)` representation of `so(4)`: `J_a = T_a (x) 1` and `S_a = 1 (x) T_a`.
///
/// `L = J + S` and `P = J - S` recover the rotation and "boost" generators
/// of the four-dimensional rotation group.
#[derive(Debug, Clone)]
pub struct So4Pair {
    pub j: HalfInteger,
    pub left: [Matrix; 3],
    pub right: [Matrix; 3],
}

impl So4Pair {
    pub fn new(j: HalfInteger) -> Self {
        let base = build_generators(j);
        let id = Matrix::identity(base.dimension(), base.dimension());
        let left = base.components.clone().map(|t| t.kronecker(&id));
        let right = base.components.map(|t| id.kronecker(&t));
        Self { j, left, right }
    }

    pub fn dimension(&self) -> usize {
        self.left[0].nrows()
    }

    pub fn orbital(&self) -> [Matrix; 3] {
        std::array::from_fn(|a| &self.left[a] + &self.right[a])
    }

    pub fn boost(&self) -> [Matrix; 3] {
        std::array::from_fn(|a| &self.left[a] - &self.right[a])
    }

    /// `(1/2) M_ij M^ij = L^2 + P^2`.
    pub fn casimir(&self) -> Matrix {
        squared_sum(&self.orbital()) + squared_sum(&self.boost())
    }

    /// Worst residual over the two `su(2)` algebras and the cross commutators `[J_a, S_b] = 0`.
    pub fn algebra_residual(&self) -> f64 {
        let mut worst = algebra_residual(&self.left).max(algebra_residual(&self.right));
        for l in &self.left {
            for r in &self.right {
                worst = worst.max(max_abs(&commutator(l, r)));
            }
        }
        worst
    }

    /// Residuals of `L^2 + P^2 = 2(J^2 + S^2) = 4j(j+1) * 1` and of `J^2 = S^2`.
    pub fn casimir_residuals(&self) -> Casimirs {
        let j = self.j.value();
        let target = 4.0 * j * (j + 1.0);
        let j_sq = squared_sum(&self.left);
        let s_sq = squared_sum(&self.right);
        let casimir = self.casimir();
        let doubled = (&j_sq + &s_sq) * Complex64::new(2.0, 0.0);
        let l_dot_p = self
            .orbital()
            .iter()
            .zip(self.boost().iter())
            .map(|(l, p)| l * p)
            .fold(Matrix::zeros(self.dimension(), self.dimension()), |acc, m| acc + m);
        Casimirs {
            target,
            so4: identity_residual(&casimir, target),
            split: max_abs(&(casimir - doubled)),
            equal_halves: max_abs(&(j_sq - s_sq)),
            l_dot_p: max_abs(&l_dot_p),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Casimirs {
    /// `4j(j+1)`.
    pub target: f64,
    pub so4: f64,
    pub split: f64,
    pub equal_halves: f64,
    pub l_dot_p: f64,
}

impl Casimirs {
    pub fn max(&self) -> f64 {
        self.so4.max(self.split).max(self.equal_halves).max(self.l_dot_p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TOL: f64 = 1e-12;

    #[test]
    fn spin_half() {
        let g = build_generators(HalfInteger::new(0.5).unwrap());
        assert_eq!(g.dimension(), 2);
        assert!(g.casimir_residual() < TOL);
        assert!((g.casimir()[(0, 0)].re - 0.75).abs() < TOL);
        assert!(g.commutator_residual() < TOL);
    }

    #[test]
    fn trivial_irrep() {
        let g = build_generators(HalfInteger::new(0.0).unwrap());
        assert_eq!(g.dimension(), 1);
        assert!(g.components.iter().all(|m| m[(0, 0)].norm() == 0.0));
        assert_eq!(g.casimir()[(0, 0)].norm(), 0.0);
    }

    #[test]
    fn spin_two() {
        let g = build_generators(HalfInteger::new(2.0).unwrap());
        assert_eq!(g.dimension(), 5);
        assert!(g.commutator_residual() < TOL);
        assert!(g.casimir_residual() < TOL);
        assert!((g.casimir()[(3, 3)].re - 6.0).abs() < TOL);
    }

    #[test]
    fn generators_are_hermitian() {
        let g = build_generators(HalfInteger::new(1.5).unwrap());
        for m in &g.components {
            assert!(max_abs(&(m - m.adjoint())) < TOL);
        }
    }

    #[test]
    fn so4_pair_up_to_six() {
        for twice in 0..=12 {
            let pair = So4Pair::new(HalfInteger::from_doubled(twice));
            assert_eq!(pair.dimension(), (twice as usize + 1).pow(2));
            assert!(pair.algebra_residual() < TOL, "2j = {twice}");
            let c = pair.casimir_residuals();
            assert!(c.max() < TOL, "2j = {twice}: {c:?}");
        }
    }
}
