//! Weighted lattice graphs, Cartesian products, box operators with diagonal
//! noise, and direct spectra.

use crate::error::{Error, Result};
use crate::jacobi;
use crate::rng::seeded_rng;
use crate::spectrum::{Provenance, SpectrumSample};
use nalgebra::DMatrix;
use rand::Rng;
use rand_distr::{Distribution, StandardNormal};

/// Largest allowed operator dimension for products and boxes.
pub const MAX_OPERATOR_DIM: usize = 10_000;

/// Eigenvector components below this magnitude are ignored by the sign
/// convention.
const SIGN_EPS: f64 = 1e-12;

/// Dense real symmetric matrix: a weighted graph, a box, or a Hamiltonian.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricOperator {
    entries: DMatrix<f64>,
}

impl SymmetricOperator {
    /// Wraps a matrix, requiring exact symmetry.
    pub fn new(entries: DMatrix<f64>) -> Result<Self> {
        let n = entries.nrows();
        if n == 0 || entries.ncols() != n {
            return Err(Error::InvalidDimension { what: "operator" });
        }
        for i in 0..n {
            for j in i + 1..n {
                if entries[(i, j)] != entries[(j, i)] {
                    return Err(Error::NotSymmetric { i, j });
                }
            }
        }
        Ok(Self { entries })
    }

    /// Builds from the upper triangle of `f`, mirroring so symmetry is exact.
    pub fn from_upper_fn<F: FnMut(usize, usize) -> f64>(dim: usize, mut f: F) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidDimension { what: "operator" });
        }
        let mut m = DMatrix::zeros(dim, dim);
        for i in 0..dim {
            for j in i..dim {
                let x = f(i, j);
                m[(i, j)] = x;
                m[(j, i)] = x;
            }
        }
        Ok(Self { entries: m })
    }

    pub fn dim(&self) -> usize {
        self.entries.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.entries
    }

    pub fn entry(&self, i: usize, j: usize) -> f64 {
        self.entries[(i, j)]
    }

    pub fn trace(&self) -> f64 {
        self.entries.trace()
    }
}

/// Spectral decomposition G = O diag(d) O^T with `d` sorted descending.
///
/// Eigenvectors are the columns of `O`; each column's first component of
/// magnitude above 1e-12 is positive, which makes the decomposition
/// deterministic.
#[derive(Debug, Clone)]
pub struct Diagonalization {
    o: DMatrix<f64>,
    d: Vec<f64>,
}

impl Diagonalization {
    pub fn dim(&self) -> usize {
        self.d.len()
    }

    /// Orthogonal matrix with eigenvectors as columns.
    pub fn o(&self) -> &DMatrix<f64> {
        &self.o
    }

    /// Eigenvalues, descending.
    pub fn eigenvalues(&self) -> &[f64] {
        &self.d
    }

    /// Unit eigenvector for eigenvalue `d[j]`.
    pub fn eigenvector(&self, j: usize) -> nalgebra::DVectorView<'_, f64> {
        self.o.column(j)
    }
}

/// Supported mean-0 variance-1 noise laws.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NoiseDistribution {
    Gaussian,
    Rademacher,
    UniformCentered,
}

impl NoiseDistribution {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "gaussian" => Some(Self::Gaussian),
            "rademacher" => Some(Self::Rademacher),
            "uniform-centered" | "uniform" => Some(Self::UniformCentered),
            _ => None,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Self::Gaussian => "gaussian",
            Self::Rademacher => "rademacher",
            Self::UniformCentered => "uniform-centered",
        }
    }
}

/// Specification of the diagonal noise: law, amplitude multiplier and seed.
///
/// Samples have mean 0 and variance `amplitude^2`; the sigma/sqrt(n)
/// prefactor of the box model is applied externally.
#[derive(Debug, Clone, Copy)]
pub struct NoiseSpec {
    pub distribution: NoiseDistribution,
    pub amplitude: f64,
    pub seed: u64,
}

impl NoiseSpec {
    pub fn gaussian(seed: u64) -> Self {
        Self {
            distribution: NoiseDistribution::Gaussian,
            amplitude: 1.0,
            seed,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_amplitude(mut self, amplitude: f64) -> Self {
        self.amplitude = amplitude;
        self
    }

    /// One variance-`amplitude^2` sample.
    pub fn sample<R: Rng>(&self, rng: &mut R) -> f64 {
        let raw: f64 = match self.distribution {
            NoiseDistribution::Gaussian => StandardNormal.sample(rng),
            NoiseDistribution::Rademacher => {
                if rng.gen::<bool>() {
                    1.0
                } else {
                    -1.0
                }
            }
            // uniform on [-sqrt(3), sqrt(3)] has variance 1
            NoiseDistribution::UniformCentered => {
                let u: f64 = rng.gen();
                (2.0 * u - 1.0) * 3.0_f64.sqrt()
            }
        };
        raw * self.amplitude
    }

    /// The n slice vectors V_1..V_n (each of length m) drawn from this spec's
    /// seed. The draw order is slice-by-slice, so identical seeds yield
    /// identical slices no matter who consumes them.
    pub fn sample_slices(&self, m: usize, n: usize) -> Vec<Vec<f64>> {
        let mut rng = seeded_rng(self.seed);
        (0..n)
            .map(|_| (0..m).map(|_| self.sample(&mut rng)).collect())
            .collect()
    }
}

/// Adjacency matrix of the path with `m` vertices: ones on the first
/// off-diagonals.
pub fn path_graph(m: usize) -> Result<SymmetricOperator> {
    if m == 0 {
        return Err(Error::InvalidDimension { what: "path graph" });
    }
    SymmetricOperator::from_upper_fn(m, |i, j| if j == i + 1 { 1.0 } else { 0.0 })
}

/// Cartesian product of weighted graphs:
/// (A x B)_{(i,i'),(j,j')} = 1_{i'=j'} A_{ij} + 1_{i=j} B_{i'j'},
/// with the A-index varying slower (combined index i * dim(B) + i').
pub fn cartesian_product(
    a: &SymmetricOperator,
    b: &SymmetricOperator,
) -> Result<SymmetricOperator> {
    let (na, nb) = (a.dim(), b.dim());
    let dim = na
        .checked_mul(nb)
        .filter(|&d| d <= MAX_OPERATOR_DIM)
        .ok_or(Error::SizeLimit {
            requested: na.saturating_mul(nb),
            max: MAX_OPERATOR_DIM,
        })?;
    let mut m = DMatrix::zeros(dim, dim);
    for i in 0..na {
        for ip in 0..nb {
            let row = i * nb + ip;
            for j in 0..na {
                let col_base = j * nb;
                if i == j {
                    for jp in 0..nb {
                        m[(row, col_base + jp)] += b.entry(ip, jp);
                    }
                }
                m[(row, col_base + ip)] += a.entry(i, j);
            }
        }
    }
    SymmetricOperator::new(m)
}

/// Multiplies all weights by `r`.
pub fn scale(g: &SymmetricOperator, r: f64) -> SymmetricOperator {
    SymmetricOperator {
        entries: g.matrix() * r,
    }
}

/// Full spectral decomposition with deterministic ordering and signs.
pub fn diagonalize(g: &SymmetricOperator) -> Result<Diagonalization> {
    let (mut vals, vecs) = jacobi::symmetric_eigen(g.matrix(), true)?;
    let mut o = vecs.expect("vectors requested");
    // descending eigenvalues
    vals.reverse();
    let n = o.ncols();
    let mut reversed = DMatrix::zeros(n, n);
    for c in 0..n {
        reversed.set_column(c, &o.column(n - 1 - c));
    }
    o = reversed;
    // sign convention: first significant component positive
    for c in 0..n {
        let mut col = o.column_mut(c);
        if let Some(first) = col.iter().find(|x| x.abs() > SIGN_EPS) {
            if *first < 0.0 {
                col.neg_mut();
            }
        }
    }
    Ok(Diagonalization { o, d: vals })
}

/// Gram matrix of squared eigenvector components:
/// entry (i, j) = < |O_i|^2, |O_j|^2 >.
pub fn overlap_gram(diag: &Diagonalization) -> DMatrix<f64> {
    let m = diag.dim();
    let mut sq = DMatrix::zeros(m, m);
    for j in 0..m {
        for k in 0..m {
            let x = diag.o()[(k, j)];
            sq[(k, j)] = x * x;
        }
    }
    let mut gram = DMatrix::zeros(m, m);
    for i in 0..m {
        for j in i..m {
            let mut s = 0.0;
            for k in 0..m {
                s += sq[(k, i)] * sq[(k, j)];
            }
            gram[(i, j)] = s;
            gram[(j, i)] = s;
        }
    }
    gram
}

/// The box operator rG x Z_n plus `sigma_over_sqrt_n` times diagonal noise.
///
/// The same `noise` spec fed to [`NoiseSpec::sample_slices`] reproduces the
/// per-slice matrices V_k exactly: the diagonal entry at combined index
/// (g, k) is `sigma_over_sqrt_n * slices[k][g]`.
pub fn assemble_box(
    g: &SymmetricOperator,
    r: f64,
    n: usize,
    noise: &NoiseSpec,
    sigma_over_sqrt_n: f64,
) -> Result<SymmetricOperator> {
    if n == 0 {
        return Err(Error::InvalidDimension { what: "box length" });
    }
    let base = scale(g, r);
    let path = path_graph(n)?;
    let mut box_op = cartesian_product(&base, &path)?;
    let slices = noise.sample_slices(g.dim(), n);
    for (k, slice) in slices.iter().enumerate() {
        for (gi, &v) in slice.iter().enumerate() {
            let idx = gi * n + k;
            box_op.entries[(idx, idx)] += sigma_over_sqrt_n * v;
        }
    }
    Ok(box_op)
}

/// All eigenvalues by direct dense diagonalization, ascending.
pub fn direct_spectrum(m: &SymmetricOperator) -> Result<SpectrumSample> {
    let (vals, _) = jacobi::symmetric_eigen(m.matrix(), false)?;
    SpectrumSample::new(vals, Provenance::Direct)
}
