use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exact::{LinearMap, Scalar};
use crate::instance::{AlgebraInstance, RepInstance};
use crate::operators::{is_admissible, OperatorCandidate};
use crate::varieties::is_morphism;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MapShape {
    Full,
    Diagonal,
}

/// Coefficient grid: entries are drawn from {n/d}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridSpec {
    pub numerators: Vec<i64>,
    pub denominators: Vec<i64>,
    pub seed: u64,
    pub count: usize,
    pub shape: MapShape,
}

impl GridSpec {
    pub fn new(numerators: &[i64], denominators: &[i64], seed: u64, count: usize) -> Self {
        GridSpec {
            numerators: numerators.to_vec(),
            denominators: denominators.to_vec(),
            seed,
            count,
            shape: MapShape::Full,
        }
    }

    pub fn diagonal(mut self) -> Self {
        self.shape = MapShape::Diagonal;
        self
    }

    /// Distinct grid values in first-seen order.
    pub fn values(&self) -> Vec<Scalar> {
        let mut out: Vec<Scalar> = Vec::new();
        for v in self.draws() {
            if !out.contains(&v) {
                out.push(v);
            }
        }
        out
    }

    /// All n/d pairs with repetition; random draws are uniform over this list.
    fn draws(&self) -> Vec<Scalar> {
        let mut out = Vec::new();
        for &n in &self.numerators {
            for &d in &self.denominators {
                if d > 0 {
                    out.push(Scalar::frac(n, d));
                }
            }
        }
        out
    }

    fn validate(&self) -> Result<()> {
        if self.draws().is_empty() {
            return Err(Error::Generation("grid has no values".into()));
        }
        Ok(())
    }
}

/// The `index`-th map in lexicographic grid order (first entry slowest).
fn grid_map(src: usize, dst: usize, shape: MapShape, values: &[Scalar], mut index: u128) -> LinearMap {
    let cells: Vec<(usize, usize)> = match shape {
        MapShape::Full => (0..dst).flat_map(|r| (0..src).map(move |c| (r, c))).collect(),
        MapShape::Diagonal => (0..src.min(dst)).map(|i| (i, i)).collect(),
    };
    let k = values.len() as u128;
    let mut m = LinearMap::zero(src, dst);
    for &(r, c) in cells.iter().rev() {
        m.set(r, c, values[(index % k) as usize].clone());
        index /= k;
    }
    m
}

fn grid_size(src: usize, dst: usize, shape: MapShape, k: usize) -> Option<u128> {
    let cells = match shape {
        MapShape::Full => src * dst,
        MapShape::Diagonal => src.min(dst),
    };
    (k as u128).checked_pow(cells as u32)
}

/// Grid maps A → A passing `is_morphism`; exhaustive when the grid has at
/// most `count` maps, otherwise `count` seeded draws.
pub fn find_endomorphisms(a: &AlgebraInstance, grid: &GridSpec) -> Result<Vec<LinearMap>> {
    grid.validate()?;
    let values = grid.values();
    let n = a.dim;
    let candidates: Vec<LinearMap> = match grid_size(n, n, grid.shape, values.len()) {
        Some(total) if total <= grid.count as u128 => {
            (0..total).map(|i| grid_map(n, n, grid.shape, &values, i)).collect()
        }
        _ => {
            let mut rng = ChaCha8Rng::seed_from_u64(grid.seed);
            let draws = grid.draws();
            (0..grid.count).map(|_| random_map(&mut rng, n, n, grid.shape, &draws, None)).collect()
        }
    };
    let mut out = Vec::new();
    for m in candidates {
        if is_morphism(&m, a, a)?.is_pass() && !out.contains(&m) {
            out.push(m);
        }
    }
    Ok(out)
}

/// A seeded map; with `mask`, entries outside it are zero.
fn random_map(
    rng: &mut ChaCha8Rng,
    src: usize,
    dst: usize,
    shape: MapShape,
    draws: &[Scalar],
    mask: Option<&[Vec<bool>]>,
) -> LinearMap {
    let mut m = LinearMap::zero(src, dst);
    for r in 0..dst {
        for c in 0..src {
            if shape == MapShape::Diagonal && r != c {
                continue;
            }
            let v = draws[rng.gen_range(0..draws.len())].clone();
            if mask.is_none_or(|mk| mk[r][c]) {
                m.set(r, c, v);
            }
        }
    }
    m
}

fn diagonal_of(m: &LinearMap) -> Option<Vec<Scalar>> {
    for r in 0..m.dst_dim() {
        for c in 0..m.src_dim() {
            if r != c && !m.get(r, c).is_zero() {
                return None;
            }
        }
    }
    Some((0..m.dst_dim()).map(|i| m.get(i, i).clone()).collect())
}

/// `count` seeded maps V → A with Kβ = αK.
///
/// When both twists are diagonal, entries K[i][j] with αᵢ ≠ βⱼ are held at
/// zero; otherwise non-intertwining draws are discarded, up to a hard cap.
pub fn sample_operator_candidates(rep: &RepInstance, grid: &GridSpec) -> Result<Vec<OperatorCandidate>> {
    grid.validate()?;
    let (n, m) = (rep.base.dim, rep.v_dim);
    let draws = grid.draws();
    let mut rng = ChaCha8Rng::seed_from_u64(grid.seed);
    let mask: Option<Vec<Vec<bool>>> = match (diagonal_of(rep.base.alpha()?), diagonal_of(&rep.beta)) {
        (Some(a), Some(b)) => Some((0..n).map(|i| (0..m).map(|j| a[i] == b[j]).collect()).collect()),
        _ => None,
    };
    let cap = 100 * grid.count + 1000;
    let mut out = Vec::with_capacity(grid.count);
    let mut tries = 0;
    while out.len() < grid.count {
        if tries == cap {
            return Err(Error::Generation(format!(
                "found {} of {} admissible maps for `{}` within {cap} draws",
                out.len(),
                grid.count,
                rep.name
            )));
        }
        tries += 1;
        let k = random_map(&mut rng, m, n, grid.shape, &draws, mask.as_deref());
        let c = OperatorCandidate::on_rep(&format!("K{}", out.len()), rep.clone(), k);
        if is_admissible(&c)? {
            out.push(c);
        }
    }
    Ok(out)
}

/// Number of single-coefficient perturbations of `a`.
pub fn perturbation_count(a: &AlgebraInstance) -> usize {
    a.products.len() * a.dim.pow(3)
}

/// Adds 1 to one structure constant: products in name order, then (i, j, k).
pub fn perturb_algebra(a: &AlgebraInstance, index: usize) -> AlgebraInstance {
    let n = a.dim;
    let cube = n * n * n;
    let mut out = a.clone();
    let name = out.products.keys().nth(index / cube % out.products.len()).expect("has products").clone();
    let r = index % cube;
    let (i, j, k) = (r / (n * n), r / n % n, r % n);
    let t = out.products.get_mut(&name).expect("present");
    let c = t.get(i, j, k) + &Scalar::one();
    t.set(i, j, k, c);
    out.named(&format!("{}~{index}", a.name))
}

/// Adds 1 to the `index`-th matrix entry, row-major.
pub fn perturb_map(m: &LinearMap, index: usize) -> LinearMap {
    let cells = m.src_dim() * m.dst_dim();
    let r = index % cells;
    let (row, col) = (r / m.src_dim(), r % m.src_dim());
    let mut out = m.clone();
    out.set(row, col, m.get(row, col) + &Scalar::one());
    out
}
