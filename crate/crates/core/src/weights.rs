//! Weight-lattice arithmetic.
//!
//! Weights are stored as rational coordinate vectors in the simple-root
//! basis; the fundamental-weight coordinates of `w` are the pairings
//! `(w, alpha_i^vee)`, and `w` is a lattice weight exactly when these are all
//! integers. Fundamental weights themselves are the columns of the exact
//! inverse of the transposed Cartan matrix.
//!
//! Weight multisets of simple Levi modules are computed with Freudenthal's
//! recursion on the dominant cone of the support sub-root-system, then
//! expanded over Weyl orbits. The Weyl dimension formula serves as an
//! independent route to the total multiplicity and is kept separate from the
//! recursion.

use std::collections::BTreeMap;
use std::collections::BTreeSet;

use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::lie::{cartan_matrix, LieType};
use crate::rat::{all_integers, display_vec, rat, Rat};
use crate::roots::{Root, RootSystem};
use crate::Result;

/// A vector in the rational span of the simple roots.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight {
    coords: Vec<Rat>,
}

impl Weight {
    pub fn new(coords: Vec<Rat>) -> Weight {
        Weight { coords }
    }

    pub fn zero(rank: usize) -> Weight {
        Weight {
            coords: vec![Rat::zero(); rank],
        }
    }

    pub fn from_root(r: &Root) -> Weight {
        Weight { coords: r.to_rat() }
    }

    /// Simple-root coordinates.
    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scaled(&self, c: Rat) -> Weight {
        Weight {
            coords: self.coords.iter().map(|x| x * c).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Rat::is_zero)
    }
}

impl std::fmt::Display for Weight {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", display_vec(&self.coords))
    }
}

/// Dense square matrix over the exact rationals, just big enough for
/// Cartan-matrix work (rank <= 9).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    n: usize,
    rows: Vec<Vec<Rat>>,
}

impl RatMatrix {
    pub fn from_rows(rows: Vec<Vec<Rat>>) -> RatMatrix {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "square matrix expected");
        RatMatrix { n, rows }
    }

    pub fn identity(n: usize) -> RatMatrix {
        let mut rows = vec![vec![Rat::zero(); n]; n];
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = Rat::one();
        }
        RatMatrix { n, rows }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// Entry at 1-based `(i, j)`.
    pub fn entry(&self, i: usize, j: usize) -> Rat {
        self.rows[i - 1][j - 1]
    }

    pub fn rows(&self) -> &[Vec<Rat>] {
        &self.rows
    }

    pub fn column(&self, j: usize) -> Vec<Rat> {
        self.rows.iter().map(|r| r[j - 1]).collect()
    }

    pub fn mul(&self, other: &RatMatrix) -> RatMatrix {
        let n = self.n;
        let mut rows = vec![vec![Rat::zero(); n]; n];
        for (row, a_row) in rows.iter_mut().zip(&self.rows) {
            for (k, a_ik) in a_row.iter().enumerate() {
                if a_ik.is_zero() {
                    continue;
                }
                for (entry, b_kj) in row.iter_mut().zip(&other.rows[k]) {
                    *entry += *a_ik * *b_kj;
                }
            }
        }
        RatMatrix { n, rows }
    }

    /// Exact inverse by Gauss-Jordan elimination; `None` if singular.
    pub fn inverse(&self) -> Option<RatMatrix> {
        let n = self.n;
        let mut a = self.rows.clone();
        let mut inv = RatMatrix::identity(n).rows;
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let scale = Rat::one() / a[col][col];
            for j in 0..n {
                a[col][j] *= scale;
                inv[col][j] *= scale;
            }
            for r in 0..n {
                if r != col && !a[r][col].is_zero() {
                    let factor = a[r][col];
                    for j in 0..n {
                        let (da, di) = (factor * a[col][j], factor * inv[col][j]);
                        a[r][j] -= da;
                        inv[r][j] -= di;
                    }
                }
            }
        }
        Some(RatMatrix { n, rows: inv })
    }
}

/// The transposed Cartan matrix of `t` as a rational matrix.
pub fn transposed_cartan(t: LieType) -> RatMatrix {
    let a = cartan_matrix(t);
    let n = t.rank();
    RatMatrix::from_rows(
        (0..n)
            .map(|i| (0..n).map(|j| rat(a.rows()[j][i])).collect())
            .collect(),
    )
}

/// Exact inverse of the transposed Cartan matrix. Its `j`-th column lists
/// the simple-root coefficients of the fundamental weight `omega_j`.
pub fn inverse_transposed_cartan(t: LieType) -> RatMatrix {
    transposed_cartan(t)
        .inverse()
        .expect("Cartan matrices of simple types are invertible")
}

/// The fundamental weight `omega_j` in simple-root coordinates.
pub fn fundamental_weight(t: LieType, j: usize) -> Result<Weight> {
    t.check_node(j)?;
    Ok(Weight::new(inverse_transposed_cartan(t).column(j)))
}

/// Fundamental-weight coordinates `((w, alpha_1^vee), ..., (w, alpha_l^vee))`.
pub fn fw_coords(t: LieType, w: &Weight) -> Vec<Rat> {
    let a = cartan_matrix(t);
    (1..=t.rank())
        .map(|i| a.coroot_pairing_with_simple_rat(w.coords(), i))
        .collect()
}

/// Builds the lattice weight with the given integer fundamental-weight
/// coordinates.
pub fn weight_from_fw_coords(t: LieType, c: &[i64]) -> Result<Weight> {
    if c.len() != t.rank() {
        return Err(Error::OutOfRange(format!(
            "expected {} fundamental-weight coordinates, got {}",
            t.rank(),
            c.len()
        )));
    }
    let inv = inverse_transposed_cartan(t);
    let mut coords = vec![Rat::zero(); t.rank()];
    for (j, &cj) in c.iter().enumerate() {
        if cj != 0 {
            for (i, coord) in coords.iter_mut().enumerate() {
                *coord += rat(cj) * inv.rows()[i][j];
            }
        }
    }
    Ok(Weight::new(coords))
}

/// True when all fundamental-weight coordinates of `w` are integers.
pub fn is_lattice_weight(t: LieType, w: &Weight) -> bool {
    all_integers(&fw_coords(t, w))
}

/// Simple reflection `s_i(w) = w - (w, alpha_i^vee) alpha_i`.
pub fn weyl_reflect(t: LieType, w: &Weight, i: usize) -> Result<Weight> {
    t.check_node(i)?;
    let a = cartan_matrix(t);
    let c = a.coroot_pairing_with_simple_rat(w.coords(), i);
    let mut coords = w.coords().to_vec();
    coords[i - 1] -= c;
    Ok(Weight::new(coords))
}

/// Orbit of `w` under the reflections `s_i`, `i` in `support`.
///
/// Returned in the `BTreeSet` order of coordinate vectors, which is
/// deterministic. An empty support yields the degenerate orbit `{w}`.
pub fn weyl_orbit(t: LieType, w: &Weight, support: &BTreeSet<usize>) -> Result<BTreeSet<Weight>> {
    for &i in support {
        t.check_node(i)?;
    }
    let a = cartan_matrix(t);
    let mut seen: BTreeSet<Weight> = BTreeSet::new();
    let mut frontier = vec![w.clone()];
    seen.insert(w.clone());
    while let Some(v) = frontier.pop() {
        for &i in support {
            let c = a.coroot_pairing_with_simple_rat(v.coords(), i);
            if c.is_zero() {
                continue;
            }
            let mut coords = v.coords().to_vec();
            coords[i - 1] -= c;
            let image = Weight::new(coords);
            if seen.insert(image.clone()) {
                frontier.push(image);
            }
        }
    }
    Ok(seen)
}

/// A finite weight multiset: weight -> positive multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedMultiset {
    pairs: BTreeMap<Weight, u64>,
}

impl WeightedMultiset {
    pub fn new() -> WeightedMultiset {
        WeightedMultiset {
            pairs: BTreeMap::new(),
        }
    }

    pub fn insert(&mut self, w: Weight, multiplicity: u64) {
        if multiplicity > 0 {
            *self.pairs.entry(w).or_insert(0) += multiplicity;
        }
    }

    pub fn multiplicity(&self, w: &Weight) -> u64 {
        self.pairs.get(w).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, u64)> {
        self.pairs.iter().map(|(w, &m)| (w, m))
    }

    pub fn total(&self) -> u64 {
        self.pairs.values().sum()
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

impl Default for WeightedMultiset {
    fn default() -> Self {
        WeightedMultiset::new()
    }
}

/// Positive roots supported on the given node subset: the positive system of
/// the Levi sub-root-system.
pub fn support_positive_roots(rs: &RootSystem, support: &BTreeSet<usize>) -> Vec<Root> {
    rs.positive_roots()
        .iter()
        .filter(|r| {
            r.coeffs()
                .iter()
                .enumerate()
                .all(|(idx, &c)| c == 0 || support.contains(&(idx + 1)))
        })
        .cloned()
        .collect()
}

/// Half the sum of the support's positive roots (`rho` of the Levi).
fn rho_of_support(rs: &RootSystem, support: &BTreeSet<usize>) -> Weight {
    let l = rs.rank();
    let mut acc = Weight::zero(l);
    for r in support_positive_roots(rs, support) {
        acc = acc.add(&Weight::from_root(&r));
    }
    acc.scaled(rat(1) / rat(2))
}

/// Replaces `w` by its unique dominant representative under the Weyl group
/// generated by the support reflections.
pub fn dominant_representative(
    t: LieType,
    w: &Weight,
    support: &BTreeSet<usize>,
) -> Result<Weight> {
    let a = cartan_matrix(t);
    for &i in support {
        t.check_node(i)?;
    }
    let mut v = w.clone();
    loop {
        let mut moved = false;
        for &i in support {
            let c = a.coroot_pairing_with_simple_rat(v.coords(), i);
            if c.is_negative() {
                let mut coords = v.coords().to_vec();
                coords[i - 1] -= c;
                v = Weight::new(coords);
                moved = true;
            }
        }
        if !moved {
            return Ok(v);
        }
    }
}

fn check_lattice(t: LieType, w: &Weight) -> Result<()> {
    if is_lattice_weight(t, w) {
        Ok(())
    } else {
        Err(Error::NotLatticeWeight(w.to_string()))
    }
}

/// The full weight multiset of the simple module of the support's Levi with
/// extreme weight `lambda`.
///
/// `lambda` is first replaced by its dominant representative (the weight
/// multiset of a simple module is Weyl-invariant, so this loses nothing),
/// Freudenthal's recursion computes multiplicities on the dominant cone, and
/// orbit expansion fills in the rest. Weights differ from `lambda` only in
/// support-root directions; any central component rides along in the ambient
/// coordinates.
pub fn module_weights(
    rs: &RootSystem,
    support: &BTreeSet<usize>,
    lambda: &Weight,
) -> Result<WeightedMultiset> {
    let t = rs.lie_type();
    check_lattice(t, lambda)?;
    let lambda_plus = dominant_representative(t, lambda, support)?;

    let mut out = WeightedMultiset::new();
    if support.is_empty() {
        out.insert(lambda_plus, 1);
        return Ok(out);
    }

    let positive = support_positive_roots(rs, support);
    let rho = rho_of_support(rs, support);
    let cartan = rs.cartan();

    let norm_shifted = |w: &Weight| -> Rat {
        let shifted = w.add(&rho);
        rs.form(shifted.coords(), shifted.coords())
    };
    let top_norm = norm_shifted(&lambda_plus);

    // Candidate cone: everything reachable from lambda_plus by subtracting
    // support simple roots while (mu + rho, mu + rho) stays bounded by the
    // top value. Every weight of the module passes this filter, and the
    // weight support is connected under single simple-root steps, so the
    // search is exhaustive. Non-weights picked up here get multiplicity 0
    // from the recursion.
    let mut visited: BTreeSet<Weight> = BTreeSet::new();
    let mut frontier = vec![lambda_plus.clone()];
    visited.insert(lambda_plus.clone());
    while let Some(v) = frontier.pop() {
        for &i in support {
            let mut coords = v.coords().to_vec();
            coords[i - 1] -= Rat::one();
            let down = Weight::new(coords);
            if norm_shifted(&down) <= top_norm && visited.insert(down.clone()) {
                frontier.push(down);
            }
        }
    }

    let dominant_on_support = |w: &Weight| -> bool {
        support.iter().all(|&i| {
            !cartan
                .coroot_pairing_with_simple_rat(w.coords(), i)
                .is_negative()
        })
    };
    let mut dominants: Vec<Weight> = visited
        .iter()
        .filter(|w| dominant_on_support(w))
        .cloned()
        .collect();
    // Depth below lambda_plus (an integer); the recursion for a weight only
    // consults strictly smaller depths.
    let depth = |w: &Weight| -> Rat {
        lambda_plus
            .coords()
            .iter()
            .zip(w.coords())
            .map(|(a, b)| a - b)
            .fold(Rat::zero(), |acc, x| acc + x)
    };
    dominants.sort_by_key(|w| (depth(w), w.coords().to_vec()));

    let within_cone = |w: &Weight| -> bool {
        lambda_plus
            .coords()
            .iter()
            .zip(w.coords())
            .all(|(a, b)| !(a - b).is_negative())
    };

    let mut mult: BTreeMap<Weight, Rat> = BTreeMap::new();
    for mu in &dominants {
        if *mu == lambda_plus {
            mult.insert(mu.clone(), Rat::one());
            continue;
        }
        let denominator = top_norm - norm_shifted(mu);
        debug_assert!(denominator.is_positive());
        let mut numerator = Rat::zero();
        for beta in &positive {
            let beta_w = Weight::from_root(beta);
            let mut nu = mu.add(&beta_w);
            while within_cone(&nu) {
                let rep = dominant_representative(t, &nu, support)?;
                if let Some(m) = mult.get(&rep) {
                    if !m.is_zero() {
                        numerator += *m * rs.form(nu.coords(), beta_w.coords());
                    }
                }
                nu = nu.add(&beta_w);
            }
        }
        let m = rat(2) * numerator / denominator;
        debug_assert!(m.is_integer() && !m.is_negative(), "Freudenthal gave {m}");
        if !m.is_zero() {
            mult.insert(mu.clone(), m);
        }
    }

    for (mu, m) in &mult {
        if m.is_zero() {
            continue;
        }
        let multiplicity = m.to_integer() as u64;
        for w in weyl_orbit(t, mu, support)? {
            out.insert(w, multiplicity);
        }
    }
    Ok(out)
}

/// Dimension of the simple Levi module with extreme weight `lambda`, by the
/// Weyl dimension formula over the support's positive roots.
///
/// Kept independent of [`module_weights`] so the two can cross-check each
/// other.
pub fn weyl_dimension(rs: &RootSystem, support: &BTreeSet<usize>, lambda: &Weight) -> Result<u64> {
    let t = rs.lie_type();
    check_lattice(t, lambda)?;
    let lambda_plus = dominant_representative(t, lambda, support)?;
    let rho = rho_of_support(rs, support);
    let shifted = lambda_plus.add(&rho);
    let mut dim = Rat::one();
    for beta in support_positive_roots(rs, support) {
        let b = beta.to_rat();
        dim *= rs.form(shifted.coords(), &b) / rs.form(rho.coords(), &b);
    }
    debug_assert!(dim.is_integer() && dim.is_positive());
    Ok(dim.to_integer() as u64)
}
