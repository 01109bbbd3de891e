//! Root-system generation and highest-root combinatorics.
//!
//! Positive roots are generated from the Cartan matrix alone by breadth-first
//! root-string closure: a candidate `beta + alpha_i` is a root exactly when
//! `p - (beta, alpha_i^vee) >= 1`, where `p` is the number of steps the
//! `alpha_i`-string extends below `beta`. No per-type case analysis is used;
//! the classical root counts serve as test oracles instead.

use std::collections::BTreeSet;

use num_traits::Zero;

use crate::error::Error;
use crate::lie::{
    cartan_matrix, symmetrized_gram, symmetrizer, CartanMatrix, LieType, Symmetrizer,
};
use crate::rat::{rat, Rat};
use crate::Result;

/// A root written in the simple-root basis: `alpha = sum n_i alpha_i`.
///
/// The coefficient vector is never zero and has a consistent sign (all
/// entries `>= 0` for positive roots, all `<= 0` for negative ones).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Root {
    coeffs: Vec<i64>,
}

impl Root {
    pub(crate) fn from_coeffs(coeffs: Vec<i64>) -> Root {
        debug_assert!(coeffs.iter().any(|&c| c != 0));
        debug_assert!(
            coeffs.iter().all(|&c| c >= 0) || coeffs.iter().all(|&c| c <= 0),
            "mixed-sign coefficient vector is not a root"
        );
        Root { coeffs }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Coefficient of `alpha_i` (1-based).
    pub fn coeff(&self, i: usize) -> i64 {
        self.coeffs[i - 1]
    }

    /// Height: the sum of the coefficients.
    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn negated(&self) -> Root {
        Root {
            coeffs: self.coeffs.iter().map(|&c| -c).collect(),
        }
    }

    pub fn is_positive(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0) && self.coeffs.iter().any(|&c| c > 0)
    }

    /// The coefficients as exact rationals (for form evaluations).
    pub fn to_rat(&self) -> Vec<Rat> {
        self.coeffs.iter().map(|&c| rat(c)).collect()
    }
}

impl std::fmt::Display for Root {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let body: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", body.join(","))
    }
}

/// The root system of a simple Lie type: the positive roots in canonical
/// order (height ascending, then lexicographic), the highest root, and the
/// bilinear form data needed for coroot pairings.
///
/// Immutable after generation; all queries are pure.
#[derive(Debug, Clone)]
pub struct RootSystem {
    lie_type: LieType,
    cartan: CartanMatrix,
    sym: Symmetrizer,
    gram: Vec<Vec<Rat>>,
    positive: Vec<Root>,
    positive_set: BTreeSet<Vec<i64>>,
    highest: Root,
}

impl RootSystem {
    /// Generates the full positive system by root-string closure.
    pub fn generate(t: LieType) -> RootSystem {
        let cartan = cartan_matrix(t);
        let l = t.rank();
        let mut set: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut current: Vec<Vec<i64>> = Vec::new();
        for i in 0..l {
            let mut v = vec![0i64; l];
            v[i] = 1;
            set.insert(v.clone());
            current.push(v);
        }
        while !current.is_empty() {
            let mut next: BTreeSet<Vec<i64>> = BTreeSet::new();
            for beta in &current {
                for i in 1..=l {
                    // p = depth of the alpha_i-string below beta; all lower
                    // string members are already known.
                    let mut p = 0i64;
                    let mut probe = beta.clone();
                    loop {
                        probe[i - 1] -= 1;
                        if probe[i - 1] >= 0 && set.contains(&probe) {
                            p += 1;
                        } else {
                            break;
                        }
                    }
                    let pairing = cartan.coroot_pairing_with_simple(beta, i);
                    if p - pairing >= 1 {
                        let mut up = beta.clone();
                        up[i - 1] += 1;
                        if !set.contains(&up) {
                            next.insert(up);
                        }
                    }
                }
            }
            set.extend(next.iter().cloned());
            current = next.into_iter().collect();
        }

        let mut positive: Vec<Root> = set.iter().cloned().map(Root::from_coeffs).collect();
        positive.sort_by_key(|r| (r.height(), r.coeffs.clone()));
        let highest = positive.last().expect("nonempty root system").clone();
        // The highest root dominates every positive root coefficientwise and
        // is supported on the whole diagram.
        debug_assert!(positive.iter().all(|r| dominates(&highest, r)));
        debug_assert!(highest.coeffs.iter().all(|&c| c >= 1));

        RootSystem {
            lie_type: t,
            cartan,
            sym: symmetrizer(t),
            gram: symmetrized_gram(t),
            positive_set: set,
            positive,
            highest,
        }
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.lie_type.rank()
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    pub fn symmetrizer(&self) -> &Symmetrizer {
        &self.sym
    }

    /// Positive roots in canonical order (height, then lexicographic).
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    /// All roots: positive ones followed by their negatives.
    pub fn all_roots(&self) -> Vec<Root> {
        let mut out = self.positive.clone();
        out.extend(self.positive.iter().map(Root::negated));
        out
    }

    pub fn num_roots(&self) -> usize {
        2 * self.positive.len()
    }

    /// The highest root `theta`.
    pub fn highest_root(&self) -> &Root {
        &self.highest
    }

    pub fn simple_root(&self, i: usize) -> Result<Root> {
        self.lie_type.check_node(i)?;
        let mut v = vec![0i64; self.rank()];
        v[i - 1] = 1;
        Ok(Root::from_coeffs(v))
    }

    /// Membership test for arbitrary coefficient vectors.
    pub fn is_root(&self, coeffs: &[i64]) -> bool {
        if coeffs.len() != self.rank() {
            return false;
        }
        if self.positive_set.contains(coeffs) {
            return true;
        }
        let neg: Vec<i64> = coeffs.iter().map(|&c| -c).collect();
        self.positive_set.contains(&neg)
    }

    pub(crate) fn check_root(&self, r: &Root) -> Result<()> {
        if self.is_root(r.coeffs()) {
            Ok(())
        } else {
            Err(Error::NotARoot(r.to_string()))
        }
    }

    /// The symmetrized bilinear form on rational vectors in the simple-root
    /// basis, normalized so long roots have squared length 2.
    pub fn form(&self, x: &[Rat], y: &[Rat]) -> Rat {
        let mut acc = Rat::zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if !yj.is_zero() {
                    acc += *xi * *yj * self.gram[i][j];
                }
            }
        }
        acc
    }

    /// `(beta, alpha^vee) = 2 (beta, alpha) / (alpha, alpha)` for an
    /// arbitrary rational vector `beta` and a root `alpha` of this system.
    pub fn coroot_pairing(&self, beta: &[Rat], alpha: &Root) -> Result<Rat> {
        self.check_root(alpha)?;
        let a = alpha.to_rat();
        Ok(rat(2) * self.form(beta, &a) / self.form(&a, &a))
    }

    /// Root-against-root coroot pairing, always an integer.
    pub fn root_coroot_pairing(&self, beta: &Root, alpha: &Root) -> Result<i64> {
        let value = self.coroot_pairing(&beta.to_rat(), alpha)?;
        debug_assert!(value.is_integer());
        Ok(value.to_integer())
    }

    /// Simple reflection `s_i(beta) = beta - (beta, alpha_i^vee) alpha_i`
    /// applied to a root.
    pub fn reflect_root(&self, beta: &Root, i: usize) -> Result<Root> {
        self.lie_type.check_node(i)?;
        self.check_root(beta)?;
        let mut coeffs = beta.coeffs.clone();
        coeffs[i - 1] -= self.cartan.coroot_pairing_with_simple(&beta.coeffs, i);
        Ok(Root::from_coeffs(coeffs))
    }

    /// `(alpha_i, theta^vee)` for every node, 1-based positions `1..=rank`.
    pub fn simple_theta_pairings(&self) -> Vec<i64> {
        let theta = self.highest.clone();
        (1..=self.rank())
            .map(|i| {
                let alpha_i = self.simple_root(i).expect("valid node");
                self.root_coroot_pairing(&alpha_i, &theta).expect("roots")
            })
            .collect()
    }

    /// The nodes not orthogonal to the highest root, with their pairings
    /// `(alpha_i, theta^vee)`.
    ///
    /// For non-A types this is a single node pairing to 1; for `A_l` with
    /// `l >= 2` the two end nodes, each pairing to 1; for `A1` the single
    /// node with pairing 2.
    pub fn special_nodes(&self) -> Vec<(usize, i64)> {
        self.simple_theta_pairings()
            .iter()
            .enumerate()
            .filter(|(_, &p)| p != 0)
            .map(|(idx, &p)| (idx + 1, p))
            .collect()
    }

    /// `(beta, theta^vee)` for a root, via the precomputable linear form.
    pub fn theta_coroot_pairing(&self, beta: &Root) -> Result<i64> {
        self.check_root(beta)?;
        let pairings = self.simple_theta_pairings();
        Ok(beta
            .coeffs
            .iter()
            .zip(&pairings)
            .map(|(&n, &p)| n * p)
            .sum())
    }
}

fn dominates(a: &Root, b: &Root) -> bool {
    a.coeffs.iter().zip(&b.coeffs).all(|(x, y)| x >= y)
}
