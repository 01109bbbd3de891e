//! Simple Lie types, their Cartan matrices, and the symmetrizing form.
//!
//! Simple roots are indexed `1..=rank` throughout the public API. The default
//! labeling is the one of Onishchik–Vinberg (OV), realized here as explicit
//! Cartan matrices; [`bourbaki_cartan_matrix`] and [`labeling_bridge`] relate
//! it to the Bourbaki numbering. The two conventions agree on the classical
//! types and on G2; for E6/E7/E8 the OV labels run along the long chain with
//! the branch node last, and for F4 the OV order is the reversal of
//! Bourbaki's (short roots first).

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::rat::{frac, rat, Rat};
use crate::Result;

/// One of the seven families of simple Lie algebras.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
    ];

    /// Human-readable description of the valid rank range.
    pub fn rank_range(self) -> &'static str {
        match self {
            Family::A => "l >= 1",
            Family::B => "l >= 2",
            Family::C => "l >= 2",
            Family::D => "l >= 4",
            Family::E => "l in {6, 7, 8}",
            Family::F => "l = 4",
            Family::G => "l = 2",
        }
    }

    fn rank_valid(self, rank: usize) -> bool {
        match self {
            Family::A => rank >= 1,
            Family::B => rank >= 2,
            Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Family> {
        match c.to_ascii_uppercase() {
            'A' => Some(Family::A),
            'B' => Some(Family::B),
            'C' => Some(Family::C),
            'D' => Some(Family::D),
            'E' => Some(Family::E),
            'F' => Some(Family::F),
            'G' => Some(Family::G),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A validated simple Lie type, e.g. `B4` or `E7`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct LieType {
    family: Family,
    rank: usize,
}

impl LieType {
    /// Validates the rank against the family's range table.
    ///
    /// `D3` is rejected rather than aliased to `A3`, keeping the ranges
    /// unambiguous.
    pub fn new(family: Family, rank: usize) -> Result<LieType> {
        if family.rank_valid(rank) {
            Ok(LieType { family, rank })
        } else {
            Err(Error::InvalidRank {
                family,
                rank,
                expected: family.rank_range(),
            })
        }
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    /// Checks a 1-based node index against the rank.
    pub fn check_node(self, index: usize) -> Result<()> {
        if (1..=self.rank).contains(&index) {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index,
                rank: self.rank,
            })
        }
    }

    /// Parses `"B4"`, `"g2"`, ... (a family letter followed by the rank).
    pub fn parse(s: &str) -> Result<LieType> {
        let mut chars = s.chars();
        let letter = chars.next().and_then(Family::from_letter);
        let rank: Option<usize> = chars.as_str().parse().ok();
        match (letter, rank) {
            (Some(f), Some(r)) => LieType::new(f, r),
            _ => Err(Error::OutOfRange(format!(
                "cannot parse Lie type from {s:?}: expected a family letter A-G followed by the rank"
            ))),
        }
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// Every valid simple type with rank at most `max_rank`, in a fixed order
/// (A first, then B, C, D, E, F, G; ranks ascending).
pub fn all_types(max_rank: usize) -> Vec<LieType> {
    let mut out = Vec::new();
    for family in Family::ALL {
        for rank in 1..=max_rank {
            if let Ok(t) = LieType::new(family, rank) {
                out.push(t);
            }
        }
    }
    out
}

/// Integer Cartan matrix with entries `a[i][j] = (alpha_i, alpha_j^vee)`
/// (indices 0-based in storage, 1-based in the accessors).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanMatrix {
    rank: usize,
    entries: Vec<Vec<i64>>,
}

impl CartanMatrix {
    fn from_edges(rank: usize, edges: &[(usize, usize, i64, i64)]) -> CartanMatrix {
        let mut entries = vec![vec![0i64; rank]; rank];
        for (i, row) in entries.iter_mut().enumerate() {
            row[i] = 2;
        }
        for &(i, j, a_ij, a_ji) in edges {
            entries[i - 1][j - 1] = a_ij;
            entries[j - 1][i - 1] = a_ji;
        }
        CartanMatrix { rank, entries }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Entry `(alpha_i, alpha_j^vee)`, 1-based.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i - 1][j - 1]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.entries
    }

    /// `(beta, alpha_i^vee)` for `beta` given by simple-root coefficients.
    pub fn coroot_pairing_with_simple(&self, beta: &[i64], i: usize) -> i64 {
        beta.iter()
            .enumerate()
            .map(|(k, &n)| n * self.entries[k][i - 1])
            .sum()
    }

    /// Same as [`Self::coroot_pairing_with_simple`] for rational coefficients.
    pub fn coroot_pairing_with_simple_rat(&self, beta: &[Rat], i: usize) -> Rat {
        beta.iter()
            .enumerate()
            .map(|(k, c)| c * rat(self.entries[k][i - 1]))
            .fold(Rat::zero(), |acc, x| acc + x)
    }
}

/// The Cartan matrix of `t` in the Onishchik–Vinberg labeling.
///
/// Classical families use the standard realizations (chains, with the short
/// root last for B and the long root last for C, and the fork at node
/// `rank-2` for D). For E6/E7/E8 the nodes `1..rank-1` form the long chain
/// and node `rank` hangs off node `rank-3`; F4 has its two short roots
/// first; G2 has the short root first.
pub fn cartan_matrix(t: LieType) -> CartanMatrix {
    let l = t.rank();
    let chain = |upto: usize| -> Vec<(usize, usize, i64, i64)> {
        (1..upto).map(|i| (i, i + 1, -1, -1)).collect()
    };
    let edges: Vec<(usize, usize, i64, i64)> = match t.family() {
        Family::A => chain(l),
        Family::B => {
            let mut e = chain(l - 1);
            e.push((l - 1, l, -2, -1)); // alpha_l is the short root
            e
        }
        Family::C => {
            let mut e = chain(l - 1);
            e.push((l - 1, l, -1, -2)); // alpha_l is the long root
            e
        }
        Family::D => {
            let mut e = chain(l - 1);
            e.push((l - 2, l, -1, -1));
            e
        }
        Family::E => {
            let mut e = chain(l - 1);
            e.push((l - 3, l, -1, -1));
            e
        }
        Family::F => vec![(1, 2, -1, -1), (2, 3, -1, -2), (3, 4, -1, -1)],
        Family::G => vec![(1, 2, -1, -3)], // alpha_1 short, alpha_2 long
    };
    CartanMatrix::from_edges(l, &edges)
}

/// The Cartan matrix of `t` in the Bourbaki labeling (Plates I-IX).
pub fn bourbaki_cartan_matrix(t: LieType) -> CartanMatrix {
    let l = t.rank();
    let edges: Vec<(usize, usize, i64, i64)> = match t.family() {
        // Classical types and G2 carry the same labels in both conventions.
        Family::A | Family::B | Family::C | Family::D | Family::G => {
            return cartan_matrix(t);
        }
        Family::E => {
            // Chain 1-3-4-...-l with node 2 attached to node 4.
            let mut e: Vec<(usize, usize, i64, i64)> = vec![(1, 3, -1, -1), (2, 4, -1, -1)];
            e.extend((3..l).map(|i| (i, i + 1, -1, -1)));
            e
        }
        Family::F => vec![(1, 2, -1, -1), (2, 3, -2, -1), (3, 4, -1, -1)],
    };
    CartanMatrix::from_edges(l, &edges)
}

/// Maps an OV node index to the Bourbaki index of the same node, 1-based.
pub fn labeling_bridge(t: LieType, i: usize) -> Result<usize> {
    t.check_node(i)?;
    Ok(bridge_table(t)[i - 1])
}

/// Inverse of [`labeling_bridge`]: Bourbaki index to OV index.
pub fn labeling_bridge_inverse(t: LieType, i: usize) -> Result<usize> {
    t.check_node(i)?;
    let table = bridge_table(t);
    // The table is a permutation of 1..=rank, so the position is unique.
    Ok(table.iter().position(|&b| b == i).expect("permutation") + 1)
}

fn bridge_table(t: LieType) -> Vec<usize> {
    let l = t.rank();
    match (t.family(), l) {
        (Family::E, 6) => vec![1, 3, 4, 5, 6, 2],
        (Family::E, 7) => vec![7, 6, 5, 4, 3, 1, 2],
        (Family::E, 8) => vec![8, 7, 6, 5, 4, 3, 1, 2],
        (Family::F, _) => vec![4, 3, 2, 1],
        _ => (1..=l).collect(),
    }
}

/// The diagonal `d` making `diag(d) * A` symmetric, normalized so long roots
/// have squared length 2 (equivalently `max(d) = 1`); `d_i = (alpha_i,
/// alpha_i) / 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Symmetrizer {
    d: Vec<Rat>,
}

impl Symmetrizer {
    pub fn entries(&self) -> &[Rat] {
        &self.d
    }

    /// Squared length of `alpha_i` under the normalized form, 1-based.
    pub fn root_length_sq(&self, i: usize) -> Rat {
        self.d[i - 1] * rat(2)
    }
}

/// Solves `d_i A_ij = d_j A_ji` along the (connected) diagram and rescales
/// so that `max(d) = 1`.
pub fn symmetrizer(t: LieType) -> Symmetrizer {
    let a = cartan_matrix(t);
    let l = t.rank();
    let mut d: Vec<Option<Rat>> = vec![None; l];
    d[0] = Some(Rat::one());
    let mut queue = vec![0usize];
    while let Some(i) = queue.pop() {
        let di = d[i].expect("visited");
        for j in (0..l).filter(|&j| j != i) {
            if a.entries[i][j] != 0 && d[j].is_none() {
                d[j] = Some(di * frac(a.entries[j][i], a.entries[i][j]));
                queue.push(j);
            }
        }
    }
    let mut d: Vec<Rat> = d
        .into_iter()
        .map(|x| x.expect("connected diagram"))
        .collect();
    let max = d.iter().copied().max().expect("nonempty");
    for x in &mut d {
        *x /= max;
    }
    debug_assert!(d.iter().all(Rat::is_positive));
    Symmetrizer { d }
}

/// The symmetrized Gram matrix `S_ij = (alpha_i, alpha_j) = d_j A_ij`.
pub fn symmetrized_gram(t: LieType) -> Vec<Vec<Rat>> {
    let a = cartan_matrix(t);
    let d = symmetrizer(t);
    (0..t.rank())
        .map(|i| {
            (0..t.rank())
                .map(|j| d.d[j] * rat(a.entries[i][j]))
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_validation() {
        assert!(LieType::new(Family::A, 1).is_ok());
        assert!(LieType::new(Family::G, 2).is_ok());
        assert_eq!(
            LieType::new(Family::F, 5),
            Err(Error::InvalidRank {
                family: Family::F,
                rank: 5,
                expected: "l = 4"
            })
        );
        assert!(LieType::new(Family::D, 3).is_err());
        assert!(LieType::new(Family::B, 1).is_err());
        assert!(LieType::new(Family::E, 9).is_err());
        assert!(LieType::new(Family::A, 0).is_err());
    }

    #[test]
    fn parse_round_trip() {
        for t in all_types(9) {
            assert_eq!(LieType::parse(&t.to_string()).unwrap(), t);
        }
        assert!(LieType::parse("H3").is_err());
        assert!(LieType::parse("B").is_err());
        assert!(LieType::parse("7").is_err());
    }

    fn lt(f: Family, r: usize) -> LieType {
        LieType::new(f, r).unwrap()
    }

    #[test]
    fn small_cartan_matrices() {
        assert_eq!(cartan_matrix(lt(Family::A, 1)).rows(), &[vec![2]]);
        assert_eq!(
            cartan_matrix(lt(Family::A, 2)).rows(),
            &[vec![2, -1], vec![-1, 2]]
        );
        // G2 in the OV labeling: alpha_1 short, alpha_2 long.
        let g2 = cartan_matrix(lt(Family::G, 2));
        assert_eq!(g2.rows(), &[vec![2, -1], vec![-3, 2]]);
        assert_eq!(g2.entry(1, 2) * g2.entry(2, 1), 3);
        // F4 in the OV labeling is the reversal of Bourbaki's.
        assert_eq!(
            cartan_matrix(lt(Family::F, 4)).rows(),
            &[
                vec![2, -1, 0, 0],
                vec![-1, 2, -1, 0],
                vec![0, -2, 2, -1],
                vec![0, 0, -1, 2]
            ]
        );
        assert_eq!(
            cartan_matrix(lt(Family::B, 3)).rows(),
            &[vec![2, -1, 0], vec![-1, 2, -2], vec![0, -1, 2]]
        );
        assert_eq!(
            cartan_matrix(lt(Family::C, 3)).rows(),
            &[vec![2, -1, 0], vec![-1, 2, -1], vec![0, -2, 2]]
        );
    }

    #[test]
    fn cartan_matrix_invariants_to_rank_9() {
        for t in all_types(9) {
            let a = cartan_matrix(t);
            let l = t.rank();
            for i in 1..=l {
                assert_eq!(a.entry(i, i), 2, "{t}: diagonal");
                for j in 1..=l {
                    if i != j {
                        assert!((-3..=0).contains(&a.entry(i, j)), "{t}: off-diagonal range");
                        assert_eq!(
                            a.entry(i, j) == 0,
                            a.entry(j, i) == 0,
                            "{t}: zero pattern symmetric"
                        );
                    }
                }
            }
            // Determinism: building twice gives the same matrix.
            assert_eq!(a, cartan_matrix(t));
        }
    }

    #[test]
    fn symmetrized_gram_is_symmetric_positive_definite() {
        for t in all_types(9) {
            let s = symmetrized_gram(t);
            let l = t.rank();
            for (i, row) in s.iter().enumerate() {
                for (j, x) in row.iter().enumerate() {
                    assert_eq!(*x, s[j][i], "{t}: gram symmetric");
                }
            }
            // Sylvester's criterion with exact leading principal minors.
            for k in 1..=l {
                let minor: Vec<Vec<Rat>> = s[..k].iter().map(|row| row[..k].to_vec()).collect();
                assert!(determinant(minor).is_positive(), "{t}: minor {k}");
            }
        }
    }

    fn determinant(mut m: Vec<Vec<Rat>>) -> Rat {
        let n = m.len();
        let mut det = Rat::one();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !m[r][col].is_zero());
            let Some(pivot) = pivot else {
                return Rat::zero();
            };
            if pivot != col {
                m.swap(pivot, col);
                det = -det;
            }
            det *= m[col][col];
            let inv = Rat::one() / m[col][col];
            let pivot_row = m[col].clone();
            for row in m.iter_mut().skip(col + 1) {
                let factor = row[col] * inv;
                for (c, pivot_val) in pivot_row.iter().enumerate().skip(col) {
                    row[c] -= factor * *pivot_val;
                }
            }
        }
        det
    }

    #[test]
    fn symmetrizer_values() {
        assert_eq!(symmetrizer(lt(Family::A, 2)).entries(), &[rat(1), rat(1)]);
        assert_eq!(
            symmetrizer(lt(Family::E, 7)).entries(),
            &vec![rat(1); 7][..]
        );
        // B: short root (the last one) has d = 1/2.
        assert_eq!(
            symmetrizer(lt(Family::B, 4)).entries(),
            &[rat(1), rat(1), rat(1), frac(1, 2)]
        );
        assert_eq!(
            symmetrizer(lt(Family::C, 3)).entries(),
            &[frac(1, 2), frac(1, 2), rat(1)]
        );
        assert_eq!(
            symmetrizer(lt(Family::F, 4)).entries(),
            &[frac(1, 2), frac(1, 2), rat(1), rat(1)]
        );
        assert_eq!(
            symmetrizer(lt(Family::G, 2)).entries(),
            &[frac(1, 3), rat(1)]
        );
    }

    #[test]
    fn symmetrizer_entries_in_expected_set() {
        for t in all_types(9) {
            let d = symmetrizer(t);
            for x in d.entries() {
                assert!(
                    [rat(1), frac(1, 2), frac(1, 3)].contains(x),
                    "{t}: d entry {x}"
                );
            }
            let all_ones = d.entries().iter().all(|x| *x == rat(1));
            let simply_laced = matches!(t.family(), Family::A | Family::D | Family::E);
            assert_eq!(all_ones, simply_laced, "{t}: simply laced iff d all ones");
        }
    }

    #[test]
    fn bridge_is_permutation_and_involution() {
        for t in all_types(9) {
            for i in 1..=t.rank() {
                let b = labeling_bridge(t, i).unwrap();
                assert!((1..=t.rank()).contains(&b));
                assert_eq!(labeling_bridge_inverse(t, b).unwrap(), i);
            }
            assert!(labeling_bridge(t, 0).is_err());
            assert!(labeling_bridge(t, t.rank() + 1).is_err());
        }
    }

    #[test]
    fn bridge_is_a_diagram_isomorphism() {
        // Stronger than adjacency preservation: the bridge carries the OV
        // matrix entry-for-entry onto the Bourbaki one.
        for t in all_types(9) {
            let ov = cartan_matrix(t);
            let bb = bourbaki_cartan_matrix(t);
            for i in 1..=t.rank() {
                let bi = labeling_bridge(t, i).unwrap();
                for j in 1..=t.rank() {
                    let bj = labeling_bridge(t, j).unwrap();
                    assert_eq!(ov.entry(i, j), bb.entry(bi, bj), "{t}: ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn bridge_fixed_points_of_interest() {
        // F4: OV node 4 is Bourbaki node 1.
        assert_eq!(labeling_bridge(lt(Family::F, 4), 4).unwrap(), 1);
        // G2: OV node 2 (the long root, adjacent to the affine node) keeps
        // its Bourbaki index.
        assert_eq!(labeling_bridge(lt(Family::G, 2), 2).unwrap(), 2);
        // A: identity.
        for i in 1..=5 {
            assert_eq!(labeling_bridge(lt(Family::A, 5), i).unwrap(), i);
        }
    }
}
