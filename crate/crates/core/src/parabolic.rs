//! Parabolic markings and splitting types on the curves `C_alpha`.
//!
//! A nonempty subset `Delta_1` of simple roots grades the root system by
//! `n_{Delta_1}(alpha) = sum of alpha's coefficients over Delta_1`, splitting
//! `Phi` into negative, zero and positive parts. The positive part indexes
//! the tangent space of `G/P`, and the tangent bundle restricted to the
//! curve `C_alpha` splits as the line bundles `O((beta, alpha^vee))` over
//! `beta` in the positive part. A splitting is unbendable exactly when the
//! degrees lie in `{0, 1, 2}` with a single 2.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::lie::LieType;
use crate::roots::{Root, RootSystem};
use crate::Result;

/// A nonempty set `Delta_1` of marked simple roots, defining the parabolic
/// `p_{Delta_1}` and the variety `G/P`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParabolicMarking {
    lie_type: LieType,
    marked: BTreeSet<usize>,
}

impl ParabolicMarking {
    pub fn new(lie_type: LieType, marked: impl IntoIterator<Item = usize>) -> Result<Self> {
        let marked: BTreeSet<usize> = marked.into_iter().collect();
        if marked.is_empty() {
            return Err(Error::OutOfRange(
                "a parabolic marking needs at least one marked node".into(),
            ));
        }
        for &i in &marked {
            lie_type.check_node(i)?;
        }
        Ok(ParabolicMarking { lie_type, marked })
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn marked(&self) -> &BTreeSet<usize> {
        &self.marked
    }

    pub fn describe(&self) -> String {
        let body: Vec<String> = self.marked.iter().map(ToString::to_string).collect();
        format!("{{{}}}", body.join(","))
    }
}

/// `n_{Delta_1}(beta)`: the sum of `beta`'s coefficients over the marked
/// nodes.
pub fn n_coeff(rs: &RootSystem, marking: &ParabolicMarking, beta: &Root) -> Result<i64> {
    rs.check_root(beta)?;
    Ok(marking.marked().iter().map(|&i| beta.coeff(i)).sum())
}

/// The grading partition of the full root set.
#[derive(Debug, Clone)]
pub struct Partition {
    pub negative: Vec<Root>,
    pub zero: Vec<Root>,
    pub positive: Vec<Root>,
}

/// Splits `Phi` by the sign of `n_{Delta_1}`.
pub fn partition(rs: &RootSystem, marking: &ParabolicMarking) -> Partition {
    let mut negative = Vec::new();
    let mut zero = Vec::new();
    let mut positive = Vec::new();
    for root in rs.all_roots() {
        let n: i64 = marking.marked().iter().map(|&i| root.coeff(i)).sum();
        match n.cmp(&0) {
            std::cmp::Ordering::Less => negative.push(root),
            std::cmp::Ordering::Equal => zero.push(root),
            std::cmp::Ordering::Greater => positive.push(root),
        }
    }
    Partition {
        negative,
        zero,
        positive,
    }
}

/// A descending multiset of line-bundle degrees.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplittingType {
    degrees: Vec<i64>,
}

impl SplittingType {
    pub fn new(mut degrees: Vec<i64>) -> SplittingType {
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        SplittingType { degrees }
    }

    /// Degrees in non-increasing order.
    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn sum(&self) -> i64 {
        self.degrees.iter().sum()
    }

    /// Merge with another splitting (direct sum of bundles).
    pub fn merged(&self, other: &SplittingType) -> SplittingType {
        let mut degrees = self.degrees.clone();
        degrees.extend_from_slice(&other.degrees);
        SplittingType::new(degrees)
    }

    /// Run-length encoding `[(degree, count)]`, degrees descending.
    pub fn run_lengths(&self) -> Vec<(i64, usize)> {
        let mut out: Vec<(i64, usize)> = Vec::new();
        for &d in &self.degrees {
            match out.last_mut() {
                Some((deg, count)) if *deg == d => *count += 1,
                _ => out.push((d, 1)),
            }
        }
        out
    }

    pub fn classify(&self) -> Classification {
        if self.degrees.iter().any(|&d| d < 0) {
            return Classification::NotNonnegative;
        }
        let twos = self.degrees.iter().filter(|&&d| d == 2).count();
        let in_range = self.degrees.iter().all(|&d| (0..=2).contains(&d));
        if in_range && twos == 1 {
            Classification::Unbendable {
                ones: self.degrees.iter().filter(|&&d| d == 1).count(),
                zeros: self.degrees.iter().filter(|&&d| d == 0).count(),
            }
        } else {
            Classification::NonnegativeNotUnbendable
        }
    }
}

impl fmt::Display for SplittingType {
    /// Compact `O(2) + O(1)^3 + O^2` style rendering.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degrees.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .run_lengths()
            .into_iter()
            .map(|(d, c)| {
                let base = if d == 0 {
                    "O".to_string()
                } else {
                    format!("O({d})")
                };
                if c == 1 {
                    base
                } else {
                    format!("{base}^{c}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Outcome of [`SplittingType::classify`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    /// `O(2) + O(1)^p + O^q`: degrees in `{0, 1, 2}` with exactly one 2.
    Unbendable { ones: usize, zeros: usize },
    /// All degrees nonnegative, but not of the unbendable shape.
    NonnegativeNotUnbendable,
    /// Some degree is negative.
    NotNonnegative,
}

impl Classification {
    pub fn is_unbendable(&self) -> bool {
        matches!(self, Classification::Unbendable { .. })
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::Unbendable { ones, zeros } => {
                write!(f, "unbendable(p={ones}, q={zeros})")
            }
            Classification::NonnegativeNotUnbendable => write!(f, "nonnegative, not unbendable"),
            Classification::NotNonnegative => write!(f, "not nonnegative"),
        }
    }
}

/// Splitting type of `T(G/P)` restricted to `C_alpha`: the multiset
/// `{(beta, alpha^vee) : beta in Phi^+_{Delta_1}}`.
///
/// Fails with [`Error::CurveContracted`] when `n_{Delta_1}(alpha) = 0`, i.e.
/// when the curve maps to a point of `G/P`.
pub fn tangent_splitting(
    rs: &RootSystem,
    marking: &ParabolicMarking,
    alpha: &Root,
) -> Result<SplittingType> {
    rs.check_root(alpha)?;
    let grading: i64 = marking.marked().iter().map(|&i| alpha.coeff(i)).sum();
    if grading == 0 {
        return Err(Error::CurveContracted {
            alpha: alpha.to_string(),
            marked: marking.describe(),
        });
    }
    let mut degrees = Vec::new();
    for beta in rs.positive_roots() {
        let n: i64 = marking.marked().iter().map(|&i| beta.coeff(i)).sum();
        if n > 0 {
            degrees.push(rs.root_coroot_pairing(beta, alpha)?);
        }
    }
    Ok(SplittingType::new(degrees))
}

/// One row of an unbendability sweep: the marking, the splitting of
/// `T(G/P)` on the highest-root curve, and its classification.
#[derive(Debug, Clone)]
pub struct MarkingCertificate {
    pub marked: Vec<usize>,
    pub splitting: SplittingType,
    pub classification: Classification,
    /// `dim G/P = |Phi^+_{Delta_1}|`.
    pub dim_gp: usize,
}

/// Checks every nonempty marking of `t`: the tangent splitting on the
/// highest-root curve must be unbendable. Violations are reported, not
/// thrown.
pub fn unbendable_sweep(t: LieType) -> Vec<MarkingCertificate> {
    let rs = RootSystem::generate(t);
    let theta = rs.highest_root().clone();
    // (beta, theta^vee) does not depend on the marking; compute once.
    let pairings: Vec<i64> = rs
        .positive_roots()
        .iter()
        .map(|b| rs.theta_coroot_pairing(b).expect("generated root"))
        .collect();
    let l = t.rank();
    let mut out = Vec::with_capacity((1usize << l) - 1);
    for mask in 1u32..(1u32 << l) {
        let marked: Vec<usize> = (1..=l).filter(|i| mask & (1 << (i - 1)) != 0).collect();
        let mut degrees = Vec::new();
        for (beta, &pairing) in rs.positive_roots().iter().zip(&pairings) {
            let n: i64 = marked.iter().map(|&i| beta.coeff(i)).sum();
            if n > 0 {
                degrees.push(pairing);
            }
        }
        let splitting = SplittingType::new(degrees);
        let classification = splitting.classify();
        debug_assert!(theta.coeffs().iter().all(|&c| c > 0));
        out.push(MarkingCertificate {
            marked,
            dim_gp: splitting.len(),
            classification,
            splitting,
        });
    }
    out
}

/// Contrast data for the simple-root curve `C_{alpha_i}` in `G/P_{{i}}`:
/// its tangent splitting plus the coefficient of `alpha_i` in the highest
/// root. A coefficient above 1 flags a marking whose minimal curves span a
/// proper subspace of the tangent directions, even though the highest-root
/// curve there is unbendable.
#[derive(Debug, Clone)]
pub struct MinimalContrast {
    pub node: usize,
    pub splitting: SplittingType,
    pub theta_coefficient: i64,
    pub flag: bool,
}

pub fn minimal_curve_contrast(t: LieType, i: usize) -> Result<MinimalContrast> {
    t.check_node(i)?;
    let rs = RootSystem::generate(t);
    let marking = ParabolicMarking::new(t, [i])?;
    let alpha = rs.simple_root(i)?;
    let splitting = tangent_splitting(&rs, &marking, &alpha)?;
    let theta_coefficient = rs.highest_root().coeff(i);
    Ok(MinimalContrast {
        node: i,
        splitting,
        theta_coefficient,
        flag: theta_coefficient > 1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{all_types, Family};

    fn lt(f: Family, r: usize) -> LieType {
        LieType::new(f, r).unwrap()
    }

    #[test]
    fn marking_validation() {
        let t = lt(Family::A, 3);
        assert!(ParabolicMarking::new(t, []).is_err());
        assert!(ParabolicMarking::new(t, [0]).is_err());
        assert!(ParabolicMarking::new(t, [4]).is_err());
        let m = ParabolicMarking::new(t, [3, 1, 3]).unwrap();
        assert_eq!(m.describe(), "{1,3}");
    }

    #[test]
    fn n_coeff_examples() {
        let t = lt(Family::A, 2);
        let rs = RootSystem::generate(t);
        let theta = rs.highest_root().clone();
        let m1 = ParabolicMarking::new(t, [1]).unwrap();
        let all = ParabolicMarking::new(t, [1, 2]).unwrap();
        assert_eq!(n_coeff(&rs, &m1, &theta).unwrap(), 1);
        assert_eq!(n_coeff(&rs, &all, &theta).unwrap(), 2);
        let bogus = Root::from_coeffs(vec![2, 0]);
        assert!(matches!(n_coeff(&rs, &m1, &bogus), Err(Error::NotARoot(_))));
    }

    #[test]
    fn partition_borel_case() {
        let t = lt(Family::A, 2);
        let rs = RootSystem::generate(t);
        let m = ParabolicMarking::new(t, [1, 2]).unwrap();
        let p = partition(&rs, &m);
        assert!(p.zero.is_empty());
        assert_eq!(p.positive.len(), 3);
        assert_eq!(p.negative.len(), 3);
    }

    #[test]
    fn partition_single_node_a2() {
        let t = lt(Family::A, 2);
        let rs = RootSystem::generate(t);
        let m = ParabolicMarking::new(t, [1]).unwrap();
        let p = partition(&rs, &m);
        assert_eq!(p.positive.len(), 2);
        let mut zero = p.zero.clone();
        zero.sort();
        assert_eq!(
            zero,
            vec![
                Root::from_coeffs(vec![0, -1]),
                Root::from_coeffs(vec![0, 1])
            ]
        );
    }

    #[test]
    fn partition_b4_node2_dimension() {
        // Independent count: Phi^0 for {2} in B4 spans the A1 x B2 diagram
        // on nodes {1, 3, 4}, which has 1 + 4 positive roots, so
        // dim G/P = 16 - 5 = 11.
        let t = lt(Family::B, 4);
        let rs = RootSystem::generate(t);
        let m = ParabolicMarking::new(t, [2]).unwrap();
        let p = partition(&rs, &m);
        assert_eq!(p.positive.len(), 11);
    }

    #[test]
    fn partition_is_exact_and_zero_part_is_a_subsystem() {
        for t in all_types(6) {
            let rs = RootSystem::generate(t);
            let l = t.rank();
            for mask in 1u32..(1u32 << l) {
                let marked: Vec<usize> = (1..=l).filter(|i| mask & (1 << (i - 1)) != 0).collect();
                let m = ParabolicMarking::new(t, marked).unwrap();
                let p = partition(&rs, &m);
                assert_eq!(
                    p.positive.len() + p.zero.len() + p.negative.len(),
                    rs.num_roots()
                );
                assert_eq!(p.positive.len(), p.negative.len());
                assert_eq!(
                    p.positive.len() + p.zero.len() / 2,
                    rs.positive_roots().len(),
                    "{t}: partition is exact"
                );
                // negative = -positive elementwise.
                let negs: BTreeSet<Vec<i64>> =
                    p.negative.iter().map(|r| r.coeffs().to_vec()).collect();
                for r in &p.positive {
                    assert!(negs.contains(r.negated().coeffs()));
                }
                // zero part: closed under negation and root addition.
                let zeros: BTreeSet<Vec<i64>> =
                    p.zero.iter().map(|r| r.coeffs().to_vec()).collect();
                for a in &p.zero {
                    assert!(zeros.contains(a.negated().coeffs()));
                    for b in &p.zero {
                        let sum: Vec<i64> = a
                            .coeffs()
                            .iter()
                            .zip(b.coeffs())
                            .map(|(x, y)| x + y)
                            .collect();
                        if rs.is_root(&sum) {
                            assert!(zeros.contains(&sum), "{t}: {a} + {b}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn tangent_splitting_examples() {
        // A1: the projective line, O(2).
        let a1 = RootSystem::generate(lt(Family::A, 1));
        let m = ParabolicMarking::new(lt(Family::A, 1), [1]).unwrap();
        let theta = a1.highest_root().clone();
        let s = tangent_splitting(&a1, &m, &theta).unwrap();
        assert_eq!(s.degrees(), &[2]);
        assert_eq!(
            s.classify(),
            Classification::Unbendable { ones: 0, zeros: 0 }
        );

        // A2, Delta_1 = {1}: projective plane, O(2) + O(1) on a line.
        let a2 = RootSystem::generate(lt(Family::A, 2));
        let m = ParabolicMarking::new(lt(Family::A, 2), [1]).unwrap();
        let theta = a2.highest_root().clone();
        let s = tangent_splitting(&a2, &m, &theta).unwrap();
        assert_eq!(s.degrees(), &[2, 1]);
    }

    #[test]
    fn contracted_curve_is_an_error() {
        let a2 = RootSystem::generate(lt(Family::A, 2));
        let m = ParabolicMarking::new(lt(Family::A, 2), [1]).unwrap();
        let alpha2 = a2.simple_root(2).unwrap();
        assert!(matches!(
            tangent_splitting(&a2, &m, &alpha2),
            Err(Error::CurveContracted { .. })
        ));
    }

    #[test]
    fn classification_table() {
        let c = |v: Vec<i64>| SplittingType::new(v).classify();
        assert_eq!(
            c(vec![2, 1, 1, 0]),
            Classification::Unbendable { ones: 2, zeros: 1 }
        );
        assert_eq!(c(vec![2, 2, 1]), Classification::NonnegativeNotUnbendable);
        assert_eq!(c(vec![2, -1]), Classification::NotNonnegative);
        assert_eq!(c(vec![1, 1]), Classification::NonnegativeNotUnbendable);
        assert_eq!(c(vec![3, 2]), Classification::NonnegativeNotUnbendable);
    }

    #[test]
    fn splitting_type_display_and_rle() {
        let s = SplittingType::new(vec![0, 1, 2, 1, 0, 0]);
        assert_eq!(s.degrees(), &[2, 1, 1, 0, 0, 0]);
        assert_eq!(s.run_lengths(), vec![(2, 1), (1, 2), (0, 3)]);
        assert_eq!(s.to_string(), "O(2) + O(1)^2 + O^3");
        assert_eq!(SplittingType::new(vec![]).to_string(), "0");
    }

    #[test]
    fn sweep_a1_and_g2() {
        let a1 = unbendable_sweep(lt(Family::A, 1));
        assert_eq!(a1.len(), 1);
        assert_eq!(
            a1[0].classification,
            Classification::Unbendable { ones: 0, zeros: 0 }
        );

        let g2 = unbendable_sweep(lt(Family::G, 2));
        assert_eq!(g2.len(), 3);
        assert!(g2.iter().all(|c| c.classification.is_unbendable()));
        // The adjoint marking {2} gives the 5-dimensional quadric-like
        // G/P with splitting O(2) + O(1)^4.
        let adjoint = g2.iter().find(|c| c.marked == vec![2]).unwrap();
        assert_eq!(adjoint.dim_gp, 5);
        assert_eq!(adjoint.splitting.degrees(), &[2, 1, 1, 1, 1]);
    }

    #[test]
    fn sweep_degree_sum_identity() {
        // Sum of degrees = 2 + #(degree-1 entries) whenever the splitting
        // is unbendable, and theta itself always contributes the single 2.
        for t in all_types(6) {
            for cert in unbendable_sweep(t) {
                if let Classification::Unbendable { ones, .. } = cert.classification {
                    assert_eq!(cert.splitting.sum(), 2 + ones as i64, "{t}");
                }
                let twos = cert.splitting.degrees().iter().filter(|&&d| d == 2).count();
                assert_eq!(twos, 1, "{t}: theta contributes the unique 2");
            }
        }
    }

    #[test]
    fn full_flag_marking_has_full_dimension() {
        for t in all_types(5) {
            let rs = RootSystem::generate(t);
            let certs = unbendable_sweep(t);
            let full = certs
                .iter()
                .find(|c| c.marked.len() == t.rank())
                .expect("full marking present");
            assert_eq!(full.dim_gp, rs.positive_roots().len(), "{t}");
        }
    }

    #[test]
    fn minimal_contrast_flags() {
        // A-type: every theta coefficient is 1, never flagged.
        for i in 1..=4 {
            let c = minimal_curve_contrast(lt(Family::A, 4), i).unwrap();
            assert_eq!(c.theta_coefficient, 1);
            assert!(!c.flag);
        }
        // C3: the long simple roots alpha_1, alpha_2 have theta-coefficient
        // 2 (theta = 2 alpha_1 + 2 alpha_2 + alpha_3).
        let c = minimal_curve_contrast(lt(Family::C, 3), 2).unwrap();
        assert_eq!(c.theta_coefficient, 2);
        assert!(c.flag);
        // B2: node 2 has theta-coefficient 2.
        let c = minimal_curve_contrast(lt(Family::B, 2), 2).unwrap();
        assert_eq!(c.theta_coefficient, 2);
        assert!(c.flag);
        assert!(minimal_curve_contrast(lt(Family::B, 2), 3).is_err());
    }
}
