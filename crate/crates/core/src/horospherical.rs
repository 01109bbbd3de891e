//! The five families of smooth horospherical varieties of Picard number one
//! (after Pasquier's classification) and their degree bookkeeping on the
//! highest-root curve.
//!
//! Each datum `(G, omega_i, omega_j)` carries a maximal parabolic `P` (one
//! marked node) and a simple `P`-module `V` with extreme weight
//! `lambda_V = omega_i - omega_j`; indices follow the Onishchik-Vinberg
//! labeling. The verification pipeline computes `(lambda_V, theta^vee)`,
//! the degrees of `G x_P V` restricted to `C_theta` (pairings of the module
//! weights against `theta^vee`), and the merged splitting of the restricted
//! tangent bundle, which must be unbendable.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::lie::{Family, LieType};
use crate::parabolic::{tangent_splitting, Classification, ParabolicMarking, SplittingType};
use crate::rat::{as_integer, Rat};
use crate::roots::RootSystem;
use crate::weights::{fundamental_weight, module_weights, weyl_dimension, Weight};
use crate::Result;

/// One of the five horospherical families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum HoroFamily {
    /// `(B_n, omega_{n-1}, omega_n)`, `n >= 3`.
    BPair,
    /// `(B_3, omega_1, omega_3)`.
    B3Mixed,
    /// `(C_n, omega_k, omega_{k-1})`, `n >= 2`, `2 <= k <= n`.
    CPair,
    /// `(F_4, omega_3, omega_2)`.
    F4Case,
    /// `(G_2, omega_2, omega_1)`.
    G2Case,
}

impl HoroFamily {
    pub const ALL: [HoroFamily; 5] = [
        HoroFamily::BPair,
        HoroFamily::B3Mixed,
        HoroFamily::CPair,
        HoroFamily::F4Case,
        HoroFamily::G2Case,
    ];

    pub fn token(self) -> &'static str {
        match self {
            HoroFamily::BPair => "B",
            HoroFamily::B3Mixed => "B3",
            HoroFamily::CPair => "C",
            HoroFamily::F4Case => "F4",
            HoroFamily::G2Case => "G2",
        }
    }

    pub fn from_token(s: &str) -> Option<HoroFamily> {
        match s.to_ascii_uppercase().as_str() {
            "B" => Some(HoroFamily::BPair),
            "B3" => Some(HoroFamily::B3Mixed),
            "C" => Some(HoroFamily::CPair),
            "F4" => Some(HoroFamily::F4Case),
            "G2" => Some(HoroFamily::G2Case),
            _ => None,
        }
    }
}

impl fmt::Display for HoroFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.token())
    }
}

/// Catalog row: the family, its parameter constraints, the recipes for the
/// marked node and the extreme weight, and the expected value of
/// `(lambda_V, theta^vee)`.
#[derive(Debug, Clone)]
pub struct FamilyDescriptor {
    pub family: HoroFamily,
    pub shape: &'static str,
    pub constraints: &'static str,
    pub p_node_recipe: &'static str,
    pub lambda_recipe: &'static str,
    pub expected_pairing: i64,
}

/// The five catalog rows, in the fixed order `B, B3, C, F4, G2`.
pub fn catalog() -> Vec<FamilyDescriptor> {
    vec![
        FamilyDescriptor {
            family: HoroFamily::BPair,
            shape: "(B_n, omega_{n-1}, omega_n)",
            constraints: "n >= 3",
            p_node_recipe: "n-1",
            lambda_recipe: "omega_{n-1} - omega_n",
            expected_pairing: 1,
        },
        FamilyDescriptor {
            family: HoroFamily::B3Mixed,
            shape: "(B_3, omega_1, omega_3)",
            constraints: "fixed",
            p_node_recipe: "1",
            lambda_recipe: "omega_1 - omega_3",
            expected_pairing: 0,
        },
        FamilyDescriptor {
            family: HoroFamily::CPair,
            shape: "(C_n, omega_k, omega_{k-1})",
            constraints: "n >= 2, 2 <= k <= n",
            p_node_recipe: "k-1",
            lambda_recipe: "omega_k - omega_{k-1}",
            expected_pairing: 0,
        },
        FamilyDescriptor {
            family: HoroFamily::F4Case,
            shape: "(F_4, omega_3, omega_2)",
            constraints: "fixed",
            p_node_recipe: "3",
            lambda_recipe: "omega_3 - omega_2",
            expected_pairing: 1,
        },
        FamilyDescriptor {
            family: HoroFamily::G2Case,
            shape: "(G_2, omega_2, omega_1)",
            constraints: "fixed",
            p_node_recipe: "2",
            lambda_recipe: "omega_2 - omega_1",
            expected_pairing: 1,
        },
    ]
}

/// A validated instance of one of the five families.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HorosphericalDatum {
    family: HoroFamily,
    n: Option<usize>,
    k: Option<usize>,
    g_type: LieType,
    omega_i: usize,
    omega_j: usize,
    p_node: usize,
    lambda_v: Weight,
}

impl HorosphericalDatum {
    pub fn family(&self) -> HoroFamily {
        self.family
    }

    pub fn params(&self) -> (Option<usize>, Option<usize>) {
        (self.n, self.k)
    }

    pub fn g_type(&self) -> LieType {
        self.g_type
    }

    /// The pair of fundamental-weight indices `(i, j)` defining the variety.
    pub fn omega_indices(&self) -> (usize, usize) {
        (self.omega_i, self.omega_j)
    }

    /// The marked node of the maximal parabolic.
    pub fn p_node(&self) -> usize {
        self.p_node
    }

    /// Extreme weight `omega_i - omega_j` of the `P`-module `V`.
    pub fn lambda_v(&self) -> &Weight {
        &self.lambda_v
    }

    /// The Levi support `Delta minus {p_node}`.
    pub fn levi_support(&self) -> BTreeSet<usize> {
        (1..=self.g_type.rank())
            .filter(|&i| i != self.p_node)
            .collect()
    }

    pub fn describe(&self) -> String {
        match self.family {
            HoroFamily::BPair => format!(
                "(B{}, omega_{}, omega_{})",
                self.n.unwrap(),
                self.omega_i,
                self.omega_j
            ),
            HoroFamily::B3Mixed => "(B3, omega_1, omega_3)".to_string(),
            HoroFamily::CPair => format!(
                "(C{}, omega_{}, omega_{})",
                self.n.unwrap(),
                self.omega_i,
                self.omega_j
            ),
            HoroFamily::F4Case => "(F4, omega_3, omega_2)".to_string(),
            HoroFamily::G2Case => "(G2, omega_2, omega_1)".to_string(),
        }
    }
}

impl fmt::Display for HorosphericalDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.describe())
    }
}

fn build(
    family: HoroFamily,
    n: Option<usize>,
    k: Option<usize>,
    g_type: LieType,
    omega_i: usize,
    omega_j: usize,
    p_node: usize,
) -> Result<HorosphericalDatum> {
    let wi = fundamental_weight(g_type, omega_i)?;
    let wj = fundamental_weight(g_type, omega_j)?;
    Ok(HorosphericalDatum {
        family,
        n,
        k,
        g_type,
        omega_i,
        omega_j,
        p_node,
        lambda_v: wi.sub(&wj),
    })
}

/// Validates the parameters and builds the datum. Fixed families reject any
/// supplied parameters.
pub fn instantiate(
    family: HoroFamily,
    n: Option<usize>,
    k: Option<usize>,
) -> Result<HorosphericalDatum> {
    let fixed = |name: &str| -> Result<()> {
        if n.is_some() || k.is_some() {
            Err(Error::OutOfRange(format!(
                "family {name} takes no parameters"
            )))
        } else {
            Ok(())
        }
    };
    match family {
        HoroFamily::BPair => {
            if k.is_some() {
                return Err(Error::OutOfRange("family B takes no parameter k".into()));
            }
            let n = n.ok_or_else(|| Error::OutOfRange("family B requires n".into()))?;
            if n < 3 {
                return Err(Error::OutOfRange(format!(
                    "family B requires n >= 3, got n={n}"
                )));
            }
            let g = LieType::new(Family::B, n)?;
            build(family, Some(n), None, g, n - 1, n, n - 1)
        }
        HoroFamily::B3Mixed => {
            fixed("B3")?;
            let g = LieType::new(Family::B, 3)?;
            build(family, None, None, g, 1, 3, 1)
        }
        HoroFamily::CPair => {
            let n = n.ok_or_else(|| Error::OutOfRange("family C requires n".into()))?;
            let k = k.ok_or_else(|| Error::OutOfRange("family C requires k".into()))?;
            if n < 2 || k < 2 || k > n {
                return Err(Error::OutOfRange(format!(
                    "family C requires n >= 2 and 2 <= k <= n, got n={n}, k={k}"
                )));
            }
            let g = LieType::new(Family::C, n)?;
            build(family, Some(n), Some(k), g, k, k - 1, k - 1)
        }
        HoroFamily::F4Case => {
            fixed("F4")?;
            let g = LieType::new(Family::F, 4)?;
            build(family, None, None, g, 3, 2, 3)
        }
        HoroFamily::G2Case => {
            fixed("G2")?;
            let g = LieType::new(Family::G, 2)?;
            build(family, None, None, g, 2, 1, 2)
        }
    }
}

/// Every catalog instance with `n <= max_n` (B swept from 3, C over all
/// valid `(n, k)`), in catalog order.
pub fn enumerate_instances(max_n: usize) -> Vec<HorosphericalDatum> {
    let mut out = Vec::new();
    for n in 3..=max_n {
        out.push(instantiate(HoroFamily::BPair, Some(n), None).expect("valid B instance"));
    }
    out.push(instantiate(HoroFamily::B3Mixed, None, None).expect("valid B3 instance"));
    for n in 2..=max_n {
        for k in 2..=n {
            out.push(instantiate(HoroFamily::CPair, Some(n), Some(k)).expect("valid C instance"));
        }
    }
    out.push(instantiate(HoroFamily::F4Case, None, None).expect("valid F4 instance"));
    out.push(instantiate(HoroFamily::G2Case, None, None).expect("valid G2 instance"));
    out
}

/// `(lambda_V, theta^vee)`; the classification guarantees this lands in
/// `{0, 1}`.
pub fn lambda_pairing_theta(d: &HorosphericalDatum) -> Rat {
    let rs = RootSystem::generate(d.g_type);
    rs.coroot_pairing(d.lambda_v.coords(), rs.highest_root())
        .expect("theta is a root")
}

/// Degrees of `G x_P V` restricted to `C_theta`: the pairings
/// `(mu, theta^vee)` over the weight multiset of `V`.
pub fn bundle_degrees(d: &HorosphericalDatum) -> Result<SplittingType> {
    let rs = RootSystem::generate(d.g_type);
    bundle_degrees_with(&rs, d)
}

fn bundle_degrees_with(rs: &RootSystem, d: &HorosphericalDatum) -> Result<SplittingType> {
    let weights = module_weights(rs, &d.levi_support(), &d.lambda_v)?;
    let theta = rs.highest_root().clone();
    let mut degrees = Vec::new();
    for (mu, m) in weights.iter() {
        let pairing = rs.coroot_pairing(mu.coords(), &theta)?;
        let value = as_integer(&pairing).ok_or_else(|| {
            Error::NotLatticeWeight(format!("non-integral degree {pairing} for weight {mu}"))
        })?;
        for _ in 0..m {
            degrees.push(value);
        }
    }
    Ok(SplittingType::new(degrees))
}

/// Splitting of the restricted tangent bundle of the horospherical variety
/// on `C_theta`: the tangent part of `G/P` merged with the bundle degrees.
pub fn total_splitting(d: &HorosphericalDatum) -> Result<SplittingType> {
    let rs = RootSystem::generate(d.g_type);
    let marking = ParabolicMarking::new(d.g_type, [d.p_node])?;
    let tangent = tangent_splitting(&rs, &marking, rs.highest_root())?;
    Ok(tangent.merged(&bundle_degrees_with(&rs, d)?))
}

/// Full verification record for one instance.
#[derive(Debug, Clone)]
pub struct InstanceVerification {
    pub datum: HorosphericalDatum,
    pub pairing: Rat,
    pub expected_pairing: i64,
    pub dim_v: u64,
    pub bundle: SplittingType,
    pub tangent: SplittingType,
    pub total: SplittingType,
    pub classification: Classification,
}

impl InstanceVerification {
    pub fn pairing_ok(&self) -> bool {
        self.pairing == Rat::from_integer(self.expected_pairing)
    }

    /// `1 >= a_1 >= ... >= a_m >= 0` for the bundle degrees.
    pub fn degrees_in_01(&self) -> bool {
        self.bundle.degrees().iter().all(|&a| a == 0 || a == 1)
    }

    pub fn bundle_size_ok(&self) -> bool {
        self.bundle.len() as u64 == self.dim_v
    }

    pub fn total_unbendable(&self) -> bool {
        self.classification.is_unbendable()
    }

    pub fn all_ok(&self) -> bool {
        self.pairing_ok()
            && self.degrees_in_01()
            && self.bundle_size_ok()
            && self.total_unbendable()
    }
}

/// Runs the whole pipeline for one instance.
pub fn verify_instance(d: &HorosphericalDatum) -> Result<InstanceVerification> {
    let rs = RootSystem::generate(d.g_type);
    let marking = ParabolicMarking::new(d.g_type, [d.p_node])?;
    let tangent = tangent_splitting(&rs, &marking, rs.highest_root())?;
    let bundle = bundle_degrees_with(&rs, d)?;
    let dim_v = weyl_dimension(&rs, &d.levi_support(), &d.lambda_v)?;
    let pairing = rs
        .coroot_pairing(d.lambda_v.coords(), rs.highest_root())
        .expect("theta is a root");
    let expected_pairing = catalog()
        .into_iter()
        .find(|row| row.family == d.family)
        .expect("family is cataloged")
        .expected_pairing;
    let total = tangent.merged(&bundle);
    let classification = total.classify();
    Ok(InstanceVerification {
        datum: d.clone(),
        pairing,
        expected_pairing,
        dim_v,
        bundle,
        tangent,
        total,
        classification,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    #[test]
    fn catalog_has_five_rows_with_expected_pairings() {
        let rows = catalog();
        assert_eq!(rows.len(), 5);
        let pairings: Vec<i64> = rows.iter().map(|r| r.expected_pairing).collect();
        assert_eq!(pairings, vec![1, 0, 0, 1, 1]);
    }

    #[test]
    fn parameter_validation() {
        assert!(instantiate(HoroFamily::BPair, Some(3), None).is_ok());
        assert!(matches!(
            instantiate(HoroFamily::BPair, Some(2), None),
            Err(Error::OutOfRange(_))
        ));
        assert!(matches!(
            instantiate(HoroFamily::CPair, Some(4), Some(1)),
            Err(Error::OutOfRange(_))
        ));
        assert!(matches!(
            instantiate(HoroFamily::CPair, Some(4), Some(5)),
            Err(Error::OutOfRange(_))
        ));
        assert!(instantiate(HoroFamily::CPair, Some(4), Some(4)).is_ok());
        assert!(matches!(
            instantiate(HoroFamily::G2Case, Some(2), None),
            Err(Error::OutOfRange(_))
        ));
        assert!(instantiate(HoroFamily::BPair, None, None).is_err());
        assert!(instantiate(HoroFamily::CPair, Some(4), None).is_err());
    }

    #[test]
    fn instance_shapes() {
        let f4 = instantiate(HoroFamily::F4Case, None, None).unwrap();
        assert_eq!(f4.g_type().to_string(), "F4");
        assert_eq!(f4.p_node(), 3);
        assert_eq!(f4.omega_indices(), (3, 2));

        let g2 = instantiate(HoroFamily::G2Case, None, None).unwrap();
        assert_eq!(g2.p_node(), 2);
        assert_eq!(g2.levi_support().into_iter().collect::<Vec<_>>(), vec![1]);

        let c = instantiate(HoroFamily::CPair, Some(5), Some(3)).unwrap();
        assert_eq!(c.p_node(), 2);
        assert_eq!(c.omega_indices(), (3, 2));

        let b = instantiate(HoroFamily::BPair, Some(4), None).unwrap();
        assert_eq!(b.p_node(), 3);
        assert_eq!(b.omega_indices(), (3, 4));
    }

    #[test]
    fn pairing_values_per_family() {
        let check = |f, n, k, expected: i64| {
            let d = instantiate(f, n, k).unwrap();
            assert_eq!(lambda_pairing_theta(&d), rat(expected), "{d}");
        };
        check(HoroFamily::BPair, Some(3), None, 1);
        check(HoroFamily::BPair, Some(5), None, 1);
        check(HoroFamily::B3Mixed, None, None, 0);
        check(HoroFamily::CPair, Some(4), Some(2), 0);
        check(HoroFamily::CPair, Some(6), Some(6), 0);
        check(HoroFamily::F4Case, None, None, 1);
        check(HoroFamily::G2Case, None, None, 1);
    }

    #[test]
    fn g2_bundle_is_two_copies_of_degree_one() {
        let d = instantiate(HoroFamily::G2Case, None, None).unwrap();
        let b = bundle_degrees(&d).unwrap();
        assert_eq!(b.degrees(), &[1, 1]);
        let total = total_splitting(&d).unwrap();
        assert_eq!(total.degrees(), &[2, 1, 1, 1, 1, 1, 1]);
        assert!(total.classify().is_unbendable());
    }

    #[test]
    fn b3_pair_total_splitting() {
        let d = instantiate(HoroFamily::BPair, Some(3), None).unwrap();
        let v = verify_instance(&d).unwrap();
        assert!(v.all_ok(), "{v:?}");
        assert_eq!(v.dim_v, 2);
        // dim X = dim G/P + dim V = 7 + 2 = 9.
        assert_eq!(v.total.len(), 9);
        assert_eq!(
            v.total.sum(),
            2 + v.total.degrees().iter().filter(|&&d| d == 1).count() as i64
        );
    }

    #[test]
    fn b3_mixed_bundle_is_spin_like() {
        // Levi of the unmarked nodes {2,3} is a B2; the module is its
        // 4-dimensional spin module, with degrees {1,1,0,0}.
        let d = instantiate(HoroFamily::B3Mixed, None, None).unwrap();
        let v = verify_instance(&d).unwrap();
        assert_eq!(v.dim_v, 4);
        assert_eq!(v.bundle.degrees(), &[1, 1, 0, 0]);
        assert_eq!(v.total.len(), 9);
        assert!(v.all_ok());
    }

    #[test]
    fn every_instance_up_to_n6_verifies() {
        for d in enumerate_instances(6) {
            let v = verify_instance(&d).unwrap();
            assert!(
                v.pairing_ok(),
                "{d}: pairing {} != {}",
                v.pairing,
                v.expected_pairing
            );
            assert!(v.degrees_in_01(), "{d}: degrees {:?}", v.bundle.degrees());
            assert!(
                v.bundle_size_ok(),
                "{d}: |bundle| {} != dim V {}",
                v.bundle.len(),
                v.dim_v
            );
            assert!(v.total_unbendable(), "{d}: {}", v.classification);
            let twos = v.total.degrees().iter().filter(|&&x| x == 2).count();
            assert_eq!(twos, 1, "{d}: single O(2) factor");
        }
    }

    #[test]
    fn max_bundle_degree_is_pairing_of_dominant_representative() {
        use crate::weights::dominant_representative;
        for d in enumerate_instances(5) {
            let rs = RootSystem::generate(d.g_type());
            let lambda_plus =
                dominant_representative(d.g_type(), d.lambda_v(), &d.levi_support()).unwrap();
            let expected_max = rs
                .coroot_pairing(lambda_plus.coords(), rs.highest_root())
                .unwrap();
            let bundle = bundle_degrees(&d).unwrap();
            let max = bundle.degrees().first().copied().unwrap();
            assert_eq!(rat(max), expected_max, "{d}");
        }
    }

    #[test]
    fn instance_count_at_n6() {
        // B: n = 3..6 (4), B3 (1), C: sum_{n=2..6} (n-1) = 15, F4, G2.
        assert_eq!(enumerate_instances(6).len(), 4 + 1 + 15 + 1 + 1);
    }
}
