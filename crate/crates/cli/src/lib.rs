//! Command-line front end: every subcommand runs one library certificate
//! and emits a [`Report`] as Markdown (default) or JSON.
//!
//! Exit codes: 0 when the report verdict is pass, 1 when any finding fails
//! (a certified violation), 2 on usage or validation errors.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand};

use horosplit::horospherical::{
    catalog, enumerate_instances, instantiate, verify_instance, HoroFamily, HorosphericalDatum,
    InstanceVerification,
};
use horosplit::lie::{all_types, LieType};
use horosplit::parabolic::{
    minimal_curve_contrast, tangent_splitting, unbendable_sweep, ParabolicMarking, SplittingType,
};
use horosplit::report::{Finding, Report, ReportValue, Subject};
use horosplit::roots::{Root, RootSystem};
use horosplit::weights::{
    dominant_representative, fw_coords, module_weights, weight_from_fw_coords, weyl_dimension,
    weyl_reflect,
};
use horosplit::{Error, Result};

#[derive(Parser)]
#[command(
    name = "horosplit",
    version,
    about = "Exact verifier for root-system splitting types, unbendability certificates, \
             and horospherical bundle degrees"
)]
struct Cli {
    /// Emit the report as JSON.
    #[arg(long, global = true, conflicts_with = "markdown")]
    json: bool,

    /// Emit the report as Markdown (the default).
    #[arg(long, global = true)]
    markdown: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the positive roots, highest root and special nodes of a simple type.
    Roots {
        /// Simple Lie type, e.g. B4.
        #[arg(long = "type")]
        lie_type: String,
    },
    /// The highest root, its coroot pairings with the simple roots, and the
    /// key inequality certificate.
    Theta {
        #[arg(long = "type")]
        lie_type: String,
    },
    /// Splitting type of T(G/P) restricted to a curve C_alpha.
    Splitting {
        #[arg(long = "type")]
        lie_type: String,
        /// Marked nodes of the parabolic, comma-separated (e.g. 1,3).
        #[arg(long, value_delimiter = ',')]
        parabolic: Vec<usize>,
        /// Either `theta` (the highest-root curve) or `simple:i`.
        #[arg(long, default_value = "theta")]
        curve: String,
    },
    /// Certify unbendability of the highest-root curve for every nonempty
    /// marking of one type, or of all types up to a rank cap.
    Unbendable {
        /// A simple type (e.g. F4) or `all`.
        #[arg(long = "type")]
        lie_type: String,
        /// Rank cap used with `--type all`.
        #[arg(long, default_value_t = 8)]
        max_rank: usize,
    },
    /// Splitting data for the minimal curve C_{alpha_i}, contrasted with the
    /// coefficient of alpha_i in the highest root.
    MinimalContrast {
        #[arg(long = "type")]
        lie_type: String,
        #[arg(long)]
        node: usize,
    },
    /// Weight multiset of a simple Levi module against the Weyl dimension
    /// formula.
    Weights {
        #[arg(long = "type")]
        lie_type: String,
        /// Levi support nodes, comma-separated.
        #[arg(long, value_delimiter = ',', required = true)]
        support: Vec<usize>,
        /// Fundamental-weight coordinates of the extreme weight.
        #[arg(
            long,
            value_delimiter = ',',
            allow_hyphen_values = true,
            required = true
        )]
        highest: Vec<i64>,
    },
    /// The five horospherical families of Picard number one.
    Horospherical {
        #[command(subcommand)]
        action: HoroAction,
    },
}

#[derive(Subcommand)]
enum HoroAction {
    /// Print the catalog of families and their recipes.
    List,
    /// Verify pairings, bundle degrees, and unbendability; all instances up
    /// to --max-n when no family is given.
    Verify {
        /// Family token: B, B3, C, F4 or G2.
        #[arg(long)]
        family: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        /// Sweep bound for the B and C families.
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
    /// Print the tangent/bundle/total splitting types on the highest-root
    /// curve.
    Splitting {
        #[arg(long)]
        family: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
}

/// Parses the arguments, runs the subcommand, writes the report to stdout.
pub fn run_cli<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with_writer(args, &mut std::io::stdout())
}

/// Like [`run_cli`] but writing the report to the given writer (stderr is
/// still used for diagnostics). Exposed for tests.
pub fn run_with_writer<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return err.exit_code();
        }
    };
    let json = cli.json;
    match execute(cli.command) {
        Ok(report) => {
            let rendered = if json {
                report.to_json()
            } else {
                report.to_markdown()
            };
            if writeln!(out, "{rendered}").is_err() {
                return 2;
            }
            if report.passed() {
                0
            } else {
                1
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            2
        }
    }
}

fn execute(command: Command) -> Result<Report> {
    match command {
        Command::Roots { lie_type } => roots_report(LieType::parse(&lie_type)?),
        Command::Theta { lie_type } => theta_report(LieType::parse(&lie_type)?),
        Command::Splitting {
            lie_type,
            parabolic,
            curve,
        } => splitting_report(LieType::parse(&lie_type)?, parabolic, &curve),
        Command::Unbendable { lie_type, max_rank } => unbendable_report(&lie_type, max_rank),
        Command::MinimalContrast { lie_type, node } => {
            minimal_contrast_report(LieType::parse(&lie_type)?, node)
        }
        Command::Weights {
            lie_type,
            support,
            highest,
        } => weights_report(LieType::parse(&lie_type)?, support, highest),
        Command::Horospherical { action } => match action {
            HoroAction::List => horospherical_list(),
            HoroAction::Verify {
                family,
                n,
                k,
                max_n,
            } => horospherical_verify(family.as_deref(), n, k, max_n),
            HoroAction::Splitting {
                family,
                n,
                k,
                max_n,
            } => horospherical_splitting(family.as_deref(), n, k, max_n),
        },
    }
}

fn root_value(r: &Root) -> ReportValue {
    ReportValue::int_list(r.coeffs().iter().copied())
}

fn splitting_value(s: &SplittingType) -> ReportValue {
    ReportValue::int_list(s.degrees().iter().copied())
}

fn key_inequality_finding(rs: &RootSystem) -> Finding {
    let theta = rs.highest_root().clone();
    let ok = rs.positive_roots().iter().all(|beta| {
        let p = rs.root_coroot_pairing(beta, &theta).expect("roots");
        if *beta == theta {
            p == 2
        } else {
            p == 0 || p == 1
        }
    });
    Finding::new("key_inequality", ReportValue::Bool(ok), ok)
}

fn special_node_findings(rs: &RootSystem) -> Vec<Finding> {
    let specials = rs.special_nodes();
    vec![
        Finding::info(
            "special_nodes",
            ReportValue::index_list(specials.iter().map(|&(i, _)| i)),
        ),
        Finding::info(
            "special_node_pairings",
            ReportValue::int_list(specials.iter().map(|&(_, p)| p)),
        ),
    ]
}

fn roots_report(t: LieType) -> Result<Report> {
    let rs = RootSystem::generate(t);
    let mut findings = vec![
        Finding::info(
            "positive_root_count",
            ReportValue::Int(rs.positive_roots().len() as i64),
        ),
        Finding::info(
            "positive_roots",
            ReportValue::List(rs.positive_roots().iter().map(root_value).collect()),
        ),
        Finding::new(
            "theta",
            root_value(rs.highest_root()),
            rs.highest_root().coeffs().iter().all(|&c| c >= 1),
        ),
        key_inequality_finding(&rs),
    ];
    findings.extend(special_node_findings(&rs));
    Ok(Report::new(
        "roots",
        Subject {
            lie_type: Some(t.to_string()),
            ..Subject::default()
        },
        findings,
    ))
}

fn theta_report(t: LieType) -> Result<Report> {
    let rs = RootSystem::generate(t);
    let theta = rs.highest_root();
    let mut findings = vec![
        Finding::new(
            "theta",
            root_value(theta),
            theta.coeffs().iter().all(|&c| c >= 1),
        ),
        Finding::info("height", ReportValue::Int(theta.height())),
        Finding::info(
            "simple_pairings",
            ReportValue::int_list(rs.simple_theta_pairings()),
        ),
        key_inequality_finding(&rs),
    ];
    findings.extend(special_node_findings(&rs));
    Ok(Report::new(
        "theta",
        Subject {
            lie_type: Some(t.to_string()),
            ..Subject::default()
        },
        findings,
    ))
}

fn parse_curve(rs: &RootSystem, curve: &str) -> Result<Root> {
    if curve == "theta" {
        return Ok(rs.highest_root().clone());
    }
    if let Some(rest) = curve.strip_prefix("simple:") {
        let i: usize = rest
            .parse()
            .map_err(|_| Error::OutOfRange(format!("bad curve spec {curve:?}")))?;
        return rs.simple_root(i);
    }
    Err(Error::OutOfRange(format!(
        "bad curve spec {curve:?}: expected `theta` or `simple:i`"
    )))
}

fn splitting_report(t: LieType, parabolic: Vec<usize>, curve: &str) -> Result<Report> {
    let rs = RootSystem::generate(t);
    let marking = ParabolicMarking::new(t, parabolic.iter().copied())?;
    let alpha = parse_curve(&rs, curve)?;
    let splitting = tangent_splitting(&rs, &marking, &alpha)?;
    let classification = splitting.classify();
    let findings = vec![
        Finding::info("degrees", splitting_value(&splitting)),
        Finding::info("shape", ReportValue::Text(splitting.to_string())),
        Finding::info("dim_gp", ReportValue::Int(splitting.len() as i64)),
        Finding::info("degree_sum", ReportValue::Int(splitting.sum())),
        Finding::new(
            "unbendable",
            ReportValue::Text(classification.to_string()),
            classification.is_unbendable(),
        ),
    ];
    Ok(Report::new(
        "splitting",
        Subject {
            lie_type: Some(t.to_string()),
            marking: Some(marking.marked().iter().copied().collect()),
            curve: Some(curve.to_string()),
            ..Subject::default()
        },
        findings,
    ))
}

fn sweep_findings(t: LieType, prefix: &str, findings: &mut Vec<Finding>) {
    for cert in unbendable_sweep(t) {
        let marking = cert
            .marked
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(",");
        findings.push(Finding::new(
            format!("{prefix}marking={{{marking}}}"),
            ReportValue::Text(format!("{}; dim G/P = {}", cert.splitting, cert.dim_gp)),
            cert.classification.is_unbendable(),
        ));
    }
}

fn unbendable_report(type_spec: &str, max_rank: usize) -> Result<Report> {
    let mut findings = Vec::new();
    let subject = if type_spec.eq_ignore_ascii_case("all") {
        if max_rank == 0 {
            return Err(Error::OutOfRange("--max-rank must be at least 1".into()));
        }
        for t in all_types(max_rank) {
            sweep_findings(t, &format!("{t} "), &mut findings);
        }
        Subject {
            lie_type: Some("all".to_string()),
            max_rank: Some(max_rank),
            ..Subject::default()
        }
    } else {
        let t = LieType::parse(type_spec)?;
        sweep_findings(t, "", &mut findings);
        Subject {
            lie_type: Some(t.to_string()),
            ..Subject::default()
        }
    };
    findings.push(Finding::info(
        "markings_checked",
        ReportValue::Int(findings.len() as i64),
    ));
    Ok(Report::new("unbendable", subject, findings))
}

fn minimal_contrast_report(t: LieType, node: usize) -> Result<Report> {
    let contrast = minimal_curve_contrast(t, node)?;
    let findings = vec![
        Finding::info("degrees", splitting_value(&contrast.splitting)),
        Finding::info("shape", ReportValue::Text(contrast.splitting.to_string())),
        Finding::info(
            "classification",
            ReportValue::Text(contrast.splitting.classify().to_string()),
        ),
        Finding::info(
            "theta_coefficient",
            ReportValue::Int(contrast.theta_coefficient),
        ),
        Finding::info(
            "unbendable_but_not_minimal_flag",
            ReportValue::Bool(contrast.flag),
        ),
    ];
    Ok(Report::new(
        "minimal-contrast",
        Subject {
            lie_type: Some(t.to_string()),
            node: Some(node),
            ..Subject::default()
        },
        findings,
    ))
}

fn weights_report(t: LieType, support: Vec<usize>, highest: Vec<i64>) -> Result<Report> {
    let rs = RootSystem::generate(t);
    let support: BTreeSet<usize> = support.into_iter().collect();
    for &i in &support {
        t.check_node(i)?;
    }
    let lambda = weight_from_fw_coords(t, &highest)?;
    let multiset = module_weights(&rs, &support, &lambda)?;
    let dimension = weyl_dimension(&rs, &support, &lambda)?;
    let lambda_plus = dominant_representative(t, &lambda, &support)?;
    let extreme_mult = multiset.multiplicity(&lambda_plus);
    let invariant = support.iter().all(|&i| {
        multiset.iter().all(|(w, m)| {
            let image = weyl_reflect(t, w, i).expect("valid node");
            multiset.multiplicity(&image) == m
        })
    });
    let extreme_fw: Vec<i64> = fw_coords(t, &lambda_plus)
        .iter()
        .map(|c| c.to_integer())
        .collect();
    let findings = vec![
        Finding::info("dimension", ReportValue::Int(dimension as i64)),
        Finding::new(
            "total_multiplicity",
            ReportValue::Int(multiset.total() as i64),
            multiset.total() == dimension,
        ),
        Finding::info("distinct_weights", ReportValue::Int(multiset.len() as i64)),
        Finding::info("extreme_weight_fw", ReportValue::int_list(extreme_fw)),
        Finding::new(
            "extreme_multiplicity",
            ReportValue::Int(extreme_mult as i64),
            extreme_mult == 1,
        ),
        Finding::new("weyl_invariant", ReportValue::Bool(invariant), invariant),
    ];
    Ok(Report::new(
        "weights",
        Subject {
            lie_type: Some(t.to_string()),
            support: Some(support.into_iter().collect()),
            highest_weight: Some(highest),
            ..Subject::default()
        },
        findings,
    ))
}

fn horospherical_list() -> Result<Report> {
    let findings = catalog()
        .into_iter()
        .map(|row| {
            Finding::info(
                format!("family {}", row.family.token()),
                ReportValue::Text(format!(
                    "{}; {}; P node {}; lambda_V = {}; expected pairing {}",
                    row.shape,
                    row.constraints,
                    row.p_node_recipe,
                    row.lambda_recipe,
                    row.expected_pairing
                )),
            )
        })
        .collect();
    Ok(Report::new(
        "horospherical list",
        Subject::default(),
        findings,
    ))
}

fn parse_family(token: &str) -> Result<HoroFamily> {
    HoroFamily::from_token(token).ok_or_else(|| {
        Error::OutOfRange(format!(
            "unknown family {token:?}: expected one of B, B3, C, F4, G2"
        ))
    })
}

fn requested_instances(
    family: Option<&str>,
    n: Option<usize>,
    k: Option<usize>,
    max_n: usize,
) -> Result<Vec<HorosphericalDatum>> {
    match family {
        Some(token) => Ok(vec![instantiate(parse_family(token)?, n, k)?]),
        None => {
            if n.is_some() || k.is_some() {
                return Err(Error::OutOfRange(
                    "--n/--k require --family; use --max-n to bound the sweep".into(),
                ));
            }
            if max_n < 2 {
                return Err(Error::OutOfRange("--max-n must be at least 2".into()));
            }
            Ok(enumerate_instances(max_n))
        }
    }
}

fn subject_for(family: Option<&str>, n: Option<usize>, k: Option<usize>, max_n: usize) -> Subject {
    Subject {
        family: family.map(str::to_string),
        n,
        k,
        max_n: family.is_none().then_some(max_n),
        ..Subject::default()
    }
}

fn verification_findings(v: &InstanceVerification, detailed: bool, findings: &mut Vec<Finding>) {
    let d = &v.datum;
    if detailed {
        findings.push(Finding::new(
            "pairing",
            ReportValue::from_rat(v.pairing),
            v.pairing_ok(),
        ));
        findings.push(Finding::info(
            "expected_pairing",
            ReportValue::Int(v.expected_pairing),
        ));
        findings.push(Finding::new(
            "bundle_degrees",
            splitting_value(&v.bundle),
            v.degrees_in_01(),
        ));
        findings.push(Finding::new(
            "dim_v",
            ReportValue::Int(v.dim_v as i64),
            v.bundle_size_ok(),
        ));
        findings.push(Finding::info(
            "total_splitting",
            ReportValue::Text(v.total.to_string()),
        ));
        findings.push(Finding::new(
            "unbendable",
            ReportValue::Text(v.classification.to_string()),
            v.total_unbendable(),
        ));
    } else {
        findings.push(Finding::new(
            d.describe(),
            ReportValue::Text(format!(
                "pairing {}; bundle {}; total {}; {}",
                v.pairing, v.bundle, v.total, v.classification
            )),
            v.all_ok(),
        ));
    }
}

fn horospherical_verify(
    family: Option<&str>,
    n: Option<usize>,
    k: Option<usize>,
    max_n: usize,
) -> Result<Report> {
    let instances = requested_instances(family, n, k, max_n)?;
    let detailed = instances.len() == 1;
    let mut findings = Vec::new();
    for d in &instances {
        verification_findings(&verify_instance(d)?, detailed, &mut findings);
    }
    if !detailed {
        findings.push(Finding::info(
            "instances_checked",
            ReportValue::Int(instances.len() as i64),
        ));
    }
    Ok(Report::new(
        "horospherical verify",
        subject_for(family, n, k, max_n),
        findings,
    ))
}

fn horospherical_splitting(
    family: Option<&str>,
    n: Option<usize>,
    k: Option<usize>,
    max_n: usize,
) -> Result<Report> {
    let instances = requested_instances(family, n, k, max_n)?;
    let detailed = instances.len() == 1;
    let mut findings = Vec::new();
    for d in &instances {
        let v = verify_instance(d)?;
        if detailed {
            findings.push(Finding::info(
                "tangent_splitting",
                ReportValue::Text(v.tangent.to_string()),
            ));
            findings.push(Finding::info(
                "tangent_degrees",
                splitting_value(&v.tangent),
            ));
            findings.push(Finding::info(
                "bundle_splitting",
                ReportValue::Text(v.bundle.to_string()),
            ));
            findings.push(Finding::info("bundle_degrees", splitting_value(&v.bundle)));
            findings.push(Finding::info(
                "total_splitting",
                ReportValue::Text(v.total.to_string()),
            ));
            findings.push(Finding::info(
                "dim_x",
                ReportValue::Int(v.total.len() as i64),
            ));
            findings.push(Finding::new(
                "unbendable",
                ReportValue::Text(v.classification.to_string()),
                v.total_unbendable(),
            ));
        } else {
            findings.push(Finding::new(
                d.describe(),
                ReportValue::Text(format!(
                    "tangent {}; bundle {}; total {}",
                    v.tangent, v.bundle, v.total
                )),
                v.total_unbendable(),
            ));
        }
    }
    Ok(Report::new(
        "horospherical splitting",
        subject_for(family, n, k, max_n),
        findings,
    ))
}
