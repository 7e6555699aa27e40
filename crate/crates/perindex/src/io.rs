//! Instance and report file formats (JSON) and the analysis pipeline that
//! turns a (group, cocycle) pair into a full report.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::cocycle::{BilinearForm, Cocycle, BRUTEFORCE_CAP};
use crate::construct::{decompose_with_retries, Certificate};
use crate::error::{Error, Result};
use crate::group::{FiniteAbelianGroup, FiniteGroup, GroupRef};
use crate::twisted::{rep_index, TwistedAlgebra};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Group section of an instance file: exactly one of the two presentations.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GroupSection {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub invariant_factors: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cayley_table: Option<Vec<Vec<usize>>>,
}

/// Cocycle section: a modulus plus exactly one of a bilinear matrix (only
/// for invariant-factor groups) or a full exponent table.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CocycleSection {
    pub modulus: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bilinear: Option<Vec<Vec<u64>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub table: Option<Vec<Vec<u64>>>,
}

/// On-disk description of a (group, cocycle) pair.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InstanceFile {
    pub group: GroupSection,
    pub cocycle: CocycleSection,
}

/// A validated instance ready for analysis.
#[derive(Debug, Clone)]
pub struct ParsedInstance {
    pub group: GroupRef,
    pub abelian: Option<FiniteAbelianGroup>,
    pub cocycle: Cocycle,
    pub echo: InstanceFile,
}

/// Parse an instance file from JSON text.
pub fn parse_instance(text: &str) -> Result<ParsedInstance> {
    let file: InstanceFile = serde_json::from_str(text)
        .map_err(|e| Error::InvalidInput(format!("parse error: {e}")))?;
    build_instance(&file)
}

/// Validate an instance description and build the working objects.
pub fn build_instance(file: &InstanceFile) -> Result<ParsedInstance> {
    let (group, abelian): (GroupRef, Option<FiniteAbelianGroup>) =
        match (&file.group.invariant_factors, &file.group.cayley_table) {
            (Some(factors), None) => {
                let ab = FiniteAbelianGroup::new(factors.clone())?;
                (Arc::new(ab.to_table()?), Some(ab))
            }
            (None, Some(rows)) => (Arc::new(FiniteGroup::from_table(rows)?), None),
            _ => {
                return Err(Error::InvalidInput(
                    "group section must contain exactly one of \
                     'invariant_factors' or 'cayley_table'"
                        .into(),
                ))
            }
        };
    let cocycle = match (&file.cocycle.bilinear, &file.cocycle.table) {
        (Some(matrix), None) => {
            let ab = abelian.as_ref().ok_or_else(|| {
                Error::InvalidInput(
                    "a bilinear cocycle requires an invariant_factors group".into(),
                )
            })?;
            let form = BilinearForm::new(ab.clone(), file.cocycle.modulus, matrix.clone())?;
            let c = form.cocycle_on(group.clone())?;
            c.check()?;
            c
        }
        (None, Some(rows)) => {
            let n = group.order();
            if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                return Err(Error::InvalidInput(format!(
                    "cocycle table must be {n} x {n} to match the group"
                )));
            }
            let mut flat = Vec::with_capacity(n * n);
            for row in rows {
                flat.extend_from_slice(row);
            }
            Cocycle::from_entries(group.clone(), file.cocycle.modulus, flat)?
        }
        _ => {
            return Err(Error::InvalidInput(
                "cocycle section must contain exactly one of 'bilinear' or 'table'".into(),
            ))
        }
    };
    Ok(ParsedInstance {
        group,
        abelian,
        cocycle,
        echo: file.clone(),
    })
}

/// Size and generating set of the radical subgroup.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RadicalReport {
    pub size: usize,
    pub generators: Vec<usize>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DegreeEntry {
    pub degree: u64,
    pub multiplicity: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Full analysis output. Also serves as an instance file when re-parsed:
/// the group and cocycle sections echo the input.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub tool_version: String,
    pub seed: u64,
    pub group: GroupSection,
    pub cocycle: CocycleSection,
    pub order: usize,
    pub period: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub period_bruteforce: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub radical: Option<RadicalReport>,
    pub alpha_regular_classes: usize,
    pub degree_profile: Vec<DegreeEntry>,
    pub index: u64,
    pub checks: Vec<CheckReport>,
}

impl AnalysisReport {
    pub fn all_checks_pass(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let push = |out: &mut String, line: String| {
            out.push_str(&line);
            out.push('\n');
        };
        push(&mut out, format!("tool version : {}", self.tool_version));
        push(&mut out, format!("seed         : {}", self.seed));
        if let Some(f) = &self.group.invariant_factors {
            push(&mut out, format!("group        : invariant factors {f:?}"));
        } else {
            push(&mut out, format!("group        : Cayley table of order {}", self.order));
        }
        push(&mut out, format!("order        : {}", self.order));
        push(&mut out, format!("modulus      : {}", self.cocycle.modulus));
        push(&mut out, format!("period       : {}", self.period));
        if let Some(b) = self.period_bruteforce {
            push(&mut out, format!("period (bf)  : {b}"));
        }
        if let Some(r) = &self.radical {
            push(
                &mut out,
                format!("radical      : size {}, generators {:?}", r.size, r.generators),
            );
        }
        push(
            &mut out,
            format!("regular cls  : {}", self.alpha_regular_classes),
        );
        let profile: Vec<String> = self
            .degree_profile
            .iter()
            .map(|e| format!("{}^{}", e.degree, e.multiplicity))
            .collect();
        push(
            &mut out,
            format!("degrees      : {{{}}}", profile.join(", ")),
        );
        push(&mut out, format!("index        : {}", self.index));
        push(&mut out, "checks:".to_string());
        for c in &self.checks {
            push(
                &mut out,
                format!(
                    "  [{}] {} - {}",
                    if c.passed { "pass" } else { "FAIL" },
                    c.name,
                    c.detail
                ),
            );
        }
        push(
            &mut out,
            format!(
                "overall      : {}",
                if self.all_checks_pass() { "OK" } else { "CHECKS FAILED" }
            ),
        );
        out
    }
}

/// Greedy generating set for a subgroup given by its member list.
fn generating_set(group: &GroupRef, members: &[usize]) -> Vec<usize> {
    let mut gens: Vec<usize> = Vec::new();
    let mut covered = vec![0usize];
    for &x in members {
        if covered.binary_search(&x).is_ok() {
            continue;
        }
        gens.push(x);
        let sub = crate::group::subgroup_generated(group, &gens).expect("valid indices");
        covered = sub.members().to_vec();
        if covered.len() == members.len() {
            break;
        }
    }
    gens
}

/// Run the full pipeline on a validated instance.
pub fn analyze(parsed: &ParsedInstance, seed: u64) -> Result<AnalysisReport> {
    let group = &parsed.group;
    let cocycle = &parsed.cocycle;
    let n = group.order();
    let abelian = group.is_abelian();

    let period_closed = if abelian {
        Some(cocycle.period_abelian()?.period)
    } else {
        None
    };
    let period_brute = if n <= BRUTEFORCE_CAP {
        Some(cocycle.period_bruteforce()?.period)
    } else {
        None
    };
    let period = period_closed.or(period_brute).ok_or_else(|| {
        Error::ResourceLimit(format!(
            "no period algorithm applies: the group is non-abelian and larger \
             than the brute-force cap {BRUTEFORCE_CAP}"
        ))
    })?;

    let radical = if abelian {
        let r = cocycle.radical()?;
        Some(RadicalReport {
            size: r.order(),
            generators: generating_set(group, r.members()),
        })
    } else {
        None
    };

    let algebra = TwistedAlgebra::new(cocycle.clone());
    let regular = algebra.alpha_regular_classes()?;
    let profile = decompose_with_retries(&algebra, seed)?;
    let index = rep_index(&profile);

    let mut checks = Vec::new();
    checks.push(CheckReport {
        name: "period_divides_index".into(),
        passed: index % period == 0,
        detail: format!("period {period}, index {index}"),
    });
    checks.push(CheckReport {
        name: "wedderburn_dimension".into(),
        passed: profile.sum_of_squares() == n as u64,
        detail: format!(
            "sum of degree squares {} vs |G| = {n}",
            profile.sum_of_squares()
        ),
    });
    checks.push(CheckReport {
        name: "wedderburn_class_count".into(),
        passed: profile.irreducible_count() == regular.len(),
        detail: format!(
            "{} irreducibles vs {} regular classes",
            profile.irreducible_count(),
            regular.len()
        ),
    });
    if let (Some(pc), Some(pb)) = (period_closed, period_brute) {
        checks.push(CheckReport {
            name: "period_oracle_agreement".into(),
            passed: pc == pb,
            detail: format!("closed form {pc}, brute force {pb}"),
        });
    }
    if let Some(r) = &radical {
        let idx = (n / r.size) as u64;
        let root = arith::isqrt_exact(idx);
        checks.push(CheckReport {
            name: "radical_index_square".into(),
            passed: root.is_some(),
            detail: format!("[G : radical] = {idx}"),
        });
        if let Some(d) = root {
            checks.push(CheckReport {
                name: "degree_formula".into(),
                passed: profile.common_degree() == Some(d),
                detail: format!(
                    "all degrees should equal sqrt([G:radical]) = {d}; profile {:?}",
                    profile.entries()
                ),
            });
        }
    }

    Ok(AnalysisReport {
        tool_version: TOOL_VERSION.into(),
        seed,
        group: parsed.echo.group.clone(),
        cocycle: parsed.echo.cocycle.clone(),
        order: n,
        period,
        period_bruteforce: period_brute,
        radical,
        alpha_regular_classes: regular.len(),
        degree_profile: profile
            .entries()
            .iter()
            .map(|&(degree, multiplicity)| DegreeEntry {
                degree,
                multiplicity,
            })
            .collect(),
        index,
        checks,
    })
}

/// Instance file describing a constructed certificate instance.
pub fn certificate_instance_file(cert: &Certificate) -> InstanceFile {
    InstanceFile {
        group: GroupSection {
            invariant_factors: Some(cert.instance.group.factors().to_vec()),
            cayley_table: None,
        },
        cocycle: CocycleSection {
            modulus: cert.instance.bilinear.modulus(),
            bilinear: Some(cert.instance.bilinear.matrix()),
            table: None,
        },
    }
}

/// Report for a constructed certificate, in the same shape as an analysis
/// report (and re-parseable as an instance file).
pub fn certificate_report(cert: &Certificate) -> AnalysisReport {
    let file = certificate_instance_file(cert);
    let radical = cert
        .checks
        .iter()
        .find(|c| c.name == "radical_trivial" && c.passed)
        .map(|_| RadicalReport {
            size: 1,
            generators: vec![],
        });
    AnalysisReport {
        tool_version: TOOL_VERSION.into(),
        seed: cert.seed,
        group: file.group,
        cocycle: file.cocycle,
        order: cert.instance.table.order(),
        period: cert.computed_period.unwrap_or(0),
        period_bruteforce: None,
        radical,
        alpha_regular_classes: cert
            .degree_profile
            .as_ref()
            .map(|p| p.irreducible_count())
            .unwrap_or(0),
        degree_profile: cert
            .degree_profile
            .as_ref()
            .map(|p| {
                p.entries()
                    .iter()
                    .map(|&(degree, multiplicity)| DegreeEntry {
                        degree,
                        multiplicity,
                    })
                    .collect()
            })
            .unwrap_or_default(),
        index: cert.computed_index.unwrap_or(0),
        checks: cert
            .checks
            .iter()
            .map(|c| CheckReport {
                name: c.name.clone(),
                passed: c.passed,
                detail: c.detail.clone(),
            })
            .collect(),
    }
}

/// Instance file for a seeded random bilinear cocycle.
pub fn random_instance_file(factors: &[u64], modulus: u64, seed: u64) -> Result<InstanceFile> {
    let group = FiniteAbelianGroup::new(factors.to_vec())?;
    let form = BilinearForm::random(group, modulus, seed)?;
    Ok(InstanceFile {
        group: GroupSection {
            invariant_factors: Some(factors.to_vec()),
            cayley_table: None,
        },
        cocycle: CocycleSection {
            modulus,
            bilinear: Some(form.matrix()),
            table: None,
        },
    })
}

pub fn instance_file_to_json(file: &InstanceFile) -> String {
    let mut s = serde_json::to_string_pretty(file).expect("instance serializes");
    s.push('\n');
    s
}
