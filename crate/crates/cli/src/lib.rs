//! Commands behind the `arclab` binary. Each returns a [`Report`] that can
//! be printed as text or serialized as a JSON document.

use std::fmt::Write as _;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use serde::Serialize;
use serde_json::{json, Value};

use arclab_core::arcgeom::ArcConfig;
use arclab_core::certifier::{
    bound_scan, conjecture_scan, expected_even_nullity, hypersurface_licensed, nullity_one_route_from, property_w_from,
    recover_cosecants, CertError, MnAnalysis, RecoverySource, RecoveryStatus,
};
use arclab_core::hypersurf::{build_surface, cosecant_zero_audit, restriction_is_square, tangent_identity_check};
use arclab_core::subsets::Subsets;
use arclab_core::{ArcError, ArcFile, LinearForm, Subset};

pub const SCHEMA_VERSION: u32 = 1;
pub const DEFAULT_SEED: u64 = 0x5eed;
pub const DEFAULT_BUDGET: u64 = 50_000_000;

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    pub inputs: Value,
    pub result: Value,
    /// Wall-clock time; the only field that varies between identical runs.
    pub elapsed_ms: u64,
    #[serde(skip)]
    text: String,
}

impl Report {
    fn new(command: &str, inputs: Value, result: Value, text: String, started: Instant) -> Self {
        Report {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            inputs,
            result,
            elapsed_ms: started.elapsed().as_millis() as u64,
            text,
        }
    }

    pub fn text(&self) -> &str {
        &self.text
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

pub fn load_arc(path: &str, modulus: Option<&[u32]>) -> Result<ArcFile> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {path}"))?;
    ArcFile::parse_with_modulus(&text, modulus).with_context(|| format!("parsing {path}"))
}

fn arc_inputs(path: &str, af: &ArcFile) -> Value {
    json!({
        "file": path,
        "p": af.p,
        "h": af.h,
        "q": af.arc.field().q(),
        "modulus": af.arc.field().modulus(),
        "k": af.arc.k(),
        "size": af.arc.len(),
    })
}

fn form_text(g: &ArcConfig, l: &LinearForm) -> String {
    let f = g.field();
    let words: Vec<String> = l.coeffs().iter().map(|&c| f.format_elem(c)).collect();
    format!("[{}]", words.join(" "))
}

pub fn cmd_analyze(path: &str, af: &ArcFile, n: usize) -> Result<Report> {
    let started = Instant::now();
    let g = &af.arc;
    let an = MnAnalysis::new(g, n)?;
    let cert = an.certificate();
    let result = json!({
        "n": n,
        "rows": an.rows(),
        "cols": an.cm.matrix().cols(),
        "rank": an.rank(),
        "full_row_rank": an.rows(),
        "nullity": an.nullity(),
        "weight_one": cert.is_some(),
        "weight_one_row": cert.as_ref().map(|c| c.row.clone()),
        "forbidden_size": an.cm.forbidden_size(),
        "nullity_one_without_weight_one": nullity_one_route_from(&an),
    });
    let mut text = String::new();
    writeln!(text, "M_{n}: {} x {}", an.rows(), an.cm.matrix().cols())?;
    writeln!(text, "rank {} (full row rank {})", an.rank(), an.rows())?;
    match &cert {
        Some(c) => writeln!(
            text,
            "weight-one vector: YES (row {:?}); no arc of size {} contains this arc",
            c.row, c.forbidden_size
        )?,
        None => writeln!(text, "weight-one vector: NO")?,
    }
    if nullity_one_route_from(&an) {
        writeln!(
            text,
            "nullity 1: co-secants of a size-{} extension are determined",
            an.cm.forbidden_size()
        )?;
    }
    Ok(Report::new(
        "analyze",
        json!({"arc": arc_inputs(path, af), "n": n}),
        result,
        text,
        started,
    ))
}

pub fn cmd_bound(path: &str, af: &ArcFile) -> Result<Report> {
    let started = Instant::now();
    let g = &af.arc;
    let inputs = json!({"arc": arc_inputs(path, af)});
    let mut text = String::new();
    match bound_scan(g) {
        Ok(scan) => {
            for s in &scan.steps {
                writeln!(
                    text,
                    "n = {}: rank {} of {}, weight-one {}",
                    s.n,
                    s.rank,
                    s.rows,
                    yes_no(s.weight_one)
                )?;
            }
            writeln!(
                text,
                "n0 = {}; largest arc containing this arc has at most {} points",
                scan.n0, scan.max_size_bound
            )?;
            let result = json!({
                "verdict": "bounded",
                "n0": scan.n0,
                "forbidden_size": scan.certificate.forbidden_size,
                "max_size_bound": scan.max_size_bound,
                "certificate_row": scan.certificate.row,
                "steps": scan.steps,
            });
            Ok(Report::new("bound", inputs, result, text, started))
        }
        Err(CertError::NoCertificate { max_n, steps }) => {
            let even = g.field().is_even();
            let mut rows = Vec::new();
            for s in &steps {
                let expected = even.then(|| expected_even_nullity(g, s.n));
                write!(
                    text,
                    "n = {}: rank {} of {}, nullity {}",
                    s.n, s.rank, s.rows, s.nullity
                )?;
                if let Some(e) = expected {
                    write!(text, " (even-q law predicts {e})")?;
                }
                writeln!(text)?;
                rows.push(json!({"step": s, "expected_even_nullity": expected}));
            }
            writeln!(text, "no certificate for n = 0..={max_n}")?;
            let result = json!({"verdict": "no_certificate", "max_n": max_n, "steps": rows});
            Ok(Report::new("bound", inputs, result, text, started))
        }
        Err(e) => Err(e.into()),
    }
}

pub fn cmd_cosecants(path: &str, af: &ArcFile, n: usize) -> Result<Report> {
    let started = Instant::now();
    let g = &af.arc;
    let an = MnAnalysis::new(g, n)?;
    let report = property_w_from(&an);
    let licensed = hypersurface_licensed(g, n);
    let inputs = json!({"arc": arc_inputs(path, af), "n": n});
    let mut text = String::new();
    writeln!(
        text,
        "target size {}; t = {}; Property W: {}",
        an.cm.forbidden_size(),
        an.cm.t(),
        yes_no(report.holds)
    )?;
    if let Some(c) = an.certificate() {
        writeln!(
            text,
            "note: weight-one vector at row {:?}; the target size is already excluded",
            c.row
        )?;
    }
    writeln!(
        text,
        "dual hypersurface determined (2n >= |G| - k - 1 or q even): {}",
        yes_no(licensed)
    )?;

    if !report.holds {
        let failing = report.failing();
        writeln!(
            text,
            "Property W fails for {} subsets A, e.g. {:?}",
            failing.len(),
            failing[0]
        )?;
        let result = json!({
            "property_w": false,
            "verdict": "property_w_missing",
            "failing": failing,
            "hypersurface_licensed": licensed,
        });
        return Ok(Report::new("property-w", inputs, result, text, started));
    }

    let pred = match recover_cosecants(&an, RecoverySource::PropertyW(&report)) {
        Ok(p) => Some(p),
        Err(CertError::NotApplicable(msg)) => {
            writeln!(text, "no co-secants to recover: {msg}")?;
            None
        }
        Err(e) => return Err(e.into()),
    };
    let mut per_a = Vec::new();
    if let Some(pred) = &pred {
        for (p, w) in pred.per_a.iter().zip(&report.witnesses) {
            let forms: Vec<String> = p.forms.iter().map(|l| form_text(g, l)).collect();
            let status = match &p.status {
                RecoveryStatus::Split => "split".to_string(),
                RecoveryStatus::NonSplitting { roots } => format!("non-splitting ({roots} roots)"),
                RecoveryStatus::Inconsistent => "inconsistent".to_string(),
            };
            writeln!(text, "A = {:?} pivot {}: {status}: {}", p.a, p.pivot, forms.join(" "))?;
            per_a.push(json!({
                "a": p.a,
                "pivot": p.pivot,
                "partners": w.partners.iter().map(|x| x.y).collect::<Vec<_>>(),
                "status": p.status,
                "cosecants": forms,
            }));
        }
        if !pred.all_split() {
            writeln!(
                text,
                "some f_A do not split: no arc of size {} contains this arc",
                an.cm.forbidden_size()
            )?;
        }
    }
    let result = json!({
        "property_w": true,
        "verdict": match &pred {
            Some(p) if p.all_split() => "determined",
            Some(_) => "excluded_by_non_splitting",
            None => "trivial",
        },
        "t": an.cm.t(),
        "target_size": an.cm.forbidden_size(),
        "hypersurface_licensed": licensed,
        "per_a": per_a,
    });
    Ok(Report::new("property-w", inputs, result, text, started))
}

pub fn cmd_hypersurface(path: &str, af: &ArcFile) -> Result<Report> {
    let started = Instant::now();
    let s = &af.arc;
    let surface = build_surface(s)?;
    let mut t9_fail = Vec::new();
    let mut zero_fail = Vec::new();
    let mut square_fail = Vec::new();
    let mut cosecants = 0;
    let subsets: Vec<Subset> = Subsets::new(s.len(), s.k() - 2).collect();
    for a in &subsets {
        if !tangent_identity_check(&surface, a).holds() {
            t9_fail.push(a.clone());
        }
        let (checked, nonzero) = cosecant_zero_audit(&surface, a);
        cosecants += checked;
        if nonzero > 0 {
            zero_fail.push(a.clone());
        }
        if restriction_is_square(&surface, a) == Some(false) {
            square_fail.push(a.clone());
        }
    }
    let even = surface.is_even();
    let mut text = String::new();
    writeln!(
        text,
        "{} branch; t = {}; |E| = {}; degree {}",
        if even { "even" } else { "odd" },
        s.t(),
        surface.e().len(),
        surface.degree()
    )?;
    writeln!(
        text,
        "tangent identity on pencils: {}/{} subsets A",
        subsets.len() - t9_fail.len(),
        subsets.len()
    )?;
    writeln!(
        text,
        "co-secant duals that are zeros: {}",
        if zero_fail.is_empty() { "all" } else { "NOT all" }
    )?;
    if !even {
        writeln!(
            text,
            "restrictions to dual lines are squares: {}",
            yes_no(square_fail.is_empty())
        )?;
    }
    let result = json!({
        "branch": if even { "even" } else { "odd" },
        "t": s.t(),
        "e": surface.e(),
        "degree": surface.degree(),
        "subsets_checked": subsets.len(),
        "cosecants_checked": cosecants,
        "tangent_identity_failures": t9_fail,
        "cosecant_zero_failures": zero_fail,
        "square_failures": square_fail,
    });
    Ok(Report::new(
        "hypersurface",
        json!({"arc": arc_inputs(path, af)}),
        result,
        text,
        started,
    ))
}

pub fn cmd_search(path: &str, af: &ArcFile, target: Option<usize>, budget: u64) -> Result<Report> {
    let started = Instant::now();
    let g = &af.arc;
    let inputs = json!({"arc": arc_inputs(path, af), "target": target, "budget": budget});
    let mut text = String::new();
    let result = match target {
        Some(target) => {
            let found = g.arcs_of_size(target, 1, budget).map_err(budget_err)?;
            match found.first() {
                Some(s) => {
                    writeln!(text, "found an arc of size {target} containing this arc:")?;
                    let body = ArcFile::from_arc(s.clone()).to_text();
                    for line in body.lines().skip(2) {
                        writeln!(text, "  {line}")?;
                    }
                    let pts: Vec<Vec<String>> = s
                        .points()
                        .iter()
                        .map(|v| v.iter().map(|&x| s.field().format_elem(x)).collect())
                        .collect();
                    json!({"target": target, "found": true, "arc": pts})
                }
                None => {
                    writeln!(text, "search exhausted: no arc of size {target} contains this arc")?;
                    json!({"target": target, "found": false})
                }
            }
        }
        None => {
            let sizes = g.complete_sizes(budget).map_err(budget_err)?;
            writeln!(text, "sizes of complete arcs containing this arc: {sizes:?}")?;
            json!({"complete_sizes": sizes})
        }
    };
    Ok(Report::new("search", inputs, result, text, started))
}

fn budget_err(e: ArcError) -> anyhow::Error {
    match e {
        ArcError::BudgetExceeded(b) => anyhow::anyhow!("search budget of {b} nodes exceeded; raise --budget"),
        e => e.into(),
    }
}

#[derive(Debug, Clone, Copy)]
pub struct ConjectureArgs {
    pub p: u32,
    pub h: u32,
    pub k: usize,
    pub n: usize,
    pub samples: usize,
    pub budget: u64,
    pub seed: u64,
}

pub fn cmd_conjecture(args: ConjectureArgs) -> Result<Report> {
    let started = Instant::now();
    let ConjectureArgs {
        p,
        h,
        k,
        n,
        samples,
        budget,
        seed,
    } = args;
    if k < 3 {
        bail!("k must be at least 3");
    }
    let stats = conjecture_scan(p, h, k, n, samples, budget, seed)?;
    let mut text = String::new();
    writeln!(
        text,
        "arcs of size {} in V_{k}(F_{}), n = {n}: {} examined ({}), {} certified ({:.1}%)",
        stats.arc_size,
        (p as u64).pow(h),
        stats.examined,
        if stats.exhaustive {
            "all, up to projectivity"
        } else {
            "random sample"
        },
        stats.certified,
        100.0 * stats.fraction_certified()
    )?;
    writeln!(text, "k <= p + n(p - 2): {}", yes_no(stats.in_range))?;
    let uncertified: Vec<Vec<Vec<String>>> = stats
        .uncertified
        .iter()
        .map(|g| {
            g.points()
                .iter()
                .map(|v| v.iter().map(|&x| g.field().format_elem(x)).collect())
                .collect()
        })
        .collect();
    if !stats.counterexamples().is_empty() {
        writeln!(
            text,
            "{} uncertified arcs inside the conjectured range",
            stats.counterexamples().len()
        )?;
    }
    let result = json!({
        "stats": stats,
        "fraction_certified": stats.fraction_certified(),
        "uncertified": uncertified,
    });
    let inputs = json!({"p": p, "h": h, "k": k, "n": n, "samples": samples, "budget": budget, "seed": seed});
    Ok(Report::new("conjecture-scan", inputs, result, text, started))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "YES"
    } else {
        "NO"
    }
}

/// Parses `1,2,0,0,2` (or space-separated) modulus coefficients.
pub fn parse_modulus(s: &str) -> Result<Vec<u32>> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|w| !w.is_empty())
        .map(|w| w.parse::<u32>().with_context(|| format!("bad modulus coefficient {w}")))
        .collect()
}
