//! Command-line front end.
//!
//! Every subcommand prints a report (text or JSON) whose numeric
//! claims carry their own evidence: ranks come with the apolar witness
//! that produced them, sweeps state their seed and sample count, and
//! the verification commands name the first check that failed. Exit
//! codes: 0 on success, 1 on bad input or a computation error, 2 when
//! a verification-style invariant did not hold.

use clap::{Parser, Subcommand, ValueEnum};
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use std::time::Instant;

use crate::binomial::{binomial_rank, binomial_witness, BinomialSpec};
use crate::cover::{
    all_triples, build_cover_report, canonical_frame, enumerate_rank_two,
    power_sum_decomposition, terracini_transversality, RootsOfUnity,
};
use crate::error::{Error, Result};
use crate::field::{CyclotomicField, Field, Rational};
use crate::forms::{hilbert_function, BinaryForm};
use crate::json::{
    binomial_witness_to_json, cover_report_to_json, cyclotomic_certificate_to_json,
    cyclotomic_form_to_json, form_from_json, rational_certificate_to_json, ParsedForm,
};
use crate::sylvester::{apolar_generators, classify_secant_point, waring_rank};

/// Seed used by sampling sweeps unless `--seed` overrides it.
pub const DEFAULT_SEED: u64 = 17;

#[derive(Parser)]
#[command(
    name = "waring",
    version,
    about = "Exact Waring ranks of binary forms, with replayable certificates"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    output: Format,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Waring rank of a form, with the apolar witness behind it.
    Rank {
        /// The form as JSON: {"degree": d, "field": "rational" | {"cyclotomic": n}, "coeffs": [...]}.
        #[arg(long)]
        form: String,
    },
    /// Closed-form rank of a two-term form, from its exponents alone.
    Binomial {
        /// Smaller x-exponent (the form is a·x^r·y^(s+alpha) + b·x^(r+alpha)·y^s).
        #[arg(long)]
        r: Option<usize>,
        /// Larger y-exponent's partner; requires r <= s.
        #[arg(long)]
        s: Option<usize>,
        /// Exponent gap; must be at least 1.
        #[arg(long)]
        alpha: Option<usize>,
        /// Alternative input: the four exponents X1 Y1 X2 Y2 of the two monomials.
        #[arg(long, num_args = 4, value_names = ["X1", "Y1", "X2", "Y2"])]
        monomials: Option<Vec<usize>>,
    },
    /// Catalecticant ranks HF(i) for i = 0..d.
    Hilbert {
        #[arg(long)]
        form: String,
    },
    /// The two generators of the apolar ideal.
    Generators {
        #[arg(long)]
        form: String,
    },
    /// Position of the form relative to the rational normal curve.
    Classify {
        #[arg(long)]
        form: String,
    },
    /// All degree-d forms of rank two divisible by three fixed linear forms.
    Enumerate {
        #[arg(long)]
        d: usize,
        /// The three linear forms as a JSON array; defaults to [x+y, x, y].
        #[arg(long = "L", value_name = "JSON")]
        frame: Option<String>,
    },
    /// Check the counting and partition claims of the enumeration, degree by degree.
    VerifyCover {
        /// Single degree to check.
        #[arg(long)]
        d: Option<usize>,
        /// Check every degree from 4 up to this one.
        #[arg(long)]
        dmax: Option<usize>,
    },
    /// Sweep all two-term shapes, comparing the rank table against the engine.
    VerifyBinomial {
        /// Largest total degree r+s+alpha to cover.
        #[arg(long)]
        dmax: usize,
        /// Sampling seed for the random coefficients.
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Rank of the tangent-condition matrix at every decomposable point.
    Terracini {
        #[arg(long)]
        d: usize,
    },
}

struct Outcome {
    report: Value,
    text: Vec<String>,
    failed_check: Option<String>,
}

/// Parses the argument list, runs the requested computation and
/// returns (exit code, full report text). The binary is a thin shell
/// around this so that tests can drive the interface directly.
pub fn run<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => return (1, e.to_string()),
    };
    let start = Instant::now();
    match dispatch(&cli.command) {
        Ok(mut outcome) => {
            let elapsed = start.elapsed().as_millis() as u64;
            outcome.report["elapsed_ms"] = json!(elapsed);
            outcome.text.push(format!("elapsed: {elapsed} ms"));
            let mut code = 0;
            if let Some(check) = &outcome.failed_check {
                outcome.report["failed_check"] = json!(check);
                outcome.text.push(format!("verification failed: {check}"));
                code = 2;
            }
            let body = match cli.output {
                Format::Json => serde_json::to_string_pretty(&outcome.report)
                    .expect("reports are plain JSON values"),
                Format::Text => outcome.text.join("\n"),
            };
            (code, body)
        }
        Err(e) => {
            let code = match e {
                Error::Verification(_) => 2,
                _ => 1,
            };
            (code, format!("error: {e}"))
        }
    }
}

fn dispatch(cmd: &Command) -> Result<Outcome> {
    match cmd {
        Command::Rank { form } => rank_outcome(form),
        Command::Binomial { r, s, alpha, monomials } => {
            binomial_outcome(*r, *s, *alpha, monomials.as_deref())
        }
        Command::Hilbert { form } => hilbert_outcome(form),
        Command::Generators { form } => generators_outcome(form),
        Command::Classify { form } => classify_outcome(form),
        Command::Enumerate { d, frame } => enumerate_outcome(*d, frame.as_deref()),
        Command::VerifyCover { d, dmax } => verify_cover_outcome(*d, *dmax),
        Command::VerifyBinomial { dmax, seed } => verify_binomial_outcome(*dmax, *seed),
        Command::Terracini { d } => terracini_outcome(*d),
    }
}

fn parse_form_arg(text: &str) -> Result<ParsedForm> {
    crate::json::form_from_str(text)
}

fn rank_outcome(text: &str) -> Result<Outcome> {
    let parsed = parse_form_arg(text)?;
    let (rank, branch, witness, certificate) = match &parsed {
        ParsedForm::Rational(f) => {
            let cert = waring_rank(f)?;
            let witness = cert.witness.to_string();
            (cert.rank, cert.branch.as_str(), witness, rational_certificate_to_json(&cert))
        }
        ParsedForm::Cyclotomic(f) => {
            let cert = waring_rank(f)?;
            let witness = cert.witness.to_string();
            (cert.rank, cert.branch.as_str(), witness, cyclotomic_certificate_to_json(&cert))
        }
    };
    Ok(Outcome {
        report: json!({
            "command": "rank",
            "form": parsed.to_json(),
            "rank": rank,
            "certificate": certificate,
        }),
        text: vec![
            "command: rank".into(),
            format!("form: {}", parsed.describe()),
            format!("rank: {rank}"),
            format!("branch: {branch}"),
            format!("witness: {witness}"),
        ],
        failed_check: None,
    })
}

fn binomial_outcome(
    r: Option<usize>,
    s: Option<usize>,
    alpha: Option<usize>,
    monomials: Option<&[usize]>,
) -> Result<Outcome> {
    let spec = match (r, s, alpha, monomials) {
        (Some(r), Some(s), Some(alpha), None) => BinomialSpec::new(r, s, alpha)?,
        (None, None, None, Some(m)) if m.len() == 4 => {
            BinomialSpec::from_monomials((m[0], m[1]), (m[2], m[3]))?
        }
        _ => {
            return Err(Error::Parse(
                "give either --r --s --alpha or --monomials X1 Y1 X2 Y2".into(),
            ))
        }
    };
    let rank = binomial_rank(&spec);
    let witness = binomial_witness(&spec)?;
    let shape = spec.normalized_form()?;
    Ok(Outcome {
        report: json!({
            "command": "binomial",
            "r": spec.r(),
            "s": spec.s(),
            "alpha": spec.alpha(),
            "degree": spec.degree(),
            "rank": rank,
            "shape": crate::json::rational_form_to_json(&shape),
            "witness": binomial_witness_to_json(&witness),
        }),
        text: vec![
            "command: binomial".into(),
            format!("r: {}, s: {}, alpha: {}", spec.r(), spec.s(), spec.alpha()),
            format!("degree: {}", spec.degree()),
            format!("shape: {shape}"),
            format!("rank: {rank}"),
            format!(
                "witness: {} (case {}, square-free: {})",
                witness.g1,
                witness.case.as_str(),
                witness.square_free
            ),
        ],
        failed_check: None,
    })
}

fn hilbert_values<F: Field>(f: &BinaryForm<F>) -> Result<Vec<usize>> {
    (0..=f.degree()).map(|i| hilbert_function(f, i)).collect()
}

fn hilbert_outcome(text: &str) -> Result<Outcome> {
    let parsed = parse_form_arg(text)?;
    let values = match &parsed {
        ParsedForm::Rational(f) => hilbert_values(f)?,
        ParsedForm::Cyclotomic(f) => hilbert_values(f)?,
    };
    Ok(Outcome {
        report: json!({
            "command": "hilbert",
            "form": parsed.to_json(),
            "values": values,
        }),
        text: vec![
            "command: hilbert".into(),
            format!("form: {}", parsed.describe()),
            format!(
                "values: [{}]",
                values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ")
            ),
        ],
        failed_check: None,
    })
}

fn generators_outcome(text: &str) -> Result<Outcome> {
    let parsed = parse_form_arg(text)?;
    let (first, second, first_json, second_json) = match &parsed {
        ParsedForm::Rational(f) => {
            let (g1, g2) = apolar_generators(f)?;
            let j = (
                crate::json::rational_form_to_json(&g1),
                crate::json::rational_form_to_json(&g2),
            );
            (g1.to_string(), g2.to_string(), j.0, j.1)
        }
        ParsedForm::Cyclotomic(f) => {
            let (g1, g2) = apolar_generators(f)?;
            let j = (cyclotomic_form_to_json(&g1), cyclotomic_form_to_json(&g2));
            (g1.to_string(), g2.to_string(), j.0, j.1)
        }
    };
    Ok(Outcome {
        report: json!({
            "command": "generators",
            "form": parsed.to_json(),
            "generators": [first_json, second_json],
        }),
        text: vec![
            "command: generators".into(),
            format!("form: {}", parsed.describe()),
            format!("g1: {first}"),
            format!("g2: {second}"),
        ],
        failed_check: None,
    })
}

fn classify_outcome(text: &str) -> Result<Outcome> {
    let parsed = parse_form_arg(text)?;
    let class = match &parsed {
        ParsedForm::Rational(f) => classify_secant_point(f)?,
        ParsedForm::Cyclotomic(f) => classify_secant_point(f)?,
    };
    Ok(Outcome {
        report: json!({
            "command": "classify",
            "form": parsed.to_json(),
            "class": class.as_str(),
        }),
        text: vec![
            "command: classify".into(),
            format!("form: {}", parsed.describe()),
            format!("class: {}", class.as_str()),
        ],
        failed_check: None,
    })
}

fn parse_frame(text: &str, field: &CyclotomicField) -> Result<[BinaryForm<CyclotomicField>; 3]> {
    let v: Value = serde_json::from_str(text)
        .map_err(|e| Error::Parse(format!("--L is not valid JSON: {e}")))?;
    let arr = v
        .as_array()
        .filter(|a| a.len() == 3)
        .ok_or_else(|| Error::Parse("--L wants a JSON array of exactly three degree-1 forms".into()))?;
    let mut out = Vec::with_capacity(3);
    for item in arr {
        let parsed = form_from_json(item)?;
        if parsed.degree() != 1 {
            return Err(Error::InvalidTriple(
                "every entry of --L must have degree 1".into(),
            ));
        }
        let lifted = match parsed {
            ParsedForm::Rational(f) => {
                let coeffs = f.coeffs().iter().map(|c| field.from_rational(c)).collect();
                BinaryForm::new(field.clone(), 1, coeffs)?
            }
            ParsedForm::Cyclotomic(f) => {
                let coeffs = f
                    .coeffs()
                    .iter()
                    .map(|c| field.embed_from(f.field(), c))
                    .collect::<Result<_>>()?;
                BinaryForm::new(field.clone(), 1, coeffs)?
            }
        };
        out.push(lifted);
    }
    Ok([out[0].clone(), out[1].clone(), out[2].clone()])
}

fn enumerate_outcome(d: usize, frame_text: Option<&str>) -> Result<Outcome> {
    let roots = RootsOfUnity::new(d)?;
    let frame = match frame_text {
        None => canonical_frame(roots.field()),
        Some(text) => parse_frame(text, roots.field())?,
    };
    let forms = enumerate_rank_two(&roots, &frame)?;
    let mut text = vec![
        "command: enumerate".into(),
        format!("d: {d}"),
        format!(
            "frame: {}",
            frame.iter().map(|f| f.to_string()).collect::<Vec<_>>().join(", ")
        ),
        format!("count: {}", forms.len()),
    ];
    for f in &forms {
        text.push(format!("  {f}"));
    }
    Ok(Outcome {
        report: json!({
            "command": "enumerate",
            "d": d,
            "frame": frame.iter().map(cyclotomic_form_to_json).collect::<Vec<_>>(),
            "count": forms.len(),
            "forms": forms.iter().map(cyclotomic_form_to_json).collect::<Vec<_>>(),
        }),
        text,
        failed_check: None,
    })
}

fn verify_cover_outcome(d: Option<usize>, dmax: Option<usize>) -> Result<Outcome> {
    let degrees: Vec<usize> = match (d, dmax) {
        (Some(d), None) => vec![d],
        (None, Some(m)) => (4..=m).collect(),
        _ => {
            return Err(Error::Parse(
                "give exactly one of --d <degree> or --dmax <degree>".into(),
            ))
        }
    };
    if degrees.is_empty() {
        return Err(Error::DegreeConstraint("--dmax must be at least 4".into()));
    }
    let mut failed = None;
    let mut reports = Vec::new();
    let mut text = vec!["command: verify-cover".into()];
    for deg in &degrees {
        let rep = build_cover_report(*deg)?;
        let expected = (deg - 1) * (deg - 2) / 2;
        let counts_ok = rep.triple_count == deg * (deg - 1) * (deg - 2)
            && rep.orbit_count == expected
            && rep.image_size == expected
            && rep.orbit_sizes.iter().all(|s| *s == 2 * deg);
        if failed.is_none() {
            if !counts_ok {
                failed = Some(format!("degree {deg}: orbit/image counting"));
            } else if !rep.partitions_equal {
                failed = Some(format!("degree {deg}: partition comparison"));
            } else if !rep.transversality_all {
                failed = Some(format!("degree {deg}: transversality"));
            }
        }
        text.push(format!(
            "d={deg}: triples={} orbits={} image={} partitions_equal={} transversality={}",
            rep.triple_count, rep.orbit_count, rep.image_size, rep.partitions_equal,
            rep.transversality_all
        ));
        reports.push(cover_report_to_json(&rep));
    }
    let report = if degrees.len() == 1 {
        let mut single = reports.pop().expect("one degree, one report");
        single["command"] = json!("verify-cover");
        single
    } else {
        json!({"command": "verify-cover", "reports": reports})
    };
    Ok(Outcome { report, text, failed_check: failed })
}

/// Outcome of a full table-versus-engine sweep over two-term shapes.
pub struct SweepOutcome {
    pub d_max: usize,
    pub seed: u64,
    pub checked: usize,
    pub mismatches: Vec<String>,
}

/// A nonzero rational with numerator and denominator drawn from
/// 1..100 and a random sign.
pub fn sample_nonzero(rng: &mut ChaCha8Rng) -> Rational {
    let numer = 1 + (rng.next_u64() % 99) as i64;
    let denom = 1 + (rng.next_u64() % 99) as i64;
    let signed = if rng.next_u64() % 2 == 1 { -numer } else { numer };
    Rational::from_pair(signed, denom).expect("denominator is positive")
}

/// Runs every shape (r, s, alpha) with r <= s, alpha >= 1 and
/// r+s+alpha <= d_max through both the closed-form table and the
/// catalecticant engine, three sampled coefficient pairs per shape.
/// Any disagreement lands in `mismatches`.
pub fn verify_binomial_sweep(d_max: usize, seed: u64) -> Result<SweepOutcome> {
    if d_max < 2 {
        return Err(Error::DegreeConstraint("the sweep needs d_max >= 2".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checked = 0usize;
    let mut mismatches = Vec::new();
    for r in 0..=d_max {
        for s in r..=d_max {
            for alpha in 1..=d_max {
                if r + s + alpha > d_max {
                    break;
                }
                let spec = BinomialSpec::new(r, s, alpha)?;
                let predicted = binomial_rank(&spec);
                for _ in 0..3 {
                    let a = sample_nonzero(&mut rng);
                    let b = sample_nonzero(&mut rng);
                    let cert = waring_rank(&spec.form(&a, &b)?)?;
                    checked += 1;
                    if cert.rank != predicted {
                        mismatches.push(format!(
                            "(r={r}, s={s}, alpha={alpha}) with a={a}, b={b}: table says {predicted}, engine says {}",
                            cert.rank
                        ));
                    }
                }
            }
        }
    }
    Ok(SweepOutcome { d_max, seed, checked, mismatches })
}

fn verify_binomial_outcome(dmax: usize, seed: u64) -> Result<Outcome> {
    let sweep = verify_binomial_sweep(dmax, seed)?;
    let failed = (!sweep.mismatches.is_empty()).then(|| {
        format!(
            "binomial table vs engine: {} of {} samples disagree",
            sweep.mismatches.len(),
            sweep.checked
        )
    });
    Ok(Outcome {
        report: json!({
            "command": "verify-binomial",
            "d_max": sweep.d_max,
            "seed": sweep.seed,
            "checked": sweep.checked,
            "mismatch_count": sweep.mismatches.len(),
            "mismatches": &sweep.mismatches,
        }),
        text: vec![
            "command: verify-binomial".into(),
            format!("d_max: {}", sweep.d_max),
            format!("seed: {}", sweep.seed),
            format!("checked: {} sampled forms", sweep.checked),
            format!("mismatches: {}", sweep.mismatches.len()),
        ],
        failed_check: failed,
    })
}

fn terracini_outcome(d: usize) -> Result<Outcome> {
    let roots = RootsOfUnity::new(d)?;
    let frame = canonical_frame(roots.field());
    let mut checked = 0usize;
    let mut first_bad = None;
    for xi in all_triples(d)? {
        let (l, t) = power_sum_decomposition(&roots, &frame, &xi)?;
        checked += 1;
        if !terracini_transversality(&l, &t, d)? && first_bad.is_none() {
            first_bad = Some(xi.indices());
        }
    }
    let all_transversal = first_bad.is_none();
    Ok(Outcome {
        report: json!({
            "command": "terracini",
            "d": d,
            "points_checked": checked,
            "all_transversal": all_transversal,
        }),
        text: vec![
            "command: terracini".into(),
            format!("d: {d}"),
            format!("points checked: {checked}"),
            format!("all transversal: {all_transversal}"),
        ],
        failed_check: first_bad.map(|(i, j, k)| {
            format!("tangent conditions dependent at triple ({i}, {j}, {k})")
        }),
    })
}
