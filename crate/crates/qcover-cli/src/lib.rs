//! Command dispatch for the `qcover` binary.
//!
//! Every subcommand is a pure function from validated input to a
//! deterministic text or JSON payload: stable term ordering comes from the
//! element grammars, and JSON objects are emitted with sorted keys. Exit
//! codes: 0 on success, 1 on a mathematical/domain error (a failed `verify`
//! suite, a zero divisor, a positivity violation), 2 on usage or parse
//! errors.

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use qcover_core::pi_ring::{format_rational, Sign};
use qcover_core::rep::{casimir_decompose, tensor_cb, ModuleVector, WeightModule};
use qcover_core::udot::{self, CbIndex};
use qcover_core::upi::{self, apply_morphism, coproduct, Morphism};
use qcover_core::{suites, Error};

pub const SCHEMA: &str = "qcover/1";

/// Exact symbolic computation in the covering quantum algebra: normal
/// forms, morphisms, canonical bases, and verification suites.
#[derive(Parser, Debug)]
#[command(name = "qcover", version, disable_help_subcommand = true)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Args, Debug)]
struct FormatArg {
    /// Output format.
    #[arg(long, value_enum, default_value = "text")]
    format: OutputFormat,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse an algebra element (factors in any order) and print its PBW
    /// normal form.
    NormalForm {
        element: String,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Multiply two algebra elements.
    Mul {
        x: String,
        y: String,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Apply one of the (anti-)automorphisms psi, omega, tau, rho.
    Morphism {
        name: String,
        x: String,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Coproduct of an algebra element in the twisted tensor square.
    Coproduct {
        x: String,
        #[command(flatten)]
        format: FormatArg,
    },
    /// A canonical basis element of the modified algebra, in its natural
    /// shape.
    Cb {
        #[arg(long)]
        a: i64,
        #[arg(long)]
        b: i64,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Expand a modified-algebra element in the canonical basis.
    CbExpand {
        element: String,
        #[command(flatten)]
        format: FormatArg,
    },
    /// The canonical basis of the standard tensor module.
    TensorCb {
        #[arg(long)]
        s: i64,
        #[arg(long)]
        t: i64,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Structure constants of a product of canonical basis elements.
    StructConst {
        /// First index, as `a,b,k`.
        #[arg(long, allow_hyphen_values = true)]
        i1: String,
        /// Second index, as `a,b,k`.
        #[arg(long, allow_hyphen_values = true)]
        i2: String,
        #[command(flatten)]
        format: FormatArg,
    },
    /// The contravariant bilinear form of two modified-algebra elements.
    Form {
        x: String,
        y: String,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Specialize a modified-algebra element at p = +1 or p = -1.
    Specialize {
        #[arg(long, allow_hyphen_values = true)]
        pi: String,
        element: String,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Decompose a tensor product of simple modules into isotypic pieces.
    Decompose {
        /// Tensor factors, as `s,t`.
        #[arg(long)]
        tensor: String,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Run a verification suite (or `all`).
    Verify {
        /// One of: relations, automorphisms, hopf, theta, casimir,
        /// cb-tensor, cb-udot, positivity, form, specialize, all.
        suite: String,
        /// Bound on the divided powers in the commutation identities.
        #[arg(long, default_value_t = 6)]
        max_rs: i64,
        /// Random elements per sector for the automorphism relations.
        #[arg(long, default_value_t = 100)]
        samples: usize,
        /// Bound on divided powers in the Hopf checks.
        #[arg(long, default_value_t = 4)]
        max_power: i64,
        /// Bound for the quasi-R-matrix coefficient checks.
        #[arg(long, default_value_t = 10)]
        max_n: i64,
        /// Bound on the tensor factors in the quasi-R-matrix checks.
        #[arg(long, default_value_t = 4)]
        modules: i64,
        /// Bound on the simple modules in Casimir and basis checks.
        #[arg(long, default_value_t = 4)]
        max_st: i64,
        /// Bound on the divided powers of basis indices.
        #[arg(long)]
        max_ab: Option<i64>,
        /// Bound on the idempotent weights of basis indices.
        #[arg(long)]
        max_k: Option<i64>,
        /// Bound on the pure lowering pairings in the form suite.
        #[arg(long, default_value_t = 5)]
        max_pure: i64,
        /// Truncation of the Verma modules in the classification check.
        #[arg(long, default_value_t = 10)]
        cutoff: i64,
        /// Bound on the highest weights in Casimir/classification checks.
        #[arg(long, default_value_t = 8)]
        max_weight: i64,
    },
}

/// The outcome of one invocation.
#[derive(Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn ok(stdout: String) -> Outcome {
    Outcome { code: 0, stdout, stderr: String::new() }
}

fn domain_error(e: &Error) -> Outcome {
    Outcome { code: 1, stdout: String::new(), stderr: format!("error: {e}\n") }
}

fn usage_error(e: &Error) -> Outcome {
    Outcome { code: 2, stdout: String::new(), stderr: format!("error: {e}\n") }
}

/// Errors that indicate bad input text rather than a failed computation.
fn is_usage(e: &Error) -> bool {
    matches!(e, Error::Parse { .. })
}

pub fn run<I, S>(argv: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let rendered = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: rendered, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: rendered }
            };
        }
    };
    match dispatch(cli.command) {
        Ok(outcome) => outcome,
        Err(e) if is_usage(&e) => usage_error(&e),
        Err(e) => domain_error(&e),
    }
}

fn render(format: OutputFormat, text: String, json: Value) -> Outcome {
    match format {
        OutputFormat::Text => ok(format!("{text}\n")),
        OutputFormat::Json => ok(format!("{json}\n")),
    }
}

fn parse_index(text: &str) -> Result<CbIndex, Error> {
    let parts: Vec<&str> = text.split(',').map(|s| s.trim()).collect();
    if parts.len() != 3 {
        return Err(Error::parse(0, format!("expected `a,b,k`, got `{text}`")));
    }
    let nums: Result<Vec<i64>, Error> = parts
        .iter()
        .map(|p| p.parse::<i64>().map_err(|e| Error::parse(0, format!("bad index `{p}`: {e}"))))
        .collect();
    let nums = nums?;
    if nums[0] < 0 || nums[1] < 0 {
        return Err(Error::parse(0, "indices a, b must be nonnegative"));
    }
    Ok(CbIndex::new(nums[0], nums[1], nums[2]))
}

fn module_vector_text(v: &ModuleVector, t: i64) -> String {
    if v.is_zero() {
        return "0".to_string();
    }
    v.coeffs()
        .map(|(i, c)| {
            let (m, n) = ((*i as i64) / (t + 1), (*i as i64) % (t + 1));
            let prefix = if c.is_one() {
                String::new()
            } else {
                format!("({}) * ", format_rational(c))
            };
            format!("{prefix}[{m},{n}]")
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

fn dispatch(command: Command) -> Result<Outcome, Error> {
    match command {
        Command::NormalForm { element, format } => {
            let x = upi::text::parse_element(&element)?;
            let text = upi::text::format_element(&x);
            let json = json!({"schema": SCHEMA, "result": text});
            Ok(render(format.format, text, json))
        }
        Command::Mul { x, y, format } => {
            let prod = upi::text::parse_element(&x)?.mul(&upi::text::parse_element(&y)?);
            let text = upi::text::format_element(&prod);
            let json = json!({"schema": SCHEMA, "result": text});
            Ok(render(format.format, text, json))
        }
        Command::Morphism { name, x, format } => {
            let morphism: Morphism = name.parse()?;
            let image = apply_morphism(morphism, &upi::text::parse_element(&x)?);
            let text = upi::text::format_element(&image);
            let json = json!({"schema": SCHEMA, "result": text});
            Ok(render(format.format, text, json))
        }
        Command::Coproduct { x, format } => {
            let image = coproduct(&upi::text::parse_element(&x)?);
            let text = format!("{image}");
            let json = json!({"schema": SCHEMA, "result": text});
            Ok(render(format.format, text, json))
        }
        Command::Cb { a, b, k, format } => {
            if a < 0 || b < 0 {
                return Err(Error::parse(0, "indices a, b must be nonnegative"));
            }
            let idx = CbIndex::new(a, b, k);
            let text = udot::text::format_cb_natural(idx);
            let normal = udot::text::format_element(&udot::cb_element(idx));
            let json = json!({
                "schema": SCHEMA,
                "idx": [a, b, k],
                "natural": text,
                "normal_form": normal,
            });
            Ok(render(format.format, text, json))
        }
        Command::CbExpand { element, format } => {
            let x = udot::text::parse_element(&element)?;
            let expansion = udot::cb_expand(&x);
            let text = udot::text::format_cb_expansion(&expansion);
            let json = json!({
                "schema": SCHEMA,
                "terms": expansion
                    .iter()
                    .map(|(idx, c)| json!({
                        "idx": [idx.a, idx.b, idx.k],
                        "scalar": format_rational(c),
                    }))
                    .collect::<Vec<_>>(),
            });
            Ok(render(format.format, text, json))
        }
        Command::TensorCb { s, t, format } => {
            if s < 0 || t < 0 {
                return Err(Error::parse(0, "s and t must be nonnegative"));
            }
            let table = tensor_cb(s, t);
            let mut lines = Vec::new();
            let mut entries = Vec::new();
            for ((a, b), v) in &table.entries {
                lines.push(format!("({a},{b}): {}", module_vector_text(v, t)));
                let coeffs: Vec<Value> = v
                    .coeffs()
                    .map(|(i, c)| {
                        let (m, n) = ((*i as i64) / (t + 1), (*i as i64) % (t + 1));
                        let scalar = c.to_scalar().expect("tensor basis coefficients are integral");
                        json!({"m": m, "n": n, "scalar": qcover_core::pi_ring::format_scalar(&scalar)})
                    })
                    .collect();
                entries.push(json!({"a": a, "b": b, "coeffs": coeffs}));
            }
            let json = json!({"schema": SCHEMA, "s": s, "t": t, "cb": entries});
            Ok(render(format.format, lines.join("\n"), json))
        }
        Command::StructConst { i1, i2, format } => {
            let i1 = parse_index(&i1)?;
            let i2 = parse_index(&i2)?;
            let table = udot::structure_constants(i1, i2)?;
            let lines: Vec<String> = table
                .iter()
                .map(|(idx, c)| {
                    format!(
                        "CB({},{},{}): {}",
                        idx.a,
                        idx.b,
                        idx.k,
                        qcover_core::pi_ring::format_scalar(c)
                    )
                })
                .collect();
            let json = json!({
                "schema": SCHEMA,
                "i1": [i1.a, i1.b, i1.k],
                "i2": [i2.a, i2.b, i2.k],
                "products": table
                    .iter()
                    .map(|(idx, c)| json!({
                        "idx": [idx.a, idx.b, idx.k],
                        "scalar": qcover_core::pi_ring::format_scalar(c),
                    }))
                    .collect::<Vec<_>>(),
            });
            Ok(render(format.format, lines.join("\n"), json))
        }
        Command::Form { x, y, format } => {
            let value = udot::bilinear_form(
                &udot::text::parse_element(&x)?,
                &udot::text::parse_element(&y)?,
            );
            let text = format_rational(&value);
            let json = json!({"schema": SCHEMA, "result": text});
            Ok(render(format.format, text, json))
        }
        Command::Specialize { pi, element, format } => {
            let sign: Sign = pi.parse()?;
            let x = udot::text::parse_element(&element)?;
            let specialized = qcover_core::cb::specialize_udot(&x, sign)?;
            let text = if specialized.is_empty() {
                "0".to_string()
            } else {
                specialized
                    .iter()
                    .map(|(m, c)| {
                        let scalar =
                            qcover_core::pi_ring::PiScalar::from_parts(c.clone(), Default::default());
                        let prefix = if c.is_one() {
                            String::new()
                        } else {
                            format!("({}) * ", qcover_core::pi_ring::format_scalar(&scalar))
                        };
                        format!("{prefix}{}", udot::text::format_monomial(m))
                    })
                    .collect::<Vec<_>>()
                    .join(" + ")
            };
            let json = json!({"schema": SCHEMA, "pi": sign.to_string(), "result": text});
            Ok(render(format.format, text, json))
        }
        Command::Decompose { tensor, format } => {
            let parts: Vec<&str> = tensor.split(',').map(|s| s.trim()).collect();
            if parts.len() != 2 {
                return Err(Error::parse(0, format!("expected `s,t`, got `{tensor}`")));
            }
            let s: i64 = parts[0]
                .parse()
                .map_err(|e| Error::parse(0, format!("bad factor `{}`: {e}", parts[0])))?;
            let t: i64 = parts[1]
                .parse()
                .map_err(|e| Error::parse(0, format!("bad factor `{}`: {e}", parts[1])))?;
            if s < 0 || t < 0 {
                return Err(Error::parse(0, "tensor factors must be nonnegative"));
            }
            let module = WeightModule::tensor(
                WeightModule::simple(s, Sign::Plus),
                WeightModule::simple(t, Sign::Plus),
            );
            let components = casimir_decompose(&module);
            let text = format!(
                "[{}]",
                components
                    .iter()
                    .map(|(n, m)| format!("({n},{m})"))
                    .collect::<Vec<_>>()
                    .join(", ")
            );
            let json = json!({
                "schema": SCHEMA,
                "s": s,
                "t": t,
                "components": components
                    .iter()
                    .map(|(n, m)| json!({"n": n, "multiplicity": m}))
                    .collect::<Vec<_>>(),
            });
            Ok(render(format.format, text, json))
        }
        Command::Verify {
            suite,
            max_rs,
            samples,
            max_power,
            max_n,
            modules,
            max_st,
            max_ab,
            max_k,
            max_pure,
            cutoff,
            max_weight,
        } => {
            let reports = match suite.as_str() {
                "relations" => vec![suites::relations(max_rs)?],
                "automorphisms" => vec![suites::automorphisms(samples)?],
                "hopf" => vec![suites::hopf(max_power)?],
                "theta" => vec![suites::theta(max_n, modules)?],
                "casimir" => vec![suites::casimir_suite(max_weight, max_st)?],
                "classification" => vec![suites::classification(max_weight, cutoff)?],
                "cb-tensor" => vec![suites::cb_tensor(max_st)?],
                "cb-udot" => {
                    vec![suites::cb_udot(max_ab.unwrap_or(4), max_k.unwrap_or(12), max_st)?]
                }
                "positivity" => vec![suites::positivity(max_ab.unwrap_or(3), max_k.unwrap_or(8))?],
                "form" => {
                    vec![suites::form_suite(max_ab.unwrap_or(3), max_k.unwrap_or(6), max_pure)?]
                }
                "specialize" => {
                    vec![suites::specialize_suite(max_ab.unwrap_or(4), max_k.unwrap_or(12))?]
                }
                "all" => suites::run_all()?,
                other => {
                    return Err(Error::parse(0, format!("unknown suite `{other}`")));
                }
            };
            let mut lines = Vec::new();
            let prefix_with_name = reports.len() > 1;
            for report in &reports {
                for line in &report.lines {
                    if prefix_with_name {
                        lines.push(format!("[{}] {line}", report.name));
                    } else {
                        lines.push(line.clone());
                    }
                }
            }
            Ok(ok(format!("{}\n", lines.join("\n"))))
        }
    }
}
