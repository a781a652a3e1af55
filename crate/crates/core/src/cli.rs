//! Command-line front end: argument parsing, dispatch and report rendering.

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::Rational64;
use serde::Serialize;
use serde_json::{json, Value};

use crate::artin::{
    artin_rees_index, beta_lower_bound_bruteforce, solve_fx_hy, solve_linear_regular, stable_ar_scan, PolySystem,
};
use crate::bounds::{cross_check_bound, evaluate_bound, BoundParams, FormulaId};
use crate::error::{Error, Result};
use crate::order::{
    icl_envelope, icl_scan, nu, nu_bar_estimate, parse_ratio, random_elements, valuation_check, BMin, Sampling,
};
use crate::parse::{parse_list, parse_poly, parse_vectors, split_top_level};
use crate::scalar::Field;
use crate::series::{Ring, RingSpec};
use crate::subspace::{IdealSpec, ModuleSpec};
use crate::witness::{irreducibility_exhaustive, lower_bound_certificate, monomial_witness_family};

const DEFAULT_TRUNC: u32 = 8;

#[derive(Debug, Parser)]
#[command(
    name = "artin-lab",
    version,
    about = "Exact Artin-Rees, order-function and Artin-function computations"
)]
pub struct Cli {
    /// Ring variables, comma separated.
    #[arg(long, global = true, default_value = "T1,T2,T3")]
    pub vars: String,
    /// Coefficient field: 0 for the rationals or a prime below 2^31.
    #[arg(long = "char", global = true, default_value_t = 0)]
    pub characteristic: u32,
    /// Truncation degree D (work modulo m^(D+1)).
    #[arg(long, global = true)]
    pub trunc: Option<u32>,
    /// Seed for sampled scans.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Cap on enumeration size (search nodes, pairs, candidate tuples).
    #[arg(long, global = true, default_value_t = 1 << 24)]
    pub budget: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<std::path::PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SamplingMode {
    Exhaustive,
    Random,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    /// Ideal generators, comma separated.
    #[arg(long, allow_hyphen_values = true)]
    pub ideal: String,
    /// Largest degree of test elements.
    #[arg(long, default_value_t = 2)]
    pub deg_max: u32,
    #[arg(long, value_enum, default_value_t = SamplingMode::Random)]
    pub sampling: SamplingMode,
    /// Random elements added to the monomials in random mode.
    #[arg(long, default_value_t = 64)]
    pub samples: usize,
}

#[derive(Debug, Args)]
pub struct BoundArgs {
    /// prop43i, prop43ii, thm45, cor48_artin, ex433, ex434, lem64, lem66, prop72, prop73, prop74, lin31
    #[arg(long)]
    pub formula: String,
    #[arg(long)]
    pub a: Option<String>,
    #[arg(long)]
    pub b: Option<i64>,
    #[arg(long)]
    pub c: Option<i64>,
    #[arg(long = "iI")]
    pub i_i: Option<i64>,
    #[arg(long = "iP")]
    pub i_p: Option<i64>,
    #[arg(long = "iJn")]
    pub i_jn: Option<i64>,
    #[arg(long)]
    pub n: Option<i64>,
    #[arg(long)]
    pub t: Option<i64>,
    #[arg(long)]
    pub k: Option<i64>,
    #[arg(long)]
    pub ord_g: Option<i64>,
    #[arg(long)]
    pub max_ord: Option<i64>,
    #[arg(long, alias = "nu-x")]
    pub nu: Option<i64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// m-adic order and initial form of a series.
    Ord {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
    },
    /// I-adic order nu_I(x).
    Nu {
        #[arg(long, allow_hyphen_values = true)]
        ideal: String,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
    },
    /// Rees limit estimate max_n nu_I(x^n)/n.
    Nubar {
        #[arg(long, allow_hyphen_values = true)]
        ideal: String,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, default_value_t = 4)]
        n_max: u32,
    },
    /// Artin-Rees index of an ideal or submodule.
    ArIndex {
        /// Ideal generators, comma separated.
        #[arg(
            long,
            conflicts_with = "module",
            required_unless_present = "module",
            allow_hyphen_values = true
        )]
        ideal: Option<String>,
        /// Module generators as `(a,b);(c,d)`.
        #[arg(long, allow_hyphen_values = true)]
        module: Option<String>,
        #[arg(long)]
        up_to: Option<u32>,
    },
    /// Smallest b with nu(gh) <= a(nu(g)+nu(h)) + b over scanned pairs.
    IclScan {
        #[command(flatten)]
        scan: ScanArgs,
        /// Slope a (integer, `p/q` or decimal).
        #[arg(long, default_value = "1")]
        a: String,
        /// Also report b_min for a in {1, 3/2, 2}.
        #[arg(long)]
        envelope: bool,
    },
    /// Checks whether nu_I is additive on scanned pairs.
    Valcheck {
        #[command(flatten)]
        scan: ScanArgs,
    },
    /// Corrects an approximate solution of sum f_j X_j = 0.
    SolveLinreg {
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long)]
        i: u32,
        #[arg(long)]
        assume_regular: bool,
    },
    /// Corrects an approximate solution of f X + h Y = 0, f = T1^k + g.
    SolveFxhy {
        #[arg(long)]
        k: u32,
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(long, allow_hyphen_values = true)]
        h: String,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
        #[arg(long)]
        i: u32,
    },
    /// Uniform Artin-Rees scan over ideals (x) + I.
    StableAr {
        /// Base ideal generators (empty for the zero ideal).
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        ideal: String,
        /// Elements x; when absent, monomials plus seeded random elements.
        #[arg(long, allow_hyphen_values = true)]
        xs: Option<String>,
        #[arg(long, default_value_t = 2)]
        deg_max: u32,
        #[arg(long, default_value_t = 8)]
        samples: usize,
        /// Grid of slopes a.
        #[arg(long, default_value = "1,3/2,2")]
        a: String,
        #[arg(long, default_value_t = 4)]
        b_max: u32,
    },
    /// Brute-force lower bound for the Artin function of a system over F_p.
    BetaLb {
        /// Unknowns, comma separated.
        #[arg(long)]
        unknowns: String,
        /// Equations separated by `;`.
        #[arg(long, allow_hyphen_values = true)]
        eqs: String,
        /// Levels i, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        i: Vec<u32>,
    },
    /// The monomial lower-bound family at level i.
    Witness {
        #[arg(long)]
        i: u32,
        /// Also run irreducibility certificates for levels 1..=i over these primes.
        #[arg(long, value_delimiter = ',')]
        primes: Vec<u32>,
    },
    /// Exhaustive search for factorizations of T1*T2 - T3^i over F_p.
    IrrCheck {
        #[arg(long)]
        i: u32,
        #[arg(long)]
        p: u32,
    },
    /// Evaluates a catalog bound.
    Bound {
        #[command(flatten)]
        params: BoundArgs,
        /// Levels i, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        i: Vec<i64>,
    },
    /// Compares measured values against a catalog bound.
    CrossCheck {
        #[command(flatten)]
        params: BoundArgs,
        /// Measured points `i:value`, comma separated.
        #[arg(long, allow_hyphen_values = true)]
        points: String,
    },
}

#[derive(Debug, Clone, Serialize)]
pub struct RingInfo {
    pub vars: Vec<String>,
    #[serde(rename = "char")]
    pub characteristic: u32,
    pub trunc: u32,
}

/// Rows for CSV output.
#[derive(Debug, Clone, Default)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub ring: RingInfo,
    pub params: Value,
    pub result: Value,
    pub certified_up_to: Option<u32>,
    pub seed: Option<u64>,
    pub warnings: Vec<String>,
    #[serde(skip)]
    pub table: Option<Table>,
}

impl Report {
    /// Pretty JSON with sorted keys.
    pub fn to_json(&self) -> String {
        let v = serde_json::to_value(self).expect("report serializes");
        let mut s = serde_json::to_string_pretty(&v).expect("report serializes");
        s.push('\n');
        s
    }

    /// The scan table if the command has one, else `key,value` rows of the result.
    pub fn to_csv(&self) -> String {
        let table = self.table.clone().unwrap_or_else(|| {
            let rows = match &self.result {
                Value::Object(m) => m.iter().map(|(k, v)| vec![k.clone(), cell(v)]).collect(),
                other => vec![vec!["result".into(), cell(other)]],
            };
            Table {
                header: vec!["key".into(), "value".into()],
                rows,
            }
        });
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&table.header).expect("in-memory write");
        for r in &table.rows {
            w.write_record(r).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory write")).expect("utf8")
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json(),
            Format::Csv => self.to_csv(),
        }
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

fn val<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn ratio_str(q: Rational64) -> String {
    if q.is_integer() {
        q.to_integer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `argv` (program name first) and runs the command.
pub fn run_command<I, T>(argv: I) -> Result<(Report, Format)>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv).map_err(|e| Error::Parse {
        pos: 0,
        msg: e.to_string().trim().to_string(),
    })?;
    let format = cli.format;
    Ok((execute(&cli)?, format))
}

struct Ctx<'a> {
    cli: &'a Cli,
    vars: Vec<String>,
    field: Field,
}

impl Ctx<'_> {
    fn ring(&self, default_trunc: u32) -> Result<Ring> {
        RingSpec::new(self.vars.clone(), self.field, self.cli.trunc.unwrap_or(default_trunc))
    }

    fn sampling(&self, scan: &ScanArgs) -> Sampling {
        match scan.sampling {
            SamplingMode::Exhaustive => Sampling::Exhaustive,
            SamplingMode::Random => Sampling::Random {
                count: scan.samples,
                seed: self.cli.seed,
            },
        }
    }
}

struct Out {
    ring: Ring,
    params: Value,
    result: Value,
    certified_up_to: Option<u32>,
    seed: Option<u64>,
    warnings: Vec<String>,
    table: Option<Table>,
}

impl Out {
    fn new(ring: Ring, params: Value, result: Value) -> Self {
        Out {
            ring,
            params,
            result,
            certified_up_to: None,
            seed: None,
            warnings: Vec::new(),
            table: None,
        }
    }
}

fn ideal(text: &str, ring: &Ring) -> Result<IdealSpec> {
    IdealSpec::new(ring, parse_list(text, ring)?)
}

fn bound_params(args: &BoundArgs) -> Result<(FormulaId, BoundParams)> {
    let formula: FormulaId = args.formula.parse()?;
    let p = BoundParams {
        a: args.a.as_deref().map(parse_ratio).transpose()?,
        b: args.b,
        c: args.c,
        i_i: args.i_i,
        i_p: args.i_p,
        i_jn: args.i_jn,
        n: args.n,
        t: args.t,
        k: args.k,
        ord_g: args.ord_g,
        max_ord: args.max_ord,
        nu: args.nu,
    };
    Ok((formula, p))
}

fn sampling_warning(s: Sampling) -> Option<String> {
    match s {
        Sampling::Random { .. } => {
            Some("random sampling: constants are certified for the scanned elements only".into())
        }
        Sampling::Exhaustive => None,
    }
}

/// Runs an already parsed command.
pub fn execute(cli: &Cli) -> Result<Report> {
    let vars: Vec<String> = split_top_level(&cli.vars, ',');
    let field = Field::from_characteristic(cli.characteristic)?;
    let ctx = Ctx { cli, vars, field };
    let (name, out) = dispatch(&ctx)?;
    Ok(Report {
        command: name.to_string(),
        ring: RingInfo {
            vars: out.ring.names().to_vec(),
            characteristic: cli.characteristic,
            trunc: out.ring.trunc(),
        },
        params: out.params,
        result: out.result,
        certified_up_to: out.certified_up_to,
        seed: out.seed,
        warnings: out.warnings,
        table: out.table,
    })
}

fn dispatch(ctx: &Ctx) -> Result<(&'static str, Out)> {
    let cli = ctx.cli;
    Ok(match &cli.command {
        Command::Ord { poly } => {
            let ring = ctx.ring(DEFAULT_TRUNC)?;
            let x = parse_poly(poly, &ring)?;
            let initial = if x.is_zero() { None } else { Some(x.initial_form()?) };
            let result = json!({ "series": val(&x), "ord": val(&x.ord()), "initial_form": val(&initial) });
            ("ord", Out::new(ring, json!({ "poly": poly }), result))
        }
        Command::Nu { ideal: gens, x } => {
            let ring = ctx.ring(DEFAULT_TRUNC)?;
            let i = ideal(gens, &ring)?;
            let xs = parse_poly(x, &ring)?;
            let v = nu(&i, &xs)?;
            let mut out = Out::new(ring, json!({ "ideal": gens, "x": x }), json!({ "nu": val(&v) }));
            if !v.is_exact() {
                out.warnings
                    .push("x lies in I + m^(D+1): nu is only bounded below".into());
            }
            ("nu", out)
        }
        Command::Nubar { ideal: gens, x, n_max } => {
            let ring = ctx.ring(DEFAULT_TRUNC)?;
            let i = ideal(gens, &ring)?;
            let est = nu_bar_estimate(&i, &parse_poly(x, &ring)?, *n_max)?;
            let table = Table {
                header: vec!["n".into(), "nu".into()],
                rows: est
                    .samples
                    .iter()
                    .map(|s| vec![s.n.to_string(), s.nu.to_string()])
                    .collect(),
            };
            let mut out = Out::new(ring, json!({ "ideal": gens, "x": x, "n_max": n_max }), val(&est));
            if est.truncation_limited {
                out.warnings
                    .push("some powers hit the truncation; their samples were not used".into());
            }
            out.table = Some(table);
            ("nubar", out)
        }
        Command::ArIndex {
            ideal: gens,
            module,
            up_to,
        } => {
            let ring = ctx.ring(DEFAULT_TRUNC)?;
            let m = match (gens, module) {
                (Some(g), _) => ideal(g, &ring)?.as_module(),
                (None, Some(text)) => {
                    let vs = parse_vectors(text, &ring)?;
                    let arity = vs.first().map_or(1, |v| v.len());
                    ModuleSpec::new(&ring, arity, vs)?
                }
                (None, None) => return Err(Error::MissingParameter("ideal")),
            };
            let r = artin_rees_index(&m, *up_to)?;
            let table = Table {
                header: vec!["i".into(), "k_i".into(), "i_minus_k".into()],
                rows: r
                    .levels
                    .iter()
                    .enumerate()
                    .map(|(i, k)| vec![i.to_string(), k.to_string(), (i as u32 - k).to_string()])
                    .collect(),
            };
            let result = json!({
                "i0": r.i0,
                "certified_up_to": r.certified_up_to,
                "levels": r.levels,
                "tight_witness": val(&r.tight_witness),
            });
            let mut out = Out::new(ring, json!({ "ideal": gens, "module": module, "up_to": up_to }), result);
            out.certified_up_to = Some(r.certified_up_to);
            out.table = Some(table);
            ("ar-index", out)
        }
        Command::IclScan { scan, a, envelope } => {
            let ring = ctx.ring(DEFAULT_TRUNC)?;
            let i = ideal(&scan.ideal, &ring)?;
            let sampling = ctx.sampling(scan);
            let a_q = parse_ratio(a)?;
            let rep = icl_scan(&i, scan.deg_max, a_q, sampling, cli.budget)?;
            let mut result = val(&rep);
            if *envelope {
                result["envelope"] = val(&icl_envelope(&i, scan.deg_max, sampling, cli.budget)?);
            }
            let table = Table {
                header: ["g", "h", "nu_g", "nu_h", "nu_gh"].map(String::from).to_vec(),
                rows: rep
                    .attaining_pairs
                    .iter()
                    .chain(&rep.violations)
                    .map(|p| {
                        vec![
                            p.g.to_string(),
                            p.h.to_string(),
                            p.nu_g.to_string(),
                            p.nu_h.to_string(),
                            p.nu_gh.to_string(),
                        ]
                    })
                    .collect(),
            };
            let params = json!({
                "ideal": scan.ideal, "deg_max": scan.deg_max, "a": ratio_str(a_q),
                "sampling": val(&sampling), "envelope": envelope,
            });
            let mut out = Out::new(ring, params, result);
            if rep.b_min == BMin::Unbounded {
                out.warnings.push(format!(
                    "{} pair(s) with product in I: no finite b",
                    rep.violations.len()
                ));
            }
            if rep.truncation_limited > 0 {
                out.warnings
                    .push(format!("{} pair(s) limited by truncation", rep.truncation_limited));
            }
            out.warnings.extend(sampling_warning(sampling));
            if matches!(sampling, Sampling::Random { .. }) {
                out.seed = Some(cli.seed);
            }
            out.table = Some(table);
            ("icl-scan", out)
        }
        Command::Valcheck { scan } => {
            let ring = ctx.ring(DEFAULT_TRUNC)?;
            let i = ideal(&scan.ideal, &ring)?;
            let sampling = ctx.sampling(scan);
            let rep = valuation_check(&i, scan.deg_max, sampling, cli.budget)?;
            let params = json!({ "ideal": scan.ideal, "deg_max": scan.deg_max, "sampling": val(&sampling) });
            let mut out = Out::new(ring, params, val(&rep));
            out.warnings.extend(sampling_warning(sampling));
            if matches!(sampling, Sampling::Random { .. }) {
                out.seed = Some(cli.seed);
            }
            ("valcheck", out)
        }
        Command::SolveLinreg {
            f,
            x,
            i,
            assume_regular,
        } => {
            let ring = ctx.ring(DEFAULT_TRUNC)?;
            let cert = solve_linear_regular(&parse_list(f, &ring)?, &parse_list(x, &ring)?, *i, *assume_regular)?;
            let params = json!({ "f": f, "x": x, "i": i, "assume_regular": assume_regular });
            let mut result = val(&cert);
            result["holds"] = json!(cert.holds());
            ("solve-linreg", Out::new(ring, params, result))
        }
        Command::SolveFxhy { k, f, h, x, y, i } => {
            let ring = ctx.ring(DEFAULT_TRUNC)?;
            let p = |s: &str| parse_poly(s, &ring);
            let cert = solve_fx_hy(*k, &p(f)?, &p(h)?, &p(x)?, &p(y)?, *i)?;
            let params = json!({ "k": k, "f": f, "h": h, "x": x, "y": y, "i": i });
            let mut result = val(&cert);
            result["holds"] = json!(cert.holds());
            ("solve-fxhy", Out::new(ring, params, result))
        }
        Command::StableAr {
            ideal: gens,
            xs,
            deg_max,
            samples,
            a,
            b_max,
        } => {
            let ring = ctx.ring(DEFAULT_TRUNC)?;
            let i = ideal(gens, &ring)?;
            let elements = match xs {
                Some(text) => parse_list(text, &ring)?,
                None => {
                    let mut v: Vec<_> = crate::series::monomials_in_range(ring.num_vars(), 1, *deg_max)
                        .into_iter()
                        .map(|m| crate::series::TruncatedSeries::monomial(&ring, m, ring.field().one()))
                        .collect();
                    v.extend(random_elements(&ring, 1, *deg_max, *samples, cli.seed));
                    v
                }
            };
            let grid = split_top_level(a, ',')
                .iter()
                .map(|s| parse_ratio(s))
                .collect::<Result<Vec<_>>>()?;
            let rep = stable_ar_scan(&i, &elements, &grid, *b_max)?;
            let table = Table {
                header: ["x", "nu", "skipped", "certified_up_to", "shift"]
                    .map(String::from)
                    .to_vec(),
                rows: rep
                    .entries
                    .iter()
                    .map(|e| {
                        vec![
                            e.x.to_string(),
                            e.nu.to_string(),
                            e.skipped.to_string(),
                            e.certified_up_to.map_or(String::new(), |c| c.to_string()),
                            e.shift.map_or(String::new(), |s| s.to_string()),
                        ]
                    })
                    .collect(),
            };
            let params = json!({
                "ideal": gens, "xs": xs, "deg_max": deg_max, "samples": samples,
                "a": grid.iter().map(|q| ratio_str(*q)).collect::<Vec<_>>(), "b_max": b_max,
            });
            let mut out = Out::new(ring, params, val(&rep));
            let skipped = rep.entries.iter().filter(|e| e.skipped).count();
            if skipped > 0 {
                out.warnings
                    .push(format!("{skipped} element(s) in I + m^(D+1) skipped"));
            }
            if rep.best.is_none() {
                out.warnings.push(format!("no grid slope works with b <= {b_max}"));
            }
            if xs.is_none() {
                out.seed = Some(cli.seed);
            }
            out.certified_up_to = rep.entries.iter().filter_map(|e| e.certified_up_to).min();
            out.table = Some(table);
            ("stable-ar", out)
        }
        Command::BetaLb { unknowns, eqs, i } => {
            let ring = ctx.ring(DEFAULT_TRUNC)?;
            let unknowns = split_top_level(unknowns, ',');
            let sys = PolySystem::parse(&ring, &unknowns, &split_top_level(eqs, ';'))?;
            let results = i
                .iter()
                .map(|&lvl| beta_lower_bound_bruteforce(&sys, lvl, cli.budget))
                .collect::<Result<Vec<_>>>()?;
            let table = Table {
                header: ["i", "beta", "witness", "nodes"].map(String::from).to_vec(),
                rows: results
                    .iter()
                    .map(|r| {
                        let w = r.witness.as_ref().map_or(String::new(), |w| {
                            w.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(";")
                        });
                        vec![r.i.to_string(), r.beta.to_string(), w, r.nodes.to_string()]
                    })
                    .collect(),
            };
            let params = json!({ "unknowns": unknowns, "eqs": eqs, "i": i });
            let mut out = Out::new(ring.clone(), params, json!({ "levels": val(&results) }));
            out.certified_up_to = Some(ring.trunc());
            out.warnings
                .push("beta is a lower bound: orders are capped at the truncation".into());
            out.table = Some(table);
            ("beta-lb", out)
        }
        Command::Witness { i, primes } => {
            let ring = ctx.ring((*i * *i).max(1))?;
            let fam = monomial_witness_family(*i, &ring)?;
            let mut result = val(&fam);
            let mut warnings = Vec::new();
            if !fam.vanishing_binomials.is_empty() {
                warnings.push(format!(
                    "binomial coefficients C({i},k) vanish in the field for k in {:?}",
                    fam.vanishing_binomials
                ));
            }
            if !primes.is_empty() {
                let rep = lower_bound_certificate(*i, &ring, primes, cli.budget)?;
                for l in &rep.levels {
                    if !l.skipped_primes.is_empty() {
                        warnings.push(format!(
                            "level {}: primes {:?} skipped by budget",
                            l.i, l.skipped_primes
                        ));
                    }
                }
                result["certificate"] = val(&rep);
            }
            let mut out = Out::new(ring.clone(), json!({ "i": i, "primes": primes }), result);
            out.certified_up_to = Some(ring.trunc());
            out.warnings = warnings;
            ("witness", out)
        }
        Command::IrrCheck { i, p } => {
            let ring = ctx.ring(DEFAULT_TRUNC)?;
            let cert = irreducibility_exhaustive(*i, *p, cli.budget)?;
            ("irr-check", Out::new(ring, json!({ "i": i, "p": p }), val(&cert)))
        }
        Command::Bound { params, i } => {
            let ring = ctx.ring(DEFAULT_TRUNC)?;
            let (formula, bp) = bound_params(params)?;
            let values = i
                .iter()
                .map(|&lvl| Ok(json!({ "i": lvl, "value": evaluate_bound(formula, &bp, lvl)? })))
                .collect::<Result<Vec<_>>>()?;
            let mut result = json!({
                "formula": formula.name(),
                "expression": formula.expression(),
                "values": values,
            });
            if let [single] = values.as_slice() {
                result["value"] = single["value"].clone();
            }
            let table = Table {
                header: vec!["i".into(), "value".into()],
                rows: values.iter().map(|v| vec![cell(&v["i"]), cell(&v["value"])]).collect(),
            };
            let mut out = Out::new(
                ring,
                json!({ "formula": formula.name(), "constants": val(&bp), "i": i }),
                result,
            );
            out.table = Some(table);
            ("bound", out)
        }
        Command::CrossCheck { params, points } => {
            let ring = ctx.ring(DEFAULT_TRUNC)?;
            let (formula, bp) = bound_params(params)?;
            let pts = split_top_level(points, ',')
                .iter()
                .map(|s| {
                    let bad = || Error::Parse {
                        pos: 0,
                        msg: format!("expected `i:value`, got `{s}`"),
                    };
                    let (a, b) = s.split_once(':').ok_or_else(bad)?;
                    Ok((
                        a.trim().parse().map_err(|_| bad())?,
                        b.trim().parse().map_err(|_| bad())?,
                    ))
                })
                .collect::<Result<Vec<(i64, i64)>>>()?;
            let rep = cross_check_bound(formula, &bp, &pts)?;
            let table = Table {
                header: ["i", "measured", "bound", "ok"].map(String::from).to_vec(),
                rows: rep
                    .points
                    .iter()
                    .map(|p| {
                        vec![
                            p.i.to_string(),
                            p.measured.to_string(),
                            p.bound.to_string(),
                            p.ok.to_string(),
                        ]
                    })
                    .collect(),
            };
            let mut out = Out::new(ring, json!({ "formula": formula.name(), "points": points }), val(&rep));
            if rep.verdict != "consistent" {
                out.warnings
                    .push(format!("measured values exceed the bound at i in {:?}", rep.exceeded));
            }
            out.table = Some(table);
            ("cross-check", out)
        }
    })
}
