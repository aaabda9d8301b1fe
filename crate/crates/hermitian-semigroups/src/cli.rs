//! Command-line frontend: every computation as a subcommand with
//! machine-readable, byte-deterministic output.
//!
//! JSON output is a single object `{"meta": {...}, "data": [...]}` with
//! sorted keys; CSV output is comma-separated with a header row and LF line
//! endings. Field elements are rendered as integer indices `n = sum c_i p^i`
//! of their polynomial-basis coordinates; the modulus appears in `meta` so
//! indices can be decoded externally. Exit status: 0 on success, 1 when
//! `verify` fails, 2 on argument or domain errors.

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::census::{divisors, h_d, count_basepoint_divisors_closed, GapCensus};
use crate::curve::{standard_form, ProjectivePoint, Triangle};
use crate::discrepancy::SigmaTable;
use crate::field::{FieldElement, FieldParams, MAX_Q};
use crate::orbits::orbit_count;
use crate::semigroup::{semigroup_box, GeneratingSet};
use crate::{Error, Result};

/// Weierstrass semigroups of triples of rational points on Hermitian curves.
#[derive(Parser, Debug)]
#[command(name = "hermitian-semigroups", version, about, long_about = None)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

/// Output format for data-producing subcommands.
#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Classify a triangle: its type d and a standard form.
    ///
    /// Points are semicolon-separated, each "inf" or "a,b" with field
    /// elements as integer indices (n = sum of c_i p^i over the polynomial
    /// basis); "w" denotes the least-index generator of the multiplicative
    /// group and "w^K" its powers.
    Classify {
        /// Prime power q <= 16 defining the curve over F_{q^2}.
        #[arg(long)]
        q: u64,
        /// Three points, e.g. "inf;0,0;w,w".
        #[arg(long)]
        points: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Print the fundamental-domain discrepancy table sigma_ij.
    Sigma {
        #[arg(long)]
        q: u64,
        /// Triangle type; must divide q + 1.
        #[arg(long)]
        d: u64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Enumerate the gap set (or pure gaps) of a triangle type.
    Gaps {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        d: u64,
        /// Emit pure gaps (base point at all three points) instead.
        #[arg(long)]
        pure: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Gap and basepoint-divisor counts N, N1, N2, N3, h_d per type.
    Counts {
        #[arg(long)]
        q: u64,
        /// Restrict to one type (default: all divisors of q + 1).
        #[arg(long)]
        d: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Minimal generating sets of the Weierstrass semigroup.
    Mingen {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        d: u64,
        /// Which set: 1 (one-point generators), 2 (pairs), 3 (triples).
        #[arg(long, default_value_t = 3)]
        set: u8,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Semigroup membership within the box [0, bound]^3.
    Semigroup {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        d: u64,
        /// Box bound; defaults to 2g. Must be at least 2g.
        #[arg(long)]
        bound: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Number of automorphism classes of triangles (exhaustive, q <= 5).
    Orbits {
        #[arg(long)]
        q: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Run the verification suite; exit 0 iff every criterion passes.
    Verify {
        /// "all", or comma-separated criterion ids/names.
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

/// Executes a parsed command line, writing results to stdout and
/// diagnostics to stderr. Returns the process exit status.
pub fn run(cli: Cli) -> i32 {
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Classify { q, points, format } => {
            let params = field_for(q)?;
            let triangle = parse_triangle(&params, &points)?;
            print!("{}", render_classify(&params, &triangle, format)?);
            Ok(0)
        }
        Command::Sigma { q, d, format } => {
            let table = table_for(q, d)?;
            print!("{}", render_sigma(&table, format));
            Ok(0)
        }
        Command::Gaps { q, d, pure, format } => {
            let census = census_for(q, d)?;
            print!("{}", render_gaps(&census, pure, format));
            Ok(0)
        }
        Command::Counts { q, d, format } => {
            print!("{}", render_counts(q, d, format)?);
            Ok(0)
        }
        Command::Mingen { q, d, set, format } => {
            print!("{}", render_mingen(q, d, set, format)?);
            Ok(0)
        }
        Command::Semigroup { q, d, bound, format } => {
            print!("{}", render_semigroup(q, d, bound, format)?);
            Ok(0)
        }
        Command::Orbits { q, format } => {
            let params = field_for(q)?;
            let orbits = orbit_count(&params)?;
            let expected = 1 + (q as usize).div_ceil(2);
            let out = match format {
                Format::Json => json_doc(
                    meta_base(q, None),
                    json!([{ "orbits": orbits, "expected": expected }]),
                ),
                Format::Csv => format!("orbits,expected\n{orbits},{expected}\n"),
            };
            print!("{out}");
            Ok(0)
        }
        Command::Verify { suite } => {
            let mut out = String::new();
            let all_passed = crate::verify::run_suite(&suite, &mut out)?;
            print!("{out}");
            Ok(if all_passed { 0 } else { 1 })
        }
    }
}

fn field_for(q: u64) -> Result<FieldParams> {
    FieldParams::for_q(q)
}

fn table_for(q: u64, d: u64) -> Result<SigmaTable> {
    if q > MAX_Q {
        return Err(Error::TooLarge {
            what: "q",
            value: q,
            max: MAX_Q,
        });
    }
    SigmaTable::new(q, d)
}

fn census_for(q: u64, d: u64) -> Result<GapCensus> {
    if q > MAX_Q {
        return Err(Error::TooLarge {
            what: "q",
            value: q,
            max: MAX_Q,
        });
    }
    GapCensus::build(q, d)
}

fn genus(q: u64) -> u64 {
    q * (q - 1) / 2
}

fn meta_base(q: u64, d: Option<u64>) -> Value {
    let mut meta = json!({
        "q": q,
        "genus": genus(q),
        "m": q + 1,
    });
    if let Some(d) = d {
        meta["d"] = json!(d);
    }
    meta
}

fn json_doc(meta: Value, data: Value) -> String {
    let doc = json!({ "meta": meta, "data": data });
    let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
    s.push('\n');
    s
}

// ---------------------------------------------------------------------
// Point and element parsing
// ---------------------------------------------------------------------

fn parse_element(params: &FieldParams, token: &str) -> Result<FieldElement> {
    let token = token.trim();
    if let Ok(n) = token.parse::<u64>() {
        return params.from_index(n);
    }
    if token == "w" {
        return Ok(params.primitive_element());
    }
    if let Some(exp) = token.strip_prefix("w^") {
        let k: u64 = exp
            .parse()
            .map_err(|_| Error::Parse(format!("bad exponent in '{token}'")))?;
        return Ok(params.pow(params.primitive_element(), k));
    }
    Err(Error::Parse(format!(
        "element '{token}' is neither an index 0..{} nor w/w^K",
        params.order()
    )))
}

fn parse_point(params: &FieldParams, token: &str) -> Result<ProjectivePoint> {
    let token = token.trim();
    if token.eq_ignore_ascii_case("inf") {
        return Ok(ProjectivePoint::infinity(params));
    }
    let parts: Vec<&str> = token.split(',').collect();
    if parts.len() != 2 {
        return Err(Error::Parse(format!(
            "point '{token}' must be 'inf' or 'a,b'"
        )));
    }
    let alpha = parse_element(params, parts[0])?;
    let beta = parse_element(params, parts[1])?;
    Ok(ProjectivePoint::affine(params, alpha, beta))
}

fn parse_triangle(params: &FieldParams, s: &str) -> Result<Triangle> {
    let tokens: Vec<&str> = s.split(';').collect();
    if tokens.len() != 3 {
        return Err(Error::Parse(format!(
            "expected three ';'-separated points, got {}",
            tokens.len()
        )));
    }
    let pts = [
        parse_point(params, tokens[0])?,
        parse_point(params, tokens[1])?,
        parse_point(params, tokens[2])?,
    ];
    Triangle::new(params, pts)
}

fn render_point(params: &FieldParams, p: &ProjectivePoint) -> String {
    if p.is_infinity() {
        "inf".to_string()
    } else {
        let (a, b) = p.affine_coords().expect("affine point");
        format!("{},{}", params.index(a), params.index(b))
    }
}

// ---------------------------------------------------------------------
// Renderers
// ---------------------------------------------------------------------

fn render_classify(params: &FieldParams, t: &Triangle, format: Format) -> Result<String> {
    let (_, standard) = standard_form(params, t)?;
    let pts: Vec<String> = standard
        .points()
        .iter()
        .map(|p| render_point(params, p))
        .collect();
    Ok(match format {
        Format::Json => {
            let mut meta = meta_base(params.q(), None);
            meta["p"] = json!(params.p());
            meta["e"] = json!(params.e());
            meta["modulus"] = json!(params.modulus());
            meta["element_encoding"] =
                json!("index n = sum over i of c_i * p^i for coordinates c in the polynomial basis");
            json_doc(
                meta,
                json!([{
                    "type_d": t.type_d(),
                    "collinear": t.type_d() == 1,
                    "standard_form": pts,
                }]),
            )
        }
        Format::Csv => format!(
            "type_d,collinear,standard_p1,standard_p2,standard_p3\n{},{},{},{},{}\n",
            t.type_d(),
            t.type_d() == 1,
            csv_field(&pts[0]),
            csv_field(&pts[1]),
            csv_field(&pts[2])
        ),
    })
}

/// Quotes a CSV field when it contains a comma (point coordinates do).
fn csv_field(s: &str) -> String {
    if s.contains(',') {
        format!("\"{s}\"")
    } else {
        s.to_string()
    }
}

fn render_sigma(table: &SigmaTable, format: Format) -> String {
    let rows = table.fundamental_domain();
    match format {
        Format::Json => json_doc(
            meta_base(table.q() as u64, Some(table.type_d() as u64)),
            json!(rows),
        ),
        Format::Csv => {
            let mut out = String::from("i");
            for j in 0..table.m() {
                out.push_str(&format!(",{j}"));
            }
            out.push('\n');
            for (i, row) in rows.iter().enumerate() {
                out.push_str(&i.to_string());
                for v in row {
                    out.push_str(&format!(",{v}"));
                }
                out.push('\n');
            }
            out
        }
    }
}

fn render_gaps(census: &GapCensus, pure: bool, format: Format) -> String {
    let set = if pure { &census.pure_gaps } else { &census.gaps };
    match format {
        Format::Json => {
            let mut meta = meta_base(census.q, Some(census.d));
            meta["count"] = json!(set.len());
            meta["pure"] = json!(pure);
            let data: Vec<[u32; 3]> = set.iter().map(|&(a, b, c)| [a, b, c]).collect();
            json_doc(meta, json!(data))
        }
        Format::Csv => {
            let mut out = String::from("a,b,c\n");
            for &(a, b, c) in set {
                out.push_str(&format!("{a},{b},{c}\n"));
            }
            out
        }
    }
}

fn render_counts(q: u64, d: Option<u64>, format: Format) -> Result<String> {
    if q > MAX_Q {
        return Err(Error::TooLarge {
            what: "q",
            value: q,
            max: MAX_Q,
        });
    }
    if crate::field::prime_power(q).is_none() {
        return Err(Error::NotPrimePower(q));
    }
    let ds = match d {
        Some(d) => {
            if d == 0 || !(q + 1).is_multiple_of(d) {
                return Err(Error::TypeNotDivisor { d, q });
            }
            vec![d]
        }
        None => divisors(q + 1),
    };
    let mut rows = Vec::new();
    for d in ds {
        rows.push((
            d,
            crate::census::count_gaps_closed(q, d)?,
            count_basepoint_divisors_closed(q, d, 1)?,
            count_basepoint_divisors_closed(q, d, 2)?,
            count_basepoint_divisors_closed(q, d, 3)?,
            h_d(q, d)?,
        ));
    }
    Ok(match format {
        Format::Json => {
            let data: Vec<Value> = rows
                .iter()
                .map(|&(d, n, n1, n2, n3, h)| {
                    json!({ "d": d, "n": n, "n1": n1, "n2": n2, "n3": n3, "h_d": h })
                })
                .collect();
            json_doc(meta_base(q, None), json!(data))
        }
        Format::Csv => {
            let mut out = String::from("q,d,N,N1,N2,N3,h_d\n");
            for (d, n, n1, n2, n3, h) in rows {
                out.push_str(&format!("{q},{d},{n},{n1},{n2},{n3},{h}\n"));
            }
            out
        }
    })
}

fn render_mingen(q: u64, d: u64, set: u8, format: Format) -> Result<String> {
    if q > MAX_Q {
        return Err(Error::TooLarge {
            what: "q",
            value: q,
            max: MAX_Q,
        });
    }
    let gs = GeneratingSet::build(q, d)?;
    let mut meta = meta_base(q, Some(d));
    meta["set"] = json!(set);
    match (set, format) {
        (1, Format::Json) => Ok(json_doc(meta, json!([gs.gamma1.0, gs.gamma1.1]))),
        (1, Format::Csv) => Ok(format!("generator\n{}\n{}\n", gs.gamma1.0, gs.gamma1.1)),
        (2, Format::Json) => {
            let data: Vec<[u32; 2]> = gs.gamma2.iter().map(|&(a, b)| [a, b]).collect();
            Ok(json_doc(meta, json!(data)))
        }
        (2, Format::Csv) => {
            let mut out = String::from("a,b\n");
            for &(a, b) in &gs.gamma2 {
                out.push_str(&format!("{a},{b}\n"));
            }
            Ok(out)
        }
        (3, Format::Json) => {
            if gs.gamma3.is_empty() {
                meta["note"] = json!(
                    "empty: strict positivity excludes every candidate triple at this q"
                );
            }
            let data: Vec<[u32; 3]> = gs.gamma3.iter().map(|&(a, b, c)| [a, b, c]).collect();
            Ok(json_doc(meta, json!(data)))
        }
        (3, Format::Csv) => {
            let mut out = String::from("a,b,c\n");
            for &(a, b, c) in &gs.gamma3 {
                out.push_str(&format!("{a},{b},{c}\n"));
            }
            Ok(out)
        }
        _ => Err(Error::Parse(format!("--set must be 1, 2, or 3, got {set}"))),
    }
}

fn render_semigroup(q: u64, d: u64, bound: Option<u64>, format: Format) -> Result<String> {
    if q > MAX_Q {
        return Err(Error::TooLarge {
            what: "q",
            value: q,
            max: MAX_Q,
        });
    }
    let bound = bound.unwrap_or(2 * genus(q));
    let members = semigroup_box(q, d, bound)?;
    Ok(match format {
        Format::Json => {
            let mut meta = meta_base(q, Some(d));
            meta["bound"] = json!(bound);
            meta["count"] = json!(members.len());
            let data: Vec<[u32; 3]> = members.iter().map(|&(a, b, c)| [a, b, c]).collect();
            json_doc(meta, json!(data))
        }
        Format::Csv => {
            let mut out = String::from("a,b,c\n");
            for &(a, b, c) in &members {
                out.push_str(&format!("{a},{b},{c}\n"));
            }
            out
        }
    })
}
