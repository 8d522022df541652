//! `chromaloc`: command-line surface for the chromatic-polynomial toolkit.
//!
//! Every subcommand documents its flags and output format in `--help`.
//! Exit codes: 0 success, 2 usage or input error, 3 computation budget
//! exceeded, 4 numeric non-convergence.

mod input;
mod svg;

use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use chromaloc::poly::bigint_to_f64;
use chromaloc::{basis, chromatic, graph6, hom, limits, spectra, tube};
use chromaloc::{Error, IntPolynomial, Result, SimpleGraph};

#[derive(Parser)]
#[command(
    name = "chromaloc",
    version,
    about = "Chromatic polynomials, root measures, hom-combination formulas, \
             4xn tube transfer matrices, and local convergence experiments",
    after_help = "Exit codes: 0 ok, 2 usage, 3 budget exceeded, 4 numeric non-convergence.\n\
                  Set CHROMALOC_THREADS to bound the worker pool."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Output destination and format, shared by all subcommands.
#[derive(Args)]
struct OutputArgs {
    /// Write to this file instead of stdout
    #[arg(long, global = false)]
    output: Option<PathBuf>,
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
    Svg,
}

/// Graph input: exactly one of the three sources.
#[derive(Args)]
struct GraphArgs {
    /// graph6 code of the input graph
    #[arg(long)]
    g6: Option<String>,
    /// Path to an edge-list file (first line "n m", then "u v" pairs)
    #[arg(long)]
    edges: Option<String>,
    /// Generator spec: path:N, cycle:N, complete:N, petersen, box:D,N,
    /// torus:D,N, tube:N, random-regular:D,N,GIRTH,SEED
    #[arg(long)]
    gen: Option<String>,
}

impl GraphArgs {
    fn load(&self) -> Result<SimpleGraph> {
        input::load(&self.g6, &self.edges, &self.gen)
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum PolyMethod {
    /// Deletion-contraction with memoization
    Dc,
    /// Spanning-subgraph inclusion-exclusion
    Expansion,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum MomentMethod {
    /// Numeric: sum of k-th powers of the computed roots
    Roots,
    /// Exact: Newton's identities on the coefficients
    Newton,
    /// Exact: hom-combination formula (k <= 5)
    Hom,
}

#[derive(Subcommand)]
enum Command {
    /// Chromatic polynomial; text output is the coefficient list in
    /// ascending degree, JSON is an array of decimal strings, CSV is
    /// degree,coefficient rows
    Chrompoly {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, value_enum, default_value_t = PolyMethod::Dc)]
        method: PolyMethod,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Chromatic roots; CSV/text rows are "re,im,multiplicity", JSON adds
    /// the maximum modulus and the Sokal disc check, SVG is a root scatter
    Roots {
        #[command(flatten)]
        graph: GraphArgs,
        /// Relative residual tolerance for the root finder
        #[arg(long, default_value_t = spectra::DEFAULT_ROOT_TOL)]
        tol: f64,
        /// Maximum polynomial degree attempted
        #[arg(long, default_value_t = spectra::DEFAULT_DEGREE_CAP)]
        degree_cap: usize,
        /// Sokal disc constant used for the containment report
        #[arg(long, default_value_t = spectra::SOKAL_C)]
        sokal_c: f64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Holomorphic moment sums p_1..p_kmax of the chromatic roots; the
    /// newton and hom methods are exact integers and byte-identical, the
    /// roots method is numeric
    Moments {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        kmax: usize,
        #[arg(long, value_enum, default_value_t = MomentMethod::Newton)]
        method: MomentMethod,
        /// Root-finder tolerance (roots method only)
        #[arg(long, default_value_t = spectra::DEFAULT_ROOT_TOL)]
        tol: f64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Count graph homomorphisms hom(H, G); both graphs are positional
    /// specs of the form g6:CODE, gen:FAMILY:PARAMS or edges:PATH
    Hom {
        /// Source graph H
        h: String,
        /// Target graph G
        g: String,
    },
    /// Base parameters of the hom-combination formula for the k-th
    /// chromatic coefficient; --emit-appendix prints the full table of
    /// coefficient and moment formulas up to k
    Basis {
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = false)]
        emit_appendix: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// 4xn tube graphs: the transfer-matrix chromatic polynomial, or with
    /// --curve the equimodular eigenvalue curve sampled on a grid
    /// ("re,im,tag" rows; SVG overlays the roots of the n-th tube)
    Tube {
        /// Tube length n (T_n = C4 x P_n)
        #[arg(long)]
        n: usize,
        /// Sample the equimodular curve instead of printing the polynomial
        #[arg(long, default_value_t = false)]
        curve: bool,
        /// Sampling window re_min,re_max,im_min,im_max
        #[arg(long, default_value = "-1,4.5,-3.5,3.5", allow_hyphen_values = true)]
        window: String,
        /// Grid spacing
        #[arg(long, default_value_t = 0.02)]
        grid: f64,
        /// Relative equimodularity tolerance
        #[arg(long, default_value_t = 0.02)]
        tol: f64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Entropy-per-vertex estimate ln q + (|E|/|V|) ln(1-1/q) with the
    /// explicit girth-based error bound; without --sokal-c both the
    /// C=7.963907 and C=8 variants are emitted
    GirthBound {
        #[command(flatten)]
        graph: GraphArgs,
        /// Evaluation point q, as an integer, decimal, or num/den rational
        #[arg(long)]
        q: String,
        /// Sokal constant C (default: report both 7.963907 and 8)
        #[arg(long)]
        sokal_c: Option<f64>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Convergence experiment across a graph family: normalized moments
    /// p_k/n and entropy ln ch(q)/n per size; JSON lines, summary CSV, or
    /// an SVG line plot of the entropy against the infinite-tree reference
    Converge {
        /// Family: path, cycle, tube, torus:D, random-regular:D,GIRTH,SEED
        #[arg(long)]
        family: String,
        /// Sizes as a..b, a..b:step, or a comma list
        #[arg(long)]
        sizes: String,
        #[arg(long, default_value_t = 3)]
        kmax: usize,
        /// Integer entropy evaluation points, comma separated
        #[arg(long, default_value = "30")]
        q: String,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Distribution of rooted r-balls over a uniform random root: one atom
    /// per isomorphism class with its exact probability
    Balls {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        radius: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
}

/// 15 significant digits.
fn fmt_f(x: f64) -> String {
    format!("{x:.14e}")
}

fn rational_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn write_output(out: &OutputArgs, content: &str) -> Result<()> {
    match &out.output {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| Error::Malformed(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn poly_output(p: &IntPolynomial, out: &OutputArgs) -> Result<()> {
    let content = match out.format {
        Format::Text => {
            let mut s = p
                .coeffs()
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(" ");
            s.push('\n');
            s
        }
        Format::Json => {
            let arr: Vec<String> = p.coeffs().iter().map(|c| c.to_string()).collect();
            let mut s = serde_json::to_string(&arr).expect("serializable");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut s = String::from("degree,coefficient\n");
            for (k, c) in p.coeffs().iter().enumerate() {
                s.push_str(&format!("{k},{c}\n"));
            }
            s
        }
        Format::Svg => {
            return Err(Error::Malformed(
                "svg output is not defined for polynomials".into(),
            ))
        }
    };
    write_output(out, &content)
}

fn cmd_roots(
    graph: &GraphArgs,
    tol: f64,
    cap: usize,
    sokal_c: f64,
    out: &OutputArgs,
) -> Result<()> {
    let g = graph.load()?;
    let p = chromatic::chromatic_dc(&g)?;
    let measure = spectra::find_roots_capped(&p, tol, cap)?;
    let disc = spectra::SokalDisc::with_constant(g.max_degree(), sokal_c);
    let grouped = measure.grouped();
    let content = match out.format {
        Format::Text | Format::Csv => {
            let mut s = String::from("re,im,multiplicity\n");
            for (z, m) in &grouped {
                s.push_str(&format!("{},{},{m}\n", fmt_f(z.re), fmt_f(z.im)));
            }
            s
        }
        Format::Json => {
            let v = serde_json::json!({
                "roots": grouped
                    .iter()
                    .map(|(z, m)| serde_json::json!({
                        "re": z.re, "im": z.im, "multiplicity": m
                    }))
                    .collect::<Vec<_>>(),
                "total": measure.total(),
                "max_modulus": measure.max_modulus(),
                "sokal_radius": disc.radius(),
                "in_sokal_disc": spectra::in_disc(&measure, &disc),
            });
            let mut s = v.to_string();
            s.push('\n');
            s
        }
        Format::Svg => {
            let pts: Vec<(f64, f64)> = measure.roots().iter().map(|z| (z.re, z.im)).collect();
            svg::render(
                &[svg::Scatter { points: pts, color: "#1f4e9c".into(), radius: 2.5 }],
                &[],
                &format!("chromatic roots (n={}, m={})", g.n(), g.m()),
            )
        }
    };
    write_output(out, &content)
}

fn cmd_moments(
    graph: &GraphArgs,
    kmax: usize,
    method: MomentMethod,
    tol: f64,
    out: &OutputArgs,
) -> Result<()> {
    let g = graph.load()?;
    // rows of (k, exact integer if available, numeric value)
    let rows: Vec<(usize, Option<BigInt>, Complex64)> = match method {
        MomentMethod::Newton => {
            let p = chromatic::chromatic_dc(&g)?;
            let e = chromatic::chromatic_coefficients(&p)?;
            let sums = spectra::power_sums_newton(&e, kmax)?;
            sums.into_iter()
                .enumerate()
                .map(|(i, pk)| {
                    let x = bigint_to_f64(&pk);
                    (i + 1, Some(pk), Complex64::new(x, 0.0))
                })
                .collect()
        }
        MomentMethod::Hom => (1..=kmax)
            .map(|k| {
                let f = basis::moment_formula(k)?;
                let pk = f.evaluate_int(&g)?;
                let x = bigint_to_f64(&pk);
                Ok((k, Some(pk), Complex64::new(x, 0.0)))
            })
            .collect::<Result<_>>()?,
        MomentMethod::Roots => {
            let p = chromatic::chromatic_dc(&g)?;
            let measure = spectra::find_roots(&p, tol)?;
            (1..=kmax)
                .map(|k| {
                    let mean = spectra::holomorphic_moment(&measure, k);
                    (k, None, mean * measure.total() as f64)
                })
                .collect()
        }
    };
    let content = match out.format {
        Format::Text => {
            let mut s = String::new();
            for (_, exact, numeric) in &rows {
                match exact {
                    Some(v) => s.push_str(&format!("{v}\n")),
                    None => s.push_str(&format!("{} {}\n", fmt_f(numeric.re), fmt_f(numeric.im))),
                }
            }
            s
        }
        Format::Json => {
            let mut s = String::new();
            for (k, exact, numeric) in &rows {
                let v = serde_json::json!({
                    "k": k,
                    "exact": exact.as_ref().map(|v| format!("{v}/1")),
                    "numeric": { "re": numeric.re, "im": numeric.im },
                });
                s.push_str(&v.to_string());
                s.push('\n');
            }
            s
        }
        Format::Csv => {
            let mut s = String::from("k,exact,numeric_re,numeric_im\n");
            for (k, exact, numeric) in &rows {
                let e = exact.as_ref().map(|v| v.to_string()).unwrap_or_default();
                s.push_str(&format!("{k},{e},{},{}\n", fmt_f(numeric.re), fmt_f(numeric.im)));
            }
            s
        }
        Format::Svg => {
            return Err(Error::Malformed("svg output is not defined for moments".into()))
        }
    };
    write_output(out, &content)
}

fn cmd_basis(k: usize, emit_appendix: bool, out: &OutputArgs) -> Result<()> {
    let content = if emit_appendix {
        let table = basis::emit_appendix(k)?;
        match out.format {
            Format::Text => table.to_text(),
            Format::Json => {
                let mut s = table.to_json().to_string();
                s.push('\n');
                s
            }
            _ => return Err(Error::Malformed("appendix table supports text or json".into())),
        }
    } else {
        let f = basis::coefficient_formula(k)?;
        match out.format {
            Format::Text => f.to_text(),
            Format::Json => {
                let mut s = f.to_json().to_string();
                s.push('\n');
                s
            }
            _ => return Err(Error::Malformed("basis tables support text or json".into())),
        }
    };
    write_output(out, &content)
}

fn parse_window(window: &str) -> Result<tube::Region> {
    let parts: Vec<f64> = window
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<f64>()
                .map_err(|_| Error::Malformed(format!("bad window component {s:?}")))
        })
        .collect::<Result<_>>()?;
    if parts.len() != 4 {
        return Err(Error::Malformed(
            "window must be re_min,re_max,im_min,im_max".into(),
        ));
    }
    Ok(tube::Region {
        re_min: parts[0],
        re_max: parts[1],
        im_min: parts[2],
        im_max: parts[3],
    })
}

fn cmd_tube(
    n: usize,
    curve: bool,
    window: &str,
    grid: f64,
    tol: f64,
    out: &OutputArgs,
) -> Result<()> {
    if n == 0 {
        return Err(Error::Malformed("tube length must be at least 1".into()));
    }
    if !curve {
        let p = tube::tube_chromatic(n)?;
        return poly_output(&p, out);
    }
    let region = parse_window(window)?;
    let sample = tube::limit_curve_sample(region, grid, tol)?;
    let content = match out.format {
        Format::Text | Format::Csv => sample.to_csv(),
        Format::Json => {
            let v = serde_json::json!({
                "curve": sample.points.iter().map(|z| [z.re, z.im]).collect::<Vec<_>>(),
                "special": sample.special.iter().map(|z| [z.re, z.im]).collect::<Vec<_>>(),
            });
            let mut s = v.to_string();
            s.push('\n');
            s
        }
        Format::Svg => {
            let p = tube::tube_chromatic(n)?;
            let measure = spectra::find_roots_capped(&p, spectra::DEFAULT_ROOT_TOL, p.degree())?;
            let roots: Vec<(f64, f64)> = measure.roots().iter().map(|z| (z.re, z.im)).collect();
            let curve_pts: Vec<(f64, f64)> =
                sample.points.iter().map(|z| (z.re, z.im)).collect();
            let special: Vec<(f64, f64)> =
                sample.special.iter().map(|z| (z.re, z.im)).collect();
            svg::render(
                &[
                    svg::Scatter { points: curve_pts, color: "#c8d4ea".into(), radius: 1.2 },
                    svg::Scatter { points: roots, color: "#1f4e9c".into(), radius: 2.5 },
                    svg::Scatter { points: special, color: "#b03030".into(), radius: 3.0 },
                ],
                &[],
                &format!("tube T_{n}: roots over the equimodular curve"),
            )
        }
    };
    write_output(out, &content)
}

fn parse_rational(text: &str) -> Result<BigRational> {
    if let Ok(r) = BigRational::from_str(text) {
        return Ok(r);
    }
    let x: f64 = text
        .parse()
        .map_err(|_| Error::Malformed(format!("cannot parse {text:?} as a rational")))?;
    BigRational::from_float(x)
        .ok_or_else(|| Error::Malformed(format!("{text:?} is not a finite number")))
}

fn girth_json(c: f64, est: &limits::GirthEstimate) -> serde_json::Value {
    serde_json::json!({
        "c": c,
        "q": rational_string(&est.q),
        "estimate": est.estimate,
        "bound": est.bound,
        "exact": est.exact,
        "girth": est.girth,
        "forest": est.forest,
        "within_bound": est.within_bound(1e-9),
    })
}

fn cmd_girth_bound(
    graph: &GraphArgs,
    q_text: &str,
    sokal_c: Option<f64>,
    out: &OutputArgs,
) -> Result<()> {
    let g = graph.load()?;
    let q = parse_rational(q_text)?;
    let cs: Vec<f64> = match sokal_c {
        Some(c) => vec![c],
        None => vec![spectra::SOKAL_C, 8.0],
    };
    let mut results = Vec::new();
    for &c in &cs {
        results.push((c, limits::girth_estimate(&g, &q, Some(c))?));
    }
    let content = match out.format {
        Format::Text => {
            let mut s = String::new();
            for (c, est) in &results {
                s.push_str(&format!(
                    "C={c} q={} estimate={} bound={} exact={} within_bound={}\n",
                    rational_string(&est.q),
                    fmt_f(est.estimate),
                    fmt_f(est.bound),
                    est.exact.map(fmt_f).unwrap_or_else(|| "unavailable".into()),
                    est.within_bound(1e-9)
                        .map(|b| b.to_string())
                        .unwrap_or_else(|| "unknown".into()),
                ));
            }
            s
        }
        Format::Json => {
            let mut s = String::new();
            for (c, est) in &results {
                s.push_str(&girth_json(*c, est).to_string());
                s.push('\n');
            }
            s
        }
        Format::Csv => {
            let mut s = String::from("c,estimate,bound,exact,within_bound\n");
            for (c, est) in &results {
                s.push_str(&format!(
                    "{c},{},{},{},{}\n",
                    fmt_f(est.estimate),
                    fmt_f(est.bound),
                    est.exact.map(fmt_f).unwrap_or_default(),
                    est.within_bound(1e-9)
                        .map(|b| b.to_string())
                        .unwrap_or_default(),
                ));
            }
            s
        }
        Format::Svg => {
            return Err(Error::Malformed("svg output is not defined for girth-bound".into()))
        }
    };
    write_output(out, &content)
}

fn parse_family(text: &str) -> Result<limits::Family> {
    let (name, params) = match text.split_once(':') {
        Some((n, p)) => (n, p),
        None => (text, ""),
    };
    let nums: Vec<usize> = if params.is_empty() {
        Vec::new()
    } else {
        params
            .split(',')
            .map(|s| {
                s.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Malformed(format!("bad family parameter {s:?}")))
            })
            .collect::<Result<_>>()?
    };
    match (name, nums.len()) {
        ("path", 0) => Ok(limits::Family::Path),
        ("cycle", 0) => Ok(limits::Family::Cycle),
        ("tube", 0) => Ok(limits::Family::Tube),
        ("torus", 1) => Ok(limits::Family::Torus { d: nums[0] }),
        ("random-regular", 3) => Ok(limits::Family::RandomRegular {
            d: nums[0],
            girth: nums[1],
            seed: nums[2] as u64,
        }),
        _ => Err(Error::Malformed(format!(
            "family {text:?}: expected path, cycle, tube, torus:D, or \
             random-regular:D,GIRTH,SEED"
        ))),
    }
}

fn parse_sizes(text: &str) -> Result<Vec<usize>> {
    if let Some((range, step)) = text
        .split_once("..")
        .map(|(a, rest)| match rest.split_once(':') {
            Some((b, s)) => ((a, b), Some(s)),
            None => ((a, rest), None),
        })
    {
        let (a, b) = range;
        let lo: usize = a
            .trim()
            .parse()
            .map_err(|_| Error::Malformed(format!("bad size {a:?}")))?;
        let hi: usize = b
            .trim()
            .parse()
            .map_err(|_| Error::Malformed(format!("bad size {b:?}")))?;
        let step: usize = match step {
            Some(s) => s
                .trim()
                .parse()
                .map_err(|_| Error::Malformed(format!("bad size step {s:?}")))?,
            None => 1,
        };
        if step == 0 || hi < lo {
            return Err(Error::Malformed("size range must be nonempty with step >= 1".into()));
        }
        return Ok((lo..=hi).step_by(step).collect());
    }
    text.split(',')
        .map(|s| {
            s.trim()
                .parse::<usize>()
                .map_err(|_| Error::Malformed(format!("bad size {s:?}")))
        })
        .collect()
}

fn cmd_converge(
    family_text: &str,
    sizes_text: &str,
    kmax: usize,
    q_text: &str,
    out: &OutputArgs,
) -> Result<()> {
    let family = parse_family(family_text)?;
    let sizes = parse_sizes(sizes_text)?;
    if sizes.is_empty() {
        return Err(Error::Malformed("no sizes requested".into()));
    }
    let q_list: Vec<u64> = q_text
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<u64>()
                .map_err(|_| Error::Malformed(format!("bad entropy point {s:?}")))
        })
        .collect::<Result<_>>()?;
    let series = limits::run_convergence(family, &sizes, kmax, &q_list)?;
    let content = match out.format {
        Format::Json => series.to_json_lines(),
        Format::Text | Format::Csv => series.to_csv(),
        Format::Svg => {
            // entropy per vertex against n, with the infinite-tree value of
            // the matching degree as a horizontal reference where q permits
            let mut lines = Vec::new();
            for (qi, &q) in q_list.iter().enumerate() {
                let pts: Vec<(f64, f64)> = series
                    .records
                    .iter()
                    .filter_map(|r| r.entropy.get(qi).map(|&(_, t)| (r.size as f64, t)))
                    .collect();
                lines.push(svg::Line { points: pts, color: "#1f4e9c".into() });
                let d_ref = series
                    .records
                    .iter()
                    .map(|r| if r.vertices > 0 { 2 * r.edges / r.vertices } else { 0 })
                    .max()
                    .unwrap_or(0);
                if q > 1 && d_ref > 0 {
                    if let Ok(t_ref) = limits::tree_entropy(d_ref, q as f64) {
                        let xs: Vec<f64> = sizes.iter().map(|&s| s as f64).collect();
                        lines.push(svg::Line {
                            points: xs.iter().map(|&x| (x, t_ref)).collect(),
                            color: "#b03030".into(),
                        });
                    }
                }
            }
            svg::render(
                &[],
                &lines,
                &format!("{}: entropy per vertex vs size", series.family),
            )
        }
    };
    write_output(out, &content)
}

fn cmd_balls(graph: &GraphArgs, radius: usize, out: &OutputArgs) -> Result<()> {
    let g = graph.load()?;
    let dist = limits::ball_distribution(&g, radius)?;
    let content = match out.format {
        Format::Text => {
            let mut s = String::new();
            for (ball, w) in dist.atoms() {
                s.push_str(&format!(
                    "{} {} root={}\n",
                    rational_string(w),
                    graph6::emit_graph6(&ball.graph),
                    ball.root
                ));
            }
            s
        }
        Format::Json => {
            let mut s = String::new();
            for (ball, w) in dist.atoms() {
                let v = serde_json::json!({
                    "weight": rational_string(w),
                    "graph6": graph6::emit_graph6(&ball.graph),
                    "root": ball.root,
                    "radius": ball.radius,
                    "weight_float": w.to_f64(),
                });
                s.push_str(&v.to_string());
                s.push('\n');
            }
            s
        }
        Format::Csv => {
            let mut s = String::from("weight,graph6,root\n");
            for (ball, w) in dist.atoms() {
                s.push_str(&format!(
                    "{},{},{}\n",
                    rational_string(w),
                    graph6::emit_graph6(&ball.graph),
                    ball.root
                ));
            }
            s
        }
        Format::Svg => {
            return Err(Error::Malformed("svg output is not defined for balls".into()))
        }
    };
    write_output(out, &content)
}

fn run(cli: Cli) -> Result<()> {
    match &cli.command {
        Command::Chrompoly { graph, method, out } => {
            let g = graph.load()?;
            let p = match method {
                PolyMethod::Dc => chromatic::chromatic_dc(&g)?,
                PolyMethod::Expansion => chromatic::chromatic_expansion(&g)?,
            };
            poly_output(&p, out)
        }
        Command::Roots { graph, tol, degree_cap, sokal_c, out } => {
            cmd_roots(graph, *tol, *degree_cap, *sokal_c, out)
        }
        Command::Moments { graph, kmax, method, tol, out } => {
            cmd_moments(graph, *kmax, *method, *tol, out)
        }
        Command::Hom { h, g } => {
            let hg = input::load_spec(h)?;
            let gg = input::load_spec(g)?;
            println!("{}", hom::hom_count(&hg, &gg));
            Ok(())
        }
        Command::Basis { k, emit_appendix, out } => cmd_basis(*k, *emit_appendix, out),
        Command::Tube { n, curve, window, grid, tol, out } => {
            cmd_tube(*n, *curve, window, *grid, *tol, out)
        }
        Command::GirthBound { graph, q, sokal_c, out } => {
            cmd_girth_bound(graph, q, *sokal_c, out)
        }
        Command::Converge { family, sizes, kmax, q, out } => {
            cmd_converge(family, sizes, *kmax, q, out)
        }
        Command::Balls { graph, radius, out } => cmd_balls(graph, *radius, out),
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Budget(_) | Error::SizeCap { .. } | Error::RejectionBudget(_) => 3,
        Error::NonConvergence(_) => 4,
        _ => 2,
    }
}

fn main() {
    if let Ok(threads) = std::env::var("CHROMALOC_THREADS") {
        if let Ok(n) = threads.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
    }
    let cli = Cli::parse();
    if let Err(e) = run(cli) {
        eprintln!("error: {e}");
        std::process::exit(exit_code(&e));
    }
}
