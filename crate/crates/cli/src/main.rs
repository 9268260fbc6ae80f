//! Command-line front end: exact counts, avoidance sequences, statistic
//! distributions, Wilf classification, bijections, triangles, generating
//! functions, residual checks and table reports.
//!
//! Exit codes: 0 success (all comparisons match), 1 a comparison failed,
//! 2 usage error.

use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand};

use invlab::bijections::{
    cap_map, cap_map_inv, corteel_phi, eta, eta_inv, first_occurrence_inv, first_occurrence_map,
    outline, phi_stat, phi_stat_inv, psi, rho, rho_inv, tree_to_dyck, zero_propagate,
    zero_propagate_inv, OrderedTree,
};
use invlab::closed_forms::{dyck_last, triangle_t};
use invlab::enumerate::{
    avoidance_sequence, count_avoiders, distribution, table_report_with, wilf_classify,
    PatternSet,
};
use invlab::recurrences::{a_triangle, b_triangle, c_triangle, z_triangle, IndexedTriangle};
use invlab::series::{gf, parse_q, residual, EqId, GfName, Q};
use invlab::tables::{self, ExpectedTable};
use invlab::{InvSeq, RelTriple, Statistic};

#[derive(Parser)]
#[command(name = "invlab", version, about = "Inversion sequences avoiding pairs of length-3 patterns: counts, bijections, series")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count the avoiders in I_n for a pattern set and/or relation triple.
    Count {
        #[arg(long)]
        n: usize,
        /// comma-separated word patterns, e.g. 001,110
        #[arg(long)]
        patterns: Option<String>,
        /// relation triple, e.g. ">=,!=,>=" (ASCII) or "≥,≠,≥"
        #[arg(long)]
        triple: Option<String>,
    },
    /// Avoidance counts a_1..a_nmax.
    Sequence {
        #[arg(long)]
        patterns: Option<String>,
        #[arg(long)]
        triple: Option<String>,
        #[arg(long)]
        nmax: usize,
        /// bfile | csv | json
        #[arg(long, default_value = "bfile")]
        format: String,
    },
    /// Histogram of a statistic over an avoidance class.
    Distribution {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        patterns: Option<String>,
        #[arg(long)]
        triple: Option<String>,
        /// asc | dist | rmin | zero | satu | rep | last
        #[arg(long)]
        stat: String,
    },
    /// Group the 78 pattern pairs into Wilf-equivalence classes.
    Classify {
        #[arg(long, default_value_t = 8)]
        nmax: usize,
    },
    /// Apply a named bijection and report the statistics it moves.
    Bijection {
        /// outline | eta | phi_stat[_inv] | zero_propagate[_inv] |
        /// first_occurrence[_inv] | rho[_inv] | corteel_phi | psi |
        /// cap_map[_inv] | tree_to_dyck
        #[arg(long)]
        name: String,
        /// comma-separated inversion sequence, e.g. 0,0,2,1,0,4
        #[arg(long)]
        input: Option<String>,
        /// nested-parentheses ordered tree literal, e.g. (()((()()))(()))
        #[arg(long)]
        tree: Option<String>,
    },
    /// Dump a counting triangle as CSV.
    Triangle {
        /// a | b | c | z | t | d
        #[arg(long)]
        name: String,
        #[arg(long)]
        nmax: usize,
    },
    /// Print a catalog generating function, one exact coefficient per line.
    Gf {
        /// catalan_c | d_at | gen_sava | s_system | h_closed |
        /// closed_110_102 | closed_120_102
        #[arg(long)]
        name: String,
        #[arg(long, default_value_t = 24)]
        order: usize,
        /// rational parameter for d_at, e.g. 1/2
        #[arg(long)]
        u: Option<String>,
    },
    /// Evaluate a functional-equation residual at a rational point.
    Residual {
        /// fun_110_102 | fun_120_102 | func_011_201 | eq_sav
        #[arg(long)]
        eq: String,
        #[arg(long)]
        u: String,
        #[arg(long)]
        v: String,
        #[arg(long, default_value_t = 16)]
        order: usize,
    },
    /// Reproduce a summary table against the embedded expected data.
    Report {
        /// 1 or 2
        #[arg(long)]
        table: u8,
        #[arg(long, default_value_t = 8)]
        nmax: usize,
        /// override the embedded expected-counts CSV
        #[arg(long)]
        data: Option<PathBuf>,
    },
}

fn usage_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {}", msg);
    ExitCode::from(2)
}

fn parse_set(patterns: &Option<String>, triple: &Option<String>) -> Result<PatternSet, String> {
    let mut ps = match patterns {
        Some(s) => PatternSet::parse_patterns(s).map_err(|e| e.to_string())?,
        None => PatternSet::default(),
    };
    if let Some(t) = triple {
        let t: RelTriple = t.parse().map_err(|e: invlab::core::CoreError| e.to_string())?;
        ps = ps.with_triple(t);
    }
    if ps.word_patterns.is_empty() && ps.triples.is_empty() {
        return Err("give --patterns and/or --triple".to_string());
    }
    Ok(ps)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(msg) => usage_error(msg),
    }
}

fn run(cmd: Command) -> Result<ExitCode, String> {
    match cmd {
        Command::Count { n, patterns, triple } => {
            let ps = parse_set(&patterns, &triple)?;
            let count = count_avoiders(n, &ps).map_err(|e| e.to_string())?;
            println!("{}", count);
            Ok(ExitCode::SUCCESS)
        }
        Command::Sequence { patterns, triple, nmax, format } => {
            let ps = parse_set(&patterns, &triple)?;
            let seq = avoidance_sequence(&ps, nmax).map_err(|e| e.to_string())?;
            match format.as_str() {
                "bfile" => {
                    for (i, c) in seq.counts.iter().enumerate() {
                        println!("{} {}", i + 1, c);
                    }
                }
                "csv" => {
                    println!("n,count");
                    for (i, c) in seq.counts.iter().enumerate() {
                        println!("{},{}", i + 1, c);
                    }
                }
                "json" => {
                    let pats: Vec<String> = ps
                        .word_patterns
                        .iter()
                        .map(|p| format!("\"{}\"", p))
                        .collect();
                    let counts: Vec<String> = seq
                        .counts
                        .iter()
                        .enumerate()
                        .map(|(i, c)| format!("\"{}\": {}", i + 1, c))
                        .collect();
                    println!(
                        "{{\"pair\": [{}], \"counts\": {{{}}}, \"provenance\": \"bruteforce\"}}",
                        pats.join(", "),
                        counts.join(", ")
                    );
                }
                other => return Err(format!("unknown format {:?}", other)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Distribution { n, patterns, triple, stat } => {
            let ps = parse_set(&patterns, &triple)?;
            let st = Statistic::from_str(&stat).map_err(|e| e.to_string())?;
            let hist = distribution(n, &ps, st).map_err(|e| e.to_string())?;
            for (value, count) in hist {
                println!("{} {}", value, count);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Classify { nmax } => {
            let cls = wilf_classify(nmax).map_err(|e| e.to_string())?;
            for class in &cls.classes {
                let members: Vec<String> = class
                    .pairs
                    .iter()
                    .map(|(p, q)| {
                        let (ps, qs) = (p.to_string(), q.to_string());
                        // print in the orientation the summary tables use
                        match tables::TABLE_ROWS.iter().find(|r| {
                            (r.pair.0 == ps && r.pair.1 == qs)
                                || (r.pair.0 == qs && r.pair.1 == ps)
                        }) {
                            Some(r) => format!("({},{})[{}]", r.pair.0, r.pair.1, r.label),
                            None => format!("({},{})[?]", p, q),
                        }
                    })
                    .collect();
                let counts: Vec<String> = class.counts.iter().map(|c| c.to_string()).collect();
                println!("{}: {}", counts.join(","), members.join(" "));
            }
            println!("{} classes", cls.classes.len());
            Ok(ExitCode::SUCCESS)
        }
        Command::Bijection { name, input, tree } => run_bijection(&name, &input, &tree),
        Command::Triangle { name, nmax } => {
            match name.as_str() {
                "a" => dump3(&a_triangle(nmax)),
                "b" => dump3(&b_triangle(nmax)),
                "c" => dump3(&c_triangle(nmax)),
                "z" => dump2(nmax, "k", |n, k| z_triangle(nmax).get(n, k), 1),
                "t" => dump2(nmax, "k", |n, k| triangle_t(nmax).get(n, k), 1),
                "d" => dump2(nmax, "m", |n, m| dyck_last(nmax).get(n, m), 0),
                other => return Err(format!("unknown triangle {:?}", other)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Gf { name, order, u } => {
            let g: GfName = name.parse().map_err(|e: invlab::series::SeriesError| e.to_string())?;
            let params: Vec<Q> = match u {
                Some(s) => vec![parse_q(&s).ok_or_else(|| format!("bad rational {:?}", s))?],
                None => Vec::new(),
            };
            let f = gf(g, order, &params).map_err(|e| e.to_string())?;
            print!("{}", f);
            Ok(ExitCode::SUCCESS)
        }
        Command::Residual { eq, u, v, order } => {
            let e: EqId = eq.parse().map_err(|e: invlab::series::SeriesError| e.to_string())?;
            let uq = parse_q(&u).ok_or_else(|| format!("bad rational {:?}", u))?;
            let vq = parse_q(&v).ok_or_else(|| format!("bad rational {:?}", v))?;
            let r = residual(e, &uq, &vq, order).map_err(|err| err.to_string())?;
            print!("{}", r);
            if r.is_zero() {
                println!("residual is the zero series to order {}", order);
                Ok(ExitCode::SUCCESS)
            } else {
                println!("residual is NONZERO");
                Ok(ExitCode::FAILURE)
            }
        }
        Command::Report { table, nmax, data } => {
            if table != 1 && table != 2 {
                return Err("--table must be 1 or 2".to_string());
            }
            let expected: ExpectedTable = match data {
                Some(path) => ExpectedTable::load(&path).map_err(|e| e.to_string())?,
                None => tables::embedded().clone(),
            };
            let rep = table_report_with(table, nmax, &expected).map_err(|e| e.to_string())?;
            let mut matched = 0usize;
            for row in &rep.rows {
                let cells: Vec<String> = row
                    .cells
                    .iter()
                    .map(|c| {
                        if c.matched {
                            format!("{}", c.brute)
                        } else {
                            format!(
                                "{}!={}",
                                c.brute,
                                c.expected.map_or("?".to_string(), |v| v.to_string())
                            )
                        }
                    })
                    .collect();
                let flag = if row.all_match { "ok" } else { "MISMATCH" };
                matched += row.all_match as usize;
                print!(
                    "({},{}) [{}] {}: {}",
                    row.pair.0,
                    row.pair.1,
                    row.label,
                    flag,
                    cells.join(",")
                );
                match row.note {
                    Some(note) => println!("  # {}", note),
                    None => println!(),
                }
            }
            println!(
                "table {}: {}/{} rows match to n={}",
                table,
                matched,
                rep.rows.len(),
                nmax
            );
            if rep.all_match {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::FAILURE)
            }
        }
    }
}

fn dump3(t: &IndexedTriangle) {
    println!("n,m,l,value");
    for (n, m, l, v) in t.cells() {
        println!("{},{},{},{}", n, m, l, v);
    }
}

fn dump2(nmax: usize, col: &str, get: impl Fn(usize, usize) -> u64, start: usize) {
    println!("n,{},value", col);
    for n in 1..=nmax {
        for k in start..=n - 1 + start {
            println!("{},{},{}", n, k, get(n, k));
        }
    }
}

fn stat_report(before: &InvSeq, after: &InvSeq) {
    let a = before.stats();
    let b = after.stats();
    for st in Statistic::ALL {
        let x = st.of(&a);
        let y = st.of(&b);
        let mark = if x == y { "preserved" } else { "changed" };
        println!("{:>5}: {} -> {} ({})", st.name(), x, y, mark);
    }
}

fn run_bijection(
    name: &str,
    input: &Option<String>,
    tree: &Option<String>,
) -> Result<ExitCode, String> {
    if name == "tree_to_dyck" {
        let lit = tree
            .as_deref()
            .ok_or_else(|| "tree_to_dyck needs --tree".to_string())?;
        let t: OrderedTree = lit.parse().map_err(|e: invlab::bijections::BijectionError| e.to_string())?;
        let d = tree_to_dyck(&t);
        println!("tree:   {}", t);
        println!("image:  {}", d);
        let tt: Vec<String> = t.type_of().iter().map(|x| x.to_string()).collect();
        println!("type:   ({})  preserved={}", tt.join(","), t.type_of() == d.type_of());
        println!("cap:    {} -> {}  preserved={}", t.cap(), d.cap(), t.cap() == d.cap());
        return Ok(ExitCode::SUCCESS);
    }
    let raw = input
        .as_deref()
        .ok_or_else(|| format!("bijection {:?} needs --input", name))?;
    let e: InvSeq = raw.parse().map_err(|err: invlab::core::CoreError| err.to_string())?;
    let map_err = |err: invlab::bijections::BijectionError| err.to_string();
    match name {
        "outline" => {
            let d = outline(&e).map_err(map_err)?;
            println!("input:  {}", e);
            println!("image:  {}", d);
            println!("in outline class: {}", d.in_class_a());
            Ok(ExitCode::SUCCESS)
        }
        "eta" => {
            let p = eta(&e).map_err(map_err)?;
            println!("input:  {}", e);
            println!("image:  {}", p);
            println!(
                "zero(e) = {} = block count = {}",
                e.stats().zero,
                p.block_count()
            );
            let back = eta_inv(&p).map_err(map_err)?;
            println!("round-trip ok: {}", back == e);
            Ok(ExitCode::SUCCESS)
        }
        _ => {
            let img = match name {
                "phi_stat" => phi_stat(&e),
                "phi_stat_inv" => phi_stat_inv(&e),
                "zero_propagate" => zero_propagate(&e),
                "zero_propagate_inv" => zero_propagate_inv(&e),
                "first_occurrence" => first_occurrence_map(&e),
                "first_occurrence_inv" => first_occurrence_inv(&e),
                "rho" => rho(&e),
                "rho_inv" => rho_inv(&e),
                "corteel_phi" => corteel_phi(&e),
                "psi" => psi(&e),
                "cap_map" => cap_map(&e),
                "cap_map_inv" => cap_map_inv(&e),
                other => return Err(format!("unknown bijection {:?}", other)),
            }
            .map_err(map_err)?;
            println!("input:  {}", e);
            println!("image:  {}", img);
            stat_report(&e, &img);
            Ok(ExitCode::SUCCESS)
        }
    }
}
