//! Command-line interface: enumeration and catalog export, per-curve group
//! reports, Alexander modules, perturbations, and the verification suites.

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use sextic_core::catalog::{self, Row};
use sextic_core::enumeration::{enumerate_curve_classes, totals};
use sextic_core::fpgroup::{coset_enumerate, Presentation, TcOptions, Word};
use sextic_core::matching::match_rows;
use sextic_core::perturb::{self, E6Case};
use sextic_core::rows::{self, presentation_for};
use sextic_core::verify;

mod catalog_file;
mod wordparse;

#[derive(Parser)]
#[command(
    name = "sextic",
    about = "Classification and fundamental groups of maximizing plane sextics with a type E6 point",
    version
)]
struct Cli {
    /// Worker threads for the verification fan-out (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    /// Coset-table row limit.
    #[arg(long, global = true, default_value_t = 2_000_000)]
    limit: usize,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Md,
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Enumerate all classes, match them to the catalog and write it out.
    Enumerate {
        /// Upper bound on trivalent vertices (the classification needs 8).
        #[arg(long, default_value_t = 8)]
        max_vertices: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Output path; stdout when omitted.
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
    /// Regenerate the two classification tables.
    Tables {
        #[arg(long, value_enum, default_value_t = Format::Md)]
        format: Format,
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
    /// Group computations for one curve.
    Group {
        /// Curve id, e.g. T1-09 or T2-16'.
        id: String,
        /// Extra relators to quotient by, e.g. "a1^5".
        #[arg(long)]
        quotient: Vec<String>,
        /// Compute the commutant (derived subgroup) data.
        #[arg(long)]
        commutant: bool,
        /// Attempt the free-of-rank-2 certificate for the commutant.
        #[arg(long)]
        free_certificate: bool,
    },
    /// Alexander module of a two-linear-component curve.
    Alexander { id: String },
    /// Perturb a singular point and report the resulting group.
    Perturb {
        id: String,
        /// The point: "E6", or a singularity label like "A4" or "D13".
        #[arg(long)]
        point: String,
        /// For E6: one of 2a2+a1, 2a2, a5, other. For A/D points: "full"
        /// (s = 1), "s=<n>", or "irreducible" for D points.
        #[arg(long)]
        target: String,
    },
    /// Run the verification suites.
    Verify {
        /// One of: all, tables, groups, alexander, perturbations, properties.
        #[arg(default_value = "all")]
        section: String,
    },
}

fn main() -> Result<()> {
    let cli = Cli::parse();
    if cli.jobs > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cli.jobs)
            .build_global()
            .ok();
    }
    match cli.cmd {
        Cmd::Enumerate {
            max_vertices,
            format,
            out,
        } => cmd_enumerate(max_vertices, format, out),
        Cmd::Tables { format, out } => cmd_tables(format, out),
        Cmd::Group {
            id,
            quotient,
            commutant,
            free_certificate,
        } => cmd_group(&id, &quotient, commutant, free_certificate, cli.limit),
        Cmd::Alexander { id } => cmd_alexander(&id),
        Cmd::Perturb { id, point, target } => cmd_perturb(&id, &point, &target, cli.limit),
        Cmd::Verify { section } => cmd_verify(&section),
    }
}

fn write_out(out: Option<std::path::PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) => {
            std::fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?
        }
        None => print!("{}", text),
    }
    Ok(())
}

fn cmd_enumerate(
    max_vertices: usize,
    format: Format,
    out: Option<std::path::PathBuf>,
) -> Result<()> {
    if max_vertices < 8 {
        // A reduced run misses the all-A budget entirely; only the
        // small-vertex classes (extra E6 fibers or several D fibers)
        // survive, and they are reported without catalog matching.
        let classes = sextic_core::enumeration::enumerate_curve_classes_bounded(max_vertices);
        let t = totals(&classes);
        println!(
            "reduced run (max {} trivalent vertices): {} accepted classes, every one with Milnor number 19",
            max_vertices, t.classes
        );
        for c in &classes {
            println!(
                "  {} ({}, {})",
                c.set.canonical_string(),
                if c.real {
                    "real"
                } else {
                    "complex pair member"
                },
                if c.irreducible() {
                    "irreducible"
                } else {
                    "reducible"
                },
            );
        }
        return Ok(());
    }
    eprintln!("enumerating rotation systems...");
    let classes = enumerate_curve_classes();
    let t = totals(&classes);
    eprintln!("matching {} classes to the catalog...", classes.len());
    let matches = match_rows(&classes).map_err(|e| anyhow!("catalog mismatch: {e}"))?;
    let summary = format!(
        "{} classes / {} sets / {} irreducible / {} reducible",
        t.classes, t.published_sets, t.irreducible_classes, t.reducible_classes
    );
    if (
        t.classes,
        t.published_sets,
        t.irreducible_classes,
        t.reducible_classes,
    ) != (93, 71, 53, 40)
    {
        eprintln!("count mismatch: got {summary}, expected 93 / 71 / 53 / 40");
        std::process::exit(1);
    }
    let text = match format {
        Format::Json => {
            let text = catalog_file::to_json(&classes, &matches)?;
            // round-trip sanity before anything reads it back
            catalog_file::parse_json(&text)?;
            text
        }
        Format::Csv => catalog_file::to_csv(&classes, &matches),
        Format::Md => catalog_file::to_text(&classes, &matches),
    };
    write_out(out, &text)?;
    println!("{summary}");
    Ok(())
}

fn cmd_tables(format: Format, out: Option<std::path::PathBuf>) -> Result<()> {
    let text = match format {
        Format::Md => catalog_file::tables_markdown(),
        Format::Csv => catalog_file::tables_csv(),
        Format::Json => bail!("tables are rendered as md or csv; use enumerate for json"),
    };
    write_out(out, &text)
}

fn find_row(id: &str) -> Result<&'static Row> {
    catalog::row(id).ok_or_else(|| {
        anyhow!(
            "unknown curve id {:?}; expected T1-<n> or T2-<n>' as in the tables",
            id
        )
    })
}

fn require_presentation(row: &'static Row) -> Result<sextic_core::vankampen::CurvePresentation> {
    presentation_for(row).ok_or_else(|| {
        anyhow!(
            "{}: the group of this curve is imported from the cited literature; no presentation is built",
            row.id
        )
    })
}

fn cmd_group(
    id: &str,
    quotients: &[String],
    commutant: bool,
    free_certificate: bool,
    limit: usize,
) -> Result<()> {
    let row = find_row(id)?;
    let cp = require_presentation(row)?;
    let mut p = cp.presentation.clone();
    for q in quotients {
        let w = wordparse::parse_word(q)?;
        p = p.quotient(&[w]);
    }
    println!("curve {}: {}", row.id, row.display);
    println!("abelianization: {}", p.abelianization());
    if p.abelianization().is_finite() {
        match coset_enumerate(
            &p,
            &[],
            TcOptions {
                limit,
                ..Default::default()
            },
        ) {
            Ok(t) => {
                println!(
                    "coset enumeration over the trivial subgroup: order {}",
                    t.index
                );
                if p.abelianization().is_trivial() {
                    println!("the group is perfect");
                }
            }
            Err(e) => println!("coset enumeration: inconclusive at limit {} ({})", limit, e),
        }
    } else {
        println!("infinite abelianization; coset enumeration over the trivial subgroup skipped");
    }
    if commutant || free_certificate {
        report_commutant(row, &p, free_certificate, limit)?;
    }
    Ok(())
}

fn report_commutant(
    row: &'static Row,
    p: &Presentation,
    free_certificate: bool,
    limit: usize,
) -> Result<()> {
    let reduced = if p.abelianization().is_finite() {
        p.clone()
    } else {
        let z = row
            .pi1
            .checks
            .iter()
            .find_map(|c| match c {
                catalog::Check::AbelianViaCenter(z)
                | catalog::Check::CommutantViaCenter { z, .. }
                | catalog::Check::CommutantPerfectViaCenter(z) => Some(*z),
                _ => None,
            })
            .ok_or_else(|| anyhow!("no center-reduction recipe recorded for {}", row.id))?;
        println!("center reduction through {:?}", z);
        p.quotient(&rows::central_words(z))
    };
    if free_certificate {
        match rows::free_rank2_certificate(&reduced) {
            Ok(_) => println!("commutant: free of rank 2 (certificate reached)"),
            Err(e) => println!("commutant: {}", e),
        }
        return Ok(());
    }
    match rows::commutant_of_finite_h1(&reduced, limit) {
        Ok(c) => println!("commutant: order {}, perfect: {}", c.order, c.perfect),
        Err(e) => println!("commutant: inconclusive ({})", e),
    }
    Ok(())
}

fn cmd_alexander(id: &str) -> Result<()> {
    let row = find_row(id)?;
    let params = match row.family {
        catalog::Family::Hex { params, .. } if row.pi1.h1 == catalog::H1Kind::ZZ => params,
        _ => bail!(
            "{}: the two-variable Alexander calculus applies to the curves with two linear components (quartic plus two lines); this row splits as {}",
            row.id,
            row.pi1.h1.splitting()
        ),
    };
    let module = sextic_core::alexander::build_module(params)?;
    let elim = sextic_core::alexander::eliminate_t(&module)?;
    println!("curve {}: {}", row.id, row.display);
    println!("t-action: t a = ({}) a", elim.t_image);
    let claimed = sextic_core::alexander::gcd_many(&elim.generators);
    if claimed.is_zero() {
        bail!("no relations");
    }
    match sextic_core::alexander::ideal_equals(&elim.generators, &claimed) {
        Ok(cert) => println!(
            "annihilator: ({}) [certified by a {}-term combination]",
            claimed,
            cert.combination.len()
        ),
        Err(e) => println!(
            "annihilator divides ({}); single-generator certificate inconclusive ({})",
            claimed, e
        ),
    }
    Ok(())
}

fn cmd_perturb(id: &str, point: &str, target: &str, limit: usize) -> Result<()> {
    let row = find_row(id)?;
    let cp = require_presentation(row)?;
    let child = if point.eq_ignore_ascii_case("e6") {
        let case = match target.to_ascii_lowercase().as_str() {
            "2a2+a1" => E6Case::TwoA2A1,
            "2a2" | "a5" | "2a2|a5" => E6Case::TwoA2OrA5,
            "other" | "full" => E6Case::Other,
            t => bail!("unknown E6 target {:?}; use 2a2+a1, 2a2, a5 or other", t),
        };
        perturb::perturb_e6(&cp, case)
    } else {
        let (kind, mu) = parse_point(point)?;
        let slots = slots_of(row);
        let (slot, _n) = slots
            .iter()
            .find(|(_, n)| match kind {
                'A' => *n == mu + 1,
                'D' => *n + 4 == mu,
                _ => false,
            })
            .copied()
            .ok_or_else(|| {
                anyhow!(
                    "{}: no relation slot carries {}{} (slots: {:?})",
                    row.id,
                    kind,
                    mu,
                    slots
                )
            })?;
        let s = match target.to_ascii_lowercase().as_str() {
            "full" => 1,
            "irreducible" if kind == 'D' => {
                let extra: Vec<_> = [(1, 2), (1, 3), (2, 3)]
                    .into_iter()
                    .map(|(i, j)| {
                        (
                            Word::gen(i).commutator(&Word::gen(j)),
                            sextic_core::fpgroup::Provenance::Extra("D perturbation".into()),
                        )
                    })
                    .collect();
                let child = cp.with_extra(&extra);
                return report_child(row, &child.presentation, limit);
            }
            t => t
                .strip_prefix("s=")
                .and_then(|v| v.parse::<u32>().ok())
                .ok_or_else(|| anyhow!("unknown target {:?}; use full, s=<n> or irreducible", t))?,
        };
        if kind == 'A' {
            let admissible =
                perturb::admissible_a_perturbations(mu, perturb::AConstraints::default());
            if !admissible.contains(&s) {
                bail!(
                    "s = {} is not admissible for an A{} point: s must be a proper divisor of {} (and odd at a two-component intersection, not divisible by 3 when a torus structure is destroyed)",
                    s,
                    mu,
                    mu + 1
                );
            }
        } else if s == 0 || s + 2 > mu {
            bail!(
                "s = {} out of range for a D{} point (1 <= s <= {})",
                s,
                mu,
                mu - 2
            );
        }
        perturb::apply_a_perturbation(&cp, slot, s)
    };
    report_child(row, &child.presentation, limit)
}

fn slots_of(row: &Row) -> Vec<(&'static str, u32)> {
    match &row.family {
        catalog::Family::Loop { params, .. } => ["r", "s", "t", "w"]
            .iter()
            .zip(params.iter())
            .filter_map(|(n, p)| p.map(|v| (*n, v)))
            .collect(),
        catalog::Family::DoubleLoop { l, .. } => {
            let mut v: Vec<(&'static str, u32)> = l.map(|n| ("l", n)).into_iter().collect();
            v.push(("inner pentagon", 5));
            v
        }
        catalog::Family::Hex { params, .. } => ["R0", "R1", "R2", "R3", "R4", "R5"]
            .iter()
            .zip(params.iter())
            .filter_map(|(n, p)| p.map(|v| (*n, v)))
            .collect(),
        _ => Vec::new(),
    }
}

fn parse_point(point: &str) -> Result<(char, u32)> {
    let kind = point
        .chars()
        .next()
        .map(|c| c.to_ascii_uppercase())
        .ok_or_else(|| anyhow!("empty point"))?;
    if kind != 'A' && kind != 'D' {
        bail!("unknown point {:?}; use E6, A<p> or D<q>", point);
    }
    let mu: u32 = point[1..]
        .parse()
        .with_context(|| format!("parsing the index of {:?}", point))?;
    Ok((kind, mu))
}

fn report_child(row: &'static Row, p: &Presentation, limit: usize) -> Result<()> {
    println!("perturbed {} ({})", row.id, row.display);
    let h1 = p.abelianization();
    println!("abelianization: {}", h1);
    if h1.is_finite() {
        match coset_enumerate(
            p,
            &[],
            TcOptions {
                limit,
                ..Default::default()
            },
        ) {
            Ok(t) => {
                println!("order: {}", t.index);
                if t.index == 6 {
                    println!("the group is cyclic of order 6");
                }
            }
            Err(e) => println!("coset enumeration inconclusive ({})", e),
        }
        if h1.order() == Some(6u32.into()) {
            if let Ok(cert) = perturb::rb3_certificate(p) {
                println!(
                    "reduced braid group certificate: a1 -> {}, a2 -> {}, a3 -> {} with a free rank-2 commutant",
                    cert.images[0], cert.images[1], cert.images[2]
                );
            }
        }
    } else {
        println!("the perturbed curve is still reducible (infinite abelianization)");
        let simplified = sextic_core::fpgroup::tietze::tietze_simplify(
            p,
            sextic_core::fpgroup::tietze::TietzeBudget::default(),
        );
        if perturb::syntactically_abelian(&simplified) {
            println!(
                "the group is abelian: it simplifies to an abelian presentation on {} generators",
                simplified.gens
            );
        }
    }
    Ok(())
}

fn cmd_verify(section: &str) -> Result<()> {
    let print_report = |rep: &verify::Report| {
        for l in &rep.lines {
            println!(
                "{} {}: {}",
                if l.pass { "PASS" } else { "FAIL" },
                l.name,
                l.detail
            );
        }
        println!("{}/{} checks pass", rep.passed(), rep.lines.len());
    };
    let progress = |s: &str| eprintln!("checking {s}...");
    let ok = match section {
        "tables" => {
            progress("tables");
            let r = verify::verify_tables();
            print_report(&r);
            r.all_pass()
        }
        "groups" => {
            progress("groups");
            let r = verify::verify_groups();
            print_report(&r);
            r.all_pass()
        }
        "alexander" => {
            progress("alexander");
            let r = verify::verify_alexander();
            print_report(&r);
            r.all_pass()
        }
        "perturbations" => {
            progress("perturbations");
            let r = verify::verify_perturbations();
            print_report(&r);
            r.all_pass()
        }
        "properties" => {
            progress("properties");
            let r = verify::verify_properties(10_000);
            print_report(&r);
            r.all_pass()
        }
        "all" => {
            progress("all seven acceptance criteria");
            let acc = verify::acceptance();
            for (name, pass, rep) in &acc.criteria {
                println!("{} criterion {}", if *pass { "PASS" } else { "FAIL" }, name);
                for l in rep.lines.iter().filter(|l| !l.pass) {
                    println!("    FAIL {}: {}", l.name, l.detail);
                }
            }
            acc.all_pass()
        }
        s => bail!(
            "unknown section {:?}; use all, tables, groups, alexander, perturbations or properties",
            s
        ),
    };
    if !ok {
        std::process::exit(1);
    }
    Ok(())
}
