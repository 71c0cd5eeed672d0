use std::fs;

use dumont_core::sequences::{gf_coefficients, GfId, SequenceId};
use dumont_core::structure::{
    composition_to_d2_231, d2_231_to_composition, d2_3142_to_dyck, dyck_to_d2_3142, verify_all,
    verify_theorem, VerificationReport,
};
use dumont_core::{
    wilf_classes, DyckPath, Enumerator, PatternSet, Permutation, TheoremId, WeakComposition,
};
use serde::Serialize;

use crate::output::{csv_value, json, plain_perm, plain_value};
use crate::{status, BijectionName, CliError, Command, FamilyArgs, Format};

pub fn run(command: Command) -> Result<u8, CliError> {
    let enumerator = Enumerator::from_env();
    match command {
        Command::Enumerate { family, n, format } => enumerate(&enumerator, &family, n, format),
        Command::Count {
            family,
            n,
            format,
            parallel,
        } => {
            let enumerator = enumerator.with_threads(parallel);
            let set = pattern_set(&family)?;
            // Check the whole range before printing anything.
            enumerator.check(n.end)?;
            let rows = (n.start..=n.end)
                .map(|n| {
                    Ok(CountRow {
                        n,
                        count: enumerator.count_avoiders(family.kind, &set, n)?,
                    })
                })
                .collect::<Result<Vec<_>, dumont_core::Error>>()?;
            match format {
                Format::Plain => rows.iter().for_each(|r| println!("{} {}", r.n, r.count)),
                Format::Json => println!("{}", json(&rows)),
                Format::Csv => {
                    println!("n,count");
                    rows.iter().for_each(|r| println!("{},{}", r.n, r.count));
                }
            }
            Ok(status::OK)
        }
        Command::Verify {
            theorem,
            n_max,
            format,
            parallel,
        } => verify(&enumerator.with_threads(parallel), &theorem, n_max, format),
        Command::Sequence { id, terms, format } => sequence(&id, terms, format),
        Command::Bijection {
            name,
            inverse,
            perm,
            path,
            composition,
            format,
        } => bijection(name, inverse, perm, path, composition, format),
        Command::Wilf {
            kind,
            length,
            n_max,
            format,
        } => {
            let table = wilf_classes(&enumerator, kind, length, n_max)?;
            match format {
                Format::Plain => {
                    for class in &table.classes {
                        let fp: Vec<String> =
                            class.fingerprint.iter().map(u64::to_string).collect();
                        let members: Vec<String> =
                            class.members.iter().map(|m| m.to_string()).collect();
                        println!("{}: {}", fp.join(","), members.join(" "));
                    }
                }
                Format::Json => println!("{}", table.to_json()),
                Format::Csv => {
                    println!("fingerprint,members");
                    for class in &table.classes {
                        let fp: Vec<String> =
                            class.fingerprint.iter().map(u64::to_string).collect();
                        let members: Vec<String> =
                            class.members.iter().map(|m| m.to_string()).collect();
                        println!("{},{}", fp.join(";"), members.join(";"));
                    }
                }
            }
            Ok(status::OK)
        }
    }
}

#[derive(Serialize)]
struct CountRow {
    n: usize,
    count: u64,
}

fn pattern_set(family: &FamilyArgs) -> Result<PatternSet, CliError> {
    let mut patterns: Vec<Permutation> = Vec::new();
    if let Some(text) = &family.avoid {
        patterns.extend(PatternSet::parse(text)?.iter().cloned());
    }
    if let Some(file) = &family.avoid_file {
        let text = fs::read_to_string(file)
            .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", file.display())))?;
        for line in text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
        {
            patterns.push(line.parse()?);
        }
    }
    Ok(PatternSet::new(patterns)?)
}

fn enumerate(
    enumerator: &Enumerator,
    family: &FamilyArgs,
    n: usize,
    format: Format,
) -> Result<u8, CliError> {
    let set = pattern_set(family)?;
    let members = enumerator.generate_avoiding(family.kind, &set, n)?;
    match format {
        Format::Plain => members.iter().for_each(|p| println!("{}", plain_perm(p))),
        Format::Json => println!("{}", json(&members)),
        Format::Csv => {
            println!("n,permutation");
            members.iter().for_each(|p| println!("{n},{p}"));
        }
    }
    Ok(status::OK)
}

fn verify(
    enumerator: &Enumerator,
    theorem: &str,
    n_max: Option<usize>,
    format: Format,
) -> Result<u8, CliError> {
    let all = theorem.eq_ignore_ascii_case("all");
    let reports: Vec<VerificationReport> = if all {
        verify_all(enumerator, n_max)?
    } else {
        let id: TheoremId = theorem.parse()?;
        vec![verify_theorem(
            enumerator,
            id,
            n_max.unwrap_or_else(|| id.default_n_max()),
        )?]
    };
    match format {
        Format::Json if all => println!("{}", json(&reports)),
        Format::Json => println!("{}", reports[0].to_json()),
        Format::Plain => {
            for r in &reports {
                let flag = if r.conjecture { " (conjecture)" } else { "" };
                println!(
                    "{}{}: {}",
                    r.theorem,
                    flag,
                    if r.overall { "PASS" } else { "FAIL" }
                );
                for row in &r.rows {
                    println!(
                        "  n={} observed={} expected={} {}",
                        row.n,
                        plain_value(&row.observed),
                        plain_value(&row.expected),
                        if row.pass { "ok" } else { "MISMATCH" }
                    );
                }
            }
        }
        Format::Csv => {
            println!(
                "{}n,observed,expected,pass",
                if all { "theorem," } else { "" }
            );
            for r in &reports {
                for row in &r.rows {
                    let prefix = if all {
                        format!("{},", r.theorem)
                    } else {
                        String::new()
                    };
                    println!(
                        "{prefix}{},{},{},{}",
                        row.n,
                        csv_value(&row.observed),
                        csv_value(&row.expected),
                        row.pass
                    );
                }
            }
        }
    }
    Ok(if reports.iter().all(|r| r.overall) {
        status::OK
    } else {
        status::VERIFICATION
    })
}

fn sequence(id: &str, terms: usize, format: Format) -> Result<u8, CliError> {
    if terms == 0 {
        return Err(CliError::Usage("--terms must be at least 1".into()));
    }
    let values: Vec<String> = match id.parse::<SequenceId>() {
        Ok(seq) => seq.terms(terms).iter().map(|v| v.to_string()).collect(),
        Err(_) if id.starts_with("gf-") => {
            let gf: GfId = id.parse()?;
            gf_coefficients(gf, terms)?
                .iter()
                .map(|c| {
                    if c.is_integer() {
                        c.to_integer().to_string()
                    } else {
                        format!("{}/{}", c.numer(), c.denom())
                    }
                })
                .collect()
        }
        Err(e) => return Err(e.into()),
    };
    match format {
        Format::Plain => values.iter().for_each(|v| println!("{v}")),
        Format::Json => println!("{}", json(&values)),
        Format::Csv => {
            println!("n,value");
            values
                .iter()
                .enumerate()
                .for_each(|(i, v)| println!("{i},{v}"));
        }
    }
    Ok(status::OK)
}

#[derive(Serialize)]
struct BijectionOutput {
    bijection: &'static str,
    inverse: bool,
    input: String,
    output: String,
}

fn required(value: Option<String>, flag: &str) -> Result<String, CliError> {
    value.ok_or_else(|| CliError::Usage(format!("{flag} is required here")))
}

fn bijection(
    name: BijectionName,
    inverse: bool,
    perm: Option<String>,
    path: Option<String>,
    composition: Option<String>,
    format: Format,
) -> Result<u8, CliError> {
    let (label, input, output) = match (name, inverse) {
        (BijectionName::D2_231Composition, false) => {
            let p: Permutation = required(perm, "--perm")?.parse()?;
            (
                "d2-231-composition",
                p.to_string(),
                d2_231_to_composition(&p)?.to_string(),
            )
        }
        (BijectionName::D2_231Composition, true) => {
            let c: WeakComposition = required(composition, "--composition")?.parse()?;
            (
                "d2-231-composition",
                c.to_string(),
                composition_to_d2_231(&c)?.to_string(),
            )
        }
        (BijectionName::D2_3142Dyck, false) => {
            let p: Permutation = required(perm, "--perm")?.parse()?;
            (
                "d2-3142-dyck",
                p.to_string(),
                d2_3142_to_dyck(&p)?.to_string(),
            )
        }
        (BijectionName::D2_3142Dyck, true) => {
            let d: DyckPath = required(path, "--path")?.parse()?;
            (
                "d2-3142-dyck",
                d.to_string(),
                plain_perm(&dyck_to_d2_3142(&d)?),
            )
        }
    };
    match format {
        Format::Plain => println!("{output}"),
        Format::Json => println!(
            "{}",
            json(&BijectionOutput {
                bijection: label,
                inverse,
                input,
                output,
            })
        ),
        Format::Csv => {
            println!("input,output");
            println!("{input},{output}");
        }
    }
    Ok(status::OK)
}
