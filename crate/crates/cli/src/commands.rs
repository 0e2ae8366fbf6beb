use std::fs;
use std::path::Path;

use serde_json::{json, Value};

use sympow_core::charp::tc_nonmembership_probe;
use sympow_core::harness::{
    gen_family, kr_example_in, run_instance, FamilyParams, InstanceFile, KrParams, Report, Status,
};
use sympow_core::symbolic::{symbolic_member, symbolic_order, AssertedPrime};
use sympow_core::{Error, GroebnerBasis, Ideal, Limits, Polynomial, Result, Ring};

use crate::{Cli, Command, Global};

pub struct Output {
    pub text: String,
    pub code: u8,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, code: 0 }
    }
}

pub fn error_code(e: &Error) -> u8 {
    if e.is_cap() {
        4
    } else {
        1
    }
}

fn limits(g: &Global) -> Limits {
    let mut l = Limits::default();
    if let Some(d) = g.cap_degree {
        l.max_degree = d;
    }
    if let Some(b) = g.cap_basis {
        l.max_basis = b;
    }
    l
}

fn ring(g: &Global) -> Result<Ring> {
    let text = g
        .ring
        .as_deref()
        .ok_or_else(|| Error::usage("this command needs --ring"))?;
    Ok(Ring::parse_inline(text)?.with_limits(limits(g)))
}

fn ideal(ring: &Ring, text: &str) -> Result<Ideal> {
    Ideal::new(ring, ring.parse_list(text)?)
}

fn strings(polys: &[Polynomial]) -> Vec<String> {
    polys.iter().map(|p| p.to_string()).collect()
}

fn lines(polys: &[Polynomial]) -> String {
    polys.iter().map(|p| format!("{p}\n")).collect()
}

/// Plain text, or with `--json` a VERIFIED report carrying `quantities`.
fn answer(g: &Global, text: String, quantities: Value, report: impl FnOnce(&mut Report)) -> Output {
    if !g.json {
        return Output::ok(text);
    }
    let mut r = Report::new(Status::Verified);
    r.seed = Some(g.seed);
    if let Value::Object(map) = quantities {
        r.quantities.extend(map);
    }
    report(&mut r);
    Output::ok(format!("{}\n", r.to_json()))
}

fn report_output(g: &Global, r: &Report) -> Output {
    let text = if g.json {
        format!("{}\n", r.to_json())
    } else {
        format!("{r}\n")
    };
    Output {
        text,
        code: r.status.exit_code() as u8,
    }
}

/// Worst exit code over a batch: counterexamples dominate, then
/// precondition failures and vacuous checks.
fn batch_code(reports: &[Report]) -> u8 {
    let has = |s: &[Status]| reports.iter().any(|r| s.contains(&r.status));
    if has(&[Status::Counterexample]) {
        2
    } else if has(&[Status::PreconditionFailed, Status::Vacuous]) {
        3
    } else {
        0
    }
}

fn batch_output(g: &Global, labels: &[String], reports: &[Report]) -> Output {
    let text = if g.json {
        let arr: Vec<Value> = reports
            .iter()
            .map(|r| serde_json::to_value(r).expect("reports serialize"))
            .collect();
        format!("{}\n", serde_json::to_string_pretty(&arr).expect("json"))
    } else {
        labels
            .iter()
            .zip(reports)
            .map(|(l, r)| format!("== {l}\n{r}\n"))
            .collect()
    };
    Output {
        text,
        code: batch_code(reports),
    }
}

fn check_file(g: &Global, path: &Path) -> Result<Report> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::usage(format!("cannot read {}: {e}", path.display())))?;
    let file = InstanceFile::from_json(&text)?;
    let ring = file.to_ring()?.with_limits(limits(g));
    run_instance(&file.to_instance_in(&ring)?)
}

pub fn run(cli: &Cli) -> Result<Output> {
    let g = &cli.global;
    match &cli.command {
        Command::Gb { gens } => {
            let r = ring(g)?;
            let gb = GroebnerBasis::compute(&r, &r.parse_list(gens)?, g.order)?;
            let basis = gb.generators();
            Ok(answer(
                g,
                lines(basis),
                json!({ "basis": strings(basis), "order": g.order.to_string() }),
                |_| {},
            ))
        }
        Command::Member { f, gens } => {
            let r = ring(g)?;
            let yes = ideal(&r, gens)?.contains(&r.parse(f)?)?;
            Ok(answer(g, format!("{yes}\n"), json!({ "member": yes }), |_| {}))
        }
        Command::Dim { gens } => {
            let r = ring(g)?;
            let d = ideal(&r, gens)?.krull_dim()?;
            Ok(answer(g, format!("{d}\n"), json!({ "dim": d }), |_| {}))
        }
        Command::Intersect { i, j } => {
            let r = ring(g)?;
            let out = ideal(&r, i)?.intersect(&ideal(&r, j)?)?;
            let gens = out.basis()?.generators().to_vec();
            Ok(answer(g, lines(&gens), json!({ "generators": strings(&gens) }), |_| {}))
        }
        Command::Saturate { gens, f } => {
            let r = ring(g)?;
            let out = ideal(&r, gens)?.saturate(&r.parse(f)?)?;
            let gens = out.basis()?.generators().to_vec();
            Ok(answer(g, lines(&gens), json!({ "generators": strings(&gens) }), |_| {}))
        }
        Command::Symorder { p, f, cap } => {
            let r = ring(g)?;
            let prime = AssertedPrime::new(ideal(&r, p)?)?;
            let cap = cap.unwrap_or(r.limits().max_order as u32);
            let k = symbolic_order(&r.parse(f)?, &prime, cap)?;
            Ok(answer(g, format!("{k}\n"), json!({ "symbolic_order": k }), |rep| {
                rep.assume(format!("{} is prime (asserted, not verified)", prime.ideal()));
            }))
        }
        Command::SympowMember { p, f, m } => {
            let r = ring(g)?;
            let prime = AssertedPrime::new(ideal(&r, p)?)?;
            let res = symbolic_member(&r.parse(f)?, &prime, *m)?;
            let mut text = format!("{}\n", res.verdict);
            if let Some(w) = &res.witness {
                text.push_str(&format!("witness: {w}\n"));
            }
            Ok(answer(g, text, json!({ "member": res.verdict, "m": m }), |rep| {
                if let Some(w) = &res.witness {
                    rep.witness("symbolic_witness", w);
                }
                rep.assume(format!("{} is prime (asserted, not verified)", prime.ideal()));
            }))
        }
        Command::Check { path } => {
            if path.is_dir() {
                let mut files: Vec<_> = fs::read_dir(path)
                    .map_err(|e| Error::usage(format!("cannot read {}: {e}", path.display())))?
                    .filter_map(|e| e.ok().map(|e| e.path()))
                    .filter(|p| p.extension().is_some_and(|x| x == "json"))
                    .collect();
                files.sort();
                let mut reports = Vec::with_capacity(files.len());
                for f in &files {
                    reports.push(check_file(g, f)?);
                }
                let labels: Vec<String> = files.iter().map(|f| f.display().to_string()).collect();
                Ok(batch_output(g, &labels, &reports))
            } else {
                Ok(report_output(g, &check_file(g, path)?))
            }
        }
        Command::KrExample { s, q, characteristic } => {
            let params = KrParams::new(*s, *q)?;
            if *characteristic == 0 {
                return Err(Error::usage("the example needs a prime characteristic"));
            }
            let r = params.ring(*characteristic)?.with_limits(limits(g));
            Ok(report_output(g, &kr_example_in(&r, params)?))
        }
        Command::ProbeTc { z, ideal: gens, c, e } => {
            let r = ring(g)?;
            let probe = tc_nonmembership_probe(&r.parse(z)?, &ideal(&r, gens)?, &r.parse(c)?, *e)?;
            let value = serde_json::to_value(&probe.result).expect("probe serializes");
            let text = match &probe.normal_form {
                Some(nf) => format!(
                    "not in tight closure (fails at e = {})\ncertificate: {nf}\nassuming: {}\n",
                    value["failing_e"], probe.assumption
                ),
                None => format!("consistent up to e = {e}\nassuming: {}\n", probe.assumption),
            };
            Ok(answer(g, text, json!({ "tc_probe": value, "e_max": e }), |rep| {
                if let Some(nf) = &probe.normal_form {
                    rep.witness("tc_certificate", nf);
                }
                rep.assume(probe.assumption.clone());
            }))
        }
        Command::Family {
            name,
            count,
            nvars,
            split,
            m,
            n,
            characteristic,
            s,
            q,
            run,
            out,
        } => {
            let params = FamilyParams {
                count: *count,
                nvars: *nvars,
                split: *split,
                m: *m,
                n: *n,
                characteristic: *characteristic,
                s: *s,
                q: *q,
                seed: g.seed,
            };
            let instances = gen_family(name, &params)?;
            let files: Vec<InstanceFile> = instances.iter().map(|i| i.to_file()).collect();
            if let Some(dir) = out {
                fs::create_dir_all(dir)
                    .map_err(|e| Error::usage(format!("cannot create {}: {e}", dir.display())))?;
                for (k, f) in files.iter().enumerate() {
                    let path = dir.join(format!("{name}-{k:04}.json"));
                    fs::write(&path, format!("{}\n", f.to_json()))
                        .map_err(|e| Error::usage(format!("cannot write {}: {e}", path.display())))?;
                }
            }
            if *run {
                let mut reports = Vec::with_capacity(instances.len());
                for inst in &instances {
                    let r = inst.ring.with_limits(limits(g));
                    reports.push(run_instance(&files_instance(inst, &r)?)?);
                }
                let labels: Vec<String> = (0..reports.len()).map(|k| format!("{name} #{k}")).collect();
                return Ok(batch_output(g, &labels, &reports));
            }
            let text = if g.json {
                format!("{}\n", serde_json::to_string_pretty(&files).expect("json"))
            } else {
                files.iter().map(|f| format!("{}\n", f.to_json())).collect()
            };
            Ok(Output::ok(text))
        }
    }
}

/// Rebuilds an instance in a ring carrying the command-line limits.
fn files_instance(
    inst: &sympow_core::harness::ConjectureInstance,
    ring: &Ring,
) -> Result<sympow_core::harness::ConjectureInstance> {
    inst.to_file().to_instance_in(ring)
}
