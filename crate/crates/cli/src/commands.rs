use std::error::Error;
use std::fs;
use std::path::Path;

use locc_core::protocol::{format_ket, ProtocolReport};
use locc_core::semiclassical::{curve_csv, format_significant, parse_qc};
use locc_core::state::{to_json, PopsDocument, BUILTIN_NAMES};
use locc_core::{
    builtin, distinguish, ensemble_nc, nc_curve, parse_pops, qc_nc, random_complete_pops, render_protocol,
    rho_x_family, theorem1_class, theorem2_bruteforce, weighted_nc, EnsembleClass, NcReport, Pops, Side,
    WeightedEnsemble,
};
use serde::Serialize;

use crate::{
    AnalyzeArgs, CurveArgs, ExamplesArgs, Format, OracleArgs, QuantumnessArgs, SideArg, Source, EXIT_DISAGREEMENT,
    EXIT_DISTINGUISHABLE, EXIT_INDISTINGUISHABLE,
};

type CmdResult = Result<u8, Box<dyn Error>>;

fn emit(out: Option<&Path>, body: &str) -> Result<(), Box<dyn Error>> {
    let mut body = body.to_string();
    if !body.ends_with('\n') {
        body.push('\n');
    }
    match out {
        Some(path) => fs::write(path, body).map_err(|e| format!("cannot write {}: {e}", path.display()))?,
        None => print!("{body}"),
    }
    Ok(())
}

fn read(path: &Path) -> Result<String, Box<dyn Error>> {
    Ok(fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?)
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report serializes")
}

/// Resolves the set named by `--builtin`, `--input` or `--random`, with a display name.
fn load_set(src: &Source, tol: f64) -> Result<Option<(String, Pops)>, Box<dyn Error>> {
    if let Some(name) = &src.builtin {
        return Ok(Some((name.clone(), builtin(name)?)));
    }
    if let Some(path) = &src.input {
        return Ok(Some((path.display().to_string(), parse_pops(&read(path)?, tol)?)));
    }
    if let Some((m, n)) = src.random {
        let depth = src.gen.depth.unwrap_or(m * n);
        let name = format!("random {m}x{n} seed {} depth {depth}", src.gen.seed);
        return Ok(Some((name, random_complete_pops(m, n, src.gen.seed, depth))));
    }
    Ok(None)
}

#[derive(Serialize)]
struct AnalyzeReport<'a> {
    source: &'a str,
    tol: f64,
    class: EnsembleClass,
    class_guarantees_distinguishable: bool,
    #[serde(flatten)]
    protocol: &'a ProtocolReport,
}

pub fn analyze(args: &AnalyzeArgs) -> CmdResult {
    let tol = args.common.tol;
    let (name, set) = load_set(&args.source, tol)?.ok_or("analyze needs --builtin, --input or --random")?;
    let (class, guaranteed) = theorem1_class(&set, tol);
    let (tree, verdict) = distinguish(&set, tol, args.max_rounds)?;
    let report = render_protocol(&tree);
    let body = match args.common.format {
        Format::Json => json(&AnalyzeReport {
            source: &name,
            tol,
            class,
            class_guarantees_distinguishable: guaranteed,
            protocol: &report,
        }),
        Format::Text => {
            let note = if guaranteed { "distinguishable by class alone" } else { "class alone is inconclusive" };
            format!("source: {name}\nclass: {} ({note})\n{}", class.short_name(), report.to_text())
        }
    };
    emit(args.common.out.as_deref(), &body)?;
    Ok(if verdict.distinguishable { EXIT_DISTINGUISHABLE } else { EXIT_INDISTINGUISHABLE })
}

#[derive(Serialize)]
struct PairTerm<'a> {
    i: &'a str,
    j: &'a str,
    value: f64,
}

#[derive(Serialize)]
struct QuantumnessReport<'a> {
    source: &'a str,
    ensemble: &'a str,
    members: &'a [String],
    total: f64,
    pairs: Vec<PairTerm<'a>>,
}

enum Loaded {
    Set(String, Pops),
    Qc(String, locc_core::Qc),
}

fn load_quantumness_input(args: &QuantumnessArgs, tol: f64) -> Result<Loaded, Box<dyn Error>> {
    if let Some(x) = args.rho_x {
        return Ok(Loaded::Qc(format!("rho_x at x = {x}"), rho_x_family(x)?));
    }
    if let Some(path) = &args.source.input {
        let text = read(path)?;
        let value: serde_json::Value = serde_json::from_str(&text).map_err(locc_core::Error::from)?;
        if value.get("blocks").is_some() {
            return Ok(Loaded::Qc(path.display().to_string(), parse_qc(&text, tol)?));
        }
        return Ok(Loaded::Set(path.display().to_string(), parse_pops(&text, tol)?));
    }
    let (name, set) =
        load_set(&args.source, tol)?.ok_or("quantumness needs --builtin, --input, --random or --rho-x")?;
    Ok(Loaded::Set(name, set))
}

pub fn quantumness(args: &QuantumnessArgs) -> CmdResult {
    let tol = args.common.tol;
    let (source, kind, members, report): (String, String, Vec<String>, NcReport<f64>) =
        match load_quantumness_input(args, tol)? {
            Loaded::Qc(name, state) => {
                if args.indices.is_some() || args.weighted {
                    return Err("--indices and --weighted apply to state sets, not semi-classical states".into());
                }
                let members = (0..state.blocks().len()).map(|i| format!("X{i}")).collect();
                (name, "semi_classical".into(), members, qc_nc(&state, tol)?)
            }
            Loaded::Set(name, set) => {
                let side = match args.side {
                    SideArg::A => Side::A,
                    SideArg::B => Side::B,
                };
                let indices: Vec<usize> = args.indices.clone().unwrap_or_else(|| (0..set.len()).collect());
                if let Some(&bad) = indices.iter().find(|&&i| i >= set.len()) {
                    return Err(format!("index {bad} out of range for {} members", set.len()).into());
                }
                let members: Vec<String> = indices.iter().map(|&i| set.states()[i].label.clone()).collect();
                let parts = set.side_subset(side, &indices);
                let report = if args.weighted {
                    let items = indices
                        .iter()
                        .zip(&parts)
                        .map(|(&i, s)| {
                            let p = set.states()[i].p.ok_or_else(|| format!("member {i} has no weight p"))?;
                            Ok((p, s.projector()))
                        })
                        .collect::<Result<Vec<_>, String>>()?;
                    weighted_nc(&WeightedEnsemble::new(items, tol)?, tol)?
                } else {
                    ensemble_nc(&parts.iter().map(|s| s.projector()).collect::<Vec<_>>(), tol)?
                };
                let kind = if args.weighted { "weighted" } else { "projectors" };
                (format!("{name}, side {side}"), kind.into(), members, report)
            }
        };
    let pairs: Vec<PairTerm> =
        report.pair_terms.iter().map(|(&(i, j), &value)| PairTerm { i: &members[i], j: &members[j], value }).collect();
    let body = match args.common.format {
        Format::Json => {
            json(&QuantumnessReport { source: &source, ensemble: &kind, members: &members, total: report.total, pairs })
        }
        Format::Text => {
            let mut s = format!("source: {source}\nN = {}\n", format_significant(report.total, 12));
            for p in &pairs {
                s.push_str(&format!("  |[{}, {}]| = {}\n", p.i, p.j, format_significant(p.value, 12)));
            }
            s
        }
    };
    emit(args.common.out.as_deref(), &body)?;
    Ok(0)
}

pub fn curve(args: &CurveArgs) -> CmdResult {
    let rows = nc_curve(args.samples, args.tol)?;
    emit(args.out.as_deref(), &curve_csv(&rows))?;
    Ok(0)
}

#[derive(Serialize)]
struct OracleItem {
    name: String,
    dims: [usize; 2],
    procedure_distinguishable: bool,
    oracle_distinguishable: bool,
    agree: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<Vec<usize>>,
}

#[derive(Serialize)]
struct OracleReport {
    tol: f64,
    items: Vec<OracleItem>,
    agreements: usize,
    disagreements: usize,
    indistinguishable: usize,
}

pub fn oracle(args: &OracleArgs) -> CmdResult {
    let tol = args.common.tol;
    let sets: Vec<(String, Pops)> = match args.source.random {
        Some((m, n)) => (0..args.count as u64)
            .map(|k| {
                let seed = args.source.gen.seed.wrapping_add(k);
                let depth = args.source.gen.depth.unwrap_or(m * n);
                (format!("random {m}x{n} seed {seed} depth {depth}"), random_complete_pops(m, n, seed, depth))
            })
            .collect(),
        None => match load_set(&args.source, tol)? {
            Some(one) => vec![one],
            None => BUILTIN_NAMES
                .iter()
                .map(|&n| Ok((n.to_string(), builtin(n)?)))
                .collect::<Result<_, locc_core::Error>>()?,
        },
    };
    let mut items = Vec::with_capacity(sets.len());
    for (name, set) in sets {
        let (_, verdict) = distinguish(&set, tol, None)?;
        let (indist, witness) = theorem2_bruteforce(&set, args.max_states, tol)?;
        let (m, n) = set.dims();
        items.push(OracleItem {
            name,
            dims: [m, n],
            procedure_distinguishable: verdict.distinguishable,
            oracle_distinguishable: !indist,
            agree: verdict.distinguishable != indist,
            witness,
        });
    }
    let agreements = items.iter().filter(|i| i.agree).count();
    let report = OracleReport {
        tol,
        disagreements: items.len() - agreements,
        agreements,
        indistinguishable: items.iter().filter(|i| !i.oracle_distinguishable).count(),
        items,
    };
    let body = match args.common.format {
        Format::Json => json(&report),
        Format::Text => {
            let word = |d: bool| if d { "distinguishable" } else { "indistinguishable" };
            let mut s = String::new();
            for i in &report.items {
                let tag = if i.agree { "agree" } else { "DISAGREE" };
                s.push_str(&format!(
                    "{}: procedure {}, oracle {} [{tag}]\n",
                    i.name,
                    word(i.procedure_distinguishable),
                    word(i.oracle_distinguishable)
                ));
            }
            s.push_str(&format!(
                "{} sets, {} agreements, {} disagreements, {} indistinguishable\n",
                report.items.len(),
                report.agreements,
                report.disagreements,
                report.indistinguishable
            ));
            s
        }
    };
    emit(args.common.out.as_deref(), &body)?;
    Ok(if report.disagreements == 0 { 0 } else { EXIT_DISAGREEMENT })
}

#[derive(Serialize)]
struct NamedDocument {
    name: &'static str,
    set: PopsDocument,
}

pub fn examples(args: &ExamplesArgs) -> CmdResult {
    let body = match (&args.builtin, args.format) {
        (Some(name), Format::Json) => to_json(&builtin::<f64>(name)?),
        (Some(name), Format::Text) => {
            let set: Pops = builtin(name)?;
            let (m, n) = set.dims();
            let mut s = format!("{name}: {} states in {m}x{n}\n", set.len());
            for st in set.states() {
                s.push_str(&format!(
                    "{}: ({}) (x) ({})\n",
                    st.label,
                    format_ket(st.a.vector()),
                    format_ket(st.b.vector())
                ));
            }
            s
        }
        (None, Format::Json) => {
            let docs = BUILTIN_NAMES
                .iter()
                .map(|&name| Ok(NamedDocument { name, set: PopsDocument::from_set(&builtin::<f64>(name)?) }))
                .collect::<Result<Vec<_>, locc_core::Error>>()?;
            json(&docs)
        }
        (None, Format::Text) => BUILTIN_NAMES.join("\n"),
    };
    emit(args.out.as_deref(), &body)?;
    Ok(0)
}
