use std::fmt::Write as _;
use std::fs;

use serde::Serialize;

use taulab_core::classify::{
    classify_family, classify_shifted, classify_staircase, cross_check, tau_finiteness_via_tits, RepTypeStatus,
    RepTypeVerdict, SimplyConnected,
};
use taulab_core::tau::{enumerate_pairs, verify_recurrences, CountsCache, EnumOptions, Series};
use taulab_core::tits::DEFAULT_SEARCH_CAP;
use taulab_core::{textfmt, tits_form, BoundQuiverAlgebra, Family, Fp, Partition, RepContext, ShiftedPartition};

use crate::cache::Cache;
use crate::{Cli, Command, Failure, Format, Source};

/// Largest vertex count for which `--cross-check` also enumerates.
const CROSS_CHECK_VERTICES: usize = 9;

pub enum Kind {
    Family(Family),
    Staircase(Partition),
    Shifted(ShiftedPartition),
    Quiver,
}

pub struct Loaded {
    pub name: String,
    pub kind: Kind,
    pub algebra: BoundQuiverAlgebra,
}

fn load(src: &Source) -> Result<Loaded, Failure> {
    if let Some(s) = &src.family {
        let fam: Family = s.parse()?;
        return Ok(Loaded { name: fam.to_string(), algebra: fam.build()?, kind: Kind::Family(fam) });
    }
    if let Some(s) = &src.staircase {
        let p: Partition = s.parse()?;
        let algebra = taulab_core::staircase(&p)?;
        return Ok(Loaded { name: format!("staircase {p}"), algebra, kind: Kind::Staircase(p) });
    }
    if let Some(s) = &src.shifted {
        let p: ShiftedPartition = s.parse()?;
        let algebra = taulab_core::shifted_staircase(&p)?;
        return Ok(Loaded { name: format!("shifted {p}"), algebra, kind: Kind::Shifted(p) });
    }
    let path = src.quiver.as_ref().ok_or_else(|| Failure::invalid("no algebra source given"))?;
    let text = fs::read_to_string(path).map_err(|e| Failure::invalid(format!("{}: {e}", path.display())))?;
    Ok(Loaded { name: path.display().to_string(), algebra: textfmt::parse(&text)?, kind: Kind::Quiver })
}

/// Standard output and exit code of a finished command.
pub struct Outcome {
    pub stdout: String,
    pub code: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, code: 0 }
    }
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

fn plural(n: usize, one: &str, many: &str) -> String {
    format!("{n} {}", if n == 1 { one } else { many })
}

pub fn run(cli: &Cli) -> Result<Outcome, Failure> {
    if Fp::new(cli.prime).is_none() {
        return Err(Failure::invalid(format!("{} is not an odd prime", cli.prime)));
    }
    if cli.cap == 0 {
        return Err(Failure::invalid("cap must be at least 1"));
    }
    match &cli.command {
        Command::Construct { source, emit_quiver } => {
            let l = load(source)?;
            if let Some(path) = emit_quiver {
                fs::write(path, textfmt::emit(&l.algebra))
                    .map_err(|e| Failure::invalid(format!("{}: {e}", path.display())))?;
            }
            Ok(Outcome::ok(construct(&l, cli.format)))
        }
        Command::Tits { source, eval, bound } => tits(&load(source)?, eval.as_deref(), *bound, cli.format),
        Command::Enumerate { source, verify_recursions } => enumerate(cli, &load(source)?, *verify_recursions),
        Command::Classify { source, cross_check } => classify(cli, &load(source)?, *cross_check),
    }
}

#[derive(Serialize)]
struct ArrowJson<'a> {
    name: &'a str,
    source: &'a str,
    target: &'a str,
}

#[derive(Serialize)]
struct ConstructJson<'a> {
    name: &'a str,
    vertices: &'a [String],
    arrows: Vec<ArrowJson<'a>>,
    relations: Vec<String>,
    dimension: usize,
}

fn construct(l: &Loaded, format: Format) -> String {
    let a = &l.algebra;
    let q = a.quiver();
    let relations = a.render_relations();
    if format == Format::Json {
        let arrows = q
            .arrows()
            .iter()
            .map(|ar| ArrowJson { name: &ar.name, source: q.label(ar.src), target: q.label(ar.dst) })
            .collect();
        return json(&ConstructJson {
            name: &l.name,
            vertices: q.labels(),
            arrows,
            relations,
            dimension: a.dimension(),
        });
    }
    let mut out = String::new();
    writeln!(out, "{}", l.name).unwrap();
    writeln!(
        out,
        "{}, {}, {}",
        plural(q.n(), "vertex", "vertices"),
        plural(q.arrows().len(), "arrow", "arrows"),
        plural(relations.len(), "relation", "relations")
    )
    .unwrap();
    writeln!(out, "dimension {}", a.dimension()).unwrap();
    writeln!(out, "vertices: {}", q.labels().join(" ")).unwrap();
    for ar in q.arrows() {
        writeln!(out, "arrow {}: {} -> {}", ar.name, q.label(ar.src), q.label(ar.dst)).unwrap();
    }
    for r in relations {
        writeln!(out, "relation {r}").unwrap();
    }
    out
}

#[derive(Serialize)]
struct TitsJson<'a> {
    vertices: &'a [String],
    doubled_gram: &'a [Vec<i64>],
    #[serde(skip_serializing_if = "Option::is_none")]
    eval: Option<(Vec<i64>, i64)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    verdict: Option<taulab_core::PositivityVerdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    negative_vector: Option<Vec<i64>>,
}

fn parse_vector(s: &str) -> Result<Vec<i64>, Failure> {
    s.split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|_| Failure::invalid(format!("bad vector entry `{t}`"))))
        .collect()
}

fn tits(l: &Loaded, eval: Option<&str>, bound: u32, format: Format) -> Result<Outcome, Failure> {
    let q = tits_form(&l.algebra);
    let labels = l.algebra.quiver().labels();
    let mut report =
        TitsJson { vertices: labels, doubled_gram: q.doubled_gram(), eval: None, verdict: None, negative_vector: None };
    if let Some(s) = eval {
        let v = parse_vector(s)?;
        let value = q.evaluate(&v)?;
        report.eval = Some((v, value));
    } else {
        let verdict = q.weak_positivity(bound, DEFAULT_SEARCH_CAP)?;
        if !verdict.is_weakly_positive() {
            report.negative_vector = q.find_negative_vector(bound, taulab_core::tits::DEFAULT_NODE_BUDGET)?;
        }
        report.verdict = Some(verdict);
    }
    if format == Format::Json {
        return Ok(Outcome::ok(json(&report)));
    }
    let mut out = String::new();
    if let Some((_, value)) = &report.eval {
        writeln!(out, "q = {value}").unwrap();
        return Ok(Outcome::ok(out));
    }
    writeln!(out, "vertices: {}", labels.join(" ")).unwrap();
    writeln!(out, "doubled Gram matrix:").unwrap();
    for row in q.doubled_gram() {
        writeln!(out, "{}", row.iter().map(|x| format!("{x:>3}")).collect::<String>()).unwrap();
    }
    let verdict = report.verdict.as_ref().expect("verdict computed");
    match &verdict.certificate {
        None => writeln!(out, "weakly_positive (bound {bound})").unwrap(),
        Some(c) => writeln!(out, "not_weakly_positive: q({c:?}) = {}", verdict.value.unwrap_or_default()).unwrap(),
    }
    if !verdict.is_weakly_positive() {
        match &report.negative_vector {
            Some(v) => writeln!(out, "negative vector: q({v:?}) = {}", q.evaluate(v)?).unwrap(),
            None => writeln!(out, "no negative vector found (bound {bound})").unwrap(),
        }
    }
    Ok(Outcome::ok(out))
}

fn series_of(kind: &Kind) -> Option<(Series, usize)> {
    match kind {
        Kind::Family(Family::LinearA { n }) => Some((Series::LinearA, *n)),
        Kind::Family(Family::A1 { n }) => Some((Series::A1, *n)),
        Kind::Family(Family::D { n }) => Some((Series::D, *n)),
        Kind::Family(Family::Lambda { n }) => Some((Series::Lambda, *n)),
        _ => None,
    }
}

#[derive(Serialize)]
struct EnumerateJson<'a> {
    name: &'a str,
    counts: &'a taulab_core::CountsTable,
    row: String,
    diagram: &'a taulab_core::HasseDiagram,
    #[serde(skip_serializing_if = "Option::is_none")]
    recursions: Option<taulab_core::tau::RecurrenceReport>,
}

fn enumerate(cli: &Cli, l: &Loaded, verify: bool) -> Result<Outcome, Failure> {
    let series =
        if verify {
            Some(series_of(&l.kind).ok_or_else(|| {
                Failure::invalid("--verify-recursions needs one of the families linear_a, a1, d, lambda")
            })?)
        } else {
            None
        };
    let cache = cli.cache_dir.as_deref().map(Cache::new);
    let format = format!("{:?}", cli.format);
    let (prime, cap) = (cli.prime.to_string(), cli.cap.to_string());
    let key =
        Cache::key(&["enumerate", &textfmt::emit(&l.algebra), &l.name, &prime, &cap, &format, &verify.to_string()]);
    if let Some(hit) = cache.as_ref().and_then(|c| c.get(&key)) {
        eprintln!("cache hit {key}");
        return Ok(Outcome::ok(hit));
    }
    let opts = EnumOptions { node_cap: cli.cap, prime: cli.prime, ..EnumOptions::default() };
    let ctx = RepContext::new(l.algebra.clone(), cli.prime)?;
    eprintln!("enumerating {} over F_{}", l.name, cli.prime);
    let e = enumerate_pairs(ctx, opts)?;
    let report = match series {
        Some((s, n)) => {
            let mut cache = CountsCache::new(opts);
            Some(verify_recurrences(s, n, &mut cache)?)
        }
        None => None,
    };
    let out = if cli.format == Format::Json {
        json(&EnumerateJson {
            name: &l.name,
            counts: &e.counts,
            row: e.counts.row(),
            diagram: &e.diagram,
            recursions: report.clone(),
        })
    } else {
        let mut out = String::new();
        writeln!(out, "a_s for {}, s = 0..{}", l.name, e.counts.rank()).unwrap();
        writeln!(out, "{}", e.counts.row()).unwrap();
        if let Some(r) = &report {
            writeln!(out, "{}", r.render()).unwrap();
            let failed = r.checks.iter().filter(|c| !c.holds()).count();
            writeln!(out, "{} of {} identities hold", r.checks.len() - failed, r.checks.len()).unwrap();
        }
        out
    };
    if let Some(r) = &report {
        if !r.all_hold() {
            return Ok(Outcome { stdout: out, code: 4 });
        }
    }
    if let Some(c) = &cache {
        c.put(&key, &out);
    }
    Ok(Outcome::ok(out))
}

fn list_verdict(l: &Loaded) -> Result<Option<RepTypeVerdict>, Failure> {
    Ok(match &l.kind {
        Kind::Family(f) => Some(classify_family(*f)?),
        Kind::Staircase(p) => Some(classify_staircase(p)),
        Kind::Shifted(p) => Some(classify_shifted(p)),
        Kind::Quiver => None,
    })
}

fn render_verdict(v: &RepTypeVerdict, out: &mut String) {
    writeln!(out, "{}", v.summary()).unwrap();
    for e in &v.evidence {
        writeln!(out, "  {}: {}", e.rule, e.detail).unwrap();
        if let (Some(c), Some(val)) = (&e.certificate, e.value) {
            writeln!(out, "    certificate {c:?}, q = {val}").unwrap();
        }
    }
}

fn classify(cli: &Cli, l: &Loaded, cross: bool) -> Result<Outcome, Failure> {
    let verdict = match list_verdict(l)? {
        Some(v) => v,
        None => tau_finiteness_via_tits(&l.algebra, &SimplyConnected::Separation)?,
    };
    let inconclusive = verdict.status == RepTypeStatus::Inconclusive;
    if !cross {
        let out = if cli.format == Format::Json {
            json(&verdict)
        } else {
            let mut s = String::new();
            render_verdict(&verdict, &mut s);
            s
        };
        return Ok(Outcome { stdout: out, code: if inconclusive { 3 } else { 0 } });
    }
    let c = cross_check(&l.algebra, verdict, CROSS_CHECK_VERTICES, cli.cap)?;
    let out = if cli.format == Format::Json {
        json(&c)
    } else {
        let mut s = String::new();
        render_verdict(&c.list, &mut s);
        write!(s, "Tits: ").unwrap();
        render_verdict(&c.tits, &mut s);
        if let Some(t) = &c.counts {
            writeln!(s, "enumeration: {}", t.row()).unwrap();
        }
        writeln!(s, "agree: {}", if c.agree { "yes" } else { "no" }).unwrap();
        s
    };
    let code = if !c.agree {
        4
    } else if inconclusive {
        3
    } else {
        0
    };
    Ok(Outcome { stdout: out, code })
}
