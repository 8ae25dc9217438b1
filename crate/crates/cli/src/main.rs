use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use pickylab::chartab::{ctx_write, dixon_schneider, p_blocks, verify_table, CharacterTable};
use pickylab::evseev::{check_self_normalizing_decomposition, irc_report, IrcVariant};
use pickylab::families::{crosscheck, family_group, family_verify, oracle, oracle_text, Family};
use pickylab::locality::{
    block_vanishing_verify, casolo_verify, lambda_count, picky_reps, subnormalizer,
    subnormalizer_routes_verify, value_field_verify,
};
use pickylab::matchcheck::{
    check_eaton_moreto, check_field_over_set, check_hall, check_hall_fixture, check_mixed,
    check_picky_with, check_ppart_multiset, check_sections, check_subnormalizer, picky_context,
    PickyMode, SectionMode,
};
use pickylab::permgroup::{Perm, PermGroup};
use pickylab::report::CheckReport;
use pickylab::{Error, Result};

mod cache;
mod output;
mod spec;

use cache::{CacheStatus, TableStore};
use output::{expected, print_text, report_json, Outcome};
use spec::{GroupSpec, Resolved};

const DEFAULT_SEED: u64 = 0;

#[derive(Parser)]
#[command(
    name = "pickylab",
    version,
    about = "Character tables and local-global checks at picky elements"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// sym:n, alt:n, dihedral:n, cyclic:n, psl2:q, file:<path.gens> or ctx:<path>
    #[arg(long)]
    group: Option<String>,
    #[arg(long)]
    prime: Option<u64>,
    /// Class label, e.g. 4a
    #[arg(long = "class")]
    class: Option<String>,
    /// Write the JSON report here
    #[arg(long)]
    json: Option<PathBuf>,
    /// Recorded in the report; all internal choices are deterministic
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Skip verification of cached or loaded tables
    #[arg(long)]
    trust: bool,
    #[arg(long)]
    no_cache: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Compute, verify and print a character table in CTX form
    Table(Common),
    /// Number of Sylow subgroups containing each p-element, and the subnormalizer counts
    Lambda(Common),
    /// Subnormalizer orders of the p-elements
    Sub(Common),
    /// Picky classes of the first Sylow subgroup
    Picky(Common),
    /// Run a checker
    Check {
        #[arg(value_enum)]
        kind: CheckKind,
        #[command(flatten)]
        common: Common,
        /// Mode of the chosen checker
        #[arg(long)]
        mode: Option<String>,
        /// One sign per character across the picky set in strong global checks
        #[arg(long)]
        uniform_sign: bool,
        #[arg(long)]
        family: Option<String>,
        #[arg(long)]
        q: Option<u64>,
        /// Primes of a Hall subgroup, comma separated
        #[arg(long, value_delimiter = ',')]
        pi: Vec<u64>,
        /// Group spec for the normalizer side of a table-only Hall check
        #[arg(long)]
        normalizer: Option<String>,
    },
    /// Print the closed-form table data of a family
    Family {
        #[arg(long)]
        family: String,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CheckKind {
    Picky,
    Subnormalizer,
    Sections,
    Irc,
    EatonMoreto,
    Extensions,
    Family,
    All,
}

/// A resolved group with its table, or a table alone.
struct Target {
    spec: GroupSpec,
    table: CharacterTable,
}

impl Target {
    fn group(&self) -> Result<&PermGroup> {
        self.table.group().map_err(|_| {
            Error::Precondition(format!(
                "{} is table-only; this command needs a group",
                self.spec
            ))
        })
    }

    fn fixture(&self) -> bool {
        matches!(self.spec, GroupSpec::Ctx(_))
    }
}

fn load(c: &Common) -> Result<Target> {
    let text = c
        .group
        .as_deref()
        .ok_or_else(|| Error::Other("--group is required".into()))?;
    let spec: GroupSpec = text.parse()?;
    match spec.resolve(c.trust)? {
        Resolved::Table(table) => Ok(Target { spec, table }),
        Resolved::Group(g) => {
            let store = TableStore::new(!c.no_cache, c.trust);
            let (table, status) = store.table(&spec, &g)?;
            let msg = match status {
                CacheStatus::Hit => "hit",
                CacheStatus::Miss => "miss",
                CacheStatus::Rejected => "rejected, recomputed",
                CacheStatus::Disabled => "disabled",
            };
            eprintln!("cache: {msg}");
            Ok(Target { spec, table })
        }
    }
}

fn need_prime(c: &Common) -> Result<u64> {
    c.prime
        .ok_or_else(|| Error::Other("--prime is required".into()))
}

fn class_element(t: &CharacterTable, label: &str) -> Result<Perm> {
    let c = t
        .class_by_name(label)
        .ok_or_else(|| Error::Other(format!("no class labelled {label:?}")))?;
    t.classes[c]
        .representative
        .clone()
        .ok_or_else(|| Error::Precondition(format!("class {label} has no representative")))
}

fn determinism(target: &Target, prime: Option<u64>, seed: u64) -> Value {
    let t = &target.table;
    let field = match prime {
        Some(p) if t.complete => p_blocks(t, p, 0, false).ok().map(|b| b.reduction),
        _ => None,
    };
    json!({
        "class_order": t.classes.iter().map(|c| c.name.clone()).collect::<Vec<_>>(),
        "dixon_prime": t.dixon_prime,
        "finite_field": field,
        "seed": seed,
        "mode": if target.fixture() { "fixture" } else { "computed" },
    })
}

fn finish(
    target: &Target,
    c: &Common,
    outcomes: Vec<Outcome>,
    data: Option<Value>,
) -> Result<bool> {
    for o in &outcomes {
        print_text(o);
    }
    if let Some(path) = &c.json {
        let v = report_json(
            &target.spec.to_string(),
            c.prime,
            &outcomes,
            determinism(target, c.prime, c.seed),
            data,
        );
        write_json(path, &v)?;
    }
    Ok(outcomes.iter().all(|o| o.expected))
}

fn write_json(path: &PathBuf, v: &Value) -> Result<()> {
    let text = serde_json::to_string_pretty(v).map_err(|e| Error::Other(e.to_string()))? + "\n";
    std::fs::write(path, text).map_err(|e| Error::Other(format!("{}: {e}", path.display())))
}

fn plain(report: CheckReport) -> Outcome {
    let expected = expected(&report, false);
    Outcome { report, expected }
}

fn cmd_table(c: &Common) -> Result<bool> {
    let target = load(c)?;
    let t = &target.table;
    print!("{}", ctx_write(t));
    let v = verify_table(t);
    let mut r = CheckReport::new("table", t.name.clone());
    for check in &v.checks {
        r.item(check.clone(), true, "");
    }
    for f in &v.failures {
        r.item("violation", false, f.clone());
    }
    if target.fixture() {
        r.notes
            .push("fixture: partial table, column checks only".into());
    }
    let r = r.finish();
    finish(
        &target,
        c,
        vec![plain(r)],
        Some(json!({ "ctx": ctx_write(t) })),
    )
}

fn p_element_reps(t: &CharacterTable, p: u64, class: Option<&str>) -> Result<Vec<(usize, Perm)>> {
    let classes = match class {
        Some(l) => vec![t
            .class_by_name(l)
            .ok_or_else(|| Error::Other(format!("no class labelled {l:?}")))?],
        None => t.p_element_classes(p),
    };
    classes
        .into_iter()
        .map(|c| {
            Ok((
                c,
                t.classes[c]
                    .representative
                    .clone()
                    .ok_or_else(|| Error::Precondition("class without representative".into()))?,
            ))
        })
        .collect()
}

fn cmd_lambda(c: &Common) -> Result<bool> {
    let target = load(c)?;
    let p = need_prime(c)?;
    let g = target.group()?;
    let t = &target.table;
    let mut rows = Vec::new();
    for (ci, x) in p_element_reps(t, p, c.class.as_deref())? {
        let lambda = lambda_count(g, p, &x)?;
        println!("{} {x}: lambda {lambda}", t.classes[ci].name);
        rows.push(json!({ "class": t.classes[ci].name, "element": x.to_cycle_string(), "lambda": lambda }));
    }
    let outcomes = vec![plain(casolo_verify(t, p)?)];
    finish(&target, c, outcomes, Some(json!({ "lambda": rows })))
}

fn cmd_sub(c: &Common) -> Result<bool> {
    let target = load(c)?;
    let p = need_prime(c)?;
    let g = target.group()?;
    let t = &target.table;
    let mut rows = Vec::new();
    for (ci, x) in p_element_reps(t, p, c.class.as_deref())? {
        let (set, sub) = subnormalizer(g, &x, Some(p))?;
        let size = set.iter().filter(|&&b| b).count();
        println!(
            "{} {x}: |S_G(x)| {size}, |Sub_G(x)| {}",
            t.classes[ci].name,
            sub.order()
        );
        rows.push(json!({ "class": t.classes[ci].name, "element": x.to_cycle_string(), "subnormalizer_size": size, "sub_order": sub.order().to_string() }));
    }
    let outcomes = vec![plain(subnormalizer_routes_verify(t, p)?)];
    finish(
        &target,
        c,
        outcomes,
        Some(json!({ "subnormalizers": rows })),
    )
}

fn cmd_picky(c: &Common) -> Result<bool> {
    let target = load(c)?;
    let p = need_prime(c)?;
    let g = target.group()?;
    let t = &target.table;
    let ctx = picky_context(t, p)?;
    let mut rows = Vec::new();
    for (x, cg, _, kind) in &ctx.picky {
        println!("{} {x}: {kind}", t.classes[*cg].name);
        rows.push(
            json!({ "class": t.classes[*cg].name, "element": x.to_cycle_string(), "kind": kind }),
        );
    }
    if ctx.picky.is_empty() {
        println!("no picky elements");
    }
    let count = picky_reps(g, p)?.len();
    finish(
        &target,
        c,
        Vec::new(),
        Some(json!({ "picky": rows, "count": count })),
    )
}

struct CheckArgs<'a> {
    mode: Option<&'a str>,
    uniform_sign: bool,
    pi: &'a [u64],
    normalizer: Option<&'a str>,
}

fn picky_checks(t: &CharacterTable, p: u64, a: &CheckArgs) -> Result<Vec<Outcome>> {
    let ctx = picky_context(t, p)?;
    let has_bad = ctx.picky.iter().any(|e| e.3 == "bad");
    let modes: Vec<PickyMode> = match a.mode {
        Some(m) => vec![m.parse()?],
        None => vec![PickyMode::Global, PickyMode::StrongGlobal],
    };
    let mut out = Vec::new();
    for m in modes {
        let report = check_picky_with(t, &ctx, p, m, a.uniform_sign)?;
        let expected = expected(&report, has_bad);
        out.push(Outcome { report, expected });
    }
    Ok(out)
}

fn section_checks(
    t: &CharacterTable,
    p: u64,
    x: Option<&Perm>,
    mode: Option<&str>,
) -> Result<Vec<Outcome>> {
    let modes: Vec<SectionMode> = match mode {
        Some(m) => vec![m.parse()?],
        None => vec![
            SectionMode::Reduced,
            SectionMode::Abelian,
            SectionMode::OrderP,
            SectionMode::AbelianContainment,
        ],
    };
    modes
        .into_iter()
        .map(|m| Ok(plain(check_sections(t, p, x, m)?)))
        .collect()
}

fn irc_checks(t: &CharacterTable, p: u64, mode: Option<&str>) -> Result<Vec<Outcome>> {
    let variant: IrcVariant = mode.unwrap_or("strict").parse()?;
    let mut out = vec![plain(irc_report(t, p, variant)?)];
    out.push(plain(check_self_normalizing_decomposition(t, p)?.0));
    Ok(out)
}

fn degree_checks(
    t: &CharacterTable,
    p: u64,
    x: Option<&Perm>,
    mode: Option<&str>,
) -> Result<Vec<Outcome>> {
    let mut out = Vec::new();
    if mode.is_none_or(|m| m == "eaton-moreto") {
        out.push(plain(check_eaton_moreto(t, p)?));
    }
    if mode.is_none_or(|m| m == "ppart-multiset") {
        out.push(plain(check_ppart_multiset(t, p, x)?));
    }
    if out.is_empty() {
        return Err(Error::Other(format!(
            "unknown mode {:?}",
            mode.unwrap_or_default()
        )));
    }
    Ok(out)
}

fn extension_checks(
    target: &Target,
    p: Option<u64>,
    x: Option<&Perm>,
    a: &CheckArgs,
    trust: bool,
) -> Result<Vec<Outcome>> {
    let t = &target.table;
    let mode = a.mode.map(|m| match m {
        "mixed-7.1" => "mixed",
        "hall-7.2" => "hall",
        "field-8.1" => "field",
        m => m,
    });
    let mut out = Vec::new();
    let wants = |m: &str, available: bool| mode.map_or(available, |s| s == m);
    if wants("hall", !a.pi.is_empty()) {
        if a.pi.is_empty() {
            return Err(Error::Other("--pi is required for the Hall check".into()));
        }
        if target.fixture() {
            let spec: GroupSpec = a
                .normalizer
                .ok_or_else(|| {
                    Error::Other("--normalizer is required with a table-only group".into())
                })?
                .parse()?;
            let nt = match spec.resolve(trust)? {
                Resolved::Group(n) => dixon_schneider(&n)?,
                Resolved::Table(nt) => nt,
            };
            out.push(plain(check_hall_fixture(t, &nt, a.pi)));
        } else {
            let h = match a.normalizer {
                Some(_) => {
                    return Err(Error::Other(
                        "--normalizer applies to table-only groups".into(),
                    ))
                }
                None => None,
            };
            out.push(plain(check_hall(t, a.pi, h)?));
        }
    }
    if wants("mixed", x.is_some()) {
        let x =
            x.ok_or_else(|| Error::Other("--class is required for the mixed-order check".into()))?;
        out.push(plain(check_mixed(t, x)?));
    }
    if wants("field", p.is_some() && !target.fixture()) {
        let p = p.ok_or_else(|| Error::Other("--prime is required for the field check".into()))?;
        out.push(plain(check_field_over_set(t, p)?));
    }
    if out.is_empty() {
        return Err(Error::Other("no extension check selected".into()));
    }
    Ok(out)
}

/// `global`, `strong(good)` and `strong(bad)` read off the family report.
fn family_summary(r: &CheckReport) -> String {
    let all = |suffix: &str, kind: Option<&str>| {
        let items: Vec<_> = r
            .items
            .iter()
            .filter(|i| {
                i.label.ends_with(suffix) && kind.is_none_or(|k| i.kind.as_deref() == Some(k))
            })
            .collect();
        if items.is_empty() {
            None
        } else {
            Some(items.iter().all(|i| i.passed))
        }
    };
    let word = |b: Option<bool>, yes: &str, no: &str| match b {
        None => "none".to_string(),
        Some(true) => yes.to_string(),
        Some(false) => no.to_string(),
    };
    let global = Some(
        r.items
            .iter()
            .filter(|i| !i.label.contains("strong"))
            .all(|i| i.passed),
    );
    format!(
        "global: {}; strong(good): {}; strong(bad): {}",
        word(global, "holds", "fails"),
        word(all(" strong", Some("good")), "holds", "fails"),
        word(
            all("strong fails", Some("bad")),
            "fails",
            "holds (unexpected)"
        ),
    )
}

fn cmd_family_check(
    family: Option<&str>,
    q: Option<u64>,
    json_path: Option<&PathBuf>,
) -> Result<bool> {
    let family: Family = family
        .ok_or_else(|| Error::Other("--family is required".into()))?
        .parse()?;
    let q = q.ok_or_else(|| Error::Other("--q is required".into()))?;
    let r = family_verify(family, q)?;
    println!("{}", family_summary(&r));
    let mut outcomes = vec![plain(r)];
    if family_group(family, q).is_ok() {
        outcomes.push(plain(crosscheck(family, q)?));
    }
    for o in &outcomes {
        print_text(o);
    }
    if let Some(path) = json_path {
        let o = oracle(family, q)?;
        let det = json!({ "oracle": "closed-form", "family": family.name(), "q": q, "p": o.p });
        write_json(
            path,
            &report_json(
                &format!("family:{}:{q}", family.name()),
                Some(o.p),
                &outcomes,
                det,
                None,
            ),
        )?;
    }
    Ok(outcomes.iter().all(|o| o.expected))
}

fn run_all(t: &CharacterTable, p: u64, a: &CheckArgs) -> Result<Vec<Outcome>> {
    type Task<'s> = Box<dyn Fn() -> Result<Vec<Outcome>> + Send + Sync + 's>;
    let tasks: Vec<Task> = vec![
        Box::new(|| picky_checks(t, p, &CheckArgs { mode: None, ..*a })),
        Box::new(|| Ok(vec![plain(check_subnormalizer(t, p, false)?)])),
        Box::new(|| section_checks(t, p, None, None)),
        Box::new(|| irc_checks(t, p, None)),
        Box::new(|| degree_checks(t, p, None, None)),
        Box::new(|| Ok(vec![plain(check_field_over_set(t, p)?)])),
        Box::new(|| Ok(vec![plain(casolo_verify(t, p)?)])),
        Box::new(|| Ok(vec![plain(block_vanishing_verify(t, p)?)])),
        Box::new(|| Ok(vec![plain(value_field_verify(t, p)?)])),
    ];
    let results: Vec<Result<Vec<Outcome>>> = std::thread::scope(|s| {
        let handles: Vec<_> = tasks.iter().map(|f| s.spawn(move || f())).collect();
        handles
            .into_iter()
            .map(|h| {
                h.join()
                    .unwrap_or_else(|_| Err(Error::Other("worker panicked".into())))
            })
            .collect()
    });
    let mut out = Vec::new();
    for r in results {
        out.extend(r?);
    }
    Ok(out)
}

fn cmd_check(
    kind: CheckKind,
    c: &Common,
    a: &CheckArgs,
    family: Option<&str>,
    q: Option<u64>,
) -> Result<bool> {
    if kind == CheckKind::Family {
        return cmd_family_check(family, q, c.json.as_ref());
    }
    let target = load(c)?;
    let t = &target.table;
    let x = c
        .class
        .as_deref()
        .map(|l| class_element(t, l))
        .transpose()?;
    if kind == CheckKind::Extensions {
        let outcomes = extension_checks(&target, c.prime, x.as_ref(), a, c.trust)?;
        return finish(&target, c, outcomes, None);
    }
    target.group()?;
    let p = need_prime(c)?;
    let outcomes = match kind {
        CheckKind::Picky => picky_checks(t, p, a)?,
        CheckKind::Subnormalizer => {
            let strong = match a.mode.unwrap_or("B") {
                "B" | "b" => false,
                "strong-B" | "strong-b" => true,
                m => return Err(Error::Other(format!("unknown subnormalizer mode {m:?}"))),
            };
            vec![plain(check_subnormalizer(t, p, strong)?)]
        }
        CheckKind::Sections => section_checks(t, p, x.as_ref(), a.mode)?,
        CheckKind::Irc => irc_checks(t, p, a.mode)?,
        CheckKind::EatonMoreto => degree_checks(t, p, x.as_ref(), a.mode)?,
        CheckKind::All => run_all(t, p, a)?,
        CheckKind::Extensions | CheckKind::Family => unreachable!(),
    };
    finish(&target, c, outcomes, None)
}

fn cmd_family(family: &str, q: u64, json_path: Option<&PathBuf>) -> Result<bool> {
    let family: Family = family.parse()?;
    let o = oracle(family, q)?;
    print!("{}", oracle_text(&o));
    if let Some(path) = json_path {
        write_json(
            path,
            &serde_json::to_value(&o).map_err(|e| Error::Other(e.to_string()))?,
        )?;
    }
    Ok(true)
}

fn run(cli: Cli) -> Result<bool> {
    match &cli.command {
        Command::Table(c) => cmd_table(c),
        Command::Lambda(c) => cmd_lambda(c),
        Command::Sub(c) => cmd_sub(c),
        Command::Picky(c) => cmd_picky(c),
        Command::Check {
            kind,
            common,
            mode,
            uniform_sign,
            family,
            q,
            pi,
            normalizer,
        } => {
            let a = CheckArgs {
                mode: mode.as_deref(),
                uniform_sign: *uniform_sign,
                pi,
                normalizer: normalizer.as_deref(),
            };
            cmd_check(*kind, common, &a, family.as_deref(), *q)
        }
        Command::Family { family, q, json } => cmd_family(family, *q, json.as_ref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let result = run(cli);
    eprintln!("elapsed: {:.3}s", start.elapsed().as_secs_f64());
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
