use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;
use sgvariety::band::{band_canon, band_equal, free_band, phi_identity, Word};
use sgvariety::corpus::{self, CorpusItem};
use sgvariety::hierarchy::{
    classify, verify_band_interval, verify_da_equivalence, verify_free_band, verify_generator_bound,
    verify_main_theorem, verify_malcev_minimality, verify_nil_corner, AgreementReport,
};
use sgvariety::lang::{classify_language, verify_language, Dfa, ProductExpression, SyntacticMonoid};
use sgvariety::malcev::{sim_d, sim_k};
use sgvariety::omega::{eval, IdentitySet, Notation, TermArena, BUILTIN_NAMES};
use sgvariety::semigroup::io::{parse_semigroup_file, render_cayley};
use sgvariety::{Budget, Error, FiniteSemigroup};
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser, Debug)]
#[command(name = "sgvariety", version, about = "Finite semigroups, the levels R_m and L_m of DA, and syntactic monoids")]
struct Cli {
    /// Highest level searched when classifying.
    #[arg(long, global = true, default_value_t = sgvariety::hierarchy::DEFAULT_MAX_M)]
    max_m: usize,
    /// Element cap for closures.
    #[arg(long, global = true, default_value_t = Budget::default().elements)]
    budget_elems: usize,
    /// Assignment cap for one identity check.
    #[arg(long, global = true, default_value_t = Budget::default().assignments)]
    budget_assignments: u64,
    /// Word-length bound for brute-force language checks.
    #[arg(long, global = true, default_value_t = Budget::default().word_len)]
    len_bound: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads (0 = one per core).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    /// Seed for sampled transformation corpora.
    #[arg(long, global = true, default_value_t = corpus::DEFAULT_SEED)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SideArg {
    K,
    D,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CorpusArg {
    /// All labelled semigroups of order at most 4 plus the sample.
    Standard,
    Exhaustive,
    Sample,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Suite {
    MainTheorem,
    DaEquiv,
    BandInterval,
    NilCorner,
    GeneratorBound,
    FreeBand,
    MalcevMinimality,
    Language,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify a semigroup given as a Cayley table or transformation file.
    ClassifySg { path: PathBuf },
    /// Check an identity (or a named identity set) in a semigroup.
    CheckId {
        path: PathBuf,
        /// `lhs = rhs`, or one of the built-in names.
        identity: String,
    },
    /// Print φ(G_m) = φ(I_m) and the mirrored pair.
    EmitPhi {
        m: usize,
        #[arg(long)]
        unicode: bool,
    },
    /// Print the quotient by ~K or ~D.
    Quotient {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = SideArg::K)]
        side: SideArg,
    },
    /// Green's classes.
    Green { path: PathBuf },
    /// Canonical form of band words; with two words, decide equality.
    BandCanon {
        #[arg(required = true, num_args = 1..=2)]
        words: Vec<String>,
    },
    /// The free band on k ≤ 3 generators.
    FreeBand {
        k: usize,
        /// Print one representative word per element.
        #[arg(long)]
        list: bool,
    },
    /// Classify the language of a DFA file by its syntactic monoid.
    ClassifyLang { path: PathBuf },
    /// Determinism, co-determinism and unambiguity of a product expression.
    ProductCheck { path: PathBuf },
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        /// Levels for main-theorem (m) and nil-corner / band-interval (m itself).
        #[arg(long = "m", num_args = 1..)]
        levels: Vec<usize>,
        #[arg(long, value_enum, default_value_t = CorpusArg::Standard)]
        corpus: CorpusArg,
        /// Size of the transformation sample.
        #[arg(long, default_value_t = corpus::DEFAULT_SAMPLE)]
        sample: usize,
        /// Keep only corpus items whose id contains this text.
        #[arg(long)]
        filter: Option<String>,
        /// Also check m = 4 on FB(3) in band-interval.
        #[arg(long)]
        with_m4: bool,
    },
}

impl Cli {
    fn budget(&self) -> Budget {
        Budget { elements: self.budget_elems, assignments: self.budget_assignments, word_len: self.len_bound }
    }
}

fn read(path: &Path) -> anyhow::Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn load_semigroup(path: &Path, budget: &Budget) -> anyhow::Result<FiniteSemigroup> {
    let text = read(path)?;
    parse_semigroup_file(&text, budget).with_context(|| path.display().to_string())
}

fn emit<T: Serialize>(format: Format, value: &T, text: impl FnOnce() -> String) -> anyhow::Result<()> {
    let out = match format {
        Format::Json => serde_json::to_string_pretty(value)? + "\n",
        Format::Text => text(),
    };
    let mut stdout = std::io::stdout().lock();
    match stdout.write_all(out.as_bytes()).and_then(|()| stdout.flush()) {
        // a closed pipe (e.g. `| head`) is not an error
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn classify_sg(cli: &Cli, path: &Path) -> anyhow::Result<bool> {
    let s = load_semigroup(path, &cli.budget())?;
    let id = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    let report = classify(&s, cli.max_m)?.with_id(id);
    emit(cli.format, &report, || report.render_text())?;
    Ok(true)
}

fn check_id(cli: &Cli, path: &Path, identity: &str) -> anyhow::Result<bool> {
    let budget = cli.budget();
    let s = load_semigroup(path, &budget)?;
    let set = if identity.contains('=') {
        IdentitySet::parse(identity)?
    } else if BUILTIN_NAMES.contains(&identity) {
        IdentitySet::builtin(identity)?
    } else {
        bail!(Error::UnknownName(format!("{identity} (known: {})", BUILTIN_NAMES.join(", "))));
    };
    let failure = set.first_failure(&s, &budget)?;
    let rendered = set.render(Notation::Ascii);
    match failure {
        None => emit(cli.format, &json!({"holds": true, "identities": rendered}), || "HOLDS\n".to_string())?,
        Some((i, a)) => {
            let id = &set.identities[i];
            let lhs = eval(&s, &set.arena, id.lhs, &a)?;
            let rhs = eval(&s, &set.arena, id.rhs, &a)?;
            let value = json!({
                "holds": false,
                "identity": rendered[i],
                "assignment": a.bindings,
                "lhs": lhs,
                "rhs": rhs,
            });
            emit(cli.format, &value, || format!("FAILS, {a}\n  {}\n  lhs {lhs}, rhs {rhs}\n", rendered[i]))?;
        }
    }
    Ok(true)
}

fn emit_phi(cli: &Cli, m: usize, unicode: bool) -> anyhow::Result<bool> {
    if !(2..=6).contains(&m) {
        bail!(Error::InvalidArgument(format!("m must lie in 2..=6, got {m}")));
    }
    let notation = if unicode { Notation::Unicode } else { Notation::Ascii };
    let mut arena = TermArena::new();
    let r = phi_identity(&mut arena, m, false)?;
    let l = phi_identity(&mut arena, m, true)?;
    let dag = arena.reachable(&[r.lhs, r.rhs, l.lhs, l.rhs]).len();
    let trees = [arena.tree_size(r.lhs), arena.tree_size(r.rhs), arena.tree_size(l.lhs), arena.tree_size(l.rhs)];
    let (rt, lt) = (arena.render_identity(&r, notation), arena.render_identity(&l, notation));
    let value = json!({
        "m": m,
        "r": rt,
        "l": lt,
        "dagNodes": dag,
        "treeSizes": trees.iter().map(u128::to_string).collect::<Vec<_>>(),
    });
    emit(cli.format, &value, || {
        format!(
            "R{m}: {rt}\nL{m}: {lt}\ndag nodes {dag}; tree sizes {} {} {} {}\n",
            trees[0], trees[1], trees[2], trees[3]
        )
    })?;
    Ok(true)
}

fn quotient(cli: &Cli, path: &Path, side: SideArg) -> anyhow::Result<bool> {
    let s = load_semigroup(path, &cli.budget())?;
    let c = match side {
        SideArg::K => sim_k(&s)?,
        SideArg::D => sim_d(&s)?,
    };
    let (q, projection) = s.quotient(&c)?;
    let name = if side == SideArg::K { "K" } else { "D" };
    let value = json!({
        "side": name,
        "order": s.order(),
        "quotientOrder": q.order(),
        "projection": projection,
        "classes": c.blocks(),
        "table": q.rows().map(<[u32]>::to_vec).collect::<Vec<_>>(),
    });
    emit(cli.format, &value, || {
        let blocks: Vec<String> = c
            .blocks()
            .iter()
            .map(|b| format!("{{{}}}", b.iter().map(usize::to_string).collect::<Vec<_>>().join(",")))
            .collect();
        format!("# S/~{name}: order {} -> {}\n# classes {}\n{}", s.order(), q.order(), blocks.join(" "), render_cayley(&q))
    })?;
    Ok(true)
}

fn green(cli: &Cli, path: &Path) -> anyhow::Result<bool> {
    let s = load_semigroup(path, &cli.budget())?;
    let g = s.greens();
    let group = |ids: &[usize]| -> Vec<Vec<usize>> {
        let count = ids.iter().copied().max().map_or(0, |m| m + 1);
        let mut out = vec![Vec::new(); count];
        for (x, &c) in ids.iter().enumerate() {
            out[c].push(x);
        }
        out
    };
    let (r, l, j, h) = (group(&g.r_class_of), group(&g.l_class_of), group(&g.j_class_of), group(&g.h_class_of));
    let value = json!({
        "order": s.order(),
        "R": r, "L": l, "J": j, "H": h,
        "idempotents": s.idempotents(),
        "rTrivial": g.is_r_trivial(), "lTrivial": g.is_l_trivial(),
        "jTrivial": g.is_j_trivial(), "hTrivial": g.is_h_trivial(),
    });
    emit(cli.format, &value, || {
        let show = |cs: &[Vec<usize>]| {
            cs.iter()
                .map(|c| format!("{{{}}}", c.iter().map(usize::to_string).collect::<Vec<_>>().join(",")))
                .collect::<Vec<_>>()
                .join(" ")
        };
        format!(
            "R  {}\nL  {}\nJ  {}\nH  {}\nidempotents {:?}\n",
            show(&r),
            show(&l),
            show(&j),
            show(&h),
            s.idempotents()
        )
    })?;
    Ok(true)
}

fn band_canon_cmd(cli: &Cli, words: &[String]) -> anyhow::Result<bool> {
    let parsed: Vec<Word> = words.iter().map(|w| Word::parse(w)).collect::<Result<_, _>>()?;
    let forms: Vec<_> = parsed.iter().map(|w| (band_canon(w).to_string(), band_canon(w).representative().to_string())).collect();
    let equal = (parsed.len() == 2).then(|| band_equal(&parsed[0], &parsed[1]));
    let value = json!({
        "words": parsed.iter().map(Word::to_string).collect::<Vec<_>>(),
        "canonical": forms.iter().map(|f| &f.0).collect::<Vec<_>>(),
        "representatives": forms.iter().map(|f| &f.1).collect::<Vec<_>>(),
        "equal": equal,
    });
    emit(cli.format, &value, || {
        let mut out = String::new();
        for (w, (tree, rep)) in parsed.iter().zip(&forms) {
            out += &format!("{w}\n  canonical {tree}\n  shortest form {rep}\n");
        }
        if let Some(e) = equal {
            out += if e { "equal in every band\n" } else { "different in the free band\n" };
        }
        out
    })?;
    Ok(true)
}

fn free_band_cmd(cli: &Cli, k: usize, list: bool) -> anyhow::Result<bool> {
    let fb = free_band(k)?;
    let reps: Vec<String> = fb.representatives.iter().map(Word::to_string).collect();
    let value = json!({
        "generators": k,
        "order": fb.semigroup.order(),
        "band": fb.semigroup.is_band(),
        "elements": if list { Some(&reps) } else { None },
    });
    emit(cli.format, &value, || {
        let mut out = format!("FB({k}): order {}, band {}\n", fb.semigroup.order(), fb.semigroup.is_band());
        if list {
            for (i, r) in reps.iter().enumerate() {
                out += &format!("{i:>4} {r}\n");
            }
        }
        out
    })?;
    Ok(true)
}

fn classify_lang(cli: &Cli, path: &Path) -> anyhow::Result<bool> {
    let budget = cli.budget();
    let d = Dfa::parse(&read(path)?).with_context(|| path.display().to_string())?;
    let report = classify_language(&d, cli.max_m, &budget)?;
    let sm = SyntacticMonoid::new(&d, &budget)?;
    emit(cli.format, &report, || {
        let mut out = report.render_text();
        out += "elements    ";
        out += &sm.words.iter().map(|w| if w.is_empty() { "1" } else { w }).collect::<Vec<_>>().join(" ");
        out += "\n";
        out
    })?;
    Ok(true)
}

fn product_check(cli: &Cli, path: &Path) -> anyhow::Result<bool> {
    let base = path.parent().unwrap_or(Path::new("."));
    let p = ProductExpression::parse(&read(path)?, base).with_context(|| path.display().to_string())?;
    let report = p.check(&cli.budget())?;
    emit(cli.format, &report, || report.render_text())?;
    Ok(report.agrees())
}

fn corpus_for(cli: &Cli, kind: CorpusArg, sample: usize, filter: Option<&str>) -> anyhow::Result<Vec<CorpusItem>> {
    let budget = cli.budget();
    let mut items = match kind {
        CorpusArg::Exhaustive => corpus::exhaustive(4),
        CorpusArg::Sample => corpus::transformation_sample(sample, 4, cli.seed, &budget)?,
        CorpusArg::Standard => {
            let mut c = corpus::exhaustive(4);
            c.extend(corpus::transformation_sample(sample, 4, cli.seed, &budget)?);
            c
        }
    };
    if let Some(f) = filter {
        items.retain(|i| i.id.contains(f));
    }
    Ok(items)
}

#[derive(Serialize)]
struct VerifySummary {
    suite: String,
    passed: bool,
    reports: Vec<AgreementReport>,
}

fn verify(
    cli: &Cli,
    suite: Suite,
    levels: &[usize],
    kind: CorpusArg,
    sample: usize,
    filter: Option<&str>,
    with_m4: bool,
) -> anyhow::Result<bool> {
    let budget = cli.budget();
    let needs_corpus = suite != Suite::Language;
    let items = if needs_corpus { corpus_for(cli, kind, sample, filter)? } else { Vec::new() };
    if needs_corpus && items.is_empty() {
        eprintln!("warning: the corpus is empty; the suite passes vacuously");
    }
    let pick = |default: &[usize]| if levels.is_empty() { default.to_vec() } else { levels.to_vec() };
    let mut reports = Vec::new();
    match suite {
        Suite::MainTheorem => {
            for m in pick(&[1, 2]) {
                reports.push(verify_main_theorem(&items, m, &budget));
            }
        }
        Suite::DaEquiv => reports.push(verify_da_equivalence(&items)),
        Suite::NilCorner => {
            for m in pick(&[2, 3]) {
                reports.push(verify_nil_corner(&items, m));
            }
        }
        Suite::GeneratorBound => reports.push(verify_generator_bound(&items)),
        Suite::MalcevMinimality => reports.push(verify_malcev_minimality(&items)),
        Suite::FreeBand => reports.push(verify_free_band(&items)),
        Suite::Language => reports.push(verify_language(&budget)),
        Suite::BandInterval => {
            let lv = pick(&[2, 3]);
            reports.push(verify_band_interval(&items, &lv, &budget));
            let fbs: Vec<CorpusItem> =
                [2, 3].iter().map(|&k| Ok(CorpusItem::new(format!("FB({k})"), free_band(k)?.semigroup))).collect::<sgvariety::Result<_>>()?;
            reports.push(verify_band_interval(&fbs, &lv, &budget));
            if with_m4 {
                reports.push(verify_band_interval(&fbs[1..], &[4], &budget));
            }
        }
    }
    let passed = reports.iter().all(AgreementReport::passed);
    let name = format!("{suite:?}");
    let summary = VerifySummary { suite: name.clone(), passed, reports };
    emit(cli.format, &summary, || {
        let mut out = String::new();
        for r in &summary.reports {
            let verdict = if r.passed() { "PASS" } else { "FAIL" };
            out += &format!(
                "{verdict} {}: checked {}, disagreements {}, skipped {}\n",
                r.suite,
                r.checked,
                r.disagreements.len(),
                r.skipped.len()
            );
            for d in r.disagreements.iter().take(20) {
                out += &format!("  {} {}\n", d.id, d.detail);
            }
        }
        out
    })?;
    Ok(passed)
}

fn run(cli: &Cli) -> anyhow::Result<bool> {
    if cli.max_m == 0 {
        bail!(Error::InvalidArgument("--max-m must be at least 1".into()));
    }
    if cli.budget_elems == 0 || cli.budget_assignments == 0 {
        bail!(Error::InvalidArgument("budgets must be positive".into()));
    }
    if cli.jobs > 0 {
        rayon::ThreadPoolBuilder::new().num_threads(cli.jobs).build_global()?;
    }
    match &cli.command {
        Command::ClassifySg { path } => classify_sg(cli, path),
        Command::CheckId { path, identity } => check_id(cli, path, identity),
        Command::EmitPhi { m, unicode } => emit_phi(cli, *m, *unicode),
        Command::Quotient { path, side } => quotient(cli, path, *side),
        Command::Green { path } => green(cli, path),
        Command::BandCanon { words } => band_canon_cmd(cli, words),
        Command::FreeBand { k, list } => free_band_cmd(cli, *k, *list),
        Command::ClassifyLang { path } => classify_lang(cli, path),
        Command::ProductCheck { path } => product_check(cli, path),
        Command::Verify { suite, levels, corpus, sample, filter, with_m4 } => {
            verify(cli, *suite, levels, *corpus, *sample, filter.as_deref(), *with_m4)
        }
    }
}

fn exit_code(e: &anyhow::Error) -> u8 {
    match e.chain().find_map(|c| c.downcast_ref::<Error>()) {
        Some(err) if err.is_budget() => 3,
        Some(err) if err.is_input() => 2,
        Some(_) => 1,
        // unreadable files and similar
        None => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
