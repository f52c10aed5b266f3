mod report;

use std::io::{self, BufRead, Write};
use std::net::{IpAddr, Ipv4Addr, SocketAddr};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use treebank::analytics::{
    partition, treebank_stats, word_order_profile, PredicateScope, SplitRatios, WordOrderMode,
};
use treebank::conllu::{read_document, write_document};
use treebank::eval::{deprel_kappa, evaluate, morph_scores, EvalOptions};
use treebank::morph::Converter;
use treebank::validate::{validate_document, Schema};
use treebank::{Document, Stats};
use treebank_service::Session;

use report::{fixed, Report};

#[derive(Parser)]
#[command(name = "tbk", version, about = "Tools for CoNLL-U dependency treebanks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Output {
    /// Print key=value lines instead of the readable report.
    #[arg(long)]
    machine: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Check files against the validation rules; exits 1 if any issue is found.
    Validate {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        /// Schema file with [upos], [deprel] and [features] sections.
        #[arg(long)]
        schema: Option<PathBuf>,
    },
    /// Sentence, token, arc-length and relation statistics.
    Stats {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        /// Also report every section separately.
        #[arg(long)]
        by_section: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Subject/object/predicate order counts.
    Wordorder {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        /// Count only clauses with both a subject and an object.
        #[arg(long)]
        triples_only: bool,
        /// Predicates to inspect: `main` (sentence roots) or `all` clauses.
        #[arg(long, default_value = "main")]
        scope: PredicateScope,
        #[command(flatten)]
        output: Output,
    },
    /// UAS/LAS, label kappa and morphology scores of a prediction.
    Eval {
        gold: PathBuf,
        pred: PathBuf,
        /// Leave out words labelled punct.
        #[arg(long)]
        ignore_punct: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Cohen's kappa on the dependency labels of two annotations.
    Kappa {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        ignore_punct: bool,
        #[command(flatten)]
        output: Output,
    },
    /// FEATS accuracy, precision, recall and F1.
    MorphEval {
        gold: PathBuf,
        pred: PathBuf,
        #[command(flatten)]
        output: Output,
    },
    /// Convert analyses (one per line) to LEMMA, UPOS and FEATS columns.
    Convert {
        /// Input file; standard input when absent or `-`.
        input: Option<PathBuf>,
        /// Drop unknown tags with a warning instead of failing.
        #[arg(long)]
        lenient: bool,
        /// Category-to-UPOS overrides, one `Category<TAB>UPOS` per line.
        #[arg(long)]
        upos_map: Option<PathBuf>,
    },
    /// Write train/dev/test files.
    Split {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Split every section separately (section from the sent_id prefix).
        #[arg(long)]
        by_section: bool,
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
        /// Train, dev and test shares.
        #[arg(long, default_value = "0.8,0.1,0.1")]
        ratios: String,
        /// File name prefix for the outputs.
        #[arg(long, default_value = "split")]
        prefix: String,
    },
    /// Serve a document to the annotation interface.
    Serve {
        #[arg(long)]
        file: PathBuf,
        #[arg(long, default_value_t = 8080)]
        port: u16,
        #[arg(long, default_value_t = IpAddr::V4(Ipv4Addr::LOCALHOST))]
        host: IpAddr,
        #[arg(long)]
        schema: Option<PathBuf>,
    },
}

/// Failures that end the run with exit code 2.
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

type Outcome = Result<ExitCode, Failure>;

fn load(files: &[PathBuf]) -> Result<Document, Failure> {
    let mut doc = Document::default();
    for f in files {
        doc.extend(read_document(f)?);
    }
    Ok(doc)
}

fn load_schema(path: Option<&Path>) -> Result<Schema, Failure> {
    match path {
        None => Ok(Schema::default()),
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| Failure(format!("{}: {e}", p.display())))?;
            let schema = Schema::from_config(&text)?;
            schema.check()?;
            Ok(schema)
        }
    }
}

fn emit(report: &Report, output: &Output) -> Outcome {
    report.write(&mut io::stdout().lock(), output.machine)?;
    Ok(ExitCode::SUCCESS)
}

fn validate(files: &[PathBuf], schema: Option<&Path>) -> Outcome {
    let schema = load_schema(schema)?;
    let doc = load(files)?;
    let issues = validate_document(&doc, &schema);
    let mut out = io::stdout().lock();
    for issue in &issues {
        writeln!(out, "{issue}")?;
    }
    let noun = if issues.len() == 1 { "issue" } else { "issues" };
    writeln!(out, "{} {noun} in {} sentences", issues.len(), doc.len())?;
    Ok(if issues.is_empty() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn add_stats(report: &mut Report, doc: &Document) {
    let s: Stats = treebank_stats(doc);
    report.add("sentences", s.sentences);
    report.add("tokens", s.tokens);
    report.add("words", s.words);
    report.add("avg tokens per sentence", fixed(s.avg_tokens_per_sentence));
    report.add("avg words per sentence", fixed(s.avg_words_per_sentence));
    report.add("arcs", s.arcs);
    report.add("avg arc length", fixed(s.avg_arc_length));
    report.add("avg arc length no punct", fixed(s.avg_arc_length_no_punct));
    report.add("unique upos", s.unique_upos);
    report.add("unique features", s.unique_features);
    report.add("unique deprels", s.unique_deprels);
    for r in &s.relations {
        report.add(format!("deprel {}", r.label), format!("{} ({}%)", r.count, fixed(r.percent)));
    }
}

fn stats(files: &[PathBuf], by_section: bool, output: &Output) -> Outcome {
    let doc = load(files)?;
    let mut report = Report::new();
    add_stats(&mut report, &doc);
    if by_section {
        for section in doc.split_by_section() {
            report.group(section.section.map_or("Other", |s| s.name()));
            add_stats(&mut report, &section);
        }
    }
    emit(&report, output)
}

fn wordorder(files: &[PathBuf], triples_only: bool, scope: PredicateScope, output: &Output) -> Outcome {
    let doc = load(files)?;
    let mode = if triples_only { WordOrderMode::TriplesOnly } else { WordOrderMode::PairsAndTriples };
    let profile = word_order_profile::<f64>(&doc, scope, mode);
    let mut report = Report::new();
    report.add("total", profile.total);
    report.add("modal", profile.modal().map_or("none".to_string(), |p| p.to_string()));
    for c in &profile.counts {
        report.add(c.pattern.to_string(), format!("{} ({}%)", c.count, fixed(c.percent)));
    }
    emit(&report, output)
}

fn eval(gold: &Path, pred: &Path, ignore_punct: bool, output: &Output) -> Outcome {
    let (g, p) = (read_document(gold)?, read_document(pred)?);
    let r = evaluate::<f64>(&g, &p, EvalOptions { ignore_punct })?;
    let a = &r.attachment;
    let mut report = Report::new();
    report.add("gold words", a.counts.gold_words);
    report.add("pred words", a.counts.pred_words);
    report.add("aligned words", a.counts.aligned_words);
    report.add("correct heads", a.counts.correct_heads);
    report.add("correct labelled", a.counts.correct_labelled);
    report.add("uas precision", fixed(a.uas.precision));
    report.add("uas recall", fixed(a.uas.recall));
    report.add("uas f1", fixed(a.uas.f1));
    report.add("las precision", fixed(a.las.precision));
    report.add("las recall", fixed(a.las.recall));
    report.add("las f1", fixed(a.las.f1));
    report.add("kappa", fixed(r.kappa));
    if let Some(m) = &r.morph {
        add_morph(&mut report, m);
    }
    emit(&report, output)
}

fn add_morph(report: &mut Report, m: &treebank::MorphScores) {
    report.add("morph token accuracy", fixed(m.token_accuracy));
    report.add("morph precision", fixed(m.precision));
    report.add("morph recall", fixed(m.recall));
    report.add("morph f1", fixed(m.f1));
    report.add("morph true positives", m.counts.matched_features);
    report.add("morph false positives", m.counts.false_positives());
    report.add("morph false negatives", m.counts.false_negatives());
}

fn kappa(a: &Path, b: &Path, ignore_punct: bool, output: &Output) -> Outcome {
    let k: f64 = deprel_kappa(&read_document(a)?, &read_document(b)?, EvalOptions { ignore_punct })?;
    let mut report = Report::new();
    report.add("kappa", fixed(k));
    emit(&report, output)
}

fn morph_eval(gold: &Path, pred: &Path, output: &Output) -> Outcome {
    let m = morph_scores::<f64>(&read_document(gold)?, &read_document(pred)?)?;
    let mut report = Report::new();
    add_morph(&mut report, &m);
    emit(&report, output)
}

fn convert(input: Option<&Path>, lenient: bool, upos_map: Option<&Path>) -> Outcome {
    let mut converter = Converter::new().lenient(lenient);
    if let Some(p) = upos_map {
        converter.load_upos_map(&std::fs::read_to_string(p)?)?;
    }
    let reader: Box<dyn BufRead> = match input {
        None => Box::new(io::stdin().lock()),
        Some(p) if p == Path::new("-") => Box::new(io::stdin().lock()),
        Some(p) => Box::new(io::BufReader::new(std::fs::File::open(p)?)),
    };
    let mut out = io::stdout().lock();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let c = converter
            .convert_str(&line)
            .map_err(|e| Failure(format!("line {}: {e}", i + 1)))?;
        for tag in &c.dropped {
            eprintln!("tbk: line {}: dropped unknown tag {tag}", i + 1);
        }
        writeln!(out, "{}\t{}\t{}", c.lemma, c.upos, c.feats)?;
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_ratios(s: &str) -> Result<SplitRatios, Failure> {
    let parts: Vec<f64> = s
        .split(',')
        .map(|x| x.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|_| Failure(format!("--ratios: expected three numbers, got '{s}'")))?;
    match parts[..] {
        [a, b, c] => Ok(SplitRatios::from_f64(a, b, c)?),
        _ => Err(Failure(format!("--ratios: expected three numbers, got '{s}'"))),
    }
}

fn write_part(path: &Path, doc: &Document) -> Result<(), Failure> {
    let file = std::fs::File::create(path).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
    let mut w = io::BufWriter::new(file);
    write_document(doc, &mut w)?;
    w.flush()?;
    Ok(())
}

fn split(
    files: &[PathBuf],
    seed: u64,
    by_section: bool,
    out_dir: &Path,
    ratios: &str,
    prefix: &str,
) -> Outcome {
    let ratios = parse_ratios(ratios)?;
    let doc = load(files)?;
    let sections = if by_section { doc.split_by_section() } else { vec![doc] };
    let parts = partition(&sections, &ratios, seed)?;
    std::fs::create_dir_all(out_dir)?;
    let mut out = io::stdout().lock();
    for s in &parts.sections {
        let name = s.section.map_or("all", |x| x.name());
        writeln!(out, "{name}: {} -> train {} / dev {} / test {}", s.total, s.train, s.dev, s.test)?;
    }
    for (part, doc) in [("train", &parts.train), ("dev", &parts.dev), ("test", &parts.test)] {
        let path = out_dir.join(format!("{prefix}-{part}.conllu"));
        write_part(&path, doc)?;
        writeln!(out, "{}: {} sentences", path.display(), doc.len())?;
    }
    Ok(ExitCode::SUCCESS)
}

fn serve(file: &Path, host: IpAddr, port: u16, schema: Option<&Path>) -> Outcome {
    let session = Session::open(file, load_schema(schema)?)?;
    let addr = SocketAddr::new(host, port);
    eprintln!("serving {} on http://{addr}", file.display());
    let runtime = tokio::runtime::Runtime::new()?;
    runtime.block_on(treebank_service::serve(session, addr))?;
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Validate { files, schema } => validate(&files, schema.as_deref()),
        Command::Stats { files, by_section, output } => stats(&files, by_section, &output),
        Command::Wordorder { files, triples_only, scope, output } => {
            wordorder(&files, triples_only, scope, &output)
        }
        Command::Eval { gold, pred, ignore_punct, output } => eval(&gold, &pred, ignore_punct, &output),
        Command::Kappa { a, b, ignore_punct, output } => kappa(&a, &b, ignore_punct, &output),
        Command::MorphEval { gold, pred, output } => morph_eval(&gold, &pred, &output),
        Command::Convert { input, lenient, upos_map } => convert(input.as_deref(), lenient, upos_map.as_deref()),
        Command::Split { files, seed, by_section, out_dir, ratios, prefix } => {
            split(&files, seed, by_section, &out_dir, &ratios, &prefix)
        }
        Command::Serve { file, port, host, schema } => serve(&file, host, port, schema.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(Failure(message)) => {
            eprintln!("tbk: {message}");
            ExitCode::from(2)
        }
    }
}
