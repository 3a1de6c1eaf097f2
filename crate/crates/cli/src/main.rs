//! `knotpos`: braid and diagram profiles, slice-torus bounds, positivity obstructions.

use clap::{Args, Parser, Subcommand, ValueEnum};
use knotpos_core::braid::{
    braid_linking_matrix, braid_profile, embed_quasipositive, key_lemma_identity, sub_braid, Factor,
};
use knotpos_core::catalog::{
    self, builtin_example, render_table, table_rows, twelve_crossing_stats, CatalogEntry, Example, TableFormat,
};
use knotpos_core::diagram::{diagram_profile, seifert_analysis};
use knotpos_core::invariants::{bennequin_chain, nu_bounds, nu_lower_from_braid, positive_unlinking, UnlinkingMode};
use knotpos_core::obstruct::{
    check_concordance_qp, check_positive, check_positive_braid, check_positive_braid_stats, check_qp,
    classify_alt_pure, classify_small_unlinking, LinkData, ObstructionReport, Partitions,
};
use knotpos_core::{BraidWord, ComponentPartition, Error, ErrorKind, LinkDiagram, LinkingMatrix};
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "knotpos", version, about = "Slice-torus bounds and positivity obstructions for links")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Print only the main result.
    #[arg(short, long, global = true, conflicts_with = "verbose")]
    quiet: bool,
    /// Also print input provenance.
    #[arg(short, long, global = true)]
    verbose: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Braid words such as "B3: 1 -2 1".
    #[command(subcommand)]
    Braid(BraidCmd),
    /// PD diagrams (or braid closures).
    #[command(subcommand)]
    Diagram(DiagramCmd),
    /// Bounds on the slice-torus invariant nu.
    #[command(subcommand)]
    Nu(NuCmd),
    /// Obstruction tests.
    #[command(subcommand)]
    Obstruct(ObstructCmd),
    /// Render the positivity table of a catalog.
    Table {
        /// JSON Lines catalog; the bundled one is used when absent.
        #[arg(long, env = "KNOTPOS_CATALOG")]
        catalog: Option<PathBuf>,
    },
    /// Print a built-in example.
    Example {
        /// One of Dk, fig3, borromean, torus2n, hopf.
        name: String,
        #[arg(long, default_value_t = 1)]
        k: usize,
    },
}

#[derive(Args, Clone)]
struct Input {
    /// Inline braid word or PD text.
    text: Option<String>,
    /// Read the braid word or PD text from a file.
    #[arg(long)]
    input_file: Option<PathBuf>,
    /// Use a built-in example (with --k).
    #[arg(long)]
    example: Option<String>,
    #[arg(long, default_value_t = 1)]
    k: usize,
    /// Use a catalog entry by name.
    #[arg(long)]
    entry: Option<String>,
    /// Catalog for --entry; the bundled one is used when absent.
    #[arg(long, env = "KNOTPOS_CATALOG")]
    catalog: Option<PathBuf>,
}

#[derive(Subcommand)]
enum BraidCmd {
    /// Writhe, self-linking number, permutation, component cycles and flags.
    Profile(Input),
    /// Sub-braid on the given components (1-based, ordered by smallest strand).
    Sub {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_delimiter = ',', required = true)]
        keep: Vec<usize>,
    },
    /// Add one strand so that the braid becomes quasi-positive.
    Embed(Input),
    /// Self-linking identity for a partition of the components, e.g. "1,2|3".
    Keylemma {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        partition: String,
    },
}

#[derive(Subcommand)]
enum DiagramCmd {
    /// Crossing, Seifert-circle and resolution counts, linking matrix.
    Profile(Input),
    /// Homogeneity, reduced Seifert graph and fibredness of positive diagrams.
    Seifert(Input),
}

#[derive(Subcommand)]
enum NuCmd {
    /// Doubled bounds on nu from the diagram; for a braid, also the chain sl <= 2nu - l <= -chi4.
    Bounds {
        #[command(flatten)]
        input: Input,
        /// Slice Euler characteristic of the link, for the chain check.
        #[arg(long, allow_hyphen_values = true)]
        chi4: Option<i64>,
    },
}

#[derive(Args, Clone, Default)]
struct Scalars {
    #[arg(long, allow_hyphen_values = true)]
    chi4: Option<i64>,
    #[arg(long)]
    unlinking: Option<i64>,
    #[arg(long)]
    wsp: Option<i64>,
    #[arg(long)]
    ssp: Option<i64>,
    /// Unknotting numbers of the components, comma separated.
    #[arg(long, value_delimiter = ',')]
    component_u: Option<Vec<i64>>,
    #[arg(long)]
    completely_split: Option<bool>,
    /// Upper bound on sl_c of the link.
    #[arg(long, allow_hyphen_values = true)]
    slc_upper: Option<i64>,
    /// Upper bound on sl_max of a sub-link, e.g. "1=-2" or "1,2=0".
    #[arg(long = "sl-max", allow_hyphen_values = true)]
    sl_max: Vec<String>,
}

#[derive(Subcommand)]
enum ObstructCmd {
    /// Concordance to a quasi-positive link.
    QpConc {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        scalars: Scalars,
        /// Partitions to test; all of them when absent.
        #[arg(long)]
        partition: Vec<String>,
    },
    /// Quasi-positivity, for a partition satisfying the additivity hypothesis.
    Qp {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        scalars: Scalars,
        /// Defaults to singletons.
        #[arg(long)]
        partition: Option<String>,
    },
    /// Positivity.
    Positive {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        scalars: Scalars,
    },
    /// Braid-positivity of a positive diagram.
    BraidPositive {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        scalars: Scalars,
        /// Use the transcribed 12-crossing example statistics instead of an input.
        #[arg(long)]
        twelve_crossing: bool,
    },
    /// Concordance to quasi-positive links for alternating pure braids.
    AltPure(Input),
    /// Family of a positive link with unlinking number at most two.
    SmallUnlinking {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        scalars: Scalars,
    },
}

enum Parsed {
    Braid(BraidWord),
    Diagram(LinkDiagram),
    Entry(Box<CatalogEntry>),
}

fn load_entries(catalog_path: &Option<PathBuf>) -> Result<Vec<CatalogEntry>, Error> {
    match catalog_path {
        Some(p) => catalog::load_catalog(p),
        None => catalog::parse_catalog(catalog::BUNDLED_CATALOG),
    }
}

fn parse_text(text: &str) -> Result<Parsed, Error> {
    let t = text.trim();
    let looks_like_braid =
        t.starts_with('B') && t.find(':').is_some_and(|c| t[1..c].chars().all(|ch| ch.is_ascii_digit()));
    if looks_like_braid {
        Ok(Parsed::Braid(t.parse()?))
    } else {
        Ok(Parsed::Diagram(t.parse()?))
    }
}

impl Input {
    fn parse(&self) -> Result<Parsed, Error> {
        let given = [self.text.is_some(), self.input_file.is_some(), self.example.is_some(), self.entry.is_some()];
        if given.iter().filter(|&&g| g).count() != 1 {
            return Err(Error::BadParameter(
                "give exactly one input: inline text, --input-file, --example or --entry".into(),
            ));
        }
        if let Some(t) = &self.text {
            return parse_text(t);
        }
        if let Some(p) = &self.input_file {
            let t = std::fs::read_to_string(p).map_err(|e| Error::Io(format!("{}: {}", p.display(), e)))?;
            return parse_text(&t);
        }
        if let Some(name) = &self.example {
            return Ok(match builtin_example(name, self.k)? {
                Example::Braid(b) => Parsed::Braid(b),
                Example::Diagram(d) => Parsed::Diagram(d),
            });
        }
        let name = self.entry.as_ref().expect("one input given");
        load_entries(&self.catalog)?
            .into_iter()
            .find(|e| &e.name == name)
            .map(|e| Parsed::Entry(Box::new(e)))
            .ok_or_else(|| Error::BadParameter(format!("no catalog entry named {}", name)))
    }

    fn braid(&self) -> Result<BraidWord, Error> {
        match self.parse()? {
            Parsed::Braid(b) => Ok(b),
            Parsed::Entry(e) => {
                e.parsed_braid()?.ok_or_else(|| Error::MissingInput(format!("{} has no braid", e.name)))
            }
            Parsed::Diagram(_) => Err(Error::BadParameter("expected a braid word".into())),
        }
    }

    fn diagram(&self) -> Result<LinkDiagram, Error> {
        match self.parse()? {
            Parsed::Braid(b) => Ok(knotpos_core::diagram::braid_closure(&b)),
            Parsed::Diagram(d) => Ok(d),
            Parsed::Entry(e) => e.diagram(),
        }
    }

    fn link_data(&self) -> Result<LinkData, Error> {
        match self.parse()? {
            Parsed::Braid(b) => LinkData::from_braid(&b),
            Parsed::Diagram(d) => LinkData::from_diagram(&d),
            Parsed::Entry(e) => e.link_data(),
        }
    }
}

impl Scalars {
    fn apply(&self, mut data: LinkData) -> Result<LinkData, Error> {
        const SRC: &str = "command line";
        if let Some(v) = self.chi4 {
            data = data.with_chi4(v, SRC);
        }
        if let Some(v) = self.unlinking {
            data = data.with_unlinking(v, SRC);
        }
        data = data.with_splitting(self.wsp, self.ssp, SRC);
        if let Some(v) = &self.component_u {
            data = data.with_component_unknotting(v.clone(), SRC)?;
        }
        if let Some(v) = self.completely_split {
            data = data.with_completely_split(v, SRC);
        }
        if let Some(v) = self.slc_upper {
            data = data.with_slc_upper(v, SRC);
        }
        for spec in &self.sl_max {
            let (set, value) = spec
                .split_once('=')
                .ok_or_else(|| Error::BadParameter(format!("--sl-max expects SET=VALUE, got {:?}", spec)))?;
            let set = catalog::parse_component_set(data.components, set).map_err(Error::BadParameter)?;
            let value: i64 =
                value.trim().parse().map_err(|_| Error::BadParameter(format!("bad sl_max value {:?}", value)))?;
            data = data.with_sl_max_upper(set, value, SRC);
        }
        Ok(data)
    }
}

/// Collects `key: value` (text) or `key,value` (csv) records.
struct Out {
    format: Format,
    quiet: bool,
    verbose: bool,
    buf: String,
}

impl Out {
    fn field(&mut self, key: &str, value: impl std::fmt::Display) {
        match self.format {
            Format::Text => writeln!(self.buf, "{}: {}", key, value),
            Format::Csv => writeln!(self.buf, "{},{}", key, csv_escape(&value.to_string())),
        }
        .expect("writing to a string");
    }

    /// A field printed unless --quiet.
    fn detail(&mut self, key: &str, value: impl std::fmt::Display) {
        if !self.quiet {
            self.field(key, value);
        }
    }

    fn report(&mut self, r: &ObstructionReport) {
        match self.format {
            Format::Text => {
                if self.quiet {
                    writeln!(self.buf, "{}", r.verdict).unwrap();
                    return;
                }
                for line in r.to_string().lines() {
                    if self.verbose || !line.starts_with("input:") {
                        writeln!(self.buf, "{}", line).unwrap();
                    }
                }
            }
            Format::Csv => {
                if self.buf.is_empty() {
                    self.buf.push_str("test,verdict,kind,label,lhs,relation,rhs,holds\n");
                }
                writeln!(self.buf, "{},{},verdict,{},,,,", r.test.name(), r.verdict, csv_escape(&r.conclusion))
                    .unwrap();
                if self.quiet {
                    return;
                }
                for c in &r.checks {
                    let rel = match c.relation {
                        knotpos_core::obstruct::Relation::Le => "<=",
                        knotpos_core::obstruct::Relation::Ge => ">=",
                        knotpos_core::obstruct::Relation::Eq => "=",
                    };
                    let kind = match c.role {
                        knotpos_core::obstruct::CheckRole::Condition => "check",
                        knotpos_core::obstruct::CheckRole::Hypothesis => "hypothesis",
                    };
                    writeln!(
                        self.buf,
                        "{},{},{},{},{},{},{},{}",
                        r.test.name(),
                        r.verdict,
                        kind,
                        csv_escape(&c.label),
                        c.lhs,
                        rel,
                        c.rhs,
                        c.holds
                    )
                    .unwrap();
                }
                for m in &r.missing {
                    writeln!(self.buf, "{},{},missing,{},,,,", r.test.name(), r.verdict, csv_escape(m)).unwrap();
                }
            }
        }
    }
}

fn csv_escape(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn words(w: &[i32]) -> String {
    w.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" ")
}

fn sets(cycles: &[Vec<usize>]) -> String {
    cycles
        .iter()
        .map(|c| format!("{{{}}}", c.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(",")))
        .collect::<Vec<_>>()
        .join(" ")
}

fn matrix(m: &LinkingMatrix) -> String {
    m.rows()
        .iter()
        .map(|r| format!("[{}]", r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")))
        .collect::<Vec<_>>()
        .join(" ")
}

fn run(cli: &Cli) -> Result<String, Error> {
    let mut out = Out { format: cli.format, quiet: cli.quiet, verbose: cli.verbose, buf: String::new() };
    match &cli.command {
        Command::Braid(cmd) => match cmd {
            BraidCmd::Profile(input) => {
                let b = input.braid()?;
                let p = braid_profile(&b);
                out.field("braid", &b);
                out.detail("strands", p.strands);
                out.detail("length", p.length);
                out.field("writhe", p.writhe);
                out.field("self_linking", p.self_linking);
                out.detail(
                    "permutation",
                    words(&p.permutation.images().iter().map(|&i| i as i32 + 1).collect::<Vec<_>>()),
                );
                out.field("components", sets(&p.component_cycles));
                out.detail("linking_matrix", matrix(&braid_linking_matrix(&b)?));
                out.detail("positive", p.is_positive);
                out.detail("pure", p.is_pure);
                out.detail("alternating", p.is_alternating);
                out.detail("nonsplit_alternating", p.is_nonsplit_alternating);
            }
            BraidCmd::Sub { input, keep } => {
                let b = input.braid()?;
                let zero_based: Vec<usize> = keep
                    .iter()
                    .map(|&k| k.checked_sub(1).ok_or(Error::UnknownComponent(0)))
                    .collect::<Result<_, _>>()?;
                out.field("sub_braid", sub_braid(&b, &zero_based)?);
            }
            BraidCmd::Embed(input) => {
                let b = input.braid()?;
                let e = embed_quasipositive(&b);
                out.field("output", &e.output);
                for r in &e.insertions {
                    out.detail(
                        "insertion",
                        format!("after letter {} (-{}): {}", r.letter_index + 1, r.generator, words(&r.word)),
                    );
                }
                if !out.quiet {
                    for f in &e.decomposition {
                        let text = match f {
                            Factor::Positive(g) => format!("{}", g),
                            Factor::Conjugated { conjugator, core, .. } => {
                                format!("({}) [{}] ({})^-1", words(conjugator), words(core), words(conjugator))
                            }
                        };
                        out.field("factor", text);
                    }
                }
                out.detail("witnesses_hold", e.decomposition.iter().all(Factor::witness_holds));
                out.detail("new_component_linking", e.expected_linking());
            }
            BraidCmd::Keylemma { input, partition } => {
                let b = input.braid()?;
                let p = ComponentPartition::parse(b.component_cycles().len(), partition)?;
                let r = key_lemma_identity(&b, &p)?;
                out.field("partition", &p);
                out.detail("self_linking", r.self_linking);
                out.detail(
                    "block_self_linking",
                    words(&r.block_self_linking.iter().map(|&x| x as i32).collect::<Vec<_>>()),
                );
                out.field("lhs", r.lhs);
                out.field("rhs", r.rhs);
                out.field("holds", r.holds);
            }
        },
        Command::Diagram(cmd) => match cmd {
            DiagramCmd::Profile(input) => {
                let d = input.diagram()?;
                let p = diagram_profile(&d);
                out.detail("pd", &d);
                out.field("components", p.components);
                out.field("crossings", p.crossings);
                out.field("writhe", p.writhe);
                out.field("seifert_circles", p.seifert_circles);
                out.field("s_plus", p.s_plus);
                out.field("s_minus", p.s_minus);
                out.field("split_components", p.split_components);
                out.field("linking_matrix", matrix(&p.linking_matrix));
                for m in &p.mixed {
                    out.detail("mixed", format!("{},{}: +{} -{}", m.i + 1, m.j + 1, m.positive, m.negative));
                }
                out.detail("positive", p.is_positive);
                out.detail("alternating", p.is_alternating);
                out.detail("simply_linked", p.is_simply_linked);
                out.detail("connected", p.is_connected);
            }
            DiagramCmd::Seifert(input) => {
                let d = input.diagram()?;
                let a = seifert_analysis(&d);
                out.field("homogeneous", a.is_homogeneous);
                out.field("reduced_graph_is_tree", a.reduced_is_tree);
                out.field("fibred", format!("{:?}", a.fibred).to_lowercase());
            }
        },
        Command::Nu(NuCmd::Bounds { input, chi4 }) => {
            let parsed = input.parse()?;
            let (d, braid) = match parsed {
                Parsed::Braid(b) => (knotpos_core::diagram::braid_closure(&b), Some(b)),
                Parsed::Diagram(d) => (d, None),
                Parsed::Entry(e) => (e.diagram()?, None),
            };
            let n = nu_bounds(&d)?;
            out.field("lower2", n.lower2);
            out.field("upper2", n.upper2);
            out.field("exact", n.exact);
            out.detail("upper_certified", n.upper_certified);
            out.detail("verbatim_upper2", n.verbatim_upper2);
            if n.exact && n.verbatim_conflict() {
                out.detail("note", "printed upper formula is below the exact value on this diagram");
            }
            if let Some(b) = braid {
                let bb = nu_lower_from_braid(&b);
                out.detail("braid_lower2", bb.lower2());
                let chain = bennequin_chain(&b, &n, *chi4)?;
                out.detail("self_linking", chain.self_linking);
                if let Some(s) = chain.slack_braid {
                    out.detail("slack_sl", s);
                }
                if let Some(s) = chain.slack_chi4 {
                    out.detail("slack_chi4", s);
                }
            }
            if d.is_positive() {
                out.detail("unlinking_if_positive_braid", positive_unlinking(&d, UnlinkingMode::Whole)?);
            }
            if out.verbose {
                for p in &n.provenance {
                    out.field("source", p);
                }
            }
        }
        Command::Obstruct(cmd) => match cmd {
            ObstructCmd::QpConc { input, scalars, partition } => {
                let data = scalars.apply(input.link_data()?)?;
                let parts = if partition.is_empty() {
                    Partitions::All
                } else {
                    Partitions::Explicit(
                        partition
                            .iter()
                            .map(|p| ComponentPartition::parse(data.components, p))
                            .collect::<Result<_, _>>()?,
                    )
                };
                out.report(&check_concordance_qp(&data, &parts)?);
            }
            ObstructCmd::Qp { input, scalars, partition } => {
                let data = scalars.apply(input.link_data()?)?;
                let p = match partition {
                    Some(p) => ComponentPartition::parse(data.components, p)?,
                    None => ComponentPartition::singletons(data.components),
                };
                out.report(&check_qp(&data, &p)?);
            }
            ObstructCmd::Positive { input, scalars } => {
                let data = scalars.apply(input.link_data()?)?;
                out.report(&check_positive(&data)?);
            }
            ObstructCmd::BraidPositive { input, scalars, twelve_crossing } => {
                if *twelve_crossing {
                    let stats = twelve_crossing_stats();
                    out.report(&check_positive_braid_stats(&stats, scalars.unlinking));
                    out.detail(
                        "per_component_unlinking",
                        knotpos_core::invariants::positive_unlinking_stats(&stats, UnlinkingMode::PerComponent)?,
                    );
                } else {
                    let data = scalars.apply(input.link_data()?)?;
                    out.report(&check_positive_braid(&data)?);
                }
            }
            ObstructCmd::AltPure(input) => {
                let v = classify_alt_pure(&input.braid()?)?;
                out.field("verdict", if v.qp_concordant { "QP_CONCORDANT" } else { "NOT_QP_CONCORDANT" });
                for f in &v.factors {
                    let sign = if f.positive { "" } else { "-" };
                    out.detail(
                        "factor",
                        format!("T(2,{}{}) on strands {},{}", sign, f.crossings, f.strands[0], f.strands[1]),
                    );
                }
                for u in &v.unknots {
                    out.detail("unknot", format!("strand {}", u));
                }
                for p in &v.large_pieces {
                    out.detail("piece", format!("{} strands: {}", p.len(), sets(std::slice::from_ref(p))));
                }
            }
            ObstructCmd::SmallUnlinking { input, scalars } => {
                let data = scalars.apply(input.link_data()?)?;
                let family = classify_small_unlinking(&data)?;
                out.field("family", family.label());
                if let knotpos_core::obstruct::UnlinkingFamily::Contradiction(why) = &family {
                    out.detail("reason", why);
                }
            }
        },
        Command::Table { catalog } => {
            let entries = load_entries(catalog)?;
            let analyses = table_rows(&entries)?;
            let rows: Vec<_> = analyses.iter().map(|a| a.row.clone()).collect();
            let format = match cli.format {
                Format::Text => TableFormat::Text,
                Format::Csv => TableFormat::Csv,
            };
            out.buf.push_str(&render_table(&rows, format));
            if cli.verbose {
                for a in &analyses {
                    for (label, r) in &a.reports {
                        out.buf.push_str(&format!("\n# {} {}\n{}", a.name, label, r));
                    }
                }
            }
        }
        Command::Example { name, k } => match builtin_example(name, *k)? {
            Example::Braid(b) => out.field("braid", b),
            Example::Diagram(d) => out.field("pd", d),
        },
    }
    Ok(out.buf)
}

fn exit_code(e: &Error) -> u8 {
    match e.kind() {
        ErrorKind::Parse => 2,
        ErrorKind::Precondition => 3,
        ErrorKind::Inconsistency => 4,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            print!("{}", e);
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let text = e.to_string();
            let first = text.lines().next().unwrap_or("").trim_start_matches("error: ");
            eprintln!("error[usage]: {}", first);
            return ExitCode::from(2);
        }
    };
    match run(&cli) {
        Ok(text) => {
            print!("{}", text);
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error[{}]: {}", e.tag(), e.to_string().replace('\n', " "));
            ExitCode::from(exit_code(&e))
        }
    }
}
