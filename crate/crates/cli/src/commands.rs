use std::io::Read as _;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use cigraph::chordal::{recognize_chordal_ci, ChordalOptions, ChordalVerdict, SearchEngine};
use cigraph::cograph::{recognize_ci_cograph, recognize_cograph, CographRecognition, CographVerdict, Cotree};
use cigraph::format::{self, GraphFormat, PosetDocument};
use cigraph::generate;
use cigraph::graph::Graph;
use cigraph::oracle::{self, OracleCache};
use cigraph::poset::{CertificateMismatch, Poset};
use cigraph::report::{self, Report, Verdict};

use crate::{
    Command, GenArgs, GenKind, GraphInput, InputFormat, OracleArgs, OracleLimits, OutputFormat, Pipeline,
    RecognizeArgs, VerifyArgs,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_REJECTED: u8 = 1;
pub const EXIT_ERROR: u8 = 2;

pub fn run(command: Command) -> Result<u8> {
    match command {
        Command::Recognize(args) => recognize(&args, false),
        Command::Certify(args) => recognize(&args, true),
        Command::Verify(args) => verify(&args),
        Command::Oracle(args) => oracle_command(&args),
        Command::Gen(args) => gen(&args),
    }
}

fn read_text(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).context("reading standard input")?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn read_graph(input: &GraphInput) -> Result<Graph> {
    let text = read_text(&input.input)?;
    let by_extension = input.input.extension().is_some_and(|e| e == "g6");
    let fmt = match input.input_format {
        Some(InputFormat::Graph6) => GraphFormat::Graph6,
        Some(InputFormat::EdgeList) => GraphFormat::EdgeList,
        None if by_extension => GraphFormat::Graph6,
        None => GraphFormat::EdgeList,
    };
    format::parse_graph(&text, fmt).with_context(|| format!("parsing {}", input.input.display()))
}

fn write_out(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Verdicts of every pipeline that ran, plus the first certificate found.
struct Outcome {
    report: Report,
    certificate: Option<Poset>,
    cotree: Option<Cotree>,
}

fn chordal(g: &Graph, args: &RecognizeArgs) -> Result<ChordalVerdict> {
    let opts = ChordalOptions {
        engine: if args.mcs { SearchEngine::Mcs } else { SearchEngine::LexBfs },
        exact_max_n: args.exact_max_n,
        ..ChordalOptions::default()
    };
    recognize_chordal_ci(g, &opts).map_err(|e| anyhow!("chordal pipeline: {e}"))
}

fn cograph(g: &Graph) -> Result<CographVerdict> {
    recognize_ci_cograph(g).map_err(|e| anyhow!("cograph pipeline: {e}"))
}

fn oracle_answer(g: &Graph, limits: &OracleLimits) -> Result<Option<Poset>> {
    if limits.oracle_max_n > oracle::MAX_ENUMERATION_N {
        bail!("--oracle-max-n may be at most {}", oracle::MAX_ENUMERATION_N);
    }
    if g.n() > limits.oracle_max_n {
        bail!("oracle limited to {} vertices, graph has {} (raise --oracle-max-n)", limits.oracle_max_n, g.n());
    }
    let mut cache = match &limits.cache {
        Some(path) => Some(OracleCache::load(path)?),
        None => None,
    };
    if let Some(hit) = cache.as_ref().and_then(|c| c.get(g)) {
        return Ok(hit);
    }
    let answer = oracle::is_ci_graph_bruteforce_parallel(g, limits.oracle_max_n, limits.workers)?;
    if let (Some(c), Some(path)) = (cache.as_mut(), &limits.cache) {
        c.insert(g, answer.as_ref());
        c.save(path)?;
    }
    Ok(answer)
}

fn analyse(g: &Graph, args: &RecognizeArgs) -> Result<Outcome> {
    let mut out = Outcome { report: Report::new(g, Vec::new()), certificate: None, cotree: None };
    if !g.is_connected() {
        let pipeline = match args.pipeline {
            Pipeline::Cograph => report::Pipeline::Cograph,
            Pipeline::Oracle => report::Pipeline::Oracle,
            Pipeline::Auto | Pipeline::Chordal => report::Pipeline::Chordal,
        };
        out.report.verdicts.push(Verdict::disconnected(pipeline, g.components().len()));
        return Ok(out);
    }
    let push_chordal = |out: &mut Outcome, v: &ChordalVerdict| {
        out.report.verdicts.push(Verdict::from_chordal(g, v));
        if let (ChordalVerdict::Ci { certificate, .. }, None) = (v, &out.certificate) {
            out.certificate = Some(certificate.clone());
        }
    };
    let push_cograph = |out: &mut Outcome, v: &CographVerdict| {
        out.report.verdicts.push(Verdict::from_cograph(g, v));
        match v {
            CographVerdict::Ci { certificate, cotree, .. } => {
                out.certificate.get_or_insert_with(|| certificate.clone());
                out.cotree = Some(cotree.clone());
            }
            CographVerdict::NotCi { cotree, .. } => out.cotree = Some(cotree.clone()),
            CographVerdict::NotCograph { .. } => {}
        }
    };
    match args.pipeline {
        Pipeline::Chordal => push_chordal(&mut out, &chordal(g, args)?),
        Pipeline::Cograph => push_cograph(&mut out, &cograph(g)?),
        Pipeline::Oracle => {
            let found = oracle_answer(g, &args.oracle)?;
            out.report.verdicts.push(Verdict::from_oracle(g, found.as_ref()));
            out.certificate = found;
        }
        Pipeline::Auto => {
            let c = chordal(g, args)?;
            push_chordal(&mut out, &c);
            let is_chordal = !matches!(c, ChordalVerdict::NotChordal { .. });
            let is_cograph = matches!(recognize_cograph(g), CographRecognition::Cograph(_));
            if !is_chordal || is_cograph {
                let k = cograph(g)?;
                if is_chordal && is_cograph && k.is_ci() != c.is_ci() {
                    bail!("internal inconsistency: chordal and cograph pipelines disagree on this chordal cograph");
                }
                push_cograph(&mut out, &k);
            }
        }
    }
    Ok(out)
}

fn recognize(args: &RecognizeArgs, certify: bool) -> Result<u8> {
    let g = read_graph(&args.graph)?;
    let out = analyse(&g, args)?;
    let label = |v: usize| g.label(v);
    let accepted = out.report.is_ci();
    if certify {
        let Some(p) = &out.certificate else {
            eprint!("{}", out.report.to_text());
            return Ok(EXIT_REJECTED);
        };
        let text = match args.format {
            OutputFormat::Text => PosetDocument::from_poset(p, label).to_text(),
            OutputFormat::Json => PosetDocument::from_poset(p, label).to_json() + "\n",
            OutputFormat::Dot => format::hasse_dot(p, label),
        };
        write_out(args.output.as_deref(), &text)?;
        return Ok(EXIT_OK);
    }
    let text = match args.format {
        OutputFormat::Text => out.report.to_text(),
        OutputFormat::Json => out.report.to_json() + "\n",
        OutputFormat::Dot => match (&out.certificate, &out.cotree) {
            (Some(p), _) => format::hasse_dot(p, label),
            (None, Some(t)) => t.to_dot(label),
            (None, None) => format::graph_dot(&g),
        },
    };
    write_out(args.output.as_deref(), &text)?;
    Ok(if accepted { EXIT_OK } else { EXIT_REJECTED })
}

fn oracle_command(args: &OracleArgs) -> Result<u8> {
    let g = read_graph(&args.graph)?;
    let found = oracle_answer(&g, &args.limits)?;
    let verdict = Verdict::from_oracle(&g, found.as_ref());
    let label = |v: usize| g.label(v);
    let text = match args.format {
        OutputFormat::Text => verdict.to_text(),
        OutputFormat::Json => verdict.to_json() + "\n",
        OutputFormat::Dot => match &found {
            Some(p) => format::hasse_dot(p, label),
            None => format::graph_dot(&g),
        },
    };
    write_out(args.output.as_deref(), &text)?;
    Ok(if found.is_some() { EXIT_OK } else { EXIT_REJECTED })
}

fn verify(args: &VerifyArgs) -> Result<u8> {
    let g = read_graph(&args.graph)?;
    let doc =
        PosetDocument::parse(&read_text(&args.poset)?).with_context(|| format!("parsing {}", args.poset.display()))?;
    let elements = doc.to_poset().with_context(|| format!("reading {}", args.poset.display()))?.n();
    if elements != g.n() {
        println!("mismatch: {}", CertificateMismatch::VertexCount { graph: g.n(), poset: elements });
        return Ok(EXIT_REJECTED);
    }
    let p = doc.to_poset_on(&g).with_context(|| format!("matching {} to the graph", args.poset.display()))?;
    match p.check_ci_graph(&g) {
        Ok(()) => {
            println!("ok: the poset certifies the graph");
            Ok(EXIT_OK)
        }
        Err(CertificateMismatch::Pair { a, b, graph_edge }) => {
            let (has, lacks) = if graph_edge { ("graph", "poset") } else { ("poset", "graph") };
            println!(
                "mismatch at pair ({}, {}): the {has} joins them but the {lacks} does not",
                g.label(a),
                g.label(b)
            );
            Ok(EXIT_REJECTED)
        }
        Err(e) => {
            println!("mismatch: {e}");
            Ok(EXIT_REJECTED)
        }
    }
}

fn gen(args: &GenArgs) -> Result<u8> {
    let mut rng = generate::seeded(args.seed);
    let n = args.size;
    let (g, poset): (Graph, Option<Poset>) = match args.kind {
        GenKind::Path => (generate::path(n)?, None),
        GenKind::Complete => (generate::complete(n)?, None),
        GenKind::Fan => (generate::fan(n)?, None),
        GenKind::BowtieChain => {
            let (g, p) = generate::bowtie_chain(n)?;
            (g, Some(p))
        }
        GenKind::RandomCi => {
            let p = generate::random_poset(n, &mut rng)?;
            (p.ci_graph(), Some(p))
        }
        GenKind::RandomChordalCi => {
            let (g, p) = generate::random_chordal_ci(n, &mut rng)?;
            (g, Some(p))
        }
        GenKind::RandomChordal => (generate::random_chordal(n, &mut rng)?, None),
        GenKind::RandomCiCograph => (generate::cotree_graph(&generate::random_tc_cotree(n, &mut rng)?), None),
        GenKind::RandomCograph => (generate::cotree_graph(&generate::random_connected_cotree(n, &mut rng)?), None),
    };
    if let Some(path) = &args.poset_out {
        let p = poset.as_ref().ok_or_else(|| anyhow!("this generator has no generating poset"))?;
        let doc = PosetDocument::from_poset(p, |v| g.label(v));
        std::fs::write(path, doc.to_json() + "\n").with_context(|| format!("writing {}", path.display()))?;
    }
    let text = match args.graph_format {
        InputFormat::EdgeList => format::write_edge_list(&g),
        InputFormat::Graph6 => format::to_graph6(&g) + "\n",
    };
    write_out(args.output.as_deref(), &text)?;
    Ok(EXIT_OK)
}
