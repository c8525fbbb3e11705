use std::fmt::Write as _;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use primlat::dot::hasse_dot;
use primlat::dposet::dposet_check;
use primlat::enumerate::{census, enumerate_lattices};
use primlat::negation::classify_negation;
use primlat::ortho::{attach_ortho, find_orthocomplementations};
use primlat::primorial::{parse_choices, render_carrier, PrimorialLattice, Strategy};
use primlat::probability::{from_atom_weights, validate_probability};
use primlat::projection::{Method, Projector};
use primlat::reduce::{carrier_difference, reduce};
use primlat::seqproc::{analyze, gsp_preset, load_fasta, render_level, GspPreset};
use primlat::text::{parse_lattice_text, LatticeDoc};
use primlat::valuation::{height_valuation, LatticeMetric};
use primlat::{classify, format_mask, parse_mask_list, FiniteLattice, Level, Mask, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Parser)]
#[command(name = "primlat", version, about = "Finite lattices, orthocomplements and primorial decompositions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Structural report for a lattice file.
    Classify { file: PathBuf },
    /// Validate the `ortho` stanza, or list every orthocomplementation when it is absent.
    Ortho { file: PathBuf },
    /// Negation classes, logic kinds, orthogonality and center.
    Negation { file: PathBuf },
    /// Distance table from the `valuation` stanza (height when absent).
    Metric {
        file: PathBuf,
        /// Centre of a ball to list.
        #[arg(long, requires = "radius")]
        ball: Option<String>,
        #[arg(long)]
        radius: Option<Rational>,
        /// List the open ball instead of the closed one.
        #[arg(long)]
        open: bool,
    },
    /// Members of the reduction of the `n`-atom powerset.
    Reduce {
        #[arg(long)]
        n: usize,
        /// Allow the backtracking search above five atoms.
        #[arg(long)]
        best_effort: bool,
    },
    /// The primorial family generated from the `n`-atom powerset.
    Primorial(FamilyArgs),
    /// D-poset laws for bounded difference on the family's Boolean chain.
    Dposet(FamilyArgs),
    /// Project a sequence of subset literals onto one family member.
    Project {
        #[command(flatten)]
        family: FamilyArgs,
        /// Member name such as `L2` or `D3`.
        #[arg(long)]
        level: String,
        #[arg(long, default_value = "sasaki")]
        method: Method,
        /// Sequence file; standard input when omitted.
        input: Option<PathBuf>,
    },
    /// Validate the `prob` stanza and compare additivity definitions.
    Probability {
        file: PathBuf,
        /// Ignore the stanza and draw rational atom weights from this seed.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Multi-level analysis of FASTA records under a preset alphabet and chain.
    Analyze {
        #[arg(long)]
        preset: GspPreset,
        #[arg(long)]
        fasta: PathBuf,
        /// Projection methods to include; all when omitted.
        #[arg(long = "method")]
        methods: Vec<Method>,
        /// Window size for content fractions in the summary.
        #[arg(long, default_value_t = 100)]
        window: usize,
    },
    /// Count unlabelled lattices on `n` elements.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Also print each lattice in the text format.
        #[arg(long)]
        list: bool,
    },
    /// Hasse diagram in DOT.
    Hasse {
        #[arg(required_unless_present = "primorial")]
        file: Option<PathBuf>,
        /// Draw the family poset of the `N`-atom primorial lattice instead.
        #[arg(long, value_name = "N")]
        primorial: Option<usize>,
    },
}

#[derive(Args)]
struct FamilyArgs {
    #[arg(long)]
    n: usize,
    /// Chain choices, one line per level from L(N-1) down to L1.
    #[arg(long)]
    choices: Option<PathBuf>,
    #[arg(long)]
    best_effort: bool,
}

enum Failure {
    /// Input is well formed but fails a check.
    Invalid(String),
    Usage(String),
}

type Outcome = Result<String, Failure>;

fn invalid(e: impl std::fmt::Display) -> Failure {
    Failure::Invalid(e.to_string())
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn load_doc(path: &Path) -> Result<LatticeDoc, Failure> {
    parse_lattice_text(&read(path)?).map_err(|e| Failure::Invalid(format!("{}:{e}", path.display())))
}

fn load_lattice(path: &Path) -> Result<(LatticeDoc, FiniteLattice), Failure> {
    let doc = load_doc(path)?;
    let l = doc.lattice().map_err(invalid)?;
    Ok((doc, l))
}

fn family(args: &FamilyArgs) -> Result<PrimorialLattice, Failure> {
    let strategy = match &args.choices {
        Some(p) => parse_choices(&read(p)?).map_err(|e| Failure::Invalid(format!("{}:{e}", p.display())))?,
        None => Strategy::CanonicalFirst,
    };
    PrimorialLattice::generate(args.n, &strategy, args.best_effort).map_err(invalid)
}

fn names(l: &FiniteLattice, items: &[usize]) -> String {
    items.iter().map(|&i| l.label(i)).collect::<Vec<_>>().join(" ")
}

fn run(cmd: Command) -> Outcome {
    let mut out = String::new();
    match cmd {
        Command::Classify { file } => {
            let (_, l) = load_lattice(&file)?;
            out = classify(&l).render(&l);
        }
        Command::Ortho { file } => {
            let (doc, l) = load_lattice(&file)?;
            match doc.ortho {
                Some(perp) => {
                    let o = attach_ortho(l, perp).map_err(invalid)?;
                    out.push_str(&o.render());
                    for (name, r) in [("sasaki laws", o.sasaki_laws()), ("relation laws", o.relation_laws())] {
                        let _ = writeln!(out, "{name}: {}", if r.is_ok() { "ok" } else { "violated" });
                    }
                    let forms = o.symmetry_forms();
                    let _ = writeln!(out, "symmetric commutes: {}", forms[0]);
                    let _ = writeln!(out, "elkan law: {}", o.elkan_law());
                }
                None => {
                    let all = find_orthocomplementations(&l);
                    let _ = writeln!(out, "orthocomplementations: {}", all.len());
                    for perp in all {
                        let pairs: Vec<String> = l
                            .elements()
                            .filter(|&x| x <= perp[x])
                            .map(|x| format!("{}:{}", l.label(x), l.label(perp[x])))
                            .collect();
                        let _ = writeln!(out, "ortho {}", pairs.join(" "));
                    }
                }
            }
        }
        Command::Negation { file } => {
            let (doc, l) = load_lattice(&file)?;
            let neg = doc
                .negation
                .or(doc.ortho)
                .ok_or_else(|| Failure::Invalid("no `negation` or `ortho` stanza".into()))?;
            let nm = classify_negation(&l, &neg);
            out.push_str(&nm.render());
            let rel = nm.relations();
            let pairs: Vec<String> = rel
                .orthogonal_unordered()
                .iter()
                .map(|&(a, b)| format!("{}|{}", l.label(a), l.label(b)))
                .collect();
            let _ = writeln!(out, "orthogonal: {}", pairs.join(" "));
            let _ = writeln!(out, "center: {}", names(&l, &rel.center));
        }
        Command::Metric { file, ball, radius, open } => {
            let (doc, l) = load_lattice(&file)?;
            let v = doc.valuation.unwrap_or_else(|| height_valuation(&l));
            let d = LatticeMetric::from_valuation(&l, v).map_err(invalid)?;
            out.push_str(&d.render());
            if let (Some(c), Some(r)) = (ball, radius) {
                let x = l.index_of(&c).ok_or_else(|| Failure::Usage(format!("unknown element `{c}`")))?;
                let members = if open { d.open_ball(x, &r) } else { d.closed_ball(x, &r) }.map_err(invalid)?;
                let _ = writeln!(out, "ball\t{c}\t{r}\t{}", names(&l, &members));
            }
        }
        Command::Reduce { n, best_effort } => {
            if !(1..=primlat::boolean::MAX_CARRIER_ATOMS).contains(&n) {
                return Err(Failure::Usage(format!("--n must be between 1 and {}", primlat::boolean::MAX_CARRIER_ATOMS)));
            }
            let members = reduce(&Level::powerset(n), best_effort).map_err(invalid)?;
            for m in &members {
                let _ = writeln!(out, "{}", render_carrier(m.carrier()));
            }
            let _ = writeln!(out, "count: {}", members.len());
        }
        Command::Primorial(args) => {
            let p = family(&args)?;
            out.push_str(&p.render());
            let roles = p.roles();
            let fam = p.family();
            let _ = writeln!(out, "roles\tbottom {}\ty {}\tx {}", fam.label(roles.bottom), names(fam, &roles.y), names(fam, &roles.x));
        }
        Command::Dposet(args) => {
            let p = family(&args)?;
            let items: Vec<Vec<Mask>> = p.chain().iter().map(|l| l.carrier().to_vec()).collect();
            let full = p.top().full();
            let subset = |a: &Vec<Mask>, b: &Vec<Mask>| a.iter().all(|m| b.binary_search(m).is_ok());
            let r = dposet_check(&items, subset, |y, x| carrier_difference(y, x, 0, full));
            let _ = writeln!(out, "triples: {}", r.triples);
            for law in primlat::dposet::LAWS {
                match r.violation(law) {
                    None => {
                        let _ = writeln!(out, "{law}: ok");
                    }
                    Some(v) => {
                        let (x, y, z) = v.witness;
                        let _ = writeln!(out, "{law}: violated at L{} L{} L{}", x + 1, y + 1, z + 1);
                    }
                }
            }
            if !r.passed() {
                return Err(Failure::Invalid(out));
            }
        }
        Command::Project { family: args, level, method, input } => {
            let p = family(&args)?;
            let target = p.level(&level).map_err(|e| Failure::Usage(e.to_string()))?;
            let (src, origin) = match &input {
                Some(path) => (read(path)?, path.display().to_string()),
                None => {
                    let mut s = String::new();
                    io::stdin().read_to_string(&mut s).map_err(|e| Failure::Usage(e.to_string()))?;
                    (s, "<stdin>".to_string())
                }
            };
            let seq = parse_mask_list(&src).map_err(|e| Failure::Invalid(format!("{origin}:{e}")))?;
            let pr = Projector::new(&p);
            let projected = pr.project_sequence(target, &seq, method).map_err(invalid)?;
            let _ = writeln!(out, "position\tinput\t{level}:{method}");
            for (i, (x, y)) in seq.iter().zip(&projected).enumerate() {
                let _ = writeln!(out, "{}\t{}\t{}", i + 1, format_mask(*x), format_mask(*y));
            }
        }
        Command::Probability { file, seed } => {
            let (doc, l) = load_lattice(&file)?;
            let neg = doc
                .negation
                .or(doc.ortho)
                .ok_or_else(|| Failure::Invalid("no `negation` or `ortho` stanza".into()))?;
            let values = match seed {
                Some(s) => {
                    let mut rng = ChaCha8Rng::seed_from_u64(s);
                    let w: Vec<Rational> =
                        l.atoms().iter().map(|_| Rational::new(rng.gen_range(1..=50), rng.gen_range(1..=50))).collect();
                    if w.is_empty() {
                        return Err(Failure::Invalid("lattice has no atoms to weight".into()));
                    }
                    from_atom_weights(&l, &w)
                }
                None => doc.prob.ok_or_else(|| Failure::Invalid("no `prob` stanza".into()))?,
            };
            let pa = validate_probability(&l, &neg, values).map_err(invalid)?;
            let assignment: Vec<String> =
                l.elements().map(|x| format!("{}={}", l.label(x), pa.p(x))).collect();
            let _ = writeln!(out, "prob {}", assignment.join(" "));
            out.push_str(&pa.render_report());
        }
        Command::Analyze { preset, fasta, methods, window } => {
            if window == 0 {
                return Err(Failure::Usage("--window must be positive".into()));
            }
            let methods = if methods.is_empty() { Method::ALL.to_vec() } else { methods };
            let (alphabet, fam) = gsp_preset(preset);
            let file = std::fs::File::open(&fasta).map_err(|e| Failure::Usage(format!("{}: {e}", fasta.display())))?;
            let records = load_fasta(io::BufReader::new(file), &alphabet)
                .map_err(|e| Failure::Invalid(format!("{}: {e}", fasta.display())))?;
            let mut summary = format!("preset {preset}\n");
            for l in fam.chain() {
                let _ = writeln!(summary, "L{}\t{}", l.rank(), render_level(l, &alphabet));
            }
            let targets = [alphabet.join_of("AT").map_err(invalid)?, alphabet.join_of("CG").map_err(invalid)?];
            let mut header_done = false;
            for rec in &records {
                let py = analyze(&fam, &alphabet, &rec.tokens, &methods).map_err(invalid)?;
                let tsv = py.to_tsv(&alphabet);
                let mut lines = tsv.lines();
                let header = lines.next().unwrap_or_default();
                if !header_done {
                    let _ = writeln!(out, "record\t{header}");
                    header_done = true;
                }
                for line in lines {
                    let _ = writeln!(out, "{}\t{line}", rec.name);
                }
                let _ = writeln!(summary, "record {} length {}", rec.name, rec.tokens.len());
                summary.push_str(&py.summary(&alphabet, &targets, window));
            }
            eprint!("{summary}");
        }
        Command::Enumerate { n, list } => {
            let ls = enumerate_lattices(n).map_err(|e| Failure::Usage(e.to_string()))?;
            let c = census(&ls);
            if list {
                for (i, l) in ls.iter().enumerate() {
                    let doc = LatticeDoc {
                        name: format!("n{n}_{}", i + 1),
                        poset: l.poset().clone(),
                        ortho: None,
                        valuation: None,
                        prob: None,
                        negation: None,
                    };
                    out.push_str(&doc.to_text());
                    out.push('\n');
                }
            }
            let _ = writeln!(out, "lattices: {} modular: {} distributive: {}", c.lattices, c.modular, c.distributive);
            eprintln!(
                "uniquely complemented: {} multiply complemented: {} non-complemented: {}",
                c.uniquely_complemented, c.multiply_complemented, c.non_complemented
            );
        }
        Command::Hasse { file, primorial } => match (file, primorial) {
            (_, Some(n)) => {
                let p = PrimorialLattice::generate(n, &Strategy::CanonicalFirst, false).map_err(invalid)?;
                out = hasse_dot(p.family().poset(), &format!("primorial{n}"));
            }
            (Some(f), None) => {
                let doc = load_doc(&f)?;
                let name = if doc.name.is_empty() { "lattice".to_string() } else { doc.name.clone() };
                out = hasse_dot(&doc.poset, &name);
            }
            (None, None) => return Err(Failure::Usage("give a lattice file or --primorial".into())),
        },
    }
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Invalid(msg)) => {
            eprintln!("error: {}", msg.trim_end());
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
    }
}
