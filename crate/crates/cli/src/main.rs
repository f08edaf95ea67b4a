use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use relalg::bundles::{bundle_census, cohesion_reciprocity, pair_lists, relational_system, Bond};
use relalg::decomp::{decompose, DecompMode};
use relalg::dot::{bipartite_dot, cayley_dot, hasse_dot, multigraph_dot};
use relalg::fca::concept_lattice;
use relalg::io;
use relalg::netcore::MultiplexNetwork;
use relalg::order::{render_table, Poset};
use relalg::positional::{build_relation_box, cumulated_hierarchy, reduce_network, DEFAULT_K};
use relalg::semigroup::{build_semigroup, equations, generate_strings, string_partial_order, TableFormat, DEFAULT_MAX_ELEMENTS};
use relalg::signed::{
    balance_closure, evaluate_balance, make_signed, semiring_powers, SemiringMode, SemiringSpec, SignedMatrix,
};
use relalg::{Error, Result};

macro_rules! wln {
    ($o:expr) => {
        $o.push('\n')
    };
    ($o:expr, $($arg:tt)*) => {{
        use std::fmt::Write as _;
        let _ = writeln!($o, $($arg)*);
    }};
}

macro_rules! w {
    ($o:expr, $($arg:tt)*) => {{
        use std::fmt::Write as _;
        let _ = write!($o, $($arg)*);
    }};
}

#[derive(Parser)]
#[command(name = "relalg", version, about = "Algebraic analysis of multiplex, signed and two-mode networks")]
struct Cli {
    /// Write the command's artifact (JSON or DOT) to this file.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Bundle census and bond statistics.
    Census {
        network: PathBuf,
        #[command(flatten)]
        sel: BondSelection,
    },
    /// Relational system restricted to the selected bond types.
    Relsys {
        network: PathBuf,
        #[command(flatten)]
        sel: BondSelection,
    },
    /// Semigroup of relations generated by the network.
    Semigroup {
        network: PathBuf,
        #[arg(long)]
        symbolic: bool,
        #[arg(long)]
        transposes: bool,
        /// Also list equations among words up to this length.
        #[arg(long, value_name = "K")]
        equations: Option<usize>,
    },
    /// Classes of words with equal images.
    Equations {
        network: PathBuf,
        #[arg(long, default_value_t = DEFAULT_K)]
        k: usize,
        #[arg(long)]
        transposes: bool,
    },
    /// Containment order of the string relations.
    Order {
        network: PathBuf,
        #[arg(long)]
        transposes: bool,
    },
    /// Relation box: compound relations of length up to k.
    Rbox {
        network: PathBuf,
        #[arg(long, default_value_t = DEFAULT_K)]
        k: usize,
        #[arg(long)]
        transposes: bool,
        /// Print this actor's relation plane.
        #[arg(long)]
        ego: Option<String>,
    },
    /// Cumulated person hierarchy.
    Cph {
        network: PathBuf,
        #[arg(long, default_value_t = DEFAULT_K)]
        k: usize,
        #[arg(long)]
        transposes: bool,
    },
    /// Image matrices of the positional system for a clustering.
    Reduce {
        network: PathBuf,
        /// CSV of `label,class` rows.
        #[arg(long)]
        classes: PathBuf,
    },
    /// Decomposition of an abstract semigroup into congruence classes.
    Decomp {
        semigroup: PathBuf,
        #[arg(long)]
        poset: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Mode::Cc)]
        mode: Mode,
    },
    /// Signed matrix from a positive and a negative relation.
    Signed {
        network: PathBuf,
        #[command(flatten)]
        signs: SignPair,
    },
    /// Semiring powers or closure of a signed matrix.
    Semiring {
        network: PathBuf,
        #[command(flatten)]
        signs: SignPair,
        /// Use the cluster semiring instead of the balance semiring.
        #[arg(long)]
        cluster: bool,
        /// Follow tie directions instead of semipaths.
        #[arg(long)]
        paths: bool,
        /// Sum of walk powers up to this length.
        #[arg(long, conflicts_with = "closure")]
        k: Option<usize>,
        /// Iterate to the fixpoint and report balance (default).
        #[arg(long)]
        closure: bool,
    },
    /// Formal concepts of a two-mode context.
    Galois {
        context: PathBuf,
        #[arg(long)]
        reduced: bool,
        #[arg(long)]
        order: bool,
        /// Concept indices or labels, comma separated.
        #[arg(long, value_delimiter = ',')]
        filter: Vec<String>,
        /// Take down-sets instead of up-sets.
        #[arg(long, requires = "filter")]
        ideal: bool,
    },
    /// Up-set or down-set of elements of a partial order.
    Filter {
        poset: PathBuf,
        /// Element labels, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        element: Vec<String>,
        #[arg(long)]
        ideal: bool,
    },
    /// DOT drawing of a poset, semigroup, network or context.
    Dot {
        #[arg(value_enum)]
        kind: DotArg,
        input: PathBuf,
        /// Leave out elements comparable to nothing.
        #[arg(long)]
        no_incomparables: bool,
        #[arg(long)]
        transposes: bool,
    },
}

#[derive(Args)]
struct BondSelection {
    /// recp, asym, tent, txch, mixd, full, strong or weak.
    #[arg(long, value_delimiter = ',')]
    bonds: Vec<String>,
    #[arg(long, value_enum, default_value_t = Layout::Tensor)]
    format: Layout,
}

#[derive(Args)]
struct SignPair {
    #[arg(long)]
    positive: String,
    #[arg(long)]
    negative: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum Layout {
    Tensor,
    Pairs,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Cc,
    Atoms,
    Mca,
}

#[derive(Clone, Copy, ValueEnum)]
enum DotArg {
    /// Hasse diagram of a poset JSON.
    Hasse,
    /// Concept lattice of a context, reduced labels.
    Lattice,
    /// Cayley graph of a semigroup JSON.
    Cayley,
    /// Cayley graph of the semigroup generated by a network.
    NetworkCayley,
    /// Ties of a network JSON.
    Multigraph,
    /// Two-mode graph of a context.
    Bipartite,
}

fn closure_cap() -> Result<usize> {
    match std::env::var("RELALG_MAX_CLOSURE") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::InvalidArgument(format!("RELALG_MAX_CLOSURE=`{v}` is not a count"))),
        Err(_) => Ok(DEFAULT_MAX_ELEMENTS),
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    if let Some(p) = out {
        std::fs::write(p, text)?;
    }
    Ok(())
}

fn bonds(sel: &BondSelection) -> Result<Vec<Bond>> {
    sel.bonds.iter().map(|b| Bond::parse(b)).collect()
}

fn print_network(o: &mut String, net: &MultiplexNetwork, layout: Layout) {
    match layout {
        Layout::Tensor => {
            for s in net.slices() {
                wln!(o, ", , {}\n", s.name);
                let labels = net.actors().labels();
                w!(o, "{}", render_table(labels, labels, |i, j| u8::from(s.cells.get(i, j)).to_string()));
                wln!(o);
            }
        }
        Layout::Pairs => {
            for (name, pairs) in pair_lists(net) {
                wln!(o, "${name}");
                for p in pairs {
                    wln!(o, "{p}");
                }
                wln!(o);
            }
        }
    }
}

fn print_signed(o: &mut String, s: &SignedMatrix) {
    w!(o, "{}", s.render());
    let val: Vec<String> = s.val_set().iter().map(|v| v.to_string()).collect();
    wln!(o, "val: {}", val.join(" "));
}

fn signed_json(s: &SignedMatrix) -> Result<String> {
    let cells: Vec<String> = (0..s.n()).map(|i| (0..s.n()).map(|j| s.get(i, j).letter()).collect()).collect();
    Ok(serde_json::to_string_pretty(&json!({ "actors": s.actors.labels(), "matrix": cells }))?)
}

fn signed_input(path: &Path, signs: &SignPair) -> Result<SignedMatrix> {
    let net = io::load_network(path)?;
    make_signed(net.slice(&signs.positive)?, net.slice(&signs.negative)?)
}

/// Labels over values, each column right-aligned.
fn print_vector(o: &mut String, labels: &[String], values: &[usize]) {
    let vals: Vec<String> = values.iter().map(usize::to_string).collect();
    let widths: Vec<usize> = labels.iter().zip(&vals).map(|(l, v)| l.len().max(v.len())).collect();
    let line = |cells: &[String]| cells.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect::<Vec<_>>().join(" ");
    wln!(o, "{}", line(labels));
    wln!(o, "{}", line(&vals));
}

fn print_poset(o: &mut String, po: &Poset) {
    w!(o, "{}", po.render());
}

fn run(cli: Cli, o: &mut String) -> Result<()> {
    let out = cli.out.as_deref();
    match cli.command {
        Command::Census { network, sel } => {
            let net = io::load_network(&network)?;
            if !sel.bonds.is_empty() {
                let sys = relational_system(&net, &bonds(&sel)?)?;
                print_network(o, &sys, sel.format);
                return emit(out, &io::network_to_json(&sys)?);
            }
            let census = bundle_census(&net);
            w!(o, "{census}");
            match cohesion_reciprocity(&census) {
                Ok(st) => wln!(o, "cohesion {:.7}  reciprocity {:.5}", st.cohesion, st.reciprocity),
                Err(e) => wln!(o, "cohesion and reciprocity not defined: {e}"),
            }
            emit(out, &serde_json::to_string_pretty(&census)?)
        }
        Command::Relsys { network, sel } => {
            if sel.bonds.is_empty() {
                return Err(Error::InvalidArgument("--bonds is required".into()));
            }
            let sys = relational_system(&io::load_network(&network)?, &bonds(&sel)?)?;
            print_network(o, &sys, sel.format);
            emit(out, &io::network_to_json(&sys)?)
        }
        Command::Semigroup { network, symbolic, transposes, equations: k } => {
            let net = io::load_network(&network)?;
            let strings = generate_strings(&net, transposes, closure_cap()?)?;
            let sg = build_semigroup(&strings)?;
            wln!(o, "order: {}", sg.order());
            wln!(o, "st: {}", sg.labels.join(" "));
            wln!(o);
            w!(o, "{}", sg.render(if symbolic { TableFormat::Symbolic } else { TableFormat::Numerical }));
            if let Some(k) = k {
                wln!(o);
                print_equations(o, &net, k, transposes)?;
            }
            emit(out, &io::semigroup_to_json(&sg)?)
        }
        Command::Equations { network, k, transposes } => {
            let net = io::load_network(&network)?;
            let eq = print_equations(o, &net, k, transposes)?;
            emit(out, &serde_json::to_string_pretty(&eq)?)
        }
        Command::Order { network, transposes } => {
            let strings = generate_strings(&io::load_network(&network)?, transposes, closure_cap()?)?;
            let po = string_partial_order(&strings);
            print_poset(o, &po);
            emit(out, &io::poset_to_json(&po)?)
        }
        Command::Rbox { network, k, transposes, ego } => {
            let net = io::load_network(&network)?;
            let rbox = build_relation_box(&net, k, transposes)?;
            wln!(o, "{} actors, {} compound relations up to length {k}", rbox.n(), rbox.depth());
            match ego {
                Some(e) => {
                    let plane = rbox.plane(net.actors().require(&e)?);
                    w!(o, "{}", render_table(&rbox.words, net.actors().labels(), |s, a| u8::from(plane.get(s, a)).to_string()));
                }
                None => {
                    for (w, m) in rbox.words.iter().zip(&rbox.slices) {
                        wln!(o, "{w} {}", m.count_ones());
                    }
                }
            }
            Ok(())
        }
        Command::Cph { network, k, transposes } => {
            let rbox = build_relation_box(&io::load_network(&network)?, k, transposes)?;
            let cph = cumulated_hierarchy(&rbox);
            print_poset(o, &cph.poset);
            for (a, b) in &cph.equal_pairs {
                wln!(o, "equal: {a} {b}");
            }
            emit(out, &io::poset_to_json(&cph.poset)?)
        }
        Command::Reduce { network, classes } => {
            let ps = reduce_network(&io::load_network(&network)?, &io::load_clustering(&classes)?)?;
            let text = io::network_to_json(&ps.images)?;
            match out {
                Some(p) => {
                    print_network(o, &ps.images, Layout::Tensor);
                    std::fs::write(p, text)?;
                }
                None => wln!(o, "{text}"),
            }
            Ok(())
        }
        Command::Decomp { semigroup, poset, mode } => {
            let sg = io::load_semigroup(&semigroup)?;
            let po = poset.as_deref().map(io::load_poset).transpose()?;
            let mode = match mode {
                Mode::Cc => DecompMode::Cc,
                Mode::Atoms => DecompMode::Atoms,
                Mode::Mca => DecompMode::Mca,
            };
            let parts = decompose(&sg, po.as_ref(), mode, closure_cap()?)?;
            for (k, q) in parts.iter().enumerate() {
                wln!(o, "[[{}]]", k + 1);
                print_vector(o, &sg.labels, &q.vector);
            }
            let doc: Vec<_> = parts.iter().map(|q| json!({ "classes": q.vector, "labels": q.labels, "table": q.table })).collect();
            emit(out, &serde_json::to_string_pretty(&doc)?)
        }
        Command::Signed { network, signs } => {
            let s = signed_input(&network, &signs)?;
            print_signed(o, &s);
            emit(out, &signed_json(&s)?)
        }
        Command::Semiring { network, signs, cluster, paths, k, closure: _ } => {
            let s = signed_input(&network, &signs)?;
            let mode = if cluster { SemiringMode::Cluster } else { SemiringMode::Balance };
            let spec = SemiringSpec::of(mode);
            let q = match k {
                Some(k) => semiring_powers(&s, &spec, k, !paths)?,
                None => balance_closure(&s, &spec, !paths)?,
            };
            print_signed(o, &q);
            if k.is_none() {
                let r = evaluate_balance(&s, !paths)?;
                wln!(o, "verdict: {:?}", r.verdict);
                if let Some(w) = &r.witness {
                    wln!(o, "witness: {w}");
                }
                for (i, g) in r.groups.iter().enumerate() {
                    wln!(o, "group {}: {}", i + 1, g.join(" "));
                }
            }
            emit(out, &signed_json(&q)?)
        }
        Command::Galois { context, reduced, order, filter, ideal } => {
            let l = concept_lattice(&io::load_context(&context)?);
            let label = |i: usize| -> String {
                if reduced {
                    l.reduced_label(i)
                } else {
                    let c = &l.concepts[i];
                    let names = |idx: &[usize], pool: &[String]| {
                        idx.iter().map(|&k| pool[k].as_str()).collect::<Vec<_>>().join(", ")
                    };
                    format!(
                        "{{{}}} {{{}}}",
                        names(&c.extent, &l.context.objects),
                        names(&c.intent, &l.context.attributes)
                    )
                }
            };
            let picked: Vec<usize> =
                if filter.is_empty() { (0..l.len()).collect() } else { l.filter_ideal(&filter, ideal)? };
            if order {
                print_poset(o, &l.order);
                wln!(o);
            }
            for i in &picked {
                wln!(o, "c{}: {}", i + 1, label(*i));
            }
            let labels: Vec<String> = (0..l.len()).map(|i| l.reduced_label(i)).collect();
            let po = Poset::new(labels, l.order.matrix.clone())?;
            emit(out, &io::poset_to_json(&po)?)
        }
        Command::Filter { poset, element, ideal } => {
            let po = io::load_poset(&poset)?;
            po.validate()?;
            let mut keep = vec![false; po.len()];
            for e in &element {
                let i = po.labels.iter().position(|l| l == e).ok_or_else(|| Error::NoMatch(e.clone()))?;
                for j in if ideal { po.downset(i) } else { po.upset(i) } {
                    keep[j] = true;
                }
            }
            let picked: Vec<&str> = (0..po.len()).filter(|&i| keep[i]).map(|i| po.labels[i].as_str()).collect();
            for l in &picked {
                wln!(o, "{l}");
            }
            emit(out, &serde_json::to_string_pretty(&picked)?)
        }
        Command::Dot { kind, input, no_incomparables, transposes } => {
            let doc = match kind {
                DotArg::Hasse => {
                    let po = io::load_poset(&input)?;
                    po.validate()?;
                    hasse_dot(&po, None, !no_incomparables)?
                }
                DotArg::Lattice => {
                    let l = concept_lattice(&io::load_context(&input)?);
                    let labels: Vec<String> = (0..l.len()).map(|i| l.reduced_label(i)).collect();
                    hasse_dot(&l.order, Some(&labels), !no_incomparables)?
                }
                DotArg::Cayley => cayley_dot(&io::load_semigroup(&input)?),
                DotArg::NetworkCayley => {
                    let strings = generate_strings(&io::load_network(&input)?, transposes, closure_cap()?)?;
                    cayley_dot(&build_semigroup(&strings)?)
                }
                DotArg::Multigraph => multigraph_dot(&io::load_network(&input)?),
                DotArg::Bipartite => bipartite_dot(&io::load_context(&input)?),
            };
            match out {
                Some(p) => std::fs::write(p, &doc.text)?,
                None => w!(o, "{}", doc.text),
            }
            Ok(())
        }
    }
}

fn print_equations(o: &mut String, net: &MultiplexNetwork, k: usize, transposes: bool) -> Result<relalg::semigroup::EquationClasses> {
    let eq = equations(net, k, transposes)?;
    for (key, words) in &eq.classes {
        wln!(o, "${key}");
        wln!(o, "{}", words.join(" "));
    }
    Ok(eq)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut o = String::new();
    let result = run(cli, &mut o);
    // a closed pipe downstream is not an error
    let _ = std::io::stdout().lock().write_all(o.as_bytes());
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("relalg: {e}");
            ExitCode::from(if e.is_input_error() { 2 } else { 3 })
        }
    }
}
