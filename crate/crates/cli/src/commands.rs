//! Subcommand bodies. Each returns what it prints and fills a run report.

use crate::report::RunReport;
use crate::{io, svg, Cli, CliError, Command, GlobalArgs, KernelChoice, Output};
use compat_core::dp::{
    self, build_reduction_graph, AdjacencyMatrix, Classical, DPMatrix, Kernel, Mode, ReductionGadget, Strassen,
};
use compat_core::generate::{random_polygon, GeneratorConfig};
use compat_core::geometry::{predicate_count, reset_predicate_count};
use compat_core::oracles;
use compat_core::rotation::find_rotations;
use compat_core::triangulation::format_diagonals;
use compat_core::{IndexPair, Polygon, Triangulation, VisibilityIndex};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::path::Path;

type Run = Result<Output, CliError>;

pub fn execute(cli: &Cli) -> Run {
    reset_predicate_count();
    let g = &cli.global;
    let mut report = RunReport::new(name(&cli.command));
    let out = match &cli.command {
        Command::Triangulate { polygon, out } => triangulate(g, &mut report, polygon, out.as_deref()),
        Command::Visquery { polygon, i, j, all } => visquery(g, &mut report, polygon, *i, *j, *all),
        Command::RotationSearch { p, triangulation, q, witness_dir } => {
            rotation_search(g, &mut report, p, triangulation, q, witness_dir.as_deref())
        }
        Command::Compat { p, q, out } => compat(g, &mut report, p, q, out.as_deref()),
        Command::Count { graph, polygons, kernel } => count(g, &mut report, graph.as_deref(), polygons, *kernel),
        Command::Reduction { m, density, out } => reduction(g, &mut report, *m, *density, out.as_deref()),
        Command::Gen { n, reflex_fraction, out } => gen(g, &mut report, *n, *reflex_fraction, out.as_deref()),
        Command::Render { polygon, triangulation } => render(g, &mut report, polygon, triangulation.as_deref()),
    }?;
    report.counters.predicate_evaluations = predicate_count();
    if let Some(path) = &g.report {
        report.append_to(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    }
    Ok(out)
}

fn name(c: &Command) -> &'static str {
    match c {
        Command::Triangulate { .. } => "triangulate",
        Command::Visquery { .. } => "visquery",
        Command::RotationSearch { .. } => "rotation-search",
        Command::Compat { .. } => "compat",
        Command::Count { .. } => "count",
        Command::Reduction { .. } => "reduction",
        Command::Gen { .. } => "gen",
        Command::Render { .. } => "render",
    }
}

fn ok(stdout: String) -> Run {
    Ok(Output { stdout, ..Output::default() })
}

/// Writes `text` to `path`, or returns it for stdout.
fn emit(path: Option<&Path>, text: String) -> Result<String, CliError> {
    match path {
        Some(p) => io::write(p, &text).map(|_| String::new()),
        None => Ok(text),
    }
}

fn load_polygon(report: &mut RunReport, name: &str, path: &Path) -> Result<Polygon, CliError> {
    let text = io::read(path)?;
    report.input(name, &text);
    io::parse_polygon(&text)
}

fn load_triangulation(report: &mut RunReport, p: &Polygon, path: &Path) -> Result<Triangulation, CliError> {
    let text = io::read(path)?;
    report.input("triangulation", &text);
    let diagonals = io::parse_diagonals(&text, p.len())?;
    Ok(Triangulation::from_diagonals(p, &diagonals)?)
}

fn write_svg(g: &GlobalArgs, polygons: &[&Polygon], diagonals: &[IndexPair]) -> Result<(), CliError> {
    match &g.svg {
        Some(path) => io::write(path, &svg::render(polygons, diagonals)),
        None => Ok(()),
    }
}

fn mismatch(what: String) -> CliError {
    CliError::Mismatch(what)
}

fn triangulate(g: &GlobalArgs, report: &mut RunReport, polygon: &Path, out: Option<&Path>) -> Run {
    let p = load_polygon(report, "polygon", polygon)?;
    let t = Triangulation::ear_clipping(&p);
    if g.oracle {
        if t.diagonals().len() != p.len() - 3 {
            return Err(mismatch(format!("{} diagonals for n = {}", t.diagonals().len(), p.len())));
        }
        if let Some(d) = t.diagonals().iter().find(|d| !p.is_diagonal(d.lo(), d.hi()).unwrap_or(false)) {
            return Err(mismatch(format!("{d} is not a diagonal")));
        }
    }
    report.output("diagonals", t.diagonals().len());
    write_svg(g, &[&p], t.diagonals())?;
    ok(emit(out, format_diagonals(t.diagonals()))?)
}

fn visquery(g: &GlobalArgs, report: &mut RunReport, polygon: &Path, i: Option<usize>, j: Option<usize>, all: bool) -> Run {
    let p = load_polygon(report, "polygon", polygon)?;
    let n = p.len();
    let idx = VisibilityIndex::build(&p);
    let oracle = g.oracle.then(|| oracles::visibility_graph(&p));
    let mut queries = 0;
    let mut ask = |v: usize, w: usize| -> Result<bool, CliError> {
        queries += 1;
        let got = idx.visible(v, w).map_err(|e| CliError::Usage(e.to_string()))?;
        match &oracle {
            Some(o) if o[v][w] != got => Err(mismatch(format!("({v},{w}): index {got}, oracle {}", o[v][w]))),
            _ => Ok(got),
        }
    };
    let text = if all {
        let mut text = String::new();
        for v in 0..n {
            let row: Vec<&str> = (0..n)
                .map(|w| Ok(if v != w && ask(v, w)? { "1" } else { "0" }))
                .collect::<Result<_, CliError>>()?;
            text.push_str(&row.join(" "));
            text.push('\n');
        }
        text
    } else {
        let (v, w) = (i.expect("clap requires i"), j.expect("clap requires j"));
        let answer = ask(v, w)?;
        report.output("visible", answer);
        format!("{answer}\n")
    };
    report.counters.visibility_queries = queries;
    ok(text)
}

fn rotation_search(
    g: &GlobalArgs,
    report: &mut RunReport,
    p: &Path,
    triangulation: &Path,
    q: &Path,
    witness_dir: Option<&Path>,
) -> Run {
    let p = load_polygon(report, "p", p)?;
    let t = load_triangulation(report, &p, triangulation)?;
    let q = load_polygon(report, "q", q)?;
    let found = find_rotations(&p, &t, &q)?;
    if g.oracle {
        let want = oracles::naive_rotation_set(&p, &t, &q)?;
        if want != found.rotations() {
            return Err(mismatch(format!("rotations {:?}, oracle {want:?}", found.rotations())));
        }
    }
    if let Some(dir) = witness_dir {
        std::fs::create_dir_all(dir).map_err(|e| CliError::Usage(format!("{}: {e}", dir.display())))?;
        for &s in found.rotations() {
            io::write(&dir.join(format!("rotation_{s}.txt")), &format_diagonals(&found.witness(s)))?;
        }
    }
    let line = found.rotations().iter().map(|s| s.to_string()).collect::<Vec<_>>().join(" ");
    report.output("rotations", &line);
    report.output("reflex_vertices", found.reflex_count());
    report.counters.visibility_queries = found.stats().visibility_queries;
    let code = if found.rotations().is_empty() { 1 } else { 0 };
    Ok(Output { stdout: format!("{line}\n"), code, ..Output::default() })
}

/// Visibility graphs of both polygons by brute force, intersected.
fn oracle_shared_graph(p: &Polygon, q: &Polygon) -> Result<AdjacencyMatrix, CliError> {
    let gp = AdjacencyMatrix::from_rows(&oracles::visibility_graph(p))?;
    let gq = AdjacencyMatrix::from_rows(&oracles::visibility_graph(q))?;
    Ok(gp.intersect(&gq)?)
}

fn compat(g: &GlobalArgs, report: &mut RunReport, p: &Path, q: &Path, out: Option<&Path>) -> Run {
    let p = load_polygon(report, "p", p)?;
    let q = load_polygon(report, "q", q)?;
    if p.len() != q.len() {
        return Err(CliError::Usage(compat_core::Error::SizeMismatch(p.len(), q.len()).to_string()));
    }
    let c = dp::compatibility(&p, &q)?;
    report.counters.visibility_queries = c.visibility_queries;
    report.counters.block_updates = c.dp.block_updates;
    if g.oracle {
        let a = oracle_shared_graph(&p, &q)?;
        let want = oracles::cubic_dp(&a)[0][p.len() - 1];
        if want != c.triangulation.is_some() {
            return Err(mismatch(format!("verdict {}, oracle {want}", c.triangulation.is_some())));
        }
    }
    match c.triangulation {
        Some(diagonals) => {
            report.output("verdict", "YES");
            write_svg(g, &[&p, &q], &diagonals)?;
            let listing = emit(out, format_diagonals(&diagonals))?;
            ok(format!("YES\n{listing}"))
        }
        None => {
            report.output("verdict", "NO");
            Ok(Output { stdout: "NO\n".into(), code: 1, ..Output::default() })
        }
    }
}

fn run_counting<K: Kernel>(a: &AdjacencyMatrix, kernel: &K) -> Result<DPMatrix<BigInt>, CliError> {
    let mut m = DPMatrix::new(a, Mode::Counting);
    m.run(kernel)?;
    Ok(m)
}

fn count(
    g: &GlobalArgs,
    report: &mut RunReport,
    graph: Option<&Path>,
    polygons: &[std::path::PathBuf],
    kernel: KernelChoice,
) -> Run {
    let a = match graph {
        Some(path) => {
            let text = io::read(path)?;
            report.input("graph", &text);
            io::parse_graph(&text)?
        }
        None => {
            let p = load_polygon(report, "p", &polygons[0])?;
            let q = load_polygon(report, "q", &polygons[1])?;
            if p.len() != q.len() {
                return Err(CliError::Usage(compat_core::Error::SizeMismatch(p.len(), q.len()).to_string()));
            }
            let n = p.len() as u64;
            report.counters.visibility_queries = n * (n - 3);
            let ap = dp::visibility_adjacency(&VisibilityIndex::build(&p))?;
            let aq = dp::visibility_adjacency(&VisibilityIndex::build(&q))?;
            ap.intersect(&aq)?
        }
    };
    let m = match kernel {
        KernelChoice::Classical => run_counting(&a, &Classical)?,
        KernelChoice::Strassen => run_counting(&a, &Strassen::default())?,
    };
    let total = m.get(0, a.len() - 1).clone();
    if g.oracle {
        let want = BigInt::from(oracles::recursive_count(&a));
        if want != total {
            return Err(mismatch(format!("count {total}, oracle {want}")));
        }
    }
    report.counters.block_updates = m.stats().block_updates;
    report.output("count", &total);
    ok(format!("{total}\n"))
}

fn random_matrix(m: usize, density: f64, rng: &mut ChaCha8Rng) -> Vec<Vec<bool>> {
    (0..m).map(|_| (0..m).map(|_| rng.gen_bool(density)).collect()).collect()
}

/// Cells `(i, j)` where the gadget disagrees with the reference product.
fn reduction_mismatches(gadget: &ReductionGadget, counts: &DPMatrix<BigInt>, want: &[Vec<bool>]) -> Vec<(usize, usize)> {
    let m = gadget.size();
    (1..=m)
        .flat_map(|i| (1..=m).map(move |j| (i, j)))
        .filter(|&(i, j)| gadget.chain_value(counts, i, j) != want[i - 1][j - 1])
        .collect()
}

fn reduction(g: &GlobalArgs, report: &mut RunReport, m: usize, density: f64, out: Option<&Path>) -> Run {
    if m == 0 {
        return Err(CliError::Usage("matrix size m must be at least 1".into()));
    }
    if !(0.0..=1.0).contains(&density) {
        return Err(CliError::Usage(format!("density {density} is not in [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(g.seed);
    let left = random_matrix(m, density, &mut rng);
    let right = random_matrix(m, density, &mut rng);
    let gadget = build_reduction_graph(&left, &right);
    let want = dp::reduction::boolean_product(&left, &right);
    let counts = run_counting(gadget.adjacency(), &Classical)?;
    report.counters.block_updates = counts.stats().block_updates;
    if g.oracle {
        let cubic = oracles::cubic_dp(gadget.adjacency());
        let n = gadget.adjacency().len();
        if let Some((i, j)) = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).find(|&(i, j)| counts.bit(i, j) != cubic[i][j]) {
            return Err(mismatch(format!("DP cell ({i},{j}) disagrees with the cubic DP")));
        }
    }
    let bad = reduction_mismatches(&gadget, &counts, &want);
    let graph = emit(out, io::format_graph(gadget.adjacency()))?;
    report.output("cells", m * m);
    report.output("mismatches", bad.len());
    if bad.is_empty() {
        report.output("verdict", "MATCH");
        ok(format!("{graph}MATCH\n"))
    } else {
        report.output("verdict", "MISMATCH");
        Err(mismatch(format!("{} of {} cells differ, first at {:?}", bad.len(), m * m, bad[0])))
    }
}

fn gen(g: &GlobalArgs, report: &mut RunReport, n: usize, reflex_fraction: Option<f64>, out: Option<&Path>) -> Run {
    if n < 3 {
        return Err(CliError::Usage(format!("n must be at least 3, got {n}")));
    }
    let mut cfg = GeneratorConfig::new(n);
    if let Some(f) = reflex_fraction {
        if !(0.0..=1.0).contains(&f) {
            return Err(CliError::Usage(format!("reflex fraction {f} is not in [0, 1]")));
        }
        cfg = cfg.with_reflex_fraction(f);
    }
    let p = random_polygon(&cfg, g.seed)?;
    let fraction = p.reflex_vertices().len() as f64 / n as f64;
    report.output("reflex_fraction", format!("{fraction:.4}"));
    write_svg(g, &[&p], &[])?;
    let text = emit(out, io::format_polygon(&p))?;
    Ok(Output { stdout: text, stderr: format!("reflex fraction {fraction:.4}\n"), code: 0 })
}

fn render(g: &GlobalArgs, report: &mut RunReport, polygon: &Path, triangulation: Option<&Path>) -> Run {
    let p = load_polygon(report, "polygon", polygon)?;
    let diagonals = match triangulation {
        Some(path) => load_triangulation(report, &p, path)?.diagonals().to_vec(),
        None => Vec::new(),
    };
    ok(emit(g.svg.as_deref(), svg::render(&[&p], &diagonals))?)
}
