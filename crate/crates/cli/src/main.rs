use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use lietower_core::parabolic::{named_parabolic, principal_series_codim, rank3_orbit_dim};
use lietower_core::structures::golden::compare_set;
use lietower_core::{
    verify_all, ChevalleyAlgebra, GoldenTables, Mode, ParabolicName, RootSystem, RootSystemType, Structures,
    VerificationReport,
};

#[derive(Parser)]
#[command(
    name = "lietower",
    version,
    about = "Exact checks for the split E6 and E7 Lie algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Root counts, simple roots and the highest root.
    Roots(Args),
    /// Levi types, nilradical dimensions and centers of P, Q, R, Pg.
    Parabolic(Args),
    /// The three-layer Heisenberg tower and orbit dimensions.
    Tower(Args),
    /// Every check, including the reference tables.
    Verify(Args),
    /// Compare derived root sets with the reference tables only.
    Tables(Args),
    /// Every check; tables are included when --golden is given.
    Report(Args),
}

#[derive(clap::Args)]
struct Args {
    #[arg(long = "type", value_enum)]
    kind: TypeArg,
    /// Reference table file.
    #[arg(long)]
    golden: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Sampled Jacobi check and fewer random vectors.
    #[arg(long)]
    fast: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum TypeArg {
    E6,
    E7,
    Both,
}

impl TypeArg {
    fn kinds(self) -> Vec<RootSystemType> {
        match self {
            TypeArg::E6 => vec![RootSystemType::E6],
            TypeArg::E7 => vec![RootSystemType::E7],
            TypeArg::Both => RootSystemType::ALL.to_vec(),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_FAIL),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn load_golden(args: &Args, required: bool) -> Result<Option<GoldenTables>, String> {
    match &args.golden {
        Some(path) => GoldenTables::load(path).map(Some).map_err(|e| e.to_string()),
        None if required => Err("--golden PATH is required for this command".into()),
        None => Ok(None),
    }
}

/// Ok(true) when no check failed; flagged table mismatches only fail `tables`.
fn run(command: Command) -> Result<bool, String> {
    match command {
        Command::Roots(a) => describe(&a, roots_summary),
        Command::Parabolic(a) => describe(&a, parabolic_summary),
        Command::Tower(a) => describe(&a, tower_summary),
        Command::Verify(a) => {
            let golden = load_golden(&a, true)?;
            reports(&a, golden.as_ref())
        }
        Command::Report(a) => {
            let golden = load_golden(&a, false)?;
            reports(&a, golden.as_ref())
        }
        Command::Tables(a) => {
            let golden = load_golden(&a, true)?.expect("required");
            tables(&a, &golden)
        }
    }
}

/// Print each item as text, or as JSON: one object for a single type, an
/// array for `--type both`. Write errors (a closed pipe) are ignored.
fn emit(args: &Args, items: Vec<(String, String)>) {
    let mut out = std::io::stdout().lock();
    let _ = match args.format {
        Format::Json => {
            let body: Vec<String> = items.into_iter().map(|(j, _)| j).collect();
            if body.len() == 1 {
                writeln!(out, "{}", body[0])
            } else {
                writeln!(out, "[{}]", body.join(","))
            }
        }
        Format::Text => items.iter().try_for_each(|(_, text)| write!(out, "{text}")),
    };
}

fn describe(args: &Args, f: fn(RootSystemType) -> Result<(String, String), String>) -> Result<bool, String> {
    let items = args.kind.kinds().into_iter().map(f).collect::<Result<Vec<_>, _>>()?;
    emit(args, items);
    Ok(true)
}

fn reports(args: &Args, golden: Option<&GoldenTables>) -> Result<bool, String> {
    let mode = Mode { fast: args.fast };
    let reports: Vec<VerificationReport> = args
        .kind
        .kinds()
        .into_iter()
        .map(|k| verify_all(k, golden, mode))
        .collect();
    let ok = reports.iter().all(|r| r.summary.fail == 0);
    let items = reports.iter().map(|r| (r.to_json(), r.to_text())).collect();
    emit(args, items);
    Ok(ok)
}

fn tables(args: &Args, golden: &GoldenTables) -> Result<bool, String> {
    let mut ok = true;
    let mut items = Vec::new();
    for kind in args.kind.kinds() {
        let st = Structures::new(kind).map_err(|e| e.to_string())?;
        let rs = st.alg.root_system();
        let mut derived: Vec<(String, Vec<_>)> = vec![
            ("W".into(), st.n3.w.clone()),
            ("Wstar".into(), st.n3.wstar.clone()),
            ("X".into(), st.u.x.clone()),
            ("Y".into(), st.u.y.clone()),
            ("Zu".into(), st.u.zu.clone()),
        ];
        derived.extend(
            st.basis
                .e_order()
                .into_iter()
                .map(|i| (format!("e{i}"), vec![st.basis.e(i).root])),
        );
        derived.extend(
            st.basis
                .f_order()
                .into_iter()
                .map(|i| (format!("f{i}"), vec![st.basis.f(i).root])),
        );
        let mut rows = Vec::new();
        let mut text = format!("{kind} tables\n");
        for (name, roots) in derived {
            let cmp = compare_set(rs, golden, &name, &roots.iter().copied().collect());
            ok &= cmp.matches();
            text.push_str(&format!(
                "  [{}] {name}: {} roots\n",
                if cmp.matches() { "match" } else { "MISMATCH" },
                cmp.derived.len()
            ));
            for m in &cmp.mismatches {
                text.push_str(&format!("      - {m}\n"));
            }
            rows.push(
                json!({"set": name, "match": cmp.matches(), "roots": cmp.derived.len(), "mismatches": cmp.mismatches}),
            );
        }
        items.push((json!({"type": kind, "tables": rows}).to_string(), text));
    }
    emit(args, items);
    Ok(ok)
}

fn roots_summary(kind: RootSystemType) -> Result<(String, String), String> {
    let rs = RootSystem::new(kind);
    let simple: Vec<String> = rs.simple_roots().iter().map(ToString::to_string).collect();
    let json = json!({
        "type": kind,
        "rank": rs.rank(),
        "roots": rs.roots().len(),
        "positive": rs.num_positive(),
        "highest_root": rs.highest_root(),
        "cartan": rs.cartan(),
    });
    let text = format!(
        "{kind}: rank {}, {} roots ({} positive)\n  highest root {}\n  simple roots {}\n",
        rs.rank(),
        rs.roots().len(),
        rs.num_positive(),
        rs.highest_root(),
        simple.join(" ")
    );
    Ok((json.to_string(), text))
}

fn parabolic_summary(kind: RootSystemType) -> Result<(String, String), String> {
    let alg = ChevalleyAlgebra::new(&RootSystem::new(kind)).map_err(|e| e.to_string())?;
    let mut rows = Vec::new();
    let mut text = format!("{kind} parabolics\n");
    for name in ParabolicName::ALL {
        let d = named_parabolic(&alg, name).map_err(|e| e.to_string())?;
        let keep: Vec<usize> = d.levi_keep.iter().copied().collect();
        text.push_str(&format!(
            "  {name:<2} Levi {:<12} nodes {:?}  nilradical dim {:>2}, class {}, center dim {}\n",
            d.levi.type_label(),
            keep,
            d.dim_nilradical(),
            d.nilpotency_class,
            d.center_roots.len()
        ));
        rows.push(json!({
            "name": name.to_string(),
            "levi": d.levi.type_label(),
            "levi_nodes": keep,
            "nilradical_dim": d.dim_nilradical(),
            "nilpotency_class": d.nilpotency_class,
            "center_dim": d.center_roots.len(),
        }));
    }
    Ok((json!({"type": kind, "parabolics": rows}).to_string(), text))
}

fn tower_summary(kind: RootSystemType) -> Result<(String, String), String> {
    let alg = ChevalleyAlgebra::new(&RootSystem::new(kind)).map_err(|e| e.to_string())?;
    let tower = lietower_core::parabolic::heisenberg_tower(&alg).map_err(|e| e.to_string())?;
    let bound = principal_series_codim(alg.root_system());
    let orbit = rank3_orbit_dim(&tower);
    let residual: Vec<usize> = tower
        .residual_nodes()
        .map(|n| n.into_iter().collect())
        .unwrap_or_default();
    let mut text = format!("{kind} Heisenberg tower\n");
    for (k, layer) in tower.layers.iter().enumerate() {
        text.push_str(&format!(
            "  layer {} (N_{}): beta {}  dim {}\n",
            k + 1,
            tower.tower_index(k),
            tower.betas[k],
            layer.len()
        ));
    }
    text.push_str(&format!(
        "  residual nodes {residual:?}\n  rank-3 orbit dim {orbit}, principal series codim {}, 2·{} < {}: {}\n",
        bound.codim,
        bound.codim,
        orbit,
        bound.below(orbit)
    ));
    let json = json!({
        "type": kind,
        "betas": tower.betas,
        "layer_dims": tower.layer_dims(),
        "residual_nodes": residual,
        "orbit_dim": orbit,
        "principal_series_codim": bound.codim,
        "below": bound.below(orbit),
    });
    Ok((json.to_string(), text))
}
