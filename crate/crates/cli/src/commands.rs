use crate::input::{load, oracle_config, parse_set, Format};
use crate::report::{one_based, RunReport};
use crate::CliError;
use p3c_cograph::{build_cotree, solve_cograph};
use p3c_convexity::{hull, is_convexly_independent, VertexSet};
use p3c_formulas::{beta_c_cycle, beta_c_path, cycle_witness, path_witness, solve_tree};
use p3c_graph::{classify, is_cycle, is_path, Graph, GraphClass};
use p3c_oracle::{beta_c_oracle, caratheodory_oracle, sigma_boundary};
use p3c_permutation::{beta_c_permutation_with, CheckMode, DpConfig};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Solver {
    Auto,
    Oracle,
    Path,
    Cycle,
    Tree,
    Cograph,
    Permutation,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Mode {
    State,
    Witness,
    OracleCheck,
}

impl Solver {
    fn name(self) -> &'static str {
        match self {
            Solver::Auto => "auto",
            Solver::Oracle => "oracle",
            Solver::Path => "path",
            Solver::Cycle => "cycle",
            Solver::Tree => "tree",
            Solver::Cograph => "cograph",
            Solver::Permutation => "permutation",
        }
    }
}

pub fn cmd_hull(input: &str, format: Format, set: &str) -> Result<(RunReport, i32), CliError> {
    let inst = load(input, format)?;
    let s = parse_set(set, inst.graph.n())?;
    let trace = hull(&inst.graph, &s).map_err(|e| CliError::BadSet(e.to_string()))?;
    let mut report = RunReport::new("hull", &inst.name);
    report.hull = Some(one_based(&trace.hull));
    report.order = Some(trace.order.iter().map(|v| v + 1).collect());
    report.parents = Some(
        trace
            .parents
            .iter()
            .map(|(&v, &(a, b))| (v + 1, [a + 1, b + 1]))
            .collect(),
    );
    Ok((report, 0))
}

pub fn cmd_check(input: &str, format: Format, set: &str) -> Result<(RunReport, i32), CliError> {
    let inst = load(input, format)?;
    let s = parse_set(set, inst.graph.n())?;
    let verdict = is_convexly_independent(&inst.graph, &s).map_err(|e| CliError::BadSet(e.to_string()))?;
    let mut report = RunReport::new("check", &inst.name);
    report.independent = Some(verdict.independent);
    report.violator = verdict.violator.map(|v| v + 1);
    report.certificate = verdict.two_path().map(|p| p.iter().map(|v| v + 1).collect());
    Ok((report, if verdict.independent { 0 } else { 1 }))
}

pub fn cmd_boundary(input: &str, format: Format, set: &str) -> Result<(RunReport, i32), CliError> {
    let inst = load(input, format)?;
    let s = parse_set(set, inst.graph.n())?;
    let boundary = sigma_boundary(&inst.graph, &s)?;
    let trace = hull(&inst.graph, &s).map_err(|e| CliError::BadSet(e.to_string()))?;
    let mut report = RunReport::new("boundary", &inst.name);
    report.hull = Some(one_based(&trace.hull));
    report.irredundant = Some(!boundary.is_empty());
    report.boundary = Some(one_based(&boundary));
    Ok((report, 0))
}

pub fn cmd_caratheodory(input: &str, format: Format) -> Result<(RunReport, i32), CliError> {
    let inst = load(input, format)?;
    let result = caratheodory_oracle(&inst.graph, &oracle_config()?)?;
    let mut report = RunReport::new("caratheodory", &inst.name).irredundant_witness(&inst.graph, &result.witness)?;
    report.solver = Some("oracle".into());
    report.explored = Some(result.explored);
    Ok((report, 0))
}

/// Vertices of a path or cycle in walking order.
fn walk(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let start = (0..n).find(|&v| g.degree(v) <= 1).unwrap_or(0);
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while order.len() < n {
        let next = *g
            .neighbors(cur)
            .iter()
            .find(|&&w| w != prev && w != start)
            .expect("paths and cycles continue until every vertex is visited");
        order.push(next);
        prev = cur;
        cur = next;
    }
    order
}

fn mismatch(solver: Solver, class: &str) -> CliError {
    CliError::Dispatch(format!("solver {} needs a {class} input", solver.name()))
}

pub fn cmd_beta_c(input: &str, format: Format, solver: Solver, mode: Mode) -> Result<(RunReport, i32), CliError> {
    let inst = load(input, format)?;
    let g = &inst.graph;
    let oracle_cfg = oracle_config()?;
    let chosen = match solver {
        Solver::Auto => match classify(g, inst.diagram.is_some()) {
            GraphClass::Path => Solver::Path,
            GraphClass::Cycle => Solver::Cycle,
            GraphClass::Tree => Solver::Tree,
            GraphClass::Cograph => Solver::Cograph,
            GraphClass::PermutationInput => Solver::Permutation,
            GraphClass::Generic => Solver::Oracle,
        },
        other => other,
    };
    let mut explored = None;
    let (value, witness) = match chosen {
        Solver::Path => {
            if !is_path(g) {
                return Err(mismatch(chosen, "path"));
            }
            let order = walk(g);
            let value = beta_c_path(g.n()).map_err(|e| mismatch_from(chosen, e))?;
            (
                value,
                path_witness(g.n()).iter().map(|i| order[i]).collect::<VertexSet>(),
            )
        }
        Solver::Cycle => {
            if !is_cycle(g) {
                return Err(mismatch(chosen, "cycle"));
            }
            let order = walk(g);
            let value = beta_c_cycle(g.n()).map_err(|e| mismatch_from(chosen, e))?;
            (value, cycle_witness(g.n()).iter().map(|i| order[i]).collect())
        }
        Solver::Tree => {
            let sol = solve_tree(g).map_err(|e| mismatch_from(chosen, e))?;
            (sol.value, sol.witness)
        }
        Solver::Cograph => {
            let tree = build_cotree(g).map_err(|e| mismatch_from(chosen, e))?;
            let sol = solve_cograph(&tree).map_err(|e| mismatch_from(chosen, e))?;
            (sol.value, sol.witness)
        }
        Solver::Permutation => {
            let d = inst
                .diagram
                .as_ref()
                .ok_or_else(|| mismatch(chosen, "permutation-format"))?;
            let cfg = DpConfig {
                mode: match mode {
                    Mode::State => CheckMode::State,
                    Mode::Witness => CheckMode::Witness,
                    Mode::OracleCheck => CheckMode::OracleCheck,
                },
                oracle_max: oracle_cfg.max_vertices,
                ..DpConfig::default()
            };
            let sol = beta_c_permutation_with(d, &cfg)?;
            explored = Some(sol.attempts);
            (sol.value, sol.witness)
        }
        Solver::Oracle => {
            let sol = beta_c_oracle(g, &oracle_cfg, None)?;
            explored = Some(sol.explored);
            (sol.value, sol.witness)
        }
        Solver::Auto => unreachable!("auto resolves to a concrete solver"),
    };
    if value != witness.len() {
        return Err(CliError::Verification(format!(
            "solver {} reports {value} with a witness of size {}",
            chosen.name(),
            witness.len()
        )));
    }
    if mode == Mode::OracleCheck && chosen != Solver::Oracle {
        let oracle = beta_c_oracle(g, &oracle_cfg, None)?;
        if oracle.value != value {
            return Err(CliError::Verification(format!(
                "solver {} gives {value}, the oracle {}",
                chosen.name(),
                oracle.value
            )));
        }
    }
    let mut report = RunReport::new("beta_c", &inst.name).independent_witness(g, &witness)?;
    report.solver = Some(chosen.name().into());
    report.explored = explored;
    Ok((report, 0))
}

fn mismatch_from(solver: Solver, e: impl std::fmt::Display) -> CliError {
    CliError::Dispatch(format!("solver {}: {e}", solver.name()))
}
