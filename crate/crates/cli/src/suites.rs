use crate::input::oracle_config;
use crate::report::{Row, RunReport};
use crate::CliError;
use p3c_cograph::solve_cograph;
use p3c_formulas::{beta_c_cycle, beta_c_path, solve_tree};
use p3c_graph::parse::{format_edge_list, format_permutation};
use p3c_graph::{
    gen_all_trees, gen_cycle, gen_ladder, gen_path, gen_random_cograph, gen_random_permutation, gen_random_tree,
    gen_spider, Graph, GraphError, PermutationDiagram,
};
use p3c_oracle::{beta_c_oracle, OracleConfig};
use p3c_permutation::{beta_c_permutation, CheckMode};
use std::path::Path;
use std::time::Instant;

fn expect_params(kind: &str, params: &[usize], count: usize) -> Result<(), CliError> {
    if params.len() == count {
        Ok(())
    } else {
        Err(CliError::Dispatch(format!(
            "{kind} takes {count} parameter(s), got {}",
            params.len()
        )))
    }
}

fn generation(e: GraphError) -> CliError {
    CliError::Dispatch(e.to_string())
}

/// Instance text for `kind`. Diagram kinds emit the permutation format unless
/// `edges` is set.
pub fn generate(kind: &str, params: &[usize], seed: u64, edges: bool) -> Result<String, CliError> {
    let diagram = |d: PermutationDiagram| {
        if edges {
            format_edge_list(&d.to_graph())
        } else {
            format_permutation(&d)
        }
    };
    let text = match kind {
        "path" => {
            expect_params(kind, params, 1)?;
            format_edge_list(&gen_path(params[0]).map_err(generation)?)
        }
        "cycle" => {
            expect_params(kind, params, 1)?;
            format_edge_list(&gen_cycle(params[0]).map_err(generation)?)
        }
        "ladder" => {
            expect_params(kind, params, 1)?;
            diagram(gen_ladder(params[0]).map_err(generation)?.1)
        }
        "spider" => {
            expect_params(kind, params, 2)?;
            format_edge_list(&gen_spider(params[0], params[1]).map_err(generation)?)
        }
        "random-perm" => {
            expect_params(kind, params, 1)?;
            diagram(gen_random_permutation(params[0], seed))
        }
        "random-cograph" => {
            expect_params(kind, params, 1)?;
            format_edge_list(&gen_random_cograph(params[0], seed).map_err(generation)?.0)
        }
        "random-tree" => {
            expect_params(kind, params, 1)?;
            format_edge_list(&gen_random_tree(params[0], seed).map_err(generation)?)
        }
        other => {
            return Err(CliError::Dispatch(format!(
                "unknown kind `{other}` (path, cycle, ladder, spider, random-perm, random-cograph, random-tree)"
            )))
        }
    };
    Ok(text)
}

pub fn cmd_gen(kind: &str, params: &[usize], seed: u64, edges: bool) -> Result<(RunReport, i32), CliError> {
    let mut report = RunReport::new("gen", kind);
    report.text = Some(generate(kind, params, seed, edges)?);
    Ok((report, 0))
}

/// One instance of a validation suite: its text form and whether the solver
/// matched the oracle.
struct Case {
    text: String,
    ok: bool,
}

fn graph_case(g: &Graph, value: Result<usize, String>, cfg: &OracleConfig) -> Result<Case, CliError> {
    let oracle = beta_c_oracle(g, cfg, None)?.value;
    Ok(Case {
        text: format_edge_list(g),
        ok: value.is_ok_and(|v| v == oracle),
    })
}

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (1..=n).collect();
    loop {
        out.push(p.clone());
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).expect("successor exists");
        p.swap(i - 1, j);
        p[i..].reverse();
    }
}

/// Cases of `suite` on `n` vertices.
fn suite_cases(suite: &str, n: usize, count: u64, seed: u64, cfg: &OracleConfig) -> Result<Vec<Case>, CliError> {
    let mut cases = Vec::new();
    match suite {
        "path" => {
            let g = gen_path(n).map_err(generation)?;
            cases.push(graph_case(&g, beta_c_path(n).map_err(|e| e.to_string()), cfg)?);
        }
        "cycle" => {
            let g = gen_cycle(n).map_err(generation)?;
            cases.push(graph_case(&g, beta_c_cycle(n).map_err(|e| e.to_string()), cfg)?);
        }
        "tree" => {
            for t in gen_all_trees(n) {
                let value = solve_tree(&t).map(|s| s.value).map_err(|e| e.to_string());
                cases.push(graph_case(&t, value, cfg)?);
            }
        }
        "cograph" => {
            for i in 0..count {
                let (g, tree) = gen_random_cograph(n, seed.wrapping_add(i)).map_err(generation)?;
                let value = solve_cograph(&tree).map(|s| s.value).map_err(|e| e.to_string());
                cases.push(graph_case(&g, value, cfg)?);
            }
        }
        "permutation" => {
            let diagrams: Vec<PermutationDiagram> = if n <= 8 {
                all_permutations(n)
                    .into_iter()
                    .map(|p| PermutationDiagram::new(p).expect("permutation"))
                    .collect()
            } else {
                (0..count)
                    .map(|i| gen_random_permutation(n, seed.wrapping_add(i)))
                    .collect()
            };
            for d in diagrams {
                // compares state and witness checks and the oracle
                let ok = match beta_c_permutation(&d, CheckMode::OracleCheck) {
                    Ok(_) => true,
                    Err(p3c_permutation::PermutationError::TooLargeForOracle { n, max }) => {
                        return Err(CliError::TooLarge(format!(
                            "{n} vertices exceeds the oracle bound {max}"
                        )))
                    }
                    Err(_) => false,
                };
                cases.push(Case {
                    text: format_permutation(&d),
                    ok,
                });
            }
        }
        other => {
            return Err(CliError::Dispatch(format!(
                "unknown suite `{other}` (path, cycle, tree, cograph, permutation)"
            )))
        }
    }
    Ok(cases)
}

pub fn cmd_validate(
    suite: &str,
    max_n: usize,
    count: u64,
    seed: u64,
    fixtures: &Path,
) -> Result<(RunReport, i32), CliError> {
    let cfg = oracle_config()?;
    let start_n = if suite == "cycle" { 3 } else { 1 };
    let mut rows = Vec::new();
    for n in start_n..=max_n {
        let start = Instant::now();
        let cases = suite_cases(suite, n, count, seed, &cfg)?;
        let mut row = Row {
            label: suite.to_string(),
            n,
            checked: cases.len(),
            passed: cases.iter().filter(|c| c.ok).count(),
            elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
            ..Row::default()
        };
        if let Some(bad) = cases.iter().find(|c| !c.ok) {
            std::fs::create_dir_all(fixtures).map_err(|e| CliError::Parse(format!("{}: {e}", fixtures.display())))?;
            let file = fixtures.join(format!("{suite}-n{n}.txt"));
            std::fs::write(&file, &bad.text).map_err(|e| CliError::Parse(format!("{}: {e}", file.display())))?;
            row.fixture = Some(file.display().to_string());
        }
        rows.push(row);
    }
    let failed = rows.iter().any(|r| r.passed != r.checked);
    let mut report = RunReport::new("validate", suite);
    report.rows = Some(rows);
    Ok((report, if failed { 6 } else { 0 }))
}

pub fn cmd_bench(kind: &str, sizes: &[usize], seed: u64) -> Result<(RunReport, i32), CliError> {
    let mut rows = Vec::new();
    for &n in sizes {
        let start = Instant::now();
        let value = match kind {
            "random-perm" => beta_c_permutation(&gen_random_permutation(n, seed), CheckMode::State)?.value,
            "ladder" => beta_c_permutation(&gen_ladder(n).map_err(generation)?.1, CheckMode::State)?.value,
            "random-tree" => {
                solve_tree(&gen_random_tree(n, seed).map_err(generation)?)
                    .map_err(|e| CliError::Dispatch(e.to_string()))?
                    .value
            }
            "random-cograph" => {
                let (_, tree) = gen_random_cograph(n, seed).map_err(generation)?;
                solve_cograph(&tree)
                    .map_err(|e| CliError::Dispatch(e.to_string()))?
                    .value
            }
            other => {
                return Err(CliError::Dispatch(format!(
                    "unknown benchmark kind `{other}` (random-perm, ladder, random-tree, random-cograph)"
                )))
            }
        };
        rows.push(Row {
            label: kind.to_string(),
            n,
            checked: 1,
            passed: 1,
            value: Some(value),
            elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
            fixture: None,
        });
    }
    let mut report = RunReport::new("bench", kind);
    report.rows = Some(rows);
    Ok((report, 0))
}
