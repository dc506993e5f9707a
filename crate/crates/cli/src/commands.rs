use gruss_core::measure::{
    estimate_bracket, mean_companion, mean_gruss, mean_metric, quadrature_metric, EstimatedBracket,
    SampledFunction,
};
use gruss_core::sharpness::{fuzz_all, sharpness_search, FuzzConfig};
use gruss_core::{Bracket, CompanionSign, Context, GrussError, Mode, SpaceMetric};

use crate::config::{CheckArgs, Command, EstimateArgs, MetricSpec, SearchArgs, SharpnessArgs};
use crate::error::CliError;
use crate::ingest::{ingest, read_weights, Columns};
use crate::report::{
    BracketSource, CheckResult, ColumnBracket, EstimateResult, MetricInfo, PairBracket, PairReport,
    ReportDocument, RunResult,
};

/// Runs one command. `Err` means an input or configuration problem (exit 2);
/// certification failures are reported inside the document.
pub fn run(command: &Command) -> Result<ReportDocument, CliError> {
    match command {
        Command::Check(args) => run_check(args),
        Command::Estimate(args) => run_estimate(args),
        Command::Fuzz(args) => run_fuzz(args),
        Command::Sharpness(args) => run_sharpness(args),
    }
}

fn build_metric(spec: &MetricSpec, rows: usize) -> Result<SpaceMetric, CliError> {
    let metric = match spec {
        MetricSpec::Mean => mean_metric(rows)?,
        MetricSpec::Weights { path } => SpaceMetric::new(read_weights(path)?)?,
        MetricSpec::Grid(grid) => quadrature_metric(grid)?.0,
    };
    if metric.dim() != rows {
        return Err(GrussError::MetricMismatch {
            left: rows,
            right: metric.dim(),
        }
        .into());
    }
    Ok(metric)
}

fn column_name(table: &Columns, k: usize) -> Option<String> {
    table.names.as_ref().and_then(|n| n.get(k).cloned())
}

fn pick_bracket(
    explicit: Option<Bracket>,
    estimated: Option<&EstimatedBracket>,
    flag: &str,
) -> Result<PairBracket, CliError> {
    match (explicit, estimated) {
        (Some(bracket), _) => Ok(PairBracket {
            source: BracketSource::Explicit,
            bracket,
        }),
        (None, Some(est)) => Ok(PairBracket {
            source: BracketSource::Estimated,
            bracket: est.bracket,
        }),
        (None, None) => Err(CliError::Config(format!(
            "no bracket available: pass {flag} or --estimate-brackets"
        ))),
    }
}

/// Keeps condition failures as report data and propagates everything else.
fn certify<T>(
    result: Result<T, GrussError>,
    errors: &mut Vec<String>,
) -> Result<Option<T>, CliError> {
    match result {
        Ok(v) => Ok(Some(v)),
        Err(e @ GrussError::ConditionViolated { .. }) => {
            errors.push(e.to_string());
            Ok(None)
        }
        Err(e) => Err(e.into()),
    }
}

pub fn run_check(args: &CheckArgs) -> Result<ReportDocument, CliError> {
    let table = ingest(&args.input, args.field)?;
    if table.columns.len() < 2 {
        return Err(CliError::Config(format!(
            "check needs at least two columns, found {}",
            table.columns.len()
        )));
    }
    let rows = table.rows();
    let metric = build_metric(&args.metric, rows)?;
    let ctx = Context::new(args.field, args.mode);

    let estimated: Vec<Option<EstimatedBracket>> = table
        .columns
        .iter()
        .map(|c| {
            args.estimate_brackets
                .then(|| estimate_bracket(c.values(), args.field))
                .transpose()
        })
        .collect::<Result<_, _>>()?;

    let mut pairs = Vec::new();
    for i in 0..table.columns.len() {
        for j in i + 1..table.columns.len() {
            let (f, g) = (&table.columns[i], &table.columns[j]);
            let bx = pick_bracket(
                args.bracket_x.map(|b| b.0),
                estimated[i].as_ref(),
                "--bracket-x",
            )?;
            let by = pick_bracket(
                args.bracket_y.map(|b| b.0),
                estimated[j].as_ref(),
                "--bracket-y",
            )?;

            let half_sum = f.zip_with(g, |a, b| (a + b) * 0.5)?;
            let half_diff = f.zip_with(g, |a, b| (a - b) * 0.5)?;
            let both: Vec<_> = half_sum
                .values()
                .iter()
                .chain(half_diff.values())
                .copied()
                .collect();
            let companion_bracket = estimate_bracket(&both, args.field)?.bracket;

            let mut errors = Vec::new();
            let gruss = certify(
                mean_gruss(f, g, &bx.bracket, &by.bracket, &metric, &ctx),
                &mut errors,
            )?;
            let companion = certify(
                mean_companion(f, g, &companion_bracket, CompanionSign::Both, &metric, &ctx),
                &mut errors,
            )?;
            let certified = gruss.as_ref().is_some_and(|r| r.certified)
                && companion.as_ref().is_some_and(|r| r.certified);
            pairs.push(PairReport {
                x: i,
                y: j,
                bracket_x: bx,
                bracket_y: by,
                companion_bracket,
                gruss,
                companion,
                errors,
                certified,
            });
        }
    }

    let certified = pairs.iter().all(|p| p.certified);
    let exit_code = if certified || args.mode == Mode::Diagnostic {
        0
    } else {
        1
    };
    let info = MetricInfo {
        dim: metric.dim(),
        total_mass: metric.total_mass(),
        weights: metric.weights().to_vec(),
    };
    Ok(ReportDocument::new(
        Command::Check(args.clone()),
        certified,
        exit_code,
        RunResult::Check(CheckResult {
            rows,
            metric: info,
            pairs,
        }),
    ))
}

pub fn run_estimate(args: &EstimateArgs) -> Result<ReportDocument, CliError> {
    let table = ingest(&args.input, args.field)?;
    let columns = table
        .columns
        .iter()
        .enumerate()
        .map(|(k, c): (usize, &SampledFunction)| {
            estimate_bracket(c.values(), args.field)
                .map(|est| ColumnBracket::new(k, column_name(&table, k), &est))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let certified = columns
        .iter()
        .all(|c| c.cover_slack <= gruss_core::tolerance::IDENTITY_RTOL * c.radius.max(1.0));
    Ok(ReportDocument::new(
        Command::Estimate(args.clone()),
        certified,
        if certified { 0 } else { 1 },
        RunResult::Estimate(EstimateResult {
            rows: table.rows(),
            columns,
        }),
    ))
}

fn fuzz_config(args: &SearchArgs) -> Result<FuzzConfig, CliError> {
    Ok(FuzzConfig::new(
        args.seed,
        args.dims.0.clone(),
        args.field,
        args.samples,
        args.tolerance,
    )?)
}

pub fn run_fuzz(args: &SearchArgs) -> Result<ReportDocument, CliError> {
    let report = fuzz_all(&fuzz_config(args)?);
    let certified = report.total_violations() == 0;
    Ok(ReportDocument::new(
        Command::Fuzz(args.clone()),
        certified,
        if certified { 0 } else { 1 },
        RunResult::Fuzz(report),
    ))
}

pub fn run_sharpness(args: &SharpnessArgs) -> Result<ReportDocument, CliError> {
    let cfg = fuzz_config(&args.search)?;
    let result = sharpness_search(&cfg, args.kind);
    let certified = result.best_ratio <= 1.0 + cfg.tolerance;
    Ok(ReportDocument::new(
        Command::Sharpness(args.clone()),
        certified,
        if certified { 0 } else { 1 },
        RunResult::Sharpness(result),
    ))
}
