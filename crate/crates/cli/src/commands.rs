use std::io::Write;
use std::path::Path;

use poisson_di::analysis::{
    achievable_rate_curve, converse_rate_curve, converse_ratio_check, e0_bound, e1_structural_check,
    estimate_type1, estimate_type2, sample_ordered_pairs, type1_chebyshev_bound, ConverseParams,
    TrialReport, Type1Variant,
};
use poisson_di::capacity::{evaluate, BoundInputs, BoundName, BoundValue};
use poisson_di::channel::ChannelParams;
use poisson_di::codebook::{
    construct_balanced_block_lattice, construct_block_lattice, construct_lattice, format_f64, saturated_random, validate, Codebook,
    PackingParams, DEFAULT_L_CAP, SCHEMA_VERSION,
};
use poisson_di::identification::DecoderConfig;
use poisson_di::math::Dimension;
use poisson_di::rng::{derive_seed, experiment};

use crate::args::*;
use crate::output::{Cell, Format, Table};
use crate::{read_file, usage, CliError, Result};

const DEFAULT_TRIALS: u64 = 10_000;

pub fn dispatch(command: Command) -> Result<()> {
    match command {
        Command::Construct(a) => construct(a),
        Command::Validate(a) => validate_cmd(a),
        Command::Simulate(a) => simulate(a),
        Command::Bounds(a) => bounds(a),
        Command::Sweep(s) => match s.kind {
            SweepKind::RateCurve(a) => rate_curve(a),
            SweepKind::Bound(a) => sweep_bound(a),
            SweepKind::Error(a) => sweep_error(a),
        },
    }
}

fn emit(common: &Common, text: &str) -> Result<()> {
    match &common.out {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Io {
            path: path.clone(),
            source,
        }),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|source| CliError::Io {
                    path: "<stdout>".into(),
                    source,
                })
        }
    }
}

fn guard_input(common: &Common, input: &Path) -> Result<()> {
    if let Some(out) = &common.out {
        let same = match (out.canonicalize(), input.canonicalize()) {
            (Ok(a), Ok(b)) => a == b,
            _ => out == input,
        };
        if same {
            return Err(usage("--out must not overwrite the input codebook"));
        }
    }
    Ok(())
}

fn single<T: Copy>(values: &[T], flag: &str, default: Option<T>) -> Result<T> {
    match (values, default) {
        ([v], _) => Ok(*v),
        ([], Some(d)) => Ok(d),
        ([], None) => Err(usage(format!("--{flag} is required"))),
        _ => Err(usage(format!("--{flag} takes a single value for this command"))),
    }
}

fn dimension(n: u64) -> Result<Dimension> {
    Ok(Dimension::new(n)?)
}

fn powers(common: &Common) -> (f64, f64) {
    let p_max = common.p_max.unwrap_or(1.0);
    (p_max, common.p_ave.unwrap_or(p_max))
}

fn build_codebook(n: u64, b: f64, common: &Common, build: &BuildArgs, seed: u64) -> Result<Codebook> {
    let (p_max, p_ave) = powers(common);
    let mut params = PackingParams::derive(dimension(n)?, b, p_max, p_ave)?;
    if let Some(r0) = build.radius {
        params = params.with_radius(r0)?;
    }
    let l_cap = common.l_cap.unwrap_or(DEFAULT_L_CAP);
    Ok(match build.construction {
        ConstructionKind::SaturatedRandom => saturated_random(&params, l_cap, build.budget, seed)?.codebook,
        ConstructionKind::Lattice => construct_lattice(&params, l_cap)?,
        ConstructionKind::BlockLattice => construct_block_lattice(&params, l_cap)?,
        ConstructionKind::BalancedBlockLattice => construct_balanced_block_lattice(&params, l_cap)?,
    })
}

fn construction_label(cb: &Codebook) -> String {
    serde_json::to_value(cb.construction())
        .ok()
        .and_then(|v| v.as_str().map(str::to_string))
        .unwrap_or_default()
}

fn construct(a: ConstructArgs) -> Result<()> {
    let c = &a.common;
    let n = single(&c.n, "n", None)?;
    let b = single(&c.b, "b", None)?;
    let cb = build_codebook(n, b, c, &a.build, c.seed)?;
    let text = match c.format.unwrap_or(Format::Json) {
        Format::Json => cb.to_json() + "\n",
        Format::Csv => {
            let p = cb.params();
            let mut t = Table::new(vec![
                "schema_version", "command", "seed", "construction", "n", "b", "p_max", "p_ave", "a", "r0",
                "delta_n", "word", "x",
            ]);
            for (i, w) in cb.words().iter().enumerate() {
                let x: Vec<String> = w.as_slice().iter().map(|&v| format_f64(v)).collect();
                t.push(vec![
                    Cell::U(SCHEMA_VERSION as u64),
                    "construct".into(),
                    c.seed.into(),
                    construction_label(&cb).into(),
                    n.into(),
                    b.into(),
                    p.p_max.into(),
                    p.p_ave.into(),
                    p.a.into(),
                    p.r0.into(),
                    p.delta_n.into(),
                    i.into(),
                    x.join(";").into(),
                ]);
            }
            t.render(Format::Csv)
        }
    };
    emit(c, &text)
}

fn validate_cmd(a: ValidateArgs) -> Result<()> {
    let c = &a.common;
    guard_input(c, &a.codebook)?;
    let cb = Codebook::from_json(&read_file(&a.codebook)?)?;
    let p = *cb.params();
    let report = validate(&cb);
    let e1 = e1_structural_check(&cb);
    let lambda = match c.lambda.as_slice() {
        [] => None,
        [l] => Some(*l),
        _ => return Err(usage("--lambda takes a single value for this command")),
    };
    let converse = match lambda {
        Some(l) => {
            ChannelParams::new(l)?;
            let cp = ConverseParams::new(p.n, p.b, p.p_max)?;
            Some((cp.eps_prime, converse_ratio_check(&cb, l, &cp).len()))
        }
        None => None,
    };
    let count = |f: fn(&poisson_di::codebook::WordCheck) -> bool| report.words.iter().filter(|w| !f(w)).count();
    let mut t = Table::new(vec![
        "schema_version", "command", "seed", "codebook", "construction", "n", "b", "p_max", "p_ave", "r0",
        "words", "min_distance", "required_distance", "packing_ok", "constraints_ok", "peak_violations",
        "average_violations", "cube_violations", "e1_holds", "lambda", "eps_prime", "converse_violations",
    ]);
    t.push(vec![
        Cell::U(SCHEMA_VERSION as u64),
        "validate".into(),
        cb.seed().into(),
        a.codebook.display().to_string().into(),
        construction_label(&cb).into(),
        p.n.get().into(),
        p.b.into(),
        p.p_max.into(),
        p.p_ave.into(),
        p.r0.into(),
        cb.len().into(),
        report.min_distance.into(),
        report.required_distance.into(),
        report.packing_ok.into(),
        report.constraints_ok().into(),
        count(|w| w.peak_ok).into(),
        count(|w| w.average_ok).into(),
        count(|w| w.in_cube).into(),
        e1.holds().into(),
        lambda.into(),
        converse.map(|c| c.0).into(),
        converse.map(|c| c.1).into(),
    ]);
    emit(c, &t.render(c.format.unwrap_or(Format::Csv)))
}

fn error_table() -> Table {
    Table::new(vec![
        "schema_version", "command", "seed", "experiment_id", "estimate_seed", "n", "b", "lambda", "p_max",
        "p_ave", "r0", "delta_n", "construction", "words", "trials", "kind", "sent", "tested", "p_hat",
        "ci_low", "ci_high", "statistic_mean", "statistic_sd", "analytic_bound", "analytic_bound_literal",
    ])
}

struct ErrorRun<'a> {
    command: &'static str,
    seed: u64,
    trials: u64,
    message: usize,
    pairs: usize,
    table: &'a mut Table,
}

impl ErrorRun<'_> {
    /// Appends one type-I row and up to `pairs` type-II rows for `cb`.
    /// Estimate `k` of this batch uses sub-seed `derive_seed(seed, ESTIMATES, first_id + k)`.
    fn run(&mut self, cb: &Codebook, lambda: f64, first_id: u64) -> Result<u64> {
        let p = *cb.params();
        let channel = ChannelParams::new(lambda)?;
        let dec = DecoderConfig::new(cb, channel);
        let sound = type1_chebyshev_bound(lambda, p.a, p.n, p.b, Type1Variant::Sound)?;
        let literal = type1_chebyshev_bound(lambda, p.a, p.n, p.b, Type1Variant::Literal)?;
        let e0 = e0_bound(lambda, p.a, p.n, p.b)?;
        let mut id = first_id;
        let seed = self.seed;
        let sub = |id: u64| derive_seed(seed, experiment::ESTIMATES, id);

        let s = sub(id);
        let r = estimate_type1(self.message, &dec, self.trials, s)?;
        self.row(cb, lambda, id, s, "type1", &r, sound, literal);
        id += 1;
        let pair_seed = derive_seed(self.seed, experiment::PAIRS, first_id);
        for (i, j) in sample_ordered_pairs(cb.len(), self.pairs, pair_seed) {
            let s = sub(id);
            let r = estimate_type2(i, j, &dec, self.trials, s)?;
            self.row(cb, lambda, id, s, "type2", &r, e0, e0);
            id += 1;
        }
        Ok(id)
    }

    #[allow(clippy::too_many_arguments)]
    fn row(&mut self, cb: &Codebook, lambda: f64, id: u64, s: u64, kind: &str, r: &TrialReport, bound: f64, literal: f64) {
        let p = cb.params();
        self.table.push(vec![
            Cell::U(SCHEMA_VERSION as u64),
            self.command.into(),
            self.seed.into(),
            id.into(),
            s.into(),
            p.n.get().into(),
            p.b.into(),
            lambda.into(),
            p.p_max.into(),
            p.p_ave.into(),
            p.r0.into(),
            p.delta_n.into(),
            construction_label(cb).into(),
            cb.len().into(),
            self.trials.into(),
            kind.into(),
            r.sent.into(),
            r.tested.into(),
            r.estimate.p_hat.into(),
            r.estimate.ci_low.into(),
            r.estimate.ci_high.into(),
            r.statistic_mean.into(),
            r.statistic_sd.into(),
            bound.into(),
            literal.into(),
        ]);
    }
}

fn simulate(a: SimulateArgs) -> Result<()> {
    let c = &a.common;
    let cb = match &a.codebook {
        Some(path) => {
            guard_input(c, path)?;
            Codebook::from_json(&read_file(path)?)?
        }
        None => {
            let n = single(&c.n, "n", None)?;
            let b = single(&c.b, "b", None)?;
            build_codebook(n, b, c, &a.build, c.seed)?
        }
    };
    let lambda = single(&c.lambda, "lambda", Some(1.0))?;
    let mut table = error_table();
    ErrorRun {
        command: "simulate",
        seed: c.seed,
        trials: c.trials.unwrap_or(DEFAULT_TRIALS),
        message: a.message,
        pairs: a.pairs,
        table: &mut table,
    }
    .run(&cb, lambda, 0)?;
    emit(c, &table.render(c.format.unwrap_or(Format::Csv)))
}

fn sweep_error(a: SweepErrorArgs) -> Result<()> {
    let c = &a.common;
    if c.n.is_empty() || c.b.is_empty() {
        return Err(usage("--n and --b are required"));
    }
    let lambdas = if c.lambda.is_empty() { vec![1.0] } else { c.lambda.clone() };
    let mut table = error_table();
    let mut run = ErrorRun {
        command: "sweep error",
        seed: c.seed,
        trials: c.trials.unwrap_or(DEFAULT_TRIALS),
        message: a.message,
        pairs: a.pairs,
        table: &mut table,
    };
    let mut id = 0;
    for &n in &c.n {
        for &b in &c.b {
            let cb = build_codebook(n, b, c, &a.build, derive_seed(c.seed, experiment::CODEBOOK, id))?;
            for &lambda in &lambdas {
                id = run.run(&cb, lambda, id)?;
            }
        }
    }
    emit(c, &table.render(c.format.unwrap_or(Format::Csv)))
}

fn parse_atoms(raw: &[String]) -> Result<Vec<(f64, f64)>> {
    raw.iter()
        .map(|s| {
            let (v, p) = s
                .split_once(':')
                .ok_or_else(|| usage(format!("fading atom `{s}` must be written s:prob")))?;
            let parse = |x: &str| {
                x.trim()
                    .parse::<f64>()
                    .map_err(|_| usage(format!("fading atom `{s}` is not numeric")))
            };
            Ok((parse(v)?, parse(p)?))
        })
        .collect()
}

fn bound_inputs(c: &Common, b: &BoundParams) -> Result<BoundInputs> {
    let lambda = match c.lambda.as_slice() {
        [] => None,
        [l] => Some(*l),
        _ => return Err(usage("--lambda takes a single value for this command")),
    };
    Ok(BoundInputs {
        lambda,
        p_ave: c.p_ave,
        p_max: c.p_max,
        p: b.p,
        beta: b.beta,
        snr: b.snr,
        eps: b.eps,
        p_eps: b.p_eps,
        alpha: b.alpha,
        sigma: b.sigma,
        atoms: parse_atoms(&b.atoms)?,
    })
}

fn bound_cells(v: &BoundValue) -> Vec<Cell> {
    let map = |m: &std::collections::BTreeMap<String, f64>| Cell::Map(m.iter().map(|(k, v)| (k.clone(), *v)).collect());
    vec![
        v.name.as_str().into(),
        v.value.into(),
        v.asymptotic.into(),
        map(&v.params),
        map(&v.free_params),
        Cell::List(v.notes.clone()),
    ]
}

fn bounds(a: BoundsArgs) -> Result<()> {
    let c = &a.common;
    let name: BoundName = a.name.parse()?;
    let v = evaluate(name, &bound_inputs(c, &a.bound)?)?;
    let mut t = Table::new(vec![
        "schema_version", "command", "seed", "name", "value", "asymptotic", "params", "free_params", "notes",
    ]);
    let mut row = vec![Cell::U(SCHEMA_VERSION as u64), "bounds".into(), c.seed.into()];
    row.extend(bound_cells(&v));
    t.push(row);
    emit(c, &t.render(c.format.unwrap_or(Format::Csv)))
}

fn sweep_bound(a: SweepBoundArgs) -> Result<()> {
    let c = &a.common;
    let name: BoundName = a.name.parse()?;
    let base = bound_inputs(c, &a.bound)?;
    let mut t = Table::new(vec![
        "schema_version", "command", "seed", "axis", "axis_value", "name", "value", "asymptotic", "params",
        "free_params", "notes",
    ]);
    for &x in &a.values {
        let mut inputs = base.clone();
        let slot = match a.axis {
            Axis::Lambda => &mut inputs.lambda,
            Axis::PAve => &mut inputs.p_ave,
            Axis::PMax => &mut inputs.p_max,
            Axis::P => &mut inputs.p,
            Axis::Beta => &mut inputs.beta,
            Axis::Snr => &mut inputs.snr,
            Axis::Eps => &mut inputs.eps,
            Axis::PEps => &mut inputs.p_eps,
            Axis::Alpha => &mut inputs.alpha,
            Axis::Sigma => &mut inputs.sigma,
        };
        *slot = Some(x);
        let v = evaluate(name, &inputs)?;
        let mut row = vec![
            Cell::U(SCHEMA_VERSION as u64),
            "sweep bound".into(),
            c.seed.into(),
            a.axis.as_str().into(),
            x.into(),
        ];
        row.extend(bound_cells(&v));
        t.push(row);
    }
    emit(c, &t.render(c.format.unwrap_or(Format::Csv)))
}

fn rate_curve(a: RateCurveArgs) -> Result<()> {
    let c = &a.common;
    if c.n.is_empty() {
        return Err(usage("--n is required"));
    }
    let b = single(&c.b, "b", None)?;
    let lambda = single(&c.lambda, "lambda", Some(1.0))?;
    let (p_max, p_ave) = powers(c);
    let a_edge = p_ave.min(p_max);
    let ns = c.n.iter().map(|&n| dimension(n)).collect::<Result<Vec<_>>>()?;
    let lo = achievable_rate_curve(&ns, b, a_edge)?;
    let hi = converse_rate_curve(&ns, b, lambda, p_max)?;
    let mut t = Table::new(vec![
        "schema_version", "command", "seed", "b", "a", "lambda", "p_max", "n", "achievable_log2_count",
        "achievable_rate", "converse_log2_count", "converse_rate",
    ]);
    for (l, h) in lo.iter().zip(&hi) {
        t.push(vec![
            Cell::U(SCHEMA_VERSION as u64),
            "sweep rate-curve".into(),
            c.seed.into(),
            b.into(),
            a_edge.into(),
            lambda.into(),
            p_max.into(),
            l.n.get().into(),
            l.log2_count.into(),
            l.rate.into(),
            h.log2_count.into(),
            h.rate.into(),
        ]);
    }
    emit(c, &t.render(c.format.unwrap_or(Format::Csv)))
}
