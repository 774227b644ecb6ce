//! Command-line driver.
//!
//! Subcommands: `run <config>`, `check <config>`, `converge <forced|return>`,
//! `oracle <return|solitary|tau0>`. Exit codes: 0 ok, 2 config error,
//! 3 compatibility violation, 4 runtime invariant breach.

use heave_core::exact::{return_to_equilibrium_reference, CubicContext, SolitaryWave};
use heave_core::nsw::check_compatibility;
use heave_harness::config::ScenarioConfig;
use heave_harness::convergence::{convergence_study, StudyKind};
use heave_harness::error::{HarnessError, Result};
use heave_harness::output::write_convergence;
use heave_harness::runner::Scenario;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

const USAGE: &str = "usage:
  heave run <config> [--outdir DIR]
  heave check <config>
  heave converge <forced|return> [--dx d1,d2,...] [--out FILE]
  heave oracle return [--delta0 D] [--t-end T] [--tol TOL] [--dt-out DT] [--out FILE]
  heave oracle solitary [--amplitude A] [--t T] [--dx DX] [--length L] [--out FILE]
  heave oracle tau0 --r R [--h0 H]";

struct Args {
    positional: Vec<String>,
    options: Vec<(String, String)>,
}

impl Args {
    fn parse(argv: &[String]) -> Result<Self> {
        let mut positional = Vec::new();
        let mut options = Vec::new();
        let mut it = argv.iter();
        while let Some(a) = it.next() {
            if let Some(name) = a.strip_prefix("--") {
                let value = it.next().ok_or_else(|| {
                    HarnessError::config(format!("option --{name} needs a value"))
                })?;
                options.push((name.to_string(), value.clone()));
            } else {
                positional.push(a.clone());
            }
        }
        Ok(Self {
            positional,
            options,
        })
    }

    fn opt(&self, name: &str) -> Option<&str> {
        self.options
            .iter()
            .rev()
            .find(|(n, _)| n == name)
            .map(|(_, v)| v.as_str())
    }

    fn opt_f64(&self, name: &str, default: f64) -> Result<f64> {
        match self.opt(name) {
            None => Ok(default),
            Some(v) => v.parse().map_err(|_| {
                HarnessError::config(format!("--{name}: expected a number, got `{v}`"))
            }),
        }
    }
}

fn cmd_run(args: &Args) -> Result<()> {
    let path = args
        .positional
        .first()
        .ok_or_else(|| HarnessError::config("run: missing config path".to_string()))?;
    let mut config = ScenarioConfig::from_file(Path::new(path))?;
    if let Some(dir) = args.opt("outdir") {
        config.outdir = Some(PathBuf::from(dir));
    }
    if config.outdir.is_none() {
        config.outdir = Some(PathBuf::from("out"));
    }
    let summary = heave_harness::run_scenario(&config)?;
    println!(
        "run complete: {} steps, max CFL {:.3}, constraint residual {:.3e}, mass residual {:.3e}",
        summary.steps, summary.max_cfl, summary.max_constraint_residual, summary.max_mass_residual
    );
    println!("artifacts in {}", config.outdir.unwrap().display());
    Ok(())
}

fn cmd_check(args: &Args) -> Result<()> {
    let path = args
        .positional
        .first()
        .ok_or_else(|| HarnessError::config("check: missing config path".to_string()))?;
    let config = ScenarioConfig::from_file(Path::new(path))?;
    let scenario = Scenario::build(&config)?;
    let (state, body_state) = scenario.initial_state()?;
    match (&scenario.body, &body_state) {
        (Some(setup), Some(bs)) => {
            let dt = scenario.fixed_dt.expect("body runs fix dt");
            let report = check_compatibility(
                &state,
                &scenario.grid,
                &scenario.params,
                &setup.region,
                |x| setup.geometry.hull_elevation_eq(x).unwrap_or(f64::NAN),
                bs.delta_n,
                bs.delta_np1,
                dt,
            );
            println!(
                "compatibility: surface mismatch {:.3e}, divergence mismatch {:.3e}",
                report.surface_mismatch, report.divergence_mismatch
            );
            if report.ok {
                println!("ok");
                Ok(())
            } else {
                Err(HarnessError::Compatibility(format!(
                    "max violation {:.3e}",
                    report.max_violation()
                )))
            }
        }
        _ => {
            println!("no body present; nothing to check");
            Ok(())
        }
    }
}

fn cmd_converge(args: &Args) -> Result<()> {
    let kind: StudyKind = args
        .positional
        .first()
        .ok_or_else(|| HarnessError::config("converge: missing study kind".to_string()))?
        .parse()
        .map_err(HarnessError::Config)?;
    let dx_list: Vec<f64> = match args.opt("dx") {
        None => vec![0.05, 0.025, 0.0125, 0.00625],
        Some(list) => list
            .split(',')
            .map(|s| {
                s.trim()
                    .parse::<f64>()
                    .map_err(|_| HarnessError::config(format!("--dx: bad entry `{s}`")))
            })
            .collect::<Result<_>>()?,
    };
    let table = convergence_study(kind, &dx_list)?;
    println!("dx,error,order_local");
    for row in &table.rows {
        println!("{},{},{}", row.dx, row.error, row.order_local);
    }
    println!("fitted order: {:.3}", table.fitted_order);
    let out = args.opt("out").unwrap_or("convergence.csv");
    write_convergence(Path::new(out), &table.as_tuples())?;
    println!("table written to {out}");
    Ok(())
}

fn cmd_oracle(args: &Args) -> Result<()> {
    let which = args
        .positional
        .first()
        .ok_or_else(|| HarnessError::config("oracle: missing kind".to_string()))?;
    match which.as_str() {
        "return" => {
            let config = heave_harness::presets::return_release(0.05);
            let scenario = Scenario::build(&config)?;
            let body = scenario.body.as_ref().unwrap().geometry;
            let delta0 = args.opt_f64("delta0", config.delta0)?;
            let t_end = args.opt_f64("t-end", 10.0)?;
            let tol = args.opt_f64("tol", 1e-10)?;
            let dt_out = args.opt_f64("dt-out", 0.01)?;
            let traj = return_to_equilibrium_reference(&body, delta0, t_end, tol)
                .map_err(HarnessError::Model)?;
            let mut out = open_out(args.opt("out"))?;
            writeln!(out, "t,delta,delta_dot")?;
            let mut t = 0.0;
            while t <= t_end + 1e-12 {
                let (d, v) = traj.state(t);
                writeln!(out, "{t},{d},{v}")?;
                t += dt_out;
            }
            Ok(())
        }
        "solitary" => {
            let config = heave_harness::presets::solitary_propagation(0.1);
            let params = heave_core::Params64::new(config.h0, config.g, config.rho)
                .map_err(HarnessError::Model)?;
            let a = args.opt_f64("amplitude", 3.0)?;
            let wave = SolitaryWave::new(&params, a).map_err(HarnessError::Model)?;
            println!("K = {} 1/m", wave.k);
            println!("c = {} m/s", wave.c);
            if args.opt("out").is_some() {
                let t = args.opt_f64("t", 0.0)?;
                let dx = args.opt_f64("dx", 0.1)?;
                let length = args.opt_f64("length", 600.0)?;
                let mut out = open_out(args.opt("out"))?;
                writeln!(out, "x,zeta,q")?;
                let n = (length / dx).round() as usize;
                for j in 0..=n {
                    let x = j as f64 * dx;
                    let (zeta, q) = wave.eval(x - length / 2.0, t);
                    writeln!(out, "{x},{zeta},{q}")?;
                }
            }
            Ok(())
        }
        "tau0" => {
            let r = args
                .opt("r")
                .ok_or_else(|| HarnessError::config("oracle tau0: --r is required".to_string()))?
                .parse::<f64>()
                .map_err(|_| HarnessError::config("--r: expected a number".to_string()))?;
            let h0 = args.opt_f64("h0", 15.0)?;
            let ctx = CubicContext::new(h0).map_err(HarnessError::Model)?;
            println!("r0 = {}", ctx.r0);
            let tau = ctx.tau0(r).map_err(HarnessError::Model)?;
            println!("tau0({r}) = {tau}");
            println!("contact elevation tau0^2 - h0 = {}", tau * tau - h0);
            Ok(())
        }
        other => Err(HarnessError::config(format!("unknown oracle `{other}`"))),
    }
}

fn open_out(path: Option<&str>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(std::io::BufWriter::new(std::fs::File::create(p)?)),
        None => Box::new(std::io::stdout().lock()),
    })
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let Some((cmd, rest)) = argv.split_first() else {
        eprintln!("{USAGE}");
        return ExitCode::from(2);
    };
    let run = || -> Result<()> {
        let args = Args::parse(rest)?;
        match cmd.as_str() {
            "run" => cmd_run(&args),
            "check" => cmd_check(&args),
            "converge" => cmd_converge(&args),
            "oracle" => cmd_oracle(&args),
            _ => Err(HarnessError::config(format!(
                "unknown subcommand `{cmd}`\n{USAGE}"
            ))),
        }
    };
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
