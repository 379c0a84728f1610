mod parse;
mod report;

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use schwarzian_lab::battery::Battery;
use schwarzian_lab::certify::{certify_class, Check, VerifyConfig, DIEUDONNE_TOL, NORM_TOL};
use schwarzian_lab::distortion::TPD_TOL;
use schwarzian_lab::{
    dieudonne_check, estimate_norm, schwarzian, verify_tpd, weighted_profile, ClassSpec, Complex64,
    GridConfig, DEFAULT_ORDER,
};

use report::{complex_text, CheckOut, Report, F17};

#[derive(Parser)]
#[command(
    name = "schwarzian-lab",
    version,
    about = "Schwarzian derivatives and hyperbolic norms on the unit disk"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Series order for constructed functions.
    #[arg(long, env = "SCHWARZIAN_LAB_ORDER", default_value_t = DEFAULT_ORDER)]
    order: usize,
    /// Seed for random batteries.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the report to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Args, Clone)]
struct Grid {
    #[arg(long, default_value_t = 96)]
    grid_angles: usize,
    #[arg(long, default_value_t = 48)]
    grid_radii: usize,
    #[arg(long, default_value_t = 0.995)]
    r_max: f64,
}

impl Grid {
    fn config(&self) -> Result<GridConfig> {
        if !(self.r_max > 0.0 && self.r_max < 1.0) {
            bail!("--r-max must lie in (0, 1), got {}", self.r_max);
        }
        Ok(GridConfig::clustered(
            self.grid_angles,
            self.grid_radii,
            self.r_max,
        )?)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print S_f(z).
    Schwarzian {
        #[arg(long = "fn")]
        function: String,
        #[arg(long, allow_hyphen_values = true)]
        z: String,
        #[command(flatten)]
        common: Common,
    },
    /// Estimate the hyperbolic sup-norm of S_f.
    Norm {
        #[arg(long = "fn")]
        function: String,
        /// Class whose norm bound is compared against (defaults to the function's own class).
        #[arg(long, allow_hyphen_values = true)]
        class: Option<String>,
        #[command(flatten)]
        grid: Grid,
        #[command(flatten)]
        common: Common,
    },
    /// Certify the class theorems on a seeded random battery.
    Verify {
        #[arg(long, allow_hyphen_values = true)]
        class: String,
        /// Battery size.
        #[arg(long, default_value_t = 20)]
        n: usize,
        #[command(flatten)]
        grid: Grid,
        #[command(flatten)]
        common: Common,
    },
    /// Write the weighted modulus (1 - r^2)^2 |S_f| on a polar grid as CSV.
    Profile {
        #[arg(long = "fn")]
        function: String,
        #[command(flatten)]
        grid: Grid,
        #[command(flatten)]
        common: Common,
    },
    /// Check the variability region of omega'(z0) for one Schwarz function or a battery.
    Dieudonne {
        #[arg(long, allow_hyphen_values = true)]
        omega: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        z: Option<String>,
        /// Battery size when no --omega is given.
        #[arg(long, default_value_t = 50)]
        n: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Two-point distortion at one pair or on random pairs.
    Distortion {
        #[arg(long = "fn")]
        function: String,
        #[arg(long, allow_hyphen_values = true)]
        class: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        z: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        z2: Option<String>,
        /// Number of random pairs when no --z/--z2 are given.
        #[arg(long, default_value_t = 100)]
        n: usize,
        #[command(flatten)]
        common: Common,
    },
}

fn emit(common: &Common, text: &str) -> Result<()> {
    match &common.out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn finish(common: &Common, rep: &Report) -> Result<bool> {
    emit(
        common,
        &if common.json {
            rep.to_json()
        } else {
            rep.to_text()
        },
    )?;
    Ok(rep.passed())
}

fn slack_check(name: &'static str, slack: f64, tolerance: f64, detail: String) -> CheckOut {
    CheckOut::from(&Check {
        name,
        passed: slack >= -tolerance,
        worst_slack: Some(slack),
        tolerance,
        detail,
    })
}

fn resolve_class(explicit: Option<&str>, hint: Option<ClassSpec>) -> Result<Option<ClassSpec>> {
    explicit.map(parse::class).transpose().map(|c| c.or(hint))
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Schwarzian {
            function,
            z,
            common,
        } => {
            let f = parse::function(&function, common.order)?;
            let z = parse::complex(&z)?;
            let s = schwarzian(&f.function, z)?;
            let mut rep = Report::new("schwarzian", common.seed);
            rep.function = Some(f.text);
            rep.class = f.function.class_hint().map(|c| c.to_string());
            rep.value("z", z)
                .value("schwarzian", s)
                .value("modulus", s.norm());
            finish(&common, &rep)
        }
        Command::Norm {
            function,
            class,
            grid,
            common,
        } => {
            let f = parse::function(&function, common.order)?;
            let spec = resolve_class(class.as_deref(), f.function.class_hint())?;
            let mut nr = estimate_norm(&f.function, &grid.config()?)?;
            if let Some(spec) = spec {
                nr = nr.with_bound(spec.norm_bound());
            }
            let mut rep = Report::new("norm", common.seed);
            rep.function = Some(f.text);
            rep.class = spec.map(|c| c.to_string());
            rep.norm(&nr);
            if let Some(spec) = spec {
                let bound = spec.norm_bound();
                rep.checks.push(slack_check(
                    "norm_bound",
                    bound - nr.estimate,
                    NORM_TOL,
                    format!(
                        "estimate {} vs bound {}",
                        F17(nr.estimate).text(),
                        F17(bound).text()
                    ),
                ));
            }
            finish(&common, &rep)
        }
        Command::Verify {
            class,
            n,
            grid,
            common,
        } => {
            let spec = parse::class(&class)?;
            let mut cfg = VerifyConfig::new(spec, n, common.seed);
            cfg.norm_grid = grid.config()?;
            let cert = certify_class(&cfg)?;
            let mut rep = Report::new("verify", common.seed);
            rep.function = Some(cert.extremal.to_string());
            rep.class = Some(spec.to_string());
            rep.norm(&cert.extremal_norm);
            rep.theoretical_bound = Some(F17(spec.norm_bound()));
            rep.slack = Some(F17(spec.norm_bound() - cert.extremal_norm.estimate));
            rep.checks = cert.checks.iter().map(CheckOut::from).collect();
            rep.value("members", n);
            match cert.qc_constant {
                Some(k) => rep.value("qc_constant", k),
                None => rep.value("qc_constant", "none".to_string()),
            };
            finish(&common, &rep)
        }
        Command::Profile {
            function,
            grid,
            common,
        } => {
            let f = parse::function(&function, common.order)?;
            let cfg = grid.config()?;
            let mut csv = String::from("r,theta,weighted_modulus\n");
            for (r, t) in cfg.polar_points() {
                let w = weighted_profile(&f.function, r, t)?;
                let _ = writeln!(csv, "{},{},{}", F17(r).text(), F17(t).text(), F17(w).text());
            }
            emit(&common, &csv)?;
            Ok(true)
        }
        Command::Dieudonne {
            omega,
            z,
            n,
            common,
        } => {
            let mut rep = Report::new("dieudonne", common.seed);
            match (omega, z) {
                (Some(w), Some(z)) => {
                    let w = parse::omega(&w)?;
                    let z0 = parse::complex(&z)?;
                    let d = dieudonne_check(&w, z0)?;
                    rep.function = Some(w.to_string());
                    rep.value("z0", z0).value("lhs", d.lhs).value("rhs", d.rhs);
                    rep.checks.push(slack_check(
                        "dieudonne",
                        d.slack,
                        DIEUDONNE_TOL,
                        format!("at {}", complex_text(z0)),
                    ));
                }
                (None, None) => {
                    let mut bat = Battery::new(common.seed);
                    let mut worst = f64::INFINITY;
                    for w in bat.schwarz_functions(n) {
                        for _ in 0..20 {
                            worst = worst
                                .min(dieudonne_check(&w, bat.nonzero_point(1e-3, 0.99))?.slack);
                        }
                    }
                    rep.value("schwarz_functions", n);
                    rep.checks.push(slack_check(
                        "dieudonne",
                        worst,
                        DIEUDONNE_TOL,
                        format!("{n} functions x 20 points"),
                    ));
                }
                _ => bail!("give both --omega and --z, or neither for a random battery"),
            }
            finish(&common, &rep)
        }
        Command::Distortion {
            function,
            class,
            z,
            z2,
            n,
            common,
        } => {
            let f = parse::function(&function, common.order)?;
            let Some(spec) = resolve_class(class.as_deref(), f.function.class_hint())? else {
                bail!("--class is required for this function");
            };
            let pairs: Vec<(Complex64, Complex64)> = match (z, z2) {
                (Some(a), Some(b)) => vec![(parse::complex(&a)?, parse::complex(&b)?)],
                (None, None) => Battery::new(common.seed).pairs(n),
                _ => bail!("give both --z and --z2, or neither for random pairs"),
            };
            let tpd = verify_tpd(&f.function, spec, &pairs)?;
            let mut rep = Report::new("distortion", common.seed);
            rep.function = Some(f.text);
            rep.class = Some(spec.to_string());
            rep.value("delta", tpd.delta).value("pairs", pairs.len());
            if let [r] = tpd.results.as_slice() {
                rep.value("lambda", r.lambda)
                    .value("delta_f", r.delta_f)
                    .value("upper", r.upper);
                if let Some(l) = r.lower {
                    rep.value("lower", l);
                }
            }
            let worst = tpd
                .worst_lower_slack
                .map_or(tpd.worst_upper_slack, |l| l.min(tpd.worst_upper_slack));
            rep.checks.push(slack_check(
                "two_point_distortion",
                worst,
                TPD_TOL,
                format!("lower bound not applicable on {} pairs", tpd.lower_skipped),
            ));
            finish(&common, &rep)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
