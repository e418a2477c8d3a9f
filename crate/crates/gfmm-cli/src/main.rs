//! Command-line front end for the hyperbox experiment toolkit.

use std::error::Error;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use gfmm::data::SyntheticVariant;
use gfmm::encode::{fit as fit_encoder, EncoderKind, EncoderParams, Phase};
use gfmm::experiment::config::ExperimentConfig;
use gfmm::experiment::pipeline::PipelineSettings;
use gfmm::experiment::reproduce::{
    render_claims, render_comparisons, reproduce, Comparison, ReproduceOptions,
};
use gfmm::experiment::runner::{load_dataset, run_and_write};
use gfmm::experiment::synth::{render_synthetic, run_synthetic};

#[derive(Parser)]
#[command(
    name = "gfmm",
    version,
    about = "Hyperbox classifiers over mixed numeric and categorical data"
)]
struct Cli {
    /// Random seed (overrides the config value where one applies).
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Worker threads; 0 or omitted means one per core.
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Directory for report files.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the configured experiment grid and write CSV/JSON/diagram reports.
    Run {
        /// Config file; omitted means the built-in reference protocol on
        /// every dataset found in the data directory.
        #[arg(long)]
        config: Option<PathBuf>,

        /// Data directory (overrides the config value).
        #[arg(long)]
        data_dir: Option<PathBuf>,
    },

    /// Rerun reference result cells and print fresh-vs-reference tables
    /// plus the three ordering claims.
    Reproduce {
        #[arg(long, default_value = "data")]
        data_dir: PathBuf,

        /// Comma-separated dataset names; omitted means every roster
        /// dataset present in the data directory.
        #[arg(long, value_delimiter = ',')]
        datasets: Vec<String>,

        /// Cross-validation folds.
        #[arg(long, default_value_t = 4)]
        k: usize,

        /// Cross-validation repeats.
        #[arg(long, default_value_t = 10)]
        repeats: usize,
    },

    /// Regenerate the synthetic mixtures and print accuracy, box, and
    /// secondary-criterion diagnostics next to the reference run.
    Synth {
        /// Which mixture: 1 (two-value categorical), 2 (ten-value), both.
        #[arg(long, default_value = "both")]
        variant: String,

        /// Box-size thresholds to run.
        #[arg(long, value_delimiter = ',', default_values_t = vec![0.1, 0.7, 1.0])]
        thetas: Vec<f64>,
    },

    /// Fit one categorical encoder on a dataset and print the encoded
    /// columns with their provenance.
    EncodeInspect {
        #[arg(long, default_value = "data")]
        data_dir: PathBuf,

        /// Dataset name, resolved in the data directory.
        #[arg(long)]
        dataset: String,

        /// label, onehot, sum, helmert, target, jamesstein, loo, catboost.
        #[arg(long)]
        encoder: String,

        /// Rows to print.
        #[arg(long, default_value_t = 10)]
        limit: usize,

        /// Target encoding: sample count of equal posterior/prior weight.
        #[arg(long)]
        target_m: Option<f64>,

        /// Target encoding: transition steepness.
        #[arg(long)]
        target_z: Option<f64>,

        /// CatBoost encoding: prior weight.
        #[arg(long)]
        catboost_z: Option<f64>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            let mut source = e.source();
            while let Some(s) = source {
                eprintln!("  caused by: {s}");
                source = s.source();
            }
            ExitCode::FAILURE
        }
    }
}

fn configure_pool(jobs: Option<usize>) {
    if let Some(jobs) = jobs.filter(|&j| j > 0) {
        // a second call in the same process is fine to ignore
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
}

fn dispatch(cli: Cli) -> Result<(), Box<dyn Error>> {
    match cli.command {
        Command::Run { config, data_dir } => {
            let mut config = match config {
                Some(path) => ExperimentConfig::from_file(&path)?,
                None => ExperimentConfig::default(),
            };
            if let Some(dir) = data_dir {
                config.data_dir = dir;
            }
            if let Some(seed) = cli.seed {
                config.seed = seed;
            }
            if let Some(jobs) = cli.jobs {
                config.jobs = jobs;
            }
            if let Some(out) = cli.out {
                config.out = out;
            }
            config.validate()?;
            let (report, written) = run_and_write(&config)?;
            let evaluated = report
                .rows
                .iter()
                .filter(|r| r.summary.is_some())
                .count();
            println!(
                "evaluated {evaluated} of {} grid cells across {} report families",
                report.rows.len(),
                report.families.len()
            );
            for family in &report.families {
                println!(
                    "  {} theta={}: F={:.4} critical={:.4} reject={}",
                    family.track, family.theta, family.test.f_f, family.test.critical,
                    family.test.reject
                );
            }
            for skip in &report.skipped {
                println!("  skipped: {skip}");
            }
            for path in written {
                println!("wrote {}", path.display());
            }
            Ok(())
        }
        Command::Reproduce {
            data_dir,
            datasets,
            k,
            repeats,
        } => {
            configure_pool(cli.jobs);
            let options = ReproduceOptions {
                data_dir,
                datasets,
                cv_k: k,
                cv_repeats: repeats,
                seed: cli.seed.unwrap_or(0),
            };
            let report = reproduce(&options)?;
            println!("datasets: {}", report.datasets.join(", "));
            print!("{}", render_comparisons(&report.comparisons));
            print!("{}", render_claims(&report.claims));
            if let Some(out) = cli.out {
                fs::create_dir_all(&out)?;
                let csv = out.join("reproduce.csv");
                fs::write(&csv, comparisons_csv(&report.comparisons))?;
                let claims = out.join("claims.txt");
                fs::write(&claims, render_claims(&report.claims))?;
                println!("wrote {}", csv.display());
                println!("wrote {}", claims.display());
            }
            Ok(())
        }
        Command::Synth { variant, thetas } => {
            configure_pool(cli.jobs);
            let variants = match variant.as_str() {
                "1" => vec![SyntheticVariant::TwoValueCat],
                "2" => vec![SyntheticVariant::TenValueCat],
                "both" => vec![SyntheticVariant::TwoValueCat, SyntheticVariant::TenValueCat],
                other => return Err(format!("unknown variant `{other}`; use 1, 2, both").into()),
            };
            let settings = PipelineSettings::default();
            let seed = cli.seed.unwrap_or(0);
            let mut text = String::new();
            for variant in variants {
                let rows = run_synthetic(variant, &thetas, seed, &settings)?;
                text.push_str(&render_synthetic(&rows));
            }
            print!("{text}");
            if let Some(out) = cli.out {
                fs::create_dir_all(&out)?;
                let path = out.join("synthetic.txt");
                fs::write(&path, text)?;
                println!("wrote {}", path.display());
            }
            Ok(())
        }
        Command::EncodeInspect {
            data_dir,
            dataset,
            encoder,
            limit,
            target_m,
            target_z,
            catboost_z,
        } => {
            let kind = EncoderKind::parse(&encoder).ok_or_else(|| {
                format!(
                    "unknown encoder `{encoder}`; valid: {}",
                    EncoderKind::ALL
                        .iter()
                        .map(|k| k.name())
                        .collect::<Vec<_>>()
                        .join(", ")
                )
            })?;
            let ds = load_dataset(&data_dir, &dataset)?;
            let mut params = EncoderParams::default();
            if let Some(m) = target_m {
                params.target_m = m;
            }
            if let Some(z) = target_z {
                params.target_z = z;
            }
            if let Some(z) = catboost_z {
                params.catboost_z = z;
            }
            let fitted = fit_encoder(kind, &ds, &params)?;
            let encoded = fitted.transform(&ds, Phase::Train);
            let names: Vec<String> = encoded
                .provenance
                .iter()
                .map(|(feat, comp)| format!("{}.{comp}", ds.schema.categorical_names()[*feat]))
                .collect();
            println!(
                "{} rows, {} encoded columns from {} categorical features",
                encoded.data.n_rows(),
                encoded.data.n_cols(),
                ds.n_categorical()
            );
            println!("row   class  {}", names.join("  "));
            for r in 0..encoded.data.n_rows().min(limit) {
                let values: Vec<String> = encoded
                    .data
                    .row(r)
                    .iter()
                    .map(|v| format!("{v:.5}"))
                    .collect();
                println!(
                    "{r:<5} {:<6} {}",
                    ds.class_set()[ds.labels()[r] as usize],
                    values.join("  ")
                );
            }
            Ok(())
        }
    }
}

fn comparisons_csv(comparisons: &[Comparison]) -> String {
    let mut out = String::from("dataset,method,theta,metric,reference,reproduced,delta\n");
    for c in comparisons {
        out.push_str(&format!(
            "{},{},{},{},{:.5},{:.5},{:.5}\n",
            c.dataset,
            c.method,
            c.theta.map_or("-".to_string(), |t| t.to_string()),
            c.metric,
            c.reference,
            c.reproduced,
            c.delta()
        ));
    }
    out
}
