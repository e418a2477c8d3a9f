//! Cross-checks every encoder against a naive oracle that recomputes each
//! formula by counting straight over the raw training rows.

use gfmm::data::{Dataset, FeatureSchema};
use gfmm::encode::{fit, EncoderKind, EncoderParams, Phase};

const ALPHABET: [&str; 5] = ["v0", "v1", "v2", "v3", "v4"];
const LABELS: [&str; 3] = ["0", "1", "2"];

struct XorShift(u64);

impl XorShift {
    fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }

    fn below(&mut self, n: usize) -> usize {
        (self.next() % n as u64) as usize
    }
}

fn first_appearance<'a>(xs: &[&'a str]) -> Vec<&'a str> {
    let mut seen = Vec::new();
    for &x in xs {
        if !seen.contains(&x) {
            seen.push(x);
        }
    }
    seen
}

/// Recomputes one row's encoding from first principles. `row` is the row's
/// index into `train` and only matters in the train phase.
fn oracle_row(
    kind: EncoderKind,
    train: &[Vec<&str>],
    labels: &[&str],
    vals: &[&str],
    phase: Phase,
    row: usize,
) -> Vec<f64> {
    let classes = first_appearance(labels);
    let n = train.len() as f64;
    let targets: Vec<f64> = labels.iter().map(|l| l.parse::<f64>().unwrap()).collect();
    let mean = targets.iter().sum::<f64>() / n;
    let stat_classes: Vec<&str> = if classes.len() == 2 {
        vec![classes[1]]
    } else {
        classes.clone()
    };

    let mut out = Vec::new();
    for (j, &val) in vals.iter().enumerate() {
        let column: Vec<&str> = train.iter().map(|r| r[j]).collect();
        let seen = first_appearance(&column);
        let pos = seen.iter().position(|&s| s == val);
        let l = seen.len();
        let matches: Vec<usize> = (0..train.len()).filter(|&t| train[t][j] == val).collect();
        match kind {
            EncoderKind::Label => out.push(pos.map_or(l as f64, |p| p as f64)),
            EncoderKind::OneHot => {
                for k in 0..l {
                    out.push(if pos == Some(k) { 1.0 } else { 0.0 });
                }
            }
            EncoderKind::Sum => {
                for k in 0..l - 1 {
                    out.push(match pos {
                        Some(p) if p == l - 1 => -1.0,
                        Some(p) if p == k => 1.0,
                        _ => 0.0,
                    });
                }
            }
            EncoderKind::Helmert => {
                for k in 1..l {
                    out.push(match pos {
                        None => 0.0,
                        Some(0) => -1.0,
                        Some(p) => {
                            let i = p + 1;
                            if k == i - 1 {
                                (i - 1) as f64
                            } else if k < i - 1 {
                                0.0
                            } else {
                                -1.0
                            }
                        }
                    });
                }
            }
            EncoderKind::Target | EncoderKind::JamesStein => {
                for &cls in &stat_classes {
                    let n_c = labels.iter().filter(|&&x| x == cls).count() as f64;
                    let prior = n_c / n;
                    let v = if pos.is_none() {
                        prior
                    } else {
                        let nk = matches.len() as f64;
                        let nck =
                            matches.iter().filter(|&&t| labels[t] == cls).count() as f64;
                        if kind == EncoderKind::Target {
                            let lambda = 1.0 / (1.0 + (-(nk - 1.0)).exp());
                            lambda * nck / nk + (1.0 - lambda) * prior
                        } else {
                            let pk = nck / nk;
                            let gv = pk * (1.0 - pk) / nk;
                            let pv = prior * (1.0 - prior) / n;
                            let b = if gv + pv == 0.0 { 1.0 } else { gv / (gv + pv) };
                            (1.0 - b) * pk + b * prior
                        }
                    };
                    out.push(v);
                }
            }
            EncoderKind::Loo => {
                let v = match pos {
                    None => mean,
                    Some(_) => match phase {
                        Phase::Test => {
                            matches.iter().map(|&t| targets[t]).sum::<f64>()
                                / matches.len() as f64
                        }
                        Phase::Train => {
                            if matches.len() <= 1 {
                                mean
                            } else {
                                let s: f64 = matches
                                    .iter()
                                    .filter(|&&t| t != row)
                                    .map(|&t| targets[t])
                                    .sum();
                                s / (matches.len() - 1) as f64
                            }
                        }
                    },
                };
                out.push(v);
            }
            EncoderKind::CatBoost => {
                let v = match phase {
                    Phase::Test => {
                        let s: f64 = matches.iter().map(|&t| targets[t]).sum();
                        (s + mean) / (matches.len() as f64 + 1.0)
                    }
                    Phase::Train => {
                        let before: Vec<usize> =
                            (0..row).filter(|&t| train[t][j] == val).collect();
                        let s: f64 = before.iter().map(|&t| targets[t]).sum();
                        (s + mean) / (before.len() as f64 + 1.0)
                    }
                };
                out.push(v);
            }
        }
    }
    out
}

fn make_dataset(schema_text: &str, vals: &[Vec<&str>], labels: &[&str]) -> Dataset {
    let schema = FeatureSchema::parse(schema_text).unwrap();
    let numeric = vec![Vec::new(); labels.len()];
    let cats: Vec<Vec<String>> = vals
        .iter()
        .map(|r| r.iter().map(|s| s.to_string()).collect())
        .collect();
    let class: Vec<String> = labels.iter().map(|s| s.to_string()).collect();
    Dataset::from_rows(schema, &numeric, &cats, &class)
}

#[test]
fn every_encoder_matches_the_counting_oracle_on_random_tables() {
    let mut rng = XorShift(0x9e3779b97f4a7c15);
    for case in 0..200 {
        let feats = 1 + rng.below(3);
        let alpha = 2 + rng.below(4);
        let n_train = 1 + rng.below(20);
        let n_probe = 1 + rng.below(10);
        let n_cls = 2 + rng.below(2);

        let train_vals: Vec<Vec<&str>> = (0..n_train)
            .map(|_| (0..feats).map(|_| ALPHABET[rng.below(alpha)]).collect())
            .collect();
        let train_labels: Vec<&str> = (0..n_train).map(|_| LABELS[rng.below(n_cls)]).collect();
        let probe_vals: Vec<Vec<&str>> = (0..n_probe)
            .map(|_| {
                (0..feats)
                    .map(|_| ALPHABET[rng.below(ALPHABET.len())])
                    .collect()
            })
            .collect();
        let probe_labels = vec!["0"; n_probe];

        let mut schema_text = String::from("class = y\n");
        for j in 0..feats {
            schema_text.push_str(&format!("f{j} = categorical(v0, v1, v2, v3, v4)\n"));
        }
        let train = make_dataset(&schema_text, &train_vals, &train_labels);
        let probe = make_dataset(&schema_text, &probe_vals, &probe_labels);

        for kind in EncoderKind::ALL {
            let enc = fit(kind, &train, &EncoderParams::default()).unwrap();
            let got_train = enc.transform(&train, Phase::Train);
            let got_probe = enc.transform(&probe, Phase::Test);
            assert_eq!(got_train.data.n_cols(), got_train.provenance.len());

            for i in 0..n_train {
                let want = oracle_row(
                    kind,
                    &train_vals,
                    &train_labels,
                    &train_vals[i],
                    Phase::Train,
                    i,
                );
                let got = got_train.data.row(i);
                assert_eq!(got.len(), want.len(), "case {case} {kind} train row {i}");
                for (g, w) in got.iter().zip(&want) {
                    assert!(
                        (g - w).abs() < 1e-12,
                        "case {case} {kind} train row {i}: {got:?} vs {want:?}"
                    );
                }
            }
            for i in 0..n_probe {
                let want = oracle_row(
                    kind,
                    &train_vals,
                    &train_labels,
                    &probe_vals[i],
                    Phase::Test,
                    0,
                );
                let got = got_probe.data.row(i);
                assert_eq!(got.len(), want.len(), "case {case} {kind} probe row {i}");
                for (g, w) in got.iter().zip(&want) {
                    assert!(
                        (g - w).abs() < 1e-12,
                        "case {case} {kind} probe row {i}: {got:?} vs {want:?}"
                    );
                }
            }
        }
    }
}
