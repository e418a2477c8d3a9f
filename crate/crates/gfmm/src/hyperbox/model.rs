//! Trained hyperbox models: box storage, the two tie-breaking prediction
//! rules, and a flat text serialization.

use std::fs;
use std::hash::{Hash, Hasher};
use std::path::Path;

use thiserror::Error;

use super::geometry::membership;
use crate::data::CatValue;
use crate::mixed::CatDistTable;

/// Categorical bound pair for distance-bound boxes; `None` is the open
/// bound marker that matches every value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundPair {
    pub e: Option<u32>,
    pub f: Option<u32>,
}

/// Per-box categorical payload.
#[derive(Debug, Clone, PartialEq)]
pub enum CatPayload {
    /// Numeric-only box.
    None,
    /// One `(e, f)` bound pair per categorical feature.
    Bounds(Vec<BoundPair>),
    /// One bit set per categorical feature; bit `i` marks domain value `i`.
    Bits(Vec<u128>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Hyperbox {
    /// Per numeric dimension minimum / maximum points.
    pub v: Vec<f64>,
    pub w: Vec<f64>,
    pub class: u32,
    /// Number of training samples this box absorbed.
    pub cardinality: usize,
    /// Monotone creation order; survives box deletion, unlike the index.
    pub creation_index: usize,
    /// Set when a contraction ever shrank this box; training points it
    /// absorbed earlier may no longer reach membership 1.
    pub contracted: bool,
    pub cat: CatPayload,
}

impl Hyperbox {
    pub fn center(&self) -> Vec<f64> {
        self.v
            .iter()
            .zip(&self.w)
            .map(|(l, h)| 0.5 * (l + h))
            .collect()
    }
}

/// Which learner produced the model; fixes both the membership function and
/// the tie-breaking rule used at prediction time.
#[derive(Debug, Clone, PartialEq)]
pub enum ModelKind {
    /// Incremental learner with contraction; predicts by nearest center.
    Onln,
    /// Incremental learner that refuses overlapping expansions; predicts by
    /// cardinality-weighted class probability.
    Iol,
    /// Full-matrix agglomerative learner; predicts like `Iol`.
    AggloSm,
    /// Anchor-sweep agglomerative learner; predicts like `Iol`.
    Agglo2,
    /// Mixed-attribute learner with categorical bound pairs and a fitted
    /// value-distance table.
    MixedBounds(CatDistTable),
    /// Mixed-attribute learner with categorical bit sets.
    MixedBits,
}

impl ModelKind {
    fn tag(&self) -> &'static str {
        match self {
            ModelKind::Onln => "onln",
            ModelKind::Iol => "iol",
            ModelKind::AggloSm => "agglo-sm",
            ModelKind::Agglo2 => "agglo-2",
            ModelKind::MixedBounds(_) => "mixed-bounds",
            ModelKind::MixedBits => "mixed-bits",
        }
    }
}

/// How exact prediction ties are broken after the secondary criterion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TieBreak {
    /// Oldest box wins. The default: reproducible run to run.
    Deterministic,
    /// Pseudo-random pick derived from the seed and the sample.
    Seeded(u64),
}

#[derive(Debug, Clone, PartialEq)]
pub struct GfmmModel {
    pub boxes: Vec<Hyperbox>,
    /// Membership slope per numeric dimension.
    pub gamma: Vec<f64>,
    pub theta: f64,
    pub kind: ModelKind,
    pub tie_break: TieBreak,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Prediction {
    pub class: u32,
    /// True when the winner set spanned more than one class, so membership
    /// alone could not decide and a secondary criterion was invoked.
    pub used_secondary: bool,
}

impl GfmmModel {
    pub fn n_numeric(&self) -> usize {
        self.gamma.len()
    }

    /// Membership of one sample in every box, in box storage order.
    pub fn memberships(&self, xl: &[f64], xu: &[f64], cat: &[CatValue]) -> Vec<f64> {
        self.boxes
            .iter()
            .map(|b| self.box_membership(b, xl, xu, cat))
            .collect()
    }

    fn box_membership(&self, b: &Hyperbox, xl: &[f64], xu: &[f64], cat: &[CatValue]) -> f64 {
        match (&self.kind, &b.cat) {
            (ModelKind::MixedBounds(table), CatPayload::Bounds(pairs)) => {
                crate::mixed::membership_m1(xl, xu, cat, &b.v, &b.w, pairs, table, &self.gamma)
            }
            (ModelKind::MixedBits, CatPayload::Bits(bits)) => {
                crate::mixed::membership_m2(xl, xu, cat, &b.v, &b.w, bits, &self.gamma)
            }
            _ => membership(xl, xu, &b.v, &b.w, &self.gamma),
        }
    }

    /// Class of the sample together with the secondary-criterion flag.
    pub fn predict(&self, xl: &[f64], xu: &[f64], cat: &[CatValue]) -> Prediction {
        let memberships = self.memberships(xl, xu, cat);
        match self.kind {
            ModelKind::Iol | ModelKind::AggloSm | ModelKind::Agglo2 => {
                predict_cardinality(&self.boxes, &memberships)
            }
            ModelKind::Onln
            | ModelKind::MixedBounds(_)
            | ModelKind::MixedBits => {
                predict_manhattan(&self.boxes, &memberships, xl, xu, self.tie_break)
            }
        }
    }
}

fn winner_indices(memberships: &[f64]) -> Vec<usize> {
    let best = memberships.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    (0..memberships.len())
        .filter(|&i| memberships[i] == best)
        .collect()
}

fn single_class(boxes: &[Hyperbox], winners: &[usize]) -> Option<u32> {
    let first = boxes[winners[0]].class;
    winners
        .iter()
        .all(|&i| boxes[i].class == first)
        .then_some(first)
}

fn oldest(boxes: &[Hyperbox], among: &[usize]) -> usize {
    *among
        .iter()
        .min_by_key(|&&i| boxes[i].creation_index)
        .expect("non-empty winner set")
}

fn seeded_pick(seed: u64, xl: &[f64], xu: &[f64], n: usize) -> usize {
    let mut h = std::collections::hash_map::DefaultHasher::new();
    seed.hash(&mut h);
    for v in xl.iter().chain(xu) {
        v.to_bits().hash(&mut h);
    }
    (h.finish() % n as u64) as usize
}

/// Winner class by largest membership; among tied winners of different
/// classes, the box whose center is nearest the sample center in Manhattan
/// distance decides. Distance ties fall back to the oldest box, or to a
/// seeded pick.
pub fn predict_manhattan(
    boxes: &[Hyperbox],
    memberships: &[f64],
    xl: &[f64],
    xu: &[f64],
    tie_break: TieBreak,
) -> Prediction {
    assert!(!boxes.is_empty(), "cannot predict with an empty model");
    let winners = winner_indices(memberships);
    if let Some(class) = single_class(boxes, &winners) {
        return Prediction {
            class,
            used_secondary: false,
        };
    }
    let center: Vec<f64> = xl.iter().zip(xu).map(|(l, h)| 0.5 * (l + h)).collect();
    let dist = |i: usize| -> f64 {
        boxes[i]
            .center()
            .iter()
            .zip(&center)
            .map(|(a, b)| (a - b).abs())
            .sum()
    };
    let best = winners.iter().map(|&i| dist(i)).fold(f64::INFINITY, f64::min);
    let nearest: Vec<usize> = winners.iter().copied().filter(|&i| dist(i) == best).collect();
    let pick = match tie_break {
        TieBreak::Deterministic => oldest(boxes, &nearest),
        TieBreak::Seeded(seed) => {
            if nearest.len() == 1 {
                nearest[0]
            } else {
                nearest[seeded_pick(seed, xl, xu, nearest.len())]
            }
        }
    };
    Prediction {
        class: boxes[pick].class,
        used_secondary: true,
    }
}

/// Winner class by largest membership; among tied winners of different
/// classes, each class scores the membership-weighted cardinality of its
/// winning boxes, normalized over the winner set. Score ties fall back to
/// the oldest contending box.
pub fn predict_cardinality(boxes: &[Hyperbox], memberships: &[f64]) -> Prediction {
    assert!(!boxes.is_empty(), "cannot predict with an empty model");
    let winners = winner_indices(memberships);
    if let Some(class) = single_class(boxes, &winners) {
        return Prediction {
            class,
            used_secondary: false,
        };
    }
    let total: f64 = winners
        .iter()
        .map(|&i| boxes[i].cardinality as f64 * memberships[i])
        .sum();
    let mut classes: Vec<u32> = winners.iter().map(|&i| boxes[i].class).collect();
    classes.sort_unstable();
    classes.dedup();
    let score = |c: u32| -> f64 {
        let mass: f64 = winners
            .iter()
            .filter(|&&i| boxes[i].class == c)
            .map(|&i| boxes[i].cardinality as f64 * memberships[i])
            .sum();
        if total > 0.0 {
            mass / total
        } else {
            0.0
        }
    };
    let best = classes.iter().map(|&c| score(c)).fold(f64::NEG_INFINITY, f64::max);
    let contending: Vec<u32> = classes.iter().copied().filter(|&c| score(c) == best).collect();
    let class = if contending.len() == 1 {
        contending[0]
    } else {
        let among: Vec<usize> = winners
            .iter()
            .copied()
            .filter(|&i| contending.contains(&boxes[i].class))
            .collect();
        boxes[oldest(boxes, &among)].class
    };
    Prediction {
        class,
        used_secondary: true,
    }
}

#[derive(Debug, Error)]
pub enum ModelIoError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("unsupported model format `{0}`")]
    BadHeader(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn join_f64(vals: &[f64]) -> String {
    vals.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn split_f64(text: &str, line: usize) -> Result<Vec<f64>, ModelIoError> {
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|t| {
            t.parse::<f64>().map_err(|_| ModelIoError::Parse {
                line,
                msg: format!("bad float `{t}`"),
            })
        })
        .collect()
}

fn bound_token(b: Option<u32>) -> String {
    match b {
        Some(v) => v.to_string(),
        None => "_".to_string(),
    }
}

impl GfmmModel {
    /// Flat, versioned, line-oriented text form. Floats are written in
    /// shortest round-trip notation, so save/load is bit exact.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str("gfmm-model v1\n");
        out.push_str(&format!("kind {}\n", self.kind.tag()));
        out.push_str(&format!("theta {}\n", self.theta));
        out.push_str(&format!("gamma {}\n", join_f64(&self.gamma)));
        match self.tie_break {
            TieBreak::Deterministic => out.push_str("tie deterministic\n"),
            TieBreak::Seeded(s) => out.push_str(&format!("tie seeded:{s}\n")),
        }
        out.push_str(&format!("boxes {}\n", self.boxes.len()));
        for b in &self.boxes {
            let cat = match &b.cat {
                CatPayload::None => "-".to_string(),
                CatPayload::Bounds(pairs) => {
                    let body = pairs
                        .iter()
                        .map(|p| format!("{}/{}", bound_token(p.e), bound_token(p.f)))
                        .collect::<Vec<_>>()
                        .join("|");
                    format!("p:{body}")
                }
                CatPayload::Bits(bits) => {
                    let body = bits
                        .iter()
                        .map(|b| b.to_string())
                        .collect::<Vec<_>>()
                        .join(",");
                    format!("b:{body}")
                }
            };
            out.push_str(&format!(
                "box class={} n={} idx={} contracted={} v={} w={} cat={}\n",
                b.class,
                b.cardinality,
                b.creation_index,
                u8::from(b.contracted),
                join_f64(&b.v),
                join_f64(&b.w),
                cat
            ));
        }
        if let ModelKind::MixedBounds(table) = &self.kind {
            out.push_str(&format!("cattable dims={}\n", table.dims.len()));
            for d in &table.dims {
                let present = d
                    .present
                    .iter()
                    .map(|&p| if p { "1" } else { "0" })
                    .collect::<Vec<_>>()
                    .join(",");
                out.push_str(&format!(
                    "dim values={} present={} h={}\n",
                    d.values,
                    present,
                    join_f64(&d.h)
                ));
            }
        }
        out.push_str("end\n");
        out
    }

    pub fn from_text(text: &str) -> Result<GfmmModel, ModelIoError> {
        let mut lines = text.lines().enumerate();
        let mut next = |expect: &str| -> Result<(usize, String), ModelIoError> {
            lines
                .next()
                .map(|(i, l)| (i + 1, l.to_string()))
                .ok_or_else(|| ModelIoError::Parse {
                    line: 0,
                    msg: format!("missing `{expect}` line"),
                })
        };
        let (_, header) = next("header")?;
        if header.trim() != "gfmm-model v1" {
            return Err(ModelIoError::BadHeader(header));
        }
        let field = |line: usize, text: &str, key: &str| -> Result<String, ModelIoError> {
            text.strip_prefix(key)
                .and_then(|r| r.strip_prefix(' ').or(Some(r)).map(str::to_string))
                .ok_or_else(|| ModelIoError::Parse {
                    line,
                    msg: format!("expected `{key} ...`"),
                })
        };
        let (l, kind_line) = next("kind")?;
        let kind_tag = field(l, &kind_line, "kind")?;
        let (l, theta_line) = next("theta")?;
        let theta = field(l, &theta_line, "theta")?
            .parse::<f64>()
            .map_err(|_| ModelIoError::Parse {
                line: l,
                msg: "bad theta".into(),
            })?;
        let (l, gamma_line) = next("gamma")?;
        let gamma = split_f64(&field(l, &gamma_line, "gamma")?, l)?;
        let (l, tie_line) = next("tie")?;
        let tie_text = field(l, &tie_line, "tie")?;
        let tie_break = if tie_text == "deterministic" {
            TieBreak::Deterministic
        } else if let Some(s) = tie_text.strip_prefix("seeded:") {
            TieBreak::Seeded(s.parse().map_err(|_| ModelIoError::Parse {
                line: l,
                msg: "bad tie seed".into(),
            })?)
        } else {
            return Err(ModelIoError::Parse {
                line: l,
                msg: format!("unknown tie mode `{tie_text}`"),
            });
        };
        let (l, boxes_line) = next("boxes")?;
        let n_boxes: usize = field(l, &boxes_line, "boxes")?
            .parse()
            .map_err(|_| ModelIoError::Parse {
                line: l,
                msg: "bad box count".into(),
            })?;

        let mut boxes = Vec::with_capacity(n_boxes);
        for _ in 0..n_boxes {
            let (l, line) = next("box")?;
            let mut class = None;
            let mut n = None;
            let mut idx = None;
            let mut contracted = None;
            let mut v = None;
            let mut w = None;
            let mut cat = None;
            let body = field(l, &line, "box")?;
            for token in body.split_whitespace() {
                let (key, value) = token.split_once('=').ok_or_else(|| ModelIoError::Parse {
                    line: l,
                    msg: format!("bad token `{token}`"),
                })?;
                let bad = |msg: &str| ModelIoError::Parse {
                    line: l,
                    msg: msg.to_string(),
                };
                match key {
                    "class" => class = Some(value.parse::<u32>().map_err(|_| bad("bad class"))?),
                    "n" => n = Some(value.parse::<usize>().map_err(|_| bad("bad n"))?),
                    "idx" => idx = Some(value.parse::<usize>().map_err(|_| bad("bad idx"))?),
                    "contracted" => contracted = Some(value == "1"),
                    "v" => v = Some(split_f64(value, l)?),
                    "w" => w = Some(split_f64(value, l)?),
                    "cat" => {
                        cat = Some(if value == "-" {
                            CatPayload::None
                        } else if let Some(body) = value.strip_prefix("p:") {
                            let pairs = body
                                .split('|')
                                .filter(|s| !s.is_empty())
                                .map(|pair| {
                                    let (e, f) = pair.split_once('/').ok_or_else(|| {
                                        ModelIoError::Parse {
                                            line: l,
                                            msg: format!("bad pair `{pair}`"),
                                        }
                                    })?;
                                    let parse = |t: &str| -> Result<Option<u32>, ModelIoError> {
                                        if t == "_" {
                                            Ok(None)
                                        } else {
                                            t.parse::<u32>().map(Some).map_err(|_| {
                                                ModelIoError::Parse {
                                                    line: l,
                                                    msg: format!("bad bound `{t}`"),
                                                }
                                            })
                                        }
                                    };
                                    Ok(BoundPair {
                                        e: parse(e)?,
                                        f: parse(f)?,
                                    })
                                })
                                .collect::<Result<Vec<_>, ModelIoError>>()?;
                            CatPayload::Bounds(pairs)
                        } else if let Some(body) = value.strip_prefix("b:") {
                            let bits = body
                                .split(',')
                                .filter(|s| !s.is_empty())
                                .map(|t| {
                                    t.parse::<u128>().map_err(|_| ModelIoError::Parse {
                                        line: l,
                                        msg: format!("bad bits `{t}`"),
                                    })
                                })
                                .collect::<Result<Vec<_>, ModelIoError>>()?;
                            CatPayload::Bits(bits)
                        } else {
                            return Err(bad(&format!("unknown cat payload `{value}`")));
                        });
                    }
                    _ => return Err(bad(&format!("unknown key `{key}`"))),
                }
            }
            let missing = |msg: &str| ModelIoError::Parse {
                line: l,
                msg: format!("missing `{msg}`"),
            };
            boxes.push(Hyperbox {
                v: v.ok_or_else(|| missing("v"))?,
                w: w.ok_or_else(|| missing("w"))?,
                class: class.ok_or_else(|| missing("class"))?,
                cardinality: n.ok_or_else(|| missing("n"))?,
                creation_index: idx.ok_or_else(|| missing("idx"))?,
                contracted: contracted.ok_or_else(|| missing("contracted"))?,
                cat: cat.ok_or_else(|| missing("cat"))?,
            });
        }

        let kind = match kind_tag.as_str() {
            "onln" => ModelKind::Onln,
            "iol" => ModelKind::Iol,
            "agglo-sm" => ModelKind::AggloSm,
            "agglo-2" => ModelKind::Agglo2,
            "mixed-bits" => ModelKind::MixedBits,
            "mixed-bounds" => {
                let (l, table_line) = next("cattable")?;
                let dims_text = field(l, &table_line, "cattable")?;
                let n_dims: usize = dims_text
                    .strip_prefix("dims=")
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| ModelIoError::Parse {
                        line: l,
                        msg: "bad cattable header".into(),
                    })?;
                let mut dims = Vec::with_capacity(n_dims);
                for _ in 0..n_dims {
                    let (l, line) = next("dim")?;
                    let body = field(l, &line, "dim")?;
                    let mut values = None;
                    let mut present = None;
                    let mut h = None;
                    for token in body.split_whitespace() {
                        let (key, val) =
                            token.split_once('=').ok_or_else(|| ModelIoError::Parse {
                                line: l,
                                msg: format!("bad token `{token}`"),
                            })?;
                        match key {
                            "values" => {
                                values = Some(val.parse::<usize>().map_err(|_| {
                                    ModelIoError::Parse {
                                        line: l,
                                        msg: "bad values".into(),
                                    }
                                })?)
                            }
                            "present" => {
                                present = Some(
                                    val.split(',')
                                        .filter(|s| !s.is_empty())
                                        .map(|t| t == "1")
                                        .collect::<Vec<bool>>(),
                                )
                            }
                            "h" => h = Some(split_f64(val, l)?),
                            _ => {
                                return Err(ModelIoError::Parse {
                                    line: l,
                                    msg: format!("unknown key `{key}`"),
                                })
                            }
                        }
                    }
                    let values = values.ok_or_else(|| ModelIoError::Parse {
                        line: l,
                        msg: "missing values".into(),
                    })?;
                    dims.push(crate::mixed::DimTable {
                        values,
                        h: h.unwrap_or_default(),
                        present: present.unwrap_or_default(),
                    });
                }
                ModelKind::MixedBounds(CatDistTable { dims })
            }
            other => {
                return Err(ModelIoError::Parse {
                    line: 2,
                    msg: format!("unknown kind `{other}`"),
                })
            }
        };

        Ok(GfmmModel {
            boxes,
            gamma,
            theta,
            kind,
            tie_break,
        })
    }

    pub fn save<P: AsRef<Path>>(&self, path: P) -> Result<(), ModelIoError> {
        fs::write(path, self.to_text())?;
        Ok(())
    }

    pub fn load<P: AsRef<Path>>(path: P) -> Result<GfmmModel, ModelIoError> {
        Self::from_text(&fs::read_to_string(path)?)
    }
}
