//! CSV data behind each figure.

use std::f64::consts::{PI, TAU};
use std::io::Write;

use catqubit::coherent::overlap;
use catqubit::{
    concurrence, evolved_concurrence, flip_prob_single, initial_concurrence, transmit_encoded, ChannelParams, CodeSpec,
    RealAmplitude, TwoModeCatState,
};
use rayon::prelude::*;
use thiserror::Error;

use crate::config::linspace;
use crate::format::{g9, g9_opt};

pub const CODES: [i64; 5] = [1, 3, 5, 11, 51];
pub const DEFAULT_RESOLUTION: usize = 61;
const ALPHA_MAX: f64 = 3.0;

#[derive(Debug, Error, PartialEq)]
pub enum FigureError {
    #[error("unknown figure {0} (expected 1 to 5)")]
    UnknownFigure(i64),
    #[error("resolution must be at least 2, got {0}")]
    Resolution(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Figure {
    Overlap,
    FlipProbability,
    InitialConcurrence,
    ConcurrenceVsAlpha,
    ConcurrenceVsEta,
}

impl Figure {
    pub fn from_id(id: i64) -> Result<Self, FigureError> {
        Ok(match id {
            1 => Self::Overlap,
            2 => Self::FlipProbability,
            3 => Self::InitialConcurrence,
            4 => Self::ConcurrenceVsAlpha,
            5 => Self::ConcurrenceVsEta,
            other => return Err(FigureError::UnknownFigure(other)),
        })
    }
}

/// `linspace(0, 3, res)` with α = 1 inserted if the grid misses it.
fn alpha_axis(res: usize) -> Vec<f64> {
    let mut a = linspace(0.0, ALPHA_MAX, res);
    if !a.contains(&1.0) {
        a.push(1.0);
        a.sort_by(f64::total_cmp);
    }
    a
}

fn code_list() -> Vec<CodeSpec> {
    CODES.iter().map(|&n| CodeSpec::new(n).expect("odd")).collect()
}

fn header_columns(prefix: &str) -> String {
    CODES.iter().map(|n| format!("{prefix}_n{n}")).collect::<Vec<_>>().join(",")
}

/// Encoded concurrence and its factorised counterpart for each code.
fn code_columns(s: &TwoModeCatState, ch: ChannelParams) -> Vec<String> {
    let codes = code_list();
    let general = codes
        .iter()
        .map(|&c| transmit_encoded(s, ch, c).and_then(|rho| concurrence(&rho)).ok());
    let evolution = codes.iter().map(|&c| evolved_concurrence(s, ch, c).ok());
    general.chain(evolution).map(g9_opt).collect()
}

fn ch(e: f64) -> ChannelParams {
    ChannelParams::new(e).expect("figure transmissivity")
}

pub fn rows(fig: Figure, res: usize) -> Result<(String, Vec<String>), FigureError> {
    if res < 2 {
        return Err(FigureError::Resolution(res));
    }
    let out = match fig {
        Figure::Overlap => (
            "alpha,overlap".to_string(),
            alpha_axis(res)
                .into_iter()
                .map(|a| format!("{},{}", g9(a), g9(overlap(a, -a))))
                .collect(),
        ),
        Figure::FlipProbability => (
            "alpha,p_e_eta_2/3,p_e_eta_0.9".to_string(),
            alpha_axis(res)
                .into_iter()
                .map(|a| {
                    let amp = RealAmplitude::new(a).expect("non-negative");
                    format!(
                        "{},{},{}",
                        g9(a),
                        g9(flip_prob_single(amp, ch(2.0 / 3.0))),
                        g9(flip_prob_single(amp, ch(0.9)))
                    )
                })
                .collect(),
        ),
        Figure::InitialConcurrence => {
            let thetas: Vec<f64> = (0..res).map(|i| TAU * i as f64 / res as f64).collect();
            let cells: Vec<(f64, f64)> = linspace(0.0, ALPHA_MAX, res)
                .into_iter()
                .flat_map(|a| thetas.iter().map(move |&t| (a, t)))
                .collect();
            (
                "alpha,theta,C".to_string(),
                cells
                    .par_iter()
                    .map(|&(a, t)| {
                        let c = TwoModeCatState::symmetric(a, 0.5, t)
                            .and_then(|s| initial_concurrence(&s))
                            .ok();
                        format!("{},{},{}", g9(a), g9(t), g9_opt(c))
                    })
                    .collect(),
            )
        }
        Figure::ConcurrenceVsAlpha => {
            let panels = [("a", 2.0 / 3.0, 0.0), ("b", 2.0 / 3.0, PI), ("c", 0.9, 0.0), ("d", 0.9, PI)];
            let alphas = linspace(ALPHA_MAX / res as f64, ALPHA_MAX, res);
            let cells: Vec<(&str, f64, f64, f64)> = panels
                .iter()
                .flat_map(|&(p, e, t)| alphas.iter().map(move |&a| (p, e, t, a)))
                .collect();
            (
                format!("panel,eta,theta,alpha,{},{}", header_columns("C"), header_columns("C_evolution")),
                cells
                    .par_iter()
                    .map(|&(p, e, t, a)| {
                        let cols = TwoModeCatState::symmetric(a, 0.5, t)
                            .map(|s| code_columns(&s, ch(e)))
                            .unwrap_or_else(|_| vec![String::new(); 2 * CODES.len()]);
                        format!("{p},{},{},{},{}", g9(e), g9(t), g9(a), cols.join(","))
                    })
                    .collect(),
            )
        }
        Figure::ConcurrenceVsEta => {
            let s = TwoModeCatState::symmetric(1.3, 0.5, 0.0).expect("valid state");
            (
                format!("eta,{},{}", header_columns("C"), header_columns("C_evolution")),
                linspace(0.0, 1.0, res)
                    .par_iter()
                    .map(|&e| format!("{},{}", g9(e), code_columns(&s, ch(e)).join(",")))
                    .collect(),
            )
        }
    };
    Ok(out)
}

pub fn write_csv(header: &str, body: &[String], out: &mut impl Write) -> std::io::Result<()> {
    writeln!(out, "{header}")?;
    for line in body {
        writeln!(out, "{line}")?;
    }
    out.flush()
}
